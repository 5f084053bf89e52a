use serde::Deserialize;

use super::{parse_polynomial, Chart, ChartData, ExactPolynomial, FiltrationStep, Ideal};
use crate::error::{Error, Result};

const SHIPPED: &str = include_str!("../../data/ideals.toml");

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CorpusFile {
    schema_version: u32,
    charts: Vec<ChartEntry>,
    ideals: Vec<IdealEntry>,
    steps: Vec<StepEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChartEntry {
    chart: String,
    point: String,
    pivots: [i32; 3],
    columns: [i32; 4],
    relations: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealEntry {
    name: String,
    chart: String,
    generators: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StepEntry {
    curve: String,
    subcurve: String,
    generator: String,
    sheaf: String,
    subsheaf: String,
    component: String,
}

/// Charts, ideals and filtration steps.
#[derive(Debug, Clone)]
pub struct IdealCorpus {
    pub charts: Vec<ChartData>,
    pub ideals: Vec<Ideal>,
    pub steps: Vec<FiltrationStep>,
}

fn parse_all(gens: &[String], chart: Chart) -> Result<Vec<ExactPolynomial>> {
    gens.iter().map(|g| parse_polynomial(g, chart)).collect()
}

impl IdealCorpus {
    /// The corpus shipped in `data/ideals.toml`.
    pub fn builtin() -> Self {
        Self::from_toml(SHIPPED).expect("shipped ideal corpus is valid")
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let file: CorpusFile = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.schema_version != 1 {
            return Err(Error::Parse(format!(
                "unsupported schema_version {}",
                file.schema_version
            )));
        }
        let charts = file
            .charts
            .iter()
            .map(|c| {
                let chart: Chart = c.chart.parse()?;
                Ok(ChartData {
                    chart,
                    point: c.point.parse()?,
                    pivots: c.pivots,
                    columns: c.columns,
                    relations: parse_all(&c.relations, chart)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let ideals = file
            .ideals
            .iter()
            .map(|i| {
                let chart: Chart = i.chart.parse()?;
                Ok(Ideal::new(&i.name, chart, parse_all(&i.generators, chart)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut corpus = Self {
            charts,
            ideals,
            steps: Vec::new(),
        };
        for s in &file.steps {
            let big = corpus.ideal(&s.curve)?;
            let small = corpus.ideal(&s.subcurve)?;
            if big.chart != small.chart {
                return Err(Error::Parse(format!(
                    "{} and {} live on different charts",
                    s.curve, s.subcurve
                )));
            }
            let generator = parse_polynomial(&s.generator, big.chart)?;
            corpus.steps.push(FiltrationStep {
                curve: s.curve.clone(),
                subcurve: s.subcurve.clone(),
                generator,
                sheaf: s.sheaf.clone(),
                subsheaf: s.subsheaf.clone(),
                component: s.component.parse()?,
            });
        }
        Ok(corpus)
    }

    pub fn chart(&self, chart: Chart) -> Result<&ChartData> {
        self.charts
            .iter()
            .find(|c| c.chart == chart)
            .ok_or_else(|| Error::UnknownLabel(chart.to_string()))
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal> {
        self.ideals
            .iter()
            .find(|i| i.name == name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    /// Copy with the quotient generator of the step ending at `curve` replaced.
    pub fn with_step_generator(&self, curve: &str, generator: &str) -> Result<Self> {
        let mut out = self.clone();
        let chart = out.ideal(curve)?.chart;
        let step = out
            .steps
            .iter_mut()
            .find(|s| s.curve == curve)
            .ok_or_else(|| Error::UnknownLabel(curve.to_string()))?;
        step.generator = parse_polynomial(generator, chart)?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_corpus_loads() {
        let c = IdealCorpus::builtin();
        assert_eq!(c.charts.len(), 2);
        assert!(c.charts.iter().all(|c| c.relations.len() == 9));
        let sizes: Vec<_> = c
            .ideals
            .iter()
            .map(|i| (i.name.as_str(), i.generators.len()))
            .collect();
        assert_eq!(
            sizes,
            [
                ("D1", 11),
                ("D2", 11),
                ("D3", 12),
                ("D4", 12),
                ("Q", 11),
                ("LQ", 11),
                ("C", 12)
            ]
        );
        assert_eq!(c.steps.len(), 5);
    }

    #[test]
    fn rejects_cross_chart_steps_and_bad_variables() {
        let bad = SHIPPED.replacen("subcurve = \"D1\"", "subcurve = \"Q\"", 1);
        assert!(IdealCorpus::from_toml(&bad).is_err());
        let bad = SHIPPED.replacen("\"a1\", \"a2\"", "\"b1\", \"a2\"", 1);
        assert!(IdealCorpus::from_toml(&bad).is_err());
    }
}
