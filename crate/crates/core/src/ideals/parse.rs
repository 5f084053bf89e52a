//! ASCII polynomial grammar.
//!
//! ```text
//! poly   := ["+" | "-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := int ["/" int] | var ["^" int]
//! var    := prefix int        (prefix is the chart letter, index 1..12)
//! ```
//!
//! Whitespace is ignored. Printing with [`ExactPolynomial::display`] and
//! parsing again is the identity.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{ExactPolynomial, Monomial, NVARS};
use super::Chart;
use crate::error::{Error, Result};
use crate::ring::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Var(char, usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let digits = |i: &mut usize| {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect::<String>()
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' | '-' | '*' | '^' | '/' => {
                out.push(match c {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    _ => Token::Slash,
                });
                i += 1;
            }
            '0'..='9' => {
                let n = digits(&mut i);
                out.push(Token::Int(n.parse().expect("digits parse")));
            }
            'a'..='z' => {
                i += 1;
                let n = digits(&mut i);
                let index: usize = n
                    .parse()
                    .map_err(|_| Error::Parse(format!("variable `{c}` needs an index")))?;
                out.push(Token::Var(c, index));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}` in `{s}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    chart: Chart,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.next() {
            Some(Token::Int(n)) => Ok(n.clone()),
            other => Err(Error::Parse(format!("expected integer, found {other:?}"))),
        }
    }

    fn factor(&mut self) -> Result<(Rational, Monomial)> {
        match self.next().cloned() {
            Some(Token::Int(p)) => {
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    let q = self.int()?;
                    if q.is_zero() {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    Ok((Rational::new(p, q), Monomial::one()))
                } else {
                    Ok((Rational::from_integer(p), Monomial::one()))
                }
            }
            Some(Token::Var(prefix, index)) => {
                if prefix != self.chart.prefix() || !(1..=NVARS).contains(&index) {
                    return Err(Error::Parse(format!(
                        "`{prefix}{index}` is not a variable of chart {}",
                        self.chart
                    )));
                }
                let mut e = [0u16; NVARS];
                e[index - 1] = 1;
                if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    let power = self.int()?;
                    e[index - 1] =
                        u16::try_from(power).map_err(|_| Error::Parse("exponent out of range".into()))?;
                }
                Ok((Rational::one(), Monomial::from_exponents(e)))
            }
            other => Err(Error::Parse(format!("expected a factor, found {other:?}"))),
        }
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        let (mut c, mut m) = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            let (c2, m2) = self.factor()?;
            c *= c2;
            m = m.mul(&m2);
        }
        Ok((c, m))
    }

    fn poly(&mut self) -> Result<ExactPolynomial> {
        let mut terms = Vec::new();
        let mut sign = Rational::one();
        match self.peek() {
            Some(Token::Minus) => {
                sign = -sign;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let (c, m) = self.term()?;
            terms.push((m, c * &sign));
            sign = match self.next() {
                None => break,
                Some(Token::Plus) => Rational::one(),
                Some(Token::Minus) => -Rational::one(),
                Some(other) => return Err(Error::Parse(format!("unexpected {other:?}"))),
            };
        }
        Ok(ExactPolynomial::from_terms(terms))
    }
}

/// Parses a polynomial in the variables of `chart`.
pub fn parse_polynomial(s: &str, chart: Chart) -> Result<ExactPolynomial> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    Parser {
        tokens: &tokens,
        pos: 0,
        chart,
    }
    .poly()
}
