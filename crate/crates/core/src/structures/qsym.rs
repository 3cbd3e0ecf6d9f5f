use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{sort_canonical, DegreeCaps};
use crate::error::{Error, Result};
use crate::lincomb::{Basis, LinComb, PairComb, Rational};

use super::{AlgebraId, HopfAlgebra};

/// A composition `(a1,...,ak)` of positive parts, indexing the monomial
/// quasisymmetric function `M_α`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!(
                "composition parts must be positive: {parts:?}"
            )));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All compositions of `n`.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition(Vec::new())];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for rest in Composition::all(n - first) {
                let mut v = vec![first];
                v.extend(rest.0);
                out.push(Composition(v));
            }
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let syntax = |message: &str| Error::Syntax {
            kind: "composition",
            position: 0,
            message: message.into(),
        };
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| syntax("expected '(' parts ')'"))?;
        if inner.trim().is_empty() {
            return Ok(Composition(Vec::new()));
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| syntax("parts must be integers"))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl Basis for Composition {
    fn encode(&self) -> String {
        self.to_string()
    }
}

/// Quasi-shuffle: `a·u ⋆ b·v = a(u ⋆ b·v) + b(a·u ⋆ v) + (a+b)(u ⋆ v)`.
pub fn quasi_shuffle(u: &Composition, v: &Composition) -> LinComb<Composition> {
    fn go(u: &[usize], v: &[usize], prefix: &mut Vec<usize>, out: &mut LinComb<Composition>) {
        if u.is_empty() || v.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            out.add_term(Composition(w), Rational::one());
            return;
        }
        prefix.push(u[0]);
        go(&u[1..], v, prefix, out);
        prefix.pop();
        prefix.push(v[0]);
        go(u, &v[1..], prefix, out);
        prefix.pop();
        prefix.push(u[0] + v[0]);
        go(&u[1..], &v[1..], prefix, out);
        prefix.pop();
    }
    let mut out = LinComb::zero();
    go(&u.0, &v.0, &mut Vec::new(), &mut out);
    out
}

/// Quasisymmetric functions in the monomial basis.
#[derive(Clone, Debug, Default)]
pub struct QSym {
    pub caps: DegreeCaps,
}

impl HopfAlgebra for QSym {
    type Basis = Composition;

    fn id(&self) -> AlgebraId {
        AlgebraId::QSym
    }

    fn one(&self) -> Composition {
        Composition(Vec::new())
    }

    fn degree(&self, x: &Composition) -> usize {
        x.size()
    }

    fn product(&self, x: &Composition, y: &Composition) -> LinComb<Composition> {
        quasi_shuffle(x, y)
    }

    fn coproduct(&self, x: &Composition) -> PairComb<Composition> {
        let mut out = LinComb::zero();
        for i in 0..=x.0.len() {
            out.add_term(
                (
                    Composition(x.0[..i].to_vec()),
                    Composition(x.0[i..].to_vec()),
                ),
                Rational::one(),
            );
        }
        out
    }

    fn basis(&self, degree: usize) -> Result<Vec<Composition>> {
        if degree > self.caps.trees {
            return Err(Error::DegreeCap {
                what: "compositions",
                requested: degree,
                cap: self.caps.trees,
            });
        }
        let mut v = Composition::all(degree);
        sort_canonical(&mut v);
        Ok(v)
    }

    fn parse_basis(&self, text: &str) -> Result<Composition> {
        text.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn two_part_identity() {
        let got = quasi_shuffle(&c("(1)"), &c("(2)"));
        assert_eq!(got.to_string(), "1*(1,2) + 1*(2,1) + 1*(3)");
        let got = quasi_shuffle(&c("(2)"), &c("(2)"));
        assert_eq!(got.to_string(), "2*(2,2) + 1*(4)");
    }

    #[test]
    fn longer_quasi_shuffle() {
        // (1) ⋆ (1,1) = 3(1,1,1) + (2,1) + (1,2)
        let got = quasi_shuffle(&c("(1)"), &c("(1,1)"));
        assert_eq!(got.to_string(), "3*(1,1,1) + 1*(1,2) + 1*(2,1)");
    }

    #[test]
    fn compositions_are_counted() {
        let q = QSym::default();
        let counts: Vec<usize> = (0..=6).map(|n| q.basis(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 8, 16, 32]);
    }

    #[test]
    fn parse_errors() {
        assert!("(0,1)".parse::<Composition>().is_err());
        assert!("1,2".parse::<Composition>().is_err());
        assert_eq!(c("()").size(), 0);
        assert_eq!(c("( 1, 2 )").to_string(), "(1,2)");
    }
}
