use std::collections::hash_map::{self, Entry};
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// A basis object of some graded vector space.
///
/// The canonical string is the object's identity for printing and ordering:
/// two objects are equal exactly when their encodings are equal, and every
/// printed linear combination lists its terms in encoding order.
pub trait Basis: Clone + Eq + Hash + fmt::Debug + Send + Sync {
    fn encode(&self) -> String;
}

impl<A: Basis, B: Basis> Basis for (A, B) {
    fn encode(&self) -> String {
        format!("{} ⊗ {}", self.0.encode(), self.1.encode())
    }
}

/// Basis element of an iterated tensor power `B ⊗ B ⊗ ... ⊗ B`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TensorPower<B>(pub Vec<B>);

impl<B: Basis> Basis for TensorPower<B> {
    fn encode(&self) -> String {
        self.0
            .iter()
            .map(Basis::encode)
            .collect::<Vec<_>>()
            .join(" ⊗ ")
    }
}

/// Finite formal linear combination of basis objects with rational
/// coefficients. No stored coefficient is ever zero.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<B: Basis> {
    terms: HashMap<B, Rational>,
}

/// Element of the tensor square.
pub type PairComb<B> = LinComb<(B, B)>;

/// Element of an iterated tensor power.
pub type TensorComb<B> = LinComb<TensorPower<B>>;

impl<B: Basis> Default for LinComb<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Basis> LinComb<B> {
    pub fn zero() -> Self {
        LinComb {
            terms: HashMap::new(),
        }
    }

    /// The combination `1·b`.
    pub fn basis(b: B) -> Self {
        Self::term(Rational::one(), b)
    }

    pub fn term(coeff: Rational, b: B) -> Self {
        let mut lc = Self::zero();
        lc.add_term(b, coeff);
        lc
    }

    pub fn from_terms<I: IntoIterator<Item = (B, Rational)>>(terms: I) -> Self {
        let mut lc = Self::zero();
        for (b, c) in terms {
            lc.add_term(b, c);
        }
        lc
    }

    /// Adds `coeff·b` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, b: B, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, coeff: &Rational, other: &LinComb<B>) {
        if coeff.is_zero() {
            return;
        }
        for (b, c) in &other.terms {
            self.add_term(b.clone(), coeff * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn contains(&self, b: &B) -> bool {
        self.terms.contains_key(b)
    }

    pub fn iter(&self) -> hash_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    /// Terms in canonical (encoding) order.
    pub fn sorted_terms(&self) -> Vec<(&B, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(b, c)| (b.encode(), b, c)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter().map(|(_, b, c)| (b, c)).collect()
    }

    pub fn add(&self, other: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), other);
        out
    }

    pub fn sub(&self, other: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(&Rational::from_integer(-1), other);
        out
    }

    pub fn scale(&self, c: &Rational) -> LinComb<B> {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), c * x)).collect(),
        }
    }

    pub fn neg(&self) -> LinComb<B> {
        self.scale(&Rational::from_integer(-1))
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> LinComb<B> {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    /// `Σ c·f(b)` for a total rule `f`.
    pub fn map_linear<C: Basis>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b));
        }
        out
    }

    /// `Σ c·f(b)` for a partial rule; fails naming the first basis object
    /// (in canonical order) on which `f` has no value.
    pub fn extend_linearly<C: Basis>(
        &self,
        mut f: impl FnMut(&B) -> Option<LinComb<C>>,
    ) -> Result<LinComb<C>> {
        let mut out = LinComb::zero();
        for (b, c) in self.sorted_terms() {
            let image = f(b).ok_or_else(|| Error::Undefined(b.encode()))?;
            out.add_scaled(c, &image);
        }
        Ok(out)
    }

    /// All pairwise products of terms, as an element of the tensor square.
    pub fn tensor<C: Basis>(&self, other: &LinComb<C>) -> LinComb<(B, C)> {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term((a.clone(), b.clone()), x * y);
            }
        }
        out
    }

    /// JSON form: `[{"coeff":"-1/2","basis":"<canonical string>"}, ...]`.
    pub fn to_json(&self) -> String {
        let terms: Vec<JsonTerm> = self
            .sorted_terms()
            .into_iter()
            .map(|(b, c)| JsonTerm {
                coeff: c.to_string(),
                basis: b.encode(),
            })
            .collect();
        serde_json::to_string(&terms).expect("string-only JSON cannot fail to serialize")
    }

    pub fn from_json(text: &str, parse: impl Fn(&str) -> Result<B>) -> Result<Self> {
        let terms: Vec<JsonTerm> = serde_json::from_str(text)
            .map_err(|e| Error::Invalid(format!("bad LinComb JSON: {e}")))?;
        let mut out = LinComb::zero();
        for t in terms {
            out.add_term(parse(&t.basis)?, t.coeff.parse()?);
        }
        Ok(out)
    }
}

impl<A: Basis, B: Basis> LinComb<(A, B)> {
    pub fn swap(&self) -> LinComb<(B, A)> {
        LinComb::from_terms(
            self.iter()
                .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())),
        )
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    coeff: String,
    basis: String,
}

impl<B: Basis> fmt::Display for LinComb<B> {
    /// `c1*B1 + c2*B2` in canonical basis order; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", c, b.encode())?;
        }
        Ok(())
    }
}

impl<B: Basis> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<B: Basis> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[derive(Clone, PartialEq, Eq, Hash, Debug)]
    struct Sym(&'static str);

    impl Basis for Sym {
        fn encode(&self) -> String {
            self.0.to_string()
        }
    }

    fn lc(terms: &[(&'static str, i64, i64)]) -> LinComb<Sym> {
        terms
            .iter()
            .map(|&(s, n, d)| (Sym(s), Rational::new(n, d)))
            .collect()
    }

    #[test]
    fn add_examples() {
        assert!(lc(&[("x", 1, 1)]).add(&lc(&[("x", -1, 1)])).is_zero());
        assert_eq!(
            lc(&[("x", 1, 2)]).add(&lc(&[("x", 1, 2), ("y", 1, 1)])),
            lc(&[("x", 1, 1), ("y", 1, 1)])
        );
        assert_eq!(LinComb::zero().add(&lc(&[("y", 3, 1)])), lc(&[("y", 3, 1)]));
    }

    #[test]
    fn scale_examples() {
        assert!(lc(&[("x", 5, 1)]).scale(&Rational::zero()).is_zero());
        assert_eq!(
            lc(&[("x", 2, 1)]).scale(&Rational::new(-1, 2)),
            lc(&[("x", -1, 1)])
        );
        let a = lc(&[("x", 3, 7), ("y", -2, 1)]);
        assert_eq!(a.scale(&Rational::one()), a);
    }

    #[test]
    fn extend_linearly_examples() {
        let a = lc(&[("x", 3, 7), ("y", -2, 1)]);
        assert_eq!(
            a.extend_linearly(|b| Some(LinComb::basis(b.clone())))
                .unwrap(),
            a
        );

        let f = |b: &Sym| match b.0 {
            "x" => Some(lc(&[("u", 1, 1), ("v", 1, 1)])),
            "y" => Some(lc(&[("u", -1, 1)])),
            _ => None,
        };
        assert_eq!(
            lc(&[("x", 2, 1)]).extend_linearly(f).unwrap(),
            lc(&[("u", 2, 1), ("v", 2, 1)])
        );
        assert!(lc(&[("x", 1, 1), ("y", 1, 1)])
            .extend_linearly(|b| f(b).map(|l| l.filter(|s| s.0 == "u")))
            .unwrap()
            .is_zero());

        let err = lc(&[("z", 1, 1)]).extend_linearly(f).unwrap_err();
        assert_eq!(err, Error::Undefined("z".into()));
    }

    #[test]
    fn tensor_examples() {
        let t = lc(&[("x", 1, 1)]).tensor(&lc(&[("y", 1, 1)]));
        assert_eq!(t.coeff(&(Sym("x"), Sym("y"))), Rational::one());
        let t = lc(&[("x", 2, 1)]).tensor(&lc(&[("y", 1, 2)]));
        assert_eq!(t.len(), 1);
        assert_eq!(t.coeff(&(Sym("x"), Sym("y"))), Rational::one());
        assert!(LinComb::<Sym>::zero().tensor(&lc(&[("y", 1, 1)])).is_zero());
    }

    #[test]
    fn text_and_json_formats() {
        let a = lc(&[("y", 1, 1), ("x", -1, 2)]);
        assert_eq!(a.to_string(), "-1/2*x + 1*y");
        assert_eq!(
            a.to_json(),
            r#"[{"coeff":"-1/2","basis":"x"},{"coeff":"1","basis":"y"}]"#
        );
        let back = LinComb::from_json(&a.to_json(), |s| match s {
            "x" => Ok(Sym("x")),
            "y" => Ok(Sym("y")),
            _ => Err(Error::Invalid(s.into())),
        })
        .unwrap();
        assert_eq!(back, a);
        assert_eq!(LinComb::<Sym>::zero().to_string(), "0");
    }

    fn arb_comb() -> impl Strategy<Value = LinComb<Sym>> {
        let names = prop::sample::select(vec!["a", "b", "c", "d"]);
        prop::collection::vec((names, -6i64..6, 1i64..4), 0..6).prop_map(|v| {
            v.into_iter()
                .map(|(s, n, d)| (Sym(s), Rational::new(n, d)))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn vector_space_laws(a in arb_comb(), b in arb_comb(), c in arb_comb(),
                             s in -5i64..5, t in 1i64..5) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert!(a.sub(&a).is_zero());
            let r = Rational::new(s, t);
            prop_assert_eq!(a.add(&b).scale(&r), a.scale(&r).add(&b.scale(&r)));
            prop_assert!(a.iter().all(|(_, c)| !c.is_zero()));
        }
    }
}
