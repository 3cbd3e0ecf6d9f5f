use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::{LinComb, Rational};
use crate::error::{Error, Result};
use crate::structures::HopfAlgebra;

type Action<'a, B> = Arc<dyn Fn(&B) -> LinComb<B> + Send + Sync + 'a>;

/// A linear endomorphism of a graded Hopf algebra, given by its value on
/// each basis element. Values are computed on demand and memoized.
pub struct GradedEndo<'a, H: HopfAlgebra> {
    algebra: &'a H,
    action: Action<'a, H::Basis>,
    memo: Arc<RwLock<HashMap<H::Basis, LinComb<H::Basis>>>>,
}

impl<'a, H: HopfAlgebra> Clone for GradedEndo<'a, H> {
    fn clone(&self) -> Self {
        GradedEndo {
            algebra: self.algebra,
            action: self.action.clone(),
            memo: self.memo.clone(),
        }
    }
}

impl<'a, H: HopfAlgebra> GradedEndo<'a, H> {
    pub fn from_fn(
        algebra: &'a H,
        f: impl Fn(&H::Basis) -> LinComb<H::Basis> + Send + Sync + 'a,
    ) -> Self {
        GradedEndo {
            algebra,
            action: Arc::new(f),
            memo: Arc::new(RwLock::new(HashMap::new())),
        }
    }

    pub fn identity(algebra: &'a H) -> Self {
        Self::from_fn(algebra, |x| LinComb::basis(x.clone()))
    }

    /// `u ∘ ε`, the unit for convolution.
    pub fn unit_counit(algebra: &'a H) -> Self {
        Self::from_fn(algebra, move |x| algebra.unit().scale(&algebra.counit(x)))
    }

    /// `id − u∘ε`: projection onto the positive-degree part.
    pub fn id_minus_one(algebra: &'a H) -> Self {
        Self::from_fn(algebra, move |x| {
            if algebra.degree(x) == 0 {
                LinComb::zero()
            } else {
                LinComb::basis(x.clone())
            }
        })
    }

    pub fn algebra(&self) -> &'a H {
        self.algebra
    }

    pub fn apply_basis(&self, x: &H::Basis) -> LinComb<H::Basis> {
        if let Some(v) = self.memo.read().expect("memo lock").get(x) {
            return v.clone();
        }
        let v = (self.action)(x);
        // a racing insert stores the same value
        self.memo
            .write()
            .expect("memo lock")
            .insert(x.clone(), v.clone());
        v
    }

    pub fn apply(&self, a: &LinComb<H::Basis>) -> LinComb<H::Basis> {
        a.map_linear(|x| self.apply_basis(x))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (f, g) = (self.clone(), other.clone());
        Self::from_fn(self.algebra, move |x| {
            f.apply_basis(x).add(&g.apply_basis(x))
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (f, g) = (self.clone(), other.clone());
        Self::from_fn(self.algebra, move |x| {
            f.apply_basis(x).sub(&g.apply_basis(x))
        })
    }

    pub fn scale(&self, c: Rational) -> Self {
        let f = self.clone();
        Self::from_fn(self.algebra, move |x| f.apply_basis(x).scale(&c))
    }

    /// `(f * g)(x) = m ∘ (f ⊗ g) ∘ Δ(x)`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        let (left, right) = (self.algebra.id(), other.algebra.id());
        if left != right {
            return Err(Error::AlgebraMismatch {
                left: left.to_string(),
                right: right.to_string(),
            });
        }
        let (f, g) = (self.clone(), other.clone());
        let h = self.algebra;
        Ok(Self::from_fn(h, move |x| {
            let mut out = LinComb::zero();
            for ((a, b), c) in h.coproduct(x).iter() {
                let fa = f.apply_basis(a);
                if fa.is_zero() {
                    continue;
                }
                let gb = g.apply_basis(b);
                if gb.is_zero() {
                    continue;
                }
                out.add_scaled(c, &h.mul(&fa, &gb));
            }
            out
        }))
    }

    /// `f^{*n}`, with `f^{*0} = u∘ε`.
    pub fn power(&self, n: usize) -> Self {
        let mut acc = Self::unit_counit(self.algebra);
        for _ in 0..n {
            acc = acc.convolve(self).expect("same algebra");
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{phi, Permutation};
    use crate::structures::HeapGL;

    #[test]
    fn convolution_unit() {
        let h = HeapGL::default();
        let id = GradedEndo::identity(&h);
        let u = GradedEndo::unit_counit(&h);
        let left = u.convolve(&id).unwrap();
        let right = id.convolve(&u).unwrap();
        for n in 0..=3 {
            for x in h.basis(n).unwrap() {
                assert_eq!(left.apply_basis(&x), LinComb::basis(x.clone()));
                assert_eq!(right.apply_basis(&x), LinComb::basis(x.clone()));
            }
        }
    }

    #[test]
    fn square_of_projection_kills_primitives() {
        let h = HeapGL::default();
        let p = GradedEndo::id_minus_one(&h).power(2);
        let x = phi(&"1".parse::<Permutation>().unwrap());
        assert!(p.apply_basis(&x).is_zero());
    }

    #[test]
    fn cube_vanishes_in_degree_two() {
        let h = HeapGL::default();
        let p = GradedEndo::id_minus_one(&h).power(3);
        for x in h.basis(2).unwrap() {
            assert!(p.apply_basis(&x).is_zero());
        }
    }

    #[test]
    fn convolution_is_associative() {
        let h = HeapGL::default();
        let id = GradedEndo::identity(&h);
        let q = GradedEndo::id_minus_one(&h).scale(Rational::new(1, 2));
        let r = id.sub(&q);
        let left = id.convolve(&q).unwrap().convolve(&r).unwrap();
        let right = id.convolve(&q.convolve(&r).unwrap()).unwrap();
        for n in 0..=4 {
            for x in h.basis(n).unwrap() {
                assert_eq!(left.apply_basis(&x), right.apply_basis(&x));
            }
        }
    }
}
