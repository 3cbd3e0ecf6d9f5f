//! The concrete Hopf algebras and the trait they share.
//!
//! Every algebra here is graded connected: its degree-0 part is spanned by a
//! single unit basis element, so the counit is 1 on that element and 0 on
//! every other basis element.

mod axioms;
mod gr;
mod grossman_larson;
mod qsym;
mod word;

use std::fmt;
use std::str::FromStr;

pub use axioms::{verify_axioms, verify_cocommutative, verify_commutative, AxiomOptions};
pub use gr::{object_to_word, word_to_object, Decomposable};
pub use grossman_larson::{GraftableTree, GrossmanLarson, HeapGL, OrderedGL};
pub use qsym::{quasi_shuffle, Composition, QSym};
pub use word::{
    concatenate, deconcatenate, deshuffle, shuffle, Alphabet, IrreduciblePbts, IrreduciblePerms,
    Shuffle, Tensor, Weights, Word,
};

use crate::error::{Error, Result};
use crate::lincomb::{Basis, LinComb, PairComb, Rational};

/// Alphabets used for the word algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlphabetId {
    /// `\`-irreducible planar binary trees, weighted by degree.
    IrreduciblePbt,
    /// `\`-irreducible permutations, weighted by length.
    IrreduciblePerm,
    /// One letter `n` of weight `n` for every `n >= 1`.
    Weights,
}

/// Names of the algebras. The gr realizations are by definition the shuffle
/// algebras on the irreducible alphabets, and their graded duals the tensor
/// algebras on the same alphabets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraId {
    Ho,
    Hho,
    Shuffle(AlphabetId),
    Tensor(AlphabetId),
    QSym,
}

impl AlgebraId {
    pub const GR_YSYM: AlgebraId = AlgebraId::Shuffle(AlphabetId::IrreduciblePbt);
    pub const GR_SSYM: AlgebraId = AlgebraId::Shuffle(AlphabetId::IrreduciblePerm);
    pub const GR_YSYM_DUAL: AlgebraId = AlgebraId::Tensor(AlphabetId::IrreduciblePbt);
    pub const GR_SSYM_DUAL: AlgebraId = AlgebraId::Tensor(AlphabetId::IrreduciblePerm);
    pub const SH: AlgebraId = AlgebraId::Shuffle(AlphabetId::Weights);
    pub const TENSOR: AlgebraId = AlgebraId::Tensor(AlphabetId::Weights);

    pub const ALL: [AlgebraId; 9] = [
        AlgebraId::Ho,
        AlgebraId::Hho,
        AlgebraId::GR_YSYM,
        AlgebraId::GR_SSYM,
        AlgebraId::GR_YSYM_DUAL,
        AlgebraId::GR_SSYM_DUAL,
        AlgebraId::QSym,
        AlgebraId::SH,
        AlgebraId::TENSOR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::Ho => "HO",
            AlgebraId::Hho => "HHO",
            AlgebraId::Shuffle(AlphabetId::IrreduciblePbt) => "GR_YSYM",
            AlgebraId::Shuffle(AlphabetId::IrreduciblePerm) => "GR_SSYM",
            AlgebraId::Shuffle(AlphabetId::Weights) => "SH",
            AlgebraId::Tensor(AlphabetId::IrreduciblePbt) => "GR_YSYM_DUAL",
            AlgebraId::Tensor(AlphabetId::IrreduciblePerm) => "GR_SSYM_DUAL",
            AlgebraId::Tensor(AlphabetId::Weights) => "TENSOR",
            AlgebraId::QSym => "QSYM",
        }
    }

    pub fn is_cocommutative(self) -> bool {
        matches!(self, AlgebraId::Ho | AlgebraId::Hho | AlgebraId::Tensor(_))
    }

    pub fn is_commutative(self) -> bool {
        matches!(self, AlgebraId::Shuffle(_) | AlgebraId::QSym)
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraId::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown algebra '{s}'")))
    }
}

/// A graded connected Hopf algebra given on a basis.
pub trait HopfAlgebra: Send + Sync {
    type Basis: Basis;

    fn id(&self) -> AlgebraId;

    /// The unit, also the only basis element of degree 0.
    fn one(&self) -> Self::Basis;

    fn degree(&self, x: &Self::Basis) -> usize;

    fn product(&self, x: &Self::Basis, y: &Self::Basis) -> LinComb<Self::Basis>;

    fn coproduct(&self, x: &Self::Basis) -> PairComb<Self::Basis>;

    /// All basis elements of the given degree, in canonical order.
    fn basis(&self, degree: usize) -> Result<Vec<Self::Basis>>;

    /// Parses and validates a basis element from its canonical string.
    fn parse_basis(&self, text: &str) -> Result<Self::Basis>;

    fn counit(&self, x: &Self::Basis) -> Rational {
        if self.degree(x) == 0 {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    fn unit(&self) -> LinComb<Self::Basis> {
        LinComb::basis(self.one())
    }

    fn mul(&self, a: &LinComb<Self::Basis>, b: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        let mut out = LinComb::zero();
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                out.add_scaled(&(c * d), &self.product(x, y));
            }
        }
        out
    }

    fn comul(&self, a: &LinComb<Self::Basis>) -> PairComb<Self::Basis> {
        a.map_linear(|x| self.coproduct(x))
    }

    fn counit_lin(&self, a: &LinComb<Self::Basis>) -> Rational {
        let mut out = Rational::zero();
        for (x, c) in a.iter() {
            out += &(c * &self.counit(x));
        }
        out
    }

    /// Product in `H ⊗ H`: `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    fn mul_pairs(
        &self,
        p: &PairComb<Self::Basis>,
        q: &PairComb<Self::Basis>,
    ) -> PairComb<Self::Basis> {
        let mut out = LinComb::zero();
        for ((a, b), c) in p.iter() {
            for ((x, y), d) in q.iter() {
                let left = self.product(a, x);
                let right = self.product(b, y);
                out.add_scaled(&(c * d), &left.tensor(&right));
            }
        }
        out
    }

    /// Parses a LinComb JSON document over this algebra's basis.
    fn parse_lincomb_json(&self, text: &str) -> Result<LinComb<Self::Basis>> {
        LinComb::from_json(text, |s| self.parse_basis(s))
    }

    /// Degree of every term, or `None` for the zero element. Errors when
    /// the combination mixes degrees.
    fn homogeneous_degree(&self, a: &LinComb<Self::Basis>) -> Result<Option<usize>> {
        let mut deg = None;
        for (x, _) in a.iter() {
            let d = self.degree(x);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => {
                    return Err(Error::Invalid(format!("element mixes degrees {e} and {d}")))
                }
                _ => {}
            }
        }
        Ok(deg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in AlgebraId::ALL {
            assert_eq!(id.name().parse::<AlgebraId>().unwrap(), id);
        }
        assert!("YSYM".parse::<AlgebraId>().is_err());
    }
}
