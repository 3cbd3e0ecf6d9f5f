//! Monomial basis elements of gr(YSym) and gr(SSym) as words in their
//! `\`-irreducible factors.

use crate::combinatorics::{Permutation, PlanarBinaryTree};
use crate::error::{Error, Result};
use crate::lincomb::Basis;

use super::Word;

/// Objects with a unique factorization into `\`-irreducibles.
pub trait Decomposable: Basis {
    fn unit() -> Self;
    fn backslash(&self, other: &Self) -> Self;
    fn is_irreducible(&self) -> bool;
    fn irreducible_decomposition(&self) -> Vec<Self>;
}

impl Decomposable for PlanarBinaryTree {
    fn unit() -> Self {
        PlanarBinaryTree::Leaf
    }
    fn backslash(&self, other: &Self) -> Self {
        PlanarBinaryTree::backslash(self, other)
    }
    fn is_irreducible(&self) -> bool {
        PlanarBinaryTree::is_irreducible(self)
    }
    fn irreducible_decomposition(&self) -> Vec<Self> {
        PlanarBinaryTree::irreducible_decomposition(self)
    }
}

impl Decomposable for Permutation {
    fn unit() -> Self {
        Permutation::identity(0)
    }
    fn backslash(&self, other: &Self) -> Self {
        Permutation::backslash(self, other)
    }
    fn is_irreducible(&self) -> bool {
        Permutation::is_irreducible(self)
    }
    fn irreducible_decomposition(&self) -> Vec<Self> {
        Permutation::irreducible_decomposition(self)
    }
}

pub fn object_to_word<T: Decomposable>(x: &T) -> Word<T> {
    Word(x.irreducible_decomposition())
}

/// `x1 \ x2 \ ... \ xk`; every letter must be irreducible.
pub fn word_to_object<T: Decomposable>(w: &Word<T>) -> Result<T> {
    let mut acc = T::unit();
    for l in w.letters() {
        if !l.is_irreducible() {
            return Err(Error::ReducibleLetter(l.encode()));
        }
        acc = acc.backslash(l);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn permutation_words() {
        assert_eq!(object_to_word(&p("231")), Word(vec![p("12"), p("1")]));
        assert_eq!(
            object_to_word(&p("4231")),
            Word(vec![p("1"), p("12"), p("1")])
        );
        assert_eq!(object_to_word(&p("2413")), Word(vec![p("2413")]));
        assert_eq!(
            word_to_object(&Word(vec![p("12"), p("1")])).unwrap(),
            p("231")
        );
        assert_eq!(
            word_to_object(&Word(vec![p("12"), p("1"), p("1")])).unwrap(),
            p("3421")
        );
        assert!(matches!(
            word_to_object(&Word(vec![p("21")])),
            Err(Error::ReducibleLetter(_))
        ));
    }

    #[test]
    fn round_trips() {
        for n in 0..=6 {
            for w in Permutation::all(n) {
                assert_eq!(word_to_object(&object_to_word(&w)).unwrap(), w);
            }
            for t in crate::combinatorics::planar_binary_trees(n) {
                assert_eq!(word_to_object(&object_to_word(&t)).unwrap(), t);
            }
        }
    }
}
