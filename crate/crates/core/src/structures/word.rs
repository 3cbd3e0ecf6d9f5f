use std::fmt;

use crate::combinatorics::{
    irreducible_permutations, irreducible_planar_binary_trees, sort_canonical, DegreeCaps,
    ObjectKind, Permutation, PlanarBinaryTree,
};
use crate::error::{Error, Result};
use crate::lincomb::{Basis, LinComb, PairComb, Rational};

use super::{AlgebraId, AlphabetId, HopfAlgebra};

/// A word `x1 \ x2 \ ... \ xk` in the letters of an alphabet.
///
/// Canonical form: letters separated by `|` inside brackets, `[12|1]`;
/// the empty word is `[]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word<L>(pub Vec<L>);

impl<L> Word<L> {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: L) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[L] {
        &self.0
    }

    /// Number of letters.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<L: Clone> Word<L> {
    pub fn concat(&self, other: &Word<L>) -> Word<L> {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl<L: Basis> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            f.write_str(&l.encode())?;
        }
        f.write_str("]")
    }
}

impl<L: Basis> fmt::Debug for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<L: Basis> Basis for Word<L> {
    fn encode(&self) -> String {
        self.to_string()
    }
}

impl Basis for u32 {
    fn encode(&self) -> String {
        self.to_string()
    }
}

/// A graded set of letters.
pub trait Alphabet: Clone + Send + Sync {
    type Letter: Basis;

    fn id(&self) -> AlphabetId;

    fn weight(&self, letter: &Self::Letter) -> usize;

    /// All letters of the given weight, in canonical order.
    fn letters(&self, weight: usize) -> Result<Vec<Self::Letter>>;

    /// Largest weight that [`letters`](Self::letters) accepts.
    fn cap(&self) -> usize;

    fn parse_letter(&self, text: &str) -> Result<Self::Letter>;

    /// Parses `[a|b|...]`.
    fn parse_word(&self, text: &str) -> Result<Word<Self::Letter>> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Syntax {
                kind: "word",
                position: 0,
                message: "expected '[' letters separated by '|' ']'".into(),
            })?;
        if inner.trim().is_empty() {
            return Ok(Word::empty());
        }
        inner
            .split('|')
            .map(|part| self.parse_letter(part.trim()))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    fn word_weight(&self, w: &Word<Self::Letter>) -> usize {
        w.0.iter().map(|l| self.weight(l)).sum()
    }

    /// All words of total weight `n`, in canonical order.
    fn words(&self, n: usize) -> Result<Vec<Word<Self::Letter>>> {
        if n > self.cap() {
            return Err(Error::DegreeCap {
                what: "words",
                requested: n,
                cap: self.cap(),
            });
        }
        let letters: Vec<Vec<Self::Letter>> =
            (0..=n).map(|w| self.letters(w)).collect::<Result<_>>()?;
        let mut by_weight: Vec<Vec<Vec<Self::Letter>>> = vec![vec![Vec::new()]];
        for m in 1..=n {
            let mut ws = Vec::new();
            for first in 1..=m {
                for l in &letters[first] {
                    for rest in &by_weight[m - first] {
                        let mut w = Vec::with_capacity(rest.len() + 1);
                        w.push(l.clone());
                        w.extend(rest.iter().cloned());
                        ws.push(w);
                    }
                }
            }
            by_weight.push(ws);
        }
        let mut out: Vec<Word<Self::Letter>> =
            by_weight.swap_remove(n).into_iter().map(Word).collect();
        sort_canonical(&mut out);
        Ok(out)
    }
}

/// `\`-irreducible planar binary trees, weighted by degree.
#[derive(Clone, Debug, Default)]
pub struct IrreduciblePbts {
    pub caps: DegreeCaps,
}

impl Alphabet for IrreduciblePbts {
    type Letter = PlanarBinaryTree;

    fn id(&self) -> AlphabetId {
        AlphabetId::IrreduciblePbt
    }

    fn weight(&self, t: &PlanarBinaryTree) -> usize {
        t.degree()
    }

    fn letters(&self, weight: usize) -> Result<Vec<PlanarBinaryTree>> {
        self.caps.check(ObjectKind::IrreduciblePbt, weight)?;
        let mut v = irreducible_planar_binary_trees(weight);
        sort_canonical(&mut v);
        Ok(v)
    }

    fn cap(&self) -> usize {
        self.caps.trees
    }

    fn parse_letter(&self, text: &str) -> Result<PlanarBinaryTree> {
        let t: PlanarBinaryTree = text.parse()?;
        if !t.is_irreducible() {
            return Err(Error::ReducibleLetter(text.to_string()));
        }
        Ok(t)
    }
}

/// `\`-irreducible permutations (no global descent), weighted by length.
#[derive(Clone, Debug, Default)]
pub struct IrreduciblePerms {
    pub caps: DegreeCaps,
}

impl Alphabet for IrreduciblePerms {
    type Letter = Permutation;

    fn id(&self) -> AlphabetId {
        AlphabetId::IrreduciblePerm
    }

    fn weight(&self, w: &Permutation) -> usize {
        w.len()
    }

    fn letters(&self, weight: usize) -> Result<Vec<Permutation>> {
        self.caps.check(ObjectKind::IrreduciblePerm, weight)?;
        let mut v = irreducible_permutations(weight);
        sort_canonical(&mut v);
        Ok(v)
    }

    fn cap(&self) -> usize {
        self.caps.permutations
    }

    fn parse_letter(&self, text: &str) -> Result<Permutation> {
        let w: Permutation = text.parse()?;
        if !w.is_irreducible() {
            return Err(Error::ReducibleLetter(text.to_string()));
        }
        Ok(w)
    }
}

/// One letter `n` of weight `n` for each `n >= 1`.
#[derive(Clone, Debug, Default)]
pub struct Weights {
    pub caps: DegreeCaps,
}

impl Alphabet for Weights {
    type Letter = u32;

    fn id(&self) -> AlphabetId {
        AlphabetId::Weights
    }

    fn weight(&self, l: &u32) -> usize {
        *l as usize
    }

    fn letters(&self, weight: usize) -> Result<Vec<u32>> {
        Ok(if weight == 0 {
            Vec::new()
        } else {
            vec![weight as u32]
        })
    }

    fn cap(&self) -> usize {
        self.caps.trees
    }

    fn parse_letter(&self, text: &str) -> Result<u32> {
        match text.parse::<u32>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(Error::Syntax {
                kind: "letter",
                position: 0,
                message: format!("expected a positive integer, got '{text}'"),
            }),
        }
    }
}

/// Sum over all interleavings of `u` and `v`.
pub fn shuffle<L: Basis>(u: &Word<L>, v: &Word<L>) -> LinComb<Word<L>> {
    fn go<L: Basis>(u: &[L], v: &[L], prefix: &mut Vec<L>, out: &mut LinComb<Word<L>>) {
        if u.is_empty() || v.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            out.add_term(Word(w), Rational::one());
            return;
        }
        prefix.push(u[0].clone());
        go(&u[1..], v, prefix, out);
        prefix.pop();
        prefix.push(v[0].clone());
        go(u, &v[1..], prefix, out);
        prefix.pop();
    }
    let mut out = LinComb::zero();
    go(&u.0, &v.0, &mut Vec::new(), &mut out);
    out
}

pub fn concatenate<L: Basis>(u: &Word<L>, v: &Word<L>) -> LinComb<Word<L>> {
    LinComb::basis(u.concat(v))
}

/// `Σ_i w[..i] ⊗ w[i..]`.
pub fn deconcatenate<L: Basis>(w: &Word<L>) -> PairComb<Word<L>> {
    let mut out = LinComb::zero();
    for i in 0..=w.length() {
        out.add_term(
            (Word(w.0[..i].to_vec()), Word(w.0[i..].to_vec())),
            Rational::one(),
        );
    }
    out
}

/// `Σ_S w_S ⊗ w_{S^c}` over all subsets `S` of positions.
pub fn deshuffle<L: Basis>(w: &Word<L>) -> PairComb<Word<L>> {
    let k = w.length();
    assert!(k < 64, "word too long to deshuffle");
    let mut out = LinComb::zero();
    for mask in 0..(1u64 << k) {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, l) in w.0.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.push(l.clone());
            } else {
                b.push(l.clone());
            }
        }
        out.add_term((Word(a), Word(b)), Rational::one());
    }
    out
}

/// The shuffle Hopf algebra: shuffle product, deconcatenation coproduct.
#[derive(Clone, Debug, Default)]
pub struct Shuffle<A> {
    pub alphabet: A,
}

/// The tensor Hopf algebra: concatenation product, deshuffle coproduct.
#[derive(Clone, Debug, Default)]
pub struct Tensor<A> {
    pub alphabet: A,
}

impl<A: Alphabet> HopfAlgebra for Shuffle<A> {
    type Basis = Word<A::Letter>;

    fn id(&self) -> AlgebraId {
        AlgebraId::Shuffle(self.alphabet.id())
    }
    fn one(&self) -> Self::Basis {
        Word::empty()
    }
    fn degree(&self, x: &Self::Basis) -> usize {
        self.alphabet.word_weight(x)
    }
    fn product(&self, x: &Self::Basis, y: &Self::Basis) -> LinComb<Self::Basis> {
        shuffle(x, y)
    }
    fn coproduct(&self, x: &Self::Basis) -> PairComb<Self::Basis> {
        deconcatenate(x)
    }
    fn basis(&self, degree: usize) -> Result<Vec<Self::Basis>> {
        self.alphabet.words(degree)
    }
    fn parse_basis(&self, text: &str) -> Result<Self::Basis> {
        self.alphabet.parse_word(text)
    }
}

impl<A: Alphabet> HopfAlgebra for Tensor<A> {
    type Basis = Word<A::Letter>;

    fn id(&self) -> AlgebraId {
        AlgebraId::Tensor(self.alphabet.id())
    }
    fn one(&self) -> Self::Basis {
        Word::empty()
    }
    fn degree(&self, x: &Self::Basis) -> usize {
        self.alphabet.word_weight(x)
    }
    fn product(&self, x: &Self::Basis, y: &Self::Basis) -> LinComb<Self::Basis> {
        concatenate(x, y)
    }
    fn coproduct(&self, x: &Self::Basis) -> PairComb<Self::Basis> {
        deshuffle(x)
    }
    fn basis(&self, degree: usize) -> Result<Vec<Self::Basis>> {
        self.alphabet.words(degree)
    }
    fn parse_basis(&self, text: &str) -> Result<Self::Basis> {
        self.alphabet.parse_word(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[u32]) -> Word<u32> {
        Word(letters.to_vec())
    }

    #[test]
    fn shuffle_examples() {
        let (a, b) = (1, 2);
        let got = shuffle(&w(&[a]), &w(&[b]));
        assert_eq!(
            got,
            [(w(&[a, b]), Rational::one()), (w(&[b, a]), Rational::one())]
                .into_iter()
                .collect()
        );
        let got = shuffle(&w(&[a, b]), &w(&[b]));
        let want: LinComb<Word<u32>> = [
            (w(&[a, b, b]), Rational::from_integer(2)),
            (w(&[b, a, b]), Rational::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
        assert_eq!(shuffle(&w(&[]), &w(&[a, b])), LinComb::basis(w(&[a, b])));
    }

    #[test]
    fn deshuffle_examples() {
        let got = deshuffle(&w(&[1, 2]));
        let want: PairComb<Word<u32>> = [
            ((w(&[]), w(&[1, 2])), Rational::one()),
            ((w(&[1]), w(&[2])), Rational::one()),
            ((w(&[2]), w(&[1])), Rational::one()),
            ((w(&[1, 2]), w(&[])), Rational::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
        assert_eq!(deshuffle(&w(&[])), LinComb::basis((w(&[]), w(&[]))));
    }

    #[test]
    fn deconcatenation_of_two_letters() {
        let got = deconcatenate(&w(&[3, 1]));
        assert_eq!(got.len(), 3);
        assert_eq!(got.coeff(&(w(&[3]), w(&[1]))), Rational::one());
    }

    #[test]
    fn gr_ssym_product_display() {
        // M_231 · M_1 = 2 M_3421 + M_4231
        let sh = Shuffle {
            alphabet: IrreduciblePerms::default(),
        };
        let x = sh.parse_basis("[12|1]").unwrap();
        let y = sh.parse_basis("[1]").unwrap();
        let got = sh.product(&x, &y);
        assert_eq!(got.to_string(), "2*[12|1|1] + 1*[1|12|1]");
    }

    #[test]
    fn word_counts() {
        let sh = Shuffle {
            alphabet: IrreduciblePerms::default(),
        };
        let counts: Vec<usize> = (0..=5).map(|n| sh.basis(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 24, 120]);
        let ys = Shuffle {
            alphabet: IrreduciblePbts::default(),
        };
        let counts: Vec<usize> = (0..=5).map(|n| ys.basis(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
        let t = Tensor {
            alphabet: Weights::default(),
        };
        let counts: Vec<usize> = (0..=5).map(|n| t.basis(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 8, 16]);
    }

    #[test]
    fn parse_rejects_reducible_letters() {
        let a = IrreduciblePerms::default();
        assert!(matches!(
            a.parse_word("[231]"),
            Err(Error::ReducibleLetter(_))
        ));
        assert!(a.parse_word("12|1").is_err());
        assert_eq!(a.parse_word("[]").unwrap(), Word::empty());
        let b = IrreduciblePbts::default();
        assert!(b.parse_word("[((L L) L)|(L L)]").is_ok());
        assert!(b.parse_word("[(L (L L))]").is_err());
    }

    #[test]
    fn degree_is_weight() {
        let sh = Shuffle {
            alphabet: IrreduciblePerms::default(),
        };
        let x = sh.parse_basis("[12|1]").unwrap();
        assert_eq!(sh.degree(&x), 3);
        assert_eq!(x.length(), 2);
    }
}
