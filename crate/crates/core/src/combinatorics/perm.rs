use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lincomb::Basis;

/// Permutation of `1..=n` in one-line notation; `n = 0` is allowed.
///
/// Canonical form: a digit word when `n <= 9` (`4231`), comma-separated
/// values otherwise. The empty permutation encodes as the empty string.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(format!("{values:?}")));
            }
        }
        Ok(Permutation(values))
    }

    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `u \ v`: values of `u` raised by `|v|`, followed by `v`.
    pub fn backslash(&self, v: &Permutation) -> Permutation {
        let shift = v.len() as u32;
        let mut out: Vec<u32> = self.0.iter().map(|x| x + shift).collect();
        out.extend_from_slice(&v.0);
        Permutation(out)
    }

    /// Positions `p` in `1..n` with every value among the first `p` larger
    /// than every value after them.
    pub fn global_descents(&self) -> Vec<usize> {
        let n = self.len();
        if n < 2 {
            return Vec::new();
        }
        // the first p values exceed the rest iff they are exactly {n-p+1..n}
        let mut prefix_min = u32::MAX;
        let mut out = Vec::new();
        for p in 1..n {
            prefix_min = prefix_min.min(self.0[p - 1]);
            if prefix_min as usize == n - p + 1 {
                out.push(p);
            }
        }
        out
    }

    pub fn is_irreducible(&self) -> bool {
        !self.is_empty() && self.global_descents().is_empty()
    }

    /// Cut at every global descent and standardize the blocks.
    pub fn irreducible_decomposition(&self) -> Vec<Permutation> {
        let mut cuts = self.global_descents();
        cuts.push(self.len());
        let mut out = Vec::with_capacity(cuts.len());
        let mut start = 0;
        if self.is_empty() {
            return out;
        }
        for end in cuts {
            let block = &self.0[start..end];
            let low = *block.iter().min().unwrap() - 1;
            out.push(Permutation(block.iter().map(|v| v - low).collect()));
            start = end;
        }
        out
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<u32> = (1..=n as u32).collect();
        let mut out = vec![Permutation(current.clone())];
        while next_permutation(&mut current) {
            out.push(Permutation(current.clone()));
        }
        out
    }
}

fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let syntax = |position: usize| Error::Syntax {
            kind: "permutation",
            position,
            message: "expected digits or comma-separated integers".into(),
        };
        let values: Vec<u32> = if s.contains(',') {
            let mut pos = 0;
            let mut out = Vec::new();
            for part in s.split(',') {
                out.push(part.trim().parse().map_err(|_| syntax(pos))?);
                pos += part.len() + 1;
            }
            out
        } else {
            s.chars()
                .enumerate()
                .map(|(i, c)| c.to_digit(10).ok_or_else(|| syntax(i)))
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

impl Basis for Permutation {
    fn encode(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn backslash_examples() {
        assert_eq!(p("231").backslash(&p("21")), p("45321"));
        assert_eq!(p("12").backslash(&p("1")), p("231"));
        assert_eq!(p("312").backslash(&p("")), p("312"));
    }

    #[test]
    fn global_descent_examples() {
        assert_eq!(p("231").global_descents(), vec![2]);
        assert_eq!(p("321").global_descents(), vec![1, 2]);
        assert!(p("2413").global_descents().is_empty());
        // 4231 = 312 \ 1 as well as 1 \ 231
        assert_eq!(p("4231").global_descents(), vec![1, 3]);
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(p("231").irreducible_decomposition(), vec![p("12"), p("1")]);
        assert_eq!(
            p("4231").irreducible_decomposition(),
            vec![p("1"), p("12"), p("1")]
        );
        assert_eq!(p("2413").irreducible_decomposition(), vec![p("2413")]);
        assert!(p("").irreducible_decomposition().is_empty());
    }

    #[test]
    fn parse_and_format() {
        let big = Permutation::new((1..=10).rev().collect()).unwrap();
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert!("1224".parse::<Permutation>().is_err());
        assert!("13".parse::<Permutation>().is_err());
        assert!("1a".parse::<Permutation>().is_err());
        assert_eq!(p("").len(), 0);
    }

    #[test]
    fn all_is_lexicographic() {
        let all: Vec<String> = Permutation::all(3).iter().map(|w| w.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(Permutation::all(0), vec![p("")]);
    }
}
