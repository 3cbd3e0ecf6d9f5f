use std::fmt;
use std::str::FromStr;

use super::ordered::OrderedTree;
use super::tree::Cursor;
use crate::error::{Error, Result};
use crate::lincomb::Basis;

/// Planar binary tree. Canonical form: `L` for the leaf, `(s t)` for a node
/// with left subtree `s` and right subtree `t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum PlanarBinaryTree {
    Leaf,
    Node(Box<PlanarBinaryTree>, Box<PlanarBinaryTree>),
}

use PlanarBinaryTree::{Leaf, Node};

impl PlanarBinaryTree {
    pub fn node(left: PlanarBinaryTree, right: PlanarBinaryTree) -> Self {
        Node(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            Leaf => 1,
            Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Number of internal nodes, one less than the number of leaves.
    pub fn degree(&self) -> usize {
        self.leaves() - 1
    }

    /// `s \ t`: the rightmost leaf of `s` is replaced by `t`.
    pub fn backslash(&self, t: &PlanarBinaryTree) -> PlanarBinaryTree {
        match self {
            Leaf => t.clone(),
            Node(l, r) => Node(l.clone(), Box::new(r.backslash(t))),
        }
    }

    /// A tree is `\`-irreducible exactly when its right subtree is a leaf.
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Node(_, r) if **r == Leaf)
    }

    /// Maximal factorization into `\`-irreducible trees. A node `(l r)`
    /// factors as `(l L) \ r`, so the factors are read off the right branch.
    pub fn irreducible_decomposition(&self) -> Vec<PlanarBinaryTree> {
        let mut out = Vec::new();
        let mut cur = self;
        while let Node(l, r) = cur {
            out.push(Node(l.clone(), Box::new(Leaf)));
            cur = r;
        }
        out
    }

    /// The bijection onto ordered trees: a leaf goes to the one-node tree, an
    /// irreducible `(t' L)` to the planted tree over `ψ(t')`, and a product of
    /// irreducibles to the root join of their images.
    pub fn to_ordered(&self) -> OrderedTree {
        let mut branches = Vec::new();
        let mut cur = self;
        while let Node(l, r) = cur {
            branches.push(l.to_ordered());
            cur = r;
        }
        OrderedTree::from_children(branches)
    }

    /// Inverse of [`to_ordered`](Self::to_ordered).
    pub fn from_ordered(x: &OrderedTree) -> PlanarBinaryTree {
        x.children().iter().rev().fold(Leaf, |acc, branch| {
            Self::node(Self::from_ordered(branch), acc)
        })
    }

    fn write(&self, out: &mut String) {
        match self {
            Leaf => out.push('L'),
            Node(l, r) => {
                out.push('(');
                l.write(out);
                out.push(' ');
                r.write(out);
                out.push(')');
            }
        }
    }

    fn parse(cur: &mut Cursor) -> Result<PlanarBinaryTree> {
        cur.skip_spaces();
        match cur.peek() {
            Some(b'L') => {
                cur.pos += 1;
                Ok(Leaf)
            }
            Some(b'(') => {
                cur.pos += 1;
                let l = Self::parse(cur)?;
                if !cur.skip_spaces() {
                    return Err(cur.error("expected a space between subtrees"));
                }
                let r = Self::parse(cur)?;
                cur.skip_spaces();
                cur.expect(b')')?;
                Ok(Self::node(l, r))
            }
            _ => Err(cur.error("expected 'L' or '('")),
        }
    }
}

impl fmt::Display for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PlanarBinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new("planar binary tree", s);
        let t = Self::parse(&mut cur)?;
        cur.finish()?;
        Ok(t)
    }
}

impl Basis for PlanarBinaryTree {
    fn encode(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> PlanarBinaryTree {
        s.parse().unwrap()
    }

    fn o(s: &str) -> OrderedTree {
        s.parse().unwrap()
    }

    #[test]
    fn backslash_examples() {
        assert_eq!(b("(L L)").backslash(&b("(L L)")), b("(L (L L))"));
        let t = b("((L L) (L L))");
        assert_eq!(Leaf.backslash(&t), t);
        assert_eq!(t.backslash(&Leaf), t);
        assert_eq!(b("((L L) L)").backslash(&b("(L L)")), b("((L L) (L L))"));
        let (s, t) = (b("((L L) L)"), b("(L (L L))"));
        assert_eq!(s.backslash(&t).leaves(), s.leaves() + t.leaves() - 1);
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(
            b("(L (L L))").irreducible_decomposition(),
            vec![b("(L L)"), b("(L L)")]
        );
        assert_eq!(
            b("((L L) L)").irreducible_decomposition(),
            vec![b("((L L) L)")]
        );
        assert_eq!(b("(L L)").irreducible_decomposition(), vec![b("(L L)")]);
        assert!(Leaf.irreducible_decomposition().is_empty());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(Leaf.to_ordered(), o("()"));
        assert_eq!(b("(L L)").to_ordered(), o("(())"));
        assert_eq!(b("(L (L L))").to_ordered(), o("(()())"));
        // ψ((L L) L) is planted over ψ((L L))
        assert_eq!(b("((L L) L)").to_ordered(), o("((()))"));
    }

    #[test]
    fn psi_inverse_examples() {
        assert_eq!(PlanarBinaryTree::from_ordered(&o("()")), Leaf);
        assert_eq!(PlanarBinaryTree::from_ordered(&o("(()())")), b("(L (L L))"));
        assert_eq!(PlanarBinaryTree::from_ordered(&o("((()))")), b("((L L) L)"));
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!("(L L".parse::<PlanarBinaryTree>().is_err());
        assert!("(LL)".parse::<PlanarBinaryTree>().is_err());
        assert!("X".parse::<PlanarBinaryTree>().is_err());
        assert!("L L".parse::<PlanarBinaryTree>().is_err());
    }
}
