//! Exhaustive generation of basis objects by degree.
//!
//! Each generator works directly from the recursive structure of its family
//! (splitting leaves, forests of subtrees, inserting the largest label) and
//! never goes through the bijections, so counts and bijection tests can be
//! checked against one another.

use std::fmt;
use std::str::FromStr;

use super::heap::HeapOrderedTree;
use super::ordered::OrderedTree;
use super::pbt::PlanarBinaryTree;
use super::perm::Permutation;
use super::tree::Node;
use crate::error::{Error, Result};

/// Upper bounds on the degrees that enumeration is allowed to reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeCaps {
    /// Ordered and planar binary trees (Catalan growth).
    pub trees: usize,
    /// Permutations and heap-ordered trees (factorial growth).
    pub permutations: usize,
}

impl Default for DegreeCaps {
    fn default() -> Self {
        DegreeCaps {
            trees: 8,
            permutations: 7,
        }
    }
}

impl DegreeCaps {
    pub fn uniform(cap: usize) -> Self {
        DegreeCaps {
            trees: cap,
            permutations: cap,
        }
    }

    pub fn check(&self, kind: ObjectKind, degree: usize) -> Result<()> {
        let (cap, what) = if kind.is_factorial() {
            (self.permutations, "permutations and heap-ordered trees")
        } else {
            (self.trees, "ordered and planar binary trees")
        };
        if degree > cap {
            Err(Error::DegreeCap {
                what,
                requested: degree,
                cap,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObjectKind {
    Pbt,
    Ordered,
    Heap,
    Perm,
    IrreduciblePbt,
    Planted,
    IrreduciblePerm,
    IrreducibleHeap,
}

impl ObjectKind {
    pub const ALL: [ObjectKind; 8] = [
        ObjectKind::Pbt,
        ObjectKind::Ordered,
        ObjectKind::Heap,
        ObjectKind::Perm,
        ObjectKind::IrreduciblePbt,
        ObjectKind::Planted,
        ObjectKind::IrreduciblePerm,
        ObjectKind::IrreducibleHeap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::Pbt => "pbt",
            ObjectKind::Ordered => "ordered",
            ObjectKind::Heap => "heap",
            ObjectKind::Perm => "perm",
            ObjectKind::IrreduciblePbt => "irreducible-pbt",
            ObjectKind::Planted => "planted",
            ObjectKind::IrreduciblePerm => "irreducible-perm",
            ObjectKind::IrreducibleHeap => "irreducible-heap",
        }
    }

    fn is_factorial(self) -> bool {
        matches!(
            self,
            ObjectKind::Heap
                | ObjectKind::Perm
                | ObjectKind::IrreduciblePerm
                | ObjectKind::IrreducibleHeap
        )
    }
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ObjectKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown object kind '{s}'")))
    }
}

/// Any of the four basis-object families.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Object {
    Pbt(PlanarBinaryTree),
    Ordered(OrderedTree),
    Heap(HeapOrderedTree),
    Perm(Permutation),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Pbt(t) => t.fmt(f),
            Object::Ordered(t) => t.fmt(f),
            Object::Heap(t) => t.fmt(f),
            Object::Perm(w) => w.fmt(f),
        }
    }
}

impl Object {
    /// Parses text as an object of the family that `kind` belongs to.
    pub fn parse(kind: ObjectKind, text: &str) -> Result<Object> {
        Ok(match kind {
            ObjectKind::Pbt | ObjectKind::IrreduciblePbt => Object::Pbt(text.parse()?),
            ObjectKind::Ordered | ObjectKind::Planted => Object::Ordered(text.parse()?),
            ObjectKind::Heap | ObjectKind::IrreducibleHeap => Object::Heap(text.parse()?),
            ObjectKind::Perm | ObjectKind::IrreduciblePerm => Object::Perm(text.parse()?),
        })
    }
}

/// Complete, duplicate-free list of objects of `kind` and degree `n`, in
/// canonical string order.
pub fn enumerate(kind: ObjectKind, n: usize, caps: &DegreeCaps) -> Result<Vec<Object>> {
    caps.check(kind, n)?;
    let mut out: Vec<Object> = match kind {
        ObjectKind::Pbt => planar_binary_trees(n)
            .into_iter()
            .map(Object::Pbt)
            .collect(),
        ObjectKind::IrreduciblePbt => irreducible_planar_binary_trees(n)
            .into_iter()
            .map(Object::Pbt)
            .collect(),
        ObjectKind::Ordered => ordered_trees(n).into_iter().map(Object::Ordered).collect(),
        ObjectKind::Planted => planted_trees(n).into_iter().map(Object::Ordered).collect(),
        ObjectKind::Heap => heap_ordered_trees(n)
            .into_iter()
            .map(Object::Heap)
            .collect(),
        ObjectKind::IrreducibleHeap => heap_ordered_trees(n)
            .into_iter()
            .filter(|x| x.is_irreducible())
            .map(Object::Heap)
            .collect(),
        ObjectKind::Perm => Permutation::all(n).into_iter().map(Object::Perm).collect(),
        ObjectKind::IrreduciblePerm => irreducible_permutations(n)
            .into_iter()
            .map(Object::Perm)
            .collect(),
    };
    sort_canonical(&mut out);
    Ok(out)
}

pub(crate) fn sort_canonical<T: fmt::Display>(items: &mut Vec<T>) {
    let mut keyed: Vec<(String, T)> = items.drain(..).map(|t| (t.to_string(), t)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    items.extend(keyed.into_iter().map(|(_, t)| t));
}

/// Planar binary trees with `n + 1` leaves.
pub fn planar_binary_trees(n: usize) -> Vec<PlanarBinaryTree> {
    let mut by_size: Vec<Vec<PlanarBinaryTree>> = vec![vec![PlanarBinaryTree::Leaf]];
    for m in 1..=n {
        let mut trees = Vec::new();
        for left in 0..m {
            for l in &by_size[left] {
                for r in &by_size[m - 1 - left] {
                    trees.push(PlanarBinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(trees);
    }
    by_size.swap_remove(n)
}

/// Irreducible planar binary trees of degree `n`: those whose right subtree
/// is a leaf.
pub fn irreducible_planar_binary_trees(n: usize) -> Vec<PlanarBinaryTree> {
    if n == 0 {
        return Vec::new();
    }
    planar_binary_trees(n - 1)
        .into_iter()
        .map(|t| PlanarBinaryTree::node(t, PlanarBinaryTree::Leaf))
        .collect()
}

/// Ordered trees with `n + 1` nodes.
pub fn ordered_trees(n: usize) -> Vec<OrderedTree> {
    // forests[s]: sequences of trees with s nodes in total
    let mut forests: Vec<Vec<Vec<Node<()>>>> = vec![vec![Vec::new()]];
    for s in 1..=n {
        let mut fs = Vec::new();
        for first in 1..=s {
            // first tree has `first` nodes: a root over a forest of first-1 nodes
            for inner in &forests[first - 1] {
                let head = Node {
                    label: (),
                    children: inner.clone(),
                };
                for rest in &forests[s - first] {
                    let mut f = Vec::with_capacity(rest.len() + 1);
                    f.push(head.clone());
                    f.extend(rest.iter().cloned());
                    fs.push(f);
                }
            }
        }
        forests.push(fs);
    }
    forests
        .swap_remove(n)
        .into_iter()
        .map(|children| {
            OrderedTree(Node {
                label: (),
                children,
            })
        })
        .collect()
}

/// Planted ordered trees with `n + 1` nodes.
pub fn planted_trees(n: usize) -> Vec<OrderedTree> {
    if n == 0 {
        return Vec::new();
    }
    ordered_trees(n - 1)
        .into_iter()
        .map(OrderedTree::plant)
        .collect()
}

/// Heap-ordered trees on `n + 1` nodes. The node labeled `n` is a leaf and
/// the leftmost child of its parent, so each tree arises exactly once by
/// inserting `n` into a tree on labels `0..n`.
pub fn heap_ordered_trees(n: usize) -> Vec<HeapOrderedTree> {
    let mut trees = vec![Node::leaf(0u32)];
    for label in 1..=n as u32 {
        let mut next = Vec::with_capacity(trees.len() * label as usize);
        for t in &trees {
            for target in 0..label as usize {
                next.push(
                    t.graft(&[Node::leaf(label)], &[target])
                        .expect("target in range"),
                );
            }
        }
        trees = next;
    }
    trees.into_iter().map(HeapOrderedTree).collect()
}

/// Permutations of `1..=n` without global descents, by direct filtering.
pub fn irreducible_permutations(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return Vec::new();
    }
    Permutation::all(n)
        .into_iter()
        .filter(|w| w.global_descents().is_empty())
        .collect()
}

pub fn catalan(n: usize) -> u128 {
    // C(n) = binom(2n, n) / (n + 1), computed incrementally
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
