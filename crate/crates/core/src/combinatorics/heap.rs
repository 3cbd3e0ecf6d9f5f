use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::ordered::{subset_mask, OrderedTree};
use super::perm::Permutation;
use super::tree::{Cursor, Node};
use crate::error::{Error, Result};
use crate::lincomb::Basis;

/// Ordered tree whose nodes carry the labels `0..=n` bijectively, with the
/// root labeled 0, labels increasing from parent to child and decreasing
/// from left to right among siblings.
///
/// Canonical form: `Label "(" HOT* ")"` with children separated by one space,
/// e.g. `0(2() 1(3()))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HeapOrderedTree(pub(crate) Node<u32>);

/// Order `(k, l)` of a heap-ordered tree: `k` planted components and `l`
/// `\`-irreducible components.
///
/// Comparison ranks more planted components higher; at equal `k`, fewer
/// irreducible components rank higher.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct OrderPair {
    pub planted: usize,
    pub irreducible: usize,
}

impl Ord for OrderPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.planted
            .cmp(&other.planted)
            .then(other.irreducible.cmp(&self.irreducible))
    }
}

impl PartialOrd for OrderPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrderPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.planted, self.irreducible)
    }
}

impl HeapOrderedTree {
    /// Validates the heap-order rules and builds the tree.
    pub(crate) fn from_node(node: Node<u32>) -> Result<Self> {
        if node.label != 0 {
            return Err(Error::HeapOrder(format!(
                "root is labeled {}, not 0",
                node.label
            )));
        }
        let n = node.node_count();
        let mut seen = vec![false; n];
        check_heap(&node, &mut seen)?;
        Ok(HeapOrderedTree(node))
    }

    pub fn single() -> Self {
        HeapOrderedTree(Node::leaf(0))
    }

    pub fn node_count(&self) -> usize {
        self.0.node_count()
    }

    pub fn degree(&self) -> usize {
        self.node_count() - 1
    }

    /// Largest label, equal to the degree.
    pub fn max_label(&self) -> u32 {
        self.degree() as u32
    }

    pub fn child_count(&self) -> usize {
        self.0.children.len()
    }

    pub fn is_planted(&self) -> bool {
        self.child_count() == 1
    }

    /// Underlying ordered tree, labels forgotten.
    pub fn shape(&self) -> OrderedTree {
        OrderedTree(self.0.map_labels(&|_| ()))
    }

    /// Labels in preorder, root included.
    pub fn preorder_labels(&self) -> Vec<u32> {
        self.0.preorder()
    }

    /// `x \ y`: roots merged, non-root labels of `x` raised by the largest
    /// label of `y`, branches of `x` to the left.
    pub fn backslash(&self, y: &HeapOrderedTree) -> HeapOrderedTree {
        let shift = y.max_label();
        let mut children: Vec<Node<u32>> = self
            .0
            .children
            .iter()
            .map(|c| c.map_labels(&|l| l + shift))
            .collect();
        children.extend(y.0.children.iter().cloned());
        HeapOrderedTree(Node { label: 0, children })
    }

    /// Planted components, each standardized.
    pub fn planted_components(&self) -> Vec<HeapOrderedTree> {
        (0..self.child_count())
            .map(|i| self.restrict_mask(1 << i))
            .collect()
    }

    /// `x #_f y` with the labels of `y` kept and those of `x` raised by the
    /// largest label of `y`. Targets are preorder indices of nodes of `y`.
    pub fn graft(&self, y: &HeapOrderedTree, targets: &[usize]) -> Result<HeapOrderedTree> {
        let shift = y.max_label();
        let branches: Vec<Node<u32>> = self
            .0
            .children
            .iter()
            .map(|c| c.map_labels(&|l| l + shift))
            .collect();
        let grafted = y.0.graft(&branches, targets)?;
        debug_assert!(HeapOrderedTree::from_node(grafted.clone()).is_ok());
        Ok(HeapOrderedTree(grafted))
    }

    /// `x_S` for 1-based component indices, standardized.
    pub fn restrict(&self, subset: &[usize]) -> Result<HeapOrderedTree> {
        let mask = subset_mask(subset, self.child_count())?;
        Ok(self.restrict_mask(mask))
    }

    pub fn restrict_mask(&self, mask: u64) -> HeapOrderedTree {
        let kept: Vec<Node<u32>> = self
            .0
            .children
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, c)| c.clone())
            .collect();
        standardize(kept)
    }

    /// Maximal factorization `x = x_1 \ ... \ x_l` into `\`-irreducible trees.
    /// The one-node tree has the empty factorization.
    pub fn irreducible_decomposition(&self) -> Vec<HeapOrderedTree> {
        let k = self.child_count();
        if k == 0 {
            return Vec::new();
        }
        let bounds: Vec<(u32, u32)> = self
            .0
            .children
            .iter()
            .map(|c| {
                let labels = c.preorder();
                (*labels.iter().min().unwrap(), *labels.iter().max().unwrap())
            })
            .collect();
        let mut prefix_min = vec![u32::MAX; k + 1];
        for i in 0..k {
            prefix_min[i + 1] = prefix_min[i].min(bounds[i].0);
        }
        let mut suffix_max = vec![0u32; k + 1];
        for i in (0..k).rev() {
            suffix_max[i] = suffix_max[i + 1].max(bounds[i].1);
        }
        let mut out = Vec::new();
        let mut start = 0;
        for p in 1..=k {
            if p == k || prefix_min[p] > suffix_max[p] {
                out.push(standardize(self.0.children[start..p].to_vec()));
                start = p;
            }
        }
        out
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible_decomposition().len() == 1
    }

    pub fn order_pair(&self) -> OrderPair {
        OrderPair {
            planted: self.child_count(),
            irreducible: self.irreducible_decomposition().len(),
        }
    }

    /// Heap-ordered tree of a permutation: `u(i)` becomes the rightmost child
    /// of the node drawn at the last earlier step `j` with `u(j) < u(i)`
    /// (step 0 being the root, `u(0) = 0`).
    pub fn from_permutation(w: &Permutation) -> HeapOrderedTree {
        let values = w.values();
        let n = values.len();
        // children lists indexed by step; step 0 is the root
        let mut kids: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        let label_at = |step: usize| if step == 0 { 0 } else { values[step - 1] };
        for i in 1..=n {
            let v = label_at(i);
            let j = (0..i)
                .rev()
                .find(|&j| label_at(j) < v)
                .expect("step 0 has label 0");
            kids[j].push(i);
        }
        fn build(step: usize, kids: &[Vec<usize>], label: &dyn Fn(usize) -> u32) -> Node<u32> {
            Node {
                label: label(step),
                children: kids[step].iter().map(|&c| build(c, kids, label)).collect(),
            }
        }
        let tree = build(0, &kids, &label_at);
        debug_assert!(HeapOrderedTree::from_node(tree.clone()).is_ok());
        HeapOrderedTree(tree)
    }

    /// Reading rule: non-root labels listed so that ancestors come before
    /// descendants and left branches before right ones, i.e. preorder.
    pub fn to_permutation(&self) -> Permutation {
        let labels = self.0.preorder();
        Permutation::from_values_unchecked(labels[1..].to_vec())
    }

    fn write(node: &Node<u32>, out: &mut String) {
        out.push_str(&node.label.to_string());
        out.push('(');
        for (i, c) in node.children.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            Self::write(c, out);
        }
        out.push(')');
    }

    fn parse_node(cur: &mut Cursor) -> Result<Node<u32>> {
        let label = cur.number()? as u32;
        cur.expect(b'(')?;
        let mut children = Vec::new();
        loop {
            let spaced = cur.skip_spaces();
            match cur.peek() {
                Some(b')') => {
                    cur.pos += 1;
                    return Ok(Node { label, children });
                }
                Some(b'0'..=b'9') => {
                    if !children.is_empty() && !spaced {
                        return Err(cur.error("children must be separated by a space"));
                    }
                    children.push(Self::parse_node(cur)?);
                }
                _ => return Err(cur.error("expected a child or ')'")),
            }
        }
    }
}

fn check_heap(node: &Node<u32>, seen: &mut [bool]) -> Result<()> {
    let l = node.label as usize;
    if l >= seen.len() {
        return Err(Error::HeapOrder(format!(
            "label {l} is out of range 0..={}",
            seen.len() - 1
        )));
    }
    if std::mem::replace(&mut seen[l], true) {
        return Err(Error::HeapOrder(format!("label {l} is used twice")));
    }
    for pair in node.children.windows(2) {
        if pair[0].label <= pair[1].label {
            return Err(Error::HeapOrder(format!(
                "children labels must decrease from left to right (node {l} has {} before {})",
                pair[0].label, pair[1].label
            )));
        }
    }
    for c in &node.children {
        if c.label <= node.label {
            return Err(Error::HeapOrder(format!(
                "labels must increase from parent to child ({} under {l})",
                c.label
            )));
        }
        check_heap(c, seen)?;
    }
    Ok(())
}

/// Builds a tree with the given root branches and relabels the non-root
/// nodes by rank so that they become `1..=m`.
fn standardize(children: Vec<Node<u32>>) -> HeapOrderedTree {
    let root = Node { label: 0, children };
    let mut labels = root.preorder();
    labels.sort_unstable();
    let max = *labels.last().unwrap() as usize;
    let mut rank = vec![0u32; max + 1];
    for (r, &l) in labels.iter().enumerate() {
        rank[l as usize] = r as u32;
    }
    HeapOrderedTree(root.map_labels(&|l| rank[*l as usize]))
}

impl fmt::Display for HeapOrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        Self::write(&self.0, &mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for HeapOrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HeapOrderedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new("heap-ordered tree", s);
        cur.skip_spaces();
        let node = Self::parse_node(&mut cur)?;
        cur.finish()?;
        HeapOrderedTree::from_node(node)
    }
}

impl Basis for HeapOrderedTree {
    fn encode(&self) -> String {
        self.to_string()
    }
}
