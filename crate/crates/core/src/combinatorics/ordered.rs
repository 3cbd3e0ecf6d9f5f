use std::fmt;
use std::str::FromStr;

use super::tree::{Cursor, Node};
use crate::error::{Error, Result};
use crate::lincomb::Basis;

/// Rooted plane tree. Canonical form: `"(" OrderedTree* ")"`, so the
/// single-node tree is `()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedTree(pub(crate) Node<()>);

impl OrderedTree {
    /// The one-node tree, unit of `\` and of the Grossman-Larson product.
    pub fn single() -> Self {
        OrderedTree(Node::leaf(()))
    }

    pub fn from_children(children: Vec<OrderedTree>) -> Self {
        OrderedTree(Node {
            label: (),
            children: children.into_iter().map(|c| c.0).collect(),
        })
    }

    /// Planted tree whose root has `branch` as its only child.
    pub fn plant(branch: OrderedTree) -> Self {
        Self::from_children(vec![branch])
    }

    pub fn children(&self) -> Vec<OrderedTree> {
        self.0.children.iter().cloned().map(OrderedTree).collect()
    }

    pub fn child_count(&self) -> usize {
        self.0.children.len()
    }

    pub fn node_count(&self) -> usize {
        self.0.node_count()
    }

    /// One less than the number of nodes.
    pub fn degree(&self) -> usize {
        self.node_count() - 1
    }

    pub fn is_planted(&self) -> bool {
        self.child_count() == 1
    }

    /// Root join: children of `self` followed by children of `other`.
    pub fn backslash(&self, other: &OrderedTree) -> OrderedTree {
        let mut children = self.0.children.clone();
        children.extend(other.0.children.iter().cloned());
        OrderedTree(Node {
            label: (),
            children,
        })
    }

    /// The planted trees `x_1, ..., x_k` with `x = x_1 \ ... \ x_k`, one per
    /// branch at the root.
    pub fn planted_components(&self) -> Vec<OrderedTree> {
        self.0
            .children
            .iter()
            .map(|c| {
                OrderedTree(Node {
                    label: (),
                    children: vec![c.clone()],
                })
            })
            .collect()
    }

    /// `x #_f y`: component `i` of `self` is attached at the node of `y` with
    /// preorder index `targets[i]` (the root of `y` is node 0).
    pub fn graft(&self, y: &OrderedTree, targets: &[usize]) -> Result<OrderedTree> {
        y.0.graft(&self.0.children, targets).map(OrderedTree)
    }

    /// `x_S` for a set `S` of 1-based component indices.
    pub fn restrict(&self, subset: &[usize]) -> Result<OrderedTree> {
        let mask = subset_mask(subset, self.child_count())?;
        Ok(self.restrict_mask(mask))
    }

    /// `x_S` with `S` given as a bitmask over 0-based component positions.
    pub fn restrict_mask(&self, mask: u64) -> OrderedTree {
        OrderedTree(Node {
            label: (),
            children: self
                .0
                .children
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, c)| c.clone())
                .collect(),
        })
    }

    fn write(node: &Node<()>, out: &mut String) {
        out.push('(');
        for c in &node.children {
            Self::write(c, out);
        }
        out.push(')');
    }

    fn parse_node(cur: &mut Cursor) -> Result<Node<()>> {
        cur.skip_spaces();
        cur.expect(b'(')?;
        let mut children = Vec::new();
        loop {
            cur.skip_spaces();
            match cur.peek() {
                Some(b')') => {
                    cur.pos += 1;
                    return Ok(Node {
                        label: (),
                        children,
                    });
                }
                Some(b'(') => children.push(Self::parse_node(cur)?),
                _ => return Err(cur.error("expected '(' or ')'")),
            }
        }
    }
}

/// Converts a list of 1-based indices in `1..=k` into a bitmask.
pub(crate) fn subset_mask(subset: &[usize], k: usize) -> Result<u64> {
    let mut mask = 0u64;
    for &i in subset {
        if i == 0 || i > k {
            return Err(Error::IndexOutOfRange { index: i, bound: k });
        }
        mask |= 1 << (i - 1);
    }
    Ok(mask)
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::with_capacity(2 * self.node_count());
        Self::write(&self.0, &mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for OrderedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new("ordered tree", s);
        let node = Self::parse_node(&mut cur)?;
        cur.finish()?;
        Ok(OrderedTree(node))
    }
}

impl Basis for OrderedTree {
    fn encode(&self) -> String {
        self.to_string()
    }
}
