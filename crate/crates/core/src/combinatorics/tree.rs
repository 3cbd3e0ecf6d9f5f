//! Plane rooted trees with an arbitrary node payload, shared by ordered and
//! heap-ordered trees.

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Node<L> {
    pub label: L,
    pub children: Vec<Node<L>>,
}

impl<L: Clone> Node<L> {
    pub fn leaf(label: L) -> Self {
        Node {
            label,
            children: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(Node::node_count).sum::<usize>()
    }

    /// Labels in preorder (node, then children left to right).
    pub fn preorder(&self) -> Vec<L> {
        let mut out = Vec::with_capacity(self.node_count());
        self.preorder_into(&mut out);
        out
    }

    fn preorder_into(&self, out: &mut Vec<L>) {
        out.push(self.label.clone());
        for c in &self.children {
            c.preorder_into(out);
        }
    }

    pub fn map_labels<M: Clone>(&self, f: &impl Fn(&L) -> M) -> Node<M> {
        Node {
            label: f(&self.label),
            children: self.children.iter().map(|c| c.map_labels(f)).collect(),
        }
    }

    /// Attaches `branches[i]` as a new child of the node of `self` with
    /// preorder index `targets[i]`. Branches sent to the same node keep their
    /// relative order and sit to the left of that node's existing children.
    pub fn graft(&self, branches: &[Node<L>], targets: &[usize]) -> Result<Node<L>> {
        if branches.len() != targets.len() {
            return Err(Error::GraftArity {
                got: targets.len(),
                expected: branches.len(),
            });
        }
        let nodes = self.node_count();
        let mut buckets: Vec<Vec<Node<L>>> = vec![Vec::new(); nodes];
        for (branch, &t) in branches.iter().zip(targets) {
            if t >= nodes {
                return Err(Error::GraftTarget { node: t, nodes });
            }
            buckets[t].push(branch.clone());
        }
        let mut counter = 0;
        Ok(self.graft_rec(&mut counter, &mut buckets))
    }

    fn graft_rec(&self, counter: &mut usize, buckets: &mut [Vec<Node<L>>]) -> Node<L> {
        let idx = *counter;
        *counter += 1;
        let mut children = std::mem::take(&mut buckets[idx]);
        children.reserve(self.children.len());
        for c in &self.children {
            children.push(c.graft_rec(counter, buckets));
        }
        Node {
            label: self.label.clone(),
            children,
        }
    }
}

/// Minimal cursor for the hand-written object grammars.
pub(crate) struct Cursor<'a> {
    pub kind: &'static str,
    pub text: &'a [u8],
    pub pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(kind: &'static str, text: &'a str) -> Self {
        Cursor {
            kind,
            text: text.as_bytes(),
            pos: 0,
        }
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            kind: self.kind,
            position: self.pos,
            message: message.into(),
        }
    }

    pub fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    pub fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", byte as char)))
        }
    }

    pub fn skip_spaces(&mut self) -> bool {
        let start = self.pos;
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
        self.pos > start
    }

    pub fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a label"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Syntax {
                kind: self.kind,
                position: start,
                message: "label too large".into(),
            })
    }

    pub fn finish(&mut self) -> Result<()> {
        self.skip_spaces();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Node<u32> {
        let mut t = Node::leaf(n as u32);
        for l in (0..n).rev() {
            t = Node {
                label: l as u32,
                children: vec![t],
            };
        }
        t
    }

    #[test]
    fn graft_places_branches_left_in_order() {
        let y = chain(1);
        let got = y.graft(&[Node::leaf(7), Node::leaf(8)], &[0, 0]).unwrap();
        assert_eq!(
            got.children.iter().map(|c| c.label).collect::<Vec<_>>(),
            vec![7, 8, 1]
        );
    }

    #[test]
    fn graft_rejects_bad_targets() {
        let y = chain(1);
        assert_eq!(
            y.graft(&[Node::leaf(7)], &[2]).unwrap_err(),
            Error::GraftTarget { node: 2, nodes: 2 }
        );
        assert!(matches!(
            y.graft(&[Node::leaf(7)], &[]),
            Err(Error::GraftArity { .. })
        ));
    }
}
