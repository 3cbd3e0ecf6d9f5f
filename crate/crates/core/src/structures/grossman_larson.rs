use crate::combinatorics::{
    heap_ordered_trees, ordered_trees, DegreeCaps, HeapOrderedTree, OrderedTree,
};
use crate::error::{Error, Result};
use crate::lincomb::{Basis, LinComb, PairComb, Rational};

use super::{AlgebraId, HopfAlgebra};

/// Trees that support the grafting product and the branch-splitting
/// coproduct of Grossman and Larson.
pub trait GraftableTree: Basis {
    const ALGEBRA: AlgebraId;

    fn single() -> Self;
    fn node_count(&self) -> usize;
    fn child_count(&self) -> usize;
    fn graft_onto(&self, y: &Self, targets: &[usize]) -> Result<Self>;
    fn restrict_mask(&self, mask: u64) -> Self;
    fn all_of_degree(n: usize, caps: &DegreeCaps) -> Result<Vec<Self>>;
    fn parse(text: &str) -> Result<Self>;
}

impl GraftableTree for OrderedTree {
    const ALGEBRA: AlgebraId = AlgebraId::Ho;

    fn single() -> Self {
        OrderedTree::single()
    }
    fn node_count(&self) -> usize {
        OrderedTree::node_count(self)
    }
    fn child_count(&self) -> usize {
        OrderedTree::child_count(self)
    }
    fn graft_onto(&self, y: &Self, targets: &[usize]) -> Result<Self> {
        self.graft(y, targets)
    }
    fn restrict_mask(&self, mask: u64) -> Self {
        OrderedTree::restrict_mask(self, mask)
    }
    fn all_of_degree(n: usize, caps: &DegreeCaps) -> Result<Vec<Self>> {
        caps.check(crate::combinatorics::ObjectKind::Ordered, n)?;
        let mut v = ordered_trees(n);
        crate::combinatorics::sort_canonical(&mut v);
        Ok(v)
    }
    fn parse(text: &str) -> Result<Self> {
        text.parse()
    }
}

impl GraftableTree for HeapOrderedTree {
    const ALGEBRA: AlgebraId = AlgebraId::Hho;

    fn single() -> Self {
        HeapOrderedTree::single()
    }
    fn node_count(&self) -> usize {
        HeapOrderedTree::node_count(self)
    }
    fn child_count(&self) -> usize {
        HeapOrderedTree::child_count(self)
    }
    fn graft_onto(&self, y: &Self, targets: &[usize]) -> Result<Self> {
        self.graft(y, targets)
    }
    fn restrict_mask(&self, mask: u64) -> Self {
        HeapOrderedTree::restrict_mask(self, mask)
    }
    fn all_of_degree(n: usize, caps: &DegreeCaps) -> Result<Vec<Self>> {
        caps.check(crate::combinatorics::ObjectKind::Heap, n)?;
        let mut v = heap_ordered_trees(n);
        crate::combinatorics::sort_canonical(&mut v);
        Ok(v)
    }
    fn parse(text: &str) -> Result<Self> {
        text.parse()
    }
}

/// Grossman-Larson Hopf algebra on a family of trees:
///
/// * `x · y = Σ_f x #_f y` over all maps `f` from the branches at the root
///   of `x` to the nodes of `y`;
/// * `Δ(x) = Σ_S x_S ⊗ x_{S^c}` over all subsets `S` of those branches.
#[derive(Clone, Debug)]
pub struct GrossmanLarson<T> {
    pub caps: DegreeCaps,
    _tree: std::marker::PhantomData<T>,
}

pub type OrderedGL = GrossmanLarson<OrderedTree>;
pub type HeapGL = GrossmanLarson<HeapOrderedTree>;

impl<T> Default for GrossmanLarson<T> {
    fn default() -> Self {
        GrossmanLarson::new(DegreeCaps::default())
    }
}

impl<T> GrossmanLarson<T> {
    pub fn new(caps: DegreeCaps) -> Self {
        GrossmanLarson {
            caps,
            _tree: std::marker::PhantomData,
        }
    }
}

impl<T: GraftableTree> GrossmanLarson<T> {
    /// The grafted trees `x #_f y` in the order the maps `f` are visited:
    /// lexicographic in the preorder indices of the nodes of `y`.
    pub fn grafts(&self, x: &T, y: &T) -> Vec<T> {
        let k = x.child_count();
        let m = y.node_count();
        let mut targets = vec![0usize; k];
        let mut out = Vec::with_capacity(m.pow(k as u32));
        loop {
            out.push(x.graft_onto(y, &targets).expect("targets are in range"));
            // odometer step, last component fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                targets[i] += 1;
                if targets[i] < m {
                    break;
                }
                targets[i] = 0;
            }
        }
    }
}

impl<T: GraftableTree> HopfAlgebra for GrossmanLarson<T> {
    type Basis = T;

    fn id(&self) -> AlgebraId {
        T::ALGEBRA
    }

    fn one(&self) -> T {
        T::single()
    }

    fn degree(&self, x: &T) -> usize {
        x.node_count() - 1
    }

    fn product(&self, x: &T, y: &T) -> LinComb<T> {
        let mut out = LinComb::zero();
        for t in self.grafts(x, y) {
            out.add_term(t, Rational::one());
        }
        out
    }

    fn coproduct(&self, x: &T) -> PairComb<T> {
        let k = x.child_count();
        assert!(k < 64, "too many branches at the root");
        let full = (1u64 << k) - 1;
        let mut out = LinComb::zero();
        for mask in 0..=full {
            out.add_term(
                (x.restrict_mask(mask), x.restrict_mask(full ^ mask)),
                Rational::one(),
            );
        }
        out
    }

    fn basis(&self, degree: usize) -> Result<Vec<T>> {
        T::all_of_degree(degree, &self.caps)
    }

    fn parse_basis(&self, text: &str) -> Result<T> {
        T::parse(text).map_err(|e| match e {
            Error::Syntax { .. } | Error::HeapOrder(_) => e,
            other => Error::Invalid(other.to_string()),
        })
    }
}
