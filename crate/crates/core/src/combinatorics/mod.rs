//! Basis objects of the four families (planar binary trees, ordered trees,
//! heap-ordered trees, permutations), their `\` operations and
//! decompositions, the bijections ψ and φ, and enumeration by degree.

mod enumerate;
mod heap;
mod ordered;
mod pbt;
mod perm;
pub(crate) mod tree;

pub(crate) use enumerate::sort_canonical;
pub use enumerate::{
    catalan, enumerate, factorial, heap_ordered_trees, irreducible_permutations,
    irreducible_planar_binary_trees, ordered_trees, planar_binary_trees, planted_trees, DegreeCaps,
    Object, ObjectKind,
};
pub use heap::{HeapOrderedTree, OrderPair};
pub use ordered::OrderedTree;
pub use pbt::PlanarBinaryTree;
pub use perm::Permutation;

/// ψ: planar binary trees with `n` leaves onto ordered trees with `n` nodes.
pub fn psi(t: &PlanarBinaryTree) -> OrderedTree {
    t.to_ordered()
}

pub fn psi_inv(x: &OrderedTree) -> PlanarBinaryTree {
    PlanarBinaryTree::from_ordered(x)
}

/// φ: permutations of `n` letters onto heap-ordered trees on `n + 1` nodes.
pub fn phi(w: &Permutation) -> HeapOrderedTree {
    HeapOrderedTree::from_permutation(w)
}

pub fn phi_inv(x: &HeapOrderedTree) -> Permutation {
    x.to_permutation()
}
