//! Exact computation in the Grossman-Larson Hopf algebras of ordered and
//! heap-ordered trees, in the shuffle and tensor algebras that realize
//! gr(YSym), gr(SSym) and their duals, and machine checks of the
//! isomorphisms between them.
//!
//! ```
//! use hopf_forest::combinatorics::{phi, Permutation};
//! use hopf_forest::structures::{HeapGL, HopfAlgebra};
//!
//! let h = HeapGL::default();
//! let x = phi(&"21".parse::<Permutation>().unwrap());
//! let y = phi(&"1".parse::<Permutation>().unwrap());
//! assert_eq!(h.product(&x, &y).len(), 4);
//! ```

pub mod combinatorics;
pub mod error;
pub mod iso;
pub mod lincomb;
pub mod machinery;
pub mod report;
pub mod structures;

pub use error::{Error, Result};
pub use lincomb::{Basis, LinComb, PairComb, Rational};
