//! Exact rational coefficients, formal linear combinations over canonical
//! basis objects, and the convolution algebra of graded endomorphisms.

mod comb;
mod endo;
mod rational;

pub use comb::{Basis, LinComb, PairComb, TensorComb, TensorPower};
pub use endo::GradedEndo;
pub use rational::Rational;
