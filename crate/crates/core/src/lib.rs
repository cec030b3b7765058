//! Exact computations with polynomial pairs `(P, Q)` describing affine
//! surfaces completed by zigzags of type `(0, -1, -a, -b)`.

pub mod aut;
pub mod error;
pub mod fibgraph;
pub mod moduli;
pub mod pair;
pub mod poly;
pub mod rational;
pub mod triangular;
pub mod words;
pub mod zigzag;

pub use error::{Error, Result};
pub use pair::{Case, PairClass};
pub use poly::Poly;
pub use rational::Rational;
