//! Exact arithmetic: Gaussian rationals, sparse (Laurent) polynomials,
//! rank-≤2 integer lattices and the torus subgroups they cut out.

pub mod lattice;
pub mod poly1;
pub mod ratfn;
pub mod rational;
pub mod skewpoly;
pub mod torus;
pub mod turn;

pub use lattice::{hnf_basis, snf_quotient, IntLattice2, IntVec2, SmithQuotient};
pub use poly1::Poly1;
pub use ratfn::RatFn;
pub use rational::ComplexRational;
pub use skewpoly::SkewPoly;
pub use torus::{annihilator, character, GroupKind, SymmetryGroup, TurnPair};
pub use turn::RationalTurn;
