//! Exact computations on monomial ideals, specialised to edge ideals of
//! weighted oriented graphs.
//!
//! The crate covers irreducible decompositions and associated primes,
//! ordinary versus symbolic powers, strong vertex covers, and the covering,
//! Newton and irreducible polyhedra used to study integral closures. All
//! arithmetic is exact.

pub mod decomposition;
pub mod error;
pub mod fixtures;
pub mod ideal;
pub mod monomial;
pub mod oracles;
pub mod polyhedra;
pub mod symbolic;
pub mod wog;

pub use decomposition::{
    associated_primes, embedded_primes, exponent_duality, irreducible_decomposition,
    max_associated_primes, minimal_primes, IrreducibleDecomposition,
};
pub use error::{Error, Result};
pub use ideal::{IrreducibleIdeal, MonomialIdeal, MonomialPrime};
pub use monomial::ExponentVector;
pub use polyhedra::{CoveringFormPolyhedron, PolyLimits, RationalVector};
pub use symbolic::{
    compare_powers, is_ntf_up_to, localize, symbolic_power_ass, symbolic_power_min, NtfReport,
    SymbolicPowerReport,
};
pub use wog::{Classification, WeightedOrientedGraph};
