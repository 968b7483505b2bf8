//! Exact arithmetic for powers of edge ideals.
//!
//! The crate covers monomial ideals and their powers, the graph families
//! whose edge ideals are studied here (d-paths, anti-d-paths, stars and
//! degree-2 squarefree lexsegments), linear-quotient certificates and the
//! Betti numbers they imply, an independent Taylor-complex Betti oracle,
//! and associated primes of powers.

pub mod ass;
pub mod audit;
pub mod betti_oracle;
pub mod cli;
pub mod error;
pub mod families;
pub mod gf2;
pub mod graph;
pub mod ideal;
pub mod linear_quotients;
pub mod monomial;
pub mod staircase;
pub mod verify;

pub use error::{Error, Result};
pub use families::{anti_d_path, d_path, lexsegment_final, lexsegment_initial, star, Family, GeneratorOrder};
pub use graph::{Bipartiteness, Graph};
pub use ideal::{minimalize, MonomialIdeal, PrimeSupport};
pub use monomial::Monomial;
