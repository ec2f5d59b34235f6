//! Möbius transforms of simplicial complexes over `Z/2Z`, Betti numbers of
//! Stanley–Reisner rings, and the cohomology of moment-angle complexes.
//!
//! The pieces:
//!
//! - [`powerset`]: the algebra of `Z/2Z`-valued functions on `2^[m]` and its
//!   Möbius transform;
//! - [`complex`]: simplicial complexes and their indicator functions;
//! - [`linalg`]: exact ranks, Smith normal form and chain complexes;
//! - [`hochster`]: bigraded Betti numbers through reduced cohomology of full
//!   subcomplexes, and the parity identity relating them to `M(f)`;
//! - [`compress`]: compression operators and lower-bound certificates;
//! - [`macx`]: Poincaré polynomials of (generalized) moment-angle complexes;
//! - [`oracle`]: a brute-force cellular computation for cross-checking;
//! - [`freeness`]: free coordinate subgroup actions and the
//!   Halperin–Carlsson bound;
//! - [`cli`] and [`io`]: the command-line driver and its file formats.

pub mod cli;
pub mod complex;
pub mod compress;
pub mod error;
pub mod freeness;
pub mod hochster;
pub mod io;
pub mod linalg;
pub mod macx;
pub mod oracle;
pub mod powerset;
pub mod subset;

pub use complex::{enumerate_complexes, random_complex, SimplicialComplex};
pub use error::{Error, Result};
pub use linalg::FieldTag;
pub use powerset::{BasisKind, SubsetFn};
pub use subset::Subset;
