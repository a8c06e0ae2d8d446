//! Strong Gröbner bases over the integers and their application to signed
//! polyomino tilings in the hexagonal lattice.
//!
//! The crate is organised bottom-up:
//!
//! * [`polyring`]: sparse multivariate polynomials with big-integer coefficients
//!   under lexicographic order, with two conventions for coefficient remainders.
//! * [`groebner`]: strong reduction and Buchberger completion with critical
//!   pairs, plus a checker for strong bases.
//! * [`bones`]: the n-in-line polyomino ideal, its explicit four-element basis
//!   and closed-form remainders of triangular regions.
//! * [`tiling`]: regions, Newton polynomials, signed-tiling decisions and
//!   certificates.
//! * [`homology`]: Smith normal form and tile homology groups.
//! * [`brion`]: short rational forms of triangle transforms.
//! * [`oracle`]: brute-force integer linear algebra cross-check.
//! * [`cli`]: the `tilegb` command line.

pub mod bones;
pub mod brion;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod homology;
pub mod matrix;
pub mod oracle;
pub mod polyring;
pub mod tiling;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, ReductionResult, VerifyReport};
pub use polyring::{CoeffConvention, Monomial, Polynomial, TermOrder};
