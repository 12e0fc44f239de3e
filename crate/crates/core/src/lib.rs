//! Integer polynomial families with abnormally close roots.
//!
//! The crate builds the Catalan-number families `P_{d,a}` exactly, checks
//! their algebraic identities (degree collapse, height, irreducibility by
//! Eisenstein on the reciprocal), finds all complex roots at adaptive
//! arbitrary precision, and certifies lower bounds on the separation
//! exponent `e(P) = -ln sep(P) / ln H(P)` from exact rational sign changes.
//!
//! Module map:
//!
//! * [`poly`]: exact integer polynomials, evaluation, discriminant.
//! * [`bigfloat`]: binary arbitrary-precision reals and complexes.
//! * [`family`]: the constructions and their close-pair predictions.
//! * [`irreducible`]: Eisenstein certificates.
//! * [`rootfind`]: Aberth iteration and exact bracket isolation.
//! * [`sep`]: separation, exponents, certificates, scans.
//! * [`cli`]: the `polysep` command line front end.

pub mod bigfloat;
pub mod cli;
pub mod error;
pub mod family;
pub mod irreducible;
pub mod numfmt;
pub mod poly;
pub mod rootfind;
pub mod sep;
pub mod verify;

pub use bigfloat::{BigComplex, BigFloat, Round};
pub use error::{Error, Result};
pub use family::{ClosePairPrediction, FamilyInstance};
pub use irreducible::EisensteinCertificate;
pub use poly::IntPolynomial;
pub use rootfind::{RealBracket, RootSet};
pub use sep::{ScanRow, SepReport};
