//! Dyck and bilateral lattice paths, two weighting schemes, and the
//! bijection connecting them.
//!
//! A path of length `2n` takes unit up/down steps from `(0, 0)` to
//! `(2n, 0)`. The *bi-banded* scheme weighs each edge `a` or `b` by the
//! horizontal band it crosses; the *peak-counting* scheme weighs each peak
//! vertex `m`. [`phi`] maps a path of bi-banded weight `a^(2n-2v) b^(2v)`
//! to one of peak weight `m^(v+1)`, bijectively on the bilateral class and
//! on the Dyck subclass, which makes the two weight polynomials share their
//! coefficients: Narayana numbers for Dyck paths, squared binomials for
//! bilateral ones.
//!
//! The pieces compose exactly as that description suggests:
//!
//! ```
//! use pathforge::{phi, bibanded_monomial, peak_monomial, Path};
//!
//! let path: Path = "UUDDDU".parse()?;
//! let image = phi(&path);
//! assert_eq!(image.to_string(), "UDUDDU");
//! assert_eq!(bibanded_monomial(&path).to_string(), "a^2b^4");
//! assert_eq!(peak_monomial(&image).to_string(), "m^3");
//! # Ok::<(), pathforge::Error>(())
//! ```

pub mod bijection;
pub mod checkmark;
pub mod enumeration;
mod error;
pub mod path;
pub mod weight;

pub use bijection::{
    check_weight_correspondence, phi, phi_inverse, PathMapping, SplitWord, WeightCorrespondence,
};
pub use checkmark::{from_checkmarks, to_checkmarks, CheckmarkPair, CheckmarkSeq, Mark};
pub use enumeration::{
    bilateral_coeff, binomial, catalan, closed_form_polynomial, enumerate_paths,
    enumerate_paths_with_limit, narayana, verify, verify_with_limit, weight_polynomial,
    weight_polynomial_with_limit, Paths, Scheme, VerifyReport, WeightPolynomial, DEFAULT_MAX_N,
};
pub use error::{Error, Result};
pub use path::{Lattice, Path, Step, TurnList, Word};
pub use weight::{band_of, bibanded_monomial, peak_monomial, Band, BiBandedMonomial, PeakMonomial};
