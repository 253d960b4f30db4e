//! Exact arithmetic for the Leonardo family of integer sequences and their
//! quaternion lifts.
//!
//! The crate is organised bottom-up:
//!
//! - [`sequences`]: exact and modular evaluation of the Fibonacci-p, Lucas-p,
//!   Leonardo-p, Lucas-Leonardo-p and Francois sequences, Pisano periods and
//!   sequence periods modulo a prime.
//! - [`ring`] and [`quaternion`]: generalized quaternion algebras `(a, b)` over
//!   the integers or a prime field, with norm, conjugate, inverse and
//!   zero-divisor witnesses.
//! - [`leonardo`]: quaternions built from four consecutive sequence terms,
//!   closed-form norms and the generating-function expansion.
//! - [`classification`]: which members of a quaternion sequence are zero
//!   divisors over `F_q`, as residue classes of the index.
//! - [`verifier`]: a registry of identities evaluated exactly over parameter
//!   grids, with counterexample capture.
//!
//! ```
//! use leoquat::classification::classify;
//! use leoquat::leonardo::QuaternionFamily;
//! use leoquat::sequences::SequenceFamily;
//!
//! let family = QuaternionFamily::new(SequenceFamily::LUCAS_LEONARDO);
//! let c = classify(family, 3).unwrap();
//! assert_eq!(c.modulus, 8);
//! assert_eq!(c.residues, vec![0, 2, 3]);
//! ```

pub mod classification;
pub mod error;
pub mod leonardo;
pub mod quaternion;
pub mod ring;
pub mod sequences;
pub mod verifier;

pub use error::{Error, Result};
