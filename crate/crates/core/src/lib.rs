//! Noncommutative symmetric functions and the combinatorics of their
//! Lagrange-type inversion: parking functions, ordered trees and the
//! shuffle graph on generalized compositions.

pub mod caps;
pub mod coeff;
pub mod comp;
pub mod error;
pub mod invert;
pub mod ncsf;
pub mod parking;
pub mod pgraph;
pub mod trees;
pub mod verify;

pub use caps::Caps;
pub use coeff::{Coefficient, QSeriesTrunc, Rational};
pub use comp::{Composition, GeneralizedComposition, Word};
pub use error::{Error, Result};
pub use ncsf::{Basis, NcsfElement, XSeries};
pub use parking::ParkingFamily;
