//! Exact and lower-bound statistics of 2-part element orders (the largest
//! power of two dividing an element's order) in symmetric groups and in the
//! classical matrix groups of odd characteristic.
//!
//! The crate has three layers:
//!
//! * exact combinatorics in symmetric groups
//!   ([`symmetric`], [`stirling_sums`]): partitions, Stirling numbers of the
//!   first kind, and the Euler-product proportions by 2-part order;
//! * Weyl-class machinery for the classical families ([`weyl`], [`bounds`],
//!   [`involutions`]): maximal-torus shapes per class, torus-sum lower
//!   bounds per 2-part order, closed-form per-family rows, and
//!   involution-pair probabilities;
//! * brute-force ground truth ([`census`]): breadth-first enumeration of
//!   small matrix groups over finite fields with exact censuses by 2-part
//!   order, used to dominate every bound the crate produces.
//!
//! All probabilities are exact rationals unless a value is inherently
//! irrational (square-root floors), in which case it is flagged as a float.

pub mod acceptance;
pub mod bounds;
pub mod census;
pub mod error;
pub mod involutions;
pub mod rat;
pub mod stirling_sums;
pub mod symmetric;
pub mod table_data;
pub mod weyl;

pub use error::{Error, Result};
pub use rat::Rat;
