//! Hodge-realized computations around the Kapranov motivic zeta function.
//!
//! Classes of smooth projective varieties are modeled by Hodge diamonds and
//! pushed into `Z[u, v]` through the E-polynomial, with the Lefschetz class
//! `L = [A^1]` going to `uv`. On top of that sit the coefficient generator
//! for `sum [Sym^n X] t^n`, three notions of rationality for power series
//! over a ring, and the geometric-genus separation argument for Hankel
//! determinants of surface zeta functions.
//!
//! The Grothendieck ring itself is never represented: equality of classes
//! there has no known normal form. Every verdict produced here is about a
//! realization or about genus data, and every rationality verdict is about
//! a finite prefix.

pub mod algebra;
pub mod claim;
pub mod error;
pub mod hodge;
pub mod rationality;
pub mod zeta;

pub use error::{Error, Result};
