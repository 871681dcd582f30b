//! Gröbner bases over prime fields: a signature-based algorithm and a
//! classic Buchberger algorithm, with selectable data structures.

pub mod bits;
pub mod classic;
pub mod cli;
pub mod division;
pub mod error;
pub mod field;
pub mod gen;
pub mod io;
pub mod lookup;
pub mod monomial;
pub mod poly;
pub mod queue;
pub mod ring;
pub mod sb;
pub mod spair;
pub mod stats;

pub use error::*;
pub use field::PrimeField;
pub use monomial::{Monomial, RingOrder};
pub use poly::{Polynomial, Term};
pub use ring::Ring;
