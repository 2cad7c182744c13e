//! Exact symbolic computations around nets of quadrics in P^3, Cayley
//! octads, and the Jacobian ring of the double cover of P^3 branched
//! along eight hyperplanes.

pub mod dual;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod hyperelliptic;
pub mod ivhs;
pub mod jacobian;
pub mod linalg;
pub mod monomial;
pub mod octad;
pub mod poly;
pub mod quadric;
pub mod rational;
pub mod wedge;

pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Ring, Variable};
pub use rational::Rational;
