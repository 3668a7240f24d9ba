//! Exact computations around the essential dimension of quiver
//! representations.
//!
//! The crate classifies quivers into finite, tame and wild type, computes
//! null roots and real roots, and finds the coefficient `Λ_Q` governing the
//! quadratic growth of essential dimension for wild quivers. All arithmetic
//! is over arbitrary-precision rationals.
//!
//! ```
//! use quiver_ed::{catalog, classify, lambda, rational::ratio};
//!
//! let k3 = catalog::kronecker(3);
//! assert_eq!(classify::rep_type(&k3).aggregate, classify::RepType::Wild);
//! assert_eq!(lambda::lambda_max(&k3)?.lambda_max, ratio(1, 4));
//! # Ok::<(), quiver_ed::Error>(())
//! ```

pub mod catalog;
pub mod classify;
pub mod error;
pub mod forms;
pub mod growth;
pub mod lambda;
pub mod linalg;
pub mod linrep;
pub mod quiver;
pub mod rational;

pub use classify::{rep_type, RepType};
pub use error::{Error, Result};
pub use forms::{CartanMatrix, DimVector};
pub use quiver::{Arrow, Quiver, VertexSet};
pub use rational::Rational;
