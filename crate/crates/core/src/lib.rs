//! Exact computation of simple Hurwitz numbers and of the generating
//! functions of `λ_g λ_{g-1}` Hurwitz–Hodge integrals.
//!
//! * [`series`]: truncated power series over the rationals.
//! * [`sym_group`]: partitions, permutations and brute-force monodromy counts.
//! * [`hurwitz`]: Hurwitz numbers from the enumeration oracle, the
//!   cut-and-join recursion, and the one-part closed form.
//! * [`identities`]: residual-series checks of the generating-function
//!   identities and the Hodge integrals recovered from them.

pub mod error;
pub mod hurwitz;
pub mod identities;
pub mod rational;
pub mod series;
pub mod sym_group;

pub use error::{Error, Result};
pub use hurwitz::{HurwitzMethod, HurwitzSource, HurwitzValue};
pub use identities::{HodgeIntegralValue, IdentityKind, IdentityReport};
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use sym_group::{EnumerationBudget, Partition, Permutation};
