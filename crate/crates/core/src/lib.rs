//! Numerical laboratory for the thermodynamic formalism of real quadratic
//! maps: combinatorial two-variable series in extended log-domain
//! arithmetic, itinerary schedules, high-precision real dynamics, parameter
//! search by itinerary prefix, pressure computation through periodic orbits
//! and an inducing scheme, and equilibrium-measure approximation.

pub mod frac;
pub mod logdomain;

pub use frac::Frac;
pub use logdomain::LogValue;
