//! Exact calculator for the enumerative invariants of holomorphic
//! foliations by curves on projective `n`-space whose singular set contains
//! smooth complete-intersection components.
//!
//! The crate evaluates the closed-form counts (component contribution `ν`,
//! blowup singularity totals, isolated-singularity census, counts on an
//! invariant subvariety, and the associated upper bounds) over
//! arbitrary-precision integers, and cross-validates every formula against
//! an independent Chow-ring engine for the blowup along the singular
//! component. All arithmetic is exact; there is no floating point anywhere.
//!
//! Modules:
//!
//! * [`symfun`] — binomials, complete homogeneous (`W`), elementary (`σ`),
//!   and tangent-bundle (`τ`) symmetric functions;
//! * [`chowring`] — classes on the exceptional divisor, normal forms,
//!   Chern classes, exact integration; the verification oracle;
//! * [`invariants`] — the headline counts for a foliation with
//!   complete-intersection singular components;
//! * [`subvariety`] — counts on an invariant complete intersection
//!   containing the singular component, and the upper bound on isolated
//!   singularities off the component;
//! * [`consistency`] — the identity-check harness with exact integer
//!   sweeps;
//! * [`cli`] — command-line front end (`folcensus`).

pub mod chowring;
pub mod cli;
pub mod consistency;
pub mod error;
pub mod invariants;
pub(crate) mod jsonnum;
pub mod subvariety;
pub mod symfun;

pub use error::Error;
