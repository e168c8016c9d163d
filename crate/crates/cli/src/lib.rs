//! Numerical oracle and verification suites for the orbit-limit
//! combinatorics in `orbit-limits-core`.
//!
//! The [`oracle`] module builds explicit complex matrices, reads Jordan and
//! signed types off thresholded rank sequences, samples generic nilradical
//! elements, and evaluates the constructive scaling curves. The [`verify`]
//! module packages the cross-checks between those measurements and the
//! combinatorial predictions into seeded, reproducible reports.

pub mod oracle;
pub mod verify;
