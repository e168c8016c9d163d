//! Combinatorics of nilpotent-orbit limits for the classical real groups.
//!
//! This crate carries the exact (integer and rational) side of the project:
//!
//! * [`partition`] — integer partitions, admissibility per classical family,
//!   the dominance order, and parity split/merge;
//! * [`diagram`] — signed Young diagrams of signature `(p,q)`, the `L_{r,s}`
//!   box-insertion operator, the spectral recursion `sigma_lambda` and its
//!   inverse;
//! * [`limits`] — Richardson partitions of hyperbolic spectra, the limit maps
//!   for `SL(n,R)` and `SU(p,q)`, and the minimal-orbit tables;
//! * [`poset`] — dominance posets of orbit labels with DOT export.
//!
//! Everything here is pure value manipulation over `alloc`; IO, numerics and
//! the CLI live in the companion `orbit-limits` crate.
#![no_std]

extern crate alloc;

pub mod diagram;
pub mod limits;
pub mod partition;
pub mod poset;

pub use diagram::{
    inverse_sigma, l_star, sigma_lambda, DiagramError, EllipticSpectrum, Rat, Row, Sign,
    SignedYoungDiagram, SpectrumError,
};
pub use limits::{
    elliptic_even_limit, l_map, l_map_limit, limit_elliptic_supq, limit_hyperbolic_sl,
    minimal_limit, orbit_dimension, richardson_partition, GroupLabel, HyperbolicSpectrum,
    LimitError, LimitSet, MinimalParams, MinimalType, OrbitComponent, PartitionComponent,
    Provenance, RealForms,
};
pub use partition::{enumerate_partitions, ClassicalType, Family, Partition, PartitionError};
pub use poset::{OrbitPoset, PosetError};
