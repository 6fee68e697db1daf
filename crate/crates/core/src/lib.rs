//! Exact central idempotents of the Brauer algebra `B_n(δ)`.
//!
//! Everything here works over the field of rational functions `ℚ(δ)` with
//! arbitrary-precision integer coefficients, so the printed coefficient tables
//! of the splitting idempotents `φ_n(ℓ)` and the primitive central idempotents
//! `φ_n(λ)` can be reproduced bit for bit.
//!
//! The crate is `no_std` and only needs an allocator. File formats, the command
//! line and golden data live in the `brauer` companion crate.
//!
//! Layout, bottom up:
//!
//! * [`exactring`]: `ℤ[δ]`, `ℚ(δ)`, the subring `K` and specialisation of `δ`.
//! * [`diagram`]: pair partitions, composition with loop counting, generators.
//! * [`spore`]: the {N,S,P}-tableau labelling of `S_n`-conjugacy classes.
//! * [`central`]: orbit-sum elements of the centraliser and their products.
//! * [`solver`]: the linear system for `φ_n(ℓ)` and its verification.
//! * [`symgrp`]: partitions, characters, `e_λ` and `φ_n(λ)`.
//! * [`analysis`]: poles, signed sums and specialisation of whole elements.
#![no_std]

extern crate alloc;

pub mod analysis;
pub mod central;
pub mod diagram;
mod error;
pub mod exactring;
pub mod solver;
pub mod spore;
pub mod symgrp;

pub use central::{CentralElement, DiagramVector, OrbitIndex, Side};
pub use diagram::{Diagram, EdgeType};
pub use error::{Error, Result};
pub use exactring::{Polynomial, Rational, RationalFunction};
pub use spore::SporeTableau;
pub use symgrp::IntegerPartition;
