//! Design and verification of time-invariant LDPC convolutional codes
//! (spatially coupled LDPC codes) with small syndrome former constraint
//! length.
//!
//! The crate works directly on the syndrome former `H_s`, an `a × L_h`
//! binary matrix whose transposed replicas, each shifted down by `c` rows,
//! tile the semi-infinite parity-check matrix. It provides
//!
//! * conversion between `H_s` and the polynomial matrix `H(x)` ([`matrix`]),
//! * cycle detection from the differences between ones in each row of
//!   `H_s` ([`diff`]),
//! * an independent girth oracle on finite windows of the Tanner graph
//!   ([`tanner`]),
//! * closed-form lower bounds on `L_h` for girth 6 and 8 ([`bounds`]),
//! * exhaustive and randomized searches for short syndrome formers
//!   ([`search`]).

pub mod bounds;
pub mod diff;
pub mod error;
pub mod io;
pub mod known;
pub mod matrix;
mod parallel;
pub mod params;
pub mod search;
pub mod tanner;

pub use bounds::{
    bound, bound_g6, bound_g8, construct_prop1, construct_prop2, BoundQuery, BoundResult,
    Feasibility,
};
pub use diff::{
    find_4cycles, find_cycles, girth_via_differences, CycleWitness, Difference, DifferenceTable,
    Sign, WitnessLine,
};
pub use error::{Error, ParseError, Result};
pub use matrix::{expand_window, hs_to_poly, poly_to_hs, PolyMatrix, SyndromeFormer, WindowMatrix};
pub use params::{derive_params, CodeParams, Derived, Rate};
pub use search::{
    exhaustive_min_lh, montecarlo_search, verify, Mode, Proposal, SearchOutcome, SearchSpec,
    VerifyReport,
};
pub use tanner::{conv_girth, tanner_girth, Girth, TannerGraph};
