//! Exact broadcast domination on small graphs.
//!
//! A *broadcast* gives some vertices a positive integer strength; a vertex
//! of strength `s` covers everything within `s` hops, itself included. A
//! broadcast is *dominating* when every vertex is covered, and its *cost*
//! is the sum of the strengths. The broadcast domination number `γ_b(G)`
//! is the least cost of a dominating broadcast.
//!
//! The crate provides:
//!
//! * [`Graph`] and its [`metrics`] (distances, eccentricity, radius, center);
//! * generators for paths, cycles, sunlets and branched sunlets in
//!   [`families`];
//! * [`broadcast`] assignments with coverage, domination and efficiency
//!   checks;
//! * the known optimal placements in [`constructions`] and closed forms in
//!   [`formulas`];
//! * an exact [`solver`] used to check all of the above;
//! * JSON and DOT formats in [`io`].
//!
//! ```
//! use broadcast_domination::prelude::*;
//!
//! let spec = FamilySpec::SunletDeg { m: 6, n: 3 };
//! let g = generate(&spec).unwrap();
//! let best = solve_exact(&g, &SolveOptions::default()).unwrap();
//! assert_eq!(best.gamma_b, 6);
//! assert_eq!(gamma_b_formula(&spec).unwrap(), Formula::Exact(6));
//! ```

pub mod broadcast;
pub mod constructions;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod solver;

pub use broadcast::{BroadcastAssignment, CoverageReport};
pub use error::{Error, Result};
pub use families::{FamilyKind, FamilySpec};
pub use graph::{Graph, Role};
pub use metrics::EccentricityProfile;
pub use solver::{CostBound, SolveOptions, SolveResult};

pub mod prelude {
    pub use crate::broadcast::{cost, coverage, BroadcastAssignment, CoverageReport};
    pub use crate::constructions::{
        construct, construct_cycle, construct_path_standard, construct_sunlet, construct_sunlet_deg,
    };
    pub use crate::families::{generate, FamilyKind, FamilySpec};
    pub use crate::formulas::{
        gamma_b_formula, radius_formula, verify_family, Formula, VerifyRanges,
    };
    pub use crate::graph::{Graph, Role};
    pub use crate::metrics::{distances, metrics, EccentricityProfile};
    pub use crate::solver::{
        solve_exact, solve_exact_efficient, CostBound, SolveOptions, SolveResult,
    };
    pub use crate::{Error, Result};
}

// The guide in `book/` is compiled into doctests so its snippets stay in
// step with the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/broadcasts.md")]
    mod broadcasts {}
    #[doc = include_str!("../../../book/src/paths-and-cycles.md")]
    mod paths_and_cycles {}
    #[doc = include_str!("../../../book/src/sunlets.md")]
    mod sunlets {}
    #[doc = include_str!("../../../book/src/solver.md")]
    mod solver {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
