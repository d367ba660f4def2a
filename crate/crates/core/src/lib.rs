//! Exact computation of Casson-Walker invariants of Dehn surgeries.
//!
//! Everything is exact: rationals are arbitrary-precision fractions, Dedekind
//! sums are evaluated by reciprocity descent (with the defining summation kept
//! as a cross-checking oracle), and the surgery formulas for knots and
//! two-component links in the 3-sphere are implemented term by term. On top of
//! the invariant sit two decision pipelines:
//!
//! * an obstruction engine that decides when a surgered manifold can be
//!   reproduced by surgery on a knot it contains (homology counting, a divisor
//!   obstruction, a Dedekind-sum congruence, and per-case residue analysis),
//! * a cosmetic-crossing checker driven by a bundled table of knots whose
//!   double branched covers are known surgeries.
//!
//! The `cli` module exposes the same operations as a command-line tool; a
//! C-ABI wrapper lives in the sibling `cwsurgery-ffi` crate.

#![warn(missing_docs)]
#![warn(clippy::all)]
#![forbid(unsafe_code)]

pub mod casson_walker;
pub mod cli;
pub mod cosmetic;
pub mod dedekind;
pub mod error;
pub mod obstruction;
pub mod rational;

pub use casson_walker::{
    lambda_knot, lambda_link, lambda_link_breakdown, linking_form, torus_knot_a2, v3,
    FramedKnotSurgery, LambdaLinkBreakdown, LinkingForm, Slope, TwoComponentLinkData,
};
pub use cosmetic::{
    bundled_knot_table, check_condition_c, cosmetic_verdict, load_knot_table, parse_knot_table,
    reproduce_cor_ten, ConditionStatus, Conditions, CorTenPartition, CorTenReport, CosmeticReport,
    CosmeticVerdict, KnotRecord, SurgeryWitness, TriState, COR_TEN_NAMES,
};
pub use dedekind::{dedekind_sum, dedekind_sum_naive, dedekind_symbol, sawtooth};
pub use error::{Error, Result};
pub use obstruction::{
    certify_complement, cw_residual, d0_decompose, dedekind_congruence, eliminate_case,
    homology_solutions, key_obstruction, obstruct_slope, theorem_main_scan, CaseOutcome,
    Certificate, CongruenceOutcome, D0Decomposition, KeyOutcome, ManifoldClass,
    ObstructionInstance, ObstructionReport, ObstructionVerdict, ScanReport,
};
pub use rational::{
    gcd_pair, make_rational, squarefree_decompose, Rational, SquareFreeDecomposition,
};
