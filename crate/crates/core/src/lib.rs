//! Fellow-traveler divergence of normal forms in finitely generated groups.
//!
//! Groups are given by a [`GroupModel`] (generator multiplication on
//! canonical elements) and normal forms by a [`NormalFormProvider`]. The
//! [`fellow`] module measures how far the normal forms of neighbouring
//! elements drift apart when read synchronously, and checks the geometric
//! properties of normal forms on finite balls. [`transforms`] rewrites
//! normal forms into slower-converging ones.

pub mod ball;
pub mod bs;
pub mod error;
pub mod fellow;
pub mod group;
pub mod lamplighter;
pub mod transforms;
pub mod word;

pub use ball::{bfs_ball, bfs_ball_with_budget, BallEntry, BallIndex, DEFAULT_BUDGET};
pub use bs::{BaumslagSolitar, BsBlock, BsNormalForm, BsParams, TSign};
pub use error::{Error, Result};
pub use fellow::{
    check_nf_property, divergence, fit_bound, loop_cells, s_curve, verify_coarse_leq, BsCanonical,
    CoarseCheck, GrowthModel, IntegerPowers, LampSpiral, NfProperty, NormalFormProvider, PlaneLex,
    PropertyOutcome, SCurve, SCurveOptions,
};
pub use group::{evaluate, GroupModel, IntegerLine, IntegerPlane, Point};
pub use lamplighter::{LampElement, Lamplighter};
pub use word::{Alphabet, GenSymbol, Word};
