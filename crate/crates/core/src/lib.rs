//! Finite belief structures with exact arithmetic.
//!
//! The crate models a finite state space together with, for each player, an
//! accessibility relation or the equivalent information structure. On top of
//! that it provides blindspots, group and common information, informational
//! decision functions with the agreement check, the belief operator and its
//! modal-axiom audit, credal sets, and the belief structures induced by types
//! in an epistemic extension of a strategic game. Every theorem-level claim
//! has a verifier returning a [`Report`] with concrete witnesses.

pub mod beliefs;
pub mod decisions;
pub mod error;
pub mod frames;
pub mod games;
pub mod group;
pub mod rational;
pub mod measure;
pub mod report;
pub mod search;
pub mod space;

pub use error::{Error, Result};
pub use frames::{blindspots, image, info_from_relation, relation_from_info, InfoStructure, Relation};
pub use group::Profile;
pub use measure::Measure;
pub use rational::Rational;
pub use report::{Check, Outcome, Report};
pub use space::{Event, StateSpace};
