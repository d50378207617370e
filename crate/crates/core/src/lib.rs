//! Quantum error-correcting codes from projective representations of
//! finite groups.

pub mod channels;
pub mod cocycle;
pub mod codes;
pub mod config;
pub mod error;
pub mod group;
pub mod io;
pub mod linalg;
pub mod models;
pub mod phase;
pub mod projrep;
pub mod reproduce;
pub mod search;
pub mod zmod;

pub use cocycle::{Cocycle, PhaseFunction};
pub use config::Caps;
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupSpec, Subgroup};
pub use phase::Phase;
pub use projrep::{Character, ProjectiveRep};
pub use models::{CliffordFamily, ErrorModel, ModelSpec, ProjectiveErrorModel};
pub use codes::{CodeReport, CodeSpace};
pub use channels::KrausChannel;
