//! Reality of ideals, the vanishing-ideal test on semialgebraic sets and
//! ideal augmentation.

pub mod augment;
pub mod component;
pub mod coords;
pub mod equality;
pub mod reality;
pub mod set;

pub use augment::{augment, augment_to_fixpoint, Augmentation, Fixpoint};
pub use component::rank_at;
pub use coords::Coordinates;
pub use equality::{check_equality, ComponentOutcome, ComponentReport, Equality, EqualityVerdict};
pub use reality::{is_real, Reality, RealityCertificate, RealityVerdict};
pub use set::{Constraint, Relation, SemialgebraicSet};
