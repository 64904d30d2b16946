//! Heyting algebras of Dyck paths and monotone lattice paths under the
//! dominance order.

pub mod birkhoff;
pub mod error;
pub mod heyting;
pub mod lattice;
pub mod oracle;
pub mod paths;

pub use birkhoff::{BirkhoffPath, OrderIdeal, TrianglePoset};
pub use error::{Error, HeightViolation, Result, WordViolation};
pub use heyting::{implies, pseudo, HeytingPath};
pub use lattice::{
    binomial, join, leq, meet, word_prefix_leq, EnumerationGuard, Family, LatticePath, LatticeSnapshot,
    Params,
};
pub use oracle::{verify_family, Check, FamilyReport, Status, VerifyOptions};
pub use paths::{DyckWord, HeightSeqA, HeightSeqB, MonotonePath, Step, WordKind};
