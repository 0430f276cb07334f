pub mod algset;
pub mod checks;
pub mod error;
pub mod field;
pub mod linalg;
pub mod ore;
pub mod report;
pub mod series;
pub mod similarity;
mod text;
pub mod wedderburn;

pub use error::{Error, Result};
pub use field::{ArithOp, BackendKind, FieldElement, TwistedField};
pub use ore::{Factorization, SkewPoly, SkewRing};
pub use algset::{AlgebraicSet, ClassDecomposition, DependenceLocus, RankDecomposition};
pub use report::IdentityCheck;
pub use similarity::{Eigenring, HomSpace};
pub use wedderburn::{BoundedVerdict, IdealizerSpace, ProductReport, Verdict, WedderburnReport};
