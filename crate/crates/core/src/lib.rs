//! Derivations, integrations and Zinbiel algebras over exact coefficient
//! rings, with randomized law checking.

pub mod calculus;
pub mod carrier;
pub mod cli;
pub mod constructions;
pub mod equivalence;
pub mod error;
pub mod instances;
pub mod laws;
pub mod linalg;
pub mod operator;
pub mod sample;
pub mod scalar;
mod text;
pub mod zinbiel;

pub use calculus::{FtcPair, Morphism};
pub use carrier::{Carrier, Element};
pub use error::{Error, Result};
pub use laws::{LawReport, Status};
pub use operator::{LinearOperator, ModuleAction, Space};
pub use sample::{SampleConfig, Sampler};
pub use scalar::{Ring, Scalar};
pub use zinbiel::ZinbielInstance;
