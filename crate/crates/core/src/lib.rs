//! Exact solver for two-variable equations `w(x,y) = u` over free groups.

pub mod aut;
pub mod error;
pub mod format;
pub mod oracle;
pub mod solver;
pub mod stallings;
pub mod word;

pub use aut::AutF2;
pub use error::{Error, Result};
pub use solver::{describe_variety, Budgets, EquationInstance, JsjCase, VarietyDescription};
pub use stallings::{StallingsGraph, SubgroupBasis};
pub use word::{Alphabet, Letter, PowerDecomposition, Word};
