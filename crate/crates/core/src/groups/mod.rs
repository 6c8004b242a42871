//! Concrete finite permutation groups.

mod aut;
mod group;
pub mod named;
mod perm;

pub use aut::Automorphism;
pub use group::{direct_product, ConjugacyClass, FiniteGroup, Period, SubgroupHandle};
pub use perm::Permutation;

#[cfg(test)]
mod tests;
