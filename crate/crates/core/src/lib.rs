//! Garside-theoretic algorithms for Artin braid groups: permutation braids
//! and their prefix lattice, left/right normal forms, conjugacy-invariant
//! sets (cycling, cyclic sliding, ultra summit sets), summit conjugation
//! graphs, centralizer computation for elements with minimal conjugacy
//! structure, and a sampling harness for studying how common that structure
//! is among random braids.

pub mod braid;
pub mod centralizer;
pub mod conjugacy;
pub mod error;
pub mod genericity;
pub mod normal;
pub mod uss;

pub use braid::{delta, GeneratorLetter, SimpleElement, StrandCount};
pub use error::{Error, Result};
pub use normal::{BraidWord, NormalForm, RightNormalForm};
