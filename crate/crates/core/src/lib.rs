//! Rothe diagrams of permutations, their standard and balanced fillings,
//! jeu de taquin and promotion, and the maps between standard Rothe
//! tableaux and reduced words.

pub mod counting;
pub mod diagram;
pub mod eg;
pub mod error;
pub mod jdt;
pub mod lifting;
pub mod par;
pub mod perm;
pub mod tableau;
pub mod verify;

pub use diagram::{Cell, Diagram, Partition};
pub use error::{Error, Result};
pub use perm::{LehmerCode, Permutation, ReducedWord, Side};
pub use tableau::Tableau;
