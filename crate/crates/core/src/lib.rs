//! Finite order theory for posets with an antitone involution.
//!
//! The crate covers the cone calculus on finite posets ([`order`]), the
//! classification of involutive posets into pseudo-Kleene, Kleene, strong,
//! strict and Boolean posets ([`involution`]), the Dedekind-MacNeille
//! completion ([`completion`]), commutative meet-directoids and their
//! identities ([`directoid`]), residuation operators ([`residuation`]), the
//! twist construction ([`twist`]), and an exhaustive audit engine over small
//! posets ([`enumeration`], [`audit`]).

pub mod audit;
pub mod completion;
pub mod directoid;
pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod involution;
pub mod io;
pub mod order;
pub mod residuation;
pub mod twist;

pub use error::{Error, Result};
pub use involution::InvolutivePoset;
pub use order::{are_isomorphic, DistributivityForm, Poset, Subset};
