//! Hand-transcribed example structures shipped with the crate.

use crate::involution::InvolutivePoset;
use crate::io::PosetDocument;
use crate::order::Poset;

/// `(name, file contents)` for every bundled fixture.
pub const ALL: [(&str, &str); 9] = [
    (
        "kleene_nonlattice",
        include_str!("../fixtures/kleene_nonlattice.poset"),
    ),
    (
        "pseudo_kleene_nondistributive",
        include_str!("../fixtures/pseudo_kleene_nondistributive.poset"),
    ),
    (
        "pseudo_kleene_lattice",
        include_str!("../fixtures/pseudo_kleene_lattice.poset"),
    ),
    (
        "kleene_lattice",
        include_str!("../fixtures/kleene_lattice.poset"),
    ),
    (
        "kleene_nonlattice_completion",
        include_str!("../fixtures/kleene_nonlattice_completion.poset"),
    ),
    (
        "strong_not_strict",
        include_str!("../fixtures/strong_not_strict.poset"),
    ),
    (
        "strict_kleene",
        include_str!("../fixtures/strict_kleene.poset"),
    ),
    (
        "forked_chain",
        include_str!("../fixtures/forked_chain.poset"),
    ),
    (
        "forked_chain_twist",
        include_str!("../fixtures/forked_chain_twist.poset"),
    ),
];

pub fn text(name: &str) -> &'static str {
    ALL.iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .unwrap_or_else(|| panic!("no fixture named `{name}`"))
}

pub fn document(name: &str) -> PosetDocument {
    PosetDocument::parse(text(name)).expect("bundled fixtures parse")
}

pub fn poset(name: &str) -> Poset {
    document(name)
        .to_poset()
        .expect("bundled fixtures are posets")
}

/// Panics if the fixture carries no involution.
pub fn involutive(name: &str) -> InvolutivePoset {
    document(name)
        .to_involutive()
        .expect("bundled fixtures are posets")
        .unwrap_or_else(|| panic!("fixture `{name}` has no involution"))
}
