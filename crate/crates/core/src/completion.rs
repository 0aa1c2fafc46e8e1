//! Dedekind-MacNeille completion of a finite poset.
//!
//! The completion is the family `{ L(A) | A ⊆ P }` ordered by inclusion. Since
//! `L(A)` is the intersection of the principal ideals `L(a)`, `a ∈ A`, and
//! `L(∅) = P`, the family is the closure of the principal ideals and the full
//! carrier under pairwise intersection; no subset enumeration is needed.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::involution::InvolutivePoset;
use crate::order::{Poset, Subset};

#[derive(Clone, Debug)]
pub struct CompletionLattice {
    base: Poset,
    ideals: Vec<Subset>,
    lookup: HashMap<FixedBitSet, usize>,
    order: Poset,
    base_inv: Option<Vec<usize>>,
    star: Option<Vec<usize>>,
    embed: Vec<usize>,
}

/// Completion of an involutive poset, with the involution `I* = L(I')`.
/// The map must be an antitone involution.
pub fn dedekind_macneille(ip: &InvolutivePoset) -> Result<CompletionLattice> {
    ip.require_valid()?;
    let mut c = dedekind_macneille_plain(ip.base());
    let base = ip.base();
    let star = c
        .ideals
        .iter()
        .map(|ideal| {
            let primed: Vec<usize> = ideal.iter().map(|x| ip.prime(x)).collect();
            c.lookup[&base.lower_of_bits(&primed)]
        })
        .collect();
    c.base_inv = Some(ip.inv().to_vec());
    c.star = Some(star);
    Ok(c)
}

/// Completion of a plain poset; no involution on the result.
pub fn dedekind_macneille_plain(p: &Poset) -> CompletionLattice {
    let n = p.size();
    let mut family: HashSet<FixedBitSet> = HashSet::new();
    let mut work: Vec<FixedBitSet> = Vec::new();
    for seed in (0..n)
        .map(|x| p.down_row(x).clone())
        .chain(std::iter::once(p.full_bits()))
    {
        if family.insert(seed.clone()) {
            work.push(seed);
        }
    }
    while let Some(ideal) = work.pop() {
        let current: Vec<FixedBitSet> = family.iter().cloned().collect();
        for other in current {
            let mut meet = ideal.clone();
            meet.intersect_with(&other);
            if family.insert(meet.clone()) {
                work.push(meet);
            }
        }
    }

    let mut ideals: Vec<FixedBitSet> = family.into_iter().collect();
    ideals.sort_by_key(|b| (b.count_ones(..), b.ones().collect::<Vec<_>>()));
    let lookup: HashMap<FixedBitSet, usize> = ideals
        .iter()
        .enumerate()
        .map(|(i, b)| (b.clone(), i))
        .collect();
    let embed: Vec<usize> = (0..n).map(|x| lookup[p.down_row(x)]).collect();

    let mut labels: Vec<String> = ideals
        .iter()
        .map(|b| {
            let members: Vec<&str> = b.ones().map(|x| p.label(x)).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    for x in 0..n {
        labels[embed[x]] = p.label(x).to_string();
    }
    // a generated set name may collide with an element name
    let mut seen = HashSet::new();
    for label in labels.iter_mut() {
        while !seen.insert(label.clone()) {
            label.push('~');
        }
    }
    let order = Poset::from_relation(labels, |i, j| ideals[i].is_subset(&ideals[j]))
        .expect("inclusion is a partial order");

    CompletionLattice {
        base: p.clone(),
        ideals: ideals.into_iter().map(|b| p.wrap(b)).collect(),
        lookup,
        order,
        base_inv: None,
        star: None,
        embed,
    }
}

impl CompletionLattice {
    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// The normal ideals, ordered by cardinality and then by sorted members.
    pub fn ideals(&self) -> &[Subset] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> &Subset {
        &self.ideals[i]
    }

    /// Index of `set` if it is one of the ideals.
    pub fn index_of(&self, set: &Subset) -> Option<usize> {
        self.base.owns(set).ok()?;
        self.lookup.get(set.bits()).copied()
    }

    /// The ideals as a poset under inclusion.
    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn star(&self) -> Option<&[usize]> {
        self.star.as_deref()
    }

    /// `x ↦ L(x)`, as ideal indices.
    pub fn embedding(&self) -> &[usize] {
        &self.embed
    }

    /// `I ∧ J = I ∩ J`
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let mut bits = self.ideals[i].bits().clone();
        bits.intersect_with(self.ideals[j].bits());
        self.lookup[&bits]
    }

    /// `I ∨ J = LU(I ∪ J)`
    pub fn join(&self, i: usize, j: usize) -> usize {
        let mut bits = self.ideals[i].bits().clone();
        bits.union_with(self.ideals[j].bits());
        self.lookup[&self.base.lower_bits(&self.base.upper_bits(&bits))]
    }

    /// The involution computed through `(L(A))* = LU(A')` with `A = U(I)`,
    /// an independent route to [`Self::star`].
    pub fn star_via_upper_cone(&self, i: usize) -> Option<usize> {
        let inv = self.base_inv.as_ref()?;
        let generators = self.base.upper_bits(self.ideals[i].bits());
        let primed: Vec<usize> = generators.ones().map(|x| inv[x]).collect();
        let mut primed_bits = FixedBitSet::with_capacity(self.base.size());
        primed.iter().for_each(|&x| primed_bits.insert(x));
        let image = self.base.lower_bits(&self.base.upper_bits(&primed_bits));
        self.lookup.get(&image).copied()
    }

    /// The completion with its involution, ready for classification.
    pub fn as_involutive(&self) -> Option<InvolutivePoset> {
        self.star
            .as_ref()
            .map(|s| InvolutivePoset::new(self.order.clone(), s.clone()).expect("star is total"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point() {
        let ip = InvolutivePoset::new(Poset::chain(1), vec![0]).unwrap();
        let c = dedekind_macneille(&ip).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.star(), Some(&[0][..]));
    }

    #[test]
    fn antichain_gains_bottom_and_top() {
        // L(p) ∩ L(q) = ∅ is a new bottom; the full carrier is a new top
        let c = dedekind_macneille_plain(&Poset::antichain(2));
        assert_eq!(c.len(), 4);
        assert!(c.ideal(0).is_empty());
        assert_eq!(c.ideal(3).len(), 2);
        assert!(c.order().is_lattice());
    }

    #[test]
    fn invalid_involution_is_rejected() {
        let ip = InvolutivePoset::new(Poset::chain(2), vec![0, 1]).unwrap();
        assert!(dedekind_macneille(&ip).is_err());
    }

    #[test]
    fn chain_is_its_own_completion() {
        let ip = InvolutivePoset::new(Poset::chain(4), vec![3, 2, 1, 0]).unwrap();
        let c = dedekind_macneille(&ip).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.embedding(), &[0, 1, 2, 3]);
        assert_eq!(c.star(), Some(&[3, 2, 1, 0][..]));
    }
}
