//! Finite posets and the lower/upper cone calculus.
//!
//! A [`Poset`] stores its full order relation as one up-set and one down-set
//! bitset per element, so `L(A)` and `U(A)` are intersections of rows. Element
//! indices follow input order; labels are for display only.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// A set of elements of one particular poset.
///
/// Subsets remember which poset produced them; handing a subset of one poset
/// to another is reported as [`Error::ForeignSubset`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    owner: u64,
    bits: FixedBitSet,
}

impl Subset {
    pub(crate) fn from_bits(owner: u64, bits: FixedBitSet) -> Self {
        Subset { owner, bits }
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn members(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    /// The single member, when this is a singleton.
    pub fn singleton(&self) -> Option<usize> {
        let mut it = self.bits.ones();
        match (it.next(), it.next()) {
            (Some(x), None) => Some(x),
            _ => None,
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> Result<bool> {
        self.same_owner(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.same_owner(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(Subset::from_bits(self.owner, bits))
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        self.same_owner(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ok(Subset::from_bits(self.owner, bits))
    }

    fn same_owner(&self, other: &Subset) -> Result<()> {
        if self.owner == other.owner {
            Ok(())
        } else {
            Err(Error::ForeignSubset)
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

/// The four cone identities that each define distributivity of a poset.
///
/// Variants are named after the cone operators that open the left-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DistributivityForm {
    /// `L(U(x,y),z) = LU(L(x,z),L(y,z))`
    LU,
    /// `UL(U(x,y),z) = U(L(x,z),L(y,z))`
    ULU,
    /// `U(L(x,y),z) = UL(U(x,z),U(y,z))`
    UL,
    /// `LU(L(x,y),z) = L(U(x,z),U(y,z))`
    LUL,
}

impl DistributivityForm {
    pub const ALL: [DistributivityForm; 4] = [
        DistributivityForm::LU,
        DistributivityForm::ULU,
        DistributivityForm::UL,
        DistributivityForm::LUL,
    ];

    /// Whether the inclusion `lhs ⊆ rhs` is the one that can fail. When
    /// false, `lhs ⊆ rhs` holds in every poset and `rhs ⊆ lhs` is checked.
    pub fn checks_lhs_in_rhs(self) -> bool {
        matches!(self, DistributivityForm::LU | DistributivityForm::UL)
    }

    pub fn name(self) -> &'static str {
        match self {
            DistributivityForm::LU => "LU",
            DistributivityForm::ULU => "ULU",
            DistributivityForm::UL => "UL",
            DistributivityForm::LUL => "LUL",
        }
    }
}

/// A finite partially ordered set.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    /// `up[x]` = { y | x ≤ y }
    up: Vec<FixedBitSet>,
    /// `down[x]` = { y | y ≤ x }
    down: Vec<FixedBitSet>,
    id: u64,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.labels[x], self.labels[y]))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

impl Poset {
    /// Builds a poset from cover (or any generating) pairs `(lower, upper)`;
    /// the reflexive-transitive closure is taken and antisymmetry validated.
    pub fn from_covers<S: Into<String>>(labels: Vec<S>, covers: &[(usize, usize)]) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        let mut up: Vec<FixedBitSet> = (0..n)
            .map(|x| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert(x);
                row
            })
            .collect();
        for &(x, y) in covers {
            for i in [x, y] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, size: n });
                }
            }
            up[x].insert(y);
        }
        // Warshall closure over rows
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for x in 0..n {
            for y in (x + 1)..n {
                if up[x].contains(y) && up[y].contains(x) {
                    return Err(Error::NotAntisymmetric(
                        labels[x].clone(),
                        labels[y].clone(),
                    ));
                }
            }
        }
        Self::from_rows(labels, up)
    }

    /// Builds a poset from an explicit order predicate, validating reflexivity,
    /// antisymmetry and transitivity.
    pub fn from_relation<S: Into<String>>(
        labels: Vec<S>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter_mut().enumerate() {
            for y in 0..n {
                if leq(x, y) {
                    row.insert(y);
                }
            }
        }
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::NotAPartialOrder(format!(
                    "`{}` is not below itself",
                    labels[x]
                )));
            }
            for y in (x + 1)..n {
                if up[x].contains(y) && up[y].contains(x) {
                    return Err(Error::NotAntisymmetric(
                        labels[x].clone(),
                        labels[y].clone(),
                    ));
                }
            }
        }
        for x in 0..n {
            for y in up[x].ones() {
                if !up[y].is_subset(&up[x]) {
                    let z = up[y].difference(&up[x]).next().unwrap_or(y);
                    return Err(Error::NotAPartialOrder(format!(
                        "not transitive: `{}` ≤ `{}` ≤ `{}`",
                        labels[x], labels[y], labels[z]
                    )));
                }
            }
        }
        Self::from_rows(labels, up)
    }

    fn from_rows(labels: Vec<String>, up: Vec<FixedBitSet>) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashSet::with_capacity(n);
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.ones() {
                down[y].insert(x);
            }
        }
        let mut hasher = DefaultHasher::new();
        n.hash(&mut hasher);
        for row in &up {
            row.as_slice().hash(&mut hasher);
        }
        Ok(Poset {
            labels,
            up,
            down,
            id: hasher.finish(),
        })
    }

    /// Elements `0..n` named by their index, ordered by `leq`.
    pub fn with_index_labels(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        Self::from_relation((0..n).map(|i| i.to_string()).collect(), leq)
    }

    pub fn chain(n: usize) -> Self {
        Self::with_index_labels(n, |x, y| x <= y).expect("a chain is a poset")
    }

    pub fn antichain(n: usize) -> Self {
        Self::with_index_labels(n, |x, y| x == y).expect("an antichain is a poset")
    }

    /// The same carrier with the order reversed.
    pub fn dual(&self) -> Self {
        Self::from_rows(self.labels.clone(), self.down.clone()).expect("labels already validated")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.leq(x, y) && !self.leq(y, x)
    }

    /// Cover pairs `(x, y)` with `x < y` and nothing strictly between, in
    /// lexicographic index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for x in 0..n {
            for y in self.up[x].ones() {
                if y == x {
                    continue;
                }
                let between = self.up[x]
                    .intersection(&self.down[y])
                    .any(|z| z != x && z != y);
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub(crate) fn down_row(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    pub(crate) fn wrap(&self, bits: FixedBitSet) -> Subset {
        Subset::from_bits(self.id, bits)
    }

    pub(crate) fn owns(&self, a: &Subset) -> Result<()> {
        if a.owner == self.id {
            Ok(())
        } else {
            Err(Error::ForeignSubset)
        }
    }

    pub fn subset<I: IntoIterator<Item = usize>>(&self, members: I) -> Result<Subset> {
        let n = self.size();
        let mut bits = FixedBitSet::with_capacity(n);
        for x in members {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, size: n });
            }
            bits.insert(x);
        }
        Ok(self.wrap(bits))
    }

    /// Subset from labels; unknown labels are an error.
    pub fn subset_of_labels(&self, labels: &[&str]) -> Result<Subset> {
        let idx = labels
            .iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| Error::Precondition(format!("unknown element `{l}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.subset(idx)
    }

    pub fn empty_subset(&self) -> Subset {
        self.wrap(FixedBitSet::with_capacity(self.size()))
    }

    pub fn full_subset(&self) -> Subset {
        let mut bits = FixedBitSet::with_capacity(self.size());
        bits.insert_range(..);
        self.wrap(bits)
    }

    pub(crate) fn full_bits(&self) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.size());
        bits.insert_range(..);
        bits
    }

    pub(crate) fn lower_bits(&self, a: &FixedBitSet) -> FixedBitSet {
        let mut out = self.full_bits();
        for x in a.ones() {
            out.intersect_with(&self.down[x]);
        }
        out
    }

    pub(crate) fn upper_bits(&self, a: &FixedBitSet) -> FixedBitSet {
        let mut out = self.full_bits();
        for x in a.ones() {
            out.intersect_with(&self.up[x]);
        }
        out
    }

    pub(crate) fn lower_of_bits(&self, elems: &[usize]) -> FixedBitSet {
        let mut out = self.full_bits();
        for &x in elems {
            out.intersect_with(&self.down[x]);
        }
        out
    }

    pub(crate) fn upper_of_bits(&self, elems: &[usize]) -> FixedBitSet {
        let mut out = self.full_bits();
        for &x in elems {
            out.intersect_with(&self.up[x]);
        }
        out
    }

    /// `L(A)`: the common lower bounds of `A`; the whole carrier when `A` is empty.
    pub fn lower_cone(&self, a: &Subset) -> Result<Subset> {
        self.owns(a)?;
        Ok(self.wrap(self.lower_bits(&a.bits)))
    }

    /// `U(A)`: the common upper bounds of `A`; the whole carrier when `A` is empty.
    pub fn upper_cone(&self, a: &Subset) -> Result<Subset> {
        self.owns(a)?;
        Ok(self.wrap(self.upper_bits(&a.bits)))
    }

    /// `L(x, y, ...)` for listed elements. Panics on an out-of-range index.
    pub fn lower_of(&self, elems: &[usize]) -> Subset {
        self.wrap(self.lower_of_bits(elems))
    }

    /// `U(x, y, ...)` for listed elements. Panics on an out-of-range index.
    pub fn upper_of(&self, elems: &[usize]) -> Subset {
        self.wrap(self.upper_of_bits(elems))
    }

    pub(crate) fn leq_bits(&self, a: &FixedBitSet, b: &FixedBitSet) -> bool {
        // A ≤ B iff B ⊆ U(A)
        b.is_subset(&self.upper_bits(a))
    }

    /// `A ≤ B`: every element of `A` lies below every element of `B`.
    pub fn leq_set(&self, a: &Subset, b: &Subset) -> Result<bool> {
        self.owns(a)?;
        self.owns(b)?;
        Ok(self.leq_bits(&a.bits, &b.bits))
    }

    /// First pair without a common lower bound.
    pub fn downward_directed_violation(&self) -> Option<(usize, usize)> {
        let n = self.size();
        for x in 0..n {
            for y in (x + 1)..n {
                if self.down[x].is_disjoint(&self.down[y]) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_downward_directed(&self) -> bool {
        self.downward_directed_violation().is_none()
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.size()).find(|&x| self.up[x].count_ones(..) == self.size())
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.size()).find(|&x| self.down[x].count_ones(..) == self.size())
    }

    /// `(least element, greatest element)`, each if it exists.
    pub fn bounds(&self) -> (Option<usize>, Option<usize>) {
        (self.bottom(), self.top())
    }

    /// Least element of `a`, if `a` has one.
    pub(crate) fn least_in(&self, a: &FixedBitSet) -> Option<usize> {
        a.ones().find(|&x| a.is_subset(&self.up[x]))
    }

    pub(crate) fn greatest_in(&self, a: &FixedBitSet) -> Option<usize> {
        a.ones().find(|&x| a.is_subset(&self.down[x]))
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.least_in(&self.upper_of_bits(&[x, y]))
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.greatest_in(&self.lower_of_bits(&[x, y]))
    }

    /// First pair `(x, y)`, `x < y` by index, lacking a join or a meet.
    pub fn lattice_violation(&self) -> Option<(usize, usize)> {
        let n = self.size();
        for x in 0..n {
            for y in (x + 1)..n {
                if self.join(x, y).is_none() || self.meet(x, y).is_none() {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice_violation().is_none()
    }

    /// Both sides of the chosen distributivity identity at `(x, y, z)`, as printed.
    pub fn distributivity_sides(
        &self,
        form: DistributivityForm,
        x: usize,
        y: usize,
        z: usize,
    ) -> (Subset, Subset) {
        let (l, r) = self.distributivity_side_bits(form, x, y, z);
        (self.wrap(l), self.wrap(r))
    }

    fn distributivity_side_bits(
        &self,
        form: DistributivityForm,
        x: usize,
        y: usize,
        z: usize,
    ) -> (FixedBitSet, FixedBitSet) {
        let with = |mut set: FixedBitSet, extra: usize| {
            set.grow(self.size());
            set.insert(extra);
            set
        };
        let union = |mut a: FixedBitSet, b: &FixedBitSet| {
            a.union_with(b);
            a
        };
        match form {
            DistributivityForm::LU => {
                let lhs = self.lower_bits(&with(self.upper_of_bits(&[x, y]), z));
                let rhs = self.lower_bits(&self.upper_bits(&union(
                    self.lower_of_bits(&[x, z]),
                    &self.lower_of_bits(&[y, z]),
                )));
                (lhs, rhs)
            }
            DistributivityForm::ULU => {
                let lhs = self.upper_bits(&self.lower_bits(&with(self.upper_of_bits(&[x, y]), z)));
                let rhs = self.upper_bits(&union(
                    self.lower_of_bits(&[x, z]),
                    &self.lower_of_bits(&[y, z]),
                ));
                (lhs, rhs)
            }
            DistributivityForm::UL => {
                let lhs = self.upper_bits(&with(self.lower_of_bits(&[x, y]), z));
                let rhs = self.upper_bits(&self.lower_bits(&union(
                    self.upper_of_bits(&[x, z]),
                    &self.upper_of_bits(&[y, z]),
                )));
                (lhs, rhs)
            }
            DistributivityForm::LUL => {
                let lhs = self.lower_bits(&self.upper_bits(&with(self.lower_of_bits(&[x, y]), z)));
                let rhs = self.lower_bits(&union(
                    self.upper_of_bits(&[x, z]),
                    &self.upper_of_bits(&[y, z]),
                ));
                (lhs, rhs)
            }
        }
    }

    fn distributive_at(&self, form: DistributivityForm, x: usize, y: usize, z: usize) -> bool {
        let (lhs, rhs) = self.distributivity_side_bits(form, x, y, z);
        if form.checks_lhs_in_rhs() {
            lhs.is_subset(&rhs)
        } else {
            rhs.is_subset(&lhs)
        }
    }

    /// First triple `(x, y, z)` in lexicographic index order at which the
    /// non-trivial inclusion of `form` fails.
    pub fn distributivity_violation(
        &self,
        form: DistributivityForm,
    ) -> Option<(usize, usize, usize)> {
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !self.distributive_at(form, x, y, z) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self, form: DistributivityForm) -> bool {
        self.distributivity_violation(form).is_none()
    }

    /// Renders a subset as its member labels, in index order.
    pub fn subset_labels(&self, a: &Subset) -> Vec<String> {
        a.iter().map(|x| self.labels[x].clone()).collect()
    }

    pub fn format_subset(&self, a: &Subset) -> String {
        format!("{{{}}}", self.subset_labels(a).join(", "))
    }
}

/// Looks for an order isomorphism `p → q`, returned as `map[x_in_p] = y_in_q`.
///
/// With `involutions = Some((inv_p, inv_q))` the map must also satisfy
/// `map[inv_p[x]] == inv_q[map[x]]`. Plain backtracking, pruned by up/down
/// set sizes.
pub fn are_isomorphic(
    p: &Poset,
    q: &Poset,
    involutions: Option<(&[usize], &[usize])>,
) -> Option<Vec<usize>> {
    let n = p.size();
    if n != q.size() {
        return None;
    }
    if let Some((ip, iq)) = involutions {
        if ip.len() != n || iq.len() != n {
            return None;
        }
    }
    let sig = |poset: &Poset, x: usize| (poset.up[x].count_ones(..), poset.down[x].count_ones(..));
    let mut p_sigs: Vec<_> = (0..n).map(|x| sig(p, x)).collect();
    let mut q_sigs: Vec<_> = (0..n).map(|x| sig(q, x)).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| p_sigs[x] == q_sigs[y]).collect())
        .collect();
    p_sigs.sort_unstable();
    q_sigs.sort_unstable();
    if p_sigs != q_sigs {
        return None;
    }

    struct Search<'a> {
        p: &'a Poset,
        q: &'a Poset,
        inv: Option<(&'a [usize], &'a [usize])>,
        candidates: Vec<Vec<usize>>,
        map: Vec<Option<usize>>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn consistent(&self, x: usize, y: usize) -> bool {
            for (i, image) in self.map.iter().enumerate() {
                if let Some(j) = *image {
                    if self.p.leq(i, x) != self.q.leq(j, y) || self.p.leq(x, i) != self.q.leq(y, j)
                    {
                        return false;
                    }
                }
            }
            if let Some((ip, iq)) = self.inv {
                let px = ip[x];
                if px == x {
                    if iq[y] != y {
                        return false;
                    }
                } else if let Some(j) = self.map[px] {
                    if iq[y] != j {
                        return false;
                    }
                } else if iq[y] == y || self.used[iq[y]] {
                    return false;
                }
            }
            true
        }

        fn run(&mut self, x: usize) -> bool {
            if x == self.map.len() {
                return true;
            }
            for k in 0..self.candidates[x].len() {
                let y = self.candidates[x][k];
                if self.used[y] || !self.consistent(x, y) {
                    continue;
                }
                self.map[x] = Some(y);
                self.used[y] = true;
                if self.run(x + 1) {
                    return true;
                }
                self.map[x] = None;
                self.used[y] = false;
            }
            false
        }
    }

    let mut search = Search {
        p,
        q,
        inv: involutions,
        candidates,
        map: vec![None; n],
        used: vec![false; n],
    };
    if search.run(0) {
        Some(
            search
                .map
                .into_iter()
                .map(|m| m.expect("complete map"))
                .collect(),
        )
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forked_chain() -> Poset {
        Poset::from_covers(vec!["0", "a", "b", "c"], &[(0, 1), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn closure_from_covers() {
        let q = forked_chain();
        assert!(q.leq(0, 2));
        assert!(q.leq(0, 3));
        assert!(!q.leq(2, 3));
        assert_eq!(q.covers(), vec![(0, 1), (1, 2), (1, 3)]);
    }

    #[test]
    fn cycle_rejected() {
        let err = Poset::from_covers(vec!["p", "q"], &[(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err, Error::NotAntisymmetric("p".into(), "q".into()));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = Poset::from_covers(vec!["p", "p"], &[]).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("p".into()));
    }

    #[test]
    fn non_transitive_relation_rejected() {
        let rel = |x: usize, y: usize| x == y || (x, y) == (0, 1) || (x, y) == (1, 2);
        assert!(matches!(
            Poset::with_index_labels(3, rel),
            Err(Error::NotAPartialOrder(_))
        ));
    }

    #[test]
    fn cones_of_empty_set_are_everything() {
        let q = forked_chain();
        let e = q.empty_subset();
        assert_eq!(q.lower_cone(&e).unwrap(), q.full_subset());
        assert_eq!(q.upper_cone(&e).unwrap(), q.full_subset());
    }

    #[test]
    fn upper_cone_can_be_empty() {
        let q = forked_chain();
        let bc = q.subset([2, 3]).unwrap();
        assert!(q.upper_cone(&bc).unwrap().is_empty());
        assert_eq!(q.lower_cone(&bc).unwrap().members(), vec![0, 1]);
    }

    #[test]
    fn foreign_subsets_are_rejected() {
        let q = forked_chain();
        let other = Poset::chain(4);
        let a = other.subset([0]).unwrap();
        assert_eq!(q.lower_cone(&a), Err(Error::ForeignSubset));
        assert_eq!(q.leq_set(&q.full_subset(), &a), Err(Error::ForeignSubset));
    }

    #[test]
    fn bounds_and_directedness() {
        assert_eq!(forked_chain().bounds(), (Some(0), None));
        let anti = Poset::antichain(2);
        assert_eq!(anti.bounds(), (None, None));
        assert!(!anti.is_downward_directed());
        assert_eq!(anti.downward_directed_violation(), Some((0, 1)));
        assert!(forked_chain().is_downward_directed());
    }

    #[test]
    fn chains_are_distributive_lattices() {
        let c = Poset::chain(5);
        assert!(c.is_lattice());
        for form in DistributivityForm::ALL {
            assert!(c.is_distributive(form));
        }
    }

    #[test]
    fn diamond_m3_is_not_distributive() {
        // 0 < a, b, c < 1
        let m3 = Poset::from_covers(
            vec!["0", "a", "b", "c", "1"],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap();
        assert!(m3.is_lattice());
        for form in DistributivityForm::ALL {
            assert!(!m3.is_distributive(form), "{form:?}");
        }
    }

    #[test]
    fn isomorphism_respects_involution() {
        // 2x2 grid with two different involutions
        let grid = Poset::from_covers(vec!["0", "p", "q", "1"], &[(0, 1), (0, 2), (1, 3), (2, 3)])
            .unwrap();
        let swap_bounds_fix_atoms = [3, 1, 2, 0];
        let swap_all = [3, 2, 1, 0];
        assert!(are_isomorphic(&grid, &grid, Some((&swap_all, &swap_all))).is_some());
        assert!(are_isomorphic(&grid, &grid, Some((&swap_bounds_fix_atoms, &swap_all))).is_none());
        assert_eq!(are_isomorphic(&grid, &grid, None), Some(vec![0, 1, 2, 3]));
    }
}
