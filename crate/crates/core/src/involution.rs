//! Posets with a unary operation, and the classification ladder from
//! antitone involutions up to Boolean posets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::{DistributivityForm, Poset, Subset};

/// Why a unary map fails to be an antitone involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionViolation {
    /// `x'' ≠ x`
    NotInvolutive(usize),
    /// `x ≤ y` but `y' ≰ x'`
    NotAntitone(usize, usize),
}

/// A pair of elements whose cones fail the required relation.
///
/// `left` and `right` are the two cones compared (for example `L(x,x')` and
/// `U(y,y')`), and `pair` the offending members of those cones, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeWitness {
    pub elements: Vec<usize>,
    pub left: Subset,
    pub right: Subset,
    pub pair: Option<(usize, usize)>,
}

/// A poset together with a total unary map on its elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutivePoset {
    base: Poset,
    inv: Vec<usize>,
}

impl InvolutivePoset {
    /// The map must be total; whether it is an antitone involution is
    /// checked by [`Self::involution_violation`] and by every predicate.
    pub fn new(base: Poset, inv: Vec<usize>) -> Result<Self> {
        let n = base.size();
        if inv.len() != n {
            return Err(Error::MapNotTotal {
                expected: n,
                got: inv.len(),
            });
        }
        if let Some(&bad) = inv.iter().find(|&&y| y >= n) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: n,
            });
        }
        Ok(InvolutivePoset { base, inv })
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn inv(&self) -> &[usize] {
        &self.inv
    }

    pub fn prime(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    /// `A' = { x' | x ∈ A }`
    pub fn prime_set(&self, a: &Subset) -> Result<Subset> {
        self.base.owns(a)?;
        self.base.subset(a.iter().map(|x| self.inv[x]))
    }

    pub fn involution_violation(&self) -> Option<InvolutionViolation> {
        let n = self.size();
        if let Some(x) = (0..n).find(|&x| self.inv[self.inv[x]] != x) {
            return Some(InvolutionViolation::NotInvolutive(x));
        }
        for x in 0..n {
            for y in 0..n {
                if self.base.leq(x, y) && !self.base.leq(self.inv[y], self.inv[x]) {
                    return Some(InvolutionViolation::NotAntitone(x, y));
                }
            }
        }
        None
    }

    pub fn is_antitone_involution(&self) -> bool {
        self.involution_violation().is_none()
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        match self.involution_violation() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidInvolution(self.describe_violation(&v))),
        }
    }

    pub fn describe_violation(&self, v: &InvolutionViolation) -> String {
        let l = |x: usize| self.base.label(x);
        match *v {
            InvolutionViolation::NotInvolutive(x) => {
                format!(
                    "`{}''` is `{}`, not `{}`",
                    l(x),
                    l(self.inv[self.inv[x]]),
                    l(x)
                )
            }
            InvolutionViolation::NotAntitone(x, y) => format!(
                "`{}` ≤ `{}` but `{}` ≰ `{}`",
                l(x),
                l(y),
                l(self.inv[y]),
                l(self.inv[x])
            ),
        }
    }

    /// Elements with `x' = x`.
    pub fn fixed_points(&self) -> Subset {
        self.base
            .subset((0..self.size()).filter(|&x| self.inv[x] == x))
            .expect("indices in range")
    }

    /// `L(x, x')`
    pub fn lower_pair(&self, x: usize) -> Subset {
        self.base.lower_of(&[x, self.inv[x]])
    }

    /// `U(x, x')`
    pub fn upper_pair(&self, x: usize) -> Subset {
        self.base.upper_of(&[x, self.inv[x]])
    }

    /// First `(x, y)` with `L(x,x') ≰ U(y,y')`, with one offending pair of
    /// cone members.
    pub fn pseudo_kleene_violation(&self) -> Result<Option<ConeWitness>> {
        self.require_valid()?;
        let n = self.size();
        let lowers: Vec<Subset> = (0..n).map(|x| self.lower_pair(x)).collect();
        let uppers: Vec<Subset> = (0..n).map(|y| self.upper_pair(y)).collect();
        for x in 0..n {
            for y in 0..n {
                for l in lowers[x].iter() {
                    if let Some(u) = uppers[y].iter().find(|&u| !self.base.leq(l, u)) {
                        return Ok(Some(ConeWitness {
                            elements: vec![x, y],
                            left: lowers[x].clone(),
                            right: uppers[y].clone(),
                            pair: Some((l, u)),
                        }));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_pseudo_kleene(&self) -> Result<bool> {
        Ok(self.pseudo_kleene_violation()?.is_none())
    }

    /// Pseudo-Kleene and distributive.
    pub fn is_kleene(&self) -> Result<bool> {
        Ok(self.is_pseudo_kleene()? && self.base.is_distributive(DistributivityForm::LU))
    }

    fn equal_lower_pairs(
        &self,
        candidates: &[usize],
        need_incomparable: bool,
    ) -> Option<ConeWitness> {
        let lowers: Vec<(usize, Subset)> = candidates
            .iter()
            .map(|&x| (x, self.lower_pair(x)))
            .collect();
        for (i, (x, lx)) in lowers.iter().enumerate() {
            for (y, ly) in &lowers[i + 1..] {
                if need_incomparable && !self.base.incomparable(*x, *y) {
                    continue;
                }
                if lx != ly {
                    return Some(ConeWitness {
                        elements: vec![*x, *y],
                        left: lx.clone(),
                        right: ly.clone(),
                        pair: None,
                    });
                }
            }
        }
        None
    }

    /// First incomparable `(x, y)` with `L(x,x') ≠ L(y,y')`.
    pub fn strong_violation(&self) -> Result<Option<ConeWitness>> {
        self.require_valid()?;
        let all: Vec<usize> = (0..self.size()).collect();
        Ok(self.equal_lower_pairs(&all, true))
    }

    pub fn is_strong(&self) -> Result<bool> {
        Ok(self.strong_violation()?.is_none())
    }

    fn require_bounds(&self, what: &'static str) -> Result<(usize, usize)> {
        match self.base.bounds() {
            (Some(b), Some(t)) => Ok((b, t)),
            _ => Err(Error::Unbounded(what)),
        }
    }

    /// First pair of non-extremal elements with different `L(x,x')` cones.
    pub fn strict_violation(&self) -> Result<Option<ConeWitness>> {
        self.require_valid()?;
        let (bottom, top) = self.require_bounds("strictness")?;
        let inner: Vec<usize> = (0..self.size())
            .filter(|&x| x != bottom && x != top)
            .collect();
        Ok(self.equal_lower_pairs(&inner, false))
    }

    pub fn is_strict(&self) -> Result<bool> {
        Ok(self.strict_violation()?.is_none())
    }

    /// Whether ' is a complementation: `L(x,x') = {0}` and `U(x,x') = {1}`
    /// for all `x`. Requires a bounded distributive poset with an antitone
    /// involution.
    pub fn is_boolean_poset(&self) -> Result<bool> {
        self.require_valid()?;
        let (bottom, top) = self.require_bounds("a Boolean poset")?;
        if !self.base.is_distributive(DistributivityForm::LU) {
            return Err(Error::Precondition(
                "a Boolean poset must be distributive".into(),
            ));
        }
        Ok((0..self.size()).all(|x| {
            self.lower_pair(x).singleton() == Some(bottom)
                && self.upper_pair(x).singleton() == Some(top)
        }))
    }

    /// The bounded distributive cancellation property: for `a ≤ b` with
    /// `L(b, a') = {0}`, both `L(a,a')` and `L(b,b')` are `{0}` and both
    /// `U(a,a')` and `U(b,b')` are `{1}`.
    ///
    /// Violated hypotheses are reported as [`Error::Precondition`]; on valid
    /// hypotheses the result is the truth of the conclusion.
    pub fn cancellation_holds(&self, a: usize, b: usize) -> Result<bool> {
        self.require_valid()?;
        let (bottom, top) = self.require_bounds("the cancellation property")?;
        if !self.base.is_distributive(DistributivityForm::LU) {
            return Err(Error::Precondition("poset is not distributive".into()));
        }
        if !self.base.leq(a, b) {
            return Err(Error::Precondition(format!(
                "`{}` ≰ `{}`",
                self.base.label(a),
                self.base.label(b)
            )));
        }
        let cone = self.base.lower_of(&[b, self.inv[a]]);
        if cone.singleton() != Some(bottom) {
            return Err(Error::Precondition(format!(
                "L({}, {}') = {} is not {{0}}",
                self.base.label(b),
                self.base.label(a),
                self.base.format_subset(&cone)
            )));
        }
        Ok([a, b].iter().all(|&x| {
            self.lower_pair(x).singleton() == Some(bottom)
                && self.upper_pair(x).singleton() == Some(top)
        }))
    }

    /// Runs every predicate and collects the results, never failing on
    /// structural falsity.
    pub fn classify(&self) -> Classification {
        let base = &self.base;
        let names = |v: &[usize]| {
            v.iter()
                .map(|&x| base.label(x).to_string())
                .collect::<Vec<_>>()
        };
        let render = |w: Option<ConeWitness>| {
            w.map(|w| Witness {
                elements: names(&w.elements),
                left: base.subset_labels(&w.left),
                right: base.subset_labels(&w.right),
            })
        };
        let (bottom, top) = base.bounds();
        let involution = match self.involution_violation() {
            None => Check::pass(),
            Some(v) => Check::fail(Witness::note(self.describe_violation(&v))),
        };
        let lattice = match base.lattice_violation() {
            None => Check::pass(),
            Some((x, y)) => Check::fail(Witness::elements(names(&[x, y]))),
        };
        let distributive = DistributivityForm::ALL
            .iter()
            .map(|&form| FormCheck {
                form,
                check: match base.distributivity_violation(form) {
                    None => Check::pass(),
                    Some((x, y, z)) => {
                        let (lhs, rhs) = base.distributivity_sides(form, x, y, z);
                        Check::fail(Witness {
                            elements: names(&[x, y, z]),
                            left: base.subset_labels(&lhs),
                            right: base.subset_labels(&rhs),
                        })
                    }
                },
            })
            .collect::<Vec<_>>();
        let valid = self.is_antitone_involution();
        let gated = |f: &dyn Fn() -> Result<Option<ConeWitness>>| -> Option<Check> {
            match f() {
                Ok(None) => Some(Check::pass()),
                Ok(Some(w)) => Some(Check::fail(render(Some(w)).expect("witness present"))),
                Err(_) => None,
            }
        };
        let pseudo_kleene = gated(&|| self.pseudo_kleene_violation());
        let distributive_lu = distributive[0].check.holds;
        let kleene = pseudo_kleene.as_ref().map(|pk| Check {
            holds: pk.holds && distributive_lu,
            witness: None,
        });
        let strong = gated(&|| self.strong_violation());
        let strict = gated(&|| self.strict_violation());
        let boolean = if valid {
            self.is_boolean_poset().ok()
        } else {
            None
        };
        Classification {
            elements: base.labels().to_vec(),
            involution,
            bottom: bottom.map(|b| base.label(b).to_string()),
            top: top.map(|t| base.label(t).to_string()),
            lattice,
            distributive,
            pseudo_kleene,
            kleene,
            strong,
            strict,
            boolean,
            fixed_points: base.subset_labels(&self.fixed_points()),
        }
    }
}

/// A rendered counterexample: element names plus the two compared sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub elements: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub left: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub right: Vec<String>,
}

impl Witness {
    fn elements(elements: Vec<String>) -> Self {
        Witness {
            elements,
            left: Vec::new(),
            right: Vec::new(),
        }
    }

    fn note(text: String) -> Self {
        Witness::elements(vec![text])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    fn pass() -> Self {
        Check {
            holds: true,
            witness: None,
        }
    }

    fn fail(w: Witness) -> Self {
        Check {
            holds: false,
            witness: Some(w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormCheck {
    pub form: DistributivityForm,
    #[serde(flatten)]
    pub check: Check,
}

/// Output of [`InvolutivePoset::classify`]. Entries that need a valid
/// antitone involution (or bounds) are `None` when their precondition fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub elements: Vec<String>,
    pub involution: Check,
    pub bottom: Option<String>,
    pub top: Option<String>,
    pub lattice: Check,
    pub distributive: Vec<FormCheck>,
    pub pseudo_kleene: Option<Check>,
    pub kleene: Option<Check>,
    pub strong: Option<Check>,
    pub strict: Option<Check>,
    pub boolean: Option<bool>,
    pub fixed_points: Vec<String>,
}

impl Classification {
    pub fn is_bounded(&self) -> bool {
        self.bottom.is_some() && self.top.is_some()
    }

    pub fn is_distributive(&self) -> bool {
        self.distributive[0].check.holds
    }

    fn flag(c: &Option<Check>) -> Option<bool> {
        c.as_ref().map(|c| c.holds)
    }

    pub fn pseudo_kleene(&self) -> Option<bool> {
        Self::flag(&self.pseudo_kleene)
    }

    pub fn kleene(&self) -> Option<bool> {
        Self::flag(&self.kleene)
    }

    pub fn strong(&self) -> Option<bool> {
        Self::flag(&self.strong)
    }

    pub fn strict(&self) -> Option<bool> {
        Self::flag(&self.strict)
    }

    /// One-line verdict such as "Kleene poset; not a lattice".
    pub fn summary(&self) -> String {
        if !self.involution.holds {
            return "not an antitone involution".to_string();
        }
        let lattice = self.lattice.holds;
        let mut kind = match (self.pseudo_kleene(), self.kleene()) {
            (Some(true), Some(true)) if lattice => "Kleene algebra".to_string(),
            (Some(true), Some(true)) => "Kleene poset".to_string(),
            (Some(true), _) if lattice => "pseudo-Kleene algebra".to_string(),
            (Some(true), _) => "pseudo-Kleene poset".to_string(),
            _ => "poset with an antitone involution".to_string(),
        };
        if self.strict() == Some(true) {
            kind = format!("strict {kind}");
        } else if self.strong() == Some(true) && self.pseudo_kleene() == Some(true) {
            kind = format!("strong {kind}");
        }
        let mut parts = vec![kind];
        if !lattice {
            parts.push("not a lattice".into());
        }
        if self.pseudo_kleene() == Some(true) && self.kleene() == Some(false) {
            parts.push("not distributive".into());
        }
        if self.boolean == Some(true) {
            parts.push("Boolean".into());
        }
        parts.join("; ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain() -> InvolutivePoset {
        InvolutivePoset::new(Poset::chain(2), vec![1, 0]).unwrap()
    }

    #[test]
    fn map_must_be_total() {
        assert_eq!(
            InvolutivePoset::new(Poset::chain(2), vec![1]),
            Err(Error::MapNotTotal {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            InvolutivePoset::new(Poset::chain(2), vec![1, 2]),
            Err(Error::IndexOutOfRange { index: 2, size: 2 })
        );
    }

    #[test]
    fn single_point_is_everything() {
        let one = InvolutivePoset::new(Poset::chain(1), vec![0]).unwrap();
        assert!(one.is_antitone_involution());
        assert_eq!(one.fixed_points().members(), vec![0]);
        assert!(one.is_pseudo_kleene().unwrap());
        assert!(one.is_kleene().unwrap());
    }

    #[test]
    fn two_chain_is_boolean_and_strict() {
        let c = two_chain();
        assert!(c.is_strict().unwrap());
        assert!(c.is_boolean_poset().unwrap());
        assert!(c.cancellation_holds(0, 0).unwrap());
    }

    #[test]
    fn predicates_reject_invalid_involution() {
        let ip = InvolutivePoset::new(Poset::chain(2), vec![0, 1]).unwrap();
        assert_eq!(
            ip.involution_violation(),
            Some(InvolutionViolation::NotAntitone(0, 1))
        );
        assert!(matches!(
            ip.is_pseudo_kleene(),
            Err(Error::InvalidInvolution(_))
        ));
        let not_inv = InvolutivePoset::new(Poset::antichain(3), vec![1, 2, 0]).unwrap();
        assert_eq!(
            not_inv.involution_violation(),
            Some(InvolutionViolation::NotInvolutive(0))
        );
    }

    #[test]
    fn strictness_requires_bounds() {
        let anti = InvolutivePoset::new(Poset::antichain(2), vec![1, 0]).unwrap();
        assert_eq!(anti.is_strict(), Err(Error::Unbounded("strictness")));
        assert!(anti.is_strong().is_ok());
    }

    #[test]
    fn boolean_square() {
        let grid = Poset::from_covers(vec!["0", "p", "q", "1"], &[(0, 1), (0, 2), (1, 3), (2, 3)])
            .unwrap();
        let ip = InvolutivePoset::new(grid, vec![3, 2, 1, 0]).unwrap();
        assert!(ip.is_boolean_poset().unwrap());
        assert!(ip.is_strict().unwrap());
    }

    #[test]
    fn three_chain_has_a_fixed_point_but_is_not_boolean() {
        let ip = InvolutivePoset::new(Poset::chain(3), vec![2, 1, 0]).unwrap();
        assert_eq!(ip.fixed_points().members(), vec![1]);
        assert!(ip.is_kleene().unwrap());
        assert!(!ip.is_boolean_poset().unwrap());
    }
}
