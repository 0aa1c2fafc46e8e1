//! Set-valued conjunction and implication on bounded involutive posets.
//!
//! ```text
//! x ⊙ y = {0}       if x ≤ y'      x → y = {1}        if x ≤ y
//!       = L(x, y)   otherwise            = U(x', y)   otherwise
//! ```
//!
//! Results are always subsets; `{0}` and `{1}` stand in for the scalar
//! bottom and top.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::involution::InvolutivePoset;
use crate::order::{DistributivityForm, Poset, Subset};

/// First pair of nonzero elements whose only common lower bound is `0`.
pub fn nonzero_meet_violation(p: &Poset) -> Result<Option<(usize, usize)>> {
    let bottom = match p.bounds() {
        (Some(b), Some(_)) => b,
        _ => return Err(Error::Unbounded("the nonzero lower bound condition")),
    };
    let n = p.size();
    for x in (0..n).filter(|&x| x != bottom) {
        for y in (x..n).filter(|&y| y != bottom) {
            if p.lower_of(&[x, y]).singleton() == Some(bottom) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// Which branch of the adjointness argument a triple `(a, b, c)` falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AdjointCase {
    /// `a ≤ b'`, `b ≤ c`
    BelowPrimeAndBelow,
    /// `a ≤ b'`, `b ≰ c`
    BelowPrimeNotBelow,
    /// `a ≰ b'`, `b ≤ c`
    NotBelowPrimeBelow,
    /// `a ≰ b'`, `b ≰ c`, `a = 1`
    LeftIsTop,
    /// `a ≰ b'`, `b ≰ c`, `b = 1`
    MiddleIsTop,
    /// `a ≰ b'`, `b ≰ c`, `c = 0`
    RightIsBottom,
    /// `a ≰ b'`, `b ≰ c`, `a, b ≠ 1`, `c ≠ 0`
    Interior,
}

impl AdjointCase {
    pub const ALL: [AdjointCase; 7] = [
        AdjointCase::BelowPrimeAndBelow,
        AdjointCase::BelowPrimeNotBelow,
        AdjointCase::NotBelowPrimeBelow,
        AdjointCase::LeftIsTop,
        AdjointCase::MiddleIsTop,
        AdjointCase::RightIsBottom,
        AdjointCase::Interior,
    ];
}

/// Result of `A ⊙ B`; `empty_family` marks the convention that an empty
/// intersection is the whole carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetProduct {
    pub set: Subset,
    pub empty_family: bool,
}

/// Pass/fail tally for one axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomTally {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Vec<String>>,
}

impl AxiomTally {
    fn new(name: &'static str) -> Self {
        AxiomTally {
            name,
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Vec<String>) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(witness());
            }
        }
    }

    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResiduationReport {
    pub commutativity: AxiomTally,
    pub unit: AxiomTally,
    pub associativity: AxiomTally,
    pub adjointness: AxiomTally,
    /// Triples per adjointness case, in [`AdjointCase::ALL`] order.
    pub case_coverage: Vec<(AdjointCase, usize)>,
    pub empty_family_used: bool,
    /// Whether the hypotheses that guarantee all four axioms hold: strict,
    /// Kleene, and nonzero elements with nonzero common lower bounds.
    pub hypotheses_hold: bool,
}

impl ResiduationReport {
    pub fn all_hold(&self) -> bool {
        [
            &self.commutativity,
            &self.unit,
            &self.associativity,
            &self.adjointness,
        ]
        .iter()
        .all(|a| a.holds())
    }
}

/// Hypothesis level under which a derived property is claimed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Tier {
    /// bounded, antitone involution
    Bounded,
    /// plus nonzero elements have a nonzero common lower bound
    NonzeroMeets,
    /// bounded strict Kleene
    StrictKleene,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TieredCheck {
    pub property: &'static str,
    pub tier: Tier,
    /// False when the instance does not meet `tier`; the property is then skipped.
    pub active: bool,
    #[serde(flatten)]
    pub tally: AxiomTally,
}

impl TieredCheck {
    pub fn holds(&self) -> bool {
        !self.active || self.tally.holds()
    }
}

/// `⊙` and `→` tabulated over a bounded poset with an antitone involution.
#[derive(Clone, Debug)]
pub struct ResiduatedStructure {
    ip: InvolutivePoset,
    bottom: usize,
    top: usize,
    odot: Vec<Subset>,
    arrow: Vec<Subset>,
}

impl ResiduatedStructure {
    pub fn new(ip: InvolutivePoset) -> Result<Self> {
        ip.require_valid()?;
        let (bottom, top) = match ip.base().bounds() {
            (Some(b), Some(t)) => (b, t),
            _ => return Err(Error::Unbounded("residuation")),
        };
        let n = ip.size();
        let mut s = ResiduatedStructure {
            ip,
            bottom,
            top,
            odot: Vec::new(),
            arrow: Vec::new(),
        };
        for x in 0..n {
            for y in 0..n {
                let o = s.odot_by_definition(x, y);
                let a = s.arrow_by_definition(x, y);
                s.odot.push(o);
                s.arrow.push(a);
            }
        }
        Ok(s)
    }

    pub fn involutive(&self) -> &InvolutivePoset {
        &self.ip
    }

    fn poset(&self) -> &Poset {
        self.ip.base()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn odot_by_definition(&self, x: usize, y: usize) -> Subset {
        let p = self.poset();
        if p.leq(x, self.ip.prime(y)) {
            p.subset([self.bottom]).expect("index in range")
        } else {
            p.lower_of(&[x, y])
        }
    }

    pub fn arrow_by_definition(&self, x: usize, y: usize) -> Subset {
        let p = self.poset();
        if p.leq(x, y) {
            p.subset([self.top]).expect("index in range")
        } else {
            p.upper_of(&[self.ip.prime(x), y])
        }
    }

    pub fn odot(&self, x: usize, y: usize) -> &Subset {
        &self.odot[x * self.ip.size() + y]
    }

    pub fn arrow(&self, x: usize, y: usize) -> &Subset {
        &self.arrow[x * self.ip.size() + y]
    }

    /// `A ⊙ B = ⋂ { x ⊙ y | x ∈ A, y ∈ B }`
    pub fn odot_sets(&self, a: &Subset, b: &Subset) -> Result<SetProduct> {
        let p = self.poset();
        p.owns(a)?;
        p.owns(b)?;
        let mut acc = p.full_subset();
        let mut empty_family = true;
        for x in a.iter() {
            for y in b.iter() {
                acc = acc.intersection(self.odot(x, y))?;
                empty_family = false;
            }
        }
        Ok(SetProduct {
            set: acc,
            empty_family,
        })
    }

    fn single(&self, x: usize) -> Subset {
        self.poset().subset([x]).expect("index in range")
    }

    pub fn classify_triple(&self, a: usize, b: usize, c: usize) -> AdjointCase {
        let p = self.poset();
        let below_prime = p.leq(a, self.ip.prime(b));
        let below = p.leq(b, c);
        match (below_prime, below) {
            (true, true) => AdjointCase::BelowPrimeAndBelow,
            (true, false) => AdjointCase::BelowPrimeNotBelow,
            (false, true) => AdjointCase::NotBelowPrimeBelow,
            (false, false) if a == self.top => AdjointCase::LeftIsTop,
            (false, false) if b == self.top => AdjointCase::MiddleIsTop,
            (false, false) if c == self.bottom => AdjointCase::RightIsBottom,
            (false, false) => AdjointCase::Interior,
        }
    }

    /// Checks commutativity, the unit law, associativity of the set
    /// extension, and adjointness `x ⊙ y ≤ z ⟺ x ≤ y → z` exhaustively.
    pub fn verify_kleene_residuated(&self) -> ResiduationReport {
        let p = self.poset();
        let n = p.size();
        let name = |x: usize| p.label(x).to_string();
        let mut commutativity = AxiomTally::new("commutativity");
        let mut unit = AxiomTally::new("unit");
        let mut associativity = AxiomTally::new("associativity");
        let mut adjointness = AxiomTally::new("adjointness");
        let mut coverage = vec![0usize; AdjointCase::ALL.len()];
        let mut empty_family_used = false;

        for x in 0..n {
            let lx = p.lower_of(&[x]);
            let ok = *self.odot(x, self.top) == lx && *self.odot(self.top, x) == lx;
            unit.record(ok, || vec![name(x)]);
            for y in 0..n {
                commutativity.record(self.odot(x, y) == self.odot(y, x), || {
                    vec![name(x), name(y)]
                });
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let left = self
                        .odot_sets(self.odot(x, y), &self.single(z))
                        .expect("same poset");
                    let right = self
                        .odot_sets(&self.single(x), self.odot(y, z))
                        .expect("same poset");
                    empty_family_used |= left.empty_family || right.empty_family;
                    associativity.record(left.set == right.set, || vec![name(x), name(y), name(z)]);

                    let lhs = p
                        .leq_set(self.odot(x, y), &self.single(z))
                        .expect("same poset");
                    let rhs = p
                        .leq_set(&self.single(x), self.arrow(y, z))
                        .expect("same poset");
                    adjointness.record(lhs == rhs, || vec![name(x), name(y), name(z)]);
                    let case = self.classify_triple(x, y, z);
                    coverage[AdjointCase::ALL
                        .iter()
                        .position(|c| *c == case)
                        .expect("listed")] += 1;
                }
            }
        }
        ResiduationReport {
            commutativity,
            unit,
            associativity,
            adjointness,
            case_coverage: AdjointCase::ALL.iter().copied().zip(coverage).collect(),
            empty_family_used,
            hypotheses_hold: self.guarantee_hypotheses_hold(),
        }
    }

    fn is_strict_kleene(&self) -> bool {
        self.ip.is_strict().unwrap_or(false) && self.poset().is_distributive(DistributivityForm::LU)
    }

    fn guarantee_hypotheses_hold(&self) -> bool {
        self.is_strict_kleene()
            && nonzero_meet_violation(self.poset())
                .ok()
                .flatten()
                .is_none()
    }

    fn prime_set(&self, a: &Subset) -> Subset {
        self.ip.prime_set(a).expect("same poset")
    }

    /// The tiered derived properties over all pairs `(a, b)`:
    ///
    /// * `a ⊙ b = (a → b')'` and `a → b = (a ⊙ b')'` (bounded),
    /// * `a ⊙ b = 0 ⟺ a ≤ b'` and `a → b = 1 ⟺ a ≤ b` (nonzero meets),
    /// * `a ≤ b` and `L(a', b) = 0` imply `a = b` (strict Kleene).
    pub fn derived_properties(&self) -> Vec<TieredCheck> {
        let p = self.poset();
        let n = p.size();
        let name = |x: usize| p.label(x).to_string();
        let nonzero_meets = nonzero_meet_violation(p).ok().flatten().is_none();
        let strict_kleene = self.is_strict_kleene();
        let zero = p.subset([self.bottom]).expect("index");
        let one = p.subset([self.top]).expect("index");

        let mut checks = vec![
            (Tier::Bounded, "odot as primed arrow", true),
            (Tier::Bounded, "arrow as primed odot", true),
            (
                Tier::NonzeroMeets,
                "odot is zero iff below prime",
                nonzero_meets,
            ),
            (Tier::NonzeroMeets, "arrow is one iff below", nonzero_meets),
            (Tier::StrictKleene, "cancellation", strict_kleene),
        ]
        .into_iter()
        .map(|(tier, property, active)| TieredCheck {
            property,
            tier,
            active,
            tally: AxiomTally::new(property),
        })
        .collect::<Vec<_>>();

        for a in 0..n {
            for b in 0..n {
                let pair = || vec![name(a), name(b)];
                let bp = self.ip.prime(b);
                if checks[0].active {
                    let ok = *self.odot(a, b) == self.prime_set(self.arrow(a, bp));
                    checks[0].tally.record(ok, pair);
                }
                if checks[1].active {
                    let ok = *self.arrow(a, b) == self.prime_set(self.odot(a, bp));
                    checks[1].tally.record(ok, pair);
                }
                if checks[2].active {
                    let ok = (*self.odot(a, b) == zero) == p.leq(a, bp);
                    checks[2].tally.record(ok, pair);
                }
                if checks[3].active {
                    let ok = (*self.arrow(a, b) == one) == p.leq(a, b);
                    checks[3].tally.record(ok, pair);
                }
                if checks[4].active {
                    let premise = p.leq(a, b) && p.lower_of(&[self.ip.prime(a), b]) == zero;
                    checks[4].tally.record(!premise || a == b, pair);
                }
            }
        }
        checks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain() -> ResiduatedStructure {
        ResiduatedStructure::new(InvolutivePoset::new(Poset::chain(2), vec![1, 0]).unwrap())
            .unwrap()
    }

    #[test]
    fn unbounded_is_rejected() {
        let ip = InvolutivePoset::new(Poset::antichain(2), vec![1, 0]).unwrap();
        assert_eq!(
            ResiduatedStructure::new(ip).unwrap_err(),
            Error::Unbounded("residuation")
        );
        assert!(nonzero_meet_violation(&Poset::antichain(2)).is_err());
    }

    #[test]
    fn boolean_two_chain() {
        let r = two_chain();
        assert!(r.verify_kleene_residuated().all_hold());
        assert!(r.derived_properties().iter().all(|c| c.active && c.holds()));
        assert_eq!(nonzero_meet_violation(&Poset::chain(2)).unwrap(), None);
    }

    #[test]
    fn empty_family_is_the_carrier() {
        let r = two_chain();
        let p = r.involutive().base();
        let prod = r.odot_sets(&p.empty_subset(), &p.full_subset()).unwrap();
        assert!(prod.empty_family);
        assert_eq!(prod.set, p.full_subset());
        let single = r
            .odot_sets(&p.subset([1]).unwrap(), &p.subset([1]).unwrap())
            .unwrap();
        assert_eq!(&single.set, r.odot(1, 1));
    }
}
