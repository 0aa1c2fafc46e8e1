//! Commutative meet-directoids.
//!
//! A downward directed poset is encoded as a binary table `⊓` that returns
//! the meet of comparable elements and some common lower bound of
//! incomparable ones. The order is recovered through `x ≤ y ⟺ x ⊓ y = x`.
//! With a unary map `'` the derived join is `x ⊔ y = (x' ⊓ y')'`, and the
//! properties of the underlying involutive poset become identities and
//! implications in `⊓`, `⊔` and `'`, checked here by direct quantifier
//! evaluation over the table.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::involution::InvolutivePoset;
use crate::order::{DistributivityForm, Poset, Subset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    Idempotency(usize),
    Commutativity(usize, usize),
    /// `(x ⊓ (y ⊓ z)) ⊓ z ≠ x ⊓ (y ⊓ z)`
    WeakAssociativity(usize, usize, usize),
}

/// The laws that characterize classes of involutive posets through an
/// assigned directoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Law {
    /// `x'' = x`
    DoubleNegation,
    /// `(x ⊓ y)' ⊓ y' = y'`
    Antitone,
    /// `(z ⊓ x) ⊓ (z ⊓ x') ≤ (w ⊔ y) ⊔ (w ⊔ y')`
    Normality,
    /// `w ⊓ ((t⊔x)⊔(t⊔y)) = w ⊓ z = w` and
    /// `s ⊔ ((t⊓x)⊓(t⊓z)) = s ⊔ ((t⊓y)⊓(t⊓z)) = s` for all `t` imply `w ≤ s`
    Distributivity,
    /// `x ≠ x⊓y ≠ y` and `x⊓z = x'⊓z = z` imply `y⊓z = y'⊓z = z`
    Strong,
    /// `x, y ∉ {0, 1}` and `x⊓z = x'⊓z = z` imply `y⊓z = y'⊓z = z`
    Strict,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::DoubleNegation => "double negation",
            Law::Antitone => "antitone",
            Law::Normality => "normality",
            Law::Distributivity => "distributivity",
            Law::Strong => "strong",
            Law::Strict => "strict",
        }
    }
}

/// A law and the variable binding that falsifies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawViolation {
    pub law: Law,
    pub binding: Vec<(&'static str, usize)>,
}

impl LawViolation {
    fn new(law: Law, binding: &[(&'static str, usize)]) -> Self {
        LawViolation {
            law,
            binding: binding.to_vec(),
        }
    }

    pub fn value(&self, var: &str) -> Option<usize> {
        self.binding
            .iter()
            .find(|(v, _)| *v == var)
            .map(|&(_, x)| x)
    }

    pub fn render(&self, labels: &[String]) -> String {
        let vars: Vec<String> = self
            .binding
            .iter()
            .map(|(v, x)| format!("{v}={}", labels[*x]))
            .collect();
        format!("{} law fails at {}", self.law.name(), vars.join(", "))
    }
}

/// A finite groupoid `(D, ⊓)`, optionally with a unary map.
#[derive(Clone, PartialEq, Eq)]
pub struct MeetDirectoid {
    labels: Vec<String>,
    table: Vec<usize>,
    inv: Option<Vec<usize>>,
}

impl fmt::Debug for MeetDirectoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size();
        let rows: Vec<&[usize]> = (0..n).map(|x| &self.table[x * n..(x + 1) * n]).collect();
        f.debug_struct("MeetDirectoid")
            .field("labels", &self.labels)
            .field("table", &rows)
            .field("inv", &self.inv)
            .finish()
    }
}

impl MeetDirectoid {
    /// `table[x * n + y]` is `x ⊓ y`.
    pub fn new(labels: Vec<String>, table: Vec<usize>, inv: Option<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n * n {
            return Err(Error::MapNotTotal {
                expected: n * n,
                got: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= n) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: n,
            });
        }
        if let Some(m) = &inv {
            if m.len() != n {
                return Err(Error::MapNotTotal {
                    expected: n,
                    got: m.len(),
                });
            }
            if let Some(&bad) = m.iter().find(|&&v| v >= n) {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    size: n,
                });
            }
        }
        Ok(MeetDirectoid { labels, table, inv })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn inv(&self) -> Option<&[usize]> {
        self.inv.as_deref()
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size() + y]
    }

    fn prime_map(&self) -> Result<&[usize]> {
        self.inv.as_deref().ok_or(Error::MissingInvolution)
    }

    /// `x ⊔ y = (x' ⊓ y')'`
    pub fn join(&self, x: usize, y: usize) -> Result<usize> {
        let inv = self.prime_map()?;
        Ok(inv[self.meet(inv[x], inv[y])])
    }

    pub fn axiom_violation(&self) -> Option<AxiomViolation> {
        let n = self.size();
        if let Some(x) = (0..n).find(|&x| self.meet(x, x) != x) {
            return Some(AxiomViolation::Idempotency(x));
        }
        for x in 0..n {
            for y in (x + 1)..n {
                if self.meet(x, y) != self.meet(y, x) {
                    return Some(AxiomViolation::Commutativity(x, y));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let yz = self.meet(y, z);
                    let lhs = self.meet(self.meet(x, yz), z);
                    if lhs != self.meet(x, yz) {
                        return Some(AxiomViolation::WeakAssociativity(x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_directoid(&self) -> bool {
        self.axiom_violation().is_none()
    }

    fn require_directoid(&self) -> Result<()> {
        match self.axiom_violation() {
            None => Ok(()),
            Some(v) => Err(Error::NotADirectoid(format!("{v:?}"))),
        }
    }

    /// The poset `x ≤ y ⟺ x ⊓ y = x`.
    pub fn induced_poset(&self) -> Result<Poset> {
        self.require_directoid()?;
        Poset::from_relation(self.labels.clone(), |x, y| self.meet(x, y) == x)
            .map_err(|e| Error::NotADirectoid(format!("induced relation is not a poset: {e}")))
    }

    /// First failure of `x'' = x` or `(x ⊓ y)' ⊓ y' = y'`.
    pub fn involution_law_violation(&self) -> Result<Option<LawViolation>> {
        let inv = self.prime_map()?;
        let n = self.size();
        if let Some(x) = (0..n).find(|&x| inv[inv[x]] != x) {
            return Ok(Some(LawViolation::new(Law::DoubleNegation, &[("x", x)])));
        }
        for x in 0..n {
            for y in 0..n {
                if self.meet(inv[self.meet(x, y)], inv[y]) != inv[y] {
                    return Ok(Some(LawViolation::new(
                        Law::Antitone,
                        &[("x", x), ("y", y)],
                    )));
                }
            }
        }
        Ok(None)
    }

    fn require_involutive(&self) -> Result<&[usize]> {
        self.require_directoid()?;
        let inv = self.prime_map()?;
        if let Some(v) = self.involution_law_violation()? {
            return Err(Error::Precondition(v.render(&self.labels)));
        }
        Ok(inv)
    }

    fn below(&self, x: usize, y: usize) -> bool {
        self.meet(x, y) == x
    }

    /// Normality law over all `(x, y, z, w)`.
    pub fn normality_violation(&self) -> Result<Option<LawViolation>> {
        let inv = self.require_involutive()?;
        let n = self.size();
        let join = |a: usize, b: usize| inv[self.meet(inv[a], inv[b])];
        let lower: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|z| self.meet(self.meet(z, x), self.meet(z, inv[x])))
                    .collect()
            })
            .collect();
        let upper: Vec<Vec<usize>> = (0..n)
            .map(|y| (0..n).map(|w| join(join(w, y), join(w, inv[y]))).collect())
            .collect();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        if !self.below(lower[x][z], upper[y][w]) {
                            return Ok(Some(LawViolation::new(
                                Law::Normality,
                                &[("x", x), ("y", y), ("z", z), ("w", w)],
                            )));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// Distributivity implication over all `(w, s, x, y, z)`. The triples
    /// `(x, y, z)` are scanned lexicographically; for each, the sets of `w`
    /// and `s` satisfying the premises are built from the table and
    /// compared under the induced order.
    pub fn distributivity_violation(&self) -> Result<Option<LawViolation>> {
        let inv = self.require_involutive()?;
        let n = self.size();
        let join = |a: usize, b: usize| inv[self.meet(inv[a], inv[b])];
        let row = |pred: &dyn Fn(usize) -> bool| {
            let mut bits = FixedBitSet::with_capacity(n);
            (0..n).filter(|&v| pred(v)).for_each(|v| bits.insert(v));
            bits
        };
        // below_of[m] = { w | w ⊓ m = w }, above_of[m] = { s | s ⊔ m = s }
        let below_of: Vec<FixedBitSet> = (0..n).map(|m| row(&|w| self.meet(w, m) == w)).collect();
        let above_of: Vec<FixedBitSet> = (0..n).map(|m| row(&|s| join(s, m) == s)).collect();
        let up_of: Vec<FixedBitSet> = (0..n).map(|w| row(&|s| self.below(w, s))).collect();

        let full = {
            let mut b = FixedBitSet::with_capacity(n);
            b.insert_range(..);
            b
        };
        let mut w_pairs = vec![full.clone(); n * n];
        let mut s_pairs = vec![full; n * n];
        for x in 0..n {
            for y in 0..n {
                for t in 0..n {
                    w_pairs[x * n + y].intersect_with(&below_of[join(join(t, x), join(t, y))]);
                    s_pairs[x * n + y]
                        .intersect_with(&above_of[self.meet(self.meet(t, x), self.meet(t, y))]);
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mut ws = w_pairs[x * n + y].clone();
                    ws.intersect_with(&below_of[z]);
                    let mut ss = s_pairs[x * n + z].clone();
                    ss.intersect_with(&s_pairs[y * n + z]);
                    for w in ws.ones() {
                        if let Some(s) = ss.difference(&up_of[w]).next() {
                            return Ok(Some(LawViolation::new(
                                Law::Distributivity,
                                &[("w", w), ("s", s), ("x", x), ("y", y), ("z", z)],
                            )));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    fn in_lower_pair(&self, inv: &[usize], x: usize, z: usize) -> bool {
        self.meet(x, z) == z && self.meet(inv[x], z) == z
    }

    /// Strong implication over all `(x, y, z)`.
    pub fn strong_violation(&self) -> Result<Option<LawViolation>> {
        let inv = self.require_involutive()?;
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                let xy = self.meet(x, y);
                if xy == x || xy == y {
                    continue;
                }
                for z in 0..n {
                    if self.in_lower_pair(inv, x, z) && !self.in_lower_pair(inv, y, z) {
                        return Ok(Some(LawViolation::new(
                            Law::Strong,
                            &[("x", x), ("y", y), ("z", z)],
                        )));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Strict implication with designated `bottom` and `top`, which must be
    /// the bounds of the induced order.
    pub fn strict_violation(&self, bottom: usize, top: usize) -> Result<Option<LawViolation>> {
        let inv = self.require_involutive()?;
        let n = self.size();
        if bottom >= n || top >= n || (0..n).any(|x| !self.below(bottom, x) || !self.below(x, top))
        {
            return Err(Error::BoundsMismatch);
        }
        let inner: Vec<usize> = (0..n).filter(|&x| x != bottom && x != top).collect();
        for &x in &inner {
            for &y in &inner {
                for z in 0..n {
                    if self.in_lower_pair(inv, x, z) && !self.in_lower_pair(inv, y, z) {
                        return Ok(Some(LawViolation::new(
                            Law::Strict,
                            &[("x", x), ("y", y), ("z", z)],
                        )));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Checks the set descriptions of cones in terms of `⊓` and `⊔` against
    /// the cones of the induced poset.
    pub fn set_laws(&self) -> Result<SetLaws> {
        let inv = self.require_involutive()?;
        let p = self.induced_poset()?;
        let n = self.size();
        let join = |a: usize, b: usize| inv[self.meet(inv[a], inv[b])];
        let collect = |f: &dyn Fn(usize) -> usize| -> Subset {
            p.subset((0..n).map(f)).expect("indices in range")
        };
        let mut laws = SetLaws::default();
        let record = |slot: &mut Option<(usize, usize)>, ok: bool, x: usize, y: usize| {
            if !ok && slot.is_none() {
                *slot = Some((x, y));
            }
        };
        for x in 0..n {
            let lx = collect(&|z| self.meet(z, x));
            record(&mut laws.principal_lower, lx == p.lower_of(&[x]), x, x);
            let ux = collect(&|z| join(z, x));
            record(&mut laws.principal_upper, ux == p.upper_of(&[x]), x, x);
            for y in 0..n {
                let lxy = collect(&|z| self.meet(self.meet(z, x), self.meet(z, y)));
                record(&mut laws.pair_lower, lxy == p.lower_of(&[x, y]), x, y);
                let upper = p.upper_of(&[x, y]);
                let printed = collect(&|z| self.meet(join(z, x), join(z, y)));
                record(&mut laws.pair_upper_inner_meet, printed == upper, x, y);
                let proof = collect(&|z| join(join(z, x), join(z, y)));
                record(&mut laws.pair_upper_inner_join, proof == upper, x, y);
                let comparable = !p.incomparable(x, y);
                let sup = join(x, y);
                let join_ok = if comparable {
                    Some(sup) == p.join(x, y)
                } else {
                    upper.contains(sup) && sup == join(y, x)
                };
                record(&mut laws.join_bounds, join_ok, x, y);
                let duality = (self.meet(x, y) == x) == (join(x, y) == y);
                record(&mut laws.meet_join_duality, duality, x, y);
            }
        }
        Ok(laws)
    }
}

/// First failing `(x, y)` for each set law; `None` means the law holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SetLaws {
    /// `L(x) = { z ⊓ x }`
    pub principal_lower: Option<(usize, usize)>,
    /// `U(x) = { z ⊔ x }`
    pub principal_upper: Option<(usize, usize)>,
    /// `L(x,y) = { (z⊓x) ⊓ (z⊓y) }`
    pub pair_lower: Option<(usize, usize)>,
    /// `U(x,y) = { (z⊔x) ⊓ (z⊔y) }`, with an inner meet
    pub pair_upper_inner_meet: Option<(usize, usize)>,
    /// `U(x,y) = { (z⊔x) ⊔ (z⊔y) }`, with an inner join
    pub pair_upper_inner_join: Option<(usize, usize)>,
    /// `x ⊔ y` is the join for comparable pairs and a common upper bound,
    /// symmetric in its arguments, otherwise
    pub join_bounds: Option<(usize, usize)>,
    /// `x ⊓ y = x ⟺ x ⊔ y = y`
    pub meet_join_duality: Option<(usize, usize)>,
}

impl SetLaws {
    /// All laws except the inner-meet reading of the pair upper cone.
    pub fn core_laws_hold(&self) -> bool {
        self.principal_lower.is_none()
            && self.principal_upper.is_none()
            && self.pair_lower.is_none()
            && self.pair_upper_inner_join.is_none()
            && self.join_bounds.is_none()
            && self.meet_join_duality.is_none()
    }
}

/// One order-side class set against the directoid laws that characterize it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Characterization {
    pub class: &'static str,
    pub laws: &'static str,
    pub order_side: bool,
    pub law_side: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub law_failure: Option<String>,
}

impl Characterization {
    pub fn agrees(&self) -> bool {
        self.order_side == self.law_side
    }
}

/// Evaluates each class of `ip` both on the order and through the laws of
/// `d`, which must be an assigned directoid of `ip`'s poset with the same map.
/// The strict classes are included only for bounded posets.
pub fn characterizations(d: &MeetDirectoid, ip: &InvolutivePoset) -> Vec<Characterization> {
    let labels = d.labels().to_vec();
    let first = |checks: &[Result<Option<LawViolation>>]| -> Option<String> {
        checks.iter().find_map(|c| match c {
            Ok(None) => None,
            Ok(Some(v)) => Some(v.render(&labels)),
            Err(e) => Some(e.to_string()),
        })
    };
    let valid = ip.is_antitone_involution();
    let involution = d.involution_law_violation();
    let normality = d.normality_violation();
    let distributivity = d.distributivity_violation();
    let strong = d.strong_violation();
    let p = ip.base();
    let distributive = p.is_distributive(DistributivityForm::LU);
    let pseudo_kleene = valid && ip.is_pseudo_kleene().unwrap_or(false);
    let mut out = Vec::new();
    let mut push = |class, laws, order_side, checks: &[Result<Option<LawViolation>>]| {
        let law_failure = first(checks);
        out.push(Characterization {
            class,
            laws,
            order_side,
            law_side: law_failure.is_none(),
            law_failure,
        });
    };
    push(
        "antitone involution",
        "1, 2",
        valid,
        std::slice::from_ref(&involution),
    );
    push(
        "pseudo-Kleene",
        "1-3",
        pseudo_kleene,
        &[involution.clone(), normality.clone()],
    );
    push(
        "Kleene",
        "1-4",
        pseudo_kleene && distributive,
        &[involution.clone(), normality, distributivity.clone()],
    );
    push(
        "strong",
        "1, 2, 5",
        valid && ip.is_strong().unwrap_or(false),
        &[involution.clone(), strong],
    );
    if let (Some(bottom), Some(top)) = p.bounds() {
        let strict = valid && ip.is_strict().unwrap_or(false);
        let six = d.strict_violation(bottom, top);
        push(
            "strict",
            "1, 2, 6",
            strict,
            &[involution.clone(), six.clone()],
        );
        push(
            "strict Kleene",
            "1, 2, 4, 6",
            strict && distributive,
            &[involution, distributivity, six],
        );
    }
    out
}

/// Picks `x ⊓ y` among the common lower bounds of an incomparable pair.
pub trait Chooser {
    /// Called with `x < y` by index; must return a member of `cone`.
    fn choose(&self, x: usize, y: usize, cone: &Subset) -> usize;
}

/// Takes the lowest-index common lower bound.
#[derive(Clone, Copy, Debug, Default)]
pub struct LowestIndex;

impl Chooser for LowestIndex {
    fn choose(&self, _x: usize, _y: usize, cone: &Subset) -> usize {
        cone.iter().next().expect("downward directed")
    }
}

fn meets_of_comparables(p: &Poset) -> Vec<usize> {
    let n = p.size();
    let mut table = vec![usize::MAX; n * n];
    for x in 0..n {
        for y in 0..n {
            if p.leq(x, y) {
                table[x * n + y] = x;
            } else if p.leq(y, x) {
                table[x * n + y] = y;
            }
        }
    }
    table
}

fn require_directed(p: &Poset) -> Result<()> {
    match p.downward_directed_violation() {
        None => Ok(()),
        Some((x, y)) => Err(Error::NotDownwardDirected(
            p.label(x).into(),
            p.label(y).into(),
        )),
    }
}

/// Builds an assigned directoid: meets of comparable pairs, and `chooser`'s
/// pick from `L(x, y)` for incomparable ones.
pub fn assign_directoid(
    p: &Poset,
    inv: Option<&[usize]>,
    chooser: &dyn Chooser,
) -> Result<MeetDirectoid> {
    require_directed(p)?;
    let n = p.size();
    let mut table = meets_of_comparables(p);
    for x in 0..n {
        for y in (x + 1)..n {
            if p.incomparable(x, y) {
                let cone = p.lower_of(&[x, y]);
                let pick = chooser.choose(x, y, &cone);
                if !cone.contains(pick) {
                    return Err(Error::Precondition(format!(
                        "chooser picked `{}`, not a lower bound of `{}` and `{}`",
                        p.label(pick.min(n - 1)),
                        p.label(x),
                        p.label(y)
                    )));
                }
                table[x * n + y] = pick;
                table[y * n + x] = pick;
            }
        }
    }
    MeetDirectoid::new(p.labels().to_vec(), table, inv.map(<[usize]>::to_vec))
}

/// Every assigned directoid of a downward directed poset, enumerated as a
/// mixed-radix counter over the incomparable pairs (first pair slowest).
#[derive(Clone, Debug)]
pub struct AssignmentSpace {
    labels: Vec<String>,
    inv: Option<Vec<usize>>,
    base: Vec<usize>,
    slots: Vec<(usize, usize, Vec<usize>)>,
}

impl AssignmentSpace {
    pub fn new(p: &Poset, inv: Option<&[usize]>) -> Result<Self> {
        require_directed(p)?;
        let n = p.size();
        let mut slots = Vec::new();
        for x in 0..n {
            for y in (x + 1)..n {
                if p.incomparable(x, y) {
                    slots.push((x, y, p.lower_of(&[x, y]).members()));
                }
            }
        }
        Ok(AssignmentSpace {
            labels: p.labels().to_vec(),
            inv: inv.map(<[usize]>::to_vec),
            base: meets_of_comparables(p),
            slots,
        })
    }

    /// Number of assignments, saturating at `u128::MAX`.
    pub fn count(&self) -> u128 {
        self.slots
            .iter()
            .fold(1u128, |acc, (_, _, c)| acc.saturating_mul(c.len() as u128))
    }

    pub fn iter(&self) -> impl Iterator<Item = MeetDirectoid> + '_ {
        let n = self.labels.len();
        let mut digits = vec![0usize; self.slots.len()];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let mut table = self.base.clone();
            for ((x, y, choices), &d) in self.slots.iter().zip(&digits) {
                table[x * n + y] = choices[d];
                table[y * n + x] = choices[d];
            }
            // advance, last slot fastest
            done = true;
            for (k, digit) in digits.iter_mut().enumerate().rev() {
                *digit += 1;
                if *digit < self.slots[k].2.len() {
                    done = false;
                    break;
                }
                *digit = 0;
            }
            Some(
                MeetDirectoid::new(self.labels.clone(), table, self.inv.clone())
                    .expect("assigned tables are well formed"),
            )
        })
    }
}

/// All assigned directoids, or [`Error::TooManyAssignments`] when there are
/// more than `cap`.
pub fn all_assignments(p: &Poset, inv: Option<&[usize]>, cap: u128) -> Result<Vec<MeetDirectoid>> {
    let space = AssignmentSpace::new(p, inv)?;
    let count = space.count();
    if count > cap {
        return Err(Error::TooManyAssignments { count, cap });
    }
    Ok(space.iter().collect())
}
