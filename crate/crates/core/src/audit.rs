//! Exhaustive audits of the structural claims over small instances.
//!
//! Each claim names an instance space (posets, posets with a pivot, posets
//! with an antitone involution, with any involutive map, or with an
//! assigned directoid on top) and a check evaluated on every instance.
//! Instances are visited by size, then by canonical poset order, then by
//! map and assignment order; the first failure is the reported witness.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::completion::dedekind_macneille;
use crate::directoid::{AssignmentSpace, MeetDirectoid};
use crate::enumeration::{
    enumerate_involutions, enumerate_involutive_maps, enumerate_posets_bounded, MAX_BOUND,
};
use crate::error::{Error, Result};
use crate::involution::InvolutivePoset;
use crate::order::{DistributivityForm, Poset};
use crate::residuation::{nonzero_meet_violation, ResiduatedStructure};
use crate::twist::twist;

pub const DEFAULT_ASSIGNMENT_CAP: u128 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Space {
    Posets,
    PosetsWithPivot,
    Involutive,
    Directoids,
    DirectoidsWithMaps,
}

impl Space {
    fn uses_assignments(self) -> bool {
        matches!(self, Space::Directoids | Space::DirectoidsWithMaps)
    }
}

/// Result of a check on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Hypotheses not met.
    Vacuous,
    Holds,
    Fails(String),
}

/// One audited statement.
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub space: Space,
    check: fn(&Case) -> Outcome,
}

/// The objects one check sees.
pub struct Case<'a> {
    pub poset: &'a Poset,
    pub map: Option<&'a [usize]>,
    pub pivot: Option<usize>,
    pub directoid: Option<&'a MeetDirectoid>,
}

impl Case<'_> {
    fn involutive(&self) -> InvolutivePoset {
        InvolutivePoset::new(
            self.poset.clone(),
            self.map.expect("space has a map").to_vec(),
        )
        .expect("map is total")
    }

    fn directoid(&self) -> &MeetDirectoid {
        self.directoid.expect("space has a directoid")
    }

    fn label(&self, x: usize) -> &str {
        self.poset.label(x)
    }
}

/// A replayable instance: the poset by its cover relation, plus the map,
/// pivot and meet table where the space has them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub elements: Vec<String>,
    pub covers: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub map: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pivot: Option<usize>,
    /// Row-major `x ⊓ y`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub meet_table: Option<Vec<usize>>,
}

impl Instance {
    pub fn poset(&self) -> Result<Poset> {
        Poset::from_covers(self.elements.clone(), &self.covers)
    }

    fn capture(case: &Case) -> Self {
        Instance {
            elements: case.poset.labels().to_vec(),
            covers: case.poset.covers(),
            map: case.map.map(<[usize]>::to_vec),
            pivot: case.pivot,
            meet_table: case.directoid.map(|d| d.table().to_vec()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub instance: Instance,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    Confirmed { instances: u64 },
    Refuted { witness: Witness },
}

impl Verdict {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, Verdict::Confirmed { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub claim: &'static str,
    pub statement: &'static str,
    pub space: Space,
    pub max_n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment_cap: Option<u128>,
    /// Posets visited, by size, up to isomorphism.
    pub posets: usize,
    /// Instances visited before stopping.
    pub instances: u64,
    /// Instances whose hypotheses held.
    pub applicable: u64,
    /// Posets whose assignment space exceeded the cap and was truncated.
    pub sampled_posets: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Later failures, when collecting all of them.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub further_witnesses: Vec<Witness>,
}

#[derive(Clone, Copy, Debug)]
pub struct AuditOptions {
    pub max_n: usize,
    pub assignment_cap: u128,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Keep going after the first failure.
    pub collect_all: bool,
}

impl AuditOptions {
    pub fn new(max_n: usize) -> Self {
        AuditOptions {
            max_n,
            assignment_cap: DEFAULT_ASSIGNMENT_CAP,
            jobs: None,
            collect_all: false,
        }
    }
}

fn holds_if(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Fails(detail())
    }
}

fn cancellation(c: &Case) -> Outcome {
    let ip = c.involutive();
    let p = c.poset;
    let Some(bottom) = p.bottom() else {
        return Outcome::Vacuous;
    };
    if p.top().is_none() || !p.is_distributive(DistributivityForm::LU) {
        return Outcome::Vacuous;
    }
    let mut any = false;
    for a in 0..p.size() {
        for b in 0..p.size() {
            if p.leq(a, b) && p.lower_of(&[b, ip.prime(a)]).singleton() == Some(bottom) {
                any = true;
                if !ip.cancellation_holds(a, b).expect("hypotheses checked") {
                    return Outcome::Fails(format!("a={}, b={}", c.label(a), c.label(b)));
                }
            }
        }
    }
    if any {
        Outcome::Holds
    } else {
        Outcome::Vacuous
    }
}

fn unique_fixed_point(c: &Case) -> Outcome {
    let ip = c.involutive();
    if !ip.is_pseudo_kleene().expect("antitone involution") {
        return Outcome::Vacuous;
    }
    let fixed = ip.fixed_points();
    holds_if(fixed.len() <= 1, || {
        format!("fixed points {}", c.poset.format_subset(&fixed))
    })
}

fn completion_pseudo_kleene(c: &Case) -> Outcome {
    let ip = c.involutive();
    let dm = dedekind_macneille(&ip)
        .expect("antitone involution")
        .as_involutive()
        .expect("has star");
    let base = ip.is_pseudo_kleene().expect("valid");
    let completed = dm.base().is_lattice() && dm.is_pseudo_kleene().unwrap_or(false);
    holds_if(base == completed, || {
        format!("pseudo-Kleene poset: {base}; completion a pseudo-Kleene algebra: {completed}")
    })
}

fn completion_kleene_sides(c: &Case) -> (bool, bool) {
    let ip = c.involutive();
    let dm = dedekind_macneille(&ip)
        .expect("antitone involution")
        .as_involutive()
        .expect("has star");
    let base = ip.is_kleene().expect("valid");
    let completed = dm.base().is_lattice() && dm.is_kleene().unwrap_or(false);
    (base, completed)
}

fn completion_kleene(c: &Case) -> Outcome {
    match completion_kleene_sides(c) {
        (false, _) => Outcome::Vacuous,
        (true, completed) => holds_if(completed, || {
            "Kleene poset whose completion is not a Kleene algebra".into()
        }),
    }
}

fn completion_kleene_converse(c: &Case) -> Outcome {
    match completion_kleene_sides(c) {
        (_, false) => Outcome::Vacuous,
        (base, true) => holds_if(base, || {
            "completion is a Kleene algebra but the poset is not Kleene".into()
        }),
    }
}

fn involution_laws(c: &Case) -> Outcome {
    let d = c.directoid();
    let laws = d.involution_law_violation().expect("map present").is_none();
    let antitone = c.involutive().is_antitone_involution();
    holds_if(laws == antitone, || {
        format!("laws (x''=x, antitone) hold: {laws}; antitone involution: {antitone}")
    })
}

fn compare(c: &Case, order_side: bool, law_side: bool) -> Outcome {
    holds_if(order_side == law_side, || {
        format!(
            "order-side property: {order_side}; directoid laws: {law_side}; table {:?}",
            c.directoid().table()
        )
    })
}

fn laws_one_two(d: &MeetDirectoid) -> bool {
    d.involution_law_violation().expect("map present").is_none()
}

fn normality(c: &Case) -> Outcome {
    let d = c.directoid();
    let laws = laws_one_two(d) && d.normality_violation().expect("involutive").is_none();
    compare(c, c.involutive().is_pseudo_kleene().expect("valid"), laws)
}

fn distributivity_law(c: &Case) -> Outcome {
    let d = c.directoid();
    let laws = laws_one_two(d)
        && d.normality_violation().expect("involutive").is_none()
        && d.distributivity_violation().expect("involutive").is_none();
    compare(c, c.involutive().is_kleene().expect("valid"), laws)
}

fn strong_implies_pseudo_kleene(c: &Case) -> Outcome {
    let ip = c.involutive();
    if !ip.is_strong().expect("valid") {
        return Outcome::Vacuous;
    }
    holds_if(ip.is_pseudo_kleene().expect("valid"), || {
        "strong but not pseudo-Kleene".into()
    })
}

fn strong_law(c: &Case) -> Outcome {
    let d = c.directoid();
    let laws = laws_one_two(d) && d.strong_violation().expect("involutive").is_none();
    compare(c, c.involutive().is_strong().expect("valid"), laws)
}

fn strict_law(c: &Case) -> Outcome {
    let (Some(bottom), Some(top)) = c.poset.bounds() else {
        return Outcome::Vacuous;
    };
    let d = c.directoid();
    let ip = c.involutive();
    let strict = ip.is_strict().expect("bounded");
    let one_two = laws_one_two(d);
    let six = one_two
        && d.strict_violation(bottom, top)
            .expect("bounds match")
            .is_none();
    let four = one_two && d.distributivity_violation().expect("involutive").is_none();
    if strict != six {
        return compare(c, strict, six);
    }
    let strict_kleene = strict && c.poset.is_distributive(DistributivityForm::LU);
    holds_if(strict_kleene == (six && four), || {
        format!(
            "strict Kleene: {strict_kleene}; strict and distributivity laws: {}",
            six && four
        )
    })
}

fn residuated(c: &Case) -> Outcome {
    let ip = c.involutive();
    let p = c.poset;
    if p.bottom().is_none() || p.top().is_none() {
        return Outcome::Vacuous;
    }
    let strict_kleene =
        ip.is_strict().expect("bounded") && p.is_distributive(DistributivityForm::LU);
    if !strict_kleene || nonzero_meet_violation(p).expect("bounded").is_some() {
        return Outcome::Vacuous;
    }
    let report = ResiduatedStructure::new(ip)
        .expect("bounded antitone involution")
        .verify_kleene_residuated();
    holds_if(report.all_hold(), || {
        let failed: Vec<String> = [
            &report.commutativity,
            &report.unit,
            &report.associativity,
            &report.adjointness,
        ]
        .iter()
        .filter(|a| !a.holds())
        .map(|a| format!("{} at {:?}", a.name, a.first_failure))
        .collect();
        failed.join("; ")
    })
}

fn derived_properties(c: &Case) -> Outcome {
    let p = c.poset;
    if p.bottom().is_none() || p.top().is_none() {
        return Outcome::Vacuous;
    }
    let checks = ResiduatedStructure::new(c.involutive())
        .expect("bounded")
        .derived_properties();
    match checks.iter().find(|k| !k.holds()) {
        None => Outcome::Holds,
        Some(k) => Outcome::Fails(format!("{} at {:?}", k.property, k.tally.first_failure)),
    }
}

fn twist_of(c: &Case) -> crate::twist::TwistPoset {
    twist(c.poset, c.pivot.expect("space has a pivot")).expect("pivot in range")
}

fn twist_pseudo_kleene(c: &Case) -> Outcome {
    let t = twist_of(c);
    let r = t.result();
    let centre = t.index_of_pair(t.pivot(), t.pivot());
    let ok = r.is_antitone_involution()
        && r.is_pseudo_kleene().unwrap_or(false)
        && centre.is_some()
        && r.fixed_points().singleton() == centre;
    holds_if(ok, || {
        format!(
            "fixed points {}",
            t.poset().format_subset(&r.fixed_points())
        )
    })
}

fn twist_embedding(c: &Case) -> Outcome {
    match twist_of(c).embedding() {
        Ok(_) => Outcome::Holds,
        Err(e) => Outcome::Fails(format!("{e:?}")),
    }
}

fn twist_distributivity(c: &Case) -> Outcome {
    let t = twist_of(c);
    let q_distributive = c.poset.is_distributive(DistributivityForm::LU);
    let kleene = t.result().is_kleene().unwrap_or(false);
    holds_if(q_distributive == kleene, || {
        let tp = t.poset();
        let triple = tp
            .distributivity_violation(DistributivityForm::LU)
            .map(|(x, y, z)| {
                let (l, r) = tp.distributivity_sides(DistributivityForm::LU, x, y, z);
                format!(
                    "; twist fails at x={}, y={}, z={}: {} vs {}",
                    tp.label(x),
                    tp.label(y),
                    tp.label(z),
                    tp.format_subset(&l),
                    tp.format_subset(&r)
                )
            })
            .unwrap_or_default();
        format!("distributive: {q_distributive}; twist Kleene: {kleene}{triple}")
    })
}

fn product_formula(c: &Case, restricted: bool) -> Outcome {
    match twist_of(c).product_formula_violation(restricted) {
        None => Outcome::Holds,
        Some(v) => Outcome::Fails(format!(
            "{} cone of {:?}: {:?} in the twist, {:?} as a product",
            v.cone, v.set, v.in_twist, v.product
        )),
    }
}

fn forms_agree(c: &Case) -> Outcome {
    let verdicts: Vec<bool> = DistributivityForm::ALL
        .iter()
        .map(|&f| c.poset.is_distributive(f))
        .collect();
    holds_if(verdicts.iter().all(|&v| v == verdicts[0]), || {
        DistributivityForm::ALL
            .iter()
            .zip(&verdicts)
            .map(|(f, v)| format!("{}: {v}", f.name()))
            .collect::<Vec<_>>()
            .join(", ")
    })
}

fn set_laws(c: &Case, printed: bool) -> Outcome {
    let laws = c.directoid().set_laws().expect("involutive directoid");
    if printed {
        holds_if(laws.pair_upper_inner_meet.is_none(), || {
            let (x, y) = laws.pair_upper_inner_meet.expect("failed");
            format!("x={}, y={}", c.label(x), c.label(y))
        })
    } else {
        holds_if(laws.core_laws_hold(), || format!("{laws:?}"))
    }
}

/// Every audited claim, in a fixed order.
pub fn registry() -> Vec<Claim> {
    vec![
        Claim {
            id: "Lem-1.1",
            statement: "bounded distributive, a ≤ b, L(b,a') = 0 imply L(a,a') = L(b,b') = 0 and U(a,a') = U(b,b') = 1",
            space: Space::Involutive,
            check: cancellation,
        },
        Claim {
            id: "Thm-2.2-unique-fixed-point",
            statement: "a pseudo-Kleene poset has at most one fixed point",
            space: Space::Involutive,
            check: unique_fixed_point,
        },
        Claim {
            id: "Thm-3.1",
            statement: "the completion is a pseudo-Kleene algebra iff the poset is pseudo-Kleene",
            space: Space::Involutive,
            check: completion_pseudo_kleene,
        },
        Claim {
            id: "Thm-3.2",
            statement: "the completion of a finite Kleene poset is a Kleene algebra",
            space: Space::Involutive,
            check: completion_kleene,
        },
        Claim {
            id: "Thm-3.2-converse",
            statement: "a finite poset whose completion is a Kleene algebra is a Kleene poset",
            space: Space::Involutive,
            check: completion_kleene_converse,
        },
        Claim {
            id: "Lem-4.1",
            statement: "an assigned directoid satisfies x'' = x and (x⊓y)'⊓y' = y' iff ' is an antitone involution",
            space: Space::DirectoidsWithMaps,
            check: involution_laws,
        },
        Claim {
            id: "Thm-4.2",
            statement: "pseudo-Kleene iff the assigned directoid satisfies the involution and normality laws",
            space: Space::Directoids,
            check: normality,
        },
        Claim {
            id: "Thm-4.3",
            statement: "Kleene iff the assigned directoid satisfies the normality and distributivity laws",
            space: Space::Directoids,
            check: distributivity_law,
        },
        Claim {
            id: "Lem-4.6",
            statement: "a strong pseudo-Kleene poset is pseudo-Kleene",
            space: Space::Involutive,
            check: strong_implies_pseudo_kleene,
        },
        Claim {
            id: "Thm-4.8",
            statement: "strong iff the assigned directoid satisfies the involution and strong laws",
            space: Space::Directoids,
            check: strong_law,
        },
        Claim {
            id: "Thm-4.11",
            statement: "strict (resp. strict Kleene) iff the assigned directoid satisfies the strict (and distributivity) laws",
            space: Space::Directoids,
            check: strict_law,
        },
        Claim {
            id: "Thm-5.2",
            statement: "a bounded strict Kleene poset with nonzero common lower bounds is Kleene residuated",
            space: Space::Involutive,
            check: residuated,
        },
        Claim {
            id: "Thm-5.4",
            statement: "tiered properties of odot and arrow",
            space: Space::Involutive,
            check: derived_properties,
        },
        Claim {
            id: "Thm-6.1-i",
            statement: "the twist is pseudo-Kleene with the unique fixed point (a,a)",
            space: Space::PosetsWithPivot,
            check: twist_pseudo_kleene,
        },
        Claim {
            id: "Thm-6.1-ii",
            statement: "x ↦ (x,a) is an order embedding",
            space: Space::PosetsWithPivot,
            check: twist_embedding,
        },
        Claim {
            id: "Thm-6.1-iii",
            statement: "Q is distributive iff the twist is a Kleene poset",
            space: Space::PosetsWithPivot,
            check: twist_distributivity,
        },
        Claim {
            id: "Twist-product-formula",
            statement: "cones in the twist are products of projected cones",
            space: Space::PosetsWithPivot,
            check: |c| product_formula(c, false),
        },
        Claim {
            id: "Twist-product-formula-restricted",
            statement: "cones in the twist are products of projected cones, restricted to the twist",
            space: Space::PosetsWithPivot,
            check: |c| product_formula(c, true),
        },
        Claim {
            id: "Distributivity-forms-equivalent",
            statement: "the four distributivity identities are equivalent",
            space: Space::Posets,
            check: forms_agree,
        },
        Claim {
            id: "Directoid-set-laws",
            statement: "cones are described by ⊓ and ⊔ (upper pair cone with inner join)",
            space: Space::Directoids,
            check: |c| set_laws(c, false),
        },
        Claim {
            id: "Directoid-upper-cone-printed",
            statement: "U(x,y) = { (z⊔x) ⊓ (z⊔y) }",
            space: Space::Directoids,
            check: |c| set_laws(c, true),
        },
    ]
}

pub fn claim(id: &str) -> Result<Claim> {
    registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

pub fn claim_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

#[derive(Default)]
struct PosetResult {
    instances: u64,
    applicable: u64,
    sampled: bool,
    witnesses: Vec<Witness>,
}

fn maps_for(space: Space, p: &Poset) -> Vec<Option<Vec<usize>>> {
    match space {
        Space::Posets | Space::PosetsWithPivot => vec![None],
        Space::Involutive | Space::Directoids => {
            enumerate_involutions(p).into_iter().map(Some).collect()
        }
        Space::DirectoidsWithMaps => enumerate_involutive_maps(p.size())
            .into_iter()
            .map(Some)
            .collect(),
    }
}

fn audit_poset(claim: &Claim, p: &Poset, cap: u128, collect_all: bool) -> PosetResult {
    let mut out = PosetResult::default();
    let mut visit = |case: &Case| -> bool {
        out.instances += 1;
        match (claim.check)(case) {
            Outcome::Vacuous => true,
            Outcome::Holds => {
                out.applicable += 1;
                true
            }
            Outcome::Fails(detail) => {
                out.applicable += 1;
                out.witnesses.push(Witness {
                    instance: Instance::capture(case),
                    detail,
                });
                collect_all
            }
        }
    };
    if claim.space.uses_assignments() && !p.is_downward_directed() {
        return out;
    }
    let pivots: Vec<Option<usize>> = if claim.space == Space::PosetsWithPivot {
        (0..p.size()).map(Some).collect()
    } else {
        vec![None]
    };
    for map in maps_for(claim.space, p) {
        for &pivot in &pivots {
            let base = Case {
                poset: p,
                map: map.as_deref(),
                pivot,
                directoid: None,
            };
            if !claim.space.uses_assignments() {
                if !visit(&base) {
                    return out;
                }
                continue;
            }
            let space = AssignmentSpace::new(p, map.as_deref()).expect("downward directed");
            if space.count() > cap {
                out.sampled = true;
            }
            let limit = usize::try_from(cap).unwrap_or(usize::MAX);
            for d in space.iter().take(limit) {
                let case = Case {
                    directoid: Some(&d),
                    ..base
                };
                if !visit(&case) {
                    return out;
                }
            }
        }
    }
    out
}

/// Runs `id` over every instance with at most `max_n` elements.
pub fn audit(id: &str, options: AuditOptions) -> Result<AuditReport> {
    let claim = claim(id)?;
    if options.max_n > MAX_BOUND {
        return Err(Error::BoundExceeded {
            n: options.max_n,
            max: MAX_BOUND,
        });
    }
    let mut posets = Vec::new();
    for n in 1..=options.max_n {
        posets.extend(enumerate_posets_bounded(n, true, MAX_BOUND)?);
    }
    let cap = options.assignment_cap;
    let run = || -> Vec<PosetResult> {
        posets
            .par_iter()
            .map(|p| audit_poset(&claim, p, cap, options.collect_all))
            .collect()
    };
    let results = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };

    let mut report = AuditReport {
        claim: claim.id,
        statement: claim.statement,
        space: claim.space,
        max_n: options.max_n,
        assignment_cap: claim.space.uses_assignments().then_some(cap),
        posets: posets.len(),
        instances: 0,
        applicable: 0,
        sampled_posets: 0,
        verdict: Verdict::Confirmed { instances: 0 },
        further_witnesses: Vec::new(),
    };
    let mut witnesses = Vec::new();
    for r in results {
        report.instances += r.instances;
        report.applicable += r.applicable;
        report.sampled_posets += usize::from(r.sampled);
        witnesses.extend(r.witnesses);
        if !witnesses.is_empty() && !options.collect_all {
            break;
        }
    }
    let mut witnesses = witnesses.into_iter();
    report.verdict = match witnesses.next() {
        Some(witness) => Verdict::Refuted { witness },
        None => Verdict::Confirmed {
            instances: report.applicable,
        },
    };
    report.further_witnesses = witnesses.collect();
    Ok(report)
}

/// Re-evaluates `id` on a witness instance; true when the violation recurs.
pub fn replay(id: &str, instance: &Instance) -> Result<bool> {
    let claim = claim(id)?;
    let poset = instance.poset()?;
    let directoid = match &instance.meet_table {
        Some(table) => Some(MeetDirectoid::new(
            poset.labels().to_vec(),
            table.clone(),
            instance.map.clone(),
        )?),
        None => None,
    };
    let case = Case {
        poset: &poset,
        map: instance.map.as_deref(),
        pivot: instance.pivot,
        directoid: directoid.as_ref(),
    };
    Ok(matches!((claim.check)(&case), Outcome::Fails(_)))
}
