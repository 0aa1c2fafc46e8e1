use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{TestCaseError, TestRunner};

use kleene_core::completion::{dedekind_macneille_plain, CompletionLattice};
use kleene_core::directoid::{assign_directoid, LowestIndex, MeetDirectoid};
use kleene_core::residuation::ResiduatedStructure;
use kleene_core::twist::{twist, TwistPoset};
use kleene_core::{fixtures, DistributivityForm, InvolutivePoset, Poset, Subset};

pub struct Fixture {
    pub name: &'static str,
    pub poset: Poset,
    pub involutive: Option<InvolutivePoset>,
    pub completion: CompletionLattice,
    pub directoid: Option<MeetDirectoid>,
    pub residuated: Option<ResiduatedStructure>,
    pub twists: Vec<TwistPoset>,
}

pub fn all() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| {
        fixtures::ALL
            .iter()
            .map(|(name, _)| {
                let poset = fixtures::poset(name);
                let involutive = fixtures::document(name).to_involutive().unwrap();
                let directoid = involutive
                    .as_ref()
                    .and_then(|ip| assign_directoid(&poset, Some(ip.inv()), &LowestIndex).ok());
                let residuated = involutive
                    .clone()
                    .and_then(|ip| ResiduatedStructure::new(ip).ok());
                let twists = if poset.size() <= 8 {
                    (0..poset.size())
                        .map(|a| twist(&poset, a).unwrap())
                        .collect()
                } else {
                    Vec::new()
                };
                Fixture {
                    name,
                    completion: dedekind_macneille_plain(&poset),
                    poset,
                    involutive,
                    directoid,
                    residuated,
                    twists,
                }
            })
            .collect()
    })
}

fn subset(p: &Poset, mask: u64) -> Subset {
    p.subset((0..p.size()).filter(|&x| mask & (1 << x) != 0))
        .unwrap()
}

pub fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 1000,
        ..ProptestConfig::default()
    }
}

pub fn galois_identities(a: u64, b: u64) -> Result<(), TestCaseError> {
    for f in all() {
        let p = &f.poset;
        let (a, b) = (subset(p, a), subset(p, b));
        let l = p.lower_cone(&a).unwrap();
        let u = p.upper_cone(&a).unwrap();
        prop_assert!(
            a.is_subset_of(&p.lower_cone(&u).unwrap()).unwrap(),
            "{}",
            f.name
        );
        prop_assert!(
            a.is_subset_of(&p.upper_cone(&l).unwrap()).unwrap(),
            "{}",
            f.name
        );
        prop_assert_eq!(p.lower_cone(&p.upper_cone(&l).unwrap()).unwrap(), l.clone());
        prop_assert_eq!(p.upper_cone(&p.lower_cone(&u).unwrap()).unwrap(), u.clone());
        // A ≤ B ⟺ A ⊆ L(B) ⟺ B ⊆ U(A)
        let leq = p.leq_set(&a, &b).unwrap();
        prop_assert_eq!(leq, a.is_subset_of(&p.lower_cone(&b).unwrap()).unwrap());
        prop_assert_eq!(leq, b.is_subset_of(&u).unwrap());
    }
    Ok(())
}

pub fn cones_are_antitone(a: u64, b: u64) -> Result<(), TestCaseError> {
    for f in all() {
        let p = &f.poset;
        let small = subset(p, a & b);
        let big = subset(p, a);
        prop_assert!(p
            .lower_cone(&big)
            .unwrap()
            .is_subset_of(&p.lower_cone(&small).unwrap())
            .unwrap());
        prop_assert!(p
            .upper_cone(&big)
            .unwrap()
            .is_subset_of(&p.upper_cone(&small).unwrap())
            .unwrap());
    }
    Ok(())
}

pub fn free_distributivity_inclusions(x: usize, y: usize, z: usize) -> Result<(), TestCaseError> {
    for f in all() {
        let p = &f.poset;
        let n = p.size();
        let (x, y, z) = (x % n, y % n, z % n);
        for form in DistributivityForm::ALL {
            let (lhs, rhs) = p.distributivity_sides(form, x, y, z);
            let free = if form.checks_lhs_in_rhs() {
                rhs.is_subset_of(&lhs)
            } else {
                lhs.is_subset_of(&rhs)
            };
            prop_assert!(free.unwrap(), "{} {:?}", f.name, form);
        }
    }
    Ok(())
}

pub fn involution_swaps_cones(a: u64) -> Result<(), TestCaseError> {
    for f in all() {
        let Some(ip) = &f.involutive else { continue };
        let p = ip.base();
        let a = subset(p, a);
        let primed = ip.prime_set(&a).unwrap();
        prop_assert_eq!(
            ip.prime_set(&p.lower_cone(&a).unwrap()).unwrap(),
            p.upper_cone(&primed).unwrap()
        );
        prop_assert_eq!(ip.prime_set(&primed).unwrap(), a);
    }
    Ok(())
}

pub fn completion_round_trip(x: usize, y: usize, a: u64) -> Result<(), TestCaseError> {
    for f in all() {
        let p = &f.poset;
        let c = &f.completion;
        let (x, y) = (x % p.size(), y % p.size());
        let e = c.embedding();
        prop_assert_eq!(p.leq(x, y), c.order().leq(e[x], e[y]));
        prop_assert_eq!(c.ideal(e[x]), &p.lower_of(&[x]));
        // every L(A) is an element of the completion
        let l = p.lower_cone(&subset(p, a)).unwrap();
        prop_assert!(c.index_of(&l).is_some(), "{}", f.name);
    }
    Ok(())
}

pub fn join_laws(x: usize, y: usize) -> Result<(), TestCaseError> {
    for f in all() {
        let (Some(d), Some(ip)) = (&f.directoid, &f.involutive) else {
            continue;
        };
        let p = ip.base();
        let (x, y) = (x % p.size(), y % p.size());
        let join = d.join(x, y).unwrap();
        prop_assert_eq!(join, ip.prime(d.meet(ip.prime(x), ip.prime(y))));
        prop_assert_eq!(join, d.join(y, x).unwrap());
        prop_assert!(p.upper_of(&[x, y]).contains(join), "{}", f.name);
        prop_assert!(p.lower_of(&[x, y]).contains(d.meet(x, y)), "{}", f.name);
        prop_assert_eq!(d.meet(x, y) == x, join == y);
        prop_assert_eq!(d.meet(x, y) == x, p.leq(x, y));
    }
    Ok(())
}

pub fn zero_absorbs_and_primes_dualize(x: usize, y: usize) -> Result<(), TestCaseError> {
    for f in all() {
        let Some(r) = &f.residuated else { continue };
        let ip = r.involutive();
        let p = ip.base();
        let (x, y) = (x % p.size(), y % p.size());
        let zero = p.subset([r.bottom()]).unwrap();
        prop_assert_eq!(r.odot(x, r.bottom()), &zero);
        prop_assert_eq!(r.odot(r.bottom(), x), &zero);
        prop_assert_eq!(r.odot(x, y), &r.odot_by_definition(x, y));
        prop_assert_eq!(r.arrow(x, y), &r.arrow_by_definition(x, y));
        prop_assert_eq!(
            &ip.prime_set(r.odot(x, y)).unwrap(),
            r.arrow(x, ip.prime(y))
        );
        prop_assert_eq!(r.odot(x, y), r.odot(y, x));
        prop_assert!(!r.odot(x, y).is_empty() && !r.arrow(x, y).is_empty());
    }
    Ok(())
}

pub fn twist_embedding_laws(x: usize, y: usize, pivot: usize) -> Result<(), TestCaseError> {
    for f in all() {
        if f.twists.is_empty() {
            continue;
        }
        let t = &f.twists[pivot % f.twists.len()];
        let q = t.source();
        let (x, y) = (x % q.size(), y % q.size());
        let e = t.embedding().unwrap();
        prop_assert_eq!(q.leq(x, y), t.poset().leq(e[x], e[y]));
        let tx = t.poset().size();
        let (u, v) = (x % tx, y % tx);
        let r = t.result();
        prop_assert_eq!(t.poset().leq(u, v), t.poset().leq(r.prime(v), r.prime(u)));
        prop_assert_eq!(t.p1(r.prime(u)), t.p2(u));
    }
    Ok(())
}

macro_rules! run {
    ($results:ident, $name:ident, ($($v:ident: $t:ty),+)) => {
        let outcome = TestRunner::new(config())
            .run(&($(any::<$t>(),)+), |($($v,)+)| $name($($v),+))
            .map_err(|e| e.to_string());
        $results.push((stringify!($name), outcome));
    };
}

/// Runs every property for `config().cases` draws each.
#[allow(dead_code)]
pub fn run_all() -> Vec<(&'static str, Result<(), String>)> {
    let mut results = Vec::new();
    run!(results, galois_identities, (a: u64, b: u64));
    run!(results, cones_are_antitone, (a: u64, b: u64));
    run!(results, free_distributivity_inclusions, (x: usize, y: usize, z: usize));
    run!(results, involution_swaps_cones, (a: u64));
    run!(results, completion_round_trip, (x: usize, y: usize, a: u64));
    run!(results, join_laws, (x: usize, y: usize));
    run!(results, zero_absorbs_and_primes_dualize, (x: usize, y: usize));
    run!(results, twist_embedding_laws, (x: usize, y: usize, pivot: usize));
    results
}
