use kleene_core::fixtures;
use kleene_core::order::are_isomorphic;
use kleene_core::residuation::{nonzero_meet_violation, AdjointCase, ResiduatedStructure, Tier};
use kleene_core::twist::{twist, Agreement};

fn structure(name: &str) -> ResiduatedStructure {
    ResiduatedStructure::new(fixtures::involutive(name)).unwrap()
}

fn labels(r: &ResiduatedStructure, x: &str, y: &str) -> (usize, usize) {
    let p = r.involutive().base();
    (p.index_of(x).unwrap(), p.index_of(y).unwrap())
}

#[test]
fn strict_kleene_odot_and_arrow_values() {
    let r = structure("strict_kleene");
    let p = r.involutive().base().clone();
    let (b, c) = labels(&r, "b", "c");
    assert_eq!(p.subset_labels(r.odot(b, c)), ["0"]);
    assert_eq!(p.subset_labels(r.odot(b, b)), ["0", "a", "b"]);
    let (a, _) = labels(&r, "a", "a");
    assert_eq!(p.subset_labels(r.arrow(a, b)), ["1"]);
    assert_eq!(p.subset_labels(r.arrow(b, a)), ["b'", "a'", "1"]);
    let (zero, one) = labels(&r, "0", "1");
    assert_eq!(*r.arrow(one, zero), p.full_subset());
    for x in 0..p.size() {
        assert_eq!(*r.odot(x, one), p.lower_of(&[x]));
        assert_eq!(*r.odot(zero, x), p.subset([zero]).unwrap());
        assert_eq!(*r.odot(x, zero), p.subset([zero]).unwrap());
    }
    let zero_a = p.subset_of_labels(&["0", "a"]).unwrap();
    let just_b = p.subset_of_labels(&["b"]).unwrap();
    assert_eq!(
        p.subset_labels(&r.odot_sets(&zero_a, &just_b).unwrap().set),
        ["0"]
    );
}

#[test]
fn strict_kleene_is_residuated() {
    let r = structure("strict_kleene");
    let report = r.verify_kleene_residuated();
    assert!(report.all_hold(), "{report:?}");
    assert!(report.hypotheses_hold);
    assert_eq!(report.associativity.checked, 14 * 14 * 14);
    assert_eq!(report.adjointness.checked, 2744);
    for (case, count) in &report.case_coverage {
        assert!(*count > 0, "{case:?} never exercised");
    }
    assert_eq!(report.case_coverage.len(), AdjointCase::ALL.len());
    assert!(r.derived_properties().iter().all(|c| c.active && c.holds()));
}

#[test]
fn nonzero_meets_on_fixtures() {
    let p7 = fixtures::poset("strict_kleene");
    assert_eq!(nonzero_meet_violation(&p7).unwrap(), None);
    let p1 = fixtures::poset("kleene_nonlattice");
    let (a, b) = nonzero_meet_violation(&p1).unwrap().unwrap();
    assert_eq!((p1.label(a), p1.label(b)), ("a", "b"));
}

#[test]
fn strong_not_strict_fails_an_axiom() {
    let r = structure("strong_not_strict");
    let report = r.verify_kleene_residuated();
    assert!(!report.hypotheses_hold);
    assert!(!report.all_hold(), "{report:?}");
}

#[test]
fn tiers_are_gated() {
    let r = structure("kleene_nonlattice");
    let checks = r.derived_properties();
    for c in &checks {
        assert_eq!(c.active, c.tier == Tier::Bounded, "{}", c.property);
        assert!(c.holds());
    }
}

#[test]
fn forked_chain_twist() {
    let q = fixtures::poset("forked_chain");
    let a = q.index_of("a").unwrap();
    let t = twist(&q, a).unwrap();
    assert_eq!(t.len(), 13);
    assert!(t.element("b", "c").is_some());
    assert!(t.element("b", "b").is_none());
    let expected = fixtures::involutive("forked_chain_twist");
    assert!(are_isomorphic(t.poset(), expected.base(), Some((t.result().inv(), expected.inv()))).is_some());
    let embed = t.embedding().unwrap();
    assert_eq!(t.poset().label(embed[0]), "(0,a)");
    assert_eq!(t.poset().label(embed[a]), "(a,a)");

    let audit = t.audit();
    assert!(audit.pseudo_kleene_with_fixed_point);
    assert_eq!(audit.fixed_points, ["(a,a)"]);
    assert!(audit.embedding);
    assert!(audit.source_distributive);
    assert!(!audit.twist_kleene);
    assert_eq!(audit.distributivity_agreement, Agreement::Disagree);
    assert!(audit.restricted_products);
    assert!(audit.unrestricted_product_failure.is_some());

    let (lhs, rhs) = t
        .distributivity_sides(("a", "c"), ("0", "a"), ("a", "b"))
        .unwrap();
    assert_eq!(t.poset().subset_labels(&lhs), ["(0,b)", "(a,b)"]);
    assert_eq!(t.poset().subset_labels(&rhs), ["(0,b)"]);
}
