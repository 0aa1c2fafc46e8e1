use kleene_core::completion::{dedekind_macneille, dedekind_macneille_plain};
use kleene_core::directoid::{all_assignments, characterizations, AssignmentSpace};
use kleene_core::fixtures;
use kleene_core::{are_isomorphic, InvolutivePoset, Poset};

fn involutive_fixtures() -> Vec<(&'static str, InvolutivePoset)> {
    fixtures::ALL
        .iter()
        .filter_map(|(name, _)| {
            fixtures::document(name)
                .to_involutive()
                .unwrap()
                .map(|ip| (*name, ip))
        })
        .collect()
}

#[test]
fn completion_of_kleene_nonlattice() {
    let ip = fixtures::involutive("kleene_nonlattice");
    let c = dedekind_macneille(&ip).unwrap();
    assert_eq!(c.len(), 7);
    let dm = c.as_involutive().unwrap();
    let expected = fixtures::involutive("kleene_nonlattice_completion");
    assert!(are_isomorphic(dm.base(), expected.base(), Some((dm.inv(), expected.inv()))).is_some());
    let fixed = dm.fixed_points();
    assert_eq!(fixed.len(), 1);
    let ideal = c.ideal(fixed.iter().next().unwrap());
    assert_eq!(ip.base().subset_labels(ideal), ["0", "a", "b"]);
    assert!(dm.is_kleene().unwrap());
    assert!(dm.base().is_lattice());
}

#[test]
fn star_routes_agree_on_fixtures() {
    for (name, ip) in involutive_fixtures() {
        let c = dedekind_macneille(&ip).unwrap();
        let star = c.star().unwrap();
        for i in 0..c.len() {
            assert_eq!(c.star_via_upper_cone(i), Some(star[i]), "{name}");
        }
        assert!(
            c.as_involutive().unwrap().is_antitone_involution(),
            "{name}"
        );
    }
}

#[test]
fn completion_embeds_the_poset() {
    for (name, _) in fixtures::ALL {
        let p = fixtures::poset(name);
        let c = dedekind_macneille_plain(&p);
        let e = c.embedding();
        let image =
            Poset::from_relation(p.labels().to_vec(), |x, y| c.order().leq(e[x], e[y])).unwrap();
        assert!(are_isomorphic(&p, &image, None).is_some(), "{name}");
        assert!(c.order().is_lattice(), "{name}");
        for i in 0..c.len() {
            for j in 0..c.len() {
                assert_eq!(Some(c.meet(i, j)), c.order().meet(i, j), "{name}");
                assert_eq!(Some(c.join(i, j)), c.order().join(i, j), "{name}");
            }
        }
    }
}

#[test]
fn completion_preserves_pseudo_kleene_on_fixtures() {
    for (name, ip) in involutive_fixtures() {
        let dm = dedekind_macneille(&ip).unwrap().as_involutive().unwrap();
        assert_eq!(
            ip.is_pseudo_kleene().unwrap(),
            dm.is_pseudo_kleene().unwrap(),
            "{name}"
        );
        assert_eq!(ip.is_kleene().unwrap(), dm.is_kleene().unwrap(), "{name}");
    }
}

#[test]
fn completion_of_a_lattice_is_itself() {
    let ip = fixtures::involutive("kleene_lattice");
    let dm = dedekind_macneille(&ip).unwrap().as_involutive().unwrap();
    assert!(are_isomorphic(ip.base(), dm.base(), Some((ip.inv(), dm.inv()))).is_some());
}

#[test]
fn kleene_nonlattice_has_three_assignments() {
    let ip = fixtures::involutive("kleene_nonlattice");
    let all = all_assignments(ip.base(), Some(ip.inv()), 1000).unwrap();
    assert_eq!(all.len(), 3);
    for d in &all {
        assert!(characterizations(d, &ip).iter().all(|c| c.agrees()));
        assert!(d.set_laws().unwrap().core_laws_hold());
    }
}

#[test]
fn characterizations_agree_on_fixtures() {
    for name in [
        "pseudo_kleene_nondistributive",
        "strong_not_strict",
        "strict_kleene",
        "kleene_lattice",
    ] {
        let ip = fixtures::involutive(name);
        let space = AssignmentSpace::new(ip.base(), Some(ip.inv())).unwrap();
        for d in space.iter().take(1000) {
            for c in characterizations(&d, &ip) {
                assert!(c.agrees(), "{name}: {c:?}");
            }
        }
    }
}

#[test]
fn expected_law_verdicts() {
    let verdicts = |name: &str| -> Vec<(&'static str, bool)> {
        let ip = fixtures::involutive(name);
        let d = AssignmentSpace::new(ip.base(), Some(ip.inv()))
            .unwrap()
            .iter()
            .next()
            .unwrap();
        characterizations(&d, &ip)
            .into_iter()
            .map(|c| (c.class, c.law_side))
            .collect()
    };
    let two = verdicts("pseudo_kleene_nondistributive");
    assert!(two.contains(&("pseudo-Kleene", true)));
    assert!(two.contains(&("Kleene", false)));
    assert!(two.contains(&("strong", false)));
    let six = verdicts("strong_not_strict");
    assert!(six.contains(&("strong", true)));
    assert!(six.contains(&("strict", false)));
    let seven = verdicts("strict_kleene");
    assert!(seven.contains(&("strict Kleene", true)));
}
