use kleene_core::audit::{self, audit, replay, AuditOptions, Verdict};
use kleene_core::enumeration::{enumerate_involutions, enumerate_posets, enumerate_unary_maps};
use kleene_core::{are_isomorphic, fixtures, InvolutivePoset, Poset};

/// Every reflexive, antisymmetric, transitive relation on `n` points.
fn brute_force_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|(x, y)| x != y)
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut rel = vec![vec![false; n]; n];
        for x in 0..n {
            rel[x][x] = true;
        }
        for (k, &(x, y)) in pairs.iter().enumerate() {
            rel[x][y] = mask & (1 << k) != 0;
        }
        let antisymmetric = pairs.iter().all(|&(x, y)| !(rel[x][y] && rel[y][x]));
        let transitive =
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(rel[x][y] && rel[y][z]) || rel[x][z])));
        if antisymmetric && transitive {
            out.push(Poset::with_index_labels(n, |x, y| rel[x][y]).unwrap());
        }
    }
    out
}

fn classes(posets: &[Poset]) -> usize {
    let mut reps: Vec<&Poset> = Vec::new();
    for p in posets {
        if !reps.iter().any(|r| are_isomorphic(r, p, None).is_some()) {
            reps.push(p);
        }
    }
    reps.len()
}

#[test]
fn three_element_oracle() {
    let all = brute_force_posets(3);
    assert_eq!(all.len(), 19);
    assert_eq!(classes(&all), 5);
    assert_eq!(enumerate_posets(3, true).unwrap().len(), 5);
    assert_eq!(enumerate_posets(3, false).unwrap().len(), 19);
}

#[test]
fn four_and_five_element_oracle() {
    for (n, labelled, unlabelled) in [(4, 219, 16), (5, 4231, 63)] {
        let all = brute_force_posets(n);
        assert_eq!(all.len(), labelled);
        let reps = enumerate_posets(n, true).unwrap();
        assert_eq!(reps.len(), unlabelled);
        assert_eq!(classes(&reps), unlabelled);
        assert_eq!(enumerate_posets(n, false).unwrap().len(), labelled);
    }
}

#[test]
fn representatives_cover_every_class() {
    let reps = enumerate_posets(4, true).unwrap();
    for p in brute_force_posets(4) {
        assert_eq!(
            reps.iter()
                .filter(|r| are_isomorphic(r, &p, None).is_some())
                .count(),
            1
        );
    }
}

#[test]
fn involutions_match_brute_force() {
    for n in 1..=5 {
        for p in enumerate_posets(n, true).unwrap() {
            let brute: Vec<Vec<usize>> = enumerate_unary_maps(n)
                .filter(|m| {
                    InvolutivePoset::new(p.clone(), m.clone())
                        .unwrap()
                        .is_antitone_involution()
                })
                .collect();
            assert_eq!(enumerate_involutions(&p), brute, "{:?}", p.covers());
        }
    }
}

#[test]
fn kleene_nonlattice_involutions() {
    let p = fixtures::poset("kleene_nonlattice");
    let maps = enumerate_involutions(&p);
    assert_eq!(maps.len(), 2);
    let named: Vec<Vec<&str>> = maps
        .iter()
        .map(|m| m.iter().map(|&y| p.label(y)).collect())
        .collect();
    // elements 0 a b b' a' 1
    assert!(named.contains(&vec!["1", "a'", "b'", "b", "a", "0"]));
    assert!(named.contains(&vec!["1", "b'", "a'", "a", "b", "0"]));
}

#[test]
fn unique_fixed_point_up_to_six() {
    let report = audit("Thm-2.2-unique-fixed-point", AuditOptions::new(6)).unwrap();
    assert!(report.verdict.is_confirmed(), "{report:?}");
    assert!(report.applicable > 0);
}

#[test]
fn normality_characterization_up_to_five() {
    let report = audit("Thm-4.2", AuditOptions::new(5)).unwrap();
    assert!(report.verdict.is_confirmed(), "{report:?}");
    assert_eq!(report.assignment_cap, Some(1000));
}

#[test]
fn audits_are_deterministic() {
    for id in ["Thm-3.1", "Thm-6.1-iii", "Lem-4.1"] {
        let a = audit(id, AuditOptions::new(4)).unwrap();
        let b = audit(
            id,
            AuditOptions {
                jobs: Some(1),
                ..AuditOptions::new(4)
            },
        )
        .unwrap();
        let c = audit(
            id,
            AuditOptions {
                jobs: Some(3),
                ..AuditOptions::new(4)
            },
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
    }
}

#[test]
fn refutations_replay() {
    for id in audit::claim_ids() {
        let options = AuditOptions {
            collect_all: true,
            ..AuditOptions::new(4)
        };
        let report = audit(id, options).unwrap();
        if let Verdict::Refuted { witness } = &report.verdict {
            for w in std::iter::once(witness).chain(&report.further_witnesses) {
                assert!(replay(id, &w.instance).unwrap(), "{id}: {w:?}");
                let json = serde_json::to_string(&w.instance).unwrap();
                let back: audit::Instance = serde_json::from_str(&json).unwrap();
                assert!(replay(id, &back).unwrap());
            }
        }
    }
}

#[test]
fn expected_refutations() {
    let refuted: Vec<&str> = audit::claim_ids()
        .into_iter()
        .filter(|id| {
            !audit(id, AuditOptions::new(4))
                .unwrap()
                .verdict
                .is_confirmed()
        })
        .collect();
    assert_eq!(
        refuted,
        [
            "Thm-6.1-iii",
            "Twist-product-formula",
            "Directoid-upper-cone-printed"
        ]
    );
}

#[test]
fn bound_and_claim_errors() {
    assert!(audit("Thm-3.1", AuditOptions::new(8)).is_err());
    assert!(audit("nope", AuditOptions::new(2)).is_err());
}
