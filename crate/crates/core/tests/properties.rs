mod support;

use proptest::prelude::*;

use support::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn galois(a in any::<u64>(), b in any::<u64>()) {
        galois_identities(a, b)?;
    }

    #[test]
    fn antitone_cones(a in any::<u64>(), b in any::<u64>()) {
        cones_are_antitone(a, b)?;
    }

    #[test]
    fn free_inclusions(x in any::<usize>(), y in any::<usize>(), z in any::<usize>()) {
        free_distributivity_inclusions(x, y, z)?;
    }

    #[test]
    fn involution_and_cones(a in any::<u64>()) {
        involution_swaps_cones(a)?;
    }

    #[test]
    fn completion(x in any::<usize>(), y in any::<usize>(), a in any::<u64>()) {
        completion_round_trip(x, y, a)?;
    }

    #[test]
    fn joins(x in any::<usize>(), y in any::<usize>()) {
        join_laws(x, y)?;
    }

    #[test]
    fn residuation(x in any::<usize>(), y in any::<usize>()) {
        zero_absorbs_and_primes_dualize(x, y)?;
    }

    #[test]
    fn twist_embedding(x in any::<usize>(), y in any::<usize>(), pivot in any::<usize>()) {
        twist_embedding_laws(x, y, pivot)?;
    }
}

#[test]
fn every_fixture_is_exercised() {
    let fs = all();
    assert_eq!(fs.len(), 9);
    assert!(fs.iter().filter(|f| f.residuated.is_some()).count() >= 5);
    assert!(fs.iter().filter(|f| f.directoid.is_some()).count() >= 5);
    assert!(fs.iter().filter(|f| !f.twists.is_empty()).count() >= 5);
    assert_eq!(config().cases, 1000);
}
