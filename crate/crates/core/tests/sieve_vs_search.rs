use sedf_core::search::{count_for_order, COUNT_MAX_ORDER};
use sedf_core::sieve::{enumerate, EnumerateOptions};
use sedf_core::Status;

#[test]
fn ruled_out_quadruples_have_no_solutions() {
    let mut checked = 0;
    for verdict in enumerate(15, EnumerateOptions::default()).unwrap() {
        if verdict.status != Status::RuledOut {
            continue;
        }
        let p = verdict.params;
        for (group, result) in count_for_order(p.v, p.m, p.k, p.lambda, COUNT_MAX_ORDER).unwrap() {
            assert!(result.exhausted, "{group} {p:?}");
            assert!(
                result.solutions.is_empty(),
                "{group} {p:?} ruled out by {:?}",
                verdict.reason
            );
        }
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn known_families_are_found() {
    for verdict in enumerate(15, EnumerateOptions::default()).unwrap() {
        if verdict.status != Status::KnownFamily {
            continue;
        }
        let p = verdict.params;
        let results = count_for_order(p.v, p.m, p.k, p.lambda, COUNT_MAX_ORDER).unwrap();
        // the known constructions live in the cyclic group, listed first
        assert!(!results[0].1.solutions.is_empty(), "{p:?}");
    }
}
