use doxa_core::beliefs::{audit_axioms, believes};
use doxa_core::frames::{check_relation_properties, check_structure_properties, verify_frame_theorems};
use doxa_core::group::{group_relation, transitive_closure, verify_group_proposition};
use doxa_core::rational::{format_rational, parse_rational};
use doxa_core::search::random_divisible_with;
use doxa_core::{blindspots, info_from_relation, relation_from_info, Event, Profile, Relation, StateSpace};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A relation on 1..=6 states as a list of pairs.
fn relation() -> impl Strategy<Value = Relation> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::ANY, n * n).prop_map(move |bits| {
            let space = StateSpace::numbered(n).unwrap();
            let pairs = (0..n * n).filter(|&k| bits[k]).map(|k| (k / n, k % n));
            Relation::from_pairs(&space, pairs).unwrap()
        })
    })
}

fn holds(rel: &Relation, a: usize, b: usize) -> bool {
    rel.pairs().any(|p| p == (a, b))
}

fn naive_serial(rel: &Relation) -> bool {
    let n = rel.space().len();
    (0..n).all(|a| (0..n).any(|b| holds(rel, a, b)))
}

fn naive_transitive(rel: &Relation) -> bool {
    let n = rel.space().len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(holds(rel, a, b) && holds(rel, b, c)) || holds(rel, a, c))))
}

fn naive_euclidean(rel: &Relation) -> bool {
    let n = rel.space().len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(holds(rel, a, b) && holds(rel, a, c)) || holds(rel, b, c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn relation_flags_match_definitions(rel in relation()) {
        let props = check_relation_properties(&rel);
        prop_assert_eq!(props.serial.holds(), naive_serial(&rel));
        prop_assert_eq!(props.transitive.holds(), naive_transitive(&rel));
        prop_assert_eq!(props.euclidean.holds(), naive_euclidean(&rel));
    }

    #[test]
    fn structure_flags_mirror_relation_flags(rel in relation()) {
        let r = check_relation_properties(&rel);
        let s = check_structure_properties(&info_from_relation(&rel));
        prop_assert_eq!(r.serial.holds(), s.viable.holds());
        prop_assert_eq!(r.transitive.holds(), s.inclusive.holds());
        prop_assert_eq!(r.euclidean.holds(), s.mutual.holds());
    }

    #[test]
    fn frame_theorems_hold(rel in relation()) {
        let report = verify_frame_theorems(&rel);
        prop_assert!(report.all_passed(), "{}", report);
    }

    #[test]
    fn round_trip(rel in relation()) {
        let info = info_from_relation(&rel);
        prop_assert_eq!(&relation_from_info(&info), &rel);
        prop_assert_eq!(info_from_relation(&relation_from_info(&info)), info);
    }

    #[test]
    fn blindspots_are_unreached(rel in relation()) {
        let n = rel.space().len();
        let b = blindspots(&info_from_relation(&rel));
        for v in 0..n {
            prop_assert_eq!(b.contains(v), !(0..n).any(|w| holds(&rel, w, v)));
        }
    }

    #[test]
    fn closure_is_least_transitive_superset(rel in relation()) {
        let closed = transitive_closure(&rel);
        prop_assert!(rel.is_subset(&closed));
        prop_assert!(naive_transitive(&closed));
        prop_assert_eq!(&transitive_closure(&closed), &closed);
        // every added pair is reachable by a path in the original relation
        let n = rel.space().len();
        for a in 0..n {
            let mut reach = Event::empty(n);
            let mut frontier: Vec<usize> = rel.successors(a).iter().collect();
            while let Some(x) = frontier.pop() {
                if !reach.contains(x) {
                    reach.insert(x);
                    frontier.extend(rel.successors(x).iter());
                }
            }
            prop_assert_eq!(closed.successors(a), &reach);
        }
    }

    #[test]
    fn belief_operator_matches_definition(rel in relation(), mask in any::<u64>()) {
        let info = info_from_relation(&rel);
        let n = rel.space().len();
        let e = Event::from_mask(n, mask);
        let expected = Event::from_indices(n, (0..n).filter(|&w| (0..n).all(|v| !holds(&rel, w, v) || e.contains(v))));
        prop_assert_eq!(believes(&info, &e), expected);
    }

    #[test]
    fn axiom_audit_follows_frame_properties(rel in relation()) {
        let info = info_from_relation(&rel);
        let props = check_structure_properties(&info);
        let audit = audit_axioms(&info);
        prop_assert!(audit.n.holds() && audit.k.holds());
        prop_assert_eq!(audit.d.holds(), props.viable.holds());
        prop_assert_eq!(audit.four.holds(), props.inclusive.holds());
        prop_assert_eq!(audit.five.holds(), props.mutual.holds());
    }

    #[test]
    fn group_proposition_on_pairs(a in relation(), seed in any::<u64>()) {
        let space = a.space().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = doxa_core::search::random_relation(&mut rng, &space, 0.4);
        let profile = Profile::numbered(vec![info_from_relation(&a), info_from_relation(&b)]).unwrap();
        let report = verify_group_proposition(&profile);
        prop_assert!(report.all_passed(), "{}", report);
        prop_assert!(a.is_subset(&group_relation(&profile)));
    }

    #[test]
    fn shared_blindspot_profiles_are_fixed_points(n in 1usize..=7, seed in any::<u64>(), mask in any::<u64>()) {
        let space = StateSpace::numbered(n).unwrap();
        let mut blind = Event::from_mask(n, mask);
        blind.remove(0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let structures = (0..3).map(|_| random_divisible_with(&mut rng, &space, &blind).unwrap()).collect();
        let profile = Profile::numbered(structures).unwrap();
        let report = verify_group_proposition(&profile);
        prop_assert!(report.all_passed(), "{}", report);
        prop_assert_eq!(
            report.get("group information is a fixed point"),
            Some(&doxa_core::Outcome::Pass)
        );
    }

    #[test]
    fn rationals_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let text = format!("{p}/{q}");
        let r = parse_rational(&text).unwrap();
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }
}
