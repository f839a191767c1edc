use std::sync::OnceLock;

use debruijn_mis::enumerate::enumerate_orbit_reps;
use debruijn_mis::graph::{adjacent, cycle_of, theta};
use debruijn_mis::group::{act, act_mis, transporter};
use debruijn_mis::io::{parse_document, DocKind, SetDocument};
use debruijn_mis::sets::{is_comma_free, is_independent, validate_mis};
use debruijn_mis::{
    construct, decompose, from_loopless, to_loopless, CandidateSet, Kind, MaxIndepSet, Permutation,
    Word,
};
use proptest::prelude::*;

/// One representative per orbit for d = 1..=5.
fn reps() -> &'static Vec<MaxIndepSet> {
    static REPS: OnceLock<Vec<MaxIndepSet>> = OnceLock::new();
    REPS.get_or_init(|| {
        (1..=5)
            .flat_map(|d| enumerate_orbit_reps(d).unwrap())
            .map(|(s, _)| s)
            .collect()
    })
}

fn permutation(d: usize) -> impl Strategy<Value = Permutation> {
    Just((0..d as u8).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

/// A maximum independent set with loops over up to 5 digits, in arbitrary
/// position within its orbit.
fn scrambled_mis() -> impl Strategy<Value = MaxIndepSet> {
    (0..reps().len()).prop_flat_map(|i| {
        let rep = reps()[i].clone();
        permutation(rep.alphabet()).prop_map(move |sigma| act_mis(&sigma, &rep).unwrap())
    })
}

fn word(d: u8, len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..d, len).prop_map(Word::new)
}

proptest! {
    #[test]
    fn rotation_has_order_equal_to_length(w in (1usize..7).prop_flat_map(|len| word(5, len))) {
        let mut x = w.clone();
        for _ in 0..w.len() {
            x = theta(&x);
        }
        prop_assert_eq!(x, w);
    }

    #[test]
    fn rotation_cycles_are_directed_cycles(w in word(6, 3)) {
        let cycle = cycle_of(&w);
        prop_assert_eq!(cycle.len(), if w.is_loop() { 1 } else { 3 });
        prop_assert!(cycle.contains(&w));
        if !w.is_loop() {
            prop_assert!(adjacent(&w, &theta(&w)));
        }
    }

    #[test]
    fn action_is_a_group_action(
        (s, sigma, tau) in scrambled_mis().prop_flat_map(|s| {
            let d = s.alphabet();
            (Just(s), permutation(d), permutation(d))
        })
    ) {
        let composed = act(&sigma.compose(&tau), s.set()).unwrap();
        let stepwise = act(&sigma, &act(&tau, s.set()).unwrap()).unwrap();
        prop_assert_eq!(&composed, &stepwise);
        let back = act(&sigma.inverse(), &act(&sigma, s.set()).unwrap()).unwrap();
        prop_assert_eq!(&back, s.set());
        // Relabelling preserves being a maximum independent set.
        prop_assert!(validate_mis(&composed, Kind::WithLoops).is_ok());
    }

    #[test]
    fn transporter_recovers_relabelling(
        (s, sigma) in scrambled_mis().prop_flat_map(|s| {
            let d = s.alphabet();
            (Just(s), permutation(d))
        })
    ) {
        let t = act_mis(&sigma, &s).unwrap();
        let found = transporter(&s, &t).expect("same orbit");
        prop_assert_eq!(act_mis(&found, &s).unwrap(), t);
    }

    #[test]
    fn decompose_then_construct_is_identity(s in scrambled_mis()) {
        let trace = decompose(&s).unwrap();
        prop_assert_eq!(construct(&trace).unwrap(), s);
    }

    #[test]
    fn loopless_bijection_round_trips(s in scrambled_mis()) {
        let t = to_loopless(&s).unwrap();
        prop_assert_eq!(t.len(), s.len() - 1);
        prop_assert!(is_independent(t.set(), Kind::Loopless));
        prop_assert!(is_comma_free(t.set()));
        prop_assert_eq!(from_loopless(&t).unwrap(), s);
    }

    #[test]
    fn subsets_of_codes_stay_comma_free(
        (s, mask) in (scrambled_mis(), any::<u64>())
    ) {
        let t = to_loopless(&s).unwrap();
        let kept = t.words().iter().enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
            .map(|(_, w)| w.clone());
        let sub = CandidateSet::new(t.alphabet(), kept).unwrap();
        prop_assert!(is_comma_free(&sub));
    }

    #[test]
    fn json_documents_round_trip(
        (d, words) in (1usize..14).prop_flat_map(|d| {
            (Just(d), prop::collection::btree_set(word(d as u8, 3), 0..12))
        })
    ) {
        let set = CandidateSet::new(d, words).unwrap();
        let doc = SetDocument::from_set(&set, DocKind::Code);
        let json = doc.to_json();
        let parsed = parse_document(&json).unwrap();
        prop_assert!(parsed.warnings.is_empty());
        prop_assert_eq!(&parsed.doc, &doc);
        prop_assert_eq!(parsed.doc.to_json(), json);
        prop_assert_eq!(parsed.doc.candidate_set().unwrap(), set);
        if d <= 10 {
            prop_assert_eq!(parse_document(&doc.to_compact().unwrap()).unwrap().doc, doc);
        } else {
            prop_assert!(doc.to_compact().is_err());
        }
    }

    #[test]
    fn word_text_round_trip(w in (1u8..30).prop_flat_map(|d| word(d, 3).prop_map(move |w| (d, w)))) {
        let (d, w) = w;
        let label = w.label(d as usize);
        let back: Word = label.parse().unwrap();
        prop_assert_eq!(back, w);
    }
}
