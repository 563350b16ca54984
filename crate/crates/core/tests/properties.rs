use proptest::prelude::*;
use proptest::sample::select;

use zideal::corpus::DEFAULT_CORPUS;
use zideal::enumerate::{enumerate_small, Mode};
use zideal::{
    builtin, parse_semiring, registry, render_text, serialize_semiring, verify_corpus, ElemSet,
    Limits, Report, SemiringTable, VerifyOptions, ZContext,
};

fn corpus_table(name: &str) -> SemiringTable {
    builtin(name, &Limits::default()).unwrap().table
}

fn any_table() -> impl Strategy<Value = SemiringTable> {
    prop_oneof![
        select(DEFAULT_CORPUS).prop_map(corpus_table),
        (5usize..=6, any::<u64>()).prop_map(|(n, seed)| {
            enumerate_small(n, Mode::Random { seed, count: 1 }).unwrap()[0].table.clone()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn serialize_then_parse_is_identity(t in any_table()) {
        let text = serialize_semiring(&t);
        let back = parse_semiring(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(serialize_semiring(&back), text);
    }

    #[test]
    fn z_closure_is_a_closure_operator(t in any_table(), seed in any::<u64>()) {
        let ctx = ZContext::build(t, &Limits::default()).unwrap();
        let ideals = ctx.lattice().ideals();
        let a = ideals[(seed % ideals.len() as u64) as usize];
        let b = ideals[((seed >> 32) % ideals.len() as u64) as usize];
        let ca = ctx.z_closure(a);
        prop_assert!(a.is_subset(ca));
        prop_assert_eq!(ctx.z_closure(ca), ca);
        prop_assert!(ctx.is_z_ideal(ca));
        if a.is_subset(b) {
            prop_assert!(ca.is_subset(ctx.z_closure(b)));
        }
        prop_assert_eq!(ctx.z_closure(a & b), ca & ctx.z_closure(b));
    }

    #[test]
    fn z_ideals_are_closed_under_intersection(t in any_table()) {
        let ctx = ZContext::build(t, &Limits::default()).unwrap();
        let zs = ctx.z_ideals();
        prop_assert!(zs.contains(&ctx.lattice().whole()));
        for &a in zs {
            for &b in zs {
                prop_assert!(ctx.is_z_ideal(a & b));
            }
        }
    }

    #[test]
    fn text_rendering_survives_a_json_round_trip(names in proptest::collection::vec(select(DEFAULT_CORPUS), 1..4)) {
        let limits = Limits::default();
        let entries: Vec<_> = names.iter().map(|n| builtin(n, &limits).unwrap()).collect();
        let specs: Vec<_> = registry().iter().collect();
        let report = verify_corpus(&specs, &entries, &VerifyOptions::default()).unwrap();
        let back: Report = serde_json::from_str(&report.to_json()).unwrap();
        prop_assert_eq!(render_text(&back), render_text(&report));
        prop_assert_eq!(back, report);
    }
}

#[test]
fn empty_set_is_not_an_ideal() {
    let ctx = ZContext::build(corpus_table("Z4"), &Limits::default()).unwrap();
    assert!(!ctx.is_z_ideal(ElemSet::EMPTY));
}
