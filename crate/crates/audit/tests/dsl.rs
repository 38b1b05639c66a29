use proptest::prelude::*;
use smul_audit::claims::{run_audit, AuditConfig};
use smul_audit::dsl::{parse_ring, parse_set, print_ring, print_set, ModuleExpr, RingExpr, SetExpr};
use smul_core::ring::ElemValue;

fn int() -> impl Strategy<Value = ElemValue> {
    (-40i64..200).prop_map(ElemValue::Int)
}

fn elem() -> impl Strategy<Value = ElemValue> {
    int().prop_recursive(2, 8, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(ElemValue::Tuple),
            inner.prop_map(|e| ElemValue::Class(Box::new(e))),
        ]
    })
}

fn gens() -> impl Strategy<Value = Vec<ElemValue>> {
    prop::collection::vec(elem(), 1..4)
}

fn ring_expr() -> impl Strategy<Value = RingExpr> {
    let leaf = prop_oneof![
        (2u64..500).prop_map(RingExpr::Zn),
        (1u32..6).prop_map(RingExpr::Bool),
        Just(RingExpr::Z),
        (1u32..20).prop_map(RingExpr::QPoly),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| RingExpr::Product(Box::new(a), Box::new(b))),
            (inner.clone(), gens()).prop_map(|(a, g)| RingExpr::Quotient(Box::new(a), g)),
            (inner.clone(), prop_oneof![
                Just(ModuleExpr::Regular),
                gens().prop_map(ModuleExpr::Quotient),
                gens().prop_map(ModuleExpr::Ideal),
            ])
                .prop_map(|(a, m)| RingExpr::TrivExt(Box::new(a), m)),
            (inner.clone(), inner, prop::collection::vec(elem(), 1..5), gens())
                .prop_map(|(a, b, map, ideal)| RingExpr::Amalg { a: Box::new(a), b: Box::new(b), map, ideal }),
        ]
    })
}

fn set_base() -> impl Strategy<Value = SetExpr> {
    prop_oneof![
        prop::collection::vec(elem(), 0..4).prop_map(SetExpr::Gens),
        gens().prop_map(SetExpr::Complement),
        Just(SetExpr::Units),
        Just(SetExpr::Reg),
    ]
}

fn set_expr() -> impl Strategy<Value = SetExpr> {
    prop_oneof![set_base(), (set_base(), set_base()).prop_map(|(a, b)| SetExpr::Product(Box::new(a), Box::new(b)))]
}

proptest! {
    #[test]
    fn ring_print_parse_roundtrip(r in ring_expr()) {
        let text = print_ring(&r);
        let back = parse_ring(&text).map_err(|d| TestCaseError::fail(format!("{text}: {d}")))?;
        prop_assert_eq!(back, r, "{}", text);
    }

    #[test]
    fn set_print_parse_roundtrip(s in set_expr()) {
        let text = print_set(&s);
        let back = parse_set(&text).map_err(|d| TestCaseError::fail(format!("{text}: {d}")))?;
        prop_assert_eq!(back, s, "{}", text);
    }

    #[test]
    fn parse_errors_carry_a_column(prefix in "[a-zA-Z0-9 (),<>/x\\[\\]]{0,24}") {
        if let Err(d) = parse_ring(&prefix) {
            let col = d.column.expect("syntax errors are located");
            prop_assert!(col >= 1 && col <= prefix.chars().count() + 1);
        }
    }
}

#[test]
fn audit_is_deterministic() {
    let cfg = AuditConfig { only: vec!["prop.mmc".into(), "thm.saturation".into(), "prop.amalgamated".into()], ..AuditConfig::default() };
    let a = run_audit(&cfg).without_timing();
    let b = run_audit(&AuditConfig { threads: 1, ..cfg.clone() }).without_timing();
    assert_eq!(a, b);
    let other = run_audit(&AuditConfig { seed: 7, ..cfg }).without_timing();
    assert_ne!(a, other, "the seed should change the sampled sets");
}
