use proptest::prelude::*;
use ttilt::catalog::{self, Expected, Params, Table};
use ttilt::{dsl, Bounds, Error, Scalar};

const GAMMA2: &str = "algebra Gamma2 over Q\nvertices 1 2\narrows mu: 1 -> 2, beta: 2 -> 2\nrelations beta^3\n";

#[test]
fn parse_gamma2_text() {
    let s = dsl::parse(GAMMA2).unwrap();
    assert_eq!((s.vertices.len(), s.arrows.len(), s.relations.len()), (2, 2, 1));
    assert_eq!(s.build(Bounds::default()).unwrap().dim(), 7);
}

#[test]
fn undeclared_arrow() {
    let text = GAMMA2.replace("beta^3", "beta^3 - gamma");
    match dsl::parse(&text) {
        Err(Error::UnknownArrow { name, .. }) => assert_eq!(name, "gamma"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn coefficient_parameter_bound_to_one() {
    let e = catalog::lookup("T20").unwrap();
    let spec = e.spec(&Params::new()).unwrap();
    let (q, rels) = spec.to_relations().unwrap();
    let text: Vec<String> = rels.iter().map(|r| q.format_poly(r)).collect();
    assert!(text.iter().any(|r| r == "-mu*beta + alpha*mu" || r == "alpha*mu - mu*beta"), "{text:?}");
}

#[test]
fn malformed_inputs() {
    let bad_vertex = "algebra A over Q\nvertices 1\narrows a: 1 -> 2\n";
    assert!(dsl::parse(bad_vertex).and_then(|s| s.build(Bounds::default())).is_err());
    let dup = "algebra A over Q\nvertices 1 1\narrows\n";
    assert!(dsl::parse(dup).and_then(|s| s.build(Bounds::default())).is_err());
    let syntax = "algebra A over Q\nvertices 1\narrows a: 1 => 1\n";
    assert!(matches!(dsl::parse(syntax), Err(Error::Syntax { line: 3, .. })));
    let unbound = "algebra A over Q\nvertices 1\narrows a: 1 -> 1\nrelations a^n\n";
    assert!(matches!(dsl::parse(unbound), Err(Error::UnboundParameter { .. })));
    // mixed endpoints: a path 1 -> 1 plus a path 1 -> 2
    let mixed = "algebra A over Q\nvertices 1 2\narrows a: 1 -> 1, m: 1 -> 2\nrelations a*a + a*m\n";
    assert!(dsl::parse(mixed).and_then(|s| s.build(Bounds::default())).is_err());
}

#[test]
fn infinite_dimensional_input_hits_bound() {
    let text = "algebra A over Q\nvertices 1\narrows x: 1 -> 1, y: 1 -> 1\nrelations x*y - y*x\n";
    let r = dsl::parse(text).unwrap().build(Bounds::default());
    assert!(matches!(r, Err(Error::BoundExceeded(_))), "{r:?}");
}

#[test]
fn catalog_get_examples() {
    let (a, e) = catalog::get("Gamma2", &Params::new(), Bounds::default()).unwrap();
    assert_eq!(a.dim(), 7);
    assert_eq!(e.expected, Expected::Finite { count: 8, ty: Some((1, 5)) });
    assert_eq!(catalog::lookup("W14").unwrap().expected, Expected::Finite { count: 10, ty: Some((3, 5)) });
    assert_eq!(catalog::lookup("D1").unwrap().expected, Expected::Finite { count: 2, ty: Some((0, 0)) });
    assert_eq!(catalog::lookup("Gamma3").unwrap().expected, Expected::Infinite);
    assert!(matches!(catalog::lookup("Gamma0"), Err(Error::UnknownName(_))));
    let mut p = Params::new();
    p.insert("n".into(), Scalar::from_int(1));
    assert!(matches!(catalog::get("Gamma11", &p, Bounds::default()), Err(Error::InvalidParameter(_))));
}

#[test]
fn catalog_list_groups() {
    let l = catalog::list();
    let sizes: Vec<(Table, usize)> = l.iter().map(|(t, n)| (*t, n.len())).collect();
    for (t, n) in [(Table::Gamma, 20), (Table::T, 21), (Table::W, 34), (Table::B, 8), (Table::D, 4)] {
        assert!(sizes.contains(&(t, n)), "{t}: {sizes:?}");
    }
    assert_eq!(catalog::lookup("Brauer5").unwrap().expected, Expected::Finite { count: 252, ty: None });
}

#[test]
fn every_catalog_source_round_trips() {
    for e in catalog::entries() {
        for p in [e.default_params(), e.alt_params()] {
            let s = e.spec(&p).unwrap();
            let again = dsl::parse(&s.to_string()).unwrap();
            assert_eq!(s, again, "{}", e.name);
        }
    }
}

fn factor() -> impl Strategy<Value = String> {
    prop_oneof![
        prop_oneof![Just("mu"), Just("nu")].prop_map(String::from),
        (prop_oneof![Just("mu*nu"), Just("nu*mu")], 1u32..4).prop_map(|(w, e)| format!("({w})^{e}")),
        (prop_oneof![Just("mu"), Just("nu")], 2u32..4).prop_map(|(w, e)| format!("{w}^{e}")),
    ]
}

fn term() -> impl Strategy<Value = String> {
    (any::<bool>(), prop::option::of((1i64..=5, 1i64..4)), proptest::collection::vec(factor(), 1..4)).prop_map(
        |(neg, c, fs)| {
            let word = fs.join("*");
            let sign = if neg { "- " } else { "+ " };
            match c {
                Some((n, d)) if d > 1 => format!("{sign}{n}/{d}*{word}"),
                Some((n, _)) => format!("{sign}{n}*{word}"),
                None => format!("{sign}{word}"),
            }
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_then_parse_is_identity(rels in proptest::collection::vec(proptest::collection::vec(term(), 1..3), 1..4)) {
        let body: Vec<String> = rels.iter().map(|ts| ts.join(" ").trim_start_matches("+ ").to_string()).collect();
        let text = format!(
            "algebra R over Q\nvertices 1 2\narrows mu: 1 -> 2, nu: 2 -> 1\nrelations {}\n",
            body.join("; ")
        );
        let s = dsl::parse(&text).unwrap();
        let printed = s.to_string();
        let again = dsl::parse(&printed).unwrap();
        prop_assert_eq!(&s, &again);
        prop_assert_eq!(printed, again.to_string());
    }
}
