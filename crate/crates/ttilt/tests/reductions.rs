use ttilt::catalog::{self, Params};
use ttilt::hasse::{HType, HasseOptions, Verdict};
use ttilt::reduce::{central_radical_reduce, compare_opposite, verify_reduction};
use ttilt::{dsl, Algebra, Bounds, Error, Scalar};

fn cat_with(name: &str, params: &[(&str, i64)]) -> Algebra {
    let p: Params = params.iter().map(|(k, v)| (k.to_string(), Scalar::from_int(*v))).collect();
    catalog::get(name, &p, Bounds::default()).unwrap().0
}

fn opts() -> HasseOptions {
    HasseOptions::default()
}

#[test]
fn gamma20_reduces_to_dimension_four() {
    let t = central_radical_reduce(&cat_with("Gamma20", &[])).unwrap();
    assert!(!t.steps.is_empty());
    assert_eq!(t.reduced.dim(), 4);
    assert!(t.reduced.center_radical_basis().is_empty());
}

#[test]
fn semisimple_trace_is_empty() {
    let a = dsl::parse("algebra S over Q\nvertices 1 2\narrows\n").unwrap().build(Bounds::default()).unwrap();
    let t = central_radical_reduce(&a).unwrap();
    assert!(t.steps.is_empty());
    assert_eq!(t.reduced.dim(), 2);
}

#[test]
fn d4_reduces_like_gamma20_hat() {
    let t = central_radical_reduce(&cat_with("D4", &[])).unwrap();
    assert_eq!(t.reduced.dim(), 4);
    let rad: Vec<String> = t.reduced.radical_basis().iter().map(|p| t.reduced.quiver.format_path(p)).collect();
    assert_eq!(rad.len(), 2);
}

#[test]
fn reductions_preserve_the_poset() {
    for (name, params, count, ty) in [
        ("Gamma16", vec![("n", 4)], 12, HType::H(5, 5)),
        ("T13", vec![], 6, HType::H(2, 2)),
        ("B5", vec![("n", 1)], 8, HType::H(3, 3)),
    ] {
        let (trace, rep) = verify_reduction(&cat_with(name, &params), &opts()).unwrap();
        assert!(!trace.steps.is_empty(), "{name}");
        assert!(rep.pass, "{name}");
        assert_eq!(rep.left, Verdict::Finite { count, ty }, "{name}");
    }
}

#[test]
fn opposites() {
    let c = compare_opposite(&cat_with("Gamma8", &[]), &opts()).unwrap();
    assert!(c.pass);
    assert!(matches!(c.right, Verdict::Finite { count: 7, .. }));
    let hat20 = dsl::parse("algebra G over Q\nvertices 1 2\narrows mu: 1 -> 2, nu: 2 -> 1\nrelations mu*nu; nu*mu\n")
        .unwrap()
        .build(Bounds::default())
        .unwrap();
    assert!(compare_opposite(&hat20, &opts()).unwrap().pass);
    let g2op = cat_with("Gamma2", &[]).opposite().unwrap();
    let c = compare_opposite(&g2op, &opts()).unwrap();
    assert!(c.pass);
    assert!(matches!(c.left, Verdict::Finite { count: 8, .. }));
}

#[test]
fn infinite_side_is_undecided() {
    let r = compare_opposite(&cat_with("Gamma3", &[]), &opts());
    assert!(matches!(r, Err(Error::UndecidedEither(_))), "{r:?}");
}
