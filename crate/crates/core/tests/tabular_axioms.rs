mod common;

use tabula::tabular::DEFAULT_EXHAUSTIVE_CAP;
use tabula::{PlanarContext, TabularDatum};

#[test]
fn verlinde_contexts_are_tabular_with_trace() {
    for (n, r) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let ctx = PlanarContext::verlinde(n, r);
        let datum = TabularDatum::build(&ctx);
        let rep = datum.check_axioms(DEFAULT_EXHAUSTIVE_CAP);
        assert!(rep.exhaustive);
        assert!(rep.all_pass(), "P({n},{r}):\n{rep}");
    }
}

#[test]
fn noncommutative_coefficients_are_tabular_with_trace() {
    let ctx = PlanarContext::new(2, common::s3()).unwrap();
    let datum = TabularDatum::build(&ctx);
    let rep = datum.check_axioms(DEFAULT_EXHAUSTIVE_CAP);
    assert!(rep.all_pass(), "{rep}");
}

#[test]
fn forms_are_almost_orthonormal_and_nondegenerate() {
    for (n, r) in [(2, 2), (3, 2), (3, 3)] {
        let ctx = PlanarContext::verlinde(n, r);
        let datum = TabularDatum::build(&ctx);
        assert!(datum.almost_orthonormal(), "P({n},{r})");
        assert!(datum.gram_nonzero(), "P({n},{r})");
    }
}
