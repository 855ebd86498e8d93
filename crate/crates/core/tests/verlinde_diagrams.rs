use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tabula::{LabeledDiagram, PlanarContext, PlanarElement};

fn random_pairs(basis: &[LabeledDiagram], count: usize, seed: u64) -> Vec<(LabeledDiagram, LabeledDiagram)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (basis[rng.gen_range(0..basis.len())].clone(), basis[rng.gen_range(0..basis.len())].clone()))
        .collect()
}

#[test]
fn transitional_edges_come_in_pairs_or_not_at_all() {
    for n in 1..=6 {
        let ctx = PlanarContext::verlinde(n, 1);
        for d in ctx.basis() {
            let t = d.classify_edges().iter().filter(|c| c.transitional).count();
            assert!(t == 0 || t == 2, "{d}: {t} transitional edges");
        }
    }
}

#[test]
fn omega_is_an_involutive_homomorphism() {
    for (n, r) in [(2, 3), (3, 3), (3, 4), (4, 2)] {
        let ctx = PlanarContext::verlinde(n, r);
        let basis = ctx.basis();
        for (x, y) in random_pairs(&basis, 150, 0x7ab1e + n as u64) {
            let (x, y) = (PlanarElement::basis(x), PlanarElement::basis(y));
            let lhs = ctx.omega(&ctx.mul(&x, &y).unwrap()).unwrap();
            let rhs = ctx.mul(&ctx.omega(&x).unwrap(), &ctx.omega(&y).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "n={n} r={r} x={x} y={y}");
            assert_eq!(ctx.omega(&ctx.omega(&x).unwrap()).unwrap(), x);
        }
    }
}

#[test]
fn star_reverses_products() {
    let ctx = PlanarContext::verlinde(3, 3);
    let basis = ctx.basis();
    for (x, y) in random_pairs(&basis, 200, 7) {
        let (x, y) = (PlanarElement::basis(x), PlanarElement::basis(y));
        let lhs = ctx.star(&ctx.mul(&x, &y).unwrap());
        let rhs = ctx.mul(&ctx.star(&y), &ctx.star(&x)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(ctx.tau(&ctx.mul(&x, &y).unwrap()), ctx.tau(&ctx.mul(&y, &x).unwrap()));
    }
}

#[test]
fn text_forms_round_trip() {
    let ctx = PlanarContext::verlinde(4, 3);
    for d in ctx.basis() {
        let back: LabeledDiagram = d.to_string().parse().unwrap();
        assert_eq!(back, d);
    }
    let x: PlanarElement = "-v^2 + 3 * n=3 | 1-2:2 3-4:1 5-6:1; v^-1 * n=3 | 1-6:1 2-5:0 3-4:2".parse().unwrap();
    let again: PlanarElement = x.to_string().parse().unwrap();
    assert_eq!(again, x);
    assert_eq!(x.len(), 2);
}

#[test]
fn identity_is_neutral() {
    let ctx = PlanarContext::verlinde(3, 4);
    let one = PlanarElement::basis(ctx.identity());
    for d in ctx.basis().into_iter().step_by(17) {
        let x = PlanarElement::basis(d);
        assert_eq!(ctx.mul(&one, &x).unwrap(), x);
        assert_eq!(ctx.mul(&x, &one).unwrap(), x);
    }
}
