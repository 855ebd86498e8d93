//! Associativity, star and trace identities over non-commutative coefficient
//! algebras, where a wrong orientation or ordering convention would show up.

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tabula::{PlanarContext, PlanarElement};

fn check_triple(
    ctx: &PlanarContext,
    x: &tabula::LabeledDiagram,
    y: &tabula::LabeledDiagram,
    z: &tabula::LabeledDiagram,
) {
    let (x, y, z) = (
        PlanarElement::basis(x.clone()),
        PlanarElement::basis(y.clone()),
        PlanarElement::basis(z.clone()),
    );
    let xy = ctx.mul(&x, &y).unwrap();
    let left = ctx.mul(&xy, &z).unwrap();
    let right = ctx.mul(&x, &ctx.mul(&y, &z).unwrap()).unwrap();
    assert_eq!(left, right, "associativity fails for {x} | {y} | {z}");
    assert_eq!(
        ctx.star(&xy),
        ctx.mul(&ctx.star(&y), &ctx.star(&x)).unwrap()
    );
    assert_eq!(ctx.tau(&xy), ctx.tau(&ctx.mul(&y, &x).unwrap()));
}

#[test]
fn s3_exhaustive_two_strands() {
    let ctx = PlanarContext::new(2, common::s3()).unwrap();
    let basis = ctx.basis();
    for x in &basis {
        assert_eq!(ctx.tau_basis(x), ctx.tau_basis(&x.star(ctx.algebra())));
        for y in &basis {
            for z in &basis {
                check_triple(&ctx, x, y, z);
            }
        }
    }
}

#[test]
fn s3_sampled_three_and_four_strands() {
    for n in [3, 4] {
        let ctx = PlanarContext::new(n, common::s3()).unwrap();
        let basis = ctx.basis();
        let mut rng = ChaCha8Rng::seed_from_u64(7 + n as u64);
        for _ in 0..400 {
            let pick = |rng: &mut ChaCha8Rng| &basis[rng.gen_range(0..basis.len())];
            let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            check_triple(&ctx, x, y, z);
        }
    }
}

#[test]
fn s3_tensor_embedding_is_a_homomorphism() {
    for n in 1..=2 {
        let ctx = PlanarContext::new(n, common::s3()).unwrap();
        assert!(ctx.verify_tensor_iso(), "n = {n}");
    }
    let ctx = PlanarContext::new(3, common::z3()).unwrap();
    assert!(ctx.verify_tensor_iso());
}
