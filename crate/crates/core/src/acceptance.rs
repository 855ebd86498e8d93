//! The fourteen end-to-end acceptance checks, shared by the test suite and
//! the `selftest` subcommand of the command-line tool.

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coeff::LaurentInt;
use crate::coxeter::CoxeterType;
use crate::embed::{
    admissible, conjecture_check, drank_sequence, flavor_of, Embedding, Flavor, Variant,
    DEFAULT_DRANK_CAP,
};
use crate::hecke::LinComb;
use crate::planar::{PlanarContext, PlanarElement};
use crate::tabular::{TabularDatum, DEFAULT_EXHAUSTIVE_CAP};
use crate::tl::{TLContext, TLElement};
use crate::verlinde::{phi_v3_v2_verify, VerlindeAlgebra};

type TypedCheck = (CoxeterType, std::result::Result<(bool, usize), String>);

/// Result of one criterion.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub details: Vec<String>,
    pub seconds: f64,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{verdict}] {:>2} {} ({:.2}s)",
            self.id, self.name, self.seconds
        )?;
        for d in &self.details {
            write!(f, "\n       {d}")?;
        }
        Ok(())
    }
}

struct Tally {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

fn run(id: usize, name: &'static str, body: impl FnOnce(&mut Tally)) -> Outcome {
    let start = Instant::now();
    let mut t = Tally::new();
    body(&mut t);
    let pass = t.failures.is_empty();
    let mut details = t.failures;
    details.extend(t.notes);
    Outcome {
        id,
        name,
        pass,
        details,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn tl(ty: CoxeterType) -> TLContext {
    TLContext::from_type(ty).unwrap_or_else(|e| panic!("building TL({ty}) failed: {e}"))
}

fn dihedral(range: std::ops::RangeInclusive<usize>) -> impl Iterator<Item = CoxeterType> {
    range.map(CoxeterType::I)
}

pub fn verlinde_validity() -> Outcome {
    run(
        1,
        "Verlinde algebras are table algebras; both constructions agree",
        |t| {
            for r in 1..=8 {
                let v = VerlindeAlgebra::new(r);
                t.check(
                    v.algebra().check().all_pass(),
                    format!("table algebra axioms fail for r={r}"),
                );
                let p = VerlindeAlgebra::by_polynomial_reduction(r);
                t.check(
                    v.algebra().constants().eq(p.algebra().constants()),
                    format!("constants differ for r={r}"),
                );
            }
        },
    )
}

pub fn top_element_identities() -> Outcome {
    run(2, "u_i u_{r-1} = u_{r-1-i} and u_{r-1}^2 = 1", |t| {
        for r in 1..=8 {
            t.check(
                VerlindeAlgebra::new(r).w_identities_hold(),
                format!("r={r}"),
            );
        }
    })
}

pub fn v3_to_v2_map() -> Outcome {
    run(3, "V_3 -> V_2 over Q(sqrt 2) respects the relations", |t| {
        t.check(phi_v3_v2_verify(), "a relation fails");
    })
}

fn associative(
    ctx: &PlanarContext,
    x: &PlanarElement,
    y: &PlanarElement,
    z: &PlanarElement,
) -> bool {
    let m = |a: &PlanarElement, b: &PlanarElement| ctx.mul(a, b).expect("same context");
    m(&m(x, y), z) == m(x, &m(y, z))
}

pub fn planar_associativity() -> Outcome {
    run(4, "P_n associativity", |t| {
        for n in 1..=2 {
            for r in 1..=4 {
                let ctx = PlanarContext::verlinde(n, r);
                let basis: Vec<PlanarElement> =
                    ctx.basis().into_iter().map(PlanarElement::basis).collect();
                let k = basis.len();
                let bad = (0..k * k * k).into_par_iter().find_any(|&i| {
                    !associative(
                        &ctx,
                        &basis[i / (k * k)],
                        &basis[(i / k) % k],
                        &basis[i % k],
                    )
                });
                t.check(bad.is_none(), format!("n={n} r={r}: triple {bad:?}"));
            }
        }
        for n in 3..=4 {
            for r in 1..=3 {
                let ctx = PlanarContext::verlinde(n, r);
                let basis: Vec<PlanarElement> =
                    ctx.basis().into_iter().map(PlanarElement::basis).collect();
                let mut rng = ChaCha8Rng::seed_from_u64(0x7ab1e + (10 * n + r) as u64);
                let triples: Vec<[usize; 3]> = (0..1000)
                    .map(|_| [0; 3].map(|_| rng.gen_range(0..basis.len())))
                    .collect();
                let bad = triples
                    .par_iter()
                    .find_any(|[a, b, c]| !associative(&ctx, &basis[*a], &basis[*b], &basis[*c]));
                t.check(
                    bad.is_none(),
                    format!("n={n} r={r}: sampled triple {bad:?}"),
                );
            }
        }
    })
}

pub fn tabular_axioms() -> Outcome {
    run(5, "Tabular axioms A1-A5 and the a-function", |t| {
        for (n, r) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            let ctx = PlanarContext::verlinde(n, r);
            let report = TabularDatum::build(&ctx).check_axioms(DEFAULT_EXHAUSTIVE_CAP);
            t.check(report.all_pass(), format!("P({n},{r}):\n{report}"));
            t.check(report.exhaustive, format!("P({n},{r}) was only sampled"));
        }
    })
}

pub fn identity_traces() -> Outcome {
    run(6, "tau(1) = (1 + v^-2)^n and tr(1) = delta^n", |t| {
        let base = &LaurentInt::one() + &LaurentInt::v_pow(-2);
        for r in 1..=3 {
            for n in 1..=5 {
                let ctx = PlanarContext::verlinde(n, r);
                let (tr, tau) = ctx.trace(&PlanarElement::basis(ctx.identity()));
                t.check(
                    tr == LaurentInt::delta().pow(n as u32),
                    format!("tr at n={n} r={r}: {tr}"),
                );
                t.check(
                    tau == base.pow(n as u32),
                    format!("tau at n={n} r={r}: {tau}"),
                );
            }
        }
    })
}

pub fn exposed_ranks() -> Outcome {
    run(7, "Ranks of the exposed subalgebra", |t| {
        let seq = |r, k| drank_sequence(r, k, DEFAULT_DRANK_CAP).expect("within budget");
        let r1 = seq(1, 5);
        t.check(r1 == [1, 2, 5, 14, 42], format!("r=1: {r1:?}"));
        let r2 = seq(2, 4);
        t.check(r2 == [2, 6, 20, 70], format!("r=2: {r2:?}"));
        // Cross-check the counting formula against explicit enumeration.
        for n in 1..=4 {
            let ctx = PlanarContext::verlinde(n, 3);
            t.check(
                ctx.d_basis().len() as u128 == seq(3, n)[n - 1],
                format!("r=3 n={n}: enumeration disagrees"),
            );
        }
        t.note(format!("r=3: {:?}", seq(3, 5)));
    })
}

pub fn dihedral_admissible_count() -> Outcome {
    run(8, "I-admissible diagrams in P(3, r) number 2r + 1", |t| {
        for r in 1..=8 {
            let count = admissible(Flavor::I, &PlanarContext::verlinde(3, r))
                .expect("n = 3")
                .len();
            t.check(
                count == 2 * r + 1,
                format!("r={r}: {count} admissible, expected {}", 2 * r + 1),
            );
        }
    })
}

fn canonical_types() -> Vec<CoxeterType> {
    let mut out: Vec<CoxeterType> = (1..=4).map(CoxeterType::A).collect();
    out.extend([CoxeterType::B(2), CoxeterType::B(3), CoxeterType::H(3)]);
    out.extend(dihedral(3..=8));
    out
}

pub fn canonical_bases() -> Outcome {
    run(
        9,
        "Canonical bases of TL(X) and the projection of the KL basis",
        |t| {
            let results: Vec<(CoxeterType, Vec<usize>, Vec<usize>)> = canonical_types()
                .into_par_iter()
                .map(|ty| {
                    let tl = tl(ty);
                    (ty, tl.canonical_failures(), tl.oracle_mismatches())
                })
                .collect();
            for (ty, fails, mism) in results {
                t.check(
                    fails.is_empty(),
                    format!("{ty}: canonical conditions fail at {fails:?}"),
                );
                t.check(
                    mism.is_empty(),
                    format!("{ty}: theta(C'_w) differs from c_w at {mism:?}"),
                );
            }
        },
    )
}

fn embedding_cases() -> Vec<(CoxeterType, Variant)> {
    let mut out = vec![
        (CoxeterType::A(2), Variant::A),
        (CoxeterType::A(3), Variant::A),
        (CoxeterType::B(3), Variant::B),
        (CoxeterType::H(3), Variant::H),
    ];
    out.extend(dihedral(3..=8).map(|ty| (ty, Variant::I)));
    out
}

pub fn embeddings() -> Outcome {
    run(
        10,
        "Embeddings of TL(X) onto admissible diagram sets",
        |t| {
            let results: Vec<Vec<String>> = embedding_cases()
                .into_par_iter()
                .map(|(ty, variant)| {
                    let tl = tl(ty);
                    let mut bad = Vec::new();
                    for v in [variant, Variant::Uniform] {
                        let emb = match Embedding::build(&tl, v) {
                            Ok(e) => e,
                            Err(e) => {
                                bad.push(format!("{ty} {v}: {e}"));
                                continue;
                            }
                        };
                        let rel = emb.relation_failures();
                        if !rel.is_empty() {
                            bad.push(format!("{ty} {v}: relations {rel:?}"));
                        }
                        let hom = emb.homomorphism_failures();
                        if !hom.is_empty() {
                            bad.push(format!("{ty} {v}: {} products not preserved", hom.len()));
                        }
                        let set =
                            flavor_of(v).map(|f| admissible(f, emb.context()).expect("compatible"));
                        let report = emb.bijection(set.as_deref());
                        bad.extend(report.problems.iter().map(|p| format!("{ty} {v}: {p}")));
                        if report.map.len() != tl.rank() {
                            bad.push(format!(
                                "{ty} {v}: {} images for {} elements",
                                report.map.len(),
                                tl.rank()
                            ));
                        }
                    }
                    bad
                })
                .collect();
            for b in results.into_iter().flatten() {
                t.check(false, b);
            }
        },
    )
}

pub fn omega_invariance() -> Outcome {
    run(11, "omega fixes rho for B and even dihedral types", |t| {
        for (ty, v) in [
            (CoxeterType::B(3), Variant::B),
            (CoxeterType::I(4), Variant::I),
            (CoxeterType::I(6), Variant::I),
        ] {
            let tl = tl(ty);
            let emb = Embedding::build(&tl, v).expect("embedding");
            let moved = emb.omega_fixed_failures();
            let names: Vec<String> = moved.iter().map(|&w| tl.group().format_word(w)).collect();
            t.check(
                moved.is_empty(),
                format!("{ty}: omega moves rho(c_w) for w in {names:?}"),
            );
        }
        let tl = tl(CoxeterType::A(3));
        let emb = Embedding::build(&tl, Variant::A).expect("embedding");
        let moved = emb.omega_fixed_failures();
        t.check(!moved.is_empty(), "no witness that omega moves rho_A");
        if let Some(&w) = moved.first() {
            t.note(format!("A3 witness: w = {}", tl.group().format_word(w)));
        }
    })
}

fn random_element(tl: &TLContext, rng: &mut ChaCha8Rng) -> TLElement {
    let wc = tl.wc();
    let mut x = LinComb::zero();
    for _ in 0..2 {
        let w = wc[rng.gen_range(0..wc.len())];
        let c = LaurentInt::monomial(rng.gen_range(-2..=2), rng.gen_range(-1..=1));
        x.add_scaled(tl.c(w).expect("w in W_c"), &c);
    }
    x
}

pub fn bilinear_form() -> Outcome {
    run(
        12,
        "Adjunction, almost orthonormality and the sign characterization",
        |t| {
            let results: Vec<Vec<String>> = embedding_cases()
                .into_par_iter()
                .map(|(ty, _)| {
                    let tl = tl(ty);
                    let mut bad = Vec::new();
                    let emb = Embedding::build(&tl, Variant::Uniform).expect("uniform embedding");
                    let ctx = emb.context();
                    let wc = tl.wc();
                    let mut rng = ChaCha8Rng::seed_from_u64(0x7ab1e);
                    for _ in 0..40 {
                        let (x, y, z) = (
                            random_element(&tl, &mut rng),
                            random_element(&tl, &mut rng),
                            random_element(&tl, &mut rng),
                        );
                        let lhs = emb.form(&x, &tl.mul(&y, &z));
                        let rhs = emb.form(&tl.mul(&x, &tl.star(&z)), &y);
                        if lhs != rhs {
                            bad.push(format!("{ty}: adjunction fails"));
                            break;
                        }
                    }
                    for &w in wc {
                        let c = tl.c(w).expect("w in W_c");
                        if emb.apply(&tl.star(c)) != ctx.star(&emb.apply(c)) {
                            bad.push(format!(
                                "{ty}: star not compatible at {}",
                                tl.group().format_word(w)
                            ));
                        }
                    }
                    let cs: Vec<TLElement> = wc
                        .iter()
                        .map(|&w| tl.c(w).expect("w in W_c").clone())
                        .collect();
                    let ts: Vec<TLElement> = wc
                        .iter()
                        .map(|&w| tl.t_tilde(w).expect("w in W_c"))
                        .collect();
                    for (name, fam) in [("c", &cs), ("t~", &ts)] {
                        let f = emb.almost_orthonormal_failures(fam);
                        if !f.is_empty() {
                            bad.push(format!(
                                "{ty}: {name}-basis not almost orthonormal at {} pairs",
                                f.len()
                            ));
                        }
                    }
                    let minus = LaurentInt::constant(-1);
                    for (i, &w) in wc.iter().enumerate() {
                        for (x, sign) in [(cs[i].clone(), 1), (cs[i].scale(&minus), -1)] {
                            let res = emb.classify_canonical(&x);
                            if !(res.consistent() && res.matched == Some((w, sign))) {
                                bad.push(format!(
                                    "{ty}: {}c_{} misclassified",
                                    if sign < 0 { "-" } else { "" },
                                    tl.group().format_word(w)
                                ));
                            }
                        }
                        let j = (i + 1) % wc.len();
                        if j != i {
                            let sum = &cs[i] + &cs[j];
                            let res = emb.classify_canonical(&sum);
                            if !res.consistent()
                                || res.matched.is_some()
                                || (res.bar_invariant && res.unit_norm)
                            {
                                bad.push(format!("{ty}: c_w + c_w' accepted"));
                            }
                        }
                    }
                    bad
                })
                .collect();
            for b in results.into_iter().flatten() {
                t.check(false, b);
            }
        },
    )
}

pub fn kl_conjecture() -> Outcome {
    run(
        13,
        "KL basis images are zero or distinct canonical diagrams",
        |t| {
            let mut types = vec![
                CoxeterType::A(2),
                CoxeterType::A(3),
                CoxeterType::B(2),
                CoxeterType::B(3),
            ];
            types.extend(dihedral(3..=6));
            types.push(CoxeterType::H(3));
            let results: Vec<TypedCheck> = types
                .into_par_iter()
                .map(|ty| {
                    (
                        ty,
                        conjecture_check(&tl(ty))
                            .map(|r| (r.pass(), r.nonzero))
                            .map_err(|e| e.to_string()),
                    )
                })
                .collect();
            for (ty, res) in results {
                match res {
                    Ok((pass, nonzero)) => {
                        t.check(pass, format!("{ty}: fails"));
                        t.note(format!("{ty}: {nonzero} nonzero images"));
                    }
                    Err(e) => t.check(false, format!("{ty}: {e}")),
                }
            }
        },
    )
}

pub fn tensor_and_exposed() -> Outcome {
    run(
        14,
        "Tensor embedding and closure of the exposed subalgebra",
        |t| {
            for n in 1..=3 {
                for r in 1..=3 {
                    let ctx = PlanarContext::verlinde(n, r);
                    t.check(
                        ctx.verify_tensor_iso(),
                        format!("tensor embedding fails at n={n} r={r}"),
                    );
                    let d: Vec<PlanarElement> = ctx
                        .d_basis()
                        .into_iter()
                        .map(PlanarElement::basis)
                        .collect();
                    let k = d.len();
                    let bad = (0..k * k).into_par_iter().find_any(|&i| {
                        let p = ctx.mul(&d[i / k], &d[i % k]).expect("same context");
                        let leaked = p.terms().any(|(x, _)| !ctx.is_exposed(x));
                        leaked
                    });
                    t.check(
                        bad.is_none(),
                        format!("exposed closure fails at n={n} r={r}"),
                    );
                }
            }
        },
    )
}

/// All criteria in order.
pub fn all() -> Vec<Outcome> {
    let checks: [fn() -> Outcome; 14] = [
        verlinde_validity,
        top_element_identities,
        v3_to_v2_map,
        planar_associativity,
        tabular_axioms,
        identity_traces,
        exposed_ranks,
        dihedral_admissible_count,
        canonical_bases,
        embeddings,
        omega_invariance,
        bilinear_form,
        kl_conjecture,
        tensor_and_exposed,
    ];
    checks.iter().map(|f| f()).collect()
}
