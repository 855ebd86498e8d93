//! Embeddings of generalized Temperley-Lieb algebras into diagram algebras
//! over Verlinde algebras, admissible diagram sets, and rank sequences.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::coeff::LaurentInt;
use crate::coxeter::CoxeterType;
use crate::diagram::LabeledDiagram;
use crate::error::{Error, Result};
use crate::hecke::LinComb;
use crate::planar::{exposed_count, PlanarContext, PlanarElement};
use crate::tl::{TLContext, TLElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    A,
    B,
    H,
    I,
    /// `b_1 ↦ E_1(u_1)`, `b_i ↦ E_i(u_0)` into `P(n+1, m-1)`.
    Uniform,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Self::A),
            "b" => Ok(Self::B),
            "h" => Ok(Self::H),
            "i" => Ok(Self::I),
            "uniform" | "u" => Ok(Self::Uniform),
            _ => Err(Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::A => "A",
            Self::B => "B",
            Self::H => "H",
            Self::I => "I",
            Self::Uniform => "uniform",
        };
        f.write_str(s)
    }
}

/// Kinds of admissible diagram sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// All labels `u_0`: the ordinary Temperley-Lieb diagrams.
    Plain,
    B,
    H,
    I,
}

/// Target `(strands, r)` and generator labels for a variant and source type.
pub fn target(variant: Variant, ty: CoxeterType) -> Result<(usize, usize, Vec<usize>)> {
    let n = ty.rank();
    let special = |label: usize| {
        let mut labels = vec![0; n];
        labels[0] = label;
        labels
    };
    let mismatch = || Error::InvalidArgument(format!("variant {variant} does not apply to {ty}"));
    match (variant, ty) {
        (Variant::A, CoxeterType::A(_)) => Ok((n + 1, 2, vec![0; n])),
        (Variant::B, CoxeterType::B(_)) => Ok((n + 1, 3, special(1))),
        (Variant::H, CoxeterType::H(_)) => Ok((n + 1, 4, special(2))),
        (Variant::I, CoxeterType::I(m)) if m >= 3 => Ok((3, m - 1, special(1))),
        (Variant::Uniform, _) if n > 1 && ty.max_bond() > 2 => {
            Ok((n + 1, ty.max_bond() - 1, special(1)))
        }
        _ => Err(mismatch()),
    }
}

/// The admissible set matching a variant, if the theorem names one.
pub fn flavor_of(variant: Variant) -> Option<Flavor> {
    match variant {
        Variant::A => Some(Flavor::Plain),
        Variant::B => Some(Flavor::B),
        Variant::H => Some(Flavor::H),
        Variant::I => Some(Flavor::I),
        Variant::Uniform => None,
    }
}

struct Shape {
    n2: usize,
    edges: Vec<(usize, usize, usize)>,
    classes: Vec<crate::diagram::EdgeClass>,
}

impl Shape {
    fn new(d: &LabeledDiagram) -> Self {
        Self {
            n2: 2 * d.n(),
            edges: d.edges().collect(),
            classes: d.classify_edges(),
        }
    }

    fn label_between(&self, p: usize, q: usize) -> Option<usize> {
        let (a, b) = (p.min(q), p.max(q));
        self.edges
            .iter()
            .find(|e| e.0 == a && e.1 == b)
            .map(|e| e.2)
    }

    fn label_at(&self, p: usize) -> usize {
        self.edges
            .iter()
            .find(|e| e.0 == p || e.1 == p)
            .expect("every point is matched")
            .2
    }

    fn all_propagating(&self) -> bool {
        self.classes.iter().all(|c| c.propagating)
    }
}

fn b_admissible(d: &LabeledDiagram) -> bool {
    let sh = Shape::new(d);
    let n2 = sh.n2;
    let outer = sh.label_between(1, n2);
    let b1 = outer == Some(0);
    let b1p = outer == Some(2) && !sh.all_propagating();
    let b2 = outer.is_none()
        && sh.label_at(1) == 1
        && sh.label_at(n2) == 1
        && sh.edges.iter().filter(|e| e.2 == 1).count() == 2;
    b1 || b1p || b2
}

fn h_admissible(d: &LabeledDiagram) -> bool {
    let sh = Shape::new(d);
    let (n2, n) = (sh.n2, d.n());
    if sh.all_propagating() {
        return sh.edges.iter().all(|e| e.2 == 0);
    }
    let labels_ok = sh.edges.iter().all(|e| e.2 == 0 || e.2 == 2);
    let top =
        sh.label_between(1, 2) == Some(2) || (2..n).any(|i| sh.label_between(i, i + 1) == Some(0));
    let bottom = sh.label_between(n2, n2 - 1) == Some(2)
        || (2..n).any(|i| sh.label_between(n2 + 1 - i, n2 - i) == Some(0));
    labels_ok && top && bottom
}

fn i_admissible(d: &LabeledDiagram) -> bool {
    let sh = Shape::new(d);
    if sh.all_propagating() {
        return sh.edges.iter().all(|e| e.2 == 0);
    }
    sh.edges
        .iter()
        .zip(&sh.classes)
        .all(|(e, c)| match (c.propagating, c.transitional) {
            (false, true) => e.2 == 1,
            (false, false) => e.2 == 0,
            (true, true) => e.2 % 2 == 1,
            (true, false) => e.2 % 2 == 0,
        })
}

/// Exposed basis diagrams of `ctx` satisfying the conditions of `flavor`.
pub fn admissible(flavor: Flavor, ctx: &PlanarContext) -> Result<Vec<LabeledDiagram>> {
    let r = ctx.verlinde_r().ok_or(Error::NotVerlinde)?;
    let incompatible = |what: &str| {
        Err(Error::InvalidArgument(format!(
            "{what} admissibility needs {}",
            ctx_desc(ctx)
        )))
    };
    let pred: fn(&LabeledDiagram) -> bool = match flavor {
        Flavor::Plain => |d| d.labels().iter().all(|&l| l == 0),
        Flavor::B if r == 3 => b_admissible,
        Flavor::H if r == 4 => h_admissible,
        Flavor::I if ctx.n() == 3 => i_admissible,
        Flavor::B => return incompatible("B"),
        Flavor::H => return incompatible("H"),
        Flavor::I => return incompatible("I"),
    };
    Ok(ctx.d_basis().into_iter().filter(pred).collect())
}

fn ctx_desc(ctx: &PlanarContext) -> String {
    format!(
        "a different context than P({}, {})",
        ctx.n(),
        ctx.algebra().rank()
    )
}

/// A verified homomorphism `ρ : TL(X) → P(n, r)` together with the images of
/// the canonical basis.
pub struct Embedding<'a> {
    tl: &'a TLContext,
    ctx: PlanarContext,
    variant: Variant,
    gens: Vec<LabeledDiagram>,
    /// `ρ(c_w)` aligned with `tl.wc()`.
    images: Vec<PlanarElement>,
}

impl<'a> Embedding<'a> {
    /// Define `ρ` on generators and extend it to the canonical basis by the
    /// recursion `ρ(c_w) = ρ(b_s)ρ(c_{sw}) - Σ a_z ρ(c_z)` where
    /// `b_s c_{sw} = c_w + Σ a_z c_z`.
    pub fn build(tl: &'a TLContext, variant: Variant) -> Result<Self> {
        let g = tl.group();
        let (n, r, labels) = target(variant, g.coxeter_type())?;
        let ctx = PlanarContext::verlinde(n, r);
        let gens = labels
            .iter()
            .enumerate()
            .map(|(k, &x)| ctx.e_k(k + 1, x))
            .collect::<Result<Vec<_>>>()?;
        let wc = tl.wc();
        let mut images: Vec<PlanarElement> = Vec::with_capacity(wc.len());
        let mut pos = BTreeMap::new();
        for (i, &w) in wc.iter().enumerate() {
            pos.insert(w, i);
            if w == 0 {
                images.push(PlanarElement::basis(ctx.identity()));
                continue;
            }
            let s = g.word(w)[0];
            let rest = g.left_mul(s, w);
            let prod = tl.c_coords(&tl.mul(&tl.b(s), tl.c(rest)?));
            let mut img = ctx.mul(&PlanarElement::basis(gens[s].clone()), &images[pos[&rest]])?;
            for (z, a) in prod.terms() {
                if z == w {
                    if !a.is_one() {
                        return Err(Error::Verification(format!(
                            "b_s c_(sw) has coefficient {a} at c_w for {}",
                            g.format_word(w)
                        )));
                    }
                    continue;
                }
                let p = *pos.get(&z).ok_or_else(|| {
                    Error::Verification(format!(
                        "recursion for {} reaches a later element",
                        g.format_word(w)
                    ))
                })?;
                img = img.sub(&images[p].scale(a));
            }
            images.push(img);
        }
        Ok(Self {
            tl,
            ctx,
            variant,
            gens,
            images,
        })
    }

    pub fn context(&self) -> &PlanarContext {
        &self.ctx
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn tl(&self) -> &TLContext {
        self.tl
    }

    pub fn generator_images(&self) -> &[LabeledDiagram] {
        &self.gens
    }

    /// `ρ(c_w)` aligned with `tl().wc()`.
    pub fn canonical_images(&self) -> &[PlanarElement] {
        &self.images
    }

    pub fn image_of_c(&self, w: usize) -> Option<&PlanarElement> {
        self.tl
            .wc()
            .iter()
            .position(|&x| x == w)
            .map(|i| &self.images[i])
    }

    pub fn apply(&self, x: &TLElement) -> PlanarElement {
        let coords = self.tl.c_coords(x);
        let mut out = PlanarElement::zero();
        for (w, c) in coords.terms() {
            out = out.add(
                &self
                    .image_of_c(w)
                    .expect("canonical coordinates lie in W_c")
                    .scale(c),
            );
        }
        out
    }

    /// Defining relations of `TL(X)` under `ρ`: `ρ(b_s)² = [2]ρ(b_s)` and, for
    /// every pair of generators, both alternating monomials of length `m(s,t)`
    /// (or the commutation relation when `m = 2`). Returns failed relations.
    pub fn relation_failures(&self) -> Vec<String> {
        let g = self.tl.group();
        let n = g.rank();
        let gen = |s: usize| PlanarElement::basis(self.gens[s].clone());
        let mul = |x: &PlanarElement, y: &PlanarElement| self.ctx.mul(x, y).expect("same context");
        let mut bad = Vec::new();
        for s in 0..n {
            if mul(&gen(s), &gen(s)) != gen(s).scale(&LaurentInt::delta()) {
                bad.push(format!("b{}^2", s + 1));
            }
        }
        for s in 0..n {
            for t in 0..n {
                if s == t {
                    continue;
                }
                let m = g.bond(s, t);
                if m == 2 {
                    if mul(&gen(s), &gen(t)) != mul(&gen(t), &gen(s)) {
                        bad.push(format!("b{} b{} commute", s + 1, t + 1));
                    }
                    continue;
                }
                let (mut in_tl, mut in_p) =
                    (self.tl.one(), PlanarElement::basis(self.ctx.identity()));
                for k in 0..m {
                    let x = if k % 2 == 0 { s } else { t };
                    in_tl = self.tl.mul(&in_tl, &self.tl.b(x));
                    in_p = mul(&in_p, &gen(x));
                }
                if self.apply(&in_tl) != in_p {
                    bad.push(format!("alternating b{} b{} of length {m}", s + 1, t + 1));
                }
            }
        }
        bad
    }

    /// Pairs `(u, w)` with `ρ(c_u c_w) ≠ ρ(c_u) ρ(c_w)`.
    pub fn homomorphism_failures(&self) -> Vec<(usize, usize)> {
        let wc = self.tl.wc();
        let k = wc.len();
        (0..k * k)
            .into_par_iter()
            .filter_map(|idx| {
                let (i, j) = (idx / k, idx % k);
                let lhs = self.apply(&self.tl.mul(self.tl.c(wc[i]).ok()?, self.tl.c(wc[j]).ok()?));
                let rhs = self.ctx.mul(&self.images[i], &self.images[j]).ok()?;
                (lhs != rhs).then_some((wc[i], wc[j]))
            })
            .collect()
    }

    /// Check that `w ↦ ρ(c_w)` sends each canonical basis element to a single
    /// diagram with coefficient 1, injectively, onto `expected` when given
    /// and into the exposed basis otherwise.
    pub fn bijection(&self, expected: Option<&[LabeledDiagram]>) -> BijectionReport {
        let mut map = Vec::new();
        let mut problems = Vec::new();
        for (&w, img) in self.tl.wc().iter().zip(&self.images) {
            match img.as_single() {
                Some((d, c)) if c.is_one() => map.push((w, d.clone())),
                _ => problems.push(format!(
                    "ρ(c_{}) is not a single diagram: {img}",
                    self.tl.group().format_word(w)
                )),
            }
        }
        let image: BTreeSet<&LabeledDiagram> = map.iter().map(|(_, d)| d).collect();
        if image.len() != map.len() {
            problems.push("ρ is not injective on the canonical basis".into());
        }
        match expected {
            Some(set) => {
                let want: BTreeSet<&LabeledDiagram> = set.iter().collect();
                if want != image {
                    problems.push(format!(
                        "image has {} diagrams, admissible set has {}",
                        image.len(),
                        want.len()
                    ));
                }
            }
            None => {
                if let Some(d) = image.iter().find(|d| !self.ctx.is_exposed(d)) {
                    problems.push(format!("image diagram {d} is not exposed"));
                }
            }
        }
        BijectionReport {
            map,
            expected_count: expected.map(<[_]>::len),
            problems,
        }
    }

    /// Conditions (a), (b), (a'), (b'), (c) relating descents of `w` to the
    /// arcs of `ρ_I(c_w)` in `P(3, m-1)`. Returns elements where they fail.
    pub fn dihedral_descent_failures(&self) -> Vec<usize> {
        let g = self.tl.group();
        let mut bad = Vec::new();
        for (&w, img) in self.tl.wc().iter().zip(&self.images) {
            if w == 0 {
                continue;
            }
            let Some((d, _)) = img.as_single() else {
                bad.push(w);
                continue;
            };
            let sh = Shape::new(d);
            let joined = |p, q| sh.label_between(p, q).is_some();
            let prop: Vec<usize> = sh
                .edges
                .iter()
                .zip(&sh.classes)
                .filter(|(_, c)| c.propagating)
                .map(|(e, _)| e.2)
                .collect();
            let ok = g.is_left_descent(0, w) == joined(1, 2)
                && g.is_left_descent(1, w) == joined(2, 3)
                && g.is_right_descent(w, 0) == joined(5, 6)
                && g.is_right_descent(w, 1) == joined(4, 5)
                && prop.len() == 1
                && g.length(w) == prop[0] + 1;
            if !ok {
                bad.push(w);
            }
        }
        bad
    }

    /// Elements `w` with `ω(ρ(c_w)) ≠ ρ(c_w)`.
    pub fn omega_fixed_failures(&self) -> Vec<usize> {
        self.tl
            .wc()
            .iter()
            .zip(&self.images)
            .filter(|(_, img)| self.ctx.omega(img).map(|o| o != **img).unwrap_or(true))
            .map(|(&w, _)| w)
            .collect()
    }

    /// The bilinear form `(x, y) = τ(ρ(x) ρ(y)*)`.
    pub fn form(&self, x: &TLElement, y: &TLElement) -> LaurentInt {
        let (px, py) = (self.apply(x), self.apply(y));
        let prod = self
            .ctx
            .mul(&px, &self.ctx.star(&py))
            .expect("same context");
        self.ctx.tau(&prod)
    }

    /// Almost orthonormality of a family indexed by `W_c`: returns failing pairs.
    pub fn almost_orthonormal_failures(&self, family: &[TLElement]) -> Vec<(usize, usize)> {
        let k = family.len();
        let imgs: Vec<PlanarElement> = family.iter().map(|x| self.apply(x)).collect();
        let stars: Vec<PlanarElement> = imgs.iter().map(|x| self.ctx.star(x)).collect();
        (0..k * k)
            .into_par_iter()
            .filter(|&idx| {
                let (i, j) = (idx / k, idx % k);
                let f = self
                    .ctx
                    .tau(&self.ctx.mul(&imgs[i], &stars[j]).expect("same context"));
                !f.congruent_mod_vinv(i64::from(i == j))
            })
            .map(|idx| (idx / k, idx % k))
            .collect()
    }

    /// Classify `x` by the characterization of the canonical basis up to sign:
    /// bar-invariant with `(x, x) ≡ 1`. Returns `Some((w, sign))` when `±x = c_w`.
    pub fn classify_canonical(&self, x: &TLElement) -> CanonicalTest {
        let bar_invariant = self.tl.bar(x) == *x;
        let unit_norm = self.form(x, x).congruent_mod_vinv(1);
        let matched = self.tl.wc().iter().find_map(|&w| {
            let c = self.tl.c(w).ok()?;
            if c == x {
                Some((w, 1))
            } else if c.scale(&LaurentInt::constant(-1)) == *x {
                Some((w, -1))
            } else {
                None
            }
        });
        CanonicalTest {
            bar_invariant,
            unit_norm,
            matched,
        }
    }
}

/// Outcome of [`Embedding::classify_canonical`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTest {
    pub bar_invariant: bool,
    pub unit_norm: bool,
    pub matched: Option<(usize, i32)>,
}

impl CanonicalTest {
    /// The characterization predicts a match exactly when both tests pass.
    pub fn consistent(&self) -> bool {
        (self.bar_invariant && self.unit_norm) == self.matched.is_some()
    }
}

#[derive(Clone, Debug)]
pub struct BijectionReport {
    pub map: Vec<(usize, LabeledDiagram)>,
    pub expected_count: Option<usize>,
    pub problems: Vec<String>,
}

impl BijectionReport {
    pub fn pass(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Outcome of the desk check of the Kazhdan-Lusztig conjecture.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub ty: CoxeterType,
    /// `ρ(C'_w)` for each `w ∈ W`, in index order.
    pub images: Vec<PlanarElement>,
    pub nonzero: usize,
    pub all_zero_or_single: bool,
    pub injective: bool,
    pub canonical: bool,
    /// `ρ` computed on `T`-monomials agrees with `ρ ∘ θ`.
    pub agrees_with_quotient: bool,
}

impl ConjectureReport {
    pub fn pass(&self) -> bool {
        self.all_zero_or_single && self.injective && self.canonical && self.agrees_with_quotient
    }
}

/// Extend the uniform `ρ` to the Hecke algebra through `ρ(T_s) = vρ(C'_s) - 1`
/// and check that every `ρ(C'_w)` is zero or a single exposed diagram, with
/// distinct nonzero images.
pub fn conjecture_check(tl: &TLContext) -> Result<ConjectureReport> {
    let emb = Embedding::build(tl, Variant::Uniform)?;
    let ctx = emb.context();
    let g = tl.group();
    let h = tl.hecke();
    let one = PlanarElement::basis(ctx.identity());
    let rho_ts: Vec<PlanarElement> = emb
        .generator_images()
        .iter()
        .map(|d| {
            PlanarElement::basis(d.clone())
                .scale(&LaurentInt::v())
                .sub(&one)
        })
        .collect();
    let mut rho_t: Vec<PlanarElement> = Vec::with_capacity(g.size());
    rho_t.push(one.clone());
    for w in 1..g.size() {
        let s = g.word(w)[0];
        rho_t.push(ctx.mul(&rho_ts[s], &rho_t[g.left_mul(s, w)])?);
    }
    let images: Vec<PlanarElement> = (0..g.size())
        .into_par_iter()
        .map(|w| {
            let mut out = PlanarElement::zero();
            for (y, c) in tl.kl().element(h, w).terms() {
                out = out.add(&rho_t[y].scale(c));
            }
            out
        })
        .collect();
    let agrees_with_quotient =
        (0..g.size()).all(|w| emb.apply(&tl.theta(&tl.kl().element(h, w))) == images[w]);
    let all_zero_or_single = images
        .iter()
        .all(|x| x.is_zero() || x.as_single().is_some_and(|(_, c)| c.is_one()));
    let singles: Vec<&LabeledDiagram> = images
        .iter()
        .filter_map(|x| x.as_single().map(|(d, _)| d))
        .collect();
    let injective = singles.iter().collect::<BTreeSet<_>>().len() == singles.len();
    let canonical = singles.iter().all(|d| ctx.is_exposed(d));
    Ok(ConjectureReport {
        ty: g.coxeter_type(),
        nonzero: singles.len(),
        images,
        all_zero_or_single,
        injective,
        canonical,
        agrees_with_quotient,
    })
}

/// Default cap on `Catalan(n) · r^n` for rank sequences.
pub const DEFAULT_DRANK_CAP: u128 = 1 << 40;

/// Ranks of the exposed subalgebra `D(n, r)` for `n = 1..=n_max`.
pub fn drank_sequence(r: usize, n_max: usize, cap: u128) -> Result<Vec<u128>> {
    let catalan = (0..n_max as u128).fold(1u128, |c, i| c * 2 * (2 * i + 1) / (i + 2));
    let needed = (0..n_max).fold(catalan, |acc, _| acc.saturating_mul(r as u128));
    if needed > cap {
        return Err(Error::Budget {
            what: "drank".into(),
            needed,
            cap,
        });
    }
    Ok((1..=n_max).map(|n| exposed_count(n, r)).collect())
}

/// Coefficients of an element in the canonical basis, with names.
pub fn describe_c_coords(tl: &TLContext, x: &TLElement) -> Vec<(String, LaurentInt)> {
    let g = tl.group();
    let coords: LinComb = tl.c_coords(x);
    coords
        .terms()
        .map(|(w, c)| (g.format_word(w), c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_admissible_counts() {
        for r in 2..=6 {
            let ctx = PlanarContext::verlinde(3, r);
            assert_eq!(admissible(Flavor::I, &ctx).unwrap().len(), 2 * r + 1);
        }
    }

    #[test]
    fn b_admissible_examples() {
        let ctx = PlanarContext::verlinde(3, 3);
        let set = admissible(Flavor::B, &ctx).unwrap();
        assert!(set.contains(&ctx.identity()));
        assert!(!set.contains(&ctx.e_k(2, 1).unwrap()));
        assert!(admissible(Flavor::B, &PlanarContext::verlinde(3, 2)).is_err());
    }

    #[test]
    fn a2_embedding() {
        let tl = TLContext::from_type(CoxeterType::A(2)).unwrap();
        let emb = Embedding::build(&tl, Variant::A).unwrap();
        assert!(emb.relation_failures().is_empty());
        assert!(emb.homomorphism_failures().is_empty());
        let plain = admissible(Flavor::Plain, emb.context()).unwrap();
        assert_eq!(plain.len(), 5);
        assert!(emb.bijection(Some(&plain)).pass());
    }

    #[test]
    fn dihedral_descents() {
        for m in 3..=8 {
            let tl = TLContext::from_type(CoxeterType::I(m)).unwrap();
            let emb = Embedding::build(&tl, Variant::I).unwrap();
            assert!(emb.dihedral_descent_failures().is_empty(), "m = {m}");
        }
    }

    #[test]
    fn drank_small() {
        assert_eq!(
            drank_sequence(1, 5, DEFAULT_DRANK_CAP).unwrap(),
            vec![1, 2, 5, 14, 42]
        );
        assert_eq!(
            drank_sequence(2, 4, DEFAULT_DRANK_CAP).unwrap(),
            vec![2, 6, 20, 70]
        );
        assert_eq!(drank_sequence(7, 1, DEFAULT_DRANK_CAP).unwrap(), vec![7]);
        assert!(drank_sequence(5, 30, 1000).is_err());
    }

    #[test]
    fn conjecture_a2() {
        let tl = TLContext::from_type(CoxeterType::A(2)).unwrap();
        let rep = conjecture_check(&tl).unwrap();
        assert!(rep.pass());
        assert!(rep.images[tl.group().longest()].is_zero());
        assert_eq!(rep.nonzero, 5);
    }
}
