//! The diagram algebra `P_n^A` over a normalized table algebra `A`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::coeff::LaurentInt;
use crate::diagram::{
    closure_loops, compose_matchings, enumerate_matchings, fuse_labels, loop_trace, LabeledDiagram,
};
use crate::error::{Error, Result};
use crate::table_algebra::TableAlgebra;
use crate::verlinde::{is_verlinde, VerlindeAlgebra};

type Product = Arc<[(LabeledDiagram, LaurentInt)]>;

/// Strand count plus coefficient algebra, with a memo of basis products.
pub struct PlanarContext {
    n: usize,
    alg: Arc<TableAlgebra>,
    verlinde_r: Option<usize>,
    cache: RwLock<HashMap<(LabeledDiagram, LabeledDiagram), Product>>,
}

impl fmt::Debug for PlanarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PlanarContext")
            .field("n", &self.n)
            .field("rank", &self.alg.rank())
            .finish()
    }
}

impl PlanarContext {
    /// Fails if `alg` violates a table algebra axiom.
    pub fn new(n: usize, alg: TableAlgebra) -> Result<Self> {
        let report = alg.check();
        if !report.all_pass() {
            return Err(Error::Verification(format!(
                "coefficient algebra is not a table algebra:\n{report}"
            )));
        }
        let verlinde_r = is_verlinde(&alg).then(|| alg.rank());
        Ok(Self {
            n,
            alg: Arc::new(alg),
            verlinde_r,
            cache: RwLock::new(HashMap::new()),
        })
    }

    /// `P(n, r)`, built over the Verlinde algebra `V_r`.
    pub fn verlinde(n: usize, r: usize) -> Self {
        let alg = VerlindeAlgebra::new(r).into_algebra();
        Self {
            n,
            alg: Arc::new(alg),
            verlinde_r: Some(r),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> &TableAlgebra {
        &self.alg
    }

    pub fn verlinde_r(&self) -> Option<usize> {
        self.verlinde_r
    }

    pub fn identity(&self) -> LabeledDiagram {
        LabeledDiagram::identity(self.n, &self.alg)
    }

    pub fn e_k(&self, k: usize, x: usize) -> Result<LabeledDiagram> {
        LabeledDiagram::e_k(self.n, k, x, &self.alg)
    }

    /// `Catalan(n) * rank^n`, saturating.
    pub fn basis_size(&self) -> u128 {
        let catalan = (0..self.n as u128).fold(1u128, |c, i| c * 2 * (2 * i + 1) / (i + 2));
        (0..self.n).fold(catalan, |acc, _| {
            acc.saturating_mul(self.alg.rank() as u128)
        })
    }

    /// Every labeling of every matching, sorted.
    pub fn basis(&self) -> Vec<LabeledDiagram> {
        let r = self.alg.rank();
        let mut out = Vec::new();
        for m in enumerate_matchings(self.n) {
            let mut labels = vec![0; self.n];
            loop {
                out.push(
                    LabeledDiagram::new(m.clone(), labels.clone()).expect("label count matches"),
                );
                // odometer, last edge fastest
                let mut k = self.n;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    labels[k] += 1;
                    if labels[k] < r {
                        break;
                    }
                    labels[k] = 0;
                }
                if labels.iter().all(|&l| l == 0) {
                    break;
                }
            }
        }
        out
    }

    fn check_diagram(&self, d: &LabeledDiagram) -> Result<()> {
        if d.n() != self.n {
            return Err(Error::ContextMismatch(format!(
                "diagram has {} strands, context has {}",
                d.n(),
                self.n
            )));
        }
        d.validate(&self.alg)
    }

    /// Product of two basis diagrams, memoized.
    pub fn mul_basis(&self, d1: &LabeledDiagram, d2: &LabeledDiagram) -> Product {
        let key = (d1.clone(), d2.clone());
        if let Some(hit) = self.cache.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let product: Product = self.compute_product(d1, d2).into();
        self.cache
            .write()
            .expect("cache lock")
            .insert(key, product.clone());
        product
    }

    fn compute_product(
        &self,
        d1: &LabeledDiagram,
        d2: &LabeledDiagram,
    ) -> Vec<(LabeledDiagram, LaurentInt)> {
        let alg = &*self.alg;
        let comp = compose_matchings(d1, d2).expect("same strand count");
        let mut loop_factor: i64 = 1;
        for l in &comp.loops {
            loop_factor *= loop_trace(alg, l);
            if loop_factor == 0 {
                return Vec::new();
            }
        }
        let scalar = LaurentInt::delta()
            .pow(comp.loops.len() as u32)
            .scale_i64(loop_factor);
        let options: Vec<Vec<(usize, i64)>> =
            comp.paths.iter().map(|p| fuse_labels(alg, p)).collect();
        if options.iter().any(|o| o.is_empty()) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx = vec![0usize; options.len()];
        loop {
            let labels: Vec<usize> = idx.iter().zip(&options).map(|(&i, o)| o[i].0).collect();
            let c: i64 = idx.iter().zip(&options).map(|(&i, o)| o[i].1).product();
            out.push((
                LabeledDiagram::new(comp.matching.clone(), labels).expect("one label per edge"),
                scalar.scale_i64(c),
            ));
            let mut k = idx.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < options[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }

    pub fn mul(&self, x: &PlanarElement, y: &PlanarElement) -> Result<PlanarElement> {
        for d in x.terms.keys().chain(y.terms.keys()) {
            self.check_diagram(d)?;
        }
        let mut out = PlanarElement::zero();
        for (d1, c1) in &x.terms {
            for (d2, c2) in &y.terms {
                let c = c1 * c2;
                for (d, k) in self.mul_basis(d1, d2).iter() {
                    out.add_term(d.clone(), &(&c * k));
                }
            }
        }
        Ok(out)
    }

    /// Product of two basis diagrams as an element.
    pub fn mul_diagrams(&self, d1: &LabeledDiagram, d2: &LabeledDiagram) -> PlanarElement {
        PlanarElement::from_terms(self.mul_basis(d1, d2).iter().cloned())
    }

    pub fn star(&self, x: &PlanarElement) -> PlanarElement {
        PlanarElement::from_terms(x.terms.iter().map(|(d, c)| (d.star(&self.alg), c.clone())))
    }

    /// Closure trace of a basis diagram, before the `v^-n` normalization.
    pub fn tr_basis(&self, d: &LabeledDiagram) -> LaurentInt {
        let loops = closure_loops(d);
        let factor: i64 = loops.iter().map(|l| loop_trace(&self.alg, l)).product();
        LaurentInt::delta()
            .pow(loops.len() as u32)
            .scale_i64(factor)
    }

    /// `(tr(x), τ(x))` with `τ = v^-n tr`.
    pub fn trace(&self, x: &PlanarElement) -> (LaurentInt, LaurentInt) {
        let mut tr = LaurentInt::zero();
        for (d, c) in &x.terms {
            tr += &(c * &self.tr_basis(d));
        }
        let tau = tr.shift(-(self.n as i32));
        (tr, tau)
    }

    pub fn tau(&self, x: &PlanarElement) -> LaurentInt {
        self.trace(x).1
    }

    pub fn tau_basis(&self, d: &LabeledDiagram) -> LaurentInt {
        self.tr_basis(d).shift(-(self.n as i32))
    }

    /// Relabel each transitional edge `u_i ↦ u_{r-1-i}`.
    pub fn omega_basis(&self, d: &LabeledDiagram) -> Result<LabeledDiagram> {
        let r = self.verlinde_r.ok_or(Error::NotVerlinde)?;
        let labels = d
            .labels()
            .iter()
            .zip(d.classify_edges())
            .map(|(&l, c)| if c.transitional { r - 1 - l } else { l })
            .collect();
        Ok(d.with_labels(labels))
    }

    pub fn omega(&self, x: &PlanarElement) -> Result<PlanarElement> {
        let mut out = PlanarElement::zero();
        for (d, c) in &x.terms {
            out.add_term(self.omega_basis(d)?, c);
        }
        Ok(out)
    }

    /// Exposed: every edge with a non-identity label borders the principal face.
    pub fn is_exposed(&self, d: &LabeledDiagram) -> bool {
        let id = self.alg.identity();
        d.labels()
            .iter()
            .zip(d.classify_edges())
            .all(|(&l, c)| l == id || c.principal)
    }

    pub fn d_basis(&self) -> Vec<LabeledDiagram> {
        self.basis()
            .into_iter()
            .filter(|d| self.is_exposed(d))
            .collect()
    }

    /// Image of `b_1 ⊗ ... ⊗ b_n` under the tensor embedding.
    pub fn tensor_embed(&self, b: &[usize]) -> Result<LabeledDiagram> {
        if b.len() != self.n {
            return Err(Error::StrandMismatch(self.n, b.len()));
        }
        let d = LabeledDiagram::tensor_embed(&self.alg, b);
        d.validate(&self.alg)?;
        Ok(d)
    }

    /// Brute-force check that the tensor embedding multiplies like `A^{⊗n}`.
    pub fn verify_tensor_iso(&self) -> bool {
        let power = self.alg.tensor_power(self.n);
        let r = self.alg.rank();
        let digits = |mut i: usize| {
            let mut b = vec![0; self.n];
            for k in (0..self.n).rev() {
                b[k] = i % r;
                i /= r;
            }
            b
        };
        let images: Vec<LabeledDiagram> = (0..power.rank())
            .map(|i| self.tensor_embed(&digits(i)).expect("n digits"))
            .collect();
        (0..power.rank()).all(|i| {
            (0..power.rank()).all(|j| {
                let expected = PlanarElement::from_terms(
                    power
                        .product(i, j)
                        .iter()
                        .map(|&(m, c)| (images[m].clone(), LaurentInt::constant(c))),
                );
                self.mul_diagrams(&images[i], &images[j]) == expected
            })
        })
    }
}

/// Number of exposed diagrams in `P_n` over a rank-`r` algebra: each matching
/// contributes `r^(number of principal edges)`.
pub fn exposed_count(n: usize, r: usize) -> u128 {
    enumerate_matchings(n)
        .iter()
        .map(|m| (r as u128).pow(m.principal_flags().iter().filter(|&&p| p).count() as u32))
        .sum()
}

/// A finite `Z[v, v^-1]`-combination of labeled diagrams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlanarElement {
    terms: BTreeMap<LabeledDiagram, LaurentInt>,
}

impl PlanarElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(d: LabeledDiagram) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(d, LaurentInt::one());
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (LabeledDiagram, LaurentInt)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (d, c) in terms {
            e.add_term(d, &c);
        }
        e
    }

    pub fn add_term(&mut self, d: LabeledDiagram, c: &LaurentInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&LaurentInt::constant(-1)))
    }

    pub fn scale(&self, c: &LaurentInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(d, k)| (d.clone(), k * c)))
    }

    pub fn coeff(&self, d: &LabeledDiagram) -> LaurentInt {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LabeledDiagram, &LaurentInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The diagram and coefficient if this is a single term.
    pub fn as_single(&self) -> Option<(&LabeledDiagram, &LaurentInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }
}

impl fmt::Display for PlanarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{c} * {d}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for PlanarElement {
    type Err = Error;

    /// Terms separated by newlines or `;`, each `<laurent> * <diagram>` or a bare diagram.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = PlanarElement::zero();
        for term in s
            .split(['\n', ';'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
        {
            if term == "0" {
                continue;
            }
            let (c, d) = match term.split_once('*') {
                Some((c, d)) => (c.trim().parse::<LaurentInt>()?, d),
                None => (LaurentInt::one(), term),
            };
            out.add_term(d.trim().parse()?, &c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> PlanarElement {
        s.parse().unwrap()
    }

    #[test]
    fn basis_counts() {
        assert_eq!(PlanarContext::verlinde(2, 2).basis().len(), 8);
        assert_eq!(PlanarContext::verlinde(1, 5).basis().len(), 5);
        assert_eq!(PlanarContext::verlinde(3, 1).basis().len(), 5);
        assert_eq!(PlanarContext::verlinde(3, 3).basis_size(), 135);
    }

    #[test]
    fn e1_squared_is_delta_e1() {
        let ctx = PlanarContext::verlinde(2, 3);
        let e1 = PlanarElement::basis(ctx.e_k(1, 1).unwrap());
        let sq = ctx.mul(&e1, &e1).unwrap();
        assert_eq!(sq, e1.scale(&LaurentInt::delta()));
    }

    #[test]
    fn orthogonal_labels_kill_the_loop() {
        let ctx = PlanarContext::verlinde(2, 2);
        let a = PlanarElement::basis(ctx.e_k(1, 0).unwrap());
        let b = PlanarElement::basis(ctx.e_k(1, 1).unwrap());
        assert!(ctx.mul(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn trace_examples() {
        let ctx = PlanarContext::verlinde(2, 3);
        let (tr, tau) = ctx.trace(&PlanarElement::basis(ctx.identity()));
        assert_eq!(tr, LaurentInt::delta().pow(2));
        assert_eq!(tau.to_string(), "1 + 2v^-2 + v^-4");
        let e1 = PlanarElement::basis(ctx.e_k(1, 1).unwrap());
        assert_eq!(ctx.tau(&e1).to_string(), "v^-1 + v^-3");
    }

    #[test]
    fn element_text_round_trip() {
        let x = el("v + v^-1 * n=2 | 1-2:1 3-4:1; -2 * n=2 | 1-4:0 2-3:2");
        let text = x.to_string();
        assert_eq!(el(&text), x);
        assert_eq!(text, "v + v^-1 * n=2 | 1-2:1 3-4:1\n-2 * n=2 | 1-4:0 2-3:2");
        assert_eq!(el("0"), PlanarElement::zero());
    }

    #[test]
    fn omega_examples() {
        let ctx = PlanarContext::verlinde(3, 4);
        let id = ctx.identity();
        assert_eq!(ctx.omega_basis(&id).unwrap(), id);
        let e = ctx.e_k(1, 0).unwrap();
        assert_eq!(ctx.omega_basis(&e).unwrap(), ctx.e_k(1, 3).unwrap());
        let z3 = PlanarContext::new(2, TableAlgebra::cyclic_group(3).unwrap()).unwrap();
        assert!(matches!(
            z3.omega_basis(&z3.identity()),
            Err(Error::NotVerlinde)
        ));
    }

    #[test]
    fn screened_label_is_not_exposed() {
        let ctx = PlanarContext::verlinde(2, 3);
        let d: LabeledDiagram = "n=2 | 1-4:0 2-3:1".parse().unwrap();
        assert!(!ctx.is_exposed(&d));
        let d: LabeledDiagram = "n=2 | 1-4:1 2-3:0".parse().unwrap();
        assert!(ctx.is_exposed(&d));
    }

    #[test]
    fn exposed_count_matches_filter() {
        for n in 1..=4 {
            for r in 1..=3 {
                let ctx = PlanarContext::verlinde(n, r);
                assert_eq!(ctx.d_basis().len() as u128, exposed_count(n, r));
            }
        }
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let ctx = PlanarContext::verlinde(2, 2);
        let x = PlanarElement::basis(LabeledDiagram::identity(3, ctx.algebra()));
        assert!(matches!(ctx.mul(&x, &x), Err(Error::ContextMismatch(_))));
    }
}
