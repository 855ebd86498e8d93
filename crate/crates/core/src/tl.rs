//! Generalized Temperley-Lieb algebras `TL(X) = H(X) / J(X)` with their
//! `t`-basis, bar involution and canonical basis.

use std::sync::Arc;

use rayon::prelude::*;

use crate::coeff::LaurentInt;
use crate::coxeter::{CoxeterGroup, CoxeterType};
use crate::error::{Error, Result};
use crate::hecke::{
    canonical_solve, check_unitriangular, HeckeAlgebra, HeckeElement, KlBasis, LinComb,
};

/// Element of `TL(X)` in the `t`-basis, keyed by group element.
pub type TLElement = LinComb;

#[derive(Debug)]
pub struct TLContext {
    hecke: HeckeAlgebra,
    kl: KlBasis,
    wc: Vec<usize>,
    pos: Vec<Option<usize>>,
    /// `θ(T_w)` in the `t`-basis for every `w ∈ W`.
    theta_t: Vec<TLElement>,
    /// `t_x t_y`, indexed by positions in `wc`.
    table: Vec<TLElement>,
    /// `bar(t_w)` for `w ∈ W_c`.
    bar_t: Vec<TLElement>,
    /// `c_w` in the `t`-basis for `w ∈ W_c`.
    canonical: Vec<TLElement>,
    /// `θ(C'_w)` in the `t`-basis for `w ∈ W_c`.
    projected: Vec<TLElement>,
}

impl TLContext {
    pub fn from_type(ty: CoxeterType) -> Result<Self> {
        Self::new(Arc::new(CoxeterGroup::new(ty)?))
    }

    /// Build the quotient, verifying that the span of `C'_w` over complex `w`
    /// is a two-sided ideal containing the generators of `J(X)`.
    pub fn new(group: Arc<CoxeterGroup>) -> Result<Self> {
        let hecke = HeckeAlgebra::new(group);
        let kl = KlBasis::new(&hecke)?;
        let g = hecke.group();
        let size = g.size();
        let wc = g.wc();
        let mut pos = vec![None; size];
        for (i, &w) in wc.iter().enumerate() {
            pos[w] = Some(i);
        }

        verify_ideal(&hecke, &kl)?;

        // T̃_w = Σ_u K̃[u][w] C'_u; dropping complex u gives θ(T̃_w) in terms of θ(C'_u).
        let k_tilde: Vec<LinComb> = (0..size)
            .into_par_iter()
            .map(|w| kl.coords(&LinComb::basis(w)))
            .collect();
        // θ(C'_u) in t̃-coordinates by inverting the unitriangular block on W_c.
        let mut proj_tilde: Vec<LinComb> = Vec::with_capacity(wc.len());
        for &u in &wc {
            let mut x = LinComb::basis(u);
            for (y, c) in k_tilde[u].terms() {
                if y == u {
                    if !c.is_one() {
                        return Err(Error::Verification(format!(
                            "T̃ to C' change of basis not unitriangular at {u}"
                        )));
                    }
                    continue;
                }
                if let Some(p) = pos[y] {
                    if y > u {
                        return Err(Error::Verification(format!(
                            "T̃ to C' change of basis not triangular at {u}"
                        )));
                    }
                    x.add_scaled(&proj_tilde[p], &-c);
                }
            }
            proj_tilde.push(x);
        }
        let theta_t: Vec<TLElement> = (0..size)
            .map(|w| {
                let mut x = LinComb::zero();
                for (u, c) in k_tilde[w].terms() {
                    if let Some(p) = pos[u] {
                        x.add_scaled(&proj_tilde[p], c);
                    }
                }
                from_tilde(g, &x).shift_each(|_| g.length(w) as i32)
            })
            .collect();

        let k = wc.len();
        let table: Vec<TLElement> = (0..k * k)
            .into_par_iter()
            .map(|idx| {
                let (x, y) = (wc[idx / k], wc[idx % k]);
                theta_of(&theta_t, &hecke.mul(&hecke.t(x), &hecke.t(y)))
            })
            .collect();
        let bar_t: Vec<TLElement> = wc
            .iter()
            .map(|&w| theta_of(&theta_t, hecke.bar_t(w)))
            .collect();

        // Bar matrix on t̃ in compact coordinates.
        let bar_cols: Vec<LinComb> = wc
            .iter()
            .enumerate()
            .map(|(i, &y)| {
                let col = to_tilde(g, &bar_t[i]).scale(&LaurentInt::v_pow(g.length(y) as i32));
                LinComb::from_terms(
                    col.terms()
                        .map(|(z, c)| (pos[z].expect("t-basis is W_c"), c.clone())),
                )
            })
            .collect();
        check_unitriangular(&bar_cols)?;
        let canonical = (0..k)
            .map(|i| {
                let sol = canonical_solve(&bar_cols, i)?;
                Ok(from_tilde(
                    g,
                    &LinComb::from_terms(sol.terms().map(|(p, c)| (wc[p], c.clone()))),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let projected = proj_tilde.iter().map(|x| from_tilde(g, x)).collect();

        Ok(Self {
            hecke,
            kl,
            wc,
            pos,
            theta_t,
            table,
            bar_t,
            canonical,
            projected,
        })
    }

    pub fn group(&self) -> &CoxeterGroup {
        self.hecke.group()
    }

    pub fn hecke(&self) -> &HeckeAlgebra {
        &self.hecke
    }

    pub fn kl(&self) -> &KlBasis {
        &self.kl
    }

    /// `W_c` in index order.
    pub fn wc(&self) -> &[usize] {
        &self.wc
    }

    pub fn rank(&self) -> usize {
        self.wc.len()
    }

    fn position(&self, w: usize) -> Result<usize> {
        self.pos
            .get(w)
            .copied()
            .flatten()
            .ok_or_else(|| Error::InvalidArgument(format!("element {w} is not fully commutative")))
    }

    pub fn t(&self, w: usize) -> Result<TLElement> {
        self.position(w)?;
        Ok(LinComb::basis(w))
    }

    pub fn t_tilde(&self, w: usize) -> Result<TLElement> {
        self.position(w)?;
        Ok(LinComb::term(
            w,
            LaurentInt::v_pow(-(self.group().length(w) as i32)),
        ))
    }

    /// `b_s = v⁻¹ t_1 + v⁻¹ t_s`
    pub fn b(&self, s: usize) -> TLElement {
        let vi = LaurentInt::v_pow(-1);
        LinComb::from_terms([(0, vi.clone()), (self.group().generator(s), vi)])
    }

    /// Canonical basis element `c_w`.
    pub fn c(&self, w: usize) -> Result<&TLElement> {
        Ok(&self.canonical[self.position(w)?])
    }

    /// `θ(C'_w)` for `w ∈ W_c`, computed from the Kazhdan-Lusztig basis.
    pub fn projected_kl(&self, w: usize) -> Result<&TLElement> {
        Ok(&self.projected[self.position(w)?])
    }

    /// `θ(T_w)` for any `w ∈ W`.
    pub fn theta_t(&self, w: usize) -> &TLElement {
        &self.theta_t[w]
    }

    pub fn theta(&self, x: &HeckeElement) -> TLElement {
        theta_of(&self.theta_t, x)
    }

    pub fn mul(&self, x: &TLElement, y: &TLElement) -> TLElement {
        let k = self.wc.len();
        let mut out = LinComb::zero();
        for (a, ca) in x.terms() {
            let pa = self.pos[a].expect("TL element supported on W_c");
            for (b, cb) in y.terms() {
                let pb = self.pos[b].expect("TL element supported on W_c");
                out.add_scaled(&self.table[pa * k + pb], &(ca * cb));
            }
        }
        out
    }

    pub fn one(&self) -> TLElement {
        LinComb::basis(0)
    }

    pub fn bar(&self, x: &TLElement) -> TLElement {
        let mut out = LinComb::zero();
        for (w, c) in x.terms() {
            out.add_scaled(
                &self.bar_t[self.pos[w].expect("TL element supported on W_c")],
                &c.bar(),
            );
        }
        out
    }

    /// The anti-automorphism `t_w ↦ t_{w⁻¹}` fixing each `b_s`.
    pub fn star(&self, x: &TLElement) -> TLElement {
        LinComb::from_terms(x.terms().map(|(w, c)| (self.group().inverse(w), c.clone())))
    }

    pub fn to_tilde(&self, x: &TLElement) -> LinComb {
        to_tilde(self.group(), x)
    }

    /// Coordinates of `x` in the canonical basis.
    pub fn c_coords(&self, x: &TLElement) -> LinComb {
        let g = self.group();
        let mut rest = to_tilde(g, x);
        let mut out = LinComb::zero();
        while let Some((y, c)) = rest.last() {
            let cy = to_tilde(
                g,
                &self.canonical[self.pos[y].expect("TL element supported on W_c")],
            );
            rest.add_scaled(&cy, &-&c);
            out.add_term(y, &c);
        }
        out
    }

    /// Elements `w ∈ W_c` at which `c_w` fails bar invariance or the
    /// congruence `c_w ≡ t̃_w mod v⁻¹L`.
    pub fn canonical_failures(&self) -> Vec<usize> {
        self.wc
            .iter()
            .zip(&self.canonical)
            .filter(|(&w, c)| {
                let tilde = self.to_tilde(c);
                let lattice = tilde.terms().all(|(y, p)| {
                    if y == w {
                        p.is_one()
                    } else {
                        p.in_vinv_aminus()
                    }
                });
                self.bar(c) != **c || !lattice
            })
            .map(|(&w, _)| w)
            .collect()
    }

    /// Elements where the canonical basis and `θ(C'_w)` disagree.
    pub fn oracle_mismatches(&self) -> Vec<usize> {
        self.wc
            .iter()
            .zip(self.canonical.iter().zip(&self.projected))
            .filter(|(_, (a, b))| a != b)
            .map(|(&w, _)| w)
            .collect()
    }
}

fn theta_of(theta_t: &[TLElement], x: &HeckeElement) -> TLElement {
    let mut out = LinComb::zero();
    for (w, c) in x.terms() {
        out.add_scaled(&theta_t[w], c);
    }
    out
}

fn to_tilde(g: &CoxeterGroup, x: &LinComb) -> LinComb {
    x.shift_each(|w| g.length(w) as i32)
}

fn from_tilde(g: &CoxeterGroup, x: &LinComb) -> LinComb {
    x.shift_each(|w| -(g.length(w) as i32))
}

/// `C'_s · x` and `x · C'_s`.
fn c_left(h: &HeckeAlgebra, s: usize, x: &HeckeElement) -> HeckeElement {
    (&h.t_left(s, x) + x).scale(&LaurentInt::v_pow(-1))
}

fn c_right(h: &HeckeAlgebra, x: &HeckeElement, s: usize) -> HeckeElement {
    (&h.t_right(x, s) + x).scale(&LaurentInt::v_pow(-1))
}

fn verify_ideal(h: &HeckeAlgebra, kl: &KlBasis) -> Result<()> {
    let g = h.group();
    let complex_only =
        |x: &HeckeElement| kl.coords(&h.to_tilde(x)).support().all(|u| g.is_complex(u));
    let n = g.rank();
    for s in 0..n {
        for t in s + 1..n {
            if g.bond(s, t) >= 3 {
                let gen = LinComb::from_terms(
                    g.dihedral(s, t).into_iter().map(|w| (w, LaurentInt::one())),
                );
                if !complex_only(&gen) {
                    return Err(Error::Verification(format!(
                        "J generator for s{} s{} leaves the complex span",
                        s + 1,
                        t + 1
                    )));
                }
            }
        }
    }
    let bad = (0..g.size())
        .into_par_iter()
        .filter(|&w| g.is_complex(w))
        .find_any(|&w| {
            let c = kl.element(h, w);
            (0..n).any(|s| !complex_only(&c_left(h, s, &c)) || !complex_only(&c_right(h, &c, s)))
        });
    match bad {
        Some(w) => Err(Error::Verification(format!(
            "complex KL span is not an ideal at {}",
            g.format_word(w)
        ))),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_structure() {
        let tl = TLContext::from_type(CoxeterType::A(2)).unwrap();
        assert_eq!(tl.rank(), 5);
        let (b1, b2) = (tl.b(0), tl.b(1));
        assert_eq!(tl.mul(&tl.mul(&b1, &b2), &b1), b1);
        assert_eq!(tl.mul(&b1, &b1), b1.scale(&LaurentInt::delta()));
        let g = tl.group();
        let st = g.parse_word("s1s2").unwrap();
        let expect = LinComb::from_terms(
            [0, g.generator(0), g.generator(1), st].map(|w| (w, LaurentInt::v_pow(-2))),
        );
        assert_eq!(tl.c(st).unwrap(), &expect);
        assert_eq!(tl.c(g.generator(0)).unwrap(), &b1);
        assert_eq!(tl.c(0).unwrap(), &tl.one());
        let j = LinComb::from_terms((0..6).map(|w| (w, LaurentInt::one())));
        assert!(tl.theta(&j).is_zero());
    }

    #[test]
    fn canonical_bases_agree() {
        for ty in [
            CoxeterType::A(3),
            CoxeterType::B(3),
            CoxeterType::I(6),
            CoxeterType::H(3),
        ] {
            let tl = TLContext::from_type(ty).unwrap();
            assert!(tl.canonical_failures().is_empty(), "{ty}");
            assert!(tl.oracle_mismatches().is_empty(), "{ty}");
        }
    }

    #[test]
    fn bar_matches_inverse_formula() {
        let tl = TLContext::from_type(CoxeterType::B(3)).unwrap();
        for &w in tl.wc() {
            let inv = tl.t(tl.group().inverse(w)).unwrap();
            assert_eq!(tl.mul(&tl.bar(&tl.t(w).unwrap()), &inv), tl.one());
        }
    }

    #[test]
    fn star_is_anti_automorphism() {
        let tl = TLContext::from_type(CoxeterType::H(3)).unwrap();
        for s in 0..3 {
            assert_eq!(tl.star(&tl.b(s)), tl.b(s));
        }
        let wc = tl.wc();
        for &x in wc.iter().step_by(3) {
            for &y in wc.iter().step_by(5) {
                let (tx, ty) = (tl.t(x).unwrap(), tl.t(y).unwrap());
                assert_eq!(
                    tl.star(&tl.mul(&tx, &ty)),
                    tl.mul(&tl.star(&ty), &tl.star(&tx))
                );
            }
        }
    }

    #[test]
    fn dihedral_recursion() {
        for m in 3..=8 {
            let tl = TLContext::from_type(CoxeterType::I(m)).unwrap();
            let g = tl.group();
            for s in 0..2 {
                let sp = 1 - s;
                let cs = tl.c(g.generator(s)).unwrap();
                for &w in tl.wc() {
                    let got = tl.mul(cs, tl.c(w).unwrap());
                    let sw = g.left_mul(s, w);
                    let expect = if g.is_left_descent(s, w) {
                        tl.c(w).unwrap().scale(&LaurentInt::delta())
                    } else if g.length(w) <= 1 {
                        tl.c(sw).unwrap().clone()
                    } else if g.length(w) == m - 1 {
                        tl.c(g.left_mul(sp, w)).unwrap().clone()
                    } else {
                        tl.c(sw).unwrap() + tl.c(g.left_mul(sp, w)).unwrap()
                    };
                    assert_eq!(got, expect, "m={m} s={s} w={}", g.format_word(w));
                }
            }
        }
    }
}
