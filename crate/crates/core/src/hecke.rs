//! Hecke algebras in the `T`-basis, the bar involution, and the
//! Kazhdan-Lusztig basis `C'_w` via a unitriangular bar-invariance solve.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::coeff::LaurentInt;
use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};

/// Sparse `Z[v, v⁻¹]`-combination of basis elements indexed by `usize`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinComb(BTreeMap<usize, LaurentInt>);

/// Element of a Hecke algebra, keyed by group element, in the `T`-basis.
pub type HeckeElement = LinComb;

impl LinComb {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, LaurentInt::one())
    }

    pub fn term(i: usize, c: LaurentInt) -> Self {
        let mut out = Self::zero();
        out.add_term(i, &c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, LaurentInt)>) -> Self {
        let mut out = Self::zero();
        for (i, c) in terms {
            out.add_term(i, &c);
        }
        out
    }

    pub fn add_term(&mut self, i: usize, c: &LaurentInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(i).or_default();
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&i);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &LaurentInt) {
        if c.is_zero() {
            return;
        }
        for (&i, x) in &other.0 {
            self.add_term(i, &(x * c));
        }
    }

    pub fn scale(&self, c: &LaurentInt) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn coeff(&self, i: usize) -> LaurentInt {
        self.0.get(&i).cloned().unwrap_or_default()
    }

    pub fn get(&self, i: usize) -> Option<&LaurentInt> {
        self.0.get(&i)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &LaurentInt)> + '_ {
        self.0.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    /// Term with the largest index.
    pub fn last(&self) -> Option<(usize, LaurentInt)> {
        self.0.last_key_value().map(|(&i, c)| (i, c.clone()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Apply `bar` to every coefficient.
    pub fn bar_coeffs(&self) -> Self {
        Self(self.0.iter().map(|(&i, c)| (i, c.bar())).collect())
    }

    /// Multiply the coefficient at `i` by `v^{shift(i)}`.
    pub fn shift_each(&self, shift: impl Fn(usize) -> i32) -> Self {
        Self(
            self.0
                .iter()
                .map(|(&i, c)| (i, c.shift(shift(i))))
                .collect(),
        )
    }
}

impl std::ops::Add<&LinComb> for &LinComb {
    type Output = LinComb;
    fn add(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentInt::one());
        out
    }
}

impl std::ops::Sub<&LinComb> for &LinComb {
    type Output = LinComb;
    fn sub(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentInt::constant(-1));
        out
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})[{i}]")?;
        }
        Ok(())
    }
}

/// Unitriangular canonical-basis solve.
///
/// `bar_cols[y]` expands `bar(B_y)` in a basis `{B_z}` of a free module,
/// where the bar map is semilinear with respect to `v ↦ v⁻¹`. The columns
/// must be unitriangular (`bar(B_y) = B_y + Σ_{z<y} ...`). Returns the unique
/// bar-invariant `B_w + Σ_{z<w} p_z B_z` with `p_z ∈ v⁻¹Z[v⁻¹]`.
pub fn canonical_solve(bar_cols: &[LinComb], w: usize) -> Result<LinComb> {
    let mut acc = LinComb::zero();
    let mut out = LinComb::basis(w);
    acc.add_scaled(&bar_cols[w], &LaurentInt::one());
    for z in (0..w).rev() {
        // p_z - bar(p_z) = Σ_{y>z} bar(p_y) r_{z,y}
        let q = acc.coeff(z);
        if q.is_zero() {
            continue;
        }
        if !(&q + &q.bar()).is_zero() {
            return Err(Error::Verification(format!(
                "canonical solve for {w}: right side at {z} is not antisymmetric"
            )));
        }
        let p = q.negative_part();
        acc.add_scaled(&bar_cols[z], &p.bar());
        out.add_term(z, &p);
    }
    Ok(out)
}

/// Check that `bar_cols` is unitriangular with respect to index order.
pub fn check_unitriangular(bar_cols: &[LinComb]) -> Result<()> {
    for (y, col) in bar_cols.iter().enumerate() {
        if !col.coeff(y).is_one() || col.support().any(|z| z > y) {
            return Err(Error::Verification(format!(
                "bar matrix is not unitriangular at column {y}"
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    group: Arc<CoxeterGroup>,
    bar_t: Vec<HeckeElement>,
}

impl HeckeAlgebra {
    pub fn new(group: Arc<CoxeterGroup>) -> Self {
        let mut h = Self {
            group,
            bar_t: Vec::new(),
        };
        let q_inv = LaurentInt::v_pow(-2);
        let q_inv_minus_one = &q_inv - &LaurentInt::one();
        let mut bar_t: Vec<HeckeElement> = Vec::with_capacity(h.group.size());
        bar_t.push(LinComb::basis(0));
        for w in 1..h.group.size() {
            // bar(T_w) = bar(T_s) bar(T_{sw}), bar(T_s) = q⁻¹ T_s + (q⁻¹ - 1)
            let s = h.group.word(w)[0];
            let rest = &bar_t[h.group.left_mul(s, w)];
            let mut x = h.t_left(s, rest).scale(&q_inv);
            x.add_scaled(rest, &q_inv_minus_one);
            bar_t.push(x);
        }
        h.bar_t = bar_t;
        h
    }

    pub fn group(&self) -> &CoxeterGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    pub fn t(&self, w: usize) -> HeckeElement {
        LinComb::basis(w)
    }

    /// `T_s · x`
    pub fn t_left(&self, s: usize, x: &HeckeElement) -> HeckeElement {
        let g = &*self.group;
        let q = LaurentInt::q();
        let q1 = &q - &LaurentInt::one();
        let mut out = LinComb::zero();
        for (w, c) in x.terms() {
            let sw = g.left_mul(s, w);
            if g.length(sw) > g.length(w) {
                out.add_term(sw, c);
            } else {
                out.add_term(sw, &(c * &q));
                out.add_term(w, &(c * &q1));
            }
        }
        out
    }

    /// `x · T_s`
    pub fn t_right(&self, x: &HeckeElement, s: usize) -> HeckeElement {
        let g = &*self.group;
        let q = LaurentInt::q();
        let q1 = &q - &LaurentInt::one();
        let mut out = LinComb::zero();
        for (w, c) in x.terms() {
            let ws = g.right_mul(w, s);
            if g.length(ws) > g.length(w) {
                out.add_term(ws, c);
            } else {
                out.add_term(ws, &(c * &q));
                out.add_term(w, &(c * &q1));
            }
        }
        out
    }

    pub fn mul(&self, x: &HeckeElement, y: &HeckeElement) -> HeckeElement {
        let mut out = LinComb::zero();
        for (w, c) in x.terms() {
            let prod = self
                .group
                .word(w)
                .iter()
                .rev()
                .fold(y.clone(), |acc, &s| self.t_left(s, &acc));
            out.add_scaled(&prod, c);
        }
        out
    }

    /// `bar(T_w)` in the `T`-basis.
    pub fn bar_t(&self, w: usize) -> &HeckeElement {
        &self.bar_t[w]
    }

    pub fn bar(&self, x: &HeckeElement) -> HeckeElement {
        let mut out = LinComb::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.bar_t[w], &c.bar());
        }
        out
    }

    /// The anti-automorphism `T_w ↦ T_{w⁻¹}`.
    pub fn flip(&self, x: &HeckeElement) -> HeckeElement {
        LinComb::from_terms(x.terms().map(|(w, c)| (self.group.inverse(w), c.clone())))
    }

    /// Convert `T`-coordinates to `T̃ = v^{-ℓ} T` coordinates and back.
    pub fn to_tilde(&self, x: &HeckeElement) -> LinComb {
        x.shift_each(|w| self.group.length(w) as i32)
    }

    pub fn from_tilde(&self, x: &LinComb) -> HeckeElement {
        x.shift_each(|w| -(self.group.length(w) as i32))
    }

    /// Columns of the bar map in the `T̃`-basis.
    pub fn bar_matrix_tilde(&self) -> Vec<LinComb> {
        (0..self.group.size())
            .map(|y| {
                self.to_tilde(&self.bar_t[y])
                    .scale(&LaurentInt::v_pow(self.group.length(y) as i32))
            })
            .collect()
    }
}

/// The Kazhdan-Lusztig basis of a Hecke algebra.
#[derive(Clone, Debug)]
pub struct KlBasis {
    /// `C'_w` in the `T̃`-basis.
    tilde: Vec<LinComb>,
}

impl KlBasis {
    pub fn new(h: &HeckeAlgebra) -> Result<Self> {
        let bar = h.bar_matrix_tilde();
        check_unitriangular(&bar)?;
        let tilde = (0..bar.len())
            .map(|w| canonical_solve(&bar, w))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { tilde })
    }

    pub fn len(&self) -> usize {
        self.tilde.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tilde.is_empty()
    }

    /// `C'_w` in the `T̃`-basis.
    pub fn tilde(&self, w: usize) -> &LinComb {
        &self.tilde[w]
    }

    /// `C'_w` in the `T`-basis.
    pub fn element(&self, h: &HeckeAlgebra, w: usize) -> HeckeElement {
        h.from_tilde(&self.tilde[w])
    }

    /// `P_{y,w}` as coefficients of `q^0, q^1, ...`.
    pub fn polynomial(&self, h: &HeckeAlgebra, y: usize, w: usize) -> Vec<i64> {
        let g = h.group();
        let p = self.tilde[w]
            .coeff(y)
            .shift(g.length(w) as i32 - g.length(y) as i32);
        let mut out = Vec::new();
        for &(k, ref c) in p.terms() {
            assert!(
                k >= 0 && k % 2 == 0,
                "KL polynomial in odd or negative powers"
            );
            let k = (k / 2) as usize;
            out.resize(out.len().max(k + 1), 0);
            out[k] = i64::try_from(c).expect("KL coefficient fits in i64");
        }
        out
    }

    /// Expand a `T̃`-combination in the `C'`-basis.
    pub fn coords(&self, x_tilde: &LinComb) -> LinComb {
        let mut rest = x_tilde.clone();
        let mut out = LinComb::zero();
        while let Some((y, c)) = rest.last() {
            rest.add_scaled(&self.tilde[y], &-&c);
            out.add_term(y, &c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterType;

    fn hecke(ty: CoxeterType) -> HeckeAlgebra {
        HeckeAlgebra::new(Arc::new(CoxeterGroup::new(ty).unwrap()))
    }

    #[test]
    fn quadratic_relation() {
        let h = hecke(CoxeterType::A(2));
        let s = h.group().generator(0);
        let t = h.group().generator(1);
        let ss = h.mul(&h.t(s), &h.t(s));
        let q = LaurentInt::q();
        assert_eq!(
            ss,
            LinComb::from_terms([(0, q.clone()), (s, &q - &LaurentInt::one())])
        );
        let st = h.group().mul(s, t);
        assert_eq!(h.mul(&h.t(s), &h.t(t)), h.t(st));
    }

    #[test]
    fn bar_is_involutive_ring_map() {
        let h = hecke(CoxeterType::B(3));
        let n = h.group().size();
        for w in 0..n {
            assert_eq!(h.bar(h.bar_t(w)), h.t(w));
        }
        for x in (0..n).step_by(5) {
            for y in (0..n).step_by(7) {
                let lhs = h.bar(&h.mul(&h.t(x), &h.t(y)));
                assert_eq!(lhs, h.mul(h.bar_t(x), h.bar_t(y)));
            }
        }
    }

    #[test]
    fn bar_inverts_flipped_basis() {
        let h = hecke(CoxeterType::A(3));
        for w in 0..h.group().size() {
            let inv = h.t(h.group().inverse(w));
            assert_eq!(h.mul(h.bar_t(w), &inv), h.t(0));
        }
    }

    #[test]
    fn kl_small_cases() {
        let h = hecke(CoxeterType::I(5));
        let kl = KlBasis::new(&h).unwrap();
        let s = h.group().generator(0);
        let c = kl.element(&h, s);
        let vi = LaurentInt::v_pow(-1);
        assert_eq!(c, LinComb::from_terms([(0, vi.clone()), (s, vi)]));
        let w0 = h.group().longest();
        let top = kl.element(&h, w0);
        assert_eq!(
            top,
            LinComb::from_terms((0..10).map(|w| (w, LaurentInt::v_pow(-5))))
        );
        assert_eq!(kl.element(&h, 0), h.t(0));
    }

    #[test]
    fn a3_singular_polynomial() {
        let h = hecke(CoxeterType::A(3));
        let kl = KlBasis::new(&h).unwrap();
        let w = h.group().parse_word("s2s1s3s2").unwrap();
        assert_eq!(kl.polynomial(&h, 0, w), vec![1, 1]);
        let y = h.group().generator(1);
        assert_eq!(kl.polynomial(&h, y, w), vec![1, 1]);
    }

    #[test]
    fn coords_round_trip() {
        let h = hecke(CoxeterType::A(3));
        let kl = KlBasis::new(&h).unwrap();
        for w in 0..h.group().size() {
            assert_eq!(kl.coords(kl.tilde(w)), LinComb::basis(w));
        }
    }
}
