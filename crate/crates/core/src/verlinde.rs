//! Verlinde algebras `V_r = Z[x] / (U_r(x))` as table algebras.

use crate::coeff::QSqrt2;
use crate::table_algebra::TableAlgebra;

/// Integer polynomial in `x`, coefficient of `x^k` at index `k`.
pub type IntPoly = Vec<i64>;

/// Chebyshev polynomial of the second kind: `U_0 = 1`, `U_1 = x`,
/// `U_{n+1} = x U_n - U_{n-1}`.
pub fn chebyshev(n: usize) -> IntPoly {
    let mut prev: IntPoly = vec![1];
    if n == 0 {
        return prev;
    }
    let mut cur: IntPoly = vec![0, 1];
    for _ in 1..n {
        let mut next = vec![0; cur.len() + 1];
        for (k, c) in cur.iter().enumerate() {
            next[k + 1] += c;
        }
        for (k, c) in prev.iter().enumerate() {
            next[k] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn poly_mul(a: &[i64], b: &[i64]) -> IntPoly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Remainder modulo a monic polynomial.
fn poly_rem_monic(mut a: IntPoly, m: &[i64]) -> IntPoly {
    let d = m.len() - 1;
    while a.len() > d {
        let lead = a.pop().expect("nonempty");
        let shift = a.len() - d;
        for (k, c) in m[..d].iter().enumerate() {
            a[shift + k] -= lead * c;
        }
    }
    a
}

#[derive(Clone, Debug)]
pub struct VerlindeAlgebra {
    r: usize,
    algebra: TableAlgebra,
}

impl VerlindeAlgebra {
    /// Build `V_r` from the Clebsch-Gordan rule
    /// `u_n u_n' = Σ_{i=0}^{min(n, r-n'-1)} u_{n'-n+2i}` for `n <= n'`.
    pub fn new(r: usize) -> Self {
        assert!(r >= 1, "V_r needs r >= 1");
        let mut consts = Vec::new();
        for a in 0..r {
            for b in 0..r {
                let (n, np) = if a <= b { (a, b) } else { (b, a) };
                for i in 0..=n.min(r - np - 1) {
                    consts.push((a, b, np - n + 2 * i, 1));
                }
            }
        }
        let algebra = TableAlgebra::from_constants(r, 0, (0..r).collect(), consts)
            .expect("Clebsch-Gordan indices are in range")
            .with_labels((0..r).map(|i| format!("u{i}")).collect());
        Self { r, algebra }
    }

    /// Build `V_r` by multiplying Chebyshev polynomials in `Z[x]` and reducing
    /// modulo `U_r`. Used as an independent check of [`VerlindeAlgebra::new`].
    pub fn by_polynomial_reduction(r: usize) -> Self {
        assert!(r >= 1, "V_r needs r >= 1");
        let u: Vec<IntPoly> = (0..=r).map(chebyshev).collect();
        let mut consts = Vec::new();
        for a in 0..r {
            for b in 0..r {
                let mut rem = poly_rem_monic(poly_mul(&u[a], &u[b]), &u[r]);
                // U_k is monic of degree k, so peel off the top degree repeatedly.
                for k in (0..rem.len()).rev() {
                    let c = rem[k];
                    if c != 0 {
                        consts.push((a, b, k, c));
                        for (j, x) in u[k].iter().enumerate() {
                            rem[j] -= c * x;
                        }
                    }
                }
            }
        }
        let algebra = TableAlgebra::from_constants(r, 0, (0..r).collect(), consts)
            .expect("reduced degrees are below r")
            .with_labels((0..r).map(|i| format!("u{i}")).collect());
        Self { r, algebra }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn algebra(&self) -> &TableAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> TableAlgebra {
        self.algebra
    }

    /// `u_i w = u_{r-1-i}` for all `i`, and `w^2 = 1`, where `w = u_{r-1}`.
    pub fn w_identities_hold(&self) -> bool {
        let w = self.r - 1;
        (0..self.r).all(|i| self.algebra.product(i, w) == [(w - i, 1)])
            && self.algebra.product(w, w) == [(0, 1)]
    }
}

/// Does this table algebra have exactly the structure constants of `V_r`?
pub fn is_verlinde(alg: &TableAlgebra) -> bool {
    let v = VerlindeAlgebra::new(alg.rank());
    alg.identity() == 0
        && alg.involution() == v.algebra.involution()
        && alg.constants().eq(v.algebra.constants())
}

/// An element `a 1' + b z'` of `V_2 ⊗ Q(√2)`.
type V2 = [QSqrt2; 2];

fn v2_mul(a: &V2, b: &V2) -> V2 {
    [
        &(&a[0] * &b[0]) + &(&a[1] * &b[1]),
        &(&a[0] * &b[1]) + &(&a[1] * &b[0]),
    ]
}

/// Images of `1, y, z` under `1 ↦ 1'`, `y ↦ (z' + 1')/√2`, `z ↦ z'`.
pub fn phi_v3_v2() -> [[QSqrt2; 2]; 3] {
    let half_root = QSqrt2::from_frac(0, 1, 2);
    [
        [QSqrt2::one(), QSqrt2::zero()],
        [half_root.clone(), half_root],
        [QSqrt2::zero(), QSqrt2::one()],
    ]
}

/// Check that the map `V_3 → V_2 ⊗ Q(√2)` respects `y^2 = 1 + z`, `yz = zy = y`,
/// `z^2 = 1`, and more generally every structure constant of `V_3`.
pub fn phi_v3_v2_verify() -> bool {
    let phi = phi_v3_v2();
    let sum = |a: &V2, b: &V2| -> V2 { [&a[0] + &b[0], &a[1] + &b[1]] };
    let (one, y, z) = (&phi[0], &phi[1], &phi[2]);
    let relations = v2_mul(y, y) == sum(one, z)
        && v2_mul(y, z) == *y
        && v2_mul(z, y) == *y
        && v2_mul(z, z) == *one;
    let v3 = VerlindeAlgebra::new(3);
    let all_products = (0..3).all(|i| {
        (0..3).all(|j| {
            let mut image = [QSqrt2::zero(), QSqrt2::zero()];
            for &(m, c) in v3.algebra().product(i, j) {
                let c = QSqrt2::from_ints(c, 0);
                image = sum(&image, &[&c * &phi[m][0], &c * &phi[m][1]]);
            }
            image == v2_mul(&phi[i], &phi[j])
        })
    });
    relations && all_products
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_small() {
        assert_eq!(chebyshev(0), vec![1]);
        assert_eq!(chebyshev(1), vec![0, 1]);
        assert_eq!(chebyshev(2), vec![-1, 0, 1]);
        assert_eq!(chebyshev(3), vec![0, -2, 0, 1]);
    }

    #[test]
    fn clebsch_gordan_examples() {
        let v3 = VerlindeAlgebra::new(3);
        assert_eq!(v3.algebra().product(1, 1), &[(0, 1), (2, 1)]);
        let v4 = VerlindeAlgebra::new(4);
        assert_eq!(v4.algebra().product(2, 2), &[(0, 1), (2, 1)]);
        assert_eq!(VerlindeAlgebra::new(1).algebra().rank(), 1);
        let v5 = VerlindeAlgebra::new(5);
        assert_eq!(v5.algebra().product(1, 4), &[(3, 1)]);
    }

    #[test]
    fn both_constructions_agree() {
        for r in 1..=10 {
            let a = VerlindeAlgebra::new(r);
            let b = VerlindeAlgebra::by_polynomial_reduction(r);
            assert!(
                a.algebra().constants().eq(b.algebra().constants()),
                "r = {r}"
            );
        }
    }

    #[test]
    fn verlinde_is_a_table_algebra() {
        for r in 1..=8 {
            let v = VerlindeAlgebra::new(r);
            assert!(v.algebra().check().all_pass(), "r = {r}");
            assert!(v.w_identities_hold());
            assert!(is_verlinde(v.algebra()));
        }
        assert!(!is_verlinde(&TableAlgebra::cyclic_group(3).unwrap()));
    }

    #[test]
    fn phi_respects_relations() {
        assert!(phi_v3_v2_verify());
    }
}
