//! Normalized table algebras (discrete hypergroups).
//!
//! A table algebra is stored by its structure constants `κ(b_m, b_i b_j)`,
//! an involution on basis indices and the index of the identity element.
//! Construction never validates the axioms; [`TableAlgebra::check`] does, and
//! reports every violation it finds.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::coeff::LaurentInt;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableAlgebra {
    rank: usize,
    identity: usize,
    involution: Vec<usize>,
    // products[i * rank + j]: nonzero (m, κ(b_m, b_i b_j)), sorted by m
    products: Vec<Vec<(usize, i64)>>,
    labels: Vec<String>,
}

impl TableAlgebra {
    /// Build from nonzero structure constants `(i, j, m, κ(b_m, b_i b_j))`.
    pub fn from_constants<I>(
        rank: usize,
        identity: usize,
        involution: Vec<usize>,
        constants: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, i64)>,
    {
        if rank == 0 {
            return Err(Error::InvalidArgument(
                "table algebra rank must be positive".into(),
            ));
        }
        let check = |index: usize| {
            if index >= rank {
                Err(Error::IndexOutOfRange { index, rank })
            } else {
                Ok(())
            }
        };
        check(identity)?;
        if involution.len() != rank {
            return Err(Error::InvalidArgument(format!(
                "involution has {} entries, expected {rank}",
                involution.len()
            )));
        }
        for &p in &involution {
            check(p)?;
        }
        let mut acc: BTreeMap<(usize, usize, usize), i64> = BTreeMap::new();
        for (i, j, m, c) in constants {
            check(i)?;
            check(j)?;
            check(m)?;
            *acc.entry((i, j, m)).or_default() += c;
        }
        let mut products = vec![Vec::new(); rank * rank];
        for ((i, j, m), c) in acc {
            if c != 0 {
                products[i * rank + j].push((m, c));
            }
        }
        Ok(Self {
            rank,
            identity,
            involution,
            products,
            labels: (0..rank).map(|i| format!("b{i}")).collect(),
        })
    }

    /// The rank-1 algebra `Z`, the unit for tensor products.
    pub fn trivial() -> Self {
        Self::from_constants(1, 0, vec![0], [(0, 0, 0, 1)]).expect("valid trivial algebra")
    }

    /// Group algebra of a finite group given by its multiplication table, with
    /// the involution sending each element to its inverse.
    pub fn group_algebra(table: &[Vec<usize>], identity: usize) -> Result<Self> {
        let k = table.len();
        let mut inverse = vec![usize::MAX; k];
        for (g, row) in table.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidArgument("group table is not square".into()));
            }
            for (h, &gh) in row.iter().enumerate() {
                if gh == identity {
                    inverse[g] = h;
                }
            }
        }
        if inverse.contains(&usize::MAX) {
            return Err(Error::InvalidArgument(
                "group table has an element without inverse".into(),
            ));
        }
        let consts = table
            .iter()
            .enumerate()
            .flat_map(|(g, row)| row.iter().enumerate().map(move |(h, &gh)| (g, h, gh, 1)));
        Self::from_constants(k, identity, inverse, consts)
    }

    /// The cyclic group `Z_k` with basis `{1, g, g^2, ...}` and `ḡ = g^-1`.
    pub fn cyclic_group(k: usize) -> Result<Self> {
        let table: Vec<Vec<usize>> = (0..k)
            .map(|a| (0..k).map(|b| (a + b) % k).collect())
            .collect();
        Self::group_algebra(&table, 0)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.rank, "one label per basis element");
        self.labels = labels;
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn bar(&self, i: usize) -> usize {
        self.involution[i]
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Nonzero `(m, κ(b_m, b_i b_j))`, sorted by `m`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.products[i * self.rank + j]
    }

    /// `κ(b_m, b_i b_j)`
    pub fn kappa(&self, m: usize, i: usize, j: usize) -> i64 {
        let row = self.product(i, j);
        row.binary_search_by_key(&m, |(k, _)| *k)
            .map_or(0, |p| row[p].1)
    }

    /// Product of a sparse integer combination with a basis element on the right.
    pub fn mul_combination_basis(&self, a: &[(usize, i64)], j: usize) -> Vec<(usize, i64)> {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for &(i, c) in a {
            for &(m, k) in self.product(i, j) {
                *acc.entry(m).or_default() += c * k;
            }
        }
        acc.into_iter().filter(|(_, c)| *c != 0).collect()
    }

    /// Product of a sequence of basis elements, left to right.
    pub fn mul_sequence(&self, seq: &[usize]) -> Vec<(usize, i64)> {
        let mut acc = vec![(self.identity, 1i64)];
        for &j in seq {
            acc = self.mul_combination_basis(&acc, j);
        }
        acc
    }

    /// Integer trace `t(b_{s1} ... b_{sk})`, the identity coefficient of the product.
    pub fn trace_of_sequence(&self, seq: &[usize]) -> i64 {
        self.mul_sequence(seq)
            .iter()
            .find(|(m, _)| *m == self.identity)
            .map_or(0, |(_, c)| *c)
    }

    /// All nonzero constants as `(i, j, m, c)` in lexicographic order.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, i64)> + '_ {
        (0..self.rank).flat_map(move |i| {
            (0..self.rank)
                .flat_map(move |j| self.product(i, j).iter().map(move |&(m, c)| (i, j, m, c)))
        })
    }

    /// Check the table algebra axioms by brute force over all index triples.
    pub fn check(&self) -> TaCheckReport {
        let r = self.rank;
        let mut report = TaCheckReport {
            t1: true,
            t2: true,
            t3_normalized: true,
            identity: true,
            associativity: true,
            violations: Vec::new(),
        };
        let fail = |report: &mut TaCheckReport,
                    axiom: Axiom,
                    witness: (usize, usize, usize),
                    detail: String| {
            match axiom {
                Axiom::T1 => report.t1 = false,
                Axiom::T2 => report.t2 = false,
                Axiom::T3 => report.t3_normalized = false,
                Axiom::Identity => report.identity = false,
                Axiom::Associativity => report.associativity = false,
            }
            report.violations.push(Violation {
                axiom,
                witness,
                detail,
            });
        };

        for (i, j, m, c) in self.constants() {
            if c < 0 {
                fail(
                    &mut report,
                    Axiom::T1,
                    (i, j, m),
                    format!("κ(b{m}, b{i} b{j}) = {c} < 0"),
                );
            }
        }

        let mut seen = vec![false; r];
        for &p in &self.involution {
            seen[p] = true;
        }
        if seen.iter().any(|s| !s) {
            fail(
                &mut report,
                Axiom::T2,
                (0, 0, 0),
                "involution is not a permutation".into(),
            );
        }
        for i in 0..r {
            if self.bar(self.bar(i)) != i {
                fail(
                    &mut report,
                    Axiom::T2,
                    (i, 0, 0),
                    format!("bar(bar(b{i})) != b{i}"),
                );
            }
        }
        if self.bar(self.identity) != self.identity {
            fail(
                &mut report,
                Axiom::T2,
                (self.identity, 0, 0),
                "bar does not fix the identity".into(),
            );
        }
        for i in 0..r {
            for j in 0..r {
                for m in 0..r {
                    let k = self.kappa(m, i, j);
                    let anti = self.kappa(self.bar(m), self.bar(j), self.bar(i));
                    if k != anti {
                        fail(
                            &mut report,
                            Axiom::T2,
                            (i, j, m),
                            format!("κ(b{m}, b{i} b{j}) = {k} but κ(bar m, bar j bar i) = {anti}"),
                        );
                    }
                    let t3 = self.kappa(i, m, self.bar(j));
                    if k != t3 {
                        fail(
                            &mut report,
                            Axiom::T3,
                            (i, j, m),
                            format!("κ(b{m}, b{i} b{j}) = {k} but κ(b{i}, b{m} bar(b{j})) = {t3}"),
                        );
                    }
                }
            }
        }

        let e = self.identity;
        for j in 0..r {
            for m in 0..r {
                let want = i64::from(m == j);
                if self.kappa(m, e, j) != want || self.kappa(m, j, e) != want {
                    fail(
                        &mut report,
                        Axiom::Identity,
                        (e, j, m),
                        format!("identity does not act trivially on b{j}"),
                    );
                }
            }
        }

        for i in 0..r {
            for j in 0..r {
                let ij = self.product(i, j).to_vec();
                for k in 0..r {
                    let left = self.mul_combination_basis(&ij, k);
                    let mut right: BTreeMap<usize, i64> = BTreeMap::new();
                    for &(m, c) in self.product(j, k) {
                        for &(p, d) in self.product(i, m) {
                            *right.entry(p).or_default() += c * d;
                        }
                    }
                    let right: Vec<(usize, i64)> =
                        right.into_iter().filter(|(_, c)| *c != 0).collect();
                    if left != right {
                        fail(
                            &mut report,
                            Axiom::Associativity,
                            (i, j, k),
                            format!("(b{i} b{j}) b{k} != b{i} (b{j} b{k})"),
                        );
                    }
                }
            }
        }
        report
    }

    /// Kronecker product; basis index `(i1, i2)` is `i1 * rank2 + i2`.
    pub fn tensor(&self, other: &TableAlgebra) -> TableAlgebra {
        let r2 = other.rank;
        let idx = |a: usize, b: usize| a * r2 + b;
        let rank = self.rank * r2;
        let mut involution = vec![0; rank];
        let mut labels = Vec::with_capacity(rank);
        for a in 0..self.rank {
            for b in 0..r2 {
                involution[idx(a, b)] = idx(self.bar(a), other.bar(b));
                labels.push(format!("{}⊗{}", self.label(a), other.label(b)));
            }
        }
        let mut consts = Vec::new();
        for (i1, j1, m1, c1) in self.constants() {
            for (i2, j2, m2, c2) in other.constants() {
                consts.push((idx(i1, i2), idx(j1, j2), idx(m1, m2), c1 * c2));
            }
        }
        TableAlgebra::from_constants(rank, idx(self.identity, other.identity), involution, consts)
            .expect("tensor indices are in range")
            .with_labels(labels)
    }

    /// `k`-fold tensor power; the zeroth power is the trivial algebra.
    pub fn tensor_power(&self, k: usize) -> TableAlgebra {
        match k {
            0 => TableAlgebra::trivial(),
            _ => (1..k).fold(self.clone(), |acc, _| acc.tensor(self)),
        }
    }

    /// Export in the plain-text table format.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "rank {} identity {}", self.rank, self.identity);
        let inv: Vec<String> = self.involution.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(s, "inv: {}", inv.join(" "));
        for (i, j, m, c) in self.constants() {
            let _ = writeln!(s, "{i} {j} {m} {c}");
        }
        s
    }
}

impl FromStr for TableAlgebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |line: usize, why: &str| {
            Error::Parse(format!("table algebra line {}: {why}", line + 1))
        };
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(n, l)| (n, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (n0, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("empty table algebra file".into()))?;
        let h: Vec<&str> = header.split_whitespace().collect();
        let (rank, identity) = match h.as_slice() {
            ["rank", k, "identity", i] => (
                k.parse::<usize>().map_err(|_| bad(n0, "bad rank"))?,
                i.parse::<usize>().map_err(|_| bad(n0, "bad identity"))?,
            ),
            _ => return Err(bad(n0, "expected `rank <k> identity <i>`")),
        };
        let (n1, inv_line) = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `inv:` line".into()))?;
        let rest = inv_line
            .strip_prefix("inv:")
            .ok_or_else(|| bad(n1, "expected `inv:`"))?;
        let involution = rest
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| bad(n1, "bad involution entry"))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut consts = Vec::new();
        for (n, line) in lines {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 4 {
                return Err(bad(n, "expected `i j m c`"));
            }
            let u = |t: &str| t.parse::<usize>().map_err(|_| bad(n, "bad index"));
            let c = f[3].parse::<i64>().map_err(|_| bad(n, "bad constant"))?;
            consts.push((u(f[0])?, u(f[1])?, u(f[2])?, c));
        }
        TableAlgebra::from_constants(rank, identity, involution, consts)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    T1,
    T2,
    T3,
    Identity,
    Associativity,
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: (usize, usize, usize),
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct TaCheckReport {
    pub t1: bool,
    pub t2: bool,
    pub t3_normalized: bool,
    pub identity: bool,
    pub associativity: bool,
    pub violations: Vec<Violation>,
}

impl TaCheckReport {
    pub fn all_pass(&self) -> bool {
        self.t1 && self.t2 && self.t3_normalized && self.identity && self.associativity
    }
}

impl fmt::Display for TaCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "t1={} t2={} t3={} identity={} associativity={}",
            self.t1, self.t2, self.t3_normalized, self.identity, self.associativity
        )?;
        for v in &self.violations {
            writeln!(f, "  {:?} at {:?}: {}", v.axiom, v.witness, v.detail)?;
        }
        Ok(())
    }
}

/// An element of a table algebra over `Z[v, v^-1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TAElement {
    coeffs: BTreeMap<usize, LaurentInt>,
}

impl TAElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, LaurentInt::one());
        Self { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, LaurentInt)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (i, c) in terms {
            e.add_term(i, &c);
        }
        e
    }

    pub fn add_term(&mut self, i: usize, c: &LaurentInt) {
        let slot = self.coeffs.entry(i).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn coeff(&self, i: usize) -> LaurentInt {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentInt)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_indices(&self, alg: &TableAlgebra) -> Result<()> {
        match self.coeffs.keys().find(|&&i| i >= alg.rank()) {
            Some(&index) => Err(Error::IndexOutOfRange {
                index,
                rank: alg.rank(),
            }),
            None => Ok(()),
        }
    }
}

/// Bilinear extension of the basis products.
pub fn ta_mul(alg: &TableAlgebra, a: &TAElement, b: &TAElement) -> Result<TAElement> {
    a.check_indices(alg)?;
    b.check_indices(alg)?;
    let mut out = TAElement::zero();
    for (i, x) in a.terms() {
        for (j, y) in b.terms() {
            let xy = x * y;
            for &(m, k) in alg.product(i, j) {
                out.add_term(m, &xy.scale_i64(k));
            }
        }
    }
    Ok(out)
}

/// `t(a) = κ(1, a)`
pub fn ta_trace(alg: &TableAlgebra, a: &TAElement) -> LaurentInt {
    a.coeff(alg.identity())
}

pub fn ta_support(a: &TAElement) -> BTreeSet<usize> {
    a.coeffs.keys().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3() -> TableAlgebra {
        TableAlgebra::cyclic_group(3).unwrap()
    }

    #[test]
    fn cyclic_group_passes_all_axioms() {
        let a = z3();
        let rep = a.check();
        assert!(rep.all_pass(), "{rep}");
        assert_eq!(a.bar(1), 2);
        // g * g = h
        assert_eq!(a.product(1, 1), &[(2, 1)]);
    }

    #[test]
    fn identity_acts_trivially() {
        let a = z3();
        for j in 0..3 {
            let p = ta_mul(&a, &TAElement::basis(0), &TAElement::basis(j)).unwrap();
            assert_eq!(p, TAElement::basis(j));
        }
    }

    #[test]
    fn trace_and_support_of_zero() {
        let a = z3();
        assert!(ta_support(&TAElement::zero()).is_empty());
        assert_eq!(ta_support(&TAElement::basis(2)), BTreeSet::from([2]));
        assert_eq!(ta_trace(&a, &TAElement::basis(0)), LaurentInt::one());
    }

    #[test]
    fn out_of_range_index_is_an_error() {
        let a = z3();
        let err = ta_mul(&a, &TAElement::basis(5), &TAElement::basis(0)).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { index: 5, rank: 3 }));
    }

    #[test]
    fn negative_constant_fails_t1() {
        let a = TableAlgebra::from_constants(1, 0, vec![0], [(0, 0, 0, -1)]).unwrap();
        let rep = a.check();
        assert!(!rep.t1);
        assert!(rep
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::T1 && v.witness == (0, 0, 0)));
    }

    #[test]
    fn tensor_with_trivial_is_isomorphic() {
        let a = z3();
        let t = a.tensor(&TableAlgebra::trivial());
        assert_eq!(t.rank(), 3);
        let c1: Vec<_> = a.constants().collect();
        let c2: Vec<_> = t.constants().collect();
        assert_eq!(c1, c2);
    }

    #[test]
    fn text_format_round_trips() {
        let a = z3();
        let text = a.to_text();
        assert!(text.starts_with("rank 3 identity 0\ninv: 0 2 1\n0 0 0 1\n"));
        let b: TableAlgebra = text.parse().unwrap();
        assert_eq!(b.to_text(), text);
        assert!(b.check().all_pass());
    }

    #[test]
    fn malformed_file_is_rejected() {
        assert!("rank 2\ninv: 0 1\n".parse::<TableAlgebra>().is_err());
        assert!("rank 2 identity 0\ninv: 0 1\n0 0 0\n"
            .parse::<TableAlgebra>()
            .is_err());
        assert!("rank 2 identity 0\ninv: 0 1\n0 0 7 1\n"
            .parse::<TableAlgebra>()
            .is_err());
    }
}
