//! Finite Coxeter groups of types A, B, H and I, enumerated exhaustively.
//!
//! Elements are indices into a list sorted by length and then by normal form
//! (the lexicographically smallest reduced word). Index 0 is the identity.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    H(usize),
    /// Dihedral type `I_2(m)`; the payload is `m`.
    I(usize),
}

impl CoxeterType {
    pub fn rank(&self) -> usize {
        match *self {
            Self::A(n) | Self::B(n) | Self::H(n) => n,
            Self::I(_) => 2,
        }
    }

    /// Bond strength between generators `s` and `t` of the linear diagram.
    /// The special bond (if any) joins the first two generators.
    pub fn bond(&self, s: usize, t: usize) -> usize {
        if s == t {
            return 1;
        }
        if s.abs_diff(t) > 1 {
            return 2;
        }
        let first = s.min(t) == 0;
        match *self {
            Self::A(_) => 3,
            Self::B(_) if first => 4,
            Self::H(_) if first => 5,
            Self::I(m) => m,
            _ => 3,
        }
    }

    /// Largest bond label.
    pub fn max_bond(&self) -> usize {
        let n = self.rank();
        (0..n)
            .flat_map(|s| (0..n).map(move |t| (s, t)))
            .filter(|(s, t)| s != t)
            .map(|(s, t)| self.bond(s, t))
            .max()
            .unwrap_or(1)
    }

    /// Group order by the classical formulas.
    pub fn order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match *self {
            Self::A(n) => fact(n + 1),
            Self::B(n) => (1u128 << n) * fact(n),
            Self::H(2) => 10,
            Self::H(3) => 120,
            Self::H(4) => 14400,
            Self::H(_) => 0,
            Self::I(m) => 2 * m as u128,
        }
    }

    fn validate(&self, allow_large: bool) -> Result<()> {
        let ok = match *self {
            Self::A(n) => (1..=4).contains(&n) || (allow_large && (1..=7).contains(&n)),
            Self::B(n) => (2..=3).contains(&n) || (allow_large && (2..=5).contains(&n)),
            Self::H(n) => n == 3 || (allow_large && n == 4),
            Self::I(m) => (2..=12).contains(&m),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedType(self.to_string()))
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::A(n) => write!(f, "A{n}"),
            Self::B(n) => write!(f, "B{n}"),
            Self::H(n) => write!(f, "H{n}"),
            Self::I(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    /// Accepts `A3`, `B2`, `H3`, `I2(5)` and `I5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad Coxeter type {s:?}"));
        let (head, rest) = s.split_at(s.chars().next().ok_or_else(bad)?.len_utf8());
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match head.to_ascii_uppercase().as_str() {
            "A" => Ok(Self::A(num(rest)?)),
            "B" => Ok(Self::B(num(rest)?)),
            "H" => Ok(Self::H(num(rest)?)),
            "I" => {
                let inner = rest
                    .strip_prefix("2(")
                    .and_then(|t| t.strip_suffix(')'))
                    .unwrap_or(rest);
                Ok(Self::I(num(inner)?))
            }
            _ => Err(bad()),
        }
    }
}

/// Element `a + bφ` of `Z[φ]`, `φ² = φ + 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
struct ZPhi(i64, i64);

impl ZPhi {
    fn add(self, o: Self) -> Self {
        ZPhi(self.0 + o.0, self.1 + o.1)
    }
    fn mul(self, o: Self) -> Self {
        let bd = self.1 * o.1;
        ZPhi(self.0 * o.0 + bd, self.0 * o.1 + self.1 * o.0 + bd)
    }
}

/// A faithful representation, flattened to integer vectors for hashing.
enum Realization {
    /// Reflection matrices over `Z[φ]`, row-major `dim × dim`.
    Matrix(usize),
    /// Permutations of the vertices of a regular polygon.
    Perm,
}

impl Realization {
    fn compose(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        match *self {
            Realization::Matrix(d) => {
                let at = |m: &[i64], i: usize, j: usize| {
                    ZPhi(m[2 * (i * d + j)], m[2 * (i * d + j) + 1])
                };
                let mut out = Vec::with_capacity(2 * d * d);
                for i in 0..d {
                    for j in 0..d {
                        let mut acc = ZPhi::default();
                        for k in 0..d {
                            acc = acc.add(at(a, i, k).mul(at(b, k, j)));
                        }
                        out.extend([acc.0, acc.1]);
                    }
                }
                out
            }
            // (a ∘ b)(i) = a(b(i))
            Realization::Perm => b.iter().map(|&i| a[i as usize]).collect(),
        }
    }
}

/// Generator images and the matching composition rule.
fn realize(ty: CoxeterType) -> (Realization, Vec<Vec<i64>>) {
    if let CoxeterType::I(m) = ty {
        if m >= 3 {
            let m = m as i64;
            let s: Vec<i64> = (0..m).map(|i| (m - i) % m).collect();
            let t: Vec<i64> = (0..m).map(|i| (1 - i).rem_euclid(m)).collect();
            return (Realization::Perm, vec![s, t]);
        }
    }
    // Generalized Cartan entries with a_ij a_ji = 4 cos²(π/m).
    let n = ty.rank();
    let cartan = |i: usize, j: usize| -> ZPhi {
        if i == j {
            return ZPhi(2, 0);
        }
        match ty.bond(i, j) {
            2 => ZPhi(0, 0),
            3 => ZPhi(-1, 0),
            4 => {
                if i < j {
                    ZPhi(-1, 0)
                } else {
                    ZPhi(-2, 0)
                }
            }
            5 => ZPhi(0, -1),
            6 => {
                if i < j {
                    ZPhi(-1, 0)
                } else {
                    ZPhi(-3, 0)
                }
            }
            m => unreachable!("bond {m} outside the matrix model"),
        }
    };
    // s_i(e_j) = e_j - a_ij e_i, stored as columns.
    let gens = (0..n)
        .map(|i| {
            let mut m = vec![0i64; 2 * n * n];
            for row in 0..n {
                for col in 0..n {
                    let mut x = if row == col { ZPhi(1, 0) } else { ZPhi(0, 0) };
                    if row == i {
                        let c = cartan(i, col);
                        x = x.add(ZPhi(-c.0, -c.1));
                    }
                    m[2 * (row * n + col)] = x.0;
                    m[2 * (row * n + col) + 1] = x.1;
                }
            }
            m
        })
        .collect();
    (Realization::Matrix(n), gens)
}

#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    ty: CoxeterType,
    words: Vec<Vec<usize>>,
    lengths: Vec<usize>,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    complex: Vec<bool>,
}

impl CoxeterGroup {
    /// Enumerate a supported group (`A_1..A_4`, `B_2..B_3`, `H_3`, `I_2(2..=12)`).
    pub fn new(ty: CoxeterType) -> Result<Self> {
        Self::build(ty, false)
    }

    /// Like [`CoxeterGroup::new`], additionally admitting `H_4` and slightly
    /// larger ranks of A and B.
    pub fn build(ty: CoxeterType, allow_large: bool) -> Result<Self> {
        ty.validate(allow_large)?;
        let n = ty.rank();
        let (real, gens) = realize(ty);
        let ident = real.compose(&gens[0], &gens[0]);

        let mut states = vec![ident.clone()];
        let mut index: HashMap<Vec<i64>, usize> = HashMap::from([(ident, 0)]);
        let mut bfs_len = vec![0usize];
        let mut head = 0;
        while head < states.len() {
            for g in &gens {
                let next = real.compose(&states[head], g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), states.len());
                    states.push(next);
                    bfs_len.push(bfs_len[head] + 1);
                }
            }
            head += 1;
        }
        let size = states.len();
        if size as u128 != ty.order() {
            return Err(Error::Verification(format!(
                "{ty}: enumerated {size} elements, expected {}",
                ty.order()
            )));
        }
        let left_raw: Vec<Vec<usize>> = states
            .iter()
            .map(|st| gens.iter().map(|g| index[&real.compose(g, st)]).collect())
            .collect();
        let right_raw: Vec<Vec<usize>> = states
            .iter()
            .map(|st| gens.iter().map(|g| index[&real.compose(st, g)]).collect())
            .collect();

        // BFS order is length order, so each word extends a shorter one.
        let mut words_raw: Vec<Vec<usize>> = vec![Vec::new(); size];
        for w in 1..size {
            let s = (0..n)
                .find(|&s| bfs_len[left_raw[w][s]] < bfs_len[w])
                .expect("nonidentity has a descent");
            let mut word = vec![s];
            word.extend_from_slice(&words_raw[left_raw[w][s]]);
            words_raw[w] = word;
        }

        let mut perm: Vec<usize> = (0..size).collect();
        perm.sort_by(|&a, &b| (bfs_len[a], &words_raw[a]).cmp(&(bfs_len[b], &words_raw[b])));
        let mut new_of = vec![0; size];
        for (new, &old) in perm.iter().enumerate() {
            new_of[old] = new;
        }
        let remap = |table: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            perm.iter()
                .map(|&old| table[old].iter().map(|&x| new_of[x]).collect())
                .collect()
        };
        let left = remap(&left_raw);
        let right = remap(&right_raw);
        let words: Vec<Vec<usize>> = perm.iter().map(|&old| words_raw[old].clone()).collect();
        let lengths: Vec<usize> = perm.iter().map(|&old| bfs_len[old]).collect();

        let mut g = Self {
            ty,
            words,
            lengths,
            left,
            right,
            inverse: Vec::new(),
            complex: Vec::new(),
        };
        g.inverse = (0..size)
            .map(|w| g.from_word(g.words[w].iter().rev().copied()))
            .collect();
        let mut complex = vec![false; size];
        for w in 0..size {
            let d = g.left_descents(w);
            let pair = d
                .iter()
                .any(|&s| d.iter().any(|&t| s < t && ty.bond(s, t) >= 3));
            complex[w] = pair || d.iter().any(|&s| complex[g.left[w][s]]);
        }
        g.complex = complex;
        Ok(g)
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn bond(&self, s: usize, t: usize) -> usize {
        self.ty.bond(s, t)
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.size() - 1
    }

    pub fn generator(&self, s: usize) -> usize {
        self.right[0][s]
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    /// Normal form: the lexicographically least reduced word.
    pub fn word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }

    /// `s · w`
    pub fn left_mul(&self, s: usize, w: usize) -> usize {
        self.left[w][s]
    }

    /// `w · s`
    pub fn right_mul(&self, w: usize, s: usize) -> usize {
        self.right[w][s]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.words[y].iter().fold(x, |acc, &s| self.right[acc][s])
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    /// Element represented by an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: impl IntoIterator<Item = usize>) -> usize {
        word.into_iter().fold(0, |acc, s| self.right[acc][s])
    }

    pub fn left_descents(&self, w: usize) -> Vec<usize> {
        (0..self.rank())
            .filter(|&s| self.lengths[self.left[w][s]] < self.lengths[w])
            .collect()
    }

    pub fn right_descents(&self, w: usize) -> Vec<usize> {
        (0..self.rank())
            .filter(|&s| self.lengths[self.right[w][s]] < self.lengths[w])
            .collect()
    }

    pub fn is_left_descent(&self, s: usize, w: usize) -> bool {
        self.lengths[self.left[w][s]] < self.lengths[w]
    }

    pub fn is_right_descent(&self, w: usize, s: usize) -> bool {
        self.lengths[self.right[w][s]] < self.lengths[w]
    }

    /// Generators appearing in a reduced word of `w`.
    pub fn content(&self, w: usize) -> Vec<usize> {
        let mut c = self.words[w].clone();
        c.sort_unstable();
        c.dedup();
        c
    }

    /// Has a reduced factorization through the longest element of some
    /// dihedral parabolic subgroup with bond at least 3.
    pub fn is_complex(&self, w: usize) -> bool {
        self.complex[w]
    }

    /// Fully commutative elements, in index order.
    pub fn wc(&self) -> Vec<usize> {
        (0..self.size()).filter(|&w| !self.complex[w]).collect()
    }

    /// Elements of the parabolic subgroup generated by `s` and `t`.
    pub fn dihedral(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&w| self.words[w].iter().all(|&x| x == s || x == t))
            .collect()
    }

    pub fn format_word(&self, w: usize) -> String {
        if self.words[w].is_empty() {
            "e".into()
        } else {
            self.words[w]
                .iter()
                .map(|s| format!("s{}", s + 1))
                .collect()
        }
    }

    /// Parse `e`, `s1s2`, `s1 s2` or `1 2` (generators are 1-based).
    pub fn parse_word(&self, text: &str) -> Result<usize> {
        let text = text.trim();
        if text == "e" || text.is_empty() {
            return Ok(0);
        }
        let mut word = Vec::new();
        for tok in text
            .split(|c: char| c == 's' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let k: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad word {text:?}")))?;
            if k == 0 || k > self.rank() {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    rank: self.rank(),
                });
            }
            word.push(k - 1);
        }
        Ok(self.from_word(word))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for ty in [
            CoxeterType::A(1),
            CoxeterType::A(3),
            CoxeterType::B(3),
            CoxeterType::H(3),
            CoxeterType::I(2),
            CoxeterType::I(7),
            CoxeterType::I(12),
        ] {
            assert_eq!(CoxeterGroup::new(ty).unwrap().size() as u128, ty.order());
        }
        assert!(CoxeterGroup::new(CoxeterType::H(4)).is_err());
        assert!(CoxeterGroup::new(CoxeterType::A(9)).is_err());
    }

    #[test]
    fn lengths_change_by_one() {
        let g = CoxeterGroup::new(CoxeterType::H(3)).unwrap();
        for w in 0..g.size() {
            for s in 0..3 {
                assert_eq!(g.length(g.left_mul(s, w)).abs_diff(g.length(w)), 1);
                assert_eq!(g.length(g.right_mul(w, s)).abs_diff(g.length(w)), 1);
            }
            assert_eq!(g.word(w).len(), g.length(w));
            assert_eq!(g.from_word(g.word(w).iter().copied()), w);
        }
        assert_eq!(g.length(g.longest()), 15);
    }

    #[test]
    fn a2_fully_commutative() {
        let g = CoxeterGroup::new(CoxeterType::A(2)).unwrap();
        let names: Vec<String> = g.wc().into_iter().map(|w| g.format_word(w)).collect();
        assert_eq!(names, ["e", "s1", "s2", "s1s2", "s2s1"]);
        assert!(g.is_complex(g.longest()));
        assert_eq!(g.content(g.parse_word("s1s2").unwrap()), vec![0, 1]);
    }

    #[test]
    fn dihedral_wc_misses_only_longest() {
        for m in 2..=12 {
            let g = CoxeterGroup::new(CoxeterType::I(m)).unwrap();
            let wc = g.wc();
            if m >= 3 {
                assert_eq!(wc.len(), 2 * m - 1);
                assert!(!wc.contains(&g.longest()));
            } else {
                assert_eq!(wc.len(), 4);
            }
        }
    }

    #[test]
    fn fully_commutative_counts() {
        // A_n: Catalan(n+1); B_n: (n+2)C(n+1) - 1; H_3: 44.
        let count = |ty| CoxeterGroup::new(ty).unwrap().wc().len();
        assert_eq!(count(CoxeterType::A(3)), 14);
        assert_eq!(count(CoxeterType::A(4)), 42);
        assert_eq!(count(CoxeterType::B(2)), 7);
        assert_eq!(count(CoxeterType::B(3)), 24);
        assert_eq!(count(CoxeterType::H(3)), 44);
    }

    #[test]
    fn parse_types() {
        assert_eq!("I2(5)".parse::<CoxeterType>().unwrap(), CoxeterType::I(5));
        assert_eq!("b3".parse::<CoxeterType>().unwrap(), CoxeterType::B(3));
        assert!("Q3".parse::<CoxeterType>().is_err());
    }
}
