//! Laurent polynomials in `v` with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Degree of a Laurent polynomial. The zero polynomial has degree
/// `MinusInfinity`, which compares below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(i32),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-inf"),
            Degree::Finite(k) => write!(f, "{k}"),
        }
    }
}

/// An element of `Z[v, v^-1]`.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// structural equality is ring equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentInt {
    terms: Vec<(i32, BigInt)>,
}

impl LaurentInt {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^k`
    pub fn monomial(c: impl Into<BigInt>, k: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(k, c)],
            }
        }
    }

    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    pub fn v_pow(k: i32) -> Self {
        Self::monomial(1, k)
    }

    /// The loop value `[2] = v + v^-1`.
    pub fn delta() -> Self {
        Self::from_pairs([(1, 1), (-1, 1)])
    }

    /// The Hecke parameter `q = v^2`.
    pub fn q() -> Self {
        Self::v_pow(2)
    }

    /// Build from `(exponent, coefficient)` pairs; duplicates are summed.
    pub fn from_pairs<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut terms: Vec<(i32, BigInt)> = pairs.into_iter().map(|(k, c)| (k, c.into())).collect();
        terms.sort_by_key(|(k, _)| *k);
        let mut out: Vec<(i32, BigInt)> = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc += c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> &[(i32, BigInt)] {
        &self.terms
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        match self.terms.binary_search_by_key(&k, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Highest power of `v` with nonzero coefficient.
    pub fn degree(&self) -> Degree {
        self.terms
            .last()
            .map_or(Degree::MinusInfinity, |(k, _)| Degree::Finite(*k))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.first().map(|(k, _)| *k)
    }

    /// Membership in `A^- = Z[v^-1]`.
    pub fn in_aminus(&self) -> bool {
        self.terms.iter().all(|(k, _)| *k <= 0)
    }

    /// Membership in `v^-1 Z[v^-1]`.
    pub fn in_vinv_aminus(&self) -> bool {
        self.terms.iter().all(|(k, _)| *k < 0)
    }

    /// `self ≡ c (mod v^-1 A^-)`.
    pub fn congruent_mod_vinv(&self, c: i64) -> bool {
        (self - &LaurentInt::constant(c)).in_vinv_aminus()
    }

    /// The ring involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<(i32, BigInt)> =
            self.terms.iter().map(|(k, c)| (-k, c.clone())).collect();
        terms.reverse();
        Self { terms }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Part with strictly negative exponents.
    pub fn negative_part(&self) -> Self {
        Self {
            terms: self.terms.iter().filter(|(k, _)| *k < 0).cloned().collect(),
        }
    }

    /// The integer value if this is a constant polynomial.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Evaluate at `v = x` modulo the prime `p`.
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let xinv = mod_pow(x, p - 2, p);
        let mut acc: u128 = 0;
        for (k, c) in &self.terms {
            let base = if *k >= 0 {
                mod_pow(x, *k as u64, p)
            } else {
                mod_pow(xinv, (-k) as u64, p)
            };
            let pb = BigInt::from(p);
            let mut cm = c % &pb;
            if cm.is_negative() {
                cm += &pb;
            }
            let cm = cm.to_u64().expect("reduced residue fits u64") as u128;
            acc = (acc + cm * base as u128 % p as u128) % p as u128;
        }
        acc as u64
    }

    fn add_terms(a: &[(i32, BigInt)], b: &[(i32, BigInt)], negate_b: bool) -> Vec<(i32, BigInt)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (k, c) = &b[j];
                    out.push((*k, if negate_b { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}

fn mod_pow(b: u64, mut e: u64, p: u64) -> u64 {
    let mut r: u128 = 1;
    let mut bb = (b % p) as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * bb % p as u128;
        }
        bb = bb * bb % p as u128;
        e >>= 1;
    }
    r as u64
}

impl From<i64> for LaurentInt {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentInt> for &LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &'a LaurentInt) -> LaurentInt {
        LaurentInt {
            terms: LaurentInt::add_terms(&self.terms, &rhs.terms, false),
        }
    }
}

impl Add for LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: LaurentInt) -> LaurentInt {
        &self + &rhs
    }
}

impl<'a> Sub<&'a LaurentInt> for &LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &'a LaurentInt) -> LaurentInt {
        LaurentInt {
            terms: LaurentInt::add_terms(&self.terms, &rhs.terms, true),
        }
    }
}

impl Sub for LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: LaurentInt) -> LaurentInt {
        &self - &rhs
    }
}

impl AddAssign<&LaurentInt> for LaurentInt {
    fn add_assign(&mut self, rhs: &LaurentInt) {
        if rhs.is_zero() {
            return;
        }
        self.terms = LaurentInt::add_terms(&self.terms, &rhs.terms, false);
    }
}

impl AddAssign for LaurentInt {
    fn add_assign(&mut self, rhs: LaurentInt) {
        *self += &rhs;
    }
}

impl SubAssign<&LaurentInt> for LaurentInt {
    fn sub_assign(&mut self, rhs: &LaurentInt) {
        if rhs.is_zero() {
            return;
        }
        self.terms = LaurentInt::add_terms(&self.terms, &rhs.terms, true);
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        LaurentInt {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        -&self
    }
}

impl<'a> Mul<&'a LaurentInt> for &LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &'a LaurentInt) -> LaurentInt {
        if self.is_zero() || rhs.is_zero() {
            return LaurentInt::zero();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return rhs.clone();
        }
        let lo = self.terms[0].0 + rhs.terms[0].0;
        let hi = self.terms.last().unwrap().0 + rhs.terms.last().unwrap().0;
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                dense[(a + b - lo) as usize] += x * y;
            }
        }
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i32, c))
            .collect();
        LaurentInt { terms }
    }
}

impl Mul for LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: LaurentInt) -> LaurentInt {
        &self * &rhs
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentInt({self})")
    }
}

/// Terms in descending exponent order, e.g. `2v^3 - 1 + v^-2`.
impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            if *k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if *k == 1 {
                f.write_str("v")?;
            } else {
                write!(f, "v^{k}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("laurent polynomial `{s}`: {why}"));
        let words: Vec<&str> = s.split_whitespace().collect();
        if words.windows(2).any(|w| {
            w[0].ends_with(|c: char| c.is_ascii_digit())
                && w[1].starts_with(|c: char| c.is_ascii_digit())
        }) {
            return Err(bad("digits separated by whitespace"));
        }
        let chars: Vec<char> = words.concat().chars().collect();
        if chars.is_empty() {
            return Err(bad("empty input"));
        }
        let mut pairs: Vec<(i32, BigInt)> = Vec::new();
        let mut i = 0;
        let mut first = true;
        while i < chars.len() {
            let mut sign = 1i32;
            match chars[i] {
                '+' => i += 1,
                '-' => {
                    sign = -1;
                    i += 1;
                }
                _ if first => {}
                _ => return Err(bad("expected `+` or `-` between terms")),
            }
            first = false;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let mut exp = 0i32;
            let has_v = i < chars.len() && chars[i] == 'v';
            if has_v {
                i += 1;
                exp = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let es = i;
                    if i < chars.len() && chars[i] == '-' {
                        i += 1;
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let e: String = chars[es..i].iter().collect();
                    exp = e.parse().map_err(|_| bad("malformed exponent"))?;
                }
            }
            if digits.is_empty() && !has_v {
                return Err(bad("empty term"));
            }
            let mut c: BigInt = if digits.is_empty() {
                BigInt::one()
            } else {
                digits.parse().map_err(|_| bad("malformed coefficient"))?
            };
            if sign < 0 {
                c = -c;
            }
            pairs.push((exp, c));
        }
        Ok(LaurentInt::from_pairs(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentInt {
        s.parse().unwrap()
    }

    #[test]
    fn delta_squared() {
        let d = LaurentInt::delta();
        assert_eq!(&d * &d, p("v^2 + 2 + v^-2"));
        assert_eq!(&d * &LaurentInt::one(), p("v + v^-1"));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let v = LaurentInt::v();
        let z = &v + &(-&v);
        assert!(z.is_zero());
        assert!(z.terms().is_empty());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentInt::v_pow(2).bar(), LaurentInt::v_pow(-2));
        assert_eq!(LaurentInt::delta().bar(), LaurentInt::delta());
        let x = p("3v^3 - v^-1");
        assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn degree_and_membership() {
        assert_eq!(LaurentInt::delta().degree(), Degree::Finite(1));
        assert_eq!(LaurentInt::zero().degree(), Degree::MinusInfinity);
        assert!(Degree::MinusInfinity < Degree::Finite(-100));
        assert!(p("1 + v^-2").in_aminus());
        assert!(!p("v + 1").in_aminus());
        assert_eq!(p("v^-1 + v^-3").constant_term(), BigInt::zero());
    }

    #[test]
    fn display_format() {
        assert_eq!(p("2v^3 - 1 + v^-2").to_string(), "2v^3 - 1 + v^-2");
        assert_eq!(p("-v").to_string(), "-v");
        assert_eq!(p("v^-1 + v^-3").to_string(), "v^-1 + v^-3");
        assert_eq!(p("1 + v^-2 + 2 v^-2").to_string(), "1 + 3v^-2");
        assert_eq!(p("-3v^-1").to_string(), "-3v^-1");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LaurentInt>().is_err());
        assert!("v^".parse::<LaurentInt>().is_err());
        assert!("2 3".parse::<LaurentInt>().is_err());
        assert!("x".parse::<LaurentInt>().is_err());
    }

    #[test]
    fn congruences() {
        assert!(p("1 + v^-2").congruent_mod_vinv(1));
        assert!(p("v^-1 + v^-3").congruent_mod_vinv(0));
        assert!(!p("v + 1").congruent_mod_vinv(1));
        assert!(!p("2 + v^-1").congruent_mod_vinv(1));
    }

    #[test]
    fn evaluation_mod_prime() {
        let p61 = (1u64 << 61) - 1;
        // (v + v^-1) at v = 2 is 5/2
        let val = LaurentInt::delta().eval_mod(2, p61);
        assert_eq!(val * 2 % p61, 5);
        assert_eq!(p("-1").eval_mod(7, 11), 10);
    }
}
