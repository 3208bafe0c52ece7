//! Exact real numbers of the form `q0 + q1 √m1 + q2 √m2 + ...` with
//! integer coefficients and squarefree radicands.
//!
//! Signs are decided exactly by descending a tower of quadratic fields:
//! with `p` the largest prime among the radicands, write the value as
//! `a + b √p` where `a` and `b` avoid `p`; when `a` and `b` have opposite
//! signs the answer is `sign(a) * sign(a² - p b²)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Splits `k = s² · r` with `r` squarefree; returns `(s, r)`.
pub fn square_free_split(k: u64) -> (u64, u64) {
    let (mut s, mut r, mut rest, mut d) = (1, 1, k, 2);
    while d * d <= rest {
        let mut e = 0;
        while rest % d == 0 {
            rest /= d;
            e += 1;
        }
        s *= d.pow(e / 2);
        if e % 2 == 1 {
            r *= d;
        }
        d += 1;
    }
    (s, r * rest)
}

fn largest_prime_factor(mut k: u64) -> u64 {
    let (mut d, mut best) = (2, 1);
    while d * d <= k {
        while k.is_multiple_of(d) {
            k /= d;
            best = d;
        }
        d += 1;
    }
    if k > 1 {
        k
    } else {
        best
    }
}

/// An eigenvalue: an integer or a nonzero multiple of one square root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExactEigen {
    #[serde(rename = "int")]
    Int(i64),
    /// `scale · √radicand`, radicand squarefree and greater than 1.
    #[serde(rename = "surd")]
    Surd { scale: i64, radicand: u64 },
}

impl ExactEigen {
    /// `scale · √k` in canonical form.
    pub fn surd(scale: i64, k: u64) -> ExactEigen {
        if k == 0 || scale == 0 {
            return ExactEigen::Int(0);
        }
        let (s, r) = square_free_split(k);
        let scale = scale * s as i64;
        if r == 1 {
            ExactEigen::Int(scale)
        } else {
            ExactEigen::Surd { scale, radicand: r }
        }
    }

    pub fn sqrt(k: u64) -> ExactEigen {
        ExactEigen::surd(1, k)
    }

    pub fn as_int(self) -> Option<i64> {
        match self {
            ExactEigen::Int(q) => Some(q),
            ExactEigen::Surd { .. } => None,
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            ExactEigen::Int(q) => q as f64,
            ExactEigen::Surd { scale, radicand } => scale as f64 * (radicand as f64).sqrt(),
        }
    }

    pub fn to_sum(self) -> SurdSum {
        SurdSum::from(self)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> ExactEigen {
        match self {
            ExactEigen::Int(q) => ExactEigen::Int(-q),
            ExactEigen::Surd { scale, radicand } => ExactEigen::Surd { scale: -scale, radicand },
        }
    }
}

impl PartialOrd for ExactEigen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactEigen {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_sum().cmp(&other.to_sum())
    }
}

impl fmt::Display for ExactEigen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ExactEigen::Int(q) => write!(f, "{q}"),
            ExactEigen::Surd { scale: 1, radicand } => write!(f, "√{radicand}"),
            ExactEigen::Surd { scale: -1, radicand } => write!(f, "-√{radicand}"),
            ExactEigen::Surd { scale, radicand } => write!(f, "{scale}√{radicand}"),
        }
    }
}

/// Finite sum of integer multiples of square roots.
///
/// Key 1 holds the integer part; every key is squarefree and no
/// coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SurdSum {
    terms: BTreeMap<u64, i64>,
}

impl SurdSum {
    pub fn zero() -> Self {
        SurdSum::default()
    }

    pub fn int(q: i64) -> Self {
        SurdSum::from(ExactEigen::Int(q))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Integer part.
    pub fn integer_part(&self) -> i64 {
        self.terms.get(&1).copied().unwrap_or(0)
    }

    /// `(scale, radicand)` pairs of the irrational part, radicands increasing.
    pub fn surds(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.terms.iter().filter(|(&r, _)| r != 1).map(|(&r, &c)| (c, r))
    }

    fn add_term(&mut self, radicand: u64, coeff: i64) {
        let e = self.terms.entry(radicand).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&radicand);
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(&r, &c)| c as f64 * (r as f64).sqrt()).sum()
    }

    pub fn signum(&self) -> i32 {
        let big: BTreeMap<u64, BigInt> =
            self.terms.iter().map(|(&r, &c)| (r, BigInt::from(c))).collect();
        big_sign(&big)
    }
}

fn big_sign(terms: &BTreeMap<u64, BigInt>) -> i32 {
    let terms: BTreeMap<u64, BigInt> =
        terms.iter().filter(|(_, c)| !c.is_zero()).map(|(&r, c)| (r, c.clone())).collect();
    match terms.len() {
        0 => return 0,
        1 => {
            let c = terms.values().next().unwrap();
            return if c.is_positive() { 1 } else { -1 };
        }
        _ => {}
    }
    let p = terms.keys().map(|&r| largest_prime_factor(r)).max().unwrap();
    let mut a = BTreeMap::new();
    let mut b = BTreeMap::new();
    for (&r, c) in &terms {
        if r % p == 0 {
            b.insert(r / p, c.clone());
        } else {
            a.insert(r, c.clone());
        }
    }
    let sa = big_sign(&a);
    let sb = big_sign(&b);
    if sb == 0 || sa == sb {
        return sa;
    }
    if sa == 0 {
        return sb;
    }
    let mut norm = big_square(&a);
    for (r, c) in big_square(&b) {
        *norm.entry(r).or_insert_with(BigInt::zero) -= c * BigInt::from(p);
    }
    sa * big_sign(&norm)
}

fn big_square(x: &BTreeMap<u64, BigInt>) -> BTreeMap<u64, BigInt> {
    let mut out: BTreeMap<u64, BigInt> = BTreeMap::new();
    for (&r1, c1) in x {
        for (&r2, c2) in x {
            let g = r1.gcd(&r2);
            let r = (r1 / g) * (r2 / g);
            *out.entry(r).or_insert_with(BigInt::zero) += c1 * c2 * BigInt::from(g);
        }
    }
    out
}

impl From<ExactEigen> for SurdSum {
    fn from(e: ExactEigen) -> Self {
        let mut s = SurdSum::zero();
        match e {
            ExactEigen::Int(q) => s.add_term(1, q),
            ExactEigen::Surd { scale, radicand } => s.add_term(radicand, scale),
        }
        s
    }
}

impl Add for &SurdSum {
    type Output = SurdSum;
    fn add(self, rhs: &SurdSum) -> SurdSum {
        let mut out = self.clone();
        for (&r, &c) in &rhs.terms {
            out.add_term(r, c);
        }
        out
    }
}

impl Add for SurdSum {
    type Output = SurdSum;
    fn add(self, rhs: SurdSum) -> SurdSum {
        &self + &rhs
    }
}

impl Add<ExactEigen> for &SurdSum {
    type Output = SurdSum;
    fn add(self, rhs: ExactEigen) -> SurdSum {
        self + &SurdSum::from(rhs)
    }
}

impl Neg for &SurdSum {
    type Output = SurdSum;
    fn neg(self) -> SurdSum {
        SurdSum { terms: self.terms.iter().map(|(&r, &c)| (r, -c)).collect() }
    }
}

impl Sub for &SurdSum {
    type Output = SurdSum;
    fn sub(self, rhs: &SurdSum) -> SurdSum {
        self + &(-rhs)
    }
}

impl Mul for &SurdSum {
    type Output = SurdSum;
    fn mul(self, rhs: &SurdSum) -> SurdSum {
        let mut out = SurdSum::zero();
        for (&r1, &c1) in &self.terms {
            for (&r2, &c2) in &rhs.terms {
                let g = r1.gcd(&r2);
                out.add_term((r1 / g) * (r2 / g), c1 * c2 * g as i64);
            }
        }
        out
    }
}

impl PartialOrd for SurdSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SurdSum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&r, &c) in &self.terms {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (r, mag) {
                (1, m) => write!(f, "{m}")?,
                (r, 1) => write!(f, "√{r}")?,
                (r, m) => write!(f, "{m}√{r}")?,
            }
        }
        Ok(())
    }
}

/// Serialized form of a [`SurdSum`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurdSumRepr {
    pub int: i64,
    pub surds: Vec<SurdTerm>,
    pub text: String,
    pub approx: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurdTerm {
    pub scale: i64,
    pub radicand: u64,
}

impl Serialize for SurdSum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SurdSumRepr {
            int: self.integer_part(),
            surds: self.surds().map(|(scale, radicand)| SurdTerm { scale, radicand }).collect(),
            text: self.to_string(),
            approx: round12(self.to_f64()),
        }
        .serialize(s)
    }
}

/// Rounds to 12 significant decimals for display.
pub fn round12(x: f64) -> f64 {
    format!("{x:.12}").parse().unwrap_or(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(int: i64, surds: &[(i64, u64)]) -> SurdSum {
        let mut out = SurdSum::int(int);
        for &(c, r) in surds {
            out = &out + ExactEigen::surd(c, r);
        }
        out
    }

    #[test]
    fn canonical_surds() {
        assert_eq!(ExactEigen::sqrt(4), ExactEigen::Int(2));
        assert_eq!(ExactEigen::sqrt(12), ExactEigen::Surd { scale: 2, radicand: 3 });
        assert_eq!(ExactEigen::sqrt(0), ExactEigen::Int(0));
        assert_eq!(ExactEigen::surd(-1, 3).to_string(), "-√3");
        assert_eq!(square_free_split(72), (6, 2));
    }

    #[test]
    fn ordering_mixed() {
        assert!(ExactEigen::sqrt(3) > ExactEigen::Int(1));
        assert!(ExactEigen::sqrt(3) < ExactEigen::Int(2));
        assert!(ExactEigen::surd(-1, 3) < ExactEigen::Int(-1));
        assert!(ExactEigen::sqrt(8) > ExactEigen::sqrt(7));
    }

    #[test]
    fn tower_signs() {
        // √2 + √3 - √10 ≈ -0.016
        assert_eq!(s(0, &[(1, 2), (1, 3), (-1, 10)]).signum(), -1);
        // 5 - √6 - √7 ≈ -0.095
        assert_eq!(s(5, &[(-1, 6), (-1, 7)]).signum(), -1);
        assert_eq!(s(6, &[(-1, 6), (-1, 7)]).signum(), 1);
        assert_eq!(s(0, &[(1, 2), (-1, 2)]).signum(), 0);
        assert_eq!(s(-3, &[(1, 2), (1, 3), (1, 5)]).signum(), 1);
    }

    #[test]
    fn display_and_json() {
        let v = s(-2, &[(1, 3), (-2, 5)]);
        assert_eq!(v.to_string(), "-2 + √3 - 2√5");
        let e = serde_json::to_string(&ExactEigen::sqrt(3)).unwrap();
        assert_eq!(e, r#"{"surd":{"scale":1,"radicand":3}}"#);
        assert_eq!(serde_json::to_string(&ExactEigen::Int(-2)).unwrap(), r#"{"int":-2}"#);
    }

    #[test]
    fn products() {
        let a = s(1, &[(1, 2)]);
        assert_eq!(&a * &a, s(3, &[(2, 2)]));
        let b = s(0, &[(1, 6)]);
        assert_eq!(&s(0, &[(1, 3)]) * &b, s(0, &[(3, 2)]));
    }
}
