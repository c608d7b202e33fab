//! Exact integer Laurent polynomials in `q` and ordinary polynomials in `t`.
//!
//! [`LaurentPoly`] carries every Fock-space coefficient; [`TPoly`] carries
//! Kostka and Hall–Littlewood data, and is moved into `q` by the substitution
//! `t = -q^2`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Integer-coefficient Laurent polynomial in `q`, stored densely from its
/// lowest exponent. Leading and trailing zero coefficients are never stored,
/// so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        Self::from_dense(e, vec![c])
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(1, e)
    }

    /// Builds `sum_k coeffs[k] q^(low + k)`.
    pub fn from_dense(low: i32, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for (e, c) in terms {
            acc += &LaurentPoly::monomial(c, e);
        }
        acc
    }

    fn normalize(&mut self) {
        let Some(first) = self.coeffs.iter().position(|&c| c != 0) else {
            self.coeffs.clear();
            self.low = 0;
            return;
        };
        let last = self.coeffs.iter().rposition(|&c| c != 0).unwrap();
        self.coeffs.truncate(last + 1);
        self.coeffs.drain(..first);
        self.low += first as i32;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    pub fn min_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, e: i32) -> i64 {
        let k = e - self.low;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    /// Non-zero terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(move |(k, &c)| (self.low + k as i32, c))
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        match self.max_exponent() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPoly { low: -hi, coeffs }
            }
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Value at `q = 1`.
    pub fn eval_q1(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// True when every exponent is at least `k` (so zero qualifies).
    pub fn divisible_by_q(&self, k: i32) -> bool {
        self.min_exponent().is_none_or(|e| e >= k)
    }

    /// The unique bar-invariant polynomial agreeing with `self` in every
    /// exponent `<= 0`. Subtracting it leaves a polynomial in `q Z[q]`.
    pub fn bar_invariant_lower_part(&self) -> Self {
        let terms: Vec<(i32, i64)> = self.terms().filter(|&(e, _)| e <= 0).collect();
        let mut acc = LaurentPoly::zero();
        for (e, c) in terms {
            acc += &LaurentPoly::monomial(c, e);
            if e != 0 {
                acc += &LaurentPoly::monomial(c, -e);
            }
        }
        acc
    }

    /// Exact division. Fails when `divisor` is zero or does not divide `self`
    /// in `Z[q, q^{-1}]`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::NonExactDivision(format!("({self}) / 0")));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dlead = *divisor.coeffs.last().unwrap();
        let dlen = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Err(Error::NonExactDivision(format!("({self}) / ({divisor})")));
        }
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![0i64; qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + dlen - 1];
            if top == 0 {
                continue;
            }
            if top % dlead != 0 {
                return Err(Error::NonExactDivision(format!("({self}) / ({divisor})")));
            }
            let c = top / dlead;
            quot[k] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::NonExactDivision(format!("({self}) / ({divisor})")));
        }
        Ok(LaurentPoly::from_dense(self.low - divisor.low, quot))
    }

    fn add_scaled(&mut self, other: &LaurentPoly, sign: i64) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = LaurentPoly { low: other.low, coeffs: other.coeffs.iter().map(|c| c * sign).collect() };
            return;
        }
        let low = self.low.min(other.low);
        let high = self.max_exponent().unwrap().max(other.max_exponent().unwrap());
        let mut coeffs = vec![0i64; (high - low + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.low - low) as usize + k] += sign * c;
        }
        self.low = low;
        self.coeffs = coeffs;
        self.normalize();
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, 1);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, -1);
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Mul<i64> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: i64) -> LaurentPoly {
        LaurentPoly::from_dense(self.low, self.coeffs.iter().map(|c| c * rhs).collect())
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self * -1
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        &self * -1
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but total order, so polynomials can live in sorted containers.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        let a: Vec<_> = self.terms().collect();
        let b: Vec<_> = other.terms().collect();
        a.cmp(&b)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: i64, var: &str, e: i32) -> fmt::Result {
    let sign = if c < 0 {
        "-"
    } else if first {
        ""
    } else {
        "+"
    };
    let abs = c.unsigned_abs();
    if e == 0 {
        return write!(f, "{sign}{abs}");
    }
    let power = if e == 1 { var.to_string() } else { format!("{var}^{e}") };
    if abs == 1 {
        write!(f, "{sign}{power}")
    } else {
        write!(f, "{sign}{abs}*{power}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            write_term(f, k == 0, c, "q", e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses signed terms `c*q^e`; `c` may be omitted when it is `1`, the
/// exponent may be written `q^e`, `q^{e}` or bare `q`, and constant terms
/// are bare integers.
fn parse_terms(s: &str, var: char) -> Result<Vec<(i32, i64)>> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("malformed polynomial `{s}`"));
    if cleaned.is_empty() {
        return Err(bad());
    }
    let chars: Vec<char> = cleaned.chars().collect();
    let mut terms = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1i64;
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -1;
            }
            i += 1;
        } else if i != 0 {
            return Err(bad());
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: Option<i64> =
            if i > start { Some(chars[start..i].iter().collect::<String>().parse().map_err(|_| bad())?) } else { None };
        if i < chars.len() && chars[i] == '*' {
            if coeff.is_none() {
                return Err(bad());
            }
            i += 1;
            if i >= chars.len() || chars[i] != var {
                return Err(bad());
            }
        } else if coeff.is_some() && i < chars.len() && chars[i] == var {
            return Err(bad());
        }
        if i < chars.len() && chars[i] == var {
            i += 1;
            let mut exp = 1i32;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let braced = i < chars.len() && chars[i] == '{';
                if braced {
                    i += 1;
                }
                let estart = i;
                if i < chars.len() && chars[i] == '-' {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                exp = chars[estart..i].iter().collect::<String>().parse().map_err(|_| bad())?;
                if braced {
                    if i >= chars.len() || chars[i] != '}' {
                        return Err(bad());
                    }
                    i += 1;
                }
            }
            terms.push((exp, sign * coeff.unwrap_or(1)));
        } else {
            let c = coeff.ok_or_else(bad)?;
            terms.push((0, sign * c));
        }
    }
    Ok(terms)
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(LaurentPoly::from_terms(parse_terms(s, 'q')?))
    }
}

/// The quantum integer `[r]_x` at `x = q^e`, i.e. `(x^r - x^-r)/(x - x^-1)`.
pub fn quantum_integer(r: u32, e: i32) -> LaurentPoly {
    let r = r as i32;
    LaurentPoly::from_terms((0..r).map(|j| (e * (r - 1 - 2 * j), 1)))
}

/// `[r]!_x` at `x = q^e`.
pub fn quantum_factorial(r: u32, e: i32) -> LaurentPoly {
    (1..=r).fold(LaurentPoly::one(), |acc, k| &acc * &quantum_integer(k, e))
}

/// The balanced Gaussian binomial `[n choose k]_x` at `x = q^e`.
pub fn quantum_binomial(n: u32, k: u32, e: i32) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    let num = quantum_factorial(n, e);
    let den = &quantum_factorial(k, e) * &quantum_factorial(n - k, e);
    num.div_exact(&den).expect("Gaussian binomials are Laurent polynomials")
}

/// Integer polynomial in `t`, dense from `t^0`, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: Vec<i64>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![1])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![0, 1])
    }

    pub fn monomial(c: i64, e: usize) -> Self {
        let mut coeffs = vec![0; e + 1];
        coeffs[e] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        &TPoly::one() - &TPoly::monomial(1, k)
    }

    /// `phi_n = (1-t)(1-t^2)...(1-t^n)`.
    pub fn phi(n: usize) -> Self {
        (1..=n).fold(TPoly::one(), |acc, i| &acc * &TPoly::one_minus_t_pow(i))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> i64 {
        self.coeffs.get(e).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    /// True when `t` divides the polynomial (zero included).
    pub fn divisible_by_t(&self) -> bool {
        self.coeff(0) == 0
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, c| acc * t + c)
    }

    /// The substitution `t = -q^2`.
    pub fn subst_t(&self) -> LaurentPoly {
        let mut dense = vec![0i64; 2 * self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            dense[2 * k] = if k % 2 == 0 { *c } else { -c };
        }
        LaurentPoly::from_dense(0, dense)
    }

    /// Exact division, failing on a non-zero remainder or a leading
    /// coefficient that does not divide.
    pub fn div_exact(&self, divisor: &TPoly) -> Result<TPoly> {
        let err = || Error::NonExactDivision(format!("({self}) / ({divisor})"));
        let Some(ddeg) = divisor.degree() else {
            return Err(err());
        };
        if self.is_zero() {
            return Ok(TPoly::zero());
        }
        let dlead = divisor.coeffs[ddeg];
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Err(err());
        }
        let qlen = rem.len() - ddeg;
        let mut quot = vec![0i64; qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + ddeg];
            if top == 0 {
                continue;
            }
            if top % dlead != 0 {
                return Err(err());
            }
            let c = top / dlead;
            quot[k] = c;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(err());
        }
        Ok(TPoly::from_coeffs(quot))
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Mul<i64> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: i64) -> TPoly {
        TPoly::from_coeffs(self.coeffs.iter().map(|c| c * rhs).collect())
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self * -1
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &TPoly) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                write_term(f, first, c, "t", e as i32)?;
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for TPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut acc = TPoly::zero();
        for (e, c) in parse_terms(s, 't')? {
            if e < 0 {
                return Err(Error::Parse(format!("negative power of t in `{s}`")));
            }
            acc += &TPoly::monomial(c, e as usize);
        }
        Ok(acc)
    }
}
