//! Symmetric functions of fixed degree in the Schur basis: products, skewing
//! by a row, Hall–Littlewood functions, Kostka polynomials and the two Pieri
//! rules for Hall–Littlewood functions.

mod kostka;
mod lr;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::{adds_horizontal_strip, horizontal_strips_below, partitions_of, Partition};
use crate::qpoly::TPoly;
use crate::report::Report;

pub use kostka::{kostka_matrix, p_in_schur, KostkaMatrix};
pub use lr::lr_coefficient;

/// A homogeneous symmetric function written in the Schur basis, with
/// coefficients in `Z[t]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurVector {
    coeffs: BTreeMap<Partition, TPoly>,
}

impl SchurVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single Schur function `s_lambda`.
    pub fn schur(lambda: Partition) -> Self {
        let mut v = Self::zero();
        v.add_term(lambda, &TPoly::one());
        v
    }

    pub fn add_term(&mut self, lambda: Partition, c: &TPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn add_scaled(&mut self, other: &SchurVector, c: &TPoly) {
        for (lam, a) in &other.coeffs {
            self.add_term(lam.clone(), &(a * c));
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> TPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &TPoly)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Product in the Schur basis via Littlewood–Richardson coefficients.
    pub fn mul(&self, other: &SchurVector) -> SchurVector {
        let mut out = SchurVector::zero();
        for (sigma, a) in &self.coeffs {
            for (tau, b) in &other.coeffs {
                let ab = a * b;
                for lam in partitions_of(sigma.size() + tau.size()) {
                    let c = lr_coefficient(&lam, sigma, tau);
                    if c > 0 {
                        out.add_term(lam, &(&ab * c as i64));
                    }
                }
            }
        }
        out
    }

    /// The adjoint of multiplication by `s_(r)`: `s_mu ↦ Σ s_lambda` over
    /// all `lambda` with `mu / lambda` a horizontal `r`-strip.
    pub fn skew_by_row(&self, r: usize) -> SchurVector {
        let mut out = SchurVector::zero();
        for (mu, a) in &self.coeffs {
            for lam in horizontal_strips_below(mu, r) {
                out.add_term(lam, a);
            }
        }
        out
    }

    /// Divides every coefficient exactly.
    pub fn div_exact(&self, d: &TPoly) -> Result<SchurVector> {
        let mut out = SchurVector::zero();
        for (lam, a) in &self.coeffs {
            out.add_term(lam.clone(), &a.div_exact(d)?);
        }
        Ok(out)
    }
}

/// `Q_(r)` in the Schur basis: `(1-t) Σ_{j<r} (-t)^j s_(r-j,1^j)`, and
/// `Q_(0) = 1`.
pub fn q_row(r: usize) -> SchurVector {
    if r == 0 {
        return SchurVector::schur(Partition::empty());
    }
    let mut v = SchurVector::zero();
    let one_minus_t = TPoly::one_minus_t_pow(1);
    for j in 0..r {
        let mut parts = vec![r - j];
        parts.extend(std::iter::repeat_n(1, j));
        let sign = if j % 2 == 0 { 1 } else { -1 };
        v.add_term(Partition::new(parts).unwrap(), &(&one_minus_t * &TPoly::monomial(sign, j)));
    }
    v
}

fn strip_columns(lambda: &Partition, mu: &Partition) -> Result<Vec<bool>> {
    if adds_horizontal_strip(lambda, mu).is_none() {
        return Err(Error::Precondition(format!("{mu:?} / {lambda:?} is not a horizontal strip")));
    }
    let width = mu.first_part() + 2;
    let mut cols = vec![false; width + 1];
    for node in mu.skew_nodes(lambda) {
        cols[node.col] = true;
    }
    Ok(cols)
}

/// The multiplication Pieri coefficient: the product over columns `c` that
/// meet the strip `mu / lambda` while column `c+1` does not, of
/// `1 - t^(mu'_c - mu'_(c+1))`.
pub fn hs(lambda: &Partition, mu: &Partition) -> Result<TPoly> {
    let cols = strip_columns(lambda, mu)?;
    let mut acc = TPoly::one();
    for c in 1..cols.len() - 1 {
        if cols[c] && !cols[c + 1] {
            acc = &acc * &TPoly::one_minus_t_pow(mu.column_length(c) - mu.column_length(c + 1));
        }
    }
    Ok(acc)
}

/// The dual Pieri coefficient: the product over columns `c ≥ 1` such that
/// column `c+1` meets the strip `mu / lambda` while column `c` does not, of
/// `1 - t^(lambda'_c - lambda'_(c+1))`.
pub fn hsb(lambda: &Partition, mu: &Partition) -> Result<TPoly> {
    let cols = strip_columns(lambda, mu)?;
    let mut acc = TPoly::one();
    for c in 1..cols.len() - 1 {
        if !cols[c] && cols[c + 1] {
            acc = &acc * &TPoly::one_minus_t_pow(lambda.column_length(c) - lambda.column_length(c + 1));
        }
    }
    Ok(acc)
}

/// `b_lambda = Π_i φ_(m_i(lambda))` with `φ_n = (1-t)...(1-t^n)`.
pub fn b_factor(lambda: &Partition) -> TPoly {
    let mut acc = TPoly::one();
    let mut prev = 0;
    for &p in lambda.parts() {
        if p != prev {
            acc = &acc * &TPoly::phi(lambda.multiplicity(p));
            prev = p;
        }
    }
    acc
}

/// Converts a Schur-basis vector to the Hall–Littlewood `P` basis.
pub fn schur_to_p(v: &SchurVector) -> BTreeMap<Partition, TPoly> {
    let mut out: BTreeMap<Partition, TPoly> = BTreeMap::new();
    for (nu, c) in v.terms() {
        let k = kostka_matrix(nu.size());
        for mu in k.labels() {
            let e = k.k(nu, mu);
            if !e.is_zero() {
                *out.entry(mu.clone()).or_default() += &(c * &e);
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `P_lambda · Q_(r)` expanded in the `P` basis, computed by multiplying in
/// the Schur basis and changing basis.
pub fn hl_pieri_expand(lambda: &Partition, r: usize) -> BTreeMap<Partition, TPoly> {
    let p = p_in_schur(lambda);
    schur_to_p(&p.mul(&q_row(r)))
}

/// `∂_(r) P_mu` expanded in the `P` basis, computed by skewing in the Schur
/// basis and changing basis.
pub fn dual_pieri_expand(mu: &Partition, r: usize) -> BTreeMap<Partition, TPoly> {
    schur_to_p(&p_in_schur(mu).skew_by_row(r))
}

/// Multiplication Pieri rule: for all `|mu| ≤ max_size`, `r ≤ max_r`, the
/// coefficient of `P_mu` in `P_lambda Q_(r)` is `hs(lambda, mu)`.
pub fn verify_hl_pieri(max_size: usize, max_r: usize) -> Report {
    let mut report = Report::new("Hall-Littlewood Pieri rule");
    for r in 0..=max_r {
        for d in 0..=max_size.saturating_sub(r) {
            for lambda in partitions_of(d) {
                let got = hl_pieri_expand(&lambda, r);
                let mut expected = BTreeMap::new();
                for mu in crate::partition::horizontal_strips_above(&lambda, r) {
                    let c = hs(&lambda, &mu).unwrap();
                    if !c.is_zero() {
                        expected.insert(mu, c);
                    }
                }
                report
                    .check(got == expected, || format!("lambda={lambda:?} r={r}: got {got:?}, expected {expected:?}"));
            }
        }
    }
    report
}

/// Dual Pieri rule: for all `|mu| ≤ max_size`, `1 ≤ r ≤ max_r`, the
/// coefficient of `P_lambda` in `∂_(r) P_mu` is `hsb(lambda, mu)`.
pub fn verify_dual_pieri(max_size: usize, max_r: usize) -> Report {
    let mut report = Report::new("dual Pieri rule");
    for d in 0..=max_size {
        for mu in partitions_of(d) {
            for r in 1..=max_r {
                let got = dual_pieri_expand(&mu, r);
                let mut expected = BTreeMap::new();
                for lambda in horizontal_strips_below(&mu, r) {
                    let c = hsb(&lambda, &mu).unwrap();
                    if !c.is_zero() {
                        expected.insert(lambda, c);
                    }
                }
                report.check(got == expected, || format!("mu={mu:?} r={r}: got {got:?}, expected {expected:?}"));
            }
        }
    }
    report
}

/// `hsb(lambda, mu) · b_mu = b_lambda · hs(lambda, mu)` for every horizontal
/// strip with `|mu| ≤ max_size`.
pub fn verify_b_strip(max_size: usize) -> Report {
    let mut report = Report::new("b-factor strip identity");
    for d in 0..=max_size {
        for mu in partitions_of(d) {
            for r in 0..=mu.first_part() {
                for lambda in horizontal_strips_below(&mu, r) {
                    let lhs = &hsb(&lambda, &mu).unwrap() * &b_factor(&mu);
                    let rhs = &b_factor(&lambda) * &hs(&lambda, &mu).unwrap();
                    report.check(lhs == rhs, || format!("lambda={lambda:?} mu={mu:?}"));
                }
            }
        }
    }
    report
}

/// Kostka matrices of every degree up to `max_degree` are unitriangular with
/// respect to dominance, have off-diagonal entries divisible by `t`, and
/// multiply with their inverses to the identity.
pub fn verify_kostka_properties(max_degree: usize) -> Report {
    let mut report = Report::new("Kostka matrix triangularity");
    for d in 0..=max_degree {
        let k = kostka_matrix(d);
        for a in k.labels() {
            for b in k.labels() {
                for (name, e) in [("K", k.k(a, b)), ("K^-1", k.kinv(a, b))] {
                    let ok = if a == b { e.is_one() } else { e.divisible_by_t() && (e.is_zero() || a.dominates(b)) };
                    report.check(ok, || format!("{name}[{a:?},{b:?}] = {e}"));
                }
                let mut prod = TPoly::zero();
                for c in k.labels() {
                    prod += &(&k.k(a, c) * &k.kinv(c, b));
                }
                let ok = if a == b { prod.is_one() } else { prod.is_zero() };
                report.check(ok, || format!("(K K^-1)[{a:?},{b:?}] = {prod}"));
            }
        }
    }
    report
}
