//! Level-1 Fock spaces: sparse vectors over partitions, the shared
//! triangular correction that turns bar-invariant vectors into canonical
//! basis vectors, and weight-space matrices of canonical basis coefficients.

pub mod a1;
pub mod a2;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qpoly::LaurentPoly;
use crate::report::Report;

pub use a1::FockSpaceA1;
pub use a2::FockSpaceA2;

/// Which Fock space a matrix belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FockKind {
    /// Partitions, `m` residues.
    A1,
    /// `h`-strict partitions, bar-residues.
    A2,
}

/// A finitely supported vector in a Fock space: partitions mapped to
/// Laurent polynomial coefficients, never storing zeros.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(p: Partition) -> Self {
        Self::from_terms([(p, LaurentPoly::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, LaurentPoly)>) -> Self {
        let mut v = Self::zero();
        for (p, c) in terms {
            v.add_term(p, &c);
        }
        v
    }

    pub fn add_term(&mut self, p: Partition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &FockVector, c: &LaurentPoly) {
        for (p, a) in &other.terms {
            self.add_term(p.clone(), &(a * c));
        }
    }

    pub fn scaled(&self, c: &LaurentPoly) -> FockVector {
        let mut out = FockVector::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn coeff(&self, p: &Partition) -> LaurentPoly {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The lexicographically smallest label in the support.
    pub fn lowest(&self) -> Option<&Partition> {
        self.terms.keys().next()
    }

    /// Applies the coefficient bar involution termwise.
    pub fn bar_coefficients(&self) -> FockVector {
        FockVector::from_terms(self.terms.iter().map(|(p, c)| (p.clone(), c.bar())))
    }

    /// Relabels every term through `f`, failing if `f` fails on any label.
    pub fn relabel(&self, mut f: impl FnMut(&Partition) -> Result<Partition>) -> Result<FockVector> {
        let mut out = FockVector::zero();
        for (p, c) in &self.terms {
            out.add_term(f(p)?, c);
        }
        Ok(out)
    }

    /// Applies a map defined on basis vectors, extended linearly.
    pub fn map_linear(&self, mut f: impl FnMut(&Partition) -> Result<FockVector>) -> Result<FockVector> {
        let mut out = FockVector::zero();
        for (p, c) in &self.terms {
            out.add_scaled(&f(p)?, c);
        }
        Ok(out)
    }
}

impl std::ops::Sub<&FockVector> for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::constant(-1));
        out
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "({p})")?;
            } else if c.terms().count() == 1 && c.coeff(c.min_exponent().unwrap()) == 1 {
                write!(f, "{c}({p})")?;
            } else {
                write!(f, "[{c}]({p})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Turns a bar-invariant vector whose lowest term is `beta` with coefficient
/// 1 into the canonical basis vector of `beta`, by repeatedly cancelling the
/// lowest offending coefficient with a bar-invariant multiple of a
/// canonical basis vector. `lookup` must return canonical basis vectors of
/// restricted labels above `beta`.
pub(crate) fn correct(
    mut v: FockVector,
    beta: &Partition,
    restricted: &dyn Fn(&Partition) -> bool,
    lookup: &mut dyn FnMut(&Partition) -> Result<FockVector>,
) -> Result<FockVector> {
    if v.lowest() != Some(beta) || !v.coeff(beta).is_one() {
        return Err(Error::CanonicalBasis(format!("first approximation for {beta:?} is not unitriangular: {v}")));
    }
    loop {
        let offending = v
            .terms()
            .find(|(p, c)| *p != beta && c.min_exponent().is_some_and(|e| e <= 0))
            .map(|(p, c)| (p.clone(), c.clone()));
        let Some((gamma, c)) = offending else { break };
        if !restricted(&gamma) {
            return Err(Error::CanonicalBasis(format!(
                "coefficient {c} of unrestricted {gamma:?} in the vector for {beta:?} is not divisible by q"
            )));
        }
        let a = c.bar_invariant_lower_part();
        let g = lookup(&gamma)?;
        v.add_scaled(&g, &-a);
    }
    Ok(v)
}

/// Canonical basis coefficients on one weight space: `entries[r][c]` is the
/// coefficient of `rows[r]` in the canonical basis vector of `cols[c]`.
/// Labels are sorted in increasing lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalBasisMatrix {
    pub kind: FockKind,
    pub modulus: usize,
    pub core: Partition,
    pub weight: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl CanonicalBasisMatrix {
    pub(crate) fn from_columns(
        kind: FockKind,
        modulus: usize,
        core: Partition,
        weight: usize,
        rows: Vec<Partition>,
        columns: Vec<(Partition, FockVector)>,
    ) -> Result<Self> {
        let mut entries = vec![vec![LaurentPoly::zero(); columns.len()]; rows.len()];
        for (c, (label, vector)) in columns.iter().enumerate() {
            for (p, coeff) in vector.terms() {
                let r = rows.binary_search(p).map_err(|_| {
                    Error::CanonicalBasis(format!("vector for {label:?} leaves the weight space at {p:?}"))
                })?;
                entries[r][c] = coeff.clone();
            }
        }
        let cols = columns.into_iter().map(|(p, _)| p).collect();
        Ok(CanonicalBasisMatrix { kind, modulus, core, weight, rows, cols, entries })
    }

    pub fn entry(&self, row: &Partition, col: &Partition) -> Option<&LaurentPoly> {
        let r = self.rows.binary_search(row).ok()?;
        let c = self.cols.iter().position(|p| p == col)?;
        Some(&self.entries[r][c])
    }

    /// The canonical basis vector of column `c`.
    pub fn column(&self, c: usize) -> FockVector {
        FockVector::from_terms(self.rows.iter().zip(&self.entries).map(|(p, row)| (p.clone(), row[c].clone())))
    }

    /// Unitriangularity, divisibility of off-diagonal entries by `q` and
    /// support above the diagonal label in dominance.
    pub fn check_shape(&self) -> Report {
        let mut report = Report::new("canonical basis shape");
        for (c, col) in self.cols.iter().enumerate() {
            for (r, row) in self.rows.iter().enumerate() {
                let e = &self.entries[r][c];
                let ok =
                    if row == col { e.is_one() } else { e.is_zero() || (e.divisible_by_q(1) && row.dominates(col)) };
                report.check(ok, || format!("entry at row {row:?}, column {col:?} is {e}"));
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn vector_arithmetic() {
        let mut v = FockVector::basis(p("2"));
        v.add_term(p("1,1"), &LaurentPoly::q_pow(2));
        assert_eq!(v.support_size(), 2);
        assert_eq!(v.lowest(), Some(&p("1,1")));
        let w = &v - &v;
        assert!(w.is_zero());
        assert_eq!(v.to_string(), "q^2(1,1) + (2)");
        assert_eq!(v.bar_coefficients().coeff(&p("1,1")), LaurentPoly::q_pow(-2));
    }

    #[test]
    fn correction_rejects_bad_leading_term() {
        let v = FockVector::from_terms([(p("2"), LaurentPoly::q_pow(1))]);
        let err = correct(v, &p("2"), &|_| true, &mut |_| Ok(FockVector::zero()));
        assert!(err.is_err());
    }
}
