//! The Fock space on `h`-strict partitions with bar-residues.

use std::collections::{BTreeSet, HashMap};

use super::{correct, CanonicalBasisMatrix, FockKind, FockVector};
use crate::error::{Error, Result};
use crate::hstrict::{
    bar_addable_removable, bar_additions, bar_removals, check_h, enumerate_bar_weight_space, is_bar_core,
    is_restricted_h, require_h_strict,
};
use crate::partition::{Node, Partition};
use crate::qpoly::LaurentPoly;

/// Divided powers of the bar-residue operators on `h`-strict partitions,
/// with canonical basis vectors memoised per instance.
#[derive(Debug)]
pub struct FockSpaceA2 {
    h: usize,
    cache: HashMap<Partition, FockVector>,
}

impl FockSpaceA2 {
    pub fn new(h: usize) -> Result<Self> {
        check_h(h)?;
        Ok(FockSpaceA2 { h, cache: HashMap::new() })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    /// Largest bar-residue `(h-1)/2`.
    pub fn n(&self) -> usize {
        (self.h - 1) / 2
    }

    /// Exponent `e` with `q_i = q^e`.
    fn q_exponent(&self, i: usize) -> i32 {
        if i == 0 {
            1
        } else if i == self.n() {
            4
        } else {
            2
        }
    }

    /// The extra factor for residue 0: a product of `1 - (-q^2)^b` over the
    /// multiples `kh` (`k ≥ 1`) such that column `kh+1` gains a node while
    /// column `kh` does not, where `b` is the number of parts of `alpha`
    /// equal to `kh`.
    fn zero_residue_factor(&self, alpha: &Partition, added: &[Node]) -> LaurentPoly {
        let cols: BTreeSet<usize> = added.iter().map(|n| n.col).collect();
        let minus_q2 = LaurentPoly::monomial(-1, 2);
        let mut acc = LaurentPoly::one();
        for &c in &cols {
            if c > 1 && (c - 1) % self.h == 0 && !cols.contains(&(c - 1)) {
                let b = alpha.multiplicity(c - 1);
                let pow = (0..b).fold(LaurentPoly::one(), |x, _| &x * &minus_q2);
                acc = &acc * &(LaurentPoly::one() - pow);
            }
        }
        acc
    }

    /// `f_i^(r)` on one `h`-strict partition.
    pub fn f_divided_basis(&self, alpha: &Partition, i: usize, r: usize) -> Result<FockVector> {
        require_h_strict(alpha, self.h)?;
        if i > self.n() {
            return Err(Error::Precondition(format!("bar-residue {i} exceeds {}", self.n())));
        }
        let (_, removable) = bar_addable_removable(alpha, i, self.h)?;
        let e = self.q_exponent(i);
        let mut out = FockVector::zero();
        for (beta, added) in bar_additions(alpha, i, r, self.h)? {
            let (addable, _) = bar_addable_removable(&beta, i, self.h)?;
            let mut exponent: i32 = 0;
            for a in &added {
                let left_addable = addable.iter().filter(|n| n.col < a.col).count();
                let left_removable = removable.iter().filter(|n| n.col < a.col).count();
                exponent += left_addable as i32 - left_removable as i32;
            }
            let mut coeff = LaurentPoly::q_pow(e * exponent);
            if i == 0 {
                coeff = &coeff * &self.zero_residue_factor(alpha, &added);
            }
            out.add_term(beta, &coeff);
        }
        Ok(out)
    }

    /// `f_i^(r)` extended linearly.
    pub fn f_divided(&self, v: &FockVector, i: usize, r: usize) -> Result<FockVector> {
        let mut out = FockVector::zero();
        for (alpha, c) in v.terms() {
            out.add_scaled(&self.f_divided_basis(alpha, i, r)?, c);
        }
        Ok(out)
    }

    /// Applies `f_{i_1}^(r_1)`, then `f_{i_2}^(r_2)`, and so on.
    pub fn apply_word(&self, v: &FockVector, word: &[(usize, usize)]) -> Result<FockVector> {
        word.iter().try_fold(v.clone(), |acc, &(i, r)| self.f_divided(&acc, i, r))
    }

    /// The canonical basis vector of a restricted `h`-strict partition.
    ///
    /// Bar-cores are their own canonical basis vectors. Otherwise some
    /// `f_i^(r)` applied to the canonical basis vector of a smaller restricted
    /// partition has `beta` as its lowest term with coefficient 1; that
    /// vector is bar-invariant and is corrected into the answer.
    pub fn canonical_vector(&mut self, beta: &Partition) -> Result<FockVector> {
        require_h_strict(beta, self.h)?;
        if !is_restricted_h(beta, self.h) {
            return Err(Error::NotRestricted { partition: beta.to_string(), modulus: self.h });
        }
        if let Some(v) = self.cache.get(beta) {
            return Ok(v.clone());
        }
        let v = if is_bar_core(beta, self.h)? {
            FockVector::basis(beta.clone())
        } else {
            let first = self.first_approximation(beta)?;
            let h = self.h;
            correct(first, beta, &|p: &Partition| is_restricted_h(p, h), &mut |g: &Partition| self.canonical_vector(g))?
        };
        self.cache.insert(beta.clone(), v.clone());
        Ok(v)
    }

    fn first_approximation(&mut self, beta: &Partition) -> Result<FockVector> {
        for i in 0..=self.n() {
            let (_, removable) = bar_addable_removable(beta, i, self.h)?;
            for r in (1..=removable.len()).rev() {
                for smaller in bar_removals(beta, i, r, self.h)? {
                    if !is_restricted_h(&smaller, self.h) {
                        continue;
                    }
                    let g = self.canonical_vector(&smaller)?;
                    let v = self.f_divided(&g, i, r)?;
                    if v.lowest() == Some(beta) && v.coeff(beta).is_one() {
                        return Ok(v);
                    }
                }
            }
        }
        Err(Error::CanonicalBasis(format!("no unitriangular first approximation found for {beta:?}")))
    }

    /// All canonical basis vectors of one bar-weight space.
    pub fn canonical_basis(&mut self, core: &Partition, w: usize) -> Result<CanonicalBasisMatrix> {
        let rows = enumerate_bar_weight_space(core, w, self.h)?;
        let mut columns = Vec::new();
        let h = self.h;
        for beta in rows.iter().rev().filter(|p| is_restricted_h(p, h)) {
            columns.push((beta.clone(), self.canonical_vector(beta)?));
        }
        columns.reverse();
        CanonicalBasisMatrix::from_columns(FockKind::A2, self.h, core.clone(), w, rows, columns)
    }

    /// The coefficient of `alpha` in the canonical basis vector of `beta`.
    pub fn dcheck_coefficient(&mut self, alpha: &Partition, beta: &Partition) -> Result<LaurentPoly> {
        Ok(self.canonical_vector(beta)?.coeff(alpha))
    }
}

/// The canonical basis matrix of one bar-weight space.
pub fn canonical_basis_a2(core: &Partition, w: usize, h: usize) -> Result<CanonicalBasisMatrix> {
    FockSpaceA2::new(h)?.canonical_basis(core, w)
}
