//! The Fock space on partitions with residues modulo `m`.

use std::collections::HashMap;

use super::{correct, CanonicalBasisMatrix, FockKind, FockVector};
use crate::abacus::{check_modulus, enumerate_weight_space};
use crate::error::{Error, Result};
use crate::partition::{Node, Partition};
use crate::qpoly::LaurentPoly;

/// Calls `visit` on every `r`-element subset of `0..n`, as a sorted list.
pub(crate) fn for_each_subset(n: usize, r: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(n: usize, r: usize, start: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if chosen.len() == r {
            visit(chosen);
            return;
        }
        for k in start..n {
            if n - k < r - chosen.len() {
                break;
            }
            chosen.push(k);
            rec(n, r, k + 1, chosen, visit);
            chosen.pop();
        }
    }
    rec(n, r, 0, &mut Vec::with_capacity(r), visit);
}

/// Divided powers `f_i^(r)` on partitions, with canonical basis vectors
/// memoised per instance.
#[derive(Debug)]
pub struct FockSpaceA1 {
    m: usize,
    cache: HashMap<Partition, FockVector>,
}

impl FockSpaceA1 {
    pub fn new(m: usize) -> Result<Self> {
        check_modulus(m)?;
        Ok(FockSpaceA1 { m, cache: HashMap::new() })
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    /// `f_i^(r)` on a single partition: the sum over ways of adding `r`
    /// addable `i`-nodes, each weighted by `q^(2n)` where `n` counts, over the
    /// added nodes, the `i`-addable nodes of the result to their left minus
    /// the `i`-removable nodes of `lambda` to their left.
    pub fn f_divided_basis(&self, lambda: &Partition, i: usize, r: usize) -> FockVector {
        let (addable, removable) = lambda.addable_removable(i % self.m, self.m);
        let mut out = FockVector::zero();
        for_each_subset(addable.len(), r, &mut |chosen| {
            let mut exponent: i32 = 0;
            for &k in chosen {
                let col = addable[k].col;
                let left_addable = (0..addable.len()).filter(|j| !chosen.contains(j) && addable[*j].col < col).count();
                let left_removable = removable.iter().filter(|n| n.col < col).count();
                exponent += left_addable as i32 - left_removable as i32;
            }
            let nodes: Vec<Node> = chosen.iter().map(|&k| addable[k]).collect();
            let mu = lambda.with_nodes(&nodes).expect("addable nodes of one residue can be added together");
            out.add_term(mu, &LaurentPoly::q_pow(2 * exponent));
        });
        out
    }

    /// `f_i^(r)` extended linearly.
    pub fn f_divided(&self, v: &FockVector, i: usize, r: usize) -> FockVector {
        let mut out = FockVector::zero();
        for (lambda, c) in v.terms() {
            out.add_scaled(&self.f_divided_basis(lambda, i, r), c);
        }
        out
    }

    /// Applies `f_{i_1}^(r_1)`, then `f_{i_2}^(r_2)`, and so on.
    pub fn apply_word(&self, v: &FockVector, word: &[(usize, usize)]) -> FockVector {
        word.iter().fold(v.clone(), |acc, &(i, r)| self.f_divided(&acc, i, r))
    }

    /// The ladder word of a restricted partition: for each ladder
    /// `{(r, c) : (c-1) + (m-1)(r-1) = k}` in increasing `k`, the pair
    /// `(k mod m, nodes of mu on the ladder)`.
    pub fn ladder_word(&self, mu: &Partition) -> Vec<(usize, usize)> {
        let mut counts: Vec<usize> = Vec::new();
        for node in mu.nodes() {
            let k = (node.col - 1) + (self.m - 1) * (node.row - 1);
            if counts.len() <= k {
                counts.resize(k + 1, 0);
            }
            counts[k] += 1;
        }
        counts.iter().enumerate().filter(|(_, &a)| a > 0).map(|(k, &a)| (k % self.m, a)).collect()
    }

    /// The bar-invariant first approximation `A(mu)`: the ladder word
    /// applied to the empty partition.
    pub fn ladder_vector(&self, mu: &Partition) -> FockVector {
        self.apply_word(&FockVector::basis(Partition::empty()), &self.ladder_word(mu))
    }

    /// The canonical basis vector of an `m`-restricted partition.
    pub fn canonical_vector(&mut self, mu: &Partition) -> Result<FockVector> {
        if !mu.is_restricted(self.m) {
            return Err(Error::NotRestricted { partition: mu.to_string(), modulus: self.m });
        }
        if let Some(v) = self.cache.get(mu) {
            return Ok(v.clone());
        }
        let m = self.m;
        let first = self.ladder_vector(mu);
        let v = correct(first, mu, &|p: &Partition| p.is_restricted(m), &mut |g: &Partition| self.canonical_vector(g))?;
        self.cache.insert(mu.clone(), v.clone());
        Ok(v)
    }

    /// All canonical basis vectors of the weight space with the given core
    /// and weight.
    pub fn canonical_basis(&mut self, core: &Partition, w: usize) -> Result<CanonicalBasisMatrix> {
        let rows = enumerate_weight_space(core, w, self.m)?;
        let mut columns = Vec::new();
        // Most dominant first, so corrections only use finished columns.
        let m = self.m;
        for mu in rows.iter().rev().filter(|p| p.is_restricted(m)) {
            columns.push((mu.clone(), self.canonical_vector(mu)?));
        }
        columns.reverse();
        CanonicalBasisMatrix::from_columns(FockKind::A1, self.m, core.clone(), w, rows, columns)
    }

    /// The coefficient of `lambda` in the canonical basis vector of `mu`.
    pub fn d_coefficient(&mut self, lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
        Ok(self.canonical_vector(mu)?.coeff(lambda))
    }
}

/// The canonical basis matrix of one weight space.
pub fn llt_canonical_basis(core: &Partition, w: usize, m: usize) -> Result<CanonicalBasisMatrix> {
    FockSpaceA1::new(m)?.canonical_basis(core, w)
}
