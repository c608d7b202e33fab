//! `h`-strict partitions: bar-residues, bar-abacus, bar-cores and the
//! bar-addable/bar-removable node calculus.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Node, Partition};

/// An `h`-strict partition: repeated parts are allowed only when divisible
/// by the odd modulus `h`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HStrictPartition {
    parts: Partition,
    h: usize,
}

impl HStrictPartition {
    pub fn new(parts: Partition, h: usize) -> Result<Self> {
        check_h(h)?;
        if !is_h_strict(&parts, h) {
            return Err(Error::NotHStrict { partition: parts.to_string(), h });
        }
        Ok(HStrictPartition { parts, h })
    }

    pub fn partition(&self) -> &Partition {
        &self.parts
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn bar_core_weight(&self) -> (HStrictPartition, usize) {
        let (core, w) = bar_core_weight(&self.parts, self.h).expect("validated on construction");
        (HStrictPartition { parts: core, h: self.h }, w)
    }

    pub fn is_restricted(&self) -> bool {
        is_restricted_h(&self.parts, self.h)
    }
}

impl fmt::Debug for HStrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}_{}", self.parts, self.h)
    }
}

pub(crate) fn check_h(h: usize) -> Result<()> {
    if h < 3 || h.is_multiple_of(2) {
        return Err(Error::InvalidModulus(format!("h must be odd and at least 3, got {h}")));
    }
    Ok(())
}

pub fn is_h_strict(alpha: &Partition, h: usize) -> bool {
    alpha.parts().windows(2).all(|w| w[0] != w[1] || w[0] % h == 0)
}

pub(crate) fn require_h_strict(alpha: &Partition, h: usize) -> Result<()> {
    check_h(h)?;
    if !is_h_strict(alpha, h) {
        return Err(Error::NotHStrict { partition: alpha.to_string(), h });
    }
    Ok(())
}

/// Bar-residue of column `col`: the smaller of `(col - 1) mod h` and
/// `(h - col) mod h`, a value in `0..=(h-1)/2`.
pub fn bar_residue(col: usize, h: usize) -> usize {
    let a = (col as i64 - 1).rem_euclid(h as i64);
    let b = (h as i64 - col as i64).rem_euclid(h as i64);
    a.min(b) as usize
}

/// Restricted `h`-strict partitions: each gap `α_r - α_{r+1}` (with the
/// part after the last one taken as 0) is below `h` when `h | α_r` and at
/// most `h` otherwise.
pub fn is_restricted_h(alpha: &Partition, h: usize) -> bool {
    (0..alpha.len()).all(|r| {
        let (a, gap) = (alpha.part(r), alpha.part(r) - alpha.part(r + 1));
        if a % h == 0 {
            gap < h
        } else {
            gap <= h
        }
    })
}

/// Bar-abacus: a bead at position `α_r` for each part; runner 0 may hold
/// several beads at one position and position 0 counts as infinitely full.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarAbacusDisplay {
    h: usize,
    multiplicity: BTreeMap<usize, usize>,
}

impl BarAbacusDisplay {
    pub fn new(alpha: &Partition, h: usize) -> Result<Self> {
        require_h_strict(alpha, h)?;
        let mut multiplicity = BTreeMap::new();
        for &p in alpha.parts() {
            *multiplicity.entry(p).or_insert(0) += 1;
        }
        Ok(BarAbacusDisplay { h, multiplicity })
    }

    /// Beads at position `b`; `None` stands for the infinite pile at 0.
    pub fn multiplicity(&self, b: usize) -> Option<usize> {
        if b == 0 {
            None
        } else {
            Some(self.multiplicity.get(&b).copied().unwrap_or(0))
        }
    }

    pub fn is_occupied(&self, b: usize) -> bool {
        b == 0 || self.multiplicity.contains_key(&b)
    }

    /// Number of beads on runner `i` at positive positions.
    pub fn runner_count(&self, i: usize) -> usize {
        self.multiplicity.iter().filter(|(&b, _)| b % self.h == i).map(|(_, &c)| c).sum()
    }

    /// Rows of the beads on runner `i` (`i ≥ 1`), increasing.
    pub fn runner_rows(&self, i: usize) -> Vec<usize> {
        self.multiplicity.keys().filter(|&&b| b % self.h == i).map(|&b| b / self.h).collect()
    }

    /// The first empty position on runners `1..=n`.
    pub fn first_gap_low_runners(&self) -> usize {
        let n = (self.h - 1) / 2;
        (1..).find(|&b| (1..=n).contains(&(b % self.h)) && !self.is_occupied(b)).unwrap()
    }
}

/// The `h`-bar-core and `h`-bar-weight.
pub fn bar_core_weight(alpha: &Partition, h: usize) -> Result<(Partition, usize)> {
    require_h_strict(alpha, h)?;
    let display = BarAbacusDisplay::new(alpha, h)?;
    let counts: Vec<usize> = (0..h).map(|i| display.runner_count(i)).collect();
    let mut parts = Vec::new();
    for i in 1..h {
        let keep = counts[i] - counts[i].min(counts[h - i]);
        parts.extend((0..keep).map(|k| i + k * h));
    }
    let core = Partition::from_unsorted(parts);
    Ok((core.clone(), (alpha.size() - core.size()) / h))
}

pub fn is_bar_core(alpha: &Partition, h: usize) -> Result<bool> {
    Ok(bar_core_weight(alpha, h)?.1 == 0)
}

/// Every `h`-strict partition obtained by adding one `h`-bar.
pub fn add_bars(alpha: &Partition, h: usize) -> Vec<Partition> {
    let parts = alpha.parts();
    let has = |x: usize| parts.contains(&x);
    let mut out = BTreeSet::new();
    let mut distinct: Vec<usize> = parts.to_vec();
    distinct.dedup();
    distinct.push(0);
    for a in distinct {
        if a % h == 0 || !has(a + h) {
            let mut v = parts.to_vec();
            match v.iter().position(|&x| x == a) {
                Some(pos) => v[pos] = a + h,
                None => v.push(h),
            }
            out.insert(Partition::from_unsorted(v));
        }
    }
    for b in 1..=(h - 1) / 2 {
        if !has(b) && !has(h - b) {
            let mut v = parts.to_vec();
            v.push(b);
            v.push(h - b);
            out.insert(Partition::from_unsorted(v));
        }
    }
    out.into_iter().collect()
}

/// Every partition obtained by removing one `h`-bar.
pub fn remove_bars(alpha: &Partition, h: usize) -> Vec<Partition> {
    let parts = alpha.parts();
    let has = |x: usize| parts.contains(&x);
    let mut out = BTreeSet::new();
    let mut distinct: Vec<usize> = parts.to_vec();
    distinct.dedup();
    for &a in &distinct {
        if a >= h && (a % h == 0 || !has(a - h)) {
            let mut v = parts.to_vec();
            let pos = v.iter().position(|&x| x == a).unwrap();
            v[pos] = a - h;
            out.insert(Partition::from_unsorted(v));
        }
    }
    for b in 1..=(h - 1) / 2 {
        if has(b) && has(h - b) {
            let mut v = parts.to_vec();
            v.remove(v.iter().position(|&x| x == b).unwrap());
            v.remove(v.iter().position(|&x| x == h - b).unwrap());
            out.insert(Partition::from_unsorted(v));
        }
    }
    out.into_iter().collect()
}

/// The `h`-strict partitions with bar-core `core` and bar-weight `w`, in
/// increasing lexicographic order.
pub fn enumerate_bar_weight_space(core: &Partition, w: usize, h: usize) -> Result<Vec<Partition>> {
    if !is_bar_core(core, h)? {
        return Err(Error::NotBarCore { partition: core.to_string(), h });
    }
    let mut level: BTreeSet<Partition> = BTreeSet::from([core.clone()]);
    for _ in 0..w {
        level = level.iter().flat_map(|p| add_bars(p, h)).collect();
    }
    Ok(level.into_iter().collect())
}

/// Per-row choices for adding (`adding = true`) or removing nodes of
/// bar-residue `i`: the admissible new part values for every row, including
/// one fresh row when adding.
fn row_options(alpha: &Partition, i: usize, h: usize, adding: bool) -> Vec<Vec<usize>> {
    let rows = if adding { alpha.len() + 1 } else { alpha.len() };
    (0..rows)
        .map(|r| {
            let p = alpha.part(r);
            let mut opts = vec![p];
            if adding {
                let mut c = p + 1;
                while bar_residue(c, h) == i {
                    opts.push(c);
                    c += 1;
                }
            } else {
                let mut c = p;
                while c >= 1 && bar_residue(c, h) == i {
                    opts.push(c - 1);
                    c -= 1;
                }
            }
            opts
        })
        .collect()
}

fn compatible(upper: usize, lower: usize, h: usize) -> bool {
    upper > lower || (upper == lower && (lower == 0 || lower.is_multiple_of(h)))
}

/// For every row and option, whether some complete choice through it gives
/// an `h`-strict partition.
fn feasible_options(options: &[Vec<usize>], h: usize) -> Vec<Vec<bool>> {
    let rows = options.len();
    let mut fwd: Vec<Vec<bool>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let row: Vec<bool> = options[r]
            .iter()
            .map(|&v| r == 0 || options[r - 1].iter().zip(&fwd[r - 1]).any(|(&u, &ok)| ok && compatible(u, v, h)))
            .collect();
        fwd.push(row);
    }
    let mut bwd: Vec<Vec<bool>> = vec![Vec::new(); rows];
    for r in (0..rows).rev() {
        bwd[r] = options[r]
            .iter()
            .map(|&v| {
                r + 1 == rows || options[r + 1].iter().zip(&bwd[r + 1]).any(|(&u, &ok)| ok && compatible(v, u, h))
            })
            .collect();
    }
    (0..rows).map(|r| fwd[r].iter().zip(&bwd[r]).map(|(a, b)| *a && *b).collect()).collect()
}

/// The `i`-bar-addable and `i`-bar-removable nodes of `alpha`, each ordered
/// left to right by column.
pub fn bar_addable_removable(alpha: &Partition, i: usize, h: usize) -> Result<(Vec<Node>, Vec<Node>)> {
    require_h_strict(alpha, h)?;
    let mut addable = Vec::new();
    let opts = row_options(alpha, i, h, true);
    let ok = feasible_options(&opts, h);
    for (r, row) in opts.iter().enumerate() {
        let reach = row.iter().zip(&ok[r]).filter(|(_, &f)| f).map(|(&v, _)| v).max().unwrap_or(0);
        for c in alpha.part(r) + 1..=reach {
            addable.push(Node::new(r + 1, c));
        }
    }
    let mut removable = Vec::new();
    let opts = row_options(alpha, i, h, false);
    let ok = feasible_options(&opts, h);
    for (r, row) in opts.iter().enumerate() {
        let reach = row.iter().zip(&ok[r]).filter(|(_, &f)| f).map(|(&v, _)| v).min().unwrap_or(alpha.part(r));
        for c in reach + 1..=alpha.part(r) {
            removable.push(Node::new(r + 1, c));
        }
    }
    addable.sort_by_key(|n| (n.col, n.row));
    removable.sort_by_key(|n| (n.col, n.row));
    Ok((addable, removable))
}

/// All `h`-strict `beta` obtained from `alpha` by adding exactly `r` nodes of
/// bar-residue `i`, with the added nodes.
pub fn bar_additions(alpha: &Partition, i: usize, r: usize, h: usize) -> Result<Vec<(Partition, Vec<Node>)>> {
    Ok(bar_moves(alpha, i, r, h, true)?
        .into_iter()
        .map(|b| {
            let nodes = b.skew_nodes(alpha);
            (b, nodes)
        })
        .collect())
}

/// All `h`-strict partitions obtained from `alpha` by removing exactly `r`
/// nodes of bar-residue `i`.
pub fn bar_removals(alpha: &Partition, i: usize, r: usize, h: usize) -> Result<Vec<Partition>> {
    bar_moves(alpha, i, r, h, false)
}

fn bar_moves(alpha: &Partition, i: usize, r: usize, h: usize, adding: bool) -> Result<Vec<Partition>> {
    require_h_strict(alpha, h)?;
    let opts = row_options(alpha, i, h, adding);
    let ok = feasible_options(&opts, h);
    let pruned: Vec<Vec<usize>> =
        opts.iter().zip(&ok).map(|(o, f)| o.iter().zip(f).filter(|(_, &b)| b).map(|(&v, _)| v).collect()).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(pruned.len());
    fn rec(
        alpha: &Partition,
        pruned: &[Vec<usize>],
        h: usize,
        remaining: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let row = chosen.len();
        if row == pruned.len() {
            if remaining == 0 {
                out.push(Partition::from_unsorted(chosen.clone()));
            }
            return;
        }
        for &v in &pruned[row] {
            let moved = v.abs_diff(alpha.part(row));
            if moved > remaining {
                continue;
            }
            if row > 0 && !compatible(chosen[row - 1], v, h) {
                continue;
            }
            chosen.push(v);
            rec(alpha, pruned, h, remaining - moved, chosen, out);
            chosen.pop();
        }
    }
    if pruned.is_empty() {
        if r == 0 {
            out.push(alpha.clone());
        }
        return Ok(out);
    }
    rec(alpha, &pruned, h, r, &mut chosen, &mut out);
    Ok(out)
}
