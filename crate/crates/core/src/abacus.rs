//! Beta-sets, abacus displays, cores, weights and weight spaces.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::partition::{horizontal_strips_above, partitions_of, Partition};
use crate::report::Report;

/// The `s`-bead beta-set `{λ_r + s - r}` in strictly decreasing order.
pub fn beta_set(lambda: &Partition, s: usize) -> Result<Vec<usize>> {
    if s < lambda.len() {
        return Err(Error::Precondition(format!("{s} beads cannot display {lambda:?} of length {}", lambda.len())));
    }
    Ok((1..=s).map(|r| lambda.part(r - 1) + s - r).collect())
}

/// Recovers a partition from any finite set of distinct non-negative
/// positions.
pub fn from_beta_set(beads: &[usize]) -> Partition {
    let mut b = beads.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let s = b.len();
    let parts = b.iter().enumerate().map(|(r, &x)| x + r + 1 - s).collect();
    Partition::from_unsorted(parts)
}

/// An `m`-runner abacus display: bead positions, with position `b` lying on
/// runner `b mod m` in row `b / m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusDisplay {
    m: usize,
    beads: BTreeSet<usize>,
}

impl AbacusDisplay {
    pub fn new(lambda: &Partition, m: usize, s: usize) -> Result<Self> {
        check_modulus(m)?;
        Ok(AbacusDisplay { m, beads: beta_set(lambda, s)?.into_iter().collect() })
    }

    pub fn from_positions(m: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        AbacusDisplay { m, beads: positions.into_iter().collect() }
    }

    pub fn runners(&self) -> usize {
        self.m
    }

    pub fn bead_count(&self) -> usize {
        self.beads.len()
    }

    pub fn is_occupied(&self, b: usize) -> bool {
        self.beads.contains(&b)
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.beads.iter().copied()
    }

    /// Bead count on each runner.
    pub fn runner_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.m];
        for &b in &self.beads {
            counts[b % self.m] += 1;
        }
        counts
    }

    /// Rows of the beads on runner `i`, in increasing order.
    pub fn runner_rows(&self, i: usize) -> Vec<usize> {
        self.beads.iter().filter(|&&b| b % self.m == i).map(|&b| b / self.m).collect()
    }

    /// Lowest empty position not on runner 0.
    pub fn first_gap_off_runner_zero(&self) -> usize {
        (0..).find(|b| b % self.m != 0 && !self.beads.contains(b)).unwrap()
    }

    pub fn partition(&self) -> Partition {
        from_beta_set(&self.beads.iter().copied().collect::<Vec<_>>())
    }

    /// Slides every bead up its runner; the result displays the core.
    pub fn slid_up(&self) -> AbacusDisplay {
        let counts = self.runner_counts();
        let beads = (0..self.m).flat_map(|i| (0..counts[i]).map(move |k| i + k * self.m)).collect();
        AbacusDisplay { m: self.m, beads }
    }

    /// Number of single-row bead moves needed to slide all beads up.
    pub fn weight(&self) -> usize {
        let rows: usize = self.beads.iter().map(|b| b / self.m).sum();
        let top: usize = self.runner_counts().iter().map(|&c| c * c.saturating_sub(1) / 2).sum();
        rows - top
    }
}

pub(crate) fn check_modulus(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidModulus(format!("modulus must be at least 2, got {m}")));
    }
    Ok(())
}

/// The `m`-core and `m`-weight of `lambda`.
pub fn m_core_weight(lambda: &Partition, m: usize) -> Result<(Partition, usize)> {
    let display = AbacusDisplay::new(lambda, m, lambda.len())?;
    Ok((display.slid_up().partition(), display.weight()))
}

pub fn is_m_core(lambda: &Partition, m: usize) -> Result<bool> {
    Ok(m_core_weight(lambda, m)?.1 == 0)
}

/// All partitions obtained from `lambda` by adding one rim `m`-hook.
pub fn add_rim_hooks(lambda: &Partition, m: usize) -> Vec<Partition> {
    let s = lambda.len() + m;
    let beads: BTreeSet<usize> = beta_set(lambda, s).unwrap().into_iter().collect();
    let mut out: Vec<Partition> = beads
        .iter()
        .filter(|&&b| !beads.contains(&(b + m)))
        .map(|&b| {
            let moved: Vec<usize> = beads.iter().map(|&x| if x == b { b + m } else { x }).collect();
            from_beta_set(&moved)
        })
        .collect();
    out.sort();
    out
}

/// All `mu` with `B_s(mu) = B_s(lambda) ∪ A \ (A - 1)` for some set `A` of
/// `r` positive positions disjoint from `B_s(lambda)`, where `s` is large.
/// This is the beta-set description of adding a horizontal `r`-strip.
pub fn strips_by_beta_set(lambda: &Partition, r: usize) -> Vec<Partition> {
    let s = lambda.len() + r + 1;
    let beads: BTreeSet<usize> = beta_set(lambda, s).unwrap().into_iter().collect();
    let top = beads.iter().next_back().copied().unwrap_or(0) + r;
    let gaps: Vec<usize> = (1..=top).filter(|a| !beads.contains(a)).collect();
    let mut out = BTreeSet::new();
    let mut chosen = Vec::with_capacity(r);
    fn rec(
        gaps: &[usize],
        start: usize,
        r: usize,
        chosen: &mut Vec<usize>,
        beads: &BTreeSet<usize>,
        out: &mut BTreeSet<Partition>,
    ) {
        if chosen.len() == r {
            let mut set: BTreeSet<usize> = beads.union(&chosen.iter().copied().collect()).copied().collect();
            for a in chosen.iter() {
                set.remove(&(a - 1));
            }
            if set.len() == beads.len() {
                out.insert(from_beta_set(&set.into_iter().collect::<Vec<_>>()));
            }
            return;
        }
        for k in start..gaps.len() {
            chosen.push(gaps[k]);
            rec(gaps, k + 1, r, chosen, beads, out);
            chosen.pop();
        }
    }
    rec(&gaps, 0, r, &mut chosen, &beads, &mut out);
    out.into_iter().collect()
}

/// The partitions with `m`-core `core` and `m`-weight `w`, in increasing
/// lexicographic order (least dominant first).
pub fn enumerate_weight_space(core: &Partition, w: usize, m: usize) -> Result<Vec<Partition>> {
    check_modulus(m)?;
    if !is_m_core(core, m)? {
        return Err(Error::NotCore { partition: core.to_string(), modulus: m });
    }
    let mut level: BTreeSet<Partition> = BTreeSet::from([core.clone()]);
    for _ in 0..w {
        level = level.iter().flat_map(|p| add_rim_hooks(p, m)).collect();
    }
    Ok(level.into_iter().collect())
}

/// All `mu` obtained from `lambda` by adding a part `a` for each `a` in a
/// set `A` of `r` positive integers and then removing a part `a - 1` for
/// each `a` in `A`.
pub fn strips_by_parts(lambda: &Partition, r: usize) -> Vec<Partition> {
    let top = lambda.first_part() + r;
    let mut out = BTreeSet::new();
    crate::fock::a1::for_each_subset(top, r, &mut |chosen| {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in lambda.parts() {
            *counts.entry(p).or_insert(0) += 1;
        }
        for &k in chosen {
            *counts.entry(k + 1).or_insert(0) += 1;
        }
        for &k in chosen {
            if k == 0 {
                continue;
            }
            match counts.get_mut(&k) {
                Some(c) if *c > 0 => *c -= 1,
                _ => return,
            }
        }
        let parts = counts.into_iter().flat_map(|(p, c)| std::iter::repeat_n(p, c)).collect();
        out.insert(Partition::from_unsorted(parts));
    });
    out.into_iter().collect()
}

/// The diagram, multiset and beta-set descriptions of adding a horizontal
/// `r`-strip agree, for every `|lambda| ≤ max_size` and `r ≤ max_r`.
pub fn verify_carbeta(max_size: usize, max_r: usize) -> Report {
    let mut report = Report::new("horizontal strip descriptions agree");
    for n in 0..=max_size {
        for lambda in partitions_of(n) {
            for r in 0..=max_r {
                let diagram = horizontal_strips_above(&lambda, r);
                report.check(strips_by_parts(&lambda, r) == diagram, || {
                    format!("parts description at {lambda:?}, r={r}")
                });
                report.check(strips_by_beta_set(&lambda, r) == diagram, || {
                    format!("beta-set description at {lambda:?}, r={r}")
                });
            }
        }
    }
    report
}
