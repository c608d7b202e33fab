//! Integer partitions, Young diagram nodes and residues.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::report::Report;

/// A partition stored as its non-zero parts in weakly decreasing order.
///
/// The derived ordering is lexicographic on the parts, which refines the
/// dominance order: if `a` strictly dominates `b` then `a > b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A node `(row, col)` of a Young diagram, both 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }

    /// The residue `(col - row) mod m`.
    pub fn residue(&self, m: usize) -> usize {
        residue(*self, m)
    }
}

/// The residue `(col - row) mod m` of a node.
pub fn residue(node: Node, m: usize) -> usize {
    (node.col as i64 - node.row as i64).rem_euclid(m as i64) as usize
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from weakly decreasing parts; trailing zeros are
    /// dropped, any other violation is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary non-negative integers into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `r` counted from 0, or 0 beyond the length.
    pub fn part(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    /// Number of parts equal to `k` (k ≥ 1).
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        let parts = (1..=width).map(|c| self.parts.iter().take_while(|&&p| p >= c).count()).collect();
        Partition { parts }
    }

    /// Length of column `c` (1-indexed), i.e. the conjugate's part `c`.
    pub fn column_length(&self, c: usize) -> usize {
        if c == 0 {
            return usize::MAX;
        }
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    /// True when `self` dominates `other`: equal sizes and every prefix sum
    /// of `self` is at least the corresponding prefix sum of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for r in 0..n {
            a += self.part(r);
            b += other.part(r);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All nodes of the diagram, row by row.
    pub fn nodes(&self) -> Vec<Node> {
        self.parts.iter().enumerate().flat_map(|(r, &p)| (1..=p).map(move |c| Node::new(r + 1, c))).collect()
    }

    /// Nodes of `self` not in `inner`; requires `inner ⊆ self`.
    pub fn skew_nodes(&self, inner: &Partition) -> Vec<Node> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (inner.part(r) + 1..=p).map(move |c| Node::new(r + 1, c)))
            .collect()
    }

    /// All addable nodes, ordered left to right by column.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for r in (0..=self.len()).rev() {
            if r == 0 || self.part(r - 1) > self.part(r) {
                out.push(Node::new(r + 1, self.part(r) + 1));
            }
        }
        out
    }

    /// All removable nodes, ordered left to right by column.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for r in (0..self.len()).rev() {
            if self.part(r) > self.part(r + 1) {
                out.push(Node::new(r + 1, self.part(r)));
            }
        }
        out
    }

    /// The addable and removable nodes of residue `i` modulo `m`, each list
    /// ordered left to right by column.
    pub fn addable_removable(&self, i: usize, m: usize) -> (Vec<Node>, Vec<Node>) {
        let keep = |v: Vec<Node>| v.into_iter().filter(|n| n.residue(m) == i % m).collect();
        (keep(self.addable_nodes()), keep(self.removable_nodes()))
    }

    /// Adds the given nodes, which must form a skew shape on top of `self`.
    pub fn with_nodes(&self, nodes: &[Node]) -> Result<Partition> {
        let rows = nodes.iter().map(|n| n.row).max().unwrap_or(0).max(self.len());
        let mut parts: Vec<usize> = (0..rows).map(|r| self.part(r)).collect();
        let mut sorted = nodes.to_vec();
        sorted.sort_by_key(|n| (n.row, n.col));
        for n in sorted {
            if parts[n.row - 1] + 1 != n.col {
                return Err(Error::InvalidPartition(format!("node ({},{}) is not addable", n.row, n.col)));
            }
            parts[n.row - 1] += 1;
        }
        Partition::new(parts)
    }

    /// Removes the given nodes, which must leave a partition.
    pub fn without_nodes(&self, nodes: &[Node]) -> Result<Partition> {
        let mut parts = self.parts.clone();
        let mut sorted = nodes.to_vec();
        sorted.sort_by_key(|n| (n.row, std::cmp::Reverse(n.col)));
        for n in sorted {
            if n.row == 0 || n.row > parts.len() || parts[n.row - 1] != n.col {
                return Err(Error::InvalidPartition(format!("node ({},{}) is not removable", n.row, n.col)));
            }
            parts[n.row - 1] -= 1;
        }
        Partition::new(parts)
    }

    /// `self` with `k` appended as a new last part (requires `k ≤` last part).
    pub fn with_last_part(&self, k: usize) -> Result<Partition> {
        let mut parts = self.parts.clone();
        parts.push(k);
        Partition::new(parts)
    }

    /// `self` with its last part removed.
    pub fn without_last_part(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.pop();
        Partition { parts }
    }

    /// `self` with every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        Partition::from_unsorted(self.parts.iter().map(|p| p * k).collect())
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// True when consecutive parts differ by less than `m` (and the last
    /// part is below `m`).
    pub fn is_restricted(&self, m: usize) -> bool {
        (0..self.len()).all(|r| self.part(r) - self.part(r + 1) < m)
    }

    /// Exponential notation such as `(2^2,1^11)`; `∅` for the empty
    /// partition.
    pub fn compact(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let mut groups: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.len() {
            let p = self.parts[i];
            let mut j = i;
            while j < self.len() && self.parts[j] == p {
                j += 1;
            }
            groups.push(if j - i == 1 { p.to_string() } else { format!("{p}^{}", j - i) });
            i = j;
        }
        format!("({})", groups.join(","))
    }
}

/// If `mu` is obtained from `lambda` by adding nodes in distinct columns,
/// returns the number of nodes added.
pub fn adds_horizontal_strip(lambda: &Partition, mu: &Partition) -> Option<usize> {
    if !mu.contains(lambda) {
        return None;
    }
    // Distinct columns means row r+1 of mu ends no later than row r of lambda.
    if (0..mu.len()).all(|r| mu.part(r + 1) <= lambda.part(r)) {
        Some(mu.size() - lambda.size())
    } else {
        None
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions obtained from `lambda` by adding `r` nodes in distinct
/// columns.
pub fn horizontal_strips_above(lambda: &Partition, r: usize) -> Vec<Partition> {
    fn rec(lambda: &Partition, row: usize, remaining: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > lambda.len() {
            if remaining == 0 {
                out.push(Partition::new(parts.clone()).unwrap());
            }
            return;
        }
        let cap = if row == 0 { remaining } else { (lambda.part(row - 1) - lambda.part(row)).min(remaining) };
        for add in 0..=cap {
            parts.push(lambda.part(row) + add);
            rec(lambda, row + 1, remaining - add, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, r, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions obtained from `mu` by removing `r` nodes in distinct
/// columns.
pub fn horizontal_strips_below(mu: &Partition, r: usize) -> Vec<Partition> {
    fn rec(mu: &Partition, row: usize, remaining: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == mu.len() {
            if remaining == 0 {
                out.push(Partition::new(parts.clone()).unwrap());
            }
            return;
        }
        let cap = (mu.part(row) - mu.part(row + 1)).min(remaining);
        for take in 0..=cap {
            parts.push(mu.part(row) - take);
            rec(mu, row + 1, remaining - take, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    rec(mu, 0, r, &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Comma-separated parts, with `p^k` meaning `k` copies of `p`. The empty
/// string (or `()`, `∅`) is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(trimmed).trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Partition::empty());
        }
        let bad = || Error::Parse(format!("malformed partition `{s}`"));
        let mut parts = Vec::new();
        for token in inner.split(',') {
            let token = token.trim();
            match token.split_once('^') {
                Some((p, k)) => {
                    let p: usize = p.trim().parse().map_err(|_| bad())?;
                    let k: usize = k.trim().parse().map_err(|_| bad())?;
                    parts.extend(std::iter::repeat_n(p, k));
                }
                None => parts.push(token.parse().map_err(|_| bad())?),
            }
        }
        Partition::new(parts)
    }
}

/// For every non-empty `pi` with `|pi| ≤ max_size`, last part `k` and
/// truncation `pi⁻`: whenever `sigma` dominates `pi⁻` and `rho` adds a
/// horizontal `k`-strip to `sigma`, `rho` dominates `pi`, with equality only
/// for `sigma = pi⁻`.
pub fn verify_carlem(max_size: usize) -> Report {
    let mut report = Report::new("strips above dominating partitions dominate");
    for n in 1..=max_size {
        for pi in partitions_of(n) {
            let k = pi.parts()[pi.len() - 1];
            let trunc = pi.without_last_part();
            for sigma in partitions_of(n - k).into_iter().filter(|s| s.dominates(&trunc)) {
                for rho in horizontal_strips_above(&sigma, k) {
                    let ok = rho.dominates(&pi) && (rho != pi || sigma == trunc);
                    report.check(ok, || format!("pi={pi:?} sigma={sigma:?} rho={rho:?}"));
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn strip_dominance_small() {
        let r = verify_carlem(6);
        assert!(r.passed() && r.checked > 0, "{r}");
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("3,1").parts(), &[3, 1]);
        assert_eq!(p("2^3,1"), p("2,2,2,1"));
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("(4,3,1^8)").len(), 10);
        assert_eq!(p("2,2,1,1").to_string(), "2,2,1,1");
        assert_eq!(p("2,2,1^11").compact(), "(2^2,1^11)");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("2,2,1,1").conjugate(), p("4,2"));
    }

    #[test]
    fn dominance() {
        assert!(p("3,1").dominates(&p("2,2")));
        assert!(!p("2,2").dominates(&p("3,1")));
        assert!(p("2,2").dominates(&p("2,2")));
        assert!(!p("3").dominates(&p("2")));
    }

    #[test]
    fn residues() {
        assert_eq!(residue(Node::new(1, 1), 3), 0);
        assert_eq!(residue(Node::new(3, 4), 3), 1);
        assert_eq!(residue(Node::new(6, 1), 3), 1);
    }

    #[test]
    fn residue_nodes() {
        let (add, rem) = p("6,5,4,1,1").addable_removable(1, 3);
        assert_eq!(add, vec![Node::new(6, 1), Node::new(4, 2), Node::new(2, 6)]);
        assert_eq!(rem, vec![Node::new(3, 4)]);
        let (add, rem) = Partition::empty().addable_removable(0, 4);
        assert_eq!(add, vec![Node::new(1, 1)]);
        assert!(rem.is_empty());
        let (add, rem) = p("2").addable_removable(0, 2);
        assert_eq!(add, vec![Node::new(1, 3)]);
        assert!(rem.is_empty());
    }

    #[test]
    fn strips() {
        assert_eq!(adds_horizontal_strip(&p("3,1"), &p("3,1")), Some(0));
        assert_eq!(adds_horizontal_strip(&p("2"), &p("3,1")), Some(2));
        assert_eq!(adds_horizontal_strip(&p("2"), &p("2,2")), Some(2));
        assert_eq!(adds_horizontal_strip(&p("1"), &p("1,1,1")), None);
        assert_eq!(horizontal_strips_above(&p("1"), 1), vec![p("1,1"), p("2")]);
        assert_eq!(horizontal_strips_below(&p("2,1"), 1), vec![p("1,1"), p("2")]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        let ps = partitions_of(6);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn node_editing() {
        let lam = p("6,5,4,1,1");
        let mu = lam.with_nodes(&[Node::new(2, 6), Node::new(4, 2)]).unwrap();
        assert_eq!(mu, p("6,6,4,2,1"));
        assert_eq!(mu.without_nodes(&[Node::new(2, 6), Node::new(4, 2)]).unwrap(), lam);
        assert!(lam.with_nodes(&[Node::new(3, 6)]).is_err());
        assert_eq!(mu.skew_nodes(&lam), vec![Node::new(2, 6), Node::new(4, 2)]);
    }

    pub(crate) fn arb_partition(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
        prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn conjugation_is_involution(lam in arb_partition(8, 8)) {
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().size(), lam.size());
        }

        #[test]
        fn conjugation_reverses_dominance(a in arb_partition(5, 5), b in arb_partition(5, 5)) {
            prop_assert_eq!(a.dominates(&b), b.conjugate().dominates(&a.conjugate()));
        }

        #[test]
        fn lex_refines_dominance(a in arb_partition(6, 6), b in arb_partition(6, 6)) {
            if a.dominates(&b) {
                prop_assert!(a >= b);
            }
        }

        #[test]
        fn text_round_trip(lam in arb_partition(8, 12)) {
            prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam.clone());
            prop_assert_eq!(lam.compact().replace('∅', "").parse::<Partition>().unwrap(), lam);
        }
    }
}
