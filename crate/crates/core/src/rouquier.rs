//! Rouquier cores and bar-cores, their runner quotients, and the closed
//! formulas for canonical basis coefficients on Rouquier weight spaces.

use std::collections::BTreeMap;
use std::fmt;

use crate::abacus::{enumerate_weight_space, from_beta_set, is_m_core, m_core_weight, AbacusDisplay};
use crate::compare::NiceContext;
use crate::error::{Error, Result};
use crate::fock::a1::llt_canonical_basis;
use crate::fock::a2::canonical_basis_a2;
use crate::hstrict::{bar_core_weight, is_bar_core, is_restricted_h, BarAbacusDisplay};
use crate::partition::{partitions_of, Partition};
use crate::qpoly::LaurentPoly;
use crate::report::Report;
use crate::symfunc::{kostka_matrix, lr_coefficient};

/// Ordered `m`-quotient `(λ(0), …, λ(m-1))`, runners indexed on the display
/// in which the core is Rouquier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MQuotient {
    pub components: Vec<Partition>,
}

/// Bar-quotient `(α(0), …, α(n))`: `α(0)` collects the parts divisible by
/// `h`, the others come from runners `1..=n` of the bar-abacus.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HBarQuotient {
    pub components: Vec<Partition>,
}

fn total_size(components: &[Partition]) -> usize {
    components.iter().map(Partition::size).sum()
}

fn write_components(f: &mut fmt::Formatter<'_>, components: &[Partition]) -> fmt::Result {
    write!(f, "(")?;
    for (k, p) in components.iter().enumerate() {
        if k > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{p:?}")?;
    }
    write!(f, ")")
}

impl MQuotient {
    pub fn size(&self) -> usize {
        total_size(&self.components)
    }
}

impl HBarQuotient {
    pub fn size(&self) -> usize {
        total_size(&self.components)
    }
}

impl fmt::Display for MQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_components(f, &self.components)
    }
}

impl fmt::Display for HBarQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_components(f, &self.components)
    }
}

fn counts_increase_by(counts: &[usize], step: usize) -> bool {
    counts.windows(2).all(|c| c[1] >= c[0] + step)
}

/// Bead count of a display of the core `nu` whose runner populations grow
/// by at least `w - 1` per runner, raised so every runner holds at least
/// `w` beads. `None` when `nu` is not `w`-Rouquier.
fn rouquier_bead_count(nu: &Partition, w: usize, m: usize) -> Result<Option<usize>> {
    let w = w.max(1);
    for s in nu.len()..nu.len() + m {
        let counts = AbacusDisplay::new(nu, m, s)?.runner_counts();
        if counts_increase_by(&counts, w - 1) {
            let lowest = counts.iter().copied().min().unwrap_or(0);
            return Ok(Some(s + w.saturating_sub(lowest) * m));
        }
    }
    Ok(None)
}

pub fn is_w_rouquier_core(nu: &Partition, w: usize, m: usize) -> Result<bool> {
    if !is_m_core(nu, m)? {
        return Err(Error::NotCore { partition: nu.to_string(), modulus: m });
    }
    Ok(rouquier_bead_count(nu, w, m)?.is_some())
}

fn bar_runner_counts(display: &BarAbacusDisplay, h: usize) -> Vec<usize> {
    (1..=(h - 1) / 2).map(|i| display.runner_count(i)).collect()
}

pub fn is_w_rouquier_bar_core(gamma: &Partition, w: usize, h: usize) -> Result<bool> {
    if !is_bar_core(gamma, h)? {
        return Err(Error::NotBarCore { partition: gamma.to_string(), h });
    }
    let counts = bar_runner_counts(&BarAbacusDisplay::new(gamma, h)?, h);
    Ok(counts.first().is_some_and(|&c| c >= w) && counts_increase_by(&counts, w.saturating_sub(1)))
}

/// The `m`-core with `i(w-1)` beads on runner `i`, slid up.
pub fn minimal_rouquier_core(w: usize, m: usize) -> Result<Partition> {
    crate::abacus::check_modulus(m)?;
    let step = w.saturating_sub(1);
    let beads: Vec<usize> = (0..m).flat_map(|i| (0..i * step).map(move |k| i + k * m)).collect();
    Ok(from_beta_set(&beads))
}

/// The `h`-bar-core with `w + (i-1)(w-1)` beads on runner `i` for
/// `1 ≤ i ≤ n` and nothing elsewhere.
pub fn minimal_rouquier_bar_core(w: usize, h: usize) -> Result<Partition> {
    if h < 3 || h.is_multiple_of(2) {
        return Err(Error::InvalidModulus(format!("h must be odd and at least 3, got {h}")));
    }
    let step = w.saturating_sub(1);
    let parts = (1..=(h - 1) / 2).flat_map(|i| (0..w + (i - 1) * step).map(move |k| i + k * h));
    Ok(Partition::from_unsorted(parts.collect()))
}

fn require_rouquier(nu: &Partition, w: usize, m: usize) -> Result<usize> {
    rouquier_bead_count(nu, w, m)?.ok_or_else(|| Error::NotRouquier { partition: nu.to_string(), w, modulus: m })
}

/// Gaps above each bead of one runner, lowest bead first.
fn runner_gaps(rows: &[usize]) -> Partition {
    let c = rows.len();
    Partition::from_unsorted(rows.iter().rev().enumerate().map(|(k, &row)| row - (c - 1 - k)).collect())
}

fn quotient_on(lambda: &Partition, m: usize, s: usize) -> Result<MQuotient> {
    let display = AbacusDisplay::new(lambda, m, s)?;
    Ok(MQuotient { components: (0..m).map(|i| runner_gaps(&display.runner_rows(i))).collect() })
}

fn require_core(lambda: &Partition, nu: &Partition, m: usize) -> Result<usize> {
    let (core, w) = m_core_weight(lambda, m)?;
    if core != *nu {
        return Err(Error::Precondition(format!("{lambda:?} has {m}-core {core:?}, not {nu:?}")));
    }
    Ok(w)
}

pub fn m_quotient(lambda: &Partition, nu: &Partition, m: usize) -> Result<MQuotient> {
    let w = require_core(lambda, nu, m)?;
    let s = require_rouquier(nu, w, m)?;
    quotient_on(lambda, m, s.max(lambda.len()))
}

/// The partition with core `nu` and the given ordered quotient.
pub fn from_m_quotient(nu: &Partition, quotient: &MQuotient, m: usize) -> Result<Partition> {
    if quotient.components.len() != m {
        return Err(Error::Precondition(format!("a {m}-quotient needs {m} components")));
    }
    let w = quotient.size();
    let s = require_rouquier(nu, w, m)?;
    let counts = AbacusDisplay::new(nu, m, s)?.runner_counts();
    let mut beads = Vec::with_capacity(s);
    for (i, pi) in quotient.components.iter().enumerate() {
        let c = counts[i];
        if pi.len() > c {
            return Err(Error::Precondition(format!("runner {i} has {c} beads, too few for {pi:?}")));
        }
        beads.extend((1..=c).map(|r| (pi.part(r - 1) + c - r) * m + i));
    }
    Ok(from_beta_set(&beads))
}

pub fn h_bar_quotient(alpha: &Partition, gamma: &Partition, h: usize) -> Result<HBarQuotient> {
    let (core, w) = bar_core_weight(alpha, h)?;
    if core != *gamma {
        return Err(Error::Precondition(format!("{alpha:?} has {h}-bar-core {core:?}, not {gamma:?}")));
    }
    if !is_w_rouquier_bar_core(gamma, w, h)? {
        return Err(Error::NotRouquier { partition: gamma.to_string(), w, modulus: h });
    }
    let n = (h - 1) / 2;
    if let Some(&p) = alpha.parts().iter().find(|&&p| p % h > n) {
        return Err(Error::Domain {
            map: "h_bar_quotient",
            detail: format!("{alpha:?} has part {p} on a high runner"),
        });
    }
    let display = BarAbacusDisplay::new(alpha, h)?;
    let zero = Partition::from_unsorted(alpha.parts().iter().filter(|&&p| p % h == 0).map(|&p| p / h).collect());
    let mut components = vec![zero];
    components.extend((1..=n).map(|i| runner_gaps(&display.runner_rows(i))));
    Ok(HBarQuotient { components })
}

/// Sums `∏ c^{top(i)}_{σ(i)τ(i)} c^{bottom(i-1)}_{σ(i-1)τ(i)'}` over
/// `i = 1..=last` with `σ(last) = ∅`, starting from weights on `σ(0)`.
fn lr_chain(start: BTreeMap<Partition, LaurentPoly>, top: &[Partition], bottom: &[Partition]) -> LaurentPoly {
    let last = top.len() - 1;
    let mut state = start;
    for i in 1..=last {
        let mut next: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
        for (sigma_prev, acc) in &state {
            let below = &bottom[i - 1];
            let Some(t) = below.size().checked_sub(sigma_prev.size()) else { continue };
            for tau in partitions_of(t) {
                let c2 = lr_coefficient(below, sigma_prev, &tau.conjugate());
                if c2 == 0 {
                    continue;
                }
                let Some(s) = top[i].size().checked_sub(t) else { continue };
                let sigmas = if i == last {
                    if s != 0 {
                        continue;
                    }
                    vec![Partition::empty()]
                } else {
                    partitions_of(s)
                };
                for sigma in sigmas {
                    let c1 = lr_coefficient(&top[i], &sigma, &tau);
                    if c1 != 0 {
                        let term = acc * (c1 * c2) as i64;
                        *next.entry(sigma).or_insert_with(LaurentPoly::zero) += &term;
                    }
                }
            }
        }
        state = next;
    }
    state.remove(&Partition::empty()).unwrap_or_else(LaurentPoly::zero)
}

fn weighted_shift(top: &[Partition], bottom: &[Partition]) -> i32 {
    let e: i64 = (1..top.len()).map(|i| i as i64 * (top[i].size() as i64 - bottom[i].size() as i64)).sum();
    2 * e as i32
}

/// Canonical basis coefficient `d_{λμ}` on the weight space of a Rouquier
/// `m`-core, computed from the quotients alone.
pub fn ct_formula(lambda: &Partition, mu: &Partition, nu: &Partition, m: usize) -> Result<LaurentPoly> {
    if !mu.is_restricted(m) {
        return Err(Error::NotRestricted { partition: mu.to_string(), modulus: m });
    }
    let lq = m_quotient(lambda, nu, m)?.components;
    let mq = m_quotient(mu, nu, m)?.components;
    if lq.iter().map(Partition::size).sum::<usize>() != mq.iter().map(Partition::size).sum::<usize>() {
        return Err(Error::Precondition(format!("{lambda:?} and {mu:?} have different weights")));
    }
    let start = BTreeMap::from([(lq[0].clone(), LaurentPoly::one())]);
    Ok(lr_chain(start, &lq, &mq).shift(weighted_shift(&lq, &mq)))
}

/// Canonical basis coefficient `ď_{αβ}` on the weight space of a Rouquier
/// `h`-bar-core, computed from the bar-quotients alone.
pub fn mainrouq_formula(alpha: &Partition, beta: &Partition, gamma: &Partition, h: usize) -> Result<LaurentPoly> {
    if !is_restricted_h(beta, h) {
        return Err(Error::NotRestricted { partition: beta.to_string(), modulus: h });
    }
    let aq = h_bar_quotient(alpha, gamma, h)?.components;
    let bq = h_bar_quotient(beta, gamma, h)?.components;
    if total_size(&aq) != total_size(&bq) {
        return Err(Error::Precondition(format!("{alpha:?} and {beta:?} have different weights")));
    }
    let d = aq[0].size();
    let kostka = kostka_matrix(d);
    let start: BTreeMap<Partition, LaurentPoly> = partitions_of(d)
        .into_iter()
        .map(|sigma| {
            let c = kostka.kinv(&aq[0], &sigma).subst_t();
            (sigma, c)
        })
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(lr_chain(start, &aq, &bq).shift(weighted_shift(&aq, &bq)))
}

/// The `q = 1` value of `mainrouq_formula`: a conjectural decomposition
/// number. `abelian_defect` records whether the bar-weight is below `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjecturalValue {
    pub value: i64,
    pub abelian_defect: bool,
}

impl fmt::Display for ConjecturalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (CONJECTURAL)", self.value)
    }
}

pub fn rock_q1(alpha: &Partition, beta: &Partition, gamma: &Partition, h: usize) -> Result<ConjecturalValue> {
    let value = mainrouq_formula(alpha, beta, gamma, h)?.eval_q1();
    let (_, w) = bar_core_weight(alpha, h)?;
    Ok(ConjecturalValue { value, abelian_defect: w < h })
}

/// Compares `ct_formula` with the computed canonical basis on every entry
/// of the weight space, and checks the quotient description of
/// restrictedness and the quotient size identity.
pub fn verify_ct(nu: &Partition, w: usize, m: usize) -> Result<Report> {
    require_rouquier(nu, w, m)?;
    let mut report = Report::new(format!("Rouquier formula m={m} w={w} core {nu}"));
    let basis = llt_canonical_basis(nu, w, m)?;
    for lambda in &basis.rows {
        let q = m_quotient(lambda, nu, m)?;
        report.check(q.size() == w, || format!("quotient {q} of {lambda:?} has size {}", q.size()));
        let last_empty = q.components[m - 1].is_empty();
        report.check(lambda.is_restricted(m) == last_empty, || {
            format!("{lambda:?} restricted={} but quotient {q}", lambda.is_restricted(m))
        });
    }
    for (c, mu) in basis.cols.iter().enumerate() {
        for (r, lambda) in basis.rows.iter().enumerate() {
            let d = ct_formula(lambda, mu, nu, m)?;
            let e = &basis.entries[r][c];
            report.check(d == *e, || format!("d({lambda:?}, {mu:?}): formula {d}, computed {e}"));
        }
    }
    Ok(report)
}

/// Bar analogue of `verify_ct`, also checking that the bar-quotient agrees
/// with the `m`-quotient of the join of `ψ` of the standard part with `α(0)`.
pub fn verify_mainrouq(gamma: &Partition, w: usize, h: usize) -> Result<Report> {
    if !is_w_rouquier_bar_core(gamma, w, h)? {
        return Err(Error::NotRouquier { partition: gamma.to_string(), w, modulus: h });
    }
    let mut report = Report::new(format!("Rouquier bar formula h={h} w={w} core {gamma}"));
    let basis = canonical_basis_a2(gamma, w, h)?;
    let ctx = NiceContext::new(h, gamma.len())?;
    let psi_core = ctx.psi(gamma)?;
    let m = ctx.m();
    for alpha in &basis.rows {
        let q = h_bar_quotient(alpha, gamma, h)?;
        report.check(q.size() == w, || format!("bar-quotient {q} of {alpha:?} has size {}", q.size()));
        let restricted = is_restricted_h(alpha, h);
        let last_empty = q.components[ctx.n()].is_empty();
        report.check(restricted == last_empty, || format!("{alpha:?} restricted={restricted} but quotient {q}"));
        let (standard, zero) = ctx.split_a2(alpha)?;
        let joined = ctx.join_a1(&ctx.psi(&standard)?, &zero)?;
        let expected = MQuotient { components: q.components.clone() };
        let ok = m_quotient(&joined, &psi_core, m).is_ok_and(|mq| mq == expected);
        report.check(ok, || format!("join of {alpha:?} does not have {m}-quotient {q}"));
    }
    for (c, beta) in basis.cols.iter().enumerate() {
        for (r, alpha) in basis.rows.iter().enumerate() {
            let d = mainrouq_formula(alpha, beta, gamma, h)?;
            let e = &basis.entries[r][c];
            report.check(d == *e, || format!("d({alpha:?}, {beta:?}): formula {d}, computed {e}"));
        }
    }
    Ok(report)
}

/// Every partition of the weight space round-trips through its quotient.
pub fn verify_quotient_round_trip(nu: &Partition, w: usize, m: usize) -> Result<Report> {
    let mut report = Report::new(format!("quotient round trip m={m} w={w} core {nu}"));
    for lambda in enumerate_weight_space(nu, w, m)? {
        let q = m_quotient(&lambda, nu, m)?;
        let back = from_m_quotient(nu, &q, m)?;
        report.check(back == lambda, || format!("{lambda:?} -> {q} -> {back:?}"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn quotient(parts: &[&str]) -> Vec<Partition> {
        parts.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn rouquier_predicates() {
        assert!(is_w_rouquier_bar_core(&p("32,27,22,17,16,12,11,7,6,2,1"), 4, 5).unwrap());
        assert!(!is_w_rouquier_bar_core(&p("32,27,22,17,16,12,11,7,6,2,1"), 5, 5).unwrap());
        assert!(is_w_rouquier_bar_core(&p("10,7,4,1"), 4, 3).unwrap());
        assert!(!is_w_rouquier_bar_core(&p("10,7,4,1"), 5, 3).unwrap());
        for m in 2..6 {
            assert!(is_w_rouquier_core(&Partition::empty(), 1, m).unwrap());
            assert!(!is_w_rouquier_core(&Partition::empty(), 2, m).unwrap());
        }
        assert!(is_w_rouquier_core(&p("2,1"), 2, 2).unwrap());
        assert!(is_w_rouquier_core(&p("9,7,5,3,3,2,2,1,1"), 4, 3).unwrap());
        assert!(matches!(is_w_rouquier_core(&p("2"), 1, 2), Err(Error::NotCore { .. })));
        assert!(matches!(is_w_rouquier_bar_core(&p("5,1"), 1, 5), Err(Error::NotBarCore { .. })));
    }

    #[test]
    fn minimal_cores_are_minimal_rouquier() {
        assert_eq!(minimal_rouquier_bar_core(4, 3).unwrap(), p("10,7,4,1"));
        assert_eq!(minimal_rouquier_core(1, 4).unwrap(), Partition::empty());
        assert_eq!(minimal_rouquier_core(2, 2).unwrap(), p("1"));
        for w in 1..5 {
            for m in 2..5 {
                let nu = minimal_rouquier_core(w, m).unwrap();
                assert!(is_w_rouquier_core(&nu, w, m).unwrap(), "{nu:?}");
            }
            for h in [3, 5, 7] {
                let gamma = minimal_rouquier_bar_core(w, h).unwrap();
                assert!(is_w_rouquier_bar_core(&gamma, w, h).unwrap(), "{gamma:?}");
                if w > 1 {
                    let smaller = gamma.without_last_part();
                    assert!(!is_bar_core(&smaller, h).unwrap() || !is_w_rouquier_bar_core(&smaller, w, h).unwrap());
                }
            }
        }
    }

    #[test]
    fn bar_quotient_example() {
        let gamma = p("32,27,22,17,16,12,11,7,6,2,1");
        let alpha = p("37,32,22,17,16,12,11,10,7,6,2,1");
        let q = h_bar_quotient(&alpha, &gamma, 5).unwrap();
        assert_eq!(q.components, quotient(&["2", "", "1,1"]));
        assert_eq!(q.to_string(), "((2), (), (1,1))");
        let empty = h_bar_quotient(&gamma, &gamma, 5).unwrap();
        assert!(empty.components.iter().all(Partition::is_empty));
    }

    #[test]
    fn quotient_to_partition_example() {
        let ctx = NiceContext::new(5, 11).unwrap();
        let psi_core = ctx.psi(&p("32,27,22,17,16,12,11,7,6,2,1")).unwrap();
        assert_eq!(psi_core, p("9,7,5,3,3,2,2,1,1"));
        let q = MQuotient { components: quotient(&["2", "", "1,1"]) };
        let lambda = from_m_quotient(&psi_core, &q, 3).unwrap();
        assert_eq!(lambda, p("12,10,5,3,3,2,2,2,2,2,1,1"));
        assert_eq!(m_quotient(&lambda, &psi_core, 3).unwrap(), q);
        let empty = m_quotient(&psi_core, &psi_core, 3).unwrap();
        assert!(empty.components.iter().all(Partition::is_empty));
    }

    #[test]
    fn core_mismatch_is_an_error() {
        let nu = minimal_rouquier_core(2, 2).unwrap();
        assert!(m_quotient(&p("2"), &nu, 2).is_err());
        assert!(h_bar_quotient(&p("10,7,4,1"), &p("7,4,1"), 3).is_err());
    }

    #[test]
    fn final_example_value() {
        let gamma = p("10,7,4,1");
        let alpha = p("13,7,6,4,3,1");
        let beta = p("10,7,6,4,3,3,1");
        assert_eq!(h_bar_quotient(&alpha, &gamma, 3).unwrap().components, quotient(&["2,1", "1"]));
        assert_eq!(h_bar_quotient(&beta, &gamma, 3).unwrap().components, quotient(&["2,1,1", ""]));
        let d = mainrouq_formula(&alpha, &beta, &gamma, 3).unwrap();
        assert_eq!(d, "q^2+q^4-q^6".parse().unwrap());
        assert_eq!(rock_q1(&alpha, &beta, &gamma, 3).unwrap(), ConjecturalValue { value: 1, abelian_defect: false });
        assert_eq!(rock_q1(&beta, &beta, &gamma, 3).unwrap().value, 1);
        assert_eq!(rock_q1(&alpha, &beta, &gamma, 3).unwrap().to_string(), "1 (CONJECTURAL)");
    }

    #[test]
    fn diagonal_is_one() {
        let nu = minimal_rouquier_core(2, 3).unwrap();
        for mu in enumerate_weight_space(&nu, 2, 3).unwrap().iter().filter(|mu| mu.is_restricted(3)) {
            assert!(ct_formula(mu, mu, &nu, 3).unwrap().is_one(), "{mu:?}");
        }
    }

    #[test]
    fn unrestricted_column_is_rejected() {
        let gamma = p("10,7,4,1");
        let alpha = p("13,7,6,4,3,1");
        assert!(matches!(mainrouq_formula(&alpha, &alpha, &gamma, 3), Err(Error::NotRestricted { .. })));
    }

    #[test]
    fn formulas_match_small_bases() {
        let nu = minimal_rouquier_core(2, 2).unwrap();
        let report = verify_ct(&nu, 2, 2).unwrap();
        assert!(report.passed(), "{report}");
        let gamma = minimal_rouquier_bar_core(2, 3).unwrap();
        let report = verify_mainrouq(&gamma, 2, 3).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn quotients_round_trip_on_weight_spaces() {
        for (w, m) in [(2, 2), (3, 3), (2, 4)] {
            let nu = minimal_rouquier_core(w, m).unwrap();
            let report = verify_quotient_round_trip(&nu, w, m).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    fn arb_small() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..=2, 0..=2).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn quotient_round_trip(
            m in 2usize..5,
            extra in 0usize..3,
            comps in prop::collection::vec(arb_small(), 4),
        ) {
            let q = MQuotient { components: comps.into_iter().take(m).collect() };
            let nu = minimal_rouquier_core(q.size() + extra, m).unwrap();
            let lambda = from_m_quotient(&nu, &q, m).unwrap();
            prop_assert_eq!(m_quotient(&lambda, &nu, m).unwrap(), q.clone());
            prop_assert_eq!(m_core_weight(&lambda, m).unwrap(), (nu, q.size()));
        }

        #[test]
        fn quotient_ignores_extra_beads(
            m in 2usize..5,
            comps in prop::collection::vec(arb_small(), 4),
            k in 1usize..3,
        ) {
            let q = MQuotient { components: comps.into_iter().take(m).collect() };
            let nu = minimal_rouquier_core(q.size(), m).unwrap();
            let lambda = from_m_quotient(&nu, &q, m).unwrap();
            let s = require_rouquier(&nu, q.size(), m).unwrap();
            prop_assert_eq!(quotient_on(&lambda, m, s + k * m).unwrap(), q);
        }
    }
}
