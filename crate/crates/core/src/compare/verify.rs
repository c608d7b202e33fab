//! Executable checks of the comparison results, exhaustive on small ranges
//! or on seeded random instances.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{succeq, NiceContext};
use crate::error::{Error, Result};
use crate::fock::{FockSpaceA1, FockSpaceA2, FockVector};
use crate::hstrict::{bar_core_weight, enumerate_bar_weight_space, is_bar_core, is_restricted_h};
use crate::partition::{horizontal_strips_above, partitions_of, Partition};
use crate::qpoly::LaurentPoly;
use crate::report::Report;
use crate::symfunc::hsb;

/// Partitions with at most `max_len` parts and total size at most `max_size`.
fn small_partitions(max_size: usize, max_len: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).filter(|p| p.len() <= max_len).collect()
}

fn random_partition(rng: &mut ChaCha8Rng, max_len: usize, max_part: usize) -> Partition {
    let len = rng.gen_range(0..=max_len);
    Partition::from_unsorted((0..len).map(|_| rng.gen_range(1..=max_part)).collect())
}

fn random_small(rng: &mut ChaCha8Rng, max_size: usize) -> Partition {
    let all = partitions_of(rng.gen_range(0..=max_size));
    all[rng.gen_range(0..all.len())].clone()
}

/// Exhaustive over standard partitions of length `l ≤ max_l` with parts at
/// most `3h`: `phi` and `psi` invert, and restrictedness is preserved.
pub fn verify_nicebijec(h: usize, max_l: usize) -> Result<Report> {
    let mut report = Report::new(format!("standard bijection h={h}"));
    let n = (h - 1) / 2;
    let m = n + 1;
    let pool: Vec<usize> = (1..=3 * h).filter(|x| (1..=n).contains(&(x % h))).collect();
    for l in 1..=max_l {
        let c = NiceContext::new(h, l)?;
        crate::fock::a1::for_each_subset(pool.len(), l, &mut |chosen| {
            let alpha = Partition::from_unsorted(chosen.iter().map(|&k| pool[k]).collect());
            let (Ok(lam), Ok(plus)) = (c.phi(&alpha), c.psi(&alpha)) else {
                report.check(false, || format!("{alpha:?} rejected"));
                return;
            };
            let restricted = is_restricted_h(&alpha, h);
            report.check(c.phi_inv(&lam).as_ref() == Ok(&alpha), || format!("phi_inv(phi({alpha:?}))"));
            report.check(c.psi_inv(&plus).as_ref() == Ok(&alpha), || format!("psi_inv(psi({alpha:?}))"));
            report.check(c.plus_map(&lam).as_ref() == Ok(&plus), || format!("psi != plus . phi at {alpha:?}"));
            report.check(restricted == (n == 1 && lam.is_empty() || n > 1 && lam.is_restricted(n)), || {
                format!("restrictedness of {alpha:?} vs {lam:?}")
            });
            report.check(restricted == plus.is_restricted(m), || format!("restrictedness of {alpha:?} vs {plus:?}"));
        });
        for lam in small_partitions(3 * l, l) {
            let ok = c.phi_inv(&lam).and_then(|a| c.phi(&a)).is_ok_and(|b| b == lam);
            report.check(ok, || format!("phi(phi_inv({lam:?})) at l={l}"));
        }
    }
    Ok(report)
}

/// Every `alpha` dominating a standard `beta` in its bar-weight space is
/// standard of the same length.
pub fn verify_nicecore(h: usize, max_l: usize, max_w: usize) -> Result<Report> {
    let mut report = Report::new(format!("dominating partitions stay standard h={h}"));
    let mut spaces: HashMap<(Partition, usize), Vec<Partition>> = HashMap::new();
    for l in 1..=max_l {
        let c = NiceContext::new(h, l)?;
        for lam in small_partitions(2 * max_w + 2, l) {
            let beta = c.phi_inv(&lam)?;
            let (core, w) = bar_core_weight(&beta, h)?;
            if w > max_w {
                continue;
            }
            let key = (core.clone(), w);
            if !spaces.contains_key(&key) {
                spaces.insert(key.clone(), enumerate_bar_weight_space(&core, w, h)?);
            }
            for alpha in spaces[&key].iter().filter(|a| a.dominates(&beta)) {
                report.check(c.is_standard(alpha), || format!("{alpha:?} dominates {beta:?} (l={l})"));
            }
        }
    }
    Ok(report)
}

fn cross_type_columns(
    name: String,
    h: usize,
    max_l: usize,
    max_w: usize,
    max_size: usize,
    target_modulus: usize,
    use_psi: bool,
) -> Result<Report> {
    let mut report = Report::new(name);
    let mut a2 = FockSpaceA2::new(h)?;
    let mut a1 = FockSpaceA1::new(target_modulus)?;
    for l in 1..=max_l {
        let c = NiceContext::new(h, l)?;
        for lam in small_partitions(max_size, l) {
            let beta = c.phi_inv(&lam)?;
            if !is_restricted_h(&beta, h) || bar_core_weight(&beta, h)?.1 > max_w {
                continue;
            }
            let label = if use_psi { c.psi(&beta)? } else { lam.clone() };
            let lhs = a2.canonical_vector(&beta)?;
            let mapped = if use_psi { c.psi_vector(&lhs) } else { c.phi_vector(&lhs) };
            let rhs = a1.canonical_vector(&label)?;
            report.check(mapped.as_ref() == Ok(&rhs), || format!("l={l} beta={beta:?}: {mapped:?} vs {rhs}"));
        }
    }
    Ok(report)
}

/// For restricted standard `beta` with bar-weight at most `max_w`, the
/// relabelled canonical vector of `beta` is the `n`-runner canonical vector
/// of `phi(beta)`. Requires `h ≥ 5`.
pub fn verify_samedec(h: usize, max_l: usize, max_w: usize, max_size: usize) -> Result<Report> {
    if h < 5 {
        return Err(Error::Precondition(format!("the n-runner comparison needs h >= 5, got {h}")));
    }
    cross_type_columns(format!("phi matches canonical bases h={h}"), h, max_l, max_w, max_size, (h - 1) / 2, false)
}

/// As `verify_samedec` but through `psi` into the `m`-runner space; valid
/// for `h = 3` as well.
pub fn verify_firstmain(h: usize, max_l: usize, max_w: usize, max_size: usize) -> Result<Report> {
    cross_type_columns(format!("psi matches canonical bases h={h}"), h, max_l, max_w, max_size, h.div_ceil(2), true)
}

/// Draws a context, a base, a quotient and `k` such that the join has at
/// least `k + extra` separation; `bar` selects the separation notion.
fn draw_separated(
    rng: &mut ChaCha8Rng,
    hs: &[usize],
    bar: bool,
    super_sep: bool,
) -> Result<(NiceContext, Partition, Partition, usize)> {
    loop {
        let h = hs[rng.gen_range(0..hs.len())];
        let k = rng.gen_range(1..=2);
        let pi = random_small(rng, 3);
        let n = (h - 1) / 2;
        let need = if super_sep { pi.size() } else { pi.first_part() };
        let l = n * (need + k + 1 + rng.gen_range(0..=2)) + rng.gen_range(0..n.max(2));
        let c = NiceContext::new(h, l.max(1))?;
        let lam = random_partition(rng, c.l().min(3), 3);
        let ok = match (bar, super_sep) {
            (false, false) => c.is_k_separated(&c.plus_map(&lam)?, &pi, k)?,
            (true, false) => c.is_k_bar_separated(&c.phi_inv(&lam)?, &pi, k)?,
            (_, true) => c.is_u_super_separated(&c.plus_map(&lam)?, &pi, k)?,
        };
        if ok {
            return Ok((c, lam, pi, k));
        }
    }
}

/// `F_k` on a `k`-separated join `lambda|pi` equals the sum over horizontal
/// strips `pi → rho` of `r ≤ k` nodes of `(F_{k-r} lambda)|rho`, restricted
/// to bases in `P+`; every resulting join keeps the surplus separation.
pub fn verify_addrun1(hs: &[usize], instances: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new("F_k on separated joins");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..instances {
        let (c, lam, pi, k) = draw_separated(&mut rng, hs, false, false)?;
        let lambda = c.plus_map(&lam)?;
        let start = c.join_a1(&lambda, &pi)?;
        let got = c.apply_f_k(&FockVector::basis(start.clone()), k)?;
        let mut expected = FockVector::zero();
        for r in 0..=k {
            let inner = if r == k {
                FockVector::basis(lambda.clone())
            } else {
                c.apply_f_k(&FockVector::basis(lambda.clone()), k - r)?
            };
            for rho in horizontal_strips_above(&pi, r) {
                for (mu, coeff) in inner.terms().filter(|(mu, _)| c.in_p_plus(mu)) {
                    expected.add_term(c.join_a1(mu, &rho)?, coeff);
                }
            }
        }
        let surplus = c.separation(&lambda, &pi)?.unwrap_or(0) - k;
        let kept = got
            .support()
            .all(|nu| c.split_a1(nu).and_then(|(mu, rho)| c.is_k_separated(&mu, &rho, surplus)).unwrap_or(false));
        report
            .check(got == expected && kept, || format!("h={} l={} {start:?} k={k}: {got} vs {expected}", c.h(), c.l()));
    }
    Ok(report)
}

/// Bar analogue of `verify_addrun1`, with the coefficient of each strip
/// scaled by `hsb(pi, rho)` at `t = -q^2`.
pub fn verify_addrun2(hs: &[usize], instances: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new("F̌_k on bar-separated joins");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..instances {
        let (c, lam, pi, k) = draw_separated(&mut rng, hs, true, false)?;
        let alpha = c.phi_inv(&lam)?;
        let start = c.join_a2(&alpha, &pi)?;
        let got = c.apply_fcheck_k(&FockVector::basis(start.clone()), k)?;
        let mut expected = FockVector::zero();
        for r in 0..=k {
            let inner = if r == k {
                FockVector::basis(alpha.clone())
            } else {
                c.apply_fcheck_k(&FockVector::basis(alpha.clone()), k - r)?
            };
            for rho in horizontal_strips_above(&pi, r) {
                let twist = hsb(&pi, &rho)?.subst_t();
                for (beta, coeff) in inner.terms().filter(|(beta, _)| c.is_standard(beta)) {
                    expected.add_term(c.join_a2(beta, &rho)?, &(coeff * &twist));
                }
            }
        }
        let surplus = c.bar_separation(&alpha, &pi)?.unwrap_or(0) - k;
        let kept = got
            .support()
            .all(|g| c.split_a2(g).and_then(|(b, rho)| c.is_k_bar_separated(&b, &rho, surplus)).unwrap_or(false));
        report
            .check(got == expected && kept, || format!("h={} l={} {start:?} k={k}: {got} vs {expected}", c.h(), c.l()));
    }
    Ok(report)
}

/// Coefficients of `F̌_k` between standard partitions agree with those of
/// `F_k` between their `psi` images.
pub fn verify_samecoeff(hs: &[usize], instances: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new("F̌_k and F_k agree under psi");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..instances {
        let h = hs[rng.gen_range(0..hs.len())];
        let l = rng.gen_range(1..=6);
        let k = rng.gen_range(1..=2);
        let c = NiceContext::new(h, l)?;
        let alpha = c.phi_inv(&random_partition(&mut rng, l.min(3), 4))?;
        let bar = c.apply_fcheck_k(&FockVector::basis(alpha.clone()), k)?;
        let plain = c.apply_f_k(&FockVector::basis(c.psi(&alpha)?), k)?;
        let mut ok = true;
        for (beta, coeff) in bar.terms().filter(|(b, _)| c.is_standard(b)) {
            ok &= plain.coeff(&c.psi(beta)?) == *coeff;
        }
        for (mu, coeff) in plain.terms().filter(|(mu, _)| c.in_p_plus(mu)) {
            ok &= bar.coeff(&c.psi_inv(mu)?) == *coeff;
        }
        report.check(ok, || format!("h={h} l={l} alpha={alpha:?} k={k}"));
    }
    Ok(report)
}

/// `theta(F̌_k v) = F_k theta(v)` for random `v` spanned by
/// `k`-super-bar-separated joins, and `theta_inv` inverts `theta`.
pub fn verify_sasfk(hs: &[usize], instances: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new("theta intertwines F̌_k and F_k");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..instances {
        let (c, lam, pi, k) = draw_separated(&mut rng, hs, false, true)?;
        let mut v = FockVector::basis(c.join_a2(&c.phi_inv(&lam)?, &pi)?);
        // A second term of the same size, when it is also separated enough.
        let other = random_small(&mut rng, pi.size());
        let lam2 = random_partition(&mut rng, c.l().min(2), 2);
        if c.is_u_super_separated(&c.plus_map(&lam2)?, &other, k)? {
            let e = rng.gen_range(-2..=2);
            v.add_term(c.join_a2(&c.phi_inv(&lam2)?, &other)?, &LaurentPoly::monomial(rng.gen_range(-2..=2), e));
        }
        let lhs = c.apply_fcheck_k(&v, k).and_then(|x| c.theta(&x));
        let rhs = c.theta(&v).and_then(|x| c.apply_f_k(&x, k));
        let inverse = c.theta(&v).and_then(|x| c.theta_inv(&x));
        report.check(lhs.is_ok() && lhs == rhs && inverse.as_ref() == Ok(&v), || {
            format!("h={} l={} v={v} k={k}: {lhs:?} vs {rhs:?}", c.h(), c.l())
        });
    }
    Ok(report)
}

/// For every restricted label of the bar-weight space: the canonical vector
/// only involves joins with quotient `≽` the label's quotient that keep its
/// super-bar-separation, and `theta` sends it to the canonical vector of the
/// corresponding join in the `m`-runner space.
pub fn verify_sscbv(h: usize, core: &Partition, w: usize) -> Result<Report> {
    let c = NiceContext::new(h, core.len())?;
    if !is_bar_core(core, h)? || !c.is_standard(core) {
        return Err(Error::Precondition(format!("{core:?} is not a standard {h}-bar-core")));
    }
    let rows = enumerate_bar_weight_space(core, w, h)?;
    let mut split = BTreeMap::new();
    for gamma in &rows {
        let Ok((alpha, pi)) = c.split_a2(gamma) else {
            return Err(Error::Precondition(format!("{gamma:?} is not a join with a standard partition")));
        };
        if !c.is_u_super_bar_separated(&alpha, &pi, 0)? {
            return Err(Error::Precondition(format!("{gamma:?} is not super-bar-separated")));
        }
        split.insert(gamma.clone(), (alpha, pi));
    }
    let mut report = Report::new(format!("theta maps canonical bases h={h} core={core:?} w={w}"));
    let mut a2 = FockSpaceA2::new(h)?;
    let mut a1 = FockSpaceA1::new(c.m())?;
    for beta in rows.iter().filter(|b| is_restricted_h(b, h)) {
        let (alpha, pi) = &split[beta];
        let u = c.super_bar_separation(alpha, pi)?.unwrap_or(0);
        let g = a2.canonical_vector(beta)?;
        let shape_ok = g.support().all(|gamma| {
            let (a, rho) = &split[gamma];
            succeq(rho, pi) && c.is_u_super_bar_separated(a, rho, u).unwrap_or(false)
        });
        report.check(shape_ok, || format!("column {beta:?} has a term outside the expected range: {g}"));
        let image = c.theta(&g)?;
        let target = a1.canonical_vector(&c.join_a1(&c.psi(alpha)?, pi)?)?;
        report.check(image == target, || format!("column {beta:?}: theta gives {image}, expected {target}"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_exhaustive_checks() {
        for h in [3, 5, 7] {
            assert!(verify_nicebijec(h, 3).unwrap().passed(), "h={h}");
            assert!(verify_nicecore(h, 3, 2).unwrap().passed(), "h={h}");
        }
    }

    #[test]
    fn canonical_comparisons_small() {
        let r = verify_samedec(5, 3, 2, 6).unwrap();
        assert!(r.passed() && r.checked > 0, "{r}");
        let r = verify_firstmain(3, 3, 2, 6).unwrap();
        assert!(r.passed() && r.checked > 0, "{r}");
        assert!(verify_samedec(3, 2, 2, 4).is_err());
    }

    #[test]
    fn randomised_operator_checks() {
        for r in [
            verify_addrun1(&[3, 5, 7], 20, 1).unwrap(),
            verify_addrun2(&[3, 5, 7], 20, 2).unwrap(),
            verify_samecoeff(&[3, 5, 7], 20, 3).unwrap(),
            verify_sasfk(&[3, 5, 7], 20, 4).unwrap(),
        ] {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn sscbv_trivial_weight() {
        let r = verify_sscbv(5, &p("12,11,7,6,2,1"), 0).unwrap();
        assert!(r.passed() && r.checked == 2, "{r}");
        assert!(verify_sscbv(5, &p("6"), 1).is_err());
    }
}
