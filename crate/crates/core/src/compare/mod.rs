//! The dictionary between the two Fock spaces: bijections between standard
//! `h`-strict partitions and ordinary partitions, joins with a partition on
//! runner 0, separation predicates, the operators `F_k` and `F̌_k`, and the
//! Kostka-twisted relabelling `theta`.

mod verify;

pub use verify::{
    verify_addrun1, verify_addrun2, verify_firstmain, verify_nicebijec, verify_nicecore, verify_samecoeff,
    verify_samedec, verify_sasfk, verify_sscbv,
};

use crate::abacus::{beta_set, from_beta_set, AbacusDisplay};
use crate::error::{Error, Result};
use crate::fock::{FockSpaceA1, FockSpaceA2, FockVector};
use crate::hstrict::{check_h, is_h_strict, BarAbacusDisplay};
use crate::partition::Partition;
use crate::symfunc::kostka_matrix;

/// An odd modulus `h` and a length `l`, with `n = (h-1)/2` and
/// `m = (h+1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NiceContext {
    h: usize,
    l: usize,
}

fn domain(map: &'static str, detail: String) -> Error {
    Error::Domain { map, detail }
}

impl NiceContext {
    pub fn new(h: usize, l: usize) -> Result<Self> {
        check_h(h)?;
        if l == 0 {
            return Err(Error::Precondition("length l must be at least 1".into()));
        }
        Ok(NiceContext { h, l })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn n(&self) -> usize {
        (self.h - 1) / 2
    }

    pub fn m(&self) -> usize {
        self.h.div_ceil(2)
    }

    /// `h`-strict of length exactly `l`, every part with residue in `1..=n`
    /// modulo `h`.
    pub fn is_standard(&self, alpha: &Partition) -> bool {
        alpha.len() == self.l
            && is_h_strict(alpha, self.h)
            && alpha.parts().iter().all(|&p| (1..=self.n()).contains(&(p % self.h)))
    }

    fn require_standard(&self, alpha: &Partition, map: &'static str) -> Result<()> {
        if self.is_standard(alpha) {
            Ok(())
        } else {
            Err(domain(map, format!("{alpha:?} is not standard for h={}, l={}", self.h, self.l)))
        }
    }

    pub fn phi(&self, alpha: &Partition) -> Result<Partition> {
        self.require_standard(alpha, "phi")?;
        let (h, l, n) = (self.h, self.l, self.n());
        let parts = (1..=l).map(|r| {
            let a = alpha.part(r - 1);
            a + r - (n + 1) * (a / h) - l - 1
        });
        Partition::new(parts.collect())
    }

    pub fn phi_inv(&self, lambda: &Partition) -> Result<Partition> {
        if lambda.len() > self.l {
            return Err(domain("phi_inv", format!("{lambda:?} has more than {} parts", self.l)));
        }
        let (l, n) = (self.l, self.n());
        let parts = (1..=l).map(|r| {
            let x = lambda.part(r - 1) + l - r;
            x + 1 + (n + 1) * (x / n)
        });
        Partition::new(parts.collect())
    }

    /// `phi` followed by inserting an empty runner 0.
    pub fn psi(&self, alpha: &Partition) -> Result<Partition> {
        self.require_standard(alpha, "psi")?;
        let (h, l, n) = (self.h, self.l, self.n());
        let parts = (1..=l).map(|r| {
            let a = alpha.part(r - 1);
            a + r - n * (a / h) - l - 1
        });
        Partition::new(parts.collect())
    }

    pub fn psi_inv(&self, mu: &Partition) -> Result<Partition> {
        if !self.in_p_plus(mu) {
            return Err(domain("psi_inv", format!("{mu:?} has a bead off position 0 on runner 0")));
        }
        let (h, l, m) = (self.h, self.l, self.m());
        let parts = (1..=l).map(|r| {
            let x = mu.part(r - 1) + l - r + 1;
            h * (x / m) + x % m
        });
        Partition::new(parts.collect())
    }

    /// Adds an empty runner 0 to the `n`-runner display with `l` beads.
    pub fn plus_map(&self, lambda: &Partition) -> Result<Partition> {
        if lambda.len() > self.l {
            return Err(domain("plus_map", format!("{lambda:?} has more than {} parts", self.l)));
        }
        let (l, n) = (self.l, self.n());
        let parts = (1..=l).map(|r| {
            let x = lambda.part(r - 1);
            x + (x + l - r) / n
        });
        Partition::new(parts.collect())
    }

    /// At most `l` parts, and the `(l+1)`-bead `m`-runner display has only
    /// position 0 on runner 0.
    pub fn in_p_plus(&self, lambda: &Partition) -> bool {
        let (l, m) = (self.l, self.m());
        lambda.len() <= l && (1..=l).all(|r| !(lambda.part(r - 1) + l + 1 - r).is_multiple_of(m))
    }

    pub fn phi_vector(&self, v: &FockVector) -> Result<FockVector> {
        v.relabel(|p| self.phi(p))
    }

    pub fn psi_vector(&self, v: &FockVector) -> Result<FockVector> {
        v.relabel(|p| self.psi(p))
    }

    /// The `m`-runner display of the join with `a = l(pi)` padding rows:
    /// `lambda` with `am + l + 1` beads, then the `r`th lowest runner-0 bead
    /// moved down `pi_r` rows.
    fn join_display(&self, lambda: &Partition, pi: &Partition) -> Result<(AbacusDisplay, usize)> {
        if !self.in_p_plus(lambda) {
            return Err(domain("join_a1", format!("{lambda:?} is not in P+ for l={}", self.l)));
        }
        let m = self.m();
        let a = pi.len();
        let mut beads = beta_set(lambda, a * m + self.l + 1)?;
        for r in 1..=a {
            let pos = (a + 1 - r) * m;
            let k = beads.iter().position(|&b| b == pos).expect("runner 0 is full down to row a");
            beads[k] = pos + pi.part(r - 1) * m;
        }
        Ok((AbacusDisplay::from_positions(m, beads), a))
    }

    pub fn join_a1(&self, lambda: &Partition, pi: &Partition) -> Result<Partition> {
        Ok(self.join_display(lambda, pi)?.0.partition())
    }

    /// Inverse of `join_a1`, returning `(lambda, pi)`.
    pub fn split_a1(&self, nu: &Partition) -> Result<(Partition, Partition)> {
        let (l, m) = (self.l, self.m());
        let a = nu.len().saturating_sub(l + 1).div_ceil(m);
        let beads = beta_set(nu, a * m + l + 1)?;
        let mut runner0: Vec<usize> = beads.iter().copied().filter(|b| b % m == 0).collect();
        if runner0.len() != a + 1 {
            return Err(domain("split_a1", format!("{nu:?} has the wrong number of runner-0 beads")));
        }
        runner0.sort_unstable_by(|x, y| y.cmp(x));
        let pi = Partition::new(runner0.iter().enumerate().map(|(k, &b)| b / m - (a - k)).collect())?;
        let mut rest: Vec<usize> = beads.into_iter().filter(|b| b % m != 0).collect();
        rest.extend((0..=a).map(|k| k * m));
        let lambda = from_beta_set(&rest);
        if !self.in_p_plus(&lambda) || self.join_a1(&lambda, &pi)? != *nu {
            return Err(domain("split_a1", format!("{nu:?} is not a join for l={}", l)));
        }
        Ok((lambda, pi))
    }

    /// `alpha` with every part of `pi` multiplied by `h` added as a part.
    pub fn join_a2(&self, alpha: &Partition, pi: &Partition) -> Result<Partition> {
        self.require_standard(alpha, "join_a2")?;
        Ok(alpha.union(&pi.scaled(self.h)))
    }

    /// Inverse of `join_a2`, returning `(alpha, pi)`.
    pub fn split_a2(&self, gamma: &Partition) -> Result<(Partition, Partition)> {
        let h = self.h;
        let (div, rest): (Vec<usize>, Vec<usize>) = gamma.parts().iter().partition(|&&p| p % h == 0);
        let alpha = Partition::from_unsorted(rest);
        self.require_standard(&alpha, "split_a2")?;
        Ok((alpha, Partition::from_unsorted(div.into_iter().map(|p| p / h).collect())))
    }

    /// The largest `k` with the join `k`-separated, or `None` if it is not
    /// separated at all.
    pub fn separation(&self, lambda: &Partition, pi: &Partition) -> Result<Option<usize>> {
        let (display, a) = self.join_display(lambda, pi)?;
        let m = self.m();
        let b = (pi.first_part() + a) * m;
        let f = display.first_gap_off_runner_zero();
        Ok((f > b).then(|| (f - b - 1) / m))
    }

    pub fn is_k_separated(&self, lambda: &Partition, pi: &Partition, k: usize) -> Result<bool> {
        Ok(self.separation(lambda, pi)?.is_some_and(|s| s >= k))
    }

    /// Bar analogue of `separation`.
    pub fn bar_separation(&self, alpha: &Partition, pi: &Partition) -> Result<Option<usize>> {
        let display = BarAbacusDisplay::new(&self.join_a2(alpha, pi)?, self.h)?;
        let b = pi.first_part() * self.h;
        let f = display.first_gap_low_runners();
        Ok((f > b).then(|| (f - b - 1) / self.h))
    }

    pub fn is_k_bar_separated(&self, alpha: &Partition, pi: &Partition, k: usize) -> Result<bool> {
        Ok(self.bar_separation(alpha, pi)?.is_some_and(|s| s >= k))
    }

    /// The largest `u` with the join `u`-super-separated.
    pub fn super_separation(&self, lambda: &Partition, pi: &Partition) -> Result<Option<usize>> {
        let slack = pi.size() - pi.first_part();
        Ok(self.separation(lambda, pi)?.and_then(|s| s.checked_sub(slack)))
    }

    pub fn is_u_super_separated(&self, lambda: &Partition, pi: &Partition, u: usize) -> Result<bool> {
        Ok(self.super_separation(lambda, pi)?.is_some_and(|s| s >= u))
    }

    pub fn super_bar_separation(&self, alpha: &Partition, pi: &Partition) -> Result<Option<usize>> {
        self.super_separation(&self.psi(alpha)?, pi)
    }

    pub fn is_u_super_bar_separated(&self, alpha: &Partition, pi: &Partition, u: usize) -> Result<bool> {
        Ok(self.super_bar_separation(alpha, pi)?.is_some_and(|s| s >= u))
    }

    /// The divided-power word of `F_k`, in order of application.
    pub fn f_k_word(&self, k: usize) -> Vec<(usize, usize)> {
        let m = self.m();
        (0..m).rev().map(|j| ((j + m * self.l - self.l) % m, k)).collect()
    }

    /// The divided-power word of `F̌_k`, in order of application.
    pub fn fcheck_k_word(&self, k: usize) -> Vec<(usize, usize)> {
        let n = self.n();
        std::iter::once((n, k)).chain((0..n).rev().map(|i| (i, 2 * k))).collect()
    }

    pub fn apply_f_k(&self, v: &FockVector, k: usize) -> Result<FockVector> {
        Ok(FockSpaceA1::new(self.m())?.apply_word(v, &self.f_k_word(k)))
    }

    pub fn apply_fcheck_k(&self, v: &FockVector, k: usize) -> Result<FockVector> {
        FockSpaceA2::new(self.h)?.apply_word(v, &self.fcheck_k_word(k))
    }

    /// `pi‖alpha ↦ Σ_rho K[rho,pi](-q^2) rho|psi(alpha)`, defined on
    /// super-bar-separated joins.
    pub fn theta(&self, v: &FockVector) -> Result<FockVector> {
        v.map_linear(|gamma| {
            let (alpha, pi) = self.split_a2(gamma)?;
            if !self.is_u_super_bar_separated(&alpha, &pi, 0)? {
                return Err(domain("theta", format!("{gamma:?} is not super-bar-separated")));
            }
            let lambda = self.psi(&alpha)?;
            let k = kostka_matrix(pi.size());
            let mut out = FockVector::zero();
            for rho in k.labels() {
                out.add_term(self.join_a1(&lambda, rho)?, &k.k(rho, &pi).subst_t());
            }
            Ok(out)
        })
    }

    /// `rho|lambda ↦ Σ_pi K^-1[pi,rho](-q^2) pi‖psi^-1(lambda)`.
    pub fn theta_inv(&self, v: &FockVector) -> Result<FockVector> {
        v.map_linear(|nu| {
            let (lambda, rho) = self.split_a1(nu)?;
            if !self.is_u_super_separated(&lambda, &rho, 0)? {
                return Err(domain("theta_inv", format!("{nu:?} is not super-separated")));
            }
            let alpha = self.psi_inv(&lambda)?;
            let k = kostka_matrix(rho.size());
            let mut out = FockVector::zero();
            for pi in k.labels() {
                out.add_term(self.join_a2(&alpha, pi)?, &k.kinv(pi, &rho).subst_t());
            }
            Ok(out)
        })
    }
}

/// `rho ≽ pi`: either `rho` is strictly smaller, or the sizes agree and
/// `rho` dominates `pi`.
pub fn succeq(rho: &Partition, pi: &Partition) -> bool {
    rho.size() < pi.size() || rho.dominates(pi)
}
