//! Hall–Littlewood `P` functions in the Schur basis and Kostka–Foulkes
//! matrices, built degree by degree from the multiplication Pieri rule.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::{hs, q_row, SchurVector};
use crate::partition::{horizontal_strips_above, partitions_of, Partition};
use crate::qpoly::TPoly;

/// The transition matrices between Schur and Hall–Littlewood `P` functions
/// of one degree: `s_lambda = Σ_mu K[lambda,mu] P_mu` and
/// `P_mu = Σ_lambda K^-1[mu,lambda] s_lambda`.
#[derive(Debug)]
pub struct KostkaMatrix {
    degree: usize,
    labels: Vec<Partition>,
    index: HashMap<Partition, usize>,
    k: Vec<Vec<TPoly>>,
    kinv: Vec<Vec<TPoly>>,
}

impl KostkaMatrix {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Partitions of the degree, most dominant first.
    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    fn idx(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn k(&self, lambda: &Partition, mu: &Partition) -> TPoly {
        match (self.idx(lambda), self.idx(mu)) {
            (Some(i), Some(j)) => self.k[i][j].clone(),
            _ => TPoly::zero(),
        }
    }

    pub fn kinv(&self, mu: &Partition, lambda: &Partition) -> TPoly {
        match (self.idx(mu), self.idx(lambda)) {
            (Some(i), Some(j)) => self.kinv[i][j].clone(),
            _ => TPoly::zero(),
        }
    }
}

fn cache() -> &'static Mutex<BTreeMap<usize, Arc<KostkaMatrix>>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<KostkaMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// The Kostka–Foulkes matrix of degree `d`, computed once and cached.
pub fn kostka_matrix(d: usize) -> Arc<KostkaMatrix> {
    if let Some(k) = cache().lock().unwrap().get(&d) {
        return k.clone();
    }
    let built = Arc::new(build(d));
    cache().lock().unwrap().entry(d).or_insert(built).clone()
}

/// `P_mu` in the Schur basis.
pub fn p_in_schur(mu: &Partition) -> SchurVector {
    let k = kostka_matrix(mu.size());
    let i = k.idx(mu).unwrap();
    let mut v = SchurVector::zero();
    for (j, lam) in k.labels.iter().enumerate() {
        v.add_term(lam.clone(), &k.kinv[i][j]);
    }
    v
}

fn build(d: usize) -> KostkaMatrix {
    let labels = partitions_of(d);
    let index: HashMap<Partition, usize> = labels.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let n = labels.len();
    let mut p_funcs: Vec<Option<SchurVector>> = vec![None; n];
    if d == 0 {
        p_funcs[0] = Some(SchurVector::schur(Partition::empty()));
    }
    // Most dominant first: every other term of P_lambda Q_r is then known.
    for (i, mu) in labels.iter().enumerate() {
        if d == 0 {
            break;
        }
        let r = mu.first_part();
        let lambda = Partition::new(mu.parts()[1..].to_vec()).unwrap();
        let mut acc = p_in_schur(&lambda).mul(&q_row(r));
        for other in horizontal_strips_above(&lambda, r) {
            if &other == mu {
                continue;
            }
            let j = index[&other];
            let pj = p_funcs[j].as_ref().expect("lex-greater P function already built");
            acc.add_scaled(pj, &-&hs(&lambda, &other).unwrap());
        }
        let lead = hs(&lambda, mu).unwrap();
        p_funcs[i] = Some(acc.div_exact(&lead).expect("Pieri leading coefficient divides"));
    }
    let kinv: Vec<Vec<TPoly>> =
        p_funcs.iter().map(|p| labels.iter().map(|lam| p.as_ref().unwrap().coeff(lam)).collect()).collect();
    // kinv is upper unitriangular in this order; invert by back substitution.
    let mut k = vec![vec![TPoly::zero(); n]; n];
    for i in (0..n).rev() {
        k[i][i] = TPoly::one();
        for j in i + 1..n {
            let mut acc = TPoly::zero();
            for (l, row) in k.iter().enumerate().take(j + 1).skip(i + 1) {
                acc += &(&kinv[i][l] * &row[j]);
            }
            k[i][j] = -&acc;
        }
    }
    KostkaMatrix { degree: d, labels, index, k, kinv }
}
