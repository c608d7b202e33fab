//! Littlewood–Richardson coefficients by counting LR tableaux.

use crate::partition::Partition;

/// `c^lambda_{sigma,tau}`: the number of semistandard fillings of the skew
/// shape `lambda / sigma` with content `tau` whose reverse reading word is a
/// lattice word. Zero when the sizes do not match or `sigma ⊄ lambda`.
pub fn lr_coefficient(lambda: &Partition, sigma: &Partition, tau: &Partition) -> u64 {
    if lambda.size() != sigma.size() + tau.size() || !lambda.contains(sigma) || !lambda.contains(tau) {
        return 0;
    }
    if tau.is_empty() {
        return 1;
    }
    // Cells in reading order: rows top to bottom, each row right to left.
    let mut cells = Vec::new();
    for r in 0..lambda.len() {
        for c in (sigma.part(r)..lambda.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..lambda.len()).map(|r| vec![0; lambda.part(r)]).collect();
    let mut counts = vec![0usize; tau.len() + 1];
    fill(&cells, 0, sigma, tau, &mut grid, &mut counts)
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    sigma: &Partition,
    tau: &Partition,
    grid: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
) -> u64 {
    if k == cells.len() {
        return 1;
    }
    let (r, c) = cells[k];
    // Row weakly increases left to right, so going right to left each entry
    // is at most its right neighbour.
    let mut max = tau.len();
    if c + 1 < grid[r].len() {
        max = max.min(grid[r][c + 1]);
    }
    // Column strictly increases downward.
    let min = if r > 0 && c >= sigma.part(r - 1) { grid[r - 1][c] + 1 } else { 1 };
    let mut total = 0;
    for v in min..=max {
        if counts[v] >= tau.part(v - 1) {
            continue;
        }
        if v > 1 && counts[v] >= counts[v - 1] {
            continue;
        }
        counts[v] += 1;
        grid[r][c] = v;
        total += fill(cells, k + 1, sigma, tau, grid, counts);
        counts[v] -= 1;
    }
    grid[r][c] = 0;
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(lr_coefficient(&p("2,1,1"), &p("1,1,1"), &p("1")), 1);
        assert_eq!(lr_coefficient(&p("2,1,1"), &p("2,1"), &p("1")), 1);
        assert_eq!(lr_coefficient(&p("2,1,1"), &p("3"), &p("1")), 0);
        assert_eq!(lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1")), 2);
        assert_eq!(lr_coefficient(&p("4,2"), &p("4,2"), &Partition::empty()), 1);
        assert_eq!(lr_coefficient(&p("4,2"), &p("2"), &p("2")), 0);
        assert_eq!(lr_coefficient(&p("4,2,1"), &p("2,1"), &p("2,2")), 1);
    }
}
