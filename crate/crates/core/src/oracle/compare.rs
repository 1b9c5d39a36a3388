//! Matching an exact spectrum against numeric eigenvalues.

use crate::model::SpectrumRecord;

/// A run of sorted values with consecutive gaps at most `10·tol`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cluster {
    pub value: f64,
    pub exact: usize,
    pub numeric: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Comparison {
    pub exact_count: usize,
    pub numeric_count: usize,
    pub max_deviation: f64,
    pub clusters: Vec<Cluster>,
    pub tol: f64,
}

impl Comparison {
    pub fn clusters_match(&self) -> bool {
        self.clusters.iter().all(|c| c.exact == c.numeric)
    }

    pub fn passed(&self) -> bool {
        self.exact_count == self.numeric_count && self.max_deviation <= self.tol && self.clusters_match()
    }
}

/// Each level repeated by its multiplicity.
pub fn expand(records: &[SpectrumRecord]) -> Vec<f64> {
    records
        .iter()
        .flat_map(|r| std::iter::repeat(r.energy_float).take(r.multiplicity))
        .collect()
}

fn clusters_of(sorted: &[f64], gap: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    let mut last = f64::NEG_INFINITY;
    for &x in sorted {
        match out.last_mut() {
            Some((_, n)) if x - last <= gap => *n += 1,
            _ => out.push((x, 1)),
        }
        last = x;
    }
    out
}

/// Greedy matching of the two sorted lists, plus degeneracy clusters of each.
pub fn compare_values(exact: &[f64], numeric: &[f64], tol: f64) -> Comparison {
    let mut e = exact.to_vec();
    let mut n = numeric.to_vec();
    e.sort_by(f64::total_cmp);
    n.sort_by(f64::total_cmp);
    let max_deviation = if e.len() == n.len() {
        e.iter().zip(&n).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    let gap = 10.0 * tol;
    let ce = clusters_of(&e, gap);
    let cn = clusters_of(&n, gap);
    let mut clusters: Vec<Cluster> = ce
        .iter()
        .map(|&(value, exact)| Cluster {
            value,
            exact,
            numeric: cn
                .iter()
                .find(|(v, _)| (v - value).abs() <= gap.max(tol))
                .map_or(0, |c| c.1),
        })
        .collect();
    for &(value, numeric) in &cn {
        if !clusters.iter().any(|c| (c.value - value).abs() <= gap.max(tol)) {
            clusters.push(Cluster { value, exact: 0, numeric });
        }
    }
    Comparison {
        exact_count: e.len(),
        numeric_count: n.len(),
        max_deviation,
        clusters,
        tol,
    }
}

pub fn compare_spectra(exact: &[SpectrumRecord], numeric: &[f64], tol: f64) -> Comparison {
    compare_values(&expand(exact), numeric, tol)
}
