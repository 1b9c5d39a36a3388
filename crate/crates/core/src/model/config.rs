//! Magnetic configurations on the ring and their orbits under cyclic translation.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Label;

/// Number of nodes of the heptagon.
pub const NODES: usize = 7;

/// Set of overturned spins, bit `j−1` for node `j ∈ {1..n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Config {
    mask: u32,
    n: u8,
}

impl Config {
    pub fn new(n: usize, mask: u32) -> Result<Self> {
        check_ring(n)?;
        if mask >> n != 0 {
            return Err(Error::InvalidArgument(format!("mask {mask:#b} exceeds {n} nodes")));
        }
        Ok(Config { mask, n: n as u8 })
    }

    /// From node numbers in `1..=n`.
    pub fn from_nodes(n: usize, nodes: &[usize]) -> Result<Self> {
        check_ring(n)?;
        let mut mask = 0u32;
        for &j in nodes {
            if !(1..=n).contains(&j) || mask & (1 << (j - 1)) != 0 {
                return Err(Error::InvalidArgument(format!("bad node list {nodes:?}")));
            }
            mask |= 1 << (j - 1);
        }
        Ok(Config { mask, n: n as u8 })
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    pub fn ring_size(self) -> usize {
        self.n as usize
    }

    pub fn r(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(self, j: usize) -> bool {
        self.mask >> (j - 1) & 1 == 1
    }

    /// Strictly increasing node tuple `(j₁ < … < j_r)`.
    pub fn nodes(self) -> Vec<usize> {
        (1..=self.ring_size()).filter(|&j| self.contains(j)).collect()
    }

    /// Translation `j ↦ j + s` around the ring.
    pub fn shift(self, s: usize) -> Config {
        let n = self.ring_size();
        let s = s % n;
        let full = (1u32 << n) - 1;
        let mask = ((self.mask << s) | (self.mask >> (n - s))) & full;
        Config { mask, n: self.n }
    }

    /// Relative positions `t_α = j_{α+1} − j_α`, closing with `j₁ + n − j_r`.
    pub fn relative_vector(self) -> Vec<u8> {
        let j = self.nodes();
        let n = self.ring_size();
        (0..j.len())
            .map(|a| {
                if a + 1 < j.len() {
                    (j[a + 1] - j[a]) as u8
                } else {
                    (j[0] + n - j[a]) as u8
                }
            })
            .collect()
    }

    /// Configurations reachable by moving one overturned spin to an adjacent empty node.
    pub fn hops(self) -> Vec<Config> {
        let n = self.ring_size();
        let mut out = Vec::new();
        for j in self.nodes() {
            for nb in [j % n + 1, (j + n - 2) % n + 1] {
                if !self.contains(nb) {
                    let mask = (self.mask & !(1 << (j - 1))) | (1 << (nb - 1));
                    let c = Config { mask, n: self.n };
                    if !out.contains(&c) {
                        out.push(c);
                    }
                }
            }
        }
        out
    }

    /// Particle-hole image: the complementary set of nodes.
    pub fn complement(self) -> Config {
        Config {
            mask: !self.mask & ((1u32 << self.ring_size()) - 1),
            n: self.n,
        }
    }

    pub fn label(self) -> Label {
        Label::Config(self.nodes().into_iter().map(|j| j as u8).collect())
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.nodes().iter().map(|j| j.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

fn check_ring(n: usize) -> Result<()> {
    if !(3..=31).contains(&n) {
        return Err(Error::InvalidArgument(format!("ring size {n} outside 3..=31")));
    }
    Ok(())
}

fn check_level(n: usize, r: usize) -> Result<()> {
    check_ring(n)?;
    if r > n {
        return Err(Error::InvalidArgument(format!("r={r} exceeds {n} nodes")));
    }
    Ok(())
}

/// All `C(n, r)` configurations in lexicographic order of their node tuples.
pub fn build_configs_n(n: usize, r: usize) -> Result<Vec<Config>> {
    check_level(n, r)?;
    let mut out: Vec<Config> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == r)
        .map(|mask| Config { mask, n: n as u8 })
        .collect();
    out.sort_by_key(|c| c.nodes());
    Ok(out)
}

pub fn build_configs(r: usize) -> Result<Vec<Config>> {
    build_configs_n(NODES, r)
}

/// A translation orbit, identified by its lexicographically smallest relative vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    t: Vec<u8>,
    members: Vec<Config>,
}

impl Orbit {
    /// Canonical relative vector; empty for `r = 0` and all ones for `r = n`.
    pub fn t(&self) -> &[u8] {
        &self.t
    }

    /// Number of islands of adjacent overturned spins.
    pub fn islands(&self) -> usize {
        let r = self.t.len();
        let n = self.members[0].ring_size();
        if r == 0 {
            0
        } else if r == n {
            1
        } else {
            self.t.iter().filter(|&&x| x > 1).count()
        }
    }

    /// `{1, 1+t₁, 1+t₁+t₂, …}`: the member anchoring the wavelet phase.
    pub fn base(&self) -> Config {
        self.members[0]
    }

    /// `members[j] = base shifted by j`, for `j` below the period.
    pub fn members(&self) -> &[Config] {
        &self.members
    }

    pub fn period(&self) -> usize {
        self.members.len()
    }

    pub fn is_regular(&self) -> bool {
        self.period() == self.members[0].ring_size()
    }

    pub fn label(&self) -> Label {
        Label::Orbit(self.t.clone())
    }
}

fn canonical_t(c: Config) -> Vec<u8> {
    let t = c.relative_vector();
    (0..t.len())
        .map(|s| {
            let mut v = t.clone();
            v.rotate_left(s);
            v
        })
        .min()
        .unwrap_or_default()
}

fn base_config(n: usize, t: &[u8]) -> Config {
    let mut mask = 0u32;
    let mut j = 1usize;
    for (a, &step) in t.iter().enumerate() {
        mask |= 1 << (j - 1);
        if a + 1 < t.len() {
            j += step as usize;
        }
    }
    Config { mask, n: n as u8 }
}

/// Orbits of level `r`, sorted by canonical `t`.
pub fn build_orbits_n(n: usize, r: usize) -> Result<Vec<Orbit>> {
    let configs = build_configs_n(n, r)?;
    let mut ts: Vec<Vec<u8>> = configs.iter().map(|&c| canonical_t(c)).collect();
    ts.sort();
    ts.dedup();
    Ok(ts
        .into_iter()
        .map(|t| {
            let base = base_config(n, &t);
            let mut members = vec![base];
            let mut s = base.shift(1);
            while s != base {
                members.push(s);
                s = s.shift(1);
            }
            Orbit { t, members }
        })
        .collect())
}

pub fn build_orbits(r: usize) -> Result<Vec<Orbit>> {
    build_orbits_n(NODES, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn orbits_partition_configs() {
        for n in 3..=9 {
            for r in 0..=n {
                let configs = build_configs_n(n, r).unwrap();
                assert_eq!(configs.len(), binom(n, r));
                let orbits = build_orbits_n(n, r).unwrap();
                let mut seen: Vec<Config> =
                    orbits.iter().flat_map(|o| o.members().to_vec()).collect();
                seen.sort();
                let mut all = configs.clone();
                all.sort();
                assert_eq!(seen, all, "n={n} r={r}");
                for o in &orbits {
                    assert_eq!(canonical_t(o.base()), o.t());
                    assert_eq!(o.base().relative_vector(), o.t());
                }
            }
        }
    }

    #[test]
    fn table_order() {
        let ts = |r| -> Vec<Vec<u8>> { build_orbits(r).unwrap().iter().map(|o| o.t().to_vec()).collect() };
        assert_eq!(ts(1), vec![vec![7]]);
        assert_eq!(ts(2), vec![vec![1, 6], vec![2, 5], vec![3, 4]]);
        assert_eq!(
            ts(3),
            vec![vec![1, 1, 5], vec![1, 2, 4], vec![1, 3, 3], vec![1, 4, 2], vec![2, 2, 3]]
        );
        let islands: Vec<usize> = build_orbits(2).unwrap().iter().map(Orbit::islands).collect();
        assert_eq!(islands, vec![1, 2, 2]);
        let vac = build_orbits(0).unwrap();
        assert_eq!((vac.len(), vac[0].islands(), vac[0].period()), (1, 0, 1));
        assert!(build_orbits(3).unwrap().iter().all(Orbit::is_regular));
    }

    #[test]
    fn hops_and_complement() {
        let c = Config::from_nodes(7, &[1, 2]).unwrap();
        let mut h: Vec<Vec<usize>> = c.hops().iter().map(|x| x.nodes()).collect();
        h.sort();
        assert_eq!(h, vec![vec![1, 3], vec![2, 7]]);
        assert_eq!(c.complement().nodes(), vec![3, 4, 5, 6, 7]);
        assert_eq!(c.shift(6).nodes(), vec![1, 7]);
        assert!(Config::from_nodes(7, &[8]).is_err());
        assert!(build_configs_n(2, 1).is_err());
    }
}
