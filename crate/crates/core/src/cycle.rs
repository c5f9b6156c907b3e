//! The odd cycle `C_{2s+1}` and its stable sets.
//!
//! Vertices are 1-indexed. Stable sets are the generators of the toric ring:
//! a stable set `W` contributes the monomial `(prod_{i in W} x_i) * y`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An odd cycle on `2s + 1` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleInstance {
    s: u32,
}

impl CycleInstance {
    pub fn new(s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidCycle(s));
        }
        Ok(Self { s })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `2s + 1`, also the dimension of the stable set polytope.
    pub fn n_vertices(&self) -> usize {
        2 * self.s as usize + 1
    }

    /// Krull dimension of the toric ring, `2s + 2`.
    pub fn ring_dim(&self) -> usize {
        self.n_vertices() + 1
    }

    /// Edge list `{1,2}, {2,3}, ..., {2s,2s+1}, {2s+1,1}`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let m = self.n_vertices();
        let mut edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
        edges.push((m, 1));
        edges
    }

    /// True when `members` (1-indexed vertices) contains no edge.
    pub fn is_stable(&self, members: &[usize]) -> bool {
        let m = self.n_vertices();
        let mut present = vec![false; m + 1];
        for &v in members {
            if v == 0 || v > m {
                return false;
            }
            present[v] = true;
        }
        self.edges()
            .iter()
            .all(|&(a, b)| !(present[a] && present[b]))
    }

    /// All stable sets, lexicographic by sorted member list with the empty set first.
    pub fn enumerate_stable_sets(&self) -> Vec<StableSet> {
        let m = self.n_vertices();
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.s as usize);
        // Pre-order DFS over "next vertex to add" yields lexicographic order.
        fn extend(m: usize, next: usize, current: &mut Vec<usize>, out: &mut Vec<StableSet>) {
            out.push(StableSet {
                members: current.clone(),
            });
            for v in next..=m {
                // vertex m is adjacent to vertex 1
                if v == m && current.first() == Some(&1) {
                    continue;
                }
                current.push(v);
                extend(m, v + 2, current, out);
                current.pop();
            }
        }
        extend(m, 1, &mut current, &mut out);
        out
    }

    /// Exponent vectors `(chi_W, 1)` of the toric ring generators, in stable-set order.
    pub fn generator_exponents(&self) -> Vec<Vec<u8>> {
        self.enumerate_stable_sets()
            .iter()
            .map(|w| {
                let mut v = w.indicator(self.n_vertices());
                v.push(1);
                v
            })
            .collect()
    }
}

/// A stable (independent) vertex set, members sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StableSet {
    members: Vec<usize>,
}

impl StableSet {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// 0/1 indicator vector of length `n_vertices`.
    pub fn indicator(&self, n_vertices: usize) -> Vec<u8> {
        let mut v = vec![0u8; n_vertices];
        for &i in &self.members {
            v[i - 1] = 1;
        }
        v
    }
}

/// Lucas numbers `L_1 = 1, L_2 = 3, L_k = L_{k-1} + L_{k-2}`.
pub fn lucas(k: u32) -> u128 {
    let (mut a, mut b) = (2u128, 1u128); // L_0, L_1
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}
