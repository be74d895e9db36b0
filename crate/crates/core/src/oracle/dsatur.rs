//! Exact k-coloring by DSATUR-ordered backtracking.
//!
//! A maximum clique is precolored `1..=ω` to break color symmetry; after
//! that a branch may open at most one new color.

use crate::error::{Budget, Result};

use super::clique::max_clique;

pub(crate) fn k_color(rows: &[u64], k: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    let n = rows.len();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    if k >= n {
        return Ok(Some((1..=n).collect()));
    }
    let clique = max_clique(rows, budget)?;
    if clique.count_ones() as usize > k {
        return Ok(None);
    }
    let mut state = State::new(rows, k);
    let mut next_color = 1;
    let mut q = clique;
    while q != 0 {
        let v = q.trailing_zeros() as usize;
        q &= q - 1;
        state.assign(v, next_color);
        next_color += 1;
    }
    let max_used = next_color - 1;
    if state.search(max_used, budget)? {
        Ok(Some(state.colors))
    } else {
        Ok(None)
    }
}

/// Plain DSATUR greedy; an upper bound for chromatic search.
pub(crate) fn greedy(rows: &[u64]) -> Vec<usize> {
    let n = rows.len();
    let mut state = State::new(rows, n.max(1));
    for _ in 0..n {
        let v = state.pick().expect("uncolored vertex");
        let c = (1..=n).find(|&c| state.sat[v] >> (c - 1) & 1 == 0).unwrap();
        state.assign(v, c);
    }
    state.colors
}

struct State<'a> {
    rows: &'a [u64],
    k: usize,
    colors: Vec<usize>,
    uncolored: u64,
    sat: Vec<u64>,
    counts: Vec<u16>,
}

impl<'a> State<'a> {
    fn new(rows: &'a [u64], k: usize) -> Self {
        let n = rows.len();
        State {
            rows,
            k,
            colors: vec![0; n],
            uncolored: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            sat: vec![0; n],
            counts: vec![0; n * k],
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        self.uncolored &= !(1 << v);
        let mut q = self.rows[v];
        while q != 0 {
            let u = q.trailing_zeros() as usize;
            q &= q - 1;
            let slot = &mut self.counts[u * self.k + c - 1];
            *slot += 1;
            if *slot == 1 {
                self.sat[u] |= 1 << (c - 1);
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        self.uncolored |= 1 << v;
        let mut q = self.rows[v];
        while q != 0 {
            let u = q.trailing_zeros() as usize;
            q &= q - 1;
            let slot = &mut self.counts[u * self.k + c - 1];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] &= !(1 << (c - 1));
            }
        }
    }

    /// Uncolored vertex with the largest saturation, then the largest
    /// uncolored degree, then the smallest index.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, u32, usize)> = None;
        let mut q = self.uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= q - 1;
            let key = (
                self.sat[v].count_ones(),
                (self.rows[v] & self.uncolored).count_ones(),
            );
            if best.is_none_or(|(s, d, _)| key > (s, d)) {
                best = Some((key.0, key.1, v));
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn search(&mut self, max_used: usize, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        let limit = self.k.min(max_used + 1);
        for c in 1..=limit {
            if self.sat[v] >> (c - 1) & 1 == 1 {
                continue;
            }
            self.assign(v, c);
            if self.search(max_used.max(c), budget)? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}
