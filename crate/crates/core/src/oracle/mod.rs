//! Exact ground truth at desk scale: χ, ω, α and matching number.
//!
//! The coloring and clique routines work on 64-bit adjacency rows and refuse
//! graphs above 64 vertices. Every search is bounded by a node budget so a
//! caller can tell "absent" from "gave up".

mod clique;
mod dsatur;
mod matching;

pub use matching::{max_matching, maximum_matching};

use crate::error::{Budget, Error, Result};
use crate::graph::{Coloring, Graph};

pub const DEFAULT_ORACLE_BUDGET: u64 = 100_000_000;
pub const ORACLE_MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    pub budget: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            budget: DEFAULT_ORACLE_BUDGET,
        }
    }
}

impl Oracle {
    pub fn with_budget(budget: u64) -> Self {
        Oracle { budget }
    }

    fn rows(&self, g: &Graph) -> Result<Vec<u64>> {
        if g.n() > ORACLE_MAX_VERTICES {
            return Err(Error::DeskCapExceeded(format!(
                "oracle accepts at most {ORACLE_MAX_VERTICES} vertices, got {}",
                g.n()
            )));
        }
        Ok((0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &u| acc | 1 << u))
            .collect())
    }

    fn budget(&self) -> Budget {
        Budget::new(self.budget)
    }

    fn relabel_budget_error(e: Error) -> Error {
        match e {
            Error::TimeBudgetExceeded(n) => {
                Error::DeskCapExceeded(format!("oracle node budget of {n} exhausted"))
            }
            other => other,
        }
    }

    /// A proper coloring with at most `k` colors, or `None` if none exists.
    pub fn exact_coloring(&self, g: &Graph, k: usize) -> Result<Option<Coloring>> {
        let rows = self.rows(g)?;
        let found =
            dsatur::k_color(&rows, k, &mut self.budget()).map_err(Self::relabel_budget_error)?;
        Ok(found.map(|colors| Coloring::new(colors, k)))
    }

    /// χ(G). With `ub = Some(b)` only budgets up to `b` are tried and a
    /// graph needing more than `b` colors yields `b + 1`.
    pub fn chromatic_number(&self, g: &Graph, ub: Option<usize>) -> Result<usize> {
        Ok(self
            .optimal_coloring_bounded(g, ub)?
            .map_or_else(|| ub.unwrap() + 1, |c| c.k))
    }

    /// An optimal coloring (its `k` equals χ).
    pub fn optimal_coloring(&self, g: &Graph) -> Result<Coloring> {
        Ok(self
            .optimal_coloring_bounded(g, None)?
            .expect("unbounded search"))
    }

    fn optimal_coloring_bounded(&self, g: &Graph, ub: Option<usize>) -> Result<Option<Coloring>> {
        let rows = self.rows(g)?;
        if rows.is_empty() {
            return Ok(Some(Coloring::new(Vec::new(), 0)));
        }
        let mut budget = self.budget();
        let omega = clique::max_clique(&rows, &mut budget)
            .map_err(Self::relabel_budget_error)?
            .count_ones() as usize;
        let greedy = dsatur::greedy(&rows);
        let greedy_k = greedy.iter().copied().max().unwrap_or(0);
        let cap = ub.map_or(greedy_k, |b| b.min(greedy_k));
        for k in omega..=cap {
            if k == greedy_k {
                return Ok(Some(Coloring::new(greedy, k)));
            }
            let found =
                dsatur::k_color(&rows, k, &mut budget).map_err(Self::relabel_budget_error)?;
            if let Some(colors) = found {
                return Ok(Some(Coloring::new(colors, k)));
            }
        }
        Ok(None)
    }

    /// Vertices of one maximum clique, ascending.
    pub fn max_clique(&self, g: &Graph) -> Result<Vec<usize>> {
        let rows = self.rows(g)?;
        let mask =
            clique::max_clique(&rows, &mut self.budget()).map_err(Self::relabel_budget_error)?;
        Ok((0..g.n()).filter(|&v| mask >> v & 1 == 1).collect())
    }

    pub fn clique_number(&self, g: &Graph) -> Result<usize> {
        Ok(self.max_clique(g)?.len())
    }

    pub fn independence_number(&self, g: &Graph) -> Result<usize> {
        self.clique_number(&g.complement())
    }
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Oracle::default().chromatic_number(g, None)
}

pub fn exact_coloring(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    Oracle::default().exact_coloring(g, k)
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    Oracle::default().clique_number(g)
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    Oracle::default().independence_number(g)
}
