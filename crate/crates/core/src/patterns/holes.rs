use crate::error::{Budget, Result};
use crate::graph::Graph;

use super::{find_fixed_pattern, FixedPattern, PatternKind, PatternWitness};

/// An induced cycle of odd length in `min_len..=max_len`, in cycle order.
///
/// Cycles are grown as chordless paths from their smallest vertex `s`;
/// the second vertex must be smaller than the last so each cycle is met in
/// one orientation only.
pub(super) fn odd_hole(
    g: &Graph,
    min_len: usize,
    max_len: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if min_len > n {
        return Ok(None);
    }
    let mut on_path = vec![false; n];
    for s in 0..n {
        on_path[s] = true;
        let mut path = vec![s];
        for &p1 in g.neighbors(s) {
            if p1 <= s {
                continue;
            }
            path.push(p1);
            on_path[p1] = true;
            let hit = extend(g, &mut path, &mut on_path, min_len, max_len, budget)?;
            if hit {
                return Ok(Some(path));
            }
            on_path[p1] = false;
            path.pop();
        }
        on_path[s] = false;
    }
    Ok(None)
}

fn extend(
    g: &Graph,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    min_len: usize,
    max_len: usize,
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick()?;
    let s = path[0];
    let k = path.len();
    let last = path[k - 1];
    for &v in g.neighbors(last) {
        if v <= s || on_path[v] || path[1..k - 1].iter().any(|&x| g.has_edge(v, x)) {
            continue;
        }
        let len = k + 1;
        if g.has_edge(v, s) {
            if len >= 5 && len % 2 == 1 && len >= min_len && len <= max_len && path[1] < v {
                path.push(v);
                return Ok(true);
            }
            continue;
        }
        if len + 1 > max_len {
            continue;
        }
        path.push(v);
        on_path[v] = true;
        if extend(g, path, on_path, min_len, max_len, budget)? {
            return Ok(true);
        }
        on_path[v] = false;
        path.pop();
    }
    Ok(false)
}

/// Hubs in ascending order; for each, an odd hole inside its neighborhood.
pub(super) fn odd_wheel(
    g: &Graph,
    exact_len: Option<usize>,
    budget: &mut Budget,
) -> Result<Option<PatternWitness>> {
    for hub in 0..g.n() {
        budget.tick()?;
        let nb = g.neighbors(hub);
        let (lo, hi) = match exact_len {
            Some(l) => (l, l),
            None => (5, usize::MAX),
        };
        if nb.len() < lo {
            continue;
        }
        let sub = g.induce(nb);
        let rim = if lo == 5 && hi == 5 {
            find_fixed_pattern(&sub, FixedPattern::C5).map(|w| w.ordered())
        } else {
            odd_hole(&sub, lo, hi, budget)?
        };
        if let Some(rim) = rim {
            let mut roles: Vec<(String, usize)> = rim
                .iter()
                .enumerate()
                .map(|(i, &v)| (format!("v{}", i + 1), nb[v]))
                .collect();
            roles.push(("hub".into(), hub));
            return Ok(Some(PatternWitness::new(
                PatternKind::OddWheel(rim.len()),
                roles,
            )));
        }
    }
    Ok(None)
}
