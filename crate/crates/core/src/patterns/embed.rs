use crate::error::{Budget, Result};
use crate::expansion::recognize_clique_expansion;
use crate::generators::spindle;
use crate::graph::Graph;

use super::fixed::find_fixed_pattern;
use super::{FixedPattern, PatternKind, PatternWitness};

/// Backtracking induced-subgraph search. Template vertices are placed in
/// BFS order so that each one after the first in its component is drawn
/// from the neighborhood of an already placed vertex.
pub(super) fn find_induced(
    host: &Graph,
    template: &Graph,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    let t = template.n();
    if t > host.n() {
        return Ok(None);
    }
    let mut order = Vec::with_capacity(t);
    let mut anchor = vec![None; t];
    let mut placed = vec![false; t];
    for root in 0..t {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        order.push(root);
        let mut i = order.len() - 1;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &u in template.neighbors(v) {
                if !placed[u] {
                    placed[u] = true;
                    anchor[u] = Some(v);
                    order.push(u);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; t];
    let mut used = vec![false; host.n()];
    let ok = place(
        host, template, &order, &anchor, 0, &mut map, &mut used, budget,
    )?;
    Ok(ok.then_some(map))
}

#[allow(clippy::too_many_arguments)]
fn place(
    host: &Graph,
    template: &Graph,
    order: &[usize],
    anchor: &[Option<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick()?;
    if depth == order.len() {
        return Ok(true);
    }
    let tv = order[depth];
    let all: Vec<usize>;
    let candidates: &[usize] = match anchor[tv] {
        Some(a) => host.neighbors(map[a]),
        None => {
            all = (0..host.n()).collect();
            &all
        }
    };
    for &hv in candidates {
        if used[hv] || host.degree(hv) < template.degree(tv) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&prev| template.has_edge(tv, prev) == host.has_edge(hv, map[prev]));
        if !consistent {
            continue;
        }
        map[tv] = hv;
        used[hv] = true;
        if place(host, template, order, anchor, depth + 1, map, used, budget)? {
            return Ok(true);
        }
        used[hv] = false;
    }
    map[tv] = usize::MAX;
    Ok(false)
}

fn spindle_witness(p: usize, u: &[usize]) -> PatternWitness {
    let roles = u
        .iter()
        .enumerate()
        .map(|(i, &v)| (format!("u{i}"), v))
        .collect();
    PatternWitness::new(PatternKind::Spindle(p), roles)
}

/// `K4` first, then the expansion shortcut for connected clique expansions,
/// then template search by increasing `p`.
pub(super) fn find_spindle(g: &Graph, budget: &mut Budget) -> Result<Option<PatternWitness>> {
    if let Some(w) = find_fixed_pattern(g, FixedPattern::Clique(4)) {
        return Ok(Some(spindle_witness(1, &w.ordered())));
    }
    if g.n() >= 7 && g.is_connected() {
        if let Some(exp) = recognize_clique_expansion(g)? {
            return Ok(spindle_in_expansion(&exp.parts));
        }
    }
    for p in 2..=(g.n().saturating_sub(1) / 3) {
        if let Some(w) = find_spindle_exact(g, p, budget)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// In `C_q[k]` every hole has length `q`, so a spindle with `p ≥ 2` needs
/// `q = 2p + 1` and `p` pairwise non-consecutive blocks of size ≥ 2, which
/// may be taken as every other block from some start.
fn spindle_in_expansion(parts: &[Vec<usize>]) -> Option<PatternWitness> {
    let q = parts.len();
    if q.is_multiple_of(2) {
        return None;
    }
    let p = (q - 1) / 2;
    let pos = |r: usize, t: usize| &parts[(r + t) % q];
    let r = (0..q).find(|&r| (0..p).all(|j| pos(r, 2 * j).len() >= 2))?;
    let mut u = vec![0usize; 3 * p + 1];
    for i in 1..=p {
        let pair = pos(r, 2 * (i - 1));
        u[3 * i - 2] = pair[0];
        u[3 * i - 1] = pair[1];
        u[3 * i] = pos(r, 2 * i - 1)[0];
    }
    u[0] = pos(r, 2 * p)[0];
    Some(spindle_witness(p, &u))
}

pub(super) fn find_spindle_exact(
    g: &Graph,
    p: usize,
    budget: &mut Budget,
) -> Result<Option<PatternWitness>> {
    match p {
        0 => Ok(None),
        1 => Ok(find_fixed_pattern(g, FixedPattern::Clique(4))
            .map(|w| spindle_witness(1, &w.ordered()))),
        _ => {
            let t = spindle(p)?;
            Ok(find_induced(g, &t, budget)?.map(|m| spindle_witness(p, &m)))
        }
    }
}
