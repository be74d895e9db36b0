use crate::error::{Budget, Result};

/// Maximum clique on bit rows (n ≤ 64), greedy-coloring bound.
pub(crate) fn max_clique(rows: &[u64], budget: &mut Budget) -> Result<u64> {
    let n = rows.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0u64;
    let mut best_size = 0u32;
    expand(rows, 0, 0, all, &mut best, &mut best_size, budget)?;
    Ok(best)
}

fn expand(
    rows: &[u64],
    current: u64,
    size: u32,
    mut cand: u64,
    best: &mut u64,
    best_size: &mut u32,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    let (order, bounds) = color_sort(rows, cand);
    for idx in (0..order.len()).rev() {
        if size + bounds[idx] <= *best_size {
            return Ok(());
        }
        let v = order[idx];
        let next = cand & rows[v];
        let with_v = current | 1 << v;
        if next == 0 {
            if size + 1 > *best_size {
                *best_size = size + 1;
                *best = with_v;
            }
        } else {
            expand(rows, with_v, size + 1, next, best, best_size, budget)?;
        }
        cand &= !(1 << v);
    }
    Ok(())
}

/// Greedy sequential coloring of `cand`; returns vertices in color order and
/// the running color count, which bounds any clique inside the suffix.
fn color_sort(rows: &[u64], cand: u64) -> (Vec<usize>, Vec<u32>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1 << v);
            q &= !rows[v];
            uncolored &= !(1 << v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}
