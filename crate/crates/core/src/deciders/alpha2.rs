use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::oracle::maximum_matching;

/// Exact chromatic number when `α(G) ≤ 2`: color classes have at most two
/// vertices, so `χ = n − ν(Ḡ)` and a maximum matching of the complement
/// gives an optimal coloring. Classes are numbered by their smallest vertex.
///
/// Fails with [`Error::AlphaNotTwo`] (reporting 3) if the complement has a
/// triangle.
pub fn chi_alpha2(g: &Graph) -> Result<(usize, Coloring)> {
    let n = g.n();
    let co = g.complement();
    for u in 0..n {
        for &v in co.neighbors(u).iter().filter(|&&v| v > u) {
            if co.neighbors(v).iter().any(|&w| w > v && co.has_edge(u, w)) {
                return Err(Error::AlphaNotTwo(3));
            }
        }
    }
    let mut partner = vec![usize::MAX; n];
    for (u, v) in maximum_matching(&co) {
        partner[u] = v;
        partner[v] = u;
    }
    let mut colors = vec![0usize; n];
    let mut next = 0;
    for v in 0..n {
        if colors[v] == 0 {
            next += 1;
            colors[v] = next;
            if partner[v] != usize::MAX {
                colors[partner[v]] = next;
            }
        }
    }
    Ok((next, Coloring::new(colors, next)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{antihole, complete, cycle};
    use crate::graph::is_proper_coloring;

    #[test]
    fn antihole_values() {
        // χ(C̄_p) = p − ⌊p/2⌋.
        for (p, chi) in [(5, 3), (7, 4), (9, 5), (11, 6)] {
            let g = antihole(p).unwrap();
            let (x, c) = chi_alpha2(&g).unwrap();
            assert_eq!(x, chi);
            assert!(is_proper_coloring(&g, &c).unwrap());
        }
        assert_eq!(chi_alpha2(&complete(4).unwrap()).unwrap().0, 4);
        assert!(matches!(
            chi_alpha2(&cycle(7).unwrap()),
            Err(Error::AlphaNotTwo(3))
        ));
    }
}
