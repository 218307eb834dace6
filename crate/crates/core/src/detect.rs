//! Double-star detection with explicit witnesses, plus a brute-force
//! embedding oracle for small hosts.
//!
//! A bipartite graph contains `S(n,m)` exactly when some edge `(x, y)` has
//! `d(x) >= n+1` and `d(y) >= m+1`, or `d(x) >= m+1` and `d(y) >= n+1`: the
//! centers sit on the edge and the leaf sets live on opposite sides, so they
//! are disjoint automatically. The degree criterion is cross-checked against
//! [`oracle_contains`], which enumerates embeddings outright.

use crate::error::Error;
use crate::graph::{BipartiteGraph, DoubleStarSpec, EdgeColoring, Witness};

/// Finds the lexicographically least `S(n,m)` in `h`, or `None` if `h` is
/// `S(n,m)`-free.
///
/// Witnesses are ordered by `(center_x, center_y)`, then orientation
/// (`n` leaves at the X-side center first), then ascending leaf sets.
pub fn find_double_star(h: &BipartiteGraph, spec: DoubleStarSpec) -> Option<Witness> {
    let deg_x = h.degrees_x();
    let deg_y = h.degrees_y();
    let (n, m) = (spec.n, spec.m);
    for (x, &dx) in deg_x.iter().enumerate() {
        if dx <= n.min(m) {
            continue;
        }
        for y in h.neighbors_x(x) {
            if dx > n && deg_y[y] > m {
                return Some(build_witness(h, x, y, n, m));
            }
            if n != m && dx > m && deg_y[y] > n {
                return Some(build_witness(h, x, y, m, n));
            }
        }
    }
    None
}

/// Assembles the least witness with `a` leaves at `x` and `b` leaves at `y`.
fn build_witness(h: &BipartiteGraph, x: usize, y: usize, a: usize, b: usize) -> Witness {
    let leaves_y: Vec<usize> = h.neighbors_x(x).filter(|&v| v != y).take(a).collect();
    let leaves_x: Vec<usize> = h.neighbors_y(y).filter(|&u| u != x).take(b).collect();
    debug_assert_eq!(leaves_y.len(), a);
    debug_assert_eq!(leaves_x.len(), b);
    Witness {
        color: None,
        center_x: x,
        center_y: y,
        leaves_y,
        leaves_x,
    }
}

/// Resolves a broadcast (length-1) or per-color (length-k) spec list.
pub(crate) fn resolve_specs(
    specs: &[DoubleStarSpec],
    k: usize,
) -> Result<Vec<DoubleStarSpec>, Error> {
    match specs.len() {
        1 => Ok(vec![specs[0]; k]),
        len if len == k => Ok(specs.to_vec()),
        got => Err(Error::SpecArity { k, got }),
    }
}

/// Scans color classes in ascending color order and returns the first
/// class's least `S(n_c, m_c)` witness, tagged with its color.
///
/// A single spec broadcasts to all `k` colors; otherwise `specs` must have
/// length `k`.
pub fn find_monochromatic_double_star(
    coloring: &EdgeColoring,
    specs: &[DoubleStarSpec],
) -> Result<Option<Witness>, Error> {
    let specs = resolve_specs(specs, coloring.k() as usize)?;
    for c in 1..=coloring.k() {
        let class = coloring.color_class(c).expect("color in range");
        if let Some(w) = find_double_star(&class, specs[c as usize - 1]) {
            return Ok(Some(Witness {
                color: Some(c),
                ..w
            }));
        }
    }
    Ok(None)
}

/// Brute-force embedding oracle: enumerates ordered center pairs and leaf
/// subsets explicitly, with no degree shortcut.
///
/// Intended for hosts with `p, q <= 8`; larger inputs are the caller's
/// responsibility.
pub fn oracle_contains(h: &BipartiteGraph, spec: DoubleStarSpec) -> bool {
    let (p, q) = (h.p(), h.q());
    for cx in 0..p {
        for cy in 0..q {
            if !h.has_edge(cx, cy) {
                continue;
            }
            for (a, b) in [(spec.n, spec.m), (spec.m, spec.n)] {
                if has_leaf_subset_y(h, cx, cy, a) && has_leaf_subset_x(h, cx, cy, b) {
                    return true;
                }
            }
        }
    }
    false
}

/// Enumerates all size-`a` subsets of Y and tests each as a leaf set at `cx`.
fn has_leaf_subset_y(h: &BipartiteGraph, cx: usize, cy: usize, a: usize) -> bool {
    let q = h.q();
    debug_assert!(q <= 24, "oracle is for tiny hosts");
    'subset: for mask in 0u32..(1 << q) {
        if mask.count_ones() as usize != a {
            continue;
        }
        for y in 0..q {
            if mask >> y & 1 == 1 && (y == cy || !h.has_edge(cx, y)) {
                continue 'subset;
            }
        }
        return true;
    }
    false
}

fn has_leaf_subset_x(h: &BipartiteGraph, cx: usize, cy: usize, b: usize) -> bool {
    let p = h.p();
    debug_assert!(p <= 24, "oracle is for tiny hosts");
    'subset: for mask in 0u32..(1 << p) {
        if mask.count_ones() as usize != b {
            continue;
        }
        for x in 0..p {
            if mask >> x & 1 == 1 && (x == cx || !h.has_edge(x, cy)) {
                continue 'subset;
            }
        }
        return true;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn spec(n: usize, m: usize) -> DoubleStarSpec {
        DoubleStarSpec::new(n, m)
    }

    #[test]
    fn complete_k22_contains_p4() {
        let g = BipartiteGraph::complete(2, 2);
        let w = find_double_star(&g, spec(1, 1)).unwrap();
        assert_eq!((w.center_x, w.center_y), (0, 0));
        assert_eq!(w.leaves_y, vec![1]);
        assert_eq!(w.leaves_x, vec![1]);
        assert!(w.validates_in(&g, spec(1, 1)));
        assert!(oracle_contains(&g, spec(1, 1)));
    }

    #[test]
    fn perfect_matching_is_p4_free() {
        let g = BipartiteGraph::from_fn(4, 4, |x, y| x == y);
        assert_eq!(find_double_star(&g, spec(1, 1)), None);
        assert!(!oracle_contains(&g, spec(1, 1)));
    }

    #[test]
    fn two_disjoint_stars_are_p4_free() {
        // x0 ~ {y0, y1, y2} and y3 ~ {x1, x2, x3}: no edge joins the centers
        let g = BipartiteGraph::from_edges(4, 4, &[(0, 0), (0, 1), (0, 2), (1, 3), (2, 3), (3, 3)]);
        assert!(!oracle_contains(&g, spec(1, 1)));
        assert_eq!(find_double_star(&g, spec(1, 1)), None);
    }

    #[test]
    fn orientation_is_symmetric() {
        // S(2,1) = S(1,2): center x has 1 extra leaf, center y has 2
        let g = BipartiteGraph::from_edges(3, 3, &[(0, 0), (0, 1), (1, 0), (2, 0)]);
        let w21 = find_double_star(&g, spec(2, 1));
        let w12 = find_double_star(&g, spec(1, 2));
        assert!(w21.is_some());
        assert!(w12.is_some());
        assert!(w21.unwrap().validates_in(&g, spec(2, 1)));
        assert!(w12.unwrap().validates_in(&g, spec(1, 2)));
    }

    #[test]
    fn orientation_tie_puts_n_leaves_at_x_first() {
        // both orientations available at edge (0,0); n-at-x is reported
        let g = BipartiteGraph::from_edges(3, 3, &[(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)]);
        let w = find_double_star(&g, spec(2, 1)).unwrap();
        assert_eq!(w.leaves_y.len(), 2);
        assert_eq!(w.leaves_x.len(), 1);
        assert_eq!(w.leaves_y, vec![1, 2]);
        assert_eq!(w.leaves_x, vec![1]);
    }

    #[test]
    fn monochromatic_constant_coloring() {
        let col = EdgeColoring::from_fn(3, 3, 1, |_, _| 1);
        let w = find_monochromatic_double_star(&col, &[spec(1, 1)])
            .unwrap()
            .unwrap();
        assert_eq!(w.color, Some(1));
        assert!(w.validates_in_coloring(&col, &[spec(1, 1)]));
    }

    #[test]
    fn spec_arity_is_enforced() {
        let col = EdgeColoring::from_fn(2, 2, 2, |x, _| (x + 1) as u32);
        assert_eq!(
            find_monochromatic_double_star(&col, &[spec(1, 1), spec(1, 1), spec(1, 1)]),
            Err(Error::SpecArity { k: 2, got: 3 })
        );
        // broadcast of a single spec is accepted
        assert!(find_monochromatic_double_star(&col, &[spec(1, 1)]).is_ok());
    }

    #[test]
    fn colors_scanned_in_ascending_order() {
        // both classes contain S(1,1); the color-1 witness is reported
        let col = EdgeColoring::from_fn(4, 4, 2, |x, _| if x < 2 { 1 } else { 2 });
        let w = find_monochromatic_double_star(&col, &[spec(1, 1)])
            .unwrap()
            .unwrap();
        assert_eq!(w.color, Some(1));
    }

    #[test]
    fn determinism() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let g = BipartiteGraph::from_fn(5, 5, |_, _| rng.random_bool(0.5));
            assert_eq!(
                find_double_star(&g, spec(2, 1)),
                find_double_star(&g, spec(2, 1))
            );
        }
    }

    #[test]
    fn monotone_under_edge_addition() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..200 {
            let g = BipartiteGraph::from_fn(5, 5, |_, _| rng.random_bool(0.4));
            let s = spec(rng.random_range(1..=2), rng.random_range(1..=2));
            if find_double_star(&g, s).is_none() {
                continue;
            }
            let (x, y) = (rng.random_range(0..5), rng.random_range(0..5));
            assert!(find_double_star(&g.with_edge(x, y), s).is_some());
        }
    }

    #[test]
    fn oracle_agreement_exhaustive_3x3() {
        // all 512 subgraphs of K_{3,3}, all specs with n, m <= 2
        for mask in 0u32..(1 << 9) {
            let g = BipartiteGraph::from_fn(3, 3, |x, y| mask >> (3 * x + y) & 1 == 1);
            for n in 1..=2 {
                for m in 1..=2 {
                    let s = spec(n, m);
                    let found = find_double_star(&g, s);
                    assert_eq!(
                        found.is_some(),
                        oracle_contains(&g, s),
                        "disagreement on mask {mask:#b} spec {s}"
                    );
                    if let Some(w) = found {
                        assert!(w.validates_in(&g, s), "invalid witness on mask {mask:#b}");
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_agreement_random_5x5() {
        let mut rng = StdRng::seed_from_u64(0xB15A);
        for round in 0..500 {
            let density = rng.random_range(0.2..0.8);
            let g = BipartiteGraph::from_fn(5, 5, |_, _| rng.random_bool(density));
            for n in 1..=2 {
                for m in 1..=2 {
                    let s = spec(n, m);
                    assert_eq!(
                        find_double_star(&g, s).is_some(),
                        oracle_contains(&g, s),
                        "disagreement in round {round} on {g:?} spec {s}"
                    );
                }
            }
        }
    }
}
