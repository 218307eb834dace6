//! Explicit graph and coloring constructions: Latin-square proper colorings,
//! the matching-based critical colorings, blow-ups, and extremal
//! `S(n,m)`-free graphs.

use crate::error::Error;
use crate::graph::{BipartiteGraph, EdgeColoring};
use crate::turan::turan_bound;

/// Proper `N`-edge-coloring of `K_{N,N}` from the cyclic Latin square:
/// `color(x, y) = ((x + y) mod N) + 1`.
///
/// Every color class is a perfect matching, so the classes realize `N`
/// pairwise disjoint perfect matchings of `K_{N,N}`.
pub fn proper_coloring_latin(n: usize) -> EdgeColoring {
    assert!(n >= 1, "side size must be at least 1");
    EdgeColoring::from_fn(n, n, n as u32, |x, y| ((x + y) % n + 1) as u32)
}

/// The critical `k`-coloring of `K_{kn,kn}` that has no monochromatic
/// `S(n,m)` for any `m >= 1`.
///
/// The `kn` matchings of [`proper_coloring_latin`] are taken in blocks of
/// `n`: color `l+1` is the union of matchings `ln+1 ..= ln+n`, so every
/// color class is `n`-regular and its maximum degree stays below the `n+1`
/// a double-star center needs.
pub fn matching_lower_construction(k: usize, n: usize) -> EdgeColoring {
    assert!(k >= 1 && n >= 1, "color and leaf counts must be at least 1");
    let side = k * n;
    EdgeColoring::from_fn(side, side, k as u32, |x, y| ((x + y) % side / n + 1) as u32)
}

/// Blows every vertex of `base` up into `t` clones: the edge between clones
/// `(u, i)` and `(v, j)` inherits the color of `(u, v)`, with clone `(u, i)`
/// landing at index `u * t + i`.
///
/// If no color class of `base` contains `P4 = S(1,1)`, no color class of the
/// blow-up contains `S(t,t)`.
pub fn blow_up(base: &EdgeColoring, t: usize) -> EdgeColoring {
    assert!(t >= 1, "blow-up factor must be at least 1");
    EdgeColoring::from_fn(base.n1() * t, base.n2() * t, base.k(), |x, y| {
        base.color(x / t, y / t)
    })
}

/// An `S(n,m)`-free spanning subgraph of `K_{p,p}` with exactly
/// `max(np, 2m(p-m))` edges, witnessing that the edge bound is tight.
///
/// Regime A (`np >= 2m(p-m)`): the union of `n` disjoint perfect matchings;
/// every degree is `n`, below the `n+1` a center needs. Regime B: the first
/// `m` vertices of each side are joined completely to the other side's
/// remainder; every edge then has an endpoint of degree exactly `m`.
pub fn turan_extremal(p: usize, n: usize, m: usize) -> Result<BipartiteGraph, Error> {
    let bound = turan_bound(p, n, m)?;
    let graph = if (n * p) as u64 >= bound {
        // regime A: matchings x -> (x + j) mod p for j < n
        BipartiteGraph::from_fn(p, p, |x, y| (p + y - x) % p < n)
    } else {
        // regime B: X1 = Y1 = {0..m-1}, joined to the opposite remainders
        BipartiteGraph::from_fn(p, p, |x, y| (x < m) != (y < m))
    };
    debug_assert_eq!(graph.edge_count() as u64, bound);
    Ok(graph)
}
