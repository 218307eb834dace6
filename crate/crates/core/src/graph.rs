//! Value types: bipartite graphs, total edge colorings, double-star specs,
//! and explicit double-star witnesses.
//!
//! All values are immutable once constructed and may be shared freely across
//! threads. Vertex indices are 0-based and the two sides are indexed
//! independently; colors are 1-based.

use std::fmt;

use crate::error::Error;

/// Spanning subgraph of the complete bipartite graph `K_{p,q}`.
///
/// Side X has `p` vertices, side Y has `q`. Adjacency is a dense bit matrix
/// with one row of `u64` words per X vertex; bit `y` of row `x` is the edge
/// `(x, y)`.
#[derive(Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    p: usize,
    q: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BipartiteGraph {
    /// Edgeless spanning subgraph of `K_{p,q}`.
    ///
    /// # Panics
    /// Panics if `p` or `q` is zero (degenerate sides are rejected).
    pub fn empty(p: usize, q: usize) -> Self {
        assert!(p >= 1 && q >= 1, "side sizes must be at least 1");
        let words = q.div_ceil(64);
        Self {
            p,
            q,
            words,
            rows: vec![0; p * words],
        }
    }

    /// The complete bipartite graph `K_{p,q}`.
    pub fn complete(p: usize, q: usize) -> Self {
        Self::from_fn(p, q, |_, _| true)
    }

    /// Builds a graph by evaluating `f(x, y)` for every pair.
    pub fn from_fn(p: usize, q: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(p, q);
        for x in 0..p {
            for y in 0..q {
                if f(x, y) {
                    g.set_edge(x, y);
                }
            }
        }
        g
    }

    /// Builds a graph from an edge list. Duplicates are collapsed.
    ///
    /// # Panics
    /// Panics if an edge is out of range.
    pub fn from_edges(p: usize, q: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(p, q);
        for &(x, y) in edges {
            assert!(x < p && y < q, "edge ({x}, {y}) out of range for {p}x{q}");
            g.set_edge(x, y);
        }
        g
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        debug_assert!(x < self.p && y < self.q);
        self.rows[x * self.words + y / 64] >> (y % 64) & 1 != 0
    }

    pub(crate) fn set_edge(&mut self, x: usize, y: usize) {
        debug_assert!(x < self.p && y < self.q);
        self.rows[x * self.words + y / 64] |= 1 << (y % 64);
    }

    pub(crate) fn clear_edge(&mut self, x: usize, y: usize) {
        debug_assert!(x < self.p && y < self.q);
        self.rows[x * self.words + y / 64] &= !(1 << (y % 64));
    }

    /// Copy of the graph with edge `(x, y)` present.
    pub fn with_edge(&self, x: usize, y: usize) -> Self {
        let mut g = self.clone();
        g.set_edge(x, y);
        g
    }

    /// Copy of the graph with edge `(x, y)` absent.
    pub fn without_edge(&self, x: usize, y: usize) -> Self {
        let mut g = self.clone();
        g.clear_edge(x, y);
        g
    }

    /// Number of edges `e(H)`.
    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Degree of X-vertex `x` (row popcount).
    pub fn degree_x(&self, x: usize) -> usize {
        assert!(x < self.p);
        self.rows[x * self.words..(x + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Degree of Y-vertex `y` (column popcount).
    pub fn degree_y(&self, y: usize) -> usize {
        assert!(y < self.q);
        (0..self.p).filter(|&x| self.has_edge(x, y)).count()
    }

    /// All X-side degrees.
    pub fn degrees_x(&self) -> Vec<usize> {
        (0..self.p).map(|x| self.degree_x(x)).collect()
    }

    /// All Y-side degrees, in one pass over the rows.
    pub fn degrees_y(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.q];
        for x in 0..self.p {
            for y in self.neighbors_x(x) {
                deg[y] += 1;
            }
        }
        deg
    }

    /// Y-neighbors of X-vertex `x`, ascending.
    pub fn neighbors_x(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        assert!(x < self.p);
        self.rows[x * self.words..(x + 1) * self.words]
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| BitIter(bits).map(move |b| w * 64 + b))
    }

    /// X-neighbors of Y-vertex `y`, ascending.
    pub fn neighbors_y(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        assert!(y < self.q);
        (0..self.p).filter(move |&x| self.has_edge(x, y))
    }

    /// Edges in lexicographic `(x, y)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.p).flat_map(move |x| self.neighbors_x(x).map(move |y| (x, y)))
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BipartiteGraph {}x{} {{", self.p, self.q)?;
        for x in 0..self.p {
            if x > 0 {
                write!(f, ",")?;
            }
            write!(f, " ")?;
            for y in 0..self.q {
                write!(f, "{}", u8::from(self.has_edge(x, y)))?;
            }
        }
        write!(f, " }}")
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Total `k`-edge-coloring of the complete bipartite graph `K_{N1,N2}`.
///
/// Every one of the `N1 * N2` edges carries exactly one color from `1..=k`.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    n1: usize,
    n2: usize,
    k: u32,
    colors: Vec<u32>,
}

impl EdgeColoring {
    /// Builds a coloring by evaluating `f(x, y)` for every edge.
    ///
    /// # Panics
    /// Panics if a side is empty, `k` is zero, or `f` returns a color
    /// outside `1..=k`.
    pub fn from_fn(n1: usize, n2: usize, k: u32, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        assert!(n1 >= 1 && n2 >= 1, "side sizes must be at least 1");
        assert!(k >= 1, "color count must be at least 1");
        let mut colors = Vec::with_capacity(n1 * n2);
        for x in 0..n1 {
            for y in 0..n2 {
                let c = f(x, y);
                assert!(
                    (1..=k).contains(&c),
                    "color {c} at ({x}, {y}) out of range 1..={k}"
                );
                colors.push(c);
            }
        }
        Self { n1, n2, k, colors }
    }

    /// Assembles a coloring from a prevalidated row-major color vector.
    pub(crate) fn from_raw(n1: usize, n2: usize, k: u32, colors: Vec<u32>) -> Self {
        debug_assert_eq!(colors.len(), n1 * n2);
        debug_assert!(colors.iter().all(|c| (1..=k).contains(c)));
        Self { n1, n2, k, colors }
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    /// Number of colors `k`.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Color of edge `(x, y)`.
    #[inline]
    pub fn color(&self, x: usize, y: usize) -> u32 {
        assert!(x < self.n1 && y < self.n2);
        self.colors[x * self.n2 + y]
    }

    /// Spanning subgraph of `K_{N1,N2}` holding exactly the edges of color `c`.
    ///
    /// The classes over `c = 1..=k` partition the edge set.
    pub fn color_class(&self, c: u32) -> Result<BipartiteGraph, Error> {
        if !(1..=self.k).contains(&c) {
            return Err(Error::ColorOutOfRange {
                color: c,
                k: self.k,
            });
        }
        Ok(BipartiteGraph::from_fn(self.n1, self.n2, |x, y| {
            self.color(x, y) == c
        }))
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoring {}x{} k={} {{", self.n1, self.n2, self.k)?;
        for x in 0..self.n1 {
            if x > 0 {
                write!(f, ",")?;
            }
            write!(f, " ")?;
            for y in 0..self.n2 {
                write!(f, "{}", self.color(x, y))?;
            }
        }
        write!(f, " }}")
    }
}

/// The double star `S(n,m)`: an `n`-leaf star and an `m`-leaf star joined by
/// an edge between their centers.
///
/// `S(n,m)` and `S(m,n)` are isomorphic; detection treats the pair as
/// unordered.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DoubleStarSpec {
    pub n: usize,
    pub m: usize,
}

impl DoubleStarSpec {
    /// # Panics
    /// Panics if `n` or `m` is zero.
    pub fn new(n: usize, m: usize) -> Self {
        assert!(
            n >= 1 && m >= 1,
            "double star leaf counts must be at least 1"
        );
        Self { n, m }
    }

    /// The same spec with `n >= m`.
    pub fn normalized(self) -> Self {
        if self.n >= self.m {
            self
        } else {
            Self {
                n: self.m,
                m: self.n,
            }
        }
    }
}

impl fmt::Display for DoubleStarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.n, self.m)
    }
}

/// An explicit embedding of a double star: the two centers, the leaf sets,
/// and (for colorings) the color class it lives in.
///
/// `leaves_y` are the leaves at `center_x` (they live on side Y), `leaves_x`
/// the leaves at `center_y`. The leaf counts are `{n, m}` in one of the two
/// orientations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub color: Option<u32>,
    pub center_x: usize,
    pub center_y: usize,
    pub leaves_y: Vec<usize>,
    pub leaves_x: Vec<usize>,
}

impl Witness {
    /// Re-validates the witness against a plain graph: the center edge and
    /// every leaf edge must be present, leaves must avoid the centers, and
    /// the leaf counts must be `{n, m}` as an unordered pair.
    pub fn validates_in(&self, h: &BipartiteGraph, spec: DoubleStarSpec) -> bool {
        let (a, b) = (self.leaves_y.len(), self.leaves_x.len());
        if (a, b) != (spec.n, spec.m) && (a, b) != (spec.m, spec.n) {
            return false;
        }
        if self.center_x >= h.p() || self.center_y >= h.q() {
            return false;
        }
        if !h.has_edge(self.center_x, self.center_y) {
            return false;
        }
        if !strictly_ascending(&self.leaves_y) || !strictly_ascending(&self.leaves_x) {
            return false;
        }
        self.leaves_y
            .iter()
            .all(|&y| y < h.q() && y != self.center_y && h.has_edge(self.center_x, y))
            && self
                .leaves_x
                .iter()
                .all(|&x| x < h.p() && x != self.center_x && h.has_edge(x, self.center_y))
    }

    /// Re-validates a colored witness against its color class. `specs` is
    /// either a single broadcast spec or one spec per color.
    pub fn validates_in_coloring(&self, coloring: &EdgeColoring, specs: &[DoubleStarSpec]) -> bool {
        let Some(c) = self.color else {
            return false;
        };
        let Ok(class) = coloring.color_class(c) else {
            return false;
        };
        let spec = match specs.len() {
            1 => specs[0],
            len if len == coloring.k() as usize => specs[c as usize - 1],
            _ => return false,
        };
        self.validates_in(&class, spec)
    }
}

fn strictly_ascending(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}
