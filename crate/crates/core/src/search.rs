//! Exhaustive decision of the arrows relation
//! `K_{N,N} -> (S(n_1,m_1), ..., S(n_k,m_k))` by depth-first search over
//! edge colorings, and the derived Ramsey values.
//!
//! Edges are colored in row-major order. A branch dies the moment a color
//! class contains its forbidden double star; witnesses never disappear as
//! edges are added, so pruning is sound. Colors with equal (unordered)
//! specs are interchangeable, and the search only visits colorings in which
//! the first occurrences of such colors appear in ascending color order.
//! For a single broadcast spec this fixes the first edge to color 1 and
//! admits a new color only once its predecessor is in use.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::detect::resolve_specs;
use crate::error::Error;
use crate::graph::{DoubleStarSpec, EdgeColoring};

/// Outcome of an arrows run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// Every coloring of the (symmetry-reduced) space contains a
    /// monochromatic target; certified by exhaustion.
    Arrows,
    /// A critical coloring exists; carried as the certificate.
    NotArrows,
    /// The budget ran out before the space was decided.
    Indeterminate,
}

/// Node and wall-clock limits for a search. Both default to unlimited.
#[derive(Clone, Copy, Default, Debug)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub budget: Budget,
    /// Worker count; 1 searches depth-first in deterministic order.
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            budget: Budget::default(),
            threads: 1,
        }
    }
}

/// Search effort counters. `nodes` counts color placements tried.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Verdict, optional critical-coloring certificate, and effort counters.
#[derive(Clone, Debug)]
pub struct ArrowsResult {
    pub verdict: Verdict,
    /// A critical coloring; present exactly when the verdict is `NotArrows`.
    pub certificate: Option<EdgeColoring>,
    pub stats: SearchStats,
}

/// Per-color incremental state: one-word adjacency bitsets, degrees, and
/// the sets of vertices at or above each double-star center threshold.
///
/// After placing edge `(x, y)`, a new monochromatic double star exists in
/// this class iff one of the four degree/bitset tests below fires; any
/// witness must use a center edge incident to `x` or `y`, since no other
/// degree changed.
struct ClassState {
    rows: Vec<u64>,
    cols: Vec<u64>,
    deg_x: Vec<u32>,
    deg_y: Vec<u32>,
    hx_a: u64,
    hx_b: u64,
    hy_a: u64,
    hy_b: u64,
    /// Center thresholds n+1 and m+1.
    a: u32,
    b: u32,
}

impl ClassState {
    fn new(n: usize, spec: DoubleStarSpec) -> Self {
        Self {
            rows: vec![0; n],
            cols: vec![0; n],
            deg_x: vec![0; n],
            deg_y: vec![0; n],
            hx_a: 0,
            hx_b: 0,
            hy_a: 0,
            hy_b: 0,
            a: spec.n as u32 + 1,
            b: spec.m as u32 + 1,
        }
    }

    /// Adds edge `(x, y)` and reports whether the class now contains its
    /// double star.
    #[inline]
    fn place(&mut self, x: usize, y: usize) -> bool {
        self.rows[x] |= 1 << y;
        self.cols[y] |= 1 << x;
        self.deg_x[x] += 1;
        self.deg_y[y] += 1;
        let dx = self.deg_x[x];
        let dy = self.deg_y[y];
        if dx == self.a {
            self.hx_a |= 1 << x;
        }
        if dx == self.b {
            self.hx_b |= 1 << x;
        }
        if dy == self.a {
            self.hy_a |= 1 << y;
        }
        if dy == self.b {
            self.hy_b |= 1 << y;
        }
        (dx >= self.a && self.rows[x] & self.hy_b != 0)
            || (dx >= self.b && self.rows[x] & self.hy_a != 0)
            || (dy >= self.a && self.cols[y] & self.hx_b != 0)
            || (dy >= self.b && self.cols[y] & self.hx_a != 0)
    }

    #[inline]
    fn unplace(&mut self, x: usize, y: usize) {
        let dx = self.deg_x[x];
        let dy = self.deg_y[y];
        if dx == self.a {
            self.hx_a &= !(1 << x);
        }
        if dx == self.b {
            self.hx_b &= !(1 << x);
        }
        if dy == self.a {
            self.hy_a &= !(1 << y);
        }
        if dy == self.b {
            self.hy_b &= !(1 << y);
        }
        self.deg_x[x] -= 1;
        self.deg_y[y] -= 1;
        self.rows[x] &= !(1 << y);
        self.cols[y] &= !(1 << x);
    }
}

/// State shared between workers: a monotone stop flag, the total node
/// count, whether the budget fired, and the certificate slot (written at
/// most once).
struct Shared {
    stop: AtomicBool,
    budget_hit: AtomicBool,
    nodes: AtomicU64,
    certificate: Mutex<Option<Vec<u32>>>,
    start: Instant,
    budget: Budget,
}

impl Shared {
    fn new(budget: Budget) -> Self {
        Self {
            stop: AtomicBool::new(false),
            budget_hit: AtomicBool::new(false),
            nodes: AtomicU64::new(0),
            certificate: Mutex::new(None),
            start: Instant::now(),
            budget,
        }
    }

    fn offer_certificate(&self, assignment: &[u32]) {
        let mut slot = self.certificate.lock().unwrap();
        if slot.is_none() {
            *slot = Some(assignment.to_vec());
        }
        self.stop.store(true, Ordering::Relaxed);
    }

    fn trip_budget(&self) {
        self.budget_hit.store(true, Ordering::Relaxed);
        self.stop.store(true, Ordering::Relaxed);
    }
}

enum Flow {
    Exhausted,
    Stopped,
}

struct Worker<'a> {
    n: usize,
    k: usize,
    classes: Vec<ClassState>,
    /// Placements per color, for the canonical first-use order.
    used: Vec<u64>,
    /// Greatest earlier color with the same unordered spec (0 = none).
    pred: Vec<usize>,
    assignment: Vec<u32>,
    shared: &'a Shared,
    ticks: u64,
}

impl<'a> Worker<'a> {
    fn new(n: usize, specs: &[DoubleStarSpec], shared: &'a Shared) -> Self {
        let k = specs.len();
        let mut pred = vec![0usize; k + 1];
        for c in 1..=k {
            pred[c] = (1..c)
                .rev()
                .find(|&d| specs[d - 1].normalized() == specs[c - 1].normalized())
                .unwrap_or(0);
        }
        Self {
            n,
            k,
            classes: specs.iter().map(|&s| ClassState::new(n, s)).collect(),
            used: vec![0; k + 1],
            pred,
            assignment: vec![0; n * n],
            shared,
            ticks: 0,
        }
    }

    /// Counts a placement against the budget; false means stop.
    #[inline]
    fn tick(&mut self) -> bool {
        self.ticks += 1;
        let total = self.shared.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(max) = self.shared.budget.max_nodes {
            if total > max {
                self.shared.trip_budget();
                return false;
            }
        }
        if self.ticks.is_multiple_of(4096) {
            if let Some(max) = self.shared.budget.max_time {
                if self.shared.start.elapsed() > max {
                    self.shared.trip_budget();
                    return false;
                }
            }
            if self.shared.stop.load(Ordering::Relaxed) {
                return false;
            }
        }
        true
    }

    /// Exhausts the subtree below edge index `idx`.
    fn dfs(&mut self, idx: usize) -> Flow {
        if idx == self.n * self.n {
            self.shared.offer_certificate(&self.assignment);
            return Flow::Stopped;
        }
        let (x, y) = (idx / self.n, idx % self.n);
        for c in 1..=self.k {
            if self.pred[c] != 0 && self.used[self.pred[c]] == 0 {
                continue;
            }
            if !self.tick() {
                return Flow::Stopped;
            }
            let witness = self.classes[c - 1].place(x, y);
            if !witness {
                self.assignment[idx] = c as u32;
                self.used[c] += 1;
                let flow = self.dfs(idx + 1);
                self.used[c] -= 1;
                self.classes[c - 1].unplace(x, y);
                if let Flow::Stopped = flow {
                    return Flow::Stopped;
                }
            } else {
                self.classes[c - 1].unplace(x, y);
            }
        }
        Flow::Exhausted
    }

    /// Enumerates the canonical, witness-free color prefixes of the first
    /// `depth` edges, in DFS order.
    fn prefixes(&mut self, idx: usize, depth: usize, out: &mut Vec<Vec<u32>>) {
        if idx == depth {
            out.push(self.assignment[..depth].to_vec());
            return;
        }
        let (x, y) = (idx / self.n, idx % self.n);
        for c in 1..=self.k {
            if self.pred[c] != 0 && self.used[self.pred[c]] == 0 {
                continue;
            }
            let witness = self.classes[c - 1].place(x, y);
            if !witness {
                self.assignment[idx] = c as u32;
                self.used[c] += 1;
                self.prefixes(idx + 1, depth, out);
                self.used[c] -= 1;
            }
            self.classes[c - 1].unplace(x, y);
        }
    }

    /// Replays a prefix produced by [`Worker::prefixes`].
    fn replay(&mut self, prefix: &[u32]) {
        for (idx, &c) in prefix.iter().enumerate() {
            let (x, y) = (idx / self.n, idx % self.n);
            let witness = self.classes[c as usize - 1].place(x, y);
            debug_assert!(!witness, "prefix was enumerated witness-free");
            self.assignment[idx] = c;
            self.used[c as usize] += 1;
        }
    }
}

/// Decides whether every `k`-coloring of `K_{N,N}` contains a monochromatic
/// `S(n_c, m_c)` in some color `c`.
///
/// `specs` is a single broadcast spec or one per color. The result is
/// `NotArrows` with the first critical coloring completed (deterministic
/// for `threads = 1`), `Arrows` after exhausting the reduced space, or
/// `Indeterminate` when the budget fires first.
pub fn arrows(
    n: usize,
    k: usize,
    specs: &[DoubleStarSpec],
    opts: &SearchOptions,
) -> Result<ArrowsResult, Error> {
    assert!(n >= 1 && k >= 1);
    if n > 64 {
        return Err(Error::HostTooLarge { n });
    }
    let specs = resolve_specs(specs, k)?;
    let shared = Shared::new(opts.budget);

    let threads = opts.threads.max(1);
    if threads == 1 {
        let mut worker = Worker::new(n, &specs, &shared);
        worker.dfs(0);
    } else {
        // the first couple of edge-color choices partition the space
        let depth = 2.min(n * n);
        let mut prefixes = Vec::new();
        Worker::new(n, &specs, &shared).prefixes(0, depth, &mut prefixes);
        let next = AtomicUsize::new(0);
        std::thread::scope(|scope| {
            for _ in 0..threads.min(prefixes.len().max(1)) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= prefixes.len() || shared.stop.load(Ordering::Relaxed) {
                        break;
                    }
                    let mut worker = Worker::new(n, &specs, &shared);
                    worker.replay(&prefixes[i]);
                    worker.dfs(depth);
                });
            }
        });
    }

    let certificate = shared
        .certificate
        .lock()
        .unwrap()
        .take()
        .map(|assignment| EdgeColoring::from_raw(n, n, k as u32, assignment));
    let verdict = if certificate.is_some() {
        Verdict::NotArrows
    } else if shared.budget_hit.load(Ordering::Relaxed) {
        Verdict::Indeterminate
    } else {
        Verdict::Arrows
    };
    Ok(ArrowsResult {
        verdict,
        certificate,
        stats: SearchStats {
            nodes: shared.nodes.load(Ordering::Relaxed),
            elapsed: shared.start.elapsed(),
        },
    })
}

/// Outcome of a Ramsey-value sweep.
///
/// `value` is the least `N` with `K_{N,N} -> (...)` when the sweep decided
/// it within the cap; otherwise `lower` reports the largest proven
/// `r_bip >= lower`, and `indeterminate_at` the host size whose search ran
/// out of budget, if any.
#[derive(Clone, Debug)]
pub struct RamseyResult {
    pub value: Option<usize>,
    pub lower: usize,
    pub indeterminate_at: Option<usize>,
    pub stats: SearchStats,
}

/// Runs [`arrows`] for `N = 1, 2, ...` up to `cap` and returns the least
/// arrowing `N`.
///
/// Arrows is monotone in `N` (restrict a coloring of the larger host), so
/// the sweep stops at the first success.
pub fn ramsey_bip(
    k: usize,
    specs: &[DoubleStarSpec],
    cap: usize,
    opts: &SearchOptions,
) -> Result<RamseyResult, Error> {
    assert!(cap >= 1);
    resolve_specs(specs, k)?;
    let mut stats = SearchStats {
        nodes: 0,
        elapsed: Duration::ZERO,
    };
    let mut lower = 1;
    for n in 1..=cap {
        let r = arrows(n, k, specs, opts)?;
        stats.nodes += r.stats.nodes;
        stats.elapsed += r.stats.elapsed;
        match r.verdict {
            Verdict::Arrows => {
                return Ok(RamseyResult {
                    value: Some(n),
                    lower: n,
                    indeterminate_at: None,
                    stats,
                })
            }
            Verdict::NotArrows => lower = n + 1,
            Verdict::Indeterminate => {
                return Ok(RamseyResult {
                    value: None,
                    lower,
                    indeterminate_at: Some(n),
                    stats,
                })
            }
        }
    }
    Ok(RamseyResult {
        value: None,
        lower,
        indeterminate_at: None,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::find_monochromatic_double_star;

    fn spec(n: usize, m: usize) -> DoubleStarSpec {
        DoubleStarSpec::new(n, m)
    }

    /// Plain enumeration of all k^(N*N) colorings, no pruning, no symmetry.
    fn arrows_by_enumeration(n: usize, k: u32, specs: &[DoubleStarSpec]) -> bool {
        let edges = n * n;
        let mut assignment = vec![1u32; edges];
        loop {
            let coloring = EdgeColoring::from_fn(n, n, k, |x, y| assignment[x * n + y]);
            if find_monochromatic_double_star(&coloring, specs)
                .unwrap()
                .is_none()
            {
                return false;
            }
            // odometer step
            let mut i = 0;
            loop {
                if i == edges {
                    return true;
                }
                if assignment[i] < k {
                    assignment[i] += 1;
                    break;
                }
                assignment[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn agrees_with_plain_enumeration() {
        let opts = SearchOptions::default();
        let cases: Vec<(usize, usize, Vec<DoubleStarSpec>)> = vec![
            (1, 1, vec![spec(1, 1)]),
            (2, 1, vec![spec(1, 1)]),
            (2, 2, vec![spec(1, 1)]),
            (3, 2, vec![spec(1, 1)]),
            (3, 2, vec![spec(2, 1)]),
            (3, 1, vec![spec(2, 1)]),
            (2, 2, vec![spec(2, 1), spec(1, 1)]),
            (2, 2, vec![spec(1, 1), spec(2, 1)]),
            (3, 2, vec![spec(1, 1), spec(2, 1)]),
            (2, 3, vec![spec(1, 1)]),
        ];
        for (n, k, specs) in cases {
            let expected = arrows_by_enumeration(n, k as u32, &specs);
            let got = arrows(n, k, &specs, &opts).unwrap();
            let wanted = if expected {
                Verdict::Arrows
            } else {
                Verdict::NotArrows
            };
            assert_eq!(got.verdict, wanted, "N={n} k={k} specs={specs:?}");
        }
    }

    #[test]
    fn certificates_are_valid_and_deterministic() {
        let opts = SearchOptions::default();
        let r1 = arrows(2, 2, &[spec(1, 1)], &opts).unwrap();
        let r2 = arrows(2, 2, &[spec(1, 1)], &opts).unwrap();
        assert_eq!(r1.verdict, Verdict::NotArrows);
        let c1 = r1.certificate.unwrap();
        let c2 = r2.certificate.unwrap();
        assert_eq!(c1, c2);
        assert_eq!(
            find_monochromatic_double_star(&c1, &[spec(1, 1)]).unwrap(),
            None
        );
    }

    #[test]
    fn known_p4_values() {
        let opts = SearchOptions::default();
        assert_eq!(
            arrows(3, 2, &[spec(1, 1)], &opts).unwrap().verdict,
            Verdict::Arrows
        );
        assert_eq!(
            arrows(2, 2, &[spec(1, 1)], &opts).unwrap().verdict,
            Verdict::NotArrows
        );
        let r = ramsey_bip(2, &[spec(1, 1)], 4, &opts).unwrap();
        assert_eq!(r.value, Some(3));
    }

    #[test]
    fn asymmetric_pair() {
        let opts = SearchOptions::default();
        let r = arrows(4, 2, &[spec(2, 1), spec(1, 1)], &opts).unwrap();
        assert_eq!(r.verdict, Verdict::Arrows);
        let r = ramsey_bip(2, &[spec(2, 1), spec(1, 1)], 5, &opts).unwrap();
        assert_eq!(r.value, Some(4));
    }

    #[test]
    fn one_color_is_complete_graph_containment() {
        let opts = SearchOptions::default();
        // K_{N,N} -> (S(n,m); 1) iff N >= n+1
        for n in 1..=3 {
            let r = ramsey_bip(1, &[spec(n, 1)], 6, &opts).unwrap();
            assert_eq!(r.value, Some(n + 1));
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = SearchOptions::default();
        let par = SearchOptions {
            threads: 4,
            ..Default::default()
        };
        for (n, k, specs) in [
            (3, 2, vec![spec(1, 1)]),
            (4, 2, vec![spec(2, 1), spec(1, 1)]),
            (2, 2, vec![spec(1, 1)]),
        ] {
            let a = arrows(n, k, &specs, &seq).unwrap();
            let b = arrows(n, k, &specs, &par).unwrap();
            assert_eq!(a.verdict, b.verdict, "N={n} k={k}");
            if let Some(cert) = b.certificate {
                assert_eq!(find_monochromatic_double_star(&cert, &specs).unwrap(), None);
            }
        }
    }

    #[test]
    fn node_budget_produces_indeterminate() {
        let opts = SearchOptions {
            budget: Budget {
                max_nodes: Some(10),
                max_time: None,
            },
            threads: 1,
        };
        let r = arrows(4, 2, &[spec(2, 1)], &opts).unwrap();
        assert_eq!(r.verdict, Verdict::Indeterminate);
        assert!(r.certificate.is_none());

        let sweep = ramsey_bip(2, &[spec(2, 1)], 5, &opts).unwrap();
        assert_eq!(sweep.value, None);
        assert!(sweep.indeterminate_at.is_some());
    }

    #[test]
    fn tiny_budget_still_reports_certificates() {
        // the very first completed branch on K_{1,1} is a certificate, so
        // even a tight budget cannot misreport
        let opts = SearchOptions {
            budget: Budget {
                max_nodes: Some(1),
                max_time: None,
            },
            threads: 1,
        };
        let r = arrows(1, 1, &[spec(1, 1)], &opts).unwrap();
        assert_eq!(r.verdict, Verdict::NotArrows);
    }

    #[test]
    fn monotone_in_host_size() {
        let opts = SearchOptions::default();
        // arrows at N implies arrows at N+1
        let small = arrows(3, 2, &[spec(1, 1)], &opts).unwrap();
        let large = arrows(4, 2, &[spec(1, 1)], &opts).unwrap();
        assert_eq!(small.verdict, Verdict::Arrows);
        assert_eq!(large.verdict, Verdict::Arrows);
    }

    #[test]
    fn rejects_oversized_hosts_and_bad_specs() {
        let opts = SearchOptions::default();
        assert_eq!(
            arrows(65, 2, &[spec(1, 1)], &opts).unwrap_err(),
            Error::HostTooLarge { n: 65 }
        );
        assert_eq!(
            arrows(3, 2, &[spec(1, 1); 3], &opts).unwrap_err(),
            Error::SpecArity { k: 2, got: 3 }
        );
    }
}
