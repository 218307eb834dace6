//! Closed-form lower/upper bounds and exact values for bipartite Ramsey
//! numbers of double stars.
//!
//! All floor computations run on exact integers: the floor of
//! `(1 + sqrt(1 - 2/k)) * k * t` is `kt + isqrt(k(k-2)t^2)`, so no floating
//! point is involved anywhere.

use std::fmt;

use crate::error::Error;
use crate::graph::DoubleStarSpec;

/// Bounds (and the exact value when known) for a bipartite Ramsey number,
/// with a short provenance note per number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundsReport {
    pub k: usize,
    /// One spec (symmetric broadcast) or one per color.
    pub specs: Vec<DoubleStarSpec>,
    pub lower: u64,
    pub upper: Option<u64>,
    pub exact: Option<u64>,
    pub lower_rule: String,
    pub upper_rule: Option<String>,
    pub exact_rule: Option<String>,
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let specs = self
            .specs
            .iter()
            .map(|s| format!("{}:{}", s.n, s.m))
            .collect::<Vec<_>>()
            .join(",");
        writeln!(f, "k {}", self.k)?;
        writeln!(f, "specs {specs}")?;
        writeln!(f, "lower {}", self.lower)?;
        writeln!(f, "lower_rule {}", self.lower_rule)?;
        if let Some(u) = self.upper {
            writeln!(f, "upper {u}")?;
            writeln!(f, "upper_rule {}", self.upper_rule.as_deref().unwrap_or(""))?;
        }
        if let Some(e) = self.exact {
            writeln!(f, "exact {e}")?;
            writeln!(f, "exact_rule {}", self.exact_rule.as_deref().unwrap_or(""))?;
        }
        Ok(())
    }
}

/// `floor((1 + sqrt(1 - 2/k)) * k * t)` for `k >= 2`, computed exactly:
/// `kt + isqrt(k * (k-2) * t^2)`.
pub(crate) fn floor_one_plus_root(k: u64, t: u64) -> u64 {
    debug_assert!(k >= 2);
    k * t + (k * (k - 2) * t * t).isqrt()
}

/// Bounds for the symmetric-list Ramsey number of `S(n,m)` with `k` colors.
///
/// `n < m` is normalized by swapping, since `S(n,m)` and `S(m,n)` are the
/// same graph. The returned report always satisfies
/// `lower <= exact <= upper` where present.
pub fn bounds(k: usize, n: usize, m: usize) -> BoundsReport {
    assert!(k >= 1 && n >= 1 && m >= 1);
    let spec = DoubleStarSpec::new(n, m).normalized();
    let (n, m) = (spec.n, spec.m);
    let (ku, nu, mu) = (k as u64, n as u64, m as u64);

    let mut lower = ku * nu + 1;
    let mut lower_rule = "kn+1: kn disjoint perfect matchings split into blocks of n".to_string();
    let mut upper = None;
    let mut upper_rule = None;
    let mut exact = None;
    let mut exact_rule = None;

    if k == 2 || (k >= 3 && n >= 2 * m) {
        exact = Some(lower);
        exact_rule = Some("kn+1: the per-class edge bound forces every k-coloring".to_string());
        upper = Some(lower);
        upper_rule = exact_rule.clone();
    } else if k >= 3 {
        if n == m {
            let factor = match k {
                3 => 3,
                4 => 5,
                _ => 2 * ku - 4,
            };
            let blowup = factor * nu + 1;
            if blowup > lower {
                lower = blowup;
                lower_rule =
                    format!("{factor}n+1: blow-up of a P4-critical {k}-coloring by factor n");
            }
            upper = Some(floor_one_plus_root(ku, nu) + 1);
            upper_rule = Some(
                "floor((1+sqrt(1-2/k))kn)+1: density argument over the per-class edge bound"
                    .to_string(),
            );
        } else {
            // m < n < 2m
            let u = (ku * nu + 1).max(floor_one_plus_root(ku, mu) + 1);
            upper = Some(u);
            upper_rule = Some(
                "max(kn+1, floor((1+sqrt(1-2/k))km)+1): density argument, smaller-star regime"
                    .to_string(),
            );
        }
        if upper == Some(lower) {
            exact = Some(lower);
            exact_rule = Some("lower and upper bounds coincide".to_string());
        }
    }

    BoundsReport {
        k,
        specs: vec![spec],
        lower,
        upper,
        exact,
        lower_rule,
        upper_rule,
        exact_rule,
    }
}

/// Bounds for the asymmetric list `r_bip(S(n_1,m_1), ..., S(n_k,m_k))`.
///
/// Exact for `k = 2`; exact for `k >= 3` when every `n_i >= 2 m_i` and the
/// total `sum(n_j) >= 3 n_i` for each `i`. Otherwise only the matching
/// lower bound `sum(n_i) + 1` is reported.
pub fn multicolor_bounds(specs: &[DoubleStarSpec]) -> Result<BoundsReport, Error> {
    if specs.is_empty() {
        return Err(Error::EmptySpecs);
    }
    let specs: Vec<DoubleStarSpec> = specs.iter().map(|s| s.normalized()).collect();
    let k = specs.len();
    let sum: u64 = specs.iter().map(|s| s.n as u64).sum();

    let lower = sum + 1;
    let lower_rule = "sum(n_i)+1: disjoint perfect matchings, n_i of them per color".to_string();
    let mut upper = None;
    let mut upper_rule = None;
    let mut exact = None;
    let mut exact_rule = None;

    let exactness = match k {
        2 => Some("n1+n2+1: two-color edge-bound argument".to_string()),
        _ if k >= 3
            && specs.iter().all(|s| s.n >= 2 * s.m)
            && specs.iter().all(|s| sum >= 3 * s.n as u64) =>
        {
            Some("sum(n_i)+1: per-class edge bounds cover the host".to_string())
        }
        _ => None,
    };
    if let Some(rule) = exactness {
        exact = Some(lower);
        upper = Some(lower);
        upper_rule = Some(rule.clone());
        exact_rule = Some(rule);
    }

    Ok(BoundsReport {
        k,
        specs,
        lower,
        upper,
        exact,
        lower_rule,
        upper_rule,
        exact_rule,
    })
}
