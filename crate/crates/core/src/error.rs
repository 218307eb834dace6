use thiserror::Error;

/// Domain errors shared across the crate. Text-format errors live in
/// [`crate::bsr::ParseError`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("color {color} out of range 1..={k}")]
    ColorOutOfRange { color: u32, k: u32 },

    #[error("expected 1 or {k} double-star specs, got {got}")]
    SpecArity { k: usize, got: usize },

    #[error("spec list is empty")]
    EmptySpecs,

    #[error("graph must be square, got {p}x{q}")]
    NotSquare { p: usize, q: usize },

    #[error("edge bound requires p >= 3n+1 and n >= m >= 1, got p={p}, n={n}, m={m}")]
    HypothesisNotMet { p: usize, n: usize, m: usize },

    #[error("graph contains S({n},{m}); an S({n},{m})-free input is required")]
    NotFree { n: usize, m: usize },

    #[error("rewiring exchange requires more than m = {m} high-degree Y vertices, found {y1}")]
    ExchangeHypothesisNotMet { y1: usize, m: usize },

    #[error("exhaustive enumeration supports p <= 4 (p = 5 behind allow_large), got p = {p}")]
    EnumerationTooLarge { p: usize },

    #[error("search host K_{{N,N}} supports N <= 64, got N = {n}")]
    HostTooLarge { n: usize },
}
