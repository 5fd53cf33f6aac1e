//! Error type shared by all modules.

/// Errors produced by the classification pipeline.
#[derive(thiserror::Error, Debug, Clone)]
pub enum Error {
    /// Transvectant index `r` must satisfy `0 <= r <= min(m, n)`.
    #[error("transvectant index {r} out of range for formal orders ({m}, {n})")]
    TransvectantIndex { r: usize, m: usize, n: usize },

    /// Möbius maps require a nonzero determinant.
    #[error("möbius map has determinant zero")]
    SingularMobius,

    /// A multi-ratio denominator factor vanished.
    #[error("degenerate configuration: zero denominator in multi-ratio")]
    DegenerateMultiRatio,

    /// The M6 test requires six pairwise-distinct roots.
    #[error("multi-ratio condition requires six pairwise-distinct roots")]
    RepeatedRoots,

    /// Inversion centers must satisfy u·u ≠ 0.
    #[error("null center: inversion requires u·u ≠ 0")]
    NullCenter,

    /// A catalog sextic was requested at a pole of its closed form.
    #[error("system {label} has a pole at this point: {constraint} = 0")]
    Pole {
        label: &'static str,
        constraint: &'static str,
    },

    /// The quadratic flow grew past the divergence guard.
    #[error("flow blow-up at arclength {arclength:.6}")]
    FlowBlowUp { arclength: f64 },

    /// An ideal name that is not part of the catalog of generator sets.
    #[error("unknown ideal `{0}`")]
    UnknownIdeal(String),

    /// The nine persistent ideals produced a vanishing pattern that matches
    /// no row of the class table. Carries the per-ideal residual ratios
    /// (residual / tolerance scale) in table order.
    #[error("inconsistent vanishing pattern: matches no class row (residual ratios {residuals:?})")]
    InconsistentPattern { residuals: Vec<f64> },

    /// Catch-all for malformed inputs (bad JSON shape, bad flag syntax).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
