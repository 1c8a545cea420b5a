//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown mode label '{0}'")]
    UnknownMode(String),

    #[error(
        "wavelength {wavelength_um} um outside table span [{min_um}, {max_um}] um of mode '{mode}'"
    )]
    OutOfSpan {
        mode: String,
        wavelength_um: f64,
        min_um: f64,
        max_um: f64,
    },

    #[error("group index needs an interior wavelength: {wavelength_um} um is at or beyond the span edge of mode '{mode}'")]
    AtSpanEdge { mode: String, wavelength_um: f64 },

    #[error("mode '{mode}' has {points} table points; at least 4 are required")]
    TableTooSmall { mode: String, points: usize },

    #[error("mode '{mode}': wavelengths must be strictly increasing (violation near row {row})")]
    TableNotSorted { mode: String, row: usize },

    #[error("mode '{mode}': effective index {value} at {wavelength_um} um is not positive and finite")]
    BadIndexValue {
        mode: String,
        wavelength_um: f64,
        value: f64,
    },

    #[error("center wavelengths violate energy conservation: 1/{pump_um} != 1/{signal_um} + 1/{idler_um} (relative error {relative_error:.3e})")]
    EnergyMismatch {
        pump_um: f64,
        signal_um: f64,
        idler_um: f64,
        relative_error: f64,
    },

    #[error("poling period is not set on this process; solve it with poling_period first")]
    PeriodUnset,

    #[error("first-order quasi-phase matching is infeasible: k_p - k_s - k_i = {denominator_rad_per_um} rad/um is not positive")]
    QpmInfeasible { denominator_rad_per_um: f64 },

    #[error("phase-matching orientation undefined: all three group velocities are equal")]
    AllGroupVelocitiesEqual,

    #[error("invalid geometry: {0}")]
    BadGeometry(String),

    #[error("domain sequence is in the {found:?} frame; expected {expected:?}")]
    WrongFrame {
        expected: crate::apodization::Frame,
        found: crate::apodization::Frame,
    },

    #[error("invalid {what}: {why}")]
    InvalidInput { what: &'static str, why: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("SVD failed to converge; the grid is likely pathological")]
    SvdNonConvergence,

    #[error("joint intensity is identically zero; nothing to sample")]
    DegenerateDistribution,

    #[error("coincidence histogram is empty")]
    EmptyHistogram,

    #[error("purity {0} outside (0, 1]")]
    PurityOutOfRange(f64),

    #[error("g2 baseline must be positive, got {0}")]
    NonPositiveBaseline(f64),
}

impl Error {
    /// True for errors meaning "the requested physics is impossible",
    /// as opposed to malformed input. The CLI maps these to exit code 3.
    pub fn is_physics_infeasible(&self) -> bool {
        matches!(
            self,
            Error::QpmInfeasible { .. } | Error::AllGroupVelocitiesEqual
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
