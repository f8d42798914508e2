use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order k={k} is not supported by the {variant:?} formula")]
    UnsupportedOrder { k: u32, variant: crate::exactq::Variant },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("pole of {what} at {at}")]
    Pole { what: &'static str, at: f64 },

    #[error("closed form has a removable singularity at n={n}, k={k} (sin(pi n / 2k) = 0)")]
    RemovableSingularity { n: f64, k: u32 },

    #[error("integrand returned {value} at u={abscissa}")]
    NonFinite { abscissa: f64, value: f64 },

    #[error("quadrature did not converge: best estimate {value} with error estimate {err_estimate}")]
    NotConverged { value: f64, err_estimate: f64 },

    #[error("integral diverges: {0}")]
    DivergentIntegral(String),

    #[error("series diverges: {0}")]
    DivergentSum(String),

    #[error("sum is identically zero: {0}")]
    TrivialZero(String),

    #[error("polynomial is not divisible by (u - {root})")]
    InexactDeflation { root: String },
}
