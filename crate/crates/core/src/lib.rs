//! Integral representations of generalized harmonic numbers `H_k(n)`,
//! partial Fourier sums `C^m_k(n)`, `S^m_k(n)`, odd zeta values and Euler
//! sums, together with exact Bernoulli arithmetic and brute-force oracles.

mod compensated;
pub mod error;
pub mod exactq;
pub mod fourier;
pub mod harmonic;
pub mod oracle;
pub mod quad;
pub mod trig;
pub mod verify;
pub mod zeta;

pub use compensated::CompensatedSum;
pub use error::{Error, Result};
