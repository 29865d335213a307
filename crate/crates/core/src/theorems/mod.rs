//! Certificates, effective witnesses and the resulting two-sided bounds on
//! pseudoeffective cones, plus the stable-range arithmetic.

pub mod bounds;
pub mod certificates;
pub mod fixtures;
pub mod stable;
pub mod suite;

use serde::{Deserialize, Serialize};

use crate::cone::ConeError;
use crate::push::PushError;
use crate::ring::{RingError, RingPresentation};

pub use bounds::{BoundEngine, BoundPair, Status};
pub use certificates::{nef_certificates, CertKind, Certificate};
pub use stable::{
    check_650, class_010_effective, stable_delta_bounds, stable_lowdim_cone, StableBounds,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Case {
    pub n: usize,
    pub d: u64,
    pub i: usize,
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.n, self.d, self.i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TheoremError {
    #[error("invalid case {case}: {reason}")]
    InvalidCase { case: Case, reason: String },
    #[error("lower bound not contained in upper bound at {case}: ray {ray}")]
    Containment { case: Case, ray: String },
    #[error("internal inconsistency at {case}: {reason}")]
    Internal { case: Case, reason: String },
    #[error("suite: {0}")]
    Suite(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Push(#[from] PushError),
}

/// Checks `n ≥ 1`, `d ≥ 1` and `i ≤ dim X_{n,d}`.
pub fn presentation(n: usize, d: u64, i: usize) -> Result<RingPresentation, TheoremError> {
    let case = Case { n, d, i };
    let pres = RingPresentation::new(n, d).map_err(|e| TheoremError::InvalidCase {
        case,
        reason: e.to_string(),
    })?;
    if i > pres.dim_total {
        return Err(TheoremError::InvalidCase {
            case,
            reason: format!("dimension exceeds {}", pres.dim_total),
        });
    }
    Ok(pres)
}
