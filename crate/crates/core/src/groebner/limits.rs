//! Process-wide resource limits consulted by the Buchberger loop.

use std::sync::RwLock;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible sugar degree of a critical pair.
    pub max_degree: Option<u64>,
    pub deadline: Option<Instant>,
}

impl Limits {
    pub fn with_timeout(mut self, t: Duration) -> Limits {
        self.deadline = Some(Instant::now() + t);
        self
    }
}

static LIMITS: RwLock<Limits> = RwLock::new(Limits { max_degree: None, deadline: None });

pub fn set_limits(limits: Limits) {
    *LIMITS.write().expect("limits lock") = limits;
}

pub fn limits() -> Limits {
    *LIMITS.read().expect("limits lock")
}

pub(crate) fn check_time(l: &Limits) -> Result<()> {
    match l.deadline {
        Some(d) if Instant::now() >= d => Err(Error::Timeout),
        _ => Ok(()),
    }
}

pub(crate) fn check_degree(l: &Limits, sugar: u64) -> Result<()> {
    match l.max_degree {
        Some(m) if sugar > m => Err(Error::DegreeLimit(m as i64)),
        _ => Ok(()),
    }
}
