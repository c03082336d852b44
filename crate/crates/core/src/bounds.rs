//! Desk-scale resource caps.
//!
//! The exact algorithms here (Hilbert bases by parallelepiped enumeration,
//! membership by bounded search, brute-force facet enumeration) are
//! exponential in the dimension, so every entry point that can blow up checks
//! against these caps and fails with [`Error::Bound`](crate::Error::Bound)
//! instead of running away.

use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Maximal rank of the lattice a cone or monoid lives in.
    pub max_dim: usize,
    /// Maximal number of generators fed into a saturation.
    pub max_generators: usize,
    /// Maximal total normalized volume of a triangulation during Hilbert
    /// basis computation.
    pub max_volume: usize,
    /// Maximal rank for toric resolution.
    pub max_smooth_dim: usize,
    /// Maximal number of search nodes in a membership test.
    pub membership_budget: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_dim: 4,
            max_generators: 24,
            max_volume: 250_000,
            max_smooth_dim: 3,
            membership_budget: 2_000_000,
        }
    }
}

static GLOBAL: OnceLock<Bounds> = OnceLock::new();

impl Bounds {
    /// Defaults, with `LOGFAN_MAX_DIM` overriding both dimension caps.
    pub fn from_env() -> Self {
        let mut b = Bounds::default();
        if let Some(d) = std::env::var("LOGFAN_MAX_DIM")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
        {
            b.max_dim = d;
            b.max_smooth_dim = d;
        }
        b
    }

    /// Installs process-wide bounds. Only the first call has an effect;
    /// returns whether this call installed them.
    pub fn install(self) -> bool {
        GLOBAL.set(self).is_ok()
    }

    /// The installed bounds, or the defaults.
    pub fn get() -> Bounds {
        *GLOBAL.get_or_init(Bounds::default)
    }

    pub(crate) fn check(what: &'static str, actual: usize, limit: usize) -> Result<()> {
        if actual > limit {
            Err(Error::Bound { what, limit, actual })
        } else {
            Ok(())
        }
    }
}
