//! Exhaustive search over small graphs: isomorph-free enumeration,
//! matching-equivalence classes and extremal verification reports.

mod cache;
mod claims;
mod classes;
mod enumerate;

use std::path::PathBuf;

use serde::Serialize;

use crate::error::{Error, Result};

pub use cache::{cache_file_name, corpus, read_corpus, write_corpus, CACHE_ENV};
pub use claims::{verify_claim, Claim, ClaimReport, FamilyComparison, RankedGraph};
pub use classes::{class_report, class_report_for, ClassEntry, ClassReport};
pub use enumerate::enumerate;

/// Largest order accepted by the enumerator.
pub const MAX_SEARCH_ORDER: usize = 10;
/// Orders from this one up require the `slow` acknowledgement.
pub const SLOW_ORDER: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CorpusSpec {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
}

impl CorpusSpec {
    pub fn new(n: usize, m: usize, connected: bool) -> Self {
        CorpusSpec { n, m, connected }
    }

    pub fn validate(&self, opts: &SearchOptions) -> Result<()> {
        if self.n > MAX_SEARCH_ORDER {
            return Err(Error::arg(format!(
                "enumeration is capped at n = {MAX_SEARCH_ORDER}, got {}",
                self.n
            )));
        }
        if self.n >= SLOW_ORDER && !opts.slow {
            return Err(Error::arg(format!(
                "n = {} takes minutes; pass --slow to confirm",
                self.n
            )));
        }
        let max_m = self.n * self.n.saturating_sub(1) / 2;
        if self.m > max_m {
            return Err(Error::arg(format!("m = {} exceeds n(n-1)/2 = {max_m}", self.m)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Allows orders 9 and 10.
    pub slow: bool,
    /// Worker threads; `None` uses the machine's parallelism.
    pub jobs: Option<usize>,
    /// Corpus cache directory; `None` disables caching.
    pub cache_dir: Option<PathBuf>,
}

impl SearchOptions {
    /// Options with the cache directory taken from the environment.
    pub fn from_env() -> Self {
        SearchOptions {
            cache_dir: Some(cache::default_cache_dir()),
            ..Default::default()
        }
    }

    pub(crate) fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> Result<R> {
        match self.jobs {
            None => Ok(f()),
            Some(0) => Err(Error::arg("--jobs must be at least 1")),
            Some(j) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| Error::arg(format!("thread pool: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }
}
