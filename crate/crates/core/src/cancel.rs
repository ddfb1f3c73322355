//! Cooperative cancellation for long-running computations.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("computation cancelled")]
pub struct Cancelled;

/// Token polled by long computations. Cancelled either explicitly through
/// [`CancelToken::cancel`] (shared by all clones) or once its deadline passes.
#[derive(Debug, Clone, Default)]
pub struct CancelToken {
    flag: Arc<AtomicBool>,
    deadline: Option<Instant>,
}

impl CancelToken {
    pub fn never() -> Self {
        Self::default()
    }

    pub fn with_budget(budget: Duration) -> Self {
        Self {
            flag: Arc::default(),
            deadline: Instant::now().checked_add(budget),
        }
    }

    pub fn cancel(&self) {
        self.flag.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.flag.load(Ordering::Relaxed) || self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    pub fn check(&self) -> Result<(), Cancelled> {
        if self.is_cancelled() {
            Err(Cancelled)
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clones_share_the_flag() {
        let t = CancelToken::never();
        let u = t.clone();
        assert!(t.check().is_ok());
        u.cancel();
        assert_eq!(t.check(), Err(Cancelled));
    }

    #[test]
    fn zero_budget_expires() {
        assert!(CancelToken::with_budget(Duration::ZERO).is_cancelled());
        assert!(!CancelToken::with_budget(Duration::from_secs(3600)).is_cancelled());
    }
}
