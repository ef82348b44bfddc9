//! Cooperative time limits for the exact searches.
//!
//! A deadline is installed per thread with [`with_deadline`]. Long-running
//! loops call [`checkpoint`], which unwinds back to `with_deadline` once the
//! deadline has passed. Searches never spawn work onto other threads while a
//! deadline is active, so the thread-local is sufficient.

use std::cell::Cell;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

thread_local! {
    static DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
    static TICKS: Cell<u32> = const { Cell::new(0) };
}

/// Marker unwound through the stack when a deadline expires.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimedOut;

/// Runs `f`, abandoning it if it is still running after `limit`.
pub fn with_deadline<T>(limit: Duration, f: impl FnOnce() -> T) -> Result<T, TimedOut> {
    let previous = DEADLINE.with(|d| d.replace(Some(Instant::now() + limit)));
    let outcome = panic::catch_unwind(AssertUnwindSafe(f));
    DEADLINE.with(|d| d.set(previous));
    match outcome {
        Ok(v) => Ok(v),
        Err(payload) => match payload.downcast::<TimedOut>() {
            Ok(_) => Err(TimedOut),
            Err(other) => panic::resume_unwind(other),
        },
    }
}

/// The deadline installed on this thread, if any.
pub fn deadline() -> Option<Instant> {
    DEADLINE.with(|d| d.get())
}

/// Runs `f` under `deadline`, typically one captured on another thread with
/// [`deadline`]. Expiry unwinds out of `f` like [`checkpoint`] does; rayon
/// carries the unwind back to the thread that spawned the work.
pub fn inherit<T>(deadline: Option<Instant>, f: impl FnOnce() -> T) -> T {
    struct Restore(Option<Instant>);
    impl Drop for Restore {
        fn drop(&mut self) {
            DEADLINE.with(|d| d.set(self.0));
        }
    }
    let _restore = Restore(DEADLINE.with(|d| d.replace(deadline)));
    f()
}

/// True when a deadline is installed on this thread.
pub fn active() -> bool {
    DEADLINE.with(|d| d.get().is_some())
}

/// Polls the deadline; cheap enough for inner loops (reads the clock every 1024 calls).
#[inline]
pub fn checkpoint() {
    let tick = TICKS.with(|t| {
        let v = t.get().wrapping_add(1);
        t.set(v);
        v
    });
    if !tick.is_multiple_of(1024) {
        return;
    }
    if let Some(deadline) = DEADLINE.with(|d| d.get()) {
        if Instant::now() >= deadline {
            // resume_unwind skips the panic hook, so nothing is printed.
            panic::resume_unwind(Box::new(TimedOut));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expired_deadline_unwinds() {
        let r = with_deadline(Duration::from_millis(5), || loop {
            checkpoint();
        });
        assert_eq!(r, Err::<(), _>(TimedOut));
        assert!(!active());
    }

    #[test]
    fn inherited_deadline_reaches_rayon_workers() {
        use rayon::prelude::*;
        let r = with_deadline(Duration::from_millis(5), || {
            let d = deadline();
            (0..4).into_par_iter().for_each(|_| {
                inherit(d, || loop {
                    checkpoint();
                })
            });
        });
        assert_eq!(r, Err(TimedOut));
    }

    #[test]
    fn finished_work_returns_value() {
        assert_eq!(with_deadline(Duration::from_secs(5), || 7), Ok(7));
    }

    #[test]
    #[should_panic(expected = "boom")]
    fn other_panics_propagate() {
        let _ = with_deadline(Duration::from_secs(5), || panic!("boom"));
    }
}
