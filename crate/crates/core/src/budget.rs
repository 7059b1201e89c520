use serde::{Deserialize, Serialize};
use std::cell::Cell;
use std::time::{Duration, Instant};

/// Result of a bounded exact search. `Unknown` means the budget ran out
/// before the search could decide; it never stands in for `Absent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    Absent,
    Unknown,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn verdict(&self) -> Verdict {
        match self {
            Search::Found(_) => Verdict::Present,
            Search::Absent => Verdict::Absent,
            Search::Unknown => Verdict::Unknown,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::Absent => Search::Absent,
            Search::Unknown => Search::Unknown,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Present,
    Absent,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Present => "present",
            Verdict::Absent => "absent",
            Verdict::Unknown => "unknown",
        }
    }
}

const CHECK_EVERY: u64 = 256;

/// Wall-clock deadline and optional work limit polled from inner search
/// loops. A budget without a deadline never reads the clock, so it is safe on
/// targets without `Instant`.
#[derive(Debug)]
pub struct Budget {
    deadline: Option<Instant>,
    work_limit: Option<u64>,
    ticks: Cell<u64>,
    expired: Cell<bool>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            deadline: None,
            work_limit: None,
            ticks: Cell::new(0),
            expired: Cell::new(false),
        }
    }

    /// A child of this budget that also stops after `ticks` units of work.
    /// Unlike a deadline, this limit gives the same answer on every machine.
    pub fn with_work_limit(&self, ticks: u64) -> Budget {
        Budget {
            work_limit: Some(ticks),
            ..self.child(None)
        }
    }

    pub fn from_millis(ms: Option<u64>) -> Self {
        Budget {
            deadline: ms.map(|ms| Instant::now() + Duration::from_millis(ms)),
            ..Budget::unlimited()
        }
    }

    /// A budget ending at `ms` from now or at this budget's deadline,
    /// whichever comes first.
    pub fn child(&self, ms: Option<u64>) -> Budget {
        let own = ms.map(|ms| Instant::now() + Duration::from_millis(ms));
        let deadline = match (self.deadline, own) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Budget {
            deadline,
            work_limit: None,
            ticks: Cell::new(0),
            expired: Cell::new(self.expired.get()),
        }
    }

    /// Counts one unit of work; returns true once the deadline has passed.
    #[inline]
    pub fn tick(&self) -> bool {
        if self.expired.get() {
            return true;
        }
        if self.deadline.is_none() && self.work_limit.is_none() {
            return false;
        }
        let t = self.ticks.get() + 1;
        self.ticks.set(t);
        if self.work_limit.is_some_and(|l| t > l) {
            self.expired.set(true);
        } else if let Some(deadline) = self.deadline {
            if t % CHECK_EVERY == 1 && Instant::now() >= deadline {
                self.expired.set(true);
            }
        }
        self.expired.get()
    }

    pub fn is_expired(&self) -> bool {
        if !self.expired.get() {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.expired.set(true);
                }
            }
        }
        self.expired.get()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
