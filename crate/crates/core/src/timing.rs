use std::time::Instant;

/// Wall-clock cost of one algorithm run, split the way the benchmark reports
/// it. Pre-processing covers allocation and any setup the main loop relies
/// on, computation covers the main loop, and total runs from function entry
/// to return (so it also includes path reconstruction).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PhaseTimings {
    pub preprocessing_ns: u64,
    pub computation_ns: u64,
    pub total_ns: u64,
}

impl PhaseTimings {
    pub fn is_consistent(&self) -> bool {
        self.total_ns >= self.preprocessing_ns && self.total_ns >= self.computation_ns
    }
}

/// Monotonic clock marking the phase boundaries of a single run.
#[derive(Debug)]
pub(crate) struct PhaseClock {
    start: Instant,
    preprocessing_ns: u64,
    computation_start: Option<Instant>,
    computation_ns: u64,
}

impl PhaseClock {
    pub(crate) fn start() -> Self {
        PhaseClock {
            start: Instant::now(),
            preprocessing_ns: 0,
            computation_start: None,
            computation_ns: 0,
        }
    }

    /// Ends pre-processing and starts the computation phase.
    pub(crate) fn begin_computation(&mut self) {
        let now = Instant::now();
        self.preprocessing_ns = nanos(now - self.start);
        self.computation_start = Some(now);
    }

    pub(crate) fn end_computation(&mut self) {
        if let Some(t) = self.computation_start.take() {
            self.computation_ns = nanos(t.elapsed());
        }
    }

    pub(crate) fn finish(self) -> PhaseTimings {
        let total_ns = nanos(self.start.elapsed());
        PhaseTimings {
            preprocessing_ns: self.preprocessing_ns,
            computation_ns: self.computation_ns,
            // Phases are disjoint sub-intervals of the total, but separate
            // clock reads can still round the sum past it by a tick.
            total_ns: total_ns.max(self.preprocessing_ns).max(self.computation_ns),
        }
    }
}

fn nanos(d: std::time::Duration) -> u64 {
    d.as_nanos().min(u64::MAX as u128) as u64
}
