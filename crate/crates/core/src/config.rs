/// How exhaustive sweeps are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    /// Partition the outer coordinate-permutation loop across rayon workers.
    /// Falls back to sequential when the `parallel` feature is disabled.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

pub const DEFAULT_VERTEX_CAP: u64 = 10_000_000;
pub const DEFAULT_GROUP_CAP: u128 = 100_000_000;

/// Feasibility bounds for exhaustive enumeration plus the scheduling mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub vertex_cap: u64,
    pub group_cap: u128,
    pub execution: Execution,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            vertex_cap: DEFAULT_VERTEX_CAP,
            group_cap: DEFAULT_GROUP_CAP,
            execution: Execution::default(),
        }
    }
}

impl SearchConfig {
    pub fn with_group_cap(mut self, cap: u128) -> Self {
        self.group_cap = cap;
        self
    }

    pub fn with_vertex_cap(mut self, cap: u64) -> Self {
        self.vertex_cap = cap;
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn sequential() -> Self {
        Self::default().with_execution(Execution::Sequential)
    }
}
