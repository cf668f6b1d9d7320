/// Node counters for a bounded search tree.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Every call of the recursive search, the root included.
    pub nodes: u64,
    /// Calls that returned without branching.
    pub leaves: u64,
    pub max_depth: usize,
}

impl SearchStats {
    pub(crate) fn visit(&mut self, depth: usize) {
        self.nodes += 1;
        self.max_depth = self.max_depth.max(depth);
    }

    pub(crate) fn leaf(&mut self) {
        self.leaves += 1;
    }

    pub fn internal(&self) -> u64 {
        self.nodes - self.leaves
    }
}
