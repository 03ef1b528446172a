//! Dinic max-flow on a fixed unit-capacity network.
//!
//! Each undirected edge is a pair of opposite unit arcs that serve as each
//! other's residual. Every vertex additionally owns an arc from the super
//! source and an arc into the super sink; those start at capacity zero and
//! are opened per query, so one network answers many source/sink queries.

use std::collections::VecDeque;

use super::Graph;

const UNBOUNDED: i32 = i32::MAX / 4;

pub(crate) struct UnitFlowNetwork {
    n: usize,
    source: usize,
    sink: usize,
    adjacency: Vec<Vec<usize>>,
    to: Vec<usize>,
    base_capacity: Vec<i32>,
    source_arc: Vec<usize>,
    sink_arc: Vec<usize>,
    capacity: Vec<i32>,
    level: Vec<i32>,
    next_arc: Vec<usize>,
    queue: VecDeque<usize>,
}

impl UnitFlowNetwork {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let (source, sink) = (n, n + 1);
        let mut net = UnitFlowNetwork {
            n,
            source,
            sink,
            adjacency: vec![Vec::new(); n + 2],
            to: Vec::new(),
            base_capacity: Vec::new(),
            source_arc: Vec::with_capacity(n),
            sink_arc: Vec::with_capacity(n),
            capacity: Vec::new(),
            level: vec![-1; n + 2],
            next_arc: vec![0; n + 2],
            queue: VecDeque::with_capacity(n + 2),
        };
        for (u, v) in g.edges() {
            net.add_pair(u, v, 1, 1);
        }
        for v in 0..n {
            let a = net.add_pair(source, v, 0, 0);
            net.source_arc.push(a);
        }
        for v in 0..n {
            let a = net.add_pair(v, sink, 0, 0);
            net.sink_arc.push(a);
        }
        net.capacity = net.base_capacity.clone();
        net
    }

    /// Adds arcs `u -> v` and `v -> u`; they sit at indices `a` and `a ^ 1`.
    fn add_pair(&mut self, u: usize, v: usize, forward: i32, backward: i32) -> usize {
        let a = self.to.len();
        self.to.push(v);
        self.base_capacity.push(forward);
        self.adjacency[u].push(a);
        self.to.push(u);
        self.base_capacity.push(backward);
        self.adjacency[v].push(a + 1);
        a
    }

    /// Max-flow value from the vertex set `sources` to the disjoint vertex
    /// set `sinks`, stopping early once it reaches `limit`. A return value
    /// below `limit` is exact and leaves the residual network in place for
    /// [`source_side`](Self::source_side).
    pub(crate) fn max_flow(&mut self, sources: &[usize], sinks: &[usize], limit: usize) -> usize {
        self.capacity.copy_from_slice(&self.base_capacity);
        for &s in sources {
            self.capacity[self.source_arc[s]] = UNBOUNDED;
        }
        for &t in sinks {
            debug_assert!(!sources.contains(&t));
            self.capacity[self.sink_arc[t]] = UNBOUNDED;
        }
        let limit = limit.min(UNBOUNDED as usize) as i32;
        let mut flow = 0;
        while flow < limit && self.build_levels() {
            self.next_arc.iter_mut().for_each(|i| *i = 0);
            while flow < limit {
                let pushed = self.augment(self.source, limit - flow);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
            }
        }
        flow as usize
    }

    fn build_levels(&mut self) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[self.source] = 0;
        self.queue.clear();
        self.queue.push_back(self.source);
        while let Some(u) = self.queue.pop_front() {
            for &a in &self.adjacency[u] {
                let v = self.to[a];
                if self.capacity[a] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    self.queue.push_back(v);
                }
            }
        }
        self.level[self.sink] >= 0
    }

    fn augment(&mut self, u: usize, pushed: i32) -> i32 {
        if u == self.sink {
            return pushed;
        }
        while self.next_arc[u] < self.adjacency[u].len() {
            let a = self.adjacency[u][self.next_arc[u]];
            let v = self.to[a];
            if self.capacity[a] > 0 && self.level[v] == self.level[u] + 1 {
                let got = self.augment(v, pushed.min(self.capacity[a]));
                if got > 0 {
                    self.capacity[a] -= got;
                    self.capacity[a ^ 1] += got;
                    return got;
                }
            }
            self.next_arc[u] += 1;
        }
        0
    }

    /// Graph vertices reachable from the super source in the residual
    /// network of the last uncapped flow: the source side of a minimum cut.
    pub(crate) fn source_side(&mut self) -> Vec<bool> {
        let mut seen = vec![false; self.n + 2];
        seen[self.source] = true;
        self.queue.clear();
        self.queue.push_back(self.source);
        while let Some(u) = self.queue.pop_front() {
            for &a in &self.adjacency[u] {
                let v = self.to[a];
                if self.capacity[a] > 0 && !seen[v] {
                    seen[v] = true;
                    self.queue.push_back(v);
                }
            }
        }
        debug_assert!(!seen[self.sink], "flow was not maximum");
        seen.truncate(self.n);
        seen
    }
}
