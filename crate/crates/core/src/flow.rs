//! Small integer max-flow (Edmonds–Karp). Networks here have at most a few
//! hundred arcs, so BFS augmentation is plenty.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: u32,
}

#[derive(Clone, Debug)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// Maximum flow value, stopping early once `limit` is reached.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let nodes = self.out.len();
        let mut total = 0;
        let mut via: Vec<Option<usize>> = vec![None; nodes];
        let mut queue = VecDeque::new();
        while total < limit {
            via.iter_mut().for_each(|v| *v = None);
            queue.clear();
            queue.push_back(s);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.out[u] {
                    let to = self.arcs[a].to;
                    if self.arcs[a].cap > 0 && to != s && via[to].is_none() {
                        via[to] = Some(a);
                        if to == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(to);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut push = limit - total;
            let mut v = t;
            while let Some(a) = via[v] {
                push = push.min(self.arcs[a].cap);
                v = self.arcs[a ^ 1].to;
            }
            let mut v = t;
            while let Some(a) = via[v] {
                self.arcs[a].cap -= push;
                self.arcs[a ^ 1].cap += push;
                v = self.arcs[a ^ 1].to;
            }
            total += push;
        }
        total
    }
}
