use std::time::{Duration, Instant};

use super::{FrustrationResult, LocalComponent, SolverStats};
use crate::model::{Signature, SignedGraph};

const CLOCK_CHECK_INTERVAL: u64 = 4096;

/// Branch and bound over two-state vertex assignments.
///
/// Vertices are fixed in order of descending degree (ties by canonical id),
/// the first one pinned. At each node the lower bound is the number of
/// disagreeing edges among decided vertices plus, for every undecided vertex,
/// the smaller of its disagreements with decided neighbours over its two
/// possible states. The incumbent starts from the identity assignment and is
/// improved by the first greedy descent.
///
/// When `budget` runs out the best signature found so far is returned with
/// `certified == false`.
pub fn frustration_bnb(g: &SignedGraph, budget: Option<Duration>) -> FrustrationResult {
    bnb_with_target(g, budget, None)
}

/// As [`frustration_bnb`], but stops as soon as the incumbent reaches
/// `target`. The result is then exact only if the caller knows `target` to be
/// a lower bound; `certified` is cleared if an early stop left the total
/// above `target`.
pub(crate) fn bnb_with_target(g: &SignedGraph, budget: Option<Duration>, target: Option<usize>) -> FrustrationResult {
    let start = Instant::now();
    let deadline = budget.map(|b| start + b);
    let comps = LocalComponent::split(g);
    let mut index = 0;
    let mut witness = Vec::new();
    let mut nodes = 0;
    let mut certified = true;
    let mut early_stop = false;
    // the target is distributed over components by solving them in turn and
    // charging the remaining slack to the current one
    let mut lower_rest: Vec<usize> = comps.iter().map(|c| c.negative_loops.len()).collect();
    for (ci, c) in comps.iter().enumerate() {
        let local_target = target.map(|t| {
            let other: usize = index + lower_rest[ci + 1..].iter().sum::<usize>();
            t.saturating_sub(other)
        });
        let mut search = Search::new(c, deadline);
        search.run(local_target.map(|t| t.saturating_sub(c.negative_loops.len())));
        nodes += search.nodes;
        if search.timed_out {
            certified = false;
        }
        early_stop |= search.stop && !search.timed_out;
        let best = search.best_spin.clone();
        let order = search.order.clone();
        let mut in_u = vec![false; c.vertices.len()];
        for (p, &v) in order.iter().enumerate() {
            in_u[v] = best[p] < 0;
        }
        let f = c.frustrated_edges(|v| in_u[v]);
        index += f.len();
        lower_rest[ci] = f.len();
        witness.extend(f);
    }
    if early_stop && target.is_some_and(|t| index > t) {
        certified = false;
    }
    FrustrationResult {
        index,
        witness: Signature::from_indices(g, witness),
        all_min_signatures: None,
        stats: SolverStats {
            nodes,
            elapsed: start.elapsed(),
        },
        certified,
    }
}

struct Search {
    order: Vec<usize>,
    /// Neighbour lists in order positions: (position, edge negative?).
    adj: Vec<Vec<(usize, bool)>>,
    spin: Vec<i8>,
    cost_if_plus: Vec<usize>,
    cost_if_minus: Vec<usize>,
    fixed: usize,
    slack: usize,
    best: usize,
    best_spin: Vec<i8>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
    stop: bool,
}

impl Search {
    fn new(c: &LocalComponent, deadline: Option<Instant>) -> Search {
        let n = c.vertices.len();
        let mut degree = vec![0usize; n];
        for &(a, b, _, _) in &c.edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| degree[b].cmp(&degree[a]).then(a.cmp(&b)));
        let mut pos = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b, neg, _) in &c.edges {
            adj[pos[a]].push((pos[b], neg));
            adj[pos[b]].push((pos[a], neg));
        }
        let initial = c.edges.iter().filter(|e| e.2).count();
        Search {
            order,
            adj,
            spin: vec![0; n],
            cost_if_plus: vec![0; n],
            cost_if_minus: vec![0; n],
            fixed: 0,
            slack: 0,
            best: initial,
            best_spin: vec![1; n],
            nodes: 0,
            deadline,
            timed_out: false,
            stop: false,
        }
    }

    fn run(&mut self, target: Option<usize>) {
        if self.order.is_empty() {
            return;
        }
        if target.is_some_and(|t| self.best <= t) {
            return;
        }
        // pin the first vertex
        self.assign(0, 1);
        self.descend(1, target);
        self.unassign(0, 1);
    }

    fn bound(&self) -> usize {
        self.fixed + self.slack
    }

    fn assign(&mut self, p: usize, s: i8) {
        let add = if s > 0 { self.cost_if_plus[p] } else { self.cost_if_minus[p] };
        self.fixed += add;
        self.slack -= self.cost_if_plus[p].min(self.cost_if_minus[p]);
        self.spin[p] = s;
        for i in 0..self.adj[p].len() {
            let (q, neg) = self.adj[p][i];
            if self.spin[q] != 0 {
                continue;
            }
            let old = self.cost_if_plus[q].min(self.cost_if_minus[q]);
            // q agrees in state t iff s * t * sign == +1
            let plus_disagrees = (s < 0) != neg;
            if plus_disagrees {
                self.cost_if_plus[q] += 1;
            } else {
                self.cost_if_minus[q] += 1;
            }
            self.slack = self.slack + self.cost_if_plus[q].min(self.cost_if_minus[q]) - old;
        }
    }

    fn unassign(&mut self, p: usize, s: i8) {
        for i in 0..self.adj[p].len() {
            let (q, neg) = self.adj[p][i];
            if self.spin[q] != 0 {
                continue;
            }
            let old = self.cost_if_plus[q].min(self.cost_if_minus[q]);
            let plus_disagrees = (s < 0) != neg;
            if plus_disagrees {
                self.cost_if_plus[q] -= 1;
            } else {
                self.cost_if_minus[q] -= 1;
            }
            self.slack = self.slack + self.cost_if_plus[q].min(self.cost_if_minus[q]) - old;
        }
        self.spin[p] = 0;
        self.slack += self.cost_if_plus[p].min(self.cost_if_minus[p]);
        let add = if s > 0 { self.cost_if_plus[p] } else { self.cost_if_minus[p] };
        self.fixed -= add;
    }

    fn descend(&mut self, p: usize, target: Option<usize>) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(CLOCK_CHECK_INTERVAL) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                    self.stop = true;
                }
            }
        }
        if self.stop {
            return;
        }
        if p == self.order.len() {
            if self.fixed < self.best {
                self.best = self.fixed;
                self.best_spin.copy_from_slice(&self.spin);
                if target.is_some_and(|t| self.best <= t) {
                    self.stop = true;
                }
            }
            return;
        }
        let first: i8 = if self.cost_if_plus[p] <= self.cost_if_minus[p] { 1 } else { -1 };
        for s in [first, -first] {
            self.assign(p, s);
            if self.bound() < self.best {
                self.descend(p + 1, target);
            }
            self.unassign(p, s);
            if self.stop {
                return;
            }
        }
    }
}
