//! Exhaustive search for covers by cycles of one odd length.

use super::{FactorRoute, TwoFactor, UniformOddCertificate};
use crate::budget::{Budget, Search};
use crate::error::Result;
use crate::graph::Graph;
use crate::hamilton::oracle::{search_hamilton, MASK_LIMIT};
use crate::symmetry::odd_cycle_lengths;

/// A cover of `g` by vertex-disjoint cycles of length `len`.
pub(crate) fn equal_cycle_cover(g: &Graph, len: usize, budget: &Budget) -> Search<Vec<Vec<usize>>> {
    let n = g.order();
    if len < 3 || !n.is_multiple_of(len) {
        return Search::Absent;
    }
    if len == n && n <= MASK_LIMIT {
        return search_hamilton(g, budget).map(|c| vec![c.vertices().to_vec()]);
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut s = Cover {
        adj,
        len,
        budget,
        covered: vec![false; n],
        cycles: Vec::new(),
        path: Vec::with_capacity(len),
        out_of_budget: false,
    };
    if s.cover() {
        Search::Found(s.cycles)
    } else if s.out_of_budget {
        Search::Unknown
    } else {
        Search::Absent
    }
}

struct Cover<'b> {
    adj: Vec<Vec<usize>>,
    len: usize,
    budget: &'b Budget,
    covered: Vec<bool>,
    cycles: Vec<Vec<usize>>,
    path: Vec<usize>,
    out_of_budget: bool,
}

impl Cover<'_> {
    /// Covers the remaining vertices; the next cycle always goes through the
    /// smallest uncovered vertex, as its minimum.
    fn cover(&mut self) -> bool {
        let Some(v) = self.covered.iter().position(|&c| !c) else {
            return true;
        };
        let free = |s: &Self, u: usize| s.adj[u].iter().filter(|&&w| !s.covered[w]).count();
        if (v..self.covered.len()).any(|u| !self.covered[u] && free(self, u) < 2) {
            return false;
        }
        self.covered[v] = true;
        self.path.push(v);
        let done = self.grow();
        self.path.pop();
        self.covered[v] = false;
        done
    }

    fn grow(&mut self) -> bool {
        if self.budget.tick() {
            self.out_of_budget = true;
            return false;
        }
        let start = self.path[0];
        let end = *self.path.last().expect("nonempty");
        if self.path.len() == self.len {
            // Each cycle is built once: second vertex below the last.
            if self.path[1] > end || !self.adj[end].contains(&start) {
                return false;
            }
            self.cycles.push(self.path.clone());
            let saved = std::mem::take(&mut self.path);
            let done = self.cover();
            self.path = saved;
            if !done {
                self.cycles.pop();
            }
            return done;
        }
        for i in 0..self.adj[end].len() {
            let w = self.adj[end][i];
            if w <= start || self.covered[w] {
                continue;
            }
            self.covered[w] = true;
            self.path.push(w);
            let done = self.grow();
            self.path.pop();
            self.covered[w] = false;
            if done || self.out_of_budget {
                return done;
            }
        }
        false
    }
}

/// Tries every odd cycle length, longest first.
pub(crate) fn direct_search(g: &Graph, budget: &Budget) -> Result<Search<UniformOddCertificate>> {
    let mut unknown = false;
    for len in odd_cycle_lengths(g.order()) {
        match equal_cycle_cover(g, len, budget) {
            Search::Found(seqs) => {
                let factor = TwoFactor::from_sequences(g, seqs)?;
                return Ok(Search::Found(UniformOddCertificate::new(
                    factor,
                    FactorRoute::DirectSearch,
                    Vec::new(),
                )?));
            }
            Search::Absent => {}
            Search::Unknown => unknown = true,
        }
    }
    Ok(if unknown { Search::Unknown } else { Search::Absent })
}
