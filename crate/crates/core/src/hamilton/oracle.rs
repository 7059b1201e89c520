use crate::budget::{Budget, Search};
use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph};

/// Default vertex bound for [`hamilton_cycle`].
pub const ORACLE_BOUND: usize = 24;
/// Hard limit of the bit-mask search.
pub const MASK_LIMIT: usize = 64;

/// Exact Hamilton cycle search on graphs with at most [`ORACLE_BOUND`]
/// vertices.
pub fn hamilton_cycle(g: &Graph, budget: &Budget) -> Result<Search<Cycle>> {
    hamilton_cycle_with(g, ORACLE_BOUND, budget)
}

/// As [`hamilton_cycle`] with an explicit vertex bound (at most 64).
pub fn hamilton_cycle_with(g: &Graph, bound: usize, budget: &Budget) -> Result<Search<Cycle>> {
    let bound = bound.min(MASK_LIMIT);
    if g.order() > bound {
        return Err(Error::Capability {
            what: "vertex count for the Hamilton oracle",
            bound,
            actual: g.order(),
        });
    }
    if g.order() < 3 {
        return Err(Error::Precondition(format!(
            "a Hamilton cycle needs at least 3 vertices, got {}",
            g.order()
        )));
    }
    Ok(search_hamilton(g, budget))
}

/// Unchecked entry for internal callers; `3 <= n <= 64`.
pub(crate) fn search_hamilton(g: &Graph, budget: &Budget) -> Search<Cycle> {
    let n = g.order();
    debug_assert!((3..=MASK_LIMIT).contains(&n));
    let adj: Vec<u64> = (0..n).map(|v| g.row_mask(v)).collect();
    if adj.iter().any(|m| m.count_ones() < 2) {
        return Search::Absent;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s = PathSearch {
        adj,
        full,
        budget,
        path: Vec::with_capacity(n),
    };
    s.path.push(0);
    match s.extend(1) {
        Step::Found => Search::Found(Cycle::new(s.path).expect("distinct vertices")),
        Step::Dead => Search::Absent,
        Step::OutOfBudget => Search::Unknown,
    }
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

struct PathSearch<'b> {
    adj: Vec<u64>,
    full: u64,
    budget: &'b Budget,
    path: Vec<usize>,
}

impl PathSearch<'_> {
    fn extend(&mut self, visited: u64) -> Step {
        let start = self.path[0];
        let end = *self.path.last().expect("path is nonempty");
        if visited == self.full {
            return if self.adj[end] >> start & 1 == 1 {
                Step::Found
            } else {
                Step::Dead
            };
        }
        if self.budget.tick() {
            return Step::OutOfBudget;
        }
        let unvisited = self.full & !visited;
        let remaining = unvisited.count_ones();
        let ends = (1u64 << start) | (1u64 << end);
        if self.path.len() > 1 && self.adj[start] & unvisited == 0 {
            return Step::Dead;
        }

        // Every unvisited vertex still needs two usable cycle neighbours; a
        // vertex with exactly two, one of them the path end, must come next.
        let mut forced = None;
        let mut rest = unvisited;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let avail = self.adj[u] & (unvisited | ends);
            let count = avail.count_ones();
            if count < 2 {
                return Step::Dead;
            }
            if count == 2 && start != end && avail >> end & 1 == 1 {
                if avail >> start & 1 == 1 && remaining > 1 {
                    return Step::Dead;
                }
                if forced.replace(u).is_some() {
                    return Step::Dead;
                }
            }
        }

        // The unvisited vertices must hang together off the path end.
        let mut reach = self.adj[end] & unvisited;
        loop {
            let mut next = reach;
            let mut r = reach;
            while r != 0 {
                let u = r.trailing_zeros() as usize;
                r &= r - 1;
                next |= self.adj[u] & unvisited;
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        if reach != unvisited {
            return Step::Dead;
        }

        let mut cands = match forced {
            Some(u) => 1u64 << u,
            None => self.adj[end] & unvisited,
        };
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            self.path.push(w);
            match self.extend(visited | 1 << w) {
                Step::Dead => {
                    self.path.pop();
                }
                done => return done,
            }
        }
        Step::Dead
    }
}

/// Removes the cycle edge between its first two vertices and returns the
/// remaining Hamilton path, starting at the second vertex.
pub fn hamilton_path_from_cycle(c: &Cycle) -> Vec<usize> {
    let v = c.vertices();
    v[1..].iter().chain(std::iter::once(&v[0])).copied().collect()
}
