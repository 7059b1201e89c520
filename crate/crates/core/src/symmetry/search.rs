//! Individualization-refinement backtracking over vertex images.
//!
//! Two colourings of the same graph are refined in lockstep: the domain side
//! individualizes a fixed vertex at each level, the image side tries every
//! vertex of the matching cell. Colours are named by the rank of their
//! refinement signature, so the two sides stay comparable and an automorphism
//! survives exactly one branch. Leaves are verified before they are reported.

use super::Permutation;
use crate::budget::Budget;
use crate::graph::Graph;

pub(crate) const UNSET: usize = usize::MAX;

pub(crate) enum Flow {
    Continue,
    Stop,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Completion {
    Exhausted,
    Stopped,
    OutOfBudget,
}

pub(crate) struct AutomorphismSearch<'a> {
    g: &'a Graph,
    nbrs: Vec<Vec<usize>>,
    budget: &'a Budget,
}

type Signature = (u32, Vec<u32>);

impl<'a> AutomorphismSearch<'a> {
    pub fn new(g: &'a Graph, budget: &'a Budget) -> Self {
        let nbrs = (0..g.order()).map(|v| g.neighbors(v).collect()).collect();
        AutomorphismSearch { g, nbrs, budget }
    }

    /// Visits automorphisms mapping each `fixed.0` to `fixed.1`. `prune`
    /// receives the partial image (`UNSET` where undecided) at every node and
    /// cuts the subtree when it returns true.
    pub fn run(
        &self,
        fixed: &[(usize, usize)],
        prune: &mut dyn FnMut(&[usize]) -> bool,
        visit: &mut dyn FnMut(Permutation) -> Flow,
    ) -> Completion {
        let n = self.g.order();
        let mut left = vec![0u32; n];
        let mut right = vec![0u32; n];
        let mut k = 1;
        if !self.refine(&mut left, &mut right, &mut k) {
            return Completion::Exhausted;
        }
        for &(v, w) in fixed {
            if left[v] != right[w] {
                return Completion::Exhausted;
            }
            left[v] = k;
            right[w] = k;
            k += 1;
            if !self.refine(&mut left, &mut right, &mut k) {
                return Completion::Exhausted;
            }
        }
        self.dfs(left, right, k, prune, visit)
    }

    fn signatures(&self, colors: &[u32]) -> Vec<(Signature, usize)> {
        let mut out: Vec<(Signature, usize)> = self
            .nbrs
            .iter()
            .enumerate()
            .map(|(v, nb)| {
                let mut cs: Vec<u32> = nb.iter().map(|&w| colors[w]).collect();
                cs.sort_unstable();
                ((colors[v], cs), v)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Iterated neighbour-colour refinement of both sides; false when the
    /// sides stop corresponding.
    fn refine(&self, left: &mut [u32], right: &mut [u32], k: &mut u32) -> bool {
        let n = left.len();
        loop {
            let ls = self.signatures(left);
            let rs = self.signatures(right);
            if ls.iter().zip(&rs).any(|(a, b)| a.0 != b.0) {
                return false;
            }
            let mut next = 0u32;
            for i in 0..n {
                if i > 0 && ls[i].0 != ls[i - 1].0 {
                    next += 1;
                }
                left[ls[i].1] = next;
                right[rs[i].1] = next;
            }
            next += 1;
            if next == *k {
                return true;
            }
            *k = next;
        }
    }

    fn dfs(
        &self,
        left: Vec<u32>,
        right: Vec<u32>,
        k: u32,
        prune: &mut dyn FnMut(&[usize]) -> bool,
        visit: &mut dyn FnMut(Permutation) -> Flow,
    ) -> Completion {
        if self.budget.tick() {
            return Completion::OutOfBudget;
        }
        let n = left.len();
        let mut size = vec![0usize; k as usize];
        for &c in &left {
            size[c as usize] += 1;
        }
        let mut single_right = vec![UNSET; k as usize];
        for (w, &c) in right.iter().enumerate() {
            if size[c as usize] == 1 {
                single_right[c as usize] = w;
            }
        }
        let partial: Vec<usize> = left.iter().map(|&c| single_right[c as usize]).collect();
        if prune(&partial) {
            return Completion::Exhausted;
        }
        if k as usize == n {
            let p = Permutation::from_image_unchecked(partial);
            if preserves_edges(self.g, &p) {
                if let Flow::Stop = visit(p) {
                    return Completion::Stopped;
                }
            }
            return Completion::Exhausted;
        }

        let cell = (0..k)
            .filter(|&c| size[c as usize] > 1)
            .min_by_key(|&c| (size[c as usize], c))
            .expect("a non-singleton cell exists");
        let v = left.iter().position(|&c| c == cell).expect("cell is nonempty");
        for w in (0..n).filter(|&w| right[w] == cell) {
            let mut l = left.clone();
            let mut r = right.clone();
            l[v] = k;
            r[w] = k;
            let mut kk = k + 1;
            if !self.refine(&mut l, &mut r, &mut kk) {
                continue;
            }
            match self.dfs(l, r, kk, prune, visit) {
                Completion::Exhausted => {}
                done => return done,
            }
        }
        Completion::Exhausted
    }
}

/// Edge images are edges; for a bijection this already forces non-edges
/// onto non-edges.
pub(crate) fn preserves_edges(g: &Graph, p: &Permutation) -> bool {
    (0..g.order()).all(|v| {
        g.neighbors(v)
            .filter(|&w| w > v)
            .all(|w| g.has_edge(p.apply(v), p.apply(w)))
    })
}

/// True when the partial image already forces a cycle whose length is not
/// `len`, or a fixed point.
pub(crate) fn breaks_cycle_length(partial: &[usize], len: usize) -> bool {
    for v in 0..partial.len() {
        if partial[v] == UNSET {
            continue;
        }
        let mut x = v;
        let mut steps = 0;
        loop {
            x = partial[x];
            steps += 1;
            if x == v {
                if steps != len {
                    return true;
                }
                break;
            }
            if x == UNSET {
                break;
            }
            if steps >= len {
                return true;
            }
        }
    }
    false
}
