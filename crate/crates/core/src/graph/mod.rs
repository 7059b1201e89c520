//! Finite simple undirected graphs on the dense vertex range `0..n`.
//!
//! A [`Graph`] is immutable once built. Adjacency is a symmetric bit matrix;
//! every row occupies `ceil(n / 64)` words so graphs up to 64 vertices keep a
//! whole neighbourhood in one `u64` (see [`Graph::row_mask`]).

mod cycle;
mod graph6;
mod sets;

pub use cycle::Cycle;
pub use graph6::{parse_graph6, parse_graph6_lines, to_graph6};
pub use sets::{Partition, VertexSet};

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            words,
            bits: vec![0; words * n],
        })
    }

    /// Builds a graph from unordered pairs. Duplicates collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (v, w) in edges {
            for x in [v, w] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if v == w {
                return Err(Error::SelfLoop(v));
            }
            g.set(v, w);
            g.set(w, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).flat_map(|v| (v + 1..n).map(move |w| (v, w))))
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameters(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|v| (v - 1, v)))
    }

    fn set(&mut self, v: usize, w: usize) {
        self.bits[v * self.words + w / 64] |= 1 << (w % 64);
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, v: usize, w: usize) -> bool {
        self.bits[v * self.words + w / 64] >> (w % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbourhood of `v` as a bit mask. Only available for `n <= 64`.
    #[inline]
    pub fn row_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64, "row_mask needs n <= 64");
        self.bits[v]
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + bit)
            })
        })
    }

    /// Edges `(v, w)` with `v < w`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|v| self.neighbors(v).filter(move |&w| w > v).map(move |w| (v, w)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("n > 0");
        for v in 0..self.n {
            for w in 0..self.n {
                if v != w && !self.has_edge(v, w) {
                    g.set(v, w);
                }
            }
        }
        g
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in ascending member order.
    pub fn induced(&self, s: &VertexSet) -> Result<Graph> {
        let members = s.members();
        if members.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(&bad) = members.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let mut g = Graph::empty(members.len())?;
        for (i, &v) in members.iter().enumerate() {
            for (j, &w) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(v, w) {
                    g.set(i, j);
                    g.set(j, i);
                }
            }
        }
        Ok(g)
    }

    /// Contracts every block of `p` to one vertex; block `i` of the canonical
    /// order becomes vertex `i`. The result is simple: parallel edges collapse
    /// and edges inside a block vanish.
    pub fn quotient(&self, p: &Partition) -> Result<Graph> {
        if p.ground_size() != self.n {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} vertices, graph has {}",
                p.ground_size(),
                self.n
            )));
        }
        let owner = p.block_index();
        let mut q = Graph::empty(p.len())?;
        for (v, w) in self.edges() {
            let (a, b) = (owner[v], owner[w]);
            if a != b {
                q.set(a, b);
                q.set(b, a);
            }
        }
        Ok(q)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// Connected components as ascending vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == k)
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.is_k_regular(d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        self.is_k_regular(self.n - 1)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}
