//! Automorphisms, vertex-transitivity and permutation cycle structure.

mod permutation;
pub(crate) mod search;

pub use permutation::{cycle_decomposition, OrbitFamily, Permutation};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use search::{breaks_cycle_length, AutomorphismSearch, Completion, Flow};

/// Bounds on the exact group computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryConfig {
    /// Largest vertex count accepted by the group searches.
    pub max_vertices: usize,
    /// Largest number of permutations a complete listing may hold.
    pub max_elements: usize,
}

impl Default for SymmetryConfig {
    fn default() -> Self {
        SymmetryConfig {
            max_vertices: 32,
            max_elements: 200_000,
        }
    }
}

impl SymmetryConfig {
    fn check_order(&self, g: &Graph) -> Result<()> {
        if g.order() > self.max_vertices {
            return Err(Error::Capability {
                what: "vertex count for automorphism search",
                bound: self.max_vertices,
                actual: g.order(),
            });
        }
        Ok(())
    }
}

/// All automorphisms of a graph, sorted lexicographically by image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    elements: Vec<Permutation>,
}

impl AutomorphismGroup {
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Vertex orbits of the group action, each ascending, ordered by minimum.
    pub fn vertex_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.elements.first().map_or(0, Permutation::len);
        let mut uf = UnionFind::new(n);
        for p in &self.elements {
            for v in 0..n {
                uf.union(v, p.apply(v));
            }
        }
        uf.classes()
    }
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            found: p.len(),
        });
    }
    Ok(search::preserves_edges(g, p))
}

pub fn automorphism_group(g: &Graph) -> Result<AutomorphismGroup> {
    automorphism_group_with(g, &SymmetryConfig::default())
}

pub fn automorphism_group_with(g: &Graph, cfg: &SymmetryConfig) -> Result<AutomorphismGroup> {
    cfg.check_order(g)?;
    let budget = Budget::unlimited();
    let search = AutomorphismSearch::new(g, &budget);
    let mut elements = Vec::new();
    let mut overflow = false;
    search.run(&[], &mut |_| false, &mut |p| {
        if elements.len() == cfg.max_elements {
            overflow = true;
            return Flow::Stop;
        }
        elements.push(p);
        Flow::Continue
    });
    if overflow {
        return Err(Error::Capability {
            what: "automorphism group order",
            bound: cfg.max_elements,
            actual: cfg.max_elements + 1,
        });
    }
    elements.sort_unstable();
    Ok(AutomorphismGroup { elements })
}

pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    is_vertex_transitive_with(g, &SymmetryConfig::default())
}

/// Single-orbit test that never lists the group: for each vertex not yet known
/// to share vertex 0's orbit it looks for one automorphism sending 0 there,
/// and merges the cycles of every automorphism found.
pub fn is_vertex_transitive_with(g: &Graph, cfg: &SymmetryConfig) -> Result<bool> {
    cfg.check_order(g)?;
    let n = g.order();
    let budget = Budget::unlimited();
    let search = AutomorphismSearch::new(g, &budget);
    let mut uf = UnionFind::new(n);
    for target in 1..n {
        if uf.find(target) == uf.find(0) {
            continue;
        }
        let mut found = None;
        search.run(&[(0, target)], &mut |_| false, &mut |p| {
            found = Some(p);
            Flow::Stop
        });
        let Some(p) = found else {
            return Ok(false);
        };
        for v in 0..n {
            uf.union(v, p.apply(v));
        }
    }
    Ok(true)
}

/// Odd divisors `l > 1` of `n`, largest first.
pub fn odd_cycle_lengths(n: usize) -> Vec<usize> {
    (3..=n).rev().filter(|l| l % 2 == 1 && n.is_multiple_of(*l)).collect()
}

/// Automorphisms whose cycles all have length `len`, in lexicographic image
/// order. At most `limit` are collected; the flag reports whether the list is
/// complete (neither truncated nor cut short by the budget).
pub fn uniform_automorphisms_of_length(
    g: &Graph,
    len: usize,
    limit: Option<usize>,
    budget: &Budget,
    cfg: &SymmetryConfig,
) -> Result<(Vec<Permutation>, bool)> {
    cfg.check_order(g)?;
    if len < 2 || !g.order().is_multiple_of(len) {
        return Ok((Vec::new(), true));
    }
    let search = AutomorphismSearch::new(g, budget);
    let mut out = Vec::new();
    let completion = search.run(
        &[],
        &mut |partial| breaks_cycle_length(partial, len),
        &mut |p| {
            out.push(p);
            match limit {
                Some(l) if out.len() >= l => Flow::Stop,
                _ => Flow::Continue,
            }
        },
    );
    out.sort_unstable();
    Ok((out, completion == Completion::Exhausted))
}

/// Every automorphism whose cycles share one odd length `l > 1`, ordered by
/// `l` descending, then by image. Requires odd order; the complete list must
/// fit within `max_elements`.
pub fn find_uniform_odd_automorphisms(g: &Graph) -> Result<Vec<Permutation>> {
    find_uniform_odd_automorphisms_with(g, &SymmetryConfig::default())
}

pub fn find_uniform_odd_automorphisms_with(
    g: &Graph,
    cfg: &SymmetryConfig,
) -> Result<Vec<Permutation>> {
    if g.order().is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "uniform odd automorphisms need odd order, got {}",
            g.order()
        )));
    }
    let budget = Budget::unlimited();
    let mut all = Vec::new();
    for len in odd_cycle_lengths(g.order()) {
        let room = cfg.max_elements.saturating_sub(all.len());
        let (found, complete) =
            uniform_automorphisms_of_length(g, len, Some(room + 1), &budget, cfg)?;
        if !complete || found.len() > room {
            return Err(Error::Capability {
                what: "number of uniform odd automorphisms",
                bound: cfg.max_elements,
                actual: all.len() + found.len(),
            });
        }
        all.extend(found);
    }
    Ok(all)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            let r = self.find(v);
            by_root[r].push(v);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}
