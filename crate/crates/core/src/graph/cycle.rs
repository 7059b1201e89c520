use super::Graph;
use crate::error::{Error, Result};
use serde::Serialize;

/// A simple cycle stored in canonical rotation and reflection: it starts at
/// its smallest vertex and the second entry is the smaller of that vertex's
/// two cycle neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Canonicalises a cyclic vertex sequence of at least three distinct vertices.
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let k = seq.len();
        if k < 3 {
            return Err(Error::InvalidCycle(format!(
                "a cycle needs at least 3 vertices, got {k}"
            )));
        }
        let mut sorted = seq.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidCycle(format!("vertex {} repeats", w[0])));
        }
        let start = (0..k).min_by_key(|&i| seq[i]).expect("nonempty");
        let next = seq[(start + 1) % k];
        let prev = seq[(start + k - 1) % k];
        let out = if next < prev {
            (0..k).map(|i| seq[(start + i) % k]).collect()
        } else {
            (0..k).map(|i| seq[(start + k - i) % k]).collect()
        };
        Ok(Cycle(out))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive pairs including the closing pair.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| (self.0[i], self.0[(i + 1) % k]))
    }

    /// Checks every cycle edge against `g`.
    pub fn validate_in(&self, g: &Graph) -> Result<()> {
        for (v, w) in self.edges() {
            if v >= g.order() || w >= g.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: v.max(w),
                    n: g.order(),
                });
            }
            if !g.has_edge(v, w) {
                return Err(Error::InvalidCycle(format!("{{{v}, {w}}} is not an edge")));
            }
        }
        Ok(())
    }

    /// True iff this is a Hamilton cycle of `g`.
    pub fn is_hamiltonian_in(&self, g: &Graph) -> bool {
        self.len() == g.order() && self.validate_in(g).is_ok()
    }
}
