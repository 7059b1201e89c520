use crate::error::{Error, Result};
use serde::Serialize;

/// Ascending, duplicate-free subset of `0..n`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        for w in v.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0]));
            }
        }
        if let Some(&last) = v.last() {
            if last >= n {
                return Err(Error::VertexOutOfRange { vertex: last, n });
            }
        }
        Ok(VertexSet(v))
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Smallest member; panics on the empty set.
    pub fn min(&self) -> usize {
        self.0[0]
    }
}

/// Disjoint nonempty blocks covering `0..n`, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    n: usize,
    blocks: Vec<VertexSet>,
}

impl Partition {
    pub fn new<B, I>(n: usize, blocks: B) -> Result<Self>
    where
        B: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for block in blocks {
            let set = VertexSet::new(n, block)?;
            if set.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in set.members() {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in two blocks"
                    )));
                }
            }
            out.push(set);
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!(
                "vertex {missing} is not covered"
            )));
        }
        out.sort_unstable_by_key(VertexSet::min);
        Ok(Partition { n, blocks: out })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            blocks: (0..n).map(|v| VertexSet(vec![v])).collect(),
        }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// `owner[v]` is the index of the block holding `v`.
    pub fn block_index(&self) -> Vec<usize> {
        let mut owner = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b.members() {
                owner[v] = i;
            }
        }
        owner
    }
}
