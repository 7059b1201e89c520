use crate::error::{Error, Result};
use crate::graph::Partition;
use serde::Serialize;
use std::fmt;

/// A bijection on `0..n`, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut hit = vec![false; n];
        for &x in &image {
            if x >= n || std::mem::replace(&mut hit[x], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        Ok(Permutation(image))
    }

    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(image.clone()).is_ok());
        Permutation(image)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// `v -> v + k mod n`.
    pub fn rotation(n: usize, k: usize) -> Self {
        Permutation((0..n).map(|v| (v + k) % n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (v, &x) in self.0.iter().enumerate() {
            inv[x] = v;
        }
        Permutation(inv)
    }

    pub fn pow(&self, k: usize) -> Permutation {
        let mut out = Permutation::identity(self.len());
        for _ in 0..k {
            out = out.then(self);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &x)| v == x)
    }

    pub fn orbits(&self) -> OrbitFamily {
        cycle_decomposition(self)
    }

    /// The common cycle length when every cycle has the same length.
    pub fn uniform_cycle_length(&self) -> Option<usize> {
        let lens = self.orbits().lengths();
        let first = *lens.first()?;
        lens.iter().all(|&l| l == first).then_some(first)
    }

    /// Every cycle has one odd length greater than one.
    pub fn is_uniform_odd(&self) -> bool {
        matches!(self.uniform_cycle_length(), Some(l) if l > 1 && l % 2 == 1)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.0)
    }
}

/// Cycles of a permutation. Each orbit lists its members in the order the
/// permutation visits them, starting from the smallest; orbits are sorted by
/// that smallest member. Fixed points are singleton orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitFamily {
    n: usize,
    orbits: Vec<Vec<usize>>,
}

impl OrbitFamily {
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    pub fn partition(&self) -> Partition {
        Partition::new(self.n, self.orbits.iter().cloned()).expect("cycles partition the domain")
    }
}

pub fn cycle_decomposition(p: &Permutation) -> OrbitFamily {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut v = s;
        while !seen[v] {
            seen[v] = true;
            orbit.push(v);
            v = p.apply(v);
        }
        orbits.push(orbit);
    }
    OrbitFamily { n, orbits }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decomposition_examples() {
        let id = cycle_decomposition(&Permutation::identity(5));
        assert_eq!(id.orbits(), &[vec![0], vec![1], vec![2], vec![3], vec![4]]);

        let r = cycle_decomposition(&Permutation::rotation(9, 1));
        assert_eq!(r.orbits(), &[(0..9).collect::<Vec<_>>()]);

        let r3 = cycle_decomposition(&Permutation::rotation(15, 3));
        assert_eq!(
            r3.orbits(),
            &[
                vec![0, 3, 6, 9, 12],
                vec![1, 4, 7, 10, 13],
                vec![2, 5, 8, 11, 14]
            ]
        );
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn algebra() {
        let r = Permutation::rotation(7, 2);
        assert!(r.then(&r.inverse()).is_identity());
        assert_eq!(r.pow(3), Permutation::rotation(7, 6));
        assert!(r.pow(7).is_identity());
        assert!(r.is_uniform_odd());
        assert!(!Permutation::identity(7).is_uniform_odd());
        assert!(!Permutation::new(vec![1, 0, 2]).unwrap().is_uniform_odd());
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..16)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn orbits_partition_and_follow_the_map(p in arb_perm()) {
            let fam = cycle_decomposition(&p);
            let part = fam.partition();
            prop_assert_eq!(part.ground_size(), p.len());
            for orbit in fam.orbits() {
                let k = orbit.len();
                for (i, &v) in orbit.iter().enumerate() {
                    prop_assert_eq!(p.apply(v), orbit[(i + 1) % k]);
                    prop_assert_eq!(p.pow(k).apply(v), v);
                }
            }
        }
    }
}
