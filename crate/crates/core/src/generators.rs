//! Standard vertex-transitive families.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::GroupTable;
use itertools::Itertools;

/// Circulant on `Z_n`: `v ~ v ± d` for every step `d`. Steps are taken
/// modulo `n`, so `d` and `n - d` name the same connection pair.
pub fn circulant(n: usize, steps: &[usize]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if let Some(&d) = steps.iter().find(|&&d| d == 0 || d >= n) {
        return Err(Error::InvalidParameters(format!(
            "circulant step {d} must lie in 1..{n}"
        )));
    }
    Graph::new(
        n,
        (0..n).flat_map(|v| steps.iter().map(move |&d| (v, (v + d) % n))),
    )
}

/// Cayley graph `x ~ x * s` for `s` in an inverse-closed connection set that
/// avoids the identity.
pub fn cayley(group: &GroupTable, conn: &[usize]) -> Result<Graph> {
    let bad = |m: String| Error::InvalidConnectionSet(m);
    let n = group.order();
    if let Some(&s) = conn.iter().find(|&&s| s >= n) {
        return Err(bad(format!("{s} is not a group element")));
    }
    if conn.contains(&group.identity()) {
        return Err(bad("the identity cannot be a connection element".into()));
    }
    if let Some(&s) = conn.iter().find(|&&s| !conn.contains(&group.inverse(s))) {
        return Err(bad(format!(
            "{s} is present but its inverse {} is not",
            group.inverse(s)
        )));
    }
    Graph::new(
        n,
        (0..n).flat_map(|x| conn.iter().map(move |&s| (x, group.mul(x, s)))),
    )
}

/// Kneser graph: `k`-subsets of `{1..n}` in lexicographic order, adjacent
/// when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k + 1 {
        return Err(Error::InvalidParameters(format!(
            "Kneser graph needs k >= 1 and n >= 2k + 1, got n = {n}, k = {k}"
        )));
    }
    let subsets: Vec<u64> = (0..n)
        .combinations(k)
        .map(|c| c.iter().fold(0u64, |m, &i| m | 1 << i))
        .collect();
    let m = subsets.len();
    Graph::new(
        m,
        (0..m)
            .tuple_combinations()
            .filter(|&(a, b)| subsets[a] & subsets[b] == 0),
    )
}

pub fn petersen() -> Graph {
    kneser(5, 2).expect("valid parameters")
}

/// Complete multipartite graph with `parts` parts of `size` vertices; part
/// `p` holds `p * size .. (p + 1) * size`.
pub fn complete_multipartite(parts: usize, size: usize) -> Result<Graph> {
    let n = parts * size;
    Graph::new(
        n,
        (0..n)
            .tuple_combinations()
            .filter(|&(a, b)| a / size != b / size),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::is_vertex_transitive;

    #[test]
    fn circulant_examples() {
        assert_eq!(circulant(5, &[1]).unwrap(), Graph::cycle(5).unwrap());
        let g = circulant(15, &[3, 5]).unwrap();
        assert!(g.is_connected() && g.is_k_regular(4));
        let t = circulant(9, &[3]).unwrap();
        assert_eq!(t.components().len(), 3);
        assert_eq!(circulant(7, &[2]).unwrap(), circulant(7, &[5]).unwrap());
        assert!(circulant(7, &[0]).is_err());
        assert!(circulant(7, &[7]).is_err());
    }

    #[test]
    fn cayley_examples() {
        let z7 = GroupTable::bundled("Z7").unwrap();
        assert_eq!(cayley(&z7, &[1, 6]).unwrap(), Graph::cycle(7).unwrap());

        // (1,0) (2,0) (0,1) (0,4) in Z3 x Z5 with (x, y) -> 5x + y.
        let z35 = GroupTable::bundled("Z3xZ5").unwrap();
        let g = cayley(&z35, &[5, 10, 1, 4]).unwrap();
        assert_eq!(g.order(), 15);
        assert!(g.is_connected() && g.is_k_regular(4));

        // a, a^-1, b, b^-1 in F21 generate the group.
        let f21 = GroupTable::bundled("F21").unwrap();
        let (a, b) = (1, 7);
        let conn = [a, f21.inverse(a), b, f21.inverse(b)];
        let g = cayley(&f21, &conn).unwrap();
        assert_eq!(g.order(), 21);
        assert!(g.is_connected());
        assert!(is_vertex_transitive(&g).unwrap());

        assert!(cayley(&z7, &[1]).is_err());
        assert!(cayley(&z7, &[0, 1, 6]).is_err());
        assert!(cayley(&z7, &[9]).is_err());
    }

    #[test]
    fn kneser_examples() {
        let p = petersen();
        assert_eq!(p.order(), 10);
        assert!(p.is_k_regular(3));
        let k72 = kneser(7, 2).unwrap();
        assert_eq!(k72.order(), 21);
        assert!(k72.is_k_regular(10));
        assert_eq!(kneser(5, 1).unwrap(), Graph::complete(5).unwrap());
        assert!(kneser(4, 2).is_err());
    }

    #[test]
    fn multipartite_shape() {
        let g = complete_multipartite(3, 3).unwrap();
        assert!(g.is_k_regular(6));
        assert!(!g.has_edge(0, 2) && g.has_edge(0, 3));
    }
}
