use crate::budget::{Budget, Search};
use crate::error::{Error, Result};
use crate::factor::UniformOddCertificate;
use crate::graph::{Cycle, Graph};

/// Lifts a Hamilton cycle of the quotient by the factor's cycles to a
/// Hamilton cycle of `g`.
///
/// `quotient_cycle` lists block indices, where block `i` is the `i`-th cycle
/// of the factor (canonical order); `[0]` stands for a one-cycle factor. Each
/// factor cycle is entered at some vertex, walked the long way round to the
/// neighbour on the other side, and left along an edge into the next block.
/// `Absent` means no lift of that shape exists.
pub fn lift_hamilton_cycle(
    g: &Graph,
    cert: &UniformOddCertificate,
    quotient_cycle: &[usize],
    budget: &Budget,
) -> Result<Search<Cycle>> {
    cert.validate(g)?;
    let cycles = cert.factor.cycles();
    let c = cycles.len();
    if quotient_cycle.len() != c {
        return Err(Error::CertificateMismatch(format!(
            "quotient cycle visits {} blocks, factor has {c} cycles",
            quotient_cycle.len()
        )));
    }
    let mut seen = vec![false; c];
    for &b in quotient_cycle {
        if b >= c || std::mem::replace(&mut seen[b], true) {
            return Err(Error::CertificateMismatch(format!(
                "block {b} is out of range or repeated"
            )));
        }
    }
    if c == 1 {
        return Ok(Search::Found(cycles[0].clone()));
    }

    let owner = cert.factor.partition().block_index();
    // Position of each vertex on its factor cycle.
    let mut pos = vec![0; g.order()];
    for cyc in cycles {
        for (i, &v) in cyc.vertices().iter().enumerate() {
            pos[v] = i;
        }
    }
    let blocks: Vec<&[usize]> = quotient_cycle.iter().map(|&b| cycles[b].vertices()).collect();
    let mut lift = Lift {
        g,
        blocks: &blocks,
        owner: &owner,
        order: quotient_cycle,
        pos: &pos,
        budget,
        walk: Vec::with_capacity(g.order()),
    };
    let first = blocks[0];
    for &x in first {
        match lift.enter(0, x) {
            Some(true) => {
                let found = Cycle::new(lift.walk)?;
                debug_assert!(found.is_hamiltonian_in(g));
                return Ok(Search::Found(found));
            }
            Some(false) => {}
            None => return Ok(Search::Unknown),
        }
    }
    Ok(Search::Absent)
}

struct Lift<'a> {
    g: &'a Graph,
    blocks: &'a [&'a [usize]],
    owner: &'a [usize],
    order: &'a [usize],
    pos: &'a [usize],
    budget: &'a Budget,
    walk: Vec<usize>,
}

impl Lift<'_> {
    /// Walks block `i` from `x` in both directions and continues; `None`
    /// once the budget runs out.
    fn enter(&mut self, i: usize, x: usize) -> Option<bool> {
        if self.budget.tick() {
            return None;
        }
        let cyc = self.blocks[i];
        let l = cyc.len();
        let at = self.pos[x];
        for dir in [1, l - 1] {
            let before = self.walk.len();
            self.walk.extend((0..l).map(|t| cyc[(at + t * dir) % l]));
            let exit = *self.walk.last().expect("nonempty");
            let found = if i + 1 == self.blocks.len() {
                Some(self.g.has_edge(exit, self.walk[0]))
            } else {
                let next = self.order[i + 1];
                let entries: Vec<usize> = self
                    .g
                    .neighbors(exit)
                    .filter(|&w| self.owner[w] == next)
                    .collect();
                let mut res = Some(false);
                for w in entries {
                    res = self.enter(i + 1, w);
                    if res != Some(false) {
                        break;
                    }
                }
                res
            };
            if found != Some(false) {
                return found;
            }
            self.walk.truncate(before);
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::{FactorRoute, TwoFactor};
    use crate::generators::{circulant, complete_multipartite};
    use crate::hamilton::oracle::{hamilton_cycle, hamilton_path_from_cycle};

    fn cert(g: &Graph, seqs: Vec<Vec<usize>>) -> UniformOddCertificate {
        let f = TwoFactor::from_sequences(g, seqs).unwrap();
        UniformOddCertificate::new(f, FactorRoute::DirectSearch, vec![]).unwrap()
    }

    #[test]
    fn lifts_through_multipartite_triangles() {
        let g = complete_multipartite(3, 3).unwrap();
        let c = cert(&g, vec![vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]]);
        let h = lift_hamilton_cycle(&g, &c, &[0, 1, 2], &Budget::unlimited())
            .unwrap()
            .found()
            .unwrap();
        assert!(h.is_hamiltonian_in(&g));
    }

    #[test]
    fn circulant_lifts_depend_on_the_factor() {
        let g = circulant(15, &[3, 5]).unwrap();
        let b = Budget::unlimited();
        let fives = cert(&g, (0..3).map(|r| (0..5).map(|t| r + 3 * t).collect()).collect());
        assert_eq!(lift_hamilton_cycle(&g, &fives, &[0, 1, 2], &b).unwrap(), Search::Absent);

        // Five triangles {r, r+5, r+10}; the quotient is C5 via steps of 3.
        let triangles = cert(&g, (0..5).map(|r| vec![r, r + 5, r + 10]).collect());
        let h = lift_hamilton_cycle(&g, &triangles, &[0, 3, 1, 4, 2], &b)
            .unwrap()
            .found()
            .unwrap();
        assert!(h.is_hamiltonian_in(&g));
        let p = hamilton_path_from_cycle(&h);
        assert_eq!(p.len(), 15);
        assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
    }

    #[test]
    fn one_cycle_factor_is_its_own_lift() {
        let g = Graph::cycle(7).unwrap();
        let c = cert(&g, vec![(0..7).collect()]);
        let h = lift_hamilton_cycle(&g, &c, &[0], &Budget::unlimited()).unwrap();
        assert_eq!(h.found().unwrap().vertices(), &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn obstruction() {
        // Three triangles joined in a ring by single edges that do not line
        // up with neighbouring triangle vertices.
        let g = Graph::new(
            9,
            [
                (0, 1), (1, 2), (2, 0),
                (3, 4), (4, 5), (5, 3),
                (6, 7), (7, 8), (8, 6),
                (0, 3), (3, 6), (7, 1),
            ],
        )
        .unwrap();
        let c = cert(&g, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);
        assert_eq!(
            lift_hamilton_cycle(&g, &c, &[0, 1, 2], &Budget::unlimited()).unwrap(),
            Search::Absent
        );
        assert_eq!(hamilton_cycle(&g, &Budget::unlimited()).unwrap(), Search::Absent);
    }

    #[test]
    fn mismatched_quotient_cycle() {
        let g = complete_multipartite(3, 3).unwrap();
        let c = cert(&g, vec![vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]]);
        let b = Budget::unlimited();
        for bad in [&[0, 1][..], &[0, 1, 1], &[0, 1, 5]] {
            assert!(matches!(
                lift_hamilton_cycle(&g, &c, bad, &b),
                Err(Error::CertificateMismatch(_))
            ));
        }
        let other = Graph::cycle(9).unwrap();
        assert!(lift_hamilton_cycle(&other, &c, &[0, 1, 2], &b).is_err());
    }
}
