use super::TwoFactor;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::ops::ControlFlow;

/// Largest order accepted by [`enumerate_two_factors`].
pub const TWO_FACTOR_ORACLE_BOUND: usize = 14;

/// Visits every 2-factor of `g` exactly once until `visit` breaks. Returns
/// `Break` when the visitor stopped the enumeration.
pub fn enumerate_two_factors<F>(g: &Graph, mut visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&TwoFactor) -> ControlFlow<()>,
{
    let n = g.order();
    if n > TWO_FACTOR_ORACLE_BOUND {
        return Err(Error::Capability {
            what: "vertex count for 2-factor enumeration",
            bound: TWO_FACTOR_ORACLE_BOUND,
            actual: n,
        });
    }
    let mut e = Enum {
        g,
        n,
        deg: vec![0; n],
        chosen: vec![Vec::new(); n],
        visit: &mut visit,
    };
    e.step()
}

/// Collects every 2-factor of `g`.
pub fn two_factors(g: &Graph) -> Result<Vec<TwoFactor>> {
    let mut all = Vec::new();
    let _ = enumerate_two_factors(g, |f| {
        all.push(f.clone());
        ControlFlow::Continue(())
    })?;
    Ok(all)
}

struct Enum<'a, F> {
    g: &'a Graph,
    n: usize,
    deg: Vec<usize>,
    chosen: Vec<Vec<usize>>,
    visit: &'a mut F,
}

impl<F: FnMut(&TwoFactor) -> ControlFlow<()>> Enum<'_, F> {
    // Vertices below the smallest unsaturated one have all their edges
    // decided, so its remaining choices lie among larger unsaturated
    // neighbours.
    fn step(&mut self) -> Result<ControlFlow<()>> {
        let Some(v) = (0..self.n).find(|&v| self.deg[v] < 2) else {
            return self.emit();
        };
        let cands: Vec<usize> = self
            .g
            .neighbors(v)
            .filter(|&w| w > v && self.deg[w] < 2)
            .collect();
        let need = 2 - self.deg[v];
        // Every unsaturated vertex needs enough undecided room.
        for u in v..self.n {
            if self.deg[u] < 2 {
                let room = self.g.neighbors(u).filter(|&w| w >= v && w != u && self.deg[w] < 2).count();
                if room < 2 - self.deg[u] {
                    return Ok(ControlFlow::Continue(()));
                }
            }
        }
        for i in 0..cands.len() {
            let picks: Vec<Vec<usize>> = if need == 1 {
                vec![vec![cands[i]]]
            } else {
                cands[i + 1..].iter().map(|&w| vec![cands[i], w]).collect()
            };
            for pick in picks {
                for &w in &pick {
                    self.add(v, w);
                }
                let flow = self.step()?;
                for &w in &pick {
                    self.remove(v, w);
                }
                if flow.is_break() {
                    return Ok(flow);
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn add(&mut self, v: usize, w: usize) {
        self.deg[v] += 1;
        self.deg[w] += 1;
        self.chosen[v].push(w);
        self.chosen[w].push(v);
    }

    fn remove(&mut self, v: usize, w: usize) {
        self.deg[v] -= 1;
        self.deg[w] -= 1;
        self.chosen[v].pop();
        self.chosen[w].pop();
    }

    fn emit(&mut self) -> Result<ControlFlow<()>> {
        let mut seen = vec![false; self.n];
        let mut seqs = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut seq = vec![s];
            seen[s] = true;
            let (mut prev, mut cur) = (s, self.chosen[s][0]);
            while cur != s {
                seen[cur] = true;
                seq.push(cur);
                let next = if self.chosen[cur][0] == prev {
                    self.chosen[cur][1]
                } else {
                    self.chosen[cur][0]
                };
                prev = cur;
                cur = next;
            }
            seqs.push(seq);
        }
        let f = TwoFactor::from_sequences(self.g, seqs)?;
        Ok((self.visit)(&f))
    }
}
