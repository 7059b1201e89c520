//! Finite groups given by multiplication tables.
//!
//! Table text format: `#` starts a comment line; the first number is the
//! order `n`, followed by `n * n` entries in row-major order, where the entry
//! in row `a`, column `b` is the index of the product `a * b`. Entries may be
//! separated by any whitespace.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

const BUNDLED: &[(&str, &str)] = &[
    ("Z3", include_str!("../data/groups/Z3.txt")),
    ("Z5", include_str!("../data/groups/Z5.txt")),
    ("Z7", include_str!("../data/groups/Z7.txt")),
    ("Z9", include_str!("../data/groups/Z9.txt")),
    ("Z3xZ3", include_str!("../data/groups/Z3xZ3.txt")),
    ("Z11", include_str!("../data/groups/Z11.txt")),
    ("Z13", include_str!("../data/groups/Z13.txt")),
    ("Z15", include_str!("../data/groups/Z15.txt")),
    ("Z3xZ5", include_str!("../data/groups/Z3xZ5.txt")),
    ("Z17", include_str!("../data/groups/Z17.txt")),
    ("Z19", include_str!("../data/groups/Z19.txt")),
    ("Z21", include_str!("../data/groups/Z21.txt")),
    ("Z3xZ7", include_str!("../data/groups/Z3xZ7.txt")),
    ("F21", include_str!("../data/groups/F21.txt")),
];

impl GroupTable {
    /// Validates closure, identity, inverses and associativity.
    pub fn new(order: usize, table: Vec<usize>) -> Result<Self> {
        let bad = |m: String| Error::InvalidGroupTable(m);
        if order == 0 {
            return Err(bad("order must be positive".into()));
        }
        if table.len() != order * order {
            return Err(bad(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(&x) = table.iter().find(|&&x| x >= order) {
            return Err(bad(format!("entry {x} is not an element")));
        }
        let at = |a: usize, b: usize| table[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| bad("no identity element".into()))?;
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| at(a, b) == identity && at(b, a) == identity)
                    .ok_or_else(|| bad(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(bad(format!("({a} {b}) {c} != {a} ({b} {c})")));
                    }
                }
            }
        }
        Ok(GroupTable {
            order,
            table,
            identity,
            inverse,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut nums = text
            .lines()
            .filter(|l| !l.trim_start().starts_with('#'))
            .flat_map(str::split_whitespace)
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidGroupTable(format!("`{t}` is not a number")))
            });
        let order = nums
            .next()
            .ok_or_else(|| Error::InvalidGroupTable("empty table".into()))??;
        let table = nums.collect::<Result<Vec<_>>>()?;
        GroupTable::new(order, table)
    }

    /// One of the tables shipped with the crate; see [`GroupTable::bundled_ids`].
    pub fn bundled(id: &str) -> Result<Self> {
        let (_, text) = BUNDLED
            .iter()
            .find(|(name, _)| *name == id)
            .ok_or_else(|| Error::InvalidGroupTable(format!("no bundled table named `{id}`")))?;
        GroupTable::parse(text)
    }

    pub fn bundled_ids() -> impl Iterator<Item = &'static str> {
        BUNDLED.iter().map(|(name, _)| *name)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Inverse-closed sets of non-identity elements, grouped as `{s, s^-1}`
    /// classes; each class is listed once, ascending by its smaller member.
    pub fn inverse_classes(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .filter(|&a| a != self.identity && a <= self.inverse[a])
            .map(|a| {
                if a == self.inverse[a] {
                    vec![a]
                } else {
                    vec![a, self.inverse[a]]
                }
            })
            .collect()
    }
}
