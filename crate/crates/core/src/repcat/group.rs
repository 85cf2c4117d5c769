//! Finite groups given by Cayley tables.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A finite group on `0..order`. `table[a][b]` is the product `a * b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl Group {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Invalid("empty Cayley table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Invalid(format!("Cayley table row {i} has wrong length")));
            }
            if row.iter().any(|&x| x >= n) {
                return Err(Error::Invalid(format!("Cayley table row {i} leaves the group")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::Invalid("Cayley table has no identity".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::Invalid(format!("element {g} has no inverse")))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Invalid(format!(
                            "Cayley table is not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(Group {
            table,
            identity,
            inverses,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z/n` with element `k` standing for `k mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::from_table(table).expect("cyclic table is a group")
    }

    /// Direct product; the pair `(a, b)` has index `a * |other| + b`.
    pub fn product(&self, other: &Group) -> Self {
        let (n, m) = (self.order(), other.order());
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        Group::from_table(table).expect("direct product is a group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_central(&self, u: usize) -> bool {
        (0..self.order()).all(|g| self.mul(u, g) == self.mul(g, u))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Elements of the subgroup generated by `gens`, sorted, identity included.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = BTreeSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        set.contains(&self.identity)
            && set.iter().all(|&a| {
                set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.mul(a, b)))
            })
    }

    /// The subgroup on `elements` (in the given order) re-indexed as its own
    /// group. Index `i` of the result is the element `elements[i]`.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Group> {
        if !self.is_subgroup(elements) {
            return Err(Error::Invalid(format!("{elements:?} is not a subgroup")));
        }
        let pos = |x: usize| elements.iter().position(|&e| e == x).expect("closed");
        let table = elements
            .iter()
            .map(|&a| elements.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        Group::from_table(table)
    }

    /// Left coset representatives of the subgroup `sub`; the first one is
    /// the identity.
    pub fn left_coset_reps(&self, sub: &[usize]) -> Vec<usize> {
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        let mut candidates: Vec<usize> = vec![self.identity];
        candidates.extend((0..self.order()).filter(|&g| g != self.identity));
        for g in candidates {
            if covered[g] {
                continue;
            }
            reps.push(g);
            for &h in sub {
                covered[self.mul(g, h)] = true;
            }
        }
        reps
    }

    /// Writes `g = reps[j] * h` with `h` in `sub`; returns `(j, h)`.
    pub fn coset_decompose(&self, g: usize, reps: &[usize], sub: &[usize]) -> Option<(usize, usize)> {
        reps.iter().enumerate().find_map(|(j, &r)| {
            let h = self.mul(self.inv(r), g);
            sub.contains(&h).then_some((j, h))
        })
    }
}
