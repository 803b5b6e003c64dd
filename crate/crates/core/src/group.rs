use crate::error::{Error, Result};
use crate::perm::{next_permutation, Permutation};

/// A finite group given by its Cayley table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if table.len() != order * order {
            return Err(Error::Size {
                expected: order * order,
                found: table.len(),
            });
        }
        if let Some(i) = table.iter().position(|&v| v >= order) {
            return Err(Error::EntryOutOfRange {
                row: i / order,
                col: i % order,
                value: table[i],
                order,
            });
        }
        let op = |a: usize, b: usize| table[a * order + b];
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if op(op(a, b), c) != op(a, op(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| op(e, x) == x && op(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| op(a, b) == identity && op(b, a) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("{a} has no inverse")))?;
            inverses.push(inv);
        }
        Ok(Self {
            order,
            table,
            identity,
            inverses,
        })
    }

    /// `Z_n` under addition.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::new(n, table)
    }

    /// Direct product; the pair `(a, b)` is element `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<Self> {
        let m = other.order;
        let n = self.order * m;
        let table = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                self.op(x / m, y / m) * m + other.op(x % m, y % m)
            })
            .collect();
        Self::new(n, table)
    }

    /// The symmetric group on `k` points; elements are the permutations in
    /// lexicographic order and the product is composition `p * q = p after q`.
    pub fn symmetric(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroOrder);
        }
        if k > 6 {
            return Err(Error::Capacity { order: k, bound: 6 });
        }
        let mut perms = Vec::new();
        let mut v: Vec<usize> = (0..k).collect();
        loop {
            perms.push(v.clone());
            if !next_permutation(&mut v) {
                break;
            }
        }
        let index = |p: &Vec<usize>| perms.binary_search(p).expect("closed under composition");
        let n = perms.len();
        let mut table = Vec::with_capacity(n * n);
        for p in &perms {
            for q in &perms {
                let pq = Permutation::from_vec_unchecked(p.clone())
                    .compose(&Permutation::from_vec_unchecked(q.clone()));
                table.push(index(&pq.images().to_vec()));
            }
        }
        Self::new(n, table)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }
}
