//! Square 0/1 matrices stored as one bitset row per node.
//!
//! Every predicate on graph pairs and matrix pairs reduces to AND plus
//! popcount on these rows: entry `(i, j)` of the integer product `AB` is
//! `|row_i(A) & row_j(B^T)|`.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

/// Index of the lowest set bit shared by `a` and `b`.
#[inline]
pub(crate) fn first_common(a: &[u64], b: &[u64]) -> Option<usize> {
    a.iter().zip(b).enumerate().find_map(|(w, (x, y))| {
        let m = x & y;
        (m != 0).then(|| w * WORD + m.trailing_zeros() as usize)
    })
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * WORD + bit)
        })
    })
}

/// An `n x n` matrix over {0, 1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    order: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let words = words_for(order);
        Ok(Self {
            order,
            words,
            bits: vec![0; words * order],
        })
    }

    pub fn identity(order: usize) -> Result<Self> {
        Self::from_fn(order, |i, j| i == j)
    }

    /// The all-ones matrix `J`.
    pub fn ones(order: usize) -> Result<Self> {
        Self::from_fn(order, |_, _| true)
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut m = Self::zeros(order)?;
        for i in 0..order {
            for j in 0..order {
                if f(i, j) {
                    m.insert(i, j);
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix from row-major entries, each of which must be 0 or 1.
    pub fn from_entries(order: usize, entries: &[u8]) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if entries.len() != order * order {
            return Err(Error::Size {
                expected: order * order,
                found: entries.len(),
            });
        }
        let mut m = Self::zeros(order)?;
        for (idx, &e) in entries.iter().enumerate() {
            match e {
                0 => {}
                1 => m.insert(idx / order, idx % order),
                v => {
                    return Err(Error::EntryOutOfRange {
                        row: idx / order,
                        col: idx % order,
                        value: v as usize,
                        order: 2,
                    })
                }
            }
        }
        Ok(m)
    }

    /// Parses rows written as strings of `0` and `1`, e.g. `["1100", "0011"]`.
    pub fn from_rows(rows: &[&str]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Size {
                    expected: n,
                    found: row.len(),
                });
            }
            for (c, ch) in row.chars().enumerate() {
                match ch {
                    '0' => entries.push(0),
                    '1' => entries.push(1),
                    _ => {
                        return Err(Error::EntryOutOfRange {
                            row: r,
                            col: c,
                            value: ch as usize,
                            order: 2,
                        })
                    }
                }
            }
        }
        Self::from_entries(n, &entries)
    }

    pub(crate) fn insert(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / WORD] |= 1 << (j % WORD);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / WORD] >> (j % WORD) & 1 == 1
    }

    /// Row `i` as a bitset.
    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(i))
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.order).expect("order is positive");
        for i in 0..self.order {
            for j in self.row_ones(i) {
                t.insert(j, i);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Entry `(i, j)` of the integer product `self * other`.
    pub fn product_entry(&self, other_transposed: &BoolMatrix, i: usize, j: usize) -> u32 {
        and_count(self.row(i), other_transposed.row(j))
    }

    /// First `(i, j, value)` at which the integer product `self * other`
    /// differs from 1, scanning row-major.
    pub fn product_not_ones(&self, other: &BoolMatrix) -> Result<Option<(usize, usize, u32)>> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        let bt = other.transpose();
        for i in 0..self.order {
            for j in 0..self.order {
                let c = self.product_entry(&bt, i, j);
                if c != 1 {
                    return Ok(Some((i, j, c)));
                }
            }
        }
        Ok(None)
    }

    /// Row-major 0/1 entries.
    pub fn entries(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.order * self.order);
        for i in 0..self.order {
            for j in 0..self.order {
                out.push(self.get(i, j) as u8);
            }
        }
        out
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BoolMatrix({})", self.order)?;
        for i in 0..self.order {
            for j in 0..self.order {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
