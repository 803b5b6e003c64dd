use std::fmt;

use crate::error::{Error, Result};

/// Largest order whose symbols fit the table's storage type.
pub const MAX_ORDER: usize = u16::MAX as usize + 1;

/// A finite binary algebra on `0..n`, stored as its Cayley table.
///
/// Row `a`, column `b` holds `a * b`. The ordering derived here compares
/// order first and then the row-major table, which is the lexicographic
/// order used by the canonical forms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Groupoid {
    order: usize,
    table: Vec<u16>,
}

/// Validated construction from a row-major entry list.
pub fn make_groupoid(order: usize, entries: &[usize]) -> Result<Groupoid> {
    Groupoid::new(order, entries)
}

impl Groupoid {
    pub fn new(order: usize, entries: &[usize]) -> Result<Self> {
        check_order(order)?;
        if entries.len() != order * order {
            return Err(Error::Size {
                expected: order * order,
                found: entries.len(),
            });
        }
        let mut table = Vec::with_capacity(entries.len());
        for (idx, &value) in entries.iter().enumerate() {
            if value >= order {
                return Err(Error::EntryOutOfRange {
                    row: idx / order,
                    col: idx % order,
                    value,
                    order,
                });
            }
            table.push(value as u16);
        }
        Ok(Self { order, table })
    }

    /// Builds a groupoid from its rows; every row must have `rows.len()` entries.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::Size {
                    expected: order,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::new(order, &entries)
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        check_order(order)?;
        let mut entries = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                entries.push(f(a, b));
            }
        }
        Self::new(order, &entries)
    }

    /// Caller guarantees every value is below `order`.
    pub(crate) fn from_fn_unchecked(order: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = f(a, b);
                debug_assert!(v < order);
                table.push(v as u16);
            }
        }
        Self { order, table }
    }

    pub(crate) fn from_raw(order: usize, table: Vec<u16>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!(table.iter().all(|&v| (v as usize) < order));
        Self { order, table }
    }

    /// The one-element groupoid.
    pub fn trivial() -> Self {
        Self {
            order: 1,
            table: vec![0],
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.table[a * self.order..(a + 1) * self.order]
            .iter()
            .map(|&v| v as usize)
    }

    /// Row-major entries.
    pub fn entries(&self) -> Vec<usize> {
        self.table.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u16] {
        &self.table
    }

    /// `a + b = b * a`.
    pub fn opposite(&self) -> Self {
        Self::from_fn_unchecked(self.order, |a, b| self.op(b, a))
    }

    /// Which symbols occur somewhere in the table.
    pub fn image(&self) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        for &v in &self.table {
            seen[v as usize] = true;
        }
        seen
    }

    pub fn image_size(&self) -> usize {
        self.image().into_iter().filter(|&b| b).count()
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

impl fmt::Debug for Groupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Groupoid({})[", self.order)?;
        for a in 0..self.order {
            if a > 0 {
                f.write_str(" /")?;
            }
            for b in 0..self.order {
                write!(f, " {}", self.op(a, b))?;
            }
        }
        f.write_str(" ]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn make_groupoid_examples() {
        let c4 = make_groupoid(4, &[0; 16]).unwrap();
        assert_eq!(c4, fixtures::c4());
        assert_eq!(make_groupoid(1, &[0]).unwrap(), Groupoid::trivial());
        assert_eq!(
            make_groupoid(2, &[0, 0, 1, 2]),
            Err(Error::EntryOutOfRange {
                row: 1,
                col: 1,
                value: 2,
                order: 2
            })
        );
        assert_eq!(
            make_groupoid(2, &[0, 0, 1]),
            Err(Error::Size {
                expected: 4,
                found: 3
            })
        );
        assert_eq!(make_groupoid(0, &[]), Err(Error::ZeroOrder));
    }

    #[test]
    fn opposite_examples() {
        assert_eq!(fixtures::c4().opposite(), fixtures::c4());
        let x4 = fixtures::x4();
        assert_eq!(x4.opposite().opposite(), x4);
        let rows = Groupoid::from_rows(&[[0, 0], [1, 1]]).unwrap();
        let cols = Groupoid::from_rows(&[[0, 1], [0, 1]]).unwrap();
        assert_eq!(rows.opposite(), cols);
    }

    #[test]
    fn image_of_constant() {
        let c4 = fixtures::c4();
        assert_eq!(c4.image_size(), 1);
        assert_eq!(fixtures::m4a().image_size(), 4);
    }
}
