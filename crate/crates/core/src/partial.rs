use crate::error::{Error, Result};
use crate::groupoid::Groupoid;

/// An `n x n` array whose cells are either empty or hold a symbol in `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartialArray {
    order: usize,
    cells: Vec<Option<u16>>,
}

impl PartialArray {
    pub fn new(order: usize, cells: &[Option<usize>]) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if cells.len() != order * order {
            return Err(Error::Size {
                expected: order * order,
                found: cells.len(),
            });
        }
        let mut out = Vec::with_capacity(cells.len());
        for (idx, cell) in cells.iter().enumerate() {
            match *cell {
                Some(value) if value >= order => {
                    return Err(Error::EntryOutOfRange {
                        row: idx / order,
                        col: idx % order,
                        value,
                        order,
                    })
                }
                Some(value) => out.push(Some(value as u16)),
                None => out.push(None),
            }
        }
        Ok(Self { order, cells: out })
    }

    pub fn empty(order: usize) -> Result<Self> {
        Self::new(order, &vec![None; order * order])
    }

    /// The totally filled array holding `g`'s Cayley table.
    pub fn from_groupoid(g: &Groupoid) -> Self {
        Self {
            order: g.order(),
            cells: g.raw().iter().map(|&v| Some(v)).collect(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.cells[row * self.order + col].map(usize::from)
    }

    pub fn cells(&self) -> Vec<Option<usize>> {
        self.cells.iter().map(|c| c.map(usize::from)).collect()
    }

    pub fn filled(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    /// The groupoid when every cell is filled.
    pub fn to_groupoid(&self) -> Option<Groupoid> {
        let entries: Option<Vec<usize>> = self.cells.iter().map(|c| c.map(usize::from)).collect();
        entries.map(|e| Groupoid::new(self.order, &e).expect("cells are validated"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_is_distinct_from_zero() {
        let p = PartialArray::new(2, &[None, Some(0), Some(1), None]).unwrap();
        assert_eq!(p.get(0, 0), None);
        assert_eq!(p.get(0, 1), Some(0));
        assert_eq!(p.filled(), 2);
        assert!(p.to_groupoid().is_none());
    }

    #[test]
    fn filled_round_trip() {
        let g = Groupoid::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(PartialArray::from_groupoid(&g).to_groupoid(), Some(g));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            PartialArray::new(2, &[None, Some(2), None, None]),
            Err(Error::EntryOutOfRange { row: 0, col: 1, .. })
        ));
    }
}
