use crate::error::{Error, Result};
use crate::matrix::BoolMatrix;

/// Two edge relations, red and green, on the nodes `0..n`.
///
/// Each relation is kept as its incidence matrix, so loops are allowed and
/// parallel edges cannot be represented.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GraphPair {
    red: BoolMatrix,
    green: BoolMatrix,
}

impl GraphPair {
    pub fn new(
        order: usize,
        red: impl IntoIterator<Item = (usize, usize)>,
        green: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        Ok(Self {
            red: relation(order, red)?,
            green: relation(order, green)?,
        })
    }

    pub fn from_matrices(red: BoolMatrix, green: BoolMatrix) -> Result<Self> {
        if red.order() != green.order() {
            return Err(Error::OrderMismatch {
                left: red.order(),
                right: green.order(),
            });
        }
        Ok(Self { red, green })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.red.order()
    }

    pub fn red(&self) -> &BoolMatrix {
        &self.red
    }

    pub fn green(&self) -> &BoolMatrix {
        &self.green
    }

    pub fn has_red(&self, a: usize, b: usize) -> bool {
        self.red.get(a, b)
    }

    pub fn has_green(&self, a: usize, b: usize) -> bool {
        self.green.get(a, b)
    }

    pub fn red_edges(&self) -> Vec<(usize, usize)> {
        edges(&self.red)
    }

    pub fn green_edges(&self) -> Vec<(usize, usize)> {
        edges(&self.green)
    }

    /// Red becomes the reversed green relation and green the reversed red.
    pub fn dual(&self) -> Self {
        Self {
            red: self.green.transpose(),
            green: self.red.transpose(),
        }
    }

    pub fn into_matrices(self) -> (BoolMatrix, BoolMatrix) {
        (self.red, self.green)
    }
}

fn relation(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<BoolMatrix> {
    let mut m = BoolMatrix::zeros(order)?;
    for (a, b) in edges {
        for node in [a, b] {
            if node >= order {
                return Err(Error::SymbolOutOfRange {
                    symbol: node,
                    order,
                });
            }
        }
        m.insert(a, b);
    }
    Ok(m)
}

fn edges(m: &BoolMatrix) -> Vec<(usize, usize)> {
    (0..m.order())
        .flat_map(|a| m.row_ones(a).map(move |b| (a, b)))
        .collect()
}
