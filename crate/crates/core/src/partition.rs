use crate::error::{Error, Result};

/// A partition of `0..n` into nonempty blocks.
///
/// Blocks are stored sorted internally and ordered by least element, so
/// block indices are deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn new<B: AsRef<[usize]>>(order: usize, blocks: &[B]) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut owner = vec![usize::MAX; order];
        for (i, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for &x in block {
                if x >= order {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} out of range for order {order}"
                    )));
                }
                if owner[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} lies in two blocks"
                    )));
                }
                owner[x] = i;
            }
        }
        if let Some(x) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "element {x} is not covered"
            )));
        }
        Ok(Self::from_labels(&owner))
    }

    /// Groups elements with equal labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut index = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![0; labels.len()];
        for (x, label) in labels.iter().enumerate() {
            let next = blocks.len();
            let b = *index.entry(label).or_insert(next);
            if b == next {
                blocks.push(Vec::new());
            }
            blocks[b].push(x);
            block_of[x] = b;
        }
        Self { blocks, block_of }
    }

    pub fn singletons(order: usize) -> Self {
        Self::from_labels(&(0..order).collect::<Vec<_>>())
    }

    pub fn single_block(order: usize) -> Self {
        Self::from_labels(&vec![0; order])
    }

    pub fn order(&self) -> usize {
        self.block_of.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    #[inline]
    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    /// Least element of the block containing `x`.
    pub fn representative(&self, x: usize) -> usize {
        self.blocks[self.block_of[x]][0]
    }

    /// Whether `set` meets every block in exactly one element.
    pub fn has_transversal(&self, set: &[usize]) -> bool {
        self.transversal_defect(set).is_none()
    }

    fn transversal_defect(&self, set: &[usize]) -> Option<String> {
        let mut hits = vec![0usize; self.blocks.len()];
        for &x in set {
            if x >= self.order() {
                return Some(format!("element {x} out of range"));
            }
            hits[self.block_of[x]] += 1;
        }
        hits.iter()
            .enumerate()
            .find(|(_, &h)| h != 1)
            .map(|(b, &h)| format!("meets block {:?} in {h} elements", self.blocks[b]))
    }
}

/// A base partition together with, for each base block, a companion
/// partition that the block is a transversal of.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionSystem {
    base: Partition,
    companions: Vec<Partition>,
}

impl PartitionSystem {
    /// `companions[i]` belongs to the `i`-th block of `base` (blocks ordered
    /// by least element).
    pub fn new(base: Partition, companions: Vec<Partition>) -> Result<Self> {
        if companions.len() != base.len() {
            return Err(Error::Size {
                expected: base.len(),
                found: companions.len(),
            });
        }
        for (i, theta) in companions.iter().enumerate() {
            if theta.order() != base.order() {
                return Err(Error::OrderMismatch {
                    left: base.order(),
                    right: theta.order(),
                });
            }
            if let Some(reason) = theta.transversal_defect(&base.blocks()[i]) {
                return Err(Error::NotTransversal { block: i, reason });
            }
        }
        Ok(Self { base, companions })
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn companions(&self) -> &[Partition] {
        &self.companions
    }
}
