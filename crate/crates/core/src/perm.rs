//! Permutations, isotopy triples, total maps and transversal cell lists.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::NotPermutation {
                    order: n,
                    reason: format!("image {x} out of range"),
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotPermutation {
                    order: n,
                    reason: format!("image {x} repeated"),
                });
            }
        }
        Ok(Self { images })
    }

    pub(crate) fn from_vec_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[0, 3, 1, 2]]`
    /// sends 0 to 3, 3 to 1, 1 to 2 and 2 to 0.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x >= n || y >= n {
                    return Err(Error::NotPermutation {
                        order: n,
                        reason: format!("cycle element out of range in {cycle:?}"),
                    });
                }
                if std::mem::replace(&mut moved[x], true) {
                    return Err(Error::NotPermutation {
                        order: n,
                        reason: format!("{x} appears in two cycles"),
                    });
                }
                images[x] = y;
            }
        }
        Self::new(images)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// `self` after `other`: `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> LexPermutations {
        LexPermutations {
            next: Some((0..n).collect()),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

pub struct LexPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

/// Advances `v` to its lexicographic successor; false when `v` was the last.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Row, column and entry permutations relating two groupoids.
///
/// Orientation: applying `(alpha, beta, gamma)` to `g` yields `h` with
/// `gamma(h(a, b)) = g(alpha(a), beta(b))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IsotopyTriple {
    pub alpha: Permutation,
    pub beta: Permutation,
    pub gamma: Permutation,
}

impl IsotopyTriple {
    pub fn new(alpha: Permutation, beta: Permutation, gamma: Permutation) -> Result<Self> {
        let n = alpha.order();
        for other in [beta.order(), gamma.order()] {
            if other != n {
                return Err(Error::OrderMismatch {
                    left: n,
                    right: other,
                });
            }
        }
        Ok(Self { alpha, beta, gamma })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            alpha: Permutation::identity(n),
            beta: Permutation::identity(n),
            gamma: Permutation::identity(n),
        }
    }

    pub fn order(&self) -> usize {
        self.alpha.order()
    }

    /// The triple undoing `self` under the same orientation.
    pub fn inverse(&self) -> Self {
        Self {
            alpha: self.alpha.inverse(),
            beta: self.beta.inverse(),
            gamma: self.gamma.inverse(),
        }
    }
}

/// A total function from `0..domain` into `0..codomain`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mapping {
    codomain: usize,
    images: Vec<usize>,
}

impl Mapping {
    pub fn new(codomain: usize, images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidMapping("empty domain".into()));
        }
        if let Some((x, &y)) = images.iter().enumerate().find(|(_, &y)| y >= codomain) {
            return Err(Error::InvalidMapping(format!(
                "{x} maps to {y}, outside 0..{codomain}"
            )));
        }
        Ok(Self { codomain, images })
    }

    pub fn constant(domain: usize, codomain: usize, value: usize) -> Result<Self> {
        Self::new(codomain, vec![value; domain])
    }

    #[inline]
    pub fn domain(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn codomain(&self) -> usize {
        self.codomain
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain];
        for &y in &self.images {
            hit[y] = true;
        }
        hit.into_iter().all(|b| b)
    }
}

/// `n` cells, one in each row and one in each column.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Transversal {
    cells: Vec<(usize, usize)>,
}

impl Transversal {
    pub fn new(cells: Vec<(usize, usize)>) -> Result<Self> {
        let n = cells.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut rows = vec![false; n];
        let mut cols = vec![false; n];
        for &(r, c) in &cells {
            if r >= n || c >= n {
                return Err(Error::InvalidTransversal(format!(
                    "cell ({r}, {c}) out of range"
                )));
            }
            if std::mem::replace(&mut rows[r], true) {
                return Err(Error::InvalidTransversal(format!("row {r} used twice")));
            }
            if std::mem::replace(&mut cols[c], true) {
                return Err(Error::InvalidTransversal(format!("column {c} used twice")));
            }
        }
        Ok(Self { cells })
    }

    pub fn order(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_and_count() {
        let all: Vec<_> = Permutation::all(3).map(|p| p.images().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
        assert_eq!(Permutation::all(5).count(), 120);
        assert_eq!(Permutation::all(1).count(), 1);
    }

    #[test]
    fn cycles_and_inverse() {
        let p = Permutation::from_cycles(5, &[[0, 3, 1, 2]]).unwrap();
        assert_eq!(p.images(), &[3, 2, 0, 1, 4]);
        assert_eq!(p.inverse().images(), &[2, 3, 1, 0, 4]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![]).is_err());
    }

    #[test]
    fn triple_orders_must_agree() {
        let p2 = Permutation::identity(2);
        let p3 = Permutation::identity(3);
        assert!(IsotopyTriple::new(p2.clone(), p2.clone(), p3).is_err());
        assert!(IsotopyTriple::new(p2.clone(), p2.clone(), p2).is_ok());
    }

    #[test]
    fn transversal_validation() {
        assert!(Transversal::new(vec![(0, 1), (1, 0)]).is_ok());
        assert!(Transversal::new(vec![(0, 1), (1, 1)]).is_err());
        assert!(Transversal::new(vec![(0, 0), (0, 1)]).is_err());
    }

    #[test]
    fn mapping_codomain() {
        assert!(Mapping::new(2, vec![0, 1, 1]).is_ok());
        assert!(Mapping::new(2, vec![0, 2]).is_err());
        assert!(Mapping::new(2, vec![1, 1])
            .map(|m| !m.is_surjective())
            .unwrap());
    }
}
