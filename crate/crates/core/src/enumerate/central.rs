use std::collections::BTreeSet;

use rayon::prelude::*;

use super::with_pool;
use crate::error::{Error, Result};
use crate::graph::GraphPair;
use crate::groupoid::Groupoid;
use crate::isotopy::canonical_labeling;
use crate::matrix::BoolMatrix;
use crate::transform::graph_pair_to_groupoid;

/// Largest order run by default.
pub const CENTRAL_BOUND: usize = 9;
/// Largest order run with the long-run flag.
pub const CENTRAL_LONG_RUN_BOUND: usize = 16;

/// Isomorphism classes of central groupoids of one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralCensus {
    pub order: usize,
    pub count: u64,
    /// Canonical forms, sorted.
    pub tables: Vec<Groupoid>,
    /// Set when the order admits no central groupoid.
    pub diagnostic: Option<String>,
}

/// Central groupoids of order `n` up to isomorphism, via 0/1 matrices with
/// `B * B = J`.
///
/// Such a `B` has every row and column sum equal to `k = sqrt(n)` and exactly
/// `k` loops. Up to relabeling node 0 has a loop, `out(0) = {0..k}` and
/// `out(j)` for `j < k` is the `j`-th block of `k` consecutive nodes (the
/// out-neighbourhoods of `out(0)` partition the nodes). The remaining rows
/// are chosen as `k`-subsets, keeping the rows of every out-neighbourhood
/// pairwise disjoint, which is exactly one two-step path per pair.
pub fn enumerate_central(n: usize, long_run: bool, jobs: usize) -> Result<CentralCensus> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let bound = if long_run {
        CENTRAL_LONG_RUN_BOUND
    } else {
        CENTRAL_BOUND
    };
    if n > bound {
        return Err(Error::Capacity { order: n, bound });
    }
    let k = (1..=n).find(|k| k * k >= n).expect("n >= 1");
    if k * k != n {
        return Ok(CentralCensus {
            order: n,
            count: 0,
            tables: Vec::new(),
            diagnostic: Some(format!(
                "{n} is not a perfect square; central groupoids have square order"
            )),
        });
    }
    let mut root = Search::new(n, k);
    for j in 0..k {
        let block = ((1u64 << k) - 1) << (j * k);
        root.set_row(j, block);
    }
    let roots: Vec<Search> = if k == n {
        vec![root]
    } else {
        let mut v = Vec::new();
        root.branch(|s| v.push(s));
        v
    };
    let sets: Vec<BTreeSet<Groupoid>> = with_pool(jobs, || {
        roots
            .into_par_iter()
            .map(|mut s| {
                let mut forms = BTreeSet::new();
                s.complete(&mut forms, bound);
                forms
            })
            .collect()
    })?;
    let tables: Vec<Groupoid> = sets
        .into_iter()
        .flatten()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(CentralCensus {
        order: n,
        count: tables.len() as u64,
        tables,
        diagnostic: None,
    })
}

#[derive(Clone)]
struct Search {
    n: usize,
    k: usize,
    rows: Vec<u64>,
    assigned: usize,
    /// Union of the rows of assigned members of `out(i)`, for assigned `i`.
    acc: Vec<u64>,
    col_sum: Vec<usize>,
    loops: usize,
}

impl Search {
    fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            rows: vec![0; n],
            assigned: 0,
            acc: vec![0; n],
            col_sum: vec![0; n],
            loops: 0,
        }
    }

    /// Row `r = self.assigned` gets `mask` if that keeps every
    /// out-neighbourhood's rows disjoint; returns false otherwise.
    fn try_set_row(&mut self, mask: u64) -> bool {
        let r = self.assigned;
        let loop_here = (mask >> r & 1) as usize;
        if self.loops + loop_here > self.k {
            return false;
        }
        if (0..self.n).any(|c| mask >> c & 1 == 1 && self.col_sum[c] == self.k) {
            return false;
        }
        // r joins out(i) for every assigned i pointing at r
        for i in 0..r {
            if self.rows[i] >> r & 1 == 1 && self.acc[i] & mask != 0 {
                return false;
            }
        }
        // out(r) itself: its assigned members, r included if looped
        let mut acc = 0u64;
        let mut members = mask & ((1u64 << (r + 1)) - 1);
        while members != 0 {
            let j = members.trailing_zeros() as usize;
            members &= members - 1;
            let row = if j == r { mask } else { self.rows[j] };
            if acc & row != 0 {
                return false;
            }
            acc |= row;
        }
        for i in 0..r {
            if self.rows[i] >> r & 1 == 1 {
                self.acc[i] |= mask;
            }
        }
        self.acc[r] = acc;
        self.rows[r] = mask;
        for c in 0..self.n {
            self.col_sum[c] += (mask >> c & 1) as usize;
        }
        self.loops += loop_here;
        self.assigned += 1;
        true
    }

    fn set_row(&mut self, r: usize, mask: u64) {
        assert_eq!(r, self.assigned);
        assert!(self.try_set_row(mask), "normalized rows are consistent");
    }

    /// Every feasible choice for the next row, as separate states.
    fn branch(&self, mut f: impl FnMut(Search)) {
        let allowed = self.allowed();
        for_each_subset(allowed, self.k, &mut |mask| {
            let mut next = self.clone();
            if next.try_set_row(mask) {
                f(next);
            }
        });
    }

    /// Columns the next row may use: not full, and outside `acc[i]` for
    /// every assigned `i` that points at the row.
    fn allowed(&self) -> u64 {
        let r = self.assigned;
        let mut allowed = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        for c in 0..self.n {
            if self.col_sum[c] == self.k {
                allowed &= !(1 << c);
            }
        }
        for i in 0..r {
            if self.rows[i] >> r & 1 == 1 {
                allowed &= !self.acc[i];
            }
        }
        allowed
    }

    fn complete(&mut self, out: &mut BTreeSet<Groupoid>, bound: usize) {
        if self.assigned == self.n {
            if self.loops == self.k {
                out.insert(self.groupoid(bound));
            }
            return;
        }
        let allowed = self.allowed();
        let snapshot = self.clone();
        for_each_subset(allowed, self.k, &mut |mask| {
            if self.try_set_row(mask) {
                self.complete(out, bound);
                *self = snapshot.clone();
            }
        });
    }

    fn groupoid(&self, bound: usize) -> Groupoid {
        let n = self.n;
        let b = BoolMatrix::from_fn(n, |i, j| self.rows[i] >> j & 1 == 1).expect("n >= 1");
        debug_assert_eq!(b.product_not_ones(&b), Ok(None));
        let gp = GraphPair::from_matrices(b.clone(), b).expect("same order");
        let g = graph_pair_to_groupoid(&gp).expect("B * B = J");
        canonical_labeling(&g, bound).expect("order within bound").0
    }
}

/// Calls `f` on every `k`-subset of the set bits of `allowed`, in a fixed
/// order.
fn for_each_subset(allowed: u64, k: usize, f: &mut dyn FnMut(u64)) {
    fn go(rest: u64, k: usize, acc: u64, f: &mut dyn FnMut(u64)) {
        if k == 0 {
            f(acc);
            return;
        }
        if (rest.count_ones() as usize) < k {
            return;
        }
        let low = rest & rest.wrapping_neg();
        // with the lowest bit, then without it
        go(rest & !low, k - 1, acc | low, f);
        go(rest & !low, k, acc, f);
    }
    go(allowed, k, 0, f);
}
