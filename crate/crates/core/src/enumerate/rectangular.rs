use std::collections::BTreeSet;

use rayon::prelude::*;

use super::state::RectState;
use super::with_pool;
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::isotopy::{are_isotopic, canonical_form};

/// Largest order whose labeled tables are listed.
pub const LABELED_LIST_BOUND: usize = 3;
/// Largest order whose labeled tables are counted or visited.
pub const LABELED_COUNT_BOUND: usize = 4;
pub const ISOMORPHISM_BOUND: usize = 4;
pub const ISOTOPY_CENSUS_BOUND: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Labeled,
    Isomorphism,
    Isotopy,
}

impl Mode {
    fn bound(self) -> usize {
        match self {
            Mode::Labeled => LABELED_LIST_BOUND,
            Mode::Isomorphism => ISOMORPHISM_BOUND,
            Mode::Isotopy => ISOTOPY_CENSUS_BOUND,
        }
    }
}

/// Result of a census. In labeled mode `tables` is sorted by table; in the
/// other modes it holds one canonical form per class, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub order: usize,
    pub mode: Mode,
    pub count: u64,
    pub tables: Vec<Groupoid>,
}

fn check_order(n: usize, bound: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if n > bound {
        return Err(Error::Capacity { order: n, bound });
    }
    Ok(())
}

/// Backtracking over cells in row-major order from cell `k`.
fn fill(state: &mut RectState, n: usize, k: usize, visit: &mut dyn FnMut(&RectState)) {
    if k == n * n {
        visit(state);
        return;
    }
    let (r, c) = (k / n, k % n);
    let mut cands = Vec::with_capacity(n);
    state.candidates(r, c, &mut cands);
    for v in cands {
        state.place(r, c, v);
        fill(state, n, k + 1, visit);
        state.remove(r, c);
    }
}

/// All admissible first rows, each as a state with row 0 filled.
fn first_rows(n: usize) -> Vec<RectState> {
    let mut out = Vec::new();
    fn go(state: &mut RectState, n: usize, c: usize, out: &mut Vec<RectState>) {
        if c == n {
            out.push(state.clone());
            return;
        }
        let mut cands = Vec::with_capacity(n);
        state.candidates(0, c, &mut cands);
        for v in cands {
            state.place(0, c, v);
            go(state, n, c + 1, out);
            state.remove(0, c);
        }
    }
    go(&mut RectState::new(n, n), n, 0, &mut out);
    out
}

fn to_groupoid(n: usize, state: &RectState) -> Groupoid {
    Groupoid::from_raw(n, state.cells().to_vec())
}

/// Calls `f` on every rectangular groupoid of order `n` (labeled), in
/// lexicographic order of tables. Sequential.
pub fn for_each_rectangular(n: usize, mut f: impl FnMut(&Groupoid)) -> Result<()> {
    check_order(n, LABELED_COUNT_BOUND)?;
    let mut state = RectState::new(n, n);
    fill(&mut state, n, 0, &mut |s| f(&to_groupoid(n, s)));
    Ok(())
}

/// Number of labeled rectangular groupoids of order `n`.
pub fn count_rectangular(n: usize, jobs: usize) -> Result<u64> {
    check_order(n, LABELED_COUNT_BOUND)?;
    let roots = first_rows(n);
    with_pool(jobs, || {
        roots
            .into_par_iter()
            .map(|mut s| {
                let mut count = 0u64;
                fill(&mut s, n, n, &mut |_| count += 1);
                count
            })
            .sum()
    })
}

/// Census of rectangular groupoids of order `n`.
///
/// Isomorphism classes are separated exactly by canonical form; isotopy
/// classes then merge isomorphism classes linked by [`are_isotopic`], each
/// represented by its least canonical form.
pub fn enumerate_rectangular(n: usize, mode: Mode, jobs: usize) -> Result<Census> {
    check_order(n, mode.bound())?;
    let roots = first_rows(n);
    let tables: Vec<Groupoid> = match mode {
        Mode::Labeled => {
            let per_root: Vec<Vec<Groupoid>> = with_pool(jobs, || {
                roots
                    .into_par_iter()
                    .map(|mut s| {
                        let mut found = Vec::new();
                        fill(&mut s, n, n, &mut |s| found.push(to_groupoid(n, s)));
                        found
                    })
                    .collect()
            })?;
            let mut all: Vec<Groupoid> = per_root.into_iter().flatten().collect();
            all.sort();
            all
        }
        Mode::Isomorphism | Mode::Isotopy => {
            let classes = iso_classes(n, roots, jobs)?;
            if mode == Mode::Isomorphism {
                classes
            } else {
                merge_isotopic(classes)?
            }
        }
    };
    Ok(Census {
        order: n,
        mode,
        count: tables.len() as u64,
        tables,
    })
}

fn iso_classes(n: usize, roots: Vec<RectState>, jobs: usize) -> Result<Vec<Groupoid>> {
    let sets: Vec<BTreeSet<Groupoid>> = with_pool(jobs, || {
        roots
            .into_par_iter()
            .map(|mut s| {
                let mut forms = BTreeSet::new();
                fill(&mut s, n, n, &mut |s| {
                    forms.insert(canonical_form(&to_groupoid(n, s)).expect("order within bound"));
                });
                forms
            })
            .collect()
    })?;
    let merged: BTreeSet<Groupoid> = sets.into_iter().flatten().collect();
    Ok(merged.into_iter().collect())
}

/// Greedy merge: classes are sorted, so each class joins the first earlier
/// representative it is isotopic to, which is its least isotopic form.
fn merge_isotopic(classes: Vec<Groupoid>) -> Result<Vec<Groupoid>> {
    let mut reps: Vec<Groupoid> = Vec::new();
    for g in classes {
        let mut joined = false;
        for r in &reps {
            if are_isotopic(r, &g)?.is_some() {
                joined = true;
                break;
            }
        }
        if !joined {
            reps.push(g);
        }
    }
    Ok(reps)
}
