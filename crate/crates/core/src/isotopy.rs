//! Isotopy and isomorphism: application, search, canonical forms and
//! transversals.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::perm::{IsotopyTriple, Permutation, Transversal};

/// Largest order accepted by [`are_isotopic`].
pub const ISOTOPY_BOUND: usize = 6;
/// Default largest order accepted by [`canonical_form`].
pub const CANONICAL_BOUND: usize = 9;
/// Largest order accepted by [`automorphisms`].
pub const AUTOMORPHISM_BOUND: usize = 8;

const UNSET: usize = usize::MAX;

fn same_order(g: &Groupoid, h: &Groupoid) -> Result<()> {
    if g.order() != h.order() {
        return Err(Error::OrderMismatch {
            left: g.order(),
            right: h.order(),
        });
    }
    Ok(())
}

/// `h(a, b) = gamma^-1(g(alpha(a), beta(b)))`.
pub fn apply_isotopy(g: &Groupoid, t: &IsotopyTriple) -> Result<Groupoid> {
    if t.order() != g.order() {
        return Err(Error::OrderMismatch {
            left: g.order(),
            right: t.order(),
        });
    }
    let gamma_inv = t.gamma.inverse();
    Ok(Groupoid::from_fn_unchecked(g.order(), |a, b| {
        gamma_inv.apply(g.op(t.alpha.apply(a), t.beta.apply(b)))
    }))
}

/// The isomorphic copy `h` with `h(s(a), s(b)) = s(g(a, b))`.
pub fn relabel(g: &Groupoid, sigma: &Permutation) -> Result<Groupoid> {
    if sigma.order() != g.order() {
        return Err(Error::OrderMismatch {
            left: g.order(),
            right: sigma.order(),
        });
    }
    let inv = sigma.inverse();
    Ok(Groupoid::from_fn_unchecked(g.order(), |x, y| {
        sigma.apply(g.op(inv.apply(x), inv.apply(y)))
    }))
}

fn symbol_profile(g: &Groupoid) -> Vec<usize> {
    let mut counts = vec![0; g.order()];
    for &x in g.raw() {
        counts[x as usize] += 1;
    }
    counts.sort_unstable();
    counts
}

/// Searches for `(alpha, beta, gamma)` with `apply_isotopy(g, t) = h`.
///
/// `alpha` runs through all permutations in lexicographic order and `beta`
/// is built column by column under it; `gamma` is read off from the cells.
/// The first witness in that order is returned.
pub fn are_isotopic(g: &Groupoid, h: &Groupoid) -> Result<Option<IsotopyTriple>> {
    same_order(g, h)?;
    let n = g.order();
    if n > ISOTOPY_BOUND {
        return Err(Error::Capacity {
            order: n,
            bound: ISOTOPY_BOUND,
        });
    }
    // cell counts per symbol are preserved up to renaming
    if symbol_profile(g) != symbol_profile(h) {
        return Ok(None);
    }
    let mut search = IsotopySearch {
        g,
        h,
        n,
        alpha: Vec::new(),
        beta: vec![UNSET; n],
        used: vec![false; n],
        gamma: vec![UNSET; n],
        gamma_hit: vec![false; n],
    };
    for alpha in Permutation::all(n) {
        search.alpha = alpha.images().to_vec();
        if search.columns(0) {
            let mut gamma = search.gamma.clone();
            let mut free = (0..n).filter(|&v| !search.gamma_hit[v]);
            for slot in gamma.iter_mut().filter(|s| **s == UNSET) {
                *slot = free
                    .next()
                    .expect("as many free targets as unmapped symbols");
            }
            return Ok(Some(IsotopyTriple {
                alpha,
                beta: Permutation::from_vec_unchecked(search.beta.clone()),
                gamma: Permutation::from_vec_unchecked(gamma),
            }));
        }
    }
    Ok(None)
}

struct IsotopySearch<'a> {
    g: &'a Groupoid,
    h: &'a Groupoid,
    n: usize,
    alpha: Vec<usize>,
    beta: Vec<usize>,
    used: Vec<bool>,
    /// h-symbol to g-symbol.
    gamma: Vec<usize>,
    gamma_hit: Vec<bool>,
}

impl IsotopySearch<'_> {
    /// Chooses `beta(b)` for `b, b+1, ...`; leaves state in place on success.
    fn columns(&mut self, b: usize) -> bool {
        if b == self.n {
            return true;
        }
        for c in 0..self.n {
            if self.used[c] {
                continue;
            }
            let mut added = Vec::new();
            let mut ok = true;
            for a in 0..self.n {
                let s = self.h.op(a, b);
                let v = self.g.op(self.alpha[a], c);
                match self.gamma[s] {
                    UNSET if !self.gamma_hit[v] => {
                        self.gamma[s] = v;
                        self.gamma_hit[v] = true;
                        added.push(s);
                    }
                    t if t == v => {}
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.used[c] = true;
                self.beta[b] = c;
                if self.columns(b + 1) {
                    return true;
                }
                self.used[c] = false;
                self.beta[b] = UNSET;
            }
            for s in added {
                self.gamma_hit[self.gamma[s]] = false;
                self.gamma[s] = UNSET;
            }
        }
        false
    }
}

/// Returns `s` with `s(g(a, b)) = h(s(a), s(b))`, found by comparing
/// canonical forms.
pub fn are_isomorphic(g: &Groupoid, h: &Groupoid) -> Result<Option<Permutation>> {
    same_order(g, h)?;
    let (cg, sg) = canonical_labeling(g, CANONICAL_BOUND)?;
    let (ch, sh) = canonical_labeling(h, CANONICAL_BOUND)?;
    Ok((cg == ch).then(|| sh.inverse().compose(&sg)))
}

/// Lexicographically least row-major table among all relabelings.
pub fn canonical_form(g: &Groupoid) -> Result<Groupoid> {
    canonical_labeling(g, CANONICAL_BOUND).map(|(c, _)| c)
}

/// Like [`canonical_form`] but also returns the relabeling `s` with
/// `relabel(g, s) = form`, and takes the order bound explicitly.
pub fn canonical_labeling(g: &Groupoid, bound: usize) -> Result<(Groupoid, Permutation)> {
    let n = g.order();
    if n > bound {
        return Err(Error::Capacity { order: n, bound });
    }
    let mut c = Canon {
        g,
        n,
        sigma: vec![UNSET; n],
        pi: vec![UNSET; n],
        next_label: 0,
        best: None,
        best_sigma: Vec::new(),
        prefix: Vec::with_capacity(n),
    };
    c.row_zero(0);
    let best = c.best.expect("at least one labeling");
    Ok((
        Groupoid::from_raw(n, best),
        Permutation::from_vec_unchecked(c.best_sigma),
    ))
}

/// Branch and bound over relabelings. Row 0 of the relabeled table fixes the
/// whole labeling: position `y` of row 0 needs the element at label `y`, and a
/// product that has no label yet must take the least free label to keep the
/// entry minimal.
struct Canon<'a> {
    g: &'a Groupoid,
    n: usize,
    /// element -> label
    sigma: Vec<usize>,
    /// label -> element
    pi: Vec<usize>,
    next_label: usize,
    best: Option<Vec<u16>>,
    best_sigma: Vec<usize>,
    /// Row 0 of the relabeled table so far.
    prefix: Vec<u16>,
}

impl Canon<'_> {
    fn label_of(&self, v: usize, fresh: usize, fresh_label: usize, next: usize) -> usize {
        if self.sigma[v] != UNSET {
            self.sigma[v]
        } else if v == fresh {
            fresh_label
        } else {
            next
        }
    }

    /// Compares the relabeled row-0 prefix, extended by `next`, with the
    /// best table; no best yet counts as `Less`.
    fn against_best(&self, next: Option<u16>) -> Ordering {
        let Some(best) = &self.best else {
            return Ordering::Less;
        };
        self.prefix
            .iter()
            .chain(next.as_ref())
            .cmp(best[..self.prefix.len() + next.is_some() as usize].iter())
    }

    fn row_zero(&mut self, y: usize) {
        let n = self.n;
        if y == n {
            self.finish();
            return;
        }
        let forced = self.pi[y];
        let candidates: Vec<usize> = if forced != UNSET {
            vec![forced]
        } else {
            (0..n).filter(|&x| self.sigma[x] == UNSET).collect()
        };
        let entry = |this: &Self, x: usize| {
            let (fresh, next) = if forced == UNSET {
                (x, this.next_label + 1)
            } else {
                (UNSET, this.next_label)
            };
            let row = if y == 0 { x } else { this.pi[0] };
            this.label_of(this.g.op(row, x), fresh, y, next)
        };
        let entries: Vec<usize> = candidates.iter().map(|&x| entry(self, x)).collect();
        let least = *entries.iter().min().expect("a free element remains");
        for (&x, &e) in candidates.iter().zip(&entries) {
            if e != least {
                continue;
            }
            // re-checked per sibling: an earlier sibling may have improved the best
            if self.against_best(Some(least as u16)) == Ordering::Greater {
                return;
            }
            let saved = self.next_label;
            let mut assigned = Vec::with_capacity(2);
            if forced == UNSET {
                self.assign(x, y);
                assigned.push(x);
            }
            let v = self.g.op(self.pi[0], x);
            if self.sigma[v] == UNSET {
                self.assign(v, self.next_label);
                assigned.push(v);
            }
            debug_assert_eq!(self.sigma[v], least);
            self.prefix.push(least as u16);
            self.row_zero(y + 1);
            self.prefix.pop();
            for a in assigned {
                self.pi[self.sigma[a]] = UNSET;
                self.sigma[a] = UNSET;
            }
            self.next_label = saved;
        }
    }

    fn assign(&mut self, x: usize, label: usize) {
        self.sigma[x] = label;
        self.pi[label] = x;
        if label >= self.next_label {
            self.next_label = label + 1;
        }
    }

    fn finish(&mut self) {
        let n = self.n;
        let cell =
            |this: &Self, i: usize| this.sigma[this.g.op(this.pi[i / n], this.pi[i % n])] as u16;
        let mut state = self.against_best(None);
        if state == Ordering::Equal {
            let best = self.best.as_ref().expect("Equal implies a best table");
            for (i, &b) in best.iter().enumerate().skip(n) {
                match cell(self, i).cmp(&b) {
                    Ordering::Equal => continue,
                    Ordering::Greater => return,
                    Ordering::Less => {
                        state = Ordering::Less;
                        break;
                    }
                }
            }
        }
        if state != Ordering::Less {
            return;
        }
        let table = (0..n * n).map(|i| cell(self, i)).collect();
        self.best = Some(table);
        self.best_sigma = self.sigma.clone();
    }
}

/// All `s` with `relabel(g, s) = g`, in lexicographic order.
pub fn automorphisms(g: &Groupoid) -> Result<Vec<Permutation>> {
    let n = g.order();
    if n > AUTOMORPHISM_BOUND {
        return Err(Error::Capacity {
            order: n,
            bound: AUTOMORPHISM_BOUND,
        });
    }
    let mut found = Vec::new();
    let mut s = vec![UNSET; n];
    let mut used = vec![false; n];
    automorphism_search(g, 0, &mut s, &mut used, &mut found);
    Ok(found)
}

fn automorphism_search(
    g: &Groupoid,
    k: usize,
    s: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Permutation>,
) {
    let n = g.order();
    if k == n {
        // the pruning below skips cells whose product was labeled later
        if (0..n).all(|x| (0..n).all(|y| s[g.op(x, y)] == g.op(s[x], s[y]))) {
            found.push(Permutation::from_vec_unchecked(s.clone()));
        }
        return;
    }
    for t in 0..n {
        if used[t] {
            continue;
        }
        s[k] = t;
        used[t] = true;
        // every cell among 0..=k whose product is also already mapped
        let consistent = (0..=k).all(|a| {
            [(a, k), (k, a)].iter().all(|&(x, y)| {
                let p = g.op(x, y);
                p > k || s[p] == g.op(s[x], s[y])
            })
        });
        if consistent {
            automorphism_search(g, k + 1, s, used, found);
        }
        used[t] = false;
        s[k] = UNSET;
    }
}

/// First transversal in row-major depth-first order: row `r` takes the
/// least column that is still free and whose symbol is still free.
pub fn find_transversal(g: &Groupoid) -> Option<Transversal> {
    let n = g.order();
    let mut cols = vec![false; n];
    let mut syms = vec![false; n];
    let mut chosen = Vec::with_capacity(n);
    transversal_search(g, &mut cols, &mut syms, &mut chosen)
        .then(|| Transversal::new(chosen.into_iter().enumerate().collect()).expect("valid cells"))
}

fn transversal_search(
    g: &Groupoid,
    cols: &mut [bool],
    syms: &mut [bool],
    chosen: &mut Vec<usize>,
) -> bool {
    let r = chosen.len();
    if r == g.order() {
        return true;
    }
    for c in 0..g.order() {
        let s = g.op(r, c);
        if cols[c] || syms[s] {
            continue;
        }
        cols[c] = true;
        syms[s] = true;
        chosen.push(c);
        if transversal_search(g, cols, syms, chosen) {
            return true;
        }
        chosen.pop();
        cols[c] = false;
        syms[s] = false;
    }
    false
}

/// An isotope `h` with `h(x, x) = x`, built from [`find_transversal`]: if the
/// transversal cell holding symbol `x` is `(r, c)`, then `alpha(x) = r`,
/// `beta(x) = c` and `gamma` is the identity.
pub fn idempotent_isotope(g: &Groupoid) -> Option<(IsotopyTriple, Groupoid)> {
    let t = find_transversal(g)?;
    let n = g.order();
    let mut alpha = vec![0; n];
    let mut beta = vec![0; n];
    for &(r, c) in t.cells() {
        let x = g.op(r, c);
        alpha[x] = r;
        beta[x] = c;
    }
    let triple = IsotopyTriple {
        alpha: Permutation::from_vec_unchecked(alpha),
        beta: Permutation::from_vec_unchecked(beta),
        gamma: Permutation::identity(n),
    };
    let h = apply_isotopy(g, &triple).expect("orders agree");
    Some((triple, h))
}
