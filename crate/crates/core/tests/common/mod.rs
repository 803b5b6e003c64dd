//! Brute-force oracles shared by the integration tests. Nothing here uses the
//! library's search engine; they rely only on table access.

#![allow(dead_code)]

use rand::Rng;
use rectangularity::{Groupoid, PartialArray, Permutation};

/// `a*b = c*d = x` implies `a*d = c*b = x`, by checking every quadruple.
pub fn rectangular_by_quadruples(g: &Groupoid) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let x = g.op(a, b);
                    if g.op(c, d) == x && (g.op(a, d) != x || g.op(c, b) != x) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every table of order `n`, in lexicographic order.
pub fn all_tables(n: usize) -> impl Iterator<Item = Groupoid> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut entries = vec![0; cells];
        for e in entries.iter_mut().rev() {
            *e = code % n;
            code /= n;
        }
        Groupoid::new(n, &entries).unwrap()
    })
}

/// Every permutation of `0..n`, in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                extend(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `h(s(a), s(b)) = s(g(a, b))`.
pub fn relabel_by(g: &Groupoid, s: &[usize]) -> Groupoid {
    let n = g.order();
    let mut inv = vec![0; n];
    for (x, &y) in s.iter().enumerate() {
        inv[y] = x;
    }
    Groupoid::from_fn(n, |a, b| s[g.op(inv[a], inv[b])]).unwrap()
}

/// `h(a, b) = gamma^-1(g(alpha(a), beta(b)))`.
pub fn isotope_by(g: &Groupoid, alpha: &[usize], beta: &[usize], gamma: &[usize]) -> Groupoid {
    let n = g.order();
    let mut gamma_inv = vec![0; n];
    for (x, &y) in gamma.iter().enumerate() {
        gamma_inv[y] = x;
    }
    Groupoid::from_fn(n, |a, b| gamma_inv[g.op(alpha[a], beta[b])]).unwrap()
}

/// Least relabeled table over all `n!` relabelings.
pub fn min_relabeling(g: &Groupoid) -> Groupoid {
    all_perms(g.order())
        .iter()
        .map(|s| relabel_by(g, s))
        .min()
        .unwrap()
}

/// Number of relabelings fixing `g`.
pub fn automorphism_count(g: &Groupoid) -> usize {
    all_perms(g.order())
        .iter()
        .filter(|s| &relabel_by(g, s) == g)
        .count()
}

/// Least isotope over all `(n!)^3` triples.
pub fn min_isotope(g: &Groupoid) -> Groupoid {
    let perms = all_perms(g.order());
    let mut best: Option<Groupoid> = None;
    for a in &perms {
        for b in &perms {
            for c in &perms {
                let h = isotope_by(g, a, b, c);
                if best.as_ref().is_none_or(|x| h < *x) {
                    best = Some(h);
                }
            }
        }
    }
    best.unwrap()
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn random_groupoid(rng: &mut impl Rng, n: usize) -> Groupoid {
    let entries: Vec<usize> = (0..n * n).map(|_| rng.gen_range(0..n)).collect();
    Groupoid::new(n, &entries).unwrap()
}

pub fn random_perm(rng: &mut impl Rng, n: usize) -> Permutation {
    use rand::seq::SliceRandom;
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::new(v).unwrap()
}

/// Each cell empty with probability `empty`, otherwise a uniform symbol.
pub fn random_partial(rng: &mut impl Rng, n: usize, empty: f64) -> PartialArray {
    let cells: Vec<Option<usize>> = (0..n * n)
        .map(|_| (!rng.gen_bool(empty)).then(|| rng.gen_range(0..n)))
        .collect();
    PartialArray::new(n, &cells).unwrap()
}

/// The quadruple rule for every pair and corner involving `(r, c)`, on a
/// partially filled `size x size` grid.
fn consistent(cells: &[Option<usize>], size: usize, r: usize, c: usize) -> bool {
    let at = |a: usize, b: usize| cells[a * size + b];
    let v = at(r, c).unwrap();
    for a in 0..size {
        for b in 0..size {
            // (r, c) and (a, b) hold v: the corners must too
            if at(a, b) == Some(v) && [at(r, b), at(a, c)].into_iter().flatten().any(|y| y != v) {
                return false;
            }
            // (r, b) and (a, c) hold one symbol: the corner (r, c) must too
            if let (Some(x), Some(y)) = (at(r, b), at(a, c)) {
                if x == y && x != v {
                    return false;
                }
            }
        }
    }
    true
}

fn blow_up_search(
    cells: &mut [Option<usize>],
    size: usize,
    order: &[(usize, usize)],
    symbols: usize,
) -> u64 {
    let Some((&(r, c), rest)) = order.split_first() else {
        let entries: Vec<usize> = cells.iter().map(|x| x.unwrap()).collect();
        let h = Groupoid::new(size, &entries).unwrap();
        return u64::from(rectangular_by_quadruples(&h));
    };
    let mut total = 0;
    for v in 0..symbols {
        cells[r * size + c] = Some(v);
        if consistent(cells, size, r, c) {
            total += blow_up_search(cells, size, rest, symbols);
        }
    }
    cells[r * size + c] = None;
    total
}

/// One-element blow-ups of `g` by plain backtracking: fill row `e`, then
/// column `e`, then `e*e`, pruning with the quadruple rule on filled cells,
/// and verify each completed table by quadruples.
pub fn blow_ups_by_quadruples(g: &Groupoid) -> u64 {
    let n = g.order();
    let size = n + 1;
    let mut cells: Vec<Option<usize>> = vec![None; size * size];
    for a in 0..n {
        for b in 0..n {
            cells[a * size + b] = Some(g.op(a, b));
        }
    }
    let order: Vec<(usize, usize)> = (0..n)
        .map(|x| (n, x))
        .chain((0..n).map(|x| (x, n)))
        .chain(std::iter::once((n, n)))
        .collect();
    blow_up_search(&mut cells, size, &order, n)
}
