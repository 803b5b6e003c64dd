//! Predicates on groupoids, graph pairs, matrix pairs and partial arrays.
//!
//! Equational checks are exhaustive over the required tuples, stop at the
//! first failure and can report the failing tuple.

use crate::error::{Error, Result};
use crate::graph::GraphPair;
use crate::groupoid::Groupoid;
use crate::matrix::{and_count, first_common, words_for, BoolMatrix};
use crate::partial::PartialArray;
use crate::partition::Partition;
use crate::transform::groupoid_to_graph_pair;

/// Small dense bitset over `0..n`.
#[derive(Clone)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn new(n: usize) -> Self {
        Self {
            words: vec![0; words_for(n).max(1)],
        }
    }
    fn insert(&mut self, x: usize) {
        self.words[x / 64] |= 1 << (x % 64);
    }
    fn contains(&self, x: usize) -> bool {
        self.words[x / 64] >> (x % 64) & 1 == 1
    }
    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }
}

/// A cell `(row, col)` that lies in the bounding rectangle of `symbol`'s
/// cells but holds something else.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RectangleViolation {
    pub symbol: usize,
    pub row: usize,
    pub col: usize,
}

/// Rectangle criterion: for every symbol `x`, the cells holding `x` are
/// exactly `Rows_x x Cols_x`. Equivalent to the quasi-identity
/// `a*b = c*d = x  =>  a*d = c*b = x`, in `O(n^2)` time.
pub fn is_rectangular(g: &Groupoid) -> bool {
    let n = g.order();
    let mut rows: Vec<Bits> = vec![Bits::new(n); n];
    let mut cols: Vec<Bits> = vec![Bits::new(n); n];
    let mut count = vec![0usize; n];
    for a in 0..n {
        for (b, x) in g.row(a).enumerate() {
            rows[x].insert(a);
            cols[x].insert(b);
            count[x] += 1;
        }
    }
    (0..n).all(|x| count[x] == rows[x].len() * cols[x].len())
}

/// First cell (row-major) breaking the rectangle criterion.
pub fn rectangle_violation(g: &Groupoid) -> Option<RectangleViolation> {
    let n = g.order();
    let mut rows: Vec<Bits> = vec![Bits::new(n); n];
    let mut cols: Vec<Bits> = vec![Bits::new(n); n];
    for a in 0..n {
        for (b, x) in g.row(a).enumerate() {
            rows[x].insert(a);
            cols[x].insert(b);
        }
    }
    for row in 0..n {
        for col in 0..n {
            let here = g.op(row, col);
            if let Some(symbol) =
                (0..n).find(|&x| x != here && rows[x].contains(row) && cols[x].contains(col))
            {
                return Some(RectangleViolation { symbol, row, col });
            }
        }
    }
    None
}

/// Row and column co-occurrence neighbourhoods of each symbol over the
/// filled cells given by `cell`.
fn cooccurrence(n: usize, cell: impl Fn(usize, usize) -> Option<usize>) -> (Vec<Bits>, Vec<Bits>) {
    let mut in_row = vec![Bits::new(n); n];
    let mut in_col = vec![Bits::new(n); n];
    for i in 0..n {
        for j in 0..n {
            if let Some(x) = cell(i, j) {
                in_row[i].insert(x);
            }
            if let Some(x) = cell(j, i) {
                in_col[i].insert(x);
            }
        }
    }
    let spread = |lines: &[Bits]| {
        let mut nbr = vec![Bits::new(n); n];
        for line in lines {
            for (x, set) in nbr.iter_mut().enumerate() {
                if line.contains(x) {
                    set.union_with(line);
                }
            }
        }
        nbr
    };
    (spread(&in_row), spread(&in_col))
}

fn pair_in_row_and_column(
    n: usize,
    cell: impl Fn(usize, usize) -> Option<usize>,
) -> Option<(usize, usize)> {
    let (row_nbr, col_nbr) = cooccurrence(n, cell);
    for x in 0..n {
        for y in x + 1..n {
            if row_nbr[x].contains(y) && col_nbr[x].contains(y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// No two distinct symbols share both some row and some column.
pub fn satisfies_p1(g: &Groupoid) -> bool {
    p1_violation(g).is_none()
}

/// A pair of distinct symbols occurring together in a row and in a column.
pub fn p1_violation(g: &Groupoid) -> Option<(usize, usize)> {
    pair_in_row_and_column(g.order(), |a, b| Some(g.op(a, b)))
}

/// Every symbol occurs in the table.
pub fn is_full(g: &Groupoid) -> bool {
    g.image().into_iter().all(|b| b)
}

/// Every pair of distinct symbols shares a row or a column.
pub fn is_maximal(g: &Groupoid) -> bool {
    let n = g.order();
    let (row_nbr, col_nbr) = cooccurrence(n, |a, b| Some(g.op(a, b)));
    (0..n).all(|x| {
        let mut both = row_nbr[x].clone();
        both.union_with(&col_nbr[x]);
        (0..n).all(|y| y == x || both.contains(y))
    })
}

/// A node pair whose red-green path count is not exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathCountViolation {
    pub from: usize,
    pub to: usize,
    pub count: u32,
}

/// Path counts from `first` then `second`; `None` when every count is 1.
pub(crate) fn two_step_violation(
    first: &BoolMatrix,
    second: &BoolMatrix,
) -> Option<PathCountViolation> {
    let second_t = second.transpose();
    let n = first.order();
    for a in 0..n {
        for b in 0..n {
            let count = and_count(first.row(a), second_t.row(b));
            if count != 1 {
                return Some(PathCountViolation {
                    from: a,
                    to: b,
                    count,
                });
            }
        }
    }
    None
}

/// Exactly one red-green path between every ordered node pair.
pub fn satisfies_p2(gp: &GraphPair) -> bool {
    p2_violation(gp).is_none()
}

pub fn p2_violation(gp: &GraphPair) -> Option<PathCountViolation> {
    two_step_violation(gp.red(), gp.green())
}

/// `AB = J` over the integers.
pub fn satisfies_p4(a: &BoolMatrix, b: &BoolMatrix) -> Result<bool> {
    Ok(a.product_not_ones(b)?.is_none())
}

/// Identities checked by [`Law::counterexample`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    /// `a*a = a`
    Idempotent,
    /// `(a*b)*c = a*(b*c)`
    Associative,
    /// `(a*b)*(b*c) = b`
    Central,
    /// `(a*b)*(c*a) = a`
    UndirectedEq,
    /// `a*a = a` and `(a*b)*c = a*c`
    Partitioned,
    /// `a*a = a` and `a*(b*c) = a*c`
    DuallyPartitioned,
    /// `a*(a*b) = a*b`
    LeftAbsorption,
    /// `(a*b)*b = a*b`
    RightAbsorption,
}

impl Law {
    pub const ALL: [Law; 8] = [
        Law::Idempotent,
        Law::Associative,
        Law::Central,
        Law::UndirectedEq,
        Law::Partitioned,
        Law::DuallyPartitioned,
        Law::LeftAbsorption,
        Law::RightAbsorption,
    ];

    /// The law satisfied by `opposite(g)` exactly when `self` holds for `g`.
    pub fn mirrored(self) -> Law {
        match self {
            Law::Partitioned => Law::DuallyPartitioned,
            Law::DuallyPartitioned => Law::Partitioned,
            Law::LeftAbsorption => Law::RightAbsorption,
            Law::RightAbsorption => Law::LeftAbsorption,
            other => other,
        }
    }

    pub fn holds(self, g: &Groupoid) -> bool {
        self.counterexample(g).is_none()
    }

    /// First failing tuple in lexicographic order. A one-element tuple
    /// means `a*a = a` failed.
    pub fn counterexample(self, g: &Groupoid) -> Option<Vec<usize>> {
        let n = g.order();
        let m = |a, b| g.op(a, b);
        let idem = || (0..n).find(|&a| m(a, a) != a).map(|a| vec![a]);
        let pairs = |f: &dyn Fn(usize, usize) -> bool| {
            (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .find(|&(a, b)| !f(a, b))
                .map(|(a, b)| vec![a, b])
        };
        let triples = |f: &dyn Fn(usize, usize, usize) -> bool| {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !f(a, b, c) {
                            return Some(vec![a, b, c]);
                        }
                    }
                }
            }
            None
        };
        match self {
            Law::Idempotent => idem(),
            Law::Associative => triples(&|a, b, c| m(m(a, b), c) == m(a, m(b, c))),
            Law::Central => triples(&|a, b, c| m(m(a, b), m(b, c)) == b),
            Law::UndirectedEq => triples(&|a, b, c| m(m(a, b), m(c, a)) == a),
            Law::Partitioned => idem().or_else(|| triples(&|a, b, c| m(m(a, b), c) == m(a, c))),
            Law::DuallyPartitioned => {
                idem().or_else(|| triples(&|a, b, c| m(a, m(b, c)) == m(a, c)))
            }
            Law::LeftAbsorption => pairs(&|a, b| m(a, m(a, b)) == m(a, b)),
            Law::RightAbsorption => pairs(&|a, b| m(m(a, b), b) == m(a, b)),
        }
    }
}

pub fn is_idempotent(g: &Groupoid) -> bool {
    Law::Idempotent.holds(g)
}

pub fn is_associative(g: &Groupoid) -> bool {
    Law::Associative.holds(g)
}

pub fn is_central(g: &Groupoid) -> bool {
    Law::Central.holds(g)
}

pub fn satisfies_undirected_eq(g: &Groupoid) -> bool {
    Law::UndirectedEq.holds(g)
}

pub fn satisfies_partitioned_eqs(g: &Groupoid) -> bool {
    Law::Partitioned.holds(g)
}

pub fn satisfies_dually_partitioned_eqs(g: &Groupoid) -> bool {
    Law::DuallyPartitioned.holds(g)
}

/// The incidence matrices `(A, B)` of `g`'s graph pair satisfy both
/// `AB = J` and `BA = J`.
pub fn is_matrix_symmetric(g: &Groupoid) -> bool {
    let gp = groupoid_to_graph_pair(g);
    two_step_violation(gp.red(), gp.green()).is_none()
        && two_step_violation(gp.green(), gp.red()).is_none()
}

/// The companion operation `+`: `a + b` is the middle node of the unique
/// green-red path from `a` to `b`.
pub fn derive_plus(g: &Groupoid) -> Result<Groupoid> {
    let gp = groupoid_to_graph_pair(g);
    if let Some(v) = p2_violation(&gp) {
        return Err(Error::PathCount {
            from: v.from,
            to: v.to,
            count: v.count,
        });
    }
    if let Some(v) = two_step_violation(gp.green(), gp.red()) {
        return Err(Error::GreenRedPathCount {
            from: v.from,
            to: v.to,
            count: v.count,
        });
    }
    let red_t = gp.red().transpose();
    Ok(Groupoid::from_fn_unchecked(g.order(), |a, b| {
        first_common(gp.green().row(a), red_t.row(b)).expect("exactly one path")
    }))
}

/// No pair of distinct symbols shares a row and a column among filled cells.
pub fn is_partial_p1(p: &PartialArray) -> bool {
    pair_in_row_and_column(p.order(), |r, c| p.get(r, c)).is_none()
}

/// No symbol repeats within a row or a column.
pub fn is_partial_latin(p: &PartialArray) -> bool {
    let n = p.order();
    (0..n).all(|i| {
        let mut row = Bits::new(n);
        let mut col = Bits::new(n);
        (0..n).all(|j| {
            let fresh_row = match p.get(i, j) {
                Some(x) if row.contains(x) => false,
                Some(x) => {
                    row.insert(x);
                    true
                }
                None => true,
            };
            let fresh_col = match p.get(j, i) {
                Some(x) if col.contains(x) => false,
                Some(x) => {
                    col.insert(x);
                    true
                }
                None => true,
            };
            fresh_row && fresh_col
        })
    })
}

/// Equal symbols at `(i,j)` and `(k,l)` with `i != k`, `j != l` force
/// `(i,l)` and `(k,j)` to be empty.
pub fn has_blackburn(p: &PartialArray) -> bool {
    let n = p.order();
    let mut by_symbol: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if let Some(x) = p.get(i, j) {
                by_symbol[x].push((i, j));
            }
        }
    }
    by_symbol.iter().all(|cells| {
        cells.iter().enumerate().all(|(s, &(i, j))| {
            cells[s + 1..]
                .iter()
                .all(|&(k, l)| i == k || j == l || (p.get(i, l).is_none() && p.get(k, j).is_none()))
        })
    })
}

/// A quadruple `(a, a2, b, b2)` with `a ~ a2`, `b ~ b2` and `a*b`, `a2*b2`
/// in different blocks. Orders must agree.
pub fn congruence_violation(g: &Groupoid, p: &Partition) -> Option<[usize; 4]> {
    let n = g.order();
    // Compatibility in each argument separately suffices; compare against
    // the least element of each block.
    for a in 0..n {
        let ra = p.representative(a);
        for b in 0..n {
            let rb = p.representative(b);
            let here = p.block_of(g.op(a, b));
            if here != p.block_of(g.op(ra, b)) {
                return Some([a, ra, b, b]);
            }
            if here != p.block_of(g.op(a, rb)) {
                return Some([a, a, b, rb]);
            }
        }
    }
    None
}

/// `a ~ a'` and `b ~ b'` imply `a*b ~ a'*b'`. False when the orders differ.
pub fn is_congruence(g: &Groupoid, p: &Partition) -> bool {
    p.order() == g.order() && congruence_violation(g, p).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{evans_central, rectangular_band};
    use crate::fixtures::*;

    fn g(rows: &[&[usize]]) -> Groupoid {
        Groupoid::from_rows(rows).unwrap()
    }

    #[test]
    fn rectangular_examples() {
        assert!(is_rectangular(&c4()));
        assert!(is_rectangular(&q5()));
        assert!(!is_rectangular(&i3()));
        let v = rectangle_violation(&i3()).unwrap();
        assert_eq!(v.symbol, 2);
        assert_eq!((v.row, v.col), (1, 1));
        assert_eq!(rectangle_violation(&q5()), None);
    }

    #[test]
    fn p1_examples() {
        assert!(satisfies_p1(&m4a()));
        assert!(satisfies_p1(&m4b()));
        let latin = g(&[&[0, 1], &[1, 0]]);
        assert!(!satisfies_p1(&latin));
        assert_eq!(p1_violation(&latin), Some((0, 1)));
    }

    #[test]
    fn p2_examples() {
        assert!(satisfies_p2(&farmers_market(4)));
        let e = x4_matrix();
        assert!(satisfies_p2(
            &GraphPair::from_matrices(e.clone(), e).unwrap()
        ));
        let empty_red = GraphPair::new(2, [], [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert!(!satisfies_p2(&empty_red));
        assert_eq!(
            p2_violation(&empty_red),
            Some(PathCountViolation {
                from: 0,
                to: 0,
                count: 0
            })
        );
    }

    #[test]
    fn p4_examples() {
        let b = x4_matrix();
        assert!(satisfies_p4(&b, &b).unwrap());
        let (a, b) = farmers_market_matrices(4);
        assert!(satisfies_p4(&a, &b).unwrap());
        let id = BoolMatrix::identity(3).unwrap();
        assert!(!satisfies_p4(&id, &id).unwrap());
        let one = BoolMatrix::identity(1).unwrap();
        assert!(satisfies_p4(&one, &one).unwrap());
        assert!(satisfies_p4(&id, &one).is_err());
    }

    #[test]
    fn full_and_maximal() {
        assert!(!is_full(&c4()));
        assert!(!is_maximal(&c4()));
        assert!(is_maximal(&m4b()));
        assert!(is_full(&m4a()));
        assert!(!is_maximal(&m4a()));
    }

    #[test]
    fn band_satisfies_everything_it_should() {
        let rb = rectangular_band(2, 3).unwrap();
        assert!(is_idempotent(&rb));
        assert!(is_associative(&rb));
        assert!(satisfies_partitioned_eqs(&rb));
        assert!(satisfies_dually_partitioned_eqs(&rb));
        assert!(satisfies_undirected_eq(&rb));
    }

    #[test]
    fn evans_is_central() {
        assert!(is_central(&evans_central(2).unwrap()));
        assert!(is_central(&evans_central(3).unwrap()));
        assert_eq!(Law::Central.counterexample(&c4()), Some(vec![0, 1, 0]));
    }

    #[test]
    fn i3_absorption_witnesses() {
        let i3 = i3();
        assert!(is_idempotent(&i3));
        // (0*1)*1 = 2*1 = 1, but 0*1 = 2
        assert_eq!(Law::RightAbsorption.counterexample(&i3), Some(vec![0, 1]));
        assert!(Law::LeftAbsorption.holds(&i3));
        assert_eq!(
            Law::LeftAbsorption.counterexample(&i3.opposite()),
            Some(vec![1, 0])
        );
    }

    #[test]
    fn matrix_symmetry_examples() {
        assert!(is_matrix_symmetric(&x4()));
        assert!(!is_matrix_symmetric(&c4()));
        assert!(is_matrix_symmetric(&Groupoid::trivial()));
    }

    #[test]
    fn derive_plus_examples() {
        let x4 = x4();
        let plus = derive_plus(&x4).unwrap();
        let n = x4.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(plus.op(x4.op(a, b), x4.op(b, c)), b);
                    assert_eq!(x4.op(plus.op(a, b), plus.op(b, c)), b);
                }
            }
        }
        assert_eq!(
            derive_plus(&Groupoid::trivial()).unwrap(),
            Groupoid::trivial()
        );
        assert!(matches!(
            derive_plus(&c4()),
            Err(Error::GreenRedPathCount { .. })
        ));
        assert!(matches!(derive_plus(&i3()), Err(Error::PathCount { .. })));
    }

    #[test]
    fn partial_examples() {
        let b3 = b3();
        assert!(is_partial_latin(&b3));
        assert!(has_blackburn(&b3));
        assert!(!is_partial_p1(&b3));

        let empty = PartialArray::empty(4).unwrap();
        assert!(is_partial_latin(&empty) && has_blackburn(&empty) && is_partial_p1(&empty));

        let latin = PartialArray::from_groupoid(&g(&[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]));
        assert!(!is_partial_p1(&latin));
        assert!(is_partial_latin(&latin));

        let repeat = PartialArray::new(2, &[Some(0), Some(0), None, None]).unwrap();
        assert!(!is_partial_latin(&repeat));
    }

    #[test]
    fn filled_partial_agrees_with_total() {
        for t in [c4(), m4a(), m4b(), x4(), q5(), i3(), t5a()] {
            assert_eq!(
                is_partial_p1(&PartialArray::from_groupoid(&t)),
                satisfies_p1(&t)
            );
        }
    }

    #[test]
    fn congruence_examples() {
        let q5 = q5();
        let p = Partition::new(5, &[vec![0, 1, 2, 3], vec![4]]).unwrap();
        assert!(is_congruence(&q5, &p));
        assert!(is_congruence(&q5, &Partition::singletons(5)));
        let rows = g(&[&[0, 0], &[1, 1]]);
        assert!(is_congruence(&rows, &Partition::single_block(2)));
        let latin = g(&[&[0, 1], &[1, 0]]);
        assert!(is_congruence(&latin, &Partition::singletons(2)));

        let bad = Partition::new(5, &[vec![0, 4], vec![1, 2, 3]]).unwrap();
        let [a, a2, b, b2] = congruence_violation(&q5, &bad).unwrap();
        assert!(bad.same_block(a, a2) && bad.same_block(b, b2));
        assert!(!bad.same_block(q5.op(a, b), q5.op(a2, b2)));
        assert!(!is_congruence(&q5, &Partition::singletons(4)));
    }
}
