//! Conversions between the groupoid, graph pair and matrix pair models,
//! and the algebraic transforms: quotient, product, subalgebra, square lift.

use crate::error::{Error, Result};
use crate::graph::GraphPair;
use crate::groupoid::Groupoid;
use crate::matrix::{first_common, BoolMatrix};
use crate::partition::Partition;
use crate::perm::Mapping;
use crate::properties::{congruence_violation, p2_violation};

/// `red = {(a, a*b)}`, `green = {(a*b, b)}`.
pub fn groupoid_to_graph_pair(g: &Groupoid) -> GraphPair {
    let n = g.order();
    let mut red = BoolMatrix::zeros(n).expect("order is positive");
    let mut green = BoolMatrix::zeros(n).expect("order is positive");
    for a in 0..n {
        for (b, x) in g.row(a).enumerate() {
            red.insert(a, x);
            green.insert(x, b);
        }
    }
    GraphPair::from_matrices(red, green).expect("same order")
}

/// `a*b` is the middle node of the unique red-green path from `a` to `b`.
/// Fails with the first node pair whose path count is not one.
pub fn graph_pair_to_groupoid(gp: &GraphPair) -> Result<Groupoid> {
    if let Some(v) = p2_violation(gp) {
        return Err(Error::PathCount {
            from: v.from,
            to: v.to,
            count: v.count,
        });
    }
    let green_t = gp.green().transpose();
    Ok(Groupoid::from_fn_unchecked(gp.order(), |a, b| {
        first_common(gp.red().row(a), green_t.row(b)).expect("exactly one path")
    }))
}

/// Incidence matrices `(I_R, I_G)`.
pub fn graph_pair_to_matrices(gp: &GraphPair) -> (BoolMatrix, BoolMatrix) {
    gp.clone().into_matrices()
}

pub fn matrices_to_graph_pair(a: &BoolMatrix, b: &BoolMatrix) -> Result<GraphPair> {
    GraphPair::from_matrices(a.clone(), b.clone())
}

/// The quotient by a congruence; block `i` of `p` (ordered by least
/// element) becomes element `i`. The result need not be rectangular.
pub fn quotient(g: &Groupoid, p: &Partition) -> Result<Groupoid> {
    if p.order() != g.order() {
        return Err(Error::OrderMismatch {
            left: g.order(),
            right: p.order(),
        });
    }
    if let Some([a, a2, b, b2]) = congruence_violation(g, p) {
        return Err(Error::NotCongruence { a, a2, b, b2 });
    }
    let blocks = p.blocks();
    Ok(Groupoid::from_fn_unchecked(blocks.len(), |i, j| {
        p.block_of(g.op(blocks[i][0], blocks[j][0]))
    }))
}

/// Componentwise product on pairs, `(a, b)` flattened to `a * |h| + b`.
pub fn direct_product(g: &Groupoid, h: &Groupoid) -> Result<Groupoid> {
    let m = h.order();
    let n = g.order() * m;
    Groupoid::from_fn(n, |x, y| g.op(x / m, y / m) * m + h.op(x % m, y % m))
}

/// Result of restricting a groupoid to a subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Closure {
    /// The subset is closed; the table is reindexed by the sorted subset.
    Closed(Groupoid),
    /// `a * b = product` escapes the subset.
    Escapes { a: usize, b: usize, product: usize },
}

pub fn subalgebra(g: &Groupoid, subset: &[usize]) -> Result<Closure> {
    let mut elems = subset.to_vec();
    elems.sort_unstable();
    elems.dedup();
    if elems.is_empty() {
        return Err(Error::EmptySubset);
    }
    if let Some(&x) = elems.iter().find(|&&x| x >= g.order()) {
        return Err(Error::SymbolOutOfRange {
            symbol: x,
            order: g.order(),
        });
    }
    let mut index = vec![usize::MAX; g.order()];
    for (i, &x) in elems.iter().enumerate() {
        index[x] = i;
    }
    for &a in &elems {
        for &b in &elems {
            let product = g.op(a, b);
            if index[product] == usize::MAX {
                return Ok(Closure::Escapes { a, b, product });
            }
        }
    }
    Ok(Closure::Closed(Groupoid::from_fn_unchecked(
        elems.len(),
        |i, j| index[g.op(elems[i], elems[j])],
    )))
}

/// `(a, b) + (c, d) = (a*c, c)` on pairs flattened to `a * n + b`.
/// Always rectangular; projecting to the first coordinate is a surjective
/// homomorphism onto `g`.
pub fn square_lift(g: &Groupoid) -> Result<Groupoid> {
    let n = g.order();
    Groupoid::from_fn(n * n, |x, y| {
        let (a, c) = (x / n, y / n);
        g.op(a, c) * n + c
    })
}

/// First-coordinate projection from the square lift of an order-`n` groupoid.
pub fn square_lift_projection(n: usize) -> Mapping {
    Mapping::new(n, (0..n * n).map(|x| x / n).collect()).expect("images below n")
}

/// `map(a*b) = map(a) * map(b)` for all `a, b`.
pub fn is_homomorphism(from: &Groupoid, to: &Groupoid, map: &Mapping) -> bool {
    map.domain() == from.order()
        && map.codomain() == to.order()
        && (0..from.order()).all(|a| {
            (0..from.order()).all(|b| map.apply(from.op(a, b)) == to.op(map.apply(a), map.apply(b)))
        })
}
