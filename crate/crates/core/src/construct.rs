//! Constructions of rectangular groupoids and P2 graph pairs.

use crate::error::{Error, Result};
use crate::graph::GraphPair;
use crate::group::FiniteGroup;
use crate::groupoid::Groupoid;
use crate::partition::{Partition, PartitionSystem};
use crate::perm::Mapping;
use crate::properties::is_rectangular;

/// Every product equals `a`.
pub fn constant_groupoid(n: usize, a: usize) -> Result<Groupoid> {
    if n > 0 && a >= n {
        return Err(Error::SymbolOutOfRange {
            symbol: a,
            order: n,
        });
    }
    Groupoid::from_fn(n, |_, _| a)
}

/// Evans' central groupoid on pairs: `(a, b) * (c, d) = (b, c)`, with
/// `(a, b)` flattened to `a * m + b`.
pub fn evans_central(m: usize) -> Result<Groupoid> {
    if m == 0 {
        return Err(Error::ZeroOrder);
    }
    Groupoid::from_fn(m * m, |x, y| (x % m) * m + y / m)
}

/// The rectangular band on `A x B` with `|A| = n`, `|B| = m`:
/// `(a, b) * (c, d) = (a, d)`, `(a, b)` flattened to `a * m + b`.
pub fn rectangular_band(n: usize, m: usize) -> Result<Groupoid> {
    if n == 0 || m == 0 {
        return Err(Error::ZeroOrder);
    }
    Groupoid::from_fn(n * m, |x, y| (x / m) * m + y % m)
}

fn check_element(g: &Groupoid, a: usize) -> Result<()> {
    if a >= g.order() {
        return Err(Error::SymbolOutOfRange {
            symbol: a,
            order: g.order(),
        });
    }
    if !is_rectangular(g) {
        return Err(Error::NotRectangular);
    }
    Ok(())
}

/// Adds a new element `e = n` that multiplies exactly like `a`:
/// `e*x = a*x`, `x*e = x*a`, `e*e = a*a`. The image misses `e`.
pub fn simple_blow_up(g: &Groupoid, a: usize) -> Result<Groupoid> {
    check_element(g, a)?;
    let n = g.order();
    let like_a = |x: usize| if x == n { a } else { x };
    Groupoid::from_fn(n + 1, |x, y| g.op(like_a(x), like_a(y)))
}

/// Left extension of `g` by an idempotent `a`: `x*e = x*a`, `e*e = e`,
/// and `e*x = a*x` unless `a*x = a`, in which case `e*x = e`.
pub fn left_extension(g: &Groupoid, a: usize) -> Result<Groupoid> {
    check_element(g, a)?;
    if g.op(a, a) != a {
        return Err(Error::NotIdempotentElement { element: a });
    }
    let e = g.order();
    Groupoid::from_fn(e + 1, |x, y| match (x == e, y == e) {
        (false, false) => g.op(x, y),
        (false, true) => g.op(x, a),
        (true, true) => e,
        (true, false) => {
            let p = g.op(a, y);
            if p != a {
                p
            } else {
                e
            }
        }
    })
}

/// Mirror image of [`left_extension`]: `opposite(left_extension(opposite(g), a))`.
pub fn right_extension(g: &Groupoid, a: usize) -> Result<Groupoid> {
    Ok(left_extension(&g.opposite(), a)?.opposite())
}

fn check_split(a: &Groupoid, b: &Groupoid, f: &Mapping, g: &Mapping) -> Result<()> {
    if f.domain() != a.order() || f.codomain() != b.order() {
        return Err(Error::InvalidMapping(format!(
            "f must map 0..{} into 0..{}, got 0..{} into 0..{}",
            a.order(),
            b.order(),
            f.domain(),
            f.codomain()
        )));
    }
    if g.domain() != b.order() || g.codomain() != a.order() {
        return Err(Error::InvalidMapping(format!(
            "g must map 0..{} into 0..{}, got 0..{} into 0..{}",
            b.order(),
            a.order(),
            g.domain(),
            g.codomain()
        )));
    }
    if !is_rectangular(a) || !is_rectangular(b) {
        return Err(Error::NotRectangular);
    }
    Ok(())
}

/// Left split extension on `A ∪ B` (A first, B shifted by `|A|`):
///
/// ```text
/// x*y = x *_A y      x, y in A
///       x *_A g(y)   x in A, y in B
///       x *_B f(y)   x in B, y in A
///       x *_B y      x, y in B
/// ```
///
/// The off-diagonal blocks copy columns of `A` (top right) and of `B`
/// (bottom left).
pub fn left_split_extension(
    a: &Groupoid,
    b: &Groupoid,
    f: &Mapping,
    g: &Mapping,
) -> Result<Groupoid> {
    check_split(a, b, f, g)?;
    let na = a.order();
    Groupoid::from_fn(na + b.order(), |x, y| match (x < na, y < na) {
        (true, true) => a.op(x, y),
        (true, false) => a.op(x, g.apply(y - na)),
        (false, true) => na + b.op(x - na, f.apply(y)),
        (false, false) => na + b.op(x - na, y - na),
    })
}

/// Right split extension: the off-diagonal blocks copy rows instead,
/// `x*y = f(x) *_B y` for `x in A, y in B` and `g(x) *_A y` for `x in B, y in A`.
pub fn right_split_extension(
    a: &Groupoid,
    b: &Groupoid,
    f: &Mapping,
    g: &Mapping,
) -> Result<Groupoid> {
    check_split(a, b, f, g)?;
    let na = a.order();
    Groupoid::from_fn(na + b.order(), |x, y| match (x < na, y < na) {
        (true, true) => a.op(x, y),
        (true, false) => na + b.op(f.apply(x), y - na),
        (false, true) => a.op(g.apply(x - na), y),
        (false, false) => na + b.op(x - na, y - na),
    })
}

/// Red: reflexive cliques on the blocks of the base partition. Green: from
/// each `a` in block `π` to every `b` in the same block of `θ_π` as `a`.
pub fn partition_construction(ps: &PartitionSystem) -> GraphPair {
    let n = ps.order();
    let base = ps.base();
    let mut red = Vec::new();
    let mut green = Vec::new();
    for (pi, block) in base.blocks().iter().enumerate() {
        let theta = &ps.companions()[pi];
        for &a in block {
            red.extend(block.iter().map(|&b| (a, b)));
            green.extend(theta.blocks()[theta.block_of(a)].iter().map(|&b| (a, b)));
        }
    }
    GraphPair::new(n, red, green).expect("nodes in range")
}

/// Recovers the partition system of a partitioned graph pair: red must be
/// an equivalence relation and green reflexive, and the green
/// out-neighbourhoods of each red class must partition the nodes.
pub fn extract_partition_system(gp: &GraphPair) -> Option<PartitionSystem> {
    let n = gp.order();
    let red = gp.red();
    if (0..n).any(|a| !red.get(a, a) || !gp.has_green(a, a)) {
        return None;
    }
    // reflexive + symmetric + transitive: every row equals the rows of its members
    let equivalence = (0..n).all(|a| red.row_ones(a).all(|b| red.row(a) == red.row(b)));
    if !equivalence {
        return None;
    }
    let labels: Vec<usize> = (0..n).map(|a| red.row_ones(a).next().unwrap()).collect();
    let base = Partition::from_labels(&labels);
    let mut companions = Vec::with_capacity(base.len());
    for block in base.blocks() {
        let nbhds: Vec<Vec<usize>> = block
            .iter()
            .map(|&a| gp.green().row_ones(a).collect())
            .collect();
        companions.push(Partition::new(n, &nbhds).ok()?);
    }
    PartitionSystem::new(base, companions).ok()
}

fn check_subset(gamma: &FiniteGroup, set: &[usize], name: &str) -> Result<Vec<usize>> {
    let mut v = set.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.len() != set.len() {
        return Err(Error::InvalidMapping(format!(
            "{name} has repeated elements"
        )));
    }
    if let Some(&x) = v.iter().find(|&&x| x >= gamma.order()) {
        return Err(Error::SymbolOutOfRange {
            symbol: x,
            order: gamma.order(),
        });
    }
    if v.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(v)
}

/// Red `{(x, xh)}`, green `{(x, xk)}` for an exact factorization `Γ = HK`.
pub fn group_factorization_pair(
    gamma: &FiniteGroup,
    h: &[usize],
    k: &[usize],
) -> Result<GraphPair> {
    let h = check_subset(gamma, h, "H")?;
    let k = check_subset(gamma, k, "K")?;
    let n = gamma.order();
    if h.len() * k.len() != n {
        return Err(Error::NotExactFactorization {
            reason: format!("|H| * |K| = {} * {} != {n}", h.len(), k.len()),
        });
    }
    let mut seen: Vec<Option<(usize, usize)>> = vec![None; n];
    for &x in &h {
        for &y in &k {
            let p = gamma.op(x, y);
            if let Some((x0, y0)) = seen[p] {
                return Err(Error::NotExactFactorization {
                    reason: format!("{x0}*{y0} = {x}*{y} = {p}"),
                });
            }
            seen[p] = Some((x, y));
        }
    }
    let red = (0..n).flat_map(|x| h.iter().map(move |&s| (x, gamma.op(x, s))));
    let green = (0..n).flat_map(|x| k.iter().map(move |&s| (x, gamma.op(x, s))));
    GraphPair::new(n, red, green)
}

/// Partitioned graph pair from a subgroup `H` and left coset
/// representatives `T` (containing the identity).
///
/// Base blocks are the left cosets `aH`, with `a` the least element of the
/// coset; the companion partition of `aH` has classes `{a t h : t in T}`
/// for `h in H`. For abelian groups green is the Cayley graph of `T`.
pub fn coset_construction(gamma: &FiniteGroup, h: &[usize], t: &[usize]) -> Result<GraphPair> {
    let h = check_subset(gamma, h, "H")?;
    let t = check_subset(gamma, t, "T")?;
    let n = gamma.order();
    for &x in &h {
        if h.binary_search(&gamma.inverse(x)).is_err() {
            return Err(Error::NotSubgroup(format!("inverse of {x} missing")));
        }
        for &y in &h {
            if h.binary_search(&gamma.op(x, y)).is_err() {
                return Err(Error::NotSubgroup(format!("{x}*{y} missing")));
            }
        }
    }
    if t.binary_search(&gamma.identity()).is_err() {
        return Err(Error::NotCosetTransversal(
            "T must contain the identity".into(),
        ));
    }
    // left coset of x: xH
    let coset_label: Vec<usize> = (0..n)
        .map(|x| h.iter().map(|&s| gamma.op(x, s)).min().unwrap())
        .collect();
    let cosets = Partition::from_labels(&coset_label);
    if !cosets.has_transversal(&t) {
        return Err(Error::NotCosetTransversal(format!(
            "T = {t:?} does not meet every left coset of H exactly once"
        )));
    }
    let mut companions = Vec::with_capacity(cosets.len());
    for block in cosets.blocks() {
        let a = block[0];
        let classes: Vec<Vec<usize>> = h
            .iter()
            .map(|&s| t.iter().map(|&r| gamma.op(gamma.op(a, r), s)).collect())
            .collect();
        companions.push(Partition::new(n, &classes)?);
    }
    let ps = PartitionSystem::new(cosets, companions)?;
    Ok(partition_construction(&ps))
}

/// Every left translation `x -> gx` maps red edges to red edges and green
/// edges to green edges.
pub fn left_translations_preserve(gamma: &FiniteGroup, gp: &GraphPair) -> bool {
    let n = gamma.order();
    n == gp.order()
        && (0..n).all(|g| {
            let t = |x: usize| gamma.op(g, x);
            gp.red_edges().iter().all(|&(a, b)| gp.has_red(t(a), t(b)))
                && gp
                    .green_edges()
                    .iter()
                    .all(|&(a, b)| gp.has_green(t(a), t(b)))
        })
}
