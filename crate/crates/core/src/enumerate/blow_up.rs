use super::state::RectState;
use crate::construct::rectangular_band;
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::properties::is_rectangular;

/// Largest base order for blow-up counting.
pub const BLOW_UP_BOUND: usize = 12;

/// Number of rectangular groupoids on `0..=n` that extend `g` (order `n`)
/// by one element `e = n` with every product in `0..n`.
///
/// Row `e` is filled first, then column `e`, then `e*e`; each placement is
/// checked against the rectangle rules incrementally.
pub fn count_one_element_blow_ups(g: &Groupoid) -> Result<u64> {
    let n = g.order();
    if n > BLOW_UP_BOUND {
        return Err(Error::Capacity {
            order: n,
            bound: BLOW_UP_BOUND,
        });
    }
    if !is_rectangular(g) {
        return Err(Error::NotRectangular);
    }
    let mut state = RectState::new(n + 1, n);
    for a in 0..n {
        for b in 0..n {
            state.place(a, b, g.op(a, b));
        }
    }
    let order: Vec<(usize, usize)> = (0..n)
        .map(|x| (n, x))
        .chain((0..n).map(|x| (x, n)))
        .chain(std::iter::once((n, n)))
        .collect();
    Ok(count(&mut state, &order, n))
}

fn count(state: &mut RectState, cells: &[(usize, usize)], symbols: usize) -> u64 {
    let Some((&(r, c), rest)) = cells.split_first() else {
        return 1;
    };
    let mut cands = Vec::with_capacity(symbols);
    state.candidates(r, c, &mut cands);
    let mut total = 0;
    for v in cands {
        state.place(r, c, v);
        total += count(state, rest, symbols);
        state.remove(r, c);
    }
    total
}

/// One-element blow-ups of the rectangular band on `n x m`.
pub fn enumerate_band_blow_ups(n: usize, m: usize) -> Result<u64> {
    if n == 0 || m == 0 {
        return Err(Error::ZeroOrder);
    }
    if n * m > BLOW_UP_BOUND {
        return Err(Error::Capacity {
            order: n * m,
            bound: BLOW_UP_BOUND,
        });
    }
    count_one_element_blow_ups(&rectangular_band(n, m)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_band_counts() {
        assert_eq!(enumerate_band_blow_ups(1, 1).unwrap(), 1);
        assert_eq!(enumerate_band_blow_ups(2, 2).unwrap(), 12);
        assert_eq!(enumerate_band_blow_ups(2, 3).unwrap(), 48);
        assert_eq!(enumerate_band_blow_ups(3, 2).unwrap(), 48);
    }

    #[test]
    fn bounds() {
        assert!(matches!(
            enumerate_band_blow_ups(4, 4),
            Err(Error::Capacity { .. })
        ));
        assert_eq!(enumerate_band_blow_ups(0, 2), Err(Error::ZeroOrder));
    }
}
