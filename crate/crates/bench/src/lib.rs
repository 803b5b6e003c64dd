//! Inputs shared by the benchmarks in `benches/`.

use rectangularity::construct::{evans_central, rectangular_band};
use rectangularity::transform::groupoid_to_graph_pair;
use rectangularity::{GraphPair, Groupoid};

/// Deterministic pseudo-random table of order `n` (xorshift).
pub fn scrambled_table(n: usize, seed: u64) -> Groupoid {
    let mut state = seed | 1;
    let entries: Vec<usize> = (0..n * n)
        .map(|_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % n as u64) as usize
        })
        .collect();
    Groupoid::new(n, &entries).expect("entries below n")
}

/// Rectangular tables with large orders: bands and central groupoids.
pub fn large_rectangular() -> Vec<(String, Groupoid)> {
    vec![
        (
            "band 8x8".into(),
            rectangular_band(8, 8).expect("positive sides"),
        ),
        (
            "band 4x16".into(),
            rectangular_band(4, 16).expect("positive sides"),
        ),
        ("evans 8".into(), evans_central(8).expect("positive side")),
    ]
}

pub fn large_graph_pairs() -> Vec<(String, GraphPair)> {
    large_rectangular()
        .into_iter()
        .map(|(name, g)| (name, groupoid_to_graph_pair(&g)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rectangularity::properties::{is_rectangular, satisfies_p2};

    #[test]
    fn inputs_are_as_described() {
        assert!(large_rectangular().iter().all(|(_, g)| is_rectangular(g)));
        assert!(large_graph_pairs().iter().all(|(_, gp)| satisfies_p2(gp)));
        assert_eq!(scrambled_table(7, 3), scrambled_table(7, 3));
        assert_eq!(scrambled_table(7, 3).order(), 7);
    }
}
