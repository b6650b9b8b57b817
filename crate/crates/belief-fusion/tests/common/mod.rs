//! Seeded generators shared by the integration suites.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use belief_fusion::{Bba, Frame, Partition, Subset};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random partition of a fresh frame: 2 to 6 outcomes, shuffled and split
/// into at least two non-empty cells.
pub fn random_partition(rng: &mut ChaCha8Rng) -> Partition {
    let k = rng.random_range(2..=6usize);
    let frame = Frame::new((0..k).map(|i| format!("x{i}"))).unwrap();
    let mut indices: Vec<usize> = (0..k).collect();
    indices.shuffle(rng);
    let cell_count = rng.random_range(2..=k);
    let mut cuts: Vec<usize> = (1..k).collect();
    cuts.shuffle(rng);
    cuts.truncate(cell_count - 1);
    cuts.sort_unstable();
    cuts.push(k);
    let mut cells = Vec::new();
    let mut start = 0;
    for cut in cuts {
        cells.push(
            frame
                .subset_of_indices(indices[start..cut].iter().copied())
                .unwrap(),
        );
        start = cut;
    }
    Partition::new(frame, cells).unwrap()
}

/// Random non-dogmatic bba whose focal elements are partition cells plus the
/// whole frame. Roughly a quarter of the cells are left without mass so the
/// operands of a fusion do not always share focal elements.
pub fn random_dirichlet_bba(rng: &mut ChaCha8Rng, partition: &Partition) -> Bba {
    let frame = partition.frame().clone();
    let mut entries: Vec<(Subset, f64)> = Vec::new();
    for &cell in partition.cells() {
        if rng.random_range(0..4) == 0 {
            continue;
        }
        entries.push((cell, rng.random_range(0.05..1.0)));
    }
    entries.push((frame.full_set(), rng.random_range(0.05..1.0)));
    let total: f64 = entries.iter().map(|(_, m)| m).sum();
    Bba::new(frame, entries.into_iter().map(|(s, m)| (s, m / total))).unwrap()
}

/// Random dogmatic bba over the partition cells, carrying a random weight.
pub fn random_dogmatic_bba(rng: &mut ChaCha8Rng, partition: &Partition) -> Bba {
    let frame = partition.frame().clone();
    let raw: Vec<f64> = partition
        .cells()
        .iter()
        .map(|_| rng.random_range(0.05..1.0))
        .collect();
    let total: f64 = raw.iter().sum();
    let entries = partition
        .cells()
        .iter()
        .copied()
        .zip(raw.iter().map(|m| m / total));
    Bba::with_weight(frame, entries, rng.random_range(0.5..4.0)).unwrap()
}
