//! Bijection between bbas with disjoint focal cells and Dirichlet
//! evidence. Beliefs on cells correspond to observation counts scaled by
//! the uncertainty mass; zero uncertainty corresponds to the dogmatic
//! limit, recorded as an explicit profile instead of infinite counts.

use crate::bba::Bba;
use crate::dirichlet::DirichletEvidence;
use crate::error::{Error, Result};
use crate::frame::{Partition, Subset};

/// Derive the partition a bba's focal structure implies: every focal
/// element below the whole frame becomes a cell, and uncovered singletons
/// fill the gaps.
pub fn implied_partition(b: &Bba) -> Result<Partition> {
    let frame = b.frame();
    let full = frame.full_set();
    let mut cells: Vec<Subset> = Vec::new();
    let mut covered = frame.empty_set();
    for (subset, _) in b.focal_elements() {
        if subset == full {
            continue;
        }
        if !covered.is_disjoint(subset) {
            return Err(Error::NotDirichlet);
        }
        covered = covered.union(subset);
        cells.push(subset);
    }
    for i in 0..frame.cardinality() {
        if !covered.contains(i) {
            cells.push(frame.singleton(i)?);
        }
    }
    Partition::new(frame.clone(), cells)
}

/// Invert a bba into the evidence that would produce it.
///
/// With uncertainty mass u = m(whole frame) > 0 the counts are
/// `r(j) = C * m(x_j) / u`. With u = 0 the result is dogmatic: the cell
/// masses become the limit profile eta and the bba's weight carries over.
pub fn to_evidence(
    b: &Bba,
    partition: &Partition,
    prior_constant: f64,
) -> Result<DirichletEvidence> {
    if b.frame() != partition.frame() {
        return Err(Error::FrameMismatch);
    }
    let full = b.frame().full_set();
    let mut cell_mass = vec![0.0; partition.cell_count()];
    for (subset, mass) in b.focal_elements() {
        if subset == full {
            continue;
        }
        match partition.cell_index(subset) {
            Some(j) => cell_mass[j] = mass,
            None => {
                let labels = b.frame().subset_labels(subset).join(", ");
                return Err(Error::FocalElementNotCell(format!("{{{labels}}}")));
            }
        }
    }
    let uncertainty = b.theta_mass();
    if uncertainty > 0.0 {
        let counts = cell_mass
            .iter()
            .map(|m| prior_constant * m / uncertainty)
            .collect();
        DirichletEvidence::new(partition.clone(), counts, prior_constant)
    } else {
        // normalise away any tolerated drift in the mass total
        let total: f64 = cell_mass.iter().sum();
        let eta = cell_mass.iter().map(|m| m / total).collect();
        DirichletEvidence::dogmatic(partition.clone(), eta, b.weight())
    }
}

/// Project evidence onto beliefs: counts shrink to masses, the prior
/// becomes mass on the whole frame, and a dogmatic profile becomes a
/// dogmatic bba with the same weight.
pub fn to_bba(e: &DirichletEvidence) -> Bba {
    let partition = e.partition();
    let frame = partition.frame().clone();
    match e.profile() {
        Some(profile) => {
            let entries = partition
                .cells()
                .iter()
                .zip(profile.eta())
                .map(|(cell, &v)| (*cell, v));
            Bba::with_weight(frame, entries, profile.weight())
                .expect("a dogmatic profile is a valid mass assignment")
        }
        None => {
            let denominator = e.prior_constant() + e.counts().iter().sum::<f64>();
            let mut entries: Vec<(Subset, f64)> = partition
                .cells()
                .iter()
                .zip(e.counts())
                .map(|(cell, &r)| (*cell, r / denominator))
                .collect();
            entries.push((frame.full_set(), e.prior_constant() / denominator));
            Bba::new(frame, entries).expect("mapped masses sum to 1")
        }
    }
}
