//! Fusion rules. The cumulative rule adds the evidence behind two bbas
//! and is exposed both in evidence space (vector addition of counts) and
//! as a closed form on the bbas themselves. The conjunctive rule and its
//! normalised form are included for comparison.

use std::collections::{BTreeMap, BTreeSet};

use crate::bba::Bba;
use crate::dirichlet::DirichletEvidence;
use crate::error::{Error, Result};
use crate::frame::{Frame, Subset};

/// Conflict at or above 1 minus this leaves nothing to normalise.
pub const TOTAL_CONFLICT_TOLERANCE: f64 = 1e-12;

/// Add two bodies of evidence over the same partition: counts add
/// componentwise, prior and partition are unchanged.
pub fn fuse_evidence(a: &DirichletEvidence, b: &DirichletEvidence) -> Result<DirichletEvidence> {
    if a.partition() != b.partition() {
        return Err(Error::PartitionMismatch);
    }
    if a.prior_constant() != b.prior_constant() {
        return Err(Error::PriorConstantMismatch {
            left: a.prior_constant(),
            right: b.prior_constant(),
        });
    }
    if a.is_dogmatic() || b.is_dogmatic() {
        return Err(Error::DogmaticEvidence);
    }
    let counts = a
        .counts()
        .iter()
        .zip(b.counts())
        .map(|(x, y)| x + y)
        .collect();
    DirichletEvidence::new(a.partition().clone(), counts, a.prior_constant())
}

/// Combine two bbas by adding their underlying evidence.
///
/// Both operands must keep their focal elements below the whole frame
/// pairwise disjoint, and those cells must agree across operands (equal or
/// disjoint), so that a single partitioning underlies both.
///
/// Branches:
/// - neither dogmatic: closed form over the shared cells, equivalent to
///   mapping both to evidence, adding counts, and mapping back;
/// - exactly one dogmatic: the dogmatic operand wins unchanged, the limit
///   of the closed form as its uncertainty vanishes;
/// - both dogmatic: weighted average of the masses, weights accumulate.
pub fn fuse_cumulative(a: &Bba, b: &Bba) -> Result<Bba> {
    if a.frame() != b.frame() {
        return Err(Error::FrameMismatch);
    }
    let frame = a.frame().clone();
    let full = frame.full_set();
    let cells = common_cells(a, b, full)?;
    match (a.is_dogmatic(), b.is_dogmatic()) {
        (false, false) => {
            let ua = a.theta_mass();
            let ub = b.theta_mass();
            let mut entries: Vec<(Subset, f64)> = cells
                .iter()
                .map(|&cell| (cell, a.mass(cell) / ua + b.mass(cell) / ub))
                .collect();
            entries.push((full, 1.0));
            Bba::renormalized(frame, entries, 1.0)
        }
        (true, false) => Ok(a.clone()),
        (false, true) => Ok(b.clone()),
        (true, true) => {
            let wa = a.weight();
            let wb = b.weight();
            let total = wa + wb;
            let entries: Vec<(Subset, f64)> = cells
                .iter()
                .map(|&cell| {
                    (
                        cell,
                        (wa / total) * a.mass(cell) + (wb / total) * b.mass(cell),
                    )
                })
                .collect();
            Bba::renormalized(frame, entries, total)
        }
    }
}

fn disjoint_focal_cells(bba: &Bba, full: Subset) -> Result<Vec<Subset>> {
    let mut cells: Vec<Subset> = Vec::new();
    for (subset, _) in bba.focal_elements() {
        if subset == full {
            continue;
        }
        if cells.iter().any(|c| !c.is_disjoint(subset)) {
            return Err(Error::NotDirichlet);
        }
        cells.push(subset);
    }
    Ok(cells)
}

fn common_cells(a: &Bba, b: &Bba, full: Subset) -> Result<Vec<Subset>> {
    let cells_a = disjoint_focal_cells(a, full)?;
    let cells_b = disjoint_focal_cells(b, full)?;
    for x in &cells_a {
        for y in &cells_b {
            if x != y && !x.is_disjoint(*y) {
                return Err(Error::PartitionMismatch);
            }
        }
    }
    let merged: BTreeSet<Subset> = cells_a.into_iter().chain(cells_b).collect();
    Ok(merged.into_iter().collect())
}

/// Unnormalised combination: focal elements intersect pairwise and the
/// products accumulate, including on the empty set.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjunctiveResult {
    frame: Frame,
    masses: BTreeMap<Subset, f64>,
    conflict: f64,
}

impl ConjunctiveResult {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Mass assigned to the empty intersection.
    pub fn conflict(&self) -> f64 {
        self.conflict
    }

    pub fn mass(&self, subset: Subset) -> f64 {
        self.masses.get(&subset).copied().unwrap_or(0.0)
    }

    /// Non-empty focal elements; together with `conflict` they sum to 1.
    pub fn masses(&self) -> impl Iterator<Item = (Subset, f64)> + '_ {
        self.masses.iter().map(|(s, m)| (*s, *m))
    }
}

pub fn fuse_conjunctive(a: &Bba, b: &Bba) -> Result<ConjunctiveResult> {
    if a.frame() != b.frame() {
        return Err(Error::FrameMismatch);
    }
    let mut masses: BTreeMap<Subset, f64> = BTreeMap::new();
    let mut conflict = 0.0;
    for (y, mass_y) in a.focal_elements() {
        for (z, mass_z) in b.focal_elements() {
            let x = y.intersection(z);
            let product = mass_y * mass_z;
            if x.is_empty() {
                conflict += product;
            } else {
                *masses.entry(x).or_insert(0.0) += product;
            }
        }
    }
    Ok(ConjunctiveResult {
        frame: a.frame().clone(),
        masses,
        conflict,
    })
}

/// Conjunctive combination with the conflict normalised away. Undefined
/// when the operands are totally conflicting.
pub fn fuse_dempster(a: &Bba, b: &Bba) -> Result<Bba> {
    let combined = fuse_conjunctive(a, b)?;
    if combined.conflict >= 1.0 - TOTAL_CONFLICT_TOLERANCE {
        return Err(Error::TotalConflict);
    }
    Bba::renormalized(combined.frame, combined.masses, 1.0)
}
