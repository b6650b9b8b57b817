use std::io::Write;

use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::frame::Partition;

/// Prior pseudo-count spread over the frame; 2 makes a binary frame's
/// prior uniform.
pub const DEFAULT_PRIOR_CONSTANT: f64 = 2.0;

/// Offset keeping grid points off the simplex boundary, where densities
/// with shape parameters below 1 diverge.
pub const INTERIOR_CLAMP: f64 = 1e-9;

/// Allowed deviation of a dogmatic profile's total from 1.
pub const ETA_SUM_TOLERANCE: f64 = 1e-12;

/// Allowed deviation of a simplex point's coordinate total from 1.
pub const SIMPLEX_SUM_TOLERANCE: f64 = 1e-9;

/// Observation counts over partition cells, augmented with a prior spread
/// across cell base rates.
///
/// The density over cell probabilities has shape parameters
/// `alpha(j) = r(j) + C * a(j)`. A dogmatic body of evidence replaces the
/// finite counts with the limit profile eta of infinitely many
/// observations, plus a weight recording relative magnitude within that
/// limit.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletEvidence {
    partition: Partition,
    counts: Vec<f64>,
    prior_constant: f64,
    dogmatic: Option<DogmaticProfile>,
}

/// Limit profile of infinite evidence: where the mass went, and how much
/// of it there was relative to other dogmatic bodies.
#[derive(Debug, Clone, PartialEq)]
pub struct DogmaticProfile {
    eta: Vec<f64>,
    weight: f64,
}

impl DogmaticProfile {
    pub fn eta(&self) -> &[f64] {
        &self.eta
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }
}

/// Expected cell probability, tagged by how it arose.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Expectation {
    /// Posterior mean from finite evidence.
    Mean(f64),
    /// Limit value eta from dogmatic evidence.
    Limit(f64),
}

impl Expectation {
    pub fn value(self) -> f64 {
        match self {
            Expectation::Mean(v) | Expectation::Limit(v) => v,
        }
    }
}

impl DirichletEvidence {
    /// No observations: the prior alone.
    pub fn prior(partition: Partition, prior_constant: f64) -> Result<Self> {
        let counts = vec![0.0; partition.cell_count()];
        Self::new(partition, counts, prior_constant)
    }

    pub fn new(partition: Partition, counts: Vec<f64>, prior_constant: f64) -> Result<Self> {
        if !(prior_constant > 0.0 && prior_constant.is_finite()) {
            return Err(Error::InvalidPriorConstant(prior_constant));
        }
        check_counts(&partition, &counts)?;
        Ok(DirichletEvidence {
            partition,
            counts,
            prior_constant,
            dogmatic: None,
        })
    }

    /// Evidence in the limit of infinite observations distributed as `eta`.
    pub fn dogmatic(partition: Partition, eta: Vec<f64>, weight: f64) -> Result<Self> {
        check_counts(&partition, &eta)?;
        let sum: f64 = eta.iter().sum();
        if (sum - 1.0).abs() > ETA_SUM_TOLERANCE {
            return Err(Error::EtaSum { sum });
        }
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(Error::InvalidWeight(weight));
        }
        let counts = vec![0.0; partition.cell_count()];
        Ok(DirichletEvidence {
            partition,
            counts,
            prior_constant: DEFAULT_PRIOR_CONSTANT,
            dogmatic: Some(DogmaticProfile { eta, weight }),
        })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn counts(&self) -> &[f64] {
        &self.counts
    }

    pub fn prior_constant(&self) -> f64 {
        self.prior_constant
    }

    pub fn is_dogmatic(&self) -> bool {
        self.dogmatic.is_some()
    }

    pub fn profile(&self) -> Option<&DogmaticProfile> {
        self.dogmatic.as_ref()
    }

    /// Per-cell shape parameters `r(j) + C * a(j)`.
    pub fn alpha(&self) -> Result<Vec<f64>> {
        if self.is_dogmatic() {
            return Err(Error::DogmaticEvidence);
        }
        Ok((0..self.counts.len())
            .map(|j| self.counts[j] + self.prior_constant * self.partition.base_rate(j).as_f64())
            .collect())
    }

    /// Expected probability of cell `j`. Panics if the index is out of range.
    pub fn expectation(&self, j: usize) -> Expectation {
        match &self.dogmatic {
            Some(profile) => Expectation::Limit(profile.eta[j]),
            None => {
                let total: f64 = self.counts.iter().sum();
                let prior = self.prior_constant * self.partition.base_rate(j).as_f64();
                Expectation::Mean((self.counts[j] + prior) / (self.prior_constant + total))
            }
        }
    }

    pub fn add_observations(&self, extra: &[f64]) -> Result<Self> {
        if self.is_dogmatic() {
            return Err(Error::DogmaticEvidence);
        }
        check_counts(&self.partition, extra)?;
        let counts = self.counts.iter().zip(extra).map(|(r, e)| r + e).collect();
        Ok(DirichletEvidence {
            partition: self.partition.clone(),
            counts,
            prior_constant: self.prior_constant,
            dogmatic: None,
        })
    }

    /// Regroup the evidence onto a coarser partition of the same frame.
    /// Each target cell collects the counts of the source cells inside it.
    pub fn coarsen(&self, target: &Partition) -> Result<Self> {
        if self.is_dogmatic() {
            return Err(Error::DogmaticEvidence);
        }
        if target.frame() != self.partition.frame() {
            return Err(Error::FrameMismatch);
        }
        let mut counts = vec![0.0; target.cell_count()];
        'sources: for (j, cell) in self.partition.cells().iter().enumerate() {
            for (t, target_cell) in target.cells().iter().enumerate() {
                if cell.is_subset_of(*target_cell) {
                    counts[t] += self.counts[j];
                    continue 'sources;
                }
            }
            return Err(Error::NotACoarsening);
        }
        Ok(DirichletEvidence {
            partition: target.clone(),
            counts,
            prior_constant: self.prior_constant,
            dogmatic: None,
        })
    }

    /// Density of the cell-probability vector `point`, evaluated in log
    /// space so large counts do not overflow.
    ///
    /// On the boundary (a zero coordinate) the density is 0 when the
    /// matching shape parameter exceeds 1 and an error when it is below 1.
    pub fn density_at(&self, point: &[f64]) -> Result<f64> {
        if self.is_dogmatic() {
            return Err(Error::DogmaticEvidence);
        }
        let cells = self.partition.cell_count();
        if point.len() != cells {
            return Err(Error::SimplexLength {
                expected: cells,
                got: point.len(),
            });
        }
        for &p in point {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::SimplexCoordinate(p));
            }
        }
        let sum: f64 = point.iter().sum();
        if (sum - 1.0).abs() > SIMPLEX_SUM_TOLERANCE {
            return Err(Error::SimplexSum { sum });
        }
        let alpha = self.alpha()?;
        for (&p, &a) in point.iter().zip(&alpha) {
            if p == 0.0 && a < 1.0 {
                return Err(Error::DensityDiverges);
            }
        }
        let mut log_density = ln_gamma(alpha.iter().sum::<f64>());
        for &a in &alpha {
            log_density -= ln_gamma(a);
        }
        let mut vanishes = false;
        for (&p, &a) in point.iter().zip(&alpha) {
            if p == 0.0 {
                if a > 1.0 {
                    vanishes = true;
                }
                // a == 1: the factor is 1
            } else {
                log_density += (a - 1.0) * p.ln();
            }
        }
        if vanishes {
            return Ok(0.0);
        }
        Ok(log_density.exp())
    }

    /// Sample the density over a 2- or 3-cell simplex.
    ///
    /// Two cells: `resolution + 1` evenly spaced points spanning
    /// `[INTERIOR_CLAMP, 1 - INTERIOR_CLAMP]`. Three cells: all interior
    /// points of the triangle subdivided `resolution` times per edge.
    pub fn density_grid(&self, resolution: usize) -> Result<DensityGrid> {
        if self.is_dogmatic() {
            return Err(Error::DogmaticEvidence);
        }
        let cells = self.partition.cell_count();
        match cells {
            2 => {
                if resolution < 1 {
                    return Err(Error::InvalidResolution(resolution));
                }
                let span = 1.0 - 2.0 * INTERIOR_CLAMP;
                let mut points = Vec::with_capacity(2 * (resolution + 1));
                let mut values = Vec::with_capacity(resolution + 1);
                for step in 0..=resolution {
                    let p1 = INTERIOR_CLAMP + span * (step as f64 / resolution as f64);
                    let point = [p1, 1.0 - p1];
                    values.push(self.density_at(&point)?);
                    points.extend_from_slice(&point);
                }
                Ok(DensityGrid {
                    arity: 2,
                    resolution,
                    points,
                    values,
                })
            }
            3 => {
                if resolution < 3 {
                    return Err(Error::InvalidResolution(resolution));
                }
                let n = resolution as f64;
                let mut points = Vec::new();
                let mut values = Vec::new();
                for i in 1..=(resolution - 2) {
                    for j in 1..=(resolution - 1 - i) {
                        let m = resolution - i - j;
                        let point = [i as f64 / n, j as f64 / n, m as f64 / n];
                        values.push(self.density_at(&point)?);
                        points.extend_from_slice(&point);
                    }
                }
                Ok(DensityGrid {
                    arity: 3,
                    resolution,
                    points,
                    values,
                })
            }
            other => Err(Error::GridArity(other)),
        }
    }
}

fn check_counts(partition: &Partition, counts: &[f64]) -> Result<()> {
    if counts.len() != partition.cell_count() {
        return Err(Error::CountLength {
            expected: partition.cell_count(),
            got: counts.len(),
        });
    }
    for &c in counts {
        if !(c >= 0.0 && c.is_finite()) {
            return Err(Error::NegativeCount(c));
        }
    }
    Ok(())
}

/// Density values sampled on the open probability simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityGrid {
    arity: usize,
    resolution: usize,
    points: Vec<f64>,
    values: Vec<f64>,
}

impl DensityGrid {
    /// Coordinates per point: 2 or 3.
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i * self.arity..(i + 1) * self.arity]
    }

    pub fn value(&self, i: usize) -> f64 {
        self.values[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[f64], f64)> + '_ {
        self.points
            .chunks(self.arity)
            .zip(self.values.iter().copied())
    }

    /// Rows of `p1,...,pl,density` with round-trippable precision.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        write!(out, "p1")?;
        for j in 2..=self.arity {
            write!(out, ",p{j}")?;
        }
        writeln!(out, ",density")?;
        for (point, value) in self.iter() {
            for coordinate in point {
                write!(out, "{coordinate},")?;
            }
            writeln!(out, "{value}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::Frame;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn identity(labels: &[&str]) -> Partition {
        Partition::identity(Frame::new(labels.iter().copied()).unwrap())
    }

    fn urn_partition() -> Partition {
        let frame = Frame::new(["red", "black", "yellow"]).unwrap();
        Partition::new(
            frame.clone(),
            vec![
                frame.subset_of_labels(["red"]).unwrap(),
                frame.subset_of_labels(["black", "yellow"]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn prior_shape_follows_the_base_rates() {
        let e = DirichletEvidence::prior(identity(&["a", "b"]), 2.0).unwrap();
        assert_eq!(e.alpha().unwrap(), vec![1.0, 1.0]);

        let e = DirichletEvidence::prior(identity(&["red", "black", "yellow"]), 2.0).unwrap();
        assert_eq!(e.alpha().unwrap(), vec![2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0]);

        let e = DirichletEvidence::prior(urn_partition(), 2.0).unwrap();
        assert_eq!(e.alpha().unwrap(), vec![2.0 / 3.0, 4.0 / 3.0]);

        assert!(matches!(
            DirichletEvidence::prior(urn_partition(), 0.0),
            Err(Error::InvalidPriorConstant(_))
        ));
    }

    #[test]
    fn expectations_blend_counts_with_the_prior() {
        let prior = DirichletEvidence::prior(identity(&["red", "black", "yellow"]), 2.0).unwrap();
        for j in 0..3 {
            assert_abs_diff_eq!(prior.expectation(j).value(), 1.0 / 3.0, epsilon = 1e-15);
        }

        let urn = prior.add_observations(&[6.0, 1.0, 1.0]).unwrap();
        assert_abs_diff_eq!(urn.expectation(0).value(), 2.0 / 3.0, epsilon = 1e-15);
        assert!(matches!(urn.expectation(0), Expectation::Mean(_)));

        let coarse = DirichletEvidence::new(urn_partition(), vec![6.0, 2.0], 2.0).unwrap();
        assert_abs_diff_eq!(coarse.expectation(0).value(), 2.0 / 3.0, epsilon = 1e-15);

        let total: f64 = (0..3).map(|j| urn.expectation(j).value()).sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn dogmatic_evidence_reports_limits() {
        let e = DirichletEvidence::dogmatic(identity(&["a", "b", "c"]), vec![0.99, 0.01, 0.0], 1.0)
            .unwrap();
        assert!(matches!(e.expectation(0), Expectation::Limit(v) if v == 0.99));
        assert!(matches!(e.alpha(), Err(Error::DogmaticEvidence)));
        assert!(matches!(
            e.add_observations(&[1.0, 0.0, 0.0]),
            Err(Error::DogmaticEvidence)
        ));
        assert!(matches!(
            e.density_at(&[0.5, 0.3, 0.2]),
            Err(Error::DogmaticEvidence)
        ));

        assert!(matches!(
            DirichletEvidence::dogmatic(identity(&["a", "b"]), vec![0.6, 0.6], 1.0),
            Err(Error::EtaSum { .. })
        ));
        assert!(matches!(
            DirichletEvidence::dogmatic(identity(&["a", "b"]), vec![0.5, 0.5], -1.0),
            Err(Error::InvalidWeight(_))
        ));
    }

    #[test]
    fn observations_accumulate_componentwise() {
        let prior = DirichletEvidence::prior(identity(&["red", "black", "yellow"]), 2.0).unwrap();
        let once = prior.add_observations(&[6.0, 1.0, 1.0]).unwrap();
        assert_eq!(once.counts(), &[6.0, 1.0, 1.0]);

        let unchanged = once.add_observations(&[0.0, 0.0, 0.0]).unwrap();
        assert_eq!(unchanged.counts(), once.counts());

        let twice = once.add_observations(&[6.0, 1.0, 1.0]).unwrap();
        assert_eq!(twice.counts(), &[12.0, 2.0, 2.0]);

        assert!(matches!(
            once.add_observations(&[-1.0, 0.0, 0.0]),
            Err(Error::NegativeCount(_))
        ));
        assert!(matches!(
            once.add_observations(&[1.0, 2.0]),
            Err(Error::CountLength { .. })
        ));
    }

    #[test]
    fn coarsening_sums_counts_per_target_cell() {
        let fine = DirichletEvidence::new(
            identity(&["red", "black", "yellow"]),
            vec![6.0, 1.0, 1.0],
            2.0,
        )
        .unwrap();
        let coarse = fine.coarsen(&urn_partition()).unwrap();
        assert_eq!(coarse.counts(), &[6.0, 2.0]);
        assert_abs_diff_eq!(coarse.expectation(0).value(), 2.0 / 3.0, epsilon = 1e-12);

        let same = fine.coarsen(fine.partition()).unwrap();
        assert_eq!(same.counts(), fine.counts());

        // refinement direction is not a coarsening
        let coarse_first = DirichletEvidence::new(urn_partition(), vec![6.0, 2.0], 2.0).unwrap();
        assert!(matches!(
            coarse_first.coarsen(&identity(&["red", "black", "yellow"])),
            Err(Error::NotACoarsening)
        ));
    }

    #[test]
    fn coarsening_preserves_cell_expectations() {
        let fine = DirichletEvidence::new(
            identity(&["red", "black", "yellow"]),
            vec![6.0, 1.0, 1.0],
            2.0,
        )
        .unwrap();
        let coarse = fine.coarsen(&urn_partition()).unwrap();
        let fine_sum = fine.expectation(1).value() + fine.expectation(2).value();
        assert_abs_diff_eq!(coarse.expectation(1).value(), fine_sum, epsilon = 1e-12);
    }

    #[test]
    fn uniform_prior_density_is_flat() {
        // The log-gamma evaluation leaves a few ulp of noise around 1.
        let e = DirichletEvidence::prior(identity(&["a", "b"]), 2.0).unwrap();
        assert_relative_eq!(
            e.density_at(&[0.3, 0.7]).unwrap(),
            1.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            e.density_at(&[0.0, 1.0]).unwrap(),
            1.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn density_matches_a_direct_beta_evaluation() {
        let e = DirichletEvidence::new(identity(&["a", "b"]), vec![6.0, 2.0], 2.0).unwrap();
        // shape (7, 3): Gamma(10) / (Gamma(7) Gamma(3)) = 252
        let expected = 252.0 * 0.7f64.powi(6) * 0.3f64.powi(2);
        assert_relative_eq!(
            e.density_at(&[0.7, 0.3]).unwrap(),
            expected,
            max_relative = 1e-12
        );
    }

    #[test]
    fn density_handles_the_boundary_by_shape() {
        let above_one = DirichletEvidence::new(identity(&["a", "b"]), vec![6.0, 2.0], 2.0).unwrap();
        assert_eq!(above_one.density_at(&[0.0, 1.0]).unwrap(), 0.0);

        let below_one = DirichletEvidence::prior(identity(&["a", "b"]), 1.0).unwrap();
        assert!(matches!(
            below_one.density_at(&[0.0, 1.0]),
            Err(Error::DensityDiverges)
        ));
    }

    #[test]
    fn density_rejects_malformed_points() {
        let e = DirichletEvidence::prior(identity(&["a", "b"]), 2.0).unwrap();
        assert!(matches!(
            e.density_at(&[0.5, 0.4]),
            Err(Error::SimplexSum { .. })
        ));
        assert!(matches!(
            e.density_at(&[0.5, 0.3, 0.2]),
            Err(Error::SimplexLength { .. })
        ));
        assert!(matches!(
            e.density_at(&[-0.1, 1.1]),
            Err(Error::SimplexCoordinate(_))
        ));
    }

    #[test]
    fn density_peaks_in_the_heavily_observed_corner() {
        let e = DirichletEvidence::new(
            identity(&["red", "black", "yellow"]),
            vec![6.0, 1.0, 1.0],
            2.0,
        )
        .unwrap();
        let grid = e.density_grid(40).unwrap();
        let peak = (0..grid.len())
            .max_by(|a, b| grid.value(*a).total_cmp(&grid.value(*b)))
            .unwrap();
        let best = grid.point(peak);
        assert!(best[0] > 0.7);
        assert!(best[1] < 0.15);
        assert!(best[2] < 0.15);
    }

    #[test]
    fn grids_have_the_advertised_point_counts() {
        let beta = DirichletEvidence::prior(identity(&["a", "b"]), 2.0).unwrap();
        let grid = beta.density_grid(100).unwrap();
        assert_eq!(grid.len(), 101);
        assert_eq!(grid.arity(), 2);
        assert!(grid.iter().all(|(_, v)| (v - 1.0).abs() < 1e-12));

        let ternary = DirichletEvidence::prior(identity(&["a", "b", "c"]), 2.0).unwrap();
        let grid = ternary.density_grid(20).unwrap();
        assert_eq!(grid.len(), 19 * 18 / 2);
        assert_eq!(grid.arity(), 3);

        assert!(matches!(
            beta.density_grid(0),
            Err(Error::InvalidResolution(0))
        ));
        assert!(matches!(
            ternary.density_grid(2),
            Err(Error::InvalidResolution(2))
        ));
        let four = DirichletEvidence::prior(identity(&["a", "b", "c", "d"]), 2.0).unwrap();
        assert!(matches!(four.density_grid(10), Err(Error::GridArity(4))));
    }

    #[test]
    fn beta_grid_integrates_to_one() {
        let e = DirichletEvidence::new(identity(&["a", "b"]), vec![6.0, 2.0], 2.0).unwrap();
        let grid = e.density_grid(2000).unwrap();
        let mut integral = 0.0;
        for i in 0..grid.len() - 1 {
            let step = grid.point(i + 1)[0] - grid.point(i)[0];
            integral += 0.5 * (grid.value(i) + grid.value(i + 1)) * step;
        }
        assert_abs_diff_eq!(integral, 1.0, epsilon = 1e-3);
    }

    #[test]
    fn prior_coarsening_scales_shapes_exactly() {
        // 12 singletons grouped into 3 cells of 4: each coarse shape must
        // equal 4 times the fine shape, with no rounding drift
        let labels: Vec<String> = (0..12).map(|i| format!("s{i}")).collect();
        let frame = Frame::new(labels).unwrap();
        let fine = DirichletEvidence::prior(Partition::identity(frame.clone()), 2.0).unwrap();
        let fine_alpha = fine.alpha().unwrap()[0];

        let cells = (0..3)
            .map(|g| frame.subset_of_indices((0..4).map(|i| 4 * g + i)).unwrap())
            .collect();
        let target = Partition::new(frame.clone(), cells).unwrap();
        let coarse = fine.coarsen(&target).unwrap();

        let expected = 2.0 / 3.0;
        for &a in &coarse.alpha().unwrap() {
            assert_eq!(a, expected);
            assert_eq!(a, 4.0 * fine_alpha);
        }
    }

    #[test]
    fn csv_export_lists_every_point() {
        let e = DirichletEvidence::prior(identity(&["a", "b"]), 2.0).unwrap();
        let grid = e.density_grid(4).unwrap();
        let mut buffer = Vec::new();
        grid.write_csv(&mut buffer).unwrap();
        let text = String::from_utf8(buffer).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "p1,p2,density");
        assert_eq!(lines.len(), 6);
        for line in &lines[1..] {
            let density: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
            assert!((density - 1.0).abs() < 1e-12);
        }
    }
}
