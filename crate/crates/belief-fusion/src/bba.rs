use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::frame::{Frame, Subset};

/// Allowed deviation of an input mass total from 1.
pub const MASS_SUM_TOLERANCE: f64 = 1e-9;

/// Basic belief assignment: masses over non-empty subsets of a frame.
///
/// Invariants held after construction: no empty-set entry, every stored
/// mass lies in (0, 1], and the total lies within [`MASS_SUM_TOLERANCE`]
/// of 1. Zero-mass entries are dropped, so the stored keys are exactly the
/// focal elements.
///
/// `weight` records relative evidence magnitude and only matters when two
/// dogmatic bbas are fused; it defaults to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Bba {
    frame: Frame,
    masses: BTreeMap<Subset, f64>,
    weight: f64,
}

impl Bba {
    pub fn new<I>(frame: Frame, masses: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, f64)>,
    {
        Self::with_weight(frame, masses, 1.0)
    }

    pub fn with_weight<I>(frame: Frame, masses: I, weight: f64) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, f64)>,
    {
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(Error::InvalidWeight(weight));
        }
        let mut map: BTreeMap<Subset, f64> = BTreeMap::new();
        for (subset, mass) in masses {
            if subset.frame_cardinality() != frame.cardinality() {
                return Err(Error::FrameMismatch);
            }
            if !(0.0..=1.0).contains(&mass) {
                return Err(Error::MassOutOfRange(mass));
            }
            if mass == 0.0 {
                continue;
            }
            if subset.is_empty() {
                return Err(Error::EmptyFocalElement);
            }
            *map.entry(subset).or_insert(0.0) += mass;
        }
        let sum: f64 = map.values().sum();
        if (sum - 1.0).abs() > MASS_SUM_TOLERANCE {
            return Err(Error::MassSum { sum });
        }
        Ok(Bba {
            frame,
            masses: map,
            weight,
        })
    }

    /// Scales the entries by their total before validating, so fusion
    /// outputs sum to 1 regardless of accumulated rounding. Entry order
    /// fixes the summation order.
    pub(crate) fn renormalized<I>(frame: Frame, masses: I, weight: f64) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, f64)>,
    {
        let entries: Vec<(Subset, f64)> = masses.into_iter().filter(|(_, m)| *m != 0.0).collect();
        let sum: f64 = entries.iter().map(|(_, m)| m).sum();
        debug_assert!(sum > 0.0);
        Self::with_weight(
            frame,
            entries.into_iter().map(|(s, m)| (s, m / sum)),
            weight,
        )
    }

    /// All mass on the whole frame: total ignorance.
    pub fn vacuous(frame: Frame) -> Self {
        let full = frame.full_set();
        Bba {
            frame,
            masses: BTreeMap::from([(full, 1.0)]),
            weight: 1.0,
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Mass of a subset; 0 unless it is a focal element.
    pub fn mass(&self, subset: Subset) -> f64 {
        self.masses.get(&subset).copied().unwrap_or(0.0)
    }

    pub fn theta_mass(&self) -> f64 {
        self.mass(self.frame.full_set())
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn focal_elements(&self) -> impl Iterator<Item = (Subset, f64)> + '_ {
        self.masses.iter().map(|(s, m)| (*s, *m))
    }

    /// No mass on the whole frame.
    pub fn is_dogmatic(&self) -> bool {
        !self.masses.contains_key(&self.frame.full_set())
    }

    pub fn classify(&self) -> BTreeSet<BbaClass> {
        let full = self.frame.full_set();
        let focals: Vec<Subset> = self.masses.keys().copied().collect();
        let mut tags = BTreeSet::new();
        if focals.as_slice() == [full] {
            tags.insert(BbaClass::Vacuous);
        }
        if focals.iter().all(|s| s.cardinality() == 1) {
            tags.insert(BbaClass::Bayesian);
        }
        if !self.masses.contains_key(&full) {
            tags.insert(BbaClass::Dogmatic);
        }
        let mut by_size = focals.clone();
        by_size.sort_by_key(|s| s.cardinality());
        if by_size.windows(2).all(|w| w[0].is_subset_of(w[1])) {
            tags.insert(BbaClass::Consonant);
        }
        if focals.iter().all(|s| s.cardinality() == 1 || *s == full) {
            tags.insert(BbaClass::Dirichlet);
        }
        let non_full: Vec<Subset> = focals.into_iter().filter(|s| *s != full).collect();
        let pairwise_disjoint = non_full
            .iter()
            .enumerate()
            .all(|(i, s)| non_full[..i].iter().all(|t| t.is_disjoint(*s)));
        if pairwise_disjoint {
            tags.insert(BbaClass::ClusterDirichlet);
        }
        if tags.is_empty() {
            tags.insert(BbaClass::General);
        }
        tags
    }

    /// Total mass committed to `x`: the sum over focal elements inside it.
    pub fn belief(&self, x: Subset) -> Result<f64> {
        self.check_subset(x)?;
        // fold, not sum: an empty f64 sum is -0.0
        Ok(self
            .masses
            .iter()
            .filter(|(y, _)| y.is_subset_of(x))
            .fold(0.0, |acc, (_, m)| acc + m))
    }

    /// Probability of `x` after spreading each focal element's mass
    /// uniformly over its singletons.
    pub fn pignistic(&self, x: Subset) -> Result<f64> {
        self.check_subset(x)?;
        let mut total = 0.0;
        for (y, m) in &self.masses {
            let shared = x.intersection(*y).cardinality();
            if shared == 0 {
                continue;
            }
            total += m * shared as f64 / y.cardinality() as f64;
        }
        Ok(total)
    }

    fn check_subset(&self, x: Subset) -> Result<()> {
        if x.frame_cardinality() != self.frame.cardinality() {
            return Err(Error::FrameMismatch);
        }
        if x.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(())
    }
}

/// Structural classes of a bba; a bba can carry several tags at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BbaClass {
    Vacuous,
    Bayesian,
    Dogmatic,
    Consonant,
    Dirichlet,
    ClusterDirichlet,
    General,
}

impl fmt::Display for BbaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            BbaClass::Vacuous => "vacuous",
            BbaClass::Bayesian => "bayesian",
            BbaClass::Dogmatic => "dogmatic",
            BbaClass::Consonant => "consonant",
            BbaClass::Dirichlet => "dirichlet",
            BbaClass::ClusterDirichlet => "cluster-dirichlet",
            BbaClass::General => "general",
        };
        f.write_str(name)
    }
}
