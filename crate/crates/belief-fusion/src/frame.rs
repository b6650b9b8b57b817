use crate::error::{Error, Result};

/// Ordered set of mutually exclusive, exhaustive state labels.
///
/// Label order is fixed at construction and defines the bit positions used
/// by [`Subset`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    labels: Vec<String>,
}

impl Frame {
    /// Largest supported cardinality; subsets are 64-bit masks.
    pub const MAX_CARDINALITY: usize = 64;

    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() < 2 {
            return Err(Error::TooFewLabels(labels.len()));
        }
        if labels.len() > Self::MAX_CARDINALITY {
            return Err(Error::FrameTooLarge(labels.len()));
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Frame { labels })
    }

    pub fn cardinality(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn singleton(&self, index: usize) -> Result<Subset> {
        if index >= self.cardinality() {
            return Err(Error::IndexOutOfRange {
                index,
                cardinality: self.cardinality(),
            });
        }
        Ok(Subset {
            mask: 1 << index,
            k: self.cardinality() as u8,
        })
    }

    /// The whole frame as a subset.
    pub fn full_set(&self) -> Subset {
        Subset {
            mask: full_mask(self.cardinality()),
            k: self.cardinality() as u8,
        }
    }

    pub fn empty_set(&self) -> Subset {
        Subset {
            mask: 0,
            k: self.cardinality() as u8,
        }
    }

    pub fn subset_of_indices<I>(&self, indices: I) -> Result<Subset>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut mask = 0u64;
        for index in indices {
            if index >= self.cardinality() {
                return Err(Error::IndexOutOfRange {
                    index,
                    cardinality: self.cardinality(),
                });
            }
            mask |= 1 << index;
        }
        Ok(Subset {
            mask,
            k: self.cardinality() as u8,
        })
    }

    pub fn subset_of_labels<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut mask = 0u64;
        for label in labels {
            mask |= 1 << self.index_of(label.as_ref())?;
        }
        Ok(Subset {
            mask,
            k: self.cardinality() as u8,
        })
    }

    pub fn subset_labels(&self, subset: Subset) -> Vec<&str> {
        subset.indices().map(|i| self.label(i)).collect()
    }

    /// Prior probability of a subset from cardinality alone: |x| / k.
    pub fn base_rate(&self, subset: Subset) -> Result<BaseRate> {
        if subset.frame_cardinality() != self.cardinality() {
            return Err(Error::FrameMismatch);
        }
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(BaseRate {
            numer: subset.cardinality() as u32,
            denom: self.cardinality() as u32,
        })
    }
}

fn full_mask(k: usize) -> u64 {
    if k == Frame::MAX_CARDINALITY {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Subset of a frame, stored as a bit mask over the frame's label order.
///
/// Ordering compares masks, so iterating a sorted collection visits the
/// whole frame last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    mask: u64,
    k: u8,
}

impl Subset {
    pub fn cardinality(self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Cardinality of the owning frame.
    pub fn frame_cardinality(self) -> usize {
        self.k as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn is_full(self) -> bool {
        self.mask == full_mask(self.k as usize)
    }

    pub fn contains(self, index: usize) -> bool {
        index < self.k as usize && self.mask & (1 << index) != 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.mask & other.mask == 0
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset {
            mask: self.mask & other.mask,
            k: self.k,
        }
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset {
            mask: self.mask | other.mask,
            k: self.k,
        }
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..self.k as usize).filter(move |i| self.mask & (1 << i) != 0)
    }
}

/// Exact prior probability |x| / k, kept as an integer ratio.
///
/// The fraction is never reduced; the denominator is always the frame
/// cardinality, so base rates over a partition sum to exactly 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaseRate {
    numer: u32,
    denom: u32,
}

impl BaseRate {
    pub fn numer(self) -> u32 {
        self.numer
    }

    pub fn denom(self) -> u32 {
        self.denom
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.numer) / f64::from(self.denom)
    }
}

/// Mutually disjoint, covering subsets of a frame, in a fixed cell order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    frame: Frame,
    cells: Vec<Subset>,
}

impl Partition {
    pub fn new(frame: Frame, cells: Vec<Subset>) -> Result<Self> {
        if cells.len() < 2 {
            return Err(Error::TooFewCells);
        }
        let mut seen = frame.empty_set();
        for cell in &cells {
            if cell.frame_cardinality() != frame.cardinality() {
                return Err(Error::FrameMismatch);
            }
            if cell.is_empty() {
                return Err(Error::EmptySubset);
            }
            if !seen.is_disjoint(*cell) {
                return Err(Error::OverlappingCells);
            }
            seen = seen.union(*cell);
        }
        if !seen.is_full() {
            return Err(Error::IncompleteCover);
        }
        Ok(Partition { frame, cells })
    }

    /// One cell per singleton, in frame order.
    pub fn identity(frame: Frame) -> Self {
        let k = frame.cardinality();
        let cells = (0..k)
            .map(|i| Subset {
                mask: 1 << i,
                k: k as u8,
            })
            .collect();
        Partition { frame, cells }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn cells(&self) -> &[Subset] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell(&self, j: usize) -> Subset {
        self.cells[j]
    }

    pub fn cell_index(&self, subset: Subset) -> Option<usize> {
        self.cells.iter().position(|c| *c == subset)
    }

    /// Base rate of cell `j`. Panics if the index is out of range.
    pub fn base_rate(&self, j: usize) -> BaseRate {
        self.frame
            .base_rate(self.cells[j])
            .expect("partition cells are non-empty")
    }
}
