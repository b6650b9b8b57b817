//! JSON document forms of bbas, evidence bodies, and conjunctive results.

use serde::{Deserialize, Serialize};

use crate::bba::Bba;
use crate::dirichlet::DirichletEvidence;
use crate::error::{Error, Result};
use crate::frame::{Frame, Partition, Subset};
use crate::fusion::ConjunctiveResult;

/// On-disk form of a bba. Subsets are lists of frame labels; `"*"` stands
/// for the whole frame. `partition` optionally pins the cell structure
/// used when converting to evidence; `weight` only matters for dogmatic
/// bbas.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BbaDocument {
    pub frame: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<Vec<String>>>,
    pub masses: Vec<MassEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MassEntry {
    pub subset: SubsetSpec,
    pub mass: f64,
}

/// Either a list of labels or the `"*"` sentinel for the whole frame.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubsetSpec {
    Whole(String),
    Labels(Vec<String>),
}

impl SubsetSpec {
    fn from_subset(frame: &Frame, subset: Subset) -> Self {
        if subset == frame.full_set() {
            SubsetSpec::Whole("*".to_string())
        } else {
            SubsetSpec::Labels(
                frame
                    .subset_labels(subset)
                    .into_iter()
                    .map(String::from)
                    .collect(),
            )
        }
    }

    fn to_subset(&self, frame: &Frame) -> Result<Subset> {
        match self {
            SubsetSpec::Whole(s) if s == "*" => Ok(frame.full_set()),
            SubsetSpec::Whole(_) => Err(Error::InvalidSubsetSpec),
            SubsetSpec::Labels(labels) => frame.subset_of_labels(labels),
        }
    }
}

impl BbaDocument {
    pub fn from_bba(bba: &Bba) -> Self {
        let frame = bba.frame();
        BbaDocument {
            frame: frame.labels().to_vec(),
            partition: None,
            masses: bba
                .focal_elements()
                .map(|(subset, mass)| MassEntry {
                    subset: SubsetSpec::from_subset(frame, subset),
                    mass,
                })
                .collect(),
            weight: bba.is_dogmatic().then(|| bba.weight()),
        }
    }

    pub fn to_bba(&self) -> Result<Bba> {
        let frame = Frame::new(self.frame.iter().cloned())?;
        let mut entries = Vec::with_capacity(self.masses.len());
        for entry in &self.masses {
            entries.push((entry.subset.to_subset(&frame)?, entry.mass));
        }
        Bba::with_weight(frame, entries, self.weight.unwrap_or(1.0))
    }

    /// The document's explicit partition, if it carries one.
    pub fn partition(&self) -> Result<Option<Partition>> {
        let Some(cells) = &self.partition else {
            return Ok(None);
        };
        let frame = Frame::new(self.frame.iter().cloned())?;
        let subsets = cells
            .iter()
            .map(|cell| frame.subset_of_labels(cell))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(Partition::new(frame, subsets)?))
    }
}

/// On-disk form of a body of evidence: per-cell counts `r` over an
/// explicit partition, the prior constant `C`, and optionally the
/// dogmatic limit profile.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EvidenceDocument {
    pub frame: Vec<String>,
    pub partition: Vec<Vec<String>>,
    pub r: Vec<f64>,
    #[serde(rename = "C")]
    pub prior_constant: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dogmatic: Option<DogmaticDocument>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DogmaticDocument {
    pub eta: Vec<f64>,
    pub weight: f64,
}

impl EvidenceDocument {
    pub fn from_evidence(evidence: &DirichletEvidence) -> Self {
        let partition = evidence.partition();
        let frame = partition.frame();
        EvidenceDocument {
            frame: frame.labels().to_vec(),
            partition: partition
                .cells()
                .iter()
                .map(|cell| {
                    frame
                        .subset_labels(*cell)
                        .into_iter()
                        .map(String::from)
                        .collect()
                })
                .collect(),
            r: evidence.counts().to_vec(),
            prior_constant: evidence.prior_constant(),
            dogmatic: evidence.profile().map(|p| DogmaticDocument {
                eta: p.eta().to_vec(),
                weight: p.weight(),
            }),
        }
    }

    pub fn to_evidence(&self) -> Result<DirichletEvidence> {
        let frame = Frame::new(self.frame.iter().cloned())?;
        let cells = self
            .partition
            .iter()
            .map(|cell| frame.subset_of_labels(cell))
            .collect::<Result<Vec<_>>>()?;
        let partition = Partition::new(frame, cells)?;
        match &self.dogmatic {
            Some(d) => DirichletEvidence::dogmatic(partition, d.eta.clone(), d.weight),
            None => DirichletEvidence::new(partition, self.r.clone(), self.prior_constant),
        }
    }
}

/// Output form of the unnormalised combination, with the empty-set mass
/// broken out as `conflict`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConjunctiveDocument {
    pub frame: Vec<String>,
    pub masses: Vec<MassEntry>,
    pub conflict: f64,
}

impl ConjunctiveDocument {
    pub fn from_result(result: &ConjunctiveResult) -> Self {
        let frame = result.frame();
        ConjunctiveDocument {
            frame: frame.labels().to_vec(),
            masses: result
                .masses()
                .map(|(subset, mass)| MassEntry {
                    subset: SubsetSpec::from_subset(frame, subset),
                    mass,
                })
                .collect(),
            conflict: result.conflict(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_label_lists_and_the_whole_frame_sentinel() {
        let text = r#"{
            "frame": ["Correct", "Faulty"],
            "masses": [
                {"subset": ["Correct"], "mass": 0.99},
                {"subset": "*", "mass": 0.01}
            ]
        }"#;
        let doc: BbaDocument = serde_json::from_str(text).unwrap();
        let bba = doc.to_bba().unwrap();
        assert_eq!(bba.theta_mass(), 0.01);
        assert!(!bba.is_dogmatic());
    }

    #[test]
    fn rejects_unknown_labels_and_stray_strings() {
        let text = r#"{
            "frame": ["a", "b"],
            "masses": [{"subset": ["c"], "mass": 1.0}]
        }"#;
        let doc: BbaDocument = serde_json::from_str(text).unwrap();
        assert!(matches!(doc.to_bba(), Err(Error::UnknownLabel(_))));

        let text = r#"{
            "frame": ["a", "b"],
            "masses": [{"subset": "a", "mass": 1.0}]
        }"#;
        let doc: BbaDocument = serde_json::from_str(text).unwrap();
        assert!(matches!(doc.to_bba(), Err(Error::InvalidSubsetSpec)));
    }

    #[test]
    fn bba_documents_round_trip_bit_for_bit() {
        let frame = Frame::new(["a", "b", "c"]).unwrap();
        let bba = Bba::new(
            frame.clone(),
            [
                (frame.subset_of_labels(["a"]).unwrap(), 0.3),
                (frame.subset_of_labels(["b", "c"]).unwrap(), 0.2),
                (frame.full_set(), 0.5),
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&BbaDocument::from_bba(&bba)).unwrap();
        let parsed: BbaDocument = serde_json::from_str(&json).unwrap();
        let back = parsed.to_bba().unwrap();
        for (subset, mass) in bba.focal_elements() {
            assert_eq!(back.mass(subset), mass);
        }
    }

    #[test]
    fn dogmatic_bbas_keep_their_weight_in_documents() {
        let frame = Frame::new(["a", "b"]).unwrap();
        let bba = Bba::with_weight(
            frame.clone(),
            [(frame.subset_of_labels(["a"]).unwrap(), 1.0)],
            5.0,
        )
        .unwrap();
        let doc = BbaDocument::from_bba(&bba);
        assert_eq!(doc.weight, Some(5.0));
        assert_eq!(doc.to_bba().unwrap().weight(), 5.0);

        let nondogmatic = Bba::vacuous(frame);
        assert_eq!(BbaDocument::from_bba(&nondogmatic).weight, None);
    }

    #[test]
    fn evidence_documents_round_trip_including_dogmatic_profiles() {
        let frame = Frame::new(["red", "black", "yellow"]).unwrap();
        let partition = Partition::new(
            frame.clone(),
            vec![
                frame.subset_of_labels(["red"]).unwrap(),
                frame.subset_of_labels(["black", "yellow"]).unwrap(),
            ],
        )
        .unwrap();
        let evidence = DirichletEvidence::new(partition.clone(), vec![6.0, 2.0], 2.0).unwrap();
        let json = serde_json::to_string(&EvidenceDocument::from_evidence(&evidence)).unwrap();
        assert!(json.contains("\"C\":2.0"));
        let parsed: EvidenceDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.to_evidence().unwrap(), evidence);

        let dogmatic = DirichletEvidence::dogmatic(partition, vec![0.8, 0.2], 3.0).unwrap();
        let json = serde_json::to_string(&EvidenceDocument::from_evidence(&dogmatic)).unwrap();
        let parsed: EvidenceDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.to_evidence().unwrap(), dogmatic);
    }

    #[test]
    fn documents_carry_explicit_partitions() {
        let text = r#"{
            "frame": ["red", "black", "yellow"],
            "partition": [["red"], ["black", "yellow"]],
            "masses": [{"subset": "*", "mass": 1.0}]
        }"#;
        let doc: BbaDocument = serde_json::from_str(text).unwrap();
        let partition = doc.partition().unwrap().unwrap();
        assert_eq!(partition.cell_count(), 2);
        assert_eq!(
            BbaDocument::from_bba(&doc.to_bba().unwrap()).partition,
            None
        );
    }
}
