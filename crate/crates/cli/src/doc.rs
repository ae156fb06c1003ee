//! JSON document formats accepted and emitted by the CLI.
//!
//! Every document is a JSON object with a top-level `kind` field in
//! {template, saddle, presentation, proposal, flow, knot}. Field names
//! are part of the external contract; see the repository README for the
//! full schemas. Malformed JSON or an unknown `kind` is a parse error
//! (exit 2); a well-formed document describing invalid mathematics
//! (e.g. a wandering partition element) is a domain error (exit 1).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use smale_flows::{
    AbelianizationMap, ArLink, ConfigProposal, FlowDescriptor, GroupPresentation,
    IncidenceMatrix, KnotType, LaurentPoly, LinkingMatrix, SaddleData, SaddleWitness,
    StructureMatrix,
};

use crate::run::CliError;

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Document {
    Template(TemplateDoc),
    Saddle(SaddleDoc),
    Presentation(PresentationDoc),
    Proposal(ProposalDoc),
    Flow(FlowDoc),
    Knot(KnotDoc),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TemplateDoc {
    pub incidence: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SaddleDoc {
    pub structure: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents_attractor: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents_repeller: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDoc {
    pub presentation: String,
    /// Generator name -> exponent of t. Solved from the relators when
    /// absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abelianization: Option<BTreeMap<String, i64>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProposalDoc {
    pub x_core: String,
    pub y_core: String,
    pub x_twist: i64,
    pub y_twist: i64,
    pub bands_linked: bool,
    /// "hopf", "trefoil-meridian", or any other label.
    pub ar_link: String,
    #[serde(default)]
    pub concentric: bool,
    /// Attracting/repelling fixed points instead of closed orbits.
    #[serde(default)]
    pub fixed_points: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlowDoc {
    pub attractor: String,
    pub repeller: String,
    pub repeller_is_meridian_of_attractor: bool,
    pub repeller_disk_condition: bool,
    pub saddles: Vec<SaddleWitnessDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lk_ar_abs: Option<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum SaddleWitnessDoc {
    Explicit {
        structure: Vec<Vec<i64>>,
        exponents_attractor: Vec<Vec<i64>>,
        exponents_repeller: Vec<Vec<i64>>,
    },
    Opaque {
        det_abs: u64,
        delta_attractor: Option<String>,
        delta_repeller: String,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotDoc {
    pub knot: String,
}

pub fn parse_document(text: &str) -> Result<Document, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("invalid document: {e}")))
}

impl TemplateDoc {
    pub fn incidence_matrix(&self) -> Result<IncidenceMatrix, CliError> {
        IncidenceMatrix::new(self.incidence.clone()).map_err(CliError::domain)
    }

    pub fn structure_matrix(&self) -> Result<StructureMatrix, CliError> {
        let incidence = self.incidence_matrix()?;
        match &self.structure {
            Some(rows) => {
                StructureMatrix::with_incidence(incidence, rows.clone()).map_err(CliError::domain)
            }
            None => Err(CliError::Domain(
                "template document has no structure matrix".into(),
            )),
        }
    }
}

impl SaddleDoc {
    pub fn structure_matrix(&self) -> Result<StructureMatrix, CliError> {
        StructureMatrix::new(self.structure.clone()).map_err(CliError::domain)
    }

    fn linking(&self, exponents: &Option<Vec<Vec<i64>>>) -> Result<LinkingMatrix, CliError> {
        let s = self.structure_matrix()?;
        match exponents {
            Some(rows) => LinkingMatrix::new(s, rows.clone()).map_err(CliError::domain),
            None => Ok(LinkingMatrix::unlinked(s)),
        }
    }

    pub fn linking_attractor(&self) -> Result<LinkingMatrix, CliError> {
        self.linking(&self.exponents_attractor)
    }

    pub fn linking_repeller(&self) -> Result<LinkingMatrix, CliError> {
        self.linking(&self.exponents_repeller)
    }

    pub fn saddle_data(&self) -> Result<SaddleData, CliError> {
        SaddleData::new(
            self.structure_matrix()?,
            self.linking_attractor()?,
            self.linking_repeller()?,
        )
        .map_err(CliError::domain)
    }
}

impl PresentationDoc {
    pub fn resolve(&self) -> Result<(GroupPresentation, AbelianizationMap), CliError> {
        let pres: GroupPresentation = self.presentation.parse().map_err(CliError::domain)?;
        let phi = match &self.abelianization {
            Some(map) => {
                let mut exponents = Vec::with_capacity(pres.generators().len());
                for name in pres.generators() {
                    let e = map.get(name).copied().ok_or_else(|| {
                        CliError::Domain(format!("abelianization missing generator {name:?}"))
                    })?;
                    exponents.push(e);
                }
                AbelianizationMap::new(exponents)
            }
            None => smale_flows::solve_rank1_abelianization(&pres).map_err(CliError::domain)?,
        };
        Ok((pres, phi))
    }
}

fn parse_ar_link(s: &str) -> ArLink {
    match s {
        "hopf" => ArLink::Hopf,
        "trefoil-meridian" => ArLink::TrefoilMeridian,
        other => ArLink::Other(other.to_string()),
    }
}

pub fn ar_link_label(l: &ArLink) -> String {
    match l {
        ArLink::Hopf => "hopf".into(),
        ArLink::TrefoilMeridian => "trefoil-meridian".into(),
        ArLink::Other(s) => s.clone(),
    }
}

impl ProposalDoc {
    pub fn proposal(&self) -> Result<ConfigProposal, CliError> {
        Ok(ConfigProposal {
            x_core: self.x_core.parse().map_err(CliError::domain)?,
            y_core: self.y_core.parse().map_err(CliError::domain)?,
            x_twist: self.x_twist,
            y_twist: self.y_twist,
            bands_linked: self.bands_linked,
            ar_link: parse_ar_link(&self.ar_link),
            concentric: self.concentric,
        })
    }
}

impl SaddleWitnessDoc {
    pub fn witness(&self) -> Result<SaddleWitness, CliError> {
        match self {
            Self::Explicit {
                structure,
                exponents_attractor,
                exponents_repeller,
            } => {
                let s = StructureMatrix::new(structure.clone()).map_err(CliError::domain)?;
                let l_a = LinkingMatrix::new(s.clone(), exponents_attractor.clone())
                    .map_err(CliError::domain)?;
                let l_r = LinkingMatrix::new(s.clone(), exponents_repeller.clone())
                    .map_err(CliError::domain)?;
                Ok(SaddleWitness::Explicit(
                    SaddleData::new(s, l_a, l_r).map_err(CliError::domain)?,
                ))
            }
            Self::Opaque {
                det_abs,
                delta_attractor,
                delta_repeller,
            } => {
                let delta_attractor = delta_attractor
                    .as_ref()
                    .map(|s| s.parse::<LaurentPoly>())
                    .transpose()
                    .map_err(CliError::domain)?;
                let delta_repeller: LaurentPoly =
                    delta_repeller.parse().map_err(CliError::domain)?;
                Ok(SaddleWitness::Opaque {
                    det_abs: (*det_abs).into(),
                    delta_attractor,
                    delta_repeller,
                })
            }
        }
    }

    pub fn from_witness(w: &SaddleWitness) -> Self {
        match w {
            SaddleWitness::Explicit(data) => Self::Explicit {
                structure: data.structure().rows(),
                exponents_attractor: data.l_attractor().exponent_rows(),
                exponents_repeller: data.l_repeller().exponent_rows(),
            },
            SaddleWitness::Opaque {
                det_abs,
                delta_attractor,
                delta_repeller,
            } => Self::Opaque {
                det_abs: u64::try_from(det_abs).unwrap_or(u64::MAX),
                delta_attractor: delta_attractor.as_ref().map(|p| p.to_string()),
                delta_repeller: delta_repeller.to_string(),
            },
        }
    }
}

impl FlowDoc {
    pub fn descriptor(&self) -> Result<FlowDescriptor, CliError> {
        let attractor: KnotType = self.attractor.parse().map_err(CliError::domain)?;
        let repeller: KnotType = self.repeller.parse().map_err(CliError::domain)?;
        let saddles = self
            .saddles
            .iter()
            .map(|s| s.witness())
            .collect::<Result<Vec<_>, _>>()?;
        let flow = FlowDescriptor::new(
            attractor,
            repeller,
            self.repeller_is_meridian_of_attractor,
            self.repeller_disk_condition,
            saddles,
        )
        .map_err(CliError::domain)?;
        if let Some(stated) = self.lk_ar_abs {
            if flow.lk_ar_abs() != &stated.into() {
                return Err(CliError::Domain(format!(
                    "stated lk_ar_abs = {stated} but the saddle product gives {}",
                    flow.lk_ar_abs()
                )));
            }
        }
        Ok(flow)
    }

    pub fn from_descriptor(f: &FlowDescriptor) -> Self {
        Self {
            attractor: f.attractor().to_string(),
            repeller: f.repeller().to_string(),
            repeller_is_meridian_of_attractor: f.repeller_is_meridian_of_attractor(),
            repeller_disk_condition: f.repeller_disk_condition(),
            saddles: f.saddles().iter().map(SaddleWitnessDoc::from_witness).collect(),
            lk_ar_abs: u64::try_from(f.lk_ar_abs()).ok(),
        }
    }
}
