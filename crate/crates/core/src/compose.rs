//! Building new simple Smale flows from old ones at the descriptor
//! level: the connected-sum move, the split move, and the
//! any-knot-attractor construction, with Alexander bookkeeping.
//!
//! Both moves require each input flow to have a single attractor and a
//! single unknotted repeller that is a meridian of the attractor; the
//! sum move additionally needs the repellers to bound disks meeting the
//! chain-recurrent set once. The sum yields attractor k₁ # k₂ and the
//! Alexander polynomial multiplies across the concatenated saddle list.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::franks::SaddleData;
use crate::knot::{KnotError, KnotType};
use crate::laurent::LaurentPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComposeError {
    #[error("clause (2) violated by flow {flow}: repeller must be an unknotted meridian of the attractor")]
    RepellerNotUnknottedMeridian { flow: usize },
    #[error("clause (3) violated by flow {flow}: repeller must bound a disk meeting the chain-recurrent set once")]
    DiskConditionRequired { flow: usize },
    #[error("simple flow invariant violated: det(I-L_a) = {det} is not symmetric in t")]
    AsymmetricSimpleFlow { det: String },
    #[error("no Alexander witness for saddle with attractor knot {0}")]
    NoAlexanderWitness(String),
    #[error(transparent)]
    Knot(#[from] KnotError),
}

/// Linking data of one basic saddle set, either as explicit matrices or
/// as an opaque record carrying only what the construction determines:
/// |det(I−S)| and the attractor polynomial. Matrix entries are never
/// fabricated for knots whose linking matrix is not pinned down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SaddleWitness {
    Explicit(SaddleData),
    Opaque {
        det_abs: BigUint,
        delta_attractor: Option<LaurentPoly>,
        delta_repeller: LaurentPoly,
    },
}

impl SaddleWitness {
    pub fn det_i_minus_s_abs(&self) -> BigUint {
        match self {
            Self::Explicit(data) => data.det_i_minus_s_abs(),
            Self::Opaque { det_abs, .. } => det_abs.clone(),
        }
    }

    /// det(I − L_a), raw; `None` when the witness is opaque with no
    /// formula.
    pub fn delta_attractor(&self) -> Option<LaurentPoly> {
        match self {
            Self::Explicit(data) => Some(data.l_attractor().det_i_minus()),
            Self::Opaque { delta_attractor, .. } => delta_attractor.clone(),
        }
    }

    pub fn delta_repeller(&self) -> LaurentPoly {
        match self {
            Self::Explicit(data) => data.l_repeller().det_i_minus(),
            Self::Opaque { delta_repeller, .. } => delta_repeller.clone(),
        }
    }

    fn sort_key(&self) -> String {
        match self {
            Self::Explicit(data) => format!(
                "explicit:{:?}:{:?}:{:?}",
                data.structure().rows(),
                data.l_attractor().exponent_rows(),
                data.l_repeller().exponent_rows()
            ),
            Self::Opaque {
                det_abs,
                delta_attractor,
                delta_repeller,
            } => format!("opaque:{det_abs}:{delta_attractor:?}:{delta_repeller}"),
        }
    }
}

/// A simple-Smale-flow record: attractor and repeller knot types, the
/// meridian/disk hypotheses of the composition theorem, and the saddle
/// list. `lk_ar_abs` always equals ∏|det(I−Sᵢ)|.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowDescriptor {
    attractor: KnotType,
    repeller: KnotType,
    repeller_is_meridian_of_attractor: bool,
    repeller_disk_condition: bool,
    saddles: Vec<SaddleWitness>,
    lk_ar_abs: BigUint,
}

impl FlowDescriptor {
    /// Builds a descriptor, recomputing the linking number from the
    /// saddles. A single explicit saddle must yield a symmetric
    /// det(I−L_a); the simple-flow Alexander polynomial demands it.
    pub fn new(
        attractor: KnotType,
        repeller: KnotType,
        repeller_is_meridian_of_attractor: bool,
        repeller_disk_condition: bool,
        mut saddles: Vec<SaddleWitness>,
    ) -> Result<Self, ComposeError> {
        if let [SaddleWitness::Explicit(data)] = saddles.as_slice() {
            let det = data.l_attractor().det_i_minus();
            if !det.is_symmetric() {
                return Err(ComposeError::AsymmetricSimpleFlow {
                    det: det.to_string(),
                });
            }
        }
        saddles.sort_by_key(|s| s.sort_key());
        let lk_ar_abs = saddles.iter().map(|s| s.det_i_minus_s_abs()).product();
        Ok(Self {
            attractor,
            repeller,
            repeller_is_meridian_of_attractor,
            repeller_disk_condition,
            saddles,
            lk_ar_abs,
        })
    }

    pub fn attractor(&self) -> &KnotType {
        &self.attractor
    }

    pub fn repeller(&self) -> &KnotType {
        &self.repeller
    }

    pub fn repeller_is_meridian_of_attractor(&self) -> bool {
        self.repeller_is_meridian_of_attractor
    }

    pub fn repeller_disk_condition(&self) -> bool {
        self.repeller_disk_condition
    }

    pub fn saddles(&self) -> &[SaddleWitness] {
        &self.saddles
    }

    pub fn lk_ar_abs(&self) -> &BigUint {
        &self.lk_ar_abs
    }
}

impl fmt::Display for FlowDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "flow(attractor = {}, repeller = {}, saddles = {}, |lk| = {})",
            self.attractor,
            self.repeller,
            self.saddles.len(),
            self.lk_ar_abs
        )
    }
}

fn check_clause2(f: &FlowDescriptor, flow: usize) -> Result<(), ComposeError> {
    if f.repeller.is_unknot() && f.repeller_is_meridian_of_attractor {
        Ok(())
    } else {
        Err(ComposeError::RepellerNotUnknottedMeridian { flow })
    }
}

fn check_clause3(f: &FlowDescriptor, flow: usize) -> Result<(), ComposeError> {
    if f.repeller_disk_condition {
        Ok(())
    } else {
        Err(ComposeError::DiskConditionRequired { flow })
    }
}

/// The connected-sum move: from flows with attractors k₁ and k₂ build a
/// flow with attractor k₁ # k₂ and an unknotted meridianal repeller.
/// Requires clauses (2) and (3) on both inputs.
pub fn compose_sum(f1: &FlowDescriptor, f2: &FlowDescriptor) -> Result<FlowDescriptor, ComposeError> {
    for (i, f) in [(1usize, f1), (2, f2)] {
        check_clause2(f, i)?;
        check_clause3(f, i)?;
    }
    let mut saddles = f1.saddles.clone();
    saddles.extend(f2.saddles.iter().cloned());
    FlowDescriptor::new(
        f1.attractor.connected_sum(&f2.attractor),
        KnotType::unknot(),
        true,
        true,
        saddles,
    )
}

/// The split move: attractor k₁, repeller k₂, linking number one, each
/// placed in a solid torus whose core is a meridian of the other.
/// Requires clause (2) on both inputs; clause (3) is not needed.
pub fn compose_split(
    f1: &FlowDescriptor,
    f2: &FlowDescriptor,
) -> Result<FlowDescriptor, ComposeError> {
    check_clause2(f1, 1)?;
    check_clause2(f2, 2)?;
    let mut saddles = f1.saddles.clone();
    saddles.extend(f2.saddles.iter().cloned());
    FlowDescriptor::new(
        f1.attractor.clone(),
        f2.attractor.clone(),
        true,
        false,
        saddles,
    )
}

/// A simple flow with attractor k and a repeller that is an unknotted
/// meridian of k linking no saddle orbit (all L_r exponents zero). The
/// unknot and trefoil get explicit Lorenz linking matrices; any other
/// knot gets an opaque witness carrying Δ_a = Δ(k) when a formula
/// exists.
pub fn realize_any_knot(k: &KnotType) -> FlowDescriptor {
    let witness = if k.is_unknot() {
        SaddleWitness::Explicit(SaddleData::lorenz(0))
    } else if k.as_single_torus() == Some((2, 3)) {
        SaddleWitness::Explicit(SaddleData::lorenz(1))
    } else {
        SaddleWitness::Opaque {
            det_abs: BigUint::from(1u32),
            delta_attractor: k.alexander().ok(),
            delta_repeller: LaurentPoly::one(),
        }
    };
    FlowDescriptor::new(k.clone(), KnotType::unknot(), true, true, vec![witness])
        .expect("witnesses constructed here are consistent")
}

/// ∏ᵢ det(I − L_aᵢ) over the saddles, normalized; for a simple flow this
/// is the attractor's Alexander polynomial. The empty product is 1.
pub fn alexander_of_flow(f: &FlowDescriptor) -> Result<LaurentPoly, ComposeError> {
    let mut acc = LaurentPoly::one();
    for s in &f.saddles {
        let delta = s
            .delta_attractor()
            .ok_or_else(|| ComposeError::NoAlexanderWitness(f.attractor.to_string()))?;
        acc = &acc * &delta;
    }
    Ok(acc.normalized())
}
