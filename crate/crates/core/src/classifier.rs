//! Decision procedure for which Lorenz-Smale flow configurations are
//! realizable in the 3-sphere.
//!
//! The attractor-repeller link is either a Hopf link or a trefoil with
//! meridian. In the Hopf case the saddle template is standardly
//! embedded, or has one band with n full twists (unknotted, unlinked),
//! or has one band forming a (p,q) torus knot with twist exactly p+q−1;
//! the other band is always unknotted, untwisted, and unlinked. In the
//! trefoil case both bands are standard meridians. Everything else is
//! rejected with the clause that fails.

use std::fmt;

use num_bigint::BigUint;

use crate::franks::{alexander_from_linking_matrix, build_lorenz_linking_matrix, SaddleData};
use crate::knot::KnotType;
use crate::laurent::LaurentPoly;

/// Attractor-repeller link type named in a proposal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArLink {
    Hopf,
    TrefoilMeridian,
    Other(String),
}

/// An unvalidated Lorenz-Smale configuration: core knot type and twist
/// count of each band, whether the bands link, and the proposed
/// attractor-repeller link. Proposals may be invalid; `validate` decides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigProposal {
    pub x_core: KnotType,
    pub y_core: KnotType,
    pub x_twist: i64,
    pub y_twist: i64,
    pub bands_linked: bool,
    pub ar_link: ArLink,
    /// Whether the two inessential band cores bound an annulus; only
    /// meaningful for the standard Hopf configuration.
    pub concentric: bool,
}

impl ConfigProposal {
    /// Standardly embedded template with a Hopf attractor-repeller pair.
    pub fn standard() -> Self {
        Self {
            x_core: KnotType::unknot(),
            y_core: KnotType::unknot(),
            x_twist: 0,
            y_twist: 0,
            bands_linked: false,
            ar_link: ArLink::Hopf,
            concentric: false,
        }
    }
}

/// A validated configuration: one variant per clause of the
/// classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LorenzSmaleConfig {
    HopfStandard { concentric: bool },
    HopfTwisted { full_twists: i64 },
    HopfTorusCable { p: u64, q: u64 },
    TrefoilMeridian,
}

impl LorenzSmaleConfig {
    pub fn variant_name(&self) -> &'static str {
        match self {
            Self::HopfStandard { .. } => "Hopf-Standard",
            Self::HopfTwisted { .. } => "Hopf-Twisted",
            Self::HopfTorusCable { .. } => "Hopf-TorusCable",
            Self::TrefoilMeridian => "TrefoilMeridian",
        }
    }
}

impl fmt::Display for LorenzSmaleConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::HopfStandard { concentric } => {
                write!(f, "Hopf-Standard(concentric={concentric})")
            }
            Self::HopfTwisted { full_twists } => write!(f, "Hopf-Twisted({full_twists})"),
            Self::HopfTorusCable { p, q } => write!(f, "Hopf-TorusCable({p},{q})"),
            Self::TrefoilMeridian => write!(f, "TrefoilMeridian"),
        }
    }
}

/// Why a proposal fails, phrased as the violated clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    NotHopfOrTrefoilMeridian,
    BandsLinked,
    TrefoilCaseNonStandardBands,
    BothBandsKnotted,
    OtherBandNotStandard,
    TwistMismatch { p: u64, q: u64, expected: i64, got: i64 },
    KnottedBandNotTorus,
    FixedPointNonStandard,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotHopfOrTrefoilMeridian => {
                write!(f, "a u r link type is not Hopf or trefoil-and-meridian")
            }
            Self::BandsLinked => write!(f, "the bands must be unlinked"),
            Self::TrefoilCaseNonStandardBands => write!(
                f,
                "trefoil-and-meridian case requires both bands unknotted and untwisted"
            ),
            Self::BothBandsKnotted => write!(f, "other band must be unknotted"),
            Self::OtherBandNotStandard => {
                write!(f, "other band must be unknotted and untwisted")
            }
            Self::TwistMismatch { p, q, expected, got } => write!(
                f,
                "a ({p},{q}) torus-knot band must have twist p+q-1 = {expected}, got {got}"
            ),
            Self::KnottedBandNotTorus => {
                write!(f, "a knotted band must be a torus knot")
            }
            Self::FixedPointNonStandard => write!(
                f,
                "fixed-point flows admit only the standardly embedded Lorenz template"
            ),
        }
    }
}

/// Accepts exactly the realizable families; rejection names the clause
/// that fails. Rejection is a value, not an error.
pub fn validate(p: &ConfigProposal) -> Result<LorenzSmaleConfig, Rejection> {
    match &p.ar_link {
        ArLink::Other(_) => return Err(Rejection::NotHopfOrTrefoilMeridian),
        ArLink::Hopf | ArLink::TrefoilMeridian => {}
    }
    if p.bands_linked {
        return Err(Rejection::BandsLinked);
    }
    let x_standard = p.x_core.is_unknot() && p.x_twist == 0;
    let y_standard = p.y_core.is_unknot() && p.y_twist == 0;
    if p.ar_link == ArLink::TrefoilMeridian {
        return if x_standard && y_standard {
            Ok(LorenzSmaleConfig::TrefoilMeridian)
        } else {
            Err(Rejection::TrefoilCaseNonStandardBands)
        };
    }
    if x_standard && y_standard {
        return Ok(LorenzSmaleConfig::HopfStandard { concentric: p.concentric });
    }
    if !p.x_core.is_unknot() && !p.y_core.is_unknot() {
        return Err(Rejection::BothBandsKnotted);
    }
    if !x_standard && !y_standard {
        return Err(Rejection::OtherBandNotStandard);
    }
    let (core, twist) = if x_standard {
        (&p.y_core, p.y_twist)
    } else {
        (&p.x_core, p.x_twist)
    };
    if core.is_unknot() {
        // Unknotted band with n full twists; covers the (1,q)/(q,1)
        // unknots, which normalize into this family.
        return Ok(LorenzSmaleConfig::HopfTwisted { full_twists: twist });
    }
    match core.as_single_torus() {
        Some((tp, tq)) => {
            let expected = tp as i64 + tq as i64 - 1;
            if twist == expected {
                Ok(LorenzSmaleConfig::HopfTorusCable { p: tp, q: tq })
            } else {
                Err(Rejection::TwistMismatch {
                    p: tp,
                    q: tq,
                    expected,
                    got: twist,
                })
            }
        }
        None => Err(Rejection::KnottedBandNotTorus),
    }
}

/// Invariants forced by a validated configuration: the link type, the
/// absolute attractor-repeller linking number (always 1), and both
/// Alexander polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigInvariants {
    pub ar_link: ArLink,
    pub lk_abs: BigUint,
    pub delta_attractor: LaurentPoly,
    pub delta_repeller: LaurentPoly,
}

pub fn invariants_of(c: &LorenzSmaleConfig) -> ConfigInvariants {
    let one = LaurentPoly::one();
    match c {
        LorenzSmaleConfig::TrefoilMeridian => ConfigInvariants {
            ar_link: ArLink::TrefoilMeridian,
            lk_abs: BigUint::from(1u32),
            // q = 1 in the linking-matrix formula: the trefoil attractor.
            delta_attractor: alexander_from_linking_matrix(&build_lorenz_linking_matrix(1)),
            delta_repeller: one,
        },
        _ => ConfigInvariants {
            ar_link: ArLink::Hopf,
            lk_abs: BigUint::from(1u32),
            delta_attractor: one.clone(),
            delta_repeller: one,
        },
    }
}

/// The fixed-point corollary: with attracting and repelling fixed points
/// in place of closed orbits, only the standardly embedded template is
/// realizable.
pub fn fixed_point_variant(p: &ConfigProposal) -> Result<LorenzSmaleConfig, Rejection> {
    if p.bands_linked {
        return Err(Rejection::BandsLinked);
    }
    let x_standard = p.x_core.is_unknot() && p.x_twist == 0;
    let y_standard = p.y_core.is_unknot() && p.y_twist == 0;
    if x_standard && y_standard {
        Ok(LorenzSmaleConfig::HopfStandard { concentric: p.concentric })
    } else {
        Err(Rejection::FixedPointNonStandard)
    }
}

/// The single Lorenz saddle of a validated simple flow, for cross-checks
/// against the determinant formulas.
pub fn saddle_of(c: &LorenzSmaleConfig) -> SaddleData {
    match c {
        LorenzSmaleConfig::TrefoilMeridian => SaddleData::lorenz(1),
        _ => SaddleData::lorenz(0),
    }
}
