//! Franks' determinant formulas for simple Smale flows.
//!
//! A basic saddle set contributes a structure matrix S and, for each of
//! the attracting and repelling orbits, a linking matrix L with entries
//! S_ij·t^q. Then |lk(a,r)| = ∏|det(I−Sᵢ)| over the saddle sets, and for
//! a simple flow Δ_a(t) = det(I−L_a) and Δ_r(t) = det(I−L_r) up to units.

use num_bigint::BigUint;
use num_traits::Signed;
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentMatrix, LaurentPoly};
use crate::symbolic::{IncidenceMatrix, StructureMatrix, SymbolicError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FranksError {
    #[error("exponent matrix size {got} does not match structure matrix size {want}")]
    ExponentSizeMismatch { got: usize, want: usize },
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(
        "det(I-L) = {det} is not symmetric in t; a simple flow's Alexander polynomial must be"
    )]
    AsymmetricAlexander { det: String },
}

/// Structure matrix with each nonzero entry carrying the linking number
/// of its connecting loop with a reference orbit: L_ij = S_ij·t^{q_ij}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix {
    structure: StructureMatrix,
    exponents: Vec<i64>,
}

impl LinkingMatrix {
    /// Exponents are given row-major; entries where S_ij = 0 are ignored
    /// and stored as 0.
    pub fn new(structure: StructureMatrix, exponents: Vec<Vec<i64>>) -> Result<Self, FranksError> {
        let n = structure.size();
        if exponents.len() != n || exponents.iter().any(|r| r.len() != n) {
            return Err(FranksError::ExponentSizeMismatch {
                got: exponents.len(),
                want: n,
            });
        }
        let flat = (0..n)
            .flat_map(|i| {
                let structure = &structure;
                let row = &exponents[i];
                (0..n).map(move |j| {
                    if structure.sign(i, j) == 0 {
                        0
                    } else {
                        row[j]
                    }
                })
            })
            .collect();
        Ok(Self {
            structure,
            exponents: flat,
        })
    }

    /// Zero-exponent linking matrix: L = S, for a reference orbit that
    /// links none of the connecting loops.
    pub fn unlinked(structure: StructureMatrix) -> Self {
        let n = structure.size();
        Self {
            structure,
            exponents: vec![0; n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.structure.size()
    }

    pub fn structure(&self) -> &StructureMatrix {
        &self.structure
    }

    pub fn exponent(&self, i: usize, j: usize) -> i64 {
        self.exponents[i * self.size() + j]
    }

    pub fn exponent_rows(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.exponent(i, j)).collect())
            .collect()
    }

    pub fn to_laurent(&self) -> LaurentMatrix {
        let n = self.size();
        let entries = (0..n)
            .flat_map(|i| {
                (0..n).map(move |j| match self.structure.sign(i, j) {
                    0 => LaurentPoly::zero(),
                    s => LaurentPoly::term(s as i64, self.exponent(i, j)),
                })
            })
            .collect();
        LaurentMatrix::new(n, n, entries).expect("square by construction")
    }

    /// det(I − L), the raw determinant before unit normalization.
    pub fn det_i_minus(&self) -> LaurentPoly {
        let n = self.size();
        LaurentMatrix::identity(n)
            .sub(&self.to_laurent())
            .expect("same size")
            .det()
            .expect("square")
    }
}

/// The [[t^q, t^q], [t^-q, t^-q]] linking matrix of the Lorenz template
/// with respect to an orbit the x-band loops link q times. The two rows
/// carry opposite exponent signs; with same-sign rows det(I−L) would not
/// be symmetric in t.
pub fn build_lorenz_linking_matrix(q: i64) -> LinkingMatrix {
    LinkingMatrix::new(StructureMatrix::lorenz(), vec![vec![q, q], vec![-q, -q]])
        .expect("sizes match")
}

/// Incidence, structure, and the two linking matrices of one basic
/// saddle set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaddleData {
    incidence: IncidenceMatrix,
    structure: StructureMatrix,
    l_attractor: LinkingMatrix,
    l_repeller: LinkingMatrix,
}

impl SaddleData {
    pub fn new(
        structure: StructureMatrix,
        l_attractor: LinkingMatrix,
        l_repeller: LinkingMatrix,
    ) -> Result<Self, FranksError> {
        for l in [&l_attractor, &l_repeller] {
            if l.structure() != &structure {
                return Err(FranksError::ExponentSizeMismatch {
                    got: l.size(),
                    want: structure.size(),
                });
            }
        }
        Ok(Self {
            incidence: structure.incidence().clone(),
            structure,
            l_attractor,
            l_repeller,
        })
    }

    /// Lorenz saddle whose attractor linking matrix follows the q-pattern
    /// and whose repeller links no connecting loops.
    pub fn lorenz(q: i64) -> Self {
        Self::new(
            StructureMatrix::lorenz(),
            build_lorenz_linking_matrix(q),
            LinkingMatrix::unlinked(StructureMatrix::lorenz()),
        )
        .expect("consistent by construction")
    }

    pub fn incidence(&self) -> &IncidenceMatrix {
        &self.incidence
    }

    pub fn structure(&self) -> &StructureMatrix {
        &self.structure
    }

    pub fn l_attractor(&self) -> &LinkingMatrix {
        &self.l_attractor
    }

    pub fn l_repeller(&self) -> &LinkingMatrix {
        &self.l_repeller
    }

    /// |det(I − S)| for this saddle.
    pub fn det_i_minus_s_abs(&self) -> BigUint {
        LinkingMatrix::unlinked(self.structure.clone())
            .det_i_minus()
            .as_constant()
            .expect("constant entries give a constant determinant")
            .abs()
            .to_biguint()
            .expect("absolute value")
    }
}

/// |lk(a,r)| = ∏ᵢ |det(I − Sᵢ)| over all basic saddle sets of a flow
/// with one attracting and one repelling closed orbit. The empty product
/// is 1: a two-orbit Morse-Smale flow forms a Hopf link.
pub fn linking_attractor_repeller<'a, I>(saddles: I) -> BigUint
where
    I: IntoIterator<Item = &'a SaddleData>,
{
    saddles
        .into_iter()
        .map(|s| s.det_i_minus_s_abs())
        .product()
}

/// Δ = det(I − L) in canonical normalized form; compare results with
/// `LaurentPoly::equal_up_to_units`.
pub fn alexander_from_linking_matrix(l: &LinkingMatrix) -> LaurentPoly {
    l.det_i_minus().normalized()
}

/// Rejects a user-supplied simple-flow linking matrix whose det(I−L)
/// fails the symmetry test; the Alexander polynomial of a knot is always
/// symmetric in t up to units.
pub fn validate_simple_flow_linking_matrix(l: &LinkingMatrix) -> Result<LaurentPoly, FranksError> {
    let det = l.det_i_minus();
    if det.is_symmetric() {
        Ok(det.normalized())
    } else {
        Err(FranksError::AsymmetricAlexander {
            det: det.to_string(),
        })
    }
}
