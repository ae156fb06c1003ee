//! Finitely presented groups, Fox free differential calculus, and
//! Alexander polynomials from deficiency-one presentations.
//!
//! A relator w in generators x₁,…,x_g is differentiated by the Fox rules
//! ∂(uv)/∂x = ∂u/∂x + u·∂v/∂x, ∂x/∂x = 1, ∂x⁻¹/∂x = −x⁻¹, and evaluated
//! under the abelianization φ sending each generator to a power of t.
//! The Alexander polynomial is det of the Fox matrix with one column
//! deleted, rescaled by (t−1)/(φ(xⱼ)−1); the result is independent of
//! the deleted column up to units.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentMatrix, LaurentPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator index {0} out of range")]
    GeneratorIndex(usize),
    #[error("presentation must have deficiency one: {generators} generators need {} relators, got {relators}", .generators - 1)]
    WrongDeficiency { generators: usize, relators: usize },
    #[error("abelianization map has {got} exponents for {want} generators")]
    AbelianizationSize { got: usize, want: usize },
    #[error("abelianization is inconsistent: relator {relator:?} maps to t^{exponent} != 1")]
    InconsistentAbelianization { relator: String, exponent: i64 },
    #[error("every generator abelianizes to 1; no column can be deleted")]
    NoSuitableColumn,
    #[error("H1 of the presentation is not infinite cyclic")]
    NotInfiniteCyclic,
    #[error("cannot parse presentation {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("Alexander division failed (invalid presentation/abelianization pair): {0}")]
    Division(#[from] LaurentError),
}

/// A freely reduced word in a free group; letters are (generator index,
/// exponent ±1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    letters: Vec<(usize, i8)>,
}

impl GroupWord {
    /// Builds a word, cancelling adjacent inverse pairs.
    pub fn new<I: IntoIterator<Item = (usize, i8)>>(letters: I) -> Self {
        let mut reduced: Vec<(usize, i8)> = Vec::new();
        for (g, e) in letters {
            debug_assert!(e == 1 || e == -1);
            if let Some(&(tg, te)) = reduced.last() {
                if tg == g && te == -e {
                    reduced.pop();
                    continue;
                }
            }
            reduced.push((g, e));
        }
        Self { letters: reduced }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// g^n as a word, n may be negative.
    pub fn power(gen: usize, n: i64) -> Self {
        let sign = if n < 0 { -1i8 } else { 1 };
        Self::new((0..n.unsigned_abs()).map(|_| (gen, sign)))
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self::new(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.letters.iter().rev().map(|&(g, e)| (g, -e)))
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Net exponent of each generator, for abelianization.
    pub fn exponent_sums(&self, num_generators: usize) -> Vec<i64> {
        let mut sums = vec![0i64; num_generators];
        for &(g, e) in &self.letters {
            sums[g] += e as i64;
        }
        sums
    }

    fn display_with(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|&(g, e)| {
                let name = names.get(g).map(String::as_str).unwrap_or("?");
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}'")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Generator ↦ t^{aᵢ}; the infinite-cyclic quotient used to evaluate Fox
/// derivatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizationMap {
    exponents: Vec<i64>,
}

impl AbelianizationMap {
    pub fn new(exponents: Vec<i64>) -> Self {
        Self { exponents }
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn exponent_of(&self, gen: usize) -> Result<i64, GroupError> {
        self.exponents
            .get(gen)
            .copied()
            .ok_or(GroupError::GeneratorIndex(gen))
    }

    /// φ(w) = t^(Σ aᵢ·eᵢ).
    pub fn image_exponent(&self, w: &GroupWord) -> i64 {
        w.letters()
            .iter()
            .map(|&(g, e)| self.exponents.get(g).copied().unwrap_or(0) * e as i64)
            .sum()
    }
}

/// A group given by generators and relators (each relator = identity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<GroupWord>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<GroupWord>) -> Result<Self, GroupError> {
        for r in &relators {
            for &(g, _) in r.letters() {
                if g >= generators.len() {
                    return Err(GroupError::GeneratorIndex(g));
                }
            }
        }
        Ok(Self { generators, relators })
    }

    /// The trefoil group ⟨x, y | xyx = yxy⟩.
    pub fn trefoil() -> Self {
        "<x, y | x y x = y x y>".parse().unwrap()
    }

    /// ⟨r, y | y' r^p y' = r^p y' r^p⟩: the fundamental group of the
    /// template neighborhood union a tubular neighborhood, parameterized
    /// by the cabling exponent p.
    pub fn template_union(p: i64) -> Self {
        let r = 0usize;
        let y = 1usize;
        let yi = GroupWord::new([(y, -1i8)]);
        let rp = GroupWord::power(r, p);
        let lhs = yi.concat(&rp).concat(&yi);
        let rhs = rp.concat(&yi).concat(&rp);
        Self::new(
            vec!["r".into(), "y".into()],
            vec![lhs.concat(&rhs.inverse())],
        )
        .unwrap()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[GroupWord] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Result<usize, GroupError> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))
    }

    fn check_abelianization(&self, phi: &AbelianizationMap) -> Result<(), GroupError> {
        if phi.exponents().len() != self.generators.len() {
            return Err(GroupError::AbelianizationSize {
                got: phi.exponents().len(),
                want: self.generators.len(),
            });
        }
        for r in &self.relators {
            let e = phi.image_exponent(r);
            if e != 0 {
                return Err(GroupError::InconsistentAbelianization {
                    relator: r.display_with(&self.generators),
                    exponent: e,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | ", self.generators.join(", "))?;
        let relators = self
            .relators
            .iter()
            .map(|r| r.display_with(&self.generators))
            .collect::<Vec<_>>()
            .join(", ");
        write!(f, "{relators}>")
    }
}

/// Presentation text syntax: `<x, y | x y x = y x y>`. Letters are
/// whitespace-separated generator names with `'` or `^-1` (generally
/// `^n`) marking inverses and powers; relations `u = v` are stored as
/// the freely reduced relator u·v⁻¹; multiple relators are separated by
/// `,`.
impl std::str::FromStr for GroupPresentation {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| GroupError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut body = s.trim();
        if let Some(stripped) = body.strip_prefix('<') {
            body = stripped.strip_suffix('>').ok_or_else(|| err("missing closing '>'"))?;
        }
        let (gen_part, rel_part) = match body.split_once('|') {
            Some((g, r)) => (g, r),
            None => (body, ""),
        };
        let generators: Vec<String> = gen_part
            .split([',', ' ', '\t'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect();
        if generators.is_empty() {
            return Err(err("no generators"));
        }
        for name in &generators {
            if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(err(&format!("bad generator name {name:?}")));
            }
        }

        let parse_word = |text: &str| -> Result<GroupWord, GroupError> {
            let mut word = GroupWord::identity();
            for token in text.split_whitespace() {
                let (name, power) = if let Some(base) = token.strip_suffix('\'') {
                    (base, -1i64)
                } else if let Some((base, exp)) = token.split_once('^') {
                    let exp: i64 = exp
                        .parse()
                        .map_err(|_| err(&format!("bad exponent in {token:?}")))?;
                    (base, exp)
                } else {
                    (token, 1)
                };
                let gen = generators
                    .iter()
                    .position(|g| g == name)
                    .ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))?;
                word = word.concat(&GroupWord::power(gen, power));
            }
            Ok(word)
        };

        let mut relators = Vec::new();
        for chunk in rel_part.split(',') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let relator = match chunk.split_once('=') {
                Some((lhs, rhs)) => parse_word(lhs)?.concat(&parse_word(rhs)?.inverse()),
                None => parse_word(chunk)?,
            };
            relators.push(relator);
        }
        GroupPresentation::new(generators, relators)
    }
}

/// Fox derivative ∂w/∂x_gen evaluated under φ. Maintains φ(prefix) as a
/// running power of t.
pub fn fox_derivative(
    w: &GroupWord,
    gen: usize,
    phi: &AbelianizationMap,
) -> Result<LaurentPoly, GroupError> {
    let mut result = LaurentPoly::zero();
    let mut prefix_exp = 0i64;
    for &(g, e) in w.letters() {
        let a_g = phi.exponent_of(g)?;
        if e == 1 {
            if g == gen {
                result = &result + &LaurentPoly::monomial(prefix_exp);
            }
            prefix_exp += a_g;
        } else {
            prefix_exp -= a_g;
            if g == gen {
                result = &result - &LaurentPoly::monomial(prefix_exp);
            }
        }
    }
    Ok(result)
}

/// The (g−1)×g Fox matrix M with M_ij = φ(∂rᵢ/∂xⱼ).
fn alexander_matrix(
    p: &GroupPresentation,
    phi: &AbelianizationMap,
) -> Result<LaurentMatrix, GroupError> {
    let g = p.generators().len();
    let mut entries = Vec::with_capacity(p.relators().len() * g);
    for r in p.relators() {
        for j in 0..g {
            entries.push(fox_derivative(r, j, phi)?);
        }
    }
    Ok(LaurentMatrix::new(p.relators().len(), g, entries)?)
}

fn alexander_via_column(
    m: &LaurentMatrix,
    phi: &AbelianizationMap,
    col: usize,
) -> Result<LaurentPoly, GroupError> {
    let a_j = phi.exponent_of(col)?;
    if a_j == 0 {
        return Err(GroupError::NoSuitableColumn);
    }
    let det = m.delete_col(col).det()?;
    let t_minus_1 = &LaurentPoly::monomial(1) - &LaurentPoly::one();
    let denom = &LaurentPoly::monomial(a_j) - &LaurentPoly::one();
    Ok((&det * &t_minus_1).exact_div(&denom)?)
}

/// Alexander polynomial of a deficiency-one presentation, normalized;
/// compare results with `LaurentPoly::equal_up_to_units`. The choice of
/// deleted column does not matter up to units.
pub fn alexander_from_presentation(
    p: &GroupPresentation,
    phi: &AbelianizationMap,
) -> Result<LaurentPoly, GroupError> {
    let g = p.generators().len();
    if p.relators().len() + 1 != g {
        return Err(GroupError::WrongDeficiency {
            generators: g,
            relators: p.relators().len(),
        });
    }
    p.check_abelianization(phi)?;
    if g == 1 {
        // Free group of rank one: infinite cyclic, the unknot group.
        return Ok(LaurentPoly::one());
    }
    let m = alexander_matrix(p, phi)?;
    let col = (0..g)
        .find(|&j| phi.exponents()[j] != 0)
        .ok_or(GroupError::NoSuitableColumn)?;
    Ok(alexander_via_column(&m, phi, col)?.normalized())
}

/// Same computation with an explicit deleted column; used to check
/// column-independence.
pub fn alexander_with_deleted_column(
    p: &GroupPresentation,
    phi: &AbelianizationMap,
    col: usize,
) -> Result<LaurentPoly, GroupError> {
    let g = p.generators().len();
    if p.relators().len() + 1 != g {
        return Err(GroupError::WrongDeficiency {
            generators: g,
            relators: p.relators().len(),
        });
    }
    p.check_abelianization(phi)?;
    if g == 1 {
        return Ok(LaurentPoly::one());
    }
    let m = alexander_matrix(p, phi)?;
    Ok(alexander_via_column(&m, phi, col)?.normalized())
}

fn int_det(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let entries = rows
        .iter()
        .flat_map(|r| r.iter().map(|&v| LaurentPoly::term(v, 0)))
        .collect();
    LaurentMatrix::new(n, n, entries)
        .expect("square")
        .det()
        .expect("square")
        .as_constant()
        .expect("constant determinant")
}

/// Solves the relator exponent-sum equations for a surjection onto the
/// infinite cyclic group. Errors unless H₁ of the presentation is
/// infinite cyclic. For ⟨r, y | y'r^p y' = r^p y'r^p⟩ this yields
/// φ(r) = t, φ(y) = t^{−p}.
pub fn solve_rank1_abelianization(
    p: &GroupPresentation,
) -> Result<AbelianizationMap, GroupError> {
    let g = p.generators().len();
    if p.relators().len() + 1 != g {
        return Err(GroupError::WrongDeficiency {
            generators: g,
            relators: p.relators().len(),
        });
    }
    if g == 1 {
        return Ok(AbelianizationMap::new(vec![1]));
    }
    let rows: Vec<Vec<i64>> = p.relators().iter().map(|r| r.exponent_sums(g)).collect();
    // Kernel vector of the (g-1) x g exponent matrix from signed maximal
    // minors; H1 is infinite cyclic iff the minors are coprime.
    let mut minors = Vec::with_capacity(g);
    for j in 0..g {
        let sub: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let d = int_det(&sub);
        minors.push(if j % 2 == 0 { d } else { -d });
    }
    if minors.iter().all(|m| m.is_zero()) {
        return Err(GroupError::NotInfiniteCyclic);
    }
    let gcd = minors
        .iter()
        .fold(BigInt::zero(), |acc, m| acc.gcd(&m.abs()));
    if gcd != BigInt::from(1) {
        return Err(GroupError::NotInfiniteCyclic);
    }
    let mut exponents: Vec<i64> = Vec::with_capacity(g);
    for m in &minors {
        exponents.push(i64::try_from(m).map_err(|_| GroupError::NotInfiniteCyclic)?);
    }
    if let Some(first) = exponents.iter().find(|&&e| e != 0) {
        if *first < 0 {
            for e in &mut exponents {
                *e = -*e;
            }
        }
    }
    let phi = AbelianizationMap::new(exponents);
    p.check_abelianization(&phi)?;
    Ok(phi)
}

/// One-directional unknot test via the Alexander polynomial: the knot
/// group of the unknot is infinite cyclic, so Δ ≢ 1 rules the unknot
/// out. Δ ≐ 1 decides nothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnknotCertificate {
    NotUnknot,
    Inconclusive,
}

pub fn unknot_certificate(
    p: &GroupPresentation,
    phi: &AbelianizationMap,
) -> Result<UnknotCertificate, GroupError> {
    let delta = alexander_from_presentation(p, phi)?;
    if delta.equal_up_to_units(&LaurentPoly::one()) {
        Ok(UnknotCertificate::Inconclusive)
    } else {
        Ok(UnknotCertificate::NotUnknot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn phi_all_t(g: usize) -> AbelianizationMap {
        AbelianizationMap::new(vec![1; g])
    }

    #[test]
    fn free_reduction() {
        let w = GroupWord::new([(0, 1), (1, 1), (1, -1), (0, -1), (0, 1)]);
        assert_eq!(w, GroupWord::new([(0, 1)]));
        assert!(GroupWord::new([(0, 1), (0, -1)]).is_empty());
    }

    #[test]
    fn fox_rules() {
        let phi = phi_all_t(2);
        // d(xyx)/dx = 1 + t^2
        let xyx = GroupWord::new([(0, 1), (1, 1), (0, 1)]);
        assert_eq!(fox_derivative(&xyx, 0, &phi).unwrap(), poly("1 + t^2"));
        // d(x^p)/dx = 1 + t + ... + t^(p-1)
        for p in 1..=5 {
            let expected = LaurentPoly::from_terms((0..p).map(|e| (e, 1)));
            assert_eq!(
                fox_derivative(&GroupWord::power(0, p), 0, &phi).unwrap(),
                expected
            );
        }
        // d(y)/dx = 0
        let y = GroupWord::new([(1, 1)]);
        assert!(fox_derivative(&y, 0, &phi).unwrap().is_zero());
        // d(x^-1)/dx = -t^-1
        let xi = GroupWord::new([(0, -1)]);
        assert_eq!(fox_derivative(&xi, 0, &phi).unwrap(), poly("-t^-1"));
    }

    #[test]
    fn trefoil_alexander() {
        let p = GroupPresentation::trefoil();
        let phi = solve_rank1_abelianization(&p).unwrap();
        assert_eq!(phi.exponents(), &[1, 1]);
        let delta = alexander_from_presentation(&p, &phi).unwrap();
        assert!(delta.equal_up_to_units(&poly("t^2 - t + 1")), "got {delta}");
    }

    #[test]
    fn template_union_presentation_lemma_values() {
        for p in 1..=5i64 {
            let pres = GroupPresentation::template_union(p);
            let phi = solve_rank1_abelianization(&pres).unwrap();
            assert_eq!(phi.exponents(), &[1, -p]);
            let delta = alexander_from_presentation(&pres, &phi).unwrap();
            let expected = &(&LaurentPoly::monomial(p) - &LaurentPoly::one())
                + &LaurentPoly::monomial(-p);
            assert!(
                delta.equal_up_to_units(&expected),
                "p={p}: got {delta}, want {expected}"
            );
        }
    }

    #[test]
    fn column_independence() {
        for pres in [
            GroupPresentation::trefoil(),
            GroupPresentation::template_union(2),
            GroupPresentation::template_union(3),
        ] {
            let phi = solve_rank1_abelianization(&pres).unwrap();
            let d0 = alexander_with_deleted_column(&pres, &phi, 0).unwrap();
            let d1 = alexander_with_deleted_column(&pres, &phi, 1).unwrap();
            assert!(d0.equal_up_to_units(&d1), "{pres}: {d0} vs {d1}");
        }
    }

    #[test]
    fn rank_one_free_group_is_unknot() {
        let p: GroupPresentation = "<x | >".parse().unwrap();
        let phi = solve_rank1_abelianization(&p).unwrap();
        let delta = alexander_from_presentation(&p, &phi).unwrap();
        assert!(delta.equal_up_to_units(&LaurentPoly::one()));
        assert_eq!(
            unknot_certificate(&p, &phi).unwrap(),
            UnknotCertificate::Inconclusive
        );
    }

    #[test]
    fn trefoil_not_unknot() {
        let p = GroupPresentation::trefoil();
        let phi = solve_rank1_abelianization(&p).unwrap();
        assert_eq!(unknot_certificate(&p, &phi).unwrap(), UnknotCertificate::NotUnknot);
        let lemma = GroupPresentation::template_union(1);
        let phi = solve_rank1_abelianization(&lemma).unwrap();
        assert_eq!(
            unknot_certificate(&lemma, &phi).unwrap(),
            UnknotCertificate::NotUnknot
        );
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let p: GroupPresentation = "<x, y | x y x = y x y>".parse().unwrap();
        assert_eq!(p.generators(), &["x", "y"]);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.to_string(), "<x, y | x y x y' x' y'>");
        // `'` and `^-1` both mean inverse.
        let q: GroupPresentation = "<x, y | x y x y^-1 x^-1 y^-1>".parse().unwrap();
        assert_eq!(p, q);
        assert!(matches!(
            "<x | z>".parse::<GroupPresentation>(),
            Err(GroupError::UnknownGenerator(_))
        ));
        assert!("<x, y | x y x = y x y".parse::<GroupPresentation>().is_err());
    }

    #[test]
    fn wrong_deficiency_rejected() {
        let p: GroupPresentation = "<x, y | x = y, x y = y x>".parse().unwrap();
        assert!(matches!(
            alexander_from_presentation(&p, &phi_all_t(2)),
            Err(GroupError::WrongDeficiency { .. })
        ));
    }

    #[test]
    fn inconsistent_abelianization_rejected() {
        let p = GroupPresentation::trefoil();
        let bad = AbelianizationMap::new(vec![1, 2]);
        assert!(matches!(
            alexander_from_presentation(&p, &bad),
            Err(GroupError::InconsistentAbelianization { .. })
        ));
    }

    #[test]
    fn torsion_h1_rejected() {
        // <x, y | x = y^-1, ...> style with torsion: <x, y | x^2 y^2>
        // has H1 = Z + Z/2? Exponent row (2, 2): gcd of minors is 2.
        let p: GroupPresentation = "<x, y | x^2 y^2>".parse().unwrap();
        assert_eq!(
            solve_rank1_abelianization(&p),
            Err(GroupError::NotInfiniteCyclic)
        );
    }

    #[test]
    fn fundamental_fox_identity() {
        // sum_j d(w)/dx_j * (phi(x_j) - 1) = phi(w) - 1
        let phi = AbelianizationMap::new(vec![1, -2, 3]);
        let words = [
            GroupWord::new([(0, 1), (1, -1), (2, 1), (0, 1)]),
            GroupWord::power(1, 4),
            GroupWord::new([(2, -1), (2, -1), (0, 1), (1, 1)]),
            GroupWord::identity(),
        ];
        for w in &words {
            let mut lhs = LaurentPoly::zero();
            for j in 0..3 {
                let factor = &LaurentPoly::monomial(phi.exponents()[j]) - &LaurentPoly::one();
                lhs = &lhs + &(&fox_derivative(w, j, &phi).unwrap() * &factor);
            }
            let rhs =
                &LaurentPoly::monomial(phi.image_exponent(w)) - &LaurentPoly::one();
            assert_eq!(lhs, rhs, "word {w:?}");
        }
    }
}
