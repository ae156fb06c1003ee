//! Symbolic knot-type descriptors closed under connected sum.
//!
//! A knot type is a multiset of prime factors; the empty multiset is the
//! unknot, which is the unit for connected sum. Prime factors are torus
//! knots (with a handedness flag that polynomial operations ignore) or
//! opaque named primes. Alexander polynomials are available for torus
//! factors via Δ_{(p,q)} = (t^{pq}−1)(t−1)/((t^p−1)(t^q−1)) and multiply
//! under connected sums.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

use crate::laurent::LaurentPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KnotError {
    #[error("torus parameters ({p}, {q}) must be coprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("torus parameter must be nonzero")]
    ZeroParameter,
    #[error("no Alexander formula available for named prime {0:?}")]
    NoFormula(String),
    #[error("cannot parse knot expression {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A prime knot: a (p,q) torus knot with 2 ≤ p < q, or an opaque label.
/// `mirror` distinguishes a torus knot from its mirror image; every
/// polynomial operation ignores it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeKnot {
    Torus { p: u64, q: u64, mirror: bool },
    Named(String),
}

impl fmt::Display for PrimeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeKnot::Torus { p, q, mirror: false } => write!(f, "torus({p},{q})"),
            PrimeKnot::Torus { p, q, mirror: true } => write!(f, "torus({p},-{q})"),
            PrimeKnot::Named(label) => write!(f, "named({label})"),
        }
    }
}

/// A knot type as a canonically sorted multiset of prime factors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct KnotType {
    factors: Vec<PrimeKnot>,
}

impl KnotType {
    pub fn unknot() -> Self {
        Self::default()
    }

    /// Torus knot descriptor. Signs fold into the mirror flag; |p| or
    /// |q| equal to 1 normalizes to the unknot; (p,q) and (q,p) are the
    /// same knot.
    pub fn torus(p: i64, q: i64) -> Result<Self, KnotError> {
        if p == 0 || q == 0 {
            return Err(KnotError::ZeroParameter);
        }
        let (ap, aq) = (p.unsigned_abs(), q.unsigned_abs());
        if ap.gcd(&aq) != 1 {
            return Err(KnotError::NotCoprime { p, q });
        }
        if ap == 1 || aq == 1 {
            return Ok(Self::unknot());
        }
        let mirror = (p < 0) ^ (q < 0);
        let (lo, hi) = (ap.min(aq), ap.max(aq));
        Ok(Self {
            factors: vec![PrimeKnot::Torus { p: lo, q: hi, mirror }],
        })
    }

    pub fn trefoil() -> Self {
        Self::torus(2, 3).expect("coprime")
    }

    pub fn named(label: impl Into<String>) -> Self {
        Self {
            factors: vec![PrimeKnot::Named(label.into())],
        }
    }

    pub fn from_factors(factors: Vec<PrimeKnot>) -> Self {
        let mut factors = factors;
        factors.sort();
        Self { factors }
    }

    pub fn is_unknot(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[PrimeKnot] {
        &self.factors
    }

    /// If the type is a single torus prime, its (p, q).
    pub fn as_single_torus(&self) -> Option<(u64, u64)> {
        match self.factors.as_slice() {
            [PrimeKnot::Torus { p, q, .. }] => Some((*p, *q)),
            _ => None,
        }
    }

    /// Connected sum: multiset union of prime factors. Commutative and
    /// associative with the unknot as unit.
    pub fn connected_sum(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        factors.sort();
        Self { factors }
    }

    /// Alexander polynomial: product of the torus-factor closed forms.
    /// Errors on named factors, whose polynomial is unknown here.
    pub fn alexander(&self) -> Result<LaurentPoly, KnotError> {
        let mut acc = LaurentPoly::one();
        for factor in &self.factors {
            match factor {
                PrimeKnot::Torus { p, q, .. } => {
                    acc = &acc * &torus_alexander(*p, *q);
                }
                PrimeKnot::Named(label) => return Err(KnotError::NoFormula(label.clone())),
            }
        }
        Ok(acc)
    }
}

/// Δ_{(p,q)} = (t^{pq}−1)(t−1)/((t^p−1)(t^q−1)); exact division never
/// leaves a remainder for coprime p, q.
fn torus_alexander(p: u64, q: u64) -> LaurentPoly {
    let cyc = |n: u64| &LaurentPoly::monomial(n as i64) - &LaurentPoly::one();
    let numerator = &cyc(p * q) * &cyc(1);
    numerator
        .exact_div(&cyc(p))
        .and_then(|r| r.exact_div(&cyc(q)))
        .expect("torus Alexander division is exact for coprime p, q")
}

/// Knot text syntax: `unknot`, `torus(p,q)`, `named(label)`, joined with
/// `#`, e.g. `torus(2,3) # torus(2,3)`.
impl FromStr for KnotType {
    type Err = KnotError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| KnotError::Parse {
            input: s.to_string(),
            reason,
        };
        let mut result = KnotType::unknot();
        for part in s.split('#') {
            let part = part.trim();
            if part == "unknot" {
                continue;
            }
            if let Some(args) = part.strip_prefix("torus(").and_then(|r| r.strip_suffix(')')) {
                let (p, q) = args
                    .split_once(',')
                    .ok_or_else(|| err(format!("expected torus(p,q) in {part:?}")))?;
                let p: i64 = p.trim().parse().map_err(|_| err(format!("bad integer in {part:?}")))?;
                let q: i64 = q.trim().parse().map_err(|_| err(format!("bad integer in {part:?}")))?;
                result = result.connected_sum(&KnotType::torus(p, q)?);
            } else if let Some(label) =
                part.strip_prefix("named(").and_then(|r| r.strip_suffix(')'))
            {
                if label.is_empty() {
                    return Err(err("empty named label".to_string()));
                }
                result = result.connected_sum(&KnotType::named(label.trim()));
            } else {
                return Err(err(format!("unrecognized factor {part:?}")));
            }
        }
        Ok(result)
    }
}

impl fmt::Display for KnotType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "unknot");
        }
        let parts: Vec<String> = self.factors.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(" # "))
    }
}
