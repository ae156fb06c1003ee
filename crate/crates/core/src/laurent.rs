//! Exact Laurent-polynomial arithmetic over the integers.
//!
//! A Laurent polynomial is a finite sum Σ cₑ·tᵉ with integer coefficients
//! and integer (possibly negative) exponents. Alexander polynomials are
//! only defined up to units ±tⁿ, so alongside ring arithmetic this module
//! provides unit-equality, the t ↦ 1/t symmetry test, and a normal form
//! used for display.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LaurentError {
    #[error("determinant requires a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix entry count {got} does not match {rows}x{cols}")]
    BadEntryCount { rows: usize, cols: usize, got: usize },
    #[error("matrix dimensions must be positive")]
    EmptyMatrix,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("inexact division: {dividend} is not a multiple of {divisor}")]
    InexactDivision { dividend: String, divisor: String },
    #[error("cannot parse polynomial from {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// An integer-coefficient Laurent polynomial in one variable `t`.
///
/// Invariants: no stored coefficient is zero; the zero polynomial has an
/// empty term map. All arithmetic is exact (`BigInt` coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// The monomial tᵉ.
    pub fn monomial(exp: i64) -> Self {
        Self::term(BigInt::one(), exp)
    }

    /// The single term c·tᵉ.
    pub fn term(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (exp, coeff) in iter {
            let entry = terms.entry(exp).or_insert_with(BigInt::zero);
            *entry += coeff.into();
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by tⁿ.
    pub fn shifted(&self, n: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + n, c.clone())).collect(),
        }
    }

    /// The substitution t ↦ 1/t.
    pub fn reversed(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Constant-polynomial view, if the polynomial has no t-dependence.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// True iff `self` = ±tⁿ·`other` for some integer n. Both zero counts
    /// as true. This is the equivalence under which Alexander polynomials
    /// are defined.
    pub fn equal_up_to_units(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let shift = self.min_exp().unwrap() - other.min_exp().unwrap();
        let mut same = true;
        let mut negated = true;
        for ((ea, ca), (eb, cb)) in self.terms.iter().zip(other.terms.iter()) {
            if *ea != eb + shift {
                return false;
            }
            same &= ca == cb;
            negated &= *ca == -cb;
        }
        same || negated
    }

    /// True iff p(t) = ±tⁿ·p(1/t) for some n. Alexander polynomials of
    /// knots always pass this test.
    pub fn is_symmetric(&self) -> bool {
        self.equal_up_to_units(&self.reversed())
    }

    /// Canonical representative of the unit class: multiplied by ±tⁿ so
    /// the lowest-degree term has exponent 0 and positive coefficient.
    /// Used for display and hashing, never inside arithmetic.
    pub fn normalized(&self) -> Self {
        match self.min_exp() {
            None => Self::zero(),
            Some(min) => {
                let shifted = self.shifted(-min);
                if shifted.coeff(0).is_negative() {
                    -&shifted
                } else {
                    shifted
                }
            }
        }
    }

    /// Exact division; errors if `divisor` is zero or the quotient is not
    /// a Laurent polynomial over the integers.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, LaurentError> {
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let inexact = || LaurentError::InexactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        // Work with ordinary polynomials by shifting out the lowest exponents.
        let shift = self.min_exp().unwrap() - divisor.min_exp().unwrap();
        let mut rem = self.shifted(-self.min_exp().unwrap());
        let div = divisor.shifted(-divisor.min_exp().unwrap());
        let div_deg = div.max_exp().unwrap();
        let div_lead = div.coeff(div_deg);
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let rem_deg = rem.max_exp().unwrap();
            if rem_deg < div_deg {
                return Err(inexact());
            }
            let lead = rem.coeff(rem_deg);
            if (&lead % &div_lead) != BigInt::zero() {
                return Err(inexact());
            }
            let q = Self::term(&lead / &div_lead, rem_deg - div_deg);
            rem = &rem - &(&q * &div);
            quot = &quot + &q;
        }
        Ok(quot.shifted(shift))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry -= c;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let entry = terms.entry(ea + eb).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Canonical text form: terms in ascending exponent order joined by
/// " + " / " - ", coefficient omitted when ±1 (unless the term is
/// constant), `t^e` shortened to `t` when e = 1 and omitted when e = 0.
/// Example: `t^-1 - 1 + t`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, coeff)) in self.terms.iter().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*exp, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (e, true) => write!(f, "t^{e}")?,
                (e, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| LaurentError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut result = Self::zero();
        let mut chars = compact.chars().peekable();
        let mut sign: i64 = 1;
        // Leading sign.
        if let Some(&c) = chars.peek() {
            if c == '+' || c == '-' {
                sign = if c == '-' { -1 } else { 1 };
                chars.next();
            }
        }
        loop {
            // One term: [int][*]['t'['^'int]]
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            let mut coeff: BigInt = if digits.is_empty() {
                BigInt::one()
            } else {
                digits.parse().map_err(|_| err("bad coefficient"))?
            };
            if sign < 0 {
                coeff = -coeff;
            }
            if chars.peek() == Some(&'*') {
                chars.next();
                if chars.peek() != Some(&'t') {
                    return Err(err("expected t after *"));
                }
            }
            let exp: i64 = if chars.peek() == Some(&'t') {
                chars.next();
                if chars.peek() == Some(&'^') {
                    chars.next();
                    let mut estr = String::new();
                    if chars.peek() == Some(&'-') || chars.peek() == Some(&'+') {
                        estr.push(chars.next().unwrap());
                    }
                    while let Some(&c) = chars.peek() {
                        if c.is_ascii_digit() {
                            estr.push(c);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    estr.parse().map_err(|_| err("bad exponent"))?
                } else {
                    1
                }
            } else {
                if digits.is_empty() {
                    return Err(err("term with neither coefficient nor t"));
                }
                0
            };
            result = &result + &Self::term(coeff, exp);
            match chars.next() {
                None => break,
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                Some(c) => return Err(err(&format!("unexpected character {c:?}"))),
            }
            if chars.peek().is_none() {
                return Err(err("trailing operator"));
            }
        }
        Ok(result)
    }
}

/// A dense row-major matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self, LaurentError> {
        if rows == 0 || cols == 0 {
            return Err(LaurentError::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(LaurentError::BadEntryCount {
                rows,
                cols,
                got: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![LaurentPoly::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = LaurentPoly::one();
        }
        Self { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, LaurentError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LaurentError::BadEntryCount {
                rows: self.rows,
                cols: self.cols,
                got: rhs.entries.len(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { rows: self.rows, cols: self.cols, entries })
    }

    /// Removes row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let entries = (0..self.rows)
            .filter(|&r| r != i)
            .flat_map(|r| {
                (0..self.cols)
                    .filter(|&c| c != j)
                    .map(move |c| self.entry(r, c).clone())
            })
            .collect();
        Self {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Removes column `j` only.
    pub fn delete_col(&self, j: usize) -> Self {
        let entries = (0..self.rows)
            .flat_map(|r| {
                (0..self.cols)
                    .filter(|&c| c != j)
                    .map(move |c| self.entry(r, c).clone())
            })
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Exact determinant by cofactor expansion along the first row.
    /// Intended for the small matrices that arise from Markov partitions.
    pub fn det(&self) -> Result<LaurentPoly, LaurentError> {
        if self.rows != self.cols {
            return Err(LaurentError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.det_unchecked())
    }

    fn det_unchecked(&self) -> LaurentPoly {
        match self.rows {
            1 => self.entry(0, 0).clone(),
            2 => {
                &(self.entry(0, 0) * self.entry(1, 1)) - &(self.entry(0, 1) * self.entry(1, 0))
            }
            n => {
                let mut acc = LaurentPoly::zero();
                for j in 0..n {
                    let e = self.entry(0, j);
                    if e.is_zero() {
                        continue;
                    }
                    let cofactor = e * &self.minor(0, j).det_unchecked();
                    if j % 2 == 0 {
                        acc = &acc + &cofactor;
                    } else {
                        acc = &acc - &cofactor;
                    }
                }
                acc
            }
        }
    }
}
