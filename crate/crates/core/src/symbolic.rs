//! Subshifts of finite type: incidence/structure matrices and the
//! periodic-orbit combinatorics of their suspensions.
//!
//! Periodic points of period n are counted by trace(Aⁿ); closed orbits of
//! least period n by the Möbius/necklace formula over those traces.
//! Orbits themselves are enumerated as primitive cyclic words in their
//! lexicographically least rotation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymbolicError {
    #[error("matrix must be square and nonempty")]
    NotSquare,
    #[error("incidence entries must be 0 or 1, got {0}")]
    BadIncidenceEntry(i64),
    #[error("structure entries must be -1, 0 or 1, got {0}")]
    BadStructureEntry(i64),
    #[error("row {0} of the incidence matrix is zero (wandering partition element)")]
    ZeroRow(usize),
    #[error("column {0} of the incidence matrix is zero (wandering partition element)")]
    ZeroColumn(usize),
    #[error("|S| does not match the incidence matrix at ({0},{1})")]
    SignPatternMismatch(usize, usize),
    #[error("orbit word must be nonempty")]
    EmptyWord,
    #[error("orbit word {0:?} is a proper power and not primitive")]
    NotPrimitive(String),
    #[error("letter {0:?} is outside the strip alphabet")]
    BadLetter(char),
    #[error("period must be at least 1")]
    ZeroPeriod,
}

/// Strip labels for an n-symbol alphabet. The two-strip Lorenz template
/// uses {x, y}; a third strip gets z; larger alphabets fall back to
/// a, b, c, ... In every case the display order equals the index order.
pub fn strip_labels(n: usize) -> Vec<char> {
    if n <= 3 {
        ['x', 'y', 'z'][..n].to_vec()
    } else {
        (0..n).map(|i| (b'a' + i as u8) as char).collect()
    }
}

/// A periodic orbit of the template semi-flow, stored as a primitive
/// cyclic word in its lexicographically least rotation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitWord {
    letters: Vec<char>,
}

impl OrbitWord {
    /// Canonicalizes the rotation; errors on empty or non-primitive input.
    pub fn new(letters: Vec<char>) -> Result<Self, SymbolicError> {
        if letters.is_empty() {
            return Err(SymbolicError::EmptyWord);
        }
        if Self::smallest_period(&letters) != letters.len() {
            return Err(SymbolicError::NotPrimitive(letters.into_iter().collect()));
        }
        Ok(Self {
            letters: Self::least_rotation(&letters),
        })
    }

    fn smallest_period(letters: &[char]) -> usize {
        let n = letters.len();
        (1..=n)
            .find(|&p| n.is_multiple_of(p) && (0..n).all(|i| letters[i] == letters[i % p]))
            .unwrap_or(n)
    }

    fn least_rotation(letters: &[char]) -> Vec<char> {
        let n = letters.len();
        let best = (0..n)
            .min_by(|&a, &b| {
                (0..n)
                    .map(|k| letters[(a + k) % n].cmp(&letters[(b + k) % n]))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap();
        (0..n).map(|k| letters[(best + k) % n]).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    /// Letter at a phase, read cyclically.
    pub fn letter_at(&self, phase: usize) -> char {
        self.letters[phase % self.letters.len()]
    }

    /// True when each cyclically adjacent letter pair has incidence 1.
    pub fn is_admissible(&self, a: &IncidenceMatrix) -> bool {
        let labels = strip_labels(a.size());
        let index = |c: char| labels.iter().position(|&l| l == c);
        self.letters.iter().enumerate().all(|(k, &c)| {
            let next = self.letter_at(k + 1);
            match (index(c), index(next)) {
                (Some(i), Some(j)) => a.entry(i, j) == 1,
                _ => false,
            }
        })
    }
}

impl fmt::Display for OrbitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OrbitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrbitWord({self})")
    }
}

impl FromStr for OrbitWord {
    type Err = SymbolicError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        for c in s.chars() {
            if !c.is_ascii_lowercase() {
                return Err(SymbolicError::BadLetter(c));
            }
        }
        Self::new(s.chars().collect())
    }
}

/// 0/1 matrix of a Markov partition: A_ij = 1 when the first return map
/// carries partition element i across element j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    size: usize,
    entries: Vec<u8>,
}

impl IncidenceMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, SymbolicError> {
        let size = rows.len();
        if size == 0 || rows.iter().any(|r| r.len() != size) {
            return Err(SymbolicError::NotSquare);
        }
        let mut entries = Vec::with_capacity(size * size);
        for row in &rows {
            for &v in row {
                match v {
                    0 | 1 => entries.push(v as u8),
                    other => return Err(SymbolicError::BadIncidenceEntry(other)),
                }
            }
        }
        let m = Self { size, entries };
        for i in 0..size {
            if (0..size).all(|j| m.entry(i, j) == 0) {
                return Err(SymbolicError::ZeroRow(i));
            }
            if (0..size).all(|j| m.entry(j, i) == 0) {
                return Err(SymbolicError::ZeroColumn(i));
            }
        }
        Ok(m)
    }

    /// The full 2-shift matrix [[1,1],[1,1]] of the Lorenz template.
    pub fn lorenz() -> Self {
        Self::new(vec![vec![1, 1], vec![1, 1]]).unwrap()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.entry(i, j) as i64).collect())
            .collect()
    }
}

/// Incidence matrix signed by whether the return map preserves (+1) or
/// reverses (-1) orientation on each partition element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureMatrix {
    incidence: IncidenceMatrix,
    signs: Vec<i8>,
}

impl StructureMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, SymbolicError> {
        let incidence = IncidenceMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|v| v.abs()).collect())
                .collect(),
        )?;
        let mut signs = Vec::with_capacity(rows.len() * rows.len());
        for row in &rows {
            for &v in row {
                match v {
                    -1..=1 => signs.push(v as i8),
                    other => return Err(SymbolicError::BadStructureEntry(other)),
                }
            }
        }
        Ok(Self { incidence, signs })
    }

    /// Pairs a sign pattern with an existing incidence matrix; |S| must
    /// equal A entrywise.
    pub fn with_incidence(
        incidence: IncidenceMatrix,
        rows: Vec<Vec<i64>>,
    ) -> Result<Self, SymbolicError> {
        let s = Self::new(rows)?;
        if s.incidence != incidence {
            for i in 0..incidence.size() {
                for j in 0..incidence.size() {
                    if s.incidence.entry(i, j) != incidence.entry(i, j) {
                        return Err(SymbolicError::SignPatternMismatch(i, j));
                    }
                }
            }
        }
        Ok(s)
    }

    /// The Lorenz structure matrix [[1,1],[1,1]]: both strips preserve
    /// orientation.
    pub fn lorenz() -> Self {
        Self::new(vec![vec![1, 1], vec![1, 1]]).unwrap()
    }

    pub fn size(&self) -> usize {
        self.incidence.size()
    }

    pub fn incidence(&self) -> &IncidenceMatrix {
        &self.incidence
    }

    pub fn sign(&self, i: usize, j: usize) -> i8 {
        self.signs[i * self.size() + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.sign(i, j) as i64).collect())
            .collect()
    }
}

fn mat_mul(a: &[Vec<u128>], b: &[Vec<u128>]) -> Vec<Vec<u128>> {
    let n = a.len();
    let mut out = vec![vec![0u128; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// trace(Aⁿ): the number of points fixed by the n-th power of the first
/// return map. Exact integer arithmetic.
pub fn count_periodic_points(a: &IncidenceMatrix, n: usize) -> Result<u128, SymbolicError> {
    if n == 0 {
        return Err(SymbolicError::ZeroPeriod);
    }
    let size = a.size();
    let base: Vec<Vec<u128>> = (0..size)
        .map(|i| (0..size).map(|j| a.entry(i, j) as u128).collect())
        .collect();
    let mut acc = base.clone();
    for _ in 1..n {
        acc = mat_mul(&acc, &base);
    }
    Ok((0..size).map(|i| acc[i][i]).sum())
}

fn mobius(mut n: u64) -> i64 {
    let mut mu = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Number of closed orbits of least period n:
/// (1/n)·Σ_{d|n} μ(d)·trace(A^{n/d}).
pub fn count_closed_orbits(a: &IncidenceMatrix, n: usize) -> Result<u128, SymbolicError> {
    if n == 0 {
        return Err(SymbolicError::ZeroPeriod);
    }
    let mut sum: i128 = 0;
    for d in 1..=n {
        if n.is_multiple_of(d) {
            let mu = mobius(d as u64);
            if mu != 0 {
                sum += mu as i128 * count_periodic_points(a, n / d)? as i128;
            }
        }
    }
    debug_assert!(sum >= 0 && sum % n as i128 == 0);
    Ok((sum / n as i128) as u128)
}

/// All primitive A-admissible cyclic words of length exactly n, each in
/// canonical rotation. The count equals `count_closed_orbits(a, n)`.
pub fn enumerate_orbits(a: &IncidenceMatrix, n: usize) -> Result<BTreeSet<OrbitWord>, SymbolicError> {
    if n == 0 {
        return Err(SymbolicError::ZeroPeriod);
    }
    let labels = strip_labels(a.size());
    let mut out = BTreeSet::new();
    let mut word: Vec<usize> = Vec::with_capacity(n);
    fn dfs(
        a: &IncidenceMatrix,
        labels: &[char],
        n: usize,
        word: &mut Vec<usize>,
        out: &mut BTreeSet<OrbitWord>,
    ) {
        if word.len() == n {
            if a.entry(word[n - 1], word[0]) == 1 {
                let letters: Vec<char> = word.iter().map(|&i| labels[i]).collect();
                if let Ok(w) = OrbitWord::new(letters) {
                    out.insert(w);
                }
            }
            return;
        }
        for next in 0..a.size() {
            if word.is_empty() || a.entry(*word.last().unwrap(), next) == 1 {
                word.push(next);
                dfs(a, labels, n, word, out);
                word.pop();
            }
        }
    }
    dfs(a, &labels, n, &mut word, &mut out);
    Ok(out)
}
