//! Embedding-level combinatorics of the standardly embedded Lorenz
//! template.
//!
//! Points of an orbit on the branch line are indexed by the shifts of its
//! itinerary and ordered lexicographically (left ear before right ear,
//! x < y). One application of the shift permutes these points; every
//! order reversal under the shift is a positive crossing in the planar
//! template diagram, so the linking number of two orbits is half the
//! inter-orbit reversal count.

use std::cmp::Ordering;

use thiserror::Error;

use crate::symbolic::OrbitWord;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TemplateError {
    #[error("orbit words must be distinct; self-linking is a different quantity")]
    IdenticalWords,
    #[error("duplicate orbit in branch-line input")]
    DuplicateOrbit,
}

/// Embedding variants of the Lorenz template admitted by the
/// classification. Only `Standard` carries orbit-level crossing
/// semantics; the other variants record band data for the classifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LorenzEmbedding {
    Standard { concentric: bool },
    Twisted { full_twists: i64 },
    TorusCable { p: i64, q: i64 },
}

/// One point of the Markov partition on the branch line: the `phase`-th
/// shift of the itinerary of `orbit` (an index into the caller's orbit
/// list).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchPoint {
    pub orbit: usize,
    pub phase: usize,
}

/// Lexicographic comparison of the eventually periodic itineraries that
/// start at two branch points. Comparing len(w1)+len(w2) symbols suffices
/// to separate distinct shifts of distinct primitive words.
fn cmp_points(w1: &OrbitWord, p1: usize, w2: &OrbitWord, p2: usize) -> Ordering {
    for k in 0..w1.len() + w2.len() {
        let o = w1.letter_at(p1 + k).cmp(&w2.letter_at(p2 + k));
        if o.is_ne() {
            return o;
        }
    }
    Ordering::Equal
}

/// All shifts of all the given orbits, totally ordered along the branch
/// line. Orbits must be pairwise distinct.
pub fn branch_line_order(orbits: &[OrbitWord]) -> Result<Vec<BranchPoint>, TemplateError> {
    for (i, w) in orbits.iter().enumerate() {
        if orbits[..i].contains(w) {
            return Err(TemplateError::DuplicateOrbit);
        }
    }
    let mut points: Vec<BranchPoint> = orbits
        .iter()
        .enumerate()
        .flat_map(|(o, w)| (0..w.len()).map(move |phase| BranchPoint { orbit: o, phase }))
        .collect();
    points.sort_by(|a, b| {
        cmp_points(&orbits[a.orbit], a.phase, &orbits[b.orbit], b.phase)
    });
    Ok(points)
}

fn reverses(w1: &OrbitWord, p1: usize, w2: &OrbitWord, p2: usize) -> bool {
    let before = cmp_points(w1, p1, w2, p2);
    let after = cmp_points(w1, p1 + 1, w2, p2 + 1);
    before != after
}

/// Linking number of two distinct orbits on the standardly embedded
/// template: half the number of inter-orbit point pairs whose branch-line
/// order reverses under one shift. All template crossings are positive,
/// so the result is a nonnegative integer.
pub fn linking_number(w1: &OrbitWord, w2: &OrbitWord) -> Result<u64, TemplateError> {
    if w1 == w2 {
        return Err(TemplateError::IdenticalWords);
    }
    let mut reversals = 0u64;
    for p1 in 0..w1.len() {
        for p2 in 0..w2.len() {
            if reverses(w1, p1, w2, p2) {
                reversals += 1;
            }
        }
    }
    debug_assert!(reversals.is_multiple_of(2));
    Ok(reversals / 2)
}

/// Number of intra-orbit point pairs whose branch-line order reverses
/// under one shift: the self-crossing count of the orbit's strand in the
/// planar template diagram.
pub fn self_crossings(w: &OrbitWord) -> u64 {
    let mut count = 0u64;
    for p1 in 0..w.len() {
        for p2 in p1 + 1..w.len() {
            if reverses(w, p1, w, p2) {
                count += 1;
            }
        }
    }
    count
}
