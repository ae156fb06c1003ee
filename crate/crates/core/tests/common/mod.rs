//! Independent oracles shared by the integration suites. Everything in
//! here deliberately avoids the library's own algorithms: determinants
//! come from the permutation sum, orbit sets from exhaustive word
//! generation, and linking numbers from geometric segment intersection
//! in a planar diagram.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Zero;

use smale_flows::{branch_line_order, LaurentMatrix, LaurentPoly, OrbitWord};

/// Determinant as the signed sum over all permutations.
pub fn permutation_determinant(m: &LaurentMatrix) -> LaurentPoly {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc = LaurentPoly::zero();
    permute(&mut perm, 0, &mut |perm, sign| {
        let mut prod = LaurentPoly::one();
        for (i, &j) in perm.iter().enumerate() {
            prod = &prod * m.entry(i, j);
        }
        if sign {
            acc = &acc + &prod;
        } else {
            acc = &acc - &prod;
        }
    });
    acc
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize], bool)) {
    let n = perm.len();
    if k == n {
        // Parity by counting inversions.
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        visit(perm, inversions % 2 == 0);
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// All primitive admissible cyclic words of length n as strings, built
/// from scratch: generate every word, check cyclic admissibility and
/// primitivity, deduplicate by least rotation.
pub fn brute_force_orbits(adjacency: &[Vec<u8>], labels: &[char], n: usize) -> Vec<String> {
    let k = adjacency.len();
    let mut found: Vec<String> = Vec::new();
    let total = k.pow(n as u32);
    'words: for code in 0..total {
        let mut word = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            word.push(c % k);
            c /= k;
        }
        for i in 0..n {
            if adjacency[word[i]][word[(i + 1) % n]] == 0 {
                continue 'words;
            }
        }
        // Primitive: no proper period.
        for p in 1..n {
            if n.is_multiple_of(p) && (0..n).all(|i| word[i] == word[i % p]) {
                continue 'words;
            }
        }
        let canonical = (0..n)
            .map(|r| {
                (0..n)
                    .map(|i| labels[word[(r + i) % n]])
                    .collect::<String>()
            })
            .min()
            .unwrap();
        if !found.contains(&canonical) {
            found.push(canonical);
        }
    }
    found.sort();
    found
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    let v = (b.0 - a.0) as i128 * (c.1 - a.1) as i128
        - (b.1 - a.1) as i128 * (c.0 - a.0) as i128;
    v.signum() as i64
}

fn segments_cross(p1: (i64, i64), p2: (i64, i64), q1: (i64, i64), q2: (i64, i64)) -> bool {
    orient(p1, p2, q1) * orient(p1, p2, q2) < 0 && orient(q1, q2, p1) * orient(q1, q2, p2) < 0
}

/// Geometric linking oracle: place the branch points of both orbits at
/// their ordered integer positions, draw each strand as a straight
/// segment from (position, 0) to (shifted position, 1), and count proper
/// intersections between strands of different orbits. Every template
/// crossing is positive, so the linking number is half that count.
pub fn diagram_linking_number(w1: &OrbitWord, w2: &OrbitWord) -> u64 {
    let orbits = [w1.clone(), w2.clone()];
    let points = branch_line_order(&orbits).expect("distinct orbits");
    let position = |orbit: usize, phase: usize| -> i64 {
        points
            .iter()
            .position(|p| p.orbit == orbit && p.phase == phase % orbits[orbit].len())
            .expect("point present") as i64
    };
    let strands = |orbit: usize| -> Vec<((i64, i64), (i64, i64))> {
        (0..orbits[orbit].len())
            .map(|phase| {
                (
                    (position(orbit, phase), 0),
                    (position(orbit, phase + 1), 1),
                )
            })
            .collect()
    };
    let s1 = strands(0);
    let s2 = strands(1);
    let mut crossings = 0u64;
    for a in &s1 {
        for b in &s2 {
            if segments_cross(a.0, a.1, b.0, b.1) {
                crossings += 1;
            }
        }
    }
    assert_eq!(crossings % 2, 0, "inter-orbit crossing count must be even");
    crossings / 2
}

/// Same construction for one orbit against itself: proper intersections
/// among its own strands.
pub fn diagram_self_crossings(w: &OrbitWord) -> u64 {
    let orbits = [w.clone()];
    let points = branch_line_order(&orbits).expect("single orbit");
    let position = |phase: usize| -> i64 {
        points
            .iter()
            .position(|p| p.phase == phase % w.len())
            .expect("point present") as i64
    };
    let strands: Vec<((i64, i64), (i64, i64))> = (0..w.len())
        .map(|phase| ((position(phase), 0), (position(phase + 1), 1)))
        .collect();
    let mut crossings = 0u64;
    for i in 0..strands.len() {
        for j in i + 1..strands.len() {
            if segments_cross(strands[i].0, strands[i].1, strands[j].0, strands[j].1) {
                crossings += 1;
            }
        }
    }
    crossings
}

/// Integer trace of the n-th power of a 0/1 matrix, via BigInt matrix
/// powers; independent of the library's counting code.
pub fn trace_power(adjacency: &[Vec<u8>], n: usize) -> BigInt {
    let k = adjacency.len();
    let base: Vec<Vec<BigInt>> = adjacency
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut acc = base.clone();
    for _ in 1..n {
        let mut next = vec![vec![BigInt::zero(); k]; k];
        for i in 0..k {
            for l in 0..k {
                for j in 0..k {
                    next[i][j] += &acc[i][l] * &base[l][j];
                }
            }
        }
        acc = next;
    }
    (0..k).map(|i| acc[i][i].clone()).sum()
}

/// Deterministic xorshift generator for reproducible random sampling in
/// tests.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}
