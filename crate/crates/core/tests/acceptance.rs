//! Acceptance gate for the library. Each check prints one PASS/FAIL
//! line (run with `--nocapture` to see them) and enforces its wall-clock
//! budget. The CLI contract has its own gate in the cli crate.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;

use common::{brute_force_orbits, diagram_linking_number, trace_power, TestRng};
use smale_flows::{
    alexander_from_linking_matrix, alexander_from_presentation, alexander_of_flow,
    alexander_with_deleted_column, build_lorenz_linking_matrix, compose_sum, count_closed_orbits,
    count_periodic_points, enumerate_orbits, fox_derivative, linking_attractor_repeller,
    linking_number, realize_any_knot, solve_rank1_abelianization, validate, AbelianizationMap,
    ArLink, ConfigProposal, GroupPresentation, GroupWord, IncidenceMatrix, KnotType, LaurentPoly,
    LinkingMatrix, LorenzSmaleConfig, OrbitWord, SaddleData, StructureMatrix,
};

fn gate(number: u32, name: &str, budget: Option<Duration>, body: impl FnOnce()) {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    let verdict = if result.is_ok() && budget.is_none_or(|b| elapsed <= b) {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "acceptance {number} {name}: {verdict} ({:.3} ms)",
        elapsed.as_secs_f64() * 1000.0
    );
    if let Err(payload) = result {
        std::panic::resume_unwind(payload);
    }
    if let Some(b) = budget {
        assert!(elapsed <= b, "criterion {number} exceeded {b:?}: {elapsed:?}");
    }
}

fn poly(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

#[test]
fn criterion_1_lorenz_determinant() {
    gate(1, "lorenz-determinant", Some(Duration::from_millis(1)), || {
        let structure = StructureMatrix::lorenz();
        let det = LinkingMatrix::unlinked(structure).det_i_minus();
        assert_eq!(det.as_constant(), Some(BigInt::from(-1)));
        assert_eq!(
            linking_attractor_repeller([&SaddleData::lorenz(0)]),
            BigUint::from(1u32)
        );
    });
}

#[test]
fn criterion_2_linking_matrix_alexander() {
    gate(2, "linking-matrix-alexander", None, || {
        for q in 0..=8i64 {
            let delta = alexander_from_linking_matrix(&build_lorenz_linking_matrix(q));
            let expected = LaurentPoly::from_terms([(q, 1), (0, -1), (-q, 1)]);
            assert!(delta.equal_up_to_units(&expected), "q = {q}");
            assert!(delta.is_symmetric(), "q = {q}");
        }
        // Same-sign exponents break the symmetry forced on Alexander
        // polynomials, so that variant cannot occur.
        for q in 1..=8i64 {
            let structure = StructureMatrix::lorenz();
            let same_sign = LinkingMatrix::new(structure, vec![vec![q, q], vec![q, q]]).unwrap();
            assert!(!same_sign.det_i_minus().is_symmetric(), "q = {q}");
        }
    });
}

#[test]
fn criterion_3_fox_calculus() {
    gate(3, "fox-calculus", Some(Duration::from_secs(1)), || {
        let trefoil = GroupPresentation::trefoil();
        let phi = solve_rank1_abelianization(&trefoil).unwrap();
        let delta = alexander_from_presentation(&trefoil, &phi).unwrap();
        assert!(delta.equal_up_to_units(&poly("1 - t + t^2")));

        for p in 1..=5i64 {
            let pres = GroupPresentation::template_union(p);
            let phi = solve_rank1_abelianization(&pres).unwrap();
            let delta = alexander_from_presentation(&pres, &phi).unwrap();
            let expected = LaurentPoly::from_terms([(p, 1), (0, -1), (-p, 1)]);
            assert!(delta.equal_up_to_units(&expected), "p = {p}");
            let mut per_column = Vec::new();
            for j in 0..pres.generators().len() {
                if let Ok(d) = alexander_with_deleted_column(&pres, &phi, j) {
                    per_column.push(d);
                }
            }
            assert!(per_column.len() >= 2, "p = {p}");
            for pair in per_column.windows(2) {
                assert!(pair[0].equal_up_to_units(&pair[1]), "p = {p}");
            }
        }

        let mut rng = TestRng::new(0xacce97);
        let phi = AbelianizationMap::new(vec![1, -2, 3]);
        for _ in 0..1000 {
            let len = rng.below(13) as usize;
            let w = GroupWord::new((0..len).map(|_| {
                (rng.below(3) as usize, if rng.below(2) == 0 { 1i8 } else { -1 })
            }));
            let mut lhs = LaurentPoly::zero();
            for g in 0..3 {
                let dg = fox_derivative(&w, g, &phi).unwrap();
                let factor = &LaurentPoly::monomial(phi.exponents()[g]) - &LaurentPoly::one();
                lhs = &lhs + &(&dg * &factor);
            }
            let rhs = &LaurentPoly::monomial(phi.image_exponent(&w)) - &LaurentPoly::one();
            assert_eq!(lhs, rhs);
        }
    });
}

#[test]
fn criterion_4_orbit_combinatorics() {
    gate(4, "orbit-combinatorics", Some(Duration::from_secs(1)), || {
        let a = IncidenceMatrix::lorenz();
        for n in 1..=12 {
            assert_eq!(count_periodic_points(&a, n).unwrap(), 1u128 << n);
        }
        let adjacency = vec![vec![1u8, 1], vec![1, 1]];
        for n in 1..=10usize {
            let orbits: Vec<String> = enumerate_orbits(&a, n)
                .unwrap()
                .iter()
                .map(|w| w.to_string())
                .collect();
            assert_eq!(orbits, brute_force_orbits(&adjacency, &['x', 'y'], n));
            assert_eq!(orbits.len() as u128, count_closed_orbits(&a, n).unwrap());
            let total: u128 = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| d as u128 * count_closed_orbits(&a, d).unwrap())
                .sum();
            assert_eq!(BigInt::from(total), trace_power(&adjacency, n));
        }
    });
}

#[test]
fn criterion_5_linking_oracle() {
    gate(5, "linking-oracle", Some(Duration::from_secs(5)), || {
        let a = IncidenceMatrix::lorenz();
        let orbits: Vec<OrbitWord> = (1..=6)
            .flat_map(|n| enumerate_orbits(&a, n).unwrap())
            .collect();
        for (i, w1) in orbits.iter().enumerate() {
            for w2 in &orbits[i + 1..] {
                assert_eq!(
                    linking_number(w1, w2).unwrap(),
                    diagram_linking_number(w1, w2),
                    "lk({w1},{w2})"
                );
            }
        }
        let word = |s: &str| s.parse::<OrbitWord>().unwrap();
        assert_eq!(linking_number(&word("x"), &word("y")).unwrap(), 0);
        assert_eq!(linking_number(&word("xy"), &word("xxy")).unwrap(), 1);
    });
}

#[test]
fn criterion_6_classifier() {
    gate(6, "classifier", Some(Duration::from_secs(1)), || {
        let mut cores = vec![KnotType::unknot()];
        let mut coprime = Vec::new();
        for p in 2..=7i64 {
            for q in p + 1..=7 {
                if p.gcd(&q) == 1 {
                    coprime.push((p, q));
                    cores.push(KnotType::torus(p, q).unwrap());
                }
            }
        }
        cores.push(KnotType::trefoil().connected_sum(&KnotType::trefoil()));

        for x_core in &cores {
            for y_core in &cores {
                for x_twist in -10..=10i64 {
                    for y_twist in -10..=10i64 {
                        for bands_linked in [false, true] {
                            for ar_link in [ArLink::Hopf, ArLink::TrefoilMeridian] {
                                let p = ConfigProposal {
                                    x_core: x_core.clone(),
                                    y_core: y_core.clone(),
                                    x_twist,
                                    y_twist,
                                    bands_linked,
                                    ar_link,
                                    concentric: false,
                                };
                                let x_std = p.x_core.is_unknot() && x_twist == 0;
                                let y_std = p.y_core.is_unknot() && y_twist == 0;
                                let should_accept = !bands_linked
                                    && if p.ar_link == ArLink::TrefoilMeridian {
                                        x_std && y_std
                                    } else if x_std || y_std {
                                        let (core, twist) = if x_std {
                                            (&p.y_core, y_twist)
                                        } else {
                                            (&p.x_core, x_twist)
                                        };
                                        match core.as_single_torus() {
                                            None => core.is_unknot(),
                                            Some((tp, tq)) => {
                                                twist == tp as i64 + tq as i64 - 1
                                            }
                                        }
                                    } else {
                                        false
                                    };
                                assert_eq!(validate(&p).is_ok(), should_accept, "{p:?}");
                            }
                        }
                    }
                }
            }
        }

        // Twist rule: exactly p+q-1, both neighbors rejected.
        for &(p, q) in &coprime {
            for delta in [-1i64, 0, 1] {
                let mut proposal = ConfigProposal::standard();
                proposal.y_core = KnotType::torus(p, q).unwrap();
                proposal.y_twist = p + q - 1 + delta;
                let verdict = validate(&proposal);
                if delta == 0 {
                    assert_eq!(
                        verdict,
                        Ok(LorenzSmaleConfig::HopfTorusCable {
                            p: p as u64,
                            q: q as u64
                        })
                    );
                } else {
                    assert!(verdict.is_err(), "({p},{q}) twist {}", p + q - 1 + delta);
                }
            }
        }
    });
}

#[test]
fn criterion_7_multiplicativity() {
    gate(7, "sum-multiplicativity", None, || {
        let mut knots = vec![KnotType::unknot()];
        for p in 2..=5i64 {
            for q in p + 1..=5 {
                if p.gcd(&q) == 1 {
                    knots.push(KnotType::torus(p, q).unwrap());
                }
            }
        }
        for k1 in &knots {
            for k2 in &knots {
                let f1 = realize_any_knot(k1);
                let f2 = realize_any_knot(k2);
                let sum = compose_sum(&f1, &f2).unwrap();
                let lhs = alexander_of_flow(&sum).unwrap();
                let rhs = &alexander_of_flow(&f1).unwrap() * &alexander_of_flow(&f2).unwrap();
                assert!(lhs.equal_up_to_units(&rhs), "{k1} # {k2}");
            }
        }
        let trefoil = realize_any_knot(&KnotType::trefoil());
        let square = compose_sum(&trefoil, &trefoil).unwrap();
        assert!(alexander_of_flow(&square)
            .unwrap()
            .equal_up_to_units(&poly("1 - 2*t + 3*t^2 - 2*t^3 + t^4")));
    });
}
