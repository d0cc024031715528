//! End-to-end acceptance checks. Runs without the libtest harness so that
//! each check prints exactly one PASS/FAIL line with its wall time.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use latpoly::corpus::{builtin, corpus, counterexample5d, simplex};
use latpoly::ehrhart::factorial;
use latpoly::exact::{int, rat, rat_int, rat_vec};
use latpoly::invariance::random_map;
use latpoly::poly::RatPoly;
use latpoly::toric::TheoremCase;
use latpoly::{
    classify, delzant_check, ehrhart, ehrhart_report, enumerate, hibi_reflexive, ono_check, unimodular_equivalent,
    vector_ehrhart, volume_and_barycenter, Int, Polytope, Rat, RatVec,
};
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{ints, naive_sample, poly};

/// `Π_{k=1..n} (λm + k) / n!`, expanded.
fn dilated_simplex_poly(n: usize, lambda: i64) -> RatPoly {
    let factors: Vec<RatPoly> = (1..=n as i64).map(|k| RatPoly::linear(rat_int(lambda), rat_int(k))).collect();
    RatPoly::product(&factors).scale(&Rat::from_integer(factorial(n)).recip())
}

fn sign(k: usize) -> Rat {
    if k.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

fn to_rat(v: &[Int]) -> RatVec {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

fn simplex_ehrhart_values() {
    for n in 1..=4 {
        for lambda in 1..=4 {
            let p = simplex(n, &int(lambda)).unwrap();
            assert_eq!(ehrhart(&p).unwrap(), dilated_simplex_poly(n, lambda), "n={n} λ={lambda}");
        }
    }
    let t3 = simplex(2, &int(3)).unwrap();
    let expected =
        RatPoly::product(&[RatPoly::linear(rat_int(3), rat_int(1)), RatPoly::linear(rat_int(3), rat_int(2))])
            .scale(&rat(1, 2));
    let p = ehrhart(&t3).unwrap();
    assert_eq!(p, expected);
    assert_eq!(p.leading(), rat(9, 2));
    assert_eq!(volume_and_barycenter(&t3).unwrap().volume, rat(9, 2));
}

fn ehrhart_equivalent_but_inequivalent() {
    let rect = poly(&[&[0, 0], &[2, 0], &[0, 1], &[2, 1]]);
    let f2 = builtin("hirzebruch:2").unwrap();
    assert_eq!(f2.vertices(), &[rat_vec(&[0, 0]), rat_vec(&[0, 1]), rat_vec(&[1, 1]), rat_vec(&[3, 0])]);
    let t2 = simplex(2, &int(2)).unwrap();
    let target = RatPoly::new(vec![rat_int(1), rat_int(3), rat_int(2)]);
    let all = [&rect, &f2, &t2];
    for p in all {
        assert_eq!(ehrhart(p).unwrap(), target);
    }
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                assert_eq!(unimodular_equivalent(all[i], all[j]).unwrap(), None, "pair {i},{j}");
            }
        }
    }
}

fn shifted_simplex_duals() {
    for lambda in 3..=5i64 {
        let q = simplex(2, &int(lambda)).unwrap().translate(&ints(&[-1, -1])).unwrap();
        let d = q.dual().unwrap();
        let t = rat(1, lambda - 2);
        let mut expected = vec![rat_vec(&[-1, 0]), rat_vec(&[0, -1]), vec![t.clone(), t]];
        expected.sort();
        assert_eq!(d.vertices(), expected.as_slice(), "λ={lambda}");
        assert_eq!(d.is_lattice(), lambda == 3);
        assert_eq!(hibi_reflexive(&q).unwrap(), d.is_lattice());
    }
}

fn reciprocity_over_corpus() {
    let entries = corpus();
    assert!(entries.len() >= 10);
    let dims: std::collections::BTreeSet<usize> = entries.iter().map(|e| e.dim()).collect();
    assert_eq!(dims, (1..=5).collect());
    for e in &entries {
        let p = e.polytope();
        let n = p.dim();
        let scalar = ehrhart(&p).unwrap();
        let vector = vector_ehrhart(&p).unwrap();
        for m in 1..=3i64 {
            let s = enumerate(&p, m).unwrap();
            let neg = rat_int(-m);
            assert_eq!(sign(n) * scalar.eval(&neg), Rat::from_integer(s.interior_count.clone()), "{} m={m}", e.name());
            let v: RatVec = vector.eval(&neg).into_iter().map(|x| sign(n + 1) * x).collect();
            assert_eq!(v, to_rat(&s.interior_vector_sum), "{} m={m}", e.name());
        }
    }
}

fn counterexample_reproduction() {
    let p = counterexample5d();
    assert_eq!(p.vertices().len(), 18);
    assert!(p.vertices().contains(&rat_vec(&[0, -1, -1, -1, -1])));
    assert!(p.vertices().contains(&rat_vec(&[6, -1, 3, -1, 2])));
    assert!(delzant_check(&p).unwrap().is_delzant);
    assert!(hibi_reflexive(&p).unwrap());
    assert_eq!(ehrhart(&p).unwrap(), dilated_simplex_poly(5, 6));
    let s = simplex(5, &int(6)).unwrap();
    assert_eq!(unimodular_equivalent(&p, &s).unwrap(), None);
    assert!(volume_and_barycenter(&p).unwrap().value.iter().any(|x| !x.is_zero()));
    assert!(!ono_check(&p).unwrap().holds);
    let v = classify(&p).unwrap();
    assert_eq!(v.case_applied, TheoremCase::CounterexampleFamily);
    assert_eq!(v.acsemis, Some(false));
    assert!(!v.isomorphic_to_projective);
}

fn classification_positive_cases() {
    for n in 1..=4 {
        let p = simplex(n, &int(1)).unwrap();
        assert_eq!(classify(&p).unwrap().case_applied, TheoremCase::CaseI, "n={n}");
    }
    assert_eq!(classify(&simplex(2, &int(3)).unwrap()).unwrap().case_applied, TheoremCase::CaseIi);
    for n in 2..=3 {
        let lambda = int(n as i64 + 1);
        let target = simplex(n, &lambda).unwrap();
        // Move the polytope off the standard position so the map is non-trivial.
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let p = target.apply_map(&random_map(n, 4, &mut rng)).unwrap();
        let v = classify(&p).unwrap();
        assert!(v.cases_verified.contains(&TheoremCase::CaseIii), "n={n}: {:?}", v.cases_verified);
        if n == 3 {
            assert_eq!(v.case_applied, TheoremCase::CaseIii);
        }
        assert!(v.isomorphic_to_projective);
        let map = v.certificates.map.expect("certificate map");
        assert!(map.det().abs().is_one());
        assert!(map.maps_onto(&p, &target));
        assert_eq!(p.apply_map(&map).unwrap(), target);
    }
}

fn ono_calibration() {
    let rect = poly(&[&[0, 0], &[2, 0], &[0, 1], &[2, 1]]);
    let centered = simplex(2, &int(3)).unwrap().translate(&ints(&[-1, -1])).unwrap();
    for p in [&rect, &centered] {
        let o = ono_check(p).unwrap();
        assert!(o.holds);
        assert!(o.residual.is_zero());
    }
    // The un-scaled identity P^x(m) = P(m)·b breaks on the rectangle at m = 2.
    let r = ehrhart_report(&rect).unwrap();
    let b = volume_and_barycenter(&rect).unwrap().value;
    assert_eq!(b, vec![rat_int(1), rat(1, 2)]);
    let lhs = r.vector_polynomial.eval_int(2);
    let unscaled: RatVec = b.iter().map(|x| r.polynomial.eval_int(2) * x).collect();
    assert_eq!(lhs, rat_vec(&[30, 15]));
    assert_eq!(unscaled, vec![rat_int(15), rat(15, 2)]);
    assert_ne!(lhs, unscaled);
    let scaled: RatVec = unscaled.iter().map(|x| x * rat_int(2)).collect();
    assert_eq!(lhs, scaled);
}

fn pruned_matches_naive() {
    for e in corpus().iter().filter(|e| e.dim() <= 3) {
        let p = e.polytope();
        for m in 0..=4 {
            assert_eq!(enumerate(&p, m).unwrap(), naive_sample(&p, m), "{} m={m}", e.name());
        }
    }
}

fn centered_reflexive(p: &Polytope) -> Option<bool> {
    p.translate_interior_point_to_origin().ok().map(|(q, _)| hibi_reflexive(&q).unwrap())
}

fn abs_dets(p: &Polytope) -> (bool, Vec<Option<Int>>) {
    let d = delzant_check(p).unwrap();
    let mut dets: Vec<Option<Int>> = d.per_vertex.iter().map(|v| v.edge_matrix_det.as_ref().map(Signed::abs)).collect();
    dets.sort();
    (d.is_delzant, dets)
}

fn unimodular_invariance() {
    let entries: Vec<Polytope> = corpus().iter().filter(|e| e.dim() <= 3).map(|e| e.polytope()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..100 {
        let p = &entries[trial % entries.len()];
        let t = random_map(p.dim(), 6, &mut rng);
        assert!(t.det().abs().is_one());
        let q = p.apply_map(&t).unwrap();
        assert_eq!(ehrhart(&q).unwrap(), ehrhart(p).unwrap(), "trial {trial}");
        assert_eq!(abs_dets(&q), abs_dets(p), "trial {trial}");
        assert_eq!(centered_reflexive(&q), centered_reflexive(p), "trial {trial}");
        let bp = volume_and_barycenter(p).unwrap();
        let bq = volume_and_barycenter(&q).unwrap();
        assert_eq!(bq.volume, bp.volume);
        assert_eq!(bq.value, t.apply_rat(&bp.value), "trial {trial}");
    }
}

fn main() -> ExitCode {
    let checks: [(&str, u64, fn()); 9] = [
        ("Ehrhart polynomials of dilated simplices", 5, simplex_ehrhart_values),
        ("Ehrhart-equivalent polygons that are not unimodularly equivalent", 1, ehrhart_equivalent_but_inequivalent),
        ("duals of shifted dilated triangles", 1, shifted_simplex_duals),
        ("scalar and vector reciprocity over the corpus", 60, reciprocity_over_corpus),
        ("5-dimensional counterexample", 120, counterexample_reproduction),
        ("classification of simplex-like smooth polytopes", 30, classification_positive_cases),
        ("barycenter identity calibration", 1, ono_calibration),
        ("pruned enumeration against bounding-box scan", 10, pruned_matches_naive),
        ("invariance under 100 random unimodular maps", 60, unimodular_invariance),
    ];
    let mut failed = 0;
    for (i, (label, limit, check)) in checks.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let status = match outcome {
            Ok(()) if elapsed < Duration::from_secs(limit) => "PASS".to_string(),
            Ok(()) => format!("FAIL (over the {limit} s limit)"),
            Err(_) => "FAIL".to_string(),
        };
        if !status.starts_with("PASS") {
            failed += 1;
        }
        println!("acceptance {}: {status} [{:.2}s] {label}", i + 1, elapsed.as_secs_f64());
    }
    println!("acceptance: {} of 9 passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
