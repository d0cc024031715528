#![allow(dead_code)]

use latpoly::exact::{int, rat_int};
use latpoly::{DilationSample, Int, Polytope, Rat};
use num_traits::{Signed, Zero};

/// Lattice points of `mP` found by scanning its whole bounding box and
/// testing every candidate against the facet inequalities.
pub fn naive_sample(p: &Polytope, m: i64) -> DilationSample {
    let n = p.dim();
    let mr = rat_int(m);
    let lo: Vec<i64> = (0..n)
        .map(|i| p.vertices().iter().map(|v| (&v[i] * &mr).ceil().to_integer()).min().unwrap())
        .map(|x: Int| i64::try_from(x).unwrap())
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|i| p.vertices().iter().map(|v| (&v[i] * &mr).floor().to_integer()).max().unwrap())
        .map(|x: Int| i64::try_from(x).unwrap())
        .collect();
    let mut out = DilationSample {
        m: m as u64,
        count: Int::zero(),
        vector_sum: vec![Int::zero(); n],
        interior_count: Int::zero(),
        interior_vector_sum: vec![Int::zero(); n],
    };
    let mut x = lo.clone();
    loop {
        let xr: Vec<Rat> = x.iter().map(|&c| rat_int(c)).collect();
        let slacks: Vec<Rat> = p
            .facets()
            .iter()
            .map(|f| {
                let ax: Rat = f.normal.iter().zip(&xr).map(|(a, c)| Rat::from_integer(a.clone()) * c).sum();
                &f.offset * &mr - ax
            })
            .collect();
        if slacks.iter().all(|s| !s.is_negative()) {
            out.count += 1;
            for (s, c) in out.vector_sum.iter_mut().zip(&x) {
                *s += int(*c);
            }
            if slacks.iter().all(Signed::is_positive) {
                out.interior_count += 1;
                for (s, c) in out.interior_vector_sum.iter_mut().zip(&x) {
                    *s += int(*c);
                }
            }
        }
        // Odometer over the box.
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            if x[k] < hi[k] {
                x[k] += 1;
                break;
            }
            x[k] = lo[k];
            k += 1;
        }
    }
}

pub fn poly(vertices: &[&[i64]]) -> Polytope {
    Polytope::from_int_vertices(&vertices.iter().map(|v| v.to_vec()).collect::<Vec<_>>()).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| int(x)).collect()
}
