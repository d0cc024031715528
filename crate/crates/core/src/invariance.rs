//! Randomized checks that every invariant is preserved by affine unimodular
//! maps.

use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ehrhart::{ehrhart_report, hibi_reflexive};
use crate::error::{Error, Result};
use crate::exact::{random_int_vec, random_unimodular, Int, Rat};
use crate::poly::{RatPoly, VecPoly};
use crate::polytope::{AffineUnimodularMap, Polytope};
use crate::toric::{delzant_check, volume_and_barycenter};

/// Outcome of comparing a polytope with one unimodular image of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceTrial {
    pub map: AffineUnimodularMap,
    pub ehrhart: bool,
    pub vector_ehrhart: bool,
    pub delzant: bool,
    pub reflexive: bool,
    pub volume: bool,
    pub barycenter: bool,
}

impl InvarianceTrial {
    pub fn holds(&self) -> bool {
        self.ehrhart && self.vector_ehrhart && self.delzant && self.reflexive && self.volume && self.barycenter
    }

    /// Names of the invariants that changed.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.ehrhart, "ehrhart"),
            (self.vector_ehrhart, "vector_ehrhart"),
            (self.delzant, "delzant"),
            (self.reflexive, "reflexive"),
            (self.volume, "volume"),
            (self.barycenter, "barycenter"),
        ]
        .into_iter()
        .filter_map(|(ok, name)| (!ok).then_some(name))
        .collect()
    }
}

/// Reflexivity of the polytope re-centred at its unique interior lattice
/// point, or `None` when that point is not unique.
fn centered_reflexive(p: &Polytope) -> Result<Option<bool>> {
    match p.translate_interior_point_to_origin() {
        Ok((q, _)) => hibi_reflexive(&q).map(Some),
        Err(Error::InteriorPointNotUnique { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Expected vector polynomial of `T(P)`: the lattice points of `m·T(P)` are
/// `A·(mP ∩ Z^n) + m·c`, so the sum becomes `A·S(m) + m·c·P(m)`.
fn transported_vector(t: &AffineUnimodularMap, scalar: &RatPoly, vector: &VecPoly) -> VecPoly {
    let a = t.linear();
    let n = t.dim();
    let comps = (0..n)
        .map(|i| {
            let mut acc = (&RatPoly::var() * scalar).scale(&Rat::from_integer(t.translation_vector()[i].clone()));
            for j in 0..n {
                let w = Rat::from_integer(a.get(i, j).clone());
                acc = &acc + &vector.components()[j].scale(&w);
            }
            acc
        })
        .collect();
    VecPoly::new(comps)
}

pub fn check_map(p: &Polytope, t: &AffineUnimodularMap) -> Result<InvarianceTrial> {
    let q = p.apply_map(t)?;
    let rp = ehrhart_report(p)?;
    let rq = ehrhart_report(&q)?;
    let dp = delzant_check(p)?;
    let dq = delzant_check(&q)?;
    let dets = |d: &crate::toric::DelzantReport| {
        let mut v: Vec<Option<Int>> =
            d.per_vertex.iter().map(|e| e.edge_matrix_det.as_ref().map(Signed::abs)).collect();
        v.sort();
        v
    };
    let bp = volume_and_barycenter(p)?;
    let bq = volume_and_barycenter(&q)?;
    Ok(InvarianceTrial {
        map: t.clone(),
        ehrhart: rp.polynomial == rq.polynomial,
        vector_ehrhart: rq.vector_polynomial == transported_vector(t, &rp.polynomial, &rp.vector_polynomial),
        delzant: dp.is_delzant == dq.is_delzant && dets(&dp) == dets(&dq),
        reflexive: centered_reflexive(p)? == centered_reflexive(&q)?,
        volume: bp.volume == bq.volume,
        barycenter: t.apply_rat(&bp.value) == bq.value,
    })
}

/// A random affine unimodular map with translation entries in `[-bound, bound]`.
pub fn random_map<R: rand::Rng>(n: usize, bound: i64, rng: &mut R) -> AffineUnimodularMap {
    AffineUnimodularMap::new(random_unimodular(n, rng), random_int_vec(n, bound, rng))
        .expect("random_unimodular yields determinant ±1")
}

/// Runs `trials` seeded random maps against `p`.
pub fn run_trials(p: &Polytope, seed: u64, trials: usize) -> Result<Vec<InvarianceTrial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let t = random_map(p.dim(), 5, &mut rng);
            check_map(p, &t)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builtin;

    #[test]
    fn invariants_survive_random_maps() {
        for name in ["simplex:2:3", "hirzebruch:1", "box:2:1"] {
            let p = builtin(name).unwrap();
            for t in run_trials(&p, 7, 5).unwrap() {
                assert!(t.holds(), "{name}: {:?}", t.failures());
            }
        }
    }

    #[test]
    fn seeded_trials_repeat() {
        let p = builtin("simplex:2:1").unwrap();
        let a: Vec<_> = run_trials(&p, 42, 3).unwrap().into_iter().map(|t| t.map).collect();
        let b: Vec<_> = run_trials(&p, 42, 3).unwrap().into_iter().map(|t| t.map).collect();
        assert_eq!(a, b);
    }
}
