//! Ehrhart polynomials and their vector-weighted counterpart, obtained by
//! exact interpolation of enumerated samples, plus the reciprocity laws, the
//! Hibi reflexivity criterion and detection of Ehrhart equivalence with a
//! dilated standard simplex.

use num_bigint::Sign;
use num_traits::{One, Signed, Zero};

use crate::enumerate::{sample_range, DilationSample, Enumerator};
use crate::error::{Error, Result};
use crate::exact::{Int, Rat};
use crate::poly::{RatPoly, VecPoly};
use crate::polytope::Polytope;

/// Ehrhart data of a lattice polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartReport {
    pub dim: usize,
    /// `P(m) = #(mΔ ∩ Z^n)`, degree `n`.
    pub polynomial: RatPoly,
    /// `P^x(m) = Σ x` over `mΔ ∩ Z^n`, each component of degree at most `n + 1`.
    pub vector_polynomial: VecPoly,
    /// Leading coefficient of `polynomial`, i.e. the Euclidean volume.
    pub volume: Rat,
    /// `λ` with `P = P_{λΣ_n}`, when one exists.
    pub lambda_match: Option<Int>,
    /// Enumerated samples for `m = 0..=n+2` that the polynomials were fitted to.
    pub samples: Vec<DilationSample>,
}

fn sign_power(n: usize) -> Rat {
    if n.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Fits the degree-`n` scalar polynomial through `m = 0..=n` and checks it
/// against the held-out sample `m = n + 1`.
pub fn ehrhart_from_samples(n: usize, samples: &[DilationSample]) -> Result<RatPoly> {
    if samples.len() < n + 2 {
        return Err(Error::Internal(format!("need {} samples, have {}", n + 2, samples.len())));
    }
    let values: Vec<Rat> = samples[..=n].iter().map(|s| Rat::from_integer(s.count.clone())).collect();
    let poly = RatPoly::interpolate_consecutive(&values);
    for s in &samples[n + 1..] {
        let got = poly.eval(&Rat::from_integer(Int::from(s.m)));
        if got != Rat::from_integer(s.count.clone()) {
            return Err(Error::InterpolationInconsistency(format!(
                "count at m={} is {}, polynomial gives {}",
                s.m, s.count, got
            )));
        }
    }
    if poly.coeff(0) != Rat::one() {
        return Err(Error::InterpolationInconsistency("constant term differs from 1".into()));
    }
    Ok(poly)
}

/// Fits each coordinate of the vector sum with degree `n + 1` through
/// `m = 0..=n+1` and checks the held-out sample `m = n + 2`.
pub fn vector_ehrhart_from_samples(n: usize, samples: &[DilationSample]) -> Result<VecPoly> {
    if samples.len() < n + 3 {
        return Err(Error::Internal(format!("need {} samples, have {}", n + 3, samples.len())));
    }
    let components = (0..n)
        .map(|j| {
            let values: Vec<Rat> =
                samples[..=n + 1].iter().map(|s| Rat::from_integer(s.vector_sum[j].clone())).collect();
            RatPoly::interpolate_consecutive(&values)
        })
        .collect();
    let vp = VecPoly::new(components);
    for s in &samples[n + 2..] {
        let got = vp.eval(&Rat::from_integer(Int::from(s.m)));
        let want: Vec<Rat> = s.vector_sum.iter().cloned().map(Rat::from_integer).collect();
        if got != want {
            return Err(Error::InterpolationInconsistency(format!(
                "vector sum at m={} disagrees with fitted polynomial",
                s.m
            )));
        }
    }
    Ok(vp)
}

pub fn ehrhart(p: &Polytope) -> Result<RatPoly> {
    let n = p.dim();
    ehrhart_from_samples(n, &sample_range(p, n as u64 + 1)?)
}

pub fn vector_ehrhart(p: &Polytope) -> Result<VecPoly> {
    let n = p.dim();
    vector_ehrhart_from_samples(n, &sample_range(p, n as u64 + 2)?)
}

/// Scalar and vector Ehrhart polynomials from one shared set of samples.
pub fn ehrhart_report(p: &Polytope) -> Result<EhrhartReport> {
    let n = p.dim();
    let samples = sample_range(p, n as u64 + 2)?;
    let polynomial = ehrhart_from_samples(n, &samples)?;
    let vector_polynomial = vector_ehrhart_from_samples(n, &samples)?;
    let lambda_match = match_lambda_simplex(&polynomial, n);
    Ok(EhrhartReport { dim: n, volume: polynomial.coeff(n), polynomial, vector_polynomial, lambda_match, samples })
}

/// `(λm+1)(λm+2)⋯(λm+n) / n!`, the Ehrhart polynomial of `λΣ_n`.
pub fn simplex_ehrhart(n: usize, lambda: &Int) -> RatPoly {
    let l = Rat::from_integer(lambda.clone());
    let factors: Vec<RatPoly> = (1..=n).map(|i| RatPoly::linear(l.clone(), Rat::from_integer(Int::from(i)))).collect();
    RatPoly::product(&factors).scale(&Rat::from_integer(factorial(n)).recip())
}

pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, k| acc * Int::from(k))
}

/// Largest `r >= 0` with `r^n <= x`, returned only when `r^n == x`.
pub fn exact_nth_root(x: &Int, n: usize) -> Option<Int> {
    if x.is_negative() || n == 0 {
        return None;
    }
    let (mut lo, mut hi) = (Int::zero(), Int::one());
    while num_traits::pow(hi.clone(), n) <= *x {
        hi *= 2;
    }
    while &hi - &lo > Int::one() {
        let mid: Int = (&lo + &hi) / Int::from(2);
        if num_traits::pow(mid.clone(), n) <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (num_traits::pow(lo.clone(), n) == *x).then_some(lo)
}

/// `λ` such that `q` equals the Ehrhart polynomial of `λΣ_n` coefficient for
/// coefficient. The candidate comes from the leading coefficient
/// `λ^n / n!`; the full identity is then checked.
pub fn match_lambda_simplex(q: &RatPoly, n: usize) -> Option<Int> {
    if q.degree() != Some(n) {
        return None;
    }
    let scaled = q.leading() * Rat::from_integer(factorial(n));
    if !scaled.is_integer() || scaled.numer().sign() != Sign::Plus {
        return None;
    }
    let lambda = exact_nth_root(&scaled.to_integer(), n)?;
    (simplex_ehrhart(n, &lambda) == *q).then_some(lambda)
}

/// Both sides of scalar and vector reciprocity at one dilation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocityWitness {
    pub m: u64,
    /// `(-1)^n P(-m)`.
    pub scalar_from_polynomial: Rat,
    /// `#((mΔ)° ∩ Z^n)`.
    pub interior_count: Int,
    /// `(-1)^{n+1} P^x(-m)`.
    pub vector_from_polynomial: Vec<Rat>,
    /// `Σ x` over `(mΔ)° ∩ Z^n`.
    pub interior_vector_sum: Vec<Int>,
    pub scalar_holds: bool,
    pub vector_holds: bool,
}

impl ReciprocityWitness {
    pub fn holds(&self) -> bool {
        self.scalar_holds && self.vector_holds
    }
}

/// Compares the polynomials evaluated at `-m` with enumerated interior data
/// of `mΔ`.
pub fn reciprocity_check(p: &Polytope, m: u64, report: &EhrhartReport) -> Result<ReciprocityWitness> {
    if m == 0 {
        return Err(Error::InvalidInput("reciprocity is checked for m >= 1".into()));
    }
    let n = p.dim();
    let mi = i64::try_from(m).map_err(|_| Error::Overflow)?;
    let sample = match report.samples.iter().find(|s| s.m == m) {
        Some(s) => s.clone(),
        None => Enumerator::new(p)?.sample(mi)?,
    };
    let neg = Rat::from_integer(Int::from(-mi));
    let scalar_from_polynomial = sign_power(n) * report.polynomial.eval(&neg);
    let vector_from_polynomial: Vec<Rat> =
        report.vector_polynomial.eval(&neg).into_iter().map(|x| sign_power(n + 1) * x).collect();
    let scalar_holds = scalar_from_polynomial == Rat::from_integer(sample.interior_count.clone());
    let vector_holds =
        vector_from_polynomial.iter().zip(&sample.interior_vector_sum).all(|(a, b)| *a == Rat::from_integer(b.clone()));
    Ok(ReciprocityWitness {
        m,
        scalar_from_polynomial,
        interior_count: sample.interior_count,
        vector_from_polynomial,
        interior_vector_sum: sample.interior_vector_sum,
        scalar_holds,
        vector_holds,
    })
}

/// `P(m) = (-1)^n P(-m-1)` as an identity of polynomials.
pub fn hibi_identity_holds(q: &RatPoly, n: usize) -> bool {
    let reflected = q.compose(&RatPoly::linear(-Rat::one(), -Rat::one())).scale(&sign_power(n));
    reflected == *q
}

/// Reflexivity through the Ehrhart polynomial. The origin must be a point
/// of `p`.
pub fn hibi_reflexive(p: &Polytope) -> Result<bool> {
    let origin = vec![Rat::zero(); p.dim()];
    if !p.contains(&origin) {
        return Err(Error::OriginNotInPolytope);
    }
    Ok(hibi_identity_holds(&ehrhart(p)?, p.dim()))
}
