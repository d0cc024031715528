//! Univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::exact::{format_rat, Int, Rat};

/// Coefficients in ascending degree; trailing zeros are trimmed, so the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `m`.
    pub fn var() -> Self {
        Self::new(vec![Rat::zero(), Rat::one()])
    }

    /// `a·m + b`.
    pub fn linear(a: Rat, b: Rat) -> Self {
        Self::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `m^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rat {
        self.eval(&Rat::from_integer(Int::from(x)))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `self(inner(m))`.
    pub fn compose(&self, inner: &RatPoly) -> Self {
        self.coeffs.iter().rev().fold(RatPoly::zero(), |acc, c| &(&acc * inner) + &RatPoly::constant(c.clone()))
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a RatPoly>) -> Self {
        factors.into_iter().fold(RatPoly::constant(Rat::one()), |acc, f| &acc * f)
    }

    /// Polynomial of degree `< values.len()` taking `values[i]` at `m = i`,
    /// built from Newton forward differences.
    pub fn interpolate_consecutive(values: &[Rat]) -> Self {
        let mut diffs = values.to_vec();
        let mut newton = Vec::with_capacity(values.len());
        while let Some(first) = diffs.first().cloned() {
            newton.push(first);
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        // sum_k Δ^k f(0) · C(m, k)
        let mut result = RatPoly::zero();
        let mut binom = RatPoly::constant(Rat::one());
        for (k, d) in newton.iter().enumerate() {
            result = &result + &binom.scale(d);
            let k_int = Rat::from_integer(Int::from(k as i64));
            let next = RatPoly::linear(Rat::one(), -k_int.clone());
            binom = (&binom * &next).scale(&(k_int + Rat::one()).recip());
        }
        result
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rat).collect()
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{}", format_rat(&a))?;
            }
            match k {
                0 => {}
                1 => write!(f, "m")?,
                _ => write!(f, "m^{k}")?,
            }
        }
        Ok(())
    }
}

/// A vector of polynomials, one per ambient coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VecPoly {
    components: Vec<RatPoly>,
}

impl VecPoly {
    pub fn new(components: Vec<RatPoly>) -> Self {
        Self { components }
    }

    pub fn components(&self) -> &[RatPoly] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn eval(&self, x: &Rat) -> Vec<Rat> {
        self.components.iter().map(|p| p.eval(x)).collect()
    }

    pub fn eval_int(&self, x: i64) -> Vec<Rat> {
        self.components.iter().map(|p| p.eval_int(x)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(RatPoly::is_zero)
    }

    /// Coefficient vector of `m^k`.
    pub fn coeff(&self, k: usize) -> Vec<Rat> {
        self.components.iter().map(|p| p.coeff(k)).collect()
    }

    /// `q(m) · v` for a scalar polynomial and a constant vector.
    pub fn from_scalar_times(q: &RatPoly, v: &[Rat]) -> Self {
        Self::new(v.iter().map(|x| q.scale(x)).collect())
    }

    pub fn sub(&self, other: &VecPoly) -> VecPoly {
        VecPoly::new(self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect())
    }
}
