//! Exact integer and rational linear algebra.
//!
//! Every quantity in the toolkit is an arbitrary-precision integer or a
//! rational in lowest terms. Nothing here ever rounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;
/// A point or vector of exact rationals; its length is the ambient dimension.
pub type RatVec = Vec<Rat>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(v: impl Into<Int>) -> Rat {
    Rat::from_integer(v.into())
}

pub fn rat_vec(v: &[i64]) -> RatVec {
    v.iter().map(|&x| rat_int(x)).collect()
}

pub fn int_to_rat_vec(v: &[Int]) -> RatVec {
    v.iter().cloned().map(Rat::from_integer).collect()
}

/// Integer coordinates of a rational vector, or `None` if any is fractional.
pub fn to_int_vec(v: &[Rat]) -> Option<Vec<Int>> {
    v.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
}

/// Parses `"p/q"` or a decimal integer into a rational in lowest terms.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("invalid rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().map_err(|_| bad())?;
            let d: Int = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in '{s}'")));
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Canonical string form: `"n"` for integers, `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_int_rat(a: &[Int], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + y * x)
}

pub fn gcd_all<'a>(v: impl IntoIterator<Item = &'a Int>) -> Int {
    v.into_iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divides an integer vector by the gcd of its coordinates. Direction (and
/// hence the sign of every coordinate) is preserved.
pub fn primitive(v: &[Int]) -> Result<Vec<Int>> {
    let g = gcd_all(v);
    if g.is_zero() {
        return Err(Error::ZeroDirection);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Positive rescaling of a rational vector to a primitive integer vector.
pub fn clear_denominators(v: &[Rat]) -> Vec<Int> {
    let l = v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<Int> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = gcd_all(&ints);
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: Vec<Vec<Int>>,
}

impl IntMat {
    pub fn new(rows: Vec<Vec<Int>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: r.len() });
        }
        Ok(Self { rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Int>]) -> Result<Self> {
        let n = cols.len();
        let rows = (0..n)
            .map(|i| {
                cols.iter()
                    .map(|c| c.get(i).cloned().ok_or(Error::DimensionMismatch { expected: n, found: c.len() }))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect()).collect();
        Self { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.rows[i][j]
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| {
                (0..n).map(|j| (0..n).fold(Int::zero(), |acc, k| acc + &self.rows[i][k] * &other.rows[k][j])).collect()
            })
            .collect();
        IntMat { rows }
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        self.rows.iter().map(|r| r.iter().zip(v).fold(Int::zero(), |acc, (a, b)| acc + a * b)).collect()
    }

    pub fn mul_rat_vec(&self, v: &[Rat]) -> RatVec {
        self.rows.iter().map(|r| dot_int_rat(r, v)).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let n = self.dim();
        IntMat { rows: (0..n).map(|j| (0..n).map(|i| self.rows[i][j].clone()).collect()).collect() }
    }

    pub fn to_rat(&self) -> Vec<Vec<Rat>> {
        self.rows.iter().map(|r| int_to_rat_vec(r)).collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        det(self)
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Inverse over the rationals; `None` when singular.
    pub fn inverse_rat(&self) -> Option<Vec<Vec<Rat>>> {
        invert_rat(&self.to_rat())
    }

    /// Integer inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<IntMat> {
        if !self.is_unimodular() {
            return Err(Error::InvalidInput("matrix is not unimodular".into()));
        }
        let inv = self.inverse_rat().ok_or(Error::DegenerateSystem)?;
        let rows = inv
            .into_iter()
            .map(|r| to_int_vec(&r).ok_or_else(|| Error::Internal("unimodular inverse not integral".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMat { rows })
    }
}

pub fn det(m: &IntMat) -> Int {
    let n = m.dim();
    if n == 0 {
        return Int::one();
    }
    let mut a = m.rows.clone();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Reduces `a` to reduced row echelon form in place; returns the pivot columns.
fn echelon(a: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut a = rows.to_vec();
    echelon(&mut a).len()
}

pub fn rank_int(rows: &[Vec<Int>]) -> usize {
    rank(&rows.iter().map(|r| int_to_rat_vec(r)).collect::<Vec<_>>())
}

/// Dimension of the affine hull of a nonempty point set.
pub fn affine_rank(points: &[RatVec]) -> usize {
    match points.split_first() {
        None => 0,
        Some((base, rest)) => {
            let diffs: Vec<RatVec> = rest.iter().map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect()).collect();
            rank(&diffs)
        }
    }
}

/// Basis of the right nullspace {x : rows·x = 0}, as primitive integer vectors.
pub fn nullspace(rows: &[Vec<Rat>], cols: usize) -> Vec<Vec<Int>> {
    let mut a = rows.to_vec();
    let pivots = echelon(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); cols];
            x[f] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -a[r][f].clone();
            }
            clear_denominators(&x)
        })
        .collect()
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn det_rat(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            let (top, bottom) = m.split_at_mut(i);
            for (x, p) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                *x -= &f * p;
            }
        }
    }
    det
}

/// Exact solution of `a·x = b` for nonsingular square `a`.
pub fn solve_rational(a: &[Vec<Rat>], b: &[Rat]) -> Result<RatVec> {
    let n = a.len();
    if b.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.len() });
    }
    if let Some(r) = a.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: r.len() });
    }
    let mut aug: Vec<Vec<Rat>> =
        a.iter().zip(b).map(|(r, bi)| r.iter().cloned().chain(std::iter::once(bi.clone())).collect()).collect();
    let pivots = echelon(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::DegenerateSystem);
    }
    Ok(aug.into_iter().map(|r| r[n].clone()).collect())
}

pub fn invert_rat(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Random unimodular matrix built from a signed permutation and a handful of
/// elementary row operations with small multipliers.
pub fn random_unimodular<R: Rng>(n: usize, rng: &mut R) -> IntMat {
    let mut rows = IntMat::identity(n).rows;
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        rows.swap(i, j);
    }
    for r in rows.iter_mut() {
        if rng.random_bool(0.5) {
            for x in r.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    if n > 1 {
        for _ in 0..2 * n {
            let i = rng.random_range(0..n);
            let mut j = rng.random_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let k = int(rng.random_range(-2..=2));
            let src = rows[j].clone();
            for (x, y) in rows[i].iter_mut().zip(src) {
                *x += &k * y;
            }
        }
    }
    IntMat { rows }
}

pub fn random_int_vec<R: Rng>(n: usize, bound: i64, rng: &mut R) -> Vec<Int> {
    (0..n).map(|_| int(rng.random_range(-bound..=bound))).collect()
}
