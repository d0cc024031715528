//! Lattice points of dilations `mΔ`: counts and coordinate sums, closed and
//! interior.
//!
//! Coordinates are fixed left to right. The admissible range of coordinate
//! `k` given the fixed prefix is read off the facets of the projection of
//! `mΔ` onto the first `k + 1` coordinates, so every visited prefix extends
//! to at least one real point and no branch is wasted. The innermost
//! coordinate is never iterated: its integer interval is summed in closed
//! form. Machine integers (`i128`) are used inside the walk; the inputs are
//! checked to fit before it starts.

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{Int, RatVec};
use crate::hull;
use crate::polytope::Polytope;

/// Lattice-point data of one dilation `mΔ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DilationSample {
    pub m: u64,
    pub count: Int,
    pub vector_sum: Vec<Int>,
    pub interior_count: Int,
    pub interior_vector_sum: Vec<Int>,
}

type Ineq = (Vec<i128>, i128);

fn to_i128(x: &Int) -> Result<i128> {
    x.to_i128().ok_or(Error::Overflow)
}

fn floor_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: i128, b: i128) -> i128 {
    -floor_div(-a, b)
}

/// Precomputed projection facets for repeated enumeration of one polytope.
#[derive(Debug, Clone)]
pub struct Enumerator {
    dim: usize,
    /// `levels[k]`: facets of the projection onto coordinates `0..=k`.
    levels: Vec<Vec<Ineq>>,
}

#[derive(Debug, Clone, Default)]
struct Acc {
    count: i128,
    sum: Vec<i128>,
    interior_count: i128,
    interior_sum: Vec<i128>,
}

impl Acc {
    fn new(n: usize) -> Self {
        Acc { count: 0, sum: vec![0; n], interior_count: 0, interior_sum: vec![0; n] }
    }

    fn merge(mut self, other: Acc) -> Acc {
        self.count += other.count;
        self.interior_count += other.interior_count;
        for (a, b) in self.sum.iter_mut().zip(other.sum) {
            *a += b;
        }
        for (a, b) in self.interior_sum.iter_mut().zip(other.interior_sum) {
            *a += b;
        }
        self
    }

    /// Adds the run `prefix × [lo, hi]`.
    fn add_run(count: &mut i128, sum: &mut [i128], prefix: &[i128], lo: i128, hi: i128) {
        if lo > hi {
            return;
        }
        let len = hi - lo + 1;
        *count += len;
        for (s, x) in sum.iter_mut().zip(prefix) {
            *s += x * len;
        }
        *sum.last_mut().expect("dimension is positive") += (lo + hi) * len / 2;
    }
}

impl Enumerator {
    pub fn new(p: &Polytope) -> Result<Self> {
        if !p.is_lattice() {
            return Err(Error::NonLattice);
        }
        let n = p.dim();
        let mut levels = Vec::with_capacity(n);
        for k in 1..n {
            let projected: Vec<RatVec> = p.vertices().iter().map(|v| v[..k].to_vec()).collect();
            let facets = hull::facets_of_points(&projected, k)?;
            levels.push(Self::machine_ineqs(facets.iter().map(|(a, b)| (a, b)))?);
        }
        levels.push(Self::machine_ineqs(p.facets().iter().map(|f| (&f.normal, &f.offset)))?);
        Ok(Self { dim: n, levels })
    }

    fn machine_ineqs<'a>(facets: impl Iterator<Item = (&'a Vec<Int>, &'a crate::exact::Rat)>) -> Result<Vec<Ineq>> {
        facets
            .map(|(a, b)| {
                if !b.is_integer() {
                    return Err(Error::Internal("lattice polytope facet with fractional offset".into()));
                }
                let normal = a.iter().map(to_i128).collect::<Result<Vec<_>>>()?;
                Ok((normal, to_i128(&b.to_integer())?))
            })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Scaled right-hand sides `m·b` for every level.
    fn scaled(&self, m: i128) -> Result<Vec<Vec<Ineq>>> {
        self.levels
            .iter()
            .map(|lvl| lvl.iter().map(|(a, b)| Ok((a.clone(), b.checked_mul(m).ok_or(Error::Overflow)?))).collect())
            .collect()
    }

    /// Closed integer range of coordinate `k` given the prefix.
    fn range(ineqs: &[Ineq], prefix: &[i128], k: usize) -> (i128, i128) {
        let mut lo = i128::MIN;
        let mut hi = i128::MAX;
        for (a, b) in ineqs {
            let c = a[k];
            if c == 0 {
                continue;
            }
            let r = b - a[..k].iter().zip(prefix).map(|(x, y)| x * y).sum::<i128>();
            if c > 0 {
                hi = hi.min(floor_div(r, c));
            } else {
                lo = lo.max(ceil_div(r, c));
            }
        }
        (lo, hi)
    }

    /// Integer range of the last coordinate for points strictly inside.
    fn interior_range(ineqs: &[Ineq], prefix: &[i128], k: usize) -> Option<(i128, i128)> {
        let mut lo = i128::MIN;
        let mut hi = i128::MAX;
        for (a, b) in ineqs {
            // Integer data: a·x < b  <=>  a·x <= b - 1.
            let r = b - 1 - a[..k].iter().zip(prefix).map(|(x, y)| x * y).sum::<i128>();
            let c = a[k];
            if c == 0 {
                if r < 0 {
                    return None;
                }
            } else if c > 0 {
                hi = hi.min(floor_div(r, c));
            } else {
                lo = lo.max(ceil_div(r, c));
            }
        }
        Some((lo, hi))
    }

    fn walk(&self, ineqs: &[Vec<Ineq>], prefix: &mut Vec<i128>, acc: &mut Acc) {
        let k = prefix.len();
        let last = self.dim - 1;
        let (lo, hi) = Self::range(&ineqs[k], prefix, k);
        if k == last {
            Acc::add_run(&mut acc.count, &mut acc.sum, prefix, lo, hi);
            if let Some((ilo, ihi)) = Self::interior_range(&ineqs[k], prefix, k) {
                Acc::add_run(&mut acc.interior_count, &mut acc.interior_sum, prefix, ilo, ihi);
            }
            return;
        }
        for x in lo..=hi {
            prefix.push(x);
            self.walk(ineqs, prefix, acc);
            prefix.pop();
        }
    }

    /// Enumerates `mΔ`, splitting the first coordinate's range into `parts`
    /// contiguous chunks processed in parallel. The result does not depend
    /// on `parts`.
    pub fn sample_split(&self, m: i64, parts: usize) -> Result<DilationSample> {
        if m < 0 {
            return Err(Error::NegativeDilation);
        }
        let n = self.dim;
        let ineqs = self.scaled(m as i128)?;
        let acc = if n == 1 {
            let mut acc = Acc::new(n);
            self.walk(&ineqs, &mut Vec::new(), &mut acc);
            acc
        } else {
            let (lo, hi) = Self::range(&ineqs[0], &[], 0);
            let parts = parts.max(1) as i128;
            let width = if hi >= lo { (hi - lo + 1 + parts - 1) / parts } else { 0 };
            (0..parts)
                .into_par_iter()
                .map(|i| {
                    let mut acc = Acc::new(n);
                    if width == 0 {
                        return acc;
                    }
                    let start = lo + i * width;
                    let end = (start + width - 1).min(hi);
                    let mut prefix = Vec::with_capacity(n);
                    for x in start..=end {
                        prefix.push(x);
                        self.walk(&ineqs, &mut prefix, &mut acc);
                        prefix.pop();
                    }
                    acc
                })
                .reduce(|| Acc::new(n), Acc::merge)
        };
        Ok(DilationSample {
            m: m as u64,
            count: Int::from(acc.count),
            vector_sum: acc.sum.into_iter().map(Int::from).collect(),
            interior_count: Int::from(acc.interior_count),
            interior_vector_sum: acc.interior_sum.into_iter().map(Int::from).collect(),
        })
    }

    pub fn sample(&self, m: i64) -> Result<DilationSample> {
        self.sample_split(m, default_parts())
    }
}

fn default_parts() -> usize {
    4 * rayon::current_num_threads()
}

/// Lattice-point data of `mΔ` for `m >= 0`.
pub fn enumerate(p: &Polytope, m: i64) -> Result<DilationSample> {
    if m < 0 {
        return Err(Error::NegativeDilation);
    }
    Enumerator::new(p)?.sample(m)
}

/// Same as [`enumerate`] with an explicit number of parallel chunks.
pub fn enumerate_split(p: &Polytope, m: i64, parts: usize) -> Result<DilationSample> {
    Enumerator::new(p)?.sample_split(m, parts)
}

/// Samples for `m = 0, 1, ..., m_max`.
pub fn sample_range(p: &Polytope, m_max: u64) -> Result<Vec<DilationSample>> {
    let e = Enumerator::new(p)?;
    let m_max = i64::try_from(m_max).map_err(|_| Error::Overflow)?;
    (0..=m_max).into_par_iter().map(|m| e.sample(m)).collect()
}
