//! Exact double-description conversion between vertex and facet form.
//!
//! Both directions reduce to computing the extreme rays of a pointed
//! polyhedral cone `{y : A y >= 0}`. Constraints are inserted one at a time
//! (Motzkin's incremental scheme); new rays are formed only from pairs that
//! pass the combinatorial adjacency test, so no ray is ever redundant.
//! All arithmetic is on primitive integer vectors.

use fixedbitset::FixedBitSet;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    affine_rank, clear_denominators, gcd_all, int_to_rat_vec, invert_rat, nullspace, rank, Int, Rat, RatVec,
};

#[derive(Clone)]
struct Ray {
    v: Vec<Int>,
    zeros: FixedBitSet,
}

fn eval(row: &[Int], v: &[Int]) -> Int {
    row.iter().zip(v).fold(Int::zero(), |acc, (a, b)| acc + a * b)
}

fn normalize(v: Vec<Int>) -> Vec<Int> {
    let g = gcd_all(&v);
    if g.is_zero() || g.is_one() {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

/// Extreme rays of `{y in R^d : row·y >= 0 for every row}`.
///
/// The rows must span `R^d` (pointed cone); otherwise `DegenerateSystem`.
pub(crate) fn extreme_rays(rows: &[Vec<Int>], d: usize) -> Result<Vec<Vec<Int>>> {
    // Greedy choice of d independent rows for the starting simplicial cone.
    let mut basis: Vec<usize> = Vec::with_capacity(d);
    let mut basis_rows: Vec<RatVec> = Vec::with_capacity(d);
    for (i, r) in rows.iter().enumerate() {
        if basis.len() == d {
            break;
        }
        basis_rows.push(int_to_rat_vec(r));
        if rank(&basis_rows) == basis_rows.len() {
            basis.push(i);
        } else {
            basis_rows.pop();
        }
    }
    if basis.len() < d {
        return Err(Error::DegenerateSystem);
    }
    let inv = invert_rat(&basis_rows).ok_or(Error::DegenerateSystem)?;

    let nrows = rows.len();
    let mut processed = FixedBitSet::with_capacity(nrows);
    for &b in &basis {
        processed.insert(b);
    }
    let mut rays: Vec<Ray> = (0..d)
        .map(|j| {
            let col: RatVec = (0..d).map(|i| inv[i][j].clone()).collect();
            let mut zeros = FixedBitSet::with_capacity(nrows);
            for (k, &b) in basis.iter().enumerate() {
                if k != j {
                    zeros.insert(b);
                }
            }
            Ray { v: clear_denominators(&col), zeros }
        })
        .collect();

    for (h, row) in rows.iter().enumerate() {
        if processed.contains(h) {
            continue;
        }
        processed.insert(h);
        let vals: Vec<Int> = rays.iter().map(|r| eval(row, &r.v)).collect();
        if vals.iter().all(|s| !s.is_negative()) {
            for (r, s) in rays.iter_mut().zip(&vals) {
                if s.is_zero() {
                    r.zeros.insert(h);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();

        let mut created = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let mut common = rays[p].zeros.clone();
                common.intersect_with(&rays[n].zeros);
                if common.count_ones(..) + 2 < d {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(k, r)| k == p || k == n || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let sp = &vals[p];
                let sn = -&vals[n];
                let v: Vec<Int> = rays[n].v.iter().zip(&rays[p].v).map(|(a, b)| sp * a + &sn * b).collect();
                common.insert(h);
                created.push(Ray { v: normalize(v), zeros: common });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (mut r, s) in rays.into_iter().zip(vals) {
            if s.is_negative() {
                continue;
            }
            if s.is_zero() {
                r.zeros.insert(h);
            }
            next.push(r);
        }
        next.extend(created);
        rays = next;
    }

    let mut out: Vec<Vec<Int>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

pub(crate) fn dedup_points(points: &[RatVec]) -> Vec<RatVec> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    pts
}

/// Facets `normal·x <= offset` of the convex hull of `points` in `R^n`, with
/// primitive integer normals.
pub(crate) fn facets_of_points(points: &[RatVec], n: usize) -> Result<Vec<(Vec<Int>, Rat)>> {
    if let Some(p) = points.iter().find(|p| p.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: p.len() });
    }
    let pts = dedup_points(points);
    let r = if pts.is_empty() { 0 } else { affine_rank(&pts) };
    if pts.is_empty() || r < n {
        return Err(Error::NotFullDimensional { rank: r, dim: n });
    }
    // (b, a) is valid iff b - a·v >= 0 for every point v.
    let rows: Vec<Vec<Int>> = pts
        .iter()
        .map(|v| {
            let row: RatVec = std::iter::once(Rat::one()).chain(v.iter().map(|x| -x)).collect();
            clear_denominators(&row)
        })
        .collect();
    let rays = extreme_rays(&rows, n + 1)?;
    let mut facets = Vec::with_capacity(rays.len());
    for ray in rays {
        let normal = &ray[1..];
        let g = gcd_all(normal);
        if g.is_zero() {
            return Err(Error::Internal("trivial inequality among hull facets".into()));
        }
        facets.push((normal.iter().map(|x| x / &g).collect(), Rat::new(ray[0].clone(), g)));
    }
    facets.sort();
    Ok(facets)
}

/// Vertices of `{x : normal·x <= offset}` in `R^n`.
pub(crate) fn vertices_of_halfspaces(ineqs: &[(Vec<Int>, Rat)], n: usize) -> Result<Vec<RatVec>> {
    let mut normals: Vec<Vec<Int>> = Vec::with_capacity(ineqs.len());
    let mut offsets: Vec<Rat> = Vec::with_capacity(ineqs.len());
    for (a, b) in ineqs {
        if a.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: a.len() });
        }
        if a.iter().all(Zero::is_zero) {
            if b.is_negative() {
                return Err(Error::Empty);
            }
            continue;
        }
        normals.push(a.clone());
        offsets.push(b.clone());
    }

    // Directions orthogonal to every normal form the lineality space; pin the
    // region to the slice through the origin so feasibility can still be read
    // off, then report it as unbounded.
    let lineality = nullspace(&normals.iter().map(|a| int_to_rat_vec(a)).collect::<Vec<_>>(), n);
    for l in &lineality {
        normals.push(l.clone());
        offsets.push(Rat::zero());
        normals.push(l.iter().map(|x| -x).collect());
        offsets.push(Rat::zero());
    }

    // (t, x) with t >= 0 and b t - a·x >= 0.
    let mut rows: Vec<Vec<Int>> = normals
        .iter()
        .zip(&offsets)
        .map(|(a, b)| {
            let row: RatVec =
                std::iter::once(b.clone()).chain(a.iter().map(|x| -Rat::from_integer(x.clone()))).collect();
            clear_denominators(&row)
        })
        .collect();
    let mut t_row = vec![Int::zero(); n + 1];
    t_row[0] = Int::one();
    rows.push(t_row);

    let rays = extreme_rays(&rows, n + 1)?;
    let (bounded, recession): (Vec<_>, Vec<_>) = rays.into_iter().partition(|r| r[0].is_positive());
    if bounded.is_empty() {
        return Err(Error::Empty);
    }
    if !lineality.is_empty() || !recession.is_empty() {
        return Err(Error::Unbounded);
    }
    Ok(bounded.into_iter().map(|r| r[1..].iter().map(|x| Rat::new(x.clone(), r[0].clone())).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, rat_vec};

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn square_facets() {
        let pts: Vec<RatVec> = [[0, 0], [1, 0], [0, 1], [1, 1]].iter().map(|p| rat_vec(p)).collect();
        let f = facets_of_points(&pts, 2).unwrap();
        assert_eq!(
            f,
            vec![
                (iv(&[-1, 0]), rat(0, 1)),
                (iv(&[0, -1]), rat(0, 1)),
                (iv(&[0, 1]), rat(1, 1)),
                (iv(&[1, 0]), rat(1, 1)),
            ]
        );
    }

    #[test]
    fn cube_facets_with_interior_point() {
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(rat_vec(&[2 * x, 2 * y, 2 * z]));
                }
            }
        }
        pts.push(rat_vec(&[1, 1, 1]));
        let f = facets_of_points(&pts, 3).unwrap();
        assert_eq!(f.len(), 6);
    }

    #[test]
    fn rational_triangle_offsets() {
        let pts = vec![rat_vec(&[-1, 0]), rat_vec(&[0, -1]), vec![rat(1, 3), rat(1, 3)]];
        let f = facets_of_points(&pts, 2).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.contains(&(iv(&[-1, -1]), rat(1, 1))));
    }

    #[test]
    fn segment_in_one_dimension() {
        let pts = vec![rat_vec(&[3]), rat_vec(&[-2]), rat_vec(&[1])];
        let f = facets_of_points(&pts, 1).unwrap();
        assert_eq!(f, vec![(iv(&[-1]), rat(2, 1)), (iv(&[1]), rat(3, 1))]);
    }

    #[test]
    fn collinear_points_rejected() {
        let pts = vec![rat_vec(&[0, 0]), rat_vec(&[1, 1]), rat_vec(&[2, 2])];
        assert_eq!(facets_of_points(&pts, 2), Err(Error::NotFullDimensional { rank: 1, dim: 2 }));
    }

    #[test]
    fn halfspace_vertices() {
        let h = vec![(iv(&[-1, 0]), rat(0, 1)), (iv(&[0, -1]), rat(0, 1)), (iv(&[1, 1]), rat(1, 1))];
        let mut v = vertices_of_halfspaces(&h, 2).unwrap();
        v.sort();
        assert_eq!(v, vec![rat_vec(&[0, 0]), rat_vec(&[0, 1]), rat_vec(&[1, 0])]);
    }

    #[test]
    fn halfspace_unbounded_and_empty() {
        let quadrant = vec![(iv(&[-1, 0]), rat(0, 1)), (iv(&[0, -1]), rat(0, 1))];
        assert_eq!(vertices_of_halfspaces(&quadrant, 2), Err(Error::Unbounded));
        let strip = vec![(iv(&[1, 0]), rat(1, 1)), (iv(&[-1, 0]), rat(0, 1))];
        assert_eq!(vertices_of_halfspaces(&strip, 2), Err(Error::Unbounded));
        let empty = vec![(iv(&[1, 0]), rat(0, 1)), (iv(&[-1, 0]), rat(-1, 1))];
        assert_eq!(vertices_of_halfspaces(&empty, 2), Err(Error::Empty));
        let empty_box = vec![
            (iv(&[1, 0]), rat(0, 1)),
            (iv(&[-1, 0]), rat(-1, 1)),
            (iv(&[0, 1]), rat(1, 1)),
            (iv(&[0, -1]), rat(0, 1)),
        ];
        assert_eq!(vertices_of_halfspaces(&empty_box, 2), Err(Error::Empty));
    }
}
