//! Full-dimensional convex polytopes carrying vertex form, facet form and
//! vertex-facet incidence, plus duality and affine-unimodular maps.

use num_traits::{Signed, Zero};

use crate::enumerate;
use crate::error::{Error, Result};
use crate::exact::{dot_int_rat, int_to_rat_vec, primitive, rank_int, to_int_vec, Int, IntMat, Rat, RatVec};
use crate::hull;

/// Inequality `normal·x <= offset` with a primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<Int>,
    pub offset: Rat,
}

impl Facet {
    pub fn slack(&self, x: &[Rat]) -> Rat {
        &self.offset - dot_int_rat(&self.normal, x)
    }
}

/// A full-dimensional convex polytope in `R^n`.
///
/// Vertices and facets are kept in lexicographic order, so two polytopes
/// describe the same set exactly when they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<RatVec>,
    facets: Vec<Facet>,
    incidence: Vec<Vec<usize>>,
}

impl Polytope {
    /// Convex hull of a point set. Redundant and repeated points are dropped.
    pub fn from_vertices(points: &[RatVec]) -> Result<Self> {
        let dim = points.first().map(Vec::len).ok_or_else(|| Error::InvalidInput("empty point list".into()))?;
        if dim == 0 {
            return Err(Error::InvalidInput("ambient dimension must be positive".into()));
        }
        let facets: Vec<Facet> =
            hull::facets_of_points(points, dim)?.into_iter().map(|(normal, offset)| Facet { normal, offset }).collect();
        let vertices: Vec<RatVec> = hull::dedup_points(points)
            .into_iter()
            .filter(|v| {
                let tight: Vec<Vec<Int>> =
                    facets.iter().filter(|f| f.slack(v).is_zero()).map(|f| f.normal.clone()).collect();
                rank_int(&tight) == dim
            })
            .collect();
        Ok(Self::from_parts(dim, vertices, facets))
    }

    pub fn from_int_vertices(points: &[Vec<i64>]) -> Result<Self> {
        let pts: Vec<RatVec> = points.iter().map(|p| crate::exact::rat_vec(p)).collect();
        Self::from_vertices(&pts)
    }

    /// Region `{x : normal·x <= offset}` for every inequality given.
    pub fn from_halfspaces(ineqs: &[(Vec<Int>, Rat)]) -> Result<Self> {
        let dim =
            ineqs.first().map(|(a, _)| a.len()).ok_or_else(|| Error::InvalidInput("empty inequality list".into()))?;
        if dim == 0 {
            return Err(Error::InvalidInput("ambient dimension must be positive".into()));
        }
        let vertices = hull::vertices_of_halfspaces(ineqs, dim)?;
        Self::from_vertices(&vertices)
    }

    /// Assumes both lists are correct descriptions of the same polytope.
    fn from_parts(dim: usize, mut vertices: Vec<RatVec>, mut facets: Vec<Facet>) -> Self {
        vertices.sort();
        facets.sort();
        let incidence = vertices
            .iter()
            .map(|v| facets.iter().enumerate().filter(|(_, f)| f.slack(v).is_zero()).map(|(i, _)| i).collect())
            .collect();
        Self { dim, vertices, facets, incidence }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Indices of the facets tight at each vertex.
    pub fn incidence(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(|v| v.iter().all(|x| x.is_integer()))
    }

    pub fn lattice_vertices(&self) -> Result<Vec<Vec<Int>>> {
        self.vertices.iter().map(|v| to_int_vec(v).ok_or(Error::NonLattice)).collect()
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.facets.iter().all(|f| !f.slack(x).is_negative())
    }

    pub fn contains_in_interior(&self, x: &[Rat]) -> bool {
        self.facets.iter().all(|f| f.slack(x).is_positive())
    }

    /// Vertex indices joined to vertex `v` by an edge: the facets tight at
    /// both endpoints must have normals of rank `n - 1`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let tight_v = &self.incidence[v];
        (0..self.vertices.len())
            .filter(|&w| w != v)
            .filter(|&w| {
                let common: Vec<Vec<Int>> = tight_v
                    .iter()
                    .filter(|i| self.incidence[w].contains(i))
                    .map(|&i| self.facets[i].normal.clone())
                    .collect();
                rank_int(&common) == self.dim - 1
            })
            .collect()
    }

    /// Primitive integer direction of every edge leaving vertex `v`, in
    /// canonical neighbor order.
    pub fn edges_at_vertex(&self, v: usize) -> Result<Vec<Vec<Int>>> {
        let lattice = self.lattice_vertices()?;
        self.neighbors(v)
            .into_iter()
            .map(|w| {
                let d: Vec<Int> = lattice[w].iter().zip(&lattice[v]).map(|(a, b)| a - b).collect();
                primitive(&d)
            })
            .collect()
    }

    /// `{x : <x, y> <= 1 for all y in self}`; requires the origin in the interior.
    pub fn dual(&self) -> Result<Self> {
        if self.facets.iter().any(|f| !f.offset.is_positive()) {
            return Err(Error::OriginNotInterior);
        }
        let pts: Vec<RatVec> = self
            .facets
            .iter()
            .map(|f| f.normal.iter().map(|a| Rat::from_integer(a.clone()) / &f.offset).collect())
            .collect();
        Self::from_vertices(&pts)
    }

    /// Image `A(self) + c`.
    pub fn apply_map(&self, t: &AffineUnimodularMap) -> Result<Self> {
        if t.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: t.dim() });
        }
        let inv_t = t.linear.inverse_unimodular()?.transpose();
        let shift = int_to_rat_vec(&t.translation);
        let vertices = self.vertices.iter().map(|v| t.apply_rat(v)).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let normal = inv_t.mul_vec(&f.normal);
                let offset = &f.offset + dot_int_rat(&normal, &shift);
                Facet { normal, offset }
            })
            .collect();
        Ok(Self::from_parts(self.dim, vertices, facets))
    }

    pub fn translate(&self, c: &[Int]) -> Result<Self> {
        self.apply_map(&AffineUnimodularMap::translation(c.to_vec()))
    }

    /// The dilation `k·self` for a positive integer `k`.
    pub fn dilate(&self, k: &Int) -> Result<Self> {
        if !k.is_positive() {
            return Err(Error::InvalidInput("dilation factor must be positive".into()));
        }
        let kr = Rat::from_integer(k.clone());
        let vertices = self.vertices.iter().map(|v| v.iter().map(|x| x * &kr).collect()).collect();
        let facets = self.facets.iter().map(|f| Facet { normal: f.normal.clone(), offset: &f.offset * &kr }).collect();
        Ok(Self::from_parts(self.dim, vertices, facets))
    }

    /// Moves the unique interior lattice point to the origin. Returns the
    /// translated polytope together with the translation vector applied.
    pub fn translate_interior_point_to_origin(&self) -> Result<(Self, Vec<Int>)> {
        let sample = enumerate::enumerate(self, 1)?;
        if sample.interior_count != Int::from(1) {
            return Err(Error::InteriorPointNotUnique { count: sample.interior_count.to_string() });
        }
        let shift: Vec<Int> = sample.interior_vector_sum.iter().map(|x| -x).collect();
        Ok((self.translate(&shift)?, shift))
    }
}

/// `x -> A x + c` with `A` an integer matrix of determinant `+1` or `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineUnimodularMap {
    linear: IntMat,
    translation: Vec<Int>,
}

impl AffineUnimodularMap {
    pub fn new(linear: IntMat, translation: Vec<Int>) -> Result<Self> {
        if translation.len() != linear.dim() {
            return Err(Error::DimensionMismatch { expected: linear.dim(), found: translation.len() });
        }
        if !linear.is_unimodular() {
            return Err(Error::InvalidInput(format!(
                "linear part has determinant {}, expected +1 or -1",
                linear.det()
            )));
        }
        Ok(Self { linear, translation })
    }

    pub fn identity(n: usize) -> Self {
        Self { linear: IntMat::identity(n), translation: vec![Int::zero(); n] }
    }

    pub fn translation(c: Vec<Int>) -> Self {
        Self { linear: IntMat::identity(c.len()), translation: c }
    }

    pub fn dim(&self) -> usize {
        self.linear.dim()
    }

    pub fn linear(&self) -> &IntMat {
        &self.linear
    }

    pub fn translation_vector(&self) -> &[Int] {
        &self.translation
    }

    pub fn det(&self) -> Int {
        self.linear.det()
    }

    pub fn apply_rat(&self, x: &[Rat]) -> RatVec {
        self.linear
            .mul_rat_vec(x)
            .into_iter()
            .zip(&self.translation)
            .map(|(y, c)| y + Rat::from_integer(c.clone()))
            .collect()
    }

    pub fn apply_int(&self, x: &[Int]) -> Vec<Int> {
        self.linear.mul_vec(x).into_iter().zip(&self.translation).map(|(y, c)| y + c).collect()
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &AffineUnimodularMap) -> AffineUnimodularMap {
        AffineUnimodularMap { linear: self.linear.mul(&other.linear), translation: self.apply_int(&other.translation) }
    }

    pub fn inverse(&self) -> Result<AffineUnimodularMap> {
        let inv = self.linear.inverse_unimodular()?;
        let translation = inv.mul_vec(&self.translation).into_iter().map(|x| -x).collect();
        Ok(AffineUnimodularMap { linear: inv, translation })
    }

    /// Checks `A(p) + c = q` by mapping every vertex of `p` and comparing
    /// the sorted vertex lists.
    pub fn maps_onto(&self, p: &Polytope, q: &Polytope) -> bool {
        if p.dim() != self.dim() || q.dim() != self.dim() || p.vertices().len() != q.vertices().len() {
            return false;
        }
        let mut image: Vec<RatVec> = p.vertices().iter().map(|v| self.apply_rat(v)).collect();
        image.sort();
        image == q.vertices()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, rat_vec};

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn poly(v: &[&[i64]]) -> Polytope {
        Polytope::from_int_vertices(&v.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn facet(n: &[i64], b: i64) -> Facet {
        Facet { normal: iv(n), offset: rat(b, 1) }
    }

    #[test]
    fn triangle_from_vertices() {
        let p = poly(&[&[0, 0], &[3, 0], &[0, 3]]);
        assert_eq!(p.vertices(), &[rat_vec(&[0, 0]), rat_vec(&[0, 3]), rat_vec(&[3, 0])]);
        assert_eq!(p.facets(), &[facet(&[-1, 0], 0), facet(&[0, -1], 0), facet(&[1, 1], 3)]);
    }

    #[test]
    fn hirzebruch_quadrilateral() {
        let p = poly(&[&[0, 0], &[0, 1], &[1, 1], &[3, 0]]);
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
        assert!(p.facets().contains(&facet(&[1, 2], 3)));
    }

    #[test]
    fn collinear_point_dropped() {
        let p = poly(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]);
        assert_eq!(p.vertices(), &[rat_vec(&[0, 0]), rat_vec(&[0, 1]), rat_vec(&[2, 0])]);
    }

    #[test]
    fn flat_input_rejected() {
        let pts = vec![vec![0, 0], vec![1, 1], vec![2, 2]];
        assert_eq!(Polytope::from_int_vertices(&pts), Err(Error::NotFullDimensional { rank: 1, dim: 2 }));
    }

    #[test]
    fn halfspace_inputs() {
        let h = |n: &[i64], b: i64| (iv(n), rat(b, 1));
        let s = Polytope::from_halfspaces(&[h(&[-1, 0], 0), h(&[0, -1], 0), h(&[1, 1], 1)]).unwrap();
        assert_eq!(s, poly(&[&[0, 0], &[1, 0], &[0, 1]]));
        let r = Polytope::from_halfspaces(&[h(&[-1, 0], 0), h(&[1, 0], 2), h(&[0, -1], 0), h(&[0, 1], 1)]).unwrap();
        assert_eq!(r, poly(&[&[0, 0], &[2, 0], &[0, 1], &[2, 1]]));
        assert_eq!(Polytope::from_halfspaces(&[h(&[-1, 0], 0), h(&[0, -1], 0)]), Err(Error::Unbounded));
    }

    #[test]
    fn edge_directions() {
        let s2 = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let origin = s2.vertices().iter().position(|v| v == &rat_vec(&[0, 0])).unwrap();
        let mut e = s2.edges_at_vertex(origin).unwrap();
        e.sort();
        assert_eq!(e, vec![iv(&[0, 1]), iv(&[1, 0])]);

        let f2 = poly(&[&[0, 0], &[0, 1], &[1, 1], &[3, 0]]);
        let v = f2.vertices().iter().position(|v| v == &rat_vec(&[1, 1])).unwrap();
        let mut e = f2.edges_at_vertex(v).unwrap();
        e.sort();
        assert_eq!(e, vec![iv(&[-1, 0]), iv(&[2, -1])]);

        let t = poly(&[&[0, 0], &[3, 0], &[0, 3]]);
        let v = t.vertices().iter().position(|v| v == &rat_vec(&[3, 0])).unwrap();
        let mut e = t.edges_at_vertex(v).unwrap();
        e.sort();
        assert_eq!(e, vec![iv(&[-1, 0]), iv(&[-1, 1])]);
    }

    #[test]
    fn edges_need_lattice_vertices() {
        let p = Polytope::from_vertices(&[rat_vec(&[0, 0]), rat_vec(&[1, 0]), vec![rat(0, 1), rat(1, 2)]]).unwrap();
        assert_eq!(p.edges_at_vertex(0), Err(Error::NonLattice));
    }

    #[test]
    fn dual_of_centered_simplices() {
        let t3 = poly(&[&[-1, -1], &[2, -1], &[-1, 2]]);
        assert_eq!(t3.dual().unwrap(), poly(&[&[-1, 0], &[0, -1], &[1, 1]]));
        let t5 = poly(&[&[-1, -1], &[4, -1], &[-1, 4]]);
        assert!(t5.dual().unwrap().vertices().contains(&vec![rat(1, 3), rat(1, 3)]));
        let sq = poly(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]]);
        assert_eq!(sq.dual().unwrap(), poly(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]));
        assert_eq!(sq.dual().unwrap().dual().unwrap(), sq);
    }

    #[test]
    fn dual_requires_interior_origin() {
        let s2 = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(s2.dual(), Err(Error::OriginNotInterior));
    }

    #[test]
    fn affine_maps() {
        let s2 = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let shifted = s2.translate(&iv(&[3, 5])).unwrap();
        assert_eq!(shifted, poly(&[&[3, 5], &[4, 5], &[3, 6]]));
        let shear = AffineUnimodularMap::new(IntMat::from_i64(&[&[1, 1], &[0, 1]]).unwrap(), iv(&[0, 0])).unwrap();
        assert_eq!(s2.apply_map(&shear).unwrap(), poly(&[&[0, 0], &[1, 0], &[1, 1]]));
        assert_eq!(s2.apply_map(&AffineUnimodularMap::identity(2)).unwrap(), s2);
        // Facet data transformed directly agrees with a fresh hull.
        let image = s2.apply_map(&shear).unwrap();
        assert_eq!(Polytope::from_vertices(image.vertices()).unwrap(), image);
    }

    #[test]
    fn map_requires_unimodular() {
        let m = IntMat::from_i64(&[&[2, 0], &[0, 1]]).unwrap();
        assert!(AffineUnimodularMap::new(m, iv(&[0, 0])).is_err());
    }

    #[test]
    fn map_inverse_and_compose() {
        let a = AffineUnimodularMap::new(IntMat::from_i64(&[&[1, 1], &[0, 1]]).unwrap(), iv(&[3, 5])).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.compose(&inv), AffineUnimodularMap::identity(2));
    }

    #[test]
    fn centering() {
        let t3 = poly(&[&[0, 0], &[3, 0], &[0, 3]]);
        let (c, shift) = t3.translate_interior_point_to_origin().unwrap();
        assert_eq!(shift, iv(&[-1, -1]));
        assert_eq!(c, poly(&[&[-1, -1], &[2, -1], &[-1, 2]]));
        let s2 = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(s2.translate_interior_point_to_origin(), Err(Error::InteriorPointNotUnique { count: "0".into() }));
        let t6 = poly(&[&[0, 0], &[6, 0], &[0, 6]]);
        assert_eq!(t6.translate_interior_point_to_origin(), Err(Error::InteriorPointNotUnique { count: "10".into() }));
    }
}
