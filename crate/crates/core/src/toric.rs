//! Smoothness, volume and barycenter, unimodular equivalence, the
//! barycenter condition for Chow semistability, and the classification of
//! Delzant polytopes that are Ehrhart equivalent to a dilated simplex.

use num_traits::{One, Signed, Zero};

use crate::corpus;
use crate::ehrhart::{ehrhart_report, factorial, hibi_identity_holds, hibi_reflexive, EhrhartReport};
use crate::enumerate::enumerate;
use crate::error::{Error, Result};
use crate::exact::{affine_rank, det_rat, Int, IntMat, Rat, RatVec};
use crate::poly::{RatPoly, VecPoly};
use crate::polytope::{AffineUnimodularMap, Polytope};

/// Edge data at one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexEdges {
    pub vertex: RatVec,
    pub directions: Vec<Vec<Int>>,
    pub edge_count: usize,
    /// Determinant of the primitive edge directions as columns; only defined
    /// when there are exactly `n` edges.
    pub edge_matrix_det: Option<Int>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelzantReport {
    pub is_delzant: bool,
    pub per_vertex: Vec<VertexEdges>,
    /// First vertex (canonical order) violating the condition, with reason.
    pub first_failure: Option<(usize, String)>,
}

/// Checks that every vertex has exactly `n` edges whose primitive
/// directions form a basis of `Z^n`.
pub fn delzant_check(p: &Polytope) -> Result<DelzantReport> {
    let n = p.dim();
    let mut per_vertex = Vec::with_capacity(p.vertices().len());
    let mut first_failure = None;
    for (i, v) in p.vertices().iter().enumerate() {
        let directions = p.edges_at_vertex(i)?;
        let edge_count = directions.len();
        let edge_matrix_det =
            (edge_count == n).then(|| IntMat::from_columns(&directions).map(|m| m.det())).transpose()?;
        if first_failure.is_none() {
            if edge_count != n {
                first_failure = Some((i, format!("{edge_count} edges meet at the vertex, expected {n}")));
            } else if let Some(d) = &edge_matrix_det {
                if !d.abs().is_one() {
                    first_failure = Some((i, format!("edge directions have determinant {d}")));
                }
            }
        }
        per_vertex.push(VertexEdges { vertex: v.clone(), directions, edge_count, edge_matrix_det });
    }
    Ok(DelzantReport { is_delzant: first_failure.is_none(), per_vertex, first_failure })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Barycenter {
    pub value: RatVec,
    pub volume: Rat,
}

fn centroid(points: &[&RatVec]) -> RatVec {
    let n = points[0].len();
    let k = Rat::from_integer(Int::from(points.len()));
    (0..n).map(|j| points.iter().fold(Rat::zero(), |acc, p| acc + &p[j]) / &k).collect()
}

/// Cones from the centroid of each face over its facets, recursively, until
/// the face is a simplex. Emits full-dimensional simplices covering `p`.
fn triangulate(p: &Polytope, face: &[usize], face_dim: usize, chain: &mut Vec<RatVec>, out: &mut Vec<Vec<RatVec>>) {
    let verts = p.vertices();
    if face.len() == face_dim + 1 {
        let mut s = chain.clone();
        s.extend(face.iter().map(|&i| verts[i].clone()));
        out.push(s);
        return;
    }
    let pts: Vec<&RatVec> = face.iter().map(|&i| &verts[i]).collect();
    chain.push(centroid(&pts));
    let mut subfaces: Vec<Vec<usize>> = Vec::new();
    for f in 0..p.facets().len() {
        let sub: Vec<usize> = face.iter().copied().filter(|&v| p.incidence()[v].contains(&f)).collect();
        if sub.len() < face_dim || subfaces.contains(&sub) {
            continue;
        }
        let sub_pts: Vec<RatVec> = sub.iter().map(|&i| verts[i].clone()).collect();
        if affine_rank(&sub_pts) == face_dim - 1 {
            subfaces.push(sub);
        }
    }
    for sub in subfaces {
        triangulate(p, &sub, face_dim - 1, chain, out);
    }
    chain.pop();
}

/// The simplices of the recursive centroid triangulation.
pub fn triangulation(p: &Polytope) -> Vec<Vec<RatVec>> {
    let all: Vec<usize> = (0..p.vertices().len()).collect();
    let mut out = Vec::new();
    triangulate(p, &all, p.dim(), &mut Vec::new(), &mut out);
    out
}

pub fn simplex_volume(s: &[RatVec]) -> Rat {
    let base = &s[0];
    let rows: Vec<RatVec> = s[1..].iter().map(|v| v.iter().zip(base).map(|(a, b)| a - b).collect()).collect();
    det_rat(&rows).abs() / Rat::from_integer(factorial(s.len() - 1))
}

/// Exact Euclidean volume and barycenter `∫x dv / Vol`.
pub fn volume_and_barycenter(p: &Polytope) -> Result<Barycenter> {
    let n = p.dim();
    let mut volume = Rat::zero();
    let mut moment = vec![Rat::zero(); n];
    for s in triangulation(p) {
        let vol = simplex_volume(&s);
        let refs: Vec<&RatVec> = s.iter().collect();
        for (m, c) in moment.iter_mut().zip(centroid(&refs)) {
            *m += &vol * c;
        }
        volume += vol;
    }
    if volume.is_zero() {
        return Err(Error::NotFullDimensional { rank: affine_rank(p.vertices()), dim: n });
    }
    let value = moment.into_iter().map(|m| m / &volume).collect();
    Ok(Barycenter { value, volume })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Searches for `A ∈ GL_n(Z)` and `c ∈ Z^n` with `q = A(p) + c`.
///
/// A base vertex of `p` with edge basis `B` must go to some vertex `w` of
/// `q` with its edges in some order `C`; then `A = C B^{-1}`. Every such
/// candidate is tried in a fixed order and the first that maps the whole
/// vertex set is returned.
pub fn unimodular_equivalent(p: &Polytope, q: &Polytope) -> Result<Option<AffineUnimodularMap>> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    let dp = delzant_check(p)?;
    let dq = delzant_check(q)?;
    if !dp.is_delzant || !dq.is_delzant {
        return Err(Error::EquivalenceRequiresDelzant);
    }
    if p.vertices().len() != q.vertices().len() || p.facets().len() != q.facets().len() {
        return Ok(None);
    }
    if volume_and_barycenter(p)?.volume != volume_and_barycenter(q)?.volume {
        return Ok(None);
    }
    if enumerate(p, 1)?.interior_count != enumerate(q, 1)?.interior_count {
        return Ok(None);
    }

    let n = p.dim();
    let base = p.lattice_vertices()?[0].clone();
    let b = IntMat::from_columns(&dp.per_vertex[0].directions)?;
    let b_inv = b.inverse_unimodular()?;
    let q_vertices = q.lattice_vertices()?;
    let perms = permutations(n);
    for (w, edges) in q_vertices.iter().zip(&dq.per_vertex) {
        for perm in &perms {
            let cols: Vec<Vec<Int>> = perm.iter().map(|&i| edges.directions[i].clone()).collect();
            let a = IntMat::from_columns(&cols)?.mul(&b_inv);
            let image = a.mul_vec(&base);
            let c: Vec<Int> = w.iter().zip(image).map(|(x, y)| x - y).collect();
            let map = AffineUnimodularMap::new(a, c)?;
            if map.maps_onto(p, q) {
                return Ok(Some(map));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnoReport {
    pub holds: bool,
    /// `P^x(m) - m·P(m)·b`; zero exactly when the condition holds.
    pub residual: VecPoly,
    pub barycenter: RatVec,
}

/// `P^x(m) = m·P(m)·b` as an identity of vector polynomials.
pub fn ono_from_parts(report: &EhrhartReport, barycenter: &[Rat]) -> OnoReport {
    let m_times_p = &RatPoly::var() * &report.polynomial;
    let residual = report.vector_polynomial.sub(&VecPoly::from_scalar_times(&m_times_p, barycenter));
    OnoReport { holds: residual.is_zero(), residual, barycenter: barycenter.to_vec() }
}

pub fn ono_check(p: &Polytope) -> Result<OnoReport> {
    let report = ehrhart_report(p)?;
    let bary = volume_and_barycenter(p)?;
    Ok(ono_from_parts(&report, &bary.value))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremCase {
    /// `Δ ∼ Σ_n`.
    CaseI,
    /// `n = 2`, `Δ ∼ 3Σ_2`.
    CaseIi,
    /// `Δ ∼ (n+1)Σ_n` with the barycenter at the interior point.
    CaseIii,
    /// `Δ ∼ (n+1)Σ_n` but the barycenter is off the interior point, so the
    /// barycenter condition for Chow semistability fails.
    CounterexampleFamily,
    Inconclusive,
}

impl TheoremCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremCase::CaseI => "case_i",
            TheoremCase::CaseIi => "case_ii",
            TheoremCase::CaseIii => "case_iii",
            TheoremCase::CounterexampleFamily => "counterexample_family",
            TheoremCase::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Certificates {
    pub volume: Option<Rat>,
    pub interior_point_count: Option<Int>,
    pub barycenter: Option<RatVec>,
    /// Translation moving the unique interior lattice point to the origin.
    pub centering_shift: Option<Vec<Int>>,
    /// Barycenter of the centered polytope.
    pub centered_barycenter: Option<RatVec>,
    pub reflexive_hibi: Option<bool>,
    pub reflexive_dual: Option<bool>,
    pub ono_holds: Option<bool>,
    /// Edge lengths `c_i` at the base vertex after straightening its edges.
    pub edge_multiples: Option<Vec<Int>>,
    /// `A, c` with `A(Δ) + c = λΣ_n`.
    pub map: Option<AffineUnimodularMap>,
    pub map_det: Option<Int>,
    pub target: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub case_applied: TheoremCase,
    pub lambda: Option<Int>,
    pub isomorphic_to_projective: bool,
    /// `Some(false)` when the barycenter condition proves the polarization is
    /// not asymptotically Chow semistable; `None` when undecided.
    pub acsemis: Option<bool>,
    /// Every theorem case whose hypotheses were met and whose conclusion was
    /// certified. Cases (ii) and (iii) overlap for `3Σ_2`.
    pub cases_verified: Vec<TheoremCase>,
    pub certificates: Certificates,
}

fn certificate_missing(what: &str) -> Error {
    Error::CertificateNotFound(what.to_string())
}

/// Re-checks a claimed map by transforming facet data (not just vertices)
/// and comparing with the target polytope.
fn verify_map(p: &Polytope, target: &Polytope, map: &AffineUnimodularMap) -> Result<bool> {
    Ok(map.maps_onto(p, target) && p.apply_map(map)? == *target)
}

/// Straightens the edges at the first vertex onto the coordinate axes, as
/// in the argument that volume `1/n!` forces the standard simplex.
fn case_i_map(p: &Polytope, delzant: &DelzantReport) -> Result<(AffineUnimodularMap, Vec<Int>)> {
    let base = p.lattice_vertices()?[0].clone();
    let edges = &delzant.per_vertex[0].directions;
    let a = IntMat::from_columns(edges)?.inverse_unimodular()?;
    let c: Vec<Int> = a.mul_vec(&base).into_iter().map(|x| -x).collect();
    let map = AffineUnimodularMap::new(a, c)?;
    let vertices = p.lattice_vertices()?;
    let multiples = p
        .neighbors(0)
        .into_iter()
        .map(|w| {
            let image = map.apply_int(&vertices[w]);
            image.iter().fold(Int::zero(), |acc, x| acc + x)
        })
        .collect();
    Ok((map, multiples))
}

/// Runs the classification pipeline on a Delzant polytope.
pub fn classify(p: &Polytope) -> Result<Verdict> {
    let n = p.dim();
    let delzant = delzant_check(p)?;
    if !delzant.is_delzant {
        return Err(Error::ClassificationRequiresDelzant);
    }
    let report = ehrhart_report(p)?;
    let bary = volume_and_barycenter(p)?;
    let interior = report.samples[1].interior_count.clone();
    let mut cert = Certificates {
        volume: Some(report.volume.clone()),
        interior_point_count: Some(interior.clone()),
        barycenter: Some(bary.value.clone()),
        ..Certificates::default()
    };
    if bary.volume != report.volume {
        return Err(Error::Internal(format!(
            "triangulated volume {} differs from leading Ehrhart coefficient {}",
            bary.volume, report.volume
        )));
    }
    let Some(lambda) = report.lambda_match.clone() else {
        return Ok(Verdict {
            case_applied: TheoremCase::Inconclusive,
            lambda: None,
            isomorphic_to_projective: false,
            acsemis: None,
            cases_verified: Vec::new(),
            certificates: cert,
        });
    };
    let n_int = Int::from(n);
    let mut cases = Vec::new();
    let mut acsemis = None;
    let mut counterexample = false;
    let target = corpus::simplex(n, &lambda)?;
    let target_name = format!("simplex:{n}:{lambda}");
    let mut found_map: Option<AffineUnimodularMap> = None;

    if lambda.is_one() {
        let expected = Rat::from_integer(factorial(n)).recip();
        if report.volume != expected {
            return Err(certificate_missing("volume differs from 1/n!"));
        }
        let (map, multiples) = case_i_map(p, &delzant)?;
        let all_one = multiples.iter().all(One::is_one);
        cert.edge_multiples = Some(multiples);
        if !all_one || !verify_map(p, &target, &map)? {
            return Err(certificate_missing("edges at the base vertex are not unit length"));
        }
        found_map = Some(map);
        cases.push(TheoremCase::CaseI);
    }

    if n == 2 && lambda == Int::from(3) {
        if report.volume != Rat::new(Int::from(9), Int::from(2)) {
            return Err(certificate_missing("volume differs from 9/2"));
        }
        // (-1)^2 P(-1) counts interior points of Δ.
        if report.polynomial.eval_int(-1) != Rat::one() || !interior.is_one() {
            return Err(certificate_missing("interior lattice point is not unique"));
        }
        let map = unimodular_equivalent(p, &target)?
            .ok_or_else(|| certificate_missing("no map onto 3Σ_2 despite area 9/2 and one interior point"))?;
        if !verify_map(p, &target, &map)? {
            return Err(Error::Internal("equivalence search returned an invalid map".into()));
        }
        found_map.get_or_insert(map);
        cases.push(TheoremCase::CaseIi);
    }

    if lambda == &n_int + Int::one() {
        if !hibi_identity_holds(&report.polynomial, n) {
            return Err(Error::Internal("P_{(n+1)Σ_n} fails the Hibi identity".into()));
        }
        let (centered, shift) = p.translate_interior_point_to_origin()?;
        let reflexive = hibi_reflexive(&centered)?;
        let dual_lattice = centered.dual()?.is_lattice();
        cert.reflexive_hibi = Some(reflexive);
        cert.reflexive_dual = Some(dual_lattice);
        if !reflexive || !dual_lattice {
            return Err(certificate_missing("polytope Ehrhart equivalent to (n+1)Σ_n is not reflexive"));
        }
        let centered_bary = volume_and_barycenter(&centered)?.value;
        let ono = crate::toric::ono_from_parts(&report, &bary.value);
        cert.ono_holds = Some(ono.holds);
        cert.centering_shift = Some(shift);
        let at_origin = centered_bary.iter().all(Zero::is_zero);
        cert.centered_barycenter = Some(centered_bary);
        if at_origin {
            let bound = Rat::new(num_traits::pow(&n_int + Int::one(), n), factorial(n));
            if report.volume > bound {
                return Err(certificate_missing("volume exceeds (n+1)^n/n! with barycenter at the origin"));
            }
            let map = unimodular_equivalent(p, &target)?
                .ok_or_else(|| certificate_missing("no map onto (n+1)Σ_n in the volume-bound equality case"))?;
            if !verify_map(p, &target, &map)? {
                return Err(Error::Internal("equivalence search returned an invalid map".into()));
            }
            found_map.get_or_insert(map);
            cases.push(TheoremCase::CaseIii);
        } else {
            if ono.holds {
                return Err(Error::Internal(
                    "barycenter condition holds with barycenter off the interior point".into(),
                ));
            }
            counterexample = true;
            acsemis = Some(false);
        }
    }

    let case_applied = match cases.first() {
        Some(c) => *c,
        None if counterexample => TheoremCase::CounterexampleFamily,
        None => TheoremCase::Inconclusive,
    };
    if counterexample {
        cases.push(TheoremCase::CounterexampleFamily);
    }
    let isomorphic = found_map.is_some();
    if let Some(map) = &found_map {
        cert.map_det = Some(map.det());
        cert.target = Some(target_name);
    }
    cert.map = found_map;
    Ok(Verdict {
        case_applied,
        lambda: Some(lambda),
        isomorphic_to_projective: isomorphic,
        acsemis,
        cases_verified: cases,
        certificates: cert,
    })
}
