//! Builtin polytopes: dilated standard simplices, boxes, Hirzebruch
//! polygons, products of projective lines, and the five-dimensional smooth
//! reflexive polytope that is Ehrhart equivalent to `6Σ_5`.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::ehrhart::simplex_ehrhart;
use crate::error::{Error, Result};
use crate::exact::{int, rat, Int, Rat};
use crate::poly::RatPoly;
use crate::polytope::Polytope;

/// Vertex list of the five-dimensional counterexample, as published.
pub const COUNTEREXAMPLE_5D: [[i64; 5]; 18] = [
    [0, -1, -1, -1, -1],
    [-1, 0, -1, -1, -1],
    [-1, -1, -1, -1, -1],
    [-1, 0, 0, -1, -1],
    [-1, -1, 0, -1, -1],
    [0, -1, 0, -1, -1],
    [0, -1, 0, 2, -1],
    [-1, -1, -1, 2, -1],
    [6, -1, -1, -1, 2],
    [-1, 6, 3, -1, 2],
    [6, -1, 3, -1, 2],
    [-1, -1, 0, 2, -1],
    [-1, -1, 3, -1, 2],
    [-1, 0, 0, 2, -1],
    [-1, 0, -1, 2, -1],
    [-1, 6, -1, -1, 2],
    [0, -1, -1, 2, -1],
    [-1, -1, -1, -1, 2],
];

/// `λΣ_n = conv(0, λe_1, ..., λe_n)`.
pub fn simplex(n: usize, lambda: &Int) -> Result<Polytope> {
    if n == 0 || *lambda < Int::one() {
        return Err(Error::InvalidInput("simplex needs n >= 1 and lambda >= 1".into()));
    }
    let mut pts = vec![vec![Rat::zero(); n]];
    for i in 0..n {
        let mut v = vec![Rat::zero(); n];
        v[i] = Rat::from_integer(lambda.clone());
        pts.push(v);
    }
    Polytope::from_vertices(&pts)
}

/// `[0, c_1] × ⋯ × [0, c_n]`.
pub fn boxed(sides: &[Int]) -> Result<Polytope> {
    if sides.is_empty() || sides.iter().any(|c| *c < Int::one()) {
        return Err(Error::InvalidInput("box needs at least one positive side".into()));
    }
    let n = sides.len();
    let pts: Vec<Vec<Rat>> = (0..1usize << n)
        .map(|mask| {
            (0..n).map(|i| if mask >> i & 1 == 1 { Rat::from_integer(sides[i].clone()) } else { Rat::zero() }).collect()
        })
        .collect();
    Polytope::from_vertices(&pts)
}

/// Polygon of the Hirzebruch surface `F_a`: `(0,0), (0,1), (1,1), (a+1,0)`.
pub fn hirzebruch(a: u64) -> Result<Polytope> {
    let a = i64::try_from(a).map_err(|_| Error::Overflow)?;
    Polytope::from_int_vertices(&[vec![0, 0], vec![0, 1], vec![1, 1], vec![a + 1, 0]])
}

/// Side lengths `λ/j`, `j = 1..n`, with `λ = lcm(1, ..., n)`.
pub fn cp1_product_sides(n: usize) -> Vec<Int> {
    let lambda = (1..=n).fold(Int::one(), |l, j| l.lcm(&Int::from(j)));
    (1..=n).map(|j| &lambda / Int::from(j)).collect()
}

/// Product of `n` projective lines with polarizations `O(λ/j)`.
pub fn cp1_product(n: usize) -> Result<Polytope> {
    if n == 0 {
        return Err(Error::InvalidInput("cp1_product needs n >= 1".into()));
    }
    boxed(&cp1_product_sides(n))
}

pub fn counterexample5d() -> Polytope {
    let pts: Vec<Vec<i64>> = COUNTEREXAMPLE_5D.iter().map(|v| v.to_vec()).collect();
    Polytope::from_int_vertices(&pts).expect("published vertex list is full-dimensional")
}

/// A parsed builtin name such as `simplex:2:3` or `box:2:1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Builtin {
    Simplex { n: usize, lambda: Int },
    Box { sides: Vec<Int> },
    Hirzebruch { a: u64 },
    Cp1Product { n: usize },
    Counterexample5d,
}

impl Builtin {
    pub fn parse(spec: &str) -> Result<Self> {
        let mut parts = spec.split(':');
        let name = parts.next().unwrap_or_default();
        let args: Vec<&str> = parts.collect();
        let usage = |msg: &str| Error::InvalidInput(format!("builtin '{spec}': {msg}"));
        let num = |s: &str| s.parse::<u64>().map_err(|_| usage("parameters must be positive integers"));
        match name {
            "simplex" => {
                let (n, lambda) = match args.as_slice() {
                    [n] => (num(n)?, 1),
                    [n, l] => (num(n)?, num(l)?),
                    _ => return Err(usage("expected simplex:N[:LAMBDA]")),
                };
                if n == 0 || lambda == 0 {
                    return Err(usage("N and LAMBDA must be at least 1"));
                }
                Ok(Builtin::Simplex { n: n as usize, lambda: Int::from(lambda) })
            }
            "box" => {
                if args.is_empty() {
                    return Err(usage("expected box:C1[:C2...]"));
                }
                let sides = args
                    .iter()
                    .map(|s| {
                        num(s)
                            .and_then(|c| if c == 0 { Err(usage("sides must be positive")) } else { Ok(Int::from(c)) })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Builtin::Box { sides })
            }
            "hirzebruch" => match args.as_slice() {
                [a] => Ok(Builtin::Hirzebruch { a: num(a)? }),
                _ => Err(usage("expected hirzebruch:A")),
            },
            "cp1_product" => match args.as_slice() {
                [n] if num(n)? >= 1 => Ok(Builtin::Cp1Product { n: num(n)? as usize }),
                _ => Err(usage("expected cp1_product:N with N >= 1")),
            },
            "counterexample5d" if args.is_empty() => Ok(Builtin::Counterexample5d),
            _ => Err(usage("unknown builtin")),
        }
    }

    pub fn build(&self) -> Result<Polytope> {
        match self {
            Builtin::Simplex { n, lambda } => simplex(*n, lambda),
            Builtin::Box { sides } => boxed(sides),
            Builtin::Hirzebruch { a } => hirzebruch(*a),
            Builtin::Cp1Product { n } => cp1_product(*n),
            Builtin::Counterexample5d => Ok(counterexample5d()),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Builtin::Simplex { n, lambda } => format!("simplex:{n}:{lambda}"),
            Builtin::Box { sides } => {
                let s: Vec<String> = sides.iter().map(Int::to_string).collect();
                format!("box:{}", s.join(":"))
            }
            Builtin::Hirzebruch { a } => format!("hirzebruch:{a}"),
            Builtin::Cp1Product { n } => format!("cp1_product:{n}"),
            Builtin::Counterexample5d => "counterexample5d".into(),
        }
    }

    /// Closed-form Ehrhart polynomial.
    pub fn expected_ehrhart(&self) -> RatPoly {
        match self {
            Builtin::Simplex { n, lambda } => simplex_ehrhart(*n, lambda),
            Builtin::Box { sides } => box_ehrhart(sides),
            Builtin::Cp1Product { n } => box_ehrhart(&cp1_product_sides(*n)),
            // Pick: area (a+2)/2, a+4 boundary points.
            Builtin::Hirzebruch { a } => {
                let a = *a as i64;
                RatPoly::new(vec![rat(1, 1), rat(a + 4, 2), rat(a + 2, 2)])
            }
            Builtin::Counterexample5d => simplex_ehrhart(5, &int(6)),
        }
    }
}

/// `Π (c_i m + 1)`.
pub fn box_ehrhart(sides: &[Int]) -> RatPoly {
    let factors: Vec<RatPoly> =
        sides.iter().map(|c| RatPoly::linear(Rat::from_integer(c.clone()), Rat::one())).collect();
    RatPoly::product(&factors)
}

pub fn builtin(spec: &str) -> Result<Polytope> {
    Builtin::parse(spec)?.build()
}

/// A corpus polytope with the properties it is expected to have.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub builtin: Builtin,
    pub ehrhart: RatPoly,
    pub delzant: bool,
    /// Reflexivity after moving the unique interior lattice point to the
    /// origin; `None` when there is no unique interior lattice point.
    pub reflexive: Option<bool>,
    pub lambda: Option<Int>,
}

impl CorpusEntry {
    pub fn name(&self) -> String {
        self.builtin.name()
    }

    pub fn polytope(&self) -> Polytope {
        self.builtin.build().expect("corpus entries are valid")
    }

    pub fn dim(&self) -> usize {
        match &self.builtin {
            Builtin::Simplex { n, .. } | Builtin::Cp1Product { n } => *n,
            Builtin::Box { sides } => sides.len(),
            Builtin::Hirzebruch { .. } => 2,
            Builtin::Counterexample5d => 5,
        }
    }
}

fn entry(spec: &str, reflexive: Option<bool>, lambda: Option<i64>) -> CorpusEntry {
    let builtin = Builtin::parse(spec).expect("corpus names parse");
    CorpusEntry { ehrhart: builtin.expected_ehrhart(), builtin, delzant: true, reflexive, lambda: lambda.map(int) }
}

/// Every polytope the toolkit is regression-tested on, dimensions 1 to 5.
///
/// The recorded properties come from closed forms: simplices from the
/// product formula, boxes from `Π(c_i m + 1)`, Hirzebruch polygons from
/// Pick's theorem; reflexivity from the interior-point count.
pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        entry("simplex:1:1", None, Some(1)),
        entry("simplex:1:2", Some(true), Some(2)),
        entry("simplex:2:1", None, Some(1)),
        entry("simplex:2:2", None, Some(2)),
        entry("simplex:2:3", Some(true), Some(3)),
        entry("box:2:1", None, Some(2)),
        entry("box:2:2", Some(true), None),
        entry("hirzebruch:1", None, None),
        entry("hirzebruch:2", None, Some(2)),
        entry("simplex:3:1", None, Some(1)),
        entry("simplex:3:4", Some(true), Some(4)),
        entry("box:2:2:2", Some(true), None),
        entry("cp1_product:3", None, Some(6)),
        entry("simplex:4:1", None, Some(1)),
        entry("simplex:5:1", None, Some(1)),
        entry("counterexample5d", Some(true), Some(6)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_vec;

    #[test]
    fn builtin_shapes() {
        assert_eq!(builtin("simplex:2:3").unwrap().vertices(), &[rat_vec(&[0, 0]), rat_vec(&[0, 3]), rat_vec(&[3, 0])]);
        assert_eq!(
            builtin("hirzebruch:2").unwrap().vertices(),
            &[rat_vec(&[0, 0]), rat_vec(&[0, 1]), rat_vec(&[1, 1]), rat_vec(&[3, 0])]
        );
        assert_eq!(builtin("cp1_product:2").unwrap(), builtin("box:2:1").unwrap());
        assert_eq!(cp1_product_sides(4), vec![int(12), int(6), int(4), int(3)]);
    }

    #[test]
    fn counterexample_vertices_are_all_extreme() {
        let p = counterexample5d();
        assert_eq!(p.vertices().len(), 18);
        assert!(p.vertices().contains(&rat_vec(&[6, -1, 3, -1, 2])));
        assert!(p.vertices().contains(&rat_vec(&[0, -1, -1, -1, -1])));
    }

    #[test]
    fn bad_names() {
        for bad in
            ["simplex", "simplex:0:1", "box", "box:0", "hirzebruch", "cp1_product:0", "cube:3", "counterexample5d:1"]
        {
            assert!(matches!(Builtin::parse(bad), Err(Error::InvalidInput(_))), "{bad}");
        }
    }

    #[test]
    fn names_round_trip() {
        for e in corpus() {
            assert_eq!(Builtin::parse(&e.name()).unwrap(), e.builtin);
        }
        assert_eq!(Builtin::parse("simplex:3").unwrap().name(), "simplex:3:1");
    }

    #[test]
    fn hirzebruch_closed_form_matches_example() {
        let b = Builtin::Hirzebruch { a: 2 };
        assert_eq!(b.expected_ehrhart(), simplex_ehrhart(2, &int(2)));
    }
}
