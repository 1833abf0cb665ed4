//! Exact rational convex polytopes in low dimension.
//!
//! A [`RationalPolytope`] is stored both ways: as its vertex list and as
//! facet inequalities `⟨a, x⟩ + c ≥ 0` with `a` a primitive inward integer
//! normal. The full face lattice is computed once at construction.

mod count;
mod labelled;
mod reflexive;

pub use count::Region;
pub use labelled::LabelledPolytope;
pub use reflexive::{polygon_normal_form, reflexive_polygons};

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactlat::{
    cofactor_normal, dot_int_rat, int, lcm_all, primitive_from_rat, rank_rat, rat_from_int, Int,
    Rat, RatVector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("no input points")]
    EmptyInput,
    #[error("points have inconsistent dimensions")]
    DimensionMismatch,
    #[error("points span an affine space of dimension {rank}, expected {dim}")]
    DegenerateInput { rank: usize, dim: usize },
    #[error("the origin is not in the interior")]
    OriginNotInterior,
    #[error("polytope is not integral")]
    NotIntegral,
    #[error("halfspace description is invalid: {0}")]
    BadHalfspaces(String),
    #[error("value too large for enumeration: {0}")]
    TooLarge(String),
}

/// Facet `{x ∈ P : ⟨normal, x⟩ + offset = 0}`; `P` lies where the form is ≥ 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Facet {
    pub normal: Vec<Int>,
    pub offset: Rat,
    /// Indices into the polytope's vertex list, ascending.
    pub vertices: Vec<usize>,
}

impl Facet {
    pub fn eval(&self, x: &[Rat]) -> Rat {
        dot_int_rat(&self.normal, x) + &self.offset
    }
}

/// A non-empty face, identified by its vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face {
    pub dim: usize,
    pub vertices: Vec<usize>,
    /// Facets containing the face (empty for the polytope itself).
    pub facets: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolytope {
    dim: usize,
    vertices: Vec<RatVector>,
    facets: Vec<Facet>,
    faces: Vec<Face>,
}

/// Which vertex a pulling triangulation cones from first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pulling {
    FirstVertex,
    LastVertex,
}

fn affine_rank(points: &[&RatVector]) -> usize {
    let Some((p0, rest)) = points.split_first() else {
        return 0;
    };
    let diffs: Vec<Vec<Rat>> = rest.iter().map(|p| p.iter().zip(p0.iter()).map(|(a, b)| a - b).collect()).collect();
    if diffs.is_empty() {
        0
    } else {
        rank_rat(&diffs)
    }
}

/// Convex hull of finitely many points of Q^n spanning Q^n affinely.
///
/// Facets are found by testing every affinely independent n-subset of the
/// input for a supporting hyperplane, which is exact and adequate for the
/// small dimensions (n ≤ 4) and point counts used here.
pub fn convex_hull(points: &[RatVector]) -> Result<RationalPolytope, PolytopeError> {
    let first = points.first().ok_or(PolytopeError::EmptyInput)?;
    let n = first.len();
    if n == 0 || points.iter().any(|p| p.len() != n) {
        return Err(PolytopeError::DimensionMismatch);
    }
    let mut seen = BTreeSet::new();
    let pts: Vec<&RatVector> = points.iter().filter(|p| seen.insert((*p).clone())).collect();
    let rank = affine_rank(&pts);
    if rank != n {
        return Err(PolytopeError::DegenerateInput { rank, dim: n });
    }

    let mut found: BTreeSet<(Vec<Int>, Rat)> = BTreeSet::new();
    for combo in (0..pts.len()).combinations(n) {
        let p0 = pts[combo[0]];
        let diffs: Vec<Vec<Rat>> =
            combo[1..].iter().map(|&i| pts[i].iter().zip(p0.iter()).map(|(a, b)| a - b).collect()).collect();
        let a = cofactor_normal(&diffs);
        if a.iter().all(|x| x.is_zero()) {
            continue;
        }
        let prim = primitive_from_rat(&a);
        let c = -dot_int_rat(&prim, p0);
        let vals: Vec<Rat> = pts.iter().map(|p| dot_int_rat(&prim, p) + &c).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            found.insert((prim, c));
        } else if vals.iter().all(|v| !v.is_positive()) {
            found.insert((prim.iter().map(|x| -x).collect(), -c));
        }
    }

    let on_facet = |p: &RatVector, a: &Vec<Int>, c: &Rat| (dot_int_rat(a, p) + c).is_zero();
    let vertices: Vec<RatVector> = pts
        .iter()
        .filter(|p| {
            let tight: Vec<Vec<Rat>> = found
                .iter()
                .filter(|(a, c)| on_facet(p, a, c))
                .map(|(a, _)| a.iter().map(rat_from_int).collect())
                .collect();
            !tight.is_empty() && rank_rat(&tight) == n
        })
        .map(|p| (*p).clone())
        .collect();

    let mut facets: Vec<Facet> = found
        .into_iter()
        .map(|(normal, offset)| {
            let vs = (0..vertices.len()).filter(|&i| on_facet(&vertices[i], &normal, &offset)).collect();
            Facet { normal, offset, vertices: vs }
        })
        .collect();
    facets.sort_by(|a, b| a.vertices.cmp(&b.vertices).then_with(|| a.normal.cmp(&b.normal)));
    let faces = face_lattice(n, &vertices, &facets);
    Ok(RationalPolytope { dim: n, vertices, facets, faces })
}

fn face_lattice(n: usize, vertices: &[RatVector], facets: &[Facet]) -> Vec<Face> {
    let mut sets: BTreeSet<Vec<usize>> = facets.iter().map(|f| f.vertices.clone()).collect();
    let mut frontier: Vec<Vec<usize>> = sets.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for f in facets {
            let meet: Vec<usize> = s.iter().copied().filter(|i| f.vertices.binary_search(i).is_ok()).collect();
            if !meet.is_empty() && sets.insert(meet.clone()) {
                frontier.push(meet);
            }
        }
    }
    sets.insert((0..vertices.len()).collect());
    let mut faces: Vec<Face> = sets
        .into_iter()
        .map(|vs| {
            let pts: Vec<&RatVector> = vs.iter().map(|&i| &vertices[i]).collect();
            let dim = affine_rank(&pts);
            let fs = if dim == n {
                Vec::new()
            } else {
                (0..facets.len())
                    .filter(|&j| vs.iter().all(|i| facets[j].vertices.binary_search(i).is_ok()))
                    .collect()
            };
            Face { dim, vertices: vs, facets: fs }
        })
        .collect();
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.vertices.cmp(&b.vertices)));
    faces
}

impl RationalPolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// All non-empty faces including the polytope itself, by dimension.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn faces_of_dim(&self, d: usize) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.dim == d).collect()
    }

    /// Face counts `f_0, …, f_{n-1}`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..self.dim).map(|d| self.faces_of_dim(d).len()).collect()
    }

    /// Least positive integer `m` with `mP` integral.
    pub fn order(&self) -> Int {
        lcm_all(self.vertices.iter().flatten().map(|x| x.denom()))
    }

    pub fn is_integral(&self) -> bool {
        self.order().is_one()
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim + 1
    }

    pub fn is_simplicial(&self) -> bool {
        self.facets.iter().all(|f| f.vertices.len() == self.dim)
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.facets.iter().all(|f| !f.eval(x).is_negative())
    }

    pub fn contains_strictly(&self, x: &[Rat]) -> bool {
        self.facets.iter().all(|f| f.eval(x).is_positive())
    }

    /// Index of the face with exactly this vertex set.
    pub fn face_index(&self, vertices: &[usize]) -> Option<usize> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        self.faces.iter().position(|f| f.vertices == vs)
    }

    /// Index of the facet with exactly this vertex set.
    pub fn facet_index(&self, vertices: &[usize]) -> Option<usize> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        self.facets.iter().position(|f| f.vertices == vs)
    }

    pub fn vertex_index(&self, p: &[Rat]) -> Option<usize> {
        self.vertices.iter().position(|v| v.as_slice() == p)
    }

    pub fn translate(&self, by: &[Rat]) -> RationalPolytope {
        let pts: Vec<RatVector> =
            self.vertices.iter().map(|v| v.iter().zip(by).map(|(a, b)| a + b).collect()).collect();
        convex_hull(&pts).expect("translation preserves dimension")
    }

    pub fn scale(&self, t: &Rat) -> RationalPolytope {
        assert!(t.is_positive(), "dilation factor must be positive");
        let pts: Vec<RatVector> = self.vertices.iter().map(|v| v.iter().map(|a| a * t).collect()).collect();
        convex_hull(&pts).expect("dilation preserves dimension")
    }

    /// Triangulation without new vertices obtained by recursively coning from
    /// a chosen vertex. Cells are vertex index lists of length `dim + 1`.
    pub fn pulling_triangulation(&self, pulling: Pulling) -> Vec<Vec<usize>> {
        let top = self.faces.last().expect("polytope face");
        let mut cells = self.pull_face(top, pulling);
        for c in &mut cells {
            c.sort_unstable();
        }
        cells.sort();
        cells
    }

    fn pull_face(&self, face: &Face, pulling: Pulling) -> Vec<Vec<usize>> {
        if face.vertices.len() == face.dim + 1 {
            return vec![face.vertices.clone()];
        }
        let apex = match pulling {
            Pulling::FirstVertex => face.vertices[0],
            Pulling::LastVertex => *face.vertices.last().unwrap(),
        };
        let mut out = Vec::new();
        for sub in self.faces.iter().filter(|g| {
            g.dim + 1 == face.dim
                && !g.vertices.contains(&apex)
                && g.vertices.iter().all(|v| face.vertices.contains(v))
        }) {
            for mut cell in self.pull_face(sub, pulling) {
                cell.push(apex);
                out.push(cell);
            }
        }
        out
    }

    /// `n! · vol(P)` for a simplex given by vertex indices.
    pub fn simplex_normalized_volume(&self, cell: &[usize]) -> Rat {
        simplex_normalized_volume(&cell.iter().map(|&i| self.vertices[i].clone()).collect::<Vec<_>>())
    }

    /// `n! · vol(P)`, the lattice-normalised volume.
    pub fn normalized_volume(&self) -> Rat {
        self.pulling_triangulation(Pulling::FirstVertex)
            .iter()
            .map(|c| self.simplex_normalized_volume(c))
            .sum()
    }

    /// Polar dual `{y : ⟨x, y⟩ ≥ -1 for all x ∈ P}`; needs 0 in the interior.
    pub fn dual(&self) -> Result<RationalPolytope, PolytopeError> {
        if !self.facets.iter().all(|f| f.offset.is_positive()) {
            return Err(PolytopeError::OriginNotInterior);
        }
        let pts: Vec<RatVector> = self
            .facets
            .iter()
            .map(|f| f.normal.iter().map(|a| rat_from_int(a) / &f.offset).collect())
            .collect();
        convex_hull(&pts)
    }

    /// Integer points of `t·P` (closed or interior), in lexicographic order.
    pub fn lattice_points(&self, t: &Int, region: Region) -> Vec<Vec<Int>> {
        let mut out = Vec::new();
        let fast = count::scan(self, t, region, &mut |x| out.push(x.iter().map(|&v| int(v)).collect()));
        if fast.is_err() {
            count::naive_points(self, t, region, &mut |x| out.push(x.to_vec()));
        }
        out
    }

    /// Number of integer points of `t·P` (closed or interior).
    pub fn count_points(&self, t: &Int, region: Region) -> u64 {
        let mut k = 0u64;
        match count::scan(self, t, region, &mut |_| k += 1) {
            Ok(()) => k,
            Err(_) => self.count_points_naive(t, region),
        }
    }

    /// Bounding-box scan testing every facet in exact arithmetic.
    pub fn count_points_naive(&self, t: &Int, region: Region) -> u64 {
        let mut k = 0u64;
        count::naive_points(self, t, region, &mut |_| k += 1);
        k
    }
}

pub fn simplex_normalized_volume(pts: &[RatVector]) -> Rat {
    let (p0, rest) = pts.split_first().expect("simplex vertices");
    let rows: Vec<Vec<Rat>> = rest.iter().map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect()).collect();
    crate::exactlat::det_rat(&rows).abs()
}
