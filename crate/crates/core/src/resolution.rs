//! Crepant toric resolutions of the symplectic cone over a toric diagram.
//!
//! A triangulation `T` of `D` with vertices in `(1/m)Z^n` gives a fan with
//! rays `(m p, m)`. The orbifold Poincaré polynomial of the resulting toric
//! variety is the box sum `Σ_τ h_τ(q) Σ_{v ∈ Box(τ)} q^{ψ(v)}`; its
//! coefficients are the δ-vector of `D`, and it determines the contact Betti
//! numbers of the boundary.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::contact::{ContactError, ToricDiagram};
use crate::ehrhart::{counts, DeltaVector};
use crate::exactlat::{
    cofactor_normal, dot_int, dot_rat, frac, gcd_all, is_integral, primitive_from_rat, rat_from_int, smith_normal_form,
    solve_rat, to_rat_vector, Int, IntMatrix, Rat, RatVector,
};
use crate::graded::{GradedDimension, Window};
use crate::poly::IntPoly;
use crate::polytope::{simplex_normalized_volume, Pulling, Region};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error(transparent)]
    Contact(#[from] ContactError),
    #[error("point {0} is not in the interior of the diagram")]
    PointNotInterior(usize),
    #[error("point {0} lies outside the diagram")]
    PointOutside(usize),
    #[error("point {0} is not in (1/m)Z^n")]
    NotRational(usize),
    #[error("invalid cell {cell}: {reason}")]
    BadCell { cell: usize, reason: String },
    #[error("cells cover normalized volume {covered}, the diagram has {expected}")]
    NotCovering { covered: Rat, expected: Rat },
    #[error("cells {0} and {1} do not meet in a common face")]
    ImproperIntersection(usize, usize),
    #[error("support function is not strictly convex")]
    NotStrictlyConvex,
    #[error("no strictly convex support function found: the triangulation may not be regular")]
    NoConvexSupport,
    #[error("expected {expected} ray values, got {got}")]
    RayValueCount { expected: usize, got: usize },
    #[error("orbifold cohomology in degree {degree} is {found}, δ predicts {expected}")]
    MismatchAt { degree: Rat, found: u64, expected: u64 },
    #[error("box-sum Ehrhart series differs from the lattice point count at t = {t}")]
    SeriesMismatchAt { t: u64 },
}

/// Cells are index lists (ascending) into `points`; the first points are the
/// diagram's vertices in the diagram's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    order: Int,
    points: Vec<RatVector>,
    cells: Vec<Vec<usize>>,
}

impl Triangulation {
    /// Diagram vertices followed by `extra` points; cells index that list.
    /// Nothing is checked here; see [`validate_triangulation`].
    pub fn from_cells(diagram: &ToricDiagram, extra: Vec<RatVector>, cells: Vec<Vec<usize>>) -> Self {
        let mut points = diagram.polytope().vertices().to_vec();
        points.extend(extra);
        let mut cells: Vec<Vec<usize>> = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        cells.sort();
        Triangulation { order: diagram.order().clone(), points, cells }
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn order(&self) -> &Int {
        &self.order
    }

    pub fn points(&self) -> &[RatVector] {
        &self.points
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    fn cell_points(&self, cell: &[usize]) -> Vec<RatVector> {
        cell.iter().map(|&i| self.points[i].clone()).collect()
    }
}

/// The diagram itself when it is a simplex; otherwise a pulling
/// triangulation on its vertices, so no new rays appear.
pub fn trivial_triangulation(diagram: &ToricDiagram) -> Triangulation {
    let p = diagram.polytope();
    let cells = if p.is_simplex() {
        vec![(0..p.vertices().len()).collect()]
    } else {
        p.pulling_triangulation(Pulling::FirstVertex)
    };
    Triangulation::from_cells(diagram, Vec::new(), cells)
}

/// Cones from `p` over every facet of the diagram.
pub fn star_triangulation(diagram: &ToricDiagram, p: RatVector) -> Result<Triangulation, ResolutionError> {
    let d = diagram.polytope();
    let k = d.vertices().len();
    let scaled: RatVector = p.iter().map(|x| x * rat_from_int(diagram.order())).collect();
    if p.len() != d.dim() || !d.contains_strictly(&p) {
        return Err(ResolutionError::PointNotInterior(k));
    }
    if !is_integral(&scaled) {
        return Err(ResolutionError::NotRational(k));
    }
    let cells = d
        .facets()
        .iter()
        .map(|f| f.vertices.iter().copied().chain(std::iter::once(k)).collect())
        .collect();
    Ok(Triangulation::from_cells(diagram, vec![p], cells))
}

/// Interior points of `(1/m)Z^n` whose ray `(m p, m)` is primitive, the
/// only points a crepant star subdivision can use.
pub fn crepant_star_points(diagram: &ToricDiagram) -> Vec<RatVector> {
    let m = diagram.order();
    diagram
        .polytope()
        .lattice_points(m, Region::Interior)
        .into_iter()
        .filter(|x| gcd_all(&x.iter().cloned().chain(std::iter::once(m.clone())).collect::<Vec<_>>()).is_one())
        .map(|x| x.iter().map(|c| rat_from_int(c) / rat_from_int(m)).collect())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangulationReport {
    /// Every cone over a cell is generated by a basis of `Z^{n+1}`.
    pub unimodular: bool,
}

/// `⟨a, x⟩ + c ≥ 0` descriptions of the facets of a full simplex.
fn simplex_halfspaces(pts: &[RatVector]) -> Vec<(RatVector, Rat)> {
    (0..pts.len())
        .map(|skip| {
            let others: Vec<&RatVector> = pts.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, p)| p).collect();
            let p0 = others[0];
            let diffs: Vec<Vec<Rat>> = others[1..].iter().map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect()).collect();
            let a = if diffs.is_empty() { vec![Rat::one()] } else { cofactor_normal(&diffs) };
            let c = -dot_rat(&a, p0);
            if (dot_rat(&a, &pts[skip]) + &c).is_negative() {
                (a.iter().map(|x| -x).collect(), -c)
            } else {
                (a, c)
            }
        })
        .collect()
}

/// Barycentric coordinates of `x` with respect to a full simplex.
fn barycentric(pts: &[RatVector], x: &[Rat]) -> RatVector {
    let n = x.len();
    let mut rows: Vec<Vec<Rat>> = (0..n).map(|i| pts.iter().map(|p| p[i].clone()).collect()).collect();
    rows.push(vec![Rat::one(); pts.len()]);
    let mut rhs = x.to_vec();
    rhs.push(Rat::one());
    solve_rat(&rows, &rhs).expect("simplex is full-dimensional")
}

/// Vertices of the intersection of two full simplices.
fn intersection_vertices(a: &[RatVector], b: &[RatVector]) -> Vec<RatVector> {
    let n = a[0].len();
    let hs: Vec<(RatVector, Rat)> = simplex_halfspaces(a).into_iter().chain(simplex_halfspaces(b)).collect();
    let mut out = BTreeSet::new();
    for combo in (0..hs.len()).combinations(n) {
        let rows: Vec<Vec<Rat>> = combo.iter().map(|&i| hs[i].0.clone()).collect();
        let rhs: Vec<Rat> = combo.iter().map(|&i| -hs[i].1.clone()).collect();
        if let Some(x) = solve_rat(&rows, &rhs) {
            if hs.iter().all(|(a, c)| !(dot_rat(a, &x) + c).is_negative()) {
                out.insert(x);
            }
        }
    }
    out.into_iter().collect()
}

/// Two simplices meet properly when every vertex of their intersection lies
/// in the convex hull of their shared vertices.
fn meet_properly(t: &Triangulation, i: usize, j: usize) -> bool {
    let (ci, cj) = (&t.cells[i], &t.cells[j]);
    let (pi, pj) = (t.cell_points(ci), t.cell_points(cj));
    intersection_vertices(&pi, &pj).iter().all(|x| {
        let bc = barycentric(&pi, x);
        ci.iter().zip(&bc).all(|(v, c)| c.is_zero() || cj.contains(v))
    })
}

pub fn validate_triangulation(diagram: &ToricDiagram, t: &Triangulation) -> Result<TriangulationReport, ResolutionError> {
    let d = diagram.polytope();
    let n = d.dim();
    let m = rat_from_int(diagram.order());
    let distinct: BTreeSet<&RatVector> = t.points.iter().collect();
    if distinct.len() != t.points.len() || t.points.iter().any(|p| p.len() != n) {
        return Err(ResolutionError::BadCell { cell: 0, reason: "points must be distinct and of the diagram's dimension".into() });
    }
    for (i, p) in t.points.iter().enumerate() {
        if !d.contains(p) {
            return Err(ResolutionError::PointOutside(i));
        }
        if !is_integral(&p.iter().map(|x| x * &m).collect::<Vec<_>>()) {
            return Err(ResolutionError::NotRational(i));
        }
    }
    let mut covered = Rat::zero();
    for (ci, cell) in t.cells.iter().enumerate() {
        let unique: BTreeSet<&usize> = cell.iter().collect();
        if cell.len() != n + 1 || unique.len() != n + 1 || cell.iter().any(|&i| i >= t.points.len()) {
            return Err(ResolutionError::BadCell { cell: ci, reason: format!("needs {} distinct point indices", n + 1) });
        }
        let vol = simplex_normalized_volume(&t.cell_points(cell));
        if vol.is_zero() {
            return Err(ResolutionError::BadCell { cell: ci, reason: "degenerate simplex".into() });
        }
        covered += vol;
    }
    let expected = d.normalized_volume();
    if covered != expected {
        return Err(ResolutionError::NotCovering { covered, expected });
    }
    let pairs: Vec<(usize, usize)> = (0..t.cells.len()).tuple_combinations().collect();
    if let Some(&(i, j)) = pairs.par_iter().find_first(|&&(i, j)| !meet_properly(t, i, j)) {
        return Err(ResolutionError::ImproperIntersection(i, j));
    }
    let fan = fan_over(t);
    Ok(TriangulationReport { unimodular: fan.is_smooth() })
}

/// Simplicial fan over a triangulation with the stacky generators
/// `(m p, m)` as rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    rays: Vec<Vec<Int>>,
    /// Every cone as an ascending ray index list, the zero cone first,
    /// ordered by dimension.
    cones: Vec<Vec<usize>>,
    maximal: Vec<Vec<usize>>,
}

pub fn fan_over(t: &Triangulation) -> Fan {
    let m = rat_from_int(&t.order);
    let rays: Vec<Vec<Int>> = t
        .points
        .iter()
        .map(|p| p.iter().map(|x| (x * &m).to_integer()).chain(std::iter::once(t.order.clone())).collect())
        .collect();
    let mut cones: BTreeSet<Vec<usize>> = BTreeSet::new();
    for cell in &t.cells {
        for k in 0..=cell.len() {
            for sub in cell.iter().copied().combinations(k) {
                cones.insert(sub);
            }
        }
    }
    let mut cones: Vec<Vec<usize>> = cones.into_iter().collect();
    cones.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Fan { rays, cones, maximal: t.cells.clone() }
}

impl Fan {
    /// Ambient dimension `n + 1`.
    pub fn dim(&self) -> usize {
        self.rays[0].len()
    }

    /// Ray generators indexed like the triangulation's points.
    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn maximal_cones(&self) -> &[Vec<usize>] {
        &self.maximal
    }

    pub fn cone_index(&self, rays: &[usize]) -> Option<usize> {
        let mut r = rays.to_vec();
        r.sort_unstable();
        self.cones.iter().position(|c| *c == r)
    }

    fn used_rays(&self) -> BTreeSet<usize> {
        self.maximal.iter().flatten().copied().collect()
    }

    /// Every ray generator `(m p, m)` is primitive, so the resolution keeps
    /// the canonical class torsion of the same order.
    pub fn is_crepant(&self) -> bool {
        self.used_rays().iter().all(|&r| gcd_all(&self.rays[r]).is_one())
    }

    /// Every maximal cone is unimodular.
    pub fn is_smooth(&self) -> bool {
        self.maximal.iter().all(|c| self.cone_matrix(c).det().abs().is_one())
    }

    fn cone_matrix(&self, cone: &[usize]) -> IntMatrix {
        IntMatrix::from_columns(&cone.iter().map(|&r| self.rays[r].clone()).collect::<Vec<_>>())
    }

    /// Pairs of maximal cones sharing a codimension-one face, with that face.
    pub fn interior_walls(&self) -> Vec<(usize, usize, Vec<usize>)> {
        let mut out = Vec::new();
        for (i, j) in (0..self.maximal.len()).tuple_combinations() {
            let shared: Vec<usize> = self.maximal[i].iter().copied().filter(|r| self.maximal[j].contains(r)).collect();
            if shared.len() + 1 == self.dim() {
                out.push((i, j, shared));
            }
        }
        out
    }
}

/// Piecewise-linear function on a fan given by its values on the rays and
/// the linear functional `m_σ` it restricts to on each maximal cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportFunction {
    ray_values: Vec<Rat>,
    cartier: Vec<RatVector>,
}

impl SupportFunction {
    /// `ray_values` is indexed like the fan's rays; values on rays that lie in
    /// no cone are ignored.
    pub fn from_ray_values(fan: &Fan, ray_values: Vec<Rat>) -> Result<Self, ResolutionError> {
        if ray_values.len() != fan.rays.len() {
            return Err(ResolutionError::RayValueCount { expected: fan.rays.len(), got: ray_values.len() });
        }
        let cartier = fan
            .maximal
            .iter()
            .map(|cone| {
                let rows: Vec<Vec<Rat>> = cone.iter().map(|&r| to_rat_vector(&fan.rays[r])).collect();
                let rhs: Vec<Rat> = cone.iter().map(|&r| ray_values[r].clone()).collect();
                solve_rat(&rows, &rhs).expect("maximal cones are full-dimensional")
            })
            .collect();
        Ok(SupportFunction { ray_values, cartier })
    }

    pub fn ray_values(&self) -> &[Rat] {
        &self.ray_values
    }

    /// `m_σ` for each maximal cone, in the fan's order.
    pub fn cartier_data(&self) -> &[RatVector] {
        &self.cartier
    }
}

/// Ray values `Σ_τ |⟨u, m_τ⟩|` over the codimension-one cones `τ`, with
/// `m_τ` the primitive normal of the hyperplane spanned by `τ`.
pub fn wall_sum_values(fan: &Fan) -> Vec<Rat> {
    let walls: Vec<Vec<Int>> = fan
        .cones
        .iter()
        .filter(|c| c.len() + 1 == fan.dim())
        .map(|c| {
            let rows: Vec<Vec<Rat>> = c.iter().map(|&r| to_rat_vector(&fan.rays[r])).collect();
            primitive_from_rat(&cofactor_normal(&rows))
        })
        .collect();
    fan.rays
        .iter()
        .map(|u| walls.iter().map(|w| rat_from_int(&dot_int(u, w).abs())).sum())
        .collect()
}

/// Wall test: across every interior wall between `σ` and `σ'`, the ray of
/// `σ'` outside the wall lies strictly above the linear extension `m_σ`.
pub fn is_strictly_convex(fan: &Fan, phi: &SupportFunction) -> bool {
    fan.interior_walls().iter().all(|(i, j, shared)| {
        [(*i, *j), (*j, *i)].iter().all(|&(a, b)| {
            let u = fan.maximal[b].iter().copied().find(|r| !shared.contains(r)).expect("wall has a far ray");
            let linear = crate::exactlat::dot_int_rat(&fan.rays[u], &phi.cartier[a]);
            phi.ray_values[u] > linear
        })
    })
}

/// A strictly convex support function. The wall-sum values are tried first,
/// then the squared norms of the rays, then small integer values.
pub fn support_function(fan: &Fan) -> Result<SupportFunction, ResolutionError> {
    let squares: Vec<Rat> = fan.rays.iter().map(|u| rat_from_int(&dot_int(u, u))).collect();
    for values in [wall_sum_values(fan), squares] {
        let phi = SupportFunction::from_ray_values(fan, values)?;
        if is_strictly_convex(fan, &phi) {
            return Ok(phi);
        }
    }
    let used: Vec<usize> = fan.used_rays().into_iter().collect();
    const SEARCH_LIMIT: usize = 200_000;
    for top in 1i64..=6 {
        let size = (top as usize + 1).checked_pow(used.len() as u32).unwrap_or(usize::MAX);
        if size > SEARCH_LIMIT {
            break;
        }
        for assignment in (0..used.len()).map(|_| 0..=top).multi_cartesian_product() {
            let mut values = vec![Rat::zero(); fan.rays.len()];
            for (&r, &v) in used.iter().zip(&assignment) {
                values[r] = Rat::from_integer(Int::from(v));
            }
            let phi = SupportFunction::from_ray_values(fan, values)?;
            if is_strictly_convex(fan, &phi) {
                return Ok(phi);
            }
        }
    }
    Err(ResolutionError::NoConvexSupport)
}

/// `{x : ⟨x, u_ρ⟩ ≤ φ(u_ρ)}` over the rays, with vertices the Cartier data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentPolyhedron {
    /// `(u, a)` meaning `⟨x, u⟩ ≤ a`.
    pub halfspaces: Vec<(Vec<Int>, Rat)>,
    pub vertices: Vec<RatVector>,
}

pub fn moment_polyhedron(fan: &Fan, phi: &SupportFunction) -> Result<MomentPolyhedron, ResolutionError> {
    if !is_strictly_convex(fan, phi) {
        return Err(ResolutionError::NotStrictlyConvex);
    }
    let halfspaces: Vec<(Vec<Int>, Rat)> =
        fan.used_rays().into_iter().map(|r| (fan.rays[r].clone(), phi.ray_values[r].clone())).collect();
    debug_assert!(phi
        .cartier
        .iter()
        .all(|v| halfspaces.iter().all(|(u, a)| crate::exactlat::dot_int_rat(u, v) <= *a)));
    Ok(MomentPolyhedron { halfspaces, vertices: phi.cartier.clone() })
}

/// A lattice point `Σ c_j u_j` with every `c_j ∈ (0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxElement {
    /// Index into [`Fan::cones`].
    pub cone: usize,
    pub point: Vec<Int>,
    pub coeffs: Vec<Rat>,
    /// `ψ = Σ c_j`.
    pub shift: Rat,
}

/// Lattice points of the half-open parallelepiped `{Σ c_j u_j : 0 ≤ c_j < 1}`
/// for linearly independent `u_j`, with their coefficients. There are
/// exactly as many as the index of the span of the `u_j` in its saturation.
pub fn parallelepiped_points(dim: usize, rays: &[Vec<Int>]) -> Vec<(Vec<Int>, Vec<Rat>)> {
    if rays.is_empty() {
        return vec![(vec![Int::zero(); dim], Vec::new())];
    }
    let d = dim;
    let u = IntMatrix::from_columns(rays);
    let snf = smith_normal_form(&u);
    let k = rays.len();
    let s: Vec<Int> = snf.diagonal.clone();
    assert!(s.iter().all(|x| !x.is_zero()), "cone rays must be linearly independent");
    // U Q = P⁻¹ S, so (Q a/s) are the coefficients of Σ a_i w_i with w_i the
    // columns of P⁻¹; the w_i with 0 ≤ a_i < s_i run over the cosets.
    let ranges: Vec<Vec<Int>> = s.iter().map(|si| (0..si.to_u64().expect("small index")).map(Int::from).collect()).collect();
    let mut out = Vec::new();
    for a in ranges.into_iter().multi_cartesian_product() {
        let scaled: Vec<Rat> = a.iter().zip(&s).map(|(ai, si)| Rat::new(ai.clone(), si.clone())).collect();
        let coeffs: Vec<Rat> = (0..k)
            .map(|i| frac(&(0..k).map(|j| rat_from_int(&snf.q[(i, j)]) * &scaled[j]).sum::<Rat>()))
            .collect();
        let point: Vec<Int> = (0..d)
            .map(|row| {
                let x: Rat = (0..k).map(|j| &coeffs[j] * rat_from_int(&rays[j][row])).sum();
                debug_assert!(x.is_integer());
                x.to_integer()
            })
            .collect();
        out.push((point, coeffs));
    }
    out.sort();
    out
}

pub fn box_elements(fan: &Fan, cone: usize) -> Vec<BoxElement> {
    let rays: Vec<Vec<Int>> = fan.cones[cone].iter().map(|&r| fan.rays[r].clone()).collect();
    parallelepiped_points(fan.dim(), &rays)
        .into_iter()
        .filter(|(_, c)| c.iter().all(|x| x.is_positive()))
        .map(|(point, coeffs)| {
            let shift = coeffs.iter().sum();
            BoxElement { cone, point, coeffs, shift }
        })
        .collect()
}

/// `h_τ(q) = Σ_{σ ⊇ τ} q^{dim σ - dim τ} (1 - q)^{codim σ}`.
pub fn h_polynomial(fan: &Fan, cone: usize) -> IntPoly {
    let tau = &fan.cones[cone];
    let d = fan.dim();
    let h = fan
        .cones
        .iter()
        .filter(|s| tau.iter().all(|r| s.contains(r)))
        .fold(IntPoly::default(), |acc, s| {
            acc.add(&IntPoly::monomial(s.len() - tau.len()).mul(&IntPoly::one_minus_q_to_power(d - s.len())))
        });
    debug_assert!(h.coeffs().iter().all(|c| !c.is_negative()));
    h
}

/// `h_F(q) = Σ_{G ⊆ F} q^{dim F - dim G} (1 - q)^{dim G}` from the
/// dimensions of the non-empty faces `G` of a polytope `F`.
pub fn face_h_polynomial(dim: usize, face_dims: impl IntoIterator<Item = usize>) -> IntPoly {
    face_dims.into_iter().fold(IntPoly::default(), |acc, g| {
        acc.add(&IntPoly::monomial(dim - g).mul(&IntPoly::one_minus_q_to_power(g)))
    })
}

/// One twisted sector of the resolution: a box element with the Poincaré
/// polynomial of its cone's orbit closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sector {
    pub element: BoxElement,
    pub h: IntPoly,
}

impl Sector {
    /// Graded dimensions `h_i` placed in degree `2(i + ψ)`.
    pub fn cohomology(&self, window: &Window) -> GradedDimension {
        let mut out = GradedDimension::new(window.clone());
        for (i, c) in self.h.coeffs().iter().enumerate() {
            let deg = (Rat::from_integer(Int::from(i as i64)) + &self.element.shift) * Rat::from_integer(Int::from(2));
            out.add(deg, c.to_u64().expect("h-coefficients are non-negative"));
        }
        out
    }
}

/// All sectors: the untwisted one (zero cone, `ψ = 0`) first.
pub fn sectors(fan: &Fan) -> Vec<Sector> {
    (0..fan.cones.len())
        .into_par_iter()
        .flat_map_iter(|c| {
            let h = h_polynomial(fan, c);
            box_elements(fan, c).into_iter().map(move |element| Sector { element, h: h.clone() })
        })
        .collect()
}

fn orbifold_window(fan: &Fan) -> Window {
    Window::new(Rat::zero(), Rat::from_integer(Int::from(2 * fan.dim() as i64)))
}

/// `dim H^{2j}_orb` of the toric variety of the fan, keyed by degree `2j`.
pub fn orbifold_poincare(fan: &Fan) -> GradedDimension {
    let window = orbifold_window(fan);
    let mut out = GradedDimension::new(window.clone());
    for s in sectors(fan) {
        for (d, k) in s.cohomology(&window).iter() {
            out.add(d.clone(), k);
        }
    }
    out
}

/// `cb_{2j} = Σ_{k≥0} dim H^{2n-2j+2k}` on the grid `2/m` of the window.
pub fn betti_from_orbifold(h: &GradedDimension, n: usize, order: &Int, window: &Window) -> GradedDimension {
    let two = Rat::from_integer(Int::from(2));
    let top = Rat::from_integer(Int::from(2 * n as i64));
    let mut out = GradedDimension::new(window.clone());
    for d in window.grid(&(&two / rat_from_int(order))) {
        let base = &top - &d;
        let total: u64 = h
            .iter()
            .filter(|(e, _)| {
                let gap = *e - &base;
                !gap.is_negative() && (gap / &two).is_integer()
            })
            .map(|(_, k)| k)
            .sum();
        out.add(d, total);
    }
    out
}

/// Contact Betti numbers of the boundary from the orbifold cohomology of the
/// resolution.
pub fn hc_from_resolution(diagram: &ToricDiagram, t: &Triangulation, window: &Window) -> Result<GradedDimension, ResolutionError> {
    validate_triangulation(diagram, t)?;
    let h = orbifold_poincare(&fan_over(t));
    Ok(betti_from_orbifold(&h, diagram.dim(), diagram.order(), window))
}

/// Per-sector contributions to the contact Betti numbers, in the order of
/// [`sectors`].
pub fn hc_contributions(diagram: &ToricDiagram, t: &Triangulation, window: &Window) -> Result<Vec<(Sector, GradedDimension)>, ResolutionError> {
    validate_triangulation(diagram, t)?;
    let fan = fan_over(t);
    let ow = orbifold_window(&fan);
    Ok(sectors(&fan)
        .into_iter()
        .map(|s| {
            let cb = betti_from_orbifold(&s.cohomology(&ow), diagram.dim(), diagram.order(), window);
            (s, cb)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StapledonReport {
    pub delta: DeltaVector,
    pub orbifold: GradedDimension,
    pub unimodular: bool,
    pub crepant: bool,
    /// Length of the verified prefix of the Ehrhart series.
    pub series_terms: u64,
}

/// Ehrhart series of `D` rebuilt from box elements, truncated before `q^len`:
/// `Σ_θ Σ_{η⊆θ} q^{m(|θ|-|η|)} Σ_{μ ∈ Box(η)} q^{mψ(μ)} / (1 - q^m)^{|θ|}`.
fn box_sum_series(fan: &Fan, order: usize, len: usize) -> Vec<Int> {
    let boxes: BTreeMap<&Vec<usize>, Vec<usize>> = fan
        .cones
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let shifts = box_elements(fan, i)
                .iter()
                .map(|b| (&b.shift * Rat::from_integer(Int::from(order))).to_integer().to_usize().expect("small shift"))
                .collect();
            (c, shifts)
        })
        .collect();
    let mut series = vec![Int::zero(); len];
    for theta in &fan.cones {
        let k = theta.len();
        for eta_size in 0..=k {
            for eta in theta.iter().copied().combinations(eta_size) {
                for &s in &boxes[&eta] {
                    let start = order * (k - eta_size) + s;
                    // 1/(1 - q^m)^k contributes C(i + k - 1, k - 1) at q^{mi}.
                    if k == 0 {
                        if start < len {
                            series[start] += 1;
                        }
                        continue;
                    }
                    for (i, pos) in (start..len).step_by(order).enumerate() {
                        series[pos] += binomial(i + k - 1, k - 1);
                    }
                }
            }
        }
    }
    series
}

fn binomial(a: usize, b: usize) -> Int {
    (0..b).fold(Int::one(), |acc, i| acc * Int::from(a - i) / Int::from(i + 1))
}

/// Checks `dim H^{2j}_orb = δ_{mj}` for all `j`, and the box-sum form of the
/// Ehrhart series against direct counts up to `q^{3m(n+1)}`.
pub fn stapledon_check(diagram: &ToricDiagram, t: &Triangulation) -> Result<StapledonReport, ResolutionError> {
    let report = validate_triangulation(diagram, t)?;
    let fan = fan_over(t);
    let delta = diagram.delta()?;
    let orbifold = orbifold_poincare(&fan);
    let m = delta.order();
    let two = Rat::from_integer(Int::from(2));
    let mr = Rat::from_integer(Int::from(m as i64));
    for (deg, found) in orbifold.iter() {
        let mj = deg / &two * &mr;
        let expected = if mj.is_integer() { delta.get(mj.to_integer().to_i64().expect("small index")) } else { 0 };
        if found != expected {
            return Err(ResolutionError::MismatchAt { degree: deg.clone(), found, expected });
        }
    }
    for (j, &expected) in delta.coeffs().iter().enumerate() {
        let deg = Rat::new(Int::from(2 * j), Int::from(m));
        let found = orbifold.get(&deg);
        if found != expected {
            return Err(ResolutionError::MismatchAt { degree: deg, found, expected });
        }
    }
    let len = 3 * m * (delta.dim() + 1);
    let series = box_sum_series(&fan, m, len);
    let ts: Vec<u64> = (0..len as u64).collect();
    for (t, c) in ts.iter().zip(counts(diagram.polytope(), &ts, Region::Closed)) {
        if series[*t as usize] != Int::from(c) {
            return Err(ResolutionError::SeriesMismatchAt { t: *t });
        }
    }
    Ok(StapledonReport { delta, orbifold, unimodular: report.unimodular, crepant: fan.is_crepant(), series_terms: len as u64 })
}
