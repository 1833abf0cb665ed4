//! Prequantizations: Gorenstein toric contact manifolds as circle orbibundles
//! over toric symplectic orbifolds.
//!
//! A labelled polytope `Δ = {x : ⟨x, v_j⟩ + b_j ≥ 0}` gives the cone `C`
//! with normals `ν_j = (v_j, b_j)` and Reeb vector `e_{n+1}`. Conversely an
//! integral Reeb vector `ν = (w, r)` on a toric diagram gives a base orbifold
//! whose twisted sectors determine the contact homology.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::contact::{validate_diagram, ContactError, ToricDiagram};
use crate::exactlat::{
    dot_int, extend_to_basis, frac, gcd_all, is_integral, lattice_index, primitive_from_rat, rank_rat, rat_from_int,
    smith_invariants, solve_rat, to_rat_vector, Int, IntMatrix, LatticeError, Rat, RatVector,
};
use crate::graded::{GradedDimension, Window};
use crate::poly::IntPoly;
use crate::polytope::{convex_hull, LabelledPolytope, PolytopeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrequantError {
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Contact(#[from] ContactError),
    #[error("normals do not span, so the cone is not strictly convex")]
    NotStrictlyConvex,
    #[error("cone is not good at the face cut out by normals {face:?}: {reason}")]
    NotGood { face: Vec<usize>, reason: String },
    #[error("no integral functional takes the value 1 on every cone normal")]
    NotGorenstein,
    #[error("Reeb vector is not primitive")]
    NotPrimitive,
    #[error("Reeb vector does not lie in the interior of the dual cone")]
    NotInterior,
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("contact homology from the quotient needs a Gorenstein manifold; this one is only Q-Gorenstein")]
    QGorenstein,
    #[error("the base orbifold is not smooth")]
    BaseNotSmooth,
}

/// A good cone `C = {y : ⟨y, ν_j⟩ ≥ 0}` with its face lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodCone {
    normals: Vec<Vec<Int>>,
    rays: Vec<Vec<Int>>,
    /// Normal indices tight on each ray.
    ray_facets: Vec<Vec<usize>>,
    /// Normal index sets of all faces other than the apex, the whole cone
    /// (empty set) first, ordered by size.
    faces: Vec<Vec<usize>>,
}

/// Checks that the normals define a good cone. The error names the first
/// face whose normals are not part of a lattice basis.
pub fn is_good_cone(normals: &[Vec<Int>]) -> Result<GoodCone, PrequantError> {
    let Some(dim) = normals.first().map(|v| v.len()) else {
        return Err(PrequantError::NotStrictlyConvex);
    };
    if normals.iter().any(|v| v.len() != dim) {
        return Err(PrequantError::DimensionMismatch { expected: dim, got: normals.iter().map(|v| v.len()).find(|&l| l != dim).unwrap_or(0) });
    }
    if let Some(j) = normals.iter().position(|v| !gcd_all(v).is_one()) {
        return Err(PrequantError::NotGood { face: vec![j], reason: "normal is not primitive".into() });
    }
    let rat_normals: Vec<RatVector> = normals.iter().map(|v| to_rat_vector(v)).collect();
    if dim < 2 || rank_rat(&rat_normals) != dim {
        return Err(PrequantError::NotStrictlyConvex);
    }
    // Σ ν_j is positive on C ∖ 0, so rays are the vertices of the slice
    // ⟨y, Σ ν_j⟩ = 1.
    let sum: RatVector = (0..dim).map(|i| rat_normals.iter().map(|v| v[i].clone()).sum()).collect();
    let mut rays: BTreeMap<Vec<Int>, Vec<usize>> = BTreeMap::new();
    for combo in (0..normals.len()).combinations(dim - 1) {
        let mut rows: Vec<RatVector> = combo.iter().map(|&j| rat_normals[j].clone()).collect();
        rows.push(sum.clone());
        let mut rhs = vec![Rat::zero(); dim - 1];
        rhs.push(Rat::one());
        let Some(y) = solve_rat(&rows, &rhs) else { continue };
        let values: Vec<Rat> = rat_normals.iter().map(|v| crate::exactlat::dot_rat(v, &y)).collect();
        if values.iter().any(|x| x.is_negative()) {
            continue;
        }
        let tight = values.iter().enumerate().filter(|(_, x)| x.is_zero()).map(|(j, _)| j).collect();
        rays.insert(primitive_from_rat(&y), tight);
    }
    let (rays, ray_facets): (Vec<Vec<Int>>, Vec<Vec<usize>>) = rays.into_iter().unzip();
    if rank_rat(&rays.iter().map(|r| to_rat_vector(r)).collect::<Vec<_>>()) != dim {
        return Err(PrequantError::NotGood { face: Vec::new(), reason: "cone is not full-dimensional".into() });
    }
    let mut faces: BTreeSet<Vec<usize>> = ray_facets.iter().cloned().collect();
    loop {
        let next: BTreeSet<Vec<usize>> = faces
            .iter()
            .tuple_combinations()
            .map(|(a, b)| a.iter().copied().filter(|j| b.contains(j)).collect::<Vec<usize>>())
            .filter(|j| !faces.contains(j))
            .collect();
        if next.is_empty() {
            break;
        }
        faces.extend(next);
    }
    faces.insert(Vec::new());
    let mut faces: Vec<Vec<usize>> = faces.into_iter().collect();
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for face in &faces {
        let spanning: Vec<RatVector> = rays
            .iter()
            .zip(&ray_facets)
            .filter(|(_, t)| face.iter().all(|j| t.contains(j)))
            .map(|(r, _)| to_rat_vector(r))
            .collect();
        let codim = dim - rank_rat(&spanning);
        if face.is_empty() {
            continue;
        }
        if face.len() != codim {
            return Err(PrequantError::NotGood { face: face.clone(), reason: format!("codimension {codim} face lies on {} facets", face.len()) });
        }
        let vs: Vec<Vec<Int>> = face.iter().map(|&j| normals[j].clone()).collect();
        let index = lattice_index(&vs)?;
        if !index.is_one() {
            return Err(PrequantError::NotGood { face: face.clone(), reason: format!("normals span a sublattice of index {index}") });
        }
    }
    Ok(GoodCone { normals: normals.to_vec(), rays, ray_facets, faces })
}

impl GoodCone {
    /// `n + 1`.
    pub fn dim(&self) -> usize {
        self.normals[0].len()
    }

    pub fn normals(&self) -> &[Vec<Int>] {
        &self.normals
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn ray_facets(&self) -> &[Vec<usize>] {
        &self.ray_facets
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// `ν` pairs positively with every ray, so its flow is a Reeb flow.
    pub fn is_reeb(&self, nu: &[Int]) -> bool {
        nu.len() == self.dim() && self.rays.iter().all(|r| dot_int(r, nu).is_positive())
    }

    /// Poincaré polynomial of the face of the base cut out by `face`:
    /// `Σ_{J ⊇ face} q^{|J| - |face|} (1 - q)^{n - |J|}`.
    pub fn face_h_polynomial(&self, face: &[usize]) -> IntPoly {
        let n = self.dim() - 1;
        self.faces.iter().filter(|j| face.iter().all(|f| j.contains(f))).fold(IntPoly::default(), |acc, j| {
            acc.add(&IntPoly::monomial(j.len() - face.len()).mul(&IntPoly::one_minus_q_to_power(n - j.len())))
        })
    }

    /// The functional `f` with `f(ν_j) = 1` for all `j`, if one exists.
    pub fn gorenstein_functional(&self) -> Option<RatVector> {
        let dim = self.dim();
        let rows: Vec<RatVector> = self.normals.iter().map(|v| to_rat_vector(v)).collect();
        let mut basis: Vec<RatVector> = Vec::new();
        for row in &rows {
            let mut trial = basis.clone();
            trial.push(row.clone());
            if rank_rat(&trial) == trial.len() {
                basis = trial;
            }
            if basis.len() == dim {
                break;
            }
        }
        let f = solve_rat(&basis, &vec![Rat::one(); dim])?;
        rows.iter().all(|r| crate::exactlat::dot_rat(r, &f).is_one()).then_some(f)
    }
}

/// `(r, w)` with `⟨(w, r), (v_j, b_j)⟩ = 1` for every facet, when the
/// solution is integral with `r ≥ 1`.
pub fn gorenstein_r(delta: &LabelledPolytope) -> Option<(Int, Vec<Int>)> {
    let normals = cone_normals(delta);
    let rows: Vec<RatVector> = normals.iter().map(|v| to_rat_vector(v)).collect();
    let dim = delta.dim() + 1;
    let mut basis = Vec::new();
    for row in &rows {
        let mut trial: Vec<RatVector> = basis.clone();
        trial.push(row.clone());
        if rank_rat(&trial) == trial.len() {
            basis = trial;
        }
    }
    if basis.len() != dim {
        return None;
    }
    let f = solve_rat(&basis, &vec![Rat::one(); dim])?;
    if !rows.iter().all(|r| crate::exactlat::dot_rat(r, &f).is_one()) || !is_integral(&f) {
        return None;
    }
    let f: Vec<Int> = f.iter().map(|x| x.to_integer()).collect();
    let r = f[delta.dim()].clone();
    (r >= Int::one()).then(|| (r, f[..delta.dim()].to_vec()))
}

fn cone_normals(delta: &LabelledPolytope) -> Vec<Vec<Int>> {
    delta
        .normals()
        .iter()
        .zip(delta.offsets())
        .map(|(v, b)| v.iter().cloned().chain(std::iter::once(b.clone())).collect())
        .collect()
}

/// Rows of a unimodular matrix whose last row is the primitive `f`.
fn unimodular_with_last_row(f: &[Int]) -> Result<IntMatrix, PrequantError> {
    let mut rows = extend_to_basis(&[f.to_vec()])?;
    rows.push(f.to_vec());
    Ok(IntMatrix::from_rows(&rows))
}

/// The toric diagram of the prequantization of `Δ`: the cone normals are
/// moved by a unimodular `[A; (w, r)]` to `(ṽ_j, 1)`.
pub fn diagram_from_labelled(delta: &LabelledPolytope) -> Result<ToricDiagram, PrequantError> {
    let normals = cone_normals(delta);
    is_good_cone(&normals)?;
    let (r, w) = gorenstein_r(delta).ok_or(PrequantError::NotGorenstein)?;
    let f: Vec<Int> = w.into_iter().chain(std::iter::once(r)).collect();
    let g = unimodular_with_last_row(&f)?;
    let n = delta.dim();
    let points: Vec<RatVector> = normals
        .iter()
        .map(|nu| {
            let image = g.mul_vec(nu);
            debug_assert!(image[n].is_one());
            to_rat_vector(&image[..n])
        })
        .collect();
    Ok(validate_diagram(&convex_hull(&points)?)?)
}

/// One connected component of a twisted sector: the face of the base cut
/// out by the normals `face`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorComponent {
    pub face: Vec<usize>,
    /// `c_j ∈ (0, 1)` with `Σ c_j ν_j + T ν` integral.
    pub coeffs: Vec<Rat>,
    /// Age shift `c_T = 2 Σ c_j`.
    pub shift: Rat,
    /// Poincaré polynomial of the component.
    pub h: IntPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedSector {
    /// `T ∈ (0, 1]`.
    pub period: Rat,
    pub components: Vec<SectorComponent>,
}

/// Components with a given period found at one face.
fn face_sectors(cone: &GoodCone, nu: &[Int], face: &[usize]) -> Vec<(Rat, SectorComponent)> {
    let dim = cone.dim();
    let spanning: Vec<Vec<Int>> = face.iter().map(|&j| cone.normals[j].clone()).collect();
    let mut columns = spanning.clone();
    if spanning.is_empty() {
        columns = IntMatrix::identity(dim).to_rows();
    } else {
        columns.extend(extend_to_basis(&spanning).expect("good cone faces extend to a basis"));
    }
    let basis = IntMatrix::from_columns(&columns);
    let coords = basis.inverse_unimodular().expect("basis is unimodular").mul_vec(nu);
    let g = gcd_all(&coords[face.len()..]);
    let Some(g) = g.to_u64().filter(|g| *g > 0) else { return Vec::new() };
    let h = cone.face_h_polynomial(face);
    (1..=g)
        .filter_map(|s| {
            let t = Rat::new(Int::from(s), Int::from(g));
            let coeffs: Vec<Rat> = coords[..face.len()].iter().map(|x| frac(&-(rat_from_int(x) * &t))).collect();
            if coeffs.iter().any(|c| c.is_zero()) {
                return None;
            }
            let shift = coeffs.iter().sum::<Rat>() * Rat::from_integer(Int::from(2));
            Some((t, SectorComponent { face: face.to_vec(), coeffs, shift, h: h.clone() }))
        })
        .collect()
}

/// Twisted sectors of the quotient of the contact manifold of `cone` by the
/// circle generated by `ν`, ordered by period.
pub fn twisted_sectors(cone: &GoodCone, nu: &[Int]) -> Vec<TwistedSector> {
    let found: Vec<(Rat, SectorComponent)> = cone.faces.par_iter().flat_map_iter(|face| face_sectors(cone, nu, face)).collect();
    let mut by_period: BTreeMap<Rat, Vec<SectorComponent>> = BTreeMap::new();
    for (t, c) in found {
        by_period.entry(t).or_default().push(c);
    }
    by_period.into_iter().map(|(period, components)| TwistedSector { period, components }).collect()
}

/// Components sharing a period lie on faces that do not meet.
pub fn components_disjoint(cone: &GoodCone, sectors: &[TwistedSector]) -> bool {
    let faces: BTreeSet<&Vec<usize>> = cone.faces.iter().collect();
    sectors.iter().all(|s| {
        s.components.iter().tuple_combinations().all(|(a, b)| {
            let mut union: Vec<usize> = a.face.iter().chain(&b.face).copied().collect();
            union.sort_unstable();
            union.dedup();
            !faces.contains(&union)
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientData {
    cone: GoodCone,
    nu: Vec<Int>,
    /// `f(ν)` for the functional with `f(ν_j) = 1`; `None` when that
    /// functional is not integral.
    r: Option<Int>,
    base: LabelledPolytope,
    sectors: Vec<TwistedSector>,
}

impl QuotientData {
    fn build(cone: GoodCone, nu: Vec<Int>, base: LabelledPolytope) -> Self {
        let r = cone
            .gorenstein_functional()
            .filter(|f| is_integral(f))
            .map(|f| crate::exactlat::dot_int_rat(&nu, &f).to_integer());
        let sectors = twisted_sectors(&cone, &nu);
        QuotientData { cone, nu, r, base, sectors }
    }

    pub fn cone(&self) -> &GoodCone {
        &self.cone
    }

    pub fn reeb(&self) -> &[Int] {
        &self.nu
    }

    /// The Gorenstein index `r`; `None` for a Q-Gorenstein manifold.
    pub fn r(&self) -> Option<&Int> {
        self.r.as_ref()
    }

    pub fn base(&self) -> &LabelledPolytope {
        &self.base
    }

    pub fn sectors(&self) -> &[TwistedSector] {
        &self.sectors
    }

    pub fn is_smooth(&self) -> bool {
        self.base.is_smooth()
    }

    /// `n`, half the real dimension of the base.
    pub fn dim(&self) -> usize {
        self.base.dim()
    }
}

/// The base of the circle action generated by `ν = (w, r)` on the contact
/// manifold of `D`, as the image of the cone in `Z^{n+1}/νZ`.
pub fn quotient_polytope(diagram: &ToricDiagram, nu: &[Int]) -> Result<QuotientData, PrequantError> {
    let dim = diagram.dim() + 1;
    if nu.len() != dim {
        return Err(PrequantError::DimensionMismatch { expected: dim, got: nu.len() });
    }
    if !gcd_all(nu).is_one() {
        return Err(PrequantError::NotPrimitive);
    }
    let cone = is_good_cone(diagram.normals())?;
    if !cone.is_reeb(nu) {
        return Err(PrequantError::NotInterior);
    }
    // Columns (E, ν) form a basis, so its inverse G sends ν to e_{n+1}.
    let mut columns = extend_to_basis(&[nu.to_vec()])?;
    columns.push(nu.to_vec());
    let g = IntMatrix::from_columns(&columns).inverse_unimodular().expect("completed basis is unimodular");
    let (normals, offsets): (Vec<Vec<Int>>, Vec<Int>) = cone
        .normals
        .iter()
        .map(|v| {
            let mut image = g.mul_vec(v);
            let b = image.pop().expect("non-empty");
            (image, b)
        })
        .unzip();
    let base = LabelledPolytope::new(normals, offsets)?;
    Ok(QuotientData::build(cone, nu.to_vec(), base))
}

/// The prequantization of `Δ` viewed through its own Reeb vector `e_{n+1}`.
pub fn prequantization(delta: &LabelledPolytope) -> Result<QuotientData, PrequantError> {
    let cone = is_good_cone(&cone_normals(delta))?;
    let mut nu = vec![Int::zero(); delta.dim() + 1];
    nu[delta.dim()] = Int::one();
    Ok(QuotientData::build(cone, nu, delta.clone()))
}

/// `H^*_orb` of the base: each component's cohomology raised by its shift.
pub fn orbifold_cohomology_of_base(q: &QuotientData) -> GradedDimension {
    let two = Rat::from_integer(Int::from(2));
    let mut out = GradedDimension::new(Window::new(Rat::zero(), &two * Rat::from_integer(Int::from(q.dim() as i64))));
    for s in &q.sectors {
        for c in &s.components {
            for (i, k) in c.h.coeffs().iter().enumerate() {
                out.add(&c.shift + &two * Rat::from_integer(Int::from(i as i64)), k.to_u64().expect("non-negative"));
            }
        }
    }
    out
}

/// `Σ_{k≥0} dim H_{d - shift - 2rk}` for a graded piece with even-degree
/// Poincaré polynomial `h`, on the even degrees of the window.
fn shifted_copies(h: &IntPoly, shift: &Rat, r: &Int, window: &Window) -> GradedDimension {
    let two = Rat::from_integer(Int::from(2));
    let period = &two * rat_from_int(r);
    let mut out = GradedDimension::new(window.clone());
    for d in window.grid(&two) {
        let mut total = 0u64;
        let mut base = &d - shift;
        while !base.is_negative() {
            let half = &base / &two;
            if half.is_integer() {
                if let Some(c) = half.to_integer().to_usize().and_then(|i| h.coeffs().get(i)) {
                    total += c.to_u64().expect("non-negative");
                }
            }
            base -= &period;
        }
        out.add(d, total);
    }
    out
}

fn require_r(q: &QuotientData) -> Result<&Int, PrequantError> {
    q.r.as_ref().ok_or(PrequantError::QGorenstein)
}

/// Contribution of each period `T` to the contact homology, ordered by `T`.
pub fn hc_by_period(q: &QuotientData, window: &Window) -> Result<Vec<(Rat, GradedDimension)>, PrequantError> {
    let r = require_r(q)?;
    let two = Rat::from_integer(Int::from(2));
    Ok(q.sectors
        .iter()
        .map(|s| {
            let mut row = GradedDimension::new(window.clone());
            for c in &s.components {
                // |S| = c_T + 2rT - 2
                let degree = &c.shift + &two * rat_from_int(r) * &s.period - &two;
                for (d, k) in shifted_copies(&c.h, &degree, r, window).iter() {
                    row.add(d.clone(), k);
                }
            }
            (s.period.clone(), row)
        })
        .collect())
}

/// Contact homology from the twisted sectors of the base.
pub fn hc_from_quotient(q: &QuotientData, window: &Window) -> Result<GradedDimension, PrequantError> {
    let mut out = GradedDimension::new(window.clone());
    for (_, row) in hc_by_period(q, window)? {
        for (d, k) in row.iter() {
            out.add(d.clone(), k);
        }
    }
    Ok(out)
}

/// Contact homology as copies of the base's homology raised by
/// `2rk + 2(r - 1)`; only valid for a smooth base.
pub fn hc_smooth_base(q: &QuotientData, window: &Window) -> Result<GradedDimension, PrequantError> {
    if !q.is_smooth() {
        return Err(PrequantError::BaseNotSmooth);
    }
    let r = require_r(q)?;
    let two = Rat::from_integer(Int::from(2));
    let shift = &two * (rat_from_int(r) - Rat::one());
    Ok(shifted_copies(&q.cone.face_h_polynomial(&[]), &shift, r, window))
}

/// `|π_1|` of the contact manifold: the gcd of the maximal minors of the
/// normal matrix.
pub fn fundamental_group_order(normals: &[Vec<Int>]) -> Int {
    let m = IntMatrix::from_rows(normals);
    let inv = smith_invariants(&m);
    if inv.len() < m.cols() {
        return Int::zero();
    }
    inv.iter().product()
}

/// Minimal Chern number `r·p` of a smooth base.
pub fn minimal_chern(q: &QuotientData) -> Result<Int, PrequantError> {
    if !q.is_smooth() {
        return Err(PrequantError::BaseNotSmooth);
    }
    Ok(require_r(q)? * fundamental_group_order(&q.cone.normals))
}

/// `Σ_{2j-2 < q ≤ 2j} dim H^q` for `j = 0..=n`.
pub fn ceil_rounded(h: &GradedDimension, n: usize) -> Vec<u64> {
    let two = Rat::from_integer(Int::from(2));
    (0..=n as i64)
        .map(|j| {
            let top = &two * Rat::from_integer(Int::from(j));
            let bottom = &top - &two;
            h.iter().filter(|(q, _)| **q > bottom && **q <= top).map(|(_, k)| k).sum()
        })
        .collect()
}

/// `Σ_{2j ≤ q < 2j+2} dim H^q` for `j = 0..=n`.
pub fn floor_rounded(h: &GradedDimension, n: usize) -> Vec<u64> {
    let two = Rat::from_integer(Int::from(2));
    (0..=n as i64)
        .map(|j| {
            let bottom = &two * Rat::from_integer(Int::from(j));
            let top = &bottom + &two;
            h.iter().filter(|(q, _)| **q >= bottom && **q < top).map(|(_, k)| k).sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::contact_betti_from_delta;
    use crate::exactlat::{int_vector, rat, rat_vector};

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| int_vector(r)).collect()
    }

    fn labelled(normals: &[&[i64]], offsets: &[i64]) -> LabelledPolytope {
        LabelledPolytope::new(ints(normals), int_vector(offsets)).unwrap()
    }

    fn diagram(pts: &[(i64, i64)]) -> ToricDiagram {
        let v: Vec<RatVector> = pts.iter().map(|&(a, b)| rat_vector(&[(a, 1), (b, 1)])).collect();
        validate_diagram(&convex_hull(&v).unwrap()).unwrap()
    }

    fn cp2(scale: i64) -> LabelledPolytope {
        labelled(&[&[1, 0], &[0, 1], &[-1, -1]], &[0, 0, scale])
    }

    fn s2s2(scale: i64) -> LabelledPolytope {
        labelled(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]], &[0, 0, scale, scale])
    }

    fn weighted() -> LabelledPolytope {
        labelled(&[&[1, 0], &[-1, -1], &[-3, 1]], &[0, 1, 2])
    }

    fn lens_skew() -> ToricDiagram {
        diagram(&[(0, 0), (1, 0), (2, 3)])
    }

    fn even_row(g: &GradedDimension, top: i64) -> Vec<u64> {
        (0..=top / 2).map(|j| g.get(&rat(2 * j, 1))).collect()
    }

    fn window(top: i64) -> Window {
        Window::new(rat(0, 1), rat(top, 1))
    }

    #[test]
    fn good_cones() {
        assert!(is_good_cone(&ints(&[&[1, 0, 1], &[0, 1, 1], &[-1, -1, 1]])).is_ok());
        let c = is_good_cone(&ints(&[&[1, 0, 0], &[0, 1, 0], &[-1, 0, 3], &[0, -1, 3]])).unwrap();
        assert_eq!(c.rays().len(), 4);
        assert_eq!(c.faces().len(), 1 + 4 + 4);
        // Only faces of codimension 1..n count; the apex may have any index.
        assert!(is_good_cone(&ints(&[&[2, 1], &[0, 1]])).is_ok());
        assert_eq!(fundamental_group_order(&ints(&[&[2, 1], &[0, 1]])), Int::from(2));
        let err = is_good_cone(&ints(&[&[0, 0, 1], &[2, 0, 1], &[0, 2, 1]])).unwrap_err();
        assert!(matches!(err, PrequantError::NotGood { ref face, .. } if face.len() == 2), "{err:?}");
        assert_eq!(is_good_cone(&ints(&[&[1, 0, 0], &[0, 1, 0]])), Err(PrequantError::NotStrictlyConvex));
    }

    #[test]
    fn gorenstein_indices() {
        assert_eq!(gorenstein_r(&cp2(1)), Some((Int::from(3), int_vector(&[1, 1]))));
        assert_eq!(gorenstein_r(&cp2(3)).map(|x| x.0), Some(Int::from(1)));
        assert_eq!(gorenstein_r(&s2s2(1)).map(|x| x.0), Some(Int::from(2)));
        assert_eq!(gorenstein_r(&s2s2(2)).map(|x| x.0), Some(Int::from(1)));
        assert_eq!(gorenstein_r(&weighted()), Some((Int::from(2), int_vector(&[1, 0]))));
        assert_eq!(gorenstein_r(&cp2(2)), None);
    }

    #[test]
    fn diagrams_of_prequantizations() {
        let delta = |d: &LabelledPolytope| diagram_from_labelled(d).unwrap().delta().unwrap().coeffs().to_vec();
        assert_eq!(delta(&cp2(1)), vec![1, 0, 0]);
        assert_eq!(delta(&cp2(3)), vec![1, 1, 1]);
        assert_eq!(delta(&s2s2(1)), vec![1, 1, 0]);
        assert_eq!(delta(&s2s2(2)), vec![1, 2, 1]);
        assert_eq!(delta(&weighted()), vec![1, 1, 1]);
        assert_eq!(diagram_from_labelled(&cp2(2)), Err(PrequantError::NotGorenstein));
    }

    #[test]
    fn weighted_base_change_of_basis() {
        let g = IntMatrix::from_i64_rows(&[&[-2, 0, 1], &[-1, 1, 0], &[1, 0, 0]]);
        let cols = IntMatrix::from_i64_rows(&[&[1, 0, 1, 2], &[1, 0, 0, 3], &[2, 1, 1, 1]]);
        let expected = IntMatrix::from_i64_rows(&[&[0, 1, -1, -3], &[0, 0, -1, 1], &[1, 0, 1, 2]]);
        assert_eq!(&g * &cols, expected);
        // The inverse carries the cone normals of the weighted base back to
        // the diagram; its last row is the functional (w, r).
        let inv = g.inverse_unimodular().unwrap();
        assert_eq!(inv.row(2), int_vector(&[1, 0, 2]).as_slice());
        let a = IntMatrix::from_rows(&[inv.row(0).to_vec(), inv.row(1).to_vec()]);
        let images: Vec<Vec<Int>> = cone_normals(&weighted()).iter().map(|v| a.mul_vec(v)).collect();
        assert_eq!(images, ints(&[&[0, 0], &[1, 0], &[2, 3]]));
    }

    #[test]
    fn weighted_projective_quotient() {
        let q = quotient_polytope(&lens_skew(), &int_vector(&[1, 1, 2])).unwrap();
        assert_eq!(q.r(), Some(&Int::from(2)));
        let mut iso = q.base().isotropy_orders();
        iso.sort();
        assert_eq!(iso, int_vector(&[1, 1, 4]));
        assert!(!q.is_smooth());
        let periods: Vec<Rat> = q.sectors().iter().map(|s| s.period.clone()).collect();
        assert_eq!(periods, vec![rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)]);
        for (k, s) in q.sectors()[..3].iter().enumerate() {
            assert_eq!(s.components.len(), 1);
            let c = &s.components[0];
            assert_eq!(c.face.len(), 2);
            assert_eq!(c.coeffs, vec![rat(k as i64 + 1, 4); 2]);
            assert_eq!(c.shift, rat(k as i64 + 1, 1));
            assert_eq!(c.h, IntPoly::one());
        }
        let full = &q.sectors()[3].components;
        assert_eq!(full.len(), 1);
        assert!(full[0].face.is_empty() && full[0].shift.is_zero());
        assert_eq!(full[0].h, IntPoly::new(int_vector(&[1, 1, 1])));
        let h = orbifold_cohomology_of_base(&q);
        let dims: Vec<u64> = (0..=4).map(|d| h.get(&rat(d, 1))).collect();
        assert_eq!(dims, vec![1, 1, 2, 1, 1]);

        let w = window(12);
        let rows: Vec<Vec<u64>> = hc_by_period(&q, &w).unwrap().iter().map(|(_, g)| even_row(g, 12)).collect();
        assert_eq!(
            rows,
            vec![
                vec![1, 0, 1, 0, 1, 0, 1],
                vec![0, 1, 0, 1, 0, 1, 0],
                vec![0, 0, 1, 0, 1, 0, 1],
                vec![0, 1, 1, 2, 1, 2, 1],
            ]
        );
        assert_eq!(even_row(&hc_from_quotient(&q, &w).unwrap(), 12), vec![1, 2, 3, 3, 3, 3, 3]);
        assert_eq!(hc_smooth_base(&q, &w), Err(PrequantError::BaseNotSmooth));
        assert!(components_disjoint(q.cone(), q.sectors()));
    }

    #[test]
    fn smooth_quotient_of_the_lens_space() {
        let d = diagram(&[(1, 0), (0, 1), (-1, -1)]);
        let q = quotient_polytope(&d, &int_vector(&[0, 0, 1])).unwrap();
        assert!(q.is_smooth());
        assert_eq!(q.sectors().len(), 1);
        assert_eq!(q.sectors()[0].period, rat(1, 1));
        assert_eq!(minimal_chern(&q), Ok(Int::from(3)));
        assert_eq!(fundamental_group_order(d.normals()), Int::from(3));
        let w = d.default_window();
        assert_eq!(hc_smooth_base(&q, &w).unwrap(), hc_from_quotient(&q, &w).unwrap());
        assert_eq!(
            quotient_polytope(&d, &int_vector(&[0, 0, 2])).unwrap_err(),
            PrequantError::NotPrimitive
        );
        assert_eq!(quotient_polytope(&d, &int_vector(&[1, 0, 1])).unwrap_err(), PrequantError::NotInterior);
        let s5 = prequantization(&cp2(1)).unwrap();
        assert_eq!(minimal_chern(&s5), Ok(Int::from(3)));
    }

    #[test]
    fn smooth_base_tables() {
        let cases = [
            (cp2(1), vec![0, 0, 1, 1, 1, 1]),
            (cp2(3), vec![1, 2, 3, 3, 3, 3]),
            (s2s2(1), vec![0, 1, 2, 2, 2, 2]),
            (s2s2(2), vec![1, 3, 4, 4, 4, 4]),
        ];
        let w = window(10);
        for (delta, expected) in cases {
            let q = prequantization(&delta).unwrap();
            let bourgeois = hc_smooth_base(&q, &w).unwrap();
            assert_eq!(bourgeois, hc_from_quotient(&q, &w).unwrap());
            assert_eq!(even_row(&bourgeois, 10), expected);
            let d = diagram_from_labelled(&delta).unwrap();
            assert_eq!(bourgeois, contact_betti_from_delta(&d, &w).unwrap());
        }
    }

    #[test]
    fn quotients_agree_with_the_delta_pipeline() {
        let quad = diagram(&[(0, 0), (1, 0), (0, 1), (2, 2)]);
        let cases: Vec<(ToricDiagram, Vec<i64>)> = vec![
            (lens_skew(), vec![1, 1, 2]),
            (lens_skew(), vec![1, 1, 1]),
            (lens_skew(), vec![3, 2, 5]),
            (diagram(&[(1, 0), (0, 1), (-1, -1)]), vec![0, 0, 1]),
            (diagram(&[(1, 0), (0, 1), (-1, -1)]), vec![1, 0, 3]),
            (diagram(&[(0, 0), (1, 0), (0, 1)]), vec![1, 1, 3]),
            (quad.clone(), vec![1, 1, 1]),
            (quad, vec![2, 2, 3]),
        ];
        for (d, nu) in cases {
            let q = quotient_polytope(&d, &int_vector(&nu)).unwrap();
            let w = window(14);
            assert_eq!(hc_from_quotient(&q, &w).unwrap(), contact_betti_from_delta(&d, &w).unwrap(), "ν = {nu:?}");
            assert!(components_disjoint(q.cone(), q.sectors()));
            let census: usize = q
                .sectors()
                .iter()
                .flat_map(|s| &s.components)
                .map(|c| q.cone().ray_facets().iter().filter(|t| c.face.iter().all(|j| t.contains(j))).count())
                .sum();
            let isotropy: Int = q.base().isotropy_orders().iter().sum();
            assert_eq!(Int::from(census), isotropy, "ν = {nu:?}");
            let back = diagram_from_labelled(q.base()).unwrap();
            assert_eq!(back.delta().unwrap(), d.delta().unwrap());
            if q.r() == Some(&Int::one()) {
                let h = orbifold_cohomology_of_base(&q);
                assert_eq!(ceil_rounded(&h, 2), d.delta().unwrap().coeffs());
                let mut reversed = d.delta().unwrap().coeffs().to_vec();
                reversed.reverse();
                assert_eq!(floor_rounded(&h, 2), reversed);
            }
        }
    }

    #[test]
    fn q_gorenstein_quotients_are_rejected() {
        let v: Vec<RatVector> = [[(1, 3), (1, 3)], [(1, 3), (2, 3)], [(2, 3), (2, 3)], [(2, 3), (1, 3)]]
            .iter()
            .map(|p| rat_vector(p))
            .collect();
        let d = validate_diagram(&convex_hull(&v).unwrap()).unwrap();
        let q = quotient_polytope(&d, &int_vector(&[1, 1, 2])).unwrap();
        assert_eq!(q.r(), None);
        assert_eq!(hc_from_quotient(&q, &window(6)), Err(PrequantError::QGorenstein));
    }
}
