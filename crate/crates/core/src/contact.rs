//! Toric diagrams, Reeb vectors, Conley–Zehnder indices and contact Betti
//! numbers.
//!
//! A toric diagram `D ⊂ R^n` of order `m` has normals `ν_j = (m v_j, m)` at
//! its vertices. A Reeb vector is `ν = (m v, m)` with `v` in the interior of
//! `D`; here `v` is perturbed symbolically to `v + ε d`, so every coordinate
//! becomes a [`Jet`]. Each facet carries one simple closed Reeb orbit whose
//! iterates have degrees
//!
//! ```text
//! deg γ^N = 2 (Σ_j ⌊N b_j / b⌋ + N k / m) + 2n - 2
//! ```
//!
//! where `ν = Σ b_j ν_{ℓ_j} + b η` and `η = (·, k)` completes the facet
//! normals to a basis of `Z^{n+1}` with `b > 0`.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::ehrhart::{delta_vector, DeltaVector};
use crate::exactlat::{
    complete_to_basis, dot_int_rat, jet_floor, rat_from_int, smith_invariants, smith_normal_form, Int,
    IntMatrix, Jet, LatticeError, Rat, RatVector,
};
use crate::graded::{GradedDimension, Window};
use crate::polytope::{PolytopeError, RationalPolytope, Region};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContactError {
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("not simplicial: facet {facet} has {vertices} vertices")]
    NotSimplicial { facet: usize, vertices: usize },
    #[error("facet {facet} is not unimodular: Smith invariants {invariants:?}")]
    FacetNotUnimodular { facet: usize, invariants: Vec<Int> },
    #[error("Reeb vector base point is not in the interior of the diagram")]
    ReebNotInterior,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("genericity failure at facet {facet}, iterate {iterate}: {detail}")]
    GenericityFailure { facet: usize, iterate: u64, detail: String },
    #[error("window lower end {0} must exceed -2")]
    WindowTooLow(Rat),
}

/// A validated toric diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricDiagram {
    polytope: RationalPolytope,
    order: Int,
    normals: Vec<Vec<Int>>,
}

/// Checks that `p` is simplicial and that the normals of every facet extend
/// to a basis of `Z^{n+1}`.
pub fn validate_diagram(p: &RationalPolytope) -> Result<ToricDiagram, ContactError> {
    let m = p.order();
    let mr = rat_from_int(&m);
    let normals: Vec<Vec<Int>> = p
        .vertices()
        .iter()
        .map(|v| v.iter().map(|x| (x * &mr).to_integer()).chain(std::iter::once(m.clone())).collect())
        .collect();
    for (i, f) in p.facets().iter().enumerate() {
        if f.vertices.len() != p.dim() {
            return Err(ContactError::NotSimplicial { facet: i, vertices: f.vertices.len() });
        }
        let rows: Vec<Vec<Int>> = f.vertices.iter().map(|&v| normals[v].clone()).collect();
        let invariants = smith_invariants(&IntMatrix::from_rows(&rows));
        if invariants.len() < rows.len() || invariants.iter().any(|d| !d.is_one()) {
            return Err(ContactError::FacetNotUnimodular { facet: i, invariants });
        }
    }
    Ok(ToricDiagram { polytope: p.clone(), order: m, normals })
}

impl ToricDiagram {
    pub fn polytope(&self) -> &RationalPolytope {
        &self.polytope
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    pub fn order(&self) -> &Int {
        &self.order
    }

    /// `ν_j = (m v_j, m)`, indexed like the polytope's vertices.
    pub fn normals(&self) -> &[Vec<Int>] {
        &self.normals
    }

    /// `m·D`, the integral polytope with the same fan.
    pub fn integral_dilate(&self) -> RationalPolytope {
        self.polytope.scale(&rat_from_int(&self.order))
    }

    /// `n!·vol(mD)`.
    pub fn scaled_volume(&self) -> Rat {
        self.integral_dilate().normalized_volume()
    }

    pub fn delta(&self) -> Result<DeltaVector, ContactError> {
        Ok(delta_vector(&self.polytope)?)
    }

    /// Degree step `2/m` of the contact homology grading.
    pub fn degree_step(&self) -> Rat {
        Rat::new(Int::from(2), self.order.clone())
    }

    pub fn default_window(&self) -> Window {
        Window::contact_default(self.dim(), &self.order)
    }
}

/// Outcome of [`c1_order`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum C1Order {
    /// Least `m ≥ 1` with an integral `ν*` such that `ν*(ν_j) = m` for all `j`.
    Torsion { order: Int, functional: Vec<Int> },
    NonTorsion,
}

/// Order of the first Chern class of the contact structure with the given
/// primitive normals, read off the Smith form of the normal matrix.
pub fn c1_order(normals: &[Vec<Int>]) -> C1Order {
    let a = IntMatrix::from_rows(normals);
    let snf = smith_normal_form(&a);
    let rank = snf.rank();
    // S y = m P·1 with S = P A Q; then ν* = Q y.
    let z = snf.p.mul_vec(&vec![Int::one(); a.rows()]);
    if z.iter().skip(rank).any(|zi| !zi.is_zero()) {
        return C1Order::NonTorsion;
    }
    let order = (0..rank).fold(Int::one(), |acc, i| {
        let s = &snf.diagonal[i];
        acc.lcm(&(s / s.gcd(&z[i])))
    });
    let mut y = vec![Int::zero(); a.cols()];
    for i in 0..rank {
        y[i] = &order * &z[i] / &snf.diagonal[i];
    }
    C1Order::Torsion { functional: snf.q.mul_vec(&y), order }
}

/// `v + ε d` with `v` the base point in `D` and `d` a perturbation direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReebVector {
    base: RatVector,
    direction: RatVector,
}

impl ReebVector {
    /// Accepts any base point whose perturbation `v + ε d` lies in the
    /// interior of `D` for small `ε > 0`. A base point on the boundary is
    /// allowed; facets through it then carry orbits whose periods diverge
    /// as `ε → 0` and which therefore never reach a finite window.
    pub fn new(diagram: &ToricDiagram, base: RatVector, direction: RatVector) -> Result<Self, ContactError> {
        let n = diagram.dim();
        if base.len() != n || direction.len() != n {
            return Err(ContactError::DimensionMismatch(format!("Reeb data must have {n} coordinates")));
        }
        for f in diagram.polytope().facets() {
            let value = f.eval(&base);
            let slope = dot_int_rat(&f.normal, &direction);
            if value.is_negative() || (value.is_zero() && !slope.is_positive()) {
                return Err(ContactError::ReebNotInterior);
            }
        }
        Ok(ReebVector { base, direction })
    }

    /// Vertex barycentre perturbed along `(1, t, t², …)`.
    pub fn generic(diagram: &ToricDiagram, t: &Rat) -> Result<Self, ContactError> {
        let vs = diagram.polytope().vertices();
        let k = Rat::from_integer(Int::from(vs.len()));
        let base: RatVector = (0..diagram.dim()).map(|i| vs.iter().map(|v| v[i].clone()).sum::<Rat>() / &k).collect();
        Ok(ReebVector::new(diagram, base, default_direction(diagram.dim(), t))?)
    }

    pub fn base(&self) -> &[Rat] {
        &self.base
    }

    pub fn direction(&self) -> &[Rat] {
        &self.direction
    }

    /// `(m (v + ε d), m)` in `Z^{n+1} ⊗ Q[ε]`.
    pub fn normalized(&self, order: &Int) -> Vec<Jet> {
        let m = rat_from_int(order);
        self.base
            .iter()
            .zip(&self.direction)
            .map(|(v, d)| Jet::new(v * &m, d * &m))
            .chain(std::iter::once(Jet::constant(m.clone())))
            .collect()
    }
}

/// `(1, t, t², …, t^{n-1})`.
pub fn default_direction(n: usize, t: &Rat) -> RatVector {
    let mut out = Vec::with_capacity(n);
    let mut x = Rat::one();
    for _ in 0..n {
        out.push(x.clone());
        x *= t;
    }
    out
}

/// The simple closed orbit over one facet and the data fixing its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitFamily {
    pub facet: usize,
    /// Diagram vertices of the facet, ascending.
    pub vertices: Vec<usize>,
    pub eta: Vec<Int>,
    /// Coefficients of `ν` along the facet normals.
    pub coeffs: Vec<Jet>,
    /// Coefficient along `η`, normalized to be positive.
    pub b: Jet,
    /// Last coordinate of `η`.
    pub k: Int,
    order: Int,
}

fn solve_jets(columns: &[Vec<Int>], rhs: &[Jet]) -> Option<Vec<Jet>> {
    let n = columns.len();
    let a: Vec<Vec<Rat>> = (0..n).map(|i| columns.iter().map(|c| rat_from_int(&c[i])).collect()).collect();
    let values: Vec<Rat> = rhs.iter().map(|j| j.value.clone()).collect();
    let slopes: Vec<Rat> = rhs.iter().map(|j| j.slope.clone()).collect();
    let x = crate::exactlat::solve_rat(&a, &values)?;
    let y = crate::exactlat::solve_rat(&a, &slopes)?;
    Some(x.into_iter().zip(y).map(|(v, s)| Jet::new(v, s)).collect())
}

impl OrbitFamily {
    /// Orbit data with the canonical completion `η` of the facet normals.
    pub fn new(diagram: &ToricDiagram, facet: usize, reeb: &ReebVector) -> Result<Self, ContactError> {
        let f = &diagram.polytope().facets()[facet];
        let rows: Vec<Vec<Int>> = f.vertices.iter().map(|&v| diagram.normals()[v].clone()).collect();
        let eta = complete_to_basis(&rows)?;
        Self::with_eta(diagram, facet, reeb, eta)
    }

    /// Orbit data for a caller-chosen completion `η`; its sign is flipped if
    /// needed so that `b > 0`.
    pub fn with_eta(diagram: &ToricDiagram, facet: usize, reeb: &ReebVector, eta: Vec<Int>) -> Result<Self, ContactError> {
        let f = &diagram.polytope().facets()[facet];
        let mut columns: Vec<Vec<Int>> = f.vertices.iter().map(|&v| diagram.normals()[v].clone()).collect();
        columns.push(eta.clone());
        if !IntMatrix::from_columns(&columns).is_unimodular() {
            return Err(LatticeError::NotUnimodularSystem { invariants: smith_invariants(&IntMatrix::from_columns(&columns)) }.into());
        }
        let nu = reeb.normalized(diagram.order());
        let mut x = solve_jets(&columns, &nu).expect("a basis is invertible");
        let mut b = x.pop().expect("η coefficient");
        let mut eta = eta;
        if b.is_zero() {
            return Err(ContactError::GenericityFailure {
                facet,
                iterate: 0,
                detail: "the Reeb vector lies in the span of the facet normals".into(),
            });
        }
        if b < Jet::zero() {
            b = -&b;
            eta = eta.iter().map(|e| -e).collect();
        }
        let k = eta.last().expect("η has coordinates").clone();
        Ok(OrbitFamily { facet, vertices: f.vertices.clone(), eta, coeffs: x, b, k, order: diagram.order().clone() })
    }

    /// True when `b` vanishes at `ε = 0`: the orbit's period diverges as
    /// the perturbation is removed, so no iterate has bounded degree.
    pub fn is_at_infinity(&self) -> bool {
        self.b.value.is_zero()
    }

    /// Conley–Zehnder index of the `N`-th iterate.
    pub fn cz_index(&self, iterate: u64) -> Result<Rat, ContactError> {
        let n = self.coeffs.len();
        let big_n = Rat::from_integer(Int::from(iterate));
        let mut floors = Int::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            let ratio = c.checked_div(&self.b).ok_or_else(|| ContactError::GenericityFailure {
                facet: self.facet,
                iterate,
                detail: "b vanishes to first order".into(),
            })?;
            floors += jet_floor(&ratio.scale(&big_n)).map_err(|e| ContactError::GenericityFailure {
                facet: self.facet,
                iterate,
                detail: format!("coefficient {j}: {e}"),
            })?;
        }
        let shift = &big_n * rat_from_int(&self.k) / rat_from_int(&self.order);
        Ok(Rat::from_integer(Int::from(2)) * (rat_from_int(&floors) + shift) + Rat::from_integer(Int::from(n)))
    }

    /// Contact homology degree `μ_CZ + n - 2` of the `N`-th iterate.
    pub fn degree(&self, iterate: u64) -> Result<Rat, ContactError> {
        let n = self.coeffs.len() as i64;
        Ok(self.cz_index(iterate)? + Rat::from_integer(Int::from(n - 2)))
    }

    /// Iterate bound past which every degree exceeds `d_max`, from
    /// `deg γ^N > 2(N/b - 1)`. `None` for orbits at infinity.
    pub fn max_iterate(&self, d_max: &Rat) -> Option<u64> {
        if self.is_at_infinity() {
            return None;
        }
        let half = d_max / Rat::from_integer(Int::from(2)) + Rat::one();
        let bound = (&self.b.value * half).ceil().to_integer() + Int::one();
        Some(bound.to_u64().unwrap_or(0).max(1))
    }

    /// Degrees of all iterates up to the bound for `d_max`, in iterate order.
    pub fn degrees_up_to(&self, d_max: &Rat) -> Result<Vec<(u64, Rat)>, ContactError> {
        let Some(top) = self.max_iterate(d_max) else { return Ok(Vec::new()) };
        (1..=top).map(|big_n| Ok((big_n, self.degree(big_n)?))).collect()
    }
}

/// Orbit data for every facet.
pub fn orbit_families(diagram: &ToricDiagram, reeb: &ReebVector) -> Result<Vec<OrbitFamily>, ContactError> {
    (0..diagram.polytope().facets().len()).map(|f| OrbitFamily::new(diagram, f, reeb)).collect()
}

fn check_window(window: &Window) -> Result<(), ContactError> {
    if window.lo <= Rat::from_integer(Int::from(-2)) {
        return Err(ContactError::WindowTooLow(window.lo.clone()));
    }
    Ok(())
}

/// Contact Betti numbers by enumerating Reeb orbit iterates.
pub fn contact_betti_direct(diagram: &ToricDiagram, reeb: &ReebVector, window: &Window) -> Result<GradedDimension, ContactError> {
    check_window(window)?;
    let families = orbit_families(diagram, reeb)?;
    let per_facet: Vec<Vec<(u64, Rat)>> =
        families.par_iter().map(|f| f.degrees_up_to(&window.hi)).collect::<Result<_, _>>()?;
    let mut out = GradedDimension::new(window.clone());
    for (_, d) in per_facet.into_iter().flatten() {
        out.add(d, 1);
    }
    Ok(out)
}

/// Contact Betti numbers `cb_{2j} = Σ_{i≥0} δ_{m(n-j)+mi}` from the δ-vector.
pub fn contact_betti_from_delta(diagram: &ToricDiagram, window: &Window) -> Result<GradedDimension, ContactError> {
    check_window(window)?;
    Ok(betti_from_delta(&diagram.delta()?, window))
}

pub fn betti_from_delta(delta: &DeltaVector, window: &Window) -> GradedDimension {
    let m = delta.order() as i64;
    let n = delta.dim() as i64;
    let len = delta.coeffs().len() as i64;
    let step = Rat::new(Int::from(2), Int::from(m));
    let mut out = GradedDimension::new(window.clone());
    for d in window.grid(&step) {
        // d = 2j, so m(n - j) = mn - m d / 2.
        let start = (Rat::from_integer(Int::from(m * n)) - &d * Rat::from_integer(Int::from(m)) / Rat::from_integer(Int::from(2)))
            .to_integer()
            .to_i64()
            .expect("degree index fits");
        let total: u64 = (0..).map(|i| start + m * i).take_while(|&j| j < len).map(|j| delta.get(j)).sum();
        out.add(d, total);
    }
    out
}

/// `(n!/2)·m·vol(mD)`.
pub fn mean_euler_characteristic(diagram: &ToricDiagram) -> Rat {
    rat_from_int(diagram.order()) * diagram.scaled_volume() / Rat::from_integer(Int::from(2))
}

/// Least `r` such that `(r + 1)·int(mD)` contains an integral point, with
/// `r + 1` ranging over `(1/m)Z_{>0}`: the first dilate `sD` with an
/// interior lattice point gives `r = s/m - 1`.
pub fn minimal_discrepancy(diagram: &ToricDiagram) -> Rat {
    let p = diagram.polytope();
    let s = (1u64..)
        .find(|&s| p.count_points(&Int::from(s), Region::Interior) > 0)
        .expect("some dilate of a full-dimensional polytope has interior points");
    Rat::new(Int::from(s), diagram.order().clone()) - Rat::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlat::{int_vector, rat, rat_vector};
    use crate::polytope::convex_hull;

    fn diagram(pts: &[&[(i64, i64)]]) -> ToricDiagram {
        let v: Vec<RatVector> = pts.iter().map(|p| rat_vector(p)).collect();
        validate_diagram(&convex_hull(&v).unwrap()).unwrap()
    }

    fn lens() -> ToricDiagram {
        diagram(&[&[(1, 1), (0, 1)], &[(0, 1), (1, 1)], &[(-1, 1), (-1, 1)]])
    }

    fn order_three() -> ToricDiagram {
        diagram(&[&[(1, 3), (1, 3)], &[(1, 3), (2, 3)], &[(2, 3), (2, 3)], &[(2, 3), (1, 3)]])
    }

    fn sphere() -> ToricDiagram {
        diagram(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(0, 1), (1, 1)]])
    }

    /// The Reeb vector `(1 + ε₁, 1 + ε₂, 3)` with `ε₂ = 2ε₁`.
    fn reeb_at_corner(d: &ToricDiagram) -> ReebVector {
        ReebVector::new(d, rat_vector(&[(1, 3), (1, 3)]), rat_vector(&[(1, 3), (2, 3)])).unwrap()
    }

    fn facet_through(d: &ToricDiagram, a: &[(i64, i64)], b: &[(i64, i64)]) -> usize {
        let ia = d.polytope().vertex_index(&rat_vector(a)).unwrap();
        let ib = d.polytope().vertex_index(&rat_vector(b)).unwrap();
        d.polytope().facet_index(&[ia, ib]).unwrap()
    }

    fn degrees(f: &OrbitFamily, upto: u64) -> Vec<Rat> {
        (1..=upto).map(|n| f.degree(n).unwrap()).collect()
    }

    #[test]
    fn validation() {
        assert_eq!(lens().order(), &Int::from(1));
        assert_eq!(order_three().order(), &Int::from(3));
        let big = convex_hull(&[rat_vector(&[(0, 1), (0, 1)]), rat_vector(&[(2, 1), (0, 1)]), rat_vector(&[(0, 1), (2, 1)])]).unwrap();
        assert!(matches!(validate_diagram(&big), Err(ContactError::FacetNotUnimodular { .. })));
        let square = convex_hull(&[
            rat_vector(&[(0, 1), (0, 1)]),
            rat_vector(&[(1, 1), (0, 1)]),
            rat_vector(&[(1, 1), (1, 1)]),
            rat_vector(&[(0, 1), (1, 1)]),
        ])
        .unwrap();
        assert!(validate_diagram(&square).is_ok());
        assert!(matches!(validate_diagram(&square.scale(&rat(2, 1))), Err(ContactError::FacetNotUnimodular { .. })));
        let cube: Vec<RatVector> = (0..8).map(|i| (0..3).map(|b| rat(((i >> b) & 1) as i64, 1)).collect()).collect();
        assert!(matches!(validate_diagram(&convex_hull(&cube).unwrap()), Err(ContactError::NotSimplicial { .. })));
    }

    #[test]
    fn chern_class_orders() {
        let lens_normals = vec![int_vector(&[1, 0, 1]), int_vector(&[0, 1, 1]), int_vector(&[-1, -1, 1])];
        assert_eq!(c1_order(&lens_normals), C1Order::Torsion { order: Int::from(1), functional: int_vector(&[0, 0, 1]) });
        let rotated = vec![int_vector(&[1, 1, 3]), int_vector(&[1, 2, 3]), int_vector(&[2, 2, 3]), int_vector(&[2, 1, 3])];
        let moment = vec![int_vector(&[1, 0, 0]), int_vector(&[0, 1, 0]), int_vector(&[-1, 0, 3]), int_vector(&[0, -1, 3])];
        for normals in [rotated, moment] {
            match c1_order(&normals) {
                C1Order::Torsion { order, functional } => {
                    assert_eq!(order, Int::from(3));
                    for v in &normals {
                        assert_eq!(crate::exactlat::dot_int(v, &functional), Int::from(3));
                    }
                }
                C1Order::NonTorsion => panic!("torsion expected"),
            }
        }
        let twisted = vec![int_vector(&[1, 0, 0]), int_vector(&[0, 1, 0]), int_vector(&[1, 1, 1]), int_vector(&[-1, 0, 1])];
        assert_eq!(c1_order(&twisted), C1Order::NonTorsion);
    }

    #[test]
    fn worked_orbit_family() {
        let d = order_three();
        let reeb = reeb_at_corner(&d);
        let f = facet_through(&d, &[(1, 3), (2, 3)], &[(2, 3), (2, 3)]);
        let fam = OrbitFamily::with_eta(&d, f, &reeb, int_vector(&[0, 1, 1])).unwrap();
        // The given η has b = -3 + 3ε₂ < 0, so it is flipped.
        assert_eq!(fam.eta, int_vector(&[0, -1, -1]));
        assert_eq!(fam.b, Jet::new(rat(3, 1), rat(-6, 1)));
        assert_eq!(fam.coeffs, vec![Jet::new(rat(3, 1), rat(-5, 1)), Jet::new(rat(-1, 1), rat(3, 1))]);
        let expect: Vec<Rat> = [4, 8, 12, 10, 14, 18].iter().map(|&x| rat(x, 3)).collect();
        assert_eq!(degrees(&fam, 6), expect);
        let canonical = OrbitFamily::new(&d, f, &reeb).unwrap();
        assert_eq!(degrees(&canonical, 12), degrees(&fam, 12));
    }

    #[test]
    fn corner_facets_are_at_infinity() {
        let d = order_three();
        let fams = orbit_families(&d, &reeb_at_corner(&d)).unwrap();
        assert_eq!(fams.iter().filter(|f| f.is_at_infinity()).count(), 2);
        for f in &fams {
            let sum = f.coeffs.iter().fold(Jet::zero(), |a, c| &a + c);
            let total = &sum + &f.b.scale(&(rat_from_int(&f.k) / rat(3, 1)));
            assert_eq!(total, Jet::constant(Rat::one()));
        }
    }

    #[test]
    fn both_pipelines_on_examples() {
        for (d, expect) in [
            (lens(), vec![(0, 1), (2, 2), (4, 3), (6, 3), (8, 3), (10, 3)]),
            (sphere(), vec![(0, 0), (2, 0), (4, 1), (6, 1), (8, 1), (10, 1)]),
        ] {
            let w = d.default_window();
            let from_delta = contact_betti_from_delta(&d, &w).unwrap();
            for (deg, k) in expect {
                assert_eq!(from_delta.get(&rat(deg, 1)), k, "degree {deg}");
            }
            for t in [rat(1, 11), rat(1, 7), rat(-2, 13)] {
                let reeb = ReebVector::generic(&d, &t).unwrap();
                assert_eq!(contact_betti_direct(&d, &reeb, &w).unwrap(), from_delta);
            }
        }
        let d = order_three();
        let w = d.default_window();
        let from_delta = contact_betti_from_delta(&d, &w).unwrap();
        let direct = contact_betti_direct(&d, &reeb_at_corner(&d), &w).unwrap();
        assert_eq!(direct, from_delta);
        for j in -1..=10i64 {
            let expect = match j {
                -1 | 1 | 3 => 1,
                2 => 2,
                j if j >= 4 => 2,
                _ => 0,
            };
            assert_eq!(direct.get(&rat(2 * j, 3)), expect, "cb at 2·{j}/3");
        }
    }

    #[test]
    fn degenerate_reeb_vector_is_reported() {
        let d = lens();
        let reeb = ReebVector::new(&d, rat_vector(&[(0, 1), (0, 1)]), rat_vector(&[(0, 1), (0, 1)])).unwrap();
        let err = contact_betti_direct(&d, &reeb, &d.default_window()).unwrap_err();
        assert!(matches!(err, ContactError::GenericityFailure { .. }), "{err}");
    }

    #[test]
    fn reeb_vector_must_be_interior() {
        let d = lens();
        let outside = ReebVector::new(&d, rat_vector(&[(1, 1), (1, 1)]), rat_vector(&[(1, 1), (0, 1)]));
        assert_eq!(outside, Err(ContactError::ReebNotInterior));
        let window = Window::new(rat(-2, 1), rat(4, 1));
        assert!(matches!(contact_betti_from_delta(&d, &window), Err(ContactError::WindowTooLow(_))));
    }

    #[test]
    fn euler_characteristic_and_discrepancy() {
        assert_eq!(mean_euler_characteristic(&lens()), rat(3, 2));
        assert_eq!(mean_euler_characteristic(&sphere()), rat(1, 2));
        assert_eq!(mean_euler_characteristic(&order_three()), rat(3, 1));
        for (d, r) in [(lens(), rat(0, 1)), (sphere(), rat(2, 1)), (order_three(), rat(-1, 3))] {
            assert_eq!(minimal_discrepancy(&d), r);
            let cb = contact_betti_from_delta(&d, &d.default_window()).unwrap();
            assert_eq!(cb.lowest_nonzero().unwrap() / rat(2, 1), r);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn eta_choice_does_not_change_degrees(a in -3i64..4, b in -3i64..4, facet in 0usize..4) {
                let d = order_three();
                let reeb = ReebVector::generic(&d, &rat(1, 11)).unwrap();
                let base = OrbitFamily::new(&d, facet, &reeb).unwrap();
                let shifted: Vec<Int> = (0..3)
                    .map(|i| &base.eta[i] + Int::from(a) * &d.normals()[base.vertices[0]][i] + Int::from(b) * &d.normals()[base.vertices[1]][i])
                    .collect();
                let other = OrbitFamily::with_eta(&d, facet, &reeb, shifted).unwrap();
                prop_assert_eq!(degrees(&base, 15), degrees(&other, 15));
            }

            #[test]
            fn degrees_lie_on_the_grid(p in 1i64..12, q in 1i64..12, t in 1i64..20) {
                let d = order_three();
                let base = vec![rat(1, 3) + rat(p, 36), rat(1, 3) + rat(q, 36)];
                let Ok(reeb) = ReebVector::new(&d, base, default_direction(2, &rat(1, t + 7))) else { return Ok(()) };
                for fam in orbit_families(&d, &reeb).unwrap() {
                    for (_, deg) in fam.degrees_up_to(&rat(10, 1)).unwrap() {
                        prop_assert!((deg * rat(3, 2)).is_integer());
                    }
                }
                prop_assert_eq!(
                    contact_betti_direct(&d, &reeb, &d.default_window()).unwrap(),
                    contact_betti_from_delta(&d, &d.default_window()).unwrap()
                );
            }
        }
    }
}
