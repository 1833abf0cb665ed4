//! Simple polytopes given by weighted integer normals, the moment data of
//! symplectic toric orbifolds.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use super::{affine_rank, PolytopeError};
use crate::exactlat::{dot_int_rat, gcd_all, rat_from_int, solve_rat, Int, IntMatrix, Rat, RatVector};

/// `Δ = {x : ⟨x, v_i⟩ + b_i ≥ 0}` with integer weighted normals `v_i`.
///
/// The label of facet `i` is `gcd(v_i)`; a label above one marks a facet
/// with a cyclic orbifold structure group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledPolytope {
    normals: Vec<Vec<Int>>,
    offsets: Vec<Int>,
    vertices: Vec<RatVector>,
    /// For each vertex, the ascending indices of the halfspaces tight there.
    vertex_facets: Vec<Vec<usize>>,
}

impl LabelledPolytope {
    /// Validates that the halfspaces cut out a bounded, full-dimensional,
    /// simple polytope on which every halfspace is a facet.
    pub fn new(normals: Vec<Vec<Int>>, offsets: Vec<Int>) -> Result<Self, PolytopeError> {
        let bad = |s: &str| Err(PolytopeError::BadHalfspaces(s.to_string()));
        if normals.len() != offsets.len() {
            return bad("normals and offsets differ in length");
        }
        let Some(n) = normals.first().map(|v| v.len()) else {
            return bad("no halfspaces");
        };
        if n == 0 || normals.iter().any(|v| v.len() != n) {
            return Err(PolytopeError::DimensionMismatch);
        }
        if normals.iter().any(|v| v.iter().all(|x| x.is_zero())) {
            return bad("zero normal");
        }
        let eval = |i: usize, x: &[Rat]| dot_int_rat(&normals[i], x) + rat_from_int(&offsets[i]);

        let mut seen = BTreeSet::new();
        let mut vertices = Vec::new();
        for combo in (0..normals.len()).combinations(n) {
            let a: Vec<Vec<Rat>> = combo.iter().map(|&i| normals[i].iter().map(rat_from_int).collect()).collect();
            let b: Vec<Rat> = combo.iter().map(|&i| -rat_from_int(&offsets[i])).collect();
            let Some(x) = solve_rat(&a, &b) else { continue };
            if (0..normals.len()).all(|i| !eval(i, &x).is_negative()) && seen.insert(x.clone()) {
                vertices.push(x);
            }
        }
        if vertices.is_empty() {
            return bad("no vertices (empty or unbounded)");
        }
        let refs: Vec<&RatVector> = vertices.iter().collect();
        if affine_rank(&refs) != n {
            return bad("not full-dimensional");
        }
        // Bounded iff the normals positively span, i.e. 0 is interior to their hull.
        let normal_pts: Vec<RatVector> = normals.iter().map(|v| v.iter().map(rat_from_int).collect()).collect();
        let origin = vec![Rat::zero(); n];
        if !super::convex_hull(&normal_pts).is_ok_and(|h| h.contains_strictly(&origin)) {
            return bad("unbounded");
        }
        let vertex_facets: Vec<Vec<usize>> = vertices
            .iter()
            .map(|x| (0..normals.len()).filter(|&i| eval(i, x).is_zero()).collect())
            .collect();
        if vertex_facets.iter().any(|fs| fs.len() != n) {
            return bad("not simple");
        }
        for i in 0..normals.len() {
            let on: Vec<&RatVector> = (0..vertices.len()).filter(|&k| vertex_facets[k].contains(&i)).map(|k| &vertices[k]).collect();
            if on.len() < n || affine_rank(&on) != n - 1 {
                return bad("a halfspace does not define a facet");
            }
        }
        Ok(LabelledPolytope { normals, offsets, vertices, vertex_facets })
    }

    pub fn dim(&self) -> usize {
        self.normals[0].len()
    }

    pub fn normals(&self) -> &[Vec<Int>] {
        &self.normals
    }

    pub fn offsets(&self) -> &[Int] {
        &self.offsets
    }

    pub fn labels(&self) -> Vec<Int> {
        self.normals.iter().map(|v| gcd_all(v)).collect()
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    pub fn vertex_facets(&self) -> &[Vec<usize>] {
        &self.vertex_facets
    }

    /// Order of the local orbifold group at each vertex: `|det|` of the
    /// weighted normals of the facets through it.
    pub fn isotropy_orders(&self) -> Vec<Int> {
        self.vertex_facets
            .iter()
            .map(|fs| {
                let rows: Vec<Vec<Int>> = fs.iter().map(|&i| self.normals[i].clone()).collect();
                IntMatrix::from_rows(&rows).det().abs()
            })
            .collect()
    }

    /// True when every vertex has trivial isotropy (a smooth symplectic base).
    pub fn is_smooth(&self) -> bool {
        self.isotropy_orders().iter().all(|d| d == &Int::from(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlat::{int_vector, rat};

    fn lp(normals: &[&[i64]], offsets: &[i64]) -> Result<LabelledPolytope, PolytopeError> {
        LabelledPolytope::new(normals.iter().map(|v| int_vector(v)).collect(), int_vector(offsets))
    }

    #[test]
    fn standard_simplex() {
        let d = lp(&[&[1, 0], &[0, 1], &[-1, -1]], &[0, 0, 1]).unwrap();
        assert_eq!(d.vertices().len(), 3);
        assert!(d.is_smooth());
        assert!(d.vertices().contains(&vec![rat(1, 1), rat(0, 1)]));
    }

    #[test]
    fn weighted_triangle_has_orbifold_vertex() {
        let d = lp(&[&[1, 0], &[-1, -1], &[-3, 1]], &[0, 1, 2]).unwrap();
        let mut orders = d.isotropy_orders();
        orders.sort();
        assert_eq!(orders, int_vector(&[1, 1, 4]));
        assert!(!d.is_smooth());
        assert_eq!(d.labels(), int_vector(&[1, 1, 1]));
    }

    #[test]
    fn invalid_descriptions() {
        assert!(lp(&[&[1, 0], &[0, 1]], &[0, 0]).is_err());
        assert!(lp(&[&[1, 0], &[0, 1], &[-1, -1]], &[0, 0, -1]).is_err());
        // A redundant halfspace is not a facet.
        assert!(lp(&[&[1, 0], &[0, 1], &[-1, -1], &[-1, 0]], &[0, 0, 1, 5]).is_err());
        // The square pyramid apex is not simple in 3D.
        assert!(lp(&[&[0, 0, 1], &[1, 0, -1], &[-1, 0, -1], &[0, 1, -1], &[0, -1, -1]], &[0, 1, 1, 1, 1]).is_err());
    }
}
