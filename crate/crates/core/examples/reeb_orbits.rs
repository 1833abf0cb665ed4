//! Closed Reeb orbits of a toric contact manifold and their degrees.
//!
//! The order-3 diagram with the normalized Reeb vector
//! `(1 + ε₁, 1 + ε₂, 3)`, `0 < ε₁ < ε₂`, taken here as `ε₂ = 2ε₁`.

use toric_contact::contact::{orbit_families, validate_diagram, ReebVector};
use toric_contact::exactlat::{rat, rat_vector};
use toric_contact::format::rat_to_string;
use toric_contact::polytope::convex_hull;

fn main() {
    let vertices = [[(1, 3), (1, 3)], [(1, 3), (2, 3)], [(2, 3), (2, 3)], [(2, 3), (1, 3)]];
    let diagram = validate_diagram(&convex_hull(&vertices.iter().map(|v| rat_vector(v)).collect::<Vec<_>>()).unwrap()).unwrap();
    let reeb = ReebVector::new(&diagram, rat_vector(&[(1, 3), (1, 3)]), rat_vector(&[(1, 3), (2, 3)])).unwrap();
    println!("normalized Reeb vector: {:?}", reeb.normalized(diagram.order()));

    let show = |v: &[toric_contact::exactlat::Rat]| v.iter().map(rat_to_string).collect::<Vec<_>>().join(", ");
    for family in orbit_families(&diagram, &reeb).unwrap() {
        let edge: Vec<String> = family.vertices.iter().map(|&i| format!("({})", show(&diagram.polytope().vertices()[i]))).collect();
        println!("\nfacet {} = {}", family.facet, edge.join(" – "));
        println!("  η = {:?}, R = Σ a_j ν_j + b η with a = {:?}, b = {:?}", family.eta, family.coeffs, family.b);
        if family.is_at_infinity() {
            println!("  b is infinitesimal: every iterate has degree beyond any fixed bound");
            continue;
        }
        let bound = rat(8, 1);
        for (n, d) in family.degrees_up_to(&bound).unwrap().into_iter().filter(|(_, d)| *d <= bound) {
            println!("  N = {n:>2}: μ_CZ = {:>5}, degree = {}", rat_to_string(&family.cz_index(n).unwrap()), rat_to_string(&d));
        }
    }
}
