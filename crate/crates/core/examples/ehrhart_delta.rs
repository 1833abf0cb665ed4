//! Ehrhart quasi-polynomials and δ-vectors of rational polytopes.

use toric_contact::ehrhart::{check_reciprocity, counts, delta_vector, expected_delta_sum, quasipolynomial};
use toric_contact::exactlat::{rat, rat_vector};
use toric_contact::format::rat_to_string;
use toric_contact::polytope::{convex_hull, RationalPolytope, Region};

fn polytope(points: &[&[(i64, i64)]]) -> RationalPolytope {
    convex_hull(&points.iter().map(|p| rat_vector(p)).collect::<Vec<_>>()).unwrap()
}

fn report(name: &str, p: &RationalPolytope) {
    let delta = delta_vector(p).unwrap();
    let m = delta.order();
    println!("{name}: order {m}, δ = {:?}", delta.coeffs());
    println!("  Σδ = {} = m·n!·vol(mD) = {}", delta.sum(), rat_to_string(&expected_delta_sum(p)));
    let q = quasipolynomial(&delta);
    for r in 0..q.period() {
        let coeffs: Vec<String> = q.branch(r).coeffs().iter().map(rat_to_string).collect();
        println!("  t ≡ {r} mod {m}: L(t) = {} (constant, t, t², ...)", coeffs.join(", "));
    }
    let ts: Vec<u64> = (1..=3 * m as u64).collect();
    println!("  L(t) for t = 1..{}: {:?}", ts.len(), counts(p, &ts, Region::Closed));
    println!("  interior counts:     {:?}", counts(p, &ts, Region::Interior));
    match check_reciprocity(p, &q, 3 * m as u64) {
        Ok(()) => println!("  reciprocity L(-t) = (-1)^n L_int(t) holds for t ≤ {}", 3 * m),
        Err(t) => println!("  reciprocity fails at t = {t}"),
    }
    println!("  vertices of the integral dilate mD: {}", p.scale(&rat(m as i64, 1)).vertices().len());
}

fn main() {
    report("lens triangle", &polytope(&[&[(1, 1), (0, 1)], &[(0, 1), (1, 1)], &[(-1, 1), (-1, 1)]]));
    report("order-3 square", &polytope(&[&[(1, 3), (1, 3)], &[(1, 3), (2, 3)], &[(2, 3), (2, 3)], &[(2, 3), (1, 3)]]));
    report("quadrilateral", &polytope(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(0, 1), (1, 1)], &[(2, 1), (2, 1)]]));
}
