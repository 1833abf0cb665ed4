//! Crepant toric resolutions: triangulations of the diagram, the fan over
//! them, a strictly convex support function and its moment polyhedron, box
//! elements, and the orbifold cohomology that reproduces the δ-vector.

use toric_contact::contact::validate_diagram;
use toric_contact::exactlat::rat_vector;
use toric_contact::format::rat_to_string;
use toric_contact::graded::Window;
use toric_contact::polytope::convex_hull;
use toric_contact::resolution::{
    box_elements, fan_over, hc_contributions, moment_polyhedron, orbifold_poincare, stapledon_check, star_triangulation,
    support_function, trivial_triangulation, validate_triangulation, Triangulation,
};

fn main() {
    let lens = validate_diagram(&convex_hull(&[rat_vector(&[(1, 1), (0, 1)]), rat_vector(&[(0, 1), (1, 1)]), rat_vector(&[(-1, 1), (-1, 1)])]).unwrap()).unwrap();
    for t in [trivial_triangulation(&lens), star_triangulation(&lens, rat_vector(&[(0, 1), (0, 1)])).unwrap()] {
        describe(&lens, &t);
    }

    // The quadrilateral has two unimodular triangulations related by a flop.
    let quad = validate_diagram(
        &convex_hull(&[rat_vector(&[(0, 1), (0, 1)]), rat_vector(&[(1, 1), (0, 1)]), rat_vector(&[(0, 1), (1, 1)]), rat_vector(&[(2, 1), (2, 1)])]).unwrap(),
    )
    .unwrap();
    describe(&quad, &star_triangulation(&quad, rat_vector(&[(1, 1), (1, 1)])).unwrap());
    let index = |p: &[(i64, i64)]| quad.polytope().vertex_index(&rat_vector(p)).unwrap();
    let (a, b, c, d) = (index(&[(0, 1), (0, 1)]), index(&[(1, 1), (0, 1)]), index(&[(0, 1), (1, 1)]), index(&[(2, 1), (2, 1)]));
    let flop = Triangulation::from_cells(&quad, vec![rat_vector(&[(1, 1), (1, 1)])], vec![vec![a, b, c], vec![b, d, 4], vec![d, c, 4], vec![b, c, 4]]);
    describe(&quad, &flop);
}

fn describe(diagram: &toric_contact::contact::ToricDiagram, t: &Triangulation) {
    let report = validate_triangulation(diagram, t).unwrap();
    let fan = fan_over(t);
    println!("cells {:?}: unimodular {}, crepant {}", t.cells(), report.unimodular, fan.is_crepant());
    match support_function(&fan) {
        Ok(phi) => {
            let poly = moment_polyhedron(&fan, &phi).unwrap();
            let values: Vec<String> = phi.ray_values().iter().map(rat_to_string).collect();
            println!("  support function on rays [{}], moment polyhedron with {} vertices", values.join(", "), poly.vertices.len());
        }
        Err(e) => println!("  no strictly convex support function: {e}"),
    }
    for (i, cone) in fan.cones().iter().enumerate() {
        for b in box_elements(&fan, i) {
            let c: Vec<String> = b.coeffs.iter().map(rat_to_string).collect();
            println!("  box element {:?} of cone {cone:?}: coefficients [{}], ψ = {}", b.point, c.join(", "), rat_to_string(&b.shift));
        }
    }
    let h: Vec<String> = orbifold_poincare(&fan).iter().map(|(d, k)| format!("{}:{k}", rat_to_string(d))).collect();
    println!("  H_orb {}", h.join(" "));
    let check = stapledon_check(diagram, t).unwrap();
    println!("  δ = {:?} confirmed through {} series terms", check.delta.coeffs(), check.series_terms);
    let window = Window::new(toric_contact::exactlat::rat(0, 1), toric_contact::exactlat::rat(8, 1));
    for (sector, hc) in hc_contributions(diagram, t, &window).unwrap() {
        let row: Vec<String> = hc.on_grid(&diagram.degree_step()).iter().map(|(_, k)| k.to_string()).collect();
        println!("  sector ψ = {:<4} HC_0..8: {}", rat_to_string(&sector.element.shift), row.join(" "));
    }
    println!();
}
