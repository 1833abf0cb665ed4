//! The reflexive polygons, found by exhaustive search, with both tests of
//! reflexivity: the polar dual is integral, and the δ-vector is palindromic.

use toric_contact::ehrhart::{delta_vector, reflexivity};
use toric_contact::exactlat::int;
use toric_contact::format::rat_to_string;
use toric_contact::polytope::{polygon_normal_form, reflexive_polygons, Region};

fn main() {
    let polygons = reflexive_polygons();
    println!("{} classes up to GL2(Z)\n", polygons.len());
    println!("{:>3} {:>8} {:>9} {:>10}  {:<12} vertices", "#", "boundary", "dual bdry", "δ", "palindromic");
    let forms: Vec<_> = polygons.iter().map(|p| polygon_normal_form(&integral_vertices(p))).collect();
    for (i, p) in polygons.iter().enumerate() {
        let delta = delta_vector(p).unwrap();
        let dual = p.dual().unwrap();
        let boundary = p.count_points(&int(1), Region::Closed) - 1;
        let dual_boundary = dual.count_points(&int(1), Region::Closed) - 1;
        let dual_index = forms.iter().position(|f| *f == polygon_normal_form(&integral_vertices(&dual))).unwrap();
        let vertices: Vec<String> =
            p.vertices().iter().map(|v| format!("({},{})", rat_to_string(&v[0]), rat_to_string(&v[1]))).collect();
        println!(
            "{:>3} {:>8} {:>9} {:>10}  {:<12} {}   dual = #{dual_index}",
            i,
            boundary,
            dual_boundary,
            format!("{:?}", delta.coeffs()),
            delta.is_palindromic(),
            vertices.join(" ")
        );
        assert!(reflexivity(p).unwrap().is_reflexive());
        assert!(reflexivity(p).unwrap().consistent());
        assert_eq!(boundary + dual_boundary, 12);
    }

    // A lattice triangle with two interior points fails both tests.
    let fat = toric_contact::polytope::convex_hull(&[
        toric_contact::exactlat::rat_vector(&[(-1, 1), (-1, 1)]),
        toric_contact::exactlat::rat_vector(&[(3, 1), (-1, 1)]),
        toric_contact::exactlat::rat_vector(&[(-1, 1), (2, 1)]),
    ])
    .unwrap();
    println!("\nnon-reflexive triangle: δ = {:?}, {:?}", delta_vector(&fat).unwrap().coeffs(), reflexivity(&fat).unwrap());
}

fn integral_vertices(p: &toric_contact::polytope::RationalPolytope) -> Vec<Vec<toric_contact::exactlat::Int>> {
    p.vertices().iter().map(|v| v.iter().map(|x| x.to_integer()).collect()).collect()
}
