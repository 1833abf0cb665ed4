//! Prequantizations of labelled polytopes and Reeb quotients of toric
//! diagrams: good cones, Gorenstein indices, twisted sectors and contact
//! homology of the quotient.

use toric_contact::corpus;
use toric_contact::document::Shape;
use toric_contact::exactlat::{int_vector, rat};
use toric_contact::format::rat_to_string;
use toric_contact::graded::{GradedDimension, Window};
use toric_contact::contact::validate_diagram;
use toric_contact::prequant::{
    fundamental_group_order, gorenstein_r, hc_by_period, hc_from_quotient, hc_smooth_base, is_good_cone,
    orbifold_cohomology_of_base, prequantization, quotient_polytope, QuotientData,
};

fn row(g: &GradedDimension) -> String {
    g.on_grid(&rat(2, 1)).iter().map(|(_, k)| k.to_string()).collect::<Vec<_>>().join(" ")
}

fn describe(label: &str, q: &QuotientData) {
    let window = Window::new(rat(0, 1), rat(12, 1));
    println!("{label}: r = {:?}, base smooth: {}", q.r().map(ToString::to_string), q.is_smooth());
    println!("  H_orb of base: {}", orbifold_cohomology_of_base(q).iter().map(|(d, k)| format!("{}:{k}", rat_to_string(d))).collect::<Vec<_>>().join(" "));
    for sector in q.sectors() {
        for c in &sector.components {
            println!("  T = {:<4} face {:?}  c_T = {:<3} h = {:?}", rat_to_string(&sector.period), c.face, rat_to_string(&c.shift), c.h.coeffs());
        }
    }
    if let Ok(periods) = hc_by_period(q, &window) {
        for (t, g) in periods {
            println!("  HC from T = {:<4} {}", rat_to_string(&t), row(&g));
        }
    }
    match hc_from_quotient(q, &window) {
        Ok(total) => println!("  HC_0..12 total   {}", row(&total)),
        Err(e) => println!("  no contact homology from this quotient: {e}"),
    }
    if let Ok(g) = hc_smooth_base(q, &window) {
        println!("  smooth-base formula {}", row(&g));
    }
    println!();
}

fn main() {
    for (name, doc) in corpus::documents() {
        if let Shape::Labelled(delta) = &doc.shape {
            describe(&format!("{name} (w = {:?})", gorenstein_r(delta).map(|(_, w)| w)), &prequantization(delta).unwrap());
        }
    }

    // The weighted projective plane CP²(4,1,1) as the quotient of a lens
    // space by the circle generated by ν = (1, 1, 2).
    let Some(Shape::Polytope { polytope, reeb: Some(nu), .. }) = corpus::document("lens-skew").map(|d| d.shape) else {
        unreachable!("lens-skew is a polytope document with a Reeb vector")
    };
    let diagram = validate_diagram(&polytope).unwrap();
    describe(&format!("lens-skew / ν = {nu:?}"), &quotient_polytope(&diagram, &nu).unwrap());

    // Good cones: every proper face is cut out by normals extending to a basis.
    for normals in [vec![int_vector(&[1, 0]), int_vector(&[0, 1])], vec![int_vector(&[2, 1]), int_vector(&[0, 1])]] {
        let cone = is_good_cone(&normals).unwrap();
        println!("cone {:?}: rays {:?}, π₁ order {}", normals, cone.rays(), fundamental_group_order(&normals));
    }
    let bad = [int_vector(&[0, 0, 1]), int_vector(&[2, 0, 1]), int_vector(&[0, 2, 1])];
    println!("cone {bad:?}: {}", is_good_cone(&bad).unwrap_err());
}
