//! Contact Betti numbers two ways: from the δ-vector, and by counting closed
//! Reeb orbits by degree for several generic Reeb vectors.

use toric_contact::contact::{
    contact_betti_direct, contact_betti_from_delta, mean_euler_characteristic, minimal_discrepancy, ReebVector,
};
use toric_contact::corpus;
use toric_contact::document::Shape;
use toric_contact::exactlat::rat;
use toric_contact::format::rat_to_string;
use toric_contact::prequant::diagram_from_labelled;

fn main() {
    for (name, doc) in corpus::documents() {
        let diagram = match &doc.shape {
            Shape::Polytope { polytope, .. } => toric_contact::contact::validate_diagram(polytope).unwrap(),
            Shape::Labelled(l) => diagram_from_labelled(l).unwrap(),
        };
        let window = diagram.default_window();
        let cb = contact_betti_from_delta(&diagram, &window).unwrap();
        let row: Vec<String> = cb
            .on_grid(&diagram.degree_step())
            .iter()
            .map(|(d, k)| format!("{}:{k}", rat_to_string(d)))
            .collect();
        println!("{name:<14} m={} δ={:?}", diagram.order(), diagram.delta().unwrap().coeffs());
        println!("  cb  {}", row.join(" "));
        println!(
            "  mean Euler characteristic {}, minimal discrepancy {}",
            rat_to_string(&mean_euler_characteristic(&diagram)),
            rat_to_string(&minimal_discrepancy(&diagram))
        );
        for t in [rat(1, 11), rat(1, 7), rat(-2, 13)] {
            let reeb = ReebVector::generic(&diagram, &t).unwrap();
            let direct = contact_betti_direct(&diagram, &reeb, &window).unwrap();
            println!("  orbit count with t = {:>5}: {}", rat_to_string(&t), if direct == cb { "agrees" } else { "DIFFERS" });
        }
    }
}
