//! Hermite and Smith normal forms, lattice indices, basis completion and
//! first-order jets.

use toric_contact::exactlat::{
    complete_to_basis, extend_to_basis, hermite_normal_form, int_vector, jet_floor, lattice_index, rat, smith_normal_form,
    IntMatrix, Jet,
};

fn show(label: &str, m: &IntMatrix) {
    println!("{label}:");
    for r in m.to_rows() {
        println!("  {}", r.iter().map(|x| format!("{x:>4}")).collect::<String>());
    }
}

fn main() {
    // Normals of the order-3 diagram's cone: they span an index-9 sublattice.
    let normals = IntMatrix::from_i64_rows(&[&[1, 1, 3], &[1, 2, 3], &[2, 2, 3], &[2, 1, 3]]);
    show("normals", &normals);

    let hnf = hermite_normal_form(&normals);
    show("Hermite form", &hnf.h);
    assert_eq!(&hnf.u * &normals, hnf.h);

    let snf = smith_normal_form(&normals);
    println!("Smith invariants: {:?}", snf.diagonal.iter().map(ToString::to_string).collect::<Vec<_>>());
    show("P·A·Q", &(&(&snf.p * &normals) * &snf.q));

    // A facet of a toric diagram must have unimodular normals; two adjacent
    // normals of the cone above pass, opposite ones do not.
    let adjacent = [int_vector(&[1, 2, 3]), int_vector(&[2, 2, 3])];
    let opposite = [int_vector(&[1, 1, 3]), int_vector(&[2, 2, 3])];
    println!("index of adjacent pair: {}", lattice_index(&adjacent).unwrap());
    println!("index of opposite pair: {}", lattice_index(&opposite).unwrap());

    let mut basis = adjacent.to_vec();
    basis.extend(extend_to_basis(&adjacent).unwrap());
    let b = IntMatrix::from_rows(&basis);
    show("completed basis", &b);
    println!("det = {}", b.det());
    println!("single completing vector: {:?}", complete_to_basis(&adjacent).unwrap().iter().map(ToString::to_string).collect::<Vec<_>>());

    // Jets v + sε decide floors at exact integers by the sign of the slope.
    for j in [Jet::new(rat(2, 1), rat(1, 1)), Jet::new(rat(2, 1), rat(-1, 1)), Jet::new(rat(5, 3), rat(-7, 1))] {
        println!("floor({j:?}) = {}", jet_floor(&j).unwrap());
    }
    let degenerate = Jet::new(rat(2, 1), rat(0, 1));
    println!("floor({degenerate:?}) -> {}", jet_floor(&degenerate).unwrap_err());
}
