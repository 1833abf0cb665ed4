#![allow(dead_code)]

use num_traits::{Signed, Zero};
use toric_contact::contact::{validate_diagram, ToricDiagram};
use toric_contact::corpus;
use toric_contact::document::Shape;
use toric_contact::exactlat::{rat, Int, Rat, RatVector};
use toric_contact::polytope::{convex_hull, RationalPolytope};
use toric_contact::prequant::diagram_from_labelled;

pub fn polygon(points: &[(i64, i64)], denominator: i64) -> RationalPolytope {
    let v: Vec<RatVector> = points.iter().map(|&(x, y)| vec![rat(x, denominator), rat(y, denominator)]).collect();
    convex_hull(&v).unwrap()
}

pub fn diagram(points: &[(i64, i64)], denominator: i64) -> ToricDiagram {
    validate_diagram(&polygon(points, denominator)).unwrap()
}

pub fn lens() -> ToricDiagram {
    diagram(&[(1, 0), (0, 1), (-1, -1)], 1)
}

pub fn order_three() -> ToricDiagram {
    diagram(&[(1, 1), (1, 2), (2, 2), (2, 1)], 3)
}

pub fn quadrilateral() -> ToricDiagram {
    diagram(&[(0, 0), (1, 0), (0, 1), (2, 2)], 1)
}

pub fn corpus_diagrams() -> Vec<(String, ToricDiagram)> {
    corpus::documents()
        .into_iter()
        .map(|(name, doc)| {
            let d = match &doc.shape {
                Shape::Polytope { polytope, .. } => validate_diagram(polytope).unwrap(),
                Shape::Labelled(l) => diagram_from_labelled(l).unwrap(),
            };
            (name.to_string(), d)
        })
        .collect()
}

/// Twice the area of a convex polygon by the shoelace formula.
pub fn twice_area(p: &RationalPolytope) -> Rat {
    let vs = p.vertices();
    let cx: Rat = vs.iter().map(|v| v[0].clone()).sum::<Rat>() / rat(vs.len() as i64, 1);
    let cy: Rat = vs.iter().map(|v| v[1].clone()).sum::<Rat>() / rat(vs.len() as i64, 1);
    let mut sorted: Vec<&RatVector> = vs.iter().collect();
    let half = |v: &RatVector| -> bool { v[1] > cy || (v[1] == cy && v[0] > cx) };
    sorted.sort_by(|a, b| {
        let (ax, ay, bx, by) = (&a[0] - &cx, &a[1] - &cy, &b[0] - &cx, &b[1] - &cy);
        half(b).cmp(&half(a)).then_with(|| (&ay * &bx).cmp(&(&ax * &by)))
    });
    let k = sorted.len();
    (0..k)
        .map(|i| {
            let (a, b) = (sorted[i], sorted[(i + 1) % k]);
            &a[0] * &b[1] - &a[1] * &b[0]
        })
        .sum::<Rat>()
        .abs()
}

/// Lattice points strictly inside a polygon, by scanning its bounding box.
pub fn interior_points(p: &RationalPolytope) -> u64 {
    let lo: Vec<Int> = (0..2).map(|i| p.vertices().iter().map(|v| v[i].floor().to_integer()).min().unwrap()).collect();
    let hi: Vec<Int> = (0..2).map(|i| p.vertices().iter().map(|v| v[i].ceil().to_integer()).max().unwrap()).collect();
    let mut count = 0;
    let mut x = lo[0].clone();
    while x <= hi[0] {
        let mut y = lo[1].clone();
        while y <= hi[1] {
            if p.contains_strictly(&[Rat::from_integer(x.clone()), Rat::from_integer(y.clone())]) {
                count += 1;
            }
            y += 1;
        }
        x += 1;
    }
    count
}

/// Small deterministic pseudo-random sequence for building samples.
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 33) % n
    }
}

/// Toric diagrams of order `m` with three or four vertices in a small box,
/// drawn until `count` valid ones with pairwise distinct δ-vectors are found.
pub fn sample_diagrams(m: i64, count: usize, seed: u64) -> Vec<ToricDiagram> {
    let mut rng = Lcg::new(seed);
    let mut found: Vec<ToricDiagram> = Vec::new();
    for _ in 0..20000 {
        if found.len() == count {
            break;
        }
        let k = 3 + rng.below(2) as usize;
        let pts: Vec<(i64, i64)> = (0..k).map(|_| (rng.below(4 * m as u64) as i64 - m, rng.below(4 * m as u64) as i64 - m)).collect();
        let v: Vec<RatVector> = pts.iter().map(|&(x, y)| vec![rat(x, m), rat(y, m)]).collect();
        let Ok(p) = convex_hull(&v) else { continue };
        if p.order() != Int::from(m) || twice_area(&p).is_zero() {
            continue;
        }
        let Ok(d) = validate_diagram(&p) else { continue };
        let delta = d.delta().unwrap();
        if found.iter().all(|e| e.delta().unwrap() != delta) {
            found.push(d);
        }
    }
    found
}

pub fn factorial(n: usize) -> Int {
    (1..=n).map(Int::from).product()
}
