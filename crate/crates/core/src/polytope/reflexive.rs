//! Reflexive lattice polygons by exhaustive search.
//!
//! A lattice polygon containing the origin in its interior is reflexive when
//! every edge lies at lattice distance one from the origin. The search walks
//! counterclockwise through the nonzero points of a box, keeping only
//! strictly convex turns and distance-one edges, and then identifies the
//! results up to `GL₂(Z)`.

use std::collections::BTreeMap;

use num_integer::Integer;

use super::{convex_hull, RationalPolytope};
use crate::exactlat::{hermite_normal_form, int, rat, IntMatrix, Int};

/// Half-width of the search box. Every reflexive polygon has a
/// representative with vertices in `[-2, 2]²`.
const BOX: i64 = 2;

fn cross(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn sub(a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
    (a.0 - b.0, a.1 - b.1)
}

fn upper_half(p: (i64, i64)) -> bool {
    p.1 > 0 || (p.1 == 0 && p.0 > 0)
}

/// Angle order around the origin starting from the positive x-axis; ties
/// (same ray) are broken by length.
fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> std::cmp::Ordering {
    upper_half(b)
        .cmp(&upper_half(a))
        .then_with(|| 0.cmp(&cross(a, b)))
        .then_with(|| (a.0.abs() + a.1.abs()).cmp(&(b.0.abs() + b.1.abs())))
}

/// The edge `a → b` is counterclockwise and at lattice distance one.
fn unit_edge(a: (i64, i64), b: (i64, i64)) -> bool {
    let d = sub(b, a);
    cross(a, b) == d.0.gcd(&d.1)
}

fn left_turn(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> bool {
    cross(sub(b, a), sub(c, b)) > 0
}

/// Canonical form of a lattice polygon under `GL₂(Z)`: the least Hermite
/// form over all cyclic orderings of the vertex matrix.
pub fn polygon_normal_form(vertices: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let k = vertices.len();
    // Cyclic order around k times the centroid, to stay integral.
    let centre: Vec<Int> = (0..2).map(|i| vertices.iter().map(|v| &v[i]).sum()).collect();
    let rel = |v: &Vec<Int>| -> (Int, Int) { (&v[0] * Int::from(k) - &centre[0], &v[1] * Int::from(k) - &centre[1]) };
    let upper = |p: &(Int, Int)| p.1 > Int::from(0) || (p.1 == Int::from(0) && p.0 > Int::from(0));
    let mut sorted: Vec<&Vec<Int>> = vertices.iter().collect();
    sorted.sort_by(|a, b| {
        let (pa, pb) = (rel(a), rel(b));
        upper(&pb).cmp(&upper(&pa)).then_with(|| (&pa.1 * &pb.0).cmp(&(&pa.0 * &pb.1)))
    });
    let vertices: Vec<Vec<Int>> = sorted.into_iter().cloned().collect();
    let mut best: Option<Vec<Vec<Int>>> = None;
    for start in 0..k {
        for reverse in [false, true] {
            let order: Vec<&Vec<Int>> = (0..k)
                .map(|i| if reverse { &vertices[(start + k - i) % k] } else { &vertices[(start + i) % k] })
                .collect();
            let m = IntMatrix::from_rows(&[order.iter().map(|v| v[0].clone()).collect(), order.iter().map(|v| v[1].clone()).collect()]);
            let h = hermite_normal_form(&m).h.to_rows();
            if best.as_ref().is_none_or(|b| h < *b) {
                best = Some(h);
            }
        }
    }
    best.unwrap_or_default()
}

/// One representative of each of the reflexive polygons, vertices
/// counterclockwise, sorted by number of lattice points and then by normal
/// form.
pub fn reflexive_polygons() -> Vec<RationalPolytope> {
    let mut points: Vec<(i64, i64)> =
        (-BOX..=BOX).flat_map(|x| (-BOX..=BOX).map(move |y| (x, y))).filter(|&p| p != (0, 0)).collect();
    points.sort_by(|&a, &b| angle_cmp(a, b));
    let mut found: BTreeMap<Vec<Vec<Int>>, Vec<(i64, i64)>> = BTreeMap::new();
    let mut path = Vec::new();
    for first in 0..points.len() {
        path.push(points[first]);
        extend(&points, first, &mut path, &mut found);
        path.pop();
    }
    let mut polygons: Vec<RationalPolytope> = found
        .into_values()
        .map(|vs| convex_hull(&vs.iter().map(|&(x, y)| vec![rat(x, 1), rat(y, 1)]).collect::<Vec<_>>()).expect("full-dimensional"))
        .collect();
    polygons.sort_by_cached_key(|p| p.count_points(&int(1), super::Region::Closed));
    polygons
}

/// Depth-first search over counterclockwise vertex sequences beginning with
/// `points[first]`, later vertices taken from strictly later angles.
fn extend(points: &[(i64, i64)], last: usize, path: &mut Vec<(i64, i64)>, found: &mut BTreeMap<Vec<Vec<Int>>, Vec<(i64, i64)>>) {
    let tail = *path.last().expect("non-empty path");
    let head = path[0];
    if path.len() >= 3 && unit_edge(tail, head) && left_turn(path[path.len() - 2], tail, head) && left_turn(tail, head, path[1]) {
        let vs: Vec<Vec<Int>> = path.iter().map(|&(x, y)| vec![int(x), int(y)]).collect();
        found.entry(polygon_normal_form(&vs)).or_insert_with(|| path.clone());
    }
    for next in last + 1..points.len() {
        let p = points[next];
        // Consecutive vertices turn by less than π around the origin.
        if cross(tail, p) <= 0 || !unit_edge(tail, p) {
            continue;
        }
        if path.len() >= 2 && !left_turn(path[path.len() - 2], tail, p) {
            continue;
        }
        path.push(p);
        extend(points, next, path, found);
        path.pop();
    }
}
