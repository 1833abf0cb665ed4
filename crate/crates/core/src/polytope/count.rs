//! Lattice point enumeration in dilates `t·P`.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::RationalPolytope;
use crate::exactlat::{dot_int_rat, rat_from_int, Int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    Closed,
    Interior,
}

/// Magnitude bound keeping every partial sum comfortably inside i128.
const LIMIT: i128 = 1 << 40;

fn small(x: &Int) -> Option<i128> {
    x.to_i128().filter(|v| v.abs() < LIMIT)
}

fn box_bounds(p: &RationalPolytope, t: &Rat) -> Vec<(Int, Int)> {
    (0..p.dim())
        .map(|i| {
            let coords = p.vertices().iter().map(|v| &v[i] * t);
            let (lo, hi) = coords.fold((None::<Rat>, None::<Rat>), |(lo, hi), x| {
                (Some(lo.map_or(x.clone(), |l| l.min(x.clone()))), Some(hi.map_or(x.clone(), |h| h.max(x))))
            });
            (lo.unwrap().ceil().to_integer(), hi.unwrap().floor().to_integer())
        })
        .collect()
}

/// Integer right-hand side θ with `x ∈ region(t·P)` iff `⟨a, x⟩ ≥ θ` for the facet.
fn threshold(offset: &Rat, t: &Rat, region: Region) -> Int {
    let rhs = -(offset * t);
    match region {
        Region::Closed => rhs.ceil().to_integer(),
        Region::Interior => rhs.floor().to_integer() + 1,
    }
}

/// Row scan: the outer coordinates run over the bounding box and the last
/// coordinate range is solved from the facet inequalities. Fails without
/// emitting anything when the data does not fit machine integers.
pub(super) fn scan(
    p: &RationalPolytope,
    t: &Int,
    region: Region,
    emit: &mut dyn FnMut(&[i64]),
) -> Result<(), ()> {
    let n = p.dim();
    let tr = rat_from_int(t);
    let bounds: Vec<(i128, i128)> = box_bounds(p, &tr)
        .iter()
        .map(|(l, h)| Some((small(l)?, small(h)?)))
        .collect::<Option<_>>()
        .ok_or(())?;
    let facets: Vec<(Vec<i128>, i128)> = p
        .facets()
        .iter()
        .map(|f| {
            let a = f.normal.iter().map(small).collect::<Option<Vec<_>>>()?;
            Some((a, small(&threshold(&f.offset, &tr, region))?))
        })
        .collect::<Option<_>>()
        .ok_or(())?;
    if bounds.iter().any(|(l, h)| l > h) {
        return Ok(());
    }
    let mut x = vec![0i64; n];
    let mut partial = vec![0i128; facets.len()];
    recurse(0, n, &bounds, &facets, &mut x, &mut partial, emit);
    Ok(())
}

fn recurse(
    i: usize,
    n: usize,
    bounds: &[(i128, i128)],
    facets: &[(Vec<i128>, i128)],
    x: &mut Vec<i64>,
    partial: &mut Vec<i128>,
    emit: &mut dyn FnMut(&[i64]),
) {
    if i + 1 == n {
        let (mut lo, mut hi) = bounds[i];
        for (k, (a, theta)) in facets.iter().enumerate() {
            let need = theta - partial[k];
            let c = a[i];
            if c > 0 {
                lo = lo.max(-Integer::div_floor(&-need, &c));
            } else if c < 0 {
                hi = hi.min(Integer::div_floor(&need, &c));
            } else if need > 0 {
                return;
            }
        }
        for v in lo..=hi {
            x[i] = v as i64;
            emit(x);
        }
        return;
    }
    let (lo, hi) = bounds[i];
    for v in lo..=hi {
        x[i] = v as i64;
        for (k, (a, _)) in facets.iter().enumerate() {
            partial[k] += a[i] * v;
        }
        recurse(i + 1, n, bounds, facets, x, partial, emit);
        for (k, (a, _)) in facets.iter().enumerate() {
            partial[k] -= a[i] * v;
        }
    }
}

/// Reference enumeration: every box point is tested against every facet.
pub(super) fn naive_points(p: &RationalPolytope, t: &Int, region: Region, emit: &mut dyn FnMut(&[Int])) {
    let tr = rat_from_int(t);
    let bounds = box_bounds(p, &tr);
    if bounds.iter().any(|(l, h)| l > h) {
        return;
    }
    let mut x: Vec<Int> = bounds.iter().map(|(l, _)| l.clone()).collect();
    loop {
        let xr: Vec<Rat> = x.iter().map(rat_from_int).collect();
        let inside = p.facets().iter().all(|f| {
            let v = dot_int_rat(&f.normal, &xr) + &f.offset * &tr;
            match region {
                Region::Closed => !v.is_negative(),
                Region::Interior => v.is_positive(),
            }
        });
        if inside {
            emit(&x);
        }
        let mut i = x.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if x[i] < bounds[i].1 {
                x[i] += 1;
                break;
            }
            x[i] = bounds[i].0.clone();
        }
    }
}
