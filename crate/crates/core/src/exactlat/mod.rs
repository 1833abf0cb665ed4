//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers ([`Int`]) and
//! rationals ([`Rat`]); no floating point is used anywhere in the crate.

mod jet;
mod matrix;
mod normal_form;

pub use jet::{jet_floor, Jet};
pub use matrix::IntMatrix;
pub use normal_form::{
    complete_to_basis, extend_to_basis, hermite_normal_form, lattice_index, smith_invariants,
    smith_normal_form, HermiteForm, SmithForm,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Int = BigInt;
pub type Rat = BigRational;
/// A point or direction in Q^n.
pub type RatVector = Vec<Rat>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("vectors do not extend to a lattice basis (Smith invariants {invariants:?})")]
    NotUnimodularSystem { invariants: Vec<Int> },
    #[error("vectors are linearly dependent")]
    LinearlyDependent,
    #[error("jet floor is degenerate: value {value} is an integer and slope is zero")]
    DegenerateJet { value: Rat },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

pub fn rat_from_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

pub fn int_vector(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rat_vector(v: &[(i64, i64)]) -> RatVector {
    v.iter().map(|&(p, q)| rat(p, q)).collect()
}

pub fn to_rat_vector(v: &[Int]) -> RatVector {
    v.iter().map(rat_from_int).collect()
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int_rat(a: &[Int], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .map(|(x, y)| rat_from_int(x) * y)
        .sum()
}

/// Non-negative gcd of all entries; zero for the zero vector.
pub fn gcd_all(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

pub fn lcm_all<'a, I: IntoIterator<Item = &'a Int>>(v: I) -> Int {
    v.into_iter().fold(Int::one(), |l, x| l.lcm(x))
}

/// Divides out the gcd. The zero vector is returned unchanged.
pub fn primitive(v: &[Int]) -> Vec<Int> {
    let g = gcd_all(v);
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_from_rat(v: &[Rat]) -> Vec<Int> {
    let den = lcm_all(v.iter().map(|x| x.denom()));
    let scaled: Vec<Int> = v.iter().map(|x| (x * rat_from_int(&den)).to_integer()).collect();
    primitive(&scaled)
}

pub fn is_integral(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Fractional part in [0, 1).
pub fn frac(x: &Rat) -> Rat {
    x - rat_from_int(&x.floor().to_integer())
}

/// Determinant of a square rational matrix given by rows (Gaussian elimination).
pub fn det_rat(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &pivot;
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    det
}

/// Rank of a rational matrix given by rows.
pub fn rank_rat(rows: &[Vec<Rat>]) -> usize {
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let pivot = a[rank][c].clone();
        for r in 0..a.len() {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &pivot;
                for k in c..cols {
                    let t = &f * &a[rank][k];
                    a[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solves `A x = b` for square invertible `A` (rows). `None` when singular.
pub fn solve_rat(a: &[Vec<Rat>], b: &[Rat]) -> Option<RatVector> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(p, c);
        let pivot = m[c][c].clone();
        for k in c..=n {
            m[c][k] = &m[c][k] / &pivot;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in c..=n {
                    let t = &f * &m[c][k];
                    m[r][k] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Integer vector normal to the hyperplane spanned by `n - 1` vectors of Z^n
/// (generalised cross product by cofactors). Zero when they are dependent.
pub fn cofactor_normal(vs: &[Vec<Rat>]) -> RatVector {
    let n = vs.len() + 1;
    (0..n)
        .map(|i| {
            let minor: Vec<Vec<Rat>> = vs
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = det_rat(&minor);
            if i % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

pub fn abs_rat(x: &Rat) -> Rat {
    x.abs()
}
