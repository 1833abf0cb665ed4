//! Ehrhart quasi-polynomials and δ-vectors of rational polytopes.
//!
//! For a polytope `P ⊂ R^n` of order `m`, the Ehrhart series factors as
//! `Σ_t L_P(t) z^t = (Σ_j δ_j z^j) / (1 - z^m)^{n+1}` with `δ` supported on
//! `0 ≤ j < m(n+1)`. The δ-vector is computed from the first `m(n+1)` exact
//! lattice-point counts; the quasi-polynomial branches are derived from it.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::exactlat::{is_integral, rat_from_int, Int, Rat};
use crate::poly::{IntPoly, RatPoly};
use crate::polytope::{PolytopeError, RationalPolytope, Region};

/// Largest `m(n+1)` accepted; beyond this the count table is impractical.
const MAX_SERIES_LENGTH: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeltaVector {
    order: usize,
    dim: usize,
    coeffs: Vec<u64>,
}

impl DeltaVector {
    /// Wraps raw coefficients; `coeffs.len()` must be `order·(dim + 1)`.
    pub fn from_coeffs(order: usize, dim: usize, coeffs: Vec<u64>) -> Self {
        assert_eq!(coeffs.len(), order * (dim + 1), "δ-vector length must be m(n+1)");
        DeltaVector { order, dim, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// `δ_j`, zero outside `0..m(n+1)` (including negative `j`).
    pub fn get(&self, j: i64) -> u64 {
        usize::try_from(j).ok().and_then(|j| self.coeffs.get(j)).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// `δ_j = δ_{n-j}` for integral polytopes (`m = 1`).
    pub fn is_palindromic(&self) -> bool {
        self.order == 1 && (0..=self.dim).all(|j| self.coeffs[j] == self.coeffs[self.dim - j])
    }

    /// `L(t)` for `t ≥ 0` read off the series, independent of the branches.
    pub fn series_value(&self, t: u64) -> Int {
        series_value(&self.coeffs, self.order, self.dim, t)
    }
}

/// Coefficient of `z^t` in `(Σ_i numerator[i] z^i) / (1 - z^m)^{n+1}`.
pub fn series_value(numerator: &[u64], m: usize, n: usize, t: u64) -> Int {
    let (m, n) = (m as u64, n as u64);
    let mut total = Int::zero();
    for (j, d) in numerator.iter().enumerate() {
        let j = j as u64;
        if *d == 0 || j > t || (t - j) % m != 0 {
            continue;
        }
        total += Int::from(*d) * binomial((t - j) / m + n, n);
    }
    total
}

fn binomial(a: u64, b: u64) -> Int {
    let mut acc = Int::one();
    for i in 0..b {
        acc = acc * Int::from(a - i) / Int::from(i + 1);
    }
    acc
}

/// `L(t)` given by one polynomial per residue class of `t` modulo the period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    branches: Vec<RatPoly>,
}

impl QuasiPolynomial {
    pub fn period(&self) -> usize {
        self.branches.len()
    }

    /// Polynomial used for `t ≡ residue (mod period)`.
    pub fn branch(&self, residue: usize) -> &RatPoly {
        &self.branches[residue]
    }

    pub fn branches(&self) -> &[RatPoly] {
        &self.branches
    }

    /// Evaluates the matching branch at any integer, negative ones included.
    pub fn eval(&self, t: &Int) -> Rat {
        let r = t.mod_floor(&Int::from(self.period())).to_usize().expect("residue fits");
        self.branches[r].eval(&rat_from_int(t))
    }
}

/// `#(tP ∩ Z^n)` for each requested `t`, with `L(0) = 1` for the closed
/// polytope and `0` for its interior. Counts run in parallel.
pub fn counts(p: &RationalPolytope, ts: &[u64], region: Region) -> Vec<u64> {
    ts.par_iter()
        .map(|&t| match (t, region) {
            (0, Region::Closed) => 1,
            (0, Region::Interior) => 0,
            _ => p.count_points(&Int::from(t), region),
        })
        .collect()
}

fn order_usize(p: &RationalPolytope) -> Result<usize, PolytopeError> {
    let m = p.order();
    m.to_usize()
        .filter(|m| m.checked_mul(p.dim() + 1).is_some_and(|len| len <= MAX_SERIES_LENGTH))
        .ok_or_else(|| PolytopeError::TooLarge(format!("order {m} in dimension {}", p.dim())))
}

/// Coefficients `0..len` of `(1 - z^m)^{n+1} · Σ_t values[t] z^t`.
fn multiply_by_denominator(values: &[u64], m: usize, n: usize) -> Vec<Int> {
    let mut base = vec![Int::zero(); m + 1];
    base[0] = Int::one();
    base[m] = -Int::one();
    let base = IntPoly::new(base);
    let factor = (0..=n).fold(IntPoly::one(), |acc, _| acc.mul(&base));
    (0..values.len())
        .map(|j| {
            (0..=j)
                .map(|i| factor.coeff(i) * Int::from(values[j - i]))
                .fold(Int::zero(), |a, b| a + b)
        })
        .collect()
}

pub fn delta_vector(p: &RationalPolytope) -> Result<DeltaVector, PolytopeError> {
    let m = order_usize(p)?;
    let n = p.dim();
    let ts: Vec<u64> = (0..(m * (n + 1)) as u64).collect();
    let values = counts(p, &ts, Region::Closed);
    let coeffs = multiply_by_denominator(&values, m, n)
        .into_iter()
        .map(|d| d.to_u64().expect("δ-coefficients are non-negative"))
        .collect();
    Ok(DeltaVector::from_coeffs(m, n, coeffs))
}

/// Branches `L(t) = Σ_{j ≡ t (mod m)} δ_j · C((t - j)/m + n, n)`.
pub fn quasipolynomial(delta: &DeltaVector) -> QuasiPolynomial {
    let m = delta.order();
    let base = RatPoly::binomial_shifted(delta.dim());
    let period = Rat::from_integer(Int::from(m));
    let branches = (0..m)
        .map(|r| {
            delta
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(j, d)| j % m == r && **d != 0)
                .fold(RatPoly::default(), |acc, (j, d)| {
                    let shifted = base.compose_affine(&Rat::from_integer(Int::from(j)), &period);
                    acc.add(&shifted.scale(&Rat::from_integer(Int::from(*d))))
                })
        })
        .collect();
    QuasiPolynomial { branches }
}

/// Numerator of `Σ_{t≥1} L_int(t) z^t` over `(1 - z^m)^{n+1}`, as
/// coefficients of `z^0 … z^{m(n+1)}`. The coefficient of `z^{m+j}` is
/// `δ_{mn-j}`.
pub fn interior_series_coeffs(delta: &DeltaVector) -> Vec<u64> {
    let top = (delta.order() * (delta.dim() + 1)) as i64;
    (0..=top).map(|i| if i == 0 { 0 } else { delta.get(top - i) }).collect()
}

/// The same numerator recomputed from direct interior counts.
pub fn interior_series_from_counts(p: &RationalPolytope) -> Result<Vec<u64>, PolytopeError> {
    let m = order_usize(p)?;
    let n = p.dim();
    let ts: Vec<u64> = (0..=(m * (n + 1)) as u64).collect();
    let values = counts(p, &ts, Region::Interior);
    Ok(multiply_by_denominator(&values, m, n)
        .into_iter()
        .map(|d| d.to_u64().expect("interior numerator is non-negative"))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reflexivity {
    NotIntegral,
    Checked {
        /// The polytope has a unique interior lattice point and the dual
        /// about it is integral.
        dual_integral: bool,
        palindromic: bool,
    },
}

impl Reflexivity {
    pub fn is_reflexive(&self) -> bool {
        matches!(self, Reflexivity::Checked { dual_integral: true, .. })
    }

    /// Both characterisations were evaluated and agree.
    pub fn consistent(&self) -> bool {
        match self {
            Reflexivity::NotIntegral => true,
            Reflexivity::Checked { dual_integral, palindromic } => dual_integral == palindromic,
        }
    }
}

/// Decides reflexivity twice: by the polar dual about the unique interior
/// point, and by palindromicity of the δ-vector.
pub fn reflexivity(p: &RationalPolytope) -> Result<Reflexivity, PolytopeError> {
    if !p.is_integral() {
        return Ok(Reflexivity::NotIntegral);
    }
    let palindromic = delta_vector(p)?.is_palindromic();
    let interior = p.lattice_points(&Int::one(), Region::Interior);
    let dual_integral = match interior.as_slice() {
        [c] => {
            let shift: Vec<Rat> = c.iter().map(|x| -rat_from_int(x)).collect();
            let dual = p.translate(&shift).dual()?;
            dual.vertices().iter().all(|v| is_integral(v))
        }
        _ => false,
    };
    Ok(Reflexivity::Checked { dual_integral, palindromic })
}

/// `L(-t)` from the branches against `(-1)^n L_int(t)` for `1 ≤ t ≤ t_max`;
/// returns the first failing `t`.
pub fn check_reciprocity(p: &RationalPolytope, q: &QuasiPolynomial, t_max: u64) -> Result<(), u64> {
    let sign = if p.dim() % 2 == 0 { Rat::one() } else { -Rat::one() };
    let ts: Vec<u64> = (1..=t_max).collect();
    let interior = counts(p, &ts, Region::Interior);
    for (t, c) in ts.iter().zip(interior) {
        let lhs = q.eval(&-Int::from(*t));
        if lhs != &sign * Rat::from_integer(Int::from(c)) {
            return Err(*t);
        }
    }
    Ok(())
}

/// `m · n!·vol(mP)`, the value `Σ δ_j` must take.
pub fn expected_delta_sum(p: &RationalPolytope) -> Rat {
    let m = rat_from_int(&p.order());
    let scale = (0..p.dim()).fold(Rat::one(), |acc, _| acc * &m);
    &m * scale * p.normalized_volume()
}
