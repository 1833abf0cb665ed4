//! Dense univariate polynomials with exact coefficients.

use std::fmt;

use num_traits::{One, Zero};

use crate::exactlat::{rat_from_int, Int, Rat};

/// Polynomial over Q, coefficients from degree 0 upwards, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `a + b t`
    pub fn linear(a: Rat, b: Rat) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * t + c)
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rat::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return RatPoly::default();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &Rat) -> RatPoly {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `C(x + n, n)` as a polynomial in x.
    pub fn binomial_shifted(n: usize) -> RatPoly {
        let mut p = RatPoly::constant(Rat::one());
        for i in 1..=n {
            let factor = RatPoly::linear(Rat::from_integer(Int::from(i)), Rat::one())
                .scale(&Rat::new(Int::one(), Int::from(i)));
            p = p.mul(&factor);
        }
        p
    }

    /// Substitutes `x = (t - shift) / period` into `self`.
    pub fn compose_affine(&self, shift: &Rat, period: &Rat) -> RatPoly {
        let x = RatPoly::linear(-shift / period, Rat::one() / period);
        let mut out = RatPoly::default();
        for c in self.coeffs.iter().rev() {
            out = out.mul(&x).add(&RatPoly::constant(c.clone()));
        }
        out
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Polynomial over Z, coefficients from degree 0 upwards, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![Int::one()])
    }

    /// `q^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Int::zero(); k + 1];
        c[k] = Int::one();
        Self::new(c)
    }

    /// `(1 - q)^k`
    pub fn one_minus_q_to_power(k: usize) -> Self {
        let base = IntPoly::new(vec![Int::one(), -Int::one()]);
        (0..k).fold(IntPoly::one(), |acc, _| acc.mul(&base))
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::default();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(rat_from_int).collect())
    }
}
