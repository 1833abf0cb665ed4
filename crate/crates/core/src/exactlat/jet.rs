//! First-order jets `value + slope·ε` with ε a positive infinitesimal.
//!
//! Jets let a Reeb vector be perturbed symbolically: comparisons are
//! lexicographic in `(value, slope)`, which is the order for all
//! sufficiently small ε > 0.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::{rat_from_int, Int, LatticeError, Rat};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Jet {
    pub value: Rat,
    pub slope: Rat,
}

impl Jet {
    pub fn new(value: Rat, slope: Rat) -> Self {
        Jet { value, slope }
    }

    pub fn constant(value: Rat) -> Self {
        Jet { value, slope: Rat::zero() }
    }

    pub fn zero() -> Self {
        Jet::constant(Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero() && self.slope.is_zero()
    }

    /// Sign for small ε > 0.
    pub fn signum(&self) -> Ordering {
        self.cmp(&Jet::zero())
    }

    pub fn scale(&self, k: &Rat) -> Jet {
        Jet { value: &self.value * k, slope: &self.slope * k }
    }

    /// Quotient to first order. `None` when the divisor has zero value.
    pub fn checked_div(&self, rhs: &Jet) -> Option<Jet> {
        if rhs.value.is_zero() {
            return None;
        }
        let value = &self.value / &rhs.value;
        let slope = (&self.slope * &rhs.value - &self.value * &rhs.slope) / (&rhs.value * &rhs.value);
        Some(Jet { value, slope })
    }
}

impl Ord for Jet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value).then_with(|| self.slope.cmp(&other.slope))
    }
}

impl PartialOrd for Jet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        Jet { value: &self.value + &rhs.value, slope: &self.slope + &rhs.slope }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        Jet { value: &self.value - &rhs.value, slope: &self.slope - &rhs.slope }
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet { value: -&self.value, slope: -&self.slope }
    }
}

/// Product truncated after the ε term.
impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        Jet {
            value: &self.value * &rhs.value,
            slope: &self.value * &rhs.slope + &self.slope * &rhs.value,
        }
    }
}

impl fmt::Debug for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.value, self.slope)
    }
}

/// Floor of `value + slope·ε` for all sufficiently small ε > 0.
pub fn jet_floor(x: &Jet) -> Result<Int, LatticeError> {
    if !x.value.is_integer() {
        return Ok(x.value.floor().to_integer());
    }
    let v = x.value.to_integer();
    if x.slope.is_positive() {
        Ok(v)
    } else if x.slope.is_negative() {
        Ok(v - 1)
    } else {
        Err(LatticeError::DegenerateJet { value: rat_from_int(&v) })
    }
}
