use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Int, IntMatrix, LatticeError};

/// Row-style Hermite normal form: `u * m == h` with `u` unimodular.
///
/// `h` is in row echelon form, pivots are positive, and entries above a
/// pivot lie in `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Column index of the pivot in each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

/// Smith normal form: `p * m * q == diag(diagonal)` with `p`, `q` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// `min(rows, cols)` non-negative entries with `d[i] | d[i+1]`; zeros trail.
    pub diagonal: Vec<Int>,
    pub p: IntMatrix,
    pub q: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| !d.is_zero()).count()
    }
}

/// `(g, x, y)` with `g = x*a + y*b` and `g >= 0`.
///
/// When `a | b` this returns `y = 0`, so eliminating `b` against a pivot `a`
/// never disturbs the pivot row; without that, elimination can cycle.
fn ext_gcd(a: &Int, b: &Int) -> (Int, Int, Int) {
    if !a.is_zero() && b.is_multiple_of(a) {
        let s = if a.is_negative() { -Int::one() } else { Int::one() };
        return (a.abs(), s, Int::zero());
    }
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub fn hermite_normal_form(m: &IntMatrix) -> HermiteForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut p = 0;
    for col in 0..cols {
        if p == rows {
            break;
        }
        for i in p + 1..rows {
            if h[(i, col)].is_zero() {
                continue;
            }
            let (a, b) = (h[(p, col)].clone(), h[(i, col)].clone());
            let (g, x, y) = ext_gcd(&a, &b);
            let (a1, b1) = (&a / &g, &b / &g);
            h.combine_rows(p, i, &x, &y, &-&b1, &a1);
            u.combine_rows(p, i, &x, &y, &-&b1, &a1);
        }
        if h[(p, col)].is_zero() {
            continue;
        }
        if h[(p, col)].is_negative() {
            h.negate_row(p);
            u.negate_row(p);
        }
        for i in 0..p {
            let q = h[(i, col)].div_floor(&h[(p, col)]);
            if !q.is_zero() {
                h.sub_row_multiple(i, p, &q);
                u.sub_row_multiple(i, p, &q);
            }
        }
        pivots.push(col);
        p += 1;
    }
    HermiteForm { h, u, pivots }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut p = IntMatrix::identity(rows);
    let mut q = IntMatrix::identity(cols);
    let steps = rows.min(cols);
    for t in 0..steps {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[(i, j)].is_zero()
                    && best.map_or(true, |(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap_rows(t, bi);
        p.swap_rows(t, bi);
        a.swap_cols(t, bj);
        q.swap_cols(t, bj);
        loop {
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let (x0, y0) = (a[(t, t)].clone(), a[(i, t)].clone());
                let (g, x, y) = ext_gcd(&x0, &y0);
                let (a1, b1) = (&x0 / &g, &y0 / &g);
                a.combine_rows(t, i, &x, &y, &-&b1, &a1);
                p.combine_rows(t, i, &x, &y, &-&b1, &a1);
            }
            let mut touched = false;
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let (x0, y0) = (a[(t, t)].clone(), a[(t, j)].clone());
                let (g, x, y) = ext_gcd(&x0, &y0);
                let (a1, b1) = (&x0 / &g, &y0 / &g);
                a.combine_cols(t, j, &x, &y, &-&b1, &a1);
                q.combine_cols(t, j, &x, &y, &-&b1, &a1);
                touched = true;
            }
            if touched && (t + 1..rows).any(|i| !a[(i, t)].is_zero()) {
                continue;
            }
            let pivot = a[(t, t)].clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let minus_one = -Int::one();
                    a.sub_row_multiple(t, i, &minus_one);
                    p.sub_row_multiple(t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            p.negate_row(t);
        }
    }
    let diagonal = (0..steps).map(|i| a[(i, i)].clone()).collect();
    SmithForm { diagonal, p, q }
}

/// Non-zero Smith invariants `d1 | d2 | ...` of a matrix.
pub fn smith_invariants(m: &IntMatrix) -> Vec<Int> {
    smith_normal_form(m).diagonal.into_iter().filter(|d| !d.is_zero()).collect()
}

/// Index of the Z-span of linearly independent integer vectors inside its
/// saturation: the product of the Smith invariants.
pub fn lattice_index(vs: &[Vec<Int>]) -> Result<Int, LatticeError> {
    if vs.is_empty() {
        return Ok(Int::one());
    }
    let m = IntMatrix::from_rows(vs);
    let inv = smith_invariants(&m);
    if inv.len() < vs.len() {
        return Err(LatticeError::LinearlyDependent);
    }
    Ok(inv.iter().product())
}

/// Extends `k` integer vectors in Z^d to a basis of Z^d.
///
/// Returns the `d - k` added vectors. The completion is read off the
/// inverse of the Hermite transform, so it is deterministic.
pub fn extend_to_basis(vs: &[Vec<Int>]) -> Result<Vec<Vec<Int>>, LatticeError> {
    let Some(first) = vs.first() else {
        return Err(LatticeError::DimensionMismatch("no vectors to extend".into()));
    };
    let d = first.len();
    if vs.iter().any(|v| v.len() != d) || vs.len() > d {
        return Err(LatticeError::DimensionMismatch(format!("{} vectors in Z^{d}", vs.len())));
    }
    let k = vs.len();
    let m = IntMatrix::from_columns(vs);
    let invariants = smith_invariants(&m);
    if invariants.len() < k {
        return Err(LatticeError::LinearlyDependent);
    }
    if invariants.iter().any(|x| !x.is_one()) {
        return Err(LatticeError::NotUnimodularSystem { invariants });
    }
    let hnf = hermite_normal_form(&m);
    debug_assert!((0..k).all(|i| (0..k).all(|j| hnf.h[(i, j)] == if i == j { Int::one() } else { Int::zero() })));
    let v = hnf.u.inverse_unimodular().expect("Hermite transform is unimodular");
    Ok((k..d).map(|j| v.column(j)).collect())
}

/// Completes `n` vectors of Z^{n+1} to a basis with one more vector.
pub fn complete_to_basis(vs: &[Vec<Int>]) -> Result<Vec<Int>, LatticeError> {
    if let Some(first) = vs.first() {
        if first.len() != vs.len() + 1 {
            return Err(LatticeError::DimensionMismatch(format!(
                "expected {} vectors in Z^{}, got {}",
                first.len() - 1,
                first.len(),
                vs.len()
            )));
        }
    }
    Ok(extend_to_basis(vs)?.pop().expect("one completing vector"))
}
