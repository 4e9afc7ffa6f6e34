//! Exact arithmetic kernel: integer polynomials, rational functions, and
//! fraction-free linear algebra over `Z` and `Z[t]`.

mod matrix;
mod poly;
mod ratfunc;
mod vector;

pub use matrix::{ExactRing, IntMatrix, Matrix, PolyMatrix};
pub use poly::IntPoly;
pub use ratfunc::{ratfunc_reduce, RatFunc};
pub use vector::RootVector;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Characteristic polynomial `det(L*I - m)`, computed fraction-free.
pub fn charpoly(m: &IntMatrix) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "charpoly needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let pm = PolyMatrix::from_fn(m.rows(), m.cols(), |r, c| {
        let entry = IntPoly::constant(-m[(r, c)].clone());
        if r == c {
            entry + IntPoly::var()
        } else {
            entry
        }
    });
    pm.det()
}

/// Determinant of a polynomial matrix by Bareiss elimination in `Z[t]`.
pub fn det_poly(m: &PolyMatrix) -> Result<IntPoly> {
    m.det()
}

/// First `n_terms` Taylor coefficients of `f` at `t = 0`.
pub fn series_expand(f: &RatFunc, n_terms: usize) -> Result<Vec<BigRational>> {
    let den = f.den();
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    let num = f.num();
    let dd = den.degree().unwrap_or(0);
    let mut out: Vec<BigRational> = Vec::with_capacity(n_terms);
    for n in 0..n_terms {
        let mut acc = BigRational::from_integer(num.coeff(n));
        for k in 1..=dd.min(n) {
            let dk = den.coeff(k);
            if !dk.is_zero() {
                acc -= &out[n - k] * BigRational::from_integer(dk);
            }
        }
        out.push(acc / BigRational::from_integer(d0.clone()));
    }
    Ok(out)
}

/// Series coefficients that must be integers; a fractional coefficient is
/// reported as an identity violation.
pub fn series_expand_integral(f: &RatFunc, n_terms: usize) -> Result<Vec<BigInt>> {
    series_expand(f, n_terms)?
        .into_iter()
        .enumerate()
        .map(|(n, c)| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::IdentityViolation(format!(
                    "coefficient {c} of t^{n} in {f} is not an integer"
                )))
            }
        })
        .collect()
}

/// Primitive, strictly positive generator of the kernel of a matrix with
/// nullity exactly one.
pub fn nullspace_primitive(m: &IntMatrix) -> Result<RootVector> {
    if !m.is_square() {
        return Err(Error::Dimension("nullspace of a non-square matrix".into()));
    }
    let n = m.cols();
    let mut a: Vec<Vec<BigRational>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();

    // Reduced row echelon form.
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for v in a[row].iter_mut() {
            *v *= &inv;
        }
        let pivot = a[row].clone();
        for (r, target) in a.iter_mut().enumerate() {
            if r != row && !target[col].is_zero() {
                let factor = target[col].clone();
                for (x, p) in target.iter_mut().zip(&pivot) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let nullity = n - pivots.len();
    if nullity != 1 {
        return Err(Error::Rank { nullity });
    }
    let free = (0..n).find(|c| !pivots.contains(c)).unwrap();
    let mut v = vec![BigRational::zero(); n];
    v[free] = BigRational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -a[r][free].clone();
    }

    // Clear denominators, then divide out the content.
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    for x in ints.iter_mut() {
        *x = &*x / &g;
    }
    if ints.iter().all(Signed::is_negative) {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    let out = RootVector::new(ints);
    if !out.all_positive() {
        return Err(Error::NonPositiveKernel(out.to_string()));
    }
    Ok(out)
}
