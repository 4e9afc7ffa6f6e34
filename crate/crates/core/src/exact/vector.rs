use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::matrix::IntMatrix;

/// Integer coordinate vector in a simple-root basis.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RootVector(Vec<BigInt>);

impl RootVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        RootVector(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        RootVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(len: usize) -> Self {
        RootVector(vec![BigInt::zero(); len])
    }

    /// Simple root `alpha_i` in a basis of the given size.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zero(len);
        v.0[i] = BigInt::from(1);
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.0
            .iter()
            .map(|c| c.to_i64().expect("root coordinate fits in i64"))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn all_positive(&self) -> bool {
        self.0.iter().all(Signed::is_positive)
    }

    pub fn all_nonnegative(&self) -> bool {
        !self.0.iter().any(Signed::is_negative)
    }

    pub fn max_coord(&self) -> Option<&BigInt> {
        self.0.iter().max()
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        RootVector(self.0.iter().map(|x| x * &c).collect())
    }

    /// Copy with a leading coordinate prepended (finite to extended basis).
    pub fn prepend(&self, first: BigInt) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(first);
        v.extend(self.0.iter().cloned());
        RootVector(v)
    }

    /// Copy with the leading coordinate removed (extended to finite basis).
    pub fn drop_first(&self) -> Self {
        RootVector(self.0[1..].to_vec())
    }

    pub fn apply(&self, m: &IntMatrix) -> Self {
        RootVector(m.mul_vec(&self.0))
    }

    pub fn l1_norm(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).sum()
    }
}

impl Index<usize> for RootVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl<'a> Add<&'a RootVector> for &'a RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        assert_eq!(self.len(), rhs.len(), "root vector length mismatch");
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a RootVector> for &'a RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        assert_eq!(self.len(), rhs.len(), "root vector length mismatch");
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootVector{self}")
    }
}
