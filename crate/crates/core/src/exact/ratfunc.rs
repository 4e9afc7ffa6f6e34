use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Quotient of two integer polynomials kept in lowest terms.
///
/// The numerator and denominator share neither a polynomial factor nor an
/// integer factor, and the denominator has a positive leading coefficient.
/// Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

/// Reduces `num / den` to canonical form.
pub fn ratfunc_reduce(num: IntPoly, den: IntPoly) -> Result<RatFunc> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(RatFunc {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        });
    }
    let g = num.gcd(&den).primitive_part();
    let mut num = num.div_exact(&g).expect("gcd divides numerator");
    let mut den = den.div_exact(&g).expect("gcd divides denominator");
    let mut c = num.content().gcd(&den.content());
    if den.leading().is_some_and(Signed::is_negative) {
        c = -c;
    }
    num = num.div_exact(&IntPoly::constant(c.clone())).unwrap();
    den = den.div_exact(&IntPoly::constant(c)).unwrap();
    Ok(RatFunc { num, den })
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        ratfunc_reduce(num, den)
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFunc {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Substitutes `t -> t^2` in numerator and denominator.
    pub fn substitute_square(&self) -> RatFunc {
        // Still coprime: any common root of p(t^2), q(t^2) squares to a common root of p, q.
        RatFunc {
            num: self.num.substitute_square(),
            den: self.den.substitute_square(),
        }
    }

    pub fn mul_poly(&self, p: &IntPoly) -> RatFunc {
        ratfunc_reduce(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    /// Value of the constant term of the Taylor expansion, if regular at 0.
    pub fn value_at_zero(&self) -> Option<num_rational::BigRational> {
        let d = self.den.coeff(0);
        (!d.is_zero()).then(|| num_rational::BigRational::new(self.num.coeff(0), d))
    }

    pub fn render(&self, var: char) -> String {
        if self.den.is_one() {
            return self.num.render(var);
        }
        format!("({}) / ({})", self.num.render(var), self.den.render(var))
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('t'))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.render('t'))
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        ratfunc_reduce(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        ratfunc_reduce(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        ratfunc_reduce(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}
