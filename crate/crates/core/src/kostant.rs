//! McKay and Slodowy operators, the Kostant generating function and its
//! series of multiplicities.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coxeter::coxeter_charpoly;
use crate::diagram::{build, kostant_numbers, Diagram, DiagramId};
use crate::error::{Error, Result};
use crate::exact::{det_poly, series_expand_integral, IntMatrix, IntPoly, PolyMatrix, RatFunc, RootVector};
use crate::report::Report;

/// `B = 2I - K` of an extended diagram.
pub fn mckay_operator(d: &Diagram) -> Result<IntMatrix> {
    if !d.is_extended() {
        return Err(Error::Domain(format!("{} is not extended", d.id)));
    }
    Ok(&IntMatrix::scalar(d.len(), 2) - &d.cartan)
}

/// `M(t) = (1 + t^2) I - t B`, written through `B = 2I - K`.
pub fn ebeling_matrix(d: &Diagram) -> PolyMatrix {
    let b = &IntMatrix::scalar(d.len(), 2) - &d.cartan;
    let one_plus_t2 = IntPoly::from_i64(&[1, 0, 1]);
    PolyMatrix::from_fn(d.len(), d.len(), |r, c| {
        let off = IntPoly::monomial(-b[(r, c)].clone(), 1);
        if r == c {
            &one_plus_t2 + &off
        } else {
            off
        }
    })
}

/// Components of `x(t)` solving `M(t) x = v0`, indexed like the diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingFunction {
    pub components: Vec<RatFunc>,
}

impl GeneratingFunction {
    pub fn component(&self, i: usize) -> &RatFunc {
        &self.components[i]
    }
}

/// Solves `M(t) x = v0` by Cramer's rule, one column replacement per vertex.
pub fn generating_function(d: &Diagram) -> Result<GeneratingFunction> {
    if !d.is_extended() {
        return Err(Error::Domain(format!("{} is not extended", d.id)));
    }
    let m = ebeling_matrix(d);
    let det = det_poly(&m)?;
    let n = d.len();
    let components = (0..n)
        .map(|i| {
            let mut mi = m.clone();
            for r in 0..n {
                mi[(r, i)] = IntPoly::from(i64::from(r == 0));
            }
            RatFunc::new(det_poly(&mi)?, det.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratingFunction { components })
}

/// `(1 + t^h) / ((1 - t^a)(1 - t^b))`, checked against the Cramer route.
pub fn closed_form_component0(id: DiagramId) -> Result<RatFunc> {
    let k = kostant_numbers(id)?;
    let closed = RatFunc::new(
        IntPoly::t_pow_plus_one(k.h as usize),
        &IntPoly::one_minus_t_pow(k.a as usize) * &IntPoly::one_minus_t_pow(k.b as usize),
    )?;
    let cramer = generating_function(&build(id.to_extended())?)?;
    if cramer.component(0) != &closed {
        return Err(Error::IdentityViolation(format!(
            "{id}: closed form {closed} differs from {}",
            cramer.component(0)
        )));
    }
    Ok(closed)
}

/// Truncated multiplicity vectors `v_0 .. v_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesVector {
    pub vectors: Vec<RootVector>,
}

impl SeriesVector {
    pub fn order(&self) -> usize {
        self.vectors.len().saturating_sub(1)
    }

    /// Coefficients of component `i` for `n = 0..=N`.
    pub fn coordinate(&self, i: usize) -> Vec<BigInt> {
        self.vectors.iter().map(|v| v[i].clone()).collect()
    }
}

/// Series coefficients of every component up to `t^N`, required to be
/// nonnegative integers.
pub fn multiplicities(d: &Diagram, order: usize) -> Result<SeriesVector> {
    let gf = generating_function(d)?;
    let columns = gf
        .components
        .iter()
        .map(|f| series_expand_integral(f, order + 1))
        .collect::<Result<Vec<_>>>()?;
    let vectors: Vec<RootVector> = (0..=order)
        .map(|n| RootVector::new(columns.iter().map(|c| c[n].clone()).collect()))
        .collect();
    if let Some((n, v)) = vectors.iter().enumerate().find(|(_, v)| !v.all_nonnegative()) {
        return Err(Error::IdentityViolation(format!(
            "{}: negative multiplicity in v_{n} = {v}",
            d.id
        )));
    }
    Ok(SeriesVector { vectors })
}

/// Checks `B v_n = v_(n-1) + v_(n+1)` for `1 <= n < N` and the vector
/// identity `t B x = (1 + t^2) x - v0` for `x` the generating function.
pub fn verify_kostant_relation(d: &Diagram, order: usize) -> Result<Report> {
    if order < 2 {
        return Err(Error::Domain(format!("order must be at least 2, got {order}")));
    }
    let b = mckay_operator(d)?;
    let series = multiplicities(d, order)?;
    let mut report = Report::new("kostant-relation", d.id.to_string());
    let v = &series.vectors;
    let bad: Vec<usize> = (1..order)
        .filter(|&n| v[n].apply(&b) != &v[n - 1] + &v[n + 1])
        .collect();
    report.check(
        format!("B v_n = v_(n-1) + v_(n+1), 1 <= n < {order}"),
        bad.is_empty(),
        if bad.is_empty() {
            String::new()
        } else {
            format!("violated at n = {bad:?}")
        },
    );

    let x = generating_function(d)?;
    let t = IntPoly::var();
    let one_plus_t2 = IntPoly::from_i64(&[1, 0, 1]);
    for i in 0..d.len() {
        let mut lhs = RatFunc::from_poly(IntPoly::zero());
        for j in 0..d.len() {
            if !b[(i, j)].is_zero() {
                lhs = &lhs + &x.component(j).mul_poly(&t.scale(&b[(i, j)]));
            }
        }
        let v0 = RatFunc::from_poly(IntPoly::from(i64::from(i == 0)));
        let rhs = &x.component(i).mul_poly(&one_plus_t2) - &v0;
        report.check_eq(format!("t (B x)_{} = (1 + t^2) x_{} - (v0)_{}", d.labels[i], d.labels[i], d.labels[i]), &lhs, &rhs);
    }
    Ok(report)
}

/// Both halves of the Ebeling identity and the quotient form of component 0:
/// `det M = chi_affine(t^2)`, `det M_0 = chi(t^2)`, `x_0 = chi(t^2)/chi_affine(t^2)`.
pub fn verify_ebeling(d: &Diagram) -> Result<Report> {
    if !d.is_extended() {
        return Err(Error::Domain(format!("{} is not extended", d.id)));
    }
    let m = ebeling_matrix(d);
    let chi_affine = coxeter_charpoly(d)?.substitute_square();
    let chi = coxeter_charpoly(&d.finite_part()?)?.substitute_square();
    let mut report = Report::new("ebeling", d.id.to_string());
    report.check_eq("det M(t) = det(t^2 I - C_a)", &det_poly(&m)?, &chi_affine);
    report.check_eq("det M_0(t) = det(t^2 I - C)", &det_poly(&m.minor(0))?, &chi);
    let x0 = generating_function(d)?.components.swap_remove(0);
    report.check_eq("x_0 = chi(t^2) / chi_affine(t^2)", &x0, &RatFunc::new(chi, chi_affine)?);
    Ok(report)
}
