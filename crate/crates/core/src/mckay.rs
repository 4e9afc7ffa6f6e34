//! Adjacency and semi-affine adjacency matrices, and the recurrences behind
//! McKay's observation on assembling vectors.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coxeter::bicolored_reflections;
use crate::diagram::{build, Diagram};
use crate::error::{Error, Result};
use crate::exact::{IntMatrix, IntPoly, RatFunc, RootVector};
use crate::kostant::{generating_function, mckay_operator};
use crate::orbit::assembling_vectors;
use crate::report::Report;

/// Adjacency matrix `2I - K` of a finite simply-laced diagram.
pub fn adjacency(d: &Diagram) -> Result<IntMatrix> {
    if d.is_extended() || !d.id.is_ade() {
        return Err(Error::UnsupportedFamily(format!(
            "adjacency is defined here for finite ADE diagrams, got {}",
            d.id
        )));
    }
    let a = &IntMatrix::scalar(d.len(), 2) - &d.cartan;
    let binary = a.to_rows().iter().flatten().all(|x| x.is_zero() || x.is_one());
    if !binary || a != a.transpose() {
        return Err(Error::CatalogCorruption(format!("{}: adjacency is not a 0/1 symmetric matrix", d.id)));
    }
    Ok(a)
}

/// Semi-affine adjacency matrix over the extended vertices.
///
/// The finite block is the adjacency matrix. Column `alpha0` carries the
/// multiplicity of the edge `u0 - alpha0` in the rows of the attachment
/// vertices, so that it maps `alpha0` to `z_1`. Row `alpha0` is zero.
pub fn semi_affine(d: &Diagram) -> Result<IntMatrix> {
    let a = adjacency(d)?;
    let ext = build(d.id.to_extended())?;
    let b = mckay_operator(&ext)?;
    let u0 = ext.u0.clone().unwrap_or_default();
    let n = d.len() + 1;
    Ok(IntMatrix::from_fn(n, n, |r, c| match (r, c) {
        (0, _) => BigInt::zero(),
        (r, 0) if u0.contains(&r) => b[(r, 0)].clone(),
        (_, 0) => BigInt::zero(),
        (r, c) => a[(r - 1, c - 1)].clone(),
    }))
}

/// Recurrences `A z_i = z_(i-1) + z_(i+1)` on assembling vectors in finite
/// and extended coordinates, and the two block identities behind them.
pub fn verify_z_recurrence(d: &Diagram) -> Result<Report> {
    let table = assembling_vectors(d)?;
    let h = table.h;
    let a = adjacency(d)?;
    let ag = semi_affine(d)?;
    let r = d.len();
    let mut report = Report::new("z-recurrence", d.id.to_string());

    let finite: Vec<RootVector> = (0..=h)
        .map(|n| {
            if n == 0 || n == h {
                RootVector::zero(r)
            } else {
                table.z[n].drop_first()
            }
        })
        .collect();
    for i in 1..h {
        report.check_eq(
            format!("A z_{i} = z_{} + z_{}", i - 1, i + 1),
            &finite[i].apply(&a),
            &(&finite[i - 1] + &finite[i + 1]),
        );
    }

    let z = &table.z;
    if h >= 4 {
        for i in 2..h - 1 {
            report.check_eq(
                format!("A^g z_{i} = z_{} + z_{}", i - 1, i + 1),
                &z[i].apply(&ag),
                &(&z[i - 1] + &z[i + 1]),
            );
        }
        report.check_eq("A^g z_1 = z_2", &z[1].apply(&ag), &z[2]);
        report.check_eq(format!("A^g z_{} = z_{}", h - 1, h - 2), &z[h - 1].apply(&ag), &z[h - 2]);
    }
    report.check_eq("A^g z_0 = z_1", &z[0].apply(&ag), &z[1]);
    report.check_eq(format!("A^g z_{h} = z_{}", h - 1), &z[h].apply(&ag), &z[h - 1]);

    let p = bicolored_reflections(d)?;
    let id = IntMatrix::identity(r);
    let c = &p.w2 * &p.w1;
    let one_plus_c = &id + &c;
    report.check_eq(
        "A (1 - w2) w1 = (1 - w1)(1 + C)",
        &(&(&a * &(&id - &p.w2)) * &p.w1),
        &(&(&id - &p.w1) * &one_plus_c),
    );
    report.check_eq(
        "A (1 - w1) C = (1 - w2) w1 (1 + C)",
        &(&(&a * &(&id - &p.w1)) * &c),
        &(&(&(&id - &p.w2) * &p.w1) * &one_plus_c),
    );
    Ok(report)
}

/// McKay's observation: `t (A^g z(t))_i = (1 + t^2) z(t)_i` for every
/// finite vertex `i`, and the same relation on the generating function.
pub fn verify_observation(d: &Diagram) -> Result<Report> {
    let table = assembling_vectors(d)?;
    let zt = table.z_polynomials();
    let ag = semi_affine(d)?;
    let gf = generating_function(&build(d.id.to_extended())?)?;
    let t = IntPoly::var();
    let one_plus_t2 = IntPoly::from_i64(&[1, 0, 1]);
    let labels = &table.extended_labels;
    let mut report = Report::new("mckay-observation", d.id.to_string());
    for i in 1..zt.len() {
        let mut adj = IntPoly::zero();
        let mut adj_gf = RatFunc::from_poly(IntPoly::zero());
        for j in 0..zt.len() {
            let w = &ag[(i, j)];
            if !w.is_zero() {
                adj += zt[j].scale(w);
                adj_gf = &adj_gf + &gf.component(j).mul_poly(&IntPoly::constant(w.clone()));
            }
        }
        report.check_eq(
            format!("(t + 1/t) z(t)_{0} = sum of neighbours of {0}", labels[i]),
            &(&t * &adj),
            &(&one_plus_t2 * &zt[i]),
        );
        report.check_eq(
            format!("(t + 1/t) P_{0} = sum of neighbours of {0}", labels[i]),
            &adj_gf.mul_poly(&t),
            &gf.component(i).mul_poly(&one_plus_t2),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Diagram {
        build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_adjacencies() {
        assert_eq!(adjacency(&d("A2")).unwrap().to_i64_rows(), vec![vec![0, 1], vec![1, 0]]);
        let d4 = adjacency(&d("D4")).unwrap();
        let degrees: Vec<i64> = d4.to_i64_rows().iter().map(|r| r.iter().sum()).collect();
        assert_eq!(degrees, vec![1, 3, 1, 1]);
        assert!(adjacency(&d("B3")).is_err());
    }

    #[test]
    fn semi_affine_orientation() {
        let a3 = semi_affine(&d("A3")).unwrap();
        assert_eq!(
            a3.to_i64_rows(),
            vec![
                vec![0, 0, 0, 0],
                vec![1, 0, 1, 0],
                vec![0, 1, 0, 1],
                vec![1, 0, 1, 0],
            ]
        );
        let e6 = semi_affine(&d("E6")).unwrap();
        let y3 = 6;
        assert!(e6.row(0).iter().all(Zero::is_zero));
        assert_eq!(e6[(y3, 0)], BigInt::one());
        let col0: i64 = (0..7).map(|r| if e6[(r, 0)].is_one() { 1 } else { 0 }).sum();
        assert_eq!(col0, 1);
    }

    #[test]
    fn e6_recurrence_and_observation() {
        let e6 = d("E6");
        let r = verify_z_recurrence(&e6).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_observation(&e6).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn e6_observation_cells() {
        let e6 = d("E6");
        let z = crate::orbit::z_polynomials(&e6).unwrap();
        // x0 at 1, x1 at 2, y1..y3 at 4..6.
        let sum = &(&z[4] + &z[5]) + &z[6];
        assert_eq!(sum, IntPoly::from_i64(&[0, 1, 0, 2, 0, 3, 0, 3, 0, 2, 0, 1]));
        assert_eq!(&IntPoly::from_i64(&[1, 0, 1]) * &z[2], &IntPoly::var() * &z[4]);
    }

    #[test]
    fn a1_and_a3() {
        for s in ["A1", "A3", "D4"] {
            assert!(verify_z_recurrence(&d(s)).unwrap().passed(), "{s}");
            assert!(verify_observation(&d(s)).unwrap().passed(), "{s}");
        }
    }
}
