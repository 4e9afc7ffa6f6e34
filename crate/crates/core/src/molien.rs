//! Binary polyhedral groups as explicit SU(2) matrices and the Molien series
//! of their invariant rings, used as a floating-point oracle for component 0
//! of the generating function.
//!
//! Floating point stays inside this module: every value that leaves it is a
//! rounded integer with its rounding deviation checked.

use std::collections::{HashSet, VecDeque};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::diagram::{build, DiagramId, Family};
use crate::error::{Error, Result};
use crate::exact::{series_expand_integral, IntMatrix, RootVector};
use crate::kostant::{generating_function, mckay_operator, multiplicities};
use crate::report::Report;

const DEDUP_GRID: f64 = 1e-6;
const MATRIX_TOL: f64 = 1e-9;
const ROUNDING_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BpgId {
    Cyclic(usize),
    BinaryDihedral(usize),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl BpgId {
    pub fn validate(self) -> Result<Self> {
        match self {
            BpgId::Cyclic(0) => Err(Error::Domain("cyclic group order must be at least 1".into())),
            BpgId::BinaryDihedral(n) if n < 2 => {
                Err(Error::Domain("binary dihedral index must be at least 2".into()))
            }
            ok => Ok(ok),
        }
    }

    pub fn order(self) -> usize {
        match self {
            BpgId::Cyclic(n) => n,
            BpgId::BinaryDihedral(n) => 4 * n,
            BpgId::Tetrahedral => 24,
            BpgId::Octahedral => 48,
            BpgId::Icosahedral => 120,
        }
    }

    /// Finite diagram paired with the group by the McKay correspondence.
    pub fn paired_diagram(self) -> Result<DiagramId> {
        match self.validate()? {
            BpgId::Cyclic(1) => Err(Error::Domain("the trivial group has no paired diagram".into())),
            BpgId::Cyclic(n) => DiagramId::finite(Family::A, n - 1),
            BpgId::BinaryDihedral(n) => DiagramId::finite(Family::D, n + 2),
            BpgId::Tetrahedral => DiagramId::finite(Family::E6, 6),
            BpgId::Octahedral => DiagramId::finite(Family::E7, 7),
            BpgId::Icosahedral => DiagramId::finite(Family::E8, 8),
        }
    }
}

impl fmt::Display for BpgId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BpgId::Cyclic(n) => write!(f, "cyclic:{n}"),
            BpgId::BinaryDihedral(n) => write!(f, "dihedral:{n}"),
            BpgId::Tetrahedral => f.write_str("tetrahedral"),
            BpgId::Octahedral => f.write_str("octahedral"),
            BpgId::Icosahedral => f.write_str("icosahedral"),
        }
    }
}

impl FromStr for BpgId {
    type Err = Error;

    /// Accepts `cyclic:5`, `Z5`, `dihedral:3`, `BD3`, `tetrahedral`, `T`,
    /// `octahedral`, `O`, `icosahedral`, `I`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown binary polyhedral group {s:?}"));
        let num = |d: &str| d.parse::<usize>().map_err(|_| bad());
        let lower = s.to_ascii_lowercase();
        let id = match lower.as_str() {
            "tetrahedral" | "t" => BpgId::Tetrahedral,
            "octahedral" | "o" => BpgId::Octahedral,
            "icosahedral" | "i" => BpgId::Icosahedral,
            _ => {
                if let Some(d) = lower.strip_prefix("cyclic:") {
                    BpgId::Cyclic(num(d)?)
                } else if let Some(d) = lower.strip_prefix("dihedral:") {
                    BpgId::BinaryDihedral(num(d)?)
                } else if let Some(d) = lower.strip_prefix("bd") {
                    BpgId::BinaryDihedral(num(d)?)
                } else if let Some(d) = lower.strip_prefix('z') {
                    BpgId::Cyclic(num(d)?)
                } else {
                    return Err(bad());
                }
            }
        };
        id.validate()
    }
}

/// Element of SU(2), `[[a, b], [-conj(b), conj(a)]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2 {
    pub a: Complex64,
    pub b: Complex64,
}

impl Su2 {
    /// Unit quaternion `w + x i + y j + z k`.
    pub fn quaternion(w: f64, x: f64, y: f64, z: f64) -> Self {
        Su2 {
            a: Complex64::new(w, x),
            b: Complex64::new(y, z),
        }
    }

    pub fn identity() -> Self {
        Self::quaternion(1.0, 0.0, 0.0, 0.0)
    }

    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        [[self.a, self.b], [-self.b.conj(), self.a.conj()]]
    }

    pub fn trace(&self) -> f64 {
        2.0 * self.a.re
    }

    pub fn det(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    /// Product renormalized back onto the unit sphere.
    pub fn mul(&self, rhs: &Su2) -> Su2 {
        let a = self.a * rhs.a - self.b * rhs.b.conj();
        let b = self.a * rhs.b + self.b * rhs.a.conj();
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        Su2 { a: a / norm, b: b / norm }
    }

    pub fn inverse(&self) -> Su2 {
        Su2 { a: self.a.conj(), b: -self.b }
    }

    fn key(&self) -> [i64; 4] {
        [self.a.re, self.a.im, self.b.re, self.b.im].map(|x| (x / DEDUP_GRID).round() as i64)
    }

    fn close_to(&self, other: &Su2) -> bool {
        (self.a - other.a).norm() < MATRIX_TOL.sqrt() && (self.b - other.b).norm() < MATRIX_TOL.sqrt()
    }
}

fn generators(id: BpgId) -> Vec<Su2> {
    let h = 0.5;
    match id {
        BpgId::Cyclic(n) => {
            let t = 2.0 * PI / n as f64;
            vec![Su2::quaternion(t.cos(), t.sin(), 0.0, 0.0)]
        }
        BpgId::BinaryDihedral(n) => {
            let t = PI / n as f64;
            vec![
                Su2::quaternion(t.cos(), t.sin(), 0.0, 0.0),
                Su2::quaternion(0.0, 0.0, -1.0, 0.0),
            ]
        }
        BpgId::Tetrahedral => vec![Su2::quaternion(0.0, 1.0, 0.0, 0.0), Su2::quaternion(h, h, h, h)],
        BpgId::Octahedral => {
            let r = std::f64::consts::FRAC_1_SQRT_2;
            vec![
                Su2::quaternion(0.0, 1.0, 0.0, 0.0),
                Su2::quaternion(h, h, h, h),
                Su2::quaternion(r, r, 0.0, 0.0),
            ]
        }
        BpgId::Icosahedral => {
            let phi = (1.0 + 5f64.sqrt()) / 2.0;
            vec![
                Su2::quaternion(h, h, h, h),
                Su2::quaternion(phi / 2.0, 1.0 / (2.0 * phi), h, 0.0),
            ]
        }
    }
}

#[derive(Debug, Clone)]
pub struct BpgGroup {
    pub id: BpgId,
    pub elements: Vec<Su2>,
    pub traces: Vec<f64>,
}

impl BpgGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    fn find(&self, g: &Su2) -> Option<usize> {
        self.elements.iter().position(|e| e.close_to(g))
    }

    /// Unitarity, unimodularity, closure under products and inverses.
    pub fn check_axioms(&self) -> Result<()> {
        for g in &self.elements {
            let m = g.matrix();
            // Rows of a matrix in this form are orthonormal exactly when det = 1.
            let inner = m[0][0] * m[1][0].conj() + m[0][1] * m[1][1].conj();
            if (g.det() - 1.0).abs() > MATRIX_TOL || inner.norm() > MATRIX_TOL {
                return Err(Error::NumericalDrift {
                    deviation: (g.det() - 1.0).abs().max(inner.norm()),
                });
            }
            if self.find(&g.inverse()).is_none() {
                return Err(Error::GeneratorSet { expected: self.order(), got: self.order() + 1 });
            }
        }
        for g in &self.elements {
            for h in &self.elements {
                if self.find(&g.mul(h)).is_none() {
                    return Err(Error::GeneratorSet { expected: self.order(), got: self.order() + 1 });
                }
            }
        }
        Ok(())
    }
}

/// Closure of the fixed generator set, deduplicated on a `1e-6` grid.
pub fn enumerate(id: BpgId) -> Result<BpgGroup> {
    let id = id.validate()?;
    let gens = generators(id);
    let expected = id.order();
    let mut seen: HashSet<[i64; 4]> = HashSet::new();
    let mut elements = vec![Su2::identity()];
    seen.insert(Su2::identity().key());
    let mut queue = VecDeque::from([Su2::identity()]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let p = g.mul(s);
            if seen.insert(p.key()) {
                elements.push(p);
                queue.push_back(p);
                if elements.len() > expected {
                    return Err(Error::GeneratorSet { expected, got: elements.len() });
                }
            }
        }
    }
    if elements.len() != expected {
        return Err(Error::GeneratorSet { expected, got: elements.len() });
    }
    let traces = elements.iter().map(Su2::trace).collect();
    Ok(BpgGroup { id, elements, traces })
}

/// Integer series with the largest distance from an integer seen before
/// rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct MolienSeries {
    pub coeffs: Vec<BigInt>,
    pub max_deviation: f64,
}

fn round_checked(x: f64, max_dev: &mut f64) -> Result<BigInt> {
    let r = x.round();
    let dev = (x - r).abs();
    *max_dev = max_dev.max(dev);
    if dev >= ROUNDING_TOL {
        return Err(Error::NumericalDrift { deviation: dev });
    }
    Ok(BigInt::from(r as i64))
}

/// `s_n(g)` for `n = 0..=order`: `s_0 = 1`, `s_1 = tr g`,
/// `s_n = tr g * s_(n-1) - s_(n-2)`.
fn sym_traces(tr: f64, order: usize) -> Vec<f64> {
    let mut s = Vec::with_capacity(order + 1);
    s.push(1.0);
    if order >= 1 {
        s.push(tr);
    }
    for n in 2..=order {
        s.push(tr * s[n - 1] - s[n - 2]);
    }
    s
}

/// Molien coefficients `m_0(n) = (1/|G|) sum_g s_n(g)` for `n = 0..=order`.
pub fn molien_coeffs(g: &BpgGroup, order: usize) -> Result<MolienSeries> {
    let mut sums = vec![0.0; order + 1];
    for &tr in &g.traces {
        for (acc, s) in sums.iter_mut().zip(sym_traces(tr, order)) {
            *acc += s;
        }
    }
    let mut max_deviation = 0.0;
    let coeffs = sums
        .iter()
        .map(|s| round_checked(s / g.order() as f64, &mut max_deviation))
        .collect::<Result<Vec<_>>>()?;
    Ok(MolienSeries { coeffs, max_deviation })
}

/// Molien coefficients against the series of component 0 of the paired
/// extended diagram, up to `t^order`.
pub fn crosscheck(id: BpgId, order: usize) -> Result<Report> {
    let diagram = id.paired_diagram()?;
    let group = enumerate(id)?;
    let molien = molien_coeffs(&group, order)?;
    let gf = generating_function(&build(diagram.to_extended())?)?;
    let series = series_expand_integral(gf.component(0), order + 1)?;
    let mut report = Report::new("molien", format!("{id} / {diagram}"));
    report.check_eq("|G|", &group.order(), &id.order());
    let bad: Vec<usize> = (0..=order).filter(|&n| molien.coeffs[n] != series[n]).collect();
    report.check(
        format!("Molien series = component 0 up to t^{order}"),
        bad.is_empty(),
        if bad.is_empty() {
            String::new()
        } else {
            format!("differs at n = {bad:?}")
        },
    );
    report.check(
        "rounding deviation < 1e-6",
        molien.max_deviation < ROUNDING_TOL,
        format!("{:e}", molien.max_deviation),
    );
    report.into_result()
}

/// Multiplicity of the character `g -> a(g)^k` of a cyclic group in
/// `Sym^n`, for every `k` and `n = 0..=order`.
fn cyclic_multiplicities(g: &BpgGroup, order: usize) -> Result<Vec<RootVector>> {
    let m = g.order();
    let mut max_dev = 0.0;
    let mut sums = vec![vec![Complex64::new(0.0, 0.0); m]; order + 1];
    for e in &g.elements {
        let s = sym_traces(e.trace(), order);
        let chis: Vec<Complex64> = (0..m).map(|k| e.a.powu(k as u32).conj()).collect();
        for (row, sn) in sums.iter_mut().zip(&s) {
            for (acc, chi) in row.iter_mut().zip(&chis) {
                *acc += chi * sn;
            }
        }
    }
    sums.into_iter()
        .map(|row| {
            let coords = row
                .into_iter()
                .map(|c| {
                    if c.im.abs() / m as f64 >= ROUNDING_TOL {
                        return Err(Error::NumericalDrift { deviation: c.im.abs() / m as f64 });
                    }
                    round_checked(c.re / m as f64, &mut max_dev)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(RootVector::new(coords))
        })
        .collect()
}

/// McKay operator of the paired extended diagram together with the
/// identities the group traces can confirm.
#[derive(Debug, Clone)]
pub struct NumericMcKay {
    pub matrix: IntMatrix,
    pub report: Report,
}

/// Checks the three-term relation at the affine vertex with `m_0` taken
/// from the Molien sum. For cyclic groups every character is available,
/// so the full vector relation is checked on group-sourced multiplicities.
pub fn mckay_matrix_numeric(id: BpgId, order: usize) -> Result<NumericMcKay> {
    let diagram = build(id.paired_diagram()?.to_extended())?;
    let b = mckay_operator(&diagram)?;
    let group = enumerate(id)?;
    let m0 = molien_coeffs(&group, order + 1)?.coeffs;
    let series = multiplicities(&diagram, order)?;
    let mut report = Report::new("mckay-numeric", format!("{id} / {}", diagram.id));

    let bad: Vec<usize> = (0..=order)
        .filter(|&n| {
            let lhs = series.vectors[n].apply(&b)[0].clone();
            let prev = if n == 0 { BigInt::from(0) } else { m0[n - 1].clone() };
            lhs != prev + &m0[n + 1]
        })
        .collect();
    report.check(
        "(B v_n)_0 = m_0(n-1) + m_0(n+1), m_0(-1) = 0",
        bad.is_empty(),
        format!("violated at {bad:?}"),
    );

    if let BpgId::Cyclic(n) = id {
        let two_regular = (0..n).all(|r| b.row(r).iter().sum::<BigInt>() == BigInt::from(2));
        report.check("B is the 2-regular circulant", two_regular, "");
        let v = cyclic_multiplicities(&group, order + 1)?;
        report.check(
            "character multiplicities = Cramer series",
            (0..=order).all(|k| v[k] == series.vectors[k]),
            "",
        );
        let bad: Vec<usize> = (0..=order)
            .filter(|&k| {
                let prev = if k == 0 { RootVector::zero(n) } else { v[k - 1].clone() };
                v[k].apply(&b) != &prev + &v[k + 1]
            })
            .collect();
        report.check(
            "B v_n = v_(n-1) + v_(n+1) on character multiplicities",
            bad.is_empty(),
            format!("violated at {bad:?}"),
        );
    }
    Ok(NumericMcKay { matrix: b, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn parse_ids() {
        assert_eq!("Z5".parse::<BpgId>().unwrap(), BpgId::Cyclic(5));
        assert_eq!("cyclic:5".parse::<BpgId>().unwrap(), BpgId::Cyclic(5));
        assert_eq!("BD3".parse::<BpgId>().unwrap(), BpgId::BinaryDihedral(3));
        assert_eq!("I".parse::<BpgId>().unwrap(), BpgId::Icosahedral);
        assert!("dihedral:1".parse::<BpgId>().is_err());
        assert!("Q8".parse::<BpgId>().is_err());
        for id in [BpgId::Cyclic(4), BpgId::BinaryDihedral(2), BpgId::Octahedral] {
            assert_eq!(id.to_string().parse::<BpgId>().unwrap(), id);
        }
    }

    #[test]
    fn group_orders() {
        for id in [
            BpgId::Cyclic(5),
            BpgId::BinaryDihedral(3),
            BpgId::Tetrahedral,
            BpgId::Octahedral,
            BpgId::Icosahedral,
        ] {
            let g = enumerate(id).unwrap();
            assert_eq!(g.order(), id.order(), "{id}");
            g.check_axioms().unwrap();
        }
    }

    #[test]
    fn cyclic_traces() {
        let g = enumerate(BpgId::Cyclic(5)).unwrap();
        let mut got: Vec<f64> = g.traces.clone();
        let mut want: Vec<f64> = (0..5).map(|k| 2.0 * (2.0 * PI * k as f64 / 5.0).cos()).collect();
        got.sort_by(f64::total_cmp);
        want.sort_by(f64::total_cmp);
        for (a, b) in got.iter().zip(&want) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn molien_small_cases() {
        let c2 = enumerate(BpgId::Cyclic(2)).unwrap();
        assert_eq!(ints(&molien_coeffs(&c2, 4).unwrap().coeffs), vec![1, 0, 3, 0, 5]);
        let t = enumerate(BpgId::Tetrahedral).unwrap();
        assert_eq!(
            ints(&molien_coeffs(&t, 12).unwrap().coeffs),
            vec![1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2]
        );
        assert_eq!(ints(&molien_coeffs(&t, 0).unwrap().coeffs), vec![1]);
    }

    #[test]
    fn crosschecks() {
        crosscheck(BpgId::Icosahedral, 60).unwrap();
        crosscheck(BpgId::Cyclic(3), 30).unwrap();
        crosscheck(BpgId::BinaryDihedral(2), 40).unwrap();
        assert!(crosscheck(BpgId::Cyclic(1), 5).is_err());
    }

    #[test]
    fn numeric_mckay() {
        for id in [BpgId::Cyclic(2), BpgId::Cyclic(5), BpgId::Tetrahedral] {
            let r = mckay_matrix_numeric(id, 20).unwrap();
            assert!(r.report.passed(), "{}", r.report);
        }
    }
}
