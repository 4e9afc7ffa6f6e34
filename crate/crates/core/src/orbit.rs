//! Orbit of the highest root under alternating products of the bicolored
//! involutions, and the assembling vectors built from it.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coxeter::{bicolored_reflections, coxeter_number};
use crate::diagram::{build, highest_root, kostant_numbers, Diagram, Family};
use crate::error::{Error, Result};
use crate::exact::{IntPoly, RatFunc, RootVector};
use crate::kostant::generating_function;
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTable {
    /// The finite diagram.
    pub diagram: Diagram,
    /// Labels of the extended diagram, affine vertex first.
    pub extended_labels: Vec<String>,
    pub h: usize,
    /// `tau^(n) beta` for `n = 0..h-1`, in finite coordinates.
    pub tau_beta: Vec<RootVector>,
    /// `z_0 ..= z_h` in extended coordinates.
    pub z: Vec<RootVector>,
}

fn require_ade_finite(d: &Diagram) -> Result<()> {
    if d.is_extended() || !d.id.is_ade() {
        return Err(Error::UnsupportedFamily(format!(
            "the orbit construction needs a finite ADE diagram, got {}",
            d.id
        )));
    }
    Ok(())
}

/// `tau^(2k) beta = C^k beta` and `tau^(2k+1) beta = w1 C^k beta` for
/// `n = 0..h-1`, with `w2 beta = beta`.
pub fn tau_orbit(d: &Diagram) -> Result<Vec<RootVector>> {
    require_ade_finite(d)?;
    let h = coxeter_number(d)?;
    if h % 2 == 1 {
        return Err(Error::ExcludedDiagram(format!(
            "{} has odd Coxeter number {h}",
            d.id
        )));
    }
    let pair = bicolored_reflections(d)?;
    let c = &pair.w2 * &pair.w1;
    let mut power = highest_root(d)?;
    let mut out = Vec::with_capacity(h);
    for n in 0..h {
        if n % 2 == 0 {
            out.push(power.clone());
        } else {
            out.push(power.apply(&pair.w1));
            power = power.apply(&c);
        }
    }
    Ok(out)
}

/// Branch vertex of D and E diagrams, middle vertex of odd-rank A.
pub fn branch_vertex(d: &Diagram) -> Result<usize> {
    match d.id.family {
        Family::A if d.len() % 2 == 1 => Ok(d.len() / 2),
        Family::D | Family::E6 | Family::E7 | Family::E8 => (0..d.len())
            .find(|&i| d.neighbors(i).len() == 3)
            .ok_or_else(|| Error::CatalogCorruption(format!("{} has no branch vertex", d.id))),
        _ => Err(Error::ExcludedDiagram(format!("{} has no branch point", d.id))),
    }
}

/// Full orbit table with assembling vectors `z_n = tau^(n-1) beta - tau^(n) beta`
/// and `z_0 = z_h = alpha0`, after checking its structural identities.
pub fn assembling_vectors(d: &Diagram) -> Result<OrbitTable> {
    let tau_beta = tau_orbit(d)?;
    let h = tau_beta.len();
    let r = d.len();
    let ext = build(d.id.to_extended())?;
    let alpha0 = RootVector::unit(r + 1, 0);
    let finite_z: Vec<RootVector> = (1..h).map(|n| &tau_beta[n - 1] - &tau_beta[n]).collect();

    let mut report = Report::new("assembling-vectors", d.id.to_string());
    let g = h / 2;
    let star = branch_vertex(d)?;
    report.check_eq(
        format!("z_{g} = 2 alpha_{}", d.labels[star]),
        &finite_z[g - 1],
        &RootVector::unit(r, star).scale(2),
    );
    for k in 1..g {
        report.check_eq(format!("z_{} = z_{}", g + k, g - k), &finite_z[g + k - 1], &finite_z[g - k - 1]);
    }
    let total = finite_z.iter().fold(RootVector::zero(r), |acc, z| &acc + z);
    report.check_eq("sum z_n = beta - tau^(h-1) beta", &total, &(&tau_beta[0] - &tau_beta[h - 1]));
    for (n, z) in finite_z.iter().enumerate() {
        report.check(format!("z_{} >= 0", n + 1), z.all_nonnegative(), z.to_string());
    }

    let mut z = Vec::with_capacity(h + 1);
    z.push(alpha0.clone());
    z.extend(finite_z.iter().map(|v| v.prepend(BigInt::zero())));
    z.push(alpha0);
    let sum = z.iter().fold(RootVector::zero(r + 1), |acc, v| &acc + v);
    report.check("sum z_j > 0", sum.all_positive(), sum.to_string());
    report.into_result()?;

    Ok(OrbitTable {
        diagram: d.clone(),
        extended_labels: ext.labels,
        h,
        tau_beta,
        z,
    })
}

impl OrbitTable {
    /// `z(t)_i = sum_j (z_j)_i t^j` for every extended vertex `i`.
    pub fn z_polynomials(&self) -> Vec<IntPoly> {
        (0..self.extended_labels.len())
            .map(|i| IntPoly::new(self.z.iter().map(|v| v[i].clone()).collect()))
            .collect()
    }

    /// Grid of `tau^(n) beta` rows over the finite labels.
    pub fn render_tau(&self) -> String {
        let rows: Vec<(String, &RootVector)> = self
            .tau_beta
            .iter()
            .enumerate()
            .map(|(n, v)| (if n == 0 { "beta".into() } else { format!("tau{n}") }, v))
            .collect();
        render_grid(&self.diagram.labels, &rows)
    }

    /// Grid of `z_n` rows over the extended labels.
    pub fn render_z(&self) -> String {
        let rows: Vec<(String, &RootVector)> = self
            .z
            .iter()
            .enumerate()
            .map(|(n, v)| (format!("z{n}"), v))
            .collect();
        render_grid(&self.extended_labels, &rows)
    }

    /// One `label = z(t)` line per finite vertex.
    pub fn render_zpoly(&self) -> String {
        self.z_polynomials()
            .iter()
            .zip(&self.extended_labels)
            .skip(1)
            .map(|(p, l)| format!("{l} = {}\n", p.render('t')))
            .collect()
    }
}

/// Right-aligned grid with a header of column labels.
pub fn render_grid(labels: &[String], rows: &[(String, &RootVector)]) -> String {
    let mut width = labels.iter().map(String::len).max().unwrap_or(1);
    for (_, v) in rows {
        width = width.max(v.coords().iter().map(|c| c.to_string().len()).max().unwrap_or(1));
    }
    let head = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let mut out = format!("{:head$}", "");
    for l in labels {
        out.push_str(&format!(" {l:>width$}"));
    }
    out.push('\n');
    for (name, v) in rows {
        out.push_str(&format!("{name:head$}"));
        for c in v.coords() {
            out.push_str(&format!(" {:>width$}", c.to_string()));
        }
        out.push('\n');
    }
    out
}

/// z(t) polynomials of a finite ADE diagram, indexed by extended vertices.
pub fn z_polynomials(d: &Diagram) -> Result<Vec<IntPoly>> {
    Ok(assembling_vectors(d)?.z_polynomials())
}

/// Checks `[P_G(t)]_i = z(t)_i / ((1 - t^a)(1 - t^b))` for every extended
/// vertex, the left side coming from Cramer's rule.
pub fn verify_kostant_form(d: &Diagram) -> Result<Report> {
    let table = assembling_vectors(d)?;
    let k = kostant_numbers(d.id)?;
    let den = &IntPoly::one_minus_t_pow(k.a as usize) * &IntPoly::one_minus_t_pow(k.b as usize);
    let gf = generating_function(&build(d.id.to_extended())?)?;
    let mut report = Report::new("kostant-form", d.id.to_string());
    for (i, zi) in table.z_polynomials().into_iter().enumerate() {
        let rhs = RatFunc::new(zi, den.clone())?;
        report.check_eq(format!("component {}", table.extended_labels[i]), gf.component(i), &rhs);
    }
    Ok(report)
}
