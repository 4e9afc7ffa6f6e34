//! Finite, extended and folded Dynkin diagrams.
//!
//! Extended diagrams always carry the affine vertex at index 0, followed by
//! the vertices of the finite diagram in catalog order.

mod catalog;
mod fold;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use crate::exact::RootVector;
use crate::exact::{nullspace_primitive, IntMatrix};
use crate::error::{Error, Result};

pub use catalog::{build, extended_catalog, finite_catalog};
pub use fold::{fold, Folded};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E6,
    E7,
    E8,
    B,
    C,
    F4,
    G2,
    G2Dual,
    F4Dual,
    DD,
    CD,
}

impl Family {
    /// Rank for the families that fix it.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 | Family::F4Dual => Some(4),
            Family::G2 | Family::G2Dual => Some(2),
            _ => None,
        }
    }

    pub fn extended_only(self) -> bool {
        matches!(self, Family::G2Dual | Family::F4Dual | Family::DD | Family::CD)
    }

    pub fn is_ade(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E6 | Family::E7 | Family::E8)
    }

    fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::B => "B",
            Family::C => "C",
            Family::F4 => "F4",
            Family::G2 => "G2",
            Family::G2Dual => "G2dual",
            Family::F4Dual => "F4dual",
            Family::DD => "DD",
            Family::CD => "CD",
        }
    }
}

/// Catalog key of a diagram: family, rank of the finite part, extension flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramId {
    pub family: Family,
    pub rank: usize,
    pub extended: bool,
}

impl DiagramId {
    pub fn new(family: Family, rank: usize, extended: bool) -> Result<Self> {
        let min = match family {
            Family::A => 1,
            Family::D => 4,
            Family::B | Family::C | Family::DD => 2,
            Family::CD => 3,
            _ => 0,
        };
        if let Some(fixed) = family.fixed_rank() {
            if rank != fixed {
                return Err(Error::Domain(format!(
                    "{} has rank {fixed}, not {rank}",
                    family.name()
                )));
            }
        } else if rank < min {
            return Err(Error::Domain(format!(
                "{}{rank} is invalid, rank must be at least {min}",
                family.name()
            )));
        }
        if family.extended_only() && !extended {
            return Err(Error::Domain(format!(
                "{} exists only as an extended diagram",
                family.name()
            )));
        }
        Ok(DiagramId {
            family,
            rank,
            extended,
        })
    }

    pub fn finite(family: Family, rank: usize) -> Result<Self> {
        Self::new(family, rank, false)
    }

    pub fn extended(family: Family, rank: usize) -> Result<Self> {
        Self::new(family, rank, true)
    }

    /// Same family and rank with the extension flag switched.
    pub fn to_extended(self) -> Self {
        DiagramId {
            extended: true,
            ..self
        }
    }

    pub fn to_finite(self) -> Result<Self> {
        Self::new(self.family, self.rank, false)
    }

    pub fn is_ade(&self) -> bool {
        self.family.is_ade()
    }
}

impl fmt::Display for DiagramId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        if self.family.fixed_rank().is_none() {
            write!(f, "{}", self.rank)?;
        }
        if self.extended {
            f.write_str("~")?;
        }
        Ok(())
    }
}

impl FromStr for DiagramId {
    type Err = Error;

    /// Accepts `A3`, `E6`, `B4~`, `G2dual~`, `DD3~`; a trailing `~` marks
    /// the extended diagram. Extended-only families may omit the `~`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown diagram id {s:?}"));
        let (body, extended) = match s.strip_suffix('~') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let fixed = [
            ("E6", Family::E6),
            ("E7", Family::E7),
            ("E8", Family::E8),
            ("F4dual", Family::F4Dual),
            ("G2dual", Family::G2Dual),
            ("F4", Family::F4),
            ("G2", Family::G2),
        ];
        for (name, family) in fixed {
            if body.eq_ignore_ascii_case(name) {
                let ext = extended || family.extended_only();
                return DiagramId::new(family, family.fixed_rank().unwrap(), ext);
            }
        }
        let upper = body.to_ascii_uppercase();
        let (family, digits) = if let Some(d) = upper.strip_prefix("DD") {
            (Family::DD, d)
        } else if let Some(d) = upper.strip_prefix("CD") {
            (Family::CD, d)
        } else {
            let mut chars = upper.chars();
            let family = match chars.next().ok_or_else(bad)? {
                'A' => Family::A,
                'B' => Family::B,
                'C' => Family::C,
                'D' => Family::D,
                _ => return Err(bad()),
            };
            (family, &upper[1..])
        };
        let rank: usize = digits.parse().map_err(|_| bad())?;
        DiagramId::new(family, rank, extended || family.extended_only())
    }
}

/// Proper 2-coloring of the vertices; `w1` reflects `y`, `w2` reflects `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoldRole {
    Primary,
    Dual,
}

/// Where a folded catalog entry comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldSource {
    pub source: DiagramId,
    pub orbits: Vec<Vec<usize>>,
    pub role: FoldRole,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Diagram {
    pub id: DiagramId,
    pub labels: Vec<String>,
    pub cartan: IntMatrix,
    pub bipartition: Option<Bipartition>,
    pub affine_index: Option<usize>,
    /// Vertices joined to the affine vertex. For finite diagrams these are
    /// the vertices the extension attaches to, in finite indexing.
    pub u0: Option<Vec<usize>>,
    pub fold: Option<FoldSource>,
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram {} {:?}\n{}", self.id, self.labels, self.cartan)
    }
}

impl Diagram {
    /// Assembles a diagram from its Cartan matrix, deriving the bipartition.
    ///
    /// The coloring puts the affine vertex in `x`, or for finite diagrams
    /// the first `u0` vertex in `y`. Odd cycles get no bipartition.
    pub(crate) fn assemble(
        id: DiagramId,
        labels: Vec<String>,
        cartan: IntMatrix,
        u0: Option<Vec<usize>>,
        fold: Option<FoldSource>,
    ) -> Diagram {
        let affine_index = id.extended.then_some(0);
        let (start, start_in_y) = match (affine_index, u0.as_ref().and_then(|u| u.first())) {
            (Some(a), _) => (a, false),
            (None, Some(&u)) => (u, true),
            (None, None) => (0, false),
        };
        let bipartition = two_coloring(&cartan, start, start_in_y);
        Diagram {
            id,
            labels,
            cartan,
            bipartition,
            affine_index,
            u0,
            fold,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_extended(&self) -> bool {
        self.affine_index.is_some()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Vertices `j != i` with a nonzero Cartan entry.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| j != i && !self.cartan[(i, j)].is_zero())
            .collect()
    }

    /// Removes the affine vertex. The result keeps the id of its parent and
    /// has no affine index.
    pub fn finite_part(&self) -> Result<Diagram> {
        let Some(a) = self.affine_index else {
            return Err(Error::Domain(format!("{} is already finite", self.id)));
        };
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != a).collect();
        let renumber = |i: usize| keep.iter().position(|&k| k == i);
        let bipartition = self.bipartition.as_ref().map(|b| Bipartition {
            x: b.x.iter().filter_map(|&i| renumber(i)).collect(),
            y: b.y.iter().filter_map(|&i| renumber(i)).collect(),
        });
        Ok(Diagram {
            id: self.id,
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            cartan: self.cartan.submatrix(&keep),
            bipartition,
            affine_index: None,
            u0: self
                .u0
                .as_ref()
                .map(|u| u.iter().filter_map(|&i| renumber(i)).collect()),
            fold: None,
        })
    }

    /// Positive integer diagonal `d` with `diag(d) * K` symmetric, if any.
    pub fn symmetrizer(&self) -> Option<Vec<BigInt>> {
        let n = self.len();
        if n == 0 {
            return Some(Vec::new());
        }
        let k = &self.cartan;
        // d_i K_ij = d_j K_ji, propagated along edges as fractions num/den.
        let mut ratio: Vec<Option<(BigInt, BigInt)>> = vec![None; n];
        ratio[0] = Some((BigInt::one(), BigInt::one()));
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            let (ni, di) = ratio[i].clone().unwrap();
            for j in self.neighbors(i) {
                if k[(j, i)].is_zero() {
                    return None;
                }
                let (nj, dj) = (&ni * &k[(i, j)], &di * &k[(j, i)]);
                match &ratio[j] {
                    None => {
                        ratio[j] = Some((nj, dj));
                        queue.push_back(j);
                    }
                    Some((a, b)) if a * &dj != &nj * b => return None,
                    Some(_) => {}
                }
            }
        }
        let ratio: Vec<(BigInt, BigInt)> = ratio.into_iter().collect::<Option<_>>()?;
        let lcm = ratio.iter().fold(BigInt::one(), |acc, (_, d)| acc.lcm(d));
        let mut d: Vec<BigInt> = ratio.iter().map(|(a, b)| a * &lcm / b).collect();
        let g = d.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for x in d.iter_mut() {
            *x = &*x / &g;
        }
        if d.iter().all(Signed::is_negative) {
            d.iter_mut().for_each(|x| *x = -&*x);
        }
        d.iter().all(Signed::is_positive).then_some(d)
    }

    pub fn is_symmetric(&self) -> bool {
        self.cartan == self.cartan.transpose()
    }

    /// Checks the generalized Cartan matrix axioms on this diagram.
    pub fn validate(&self) -> Result<()> {
        let k = &self.cartan;
        let n = self.len();
        let two = BigInt::from(2);
        for i in 0..n {
            if k[(i, i)] != two {
                return Err(Error::CatalogCorruption(format!("{}: K[{i}][{i}] != 2", self.id)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if k[(i, j)].is_positive() || k[(i, j)].is_zero() != k[(j, i)].is_zero() {
                    return Err(Error::CatalogCorruption(format!(
                        "{}: bad off-diagonal pair ({i},{j})",
                        self.id
                    )));
                }
            }
        }
        if self.symmetrizer().is_none() {
            return Err(Error::CatalogCorruption(format!("{}: not symmetrizable", self.id)));
        }
        if let Some(b) = &self.bipartition {
            for part in [&b.x, &b.y] {
                for &i in part {
                    if part.iter().any(|&j| j != i && !k[(i, j)].is_zero()) {
                        return Err(Error::CatalogCorruption(format!(
                            "{}: bipartition is not a proper coloring",
                            self.id
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_record(&self) -> DiagramRecord {
        DiagramRecord {
            id: self.id.to_string(),
            vertices: self.labels.clone(),
            cartan: self.cartan.to_i64_rows(),
            bipartition: self.bipartition.clone(),
            affine_index: self.affine_index,
            u0: self.u0.clone(),
        }
    }
}

impl TryFrom<DiagramRecord> for Diagram {
    type Error = Error;

    /// Rebuilds a diagram from its JSON form. The derived bipartition and
    /// affine index must agree with the record. Fold provenance is not
    /// carried by records.
    fn try_from(rec: DiagramRecord) -> Result<Diagram> {
        let id: DiagramId = rec.id.parse()?;
        let n = rec.vertices.len();
        if rec.cartan.len() != n || rec.cartan.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("{}: Cartan matrix is not {n} x {n}", rec.id)));
        }
        let rows: Vec<&[i64]> = rec.cartan.iter().map(Vec::as_slice).collect();
        let d = Diagram::assemble(id, rec.vertices, IntMatrix::from_i64(&rows)?, rec.u0, None);
        if d.bipartition != rec.bipartition || d.affine_index != rec.affine_index {
            return Err(Error::Parse(format!("{}: record disagrees with its Cartan matrix", rec.id)));
        }
        d.validate()?;
        Ok(d)
    }
}

fn two_coloring(k: &IntMatrix, start: usize, start_in_y: bool) -> Option<Bipartition> {
    let n = k.rows();
    if n == 0 {
        return Some(Bipartition { x: vec![], y: vec![] });
    }
    let mut color: Vec<Option<bool>> = vec![None; n];
    color[start] = Some(start_in_y);
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        let ci = color[i].unwrap();
        for j in (0..n).filter(|&j| j != i && !k[(i, j)].is_zero()) {
            match color[j] {
                None => {
                    color[j] = Some(!ci);
                    queue.push_back(j);
                }
                Some(cj) if cj == ci => return None,
                Some(_) => {}
            }
        }
    }
    let color: Vec<bool> = color.into_iter().map(|c| c.unwrap_or(false)).collect();
    Some(Bipartition {
        x: (0..n).filter(|&i| !color[i]).collect(),
        y: (0..n).filter(|&i| color[i]).collect(),
    })
}

/// JSON form of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramRecord {
    pub id: String,
    pub vertices: Vec<String>,
    pub cartan: Vec<Vec<i64>>,
    pub bipartition: Option<Bipartition>,
    pub affine_index: Option<usize>,
    pub u0: Option<Vec<usize>>,
}

/// Primitive positive generator of `ker K` for an extended diagram.
pub fn nil_root(d: &Diagram) -> Result<RootVector> {
    if !d.is_extended() {
        return Err(Error::Domain(format!("{} is not extended", d.id)));
    }
    let delta = nullspace_primitive(&d.cartan)?;
    if !delta[0].is_one() {
        return Err(Error::CatalogCorruption(format!(
            "{}: affine coordinate of the nil-root is {}",
            d.id, delta[0]
        )));
    }
    Ok(delta)
}

/// Highest root of a finite ADE diagram: the nil-root of the extension with
/// the affine coordinate dropped.
pub fn highest_root(d: &Diagram) -> Result<RootVector> {
    if d.is_extended() {
        return Err(Error::Domain(format!("{} is extended", d.id)));
    }
    if !d.id.is_ade() {
        return Err(Error::UnsupportedFamily(format!(
            "highest root via the nil-root is defined here for ADE only, not {}",
            d.id
        )));
    }
    let ext = build(d.id.to_extended())?;
    Ok(nil_root(&ext)?.drop_first())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KostantNumbers {
    pub a: u64,
    pub b: u64,
    pub h: u64,
    pub group_order: u64,
}

/// Table order of the binary polyhedral group paired with a finite ADE id.
pub fn group_order(id: DiagramId) -> Result<u64> {
    let r = id.rank as u64;
    match id.family {
        Family::A => Ok(r + 1),
        Family::D => Ok(4 * (r - 2)),
        Family::E6 => Ok(24),
        Family::E7 => Ok(48),
        Family::E8 => Ok(120),
        _ => Err(Error::UnsupportedFamily(format!("{id} has no paired binary polyhedral group"))),
    }
}

/// Kostant numbers `a = 2 max(delta)`, `b = h + 2 - a`, checked against
/// `a b = 2 |G|`.
pub fn kostant_numbers(id: DiagramId) -> Result<KostantNumbers> {
    if id.extended || !id.is_ade() {
        return Err(Error::UnsupportedFamily(format!(
            "Kostant numbers need a finite ADE id, got {id}"
        )));
    }
    let finite = build(id)?;
    let delta = nil_root(&build(id.to_extended())?)?;
    let a = 2 * delta.max_coord().and_then(ToPrimitive::to_u64).unwrap_or(0);
    let h = crate::coxeter::coxeter_number(&finite)? as u64;
    let b = (h + 2)
        .checked_sub(a)
        .ok_or_else(|| Error::IdentityViolation(format!("{id}: h + 2 < a")))?;
    let group_order = group_order(id)?;
    if a * b != 2 * group_order {
        return Err(Error::IdentityViolation(format!(
            "{id}: a*b = {} but 2|G| = {}",
            a * b,
            2 * group_order
        )));
    }
    Ok(KostantNumbers {
        a,
        b,
        h,
        group_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_ids() {
        for s in ["A3", "A1~", "D5", "E6~", "E8", "B4~", "C2", "F4~", "G2", "G2dual~", "F4dual~", "DD3~", "CD4~"] {
            let id: DiagramId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert_eq!("g2dual".parse::<DiagramId>().unwrap().to_string(), "G2dual~");
    }

    #[test]
    fn rank_constraints() {
        assert!(DiagramId::finite(Family::A, 0).is_err());
        assert!(DiagramId::finite(Family::D, 3).is_err());
        assert!(DiagramId::finite(Family::B, 1).is_err());
        assert!(DiagramId::finite(Family::E6, 7).is_err());
        assert!(DiagramId::finite(Family::G2Dual, 2).is_err());
        assert!("X4".parse::<DiagramId>().is_err());
        assert!("A".parse::<DiagramId>().is_err());
    }

    #[test]
    fn kostant_numbers_table_rows() {
        let e6 = kostant_numbers(DiagramId::finite(Family::E6, 6).unwrap()).unwrap();
        assert_eq!((e6.a, e6.b, e6.h, e6.group_order), (6, 8, 12, 24));
        let e8 = kostant_numbers(DiagramId::finite(Family::E8, 8).unwrap()).unwrap();
        assert_eq!((e8.a, e8.b, e8.h, e8.group_order), (12, 20, 30, 120));
        let d5 = kostant_numbers(DiagramId::finite(Family::D, 5).unwrap()).unwrap();
        assert_eq!((d5.a, d5.b, d5.h, d5.group_order), (4, 6, 8, 12));
    }

    #[test]
    fn kostant_numbers_reject_multiply_laced() {
        let f4 = DiagramId::finite(Family::F4, 4).unwrap();
        assert!(matches!(kostant_numbers(f4), Err(Error::UnsupportedFamily(_))));
    }
}
