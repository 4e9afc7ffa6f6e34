use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::IntMatrix;

use super::{Diagram, DiagramId, FoldRole, FoldSource};

/// Result of folding a diagram along an admissible orbit partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Folded {
    pub source: DiagramId,
    pub orbits: Vec<Vec<usize>>,
    pub labels: Vec<String>,
    /// Folded Cartan matrix; its transpose is the dual.
    pub cartan: IntMatrix,
}

impl Folded {
    fn diagram(&self, id: DiagramId, cartan: IntMatrix, role: FoldRole) -> Diagram {
        let record = FoldSource {
            source: self.source,
            orbits: self.orbits.clone(),
            role,
        };
        let u0 = self.source.extended.then(|| {
            (1..cartan.rows())
                .filter(|&j| !cartan[(0, j)].is_zero())
                .collect()
        });
        let id = DiagramId { extended: self.source.extended, ..id };
        Diagram::assemble(id, self.labels.clone(), cartan, u0, Some(record))
    }

    /// Diagram carrying the folded matrix `K`.
    pub fn primary(&self, id: DiagramId) -> Diagram {
        self.diagram(id, self.cartan.clone(), FoldRole::Primary)
    }

    /// Diagram carrying the transpose `K^t`.
    pub fn dual(&self, id: DiagramId) -> Diagram {
        self.diagram(id, self.cartan.transpose(), FoldRole::Dual)
    }

    pub fn into_diagrams(self, primary_id: DiagramId, dual_id: DiagramId) -> (Diagram, Diagram) {
        (self.primary(primary_id), self.dual(dual_id))
    }
}

/// Folds `d` along `orbits`: `k_AB = sum_{i in A} K_ij` for any `j` in `B`.
///
/// The partition must cover every vertex once, contain no edge inside an
/// orbit, and give sums independent of the representative `j`. For an
/// extended diagram the first orbit must contain the affine vertex.
pub fn fold(d: &Diagram, orbits: &[Vec<usize>]) -> Result<Folded> {
    let n = d.len();
    let mut seen = vec![false; n];
    for orbit in orbits {
        if orbit.is_empty() {
            return Err(Error::Folding("empty orbit".into()));
        }
        for &i in orbit {
            if i >= n || seen[i] {
                return Err(Error::Folding(format!("vertex {i} is out of range or repeated")));
            }
            seen[i] = true;
        }
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(Error::Folding(format!("vertex {missing} is in no orbit")));
    }
    if let Some(a) = d.affine_index {
        if !orbits[0].contains(&a) {
            return Err(Error::Folding("the first orbit must contain the affine vertex".into()));
        }
    }
    let k = &d.cartan;
    for orbit in orbits {
        for &i in orbit {
            if orbit.iter().any(|&j| j != i && !k[(i, j)].is_zero()) {
                return Err(Error::Folding(format!("edge inside orbit {orbit:?}")));
            }
        }
    }
    let m = orbits.len();
    let mut folded = IntMatrix::zeros(m, m);
    for (a, oa) in orbits.iter().enumerate() {
        for (b, ob) in orbits.iter().enumerate() {
            let sum = |j: usize| -> BigInt { oa.iter().map(|&i| k[(i, j)].clone()).sum() };
            let first = sum(ob[0]);
            if ob[1..].iter().any(|&j| sum(j) != first) {
                return Err(Error::Folding(format!(
                    "sum over {oa:?} depends on the representative in {ob:?}"
                )));
            }
            folded[(a, b)] = first;
        }
    }
    let labels = orbits
        .iter()
        .map(|o| o.iter().map(|&i| d.labels[i].as_str()).collect::<Vec<_>>().join("+"))
        .collect();
    Ok(Folded {
        source: d.id,
        orbits: orbits.to_vec(),
        labels,
        cartan: folded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build;

    fn id(s: &str) -> DiagramId {
        s.parse().unwrap()
    }

    #[test]
    fn finite_a3_end_swap() {
        let a3 = build(id("A3")).unwrap();
        let f = fold(&a3, &[vec![0, 2], vec![1]]).unwrap();
        assert_eq!(f.cartan.to_i64_rows(), vec![vec![2, -2], vec![-1, 2]]);
        assert_eq!(f.labels, ["a1+a3", "a2"]);
        assert_eq!(f.primary(id("C2")).cartan, build(id("C2")).unwrap().cartan);
    }

    #[test]
    fn d4_triality_gives_g2_pair() {
        let d4 = build(id("D4~")).unwrap();
        let f = fold(&d4, &[vec![0], vec![2], vec![1, 3, 4]]).unwrap();
        let (p, q) = f.into_diagrams(id("G2~"), id("G2dual~"));
        assert_eq!(p.cartan, build(id("G2~")).unwrap().cartan);
        assert_eq!(q.cartan, build(id("G2dual~")).unwrap().cartan);
        assert_eq!(p.u0, Some(vec![1]));
        assert!(!p.is_symmetric());
    }

    #[test]
    fn edge_inside_orbit_is_rejected() {
        let a3 = build(id("A3")).unwrap();
        let err = fold(&a3, &[vec![0, 1], vec![2]]).unwrap_err();
        assert!(matches!(err, Error::Folding(_)));
    }

    #[test]
    fn representative_dependence_is_rejected() {
        // a1 and a4 are both leaves of A4, but a2 sees a1 and not a4.
        let a4 = build(id("A4")).unwrap();
        let err = fold(&a4, &[vec![0, 3], vec![1], vec![2]]).unwrap_err();
        assert!(matches!(err, Error::Folding(_)));
    }

    #[test]
    fn bad_partitions_are_rejected() {
        let a3 = build(id("A3")).unwrap();
        assert!(fold(&a3, &[vec![0, 2]]).is_err());
        assert!(fold(&a3, &[vec![0, 2], vec![1, 2]]).is_err());
        let d4 = build(id("D4~")).unwrap();
        assert!(fold(&d4, &[vec![2], vec![0], vec![1, 3, 4]]).is_err());
    }
}
