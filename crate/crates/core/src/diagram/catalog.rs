use crate::error::{Error, Result};
use crate::exact::IntMatrix;

use super::fold::fold;
use super::{Diagram, DiagramId, Family, FoldRole, FoldSource};

pub const AFFINE_LABEL: &str = "alpha0";

/// Edge `(i, j, K_ij, K_ji)` in finite indexing.
type Edge = (usize, usize, i64, i64);

/// Attachment of the affine vertex: `(j, K_0j, K_j0)` in finite indexing.
type Attach = (usize, i64, i64);

struct Shape {
    labels: Vec<String>,
    edges: Vec<Edge>,
    attach: Vec<Attach>,
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn chain(n: usize) -> Vec<Edge> {
    (1..n).map(|i| (i - 1, i, -1, -1)).collect()
}

fn finite_shape(family: Family, n: usize) -> Result<Shape> {
    let shape = match family {
        Family::A => Shape {
            labels: numbered("a", n),
            edges: chain(n),
            attach: if n == 1 {
                vec![(0, -2, -2)]
            } else {
                vec![(0, -1, -1), (n - 1, -1, -1)]
            },
        },
        Family::D => {
            let mut edges = chain(n - 1);
            edges.push((n - 3, n - 1, -1, -1));
            Shape {
                labels: numbered("d", n),
                edges,
                attach: vec![(1, -1, -1)],
            }
        }
        Family::E6 => Shape {
            labels: ["x0", "x1", "x2", "y1", "y2", "y3"].map(String::from).to_vec(),
            edges: vec![
                (0, 3, -1, -1),
                (0, 4, -1, -1),
                (0, 5, -1, -1),
                (1, 3, -1, -1),
                (2, 4, -1, -1),
            ],
            attach: vec![(5, -1, -1)],
        },
        Family::E7 | Family::E8 => {
            let mut edges: Vec<Edge> = vec![(0, 2, -1, -1), (1, 3, -1, -1)];
            edges.extend((2..n - 1).map(|i| (i, i + 1, -1, -1)));
            let attach = if family == Family::E7 { 0 } else { n - 1 };
            Shape {
                labels: numbered("e", n),
                edges,
                attach: vec![(attach, -1, -1)],
            }
        }
        Family::B => {
            let mut edges = chain(n - 1);
            edges.push((n - 2, n - 1, -1, -2));
            Shape {
                labels: numbered("b", n),
                edges,
                attach: if n == 2 {
                    vec![(0, -2, -1)]
                } else {
                    vec![(1, -1, -1)]
                },
            }
        }
        Family::C => {
            let mut edges = chain(n - 1);
            edges.push((n - 2, n - 1, -2, -1));
            Shape {
                labels: numbered("c", n),
                edges,
                attach: vec![(0, -1, -2)],
            }
        }
        Family::F4 => Shape {
            labels: numbered("f", 4),
            edges: vec![(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)],
            attach: vec![(0, -1, -1)],
        },
        Family::G2 => Shape {
            labels: numbered("g", 2),
            edges: vec![(0, 1, -1, -3)],
            attach: vec![(0, -1, -1)],
        },
        other => {
            return Err(Error::Domain(format!(
                "{other:?} has no finite form in the catalog"
            )))
        }
    };
    Ok(shape)
}

fn cartan_from_edges(n: usize, edges: &[Edge]) -> IntMatrix {
    let mut k = IntMatrix::scalar(n, 2);
    for &(i, j, kij, kji) in edges {
        k[(i, j)] = kij.into();
        k[(j, i)] = kji.into();
    }
    k
}

fn build_direct(id: DiagramId) -> Result<Diagram> {
    let shape = finite_shape(id.family, id.rank)?;
    if !id.extended {
        let cartan = cartan_from_edges(id.rank, &shape.edges);
        let u0 = shape.attach.iter().map(|a| a.0).collect();
        return Ok(Diagram::assemble(id, shape.labels, cartan, Some(u0), None));
    }
    let mut edges: Vec<Edge> = shape
        .edges
        .iter()
        .map(|&(i, j, a, b)| (i + 1, j + 1, a, b))
        .collect();
    edges.extend(shape.attach.iter().map(|&(j, a, b)| (0, j + 1, a, b)));
    let mut labels = vec![AFFINE_LABEL.to_string()];
    labels.extend(shape.labels);
    let cartan = cartan_from_edges(id.rank + 1, &edges);
    let u0 = shape.attach.iter().map(|a| a.0 + 1).collect();
    Ok(Diagram::assemble(id, labels, cartan, Some(u0), None))
}

/// Orbit partitions of the automorphisms used for the folded families,
/// together with the source diagram they act on.
pub(crate) fn fold_recipe(id: DiagramId) -> Option<(DiagramId, Vec<Vec<usize>>)> {
    let n = id.rank;
    let ext = |family, rank| DiagramId { family, rank, extended: true };
    let recipe = match id.family {
        Family::G2 => (ext(Family::D, 4), vec![vec![0], vec![2], vec![1, 3, 4]]),
        Family::G2Dual => (ext(Family::E6, 6), vec![vec![0, 2, 3], vec![6, 4, 5], vec![1]]),
        Family::F4 => (
            ext(Family::E6, 6),
            vec![vec![0], vec![6], vec![1], vec![4, 5], vec![2, 3]],
        ),
        Family::F4Dual => (
            ext(Family::E7, 7),
            vec![vec![0, 7], vec![1, 6], vec![3, 5], vec![4], vec![2]],
        ),
        Family::CD => {
            let mut orbits: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
            orbits.push(vec![n, n + 1]);
            (ext(Family::D, n + 1), orbits)
        }
        Family::DD => {
            let mut orbits = vec![vec![0, 2 * n], vec![1, 2 * n - 1]];
            orbits.extend((2..n).map(|k| vec![k, 2 * n - k]));
            orbits.push(vec![n]);
            (ext(Family::D, 2 * n), orbits)
        }
        Family::C => {
            let mut orbits = vec![vec![0]];
            orbits.extend((1..n).map(|k| vec![k, 2 * n - k]));
            orbits.push(vec![n]);
            (ext(Family::A, 2 * n - 1), orbits)
        }
        _ => return None,
    };
    Some(recipe)
}

/// Canonical diagram for a catalog id.
///
/// Extended-only families are produced by folding their source diagram;
/// every other entry is written down directly. The folded forms of `G2~`,
/// `F4~` and `Cn~` agree with the direct ones and are recorded as their
/// provenance.
pub fn build(id: DiagramId) -> Result<Diagram> {
    let id = DiagramId::new(id.family, id.rank, id.extended)?;
    if id.family.extended_only() {
        let (source_id, orbits) = fold_recipe(id).expect("extended-only families have recipes");
        let source = build(source_id)?;
        let folded = fold(&source, &orbits)?;
        return Ok(folded.primary(id));
    }
    let mut d = build_direct(id)?;
    if id.extended {
        if let Some((source, orbits)) = fold_recipe(id) {
            d.fold = Some(FoldSource {
                source,
                orbits,
                role: FoldRole::Primary,
            });
        }
    }
    Ok(d)
}

/// Finite diagrams iterated by catalog-wide checks, in catalog order.
pub fn finite_catalog() -> Vec<DiagramId> {
    let mut ids = Vec::new();
    let push = |ids: &mut Vec<DiagramId>, f, r| ids.push(DiagramId { family: f, rank: r, extended: false });
    for r in 1..=9 {
        push(&mut ids, Family::A, r);
    }
    for r in 4..=9 {
        push(&mut ids, Family::D, r);
    }
    push(&mut ids, Family::E6, 6);
    push(&mut ids, Family::E7, 7);
    push(&mut ids, Family::E8, 8);
    for r in 2..=6 {
        push(&mut ids, Family::B, r);
    }
    for r in 2..=6 {
        push(&mut ids, Family::C, r);
    }
    push(&mut ids, Family::F4, 4);
    push(&mut ids, Family::G2, 2);
    ids
}

/// Extended diagrams iterated by catalog-wide checks, in catalog order.
pub fn extended_catalog() -> Vec<DiagramId> {
    let mut ids: Vec<DiagramId> = finite_catalog().into_iter().map(DiagramId::to_extended).collect();
    let ext = |family, rank| DiagramId { family, rank, extended: true };
    ids.push(ext(Family::G2Dual, 2));
    ids.push(ext(Family::F4Dual, 4));
    ids.extend((2..=6).map(|r| ext(Family::DD, r)));
    ids.extend((3..=6).map(|r| ext(Family::CD, r)));
    ids
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn id(s: &str) -> DiagramId {
        s.parse().unwrap()
    }

    #[test]
    fn a2_cartan() {
        let d = build(id("A2")).unwrap();
        assert_eq!(d.cartan.to_i64_rows(), vec![vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn e6_finite_layout() {
        let d = build(id("E6")).unwrap();
        assert_eq!(d.labels, ["x0", "x1", "x2", "y1", "y2", "y3"]);
        let b = d.bipartition.unwrap();
        assert_eq!(b.x, vec![0, 1, 2]);
        assert_eq!(b.y, vec![3, 4, 5]);
        assert_eq!(d.u0, Some(vec![5]));
    }

    #[test]
    fn extended_a_has_two_attachments() {
        let d = build(id("A4~")).unwrap();
        assert_eq!(d.u0, Some(vec![1, 4]));
        assert!(d.bipartition.is_none(), "odd cycle");
        let d = build(id("A3~")).unwrap();
        assert!(d.bipartition.is_some());
        let a1 = build(id("A1~")).unwrap();
        assert_eq!(a1.cartan.to_i64_rows(), vec![vec![2, -2], vec![-2, 2]]);
    }

    #[test]
    fn every_catalog_entry_is_valid() {
        for i in finite_catalog() {
            let d = build(i).unwrap();
            d.validate().unwrap();
            assert!(d.cartan.det().unwrap().is_positive(), "{i}");
        }
        for i in extended_catalog() {
            let d = build(i).unwrap();
            d.validate().unwrap();
            assert_eq!(d.cartan.det().unwrap(), BigInt::from(0), "{i}");
            assert_eq!(d.affine_index, Some(0));
            assert!(d.labels[0].starts_with(AFFINE_LABEL), "{i}");
        }
    }

    #[test]
    fn direct_entries_match_their_folds() {
        for s in ["G2~", "F4~", "C2~", "C3~", "C5~"] {
            let d = build(id(s)).unwrap();
            let rec = d.fold.clone().unwrap();
            let folded = fold(&build(rec.source).unwrap(), &rec.orbits).unwrap();
            assert_eq!(folded.cartan, d.cartan, "{s}");
        }
    }

    #[test]
    fn extended_b_coincides_with_cd() {
        for n in 3..=6 {
            let b = build(DiagramId { family: Family::B, rank: n, extended: true }).unwrap();
            let cd = build(DiagramId { family: Family::CD, rank: n, extended: true }).unwrap();
            assert_eq!(b.cartan, cd.cartan, "B{n}");
        }
    }

    #[test]
    fn dual_families_are_transposes() {
        let pairs = [("G2~", "G2dual~"), ("F4~", "F4dual~"), ("CD3~", "DD3~"), ("CD5~", "DD5~")];
        for (p, q) in pairs {
            let a = build(id(p)).unwrap();
            let b = build(id(q)).unwrap();
            assert_eq!(a.cartan.transpose(), b.cartan, "{p} vs {q}");
        }
    }

    #[test]
    fn rejects_bad_ranks() {
        assert!(build(DiagramId { family: Family::D, rank: 3, extended: false }).is_err());
        assert!(build(DiagramId { family: Family::CD, rank: 3, extended: false }).is_err());
    }
}
