//! Bicolored Coxeter transformations and their characteristic polynomials.

use crate::diagram::{build, highest_root, Diagram, DiagramId, Family};
use crate::error::{Error, Result};
use crate::exact::{charpoly, IntMatrix, IntPoly, RatFunc};

/// The two involutions of a bicolored Coxeter element `C = w2 w1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicoloredPair {
    pub w1: IntMatrix,
    pub w2: IntMatrix,
    /// Vertices reflected by `w1`.
    pub part_w1: Vec<usize>,
    /// Vertices reflected by `w2`.
    pub part_w2: Vec<usize>,
}

/// Simple reflection at vertex `i`: only coordinate `i` changes,
/// `x_i -> x_i - sum_j K_ij x_j`.
pub fn reflection(d: &Diagram, i: usize) -> IntMatrix {
    let n = d.len();
    let mut s = IntMatrix::identity(n);
    for j in 0..n {
        s[(i, j)] = &s[(i, j)] - &d.cartan[(i, j)];
    }
    s
}

fn product_over(d: &Diagram, part: &[usize]) -> IntMatrix {
    part.iter()
        .fold(IntMatrix::identity(d.len()), |acc, &i| &acc * &reflection(d, i))
}

pub fn bicolored_reflections(d: &Diagram) -> Result<BicoloredPair> {
    let Some(bip) = &d.bipartition else {
        return Err(Error::ExcludedDiagram(format!(
            "{} has no bipartition (odd cycle)",
            d.id
        )));
    };
    let mut pair = BicoloredPair {
        w1: product_over(d, &bip.y),
        w2: product_over(d, &bip.x),
        part_w1: bip.y.clone(),
        part_w2: bip.x.clone(),
    };
    if !d.is_extended() && d.id.is_ade() {
        let beta = highest_root(d)?;
        if beta.apply(&pair.w2) != beta {
            std::mem::swap(&mut pair.w1, &mut pair.w2);
            std::mem::swap(&mut pair.part_w1, &mut pair.part_w2);
        }
    }
    Ok(pair)
}

/// `C = w2 w1`; the affine Coxeter transformation for extended diagrams.
pub fn coxeter_transform(d: &Diagram) -> Result<IntMatrix> {
    let p = bicolored_reflections(d)?;
    Ok(&p.w2 * &p.w1)
}

/// Order of the Coxeter transformation of a finite diagram.
pub fn coxeter_number(d: &Diagram) -> Result<usize> {
    if d.is_extended() {
        return Err(Error::Domain(format!(
            "{} is extended, its Coxeter transformation has infinite order",
            d.id
        )));
    }
    let c = coxeter_transform(d)?;
    let id = IntMatrix::identity(d.len());
    let bound = (10 * d.len() * d.len()).max(2);
    let mut power = c.clone();
    for m in 1..=bound {
        if power == id {
            return Ok(m);
        }
        power = &power * &c;
    }
    Err(Error::CatalogCorruption(format!(
        "{}: C^m != I for all m <= {bound}",
        d.id
    )))
}

/// Characteristic polynomial of the bicolored Coxeter transformation.
pub fn coxeter_charpoly(d: &Diagram) -> Result<IntPoly> {
    charpoly(&coxeter_transform(d)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPolys {
    pub chi: IntPoly,
    pub chi_affine: IntPoly,
}

/// `(L^(n-k+1) - 1)(L^k - 1)`, the affine Coxeter polynomial of the cycle
/// `A_n~` in conjugacy class `k`.
pub fn affine_a_charpoly(n: usize, k: usize) -> Result<IntPoly> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::Domain(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(&IntPoly::t_pow_minus_one(n - k + 1) * &IntPoly::t_pow_minus_one(k))
}

/// Finite and affine Coxeter polynomials of a finite catalog id. The
/// affine partner of `Bn` is the fork-ended extension and that of `Cn` the
/// doubly-arrowed one; family `A` takes its affine polynomial from the
/// conjugacy class `k`.
pub fn char_polys(id: DiagramId, k: Option<usize>) -> Result<CharPolys> {
    if id.extended {
        return Err(Error::Domain(format!("{id} is extended, pass the finite id")));
    }
    let chi = coxeter_charpoly(&build(id)?)?;
    let chi_affine = if id.family == Family::A {
        let k = k.ok_or(Error::MissingParameter("k"))?;
        affine_a_charpoly(id.rank, k)?
    } else {
        coxeter_charpoly(&build(id.to_extended())?)?
    };
    Ok(CharPolys { chi, chi_affine })
}

/// The reduced quotient `chi / chi_affine`.
pub fn ebeling_quotient(id: DiagramId, k: Option<usize>) -> Result<RatFunc> {
    let p = char_polys(id, k)?;
    RatFunc::new(p.chi, p.chi_affine)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RootVector;
    use num_bigint::BigInt;

    fn id(s: &str) -> DiagramId {
        s.parse().unwrap()
    }

    fn d(s: &str) -> Diagram {
        build(id(s)).unwrap()
    }

    fn pm1(k: usize) -> IntPoly {
        IntPoly::t_pow_minus_one(k)
    }

    fn pp1(k: usize) -> IntPoly {
        IntPoly::t_pow_plus_one(k)
    }

    #[test]
    fn e6_reflection_pair() {
        let p = bicolored_reflections(&d("E6")).unwrap();
        // Rows in (x0, x1, x2, y1, y2, y3) order.
        let w1 = IntMatrix::from_i64(&[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[1, 1, 0, -1, 0, 0],
            &[1, 0, 1, 0, -1, 0],
            &[1, 0, 0, 0, 0, -1],
        ])
        .unwrap();
        let w2 = IntMatrix::from_i64(&[
            &[-1, 0, 0, 1, 1, 1],
            &[0, -1, 0, 1, 0, 0],
            &[0, 0, -1, 0, 1, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(p.w1, w1);
        assert_eq!(p.w2, w2);
        let beta = RootVector::from_i64(&[3, 1, 1, 2, 2, 2]);
        assert_eq!(beta.apply(&p.w2), beta);
    }

    #[test]
    fn e6_block_form() {
        // With D = -A/2 for the x-by-y adjacency block A, C = [[4DD^t - I, 2D], [-2D^t, -I]].
        let a = IntMatrix::from_i64(&[&[1, 1, 1], &[1, 0, 0], &[0, 1, 0]]).unwrap();
        let aat = &a * &a.transpose();
        let c = coxeter_transform(&d("E6")).unwrap();
        for r in 0..3 {
            for s in 0..3 {
                let delta = BigInt::from(i64::from(r == s));
                assert_eq!(c[(r, s)], &aat[(r, s)] - &delta);
                assert_eq!(c[(r, s + 3)], -&a[(r, s)]);
                assert_eq!(c[(r + 3, s)], a[(s, r)].clone());
                assert_eq!(c[(r + 3, s + 3)], -delta);
            }
        }
    }

    #[test]
    fn a1_is_minus_one() {
        let p = bicolored_reflections(&d("A1")).unwrap();
        assert_eq!(p.w1.to_i64_rows(), vec![vec![-1]]);
        assert_eq!(p.w2, IntMatrix::identity(1));
        assert_eq!(coxeter_number(&d("A1")).unwrap(), 2);
    }

    #[test]
    fn coxeter_numbers() {
        for (s, h) in [("E6", 12), ("E7", 18), ("E8", 30), ("F4", 12), ("G2", 6), ("D5", 8), ("A4", 5), ("B3", 6), ("C4", 8)] {
            assert_eq!(coxeter_number(&d(s)).unwrap(), h, "{s}");
        }
        assert!(coxeter_number(&d("E6~")).is_err());
    }

    #[test]
    fn affine_nil_root_is_fixed() {
        let e6 = d("E6~");
        let delta = crate::diagram::nil_root(&e6).unwrap();
        assert_eq!(delta.apply(&coxeter_transform(&e6).unwrap()), delta);
    }

    #[test]
    fn odd_cycle_is_excluded() {
        assert!(matches!(
            coxeter_transform(&d("A4~")),
            Err(Error::ExcludedDiagram(_))
        ));
    }

    #[test]
    fn table_rows() {
        let e7 = char_polys(id("E7"), None).unwrap();
        assert_eq!(&e7.chi * &pp1(3), &IntPoly::from_i64(&[1, 1]) * &pp1(9));
        assert_eq!(e7.chi_affine, &(&pm1(4) * &pm1(3)) * &IntPoly::from_i64(&[1, 1]));

        let d4 = char_polys(id("D4"), None).unwrap();
        assert_eq!(d4.chi, &IntPoly::from_i64(&[1, 1]) * &pp1(3));
        assert_eq!(d4.chi_affine, &pm1(1).pow(2) * &IntPoly::from_i64(&[1, 1]).pow(3));

        let b3 = char_polys(id("B3"), None).unwrap();
        assert_eq!(b3.chi, pp1(3));
        assert_eq!(b3.chi_affine, &pm1(2) * &pm1(2));

        let g2 = char_polys(id("G2"), None).unwrap();
        assert_eq!(g2.chi_affine, &pm1(1).pow(2) * &IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn family_a_needs_k() {
        assert_eq!(
            char_polys(id("A3"), None).unwrap_err(),
            Error::MissingParameter("k")
        );
        assert!(affine_a_charpoly(3, 0).is_err());
        assert!(affine_a_charpoly(3, 4).is_err());
        assert_eq!(affine_a_charpoly(3, 2).unwrap(), pm1(2).pow(2));
        assert_eq!(affine_a_charpoly(1, 1).unwrap(), pm1(1).pow(2));
    }

    #[test]
    fn bicolored_cycle_matches_closed_form() {
        for m in 1..=5 {
            let n = 2 * m - 1;
            let cycle = build(DiagramId::extended(Family::A, n).unwrap()).unwrap();
            assert_eq!(
                coxeter_charpoly(&cycle).unwrap(),
                affine_a_charpoly(n, m).unwrap(),
                "A{n}~"
            );
        }
    }

    #[test]
    fn quotients() {
        let e8 = ebeling_quotient(id("E8"), None).unwrap();
        assert_eq!(e8, RatFunc::new(pp1(15), &pm1(10) * &pm1(6)).unwrap());
        let g2 = ebeling_quotient(id("G2"), None).unwrap();
        assert_eq!(g2, ebeling_quotient(id("D4"), None).unwrap());
        let a5 = ebeling_quotient(id("A5"), Some(3)).unwrap();
        assert_eq!(a5, RatFunc::new(pp1(3), &pm1(3) * &pm1(1)).unwrap());
    }
}
