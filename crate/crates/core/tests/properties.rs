use mckay_core::coxeter::{bicolored_reflections, coxeter_transform};
use mckay_core::diagram::{build, extended_catalog, finite_catalog, highest_root};
use mckay_core::exact::{charpoly, series_expand_integral};
use mckay_core::kostant::generating_function;
use mckay_core::{BpgId, Diagram, DiagramId, DiagramRecord, IntMatrix, IntPoly, RatFunc};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    proptest::collection::vec(-9i64..=9, 0..max_len).prop_map(|c| IntPoly::from_i64(&c))
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn all_diagrams() -> Vec<Diagram> {
    finite_catalog()
        .into_iter()
        .chain(extended_catalog())
        .map(|i| build(i).unwrap())
        .collect()
}

proptest! {
    #[test]
    fn poly_render_parse_round_trip(p in poly(12)) {
        prop_assert_eq!(IntPoly::parse(&p.render('t'), 't').unwrap(), p.clone());
        prop_assert_eq!(IntPoly::parse(&p.render('L'), 'L').unwrap(), p);
    }

    #[test]
    fn ratfunc_is_canonical(n in poly(6), d in nonzero_poly(5), k in nonzero_poly(4)) {
        prop_assume!(!d.coeff(0).is_zero());
        let plain = RatFunc::new(n.clone(), d.clone()).unwrap();
        let scaled = RatFunc::new(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(&plain, &scaled);
        prop_assert_eq!(plain.render('t'), scaled.render('t'));
    }

    #[test]
    fn series_times_denominator_is_numerator(n in poly(6), tail in poly(4), c0 in prop_oneof![Just(1i64), Just(-1i64)]) {
        // Unit constant term keeps the expansion integral.
        let d = &IntPoly::from(c0) + &tail.shift(1);
        let f = RatFunc::new(n.clone(), d.clone()).unwrap();
        let terms = 24;
        let s = IntPoly::new(series_expand_integral(&f, terms).unwrap());
        let product = &s * f.den();
        for k in 0..terms {
            prop_assert_eq!(product.coeff(k), f.num().coeff(k));
        }
    }

    #[test]
    fn charpoly_is_monic_with_det_constant(v in proptest::collection::vec(-5i64..=5, 16)) {
        let m = IntMatrix::from_fn(4, 4, |r, c| BigInt::from(v[4 * r + c]));
        let chi = charpoly(&m).unwrap();
        prop_assert!(chi.is_monic());
        prop_assert_eq!(chi.degree(), Some(4));
        prop_assert_eq!(chi.coeff(0), m.det().unwrap());
    }

    #[test]
    fn diagram_id_round_trip(k in 0usize..200) {
        let ids: Vec<DiagramId> = finite_catalog().into_iter().chain(extended_catalog()).collect();
        let id = ids[k % ids.len()];
        prop_assert_eq!(id.to_string().parse::<DiagramId>().unwrap(), id);
    }

    #[test]
    fn bpg_id_round_trip(n in 2usize..40, kind in 0u8..5) {
        let id = match kind {
            0 => BpgId::Cyclic(n),
            1 => BpgId::BinaryDihedral(n),
            2 => BpgId::Tetrahedral,
            3 => BpgId::Octahedral,
            _ => BpgId::Icosahedral,
        };
        prop_assert_eq!(id.to_string().parse::<BpgId>().unwrap(), id);
    }
}

#[test]
fn diagram_records_round_trip_through_json() {
    for d in all_diagrams() {
        let rec = d.to_record();
        let json = serde_json::to_string(&rec).unwrap();
        let back: DiagramRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
        let rebuilt = Diagram::try_from(back).unwrap();
        assert_eq!(rebuilt.to_record(), rec, "{}", d.id);
    }
}

#[test]
fn corrupted_record_is_rejected() {
    let mut rec = build("E6~".parse().unwrap()).unwrap().to_record();
    rec.cartan[1][2] = 1;
    assert!(Diagram::try_from(rec).is_err());
    let mut rec = build("D5".parse().unwrap()).unwrap().to_record();
    rec.bipartition = None;
    assert!(Diagram::try_from(rec).is_err());
}

#[test]
fn coxeter_transform_has_determinant_sign_of_rank() {
    for d in all_diagrams() {
        if let Ok(c) = coxeter_transform(&d) {
            let expected = if d.len() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            assert_eq!(c.det().unwrap(), expected, "{}", d.id);
            let pair = bicolored_reflections(&d).unwrap();
            assert_eq!(pair.w1.det().unwrap() * pair.w2.det().unwrap(), expected);
        }
    }
}

#[test]
fn highest_root_doubles_away_from_the_extension() {
    // 2 beta_i equals the sum over neighbours wherever the extension does
    // not attach; at attachment vertices it exceeds it by the edge weight.
    for id in finite_catalog().into_iter().filter(DiagramId::is_ade) {
        let d = build(id).unwrap();
        let beta = highest_root(&d).unwrap();
        let ext = build(id.to_extended()).unwrap();
        for i in 0..d.len() {
            let nbr: BigInt = d.neighbors(i).iter().map(|&j| beta[j].clone()).sum();
            let extra = -&ext.cartan[(i + 1, 0)];
            assert_eq!(&beta[i] * 2, nbr + extra, "{id} vertex {}", d.labels[i]);
        }
    }
}

#[test]
fn symmetrizer_symmetrizes_and_is_trivial_for_simply_laced() {
    for d in all_diagrams() {
        let s = d.symmetrizer().unwrap_or_else(|| panic!("{} not symmetrizable", d.id));
        let dk = IntMatrix::from_fn(d.len(), d.len(), |r, c| &s[r] * &d.cartan[(r, c)]);
        assert_eq!(dk, dk.transpose(), "{}", d.id);
        if d.is_symmetric() {
            assert!(s.iter().all(One::is_one), "{}", d.id);
        }
    }
}

#[test]
fn series_coefficients_are_nonnegative_integers() {
    for id in extended_catalog() {
        let gf = generating_function(&build(id).unwrap()).unwrap();
        for f in &gf.components {
            let c = series_expand_integral(f, 30).unwrap();
            assert!(c.iter().all(|x| *x >= BigInt::zero()), "{id}: {f}");
        }
    }
}
