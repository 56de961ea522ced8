//! Golden data for the two bundled curves: invariants, coordinate changes,
//! point searches, residue-disc tables, and bad-fiber classification.

use curves::{
    apply_transform, classify_at_bad_prime, delta_s, is_split_multiplicative, lookup, map_point,
    parse_rational, ratio, rational, reduced_affine_points, residue_disc_partition,
    search_s_integral_points, CurveError, HeightBound, ModelTransform, RationalPoint,
    WeierstrassModel, DEFAULT_BOUND,
};
use proptest::prelude::*;

fn pt(x: &str, y: &str) -> RationalPoint {
    RationalPoint::affine(parse_rational(x).unwrap(), parse_rational(y).unwrap())
}

fn int_pts(coords: &[(i64, i64)]) -> Vec<RationalPoint> {
    coords
        .iter()
        .map(|&(x, y)| RationalPoint::from_integers(x, y))
        .collect()
}

#[test]
fn bundled_invariants() {
    let first = lookup("128a2").unwrap();
    let m = first.minimal();
    assert_eq!(
        m.coefficients().map(|a| a.clone()),
        [rational(0), rational(1), rational(0), rational(-9), rational(7)]
    );
    assert_eq!(m.discriminant(), rational(8192));
    assert_eq!(m.c4(), rational(448));
    assert_eq!(m.j_invariant(), ratio(448 * 448 * 448, 8192));
    assert_eq!(first.bad_primes(), vec![2]);

    let second = lookup("102a1").unwrap();
    let m = second.minimal();
    assert_eq!(
        m.coefficients().map(|a| a.clone()),
        [rational(1), rational(1), rational(0), rational(-2), rational(0)]
    );
    assert_eq!(m.b_invariants(), (rational(5), rational(-4), rational(0), rational(-4)));
    assert_eq!(m.discriminant(), rational(612));
    assert_eq!(m.c4(), rational(121));
    assert_eq!(m.c6(), rational(-845));
    assert_eq!(m.j_invariant(), ratio(1_771_561, 612));
    assert_eq!(second.bad_primes(), vec![2, 3, 17]);
}

#[test]
fn coordinate_changes_reach_the_short_models() {
    for (label, inverse) in [
        ("128a2", ModelTransform::new(ratio(1, 6), ratio(-1, 3), rational(0), rational(0)).unwrap()),
        (
            "102a1",
            ModelTransform::new(ratio(1, 6), ratio(-5, 12), ratio(-1, 2), ratio(5, 24)).unwrap(),
        ),
    ] {
        let curve = lookup(label).unwrap();
        assert_eq!(apply_transform(curve.minimal(), curve.to_short()), *curve.short());
        assert_eq!(curve.to_short().invert(), inverse);
        assert_eq!(apply_transform(curve.short(), &inverse), *curve.minimal());
        assert_eq!(
            curve.to_short().then(&inverse),
            ModelTransform::identity(),
            "{label}: the substitution and its inverse compose to the identity"
        );
    }
}

#[test]
fn search_recovers_the_first_point_table() {
    let curve = lookup("128a2").unwrap();
    let found = search_s_integral_points(curve.minimal(), &[2], DEFAULT_BOUND).unwrap();
    assert_eq!(found, curve.known_points(), "thirteen points, (x, y)-sorted");
}

#[test]
fn search_recovers_the_second_point_table() {
    let curve = lookup("102a1").unwrap();
    let found = search_s_integral_points(curve.minimal(), &[2], DEFAULT_BOUND).unwrap();
    assert_eq!(found, curve.known_points(), "nineteen points, (x, y)-sorted");
}

#[test]
fn short_coordinates_of_the_known_points() {
    let first = lookup("128a2").unwrap();
    let mut expected = int_pts(&[
        (-96, -864),
        (-96, 864),
        (-24, -864),
        (-24, 864),
        (48, 0),
        (84, -216),
        (84, 216),
        (120, -864),
        (120, 864),
    ]);
    expected.push(pt("273", "-4185"));
    expected.push(pt("273", "4185"));
    expected.push(pt("696", "-18144"));
    expected.push(pt("696", "18144"));
    assert_eq!(first.short_points(), expected);

    let second = lookup("102a1").unwrap();
    let mut expected = int_pts(&[(-57, -216), (-57, 216), (-21, -324), (-21, 324)]);
    expected.push(pt("6", "-162"));
    expected.push(pt("6", "162"));
    expected.extend(int_pts(&[(15, 0), (51, -108), (51, 108)]));
    expected.push(pt("1329/16", "-37719/64"));
    expected.push(pt("1329/16", "37719/64"));
    expected.extend(int_pts(&[
        (87, -648),
        (87, 648),
        (303, -5184),
        (303, 5184),
        (339, -6156),
        (339, 6156),
        (98583, -30953016),
        (98583, 30953016),
    ]));
    assert_eq!(second.short_points(), expected);
}

#[test]
fn residue_discs_of_the_first_curve_mod_five() {
    let curve = lookup("128a2").unwrap();
    let points = curve.short_points();
    let partition = residue_disc_partition(curve.short(), 5, &points).unwrap();

    let labels: Vec<(u64, u64)> = partition.keys().map(|d| d.label()).collect();
    assert_eq!(
        labels,
        vec![(0, 1), (0, 4), (1, 1), (1, 4), (3, 0), (4, 1), (4, 4)],
        "seven residue discs, all affine"
    );
    assert!(partition.keys().all(|d| !d.is_at_infinity() && d.prime() == 5));

    let members: Vec<Vec<usize>> = partition.values().cloned().collect();
    assert_eq!(
        members,
        vec![
            vec![7],
            vec![8],
            vec![2, 11],
            vec![3, 12],
            vec![4, 9, 10],
            vec![0, 6],
            vec![1, 5],
        ]
    );
}

#[test]
fn residue_discs_of_the_second_curve_mod_five() {
    let curve = lookup("102a1").unwrap();
    let points = curve.short_points();
    let partition = residue_disc_partition(curve.short(), 5, &points).unwrap();

    let discs: Vec<_> = partition.keys().collect();
    assert_eq!(discs.len(), 10, "nine affine discs plus the disc at infinity");
    let labels: Vec<(u64, u64)> = discs.iter().map(|d| d.label()).collect();
    assert_eq!(
        labels,
        vec![
            (0, 0),
            (0, 1),
            (1, 2),
            (1, 3),
            (2, 2),
            (2, 3),
            (3, 1),
            (3, 4),
            (4, 1),
            (4, 4),
        ]
    );
    // The label (0, 1) names no affine point of this reduction, so it
    // denotes the disc at infinity; it sorts second and holds no input.
    assert!(discs[1].is_at_infinity());
    assert!(discs.iter().enumerate().all(|(i, d)| (i == 1) == d.is_at_infinity()));

    let members: Vec<Vec<usize>> = partition.values().cloned().collect();
    assert_eq!(
        members,
        vec![
            vec![6],
            vec![],
            vec![5, 7],
            vec![4, 8],
            vec![11],
            vec![12],
            vec![1, 13, 18],
            vec![0, 14, 17],
            vec![2, 10, 16],
            vec![3, 9, 15],
        ]
    );

    // Every point lands in exactly one disc.
    let mut seen: Vec<usize> = partition.values().flatten().copied().collect();
    seen.sort();
    assert_eq!(seen, (0..points.len()).collect::<Vec<_>>());

    // An empty input yields the same disc set with empty member lists.
    let empty = residue_disc_partition(curve.short(), 5, &[]).unwrap();
    assert_eq!(
        empty.keys().map(|d| d.label()).collect::<Vec<_>>(),
        labels
    );
    assert!(empty.values().all(|m| m.is_empty()));
}

#[test]
fn bad_fibers_of_the_second_curve() {
    let curve = lookup("102a1").unwrap();
    let points = curve.known_points();

    let at3 = classify_at_bad_prime(curve.minimal(), 3, points).unwrap();
    assert_eq!(at3.singular_point(), Some((2, 2)));
    assert_eq!(at3.exceptional(), &[2, 3, 4, 5, 11, 12, 13, 14, 17, 18]);
    assert_eq!(at3.smooth(), &[0, 1, 6, 7, 8, 9, 10, 15, 16]);

    let at17 = classify_at_bad_prime(curve.minimal(), 17, points).unwrap();
    assert_eq!(at17.singular_point(), Some((10, 12)));
    assert_eq!(at17.exceptional(), &[] as &[usize]);
    assert_eq!(at17.smooth(), (0..points.len()).collect::<Vec<_>>());

    // At a good prime every point is smooth and there is no node.
    let at5 = classify_at_bad_prime(curve.minimal(), 5, points).unwrap();
    assert_eq!(at5.singular_point(), None);
    assert_eq!(at5.smooth(), (0..points.len()).collect::<Vec<_>>());

    // Additive reduction admits no such partition.
    let first = lookup("128a2").unwrap();
    let err = classify_at_bad_prime(first.minimal(), 2, first.known_points()).unwrap_err();
    assert!(matches!(err, CurveError::AdditiveReduction { p: 2 }));
}

#[test]
fn split_multiplicative_census() {
    // Independent check: over F_v, a curve with a node has v - 1 affine
    // points when the tangent slopes at the node are rational (split) and
    // v + 1 when they are conjugate (non-split). Smooth locus: v ∓ 1
    // points plus one at infinity, plus the node itself.
    let second = lookup("102a1").unwrap();
    let split_at_7 = WeierstrassModel::from_integers(0, 0, 0, -27, 61).unwrap();
    let nonsplit_at_7 = WeierstrassModel::from_integers(0, 0, 0, -12, 23).unwrap();
    let cases: [(&WeierstrassModel, u64); 5] = [
        (second.minimal(), 2),
        (second.minimal(), 3),
        (second.minimal(), 17),
        (&split_at_7, 7),
        (&nonsplit_at_7, 7),
    ];
    for (model, v) in cases {
        let split = is_split_multiplicative(model, v).unwrap();
        let affine = reduced_affine_points(model, v).unwrap().len() as u64;
        assert_eq!(
            split,
            affine == v - 1,
            "census at {v}: {affine} affine points"
        );
    }
    assert!(!is_split_multiplicative(second.minimal(), 2).unwrap());
    assert!(!is_split_multiplicative(second.minimal(), 3).unwrap());
    assert!(!is_split_multiplicative(second.minimal(), 17).unwrap());

    let summary = delta_s(second.minimal(), &[2]).unwrap();
    assert_eq!(summary.delta(), 0);
    assert_eq!(summary.skipped(), &[] as &[u64]);
}

#[test]
fn point_counts_respect_the_hasse_bound() {
    for label in ["128a2", "102a1"] {
        let curve = lookup(label).unwrap();
        for p in [5u64, 7, 11, 13] {
            let n = reduced_affine_points(curve.short(), p).unwrap().len() as i64 + 1;
            let defect = n - (p as i64 + 1);
            assert!(
                defect * defect <= 4 * p as i64,
                "{label} at {p}: count {n} out of range"
            );
        }
    }
}

fn arb_scale() -> impl Strategy<Value = curves::Rational> {
    prop_oneof![
        Just(rational(1)),
        Just(rational(-1)),
        Just(ratio(1, 2)),
        Just(ratio(-1, 2)),
        Just(rational(6)),
        Just(rational(-6)),
    ]
}

fn arb_shift() -> impl Strategy<Value = curves::Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #[test]
    fn transforms_round_trip_on_models_and_points(
        u in arb_scale(),
        r in arb_shift(),
        s in arb_shift(),
        t in arb_shift(),
        idx in 0usize..32,
    ) {
        let transform = ModelTransform::new(u, r, s, t).unwrap();
        let inverse = transform.invert();
        prop_assert_eq!(transform.then(&inverse), ModelTransform::identity());

        let curve = lookup(if idx % 2 == 0 { "128a2" } else { "102a1" }).unwrap();
        let model = curve.minimal();
        let image = apply_transform(model, &transform);
        prop_assert_eq!(&apply_transform(&image, &inverse), model);

        let point = &curve.known_points()[idx / 2 % curve.known_points().len()];
        let moved = map_point(point, &transform);
        prop_assert!(moved.satisfies(&image));
        prop_assert_eq!(&map_point(&moved, &inverse), point);
    }

    #[test]
    fn searched_points_always_satisfy_their_model(
        a4 in -6i64..=6,
        a6 in -6i64..=6,
    ) {
        let Ok(model) = WeierstrassModel::from_integers(0, 0, 0, a4, a6) else {
            return Ok(());
        };
        let bound = HeightBound { numerator: 40, denominator: 4 };
        let found = search_s_integral_points(&model, &[2], bound).unwrap();
        for p in &found {
            prop_assert!(p.satisfies(&model));
        }
        let mut sorted = found.clone();
        sorted.sort();
        prop_assert_eq!(sorted, found);
    }
}
