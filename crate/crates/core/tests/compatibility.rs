use proptest::prelude::*;
use qrigid_core::alpha::GridIntervalOrbit;
use qrigid_core::ext::interval_ext;
use qrigid_core::interval::{is_compatible, is_rigid_list, Boundary, Endpoint, Frac, Interval};

/// Endpoint shape with gap points addressed by rank rather than offset.
#[derive(Debug, Clone, Copy)]
enum Shape {
    NegInf,
    Grid(i64),
    Gap(i64, usize),
    PosInf,
}

fn realize(s: Shape, offsets: &[Frac]) -> Endpoint {
    match s {
        Shape::NegInf => Endpoint::NegInf,
        Shape::Grid(i) => Endpoint::Grid(i),
        Shape::Gap(g, r) => Endpoint::gap(g, offsets[r]).unwrap(),
        Shape::PosInf => Endpoint::PosInf,
    }
}

const RANKS: usize = 4;

fn shape() -> impl Strategy<Value = Shape> {
    prop_oneof![
        1 => Just(Shape::NegInf),
        3 => (0i64..4).prop_map(Shape::Grid),
        3 => (0i64..4, 0..RANKS).prop_map(|(g, r)| Shape::Gap(g, r)),
        1 => Just(Shape::PosInf),
    ]
}

type Raw = (Shape, bool, Shape, bool);

fn raw() -> impl Strategy<Value = Raw> {
    (shape(), any::<bool>(), shape(), any::<bool>())
}

fn build(r: Raw, offsets: &[Frac]) -> Option<Interval> {
    Interval::new(
        realize(r.0, offsets),
        Boundary::from_closed(r.1),
        realize(r.2, offsets),
        Boundary::from_closed(r.3),
    )
    .ok()
}

fn uniform_offsets() -> Vec<Frac> {
    (1..=RANKS as u32)
        .map(|k| Frac::new(k, RANKS as u32 + 1).unwrap())
        .collect()
}

fn sorted_offsets() -> impl Strategy<Value = Vec<Frac>> {
    proptest::sample::subsequence((1u32..1000).collect::<Vec<_>>(), RANKS)
        .prop_map(|v| v.into_iter().map(|k| Frac::new(k, 1000).unwrap()).collect())
}

proptest! {
    #[test]
    fn compatibility_is_symmetric(a in raw(), b in raw()) {
        let offs = uniform_offsets();
        if let (Some(i), Some(j)) = (build(a, &offs), build(b, &offs)) {
            prop_assert_eq!(is_compatible(&i, &j), is_compatible(&j, &i));
        }
    }

    #[test]
    fn compatibility_is_reflexive(a in raw()) {
        if let Some(i) = build(a, &uniform_offsets()) {
            prop_assert!(is_compatible(&i, &i));
            prop_assert!(is_rigid_list(&[i, i]));
        }
    }

    #[test]
    fn compatibility_depends_on_order_only(a in raw(), b in raw(), other in sorted_offsets()) {
        let offs = uniform_offsets();
        let (i, j) = (build(a, &offs), build(b, &offs));
        let (i2, j2) = (build(a, &other), build(b, &other));
        prop_assert_eq!(i.is_some(), i2.is_some());
        prop_assert_eq!(j.is_some(), j2.is_some());
        if let (Some(i), Some(j), Some(i2), Some(j2)) = (i, j, i2, j2) {
            prop_assert_eq!(is_compatible(&i, &j), is_compatible(&i2, &j2));
        }
    }

    #[test]
    fn rigid_list_is_pairwise(items in proptest::collection::vec(raw(), 0..6)) {
        let offs = uniform_offsets();
        let items: Vec<Interval> = items.into_iter().filter_map(|r| build(r, &offs)).collect();
        let pairwise = items.iter().all(|a| items.iter().all(|b| is_compatible(a, b)));
        prop_assert_eq!(is_rigid_list(&items), pairwise);
    }

    #[test]
    fn shifting_both_preserves_compatibility(a in raw(), b in raw(), k in -5i64..5) {
        let offs = uniform_offsets();
        if let (Some(i), Some(j)) = (build(a, &offs), build(b, &offs)) {
            prop_assert_eq!(is_compatible(&i, &j), is_compatible(&i.shifted(k), &j.shifted(k)));
        }
    }
}

/// Every grid-ended interval with indices in `[0, 3]`, rays included.
fn grid_orbits() -> Vec<GridIntervalOrbit> {
    let ends: Vec<Option<i64>> = std::iter::once(None).chain((0..=3).map(Some)).collect();
    let mut out = Vec::new();
    for &lo in &ends {
        for &hi in &ends {
            for lc in [false, true] {
                for hc in [false, true] {
                    if lo.is_none() && lc || hi.is_none() && hc {
                        continue;
                    }
                    if let Ok(o) = GridIntervalOrbit::new(
                        lo,
                        Boundary::from_closed(lc),
                        hi,
                        Boundary::from_closed(hc),
                    ) {
                        out.push(o);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn lattice_translation_is_sound() {
    let all = grid_orbits();
    // 6 proper finite pairs x 4 boundary choices, 4 points, 8 rays each way
    assert_eq!(all.len(), 24 + 4 + 8 + 8);
    for a in &all {
        for b in &all {
            let compatible = is_compatible(&a.interval(0), &b.interval(0));
            let (la, lb) = (a.lattice(), b.lattice());
            let ext_free = interval_ext(&la, &lb) == 0 && interval_ext(&lb, &la) == 0;
            assert_eq!(compatible, ext_free, "{a} {b}");
        }
    }
}

#[test]
fn lattice_map_round_trips() {
    for o in grid_orbits() {
        assert_eq!(GridIntervalOrbit::from_lattice(&o.lattice()).unwrap(), o);
    }
}
