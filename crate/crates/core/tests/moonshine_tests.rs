//! Monster-dimension decompositions of j coefficients.

use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;
use xmoon::forms::j_paper;
use xmoon::moonshine::{Decomposition, MonsterDims, MoonshineError};
use xmoon::QInt;

fn q(v: i64) -> QInt {
    QInt::from(v)
}

fn terms(pairs: &[(i64, i64)]) -> Vec<(QInt, QInt)> {
    pairs.iter().map(|&(d, m)| (q(d), q(m))).collect()
}

/// The group order 2⁴⁶·3²⁰·5⁹·7⁶·11²·13³·17·19·23·29·31·41·47·59·71.
fn monster_order() -> QInt {
    let factors: [(u64, u32); 15] = [
        (2, 46),
        (3, 20),
        (5, 9),
        (7, 6),
        (11, 2),
        (13, 3),
        (17, 1),
        (19, 1),
        (23, 1),
        (29, 1),
        (31, 1),
        (41, 1),
        (47, 1),
        (59, 1),
        (71, 1),
    ];
    factors.iter().map(|&(p, e)| QInt::from(p).pow(e)).product()
}

#[test]
fn bundled_dimensions_divide_the_group_order() {
    let dims = MonsterDims::standard();
    assert_eq!(dims.dims()[0], QInt::one());
    assert_eq!(dims.dims()[1], q(196883));
    let order = monster_order();
    for d in dims.dims() {
        assert!(order.is_multiple_of(d), "{d} does not divide |M|");
    }
}

#[test]
fn classical_decompositions() {
    let dims = MonsterDims::standard();
    let cases: [(i64, &[(i64, i64)]); 3] = [
        (196884, &[(196883, 1), (1, 1)]),
        (21493760, &[(21296876, 1), (196883, 1), (1, 1)]),
        (864299970, &[(842609326, 1), (21296876, 1), (196883, 2), (1, 2)]),
    ];
    for (value, want) in cases {
        let d = dims.greedy_decompose(&q(value)).unwrap();
        assert_eq!(d.terms, terms(want), "{value}");
        assert!(d.verify(&dims));
    }
    assert_eq!(dims.greedy_decompose(&q(196884)).unwrap().to_string(), "196884 = 1·196883 + 1·1");
}

#[test]
fn j_series_decomposition() {
    let dims = MonsterDims::standard();
    let j = j_paper(4);
    let out = dims.decompose_series(&j, 1, 4).unwrap();
    assert_eq!(out.len(), 4);
    assert_eq!(out[0].0, 1);
    assert_eq!(out[3].1.target, q(20245856256));
    assert_eq!(out[3].1.terms, terms(&[(19360062527, 1), (842609326, 1), (21296876, 2), (196883, 3), (1, 2)]));
    for (_, d) in &out {
        assert!(d.verify(&dims));
    }
}

#[test]
fn negative_inputs_are_rejected() {
    let dims = MonsterDims::standard();
    assert_eq!(dims.greedy_decompose(&q(-1)).unwrap_err(), MoonshineError::NegativeValue(q(-1)));
    let delta = xmoon::forms::delta(3);
    assert!(matches!(
        dims.decompose_series(&delta, 1, 3),
        Err(MoonshineError::NegativeCoefficient { exponent: 2, .. })
    ));
    assert!(dims.greedy_decompose(&QInt::zero()).unwrap().terms.is_empty());
}

#[test]
fn verify_accepts_other_valid_decompositions() {
    let dims = MonsterDims::standard();
    assert!(Decomposition::new(q(196884), terms(&[(1, 196884)])).verify(&dims));
    assert!(!Decomposition::new(q(196884), terms(&[(196884, 1)])).verify(&dims));
    assert!(!Decomposition::new(q(196884), terms(&[(196883, 1), (1, 2)])).verify(&dims));
    assert!(!Decomposition::new(q(2), terms(&[(1, 1), (1, 1)])).verify(&dims));
    assert!(!Decomposition::new(q(0), terms(&[(1, 0)])).verify(&dims));
}

#[test]
fn custom_tables_are_validated() {
    assert!(MonsterDims::parse("1\n5\n# comment\n\n9").is_ok());
    assert!(matches!(MonsterDims::parse("2\n5"), Err(MoonshineError::BadTable { line: 1, .. })));
    assert!(matches!(MonsterDims::parse("1\n5\n5"), Err(MoonshineError::BadTable { line: 3, .. })));
    assert!(matches!(MonsterDims::parse("1\nx"), Err(MoonshineError::BadTable { line: 2, .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn greedy_always_verifies(v in 0u64..=1_000_000_000_000) {
        let dims = MonsterDims::standard();
        let d = dims.greedy_decompose(&QInt::from(v)).unwrap();
        prop_assert!(d.verify(&dims));
        // greedy never leaves a full copy of the next dimension in the ones
        prop_assert!(d.multiplicity(&QInt::one()) < q(196883));
        let ds: Vec<&QInt> = d.terms.iter().map(|t| &t.0).collect();
        prop_assert!(ds.windows(2).all(|w| w[0] > w[1]));
    }
}
