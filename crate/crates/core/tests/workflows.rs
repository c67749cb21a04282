//! End-to-end paths through several modules at once.

use fliess_core::coeff::{int, ratio};
use fliess_core::fliess::oracle_mixed_compose;
use fliess_core::hopf::{eval_character, inverse_via_antipode, parse_element};
use fliess_core::reldeg::{decompose, linearizing_element, orbit_check};
use fliess_core::{
    feedback_product, group_inverse_fixed_point, mixed_compose, parse_pair, parse_series,
    PiecewiseConstantSignal, Series, SeriesPair,
};

fn signal() -> PiecewiseConstantSignal {
    PiecewiseConstantSignal::new(vec![int(0), ratio(1, 16), ratio(1, 4)], vec![ratio(1, 2), int(-1)]).unwrap()
}

#[test]
fn composing_with_an_inverse_undoes_the_action() {
    let c = parse_series("x1 + x1x1 - x0x1 + 1/2*x1x0x1", 5).unwrap();
    let d = parse_pair("(1 - x1 + x0, x1 + x0x1)", 5).unwrap();
    let g = group_inverse_fixed_point(&d).unwrap();
    let moved = mixed_compose(&c, &d).unwrap();
    assert_eq!(mixed_compose(&moved, &g).unwrap(), c);
    assert_eq!(inverse_via_antipode(&d).unwrap(), g);
}

#[test]
fn characters_read_coordinates() {
    let d = parse_pair("(1 - x1 + 2*x0, 3*x1 + x0x1)", 4).unwrap();
    let e = parse_element("b[x0] + a[x0x1] - 2*a[x1]*b[x1]").unwrap();
    // b_{x0} = 2, a_{x0x1} = 1, a_{x1} b_{x1} = 3 * -1
    assert_eq!(eval_character(&e, &d).unwrap(), int(9));
}

#[test]
fn linearizing_a_relative_degree_two_series() {
    let c = parse_series("x0x0 + 2*x0x1 + x0x1x1 - x0x0x1", 5).unwrap();
    let d = decompose(&c).unwrap();
    assert_eq!(d.r, 2);
    assert_eq!(d.k, int(2));
    let e = linearizing_element(&c).unwrap();
    assert!(orbit_check(&c, &e).unwrap());
    let normal = mixed_compose(&c, &group_inverse_fixed_point(&e).unwrap()).unwrap();
    assert_eq!(normal, parse_series("x0x0 + x0x1", 5).unwrap());
}

#[test]
fn oracle_sees_the_mixed_composition() {
    let c = parse_series("x1 + x1x1", 6).unwrap();
    let d = parse_pair("(1 + x1, x0)", 6).unwrap();
    let coarse = oracle_mixed_compose(&c, &d, &signal(), &ratio(1, 8), 32).unwrap();
    let fine = oracle_mixed_compose(&c, &d, &signal(), &ratio(1, 8), 256).unwrap();
    assert!(fine.residual < coarse.residual);
    assert!(fine.residual_f64() < 1e-4);
}

#[test]
fn feedback_with_zero_loop_is_the_plant() {
    let c = parse_series("1 + x1 - x0x1", 5).unwrap();
    assert_eq!(feedback_product(&c, &Series::zero(5)).unwrap(), c);
    let id = SeriesPair::identity(5);
    assert_eq!(mixed_compose(&c, &id).unwrap(), c);
}
