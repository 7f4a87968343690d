use cumulant_core::cumulants::CumulantContext;
use cumulant_core::hom::{
    ainfty_relation_defect, alternate_witness_k3, cumulant_map, hom_boundary, homotopy_witness,
    is_zero_on_truncation, iterated, maps_equal_on_truncation, morphism_component, square_cycle,
    K3Variant, SignConvention, TruncationGrid,
};
use cumulant_core::interval::{d_form, iterated_integral};
use cumulant_core::{PolyForm, Polynomial};

use cumulant_core::rational::int;

const A: SignConvention = SignConvention::A;

fn k(n: usize) -> cumulant_core::hom::MultiMap {
    cumulant_map(&CumulantContext::integration(), n)
}

#[test]
fn boundary_of_i2_is_k2() {
    let v = maps_equal_on_truncation(
        &hom_boundary(&iterated(2), A),
        &k(2),
        TruncationGrid::new(8),
    )
    .unwrap();
    assert!(v.passed(), "{v:?}");
}

#[test]
fn d_squared_vanishes_on_iterated_integrals() {
    for conv in [SignConvention::A, SignConvention::B] {
        for n in 1..=4 {
            let dd = hom_boundary(&hom_boundary(&iterated(n), conv), conv);
            let v = is_zero_on_truncation(&dd, TruncationGrid::new(if n == 4 { 3 } else { 4 }));
            assert!(v.passed(), "{conv:?} n={n}: {v:?}");
        }
    }
}

#[test]
fn morphism_relations_hold_under_pinned_convention() {
    for n in 1..=4 {
        let r = ainfty_relation_defect(n, 4, A).unwrap();
        assert!(r.verdict.passed(), "{:?}", r.verdict);
    }
}

#[test]
fn mirrored_convention_breaks_the_relations() {
    assert!(ainfty_relation_defect(1, 4, SignConvention::B)
        .unwrap()
        .verdict
        .passed());
    assert!(!ainfty_relation_defect(2, 4, SignConvention::B)
        .unwrap()
        .verdict
        .passed());
}

#[test]
fn witnesses_bound_the_cumulants() {
    for n in 2..=4 {
        let h = homotopy_witness(n, A).unwrap();
        let v =
            maps_equal_on_truncation(&hom_boundary(&h, A), &k(n), TruncationGrid::new(4)).unwrap();
        assert!(v.passed(), "n={n}: {v:?}");
    }
}

#[test]
fn both_k3_witnesses_and_their_difference() {
    let grid = TruncationGrid::new(4);
    let left = alternate_witness_k3(K3Variant::Left, A);
    let right = alternate_witness_k3(K3Variant::Right, A);
    for w in [&left, &right] {
        assert!(maps_equal_on_truncation(&hom_boundary(w, A), &k(3), grid)
            .unwrap()
            .passed());
    }
    assert!(is_zero_on_truncation(&hom_boundary(&left.sub(&right), A), grid).passed());
}

#[test]
fn square_cycle_is_boundary_of_p3() {
    let grid = TruncationGrid::new(4);
    let v = maps_equal_on_truncation(
        &hom_boundary(&morphism_component(3), A),
        &square_cycle(A),
        grid,
    )
    .unwrap();
    assert!(v.passed(), "{v:?}");
    // Without the desuspension sign, I_3 bounds the negative of the square.
    let v = maps_equal_on_truncation(&hom_boundary(&iterated(3), A), &square_cycle(A).neg(), grid)
        .unwrap();
    assert!(v.passed(), "{v:?}");
}

#[test]
fn exact_forms_identity() {
    let k2 = k(2);
    // f vanishing at 0
    let fs: Vec<Polynomial> = vec![
        Polynomial::from_coeffs(vec![int(0), int(1)]),
        Polynomial::from_coeffs(vec![int(0), int(2), int(-3)]),
        Polynomial::from_coeffs(vec![int(0), int(0), int(0), int(5)]),
    ];
    for f1 in &fs {
        for f2 in &fs {
            let a = PolyForm::function(f1.clone());
            let b = PolyForm::function(f2.clone());
            let lhs = iterated_integral(&[d_form(&a), d_form(&b)]).unwrap();
            let rhs = k2.evaluate(&[a.clone(), d_form(&b)]).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
