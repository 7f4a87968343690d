use cumulant_core::cumulants::{
    compositions, cumulant, cumulant_recursive, cumulant_terms, CumulantContext,
};
use cumulant_core::interval::{cup, d_form, delta, integrate, iterated_integral, wedge};
use cumulant_core::rational::{int, rat};
use cumulant_core::{Cochain, PolyForm, Polynomial, Rational};
use proptest::prelude::*;

fn monomials(max: usize) -> Vec<PolyForm> {
    (0..=max)
        .map(PolyForm::t_pow)
        .chain((0..=max).map(PolyForm::t_pow_dt))
        .collect()
}

fn sign(deg: u8) -> Rational {
    if deg.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn cochain_basis() -> Vec<(Cochain, u8)> {
    vec![
        (Cochain::vertices(int(1), int(0)), 0),
        (Cochain::vertices(int(0), int(1)), 0),
        (Cochain::edge(int(1)), 1),
    ]
}

#[test]
fn forms_form_a_commutative_dga() {
    for a in monomials(12) {
        assert!(d_form(&d_form(&a)).is_zero());
    }
    let basis = monomials(8);
    for a in &basis {
        let da = a.degree().unwrap();
        for b in &basis {
            let db = b.degree().unwrap();
            let lhs = d_form(&wedge(a, b));
            let rhs = wedge(&d_form(a), b).add(&wedge(a, &d_form(b)).scale(&sign(da)));
            assert_eq!(lhs, rhs, "Leibniz {a} {b}");
            assert_eq!(wedge(a, b), wedge(b, a).scale(&sign(da * db)));
        }
    }
}

#[test]
fn cochains_form_a_dga() {
    let basis = cochain_basis();
    for (a, da) in &basis {
        assert!(delta(&delta(a)).is_zero());
        for (b, _) in &basis {
            let lhs = delta(&cup(a, b));
            let rhs = cup(&delta(a), b).add(&cup(a, &delta(b)).scale(&sign(*da)));
            assert_eq!(lhs, rhs, "Leibniz {a} {b}");
            for (c, _) in &basis {
                assert_eq!(cup(&cup(a, b), c), cup(a, &cup(b, c)));
            }
        }
    }
}

#[test]
fn stokes() {
    for k in 0..=12 {
        let a = PolyForm::t_pow(k);
        assert_eq!(integrate(&d_form(&a)), delta(&integrate(&a)), "t^{k}");
    }
}

#[test]
fn simplex_volumes() {
    let mut factorial = 1i64;
    for n in 1..=8 {
        factorial *= n as i64;
        let v = iterated_integral(&vec![PolyForm::dt(); n]).unwrap();
        assert_eq!(v, Cochain::edge(rat(1, factorial)));
    }
}

fn all_tuples(basis: &[PolyForm], n: usize) -> Vec<Vec<PolyForm>> {
    (0..n).fold(vec![Vec::new()], |acc, _| {
        acc.iter()
            .flat_map(|p| {
                basis.iter().map(move |x| {
                    let mut v = p.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect()
    })
}

#[test]
fn direct_and_recursive_cumulants_agree() {
    let ctx = CumulantContext::integration();
    for n in 1..=4 {
        for x in all_tuples(&monomials(4), n) {
            assert_eq!(
                cumulant(&ctx, &x).unwrap(),
                cumulant_recursive(&ctx, &x).unwrap()
            );
        }
    }
    // n = 5 on a smaller exponent range keeps the run short
    for x in all_tuples(&monomials(2), 5) {
        assert_eq!(
            cumulant(&ctx, &x).unwrap(),
            cumulant_recursive(&ctx, &x).unwrap()
        );
    }
}

#[test]
fn algebra_morphisms_have_no_higher_cumulants() {
    let ctx = CumulantContext::evaluation_at_zero();
    for n in 2..=4 {
        for x in all_tuples(&monomials(3), n) {
            assert!(cumulant(&ctx, &x).unwrap().is_zero());
        }
    }
}

#[test]
fn term_counts() {
    let ctx = CumulantContext::integration();
    for n in 1..=6 {
        let x = vec![PolyForm::t_pow(1); n];
        assert_eq!(cumulant_terms(&ctx, &x).unwrap().len(), 1 << (n - 1));
        assert_eq!(compositions(n).unwrap().len(), 1 << (n - 1));
    }
}

fn arb_form() -> impl Strategy<Value = PolyForm> {
    let poly = || {
        prop::collection::vec((-9i64..9, 1i64..5), 0..4).prop_map(|cs| {
            Polynomial::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect())
        })
    };
    (poly(), poly()).prop_map(|(a, b)| PolyForm::new(a, b))
}

proptest! {
    #[test]
    fn k2_is_the_multiplicativity_defect(a in arb_form(), b in arb_form()) {
        let ctx = CumulantContext::integration();
        let k2 = cumulant(&ctx, &[a.clone(), b.clone()]).unwrap();
        let expected = integrate(&wedge(&a, &b)).sub(&cup(&integrate(&a), &integrate(&b)));
        prop_assert_eq!(k2, expected);
    }

    #[test]
    fn recursion_matches_on_random_inputs(x in prop::collection::vec(arb_form(), 1..5)) {
        let ctx = CumulantContext::integration();
        prop_assert_eq!(cumulant(&ctx, &x).unwrap(), cumulant_recursive(&ctx, &x).unwrap());
    }

    #[test]
    fn iterated_integrals_are_multilinear(
        x in prop::collection::vec(arb_form(), 2..4),
        u in arb_form(),
        alpha in (-5i64..5, 1i64..4),
    ) {
        let alpha = rat(alpha.0, alpha.1);
        let mut combo = x.clone();
        combo[0] = x[0].add(&u.scale(&alpha));
        let mut with_u = x.clone();
        with_u[0] = u;
        let lhs = iterated_integral(&combo).unwrap();
        let rhs = iterated_integral(&x).unwrap().add(&iterated_integral(&with_u).unwrap().scale(&alpha));
        prop_assert_eq!(lhs, rhs);
    }
}
