//! Polynomial de Rham forms and simplicial cochains on the unit interval,
//! the integration map between them and its iterated-integral extension.
//!
//! Both sides are concentrated in degrees 0 and 1. A form is `f(t) + g(t) dt`;
//! a cochain assigns a value to each vertex and a coefficient to the single
//! edge `dt`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{fmt_monomial, Polynomial};
use crate::rational::{self, Rational};

/// `part0 + part1 dt`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyForm {
    pub part0: Polynomial,
    pub part1: Polynomial,
}

/// Values `v0`, `v1` on the two vertices plus `edge * dt`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cochain {
    #[serde(with = "rational::serde_fraction")]
    pub v0: Rational,
    #[serde(with = "rational::serde_fraction")]
    pub v1: Rational,
    #[serde(with = "rational::serde_fraction")]
    pub edge: Rational,
}

impl PolyForm {
    pub fn new(part0: Polynomial, part1: Polynomial) -> Self {
        Self { part0, part1 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn function(p: Polynomial) -> Self {
        Self::new(p, Polynomial::zero())
    }

    /// `p(t) dt`
    pub fn one_form(p: Polynomial) -> Self {
        Self::new(Polynomial::zero(), p)
    }

    /// `t^k`
    pub fn t_pow(k: usize) -> Self {
        Self::function(Polynomial::monomial(k, Rational::from_integer(1.into())))
    }

    /// `t^k dt`
    pub fn t_pow_dt(k: usize) -> Self {
        Self::one_form(Polynomial::monomial(k, Rational::from_integer(1.into())))
    }

    pub fn dt() -> Self {
        Self::t_pow_dt(0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::function(Polynomial::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.part0.is_zero() && self.part1.is_zero()
    }

    /// Degree of a nonzero homogeneous form; `None` for zero or mixed forms.
    pub fn degree(&self) -> Option<u8> {
        match (self.part0.is_zero(), self.part1.is_zero()) {
            (false, true) => Some(0),
            (true, false) => Some(1),
            _ => None,
        }
    }

    /// The nonzero homogeneous components, tagged with their degree.
    pub fn homogeneous_parts(&self) -> Vec<(u8, PolyForm)> {
        let mut out = Vec::with_capacity(2);
        if !self.part0.is_zero() {
            out.push((0, Self::function(self.part0.clone())));
        }
        if !self.part1.is_zero() {
            out.push((1, Self::one_form(self.part1.clone())));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.part0 + &other.part0, &self.part1 + &other.part1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.part0.scale(c), self.part1.scale(c))
    }
}

impl Cochain {
    pub fn new(v0: Rational, v1: Rational, edge: Rational) -> Self {
        Self { v0, v1, edge }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn vertices(v0: Rational, v1: Rational) -> Self {
        Self::new(v0, v1, Rational::zero())
    }

    /// `r dt`
    pub fn edge(r: Rational) -> Self {
        Self::new(Rational::zero(), Rational::zero(), r)
    }

    pub fn is_zero(&self) -> bool {
        self.v0.is_zero() && self.v1.is_zero() && self.edge.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &self.v0 + &other.v0,
            &self.v1 + &other.v1,
            &self.edge + &other.edge,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            &self.v0 - &other.v0,
            &self.v1 - &other.v1,
            &self.edge - &other.edge,
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(&self.v0 * c, &self.v1 * c, &self.edge * c)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.v0, -&self.v1, -&self.edge)
    }
}

pub fn wedge(a: &PolyForm, b: &PolyForm) -> PolyForm {
    PolyForm::new(
        &a.part0 * &b.part0,
        &(&a.part0 * &b.part1) + &(&a.part1 * &b.part0),
    )
}

pub fn d_form(a: &PolyForm) -> PolyForm {
    PolyForm::one_form(a.part0.derivative())
}

/// Alexander–Whitney cup product on the 1-simplex: front vertex times back
/// face. `F ∪ r dt = F(0) r dt` and `r dt ∪ F = r F(1) dt`.
pub fn cup(a: &Cochain, b: &Cochain) -> Cochain {
    Cochain::new(
        &a.v0 * &b.v0,
        &a.v1 * &b.v1,
        &a.v0 * &b.edge + &a.edge * &b.v1,
    )
}

pub fn delta(a: &Cochain) -> Cochain {
    Cochain::edge(&a.v1 - &a.v0)
}

/// Restriction to the endpoints on functions, `∫_0^1` on one-forms.
pub fn integrate(a: &PolyForm) -> Cochain {
    Cochain::new(a.part0.at_zero(), a.part0.at_one(), a.part1.integral_unit())
}

/// `I_n`: integral of `f_1(t_1) ⋯ f_n(t_n)` over `0 ≤ t_1 ≤ ⋯ ≤ t_n ≤ 1`,
/// where `f_i dt` is the one-form part of the i-th input.
///
/// For `n ≥ 2` function components never contribute, so the multilinear map
/// vanishes as soon as one (homogeneous) input is a function.
pub fn iterated_integral(inputs: &[PolyForm]) -> Result<Cochain> {
    match inputs {
        [] => Err(Error::EmptyInput),
        [a] => Ok(integrate(a)),
        [first, rest @ ..] => {
            let mut acc = first.part1.antiderivative();
            for f in rest {
                if acc.is_zero() {
                    break;
                }
                acc = (&f.part1 * &acc).antiderivative();
            }
            Ok(Cochain::edge(acc.at_one()))
        }
    }
}

impl fmt::Display for PolyForm {
    /// `3/2*t^2 + (1/3)dt`, `t dt`, `(1 - t)dt`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let one_part = if self.part1.is_zero() {
            None
        } else {
            let c = self.part1.coeffs();
            let lead = c.len() - 1;
            let single_unit = c[..lead].iter().all(Zero::is_zero) && rational::is_unit(&c[lead]);
            Some(if single_unit {
                match lead {
                    0 => "dt".to_string(),
                    k => format!("{} dt", fmt_monomial(k, &c[lead])),
                }
            } else {
                format!("({})dt", self.part1)
            })
        };
        match (self.part0.is_zero(), one_part) {
            (false, None) => write!(f, "{}", self.part0),
            (true, Some(p1)) => write!(f, "{p1}"),
            (false, Some(p1)) => write!(f, "{} + {p1}", self.part0),
            (true, None) => unreachable!(),
        }
    }
}

impl fmt::Display for Cochain {
    /// `(v0, v1; r dt)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}; {} dt)",
            rational::to_display_string(&self.v0),
            rational::to_display_string(&self.v1),
            rational::to_display_string(&self.edge)
        )
    }
}

#[derive(Serialize, Deserialize)]
struct PolyFormWire {
    part0: Vec<String>,
    part1: Vec<String>,
}

impl Serialize for PolyForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let enc = |p: &Polynomial| {
            p.coeffs()
                .iter()
                .map(rational::to_fraction_string)
                .collect()
        };
        PolyFormWire {
            part0: enc(&self.part0),
            part1: enc(&self.part1),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = PolyFormWire::deserialize(d)?;
        let dec = |v: Vec<String>| -> std::result::Result<Polynomial, D::Error> {
            v.iter()
                .map(|s| {
                    rational::parse_fraction(s)
                        .ok_or_else(|| D::Error::custom(format!("bad fraction {s:?}")))
                })
                .collect::<std::result::Result<Vec<_>, _>>()
                .map(Polynomial::from_coeffs)
        };
        Ok(PolyForm::new(dec(wire.part0)?, dec(wire.part1)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    fn func(cs: &[i64]) -> PolyForm {
        PolyForm::function(poly(cs))
    }

    fn oneform(cs: &[i64]) -> PolyForm {
        PolyForm::one_form(poly(cs))
    }

    fn vert(v0: i64, v1: i64) -> Cochain {
        Cochain::vertices(int(v0), int(v1))
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(
            wedge(&PolyForm::t_pow(1), &PolyForm::dt()),
            oneform(&[0, 1])
        );
        assert!(wedge(&PolyForm::dt(), &PolyForm::dt()).is_zero());
        // (1 + t) ∧ t dt = (t + t^2) dt
        assert_eq!(
            wedge(&func(&[1, 1]), &oneform(&[0, 1])),
            oneform(&[0, 1, 1])
        );
    }

    #[test]
    fn d_form_examples() {
        assert_eq!(d_form(&PolyForm::t_pow(2)), oneform(&[0, 2]));
        assert!(d_form(&PolyForm::dt()).is_zero());
        let a = PolyForm::new(poly(&[0, 0, 0, 1]), poly(&[0, 1]));
        assert_eq!(d_form(&a), oneform(&[0, 0, 3]));
    }

    #[test]
    fn cup_examples() {
        let f = vert(2, 3);
        let e = Cochain::edge(int(5));
        assert_eq!(cup(&f, &e), Cochain::edge(int(10)));
        assert_eq!(cup(&e, &f), Cochain::edge(int(15)));
        assert!(cup(&Cochain::edge(int(1)), &Cochain::edge(int(1))).is_zero());
        assert_eq!(cup(&f, &vert(5, 7)), vert(10, 21));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&vert(0, 1)), Cochain::edge(int(1)));
        assert!(delta(&Cochain::edge(int(4))).is_zero());
        assert!(delta(&vert(3, 3)).is_zero());
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(integrate(&PolyForm::t_pow(2)), vert(0, 1));
        assert_eq!(integrate(&PolyForm::t_pow_dt(1)), Cochain::edge(rat(1, 2)));
        assert_eq!(integrate(&func(&[1])), vert(1, 1));
    }

    #[test]
    fn iterated_integral_examples() {
        let dt = PolyForm::dt();
        assert_eq!(
            iterated_integral(&[dt.clone(), dt.clone()]).unwrap(),
            Cochain::edge(rat(1, 2))
        );
        assert_eq!(
            iterated_integral(&[dt.clone(), dt.clone(), dt.clone()]).unwrap(),
            Cochain::edge(rat(1, 6))
        );
        assert!(iterated_integral(&[PolyForm::t_pow(1), dt.clone()])
            .unwrap()
            .is_zero());
        assert_eq!(iterated_integral(&[]), Err(Error::EmptyInput));
        assert_eq!(
            iterated_integral(&[PolyForm::t_pow_dt(3)]).unwrap(),
            Cochain::edge(rat(1, 4))
        );
    }

    #[test]
    fn iterated_integral_ordering_matters() {
        // ∫_{s ≤ u} s du ds = 1/6, ∫_{s ≤ u} u = 1/3
        let t_dt = PolyForm::t_pow_dt(1);
        let dt = PolyForm::dt();
        assert_eq!(
            iterated_integral(&[t_dt.clone(), dt.clone()]).unwrap(),
            Cochain::edge(rat(1, 6))
        );
        assert_eq!(
            iterated_integral(&[dt, t_dt]).unwrap(),
            Cochain::edge(rat(1, 3))
        );
    }

    #[test]
    fn display_forms() {
        let a = PolyForm::new(
            Polynomial::monomial(2, rat(3, 2)),
            Polynomial::constant(rat(1, 3)),
        );
        assert_eq!(a.to_string(), "3/2*t^2 + (1/3)dt");
        assert_eq!(PolyForm::t_pow_dt(1).to_string(), "t dt");
        assert_eq!(oneform(&[1, -1]).to_string(), "(1 - t)dt");
        assert_eq!(PolyForm::zero().to_string(), "0");
        assert_eq!(
            Cochain::new(int(0), int(1), rat(1, 2)).to_string(),
            "(0, 1; 1/2 dt)"
        );
    }

    #[test]
    fn json_wire_format() {
        let a = PolyForm::new(poly(&[1]), Polynomial::constant(rat(1, 3)));
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(v, serde_json::json!({"part0": ["1/1"], "part1": ["1/3"]}));
        let back: PolyForm = serde_json::from_value(v).unwrap();
        assert_eq!(back, a);
        let c = Cochain::new(int(2), rat(-1, 2), int(0));
        assert_eq!(
            serde_json::to_value(&c).unwrap(),
            serde_json::json!({"v0": "2/1", "v1": "-1/2", "edge": "0/1"})
        );
    }
}
