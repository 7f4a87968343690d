//! Multilinear maps `Ω^{⊗n} → C`, the Hom-complex differential, and the
//! relations satisfied by the iterated-integral morphism.
//!
//! Maps carry their degree in the suspended convention (`I_n` has degree 0,
//! differentials degree +1). Evaluation happens on elements of the
//! unsuspended algebras, so the Koszul rule uses the cohomological degree
//! `shifted_degree - arity + 1` of each map and the form degree of each input.
//! Under this rule the n-th component of the morphism is `I_n` up to the
//! desuspension sign `(-1)^{(n-1)(n-2)/2}`; see [`morphism_component`].

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::cumulants::{cumulant, CumulantContext};
use crate::error::{Error, Result};
use crate::interval::{cup, d_form, delta, iterated_integral, wedge, Cochain, PolyForm};
use crate::poly::Polynomial;
use crate::rational::{rat, Rational};

/// Where the Koszul sign of a map acting on one tensor slot is read from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum SignConvention {
    /// `(f ⊗ g)(x ⊗ y) = (-1)^{|g||x|} f(x) ⊗ g(y)`: a map pays for the
    /// inputs to its left.
    #[default]
    A,
    /// Mirror image: a map pays for the inputs to its right,
    /// `(f ⊗ g)(x ⊗ y) = (-1)^{|f||y|} f(x) ⊗ g(y)`.
    B,
}

impl SignConvention {
    /// The convention under which the interval morphism relations hold.
    pub const PINNED: SignConvention = SignConvention::A;

    /// Sign for a map of degree `map_degree` acting on `degrees[start..end]`.
    pub fn koszul(self, map_degree: i64, degrees: &[u8], start: usize, end: usize) -> bool {
        if map_degree % 2 == 0 {
            return false;
        }
        let passed: u32 = match self {
            SignConvention::A => degrees[..start].iter().map(|&d| d as u32).sum(),
            SignConvention::B => degrees[end..].iter().map(|&d| d as u32).sum(),
        };
        passed % 2 == 1
    }
}

impl FromStr for SignConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(SignConvention::A),
            "B" | "b" => Ok(SignConvention::B),
            other => Err(Error::UnknownVariant(other.to_string())),
        }
    }
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

type Evaluator = dyn Fn(&[PolyForm], &[u8]) -> Cochain + Send + Sync;

/// A multilinear map from `arity` forms to one cochain.
///
/// The evaluator only ever sees nonzero homogeneous inputs together with
/// their degrees; [`MultiMap::evaluate`] extends it multilinearly.
#[derive(Clone)]
pub struct MultiMap {
    arity: usize,
    shifted_degree: i64,
    label: Arc<str>,
    eval: Arc<Evaluator>,
}

impl fmt::Debug for MultiMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiMap")
            .field("label", &self.label)
            .field("arity", &self.arity)
            .field("shifted_degree", &self.shifted_degree)
            .finish()
    }
}

impl MultiMap {
    pub fn new(
        label: impl Into<String>,
        arity: usize,
        shifted_degree: i64,
        eval: impl Fn(&[PolyForm], &[u8]) -> Cochain + Send + Sync + 'static,
    ) -> Self {
        assert!(arity >= 1, "multilinear maps have arity >= 1");
        Self {
            arity,
            shifted_degree,
            label: Arc::from(label.into()),
            eval: Arc::new(eval),
        }
    }

    pub fn zero(arity: usize, shifted_degree: i64) -> Self {
        Self::new("0", arity, shifted_degree, |_, _| Cochain::zero())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn shifted_degree(&self) -> i64 {
        self.shifted_degree
    }

    /// Cohomological degree: `shifted_degree - arity + 1`.
    pub fn degree(&self) -> i64 {
        self.shifted_degree - self.arity as i64 + 1
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = Arc::from(label.into());
        self
    }

    pub fn evaluate(&self, inputs: &[PolyForm]) -> Result<Cochain> {
        if inputs.len() != self.arity {
            return Err(Error::WrongInputCount {
                expected: self.arity,
                got: inputs.len(),
            });
        }
        Ok(self.call(inputs))
    }

    /// Multilinear extension of the evaluator; the caller guarantees the arity.
    pub(crate) fn call(&self, inputs: &[PolyForm]) -> Cochain {
        debug_assert_eq!(inputs.len(), self.arity);
        let mut degrees = Vec::with_capacity(inputs.len());
        for (i, x) in inputs.iter().enumerate() {
            match x.degree() {
                Some(d) => degrees.push(d),
                None if x.is_zero() => return Cochain::zero(),
                None => {
                    let mut slot = inputs.to_vec();
                    return x.homogeneous_parts().into_iter().fold(
                        Cochain::zero(),
                        |acc, (_, part)| {
                            slot[i] = part;
                            acc.add(&self.call(&slot))
                        },
                    );
                }
            }
        }
        (self.eval)(inputs, &degrees)
    }

    pub fn scale(&self, c: Rational) -> MultiMap {
        let inner = self.clone();
        let label = format!(
            "({})*{}",
            crate::rational::to_display_string(&c),
            self.label
        );
        MultiMap::new(label, self.arity, self.shifted_degree, move |x, _| {
            inner.call(x).scale(&c)
        })
    }

    pub fn neg(&self) -> MultiMap {
        self.scale(-Rational::from_integer(1.into()))
            .relabel(format!("-{}", self.label))
    }

    /// Panics if the arities differ.
    pub fn add(&self, other: &MultiMap) -> MultiMap {
        assert_eq!(self.arity, other.arity, "adding maps of different arity");
        let (f, g) = (self.clone(), other.clone());
        MultiMap::new(
            format!("{} + {}", self.label, other.label),
            self.arity,
            self.shifted_degree,
            move |x, _| f.call(x).add(&g.call(x)),
        )
    }

    /// Panics if the arities differ.
    pub fn sub(&self, other: &MultiMap) -> MultiMap {
        assert_eq!(
            self.arity, other.arity,
            "subtracting maps of different arity"
        );
        let (f, g) = (self.clone(), other.clone());
        MultiMap::new(
            format!("{} - {}", self.label, other.label),
            self.arity,
            self.shifted_degree,
            move |x, _| f.call(x).sub(&g.call(x)),
        )
    }

    /// `f ∘ (1^{⊗slot} ⊗ ∧ ⊗ 1^{⊗…})`, one more input than `f`.
    pub fn precompose_wedge(&self, slot: usize) -> MultiMap {
        assert!(slot < self.arity, "wedge slot out of range");
        let f = self.clone();
        MultiMap::new(
            format!("{}∘(∧@{slot})", self.label),
            self.arity + 1,
            self.shifted_degree + 1,
            move |x, _| {
                let mut merged = Vec::with_capacity(x.len() - 1);
                merged.extend_from_slice(&x[..slot]);
                merged.push(wedge(&x[slot], &x[slot + 1]));
                merged.extend_from_slice(&x[slot + 2..]);
                f.call(&merged)
            },
        )
    }

    /// Multilinearity probe: for random rational combinations in one slot at
    /// a time, checks `f(…, αu + βv, …) = α f(…u…) + β f(…v…)`.
    pub fn probe_multilinear(&self, seed: u64, probes: usize, max_exponent: usize) -> bool {
        let mut rng = StdRng::seed_from_u64(seed);
        let random_form = |rng: &mut StdRng| {
            let mut poly = || {
                Polynomial::from_coeffs(
                    (0..=max_exponent)
                        .map(|_| rat(rng.random_range(-5..=5), rng.random_range(1..=4)))
                        .collect(),
                )
            };
            let p0 = poly();
            let p1 = poly();
            PolyForm::new(p0, p1)
        };
        for _ in 0..probes {
            let base: Vec<PolyForm> = (0..self.arity).map(|_| random_form(&mut rng)).collect();
            let slot = rng.random_range(0..self.arity);
            let u = random_form(&mut rng);
            let v = random_form(&mut rng);
            let alpha = rat(rng.random_range(-6..=6), rng.random_range(1..=5));
            let beta = rat(rng.random_range(-6..=6), rng.random_range(1..=5));
            let mut combo = base.clone();
            combo[slot] = u.scale(&alpha).add(&v.scale(&beta));
            let mut with_u = base.clone();
            with_u[slot] = u;
            let mut with_v = base;
            with_v[slot] = v;
            let lhs = self.call(&combo);
            let rhs = self
                .call(&with_u)
                .scale(&alpha)
                .add(&self.call(&with_v).scale(&beta));
            if lhs != rhs {
                return false;
            }
        }
        true
    }
}

/// `∪ ∘ (f ⊗ g)` with the Koszul sign of `conv`.
pub fn cup_tensor(f: &MultiMap, g: &MultiMap, conv: SignConvention) -> MultiMap {
    let (f, g) = (f.clone(), g.clone());
    let split = f.arity;
    let (df, dg) = (f.degree(), g.degree());
    MultiMap::new(
        format!("{}·{}", paren(&f.label), paren(&g.label)),
        f.arity + g.arity,
        f.shifted_degree + g.shifted_degree + 1,
        move |x, degs| {
            let negate = match conv {
                SignConvention::A => conv.koszul(dg, degs, split, x.len()),
                SignConvention::B => conv.koszul(df, degs, 0, split),
            };
            let left = f.call(&x[..split]);
            if left.is_zero() {
                return left;
            }
            let v = cup(&left, &g.call(&x[split..]));
            if negate {
                v.neg()
            } else {
                v
            }
        },
    )
}

fn paren(label: &str) -> String {
    if label.contains([' ', '+', '-']) {
        format!("({label})")
    } else {
        label.to_string()
    }
}

/// `∂f = δ ∘ f - (-1)^{|f|} Σ_i ± f ∘ (1 ⊗ … ⊗ d ⊗ … ⊗ 1)`, the slot signs
/// following `conv`.
pub fn hom_boundary(f: &MultiMap, conv: SignConvention) -> MultiMap {
    let inner = f.clone();
    let outer_negate = f.degree() % 2 == 0;
    MultiMap::new(
        format!("∂({})", f.label),
        f.arity,
        f.shifted_degree + 1,
        move |x, degs| {
            let mut acc = delta(&inner.call(x));
            let mut slot = x.to_vec();
            for i in 0..x.len() {
                if degs[i] != 0 {
                    continue;
                }
                slot[i] = d_form(&x[i]);
                let mut term = inner.call(&slot);
                slot[i] = x[i].clone();
                if term.is_zero() {
                    continue;
                }
                if conv.koszul(1, degs, i, i + 1) != outer_negate {
                    term = term.neg();
                }
                acc = acc.add(&term);
            }
            acc
        },
    )
}

/// `I_n` itself, degree 0 in the suspended convention.
pub fn iterated(n: usize) -> MultiMap {
    assert!(n >= 1);
    let label = if n == 1 {
        "I".to_string()
    } else {
        format!("I{n}")
    };
    MultiMap::new(label, n, 0, |x, _| {
        iterated_integral(x).expect("arity >= 1")
    })
}

/// `(-1)^{(n-1)(n-2)/2}`, the sign picked up by a degree-0 suspended map of
/// arity `n` when its inputs are desuspended.
pub fn desuspension_sign(n: usize) -> i64 {
    let e = (n - 1) * n.saturating_sub(2) / 2;
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `p_n = (-1)^{(n-1)(n-2)/2} I_n`, the n-th component of the integration
/// morphism in the unsuspended Hom complex.
pub fn morphism_component(n: usize) -> MultiMap {
    let base = iterated(n);
    if desuspension_sign(n) == 1 {
        base.relabel(format!("p{n}"))
    } else {
        base.neg().relabel(format!("p{n}"))
    }
}

/// `K_n` of a context as a map of cohomological degree 0.
pub fn cumulant_map(ctx: &CumulantContext, n: usize) -> MultiMap {
    let ctx = ctx.clone();
    MultiMap::new(format!("K{n}"), n, n as i64 - 1, move |x, _| {
        cumulant(&ctx, x).expect("nonempty")
    })
}

/// Monomials `t^k` and `t^k dt` with `k ≤ max_exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TruncationGrid {
    pub max_exponent: usize,
}

impl TruncationGrid {
    pub fn new(max_exponent: usize) -> Self {
        Self { max_exponent }
    }

    /// `t^0 … t^D` then `dt … t^D dt`.
    pub fn basis(&self) -> Vec<PolyForm> {
        (0..=self.max_exponent)
            .map(PolyForm::t_pow)
            .chain((0..=self.max_exponent).map(PolyForm::t_pow_dt))
            .collect()
    }

    pub fn slot_size(&self) -> usize {
        2 * (self.max_exponent + 1)
    }

    pub fn tuple_count(&self, arity: usize) -> usize {
        self.slot_size().pow(arity as u32)
    }

    /// Tuple number `index` in lexicographic order, first slot slowest.
    pub fn tuple(&self, basis: &[PolyForm], arity: usize, mut index: usize) -> Vec<PolyForm> {
        let b = basis.len();
        let mut out = vec![PolyForm::zero(); arity];
        for slot in (0..arity).rev() {
            out[slot] = basis[index % b].clone();
            index /= b;
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of a grid comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub arity: usize,
    #[serde(rename = "grid_D")]
    pub grid_d: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_tuple: Option<Vec<PolyForm>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Cochain>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Cochain>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Compares two maps on every basis tuple of the grid. Multilinearity makes
/// a pass a proof of equality on the span of the truncated basis.
pub fn maps_equal_on_truncation(
    f: &MultiMap,
    g: &MultiMap,
    grid: TruncationGrid,
) -> Result<Verdict> {
    if f.arity != g.arity {
        return Err(Error::ArityMismatch {
            left: f.arity,
            right: g.arity,
        });
    }
    let basis = grid.basis();
    let arity = f.arity;
    let first_bad = (0..grid.tuple_count(arity))
        .into_par_iter()
        .find_first(|&i| {
            let x = grid.tuple(&basis, arity, i);
            f.call(&x) != g.call(&x)
        });
    let mut verdict = Verdict {
        check: format!("{} = {}", f.label, g.label),
        arity,
        grid_d: grid.max_exponent,
        status: Status::Pass,
        witness_tuple: None,
        lhs: None,
        rhs: None,
    };
    if let Some(i) = first_bad {
        let x = grid.tuple(&basis, arity, i);
        verdict.status = Status::Fail;
        verdict.lhs = Some(f.call(&x));
        verdict.rhs = Some(g.call(&x));
        verdict.witness_tuple = Some(x);
    }
    Ok(verdict)
}

pub fn is_zero_on_truncation(f: &MultiMap, grid: TruncationGrid) -> Verdict {
    maps_equal_on_truncation(f, &MultiMap::zero(f.arity, f.shifted_degree), grid)
        .expect("same arity")
}

/// Left minus right side of the n-th morphism relation between the two dgas
/// for an arbitrary family `p_1, p_2, …`:
///
/// `∂p_n - Σ_r (-1)^r p_{n-1}∘(1^r ⊗ ∧ ⊗ 1) + Σ_i (-1)^{i-1} ∪∘(p_i ⊗ p_{n-i})`.
pub fn relation_defect_map(
    family: &dyn Fn(usize) -> MultiMap,
    n: usize,
    conv: SignConvention,
) -> MultiMap {
    assert!(n >= 1);
    let mut defect = hom_boundary(&family(n), conv);
    if n >= 2 {
        let lower = family(n - 1);
        for r in 0..n - 1 {
            let term = lower.precompose_wedge(r);
            defect = if r % 2 == 0 {
                defect.sub(&term)
            } else {
                defect.add(&term)
            };
        }
        for i in 1..n {
            let term = cup_tensor(&family(i), &family(n - i), conv);
            defect = if i % 2 == 1 {
                defect.add(&term)
            } else {
                defect.sub(&term)
            };
        }
    }
    defect.relabel(format!("defect{n}"))
}

pub struct DefectReport {
    pub verdict: Verdict,
    pub defect: MultiMap,
}

/// The n-th relation for `(p_1, …, p_n)` built from iterated integrals,
/// tested against zero on the grid.
pub fn ainfty_relation_defect(
    n: usize,
    max_exponent: usize,
    conv: SignConvention,
) -> Result<DefectReport> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            range: ">= 1",
            got: 0,
        });
    }
    let defect = relation_defect_map(&morphism_component, n, conv);
    let mut verdict = is_zero_on_truncation(&defect, TruncationGrid::new(max_exponent));
    verdict.check = format!("ainfty relation n={n}");
    Ok(DefectReport { verdict, defect })
}

/// `H_2 = p_2`, `H_n = H_{n-1}∘(∧ ⊗ 1…) - ∪∘(p_1 ⊗ H_{n-1})`, with `∂H_n = K_n`.
pub fn homotopy_witness(n: usize, conv: SignConvention) -> Result<MultiMap> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            range: ">= 2",
            got: n as i64,
        });
    }
    let p1 = morphism_component(1);
    let mut h = morphism_component(2);
    for k in 3..=n {
        h = h
            .precompose_wedge(0)
            .sub(&cup_tensor(&p1, &h, conv))
            .relabel(format!("H{k}"));
    }
    Ok(h.relabel(format!("H{n}")))
}

/// The two null-homotopies of `K_3` built from `p_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum K3Variant {
    /// `p_2(ab, c) - p_1(a) p_2(b, c)`
    Left,
    /// `p_2(a, bc) - p_2(a, b) p_1(c)`
    Right,
}

impl FromStr for K3Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(K3Variant::Left),
            "right" => Ok(K3Variant::Right),
            other => Err(Error::UnknownVariant(other.to_string())),
        }
    }
}

pub fn alternate_witness_k3(variant: K3Variant, conv: SignConvention) -> MultiMap {
    let p1 = morphism_component(1);
    let p2 = morphism_component(2);
    match variant {
        K3Variant::Left => p2
            .precompose_wedge(0)
            .sub(&cup_tensor(&p1, &p2, conv))
            .relabel("p2(ab,c) - p1(a)p2(b,c)"),
        K3Variant::Right => p2
            .precompose_wedge(1)
            .sub(&cup_tensor(&p2, &p1, conv))
            .relabel("p2(a,bc) - p2(a,b)p1(c)"),
    }
}

/// `p_2(ab,c) - p_1(a)p_2(b,c) - p_2(a,bc) + p_2(a,b)p_1(c)`, the cycle
/// traced by the four edges of the square of `K_3`.
pub fn square_cycle(conv: SignConvention) -> MultiMap {
    alternate_witness_k3(K3Variant::Left, conv)
        .sub(&alternate_witness_k3(K3Variant::Right, conv))
        .relabel("square(p2)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    const A: SignConvention = SignConvention::A;

    #[test]
    fn boundary_of_integration_vanishes() {
        let d = hom_boundary(&iterated(1), A);
        assert!(is_zero_on_truncation(&d, TruncationGrid::new(8)).passed());
        let d = hom_boundary(&iterated(1), SignConvention::B);
        assert!(is_zero_on_truncation(&d, TruncationGrid::new(8)).passed());
    }

    #[test]
    fn boundary_of_zero_is_zero() {
        let z = MultiMap::zero(3, 0);
        assert!(is_zero_on_truncation(&hom_boundary(&z, A), TruncationGrid::new(2)).passed());
    }

    #[test]
    fn boundary_of_i2_at_t_dt() {
        let v = hom_boundary(&iterated(2), A)
            .evaluate(&[PolyForm::t_pow(1), PolyForm::dt()])
            .unwrap();
        assert_eq!(v, Cochain::edge(rat(1, 2)));
    }

    #[test]
    fn grid_witness_is_first_tuple() {
        let v =
            maps_equal_on_truncation(&iterated(2), &MultiMap::zero(2, 0), TruncationGrid::new(2))
                .unwrap();
        assert_eq!(v.status, Status::Fail);
        assert_eq!(v.witness_tuple, Some(vec![PolyForm::dt(), PolyForm::dt()]));
        assert_eq!(v.lhs, Some(Cochain::edge(rat(1, 2))));
        assert_eq!(v.rhs, Some(Cochain::zero()));
    }

    #[test]
    fn reflexive_and_arity_checked() {
        let g = TruncationGrid::new(4);
        assert!(maps_equal_on_truncation(&iterated(2), &iterated(2), g)
            .unwrap()
            .passed());
        assert_eq!(
            maps_equal_on_truncation(&iterated(2), &iterated(3), g).unwrap_err(),
            Error::ArityMismatch { left: 2, right: 3 }
        );
    }

    #[test]
    fn evaluate_rejects_wrong_count() {
        assert!(matches!(
            iterated(2).evaluate(&[PolyForm::dt()]),
            Err(Error::WrongInputCount {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn inhomogeneous_inputs_extend_multilinearly() {
        // I_2(1 + dt, dt) = I_2(dt, dt)
        let x = PolyForm::constant(int(1)).add(&PolyForm::dt());
        assert_eq!(
            iterated(2).evaluate(&[x, PolyForm::dt()]).unwrap(),
            Cochain::edge(rat(1, 2))
        );
    }

    #[test]
    fn witness_three_explicit_value() {
        // H_3(t, dt, dt) = I_2(t dt, dt) - I(t) ∪ I_2(dt, dt) = 1/6 - 0
        let h3 = homotopy_witness(3, A).unwrap();
        let x = [PolyForm::t_pow(1), PolyForm::dt(), PolyForm::dt()];
        let by_hand = iterated_integral(&[PolyForm::t_pow_dt(1), PolyForm::dt()])
            .unwrap()
            .sub(&cup(
                &crate::interval::integrate(&x[0]),
                &iterated_integral(&x[1..]).unwrap(),
            ));
        assert_eq!(h3.evaluate(&x).unwrap(), by_hand);
        assert_eq!(by_hand, Cochain::edge(rat(1, 6)));
        assert!(homotopy_witness(1, A).is_err());
    }

    #[test]
    fn desuspension_signs() {
        let s: Vec<i64> = (1..=6).map(desuspension_sign).collect();
        assert_eq!(s, vec![1, 1, -1, -1, 1, 1]);
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("left".parse::<K3Variant>().unwrap(), K3Variant::Left);
        assert!(matches!(
            "up".parse::<K3Variant>(),
            Err(Error::UnknownVariant(_))
        ));
        assert_eq!("B".parse::<SignConvention>().unwrap(), SignConvention::B);
        assert!("C".parse::<SignConvention>().is_err());
    }

    #[test]
    fn iterated_maps_are_multilinear() {
        for n in 1..=3 {
            assert!(iterated(n).probe_multilinear(7 + n as u64, 20, 3));
        }
        assert!(homotopy_witness(3, A).unwrap().probe_multilinear(3, 10, 2));
    }

    #[test]
    fn nonlinear_evaluator_is_caught() {
        let bad = MultiMap::new("sq", 1, 0, |x, _| {
            let c = crate::interval::integrate(&x[0]);
            cup(&c, &c)
        });
        assert!(!bad.probe_multilinear(1, 20, 2));
    }

    #[test]
    fn degree_bookkeeping() {
        assert_eq!(iterated(3).degree(), -2);
        let k = cumulant_map(&CumulantContext::integration(), 3);
        assert_eq!(k.degree(), 0);
        assert_eq!(homotopy_witness(4, A).unwrap().degree(), -1);
        assert_eq!(hom_boundary(&iterated(2), A).shifted_degree(), 1);
        assert_eq!(square_cycle(A).degree(), -1);
    }
}
