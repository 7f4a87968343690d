//! Formal composites evaluated in the interval model, and the comparison of
//! the formal boundary with the concrete one.
//!
//! The interval algebras are read in the shifted convention:
//! `m_1 = -d` (resp. `-δ`), `m_2(x, y) = (-1)^{|x|} x·y` with `|x|` the
//! unshifted degree, `m_k = 0` for `k ≥ 3` and `p_k = I_k`. Inputs of form
//! degree `d` have shifted degree `d - 1`. Desuspending with the mirrored
//! Koszul rule moves the product sign to the right factor,
//! `m_2(x, y) = (-1)^{|y|} x·y`, and turns `p_k` into `(-1)^{k-1} I_k`.

use num_traits::One;

use crate::cube::{cell_boundary, CubeCell, Letter};
use crate::error::{Error, Result};
use crate::hom::{
    is_zero_on_truncation, maps_equal_on_truncation, morphism_component, relation_defect_map,
    MultiMap, SignConvention, TruncationGrid, Verdict,
};
use crate::interval::{cup, d_form, delta, iterated_integral, wedge, Cochain, PolyForm};
use crate::rational::Rational;

use super::boundary::{formal_boundary, tree_boundary};
use super::tree::{FormalSum, FormalTree, Generator, GeneratorKind, Sort};

/// Scalars `c_k` multiplying the image of `p_k`; all ones is the
/// integration morphism.
#[derive(Clone, Debug, Default)]
pub struct IntervalModel {
    pub p_scales: Vec<Rational>,
}

impl IntervalModel {
    pub fn with_scales(p_scales: Vec<Rational>) -> Self {
        Self { p_scales }
    }

    pub fn scale(&self, k: usize) -> Rational {
        self.p_scales
            .get(k - 1)
            .cloned()
            .unwrap_or_else(Rational::one)
    }
}

#[derive(Clone, Debug)]
enum Value {
    Form(PolyForm),
    Cochain(Cochain),
}

fn parity(x: i64) -> bool {
    x.rem_euclid(2) == 1
}

/// Evaluates `t` on homogeneous inputs; returns the value and its shifted
/// degree.
fn eval(
    t: &FormalTree,
    x: &[PolyForm],
    shifted: &[i64],
    model: &IntervalModel,
    conv: SignConvention,
) -> (Value, i64) {
    match t {
        FormalTree::Leaf => (Value::Form(x[0].clone()), shifted[0]),
        FormalTree::Node(g, children) => {
            let mut values = Vec::with_capacity(children.len());
            let mut negate = false;
            let mut start = 0;
            let mut out_degree = g.shifted_degree();
            for c in children {
                let len = c.leaves();
                let passed: i64 = match conv {
                    SignConvention::A => shifted[..start].iter().sum(),
                    SignConvention::B => shifted[start + len..].iter().sum(),
                };
                if parity(c.degree()) && parity(passed) {
                    negate = !negate;
                }
                let (v, d) = eval(
                    c,
                    &x[start..start + len],
                    &shifted[start..start + len],
                    model,
                    conv,
                );
                out_degree += d;
                values.push((v, d));
                start += len;
            }
            let value = apply(*g, &values, model, conv);
            let value = if negate { neg(value) } else { value };
            (value, out_degree)
        }
    }
}

fn neg(v: Value) -> Value {
    match v {
        Value::Form(f) => Value::Form(f.scale(&-Rational::one())),
        Value::Cochain(c) => Value::Cochain(c.neg()),
    }
}

fn apply(
    g: Generator,
    values: &[(Value, i64)],
    model: &IntervalModel,
    conv: SignConvention,
) -> Value {
    // shifted degree of the factor that carries the product sign
    let signed = |da: i64, db: i64| match conv {
        SignConvention::A => parity(da + 1),
        SignConvention::B => parity(db + 1),
    };
    match (g.kind, g.arity) {
        (GeneratorKind::P, k) => {
            let forms: Vec<PolyForm> = values
                .iter()
                .map(|(v, _)| match v {
                    Value::Form(f) => f.clone(),
                    Value::Cochain(_) => unreachable!("typed trees feed forms to p"),
                })
                .collect();
            let c = iterated_integral(&forms)
                .expect("arity >= 1")
                .scale(&model.scale(k));
            Value::Cochain(if conv == SignConvention::B && k % 2 == 0 {
                c.neg()
            } else {
                c
            })
        }
        (GeneratorKind::MSource, 2) => match (&values[0], &values[1]) {
            ((Value::Form(a), da), (Value::Form(b), db)) => {
                let w = wedge(a, b);
                Value::Form(if signed(*da, *db) {
                    w.scale(&-Rational::one())
                } else {
                    w
                })
            }
            _ => unreachable!("typed trees multiply forms"),
        },
        (GeneratorKind::MTarget, 2) => match (&values[0], &values[1]) {
            ((Value::Cochain(a), da), (Value::Cochain(b), db)) => {
                let c = cup(a, b);
                Value::Cochain(if signed(*da, *db) { c.neg() } else { c })
            }
            _ => unreachable!("typed trees multiply cochains"),
        },
        (GeneratorKind::MSource, _) => Value::Form(PolyForm::zero()),
        (GeneratorKind::MTarget, _) => Value::Cochain(Cochain::zero()),
    }
}

fn target_tree(t: &FormalTree) -> Result<()> {
    match t.sort()? {
        Sort::Target => Ok(()),
        Sort::Source => Err(Error::IllTyped(format!("{t} lands in the source algebra"))),
    }
}

fn shifted_degrees(degs: &[u8]) -> Vec<i64> {
    degs.iter().map(|&d| d as i64 - 1).collect()
}

fn value_cochain(v: Value) -> Cochain {
    match v {
        Value::Cochain(c) => c,
        Value::Form(_) => unreachable!("checked target sort"),
    }
}

/// The composite as a multilinear map (target-valued trees only).
pub fn interpret_tree(
    t: &FormalTree,
    model: &IntervalModel,
    conv: SignConvention,
) -> Result<MultiMap> {
    target_tree(t)?;
    let tree = t.clone();
    let model = model.clone();
    let arity = t.leaves();
    Ok(MultiMap::new(
        t.point_free(),
        arity,
        t.degree(),
        move |x, degs| value_cochain(eval(&tree, x, &shifted_degrees(degs), &model, conv).0),
    ))
}

/// Linear combination of interpreted trees on `arity` inputs.
pub fn interpret_sum(
    s: &FormalSum,
    arity: usize,
    model: &IntervalModel,
    conv: SignConvention,
) -> Result<MultiMap> {
    let mut parts = Vec::new();
    for (t, c) in s.terms() {
        if t.leaves() != arity {
            return Err(Error::ArityMismatch {
                left: arity,
                right: t.leaves(),
            });
        }
        target_tree(t)?;
        parts.push((t.clone(), c.clone()));
    }
    let model = model.clone();
    Ok(MultiMap::new(s.to_string(), arity, 0, move |x, degs| {
        let sh = shifted_degrees(degs);
        parts.iter().fold(Cochain::zero(), |acc, (t, c)| {
            acc.add(&value_cochain(eval(t, x, &sh, &model, conv).0).scale(c))
        })
    }))
}

/// `m_1 ∘ T - (-1)^{|T|} T ∘ (Σ 1 ⊗ … ⊗ m_1 ⊗ … ⊗ 1)` in the interval model.
pub fn concrete_boundary(
    t: &FormalTree,
    model: &IntervalModel,
    conv: SignConvention,
) -> Result<MultiMap> {
    target_tree(t)?;
    let tree = t.clone();
    let model = model.clone();
    let degree = t.degree();
    Ok(MultiMap::new(
        format!("∂({})", t.point_free()),
        t.leaves(),
        t.degree() + 1,
        move |x, degs| {
            let sh = shifted_degrees(degs);
            let value = value_cochain(eval(&tree, x, &sh, &model, conv).0);
            let mut acc = delta(&value).neg();
            let mut slot = x.to_vec();
            for i in 0..x.len() {
                if degs[i] != 0 {
                    continue;
                }
                // m_1 = -d raises the form degree, so the shifted degree of slot i becomes 0
                slot[i] = d_form(&x[i]).scale(&-Rational::one());
                let mut sh_i = sh.clone();
                sh_i[i] += 1;
                let term = value_cochain(eval(&tree, &slot, &sh_i, &model, conv).0);
                slot[i] = x[i].clone();
                let passed: i64 = match conv {
                    SignConvention::A => sh[..i].iter().sum(),
                    SignConvention::B => sh[i + 1..].iter().sum(),
                };
                // acc -= (-1)^{|T| + passed} term
                if parity(degree + passed) {
                    acc = acc.add(&term);
                } else {
                    acc = acc.sub(&term);
                }
            }
            acc
        },
    ))
}

/// Compares the interpretation of the formal boundary of `t` with the
/// concrete boundary of its interpretation.
pub fn cross_layer_check(
    t: &FormalTree,
    max_exponent: usize,
    model: &IntervalModel,
    conv: SignConvention,
) -> Result<Verdict> {
    let formal = tree_boundary(t, conv)?;
    let lhs = concrete_boundary(t, model, conv)?;
    let rhs = interpret_sum(&formal, t.leaves(), model, conv)?;
    let mut v = maps_equal_on_truncation(&lhs, &rhs, TruncationGrid::new(max_exponent))?;
    v.check = format!("formal vs concrete {}", t.point_free());
    Ok(v)
}

/// Arities `n ≤ n_max` at which the scaled family fails its relation,
/// computed once through the formal layer and once through the Hom complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectSupport {
    pub formal: Vec<usize>,
    pub hom: Vec<usize>,
}

pub fn perturbed_defect_support(
    model: &IntervalModel,
    n_max: usize,
    max_exponent: usize,
    conv: SignConvention,
) -> Result<DefectSupport> {
    let mut formal = Vec::new();
    let mut hom = Vec::new();
    let scaled = |k: usize| {
        let c = model.scale(k);
        if c.is_one() {
            morphism_component(k)
        } else {
            morphism_component(k).scale(c)
        }
    };
    for n in 1..=n_max {
        let p = FormalTree::corolla(Generator::p(n));
        if !cross_layer_check(&p, max_exponent, model, conv)?.passed() {
            formal.push(n);
        }
        let defect = relation_defect_map(&scaled, n, conv);
        if !is_zero_on_truncation(&defect, TruncationGrid::new(max_exponent)).passed() {
            hom.push(n);
        }
    }
    Ok(DefectSupport { formal, hom })
}

/// The composite of an associative cube cell: per block a `p_{f+1}` whose
/// arguments are left-nested source products, blocks combined by left-nested
/// target products.
pub fn cell_tree(cell: &CubeCell) -> FormalTree {
    let word = cell.word();
    let left_nested = |items: Vec<FormalTree>, g: Generator| {
        items
            .into_iter()
            .reduce(|acc, t| FormalTree::Node(g, vec![acc, t]))
            .expect("nonempty")
    };
    let mut blocks = Vec::new();
    let mut groups: Vec<Vec<FormalTree>> = vec![vec![FormalTree::Leaf]];
    let close = |groups: Vec<Vec<FormalTree>>| {
        let args: Vec<FormalTree> = groups
            .into_iter()
            .map(|g| left_nested(g, Generator::m_source(2)))
            .collect();
        FormalTree::Node(Generator::p(args.len()), args)
    };
    for &l in word {
        match l {
            Letter::Low => groups.last_mut().expect("nonempty").push(FormalTree::Leaf),
            Letter::Free => groups.push(vec![FormalTree::Leaf]),
            Letter::High => {
                blocks.push(close(std::mem::replace(
                    &mut groups,
                    vec![vec![FormalTree::Leaf]],
                )));
            }
        }
    }
    blocks.push(close(groups));
    left_nested(blocks, Generator::m_target(2))
}

/// Reads an associative composite back as a cube word: cuts inside a source
/// product are `LOW`, between arguments of one `p` are `FREE`, between
/// different `p` nodes are `HIGH`. `None` if some `m_k` with `k ≥ 3` occurs.
pub fn to_cube_word(t: &FormalTree) -> Option<CubeCell> {
    fn walk(t: &FormalTree, word: &mut Vec<Letter>, pending: &mut Option<Letter>) -> Option<()> {
        match t {
            FormalTree::Leaf => {
                if let Some(l) = pending.take() {
                    word.push(l);
                }
                Some(())
            }
            FormalTree::Node(g, cs) => {
                if g.is_m() && g.arity != 2 {
                    return None;
                }
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        *pending = Some(match g.kind {
                            GeneratorKind::MSource => Letter::Low,
                            GeneratorKind::P => Letter::Free,
                            GeneratorKind::MTarget => Letter::High,
                        });
                    }
                    walk(c, word, pending)?;
                }
                Some(())
            }
        }
    }
    let mut word = Vec::new();
    walk(t, &mut word, &mut None)?;
    Some(CubeCell::new(word))
}

/// Checks that dropping `m_k` (`k ≥ 3`) from the formal boundary of the
/// composite of `cell` leaves exactly one term per cube facet, and that the
/// formal and cube signs differ by a factor depending only on the cell.
pub fn associative_specialization_matches(cell: &CubeCell, conv: SignConvention) -> Result<bool> {
    if cell.is_vertex() {
        return Ok(true);
    }
    let formal = formal_boundary(&FormalSum::from_tree(cell_tree(cell)), conv)?.associative_part();
    let cube = cell_boundary(cell)?;
    if formal.len() != cube.len() {
        return Ok(false);
    }
    let mut words = Vec::new();
    for (t, _) in formal.terms() {
        match to_cube_word(t) {
            Some(w) => words.push(w),
            None => return Ok(false),
        }
    }
    words.sort();
    let mut facets: Vec<CubeCell> = cube.iter().map(|(_, c)| c.clone()).collect();
    facets.sort();
    Ok(words == facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_trees_round_trip() {
        for w in ["FF", "LH", "FHL", "LFHF", "HHH"] {
            let cell: CubeCell = w.parse().unwrap();
            assert_eq!(to_cube_word(&cell_tree(&cell)).unwrap(), cell, "{w}");
        }
        assert_eq!(cell_tree(&"LF".parse().unwrap()).applied(), "p2(ab,c)");
        assert_eq!(cell_tree(&"FH".parse().unwrap()).applied(), "p2(a,b)p1(c)");
    }

    #[test]
    fn higher_products_have_no_word() {
        assert!(to_cube_word(&FormalTree::corolla(Generator::m_source(3))).is_none());
    }

    #[test]
    fn source_trees_are_not_interpreted() {
        let t = FormalTree::corolla(Generator::m_source(2));
        assert!(interpret_tree(&t, &IntervalModel::default(), SignConvention::A).is_err());
    }
}
