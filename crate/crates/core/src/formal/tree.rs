use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::cumulants::input_name;
use crate::error::{Error, Result};
use crate::rational::{to_display_string, to_fraction_string, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GeneratorKind {
    MSource,
    MTarget,
    P,
}

/// `m_k` of the source or target algebra, or the morphism component `p_k`.
///
/// The arity-1 operations `m_1` are the differentials; they are not tree
/// nodes but enter through the boundary operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub arity: usize,
}

impl Generator {
    pub fn m_source(arity: usize) -> Self {
        Self {
            kind: GeneratorKind::MSource,
            arity,
        }
    }

    pub fn m_target(arity: usize) -> Self {
        Self {
            kind: GeneratorKind::MTarget,
            arity,
        }
    }

    pub fn p(arity: usize) -> Self {
        Self {
            kind: GeneratorKind::P,
            arity,
        }
    }

    pub fn is_m(self) -> bool {
        self.kind != GeneratorKind::P
    }

    /// 1 for `m_k`, 0 for `p_k`.
    pub fn shifted_degree(self) -> i64 {
        i64::from(self.is_m())
    }

    pub fn name(self) -> String {
        match self.kind {
            GeneratorKind::P => format!("p{}", self.arity),
            _ => format!("m{}", self.arity),
        }
    }
}

/// Which algebra a subtree lands in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sort {
    Source,
    Target,
}

/// A planar composite of generators. Leaves are the inputs, numbered left to
/// right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormalTree {
    Leaf,
    Node(Generator, Vec<FormalTree>),
}

impl FormalTree {
    /// Checked constructor: arity must match and be at least 2 for `m`.
    pub fn node(generator: Generator, children: Vec<FormalTree>) -> Result<Self> {
        if children.len() != generator.arity || generator.arity == 0 {
            return Err(Error::IllTyped(format!(
                "{} with {} children",
                generator.name(),
                children.len()
            )));
        }
        if generator.is_m() && generator.arity < 2 {
            return Err(Error::IllTyped(
                "m1 is the differential, not a node".to_string(),
            ));
        }
        Ok(FormalTree::Node(generator, children))
    }

    /// A generator applied to leaves.
    pub fn corolla(generator: Generator) -> Self {
        FormalTree::Node(generator, vec![FormalTree::Leaf; generator.arity])
    }

    pub fn leaves(&self) -> usize {
        match self {
            FormalTree::Leaf => 1,
            FormalTree::Node(_, cs) => cs.iter().map(FormalTree::leaves).sum(),
        }
    }

    /// Total shifted degree: the number of `m` nodes.
    pub fn degree(&self) -> i64 {
        match self {
            FormalTree::Leaf => 0,
            FormalTree::Node(g, cs) => {
                g.shifted_degree() + cs.iter().map(FormalTree::degree).sum::<i64>()
            }
        }
    }

    /// Dimension of the face: `Σ (k - 2)` over `m_k` plus `Σ (k - 1)` over `p_k`.
    pub fn dimension(&self) -> usize {
        match self {
            FormalTree::Leaf => 0,
            FormalTree::Node(g, cs) => {
                let own = if g.is_m() { g.arity - 2 } else { g.arity - 1 };
                own + cs.iter().map(FormalTree::dimension).sum::<usize>()
            }
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        self.visit(&mut |g| out.push(g));
        out
    }

    fn visit(&self, f: &mut impl FnMut(Generator)) {
        if let FormalTree::Node(g, cs) = self {
            f(*g);
            for c in cs {
                c.visit(f);
            }
        }
    }

    /// True if some `m_k` with `k ≥ 3` occurs.
    pub fn has_higher_m(&self) -> bool {
        self.generators().iter().any(|g| g.is_m() && g.arity >= 3)
    }

    /// Checks the typing rules and returns the sort of the root: `m` source
    /// nodes take source inputs, `p` nodes turn sources into targets and `m`
    /// target nodes take targets.
    pub fn sort(&self) -> Result<Sort> {
        match self {
            FormalTree::Leaf => Ok(Sort::Source),
            FormalTree::Node(g, cs) => {
                if cs.len() != g.arity || (g.is_m() && g.arity < 2) || g.arity == 0 {
                    return Err(Error::IllTyped(format!(
                        "{} with {} children",
                        g.name(),
                        cs.len()
                    )));
                }
                let (want, out) = match g.kind {
                    GeneratorKind::MSource => (Sort::Source, Sort::Source),
                    GeneratorKind::P => (Sort::Source, Sort::Target),
                    GeneratorKind::MTarget => (Sort::Target, Sort::Target),
                };
                for c in cs {
                    if c.sort()? != want {
                        return Err(Error::IllTyped(format!(
                            "{} expects {want:?} inputs in {}",
                            g.name(),
                            self.point_free()
                        )));
                    }
                }
                Ok(out)
            }
        }
    }

    /// Reverses the order of children everywhere.
    pub fn mirror(&self) -> FormalTree {
        match self {
            FormalTree::Leaf => FormalTree::Leaf,
            FormalTree::Node(g, cs) => {
                FormalTree::Node(*g, cs.iter().rev().map(FormalTree::mirror).collect())
            }
        }
    }

    /// Point-free notation, `m2(p1⊗p2)`, `p2(1⊗m2)`.
    pub fn point_free(&self) -> String {
        match self {
            FormalTree::Leaf => "1".to_string(),
            FormalTree::Node(g, cs) => {
                if cs.iter().all(|c| *c == FormalTree::Leaf) {
                    g.name()
                } else {
                    let inner: Vec<String> = cs.iter().map(FormalTree::point_free).collect();
                    format!("{}({})", g.name(), inner.join("⊗"))
                }
            }
        }
    }

    /// Notation on named inputs: binary products are juxtaposed, so the
    /// terms read `p2(ab,c)` and `p1(a)p2(b,c)`.
    pub fn applied(&self) -> String {
        let mut next = 0;
        self.applied_from(&mut next)
    }

    fn applied_from(&self, next: &mut usize) -> String {
        match self {
            FormalTree::Leaf => {
                let s = input_name(*next).to_string();
                *next += 1;
                s
            }
            FormalTree::Node(g, cs) => {
                let parts: Vec<String> = cs.iter().map(|c| c.applied_from(next)).collect();
                match (g.kind, g.arity) {
                    (GeneratorKind::P, _) => format!("{}({})", g.name(), parts.join(",")),
                    (_, 2) => cs
                        .iter()
                        .zip(parts)
                        .map(|(c, s)| match c {
                            FormalTree::Node(h, _) if h.is_m() && h.arity == 2 => format!("({s})"),
                            _ => s,
                        })
                        .collect(),
                    _ => format!("{}({})", g.name(), parts.join(",")),
                }
            }
        }
    }
}

impl fmt::Display for FormalTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.point_free())
    }
}

/// A rational combination of trees with zero coefficients pruned.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<FormalTree, Rational>,
}

impl FormalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_tree(t: FormalTree) -> Self {
        let mut s = Self::zero();
        s.add_term(t, Rational::one());
        s
    }

    pub fn add_term(&mut self, t: FormalTree, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> FormalSum {
        let mut out = FormalSum::zero();
        for (t, v) in &self.terms {
            out.add_term(t.clone(), v * c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FormalTree, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &FormalTree) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    /// Drops every term containing some `m_k` with `k ≥ 3`.
    pub fn associative_part(&self) -> FormalSum {
        FormalSum {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| !t.has_higher_m())
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn mirror(&self) -> FormalSum {
        FormalSum {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mirror(), c.clone()))
                .collect(),
        }
    }

    fn render(
        &self,
        f: &mut fmt::Formatter<'_>,
        show: impl Fn(&FormalTree) -> String,
    ) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let negative = *c < Rational::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{}*", to_display_string(&mag))?;
            }
            f.write_str(&show(t))?;
        }
        Ok(())
    }

    /// Applied notation, `p2(ab,c) - p1(a)p2(b,c)`.
    pub fn applied(&self) -> String {
        struct Applied<'a>(&'a FormalSum);
        impl fmt::Display for Applied<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.render(f, FormalTree::applied)
            }
        }
        Applied(self).to_string()
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(f, FormalTree::point_free)
    }
}

#[derive(Serialize)]
struct TermRecord {
    coefficient: String,
    term: String,
    applied: String,
}

/// A list of `{coefficient, term, applied}` records.
impl Serialize for FormalSum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(t, c)| TermRecord {
                coefficient: to_fraction_string(c),
                term: t.point_free(),
                applied: t.applied(),
            })
            .collect();
        records.serialize(s)
    }
}
