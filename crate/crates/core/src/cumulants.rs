//! Boolean cumulants of a chain map between the interval algebras.
//!
//! `K_n(a_1,…,a_n) = Σ ± e(a_1⋯a_i) e(a_{i+1}⋯) ⋯ e(⋯a_n)` over all
//! compositions of `n`, the sign being `(-1)^{blocks - 1}`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::interval::{cup, d_form, delta, integrate, wedge, Cochain, PolyForm};
use crate::rational;

/// An ordered partition of `n` into positive blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    blocks: Vec<usize>,
}

impl Composition {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::EmptyInput);
        }
        if blocks.contains(&0) {
            return Err(Error::OutOfRange {
                what: "block size",
                range: ">= 1",
                got: 0,
            });
        }
        Ok(Self { blocks })
    }

    /// Composition of `n` whose blocks end at the given cut positions
    /// (cut `i` separates inputs `i` and `i + 1`, `1 ≤ i < n`).
    pub fn from_cuts(n: usize, cuts: &[usize]) -> Result<Self> {
        let mut sorted = cuts.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "n",
                range: ">= 1",
                got: 0,
            });
        }
        if let Some(&bad) = sorted.iter().find(|&&c| c == 0 || c >= n) {
            return Err(Error::OutOfRange {
                what: "cut position",
                range: "1..n-1",
                got: bad as i64,
            });
        }
        let mut blocks = Vec::with_capacity(sorted.len() + 1);
        let mut prev = 0;
        for c in sorted.into_iter().chain(std::iter::once(n)) {
            blocks.push(c - prev);
            prev = c;
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Cut positions, ascending.
    pub fn cuts(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .scan(0, |acc, b| {
                *acc += b;
                Some(*acc)
            })
            .take(self.blocks.len() - 1)
            .collect()
    }

    /// Bitmask of the cut set, cut `i` at bit `i - 1`.
    pub fn cut_mask(&self) -> u64 {
        self.cuts().iter().fold(0, |m, c| m | 1 << (c - 1))
    }

    /// Half-open index ranges of the blocks.
    pub fn ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.blocks
            .iter()
            .map(|b| {
                let r = start..start + b;
                start += b;
                r
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `2^{n-1}` compositions of `n`, ordered by cut-set bitmask
/// (`(3), (1,2), (2,1), (1,1,1)` for `n = 3`).
pub fn compositions(n: usize) -> Result<Vec<Composition>> {
    if n == 0 || n > 63 {
        return Err(Error::OutOfRange {
            what: "n",
            range: "1..=63",
            got: n as i64,
        });
    }
    Ok((0u64..1 << (n - 1))
        .map(|mask| {
            let cuts: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            Composition::from_cuts(n, &cuts).expect("cuts in range")
        })
        .collect())
}

/// `(-1)^{blocks - 1}`
pub fn composition_sign(c: &Composition) -> i8 {
    if c.blocks.len() % 2 == 1 {
        1
    } else {
        -1
    }
}

type ChainMapFn = dyn Fn(&PolyForm) -> Cochain + Send + Sync;
type SourceProductFn = dyn Fn(&PolyForm, &PolyForm) -> PolyForm + Send + Sync;
type TargetProductFn = dyn Fn(&Cochain, &Cochain) -> Cochain + Send + Sync;

/// A chain map from forms to cochains together with the products used to
/// assemble its cumulants.
#[derive(Clone)]
pub struct CumulantContext {
    chain_map: Arc<ChainMapFn>,
    source_product: Arc<SourceProductFn>,
    target_product: Arc<TargetProductFn>,
}

/// Monomials `t^k`, `t^k dt` with `k` up to this bound are used to check
/// that a context's map commutes with the differentials.
pub const CHAIN_MAP_CHECK_DEGREE: usize = 8;

impl CumulantContext {
    /// Fails with [`Error::NotChainMap`] unless `chain_map ∘ d = δ ∘ chain_map`
    /// on every monomial of degree at most [`CHAIN_MAP_CHECK_DEGREE`].
    pub fn new(
        chain_map: impl Fn(&PolyForm) -> Cochain + Send + Sync + 'static,
        source_product: impl Fn(&PolyForm, &PolyForm) -> PolyForm + Send + Sync + 'static,
        target_product: impl Fn(&Cochain, &Cochain) -> Cochain + Send + Sync + 'static,
    ) -> Result<Self> {
        for k in 0..=CHAIN_MAP_CHECK_DEGREE {
            for a in [PolyForm::t_pow(k), PolyForm::t_pow_dt(k)] {
                if chain_map(&d_form(&a)) != delta(&chain_map(&a)) {
                    return Err(Error::NotChainMap {
                        input: a.to_string(),
                    });
                }
            }
        }
        Ok(Self {
            chain_map: Arc::new(chain_map),
            source_product: Arc::new(source_product),
            target_product: Arc::new(target_product),
        })
    }

    /// The integration map with wedge and cup.
    pub fn integration() -> Self {
        Self::new(integrate, wedge, cup).expect("integration is a chain map")
    }

    /// `f + g dt ↦ (f(0), f(0); 0)`, an algebra morphism and chain map
    /// whose cumulants of order at least 2 all vanish.
    pub fn evaluation_at_zero() -> Self {
        Self::new(
            |a| {
                let v = a.part0.at_zero();
                Cochain::vertices(v.clone(), v)
            },
            wedge,
            cup,
        )
        .expect("evaluation at a point is a chain map")
    }

    pub fn apply(&self, a: &PolyForm) -> Cochain {
        (self.chain_map)(a)
    }

    pub fn source_product(&self, a: &PolyForm, b: &PolyForm) -> PolyForm {
        (self.source_product)(a, b)
    }

    pub fn target_product(&self, a: &Cochain, b: &Cochain) -> Cochain {
        (self.target_product)(a, b)
    }

    /// `e(x_1 ⋯ x_k)` with the product nested to the left.
    fn block_image(&self, block: &[PolyForm]) -> Cochain {
        let (first, rest) = block.split_first().expect("nonempty block");
        let prod = rest
            .iter()
            .fold(first.clone(), |acc, x| self.source_product(&acc, x));
        self.apply(&prod)
    }
}

/// One summand of the direct formula, before summation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CumulantTerm {
    pub composition: Composition,
    pub sign: i8,
    /// Unsigned product of the block images.
    pub value: Cochain,
}

/// Every term of the direct formula in [`compositions`] order.
pub fn cumulant_terms(ctx: &CumulantContext, inputs: &[PolyForm]) -> Result<Vec<CumulantTerm>> {
    if inputs.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(compositions(inputs.len())?
        .into_iter()
        .map(|c| {
            let value = c
                .ranges()
                .into_iter()
                .map(|r| ctx.block_image(&inputs[r]))
                .reduce(|acc, v| ctx.target_product(&acc, &v))
                .expect("at least one block");
            CumulantTerm {
                sign: composition_sign(&c),
                composition: c,
                value,
            }
        })
        .collect())
}

pub fn cumulant(ctx: &CumulantContext, inputs: &[PolyForm]) -> Result<Cochain> {
    Ok(cumulant_terms(ctx, inputs)?
        .into_iter()
        .fold(Cochain::zero(), |acc, t| {
            acc.add(&t.value.scale(&rational::int(t.sign.into())))
        }))
}

/// `K_n(a_1,…) = K_{n-1}(a_1 a_2, a_3,…) - e(a_1) K_{n-1}(a_2,…)`.
pub fn cumulant_recursive(ctx: &CumulantContext, inputs: &[PolyForm]) -> Result<Cochain> {
    match inputs {
        [] => Err(Error::EmptyInput),
        [a] => Ok(ctx.apply(a)),
        [a1, a2, rest @ ..] => {
            let mut merged = Vec::with_capacity(inputs.len() - 1);
            merged.push(ctx.source_product(a1, a2));
            merged.extend_from_slice(rest);
            let head = cumulant_recursive(ctx, &merged)?;
            let tail = cumulant_recursive(ctx, &inputs[1..])?;
            Ok(head.sub(&ctx.target_product(&ctx.apply(a1), &tail)))
        }
    }
}

/// Input names `a, b, c, …` used in symbolic output.
pub fn input_name(i: usize) -> char {
    (b'a' + (i % 26) as u8) as char
}

/// Symbolic `K_n` in the form `e(abc) - e(a)e(bc) - e(ab)e(c) + e(a)e(b)e(c)`.
pub fn symbolic_formula(n: usize) -> Result<String> {
    let mut out = String::new();
    for (i, c) in compositions(n)?.iter().enumerate() {
        let sign = composition_sign(c);
        match (i, sign) {
            (0, 1) => {}
            (0, _) => out.push('-'),
            (_, 1) => out.push_str(" + "),
            (_, _) => out.push_str(" - "),
        }
        for r in c.ranges() {
            out.push_str("e(");
            out.extend(r.map(input_name));
            out.push(')');
        }
    }
    Ok(out)
}
