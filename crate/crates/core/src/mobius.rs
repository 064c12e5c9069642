//! The Möbius function μ̃ of the Bruhat order restricted to W⁰, three ways:
//!
//! * the poset recursion over an enumerated interval (the oracle),
//! * Deodhar's criterion: `μ̃(u, v) = (−1)^{ℓ(v)−ℓ(u)}` when no `u s_i ≤ v`
//!   for `i ∈ I₀`, and 0 otherwise,
//! * the closed formula for superregular `y = w t_λ`: `μ̃(x, y)` is nonzero
//!   exactly when `x = w′ t_{λ+M(w,w′)}`.
//!
//! All three return 0 when `x ≰ y`.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::affine::{AffineElement, AffineWeylGroup};
use crate::context::Context;
use crate::error::{precondition, Result};
use crate::regularity::{certify, RegularityConfig};
use crate::weyl::WeylElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Deodhar,
    Superregular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MobiusResult {
    pub value: i64,
    pub method: Method,
    /// For Deodhar's criterion, a 1-based index `i` with `u s_i ≤ v`.
    pub witness: Option<usize>,
}

fn sign(gap: i64) -> i64 {
    if gap.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn require_grassmannian(g: &AffineWeylGroup, xs: &[&AffineElement]) -> Result<()> {
    for x in xs {
        if !g.is_affine_grassmannian(x) {
            return Err(precondition!("{} is not affine Grassmannian", g.format(x)));
        }
    }
    Ok(())
}

/// The part of the Bruhat order below `top` and at or above length `floor`,
/// with up-sets stored as bitsets.
#[derive(Debug)]
pub struct DownSet {
    top: AffineElement,
    floor: u32,
    elements: Vec<AffineElement>,
    lengths: Vec<u32>,
    index: HashMap<AffineElement, usize>,
    grassmannian: FixedBitSet,
    /// `up[i]` holds every `j` with `elements[i] ≤ elements[j]`.
    up: Vec<FixedBitSet>,
}

impl DownSet {
    /// Enumerates by descending through covers, level by level, so every
    /// element precedes everything below it.
    pub fn new(g: &AffineWeylGroup, top: &AffineElement, floor: u32) -> Self {
        let mut elements = vec![*top];
        let mut lengths = vec![g.length(top)];
        let mut index = HashMap::from([(*top, 0usize)]);
        let mut parents: Vec<Vec<usize>> = vec![Vec::new()];
        let mut level = vec![0usize];
        while !level.is_empty() {
            let mut next = Vec::new();
            for &p in &level {
                if lengths[p] <= floor {
                    continue;
                }
                for (c, _) in g.generic_covers(&elements[p]) {
                    let ci = *index.entry(c).or_insert_with(|| {
                        elements.push(c);
                        lengths.push(lengths[p] - 1);
                        parents.push(Vec::new());
                        next.push(elements.len() - 1);
                        elements.len() - 1
                    });
                    parents[ci].push(p);
                }
            }
            level = next;
        }
        let n = elements.len();
        let mut up: Vec<FixedBitSet> = Vec::with_capacity(n);
        for i in 0..n {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(i);
            for &p in &parents[i] {
                set.union_with(&up[p]);
            }
            up.push(set);
        }
        let mut grassmannian = FixedBitSet::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            grassmannian.set(i, g.is_affine_grassmannian(e));
        }
        DownSet { top: *top, floor, elements, lengths, index, grassmannian, up }
    }

    pub fn top(&self) -> &AffineElement {
        &self.top
    }

    pub fn floor(&self) -> u32 {
        self.floor
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[AffineElement] {
        &self.elements
    }

    pub fn index_of(&self, z: &AffineElement) -> Option<usize> {
        self.index.get(z).copied()
    }

    pub fn length(&self, i: usize) -> u32 {
        self.lengths[i]
    }

    pub fn is_grassmannian(&self, i: usize) -> bool {
        self.grassmannian.contains(i)
    }

    /// `elements[i] ≤ elements[j]`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// Indices of `[elements[i], top]`.
    pub fn interval_to_top(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.up[i].ones()
    }

    /// Whether `[elements[i], top]` contains an element outside W⁰.
    pub fn interval_leaves_grassmannian(&self, i: usize) -> bool {
        self.up[i].ones().any(|j| !self.grassmannian.contains(j))
    }

    /// `μ̃(z, top)` for every W⁰ element `z` (0 at the other positions).
    pub fn mobius_to_top(&self) -> Vec<i64> {
        let n = self.len();
        let mut mu = vec![0i64; n];
        for i in 0..n {
            if !self.grassmannian.contains(i) {
                continue;
            }
            if i == 0 {
                mu[0] = 1;
                continue;
            }
            let mut s = 0i64;
            for j in self.up[i].ones() {
                if j != i && self.grassmannian.contains(j) {
                    s += mu[j];
                }
            }
            mu[i] = -s;
        }
        mu
    }
}

/// μ̃(x, y) by the poset recursion over `[x, y] ∩ W⁰`.
pub fn mobius_oracle(ctx: &Context, x: &AffineElement, y: &AffineElement) -> Result<i64> {
    let g = ctx.group();
    require_grassmannian(g, &[x, y])?;
    if !g.bruhat_leq(x, y)? {
        return Ok(0);
    }
    let ds = DownSet::new(g, y, g.length(x));
    let i = ds.index_of(x).ok_or_else(|| crate::error::internal!("{} missing from the down-set", g.format(x)))?;
    Ok(ds.mobius_to_top()[i])
}

/// Deodhar's criterion.
pub fn mobius_deodhar(ctx: &Context, u: &AffineElement, v: &AffineElement) -> Result<MobiusResult> {
    let g = ctx.group();
    require_grassmannian(g, &[u, v])?;
    let result = |value, witness| MobiusResult { value, method: Method::Deodhar, witness };
    if !g.bruhat_leq(u, v)? {
        return Ok(result(0, None));
    }
    for i in 1..=g.rank() {
        if g.bruhat_leq(&g.mul_simple(u, i), v)? {
            return Ok(result(0, Some(i)));
        }
    }
    Ok(result(sign(g.length(v) as i64 - g.length(u) as i64), None))
}

/// The closed formula without any regularity check.
pub fn superregular_formula(ctx: &Context, x: &AffineElement, y: &AffineElement) -> Result<i64> {
    let g = ctx.group();
    let (m, _) = ctx.graph().min_weight(y.w, x.w)?;
    if x.lambda == y.lambda + m {
        Ok(sign(g.length(y) as i64 - g.length(x) as i64))
    } else {
        Ok(0)
    }
}

/// The closed formula, refusing unless `y` is certified for the length gap.
pub fn mobius_superregular(ctx: &Context, x: &AffineElement, y: &AffineElement, cfg: &RegularityConfig) -> Result<MobiusResult> {
    let g = ctx.group();
    require_grassmannian(g, &[x, y])?;
    let gap = (g.length(y) as i64 - g.length(x) as i64).max(1) as u32;
    certify(ctx.root_system(), y, cfg, gap)?;
    Ok(MobiusResult { value: superregular_formula(ctx, x, y)?, method: Method::Superregular, witness: None })
}

/// One term `u ↦ u t_{λ+M(w,u)}` of the support of `μ̃(·, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BelowTerm {
    pub u: WeylElement,
    pub element: AffineElement,
    pub hops: u32,
}

/// `{u t_{λ+M(w,u)} : u ∈ W₀}` for `y = w t_λ`, certified for the largest
/// length gap that occurs.
pub fn elements_below(ctx: &Context, y: &AffineElement, cfg: &RegularityConfig) -> Result<Vec<BelowTerm>> {
    let g = ctx.group();
    require_grassmannian(g, &[y])?;
    let mut terms = Vec::with_capacity(ctx.weyl().order());
    for u in ctx.weyl().elements() {
        let (m, hops) = ctx.graph().min_weight(y.w, u)?;
        terms.push(BelowTerm { u, element: AffineElement::new(u, y.lambda + m), hops });
    }
    let ly = g.length(y);
    let gap = terms.iter().map(|t| ly.saturating_sub(g.length(&t.element))).max().unwrap_or(1);
    certify(ctx.root_system(), y, cfg, gap.max(1))?;
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::Convention;
    use crate::regularity::{Profile, Scope};

    fn ctx() -> Context {
        Context::named("A2", Convention::Untwisted).unwrap()
    }

    #[test]
    fn small_values() {
        let c = ctx();
        let g = c.group();
        let y = g.element(&[1, 2], &[-4, -4]).unwrap();
        let z1 = g.element(&[1, 2, 1], &[-4, -4]).unwrap();
        let z2 = g.element(&[1, 2], &[-3, -4]).unwrap();
        assert_eq!(mobius_oracle(&c, &y, &y).unwrap(), 1);
        assert_eq!(mobius_oracle(&c, &z1, &y).unwrap(), -1);
        assert_eq!(mobius_oracle(&c, &z2, &y).unwrap(), 0);
        assert_eq!(mobius_deodhar(&c, &z1, &y).unwrap(), MobiusResult { value: -1, method: Method::Deodhar, witness: None });
        let d = mobius_deodhar(&c, &z2, &y).unwrap();
        assert_eq!(d.value, 0);
        assert!(d.witness.is_some());
        let x = g.element(&[2], &[3, 2]).unwrap();
        assert!(mobius_oracle(&c, &x, &y).is_err());
        assert_eq!(mobius_oracle(&c, &y, &z1).unwrap(), 0);
    }

    #[test]
    fn closed_formula_examples() {
        let c = ctx();
        let g = c.group();
        let cfg = RegularityConfig::new(c.weyl(), Profile::Welch).unwrap().with_scope(Scope::PerCover);
        let y = g.element(&[1, 2], &[-10, -10]).unwrap();
        let x = g.element(&[1], &[-10, -9]).unwrap();
        let r = mobius_superregular(&c, &x, &y, &cfg).unwrap();
        let gap = g.length(&y) as i64 - g.length(&x) as i64;
        assert_eq!(r.value, sign(gap));
        assert_eq!(r.value, mobius_oracle(&c, &x, &y).unwrap());
        let x0 = g.element(&[1], &[-10, -10]).unwrap();
        assert_eq!(mobius_superregular(&c, &x0, &y, &cfg).unwrap().value, 0);
        assert_eq!(mobius_oracle(&c, &x0, &y).unwrap(), 0);
        assert_eq!(mobius_superregular(&c, &y, &y, &cfg).unwrap().value, 1);
        let small = g.element(&[1, 2], &[-1, -1]).unwrap();
        assert!(matches!(
            mobius_superregular(&c, &small, &small, &cfg),
            Err(crate::error::Error::RegularityViolation(_))
        ));
    }

    #[test]
    fn support_below_y() {
        let c = ctx();
        let g = c.group();
        let cfg = RegularityConfig::new(c.weyl(), Profile::Welch).unwrap().with_scope(Scope::PerCover);
        let y = g.element(&[1, 2], &[-10, -10]).unwrap();
        let terms = elements_below(&c, &y, &cfg).unwrap();
        assert_eq!(terms.len(), 6);
        assert!(terms.iter().any(|t| t.element == y && t.hops == 0));
        let floor = terms.iter().map(|t| g.length(&t.element)).min().unwrap();
        let ds = DownSet::new(g, &y, floor);
        let mu = ds.mobius_to_top();
        let mut support: Vec<_> = (0..ds.len()).filter(|&i| mu[i] != 0).map(|i| ds.elements()[i]).collect();
        let mut expected: Vec<_> = terms.iter().map(|t| t.element).collect();
        support.sort();
        expected.sort();
        assert_eq!(support, expected);
    }
}
