//! Basis changes between the structure sheaf classes `O_x` and the boundary
//! ideal sheaf classes `I_x` in the K-theory of the affine Grassmannian.
//!
//! `O_y = Σ_{x ∈ W⁰, x ≤ y} I_x`, and for superregular `y = w t_λ` the inverse
//! is `I_y = Σ_{u ∈ W₀} (−1)^{d(w,u)} O_{u t_{λ+M(w,u)}}` with `d` the QBG
//! distance.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::affine::{AffineElement, AffineWeylGroup};
use crate::context::Context;
use crate::error::{precondition, Result};
use crate::mobius::{elements_below, DownSet};
use crate::regularity::RegularityConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Basis {
    O,
    I,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::O => "O",
            Basis::I => "I",
        })
    }
}

/// An integer combination of basis classes. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum {
    basis: Basis,
    terms: BTreeMap<AffineElement, i64>,
}

impl FormalSum {
    pub fn zero(basis: Basis) -> Self {
        FormalSum { basis, terms: BTreeMap::new() }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add(&mut self, x: AffineElement, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(x).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&x);
        }
    }

    pub fn coefficient(&self, x: &AffineElement) -> i64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineElement, i64)> {
        self.terms.iter().map(|(x, &c)| (x, c))
    }

    /// Drops every term whose element has length below `floor`.
    pub fn truncate_below(&mut self, g: &AffineWeylGroup, floor: u32) {
        self.terms.retain(|x, _| g.length(x) >= floor);
    }

    pub fn to_json(&self, g: &AffineWeylGroup) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(x, &coeff)| TermJson { coeff, basis: self.basis, element: g.format(x) })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TermJson {
    pub coeff: i64,
    pub basis: Basis,
    pub element: String,
}

fn require_grassmannian(g: &AffineWeylGroup, y: &AffineElement) -> Result<()> {
    if g.is_affine_grassmannian(y) {
        Ok(())
    } else {
        Err(precondition!("{} is not affine Grassmannian", g.format(y)))
    }
}

/// `O_y` in the `I` basis, restricted to elements of length at least `floor`.
pub fn structure_in_ideal_above(ctx: &Context, y: &AffineElement, floor: u32) -> Result<FormalSum> {
    let g = ctx.group();
    require_grassmannian(g, y)?;
    let ds = DownSet::new(g, y, floor);
    let mut sum = FormalSum::zero(Basis::I);
    for (i, x) in ds.elements().iter().enumerate() {
        if ds.is_grassmannian(i) && ds.length(i) >= floor {
            sum.add(*x, 1);
        }
    }
    Ok(sum)
}

/// `O_y` in the `I` basis.
pub fn structure_in_ideal(ctx: &Context, y: &AffineElement) -> Result<FormalSum> {
    structure_in_ideal_above(ctx, y, 0)
}

/// `I_y` in the `O` basis, for superregular `y`.
pub fn ideal_in_structure(ctx: &Context, y: &AffineElement, cfg: &RegularityConfig) -> Result<FormalSum> {
    let mut sum = FormalSum::zero(Basis::O);
    for t in elements_below(ctx, y, cfg)? {
        sum.add(t.element, if t.hops % 2 == 0 { 1 } else { -1 });
    }
    Ok(sum)
}

#[derive(Clone, Debug)]
pub struct RoundTrip {
    /// `I_y` expanded into `O` and back into `I`, truncated below `floor`.
    pub result: FormalSum,
    pub floor: u32,
    /// Whether any term was dropped by the floor.
    pub truncated: bool,
    /// Whether `result` is exactly `1·I_y`.
    pub collapsed: bool,
}

/// Expands `I_y` into the `O` basis and each `O` term back into `I`, keeping
/// only elements of length at least `floor`.
pub fn round_trip(ctx: &Context, y: &AffineElement, cfg: &RegularityConfig, floor: u32) -> Result<RoundTrip> {
    let expansion = ideal_in_structure(ctx, y, cfg)?;
    let mut result = FormalSum::zero(Basis::I);
    for (x, c) in expansion.terms() {
        for (z, d) in structure_in_ideal_above(ctx, x, floor)?.terms() {
            result.add(*z, c * d);
        }
    }
    // the identity lies below every y, so any positive floor drops a term
    let truncated = floor > 0;
    let collapsed = result.len() == 1 && result.coefficient(y) == 1;
    Ok(RoundTrip { result, floor, truncated, collapsed })
}
