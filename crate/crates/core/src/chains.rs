//! Near and far paths of saturated chains.
//!
//! Write the top of a chain as `y = w·t_{vλ}` with λ antidominant. Each cover
//! below a sufficiently regular element falls in one of four cases; the first
//! two (near) correspond to a graph edge `wv → wvr_α`, the last two (far) to
//! an edge `vr_α → v`. Reading the chain from the top, near edges are
//! appended to the near path `P_n: wv → wvr_n` and far edges are prepended to
//! the far path `P_f: vr_f → v`. The bottom of the chain is
//! `wvr_n(vr_f)⁻¹ t_{vr_f(λ + wt(P_n) + wt(P_f))}`.

use std::collections::HashSet;

use serde::Serialize;

use crate::affine::{AffineElement, AffineRoot, CoverMode, Factorization};
use crate::cartan::CorootVector;
use crate::context::Context;
use crate::error::{internal, invalid, precondition, Error, Result};
use crate::qbg::{EdgeKind, QbgEdge, QbgPath, Untwisted};
use crate::weyl::WeylElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverKind {
    Near,
    Far,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverClass {
    pub kind: CoverKind,
    pub edge: QbgEdge<Untwisted>,
    pub case_index: u8,
    /// `y⁻¹x` as an affine root with positive classical part.
    pub label: AffineRoot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub top: AffineElement,
    pub base: Factorization,
    pub r_n: WeylElement,
    pub r_f: WeylElement,
    pub near: QbgPath<Untwisted>,
    pub far: QbgPath<Untwisted>,
    /// Classification of each cover, from the top down.
    pub covers: Vec<CoverClass>,
}

/// Which kind of cover `transport_chain` emits first, reading from the top.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransportOrder {
    NearFirst,
    FarFirst,
}

/// Classifies the cover `x ⋖ y` and returns the graph edge it corresponds to.
pub fn classify_cover(ctx: &Context, x: &AffineElement, y: &AffineElement) -> Result<CoverClass> {
    let g = ctx.group();
    let weyl = ctx.weyl();
    let c = g.classify(x, y)?;
    let f = g.factor(y);
    let r_a = weyl.reflection_by_index(c.root);
    let (kind, source, target) = if c.case <= 2 {
        let wv = weyl.mul(f.w, f.v);
        (CoverKind::Near, wv, weyl.mul(wv, r_a))
    } else {
        (CoverKind::Far, weyl.mul(f.v, r_a), f.v)
    };
    let edge = *ctx
        .graph()
        .edge(source, target)
        .ok_or_else(|| internal!("case {} cover has no graph edge {source:?} -> {target:?}", c.case))?;
    let expected = if c.case % 2 == 1 { EdgeKind::Bruhat } else { EdgeKind::Quantum };
    if edge.kind != expected {
        return Err(internal!("case {} cover maps to a {:?} edge", c.case, edge.kind));
    }
    Ok(CoverClass { kind, edge, case_index: c.case, label: c.label })
}

/// Decomposes a saturated chain given bottom first.
pub fn decompose_chain(ctx: &Context, chain: &[AffineElement]) -> Result<ChainDecomposition> {
    let (&top, _) = chain.split_last().ok_or_else(|| invalid!("empty chain"))?;
    let g = ctx.group();
    let weyl = ctx.weyl();
    let base = g.factor(&top);
    let wv = weyl.mul(base.w, base.v);
    let mut d = ChainDecomposition {
        top,
        base,
        r_n: WeylElement::IDENTITY,
        r_f: WeylElement::IDENTITY,
        near: QbgPath::trivial(wv),
        far: QbgPath::trivial(base.v),
        covers: Vec::new(),
    };
    for pair in chain.windows(2).rev() {
        let (x, z) = (&pair[0], &pair[1]);
        if g.length(x) + 1 != g.length(z) || g.as_affine_reflection(&g.mul(&g.inverse(z), x)).is_none() {
            return Err(invalid!("{} ⋖ {} is not a cover", g.format(x), g.format(z)));
        }
        let c = classify_cover(ctx, x, z)?;
        let r = weyl.reflection_by_index(c.edge.root);
        match c.kind {
            CoverKind::Near => {
                if c.edge.source != d.near.end() {
                    return Err(Error::RegularityViolation(format!(
                        "near edge at {} does not continue the near path",
                        g.format(z)
                    )));
                }
                d.near.edges.push(c.edge);
                d.r_n = weyl.mul(d.r_n, r);
            }
            CoverKind::Far => {
                if c.edge.target != d.far.start {
                    return Err(Error::RegularityViolation(format!(
                        "far edge at {} does not continue the far path",
                        g.format(z)
                    )));
                }
                d.far.edges.insert(0, c.edge);
                d.far.start = c.edge.source;
                d.r_f = weyl.mul(d.r_f, r);
            }
        }
        d.covers.push(c);
    }
    let bottom = reconstruct_bottom(ctx, &d)?;
    if bottom != chain[0] {
        return Err(Error::RegularityViolation(format!(
            "near/far reconstruction gives {}, the chain ends at {}",
            g.format(&bottom),
            g.format(&chain[0])
        )));
    }
    Ok(d)
}

/// `x = wvr_n(vr_f)⁻¹ t_{vr_f(λ + wt(P_n) + wt(P_f))}`.
pub fn reconstruct_bottom(ctx: &Context, d: &ChainDecomposition) -> Result<AffineElement> {
    let weyl = ctx.weyl();
    let graph = ctx.graph();
    let Factorization { w, v, lambda } = d.base;
    let wv = weyl.mul(w, v);
    let vr_f = weyl.mul(v, d.r_f);
    if d.near.start != wv || d.near.end() != weyl.mul(wv, d.r_n) {
        return Err(invalid!("near path does not run from wv to wvr_n"));
    }
    if d.far.end() != v || d.far.start != vr_f {
        return Err(invalid!("far path does not run from vr_f to v"));
    }
    let shift: CorootVector = lambda + graph.path_weight(&d.near)? + graph.path_weight(&d.far)?;
    let head = weyl.mul(weyl.mul(wv, d.r_n), weyl.inverse(vr_f));
    Ok(AffineElement::new(head, weyl.act_on_coroot(vr_f, &shift)))
}

/// Rebuilds a saturated chain from the top of `d` realizing the given near
/// and far paths. Each emitted cover is checked against the generic cover
/// search. Returns the chain bottom first.
pub fn transport_chain(
    ctx: &Context,
    d: &ChainDecomposition,
    near: &QbgPath<Untwisted>,
    far: &QbgPath<Untwisted>,
    order: TransportOrder,
) -> Result<Vec<AffineElement>> {
    let graph = ctx.graph();
    let ord = ctx.ordering();
    if !graph.interval_equivalent(&d.near, near, ord)? {
        return Err(precondition!("near path is not interval equivalent to the chain's near path"));
    }
    if !graph.interval_equivalent(&d.far, far, ord)? {
        return Err(precondition!("far path is not interval equivalent to the chain's far path"));
    }
    let g = ctx.group();
    let steps: Vec<(CoverKind, QbgEdge<Untwisted>)> = {
        let near_steps = near.edges.iter().map(|e| (CoverKind::Near, *e));
        let far_steps = far.edges.iter().rev().map(|e| (CoverKind::Far, *e));
        match order {
            TransportOrder::NearFirst => near_steps.chain(far_steps).collect(),
            TransportOrder::FarFirst => far_steps.chain(near_steps).collect(),
        }
    };
    let mut chain = vec![d.top];
    for (kind, edge) in steps {
        let z = *chain.last().expect("nonempty");
        let mut found = None;
        for (x, _) in g.covers_below(&z, CoverMode::Generic)? {
            if let Ok(c) = classify_cover(ctx, &x, &z) {
                if c.kind == kind && c.edge == edge {
                    found = Some(x);
                    break;
                }
            }
        }
        let x = found.ok_or_else(|| {
            Error::RegularityViolation(format!(
                "no {kind:?} cover of {} realizes the edge {} -> {}",
                g.format(&z),
                ctx.weyl().format(edge.source),
                ctx.weyl().format(edge.target)
            ))
        })?;
        chain.push(x);
    }
    chain.reverse();
    let expected = reconstruct_bottom(ctx, d)?;
    if chain[0] != expected {
        return Err(internal!(
            "transported chain ends at {}, expected {}",
            g.format(&chain[0]),
            g.format(&expected)
        ));
    }
    Ok(chain)
}

/// For `x ⋖ z ⋖ y` in W⁰: whether the near path is a 2-loop, which is
/// equivalent to `[x, y] ⊄ W⁰`.
pub fn detect_boundary_violation(ctx: &Context, x: &AffineElement, z: &AffineElement, y: &AffineElement) -> Result<bool> {
    let g = ctx.group();
    if g.length(y) != g.length(x) + 2 {
        return Err(precondition!("the length gap between {} and {} is not 2", g.format(x), g.format(y)));
    }
    for e in [x, z, y] {
        if !g.is_affine_grassmannian(e) {
            return Err(precondition!("{} is not affine Grassmannian", g.format(e)));
        }
    }
    let d = decompose_chain(ctx, &[*x, *z, *y])?;
    Ok(d.near.len() == 2 && d.near.start == d.near.end())
}

/// An element of `[x, y]` outside W⁰, if any.
pub fn boundary_witness(ctx: &Context, x: &AffineElement, y: &AffineElement) -> Result<Option<AffineElement>> {
    let g = ctx.group();
    let mut outside: Vec<AffineElement> = g.interval(x, y)?.into_iter().filter(|u| !g.is_affine_grassmannian(u)).collect();
    outside.sort();
    Ok(outside.into_iter().next())
}

/// Every saturated chain descending at most `depth` steps from `y`, each
/// listed bottom first.
pub fn chains_below(ctx: &Context, y: &AffineElement, depth: usize) -> Result<Vec<Vec<AffineElement>>> {
    let g = ctx.group();
    let mut out = vec![vec![*y]];
    let mut layer = vec![vec![*y]];
    for _ in 0..depth {
        let mut next = Vec::new();
        for c in &layer {
            for (x, _) in g.covers_below(c.last().expect("nonempty"), CoverMode::Generic)? {
                let mut e = c.clone();
                e.push(x);
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    for c in &mut out {
        c.reverse();
    }
    Ok(out)
}

/// Distinct elements of a set of chains.
pub fn elements_of(chains: &[Vec<AffineElement>]) -> HashSet<AffineElement> {
    chains.iter().flatten().copied().collect()
}

/// JSON rendering of a decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionJson {
    pub r_n: Vec<usize>,
    pub r_f: Vec<usize>,
    pub near_path: PathJson,
    pub far_path: PathJson,
    pub covers: Vec<CoverJson>,
    pub bottom: crate::affine::ElementJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct PathJson {
    pub vertices: Vec<Vec<usize>>,
    pub labels: Vec<Vec<i32>>,
    pub weights: Vec<Vec<i32>>,
    pub weight: Vec<i32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverJson {
    pub kind: CoverKind,
    pub case: u8,
    pub label: AffineRoot,
    pub edge: [Vec<usize>; 2],
}

pub fn path_json(ctx: &Context, p: &QbgPath<Untwisted>) -> Result<PathJson> {
    let weyl = ctx.weyl();
    let graph = ctx.graph();
    let word = |w: WeylElement| weyl.word(w).iter().map(|&i| i as usize).collect::<Vec<_>>();
    Ok(PathJson {
        vertices: p.vertices().into_iter().map(word).collect(),
        labels: p.edges.iter().map(|e| graph.label(e).coords().to_vec()).collect(),
        weights: p.edges.iter().map(|e| e.weight.coords().to_vec()).collect(),
        weight: graph.path_weight(p)?.coords().to_vec(),
    })
}

pub fn decomposition_json(ctx: &Context, d: &ChainDecomposition) -> Result<DecompositionJson> {
    let weyl = ctx.weyl();
    let word = |w: WeylElement| weyl.word(w).iter().map(|&i| i as usize).collect::<Vec<_>>();
    Ok(DecompositionJson {
        r_n: word(d.r_n),
        r_f: word(d.r_f),
        near_path: path_json(ctx, &d.near)?,
        far_path: path_json(ctx, &d.far)?,
        covers: d
            .covers
            .iter()
            .map(|c| CoverJson { kind: c.kind, case: c.case_index, label: c.label, edge: [word(c.edge.source), word(c.edge.target)] })
            .collect(),
        bottom: ctx.group().to_json(&reconstruct_bottom(ctx, d)?),
    })
}
