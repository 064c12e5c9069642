//! The affine Weyl group W = W₀ ⋉ Q∨.
//!
//! An element `w·t_λ` is stored as the pair `(w, λ)`; products follow
//! `(w, λ)(v, μ) = (wv, v⁻¹λ + μ)` and the element acts on the coroot space by
//! `μ ↦ w(μ + λ)`.
//!
//! The dual untwisted group (translations by the root lattice, `s₀ = t_φ s_φ`)
//! is realized as the untwisted group of the dual root system. Its elements
//! carry translation vectors in simple-root coordinates of the original
//! system, which are the simple-coroot coordinates of the dual system, and
//! its Weyl group is indexed identically.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cartan::{CorootVector, RootSystem, RootVector};
use crate::error::{internal, invalid, precondition, Error, Result};
use crate::weyl::{parse_int_list, WeylElement, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    #[default]
    Untwisted,
    #[serde(alias = "dual-untwisted", alias = "dual_untwisted")]
    Dual,
}

impl Convention {
    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Untwisted => "untwisted",
            Convention::Dual => "dual",
        }
    }
}

impl std::str::FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "untwisted" => Ok(Convention::Untwisted),
            "dual" | "dual-untwisted" | "dual_untwisted" => Ok(Convention::Dual),
            other => Err(invalid!("unknown convention {other:?} (expected untwisted or dual)")),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `w·t_λ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineElement {
    pub w: WeylElement,
    pub lambda: CorootVector,
}

impl AffineElement {
    pub fn new(w: WeylElement, lambda: CorootVector) -> Self {
        AffineElement { w, lambda }
    }
}

/// The affine root `α + nδ` with α a positive classical root.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct AffineRoot {
    pub alpha: RootVector,
    pub n: i32,
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}δ", self.alpha, self.n)
    }
}

/// Which cover enumeration `covers_below` performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverMode {
    /// Right multiplication by every affine reflection in a length window.
    Generic,
    /// The four-case classification. The antidominant representative of the
    /// translation must pair to at least `bound` in absolute value with every
    /// simple root; the regularity module supplies the bound.
    Superregular { bound: i32 },
}

/// A cover produced by the four-case classification of `y = w t_{vλ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifiedCover {
    pub x: AffineElement,
    /// Case 1..=4; cases 1 and 2 are near, 3 and 4 far.
    pub case: u8,
    /// Index of α in the positive roots.
    pub root: usize,
    /// `y⁻¹x`, normalized to a positive classical part.
    pub label: AffineRoot,
}

/// Factorization `y = w·t_{vλ}` with λ antidominant and `v` minimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub w: WeylElement,
    pub v: WeylElement,
    pub lambda: CorootVector,
}

#[derive(Debug)]
pub struct AffineWeylGroup {
    convention: Convention,
    base: Arc<RootSystem>,
    weyl: Arc<WeylGroup>,
    s0: AffineElement,
}

impl AffineWeylGroup {
    pub fn new(rs: RootSystem, convention: Convention) -> Result<Self> {
        let base = Arc::new(rs);
        let translation_system = match convention {
            Convention::Untwisted => base.clone(),
            Convention::Dual => Arc::new(base.dual()?),
        };
        let weyl = Arc::new(WeylGroup::new(translation_system)?);
        Ok(Self::assemble(convention, base, weyl))
    }

    /// Untwisted group over an already enumerated Weyl group.
    pub fn untwisted(weyl: Arc<WeylGroup>) -> Self {
        let base = weyl.root_system_arc().clone();
        Self::assemble(Convention::Untwisted, base, weyl)
    }

    pub fn named(label: &str, convention: Convention) -> Result<Self> {
        Self::new(RootSystem::named(label)?, convention)
    }

    fn assemble(convention: Convention, base: Arc<RootSystem>, weyl: Arc<WeylGroup>) -> Self {
        let rs = weyl.root_system();
        let theta = rs.highest_root_index();
        let s0 = AffineElement::new(weyl.reflection_by_index(theta), -rs.coroot(theta));
        AffineWeylGroup { convention, base, weyl, s0 }
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// The root system the user named.
    pub fn base_system(&self) -> &RootSystem {
        &self.base
    }

    /// The root system whose coroot lattice holds the translations.
    pub fn root_system(&self) -> &RootSystem {
        self.weyl.root_system()
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn weyl_arc(&self) -> &Arc<WeylGroup> {
        &self.weyl
    }

    pub fn label(&self) -> &str {
        self.base.label()
    }

    pub fn rank(&self) -> usize {
        self.weyl.rank()
    }

    pub fn identity(&self) -> AffineElement {
        AffineElement::new(WeylElement::IDENTITY, CorootVector::zero(self.rank()))
    }

    pub fn translation(&self, lambda: CorootVector) -> AffineElement {
        AffineElement::new(WeylElement::IDENTITY, lambda)
    }

    /// Builds `w·t_λ` from a 1-based word and translation coordinates.
    pub fn element(&self, word: &[usize], t: &[i32]) -> Result<AffineElement> {
        if t.len() != self.rank() {
            return Err(invalid!("translation {t:?} has length {}, expected {}", t.len(), self.rank()));
        }
        Ok(AffineElement::new(self.weyl.from_word(word)?, CorootVector::new(t)?))
    }

    pub fn mul(&self, x: &AffineElement, y: &AffineElement) -> AffineElement {
        let g = &self.weyl;
        AffineElement::new(g.mul(x.w, y.w), g.act_on_coroot(g.inverse(y.w), &x.lambda) + y.lambda)
    }

    pub fn inverse(&self, x: &AffineElement) -> AffineElement {
        let g = &self.weyl;
        AffineElement::new(g.inverse(x.w), -g.act_on_coroot(x.w, &x.lambda))
    }

    /// `ℓ(w·t_λ) = Σ_{α>0} |⟨λ, α⟩ + χ(w(α) < 0)|`.
    pub fn length(&self, x: &AffineElement) -> u32 {
        let rs = self.root_system();
        let inv = self.weyl.inversion_bits(x.w);
        let mut total = 0u32;
        for a in 0..rs.num_positive_roots() {
            let p = rs.pair_root(&x.lambda, a) + (inv >> a & 1) as i32;
            total += p.unsigned_abs();
        }
        total
    }

    /// `s_i` for `i ∈ 0..=rank`; `s₀ = t_{θ∨} s_θ` over the translation system.
    pub fn simple_reflection(&self, i: usize) -> Result<AffineElement> {
        match i {
            0 => Ok(self.s0),
            i if i <= self.rank() => Ok(AffineElement::new(self.weyl.simple(i - 1), CorootVector::zero(self.rank()))),
            _ => Err(invalid!("affine node {i} out of range 0..={}", self.rank())),
        }
    }

    /// `x·s_i` (i in 0..=rank).
    pub fn mul_simple(&self, x: &AffineElement, i: usize) -> AffineElement {
        if i == 0 {
            self.mul(x, &self.s0)
        } else {
            let rs = self.root_system();
            AffineElement::new(self.weyl.mul_simple(x.w, i - 1), rs.reflect_coroot_by(i - 1, &x.lambda))
        }
    }

    /// `s_i·x` (i in 0..=rank).
    pub fn simple_mul(&self, i: usize, x: &AffineElement) -> AffineElement {
        if i == 0 {
            self.mul(&self.s0, x)
        } else {
            AffineElement::new(self.weyl.simple_mul(i - 1, x.w), x.lambda)
        }
    }

    /// `r_{α+nδ} = t_{nα∨} r_α`, i.e. the pair `(r_α, n·α∨)`.
    pub fn affine_reflection(&self, r: &AffineRoot) -> Result<AffineElement> {
        let rs = self.root_system();
        let a = rs
            .root_index(&r.alpha)
            .ok_or_else(|| invalid!("{} is not a positive root of {}", r.alpha, rs.label()))?;
        Ok(self.affine_reflection_by(a, r.n))
    }

    pub fn affine_reflection_by(&self, root: usize, n: i32) -> AffineElement {
        let rs = self.root_system();
        AffineElement::new(self.weyl.reflection_by_index(root), n * rs.coroot(root))
    }

    /// `x·r_{α+nδ}` without materializing the reflection.
    pub fn mul_affine_reflection(&self, x: &AffineElement, root: usize, n: i32) -> AffineElement {
        let rs = self.root_system();
        let shift = rs.pair_root(&x.lambda, root) - n;
        AffineElement::new(self.weyl.mul(x.w, self.weyl.reflection_by_index(root)), x.lambda - shift * rs.coroot(root))
    }

    /// If `r` is an affine reflection, its root with positive classical part.
    pub fn as_affine_reflection(&self, r: &AffineElement) -> Option<AffineRoot> {
        let a = self.weyl.reflection_root(r.w)?;
        let rs = self.root_system();
        let coroot = rs.coroot(a);
        let i = (0..self.rank()).find(|&i| coroot.get(i) != 0)?;
        let n = r.lambda.get(i) / coroot.get(i);
        (n * coroot == r.lambda).then_some(AffineRoot { alpha: rs.positive_roots()[a], n })
    }

    /// Whether `x` is the minimal representative of `x·W₀`.
    pub fn is_affine_grassmannian(&self, x: &AffineElement) -> bool {
        let l = self.length(x);
        (1..=self.rank()).all(|i| self.length(&self.mul_simple(x, i)) > l)
    }

    fn left_descent(&self, y: &AffineElement, ly: u32) -> Option<(usize, AffineElement)> {
        (0..=self.rank()).find_map(|i| {
            let s = self.simple_mul(i, y);
            (self.length(&s) < ly).then_some((i, s))
        })
    }

    /// Bruhat order by descent: with `s y < y`, `x ≤ y` iff `min(x, s x) ≤ s y`.
    pub fn bruhat_leq(&self, x: &AffineElement, y: &AffineElement) -> Result<bool> {
        let (mut x, mut y) = (*x, *y);
        let (mut lx, mut ly) = (self.length(&x), self.length(&y));
        let budget = ly;
        for _ in 0..=budget {
            if lx > ly {
                return Ok(false);
            }
            if lx == ly {
                return Ok(x == y);
            }
            if lx == 0 {
                return Ok(true);
            }
            let (i, sy) = self
                .left_descent(&y, ly)
                .ok_or_else(|| internal!("element of length {ly} has no left descent"))?;
            let sx = self.simple_mul(i, &x);
            let lsx = self.length(&sx);
            if lsx < lx {
                x = sx;
                lx = lsx;
            }
            y = sy;
            ly -= 1;
        }
        Err(internal!("Bruhat comparison exceeded {budget} steps"))
    }

    /// `y = w·t_{vλ}` with λ antidominant.
    pub fn factor(&self, y: &AffineElement) -> Factorization {
        let (v, lambda) = self.weyl.antidominant_factor(&y.lambda);
        Factorization { w: y.w, v, lambda }
    }

    /// All `x ⋖ y` with the reflection label `y⁻¹x`.
    pub fn covers_below(&self, y: &AffineElement, mode: CoverMode) -> Result<Vec<(AffineElement, AffineRoot)>> {
        match mode {
            CoverMode::Generic => Ok(self.generic_covers(y)),
            CoverMode::Superregular { bound } => {
                let f = self.factor(y);
                let rs = self.root_system();
                let bound = bound.max(1);
                if let Some(i) = (0..self.rank()).find(|&i| rs.pair_root(&f.lambda, i).abs() < bound) {
                    return Err(precondition!(
                        "translation {} pairs to {} with simple root {}, below the regularity bound {bound}",
                        y.lambda,
                        rs.pair_root(&f.lambda, i),
                        i + 1
                    ));
                }
                Ok(self.classified_covers(y).into_iter().map(|c| (c.x, c.label)).collect())
            }
        }
    }

    pub fn generic_covers(&self, y: &AffineElement) -> Vec<(AffineElement, AffineRoot)> {
        let ly = self.length(y);
        if ly == 0 {
            return Vec::new();
        }
        let rs = self.root_system();
        let mut out = Vec::new();
        for a in 0..rs.num_positive_roots() {
            let bound = rs.pair_root(&y.lambda, a).abs() + 2;
            for n in -bound..=bound {
                let x = self.mul_affine_reflection(y, a, n);
                if self.length(&x) + 1 == ly {
                    out.push((x, AffineRoot { alpha: rs.positive_roots()[a], n }));
                }
            }
        }
        out.sort_by_key(|(x, _)| *x);
        out
    }

    /// The four candidate covers attached to a positive root α, each present
    /// only when its length condition on W₀ holds:
    ///
    /// 1. `ℓ(wvr_α) = ℓ(wv) + 1`, `x = w r_{vα} t_{vλ}`
    /// 2. `ℓ(wvr_α) = ℓ(wv) − ⟨α∨, 2ρ⟩ + 1`, `x = w r_{vα} t_{v(λ+α∨)}`
    /// 3. `ℓ(vr_α) = ℓ(v) − 1`, `x = w r_{vα} t_{v r_α λ}`
    /// 4. `ℓ(vr_α) = ℓ(v) + ⟨α∨, 2ρ⟩ − 1`, `x = w r_{vα} t_{v r_α(λ+α∨)}`
    pub fn case_candidates(&self, f: &Factorization, root: usize) -> [Option<AffineElement>; 4] {
        let g = &self.weyl;
        let rs = self.root_system();
        let r_a = g.reflection_by_index(root);
        let coroot = rs.coroot(root);
        let height = rs.pairing(&coroot, &rs.two_rho()) as i64;
        let wv = g.mul(f.w, f.v);
        let wvr = g.mul(wv, r_a);
        let vr = g.mul(f.v, r_a);
        let (l_wv, l_wvr) = (g.length(wv) as i64, g.length(wvr) as i64);
        let (l_v, l_vr) = (g.length(f.v) as i64, g.length(vr) as i64);
        // w r_{vα} = w v r_α v⁻¹
        let head = g.mul(wvr, g.inverse(f.v));
        let v = |mu: CorootVector| g.act_on_coroot(f.v, &mu);
        let shifted = f.lambda + coroot;
        [
            (l_wvr == l_wv + 1).then(|| AffineElement::new(head, v(f.lambda))),
            (l_wvr == l_wv - height + 1).then(|| AffineElement::new(head, v(shifted))),
            (l_vr == l_v - 1).then(|| AffineElement::new(head, v(rs.reflect_coroot_by(root, &f.lambda)))),
            (l_vr == l_v + height - 1).then(|| AffineElement::new(head, v(rs.reflect_coroot_by(root, &shifted)))),
        ]
    }

    /// Covers of `y` predicted by the four cases. No regularity check is made;
    /// callers decide whether the prediction is trustworthy.
    pub fn classified_covers(&self, y: &AffineElement) -> Vec<ClassifiedCover> {
        let f = self.factor(y);
        let mut out = Vec::new();
        for a in 0..self.root_system().num_positive_roots() {
            for (c, x) in self.case_candidates(&f, a).into_iter().enumerate() {
                if let Some(x) = x {
                    if let Some(label) = self.as_affine_reflection(&self.mul(&self.inverse(y), &x)) {
                        out.push(ClassifiedCover { x, case: c as u8 + 1, root: a, label });
                    }
                }
            }
        }
        out.sort_by_key(|c| (c.x, c.case));
        out
    }

    /// Matches a cover `x ⋖ y` against the four cases. The label `y⁻¹x`
    /// is solved for first and pins α; every case is then tested.
    pub fn classify(&self, x: &AffineElement, y: &AffineElement) -> Result<ClassifiedCover> {
        if self.length(x) + 1 != self.length(y) {
            return Err(invalid!("{} is not one below {} in length", self.format(x), self.format(y)));
        }
        let label = self
            .as_affine_reflection(&self.mul(&self.inverse(y), x))
            .ok_or_else(|| invalid!("{} ⋖ {} is not a Bruhat cover", self.format(x), self.format(y)))?;
        let f = self.factor(y);
        let rs = self.root_system();
        let beta = label.alpha;
        let pulled = self.weyl.act_on_root(self.weyl.inverse(f.v), &beta);
        let alpha = if pulled.is_positive() { pulled } else { -pulled };
        let root = rs.root_index(&alpha).ok_or_else(|| internal!("{alpha} is not a positive root"))?;
        let hits: Vec<u8> = self
            .case_candidates(&f, root)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| c.as_ref() == Some(x))
            .map(|(c, _)| c as u8 + 1)
            .collect();
        match hits.as_slice() {
            [c] => Ok(ClassifiedCover { x: *x, case: *c, root, label }),
            [] => Err(Error::RegularityViolation(format!(
                "cover {} ⋖ {} matches none of the four cases (translation {} not regular enough)",
                self.format(x),
                self.format(y),
                f.lambda
            ))),
            many => Err(internal!(
                "cover {} ⋖ {} matches cases {many:?} at once",
                self.format(x),
                self.format(y)
            )),
        }
    }

    /// `[x, y]` by downward search from `y` through covers, pruned by `x ≤ z`.
    pub fn interval(&self, x: &AffineElement, y: &AffineElement) -> Result<HashSet<AffineElement>> {
        if !self.bruhat_leq(x, y)? {
            return Err(precondition!("{} is not below {}", self.format(x), self.format(y)));
        }
        let lx = self.length(x);
        let mut above_x: HashMap<AffineElement, bool> = HashMap::new();
        let mut seen = HashSet::from([*y]);
        let mut queue = VecDeque::from([*y]);
        while let Some(z) = queue.pop_front() {
            if self.length(&z) == lx {
                continue;
            }
            for (c, _) in self.generic_covers(&z) {
                if seen.contains(&c) {
                    continue;
                }
                let keep = match above_x.get(&c) {
                    Some(&k) => k,
                    None => {
                        let k = self.bruhat_leq(x, &c)?;
                        above_x.insert(c, k);
                        k
                    }
                };
                if keep {
                    seen.insert(c);
                    queue.push_back(c);
                }
            }
        }
        Ok(seen)
    }

    /// Every element within word distance `radius` of the identity, with its
    /// BFS depth over right multiplication by `s₀, …, s_r`.
    pub fn word_ball(&self, radius: u32) -> HashMap<AffineElement, u32> {
        let mut depth = HashMap::from([(self.identity(), 0u32)]);
        let mut frontier = vec![self.identity()];
        for d in 1..=radius {
            let mut next = Vec::new();
            for x in &frontier {
                for i in 0..=self.rank() {
                    let y = self.mul_simple(x, i);
                    if let std::collections::hash_map::Entry::Vacant(e) = depth.entry(y) {
                        e.insert(d);
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        depth
    }

    pub fn format(&self, x: &AffineElement) -> String {
        format!("{} w={} t={}", self.label(), self.weyl.format(x.w), x.lambda)
    }

    /// Parses `"A2 w=[1,2] t=[-4,-4]"`. The type token is optional but must
    /// match when present; a missing `t=` means the zero translation.
    pub fn parse(&self, s: &str) -> Result<AffineElement> {
        let mut word = None;
        let mut t = None;
        let mut rest = s.trim();
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix("w=") {
                let (v, r) = take_bracket(r, s)?;
                word = Some(v);
                rest = r;
            } else if let Some(r) = rest.strip_prefix("t=") {
                let (v, r) = take_bracket(r, s)?;
                t = Some(v);
                rest = r;
            } else {
                let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
                let tok = &rest[..end];
                if let Some(c) = tok.strip_prefix("convention=") {
                    if c.parse::<Convention>()? != self.convention {
                        return Err(invalid!("element {s:?} uses convention {c}, expected {}", self.convention));
                    }
                } else if !tok.eq_ignore_ascii_case(self.label()) {
                    return Err(invalid!("unexpected token {tok:?} in element {s:?} (group is {})", self.label()));
                }
                rest = &rest[end..];
            }
            rest = rest.trim_start();
        }
        let word = word.ok_or_else(|| invalid!("element {s:?} lacks w=[...]"))?;
        let word: Vec<usize> = word
            .into_iter()
            .map(|i| usize::try_from(i).map_err(|_| invalid!("negative reflection index in {s:?}")))
            .collect::<Result<_>>()?;
        let t = t.unwrap_or_else(|| vec![0; self.rank()]);
        self.element(&word, &t)
    }

    pub fn to_json(&self, x: &AffineElement) -> ElementJson {
        ElementJson {
            type_label: self.label().to_string(),
            w: self.weyl.word(x.w).iter().map(|&i| i as usize).collect(),
            t: x.lambda.coords().to_vec(),
            convention: self.convention,
        }
    }

    pub fn from_json(&self, e: &ElementJson) -> Result<AffineElement> {
        if !e.type_label.eq_ignore_ascii_case(self.label()) {
            return Err(invalid!("element of type {} given to group {}", e.type_label, self.label()));
        }
        if e.convention != self.convention {
            return Err(invalid!("element uses convention {}, expected {}", e.convention, self.convention));
        }
        self.element(&e.w, &e.t)
    }
}

fn take_bracket<'a>(r: &'a str, whole: &str) -> Result<(Vec<i32>, &'a str)> {
    let r = r.trim_start();
    if !r.starts_with('[') {
        return Err(invalid!("expected '[' in {whole:?}"));
    }
    let end = r.find(']').ok_or_else(|| invalid!("unclosed '[' in {whole:?}"))?;
    Ok((parse_int_list(&r[..=end])?, &r[end + 1..]))
}

/// JSON form `{"type": "A2", "w": [1,2], "t": [-4,-4], "convention": "untwisted"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub w: Vec<usize>,
    pub t: Vec<i32>,
    #[serde(default)]
    pub convention: Convention,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> AffineWeylGroup {
        AffineWeylGroup::named("A2", Convention::Untwisted).unwrap()
    }

    fn el(g: &AffineWeylGroup, w: &[usize], t: &[i32]) -> AffineElement {
        g.element(w, t).unwrap()
    }

    #[test]
    fn product_rule() {
        let g = a2();
        let x = el(&g, &[1], &[-1, 0]);
        assert_eq!(g.mul(&g.identity(), &x), x);
        assert_eq!(g.mul(&el(&g, &[1], &[0, 0]), &x), el(&g, &[], &[-1, 0]));
        let (a, b) = (el(&g, &[], &[2, -1]), el(&g, &[], &[-3, 5]));
        assert_eq!(g.mul(&a, &b), el(&g, &[], &[-1, 4]));
        assert_eq!(g.mul(&x, &g.inverse(&x)), g.identity());
    }

    #[test]
    fn lengths() {
        let g = a2();
        assert_eq!(g.length(&g.identity()), 0);
        assert_eq!(g.length(&el(&g, &[], &[-1, -1])), 4);
        let y = el(&g, &[1, 2], &[-4, -4]);
        let z1 = el(&g, &[1, 2, 1], &[-4, -4]);
        assert_eq!(g.length(&y), 14);
        assert_eq!(g.length(&y) - g.length(&z1), 1);
        for i in 0..=2 {
            assert_eq!(g.length(&g.simple_reflection(i).unwrap()), 1);
        }
    }

    #[test]
    fn s0_is_an_involution() {
        for t in ["A1", "A2", "B3", "C3", "G2"] {
            for c in [Convention::Untwisted, Convention::Dual] {
                let g = AffineWeylGroup::named(t, c).unwrap();
                let s0 = g.simple_reflection(0).unwrap();
                assert_eq!(g.mul(&s0, &s0), g.identity(), "{t} {c}");
                assert_eq!(g.length(&s0), 1);
            }
        }
        let b3 = AffineWeylGroup::named("B3", Convention::Dual).unwrap();
        let s0 = b3.simple_reflection(0).unwrap();
        assert_eq!(b3.weyl().length(s0.w), 5);
        assert_eq!(b3.weyl().word(s0.w), &[1, 2, 3, 2, 1]);
        assert!(b3.simple_reflection(4).is_err());
    }

    #[test]
    fn affine_reflections() {
        let g = a2();
        let a1 = RootVector::new(&[1, 0]).unwrap();
        let r = g.affine_reflection(&AffineRoot { alpha: a1, n: 0 }).unwrap();
        assert_eq!(r, el(&g, &[1], &[0, 0]));
        for n in -3..=3 {
            let r = g.affine_reflection(&AffineRoot { alpha: RootVector::new(&[1, 1]).unwrap(), n }).unwrap();
            assert_eq!(g.mul(&r, &r), g.identity());
            assert_eq!(g.as_affine_reflection(&r).unwrap().n, n);
        }
    }

    #[test]
    fn grassmannian_predicate() {
        let g = a2();
        assert!(g.is_affine_grassmannian(&g.identity()));
        assert!(g.is_affine_grassmannian(&el(&g, &[1, 2], &[-4, -4])));
        assert!(!g.is_affine_grassmannian(&el(&g, &[1, 2, 1], &[-1, -4])));
    }

    #[test]
    fn example_chain_is_saturated() {
        let g = a2();
        let y = el(&g, &[1, 2], &[-4, -4]);
        let z1 = el(&g, &[1, 2, 1], &[-4, -4]);
        let z2 = el(&g, &[1, 2], &[-3, -4]);
        let x = el(&g, &[2], &[3, 2]);
        for (lo, hi) in [(x, z2), (z2, z1), (z1, y)] {
            assert!(g.bruhat_leq(&lo, &hi).unwrap());
            assert!(g.generic_covers(&hi).iter().any(|(c, _)| *c == lo));
        }
        let z3 = el(&g, &[], &[3, 3]);
        assert!(g.bruhat_leq(&x, &z3).unwrap() && g.bruhat_leq(&z3, &z1).unwrap());
        assert!(!g.bruhat_leq(&y, &x).unwrap());
        assert_eq!(g.interval(&z1, &y).unwrap(), HashSet::from([z1, y]));
        assert_eq!(g.interval(&z2, &y).unwrap().len(), 4);
        assert!(g.interval(&y, &z1).is_err());
    }

    #[test]
    fn superregular_covers_match_generic() {
        let g = a2();
        for w in g.weyl().elements() {
            let y = AffineElement::new(w, CorootVector::new(&[-10, -11]).unwrap());
            let mut a: Vec<_> = g.covers_below(&y, CoverMode::Superregular { bound: 3 }).unwrap();
            let mut b = g.covers_below(&y, CoverMode::Generic).unwrap();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
        assert!(g.covers_below(&g.identity(), CoverMode::Generic).unwrap().is_empty());
        assert!(g.covers_below(&el(&g, &[], &[-2, -1]), CoverMode::Superregular { bound: 1 }).is_err());
        assert!(g.covers_below(&el(&g, &[1], &[-3, -4]), CoverMode::Superregular { bound: 3 }).is_err());
    }

    #[test]
    fn parse_and_format() {
        let g = a2();
        let y = g.parse("A2 w=[1,2] t=[-4,-4]").unwrap();
        assert_eq!(y, el(&g, &[1, 2], &[-4, -4]));
        assert_eq!(g.format(&y), "A2 w=[1,2] t=[-4,-4]");
        assert_eq!(g.parse("w=[1, 2] t=[ -4, -4 ]").unwrap(), y);
        assert!(g.parse("B2 w=[1] t=[0,0]").is_err());
        assert!(g.parse("A2 w=[1] t=[0,0,0]").is_err());
        assert!(g.parse("A2 t=[0,0]").is_err());
        let j = serde_json::to_string(&g.to_json(&y)).unwrap();
        assert_eq!(j, r#"{"type":"A2","w":[1,2],"t":[-4,-4],"convention":"untwisted"}"#);
        let back: ElementJson = serde_json::from_str(&j).unwrap();
        assert_eq!(g.from_json(&back).unwrap(), y);
    }
}
