//! The finite Weyl group W₀ of a root system.
//!
//! The group is enumerated once by breadth-first search from the identity
//! over right multiplication by simple reflections. Elements are handles into
//! that table and are ordered by (length, lexicographically smallest reduced
//! word), which is also the BFS discovery order.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cartan::{CorootVector, RootSystem, RootVector, MAX_RANK};
use crate::error::{invalid, Error, Result};

/// Groups larger than this are refused.
const MAX_GROUP_ORDER: usize = 200_000;
/// A full multiplication table is kept for groups up to this order.
const MUL_TABLE_LIMIT: usize = 2048;

/// An element of W₀, as an index into its [`WeylGroup`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct WeylElement(u32);

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
pub struct WeylGroup {
    rs: Arc<RootSystem>,
    rank: usize,
    /// Row-major rank×rank action on simple-coroot coordinates, per element.
    coroot_action: Vec<i32>,
    /// Row-major rank×rank action on simple-root coordinates, per element.
    root_action: Vec<i32>,
    words: Vec<Vec<u8>>,
    lengths: Vec<u32>,
    /// Bit `a` is set when the element sends positive root `a` to a negative root.
    inversions: Vec<u128>,
    inverse: Vec<u32>,
    right_simple: Vec<u32>,
    left_simple: Vec<u32>,
    mul_table: Option<Vec<u32>>,
    reflections: Vec<WeylElement>,
    reflection_root: HashMap<WeylElement, usize>,
}

impl WeylGroup {
    pub fn new(rs: impl Into<Arc<RootSystem>>) -> Result<Self> {
        let rs: Arc<RootSystem> = rs.into();
        let r = rs.rank();
        let nroots = rs.num_positive_roots();
        if nroots > 128 {
            return Err(Error::UnsupportedType(format!("{}: more than 128 positive roots", rs.label())));
        }
        let cartan = rs.cartan_matrix();
        let rr = r * r;

        let mut identity = vec![0i32; rr];
        for i in 0..r {
            identity[i * r + i] = 1;
        }
        let mut coroot_action = identity.clone();
        let mut root_action = identity;
        let mut words: Vec<Vec<u8>> = vec![vec![]];
        let mut index: HashMap<Vec<i32>, u32> = HashMap::new();
        index.insert(coroot_action[..rr].to_vec(), 0);
        let mut right_simple: Vec<u32> = Vec::new();

        let mut head = 0usize;
        while head < words.len() {
            for i in 0..r {
                // columns of M·s_i: col_j − cartan[i][j]·col_i  (coroots)
                //                   col_j − cartan[j][i]·col_i  (roots)
                let base = head * rr;
                let mut co = coroot_action[base..base + rr].to_vec();
                let mut ro = root_action[base..base + rr].to_vec();
                for j in 0..r {
                    let cc = cartan[i][j];
                    let rc = cartan[j][i];
                    for k in 0..r {
                        co[k * r + j] -= cc * coroot_action[base + k * r + i];
                        ro[k * r + j] -= rc * root_action[base + k * r + i];
                    }
                }
                let next = match index.get(&co) {
                    Some(&idx) => idx,
                    None => {
                        let idx = words.len() as u32;
                        if words.len() >= MAX_GROUP_ORDER {
                            return Err(Error::UnsupportedType(format!(
                                "{}: Weyl group has more than {MAX_GROUP_ORDER} elements",
                                rs.label()
                            )));
                        }
                        let mut w = words[head].clone();
                        w.push(i as u8 + 1);
                        words.push(w);
                        coroot_action.extend_from_slice(&co);
                        root_action.extend_from_slice(&ro);
                        index.insert(co, idx);
                        idx
                    }
                };
                right_simple.push(next);
            }
            head += 1;
        }
        let n = words.len();

        let mut g = WeylGroup {
            rs: rs.clone(),
            rank: r,
            coroot_action,
            root_action,
            words,
            lengths: vec![0; n],
            inversions: vec![0; n],
            inverse: vec![0; n],
            right_simple,
            left_simple: vec![0; n * r],
            mul_table: None,
            reflections: Vec::new(),
            reflection_root: HashMap::new(),
        };

        for e in 0..n {
            let mut bits = 0u128;
            for (a, alpha) in rs.positive_roots().iter().enumerate() {
                if g.act_on_root(WeylElement(e as u32), alpha).is_negative() {
                    bits |= 1u128 << a;
                }
            }
            g.inversions[e] = bits;
            g.lengths[e] = bits.count_ones();
            if g.lengths[e] as usize != g.words[e].len() {
                return Err(Error::Internal(format!(
                    "inversion count {} differs from BFS depth {} for {:?}",
                    g.lengths[e],
                    g.words[e].len(),
                    g.words[e]
                )));
            }
        }
        for e in 0..n {
            let inv = g.word_product(g.words[e].iter().rev().map(|&i| i as usize - 1));
            g.inverse[e] = inv.0;
        }
        for e in 0..n {
            for i in 0..r {
                // s_i·w = (w⁻¹·s_i)⁻¹
                let winv = g.inverse[e] as usize;
                let t = g.right_simple[winv * r + i] as usize;
                g.left_simple[e * r + i] = g.inverse[t];
            }
        }
        if n <= MUL_TABLE_LIMIT {
            let mut table = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    let word = &g.words[b];
                    let mut cur = a;
                    for &i in word {
                        cur = g.right_simple[cur * r + i as usize - 1] as usize;
                    }
                    table[a * n + b] = cur as u32;
                }
            }
            g.mul_table = Some(table);
        }
        let mut reflections = Vec::with_capacity(nroots);
        for a in 0..nroots {
            let e = g.find_reflection(a)?;
            g.reflection_root.insert(e, a);
            reflections.push(e);
        }
        g.reflections = reflections;
        Ok(g)
    }

    /// Locates `r_α` by conjugating a simple reflection: if α = u(α_i) then
    /// r_α = u s_i u⁻¹.
    fn find_reflection(&self, root: usize) -> Result<WeylElement> {
        let alpha = self.rs.positive_roots()[root];
        for e in self.elements() {
            for i in 0..self.rank {
                if self.act_on_root(e, &self.rs.simple_root(i)) == alpha {
                    let si = self.simple(i);
                    return Ok(self.mul(self.mul(e, si), self.inverse(e)));
                }
            }
        }
        Err(Error::Internal(format!("no Weyl conjugate of a simple root equals {alpha}")))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::IDENTITY
    }

    /// Every element exactly once, in (length, reduced word) order.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = WeylElement> + '_ {
        (0..self.words.len() as u32).map(WeylElement)
    }

    pub fn enumerate_group(&self) -> Vec<WeylElement> {
        self.elements().collect()
    }

    pub fn element(&self, index: usize) -> Option<WeylElement> {
        (index < self.order()).then_some(WeylElement(index as u32))
    }

    /// The simple reflection `s_{i+1}` (zero-based `i`).
    pub fn simple(&self, i: usize) -> WeylElement {
        WeylElement(self.right_simple[i])
    }

    pub fn longest(&self) -> WeylElement {
        WeylElement(self.words.len() as u32 - 1)
    }

    pub fn length(&self, w: WeylElement) -> u32 {
        self.lengths[w.index()]
    }

    /// The lexicographically smallest reduced word, 1-based.
    pub fn word(&self, w: WeylElement) -> &[u8] {
        &self.words[w.index()]
    }

    pub fn inversion_bits(&self, w: WeylElement) -> u128 {
        self.inversions[w.index()]
    }

    /// Whether `w` sends positive root `root` to a negative root.
    #[inline]
    pub fn sends_negative(&self, w: WeylElement, root: usize) -> bool {
        self.inversions[w.index()] >> root & 1 == 1
    }

    pub fn mul(&self, a: WeylElement, b: WeylElement) -> WeylElement {
        match &self.mul_table {
            Some(t) => WeylElement(t[a.index() * self.order() + b.index()]),
            None => {
                let mut cur = a.index();
                for &i in &self.words[b.index()] {
                    cur = self.right_simple[cur * self.rank + i as usize - 1] as usize;
                }
                WeylElement(cur as u32)
            }
        }
    }

    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.inverse[w.index()])
    }

    #[inline]
    pub fn mul_simple(&self, w: WeylElement, i: usize) -> WeylElement {
        WeylElement(self.right_simple[w.index() * self.rank + i])
    }

    #[inline]
    pub fn simple_mul(&self, i: usize, w: WeylElement) -> WeylElement {
        WeylElement(self.left_simple[w.index() * self.rank + i])
    }

    /// Product of simple reflections given by zero-based indices.
    pub fn word_product(&self, word: impl IntoIterator<Item = usize>) -> WeylElement {
        let mut cur = 0usize;
        for i in word {
            cur = self.right_simple[cur * self.rank + i] as usize;
        }
        WeylElement(cur as u32)
    }

    /// Product of simple reflections given by 1-based indices, as in `[1,2,1]`.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        if let Some(&bad) = word.iter().find(|&&i| i == 0 || i > self.rank) {
            return Err(invalid!("simple reflection index {bad} out of range 1..={}", self.rank));
        }
        Ok(self.word_product(word.iter().map(|&i| i - 1)))
    }

    /// Parses the bracketed word form, e.g. `[1,2]` or `[]`.
    pub fn parse(&self, s: &str) -> Result<WeylElement> {
        self.from_word(&parse_index_list(s)?)
    }

    pub fn format(&self, w: WeylElement) -> String {
        let items: Vec<String> = self.word(w).iter().map(|i| i.to_string()).collect();
        format!("[{}]", items.join(","))
    }

    pub fn display(&self, w: WeylElement) -> WordDisplay<'_> {
        WordDisplay(self, w)
    }

    /// The reflection `r_α` for a positive root α.
    pub fn reflection(&self, alpha: &RootVector) -> Result<WeylElement> {
        let a = self
            .rs
            .root_index(alpha)
            .ok_or_else(|| invalid!("{alpha} is not a positive root of {}", self.rs.label()))?;
        Ok(self.reflections[a])
    }

    pub fn reflection_by_index(&self, root: usize) -> WeylElement {
        self.reflections[root]
    }

    /// If `w` is a reflection, the index of its positive root.
    pub fn reflection_root(&self, w: WeylElement) -> Option<usize> {
        self.reflection_root.get(&w).copied()
    }

    pub fn act_on_coroot(&self, w: WeylElement, lambda: &CorootVector) -> CorootVector {
        let mut out = [0i32; MAX_RANK];
        let m = &self.coroot_action[w.index() * self.rank * self.rank..];
        for (i, o) in out.iter_mut().enumerate().take(self.rank) {
            *o = (0..self.rank).map(|j| m[i * self.rank + j] * lambda.get(j)).sum();
        }
        CorootVector::new(&out[..self.rank]).expect("rank bounded")
    }

    pub fn act_on_root(&self, w: WeylElement, alpha: &RootVector) -> RootVector {
        let mut out = [0i32; MAX_RANK];
        let m = &self.root_action[w.index() * self.rank * self.rank..];
        for (i, o) in out.iter_mut().enumerate().take(self.rank) {
            *o = (0..self.rank).map(|j| m[i * self.rank + j] * alpha.get(j)).sum();
        }
        RootVector::new(&out[..self.rank]).expect("rank bounded")
    }

    /// Row-major action matrix on simple-coroot coordinates.
    pub fn coroot_matrix(&self, w: WeylElement) -> Vec<Vec<i32>> {
        let r = self.rank;
        let m = &self.coroot_action[w.index() * r * r..(w.index() + 1) * r * r];
        m.chunks(r).map(|row| row.to_vec()).collect()
    }

    /// `(v, λ)` with `μ = v(λ)` and λ antidominant, `v` of minimal length.
    pub fn antidominant_factor(&self, mu: &CorootVector) -> (WeylElement, CorootVector) {
        let rs = &self.rs;
        let mut v = WeylElement::IDENTITY;
        let mut lambda = *mu;
        'outer: loop {
            for i in 0..self.rank {
                if rs.pair_root(&lambda, i) > 0 {
                    lambda = rs.reflect_coroot_by(i, &lambda);
                    v = self.mul_simple(v, i);
                    continue 'outer;
                }
            }
            return (v, lambda);
        }
    }
}

pub struct WordDisplay<'a>(&'a WeylGroup, WeylElement);

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format(self.1))
    }
}

/// Parses `[a,b,c]` (brackets optional, whitespace ignored) into integers.
pub fn parse_int_list(s: &str) -> Result<Vec<i32>> {
    let t = s.trim();
    let t = t.strip_prefix('[').unwrap_or(t);
    let t = t.strip_suffix(']').unwrap_or(t);
    if t.trim().is_empty() {
        return Ok(vec![]);
    }
    t.split(',')
        .map(|p| p.trim().parse::<i32>().map_err(|_| invalid!("bad integer {:?} in {s:?}", p.trim())))
        .collect()
}

fn parse_index_list(s: &str) -> Result<Vec<usize>> {
    parse_int_list(s)?
        .into_iter()
        .map(|i| usize::try_from(i).map_err(|_| invalid!("negative index {i} in {s:?}")))
        .collect()
}
