//! The quantum Bruhat graph on W₀.
//!
//! An edge `w → w r_α` is a Bruhat edge when the length goes up by one and a
//! quantum edge when it drops by `⟨α∨, 2ρ⟩ − 1`. Under the dual convention
//! the drop is `⟨2ρ∨, α⟩ − 1` and quantum weights are roots rather than
//! coroots; the [`WeightConvention`] parameter keeps the two apart.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::marker::PhantomData;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::cartan::{CorootSpace, LatticeVector, RootSpace, RootSystem, RootVector, Space};
use crate::error::{internal, invalid, precondition, Result};
use crate::weyl::{WeylElement, WeylGroup};

pub trait WeightConvention: Copy + Default + Eq + std::hash::Hash + fmt::Debug + Send + Sync + 'static {
    type Space: Space;
    const NAME: &'static str;
    /// How far ℓ drops along a quantum edge labelled by positive root `root`,
    /// plus one.
    fn quantum_drop(rs: &RootSystem, root: usize) -> i32;
    fn weight(rs: &RootSystem, root: usize) -> LatticeVector<Self::Space>;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Untwisted;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct DualUntwisted;

impl WeightConvention for Untwisted {
    type Space = CorootSpace;
    const NAME: &'static str = "untwisted";
    fn quantum_drop(rs: &RootSystem, root: usize) -> i32 {
        rs.pairing(&rs.coroot(root), &rs.two_rho())
    }
    fn weight(rs: &RootSystem, root: usize) -> LatticeVector<CorootSpace> {
        rs.coroot(root)
    }
}

impl WeightConvention for DualUntwisted {
    type Space = RootSpace;
    const NAME: &'static str = "dual";
    fn quantum_drop(rs: &RootSystem, root: usize) -> i32 {
        rs.pairing(&rs.two_rho_check(), &rs.positive_roots()[root])
    }
    fn weight(rs: &RootSystem, root: usize) -> LatticeVector<RootSpace> {
        rs.positive_roots()[root]
    }
}

pub type Weight<C> = LatticeVector<<C as WeightConvention>::Space>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QbgEdge<C: WeightConvention> {
    pub source: WeylElement,
    pub target: WeylElement,
    /// Index of the label in the positive roots.
    pub root: usize,
    pub kind: EdgeKind,
    pub weight: Weight<C>,
}

/// A directed path, stored as its start vertex and edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QbgPath<C: WeightConvention> {
    pub start: WeylElement,
    pub edges: Vec<QbgEdge<C>>,
}

impl<C: WeightConvention> QbgPath<C> {
    pub fn trivial(v: WeylElement) -> Self {
        QbgPath { start: v, edges: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn end(&self) -> WeylElement {
        self.edges.last().map_or(self.start, |e| e.target)
    }

    pub fn vertices(&self) -> Vec<WeylElement> {
        std::iter::once(self.start).chain(self.edges.iter().map(|e| e.target)).collect()
    }

    pub fn labels(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.root).collect()
    }

    /// Whether some vertex is revisited after exactly two steps.
    pub fn has_two_loop(&self) -> bool {
        self.edges.windows(2).any(|p| p[0].source == p[1].target)
    }

    /// Concatenation; `other` must start where `self` ends.
    pub fn concat(&self, other: &QbgPath<C>) -> Result<QbgPath<C>> {
        if self.end() != other.start {
            return Err(invalid!("paths do not compose: {:?} then {:?}", self.end(), other.start));
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Ok(QbgPath { start: self.start, edges })
    }
}

/// Positions of the positive roots in a reflection ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionOrdering {
    word: Vec<u8>,
    position: Vec<usize>,
}

impl ReflectionOrdering {
    /// `β_k = s_{i₁}⋯s_{i_{k−1}}(α_{i_k})` for a reduced word of w₀.
    pub fn from_reduced_word(weyl: &WeylGroup, word: &[usize]) -> Result<Self> {
        let rs = weyl.root_system();
        let w0 = weyl.longest();
        if word.len() != weyl.length(w0) as usize || weyl.from_word(word)? != w0 {
            return Err(invalid!("{word:?} is not a reduced word for the longest element"));
        }
        let mut position = vec![usize::MAX; rs.num_positive_roots()];
        let mut prefix = WeylElement::IDENTITY;
        for (k, &i) in word.iter().enumerate() {
            let beta = weyl.act_on_root(prefix, &rs.simple_root(i - 1));
            let a = rs.root_index(&beta).ok_or_else(|| internal!("{beta} is not a positive root"))?;
            position[a] = k;
            prefix = weyl.mul_simple(prefix, i - 1);
        }
        Ok(ReflectionOrdering { word: word.iter().map(|&i| i as u8).collect(), position })
    }

    /// The ordering attached to the lexicographically smallest reduced word
    /// of w₀.
    pub fn default_for(weyl: &WeylGroup) -> Self {
        let word: Vec<usize> = weyl.word(weyl.longest()).iter().map(|&i| i as usize).collect();
        Self::from_reduced_word(weyl, &word).expect("BFS words are reduced")
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn position(&self, root: usize) -> usize {
        self.position[root]
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }

    pub fn reversed(&self) -> Self {
        let n = self.position.len();
        ReflectionOrdering {
            word: self.word.clone(),
            position: self.position.iter().map(|&p| n - 1 - p).collect(),
        }
    }

    /// The roots from first to last.
    pub fn sequence(&self) -> Vec<usize> {
        let mut roots: Vec<usize> = (0..self.position.len()).collect();
        roots.sort_by_key(|&a| self.position[a]);
        roots
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwapDirection {
    /// Replace a descending label pair by an ascending one.
    Ascent,
    /// Replace an ascending label pair by a descending one.
    Descent,
}

/// Distances and shortest-path weights from one source.
#[derive(Debug)]
struct SourceTable<C: WeightConvention> {
    dist: Vec<u32>,
    weight: Vec<Weight<C>>,
}

pub struct QuantumBruhatGraph<C: WeightConvention> {
    weyl: Arc<WeylGroup>,
    edges: Vec<QbgEdge<C>>,
    out: Vec<Vec<usize>>,
    by_pair: HashMap<(WeylElement, WeylElement), usize>,
    tables: Vec<OnceLock<Result<SourceTable<C>>>>,
    _c: PhantomData<C>,
}

impl<C: WeightConvention> fmt::Debug for QuantumBruhatGraph<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuantumBruhatGraph")
            .field("type", &self.weyl.root_system().label())
            .field("convention", &C::NAME)
            .field("vertices", &self.weyl.order())
            .field("edges", &self.edges.len())
            .finish()
    }
}

impl<C: WeightConvention> QuantumBruhatGraph<C> {
    pub fn new(weyl: Arc<WeylGroup>) -> Result<Self> {
        let rs = weyl.root_system();
        let n = weyl.order();
        let mut edges = Vec::new();
        let mut out = vec![Vec::new(); n];
        let mut by_pair = HashMap::new();
        for w in weyl.elements() {
            let lw = weyl.length(w) as i32;
            for a in 0..rs.num_positive_roots() {
                let t = weyl.mul(w, weyl.reflection_by_index(a));
                let lt = weyl.length(t) as i32;
                let bruhat = lt == lw + 1;
                let quantum = lt == lw - C::quantum_drop(rs, a) + 1;
                let edge = match (bruhat, quantum) {
                    (true, true) => return Err(internal!("edge {w:?} -> {t:?} satisfies both edge conditions")),
                    (true, false) => QbgEdge { source: w, target: t, root: a, kind: EdgeKind::Bruhat, weight: Weight::<C>::zero(rs.rank()) },
                    (false, true) => QbgEdge { source: w, target: t, root: a, kind: EdgeKind::Quantum, weight: C::weight(rs, a) },
                    (false, false) => continue,
                };
                out[w.index()].push(edges.len());
                by_pair.insert((w, t), edges.len());
                edges.push(edge);
            }
        }
        Ok(QuantumBruhatGraph { weyl, edges, out, by_pair, tables: (0..n).map(|_| OnceLock::new()).collect(), _c: PhantomData })
    }

    pub fn from_root_system(rs: RootSystem) -> Result<Self> {
        Self::new(Arc::new(WeylGroup::new(rs)?))
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn weyl_arc(&self) -> &Arc<WeylGroup> {
        &self.weyl
    }

    pub fn root_system(&self) -> &RootSystem {
        self.weyl.root_system()
    }

    pub fn convention_name(&self) -> &'static str {
        C::NAME
    }

    pub fn edges(&self) -> &[QbgEdge<C>] {
        &self.edges
    }

    pub fn out_edges(&self, w: WeylElement) -> impl Iterator<Item = &QbgEdge<C>> + '_ {
        self.out[w.index()].iter().map(move |&e| &self.edges[e])
    }

    pub fn edge(&self, source: WeylElement, target: WeylElement) -> Option<&QbgEdge<C>> {
        self.by_pair.get(&(source, target)).map(|&e| &self.edges[e])
    }

    pub fn label(&self, e: &QbgEdge<C>) -> RootVector {
        self.root_system().positive_roots()[e.root]
    }

    /// The path through the given vertices; fails if a step is not an edge.
    pub fn path(&self, vertices: &[WeylElement]) -> Result<QbgPath<C>> {
        let (&start, _) = vertices.split_first().ok_or_else(|| invalid!("a path needs at least one vertex"))?;
        let mut edges = Vec::with_capacity(vertices.len() - 1);
        for p in vertices.windows(2) {
            let e = self
                .edge(p[0], p[1])
                .ok_or_else(|| invalid!("no edge {} -> {}", self.weyl.format(p[0]), self.weyl.format(p[1])))?;
            edges.push(*e);
        }
        Ok(QbgPath { start, edges })
    }

    /// Sum of the edge weights, after checking that the path is an actual
    /// path of this graph.
    pub fn path_weight(&self, p: &QbgPath<C>) -> Result<Weight<C>> {
        let mut at = p.start;
        let mut total = Weight::<C>::zero(self.weyl.rank());
        for e in &p.edges {
            if e.source != at || self.edge(e.source, e.target) != Some(e) {
                return Err(invalid!("broken path at {}", self.weyl.format(at)));
            }
            total += e.weight;
            at = e.target;
        }
        Ok(total)
    }

    fn table(&self, u: WeylElement) -> Result<&SourceTable<C>> {
        self.tables[u.index()]
            .get_or_init(|| self.bfs(u))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// BFS from `u`. Every time a vertex is reached again at its shortest
    /// distance, the weight through the new predecessor is compared with the
    /// stored one, which checks every shortest path.
    fn bfs(&self, u: WeylElement) -> Result<SourceTable<C>> {
        let n = self.weyl.order();
        let mut dist = vec![u32::MAX; n];
        let mut weight = vec![Weight::<C>::zero(self.weyl.rank()); n];
        dist[u.index()] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(a) = queue.pop_front() {
            let da = dist[a.index()];
            for e in self.out_edges(a) {
                let t = e.target.index();
                let wt = weight[a.index()] + e.weight;
                if dist[t] == u32::MAX {
                    dist[t] = da + 1;
                    weight[t] = wt;
                    queue.push_back(e.target);
                } else if dist[t] == da + 1 && weight[t] != wt {
                    return Err(internal!(
                        "shortest paths {} -> {} have weights {} and {}",
                        self.weyl.format(u),
                        self.weyl.format(e.target),
                        weight[t],
                        wt
                    ));
                }
            }
        }
        if dist.contains(&u32::MAX) {
            return Err(internal!("graph is not strongly connected from {}", self.weyl.format(u)));
        }
        Ok(SourceTable { dist, weight })
    }

    /// `(M(u, v), d(u, v))`.
    pub fn min_weight(&self, u: WeylElement, v: WeylElement) -> Result<(Weight<C>, u32)> {
        let t = self.table(u)?;
        Ok((t.weight[v.index()], t.dist[v.index()]))
    }

    pub fn distance(&self, u: WeylElement, v: WeylElement) -> Result<u32> {
        Ok(self.table(u)?.dist[v.index()])
    }

    /// Every shortest path from `u` to `v`.
    pub fn shortest_paths(&self, u: WeylElement, v: WeylElement) -> Result<Vec<QbgPath<C>>> {
        let t = self.table(u)?;
        let mut out = Vec::new();
        let mut stack: Vec<QbgEdge<C>> = Vec::new();
        self.extend_shortest(&t.dist, u, v, &mut stack, &mut out);
        Ok(out)
    }

    fn extend_shortest(
        &self,
        dist: &[u32],
        at: WeylElement,
        goal: WeylElement,
        stack: &mut Vec<QbgEdge<C>>,
        out: &mut Vec<QbgPath<C>>,
    ) {
        if dist[at.index()] == dist[goal.index()] {
            if at == goal {
                let start = stack.first().map_or(at, |e| e.source);
                out.push(QbgPath { start, edges: stack.clone() });
            }
            return;
        }
        for e in self.out_edges(at) {
            if dist[e.target.index()] == dist[at.index()] + 1 {
                stack.push(*e);
                self.extend_shortest(dist, e.target, goal, stack, out);
                stack.pop();
            }
        }
    }

    /// `wt(P) − M(start, end)`, which must have nonnegative coordinates.
    pub fn excess_weight(&self, p: &QbgPath<C>) -> Result<Weight<C>> {
        let total = self.path_weight(p)?;
        let (m, _) = self.min_weight(p.start, p.end())?;
        let excess = total - m;
        if !excess.is_nonnegative() {
            return Err(internal!("path weight {total} minus M = {m} has a negative coordinate"));
        }
        Ok(excess)
    }

    /// `u ⪯_w v`: `u` lies on some shortest path from `w` to `v`.
    pub fn tilted_leq(&self, w: WeylElement, u: WeylElement, v: WeylElement) -> Result<bool> {
        let (mwu, dwu) = self.min_weight(w, u)?;
        let (muv, duv) = self.min_weight(u, v)?;
        let (mwv, dwv) = self.min_weight(w, v)?;
        Ok(dwu + duv == dwv && mwu + muv == mwv)
    }

    /// All paths `a → m → c` of length two.
    fn two_step_paths(&self, a: WeylElement, c: WeylElement) -> Vec<(QbgEdge<C>, QbgEdge<C>)> {
        self.out_edges(a)
            .filter_map(|e1| self.edge(e1.target, c).map(|e2| (*e1, *e2)))
            .collect()
    }

    /// Replaces edges `i, i+1` of `p` by the unique two-step path between the
    /// same vertices whose labels are ascending (or descending) in `ordering`.
    pub fn diamond_swap(
        &self,
        p: &QbgPath<C>,
        i: usize,
        ordering: &ReflectionOrdering,
        direction: SwapDirection,
    ) -> Result<QbgPath<C>> {
        if i + 1 >= p.len() {
            return Err(invalid!("no edge pair at position {i} in a path of length {}", p.len()));
        }
        self.path_weight(p)?;
        let ord = match direction {
            SwapDirection::Ascent => ordering.clone(),
            SwapDirection::Descent => ordering.reversed(),
        };
        let (e1, e2) = (p.edges[i], p.edges[i + 1]);
        if !ord.less(e2.root, e1.root) {
            return Err(precondition!(
                "labels {} and {} at position {i} are not out of order for a {direction:?} swap",
                self.label(&e1),
                self.label(&e2)
            ));
        }
        let candidates: Vec<_> = self
            .two_step_paths(e1.source, e2.target)
            .into_iter()
            .filter(|(f1, f2)| ord.less(f1.root, f2.root))
            .collect();
        let (f1, f2) = match candidates.as_slice() {
            [one] => *one,
            [] => return Err(precondition!("no ordered replacement for the pair at position {i}")),
            _ => return Err(internal!("{} ordered replacements for the pair at position {i}", candidates.len())),
        };
        if f1.weight + f2.weight != e1.weight + e2.weight {
            return Err(internal!("diamond swap changed the weight"));
        }
        let mut edges = p.edges.clone();
        edges[i] = f1;
        edges[i + 1] = f2;
        Ok(QbgPath { start: p.start, edges })
    }

    /// For a path longer than the distance between its ends, sorts its labels
    /// by ascent swaps until two adjacent labels coincide, which is a 2-loop.
    /// Returns `None` for shortest paths.
    pub fn find_two_loop_equivalent(&self, p: &QbgPath<C>, ordering: &ReflectionOrdering) -> Result<Option<QbgPath<C>>> {
        self.path_weight(p)?;
        if p.len() as u32 == self.distance(p.start, p.end())? {
            return Ok(None);
        }
        let budget = 64 * (p.len() + 1) * (ordering.position.len() + 1);
        let mut cur = p.clone();
        for _ in 0..budget {
            if cur.has_two_loop() {
                return Ok(Some(cur));
            }
            let labels = cur.labels();
            match (0..labels.len().saturating_sub(1)).find(|&k| ordering.less(labels[k + 1], labels[k])) {
                Some(k) => cur = self.diamond_swap(&cur, k, ordering, SwapDirection::Ascent)?,
                None => {
                    return Err(internal!(
                        "non-minimal path with ascending labels from {} to {}",
                        self.weyl.format(cur.start),
                        self.weyl.format(cur.end())
                    ))
                }
            }
        }
        Err(internal!("label sorting did not terminate within {budget} swaps"))
    }

    /// Whether `q` is reachable from `p` by diamond swaps in either direction.
    pub fn interval_equivalent(&self, p: &QbgPath<C>, q: &QbgPath<C>, ordering: &ReflectionOrdering) -> Result<bool> {
        self.path_weight(p)?;
        self.path_weight(q)?;
        if (p.start, p.end(), p.len()) != (q.start, q.end(), q.len()) {
            return Ok(false);
        }
        let mut seen = std::collections::HashSet::from([p.clone()]);
        let mut queue = VecDeque::from([p.clone()]);
        while let Some(cur) = queue.pop_front() {
            if &cur == q {
                return Ok(true);
            }
            for k in 0..cur.len().saturating_sub(1) {
                let (a, b) = (cur.edges[k].root, cur.edges[k + 1].root);
                if a == b {
                    continue;
                }
                let dir = if ordering.less(b, a) { SwapDirection::Ascent } else { SwapDirection::Descent };
                let next = self.diamond_swap(&cur, k, ordering, dir)?;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Ok(false)
    }

    /// All paths with at most `max_len` edges starting anywhere.
    pub fn all_paths(&self, max_len: usize) -> Vec<QbgPath<C>> {
        let mut out: Vec<QbgPath<C>> = self.weyl.elements().map(QbgPath::trivial).collect();
        let mut layer = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &layer {
                for e in self.out_edges(p.end()) {
                    let mut q = p.clone();
                    q.edges.push(*e);
                    next.push(q);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Graphviz rendering; vertices in (length, reduced word) order.
    pub fn to_dot(&self) -> String {
        let g = &self.weyl;
        let mut s = format!(
            "digraph qbg {{\n  label=\"{} {}\";\n  node [shape=box];\n",
            self.root_system().label(),
            C::NAME
        );
        for w in g.elements() {
            s.push_str(&format!("  v{} [label=\"{}\"];\n", w.index(), g.format(w)));
        }
        for e in &self.edges {
            match e.kind {
                EdgeKind::Bruhat => s.push_str(&format!(
                    "  v{} -> v{} [kind=\"bruhat\", label=\"{}\"];\n",
                    e.source.index(),
                    e.target.index(),
                    self.label(e)
                )),
                EdgeKind::Quantum => s.push_str(&format!(
                    "  v{} -> v{} [kind=\"quantum\", style=dashed, label=\"{}\", weight=\"{}\"];\n",
                    e.source.index(),
                    e.target.index(),
                    self.label(e),
                    e.weight
                )),
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> GraphJson {
        let g = &self.weyl;
        GraphJson {
            type_label: self.root_system().label().to_string(),
            convention: C::NAME,
            vertices: g.elements().map(|w| g.word(w).iter().map(|&i| i as usize).collect()).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    source: g.word(e.source).iter().map(|&i| i as usize).collect(),
                    target: g.word(e.target).iter().map(|&i| i as usize).collect(),
                    label: self.label(e).coords().to_vec(),
                    kind: e.kind,
                    weight: e.weight.coords().to_vec(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub convention: &'static str,
    pub vertices: Vec<Vec<usize>>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeJson {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub label: Vec<i32>,
    pub kind: EdgeKind,
    pub weight: Vec<i32>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CorootVector;

    fn a2() -> QuantumBruhatGraph<Untwisted> {
        QuantumBruhatGraph::from_root_system(RootSystem::named("A2").unwrap()).unwrap()
    }

    fn cv(c: &[i32]) -> CorootVector {
        CorootVector::new(c).unwrap()
    }

    #[test]
    fn a2_quantum_edges() {
        let g = a2();
        let w = |word: &[usize]| g.weyl().from_word(word).unwrap();
        let mut quantum: Vec<_> = g
            .edges()
            .iter()
            .filter(|e| e.kind == EdgeKind::Quantum)
            .map(|e| (e.source, e.target, e.weight))
            .collect();
        quantum.sort();
        let mut expected = vec![
            (w(&[1]), w(&[]), cv(&[1, 0])),
            (w(&[2]), w(&[]), cv(&[0, 1])),
            (w(&[1, 2]), w(&[1]), cv(&[0, 1])),
            (w(&[2, 1]), w(&[2]), cv(&[1, 0])),
            (w(&[1, 2, 1]), w(&[]), cv(&[1, 1])),
            (w(&[1, 2, 1]), w(&[1, 2]), cv(&[1, 0])),
            (w(&[1, 2, 1]), w(&[2, 1]), cv(&[0, 1])),
        ];
        expected.sort();
        assert_eq!(quantum, expected);
        assert_eq!(g.edges().iter().filter(|e| e.kind == EdgeKind::Bruhat).count(), 8);
    }

    #[test]
    fn min_weights() {
        let g = a2();
        let w = |word: &[usize]| g.weyl().from_word(word).unwrap();
        assert_eq!(g.min_weight(w(&[2]), w(&[2])).unwrap(), (cv(&[0, 0]), 0));
        assert_eq!(g.min_weight(w(&[1, 2, 1]), w(&[1])).unwrap(), (cv(&[1, 1]), 2));
        assert_eq!(g.min_weight(w(&[1, 2]), w(&[1])).unwrap(), (cv(&[0, 1]), 1));
        assert_eq!(g.shortest_paths(w(&[1, 2, 1]), w(&[1])).unwrap().len(), 2);
    }

    #[test]
    fn path_weights() {
        let g = a2();
        let w = |word: &[usize]| g.weyl().from_word(word).unwrap();
        assert_eq!(g.path_weight(&QbgPath::trivial(w(&[1]))).unwrap(), cv(&[0, 0]));
        let pf = g.path(&[w(&[1, 2, 1]), w(&[])]).unwrap();
        assert_eq!(g.path_weight(&pf).unwrap(), cv(&[1, 1]));
        let pn = g.path(&[w(&[1, 2]), w(&[1, 2, 1]), w(&[1, 2])]).unwrap();
        assert_eq!(g.path_weight(&pn).unwrap(), cv(&[1, 0]));
        assert_eq!(g.excess_weight(&pn).unwrap(), cv(&[1, 0]));
        assert!(g.path(&[w(&[]), w(&[1, 2, 1])]).is_err());
        let mut broken = pn.clone();
        broken.start = w(&[2]);
        assert!(g.path_weight(&broken).is_err());
    }

    #[test]
    fn tilted_order() {
        let g = a2();
        let w = |word: &[usize]| g.weyl().from_word(word).unwrap();
        let w0 = g.weyl().longest();
        assert!(g.tilted_leq(w0, w(&[]), w(&[1])).unwrap());
        assert!(!g.tilted_leq(w0, w(&[2, 1]), w(&[1])).unwrap());
        for v in g.weyl().elements() {
            assert!(g.tilted_leq(w0, w0, v).unwrap());
        }
    }

    #[test]
    fn swaps_between_the_two_shortest_paths() {
        let g = a2();
        let w = |word: &[usize]| g.weyl().from_word(word).unwrap();
        let ord = ReflectionOrdering::default_for(g.weyl());
        let p1 = g.path(&[w(&[1, 2, 1]), w(&[]), w(&[1])]).unwrap();
        let p2 = g.path(&[w(&[1, 2, 1]), w(&[1, 2]), w(&[1])]).unwrap();
        let (asc, desc) = if ord.less(p1.edges[0].root, p1.edges[1].root) { (&p1, &p2) } else { (&p2, &p1) };
        assert_eq!(&g.diamond_swap(desc, 0, &ord, SwapDirection::Ascent).unwrap(), asc);
        assert_eq!(&g.diamond_swap(asc, 0, &ord, SwapDirection::Descent).unwrap(), desc);
        assert!(g.diamond_swap(asc, 0, &ord, SwapDirection::Ascent).is_err());
    }

    #[test]
    fn two_loops() {
        let g = a2();
        let w = |word: &[usize]| g.weyl().from_word(word).unwrap();
        let ord = ReflectionOrdering::default_for(g.weyl());
        let loop2 = g.path(&[w(&[1, 2]), w(&[1, 2, 1]), w(&[1, 2])]).unwrap();
        assert_eq!(g.find_two_loop_equivalent(&loop2, &ord).unwrap(), Some(loop2));
        let short = g.path(&[w(&[1, 2]), w(&[1])]).unwrap();
        assert_eq!(g.find_two_loop_equivalent(&short, &ord).unwrap(), None);
    }

    #[test]
    fn reflection_orderings() {
        let weyl = WeylGroup::new(RootSystem::named("A2").unwrap()).unwrap();
        let ord = ReflectionOrdering::default_for(&weyl);
        assert_eq!(ord.word(), &[1, 2, 1]);
        // α₁ < α₁+α₂ < α₂
        assert_eq!(ord.sequence(), vec![0, 2, 1]);
        assert!(ReflectionOrdering::from_reduced_word(&weyl, &[1, 2]).is_err());
        assert!(ReflectionOrdering::from_reduced_word(&weyl, &[1, 1, 2]).is_err());
    }

    #[test]
    fn dual_edge_from_s_phi() {
        for (t, len) in [("C3", 7), ("B3", 5)] {
            let g: QuantumBruhatGraph<DualUntwisted> =
                QuantumBruhatGraph::from_root_system(RootSystem::named(t).unwrap()).unwrap();
            let rs = g.root_system();
            let s_phi = g.weyl().reflection(&rs.highest_short_root()).unwrap();
            assert_eq!(g.weyl().length(s_phi), len);
            let e = g.edge(s_phi, WeylElement::IDENTITY).expect("quantum edge s_phi -> 1");
            assert_eq!(e.kind, EdgeKind::Quantum);
            assert_eq!(e.weight, rs.highest_short_root());
        }
    }

    #[test]
    fn dot_export() {
        let dot = a2().to_dot();
        assert_eq!(dot.matches("kind=\"quantum\"").count(), 7);
        assert_eq!(dot.matches("kind=\"bruhat\"").count(), 8);
    }
}
