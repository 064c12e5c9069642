use std::collections::HashSet;

use affgrass::cartan::RootSystem;
use affgrass::qbg::{
    DualUntwisted, EdgeKind, QbgPath, QuantumBruhatGraph, ReflectionOrdering, SwapDirection, Untwisted, WeightConvention,
};
use affgrass::weyl::WeylGroup;

fn graph<C: WeightConvention>(t: &str) -> QuantumBruhatGraph<C> {
    QuantumBruhatGraph::from_root_system(RootSystem::named(t).unwrap()).unwrap()
}

/// Every reduced word of w₀, by depth-first search over descents.
fn reduced_words_of_longest(weyl: &WeylGroup) -> Vec<Vec<usize>> {
    fn go(weyl: &WeylGroup, w: affgrass::weyl::WeylElement, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if w.is_identity() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for i in 0..weyl.rank() {
            let ws = weyl.mul_simple(w, i);
            if weyl.length(ws) < weyl.length(w) {
                suffix.push(i + 1);
                go(weyl, ws, suffix, out);
                suffix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(weyl, weyl.longest(), &mut Vec::new(), &mut out);
    out
}

fn check_edge_rules<C: WeightConvention>(g: &QuantumBruhatGraph<C>) {
    let weyl = g.weyl();
    let rs = g.root_system();
    for w in weyl.elements() {
        for a in 0..rs.num_positive_roots() {
            let t = weyl.mul(w, weyl.reflection_by_index(a));
            let up = weyl.length(t) == weyl.length(w) + 1;
            let down = weyl.length(t) as i32 == weyl.length(w) as i32 - C::quantum_drop(rs, a) + 1;
            match g.edge(w, t) {
                Some(e) => {
                    assert_eq!(e.root, a);
                    assert_eq!(e.kind == EdgeKind::Bruhat, up);
                    assert_eq!(e.kind == EdgeKind::Quantum, down);
                    if e.kind == EdgeKind::Bruhat {
                        assert!(e.weight.is_zero());
                    } else {
                        assert_eq!(e.weight, C::weight(rs, a));
                    }
                }
                None => assert!(!up && !down),
            }
        }
    }
}

#[test]
fn edge_conditions_hold_exactly() {
    for t in ["A2", "A3", "C2", "G2", "B3", "C3"] {
        check_edge_rules(&graph::<Untwisted>(t));
        check_edge_rules(&graph::<DualUntwisted>(t));
    }
}

#[test]
fn all_shortest_paths_share_their_weight() {
    for t in ["A2", "C2", "G2", "A3"] {
        let g = graph::<Untwisted>(t);
        for u in g.weyl().elements() {
            for v in g.weyl().elements() {
                let (m, d) = g.min_weight(u, v).unwrap();
                let paths = g.shortest_paths(u, v).unwrap();
                assert!(!paths.is_empty());
                for p in paths {
                    assert_eq!(p.len() as u32, d);
                    assert_eq!(g.path_weight(&p).unwrap(), m, "{t}");
                }
            }
        }
    }
}

#[test]
fn two_loops_have_simple_labels() {
    for t in ["A2", "C2", "G2", "B3"] {
        let g = graph::<Untwisted>(t);
        for e in g.edges() {
            if g.edge(e.target, e.source).is_some() {
                assert!(e.root < g.root_system().rank(), "{t}: 2-loop through a non-simple label");
            }
        }
    }
}

#[test]
fn diamond_swaps_are_unique_and_preserve_weight() {
    for t in ["A2", "C2", "G2"] {
        let g = graph::<Untwisted>(t);
        for word in reduced_words_of_longest(g.weyl()) {
            let ord = ReflectionOrdering::from_reduced_word(g.weyl(), &word).unwrap();
            for p in g.all_paths(2).into_iter().filter(|p| p.len() == 2) {
                let (a, b) = (p.edges[0].root, p.edges[1].root);
                if a == b {
                    continue;
                }
                let dir = if ord.less(b, a) { SwapDirection::Ascent } else { SwapDirection::Descent };
                let q = g.diamond_swap(&p, 0, &ord, dir).unwrap();
                assert_eq!((q.start, q.end(), q.len()), (p.start, p.end(), p.len()));
                assert_eq!(g.path_weight(&q).unwrap(), g.path_weight(&p).unwrap());
                let back = match dir {
                    SwapDirection::Ascent => SwapDirection::Descent,
                    SwapDirection::Descent => SwapDirection::Ascent,
                };
                assert_eq!(g.diamond_swap(&q, 0, &ord, back).unwrap(), p, "{t} {word:?}");
            }
        }
    }
}

#[test]
fn non_minimal_paths_reach_a_two_loop() {
    for t in ["A2", "C2", "G2"] {
        let g = graph::<Untwisted>(t);
        let ord = ReflectionOrdering::default_for(g.weyl());
        for p in g.all_paths(4) {
            let d = g.distance(p.start, p.end()).unwrap();
            let excess = g.excess_weight(&p).unwrap();
            assert!(excess.is_nonnegative());
            match g.find_two_loop_equivalent(&p, &ord).unwrap() {
                None => {
                    assert_eq!(p.len() as u32, d);
                    assert!(excess.is_zero());
                }
                Some(q) => {
                    assert!(p.len() as u32 > d);
                    assert!(q.has_two_loop());
                    assert_eq!((q.start, q.end(), q.len()), (p.start, p.end(), p.len()));
                    assert_eq!(g.path_weight(&q).unwrap(), g.path_weight(&p).unwrap());
                }
            }
        }
    }
}

#[test]
fn shortest_paths_are_the_ascending_ones() {
    // A path with ascending labels is the unique such path and is shortest.
    for t in ["A2", "C2", "G2"] {
        let g = graph::<Untwisted>(t);
        let ord = ReflectionOrdering::default_for(g.weyl());
        let mut seen = HashSet::new();
        for p in g.all_paths(6) {
            let labels = p.labels();
            if labels.windows(2).all(|w| ord.less(w[0], w[1])) {
                assert_eq!(p.len() as u32, g.distance(p.start, p.end()).unwrap(), "{t}");
                assert!(seen.insert((p.start, p.end())), "{t}: two ascending paths");
            }
        }
    }
}

#[test]
fn trivial_paths() {
    let g = graph::<Untwisted>("A2");
    for w in g.weyl().elements() {
        let p = QbgPath::trivial(w);
        assert!(g.path_weight(&p).unwrap().is_zero());
        assert_eq!(g.find_two_loop_equivalent(&p, &ReflectionOrdering::default_for(g.weyl())).unwrap(), None);
    }
}
