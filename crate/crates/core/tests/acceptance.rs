//! Acceptance run: one PASS/FAIL line per criterion, exact integer equality
//! throughout. Built with `harness = false`, so `cargo test` runs `main`.

use std::collections::BTreeSet;
use std::time::Instant;

use affgrass::affine::{AffineWeylGroup, Convention};
use affgrass::cartan::{CorootVector, RootSystem};
use affgrass::chains::{decompose_chain, reconstruct_bottom};
use affgrass::context::Context;
use affgrass::ktheory::{ideal_in_structure, round_trip};
use affgrass::qbg::{DualUntwisted, EdgeKind, QuantumBruhatGraph, Untwisted};
use affgrass::regularity::{Profile, RegularityConfig, Scope};
use affgrass::verify::{boundary_sweep, grassmannian_tops, verify_theorem, BoxCoordinates, LambdaBox, SweepOptions};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn cv(c: &[i32]) -> CorootVector {
    CorootVector::new(c).unwrap()
}

fn qbg_a2() -> Outcome {
    let start = Instant::now();
    let g = QuantumBruhatGraph::<Untwisted>::from_root_system(RootSystem::named("A2").map_err(e)?).map_err(e)?;
    let weyl = g.weyl();
    let w = |word: &[usize]| weyl.from_word(word).unwrap();
    let (id, s1, s2, s12, s21, w0) = (w(&[]), w(&[1]), w(&[2]), w(&[1, 2]), w(&[2, 1]), w(&[1, 2, 1]));
    let bruhat: BTreeSet<_> = [(id, s1), (id, s2), (s1, s12), (s1, s21), (s2, s21), (s2, s12), (s12, w0), (s21, w0)].into();
    let quantum: BTreeSet<_> = [
        (s1, id, cv(&[1, 0])),
        (s2, id, cv(&[0, 1])),
        (s12, s1, cv(&[0, 1])),
        (s21, s2, cv(&[1, 0])),
        (w0, id, cv(&[1, 1])),
        (w0, s12, cv(&[1, 0])),
        (w0, s21, cv(&[0, 1])),
    ]
    .into();
    let got_b: BTreeSet<_> =
        g.edges().iter().filter(|x| x.kind == EdgeKind::Bruhat).map(|x| (x.source, x.target)).collect();
    let got_q: BTreeSet<_> =
        g.edges().iter().filter(|x| x.kind == EdgeKind::Quantum).map(|x| (x.source, x.target, x.weight)).collect();
    check(got_b == bruhat, "Bruhat edges differ")?;
    check(got_q == quantum, "quantum edges differ")?;
    let (m, d) = g.min_weight(w0, s1).map_err(e)?;
    check(m == cv(&[1, 1]) && d == 2, format!("M(w0, s1) = {m} at distance {d}"))?;
    let mut paths: Vec<Vec<String>> = g
        .shortest_paths(w0, s1)
        .map_err(e)?
        .iter()
        .map(|p| p.vertices().into_iter().map(|v| weyl.format(v)).collect())
        .collect();
    paths.sort();
    let want = vec![vec!["[1,2,1]", "[1,2]", "[1]"], vec!["[1,2,1]", "[]", "[1]"]];
    check(paths == want, format!("shortest paths w0 -> s1: {paths:?}"))?;
    let ms = start.elapsed().as_millis();
    check(ms < 1000, format!("took {ms} ms"))?;
    Ok(format!("8 Bruhat + 7 quantum edges, M(w0,s1) = [1,1] via 2 paths, {ms} ms"))
}

fn sweep(ctx: &Context, opts: &SweepOptions) -> Outcome {
    let r = verify_theorem(ctx, opts).map_err(e)?;
    check(r.pairs_checked > 0, "no pairs checked")?;
    check(r.tops_uncertified.is_empty(), format!("{} uncertified tops", r.tops_uncertified.len()))?;
    let order = ctx.weyl().order();
    check(
        r.nonzero_pairs == r.tops_checked * order,
        format!("{} nonzero values for {} tops", r.nonzero_pairs, r.tops_checked),
    )?;
    check(r.disagreements.is_empty(), format!("{} disagreements, first {:?}", r.disagreements.len(), r.disagreements.first()))?;
    Ok(format!(
        "{} tops, {} pairs ({} comparable, {} nonzero), {} {} profile, {} ms",
        r.tops_checked, r.pairs_checked, r.comparable_pairs, r.nonzero_pairs, r.profile, r.scope, r.runtime_ms
    ))
}

fn a2_options(ctx: &Context) -> SweepOptions {
    SweepOptions {
        lambdas: LambdaBox::cube(2, -12, -8),
        window: 4,
        tops: None,
        regularity: RegularityConfig::new(ctx.weyl(), Profile::Welch).unwrap().with_scope(Scope::PerCover),
        allow_uncertified: false,
    }
}

fn theorem_a2() -> Outcome {
    let ctx = Context::named("A2", Convention::Untwisted).map_err(e)?;
    sweep(&ctx, &a2_options(&ctx))
}

fn theorem_c2() -> Outcome {
    let ctx = Context::named("C2", Convention::Untwisted).map_err(e)?;
    let cfg = RegularityConfig::new(ctx.weyl(), Profile::Milicevic).map_err(e)?.with_scope(Scope::PerCover);
    check(cfg.k == 8, format!("k = {}", cfg.k))?;
    let opts = SweepOptions {
        lambdas: LambdaBox::cube(2, -16, -12).with_coordinates(BoxCoordinates::Pairing),
        window: 4,
        tops: None,
        regularity: cfg,
        allow_uncertified: false,
    };
    sweep(&ctx, &opts)
}

fn example_chain() -> Outcome {
    let ctx = Context::named("A2", Convention::Untwisted).map_err(e)?;
    let g = ctx.group();
    let el = |w: &[usize], t: &[i32]| g.element(w, t).unwrap();
    let chain = [el(&[2], &[3, 2]), el(&[1, 2], &[-3, -4]), el(&[1, 2, 1], &[-4, -4]), el(&[1, 2], &[-4, -4])];
    let d = decompose_chain(&ctx, &chain).map_err(e)?;
    let weyl = ctx.weyl();
    check(d.r_f == weyl.from_word(&[1, 2, 1]).unwrap(), format!("r_f = {}", weyl.format(d.r_f)))?;
    check(d.r_n.is_identity(), format!("r_n = {}", weyl.format(d.r_n)))?;
    let wf = ctx.graph().path_weight(&d.far).map_err(e)?;
    let wn = ctx.graph().path_weight(&d.near).map_err(e)?;
    check(wf == cv(&[1, 1]) && wn == cv(&[1, 0]), format!("wt(P_f) = {wf}, wt(P_n) = {wn}"))?;
    let x = reconstruct_bottom(&ctx, &d).map_err(e)?;
    check(x == chain[0], format!("reconstructed {}", g.format(&x)))?;
    Ok(format!("r_f = [1,2,1], r_n = [], wt(P_f) = {wf}, wt(P_n) = {wn}, x = {}", g.format(&x)))
}

fn boundary_lemma() -> Outcome {
    let ctx = Context::named("A2", Convention::Untwisted).map_err(e)?;
    let tops = grassmannian_tops(&ctx, &LambdaBox::cube(2, -12, -8)).map_err(e)?;
    let r = boundary_sweep(&ctx, &tops).map_err(e)?;
    check(r.intervals > 0 && r.leaving > 0, "nothing to check")?;
    check(r.exceptions.is_empty(), format!("{} exceptions, first {:?}", r.exceptions.len(), r.exceptions.first()))?;
    check(
        r.witness_exceptions.is_empty(),
        format!("{} witness exceptions, first {:?}", r.witness_exceptions.len(), r.witness_exceptions.first()),
    )?;
    Ok(format!("{} tops, {} length-2 intervals, {} leave W0", tops.len(), r.intervals, r.leaving))
}

fn postnikov() -> Outcome {
    let mut pairs = 0;
    let mut long_paths = 0;
    for t in ["A2", "C2", "G2"] {
        let g = QuantumBruhatGraph::<Untwisted>::from_root_system(RootSystem::named(t).map_err(e)?).map_err(e)?;
        for u in g.weyl().elements() {
            for v in g.weyl().elements() {
                let (m, _) = g.min_weight(u, v).map_err(e)?;
                for p in g.shortest_paths(u, v).map_err(e)? {
                    check(g.path_weight(&p).map_err(e)? == m, format!("{t}: unequal shortest path weights"))?;
                }
                pairs += 1;
            }
        }
        for p in g.all_paths(4) {
            if p.len() as u32 > g.distance(p.start, p.end()).map_err(e)? {
                long_paths += 1;
                check(g.excess_weight(&p).map_err(e)?.is_nonnegative(), format!("{t}: negative excess"))?;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs, {long_paths} non-minimal paths of length <= 4"))
}

fn dual_types() -> Outcome {
    let mut notes = Vec::new();
    for (t, len) in [("C3", 7u32), ("B3", 5u32)] {
        let rs = RootSystem::named(t).map_err(e)?;
        let g = QuantumBruhatGraph::<DualUntwisted>::from_root_system(rs.clone()).map_err(e)?;
        let phi = rs.highest_short_root_index();
        let s_phi = g.weyl().reflection_by_index(phi);
        let pair = rs.pairing(&rs.two_rho_check(), &rs.positive_roots()[phi]);
        check(g.weyl().length(s_phi) == len, format!("{t}: l(s_phi) = {}", g.weyl().length(s_phi)))?;
        check(pair - 1 == len as i32, format!("{t}: <2rho^vee, phi> = {pair}"))?;
        let edge = g.edge(s_phi, g.weyl().elements().next().unwrap());
        check(
            matches!(edge, Some(x) if x.kind == EdgeKind::Quantum && x.root == phi),
            format!("{t}: no quantum edge s_phi -> 1"),
        )?;
        notes.push(format!("{t}: l(s_phi) = {len}"));
    }
    // C3: simple coroots are ε1−ε2, ε2−ε3, ε3, so c ↦ (c1, c2−c1, c3−c2) in ε-coordinates
    let c3 = RootSystem::named("C3").map_err(e)?;
    let c = c3.two_rho_check();
    let eps = [c.get(0), c.get(1) - c.get(0), c.get(2) - c.get(1)];
    check(eps == [5, 3, 1], format!("C3 2rho^vee = {eps:?} in ε-coordinates"))?;
    notes.push("C3 2rho^vee = (5,3,1)".into());
    Ok(notes.join(", "))
}

fn length_oracle() -> Outcome {
    let mut notes = Vec::new();
    for (t, radius) in [("A2", 12), ("C2", 8)] {
        let g = AffineWeylGroup::named(t, Convention::Untwisted).map_err(e)?;
        let ball = g.word_ball(radius);
        for (x, depth) in &ball {
            check(g.length(x) == *depth, format!("{t}: {} has length {} but depth {depth}", g.format(x), g.length(x)))?;
        }
        notes.push(format!("{t} radius {radius}: {} elements", ball.len()));
    }
    Ok(notes.join(", "))
}

fn ktheory_round_trip() -> Outcome {
    let ctx = Context::named("A2", Convention::Untwisted).map_err(e)?;
    let g = ctx.group();
    let cfg = RegularityConfig::new(ctx.weyl(), Profile::Welch).map_err(e)?.with_scope(Scope::PerCover);
    let y = g.element(&[1, 2], &[-10, -10]).map_err(e)?;
    let sum = ideal_in_structure(&ctx, &y, &cfg).map_err(e)?;
    check(sum.len() == 6, format!("{} terms", sum.len()))?;
    for (x, c) in sum.terms() {
        let (_, hops) = ctx.graph().min_weight(y.w, x.w).map_err(e)?;
        check(c == if hops % 2 == 0 { 1 } else { -1 }, format!("sign of {}", g.format(x)))?;
    }
    check(sum.coefficient(&g.element(&[1], &[-10, -9]).unwrap()) == -1, "u = s1 term")?;
    let rt = round_trip(&ctx, &y, &cfg, 0).map_err(e)?;
    check(rt.collapsed, format!("round trip left {} terms", rt.result.len()))?;
    Ok(format!("6 terms, collapses to 1·I_y with floor {} (truncated: {})", rt.floor, rt.truncated))
}

fn deodhar_equivalence() -> Outcome {
    let ctx = Context::named("A2", Convention::Untwisted).map_err(e)?;
    let r = verify_theorem(&ctx, &a2_options(&ctx)).map_err(e)?;
    check(r.equivalence_failures == 0, format!("{} failures", r.equivalence_failures))?;
    Ok(format!("{} comparable pairs", r.comparable_pairs))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("A2 quantum Bruhat graph", qbg_a2),
        ("closed formula sweep, A2", theorem_a2),
        ("closed formula sweep, C2", theorem_c2),
        ("A2 four-element chain", example_chain),
        ("2-loop boundary lemma", boundary_lemma),
        ("shortest path weights", postnikov),
        ("dual convention edges", dual_types),
        ("length formula vs word metric", length_oracle),
        ("K-theory round trip", ktheory_round_trip),
        ("Deodhar criterion equivalence", deodhar_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
