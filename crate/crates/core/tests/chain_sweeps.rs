use affgrass::affine::{AffineElement, Convention, CoverMode};
use affgrass::chains::{chains_below, decompose_chain, reconstruct_bottom, transport_chain, TransportOrder};
use affgrass::context::Context;
use affgrass::regularity::{is_superregular, Profile, RegularityConfig, Scope};

fn tops(ctx: &Context, pairings: &[i32]) -> Vec<AffineElement> {
    let lambda = ctx.root_system().coroot_with_pairings(pairings).unwrap().unwrap();
    ctx.weyl().elements().map(|w| AffineElement::new(w, lambda)).collect()
}

#[test]
fn every_short_chain_reconstructs() {
    for (t, p, depth) in [("A2", [-10, -7], 3), ("C2", [-10, -12], 3), ("G2", [-18, -18], 2)] {
        let ctx = Context::named(t, Convention::Untwisted).unwrap();
        let g = ctx.group();
        let mut count = 0;
        for y in tops(&ctx, &p) {
            for chain in chains_below(&ctx, &y, depth).unwrap() {
                if chain.len() < 2 {
                    continue;
                }
                let d = decompose_chain(&ctx, &chain).unwrap();
                assert_eq!(reconstruct_bottom(&ctx, &d).unwrap(), chain[0], "{t} {}", g.format(&y));
                assert_eq!(d.near.len() + d.far.len(), chain.len() - 1);
                count += 1;
            }
        }
        assert!(count > 0);
    }
}

#[test]
fn transport_preserves_the_bottom() {
    let ctx = Context::named("A2", Convention::Untwisted).unwrap();
    for y in tops(&ctx, &[-10, -7]) {
        for chain in chains_below(&ctx, &y, 3).unwrap() {
            if chain.len() < 2 {
                continue;
            }
            let d = decompose_chain(&ctx, &chain).unwrap();
            for order in [TransportOrder::NearFirst, TransportOrder::FarFirst] {
                let moved = transport_chain(&ctx, &d, &d.near, &d.far, order).unwrap();
                assert_eq!(moved[0], chain[0]);
                assert_eq!(moved.last(), chain.last());
            }
        }
    }
}

#[test]
fn certified_covers_match_the_generic_search() {
    let ctx = Context::named("A2", Convention::Untwisted).unwrap();
    let g = ctx.group();
    let cfg = RegularityConfig::new(ctx.weyl(), Profile::Welch).unwrap().with_scope(Scope::PerChain);
    for y in tops(&ctx, &[-10, -7]) {
        for m in 1..=3u32 {
            if !is_superregular(ctx.root_system(), &y, &cfg, m) {
                continue;
            }
            for chain in chains_below(&ctx, &y, m as usize - 1).unwrap() {
                let z = chain[0];
                let mut a: Vec<_> = g.covers_below(&z, CoverMode::Generic).unwrap().into_iter().map(|c| c.0).collect();
                let mut b: Vec<_> = g.classified_covers(&z).into_iter().map(|c| c.x).collect();
                a.sort();
                b.sort();
                assert_eq!(a, b, "{}", g.format(&z));
            }
        }
    }
}
