use affgrass::affine::{AffineElement, AffineWeylGroup, Convention};
use affgrass::cartan::{CorootVector, RootSystem, RootVector};
use affgrass::weyl::WeylGroup;
use proptest::prelude::*;

const TYPES: [&str; 5] = ["A2", "C2", "G2", "B3", "A3"];

fn group(t: &str) -> AffineWeylGroup {
    AffineWeylGroup::named(t, Convention::Untwisted).unwrap()
}

fn element(g: &AffineWeylGroup, w: usize, t: &[i32]) -> AffineElement {
    let w = g.weyl().elements().nth(w % g.weyl().order()).unwrap();
    AffineElement::new(w, CorootVector::new(&t[..g.rank()]).unwrap())
}

/// A reduced word for `x` in affine nodes `0..=rank`, by peeling left descents.
fn reduced_word(g: &AffineWeylGroup, x: &AffineElement) -> Vec<usize> {
    let mut word = Vec::new();
    let mut x = *x;
    while g.length(&x) > 0 {
        let i = (0..=g.rank()).find(|&i| g.length(&g.simple_mul(i, &x)) < g.length(&x)).unwrap();
        word.push(i);
        x = g.simple_mul(i, &x);
    }
    word
}

/// Subword criterion: `x ≤ y` iff `x` is the product of a subword of a reduced word of `y`.
fn subword_leq(g: &AffineWeylGroup, x: &AffineElement, y: &AffineElement) -> bool {
    let word = reduced_word(g, y);
    let mut products = std::collections::HashSet::from([g.identity()]);
    for &i in &word {
        let next: Vec<_> = products.iter().map(|p| g.mul_simple(p, i)).collect();
        products.extend(next);
    }
    products.contains(x)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pairing_is_weyl_invariant(ti in 0usize..5, w in 0usize..64, l in prop::array::uniform3(-9i32..9), a in 0usize..9) {
        let rs = RootSystem::named(TYPES[ti]).unwrap();
        let weyl = WeylGroup::new(rs.clone()).unwrap();
        let w = weyl.elements().nth(w % weyl.order()).unwrap();
        let lambda = CorootVector::new(&l[..rs.rank()]).unwrap();
        let alpha: RootVector = rs.positive_roots()[a % rs.num_positive_roots()];
        let lhs = rs.pairing(&weyl.act_on_coroot(w, &lambda), &weyl.act_on_root(w, &alpha));
        prop_assert_eq!(lhs, rs.pairing(&lambda, &alpha));
    }

    #[test]
    fn simple_steps_change_length_by_one(ti in 0usize..5, w in 0usize..64, t in prop::array::uniform3(-6i32..6), i in 0usize..4) {
        let g = group(TYPES[ti]);
        let x = element(&g, w, &t);
        let i = i % (g.rank() + 1);
        let (l, r, left) = (g.length(&x), g.length(&g.mul_simple(&x, i)), g.length(&g.simple_mul(i, &x)));
        prop_assert!(r + 1 == l || r == l + 1);
        prop_assert!(left + 1 == l || left == l + 1);
        prop_assert_eq!(g.length(&g.inverse(&x)), l);
    }

    #[test]
    fn group_laws(ti in 0usize..5, a in (0usize..64, prop::array::uniform3(-5i32..5)), b in (0usize..64, prop::array::uniform3(-5i32..5)), c in (0usize..64, prop::array::uniform3(-5i32..5))) {
        let g = group(TYPES[ti]);
        let (x, y, z) = (element(&g, a.0, &a.1), element(&g, b.0, &b.1), element(&g, c.0, &c.1));
        prop_assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
        prop_assert_eq!(g.mul(&x, &g.inverse(&x)), g.identity());
        prop_assert!(g.length(&g.mul(&x, &y)) <= g.length(&x) + g.length(&y));
    }

    #[test]
    fn bruhat_order_matches_subwords(ti in 0usize..2, a in (0usize..6, prop::array::uniform3(-2i32..2)), b in (0usize..6, prop::array::uniform3(-2i32..2))) {
        let g = group(TYPES[ti]);
        let (x, y) = (element(&g, a.0, &a.1), element(&g, b.0, &b.1));
        prop_assume!(g.length(&y) <= 12);
        prop_assert_eq!(g.bruhat_leq(&x, &y).unwrap(), subword_leq(&g, &x, &y));
    }

    /// If `s` is a left descent of `y`, then `x ≤ y` iff `min(x, sx) ≤ sy`.
    #[test]
    fn lifting_property(ti in 0usize..3, a in (0usize..12, prop::array::uniform3(-3i32..3)), b in (0usize..12, prop::array::uniform3(-3i32..3)), i in 0usize..3) {
        let g = group(TYPES[ti]);
        let (x, y) = (element(&g, a.0, &a.1), element(&g, b.0, &b.1));
        let i = i % (g.rank() + 1);
        let sy = g.simple_mul(i, &y);
        prop_assume!(g.length(&sy) < g.length(&y));
        let sx = g.simple_mul(i, &x);
        let lower = if g.length(&sx) < g.length(&x) { sx } else { x };
        prop_assert_eq!(g.bruhat_leq(&x, &y).unwrap(), g.bruhat_leq(&lower, &sy).unwrap());
    }
}

#[test]
fn word_metric_depth_is_length() {
    for (t, radius) in [("A2", 12), ("C2", 8), ("G2", 7), ("A3", 6)] {
        let g = group(t);
        for (x, d) in g.word_ball(radius) {
            assert_eq!(g.length(&x), d, "{t} {}", g.format(&x));
        }
    }
}

#[test]
fn dual_convention_translations_use_the_dual_system() {
    // 2ρ∨ of C3 in ε-coordinates through simple coroots ε1−ε2, ε2−ε3, ε3
    let c3 = RootSystem::named("C3").unwrap();
    let c = c3.two_rho_check();
    assert_eq!([c.get(0), c.get(1) - c.get(0), c.get(2) - c.get(1)], [5, 3, 1]);
    for t in ["B3", "C3", "G2"] {
        let g = AffineWeylGroup::named(t, Convention::Dual).unwrap();
        assert_eq!(g.root_system().cartan_matrix(), RootSystem::named(t).unwrap().dual().unwrap().cartan_matrix());
        for (x, d) in g.word_ball(5) {
            assert_eq!(g.length(&x), d, "{t} dual {}", g.format(&x));
        }
    }
}
