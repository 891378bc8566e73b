use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use seor_core::cohomology::{normalize_by_coboundary, Coboundary, Explicit};
use seor_core::conformal::{annihilation_bracket, AnnGen, CGen, ConformalAlgebra};
use seor_core::linalg::Matrix;
use seor_core::pbw::{Element, ExponentTriple, ExponentVector, Monomial};
use seor_core::rep::{build_whittaker, validate_module, verma, FiniteModule, InducedModule, QuotientAlgebra, WhittakerData};
use seor_core::scalar::int;
use seor_core::{Epsilon, Gen, Parity, Preset, Rational, SuperVector};

fn preset() -> impl Strategy<Value = Preset> {
    prop::sample::select(Preset::ALL.to_vec())
}

fn pair_in(p: Preset, window: i64) -> impl Strategy<Value = (Gen, Gen)> {
    let b = p.basis_window(window);
    (prop::sample::select(b.clone()), prop::sample::select(b))
}

fn s_gen(window: i64) -> impl Strategy<Value = Gen> {
    prop::sample::select(Preset::S.basis_window(window))
}

fn small() -> impl Strategy<Value = Rational> {
    (-4i64..=4).prop_map(int)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn grading_is_additive((p, (x, y)) in preset().prop_flat_map(|p| (Just(p), pair_in(p, 10)))) {
        let b = p.bracket_gens(x, y).unwrap();
        for z in b.keys() {
            if z.is_central() {
                prop_assert_eq!(x.mode + y.mode, seor_core::Mode::ZERO);
            } else {
                prop_assert_eq!(z.mode, x.mode + y.mode);
            }
        }
    }

    #[test]
    fn centre_is_central((p, (x, y)) in preset().prop_flat_map(|p| (Just(p), pair_in(p, 10)))) {
        for z in [x, y].into_iter().filter(|g| g.is_central()) {
            let other = if z == x { y } else { x };
            prop_assert!(p.bracket_gens(z, other).unwrap().is_zero());
            prop_assert!(p.bracket_gens(other, z).unwrap().is_zero());
        }
    }

    #[test]
    fn parity_is_additive((p, (x, y)) in preset().prop_flat_map(|p| (Just(p), pair_in(p, 10)))) {
        let want = p.parity(x) + p.parity(y);
        for z in p.bracket_gens(x, y).unwrap().keys() {
            prop_assert_eq!(p.parity(*z), want);
        }
    }

    #[test]
    fn super_skew_pairs((p, (x, y)) in preset().prop_flat_map(|p| (Just(p), pair_in(p, 10)))) {
        let sign = int(-p.parity(x).koszul(p.parity(y)));
        prop_assert_eq!(p.bracket_gens(x, y).unwrap(), p.bracket_gens(y, x).unwrap().scaled(&sign));
    }
}

fn verma_module(h1: Rational, h2: Rational, c1: Rational) -> InducedModule<FiniteModule> {
    verma(h1, h2, c1, 6)
}

fn whittaker_module() -> InducedModule<WhittakerData> {
    build_whittaker(WhittakerData::new(1, int(2), int(-1)).with(Gen::w(1), int(1)).with(Gen::l(2), int(3)), 4, 2).unwrap()
}

fn random_element(basis: &[Monomial], picks: &[(usize, i64)]) -> Element {
    picks.iter().map(|&(i, c)| (int(c), basis[i % basis.len()].clone())).collect()
}

fn coeffs() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..10_000, prop_oneof![-3i64..=-1, 1i64..=3]), 1..4)
}

fn check_associativity<B: seor_core::pbw::BaseAction>(m: &InducedModule<B>, x: Gen, y: Gen, v: &Element) -> Result<(), TestCaseError> {
    let sign = int(Preset::S.parity(x).koszul(Preset::S.parity(y)));
    let lhs = m.act_exact(x, &m.act_exact(y, v)).minus(&m.act_exact(y, &m.act_exact(x, v)).scaled(&sign));
    let b: SuperVector = Preset::S.bracket_gens(x, y).unwrap();
    let rhs = m.straightener().act_vec(&b, v);
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verma_action_is_associative(h1 in small(), h2 in small(), c1 in small(), x in s_gen(3), y in s_gen(3), picks in coeffs()) {
        let m = verma_module(h1, h2, c1);
        let v = random_element(&m.basis(), &picks);
        check_associativity(&m, x, y, &v)?;
    }

    #[test]
    fn whittaker_action_is_associative(x in s_gen(3), y in s_gen(3), picks in coeffs()) {
        let m = whittaker_module();
        let v = random_element(&m.basis(), &picks);
        check_associativity(&m, x, y, &v)?;
    }

    #[test]
    fn normal_form_is_unique(word in prop::collection::vec(s_gen(2), 0..6), seed in any::<u64>(), h1 in small()) {
        let m = verma_module(h1, int(1), int(2));
        let st = m.straightener();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let random = st.normal_order(&word, 0, &mut |n| rand::Rng::gen_range(&mut rng, 0..n));
        let left = st.normal_order(&word, 0, &mut |_| 0);
        let right = st.normal_order(&word, 0, &mut |n| n - 1);
        let memo = st.act_word(&word, &Element::basis(Monomial::vacuum(0)));
        prop_assert_eq!(&random, &left);
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&left, &memo);
    }

    #[test]
    fn whittaker_normal_form_is_unique(word in prop::collection::vec(s_gen(2), 0..5), seed in any::<u64>()) {
        let m = whittaker_module();
        let st = m.straightener();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let random = st.normal_order(&word, 0, &mut |n| rand::Rng::gen_range(&mut rng, 0..n));
        let memo = st.act_word(&word, &Element::basis(Monomial::vacuum(0)));
        prop_assert_eq!(random, memo);
    }

    #[test]
    fn degree_is_compatible(g in s_gen(3), idx in 0usize..10_000, h1 in small()) {
        prop_assume!(!g.is_central());
        let m = verma_module(h1, int(0), int(1));
        let basis: Vec<Monomial> = (0..=4).flat_map(|n| m.level_basis(n)).collect();
        let b = &basis[idx % basis.len()];
        let img = m.act_exact(g, &Element::basis(b.clone()));
        let want = b.level2(m.layout()) - g.mode.doubled();
        for mono in img.keys() {
            prop_assert_eq!(mono.level2(m.layout()), want);
        }
        if g.mode.doubled() < 0 {
            prop_assert!(!img.is_zero());
        }
    }

    #[test]
    fn l0_grades_verma(h1 in small(), h2 in small(), c1 in small()) {
        let m = verma(h1.clone(), h2, c1, 6);
        for n in 0..=6 {
            let e = h1.clone() - Rational::new(n.into(), 2.into());
            for b in m.level_basis(n) {
                let v = Element::basis(b);
                prop_assert_eq!(m.act_exact(Gen::l(0), &v), v.scaled(&e));
            }
        }
    }

    #[test]
    fn verma_dims_do_not_depend_on_weights(h1 in small(), h2 in small(), c1 in small()) {
        prop_assert_eq!(verma(h1, h2, c1, 4).level_dims(), vec![1, 1, 2, 3, 6]);
    }
}

fn vector() -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(0u32..3, 0..4).prop_map(ExponentVector::from_entries)
}

fn binary() -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(0u32..2, 0..4).prop_map(ExponentVector::from_entries)
}

fn triple() -> impl Strategy<Value = ExponentTriple> {
    (vector(), binary(), vector()).prop_map(|(i, j, k)| ExponentTriple::new(i, j, k).unwrap())
}

proptest! {
    #[test]
    fn principal_order_is_strict_total(set in prop::collection::vec(triple(), 1..7)) {
        use seor_core::pbw::principal_greater as gt;
        for a in &set {
            prop_assert!(!gt(a, a));
            for b in &set {
                prop_assert!(!(gt(a, b) && gt(b, a)));
                if a != b {
                    prop_assert!(gt(a, b) || gt(b, a));
                }
                for c in &set {
                    if gt(a, b) && gt(b, c) {
                        prop_assert!(gt(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn vector_orders_are_strict_total(a in vector(), b in vector(), c in vector()) {
        use seor_core::pbw::{lex_greater, revlex_greater};
        for gt in [lex_greater as fn(&ExponentVector, &ExponentVector) -> bool, revlex_greater] {
            prop_assert!(!gt(&a, &a));
            prop_assert!(!(gt(&a, &b) && gt(&b, &a)));
            if a != b {
                prop_assert!(gt(&a, &b) || gt(&b, &a));
            }
            if gt(&a, &b) && gt(&b, &c) {
                prop_assert!(gt(&a, &c));
            }
        }
    }

    #[test]
    fn annihilation_is_super_skew(
        alg in prop::sample::select(vec![ConformalAlgebra::S, ConformalAlgebra::NeveuSchwarz]),
        ia in 0usize..3, ib in 0usize..3, na in 0u32..5, nb in 0u32..5,
    ) {
        let gens = alg.gens();
        let a = AnnGen::new(gens[ia % gens.len()], na);
        let b = AnnGen::new(gens[ib % gens.len()], nb);
        let odd = |g: CGen| g.parity() == Parity::Odd;
        let sign = if odd(a.gen) && odd(b.gen) { int(1) } else { int(-1) };
        prop_assert_eq!(annihilation_bracket(alg, a, b), annihilation_bracket(alg, b, a).scaled(&sign));
    }

    #[test]
    fn normalization_is_idempotent_and_gauge_invariant(
        half in any::<bool>(),
        weights in prop::collection::vec(-3i64..=3, 4),
        f in prop::collection::vec((0usize..10_000, -3i64..=3), 0..6),
    ) {
        let eps = if half { Epsilon::Half } else { Epsilon::Zero };
        let window = 5;
        let mut c = seor_core::cohomology::Cocycle::zero(eps, window);
        for (e, w) in Explicit::ALL.iter().filter(|e| e.epsilon() == eps).zip(&weights) {
            c = c.plus(&e.cocycle(window).scaled(&int(*w)));
        }
        let gens: Vec<Gen> = Preset::Sbar(eps).basis_window(window).into_iter().filter(|g| !g.is_central()).collect();
        let mut func = Coboundary::default();
        for (i, v) in f {
            func.values.insert(gens[i % gens.len()], int(v));
        }
        let shifted = c.plus(&func.form(eps, window));
        let n = normalize_by_coboundary(&c).unwrap();
        prop_assert_eq!(normalize_by_coboundary(&n).unwrap(), n.clone());
        prop_assert_eq!(normalize_by_coboundary(&shifted).unwrap(), n);
    }
}

/// The module axiom applied vector by vector, with the bracket taken in `S`
/// and the ideal `S^{(t+d+1,t+1,t+1)}` acting as zero.
fn brute_force_axiom(v: &FiniteModule, q: &QuotientAlgebra) -> bool {
    use seor_core::lincomb::LinComb;
    use seor_core::pbw::BaseAction;
    if v.actions.keys().any(|g| !q.contains(*g)) {
        return false;
    }
    let act = |g: Gen, u: &LinComb<usize>| -> LinComb<usize> {
        if q.contains(g) { v.apply(g, u) } else { LinComb::zero() }
    };
    let basis = q.basis();
    for &x in &basis {
        for &y in &basis {
            let sign = int(Preset::S.parity(x).koszul(Preset::S.parity(y)));
            for i in 0..v.dim() {
                let e = LinComb::basis(i);
                let lhs = act(x, &act(y, &e)).minus(&act(y, &act(x, &e)).scaled(&sign));
                let mut rhs = LinComb::zero();
                for (z, c) in Preset::S.bracket_gens(x, y).unwrap().iter() {
                    rhs.add_scaled(c, &act(*z, &e));
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

fn two_dim(a: i64, c: i64, b: i64, noise: Option<(usize, i64)>) -> FiniteModule {
    let m = |rows: [[i64; 2]; 2]| Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| int(*x)).collect()).collect()).unwrap();
    let mut l1 = [[0, c], [0, 0]];
    let mut w0 = [[b, 0], [0, b]];
    if let Some((pos, by)) = noise {
        match pos % 3 {
            0 => l1[1][0] += by,
            1 => w0[0][1] += by,
            _ => w0[1][1] += by,
        }
    }
    FiniteModule::trivial(2)
        .with_action(Gen::l(0), m([[a, 0], [0, a - 1]]))
        .with_action(Gen::l(1), m(l1))
        .with_action(Gen::w(0), m(w0))
}

proptest! {
    #[test]
    fn validate_module_matches_brute_force(a in -3i64..=3, c in -3i64..=3, b in -3i64..=3, noise in prop::option::of((0usize..3, 1i64..=2))) {
        let q = QuotientAlgebra::new(0, 1);
        let v = two_dim(a, c, b, noise);
        prop_assert_eq!(validate_module(&v, &q).passed(), brute_force_axiom(&v, &q));
    }

    #[test]
    fn whittaker_rejects_high_l(m in 3i64..8, value in 1i64..5) {
        let d = WhittakerData::new(1, int(0), int(0)).with(Gen::w(1), int(1)).with(Gen::l(m), int(value));
        prop_assert!(d.validate().is_err());
    }
}
