use std::sync::OnceLock;

use gentle::arcs::{classify_arc, ArcKind};
use gentle::engine::Engine;
use gentle::field::Field;
use gentle::quiver::parse_algebra;
use gentle::strings::{enumerate_strings, string_equiv, GradedString};
use gentle::thick::{leq_gen, SearchBounds};
use gentle::walk::{glue, End};
use proptest::prelude::*;
use proptest::sample::select;

const EXM1: &str = include_str!("../data/exm1.alg");

fn exm1() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(|| Engine::new(parse_algebra(EXM1).unwrap(), Field::default()))
}

fn exm1_f3() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(|| Engine::new(parse_algebra(EXM1).unwrap(), Field::new(3).unwrap()))
}

fn strings(max: usize) -> Vec<GradedString> {
    enumerate_strings(&exm1().alg, max)
}

fn arc_strategy(max: usize) -> impl Strategy<Value = GradedString> {
    let simple: Vec<GradedString> =
        strings(max).into_iter().filter(|s| classify_arc(exm1(), s).unwrap().kind != ArcKind::Crossing).collect();
    select(simple)
}

fn shifted(max: usize) -> impl Strategy<Value = GradedString> {
    (select(strings(max)), -3i32..=3).prop_map(|(s, k)| s.shifted(k))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn common_shift_leaves_the_table(a in shifted(4), b in shifted(4), k in -3i32..=3) {
        let e = exm1();
        let (x, y) = (e.string_complex(&a), e.string_complex(&b));
        prop_assert_eq!(e.hom_table(&x, &y), e.hom_table(&x.shift(e.f, k), &y.shift(e.f, k)));
    }

    #[test]
    fn shifting_the_target_moves_the_table(a in shifted(3), b in shifted(3), k in -3i32..=3) {
        let e = exm1();
        let (x, y) = (e.string_complex(&a), e.string_complex(&b));
        let (t, u) = (e.hom_table(&x, &y), e.hom_table(&x, &y.shift(e.f, k)));
        for j in -12..=12 {
            prop_assert_eq!(t.at(j + k), u.at(j));
        }
    }

    #[test]
    fn hom_is_additive(a in shifted(3), b in shifted(3), c in shifted(3)) {
        let e = exm1();
        let (x, y, z) = (e.string_complex(&a), e.string_complex(&b), e.string_complex(&c));
        let sum = e.hom_table(&x.direct_sum(&y), &z);
        let (tx, ty) = (e.hom_table(&x, &z), e.hom_table(&y, &z));
        for j in -12..=12 {
            prop_assert_eq!(sum.at(j), tx.at(j) + ty.at(j));
        }
    }

    #[test]
    fn inversion_is_invisible_to_hom(a in shifted(5), b in shifted(5)) {
        let e = exm1();
        let alg = &e.alg;
        let t = e.string_hom_total(&a, &b);
        prop_assert_eq!(e.string_hom_total(&a.inverse(alg), &b), t);
        prop_assert_eq!(e.string_hom_total(&a, &b.inverse(alg)), t);
    }

    #[test]
    fn hom_does_not_depend_on_the_field(a in shifted(4), b in shifted(4)) {
        let (e2, e3) = (exm1(), exm1_f3());
        prop_assert_eq!(e2.string_hom_total(&a, &b), e3.string_hom_total(&a, &b));
    }

    #[test]
    fn every_string_is_classified(a in select(strings(6))) {
        let arc = classify_arc(exm1(), &a).unwrap();
        match arc.kind {
            ArcKind::Exceptional => prop_assert_eq!((arc.self_hom, arc.self_crossings), (1, 0)),
            ArcKind::Spherelike => prop_assert_eq!((arc.self_hom, arc.self_crossings), (2, 0)),
            ArcKind::Crossing => prop_assert!(arc.self_crossings > 0),
        }
    }

    #[test]
    fn gradings_differ_by_a_constant(a in select(strings(6)), k in -5i32..=5) {
        let b = if a.is_empty() {
            GradedString::empty(a.vertex, a.base + k)
        } else {
            GradedString::new(&exm1().alg, a.letters.clone(), a.base + k).unwrap()
        };
        let shifted: Vec<i32> = a.grading().iter().map(|g| g + k).collect();
        prop_assert_eq!(b.grading(), shifted);
        prop_assert_eq!(b, a.shifted(k));
    }

    #[test]
    fn string_equivalence_laws(a in shifted(4), b in shifted(4), c in shifted(4)) {
        let alg = &exm1().alg;
        prop_assert!(string_equiv(alg, &a, &a));
        prop_assert!(string_equiv(alg, &a, &a.inverse(alg)));
        prop_assert_eq!(string_equiv(alg, &a, &b), string_equiv(alg, &b, &a));
        if string_equiv(alg, &a, &b) && string_equiv(alg, &b, &c) {
            prop_assert!(string_equiv(alg, &a, &c));
        }
        prop_assert_eq!(string_equiv(alg, &a, &b), a.canonical(alg) == b.canonical(alg));
    }

    #[test]
    fn glues_are_certified_cones(a in arc_strategy(3), b in arc_strategy(3)) {
        let e = exm1();
        for se in [End::Left, End::Right] {
            for te in [End::Left, End::Right] {
                for g in glue(e, &a, se, &b, te) {
                    let z = e.string_complex(&g.walk.string);
                    prop_assert!(e.isomorphic(&e.cone(&g.morphism), &z).is_yes());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    #[test]
    fn generation_is_a_preorder(a in arc_strategy(2), b in arc_strategy(2), c in arc_strategy(2)) {
        let e = exm1();
        let bounds = SearchBounds::standard();
        let (x, y, z) = (vec![a], vec![b], vec![c]);
        prop_assert!(leq_gen(e, &x, &x, bounds).is_yes());
        if leq_gen(e, &x, &y, bounds).is_yes() && leq_gen(e, &y, &z, bounds).is_yes() {
            prop_assert!(!leq_gen(e, &x, &z, bounds).is_no());
        }
        let both = [x.clone(), y.clone()].concat();
        prop_assert!(leq_gen(e, &x, &both, bounds).is_yes());
    }
}
