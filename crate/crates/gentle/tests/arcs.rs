use gentle::arcs::*;
use gentle::engine::Engine;
use gentle::field::Field;
use gentle::quiver::parse_algebra;
use gentle::strings::{enumerate_strings, parse_string, GradedString};
use gentle::walk::{glue, End};

fn engine(text: &str) -> Engine {
    Engine::new(parse_algebra(text).unwrap(), Field::default())
}

fn exm1() -> Engine {
    engine(include_str!("../data/exm1.alg"))
}

fn exm2() -> Engine {
    engine(include_str!("../data/exm2.alg"))
}

fn s(e: &Engine, w: &str) -> GradedString {
    parse_string(&e.alg, w).unwrap()
}

#[test]
fn exceptional_objects_of_the_four_cycle() {
    let e = exm1();
    for w in ["e@2", "d c^-", "e@4", "b a^-"] {
        let a = classify_arc(&e, &s(&e, w)).unwrap();
        assert_eq!((a.kind, a.self_hom, a.self_crossings), (ArcKind::Exceptional, 1, 0), "{w}");
        assert!(!a.is_closed());
    }
}

#[test]
fn spherelike_and_crossing_in_exm2() {
    let e = exm2();
    let b = classify_arc(&e, &s(&e, "b")).unwrap();
    assert_eq!(b.kind, ArcKind::Spherelike);
    assert!(b.is_closed());
    let crossing = enumerate_strings(&e.alg, 6)
        .into_iter()
        .map(|x| classify_arc(&e, &x).unwrap())
        .find(|a| a.kind == ArcKind::Crossing)
        .expect("exm2 has a self-crossing string within six letters");
    assert!(crossing.self_crossings >= 1);
    assert!(crossing.self_hom >= 3);
}

#[test]
fn trichotomy_counts() {
    // derived once by exhaustive classification and frozen
    let e = exm1();
    let mut counts = [0; 3];
    for x in enumerate_strings(&e.alg, 6) {
        counts[classify_arc(&e, &x).unwrap().kind as usize] += 1;
    }
    assert_eq!(counts, [20, 4, 4]);
}

#[test]
fn a2_stalks_glue_to_the_arrow() {
    let e = engine(include_str!("../data/a2.alg"));
    let (p1, p2) = (s(&e, "e@1"), s(&e, "e@2"));
    let mut found = Vec::new();
    for se in [End::Left, End::Right] {
        for te in [End::Left, End::Right] {
            found.extend(glue(&e, &p1, se, &p2, te).into_iter().map(|g| g.walk.string.canonical(&e.alg)));
        }
    }
    assert!(found.contains(&s(&e, "a")));
}

#[test]
fn glued_strings_are_cones() {
    let e = exm1();
    let (a, b) = (s(&e, "e@2"), s(&e, "d c^-"));
    for se in [End::Left, End::Right] {
        for te in [End::Left, End::Right] {
            for g in glue(&e, &a, se, &b, te) {
                let z = e.string_complex(&g.walk.string);
                assert!(e.isomorphic(&e.cone(&g.morphism), &z).is_yes());
            }
        }
    }
}

#[test]
fn intersections_of_the_four_arcs() {
    let e = exm1();
    let (a, b, c, d) = (s(&e, "e@2"), s(&e, "d c^-"), s(&e, "e@4"), s(&e, "b a^-"));
    assert_eq!(intersections(&e, &a, &a).unwrap().interior, 0);
    let ab = intersections(&e, &a, &b).unwrap();
    assert_eq!(ab.interior, 0);
    assert!(!ab.shared.is_empty());
    assert_eq!(interior_count(&e, &a, &c).unwrap(), 0);
    assert!(intersections(&e, &a, &c).unwrap().shared.is_empty());
    // A and D cross once in the interior and share no end
    let ad = intersections(&e, &a, &d).unwrap();
    assert_eq!((ad.interior, ad.shared.len()), (1, 0));
}

#[test]
fn collections_and_connectivity() {
    let e = exm1();
    let (a, b, c) = (s(&e, "e@2"), s(&e, "d c^-"), s(&e, "e@4"));
    assert!(is_arc_collection(&e, &[a.clone(), b.clone()]).unwrap());
    assert!(is_connected(&e, &[a.clone(), b]));
    assert!(is_arc_collection(&e, &[a.clone(), c.clone()]).unwrap());
    assert!(!is_connected(&e, &[a, c]));
    let two = exm2();
    let crossing = enumerate_strings(&two.alg, 6)
        .into_iter()
        .find(|x| classify_arc(&two, x).unwrap().kind == ArcKind::Crossing)
        .unwrap();
    assert!(!is_arc_collection(&two, &[crossing]).unwrap());
}

#[test]
fn decompose_leaves_simple_arcs_alone() {
    let e = exm2();
    for w in ["b", "c.a", "id@2"] {
        let x = s(&e, w);
        assert_eq!(decompose_string(&e, &x).unwrap(), vec![x.canonical(&e.alg)]);
    }
}

#[test]
fn decompose_crossing_strings() {
    let e = exm2();
    for x in enumerate_strings(&e.alg, 5) {
        let a = classify_arc(&e, &x).unwrap();
        if a.kind != ArcKind::Crossing {
            continue;
        }
        let parts = decompose_string(&e, &x).unwrap();
        assert!(parts.len() >= 2);
        for p in &parts {
            assert_ne!(classify_arc(&e, p).unwrap().kind, ArcKind::Crossing);
        }
    }
}

#[test]
fn reduction_of_a_crossing_pair() {
    let e = exm1();
    let (a, d) = (s(&e, "e@2"), s(&e, "b a^-"));
    let r = reduce_to_collection(&e, &[a, d], 16).unwrap();
    assert!(is_arc_collection(&e, &r.arcs).unwrap());
    assert!(r.measures.windows(2).all(|w| w[1] < w[0]));
    assert_eq!(r.measures.last(), Some(&0));
    let unchanged = reduce_to_collection(&e, &[s(&e, "e@2"), s(&e, "d c^-")], 16).unwrap();
    assert_eq!(unchanged.arcs.len(), 2);
    assert_eq!(unchanged.measures, vec![0]);
}

#[test]
fn endpoint_and_interior_morphisms_pair_up() {
    let e = exm1();
    let simple: Vec<GradedString> = enumerate_strings(&e.alg, 5)
        .into_iter()
        .filter(|x| classify_arc(&e, x).unwrap().kind != ArcKind::Crossing)
        .collect();
    for x in &simple {
        for y in &simple {
            let (cx, cy) = (e.string_complex(x), e.string_complex(y));
            let (_, i_xy) = classify_morphisms(&e, &cx, &cy).unwrap();
            let (_, i_yx) = classify_morphisms(&e, &cy, &cx).unwrap();
            assert_eq!(i_xy, i_yx);
        }
    }
}
