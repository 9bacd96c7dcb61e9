use gentle::engine::Engine;
use gentle::field::Field;
use gentle::quiver::parse_algebra;
use gentle::strings::{enumerate_strings, parse_string, parse_word, GradedString, Word};
use gentle::thick::*;

fn engine(text: &str) -> Engine {
    Engine::new(parse_algebra(text).unwrap(), Field::default())
}

fn exm1() -> Engine {
    engine(include_str!("../data/exm1.alg"))
}

fn list(e: &Engine, ws: &[&str]) -> Vec<GradedString> {
    ws.iter().map(|w| parse_string(&e.alg, w).unwrap()).collect()
}

#[test]
fn a_generator_is_a_one_piece_factorization() {
    let e = exm1();
    let arcs = list(&e, &["e@2", "d c^-"]);
    match is_generated(&e, &arcs[1], &arcs, SearchBounds::standard()) {
        Membership::Generated(f) => {
            assert_eq!(f.len(), 1);
            assert!(f.replay(&e, &arcs, &arcs[1]));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn a_glue_of_two_arcs_has_length_two() {
    let e = exm1();
    let arcs = list(&e, &["e@2", "d c^-"]);
    let target = parse_string(&e.alg, "a^- d c^-").unwrap();
    match is_generated(&e, &target, &arcs, SearchBounds::standard()) {
        Membership::Generated(f) => {
            assert_eq!(f.len(), 2);
            assert!(f.replay(&e, &arcs, &target));
            assert_eq!(f.pieces().len(), 2);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn shifts_of_members_are_members() {
    let e = exm1();
    let arcs = list(&e, &["e@2", "d c^-"]);
    let shifted = arcs[0].shifted(3);
    assert!(is_generated(&e, &shifted, &arcs, SearchBounds::standard()).is_generated());
}

#[test]
fn unreached_endpoint_refutes() {
    let e = exm1();
    let arcs = list(&e, &["e@2", "d c^-"]);
    let target = parse_string(&e.alg, "e@4").unwrap();
    match is_generated(&e, &target, &arcs, SearchBounds::standard()) {
        Membership::NotGenerated(Refutation::Endpoint { point }) => assert_eq!(point, "c"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn comparison_laws() {
    let e = exm1();
    let ab = list(&e, &["e@2", "d c^-"]);
    let cd = list(&e, &["e@4", "b a^-"]);
    let b = bounds();
    assert!(leq_gen(&e, &ab, &ab, b).is_yes());
    assert!(leq_gen(&e, &ab[..1], &ab, b).is_yes());
    assert!(leq_gen(&e, &ab, &cd, b).is_no());
    assert!(leq_gen(&e, &cd, &ab, b).is_no());
    let reordered = vec![ab[1].clone(), ab[0].clone()];
    assert!(equiv_gen(&e, &ab, &reordered, b).decision().is_yes());
    // the glued string can stand in for one of the pair
    let other = list(&e, &["e@2", "a^- d c^-"]);
    assert!(equiv_gen(&e, &ab, &other, b).decision().is_yes());
}

fn bounds() -> SearchBounds {
    SearchBounds::standard()
}

#[test]
fn band_elimination() {
    let e = exm1();
    let words = |ws: &[&str]| ws.iter().map(|w| parse_word(&e.alg, w).unwrap()).collect::<Vec<Word>>();
    let strings = words(&["e@2", "d c^-"]);
    let (out, reps) = eliminate_bands(&e, &strings, 3).unwrap();
    assert_eq!(out.len(), 2);
    assert!(reps.is_empty());

    assert_eq!(eliminate_bands(&e, &words(&["[a b^- c d^-]"]), 3), Err(EliminationError::NoStringPresent));

    let (out, reps) = eliminate_bands(&e, &words(&["e@2", "[a b^- c d^-]"]), 3).unwrap();
    assert_eq!(out.len(), 2);
    assert_eq!(reps.len(), 1);
    let a = &out[..1];
    assert!(leq_gen(&e, a, &out, bounds()).is_yes());
}

#[test]
fn disconnected_generators_are_refused() {
    let e = exm1();
    let gens: Vec<Word> = ["e@2", "e@4"].iter().map(|w| parse_word(&e.alg, w).unwrap()).collect();
    assert_eq!(eliminate_bands(&e, &gens, 3), Err(EliminationError::NotConnected));
}

#[test]
fn one_vertex_poset() {
    let e = engine("vertices: 1\n");
    let p = poset(&e, 2, 3, bounds()).unwrap();
    assert_eq!(p.classes.len(), 1);
    assert!(p.edges.is_empty());
}

#[test]
fn a2_poset_shape() {
    let e = engine(include_str!("../data/a2.alg"));
    let p = poset(&e, 4, 4, bounds()).unwrap();
    assert_eq!(p.classes.len(), 4);
    assert_eq!(p.maxima().len(), 1);
    assert_eq!(p.minima().len(), 3);
    let top = p.maxima()[0];
    assert_eq!(p.classes[top].generated.len(), 3);
    assert!((0..4).all(|i| p.leq(i, top)));
    assert!(p.to_dot().starts_with("digraph thick {"));
}

#[test]
fn closure_of_a_generating_pair() {
    let e = engine(include_str!("../data/a2.alg"));
    let seeds: Vec<GradedString> = enumerate_strings(&e.alg, 0);
    let closure = cone_closure(&e, &seeds, 4, 3).unwrap();
    assert_eq!(closure.len(), 3);
}
