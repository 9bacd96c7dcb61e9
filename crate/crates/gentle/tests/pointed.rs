use gentle::arcs::{classify_arc, is_arc_collection, ArcKind};
use gentle::engine::Engine;
use gentle::field::Field;
use gentle::files::marked_point;
use gentle::pointed::*;
use gentle::quiver::parse_algebra;
use gentle::strings::{parse_string, GradedString};
use gentle::thick::{equiv_gen, SearchBounds};
use gentle::walk::end_points;

fn engine(text: &str) -> Engine {
    Engine::new(parse_algebra(text).unwrap(), Field::default())
}

fn list(e: &Engine, ws: &[&str]) -> Vec<GradedString> {
    ws.iter().map(|w| parse_string(&e.alg, w).unwrap()).collect()
}

#[test]
fn pointing_the_pair_at_each_of_its_points() {
    let e = engine(include_str!("../data/exm1.alg"));
    let ab = list(&e, &["e@2", "d c^-"]);
    for v in ArcGraph::new(&e, &ab).points() {
        let p = to_pointed(&e, &ab, v, 16).unwrap();
        assert!(ArcGraph::new(&e, &p.arcs).is_pointed_at(v));
        assert!(is_arc_collection(&e, &p.arcs).unwrap());
        assert!(equiv_gen(&e, &ab, &p.arcs, SearchBounds::standard()).decision().is_yes());
        // pointing again changes nothing
        let again = to_pointed(&e, &p.arcs, v, 16).unwrap();
        assert!(again.steps.is_empty());
        assert_eq!(again.arcs, p.arcs);
    }
}

#[test]
fn disconnected_and_foreign_basepoints() {
    let e = engine(include_str!("../data/exm1.alg"));
    let ac = list(&e, &["e@2", "e@4"]);
    assert!(to_pointed(&e, &ac, 0, 16).is_err());
    let a = list(&e, &["e@2"]);
    let (l, r) = end_points(&e.alg, &a[0]);
    let foreign = (0..e.alg.threads().len()).find(|&p| p != l && p != r).unwrap();
    assert!(to_pointed(&e, &a, foreign, 16).is_err());
}

#[test]
fn exceptional_arcs_only_give_terminal_regions() {
    let e = engine(include_str!("../data/exm1.alg"));
    let a = list(&e, &["e@2"]);
    let (v, _) = end_points(&e.alg, &a[0]);
    let r = regions_and_tau(&e, &a, v).unwrap();
    assert_eq!(r.order.len(), 1);
    assert!(r.kinds.iter().all(|&k| k == RegionKind::Terminal));
    assert!(r.tau.is_empty());
    // A and B close up into a cycle, so neither end point has them pointed
    let ab = list(&e, &["e@2", "d c^-"]);
    let g = ArcGraph::new(&e, &ab);
    assert!(g.points().into_iter().all(|p| g.degree(p) == 2 && !g.is_pointed_at(p)));
    let p = to_pointed(&e, &ab, marked_point(&e.alg, "a").unwrap(), 16).unwrap();
    let kinds: Vec<ArcKind> = p.arcs.iter().map(|a| classify_arc(&e, a).unwrap().kind).collect();
    assert!(kinds.contains(&ArcKind::Spherelike));
}

#[test]
fn a_spherelike_loop_has_a_fixed_region() {
    let e = engine(include_str!("../data/exm2.alg"));
    let b = list(&e, &["b"]);
    assert_eq!(classify_arc(&e, &b[0]).unwrap().kind, ArcKind::Spherelike);
    let (v, w) = end_points(&e.alg, &b[0]);
    assert_eq!(v, w);
    let r = regions_and_tau(&e, &b, v).unwrap();
    assert_eq!(r.order.len(), 2);
    let cyclic: Vec<usize> = (0..r.kinds.len()).filter(|&k| r.kinds[k] == RegionKind::Cyclic).collect();
    assert_eq!(cyclic.len(), 1);
    assert_eq!(r.orbits[&cyclic[0]], vec![cyclic[0]]);
    let psi = psi_path(&e, &b, &r, cyclic[0]).unwrap();
    assert_eq!(psi.arcs, vec![0]);
    assert!(psi.closing.is_some());
    assert!(psi_path(&e, &b, &r, r.order.len()).is_err());
}

#[test]
fn powers_of_a_spherelike_arc() {
    let e = engine(include_str!("../data/exm2.alg"));
    let b = parse_string(&e.alg, "b").unwrap();
    let ps = power_string(&e, &b).unwrap();
    for i in 1..=4 {
        let p = power(&e, &b, i).unwrap();
        assert_eq!(p.len(), ps.power(&e, i).unwrap().len());
        assert_eq!(p.len(), ps.prefix.len() + (i - 1) * ps.period.len() + ps.suffix.len());
    }
    // a doubled loop has to cross itself
    assert_eq!(classify_arc(&e, &power(&e, &b, 2).unwrap()).unwrap().kind, ArcKind::Crossing);
    let stalk = parse_string(&e.alg, "id@2").unwrap();
    if classify_arc(&e, &stalk).unwrap().kind == ArcKind::Exceptional {
        assert!(power(&e, &stalk, 2).is_err());
    }
}

#[test]
fn growth_classes() {
    assert_eq!(classify_growth(&[2, 2, 2, 2]), Growth::Constant { from: 1 });
    assert_eq!(classify_growth(&[1, 3, 4, 5, 6]), Growth::Increasing { from: 2, slope: 1 });
    assert_eq!(classify_growth(&[1, 4, 2, 7]), Growth::Irregular);
    assert_eq!(classify_growth(&[5]), Growth::Constant { from: 1 });
}
