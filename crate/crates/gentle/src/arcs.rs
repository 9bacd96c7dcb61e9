//! The arc dictionary: classification of string objects, intersection
//! counts, arc-collections, surgery on self-crossing strings and reduction of
//! generating sets to arc-collections.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::complex::ProjComplex;
use crate::decomp::Decision;
use crate::engine::Engine;
use crate::strings::{GradedString, Word};
use crate::walk::{end_points, glue, End, Glue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ArcKind {
    Exceptional,
    Spherelike,
    Crossing,
}

impl fmt::Display for ArcKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArcKind::Exceptional => "exceptional",
            ArcKind::Spherelike => "spherelike",
            ArcKind::Crossing => "crossing",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub string: GradedString,
    pub kind: ArcKind,
    pub self_hom: usize,
    pub self_crossings: usize,
    /// Marked points (thread ids) of the left and right ends.
    pub ends: (usize, usize),
}

impl Arc {
    pub fn is_closed(&self) -> bool {
        self.ends.0 == self.ends.1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ArcError {
    #[error("model inconsistency: {0}")]
    Model(String),
    #[error("not an arc-collection: {0}")]
    NotCollection(String),
    #[error("collection is not connected")]
    Disconnected,
    #[error("no surgery found for {0}")]
    NoSurgery(String),
    #[error("search bound exhausted: {0}")]
    BoundExhausted(String),
    #[error("undecided: {0}")]
    Undecided(String),
}

/// Kind from the self-hom up to shift: 1 exceptional, 2 spherelike, more crossing.
pub fn classify_arc(e: &Engine, s: &GradedString) -> Result<Arc, ArcError> {
    let x = e.string_complex(s);
    let total = e.hom_total(&x, &x);
    let ends = end_points(&e.alg, s);
    let closed = ends.0 == ends.1;
    let base = if closed { 2 } else { 1 };
    if total < base || !(total - base).is_multiple_of(2) {
        return Err(ArcError::Model(format!(
            "{} has self-hom {} but is {}",
            s.literal(&e.alg),
            total,
            if closed { "closed" } else { "open" }
        )));
    }
    let kind = match total {
        1 => ArcKind::Exceptional,
        2 => ArcKind::Spherelike,
        _ => ArcKind::Crossing,
    };
    Ok(Arc { string: s.clone(), kind, self_hom: total, self_crossings: (total - base) / 2, ends })
}

/// A pair of ends at a common marked point, with the direction of the
/// morphism that glues them.
#[derive(Clone, Debug)]
pub struct SharedEnd {
    pub a_end: End,
    pub b_end: End,
    pub point: usize,
    /// True when the gluing morphism goes from `a` to (a shift of) `b`.
    pub forward: bool,
    pub glued: GradedString,
}

#[derive(Clone, Debug)]
pub struct Intersections {
    pub interior: usize,
    pub shared: Vec<SharedEnd>,
}

fn end_point(ends: (usize, usize), e: End) -> usize {
    match e {
        End::Left => ends.0,
        End::Right => ends.1,
    }
}

/// Interior crossings and shared endpoints of two arcs. Every shared
/// end pair contributes one morphism in one direction, every interior
/// crossing one in each, so `2 * interior = hom(a,b) + hom(b,a) - shared`.
pub fn intersections(e: &Engine, a: &GradedString, b: &GradedString) -> Result<Intersections, ArcError> {
    let alg = &e.alg;
    if a.canonical(alg) == b.canonical(alg) {
        let arc = classify_arc(e, a)?;
        return Ok(Intersections { interior: arc.self_crossings, shared: Vec::new() });
    }
    let (ea, eb) = (end_points(alg, a), end_points(alg, b));
    let mut shared = Vec::new();
    for ae in [End::Left, End::Right] {
        for be in [End::Left, End::Right] {
            let p = end_point(ea, ae);
            if p != end_point(eb, be) {
                continue;
            }
            let g = glue(e, a, ae, b, be);
            match g.first() {
                Some(Glue { walk, forward, .. }) => shared.push(SharedEnd {
                    a_end: ae,
                    b_end: be,
                    point: p,
                    forward: *forward,
                    glued: walk.string.clone(),
                }),
                None => {
                    return Err(ArcError::Model(format!(
                        "ends of {} and {} share a marked point but do not glue",
                        a.literal(alg),
                        b.literal(alg)
                    )))
                }
            }
        }
    }
    let (x, y) = (e.string_complex(a), e.string_complex(b));
    let total = e.hom_total(&x, &y) + e.hom_total(&y, &x);
    if total < shared.len() || !(total - shared.len()).is_multiple_of(2) {
        return Err(ArcError::Model(format!(
            "hom count {} incompatible with {} shared ends between {} and {}",
            total,
            shared.len(),
            a.literal(alg),
            b.literal(alg)
        )));
    }
    Ok(Intersections { interior: (total - shared.len()) / 2, shared })
}

pub fn interior_count(e: &Engine, a: &GradedString, b: &GradedString) -> Result<usize, ArcError> {
    Ok(intersections(e, a, b)?.interior)
}

/// Morphism classification by cones: for each shift and basis morphism,
/// whether its cone is indecomposable (endpoint type) or splits in two
/// (interior type). Returns `(endpoint, interior)` counts; invertible
/// morphisms have a zero cone and are not counted.
pub fn classify_morphisms(e: &Engine, a: &ProjComplex, b: &ProjComplex) -> Result<(usize, usize), ArcError> {
    let (mut ends, mut interior) = (0, 0);
    let Some((lo, hi)) = crate::hom::hom_window(a, b) else { return Ok((0, 0)) };
    for k in lo..=hi {
        for m in e.hom_basis(a, &b.shift(e.f, k)) {
            match e.decompose(&e.cone(&m)) {
                Decision::Yes(parts) => match parts.iter().map(|p| p.1).sum::<usize>() {
                    0 => {}
                    1 => ends += 1,
                    2 => interior += 1,
                    n => return Err(ArcError::Model(format!("cone of a basis morphism has {} summands", n))),
                },
                Decision::No => unreachable!(),
                Decision::Undecided(r) => return Err(ArcError::Undecided(r)),
            }
        }
    }
    Ok((ends, interior))
}

/// Arcs with exceptional or spherelike kind and no interior crossings.
pub fn is_arc_collection(e: &Engine, arcs: &[GradedString]) -> Result<bool, ArcError> {
    for (i, a) in arcs.iter().enumerate() {
        if classify_arc(e, a)?.kind == ArcKind::Crossing {
            return Ok(false);
        }
        for b in &arcs[i + 1..] {
            if interior_count(e, a, b)? > 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Connectivity of the graph joining arcs with nonzero hom in either direction.
pub fn is_connected(e: &Engine, arcs: &[GradedString]) -> bool {
    if arcs.is_empty() {
        return true;
    }
    let cx: Vec<ProjComplex> = arcs.iter().map(|s| e.string_complex(s)).collect();
    let mut seen = vec![false; arcs.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..arcs.len() {
            if !seen[j] && (e.hom_total(&cx[i], &cx[j]) > 0 || e.hom_total(&cx[j], &cx[i]) > 0) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// Connectivity of the graph of marked points and arcs.
pub fn is_geometrically_connected(e: &Engine, arcs: &[GradedString]) -> bool {
    if arcs.is_empty() {
        return true;
    }
    let ends: Vec<(usize, usize)> = arcs.iter().map(|s| end_points(&e.alg, s)).collect();
    let mut reached: BTreeSet<usize> = [ends[0].0, ends[0].1].into_iter().collect();
    loop {
        let before = reached.len();
        for &(l, r) in &ends {
            if reached.contains(&l) || reached.contains(&r) {
                reached.insert(l);
                reached.insert(r);
            }
        }
        if reached.len() == before {
            break;
        }
    }
    ends.iter().all(|(l, _)| reached.contains(l))
}

fn strings_of(parts: &[(Word, usize)]) -> Option<Vec<GradedString>> {
    let mut out = Vec::new();
    for (w, m) in parts {
        let s = w.as_string()?;
        for _ in 0..*m {
            out.push(s.clone());
        }
    }
    Some(out)
}

/// Whether `target` arises, up to shift, by gluing some end of `x` to some end of `y`.
pub fn glues_to(e: &Engine, x: &GradedString, y: &GradedString, target: &GradedString) -> bool {
    let key = target.canonical(&e.alg);
    for xe in [End::Left, End::Right] {
        for ye in [End::Left, End::Right] {
            if glue(e, x, xe, y, ye).iter().any(|g| g.walk.string.canonical(&e.alg) == key) {
                return true;
            }
        }
    }
    false
}

/// Self-morphisms of `s` (all shifts, isomorphisms excluded) whose cones
/// split into exactly two strings.
fn split_cones(e: &Engine, a: &GradedString, b: &GradedString) -> Result<Vec<(GradedString, GradedString)>, ArcError> {
    let (x, y) = (e.string_complex(a), e.string_complex(b));
    let same = a.canonical(&e.alg) == b.canonical(&e.alg);
    let mut out = Vec::new();
    let Some((lo, hi)) = crate::hom::hom_window(&x, &y) else { return Ok(out) };
    for k in lo..=hi {
        let yk = y.shift(e.f, k);
        for m in e.nonzero_elements(&e.hom_basis(&x, &yk)) {
            if same && e.isomorphic(&x, &yk).is_yes() && e.cone(&m).is_zero() {
                continue;
            }
            match e.decompose(&e.cone(&m)) {
                Decision::Yes(parts) => {
                    if let Some(v) = strings_of(&parts) {
                        if v.len() == 2 {
                            out.push((v[0].clone(), v[1].clone()));
                        }
                    }
                }
                Decision::No => {}
                Decision::Undecided(r) => return Err(ArcError::Undecided(r)),
            }
        }
    }
    Ok(out)
}

/// Distinct (up to shift) summands of a list of split cones.
fn pieces(e: &Engine, cones: &[(GradedString, GradedString)]) -> Vec<GradedString> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (x, y) in cones {
        for z in [x, y] {
            if seen.insert(z.canonical(&e.alg)) {
                out.push(z.clone());
            }
        }
    }
    out
}

/// Splits a self-crossing string into spherelike pieces and a final
/// exceptional or spherelike piece, each step removing self-crossings.
pub fn decompose_string(e: &Engine, s: &GradedString) -> Result<Vec<GradedString>, ArcError> {
    let arc = classify_arc(e, s)?;
    if arc.kind != ArcKind::Crossing {
        return Ok(vec![s.clone()]);
    }
    // the loop and the remainder at a crossing come from the cones of the
    // two morphisms it induces, so pair summands across all split cones
    let pool = pieces(e, &split_cones(e, s, s)?);
    let mut best: Option<(usize, String, GradedString, GradedString)> = None;
    for m in &pool {
        if classify_arc(e, m)?.kind != ArcKind::Spherelike {
            continue;
        }
        for n in &pool {
            if classify_arc(e, n)?.self_crossings >= arc.self_crossings || !glues_to(e, m, n, s) {
                continue;
            }
            let key = (m.len(), m.canonical(&e.alg).literal(&e.alg));
            if best.as_ref().is_none_or(|b| (key.0, &key.1) < (b.0, &b.1)) {
                best = Some((key.0, key.1, m.clone(), n.clone()));
            }
        }
    }
    let Some((_, _, m, n)) = best else { return Err(ArcError::NoSurgery(s.literal(&e.alg))) };
    let mut out = vec![m];
    out.extend(decompose_string(e, &n)?);
    Ok(out)
}

/// Total interior count: pairwise crossings plus self-crossings.
pub fn measure(e: &Engine, arcs: &[GradedString]) -> Result<usize, ArcError> {
    let mut total = 0;
    for (i, a) in arcs.iter().enumerate() {
        total += classify_arc(e, a)?.self_crossings;
        for b in &arcs[i + 1..] {
            total += interior_count(e, a, b)?;
        }
    }
    Ok(total)
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub arcs: Vec<GradedString>,
    /// The measure before each round and after the last.
    pub measures: Vec<usize>,
}

fn normalize_set(e: &Engine, arcs: Vec<GradedString>) -> Vec<GradedString> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in arcs {
        let c = a.canonical(&e.alg);
        if seen.insert(c.clone()) {
            out.push(c);
        }
    }
    out
}

fn expand_crossing(e: &Engine, arcs: Vec<GradedString>) -> Result<Vec<GradedString>, ArcError> {
    let mut out = Vec::new();
    for a in arcs {
        out.extend(decompose_string(e, &a)?);
    }
    Ok(normalize_set(e, out))
}

/// Replaces a generating set of strings by an arc-collection generating the
/// same thick subcategory, resolving crossings by cone surgery.
pub fn reduce_to_collection(e: &Engine, generators: &[GradedString], max_rounds: usize) -> Result<Reduction, ArcError> {
    let mut w = expand_crossing(e, generators.to_vec())?;
    let mut mu = measure(e, &w)?;
    let mut measures = vec![mu];
    let mut rounds = 0;
    while mu > 0 {
        rounds += 1;
        if rounds > max_rounds {
            return Err(ArcError::BoundExhausted(format!("{} rounds", max_rounds)));
        }
        let mut next = None;
        'pairs: for i in 0..w.len() {
            for j in 0..w.len() {
                if i == j || interior_count(e, &w[i], &w[j])? == 0 {
                    continue;
                }
                for cand in replacements(e, &w[i], &w[j])? {
                    let mut v: Vec<GradedString> = w.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, a)| a.clone()).collect();
                    v.extend(cand);
                    let v = match expand_crossing(e, v) {
                        Ok(v) => v,
                        Err(ArcError::NoSurgery(_)) => continue,
                        Err(err) => return Err(err),
                    };
                    let m = measure(e, &v)?;
                    if m < mu {
                        next = Some((v, m));
                        break 'pairs;
                    }
                }
            }
        }
        let Some((v, m)) = next else {
            return Err(ArcError::BoundExhausted("no measure-decreasing surgery".into()));
        };
        w = v;
        mu = m;
        measures.push(mu);
    }
    Ok(Reduction { arcs: w, measures })
}

/// Replacements for `b` crossing `a`: one summand from each of the two
/// split cones of the crossing morphisms, such that the pair glues back to `b`.
fn replacements(e: &Engine, a: &GradedString, b: &GradedString) -> Result<Vec<Vec<GradedString>>, ArcError> {
    let mut cones = split_cones(e, a, b)?;
    cones.extend(split_cones(e, b, a)?);
    let pieces = pieces(e, &cones);
    let mut out = Vec::new();
    for (i, x) in pieces.iter().enumerate() {
        for y in &pieces[i + 1..] {
            if glues_to(e, x, y, b) || glues_to(e, y, x, b) {
                out.push(vec![x.clone(), y.clone()]);
            }
        }
    }
    // a single piece suffices when it glues back to b together with a
    for x in &pieces {
        if glues_to(e, a, x, b) || glues_to(e, x, a, b) {
            out.push(vec![x.clone()]);
        }
    }
    Ok(out)
}
