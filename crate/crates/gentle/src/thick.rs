//! Membership of strings in thick subcategories of arc-collections, the
//! generation preorder, band elimination and the poset of classes.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::arcs::{classify_arc, is_arc_collection, is_connected, ArcError, ArcKind};
use crate::complex::ProjComplex;
use crate::decomp::Decision;
use crate::engine::Engine;
use crate::strings::{enumerate_strings, GradedString, Word};
use crate::walk::{end_points, glue, glue_raw, End};

/// One gluing step: end `at` of the string built so far meets end
/// `arc_end` of collection arc `arc`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub arc: usize,
    pub at: End,
    pub arc_end: End,
    /// Class of the string after this step.
    #[serde(skip)]
    pub result: GradedString,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub start: usize,
    pub steps: Vec<Step>,
}

impl Factorization {
    /// Arcs in order with orientation: +1 when entered at its left end.
    pub fn pieces(&self) -> Vec<(usize, i8)> {
        let mut out = vec![(self.start, 1)];
        out.extend(self.steps.iter().map(|s| (s.arc, if s.arc_end == End::Left { 1 } else { -1 })));
        out
    }

    pub fn len(&self) -> usize {
        self.steps.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Replays the steps with certified glues and checks that the final
    /// string is isomorphic, up to shift, to `target`.
    pub fn replay(&self, e: &Engine, arcs: &[GradedString], target: &GradedString) -> bool {
        let alg = &e.alg;
        let Some(first) = arcs.get(self.start) else { return false };
        let mut cur = first.canonical(alg);
        for st in &self.steps {
            let Some(arc) = arcs.get(st.arc) else { return false };
            let arc = arc.canonical(alg);
            let key = st.result.canonical(alg);
            match glue(e, &cur, st.at, &arc, st.arc_end).into_iter().find(|g| g.walk.string.canonical(alg) == key) {
                Some(g) => cur = g.walk.string.canonical(alg),
                None => return false,
            }
        }
        let (x, t) = (e.string_complex(&cur.canonical(alg)), e.string_complex(&target.canonical(alg)));
        e.isomorphic(&x, &t).is_yes()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Refutation {
    /// An end of the target lies at a marked point no arc reaches.
    Endpoint { point: String },
    /// Every arc has zero hom to (or from) the target.
    Orthogonal { from_target: bool },
    /// A string with zero hom from (or to) every arc but not from (or to) the target.
    Perpendicular { witness: String, from_target: bool },
    /// The finite gluing closure was exhausted.
    Exhausted { states: usize },
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refutation::Endpoint { point } => write!(f, "no arc ends at marked point {}", point),
            Refutation::Orthogonal { from_target: false } => f.write_str("every arc has zero hom to the target"),
            Refutation::Orthogonal { from_target: true } => f.write_str("the target has zero hom to every arc"),
            Refutation::Perpendicular { witness, from_target } => {
                if *from_target {
                    write!(f, "witness {} receives no hom from the arcs but one from the target", witness)
                } else {
                    write!(f, "witness {} has no hom to the arcs but one to the target", witness)
                }
            }
            Refutation::Exhausted { states } => write!(f, "gluing closure exhausted after {} states", states),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    Generated(Factorization),
    NotGenerated(Refutation),
    BoundExhausted { states: usize, reason: String },
}

impl Membership {
    pub fn is_generated(&self) -> bool {
        matches!(self, Membership::Generated(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Membership::NotGenerated(_))
    }
}

/// Limits of the membership search. `None` picks the defaults scaled by
/// the target: letters `4 * len + 8`, depth `2 * (len + arcs) + 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_letters: Option<usize>,
    pub max_depth: Option<usize>,
    /// Letter bound of the strings tried as perpendicular witnesses.
    pub witness_letters: usize,
    pub max_states: usize,
}

impl SearchBounds {
    pub fn standard() -> SearchBounds {
        SearchBounds { max_letters: None, max_depth: None, witness_letters: 3, max_states: 20_000 }
    }
}

fn refute(e: &Engine, target: &GradedString, arcs: &[GradedString], witness_letters: usize) -> Option<Refutation> {
    let alg = &e.alg;
    let points: BTreeSet<usize> = arcs.iter().flat_map(|s| {
        let (l, r) = end_points(alg, s);
        [l, r]
    }).collect();
    let (l, r) = end_points(alg, target);
    for p in [l, r] {
        if !points.contains(&p) {
            return Some(Refutation::Endpoint { point: alg.threads()[p].name.clone() });
        }
    }
    let t = e.string_complex(target);
    let cx: Vec<ProjComplex> = arcs.iter().map(|s| e.string_complex(s)).collect();
    if cx.iter().all(|s| e.hom_total(s, &t) == 0) {
        return Some(Refutation::Orthogonal { from_target: false });
    }
    if cx.iter().all(|s| e.hom_total(&t, s) == 0) {
        return Some(Refutation::Orthogonal { from_target: true });
    }
    for w in enumerate_strings(alg, witness_letters) {
        let wc = e.string_complex(&w);
        if e.hom_total(&t, &wc) > 0 && cx.iter().all(|s| e.hom_total(s, &wc) == 0) {
            return Some(Refutation::Perpendicular { witness: w.literal(alg), from_target: true });
        }
        if e.hom_total(&wc, &t) > 0 && cx.iter().all(|s| e.hom_total(&wc, s) == 0) {
            return Some(Refutation::Perpendicular { witness: w.literal(alg), from_target: false });
        }
    }
    None
}

/// Decides whether `target` is a concatenation of arcs of `arcs`: a
/// certified factorization, a sound refutation, or an exhausted bound.
pub fn is_generated(e: &Engine, target: &GradedString, arcs: &[GradedString], bounds: SearchBounds) -> Membership {
    let alg = &e.alg;
    let key = target.canonical(alg);
    let arcs: Vec<GradedString> = arcs.iter().map(|a| a.canonical(alg)).collect();
    if let Some(i) = arcs.iter().position(|a| *a == key) {
        return Membership::Generated(Factorization { start: i, steps: Vec::new() });
    }
    if let Some(r) = refute(e, target, &arcs, bounds.witness_letters) {
        return Membership::NotGenerated(r);
    }
    let max_letters = bounds.max_letters.unwrap_or(4 * target.len() + 8);
    let max_depth = bounds.max_depth.unwrap_or(2 * (target.len() + arcs.len()) + 2);
    // breadth-first over glued classes, remembering how each was reached
    let mut parent: HashMap<GradedString, (GradedString, Step)> = HashMap::new();
    let mut root: HashMap<GradedString, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for (i, a) in arcs.iter().enumerate() {
        root.entry(a.clone()).or_insert(i);
        queue.push_back((a.clone(), 1usize));
    }
    let mut truncated = None;
    let mut replay_failures = 0;
    while let Some((x, depth)) = queue.pop_front() {
        if depth >= max_depth {
            truncated.get_or_insert_with(|| format!("depth {}", max_depth));
            continue;
        }
        for (j, a) in arcs.iter().enumerate() {
            for at in [End::Left, End::Right] {
                for arc_end in [End::Left, End::Right] {
                    for z in glue_raw(alg, &x, at, a, arc_end) {
                        let z = z.canonical(alg);
                        if z.len() > max_letters {
                            truncated.get_or_insert_with(|| format!("{} letters", max_letters));
                            continue;
                        }
                        if root.contains_key(&z) || parent.contains_key(&z) {
                            continue;
                        }
                        let step = Step { arc: j, at, arc_end, result: z.clone() };
                        parent.insert(z.clone(), (x.clone(), step));
                        if z == key {
                            let fac = trace(&parent, &root, &z);
                            if fac.replay(e, &arcs, target) {
                                return Membership::Generated(fac);
                            }
                            replay_failures += 1;
                        }
                        if root.len() + parent.len() > bounds.max_states {
                            return Membership::BoundExhausted {
                                states: root.len() + parent.len(),
                                reason: format!("{} states", bounds.max_states),
                            };
                        }
                        queue.push_back((z, depth + 1));
                    }
                }
            }
        }
    }
    let states = root.len() + parent.len();
    match (truncated, replay_failures) {
        (_, n) if n > 0 => Membership::BoundExhausted { states, reason: format!("{} uncertified factorizations", n) },
        (Some(reason), _) => Membership::BoundExhausted { states, reason },
        (None, _) => Membership::NotGenerated(Refutation::Exhausted { states }),
    }
}

fn trace(
    parent: &HashMap<GradedString, (GradedString, Step)>,
    root: &HashMap<GradedString, usize>,
    z: &GradedString,
) -> Factorization {
    let mut steps = Vec::new();
    let mut cur = z.clone();
    while let Some((prev, step)) = parent.get(&cur) {
        steps.push(step.clone());
        cur = prev.clone();
    }
    steps.reverse();
    Factorization { start: root[&cur], steps }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Comparison {
    /// One factorization per arc of the smaller collection.
    Yes(Vec<Factorization>),
    No { arc: usize, refutation: Refutation },
    BoundExhausted { arc: usize, reason: String },
}

impl Comparison {
    pub fn is_yes(&self) -> bool {
        matches!(self, Comparison::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Comparison::No { .. })
    }
}

/// Whether every arc of `a` is generated over `b`.
pub fn leq_gen(e: &Engine, a: &[GradedString], b: &[GradedString], bounds: SearchBounds) -> Comparison {
    let mut facs = Vec::new();
    let mut exhausted = None;
    for (i, s) in a.iter().enumerate() {
        match is_generated(e, s, b, bounds) {
            Membership::Generated(f) => facs.push(f),
            Membership::NotGenerated(refutation) => return Comparison::No { arc: i, refutation },
            Membership::BoundExhausted { reason, .. } => {
                exhausted.get_or_insert(Comparison::BoundExhausted { arc: i, reason });
            }
        }
    }
    exhausted.unwrap_or(Comparison::Yes(facs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub forward: Comparison,
    pub backward: Comparison,
}

impl Equivalence {
    pub fn decision(&self) -> Decision<()> {
        if self.forward.is_no() || self.backward.is_no() {
            Decision::No
        } else if self.forward.is_yes() && self.backward.is_yes() {
            Decision::Yes(())
        } else {
            Decision::Undecided("bound exhausted".into())
        }
    }
}

pub fn equiv_gen(e: &Engine, a: &[GradedString], b: &[GradedString], bounds: SearchBounds) -> Equivalence {
    Equivalence { forward: leq_gen(e, a, b, bounds), backward: leq_gen(e, b, a, bounds) }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EliminationError {
    #[error("no string generator present")]
    NoStringPresent,
    #[error("generators are not Ext-connected")]
    NotConnected,
    #[error("no replacement found for band {0} within the bound")]
    BoundExhausted(String),
    #[error("undecided: {0}")]
    Undecided(String),
}

/// How a band was replaced: a morphism `source[shift] -> band` whose cone is `cone`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandReplacement {
    pub band: Word,
    pub source: GradedString,
    pub shift: i32,
    pub cone: GradedString,
}

fn connected_complexes(e: &Engine, cx: &[ProjComplex]) -> bool {
    let mut seen = vec![false; cx.len()];
    let mut stack = vec![0];
    if cx.is_empty() {
        return true;
    }
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..cx.len() {
            if !seen[j] && (e.hom_total(&cx[i], &cx[j]) > 0 || e.hom_total(&cx[j], &cx[i]) > 0) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// Replaces every band generator by two strings generating the same thick
/// subcategory together with the rest: a string `Y` of the subcategory with
/// a morphism `t: Y -> B` whose cone is a string.
pub fn eliminate_bands(
    e: &Engine,
    generators: &[Word],
    depth: usize,
) -> Result<(Vec<GradedString>, Vec<BandReplacement>), EliminationError> {
    let alg = &e.alg;
    let cx: Vec<ProjComplex> = generators.iter().map(|w| e.complex(w)).collect();
    if !connected_complexes(e, &cx) {
        return Err(EliminationError::NotConnected);
    }
    let mut strings: Vec<GradedString> = generators.iter().filter_map(|w| w.as_string().cloned()).collect();
    if strings.is_empty() {
        return Err(EliminationError::NoStringPresent);
    }
    // strings known to lie in the subcategory, grown by cone summands
    let mut pool = strings.clone();
    let mut keys: BTreeSet<GradedString> = pool.iter().map(|s| s.canonical(alg)).collect();
    let mut replacements = Vec::new();
    for (w, b) in generators.iter().zip(&cx) {
        let Word::Band(_) = w else { continue };
        let mut found = None;
        let mut level = 0;
        let mut start = 0;
        while found.is_none() && level <= depth {
            for y in &pool[start..] {
                if let Some(r) = band_witness(e, y, b)? {
                    found = Some((y.clone(), r));
                    break;
                }
            }
            if found.is_some() {
                break;
            }
            let grown = grow_pool(e, &pool, &cx)?;
            start = pool.len();
            for s in grown {
                if keys.insert(s.canonical(alg)) {
                    pool.push(s);
                }
            }
            if start == pool.len() {
                break;
            }
            level += 1;
        }
        let Some((y, (shift, cone))) = found else {
            return Err(EliminationError::BoundExhausted(w.literal(alg)));
        };
        strings.push(y.clone());
        strings.push(cone.clone());
        replacements.push(BandReplacement { band: w.clone(), source: y, shift, cone });
    }
    let mut seen = BTreeSet::new();
    strings.retain(|s| seen.insert(s.canonical(alg)));
    Ok((strings, replacements))
}

fn band_witness(e: &Engine, y: &GradedString, b: &ProjComplex) -> Result<Option<(i32, GradedString)>, EliminationError> {
    let yc = e.string_complex(y);
    let Some((lo, hi)) = crate::hom::hom_window(&yc, b) else { return Ok(None) };
    for k in lo..=hi {
        let src = yc.shift(e.f, -k);
        for m in e.nonzero_elements(&e.hom_basis(&src, b)) {
            match e.decompose(&e.cone(&m)) {
                Decision::Yes(parts) if parts.len() == 1 && parts[0].1 == 1 => {
                    if let Some(s) = parts[0].0.as_string() {
                        return Ok(Some((-k, s.clone())));
                    }
                }
                Decision::Undecided(r) => return Err(EliminationError::Undecided(r)),
                _ => {}
            }
        }
    }
    Ok(None)
}

fn grow_pool(e: &Engine, pool: &[GradedString], gens: &[ProjComplex]) -> Result<Vec<GradedString>, EliminationError> {
    let mut out = Vec::new();
    let members: Vec<ProjComplex> = pool.iter().map(|s| e.string_complex(s)).chain(gens.iter().cloned()).collect();
    for a in &members {
        for b in &members {
            for (_, parts) in cone_summands(e, a, b).map_err(EliminationError::Undecided)? {
                out.extend(parts.iter().filter_map(|(w, _)| w.as_string().cloned()));
            }
        }
    }
    Ok(out)
}

/// Per shift `k`, the summands of the cone of each basis morphism `a -> b[k]`.
pub type ConeSummands = Vec<(i32, Vec<(Word, usize)>)>;

/// Decompositions of the cones of basis morphisms `a -> b[k]` over the window.
pub fn cone_summands(e: &Engine, a: &ProjComplex, b: &ProjComplex) -> Result<ConeSummands, String> {
    let mut out = Vec::new();
    let Some((lo, hi)) = crate::hom::hom_window(a, b) else { return Ok(out) };
    for k in lo..=hi {
        for m in e.hom_basis(a, &b.shift(e.f, k)) {
            match e.decompose(&e.cone(&m)) {
                Decision::Yes(parts) => out.push((k, parts)),
                Decision::No => {}
                Decision::Undecided(r) => return Err(r),
            }
        }
    }
    Ok(out)
}

/// Closure of a set of strings under cones of basis morphisms and string
/// summands, restricted to strings of at most `max_letters` letters.
pub fn cone_closure(e: &Engine, seeds: &[GradedString], max_letters: usize, depth: usize) -> Result<BTreeSet<GradedString>, String> {
    let alg = &e.alg;
    let mut set: BTreeSet<GradedString> = seeds.iter().map(|s| s.canonical(alg)).collect();
    for _ in 0..depth {
        let members: Vec<ProjComplex> = set.iter().map(|s| e.string_complex(s)).collect();
        let mut added = false;
        for a in &members {
            for b in &members {
                for (_, parts) in cone_summands(e, a, b)? {
                    for (w, _) in parts {
                        if let Some(s) = w.as_string() {
                            if s.len() <= max_letters && set.insert(s.canonical(alg)) {
                                added = true;
                            }
                        }
                    }
                }
            }
        }
        if !added {
            break;
        }
    }
    Ok(set)
}

#[derive(Clone, Debug, Serialize)]
pub struct ThickClass {
    /// Canonical representative, arcs sorted by literal.
    pub representative: Vec<String>,
    pub members: usize,
    pub pointed: bool,
    /// Arcs of the letter-bounded universe generated by the class.
    pub generated: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Edge {
    pub lower: usize,
    pub upper: usize,
    /// False when some comparison behind the edge hit a bound.
    pub certified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Poset {
    pub classes: Vec<ThickClass>,
    /// Covering relations of the order.
    pub edges: Vec<Edge>,
    /// Pairs left undecided by the bounds.
    pub unknown: Vec<(usize, usize)>,
}

impl Poset {
    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.reachable(i, j)
    }

    fn reachable(&self, i: usize, j: usize) -> bool {
        let mut stack = vec![i];
        let mut seen = BTreeSet::new();
        while let Some(x) = stack.pop() {
            if x == j {
                return true;
            }
            for ed in &self.edges {
                if ed.lower == x && seen.insert(ed.upper) {
                    stack.push(ed.upper);
                }
            }
        }
        false
    }

    pub fn maxima(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&i| !self.edges.iter().any(|ed| ed.lower == i)).collect()
    }

    pub fn minima(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&i| !self.edges.iter().any(|ed| ed.upper == i)).collect()
    }

    /// Graph description in the dot language.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph thick {\n  rankdir=BT;\n");
        for (i, c) in self.classes.iter().enumerate() {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", i, c.representative.join(" | ")));
        }
        for ed in &self.edges {
            let style = if ed.certified { "" } else { " [style=dashed]" };
            out.push_str(&format!("  n{} -> n{}{};\n", ed.lower, ed.upper, style));
        }
        for (i, j) in &self.unknown {
            out.push_str(&format!("  n{} -> n{} [style=dotted, label=\"unknown\"];\n", i, j));
        }
        out.push_str("}\n");
        out
    }
}

/// Exceptional and spherelike arcs with at most `max_letters` letters, canonical.
pub fn arc_universe(e: &Engine, max_letters: usize) -> Result<Vec<GradedString>, ArcError> {
    let mut out = Vec::new();
    for s in enumerate_strings(&e.alg, max_letters) {
        if classify_arc(e, &s)?.kind != ArcKind::Crossing {
            out.push(s.canonical(&e.alg));
        }
    }
    Ok(out)
}

/// Connected arc-collections drawn from `universe`.
pub fn connected_collections(e: &Engine, universe: &[GradedString], max_size: usize) -> Result<Vec<Vec<usize>>, ArcError> {
    let n = universe.len();
    let mut compatible = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let ok = is_arc_collection(e, &[universe[i].clone(), universe[j].clone()])?;
            compatible[i][j] = ok;
            compatible[j][i] = ok;
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn cliques(
        start: usize,
        cur: &mut Vec<usize>,
        compatible: &[Vec<bool>],
        max_size: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        for i in start..compatible.len() {
            if cur.iter().all(|&j| compatible[i][j]) {
                cur.push(i);
                out.push(cur.clone());
                if cur.len() < max_size {
                    cliques(i + 1, cur, compatible, max_size, out);
                }
                cur.pop();
            }
        }
    }
    cliques(0, &mut cur, &compatible, max_size, &mut out);
    out.retain(|c| {
        let arcs: Vec<GradedString> = c.iter().map(|&i| universe[i].clone()).collect();
        is_connected(e, &arcs)
    });
    Ok(out)
}

fn is_pointed_collection(e: &Engine, arcs: &[GradedString]) -> bool {
    let ends: Vec<(usize, usize)> = arcs.iter().map(|s| end_points(&e.alg, s)).collect();
    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    for &(l, r) in &ends {
        *degree.entry(l).or_default() += 1;
        *degree.entry(r).or_default() += 1;
    }
    degree.keys().any(|&v| {
        ends.iter().all(|&(l, r)| l == v || r == v) && degree.iter().all(|(&u, &d)| u == v || d == 1)
    })
}

/// The poset of thick subcategories generated by connected arc-collections
/// whose arcs have at most `max_letters` letters.
pub fn poset(e: &Engine, max_letters: usize, max_size: usize, bounds: SearchBounds) -> Result<Poset, ArcError> {
    let alg = &e.alg;
    let universe = arc_universe(e, max_letters)?;
    let colls = connected_collections(e, &universe, max_size)?;
    // generated[c][x]: membership of universe arc x over collection c
    let mut signature: Vec<Vec<Option<bool>>> = Vec::new();
    for c in &colls {
        let arcs: Vec<GradedString> = c.iter().map(|&i| universe[i].clone()).collect();
        signature.push(
            universe
                .iter()
                .map(|x| match is_generated(e, x, &arcs, bounds) {
                    Membership::Generated(_) => Some(true),
                    Membership::NotGenerated(_) => Some(false),
                    Membership::BoundExhausted { .. } => None,
                })
                .collect(),
        );
    }
    let mut groups: BTreeMap<Vec<Option<bool>>, Vec<usize>> = BTreeMap::new();
    for (k, sig) in signature.iter().enumerate() {
        groups.entry(sig.clone()).or_default().push(k);
    }
    let mut classes = Vec::new();
    let mut sigs = Vec::new();
    for (sig, members) in &groups {
        let lit = |k: usize| -> Vec<String> {
            let mut v: Vec<String> = colls[k].iter().map(|&i| universe[i].literal(alg)).collect();
            v.sort();
            v
        };
        let pointed: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&k| is_pointed_collection(e, &colls[k].iter().map(|&i| universe[i].clone()).collect::<Vec<_>>()))
            .collect();
        let pool = if pointed.is_empty() { members.clone() } else { pointed.clone() };
        let rep = pool.iter().map(|&k| (colls[k].len(), lit(k))).min().map(|x| x.1).unwrap_or_default();
        classes.push(ThickClass {
            representative: rep,
            members: members.len(),
            pointed: !pointed.is_empty(),
            generated: universe.iter().zip(sig).filter(|(_, g)| **g == Some(true)).map(|(x, _)| x.literal(alg)).collect(),
        });
        sigs.push(sig.clone());
    }
    // class i below class j when everything i generates, j generates
    let n = classes.len();
    let mut below = vec![vec![Some(false); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                below[i][j] = Some(true);
                continue;
            }
            let mut verdict = Some(true);
            for (x, y) in sigs[i].iter().zip(&sigs[j]) {
                match (x, y) {
                    (Some(true), Some(false)) => {
                        verdict = Some(false);
                        break;
                    }
                    (Some(true), None) | (None, _) => verdict = None,
                    _ => {}
                }
            }
            below[i][j] = verdict;
        }
    }
    let mut edges = Vec::new();
    let mut unknown = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            match below[i][j] {
                Some(true) => {
                    let covered = (0..n).any(|k| k != i && k != j && below[i][k] == Some(true) && below[k][j] == Some(true));
                    if !covered {
                        edges.push(Edge { lower: i, upper: j, certified: true });
                    }
                }
                None => unknown.push((i, j)),
                Some(false) => {}
            }
        }
    }
    Ok(Poset { classes, edges, unknown })
}
