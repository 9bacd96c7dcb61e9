//! Pointed arc-collections: the star-shaped rewrite, half-edge order and
//! regions at the basepoint, the τ-map and its ψ-paths.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::arcs::{classify_arc, is_arc_collection, is_geometrically_connected, ArcError, ArcKind};
use crate::engine::Engine;
use crate::strings::{band_degree, validate_band, GradedString, Letter};
use crate::walk::{end_occurrences, end_points, glue, letter_of, End, Turn, Walk};

/// The graph of marked points (vertices) and arcs (edges).
#[derive(Clone, Debug)]
pub struct ArcGraph {
    pub ends: Vec<(usize, usize)>,
}

impl ArcGraph {
    pub fn new(e: &Engine, arcs: &[GradedString]) -> ArcGraph {
        ArcGraph { ends: arcs.iter().map(|s| end_points(&e.alg, s)).collect() }
    }

    pub fn points(&self) -> BTreeSet<usize> {
        self.ends.iter().flat_map(|&(l, r)| [l, r]).collect()
    }

    /// Half-edges at `p`; a loop counts twice.
    pub fn degree(&self, p: usize) -> usize {
        self.ends.iter().map(|&(l, r)| (l == p) as usize + (r == p) as usize).sum()
    }

    /// Edge distances from `v`, unreachable points omitted.
    pub fn distances(&self, v: usize) -> BTreeMap<usize, usize> {
        let mut dist = BTreeMap::from([(v, 0)]);
        let mut queue = VecDeque::from([v]);
        while let Some(p) = queue.pop_front() {
            let d = dist[&p];
            for &(l, r) in &self.ends {
                for (a, b) in [(l, r), (r, l)] {
                    if a == p && !dist.contains_key(&b) {
                        dist.insert(b, d + 1);
                        queue.push_back(b);
                    }
                }
            }
        }
        dist
    }

    /// Distance 1 to and degree 1 at every other marked point.
    pub fn is_pointed_at(&self, v: usize) -> bool {
        let dist = self.distances(v);
        self.points().into_iter().all(|u| u == v || (dist.get(&u) == Some(&1) && self.degree(u) == 1))
    }
}

/// One rewrite: arc `replaced` became `glued`, the concatenation of `via`
/// and it, or was dropped when that concatenation is already an arc.
#[derive(Clone, Debug, Serialize)]
pub struct PointingStep {
    pub replaced: usize,
    pub via: usize,
    pub point: usize,
    #[serde(skip)]
    pub glued: GradedString,
    pub dropped: bool,
}

#[derive(Clone, Debug)]
pub struct Pointing {
    pub arcs: Vec<GradedString>,
    pub basepoint: usize,
    pub steps: Vec<PointingStep>,
}

/// Rewrites a connected arc-collection into one pointed at `v` by gluing
/// arcs through the marked points next to `v`.
pub fn to_pointed(e: &Engine, arcs: &[GradedString], v: usize, max_steps: usize) -> Result<Pointing, ArcError> {
    if !is_geometrically_connected(e, arcs) {
        return Err(ArcError::Disconnected);
    }
    let mut w: Vec<GradedString> = arcs.to_vec();
    if !w.is_empty() && !ArcGraph::new(e, &w).points().contains(&v) {
        return Err(ArcError::NotCollection(format!("no arc ends at marked point {}", e.alg.threads()[v].name)));
    }
    let mut steps = Vec::new();
    loop {
        let g = ArcGraph::new(e, &w);
        if w.is_empty() || g.is_pointed_at(v) {
            return Ok(Pointing { arcs: w, basepoint: v, steps });
        }
        if steps.len() >= max_steps {
            return Err(ArcError::BoundExhausted(format!("{} pointing steps", max_steps)));
        }
        let step = pointing_step(e, &w, &g, v)?;
        if step.dropped {
            w.remove(step.replaced);
        } else {
            w[step.replaced] = step.glued.clone();
        }
        steps.push(step);
    }
}

fn pointing_step(e: &Engine, w: &[GradedString], g: &ArcGraph, v: usize) -> Result<PointingStep, ArcError> {
    let dist = g.distances(v);
    for (&u, _) in dist.iter().filter(|(&u, &d)| d == 1 && u != v && g.degree(u) > 1) {
        for (x, &(xl, xr)) in g.ends.iter().enumerate() {
            let xe = match (xl, xr) {
                (a, b) if a == v && b == u => End::Right,
                (a, b) if a == u && b == v => End::Left,
                _ => continue,
            };
            for (y, &(yl, yr)) in g.ends.iter().enumerate() {
                if y == x {
                    continue;
                }
                for (ye, p) in [(End::Left, yl), (End::Right, yr)] {
                    if p != u {
                        continue;
                    }
                    for gl in glue(e, &w[x], xe, &w[y], ye) {
                        let z = gl.walk.string;
                        let key = z.canonical(&e.alg);
                        // the glued arc is already present, so w[y] is redundant
                        if w.iter().any(|a| a.canonical(&e.alg) == key) {
                            return Ok(PointingStep { replaced: y, via: x, point: u, glued: z, dropped: true });
                        }
                        let mut next = w.to_vec();
                        next[y] = z.clone();
                        let ng = ArcGraph::new(e, &next);
                        if ng.degree(u) + 1 != g.degree(u) || ng.degree(v) != g.degree(v) + 1 {
                            continue;
                        }
                        if is_arc_collection(e, &next)? {
                            return Ok(PointingStep { replaced: y, via: x, point: u, glued: z, dropped: false });
                        }
                    }
                }
            }
        }
    }
    Err(ArcError::NoSurgery("no simple concatenation towards the basepoint".into()))
}

/// A half-edge at the basepoint: an arc and one of its ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HalfEdge {
    pub arc: usize,
    pub end: End,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RegionKind {
    Terminal,
    Cyclic,
    Terminating,
}

#[derive(Clone, Debug, Serialize)]
pub struct Regions {
    /// `order[i-1]` is the half-edge with index `i`.
    pub order: Vec<HalfEdge>,
    /// Region `k` lies between half-edges `k` and `k+1`, for `k = 0..=b`.
    pub kinds: Vec<RegionKind>,
    pub tau: BTreeMap<usize, usize>,
    /// The τ-orbit of each non-terminal region, starting at it.
    pub orbits: BTreeMap<usize, Vec<usize>>,
}

impl Regions {
    pub fn half_edge(&self, i: usize) -> HalfEdge {
        self.order[i - 1]
    }
}

/// Half-edges at `v` in boundary order, read off the direction of the
/// certified endpoint morphism between every pair.
pub fn half_edge_order(e: &Engine, arcs: &[GradedString], v: usize) -> Result<Vec<HalfEdge>, ArcError> {
    let mut hs = Vec::new();
    for (i, s) in arcs.iter().enumerate() {
        let (l, r) = end_points(&e.alg, s);
        if l == v {
            hs.push(HalfEdge { arc: i, end: End::Left });
        }
        if r == v {
            hs.push(HalfEdge { arc: i, end: End::Right });
        }
    }
    let n = hs.len();
    // before[i][j]: the endpoint morphism runs from half-edge i to j. The two
    // ends of one loop are left open: the same self-morphism serves both
    // readings, so their order follows from the other half-edges.
    let mut before = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (hs[i], hs[j]);
            if a.arc == b.arc {
                continue;
            }
            let g = glue(e, &arcs[a.arc], a.end, &arcs[b.arc], b.end);
            let Some(first) = g.first() else {
                return Err(ArcError::Model(format!("half-edges {:?} and {:?} at one marked point do not glue", a, b)));
            };
            before[i][j] = first.forward;
            before[j][i] = !first.forward;
        }
    }
    let mut left: Vec<usize> = (0..n).collect();
    let mut order = Vec::new();
    while !left.is_empty() {
        let minimal: Vec<usize> = left.iter().copied().filter(|&j| !left.iter().any(|&i| before[i][j])).collect();
        let pick = match minimal.as_slice() {
            [x] => *x,
            [x, y] if hs[*x].arc == hs[*y].arc => *x.min(y),
            _ => return Err(ArcError::Model("endpoint morphisms at the basepoint are not linearly ordered".into())),
        };
        order.push(hs[pick]);
        left.retain(|&i| i != pick);
    }
    Ok(order)
}

/// Regions, τ and orbit kinds of a collection pointed at `v`.
pub fn regions_and_tau(e: &Engine, arcs: &[GradedString], v: usize) -> Result<Regions, ArcError> {
    if !ArcGraph::new(e, arcs).is_pointed_at(v) {
        return Err(ArcError::NotCollection("collection is not pointed at the basepoint".into()));
    }
    let order = half_edge_order(e, arcs, v)?;
    let b = order.len();
    let mut kinds_of = Vec::new();
    for s in arcs {
        kinds_of.push(classify_arc(e, s)?.kind);
    }
    let index_of = |h: HalfEdge| order.iter().position(|&x| x == h).map(|p| p + 1);
    let terminal = |k: usize| k == b || kinds_of[order[k].arc] == ArcKind::Exceptional;
    let mut tau = BTreeMap::new();
    for (k, &h) in order.iter().enumerate() {
        if terminal(k) {
            continue;
        }
        let other = HalfEdge { arc: h.arc, end: h.end.other() };
        let Some(t) = index_of(other) else {
            return Err(ArcError::Model("spherelike arc with a single half-edge at the basepoint".into()));
        };
        tau.insert(k, t);
    }
    let mut kinds = vec![RegionKind::Terminal; b + 1];
    let mut orbits = BTreeMap::new();
    for &a in tau.keys() {
        let mut orbit = vec![a];
        let mut cur = a;
        loop {
            let next = tau[&cur];
            if next == a {
                kinds[a] = RegionKind::Cyclic;
                break;
            }
            if !tau.contains_key(&next) {
                kinds[a] = RegionKind::Terminating;
                orbit.push(next);
                break;
            }
            if orbit.contains(&next) {
                return Err(ArcError::Model(format!("τ-orbit of region {} revisits region {}", a, next)));
            }
            orbit.push(next);
            cur = next;
        }
        orbits.insert(a, orbit);
    }
    Ok(Regions { order, kinds, tau, orbits })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LoopTag {
    Band,
    UngradedLoop,
}

#[derive(Clone, Debug)]
pub struct PsiPath {
    pub string: GradedString,
    /// Arcs concatenated along the orbit.
    pub arcs: Vec<usize>,
    /// For cyclic regions, what closing the path up gives.
    pub closing: Option<(Vec<Letter>, LoopTag)>,
}

/// The concatenation of the spherelike arcs along the τ-orbit of region `a`,
/// each entered at the half-edge after the current region.
pub fn psi_path(e: &Engine, arcs: &[GradedString], regions: &Regions, a: usize) -> Result<PsiPath, ArcError> {
    let alg = &e.alg;
    let Some(orbit) = regions.orbits.get(&a) else {
        return Err(ArcError::NotCollection(format!("region {} is terminal", a)));
    };
    let cyclic = regions.kinds[a] == RegionKind::Cyclic;
    let len = if cyclic { orbit.len() } else { orbit.len() - 1 };
    let mut used = Vec::new();
    let mut cur: Option<GradedString> = None;
    for &k in &orbit[..len] {
        let h = regions.half_edge(k + 1);
        let s = &arcs[h.arc];
        used.push(h.arc);
        cur = Some(match cur {
            // enter at the left so the path leaves through the other half-edge
            None => Walk::ending_at(alg, s, h.end.other()).string,
            Some(c) => {
                let mut found = None;
                for g in glue(e, &c, End::Right, s, h.end) {
                    let z = g.walk.string;
                    if classify_arc(e, &z).is_ok_and(|x| x.kind != ArcKind::Crossing)
                        && arcs.iter().all(|t| crate::arcs::interior_count(e, &z, t) == Ok(0))
                    {
                        found = Some(z);
                        break;
                    }
                }
                found.ok_or_else(|| ArcError::Model(format!("ψ-path of region {} does not glue without crossings", a)))?
            }
        });
    }
    let string = cur.expect("non-terminal orbits are nonempty");
    let closing = cyclic.then(|| close_up(e, &string));
    Ok(PsiPath { string, arcs: used, closing })
}

/// The cyclic word obtained by joining the right end of `s` back to its left end.
fn close_up(e: &Engine, s: &GradedString) -> (Vec<Letter>, LoopTag) {
    let alg = &e.alg;
    let (l, r) = end_occurrences(alg, s);
    let mut word = s.letters.clone();
    if l.0 == r.0 && l.1 != r.1 {
        word.push(letter_of(alg, Turn { thread: r.0, from: r.1, to: l.1 }));
    }
    let tag = if !word.is_empty() && validate_band(alg, &word).is_ok() && band_degree(&word) == 0 {
        LoopTag::Band
    } else {
        LoopTag::UngradedLoop
    };
    (word, tag)
}

/// The `i`-th power of a spherelike arc: `i` copies glued end to end.
pub fn power(e: &Engine, s: &GradedString, i: usize) -> Result<GradedString, ArcError> {
    let arc = classify_arc(e, s)?;
    if arc.kind != ArcKind::Spherelike {
        return Err(ArcError::NotCollection(format!("{} is not spherelike", s.literal(&e.alg))));
    }
    let mut cur = s.clone();
    for _ in 1..i.max(1) {
        let g = glue(e, &cur, End::Right, s, End::Left);
        let z = g
            .into_iter()
            .map(|g| g.walk.string)
            .max_by_key(|z| z.len())
            .ok_or_else(|| ArcError::Model(format!("{} does not glue to itself", s.literal(&e.alg))))?;
        cur = z;
    }
    Ok(cur)
}

/// Letters of the powers of a spherelike arc, `prefix loop^(i-1) suffix`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerString {
    pub base: i32,
    pub prefix: Vec<Letter>,
    pub period: Vec<Letter>,
    pub suffix: Vec<Letter>,
}

impl PowerString {
    pub fn letters(&self, i: usize) -> Vec<Letter> {
        let mut out = self.prefix.clone();
        for _ in 1..i.max(1) {
            out.extend(self.period.iter().cloned());
        }
        out.extend(self.suffix.iter().cloned());
        out
    }

    pub fn power(&self, e: &Engine, i: usize) -> Result<GradedString, ArcError> {
        GradedString::new(&e.alg, self.letters(i), self.base)
            .map_err(|err| ArcError::Model(format!("power {} is not a string: {}", i, err)))
    }
}

/// Splits the second and third powers into prefix, period and suffix.
pub fn power_string(e: &Engine, s: &GradedString) -> Result<PowerString, ArcError> {
    let p2 = power(e, s, 2)?;
    let p3 = power(e, s, 3)?;
    let (l1, l2, l3) = (s.len(), p2.len(), p3.len());
    if l2 < l1 || l3 - l2 != l2 - l1 {
        return Err(ArcError::Model("powers do not grow linearly".into()));
    }
    let per = l2 - l1;
    let base = p2.base;
    for j in 0..=l1 {
        let ps = PowerString {
            base,
            prefix: p2.letters[..j].to_vec(),
            period: p2.letters[j..j + per].to_vec(),
            suffix: p2.letters[j + per..].to_vec(),
        };
        if ps.letters(3) == p3.letters && p3.base == base {
            return Ok(ps);
        }
    }
    Err(ArcError::Model("powers are not periodic".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Growth {
    /// Constant from the given (1-based) power on.
    Constant { from: usize },
    /// Increasing by `slope` per power from the given power on.
    Increasing { from: usize, slope: usize },
    Irregular,
}

#[derive(Clone, Debug, Serialize)]
pub struct Stabilization {
    pub values: Vec<usize>,
    pub growth: Growth,
}

/// Classifies a sequence by its longest tail of constant differences.
pub fn classify_growth(values: &[usize]) -> Growth {
    let n = values.len();
    if n < 2 {
        return Growth::Constant { from: 1 };
    }
    let diff = |i: usize| values[i + 1] as i64 - values[i] as i64;
    let last = diff(n - 2);
    let mut from = n - 2;
    while from > 0 && diff(from - 1) == last {
        from -= 1;
    }
    // a tail needs at least three values to count
    if n - from < 3 && n >= 3 {
        return Growth::Irregular;
    }
    match last {
        0 => Growth::Constant { from: from + 1 },
        d if d > 0 => Growth::Increasing { from: from + 1, slope: d as usize },
        _ => Growth::Irregular,
    }
}

/// The sequence `hom(S_i, P)` up to shift for `i = 1..=i_max`.
pub fn stabilization_check(e: &Engine, s: &GradedString, p: &GradedString, i_max: usize) -> Result<Stabilization, ArcError> {
    let ps = power_string(e, s)?;
    let pc = e.string_complex(p);
    let mut values = Vec::new();
    for i in 1..=i_max {
        let si = if i == 1 { s.clone() } else { ps.power(e, i)? };
        values.push(e.hom_total(&e.string_complex(&si), &pc));
    }
    let growth = classify_growth(&values);
    Ok(Stabilization { values, growth })
}
