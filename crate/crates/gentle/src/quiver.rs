//! Quivers with length-two relations: parsing, the gentle conditions,
//! homological smoothness, permitted paths and permitted threads.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a vertex in [`Quiver::vertices`].
pub type Vertex = usize;
/// Index of an arrow in [`Quiver::arrows`].
pub type ArrowId = usize;
/// Index of a permitted path in the basis of the algebra.
pub type PathId = u32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: Vertex,
    pub target: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

/// Ordered arrow pairs `(a, b)` meaning the composite "a then b" lies in `I`.
pub type RelationSet = BTreeSet<(ArrowId, ArrowId)>;

/// Orders identifiers so that numeric names compare numerically.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        _ => a.cmp(b),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: undeclared vertex `{name}`")]
    UndeclaredVertex { line: usize, col: usize, name: String },
    #[error("{line}:{col}: undeclared arrow `{name}`")]
    UndeclaredArrow { line: usize, col: usize, name: String },
    #[error("{line}:{col}: duplicate {what} `{name}`")]
    Duplicate { line: usize, col: usize, what: &'static str, name: String },
    #[error("{line}:{col}: non-composable relation `{a} {b}`: {a} ends at {t} but {b} starts at {s}")]
    NonComposable { line: usize, col: usize, a: String, b: String, t: String, s: String },
    #[error("not gentle: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    NotGentle(Vec<Violation>),
    #[error("invalid structured algebra: {0}")]
    Json(String),
}

/// The clauses of the definition of a gentle algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Clause {
    Connected,
    SourceDegree,
    TargetDegree,
    ForbiddenSuccessor,
    PermittedSuccessor,
    ForbiddenPredecessor,
    PermittedPredecessor,
    LengthTwo,
    Admissible,
}

impl Clause {
    pub fn name(self) -> &'static str {
        match self {
            Clause::Connected => "finite connected quiver",
            Clause::SourceDegree => "at most two arrows with source v",
            Clause::TargetDegree => "at most two arrows with target v",
            Clause::ForbiddenSuccessor => "at most one arrow b such that ab in I",
            Clause::PermittedSuccessor => "at most one arrow c such that ac not in I",
            Clause::ForbiddenPredecessor => "at most one arrow b such that ba in I",
            Clause::PermittedPredecessor => "at most one arrow c such that ca not in I",
            Clause::LengthTwo => "I generated by paths of length 2",
            Clause::Admissible => "I admissible",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub clause: Clause,
    /// Name of the vertex or arrow at which the clause fails.
    pub witness: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at {}): {}", self.clause.name(), self.witness, self.detail)
    }
}

/// Name-level description of an algebra, as read from a file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    pub relations: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    Vertices,
    Arrows,
    Relations,
}

fn is_ident(s: &str) -> bool {
    !s.is_empty()
        && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Position-annotated source of every name, used for error reporting.
#[derive(Default)]
struct Positions {
    vertices: Vec<(usize, usize)>,
    arrows: Vec<(usize, usize, usize, usize)>,
    relations: Vec<(usize, usize, usize)>,
}

fn parse_spec(text: &str) -> Result<(AlgebraSpec, Positions), AlgebraError> {
    let mut spec = AlgebraSpec { vertices: vec![], arrows: vec![], relations: vec![] };
    let mut pos = Positions::default();
    let mut section = Section::None;
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = body.len() - body.trim_start().len();
        let mut rest = trimmed;
        let mut offset = indent;
        for (kw, sec) in [
            ("vertices:", Section::Vertices),
            ("arrows:", Section::Arrows),
            ("relations:", Section::Relations),
        ] {
            if let Some(r) = trimmed.strip_prefix(kw) {
                section = sec;
                offset = indent + kw.len() + (r.len() - r.trim_start().len());
                rest = r.trim();
                break;
            }
        }
        if rest.is_empty() {
            continue;
        }
        let col = offset + 1;
        match section {
            Section::None => {
                return Err(AlgebraError::Syntax {
                    line,
                    col,
                    msg: "expected `vertices:`, `arrows:` or `relations:`".into(),
                })
            }
            Section::Vertices => {
                let mut c = offset;
                for tok in rest.split(|ch: char| ch == ',' || ch.is_whitespace()) {
                    if tok.is_empty() {
                        c += 1;
                        continue;
                    }
                    if !is_ident(tok) {
                        return Err(AlgebraError::Syntax {
                            line,
                            col: c + 1,
                            msg: format!("invalid vertex name `{tok}`"),
                        });
                    }
                    spec.vertices.push(tok.to_string());
                    pos.vertices.push((line, c + 1));
                    c += tok.len() + 1;
                }
            }
            Section::Arrows => {
                for (k, entry) in rest.split(';').enumerate() {
                    let entry = entry.trim();
                    if entry.is_empty() {
                        continue;
                    }
                    let _ = k;
                    let Some((name, ends)) = entry.split_once(':') else {
                        return Err(AlgebraError::Syntax {
                            line,
                            col,
                            msg: format!("expected `name: source -> target`, found `{entry}`"),
                        });
                    };
                    let Some((s, t)) = ends.split_once("->") else {
                        return Err(AlgebraError::Syntax {
                            line,
                            col,
                            msg: format!("missing `->` in arrow `{}`", name.trim()),
                        });
                    };
                    let (name, s, t) = (name.trim(), s.trim(), t.trim());
                    for tok in [name, s, t] {
                        if !is_ident(tok) {
                            return Err(AlgebraError::Syntax {
                                line,
                                col,
                                msg: format!("invalid identifier `{tok}`"),
                            });
                        }
                    }
                    let scol = col + raw.trim_start().find(s).unwrap_or(0);
                    let tcol = col + raw.trim_start().rfind(t).unwrap_or(0);
                    spec.arrows.push(ArrowSpec {
                        name: name.into(),
                        source: s.into(),
                        target: t.into(),
                    });
                    pos.arrows.push((line, col, scol.max(col), tcol.max(col)));
                }
            }
            Section::Relations => {
                for entry in rest.split([',', ';']) {
                    let toks: Vec<&str> = entry.split_whitespace().collect();
                    if toks.is_empty() {
                        continue;
                    }
                    if toks.len() != 2 || !toks.iter().all(|t| is_ident(t)) {
                        return Err(AlgebraError::Syntax {
                            line,
                            col,
                            msg: format!("expected a relation `a b`, found `{}`", entry.trim()),
                        });
                    }
                    spec.relations.push((toks[0].into(), toks[1].into()));
                    pos.relations.push((line, col, col + entry.trim_start().find(toks[1]).unwrap_or(0)));
                }
            }
        }
    }
    Ok((spec, pos))
}

impl AlgebraSpec {
    /// Parses the line-oriented text format.
    pub fn parse(text: &str) -> Result<AlgebraSpec, AlgebraError> {
        parse_spec(text).map(|(s, _)| s)
    }

    pub fn from_json(text: &str) -> Result<AlgebraSpec, AlgebraError> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Json(e.to_string()))
    }

    /// Sorts vertices, arrows and relations by name.
    pub fn canonical(&self) -> AlgebraSpec {
        let mut s = self.clone();
        s.vertices.sort_by(|a, b| natural_cmp(a, b));
        s.arrows.sort_by(|a, b| natural_cmp(&a.name, &b.name));
        s.relations
            .sort_by(|a, b| natural_cmp(&a.0, &b.0).then_with(|| natural_cmp(&a.1, &b.1)));
        s
    }

    /// Canonical text form; re-parsing it yields an equal canonical spec.
    pub fn to_text(&self) -> String {
        let c = self.canonical();
        let mut out = String::new();
        out.push_str("vertices:");
        for v in &c.vertices {
            out.push(' ');
            out.push_str(v);
        }
        out.push_str("\narrows:\n");
        for a in &c.arrows {
            out.push_str(&format!("  {}: {} -> {}\n", a.name, a.source, a.target));
        }
        out.push_str("relations:\n");
        for (a, b) in &c.relations {
            out.push_str(&format!("  {a} {b}\n"));
        }
        out
    }

    /// Canonical structured form with keys `vertices`, `arrows`, `relations`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.canonical()).expect("serializable")
    }
}

/// Resolves names and checks structural well-formedness.
fn resolve(
    spec: &AlgebraSpec,
    pos: &Positions,
) -> Result<(Quiver, RelationSet), AlgebraError> {
    let at = |v: &[(usize, usize)], i: usize| v.get(i).copied().unwrap_or((0, 0));
    let mut order: Vec<usize> = (0..spec.vertices.len()).collect();
    order.sort_by(|&a, &b| natural_cmp(&spec.vertices[a], &spec.vertices[b]));
    let mut vertices = Vec::new();
    for &i in &order {
        let name = &spec.vertices[i];
        if vertices.last() == Some(name) {
            let (line, col) = at(&pos.vertices, i);
            return Err(AlgebraError::Duplicate { line, col, what: "vertex", name: name.clone() });
        }
        vertices.push(name.clone());
    }
    let vindex: HashMap<&str, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut aorder: Vec<usize> = (0..spec.arrows.len()).collect();
    aorder.sort_by(|&a, &b| natural_cmp(&spec.arrows[a].name, &spec.arrows[b].name));
    let mut arrows: Vec<Arrow> = Vec::new();
    for &i in &aorder {
        let a = &spec.arrows[i];
        let (line, col, scol, tcol) = pos.arrows.get(i).copied().unwrap_or((0, 0, 0, 0));
        if arrows.last().map(|x| &x.name) == Some(&a.name) {
            return Err(AlgebraError::Duplicate { line, col, what: "arrow", name: a.name.clone() });
        }
        let source = *vindex.get(a.source.as_str()).ok_or(AlgebraError::UndeclaredVertex {
            line,
            col: scol,
            name: a.source.clone(),
        })?;
        let target = *vindex.get(a.target.as_str()).ok_or(AlgebraError::UndeclaredVertex {
            line,
            col: tcol,
            name: a.target.clone(),
        })?;
        arrows.push(Arrow { name: a.name.clone(), source, target });
    }
    let aindex: HashMap<&str, usize> =
        arrows.iter().enumerate().map(|(i, a)| (a.name.as_str(), i)).collect();
    let mut relations = RelationSet::new();
    for (i, (a, b)) in spec.relations.iter().enumerate() {
        let (line, col, bcol) = pos.relations.get(i).copied().unwrap_or((0, 0, 0));
        let ia = *aindex
            .get(a.as_str())
            .ok_or(AlgebraError::UndeclaredArrow { line, col, name: a.clone() })?;
        let ib = *aindex
            .get(b.as_str())
            .ok_or(AlgebraError::UndeclaredArrow { line, col: bcol, name: b.clone() })?;
        if arrows[ia].target != arrows[ib].source {
            return Err(AlgebraError::NonComposable {
                line,
                col,
                a: a.clone(),
                b: b.clone(),
                t: vertices[arrows[ia].target].clone(),
                s: vertices[arrows[ib].source].clone(),
            });
        }
        if !relations.insert((ia, ib)) {
            return Err(AlgebraError::Duplicate {
                line,
                col,
                what: "relation",
                name: format!("{a} {b}"),
            });
        }
    }
    Ok((Quiver { vertices, arrows }, relations))
}

/// Finds a cycle in the digraph on arrows with the given successor lists.
fn find_cycle(n: usize, succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        stack.push((root, 0));
        state[root] = 1;
        while let Some(&mut (v, ref mut k)) = stack.last_mut() {
            if *k < succ[v].len() {
                let w = succ[v][*k];
                *k += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => {
                        let start = stack.iter().position(|&(x, _)| x == w).unwrap();
                        return Some(stack[start..].iter().map(|&(x, _)| x).collect());
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// Checks every clause of the definition of a gentle algebra.
pub fn validate_gentle(quiver: &Quiver, relations: &RelationSet) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = quiver.vertices.len();
    let arrows = &quiver.arrows;
    if n == 0 {
        out.push(Violation {
            clause: Clause::Connected,
            witness: "-".into(),
            detail: "the quiver has no vertices".into(),
        });
        return out;
    }
    let mut seen = vec![false; n];
    let mut queue = vec![0];
    seen[0] = true;
    while let Some(v) = queue.pop() {
        for a in arrows {
            for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        out.push(Violation {
            clause: Clause::Connected,
            witness: quiver.vertices[v].clone(),
            detail: format!("vertex {} is not connected to {}", quiver.vertices[v], quiver.vertices[0]),
        });
    }
    for v in 0..n {
        let outs = arrows.iter().filter(|a| a.source == v).count();
        let ins = arrows.iter().filter(|a| a.target == v).count();
        if outs > 2 {
            out.push(Violation {
                clause: Clause::SourceDegree,
                witness: quiver.vertices[v].clone(),
                detail: format!("{outs} arrows start at {}", quiver.vertices[v]),
            });
        }
        if ins > 2 {
            out.push(Violation {
                clause: Clause::TargetDegree,
                witness: quiver.vertices[v].clone(),
                detail: format!("{ins} arrows end at {}", quiver.vertices[v]),
            });
        }
    }
    let names = |v: &[usize]| v.iter().map(|&i| arrows[i].name.clone()).collect::<Vec<_>>().join(", ");
    for (ia, a) in arrows.iter().enumerate() {
        let after: Vec<usize> = (0..arrows.len()).filter(|&b| arrows[b].source == a.target).collect();
        let (forb, perm): (Vec<usize>, Vec<usize>) =
            after.iter().partition(|&&b| relations.contains(&(ia, b)));
        if forb.len() > 1 {
            out.push(Violation {
                clause: Clause::ForbiddenSuccessor,
                witness: a.name.clone(),
                detail: format!("{} followed by {} all lie in I", a.name, names(&forb)),
            });
        }
        if perm.len() > 1 {
            out.push(Violation {
                clause: Clause::PermittedSuccessor,
                witness: a.name.clone(),
                detail: format!("{} followed by {} all avoid I", a.name, names(&perm)),
            });
        }
        let before: Vec<usize> = (0..arrows.len()).filter(|&b| arrows[b].target == a.source).collect();
        let (forb, perm): (Vec<usize>, Vec<usize>) =
            before.iter().partition(|&&b| relations.contains(&(b, ia)));
        if forb.len() > 1 {
            out.push(Violation {
                clause: Clause::ForbiddenPredecessor,
                witness: a.name.clone(),
                detail: format!("{} preceded by {} all lie in I", a.name, names(&forb)),
            });
        }
        if perm.len() > 1 {
            out.push(Violation {
                clause: Clause::PermittedPredecessor,
                witness: a.name.clone(),
                detail: format!("{} preceded by {} all avoid I", a.name, names(&perm)),
            });
        }
    }
    let succ: Vec<Vec<usize>> = (0..arrows.len())
        .map(|a| {
            (0..arrows.len())
                .filter(|&b| arrows[b].source == arrows[a].target && !relations.contains(&(a, b)))
                .collect()
        })
        .collect();
    if let Some(cycle) = find_cycle(arrows.len(), &succ) {
        out.push(Violation {
            clause: Clause::Admissible,
            witness: arrows[cycle[0]].name.clone(),
            detail: format!("permitted cycle {} has unbounded powers", names(&cycle)),
        });
    }
    out
}

/// A path `a_1 ... a_n` with `t(a_i) = s(a_{i+1})`, or the trivial path at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: Vertex,
    pub end: Vertex,
    pub arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: Vertex) -> Path {
        Path { start: v, end: v, arrows: vec![] }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }
}

/// A maximal permitted thread: a maximal path avoiding `I`, or a trivial
/// thread at a vertex with fewer than two arrow occurrences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thread {
    pub name: String,
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<ArrowId>,
}

/// A position on a thread: the thread index and an index into its vertices.
pub type Occurrence = (usize, usize);

/// A validated gentle algebra `kQ/I` with precomputed path tables.
#[derive(Clone, Debug)]
pub struct GentleAlgebra {
    quiver: Quiver,
    relations: RelationSet,
    succ_perm: Vec<Option<ArrowId>>,
    succ_forb: Vec<Option<ArrowId>>,
    pred_perm: Vec<Option<ArrowId>>,
    pred_forb: Vec<Option<ArrowId>>,
    paths: Vec<Path>,
    path_ids: HashMap<Path, PathId>,
    mul: Vec<Option<PathId>>,
    between: Vec<Vec<Vec<PathId>>>,
    threads: Vec<Thread>,
    arrow_pos: Vec<Occurrence>,
    occ: Vec<[Occurrence; 2]>,
}

impl PartialEq for GentleAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations
    }
}

impl Eq for GentleAlgebra {}

/// Parses and validates an algebra in the text format.
pub fn parse_algebra(text: &str) -> Result<GentleAlgebra, AlgebraError> {
    let (spec, pos) = parse_spec(text)?;
    let (q, r) = resolve(&spec, &pos)?;
    GentleAlgebra::new(q, r)
}

/// Accepts either the text format or the structured (JSON) form.
pub fn parse_algebra_any(text: &str) -> Result<GentleAlgebra, AlgebraError> {
    if text.trim_start().starts_with('{') {
        GentleAlgebra::from_spec(&AlgebraSpec::from_json(text)?)
    } else {
        parse_algebra(text)
    }
}

impl GentleAlgebra {
    pub fn from_spec(spec: &AlgebraSpec) -> Result<GentleAlgebra, AlgebraError> {
        let (q, r) = resolve(spec, &Positions::default())?;
        GentleAlgebra::new(q, r)
    }

    /// Validates the gentle conditions and builds the path tables.
    pub fn new(quiver: Quiver, relations: RelationSet) -> Result<GentleAlgebra, AlgebraError> {
        let violations = validate_gentle(&quiver, &relations);
        if !violations.is_empty() {
            return Err(AlgebraError::NotGentle(violations));
        }
        let na = quiver.arrows.len();
        let nv = quiver.vertices.len();
        let arrows = &quiver.arrows;
        let mut succ_perm = vec![None; na];
        let mut succ_forb = vec![None; na];
        let mut pred_perm = vec![None; na];
        let mut pred_forb = vec![None; na];
        for a in 0..na {
            for b in 0..na {
                if arrows[a].target != arrows[b].source {
                    continue;
                }
                if relations.contains(&(a, b)) {
                    succ_forb[a] = Some(b);
                    pred_forb[b] = Some(a);
                } else {
                    succ_perm[a] = Some(b);
                    pred_perm[b] = Some(a);
                }
            }
        }
        let mut paths: Vec<Path> = (0..nv).map(Path::trivial).collect();
        for a in 0..na {
            let mut p = Path { start: arrows[a].source, end: arrows[a].target, arrows: vec![a] };
            loop {
                paths.push(p.clone());
                let last = *p.arrows.last().unwrap();
                match succ_perm[last] {
                    Some(b) => {
                        p.arrows.push(b);
                        p.end = arrows[b].target;
                    }
                    None => break,
                }
            }
        }
        let path_ids: HashMap<Path, PathId> =
            paths.iter().enumerate().map(|(i, p)| (p.clone(), i as PathId)).collect();
        let np = paths.len();
        let mut mul = vec![None; np * np];
        for (i, p) in paths.iter().enumerate() {
            for (j, q) in paths.iter().enumerate() {
                if p.end != q.start {
                    continue;
                }
                if let (Some(&x), Some(&y)) = (p.arrows.last(), q.arrows.first()) {
                    if relations.contains(&(x, y)) {
                        continue;
                    }
                }
                let mut r = p.clone();
                r.arrows.extend_from_slice(&q.arrows);
                r.end = q.end;
                mul[i * np + j] = path_ids.get(&r).copied();
            }
        }
        let mut between = vec![vec![Vec::new(); nv]; nv];
        for (i, p) in paths.iter().enumerate() {
            between[p.start][p.end].push(i as PathId);
        }
        // permitted threads
        let mut threads = Vec::new();
        let mut arrow_pos = vec![(usize::MAX, 0); na];
        for a in 0..na {
            if pred_perm[a].is_some() {
                continue;
            }
            let mut t = Thread { name: String::new(), vertices: vec![arrows[a].source], arrows: vec![] };
            let mut cur = Some(a);
            while let Some(x) = cur {
                arrow_pos[x] = (threads.len(), t.arrows.len());
                t.arrows.push(x);
                t.vertices.push(arrows[x].target);
                cur = succ_perm[x];
            }
            t.name = t.arrows.iter().map(|&x| arrows[x].name.as_str()).collect::<Vec<_>>().join(".");
            threads.push(t);
        }
        let mut count = vec![0usize; nv];
        for t in &threads {
            for &v in &t.vertices {
                count[v] += 1;
            }
        }
        for (v, cv) in count.iter_mut().enumerate() {
            let mut k = 0;
            while *cv < 2 {
                let suffix = if k == 0 { "" } else { "'" };
                threads.push(Thread {
                    name: format!("@{}{}", quiver.vertices[v], suffix),
                    vertices: vec![v],
                    arrows: vec![],
                });
                *cv += 1;
                k += 1;
            }
        }
        let mut occ_lists: Vec<Vec<Occurrence>> = vec![Vec::new(); nv];
        for (ti, t) in threads.iter().enumerate() {
            for (k, &v) in t.vertices.iter().enumerate() {
                occ_lists[v].push((ti, k));
            }
        }
        let occ = occ_lists
            .into_iter()
            .map(|l| {
                assert_eq!(l.len(), 2, "every vertex lies on two thread positions");
                [l[0], l[1]]
            })
            .collect();
        Ok(GentleAlgebra {
            quiver,
            relations,
            succ_perm,
            succ_forb,
            pred_perm,
            pred_forb,
            paths,
            path_ids,
            mul,
            between,
            threads,
            arrow_pos,
            occ,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn vertex_name(&self, v: Vertex) -> &str {
        &self.quiver.vertices[v]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.quiver.arrows[a]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<Vertex> {
        self.quiver.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.quiver.arrows.iter().position(|a| a.name == name)
    }

    pub fn in_relation(&self, a: ArrowId, b: ArrowId) -> bool {
        self.relations.contains(&(a, b))
    }

    pub fn permitted_successor(&self, a: ArrowId) -> Option<ArrowId> {
        self.succ_perm[a]
    }

    pub fn forbidden_successor(&self, a: ArrowId) -> Option<ArrowId> {
        self.succ_forb[a]
    }

    pub fn permitted_predecessor(&self, a: ArrowId) -> Option<ArrowId> {
        self.pred_perm[a]
    }

    pub fn forbidden_predecessor(&self, a: ArrowId) -> Option<ArrowId> {
        self.pred_forb[a]
    }

    /// Name-level description, suitable for [`AlgebraSpec::to_text`].
    pub fn spec(&self) -> AlgebraSpec {
        AlgebraSpec {
            vertices: self.quiver.vertices.clone(),
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| ArrowSpec {
                    name: a.name.clone(),
                    source: self.quiver.vertices[a.source].clone(),
                    target: self.quiver.vertices[a.target].clone(),
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|&(a, b)| (self.quiver.arrows[a].name.clone(), self.quiver.arrows[b].name.clone()))
                .collect(),
        }
        .canonical()
    }

    /// Returns a cycle `c_1 ... c_n` with every cyclically consecutive composite
    /// in `I`, or `None` when the algebra is homologically smooth.
    pub fn smoothness_witness(&self) -> Option<Vec<ArrowId>> {
        let succ: Vec<Vec<usize>> = self.succ_forb.iter().map(|s| s.iter().copied().collect()).collect();
        find_cycle(self.num_arrows(), &succ)
    }

    pub fn is_homologically_smooth(&self) -> bool {
        self.smoothness_witness().is_none()
    }

    /// All permitted paths, trivial paths first (path id `v` is `e_v`).
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path(&self, id: PathId) -> &Path {
        &self.paths[id as usize]
    }

    pub fn path_id(&self, p: &Path) -> Option<PathId> {
        self.path_ids.get(p).copied()
    }

    pub fn idempotent(&self, v: Vertex) -> PathId {
        v as PathId
    }

    /// Product "p then q" in the path basis, zero when not permitted.
    #[inline]
    pub fn mul(&self, p: PathId, q: PathId) -> Option<PathId> {
        self.mul[p as usize * self.paths.len() + q as usize]
    }

    /// Permitted paths from `v` to `u`; they index a basis of `Hom(P_u, P_v)`.
    pub fn permitted_paths(&self, v: Vertex, u: Vertex) -> &[PathId] {
        &self.between[v][u]
    }

    /// Length of the longest permitted path.
    pub fn admissibility_bound(&self) -> usize {
        self.paths.iter().map(|p| p.len()).max().unwrap_or(0)
    }

    pub fn threads(&self) -> &[Thread] {
        &self.threads
    }

    pub fn thread_by_name(&self, name: &str) -> Option<usize> {
        self.threads.iter().position(|t| t.name == name)
    }

    /// Thread position of the source end of arrow `a`; the target end is
    /// one position further along the same thread.
    pub fn arrow_position(&self, a: ArrowId) -> Occurrence {
        self.arrow_pos[a]
    }

    /// The two thread positions at vertex `v`.
    pub fn occurrences(&self, v: Vertex) -> [Occurrence; 2] {
        self.occ[v]
    }

    /// The occurrence at `v` other than `o`.
    pub fn other_occurrence(&self, v: Vertex, o: Occurrence) -> Occurrence {
        let [x, y] = self.occ[v];
        if x == o {
            y
        } else {
            debug_assert_eq!(y, o);
            x
        }
    }

    pub fn path_name(&self, id: PathId) -> String {
        let p = self.path(id);
        if p.is_trivial() {
            format!("e{}", self.quiver.vertices[p.start])
        } else {
            p.arrows.iter().map(|&a| self.quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join(".")
        }
    }
}
