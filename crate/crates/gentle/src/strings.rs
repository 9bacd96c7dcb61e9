//! Graded homotopy strings and bands: literals, validity, gradings,
//! equivalence classes and bounded enumeration.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quiver::{ArrowId, GentleAlgebra, PathId, Vertex};

/// A homotopy letter: a nonempty path read forwards (direct) or backwards (inverse).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub arrows: Vec<ArrowId>,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrows: Vec<ArrowId>) -> Letter {
        Letter { arrows, inverse: false }
    }

    pub fn inverted(&self) -> Letter {
        Letter { arrows: self.arrows.clone(), inverse: !self.inverse }
    }

    /// Start vertex of the underlying path.
    pub fn path_start(&self, alg: &GentleAlgebra) -> Vertex {
        alg.arrow(self.arrows[0]).source
    }

    /// End vertex of the underlying path.
    pub fn path_end(&self, alg: &GentleAlgebra) -> Vertex {
        alg.arrow(*self.arrows.last().unwrap()).target
    }

    /// Vertex the letter leaves when read in word order.
    pub fn source(&self, alg: &GentleAlgebra) -> Vertex {
        if self.inverse {
            self.path_end(alg)
        } else {
            self.path_start(alg)
        }
    }

    /// Vertex the letter reaches when read in word order.
    pub fn target(&self, alg: &GentleAlgebra) -> Vertex {
        if self.inverse {
            self.path_start(alg)
        } else {
            self.path_end(alg)
        }
    }

    /// +1 for direct letters, -1 for inverse ones.
    pub fn step(&self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn path_id(&self, alg: &GentleAlgebra) -> Option<PathId> {
        let p = crate::quiver::Path {
            start: self.path_start(alg),
            end: self.path_end(alg),
            arrows: self.arrows.clone(),
        };
        alg.path_id(&p)
    }

    pub fn literal(&self, alg: &GentleAlgebra) -> String {
        let mut s = self.arrows.iter().map(|&a| alg.arrow(a).name.as_str()).collect::<Vec<_>>().join(".");
        if self.inverse {
            s.push_str("^-");
        }
        s
    }
}

/// A graded homotopy string. For the empty string `vertex` is the basepoint;
/// otherwise it is the source of the first letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GradedString {
    pub letters: Vec<Letter>,
    pub base: i32,
    pub vertex: Vertex,
}

/// A graded homotopy band with scalar `lambda` and dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GradedBand {
    pub letters: Vec<Letter>,
    pub base: i32,
    pub lambda: u32,
    pub dim: u32,
}

/// A string or band literal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Word {
    String(GradedString),
    Band(GradedBand),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationKind {
    /// The letter's path is not composable or contains a relation.
    LetterNotPermitted,
    /// Consecutive letters do not meet at a common vertex.
    Disconnected,
    ImmediateBacktrack,
    DirectDirectNotInI,
    InverseInverseNotInI,
    DirectInverseSameArrow,
    InverseDirectSameArrow,
    /// The word is cyclic but a proper power.
    ProperPower,
    /// The cyclic word has nonzero degree.
    Ungraded,
}

/// A failed homotopy-string condition. `junction` is 1-based: junction `j`
/// sits between letters `j` and `j+1`; for letter conditions it is the letter index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringViolation {
    pub junction: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for StringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = self.junction;
        match self.kind {
            ViolationKind::LetterNotPermitted => write!(f, "letter {j} is not a permitted path"),
            ViolationKind::Disconnected => write!(f, "letters do not meet at junction {j}"),
            ViolationKind::ImmediateBacktrack => write!(f, "immediate backtrack at junction {j}"),
            ViolationKind::DirectDirectNotInI => {
                write!(f, "direct-direct junction must lie in I (junction {j})")
            }
            ViolationKind::InverseInverseNotInI => {
                write!(f, "inverse-inverse junction must lie in I (junction {j})")
            }
            ViolationKind::DirectInverseSameArrow => {
                write!(f, "direct-inverse junction needs distinct final arrows (junction {j})")
            }
            ViolationKind::InverseDirectSameArrow => {
                write!(f, "inverse-direct junction needs distinct initial arrows (junction {j})")
            }
            ViolationKind::ProperPower => write!(f, "cyclic word is a proper power"),
            ViolationKind::Ungraded => write!(f, "ungraded cyclic word"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("col {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("ungraded cyclic word (degree {0})")]
    Ungraded(i32),
    #[error("invalid word: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<StringViolation>),
    #[error("band scalar must be nonzero")]
    ZeroScalar,
}

fn letter_ok(alg: &GentleAlgebra, l: &Letter) -> bool {
    if l.arrows.is_empty() {
        return false;
    }
    l.arrows.windows(2).all(|w| alg.arrow(w[0]).target == alg.arrow(w[1]).source && !alg.in_relation(w[0], w[1]))
}

/// Checks the junction between `x` and `y`, both permitted letters.
pub fn junction_ok(alg: &GentleAlgebra, x: &Letter, y: &Letter) -> Result<(), ViolationKind> {
    if x.target(alg) != y.source(alg) {
        return Err(ViolationKind::Disconnected);
    }
    if x.arrows == y.arrows && x.inverse != y.inverse {
        return Err(ViolationKind::ImmediateBacktrack);
    }
    match (x.inverse, y.inverse) {
        (false, false) => {
            if !alg.in_relation(*x.arrows.last().unwrap(), y.arrows[0]) {
                return Err(ViolationKind::DirectDirectNotInI);
            }
        }
        (true, true) => {
            if !alg.in_relation(*y.arrows.last().unwrap(), x.arrows[0]) {
                return Err(ViolationKind::InverseInverseNotInI);
            }
        }
        (false, true) => {
            if x.arrows.last() == y.arrows.last() {
                return Err(ViolationKind::DirectInverseSameArrow);
            }
        }
        (true, false) => {
            if x.arrows[0] == y.arrows[0] {
                return Err(ViolationKind::InverseDirectSameArrow);
            }
        }
    }
    Ok(())
}

/// Checks the homotopy-string conditions for a (linear) word.
pub fn validate_string(alg: &GentleAlgebra, letters: &[Letter]) -> Result<(), Vec<StringViolation>> {
    let mut v = Vec::new();
    for (i, l) in letters.iter().enumerate() {
        if !letter_ok(alg, l) {
            v.push(StringViolation { junction: i + 1, kind: ViolationKind::LetterNotPermitted });
        }
    }
    if !v.is_empty() {
        return Err(v);
    }
    for i in 1..letters.len() {
        if let Err(kind) = junction_ok(alg, &letters[i - 1], &letters[i]) {
            v.push(StringViolation { junction: i, kind });
        }
    }
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}

/// Number of direct letters minus the number of inverse letters.
pub fn band_degree(letters: &[Letter]) -> i32 {
    letters.iter().map(Letter::step).sum()
}

fn is_proper_power(letters: &[Letter]) -> bool {
    let n = letters.len();
    (1..n).any(|d| n.is_multiple_of(d) && (0..n).all(|i| letters[i] == letters[i % d]))
}

/// Checks the homotopy-band conditions for a cyclic word (grading not included).
pub fn validate_band(alg: &GentleAlgebra, letters: &[Letter]) -> Result<(), Vec<StringViolation>> {
    if letters.is_empty() {
        return Err(vec![StringViolation { junction: 0, kind: ViolationKind::Disconnected }]);
    }
    validate_string(alg, letters)?;
    let n = letters.len();
    let mut v = Vec::new();
    if let Err(kind) = junction_ok(alg, &letters[n - 1], &letters[0]) {
        v.push(StringViolation { junction: n, kind });
    }
    if is_proper_power(letters) {
        v.push(StringViolation { junction: 0, kind: ViolationKind::ProperPower });
    }
    if band_degree(letters) != 0 {
        v.push(StringViolation { junction: 0, kind: ViolationKind::Ungraded });
    }
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}

impl GradedString {
    pub fn empty(v: Vertex, base: i32) -> GradedString {
        GradedString { letters: vec![], base, vertex: v }
    }

    /// Grades a valid word with `b_0 = base`.
    pub fn new(alg: &GentleAlgebra, letters: Vec<Letter>, base: i32) -> Result<GradedString, WordError> {
        validate_string(alg, &letters).map_err(WordError::Invalid)?;
        let vertex = letters.first().map(|l| l.source(alg)).unwrap_or(0);
        Ok(GradedString { letters, base, vertex })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The grading `(b_0, ..., b_n)`.
    pub fn grading(&self) -> Vec<i32> {
        let mut g = vec![self.base];
        for l in &self.letters {
            g.push(g.last().unwrap() + l.step());
        }
        g
    }

    /// Node vertices `c_0, ..., c_n`.
    pub fn nodes(&self, alg: &GentleAlgebra) -> Vec<Vertex> {
        let mut out = vec![self.vertex];
        for l in &self.letters {
            out.push(l.target(alg));
        }
        out
    }

    pub fn shifted(&self, k: i32) -> GradedString {
        GradedString { base: self.base + k, ..self.clone() }
    }

    /// The same string read backwards, with the grading transported.
    pub fn inverse(&self, alg: &GentleAlgebra) -> GradedString {
        if self.letters.is_empty() {
            return self.clone();
        }
        let g = self.grading();
        let letters: Vec<Letter> = self.letters.iter().rev().map(Letter::inverted).collect();
        let vertex = letters[0].source(alg);
        GradedString { letters, base: *g.last().unwrap(), vertex }
    }

    pub fn min_degree(&self) -> i32 {
        *self.grading().iter().min().unwrap()
    }

    /// Representative of the class under inversion and global shift:
    /// lexicographically least orientation, with `b_0 = 0`.
    pub fn canonical(&self, alg: &GentleAlgebra) -> GradedString {
        let inv = self.inverse(alg);
        let mut best = if inv.letters < self.letters { inv } else { self.clone() };
        best.base = 0;
        best
    }

    /// Shift that carries the canonical representative onto `self`, paired
    /// with whether the canonical orientation is the inverse of `self`.
    pub fn class_alignment(&self, alg: &GentleAlgebra) -> (i32, bool) {
        let inv = self.inverse(alg);
        if inv.letters < self.letters {
            (inv.base, true)
        } else {
            (self.base, false)
        }
    }

    pub fn literal(&self, alg: &GentleAlgebra) -> String {
        let mut s = if self.letters.is_empty() {
            // `e` may name an arrow, in which case stalks print as `id@V`
            let tag = if alg.arrow_by_name("e").is_some() { "id" } else { "e" };
            format!("{}@{}", tag, alg.vertex_name(self.vertex))
        } else {
            self.letters.iter().map(|l| l.literal(alg)).collect::<Vec<_>>().join(" ")
        };
        if self.base != 0 {
            s.push_str(&format!(" @{}", self.base));
        }
        s
    }
}

impl GradedBand {
    /// Builds a valid degree-zero band.
    pub fn new(
        alg: &GentleAlgebra,
        letters: Vec<Letter>,
        base: i32,
        lambda: u32,
        dim: u32,
    ) -> Result<GradedBand, WordError> {
        if lambda == 0 {
            return Err(WordError::ZeroScalar);
        }
        let d = band_degree(&letters);
        if d != 0 {
            return Err(WordError::Ungraded(d));
        }
        validate_band(alg, &letters).map_err(WordError::Invalid)?;
        Ok(GradedBand { letters, base, lambda, dim: dim.max(1) })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Grading `(b_0, ..., b_{n-1})`; closing up returns to `b_0`.
    pub fn grading(&self) -> Vec<i32> {
        let mut g = vec![self.base];
        for l in &self.letters[..self.letters.len().saturating_sub(1)] {
            g.push(g.last().unwrap() + l.step());
        }
        g
    }

    pub fn nodes(&self, alg: &GentleAlgebra) -> Vec<Vertex> {
        self.letters.iter().map(|l| l.source(alg)).collect()
    }

    pub fn normalize(&self) -> GradedBand {
        GradedBand { dim: 1, ..self.clone() }
    }

    pub fn shifted(&self, k: i32) -> GradedBand {
        GradedBand { base: self.base + k, ..self.clone() }
    }

    fn rotations(&self) -> Vec<(Vec<Letter>, i32, bool)> {
        let n = self.letters.len();
        let g = self.grading();
        let mut out = Vec::new();
        for (r, &deg) in g.iter().enumerate() {
            let rot: Vec<Letter> = (0..n).map(|i| self.letters[(r + i) % n].clone()).collect();
            out.push((rot, deg, false));
        }
        // inverse word: letters reversed and flipped; node i of the inverse is node n-i
        let inv: Vec<Letter> = self.letters.iter().rev().map(Letter::inverted).collect();
        for r in 0..n {
            let rot: Vec<Letter> = (0..n).map(|i| inv[(r + i) % n].clone()).collect();
            let node = (n - r) % n;
            out.push((rot, g[node], true));
        }
        out
    }

    /// Representative under rotation and inversion with `b_0 = 0`.
    pub fn canonical(&self, f: crate::field::Field) -> GradedBand {
        let (letters, _, inverted) = self
            .rotations()
            .into_iter()
            .min_by(|a, b| a.0.cmp(&b.0).then(a.2.cmp(&b.2)))
            .unwrap();
        // The scalar on a direct letter equals its inverse on an inverse
        // letter; inversion of the word inverts this normalized scalar.
        let mut mu = if self.letters[0].inverse { f.inv(self.lambda) } else { self.lambda };
        if inverted {
            mu = f.inv(mu);
        }
        let lambda = if letters[0].inverse { f.inv(mu) } else { mu };
        GradedBand { letters, base: 0, lambda, dim: self.dim }
    }

    /// Shift carrying the canonical representative's grading onto `self`.
    pub fn class_alignment(&self) -> i32 {
        self.rotations()
            .into_iter()
            .min_by(|a, b| a.0.cmp(&b.0).then(a.2.cmp(&b.2)))
            .unwrap()
            .1
    }

    pub fn literal(&self, alg: &GentleAlgebra) -> String {
        let mut s = format!("[{}", self.letters.iter().map(|l| l.literal(alg)).collect::<Vec<_>>().join(" "));
        if self.lambda != 1 {
            s.push_str(&format!(";lambda={}", self.lambda));
        }
        if self.dim != 1 {
            s.push_str(&format!(";dim={}", self.dim));
        }
        s.push(']');
        if self.base != 0 {
            s.push_str(&format!(" @{}", self.base));
        }
        s
    }
}

/// True iff the two strings lie in the same orbit under inversion and shift.
pub fn string_equiv(alg: &GentleAlgebra, s: &GradedString, t: &GradedString) -> bool {
    s.canonical(alg) == t.canonical(alg)
}

/// True iff the two bands lie in the same orbit under rotation, inversion and shift.
pub fn band_equiv(f: crate::field::Field, b: &GradedBand, c: &GradedBand) -> bool {
    b.canonical(f) == c.canonical(f)
}

impl Word {
    pub fn literal(&self, alg: &GentleAlgebra) -> String {
        match self {
            Word::String(s) => s.literal(alg),
            Word::Band(b) => b.literal(alg),
        }
    }

    pub fn as_string(&self) -> Option<&GradedString> {
        match self {
            Word::String(s) => Some(s),
            Word::Band(_) => None,
        }
    }
}

fn parse_letters(alg: &GentleAlgebra, body: &str, offset: usize) -> Result<Vec<Letter>, WordError> {
    let mut out = Vec::new();
    let mut col = offset;
    for tok in body.split(' ') {
        if tok.is_empty() {
            col += 1;
            continue;
        }
        let (core, inverse) = match tok.strip_suffix("^-") {
            Some(c) => (c, true),
            None => (tok, false),
        };
        let mut arrows = Vec::new();
        for name in core.split('.') {
            let a = alg.arrow_by_name(name).ok_or(WordError::Syntax {
                col: col + 1,
                msg: format!("unknown arrow `{name}`"),
            })?;
            if let Some(&prev) = arrows.last() {
                if alg.arrow(prev).target != alg.arrow(a).source {
                    return Err(WordError::Syntax {
                        col: col + 1,
                        msg: format!("`{core}` is not a path"),
                    });
                }
            }
            arrows.push(a);
        }
        out.push(Letter { arrows, inverse });
        col += tok.len() + 1;
    }
    Ok(out)
}

fn split_base(t: &str) -> Result<(&str, i32), WordError> {
    match t.rfind('@') {
        Some(idx) => {
            let tail = t[idx + 1..].trim();
            let b = tail
                .parse::<i32>()
                .map_err(|_| WordError::Syntax { col: idx + 2, msg: format!("bad grading `{tail}`") })?;
            Ok((t[..idx].trim_end(), b))
        }
        None => Ok((t, 0)),
    }
}

/// Parses a string or band literal such as `d c^-`, `a.b^- @1`, `e@2`,
/// `e@2@-1` or `[a b^- c d^-;lambda=1;dim=2]`.
pub fn parse_word(alg: &GentleAlgebra, text: &str) -> Result<Word, WordError> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix('[') {
        let close = rest.find(']').ok_or(WordError::Syntax { col: t.len(), msg: "missing `]`".into() })?;
        let inner = &rest[..close];
        let after = rest[close + 1..].trim();
        let mut parts = inner.split(';');
        let body = parts.next().unwrap_or("");
        let mut lambda = 1u32;
        let mut dim = 1u32;
        let mut opts: Vec<&str> = parts.collect();
        let mut base_text = after;
        if let Some(stripped) = after.strip_prefix(';') {
            let (o, b) = match stripped.find('@') {
                Some(i) => (&stripped[..i], &stripped[i..]),
                None => (stripped, ""),
            };
            opts.extend(o.split(';'));
            base_text = b;
        }
        for o in opts {
            let o = o.trim();
            if o.is_empty() {
                continue;
            }
            let (k, v) = o.split_once('=').ok_or(WordError::Syntax { col: 1, msg: format!("bad option `{o}`") })?;
            let v: u32 = v.trim().parse().map_err(|_| WordError::Syntax { col: 1, msg: format!("bad value in `{o}`") })?;
            match k.trim() {
                "lambda" => lambda = v,
                "dim" => dim = v,
                _ => return Err(WordError::Syntax { col: 1, msg: format!("unknown option `{k}`") }),
            }
        }
        let base = if base_text.is_empty() {
            0
        } else {
            base_text
                .trim()
                .strip_prefix('@')
                .and_then(|b| b.trim().parse().ok())
                .ok_or(WordError::Syntax { col: close + 2, msg: format!("bad grading `{base_text}`") })?
        };
        let letters = parse_letters(alg, body, 1)?;
        return GradedBand::new(alg, letters, base, lambda, dim).map(Word::Band);
    }
    // empty strings: e@V or e@V@b (id@V also accepted)
    for prefix in ["e@", "id@"] {
        if prefix == "e@" && alg.arrow_by_name("e").is_some() {
            continue;
        }
        if let Some(rest) = t.strip_prefix(prefix) {
            let (vname, base) = match rest.split_once('@') {
                Some((v, b)) => (
                    v.trim(),
                    b.trim().parse::<i32>().map_err(|_| WordError::Syntax { col: t.len(), msg: format!("bad grading `{b}`") })?,
                ),
                None => (rest.trim(), 0),
            };
            let v = alg.vertex_by_name(vname).ok_or(WordError::Syntax {
                col: prefix.len() + 1,
                msg: format!("unknown vertex `{vname}`"),
            })?;
            return Ok(Word::String(GradedString::empty(v, base)));
        }
    }
    let (body, base) = split_base(t)?;
    if body.is_empty() {
        return Err(WordError::Syntax { col: 1, msg: "empty literal; use e@V for a stalk".into() });
    }
    let letters = parse_letters(alg, body, 0)?;
    GradedString::new(alg, letters, base).map(Word::String)
}

/// Parses a literal that must denote a string.
pub fn parse_string(alg: &GentleAlgebra, text: &str) -> Result<GradedString, WordError> {
    match parse_word(alg, text)? {
        Word::String(s) => Ok(s),
        Word::Band(_) => Err(WordError::Syntax { col: 1, msg: "expected a string, found a band".into() }),
    }
}

/// Every permitted letter (both directions) leaving vertex `x` in word order.
pub fn letters_from(alg: &GentleAlgebra, x: Vertex) -> Vec<Letter> {
    let mut out = Vec::new();
    for p in alg.paths() {
        if p.is_trivial() {
            continue;
        }
        if p.start == x {
            out.push(Letter { arrows: p.arrows.clone(), inverse: false });
        }
        if p.end == x {
            out.push(Letter { arrows: p.arrows.clone(), inverse: true });
        }
    }
    out.sort();
    out
}

/// Letters that may follow `last` in a homotopy string.
pub fn continuations(alg: &GentleAlgebra, last: &Letter) -> Vec<Letter> {
    letters_from(alg, last.target(alg))
        .into_iter()
        .filter(|l| junction_ok(alg, last, l).is_ok())
        .collect()
}

/// All valid letter sequences with between 1 and `max_letters` letters.
pub fn enumerate_words(alg: &GentleAlgebra, max_letters: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    if max_letters == 0 {
        return out;
    }
    let mut firsts = Vec::new();
    for v in 0..alg.num_vertices() {
        firsts.extend(letters_from(alg, v));
    }
    firsts.sort();
    firsts.dedup();
    let mut stack: Vec<Vec<Letter>> = firsts.into_iter().map(|l| vec![l]).collect();
    while let Some(w) = stack.pop() {
        if w.len() < max_letters {
            for l in continuations(alg, w.last().unwrap()) {
                let mut x = w.clone();
                x.push(l);
                stack.push(x);
            }
        }
        out.push(w);
    }
    out.sort();
    out
}

/// String classes (canonical representatives with `b_0 = 0`) with at most
/// `max_letters` letters, including the stalks `e_v`.
pub fn enumerate_strings(alg: &GentleAlgebra, max_letters: usize) -> Vec<GradedString> {
    let mut set = BTreeSet::new();
    for v in 0..alg.num_vertices() {
        set.insert(GradedString::empty(v, 0));
    }
    for w in enumerate_words(alg, max_letters) {
        let vertex = w[0].source(alg);
        let s = GradedString { letters: w, base: 0, vertex };
        set.insert(s.canonical(alg));
    }
    let mut v: Vec<GradedString> = set.into_iter().collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v
}

/// Band classes (dimension 1, scalar 1) with at most `max_letters` letters.
pub fn enumerate_bands(alg: &GentleAlgebra, f: crate::field::Field, max_letters: usize) -> Vec<GradedBand> {
    let mut set = BTreeSet::new();
    for w in enumerate_words(alg, max_letters) {
        if w.len() < 2 || band_degree(&w) != 0 {
            continue;
        }
        if validate_band(alg, &w).is_ok() {
            let b = GradedBand { letters: w, base: 0, lambda: 1, dim: 1 };
            set.insert(b.canonical(f));
        }
    }
    let mut v: Vec<GradedBand> = set.into_iter().collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v
}
