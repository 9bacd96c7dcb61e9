//! Strings as walks on the thread model.
//!
//! Marked points are the maximal permitted threads. A letter is a turn
//! along one thread from the position of one node to the position of the
//! next, and a string end sits at the thread occurrence of its end node not
//! used by the end letter. Gluing two ends at the same marked point inserts
//! the turn between them, or cancels backtracking nodes when both ends sit
//! at the same position; every glue is certified by a mapping cone.

use serde::Serialize;

use crate::complex::ProjComplex;
use crate::engine::Engine;
use crate::hom::ChainMap;
use crate::quiver::{GentleAlgebra, Occurrence, Vertex};
use crate::strings::{GradedString, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum End {
    Left,
    Right,
}

impl End {
    pub fn other(self) -> End {
        match self {
            End::Left => End::Right,
            End::Right => End::Left,
        }
    }
}

/// A turn along thread `thread` from position `from` to position `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Turn {
    pub thread: usize,
    pub from: usize,
    pub to: usize,
}

pub fn turn_of(alg: &GentleAlgebra, l: &Letter) -> Turn {
    let (thread, start) = alg.arrow_position(l.arrows[0]);
    let end = start + l.arrows.len();
    if l.inverse {
        Turn { thread, from: end, to: start }
    } else {
        Turn { thread, from: start, to: end }
    }
}

pub fn letter_of(alg: &GentleAlgebra, t: Turn) -> Letter {
    let (lo, hi) = if t.from < t.to { (t.from, t.to) } else { (t.to, t.from) };
    Letter { arrows: alg.threads()[t.thread].arrows[lo..hi].to_vec(), inverse: t.from > t.to }
}

/// An oriented graded string together with its end occurrences.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    pub string: GradedString,
    pub left: Occurrence,
    pub right: Occurrence,
}

impl Walk {
    pub fn new(alg: &GentleAlgebra, s: &GradedString) -> Walk {
        let (left, right) = end_occurrences(alg, s);
        Walk { string: s.clone(), left, right }
    }

    /// `s` oriented so that end `e` of `s` becomes the right end.
    pub fn ending_at(alg: &GentleAlgebra, s: &GradedString, e: End) -> Walk {
        let w = Walk::new(alg, s);
        match e {
            End::Right => w,
            End::Left => w.reversed(alg),
        }
    }

    pub fn reversed(&self, alg: &GentleAlgebra) -> Walk {
        Walk { string: self.string.inverse(alg), left: self.right, right: self.left }
    }

    pub fn end(&self, e: End) -> Occurrence {
        match e {
            End::Left => self.left,
            End::Right => self.right,
        }
    }

    pub fn is_closed(&self) -> bool {
        self.left.0 == self.right.0
    }
}

/// Left and right end occurrences; for `e_v` the two occurrences at `v` in
/// their stored order.
pub fn end_occurrences(alg: &GentleAlgebra, s: &GradedString) -> (Occurrence, Occurrence) {
    if s.letters.is_empty() {
        let [a, b] = alg.occurrences(s.vertex);
        return (a, b);
    }
    let first = turn_of(alg, &s.letters[0]);
    let last = turn_of(alg, s.letters.last().unwrap());
    let nodes = s.nodes(alg);
    let left = alg.other_occurrence(nodes[0], (first.thread, first.from));
    let right = alg.other_occurrence(*nodes.last().unwrap(), (last.thread, last.to));
    (left, right)
}

/// Marked points (threads) of the two ends.
pub fn end_points(alg: &GentleAlgebra, s: &GradedString) -> (usize, usize) {
    let (l, r) = end_occurrences(alg, s);
    (l.0, r.0)
}

fn vertex_at(alg: &GentleAlgebra, o: Occurrence) -> Vertex {
    alg.threads()[o.0].vertices[o.1]
}

/// Combinatorial joins of the right end of `s` with the left end of `t`,
/// each with the shift applied to `t`. Empty when the ends lie on different
/// threads or everything cancels.
pub fn join(alg: &GentleAlgebra, s: &Walk, t: &Walk) -> Vec<(Walk, i32)> {
    if s.right.0 != t.left.0 {
        return Vec::new();
    }
    let sg = s.string.grading();
    let b_n = *sg.last().unwrap();
    let (thread, i, j) = (s.right.0, s.right.1, t.left.1);
    let mut out = Vec::new();
    if i != j {
        let l = letter_of(alg, Turn { thread, from: i, to: j });
        let shift = b_n + l.step() - t.string.base;
        let mut letters = s.string.letters.clone();
        letters.push(l);
        letters.extend(t.string.letters.iter().cloned());
        if let Some(w) = make(alg, letters, s.string.base, vertex_at(alg, s.left), s, t) {
            out.push((w, shift));
        }
        return out;
    }
    let tn = t.string.nodes(alg);
    for delta in [-1, 1] {
        let shift = b_n + delta - t.string.base;
        let tg: Vec<i32> = t.string.grading().iter().map(|d| d + shift).collect();
        let mut a = s.string.letters.clone();
        let mut b: std::collections::VecDeque<Letter> = t.string.letters.iter().cloned().collect();
        let mut popped = 0usize;
        // (letters, base, first vertex, whether the last node comes from t)
        let result = loop {
            match (a.last().cloned(), b.front().cloned()) {
                (None, None) => break None,
                (None, Some(_)) => {
                    b.pop_front();
                    popped += 1;
                    break Some((b.into_iter().collect::<Vec<_>>(), tg[popped], tn[popped], false));
                }
                (Some(_), None) => {
                    a.pop();
                    break Some((a, s.string.base, s.string.vertex, false));
                }
                (Some(x), Some(y)) => {
                    let (tx, ty) = (turn_of(alg, &x), turn_of(alg, &y));
                    debug_assert_eq!((tx.thread, tx.to), (ty.thread, ty.from));
                    a.pop();
                    b.pop_front();
                    popped += 1;
                    if tx.from != ty.to {
                        a.push(letter_of(alg, Turn { thread: tx.thread, from: tx.from, to: ty.to }));
                        a.extend(b);
                        break Some((a, s.string.base, s.string.vertex, true));
                    }
                }
            }
        };
        let Some((letters, base, vertex, check_tail)) = result else { continue };
        if let Some(w) = make(alg, letters, base, vertex, s, t) {
            if !check_tail || w.string.grading().last() == tg.last() {
                out.push((w, shift));
            }
        }
    }
    out
}

fn make(alg: &GentleAlgebra, letters: Vec<Letter>, base: i32, vertex: Vertex, s: &Walk, t: &Walk) -> Option<Walk> {
    let string = if letters.is_empty() {
        GradedString::empty(vertex, base)
    } else {
        GradedString::new(alg, letters, base).ok()?
    };
    // the free ends keep their marked points but may move along the thread
    let (want_l, want_r) = (s.left.0, t.right.0);
    let (left, right) = if string.letters.is_empty() {
        let [o1, o2] = alg.occurrences(string.vertex);
        if (o1.0, o2.0) == (want_l, want_r) {
            (o1, o2)
        } else {
            (o2, o1)
        }
    } else {
        end_occurrences(alg, &string)
    };
    let ok = (left.0, right.0) == (want_l, want_r);
    debug_assert!(ok, "join changed the free ends");
    let w = Walk { string, left, right };
    ok.then_some(w)
}

/// A certified glue: the joined walk and the morphism whose cone it is.
#[derive(Clone, Debug)]
pub struct Glue {
    pub walk: Walk,
    /// Shift applied to the second string.
    pub shift: i32,
    /// True when the morphism goes from (a shift of) the first string to the second.
    pub forward: bool,
    pub morphism: ChainMap,
}

/// Certifies a joined walk: a morphism `s[-1] -> t'` or `t'[-1] -> s`
/// whose minimal cone is isomorphic to the join.
pub fn certify(e: &Engine, s: &GradedString, t_aligned: &GradedString, z: &GradedString) -> Option<(bool, ChainMap)> {
    let sc = e.string_complex(s);
    let tc = e.string_complex(t_aligned);
    let zc = e.string_complex(z);
    let sup = |x: &ProjComplex| x.support();
    let mut want = sup(&sc);
    want.extend(sup(&tc));
    want.sort();
    let zs = sup(&zc);
    // cancelled nodes leave the cone's support, the others persist
    if !is_submultiset(&zs, &want) {
        return None;
    }
    for (forward, a, b) in [(true, sc.shift(e.f, -1), tc.clone()), (false, tc.shift(e.f, -1), sc.clone())] {
        for m in e.nonzero_elements(&e.hom_basis(&a, &b)) {
            let c = e.cone(&m);
            if c.support() == zs && e.isomorphic(&c, &zc).is_yes() {
                return Some((forward, m));
            }
        }
    }
    None
}

fn is_submultiset(a: &[(i32, Vertex)], b: &[(i32, Vertex)]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}

/// Certified glues of the right end of `s` with the left end of `t`.
pub fn glue_walks(e: &Engine, s: &Walk, t: &Walk) -> Vec<Glue> {
    let mut out = Vec::new();
    for (w, shift) in join(&e.alg, s, t) {
        let ta = t.string.shifted(shift);
        if let Some((forward, morphism)) = certify(e, &s.string, &ta, &w.string) {
            out.push(Glue { walk: w, shift, forward, morphism });
        }
    }
    out
}

/// Certified glues of end `se` of `s` with end `te` of `t`, oriented from
/// the free end of `s` to the free end of `t`.
pub fn glue(e: &Engine, s: &GradedString, se: End, t: &GradedString, te: End) -> Vec<Glue> {
    let sw = Walk::ending_at(&e.alg, s, se);
    let tw = Walk::ending_at(&e.alg, t, te.other());
    glue_walks(e, &sw, &tw)
}

/// Uncertified joins of end `se` of `s` with end `te` of `t`.
pub fn glue_raw(alg: &GentleAlgebra, s: &GradedString, se: End, t: &GradedString, te: End) -> Vec<GradedString> {
    let sw = Walk::ending_at(alg, s, se);
    let tw = Walk::ending_at(alg, t, te.other());
    join(alg, &sw, &tw).into_iter().map(|(w, _)| w.string).collect()
}
