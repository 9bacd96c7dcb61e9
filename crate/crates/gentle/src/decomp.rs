//! Exact isomorphism, indecomposability and Krull-Schmidt decomposition for
//! minimal complexes.
//!
//! Every chain map between minimal complexes has a "top": the coefficients
//! of trivial paths, grouped into blocks by degree and vertex. Maps with zero
//! top form a nilpotent ideal, so units, idempotents and summands can all be
//! read off the tops.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{word_to_complex, ProjComplex};
use crate::field::Field;
use crate::hom::{hom_basis, ChainMap};
use crate::linalg::{Matrix, Span};
use crate::quiver::{GentleAlgebra, Vertex};
use crate::strings::{junction_ok, letters_from, GradedBand, GradedString, Letter, Word};

/// Default cap on the dimension of a top space searched exhaustively.
pub const DEFAULT_TOP_BOUND: usize = 12;

/// Outcome of an exact test that may give up on oversized search spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision<T> {
    Yes(T),
    No,
    Undecided(String),
}

impl<T> Decision<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

type Blocks = BTreeMap<(i32, Vertex), Matrix>;

fn positions(x: &ProjComplex, i: i32, v: Vertex) -> Vec<usize> {
    x.term(i).iter().enumerate().filter(|(_, &w)| w == v).map(|(k, _)| k).collect()
}

fn block_keys(x: &ProjComplex) -> BTreeSet<(i32, Vertex)> {
    x.terms().iter().flat_map(|(&i, vs)| vs.iter().map(move |&v| (i, v))).collect()
}

/// Top blocks of a map `m : X -> Y`, keyed by the keys of `Y`.
fn tops(alg: &GentleAlgebra, m: &ChainMap) -> Blocks {
    let mut out = Blocks::new();
    for (i, v) in block_keys(&m.target).union(&block_keys(&m.source)) {
        let rows = positions(&m.target, *i, *v);
        let cols = positions(&m.source, *i, *v);
        let mut b = Matrix::zero(rows.len(), cols.len());
        if let Some(c) = m.comps.get(i) {
            for (a, &r) in rows.iter().enumerate() {
                for (e, &k) in cols.iter().enumerate() {
                    b.set(a, e, c.get(r, k).top(alg));
                }
            }
        }
        out.insert((*i, *v), b);
    }
    out
}

fn flatten(b: &Blocks) -> Vec<u32> {
    b.values().flat_map(|m| m.data.iter().copied()).collect()
}

fn combine(f: Field, basis: &[Blocks], coeffs: &[u32]) -> Blocks {
    let mut out = basis[0].clone();
    for m in out.values_mut() {
        *m = Matrix::zero(m.rows, m.cols);
    }
    for (b, &c) in basis.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (k, m) in b {
            let o = out.get_mut(k).unwrap();
            for (x, &y) in o.data.iter_mut().zip(&m.data) {
                *x = f.add(*x, f.mul(y, c));
            }
        }
    }
    out
}

/// Chain maps from a basis whose tops are linearly independent and span the
/// space of all tops.
fn top_basis(alg: &GentleAlgebra, f: Field, maps: Vec<ChainMap>) -> (Vec<ChainMap>, Vec<Blocks>) {
    let mut keep = Vec::new();
    let mut blocks = Vec::new();
    let mut span: Option<Span> = None;
    for m in maps {
        let t = tops(alg, &m);
        let v = flatten(&t);
        let s = span.get_or_insert_with(|| Span::new(v.len()));
        if s.insert(f, v) {
            keep.push(m);
            blocks.push(t);
        }
    }
    (keep, blocks)
}

/// Iterates over all coefficient vectors in `F_p^n`, or none when the space
/// exceeds `bound` dimensions.
fn all_vectors(f: Field, n: usize) -> impl Iterator<Item = Vec<u32>> {
    let p = f.order() as u64;
    let total = p.pow(n as u32);
    (0..total).map(move |mut k| {
        let mut v = vec![0u32; n];
        for x in v.iter_mut() {
            *x = (k % p) as u32;
            k /= p;
        }
        v
    })
}

fn too_big(f: Field, n: usize, bound: usize) -> bool {
    (f.order() as f64).powi(n as i32) > 2f64.powi(bound as i32)
}

fn linear_map(f: Field, maps: &[ChainMap], coeffs: &[u32]) -> ChainMap {
    let mut out = ChainMap::zero(&maps[0].source, &maps[0].target);
    for (m, &c) in maps.iter().zip(coeffs) {
        if c != 0 {
            out = out.add(f, &m.scale(f, c));
        }
    }
    out
}

/// Tests `X ≅ Y` in the homotopy category (both minimal); a witness is an
/// isomorphism `X -> Y`.
pub fn isomorphism(
    alg: &GentleAlgebra,
    f: Field,
    x: &ProjComplex,
    y: &ProjComplex,
    bound: usize,
) -> Decision<ChainMap> {
    if x.support() != y.support() {
        return Decision::No;
    }
    if x.is_zero() {
        return Decision::Yes(ChainMap::zero(x, y));
    }
    let (maps, blocks) = top_basis(alg, f, hom_basis(alg, f, x, y));
    if maps.is_empty() {
        return Decision::No;
    }
    // a single basis map already invertible is the common case
    for (m, b) in maps.iter().zip(&blocks) {
        if b.values().all(|t| t.is_invertible(f)) {
            return Decision::Yes(m.clone());
        }
    }
    if too_big(f, maps.len(), bound) {
        return Decision::Undecided(format!("top space of dimension {}", maps.len()));
    }
    for c in all_vectors(f, maps.len()) {
        let b = combine(f, &blocks, &c);
        if b.values().all(|t| t.is_invertible(f)) {
            return Decision::Yes(linear_map(f, &maps, &c));
        }
    }
    Decision::No
}

/// Looks for a nontrivial idempotent endomorphism; `Yes(e)` means `X` is
/// indecomposable, and `No` comes with no witness, see [`splitting_idempotent`].
pub fn is_indecomposable(alg: &GentleAlgebra, f: Field, x: &ProjComplex, bound: usize) -> Decision<()> {
    match splitting_idempotent(alg, f, x, bound) {
        Decision::Yes(_) => Decision::No,
        Decision::No => {
            if x.is_zero() {
                Decision::No
            } else {
                Decision::Yes(())
            }
        }
        Decision::Undecided(s) => Decision::Undecided(s),
    }
}

/// A chain-map idempotent `e` of `X` other than 0 and 1, when one exists.
pub fn splitting_idempotent(alg: &GentleAlgebra, f: Field, x: &ProjComplex, bound: usize) -> Decision<ChainMap> {
    if x.is_zero() {
        return Decision::No;
    }
    let (maps, blocks) = top_basis(alg, f, hom_basis(alg, f, x, x));
    if too_big(f, maps.len(), bound) {
        return Decision::Undecided(format!("endomorphism top of dimension {}", maps.len()));
    }
    for c in all_vectors(f, maps.len()) {
        let b = combine(f, &blocks, &c);
        let zero = b.values().all(Matrix::is_zero);
        let one = b.values().all(|t| *t == Matrix::identity(t.rows));
        if zero || one {
            continue;
        }
        if b.values().all(|t| t.mul(f, t) == *t) {
            let e = lift_idempotent(alg, f, linear_map(f, &maps, &c));
            return Decision::Yes(e);
        }
    }
    Decision::No
}

/// Lifts an endomorphism whose top is idempotent to an idempotent chain map.
pub fn lift_idempotent(alg: &GentleAlgebra, f: Field, mut e: ChainMap) -> ChainMap {
    loop {
        let e2 = e.then(alg, f, &e);
        if e2 == e || (e2.add(f, &e.scale(f, f.neg(1)))).is_zero() {
            return e;
        }
        let e3 = e2.then(alg, f, &e);
        e = e2.scale(f, f.from_i64(3)).add(f, &e3.scale(f, f.from_i64(-2)));
    }
}

/// The scalar `lambda` with `t - lambda` nilpotent, if any.
fn eigenvalue(f: Field, t: &Matrix) -> Option<u32> {
    (0..f.order()).find(|&l| {
        let mut m = t.clone();
        for k in 0..m.rows {
            let d = m.get(k, k);
            m.set(k, k, f.sub(d, l));
        }
        let mut p = m.clone();
        for _ in 1..m.rows {
            p = p.mul(f, &m);
        }
        p.is_zero()
    })
}

/// Multiplicity of the indecomposable `S` as a summand of `X`: the rank of
/// the composition pairing `Hom(S,X) x Hom(X,S) -> End(S)/rad`.
pub fn summand_multiplicity(alg: &GentleAlgebra, f: Field, s: &ProjComplex, x: &ProjComplex) -> Decision<usize> {
    let into = hom_basis(alg, f, s, x);
    if into.is_empty() {
        return Decision::Yes(0);
    }
    let back = hom_basis(alg, f, x, s);
    if back.is_empty() {
        return Decision::Yes(0);
    }
    let mut m = Matrix::zero(back.len(), into.len());
    for (j, g) in back.iter().enumerate() {
        for (i, h) in into.iter().enumerate() {
            let gh = h.then(alg, f, g);
            let t = tops(alg, &gh);
            let first = t.values().next().expect("nonzero complex");
            match eigenvalue(f, first) {
                Some(l) => m.set(j, i, l),
                None => return Decision::Undecided("residue field larger than the prime field".into()),
            }
        }
    }
    Decision::Yes(m.rank(f))
}

type Support = BTreeMap<(i32, Vertex), usize>;

fn support_of(x: &ProjComplex) -> Support {
    let mut s = Support::new();
    for k in x.support() {
        *s.entry(k).or_insert(0) += 1;
    }
    s
}

fn word_key(alg: &GentleAlgebra, f: Field, w: &Word) -> (String, i32) {
    match w {
        Word::String(s) => (s.canonical(alg).literal(alg), s.min_degree()),
        Word::Band(b) => (b.canonical(f).literal(alg), *b.grading().iter().min().unwrap()),
    }
}

/// Strings and one-dimensional bands (all scalars) whose summands fit in the
/// support of `x`, one per isomorphism class.
pub fn candidates(alg: &GentleAlgebra, f: Field, x: &ProjComplex) -> Vec<Word> {
    let supp = support_of(x);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |w: Word, out: &mut Vec<Word>| {
        if seen.insert(word_key(alg, f, &w)) {
            out.push(w);
        }
    };
    for &(d, v) in supp.keys() {
        let mut used = supp.clone();
        *used.get_mut(&(d, v)).unwrap() -= 1;
        push(Word::String(GradedString::empty(v, d)), &mut out);
        let mut word = Vec::new();
        grow(alg, f, &mut used, (d, v), (d, v), &mut word, &mut push, &mut out);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn grow(
    alg: &GentleAlgebra,
    f: Field,
    avail: &mut Support,
    start: (i32, Vertex),
    at: (i32, Vertex),
    word: &mut Vec<Letter>,
    push: &mut impl FnMut(Word, &mut Vec<Word>),
    out: &mut Vec<Word>,
) {
    let next: Vec<Letter> = match word.last() {
        None => letters_from(alg, at.1),
        Some(l) => letters_from(alg, at.1).into_iter().filter(|m| junction_ok(alg, l, m).is_ok()).collect(),
    };
    for l in next {
        let node = (at.0 + l.step(), l.target(alg));
        word.push(l);
        // closing the word into a band at the start node
        if node == start && word.len() >= 2 && junction_ok(alg, word.last().unwrap(), &word[0]).is_ok() {
            for lambda in f.units() {
                if let Ok(b) = GradedBand::new(alg, word.clone(), start.0, lambda, 1) {
                    push(Word::Band(b), out);
                }
            }
        }
        if let Some(c) = avail.get_mut(&node).filter(|c| **c > 0) {
            *c -= 1;
            let s = GradedString { letters: word.clone(), base: start.0, vertex: start.1 };
            push(Word::String(s), out);
            grow(alg, f, avail, start, node, word, push, out);
            *avail.get_mut(&node).unwrap() += 1;
        }
        word.pop();
    }
}

/// Krull-Schmidt decomposition of a minimal complex into string and band
/// objects with multiplicities. Bands of dimension above one are not
/// searched for; their presence makes the result undecided.
pub fn decompose(alg: &GentleAlgebra, f: Field, x: &ProjComplex) -> Decision<Vec<(Word, usize)>> {
    let target = support_of(x);
    let mut found: Support = Support::new();
    let mut out = Vec::new();
    for w in candidates(alg, f, x) {
        let s = word_to_complex(alg, f, &w);
        match summand_multiplicity(alg, f, &s, x) {
            Decision::Yes(0) => {}
            Decision::Yes(m) => {
                for (k, c) in support_of(&s) {
                    *found.entry(k).or_insert(0) += c * m;
                }
                out.push((w, m));
            }
            Decision::No => {}
            Decision::Undecided(r) => return Decision::Undecided(r),
        }
    }
    if found == target {
        Decision::Yes(out)
    } else {
        Decision::Undecided("summands not exhausted by strings and one-dimensional bands".into())
    }
}
