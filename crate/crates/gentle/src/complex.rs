//! Bounded complexes of indecomposable projectives with path-linear
//! differentials. The differential lowers degree: `d_i : X^i -> X^{i-1}`.
//!
//! An entry in row `r`, column `c` of a matrix from `P_c`-summands to
//! `P_r`-summands is a combination of permitted paths from `r` to `c`.
//! Matrix products in path order are compositions of maps.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::field::Field;
use crate::quiver::{GentleAlgebra, PathId, Vertex};
use crate::strings::{GradedBand, GradedString, Word};

/// A combination of permitted paths: sorted `(path, coefficient)` pairs with
/// nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub Vec<(PathId, u32)>);

impl Elem {
    pub fn zero() -> Elem {
        Elem(Vec::new())
    }

    pub fn path(p: PathId) -> Elem {
        Elem(vec![(p, 1)])
    }

    pub fn scaled_path(p: PathId, c: u32) -> Elem {
        if c == 0 {
            Elem::zero()
        } else {
            Elem(vec![(p, c)])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, p: PathId) -> u32 {
        self.0.binary_search_by_key(&p, |x| x.0).map(|i| self.0[i].1).unwrap_or(0)
    }

    pub fn add(&self, f: Field, other: &Elem) -> Elem {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j == other.0.len() || (i < self.0.len() && self.0[i].0 < other.0[j].0) {
                out.push(self.0[i]);
                i += 1;
            } else if i == self.0.len() || other.0[j].0 < self.0[i].0 {
                out.push(other.0[j]);
                j += 1;
            } else {
                let c = f.add(self.0[i].1, other.0[j].1);
                if c != 0 {
                    out.push((self.0[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Elem(out)
    }

    pub fn add_assign(&mut self, f: Field, other: &Elem) {
        if !other.is_zero() {
            *self = self.add(f, other);
        }
    }

    pub fn scale(&self, f: Field, c: u32) -> Elem {
        if c == 0 {
            return Elem::zero();
        }
        Elem(self.0.iter().map(|&(p, x)| (p, f.mul(x, c))).collect())
    }

    pub fn neg(&self, f: Field) -> Elem {
        self.scale(f, f.neg(1))
    }

    /// Product "self then other".
    pub fn mul(&self, alg: &GentleAlgebra, f: Field, other: &Elem) -> Elem {
        if self.is_zero() || other.is_zero() {
            return Elem::zero();
        }
        let mut acc: BTreeMap<PathId, u32> = BTreeMap::new();
        for &(p, a) in &self.0 {
            for &(q, b) in &other.0 {
                if let Some(r) = alg.mul(p, q) {
                    let e = acc.entry(r).or_insert(0);
                    *e = f.add(*e, f.mul(a, b));
                }
            }
        }
        Elem(acc.into_iter().filter(|&(_, c)| c != 0).collect())
    }

    /// Coefficient of the trivial path (the "top" of a map `P_v -> P_v`).
    pub fn top(&self, alg: &GentleAlgebra) -> u32 {
        match self.0.first() {
            Some(&(p, c)) if alg.path(p).is_trivial() => c,
            _ => 0,
        }
    }

    /// Inverse of a unit of the local ring `e_v Λ e_v`.
    pub fn unit_inverse(&self, alg: &GentleAlgebra, f: Field) -> Elem {
        let lam = self.top(alg);
        assert!(lam != 0, "not a unit");
        let e = self.0[0].0;
        let li = f.inv(lam);
        // u = lam (1 + m) with m nilpotent; u^{-1} = li * sum (-m)^k
        let m = Elem(self.0[1..].to_vec()).scale(f, li);
        let negm = m.neg(f);
        let mut term = Elem::path(e);
        let mut sum = Elem::path(e);
        loop {
            term = term.mul(alg, f, &negm);
            if term.is_zero() {
                break;
            }
            sum = sum.add(f, &term);
        }
        sum.scale(f, li)
    }

    pub fn literal(&self, alg: &GentleAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.0
            .iter()
            .map(|&(p, c)| {
                if c == 1 {
                    alg.path_name(p)
                } else {
                    format!("{}*{}", c, alg.path_name(p))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A dense matrix of path combinations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Elem>,
}

impl PMat {
    pub fn zero(rows: usize, cols: usize) -> PMat {
        PMat { rows, cols, data: vec![Elem::zero(); rows * cols] }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Elem {
        &mut self.data[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Elem::is_zero)
    }

    pub fn mul(&self, alg: &GentleAlgebra, f: Field, other: &PMat) -> PMat {
        assert_eq!(self.cols, other.rows);
        let mut out = PMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let p = a.mul(alg, f, b);
                        out.get_mut(i, j).add_assign(f, &p);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, f: Field, other: &PMat) -> PMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(f, b)).collect(),
        }
    }

    pub fn scale(&self, f: Field, c: u32) -> PMat {
        PMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.scale(f, c)).collect() }
    }

    fn without(&self, row: Option<usize>, col: Option<usize>) -> PMat {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| Some(r) != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| Some(c) != col).collect();
        let mut out = PMat::zero(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                *out.get_mut(i, j) = self.get(r, c).clone();
            }
        }
        out
    }
}

/// A bounded complex of projectives `X^i = ⊕ P_v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjComplex {
    terms: BTreeMap<i32, Vec<Vertex>>,
    diff: BTreeMap<i32, PMat>,
}

impl ProjComplex {
    pub fn zero() -> ProjComplex {
        ProjComplex::default()
    }

    /// Builds a complex from its terms and nonzero differentials, dropping
    /// empty degrees and zero matrices.
    pub fn from_parts(terms: BTreeMap<i32, Vec<Vertex>>, diff: BTreeMap<i32, PMat>) -> ProjComplex {
        let terms: BTreeMap<i32, Vec<Vertex>> = terms.into_iter().filter(|(_, v)| !v.is_empty()).collect();
        let diff = diff
            .into_iter()
            .filter(|(i, m)| !m.is_zero() && terms.contains_key(i) && terms.contains_key(&(i - 1)))
            .collect();
        ProjComplex { terms, diff }
    }

    /// The stalk complex `P_v` in degree `deg`.
    pub fn stalk(v: Vertex, deg: i32) -> ProjComplex {
        let mut terms = BTreeMap::new();
        terms.insert(deg, vec![v]);
        ProjComplex { terms, diff: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<i32, Vec<Vertex>> {
        &self.terms
    }

    pub fn term(&self, i: i32) -> &[Vertex] {
        self.terms.get(&i).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// `d_i : X^i -> X^{i-1}`, zero matrix when absent.
    pub fn d(&self, i: i32) -> PMat {
        match self.diff.get(&i) {
            Some(m) => m.clone(),
            None => PMat::zero(self.term(i - 1).len(), self.term(i).len()),
        }
    }

    pub fn d_ref(&self, i: i32) -> Option<&PMat> {
        self.diff.get(&i)
    }

    pub fn degree_range(&self) -> Option<(i32, i32)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    /// Number of indecomposable projective summands over all degrees.
    pub fn rank(&self) -> usize {
        self.terms.values().map(|v| v.len()).sum()
    }

    /// Sorted multiset of `(degree, vertex)` summands.
    pub fn support(&self) -> Vec<(i32, Vertex)> {
        let mut out: Vec<(i32, Vertex)> =
            self.terms.iter().flat_map(|(&i, vs)| vs.iter().map(move |&v| (i, v))).collect();
        out.sort();
        out
    }

    /// Shift: degree `i` moves to `i + k`, differentials gain the sign `(-1)^k`.
    pub fn shift(&self, f: Field, k: i32) -> ProjComplex {
        let s = f.sign(k);
        ProjComplex {
            terms: self.terms.iter().map(|(&i, v)| (i + k, v.clone())).collect(),
            diff: self.diff.iter().map(|(&i, m)| (i + k, m.scale(f, s))).collect(),
        }
    }

    pub fn direct_sum(&self, other: &ProjComplex) -> ProjComplex {
        let mut terms = self.terms.clone();
        for (&i, v) in &other.terms {
            terms.entry(i).or_default().extend_from_slice(v);
        }
        let mut diff = BTreeMap::new();
        let degrees: Vec<i32> = terms.keys().copied().collect();
        for &i in &degrees {
            let (r1, c1) = (self.term(i - 1).len(), self.term(i).len());
            let (r2, c2) = (other.term(i - 1).len(), other.term(i).len());
            let mut m = PMat::zero(r1 + r2, c1 + c2);
            if let Some(a) = self.diff.get(&i) {
                for r in 0..r1 {
                    for c in 0..c1 {
                        *m.get_mut(r, c) = a.get(r, c).clone();
                    }
                }
            }
            if let Some(b) = other.diff.get(&i) {
                for r in 0..r2 {
                    for c in 0..c2 {
                        *m.get_mut(r1 + r, c1 + c) = b.get(r, c).clone();
                    }
                }
            }
            diff.insert(i, m);
        }
        ProjComplex::from_parts(terms, diff)
    }

    /// True when `d_{i-1} d_i = 0` for all `i`.
    pub fn is_complex(&self, alg: &GentleAlgebra, f: Field) -> bool {
        self.diff.iter().all(|(&i, m)| match self.diff.get(&(i - 1)) {
            Some(prev) => prev.mul(alg, f, m).is_zero(),
            None => true,
        })
    }

    /// True when no differential entry has an identity component.
    pub fn is_minimal(&self, alg: &GentleAlgebra) -> bool {
        self.diff.values().all(|m| m.data.iter().all(|e| e.top(alg) == 0))
    }

    /// Removes contractible summands `P --u--> P` by Gaussian elimination.
    pub fn minimalize(&self, alg: &GentleAlgebra, f: Field) -> ProjComplex {
        let mut x = self.clone();
        loop {
            let mut pivot = None;
            'search: for (&i, m) in &x.diff {
                for r in 0..m.rows {
                    for c in 0..m.cols {
                        if m.get(r, c).top(alg) != 0 {
                            pivot = Some((i, r, c));
                            break 'search;
                        }
                    }
                }
            }
            let Some((i, r, c)) = pivot else { break };
            let d = x.diff[&i].clone();
            let uinv = d.get(r, c).unit_inverse(alg, f);
            let mut nd = d.clone();
            for r2 in 0..d.rows {
                if r2 == r || d.get(r2, c).is_zero() {
                    continue;
                }
                let left = d.get(r2, c).mul(alg, f, &uinv);
                for c2 in 0..d.cols {
                    if c2 == c || d.get(r, c2).is_zero() {
                        continue;
                    }
                    let corr = left.mul(alg, f, d.get(r, c2)).neg(f);
                    nd.get_mut(r2, c2).add_assign(f, &corr);
                }
            }
            let mut terms = x.terms.clone();
            let mut diff = x.diff.clone();
            diff.insert(i, nd.without(Some(r), Some(c)));
            if let Some(m) = x.diff.get(&(i + 1)) {
                diff.insert(i + 1, m.without(Some(c), None));
            }
            if let Some(m) = x.diff.get(&(i - 1)) {
                diff.insert(i - 1, m.without(None, Some(r)));
            }
            terms.get_mut(&i).unwrap().remove(c);
            terms.get_mut(&(i - 1)).unwrap().remove(r);
            x = ProjComplex::from_parts(terms, diff);
        }
        x
    }

    /// Renders the complex in the dump format.
    pub fn dump(&self, alg: &GentleAlgebra) -> String {
        let mut out = String::new();
        for (i, vs) in &self.terms {
            let names: Vec<&str> = vs.iter().map(|&v| alg.vertex_name(v)).collect();
            out.push_str(&format!("degree {}: {}\n", i, names.join(" ")));
        }
        for (i, m) in &self.diff {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    let e = m.get(r, c);
                    if !e.is_zero() {
                        out.push_str(&format!("d {} {} {} = {}\n", i, r, c, e.literal(alg)));
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self, alg: &GentleAlgebra) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry {
            degree: i32,
            row: usize,
            col: usize,
            value: String,
        }
        let terms: BTreeMap<String, Vec<String>> = self
            .terms
            .iter()
            .map(|(i, vs)| (i.to_string(), vs.iter().map(|&v| alg.vertex_name(v).to_string()).collect()))
            .collect();
        let mut entries = Vec::new();
        for (&degree, m) in &self.diff {
            for row in 0..m.rows {
                for col in 0..m.cols {
                    let e = m.get(row, col);
                    if !e.is_zero() {
                        entries.push(Entry { degree, row, col, value: e.literal(alg) });
                    }
                }
            }
        }
        serde_json::json!({ "terms": terms, "differentials": entries })
    }
}

/// Places nodes with the given degrees into per-degree summand lists and
/// returns each node's position within its degree.
fn place(nodes: &[(i32, Vertex)], r: usize) -> (BTreeMap<i32, Vec<Vertex>>, Vec<usize>) {
    let mut terms: BTreeMap<i32, Vec<Vertex>> = BTreeMap::new();
    let mut pos = Vec::new();
    for &(d, v) in nodes {
        let t = terms.entry(d).or_default();
        pos.push(t.len());
        for _ in 0..r {
            t.push(v);
        }
    }
    (terms, pos)
}

/// The complex of a graded string: `X^i = ⊕_{b_l = i} P_{c_l}`.
pub fn string_to_complex(alg: &GentleAlgebra, f: Field, s: &GradedString) -> ProjComplex {
    let g = s.grading();
    let nodes: Vec<(i32, Vertex)> = g.iter().copied().zip(s.nodes(alg)).collect();
    let (terms, pos) = place(&nodes, 1);
    let mut diff: BTreeMap<i32, PMat> = BTreeMap::new();
    for (u, l) in s.letters.iter().enumerate() {
        let u = u + 1;
        let p = l.path_id(alg).expect("letters of a valid string are permitted paths");
        // direct: P_{c_u} -> P_{c_{u-1}}; inverse: P_{c_{u-1}} -> P_{c_u}
        let (from, to) = if l.inverse { (u - 1, u) } else { (u, u - 1) };
        let deg = g[from];
        let m = diff
            .entry(deg)
            .or_insert_with(|| PMat::zero(terms[&(deg - 1)].len(), terms[&deg].len()));
        m.get_mut(pos[to], pos[from]).add_assign(f, &Elem::path(p));
    }
    ProjComplex::from_parts(terms, diff)
}

/// A band of dimension above one passed where a one-dimensional band is required.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("band of dimension {0} given; normalize it to dimension 1 first")]
pub struct BandDimensionError(pub u32);

/// The complex of a one-dimensional graded band; the first letter carries `lambda`.
pub fn band_to_complex(alg: &GentleAlgebra, f: Field, b: &GradedBand) -> Result<ProjComplex, BandDimensionError> {
    if b.dim > 1 {
        return Err(BandDimensionError(b.dim));
    }
    Ok(band_complex(alg, f, b))
}

/// The complex of a string or a band of any dimension.
pub fn word_to_complex(alg: &GentleAlgebra, f: Field, w: &Word) -> ProjComplex {
    match w {
        Word::String(s) => string_to_complex(alg, f, s),
        Word::Band(b) => band_complex(alg, f, b),
    }
}

/// The complex of a graded band of dimension `r`: the first letter carries
/// the Jordan block `J_r(lambda)`, every other letter the identity.
pub fn band_complex(alg: &GentleAlgebra, f: Field, b: &GradedBand) -> ProjComplex {
    let n = b.letters.len();
    let r = b.dim.max(1) as usize;
    let g = b.grading();
    let nodes: Vec<(i32, Vertex)> = g.iter().copied().zip(b.nodes(alg)).collect();
    let (terms, pos) = place(&nodes, r);
    let mut diff: BTreeMap<i32, PMat> = BTreeMap::new();
    for (u0, l) in b.letters.iter().enumerate() {
        let prev = u0;
        let next = (u0 + 1) % n;
        let p = l.path_id(alg).expect("letters of a valid band are permitted paths");
        let (from, to) = if l.inverse { (prev, next) } else { (next, prev) };
        let deg = g[from];
        let m = diff
            .entry(deg)
            .or_insert_with(|| PMat::zero(terms[&(deg - 1)].len(), terms[&deg].len()));
        for i in 0..r {
            for j in 0..r {
                let c = if u0 == 0 {
                    if i == j {
                        b.lambda % f.order()
                    } else if j == i + 1 {
                        1
                    } else {
                        0
                    }
                } else if i == j {
                    1
                } else {
                    0
                };
                if c != 0 {
                    m.get_mut(pos[to] + i, pos[from] + j).add_assign(f, &Elem::scaled_path(p, c));
                }
            }
        }
    }
    ProjComplex::from_parts(terms, diff)
}
