//! Morphisms in the homotopy category: Hom complexes, chain-map bases and
//! mapping cones.
//!
//! `hom_table(A, B)[k]` is `dim Hom(A, B[k])` where `B[k] = B.shift(k)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::complex::{Elem, PMat, ProjComplex};
use crate::field::Field;
use crate::linalg::{Matrix, Span};
use crate::quiver::{GentleAlgebra, PathId};

/// Basis of the graded maps `A^i -> B^{i+n}` by single path entries.
struct MapSpace {
    n: i32,
    entries: Vec<(i32, usize, usize, PathId)>,
    index: HashMap<(i32, usize, usize, PathId), usize>,
}

impl MapSpace {
    fn new(alg: &GentleAlgebra, a: &ProjComplex, b: &ProjComplex, n: i32) -> MapSpace {
        let mut entries = Vec::new();
        for (&i, cols) in a.terms() {
            let rows = b.term(i + n);
            for (r, &rv) in rows.iter().enumerate() {
                for (c, &cv) in cols.iter().enumerate() {
                    for &p in alg.permitted_paths(rv, cv) {
                        entries.push((i, r, c, p));
                    }
                }
            }
        }
        let index = entries.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        MapSpace { n, entries, index }
    }

    fn len(&self) -> usize {
        self.entries.len()
    }

    #[allow(clippy::too_many_arguments)]
    fn add_elem(&self, f: Field, col: &mut [u32], i: i32, r: usize, c: usize, e: &Elem, sign: u32) {
        for &(p, x) in &e.0 {
            let k = self.index[&(i, r, c, p)];
            col[k] = f.add(col[k], f.mul(x, sign));
        }
    }

    fn vector_to_maps(&self, a: &ProjComplex, b: &ProjComplex, v: &[u32]) -> BTreeMap<i32, PMat> {
        let mut out: BTreeMap<i32, PMat> = BTreeMap::new();
        for (k, &(i, r, c, p)) in self.entries.iter().enumerate() {
            if v[k] == 0 {
                continue;
            }
            let m = out
                .entry(i)
                .or_insert_with(|| PMat::zero(b.term(i + self.n).len(), a.term(i).len()));
            let cell = m.get_mut(r, c);
            // entries are distinct paths, so merging never adds coefficients
            let mut terms = std::mem::take(&mut cell.0);
            terms.push((p, v[k]));
            terms.sort_unstable();
            cell.0 = terms;
        }
        out
    }
}

/// The Hom-complex differential from degree `n` maps to degree `n - 1` maps:
/// `D(g) = d_B g - (-1)^n g d_A`.
fn hom_differential(
    alg: &GentleAlgebra,
    f: Field,
    a: &ProjComplex,
    b: &ProjComplex,
    src: &MapSpace,
    dst: &MapSpace,
) -> Matrix {
    let mut m = Matrix::zero(dst.len(), src.len());
    let sign = f.neg(f.sign(src.n));
    for (k, &(i, r, c, p)) in src.entries.iter().enumerate() {
        let mut col = vec![0u32; dst.len()];
        let pe = Elem::path(p);
        // d_B on the left: B^{i+n} -> B^{i+n-1}
        if let Some(db) = b.d_ref(i + src.n) {
            for r2 in 0..db.rows {
                let x = db.get(r2, r);
                if !x.is_zero() {
                    let e = x.mul(alg, f, &pe);
                    dst.add_elem(f, &mut col, i, r2, c, &e, 1);
                }
            }
        }
        // d_A on the right: A^{i+1} -> A^i
        if let Some(da) = a.d_ref(i + 1) {
            for c2 in 0..da.cols {
                let y = da.get(c, c2);
                if !y.is_zero() {
                    let e = pe.mul(alg, f, y);
                    dst.add_elem(f, &mut col, i + 1, r, c2, &e, sign);
                }
            }
        }
        for (row, &v) in col.iter().enumerate() {
            if v != 0 {
                m.set(row, k, v);
            }
        }
    }
    m
}

/// A degree-zero chain map `source -> target`, one matrix per source degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub source: ProjComplex,
    pub target: ProjComplex,
    pub comps: BTreeMap<i32, PMat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomError {
    NotAChainMap,
    Shape,
}

impl fmt::Display for HomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomError::NotAChainMap => write!(f, "map does not commute with the differentials"),
            HomError::Shape => write!(f, "map components do not match the complexes"),
        }
    }
}

impl std::error::Error for HomError {}

impl ChainMap {
    pub fn zero(source: &ProjComplex, target: &ProjComplex) -> ChainMap {
        ChainMap { source: source.clone(), target: target.clone(), comps: BTreeMap::new() }
    }

    pub fn identity(alg: &GentleAlgebra, x: &ProjComplex) -> ChainMap {
        let mut comps = BTreeMap::new();
        for (&i, vs) in x.terms() {
            let mut m = PMat::zero(vs.len(), vs.len());
            for (k, &v) in vs.iter().enumerate() {
                *m.get_mut(k, k) = Elem::path(alg.idempotent(v));
            }
            comps.insert(i, m);
        }
        ChainMap { source: x.clone(), target: x.clone(), comps }
    }

    pub fn comp(&self, i: i32) -> PMat {
        match self.comps.get(&i) {
            Some(m) => m.clone(),
            None => PMat::zero(self.target.term(i).len(), self.source.term(i).len()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(PMat::is_zero)
    }

    pub fn check(&self, alg: &GentleAlgebra, f: Field) -> Result<(), HomError> {
        for (&i, m) in &self.comps {
            if m.rows != self.target.term(i).len() || m.cols != self.source.term(i).len() {
                return Err(HomError::Shape);
            }
        }
        let (a, b) = (&self.source, &self.target);
        let degrees: Vec<i32> = a.terms().keys().copied().collect();
        for i in degrees {
            // f_{i-1} d_A^i = d_B^i f_i
            let lhs = self.comp(i - 1).mul(alg, f, &a.d(i));
            let rhs = b.d(i).mul(alg, f, &self.comp(i));
            if !lhs.add(f, &rhs.scale(f, f.neg(1))).is_zero() {
                return Err(HomError::NotAChainMap);
            }
        }
        Ok(())
    }

    pub fn add(&self, f: Field, other: &ChainMap) -> ChainMap {
        let mut comps = self.comps.clone();
        for (&i, m) in &other.comps {
            let cur = self.comp(i);
            comps.insert(i, cur.add(f, m));
        }
        ChainMap { source: self.source.clone(), target: self.target.clone(), comps }
    }

    pub fn scale(&self, f: Field, c: u32) -> ChainMap {
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            comps: self.comps.iter().map(|(&i, m)| (i, m.scale(f, c))).collect(),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, alg: &GentleAlgebra, f: Field, other: &ChainMap) -> ChainMap {
        let comps = self
            .comps
            .iter()
            .map(|(&i, m)| (i, other.comp(i).mul(alg, f, m)))
            .collect();
        ChainMap { source: self.source.clone(), target: other.target.clone(), comps }
    }
}

/// Dimensions of `Hom(A, B[k])` over a finite window of shifts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomTable {
    pub dims: BTreeMap<i32, usize>,
}

impl HomTable {
    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn at(&self, k: i32) -> usize {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.dims.iter().filter(|(_, &d)| d > 0).map(|(&k, &d)| (k, d))
    }
}

impl fmt::Display for HomTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.nonzero() {
            writeln!(f, "{}: {}", k, d)?;
        }
        write!(f, "total: {}", self.total())
    }
}

/// Shifts `k` for which `Hom(A, B[k])` can be nonzero, padded by one.
pub fn hom_window(a: &ProjComplex, b: &ProjComplex) -> Option<(i32, i32)> {
    let (amin, amax) = a.degree_range()?;
    let (bmin, bmax) = b.degree_range()?;
    Some((amin - bmax - 1, amax - bmin + 1))
}

/// `dim Hom_K(A, B)` in degree zero.
pub fn hom_dim(alg: &GentleAlgebra, f: Field, a: &ProjComplex, b: &ProjComplex) -> usize {
    let v0 = MapSpace::new(alg, a, b, 0);
    if v0.len() == 0 {
        return 0;
    }
    let z = cycles_dim(alg, f, a, b, &v0);
    let v1 = MapSpace::new(alg, a, b, 1);
    let bnd = if v1.len() == 0 { 0 } else { hom_differential(alg, f, a, b, &v1, &v0).rank(f) };
    z - bnd
}

fn cycles_dim(alg: &GentleAlgebra, f: Field, a: &ProjComplex, b: &ProjComplex, v0: &MapSpace) -> usize {
    let vm = MapSpace::new(alg, a, b, -1);
    if vm.len() == 0 {
        return v0.len();
    }
    v0.len() - hom_differential(alg, f, a, b, v0, &vm).rank(f)
}

pub fn hom_table(alg: &GentleAlgebra, f: Field, a: &ProjComplex, b: &ProjComplex) -> HomTable {
    let mut dims = BTreeMap::new();
    if let Some((lo, hi)) = hom_window(a, b) {
        for k in lo..=hi {
            dims.insert(k, hom_dim(alg, f, a, &b.shift(f, k)));
        }
    }
    HomTable { dims }
}

/// Representatives of a basis of `Hom_K(A, B)` in degree zero.
pub fn hom_basis(alg: &GentleAlgebra, f: Field, a: &ProjComplex, b: &ProjComplex) -> Vec<ChainMap> {
    let v0 = MapSpace::new(alg, a, b, 0);
    if v0.len() == 0 {
        return Vec::new();
    }
    let vm = MapSpace::new(alg, a, b, -1);
    let cycles: Vec<Vec<u32>> = if vm.len() == 0 {
        (0..v0.len())
            .map(|k| {
                let mut e = vec![0; v0.len()];
                e[k] = 1;
                e
            })
            .collect()
    } else {
        hom_differential(alg, f, a, b, &v0, &vm).kernel(f)
    };
    let mut span = Span::new(v0.len());
    let v1 = MapSpace::new(alg, a, b, 1);
    if v1.len() > 0 {
        let d1 = hom_differential(alg, f, a, b, &v1, &v0);
        for k in 0..v1.len() {
            span.insert(f, d1.column(k));
        }
    }
    let mut out = Vec::new();
    for z in cycles {
        if span.insert(f, z.clone()) {
            out.push(ChainMap { source: a.clone(), target: b.clone(), comps: v0.vector_to_maps(a, b, &z) });
        }
    }
    out
}

/// True when the chain map is null-homotopic.
pub fn is_null_homotopic(alg: &GentleAlgebra, f: Field, m: &ChainMap) -> bool {
    let (a, b) = (&m.source, &m.target);
    let v0 = MapSpace::new(alg, a, b, 0);
    let v = map_vector(&v0, m);
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    let v1 = MapSpace::new(alg, a, b, 1);
    let mut span = Span::new(v0.len());
    if v1.len() > 0 {
        let d1 = hom_differential(alg, f, a, b, &v1, &v0);
        for k in 0..v1.len() {
            span.insert(f, d1.column(k));
        }
    }
    span.contains(f, &v)
}

fn map_vector(space: &MapSpace, m: &ChainMap) -> Vec<u32> {
    let mut v = vec![0u32; space.len()];
    for (&i, mat) in &m.comps {
        for r in 0..mat.rows {
            for c in 0..mat.cols {
                for &(p, x) in &mat.get(r, c).0 {
                    v[space.index[&(i, r, c, p)]] = x;
                }
            }
        }
    }
    v
}

/// The cone `B ⊕ A[1]` of `f : A -> B` with differential
/// `[[d_B, f], [0, -d_A]]`, before minimalization.
pub fn raw_cone(f: Field, m: &ChainMap) -> ProjComplex {
    let (a, b) = (&m.source, &m.target);
    let mut terms: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    let degrees: std::collections::BTreeSet<i32> =
        b.terms().keys().copied().chain(a.terms().keys().map(|i| i + 1)).collect();
    for &i in &degrees {
        let mut t = b.term(i).to_vec();
        t.extend_from_slice(a.term(i - 1));
        terms.insert(i, t);
    }
    let mut diff = BTreeMap::new();
    for &i in &degrees {
        let (br, bc) = (b.term(i - 1).len(), b.term(i).len());
        let (ar, ac) = (a.term(i - 2).len(), a.term(i - 1).len());
        let mut d = PMat::zero(br + ar, bc + ac);
        if let Some(db) = b.d_ref(i) {
            for r in 0..br {
                for c in 0..bc {
                    *d.get_mut(r, c) = db.get(r, c).clone();
                }
            }
        }
        let fm = m.comp(i - 1);
        for r in 0..br {
            for c in 0..ac {
                *d.get_mut(r, bc + c) = fm.get(r, c).clone();
            }
        }
        if let Some(da) = a.d_ref(i - 1) {
            for r in 0..ar {
                for c in 0..ac {
                    *d.get_mut(br + r, bc + c) = da.get(r, c).neg(f);
                }
            }
        }
        diff.insert(i, d);
    }
    ProjComplex::from_parts(terms, diff)
}

/// Minimal mapping cone of a chain map.
pub fn mapping_cone(alg: &GentleAlgebra, f: Field, m: &ChainMap) -> Result<ProjComplex, HomError> {
    m.check(alg, f)?;
    Ok(raw_cone(f, m).minimalize(alg, f))
}

/// The vector `(dim Hom(T, X[k]))_{T, k}` over a test family and shift window.
pub fn fingerprint(
    alg: &GentleAlgebra,
    f: Field,
    x: &ProjComplex,
    family: &[ProjComplex],
    window: (i32, i32),
) -> Vec<usize> {
    let mut out = Vec::with_capacity(family.len() * (window.1 - window.0 + 1) as usize);
    for t in family {
        let tab = hom_table(alg, f, t, x);
        for k in window.0..=window.1 {
            out.push(tab.at(k));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::string_to_complex;
    use crate::quiver::parse_algebra;
    use crate::strings::parse_string;

    fn a2() -> GentleAlgebra {
        parse_algebra("vertices: 1 2\narrows:\n a: 1 -> 2\n").unwrap()
    }

    #[test]
    fn stalk_homs() {
        let alg = a2();
        let f = Field::default();
        let p1 = ProjComplex::stalk(0, 0);
        let p2 = ProjComplex::stalk(1, 0);
        assert_eq!(hom_table(&alg, f, &p1, &p1).total(), 1);
        let t = hom_table(&alg, f, &p2, &p1);
        assert_eq!((t.total(), t.at(0)), (1, 1));
        assert_eq!(hom_table(&alg, f, &p1, &p2).total(), 0);
    }

    #[test]
    fn cone_of_identity_vanishes() {
        let alg = a2();
        let f = Field::new(3).unwrap();
        let x = string_to_complex(&alg, f, &parse_string(&alg, "a").unwrap());
        let c = mapping_cone(&alg, f, &ChainMap::identity(&alg, &x)).unwrap();
        assert!(c.is_zero());
        let z = mapping_cone(&alg, f, &ChainMap::zero(&x, &x)).unwrap();
        assert_eq!(z, x.direct_sum(&x.shift(f, 1)));
    }

    #[test]
    fn cone_of_path_map() {
        let alg = a2();
        let f = Field::default();
        let p1 = ProjComplex::stalk(0, 0);
        let p2 = ProjComplex::stalk(1, 0);
        let basis = hom_basis(&alg, f, &p2, &p1);
        assert_eq!(basis.len(), 1);
        let c = mapping_cone(&alg, f, &basis[0]).unwrap();
        let s = string_to_complex(&alg, f, &parse_string(&alg, "a").unwrap());
        assert_eq!(c, s);
    }

    #[test]
    fn rejects_non_chain_map() {
        let alg = parse_algebra("vertices: 1 2 3\narrows:\n a: 1 -> 2\n b: 2 -> 3\nrelations:\n a b\n").unwrap();
        let f = Field::default();
        let x = string_to_complex(&alg, f, &parse_string(&alg, "a").unwrap());
        let mut m = ChainMap::identity(&alg, &x);
        m.comps.remove(&1);
        assert_eq!(mapping_cone(&alg, f, &m), Err(HomError::NotAChainMap));
    }
}
