//! Shared context for the higher-level operations: the algebra, the field,
//! search bounds and memo tables.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::complex::{word_to_complex, ProjComplex};
use crate::decomp::{self, Decision, DEFAULT_TOP_BOUND};
use crate::field::Field;
use crate::hom::{self, ChainMap, HomTable};
use crate::quiver::GentleAlgebra;
use crate::strings::{GradedString, Word};

/// Search limits shared by the arc and generation procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest top-algebra dimension searched exhaustively.
    pub top_dim: usize,
    /// Largest hom-space dimension whose nonzero elements are all tried.
    pub element_dim: usize,
    /// Cap on the letters of intermediate words, as `factor * len + offset`.
    pub word_factor: usize,
    pub word_offset: usize,
    /// Cone-closure depth.
    pub depth: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { top_dim: DEFAULT_TOP_BOUND, element_dim: 8, word_factor: 4, word_offset: 8, depth: 8 }
    }
}

pub struct Engine {
    pub alg: GentleAlgebra,
    pub f: Field,
    pub bounds: Bounds,
    homs: Mutex<HashMap<(ProjComplex, ProjComplex), HomTable>>,
}

impl Engine {
    pub fn new(alg: GentleAlgebra, f: Field) -> Engine {
        Engine { alg, f, bounds: Bounds::default(), homs: Mutex::new(HashMap::new()) }
    }

    pub fn with_bounds(mut self, bounds: Bounds) -> Engine {
        self.bounds = bounds;
        self
    }

    pub fn complex(&self, w: &Word) -> ProjComplex {
        word_to_complex(&self.alg, self.f, w)
    }

    pub fn string_complex(&self, s: &GradedString) -> ProjComplex {
        crate::complex::string_to_complex(&self.alg, self.f, s)
    }

    pub fn hom_table(&self, a: &ProjComplex, b: &ProjComplex) -> HomTable {
        let key = (a.clone(), b.clone());
        if let Some(t) = self.homs.lock().unwrap().get(&key) {
            return t.clone();
        }
        let t = hom::hom_table(&self.alg, self.f, a, b);
        self.homs.lock().unwrap().insert(key, t.clone());
        t
    }

    /// `hom` up to shift: the total of the hom table.
    pub fn hom_total(&self, a: &ProjComplex, b: &ProjComplex) -> usize {
        self.hom_table(a, b).total()
    }

    pub fn string_hom_total(&self, s: &GradedString, t: &GradedString) -> usize {
        self.hom_total(&self.string_complex(s), &self.string_complex(t))
    }

    pub fn hom_basis(&self, a: &ProjComplex, b: &ProjComplex) -> Vec<ChainMap> {
        hom::hom_basis(&self.alg, self.f, a, b)
    }

    pub fn cone(&self, m: &ChainMap) -> ProjComplex {
        hom::mapping_cone(&self.alg, self.f, m).expect("hom basis elements are chain maps")
    }

    pub fn isomorphic(&self, x: &ProjComplex, y: &ProjComplex) -> Decision<ChainMap> {
        decomp::isomorphism(&self.alg, self.f, x, y, self.bounds.top_dim)
    }

    pub fn decompose(&self, x: &ProjComplex) -> Decision<Vec<(Word, usize)>> {
        decomp::decompose(&self.alg, self.f, x)
    }

    /// Nonzero elements of the span of `basis`, up to scalars: all of them
    /// when the dimension is within bounds, otherwise the basis itself.
    pub fn nonzero_elements(&self, basis: &[ChainMap]) -> Vec<ChainMap> {
        let n = basis.len();
        if n == 0 {
            return Vec::new();
        }
        if n > self.bounds.element_dim {
            return basis.to_vec();
        }
        let p = self.f.order() as u64;
        let mut out = Vec::new();
        for k in 1..p.pow(n as u32) {
            let mut c = vec![0u32; n];
            let mut x = k;
            for ci in c.iter_mut() {
                *ci = (x % p) as u32;
                x /= p;
            }
            // projective normalization: the last nonzero coefficient is 1
            if c.iter().rev().find(|&&v| v != 0) != Some(&1) {
                continue;
            }
            let mut m = ChainMap::zero(&basis[0].source, &basis[0].target);
            for (b, &ci) in basis.iter().zip(&c) {
                if ci != 0 {
                    m = m.add(self.f, &b.scale(self.f, ci));
                }
            }
            out.push(m);
        }
        out
    }
}
