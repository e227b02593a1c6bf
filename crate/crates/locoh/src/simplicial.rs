//! Finite simplicial complexes on a labeled vertex set, stored as explicit
//! face families (bitmasks over the vertex order).
//!
//! Two degenerate states matter and are kept distinct: VOID (no faces at all)
//! and IRRELEVANT (only the empty face).  Their reduced cohomology differs in
//! degree -1, and several formulas hit exactly that degree.

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use std::collections::BTreeSet;

pub const MAX_VERTICES: usize = 24;

/// A face is a bitmask over the complex's vertex order.
pub type Face = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    faces: BTreeSet<Face>,
}

/// Clamp record for one y coordinate: either it lies in the negative support
/// or it carries a clamped nonnegative value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BClamp {
    Negative,
    Value(i64),
}

impl SimplicialComplex {
    /// Builds a complex from an explicit face family, verifying downward
    /// closure.  An empty family is VOID; `{ {} }` is IRRELEVANT.
    pub fn new(labels: Vec<String>, faces: BTreeSet<Face>) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let c = Self { labels, faces };
        c.check_closed()?;
        Ok(c)
    }

    fn check_closed(&self) -> Result<()> {
        for &f in &self.faces {
            let mut rest = f;
            while rest != 0 {
                let v = rest & rest.wrapping_neg();
                if !self.faces.contains(&(f & !v)) {
                    return Err(Error::NotDownwardClosed);
                }
                rest &= !v;
            }
        }
        Ok(())
    }

    /// Complex generated by the given facets (downward closure taken).
    pub fn from_facets(labels: Vec<String>, facets: &[Face]) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let mut faces = BTreeSet::new();
        for &f in facets {
            let mut sub = f;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        Ok(Self { labels, faces })
    }

    pub fn void(labels: Vec<String>) -> Self {
        Self { labels, faces: BTreeSet::new() }
    }

    pub fn irrelevant(labels: Vec<String>) -> Self {
        Self { labels, faces: [0].into_iter().collect() }
    }

    pub fn full_simplex(labels: Vec<String>) -> Result<Self> {
        let k = labels.len();
        if k > MAX_VERTICES {
            return Err(Error::TooManyVertices(k));
        }
        let top = if k == 0 { 0 } else { (1u32 << k) - 1 };
        Self::from_facets(labels, &[top])
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.faces.iter().copied()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.faces.contains(&f)
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.faces.len() == 1 && self.faces.contains(&0)
    }

    /// Max face cardinality minus one; `None` is the VOID sentinel (-inf).
    pub fn dim(&self) -> Option<i64> {
        self.faces
            .iter()
            .map(|f| f.count_ones() as i64 - 1)
            .max()
    }

    pub fn faces_of_cardinality(&self, t: usize) -> Vec<Face> {
        self.faces
            .iter()
            .copied()
            .filter(|f| f.count_ones() as usize == t)
            .collect()
    }

    /// Resolve a list of labels to a face mask.
    pub fn vertex_mask(&self, names: &[&str]) -> Result<Face> {
        let mut mask = 0u32;
        for name in names {
            let idx = self
                .labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
            mask |= 1 << idx;
        }
        Ok(mask)
    }

    /// `lk F = { G : F u G in Delta, F n G = {} }`; VOID when `F` is not a face.
    pub fn link(&self, f: Face) -> SimplicialComplex {
        let faces = self
            .faces
            .iter()
            .copied()
            .filter(|&g| g & f == 0 && self.faces.contains(&(g | f)))
            .collect();
        SimplicialComplex { labels: self.labels.clone(), faces }
    }

    /// `st F = { G : F u G in Delta }`; VOID when `F` is not a face.
    pub fn star(&self, f: Face) -> SimplicialComplex {
        let faces = self
            .faces
            .iter()
            .copied()
            .filter(|&g| self.faces.contains(&(g | f)))
            .collect();
        SimplicialComplex { labels: self.labels.clone(), faces }
    }

    /// Restriction to the vertex subset `u`: faces contained in `u`, with the
    /// vertex set compressed to `u`.
    pub fn restrict(&self, u: Face) -> SimplicialComplex {
        let kept: Vec<usize> = (0..self.labels.len()).filter(|i| u & (1 << i) != 0).collect();
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let faces = self
            .faces
            .iter()
            .copied()
            .filter(|&f| f & !u == 0)
            .map(|f| compress_mask(f, &kept))
            .collect();
        SimplicialComplex { labels, faces }
    }

    /// Cone over the complex with a fresh apex vertex.
    pub fn cone(&self, apex: &str) -> Result<SimplicialComplex> {
        let mut labels = self.labels.clone();
        labels.push(apex.to_string());
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let apex_bit = 1u32 << self.labels.len();
        let mut faces: BTreeSet<Face> = self.faces.clone();
        if self.is_void() {
            // cone over VOID is the apex point
            faces.insert(0);
            faces.insert(apex_bit);
        } else {
            for &f in &self.faces {
                faces.insert(f | apex_bit);
            }
        }
        Ok(SimplicialComplex { labels, faces })
    }
}

fn compress_mask(f: Face, kept: &[usize]) -> Face {
    let mut out = 0u32;
    for (new_i, &old_i) in kept.iter().enumerate() {
        if f & (1 << old_i) != 0 {
            out |= 1 << new_i;
        }
    }
    out
}

/// Stanley-Reisner complex of a squarefree monomial ideal: `F` is a face iff
/// the squarefree monomial with support `F` is not in `I`.  The vertex set is
/// the full partitioned variable list (x block first).
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let p = ideal.partition();
    let (m, n) = (p.m(), p.n());
    let total = m + n;
    if total > MAX_VERTICES {
        return Err(Error::TooManyVertices(total));
    }
    let supports: Vec<u32> = ideal
        .generators()
        .iter()
        .map(|g| g.x_support() | (g.y_support() << m))
        .collect();
    let mut faces = BTreeSet::new();
    for f in 0..(1u64 << total) {
        let f = f as u32;
        if !supports.iter().any(|&s| s & f == s) {
            faces.insert(f);
        }
    }
    Ok(SimplicialComplex { labels: p.all_names(), faces })
}

/// The Takayama complex `Delta_{(a,b)}` for the negative support `F` (a mask
/// over the y block), a clamped nonnegative x vector `a`, and clamped
/// nonnegative y values `b_j` for `j` outside `F`.
///
/// Faces are `F' - F` for `F' >= F` such that for every minimal generator `u`
/// there is `j` outside `F'` with `nu_j(u2) > b_j`, or some `i` with
/// `nu_i(u1) > a_i`.  The vertex set is `W - F`.
pub fn takayama_complex(
    ideal: &MonomialIdeal,
    a: &[i64],
    b: &[i64],
    f_mask: u32,
) -> Result<SimplicialComplex> {
    let p = ideal.partition();
    let (m, n) = (p.m(), p.n());
    if a.len() != m {
        return Err(Error::DegreeLength { expected: m, got: a.len() });
    }
    if b.len() != n {
        return Err(Error::DegreeLength { expected: n, got: b.len() });
    }
    if n < 32 && f_mask & !((1u32 << n) - 1) != 0 {
        return Err(Error::NotSubsetOfW);
    }
    if a.iter().any(|&ai| ai < 0) {
        return Err(Error::NegativeExponent);
    }
    for j in 0..n {
        if f_mask & (1 << j) == 0 && b[j] < 0 {
            return Err(Error::NegativeExponent);
        }
    }
    let kept: Vec<usize> = (0..n).filter(|j| f_mask & (1 << j) == 0).collect();
    let labels: Vec<String> = kept.iter().map(|&j| p.y_names()[j].clone()).collect();
    let mut faces = BTreeSet::new();
    // iterate over F' - F as subsets of the kept vertices
    for sub in 0..(1u64 << kept.len()) {
        let sub = sub as u32;
        let mut fp = f_mask;
        for (new_j, &old_j) in kept.iter().enumerate() {
            if sub & (1 << new_j) != 0 {
                fp |= 1 << old_j;
            }
        }
        if generator_condition(ideal, a, b, fp) {
            faces.insert(sub);
        }
    }
    Ok(SimplicialComplex { labels, faces })
}

/// The survival condition shared by the localization lemma and the Takayama
/// complexes: every minimal generator is "killed" either by a y variable
/// outside `fp` or by an x variable.
pub(crate) fn generator_condition(ideal: &MonomialIdeal, a: &[i64], b: &[i64], fp: u32) -> bool {
    let n = ideal.partition().n();
    ideal.generators().iter().all(|u| {
        let y_kill = (0..n).any(|j| {
            fp & (1 << j) == 0 && b[j] >= 0 && u.y_exponents()[j] as i64 > b[j]
        });
        y_kill || u.x_exponents().iter().zip(a).any(|(&e, &ai)| e as i64 > ai)
    })
}

/// Clamp a bidegree to the finitely many values the Takayama condition can
/// distinguish: `a_i -> min(a_i, sigma_i)`, and for `b_j >= 0`,
/// `b_j -> min(b_j, rho_j)`; negative `b_j` only records membership in `G_b`.
pub fn clamp_profile(
    ideal: &MonomialIdeal,
    a: &[i64],
    b: &[i64],
) -> Result<(Vec<i64>, Vec<BClamp>)> {
    let p = ideal.partition();
    if a.len() != p.m() {
        return Err(Error::DegreeLength { expected: p.m(), got: a.len() });
    }
    if b.len() != p.n() {
        return Err(Error::DegreeLength { expected: p.n(), got: b.len() });
    }
    if a.iter().any(|&ai| ai < 0) {
        return Err(Error::NegativeExponent);
    }
    let (rho, sigma) = ideal.rho_sigma();
    let ca = a
        .iter()
        .zip(&sigma)
        .map(|(&ai, &si)| ai.min(si as i64))
        .collect();
    let cb = b
        .iter()
        .zip(&rho)
        .map(|(&bj, &rj)| {
            if bj < 0 {
                BClamp::Negative
            } else {
                BClamp::Value(bj.min(rj as i64))
            }
        })
        .collect();
    Ok((ca, cb))
}
