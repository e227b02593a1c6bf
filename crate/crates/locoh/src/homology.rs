//! Reduced simplicial homology over a field via the augmented oriented chain
//! complex and exact rank computation.
//!
//! Boundary matrices are integer matrices; the field enters only at rank
//! time (fraction-free elimination over Z for the rationals, modular
//! elimination for prime fields).

use crate::error::{Error, Result};
use crate::simplicial::{Face, SimplicialComplex};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Coefficient field: the rationals or F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rationals,
    Prime { p: u64 },
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Rationals
    }
}

impl FieldSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Prime { p } => {
                if is_prime(p) {
                    Ok(())
                } else {
                    Err(Error::NotPrime(p))
                }
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Exact rank over the given field.
    pub fn rank(&self, field: FieldSpec) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match field {
            FieldSpec::Rationals => self.rank_rational(),
            FieldSpec::Prime { p } => self.rank_mod_p(p),
        }
    }

    /// Fraction-free (Bareiss) elimination over Z with full pivoting.
    fn rank_rational(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| BigInt::from(self.get(r, c))).collect())
            .collect();
        let mut prev = BigInt::one();
        let mut rank = 0usize;
        let (nr, nc) = (self.rows, self.cols);
        for step in 0..nr.min(nc) {
            // locate a pivot anywhere in the remaining submatrix
            let mut pivot = None;
            'outer: for r in step..nr {
                for c in step..nc {
                    if !m[r][c].is_zero() {
                        pivot = Some((r, c));
                        break 'outer;
                    }
                }
            }
            let Some((pr, pc)) = pivot else { break };
            m.swap(step, pr);
            if pc != step {
                for row in m.iter_mut() {
                    row.swap(step, pc);
                }
            }
            let p = m[step][step].clone();
            for r in step + 1..nr {
                for c in step + 1..nc {
                    let v = (&p * &m[r][c] - &m[r][step] * &m[step][c]) / &prev;
                    m[r][c] = v;
                }
                m[r][step] = BigInt::zero();
            }
            prev = p;
            rank += 1;
        }
        rank
    }

    fn rank_mod_p(&self, p: u64) -> usize {
        let pi = p as i64;
        let mut m: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| (self.get(r, c).rem_euclid(pi)) as u64)
                    .collect()
            })
            .collect();
        let (nr, nc) = (self.rows, self.cols);
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..nc {
            let Some(pr) = (row..nr).find(|&r| m[r][col] != 0) else { continue };
            m.swap(row, pr);
            let inv = mod_inv(m[row][col], p);
            for c in col..nc {
                m[row][c] = mulmod(m[row][c], inv, p);
            }
            for r in 0..nr {
                if r != row && m[r][col] != 0 {
                    let factor = m[r][col];
                    for c in col..nc {
                        let sub = mulmod(factor, m[row][c], p);
                        m[r][c] = (m[r][c] + p - sub) % p;
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == nr {
                break;
            }
        }
        rank
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// The augmented oriented chain complex of a complex, graded by face
/// cardinality: `bases[c]` are the faces with `c` vertices (so degree
/// `c - 1`), and `boundaries[c]` maps cardinality `c + 1` chains to
/// cardinality `c` chains.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub bases: Vec<Vec<Face>>,
    pub boundaries: Vec<IntMatrix>,
}

/// Builds the chain complex with the alternating-sign boundary taken with
/// respect to the complex's fixed vertex order.  The augmentation map to the
/// empty face is included.  VOID yields the zero complex.
pub fn chain_complex(delta: &SimplicialComplex) -> ChainComplex {
    if delta.is_void() {
        return ChainComplex { bases: Vec::new(), boundaries: Vec::new() };
    }
    let max_card = delta.dim().map(|d| (d + 1) as usize).unwrap_or(0);
    let bases: Vec<Vec<Face>> = (0..=max_card).map(|c| delta.faces_of_cardinality(c)).collect();
    let mut boundaries = Vec::new();
    for c in 0..max_card {
        let lower = &bases[c];
        let upper = &bases[c + 1];
        let mut mat = IntMatrix::zeros(lower.len(), upper.len());
        for (col, &f) in upper.iter().enumerate() {
            let mut sign = 1i64;
            let mut rest = f;
            while rest != 0 {
                let v = rest & rest.wrapping_neg();
                let sub = f & !v;
                // lower bases are sorted, faces_of_cardinality preserves BTreeSet order
                if let Ok(row) = lower.binary_search(&sub) {
                    mat.set(row, col, sign);
                }
                sign = -sign;
                rest &= !v;
            }
        }
        boundaries.push(mat);
    }
    ChainComplex { bases, boundaries }
}

impl ChainComplex {
    /// Checks the matrix identity boundary-of-boundary = 0.
    pub fn boundary_squares_to_zero(&self) -> bool {
        self.boundaries
            .windows(2)
            .all(|w| w[0].mul(&w[1]).is_zero())
    }
}

/// Reduced homology dimensions, indexed from degree -1 upward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyDims {
    dims: Vec<usize>,
}

impl HomologyDims {
    pub fn dim_at(&self, degree: i64) -> usize {
        let idx = degree + 1;
        if idx < 0 {
            return 0;
        }
        self.dims.get(idx as usize).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.dims
    }
}

/// `dim H~_d = nullity(d_d) - rank(d_{d+1})` via exact ranks; over a field the
/// cohomology dimensions coincide with these.
pub fn reduced_homology_dims(delta: &SimplicialComplex, field: FieldSpec) -> HomologyDims {
    let cc = chain_complex(delta);
    if cc.bases.is_empty() {
        return HomologyDims { dims: Vec::new() };
    }
    let ranks: Vec<usize> = cc.boundaries.iter().map(|b| b.rank(field)).collect();
    let max_card = cc.bases.len() - 1;
    let mut dims = Vec::with_capacity(max_card + 1);
    for c in 0..=max_card {
        let size = cc.bases[c].len();
        let rank_out = if c == 0 { 0 } else { ranks[c - 1] }; // boundary leaving C_c
        let rank_in = if c < max_card { ranks[c] } else { 0 }; // boundary arriving from C_{c+1}
        dims.push(size - rank_out - rank_in);
    }
    HomologyDims { dims }
}
