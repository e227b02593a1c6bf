//! Monomials, monomial ideals and the x/y variable split.
//!
//! The ambient ring is `K[x_1..x_m, y_1..y_n]` and the distinguished monomial
//! prime is `P = (y_1,..,y_n)`.  Everything downstream (complexes, strands,
//! series) is phrased in terms of the exponent data stored here.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The split of the variables into the `x` block (length `m`, generating the
/// degree-zero part) and the `y` block (length `n`, generating `P`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariablePartition {
    x_names: Vec<String>,
    y_names: Vec<String>,
}

impl VariablePartition {
    pub fn new(x_names: Vec<String>, y_names: Vec<String>) -> Result<Self> {
        if x_names.is_empty() && y_names.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let mut seen = std::collections::HashSet::new();
        for name in x_names.iter().chain(y_names.iter()) {
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        Ok(Self { x_names, y_names })
    }

    /// Partition with default labels `x1..xm`, `y1..yn`.
    pub fn with_counts(m: usize, n: usize) -> Result<Self> {
        Self::new(
            (1..=m).map(|i| format!("x{i}")).collect(),
            (1..=n).map(|j| format!("y{j}")).collect(),
        )
    }

    pub fn m(&self) -> usize {
        self.x_names.len()
    }

    pub fn n(&self) -> usize {
        self.y_names.len()
    }

    pub fn x_names(&self) -> &[String] {
        &self.x_names
    }

    pub fn y_names(&self) -> &[String] {
        &self.y_names
    }

    /// All variable names, x block first.  This is the vertex order used for
    /// every orientation sign in the simplicial machinery.
    pub fn all_names(&self) -> Vec<String> {
        self.x_names.iter().chain(self.y_names.iter()).cloned().collect()
    }
}

/// Which exponent block an index refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// A monomial `u = u1 * u2` with `u1` in the x variables and `u2` in the y
/// variables; exponents are nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    xs: Vec<u32>,
    ys: Vec<u32>,
}

impl Monomial {
    pub fn new(xs: Vec<u32>, ys: Vec<u32>) -> Self {
        Self { xs, ys }
    }

    pub fn unit(m: usize, n: usize) -> Self {
        Self { xs: vec![0; m], ys: vec![0; n] }
    }

    pub fn is_unit(&self) -> bool {
        self.xs.iter().all(|&e| e == 0) && self.ys.iter().all(|&e| e == 0)
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.xs
    }

    pub fn y_exponents(&self) -> &[u32] {
        &self.ys
    }

    /// The exponent `nu_j(u)` on the given axis (0-based index).
    pub fn nu(&self, axis: Axis, index: usize) -> Result<u32> {
        let block = match axis {
            Axis::X => &self.xs,
            Axis::Y => &self.ys,
        };
        block
            .get(index)
            .copied()
            .ok_or(Error::IndexOutOfRange { index, len: block.len() })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.xs.len() == other.xs.len()
            && self.ys.len() == other.ys.len()
            && self.xs.iter().zip(&other.xs).all(|(a, b)| a <= b)
            && self.ys.iter().zip(&other.ys).all(|(a, b)| a <= b)
    }

    /// Exponents clamped to one.
    pub fn radical(&self) -> Monomial {
        Monomial {
            xs: self.xs.iter().map(|&e| e.min(1)).collect(),
            ys: self.ys.iter().map(|&e| e.min(1)).collect(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.xs.iter().chain(self.ys.iter()).all(|&e| e <= 1)
    }

    /// Support of the x part as a bitmask over `0..m`.
    pub fn x_support(&self) -> u32 {
        support_mask(&self.xs)
    }

    /// Support of the y part as a bitmask over `0..n`.
    pub fn y_support(&self) -> u32 {
        support_mask(&self.ys)
    }
}

fn support_mask(exps: &[u32]) -> u32 {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u32, |acc, (i, _)| acc | (1 << i))
}

/// A monomial ideal stored by its minimal monomial generating set.
///
/// The zero ideal has no generators; the unit ideal is the single generator 1
/// (this is the degenerate "whole ring" flag).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    partition: VariablePartition,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `generators`, keeping only the
    /// divisibility-minimal ones.  Rejects monomials whose exponent vectors do
    /// not match the partition.
    pub fn new(partition: VariablePartition, generators: Vec<Monomial>) -> Result<Self> {
        let (m, n) = (partition.m(), partition.n());
        for g in &generators {
            if g.xs.len() != m || g.ys.len() != n {
                return Err(Error::MixedPartition { expected_m: m, expected_n: n });
            }
        }
        let minimal = minimalize(generators);
        Ok(Self { partition, generators: minimal })
    }

    pub fn zero(partition: VariablePartition) -> Self {
        Self { partition, generators: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// True when the ideal is the whole ring, i.e. S/I = 0.
    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.is_unit())
    }

    pub fn partition(&self) -> &VariablePartition {
        &self.partition
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(u))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.is_squarefree())
    }

    /// Radical: clamp every generator to squarefree, then re-minimalize.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.generators.iter().map(|g| g.radical()).collect();
        MonomialIdeal {
            partition: self.partition.clone(),
            generators: minimalize(gens),
        }
    }

    /// `rho_j = max nu_j(u2)` and `sigma_i = max nu_i(u1)` over the minimal
    /// generators.  All-zero vectors for the zero ideal.
    pub fn rho_sigma(&self) -> (Vec<u32>, Vec<u32>) {
        let mut rho = vec![0u32; self.partition.n()];
        let mut sigma = vec![0u32; self.partition.m()];
        for g in &self.generators {
            for (j, &e) in g.ys.iter().enumerate() {
                rho[j] = rho[j].max(e);
            }
            for (i, &e) in g.xs.iter().enumerate() {
                sigma[i] = sigma[i].max(e);
            }
        }
        (rho, sigma)
    }
}

/// Keep exactly the divisibility-minimal monomials.  Idempotent and
/// order-independent (the result is sorted).
pub fn minimalize(generators: Vec<Monomial>) -> Vec<Monomial> {
    let mut minimal: Vec<Monomial> = Vec::new();
    for g in &generators {
        if generators.iter().any(|h| h != g && h.divides(g) && !g.divides(h)) {
            continue;
        }
        // among equal monomials keep one copy
        if !minimal.contains(g) {
            minimal.push(g.clone());
        }
    }
    minimal.sort();
    minimal
}

/// A fine bidegree `(a, b)` in Z^m x Z^n.  Negative entries permitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bidegree {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

/// The sign data read off a bidegree: `N_a = supp a` over the x block,
/// `G_b = {j : b_j < 0}` and `H_b = {j : b_j > 0}` over the y block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportSets {
    pub n_a: u32,
    pub g_b: u32,
    pub h_b: u32,
}

impl Bidegree {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Self {
        Self { a, b }
    }

    pub fn support_sets(&self) -> SupportSets {
        let mut n_a = 0u32;
        for (i, &ai) in self.a.iter().enumerate() {
            if ai != 0 {
                n_a |= 1 << i;
            }
        }
        let (mut g_b, mut h_b) = (0u32, 0u32);
        for (j, &bj) in self.b.iter().enumerate() {
            if bj < 0 {
                g_b |= 1 << j;
            } else if bj > 0 {
                h_b |= 1 << j;
            }
        }
        SupportSets { n_a, g_b, h_b }
    }

    pub fn a_nonnegative(&self) -> bool {
        self.a.iter().all(|&ai| ai >= 0)
    }
}
