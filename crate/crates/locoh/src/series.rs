//! The exact carrier of all Hilbert series: finite sums of terms
//! `coeff * (monomial) * (geometric factors)`, with a fixed expansion
//! direction per variable.
//!
//! A term stores, per variable `v`: a numerator exponent `e_v`, a power
//! `up_v` of `1/(1 - v)` (expansion toward +infinity) and a power `down_v`
//! of `1/(1 - v^-1)` (expansion toward -infinity).  At most one of
//! `up_v`/`down_v` is nonzero.  `s/(1-s)` is `e = 1, up = 1`;
//! `t^-1/(1-t^-1)` is `e = -1, down = 1`.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Extended binomial coefficient used for coefficient extraction and the
/// coarse dimension formula, with the degenerate-case convention
/// `binom(-1,-1) = 1`, `binom(i,-1) = 0` for `i >= 0`, `binom(i,0) = 1`
/// for `i >= 0`, and `0` whenever `bottom >= 0` exceeds `top`.
pub fn ext_binom(top: i64, bottom: i64) -> i64 {
    if bottom == -1 {
        return if top == -1 { 1 } else { 0 };
    }
    if bottom < -1 || top < bottom {
        return 0;
    }
    let mut acc: i128 = 1;
    for l in 0..bottom {
        acc = acc * (top - l) as i128 / (l + 1) as i128;
    }
    acc as i64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    Fine,
    Coarse,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub coeff: i64,
    /// Numerator exponent per variable; may be negative.
    pub exps: Vec<i64>,
    /// Power of `1/(1 - v)` per variable (series supported toward +inf).
    pub up: Vec<u8>,
    /// Power of `1/(1 - v^-1)` per variable (series supported toward -inf).
    pub down: Vec<u8>,
}

impl SeriesTerm {
    fn key(&self) -> (&[i64], &[u8], &[u8]) {
        (&self.exps, &self.up, &self.down)
    }

    /// Coefficient of the monomial with exponent vector `d` in this term's
    /// expansion.
    pub fn coefficient_at(&self, d: &[i64]) -> i64 {
        let mut acc = self.coeff;
        if acc == 0 {
            return 0;
        }
        for v in 0..self.exps.len() {
            let e = self.exps[v];
            let (g, f) = (self.up[v] as i64, self.down[v] as i64);
            debug_assert!(g == 0 || f == 0);
            let c = if g > 0 {
                if d[v] >= e {
                    ext_binom(d[v] - e + g - 1, g - 1)
                } else {
                    0
                }
            } else if f > 0 {
                if d[v] <= e {
                    ext_binom(e - d[v] + f - 1, f - 1)
                } else {
                    0
                }
            } else if d[v] == e {
                1
            } else {
                0
            };
            if c == 0 {
                return 0;
            }
            acc *= c;
        }
        acc
    }
}

/// A finite sum of series terms over a named variable list.  `x_count` is the
/// number of leading variables belonging to the x block (needed to regrade).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSeries {
    pub grading: Grading,
    pub vars: Vec<String>,
    pub x_count: usize,
    pub terms: Vec<SeriesTerm>,
}

impl RationalSeries {
    pub fn empty(grading: Grading, vars: Vec<String>, x_count: usize) -> Self {
        Self { grading, vars, x_count, terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, term: SeriesTerm) {
        debug_assert_eq!(term.exps.len(), self.vars.len());
        self.terms.push(term);
    }

    /// Sum of term contributions at the multidegree `d`.
    pub fn coefficient_at(&self, d: &[i64]) -> i64 {
        assert_eq!(d.len(), self.vars.len());
        self.terms.iter().map(|t| t.coefficient_at(d)).sum()
    }

    /// Canonical form: merge terms with identical factor structure, drop
    /// zero coefficients, sort lexicographically.
    pub fn normalize(&mut self) {
        self.terms
            .sort_by(|a, b| a.key().cmp(&b.key()).then(a.coeff.cmp(&b.coeff)));
        let mut merged: Vec<SeriesTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            if let Some(last) = merged.last_mut() {
                if last.key() == t.key() {
                    last.coeff += t.coeff;
                    continue;
                }
            }
            merged.push(t);
        }
        merged.retain(|t| t.coeff != 0);
        self.terms = merged;
    }

    /// Stronger canonical form for structural equality across different
    /// derivations: after `normalize`, repeatedly applies the absorption
    /// identities
    /// `c*v^(e-1)*U^(g-1) + c*v^e*U^g = c*v^(e-1)*U^g` (U = 1/(1-v)) and
    /// `c*v^(e+1)*D^(f-1) + c*v^e*D^f = c*v^(e+1)*D^f` (D = 1/(1-v^-1)).
    pub fn absorbed(&self) -> RationalSeries {
        let mut s = self.clone();
        s.normalize();
        loop {
            let mut changed = false;
            'search: for i in 0..s.terms.len() {
                for j in 0..s.terms.len() {
                    if i == j {
                        continue;
                    }
                    if let Some(merged) = absorb(&s.terms[i], &s.terms[j]) {
                        let (lo, hi) = (i.min(j), i.max(j));
                        s.terms.remove(hi);
                        s.terms.remove(lo);
                        s.terms.push(merged);
                        changed = true;
                        break 'search;
                    }
                }
            }
            if !changed {
                break;
            }
            s.normalize();
        }
        s
    }

    pub fn scaled(&self, by: i64) -> RationalSeries {
        let mut s = self.clone();
        for t in &mut s.terms {
            t.coeff *= by;
        }
        s.normalize();
        s
    }

    pub fn sum(mut self, other: &RationalSeries) -> RationalSeries {
        assert_eq!(self.vars, other.vars);
        self.terms.extend(other.terms.iter().cloned());
        self.normalize();
        self
    }

    /// Deterministic display form.
    pub fn rendered(&self) -> String {
        self.to_string()
    }
}

/// Tries to absorb `a` into `b` (or vice versa) along a single variable.
fn absorb(a: &SeriesTerm, b: &SeriesTerm) -> Option<SeriesTerm> {
    if a.coeff != b.coeff {
        return None;
    }
    // find the unique variable where they differ
    let nvars = a.exps.len();
    let mut diff = None;
    for v in 0..nvars {
        if a.exps[v] != b.exps[v] || a.up[v] != b.up[v] || a.down[v] != b.down[v] {
            if diff.is_some() {
                return None;
            }
            diff = Some(v);
        }
    }
    let v = diff?;
    // up absorption: a = (e-1, g-1), b = (e, g)  ->  (e-1, g)
    if a.down[v] == b.down[v]
        && b.up[v] == a.up[v] + 1
        && b.exps[v] == a.exps[v] + 1
    {
        let mut out = a.clone();
        out.up[v] = b.up[v];
        return Some(out);
    }
    if a.down[v] == b.down[v]
        && a.up[v] == b.up[v] + 1
        && a.exps[v] == b.exps[v] + 1
    {
        let mut out = b.clone();
        out.up[v] = a.up[v];
        return Some(out);
    }
    // down absorption: a = (e+1, f-1), b = (e, f)  ->  (e+1, f)
    if a.up[v] == b.up[v]
        && b.down[v] == a.down[v] + 1
        && b.exps[v] == a.exps[v] - 1
    {
        let mut out = a.clone();
        out.down[v] = b.down[v];
        return Some(out);
    }
    if a.up[v] == b.up[v]
        && a.down[v] == b.down[v] + 1
        && a.exps[v] == b.exps[v] - 1
    {
        let mut out = b.clone();
        out.down[v] = a.down[v];
        return Some(out);
    }
    None
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let mut factors: Vec<String> = Vec::new();
                for (v, name) in self.vars.iter().enumerate() {
                    if t.exps[v] != 0 {
                        factors.push(format!("{}^{}", name, t.exps[v]));
                    }
                    if t.up[v] > 0 {
                        let p = if t.up[v] == 1 {
                            String::new()
                        } else {
                            format!("^{}", t.up[v])
                        };
                        factors.push(format!("(1-{name})^-1{p}"));
                    }
                    if t.down[v] > 0 {
                        let p = if t.down[v] == 1 {
                            String::new()
                        } else {
                            format!("^{}", t.down[v])
                        };
                        factors.push(format!("(1-{name}^-1)^-1{p}"));
                    }
                }
                if factors.is_empty() {
                    format!("{}", t.coeff)
                } else if t.coeff == 1 {
                    factors.join("*")
                } else {
                    format!("{}*{}", t.coeff, factors.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
