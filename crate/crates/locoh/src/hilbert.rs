//! Closed-form Hilbert series of `H^i_P(R)` in the fine and coarse gradings,
//! component dimension extraction, and the classical one-block
//! specializations.
//!
//! The authoritative general-case construction is the per-pattern sum: the
//! Takayama complex `Delta_{(a,b)}` only depends on the clamp pattern of
//! `(a,b)`, so the series is assembled from finitely many patterns, each
//! carrying the exact generating function of its multidegree region.

use crate::error::{Error, Result};
use crate::homology::{reduced_homology_dims, FieldSpec, HomologyDims};
use crate::monomial::{Bidegree, Monomial, MonomialIdeal, VariablePartition};
use crate::series::{ext_binom, Grading, RationalSeries, SeriesTerm};
use crate::simplicial::{stanley_reisner, takayama_complex, SimplicialComplex};
use std::collections::HashMap;

/// Which realization of the general fine series to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesMode {
    /// Exact pattern enumeration; coefficient extraction matches the oracle.
    PerPattern,
    /// The closed product form, emitted verbatim for comparison; carries no
    /// correctness promise.
    Printed,
}

/// Memoizes reduced homology dimensions by face set; correct because the
/// chain complex depends on the faces alone.
#[derive(Default)]
pub struct HomologyCache {
    map: HashMap<(Vec<u32>, FieldSpec), HomologyDims>,
}

impl HomologyCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim_at(&mut self, delta: &SimplicialComplex, degree: i64, field: FieldSpec) -> usize {
        let key = (delta.faces().collect::<Vec<_>>(), field);
        self.map
            .entry(key)
            .or_insert_with(|| reduced_homology_dims(delta, field))
            .dim_at(degree)
    }
}

fn mask_bits(mask: u32, len: usize) -> impl Iterator<Item = usize> {
    (0..len).filter(move |j| mask & (1 << j) != 0)
}

/// Hilbert series of `H^i_P(K[Delta])` in the fine bigrading, for squarefree
/// `I`: sum over faces `F` of `Delta_W` and subsets `G` of `V` of
/// `dim H~_{i-|F|-1}((lk(F u G))_W) * prod_{v in G} s_v/(1-s_v) *
/// prod_{w in F} t_w^-1/(1-t_w^-1)`.
pub fn fine_series_squarefree(
    ideal: &MonomialIdeal,
    i: i64,
    field: FieldSpec,
) -> Result<RationalSeries> {
    let delta = stanley_reisner(ideal)?;
    let p = ideal.partition();
    let (m, n) = (p.m(), p.n());
    let w_mask = (((1u64 << n) - 1) as u32) << m;
    let mut series = RationalSeries::empty(Grading::Fine, p.all_names(), m);
    let mut cache = HomologyCache::new();
    for f_sub in 0..(1u64 << n) {
        let f_mask = (f_sub as u32) << m;
        if !delta.contains(f_mask) {
            continue;
        }
        let fcard = f_mask.count_ones() as i64;
        for g_mask in 0..(1u64 << m) {
            let g_mask = g_mask as u32;
            let linked = delta.link(f_mask | g_mask).restrict(w_mask);
            let d = cache.dim_at(&linked, i - fcard - 1, field);
            if d == 0 {
                continue;
            }
            let mut t = SeriesTerm {
                coeff: d as i64,
                exps: vec![0; m + n],
                up: vec![0; m + n],
                down: vec![0; m + n],
            };
            for v in mask_bits(g_mask, m) {
                t.exps[v] = 1;
                t.up[v] = 1;
            }
            for j in mask_bits(f_mask >> m, n) {
                t.exps[m + j] = -1;
                t.down[m + j] = 1;
            }
            series.push(t);
        }
    }
    series.normalize();
    Ok(series)
}

/// Dimension of `H^i_P(K[Delta])` at a single fine bidegree, by the direct
/// link formula with `F = supp b`, `G = supp a`.
pub fn component_dim_squarefree(
    ideal: &MonomialIdeal,
    i: i64,
    d: &Bidegree,
    field: FieldSpec,
) -> Result<usize> {
    let p = ideal.partition();
    if d.a.len() != p.m() {
        return Err(Error::DegreeLength { expected: p.m(), got: d.a.len() });
    }
    if d.b.len() != p.n() {
        return Err(Error::DegreeLength { expected: p.n(), got: d.b.len() });
    }
    let supports = d.support_sets();
    if !d.a_nonnegative() || supports.h_b != 0 {
        return Ok(0);
    }
    let delta = stanley_reisner(ideal)?;
    let (m, n) = (p.m(), p.n());
    let w_mask = (((1u64 << n) - 1) as u32) << m;
    let fg = supports.n_a | (supports.g_b << m);
    let linked = delta.link(fg).restrict(w_mask);
    let fcard = supports.g_b.count_ones() as i64;
    Ok(reduced_homology_dims(&linked, field).dim_at(i - fcard - 1))
}

/// Hilbert series of `H^i_P(R)` for an arbitrary monomial ideal.
pub fn fine_series_monomial(
    ideal: &MonomialIdeal,
    i: i64,
    field: FieldSpec,
    mode: SeriesMode,
) -> Result<RationalSeries> {
    match mode {
        SeriesMode::PerPattern => per_pattern_series(ideal, i, field),
        SeriesMode::Printed => printed_series(ideal, i, field),
    }
}

fn per_pattern_series(ideal: &MonomialIdeal, i: i64, field: FieldSpec) -> Result<RationalSeries> {
    let p = ideal.partition();
    let (m, n) = (p.m(), p.n());
    let (rho, sigma) = ideal.rho_sigma();
    let mut series = RationalSeries::empty(Grading::Fine, p.all_names(), m);
    let mut cache = HomologyCache::new();
    for f_mask in 0..(1u64 << n) {
        let f_mask = f_mask as u32;
        let fcard = f_mask.count_ones() as i64;
        let free: Vec<usize> = (0..n).filter(|j| f_mask & (1 << j) == 0).collect();
        // a free y_j with rho_j = 0 admits no surviving b_j value
        if free.iter().any(|&j| rho[j] == 0) {
            continue;
        }
        let a_ranges: Vec<i64> = sigma.iter().map(|&s| s as i64 + 1).collect();
        let b_ranges: Vec<i64> = free.iter().map(|&j| rho[j] as i64).collect();
        for a_hat in enumerate_box(&a_ranges) {
            for b_hat in enumerate_box(&b_ranges) {
                let mut b = vec![-1i64; n];
                for (pos, &j) in free.iter().enumerate() {
                    b[j] = b_hat[pos];
                }
                let dc = takayama_complex(ideal, &a_hat, &b, f_mask)?;
                let d = cache.dim_at(&dc, i - fcard - 1, field);
                if d == 0 {
                    continue;
                }
                let mut t = SeriesTerm {
                    coeff: d as i64,
                    exps: vec![0; m + n],
                    up: vec![0; m + n],
                    down: vec![0; m + n],
                };
                for v in 0..m {
                    t.exps[v] = a_hat[v];
                    if a_hat[v] == sigma[v] as i64 {
                        t.up[v] = 1;
                    }
                }
                for j in 0..n {
                    if f_mask & (1 << j) != 0 {
                        t.exps[m + j] = -1;
                        t.down[m + j] = 1;
                    } else {
                        t.exps[m + j] = b[j];
                    }
                }
                series.push(t);
            }
        }
    }
    series.normalize();
    Ok(series)
}

/// All integer vectors with `0 <= v[k] < ranges[k]`.
fn enumerate_box(ranges: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &r in ranges {
        let mut next = Vec::with_capacity(out.len() * r.max(0) as usize);
        for prefix in &out {
            for v in 0..r {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Representative bidegree for the closed product form: deep inside the
/// region `N_a = G`, `a_i >= sigma_i`, `G_b = F`, `b_j = rho_j - 1` off `F`.
fn representative(
    ideal: &MonomialIdeal,
    f_mask: u32,
    g_mask: u32,
) -> (Vec<i64>, Vec<i64>) {
    let p = ideal.partition();
    let (rho, sigma) = ideal.rho_sigma();
    let a: Vec<i64> = (0..p.m())
        .map(|v| if g_mask & (1 << v) != 0 { (sigma[v] as i64).max(1) } else { 0 })
        .collect();
    let b: Vec<i64> = (0..p.n())
        .map(|j| if f_mask & (1 << j) != 0 { -1 } else { (rho[j] as i64 - 1).max(0) })
        .collect();
    (a, b)
}

fn printed_series(ideal: &MonomialIdeal, i: i64, field: FieldSpec) -> Result<RationalSeries> {
    let p = ideal.partition();
    let (m, n) = (p.m(), p.n());
    let (rho, sigma) = ideal.rho_sigma();
    let delta = stanley_reisner(&ideal.radical())?;
    let mut series = RationalSeries::empty(Grading::Fine, p.all_names(), m);
    let mut cache = HomologyCache::new();
    for f_mask in 0..(1u64 << n) {
        let f_mask = f_mask as u32;
        if !delta.contains(f_mask << m) {
            continue;
        }
        let fcard = f_mask.count_ones() as i64;
        for g_mask in 0..(1u64 << m) {
            let g_mask = g_mask as u32;
            let (a, b) = representative(ideal, f_mask, g_mask);
            let dc = takayama_complex(ideal, &a, &b, f_mask)?;
            let d = cache.dim_at(&dc, i - fcard - 1, field);
            if d == 0 {
                continue;
            }
            // the finite factors (1-s^-sigma)/(1-s^-1) and (1-t^rho)/(1-t)
            // vanish at sigma_i = 0 / rho_j = 0
            if (0..m).any(|v| g_mask & (1 << v) == 0 && sigma[v] == 0) {
                continue;
            }
            if free_rho_zero(&rho, f_mask, n) {
                continue;
            }
            let mut base = SeriesTerm {
                coeff: d as i64,
                exps: vec![0; m + n],
                up: vec![0; m + n],
                down: vec![0; m + n],
            };
            for v in mask_bits(g_mask, m) {
                base.exps[v] = 1;
                base.up[v] = 1;
            }
            for j in mask_bits(f_mask, n) {
                base.exps[m + j] = -1;
                base.down[m + j] = 1;
            }
            let mut terms = vec![base];
            for v in (0..m).filter(|v| g_mask & (1 << *v) == 0) {
                terms = expand_finite(&terms, v, -(sigma[v] as i64 - 1), 0);
            }
            for j in (0..n).filter(|j| f_mask & (1 << *j) == 0) {
                terms = expand_finite(&terms, m + j, 0, rho[j] as i64 - 1);
            }
            for t in terms {
                series.push(t);
            }
        }
    }
    series.normalize();
    Ok(series)
}

fn free_rho_zero(rho: &[u32], f_mask: u32, n: usize) -> bool {
    (0..n).any(|j| f_mask & (1 << j) == 0 && rho[j] == 0)
}

/// Multiplies every term by the finite polynomial `sum_{e=lo}^{hi} v^e`.
fn expand_finite(terms: &[SeriesTerm], var: usize, lo: i64, hi: i64) -> Vec<SeriesTerm> {
    let mut out = Vec::with_capacity(terms.len() * (hi - lo + 1).max(0) as usize);
    for t in terms {
        for e in lo..=hi {
            let mut s = t.clone();
            s.exps[var] += e;
            out.push(s);
        }
    }
    out
}

/// Regrades a fine series to the coarse `(s, t)` bigrading by substituting
/// `s_i -> s`, `t_j -> t`.
pub fn coarse_series(fine: &RationalSeries) -> Result<RationalSeries> {
    if fine.grading != Grading::Fine {
        return Err(Error::UnsupportedSeries("expected a fine-graded series".into()));
    }
    let m = fine.x_count;
    let mut out =
        RationalSeries::empty(Grading::Coarse, vec!["s".into(), "t".into()], 1);
    for t in &fine.terms {
        let sum_block = |v: &Vec<i64>| -> (i64, i64) {
            (v[..m].iter().sum(), v[m..].iter().sum())
        };
        let (es, et) = sum_block(&t.exps);
        let up: Vec<i64> = t.up.iter().map(|&u| u as i64).collect();
        let down: Vec<i64> = t.down.iter().map(|&u| u as i64).collect();
        let (gs, gt) = sum_block(&up);
        let (fs, ft) = sum_block(&down);
        out.push(SeriesTerm {
            coeff: t.coeff,
            exps: vec![es, et],
            up: vec![gs as u8, gt as u8],
            down: vec![fs as u8, ft as u8],
        });
    }
    out.normalize();
    Ok(out)
}

/// Which realization of the coarse component dimension to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoarseMode {
    /// Coefficient extraction from the per-pattern coarse series;
    /// authoritative.
    Expansion,
    /// The closed binomial sum; exact for squarefree ideals, comparison-only
    /// otherwise.
    BinomialFormula,
}

/// Dimension of the `(k, j)` coarse component of `H^i_P(R)`.
pub fn component_dim_coarse(
    ideal: &MonomialIdeal,
    i: i64,
    k: i64,
    j: i64,
    field: FieldSpec,
    mode: CoarseMode,
) -> Result<i64> {
    match mode {
        CoarseMode::Expansion => {
            let fine = per_pattern_series(ideal, i, field)?;
            Ok(coarse_series(&fine)?.coefficient_at(&[k, j]))
        }
        CoarseMode::BinomialFormula => binomial_dim(ideal, i, k, j, field),
    }
}

fn binomial_dim(ideal: &MonomialIdeal, i: i64, k: i64, j: i64, field: FieldSpec) -> Result<i64> {
    let p = ideal.partition();
    let (m, n) = (p.m(), p.n());
    let (rho, sigma) = ideal.rho_sigma();
    let squarefree = ideal.is_squarefree();
    let delta = stanley_reisner(&ideal.radical())?;
    let w_mask = (((1u64 << n) - 1) as u32) << m;
    let mut cache = HomologyCache::new();
    let mut total: i64 = 0;
    for f_mask in 0..(1u64 << n) {
        let f_mask = f_mask as u32;
        if !delta.contains(f_mask << m) {
            continue;
        }
        let fcard = f_mask.count_ones() as i64;
        let b_poly = if squarefree {
            vec![1i64]
        } else {
            finite_product((0..n).filter(|j| f_mask & (1 << *j) == 0).map(|j| rho[j] as i64))
        };
        for g_mask in 0..(1u64 << m) {
            let g_mask = g_mask as u32;
            let gcard = g_mask.count_ones() as i64;
            let d = if squarefree {
                let linked = delta.link(g_mask | (f_mask << m)).restrict(w_mask);
                cache.dim_at(&linked, i - fcard - 1, field)
            } else {
                let (a, b) = representative(ideal, f_mask, g_mask);
                let dc = takayama_complex(ideal, &a, &b, f_mask)?;
                cache.dim_at(&dc, i - fcard - 1, field)
            };
            if d == 0 {
                continue;
            }
            let a_poly = if squarefree {
                vec![1i64]
            } else {
                finite_product(
                    (0..m).filter(|v| g_mask & (1 << *v) == 0).map(|v| sigma[v] as i64),
                )
            };
            let s_sum: i64 = a_poly
                .iter()
                .enumerate()
                .map(|(r, &c)| c * ext_binom(k + r as i64 - 1, gcard - 1))
                .sum();
            let t_sum: i64 = b_poly
                .iter()
                .enumerate()
                .map(|(h, &c)| c * ext_binom(h as i64 - j - 1, fcard - 1))
                .sum();
            total += d as i64 * s_sum * t_sum;
        }
    }
    Ok(total)
}

/// Coefficients of `prod (1 + x + ... + x^(len-1))` over the given lengths;
/// the empty product is `[1]`, a zero length gives the zero polynomial.
fn finite_product(lengths: impl Iterator<Item = i64>) -> Vec<i64> {
    let mut poly = vec![1i64];
    for len in lengths {
        if len <= 0 {
            return Vec::new();
        }
        let mut next = vec![0i64; poly.len() + len as usize - 1];
        for (d, &c) in poly.iter().enumerate() {
            for e in 0..len as usize {
                next[d + e] += c;
            }
        }
        poly = next;
    }
    poly
}

/// The restriction of the ideal to its y-only generators, i.e. `I n K[y]`,
/// presented over a pure-y partition.
pub fn y_restriction(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let p = ideal.partition();
    let partition = VariablePartition::new(Vec::new(), p.y_names().to_vec())?;
    let gens: Vec<Monomial> = ideal
        .generators()
        .iter()
        .filter(|g| g.x_support() == 0)
        .map(|g| Monomial::new(Vec::new(), g.y_exponents().to_vec()))
        .collect();
    MonomialIdeal::new(partition, gens)
}

/// Hilbert series of `H^i_m(K[y]/(I n K[y]))` in the single coarse variable
/// `t`: the `m = 0` specialization of the general machinery.
pub fn ordinary_slice_series(
    ideal: &MonomialIdeal,
    i: i64,
    field: FieldSpec,
) -> Result<RationalSeries> {
    let sub = y_restriction(ideal)?;
    let fine = per_pattern_series(&sub, i, field)?;
    let mut out = RationalSeries::empty(Grading::Coarse, vec!["t".into()], 0);
    for t in &fine.terms {
        out.push(SeriesTerm {
            coeff: t.coeff,
            exps: vec![t.exps.iter().sum()],
            up: vec![t.up.iter().sum()],
            down: vec![t.down.iter().sum()],
        });
    }
    out.normalize();
    Ok(out)
}

/// Depth and Krull dimension of the Stanley-Reisner ring of a complex, read
/// off the vanishing range of ordinary local cohomology.
pub fn depth_and_dim(delta_w: &SimplicialComplex, field: FieldSpec) -> Result<(i64, i64)> {
    if delta_w.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = delta_w.vertex_count();
    if n == 0 {
        return Ok((0, 0));
    }
    let ideal = complex_to_ideal(delta_w)?;
    let mut depth = None;
    for i in 0..=(n as i64) {
        if !ordinary_slice_series(&ideal, i, field)?.is_zero() {
            depth = Some(i);
            break;
        }
    }
    let dim = delta_w.dim().map_or(0, |d| d + 1);
    Ok((depth.unwrap_or(dim), dim))
}

/// The Stanley-Reisner ideal of a complex, over a pure-y partition.
pub fn complex_to_ideal(delta: &SimplicialComplex) -> Result<MonomialIdeal> {
    let n = delta.vertex_count();
    let partition = VariablePartition::new(Vec::new(), delta.labels().to_vec())?;
    let mut gens = Vec::new();
    for mask in 0..(1u64 << n) {
        let mask = mask as u32;
        if !delta.contains(mask) {
            let ys = (0..n).map(|j| u32::from(mask & (1 << j) != 0)).collect();
            gens.push(Monomial::new(Vec::new(), ys));
        }
    }
    MonomialIdeal::new(partition, gens)
}

/// Compares per-pattern coefficient extraction with the strand oracle over
/// the standard box `a in [0, sigma+2]^m, b in [-4, rho]^n` for each
/// `i in [0, n]`.  Returns the first mismatch, if any.
pub fn check_box(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    a_pad: i64,
    b_low: i64,
) -> Result<Option<BoxMismatch>> {
    check_box_with(ideal, field, a_pad, b_low, 0)
}

/// `check_box` with a fault-injection offset added to every series value;
/// a nonzero `perturb` must produce a mismatch, which lets the harness
/// verify its own failure path.
pub fn check_box_with(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    a_pad: i64,
    b_low: i64,
    perturb: i64,
) -> Result<Option<BoxMismatch>> {
    let p = ideal.partition();
    let n = p.n();
    let (rho, sigma) = ideal.rho_sigma();
    let a_ranges: Vec<i64> = sigma.iter().map(|&s| s as i64 + a_pad + 1).collect();
    let b_spans: Vec<i64> = rho.iter().map(|&r| r as i64 - b_low + 1).collect();
    let mut oracle = crate::cech::OracleCache::new();
    for i in 0..=(n as i64) {
        let series = per_pattern_series(ideal, i, field)?;
        for a in enumerate_box(&a_ranges) {
            for b_off in enumerate_box(&b_spans) {
                let b: Vec<i64> = b_off.iter().map(|&v| v + b_low).collect();
                let d = Bidegree::new(a.clone(), b.clone());
                let from_series = series.coefficient_at(
                    &a.iter().chain(b.iter()).copied().collect::<Vec<_>>(),
                ) + perturb;
                let from_oracle = oracle.dims(ideal, &d, field);
                let from_oracle = if (0..from_oracle.len() as i64).contains(&i) {
                    from_oracle[i as usize] as i64
                } else {
                    0
                };
                if from_series != from_oracle {
                    return Ok(Some(BoxMismatch {
                        i,
                        d,
                        series: from_series,
                        oracle: from_oracle,
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxMismatch {
    pub i: i64,
    pub d: Bidegree,
    pub series: i64,
    pub oracle: i64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VariablePartition;

    fn ideal(m: usize, n: usize, gens: &[(&[u32], &[u32])]) -> MonomialIdeal {
        let p = VariablePartition::with_counts(m, n).unwrap();
        let gens = gens
            .iter()
            .map(|(xs, ys)| Monomial::new(xs.to_vec(), ys.to_vec()))
            .collect();
        MonomialIdeal::new(p, gens).unwrap()
    }

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn squarefree_series_free_ring() {
        // I = 0, m = n = 1, i = 1: (1/(1-s1)) * t1^-1/(1-t1^-1)
        let id = ideal(1, 1, &[]);
        let s = fine_series_squarefree(&id, 1, q()).unwrap();
        let a = s.absorbed();
        assert_eq!(a.terms.len(), 1);
        let t = &a.terms[0];
        assert_eq!((t.coeff, &t.exps[..], &t.up[..], &t.down[..]),
                   (1, &[0, -1][..], &[1, 0][..], &[0, 1][..]));
        for k in 0..4 {
            for j in -4..1 {
                let expected = usize::from(j <= -1);
                assert_eq!(s.coefficient_at(&[k, j]) as usize, expected);
            }
        }
    }

    #[test]
    fn squarefree_series_two_points() {
        // I = (y1 y2), m = 0, i = 1: 1 + t1^-1/(1-t1^-1) + t2^-1/(1-t2^-1)
        let id = ideal(0, 2, &[(&[], &[1, 1])]);
        let s = fine_series_squarefree(&id, 1, q()).unwrap();
        assert_eq!(s.terms.len(), 3);
        assert_eq!(s.coefficient_at(&[0, 0]), 1);
        assert_eq!(s.coefficient_at(&[-3, 0]), 1);
        assert_eq!(s.coefficient_at(&[0, -2]), 1);
        assert_eq!(s.coefficient_at(&[-1, -1]), 0);
    }

    #[test]
    fn squarefree_series_vanishes_above_n() {
        let id = ideal(1, 2, &[(&[1], &[1, 0])]);
        assert!(fine_series_squarefree(&id, 3, q()).unwrap().is_zero());
    }

    #[test]
    fn component_dim_squarefree_examples() {
        let id = ideal(1, 1, &[]);
        let d = Bidegree::new(vec![2], vec![-3]);
        assert_eq!(component_dim_squarefree(&id, 1, &d, q()).unwrap(), 1);
        let pos = Bidegree::new(vec![2], vec![1]);
        assert_eq!(component_dim_squarefree(&id, 1, &pos, q()).unwrap(), 0);
        assert_eq!(component_dim_squarefree(&id, 0, &d, q()).unwrap(), 0);
    }

    #[test]
    fn per_pattern_y_squared() {
        // I = (y^2) in K[x, y]: H^0 = R itself, series (1 + t)/(1 - s)
        let id = ideal(1, 1, &[(&[0], &[2])]);
        let s = fine_series_monomial(&id, 0, q(), SeriesMode::PerPattern).unwrap();
        for k in -1..5 {
            for j in -2..4 {
                let expected = i64::from(k >= 0 && (0..2).contains(&j));
                assert_eq!(s.coefficient_at(&[k, j]), expected, "k={k} j={j}");
            }
        }
        let s1 = fine_series_monomial(&id, 1, q(), SeriesMode::PerPattern).unwrap();
        assert!(s1.is_zero());
    }

    #[test]
    fn per_pattern_matches_squarefree() {
        let cases: Vec<MonomialIdeal> = vec![
            ideal(1, 1, &[]),
            ideal(0, 2, &[(&[], &[1, 1])]),
            ideal(1, 2, &[(&[1], &[1, 0]), (&[0], &[1, 1])]),
            ideal(2, 2, &[(&[1, 1], &[0, 0]), (&[0, 1], &[1, 0])]),
        ];
        for id in &cases {
            for i in 0..=(id.partition().n() as i64) {
                let a = fine_series_squarefree(id, i, q()).unwrap().absorbed();
                let b = fine_series_monomial(id, i, q(), SeriesMode::PerPattern)
                    .unwrap()
                    .absorbed();
                assert_eq!(a, b, "i={i}");
            }
        }
    }

    #[test]
    fn coarse_series_examples() {
        let id = ideal(1, 1, &[]);
        let fine = fine_series_squarefree(&id, 1, q()).unwrap();
        let c = coarse_series(&fine).unwrap();
        assert_eq!(c.coefficient_at(&[2, -3]), 1);
        assert_eq!(c.coefficient_at(&[2, 0]), 0);

        let id2 = ideal(0, 2, &[(&[], &[1, 1])]);
        let c2 = coarse_series(&fine_series_squarefree(&id2, 1, q()).unwrap())
            .unwrap()
            .absorbed();
        // 1 + 2 t^-1/(1-t^-1)
        assert_eq!(c2.coefficient_at(&[0, 0]), 1);
        assert_eq!(c2.coefficient_at(&[0, -1]), 2);
        assert_eq!(c2.coefficient_at(&[0, -7]), 2);

        let empty = RationalSeries::empty(Grading::Fine, vec!["s1".into()], 1);
        assert!(coarse_series(&empty).unwrap().is_zero());
    }

    #[test]
    fn coarse_dim_modes_agree_on_squarefree() {
        let cases: Vec<MonomialIdeal> = vec![
            ideal(1, 1, &[]),
            ideal(0, 2, &[(&[], &[1, 1])]),
            ideal(1, 2, &[(&[1], &[1, 0]), (&[0], &[1, 1])]),
        ];
        for id in &cases {
            for i in 0..=(id.partition().n() as i64) {
                for k in -1..4 {
                    for j in -4..2 {
                        let e = component_dim_coarse(id, i, k, j, q(), CoarseMode::Expansion)
                            .unwrap();
                        let b = component_dim_coarse(
                            id, i, k, j, q(), CoarseMode::BinomialFormula,
                        )
                        .unwrap();
                        assert_eq!(e, b, "i={i} k={k} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn coarse_dim_examples() {
        let id = ideal(1, 1, &[]);
        assert_eq!(
            component_dim_coarse(&id, 1, 2, -3, q(), CoarseMode::Expansion).unwrap(),
            1
        );
        let id2 = ideal(0, 2, &[(&[], &[1, 1])]);
        assert_eq!(
            component_dim_coarse(&id2, 1, 0, -2, q(), CoarseMode::Expansion).unwrap(),
            2
        );
    }

    #[test]
    fn ordinary_slice_examples() {
        // two points
        let id = ideal(0, 2, &[(&[], &[1, 1])]);
        let s = ordinary_slice_series(&id, 1, q()).unwrap().absorbed();
        assert_eq!(s.coefficient_at(&[0]), 1);
        assert_eq!(s.coefficient_at(&[-5]), 2);
        // one point: K[y], H^1 = y^-1 K[y^-1]
        let id1 = ideal(0, 1, &[]);
        let s1 = ordinary_slice_series(&id1, 1, q()).unwrap();
        assert_eq!(s1.coefficient_at(&[-1]), 1);
        assert_eq!(s1.coefficient_at(&[0]), 0);
        assert!(ordinary_slice_series(&id1, 0, q()).unwrap().is_zero());
    }

    #[test]
    fn g_empty_part_is_ordinary_series() {
        let cases: Vec<MonomialIdeal> = vec![
            ideal(1, 2, &[(&[0], &[1, 1])]),
            ideal(2, 2, &[(&[0, 0], &[1, 1]), (&[1, 0], &[0, 1])]),
        ];
        for id in &cases {
            let m = id.partition().m();
            for i in 0..=(id.partition().n() as i64) {
                let fine = fine_series_squarefree(id, i, q()).unwrap();
                let mut filtered = RationalSeries::empty(
                    Grading::Fine,
                    fine.vars.clone(),
                    fine.x_count,
                );
                for t in &fine.terms {
                    if t.exps[..m].iter().all(|&e| e == 0)
                        && t.up[..m].iter().all(|&u| u == 0)
                    {
                        filtered.push(t.clone());
                    }
                }
                let mut coarse = RationalSeries::empty(Grading::Coarse, vec!["t".into()], 0);
                for t in &filtered.terms {
                    coarse.push(SeriesTerm {
                        coeff: t.coeff,
                        exps: vec![t.exps[m..].iter().sum()],
                        up: vec![t.up[m..].iter().sum()],
                        down: vec![t.down[m..].iter().sum()],
                    });
                }
                coarse.normalize();
                let ordinary = ordinary_slice_series(id, i, q()).unwrap();
                assert_eq!(coarse.absorbed(), ordinary.absorbed(), "i={i}");
            }
        }
    }

    #[test]
    fn depth_and_dim_examples() {
        let two_points = SimplicialComplex::from_facets(
            vec!["a".into(), "b".into()],
            &[0b01, 0b10],
        )
        .unwrap();
        assert_eq!(depth_and_dim(&two_points, q()).unwrap(), (1, 1));

        let full = SimplicialComplex::full_simplex(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(depth_and_dim(&full, q()).unwrap(), (2, 2));

        let triangle = SimplicialComplex::from_facets(
            vec!["a".into(), "b".into(), "c".into()],
            &[0b011, 0b101, 0b110],
        )
        .unwrap();
        assert_eq!(depth_and_dim(&triangle, q()).unwrap(), (2, 2));

        let void = SimplicialComplex::void(vec!["a".into()]);
        assert!(depth_and_dim(&void, q()).is_err());
    }

    #[test]
    fn nonvanishing_at_depth_and_dim() {
        let id = ideal(1, 2, &[(&[0], &[1, 1])]);
        let delta = stanley_reisner(&id).unwrap();
        let w = delta.restrict(0b110);
        let (depth, dim) = depth_and_dim(&w, q()).unwrap();
        for i in [depth, dim] {
            assert!(!fine_series_squarefree(&id, i, q()).unwrap().is_zero());
        }
    }

    #[test]
    fn check_box_free_ring() {
        let id = ideal(1, 1, &[]);
        assert_eq!(check_box(&id, q(), 2, -4).unwrap(), None);
    }

    #[test]
    fn check_box_y_squared() {
        let id = ideal(1, 1, &[(&[0], &[2])]);
        assert_eq!(check_box(&id, q(), 2, -4).unwrap(), None);
    }

    #[test]
    fn printed_mode_emits_product() {
        // squarefree with all sigma = rho = 1: printed form should agree
        // with the squarefree series
        let id = ideal(1, 1, &[(&[1], &[1])]);
        for i in 0..=1 {
            let a = fine_series_squarefree(&id, i, q()).unwrap().absorbed();
            let b = fine_series_monomial(&id, i, q(), SeriesMode::Printed)
                .unwrap()
                .absorbed();
            assert_eq!(a, b, "i={i}");
        }
    }
}
