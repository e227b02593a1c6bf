//! Tameness analysis of the coarse grading: for each cohomological index
//! `i`, the `t`-slice of the coarse series is `Q_j(s)/(1-s)^m` with numerator
//! coefficients that are polynomials in `j` for `j` small enough.  The
//! vanishing order of `Q_j` at `s = 1` is eventually constant, which yields
//! the asymptotic Krull dimension of the slices and a tameness verdict.

use crate::error::{Error, Result};
use crate::hilbert::{coarse_series, fine_series_monomial, SeriesMode};
use crate::homology::FieldSpec;
use crate::monomial::MonomialIdeal;
use crate::series::{ext_binom, Grading, RationalSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A polynomial in the slice index `j` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialInJ {
    /// Coefficient of `j^r` at position `r`; no trailing zeros.
    coeffs: Vec<BigRational>,
}

impl PolynomialInJ {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self { coeffs: vec![c] };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, j: i64) -> BigRational {
        let x = BigRational::from(BigInt::from(j));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    pub fn add_assign(&mut self, other: &PolynomialInJ) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        self.trim();
    }

    pub fn scaled(&self, by: &BigRational) -> PolynomialInJ {
        let mut p = PolynomialInJ {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        };
        p.trim();
        p
    }

    /// Multiplies by the linear factor `c - j`.
    fn mul_linear(&mut self, c: BigRational) {
        if self.is_zero() {
            return;
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (r, a) in self.coeffs.iter().enumerate() {
            out[r] += a * &c;
            out[r + 1] -= a;
        }
        self.coeffs = out;
        self.trim();
    }

    /// All real roots `z` satisfy `|z| <= bound` (Cauchy).  None for the
    /// zero or constant polynomial.
    pub fn cauchy_root_bound(&self) -> Option<BigRational> {
        let d = self.degree()?;
        if d == 0 {
            return None;
        }
        let lead = &self.coeffs[d];
        let max_ratio = self.coeffs[..d]
            .iter()
            .map(|c| (c / lead).abs())
            .max()
            .unwrap_or_else(BigRational::zero);
        Some(max_ratio + BigRational::one())
    }
}

/// `binom(beta - j - 1, r)` as a polynomial in `j`:
/// `prod_{l=0}^{r-1} (beta - 1 - l - j) / r!`.
pub fn binom_in_j(beta: i64, r: usize) -> PolynomialInJ {
    let mut p = PolynomialInJ::constant(BigRational::one());
    let mut fact = BigInt::one();
    for l in 0..r {
        p.mul_linear(BigRational::from(BigInt::from(beta - 1 - l as i64)));
        fact *= BigInt::from(l as i64 + 1);
    }
    p.scaled(&BigRational::new(BigInt::one(), fact))
}

/// The symbolic `t`-slice of a coarse series: for `j <= j_stable`,
/// `H_j(s) = Q_j(s)/(1-s)^m` with `Q_j(s) = sum_r B_r(j) s^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicedSeries {
    /// `B_r(j)` at position `r`.
    pub numerator: Vec<PolynomialInJ>,
    /// Power of `(1-s)` in the denominator (the x count `m`).
    pub denominator_exponent: usize,
    /// The symbolic form is exact for all `j <= j_stable`.
    pub j_stable: i64,
}

impl SlicedSeries {
    /// Coefficient of `s^k` in `Q_j(s)/(1-s)^m` for a concrete `j`; only
    /// meaningful for `j <= j_stable`.
    pub fn coefficient_at(&self, k: i64, j: i64) -> BigRational {
        let m = self.denominator_exponent as i64;
        let mut acc = BigRational::zero();
        for (r, b) in self.numerator.iter().enumerate() {
            let binom = ext_binom(k - r as i64 + m - 1, m - 1);
            if binom != 0 {
                acc += b.eval(j) * BigRational::from(BigInt::from(binom));
            }
        }
        acc
    }
}

/// Extracts the symbolic slice from a coarse series; `m` is the x count of
/// the original partition.
pub fn slice_symbolically(coarse: &RationalSeries, m: usize) -> Result<SlicedSeries> {
    if coarse.grading != Grading::Coarse || coarse.vars.len() != 2 {
        return Err(Error::UnsupportedSeries("expected a coarse (s, t) series".into()));
    }
    let mut numerator: Vec<PolynomialInJ> = Vec::new();
    let mut j_stable = i64::MAX;
    for t in &coarse.terms {
        let (es, et) = (t.exps[0], t.exps[1]);
        let (gs, gt) = (t.up[0] as usize, t.up[1] as usize);
        let (fs, ft) = (t.down[0] as usize, t.down[1] as usize);
        if gt != 0 || fs != 0 {
            return Err(Error::UnsupportedSeries(
                "t must expand toward -inf and s toward +inf".into(),
            ));
        }
        if es < 0 || gs > m {
            return Err(Error::UnsupportedSeries(
                "s-factor outside the (1-s)^m denominator range".into(),
            ));
        }
        // symbolic coefficient of t^j and its validity range
        let (tpoly, valid_to) = if ft >= 1 {
            (binom_in_j(et + ft as i64, ft - 1), et)
        } else {
            (PolynomialInJ::zero(), et - 1)
        };
        j_stable = j_stable.min(valid_to);
        if tpoly.is_zero() {
            continue;
        }
        let coeff = tpoly.scaled(&BigRational::from(BigInt::from(t.coeff)));
        // s^es (1-s)^(m-gs) spread over numerator powers
        let spread = m - gs;
        for l in 0..=spread {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            let c = sign * ext_binom(spread as i64, l as i64);
            let r = es as usize + l;
            if numerator.len() <= r {
                numerator.resize(r + 1, PolynomialInJ::zero());
            }
            let add = coeff.scaled(&BigRational::from(BigInt::from(c)));
            numerator[r].add_assign(&add);
        }
    }
    while numerator.last().is_some_and(|p| p.is_zero()) {
        numerator.pop();
    }
    if j_stable == i64::MAX {
        j_stable = -1;
    }
    Ok(SlicedSeries { numerator, denominator_exponent: m, j_stable })
}

/// Values of the derivatives of `Q_j(s)` at `s = 1`:
/// `R_k(j) = sum_r B_r(j) r(r-1)...(r-k+1)`, for `k = 0..=deg Q_j`.
pub fn taylor_at_one(sliced: &SlicedSeries) -> Vec<PolynomialInJ> {
    let deg = sliced.numerator.len().max(1) - 1;
    let mut out = Vec::with_capacity(deg + 1);
    for k in 0..=deg.max(sliced.denominator_exponent) {
        let mut rk = PolynomialInJ::zero();
        for (r, b) in sliced.numerator.iter().enumerate() {
            let mut fall = BigInt::one();
            for l in 0..k {
                fall *= BigInt::from(r as i64 - l as i64);
            }
            if fall.is_zero() {
                continue;
            }
            rk.add_assign(&b.scaled(&BigRational::from(fall)));
        }
        out.push(rk);
    }
    out
}

/// Krull dimension of a graded slice, with `-inf` for the zero module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceDim {
    Finite(i64),
    NegInf,
}

impl Serialize for SliceDim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SliceDim::Finite(v) => s.serialize_i64(*v),
            SliceDim::NegInf => s.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for SliceDim {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(SliceDim::Finite)
                .ok_or_else(|| D::Error::custom("expected an integer dimension")),
            serde_json::Value::String(s) if s == "-inf" => Ok(SliceDim::NegInf),
            _ => Err(D::Error::custom("expected an integer or \"-inf\"")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    EventuallyZero,
    EventuallyNonzero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub j: i64,
    pub dim: SliceDim,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TamenessReport {
    pub i: i64,
    pub verdict: Verdict,
    /// The reported behavior holds for all `j <= j0`.
    pub j0: i64,
    pub asymptotic_krull_dim: SliceDim,
    /// Vanishing order of `Q_j` at `s = 1`; absent for the zero module.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c: Option<usize>,
    /// The root bound used to push `j0` past all roots of `R_c`.
    pub bound_used: String,
    /// Largest `j >= j0` at which the asymptotic dimension already holds.
    pub empirical_onset: i64,
    pub witnesses: Vec<Witness>,
}

/// Full tameness analysis for one cohomological index.
pub fn tameness_report(
    ideal: &MonomialIdeal,
    i: i64,
    field: FieldSpec,
) -> Result<TamenessReport> {
    let m = ideal.partition().m();
    let fine = fine_series_monomial(ideal, i, field, SeriesMode::PerPattern)?;
    let coarse = coarse_series(&fine)?;
    let sliced = slice_symbolically(&coarse, m)?;
    let rs = taylor_at_one(&sliced);
    let c = rs.iter().position(|r| !r.is_zero());
    let report = match c {
        None => {
            let j0 = sliced.j_stable;
            TamenessReport {
                i,
                verdict: Verdict::EventuallyZero,
                j0,
                asymptotic_krull_dim: SliceDim::NegInf,
                c: None,
                bound_used: "none (all R_k vanish identically)".into(),
                empirical_onset: empirical_onset(&coarse, m, j0, SliceDim::NegInf),
                witnesses: witnesses(&coarse, m, j0),
            }
        }
        Some(c) => {
            let rc = &rs[c];
            let (j0, bound_used) = match rc.cauchy_root_bound() {
                None => (sliced.j_stable, "none (R_c is a nonzero constant)".to_string()),
                Some(bound) => {
                    let jb = (-BigRational::one() - &bound).floor().to_integer();
                    let jb = jb.to_i64().ok_or_else(|| {
                        Error::InvalidInput("root bound overflows i64".into())
                    })?;
                    (sliced.j_stable.min(jb), format!("cauchy: 1 + max|a_r/a_d| = {bound}"))
                }
            };
            let dim = SliceDim::Finite(m as i64 - c as i64);
            TamenessReport {
                i,
                verdict: Verdict::EventuallyNonzero,
                j0,
                asymptotic_krull_dim: dim,
                c: Some(c),
                bound_used,
                empirical_onset: empirical_onset(&coarse, m, j0, dim),
                witnesses: witnesses(&coarse, m, j0),
            }
        }
    };
    Ok(report)
}

fn witnesses(coarse: &RationalSeries, m: usize, j0: i64) -> Vec<Witness> {
    [j0, j0 - 1, j0 - 5]
        .iter()
        .map(|&j| Witness { j, dim: krull_dim_of_slice(coarse, m, j) })
        .collect()
}

fn empirical_onset(coarse: &RationalSeries, m: usize, j0: i64, target: SliceDim) -> i64 {
    let mut onset = j0;
    for j in (j0 + 1)..=(j0 + 50) {
        if krull_dim_of_slice(coarse, m, j) == target {
            onset = j;
        } else {
            break;
        }
    }
    onset
}

/// Direct Krull dimension of the `j`-th slice: build `Q_j(s)` explicitly
/// from coarse coefficients and count the multiplicity of the root `s = 1`.
pub fn krull_dim_direct(
    ideal: &MonomialIdeal,
    i: i64,
    j: i64,
    field: FieldSpec,
) -> Result<SliceDim> {
    let m = ideal.partition().m();
    let fine = fine_series_monomial(ideal, i, field, SeriesMode::PerPattern)?;
    let coarse = coarse_series(&fine)?;
    Ok(krull_dim_of_slice(&coarse, m, j))
}

fn krull_dim_of_slice(coarse: &RationalSeries, m: usize, j: i64) -> SliceDim {
    // Q_j has degree at most max s-exponent + m
    let max_es = coarse.terms.iter().map(|t| t.exps[0]).max().unwrap_or(0).max(0);
    let deg = max_es as usize + m;
    let h: Vec<i64> = (0..=deg as i64 + m as i64)
        .map(|k| coarse.coefficient_at(&[k, j]))
        .collect();
    let mut q = vec![0i64; deg + 1];
    for (r, qr) in q.iter_mut().enumerate() {
        for l in 0..=m.min(r) {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            *qr += sign * ext_binom(m as i64, l as i64) * h[r - l];
        }
    }
    if q.iter().all(|&c| c == 0) {
        return SliceDim::NegInf;
    }
    let mut mult = 0usize;
    let mut poly = q;
    while poly.iter().sum::<i64>() == 0 {
        // synthetic division by (s - 1)
        let mut quotient = vec![0i64; poly.len() - 1];
        let mut carry = 0i64;
        for r in (1..poly.len()).rev() {
            carry += poly[r];
            quotient[r - 1] = carry;
        }
        poly = quotient;
        mult += 1;
    }
    SliceDim::Finite(m as i64 - mult as i64)
}
