//! Acceptance gate: one test per criterion, each printing a pass line on
//! success.  All comparisons are exact integer equalities; the random
//! streams are seeded, so every run checks the same instances.

use locoh::cech::OracleCache;
use locoh::hilbert::{
    check_box, coarse_series, complex_to_ideal, component_dim_coarse,
    component_dim_squarefree, depth_and_dim, fine_series_monomial,
    fine_series_squarefree, ordinary_slice_series, y_restriction, CoarseMode, SeriesMode,
};
use locoh::homology::{chain_complex, reduced_homology_dims, FieldSpec};
use locoh::monomial::{Bidegree, Monomial, MonomialIdeal, VariablePartition};
use locoh::series::{ext_binom, Grading, RationalSeries, SeriesTerm};
use locoh::simplicial::{stanley_reisner, SimplicialComplex};
use locoh::tame::{krull_dim_direct, tameness_report, SliceDim, Verdict};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

const Q: FieldSpec = FieldSpec::Rationals;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random squarefree ideal; sizes biased small so full-box sweeps stay fast.
fn random_squarefree(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let total = *[2, 2, 3, 3, 4, 4, 5, 5, 6, 7].choose(rng).unwrap();
    let n = rng.gen_range(1..=total - 1);
    let m = total - n;
    let p = VariablePartition::with_counts(m, n).unwrap();
    let gen_count = rng.gen_range(0..=total);
    let gens = (0..gen_count)
        .map(|_| {
            let xs = (0..m).map(|_| u32::from(rng.gen_bool(0.4))).collect();
            let ys = (0..n).map(|_| u32::from(rng.gen_bool(0.4))).collect();
            Monomial::new(xs, ys)
        })
        .filter(|g: &Monomial| !g.is_unit())
        .collect();
    MonomialIdeal::new(p, gens).unwrap()
}

/// Random monomial ideal with exponents at most 3.
fn random_monomial(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let total = *[2, 2, 2, 3, 3, 3, 4, 4, 5, 6].choose(rng).unwrap();
    let n = rng.gen_range(1..=total - 1);
    let m = total - n;
    let p = VariablePartition::with_counts(m, n).unwrap();
    let gen_count = rng.gen_range(0..=total);
    let exp = |rng: &mut ChaCha8Rng| *[0, 0, 0, 1, 1, 2, 3].choose(rng).unwrap() as u32;
    let gens = (0..gen_count)
        .map(|_| {
            let xs = (0..m).map(|_| exp(rng)).collect();
            let ys = (0..n).map(|_| exp(rng)).collect();
            Monomial::new(xs, ys)
        })
        .filter(|g: &Monomial| !g.is_unit())
        .collect();
    MonomialIdeal::new(p, gens).unwrap()
}

/// Random complex on up to `max_vertices` vertices, generated from random
/// facets; may be VOID or IRRELEVANT.
fn random_complex(rng: &mut ChaCha8Rng, max_vertices: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let labels: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
    match rng.gen_range(0..10) {
        0 => SimplicialComplex::void(labels),
        1 => SimplicialComplex::irrelevant(labels),
        _ => {
            let facet_count = rng.gen_range(1..=n + 2);
            let facets: Vec<u32> = (0..facet_count)
                .map(|_| rng.gen_range(0..(1u32 << n)))
                .collect();
            SimplicialComplex::from_facets(labels, &facets).unwrap()
        }
    }
}

fn enumerate_box(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &(lo, hi) in ranges {
        let mut next = Vec::new();
        for prefix in &out {
            for v in lo..=hi {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

#[test]
fn criterion_01_oracle_equivalence_squarefree() {
    let mut rng = rng(101);
    let mut checked: u64 = 0;
    for _ in 0..200 {
        let ideal = random_squarefree(&mut rng);
        let (m, n) = (ideal.partition().m(), ideal.partition().n());
        let mut oracle = OracleCache::new();
        // the formula reads only the sign pattern of (a, b), so its values
        // are memoized by support; the oracle is consulted at every bidegree
        let mut formula_memo: HashMap<(u32, u32, u32), Vec<usize>> = HashMap::new();
        let a_box = vec![(0i64, 3i64); m];
        let b_box = vec![(-4i64, 1i64); n];
        for a in enumerate_box(&a_box) {
            for b in enumerate_box(&b_box) {
                let d = Bidegree::new(a.clone(), b.clone());
                let s = d.support_sets();
                let key = (s.n_a, s.g_b, s.h_b);
                let formula: Vec<usize> = formula_memo
                    .entry(key)
                    .or_insert_with(|| {
                        (0..=n as i64)
                            .map(|i| component_dim_squarefree(&ideal, i, &d, Q).unwrap())
                            .collect()
                    })
                    .clone();
                let oracle_vals = oracle.dims(&ideal, &d, Q);
                for i in 0..=n {
                    let o = oracle_vals.get(i).copied().unwrap_or(0);
                    assert_eq!(formula[i], o, "i={i} d={d:?} gens={:?}", ideal.generators());
                    checked += 1;
                }
            }
        }
    }
    println!("criterion 1 PASS: squarefree formula = oracle on {checked} (i, bidegree) pairs");
}

#[test]
fn criterion_02_oracle_equivalence_general() {
    let mut rng = rng(202);
    for t in 0..100 {
        let ideal = random_monomial(&mut rng);
        let mismatch = check_box(&ideal, Q, 2, -4).unwrap();
        assert!(mismatch.is_none(), "case {t}: {mismatch:?} gens={:?}", ideal.generators());
    }
    println!("criterion 2 PASS: per-pattern series = oracle over the full box on 100 ideals");
}

/// Classical Hochster series of H^i_m(K[Delta]), coded directly from the
/// definition: sum over faces F of dim H~_{i-|F|-1}(lk F) prod t^-1/(1-t^-1).
fn classical_hochster(delta: &SimplicialComplex, i: i64, field: FieldSpec) -> RationalSeries {
    let n = delta.vertex_count();
    let labels = delta.labels().to_vec();
    let mut series = RationalSeries::empty(Grading::Fine, labels, 0);
    for f in delta.faces().collect::<Vec<_>>() {
        let fcard = f.count_ones() as i64;
        let d = reduced_homology_dims(&delta.link(f), field).dim_at(i - fcard - 1);
        if d == 0 {
            continue;
        }
        let mut t = SeriesTerm {
            coeff: d as i64,
            exps: vec![0; n],
            up: vec![0; n],
            down: vec![0; n],
        };
        for j in 0..n {
            if f & (1 << j) != 0 {
                t.exps[j] = -1;
                t.down[j] = 1;
            }
        }
        series.push(t);
    }
    series.normalize();
    series
}

#[test]
fn criterion_03_hochster_specialization() {
    let mut rng = rng(303);
    let mut done = 0;
    while done < 50 {
        let delta = random_complex(&mut rng, 5);
        if delta.is_void() {
            continue;
        }
        let ideal = complex_to_ideal(&delta).unwrap();
        if ideal.is_unit_ideal() {
            continue;
        }
        let n = delta.vertex_count() as i64;
        for i in 0..=n {
            let ours = fine_series_squarefree(&ideal, i, Q).unwrap();
            let classical = classical_hochster(&delta, i, Q);
            assert_eq!(ours, classical, "i={i}");
        }
        done += 1;
    }
    println!("criterion 3 PASS: m=0 series = classical Hochster formula on 50 complexes");
}

#[test]
fn criterion_04_takayama_specialization() {
    let mut rng = rng(404);
    for _ in 0..60 {
        let ideal = random_squarefree(&mut rng);
        for i in 0..=(ideal.partition().n() as i64) {
            let sf = fine_series_squarefree(&ideal, i, Q).unwrap().absorbed();
            let general = fine_series_monomial(&ideal, i, Q, SeriesMode::PerPattern)
                .unwrap()
                .absorbed();
            assert_eq!(sf, general, "i={i} gens={:?}", ideal.generators());
        }
    }
    println!("criterion 4 PASS: per-pattern mode = squarefree mode on 60 squarefree ideals");
}

#[test]
fn criterion_05_slice_identity() {
    let mut rng = rng(505);
    for _ in 0..40 {
        let ideal = random_squarefree(&mut rng);
        let n = ideal.partition().n() as i64;
        // independent right-hand side: coarse regrading of the classical
        // Hochster formula for Delta_W
        let y_ideal = y_restriction(&ideal).unwrap();
        let delta_w = stanley_reisner(&y_ideal).unwrap();
        for i in 0..=n {
            let classical = classical_hochster(&delta_w, i, Q);
            for j in -8..=2i64 {
                let rhs: i64 = classical
                    .terms
                    .iter()
                    .map(|t| {
                        let fcard = t.down.iter().map(|&u| u as i64).sum::<i64>();
                        t.coeff * ext_binom(-j - 1, fcard - 1)
                    })
                    .sum();
                let lhs =
                    component_dim_coarse(&ideal, i, 0, j, Q, CoarseMode::Expansion).unwrap();
                assert_eq!(lhs, rhs, "i={i} j={j} gens={:?}", ideal.generators());
            }
        }
    }
    println!("criterion 5 PASS: (0, j) coarse slice = ordinary local cohomology of K[Delta_W]");
}

#[test]
fn criterion_06_decomposition() {
    let mut rng = rng(606);
    for _ in 0..40 {
        let ideal = random_squarefree(&mut rng);
        let m = ideal.partition().m();
        for i in 0..=(ideal.partition().n() as i64) {
            let fine = fine_series_squarefree(&ideal, i, Q).unwrap();
            let mut g_empty = RationalSeries::empty(Grading::Coarse, vec!["t".into()], 0);
            for t in &fine.terms {
                if t.exps[..m].iter().all(|&e| e == 0) && t.up[..m].iter().all(|&u| u == 0) {
                    g_empty.push(SeriesTerm {
                        coeff: t.coeff,
                        exps: vec![t.exps[m..].iter().sum()],
                        up: vec![t.up[m..].iter().sum()],
                        down: vec![t.down[m..].iter().sum()],
                    });
                }
            }
            g_empty.normalize();
            let ordinary = ordinary_slice_series(&ideal, i, Q).unwrap();
            assert_eq!(g_empty.absorbed(), ordinary.absorbed(), "i={i}");
        }
    }
    println!("criterion 6 PASS: G-empty terms sum to the ordinary slice series");
}

#[test]
fn criterion_07_nonvanishing() {
    let mut rng = rng(707);
    let mut done = 0;
    while done < 60 {
        let ideal = random_squarefree(&mut rng);
        if ideal.is_unit_ideal() {
            continue;
        }
        let m = ideal.partition().m();
        let n = ideal.partition().n();
        let delta = stanley_reisner(&ideal).unwrap();
        let w_mask = (((1u64 << n) - 1) as u32) << m;
        let delta_w = delta.restrict(w_mask);
        if delta_w.is_void() {
            continue;
        }
        let (depth, dim) = depth_and_dim(&delta_w, Q).unwrap();
        for i in [depth, dim] {
            let series = fine_series_squarefree(&ideal, i, Q).unwrap();
            assert!(!series.is_zero(), "i={i} gens={:?}", ideal.generators());
        }
        done += 1;
    }
    println!("criterion 7 PASS: fine series nonzero at depth and dim of K[Delta_W], 60 inputs");
}

#[test]
fn criterion_08_tameness() {
    let mut inputs: Vec<MonomialIdeal> = Vec::new();
    let free = MonomialIdeal::zero(VariablePartition::with_counts(1, 1).unwrap());
    let y_sq = MonomialIdeal::new(
        VariablePartition::with_counts(1, 1).unwrap(),
        vec![Monomial::new(vec![0], vec![2])],
    )
    .unwrap();
    inputs.push(free.clone());
    inputs.push(y_sq.clone());
    let mut rng = rng(808);
    for _ in 0..8 {
        inputs.push(random_monomial(&mut rng));
    }
    for ideal in &inputs {
        for i in 0..=(ideal.partition().n() as i64) {
            let report = tameness_report(ideal, i, Q).unwrap();
            for j in (report.j0 - 20)..=report.j0 {
                let direct = krull_dim_direct(ideal, i, j, Q).unwrap();
                assert_eq!(direct, report.asymptotic_krull_dim, "i={i} j={j}");
                let nonzero = direct != SliceDim::NegInf;
                assert_eq!(
                    nonzero,
                    report.verdict == Verdict::EventuallyNonzero,
                    "i={i} j={j}"
                );
            }
        }
    }
    // worked closed forms
    let r = tameness_report(&free, 1, Q).unwrap();
    assert_eq!(r.asymptotic_krull_dim, SliceDim::Finite(1));
    assert_eq!(r.verdict, Verdict::EventuallyNonzero);
    let r0 = tameness_report(&y_sq, 0, Q).unwrap();
    assert_eq!(r0.verdict, Verdict::EventuallyZero);
    assert_eq!(r0.asymptotic_krull_dim, SliceDim::NegInf);
    println!("criterion 8 PASS: asymptotic dimension matches direct slices on [j0-20, j0]");
}

#[test]
fn criterion_09_binomial_convention_and_formula() {
    assert_eq!(ext_binom(-1, -1), 1);
    for i in 0..=10 {
        assert_eq!(ext_binom(i, -1), 0);
        assert_eq!(ext_binom(i, 0), 1);
    }
    let mut rng = rng(101); // same stream shape as criterion 1
    for _ in 0..50 {
        let ideal = random_squarefree(&mut rng);
        for i in 0..=(ideal.partition().n() as i64) {
            let coarse =
                coarse_series(&fine_series_squarefree(&ideal, i, Q).unwrap()).unwrap();
            for k in -1..=4i64 {
                for j in -5..=1i64 {
                    let expansion = coarse.coefficient_at(&[k, j]);
                    let formula =
                        component_dim_coarse(&ideal, i, k, j, Q, CoarseMode::BinomialFormula)
                            .unwrap();
                    assert_eq!(expansion, formula, "i={i} k={k} j={j}");
                }
            }
        }
    }
    println!("criterion 9 PASS: binomial convention and closed formula = expansion, 50 ideals");
}

#[test]
fn criterion_10_homology_kernel() {
    let mut rng = rng(1010);
    // Euler characteristic on 1000 random complexes, boundary-squares-zero
    // along the way
    for _ in 0..1000 {
        let delta = random_complex(&mut rng, 6);
        let chain = chain_complex(&delta);
        assert!(chain.boundary_squares_to_zero());
        let chi: i64 = delta.faces().map(|f| -(1 - 2 * (f.count_ones() as i64 % 2))).sum();
        // chi = sum over faces of (-1)^(|F|-1) equals the alternating sum of
        // reduced homology dimensions
        let dims = reduced_homology_dims(&delta, Q);
        let hom_chi: i64 = dims
            .as_slice()
            .iter()
            .enumerate()
            .map(|(off, &d)| {
                let degree = off as i64 - 1;
                if degree % 2 == 0 { d as i64 } else { -(d as i64) }
            })
            .sum();
        assert_eq!(chi, hom_chi);
    }
    // cone acyclicity on 200 random cones
    for _ in 0..200 {
        let delta = random_complex(&mut rng, 5);
        let cone = delta.cone("apex").unwrap();
        assert_eq!(reduced_homology_dims(&cone, Q).total(), 0);
    }
    // degree -1 conventions
    let void = SimplicialComplex::void(vec!["a".into()]);
    assert_eq!(reduced_homology_dims(&void, Q).total(), 0);
    let irr = SimplicialComplex::irrelevant(vec!["a".into()]);
    let dims = reduced_homology_dims(&irr, Q);
    assert_eq!(dims.dim_at(-1), 1);
    assert_eq!(dims.total(), 1);
    println!("criterion 10 PASS: d^2 = 0, Euler characteristic, cone acyclicity, sentinels");
}
