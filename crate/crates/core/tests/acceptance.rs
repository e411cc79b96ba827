//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Failures are reported but do not change the exit status unless
//! `ACCEPTANCE_STRICT=1` is set, so the rest of the test suite still runs.

use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use robin_graph::bounds::{self, RangeRegion, TestFunction, TraceMode};
use robin_graph::continuation::{self, Branch, ParameterPath, TraceConfig};
use robin_graph::dtn;
use robin_graph::fd;
use robin_graph::fixtures;
use robin_graph::secular::{self, DirichletMode, Region, RootResult};
use robin_graph::{MetricGraph, VertexCondition};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn tolerance() -> f64 {
    1e-10
}

// 1 ------------------------------------------------------------------------

fn pt_interval() -> Outcome {
    let start = Instant::now();
    let g = fixtures::pt_interval(1.0, 3.0);
    let roots = match secular::find_roots(&g, &Region::new(0.0, 50.0, -5.0, 5.0).unwrap(), 1e-12) {
        Ok(r) => r,
        Err(e) => return outcome(false, format!("solver error: {e}")),
    };
    let secs = start.elapsed().as_secs_f64();
    let expect = [9.0, PI * PI, 4.0 * PI * PI];
    let values: Vec<Complex64> = roots.iter().flat_map(|r| std::iter::repeat_n(r.lambda, r.multiplicity)).collect();
    let err = if values.len() == 3 {
        values.iter().zip(expect).map(|(z, e)| (z - e).norm()).fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    outcome(
        values.len() == 3 && err <= 1e-8 && secs < 5.0,
        format!("{} eigenvalues, max error {err:.2e}, {secs:.3} s", values.len()),
    )
}

// 2 ------------------------------------------------------------------------

fn divergent_law() -> Outcome {
    let start = Instant::now();
    let g = fixtures::star(&[1.0; 3], c(0.0, 0.0), VertexCondition::Standard);
    let path = ParameterPath::uniform(vec![c(0.0, 0.0)], 1.0, PI);
    let cfg = TraceConfig { t_end: 30.0, checkpoints: vec![10.0, 20.0], tol: 1e-13, ..TraceConfig::default() };
    let origin = RootResult { lambda: c(0.0, 0.0), multiplicity: 1, residual: 0.0 };
    let branch = match continuation::trace_branch(&g, &path, &origin, &cfg, &[]) {
        Ok(b) => b,
        Err(e) => return outcome(false, format!("trace error: {e}")),
    };
    let picked: Vec<_> = [10.0, 20.0, 30.0].iter().filter_map(|&t| branch.at(t).cloned()).collect();
    let fitted = Branch { samples: picked, ..branch };
    let fit = match continuation::fit_divergence_law(&g, &fitted, 0) {
        Ok(f) => f,
        Err(e) => return outcome(false, format!("fit error: {e}")),
    };
    let secs = start.elapsed().as_secs_f64();
    let shortest = g.shortest_edge();
    let c_ok = (fit.coefficient - 3.0).abs() <= 0.03;
    let rate_ok = (fit.rate - shortest).abs() <= 0.15 * shortest;
    outcome(
        c_ok && rate_ok && secs < 30.0,
        format!(
            "c = {:.6} (target 3 +/- 1%), rate = {:.4} (target {shortest} +/- 15%), {secs:.2} s",
            fit.coefficient, fit.rate
        ),
    )
}

// 3 ------------------------------------------------------------------------

/// Three parameter paths per fixture. Bases and angles differ between
/// vertices so that no path keeps a mirror symmetry, which would produce
/// exact crossings.
fn paths_for(k: usize) -> Vec<(&'static str, ParameterPath)> {
    let base: Vec<Complex64> = (0..k).map(|j| c(0.3 + 0.2 * j as f64, 0.1 - 0.15 * j as f64)).collect();
    let mk = |angles: Vec<f64>| ParameterPath::new(base.clone(), vec![1.0; k], angles).unwrap();
    if k == 1 {
        vec![("left", mk(vec![PI])), ("left-complex", mk(vec![0.7 * PI])), ("imaginary", mk(vec![0.5 * PI]))]
    } else {
        let mut all_left = vec![PI; k];
        all_left[1] = 0.85 * PI;
        let mut mixed = vec![0.5 * PI; k];
        mixed[0] = 1.2 * PI;
        let mut bounded = vec![0.5 * PI; k];
        bounded[1] = -0.3 * PI;
        vec![("all-left", mk(all_left)), ("mixed", mk(mixed)), ("bounded", mk(bounded))]
    }
}

fn divergent_count() -> Outcome {
    let window = Region::new(-20.0, 40.0, -10.0, 10.0).unwrap();
    let dirichlet_window = Region::new(-5.0, 400.0, -5.0, 5.0).unwrap();
    let cfg = TraceConfig { t_end: 5.0e4, conv_tol: 1e-2, div_threshold: 1e3, ..TraceConfig::default() };
    let mut runs = Vec::new();
    for (name, g) in fixtures::all() {
        for (pname, path) in paths_for(g.robin_vertices().len()) {
            runs.push((name, g.clone(), pname, path));
        }
    }
    let results: Vec<_> = runs
        .par_iter()
        .map(|(name, g, pname, path)| {
            let r = continuation::count_divergent(g, path, &window, &dirichlet_window, &cfg);
            (name, pname, path.divergent_prediction(), r)
        })
        .collect();
    let mut bad = Vec::new();
    for (name, pname, m, r) in &results {
        match r {
            Ok(cnt) if cnt.divergent == *m => {}
            Ok(cnt) => bad.push(format!("{name}/{pname}: {} divergent, m = {m}", cnt.divergent)),
            Err(e) => bad.push(format!("{name}/{pname}: {e}")),
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() { format!("{} runs, all counts equal m", results.len()) } else { bad.join("; ") },
    )
}

// 4 ------------------------------------------------------------------------

fn negative_count_fixtures() -> Vec<(&'static str, MetricGraph)> {
    let mut v = fixtures::all();
    v.push(("leaf-robin-star", fixtures::leaf_robin_star(&[1.0, 1.3, 0.8], c(-1.0, 0.0))));
    v
}

fn negative_count() -> Outcome {
    let mut bad = Vec::new();
    let mut worst_ratio: f64 = 0.0;
    for (name, g) in negative_count_fixtures() {
        for alpha in [-20.0, -30.0] {
            let ga = fixtures::with_uniform_alpha(&g, c(alpha, 0.0));
            let k = ga.robin_vertices().len();
            let n = match bounds::count_negative_eigenvalues(&ga, tolerance()) {
                Ok(n) => n,
                Err(e) => {
                    bad.push(format!("{name} alpha={alpha}: {e}"));
                    continue;
                }
            };
            if n.predicted != Some(k) || n.count != k {
                bad.push(format!("{name} alpha={alpha}: count {} (k = {k})", n.count));
                continue;
            }
            if alpha != -30.0 {
                continue;
            }
            let mut values: Vec<f64> =
                n.roots.iter().flat_map(|r| std::iter::repeat_n(r.lambda.re, r.multiplicity)).collect();
            values.sort_by(f64::total_cmp);
            let deg = ga.degrees();
            let mut model: Vec<f64> =
                ga.robin_vertices().iter().map(|&v| -alpha * alpha / (deg[v] * deg[v]) as f64).collect();
            model.sort_by(f64::total_cmp);
            let allowed = alpha * alpha * (ga.shortest_edge() * alpha).exp() * 10.0;
            for (x, m) in values.iter().zip(&model) {
                let ratio = (x - m).abs() / allowed;
                worst_ratio = worst_ratio.max(ratio);
                if ratio > 1.0 {
                    bad.push(format!("{name}: lambda {x:.10} vs {m:.4}, error {:.2e} > {allowed:.2e}", (x - m).abs()));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() { format!("counts exact, worst error/allowed = {worst_ratio:.3}") } else { bad.join("; ") },
    )
}

// 5 ------------------------------------------------------------------------

fn two_sided() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for (name, g) in fixtures::all() {
        for alpha in [-1.0, -5.0, -10.0, -30.0] {
            let ga = fixtures::with_uniform_alpha(&g, c(alpha, 0.0));
            let (lower, upper) = bounds::two_sided_bounds(&ga).unwrap();
            let n = match bounds::count_negative_eigenvalues(&ga, tolerance()) {
                Ok(n) => n,
                Err(e) => {
                    bad.push(format!("{name} alpha={alpha}: {e}"));
                    continue;
                }
            };
            let Some(l1) = n.roots.iter().map(|r| r.lambda.re).min_by(f64::total_cmp) else {
                bad.push(format!("{name} alpha={alpha}: no negative eigenvalue"));
                continue;
            };
            checked += 1;
            if !(lower <= l1 && l1 < upper) {
                bad.push(format!("{name} alpha={alpha}: {lower:.6} <= {l1:.6} < {upper:.6} fails"));
            }
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { format!("{checked} cases") } else { bad.join("; ") })
}

// 6 ------------------------------------------------------------------------

fn numerical_range() -> Outcome {
    let mut violations = Vec::new();
    let mut total = 0;
    for (name, g) in fixtures::all() {
        for alpha in [c(1.0, 1.0), c(-2.0, 5.0), c(-10.0, 0.0)] {
            let ga = fixtures::with_uniform_alpha(&g, alpha);
            let region = RangeRegion::constant(&ga, alpha).unwrap();
            let samples = bounds::sample_numerical_range(&ga, &region, 1000, 2024).unwrap();
            total += samples.len();
            let v = samples.iter().filter(|s| !s.membership.member).count();
            if v > 0 {
                violations.push(format!("{name} alpha={alpha}: {v} outside"));
            }
        }
    }
    outcome(
        violations.is_empty(),
        if violations.is_empty() { format!("{total} quotients, 0 violations") } else { violations.join("; ") },
    )
}

// 7 ------------------------------------------------------------------------

fn trace_inequality() -> Outcome {
    let mut worst = f64::INFINITY;
    let mut bad = Vec::new();
    for (name, g) in fixtures::all() {
        let n_v = g.vertices().len();
        let n_e = g.edges().len();
        let slacks: Vec<(f64, f64)> = (0..1000u64)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(7_000 + i);
                let f = TestFunction::random(&g, bounds::DEFAULT_NODES, &mut rng);
                let vertex = rng.random_range(0..n_v);
                let xi: Vec<f64> = (0..n_e).map(|_| if rng.random_bool(0.5) { 0.5 } else { 1.0 }).collect();
                let local = bounds::trace_inequality_check(&g, &f, &TraceMode::Local { vertex, xi }).unwrap();
                let mut subset: Vec<usize> = (0..n_v).filter(|_| rng.random_bool(0.5)).collect();
                if subset.is_empty() {
                    subset.push(vertex);
                }
                let global = bounds::trace_inequality_check(&g, &f, &TraceMode::Global { vertices: subset }).unwrap();
                (local.slack(), global.slack())
            })
            .collect();
        let m = slacks.iter().map(|(a, b)| a.min(*b)).fold(f64::INFINITY, f64::min);
        worst = worst.min(m);
        if m < -1e-12 {
            bad.push(format!("{name}: min slack {m:.3e}"));
        }
    }
    let mut flat_err: f64 = 0.0;
    for d in 1..=5 {
        for ell in [0.5, 1.0, 2.5] {
            let g = fixtures::star(&vec![ell; d], c(0.0, 0.0), VertexCondition::Standard);
            let f = TestFunction::constant(&g, bounds::DEFAULT_NODES, c(1.0, 0.0));
            let chk = bounds::trace_inequality_check(&g, &f, &TraceMode::Local { vertex: 0, xi: vec![1.0; d] }).unwrap();
            flat_err = flat_err.max(chk.slack().abs());
        }
    }
    if flat_err > 1e-12 {
        bad.push(format!("flat equality off by {flat_err:.2e}"));
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            format!("min slack {worst:.3e}, flat-function |slack| {flat_err:.1e}")
        } else {
            bad.join("; ")
        },
    )
}

// 8 ------------------------------------------------------------------------

fn oracle() -> Outcome {
    let window = Region::new(-200.0, 200.0, -20.0, 20.0).unwrap();
    let n = 64.0;
    let mut bad = Vec::new();
    let mut notes = Vec::new();
    for (name, g) in fixtures::all() {
        for alpha in [c(-2.0, 0.0), c(-2.0, 1.0)] {
            let ga = fixtures::with_uniform_alpha(&g, alpha);
            let h = fd::discretize(&ga, n).unwrap().h;
            let wide = window.expand(1.0);
            let roots = match secular::find_roots(&ga, &wide, tolerance()) {
                Ok(r) => r,
                Err(e) => {
                    bad.push(format!("{name} alpha={alpha}: {e}"));
                    continue;
                }
            };
            let approx = match fd::extrapolated_eigs(&ga, n, &wide) {
                Ok(v) => v,
                Err(e) => {
                    bad.push(format!("{name} alpha={alpha}: {e}"));
                    continue;
                }
            };
            let m = fd::match_spectra(&roots, &approx, &window, |z| 5.0 * h * h * (1.0 + z.norm()));
            if !m.is_complete() {
                bad.push(format!(
                    "{name} alpha={alpha}: {} secular and {} discrete values unmatched",
                    m.unmatched_reference.len(),
                    m.unmatched_approx.len()
                ));
            }
            // observed order of the raw discretisation on the low spectrum
            let low = Region::new(-200.0, 50.0, -20.0, 20.0).unwrap();
            let low_roots: Vec<RootResult> = roots.iter().copied().filter(|r| low.contains(r.lambda)).collect();
            let errs: Vec<f64> = [16.0, 32.0, 64.0]
                .iter()
                .map(|&nn| {
                    let ev = fd::eigs_window(&fd::discretize(&ga, nn).unwrap(), &low.expand(20.0)).unwrap();
                    let mm = fd::match_spectra(&low_roots, &ev, &low, |z| 0.5 * (1.0 + z.norm()));
                    mm.max_discrepancy()
                })
                .collect();
            let slopes = [fd::observed_order(errs[0], errs[1]), fd::observed_order(errs[1], errs[2])];
            if slopes.iter().any(|s| !(1.8..=2.2).contains(s)) {
                bad.push(format!("{name} alpha={alpha}: observed orders {:.3}, {:.3}", slopes[0], slopes[1]));
            }
            notes.push(format!("{name}/{alpha}: {} pairs, order {:.2}", m.pairs.len(), slopes[1]));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { notes.join(", ") } else { bad.join("; ") })
}

// 9 ------------------------------------------------------------------------

fn duality() -> Outcome {
    let window = Region::new(-60.0, 60.0, -30.0, 30.0).unwrap();
    let mut bad = Vec::new();
    let mut checked = 0usize;
    let mut skipped = 0usize;
    let mut worst: f64 = 0.0;
    for (name, g) in fixtures::all() {
        let k = g.robin_vertices().len();
        let dir: Vec<RootResult> =
            secular::dirichlet_spectrum(&g, DirichletMode::RobinVertices, &window.expand(1.0), tolerance()).unwrap();
        let res: Vec<_> = (0..50u64)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(900 + i);
                let alpha: Vec<Complex64> =
                    (0..k).map(|_| c(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0))).collect();
                let ga = g.with_alpha(&alpha).unwrap();
                let roots = secular::find_roots(&ga, &window, tolerance())?;
                let mut out = Vec::new();
                for r in roots {
                    if secular::near_dirichlet(&r, &dir, 1e-3) {
                        out.push(None);
                    } else {
                        out.push(Some((r.lambda, secular::reduced_secular_normalized(&ga, r.lambda))));
                    }
                }
                Ok::<_, robin_graph::Error>(out)
            })
            .collect();
        for r in res {
            match r {
                Err(e) => bad.push(format!("{name}: {e}")),
                Ok(list) => {
                    for item in list {
                        match item {
                            None => skipped += 1,
                            Some((z, Ok(v))) => {
                                checked += 1;
                                worst = worst.max(v);
                                if v > 1e-7 {
                                    bad.push(format!("{name} at {z:.6}: {v:.2e}"));
                                }
                            }
                            Some((z, Err(e))) => bad.push(format!("{name} at {z:.6}: {e}")),
                        }
                    }
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{checked} roots, worst normalised value {worst:.2e}, {skipped} skipped near the Dirichlet spectrum")
        } else {
            bad.join("; ")
        },
    )
}

// 10 -----------------------------------------------------------------------

fn dtn_asymptotics() -> Outcome {
    let mut bad = Vec::new();
    let mut notes = Vec::new();
    for (name, g) in fixtures::all() {
        let pts: Vec<(f64, f64)> = [8.0, 12.0, 16.0]
            .iter()
            .map(|&y| {
                let s = c(0.0, y);
                (y, dtn::asymptotic_deviation(&g, s * s).unwrap().ln())
            })
            .collect();
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let slope = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>()
            / pts.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
        let rate = -slope;
        let target = g.shortest_edge();
        notes.push(format!("{name}: {rate:.3} vs {target}"));
        if (rate - target).abs() > 0.1 * target {
            bad.push(format!("{name}: rate {rate:.3}, shortest edge {target}"));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { notes.join(", ") } else { bad.join("; ") })
}

// 11 -----------------------------------------------------------------------

fn imaginary_bound() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0usize;
    for (name, g) in fixtures::all() {
        let d = g.metrics().min_robin_degree.unwrap() as f64;
        let results: Vec<_> = (1..=20)
            .into_par_iter()
            .map(|j| {
                let s = 0.5 * j as f64;
                let ga = fixtures::with_uniform_alpha(&g, c(0.0, s));
                let h = s * (2.0 * 10.0 + 1.0 / (d * g.shortest_edge())) + 1.0;
                let window = Region::new(-1.0, 100.0, -h, h).unwrap();
                let roots = secular::find_roots(&ga, &window, tolerance())?;
                let viol: Vec<String> = roots
                    .iter()
                    .filter_map(|r| {
                        let chk = bounds::imag_part_bound(&ga, r.lambda).ok()?;
                        (!chk.holds).then(|| format!("alpha={s}i: {:.5} (bound {:.5})", r.lambda, chk.bound))
                    })
                    .collect();
                Ok::<_, robin_graph::Error>((roots.len(), viol))
            })
            .collect();
        for r in results {
            match r {
                Ok((n, v)) => {
                    checked += n;
                    bad.extend(v.into_iter().map(|x| format!("{name} {x}")));
                }
                Err(e) => bad.push(format!("{name}: {e}")),
            }
        }
    }
    let shown: Vec<String> = bad.iter().take(6).cloned().collect();
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{checked} eigenvalues, 0 violations")
        } else {
            format!("{} violations among {checked} eigenvalues: {}", bad.len(), shown.join("; "))
        },
    )
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("pt-interval spectrum", pt_interval),
        ("divergent-eigenvalue law", divergent_law),
        ("divergent-branch count", divergent_count),
        ("negative-eigenvalue count", negative_count),
        ("two-sided bound", two_sided),
        ("numerical-range containment", numerical_range),
        ("trace inequality", trace_inequality),
        ("oracle equivalence", oracle),
        ("duality cross-check", duality),
        ("DtN asymptotics", dtn_asymptotics),
        ("imaginary-part bound", imaginary_bound),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        if only.is_some_and(|o| o != i + 1) {
            continue;
        }
        let t = Instant::now();
        let o = f();
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} {:>2} {name}: {} [{:.1} s]",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed - only.map_or(0, |_| criteria.len() - 1));
    if failed > 0 && std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
