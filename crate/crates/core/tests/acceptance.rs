//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//!
//! Tolerances and budgets are pinned here and nowhere else.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use densitometer::arith::{gross_form_exists, group_order, kottwitz_sign, sxdh_ledger, ClassicalFamily, SignatureProfile};
use densitometer::arthur::{gsk_deficiencies, nilpotent_partitions, rate_invariant, rate_oracle, weighted_dynkin, Levi, Rate, ShapeName};
use densitometer::cli;
use densitometer::lie::{build_root_datum, weyl_elements, Family, Rational, RootDatum, Weight};
use densitometer::nbrw::spectrum::density_check_reports;
use densitometer::nbrw::{
    cayley_digraph, cayley_generators, distance_summary, nb_lift_spectrum, nonbacktracking_lift, walk_distribution,
    walk_report, BaseSpectrum, MixingOptions, UndirectedGraph, WalkReport,
};
use densitometer::packets::{cohomology_degrees, total_dim_check, RealForm};
use densitometer::spherical::{decay_threshold, lr_partial_sum, Surrogate, UnramifiedParam};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ORACLE_SAMPLES: usize = 200;
const DIVERGENT_GROWTH: f64 = 2.0;
const CONVERGENT_RATIO: f64 = 1.05;
const CUTOFF_CEILING: f64 = 1.35;
const DENSITY_R: f64 = 3.0;
const DENSITY_SLOPE: f64 = 2.0 / 3.0 + 0.15;
const MASS_TOLERANCE: f64 = 1e-12;
/// Base sizes of the random 3-regular family; lifts have `3n` vertices.
const FAMILY: [usize; 4] = [1000, 3334, 10_000, 33_334];
const FAMILY_SEEDS: u64 = 5;
/// Base sizes at or below this use a dense eigensolver.
const DENSE_BASE: usize = 3334;
const LANCZOS_STEPS: usize = 200;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn within(budget: Duration, start: Instant, o: Outcome) -> Outcome {
    let took = start.elapsed();
    if took > budget {
        outcome(false, format!("{}; took {took:.2?} > {budget:?}", o.detail))
    } else {
        outcome(o.pass, format!("{}; {took:.2?}", o.detail))
    }
}

fn cli_stdout(args: &[&str]) -> (i32, Vec<u8>) {
    let argv = std::iter::once("densitometer").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut out, &mut err);
    (code, out)
}

fn c1_rate_table() -> Outcome {
    let t = Instant::now();
    let (code, out) = cli_stdout(&["rates", "--group", "SO5"]);
    let text = String::from_utf8(out).unwrap_or_default();
    let got: BTreeSet<(String, String)> = text
        .lines()
        .skip(1)
        .filter_map(|l| {
            let first = l.split(',').next()?;
            let last = l.rsplit(',').next()?;
            Some((first.to_string(), last.to_string()))
        })
        .collect();
    let want: BTreeSet<(String, String)> =
        [("G", "2"), ("Y", "2"), ("F", "inf"), ("B", "4"), ("Q", "4"), ("P", "3")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
    within(Duration::from_secs(1), t, outcome(code == 0 && got == want, format!("shape rates {got:?}")))
}

fn c2_weighted_dynkin() -> Outcome {
    let got: Vec<(String, Vec<i64>)> =
        nilpotent_partitions(Family::C, 4).iter().map(|o| (o.to_string(), weighted_dynkin(o))).collect();
    let want = vec![
        ("(4)".to_string(), vec![2, 2]),
        ("(2,2)".to_string(), vec![0, 2]),
        ("(2,1,1)".to_string(), vec![1, 0]),
        ("(1,1,1,1)".to_string(), vec![0, 0]),
    ];
    outcome(got == want, format!("{got:?}"))
}

/// Dominant `nu` in `[0, rho]` with denominators dividing 12.
fn sample_interval(rd: &RootDatum, rng: &mut ChaCha8Rng) -> Weight {
    let top = rd.weyl_vector.0[0].ceil().to_integer();
    loop {
        let mut c: Vec<Rational> = (0..rd.rank)
            .map(|_| {
                let den = [1, 2, 3, 4, 6, 12][rng.random_range(0..6)];
                Rational::new(rng.random_range(0..=top * den), den)
            })
            .collect();
        c.sort_by(|a, b| b.cmp(a));
        let nu = Weight::new(c);
        if rd.in_rho_interval(&nu).unwrap_or(false) {
            return nu;
        }
    }
}

fn c3_oracle_equivalence() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    let mut distinct = BTreeSet::new();
    for (family, rank) in [(Family::B, 2), (Family::B, 3), (Family::C, 3)] {
        let rd = build_root_datum(family, rank).expect("valid root datum");
        for _ in 0..ORACLE_SAMPLES {
            let nu = sample_interval(&rd, &mut rng);
            let a = rate_invariant(&nu, &rd);
            let b = rate_oracle(&nu, &rd);
            let c = UnramifiedParam::new(nu.clone(), 2, &rd).and_then(|p| decay_threshold(&p, &rd));
            match (a, b, c) {
                (Ok(a), Ok(b), Ok(c)) if a == b && b == c => {
                    distinct.insert(a.to_string());
                    checked += 1;
                }
                other => return outcome(false, format!("{family}{rank} at {nu}: {other:?}")),
            }
        }
    }
    within(
        Duration::from_secs(5),
        t,
        outcome(true, format!("{checked} weights agree exactly, {} distinct rates", distinct.len())),
    )
}

fn c4_packets() -> Outcome {
    let t = Instant::now();
    let set = |s: &[u32]| s.iter().copied().collect::<BTreeSet<u32>>();
    // (form, levi, degree sets); Levi T, M, S, G carry the trivial, minimal,
    // subregular and principal SL2-types
    let table: Vec<(RealForm, Levi, Vec<BTreeSet<u32>>)> = vec![
        (RealForm::Split, Levi::T, vec![set(&[3]); 4]),
        (RealForm::Split, Levi::M, vec![set(&[2, 4]), set(&[3]), set(&[3])]),
        (RealForm::Split, Levi::S, vec![set(&[2, 4]); 2]),
        (RealForm::Split, Levi::G, vec![set(&[0, 2, 4, 6])]),
        (RealForm::Hyperbolic, Levi::T, vec![set(&[2]); 2]),
        (RealForm::Hyperbolic, Levi::M, vec![set(&[1, 3])]),
        (RealForm::Hyperbolic, Levi::S, vec![set(&[2]); 2]),
        (RealForm::Hyperbolic, Levi::G, vec![set(&[0, 4])]),
        (RealForm::Compact, Levi::T, vec![set(&[0])]),
        (RealForm::Compact, Levi::M, vec![set(&[0])]),
        (RealForm::Compact, Levi::S, vec![set(&[0])]),
        (RealForm::Compact, Levi::G, vec![set(&[0])]),
    ];
    for (form, levi, want) in &table {
        let r = cohomology_degrees(*form, *levi);
        let mut got = r.degree_sets.clone();
        let mut want = want.clone();
        got.sort();
        want.sort();
        if r.size != want.len() || got != want {
            return outcome(false, format!("{form:?}/{levi}: size {} degrees {got:?}", r.size));
        }
        if !total_dim_check(*form, *levi) {
            return outcome(false, format!("{form:?}/{levi}: total dimension check failed"));
        }
    }
    within(Duration::from_secs(1), t, outcome(true, "12 packets match, 12 total-dimension checks pass"))
}

fn c5_ledger() -> Outcome {
    let gsk = gsk_deficiencies(1, 2);
    let ledger = match sxdh_ledger() {
        Ok(l) => l,
        Err(e) => return outcome(false, format!("ledger error: {e}")),
    };
    let all_pass = ledger.len() == 6 && ledger.iter().all(|r| r.verdict);
    let q = ledger.iter().find(|r| r.shape == ShapeName::Q);
    let p = ledger.iter().find(|r| r.shape == ShapeName::P);
    let q_tight = q.is_some_and(|r| r.tight && r.bound_exponent == 5 && r.target_exponent == Rational::from_integer(5));
    let p_margin = p.is_some_and(|r| {
        r.bound_exponent == 5 && r.target_exponent == Rational::new(20, 3) && r.rate == Rate::Finite(Rational::from_integer(3))
    });
    let pass = matches!(gsk, Ok((2, 5))) && all_pass && q_tight && p_margin;
    let p_target = p.map(|r| r.target_exponent.to_string()).unwrap_or_default();
    outcome(pass, format!("gsk(1,2) = {gsk:?}, six verdicts pass: {all_pass}, Q tight: {q_tight}, P: 5 <= {p_target}"))
}

fn c6_gross() -> Outcome {
    let mut profiles = 0usize;
    for n in 1..=6u32 {
        for places in 0..=4u32 {
            for code in 0..(n + 1).pow(places) {
                let a: Vec<u32> = (0..places).map(|i| code / (n + 1).pow(i) % (n + 1)).collect();
                let product: i8 = a.iter().map(|&x| kottwitz_sign(n, x).expect("a <= n")).product();
                let exists = SignatureProfile::new(n, a.clone()).and_then(|p| gross_form_exists(&p));
                if exists.as_ref().ok() != Some(&(product == 1)) {
                    return outcome(false, format!("n={n} a={a:?}: {exists:?} vs product {product}"));
                }
                profiles += 1;
            }
        }
    }
    // SO5 compact at every real place of a degree-k field
    for k in 1..=8u32 {
        let definite = SignatureProfile::new(2, vec![2; k as usize]).and_then(|p| gross_form_exists(&p));
        if definite.as_ref().ok() != Some(&(k % 2 == 0)) {
            return outcome(false, format!("degree {k}: definite form existence {definite:?}"));
        }
    }
    outcome(true, format!("{profiles} profiles agree; definite iff even degree for 1..=8"))
}

fn brute_sp4_f2() -> u64 {
    let j = [[0u8, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]];
    (0u32..1 << 16)
        .filter(|bits| {
            let m = |r: usize, c: usize| ((bits >> (4 * r + c)) & 1) as u8;
            (0..4).all(|a| {
                (0..4).all(|b| {
                    let s = (0..4).flat_map(|r| (0..4).map(move |c| (r, c))).fold(0u8, |s, (r, c)| s ^ (m(r, a) & j[r][c] & m(c, b)));
                    s == j[a][b]
                })
            })
        })
        .count() as u64
}

fn brute_sl2(p: u64) -> u64 {
    let mut count = 0;
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    count += ((a * d + p * p - b * c) % p == 1) as u64;
                }
            }
        }
    }
    count
}

fn c7_group_orders() -> Outcome {
    let sp4 = (brute_sp4_f2(), group_order(ClassicalFamily::Sp, 2, 2, 1).map(|o| o.to_string()));
    let sp2 = (brute_sl2(3), group_order(ClassicalFamily::Sp, 1, 3, 1).map(|o| o.to_string()));
    let pass = sp4.0 == 720 && sp4.1.as_deref().ok() == Some("720") && sp2.0 == 24 && sp2.1.as_deref().ok() == Some("24");
    outcome(pass, format!("Sp4(F2): {} enumerated vs {:?}; Sp2(F3): {} vs {:?}", sp4.0, sp4.1, sp2.0, sp2.1))
}

fn c8_spherical() -> Outcome {
    let t = Instant::now();
    let rd = build_root_datum(Family::B, 2).expect("B2");
    let weyl = weyl_elements(&rd).expect("B2 Weyl group");
    let param = match UnramifiedParam::new(Weight::new(vec![Rational::new(1, 2), Rational::from_integer(0)]), 3, &rd) {
        Ok(p) => p,
        Err(e) => return outcome(false, e.to_string()),
    };
    let radii = [5u32, 10, 20, 40];
    let ratios = |r: Rational| -> Vec<f64> {
        let sums: Vec<f64> = radii
            .iter()
            .map(|&k| lr_partial_sum(&param, r, k, &rd, Surrogate::DominantTerm, &weyl).unwrap_or(f64::NAN))
            .collect();
        sums.windows(2).map(|w| w[1] / w[0]).collect()
    };
    let below = ratios(Rational::new(5, 2));
    let above = ratios(Rational::new(7, 2));
    let threshold = decay_threshold(&param, &rd).map(|r| r.to_string());
    let pass = below.iter().all(|&g| g > DIVERGENT_GROWTH)
        && above.last().is_some_and(|&g| g < CONVERGENT_RATIO)
        && threshold.as_deref().ok() == Some("3");
    within(
        Duration::from_secs(10),
        t,
        outcome(pass, format!("threshold {threshold:?}; r=5/2 doubling {below:.3?}; r=7/2 doubling {above:.6?}")),
    )
}

fn median(v: &mut [f64]) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        (v[m - 1] + v[m]) / 2.0
    }
}

struct FamilyRun {
    reports: Vec<Vec<WalkReport>>,
}

fn run_family() -> Result<FamilyRun, String> {
    let mut reports = Vec::new();
    for &n in &FAMILY {
        let mut row = Vec::new();
        for seed in 0..FAMILY_SEEDS {
            let base = UndirectedGraph::random_regular(n, 3, seed).map_err(|e| e.to_string())?;
            let lift = nonbacktracking_lift(&base).map_err(|e| e.to_string())?;
            let opts = MixingOptions { eps: 0.25, seed, ..Default::default() };
            row.push(walk_report(&lift, &format!("rr3-{n}-nb"), &opts, 0.1).map_err(|e| format!("n={n} seed={seed}: {e}"))?);
        }
        reports.push(row);
    }
    Ok(FamilyRun { reports })
}

fn c9_cutoff(run: &Result<FamilyRun, String>, took: Duration) -> Outcome {
    let run = match run {
        Ok(r) => r,
        Err(e) => return outcome(false, e.clone()),
    };
    let mut bounds_ok = true;
    let mut medians = Vec::new();
    for row in &run.reports {
        for r in row {
            bounds_ok &= r.lower_bound <= r.t_mix && (r.t_mix as f64) <= CUTOFF_CEILING * r.log_d_n;
        }
        medians.push(median(&mut row.iter().map(|r| r.cutoff_ratio).collect::<Vec<_>>()));
    }
    let monotone = medians.windows(2).all(|w| w[1] <= w[0]);
    let sizes: Vec<String> = run
        .reports
        .iter()
        .zip(&medians)
        .map(|(row, m)| {
            let t: Vec<usize> = row.iter().map(|r| r.t_mix).collect();
            format!("n={} t_mix={t:?} median ratio {m:.4}", row[0].n)
        })
        .collect();
    let detail = format!(
        "bounds lower_bound <= t_mix <= {CUTOFF_CEILING} log_d n on every instance: {bounds_ok}; medians non-increasing: {monotone}; {}; {took:.2?}",
        sizes.join(", ")
    );
    let budget = Duration::from_secs(600);
    outcome(bounds_ok && monotone && took <= budget, detail)
}

fn c10_density() -> Outcome {
    let t = Instant::now();
    let mut spectra = Vec::new();
    for &n in &FAMILY {
        let base = match UndirectedGraph::random_regular(n, 3, 0) {
            Ok(b) => b,
            Err(e) => return outcome(false, e.to_string()),
        };
        let method = if n <= DENSE_BASE { BaseSpectrum::Dense } else { BaseSpectrum::Lanczos { steps: LANCZOS_STEPS, seed: 0 } };
        match nb_lift_spectrum(&base, method) {
            Ok(s) => spectra.push(s),
            Err(e) => return outcome(false, format!("n={n}: {e}")),
        }
    }
    let counts: Vec<String> = spectra
        .iter()
        .map(|s| format!("n={} N(3)={}{}", s.n, s.density_count(DENSITY_R), if s.complete { "" } else { " (partial)" }))
        .collect();
    match density_check_reports(&spectra, DENSITY_R) {
        Ok(v) => within(
            Duration::from_secs(600),
            t,
            outcome(v.slope <= DENSITY_SLOPE, format!("slope {:.4} <= {DENSITY_SLOPE:.4}; {}", v.slope, counts.join(", "))),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn c11_hard_assertions(run: &Result<FamilyRun, String>) -> Outcome {
    // every family report already enforced the lower bound, the support
    // bound and the mass check; a violation would have surfaced as an error
    if let Err(e) = run {
        return outcome(false, format!("family run failed: {e}"));
    }
    let lift = match UndirectedGraph::random_regular(1000, 3, 0).and_then(|g| nonbacktracking_lift(&g)) {
        Ok(g) => g,
        Err(e) => return outcome(false, e.to_string()),
    };
    let mut bound = 1usize;
    for l in 0..=20 {
        match walk_distribution(&lift, 0, l) {
            Ok(p) if p.support_size() <= bound && (p.total() - 1.0).abs() <= MASS_TOLERANCE => {}
            other => return outcome(false, format!("step {l}: {other:?}")),
        }
        bound = bound.saturating_mul(lift.d());
    }
    let mut checked = Vec::new();
    for spec in ["sl2:5", "sl2:7", "sl2:11", "sym:5"] {
        let g = match cayley_generators(spec).and_then(|gens| cayley_digraph(&gens, 2_000_000)) {
            Ok(g) => g,
            Err(e) => return outcome(false, format!("{spec}: {e}")),
        };
        for eps in [0.1, 0.25, 0.45] {
            match distance_summary(&g, eps, 5000, 64, 0) {
                Ok(s) if s.diameter <= 2 * s.almost_diameter => checked.push(format!("{spec}@{eps}: {}<=2*{}", s.diameter, s.almost_diameter)),
                other => return outcome(false, format!("{spec} eps={eps}: {other:?}")),
            }
        }
    }
    outcome(true, format!("20 support/mass steps on the 3000-vertex lift; {}", checked.join(", ")))
}

fn c12_determinism() -> Outcome {
    let args = ["walk", "--random-regular", "2000", "3", "--seed", "7", "--eps", "0.25"];
    let (c1, a) = cli_stdout(&args);
    let (c2, b) = cli_stdout(&args);
    let pass = c1 == 0 && c2 == 0 && !a.is_empty() && a == b;
    outcome(pass, format!("exit codes {c1}/{c2}, {} bytes, identical: {}", a.len(), a == b))
}

fn main() {
    let mut results: Vec<(usize, &str, Outcome)> = vec![
        (1, "rate table", c1_rate_table()),
        (2, "weighted Dynkin fixtures", c2_weighted_dynkin()),
        (3, "oracle equivalence", c3_oracle_equivalence()),
        (4, "packet fixtures", c4_packets()),
        (5, "GSK and ledger", c5_ledger()),
        (6, "Gross forms", c6_gross()),
        (7, "group orders", c7_group_orders()),
        (8, "spherical divergence", c8_spherical()),
    ];
    let t = Instant::now();
    let family = run_family();
    let took = t.elapsed();
    results.push((9, "walk cutoff", c9_cutoff(&family, took)));
    results.push((10, "spectral density", c10_density()));
    results.push((11, "hard assertions", c11_hard_assertions(&family)));
    results.push((12, "determinism", c12_determinism()));
    let mut failed = 0;
    for (i, name, o) in &results {
        println!("criterion {i:>2} {} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
