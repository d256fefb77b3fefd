//! End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewsym::algebra::{annihilator, hnf_basis, ComplexRational, GroupKind, Poly1, RationalTurn, SkewPoly, SymmetryGroup};
use skewsym::classify::{base_sigma_order, classify, verify_semiconjugacy, IdentityCheck, TypeTag};
use skewsym::cli::{parse_map, run_with, verify_candidates};
use skewsym::numerics::{
    compactness_check, hausdorff, pixels_as_points, render_slice, sample_julia_base, Compactness, FloatMap,
    GreenConfig, GreenEvaluator, JuliaSamples, SymmetryRealizer, VerifyConfig, Window, verify_symmetry_numeric,
};
use skewsym::skew::SkewProduct;
use skewsym::symmetry::{brute_force_group, sigma_order, symmetry_group, Justification, SigmaOrder, Status};

const CUBIC: &str = "(z^3, z*w^2 + z)";
const CUBIC_CONJ: &str = "(z^3, z*w^2 + 2*z^2*w + z)";
const BUNDLE: &str = "(z^2 - 1, z^2*w^2)";
const ROTATED: &str = "(z^3, z*w^2 + z^3)";
const TWISTED: &str = "(z^2, z^3*w^5 + z*w^3 + w^2)";

fn vanishing(l: u32) -> String {
    format!("(z^2, (z^{l} - 1)*w^2)")
}

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn map(text: &str) -> SkewProduct {
    parse_map(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let el = t.elapsed();
    check(el < limit, || format!("{what} took {el:?}, limit {limit:?}"))
}

fn c1_examples_exact() -> Outcome {
    let cases: Vec<(String, SymmetryGroup, &str)> = vec![
        (CUBIC.into(), annihilator(&hnf_basis(&[[2, 0], [0, 2]])), "{(μ,ν) : μ^2 = 1, ν^2 = 1}"),
        (CUBIC_CONJ.into(), annihilator(&hnf_basis(&[[2, 0], [0, 2]])), "{(μ,ν) : μ^2 = 1, ν^2 = 1}"),
        (BUNDLE.into(), SymmetryGroup::mu_cyclic_times_circle(Some(2)), "{(μ,ν) : μ^2 = 1}"),
        (ROTATED.into(), annihilator(&hnf_basis(&[[2, -2]])), "{(μ,ν) : μ^2 = ν^2}"),
        (TWISTED.into(), annihilator(&hnf_basis(&[[1, 1]])), "{(μ,ν) : μν = 1}"),
        (vanishing(1), SymmetryGroup::mu_cyclic_times_circle(Some(1)), "{(μ,ν) : μ = 1}"),
        (vanishing(2), SymmetryGroup::mu_cyclic_times_circle(Some(2)), "{(μ,ν) : μ^2 = 1}"),
        (vanishing(3), SymmetryGroup::mu_cyclic_times_circle(Some(3)), "{(μ,ν) : μ^3 = 1}"),
    ];
    let mut worst = Duration::ZERO;
    for (text, expected, presentation) in &cases {
        let t = Instant::now();
        let r = symmetry_group(&map(text)).map_err(|e| format!("{text}: {e}"))?;
        worst = worst.max(t.elapsed());
        within(t, Duration::from_secs(1), text)?;
        check(r.status.is_exact(), || format!("{text}: status {:?}", r.status))?;
        check(&r.group == expected, || format!("{text}: got {}", r.group.presentation()))?;
        check(r.group.presentation() == *presentation, || format!("{text}: presentation {}", r.group.presentation()))?;
    }
    let r = symmetry_group(&map(CUBIC)).unwrap();
    check(r.group.order() == Some(4), || "order of the cubic example".into())?;
    let es = r.group.elements().unwrap();
    let h = RationalTurn::new(1, 2);
    let id = RationalTurn::identity();
    check(es == vec![(id, id), (id, h), (h, id), (h, h)], || format!("cubic example elements {es:?}"))?;
    Ok(format!("{} maps, slowest {worst:?}", cases.len()))
}

fn c2_classification_witnesses() -> Outcome {
    let cases = [(ROTATED, 1, 1, Poly1::from_ints(&[1, 0, 1])), (TWISTED, 1, -1, Poly1::from_ints(&[0, 0, 1, 1, 0, 1]))];
    for (text, r, s, base) in cases {
        let f = map(text);
        let c = classify(&f).map_err(|e| format!("{text}: {e}"))?;
        check(c.type_tag == TypeTag::IV, || format!("{text}: type {:?}", c.type_tag))?;
        let sc = c.semiconjugacy.as_ref().ok_or_else(|| format!("{text}: no semiconjugacy"))?;
        check((sc.r, sc.s) == (r, s), || format!("{text}: (r,s) = ({}, {})", sc.r, sc.s))?;
        check(sc.base == base, || format!("{text}: base {}", sc.base.fmt_var("w")))?;
        check(verify_semiconjugacy(&f, sc), || format!("{text}: identity fails"))?;
        check(c.identity_check == Some(IdentityCheck::Full), || format!("{text}: identity {:?}", c.identity_check))?;
        let order = base_sigma_order(sc).map_err(|e| e.to_string())?;
        let torsion = match c.gamma.kind() {
            GroupKind::OneDimFamily { torsion, .. } => *torsion,
            k => return Err(format!("{text}: group kind {k:?}")),
        };
        check(order == SigmaOrder::Finite(torsion), || format!("{text}: torsion {torsion} vs sigma {order:?}"))?;
    }
    Ok("(1,1) with w^2 + 1; (1,-1) with w^5 + w^3 + w^2".into())
}

fn random_map(rng: &mut ChaCha8Rng) -> Option<SkewProduct> {
    let delta = rng.gen_range(2..=4u32);
    let d = rng.gen_range(2..=4u32);
    let mut p = Poly1::monomial(ComplexRational::one(), delta);
    for _ in 0..rng.gen_range(0..=2) {
        let e = rng.gen_range(0..delta);
        p.add_term(e, &ComplexRational::from_int(rng.gen_range(1..=2) * if rng.gen() { 1 } else { -1 }));
    }
    let mut q = SkewPoly::monomial(ComplexRational::from_int(rng.gen_range(1..=2)), rng.gen_range(0..=3), d);
    for _ in 0..rng.gen_range(0..=3) {
        let c = ComplexRational::from_int(rng.gen_range(1..=3) * if rng.gen() { 1 } else { -1 });
        q.add_term(rng.gen_range(0..=4), rng.gen_range(0..d), &c);
    }
    SkewProduct::new(p, q).ok()
}

fn c3_oracle_equivalence() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut tested = 0;
    let mut attempts = 0;
    while tested < 24 && attempts < 500 {
        attempts += 1;
        let Some(f) = random_map(&mut rng) else { continue };
        let Ok(r) = symmetry_group(&f) else { continue };
        if !r.status.is_exact() {
            continue;
        }
        let lattice = r.group.elements_up_to_order(12);
        let oracle = brute_force_group(&f, 12, 4).map_err(|e| format!("{f}: {e}"))?;
        check(lattice == oracle, || {
            format!("{f}: lattice {} elements vs oracle {}; group {}", lattice.len(), oracle.len(), r.group.presentation())
        })?;
        tested += 1;
    }
    check(tested >= 20, || format!("only {tested} exact maps in {attempts} attempts"))?;
    within(t, Duration::from_secs(60), "oracle suite")?;
    Ok(format!("{tested} maps agree, {:?}", t.elapsed()))
}

fn c4_one_variable() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let pts: Vec<Complex64> =
        (0..5).map(|_| Complex64::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5))).collect();
    let mut nontrivial = 0;
    for _ in 0..50 {
        let delta = rng.gen_range(2..=8u32);
        let mut p = Poly1::monomial(ComplexRational::one(), delta);
        let stride = rng.gen_range(1..=delta);
        for j in 0..delta.saturating_sub(1) {
            if (delta - j) % stride == 0 && rng.gen_bool(0.6) {
                p.add_term(j, &ComplexRational::from_parts(rng.gen_range(-3..=3), 1, rng.gen_range(-2..=2), 1));
            }
        }
        let order = sigma_order(&p).map_err(|e| format!("{}: {e}", p.fmt_var("z")))?;
        if order != SigmaOrder::Finite(1) {
            nontrivial += 1;
        }
        for t in RationalTurn::all_up_to_order(24) {
            let mu = t.to_complex();
            let md = mu.powu(delta);
            let direct = pts.iter().all(|&z| {
                let lhs = p.eval_c64(mu * z);
                let rhs = md * p.eval_c64(z);
                (lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm())
            });
            check(direct == order.admits(t.order()), || {
                format!("{}: turn {}/{} direct {direct}, sigma {order:?}", p.fmt_var("z"), t.k(), t.order())
            })?;
        }
    }
    Ok(format!("50 polynomials, {nontrivial} with nontrivial rotations"))
}

const FIVE: [&str; 5] = [CUBIC, BUNDLE, ROTATED, TWISTED, "(z^2, (z^2 - 1)*w^2)"];

fn c5_green_equation() -> Outcome {
    let mut worst: f64 = 0.0;
    for (i, text) in FIVE.iter().enumerate() {
        let f = map(text);
        let g = GreenEvaluator::new(&f);
        let d = f.d() as f64;
        let zs = sample_julia_base(&g, 250, i as u64).map_err(|e| e.to_string())?;
        let mut rng = ChaCha8Rng::seed_from_u64(50 + i as u64);
        let mut count = 0;
        let mut tries = 0;
        while count < 1000 {
            tries += 1;
            if tries > 20_000 {
                return Err(format!("{text}: too few non-degenerate points ({count})"));
            }
            let z = zs[rng.gen_range(0..zs.len())];
            let w = Complex64::from_polar(rng.gen_range(0.0..3.0f64), rng.gen_range(0.0..std::f64::consts::TAU));
            let s0 = g.green_fiber_sample(z, w);
            let (z1, w1) = (g.map().p(z), g.map().q(z, w));
            let s1 = g.green_fiber_sample(z1, w1);
            if s0.degenerate || s1.degenerate || !s0.value.is_finite() || !s1.value.is_finite() {
                continue;
            }
            let res = (s1.value - d * s0.value).abs();
            worst = worst.max(res);
            check(res < 1e-8, || format!("{text}: residual {res:e} at z={z}, w={w}"))?;
            count += 1;
        }
    }
    Ok(format!("5 maps x 1000 points, max residual {worst:.1e}"))
}

fn c6_bottcher() -> Outcome {
    let f = map(CUBIC);
    let g = GreenEvaluator::new(&f);
    let mut errs = Vec::new();
    let z = Complex64::from_polar(1.0, 0.7);
    // ζ_z = 0 for this map.
    for r in [1e3, 1e4, 1e5, 1e6] {
        let w = Complex64::from_polar(r, 0.4);
        let phi = g.bottcher_fiber(z, w).map_err(|e| e.to_string())?;
        errs.push((phi - w).norm());
    }
    check(errs.windows(2).all(|p| p[1] < p[0]), || format!("not monotone: {errs:?}"))?;
    check(errs[3] < 1e-4, || format!("error at 1e6: {:e}", errs[3]))?;
    let mut worst: f64 = 0.0;
    for (k, r) in [50.0, 1e3, 1e5].into_iter().enumerate() {
        let z = Complex64::from_polar(1.0, 0.3 + k as f64);
        let w = Complex64::from_polar(r, 1.1 * k as f64);
        let lhs = g.bottcher_fiber(g.map().p(z), g.map().q(z, w)).map_err(|e| e.to_string())?;
        let rhs = g.map().b_d(z) * g.bottcher_fiber(z, w).map_err(|e| e.to_string())?.powu(f.d());
        worst = worst.max((lhs - rhs).norm() / rhs.norm());
    }
    check(worst < 1e-8, || format!("functional equation residual {worst:e}"))?;
    Ok(format!("errors {:?}, fe residual {worst:.1e}", errs.iter().map(|e| format!("{e:.1e}")).collect::<Vec<_>>()))
}

fn c7_numeric_discrimination() -> Outcome {
    let t = Instant::now();
    let cfg = VerifyConfig { samples: 512, tol: 1e-3, ..VerifyConfig::default() };
    let rot = Complex64::from_polar(1.0, 0.05);
    let mut summary = Vec::new();
    for text in [BUNDLE, ROTATED] {
        let f = map(text);
        let r = symmetry_group(&f).map_err(|e| e.to_string())?;
        let eval = GreenEvaluator::new(&f);
        let samples = JuliaSamples::generate(&eval, cfg).map_err(|e| e.to_string())?;
        check(samples.points.len() == 512, || format!("{text}: {} samples", samples.points.len()))?;
        let realizer = SymmetryRealizer::new(&f);
        let (mut worst_member, mut best_outsider) = (0f64, f64::INFINITY);
        for (mu, nu) in verify_candidates(&r.group, 6) {
            let (m, n) = (mu.to_complex(), nu.to_complex());
            let member = verify_symmetry_numeric(&eval, &realizer, m, n, &samples);
            check(member.pass, || format!("{text}: member ({mu:?}, {nu:?}) distance {:e}", member.distance))?;
            let outsider = verify_symmetry_numeric(&eval, &realizer, m * rot, n, &samples);
            check(outsider.distance >= 10.0 * cfg.tol, || {
                format!("{text}: perturbed ({mu:?}, {nu:?}) distance {:e}", outsider.distance)
            })?;
            worst_member = worst_member.max(member.distance);
            best_outsider = best_outsider.min(outsider.distance);
        }
        summary.push(format!("{text}: members <= {worst_member:.1e}, perturbed >= {best_outsider:.1e}"));
    }
    within(t, Duration::from_secs(30), "numeric discrimination")?;
    Ok(summary.join("; "))
}

fn c8_rendering() -> Outcome {
    let res = 512;
    let window = Window::new(Complex64::new(0.0, 0.0), 4.0);
    let one = Complex64::new(1.0, 0.0);
    let slice = render_slice(&GreenEvaluator::new(&map(ROTATED)), one, window, res, 1.0);
    let direct_eval = GreenEvaluator::from_float_map(
        FloatMap::from_poly_in_w(&Poly1::from_ints(&[1, 0, 1])),
        GreenConfig::default(),
    );
    let direct = render_slice(&direct_eval, one, window, res, 1.0);
    let a = pixels_as_points(&slice.boundary_pixels());
    let b = pixels_as_points(&direct.boundary_pixels());
    check(!a.is_empty() && !b.is_empty(), || "empty boundary".into())?;
    let h1 = hausdorff(&a, &b, res as f64);
    check(h1 < 2.0, || format!("type-IV slice Hausdorff {h1}"))?;

    let circle = render_slice(&GreenEvaluator::new(&map("(z^2, w^2)")), one, window, res, 1.0);
    let c = pixels_as_points(&circle.boundary_pixels());
    let truth: Vec<(f64, f64)> =
        (0..8192).map(|k| window.to_pixel(res, Complex64::from_polar(1.0, k as f64 * std::f64::consts::TAU / 8192.0))).collect();
    check(!c.is_empty(), || "empty circle boundary".into())?;
    let h2 = hausdorff(&c, &truth, res as f64);
    check(h2 < 2.0, || format!("unit circle Hausdorff {h2}"))?;
    Ok(format!("type-IV {h1:.2} px, circle {h2:.2} px"))
}

fn c9_compactness() -> Outcome {
    let cases: Vec<(String, Compactness)> = vec![
        (vanishing(1), Compactness::Noncompact),
        (vanishing(2), Compactness::Noncompact),
        (vanishing(3), Compactness::Noncompact),
        ("(z^2, (z - 3)*w^2)".into(), Compactness::Compact),
        ("(z^2, 5*w^2 + z)".into(), Compactness::Compact),
        ("(z^2 - 1, w^3 + z*w)".into(), Compactness::Compact),
    ];
    for (text, expected) in &cases {
        let r = compactness_check(&map(text));
        check(r.verdict == *expected, || format!("{text}: {:?} via {}", r.verdict, r.method))?;
    }
    Ok(format!("{} maps", cases.len()))
}

fn c10_determinism() -> Outcome {
    let run = || {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(["skewsym", "report", "--map", ROTATED, "--seed", "7", "--no-timestamp"], &mut out, &mut err);
        (code, out, err)
    };
    let (c1, o1, e1) = run();
    let (c2, o2, _) = run();
    check(c1 == 0 && c2 == 0, || format!("exit codes {c1}, {c2}: {}", String::from_utf8_lossy(&e1)))?;
    check(!o1.is_empty() && o1 == o2, || "reports differ".into())?;
    Ok(format!("{} bytes identical", o1.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 examples exact", c1_examples_exact),
        ("2 classification witnesses", c2_classification_witnesses),
        ("3 oracle equivalence", c3_oracle_equivalence),
        ("4 one-variable rotations", c4_one_variable),
        ("5 Green functional equation", c5_green_equation),
        ("6 Böttcher asymptotics", c6_bottcher),
        ("7 numeric discrimination", c7_numeric_discrimination),
        ("8 rendering fidelity", c8_rendering),
        ("9 compactness", c9_compactness),
        ("10 determinism", c10_determinism),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} [{:?}]", t.elapsed()),
            Err(msg) => {
                println!("FAIL criterion {name}: {msg} [{:?}]", t.elapsed());
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn exact_status_labels() {
    let r = symmetry_group(&map(CUBIC)).unwrap();
    assert_eq!(r.status, Status::Exact(Justification::CorIII));
}
