//! Acceptance suite: one [PASS]/[FAIL] line per criterion, all exact.
//! Exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use frobfix::algebra::{BinaryField, Fe, Fp, PrimeField, Series, SeriesRing};
use frobfix::curve::{Curve, CurvePoint, ZetaData};
use frobfix::group_action::AutomorphismGroup;
use frobfix::jacobian::{torsion_subgroup, FormalDivisor, Jacobian};
use frobfix::moduli::pencil::{random_planted_pencil, reduce_quadratic_pencil};
use frobfix::moduli::ptrick::{ptrick_verify, random_instance};
use frobfix::moduli::{
    build_e_with, fixed_by_whole_group, g_fixed_kummer_points, cube_difference_witness, pullback_on_kummer,
    sigma_fixed_points, trivial_bundle, verschiebung_on_kummer, GFixedBundle,
};
use frobfix::periodic::{
    monodromy_order, one_plus_s, order_growth_profile, random_module, roundtrip_check, with_unit_determinant,
    FrobPeriodicModule,
};
use frobfix::Error;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: Error) -> String {
    e.to_string()
}

fn gf(d: u32) -> BinaryField {
    BinaryField::default_for(d).unwrap()
}

fn w_curve() -> Curve {
    Curve::new(gf(2).generator(), 0).unwrap()
}

fn bundles(group: &AutomorphismGroup) -> Result<[GFixedBundle; 3], String> {
    Ok([trivial_bundle(&group.curve), build_e_with(group, 1).map_err(err)?, build_e_with(group, 2).map_err(err)?])
}

fn fixed_locus_count() -> Outcome {
    let curve = w_curve();
    let group = AutomorphismGroup::new(&curve).map_err(err)?;
    let known = bundles(&group)?;
    let points = g_fixed_kummer_points(&curve, 3).map_err(err)?;
    ensure!(points.len() == 3, "{} points", points.len());
    let mut matched = Vec::new();
    for p in &points {
        let jac = Jacobian::over(&curve, p.field()).map_err(err)?;
        ensure!(fixed_by_whole_group(&group, &jac, p.class()).map_err(err)?, "{p} not fixed by all 12 elements");
        let hits: Vec<_> = known.iter().filter(|b| p.same_as(&b.kummer).unwrap()).map(|b| b.label).collect();
        ensure!(hits.len() == 1, "{p} matches {hits:?}");
        matched.push(hits[0].to_string());
    }
    matched.sort();
    ensure!(matched == ["E1", "E2", "Trivial"], "matched {matched:?}");
    Ok("3 points: Trivial, E1, E2".into())
}

fn e_classes_and_pullbacks() -> Outcome {
    let curve = w_curve();
    let group = AutomorphismGroup::new(&curve).map_err(err)?;
    let [_, e1, e2] = bundles(&group)?;
    for e in [&e1, &e2] {
        let c = e.kummer.class();
        let jac = Jacobian::over(&curve, c.field()).map_err(err)?;
        let multiples: Vec<bool> =
            (1..=3).map(|k| jac.mul_int(c, k).map(|m| m.is_identity())).collect::<Result<_, _>>().map_err(err)?;
        ensure!(multiples == [false, false, true], "{} has multiples {multiples:?}", e.label);
    }
    let (jac, fixed) = sigma_fixed_points(&group).map_err(err)?;
    ensure!(fixed.len() == 4, "{} sigma-fixed points", fixed.len());
    let tau = &group.elements[group.tau01];
    for q in &fixed {
        let w = cube_difference_witness(&group, &jac, q).map_err(err)?;
        let tq = tau.act_on_point(jac.model(), q).map_err(err)?;
        // off the vertical line through τ01(Q) the function is defined and
        // vanishes exactly at Q; the denominator vanishes only on that line
        for p in jac.model().points() {
            let CurvePoint::Affine { x, y } = p else { continue };
            let ok = if w.denominator.eval(&x).is_zero() {
                Some(x) == tq.x()
            } else {
                w.eval(x, y).is_some_and(|v| v.is_zero() == (p == *q))
            };
            ensure!(ok, "witness for Q = {q} misbehaves at {p}");
        }
    }
    for n in 0..=1 {
        let lower = AutomorphismGroup::new(&curve.twisted(n)).map_err(err)?;
        let upper = AutomorphismGroup::new(&curve.twisted(n + 1)).map_err(err)?;
        for j in [1, 2] {
            let here = build_e_with(&lower, j).map_err(err)?;
            let pulled = pullback_on_kummer(&build_e_with(&upper, j).map_err(err)?.kummer).map_err(err)?;
            ensure!(pulled.same_as(&here.kummer).map_err(err)?, "pullback of E{j} from X({}) differs", n + 1);
        }
    }
    Ok("E1, E2 of order 3; 4 witnesses; 4 pullbacks equal".into())
}

fn verschiebung_fixes_decomposable_points() -> Outcome {
    let mut curves = vec![w_curve()];
    curves.extend(gf(4).elements().skip(2).map(|t| Curve::new(t, 0).unwrap()));
    for curve in &curves {
        let group = AutomorphismGroup::new(curve).map_err(err)?;
        for b in bundles(&group)? {
            let image = verschiebung_on_kummer(&b.kummer).map_err(err)?;
            ensure!(image == b.kummer, "V moves {} on {curve}", b.label);
        }
    }
    Ok(format!("{} curves, 3 points each", curves.len()))
}

fn element_orders(group: &AutomorphismGroup) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for g in 0..group.len() {
        let (mut pw, mut k) = (g, 1);
        while pw != group.identity {
            pw = group.mul(pw, g);
            k += 1;
        }
        *hist.entry(k).or_insert(0) += 1;
    }
    hist
}

fn group_structure() -> Outcome {
    let curve = w_curve();
    let group = AutomorphismGroup::new(&curve).map_err(err)?;
    let n = group.len();
    ensure!(n == 12, "{n} elements");
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                ensure!(group.mul(group.mul(a, b), c) == group.mul(a, group.mul(b, c)), "table not associative");
            }
        }
    }
    // order statistics and centre of Z/2 x S3
    let hist = element_orders(&group);
    ensure!(hist == BTreeMap::from([(1, 1), (2, 7), (3, 2), (6, 2)]), "element orders {hist:?}");
    let centre: Vec<usize> = (0..n).filter(|&g| (0..n).all(|h| group.mul(g, h) == group.mul(h, g))).collect();
    ensure!(centre == { let mut v = vec![group.identity, group.iota]; v.sort(); v }, "centre {centre:?}");
    // the table agrees with composition of point maps over GF(16)
    let model = curve.model(gf(4)).map_err(err)?;
    let points = model.points();
    for a in 0..n {
        for b in 0..n {
            let (ga, gb, gab) = (&group.elements[a], &group.elements[b], &group.elements[group.mul(a, b)]);
            for p in &points {
                let lhs = ga.act_on_point(&model, &gb.act_on_point(&model, p).map_err(err)?).map_err(err)?;
                ensure!(lhs == gab.act_on_point(&model, p).map_err(err)?, "table entry ({a}, {b}) wrong at {p}");
            }
        }
    }
    let sigma = &group.elements[group.sigma];
    let fixed: Vec<&CurvePoint> = points.iter().filter(|p| sigma.act_on_point(&model, p).unwrap() == **p).collect();
    ensure!(fixed.len() == 4, "sigma fixes {} points of C(GF(16))", fixed.len());
    let jac = Jacobian::new(curve.base_model());
    let classes = jac.classes().map_err(err)?;
    for c in &classes {
        let image = group.elements[group.iota].act_on_class(&jac, c).map_err(err)?;
        ensure!(image == jac.neg(c).map_err(err)?, "iota is not -1 on {c}");
    }
    Ok(format!("Z/2 x S3 table; sigma fixes 4 of {} points; iota = -1 on {} classes", points.len(), classes.len()))
}

fn random_divisor(points: &[CurvePoint], rng: &mut ChaCha8Rng) -> FormalDivisor {
    let mut d = FormalDivisor::new();
    for _ in 0..rng.gen_range(1..=4) {
        let p = points[rng.gen_range(0..points.len())];
        d.add_point(p, rng.gen_range(-3..=3));
    }
    d.balanced()
}

fn jacobian_integrity() -> Outcome {
    let curve = w_curve();
    let jac = Jacobian::over(&curve, gf(4)).map_err(err)?;
    let affine: Vec<CurvePoint> = jac.model().points().into_iter().filter(|p| !p.is_infinity()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let trials = 1000;
    for i in 0..trials {
        let d = random_divisor(&affine, &mut rng);
        let c = jac.class_of(&d).map_err(err)?;
        let (reduced, big, emb) = jac.split(&c).map_err(err)?;
        let diff = d.embed(emb).plus(&reduced.negated());
        ensure!(big.is_principal(&diff).map_err(err)?, "divisor {i}: D - red(D) not principal for {d}");
        // a shifted class must not pass the oracle
        let p = affine[rng.gen_range(0..affine.len())];
        let shifted = jac.add(&c, &jac.of_point(&p).map_err(err)?).map_err(err)?;
        let (reduced, big, emb) = jac.split(&shifted).map_err(err)?;
        let diff = d.embed(emb).plus(&reduced.negated());
        ensure!(!big.is_principal(&diff).map_err(err)?, "divisor {i}: oracle accepts a wrong class");
    }
    let small = Jacobian::new(curve.base_model());
    let zeta = ZetaData::of_curve(&curve).map_err(err)?;
    let classes = small.classes().map_err(err)?;
    let brute = small.classes_brute_force().map_err(err)?;
    ensure!(zeta.jacobian_order() == classes.len() as u64, "zeta {} vs {}", zeta.jacobian_order(), classes.len());
    ensure!(brute.len() == classes.len(), "brute force {} vs {}", brute.len(), classes.len());
    let order = classes.len() as i64;
    for (name, j) in [("GF(4)", &small), ("GF(16)", &jac)] {
        let all = j.classes().map_err(err)?;
        let n = all.len() as i64;
        for c in &all {
            ensure!(j.mul_int(c, n).map_err(err)?.is_identity(), "Lagrange fails over {name} for {c}");
        }
    }
    Ok(format!("{trials} divisors; #J(GF(4)) = {order}; Lagrange over GF(4) and GF(16)"))
}

fn ordinarity() -> Outcome {
    let mut rows = 0;
    for t in gf(4).elements().skip(2) {
        let curve = Curve::new(t, 0).map_err(err)?;
        let by_branch = curve.base_model().is_ordinary();
        let report = torsion_subgroup(&curve, 2, 2).map_err(err)?;
        let by_torsion = report.stabilized && report.classes.len() == 4;
        ensure!(by_branch == by_torsion, "t = {t}: branch {by_branch}, 2-torsion {:?}", report.counts);
        rows += 1;
    }
    Ok(format!("{rows} parameters agree"))
}

fn line_fixing_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    let f4 = gf(2);
    let f3 = PrimeField::new(3).unwrap();
    for i in 0..200 {
        let dim = rng.gen_range(1..=3);
        let verdict_ok = if i % 2 == 0 {
            let (t, p1, p2) = random_instance::<Fe, _>(&f4, dim, &mut rng);
            ptrick_verify(&[t], &p1, &p2).map(|v| v.eigenvalues.iter().all(|(a, b)| a == b))
        } else {
            let (t, p1, p2) = random_instance::<Fp, _>(&f3, dim, &mut rng);
            ptrick_verify(&[t], &p1, &p2).map(|v| v.eigenvalues.iter().all(|(a, b)| a == b))
        };
        ensure!(verdict_ok == Ok(true), "instance {i}: {verdict_ok:?}");
    }
    Ok("200 instances, p = 2 and 3".into())
}

fn pencil_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let mut points = 0;
    for i in 0..200 {
        let (h1, h2, b) = random_planted_pencil(gf(2), &mut rng);
        let red = reduce_quadratic_pencil(&h1, &h2, b).map_err(|e| format!("pencil {i}: {e}"))?;
        points += red.agrees_on(&h1, &h2, gf(4)).map_err(|e| format!("pencil {i}: {e}"))?;
    }
    Ok(format!("200 pencils, {points} point comparisons over GF(16)"))
}

fn periodic_roundtrip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut strict, mut resampled) = (0, 0);
    for i in 0..100 {
        let q_log = 1 + (i % 2) as u32;
        loop {
            let (r, n) = (rng.gen_range(1..=2), rng.gen_range(1..=4));
            let mut module = random_module(q_log, r, n, &mut rng).map_err(err)?;
            if i % 4 >= 2 {
                module = with_unit_determinant(&module).map_err(err)?;
            }
            match roundtrip_check(&module, 64, &mut rng) {
                Ok(rt) => {
                    if rt.strict {
                        strict += 1;
                        ensure!(rt.normalized_det_one == Some(true), "module {i}: det rho != 1");
                    }
                    break;
                }
                Err(Error::Precondition(_)) | Err(Error::SplittingFieldTooLarge(_)) => resampled += 1,
                Err(e) => return Err(format!("module {i}: {e}")),
            }
        }
    }
    ensure!(strict >= 50, "only {strict} strict modules");
    Ok(format!("100 modules ({strict} strict, {resampled} resampled past the witness field cap)"))
}

fn growth_profiles() -> Outcome {
    let profile = order_growth_profile(|n| one_plus_s(1, n), 32, 64).map_err(err)?;
    for (i, m) in profile.orders.iter().enumerate() {
        let n = i as u64 + 1;
        ensure!(*m == Some(n.next_power_of_two()), "n = {n}: order {m:?}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut families = 0;
    while families < 20 {
        let q_log = 1 + families % 2;
        let r = rng.gen_range(1..=2);
        let base = random_module(q_log, r, 1, &mut rng).map_err(err)?;
        let constant = |n: usize| -> Result<FrobPeriodicModule, Error> {
            let ring = SeriesRing { base: base.field(), n };
            let a = base.matrix().map(ring.clone(), |x| Series::constant(ring.clone(), x.coeff(0)));
            FrobPeriodicModule::new(q_log, a)
        };
        let Some(m1) = monodromy_order(&base, 64).ok().flatten() else { continue };
        let p = order_growth_profile(constant, 8, 64).map_err(err)?;
        ensure!(p.orders.iter().all(|&m| m == Some(m1.m)), "constant module profile {:?}", p.orders);
        families += 1;
    }
    Ok("(1+s)I matches min{2^j >= n} for n <= 32; 20 constant families flat".into())
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("G-fixed Kummer points over GF(4^k), k <= 3", 60, fixed_locus_count),
        ("E1, E2 order 3, explicit functions, Frobenius pullbacks", 60, e_classes_and_pullbacks),
        ("Verschiebung fixes Trivial, E1, E2", 60, verschiebung_fixes_decomposable_points),
        ("Automorphism group, sigma fixed points, iota = -1", 120, group_structure),
        ("Cantor vs reduction oracle, zeta vs enumeration, Lagrange", 120, jacobian_integrity),
        ("Branch-point ordinarity vs 2-torsion over GF(16)", 120, ordinarity),
        ("Unipotent transforms fix the line through two fixed points", 60, line_fixing_suite),
        ("Quadratic pencils with a base point reduce to linear maps", 60, pencil_suite),
        ("Frobenius-periodic round trip", 120, periodic_roundtrip),
        ("Order growth profiles", 60, growth_profiles),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => Err(format!("{detail}; took longer than {limit}s")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("[PASS] {}. {name}: {detail} ({:.1}s)", i + 1, elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {why} ({:.1}s)", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
