//! One runner per claim. Each returns its outputs and verdict; module
//! errors become failing reports.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use frobfix::algebra::{BinaryField, Fe, Fp, PrimeField};
use frobfix::curve::{Curve, ZetaData};
use frobfix::group_action::AutomorphismGroup;
use frobfix::jacobian::Jacobian;
use frobfix::moduli::pencil::{random_planted_pencil, reduce_quadratic_pencil};
use frobfix::moduli::ptrick::{ptrick_verify, random_instance};
use frobfix::moduli::{
    build_e_with, fixed_by_whole_group, g_fixed_kummer_points, cube_difference_witness, pullback_on_kummer,
    sigma_fixed_points, trivial_bundle, verschiebung_on_kummer, GFixedBundle,
};
use frobfix::periodic::{random_module, roundtrip_check, with_unit_determinant};
use frobfix::{Error, Result};

use crate::report::{hex, hex_poly, proj, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    #[value(name = "lemma-3.1")]
    FixedLocus,
    #[value(name = "lemma-3.2")]
    OrderThree,
    #[value(name = "thm-1.2-decomposable")]
    VerschiebungFixed,
    #[value(name = "lemma-3.5")]
    LineFixing,
    #[value(name = "lemma-3.7")]
    PencilReduction,
    #[value(name = "group-structure")]
    GroupStructure,
    #[value(name = "section-2-roundtrip")]
    PeriodicRoundtrip,
}

impl Claim {
    pub fn id(self) -> &'static str {
        match self {
            Claim::FixedLocus => "lemma-3.1",
            Claim::OrderThree => "lemma-3.2",
            Claim::VerschiebungFixed => "thm-1.2-decomposable",
            Claim::LineFixing => "lemma-3.5",
            Claim::PencilReduction => "lemma-3.7",
            Claim::GroupStructure => "group-structure",
            Claim::PeriodicRoundtrip => "section-2-roundtrip",
        }
    }

    fn uses_curve(self) -> bool {
        !matches!(self, Claim::LineFixing | Claim::PencilReduction | Claim::PeriodicRoundtrip)
    }

    fn uses_seed(self) -> bool {
        matches!(self, Claim::LineFixing | Claim::PencilReduction | Claim::PeriodicRoundtrip)
    }
}

pub const LINE_FIXING_INSTANCES: usize = 200;
pub const PENCIL_INSTANCES: usize = 200;
pub const ROUNDTRIP_MODULES: usize = 100;

struct Outcome {
    outputs: Value,
    pass: bool,
    diagnostics: Vec<String>,
}

impl Outcome {
    fn new(outputs: Value, pass: bool) -> Self {
        Outcome { outputs, pass, diagnostics: Vec::new() }
    }
}

pub fn run(claim: Claim, curve: &Curve, seed: u64, cap: u64) -> Report {
    let result = match claim {
        Claim::FixedLocus => fixed_locus(curve),
        Claim::OrderThree => bundle_witnesses(curve),
        Claim::VerschiebungFixed => verschiebung_fixed(curve),
        Claim::LineFixing => line_fixing(seed),
        Claim::PencilReduction => pencil_reduction(seed),
        Claim::GroupStructure => group_structure(curve),
        Claim::PeriodicRoundtrip => periodic_roundtrip(seed, cap),
    };
    let mut inputs = serde_json::Map::new();
    if claim == Claim::PeriodicRoundtrip {
        inputs.insert("cap".into(), json!(cap));
    }
    if claim == Claim::FixedLocus {
        inputs.insert("search_bound".into(), json!(search_bound(curve)));
    }
    let outcome = result.unwrap_or_else(|e| Outcome {
        outputs: Value::Null,
        pass: false,
        diagnostics: vec![format!("error: {e}")],
    });
    Report {
        claim: claim.id().into(),
        curve: claim.uses_curve().then(|| curve.spec_string()),
        seed: claim.uses_seed().then_some(seed),
        inputs: Value::Object(inputs),
        outputs: outcome.outputs,
        pass: outcome.pass,
        diagnostics: outcome.diagnostics,
    }
}

/// k with GF(q^k) of degree at most 8 over GF(2), and k <= 3.
pub fn search_bound(curve: &Curve) -> u32 {
    (8 / curve.base().degree()).clamp(1, 3)
}

fn bundles(group: &AutomorphismGroup) -> Result<[GFixedBundle; 3]> {
    Ok([trivial_bundle(&group.curve), build_e_with(group, 1)?, build_e_with(group, 2)?])
}

fn fixed_locus(curve: &Curve) -> Result<Outcome> {
    let group = AutomorphismGroup::new(curve)?;
    let known = bundles(&group)?;
    let points = g_fixed_kummer_points(curve, search_bound(curve))?;
    let mut listed = Vec::new();
    let mut labels = Vec::new();
    let mut all_fixed = true;
    for p in &points {
        let jac = Jacobian::over(curve, p.field())?;
        let fixed = fixed_by_whole_group(&group, &jac, p.class())?;
        all_fixed &= fixed;
        let mut label = None;
        for b in &known {
            if p.same_as(&b.kummer)? {
                label = Some(b.label.to_string());
            }
        }
        labels.push(label.clone());
        listed.push(json!({"class": p.to_string(), "label": label, "fixed_by_all_12": fixed}));
    }
    let mut distinct: Vec<&String> = labels.iter().flatten().collect();
    distinct.sort();
    distinct.dedup();
    let pass = points.len() == 3 && distinct.len() == 3 && all_fixed;
    Ok(Outcome::new(json!({"lemma": "3.1", "fixed_points": listed, "count": points.len()}), pass))
}

fn order_three(b: &GFixedBundle) -> Result<bool> {
    let c = b.kummer.class();
    let jac = Jacobian::over(&c.curve(), c.field())?;
    Ok(!c.is_identity() && jac.mul_int(c, 3)?.is_identity())
}

fn bundle_witnesses(curve: &Curve) -> Result<Outcome> {
    let group = AutomorphismGroup::new(curve)?;
    let [_, e1, e2] = bundles(&group)?;
    let orders = json!({"E1": order_three(&e1)?, "E2": order_three(&e2)?});
    let mut pass = order_three(&e1)? && order_three(&e2)?;
    let (jac, fixed) = sigma_fixed_points(&group)?;
    let mut witnesses = Vec::new();
    for q in &fixed {
        let w = cube_difference_witness(&group, &jac, q)?;
        witnesses.push(json!({
            "q": q.to_string(),
            "pole_bound": w.pole_bound,
            "a": hex_poly(&w.a),
            "b": hex_poly(&w.b),
            "denominator": hex_poly(&w.denominator),
        }));
    }
    pass &= witnesses.len() == 4;
    let mut pullbacks = Vec::new();
    for n in 0..=1 {
        let lower = AutomorphismGroup::new(&curve.twisted(n))?;
        let upper = AutomorphismGroup::new(&curve.twisted(n + 1))?;
        for j in [1, 2] {
            let here = build_e_with(&lower, j)?;
            let pulled = pullback_on_kummer(&build_e_with(&upper, j)?.kummer)?;
            let equal = pulled.same_as(&here.kummer)?;
            pass &= equal;
            pullbacks.push(json!({"n": n, "bundle": here.label.to_string(), "equal": equal}));
        }
    }
    Ok(Outcome::new(json!({"order_three": orders, "witnesses": witnesses, "pullbacks": pullbacks}), pass))
}

fn verschiebung_fixed(curve: &Curve) -> Result<Outcome> {
    let group = AutomorphismGroup::new(curve)?;
    let mut rows = Vec::new();
    let mut pass = true;
    for b in bundles(&group)? {
        let image = verschiebung_on_kummer(&b.kummer)?;
        let fixed = image == b.kummer;
        pass &= fixed;
        rows.push(json!({"label": b.label.to_string(), "point": b.kummer.to_string(), "image": image.to_string(), "fixed": fixed}));
    }
    let mut out = Outcome::new(json!({"fixed_points": rows}), pass);
    out.diagnostics.push("only the three decomposable points of the fixed line are checked; its stable points have no coordinates here".into());
    Ok(out)
}

fn line_fixing(seed: u64) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f4 = BinaryField::default_for(2)?;
    let f3 = PrimeField::new(3).ok_or_else(|| Error::Precondition("GF(3)".into()))?;
    let (mut passed, mut by_p) = (0, [0usize; 2]);
    let mut diagnostics = Vec::new();
    for i in 0..LINE_FIXING_INSTANCES {
        let dim = rng.gen_range(1..=3);
        let ok = if i % 2 == 0 {
            let (t, p1, p2) = random_instance::<Fe, _>(&f4, dim, &mut rng);
            ptrick_verify(&[t], &p1, &p2).map(|v| v.eigenvalues.iter().all(|(a, b)| a == b))
        } else {
            let (t, p1, p2) = random_instance::<Fp, _>(&f3, dim, &mut rng);
            ptrick_verify(&[t], &p1, &p2).map(|v| v.eigenvalues.iter().all(|(a, b)| a == b))
        };
        match ok {
            Ok(true) => {
                passed += 1;
                by_p[i % 2] += 1;
            }
            Ok(false) => diagnostics.push(format!("instance {i}: unequal eigenvalues")),
            Err(e) => diagnostics.push(format!("instance {i}: {e}")),
        }
    }
    let mut out = Outcome::new(
        json!({"instances": LINE_FIXING_INSTANCES, "passed": passed, "passed_p2": by_p[0], "passed_p3": by_p[1]}),
        passed == LINE_FIXING_INSTANCES,
    );
    out.diagnostics = diagnostics;
    Ok(out)
}

fn pencil_reduction(seed: u64) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (f4, f16) = (BinaryField::default_for(2)?, BinaryField::default_for(4)?);
    let (mut passed, mut points) = (0, 0);
    let mut diagnostics = Vec::new();
    for i in 0..PENCIL_INSTANCES {
        let (h1, h2, b) = random_planted_pencil(f4, &mut rng);
        match reduce_quadratic_pencil(&h1, &h2, b).and_then(|r| r.agrees_on(&h1, &h2, f16)) {
            Ok(n) => {
                passed += 1;
                points += n;
            }
            Err(e) => diagnostics.push(format!("pencil {i}: {e}")),
        }
    }
    let mut out = Outcome::new(
        json!({"instances": PENCIL_INSTANCES, "passed": passed, "points_checked": points}),
        passed == PENCIL_INSTANCES,
    );
    out.diagnostics = diagnostics;
    Ok(out)
}

fn group_structure(curve: &Curve) -> Result<Outcome> {
    let group = AutomorphismGroup::new(curve)?;
    let d = curve.base().degree();
    let degree = d * 4 / gcd(d, 4);
    let model = curve.model(BinaryField::default_for(degree)?)?;
    let fixed = group.elements[group.sigma].fixed_points(&model)?;
    let jac = Jacobian::new(curve.base_model());
    let classes = jac.classes()?;
    let mut negated = 0;
    for c in &classes {
        if group.elements[group.iota].act_on_class(&jac, c)? == jac.neg(c)? {
            negated += 1;
        }
    }
    let elements: Vec<Value> = group
        .names
        .iter()
        .zip(&group.elements)
        .map(|(n, g)| json!({"name": n, "map": g.to_string()}))
        .collect();
    let table: Vec<Vec<&str>> =
        group.table.iter().map(|row| row.iter().map(|&k| group.names[k].as_str()).collect()).collect();
    let pass = group.len() == 12 && fixed.len() == 4 && negated == classes.len();
    Ok(Outcome::new(
        json!({
            "order": group.len(),
            "elements": elements,
            "cayley_table": table,
            "sigma_fixed_points": {"field_degree": degree, "points": fixed.iter().map(|p| p.to_string()).collect::<Vec<_>>()},
            "iota_negation": {"classes": classes.len(), "negated": negated},
        }),
        pass,
    ))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn periodic_roundtrip(seed: u64, cap: u64) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut passed, mut strict, mut resampled) = (0, 0, 0);
    let mut diagnostics = Vec::new();
    for i in 0..ROUNDTRIP_MODULES {
        let q_log = 1 + (i % 2) as u32;
        loop {
            let (r, n) = (rng.gen_range(1..=2), rng.gen_range(1..=4));
            let mut module = random_module(q_log, r, n, &mut rng)?;
            if i % 4 >= 2 {
                module = with_unit_determinant(&module)?;
            }
            match roundtrip_check(&module, cap, &mut rng) {
                Ok(rt) => {
                    if rt.strict {
                        strict += 1;
                    }
                    if rt.normalized_det_one == Some(false) {
                        diagnostics.push(format!("module {i}: det ρ ≠ 1 after normalization"));
                    } else {
                        passed += 1;
                    }
                    break;
                }
                Err(Error::Precondition(_)) | Err(Error::SplittingFieldTooLarge(_)) => resampled += 1,
                Err(e) => {
                    diagnostics.push(format!("module {i}: {e}"));
                    break;
                }
            }
        }
    }
    let mut out = Outcome::new(
        json!({"modules": ROUNDTRIP_MODULES, "passed": passed, "strict": strict, "resampled": resampled}),
        passed == ROUNDTRIP_MODULES,
    );
    out.diagnostics = diagnostics;
    Ok(out)
}

/// Branch points, ordinarity, point counts and zeta data.
pub fn curve_info(curve: &Curve) -> Report {
    let result = (|| -> Result<Outcome> {
        let model = curve.base_model();
        let zeta = ZetaData::of_curve(curve)?;
        let q = curve.base().order();
        let in_weil = ZetaData::curve_count_in_weil_interval(q, zeta.n1)
            && ZetaData::curve_count_in_weil_interval(q * q, zeta.n2)
            && ZetaData::jacobian_order_in_weil_interval(q, zeta.jacobian_order());
        let branch: Vec<String> = model.branch_points().iter().map(proj).collect();
        Ok(Outcome::new(
            json!({
                "branch_points": branch,
                "ordinary": model.is_ordinary(),
                "point_counts": {"q": zeta.n1, "q2": zeta.n2},
                "zeta": {"a1": zeta.a1, "a2": zeta.a2, "l_coefficients": zeta.l_coefficients(), "jacobian_order": zeta.jacobian_order()},
                "weil_bounds_hold": in_weil,
                "h": hex_poly(&curve.h()),
                "f": hex_poly(&curve.f()),
                "parameter": hex(curve.parameter()),
            }),
            in_weil,
        ))
    })();
    let outcome = result.unwrap_or_else(|e| Outcome { outputs: Value::Null, pass: false, diagnostics: vec![format!("error: {e}")] });
    Report {
        claim: "curve-info".into(),
        curve: Some(curve.spec_string()),
        seed: None,
        inputs: json!({}),
        outputs: outcome.outputs,
        pass: outcome.pass,
        diagnostics: outcome.diagnostics,
    }
}
