//! The automorphism group Z/2 × S3 of the family: Möbius maps permuting the
//! branch points {0, 1, ∞}, their lifts to the curve, and the induced
//! actions on points and divisor classes.

use std::fmt;

use crate::algebra::forms::ProjPoint;
use crate::algebra::gf2m::BinaryField;
use crate::algebra::{Fe, FieldEmbedding, Matrix, Poly};
use crate::curve::{Curve, CurveModel, CurvePoint};
use crate::error::{Error, Result};
use crate::jacobian::{FormalDivisor, Jacobian, JacobianClass};

/// x -> (αx + β)/(γx + δ), up to scalar.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MobiusMap {
    pub alpha: Fe,
    pub beta: Fe,
    pub gamma: Fe,
    pub delta: Fe,
}

impl MobiusMap {
    pub fn new(alpha: Fe, beta: Fe, gamma: Fe, delta: Fe) -> Result<Self> {
        if (alpha * delta + beta * gamma).is_zero() {
            return Err(Error::Singular);
        }
        Ok(MobiusMap { alpha, beta, gamma, delta })
    }

    fn bits(field: BinaryField, a: u64, b: u64, c: u64, d: u64) -> Self {
        let e = |v| field.element(v);
        MobiusMap { alpha: e(a), beta: e(b), gamma: e(c), delta: e(d) }
    }

    pub fn identity(field: BinaryField) -> Self {
        Self::bits(field, 1, 0, 0, 1)
    }

    /// x + 1: swaps 0 and 1.
    pub fn tau01(field: BinaryField) -> Self {
        Self::bits(field, 1, 1, 0, 1)
    }

    /// 1/x: swaps 0 and ∞.
    pub fn tau0inf(field: BinaryField) -> Self {
        Self::bits(field, 0, 1, 1, 0)
    }

    /// x/(x + 1): swaps 1 and ∞.
    pub fn tau1inf(field: BinaryField) -> Self {
        Self::bits(field, 1, 0, 1, 1)
    }

    /// 1/(x + 1): 0 -> 1 -> ∞ -> 0.
    pub fn sigma(field: BinaryField) -> Self {
        Self::bits(field, 0, 1, 1, 1)
    }

    /// (x + 1)/x, the inverse of sigma.
    pub fn sigma2(field: BinaryField) -> Self {
        Self::bits(field, 1, 1, 1, 0)
    }

    /// The six maps permuting {0, 1, ∞}, named.
    pub fn s3(field: BinaryField) -> [(&'static str, MobiusMap); 6] {
        [
            ("id", Self::identity(field)),
            ("sigma", Self::sigma(field)),
            ("sigma^2", Self::sigma2(field)),
            ("tau01", Self::tau01(field)),
            ("tau0inf", Self::tau0inf(field)),
            ("tau1inf", Self::tau1inf(field)),
        ]
    }

    pub fn field(&self) -> BinaryField {
        self.alpha.field()
    }

    pub fn embed(&self, e: &FieldEmbedding) -> Self {
        MobiusMap { alpha: e.map(self.alpha), beta: e.map(self.beta), gamma: e.map(self.gamma), delta: e.map(self.delta) }
    }

    pub fn apply(&self, p: ProjPoint) -> ProjPoint {
        ProjPoint::new(self.alpha * p.x + self.beta * p.y, self.gamma * p.x + self.delta * p.y)
            .expect("invertible map")
    }

    /// self ∘ other.
    pub fn compose(&self, o: &MobiusMap) -> MobiusMap {
        MobiusMap {
            alpha: self.alpha * o.alpha + self.beta * o.gamma,
            beta: self.alpha * o.beta + self.beta * o.delta,
            gamma: self.gamma * o.alpha + self.delta * o.gamma,
            delta: self.gamma * o.beta + self.delta * o.delta,
        }
    }

    /// Equality in PGL_2.
    pub fn projectively_equal(&self, o: &MobiusMap) -> bool {
        let a = [self.alpha, self.beta, self.gamma, self.delta];
        let b = [o.alpha, o.beta, o.gamma, o.delta];
        (0..4).all(|i| (0..4).all(|j| a[i] * b[j] == a[j] * b[i]))
    }

    /// The induced permutation of [0, 1, ∞], as indices into that list.
    pub fn branch_permutation(&self) -> Option<[usize; 3]> {
        let f = self.field();
        let pts = [ProjPoint::affine(f.zero()), ProjPoint::affine(f.one()), ProjPoint::infinity(f)];
        let mut perm = [0; 3];
        for (i, p) in pts.iter().enumerate() {
            perm[i] = pts.iter().position(|q| *q == self.apply(*p))?;
        }
        Some(perm)
    }

    /// N(x) = αx + β.
    pub fn numerator(&self) -> Poly<Fe> {
        Poly::new(self.field(), vec![self.beta, self.alpha])
    }

    /// D(x) = γx + δ.
    pub fn denominator(&self) -> Poly<Fe> {
        Poly::new(self.field(), vec![self.delta, self.gamma])
    }
}

/// (x, y) -> (m(x), (a(x) y + b(x)) / c(x)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveAutomorphism {
    pub curve: Curve,
    pub mobius: MobiusMap,
    pub a: Poly<Fe>,
    pub b: Poly<Fe>,
    pub c: Poly<Fe>,
    /// Set on the second lift, which differs from the principal one by ι.
    pub with_involution: bool,
}

impl fmt::Display for CurveAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hex = |p: &Poly<Fe>| p.coeffs().iter().map(|c| format!("{:#x}", c.bits())).collect::<Vec<_>>().join(",");
        let m = &self.mobius;
        write!(
            f,
            "m={:#x},{:#x},{:#x},{:#x};a={};b={};c={}",
            m.alpha.bits(),
            m.beta.bits(),
            m.gamma.bits(),
            m.delta.bits(),
            hex(&self.a),
            hex(&self.b),
            hex(&self.c)
        )
    }
}

/// An automorphism with its data mapped into a model's field.
#[derive(Clone, Debug)]
pub struct PointMap<'m> {
    model: &'m CurveModel,
    mobius: MobiusMap,
    a: Poly<Fe>,
    b: Poly<Fe>,
    c: Poly<Fe>,
}

impl PointMap<'_> {
    pub fn apply(&self, p: &CurvePoint) -> Result<CurvePoint> {
        let model = self.model;
        let (n, d) = (self.mobius.numerator(), self.mobius.denominator());
        match *p {
            CurvePoint::Infinity => {
                if self.mobius.gamma.is_zero() {
                    return Ok(CurvePoint::Infinity);
                }
                // m(∞) is a finite branch point; its only point is Weierstrass.
                let x = self.mobius.alpha / self.mobius.gamma;
                let ys = model.ys_over(x);
                match ys.as_slice() {
                    [y] => Ok(CurvePoint::Affine { x, y: *y }),
                    _ => Err(Error::Verification("image of ∞ is not a Weierstrass point".into())),
                }
            }
            CurvePoint::Affine { x, y } => {
                let dx = d.eval(&x);
                if dx.is_zero() {
                    if !model.h().eval(&x).is_zero() {
                        return Err(Error::Verification(format!("non-Weierstrass point {p} sent to ∞")));
                    }
                    return Ok(CurvePoint::Infinity);
                }
                let cx = self.c.eval(&x);
                let cinv = cx
                    .inverse()
                    .ok_or_else(|| Error::Verification(format!("y-transform undefined at {p}")))?;
                let image = CurvePoint::Affine { x: n.eval(&x) / dx, y: (self.a.eval(&x) * y + self.b.eval(&x)) * cinv };
                debug_assert!(model.on_curve(&image).unwrap());
                Ok(image)
            }
        }
    }
}

impl CurveAutomorphism {
    /// The automorphism acting on points of `model`, whose curve must be
    /// this automorphism's curve.
    pub fn on<'m>(&self, model: &'m CurveModel) -> Result<PointMap<'m>> {
        if model.curve() != self.curve {
            return Err(Error::InvalidCurve(format!("automorphism of {} applied on {}", self.curve, model.curve())));
        }
        let e = model.embedding();
        Ok(PointMap { model, mobius: self.mobius.embed(e), a: e.map_poly(&self.a), b: e.map_poly(&self.b), c: e.map_poly(&self.c) })
    }

    pub fn act_on_point(&self, model: &CurveModel, p: &CurvePoint) -> Result<CurvePoint> {
        self.on(model)?.apply(p)
    }

    /// Acts on a representing divisor over a splitting field, then reduces
    /// and descends.
    pub fn act_on_class(&self, jac: &Jacobian, c: &JacobianClass) -> Result<JacobianClass> {
        let (d, jac_ext, emb) = jac.split(c)?;
        let map = self.on(jac_ext.model())?;
        let mut image = FormalDivisor::new();
        for (p, m) in d.terms() {
            image.add_point(map.apply(p)?, m);
        }
        jac.descend_class(&jac_ext.class_of(&image)?, emb)
    }

    /// Points of C(E) fixed by this automorphism.
    pub fn fixed_points(&self, model: &CurveModel) -> Result<Vec<CurvePoint>> {
        let map = self.on(model)?;
        let mut out = Vec::new();
        for p in model.points() {
            if map.apply(&p)? == p {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// The corresponding automorphism of X(n+1): coefficients squared.
    pub fn frobenius_twist(&self) -> CurveAutomorphism {
        let sq = |p: &Poly<Fe>| p.coeff_frobenius(1);
        let m = &self.mobius;
        CurveAutomorphism {
            curve: self.curve.successor(),
            mobius: MobiusMap { alpha: m.alpha.square(), beta: m.beta.square(), gamma: m.gamma.square(), delta: m.delta.square() },
            a: sq(&self.a),
            b: sq(&self.b),
            c: sq(&self.c),
            with_involution: self.with_involution,
        }
    }

    /// Exact check that substituting the map into y^2 + h y + f gives a
    /// multiple of the curve equation: after clearing denominators, the
    /// y-coefficient and the constant term vanish modulo y^2 = h y + f.
    pub fn preserves_equation(&self) -> bool {
        let (n, d) = (self.mobius.numerator(), self.mobius.denominator());
        let (h, f) = (self.curve.h(), self.curve.f());
        let (y_coeff, constant) = transformed_equation(&n, &d, &h, &f, &self.a, &self.b, &self.c);
        y_coeff.is_zero() && constant.is_zero()
    }
}

fn pow(p: &Poly<Fe>, k: u32) -> Poly<Fe> {
    (0..k).fold(Poly::one(p.ctx()), |acc, _| &acc * p)
}

/// D^5 f(N/D).
fn homogenized(f: &Poly<Fe>, n: &Poly<Fe>, d: &Poly<Fe>) -> Poly<Fe> {
    let mut acc = Poly::zero(n.ctx());
    for (i, c) in f.coeffs().iter().enumerate() {
        acc = &acc + &(&pow(n, i as u32) * &pow(d, 5 - i as u32)).scale(c);
    }
    acc
}

/// For Y = (a y + b)/c and X = N/D, returns the y-coefficient and the
/// constant term of D^6 c^2 (Y^2 + h(X) Y + f(X)) reduced by y^2 = h y + f.
fn transformed_equation(
    n: &Poly<Fe>,
    d: &Poly<Fe>,
    h: &Poly<Fe>,
    f: &Poly<Fe>,
    a: &Poly<Fe>,
    b: &Poly<Fe>,
    c: &Poly<Fe>,
) -> (Poly<Fe>, Poly<Fe>) {
    let hh = &(n * n) + &(n * d);
    let d4 = pow(d, 4);
    let d6 = &d4 * &(d * d);
    let y_coeff = &(&d6 * &(&(a * a) * h)) + &(&d4 * &(&hh * &(c * a)));
    let constant = &(&(&d6 * &(&(a * a) * f)) + &(&d6 * &(b * b)))
        + &(&(&d4 * &(&hh * &(c * b))) + &(d * &(&homogenized(f, n, d) * &(c * c))));
    (y_coeff, constant)
}

/// The two lifts of `m` to the curve over its base field, principal lift
/// first (smaller b in coefficient order).
pub fn lift_automorphism(curve: &Curve, m: &MobiusMap) -> Result<[CurveAutomorphism; 2]> {
    if m.field() != curve.base() {
        return Err(Error::FieldMismatch(m.field().degree(), curve.base().degree()));
    }
    if m.branch_permutation().is_none() {
        return Err(Error::Precondition("Möbius map does not permute {0, 1, ∞}".into()));
    }
    let (h, f) = (curve.h(), curve.f());
    if let Some((a, b, c)) = solve_lift(m, &h, &f) {
        let other = &b + &(&h * &a);
        let key = |p: &Poly<Fe>| (0..6).map(|i| p.coeff(i).bits()).collect::<Vec<_>>();
        let (first, second) = if key(&b) <= key(&other) { (b, other) } else { (other, b) };
        let mk = |b: Poly<Fe>, flag| CurveAutomorphism {
            curve: *curve,
            mobius: *m,
            a: a.clone(),
            b,
            c: c.clone(),
            with_involution: flag,
        };
        return Ok([mk(first, false), mk(second, true)]);
    }
    let ext = BinaryField::default_for(2 * curve.base().degree())?;
    let e = FieldEmbedding::new(curve.base(), ext)?;
    let minimal = solve_lift(&m.embed(&e), &e.map_poly(&h), &e.map_poly(&f)).map(|_| 2);
    Err(Error::LiftNeedsExtension { minimal })
}

/// Undetermined coefficients with deg a <= 2, deg b <= 5, deg c <= 3.
///
/// The y-coefficient of the transformed equation forces
/// D^2 h a = (N^2 + N D) c, which fixes a/c; the constant term is then
/// D^6 b^2 + D^4 (N^2 + N D) c b = D^6 a^2 f + D F(N, D) c^2, which is
/// GF(2)-linear in the coefficient bits of b.
fn solve_lift(m: &MobiusMap, h: &Poly<Fe>, f: &Poly<Fe>) -> Option<(Poly<Fe>, Poly<Fe>, Poly<Fe>)> {
    let field = m.field();
    let (n, d) = (m.numerator(), m.denominator());
    let hh = &(&n * &n) + &(&n * &d);
    let g_side = &(&d * &d) * h;
    let g = hh.gcd(&g_side);
    let c0 = g_side.div_exact(&g)?;
    let scale = c0.lead()?.inverse()?;
    let (a0, c0) = (hh.div_exact(&g)?.scale(&scale), c0.scale(&scale));
    // multipliers k, smallest first: monic of increasing degree
    let max_k = (3 - c0.deg().min(3)).min(2 - a0.deg().min(2)) as usize;
    for deg in 0..=max_k {
        let count = field.order().pow(deg as u32);
        for idx in 0..count {
            let mut coeffs: Vec<Fe> = (0..deg)
                .map(|i| field.element((idx / field.order().pow(i as u32)) % field.order()))
                .collect();
            coeffs.push(field.one());
            let k = Poly::new(field, coeffs);
            let (a, c) = (&a0 * &k, &c0 * &k);
            if let Some(b) = solve_b(&n, &d, h, f, &a, &c) {
                return Some((a, b, c));
            }
        }
    }
    None
}

/// Solves the constant-term equation for b with deg b <= 5.
fn solve_b(n: &Poly<Fe>, d: &Poly<Fe>, h: &Poly<Fe>, f: &Poly<Fe>, a: &Poly<Fe>, c: &Poly<Fe>) -> Option<Poly<Fe>> {
    let field = *n.ctx();
    let bits = field.degree() as usize;
    let zero_b = Poly::zero(&field);
    let (_, rhs) = transformed_equation(n, d, h, f, a, &zero_b, c);
    let lin = |b: &Poly<Fe>| {
        let (_, full) = transformed_equation(n, d, h, f, a, b, c);
        &full - &rhs
    };
    let unknowns = 6 * bits;
    let columns: Vec<Poly<Fe>> = (0..6)
        .flat_map(|i| (0..bits).map(move |j| (i, j)))
        .map(|(i, j)| lin(&Poly::monomial(field.element(1 << j), i)))
        .collect();
    let len = columns.iter().chain(std::iter::once(&rhs)).map(|p| (p.deg() + 1).max(0) as usize).max().unwrap_or(0);
    let gf2 = BinaryField::default_for(1).ok()?;
    let bit = |p: &Poly<Fe>, r: usize| gf2.element((p.coeff(r / bits).bits() >> (r % bits)) & 1);
    let rows = len * bits;
    let mut aug = Matrix::<Fe>::zeros(&gf2, rows, unknowns + 1);
    for r in 0..rows {
        for (col, p) in columns.iter().enumerate() {
            aug.set(r, col, bit(p, r));
        }
        // lin(b) = rhs up to sign, which is irrelevant in characteristic 2
        aug.set(r, unknowns, bit(&rhs, r));
    }
    let (red, pivots) = aug.rref();
    if pivots.contains(&unknowns) {
        return None;
    }
    let mut coeffs = vec![0u64; 6];
    for (row, &p) in pivots.iter().enumerate() {
        if !red.get(row, unknowns).is_zero() {
            coeffs[p / bits] |= 1 << (p % bits);
        }
    }
    Some(Poly::new(field, coeffs.into_iter().map(|c| field.element(c)).collect()))
}

/// The twelve lifts with their Cayley table, verified against Z/2 × S3.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub curve: Curve,
    pub elements: Vec<CurveAutomorphism>,
    pub names: Vec<String>,
    /// table[i][j] is the index of elements[i] ∘ elements[j].
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub iota: usize,
    pub sigma: usize,
    pub tau01: usize,
    pub tau0inf: usize,
}

impl AutomorphismGroup {
    /// On X(n), n > 0, the elements are the n-fold Frobenius twists of those
    /// on X(0), so names agree along the tower.
    pub fn new(curve: &Curve) -> Result<Self> {
        if curve.twist() != 0 {
            let mut group = Self::new(&curve.twisted(0))?;
            for _ in 0..curve.twist() {
                for g in &mut group.elements {
                    *g = g.frobenius_twist();
                }
            }
            group.curve = *curve;
            if let Some(g) = group.elements.iter().find(|g| !g.preserves_equation()) {
                return Err(Error::Verification(format!("twisted lift {g} does not preserve the equation")));
            }
            return Ok(group);
        }
        let field = curve.base();
        let mut elements = Vec::new();
        for (_, m) in MobiusMap::s3(field) {
            elements.extend(lift_automorphism(curve, &m)?);
        }
        for g in &elements {
            if !g.preserves_equation() {
                return Err(Error::Verification(format!("lift {g} does not preserve the equation")));
            }
        }
        let model = faithful_model(curve)?;
        let points = model.points();
        let perms: Vec<Vec<usize>> = elements
            .iter()
            .map(|g| {
                let map = g.on(&model)?;
                points
                    .iter()
                    .map(|p| Ok(points.binary_search(&map.apply(p)?).expect("image is a point of C(E)")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let find = |perm: &[usize]| perms.iter().position(|q| q == perm);
        let n = elements.len();
        let mut table = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let composed: Vec<usize> = perms[j].iter().map(|&k| perms[i][k]).collect();
                table[i][j] = find(&composed).ok_or_else(|| Error::Verification("lifts not closed under composition".into()))?;
            }
        }
        let ident: Vec<usize> = (0..points.len()).collect();
        let identity = find(&ident).ok_or_else(|| Error::Verification("identity lift missing".into()))?;
        let index_of = |m: MobiusMap, flag: bool| {
            elements.iter().position(|g| g.mobius.projectively_equal(&m) && g.with_involution == flag).unwrap()
        };
        let iota = index_of(MobiusMap::identity(field), identity == index_of(MobiusMap::identity(field), false));
        // choose the lift of sigma of order 3
        let s0 = index_of(MobiusMap::sigma(field), false);
        let cube = |i: usize| table[i][table[i][i]];
        let sigma = if cube(s0) == identity { s0 } else { index_of(MobiusMap::sigma(field), true) };
        if cube(sigma) != identity {
            return Err(Error::Verification("no lift of sigma has order 3".into()));
        }
        let tau01 = index_of(MobiusMap::tau01(field), false);
        let tau0inf = index_of(MobiusMap::tau0inf(field), false);
        let mut group = AutomorphismGroup {
            curve: *curve,
            elements,
            names: Vec::new(),
            table,
            identity,
            iota,
            sigma,
            tau01,
            tau0inf,
        };
        group.check_structure()?;
        Ok(group)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn element(&self, name: &str) -> Option<&CurveAutomorphism> {
        self.names.iter().position(|n| n == name).map(|i| &self.elements[i])
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Verifies the presentation and a full isomorphism onto Z/2 × S3, and
    /// names the elements ι^e s with s a word in sigma and tau01.
    fn check_structure(&mut self) -> Result<()> {
        let fail = |what: &str| Err(Error::Verification(format!("group relation failed: {what}")));
        let (e, i, s, t) = (self.identity, self.iota, self.sigma, self.tau01);
        let m = |a: usize, b: usize| self.table[a][b];
        if i == e || m(i, i) != e {
            return fail("iota has order 2");
        }
        if (0..self.len()).any(|g| m(i, g) != m(g, i)) {
            return fail("iota is central");
        }
        if s == e || m(s, m(s, s)) != e {
            return fail("sigma^3 = 1");
        }
        if t == e || m(t, t) != e {
            return fail("tau01^2 = 1");
        }
        if m(t, m(s, t)) != m(s, s) {
            return fail("tau01 sigma tau01 = sigma^2");
        }
        // abstract element (eps, k, l) = iota^eps sigma^k tau01^l
        let words: Vec<(usize, usize, usize)> =
            (0..2).flat_map(|a| (0..3).flat_map(move |k| (0..2).map(move |l| (a, k, l)))).collect();
        let realize = |(a, k, l): (usize, usize, usize)| {
            let mut g = e;
            if a == 1 {
                g = m(g, i);
            }
            for _ in 0..k {
                g = m(g, s);
            }
            if l == 1 {
                g = m(g, t);
            }
            g
        };
        let image: Vec<usize> = words.iter().map(|&w| realize(w)).collect();
        let mut sorted = image.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != 12 || self.len() != 12 {
            return fail("twelve distinct elements");
        }
        // multiplication in Z/2 × S3 with tau sigma = sigma^2 tau
        let abstract_mul = |(a1, k1, l1): (usize, usize, usize), (a2, k2, l2): (usize, usize, usize)| {
            let k2 = if l1 == 1 { (3 - k2) % 3 } else { k2 };
            ((a1 + a2) % 2, (k1 + k2) % 3, (l1 + l2) % 2)
        };
        for (x, &wx) in words.iter().enumerate() {
            for (y, &wy) in words.iter().enumerate() {
                let z = words.iter().position(|&w| w == abstract_mul(wx, wy)).unwrap();
                if m(image[x], image[y]) != image[z] {
                    return fail("Cayley table of Z/2 x S3");
                }
            }
        }
        let mut names = vec![String::new(); 12];
        for (&(a, k, l), &g) in words.iter().zip(&image) {
            let mut parts = Vec::new();
            if a == 1 {
                parts.push("iota".to_string());
            }
            match k {
                1 => parts.push("sigma".to_string()),
                2 => parts.push("sigma^2".to_string()),
                _ => {}
            }
            if l == 1 {
                parts.push("tau01".to_string());
            }
            names[g] = if parts.is_empty() { "id".to_string() } else { parts.join("*") };
        }
        self.names = names;
        Ok(())
    }
}

/// A model with more than 6 points, so that automorphisms are determined
/// by their action on points (a nontrivial one fixes at most 2g + 2 = 6).
fn faithful_model(curve: &Curve) -> Result<CurveModel> {
    let mut degree = curve.base().degree();
    loop {
        let model = curve.model(BinaryField::default_for(degree)?)?;
        if model.point_count() > 6 {
            return Ok(model);
        }
        degree += curve.base().degree();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w_curve() -> Curve {
        Curve::new(BinaryField::default_for(2).unwrap().generator(), 0).unwrap()
    }

    #[test]
    fn expected_lift_shapes() {
        let c = w_curve();
        let f = c.base();
        let [t, ti] = lift_automorphism(&c, &MobiusMap::tau01(f)).unwrap();
        assert!(t.a == Poly::one(&f) && t.c == Poly::one(&f));
        assert!(t.preserves_equation() && ti.preserves_equation());
        let [s, _] = lift_automorphism(&c, &MobiusMap::sigma(f)).unwrap();
        let x1 = Poly::linear_root(f.one());
        assert_eq!(s.c, &(&x1 * &x1) * &x1);
        let [id, iota] = lift_automorphism(&c, &MobiusMap::identity(f)).unwrap();
        assert!(id.b.is_zero());
        assert_eq!(iota.b, c.h());
    }

    #[test]
    fn rejects_maps_moving_branch_points() {
        let c = w_curve();
        let f = c.base();
        let w = f.generator();
        let m = MobiusMap::new(f.one(), w, f.zero(), f.one()).unwrap();
        assert!(lift_automorphism(&c, &m).is_err());
    }

    #[test]
    fn group_structure_over_gf16_family() {
        let f16 = BinaryField::default_for(4).unwrap();
        for t in f16.elements().skip(2).step_by(3) {
            let g = AutomorphismGroup::new(&Curve::new(t, 0).unwrap()).unwrap();
            assert_eq!(g.len(), 12);
            assert_eq!(g.names.iter().filter(|n| n.as_str() == "id").count(), 1);
        }
    }

    #[test]
    fn sigma_fixes_four_points_over_gf16() {
        let c = w_curve();
        let g = AutomorphismGroup::new(&c).unwrap();
        let model = c.model(BinaryField::default_for(4).unwrap()).unwrap();
        let fixed = g.elements[g.sigma].fixed_points(&model).unwrap();
        assert_eq!(fixed.len(), 4);
        for p in &fixed {
            let x = p.x().unwrap();
            assert!((x * x + x + model.field().one()).is_zero());
            assert_ne!(model.involution(p), *p);
        }
        let iota_fixed = g.elements[g.iota].fixed_points(&model).unwrap();
        assert_eq!(iota_fixed, {
            let mut w = model.weierstrass_points();
            w.sort();
            w
        });
        assert_eq!(g.elements[g.identity].fixed_points(&model).unwrap(), model.points());
    }

    #[test]
    fn frobenius_compatibility() {
        let c = w_curve();
        let g = AutomorphismGroup::new(&c).unwrap();
        let model = c.model(BinaryField::default_for(4).unwrap()).unwrap();
        let next = model.successor();
        for aut in &g.elements {
            let twisted = aut.frobenius_twist();
            assert!(twisted.preserves_equation());
            for p in model.points() {
                let lhs = model.relative_frobenius(&aut.act_on_point(&model, &p).unwrap()).unwrap();
                let rhs = twisted.act_on_point(&next, &model.relative_frobenius(&p).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
