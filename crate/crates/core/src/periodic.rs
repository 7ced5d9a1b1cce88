//! Frobenius-periodic modules over a finite base with coefficients in
//! K[s]/(s^n), K = GF(2^e) containing GF(q).
//!
//! Convention: the structure matrix A acts on column vectors, v is a fixed
//! section iff A·v^(q) = v, where (·)^(q) raises field coefficients to the
//! q-th power and fixes s. A basis change U sends A to U^{-1}·A·U^(q).

use crate::algebra::artin_schreier::ArtinSchreier;
use crate::algebra::bitlin::BitLinearMap;
use crate::algebra::gf2m::MAX_DEGREE;
use rand::Rng;

use crate::algebra::{BinaryField, Fe, FieldEmbedding, FiniteField, Matrix, Ring, Series, SeriesRing};
use crate::error::{Error, Result};

/// Square matrix over K[s]/(s^n).
pub type SeriesMatrix = Matrix<Series<Fe>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobPeriodicModule {
    q_log: u32,
    matrix: SeriesMatrix,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn twist_matrix(m: &SeriesMatrix, k: u32) -> SeriesMatrix {
    m.map(m.ctx().clone(), |x| x.twist(k))
}

fn embed_matrix(m: &SeriesMatrix, e: &FieldEmbedding) -> SeriesMatrix {
    m.map(SeriesRing { base: e.target(), n: m.ctx().n }, |x| x.embed(e))
}

/// Coefficient of s^k, entrywise.
fn level(m: &SeriesMatrix, k: usize) -> Matrix<Fe> {
    m.map(m.ctx().base, |x| x.coeff(k))
}

fn add_level(m: &mut SeriesMatrix, k: usize, d: &Matrix<Fe>) {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let mut x = m.get(i, j).clone();
            x.set_coeff(k, x.coeff(k) + *d.get(i, j));
            m.set(i, j, x);
        }
    }
}

fn constant_matrix(m: &Matrix<Fe>, n: usize) -> SeriesMatrix {
    let ring = SeriesRing { base: *m.ctx(), n };
    m.map(ring.clone(), |c| Series::constant(ring.clone(), *c))
}

impl FrobPeriodicModule {
    /// q = 2^q_log must divide into the coefficient field, and the constant
    /// term of A must be invertible.
    pub fn new(q_log: u32, matrix: SeriesMatrix) -> Result<Self> {
        let field = matrix.ctx().base;
        if q_log == 0 || field.degree() % q_log != 0 {
            return Err(Error::NotSubfield { source_degree: q_log, target_degree: field.degree() });
        }
        if !matrix.is_square() || matrix.rows() == 0 || level(&matrix, 0).det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(FrobPeriodicModule { q_log, matrix })
    }

    /// Builds A from coefficient bit masks: `entries[i][j][k]` is the
    /// bit mask of the s^k coefficient of A[i][j].
    pub fn from_masks(q_log: u32, field: BinaryField, n: usize, entries: &[Vec<Vec<u64>>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("truncation level must be positive".into()));
        }
        let ring = SeriesRing { base: field, n };
        let mut rows = Vec::new();
        for row in entries {
            let mut out = Vec::new();
            for e in row {
                if e.len() > n || e.iter().any(|&b| b >= field.order()) {
                    return Err(Error::Parse(format!("entry {e:?} does not fit GF(2^{})[s]/(s^{n})", field.degree())));
                }
                out.push(Series::new(ring.clone(), e.iter().map(|&b| field.element(b)).collect()));
            }
            if out.len() != entries.len() {
                return Err(Error::Parse("matrix is not square".into()));
            }
            rows.push(out);
        }
        Self::new(q_log, Matrix::from_rows(&ring, rows))
    }

    /// c·I of rank r.
    pub fn scalar(q_log: u32, c: Series<Fe>, r: usize) -> Result<Self> {
        Self::new(q_log, Matrix::scalar(c, r))
    }

    pub fn q_log(&self) -> u32 {
        self.q_log
    }

    pub fn q(&self) -> u64 {
        1 << self.q_log
    }

    /// The coefficient field K.
    pub fn field(&self) -> BinaryField {
        self.matrix.ctx().base
    }

    /// [K : GF(q)].
    pub fn relative_degree(&self) -> u32 {
        self.field().degree() / self.q_log
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn n(&self) -> usize {
        self.matrix.ctx().n
    }

    pub fn matrix(&self) -> &SeriesMatrix {
        &self.matrix
    }

    /// M^(q^k).
    pub fn twist(&self, m: &SeriesMatrix, k: u64) -> SeriesMatrix {
        let period = self.field().degree() as u64;
        twist_matrix(m, ((self.q_log as u64 * k) % period) as u32)
    }

    pub fn is_fixed_section(&self, v: &[Series<Fe>]) -> bool {
        let col = Matrix::column(v.to_vec());
        self.matrix.mul(&self.twist(&col, 1)) == col
    }

    /// U^{-1}·A·U^(q).
    pub fn change_basis(&self, u: &SeriesMatrix) -> Result<Self> {
        let ui = u.inverse()?;
        Self::new(self.q_log, ui.mul(&self.matrix).mul(&self.twist(u, 1)))
    }

    pub fn truncate(&self, n: usize) -> Self {
        let ring = SeriesRing { base: self.field(), n };
        FrobPeriodicModule { q_log: self.q_log, matrix: self.matrix.map(ring, |x| x.truncate(n)) }
    }

    pub fn embed(&self, e: &FieldEmbedding) -> Self {
        FrobPeriodicModule { q_log: self.q_log, matrix: embed_matrix(&self.matrix, e) }
    }

    pub fn det(&self) -> Series<Fe> {
        self.matrix.det()
    }
}

/// N_m(A) = A·A^(q)·…·A^(q^(m-1)); N_0 = I.
pub fn twisted_norm(module: &FrobPeriodicModule, m: u64) -> SeriesMatrix {
    let a = module.matrix();
    let mut acc = Matrix::identity(a.ctx(), a.rows());
    for i in 0..m {
        acc = acc.mul(&module.twist(a, i));
    }
    acc
}

/// A basis of fixed sections over an extension field.
#[derive(Clone, Debug)]
pub struct Trivialization {
    pub m: u64,
    /// From the coefficient field into the field of the witness.
    pub embedding: FieldEmbedding,
    /// C with A·C^(q) = C, columns the fixed basis.
    pub witness: SeriesMatrix,
    /// Witness field degree after each s-level.
    pub level_degrees: Vec<u32>,
}

/// Invertible C0 over the field of `a0` with a0·C0^(q) = C0, from the
/// GF(2)-kernel of v -> a0·v^(q) + v.
fn lang_witness(a0: &Matrix<Fe>, q_log: u32) -> Result<Matrix<Fe>> {
    let field = *a0.ctx();
    let (r, d) = (a0.rows(), field.degree() as usize);
    if r * d > 128 {
        return Err(Error::SplittingFieldTooLarge(field.degree()));
    }
    let pack = |v: &[Fe]| v.iter().enumerate().fold(0u128, |acc, (j, x)| acc | (x.bits() as u128) << (j * d));
    let unpack = |bits: u128| -> Vec<Fe> {
        (0..r).map(|j| field.element(((bits >> (j * d)) & ((1u128 << d) - 1)) as u64)).collect()
    };
    let mut cols = Vec::new();
    for i in 0..r {
        for b in 0..d {
            let mut v = vec![field.zero(); r];
            v[i] = field.element(1 << b);
            let tw: Vec<Fe> = v.iter().map(|x| x.frobenius_pow(q_log)).collect();
            let img: Vec<Fe> = a0.mul(&Matrix::column(tw)).col(0).iter().zip(&v).map(|(x, y)| *x + *y).collect();
            cols.push(pack(&img));
        }
    }
    let map = BitLinearMap::new(&cols);
    let mut kernel = map.kernel().to_vec();
    kernel.sort_unstable();
    let mut chosen: Vec<Vec<Fe>> = Vec::new();
    for k in kernel {
        let cand = unpack(k);
        let mut trial = chosen.clone();
        trial.push(cand);
        let m = Matrix::from_rows(&field, trial.clone());
        if m.rank() == trial.len() {
            chosen = trial;
            if chosen.len() == r {
                // rows were the chosen vectors; C0 has them as columns
                let rows = (0..r).map(|i| (0..r).map(|j| chosen[j][i]).collect()).collect();
                return Ok(Matrix::from_rows(&field, rows));
            }
        }
    }
    Err(Error::NoWitness(format!("no invertible fixed basis over GF(2^{d})")))
}

/// C with A·C^(q) = C over GF(q^m)·K, built level by level: a fixed basis of
/// the constant term, then one Artin–Schreier system X^(q) + X = C0^{-1}·D
/// per power of s. The field is doubled whenever a trace obstructs.
pub fn trivialize(module: &FrobPeriodicModule, m: u64) -> Result<Trivialization> {
    if m == 0 || !twisted_norm(module, m).is_identity() {
        return Err(Error::Precondition(format!("N_{m}(A) is not the identity")));
    }
    let q_log = module.q_log();
    let mut degree = lcm(module.field().degree() as u64, q_log as u64 * m);
    if degree > MAX_DEGREE as u64 {
        return Err(Error::SplittingFieldTooLarge(degree.min(u32::MAX as u64) as u32));
    }
    let mut field = BinaryField::default_for(degree as u32)?;
    let mut embedding = FieldEmbedding::new(module.field(), field)?;
    let mut a = module.embed(&embedding);
    let mut c0 = lang_witness(&level(a.matrix(), 0), q_log)?;
    let mut c = constant_matrix(&c0, module.n());
    let mut level_degrees = vec![field.degree()];
    let mut solver = ArtinSchreier::new(field, q_log)?;
    let r = module.rank();
    for k in 1..module.n() {
        let x = loop {
            let d = level(&a.matrix().mul(&a.twist(&c, 1)).sub(&c), k);
            let e = c0.inverse()?.mul(&d);
            let solved: Option<Vec<Fe>> = e.entries().iter().map(|v| solver.solve(*v)).collect();
            if let Some(xs) = solved {
                let rows = xs.chunks(r).map(|row| row.to_vec()).collect();
                break Matrix::from_rows(&field, rows);
            }
            degree *= 2;
            if degree > MAX_DEGREE as u64 {
                return Err(Error::SplittingFieldTooLarge(degree as u32));
            }
            let bigger = BinaryField::default_for(degree as u32)?;
            let step = FieldEmbedding::new(field, bigger)?;
            a = a.embed(&step);
            c0 = c0.map(bigger, |v| step.map(*v));
            c = embed_matrix(&c, &step);
            embedding = embedding.then(&step)?;
            field = bigger;
            solver = ArtinSchreier::new(field, q_log)?;
        };
        add_level(&mut c, k, &c0.mul(&x));
        level_degrees.push(field.degree());
    }
    if a.matrix().mul(&a.twist(&c, 1)) != c || c.inverse().is_err() {
        return Err(Error::Verification("trivialization witness fails A·C^(q) = C".into()));
    }
    Ok(Trivialization { m, embedding, witness: c, level_degrees })
}

/// Smallest m <= cap with N_m(A) = I, with a verified witness; `None` when
/// the order exceeds the cap.
pub fn monodromy_order(module: &FrobPeriodicModule, cap: u64) -> Result<Option<Trivialization>> {
    let a = module.matrix();
    let mut norm = a.clone();
    for m in 1..=cap {
        if norm.is_identity() {
            return trivialize(module, m).map(Some);
        }
        norm = norm.mul(&module.twist(a, m));
    }
    Ok(None)
}

/// A unit c over K with det(A)·c^(q) = c, if one exists.
pub fn strict_witness(module: &FrobPeriodicModule) -> Option<Series<Fe>> {
    let det = module.det();
    let field = module.field();
    let d0 = det.coeff(0);
    let cols: Vec<u128> = (0..field.degree())
        .map(|b| {
            let x = field.element(1 << b);
            (d0 * x.frobenius_pow(module.q_log()) + x).bits() as u128
        })
        .collect();
    let map = BitLinearMap::new(&cols);
    let c0 = field.element(*map.kernel().first()? as u64);
    let mut c = Series::constant(det.ring().clone(), c0);
    for k in 1..module.n() {
        let rhs = (det.clone() * c.twist(module.q_log())).coeff(k);
        let x = map.solve_min(rhs.bits() as u128)?;
        c.set_coeff(k, field.element(x as u64));
    }
    debug_assert!(det * c.twist(module.q_log()) == c);
    Some(c)
}

/// Whether det(A) trivializes over the coefficient field itself.
pub fn is_strict(module: &FrobPeriodicModule) -> bool {
    strict_witness(module).is_some()
}

/// Rescales the first basis vector so that det(A') = 1 exactly.
pub fn normalize_strict(module: &FrobPeriodicModule) -> Result<FrobPeriodicModule> {
    let c = strict_witness(module).ok_or(Error::NotStrict)?;
    let ring = c.ring().clone();
    let mut u = Matrix::identity(&ring, module.rank());
    u.set(0, 0, c);
    let out = module.change_basis(&u)?;
    if !out.det().is_one() {
        return Err(Error::Verification("normalized determinant is not 1".into()));
    }
    Ok(out)
}

/// The Frobenius representation of a trivialized module.
///
/// With f = [K : GF(q)], ρ(Frob) = C^{-1}·N_f(A)·C. It has coefficients in
/// K, order lcm(m, f)/f, and C·ρ(Frob)·C^{-1} rebuilds N_f(A); for K = GF(q)
/// this is the conjugate C^{-1}·A·C of A itself.
#[derive(Clone, Debug)]
pub struct MonodromyReport {
    pub m: u64,
    pub trivialization: Trivialization,
    /// ρ(Frob) over K.
    pub rho: SeriesMatrix,
    pub rho_order: u64,
    /// Orders for truncations 1..=n; `None` where the cap was exceeded.
    pub profile: Vec<Option<u64>>,
    /// Levels n at which the profile decreases.
    pub decreases: Vec<usize>,
    pub strict: bool,
}

pub fn extract_representation(module: &FrobPeriodicModule, cap: u64) -> Result<MonodromyReport> {
    let triv = monodromy_order(module, cap)?
        .ok_or_else(|| Error::Precondition(format!("monodromy order exceeds cap {cap}")))?;
    let f = module.relative_degree() as u64;
    let emb = &triv.embedding;
    let c = &triv.witness;
    let nf = embed_matrix(&twisted_norm(module, f), emb);
    let rho_big = c.inverse()?.mul(&nf).mul(c);
    if c.mul(&rho_big).mul(&c.inverse()?) != nf {
        return Err(Error::Verification("C·ρ·C^{-1} does not rebuild N_f(A)".into()));
    }
    let ring = module.matrix().ctx().clone();
    let mut rows = Vec::new();
    for i in 0..module.rank() {
        let mut row = Vec::new();
        for j in 0..module.rank() {
            let e = rho_big.get(i, j);
            let coeffs = e.coeffs().iter().map(|x| emb.preimage(*x)).collect::<Result<Vec<_>>>()
                .map_err(|_| Error::Verification("ρ(Frob) is not rational over the coefficient field".into()))?;
            row.push(Series::new(ring.clone(), coeffs));
        }
        rows.push(row);
    }
    let rho = Matrix::from_rows(&ring, rows);
    let expected = lcm(triv.m, f) / f;
    let mut pw = rho.clone();
    let mut rho_order = 1;
    while !pw.is_identity() {
        pw = pw.mul(&rho);
        rho_order += 1;
        if rho_order > expected {
            break;
        }
    }
    if rho_order != expected {
        return Err(Error::Verification(format!("ρ(Frob) has order {rho_order}, expected {expected}")));
    }
    if module.det().is_one() && !rho.det().is_one() {
        return Err(Error::Verification("det ρ(Frob) ≠ 1 for a normalized strict module".into()));
    }
    let mut profile = Vec::new();
    for n in 1..=module.n() {
        profile.push(monodromy_order(&module.truncate(n), cap)?.map(|t| t.m));
    }
    let decreases = profile_decreases(&profile);
    Ok(MonodromyReport { m: triv.m, trivialization: triv, rho, rho_order, profile, decreases, strict: is_strict(module) })
}

fn profile_decreases(profile: &[Option<u64>]) -> Vec<usize> {
    let key = |o: &Option<u64>| o.unwrap_or(u64::MAX);
    (1..profile.len()).filter(|&i| key(&profile[i]) < key(&profile[i - 1])).map(|i| i + 1).collect()
}

/// Orders m_n for n = 1..=n_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthProfile {
    /// `None` means at least the cap.
    pub orders: Vec<Option<u64>>,
    /// Levels n with m_n < m_{n-1}; flagged, not treated as failures.
    pub decreases: Vec<usize>,
}

pub const MAX_PROFILE_LEVEL: usize = 64;

pub fn order_growth_profile(
    family: impl Fn(usize) -> Result<FrobPeriodicModule>,
    n_max: usize,
    cap: u64,
) -> Result<GrowthProfile> {
    if n_max == 0 || n_max > MAX_PROFILE_LEVEL {
        return Err(Error::Precondition(format!("n_max {n_max} not in 1..={MAX_PROFILE_LEVEL}")));
    }
    let mut orders = Vec::new();
    for n in 1..=n_max {
        orders.push(monodromy_order(&family(n)?, cap)?.map(|t| t.m));
    }
    let decreases = profile_decreases(&orders);
    Ok(GrowthProfile { orders, decreases })
}

/// The family (1 + s)·I of rank r over GF(2) at truncation n.
pub fn one_plus_s(r: usize, n: usize) -> Result<FrobPeriodicModule> {
    let f = BinaryField::default_for(1)?;
    let ring = SeriesRing { base: f, n };
    FrobPeriodicModule::scalar(1, Series::new(ring, vec![f.one(), f.one()]), r)
}

/// A with entries drawn uniformly from GF(q)[s]/(s^n), conditioned on an
/// invertible constant term.
pub fn random_module<R: Rng + ?Sized>(q_log: u32, r: usize, n: usize, rng: &mut R) -> Result<FrobPeriodicModule> {
    let field = BinaryField::default_for(q_log)?;
    loop {
        let a = random_series_matrix(field, r, n, rng);
        if !level(&a, 0).det().is_zero() {
            return FrobPeriodicModule::new(q_log, a);
        }
    }
}

/// An invertible r x r matrix over K[s]/(s^n).
pub fn random_invertible<R: Rng + ?Sized>(field: BinaryField, r: usize, n: usize, rng: &mut R) -> SeriesMatrix {
    loop {
        let u = random_series_matrix(field, r, n, rng);
        if !level(&u, 0).det().is_zero() {
            return u;
        }
    }
}

fn random_series_matrix<R: Rng + ?Sized>(field: BinaryField, r: usize, n: usize, rng: &mut R) -> SeriesMatrix {
    let ring = SeriesRing { base: field, n };
    let rows = (0..r)
        .map(|_| {
            (0..r)
                .map(|_| Series::new(ring.clone(), (0..n).map(|_| Fe::random(&field, rng)).collect()))
                .collect()
        })
        .collect();
    Matrix::from_rows(&ring, rows)
}

/// For modules A and A' = U^{-1}·A·U^(q) over K = GF(q), the matrix
/// W = C^{-1}·U·C' is rational over K and conjugates ρ' into ρ. Returns W
/// after checking both facts.
pub fn basis_change_conjugacy(
    a: &MonodromyReport,
    b: &MonodromyReport,
    u: &SeriesMatrix,
) -> Result<SeriesMatrix> {
    let (ta, tb) = (&a.trivialization, &b.trivialization);
    if ta.embedding != tb.embedding {
        return Err(Error::Verification("trivializations live in different fields".into()));
    }
    let emb = &ta.embedding;
    let w = ta.witness.inverse()?.mul(&embed_matrix(u, emb)).mul(&tb.witness);
    let ring = u.ctx().clone();
    let w_small = w.map(ring.clone(), |x| {
        let coeffs = x.coeffs().iter().map(|c| emb.preimage(*c).unwrap_or_else(|_| ring.base.zero())).collect();
        Series::new(ring.clone(), coeffs)
    });
    if embed_matrix(&w_small, emb) != w {
        return Err(Error::Verification("conjugating matrix is not rational".into()));
    }
    if w_small.mul(&b.rho) != a.rho.mul(&w_small) {
        return Err(Error::Verification("ρ and ρ' are not conjugate by C^{-1}·U·C'".into()));
    }
    Ok(w_small)
}

/// What one round trip established.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub m: u64,
    pub strict: bool,
    /// det ρ(Frob) after normalization, when strict.
    pub normalized_det_one: Option<bool>,
    pub basis_change_order: u64,
}

/// Extracts the representation (with its rebuild check), normalizes and
/// re-extracts when strict, and repeats after a random basis change over
/// K, requiring equal order and conjugate ρ. K must equal GF(q).
pub fn roundtrip_check<R: Rng + ?Sized>(module: &FrobPeriodicModule, cap: u64, rng: &mut R) -> Result<RoundTrip> {
    if module.relative_degree() != 1 {
        return Err(Error::Precondition("round trip needs coefficients in GF(q)".into()));
    }
    let rep = extract_representation(module, cap)?;
    let normalized_det_one = if rep.strict {
        let norm = normalize_strict(module)?;
        Some(extract_representation(&norm, cap)?.rho.det().is_one())
    } else {
        None
    };
    let u = random_invertible(module.field(), module.rank(), module.n(), rng);
    let other = extract_representation(&module.change_basis(&u)?, cap)?;
    if other.m != rep.m {
        return Err(Error::Verification(format!("basis change moved the order from {} to {}", rep.m, other.m)));
    }
    basis_change_conjugacy(&rep, &other, &u)?;
    Ok(RoundTrip { m: rep.m, strict: rep.strict, normalized_det_one, basis_change_order: other.m })
}

/// Makes det(A) = 1 by scaling the first column by det(A)^{-1}.
pub fn with_unit_determinant(module: &FrobPeriodicModule) -> Result<FrobPeriodicModule> {
    let inv = module.det().unit_inverse().ok_or(Error::Singular)?;
    let mut a = module.matrix().clone();
    for i in 0..module.rank() {
        a.set(i, 0, a.get(i, 0).clone() * inv.clone());
    }
    FrobPeriodicModule::new(module.q_log(), a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(d: u32) -> BinaryField {
        BinaryField::default_for(d).unwrap()
    }

    fn constant_module(q_log: u32, a: Fe, n: usize) -> FrobPeriodicModule {
        let ring = SeriesRing { base: a.field(), n };
        FrobPeriodicModule::scalar(q_log, Series::constant(ring, a), 1).unwrap()
    }

    #[test]
    fn identity_is_trivial() {
        let ring = SeriesRing { base: gf(1), n: 3 };
        let m = FrobPeriodicModule::new(1, Matrix::identity(&ring, 2)).unwrap();
        let t = monodromy_order(&m, 10).unwrap().unwrap();
        assert_eq!(t.m, 1);
        assert!(t.witness.is_identity());
    }

    #[test]
    fn one_plus_s_norm_and_order() {
        let m = one_plus_s(1, 3).unwrap();
        for k in 1..6u64 {
            // (1+s)^k by repeated multiplication
            let mut p = Matrix::identity(m.matrix().ctx(), 1);
            for _ in 0..k {
                p = p.mul(m.matrix());
            }
            assert_eq!(twisted_norm(&m, k), p);
        }
        let t = monodromy_order(&m, 100).unwrap().unwrap();
        assert_eq!(t.m, 4);
        assert_eq!(*t.level_degrees.last().unwrap(), 4);
    }

    #[test]
    fn gf4_constant_over_gf2() {
        let w = gf(2).generator();
        let m = constant_module(1, w, 1);
        let t = monodromy_order(&m, 10).unwrap().unwrap();
        assert_eq!(t.m, 2);
        // exhaustive: c in GF(4)* with w c^2 = c
        let sols: Vec<Fe> = gf(2).elements().filter(|&c| !c.is_zero() && w * c * c == c).collect();
        assert_eq!(sols, vec![w.inverse().unwrap()]);
    }

    #[test]
    fn unipotent_level_two() {
        let f = gf(1);
        let ring = SeriesRing { base: f, n: 2 };
        let (o, z) = (f.one(), f.zero());
        let s = |c: Fe| Series::new(ring.clone(), vec![o, c]);
        let a = Matrix::from_rows(&ring, vec![vec![Series::constant(ring.clone(), o), Series::new(ring.clone(), vec![z, o])], vec![Series::zero_in(&ring), s(z)]]);
        let m = FrobPeriodicModule::new(1, a).unwrap();
        let t = monodromy_order(&m, 10).unwrap().unwrap();
        assert_eq!(t.m, 2);
    }

    #[test]
    fn strictness_by_exhaustive_search() {
        // q = 4, A = generator of GF(4)*: c^3 = w^{-1} has no solution
        let w = gf(2).generator();
        assert!(!is_strict(&constant_module(2, w, 1)));
        assert!(gf(2).elements().all(|c| c.is_zero() || w * c.frobenius_pow(2) != c));
        assert!(normalize_strict(&constant_module(2, w, 1)).is_err());
        // over GF(2) with unit 1 + s: c^(2) = c for every c, so det must be 1
        assert!(!is_strict(&one_plus_s(1, 2).unwrap()));
        assert!(is_strict(&one_plus_s(2, 2).unwrap()));
    }

    #[test]
    fn normalize_gives_det_one() {
        let w = gf(4).generator();
        let m = constant_module(1, w, 3);
        let norm = normalize_strict(&m).unwrap();
        assert!(norm.det().is_one());
        let rep = extract_representation(&norm, 64).unwrap();
        assert!(rep.rho.det().is_one());
    }

    #[test]
    fn profile_of_one_plus_s() {
        let p = order_growth_profile(|n| one_plus_s(1, n), 9, 64).unwrap();
        let want: Vec<Option<u64>> = [1, 2, 4, 4, 8, 8, 8, 8, 16].iter().map(|&x| Some(x)).collect();
        assert_eq!(p.orders, want);
        assert!(p.decreases.is_empty());
    }

    #[test]
    fn basis_change_preserves_order_and_conjugacy() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut checked = 0;
        for q_log in [1, 2] {
            for _ in 0..10 {
                let m = random_module(q_log, 2, 3, &mut rng).unwrap();
                let Ok(a) = extract_representation(&m, 16) else { continue };
                let u = random_invertible(m.field(), 2, 3, &mut rng);
                let b = extract_representation(&m.change_basis(&u).unwrap(), 16).unwrap();
                assert_eq!(a.m, b.m);
                basis_change_conjugacy(&a, &b, &u).unwrap();
                checked += 1;
            }
        }
        assert!(checked >= 10, "only {checked} modules within the cap");
    }

    #[test]
    fn representation_of_one_plus_s() {
        let rep = extract_representation(&one_plus_s(1, 3).unwrap(), 64).unwrap();
        assert_eq!(rep.m, 4);
        assert_eq!(rep.rho_order, 4);
        assert_eq!(rep.profile, vec![Some(1), Some(2), Some(4)]);
    }
}
