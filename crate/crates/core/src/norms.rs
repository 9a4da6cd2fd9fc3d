//! Quartic tesseranion norm, the iterated norm family M_j, Schwarz and
//! triangle checks, closed-form inverses and modular encryption.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{generic_elements, AlgebraElement, TwistedAlgebra};
use crate::error::{Error, Result};
use crate::identities::{catalogue, verify_combo, Expr};
use crate::linalg;
use crate::polynomial::MultiPoly;
use crate::scalar::{q, qr, Scalar, ScalarRing, Zp, Q};

/// Samples per (j, n) pair in the default triangle check.
pub const TRIANGLE_SAMPLES: usize = 10_000;
/// Relative widening applied to float roots before exact verification.
pub const ROOT_WIDENING: f64 = 1e-9;
const LATTICE: i64 = 1_000_000_000_000;
const COARSE_LATTICE: i64 = 1_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuarticNormValue {
    #[serde(serialize_with = "ser_q")]
    pub fourth_power: Q,
    pub float_root: f64,
}

fn ser_q<S: serde::Serializer>(v: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn to_f64(v: &Q) -> f64 {
    v.numer().to_f64().unwrap_or(f64::NAN) / v.denom().to_f64().unwrap_or(f64::NAN)
}

fn check_dim<S>(x: &AlgebraElement<S>, n: usize) -> Result<()> {
    if x.coeffs.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: x.coeffs.len() });
    }
    Ok(())
}

fn quartic_closed<S: Scalar>(c: &[S]) -> S {
    let e = c[0].times(&c[0]).plus(&c[2].times(&c[2]));
    let o = c[1].times(&c[1]).plus(&c[3].times(&c[3]));
    e.times(&e).plus(&o.times(&o))
}

/// |x|⁴ = (x₀²+x₂²)² + (x₁²+x₃²)².
pub fn quartic_norm4(x: &AlgebraElement<Q>) -> Result<Q> {
    check_dim(x, 4)?;
    Ok(quartic_closed(&x.coeffs))
}

pub fn quartic_norm(x: &AlgebraElement<Q>) -> Result<QuarticNormValue> {
    let p = quartic_norm4(x)?;
    Ok(QuarticNormValue { float_root: to_f64(&p).powf(0.25), fourth_power: p })
}

/// Evaluates each member of the quartic norm chain at `x`; every entry must be
/// a real multiple of the unit.
pub fn quartic_chain_values(x: &AlgebraElement<Q>) -> Result<Vec<AlgebraElement<Q>>> {
    check_dim(x, 4)?;
    let t = TwistedAlgebra::tesseranions();
    catalogue::QUARTIC_NORM_CHAIN
        .iter()
        .map(|s| Expr::parse(s)?.eval_q(&t, std::slice::from_ref(x)))
        .collect()
}

/// True when all five chain expressions equal [|x|⁴, 0, 0, 0].
pub fn quartic_chain_agrees(x: &AlgebraElement<Q>) -> Result<bool> {
    let n = quartic_norm4(x)?;
    let expect = AlgebraElement::new(vec![n, q(0), q(0), q(0)]);
    Ok(quartic_chain_values(x)?.iter().all(|v| *v == expect))
}

/// Symbolic agreement of the chain with the closed form over generic x.
pub fn quartic_chain_symbolic() -> Result<bool> {
    let t = TwistedAlgebra::tesseranions();
    let (_, g) = generic_elements(&["x"], 4);
    let closed = quartic_closed(&g[0].coeffs);
    for s in catalogue::QUARTIC_NORM_CHAIN {
        let v = Expr::parse(s)?.eval(&t, &g)?;
        if v.coeffs[0] != closed || v.coeffs[1..].iter().any(|c| !c.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// |x|⁴|y|⁴ − |x·y|⁴ on 𝕋.
pub fn schwarz_defect4(x: &AlgebraElement<Q>, y: &AlgebraElement<Q>) -> Result<Q> {
    let t = TwistedAlgebra::tesseranions();
    let xy = t.product(x, y)?;
    Ok(quartic_norm4(x)? * quartic_norm4(y)? - quartic_norm4(&xy)?)
}

pub fn is_pure_even(x: &AlgebraElement<Q>) -> bool {
    x.coeffs.len() == 4 && x.coeffs[1].is_zero() && x.coeffs[3].is_zero()
}

pub fn is_pure_odd(x: &AlgebraElement<Q>) -> bool {
    x.coeffs.len() == 4 && x.coeffs[0].is_zero() && x.coeffs[2].is_zero()
}

/// Schwarz equality for a pure even or pure odd factor.
pub fn schwarz_equality_pure(x: &AlgebraElement<Q>, y: &AlgebraElement<Q>) -> Result<bool> {
    let pure = |e: &AlgebraElement<Q>| is_pure_even(e) || is_pure_odd(e);
    if !pure(x) && !pure(y) {
        return Err(Error::Precondition("neither factor is pure even or pure odd".into()));
    }
    Ok(schwarz_defect4(x, y)?.is_zero())
}

/// Symbolic form of the pure-factor Schwarz equality: x restricted to the
/// even (or odd) components, y generic.
pub fn schwarz_equality_pure_symbolic(odd: bool) -> Result<bool> {
    let t = TwistedAlgebra::tesseranions();
    let (_, g) = generic_elements(&["x", "y"], 4);
    let zeroed = if odd { [0usize, 2] } else { [1, 3] };
    let mut x = g[0].clone();
    for i in zeroed {
        x.coeffs[i] = x.coeffs[i].zero_like();
    }
    let xy = t.mul(&x, &g[1]);
    let lhs = quartic_closed(&x.coeffs).times(&quartic_closed(&g[1].coeffs));
    Ok(lhs == quartic_closed(&xy.coeffs))
}

/// |x·y|² = |x|²|y|² over generic quaternions.
pub fn quaternion_schwarz_symbolic() -> Result<bool> {
    let h = TwistedAlgebra::quaternions();
    let (_, g) = generic_elements(&["x", "y"], 4);
    let sq = |e: &AlgebraElement<MultiPoly>| {
        e.coeffs.iter().fold(e.coeffs[0].zero_like(), |acc, c| acc.plus(&c.times(c)))
    };
    let xy = h.mul(&g[0], &g[1]);
    Ok(sq(&xy) == sq(&g[0]).times(&sq(&g[1])))
}

/// The three placement laws with x pure even and y, z generic.
pub fn pure_even_associativity() -> Result<bool> {
    let t = TwistedAlgebra::tesseranions();
    let (_, g) = generic_elements(&["x", "y", "z"], 4);
    let mut x = g[0].clone();
    x.coeffs[1] = x.coeffs[1].zero_like();
    x.coeffs[3] = x.coeffs[3].zero_like();
    let (y, z) = (&g[1], &g[2]);
    let m = |a: &AlgebraElement<MultiPoly>, b: &AlgebraElement<MultiPoly>| t.mul(a, b);
    Ok(m(&x, &m(y, z)) == m(&m(&x, y), z) && m(y, &m(&x, z)) == m(&m(y, &x), z) && m(y, &m(z, &x)) == m(&m(y, z), &x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IteratedNormSpec {
    pub j: u32,
    pub n: usize,
}

impl IteratedNormSpec {
    pub fn new(j: u32, n: usize) -> Result<Self> {
        if j == 0 || n == 0 || j > 16 {
            return Err(Error::Precondition(format!("invalid iterated norm level j={j}, n={n}")));
        }
        Ok(IteratedNormSpec { j, n })
    }

    pub fn len(&self) -> usize {
        self.n << (self.j - 1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The exponent 2^j.
    pub fn power(&self) -> u32 {
        1 << self.j
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IteratedNormValue {
    /// M_j(v)^{2^j}.
    #[serde(serialize_with = "ser_q")]
    pub exact_power: Q,
    pub float_root: f64,
}

/// M_j(v)^{2^j} over any scalar ring; `v` must be nonempty.
pub fn iterated_power<S: Scalar>(j: u32, v: &[S]) -> S {
    if j == 1 {
        return v.iter().fold(v[0].zero_like(), |acc, a| acc.plus(&a.times(a)));
    }
    let (u, r) = v.split_at(v.len() / 2);
    let a = iterated_power(j - 1, u);
    let b = iterated_power(j - 1, r);
    a.times(&a).plus(&b.times(&b))
}

/// M₂ with n = 2 on (x₀,x₂,x₁,x₃) against |x|⁴ over generic components.
pub fn m2_matches_quartic_symbolic() -> bool {
    let (_, g) = generic_elements(&["x"], 4);
    let c = &g[0].coeffs;
    let reordered = [c[0].clone(), c[2].clone(), c[1].clone(), c[3].clone()];
    iterated_power(2, &reordered) == quartic_closed(c)
}

/// M_j(v) with its exact 2^j-th power.
pub fn iterated_norm(spec: IteratedNormSpec, v: &[Q]) -> Result<IteratedNormValue> {
    if v.len() != spec.len() {
        return Err(Error::DimensionMismatch { expected: spec.len(), got: v.len() });
    }
    let p = iterated_power(spec.j, v);
    Ok(IteratedNormValue { float_root: to_f64(&p).powf(1.0 / spec.power() as f64), exact_power: p })
}

fn pow_q(x: &Q, k: u32) -> Q {
    num_traits::pow(x.clone(), k as usize)
}

fn lattice_floor(g: f64, lattice: i64) -> Q {
    let v = (g * lattice as f64).floor();
    Q::from_float(v).unwrap_or_else(Q::zero) / Q::from_integer(BigInt::from(lattice))
}

fn lattice_ceil(g: f64, lattice: i64) -> Q {
    let v = (g * lattice as f64).ceil();
    Q::from_float(v).unwrap_or_else(Q::zero) / Q::from_integer(BigInt::from(lattice))
}

fn enclosure_with(p: &Q, k: u32, lattice: i64, widening: f64) -> (Q, Q) {
    if p.is_zero() {
        return (Q::zero(), Q::zero());
    }
    let g = to_f64(p).powf(1.0 / k as f64);
    let mut w = widening;
    loop {
        let lo = lattice_floor(g * (1.0 - w), lattice).max(Q::zero());
        let hi = lattice_ceil(g * (1.0 + w) + 1.0 / lattice as f64, lattice);
        if pow_q(&lo, k) <= *p && pow_q(&hi, k) >= *p {
            return (lo, hi);
        }
        w *= 16.0;
    }
}

/// Rational enclosure [lo, hi] of p^{1/k}, verified exactly.
pub fn root_enclosure(p: &Q, k: u32) -> (Q, Q) {
    enclosure_with(p, k, LATTICE, ROOT_WIDENING)
}

/// Cheap lower bounds first; the fine enclosure only near equality.
fn certify_triangle(ps: &Q, px: &Q, py: &Q, k: u32) -> bool {
    let (lx, _) = enclosure_with(px, k, COARSE_LATTICE, 1e-4);
    let (ly, _) = enclosure_with(py, k, COARSE_LATTICE, 1e-4);
    if *ps <= pow_q(&(lx + ly), k) {
        return true;
    }
    let (lx, _) = root_enclosure(px, k);
    let (ly, _) = root_enclosure(py, k);
    *ps <= pow_q(&(lx + ly), k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TriangleOutcome {
    /// M(x+y)^k ≤ (lo(M(x)) + lo(M(y)))^k, or an exactly parallel pair.
    Certified,
    /// Enclosures overlap; neither proven nor refuted.
    NearEquality,
    /// hi(M(x)) + hi(M(y)) < lo(M(x+y)).
    Violation,
}

fn positively_parallel(x: &[Q], y: &[Q]) -> bool {
    let Some(i) = x.iter().position(|c| !c.is_zero()) else { return true };
    if y.iter().all(|c| c.is_zero()) {
        return true;
    }
    let r = &y[i] / &x[i];
    r.is_positive() && x.iter().zip(y).all(|(a, b)| a * &r == *b)
}

pub fn triangle_outcome(spec: IteratedNormSpec, x: &[Q], y: &[Q]) -> Result<TriangleOutcome> {
    let k = spec.power();
    let px = iterated_norm(spec, x)?.exact_power;
    let py = iterated_norm(spec, y)?.exact_power;
    let s: Vec<Q> = x.iter().zip(y).map(|(a, b)| a + b).collect();
    let ps = iterated_norm(spec, &s)?.exact_power;
    if positively_parallel(x, y) {
        return Ok(TriangleOutcome::Certified);
    }
    if certify_triangle(&ps, &px, &py, k) {
        return Ok(TriangleOutcome::Certified);
    }
    let (_, ux) = root_enclosure(&px, k);
    let (_, uy) = root_enclosure(&py, k);
    let (ls, _) = root_enclosure(&ps, k);
    if ux + uy < ls {
        Ok(TriangleOutcome::Violation)
    } else {
        Ok(TriangleOutcome::NearEquality)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TriangleReport {
    pub samples: usize,
    pub certified: usize,
    pub near_equality: usize,
    pub violations: usize,
}

impl TriangleReport {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }

    fn merge(mut self, o: &TriangleReport) -> Self {
        self.samples += o.samples;
        self.certified += o.certified;
        self.near_equality += o.near_equality;
        self.violations += o.violations;
        self
    }
}

fn random_vector(rng: &mut ChaCha8Rng, len: usize) -> Vec<Q> {
    (0..len)
        .map(|_| {
            if rng.gen_bool(0.2) {
                Q::zero()
            } else {
                qr(rng.gen_range(-60..=60), rng.gen_range(1..=6))
            }
        })
        .collect()
}

/// Seeded triangle inequality check on `samples` random pairs.
pub fn triangle_check(spec: IteratedNormSpec, samples: usize, seed: u64) -> Result<TriangleReport> {
    const CHUNK: usize = 256;
    let chunks = samples.div_ceil(CHUNK);
    let parts: Vec<Result<TriangleReport>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((c as u64) << 20) ^ ((spec.j as u64) << 8) ^ spec.n as u64);
            let mut r = TriangleReport::default();
            for _ in 0..CHUNK.min(samples - c * CHUNK) {
                let x = random_vector(&mut rng, spec.len());
                let y = if rng.gen_bool(0.05) {
                    x.iter().map(|a| a * q(2)).collect()
                } else {
                    random_vector(&mut rng, spec.len())
                };
                r.samples += 1;
                match triangle_outcome(spec, &x, &y)? {
                    TriangleOutcome::Certified => r.certified += 1,
                    TriangleOutcome::NearEquality => r.near_equality += 1,
                    TriangleOutcome::Violation => r.violations += 1,
                }
            }
            Ok(r)
        })
        .collect();
    parts.into_iter().try_fold(TriangleReport::default(), |acc, p| Ok(acc.merge(&p?)))
}

/// Triangle check for every 1 ≤ j ≤ 4, 1 ≤ n ≤ 3.
pub fn triangle_sweep(samples: usize, seed: u64) -> Result<Vec<(IteratedNormSpec, TriangleReport)>> {
    let mut out = Vec::new();
    for j in 1..=4 {
        for n in 1..=3 {
            let spec = IteratedNormSpec::new(j, n)?;
            out.push((spec, triangle_check(spec, samples, seed)?));
        }
    }
    Ok(out)
}

/// M(λx)^{2^j} = λ^{2^j}·M(x)^{2^j} exactly for random λ > 0.
pub fn positive_homogeneity_check(spec: IteratedNormSpec, samples: usize, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = random_vector(&mut rng, spec.len());
        let lambda = qr(rng.gen_range(1..=50), rng.gen_range(1..=7));
        let scaled: Vec<Q> = x.iter().map(|a| a * &lambda).collect();
        let lhs = iterated_norm(spec, &scaled)?.exact_power;
        let rhs = pow_q(&lambda, spec.power()) * iterated_norm(spec, &x)?.exact_power;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enclosure of |x| + |y| − |x+y| for the 𝕋 norm.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DefectEnclosure {
    #[serde(serialize_with = "ser_q")]
    pub lo: Q,
    #[serde(serialize_with = "ser_q")]
    pub hi: Q,
    pub approx: f64,
}

impl DefectEnclosure {
    pub fn contains(&self, v: f64) -> bool {
        to_f64(&self.lo) - 1e-12 <= v && v <= to_f64(&self.hi) + 1e-12
    }
}

pub fn triangle_defect(x: &AlgebraElement<Q>, y: &AlgebraElement<Q>) -> Result<DefectEnclosure> {
    let s = x.add(y);
    let (lx, ux) = root_enclosure(&quartic_norm4(x)?, 4);
    let (ly, uy) = root_enclosure(&quartic_norm4(y)?, 4);
    let (ls, us) = root_enclosure(&quartic_norm4(&s)?, 4);
    let lo = &lx + &ly - &us;
    let hi = ux + uy - ls;
    let approx = (to_f64(&lo) + to_f64(&hi)) / 2.0;
    Ok(DefectEnclosure { lo, hi, approx })
}

/// Maps (x₀,x₁,x₂,x₃) to the (x₀,x₂,x₁,x₃) layout used by M₂ with n = 2.
pub fn tes_to_iterated(x: &AlgebraElement<Q>) -> Result<Vec<Q>> {
    check_dim(x, 4)?;
    let c = &x.coeffs;
    Ok(vec![c[0].clone(), c[2].clone(), c[1].clone(), c[3].clone()])
}

#[derive(Debug, Clone, PartialEq)]
pub struct InversePair {
    pub left: AlgebraElement<Q>,
    pub right: AlgebraElement<Q>,
}

/// LI = conj(x·(x·x̄))/|x|⁴ and RI = conj((x·x̄)·x)/|x|⁴ on 𝕋.
pub fn inverse_formulas(x: &AlgebraElement<Q>) -> Result<InversePair> {
    let n = quartic_norm4(x)?;
    if n.is_zero() {
        return Err(Error::NotInvertible);
    }
    let t = TwistedAlgebra::tesseranions();
    let xb = t.conjugate(x)?;
    let inv = n.recip();
    let left = t.conjugate(&t.mul(x, &t.mul(x, &xb)))?.scale_q(&inv);
    let right = t.conjugate(&t.mul(&t.mul(x, &xb), x))?.scale_q(&inv);
    Ok(InversePair { left, right })
}

/// Closed forms agree with the linear solves and with the defining products.
pub fn inverse_formulas_verified(x: &AlgebraElement<Q>) -> Result<bool> {
    let t = TwistedAlgebra::tesseranions();
    let f = inverse_formulas(x)?;
    let one = AlgebraElement::unit(4, &q(0));
    Ok(f.left == t.left_inverse(x)?
        && f.right == t.right_inverse(x)?
        && t.mul(&f.left, x) == one
        && t.mul(x, &f.right) == one)
}

/// {1, x, x², x·x²} as a 4×4 determinant; nonzero means x generates 𝕋.
pub fn generation_det(x: &AlgebraElement<Q>) -> Result<Q> {
    check_dim(x, 4)?;
    let t = TwistedAlgebra::tesseranions();
    let x2 = t.mul(x, x);
    let x3 = t.mul(x, &x2);
    let cols = [AlgebraElement::unit(4, &q(0)), x.clone(), x2, x3];
    let m: Vec<Vec<Q>> = (0..4).map(|r| cols.iter().map(|c| c.coeffs[r].clone()).collect()).collect();
    crate::polynomial::det_cofactor(&m)
}

/// Random elements with nonzero odd part, each checked to generate 𝕋.
pub fn generation_check(samples: usize, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < samples {
        let c: Vec<Q> = (0..4).map(|_| q(rng.gen_range(-9..=9))).collect();
        let x = AlgebraElement::new(c);
        if is_pure_even(&x) {
            continue;
        }
        done += 1;
        if generation_det(&x)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn conjugate_identities_hold() -> bool {
    static OK: OnceLock<bool> = OnceLock::new();
    *OK.get_or_init(|| {
        let t = TwistedAlgebra::tesseranions();
        ["T1", "T2"]
            .iter()
            .all(|n| catalogue::tesseranity(n).and_then(|c| verify_combo(&t, &c)).unwrap_or(false))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KeySide {
    /// Solve a·x = c.
    Left,
    /// Solve y·b = d.
    Right,
}

fn zp_algebra(p: u64) -> Result<TwistedAlgebra> {
    let ring = ScalarRing::mod_p(p)?;
    if !conjugate_identities_hold() {
        return Err(Error::Precondition("conjugate identities failed symbolic verification".into()));
    }
    TwistedAlgebra::tesseranions().with_ring(ring)
}

fn key_norm_inverse(key: &AlgebraElement<Zp>) -> Result<Zp> {
    quartic_closed(&key.coeffs)
        .inverse()
        .ok_or_else(|| Error::Precondition("key norm vanishes mod p".into()))
}

/// Left side: x = |a|⁻⁴ (ā·c)·conj(a·ā); right side: y = |b|⁻⁴ conj(b·b̄)·(d·b̄).
pub fn encrypt(key: &AlgebraElement<Q>, msg: &AlgebraElement<Q>, p: u64, side: KeySide) -> Result<AlgebraElement<Zp>> {
    let alg = zp_algebra(p)?;
    check_dim(key, 4)?;
    check_dim(msg, 4)?;
    let a = key.to_zp(p)?;
    let c = msg.to_zp(p)?;
    let inv = key_norm_inverse(&a)?;
    let ab = alg.conjugate(&a)?;
    let x = match side {
        KeySide::Left => alg.product(&alg.product(&ab, &c)?, &alg.conjugate(&alg.product(&a, &ab)?)?)?,
        KeySide::Right => alg.product(&alg.conjugate(&alg.product(&a, &ab)?)?, &alg.product(&c, &ab)?)?,
    };
    Ok(x.scale(&inv))
}

/// a·x (left) or x·b (right) mod p.
pub fn decrypt(key: &AlgebraElement<Q>, cipher: &AlgebraElement<Zp>, p: u64, side: KeySide) -> Result<AlgebraElement<Zp>> {
    let alg = zp_algebra(p)?;
    check_dim(key, 4)?;
    let a = key.to_zp(p)?;
    key_norm_inverse(&a)?;
    match side {
        KeySide::Left => alg.product(&a, cipher),
        KeySide::Right => alg.product(cipher, &a),
    }
}

pub fn round_trip(key: &AlgebraElement<Q>, msg: &AlgebraElement<Q>, p: u64, side: KeySide) -> Result<bool> {
    let x = encrypt(key, msg, p, side)?;
    Ok(decrypt(key, &x, p, side)? == msg.to_zp(p)?)
}

/// Seeded round trips with random keys (non-invertible keys skipped) and messages.
pub fn encryption_sweep(p: u64, samples: usize, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pi = p.min(i64::MAX as u64) as i64;
    let mut done = 0;
    while done < samples {
        let key = AlgebraElement::new((0..4).map(|_| q(rng.gen_range(0..pi))).collect());
        let msg = AlgebraElement::new((0..4).map(|_| q(rng.gen_range(0..pi))).collect());
        let ok = match round_trip(&key, &msg, p, if done % 2 == 0 { KeySide::Left } else { KeySide::Right }) {
            Ok(b) => b,
            Err(Error::Precondition(_)) => continue,
            Err(e) => return Err(e),
        };
        if !ok {
            return Ok(false);
        }
        done += 1;
    }
    Ok(true)
}

/// Linear solve of the same equations over ℚ, for cross-checking.
pub fn solve_left_equation(a: &AlgebraElement<Q>, c: &AlgebraElement<Q>) -> Result<AlgebraElement<Q>> {
    let t = TwistedAlgebra::tesseranions();
    let m = t.mult_matrix_right(a);
    linalg::solve(&m, &c.coeffs).map(AlgebraElement::new).ok_or(Error::NotInvertible)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(c: &[i64]) -> AlgebraElement<Q> {
        AlgebraElement::from_ints(c)
    }

    #[test]
    fn quartic_examples() {
        assert_eq!(quartic_norm4(&e(&[1, 1, 0, 0])).unwrap(), q(2));
        assert_eq!(quartic_norm4(&e(&[1, 1, 1, 0])).unwrap(), q(5));
        assert_eq!(quartic_norm4(&e(&[0, 0, 0, 0])).unwrap(), q(0));
        assert!(quartic_chain_agrees(&e(&[3, -1, 4, 1])).unwrap());
        assert!(quartic_chain_symbolic().unwrap());
    }

    #[test]
    fn schwarz_numbers() {
        let p = e(&[1, 1, 0, 0]);
        assert_eq!(schwarz_defect4(&p, &p).unwrap(), q(-16));
        assert_eq!(schwarz_defect4(&p, &e(&[1, -1, 0, 0])).unwrap(), q(0));
        assert_eq!(schwarz_defect4(&e(&[1, 1, 1, 0]), &e(&[1, -1, 1, 0])).unwrap(), q(8));
        assert!(schwarz_equality_pure(&e(&[2, 0, 3, 0]), &e(&[1, 5, -2, 7])).unwrap());
        assert!(schwarz_equality_pure(&e(&[0, 1, 0, 2]), &e(&[1, 5, -2, 7])).unwrap());
        assert!(schwarz_equality_pure(&p, &p).is_err());
        assert!(schwarz_equality_pure_symbolic(false).unwrap());
        assert!(schwarz_equality_pure_symbolic(true).unwrap());
        assert!(quaternion_schwarz_symbolic().unwrap());
    }

    #[test]
    fn iterated_examples() {
        let s1 = IteratedNormSpec::new(1, 2).unwrap();
        let v = iterated_norm(s1, &[q(3), q(4)]).unwrap();
        assert_eq!(v.exact_power, q(25));
        assert!((v.float_root - 5.0).abs() < 1e-12);
        let s2 = IteratedNormSpec::new(2, 2).unwrap();
        let v = iterated_norm(s2, &[q(1), q(0), q(1), q(0)]).unwrap();
        assert_eq!(v.exact_power, q(2));
        let x = e(&[3, -1, 4, 2]);
        assert_eq!(iterated_norm(s2, &tes_to_iterated(&x).unwrap()).unwrap().exact_power, quartic_norm4(&x).unwrap());
        assert!(iterated_norm(s2, &[q(1)]).is_err());
        assert!(m2_matches_quartic_symbolic());
    }

    #[test]
    fn triangle_and_defects() {
        let p = e(&[1, 1, 0, 0]);
        let d = triangle_defect(&p, &e(&[1, -1, 0, 0])).unwrap();
        assert!(d.lo.is_positive() && d.contains(2.0 * (2f64.powf(0.25) - 1.0)));
        let d = triangle_defect(&e(&[1, 1, 1, 0]), &e(&[1, -1, 1, 0])).unwrap();
        assert!(d.lo.is_positive() && d.contains(2.0 * (5f64.powf(0.25) - 2f64.sqrt())));
        assert!(triangle_defect(&p, &p).unwrap().contains(0.0));
        let spec = IteratedNormSpec::new(3, 2).unwrap();
        let r = triangle_check(spec, 500, 7).unwrap();
        assert!(r.holds() && r.samples == 500);
        assert!(positive_homogeneity_check(spec, 50, 3).unwrap());
    }

    #[test]
    fn inverses_and_generation() {
        let w = e(&[0, 1, 0, 0]);
        let f = inverse_formulas(&w).unwrap();
        assert_eq!(f.left, e(&[0, 0, 0, 1]));
        assert_eq!(f.right, e(&[0, 0, 0, -1]));
        assert!(inverse_formulas_verified(&e(&[2, -1, 3, 5])).unwrap());
        let pe = inverse_formulas(&e(&[2, 0, 3, 0])).unwrap();
        assert_eq!(pe.left, pe.right);
        assert_eq!(pe.left, AlgebraElement::new(vec![qr(2, 13), q(0), qr(-3, 13), q(0)]));
        assert!(inverse_formulas(&e(&[0, 0, 0, 0])).is_err());
        assert!(pure_even_associativity().unwrap());
        assert!(generation_check(100, 1).unwrap());
        assert!(generation_det(&e(&[1, 0, 2, 0])).unwrap().is_zero());
    }

    #[test]
    fn encryption() {
        let a = e(&[1, 1, 0, 0]);
        let c = e(&[5, 6, 7, 8]);
        assert!(round_trip(&a, &c, 257, KeySide::Left).unwrap());
        assert!(round_trip(&a, &c, 257, KeySide::Right).unwrap());
        assert_eq!(encrypt(&e(&[1, 0, 0, 0]), &c, 257, KeySide::Left).unwrap(), c.to_zp(257).unwrap());
        // (4²)² + 1 = 257
        assert!(matches!(encrypt(&e(&[4, 1, 0, 0]), &c, 257, KeySide::Left), Err(Error::Precondition(_))));
        assert!(matches!(encrypt(&a, &c, 2, KeySide::Left), Err(Error::InvalidModulus(2))));
        assert!(encryption_sweep(101, 40, 9).unwrap());
        let x = solve_left_equation(&a, &c).unwrap();
        assert_eq!(TwistedAlgebra::tesseranions().mul(&a, &x), c);
    }
}
