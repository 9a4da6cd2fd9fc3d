//! Enumeration and certified classification of sign-valued structure
//! constants.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{generic_elements, table_ii, table_iv, AlgebraElement, StructureConstant, TwistedAlgebra};
use crate::error::{Error, Result};
use crate::groups::{BasisConvention, FiniteGroup, GroupElement, GroupName};
use crate::identities::{identity_space, loop_property_suite, DegreePattern};
use crate::polynomial::{
    det_bareiss, find_sign_change, find_sos, symbolic_det, verify_sos, MultiPoly, RootInterval, SearchConfig,
    SosCertificate, UniPoly, ZeroWitness,
};
use crate::scalar::{q, qr, Q, ScalarRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Free signs of the pre-normalized Klein and Z4 shapes.
    Shaped,
    /// Every unital sign array.
    Raw,
}

impl std::str::FromStr for EnumerationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "shaped" => Ok(EnumerationMode::Shaped),
            "raw" => Ok(EnumerationMode::Raw),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

impl std::fmt::Display for EnumerationMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EnumerationMode::Shaped => "shaped",
            EnumerationMode::Raw => "raw",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateConstant {
    pub constant: StructureConstant,
    /// Named free signs, in enumeration order.
    pub parameters: Vec<(String, i64)>,
}

impl CandidateConstant {
    pub fn algebra(&self) -> TwistedAlgebra {
        TwistedAlgebra::new(self.constant.clone(), ScalarRing::Rational).expect("sign constants are rational")
    }

    fn params_json(&self) -> Value {
        Value::Object(self.parameters.iter().map(|(k, v)| (k.clone(), json!(v))).collect())
    }
}

pub const KLEIN_PARAMS: [&str; 5] = ["alpha", "beta", "delta", "epsilon", "phi"];
pub const Z4_PARAMS: [&str; 6] = ["alpha", "beta", "delta", "epsilon", "phi", "omega"];

/// All ±1 assignments, first name slowest, +1 before −1.
fn sign_assignments(k: usize) -> Vec<Vec<i64>> {
    (0..1usize << k)
        .map(|m| (0..k).map(|j| if m >> (k - 1 - j) & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

fn qs<const N: usize>(s: &[i64]) -> [Q; N] {
    std::array::from_fn(|i| q(s[i]))
}

fn transpose(m: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i].clone()).collect()).collect()
}

pub fn enumerate_candidates(
    group: &FiniteGroup,
    convention: BasisConvention,
    mode: EnumerationMode,
) -> Result<Vec<CandidateConstant>> {
    let g = Arc::new(group.clone());
    let n = group.order();
    let build = |values: Vec<Vec<Q>>, names: &[String], signs: &[i64]| -> Result<CandidateConstant> {
        Ok(CandidateConstant {
            constant: StructureConstant::new(g.clone(), values, convention)?,
            parameters: names.iter().cloned().zip(signs.iter().copied()).collect(),
        })
    };
    if n == 1 {
        return Ok(vec![build(vec![vec![q(1)]], &[], &[])?]);
    }
    if !matches!(n, 2 | 4) {
        return Err(Error::UnsupportedGroup(format!("classification needs order 1, 2 or 4, got {n}")));
    }
    match mode {
        EnumerationMode::Raw => {
            let cells: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
            let names: Vec<String> = cells.iter().map(|(a, b)| format!("C({a},{b})")).collect();
            sign_assignments(cells.len())
                .into_iter()
                .map(|s| {
                    let mut v = vec![vec![q(1); n]; n];
                    for ((a, b), x) in cells.iter().zip(&s) {
                        v[*a][*b] = q(*x);
                    }
                    build(v, &names, &s)
                })
                .collect()
        }
        EnumerationMode::Shaped => match group.name() {
            GroupName::Cyclic(2) => sign_assignments(1)
                .into_iter()
                .map(|s| build(vec![vec![q(1), q(1)], vec![q(1), q(s[0])]], &["alpha".into()], &s))
                .collect(),
            GroupName::Z2xZ2 => {
                let names: Vec<String> = KLEIN_PARAMS.iter().map(|s| s.to_string()).collect();
                sign_assignments(5)
                    .into_iter()
                    .map(|s| {
                        let t = table_ii(qs(&s));
                        let v = match convention {
                            BasisConvention::RightStandard => t,
                            BasisConvention::LeftStandard => transpose(t),
                        };
                        build(v, &names, &s)
                    })
                    .collect()
            }
            GroupName::Cyclic(4) => {
                let names: Vec<String> = Z4_PARAMS.iter().map(|s| s.to_string()).collect();
                sign_assignments(6)
                    .into_iter()
                    .map(|s| {
                        let t = table_iv(qs(&s));
                        let v = match convention {
                            BasisConvention::LeftStandard => t,
                            BasisConvention::RightStandard => transpose(t),
                        };
                        build(v, &names, &s)
                    })
                    .collect()
            }
            other => Err(Error::UnsupportedGroup(format!("no shaped enumeration for {other}"))),
        },
    }
}

/// det M^L(y) and det M^R(y) over generic y.
pub fn multiplication_dets(alg: &TwistedAlgebra) -> Result<(MultiPoly, MultiPoly)> {
    let (_, ys) = generic_elements(&["y"], alg.dim());
    let y = &ys[0];
    Ok((symbolic_det(&alg.mult_matrix_left(y))?, symbolic_det(&alg.mult_matrix_right(y))?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetSide {
    Left,
    Right,
}

impl DetSide {
    pub fn label(self) -> &'static str {
        match self {
            DetSide::Left => "det M^L",
            DetSide::Right => "det M^R",
        }
    }
}

/// Why a determinant vanishes only at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonvanishingCertificate {
    SumOfSquares(SosCertificate),
    /// One-dimensional algebra: the determinant is c·y₀ with c ≠ 0.
    Linear,
}

impl NonvanishingCertificate {
    pub fn verify(&self, p: &MultiPoly) -> bool {
        match self {
            NonvanishingCertificate::SumOfSquares(c) => verify_sos(p, c),
            NonvanishingCertificate::Linear => {
                p.vars().len() == 1 && p.num_terms() == 1 && p.coefficient(&[1]) != Q::zero()
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            NonvanishingCertificate::SumOfSquares(c) => c.to_string(),
            NonvanishingCertificate::Linear => "nonzero multiple of y0".into(),
        }
    }
}

fn certify(p: &MultiPoly) -> Option<NonvanishingCertificate> {
    let lin = NonvanishingCertificate::Linear;
    if lin.verify(p) {
        return Some(lin);
    }
    find_sos(p).map(NonvanishingCertificate::SumOfSquares)
}

#[derive(Debug, Clone)]
pub struct Rejected {
    pub candidate: CandidateConstant,
    pub side: DetSide,
    pub det: MultiPoly,
    pub witness: ZeroWitness,
}

#[derive(Debug, Clone)]
pub struct Survivor {
    pub candidate: CandidateConstant,
    pub det_left: MultiPoly,
    pub det_right: MultiPoly,
    pub left_certificate: NonvanishingCertificate,
    pub right_certificate: NonvanishingCertificate,
}

#[derive(Debug, Clone)]
pub enum Verdict {
    Rejected(Rejected),
    Survivor(Survivor),
    Undetermined(CandidateConstant),
}

/// Rejection needs a verified zero witness, survival needs certificates for
/// both determinants; anything else is left undetermined.
pub fn classify_candidate(c: &CandidateConstant) -> Result<Verdict> {
    let alg = c.algebra();
    let (dl, dr) = multiplication_dets(&alg)?;
    let lines = SearchConfig { use_grid: false, ..SearchConfig::default() };
    let grid = SearchConfig { use_lines: false, ..SearchConfig::default() };
    let reject = |side: DetSide, det: &MultiPoly, w: ZeroWitness| {
        debug_assert!(w.verify(det));
        Verdict::Rejected(Rejected { candidate: c.clone(), side, det: det.clone(), witness: w })
    };
    // a sign change on either side beats a segment root
    let mut touching = None;
    for (side, d) in [(DetSide::Left, &dl), (DetSide::Right, &dr)] {
        if let Some(w) = find_sign_change(d, &lines).filter(|w| w.verify(d)) {
            if !matches!(w, ZeroWitness::SegmentRoot { .. }) {
                return Ok(reject(side, d, w));
            }
            touching.get_or_insert((side, d, w));
        }
    }
    if let Some((side, d, w)) = touching {
        return Ok(reject(side, d, w));
    }
    if let (Some(l), Some(r)) = (certify(&dl), certify(&dr)) {
        return Ok(Verdict::Survivor(Survivor {
            candidate: c.clone(),
            det_left: dl,
            det_right: dr,
            left_certificate: l,
            right_certificate: r,
        }));
    }
    for (side, d) in [(DetSide::Left, &dl), (DetSide::Right, &dr)] {
        if let Some(w) = find_sign_change(d, &grid).filter(|w| w.verify(d)) {
            return Ok(reject(side, d, w));
        }
    }
    Ok(Verdict::Undetermined(c.clone()))
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub group: GroupName,
    pub convention: BasisConvention,
    pub mode: EnumerationMode,
    pub candidates_examined: usize,
    pub rejected: Vec<Rejected>,
    pub survivors: Vec<Survivor>,
    pub undetermined: Vec<CandidateConstant>,
}

impl ClassificationReport {
    /// Every witness and certificate re-checked from scratch.
    pub fn verify(&self) -> bool {
        let parts = self.rejected.len() + self.survivors.len() + self.undetermined.len() == self.candidates_examined;
        let rej = self.rejected.iter().all(|r| {
            let (dl, dr) = multiplication_dets(&r.candidate.algebra()).expect("dets");
            let d = if r.side == DetSide::Left { dl } else { dr };
            d == r.det && r.witness.verify(&d)
        });
        let surv = self.survivors.iter().all(|s| {
            let (dl, dr) = multiplication_dets(&s.candidate.algebra()).expect("dets");
            dl == s.det_left
                && dr == s.det_right
                && s.left_certificate.verify(&dl)
                && s.right_certificate.verify(&dr)
        });
        parts && rej && surv
    }

    pub fn to_json(&self) -> Value {
        let rejected: Vec<Value> = self
            .rejected
            .iter()
            .map(|r| {
                json!({
                    "constant": r.candidate.constant.as_ints(),
                    "parameters": r.candidate.params_json(),
                    "determinant": r.side.label(),
                    "witness": r.witness.report(&r.det),
                })
            })
            .collect();
        let survivors: Vec<Value> = self
            .survivors
            .iter()
            .map(|s| {
                json!({
                    "constant": s.candidate.constant.as_ints(),
                    "parameters": s.candidate.params_json(),
                    "det_left": s.det_left.to_string(),
                    "det_right": s.det_right.to_string(),
                    "left_certificate": s.left_certificate.describe(),
                    "right_certificate": s.right_certificate.describe(),
                })
            })
            .collect();
        let undetermined: Vec<Value> = self
            .undetermined
            .iter()
            .map(|c| json!({"constant": c.constant.as_ints(), "parameters": c.params_json()}))
            .collect();
        json!({
            "group": self.group.to_string(),
            "convention": self.convention.label(),
            "mode": self.mode.to_string(),
            "candidates_examined": self.candidates_examined,
            "rejected_count": self.rejected.len(),
            "survivor_count": self.survivors.len(),
            "undetermined_count": self.undetermined.len(),
            "survivors": survivors,
            "rejected": rejected,
            "undetermined": undetermined,
        })
    }
}

pub fn classify(group: &FiniteGroup, convention: BasisConvention, mode: EnumerationMode) -> Result<ClassificationReport> {
    let cands = enumerate_candidates(group, convention, mode)?;
    let verdicts: Vec<Verdict> = cands.par_iter().map(classify_candidate).collect::<Result<_>>()?;
    let mut report = ClassificationReport {
        group: group.name(),
        convention,
        mode,
        candidates_examined: cands.len(),
        rejected: Vec::new(),
        survivors: Vec::new(),
        undetermined: Vec::new(),
    };
    for v in verdicts {
        match v {
            Verdict::Rejected(r) => report.rejected.push(r),
            Verdict::Survivor(s) => report.survivors.push(s),
            Verdict::Undetermined(c) => report.undetermined.push(c),
        }
    }
    Ok(report)
}

/// The unique shaped survivor in the mirrored convention is the transpose
/// of the unique survivor in `convention`.
pub fn opposite_uniqueness_check(group: &FiniteGroup, convention: BasisConvention) -> Result<bool> {
    let a = classify(group, convention, EnumerationMode::Shaped)?;
    let b = classify(group, convention.mirrored(), EnumerationMode::Shaped)?;
    if a.survivors.len() != 1 || b.survivors.len() != 1 {
        return Ok(false);
    }
    let sa = &a.survivors[0].candidate.constant;
    let sb = &b.survivors[0].candidate.constant;
    Ok(sa.transpose().values() == sb.values())
}

/// M^L(y) nonsingular at `samples` random nonzero integer points.
pub fn nonsingular_spot_check(alg: &TwistedAlgebra, samples: usize, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = alg.dim();
    let mut done = 0;
    while done < samples {
        let y: Vec<Q> = (0..n).map(|_| q(rng.gen_range(-5..=5))).collect();
        if y.iter().all(|c| c.is_zero()) {
            continue;
        }
        if det_bareiss(&alg.mult_matrix_left(&AlgebraElement::new(y)))?.is_zero() {
            return Ok(false);
        }
        done += 1;
    }
    Ok(true)
}

/// Algebraic invariants that separate non-isomorphic algebras.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Fingerprint {
    pub dimension: usize,
    pub commutative: bool,
    pub associative: bool,
    pub alternative: bool,
    pub flexible: bool,
    pub power_associative: bool,
    /// Identity-space dimensions per degree pattern.
    pub identity_dims: Vec<(String, usize)>,
}

pub const FINGERPRINT_PATTERNS: [&str; 6] = ["2,1", "4", "2,2", "3,1", "5", "6"];

pub fn non_isomorphism_fingerprint(alg: &TwistedAlgebra) -> Result<Fingerprint> {
    let laws = loop_property_suite(alg)?;
    let mut dims = Vec::new();
    for p in FINGERPRINT_PATTERNS {
        let pat: DegreePattern = p.parse()?;
        dims.push((pat.to_string(), identity_space(alg, &pat)?.dimension()));
    }
    Ok(Fingerprint {
        dimension: alg.dim(),
        commutative: laws.commutative.holds,
        associative: laws.associative.holds,
        alternative: laws.alternative.holds,
        flexible: laws.flexible.holds,
        power_associative: laws.power_associative.holds,
        identity_dims: dims,
    })
}

/// Real zero of the determinant restricted to a cyclic subgroup of odd
/// prime order.
#[derive(Debug, Clone)]
pub struct OddOrderWitness {
    pub prime: usize,
    /// Subgroup elements g⁰, g¹, …, g^{p−1}.
    pub subgroup: Vec<usize>,
    /// det M^L restricted to the subalgebra at y_h = 1 (h ≠ e), y_e = s.
    pub polynomial: UniPoly,
    pub sturm_roots: usize,
    pub root: RootInterval,
}

impl OddOrderWitness {
    /// Odd degree, Sturm count ≥ 1, and the enclosure brackets a root.
    pub fn verify(&self) -> bool {
        let odd = self.polynomial.degree().is_some_and(|d| d % 2 == 1);
        let bracket = if self.root.is_exact() {
            self.polynomial.eval(&self.root.lo).is_zero()
        } else {
            let a = self.polynomial.eval(&self.root.lo);
            let b = self.polynomial.eval(&self.root.hi);
            !a.is_zero()
                && !b.is_zero()
                && self.polynomial.count_roots_in(&self.root.lo, &self.root.hi).map(|k| k >= 1).unwrap_or(false)
        };
        odd && self.sturm_roots >= 1 && bracket
    }
}

fn smallest_odd_prime(n: usize) -> Option<usize> {
    (3..=n).step_by(2).find(|&p| n % p == 0 && (2..p).all(|d| p % d != 0))
}

pub fn odd_order_zero_divisor(constant: &StructureConstant) -> Result<OddOrderWitness> {
    let g = constant.group();
    let n = g.order();
    let p = smallest_odd_prime(n).ok_or(Error::PowerOfTwoOrder(n))?;
    let gen = g
        .elements()
        .find(|&x| g.element_order(x) % p == 0)
        .ok_or_else(|| Error::Precondition(format!("no element of order divisible by {p}")))?;
    let mut h = gen;
    for _ in 1..g.element_order(gen) / p {
        h = g.mul(h, gen);
    }
    let mut sub = vec![GroupElement::IDENTITY];
    for _ in 1..p {
        sub.push(g.mul(*sub.last().unwrap(), h));
    }
    // M^L restricted to span{v_h : h ∈ H}: entry (c, a) = C(a, a⁻¹c)·y_{a⁻¹c}
    let s = UniPoly::new(vec![Q::zero(), Q::one()]);
    let one = UniPoly::new(vec![Q::one()]);
    let m: Vec<Vec<UniPoly>> = sub
        .iter()
        .map(|&c| {
            sub.iter()
                .map(|&a| {
                    let b = g.mul(g.inverse(a), c);
                    let base = if b == GroupElement::IDENTITY { s.clone() } else { one.clone() };
                    base.mul(&UniPoly::new(vec![constant.get(a, b).clone()]))
                })
                .collect()
        })
        .collect();
    let poly = uni_det(&m);
    let sturm = poly.count_real_roots()?;
    let roots = poly.isolate_roots()?;
    let first = roots.first().ok_or_else(|| Error::Precondition("odd-degree polynomial without a root".into()))?;
    let root = poly.refine(first, &qr(1, 1000));
    Ok(OddOrderWitness { prime: p, subgroup: sub.iter().map(|e| e.0).collect(), polynomial: poly, sturm_roots: sturm, root })
}

fn uni_det(m: &[Vec<UniPoly>]) -> UniPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = UniPoly::new(vec![]);
    for j in 0..n {
        let minor: Vec<Vec<UniPoly>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect()).collect();
        let mut t = m[0][j].mul(&uni_det(&minor));
        if j % 2 == 1 {
            t = t.mul(&UniPoly::new(vec![q(-1)]));
        }
        acc = acc.add(&t);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{TABLE_I, TABLE_III, TABLE_V};

    #[test]
    fn candidate_counts() {
        let l = BasisConvention::LeftStandard;
        let r = BasisConvention::RightStandard;
        let s = EnumerationMode::Shaped;
        assert_eq!(enumerate_candidates(&FiniteGroup::z2(), l, s).unwrap().len(), 2);
        assert_eq!(enumerate_candidates(&FiniteGroup::klein(), r, s).unwrap().len(), 32);
        assert_eq!(enumerate_candidates(&FiniteGroup::z4(), l, s).unwrap().len(), 64);
        assert_eq!(enumerate_candidates(&FiniteGroup::z4(), l, EnumerationMode::Raw).unwrap().len(), 512);
        assert!(enumerate_candidates(&FiniteGroup::cyclic(3), l, s).is_err());
    }

    #[test]
    fn z2_survivor_is_complex() {
        let rep = classify(&FiniteGroup::z2(), BasisConvention::LeftStandard, EnumerationMode::Shaped).unwrap();
        assert_eq!(rep.survivors.len(), 1);
        assert_eq!(rep.rejected.len(), 1);
        assert_eq!(rep.survivors[0].candidate.constant.as_ints().unwrap(), TABLE_I.map(|r| r.to_vec()).to_vec());
        assert!(rep.verify());
    }

    #[test]
    fn trivial_group_is_reals() {
        let rep = classify(&FiniteGroup::cyclic(1), BasisConvention::LeftStandard, EnumerationMode::Shaped).unwrap();
        assert_eq!(rep.survivors.len(), 1);
        assert_eq!(rep.survivors[0].left_certificate, NonvanishingCertificate::Linear);
    }

    #[test]
    fn klein_and_z4_shaped_survivors() {
        let k = classify(&FiniteGroup::klein(), BasisConvention::RightStandard, EnumerationMode::Shaped).unwrap();
        assert!(k.undetermined.is_empty());
        assert_eq!(k.survivors.len(), 1);
        assert_eq!(k.survivors[0].candidate.constant.as_ints().unwrap(), TABLE_III.map(|r| r.to_vec()).to_vec());
        let z = classify(&FiniteGroup::z4(), BasisConvention::LeftStandard, EnumerationMode::Shaped).unwrap();
        assert!(z.undetermined.is_empty());
        assert_eq!(z.survivors.len(), 1);
        assert_eq!(z.survivors[0].candidate.constant.as_ints().unwrap(), TABLE_V.map(|r| r.to_vec()).to_vec());
        assert!(z.verify());
    }

    #[test]
    fn odd_order_witness_for_z3() {
        let g = FiniteGroup::cyclic(3).shared();
        let c = StructureConstant::from_ints(g, &[[1, 1, 1], [1, 1, 1], [1, 1, 1]], BasisConvention::LeftStandard).unwrap();
        let w = odd_order_zero_divisor(&c).unwrap();
        assert_eq!(w.polynomial, UniPoly::from_ints(&[2, -3, 0, 1]));
        assert!(w.verify());
        let z4 = StructureConstant::from_ints(FiniteGroup::z4().shared(), &TABLE_V, BasisConvention::LeftStandard).unwrap();
        assert!(matches!(odd_order_zero_divisor(&z4), Err(Error::PowerOfTwoOrder(4))));
    }
}
