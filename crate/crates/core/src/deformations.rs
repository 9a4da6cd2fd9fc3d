//! One-parameter deformations of the tesseranion structure constant within
//! the ℤ₄ left-standard shape.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{table_iv, AlgebraElement, StructureConstant, TwistedAlgebra};
use crate::classification::{non_isomorphism_fingerprint, Fingerprint, Z4_PARAMS};
use crate::error::{Error, Result};
use crate::groups::{BasisConvention, FiniteGroup};
use crate::linalg;
use crate::polynomial::{find_sign_change, find_sos, symbolic_det, var_list, MultiPoly, SearchConfig, UniPoly, ZeroWitness};
use crate::scalar::{q, qr, ScalarRing, Q};
use crate::structure::{commutator_algebra, BilinearAlgebra};

/// (α, β, δ, ε, φ, ω) of the tesseranions.
pub fn tesseranion_parameters() -> [Q; 6] {
    [q(-1), q(-1), q(1), q(1), q(-1), q(1)]
}

/// Normalized Z4 shape (α,β,δ,ε,φ,ω) with nonzero rational parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricConstant {
    pub params: [Q; 6],
}

impl ParametricConstant {
    pub fn new(params: [Q; 6]) -> Result<Self> {
        if let Some(i) = params.iter().position(|p| p.is_zero()) {
            return Err(Error::Precondition(format!("parameter {} is zero", Z4_PARAMS[i])));
        }
        Ok(ParametricConstant { params })
    }

    pub fn from_ints(p: [i64; 6]) -> Result<Self> {
        Self::new(p.map(q))
    }

    pub fn constant(&self) -> StructureConstant {
        StructureConstant::new(FiniteGroup::z4().shared(), table_iv(self.params.clone()), BasisConvention::LeftStandard)
            .expect("table IV shape is unital")
    }

    pub fn algebra(&self) -> TwistedAlgebra {
        TwistedAlgebra::new(self.constant(), ScalarRing::Rational).expect("rational constant")
    }

    pub fn to_json(&self) -> Value {
        Value::Object(Z4_PARAMS.iter().zip(&self.params).map(|(n, v)| (n.to_string(), json!(v.to_string()))).collect())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NecConsReport {
    pub passes: bool,
    pub violated: Vec<&'static str>,
    /// −δβ > 0 and −αεω > 0, implied by the five conditions.
    pub corollaries_hold: bool,
}

pub fn neccons_check(p: &ParametricConstant) -> NecConsReport {
    let [a, b, d, e, f, w] = &p.params;
    let conds: [(&str, Q); 5] = [
        ("-epsilon*beta > 0", -(e * b)),
        ("-alpha*delta*omega > 0", -(a * d * w)),
        ("-phi > 0", -f.clone()),
        ("alpha*beta*omega > 0", a * b * w),
        ("epsilon*delta > 0", e * d),
    ];
    let violated: Vec<&'static str> = conds.iter().filter(|(_, v)| !v.is_positive()).map(|(n, _)| *n).collect();
    let corollaries_hold = (-(d * b)).is_positive() && (-(a * e * w)).is_positive();
    NecConsReport { passes: violated.is_empty(), violated, corollaries_hold }
}

/// Exact enclosure of √3 with width 10⁻⁹, verified by squaring.
pub fn sqrt3_enclosure() -> (Q, Q) {
    let lo = qr(1_732_050_807, 1_000_000_000);
    let hi = qr(1_732_050_808, 1_000_000_000);
    debug_assert!(&lo * &lo < q(3) && &hi * &hi > q(3));
    (lo, hi)
}

/// Enclosure of (2/3)√3 − 1.
pub fn family4_lower_bound() -> (Q, Q) {
    let (lo, hi) = sqrt3_enclosure();
    (qr(2, 3) * lo - q(1), qr(2, 3) * hi - q(1))
}

/// Enclosure of 3 + 2√3.
pub fn conservative_upper_bound() -> (Q, Q) {
    let (lo, hi) = sqrt3_enclosure();
    (q(3) + q(2) * lo, q(3) + q(2) * hi)
}

/// t⁴ − 6t² − 4t − 3 with t = √ρ, i.e. 4√ρ − ρ² + 6ρ + 3 = 0.
pub fn rho_polynomial() -> UniPoly {
    UniPoly::from_ints(&[-3, -4, -6, 0, 1])
}

/// Enclosure of the positive root ρ. The sharper validity bound it is
/// claimed to give is not certified; acceptance uses 3 + 2√3.
pub fn rho_enclosure() -> Result<(Q, Q)> {
    let p = rho_polynomial();
    let iv = p
        .isolate_roots()?
        .into_iter()
        .find(|iv| iv.lo >= Q::zero() && iv.hi.is_positive())
        .ok_or(Error::Precondition("no positive root".into()))?;
    let iv = p.refine(&iv, &qr(1, 1_000_000));
    Ok((&iv.lo * &iv.lo, &iv.hi * &iv.hi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub id: u8,
}

impl FamilySpec {
    pub fn new(id: u8) -> Result<Self> {
        if !(1..=8).contains(&id) {
            return Err(Error::Precondition(format!("family {id} is not in 1..=8")));
        }
        Ok(FamilySpec { id })
    }

    pub fn all() -> Vec<FamilySpec> {
        (1..=8).map(|id| FamilySpec { id }).collect()
    }

    pub fn parameters(&self, k: &Q) -> [Q; 6] {
        let k = k.clone();
        let m = -k.clone();
        let (o, n) = (q(1), q(-1));
        match self.id {
            1 => [m, n.clone(), o.clone(), o, n, k],
            2 => [n.clone(), m, k, o, n, q(1)],
            3 => [n.clone(), n.clone(), o, k.clone(), n, k],
            4 => [m, n.clone(), o, k.clone(), n, k],
            5 => [n.clone(), n.clone(), k, o.clone(), n, o],
            6 => [n.clone(), n.clone(), o.clone(), o, n, k],
            7 => [n.clone(), m, o.clone(), o, n, q(1)],
            _ => [m, n.clone(), o.clone(), o.clone(), n, o],
        }
    }

    /// Exact validity test: k > 0 for families 1–3, k > (2/3)√3 − 1 for
    /// family 4 and 0 < k ≤ 3 + 2√3 for families 5–8.
    pub fn is_valid(&self, k: &Q) -> bool {
        match self.id {
            1..=3 => k.is_positive(),
            // 3(k+1)/2 > √3
            4 => {
                let t = qr(3, 2) * (k + q(1));
                t.is_positive() && &t * &t > q(3)
            }
            // k − 3 ≤ 2√3
            _ => k.is_positive() && (*k <= q(3) || (k - q(3)) * (k - q(3)) <= q(12)),
        }
    }

    pub fn validity_label(&self) -> &'static str {
        match self.id {
            1..=3 => "k > 0",
            4 => "k > (2/3)sqrt(3) - 1",
            _ => "0 < k <= 3 + 2 sqrt(3)",
        }
    }
}

pub fn family_constant(id: u8, k: &Q) -> Result<ParametricConstant> {
    let f = FamilySpec::new(id)?;
    if k.is_zero() {
        return Err(Error::Precondition("k must be nonzero".into()));
    }
    ParametricConstant::new(f.parameters(k))
}

/// det M^L over generic y, the parameters kept as indeterminates.
pub fn generic_det_left() -> Result<MultiPoly> {
    let names: Vec<String> = ["y0", "y1", "y2", "y3"].iter().map(|s| s.to_string()).chain(Z4_PARAMS.iter().map(|s| s.to_string())).collect();
    let vars = var_list(&names);
    let v = |i: usize| MultiPoly::var(&vars, i);
    let c = |x: i64| MultiPoly::constant(&vars, q(x));
    let table = [
        [c(1), c(1), c(1), c(1)],
        [c(1), c(1), c(1), v(4)],
        [c(1), v(5), c(-1), v(6)],
        [c(1), v(7), v(8), v(9)],
    ];
    // M^L(y)x = x·y: row k, column a holds C(a, b) y_b with a + b = k
    let mut m = vec![vec![c(0); 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            let k = (a + b) % 4;
            m[k][a] = &table[a][b] * &v(b);
        }
    }
    symbolic_det(&m)
}

/// Closed form of det M^L over the six Z4 shape parameters.
pub fn det_ml_z4_formula() -> MultiPoly {
    let names: Vec<String> = ["y0", "y1", "y2", "y3"].iter().map(|s| s.to_string()).chain(Z4_PARAMS.iter().map(|s| s.to_string())).collect();
    let vars = var_list(&names);
    let v = |i: usize| MultiPoly::var(&vars, i);
    let c = |x: i64| MultiPoly::constant(&vars, q(x));
    let (y0, y1, y2, y3) = (v(0), v(1), v(2), v(3));
    let (a, b, d, e, f, w) = (v(4), v(5), v(6), v(7), v(8), v(9));
    let y0s = &y0 * &y0;
    let y1s = &y1 * &y1;
    let y2s = &y2 * &y2;
    let y3s = &y3 * &y3;
    let one = c(1);
    let mut p = &y0s * &y0s;
    p = &p - &(&(&e * &b) * &(&y1s * &y1s));
    p = &p - &(&f * &(&y2s * &y2s));
    p = &p - &(&(&(&a * &d) * &w) * &(&y3s * &y3s));
    p = &p + &(&(&one - &f) * &(&y0s * &y2s));
    p = &p + &(&(&(&(&a * &b) * &w) + &(&e * &d)) * &(&y1s * &y3s));
    let c1 = &(&(&e * &(&one + &b)) + &(&f * &b)) - &one;
    let c3 = &(&a * &(&d + &f)) - &(&w * &(&one - &d));
    p = &p + &(&(&(&c1 * &y1s) + &(&c3 * &y3s)) * &(&y0 * &y2));
    let c22 = &(&w - &(&e * &d)) - &(&f * &(&(&a * &b) - &one));
    let c00 = &(&(&a + &(&b * &w)) + &d) + &e;
    p = &p + &(&(&(&c22 * &y2s) - &(&c00 * &y0s)) * &(&y1 * &y3));
    p
}

pub fn det_formula_matches() -> Result<bool> {
    Ok(generic_det_left()? == det_ml_z4_formula())
}

fn det_left_of(p: &ParametricConstant) -> Result<MultiPoly> {
    let alg = p.algebra();
    Ok(crate::classification::multiplication_dets(&alg)?.0)
}

#[derive(Debug, Clone)]
pub enum WitnessStatus {
    /// A verified zero-divisor witness for det M^L.
    Found(ZeroWitness),
    /// det M^L has a sum-of-squares certificate.
    CertifiedAbsent,
    /// The search exhausted its probes without a witness.
    NotFound,
}

impl WitnessStatus {
    pub fn label(&self) -> &'static str {
        match self {
            WitnessStatus::Found(_) => "witness",
            WitnessStatus::CertifiedAbsent => "absent (sos certificate)",
            WitnessStatus::NotFound => "absent (search exhausted, empirical)",
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, WitnessStatus::Found(_))
    }
}

/// Sign-change search on det M^L: slices first, then the grid ±bound.
pub fn witness_search(p: &ParametricConstant, bound: i64) -> Result<WitnessStatus> {
    let det = det_left_of(p)?;
    let lines = SearchConfig { use_grid: false, ..SearchConfig::default() };
    if let Some(w) = find_sign_change(&det, &lines).filter(|w| w.verify(&det)) {
        return Ok(WitnessStatus::Found(w));
    }
    if find_sos(&det).is_some() {
        return Ok(WitnessStatus::CertifiedAbsent);
    }
    let grid = SearchConfig { bound, use_lines: false, ..SearchConfig::default() };
    Ok(match find_sign_change(&det, &grid).filter(|w| w.verify(&det)) {
        Some(w) => WitnessStatus::Found(w),
        None => WitnessStatus::NotFound,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct NecConsSweep {
    pub assignments: usize,
    pub violating: usize,
    pub witnessed: usize,
    /// Violating assignments for which no witness was found.
    pub missed: Vec<Vec<String>>,
}

/// Every assignment with entries in {±1, ±2} that fails the necessary
/// conditions, checked for a witness.
pub fn neccons_witness_sweep() -> Result<NecConsSweep> {
    let vals = [1i64, -1, 2, -2];
    let all: Vec<[i64; 6]> = (0..4usize.pow(6))
        .map(|mut m| {
            std::array::from_fn(|_| {
                let v = vals[m % 4];
                m /= 4;
                v
            })
        })
        .collect();
    let violating: Vec<ParametricConstant> = all
        .iter()
        .map(|p| ParametricConstant::from_ints(*p))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| !neccons_check(p).passes)
        .collect();
    let results: Vec<Result<(ParametricConstant, bool)>> = violating
        .par_iter()
        .map(|p| Ok((p.clone(), witness_search(p, 3)?.is_found())))
        .collect();
    let mut witnessed = 0;
    let mut missed = Vec::new();
    for r in results {
        let (p, found) = r?;
        if found {
            witnessed += 1;
        } else {
            missed.push(p.params.iter().map(|v| v.to_string()).collect());
        }
    }
    Ok(NecConsSweep { assignments: all.len(), violating: violating.len(), witnessed, missed })
}

fn rational_sqrt(v: &Q) -> Option<Q> {
    if v.is_negative() {
        return None;
    }
    let n = v.numer().sqrt();
    let d = v.denom().sqrt();
    (&n * &n == *v.numer() && &d * &d == *v.denom()).then(|| Q::new(n, d))
}

fn rebased_params(alg: &TwistedAlgebra, w: &AlgebraElement<Q>) -> Option<Vec<Vec<Q>>> {
    alg.rebase_cyclic(w).ok().map(|c| c.values().to_vec())
}

/// 𝕋¹(s²) rebased on w' = [0, 0, 0, 1/s] equals 𝕋¹(1/s²).
pub fn k_inverse_isomorphism(k: &Q) -> Result<bool> {
    let s = rational_sqrt(k).filter(|s| s.is_positive()).ok_or_else(|| Error::NotSquareRational(k.to_string()))?;
    let alg = family_constant(1, k)?.algebra();
    let w = AlgebraElement::new(vec![q(0), q(0), q(0), s.recip()]);
    let target = family_constant(1, &k.recip())?.constant();
    Ok(rebased_params(&alg, &w).as_deref() == Some(target.values()))
}

fn change_basis(l: &BilinearAlgebra, basis: &[AlgebraElement<Q>]) -> Option<BilinearAlgebra> {
    let n = l.dim;
    let m: Vec<Vec<Q>> = (0..n).map(|r| basis.iter().map(|b| b.coeffs[r].clone()).collect()).collect();
    let mut tensor = vec![vec![vec![]; n]; n];
    for i in 0..n {
        for j in 0..n {
            tensor[i][j] = linalg::solve(&m, &l.mul(&basis[i], &basis[j]).coeffs)?;
        }
    }
    Some(BilinearAlgebra { dim: n, tensor })
}

#[derive(Debug, Clone, Serialize)]
pub struct RescalingReport {
    pub k: String,
    pub u: String,
    /// v'₁ = u·v₁, v'₃ = u·v₃.
    pub corrected_matches: bool,
    /// v'₁ = u·v₁, v'₂ = u·v₂.
    pub literal_matches: bool,
}

/// Rescaled commutator algebra of 𝕋¹(k) against that of 𝕋, with
/// u⁻² = (1 + k)/2.
pub fn commutator_rescaling(k: &Q) -> Result<RescalingReport> {
    let half = (k + q(1)) / q(2);
    let r = rational_sqrt(&half).filter(|r| r.is_positive()).ok_or_else(|| Error::NotSquareRational(half.to_string()))?;
    let u = r.recip();
    let target = commutator_algebra(&TwistedAlgebra::tesseranions());
    let l = commutator_algebra(&family_constant(1, k)?.algebra());
    let scaled = |idx: [usize; 2]| -> Vec<AlgebraElement<Q>> {
        (0..4)
            .map(|i| {
                let e = AlgebraElement::basis(4, i, &Q::zero());
                if idx.contains(&i) {
                    e.scale_q(&u)
                } else {
                    e
                }
            })
            .collect()
    };
    let corrected = change_basis(&l, &scaled([1, 3])).is_some_and(|b| b == target);
    let literal = change_basis(&l, &scaled([1, 2])).is_some_and(|b| b == target);
    Ok(RescalingReport { k: k.to_string(), u: u.to_string(), corrected_matches: corrected, literal_matches: literal })
}

/// Rational candidates for generator components: n/d with |n| ≤ h, d ≤ h,
/// together with the rational points of the unit circle of height ≤ h.
fn generator_candidates(h: i64) -> Vec<(Q, Q)> {
    let mut vals: Vec<Q> = Vec::new();
    for d in 1..=h {
        for n in -h..=h {
            let v = qr(n, d);
            if !vals.contains(&v) {
                vals.push(v);
            }
        }
    }
    let mut out: Vec<(Q, Q)> = Vec::new();
    for a in &vals {
        for b in &vals {
            if !a.is_zero() || !b.is_zero() {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    for d in 1..=h {
        for n in -h..=h {
            let t = qr(n, d);
            let den = q(1) + &t * &t;
            let (c, s) = ((q(1) - &t * &t) / &den, q(2) * &t / &den);
            for (x, y) in [(c.clone(), s.clone()), (-c.clone(), s.clone()), (c.clone(), -s.clone()), (-c, -s)] {
                if !out.contains(&(x.clone(), y.clone())) {
                    out.push((x, y));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct NonIsomorphismReport {
    pub k: String,
    pub k_prime: String,
    pub height: i64,
    pub generators_tested: usize,
    /// First generator [0, a₁, 0, a₃] whose rebasing reproduces 𝕋¹(k').
    pub found: Option<Vec<String>>,
    pub note: &'static str,
}

/// Searches rational generators [0, a₁, 0, a₃] of 𝕋¹(k) for a left-standard
/// rebasing equal to 𝕋¹(k'). A negative result is evidence, not proof.
pub fn nonisomorphism_evidence(k: &Q, k_prime: &Q, height: i64) -> Result<NonIsomorphismReport> {
    let alg = family_constant(1, k)?.algebra();
    let target = family_constant(1, k_prime)?.constant().values().to_vec();
    let cands = generator_candidates(height);
    let found = cands.par_iter().find_first(|(a1, a3)| {
        let w = AlgebraElement::new(vec![q(0), a1.clone(), q(0), a3.clone()]);
        rebased_params(&alg, &w).as_ref() == Some(&target)
    });
    Ok(NonIsomorphismReport {
        k: k.to_string(),
        k_prime: k_prime.to_string(),
        height,
        generators_tested: cands.len(),
        found: found.map(|(a1, a3)| vec!["0".into(), a1.to_string(), "0".into(), a3.to_string()]),
        note: "finite rational search; real generators are not covered",
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyOneReport {
    pub k: String,
    pub chiral_at_w: bool,
    pub power_associative: bool,
    pub fingerprint_matches_tesseranions: bool,
}

/// LI ≠ RI at w = v₁ and the identity fingerprint of 𝕋¹(k).
pub fn family_one_checks(k: &Q, reference: &Fingerprint) -> Result<FamilyOneReport> {
    let alg = family_constant(1, k)?.algebra();
    let w = AlgebraElement::basis(4, 1, &Q::zero());
    let chiral = alg.left_inverse(&w)? != alg.right_inverse(&w)?;
    let fp = non_isomorphism_fingerprint(&alg)?;
    Ok(FamilyOneReport {
        k: k.to_string(),
        chiral_at_w: chiral,
        power_associative: fp.power_associative,
        fingerprint_matches_tesseranions: fp == *reference,
    })
}

pub fn tesseranion_fingerprint() -> Result<Fingerprint> {
    non_isomorphism_fingerprint(&TwistedAlgebra::tesseranions())
}

/// Every family at k = 1 reproduces the tesseranion constant.
pub fn families_degenerate_at_one() -> bool {
    let t = TwistedAlgebra::tesseranions();
    FamilySpec::all().iter().all(|f| {
        ParametricConstant::new(f.parameters(&q(1))).map(|p| p.constant() == *t.constant()).unwrap_or(false)
    })
}

/// JSON report for `deform`.
pub fn deform_report(id: u8, k: &Q, checks: &[&str]) -> Result<Value> {
    let spec = FamilySpec::new(id)?;
    let p = family_constant(id, k)?;
    let mut out = BTreeMap::new();
    out.insert("family".to_string(), json!(id));
    out.insert("k".to_string(), json!(k.to_string()));
    out.insert("parameters".to_string(), p.to_json());
    out.insert("valid".to_string(), json!(spec.is_valid(k)));
    out.insert("validity".to_string(), json!(spec.validity_label()));
    for c in checks {
        let v = match *c {
            "neccons" => serde_json::to_value(neccons_check(&p))?,
            "witness" => {
                let s = witness_search(&p, 3)?;
                let mut v = json!({ "status": s.label() });
                if let WitnessStatus::Found(w) = &s {
                    v["witness"] = serde_json::to_value(w.report(&det_left_of(&p)?))?;
                }
                v
            }
            "inverse-iso" => match k_inverse_isomorphism(k) {
                Ok(b) => json!({ "holds": b }),
                Err(e) => json!({ "skipped": e.to_string() }),
            },
            "commutator" => match commutator_rescaling(k) {
                Ok(r) => serde_json::to_value(r)?,
                Err(e) => json!({ "skipped": e.to_string() }),
            },
            other => return Err(Error::Parse(format!("unknown check {other}"))),
        };
        out.insert(c.to_string(), v);
    }
    Ok(json!(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neccons_examples() {
        assert!(neccons_check(&ParametricConstant::new(tesseranion_parameters()).unwrap()).passes);
        let bad = ParametricConstant::from_ints([-1, -1, 1, 1, 1, 1]).unwrap();
        assert_eq!(neccons_check(&bad).violated, vec!["-phi > 0"]);
        assert!(neccons_check(&family_constant(1, &q(4)).unwrap()).passes);
        assert!(ParametricConstant::from_ints([0, -1, 1, 1, -1, 1]).is_err());
    }

    #[test]
    fn families() {
        assert!(families_degenerate_at_one());
        let f1 = family_constant(1, &q(4)).unwrap();
        assert_eq!(f1.params[0], q(-4));
        assert_eq!(f1.params[5], q(4));
        let f2 = family_constant(2, &q(3)).unwrap();
        assert_eq!((f2.params[1].clone(), f2.params[2].clone()), (q(-3), q(3)));
        let f4 = FamilySpec::new(4).unwrap();
        assert!(f4.is_valid(&qr(155, 1000)) && !f4.is_valid(&qr(154, 1000)));
        let f5 = FamilySpec::new(5).unwrap();
        assert!(f5.is_valid(&qr(6464, 1000)) && !f5.is_valid(&qr(6465, 1000)));
        let (lo, hi) = family4_lower_bound();
        assert!(lo > qr(15470, 100000) && hi < qr(15471, 100000));
        let (lo, hi) = rho_enclosure().unwrap();
        assert!(lo > qr(78, 10) && hi < qr(782, 100));
    }

    #[test]
    fn det_formula() {
        assert!(det_formula_matches().unwrap());
    }

    #[test]
    fn witnesses() {
        assert!(!witness_search(&family_constant(1, &q(4)).unwrap(), 3).unwrap().is_found());
        let eps = ParametricConstant::from_ints([-1, -1, 1, -1, -1, 1]).unwrap();
        assert!(witness_search(&eps, 3).unwrap().is_found());
    }

    #[test]
    fn isomorphisms() {
        assert!(k_inverse_isomorphism(&q(4)).unwrap());
        assert!(k_inverse_isomorphism(&q(9)).unwrap());
        assert!(k_inverse_isomorphism(&q(1)).unwrap());
        assert!(k_inverse_isomorphism(&q(2)).is_err());
        for k in [7, 1, 49] {
            let r = commutator_rescaling(&q(k)).unwrap();
            assert!(r.corrected_matches, "k = {k}");
        }
        assert!(!commutator_rescaling(&q(7)).unwrap().literal_matches);
        assert!(commutator_rescaling(&q(2)).is_err());
    }

    #[test]
    fn nonisomorphism() {
        let r = nonisomorphism_evidence(&q(4), &q(9), 3).unwrap();
        assert!(r.found.is_none());
        assert!(nonisomorphism_evidence(&q(4), &qr(1, 4), 3).unwrap().found.is_some());
        assert!(nonisomorphism_evidence(&q(4), &q(4), 3).unwrap().found.is_some());
    }

    #[test]
    fn family_one_keeps_chirality() {
        let reference = tesseranion_fingerprint().unwrap();
        for k in [q(2), q(3), q(4), qr(1, 2)] {
            let r = family_one_checks(&k, &reference).unwrap();
            assert!(r.chiral_at_w && !r.power_associative, "k = {k}");
        }
    }

    #[test]
    fn neccons_violations_have_witnesses() {
        let s = neccons_witness_sweep().unwrap();
        assert_eq!(s.assignments, 4096);
        assert!(s.missed.is_empty(), "{:?}", s.missed);
    }
}
