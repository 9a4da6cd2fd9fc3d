//! Loop-theoretic laws checked over generic components.

use serde::Serialize;

use crate::algebra::{AlgebraElement, TwistedAlgebra};
use crate::error::Result;
use crate::identities::tree::BracketTree;
use crate::identities::{Combo, Expr};
use crate::scalar::{q, Q};

/// Highest degree checked for power associativity.
pub const POWER_ASSOC_DEGREE: usize = 6;

#[derive(Debug, Clone, Serialize)]
pub struct LawResult {
    pub law: String,
    pub holds: bool,
    /// The failing identity, when the law does not hold.
    pub failing: Option<String>,
    /// Concrete elements (x, y, z, …) on which the failing identity is nonzero.
    pub counterexample: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LoopReport {
    pub algebra: String,
    pub flexible: LawResult,
    pub power_associative: LawResult,
    pub alternative: LawResult,
    pub left_bol: LawResult,
    pub right_bol: LawResult,
    pub moufang: LawResult,
    pub commutative: LawResult,
    pub associative: LawResult,
}

impl LoopReport {
    pub fn laws(&self) -> [&LawResult; 8] {
        [
            &self.flexible,
            &self.power_associative,
            &self.alternative,
            &self.left_bol,
            &self.right_bol,
            &self.moufang,
            &self.commutative,
            &self.associative,
        ]
    }
}

fn probe_elements(n: usize) -> Vec<AlgebraElement<Q>> {
    let mut out: Vec<AlgebraElement<Q>> = (0..n)
        .map(|i| {
            let mut c = vec![q(0); n];
            c[i] = q(1);
            AlgebraElement::new(c)
        })
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            let mut c = vec![q(0); n];
            c[i] = q(1);
            c[j] = q(1);
            out.push(AlgebraElement::new(c));
        }
    }
    out.push(AlgebraElement::new((0..n).map(|i| q(i as i64 + 1)).collect()));
    out
}

/// First tuple of probe elements on which `combo` is nonzero.
pub fn find_counterexample(alg: &TwistedAlgebra, combo: &Combo) -> Result<Option<Vec<AlgebraElement<Q>>>> {
    let nv = combo.nvars();
    let probes = probe_elements(alg.dim());
    let mut idx = vec![0usize; nv];
    loop {
        let vals: Vec<AlgebraElement<Q>> = idx.iter().map(|&i| probes[i].clone()).collect();
        if !combo.eval_q(alg, &vals)?.is_zero() {
            return Ok(Some(vals));
        }
        let mut k = 0;
        loop {
            if k == nv {
                return Ok(None);
            }
            idx[k] += 1;
            if idx[k] < probes.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn check_all(alg: &TwistedAlgebra, law: &str, combos: &[Combo]) -> Result<LawResult> {
    for c in combos {
        if !c.residual(alg)?.is_zero() {
            let cx = find_counterexample(alg, c)?;
            return Ok(LawResult {
                law: law.into(),
                holds: false,
                failing: Some(c.to_string()),
                counterexample: cx.map(|v| v.iter().map(|e| e.coeffs.iter().map(|c| c.to_string()).collect()).collect()),
            });
        }
    }
    Ok(LawResult { law: law.into(), holds: true, failing: None, counterexample: None })
}

fn parse_all(src: &[&str]) -> Vec<Combo> {
    src.iter().map(|s| Combo::parse(s).expect("law syntax")).collect()
}

/// Each bracketing of xⁿ against the left-nested one, 3 ≤ n ≤ 6.
pub fn power_associativity_combos() -> Vec<Combo> {
    let mut out = Vec::new();
    for n in 3..=POWER_ASSOC_DEGREE {
        let shapes = BracketTree::shapes(n);
        let base = Expr::from_tree(&shapes[0]);
        for s in &shapes[1..] {
            out.push(Combo::new(vec![(q(1), Expr::from_tree(s)), (q(-1), base.clone())]));
        }
    }
    out
}

pub fn loop_property_suite(alg: &TwistedAlgebra) -> Result<LoopReport> {
    Ok(LoopReport {
        algebra: alg.label().to_string(),
        flexible: check_all(alg, "flexible", &parse_all(&["(x.y).x - x.(y.x)"]))?,
        power_associative: check_all(alg, "power-associative", &power_associativity_combos())?,
        alternative: check_all(alg, "alternative", &parse_all(&["x.(x.y) - x2.y", "(y.x).x - y.x2"]))?,
        left_bol: check_all(alg, "left Bol", &parse_all(&["x.(y.(x.z)) - (x.(y.x)).z"]))?,
        right_bol: check_all(alg, "right Bol", &parse_all(&["((z.x).y).x - z.((x.y).x)"]))?,
        moufang: check_all(
            alg,
            "Moufang",
            &parse_all(&["(x.y).(z.x) - (x.(y.z)).x", "x.(y.(x.z)) - ((x.y).x).z", "((z.x).y).x - z.(x.(y.x))"]),
        )?,
        commutative: check_all(alg, "commutative", &parse_all(&["x.y - y.x"]))?,
        associative: check_all(alg, "associative", &parse_all(&["(x.y).z - x.(y.z)"]))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_satisfies_everything() {
        let r = loop_property_suite(&TwistedAlgebra::complex()).unwrap();
        assert!(r.laws().iter().all(|l| l.holds));
    }

    #[test]
    fn quaternions_associative_not_commutative() {
        let r = loop_property_suite(&TwistedAlgebra::quaternions()).unwrap();
        assert!(r.associative.holds && r.moufang.holds && r.power_associative.holds);
        assert!(!r.commutative.holds);
        assert!(r.commutative.counterexample.is_some());
    }

    #[test]
    fn tesseranions_fail_every_law() {
        let r = loop_property_suite(&TwistedAlgebra::tesseranions()).unwrap();
        for l in r.laws() {
            assert!(!l.holds, "{} should fail", l.law);
            assert!(l.counterexample.is_some(), "{} lacks a counterexample", l.law);
        }
    }
}
