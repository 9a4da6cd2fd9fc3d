//! Stated tesseranion identities and the coefficient families of degree
//! patterns (2,2), (3,1), (5) and (6).

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::TwistedAlgebra;
use crate::error::{Error, Result};
use crate::identities::{verify_combo, Combo, Expr};
use crate::scalar::{q, Q};

/// Named identities in x, y (conjugation written `~`).
pub const TESSERANITY: &[(&str, &str)] = &[
    ("T1", "~x.(x.y) - y.(x.~x)"),
    ("T2", "(y.x).~x - (x.~x).y"),
    ("T3", "x.(x.y) - x2.y - y.x2 + (y.x).x"),
    ("T4", "x.(x.x2) - 2 x2.x2 + (x2.x).x"),
    ("T5", "x.(x2.x) - (x.x2).x - x2.x2 + (x2.x).x"),
    ("T8", "x2.y2 - (x2.y).y - y.(y.x2) + y2.x2"),
    ("T9", "(x.y).(x.y) - ((x.y).x).y - y.(x.(x.y)) + (y.x).(x.y)"),
    ("T10", "x.(y.(x.y)) - (x.y).(x.y) - (x.y).(y.x) + ((x.y).y).x"),
    ("T11", "y.(x.(x.y)) - y.(x2.y) - y.(y.x2) + y.((y.x).x)"),
    (
        "T12",
        "x.(x.y2) - x.((x.y).y) + y.(x2.y) - y.(x.(x.y)) + x.((x.y).y) - (x.(x.y)).y - y.(y.x2) + y2.x2",
    ),
    (
        "T13",
        "x.(x.y2) - x.((x.y).y) + y.(x2.y) - y.(x.(x.y)) + x.(x.y2) - x2.y2 - x.((y.x).y) + (x.(y.x)).y",
    ),
    (
        "T14",
        "x.(x.y2) - x2.y2 - y.(x.(y.x)) + (y.x).(y.x) + y.(x2.y) - (y.x2).y - y.(x.(x.y)) + (y.x).(x.y)",
    ),
    ("T15", "x.((x.y).y) - x.(x.y2) + ((x.y).y).x - (x.y2).x + y.(y.x2) - y2.x2"),
    ("T16", "y.((x.y).x) - (y.(x.y)).x - x.((x.y).y) + (x.(x.y)).y"),
    (
        "T17",
        "x.(x.y2) - x.((x.y).y) + y.((y.x).x) - y.(y.x2) + x.(x.y2) - x2.y2 - y.((y.x).x) + (y.(y.x)).x",
    ),
];

/// Five expressions that all equal the quartic norm |x|⁴ (times the unit).
pub const QUARTIC_NORM_CHAIN: [&str; 5] =
    ["(x.~x).conj(x.~x)", "conj(x.(x.~x)).x", "conj(~x.x2).x", "x.conj((x.~x).x)", "x.conj(x2.~x)"];

pub fn tesseranity(name: &str) -> Result<Combo> {
    TESSERANITY
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Parse(format!("unknown identity {name}")))
        .and_then(|(_, s)| Combo::parse(s))
}

/// Differences between consecutive members of the quartic norm chain.
pub fn quartic_chain_combos() -> Result<Vec<Combo>> {
    let e: Vec<Expr> = QUARTIC_NORM_CHAIN.iter().map(|s| Expr::parse(s)).collect::<Result<_>>()?;
    Ok(e.windows(2).map(|w| Combo::new(vec![(q(1), w[0].clone()), (q(-1), w[1].clone())])).collect())
}

/// Named monomials together with linear relations `name = Σ k·name` that
/// express the dependent coefficients through the free ones.
#[derive(Debug, Clone)]
pub struct CoefficientFamily {
    pub name: &'static str,
    pub pattern: &'static str,
    pub monomials: Vec<(String, String)>,
    pub conditions: Vec<&'static str>,
}

type Relation = (String, Vec<(Q, String)>);

fn parse_relation(s: &str) -> Result<Relation> {
    let (lhs, rhs) = s.split_once('=').ok_or_else(|| Error::Parse(format!("relation without '=': {s}")))?;
    let rhs: String = rhs.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut cur = String::new();
    let flush = |cur: &mut String, terms: &mut Vec<(Q, String)>| -> Result<()> {
        if cur.is_empty() {
            return Ok(());
        }
        let (neg, body) = match cur.as_bytes()[0] {
            b'-' => (true, &cur[1..]),
            b'+' => (false, &cur[1..]),
            _ => (false, &cur[..]),
        };
        let split = body.find(|c: char| c.is_ascii_alphabetic()).ok_or_else(|| Error::Parse(format!("bad term {cur}")))?;
        let k: i64 = if split == 0 { 1 } else { body[..split].parse().map_err(|_| Error::Parse(format!("bad term {cur}")))? };
        terms.push((q(if neg { -k } else { k }), body[split..].to_string()));
        cur.clear();
        Ok(())
    };
    for c in rhs.chars() {
        if (c == '+' || c == '-') && !cur.is_empty() {
            flush(&mut cur, &mut terms)?;
        }
        cur.push(c);
    }
    flush(&mut cur, &mut terms)?;
    Ok((lhs.trim().to_string(), terms))
}

impl CoefficientFamily {
    pub fn relations(&self) -> Result<Vec<Relation>> {
        self.conditions.iter().map(|s| parse_relation(s)).collect()
    }

    /// Names not fixed by any relation.
    pub fn free_names(&self) -> Result<Vec<String>> {
        let dep: Vec<String> = self.relations()?.into_iter().map(|(l, _)| l).collect();
        Ok(self.monomials.iter().map(|(n, _)| n.clone()).filter(|n| !dep.contains(n)).collect())
    }

    /// Combination with the given free coefficients; the rest follow from
    /// the relations.
    pub fn instantiate(&self, free: &BTreeMap<String, Q>) -> Result<Combo> {
        let mut coef: BTreeMap<String, Q> = free.clone();
        for (lhs, rhs) in self.relations()? {
            let mut v = Q::zero();
            for (k, n) in rhs {
                let c = free.get(&n).ok_or_else(|| Error::Parse(format!("{lhs} depends on non-free {n}")))?;
                v += k * c;
            }
            coef.insert(lhs, v);
        }
        let mut terms = Vec::new();
        for (n, e) in &self.monomials {
            let c = coef.get(n).cloned().unwrap_or_else(Q::zero);
            if !c.is_zero() {
                terms.push((c, Expr::parse(e)?));
            }
        }
        Ok(Combo::new(terms))
    }

    /// `count` instantiations with free coefficients drawn from [-9, 9].
    pub fn random_instances(&self, count: usize, seed: u64) -> Result<Vec<Combo>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let names = self.free_names()?;
        (0..count)
            .map(|_| {
                let free = names.iter().map(|n| (n.clone(), q(rng.gen_range(-9..=9)))).collect();
                self.instantiate(&free)
            })
            .collect()
    }

    /// Every random instance verifies.
    pub fn verify_random(&self, alg: &TwistedAlgebra, count: usize, seed: u64) -> Result<bool> {
        for c in self.random_instances(count, seed)? {
            if !verify_combo(alg, &c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Each free coefficient set to 1 alone; these span the family.
    pub fn unit_instances(&self) -> Result<Vec<Combo>> {
        let names = self.free_names()?;
        names
            .iter()
            .map(|n| {
                let free = names.iter().map(|m| (m.clone(), q(i64::from(m == n)))).collect();
                self.instantiate(&free)
            })
            .collect()
    }
}

fn named(groups: &[(&str, &[&str])]) -> Vec<(String, String)> {
    groups
        .iter()
        .flat_map(|(p, list)| list.iter().enumerate().map(move |(i, e)| (format!("{p}{}", i + 1), e.to_string())))
        .collect()
}

pub fn tess_id22() -> CoefficientFamily {
    CoefficientFamily {
        name: "TessId22",
        pattern: "2,2",
        monomials: named(&[
            ("a", &["x2.y2", "(x.y).(x.y)", "(y.x).(x.y)", "(x.y).(y.x)", "(y.x).(y.x)", "y2.x2"]),
            ("b", &["x.(x.y2)", "x.(y.(x.y))", "y.(x.(x.y))", "x.(y.(y.x))", "y.(x.(y.x))", "y.(y.x2)"]),
            ("c", &["(x2.y).y", "((x.y).x).y", "((y.x).x).y", "((x.y).y).x", "((y.x).y).x", "(y2.x).x"]),
            ("e", &["x.((x.y).y)", "x.((y.x).y)", "y.(x2.y)", "x.(y2.x)", "y.((x.y).x)", "y.((y.x).x)"]),
            ("f", &["(x.(x.y)).y", "(x.(y.x)).y", "(y.x2).y", "(x.y2).x", "(y.(x.y)).x", "(y.(y.x)).x"]),
        ]),
        conditions: vec![
            "a1=-f6-c1-c6-f2+f3",
            "a2=-c4-f4-c2",
            "a3=-f3-c2-c3",
            "a4=-c5-f4-c4",
            "a5=-f3-c3-c5",
            "a6=-c1-f1-f5+f4-c6",
            "b1=2f6+c6+2f2+e4+f4-f1-f5-f3",
            "b2=c4+f4",
            "b3=c2+f1+f5+f3-f2+e6",
            "b4=-e4+c5",
            "b5=f3+c3",
            "b6=-f4-f6-e6+f1+f5+c1",
            "e1=-f6+f5-f2-e4-f4",
            "e2=-f2",
            "e3=-f1-f5-f3+f2-e6",
            "e5=-f5",
        ],
    }
}

/// The four (3,1) monomials carried by the names f1…f4.
pub const TESSID31_F_MONOMIALS: [&str; 4] = ["(y.x2).x", "(x.(y.x)).x", "(x.(x.y)).x", "(x.x2).y"];

/// Position in [`TESSID31_F_MONOMIALS`] of the monomial named f1, f2, f3, f4.
pub const TESSID31_F_ASSIGNMENT: [usize; 4] = [3, 2, 1, 0];

pub fn tess_id31_with(assignment: [usize; 4]) -> CoefficientFamily {
    let f: Vec<&str> = assignment.iter().map(|&i| TESSID31_F_MONOMIALS[i]).collect();
    CoefficientFamily {
        name: "TessId31",
        pattern: "3,1",
        monomials: named(&[
            ("a", &["x2.(x.y)", "x2.(y.x)", "(x.y).x2", "(y.x).x2"]),
            ("b", &["x.(x.(x.y))", "x.(x.(y.x))", "x.(y.x2)", "y.(x.x2)"]),
            ("c", &["(x2.x).y", "(x2.y).x", "((x.y).x).x", "((y.x).x).x"]),
            ("e", &["x.(x2.y)", "x.((x.y).x)", "x.((y.x).x)", "y.(x2.x)"]),
            ("f", &f),
        ]),
        conditions: vec![
            "a1=-c3-c1-f3",
            "a2=-c4-f3-c2",
            "a3=-c3-f2-c2",
            "a4=-f1-f4+f3-c1-c4",
            "b1=c3+e3+2f3",
            "b2=c4+2f3-f2",
            "b3=f2-f3+c2-e3",
            "b4=f1+f4-2f3+c1+f2",
            "e1=-f1-e3-f3",
            "e2=-f3",
            "e4=-f2-f4+f3",
        ],
    }
}

pub fn tess_id31() -> CoefficientFamily {
    tess_id31_with(TESSID31_F_ASSIGNMENT)
}

/// Every assignment of f1…f4 to the four unnamed monomials under which the
/// family's unit instances all verify.
pub fn resolve_tess_id31(alg: &TwistedAlgebra) -> Result<Vec<[usize; 4]>> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&i| seen[i] = true);
                    if !seen.iter().all(|&s| s) {
                        continue;
                    }
                    let fam = tess_id31_with(p);
                    let mut ok = true;
                    for combo in fam.unit_instances()? {
                        if !verify_combo(alg, &combo)? {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        out.push(p);
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn tess_id5() -> CoefficientFamily {
    CoefficientFamily {
        name: "TessId5",
        pattern: "5",
        monomials: vec![
            ("a1", "x.(x2.x2)"),
            ("b1", "x.(x.(x.x2))"),
            ("c1", "x.((x2.x).x)"),
            ("e1", "x.(x.(x2.x))"),
            ("f1", "x.((x.x2).x)"),
            ("a2", "(x2.x2).x"),
            ("b2", "(x.(x.x2)).x"),
            ("c2", "((x2.x).x).x"),
            ("e2", "(x.(x2.x)).x"),
            ("f2", "((x.x2).x).x"),
            ("a3", "x2.(x2.x)"),
            ("b3", "x2.(x.x2)"),
            ("c3", "(x2.x).x2"),
            ("e3", "(x.x2).x2"),
        ]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect(),
        conditions: vec![
            "a1=-2c1-2f1-b2+c2-2e2-e1-f2-e3",
            "a2=-2c2+f1+e1-f2-e3-c3",
            "a3=-f1-b2+c2-e1+f2+e3+c3",
            "b1=c1+2f1+b2-c2+2e2+e1+f2",
            "b3=-e1-e2-f1-f2-c3",
        ],
    }
}

pub const TESSID6_MONOMIALS: [&str; 42] = [
    "x.(x.(x.(x.x2)))",
    "x.(x.(x.(x2.x)))",
    "x.(x.(x2.x2))",
    "x.(x.((x.x2).x))",
    "x.(x.((x2.x).x))",
    "x.(x2.(x.x2))",
    "x.(x2.(x2.x))",
    "x.((x.x2).x2)",
    "x.((x.(x.x2)).x)",
    "x.((x.(x2.x)).x)",
    "x.((x2.x).x2)",
    "x.((x2.x2).x)",
    "x.(((x.x2).x).x)",
    "x.(((x2.x).x).x)",
    "x2.(x.(x.x2))",
    "x2.(x.(x2.x))",
    "x2.(x2.x2)",
    "x2.((x.x2).x)",
    "x2.((x2.x).x)",
    "(x.x2).(x.x2)",
    "(x.x2).(x2.x)",
    "(x.(x.x2)).x2",
    "(x.(x.(x.x2))).x",
    "(x.(x.(x2.x))).x",
    "(x.(x2.x)).x2",
    "(x.(x2.x2)).x",
    "(x.((x.x2).x)).x",
    "(x.((x2.x).x)).x",
    "(x2.x).(x.x2)",
    "(x2.x).(x2.x)",
    "(x2.x2).x2",
    "(x2.(x.x2)).x",
    "(x2.(x2.x)).x",
    "((x.x2).x).x2",
    "((x.x2).x2).x",
    "((x.(x.x2)).x).x",
    "((x.(x2.x)).x).x",
    "((x2.x).x).x2",
    "((x2.x).x2).x",
    "((x2.x2).x).x",
    "(((x.x2).x).x).x",
    "(((x2.x).x).x).x",
];

pub fn tess_id6() -> CoefficientFamily {
    CoefficientFamily {
        name: "TessId6",
        pattern: "6",
        monomials: TESSID6_MONOMIALS.iter().enumerate().map(|(i, e)| (format!("a{:02}", i + 1), e.to_string())).collect(),
        conditions: vec![
            "a01=2a36+a31+a33+a29+2a34+2a28+a20+a35+a40+a38+2a37+a41+2a25+a24+2a10+a14+a26+a12+a09+2a27+a04+a05+a11+2a13+a08+a22",
            "a02=2a36+2a31+a33+a29+2a34+a30+2a28+a21+a32+a20+2a35+2a40+2a38+3a37+3a41+2a25+a24+2a42+2a39+2a14+a26+a12+2a27-a04+a11+a13+a08+2a22",
            "a03=-a36+a30-a28+a21+a32+a35+a40+a38-a37+a41-a25-a24+a23-2a10+3a42+2a39-a14-a12-a09-2a27-a04-2a05-a11-2a13-2a08-a22",
            "a06=-2a36-2a31-a33-a29-3a34-a30-2a28-a21-a32-2a20-2a35-2a40-2a38-3a37-3a41-3a25-a24-a10-2a42-2a39-2a14-a26-a12-2a27-2a11-2a13-a08-2a22",
            "a07=-a28-a21-a35-a23-a14-a26-a12-a09",
            "a15=-a41+a24+a19-a25-a28+a23-a31-a40-a35-2a29+a18-a20+a32-2a34-a37-2a38-a36-a42",
            "a16=-a30-a32-a37-a41-a24-a18-a39-a27",
            "a17=-a36-a31-2a33-a30-a21-2a32-a35-2a40-a38-a41-a24-2a23-a18-3a42-2a39-a26-2a19-a22",
        ],
    }
}

pub fn families() -> Vec<CoefficientFamily> {
    vec![tess_id22(), tess_id31(), tess_id5(), tess_id6()]
}

/// (x·x² − x²·x)·x, which equals −2 at the cyclic generator of 𝕋.
pub const SHOWCASE: &str = "(x.x2).x - (x2.x).x";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_parser() {
        let (l, r) = parse_relation("b1=2f6+c6-f1").unwrap();
        assert_eq!(l, "b1");
        assert_eq!(r, vec![(q(2), "f6".into()), (q(1), "c6".into()), (q(-1), "f1".into())]);
        let (l, r) = parse_relation("a01=2a36-a31").unwrap();
        assert_eq!(l, "a01");
        assert_eq!(r[1], (q(-1), "a31".into()));
    }

    #[test]
    fn families_are_well_formed() {
        for f in families() {
            let names: Vec<&String> = f.monomials.iter().map(|(n, _)| n).collect();
            for (l, r) in f.relations().unwrap() {
                assert!(names.contains(&&l), "{}: {l}", f.name);
                for (_, n) in r {
                    assert!(names.contains(&&n), "{}: {n}", f.name);
                }
            }
            for (_, e) in &f.monomials {
                Expr::parse(e).unwrap();
            }
        }
        assert_eq!(tess_id22().monomials.len(), 30);
        assert_eq!(tess_id31().monomials.len(), 20);
        assert_eq!(tess_id6().free_names().unwrap().len(), 34);
        assert_eq!(tess_id5().free_names().unwrap().len(), 9);
    }
}
