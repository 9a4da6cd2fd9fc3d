//! Bracketed monomials, symbolic identity checks and identity spaces.

pub mod catalogue;
pub mod expr;
pub mod laws;
pub mod tree;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{generic_elements, AlgebraElement, TwistedAlgebra};
use crate::error::{Error, Result};
use crate::linalg;
use crate::polynomial::MultiPoly;
use crate::scalar::{parse_q, Q, ScalarRing};

pub use expr::Expr;
pub use laws::{loop_property_suite, LawResult, LoopReport};
pub use tree::{catalan, enumerate_monomials, BracketTree, DegreePattern, DEGREE_CAP, VARIABLE_CAP, VAR_NAMES};

const GENERIC_NAMES: [&str; 3] = ["x", "y", "z"];

fn require_rational(alg: &TwistedAlgebra) -> Result<()> {
    if alg.ring() != ScalarRing::Rational {
        return Err(Error::RingMismatch("identity expansion needs a rational algebra".into()));
    }
    Ok(())
}

/// Generic elements for `nvars` variables with indeterminate components.
pub fn generic_vars(alg: &TwistedAlgebra, nvars: usize) -> Result<Vec<AlgebraElement<MultiPoly>>> {
    if nvars > VARIABLE_CAP {
        return Err(Error::VariableCap { count: nvars, cap: VARIABLE_CAP });
    }
    Ok(generic_elements(&GENERIC_NAMES[..nvars.max(1)], alg.dim()).1)
}

/// Components of `t` evaluated at generic elements.
pub fn expand_monomial(alg: &TwistedAlgebra, t: &BracketTree) -> Result<AlgebraElement<MultiPoly>> {
    require_rational(alg)?;
    let nv = t.leaves().into_iter().max().unwrap_or(0) as usize + 1;
    let vars = generic_vars(alg, nv)?;
    Expr::from_tree(t).eval(alg, &vars)
}

/// A rational linear combination of product expressions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Combo {
    pub terms: Vec<(Q, Expr)>,
}

impl Combo {
    pub fn new(terms: Vec<(Q, Expr)>) -> Self {
        Combo { terms }
    }

    pub fn from_trees(terms: &[(Q, BracketTree)]) -> Self {
        Combo { terms: terms.iter().map(|(c, t)| (c.clone(), Expr::from_tree(t))).collect() }
    }

    /// Parses `"x.(x.y) - x2.y - 2 y.x2 + (y.x).x"`.
    pub fn parse(s: &str) -> Result<Combo> {
        let mut terms = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        let bytes: Vec<char> = s.chars().collect();
        let mut pieces = Vec::new();
        for (i, &c) in bytes.iter().enumerate() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && i > 0 => {
                    pieces.push(bytes[start..i].iter().collect::<String>());
                    start = i;
                }
                _ => {}
            }
        }
        pieces.push(bytes[start..].iter().collect::<String>());
        for p in pieces {
            let p = p.trim();
            if p.is_empty() {
                continue;
            }
            let (neg, rest) = match p.chars().next() {
                Some('-') => (true, p[1..].trim()),
                Some('+') => (false, p[1..].trim()),
                _ => (false, p),
            };
            let (coef, body) = match rest.find(|c: char| c.is_whitespace() || c == '*') {
                Some(k) if rest[..k].chars().all(|c| c.is_ascii_digit() || c == '/') && k > 0 => {
                    (parse_q(&rest[..k])?, rest[k..].trim_start_matches(|c: char| c.is_whitespace() || c == '*'))
                }
                _ => (Q::one(), rest),
            };
            let coef = if neg { -coef } else { coef };
            terms.push((coef, Expr::parse(body)?));
        }
        Ok(Combo { terms })
    }

    pub fn nvars(&self) -> usize {
        self.terms.iter().map(|(_, e)| e.max_var() as usize + 1).max().unwrap_or(1)
    }

    /// Common multidegree of the terms, or a mismatch error.
    pub fn pattern(&self) -> Result<Vec<usize>> {
        let nv = self.nvars();
        let mut pat: Option<Vec<usize>> = None;
        for (_, e) in &self.terms {
            let d = e.multidegree(nv);
            match &pat {
                None => pat = Some(d),
                Some(p) if *p != d => {
                    return Err(Error::PatternMismatch(format!("term {e} has degrees {d:?}, expected {p:?}")))
                }
                _ => {}
            }
        }
        Ok(pat.unwrap_or_default())
    }

    pub fn substitute(&self, v: u8, by: &Expr) -> Combo {
        Combo { terms: self.terms.iter().map(|(c, e)| (c.clone(), e.substitute(v, by))).collect() }
    }

    /// Swaps variables `a` and `b`.
    pub fn swap(&self, a: u8, b: u8) -> Combo {
        let tmp = Expr::Var(VARIABLE_CAP as u8 + 7);
        let s = self.substitute(a, &tmp).substitute(b, &Expr::Var(a)).substitute(VARIABLE_CAP as u8 + 7, &Expr::Var(b));
        s
    }

    pub fn scaled(&self, c: &Q) -> Combo {
        Combo { terms: self.terms.iter().map(|(k, e)| (k * c, e.clone())).collect() }
    }

    pub fn extend(&mut self, other: Combo) {
        self.terms.extend(other.terms);
    }

    /// Σ coeff·expr at generic elements.
    pub fn residual(&self, alg: &TwistedAlgebra) -> Result<AlgebraElement<MultiPoly>> {
        require_rational(alg)?;
        let vars = generic_vars(alg, self.nvars())?;
        let parts: Vec<AlgebraElement<MultiPoly>> = self
            .terms
            .par_iter()
            .map(|(c, e)| e.eval(alg, &vars).map(|v| v.scale_q(c)))
            .collect::<Result<_>>()?;
        let mut acc = AlgebraElement::new(vars[0].coeffs.iter().map(|p| MultiPoly::zero(p.vars())).collect());
        for p in parts {
            acc = acc.add(&p);
        }
        Ok(acc)
    }

    /// Value at concrete rational elements.
    pub fn eval_q(&self, alg: &TwistedAlgebra, vals: &[AlgebraElement<Q>]) -> Result<AlgebraElement<Q>> {
        let mut acc = AlgebraElement::new(vec![Q::zero(); alg.dim()]);
        for (c, e) in &self.terms {
            acc = acc.add(&e.eval_q(alg, vals)?.scale_q(c));
        }
        Ok(acc)
    }
}

impl fmt::Display for Combo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, e)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{e}")?;
            } else {
                write!(f, "{a} {e}")?;
            }
        }
        Ok(())
    }
}

/// True iff the combination vanishes identically; errors on mixed patterns.
pub fn verify_combo(alg: &TwistedAlgebra, combo: &Combo) -> Result<bool> {
    combo.pattern()?;
    Ok(combo.residual(alg)?.is_zero())
}

pub fn verify_identity(alg: &TwistedAlgebra, combo: &[(Q, BracketTree)]) -> Result<bool> {
    verify_combo(alg, &Combo::from_trees(combo))
}

/// Nullspace of the monomial expansion matrix for one degree pattern.
#[derive(Debug, Clone)]
pub struct IdentitySpace {
    pub pattern: DegreePattern,
    pub monomials: Vec<BracketTree>,
    pub basis: Vec<Vec<Q>>,
    matrix: Vec<Vec<Q>>,
}

impl IdentitySpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// True iff the coefficient vector annihilates every expansion.
    pub fn contains(&self, v: &[Q]) -> bool {
        v.len() == self.monomials.len() && linalg::mat_vec(&self.matrix, v).iter().all(|c| c.is_zero())
    }

    pub fn index_of(&self, t: &BracketTree) -> Option<usize> {
        self.monomials.iter().position(|m| m == t)
    }

    /// Coefficient vector of a combination of pure monomials.
    pub fn coordinates(&self, combo: &Combo) -> Result<Vec<Q>> {
        let mut v = vec![Q::zero(); self.monomials.len()];
        for (c, e) in &combo.terms {
            let t = e.to_tree().ok_or_else(|| Error::PatternMismatch(format!("{e} uses conjugation")))?;
            let i = self.index_of(&t).ok_or_else(|| Error::PatternMismatch(format!("{e} is not in pattern {}", self.pattern)))?;
            v[i] += c;
        }
        Ok(v)
    }

    pub fn combo(&self, v: &[Q]) -> Combo {
        Combo::from_trees(
            &v.iter().zip(&self.monomials).filter(|(c, _)| !c.is_zero()).map(|(c, t)| (c.clone(), t.clone())).collect::<Vec<_>>(),
        )
    }

    /// Every basis vector with x↔y applied stays in the space. Only defined
    /// for patterns whose first two degrees agree.
    pub fn swap_closed(&self) -> Result<bool> {
        if self.pattern.nvars() < 2 || self.pattern.degrees[0] != self.pattern.degrees[1] {
            return Err(Error::PatternMismatch("swap needs equal degrees in x and y".into()));
        }
        for b in &self.basis {
            let swapped = self.combo(b).swap(0, 1);
            let v = self.coordinates(&swapped)?;
            if !self.contains(&v) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `{"pattern":[..], "dimension":n, "monomials":[..], "basis":[{monomial: "p/q"}]}`.
    pub fn to_json(&self) -> Value {
        let basis: Vec<Value> = self
            .basis
            .iter()
            .map(|b| {
                let m: serde_json::Map<String, Value> = b
                    .iter()
                    .zip(&self.monomials)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, t)| (t.serialize(), Value::String(c.to_string())))
                    .collect();
                Value::Object(m)
            })
            .collect();
        json!({
            "pattern": self.pattern.degrees,
            "dimension": self.dimension(),
            "monomials": self.monomials.iter().map(|t| t.serialize()).collect::<Vec<_>>(),
            "basis": basis,
        })
    }
}

pub fn identity_space(alg: &TwistedAlgebra, pattern: &DegreePattern) -> Result<IdentitySpace> {
    require_rational(alg)?;
    let monomials = enumerate_monomials(pattern)?;
    let vars = generic_vars(alg, pattern.nvars())?;
    let expansions: Vec<AlgebraElement<MultiPoly>> =
        monomials.par_iter().map(|t| Expr::from_tree(t).eval(alg, &vars)).collect::<Result<_>>()?;
    // rows = (component, exponent) slots that occur in some expansion
    let mut slots: BTreeMap<(usize, Vec<u32>), usize> = BTreeMap::new();
    for e in &expansions {
        for (k, p) in e.coeffs.iter().enumerate() {
            for exp in p.terms().keys() {
                let n = slots.len();
                slots.entry((k, exp.clone())).or_insert(n);
            }
        }
    }
    let cols = monomials.len();
    let mut matrix = vec![vec![Q::zero(); cols]; slots.len()];
    for (j, e) in expansions.iter().enumerate() {
        for (k, p) in e.coeffs.iter().enumerate() {
            for (exp, c) in p.terms() {
                matrix[slots[&(k, exp.clone())]][j] = c.clone();
            }
        }
    }
    let basis = linalg::nullspace(&matrix, cols);
    Ok(IdentitySpace { pattern: pattern.clone(), monomials, basis, matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn product_expansion_matches_closed_form() {
        let t = TwistedAlgebra::tesseranions();
        let xy = BracketTree::node(BracketTree::Leaf(0), BracketTree::Leaf(1));
        let e = expand_monomial(&t, &xy).unwrap();
        let s: Vec<String> = e.coeffs.iter().map(|p| p.to_string()).collect();
        // v0 component of x·y: x0y0 - x1y3 - x2y2 + x3y1
        let vars = e.coeffs[0].vars().clone();
        let v = |n: &str| MultiPoly::var_named(&vars, n).unwrap();
        let expect = &(&(&(&v("x0") * &v("y0")) - &(&v("x1") * &v("y3"))) - &(&v("x2") * &v("y2"))) + &(&v("x3") * &v("y1"));
        assert_eq!(e.coeffs[0], expect, "{s:?}");
    }

    #[test]
    fn small_identity_spaces() {
        let t = TwistedAlgebra::tesseranions();
        assert_eq!(identity_space(&t, &"2,1".parse().unwrap()).unwrap().dimension(), 1);
        assert_eq!(identity_space(&t, &"4".parse().unwrap()).unwrap().dimension(), 2);
        let c = TwistedAlgebra::complex();
        // commutative and associative: every pair of equal-word monomials agrees
        assert_eq!(identity_space(&c, &"3".parse().unwrap()).unwrap().dimension(), 1);
    }

    #[test]
    fn combo_parsing_and_verification() {
        let t = TwistedAlgebra::tesseranions();
        let c = Combo::parse("x.(x.y) - x2.y - y.x2 + (y.x).x").unwrap();
        assert_eq!(c.terms.len(), 4);
        assert!(verify_combo(&t, &c).unwrap());
        let alt = Combo::parse("x.(x.y) - x2.y").unwrap();
        assert!(!verify_combo(&t, &alt).unwrap());
        assert!(verify_combo(&t, &Combo::default()).unwrap());
        let bad = Combo::parse("x.y - x2").unwrap();
        assert!(matches!(verify_combo(&t, &bad), Err(Error::PatternMismatch(_))));
        let two = Combo::parse("x.(x.x2) - 2 x2.x2 + (x2.x).x").unwrap();
        assert_eq!(two.terms[1].0, q(-2));
    }
}
