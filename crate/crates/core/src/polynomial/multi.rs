use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{ScalarRing, Q, Scalar};

/// Multivariate polynomial with rational coefficients over a named variable list.
///
/// Exponent vectors always have one slot per variable; zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Vec<u32>, Q>,
}

pub fn var_list<S: AsRef<str>>(names: &[S]) -> Arc<Vec<String>> {
    Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect())
}

impl MultiPoly {
    pub fn zero(vars: &Arc<Vec<String>>) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<Vec<String>>, c: Q) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn var(vars: &Arc<Vec<String>>, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(e, Q::one());
        p
    }

    pub fn var_named(vars: &Arc<Vec<String>>, name: &str) -> Result<Self> {
        let i = vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(vars, i))
    }

    pub fn from_terms(vars: &Arc<Vec<String>>, terms: impl IntoIterator<Item = (Vec<u32>, Q)>) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::DimensionMismatch { expected: vars.len(), got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Q> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exp: &[u32]) -> Q {
        self.terms.get(exp).cloned().unwrap_or_else(Q::zero)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variable lists"
        );
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> Q {
        self.coefficient(&vec![0; self.vars.len()])
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// `Some(d)` if every term has total degree `d`; the zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = it.next()?;
        if it.all(|x| x == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    /// Indices of variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.terms.keys().any(|e| e[i] > 0)).collect()
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(&self.vars, Q::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Q]) -> Result<Q> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch { expected: self.vars.len(), got: point.len() });
        }
        let mut total = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitute rationals for some variables; the variable list is kept.
    pub fn specialize(&self, bindings: &[(&str, Q)]) -> Result<Self> {
        let mut idx = Vec::new();
        for (name, v) in bindings {
            let i = self.vars.iter().position(|x| x == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            idx.push((i, v.clone()));
        }
        Ok(self.specialize_indices(&idx))
    }

    pub fn specialize_indices(&self, bindings: &[(usize, Q)]) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let mut c2 = c.clone();
            for (i, v) in bindings {
                for _ in 0..e[*i] {
                    c2 *= v;
                }
                e2[*i] = 0;
            }
            out.add_term(e2, c2);
        }
        out
    }

    /// Substitute polynomials (over the same variable list) for variables.
    pub fn substitute(&self, subs: &[(usize, MultiPoly)]) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut base = e.clone();
            let mut t = Self::constant(&self.vars, Q::one());
            for (i, p) in subs {
                if e[*i] > 0 {
                    t = &t * &p.pow(e[*i]);
                    base[*i] = 0;
                }
            }
            let mono = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::from([(base, c.clone())]) };
            out = &out + &(&mono * &t);
        }
        out
    }

    /// Re-expresses the polynomial over another variable list, mapping
    /// variable names; unknown names are an error.
    pub fn rename_into(&self, vars: &Arc<Vec<String>>) -> Result<Self> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|n| vars.iter().position(|m| m == n).ok_or_else(|| Error::UnknownVariable(n.clone())))
            .collect::<Result<_>>()?;
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] += k;
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        self.check_vars(d);
        if d.is_zero() {
            return None;
        }
        let (lead_e, lead_c) = d.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quo = Self::zero(&self.vars);
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let qc = c / &lead_c;
            let mono = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::from([(qe, qc)]) };
            rem = &rem - &(&mono * d);
            quo = &quo + &mono;
        }
        Some(quo)
    }

    /// Coefficient list in variable `i` when all other variables are absent.
    pub fn univariate_coeffs(&self, i: usize) -> Result<Vec<Q>> {
        let sup = self.support_vars();
        if sup.iter().any(|&j| j != i) {
            return Err(Error::NotUnivariate);
        }
        let deg = self.degree_in(i) as usize;
        let mut c = vec![Q::zero(); deg + 1];
        for (e, x) in &self.terms {
            c[e[i] as usize] += x;
        }
        Ok(c)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars.as_ref().clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson { exp: e.clone(), num: c.numer().to_string(), den: c.denom().to_string() })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let vars = Arc::new(j.vars.clone());
        let mut terms = Vec::new();
        for t in &j.terms {
            let n = t.num.parse().map_err(|_| Error::Parse(format!("bad numerator {}", t.num)))?;
            let d: num_bigint::BigInt = t.den.parse().map_err(|_| Error::Parse(format!("bad denominator {}", t.den)))?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            terms.push((t.exp.clone(), Q::new(n, d)));
        }
        Self::from_terms(&vars, terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        self.check_vars(o);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        self.check_vars(o);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        self.check_vars(o);
        let mut out = MultiPoly::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Scalar for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        MultiPoly::constant(&self.vars, Q::one())
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn embed(&self, c: &Q) -> Option<Self> {
        Some(MultiPoly::constant(&self.vars, c.clone()))
    }
    fn ring(&self) -> ScalarRing {
        ScalarRing::Rational
    }
    fn scaled(&self, c: &Q) -> Self {
        self.scale(c)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], k) })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", a, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn xy() -> (MultiPoly, MultiPoly) {
        let v = var_list(&["x", "y"]);
        (MultiPoly::var(&v, 0), MultiPoly::var(&v, 1))
    }

    #[test]
    fn arithmetic_and_display() {
        let (x, y) = xy();
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert_eq!(p.eval(&[q(3), q(1)]).unwrap(), q(8));
    }

    #[test]
    fn exact_division_roundtrip() {
        let (x, y) = xy();
        let a = &(&x * &x) + &y;
        let b = &x - &y.scale(&q(3));
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(a.exact_div(&b).is_none());
    }

    #[test]
    fn specialize_rejects_unknown() {
        let (x, _) = xy();
        assert!(x.specialize(&[("z", q(1))]).is_err());
        assert_eq!(x.specialize(&[]).unwrap(), x);
    }

    #[test]
    fn json_roundtrip() {
        let (x, y) = xy();
        let p = &(&x * &y).scale(&crate::scalar::qr(-3, 7)) + &MultiPoly::constant(x.vars(), q(2));
        let j = serde_json::to_string(&p.to_json()).unwrap();
        let back = MultiPoly::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, p);
    }
}
