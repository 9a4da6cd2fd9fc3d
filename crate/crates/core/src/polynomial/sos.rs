use std::collections::BTreeSet;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::polynomial::MultiPoly;
use crate::scalar::Q;

/// Σ cᵢ·baseᵢ² with positive rational cᵢ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SosCertificate {
    pub terms: Vec<(Q, MultiPoly)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SosTermReport {
    pub coefficient: String,
    pub base: String,
}

impl SosCertificate {
    pub fn new(terms: Vec<(Q, MultiPoly)>) -> Self {
        SosCertificate { terms }
    }

    pub fn expand(&self) -> Option<MultiPoly> {
        let vars = self.terms.first()?.1.vars().clone();
        Some(self.terms.iter().fold(MultiPoly::zero(&vars), |acc, (c, b)| &acc + &(&*b * &*b).scale(c)))
    }

    pub fn report(&self) -> Vec<SosTermReport> {
        self.terms.iter().map(|(c, b)| SosTermReport { coefficient: c.to_string(), base: b.to_string() }).collect()
    }
}

impl std::fmt::Display for SosCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, b)| if c.is_one() { format!("({b})^2") } else { format!("{c}*({b})^2") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// True iff every coefficient is positive and the squares sum to `p` exactly.
pub fn verify_sos(p: &MultiPoly, cert: &SosCertificate) -> bool {
    if cert.terms.is_empty() {
        return p.is_zero();
    }
    if cert.terms.iter().any(|(c, b)| !c.is_positive() || b.vars() != p.vars()) {
        return false;
    }
    cert.expand().is_some_and(|s| &s == p)
}

fn square_library(p: &MultiPoly, half_degree: u32) -> Vec<MultiPoly> {
    let vars = p.vars();
    let s = p.support_vars();
    let y = |i: usize| MultiPoly::var(vars, i);
    let mut lib = Vec::new();
    match half_degree {
        1 => {
            for &i in &s {
                lib.push(y(i));
            }
            for (a, &i) in s.iter().enumerate() {
                for &j in &s[a + 1..] {
                    lib.push(&y(i) + &y(j));
                    lib.push(&y(i) - &y(j));
                }
            }
        }
        2 => {
            let sq = |i: usize| &y(i) * &y(i);
            for mask in 1u32..(1 << s.len()) {
                let mut b = MultiPoly::zero(vars);
                for (k, &i) in s.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        b = &b + &sq(i);
                    }
                }
                lib.push(b);
            }
            let mut products = Vec::new();
            for (a, &i) in s.iter().enumerate() {
                for &j in &s[a + 1..] {
                    lib.push(&sq(i) - &sq(j));
                    products.push(&y(i) * &y(j));
                }
            }
            lib.extend(products.iter().cloned());
            for (a, u) in products.iter().enumerate() {
                for v in &products[a + 1..] {
                    lib.push(u + v);
                    lib.push(u - v);
                }
            }
            for &i in &s {
                lib.push(sq(i));
            }
        }
        _ => {}
    }
    lib
}

/// Searches for a certificate with at most three squares from a fixed pattern
/// library (sums of squares of variables, binomials). `None` is not a proof of
/// anything.
pub fn find_sos(p: &MultiPoly) -> Option<SosCertificate> {
    if p.is_zero() {
        return Some(SosCertificate::new(vec![]));
    }
    let d = p.homogeneous_degree()?;
    if d % 2 != 0 {
        return None;
    }
    let lib = square_library(p, d / 2);
    let squares: Vec<MultiPoly> = lib.iter().map(|b| b * b).collect();
    let target: BTreeSet<&Vec<u32>> = p.terms().keys().collect();
    let covers = |idx: &[usize]| {
        target.iter().all(|m| idx.iter().any(|&i| squares[i].terms().contains_key(*m)))
    };
    let try_combo = |idx: &[usize]| -> Option<SosCertificate> {
        if !covers(idx) {
            return None;
        }
        let mut monos: BTreeSet<Vec<u32>> = p.terms().keys().cloned().collect();
        for &i in idx {
            monos.extend(squares[i].terms().keys().cloned());
        }
        let a: Vec<Vec<Q>> = monos.iter().map(|m| idx.iter().map(|&i| squares[i].coefficient(m)).collect()).collect();
        let b: Vec<Q> = monos.iter().map(|m| p.coefficient(m)).collect();
        let c = linalg::solve(&a, &b)?;
        if c.iter().any(|x| !x.is_positive()) {
            return None;
        }
        let cert = SosCertificate::new(idx.iter().zip(c).map(|(&i, x)| (x, lib[i].clone())).collect());
        verify_sos(p, &cert).then_some(cert)
    };
    let n = lib.len();
    for i in 0..n {
        if let Some(c) = try_combo(&[i]) {
            return Some(c);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if let Some(c) = try_combo(&[i, j]) {
                return Some(c);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if let Some(c) = try_combo(&[i, j, k]) {
                    return Some(c);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::var_list;
    use crate::scalar::q;

    #[test]
    fn finds_and_rejects() {
        let v = var_list(&["y0", "y1"]);
        let y0 = MultiPoly::var(&v, 0);
        let y1 = MultiPoly::var(&v, 1);
        let p = &(&y0 * &y0) + &(&y1 * &y1).scale(&q(3));
        let c = find_sos(&p).unwrap();
        assert!(verify_sos(&p, &c));
        let indefinite = &(&y0 * &y0) - &(&y1 * &y1);
        assert!(find_sos(&indefinite).is_none());
        let bogus = SosCertificate::new(vec![(q(1), y0.clone()), (q(1), y1.clone())]);
        assert!(!verify_sos(&indefinite, &bogus));
    }
}
