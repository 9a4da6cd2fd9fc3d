use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::polynomial::{MultiPoly, RootInterval, UniPoly};
use crate::scalar::{q, qr, Q};

/// Certificate that a polynomial has a real zero away from the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroWitness {
    /// p vanishes at a nonzero rational point.
    Root { point: Vec<Q> },
    /// p(positive) > 0 and p(nonpositive) ≤ 0; the segment between them
    /// avoids the origin, so continuity gives a nonzero real zero.
    SignChange { positive: Vec<Q>, nonpositive: Vec<Q> },
    /// p restricted to the segment is a univariate polynomial whose Sturm
    /// count of distinct roots strictly inside the segment is `roots` ≥ 1.
    /// Catches zeros where p touches 0 without changing sign.
    SegmentRoot { from: Vec<Q>, to: Vec<Q>, roots: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessReport {
    pub kind: String,
    pub u: Vec<String>,
    pub v: Vec<String>,
    pub value_u: String,
    pub value_v: String,
    pub sturm_roots: Option<usize>,
}

fn is_nonzero(v: &[Q]) -> bool {
    v.iter().any(|x| !x.is_zero())
}

/// True when the closed segment [u, v] does not contain the origin.
pub fn segment_avoids_origin(u: &[Q], v: &[Q]) -> bool {
    if !is_nonzero(u) || !is_nonzero(v) {
        return false;
    }
    if linalg::rank(&[u.to_vec(), v.to_vec()]) == 2 {
        return true;
    }
    // v = λu; the origin is on the segment iff λ ≤ 0
    let (i, ui) = u.iter().enumerate().find(|(_, x)| !x.is_zero()).unwrap();
    (&v[i] / ui).is_positive()
}

/// p(from + t·(to − from)) as a polynomial in t.
pub fn restrict_to_segment(p: &MultiPoly, from: &[Q], to: &[Q]) -> UniPoly {
    let lines: Vec<UniPoly> =
        from.iter().zip(to).map(|(a, b)| UniPoly::new(vec![a.clone(), b - a])).collect();
    let mut out = UniPoly::new(vec![]);
    for (e, c) in p.terms() {
        let mut t = UniPoly::new(vec![c.clone()]);
        for (i, &k) in e.iter().enumerate() {
            for _ in 0..k {
                t = t.mul(&lines[i]);
            }
        }
        out = out.add(&t);
    }
    out
}

/// Restriction to the axis-parallel line through `fixed` in coordinate `free`.
pub fn restrict_to_axis(p: &MultiPoly, fixed: &[Q], free: usize) -> UniPoly {
    let mut coeffs: BTreeMap<u32, Q> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut v = c.clone();
        for (i, &k) in e.iter().enumerate() {
            if i != free {
                for _ in 0..k {
                    v *= &fixed[i];
                }
            }
        }
        if !v.is_zero() {
            *coeffs.entry(e[free]).or_insert_with(Q::zero) += v;
        }
    }
    let deg = coeffs.keys().next_back().copied().unwrap_or(0) as usize;
    let mut dense = vec![Q::zero(); deg + 1];
    for (k, v) in coeffs {
        dense[k as usize] = v;
    }
    UniPoly::new(dense)
}

impl ZeroWitness {
    pub fn verify(&self, p: &MultiPoly) -> bool {
        let ev = |x: &[Q]| p.eval(x).ok();
        match self {
            ZeroWitness::Root { point } => is_nonzero(point) && ev(point).is_some_and(|v| v.is_zero()),
            ZeroWitness::SignChange { positive, nonpositive } => {
                segment_avoids_origin(positive, nonpositive)
                    && ev(positive).is_some_and(|v| v.is_positive())
                    && ev(nonpositive).is_some_and(|v| !v.is_positive())
            }
            ZeroWitness::SegmentRoot { from, to, roots } => {
                if *roots == 0 || !segment_avoids_origin(from, to) {
                    return false;
                }
                let u = restrict_to_segment(p, from, to);
                if u.is_zero() {
                    return false;
                }
                u.count_roots_in(&Q::zero(), &Q::one()).is_ok_and(|n| n == *roots)
            }
        }
    }

    pub fn endpoints(&self) -> (&[Q], &[Q]) {
        match self {
            ZeroWitness::Root { point } => (point, point),
            ZeroWitness::SignChange { positive, nonpositive } => (positive, nonpositive),
            ZeroWitness::SegmentRoot { from, to, .. } => (from, to),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ZeroWitness::Root { .. } => "root",
            ZeroWitness::SignChange { .. } => "sign-change",
            ZeroWitness::SegmentRoot { .. } => "segment-root",
        }
    }

    pub fn report(&self, p: &MultiPoly) -> WitnessReport {
        let (u, v) = self.endpoints();
        let s = |x: &[Q]| x.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        WitnessReport {
            kind: self.kind().to_string(),
            u: s(u),
            v: s(v),
            value_u: p.eval(u).map(|x| x.to_string()).unwrap_or_default(),
            value_v: p.eval(v).map(|x| x.to_string()).unwrap_or_default(),
            sturm_roots: match self {
                ZeroWitness::SegmentRoot { roots, .. } => Some(*roots),
                _ => None,
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Grid coordinates range over n/d with |n/d| ≤ bound.
    pub bound: i64,
    pub denominators: Vec<i64>,
    /// Values assigned to the fixed coordinates of line probes.
    pub line_values: Vec<Q>,
    pub use_lines: bool,
    pub use_grid: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            bound: 3,
            denominators: vec![1, 2],
            line_values: vec![q(1), q(-1), q(2), q(-2), qr(1, 2)],
            use_lines: true,
            use_grid: true,
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn cartesian(values: &[Q], k: usize) -> Vec<Vec<Q>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                values.iter().map(move |x| {
                    let mut w = v.clone();
                    w.push(x.clone());
                    w
                })
            })
            .collect();
    }
    out
}

/// Turns a real root of the restriction along an axis line into a witness.
fn witness_on_line(p: &MultiPoly, base: &[Q], free: usize, uni: &UniPoly, iv: &RootInterval) -> ZeroWitness {
    let at = |t: &Q| {
        let mut v = base.to_vec();
        v[free] = t.clone();
        v
    };
    if iv.is_exact() {
        let point = at(&iv.lo);
        let positive = positive_partner(p, &point);
        return match positive {
            Some(u) => ZeroWitness::SignChange { positive: u, nonpositive: point },
            None => ZeroWitness::Root { point },
        };
    }
    // keep the segment on one side of t = 0 when the base point is zero
    let mut iv = iv.clone();
    if !is_nonzero(base) {
        if iv.lo.is_negative() && iv.hi.is_positive() {
            // t = 0 is not a root of the stripped restriction
            let negative = uni.count_roots_in(&iv.lo, &Q::zero()).is_ok_and(|n| n > 0);
            iv = if negative {
                RootInterval { lo: iv.lo.clone(), hi: Q::zero() }
            } else {
                RootInterval { lo: Q::zero(), hi: iv.hi.clone() }
            };
        }
        while iv.lo.is_zero() || iv.hi.is_zero() {
            iv = uni.refine(&iv, &(iv.width() / q(2)));
            if iv.is_exact() {
                return ZeroWitness::Root { point: at(&iv.lo) };
            }
        }
    }
    let (u, v) = (at(&iv.lo), at(&iv.hi));
    let (pu, pv) = (uni.eval(&iv.lo), uni.eval(&iv.hi));
    if pu.is_positive() && pv.is_negative() {
        ZeroWitness::SignChange { positive: u, nonpositive: v }
    } else if pv.is_positive() && pu.is_negative() {
        ZeroWitness::SignChange { positive: v, nonpositive: u }
    } else {
        ZeroWitness::SegmentRoot { from: u, to: v, roots: 1 }
    }
}

/// A nearby probe with positive value whose segment to `point` avoids 0.
fn positive_partner(p: &MultiPoly, point: &[Q]) -> Option<Vec<Q>> {
    let n = point.len();
    let mut cands = Vec::new();
    for i in 0..n {
        let mut e = vec![Q::zero(); n];
        e[i] = Q::one();
        cands.push(e.clone());
        e[i] = -Q::one();
        cands.push(e);
    }
    cands
        .into_iter()
        .find(|u| p.eval(u).is_ok_and(|v| v.is_positive()) && segment_avoids_origin(u, point))
}

/// Probes lines with exactly `m` nonzero coordinates, in the fixed order used
/// everywhere: subsets lexicographic, free coordinate ascending, values in
/// configuration order.
fn line_probe(p: &MultiPoly, cfg: &SearchConfig, m: usize) -> Option<ZeroWitness> {
    let n = p.vars().len();
    let homogeneous = p.homogeneous_degree().is_some();
    for s in subsets(n, m) {
        for (fi, &free) in s.iter().enumerate() {
            let others: Vec<usize> = s.iter().enumerate().filter(|(k, _)| *k != fi).map(|(_, &i)| i).collect();
            // homogeneity lets the first fixed coordinate be 1
            let assignments: Vec<Vec<Q>> = if homogeneous && !others.is_empty() {
                cartesian(&cfg.line_values, others.len() - 1)
                    .into_iter()
                    .map(|mut v| {
                        v.insert(0, Q::one());
                        v
                    })
                    .collect()
            } else {
                cartesian(&cfg.line_values, others.len())
            };
            for vals in assignments {
                let mut base = vec![Q::zero(); n];
                for (&i, v) in others.iter().zip(&vals) {
                    base[i] = v.clone();
                }
                let mut uni = restrict_to_axis(p, &base, free);
                if uni.is_zero() {
                    // p vanishes on the whole line
                    let mut point = base.clone();
                    point[free] = Q::one();
                    return Some(ZeroWitness::Root { point });
                }
                if !is_nonzero(&base) {
                    uni = uni.strip_zero_root();
                }
                if uni.degree().unwrap_or(0) == 0 {
                    continue;
                }
                let roots = uni.isolate_roots().ok()?;
                let chosen = roots.iter().find(|r| is_nonzero(&base) || !(r.is_exact() && r.lo.is_zero()));
                if let Some(iv) = chosen {
                    let w = witness_on_line(p, &base, free, &uni, iv);
                    debug_assert!(w.verify(p));
                    return Some(w);
                }
            }
        }
    }
    None
}

/// Integer-scaled coefficients when the polynomial is homogeneous and small.
fn integer_form(p: &MultiPoly) -> Option<Vec<(Vec<u32>, i128)>> {
    let l = p.terms().values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.terms()
        .iter()
        .map(|(e, c)| {
            let v = (c.numer() * (&l / c.denom())).to_i64()?;
            Some((e.clone(), v as i128))
        })
        .collect()
}

fn grid_probe(p: &MultiPoly, cfg: &SearchConfig) -> Option<ZeroWitness> {
    let n = p.vars().len();
    let mut values: Vec<Q> = Vec::new();
    for &d in &cfg.denominators {
        for k in -cfg.bound * d..=cfg.bound * d {
            let v = qr(k, d);
            if !values.contains(&v) {
                values.push(v);
            }
        }
    }
    values.sort();
    let total = values.len().pow(n as u32);
    let point = |mut idx: usize| -> Vec<Q> {
        (0..n)
            .map(|_| {
                let v = values[idx % values.len()].clone();
                idx /= values.len();
                v
            })
            .collect()
    };
    // common denominator for fast integer evaluation
    let den = cfg.denominators.iter().fold(1i64, |a, &b| a.lcm(&b));
    let fast = integer_form(p).filter(|_| p.homogeneous_degree().is_some());
    let sign_at = |x: &[Q]| -> i8 {
        if let Some(terms) = &fast {
            let xi: Vec<i128> = x.iter().map(|c| (c * q(den)).to_integer().to_i128().unwrap()).collect();
            let mut acc: i128 = 0;
            for (e, c) in terms {
                let mut t = *c;
                for (xv, &k) in xi.iter().zip(e) {
                    for _ in 0..k {
                        t *= xv;
                    }
                }
                acc += t;
            }
            acc.signum() as i8
        } else {
            let v = p.eval(x).unwrap();
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        }
    };
    let pos = (0..total).into_par_iter().find_first(|&i| sign_at(&point(i)) > 0).map(point)?;
    let neg = (0..total)
        .into_par_iter()
        .find_first(|&i| {
            let x = point(i);
            is_nonzero(&x) && sign_at(&x) <= 0 && segment_avoids_origin(&pos, &x)
        })
        .map(point)?;
    Some(ZeroWitness::SignChange { positive: pos, nonpositive: neg })
}

/// Searches for a zero witness: axis lines through points with two nonzero
/// coordinates, then three, then all, then a dense rational grid. Absence of a
/// witness proves nothing.
pub fn find_sign_change(p: &MultiPoly, cfg: &SearchConfig) -> Option<ZeroWitness> {
    let n = p.vars().len();
    if n == 0 || p.is_zero() {
        return None;
    }
    if cfg.use_lines {
        for m in 1..=n {
            if let Some(w) = line_probe(p, cfg, m) {
                return Some(w);
            }
        }
    }
    if cfg.use_grid {
        return grid_probe(p, cfg);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::var_list;

    #[test]
    fn indefinite_quadratic_has_witness() {
        let v = var_list(&["y0", "y1"]);
        let y0 = MultiPoly::var(&v, 0);
        let y1 = MultiPoly::var(&v, 1);
        let p = &(&y0 * &y0) - &(&y1 * &y1);
        let w = find_sign_change(&p, &SearchConfig::default()).unwrap();
        assert!(w.verify(&p));
    }

    #[test]
    fn touching_zero_is_caught_by_sturm() {
        // (y0^2 - 2 y1^2)^2 never changes sign
        let v = var_list(&["y0", "y1"]);
        let y0 = MultiPoly::var(&v, 0);
        let y1 = MultiPoly::var(&v, 1);
        let b = &(&y0 * &y0) - &(&y1 * &y1).scale(&q(2));
        let p = &b * &b;
        let w = find_sign_change(&p, &SearchConfig::default()).unwrap();
        assert_eq!(w.kind(), "segment-root");
        assert!(w.verify(&p));
    }

    #[test]
    fn definite_form_has_none() {
        let v = var_list(&["y0", "y1"]);
        let y0 = MultiPoly::var(&v, 0);
        let y1 = MultiPoly::var(&v, 1);
        let p = &(&y0 * &y0) + &(&y1 * &y1);
        assert!(find_sign_change(&p, &SearchConfig::default()).is_none());
    }

    #[test]
    fn forged_witnesses_fail() {
        let v = var_list(&["y0", "y1"]);
        let y0 = MultiPoly::var(&v, 0);
        let y1 = MultiPoly::var(&v, 1);
        let p = &(&y0 * &y0) + &(&y1 * &y1);
        let w = ZeroWitness::SegmentRoot { from: vec![q(1), q(0)], to: vec![q(-1), q(0)], roots: 1 };
        assert!(!w.verify(&p));
        let x = &y0 * &y1;
        let through_origin = ZeroWitness::SignChange { positive: vec![q(1), q(1)], nonpositive: vec![q(-1), q(-1)] };
        assert!(!through_origin.verify(&x));
    }
}
