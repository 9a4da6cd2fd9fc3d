use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{q, Q};
#[cfg(test)]
use crate::scalar::qr;

/// Dense univariate polynomial, coefficients from the constant term up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Q>,
}

/// Open interval (lo, hi) holding exactly one distinct real root, or the
/// root itself when `lo == hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Q,
    pub hi: Q,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }
}

fn sign(x: &Q) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| q(x)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Q::zero();
        UniPoly::new(
            (0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z)).collect(),
        )
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::new(vec![]);
        }
        let mut c = vec![Q::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }

    /// Divides out the largest power of the variable.
    pub fn strip_zero_root(&self) -> UniPoly {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        UniPoly::new(self.coeffs[k..].to_vec())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect())
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        let mut quo = vec![Q::zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let f = r.last().unwrap() / &lead;
            for (i, c) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &f * c;
            }
            quo[shift] = f;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (UniPoly::new(quo), UniPoly::new(r))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.div_rem(d).1
    }

    fn monic(&self) -> UniPoly {
        let l = self.leading();
        UniPoly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Same distinct roots, all simple.
    pub fn squarefree(&self) -> UniPoly {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            self.clone()
        } else {
            self.div_rem(&g).0
        }
    }

    pub fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone()];
        let d = self.derivative();
        if d.is_zero() {
            return seq;
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(UniPoly::new(r.coeffs.iter().map(|c| -c).collect()));
        }
        seq
    }

    fn variations(seq: &[UniPoly], x: &Q) -> usize {
        let signs: Vec<i8> = seq.iter().map(|p| sign(&p.eval(x))).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    fn variations_at_infinity(seq: &[UniPoly], positive: bool) -> usize {
        let signs: Vec<i8> = seq
            .iter()
            .map(|p| {
                let s = sign(&p.leading());
                let odd = p.degree().unwrap_or(0) % 2 == 1;
                if !positive && odd {
                    -s
                } else {
                    s
                }
            })
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct real roots in the open interval (a, b); the endpoints must
    /// not be roots.
    pub fn count_roots_in(&self, a: &Q, b: &Q) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.eval(a).is_zero() || self.eval(b).is_zero() {
            return Err(Error::Precondition("interval endpoint is a root".into()));
        }
        if a >= b {
            return Ok(0);
        }
        let seq = self.squarefree().sturm_sequence();
        Ok(Self::variations(&seq, a) - Self::variations(&seq, b))
    }

    pub fn count_real_roots(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let seq = self.sturm_sequence();
        Ok(Self::variations_at_infinity(&seq, false) - Self::variations_at_infinity(&seq, true))
    }

    pub fn real_root_exists(&self) -> Result<bool> {
        Ok(self.count_real_roots()? > 0)
    }

    /// Cauchy bound: all real roots lie in (-B, B).
    pub fn root_bound(&self) -> Q {
        let lead = self.leading().abs();
        let m = self.coeffs[..self.coeffs.len().saturating_sub(1)]
            .iter()
            .map(|c| c.abs() / &lead)
            .fold(Q::zero(), |a, b| if b > a { b } else { a });
        Q::one() + m
    }

    /// Isolating intervals for every distinct real root, in increasing order.
    /// Rational roots met at bisection points are returned exactly.
    pub fn isolate_roots(&self) -> Result<Vec<RootInterval>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sf = self.squarefree();
        let mut out = Vec::new();
        if sf.degree().unwrap_or(0) > 0 {
            let b = sf.root_bound();
            let seq = sf.sturm_sequence();
            sf.isolate_rec(&seq, -b.clone(), b, &mut out);
        }
        out.sort_by(|x, y| x.lo.cmp(&y.lo));
        Ok(out)
    }

    /// Endpoints are never roots of `self`.
    fn isolate_rec(&self, seq: &[UniPoly], a: Q, b: Q, out: &mut Vec<RootInterval>) {
        let n = Self::variations(seq, &a) - Self::variations(seq, &b);
        if n == 0 {
            return;
        }
        if n == 1 {
            out.push(RootInterval { lo: a, hi: b });
            return;
        }
        let mid = (&a + &b) / q(2);
        if !self.eval(&mid).is_zero() {
            self.isolate_rec(seq, a, mid.clone(), out);
            self.isolate_rec(seq, mid, b, out);
            return;
        }
        // shrink a window around the rational root until it holds no other root
        let mut d = (&b - &a) / q(4);
        let (l, r) = loop {
            let (l, r) = (&mid - &d, &mid + &d);
            if !self.eval(&l).is_zero()
                && !self.eval(&r).is_zero()
                && Self::variations(seq, &l) - Self::variations(seq, &r) == 1
            {
                break (l, r);
            }
            d /= q(2);
        };
        out.push(RootInterval { lo: mid.clone(), hi: mid });
        self.isolate_rec(seq, a, l, out);
        self.isolate_rec(seq, r, b, out);
    }

    /// Shrinks an isolating interval until its width is at most `width`.
    pub fn refine(&self, iv: &RootInterval, width: &Q) -> RootInterval {
        let mut iv = iv.clone();
        if iv.is_exact() {
            return iv;
        }
        let sf = self.squarefree();
        let seq = sf.sturm_sequence();
        while iv.width() > *width {
            let mid = (&iv.lo + &iv.hi) / q(2);
            if self.eval(&mid).is_zero() {
                return RootInterval { lo: mid.clone(), hi: mid };
            }
            let left = Self::variations(&seq, &iv.lo) - Self::variations(&seq, &mid);
            if left > 0 {
                iv.hi = mid;
            } else {
                iv.lo = mid;
            }
        }
        iv
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_existence() {
        assert!(UniPoly::from_ints(&[-2, 0, 0, 1]).real_root_exists().unwrap());
        assert!(!UniPoly::from_ints(&[1, 0, 1]).real_root_exists().unwrap());
        assert!(UniPoly::from_ints(&[-4, 0, 0, 0, 1]).real_root_exists().unwrap());
        assert!(UniPoly::new(vec![]).real_root_exists().is_err());
    }

    #[test]
    fn double_roots_are_counted_once() {
        // (s^2 - 2)^2
        let p = UniPoly::from_ints(&[4, 0, -4, 0, 1]);
        assert_eq!(p.count_real_roots().unwrap(), 2);
        assert_eq!(p.count_roots_in(&q(1), &q(2)).unwrap(), 1);
        assert!(p.count_roots_in(&q(0), &q(1)).unwrap() == 0);
        let roots = p.isolate_roots().unwrap();
        assert_eq!(roots.len(), 2);
        let r = p.refine(&roots[1], &qr(1, 1000));
        assert!(r.lo < qr(1415, 1000) && r.hi > qr(1414, 1000));
    }

    #[test]
    fn exact_rational_roots_are_reported() {
        // (s-1)^2 (s+2)
        let p = UniPoly::from_ints(&[2, -3, 0, 1]);
        let roots = p.isolate_roots().unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            let hits = [q(1), q(-2)]
                .iter()
                .filter(|x| if r.is_exact() { r.lo == **x } else { r.lo < **x && **x < r.hi })
                .count();
            assert_eq!(hits, 1);
        }
    }
}
