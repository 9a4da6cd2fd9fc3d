//! r-, q- and κ-functions of sign-valued structure constants.

use serde_json::{json, Value};

use crate::algebra::{AlgebraElement, StructureConstant, TwistedAlgebra};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, GroupElement, GroupName};
use crate::scalar::Q;

/// (−1)^(num/den), refusing non-integer exponents.
pub fn parity_sign(num: i64, den: i64) -> Result<i8> {
    if num % den != 0 {
        return Err(Error::NonIntegerExponent(format!("{num}/{den}")));
    }
    Ok(if (num / den).rem_euclid(2) == 0 { 1 } else { -1 })
}

fn sign_of(x: &Q) -> Result<i8> {
    let one = Q::from_integer(1.into());
    if *x == one {
        Ok(1)
    } else if *x == -one {
        Ok(-1)
    } else {
        Err(Error::Precondition(format!("entry {x} is not a sign")))
    }
}

/// Values on G×G×G, indexed (a·n + b)·n + c.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignFunction3 {
    pub order: usize,
    pub values: Vec<i8>,
}

/// Values on G×G, indexed a·n + b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignFunction2 {
    pub order: usize,
    pub values: Vec<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignFunction1 {
    pub values: Vec<i8>,
}

impl SignFunction3 {
    pub fn get(&self, a: usize, b: usize, c: usize) -> i8 {
        self.values[(a * self.order + b) * self.order + c]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize, usize) -> i8) -> Self {
        let mut values = Vec::with_capacity(order.pow(3));
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    values.push(f(a, b, c));
                }
            }
        }
        SignFunction3 { order, values }
    }
}

impl SignFunction2 {
    pub fn get(&self, a: usize, b: usize) -> i8 {
        self.values[a * self.order + b]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> i8) -> Self {
        SignFunction2 { order, values: (0..order).flat_map(|a| (0..order).map(move |b| (a, b))).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.values.chunks(self.order).map(|r| r.to_vec()).collect()
    }
}

/// r(a,b,c) = C(b,c)·C(ab,c)⁻¹·C(a,bc)·C(a,b)⁻¹.
pub fn r_function(c: &StructureConstant) -> Result<SignFunction3> {
    let g = c.group();
    let n = g.order();
    let s = |a: usize, b: usize| sign_of(c.get(GroupElement(a), GroupElement(b)));
    let mut values = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                let ab = g.mul(GroupElement(a), GroupElement(b)).0;
                let bc = g.mul(GroupElement(b), GroupElement(cc)).0;
                values.push(s(b, cc)? * s(ab, cc)? * s(a, bc)? * s(a, b)?);
            }
        }
    }
    Ok(SignFunction3 { order: n, values })
}

/// v_a·(v_b·v_c) = r(a,b,c)·(v_a·v_b)·v_c on every basis triple.
pub fn r_matches_products(alg: &TwistedAlgebra, r: &SignFunction3) -> bool {
    let n = alg.dim();
    let sample = Q::from_integer(0.into());
    let v = |i: usize| AlgebraElement::basis(n, i, &sample);
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                let left = alg.mul(&v(a), &alg.mul(&v(b), &v(c)));
                let right = alg.mul(&alg.mul(&v(a), &v(b)), &v(c)).scale_q(&Q::from_integer(r.get(a, b, c).into()));
                left == right
            })
        })
    })
}

/// q(a,b) = C(a,b)·C(b,a)⁻¹.
pub fn q_function(c: &StructureConstant) -> Result<SignFunction2> {
    let g = c.group();
    if !g.is_abelian() {
        return Err(Error::NonAbelian);
    }
    let n = g.order();
    let mut values = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            values.push(sign_of(c.get(GroupElement(a), GroupElement(b)))? * sign_of(c.get(GroupElement(b), GroupElement(a)))?);
        }
    }
    Ok(SignFunction2 { order: n, values })
}

/// v_a·v_b = q(a,b)·v_b·v_a on every basis pair.
pub fn q_matches_products(alg: &TwistedAlgebra, q: &SignFunction2) -> bool {
    let n = alg.dim();
    let sample = Q::from_integer(0.into());
    let v = |i: usize| AlgebraElement::basis(n, i, &sample);
    (0..n).all(|a| {
        (0..n).all(|b| alg.mul(&v(a), &v(b)) == alg.mul(&v(b), &v(a)).scale_q(&Q::from_integer(q.get(a, b).into())))
    })
}

fn m(g: &FiniteGroup, a: usize, b: usize) -> usize {
    g.mul(GroupElement(a), GroupElement(b)).0
}

/// (δq)(g,h,t) = 1 on all triples.
pub fn is_2cocycle(g: &FiniteGroup, q: &SignFunction2) -> bool {
    let n = g.order();
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| q.get(b, c) * q.get(m(g, a, b), c) * q.get(a, m(g, b, c)) * q.get(a, b) == 1))
    })
}

pub fn coboundary(g: &FiniteGroup, kappa: &SignFunction1) -> SignFunction2 {
    let k = &kappa.values;
    SignFunction2::from_fn(g.order(), |a, b| k[b] * k[m(g, a, b)] * k[a])
}

/// First κ (in binary counting order, κ(e) = 1) with δκ = q.
pub fn find_coboundary_kappa(g: &FiniteGroup, q: &SignFunction2) -> Result<Option<SignFunction1>> {
    if !g.is_abelian() {
        return Err(Error::NonAbelian);
    }
    let n = g.order();
    for mask in 0..1usize << n {
        let values: Vec<i8> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        let k = SignFunction1 { values };
        if coboundary(g, &k) == *q {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// First (g,h,t) with q(h,t)·q(gh,t)⁻¹·q(g,t) ≠ 1.
pub fn separability_violation(g: &FiniteGroup, q: &SignFunction2) -> Option<(usize, usize, usize)> {
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if q.get(b, c) * q.get(m(g, a, b), c) * q.get(a, c) != 1 {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn is_separable(g: &FiniteGroup, q: &SignFunction2) -> bool {
    separability_violation(g, q).is_none()
}

/// r(a,b,c)·r(c,b,a) = 1.
pub fn satisfies_2a(r: &SignFunction3) -> bool {
    let n = r.order;
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| r.get(a, b, c) * r.get(c, b, a) == 1)))
}

/// q(a,c)·q(b,c)·q(ab,c)⁻¹·r(a,b,c)·r(c,a,b)·r(b,c,a) = 1.
pub fn satisfies_2b(g: &FiniteGroup, q: &SignFunction2, r: &SignFunction3) -> bool {
    let n = g.order();
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                q.get(a, c) * q.get(b, c) * q.get(m(g, a, b), c) * r.get(a, b, c) * r.get(c, a, b) * r.get(b, c, a) == 1
            })
        })
    })
}

/// r(a,b,c)·r(c,a,b)·r(b,c,a) = 1.
pub fn satisfies_2c(r: &SignFunction3) -> bool {
    let n = r.order;
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| r.get(a, b, c) * r.get(c, a, b) * r.get(b, c, a) == 1)))
}

/// Closed-form tables from exponent formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForms {
    pub c: SignFunction2,
    pub q: SignFunction2,
    pub kappa: SignFunction1,
    pub r: SignFunction3,
}

/// ℍ over ℤ₂×ℤ₂, element (n,m) at index n + 2m.
pub fn quaternion_closed_forms() -> Result<ClosedForms> {
    let nm = |i: usize| ((i % 2) as i64, (i / 2) as i64);
    let mut c = Vec::new();
    let mut q = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            let ((n, m), (n2, m2)) = (nm(a), nm(b));
            c.push(parity_sign(-(n * n2 + m * (n2 + m2)), 1)?);
            q.push(parity_sign(n * m2 - n2 * m, 1)?);
        }
    }
    let kappa = (0..4).map(|i| parity_sign(-nm(i).0 * nm(i).1, 1)).collect::<Result<_>>()?;
    Ok(ClosedForms {
        c: SignFunction2 { order: 4, values: c },
        q: SignFunction2 { order: 4, values: q },
        kappa: SignFunction1 { values: kappa },
        r: SignFunction3::from_fn(4, |_, _, _| 1),
    })
}

/// 𝕋 over ℤ₄; the /4 and /2 exponents are checked to be integral.
pub fn tesseranion_closed_forms() -> Result<ClosedForms> {
    let mut c = Vec::new();
    let mut q = Vec::new();
    for n in 0..4i64 {
        for m in 0..4i64 {
            c.push(parity_sign((-2 * n * n + 3 * n - 2 * m * m + m - 3 * n * m + 3) * n * m, 4)?);
            q.push(parity_sign(n * n * m - n * m * m, 2)?);
        }
    }
    let kappa = (0..4i64).map(|n| parity_sign(n * n * n + n * n, 2)).collect::<Result<_>>()?;
    let r = SignFunction3::from_fn(4, |a, b, c| if (a * b * c) % 2 == 0 { 1 } else { -1 });
    Ok(ClosedForms {
        c: SignFunction2 { order: 4, values: c },
        q: SignFunction2 { order: 4, values: q },
        kappa: SignFunction1 { values: kappa },
        r,
    })
}

/// Every property of one algebra's sign functions.
#[derive(Debug, Clone)]
pub struct CohomologyReport {
    pub algebra: String,
    pub r: SignFunction3,
    pub q: SignFunction2,
    pub kappa: Option<SignFunction1>,
    pub associative: bool,
    pub commutative: bool,
    pub r_matches_products: bool,
    pub q_matches_products: bool,
    pub cocycle: bool,
    pub separable: bool,
    pub separability_violation: Option<(usize, usize, usize)>,
    pub eq_2a: bool,
    pub eq_2b: bool,
    pub eq_2c: bool,
}

pub fn analyze(alg: &TwistedAlgebra) -> Result<CohomologyReport> {
    let g = alg.group();
    let r = r_function(alg.constant())?;
    let q = q_function(alg.constant())?;
    let kappa = find_coboundary_kappa(g, &q)?;
    Ok(CohomologyReport {
        algebra: alg.label().to_string(),
        associative: r.is_trivial(),
        commutative: q.is_trivial(),
        r_matches_products: r_matches_products(alg, &r),
        q_matches_products: q_matches_products(alg, &q),
        cocycle: is_2cocycle(g, &q),
        separable: is_separable(g, &q),
        separability_violation: separability_violation(g, &q),
        eq_2a: satisfies_2a(&r),
        eq_2b: satisfies_2b(g, &q, &r),
        eq_2c: satisfies_2c(&r),
        r,
        q,
        kappa,
    })
}

impl CohomologyReport {
    pub fn to_json(&self) -> Value {
        let n = self.r.order;
        let r: Vec<Vec<Vec<i8>>> =
            (0..n).map(|a| (0..n).map(|b| (0..n).map(|c| self.r.get(a, b, c)).collect()).collect()).collect();
        json!({
            "algebra": self.algebra,
            "r": r,
            "q": self.q.rows(),
            "kappa": self.kappa.as_ref().map(|k| k.values.clone()),
            "associative": self.associative,
            "commutative": self.commutative,
            "r_matches_products": self.r_matches_products,
            "q_matches_products": self.q_matches_products,
            "cocycle": self.cocycle,
            "coboundary": self.kappa.is_some(),
            "separable": self.separable,
            "separability_violation": self.separability_violation,
            "eq_2a": self.eq_2a,
            "eq_2b": self.eq_2b,
            "eq_2c": self.eq_2c,
        })
    }
}

/// κ and κ' differ by a character (δκ = δκ').
pub fn equal_up_to_character(g: &FiniteGroup, a: &SignFunction1, b: &SignFunction1) -> bool {
    let n = g.order();
    let chi: Vec<i8> = (0..n).map(|i| a.values[i] * b.values[i]).collect();
    chi[0] == 1 && (0..n).all(|x| (0..n).all(|y| chi[m(g, x, y)] == chi[x] * chi[y]))
}

pub fn closed_forms_for(alg: &TwistedAlgebra) -> Result<ClosedForms> {
    match alg.group().name() {
        GroupName::Z2xZ2 => quaternion_closed_forms(),
        GroupName::Cyclic(4) => tesseranion_closed_forms(),
        other => Err(Error::UnsupportedGroup(format!("no closed forms for {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{TABLE_III, TABLE_V};

    #[test]
    fn parity_rejects_fractions() {
        assert_eq!(parity_sign(6, 2).unwrap(), -1);
        assert_eq!(parity_sign(-4, 4).unwrap(), -1);
        assert!(parity_sign(3, 2).is_err());
    }

    #[test]
    fn tesseranion_tables() {
        let t = TwistedAlgebra::tesseranions();
        let rep = analyze(&t).unwrap();
        assert_eq!(rep.r.get(1, 1, 1), -1);
        assert_eq!(rep.q.get(1, 2), -1);
        assert!(rep.r_matches_products && rep.q_matches_products);
        assert!(rep.cocycle && !rep.separable && rep.kappa.is_some());
        assert!(rep.eq_2a && rep.eq_2b && !rep.eq_2c);
        let cf = tesseranion_closed_forms().unwrap();
        let table: Vec<i8> = TABLE_V.iter().flatten().map(|&x| x as i8).collect();
        assert_eq!(cf.c.values, table);
        assert_eq!(cf.q, rep.q);
        assert_eq!(cf.r, rep.r);
        assert_eq!(coboundary(t.group(), &cf.kappa), rep.q);
        assert!(equal_up_to_character(t.group(), &cf.kappa, rep.kappa.as_ref().unwrap()));
    }

    #[test]
    fn quaternion_tables() {
        let h = TwistedAlgebra::quaternions();
        let rep = analyze(&h).unwrap();
        assert!(rep.associative && !rep.commutative);
        assert!(rep.separable && rep.cocycle && rep.eq_2c);
        let cf = quaternion_closed_forms().unwrap();
        let table: Vec<i8> = TABLE_III.iter().flatten().map(|&x| x as i8).collect();
        assert_eq!(cf.c.values, table);
        assert_eq!(cf.q, rep.q);
        assert_eq!(coboundary(h.group(), &cf.kappa), rep.q);
    }
}
