
use crate::error::{Error, Result};
use crate::polynomial::MultiPoly;
use crate::scalar::{Scalar, Q};

/// Rings where exact division (when the quotient exists) is available.
pub trait ExactDiv: Scalar {
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

impl ExactDiv for Q {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.vanishes() {
            None
        } else {
            Some(self / d)
        }
    }
}

impl ExactDiv for MultiPoly {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.exact_div(d)
    }
}

fn check_square<S>(m: &[Vec<S>]) -> Result<usize> {
    let n = m.len();
    if n == 0 {
        return Err(Error::NotSquare { rows: 0, cols: 0 });
    }
    for row in m {
        if row.len() != n {
            return Err(Error::NotSquare { rows: n, cols: row.len() });
        }
    }
    Ok(n)
}

/// Fraction-free Bareiss elimination with row pivoting.
pub fn det_bareiss<S: ExactDiv>(m: &[Vec<S>]) -> Result<S> {
    let n = check_square(m)?;
    let mut a: Vec<Vec<S>> = m.to_vec();
    let one = a[0][0].one_like();
    let mut prev = one.clone();
    let mut negate = false;
    for k in 0..n.saturating_sub(1) {
        if Scalar::vanishes(&a[k][k]) {
            match (k + 1..n).find(|&r| !Scalar::vanishes(&a[r][k])) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(one.zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = one.zero_like();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.negated() } else { d })
}

/// Laplace expansion along the first row; independent of Bareiss.
pub fn det_cofactor<S: Scalar>(m: &[Vec<S>]) -> Result<S> {
    let n = check_square(m)?;
    Ok(cofactor_rec(m, n))
}

fn cofactor_rec<S: Scalar>(m: &[Vec<S>], n: usize) -> S {
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = m[0][0].zero_like();
    for j in 0..n {
        if Scalar::vanishes(&m[0][j]) {
            continue;
        }
        let minor: Vec<Vec<S>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
        let t = m[0][j].times(&cofactor_rec(&minor, n - 1));
        acc = if j % 2 == 0 { acc.plus(&t) } else { acc.minus(&t) };
    }
    acc
}

/// Symbolic determinant of a polynomial matrix (at most 8×8).
pub fn symbolic_det(m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = check_square(m)?;
    if n > 8 {
        return Err(Error::DegreeCap { degree: n, cap: 8 });
    }
    det_bareiss(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::var_list;
    use crate::scalar::q;

    #[test]
    fn bareiss_matches_cofactor_numeric() {
        let m: Vec<Vec<Q>> = vec![
            vec![q(0), q(2), q(1)],
            vec![q(3), q(-1), q(4)],
            vec![q(5), q(6), q(0)],
        ];
        assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m).unwrap());
        assert_eq!(det_bareiss(&m).unwrap(), q(63));
    }

    #[test]
    fn non_square_rejected() {
        let m: Vec<Vec<Q>> = vec![vec![q(1), q(2)]];
        assert!(det_bareiss(&m).is_err());
    }

    #[test]
    fn symbolic_two_by_two() {
        let v = var_list(&["a", "y0", "y1"]);
        let a = MultiPoly::var(&v, 0);
        let y0 = MultiPoly::var(&v, 1);
        let y1 = MultiPoly::var(&v, 2);
        let m = vec![vec![y0.clone(), &a * &y1], vec![y1.clone(), y0.clone()]];
        let d = symbolic_det(&m).unwrap();
        let expect = &(&y0 * &y0) - &(&(&a * &y1) * &y1);
        assert_eq!(d, expect);
    }
}
