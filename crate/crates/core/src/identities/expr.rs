//! Parser for product expressions with conjugation.
//!
//! Syntax: variables `x y z`, squares `x2` (meaning `(x.x)`), products `a.b`
//! (one `.` per parenthesis level), conjugates `~a` or `conj(a)`.

use std::fmt;

use crate::algebra::{AlgebraElement, TwistedAlgebra};
use crate::error::{Error, Result};
use crate::identities::tree::{BracketTree, VAR_NAMES};
use crate::polynomial::MultiPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(u8),
    Mul(Box<Expr>, Box<Expr>),
    Conj(Box<Expr>),
}

impl Expr {
    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    pub fn parse(s: &str) -> Result<Expr> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { s: &chars, pos: 0 };
        let e = p.expr()?;
        if p.pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in {s:?}")));
        }
        Ok(e)
    }

    pub fn from_tree(t: &BracketTree) -> Expr {
        match t {
            BracketTree::Leaf(v) => Expr::Var(*v),
            BracketTree::Node(l, r) => Expr::mul(Expr::from_tree(l), Expr::from_tree(r)),
        }
    }

    pub fn to_tree(&self) -> Option<BracketTree> {
        match self {
            Expr::Var(v) => Some(BracketTree::Leaf(*v)),
            Expr::Mul(a, b) => Some(BracketTree::node(a.to_tree()?, b.to_tree()?)),
            Expr::Conj(_) => None,
        }
    }

    pub fn multidegree(&self, nvars: usize) -> Vec<usize> {
        let mut d = vec![0; nvars];
        self.count(&mut d);
        d
    }

    fn count(&self, d: &mut Vec<usize>) {
        match self {
            Expr::Var(v) => {
                if (*v as usize) >= d.len() {
                    d.resize(*v as usize + 1, 0);
                }
                d[*v as usize] += 1
            }
            Expr::Mul(a, b) => {
                a.count(d);
                b.count(d);
            }
            Expr::Conj(a) => a.count(d),
        }
    }

    pub fn max_var(&self) -> u8 {
        match self {
            Expr::Var(v) => *v,
            Expr::Mul(a, b) => a.max_var().max(b.max_var()),
            Expr::Conj(a) => a.max_var(),
        }
    }

    /// Replace variable `v` by an expression.
    pub fn substitute(&self, v: u8, by: &Expr) -> Expr {
        match self {
            Expr::Var(w) if *w == v => by.clone(),
            Expr::Var(_) => self.clone(),
            Expr::Mul(a, b) => Expr::mul(a.substitute(v, by), b.substitute(v, by)),
            Expr::Conj(a) => Expr::Conj(Box::new(a.substitute(v, by))),
        }
    }

    pub fn eval(&self, alg: &TwistedAlgebra, vars: &[AlgebraElement<MultiPoly>]) -> Result<AlgebraElement<MultiPoly>> {
        match self {
            Expr::Var(v) => vars
                .get(*v as usize)
                .cloned()
                .ok_or(Error::VariableCap { count: *v as usize + 1, cap: vars.len() }),
            Expr::Mul(a, b) => Ok(alg.mul(&a.eval(alg, vars)?, &b.eval(alg, vars)?)),
            Expr::Conj(a) => alg.conjugate(&a.eval(alg, vars)?),
        }
    }

    /// Same evaluation over concrete rational elements.
    pub fn eval_q(
        &self,
        alg: &TwistedAlgebra,
        vars: &[AlgebraElement<crate::scalar::Q>],
    ) -> Result<AlgebraElement<crate::scalar::Q>> {
        match self {
            Expr::Var(v) => vars
                .get(*v as usize)
                .cloned()
                .ok_or(Error::VariableCap { count: *v as usize + 1, cap: vars.len() }),
            Expr::Mul(a, b) => Ok(alg.mul(&a.eval_q(alg, vars)?, &b.eval_q(alg, vars)?)),
            Expr::Conj(a) => alg.conjugate(&a.eval_q(alg, vars)?),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(v) => write!(f, "{}", VAR_NAMES[*v as usize]),
            Expr::Mul(a, b) => {
                let wrap = |e: &Expr| match e {
                    Expr::Mul(..) => format!("({e})"),
                    _ => e.to_string(),
                };
                write!(f, "{}.{}", wrap(a), wrap(b))
            }
            Expr::Conj(a) => write!(f, "conj({a})"),
        }
    }
}

struct Parser<'a> {
    s: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        let text: String = self.s.iter().collect();
        Error::Parse(format!("{what} at {} in {text:?}", self.pos))
    }

    fn expr(&mut self) -> Result<Expr> {
        let a = self.factor()?;
        if self.peek() == Some('.') {
            self.pos += 1;
            let b = self.factor()?;
            if self.peek() == Some('.') {
                return Err(self.err("ambiguous chained product"));
            }
            return Ok(Expr::mul(a, b));
        }
        Ok(a)
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some('~') => {
                self.pos += 1;
                Ok(Expr::Conj(Box::new(self.factor()?)))
            }
            Some('c') if self.s[self.pos..].starts_with(&['c', 'o', 'n', 'j', '(']) => {
                self.pos += 4;
                let e = self.factor()?;
                Ok(Expr::Conj(Box::new(e)))
            }
            Some(c) if VAR_NAMES.contains(&c) => {
                self.pos += 1;
                let v = Expr::Var(VAR_NAMES.iter().position(|&x| x == c).unwrap() as u8);
                if self.peek() == Some('2') {
                    self.pos += 1;
                    return Ok(Expr::mul(v.clone(), v));
                }
                Ok(v)
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let e = Expr::parse("x.(x2.y)").unwrap();
        assert_eq!(e.to_tree().unwrap().serialize(), "(x.((x.x).y))");
        let c = Expr::parse("~x.(x.y)").unwrap();
        assert!(c.to_tree().is_none());
        assert_eq!(Expr::parse("conj(x.y).x").unwrap().to_string(), "conj(x.y).x");
        assert!(Expr::parse("x.y.z").is_err());
        assert!(Expr::parse("(x.y").is_err());
    }
}
