use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const VAR_NAMES: [char; 3] = ['x', 'y', 'z'];
pub const DEGREE_CAP: usize = 6;
pub const VARIABLE_CAP: usize = 3;

/// One fully parenthesized monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BracketTree {
    Leaf(u8),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn node(l: BracketTree, r: BracketTree) -> Self {
        BracketTree::Node(Box::new(l), Box::new(r))
    }

    pub fn degree(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            BracketTree::Leaf(v) => out.push(*v),
            BracketTree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Per-variable leaf counts, padded to `nvars`.
    pub fn multidegree(&self, nvars: usize) -> Vec<usize> {
        let mut d = vec![0; nvars];
        for v in self.leaves() {
            if (v as usize) < nvars {
                d[v as usize] += 1;
            }
        }
        d
    }

    /// Canonical serialization: leaves are variable letters, every product
    /// is wrapped in parentheses with `.` as the operator.
    pub fn serialize(&self) -> String {
        match self {
            BracketTree::Leaf(v) => VAR_NAMES[*v as usize].to_string(),
            BracketTree::Node(l, r) => format!("({}.{})", l.serialize(), r.serialize()),
        }
    }

    /// Tree with the leaves relabelled by `f`.
    pub fn relabel(&self, f: &impl Fn(u8) -> u8) -> BracketTree {
        match self {
            BracketTree::Leaf(v) => BracketTree::Leaf(f(*v)),
            BracketTree::Node(l, r) => BracketTree::node(l.relabel(f), r.relabel(f)),
        }
    }

    /// Replace leaves left to right with the given labels.
    fn fill(&self, labels: &mut impl Iterator<Item = u8>) -> BracketTree {
        match self {
            BracketTree::Leaf(_) => BracketTree::Leaf(labels.next().expect("enough labels")),
            BracketTree::Node(l, r) => {
                let l2 = l.fill(labels);
                let r2 = r.fill(labels);
                BracketTree::node(l2, r2)
            }
        }
    }

    /// All bracketings of `n` leaves, left factor largest first.
    pub fn shapes(n: usize) -> Vec<BracketTree> {
        if n == 1 {
            return vec![BracketTree::Leaf(0)];
        }
        let mut out = Vec::new();
        for k in (1..n).rev() {
            for l in Self::shapes(k) {
                for r in Self::shapes(n - k) {
                    out.push(BracketTree::node(l.clone(), r));
                }
            }
        }
        out
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.serialize();
        match self {
            BracketTree::Leaf(_) => write!(f, "{s}"),
            BracketTree::Node(..) => write!(f, "{}", &s[1..s.len() - 1]),
        }
    }
}

pub fn catalan(n: usize) -> usize {
    let mut c = 1usize;
    for i in 0..n {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Per-variable degrees, e.g. (x:2, y:1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreePattern {
    pub degrees: Vec<usize>,
}

impl DegreePattern {
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        let p = DegreePattern { degrees };
        if p.total() < 2 {
            return Err(Error::PatternMismatch("total degree must be at least 2".into()));
        }
        if p.degrees.len() > VARIABLE_CAP {
            return Err(Error::VariableCap { count: p.degrees.len(), cap: VARIABLE_CAP });
        }
        if p.degrees.iter().any(|&d| d == 0) {
            return Err(Error::PatternMismatch("every listed variable needs positive degree".into()));
        }
        Ok(p)
    }

    pub fn total(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.degrees.len()
    }

    /// Leaf words in lexicographic order.
    pub fn words(&self) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut counts = self.degrees.clone();
        let mut cur = Vec::new();
        fn rec(counts: &mut Vec<usize>, cur: &mut Vec<u8>, total: usize, out: &mut Vec<Vec<u8>>) {
            if cur.len() == total {
                out.push(cur.clone());
                return;
            }
            for v in 0..counts.len() {
                if counts[v] > 0 {
                    counts[v] -= 1;
                    cur.push(v as u8);
                    rec(counts, cur, total, out);
                    cur.pop();
                    counts[v] += 1;
                }
            }
        }
        let total = self.total();
        rec(&mut counts, &mut cur, total, &mut out);
        out
    }
}

impl FromStr for DegreePattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let degrees = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad pattern {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        DegreePattern::new(degrees)
    }
}

impl fmt::Display for DegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every bracketed monomial of the pattern: words lexicographic, shapes
/// within a word in [`BracketTree::shapes`] order.
pub fn enumerate_monomials(pattern: &DegreePattern) -> Result<Vec<BracketTree>> {
    let d = pattern.total();
    if d > DEGREE_CAP {
        return Err(Error::DegreeCap { degree: d, cap: DEGREE_CAP });
    }
    let shapes = BracketTree::shapes(d);
    let mut out = Vec::new();
    for w in pattern.words() {
        for s in &shapes {
            out.push(s.fill(&mut w.iter().copied()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_catalan() {
        let p = |s: &str| s.parse::<DegreePattern>().unwrap();
        assert_eq!(enumerate_monomials(&p("5")).unwrap().len(), 14);
        assert_eq!(enumerate_monomials(&p("6")).unwrap().len(), 42);
        assert_eq!(enumerate_monomials(&p("2,1")).unwrap().len(), 6);
        assert_eq!(enumerate_monomials(&p("2,2")).unwrap().len(), 30);
        assert_eq!(enumerate_monomials(&p("3,1")).unwrap().len(), 20);
        assert!(enumerate_monomials(&p("4,3")).is_err());
        assert_eq!(catalan(4), 14);
    }

    #[test]
    fn monomials_are_distinct() {
        let m = enumerate_monomials(&"2,2".parse().unwrap()).unwrap();
        let mut s: Vec<String> = m.iter().map(|t| t.serialize()).collect();
        s.sort();
        s.dedup();
        assert_eq!(s.len(), 30);
    }

    #[test]
    fn display_strips_outer_parens() {
        let t = BracketTree::node(BracketTree::Leaf(0), BracketTree::node(BracketTree::Leaf(0), BracketTree::Leaf(1)));
        assert_eq!(t.to_string(), "x.(x.y)");
        assert_eq!(t.serialize(), "(x.(x.y))");
    }
}
