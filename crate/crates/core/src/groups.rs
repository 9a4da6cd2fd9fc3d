//! Finite grading groups stored as Cayley tables, with the standard-basis
//! word construction used to label algebra bases.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement(pub usize);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement(0);

    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupName {
    Trivial,
    /// ℤ_n with additive labels 0..n.
    Cyclic(usize),
    Z2xZ2,
    Z2xZ2xZ2,
    Z2xZ4,
    D4,
    Q8,
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Trivial => write!(f, "Z1"),
            GroupName::Cyclic(n) => write!(f, "Z{n}"),
            GroupName::Z2xZ2 => write!(f, "Z2xZ2"),
            GroupName::Z2xZ2xZ2 => write!(f, "Z2xZ2xZ2"),
            GroupName::Z2xZ4 => write!(f, "Z2xZ4"),
            GroupName::D4 => write!(f, "D4"),
            GroupName::Q8 => write!(f, "Q8"),
        }
    }
}

impl FromStr for GroupName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s.trim().to_ascii_uppercase().chars().filter(|c| !c.is_whitespace()).collect();
        let name = match norm.as_str() {
            "Z1" | "1" | "TRIVIAL" => GroupName::Trivial,
            "Z2XZ2" | "KLEIN" | "V4" => GroupName::Z2xZ2,
            "Z2XZ2XZ2" => GroupName::Z2xZ2xZ2,
            "Z2XZ4" | "Z4XZ2" => GroupName::Z2xZ4,
            "D4" => GroupName::D4,
            "Q8" => GroupName::Q8,
            other => match other.strip_prefix('Z').and_then(|n| n.parse::<usize>().ok()) {
                Some(1) => GroupName::Trivial,
                Some(n) if n >= 2 => GroupName::Cyclic(n),
                _ => return Err(Error::UnsupportedGroup(s.to_string())),
            },
        };
        Ok(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisConvention {
    LeftStandard,
    RightStandard,
}

impl BasisConvention {
    pub fn mirrored(self) -> Self {
        match self {
            BasisConvention::LeftStandard => BasisConvention::RightStandard,
            BasisConvention::RightStandard => BasisConvention::LeftStandard,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BasisConvention::LeftStandard => "left-standard",
            BasisConvention::RightStandard => "right-standard",
        }
    }
}

impl FromStr for BasisConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "left" | "left-standard" | "l" => Ok(BasisConvention::LeftStandard),
            "right" | "right-standard" | "r" => Ok(BasisConvention::RightStandard),
            _ => Err(Error::Parse(format!("unknown basis convention {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: GroupName,
    cayley: Vec<Vec<usize>>,
    generators: Vec<GroupElement>,
    /// Exponent ranges for basis words; normally the generator orders.
    word_ranges: Vec<usize>,
    labels: Vec<String>,
}

/// Element of the standard basis: exponents for the minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisWord {
    pub exponents: Vec<usize>,
    pub convention: BasisConvention,
}

impl BasisWord {
    /// Factors in written order. Left-standard words read g_m^{s_m}…g_1^{s_1},
    /// right-standard words read g_1^{s_1}…g_m^{s_m}.
    pub fn factors(&self, group: &FiniteGroup) -> Vec<GroupElement> {
        let mut out = Vec::new();
        let gens = group.generators();
        match self.convention {
            BasisConvention::LeftStandard => {
                for (g, &s) in gens.iter().zip(&self.exponents).rev() {
                    out.extend(std::iter::repeat(*g).take(s));
                }
            }
            BasisConvention::RightStandard => {
                for (g, &s) in gens.iter().zip(&self.exponents) {
                    out.extend(std::iter::repeat(*g).take(s));
                }
            }
        }
        out
    }

    pub fn evaluate(&self, group: &FiniteGroup) -> GroupElement {
        self.factors(group)
            .into_iter()
            .fold(GroupElement::IDENTITY, |acc, g| group.mul(acc, g))
    }

    /// Word comparison: `self < other` iff the last nonzero entry of
    /// `self - other` is negative.
    pub fn cmp_words(&self, other: &BasisWord) -> std::cmp::Ordering {
        for (a, b) in self.exponents.iter().zip(&other.exponents).rev() {
            if a != b {
                return a.cmp(b);
            }
        }
        std::cmp::Ordering::Equal
    }

    pub fn render(&self) -> String {
        if self.exponents.iter().all(|&s| s == 0) {
            return "e".to_string();
        }
        let mut parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 0)
            .map(|(i, &s)| if s == 1 { format!("g{}", i + 1) } else { format!("g{}^{}", i + 1, s) })
            .collect();
        if self.convention == BasisConvention::LeftStandard {
            parts.reverse();
        }
        parts.join("·")
    }
}

impl FiniteGroup {
    pub fn from_name(name: GroupName) -> Self {
        match name {
            GroupName::Trivial => Self::cyclic_like(GroupName::Trivial, 1),
            GroupName::Cyclic(n) => Self::cyclic_like(name, n),
            GroupName::Z2xZ2 => Self::abelian_product(name, &[2, 2]),
            GroupName::Z2xZ2xZ2 => Self::abelian_product(name, &[2, 2, 2]),
            GroupName::Z2xZ4 => Self::abelian_product(name, &[4, 2]),
            GroupName::D4 => Self::dihedral4(),
            GroupName::Q8 => Self::quaternion8(),
        }
    }

    pub fn by_name(s: &str) -> Result<Self> {
        Ok(Self::from_name(s.parse()?))
    }

    pub fn cyclic(n: usize) -> Self {
        if n == 1 {
            Self::from_name(GroupName::Trivial)
        } else {
            Self::from_name(GroupName::Cyclic(n))
        }
    }

    pub fn z2() -> Self {
        Self::cyclic(2)
    }

    pub fn z4() -> Self {
        Self::cyclic(4)
    }

    pub fn klein() -> Self {
        Self::from_name(GroupName::Z2xZ2)
    }

    fn cyclic_like(name: GroupName, n: usize) -> Self {
        let cayley = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let (generators, word_ranges) = if n == 1 { (vec![], vec![]) } else { (vec![GroupElement(1)], vec![n]) };
        FiniteGroup { name, cayley, generators, word_ranges, labels: (0..n).map(|i| i.to_string()).collect() }
    }

    /// Mixed-radix product of cyclic factors; index = Σ a_i·Π_{j<i} n_j.
    fn abelian_product(name: GroupName, radices: &[usize]) -> Self {
        let order: usize = radices.iter().product();
        let digits = |mut x: usize| {
            radices
                .iter()
                .map(|&r| {
                    let d = x % r;
                    x /= r;
                    d
                })
                .collect::<Vec<_>>()
        };
        let index = |ds: &[usize]| {
            let mut idx = 0;
            let mut w = 1;
            for (d, r) in ds.iter().zip(radices) {
                idx += d * w;
                w *= r;
            }
            idx
        };
        let cayley = (0..order)
            .map(|a| {
                let da = digits(a);
                (0..order)
                    .map(|b| {
                        let db = digits(b);
                        let s: Vec<usize> = da.iter().zip(&db).zip(radices).map(|((x, y), r)| (x + y) % r).collect();
                        index(&s)
                    })
                    .collect()
            })
            .collect();
        let mut generators = Vec::new();
        let mut w = 1;
        for r in radices {
            generators.push(GroupElement(w));
            w *= r;
        }
        let labels = (0..order)
            .map(|a| {
                let ds = digits(a);
                format!("({})", ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))
            })
            .collect();
        FiniteGroup { name, cayley, generators, word_ranges: radices.to_vec(), labels }
    }

    /// Builds a Cayley table from concrete elements listed in basis-word order.
    fn from_elements<T: PartialEq + Clone>(
        name: GroupName,
        elements: Vec<T>,
        mul: impl Fn(&T, &T) -> T,
        generators: Vec<usize>,
        word_ranges: Vec<usize>,
        labels: Vec<String>,
    ) -> Self {
        let find = |x: &T| elements.iter().position(|e| e == x).expect("closed under product");
        let cayley = elements.iter().map(|a| elements.iter().map(|b| find(&mul(a, b))).collect()).collect();
        FiniteGroup { name, cayley, generators: generators.into_iter().map(GroupElement).collect(), word_ranges, labels }
    }

    fn dihedral4() -> Self {
        type M = [[i64; 2]; 2];
        let mul = |a: &M, b: &M| -> M {
            let mut c = [[0; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
                }
            }
            c
        };
        let r: M = [[0, -1], [1, 0]];
        let s: M = [[1, 0], [0, -1]];
        let id: M = [[1, 0], [0, 1]];
        // index i + 4j  <->  s^j r^i (left-standard word order g2^j g1^i)
        let mut elements = Vec::new();
        let mut labels = Vec::new();
        for j in 0..2 {
            for i in 0..4 {
                let mut x = id;
                for _ in 0..j {
                    x = mul(&x, &s);
                }
                for _ in 0..i {
                    x = mul(&x, &r);
                }
                elements.push(x);
                labels.push(format!("s^{j}r^{i}"));
            }
        }
        Self::from_elements(GroupName::D4, elements, mul, vec![1, 4], vec![4, 2], labels)
    }

    fn quaternion8() -> Self {
        type H = [i64; 4];
        let mul = |a: &H, b: &H| -> H {
            [
                a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
            ]
        };
        let i: H = [0, 1, 0, 0];
        let j: H = [0, 0, 1, 0];
        let one: H = [1, 0, 0, 0];
        // Two generators of order 4; words j^b i^a with a < 4, b < 2.
        let mut elements = Vec::new();
        let mut labels = Vec::new();
        for b in 0..2 {
            for a in 0..4 {
                let mut x = one;
                for _ in 0..b {
                    x = mul(&x, &j);
                }
                for _ in 0..a {
                    x = mul(&x, &i);
                }
                elements.push(x);
                labels.push(format!("j^{b}i^{a}"));
            }
        }
        Self::from_elements(GroupName::Q8, elements, mul, vec![1, 4], vec![4, 2], labels)
    }

    pub fn name(&self) -> GroupName {
        self.name
    }

    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        (0..self.order()).map(GroupElement)
    }

    pub fn element(&self, index: usize) -> Result<GroupElement> {
        if index < self.order() {
            Ok(GroupElement(index))
        } else {
            Err(Error::IndexOutOfRange { index, order: self.order() })
        }
    }

    pub fn multiply(&self, g: GroupElement, h: GroupElement) -> Result<GroupElement> {
        self.element(g.0)?;
        self.element(h.0)?;
        Ok(self.mul(g, h))
    }

    /// Unchecked Cayley lookup.
    #[inline]
    pub fn mul(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        GroupElement(self.cayley[g.0][h.0])
    }

    pub fn inverse(&self, g: GroupElement) -> GroupElement {
        let i = self.cayley[g.0].iter().position(|&x| x == 0).expect("group row contains identity");
        GroupElement(i)
    }

    pub fn element_order(&self, g: GroupElement) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != GroupElement::IDENTITY {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.cayley[a][b] == self.cayley[b][a]))
    }

    /// Full group-axiom check: identity at 0, Latin square, associativity.
    pub fn verify_axioms(&self) -> bool {
        let n = self.order();
        let identity = (0..n).all(|a| self.cayley[0][a] == a && self.cayley[a][0] == a);
        let latin = (0..n).all(|a| {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[self.cayley[a][b]] = true;
                col[self.cayley[b][a]] = true;
            }
            row.iter().all(|&x| x) && col.iter().all(|&x| x)
        });
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.cayley[self.cayley[a][b]][c] == self.cayley[a][self.cayley[b][c]]))
        });
        identity && latin && assoc
    }

    pub fn generator_orders_non_increasing(&self) -> bool {
        let orders: Vec<usize> = self.generators.iter().map(|&g| self.element_order(g)).collect();
        orders.windows(2).all(|w| w[0] >= w[1])
    }

    /// Basis words in standard order: first is the empty word.
    pub fn standard_basis_words(&self, convention: BasisConvention) -> Vec<BasisWord> {
        let total: usize = self.word_ranges.iter().product();
        // Mixed radix with the first exponent fastest is exactly the
        // "last nonzero entry of the difference" order.
        (0..total)
            .map(|mut x| {
                let exponents = self
                    .word_ranges
                    .iter()
                    .map(|&r| {
                        let d = x % r;
                        x /= r;
                        d
                    })
                    .collect();
                BasisWord { exponents, convention }
            })
            .collect()
    }

    pub fn shared(self) -> Arc<FiniteGroup> {
        Arc::new(self)
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_groups() -> Vec<FiniteGroup> {
        ["Z1", "Z2", "Z3", "Z4", "Z6", "Z8", "Z2xZ2", "Z2xZ2xZ2", "Z2xZ4", "D4", "Q8"]
            .iter()
            .map(|s| FiniteGroup::by_name(s).unwrap())
            .collect()
    }

    #[test]
    fn every_table_is_a_group() {
        for g in all_groups() {
            assert!(g.verify_axioms(), "{g}");
            assert!(g.generator_orders_non_increasing(), "{g}");
        }
    }

    #[test]
    fn small_products() {
        let z4 = FiniteGroup::z4();
        assert_eq!(z4.multiply(GroupElement(1), GroupElement(1)).unwrap(), GroupElement(2));
        let k = FiniteGroup::klein();
        assert_eq!(k.multiply(GroupElement(1), GroupElement(2)).unwrap(), GroupElement(3));
        assert!(z4.multiply(GroupElement(4), GroupElement(0)).is_err());
    }

    #[test]
    fn words_biject_onto_group() {
        for g in all_groups() {
            for conv in [BasisConvention::LeftStandard, BasisConvention::RightStandard] {
                let words = g.standard_basis_words(conv);
                assert_eq!(words.len(), g.order());
                let mut seen: Vec<usize> = words.iter().map(|w| w.evaluate(&g).0).collect();
                seen.sort();
                assert_eq!(seen, (0..g.order()).collect::<Vec<_>>(), "{g} {conv:?}");
                for w in words.windows(2) {
                    assert_eq!(w[0].cmp_words(&w[1]), std::cmp::Ordering::Less);
                }
            }
        }
    }

    #[test]
    fn klein_word_shapes() {
        let k = FiniteGroup::klein();
        let r: Vec<String> = k.standard_basis_words(BasisConvention::RightStandard).iter().map(|w| w.render()).collect();
        assert_eq!(r, ["e", "g1", "g2", "g1·g2"]);
        let l: Vec<String> = k.standard_basis_words(BasisConvention::LeftStandard).iter().map(|w| w.render()).collect();
        assert_eq!(l, ["e", "g1", "g2", "g2·g1"]);
    }

    #[test]
    fn q8_has_two_generators_of_order_four() {
        let q8 = FiniteGroup::from_name(GroupName::Q8);
        assert!(q8.generators().iter().all(|&g| q8.element_order(g) == 4));
        assert!(!q8.is_abelian());
    }

    #[test]
    fn parse_names() {
        assert_eq!("z2xz2".parse::<GroupName>().unwrap(), GroupName::Z2xZ2);
        assert_eq!("Z4".parse::<GroupName>().unwrap(), GroupName::Cyclic(4));
        assert!("S3".parse::<GroupName>().is_err());
    }
}
