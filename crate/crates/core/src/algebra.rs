//! Twisted group algebras: structure constants, elements, products,
//! multiplication matrices, conjugation and opposites.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{BasisConvention, FiniteGroup, GroupElement, GroupName};
use crate::linalg;
use crate::polynomial::{var_list, MultiPoly};
use crate::scalar::{parse_q, q, Scalar, ScalarRing, Zp, Q};

pub const TABLE_I: [[i64; 2]; 2] = [[1, 1], [1, -1]];
pub const TABLE_III: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, -1, 1, -1], [1, -1, -1, 1], [1, 1, -1, -1]];
pub const TABLE_V: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 1, 1, -1], [1, -1, -1, 1], [1, 1, -1, 1]];

/// Klein right-standard shape with free (α, β, δ, ε, φ).
pub fn table_ii(p: [Q; 5]) -> Vec<Vec<Q>> {
    let [a, b, d, e, f] = p;
    vec![
        vec![q(1), q(1), q(1), q(1)],
        vec![q(1), q(-1), q(1), a],
        vec![q(1), b, q(-1), d],
        vec![q(1), e, f, q(-1)],
    ]
}

/// ℤ₄ left-standard shape with free (α, β, δ, ε, φ, ω).
pub fn table_iv(p: [Q; 6]) -> Vec<Vec<Q>> {
    let [a, b, d, e, f, w] = p;
    vec![
        vec![q(1), q(1), q(1), q(1)],
        vec![q(1), q(1), q(1), a],
        vec![q(1), b, q(-1), d],
        vec![q(1), e, f, w],
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstant {
    group: Arc<FiniteGroup>,
    values: Vec<Vec<Q>>,
    convention: BasisConvention,
}

impl StructureConstant {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Vec<Q>>, convention: BasisConvention) -> Result<Self> {
        let n = group.order();
        if values.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: values.len() });
        }
        for row in &values {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: row.len() });
            }
        }
        for g in 0..n {
            if !values[0][g].is_one() {
                return Err(Error::NotUnital(0, g));
            }
            if !values[g][0].is_one() {
                return Err(Error::NotUnital(g, 0));
            }
        }
        if values.iter().flatten().any(|x| x.is_zero()) {
            return Err(Error::Precondition("structure constant entries must be nonzero".into()));
        }
        Ok(StructureConstant { group, values, convention })
    }

    pub fn from_ints<R: AsRef<[i64]>>(group: Arc<FiniteGroup>, rows: &[R], convention: BasisConvention) -> Result<Self> {
        let values = rows.iter().map(|r| r.as_ref().iter().map(|&x| q(x)).collect()).collect();
        Self::new(group, values, convention)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn convention(&self) -> BasisConvention {
        self.convention
    }

    pub fn values(&self) -> &[Vec<Q>] {
        &self.values
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn get(&self, a: GroupElement, b: GroupElement) -> &Q {
        &self.values[a.0][b.0]
    }

    pub fn is_sign_valued(&self) -> bool {
        self.values.iter().flatten().all(|x| x.is_one() || (-x).is_one())
    }

    /// Integer entries, when all entries are integers.
    pub fn as_ints(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        self.values
            .iter()
            .map(|r| r.iter().map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None }).collect())
            .collect()
    }

    /// Transposed array under the mirrored basis convention.
    pub fn transpose(&self) -> Self {
        let n = self.order();
        let values = (0..n).map(|a| (0..n).map(|b| self.values[b][a].clone()).collect()).collect();
        StructureConstant { group: self.group.clone(), values, convention: self.convention.mirrored() }
    }

    pub fn with_convention(&self, convention: BasisConvention) -> Self {
        StructureConstant { convention, ..self.clone() }
    }

    /// Table layout: row label = left factor, column label = right factor.
    pub fn to_markdown(&self, title: &str) -> String {
        let labels = self.group.labels();
        let cells: Vec<Vec<String>> = self.values.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        let mut width = title.chars().count();
        for l in labels {
            width = width.max(l.chars().count());
        }
        for c in cells.iter().flatten() {
            width = width.max(c.chars().count());
        }
        let pad = |s: &str| format!("{s:>width$}");
        let mut out = String::new();
        out.push_str(&format!("| {} |", pad(title)));
        for l in labels {
            out.push_str(&format!(" {} |", pad(l)));
        }
        out.push('\n');
        out.push('|');
        for _ in 0..=labels.len() {
            out.push_str(&format!("{}:|", "-".repeat(width + 1)));
        }
        out.push('\n');
        for (l, row) in labels.iter().zip(&cells) {
            out.push_str(&format!("| {} |", pad(l)));
            for c in row {
                out.push_str(&format!(" {} |", pad(c)));
            }
            out.push('\n');
        }
        out
    }
}

/// Coefficient vector indexed by group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement<S> {
    pub coeffs: Vec<S>,
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        AlgebraElement { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn zero_like(&self) -> Self {
        AlgebraElement { coeffs: self.coeffs.iter().map(|c| c.zero_like()).collect() }
    }

    /// Unit element v_e with scalars modelled on `sample`.
    pub fn unit(n: usize, sample: &S) -> Self {
        Self::basis(n, 0, sample)
    }

    pub fn basis(n: usize, i: usize, sample: &S) -> Self {
        let coeffs = (0..n).map(|k| if k == i { sample.one_like() } else { sample.zero_like() }).collect();
        AlgebraElement { coeffs }
    }

    pub fn add(&self, o: &Self) -> Self {
        AlgebraElement { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.plus(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        AlgebraElement { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.minus(b)).collect() }
    }

    pub fn neg(&self) -> Self {
        AlgebraElement { coeffs: self.coeffs.iter().map(|a| a.negated()).collect() }
    }

    pub fn scale(&self, s: &S) -> Self {
        AlgebraElement { coeffs: self.coeffs.iter().map(|a| a.times(s)).collect() }
    }

    pub fn scale_q(&self, c: &Q) -> Self {
        AlgebraElement { coeffs: self.coeffs.iter().map(|a| a.scaled(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.vanishes())
    }

    /// Support is contained in the given set of indices.
    pub fn supported_in(&self, idx: &[usize]) -> bool {
        self.coeffs.iter().enumerate().all(|(i, c)| idx.contains(&i) || c.vanishes())
    }
}

impl AlgebraElement<Q> {
    pub fn from_ints(c: &[i64]) -> Self {
        AlgebraElement { coeffs: c.iter().map(|&x| q(x)).collect() }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(AlgebraElement { coeffs: s.split(',').map(parse_q).collect::<Result<_>>()? })
    }

    pub fn to_zp(&self, p: u64) -> Result<AlgebraElement<Zp>> {
        let z = Zp::new(0, p);
        let coeffs = self.coeffs.iter().map(|c| z.embed(c).ok_or(Error::InvalidModulus(p))).collect::<Result<_>>()?;
        Ok(AlgebraElement { coeffs })
    }
}

impl<S: fmt::Display> fmt::Display for AlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Generic elements with one indeterminate per component: `x0..x{n-1}`,
/// `y0..`, and so on, all over one shared variable list.
pub fn generic_elements(names: &[&str], dim: usize) -> (Arc<Vec<String>>, Vec<AlgebraElement<MultiPoly>>) {
    let all: Vec<String> = names.iter().flat_map(|n| (0..dim).map(move |i| format!("{n}{i}"))).collect();
    let vars = var_list(&all);
    let elems = (0..names.len())
        .map(|k| AlgebraElement::new((0..dim).map(|i| MultiPoly::var(&vars, k * dim + i)).collect()))
        .collect();
    (vars, elems)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedAlgebra {
    constant: StructureConstant,
    ring: ScalarRing,
    label: String,
}

impl TwistedAlgebra {
    pub fn new(constant: StructureConstant, ring: ScalarRing) -> Result<Self> {
        if let ScalarRing::ModP(p) = ring {
            let z = Zp::new(0, p);
            if constant.values.iter().flatten().any(|c| z.embed(c).is_none_or(|v| v.vanishes())) {
                return Err(Error::RingMismatch(format!("structure constant not invertible mod {p}")));
            }
        }
        Ok(TwistedAlgebra { constant, ring, label: String::from("custom") })
    }

    pub fn labelled(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn from_table<R: AsRef<[i64]>>(group: FiniteGroup, rows: &[R], conv: BasisConvention) -> Result<Self> {
        let c = StructureConstant::from_ints(group.shared(), rows, conv)?;
        Self::new(c, ScalarRing::Rational)
    }

    /// ℝ graded by the trivial group.
    pub fn reals() -> Self {
        Self::from_table(FiniteGroup::cyclic(1), &[[1]], BasisConvention::LeftStandard).unwrap().labelled("reals")
    }

    pub fn complex() -> Self {
        Self::from_table(FiniteGroup::z2(), &TABLE_I, BasisConvention::LeftStandard).unwrap().labelled("complex")
    }

    pub fn quaternions() -> Self {
        Self::from_table(FiniteGroup::klein(), &TABLE_III, BasisConvention::RightStandard).unwrap().labelled("quat")
    }

    pub fn tesseranions() -> Self {
        Self::from_table(FiniteGroup::z4(), &TABLE_V, BasisConvention::LeftStandard).unwrap().labelled("tes")
    }

    /// Known algebras by short name.
    pub fn by_name(name: &str) -> Result<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "reals" | "r" | "real" => Ok(Self::reals()),
            "complex" | "c" => Ok(Self::complex()),
            "quat" | "h" | "quaternions" => Ok(Self::quaternions()),
            "tes" | "t" | "tesseranions" => Ok(Self::tesseranions()),
            "quat-op" => Ok(Self::quaternions().opposite()?.labelled("quat-op")),
            "tes-op" => Ok(Self::tesseranions().opposite()?.labelled("tes-op")),
            other => Err(Error::Parse(format!("unknown algebra {other:?}"))),
        }
    }

    pub fn with_ring(&self, ring: ScalarRing) -> Result<Self> {
        Ok(Self::new(self.constant.clone(), ring)?.labelled(&self.label))
    }

    pub fn constant(&self) -> &StructureConstant {
        &self.constant
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.constant.group
    }

    pub fn ring(&self) -> ScalarRing {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.constant.order()
    }

    fn check<S: Scalar>(&self, x: &AlgebraElement<S>) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.dim() });
        }
        if let Some(c) = x.coeffs.first() {
            if c.ring() != self.ring {
                return Err(Error::RingMismatch(format!("element over {}, algebra over {}", c.ring(), self.ring)));
            }
        }
        Ok(())
    }

    /// x·y = Σ_{a,b} x_a C(a,b) y_b v_{ab}.
    pub fn product<S: Scalar>(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    /// Unchecked product; panics on dimension mismatch.
    pub fn mul<S: Scalar>(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> AlgebraElement<S> {
        let n = self.dim();
        assert!(x.dim() == n && y.dim() == n, "dimension mismatch in product");
        let g = self.group();
        let mut out = x.zero_like();
        for a in 0..n {
            if x.coeffs[a].vanishes() {
                continue;
            }
            for b in 0..n {
                if y.coeffs[b].vanishes() {
                    continue;
                }
                let c = g.mul(GroupElement(a), GroupElement(b));
                let t = x.coeffs[a].times(&y.coeffs[b]).scaled(self.constant.get(GroupElement(a), GroupElement(b)));
                out.coeffs[c.0] = out.coeffs[c.0].plus(&t);
            }
        }
        out
    }

    /// Left-nested power x·(x·(⋯·x)).
    pub fn left_power<S: Scalar>(&self, x: &AlgebraElement<S>, k: usize) -> AlgebraElement<S> {
        let sample = &x.coeffs[0];
        let mut acc = AlgebraElement::unit(self.dim(), sample);
        for _ in 0..k {
            acc = self.mul(x, &acc);
        }
        acc
    }

    /// (M^L)_{c,a} = C(a, a⁻¹c)·y_{a⁻¹c}, so that M^L(y)·x = x·y.
    pub fn mult_matrix_left<S: Scalar>(&self, y: &AlgebraElement<S>) -> Vec<Vec<S>> {
        let n = self.dim();
        let g = self.group();
        (0..n)
            .map(|c| {
                (0..n)
                    .map(|a| {
                        let ai = g.inverse(GroupElement(a));
                        let b = g.mul(ai, GroupElement(c));
                        y.coeffs[b.0].scaled(self.constant.get(GroupElement(a), b))
                    })
                    .collect()
            })
            .collect()
    }

    /// (M^R)_{c,b} = x_{cb⁻¹}·C(cb⁻¹, b), so that M^R(x)·y = x·y.
    pub fn mult_matrix_right<S: Scalar>(&self, x: &AlgebraElement<S>) -> Vec<Vec<S>> {
        let n = self.dim();
        let g = self.group();
        (0..n)
            .map(|c| {
                (0..n)
                    .map(|b| {
                        let bi = g.inverse(GroupElement(b));
                        let a = g.mul(GroupElement(c), bi);
                        x.coeffs[a.0].scaled(self.constant.get(a, GroupElement(b)))
                    })
                    .collect()
            })
            .collect()
    }

    /// Negates every non-identity component; defined for ℤ₂, ℤ₂×ℤ₂ and ℤ₄.
    pub fn conjugate<S: Scalar>(&self, x: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        match self.group().name() {
            GroupName::Cyclic(2) | GroupName::Cyclic(4) | GroupName::Z2xZ2 | GroupName::Trivial => {}
            other => return Err(Error::UnsupportedGroup(format!("conjugation for {other}"))),
        }
        self.check(x)?;
        Ok(AlgebraElement {
            coeffs: x.coeffs.iter().enumerate().map(|(i, c)| if i == 0 { c.clone() } else { c.negated() }).collect(),
        })
    }

    /// Mirror algebra with transposed constant.
    pub fn opposite(&self) -> Result<Self> {
        if !self.group().is_abelian() {
            return Err(Error::NonAbelian);
        }
        let label = format!("{}-op", self.label);
        Ok(TwistedAlgebra { constant: self.constant.transpose(), ring: self.ring, label })
    }

    /// Structure constant in the left-standard basis 1, w, w·w, w·(w·w), …
    /// generated by `w`, for cyclic grading. Every product of basis elements
    /// must land on a multiple of a single new basis element.
    pub fn rebase_cyclic(&self, w: &AlgebraElement<Q>) -> Result<StructureConstant> {
        let n = self.dim();
        if !matches!(self.group().name(), GroupName::Cyclic(_)) {
            return Err(Error::UnsupportedGroup("rebasing needs a cyclic grading".into()));
        }
        self.check(w)?;
        let basis: Vec<AlgebraElement<Q>> = (0..n).map(|k| self.left_power(w, k)).collect();
        // columns = basis vectors
        let m: Vec<Vec<Q>> = (0..n).map(|r| (0..n).map(|c| basis[c].coeffs[r].clone()).collect()).collect();
        if linalg::rank(&m) < n {
            return Err(Error::Precondition("generator does not span the algebra".into()));
        }
        let mut values = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let prod = self.mul(&basis[i], &basis[j]);
                let coords = linalg::solve(&m, &prod.coeffs).ok_or(Error::NotInvertible)?;
                let target = (i + j) % n;
                if coords.iter().enumerate().any(|(k, c)| k != target && !c.is_zero()) || coords[target].is_zero() {
                    return Err(Error::Precondition("rebased products are not graded".into()));
                }
                values[i][j] = coords[target].clone();
            }
        }
        StructureConstant::new(self.group().clone(), values, BasisConvention::LeftStandard)
    }

    pub fn to_spec(&self) -> AlgebraSpec {
        AlgebraSpec {
            group: self.group().name().to_string(),
            basis: self.constant.convention.label().to_string(),
            ring: match self.ring {
                ScalarRing::Rational => "rational".to_string(),
                ScalarRing::ModP(p) => format!("Z{p}"),
            },
            c: self
                .constant
                .values
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| {
                            use num_traits::ToPrimitive;
                            match x.to_integer().to_i64() {
                                Some(v) if x.is_integer() => serde_json::Value::from(v),
                                _ => serde_json::Value::from(x.to_string()),
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self> {
        let group = FiniteGroup::by_name(&spec.group)?;
        let conv: BasisConvention = spec.basis.parse()?;
        let ring = match spec.ring.trim().to_ascii_lowercase().as_str() {
            "rational" | "q" => ScalarRing::Rational,
            other => {
                let p = other
                    .trim_start_matches('z')
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("unknown ring {other:?}")))?;
                ScalarRing::mod_p(p)?
            }
        };
        let values = spec
            .c
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| match v {
                        serde_json::Value::Number(n) => match n.as_i64() {
                            Some(i) => Ok(q(i)),
                            None => Err(Error::Parse(format!("non-integer number {n}; use a \"p/q\" string"))),
                        },
                        serde_json::Value::String(s) => parse_q(s),
                        other => Err(Error::Parse(format!("bad entry {other}"))),
                    })
                    .collect::<Result<Vec<Q>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let c = StructureConstant::new(group.shared(), values, conv)?;
        Self::new(c, ring)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: AlgebraSpec = serde_json::from_str(s)?;
        Self::from_spec(&spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_spec()).expect("spec serializes")
    }
}

/// JSON algebra description; `C` is row-major in standard-basis order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub group: String,
    pub basis: String,
    pub ring: String,
    #[serde(rename = "C")]
    pub c: Vec<Vec<serde_json::Value>>,
}

/// Solves M·x = e₀ exactly.
pub fn solve_unit(m: &[Vec<Q>]) -> Option<AlgebraElement<Q>> {
    let n = m.len();
    let mut e0 = vec![Q::zero(); n];
    e0[0] = Q::one();
    let x = linalg::solve(m, &e0)?;
    if linalg::rank(m) < n {
        return None;
    }
    Some(AlgebraElement::new(x))
}

impl TwistedAlgebra {
    /// Left inverse: LI·x = 1, i.e. M^L(x)·LI = e₀.
    pub fn left_inverse(&self, x: &AlgebraElement<Q>) -> Result<AlgebraElement<Q>> {
        solve_unit(&self.mult_matrix_left(x)).ok_or(Error::NotInvertible)
    }

    /// Right inverse: x·RI = 1, i.e. M^R(x)·RI = e₀.
    pub fn right_inverse(&self, x: &AlgebraElement<Q>) -> Result<AlgebraElement<Q>> {
        solve_unit(&self.mult_matrix_right(x)).ok_or(Error::NotInvertible)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(c: &[i64]) -> AlgebraElement<Q> {
        AlgebraElement::from_ints(c)
    }

    #[test]
    fn tes_products() {
        let t = TwistedAlgebra::tesseranions();
        assert_eq!(t.product(&e(&[1, 1, 0, 0]), &e(&[1, 1, 0, 0])).unwrap(), e(&[1, 2, 1, 0]));
        assert_eq!(t.product(&e(&[1, 1, 1, 0]), &e(&[1, -1, 1, 0])).unwrap(), e(&[0, 0, 1, 2]));
        let y = e(&[3, -1, 4, 1]);
        assert_eq!(t.product(&e(&[1, 0, 0, 0]), &y).unwrap(), y);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let t = TwistedAlgebra::tesseranions();
        let x = e(&[1, 2, 3, 4]).to_zp(7).unwrap();
        assert!(matches!(t.product(&x, &x), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn complex_matrices() {
        let c = TwistedAlgebra::complex();
        let (_, g) = generic_elements(&["y"], 2);
        let ml = c.mult_matrix_left(&g[0]);
        assert_eq!(ml[0][1].to_string(), "-y1");
        assert_eq!(ml[1][0].to_string(), "y1");
        let mr = c.mult_matrix_right(&g[0]);
        assert_eq!(mr, ml);
    }

    #[test]
    fn conjugation() {
        let t = TwistedAlgebra::tesseranions();
        assert_eq!(t.conjugate(&e(&[1, 2, 3, 4])).unwrap(), e(&[1, -2, -3, -4]));
        let w = e(&[0, 1, 0, 0]);
        assert_eq!(t.mul(&w, &t.conjugate(&w).unwrap()), e(&[0, 0, -1, 0]));
        let h = TwistedAlgebra::quaternions();
        let x = e(&[1, 2, 3, 4]);
        assert_eq!(h.mul(&x, &h.conjugate(&x).unwrap()), e(&[30, 0, 0, 0]));
        let d4 = TwistedAlgebra::from_table(FiniteGroup::by_name("D4").unwrap(), &vec![vec![1; 8]; 8], BasisConvention::LeftStandard).unwrap();
        assert!(d4.conjugate(&AlgebraElement::from_ints(&[1; 8])).is_err());
    }

    #[test]
    fn opposite_is_transpose_involution() {
        let t = TwistedAlgebra::tesseranions();
        let op = t.opposite().unwrap();
        assert_eq!(op.constant().values()[1][3], q(1));
        assert_eq!(op.constant().values()[3][1], q(-1));
        assert_eq!(op.opposite().unwrap().constant(), t.constant());
        let x = e(&[1, 2, -1, 3]);
        let y = e(&[0, 1, 5, -2]);
        assert_eq!(op.mul(&x, &y), t.mul(&y, &x));
    }

    #[test]
    fn json_roundtrip_of_table_v() {
        let s = r#"{"group":"Z4","basis":"left-standard","ring":"rational","C":[[1,1,1,1],[1,1,1,-1],[1,-1,-1,1],[1,1,-1,1]]}"#;
        let a = TwistedAlgebra::from_json(s).unwrap();
        assert_eq!(a.constant(), TwistedAlgebra::tesseranions().constant());
        assert_eq!(a.to_json(), s);
    }

    #[test]
    fn non_unital_rejected() {
        let r = StructureConstant::from_ints(FiniteGroup::z2().shared(), &[[1, -1], [1, 1]], BasisConvention::LeftStandard);
        assert!(matches!(r, Err(Error::NotUnital(0, 1))));
    }

    #[test]
    fn chiral_inverses_of_w() {
        let t = TwistedAlgebra::tesseranions();
        let w = e(&[0, 1, 0, 0]);
        assert_eq!(t.left_inverse(&w).unwrap(), e(&[0, 0, 0, 1]));
        assert_eq!(t.right_inverse(&w).unwrap(), e(&[0, 0, 0, -1]));
    }

    #[test]
    fn rebase_tes_with_v3() {
        let t = TwistedAlgebra::tesseranions();
        let c = t.rebase_cyclic(&e(&[0, 0, 0, 1])).unwrap();
        assert_eq!(&c, t.constant());
        assert!(t.rebase_cyclic(&e(&[1, 0, 0, 0])).is_err());
    }

    #[test]
    fn markdown_layout() {
        let md = TwistedAlgebra::complex().constant().to_markdown("C");
        assert_eq!(md, "|  C |  0 |  1 |\n|---:|---:|---:|\n|  0 |  1 |  1 |\n|  1 |  1 | -1 |\n");
    }
}
