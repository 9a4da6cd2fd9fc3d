//! Commutator and anticommutator algebras, series, ideals, chiral inverses.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{generic_elements, AlgebraElement, TwistedAlgebra};
use crate::error::{Error, Result};
use crate::linalg;
use crate::polynomial::{symbolic_det, MultiPoly};
use crate::scalar::{q, qr, Scalar, Q};

/// Known identification of 𝕋⁻ among four-dimensional solvable real Lie
/// algebras (de Graaf's list); recorded, not derived.
pub const DE_GRAAF_LABEL: &str = "M^14_a with a = -1";

/// Bilinear product given by e_i∙e_j = Σ_k T[i][j][k] e_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearAlgebra {
    pub dim: usize,
    pub tensor: Vec<Vec<Vec<Q>>>,
}

fn basis_q(n: usize, i: usize) -> AlgebraElement<Q> {
    AlgebraElement::basis(n, i, &Q::zero())
}

impl BilinearAlgebra {
    fn from_twisted(alg: &TwistedAlgebra, sign: i64) -> Self {
        let n = alg.dim();
        let half = qr(1, 2);
        let tensor = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = alg.mul(&basis_q(n, i), &basis_q(n, j));
                        let b = alg.mul(&basis_q(n, j), &basis_q(n, i));
                        a.add(&b.scale_q(&q(sign))).scale_q(&half).coeffs
                    })
                    .collect()
            })
            .collect();
        BilinearAlgebra { dim: n, tensor }
    }

    pub fn mul<S: Scalar>(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> AlgebraElement<S> {
        let mut out = x.zero_like();
        for i in 0..self.dim {
            if x.coeffs[i].vanishes() {
                continue;
            }
            for j in 0..self.dim {
                if y.coeffs[j].vanishes() {
                    continue;
                }
                let xy = x.coeffs[i].times(&y.coeffs[j]);
                for (k, t) in self.tensor[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out.coeffs[k] = out.coeffs[k].plus(&xy.scaled(t));
                    }
                }
            }
        }
        out
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Q] {
        &self.tensor[i][j]
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.tensor[i][j].iter().zip(&self.tensor[j][i]).all(|(a, b)| *a == -b)))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.tensor[i][j] == self.tensor[j][i]))
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.iter().flatten().flatten().all(|c| c.is_zero())
    }

    /// Nonzero basis products as (i, j, coefficients), i ≤ j for symmetric
    /// and i < j for antisymmetric tensors.
    pub fn nonzero_products(&self) -> Vec<(usize, usize, Vec<Q>)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = &self.tensor[i][j];
                if v.iter().any(|c| !c.is_zero()) {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    fn products_of(&self, a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
        let mut out = Vec::new();
        for u in a {
            for v in b {
                let p = self.mul(&AlgebraElement::new(u.clone()), &AlgebraElement::new(v.clone()));
                if !p.is_zero() {
                    out.push(p.coeffs);
                }
            }
        }
        out
    }

    /// [L, I] ⊆ I and [I, L] ⊆ I.
    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        let all = Subspace::full(self.dim).basis;
        self.products_of(&all, &sub.basis)
            .into_iter()
            .chain(self.products_of(&sub.basis, &all))
            .all(|p| sub.contains(&p))
    }
}

/// [x, y] = (x·y − y·x)/2.
pub fn commutator_algebra(alg: &TwistedAlgebra) -> BilinearAlgebra {
    BilinearAlgebra::from_twisted(alg, -1)
}

/// x∙y = (x·y + y·x)/2.
pub fn anticommutator_algebra(alg: &TwistedAlgebra) -> BilinearAlgebra {
    BilinearAlgebra::from_twisted(alg, 1)
}

/// Span of row vectors kept in reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub dim_ambient: usize,
    pub basis: Vec<Vec<Q>>,
}

impl Subspace {
    pub fn span(n: usize, vectors: &[Vec<Q>]) -> Self {
        Subspace { dim_ambient: n, basis: linalg::row_space(vectors) }
    }

    pub fn full(n: usize) -> Self {
        Subspace { dim_ambient: n, basis: (0..n).map(|i| basis_q(n, i).coeffs).collect() }
    }

    pub fn of_basis_indices(n: usize, idx: &[usize]) -> Self {
        Self::span(n, &idx.iter().map(|&i| basis_q(n, i).coeffs).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        v.iter().all(|c| c.is_zero()) || linalg::in_span(&self.basis, v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

#[derive(Debug, Clone)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub spaces: Vec<Subspace>,
    /// The series reached {0}.
    pub reaches_zero: bool,
    /// The series became constant at a nonzero space.
    pub stabilized: bool,
}

impl SeriesReport {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }
}

pub const DEFAULT_SERIES_STEPS: usize = 6;

pub fn series(l: &BilinearAlgebra, kind: SeriesKind, max_steps: usize) -> Result<SeriesReport> {
    if !l.is_antisymmetric() {
        return Err(Error::Precondition("series needs an antisymmetric product".into()));
    }
    let full = Subspace::full(l.dim);
    let mut spaces = vec![full.clone()];
    let mut stabilized = false;
    for _ in 0..max_steps {
        let cur = spaces.last().unwrap();
        if cur.dim() == 0 {
            break;
        }
        let prods = match kind {
            SeriesKind::Derived => l.products_of(&cur.basis, &cur.basis),
            SeriesKind::LowerCentral => l.products_of(&full.basis, &cur.basis),
        };
        let next = Subspace::span(l.dim, &prods);
        let same = next == *cur;
        spaces.push(next);
        if same {
            stabilized = true;
            break;
        }
    }
    let reaches_zero = spaces.last().is_some_and(|s| s.dim() == 0);
    Ok(SeriesReport { kind, spaces, reaches_zero, stabilized })
}

pub fn is_solvable(l: &BilinearAlgebra) -> Result<bool> {
    Ok(series(l, SeriesKind::Derived, l.dim + 1)?.reaches_zero)
}

pub fn is_nilpotent(l: &BilinearAlgebra) -> Result<bool> {
    Ok(series(l, SeriesKind::LowerCentral, l.dim + 1)?.reaches_zero)
}

/// Outcome of a symbolic identity check with a basis-element counterexample.
#[derive(Debug, Clone)]
pub struct LawCheck {
    pub holds: bool,
    pub residual: AlgebraElement<MultiPoly>,
    pub counterexample: Option<(Vec<AlgebraElement<Q>>, AlgebraElement<Q>)>,
}

fn check_law(
    dim: usize,
    nvars: usize,
    law: impl Fn(&[AlgebraElement<MultiPoly>]) -> AlgebraElement<MultiPoly>,
    law_q: impl Fn(&[AlgebraElement<Q>]) -> AlgebraElement<Q>,
) -> LawCheck {
    let names = ["x", "y", "z"];
    let (_, vars) = generic_elements(&names[..nvars], dim);
    let residual = law(&vars);
    let holds = residual.is_zero();
    let mut counterexample = None;
    if !holds {
        let mut probes: Vec<AlgebraElement<Q>> = (0..dim).map(|i| basis_q(dim, i)).collect();
        probes.push(AlgebraElement::new((0..dim).map(|i| q(i as i64 + 1)).collect()));
        let total = probes.len().pow(nvars as u32);
        for mut k in 0..total {
            let pick: Vec<AlgebraElement<Q>> = (0..nvars)
                .map(|_| {
                    let p = probes[k % probes.len()].clone();
                    k /= probes.len();
                    p
                })
                .collect();
            let v = law_q(&pick);
            if !v.is_zero() {
                counterexample = Some((pick, v));
                break;
            }
        }
    }
    LawCheck { holds, residual, counterexample }
}

/// [[x,y],z] + [[y,z],x] + [[z,x],y] ≡ 0.
pub fn jacobi_check(l: &BilinearAlgebra) -> Result<LawCheck> {
    if !l.is_antisymmetric() {
        return Err(Error::Precondition("Jacobi check needs an antisymmetric product".into()));
    }
    fn jac<S: Scalar>(l: &BilinearAlgebra, v: &[AlgebraElement<S>]) -> AlgebraElement<S> {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        l.mul(&l.mul(x, y), z).add(&l.mul(&l.mul(y, z), x)).add(&l.mul(&l.mul(z, x), y))
    }
    Ok(check_law(l.dim, 3, |v| jac(l, v), |v| jac(l, v)))
}

fn jordan_residual<S: Scalar>(j: &BilinearAlgebra, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> AlgebraElement<S> {
    let xx = j.mul(x, x);
    j.mul(&j.mul(x, y), &xx).sub(&j.mul(x, &j.mul(y, &xx)))
}

/// (x∙y)∙(x∙x) − x∙(y∙(x∙x)) ≡ 0.
pub fn jordan_check(j: &BilinearAlgebra) -> Result<LawCheck> {
    if !j.is_symmetric() {
        return Err(Error::Precondition("Jordan check needs a symmetric product".into()));
    }
    Ok(check_law(j.dim, 2, |v| jordan_residual(j, &v[0], &v[1]), |v| jordan_residual(j, &v[0], &v[1])))
}

/// Jordan residual at concrete elements.
pub fn jordan_residual_at(j: &BilinearAlgebra, x: &AlgebraElement<Q>, y: &AlgebraElement<Q>) -> AlgebraElement<Q> {
    jordan_residual(j, x, y)
}

/// Closed form (x₁²+x₃²)·[−(y₁x₁+y₃x₃), x₁y₂, 0, x₃y₂] in the generic
/// variables x0..x3, y0..y3.
pub fn tesseranion_jordan_closed_form() -> AlgebraElement<MultiPoly> {
    let (_, v) = generic_elements(&["x", "y"], 4);
    let (x, y) = (&v[0].coeffs, &v[1].coeffs);
    let f = &(&x[1] * &x[1]) + &(&x[3] * &x[3]);
    let comps = [
        -&(&(&y[1] * &x[1]) + &(&y[3] * &x[3])),
        &x[1] * &y[2],
        MultiPoly::zero(x[0].vars()),
        &x[3] * &y[2],
    ];
    AlgebraElement::new(comps.iter().map(|c| &f * c).collect())
}

/// (x∙y)∙x − x∙(y∙x) ≡ 0.
pub fn flexible_check(j: &BilinearAlgebra) -> LawCheck {
    fn flex<S: Scalar>(j: &BilinearAlgebra, v: &[AlgebraElement<S>]) -> AlgebraElement<S> {
        j.mul(&j.mul(&v[0], &v[1]), &v[0]).sub(&j.mul(&v[0], &j.mul(&v[1], &v[0])))
    }
    check_law(j.dim, 2, |v| flex(j, v), |v| flex(j, v))
}

/// ((x∙x)∙x)∙x − (x∙x)∙(x∙x) ≡ 0.
pub fn fourth_power_check(j: &BilinearAlgebra) -> LawCheck {
    fn pw<S: Scalar>(j: &BilinearAlgebra, v: &[AlgebraElement<S>]) -> AlgebraElement<S> {
        let x = &v[0];
        let xx = j.mul(x, x);
        j.mul(&j.mul(&xx, x), x).sub(&j.mul(&xx, &xx))
    }
    check_law(j.dim, 1, |v| pw(j, v), |v| pw(j, v))
}

/// gen{v₀,v₁,v₃} is an ideal of 𝕋⁻ with [v₃,v₁] = v₀, v₀ central in it,
/// and derived algebra span{v₀}: a Heisenberg algebra.
pub fn heisenberg_ideal_check(l: &BilinearAlgebra) -> bool {
    if l.dim != 4 {
        return false;
    }
    let ideal = Subspace::of_basis_indices(4, &[0, 1, 3]);
    let e = |i: usize| basis_q(4, i);
    let bracket = l.mul(&e(3), &e(1));
    let central = [0, 1, 3].iter().all(|&i| l.mul(&e(0), &e(i)).is_zero());
    let derived = Subspace::span(4, &l.products_of(&ideal.basis, &ideal.basis));
    l.is_ideal(&ideal) && bracket == e(0) && central && derived == Subspace::of_basis_indices(4, &[0])
}

/// ad_x(a·b) ≠ ad_x(a)·b + a·ad_x(b) for basis elements; ad_x(y) = [x, y].
pub fn derivation_failure(alg: &TwistedAlgebra) -> Option<(usize, usize, usize)> {
    let l = commutator_algebra(alg);
    let n = alg.dim();
    let e = |i: usize| basis_q(n, i);
    for x in 0..n {
        let ad = |v: &AlgebraElement<Q>| l.mul(&e(x), v);
        for a in 0..n {
            for b in 0..n {
                let lhs = ad(&alg.mul(&e(a), &e(b)));
                let rhs = alg.mul(&ad(&e(a)), &e(b)).add(&alg.mul(&e(a), &ad(&e(b))));
                if lhs != rhs {
                    return Some((x, a, b));
                }
            }
        }
    }
    None
}

/// ad_x is a derivation of the bracket for every basis x (equivalent to
/// Jacobi for antisymmetric brackets).
pub fn ad_is_derivation_of_bracket(l: &BilinearAlgebra) -> bool {
    let n = l.dim;
    let e = |i: usize| basis_q(n, i);
    (0..n).all(|x| {
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ad = |v: &AlgebraElement<Q>| l.mul(&e(x), v);
                ad(&l.mul(&e(a), &e(b))) == l.mul(&ad(&e(a)), &e(b)).add(&l.mul(&e(a), &ad(&e(b))))
            })
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InverseKind {
    TwoSided,
    Chiral { witness: AlgebraElement<Q>, left: AlgebraElement<Q>, right: AlgebraElement<Q> },
}

fn replace_column(m: &[Vec<MultiPoly>], col: usize) -> Vec<Vec<MultiPoly>> {
    m.iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, x)| if c == col { MultiPoly::constant(x.vars(), if r == 0 { Q::one() } else { Q::zero() }) } else { x.clone() })
                .collect()
        })
        .collect()
}

/// LI(x) ≡ RI(x) as rational functions, via Cramer's rule.
pub fn inverses_agree_symbolically(alg: &TwistedAlgebra) -> Result<bool> {
    let (_, v) = generic_elements(&["x"], alg.dim());
    let ml = alg.mult_matrix_left(&v[0]);
    let mr = alg.mult_matrix_right(&v[0]);
    let dl = symbolic_det(&ml)?;
    let dr = symbolic_det(&mr)?;
    for i in 0..alg.dim() {
        let nl = symbolic_det(&replace_column(&ml, i))?;
        let nr = symbolic_det(&replace_column(&mr, i))?;
        if &nl * &dr != &nr * &dl {
            return Ok(false);
        }
    }
    Ok(true)
}

fn probe_points(n: usize, seed: u64, count: usize) -> Vec<AlgebraElement<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<AlgebraElement<Q>> = (1..n).map(|i| basis_q(n, i)).collect();
    while out.len() < count {
        let c: Vec<Q> = (0..n).map(|_| q(rng.gen_range(-5..=5))).collect();
        if c.iter().any(|x| !x.is_zero()) {
            out.push(AlgebraElement::new(c));
        }
    }
    out
}

pub fn chiral_inverse_check(alg: &TwistedAlgebra, samples: usize, seed: u64) -> Result<InverseKind> {
    for x in probe_points(alg.dim(), seed, samples) {
        let li = alg.left_inverse(&x)?;
        let ri = alg.right_inverse(&x)?;
        if li != ri {
            return Ok(InverseKind::Chiral { witness: x, left: li, right: ri });
        }
    }
    if inverses_agree_symbolically(alg)? {
        Ok(InverseKind::TwoSided)
    } else {
        Err(Error::Precondition("inverses differ symbolically but no sample separated them".into()))
    }
}

/// LI(x)·x = 1 and x·RI(x) = 1 at `samples` random nonzero x.
pub fn inverse_sample_check(alg: &TwistedAlgebra, samples: usize, seed: u64) -> Result<bool> {
    let n = alg.dim();
    let one = basis_q(n, 0);
    for x in probe_points(n, seed, samples) {
        let li = alg.left_inverse(&x)?;
        let ri = alg.right_inverse(&x)?;
        if alg.mul(&li, &x) != one || alg.mul(&x, &ri) != one {
            return Ok(false);
        }
    }
    Ok(true)
}

fn render_vec(v: &[Q]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| if c.is_one() { format!("v{i}") } else if *c == -Q::one() { format!("-v{i}") } else { format!("{c}*v{i}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

/// Full structural report used by the CLI.
pub fn analyze_report(alg: &TwistedAlgebra, samples: usize, seed: u64) -> Result<Value> {
    let minus = commutator_algebra(alg);
    let plus = anticommutator_algebra(alg);
    let jac = jacobi_check(&minus)?;
    let jor = jordan_check(&plus)?;
    let derived = series(&minus, SeriesKind::Derived, DEFAULT_SERIES_STEPS)?;
    let lower = series(&minus, SeriesKind::LowerCentral, DEFAULT_SERIES_STEPS)?;
    let brackets: Vec<String> = minus
        .nonzero_products()
        .into_iter()
        .filter(|(i, j, _)| i < j)
        .map(|(i, j, v)| format!("[v{i},v{j}] = {}", render_vec(&v)))
        .collect();
    let anti: Vec<String> = plus
        .nonzero_products()
        .into_iter()
        .filter(|(i, j, _)| i <= j && *i != 0)
        .map(|(i, j, v)| format!("v{i}*v{j} = {}", render_vec(&v)))
        .collect();
    let inverses = match chiral_inverse_check(alg, samples, seed)? {
        InverseKind::TwoSided => json!({"kind": "two-sided"}),
        InverseKind::Chiral { witness, left, right } => json!({
            "kind": "chiral",
            "witness": witness.to_string(),
            "left_inverse": left.to_string(),
            "right_inverse": right.to_string(),
        }),
    };
    Ok(json!({
        "algebra": alg.label(),
        "lie": {
            "brackets": brackets,
            "jacobi": jac.holds,
            "heisenberg_ideal": heisenberg_ideal_check(&minus),
            "derivation_failure_in_algebra": derivation_failure(alg),
        },
        "jordan": {
            "products": anti,
            "jordan_identity": jor.holds,
            "jordan_counterexample": jor.counterexample.map(|(v, r)| json!({
                "x": v[0].to_string(), "y": v[1].to_string(), "residual": r.to_string()
            })),
            "flexible": flexible_check(&plus).holds,
            "fourth_power_associative": fourth_power_check(&plus).holds,
        },
        "series": {
            "derived_dims": derived.dims(),
            "lower_central_dims": lower.dims(),
            "solvable": derived.reaches_zero,
            "nilpotent": lower.reaches_zero,
            "lower_central_stabilized": lower.stabilized,
        },
        "inverses": inverses,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> AlgebraElement<Q> {
        AlgebraElement::from_ints(c)
    }

    #[test]
    fn tesseranion_brackets() {
        let l = commutator_algebra(&TwistedAlgebra::tesseranions());
        assert_eq!(l.mul(&v(&[0, 1, 0, 0]), &v(&[0, 0, 1, 0])), v(&[0, 0, 0, 1]));
        assert_eq!(l.mul(&v(&[0, 0, 1, 0]), &v(&[0, 0, 0, 1])), v(&[0, 1, 0, 0]));
        assert_eq!(l.mul(&v(&[0, 0, 0, 1]), &v(&[0, 1, 0, 0])), v(&[1, 0, 0, 0]));
        assert_eq!(l.nonzero_products().len(), 6);
        assert!(jacobi_check(&l).unwrap().holds);
        assert!(heisenberg_ideal_check(&l));
        assert!(!l.is_ideal(&Subspace::of_basis_indices(4, &[0, 2])));
    }

    #[test]
    fn tesseranion_series() {
        let l = commutator_algebra(&TwistedAlgebra::tesseranions());
        let d = series(&l, SeriesKind::Derived, 6).unwrap();
        assert_eq!(d.dims(), vec![4, 3, 1, 0]);
        let c = series(&l, SeriesKind::LowerCentral, 6).unwrap();
        assert_eq!(c.dims(), vec![4, 3, 3]);
        assert!(c.stabilized && !c.reaches_zero);
    }

    #[test]
    fn tesseranion_jordan() {
        let j = anticommutator_algebra(&TwistedAlgebra::tesseranions());
        assert_eq!(j.mul(&v(&[0, 1, 0, 0]), &v(&[0, 1, 0, 0])), v(&[0, 0, 1, 0]));
        assert_eq!(j.mul(&v(&[0, 0, 0, 1]), &v(&[0, 0, 0, 1])), v(&[0, 0, 1, 0]));
        assert_eq!(j.mul(&v(&[0, 0, 1, 0]), &v(&[0, 0, 1, 0])), v(&[-1, 0, 0, 0]));
        let chk = jordan_check(&j).unwrap();
        assert!(!chk.holds);
        let closed = tesseranion_jordan_closed_form();
        let vars = chk.residual.coeffs[0].vars().clone();
        let closed = AlgebraElement::new(closed.coeffs.iter().map(|p| p.rename_into(&vars).unwrap()).collect());
        assert_eq!(chk.residual, closed);
        assert_eq!(jordan_residual_at(&j, &v(&[0, 1, 0, 0]), &v(&[0, 0, 1, 0])), v(&[0, 1, 0, 0]));
        assert!(flexible_check(&j).holds);
        assert!(!fourth_power_check(&j).holds);
        assert!(jacobi_check(&j).is_err());
    }

    #[test]
    fn inverse_kinds() {
        let t = TwistedAlgebra::tesseranions();
        assert!(matches!(chiral_inverse_check(&t, 20, 1).unwrap(), InverseKind::Chiral { .. }));
        assert_eq!(chiral_inverse_check(&TwistedAlgebra::quaternions(), 20, 1).unwrap(), InverseKind::TwoSided);
        assert_eq!(chiral_inverse_check(&TwistedAlgebra::complex(), 20, 1).unwrap(), InverseKind::TwoSided);
        assert!(inverse_sample_check(&t, 100, 7).unwrap());
        assert!(derivation_failure(&t).is_some());
        assert!(ad_is_derivation_of_bracket(&commutator_algebra(&t)));
    }
}
