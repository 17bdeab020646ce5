//! Finite-dimensional *-algebras given by structure constants.

pub mod roots;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactlin::{
    kernel_basis, rank, solve, tensor_split, Echelon, LinError, Scalar, SparseMatrix, SparseVec,
};
use crate::groups::FiniteGroup;
use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not an order-two automorphism: {0}")]
    NotAutomorphism(String),
    #[error("commutative quotient does not split over Q(i): {0}")]
    NonSplit(String),
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// Associative unital *-algebra.
///
/// `mult[i * dim + j]` is `e_i e_j`. The involution is `x* = star · conj(x)`.
#[derive(Clone, PartialEq, Eq)]
pub struct StarAlgebra {
    dim: usize,
    labels: Vec<String>,
    mult: Vec<SparseVec>,
    unit: SparseVec,
    star: SparseMatrix,
}

impl std::fmt::Debug for StarAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StarAlgebra").field("dim", &self.dim).field("labels", &self.labels).finish()
    }
}

impl StarAlgebra {
    /// Assembles an algebra from raw data. Only shapes are checked here;
    /// the algebraic laws are checked by [`verify_star_algebra`].
    pub fn new(
        labels: Vec<String>,
        mult: Vec<SparseVec>,
        unit: SparseVec,
        star: SparseMatrix,
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        let bad = |what: &str| Err(AlgebraError::DimensionMismatch(what.to_string()));
        if mult.len() != dim * dim || mult.iter().any(|v| v.dim() != dim) {
            return bad("multiplication table");
        }
        if unit.dim() != dim {
            return bad("unit");
        }
        if star.rows() != dim || star.cols() != dim {
            return bad("star");
        }
        Ok(StarAlgebra { dim, labels, mult, unit, star })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::basis(self.dim, i)
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn star_matrix(&self) -> &SparseMatrix {
        &self.star
    }

    pub fn mult_table(&self) -> &[SparseVec] {
        &self.mult
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = a * b;
                for (k, c) in self.mult_basis(i, j).iter() {
                    pairs.push((k, c * &ab));
                }
            }
        }
        SparseVec::from_pairs(self.dim, pairs)
    }

    pub fn mul_all(&self, xs: &[&SparseVec]) -> SparseVec {
        xs.iter().fold(self.unit.clone(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, x: &SparseVec, k: usize) -> SparseVec {
        (0..k).fold(self.unit.clone(), |acc, _| self.mul(&acc, x))
    }

    pub fn star(&self, x: &SparseVec) -> SparseVec {
        self.star.apply(&x.conj())
    }

    pub fn commutator(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.mult_basis(i, j) == self.mult_basis(j, i)))
    }

    /// Whether `x` commutes with every basis element.
    pub fn is_central(&self, x: &SparseVec) -> Result<(), usize> {
        for k in 0..self.dim {
            let e = self.basis(k);
            if self.mul(x, &e) != self.mul(&e, x) {
                return Err(k);
            }
        }
        Ok(())
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mult(&self, x: &SparseVec) -> SparseMatrix {
        SparseMatrix::from_columns(self.dim, (0..self.dim).map(|j| self.mul(x, &self.basis(j))).collect())
    }

    /// For algebras whose basis products are all multiples of basis
    /// elements, `(k, c)` with `e_i e_j = c e_k` (or `None` for zero).
    pub fn monomial_table(&self) -> Option<Vec<Option<(u32, Scalar)>>> {
        self.mult
            .iter()
            .map(|v| match v.nnz() {
                0 => Some(None),
                1 => {
                    let (k, c) = v.leading().unwrap();
                    Some(Some((k as u32, c.clone())))
                }
                _ => None,
            })
            .collect()
    }

    /// Human-readable element, used in witnesses.
    pub fn fmt(&self, x: &SparseVec) -> String {
        format_element(&self.labels, x)
    }

    /// Element of `self ⊗ other`, formatted.
    pub fn fmt_tensor(&self, other: &StarAlgebra, x: &SparseVec) -> String {
        format_tensor(&self.labels, &other.labels, x)
    }
}

fn coeff_prefix(c: &Scalar, first: bool) -> String {
    let s = c.to_string();
    if c.is_one() {
        return if first { String::new() } else { "+".into() };
    }
    if *c == Scalar::from_int(-1) {
        return "-".into();
    }
    let wrapped = if c.is_real() || c.re.is_zero() { s } else { format!("({s})") };
    if first || wrapped.starts_with('-') {
        format!("{wrapped}*")
    } else {
        format!("+{wrapped}*")
    }
}

pub fn format_element(labels: &[String], x: &SparseVec) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (i, c)) in x.iter().enumerate() {
        out.push_str(&coeff_prefix(c, k == 0));
        out.push_str(&labels[i]);
    }
    out
}

pub fn format_tensor(left: &[String], right: &[String], x: &SparseVec) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (idx, c)) in x.iter().enumerate() {
        let (i, j) = tensor_split(idx, right.len());
        out.push_str(&coeff_prefix(c, k == 0));
        out.push_str(&format!("{}⊗{}", left[i], right[j]));
    }
    out
}

/// Product in `A ⊗ B` of two tensors.
pub fn tensor_multiply(a: &StarAlgebra, b: &StarAlgebra, u: &SparseVec, v: &SparseVec) -> SparseVec {
    let (da, db) = (a.dim(), b.dim());
    let mut pairs = Vec::new();
    for (k1, c1) in u.iter() {
        let (i1, j1) = tensor_split(k1, db);
        for (k2, c2) in v.iter() {
            let (i2, j2) = tensor_split(k2, db);
            let cc = c1 * c2;
            let l = a.mult_basis(i1, i2);
            if l.is_zero() {
                continue;
            }
            let r = b.mult_basis(j1, j2);
            for (x, cx) in l.iter() {
                let cxc = cx * &cc;
                for (y, cy) in r.iter() {
                    pairs.push((x * db + y, cy * &cxc));
                }
            }
        }
    }
    SparseVec::from_pairs(da * db, pairs)
}

/// `(x ⊗ y)* = x* ⊗ y*` extended antilinearly.
pub fn tensor_star(a: &StarAlgebra, b: &StarAlgebra, u: &SparseVec) -> SparseVec {
    let db = b.dim();
    let mut pairs = Vec::new();
    for (k, c) in u.iter() {
        let (i, j) = tensor_split(k, db);
        let c = c.conj();
        for (x, cx) in a.star_matrix().column(i).iter() {
            for (y, cy) in b.star_matrix().column(j).iter() {
                pairs.push((x * db + y, &(cx * cy) * &c));
            }
        }
    }
    SparseVec::from_pairs(a.dim() * db, pairs)
}

/// The unit of `A ⊗ B`.
pub fn tensor_unit(a: &StarAlgebra, b: &StarAlgebra) -> SparseVec {
    a.unit().tensor(b.unit())
}

/// Exhaustive check of the *-algebra laws.
pub fn verify_star_algebra(a: &StarAlgebra) -> Report {
    let mut r = Report::new();
    r.record("associativity", check_associativity(a));
    r.record("unit", {
        let mut out = Ok(());
        for i in 0..a.dim() {
            let e = a.basis(i);
            if a.mul(a.unit(), &e) != e || a.mul(&e, a.unit()) != e {
                out = Err(format!("unit fails on {}", a.label(i)));
                break;
            }
        }
        out
    });
    r.record("star_involution", {
        let mut out = Ok(());
        for i in 0..a.dim() {
            let e = a.basis(i);
            if a.star(&a.star(&e)) != e {
                out = Err(format!("({})** = {}", a.label(i), a.fmt(&a.star(&a.star(&e)))));
                break;
            }
        }
        out
    });
    r.record("star_antimultiplicative", {
        let stars: Vec<SparseVec> = (0..a.dim()).map(|i| a.star(&a.basis(i))).collect();
        let mut out = Ok(());
        'outer: for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = a.star(a.mult_basis(i, j));
                let rhs = a.mul(&stars[j], &stars[i]);
                if lhs != rhs {
                    out = Err(format!("({} {})* != {}* {}*", a.label(i), a.label(j), a.label(j), a.label(i)));
                    break 'outer;
                }
            }
        }
        out
    });
    r
}

/// `(e_i e_j) e_k = e_i (e_j e_k)` over all triples, first failure as witness.
pub fn check_associativity(a: &StarAlgebra) -> Result<(), String> {
    let d = a.dim();
    if let Some(table) = a.monomial_table() {
        for i in 0..d {
            for j in 0..d {
                let Some((ij, c1)) = &table[i * d + j] else {
                    // left side vanishes; right side must too
                    for k in 0..d {
                        if let Some((jk, _)) = &table[j * d + k] {
                            if table[i * d + *jk as usize].is_some() {
                                return Err(assoc_witness(a, i, j, k));
                            }
                        }
                    }
                    continue;
                };
                for k in 0..d {
                    let left = table[*ij as usize * d + k].as_ref().map(|(l, c2)| (*l, c1 * c2));
                    let right = table[j * d + k].as_ref().and_then(|(jk, c3)| {
                        table[i * d + *jk as usize].as_ref().map(|(l, c4)| (*l, c3 * c4))
                    });
                    if left != right {
                        return Err(assoc_witness(a, i, j, k));
                    }
                }
            }
        }
        return Ok(());
    }
    for i in 0..d {
        for j in 0..d {
            let ij = a.mult_basis(i, j);
            for k in 0..d {
                let ek = a.basis(k);
                let left = a.mul(ij, &ek);
                let right = a.mul(&a.basis(i), a.mult_basis(j, k));
                if left != right {
                    return Err(assoc_witness(a, i, j, k));
                }
            }
        }
    }
    Ok(())
}

fn assoc_witness(a: &StarAlgebra, i: usize, j: usize, k: usize) -> String {
    format!("({}, {}, {})", a.label(i), a.label(j), a.label(k))
}

/// ℂ[G]: `e_x e_y = e_{xy}`, `e_x* = e_{x⁻¹}`.
pub fn group_algebra(g: &FiniteGroup) -> StarAlgebra {
    let n = g.order();
    let mult = (0..n * n).map(|k| SparseVec::basis(n, g.mul(k / n, k % n))).collect();
    let star = SparseMatrix::from_columns(n, (0..n).map(|x| SparseVec::basis(n, g.inv(x))).collect());
    StarAlgebra::new(g.labels().to_vec(), mult, SparseVec::basis(n, g.identity()), star)
        .expect("shapes are consistent")
}

/// Functions on `G` in the delta basis: `δ_x δ_y = [x=y] δ_x`.
pub fn function_algebra(g: &FiniteGroup) -> StarAlgebra {
    let n = g.order();
    let mult = (0..n * n)
        .map(|k| if k / n == k % n { SparseVec::basis(n, k / n) } else { SparseVec::zero(n) })
        .collect();
    let unit = SparseVec::from_pairs(n, (0..n).map(|x| (x, Scalar::ONE)));
    let labels = g.labels().iter().map(|l| format!("δ({l})")).collect();
    StarAlgebra::new(labels, mult, unit, SparseMatrix::identity(n)).expect("shapes are consistent")
}

/// `A ⊕ B` with basis `[A-basis, B-basis]`; cross products vanish.
pub fn direct_sum(a: &StarAlgebra, b: &StarAlgebra) -> StarAlgebra {
    let (da, db) = (a.dim(), b.dim());
    let d = da + db;
    let mut mult = vec![SparseVec::zero(d); d * d];
    for i in 0..da {
        for j in 0..da {
            mult[i * d + j] = a.mult_basis(i, j).embed(d, 0);
        }
    }
    for i in 0..db {
        for j in 0..db {
            mult[(da + i) * d + da + j] = b.mult_basis(i, j).embed(d, da);
        }
    }
    let unit = a.unit().embed(d, 0).add(&b.unit().embed(d, da));
    let star = SparseMatrix::from_columns(
        d,
        a.star_matrix()
            .columns()
            .iter()
            .map(|c| c.embed(d, 0))
            .chain(b.star_matrix().columns().iter().map(|c| c.embed(d, da)))
            .collect(),
    );
    let labels = a.labels().iter().chain(b.labels()).cloned().collect();
    StarAlgebra::new(labels, mult, unit, star).expect("shapes are consistent")
}

/// Injection of the first (`second = false`) or second summand of a direct sum.
pub fn summand_injection(a: &StarAlgebra, b: &StarAlgebra, second: bool) -> SparseMatrix {
    let d = a.dim() + b.dim();
    let (n, off) = if second { (b.dim(), a.dim()) } else { (a.dim(), 0) };
    SparseMatrix::from_columns(d, (0..n).map(|i| SparseVec::basis(d, off + i)).collect())
}

/// A linear map between two algebras, to be checked by [`verify_algebra_map`].
#[derive(Clone, Debug)]
pub struct AlgebraMap<'a> {
    pub matrix: SparseMatrix,
    pub source: &'a StarAlgebra,
    pub target: &'a StarAlgebra,
}

impl<'a> AlgebraMap<'a> {
    pub fn new(matrix: SparseMatrix, source: &'a StarAlgebra, target: &'a StarAlgebra) -> Result<Self, AlgebraError> {
        if matrix.cols() != source.dim() || matrix.rows() != target.dim() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "map is {}x{}, algebras have dims {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        Ok(AlgebraMap { matrix, source, target })
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        self.matrix.apply(x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapMode {
    Homomorphism,
    StarHomomorphism,
    /// Bijective *-homomorphism.
    Isomorphism,
}

/// Unitality, multiplicativity on all basis pairs, and (by mode) star
/// compatibility and bijectivity.
pub fn verify_algebra_map(f: &AlgebraMap<'_>, mode: MapMode) -> Report {
    let (src, dst) = (f.source, f.target);
    let mut r = Report::new();
    let fu = f.apply(src.unit());
    r.check("unital", &fu == dst.unit(), || format!("f(1) = {}", dst.fmt(&fu)));
    let images: Vec<&SparseVec> = f.matrix.columns().iter().collect();
    let mut bad = Vec::new();
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            if f.apply(src.mult_basis(i, j)) != dst.mul(images[i], images[j]) {
                bad.push(format!("({}, {})", src.label(i), src.label(j)));
            }
        }
    }
    if bad.is_empty() {
        r.pass("multiplicative");
    } else {
        r.fail("multiplicative", format!("{} failing pairs, first {}", bad.len(), bad[..bad.len().min(4)].join(" ")));
    }
    if mode != MapMode::Homomorphism {
        let bad: Vec<usize> = (0..src.dim())
            .filter(|&i| f.apply(&src.star(&src.basis(i))) != dst.star(images[i]))
            .collect();
        r.check("star_compatible", bad.is_empty(), || {
            format!("f(x*) != f(x)* at {}", src.label(bad[0]))
        });
    }
    if mode == MapMode::Isomorphism {
        let rk = rank(&f.matrix);
        let ok = src.dim() == dst.dim() && rk == src.dim();
        r.check("bijective", ok, || format!("rank {rk}, dims {} -> {}", src.dim(), dst.dim()));
    }
    r
}

/// ℬ = A ⋊ ℤ₂ for an order-two automorphism `theta_hat` of `fa`.
///
/// Basis `[e_0 … e_{N-1}, e_0U … e_{N-1}U]` with `U x U = θ̂(x)`, `U² = 1`,
/// `U* = U`, hence `(e_i U)* = θ̂(e_i*) U`.
pub fn crossed_product_z2(fa: &StarAlgebra, theta_hat: &AlgebraMap<'_>) -> Result<StarAlgebra, AlgebraError> {
    let n = fa.dim();
    if theta_hat.source != fa || theta_hat.target != fa {
        return Err(AlgebraError::NotAutomorphism("map does not act on the given algebra".into()));
    }
    let rep = verify_algebra_map(theta_hat, MapMode::Isomorphism);
    if !rep.all_pass() {
        let w = rep.failures().next().map(|c| format!("{}: {:?}", c.name, c.witness)).unwrap();
        return Err(AlgebraError::NotAutomorphism(w));
    }
    let th = &theta_hat.matrix;
    if th.compose(th) != SparseMatrix::identity(n) {
        return Err(AlgebraError::NotAutomorphism("theta_hat does not square to the identity".into()));
    }
    let d = 2 * n;
    let mut mult = vec![SparseVec::zero(d); d * d];
    for i in 0..n {
        let ei = fa.basis(i);
        for j in 0..n {
            let m = fa.mult_basis(i, j);
            let mt = fa.mul(&ei, th.column(j));
            mult[i * d + j] = m.embed(d, 0);
            mult[i * d + n + j] = m.embed(d, n);
            mult[(n + i) * d + j] = mt.embed(d, n);
            mult[(n + i) * d + n + j] = mt.embed(d, 0);
        }
    }
    let star_cols: Vec<SparseVec> = (0..n)
        .map(|i| fa.star_matrix().column(i).embed(d, 0))
        .chain((0..n).map(|i| th.apply(fa.star_matrix().column(i)).embed(d, n)))
        .collect();
    let labels = fa.labels().iter().cloned().chain(fa.labels().iter().map(|l| format!("{l}U"))).collect();
    StarAlgebra::new(labels, mult, fa.unit().embed(d, 0), SparseMatrix::from_columns(d, star_cols))
}

/// The element `U = Σ_y e_y U` of a crossed product built on an algebra
/// whose unit is `Σ e_y`.
pub fn crossed_u(b: &StarAlgebra) -> SparseVec {
    let n = b.dim() / 2;
    b.unit().window(0, n).embed(b.dim(), n)
}

/// Matrix of μ: A⊗A → A.
pub fn multiplication_map(a: &StarAlgebra) -> SparseMatrix {
    SparseMatrix::from_columns(a.dim(), a.mult_table().to_vec())
}

/// A unital multiplicative functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub values: SparseVec,
}

impl Character {
    pub fn eval(&self, x: &SparseVec) -> Scalar {
        self.values.dot(x)
    }
}

/// Two-sided ideal generated by all commutators, as an echelon basis.
pub fn commutator_ideal(a: &StarAlgebra) -> Echelon {
    let d = a.dim();
    let mut ideal = Echelon::new(d);
    let mut queue = Vec::new();
    for i in 0..d {
        for j in 0..i {
            let c = a.mult_basis(i, j).sub(a.mult_basis(j, i));
            if ideal.insert(&c) {
                queue.push(c);
            }
        }
    }
    while let Some(v) = queue.pop() {
        for k in 0..d {
            let e = a.basis(k);
            for w in [a.mul(&e, &v), a.mul(&v, &e)] {
                if ideal.insert(&w) {
                    queue.push(w);
                }
            }
        }
    }
    ideal
}

/// All characters `A → ℚ(i)`.
///
/// Characters factor through `C = A / [A, A]`. On `C` they are exactly the
/// joint eigenvectors of the transposed left-multiplication operators,
/// normalized to 1 on the unit. Eigenvalues come from minimal polynomials
/// and rational root extraction; if some minimal polynomial does not split
/// the function errors rather than return a partial list.
pub fn characters(a: &StarAlgebra) -> Result<Vec<Character>, AlgebraError> {
    let d = a.dim();
    let rref = commutator_ideal(a).into_rref();
    let pivots: BTreeMap<usize, SparseVec> = rref.into_iter().collect();
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains_key(c)).collect();
    let r = free.len();
    if r == 0 {
        return Ok(Vec::new());
    }
    let pos: BTreeMap<usize, usize> = free.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    // quotient coordinates: reduce fully modulo the ideal, keep free columns
    let quot = |v: &SparseVec| -> SparseVec {
        let mut v = v.clone();
        for (p, row) in &pivots {
            let c = v.get(*p);
            if !c.is_zero() {
                v = v.add_scaled(row, &-c);
            }
        }
        SparseVec::from_pairs(r, v.iter().map(|(i, c)| (pos[&i], c.clone())))
    };
    let lift = |k: usize| a.basis(free[k]);
    // structure of C: left multiplication by each quotient basis element
    let left_ops: Vec<SparseMatrix> = (0..r)
        .map(|k| {
            let x = lift(k);
            SparseMatrix::from_columns(r, (0..r).map(|j| quot(&a.mul(&x, &lift(j)))).collect())
        })
        .collect();
    let unit_c = quot(a.unit());

    // joint eigenspaces of the transposed operators, refined one generator at a time
    let mut spaces: Vec<Vec<SparseVec>> = vec![(0..r).map(|k| SparseVec::basis(r, k)).collect()];
    for (k, op) in left_ops.iter().enumerate() {
        let roots = min_poly_roots(op, &unit_c, k, a.label(free[k]))?;
        let opt = op.transpose();
        let mut next = Vec::new();
        for space in &spaces {
            for lambda in &roots {
                let shifted = opt.sub(&SparseMatrix::identity(r).scale(lambda));
                let m = SparseMatrix::from_columns(r, space.iter().map(|v| shifted.apply(v)).collect());
                let coeffs = kernel_basis(&m);
                let sub: Vec<SparseVec> = coeffs
                    .iter()
                    .map(|c| {
                        c.iter().fold(SparseVec::zero(r), |acc, (i, x)| acc.add_scaled(&space[i], x))
                    })
                    .collect();
                if !sub.is_empty() {
                    next.push(sub);
                }
            }
        }
        spaces = next;
    }
    let mut out = Vec::new();
    for space in spaces {
        if space.len() != 1 {
            return Err(AlgebraError::NonSplit(format!("joint eigenspace of dimension {}", space.len())));
        }
        let f = &space[0];
        let at_unit = f.dot(&unit_c);
        let scale = at_unit.inv().ok_or_else(|| AlgebraError::NonSplit("eigenfunctional vanishes on 1".into()))?;
        let f = f.scale(&scale);
        // χ(e_i) = f(q(e_i))
        let values = SparseVec::from_pairs(d, (0..d).map(|i| (i, f.dot(&quot(&a.basis(i))))));
        out.push(Character { values });
    }
    for ch in &out {
        verify_character(a, ch).map_err(AlgebraError::NonSplit)?;
    }
    Ok(out)
}

/// Exhaustive multiplicativity and unitality.
pub fn verify_character(a: &StarAlgebra, ch: &Character) -> Result<(), String> {
    if !ch.eval(a.unit()).is_one() {
        return Err("value on the unit is not 1".into());
    }
    let v: Vec<Scalar> = (0..a.dim()).map(|i| ch.values.get(i)).collect();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if ch.eval(a.mult_basis(i, j)) != &v[i] * &v[j] {
                return Err(format!("not multiplicative on ({}, {})", a.label(i), a.label(j)));
            }
        }
    }
    Ok(())
}

/// Roots of the minimal polynomial of the operator `op` (left multiplication
/// by a quotient element), found from powers of the element itself.
fn min_poly_roots(op: &SparseMatrix, unit: &SparseVec, k: usize, label: &str) -> Result<Vec<Scalar>, AlgebraError> {
    let r = op.rows();
    // powers x^0 = 1, x^1, ...; x^j = op^j · 1
    let mut powers = vec![unit.clone()];
    let mut ech = Echelon::new(r);
    ech.insert(unit);
    loop {
        let next = op.apply(powers.last().unwrap());
        if ech.contains(&next) {
            // x^m = Σ c_j x^j
            let m = SparseMatrix::from_columns(r, powers.clone());
            let c = solve(&m, &next)?;
            let mut poly: Vec<Scalar> = (0..powers.len()).map(|j| -c.get(j)).collect();
            poly.push(Scalar::ONE);
            let roots = roots::gaussian_roots(&poly).map_err(|e| {
                AlgebraError::NonSplit(format!("minimal polynomial of basis element {k} ({label}): {e:?}"))
            })?;
            return Ok(roots.into_iter().map(|(x, _)| x).collect());
        }
        ech.insert(&next);
        powers.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::sn_group;

    fn s3() -> FiniteGroup {
        sn_group(3).unwrap().0
    }

    #[test]
    fn group_algebra_basics() {
        let (g2, _) = sn_group(2).unwrap();
        let a2 = group_algebra(&g2);
        let s1 = g2.parse_element("s1").unwrap();
        assert_eq!(a2.mult_basis(s1, s1), &a2.basis(g2.identity()));
        let g = s3();
        let a = group_algebra(&g);
        assert_eq!(a.dim(), 6);
        let (s1, s2) = (g.parse_element("s1").unwrap(), g.parse_element("s2").unwrap());
        let s12 = g.parse_element("s1.s2").unwrap();
        assert_eq!(a.mult_basis(s1, s2), &a.basis(s12));
        assert_eq!(a.star(&a.basis(s12)), a.basis(g.parse_element("s2.s1").unwrap()));
        assert!(verify_star_algebra(&a).all_pass());
    }

    #[test]
    fn function_algebra_basics() {
        let g = s3();
        let f = function_algebra(&g);
        let e = g.identity();
        assert_eq!(f.mult_basis(e, e), &f.basis(e));
        let (s1, s2) = (g.parse_element("s1").unwrap(), g.parse_element("s2").unwrap());
        assert!(f.mult_basis(s1, s2).is_zero());
        assert_eq!(f.unit().nnz(), 6);
        assert!(verify_star_algebra(&f).all_pass());
        assert_eq!(characters(&f).unwrap().len(), 6);
    }

    #[test]
    fn direct_sum_basics() {
        let a = group_algebra(&s3());
        let s = direct_sum(&a, &a);
        assert_eq!(s.dim(), 12);
        assert!(s.mult_basis(1, 7).is_zero());
        assert_eq!(s.unit(), &SparseVec::basis(12, 0).add(&SparseVec::basis(12, 6)));
        assert!(verify_star_algebra(&s).all_pass());
    }

    #[test]
    fn characters_of_s3() {
        let a = group_algebra(&s3());
        let chars = characters(&a).unwrap();
        assert_eq!(chars.len(), 2);
        let s = direct_sum(&a, &a);
        assert_eq!(characters(&s).unwrap().len(), 4);
    }

    #[test]
    fn characters_need_gaussian_values() {
        // ℂ[ℤ4] has characters with values ±i
        let a = group_algebra(&FiniteGroup::cyclic(4));
        let chars = characters(&a).unwrap();
        assert_eq!(chars.len(), 4);
        assert!(chars.iter().any(|c| c.values.get(1) == Scalar::i()));
    }

    #[test]
    fn characters_error_when_not_split() {
        // ℂ[ℤ3] needs cube roots of unity
        let a = group_algebra(&FiniteGroup::cyclic(3));
        assert!(matches!(characters(&a), Err(AlgebraError::NonSplit(_))));
    }

    #[test]
    fn swap_of_summands_is_iso() {
        let a = group_algebra(&s3());
        let s = direct_sum(&a, &a);
        let swap = SparseMatrix::from_columns(12, (0..12).map(|i| SparseVec::basis(12, (i + 6) % 12)).collect());
        let f = AlgebraMap::new(swap, &s, &s).unwrap();
        assert!(verify_algebra_map(&f, MapMode::Isomorphism).all_pass());
        let id = AlgebraMap::new(SparseMatrix::identity(6), &a, &a).unwrap();
        for m in [MapMode::Homomorphism, MapMode::StarHomomorphism, MapMode::Isomorphism] {
            assert!(verify_algebra_map(&id, m).all_pass());
        }
    }

    #[test]
    fn multiplication_map_unit() {
        let a = group_algebra(&s3());
        let mu = multiplication_map(&a);
        for x in 0..6 {
            let t = a.unit().tensor(&a.basis(x));
            assert_eq!(mu.apply(&t), a.basis(x));
        }
    }
}
