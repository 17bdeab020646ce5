//! Hopf *-algebras on top of [`StarAlgebra`]: the axiom suite, duality,
//! co-opposites, derived counits and antipodes, and Hopf morphisms.

mod grouplike;

pub use grouplike::{abelian_invariant_factors, group_likes, GroupLikeSet};

use thiserror::Error;

use crate::algebra::{
    multiplication_map, tensor_multiply, tensor_star, tensor_unit, verify_algebra_map, verify_star_algebra,
    AlgebraError, AlgebraMap, MapMode, StarAlgebra,
};
use crate::exactlin::{apply_tensor, flip, inverse, kernel_basis, solve, LinError, Scalar, SparseMatrix, SparseVec};
use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("input fails the Hopf axioms: {0}")]
    Axioms(String),
    #[error("no (unique) solution: {0}")]
    Underdetermined(String),
    #[error("inconsistent generator images: {0}")]
    InconsistentImages(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// A finite-dimensional Hopf *-algebra.
///
/// `comult` maps `A → A⊗A` (row-major tensor index), `counit` is a row
/// functional and `antipode` maps `A → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub alg: StarAlgebra,
    pub comult: SparseMatrix,
    pub counit: SparseVec,
    pub antipode: SparseMatrix,
}

impl HopfAlgebra {
    pub fn new(
        alg: StarAlgebra,
        comult: SparseMatrix,
        counit: SparseVec,
        antipode: SparseMatrix,
    ) -> Result<Self, HopfError> {
        let d = alg.dim();
        if comult.rows() != d * d || comult.cols() != d {
            return Err(HopfError::DimensionMismatch("comultiplication".into()));
        }
        if counit.dim() != d {
            return Err(HopfError::DimensionMismatch("counit".into()));
        }
        if antipode.rows() != d || antipode.cols() != d {
            return Err(HopfError::DimensionMismatch("antipode".into()));
        }
        Ok(HopfAlgebra { alg, comult, counit, antipode })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn delta(&self, x: &SparseVec) -> SparseVec {
        self.comult.apply(x)
    }

    pub fn delta_basis(&self, i: usize) -> &SparseVec {
        self.comult.column(i)
    }

    pub fn eps(&self, x: &SparseVec) -> Scalar {
        self.counit.dot(x)
    }

    pub fn s(&self, x: &SparseVec) -> SparseVec {
        self.antipode.apply(x)
    }

    pub fn label(&self, i: usize) -> &str {
        self.alg.label(i)
    }

    pub fn fmt(&self, x: &SparseVec) -> String {
        self.alg.fmt(x)
    }

    pub fn fmt2(&self, x: &SparseVec) -> String {
        self.alg.fmt_tensor(&self.alg, x)
    }

    /// Basis vector by label; panics on unknown labels.
    pub fn elem(&self, label: &str) -> SparseVec {
        let i = self.alg.index_of_label(label).unwrap_or_else(|| panic!("no basis element {label:?}"));
        self.alg.basis(i)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.alg = self.alg.with_labels(labels);
        self
    }
}

/// Runs every Hopf *-algebra axiom as an exact identity on basis elements.
pub fn verify_hopf_axioms(h: &HopfAlgebra) -> Report {
    let a = &h.alg;
    let d = a.dim();
    let mut r = Report::new();
    r.merge("algebra", verify_star_algebra(a));

    let first_bad = |pred: &dyn Fn(usize) -> bool| (0..d).find(|&i| !pred(i));
    let witness = |name: &str, i: Option<usize>| match i {
        None => Ok(()),
        Some(i) => Err(format!("{name} fails at {}", a.label(i))),
    };

    let coassoc = first_bad(&|i| {
        let v = h.delta_basis(i);
        apply_tensor(Some(&h.comult), None, v, d, d) == apply_tensor(None, Some(&h.comult), v, d, d)
    });
    r.record("coassociativity", witness("(Δ⊗id)Δ = (id⊗Δ)Δ", coassoc));

    let eps_mat = SparseMatrix::from_triples(1, d, h.counit.iter().map(|(k, c)| (0, k, c.clone())));
    let counit_left = first_bad(&|i| apply_tensor(Some(&eps_mat), None, h.delta_basis(i), d, d) == a.basis(i));
    r.record("counit_left", witness("(ε⊗id)Δ = id", counit_left));
    let counit_right = first_bad(&|i| apply_tensor(None, Some(&eps_mat), h.delta_basis(i), d, d) == a.basis(i));
    r.record("counit_right", witness("(id⊗ε)Δ = id", counit_right));

    let one = tensor_unit(a, a);
    let d1 = h.delta(a.unit());
    r.check("comult_unital", d1 == one, || format!("Δ(1) = {}", h.fmt2(&d1)));
    r.record("comult_multiplicative", {
        let mut out = Ok(());
        'outer: for i in 0..d {
            for j in 0..d {
                let lhs = h.delta(a.mult_basis(i, j));
                let rhs = tensor_multiply(a, a, h.delta_basis(i), h.delta_basis(j));
                if lhs != rhs {
                    out = Err(format!("Δ({} {}) != Δ({})Δ({})", a.label(i), a.label(j), a.label(i), a.label(j)));
                    break 'outer;
                }
            }
        }
        out
    });
    let comult_star = first_bad(&|i| h.delta(&a.star(&a.basis(i))) == tensor_star(a, a, h.delta_basis(i)));
    r.record("comult_star", witness("Δ(x*) = Δ(x)*", comult_star));

    let e1 = h.eps(a.unit());
    r.check("counit_unital", e1.is_one(), || format!("ε(1) = {e1}"));
    r.record("counit_multiplicative", {
        let mut out = Ok(());
        'outer: for i in 0..d {
            for j in 0..d {
                if h.eps(a.mult_basis(i, j)) != &h.counit.get(i) * &h.counit.get(j) {
                    out = Err(format!("ε({} {}) != ε({})ε({})", a.label(i), a.label(j), a.label(i), a.label(j)));
                    break 'outer;
                }
            }
        }
        out
    });
    let counit_star = first_bad(&|i| h.eps(&a.star(&a.basis(i))) == h.counit.get(i).conj());
    r.record("counit_star", witness("ε(x*) = conj ε(x)", counit_star));

    let mu = multiplication_map(a);
    let antipode_left = first_bad(&|i| {
        let v = apply_tensor(Some(&h.antipode), None, h.delta_basis(i), d, d);
        mu.apply(&v) == a.unit().scale(&h.counit.get(i))
    });
    r.record("antipode_left", witness("μ(S⊗id)Δ = ε·1", antipode_left));
    let antipode_right = first_bad(&|i| {
        let v = apply_tensor(None, Some(&h.antipode), h.delta_basis(i), d, d);
        mu.apply(&v) == a.unit().scale(&h.counit.get(i))
    });
    r.record("antipode_right", witness("μ(id⊗S)Δ = ε·1", antipode_right));
    r.record("antipode_antimultiplicative", {
        let mut out = Ok(());
        'outer: for i in 0..d {
            for j in 0..d {
                let lhs = h.s(a.mult_basis(i, j));
                let rhs = a.mul(h.antipode.column(j), h.antipode.column(i));
                if lhs != rhs {
                    out = Err(format!("S({} {}) != S({})S({})", a.label(i), a.label(j), a.label(j), a.label(i)));
                    break 'outer;
                }
            }
        }
        out
    });
    let s1 = h.s(a.unit());
    r.check("antipode_unital", &s1 == a.unit(), || format!("S(1) = {}", h.fmt(&s1)));
    r
}

/// First basis element where `flip∘Δ ≠ Δ`, if any.
pub fn is_cocommutative(h: &HopfAlgebra) -> Result<(), String> {
    let d = h.dim();
    for i in 0..d {
        let v = h.delta_basis(i);
        if &flip(v, d, d) != v {
            return Err(format!("flip Δ({}) != Δ({})", h.label(i), h.label(i)));
        }
    }
    Ok(())
}

/// `T = μ∘Δ`.
pub fn t_map(h: &HopfAlgebra) -> SparseMatrix {
    multiplication_map(&h.alg).compose(&h.comult)
}

/// Solves `(ε⊗id)Δ = id` for ε, requiring a unique solution.
pub fn derive_counit(alg: &StarAlgebra, comult: &SparseMatrix) -> Result<SparseVec, HopfError> {
    let d = alg.dim();
    // equation (i, b): Σ_a Δ(e_i)_{a,b} ε_a = [i = b]
    let mut triples = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..d {
        for (k, c) in comult.column(i).iter() {
            let (a, b) = (k / d, k % d);
            triples.push((i * d + b, a, c.clone()));
        }
        rhs.push((i * d + i, Scalar::ONE));
    }
    let m = SparseMatrix::from_triples(d * d, d, triples);
    let b = SparseVec::from_pairs(d * d, rhs);
    let eps = solve(&m, &b).map_err(|_| HopfError::Underdetermined("no counit satisfies (ε⊗id)Δ = id".into()))?;
    if !kernel_basis(&m).is_empty() {
        return Err(HopfError::Underdetermined("counit is not unique".into()));
    }
    Ok(eps)
}

/// Solves both antipode laws for S (`d²` unknowns), requiring uniqueness.
pub fn derive_antipode(alg: &StarAlgebra, comult: &SparseMatrix, counit: &SparseVec) -> Result<SparseMatrix, HopfError> {
    let d = alg.dim();
    // unknown S_{k,a} (coefficient of e_k in S(e_a)) has index a*d + k
    let mut triples = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..d {
        for (t, c) in comult.column(i).iter() {
            let (a, b) = (t / d, t % d);
            for k in 0..d {
                // left law: S(e_a) e_b, term e_k e_b
                for (l, x) in alg.mult_basis(k, b).iter() {
                    triples.push((i * d + l, a * d + k, x * c));
                }
                // right law: e_a S(e_b), term e_a e_k
                for (l, x) in alg.mult_basis(a, k).iter() {
                    triples.push((d * d + i * d + l, b * d + k, x * c));
                }
            }
        }
        let e = counit.get(i);
        for (l, u) in alg.unit().iter() {
            rhs.push((i * d + l, u * &e));
            rhs.push((d * d + i * d + l, u * &e));
        }
    }
    let m = SparseMatrix::from_triples(2 * d * d, d * d, triples);
    let b = SparseVec::from_pairs(2 * d * d, rhs);
    let x = solve(&m, &b).map_err(|_| HopfError::Underdetermined("no antipode solves the antipode laws".into()))?;
    if !kernel_basis(&m).is_empty() {
        return Err(HopfError::Underdetermined("antipode is not unique".into()));
    }
    Ok(SparseMatrix::from_triples(d, d, x.iter().map(|(u, c)| (u % d, u / d, c.clone())).collect::<Vec<_>>()))
}

/// Extends a map defined on generators multiplicatively along words.
///
/// `gens[t] = (element, image)`; `words[i]` lists generator indices whose
/// product must equal basis element `i` exactly (empty word = unit). The
/// image of `e_i` is the product of the generator images, computed with
/// `target_mul` starting from `target_unit`. Whether the result is a
/// homomorphism is left to the caller's verifier.
pub fn extend_multiplicatively<F>(
    alg: &StarAlgebra,
    gens: &[(SparseVec, SparseVec)],
    words: &[Vec<usize>],
    target_unit: &SparseVec,
    target_mul: F,
) -> Result<SparseMatrix, HopfError>
where
    F: Fn(&SparseVec, &SparseVec) -> SparseVec,
{
    if words.len() != alg.dim() {
        return Err(HopfError::DimensionMismatch("one word per basis element".into()));
    }
    let mut cols = Vec::with_capacity(words.len());
    for (i, w) in words.iter().enumerate() {
        let mut elem = alg.unit().clone();
        let mut img = target_unit.clone();
        for &t in w {
            elem = alg.mul(&elem, &gens[t].0);
            img = target_mul(&img, &gens[t].1);
        }
        if elem != alg.basis(i) {
            return Err(HopfError::InconsistentImages(format!(
                "word for {} evaluates to {}",
                alg.label(i),
                alg.fmt(&elem)
            )));
        }
        cols.push(img);
    }
    Ok(SparseMatrix::from_columns(target_unit.dim(), cols))
}

/// Δ on generators, extended multiplicatively; ε and S derived by solving
/// the counit and antipode laws.
pub fn hopf_from_generators(
    alg: StarAlgebra,
    gens: &[(SparseVec, SparseVec)],
    words: &[Vec<usize>],
) -> Result<HopfAlgebra, HopfError> {
    let unit2 = tensor_unit(&alg, &alg);
    let comult = extend_multiplicatively(&alg, gens, words, &unit2, |x, y| tensor_multiply(&alg, &alg, x, y))?;
    let counit = derive_counit(&alg, &comult)?;
    let antipode = derive_antipode(&alg, &comult, &counit)?;
    HopfAlgebra::new(alg, comult, counit, antipode)
}

/// The dual Hopf algebra on the dual basis `f_k`, labelled `⟨label⟩`.
///
/// Product is the transpose of Δ, coproduct the transpose of μ, unit ε,
/// counit evaluation at 1, antipode the transpose of S, and
/// `f*(x) = conj f(S(x)*)`.
pub fn dual_hopf(h: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    let rep = verify_hopf_axioms(h);
    if let Some(c) = rep.failures().next() {
        return Err(HopfError::Axioms(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    Ok(dual_unchecked(h))
}

pub(crate) fn dual_unchecked(h: &HopfAlgebra) -> HopfAlgebra {
    let a = &h.alg;
    let d = a.dim();
    let mult = h.comult.transpose().columns().to_vec();
    let star = a.star_matrix().conj().compose(&h.antipode).transpose();
    let labels = a.labels().iter().map(|l| format!("⟨{l}⟩")).collect();
    let alg = StarAlgebra::new(labels, mult, h.counit.clone(), star).expect("dual shapes are consistent");
    let comult = multiplication_map(a).transpose();
    debug_assert_eq!(comult.rows(), d * d);
    HopfAlgebra { alg, comult, counit: a.unit().clone(), antipode: h.antipode.transpose() }
}

/// Same algebra, flipped Δ, antipode `S⁻¹`.
pub fn co_opposite(h: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    let d = h.dim();
    let comult = SparseMatrix::from_columns(d * d, h.comult.columns().iter().map(|c| flip(c, d, d)).collect());
    let antipode = inverse(&h.antipode).map_err(|_| HopfError::Underdetermined("antipode is not invertible".into()))?;
    Ok(HopfAlgebra { alg: h.alg.clone(), comult, counit: h.counit.clone(), antipode })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismMode {
    /// Bijective, intertwines Δ, ε and S.
    HopfIso,
    /// Bijective algebra map with `(f⊗f)Δ = flip Δ' f` and counits matching.
    CoalgebraAntiIso,
    /// *-homomorphism intertwining Δ, ε and S (not necessarily bijective).
    HopfMorphism,
}

pub fn verify_hopf_morphism(f: &AlgebraMap<'_>, src: &HopfAlgebra, dst: &HopfAlgebra, mode: MorphismMode) -> Report {
    let mut r = Report::new();
    if f.source != &src.alg || f.target != &dst.alg {
        r.fail("dimensions", "map does not go between the given Hopf algebras");
        return r;
    }
    let amode = match mode {
        MorphismMode::HopfMorphism => MapMode::StarHomomorphism,
        _ => MapMode::Isomorphism,
    };
    r.merge("algebra", verify_algebra_map(f, amode));
    let (ds, dd) = (src.dim(), dst.dim());
    let m = &f.matrix;
    let mut bad = None;
    for i in 0..ds {
        let lhs = apply_tensor(Some(m), Some(m), src.delta_basis(i), ds, ds);
        let img = dst.delta(m.column(i));
        let rhs = match mode {
            MorphismMode::CoalgebraAntiIso => flip(&img, dd, dd),
            _ => img,
        };
        if lhs != rhs {
            bad = Some((i, lhs, rhs));
            break;
        }
    }
    let name = match mode {
        MorphismMode::CoalgebraAntiIso => "comult_anti_compatible",
        _ => "comult_compatible",
    };
    match bad {
        None => r.pass(name),
        Some((i, l, rr)) => r.fail(
            name,
            format!("at {}: (f⊗f)Δ = {} but expected {}", src.label(i), dst.fmt2(&l), dst.fmt2(&rr)),
        ),
    }
    let bad = (0..ds).find(|&i| dst.eps(m.column(i)) != src.counit.get(i));
    r.check("counit_compatible", bad.is_none(), || format!("ε(f({})) differs", src.label(bad.unwrap())));
    if mode != MorphismMode::CoalgebraAntiIso {
        let bad = (0..ds).find(|&i| m.apply(src.antipode.column(i)) != dst.s(m.column(i)));
        r.check("antipode_compatible", bad.is_none(), || {
            format!("f(S({})) != S(f({}))", src.label(bad.unwrap()), src.label(bad.unwrap()))
        });
    }
    r
}

/// The canonical evaluation map `h → dual(dual(h))`, which on dual-dual
/// bases is the identity matrix.
pub fn double_dual_map(h: &HopfAlgebra) -> SparseMatrix {
    SparseMatrix::identity(h.dim())
}

/// A group algebra with `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_hopf(g: &crate::groups::FiniteGroup) -> HopfAlgebra {
    let alg = crate::algebra::group_algebra(g);
    let n = g.order();
    let comult = SparseMatrix::from_columns(n * n, (0..n).map(|x| SparseVec::basis(n * n, x * n + x)).collect());
    let counit = SparseVec::from_pairs(n, (0..n).map(|x| (x, Scalar::ONE)));
    let antipode = alg.star_matrix().clone();
    HopfAlgebra { alg, comult, counit, antipode }
}

/// Functions on `G` with `Δ̂(δ_x) = Σ_{ab=x} δ_a⊗δ_b`, `ε̂(δ_x) = [x=e]`,
/// `Ŝ(δ_x) = δ_{x⁻¹}`.
pub fn function_hopf(g: &crate::groups::FiniteGroup) -> HopfAlgebra {
    let alg = crate::algebra::function_algebra(g);
    let n = g.order();
    let mut triples = Vec::new();
    for a in 0..n {
        for b in 0..n {
            triples.push((a * n + b, g.mul(a, b), Scalar::ONE));
        }
    }
    let comult = SparseMatrix::from_triples(n * n, n, triples);
    let counit = SparseVec::basis(n, g.identity());
    let antipode = SparseMatrix::from_columns(n, (0..n).map(|x| SparseVec::basis(n, g.inv(x))).collect());
    HopfAlgebra { alg, comult, counit, antipode }
}
