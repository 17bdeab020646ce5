//! Doubling of ℂ[G] along an order-two automorphism θ, built two ways:
//! dualizing the crossed product ℬ = Â ⋊ ℤ₂, and directly on ℂ[G]⊕ℂ[G].

use thiserror::Error;

use crate::algebra::{
    crossed_product_z2, crossed_u, direct_sum, function_algebra, group_algebra, AlgebraError, AlgebraMap,
    StarAlgebra,
};
use crate::exactlin::{apply_tensor, Scalar, SparseMatrix, SparseVec};
use crate::groups::{FiniteGroup, GroupAutomorphism, GroupError};
use crate::hopf::{
    dual_hopf, function_hopf, group_hopf, verify_hopf_axioms, verify_hopf_morphism, HopfAlgebra, HopfError,
    MorphismMode,
};
use crate::report::Report;

#[derive(Debug, Error)]
pub enum DoublingError {
    #[error("invalid automorphism: {0}")]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("construction fails the axiom suite: {0}")]
    Axioms(String),
}

/// A finite group with an automorphism of order at most two.
#[derive(Clone, Debug)]
pub struct DoublingInput {
    pub group: FiniteGroup,
    pub theta: GroupAutomorphism,
}

impl DoublingInput {
    pub fn new(group: FiniteGroup, theta: GroupAutomorphism) -> Result<Self, DoublingError> {
        theta.verify_involutive(&group)?;
        Ok(DoublingInput { group, theta })
    }
}

/// θ̂ on functions: `δ_x ↦ δ_{θ(x)}` (θ⁻¹ = θ).
pub fn dual_automorphism<'a>(fa: &'a StarAlgebra, g: &FiniteGroup, theta: &GroupAutomorphism) -> AlgebraMap<'a> {
    let n = g.order();
    let m = SparseMatrix::from_columns(n, (0..n).map(|x| SparseVec::basis(n, theta.apply(x))).collect());
    AlgebraMap::new(m, fa, fa).expect("θ̂ has the right shape")
}

/// ℬ with its Hopf structure and invariant functionals.
#[derive(Clone, Debug)]
pub struct CrossedHopf {
    pub b: HopfAlgebra,
    pub left_inv: SparseVec,
    pub right_inv: SparseVec,
}

/// Which of the printed formulas for ε_ℬ and S_ℬ to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CrossedVariant {
    /// `ε_ℬ(δ_yU) = 0`, as printed, instead of `[y = e]`.
    pub printed_counit: bool,
    /// `S_ℬ(δ_yU) = δ_{y⁻¹}U`, as printed, instead of `δ_{θ(y⁻¹)}U`.
    pub printed_antipode: bool,
}

/// ℬ = Â ⋊_θ̂ ℤ₂ with Δ_ℬ(δ_x) = Σ_{ab=x} δ_a⊗δ_b, Δ_ℬ(δ_yU) = Σ_{ab=y} δ_aU⊗δ_bU,
/// ε_ℬ(δ_x) = ε_ℬ(δ_xU) = [x=e], S_ℬ(δ_x) = δ_{x⁻¹}, S_ℬ(δ_yU) = δ_{θ(y⁻¹)}U.
/// The result is run through the axiom suite.
pub fn build_crossed_hopf(input: &DoublingInput) -> Result<CrossedHopf, DoublingError> {
    let c = crossed_hopf_variant(input, CrossedVariant::default())?;
    let rep = verify_hopf_axioms(&c.b);
    if let Some(f) = rep.failures().next() {
        return Err(DoublingError::Axioms(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())));
    }
    Ok(c)
}

/// Builds ℬ without running the axiom suite, optionally with the printed
/// counit and antipode.
pub fn crossed_hopf_variant(input: &DoublingInput, variant: CrossedVariant) -> Result<CrossedHopf, DoublingError> {
    let g = &input.group;
    let th = &input.theta;
    let n = g.order();
    let d = 2 * n;
    let fa = function_algebra(g);
    let theta_hat = dual_automorphism(&fa, g, th);
    let alg = crossed_product_z2(&fa, &theta_hat)?;
    let mut triples = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul(a, b);
            triples.push((a * d + b, ab, Scalar::ONE));
            triples.push(((n + a) * d + n + b, n + ab, Scalar::ONE));
        }
    }
    let comult = SparseMatrix::from_triples(d * d, d, triples);
    let e = g.identity();
    let counit = if variant.printed_counit {
        SparseVec::basis(d, e)
    } else {
        SparseVec::from_pairs(d, [(e, Scalar::ONE), (n + e, Scalar::ONE)])
    };
    let antipode = SparseMatrix::from_columns(
        d,
        (0..n)
            .map(|x| SparseVec::basis(d, g.inv(x)))
            .chain((0..n).map(|y| {
                let target = if variant.printed_antipode { g.inv(y) } else { th.apply(g.inv(y)) };
                SparseVec::basis(d, n + target)
            }))
            .collect(),
    );
    let b = HopfAlgebra::new(alg, comult, counit, antipode)?;
    let h = SparseVec::from_pairs(d, (0..n).map(|x| (x, Scalar::ONE)));
    Ok(CrossedHopf { b, left_inv: h.clone(), right_inv: h })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Left: `(id⊗f)∘Δ = 1·f`; right: `(f⊗id)∘Δ = 1·f`, as exact maps.
pub fn verify_invariant_functional(h: &HopfAlgebra, f: &SparseVec, side: Side) -> Report {
    let d = h.dim();
    let fm = SparseMatrix::from_triples(1, d, f.iter().map(|(k, c)| (0, k, c.clone())));
    let bad = (0..d).find(|&i| {
        let v = match side {
            Side::Left => apply_tensor(None, Some(&fm), h.delta_basis(i), d, d),
            Side::Right => apply_tensor(Some(&fm), None, h.delta_basis(i), d, d),
        };
        v != h.alg.unit().scale(&f.get(i))
    });
    let name = match side {
        Side::Left => "left_invariant",
        Side::Right => "right_invariant",
    };
    let mut r = Report::new();
    r.check(name, bad.is_none(), || format!("invariance fails at {}", h.label(bad.unwrap())));
    r
}

/// Labels `σ(x)` and `τ(x)` for the two copies of ℂ[G].
pub fn doubled_labels(g: &FiniteGroup) -> Vec<String> {
    g.labels()
        .iter()
        .map(|l| format!("σ({l})"))
        .chain(g.labels().iter().map(|l| format!("τ({l})")))
        .collect()
}

/// The doubling written down directly on ℂ[G]⊕ℂ[G] (ξ_x first, η_x second):
///
/// Δ(ξ_x) = ξ_x⊗ξ_x + η_x⊗η_{θ(x)}, Δ(η_x) = ξ_x⊗η_x + η_x⊗ξ_{θ(x)},
/// ε(ξ_x) = 1, ε(η_x) = 0, S(ξ_x) = ξ_{x⁻¹}, S(η_y) = η_{θ(y⁻¹)}.
///
/// No axioms are checked here; see [`verify_hopf_axioms`].
pub fn double_direct(input: &DoublingInput) -> HopfAlgebra {
    let g = &input.group;
    let th = &input.theta;
    let n = g.order();
    let d = 2 * n;
    let ga = group_algebra(g);
    let alg = direct_sum(&ga, &ga).with_labels(doubled_labels(g));
    let mut cols = Vec::with_capacity(d);
    for x in 0..n {
        cols.push(SparseVec::from_pairs(
            d * d,
            [(x * d + x, Scalar::ONE), ((n + x) * d + n + th.apply(x), Scalar::ONE)],
        ));
    }
    for x in 0..n {
        cols.push(SparseVec::from_pairs(
            d * d,
            [(x * d + n + x, Scalar::ONE), ((n + x) * d + th.apply(x), Scalar::ONE)],
        ));
    }
    let comult = SparseMatrix::from_columns(d * d, cols);
    let counit = SparseVec::from_pairs(d, (0..n).map(|x| (x, Scalar::ONE)));
    let antipode = SparseMatrix::from_columns(
        d,
        (0..n)
            .map(|x| SparseVec::basis(d, g.inv(x)))
            .chain((0..n).map(|y| SparseVec::basis(d, n + th.apply(g.inv(y)))))
            .collect(),
    );
    HopfAlgebra::new(alg, comult, counit, antipode).expect("shapes are consistent")
}

/// How η_y is paired with ℬ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingConvention {
    /// `η_y = h(· U δ_y)`.
    UDelta,
    /// `η_y = h(· δ_y U)`.
    DeltaU,
}

/// The functionals ξ_x = h(·δ_x) and η_y (per convention) written in the
/// dual basis of ℬ; column order ξ then η.
pub fn pairing_matrix(c: &CrossedHopf, convention: PairingConvention) -> SparseMatrix {
    let b = &c.b.alg;
    let d = b.dim();
    let n = d / 2;
    let u = crossed_u(b);
    let functional = |p: &SparseVec| {
        SparseVec::from_pairs(d, (0..d).map(|k| (k, c.left_inv.dot(&b.mul(&b.basis(k), p)))))
    };
    let mut cols = Vec::with_capacity(d);
    for x in 0..n {
        cols.push(functional(&b.basis(x)));
    }
    for y in 0..n {
        let p = match convention {
            PairingConvention::UDelta => b.mul(&u, &b.basis(y)),
            PairingConvention::DeltaU => b.basis(n + y),
        };
        cols.push(functional(&p));
    }
    SparseMatrix::from_columns(d, cols)
}

/// Dualizes ℬ and compares it with [`double_direct`] through the pairing.
pub fn verify_doubling_agreement(input: &DoublingInput, convention: PairingConvention) -> Report {
    let mut r = Report::new();
    let crossed = match build_crossed_hopf(input) {
        Ok(c) => c,
        Err(e) => {
            r.fail("crossed_product", e.to_string());
            return r;
        }
    };
    r.pass("crossed_product");
    let dual = match dual_hopf(&crossed.b) {
        Ok(d) => d,
        Err(e) => {
            r.fail("dual", e.to_string());
            return r;
        }
    };
    let direct = double_direct(input);
    let p = pairing_matrix(&crossed, convention);
    let is_perm = p.columns().iter().all(|c| c.nnz() == 1 && c.leading().unwrap().1.is_one())
        && crate::exactlin::rank(&p) == p.cols();
    r.check("pairing_is_basis_matching", is_perm, || "pairing functionals are not dual basis vectors".into());
    let shifted = (0..p.cols()).find(|&k| p.column(k).leading().map(|(i, _)| i) != Some(k));
    r.check("pairing_without_index_shift", shifted.is_none(), || {
        let k = shifted.unwrap();
        format!(
            "{} pairs with {}",
            direct.label(k),
            dual.label(p.column(k).leading().map(|(i, _)| i).unwrap_or(0))
        )
    });
    let f = AlgebraMap::new(p, &direct.alg, &dual.alg).expect("same dimension");
    r.merge("structure", verify_hopf_morphism(&f, &direct, &dual, MorphismMode::HopfIso));
    r
}

/// ξ_x ↦ x, η_y ↦ 0 as a Hopf morphism from the doubling onto ℂ[G].
pub fn quotient_map(input: &DoublingInput) -> SparseMatrix {
    let n = input.group.order();
    SparseMatrix::from_columns(
        n,
        (0..n).map(|x| SparseVec::basis(n, x)).chain((0..n).map(|_| SparseVec::zero(n))).collect(),
    )
}

pub fn verify_quotient_morphism(input: &DoublingInput) -> Report {
    let k = double_direct(input);
    let cg = group_hopf(&input.group);
    let q = quotient_map(input);
    let surj = crate::exactlin::rank(&q) == cg.dim();
    let f = AlgebraMap::new(q, &k.alg, &cg.alg).expect("shapes");
    let mut r = verify_hopf_morphism(&f, &k, &cg, MorphismMode::HopfMorphism);
    r.check("surjective", surj, || "quotient map is not onto".into());
    r
}

/// The printed ε_ℬ and S_ℬ next to the corrected ones, each run through
/// the axiom suite.
pub fn crossed_errata_report(input: &DoublingInput) -> Report {
    let mut r = Report::new();
    for (tag, variant, law) in [
        ("eps_B.printed", CrossedVariant { printed_counit: true, printed_antipode: false }, "counit_left"),
        ("eps_B.corrected", CrossedVariant::default(), "counit_left"),
        ("S_B.printed", CrossedVariant { printed_counit: false, printed_antipode: true }, "antipode_left"),
        ("S_B.corrected", CrossedVariant::default(), "antipode_left"),
    ] {
        match crossed_hopf_variant(input, variant) {
            Ok(c) => {
                let rep = verify_hopf_axioms(&c.b);
                let chk = rep.get(law).cloned().expect("suite has the law");
                match chk.witness {
                    None => r.pass(format!("{tag}.{law}")),
                    Some(w) => r.fail(format!("{tag}.{law}"), w),
                }
                if tag.ends_with("corrected") {
                    let n = rep.failures().count();
                    r.check(format!("{tag}.all_axioms"), n == 0, || format!("{n} axiom failures"));
                }
            }
            Err(e) => r.fail(format!("{tag}.{law}"), e.to_string()),
        }
    }
    r
}

/// ℂ[G] as functions dualized: the dual of (Â, Δ̂) is ℂ[G].
pub fn function_dual_is_group_algebra(g: &FiniteGroup) -> bool {
    match dual_hopf(&function_hopf(g)) {
        Ok(d) => d.alg.mult_table() == group_hopf(g).alg.mult_table(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{sn_group, w0_automorphism};

    fn s3_input() -> DoublingInput {
        let (g, _) = sn_group(3).unwrap();
        let th = w0_automorphism(&g);
        DoublingInput::new(g, th).unwrap()
    }

    #[test]
    fn z2_crossed_product() {
        let g = FiniteGroup::cyclic(2);
        let input = DoublingInput::new(g.clone(), GroupAutomorphism::identity(&g)).unwrap();
        let c = build_crossed_hopf(&input).unwrap();
        assert_eq!(c.b.dim(), 4);
        // Δ(δ_gU) = δ_eU⊗δ_gU + δ_gU⊗δ_eU
        let v = c.b.delta_basis(3);
        assert_eq!(v.nnz(), 2);
        assert_eq!(v.get(2 * 4 + 3), Scalar::ONE);
        assert_eq!(v.get(3 * 4 + 2), Scalar::ONE);
    }

    #[test]
    fn s3_crossed_product() {
        let input = s3_input();
        let c = build_crossed_hopf(&input).unwrap();
        assert_eq!(c.b.dim(), 12);
        for x in 0..6 {
            assert_eq!(c.left_inv.get(x), Scalar::ONE);
        }
        let s1 = input.group.parse_element("s1").unwrap();
        assert!(c.b.counit.get(6 + s1).is_zero());
        assert!(verify_invariant_functional(&c.b, &c.left_inv, Side::Left).all_pass());
        assert!(verify_invariant_functional(&c.b, &c.right_inv, Side::Right).all_pass());
        // U² = 1 and U δ_x U = δ_θ(x)
        let b = &c.b.alg;
        let u = crossed_u(b);
        assert_eq!(&b.mul(&u, &u), b.unit());
        let s2 = input.group.parse_element("s2").unwrap();
        assert_eq!(b.mul(&b.mul(&u, &b.basis(s1)), &u), b.basis(s2));
    }

    #[test]
    fn counit_is_not_invariant() {
        let (g, _) = sn_group(3).unwrap();
        let h = group_hopf(&g);
        assert!(!verify_invariant_functional(&h, &h.counit, Side::Left).all_pass());
        let f = function_hopf(&g);
        let sum = SparseVec::from_pairs(6, (0..6).map(|x| (x, Scalar::ONE)));
        assert!(verify_invariant_functional(&f, &sum, Side::Left).all_pass());
        assert!(verify_invariant_functional(&f, &sum, Side::Right).all_pass());
    }

    #[test]
    fn direct_doubling_s3() {
        let input = s3_input();
        let k = double_direct(&input);
        let rep = verify_hopf_axioms(&k);
        assert!(rep.all_pass(), "{}", rep.to_text());
        assert_eq!(k.fmt2(&k.delta(&k.elem("σ(s1)"))), "σ(s1)⊗σ(s1)+τ(s1)⊗τ(s2)");
        assert!(k.eps(&k.elem("τ(s1)")).is_zero());
        assert!(crate::hopf::is_cocommutative(&k).is_err());
    }

    #[test]
    fn agreement_s3() {
        let input = s3_input();
        let rep = verify_doubling_agreement(&input, PairingConvention::UDelta);
        assert!(rep.all_pass(), "{}", rep.to_text());
        let rep = verify_doubling_agreement(&input, PairingConvention::DeltaU);
        assert!(!rep.passed("pairing_without_index_shift"));
        assert!(!rep.all_pass());
    }

    #[test]
    fn quotient_and_errata() {
        let input = s3_input();
        assert!(verify_quotient_morphism(&input).all_pass());
        let r = crossed_errata_report(&input);
        assert!(!r.passed("eps_B.printed.counit_left"));
        assert!(r.passed("eps_B.corrected.counit_left"));
        assert!(!r.passed("S_B.printed.antipode_left"));
        assert!(r.passed("S_B.corrected.antipode_left"));
    }
}
