//! S₃ with two generating sets: the doublings K₁ (Coxeter generators) and
//! K₂ (generators s₁, s₁s₂, s₂s₁), their T maps, Fukuda's algebras A₊ and
//! A₋, and the checks that compare them.

use std::sync::Arc;

use super::{defbal_images, qiso_group, verify_blpsi, BetaForm, QisoBundle, QisoError};
use crate::algebra::{direct_sum, group_algebra, tensor_multiply, AlgebraMap, StarAlgebra};
use crate::doubling::{crossed_errata_report, double_direct, DoublingInput};
use crate::exactlin::{apply_tensor, kernel_basis, same_span, SparseMatrix, SparseVec};
use crate::groups::{conjugation_automorphism, sn_group, FiniteGroup, GeneratingSet};
use crate::hopf::{
    co_opposite, extend_multiplicatively, group_likes, hopf_from_generators, t_map, verify_hopf_axioms,
    verify_hopf_morphism, HopfAlgebra, HopfError, MorphismMode,
};
use crate::report::Report;
use crate::spectral::{
    build_spectral_triple, coaction_from_generator_images, coaction_from_images_unchecked, verify_coaction,
    verify_isometric, Coaction, SpectralTripleData,
};

/// Which comultiplication on Fukuda's presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FukudaSign {
    /// `Δ₊(b) = b⊗b`.
    Plus,
    /// `Δ₋(b) = bc⊗b + b(1−c)⊗b(2c−1)`.
    Minus,
    /// `Δ₋(b) = bc⊗b + b(1−c)⊗c`, the second leg as printed. Not coassociative.
    MinusPrinted,
}

/// `⟨a, b | a³ = b² = 1, bab = a²⟩` on `aⁱbʲ` (index `2i + j`), with
/// `(aⁱbʲ)(aᵏbˡ) = a^{i+k(−1)^j} b^{j+l}`.
pub fn fukuda_group() -> FiniteGroup {
    let labels = ["e", "b", "a", "ab", "a²", "a²b"].iter().map(|s| s.to_string()).collect();
    FiniteGroup::from_fn(labels, |x, y| {
        let (i, j) = (x / 2, x % 2);
        let (k, l) = (y / 2, y % 2);
        let e = if j == 0 { i + k } else { i + 3 - k };
        (e % 3) * 2 + (j + l) % 2
    })
    .expect("the presentation defines S₃")
}

/// The algebra `ℂ[G_F]c ⊕ ℂ[G_F](1−c)` with its generators `[a, b, c, 1−c]`
/// and one word per basis element.
fn fukuda_presentation() -> (StarAlgebra, Vec<SparseVec>, Vec<Vec<usize>>) {
    let g = fukuda_group();
    let ga = group_algebra(&g);
    let labels = g
        .labels()
        .iter()
        .map(|l| if l == "e" { "c".to_string() } else { format!("{l}c") })
        .chain(g.labels().iter().map(|l| if l == "e" { "(1-c)".to_string() } else { format!("{l}(1-c)") }))
        .collect();
    let alg = direct_sum(&ga, &ga).with_labels(labels);
    let b = |i: usize| alg.basis(i);
    let gens = vec![b(2).add(&b(8)), b(1).add(&b(7)), b(0), b(6)];
    let words = (0..12)
        .map(|t| {
            let x = t % 6;
            let mut w = vec![0; x / 2];
            w.extend(std::iter::repeat(1).take(x % 2));
            w.push(if t < 6 { 2 } else { 3 });
            w
        })
        .collect();
    (alg, gens, words)
}

fn fukuda_delta_images(alg: &StarAlgebra, gens: &[SparseVec], sign: FukudaSign) -> Vec<SparseVec> {
    let e = |i: usize| alg.basis(i);
    let (a, b, c, nc) = (&gens[0], &gens[1], &gens[2], &gens[3]);
    let a2 = alg.mul(a, a);
    let one = alg.unit();
    let delta_a = alg.mul(a, c).tensor(a).add(&alg.mul(a, nc).tensor(&a2));
    let delta_b = match sign {
        FukudaSign::Plus => b.tensor(b),
        FukudaSign::Minus => e(1).tensor(b).add(&e(7).tensor(&e(1).sub(&e(7)))),
        FukudaSign::MinusPrinted => e(1).tensor(b).add(&e(7).tensor(c)),
    };
    let delta_c = c.tensor(c).add(&nc.tensor(nc));
    let delta_nc = one.tensor(one).sub(&delta_c);
    vec![delta_a, delta_b, delta_c, delta_nc]
}

/// `Δ` for the given sign, extended multiplicatively from `a, b, c, 1−c`.
/// No axioms are checked.
pub fn fukuda_comult(sign: FukudaSign) -> Result<(StarAlgebra, SparseMatrix), HopfError> {
    let (alg, gens, words) = fukuda_presentation();
    let images = fukuda_delta_images(&alg, &gens, sign);
    let pairs: Vec<(SparseVec, SparseVec)> = gens.into_iter().zip(images).collect();
    let unit2 = alg.unit().tensor(alg.unit());
    let m = extend_multiplicatively(&alg, &pairs, &words, &unit2, |x, y| tensor_multiply(&alg, &alg, x, y))?;
    Ok((alg, m))
}

/// A₊ or A₋ with derived ε and S, axiom-checked. The printed Δ₋ is rejected.
pub fn fukuda_algebra(sign: FukudaSign) -> Result<HopfAlgebra, HopfError> {
    let (alg, gens, words) = fukuda_presentation();
    let images = fukuda_delta_images(&alg, &gens, sign);
    let pairs: Vec<(SparseVec, SparseVec)> = gens.into_iter().zip(images).collect();
    let h = hopf_from_generators(alg, &pairs, &words)?;
    let rep = verify_hopf_axioms(&h);
    if let Some(c) = rep.failures().next() {
        return Err(HopfError::Axioms(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    Ok(h)
}

/// `(A₊, A₋)`.
pub fn fukuda_algebras() -> Result<(HopfAlgebra, HopfAlgebra), HopfError> {
    Ok((fukuda_algebra(FukudaSign::Plus)?, fukuda_algebra(FukudaSign::Minus)?))
}

/// Coassociativity of `comult` checked on the given elements in order.
fn coassociative_on(alg: &StarAlgebra, comult: &SparseMatrix, xs: &[(&str, SparseVec)]) -> Result<(), String> {
    let d = alg.dim();
    for (name, x) in xs {
        let dx = comult.apply(x);
        let l = apply_tensor(Some(comult), None, &dx, d, d);
        let r = apply_tensor(None, Some(comult), &dx, d, d);
        if l != r {
            let diff = l.sub(&r);
            return Err(format!("fails at {name}: (Δ⊗id)Δ − (id⊗Δ)Δ has {} nonzero terms", diff.nnz()));
        }
    }
    Ok(())
}

/// The two quantum isometry groups of S₃, the Fukuda algebras and the
/// T maps.
#[derive(Clone, Debug)]
pub struct S3CaseData {
    pub bundle: QisoBundle,
    pub k1: Arc<HopfAlgebra>,
    pub alpha1: Coaction,
    pub triple1: SpectralTripleData,
    pub k2: Arc<HopfAlgebra>,
    pub alpha2: Coaction,
    pub triple2: SpectralTripleData,
    pub a_plus: HopfAlgebra,
    pub a_minus: HopfAlgebra,
    pub t1: SparseMatrix,
    pub t2: SparseMatrix,
}

/// K₂ with Δ₂ on `σ₁, σ₂, τ₁, τ₂` as displayed, ε and S derived.
pub fn build_k2(k1: &HopfAlgebra, triple: &SpectralTripleData) -> Result<HopfAlgebra, HopfError> {
    let alg = k1.alg.clone();
    let e = |l: &str| k1.elem(l);
    let (s1, s2, t1, t2) = (e("σ(s1)"), e("σ(s2)"), e("τ(s1)"), e("τ(s2)"));
    let gens = vec![
        (s1.clone(), s1.tensor(&s1).add(&t1.tensor(&t1))),
        (s2.clone(), s2.tensor(&s2).add(&e("τ(s1.s2.s1)").tensor(&t2))),
        (t1.clone(), t1.tensor(&s1).add(&s1.tensor(&t1))),
        (t2.clone(), t2.tensor(&s2).add(&e("σ(s1.s2.s1)").tensor(&t2))),
    ];
    let reduced = triple.reduced_words();
    let words = |offset: usize, unit: Vec<usize>| {
        reduced.iter().map(move |w| if w.is_empty() { unit.clone() } else { w.iter().map(|&t| t + offset).collect() })
    };
    let all: Vec<Vec<usize>> = words(0, vec![0, 0]).chain(words(2, vec![2, 2])).collect();
    let h = hopf_from_generators(alg, &gens, &all)?;
    let rep = verify_hopf_axioms(&h);
    if let Some(c) = rep.failures().next() {
        return Err(HopfError::Axioms(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    Ok(h)
}

fn suite_error(what: &str, r: &Report) -> Option<QisoError> {
    r.failures()
        .next()
        .map(|c| QisoError::Suite(format!("{what}.{}: {}", c.name, c.witness.clone().unwrap_or_default())))
}

/// Builds every object of the S₃ case study and checks both coactions.
pub fn s3_variants() -> Result<S3CaseData, QisoError> {
    let bundle = qiso_group(3)?;
    let k1 = bundle.k.clone();
    let k2 = Arc::new(build_k2(&k1, &bundle.triple)?);
    let g = &bundle.group;
    let gens2 = GeneratingSet::parse(g, "s1,s1.s2,s2.s1")?;
    let triple2 = build_spectral_triple(g, &gens2)?;
    let ga = group_algebra(g);
    let dm = g.order();
    let s = |l: &str| SparseVec::basis(dm, g.parse_element(l).expect("S₃ word"));
    let img_s1 = s("s1").tensor(&k2.elem("σ(s1)").add(&k2.elem("τ(s1)")));
    let img_s2 = s("s2").tensor(&k2.elem("σ(s2)")).add(&s("s1.s2.s1").tensor(&k2.elem("τ(s2)")));
    let images = vec![
        img_s1.clone(),
        tensor_multiply(&ga, &k2.alg, &img_s1, &img_s2),
        tensor_multiply(&ga, &k2.alg, &img_s2, &img_s1),
    ];
    let alpha2 = coaction_from_generator_images(&triple2, k2.clone(), &images)?;
    if let Some(e) = suite_error("alpha2.coaction", &verify_coaction(&alpha2)) {
        return Err(e);
    }
    if let Some(e) = suite_error("alpha2.isometric", &verify_isometric(&alpha2, &triple2)) {
        return Err(e);
    }
    let (a_plus, a_minus) = fukuda_algebras()?;
    Ok(S3CaseData {
        k1: k1.clone(),
        alpha1: bundle.alpha.clone(),
        triple1: bundle.triple.clone(),
        t1: t_map(&k1),
        t2: t_map(&k2),
        k2,
        alpha2,
        triple2,
        a_plus,
        a_minus,
        bundle,
    })
}

/// Sum of basis elements by label, `"σ(e)+τ(s1.s2)"`; `"0"` is zero.
fn parse_sum(h: &HopfAlgebra, text: &str) -> SparseVec {
    if text == "0" {
        return SparseVec::zero(h.dim());
    }
    text.split('+').fold(SparseVec::zero(h.dim()), |acc, l| acc.add(&h.elem(l)))
}

/// The printed T tables, as (argument, T₁ value, T₂ value).
const T_TABLE: [(&str, &str, &str); 6] = [
    ("σ(e)", "σ(e)+τ(e)", "σ(e)+τ(e)"),
    ("σ(s1)", "σ(e)+τ(s1.s2)", "σ(e)+τ(s1.s2)"),
    ("σ(s2)", "σ(e)+τ(s2.s1)", "σ(e)+τ(s2.s1)"),
    ("σ(s1.s2)", "σ(s2.s1)+τ(e)", "σ(s2.s1)+τ(e)"),
    ("σ(s2.s1)", "σ(s1.s2)+τ(e)", "σ(s1.s2)+τ(e)"),
    ("σ(s1.s2.s1)", "σ(e)+τ(e)", "σ(e)+τ(s1.s2)"),
];

/// The printed list spanning ker T₂.
pub const PRINTED_KERNEL_T2: [&str; 7] = [
    "σ(s2)-σ(s1.s2.s1)",
    "τ(e)",
    "τ(s1)",
    "τ(s2)",
    "τ(s1.s2)",
    "τ(s2.s1)",
    "τ(s1.s2.s1)",
];

fn printed_kernel(h: &HopfAlgebra) -> Vec<SparseVec> {
    PRINTED_KERNEL_T2
        .iter()
        .map(|t| match t.split_once('-') {
            Some((x, y)) => h.elem(x).sub(&h.elem(y)),
            None => h.elem(t),
        })
        .collect()
}

fn check_t_table(h: &HopfAlgebra, t: &SparseMatrix, column: usize) -> Result<(), String> {
    let mut bad = Vec::new();
    for row in T_TABLE {
        let want = parse_sum(h, if column == 1 { row.1 } else { row.2 });
        let got = t.apply(&h.elem(row.0));
        if got != want {
            bad.push(format!("T({}) = {} but table has {}", row.0, h.fmt(&got), h.fmt(&want)));
        }
    }
    let n = h.dim() / 2;
    for x in n..2 * n {
        let got = t.column(x);
        if !got.is_zero() {
            bad.push(format!("T({}) = {} but table has 0", h.label(x), h.fmt(got)));
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad.join("; "))
    }
}

/// ξ_x ↦ ξ_{gxg⁻¹}, η_x ↦ η_{hxh⁻¹}.
fn conjugation_candidate(group: &FiniteGroup, g: usize, h: usize) -> SparseMatrix {
    let n = group.order();
    let cg = conjugation_automorphism(group, g);
    let ch = conjugation_automorphism(group, h);
    SparseMatrix::from_columns(
        2 * n,
        (0..n)
            .map(|x| SparseVec::basis(2 * n, cg.apply(x)))
            .chain((0..n).map(|x| SparseVec::basis(2 * n, n + ch.apply(x))))
            .collect(),
    )
}

/// The identification `a ↦ σ₁σ₂+τ₁τ₂`, `b ↦ σ₁+τ₁`, `c ↦ e_σ`, `1−c ↦ e_τ`.
pub fn identification_map(a_plus: &HopfAlgebra, k: &HopfAlgebra) -> Result<SparseMatrix, HopfError> {
    let (_, gens, words) = fukuda_presentation();
    let images = [
        parse_sum(k, "σ(s1.s2)+τ(s1.s2)"),
        parse_sum(k, "σ(s1)+τ(s1)"),
        k.elem("σ(e)"),
        k.elem("τ(e)"),
    ];
    let pairs: Vec<(SparseVec, SparseVec)> = gens.into_iter().zip(images).collect();
    extend_multiplicatively(&a_plus.alg, &pairs, &words, k.alg.unit(), |x, y| k.alg.mul(x, y))
}

/// Runs the S₃ comparison in order: T tables, ker T₂, the identification
/// with A₊, group-like elements, the replay of the direct argument, and the
/// printed-versus-corrected formulas.
pub fn verify_s3_classification(data: &S3CaseData) -> Report {
    let mut r = Report::new();
    let (k1, k2) = (&*data.k1, &*data.k2);

    r.merge("alpha1.coaction", data.bundle.coaction_report.clone());
    r.merge("alpha2.coaction", verify_coaction(&data.alpha2));
    r.merge("alpha2.isometric", verify_isometric(&data.alpha2, &data.triple2));

    // (i) T tables
    r.record("t_tables.T1", check_t_table(k1, &data.t1, 1));
    r.record("t_tables.T2", check_t_table(k2, &data.t2, 2));

    // (ii) kernel of T₂
    let kernel = kernel_basis(&data.t2);
    let printed = printed_kernel(k2);
    r.check("kernel_T2.dimension", kernel.len() == printed.len(), || {
        format!("dim ker T2 = {}, printed list has {}", kernel.len(), printed.len())
    });
    r.check("kernel_T2.span", same_span(&kernel, &printed), || {
        let missing: Vec<String> = printed
            .iter()
            .filter(|v| !same_span(&kernel, &[kernel.clone(), vec![(*v).clone()]].concat()))
            .map(|v| k2.fmt(v))
            .collect();
        let t = data.t2.apply(&printed[0]);
        format!(
            "not in ker T2: {}; T2({}) = {}; computed kernel {}",
            missing.join(", "),
            k2.fmt(&printed[0]),
            k2.fmt(&t),
            kernel.iter().map(|v| k2.fmt(v)).collect::<Vec<_>>().join(", ")
        )
    });

    // (iii)/(iv) identification with A₊
    match identification_map(&data.a_plus, k2) {
        Ok(m) => {
            let f = AlgebraMap::new(m.clone(), &data.a_plus.alg, &k2.alg).expect("dimensions agree");
            r.merge("identification", verify_hopf_morphism(&f, &data.a_plus, k2, MorphismMode::CoalgebraAntiIso));
            match co_opposite(&data.a_plus) {
                Ok(cop) => {
                    let f = AlgebraMap::new(m, &cop.alg, &k2.alg).expect("dimensions agree");
                    r.merge("cop_iso", verify_hopf_morphism(&f, &cop, k2, MorphismMode::HopfIso));
                }
                Err(e) => r.fail("cop_iso", e.to_string()),
            }
        }
        Err(e) => r.fail("identification", e.to_string()),
    }

    // K₂ as a known doubling
    let (g, _) = sn_group(3).expect("S₃");
    let s1 = g.parse_element("s1").expect("s1");
    let cop = DoublingInput::new(g.clone(), conjugation_automorphism(&g, s1))
        .map_err(|e| e.to_string())
        .and_then(|inp| co_opposite(&double_direct(&inp)).map_err(|e| e.to_string()));
    r.record(
        "k2_is_cop_of_doubling_conj_s1",
        cop.and_then(|c| {
            if c.comult == k2.comult && c.counit == k2.counit && c.antipode == k2.antipode {
                Ok(())
            } else {
                Err("structure constants differ".into())
            }
        }),
    );

    // (v) group-like elements
    let gl = (group_likes(k1), group_likes(k2));
    let certified_v = match &gl {
        (Ok(g1), Ok(g2)) => {
            let tag = |s: &crate::hopf::GroupLikeSet| s.type_tag.clone().unwrap_or_else(|| "nonabelian".into());
            let (t1, t2) = (tag(g1), tag(g2));
            r.check("path_v.grouplike_orders", g1.order() == 4 && g2.order() == 4, || {
                format!("orders ({}, {})", g1.order(), g2.order())
            });
            let distinct = t1 != t2 || g1.order() != g2.order();
            r.check("path_v.distinct_grouplike_types", distinct, || {
                format!("both group-like groups are {t1} (K1: {t1}, K2: {t2})")
            });
            distinct
        }
        (a, b) => {
            let w = [a.as_ref().err(), b.as_ref().err()].iter().flatten().map(|e| e.to_string()).collect::<Vec<_>>();
            r.fail("path_v.grouplike_orders", w.join("; "));
            false
        }
    };

    // (vi) replay of the direct argument
    let certified_vi = replay_direct_argument(&mut r, data, &g);

    r.check("certified_by_path_v", certified_v, || "group-like groups are isomorphic".into());
    r.check("certified_by_path_vi", certified_vi, || "replay did not reach a contradiction".into());
    let path = match (certified_v, certified_vi) {
        (true, _) => Some("v"),
        (false, true) => Some("vi"),
        _ => None,
    };
    match path {
        Some(p) => r.pass(format!("non_isomorphism_certified.path_{p}")),
        None => r.fail("non_isomorphism_certified", "neither path certifies K1 ≇ K2"),
    }

    errata(&mut r, data);
    r
}

/// Returns whether the replay reaches a contradiction.
fn replay_direct_argument(r: &mut Report, data: &S3CaseData, g: &FiniteGroup) -> bool {
    let (k1, k2) = (&*data.k1, &*data.k2);
    let one = k1.alg.unit();
    let e_sigma = k1.elem("σ(e)");
    let w0 = k1.elem("σ(s1.s2.s1)");
    let ok = &data.t1.apply(&e_sigma) == one && &data.t1.apply(&w0) == one && &data.t2.apply(&e_sigma) == one;
    r.check("path_vi.unit_preimages", ok, || {
        format!(
            "T1(e_σ) = {}, T1(σ1σ2σ1) = {}, T2(e_σ) = {}",
            k1.fmt(&data.t1.apply(&e_sigma)),
            k1.fmt(&data.t1.apply(&w0)),
            k2.fmt(&data.t2.apply(&e_sigma))
        )
    });

    // φ(σ₁σ₂σ₁) = e_σ + λv + (τ-part) with v spanning ker T₂ ∩ first copy.
    // Squaring gives e_σ + 2λv + λ²v² in the first copy, which must lie in
    // e_σ + span{v}: λ is forced to 0 only if v² ∉ span{v}.
    let n = k2.dim() / 2;
    let sigma_part = SparseMatrix::from_columns(k2.dim(), (0..n).map(|x| data.t2.column(x).clone()).collect());
    let vs: Vec<SparseVec> = kernel_basis(&sigma_part).into_iter().map(|v| v.with_dim(k2.dim())).collect();
    let forced = match vs.as_slice() {
        [v] => {
            let v2 = k2.alg.mul(v, v);
            let free = same_span(&[v.clone()], &[v.clone(), v2.clone()]);
            r.check("path_vi.lambda_forced_zero", !free, || {
                format!("v = {}: v² = {} lies in span{{v}}, so λ is unconstrained", k2.fmt(v), k2.fmt(&v2))
            });
            !free
        }
        other => {
            r.fail("path_vi.lambda_forced_zero", format!("ker T2 ∩ first copy has dimension {}", other.len()));
            false
        }
    };

    // Any explicit isomorphism refutes the argument outright.
    let mut witness = None;
    'outer: for a in g.elements() {
        for b in g.elements() {
            let m = conjugation_candidate(g, a, b);
            let f = AlgebraMap::new(m.clone(), &k1.alg, &k2.alg).expect("same algebra");
            if verify_hopf_morphism(&f, k1, k2, MorphismMode::HopfIso).all_pass() {
                witness = Some((a, b, m));
                break 'outer;
            }
        }
    }
    r.check("path_vi.no_explicit_isomorphism", witness.is_none(), || {
        let (a, b, _) = witness.as_ref().unwrap();
        format!(
            "ξ_x ↦ ξ_{{gxg⁻¹}}, η_x ↦ η_{{hxh⁻¹}} with g = {}, h = {} is a Hopf isomorphism K1 → K2",
            g.label(*a),
            g.label(*b)
        )
    });
    if let Some((_, _, m)) = &witness {
        let lhs = m.compose(&data.t1);
        let rhs = data.t2.compose(m);
        r.check("path_vi.witness_intertwines_T", lhs == rhs, || "φT1 != T2φ".into());
        let img = m.apply(&w0);
        r.check("path_vi.witness_moves_longest", img != e_sigma, || "φ(σ1σ2σ1) = e_σ".into());
    }
    forced && witness.is_none()
}

fn errata(r: &mut Report, data: &S3CaseData) {
    let b = &data.bundle;
    let k1 = &data.k1;
    let g = &b.group;
    let dm = g.order();
    let s = |l: &str| SparseVec::basis(dm, g.parse_element(l).expect("S₃ word"));

    // α₁(s₂)
    let corrected = defbal_images(&b.triple, k1);
    let mut printed = corrected.clone();
    printed[1] = s("s1").tensor(&k1.elem("σ(s2)")).add(&s("s1").tensor(&k1.elem("τ(s1)")));
    for (tag, images) in [("printed", printed), ("corrected", corrected)] {
        match coaction_from_images_unchecked(&b.triple, k1.clone(), &images) {
            Ok(c) => r.merge(&format!("erratum.alpha1_s2.{tag}"), verify_coaction(&c)),
            Err(e) => r.fail(format!("erratum.alpha1_s2.{tag}"), e.to_string()),
        }
    }

    // Δ₋(b)
    match fukuda_comult(FukudaSign::MinusPrinted) {
        Ok((alg, m)) => {
            let (_, gens, _) = fukuda_presentation();
            let xs = [("a", gens[0].clone()), ("b", gens[1].clone()), ("c", gens[2].clone())];
            r.record("erratum.delta_minus_b.printed.coassociativity", coassociative_on(&alg, &m, &xs));
        }
        Err(e) => r.fail("erratum.delta_minus_b.printed.coassociativity", e.to_string()),
    }
    r.merge("erratum.delta_minus_b.corrected", verify_hopf_axioms(&data.a_minus));

    // ε_ℬ, S_ℬ
    match DoublingInput::new(g.clone(), b.theta.clone()) {
        Ok(inp) => r.merge("erratum.crossed", crossed_errata_report(&inp)),
        Err(e) => r.fail("erratum.crossed", e.to_string()),
    }

    // β in α = ψ + (θ⊗β)ψ
    r.record("erratum.beta.printed.blpsi", verify_blpsi(b, BetaForm::Printed));
    r.record("erratum.beta.corrected.blpsi", verify_blpsi(b, BetaForm::Swapped));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::is_cocommutative;

    #[test]
    fn fukuda_group_relations() {
        let g = fukuda_group();
        let a = g.index_of_label("a").unwrap();
        let b = g.index_of_label("b").unwrap();
        assert_eq!(g.product(&[a, a, a]), g.identity());
        assert_eq!(g.product(&[b, b]), g.identity());
        assert_eq!(g.product(&[b, a, b]), g.index_of_label("a²").unwrap());
        assert!(!g.is_abelian());
    }

    #[test]
    fn fukuda_plus_minus() {
        let (p, m) = fukuda_algebras().unwrap();
        let c = p.elem("c");
        let nc = p.elem("(1-c)");
        assert_eq!(p.delta(&c), c.tensor(&c).add(&nc.tensor(&nc)));
        let b = p.elem("bc").add(&p.elem("b(1-c)"));
        assert_eq!(p.delta(&b), b.tensor(&b));
        assert!(!m.delta(&b).eq(&b.tensor(&b)));
        assert!(is_cocommutative(&p).is_err());
        assert!(is_cocommutative(&m).is_err());
        assert!(fukuda_algebra(FukudaSign::MinusPrinted).is_err());
    }

    #[test]
    fn printed_delta_minus_fails_at_b() {
        let (alg, m) = fukuda_comult(FukudaSign::MinusPrinted).unwrap();
        let (_, gens, _) = fukuda_presentation();
        let xs = [("a", gens[0].clone()), ("b", gens[1].clone()), ("c", gens[2].clone())];
        let w = coassociative_on(&alg, &m, &xs).unwrap_err();
        assert!(w.starts_with("fails at b"), "{w}");
    }

    #[test]
    fn k2_display_and_t_maps() {
        let d = s3_variants().unwrap();
        let k2 = &d.k2;
        assert_eq!(k2.fmt2(&k2.delta(&k2.elem("τ(s2)"))), "σ(s1.s2.s1)⊗τ(s2)+τ(s2)⊗σ(s2)");
        assert_eq!(d.alpha2.fmt_image(d.triple2.group.parse_element("s2").unwrap()), "s2⊗σ(s2)+s1.s2.s1⊗τ(s2)");
        assert_eq!(d.alpha1.fmt_image(d.triple1.group.parse_element("s2").unwrap()), "s2⊗σ(s2)+s1⊗τ(s1)");
        assert_eq!(k2.fmt(&d.t2.apply(&k2.elem("σ(s2.s1)"))), "σ(s1.s2)+τ(e)");
        assert_eq!(d.k1.fmt(&d.t1.apply(&d.k1.elem("σ(s1.s2.s1)"))), "σ(e)+τ(e)");
        assert!(d.t1.apply(&d.k1.elem("τ(s1)")).is_zero());
        let s2 = d.triple2.group.parse_element("s2").unwrap();
        let w0 = d.triple2.group.parse_element("s1.s2.s1").unwrap();
        assert_eq!((d.triple2.lengths[s2], d.triple2.lengths[w0]), (2, 2));
    }
}
