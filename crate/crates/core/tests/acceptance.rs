//! One line per acceptance criterion. Criteria 7 and 9 are known to fail
//! (one expected S₃ T₂ value is wrong and K₁ ≅ K₂ after all); any other
//! failure makes the run exit non-zero.

use std::process::Command;
use std::time::Instant;

use hopf_forge::doubling::{double_direct, verify_doubling_agreement, DoublingInput, PairingConvention};
use hopf_forge::groups::{
    cayley_lengths, longest_element, sn_group, w0_automorphism, FiniteGroup, GeneratingSet, GroupAutomorphism,
};
use hopf_forge::hopf::verify_hopf_axioms;
use hopf_forge::qiso::{
    qiso_group, s3_variants, verify_s3_classification, verify_section2_relations, verify_theorem_glow,
    verify_u_corepresentation, QisoBundle,
};
use hopf_forge::report::Report;
use hopf_forge::spectral::podles_rank;

const KNOWN_RED: [usize; 2] = [7, 9];

type Outcome = Result<String, String>;

fn first_failure(r: &Report) -> Option<String> {
    r.failures().next().map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
}

fn all_pass(what: &str, r: &Report) -> Result<(), String> {
    match first_failure(r) {
        None => Ok(()),
        Some(f) => Err(format!("{what} {f}")),
    }
}

fn bundles(ns: &[usize]) -> Result<Vec<QisoBundle>, String> {
    ns.iter().map(|&n| qiso_group(n).map_err(|e| format!("n={n}: {e}"))).collect()
}

fn c1() -> Outcome {
    let mut times = Vec::new();
    for n in 2..=5 {
        let start = Instant::now();
        let (g, _) = sn_group(n).map_err(|e| e.to_string())?;
        let th = w0_automorphism(&g);
        let k = double_direct(&DoublingInput::new(g, th).map_err(|e| e.to_string())?);
        all_pass(&format!("n={n}"), &verify_hopf_axioms(&k))?;
        let dt = start.elapsed().as_secs_f64();
        if dt >= 10.0 {
            return Err(format!("n={n} took {dt:.1}s"));
        }
        times.push(format!("n={n} {dt:.2}s"));
    }
    Ok(times.join(", "))
}

fn c2() -> Outcome {
    let z2 = FiniteGroup::cyclic(2);
    let mut inputs = vec![("Z2,id", DoublingInput::new(z2.clone(), GroupAutomorphism::identity(&z2)))];
    for n in [3, 4] {
        let (g, _) = sn_group(n).map_err(|e| e.to_string())?;
        let th = w0_automorphism(&g);
        inputs.push((if n == 3 { "S3,w0" } else { "S4,w0" }, DoublingInput::new(g, th)));
    }
    for (name, input) in inputs {
        let input = input.map_err(|e| e.to_string())?;
        all_pass(name, &verify_doubling_agreement(&input, PairingConvention::UDelta))?;
    }
    Ok("(Z2,id) (S3,w0) (S4,w0)".into())
}

fn c3() -> Outcome {
    for b in bundles(&[3, 4, 5])? {
        let n = b.n;
        for i in 1..n {
            let (s, t) = (b.sigma(i), b.tau(i));
            let ds = s.tensor(&s).add(&t.tensor(&b.tau(n - i)));
            let dt = s.tensor(&t).add(&t.tensor(&b.sigma(n - i)));
            if b.k.delta(&s) != ds || b.k.delta(&t) != dt {
                return Err(format!("n={n}, i={i}"));
            }
        }
    }
    Ok("n = 3, 4, 5".into())
}

fn c4() -> Outcome {
    let mut ranks = Vec::new();
    for b in bundles(&[2, 3, 4, 5])? {
        all_pass(&format!("n={} coaction", b.n), &b.coaction_report)?;
        all_pass(&format!("n={} isometric", b.n), &b.isometric_report)?;
        let want = b.order() * 2 * b.order();
        let got = podles_rank(&b.alpha);
        if got != want {
            return Err(format!("n={} Podleś rank {got} != {want}", b.n));
        }
        ranks.push(format!("n={} rank {got}", b.n));
    }
    Ok(ranks.join(", "))
}

fn c5() -> Outcome {
    let mut count = 0;
    for b in bundles(&[3, 4, 5])? {
        let r = verify_section2_relations(&b);
        all_pass(&format!("n={}", b.n), &r)?;
        all_pass(&format!("n={} u", b.n), &verify_u_corepresentation(&b))?;
        count += r.len();
    }
    Ok(format!("{count} relation families"))
}

fn c6() -> Outcome {
    for b in bundles(&[3, 4, 5])? {
        all_pass(&format!("n={}", b.n), &verify_theorem_glow(&b))?;
    }
    Ok("n = 3, 4, 5".into())
}

fn s3_report() -> Result<Report, String> {
    s3_variants().map(|d| verify_s3_classification(&d)).map_err(|e| e.to_string())
}

fn require(r: &Report, names: &[&str]) -> Result<(), String> {
    let bad: Vec<String> = names
        .iter()
        .filter(|n| !r.passed(n))
        .map(|n| match r.get(n) {
            Some(c) => format!("{n}: {}", c.witness.clone().unwrap_or_default()),
            None => format!("{n}: missing"),
        })
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad.join(" | "))
    }
}

fn c7(r: &Report) -> Outcome {
    require(r, &["t_tables.T1", "t_tables.T2", "kernel_T2.dimension", "kernel_T2.span"])?;
    Ok("tables and kernel match".into())
}

fn c8(r: &Report) -> Outcome {
    let names: Vec<&str> = r
        .checks
        .iter()
        .map(|c| c.name.as_str())
        .filter(|n| n.starts_with("identification.") || n.starts_with("cop_iso."))
        .collect();
    if names.len() < 10 {
        return Err(format!("only {} identification checks", names.len()));
    }
    require(r, &names)?;
    Ok(format!("{} checks", names.len()))
}

fn c9(r: &Report) -> Outcome {
    match r.checks.iter().find(|c| c.name.starts_with("non_isomorphism_certified")) {
        Some(c) if c.pass => Ok(c.name.clone()),
        _ => {
            let v = r.get("path_v.distinct_grouplike_types").and_then(|c| c.witness.clone()).unwrap_or_default();
            let vi = r.get("path_vi.no_explicit_isomorphism").and_then(|c| c.witness.clone()).unwrap_or_default();
            Err(format!("path v: {v}; path vi: {vi}"))
        }
    }
}

fn c10(r: &Report) -> Outcome {
    let pairs = [
        ("erratum.delta_minus_b.printed.coassociativity", "erratum.delta_minus_b.corrected."),
        ("erratum.crossed.eps_B.printed.counit_left", "erratum.crossed.eps_B.corrected."),
        ("erratum.crossed.S_B.printed.antipode_left", "erratum.crossed.S_B.corrected."),
        ("erratum.alpha1_s2.printed.coassociativity", "erratum.alpha1_s2.corrected."),
    ];
    let mut seen = Vec::new();
    for (printed, corrected) in pairs {
        let p = r.get(printed).ok_or(format!("{printed} missing"))?;
        let w = match (&p.pass, &p.witness) {
            (false, Some(w)) if !w.is_empty() => w.clone(),
            _ => return Err(format!("{printed} did not fail with a witness")),
        };
        let cs: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).filter(|n| n.starts_with(corrected)).collect();
        if cs.is_empty() {
            return Err(format!("no checks under {corrected}"));
        }
        require(r, &cs)?;
        seen.push(format!("{} [{w}]", printed.trim_start_matches("erratum.")));
    }
    Ok(seen.join("; "))
}

fn c11() -> Outcome {
    for n in 2..=5 {
        let (g, gens) = sn_group(n).map_err(|e| e.to_string())?;
        let l = cayley_lengths(&g, &gens).map_err(|e| e.to_string())?;
        for x in g.elements() {
            let inv = g.permutation(x).unwrap().inversions();
            if l[x] != inv {
                return Err(format!("n={n}: {} has length {} but {inv} inversions", g.label(x), l[x]));
            }
        }
        let w0 = g.index_of(&longest_element(n)).unwrap();
        if l[w0] != n * (n - 1) / 2 {
            return Err(format!("n={n}: ℓ(w0) = {}", l[w0]));
        }
    }
    let (g, _) = sn_group(3).map_err(|e| e.to_string())?;
    let gens = GeneratingSet::parse(&g, "s1,s1.s2,s2.s1").map_err(|e| e.to_string())?;
    let l = cayley_lengths(&g, &gens).map_err(|e| e.to_string())?;
    let at = |w: &str| l[g.parse_element(w).unwrap()];
    if at("s2") != 2 || at("s1.s2.s1") != 2 {
        return Err(format!("ℓ(s2) = {}, ℓ(s1s2s1) = {}", at("s2"), at("s1.s2.s1")));
    }
    Ok("n ≤ 5, w0, {s1,s1s2,s2s1}".into())
}

fn c12() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_hopf-forge"))
            .args(["verify-qiso", "--n", "4", "--json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if a.status.code() != Some(0) {
        return Err(format!("exit {:?}", a.status.code()));
    }
    if a.stdout != b.stdout {
        return Err("outputs differ".into());
    }
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() {
    let s3 = s3_report();
    let s3_dep = |f: fn(&Report) -> Outcome| -> Outcome {
        match &s3 {
            Ok(r) => f(r),
            Err(e) => Err(format!("S₃ data: {e}")),
        }
    };
    let results: Vec<(usize, &str, Outcome)> = vec![
        (1, "doubling correctness", c1()),
        (2, "two-path agreement", c2()),
        (3, "comultiplication on generators", c3()),
        (4, "isometric coaction", c4()),
        (5, "relation catalogue and u", c5()),
        (6, "theorem on a_i, b_i", c6()),
        (7, "S3 T tables and kernel", s3_dep(c7)),
        (8, "S3 identifications", s3_dep(c8)),
        (9, "non-isomorphism certificate", s3_dep(c9)),
        (10, "erratum arbitration", s3_dep(c10)),
        (11, "length functions", c11()),
        (12, "determinism", c12()),
    ];
    let mut unexpected = Vec::new();
    for (k, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {k:>2} PASS {name}: {detail}"),
            Err(w) => {
                println!("criterion {k:>2} FAIL {name}: {w}");
                if !KNOWN_RED.contains(k) {
                    unexpected.push(*k);
                }
            }
        }
    }
    let passed = results.iter().filter(|r| r.2.is_ok()).count();
    println!("{passed}/{} criteria pass; known failures {KNOWN_RED:?}", results.len());
    if !unexpected.is_empty() {
        println!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
