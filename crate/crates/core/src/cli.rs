//! The `hopf-forge` command line. [`run`] never panics on bad input and
//! returns the process exit code: 0 all checks pass, 1 some check fails,
//! 2 the input is unusable.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::doubling::{double_direct, DoublingInput};
use crate::groups::{cayley_length, conjugation_automorphism, sn_group, w0_automorphism, GeneratingSet, GroupAutomorphism};
use crate::hopf::verify_hopf_axioms;
use crate::json;
use crate::qiso::{qiso_group, s3_variants, verify_qiso, verify_s3_classification, QisoError, MAX_QISO_N};
use crate::report::Report;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hopf-forge", version, about = "Exact construction and verification of doubled group algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build the doubling of ℂ[S_n] along an involutive automorphism and write it as JSON.
    BuildDouble {
        /// `sn:<n>`
        #[arg(long)]
        group: String,
        /// `w0`, `id` or `conj:<word>`
        #[arg(long)]
        auto: String,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the Hopf *-algebra axiom suite on a JSON file.
    VerifyHopf {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build the quantum isometry group of S_n and run every check on it.
    VerifyQiso {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare the two quantum isometry groups of S₃.
    S3Report {
        #[arg(long)]
        json: bool,
        /// Also write k1.json and k2.json into this directory.
        #[arg(long)]
        export_dir: Option<PathBuf>,
    },
    /// Word length of an element of S_n.
    Length {
        #[arg(long)]
        n: usize,
        /// `coxeter` or a comma-separated list such as `s1,s1.s2,s2.s1`.
        #[arg(long, default_value = "coxeter")]
        gens: String,
        #[arg(long)]
        element: String,
    },
}

/// Input problems, reported on stderr with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<i32, InputError>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.cmd {
        Cmd::BuildDouble { group, auto, out: path } => build_double(&group, &auto, path, out),
        Cmd::VerifyHopf { path, json } => verify_hopf(&path, json, out),
        Cmd::VerifyQiso { n, json } => verify_qiso_cmd(n, json, out),
        Cmd::S3Report { json, export_dir } => s3_report(json, export_dir, out),
        Cmd::Length { n, gens, element } => length(n, &gens, &element, out),
    };
    match result {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn emit_report(r: &Report, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if json {
        writeln!(out, "{}", r.to_json())
    } else {
        out.write_all(r.to_text().as_bytes())?;
        writeln!(out, "{} checks, {} failed", r.len(), r.failures().count())
    }
}

fn exit_for(r: &Report) -> i32 {
    if r.all_pass() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn parse_group_spec(spec: &str) -> Result<usize, InputError> {
    spec.strip_prefix("sn:")
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|n| (2..=MAX_QISO_N).contains(n))
        .ok_or_else(|| InputError(format!("group must be sn:<n> with 2 <= n <= {MAX_QISO_N}, got {spec:?}")))
}

fn build_double(group: &str, auto: &str, path: Option<PathBuf>, out: &mut dyn Write) -> CmdResult {
    let n = parse_group_spec(group)?;
    let (g, _) = sn_group(n)?;
    let theta = match auto {
        "w0" => w0_automorphism(&g),
        "id" => GroupAutomorphism::identity(&g),
        other => match other.strip_prefix("conj:") {
            Some(word) => conjugation_automorphism(&g, g.parse_element(word)?),
            None => return Err(InputError(format!("automorphism must be w0, id or conj:<word>, got {other:?}"))),
        },
    };
    let input = DoublingInput::new(g, theta)?;
    let k = double_direct(&input);
    let rep = verify_hopf_axioms(&k);
    if !rep.all_pass() {
        emit_report(&rep, false, out)?;
        return Ok(EXIT_FAIL);
    }
    let text = json::emit(&k);
    match path {
        Some(p) => {
            std::fs::write(&p, text)?;
            writeln!(out, "wrote {} (dim {})", p.display(), k.dim())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_PASS)
}

fn verify_hopf(path: &PathBuf, as_json: bool, out: &mut dyn Write) -> CmdResult {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let h = json::parse(&text)?;
    let rep = verify_hopf_axioms(&h);
    emit_report(&rep, as_json, out)?;
    Ok(exit_for(&rep))
}

fn verify_qiso_cmd(n: usize, as_json: bool, out: &mut dyn Write) -> CmdResult {
    let b = match qiso_group(n) {
        Ok(b) => b,
        Err(QisoError::Suite(w)) => {
            let mut r = Report::new();
            r.fail("construction", w);
            emit_report(&r, as_json, out)?;
            return Ok(EXIT_FAIL);
        }
        Err(e) => return Err(e.into()),
    };
    let rep = verify_qiso(&b);
    emit_report(&rep, as_json, out)?;
    Ok(exit_for(&rep))
}

fn s3_report(as_json: bool, export: Option<PathBuf>, out: &mut dyn Write) -> CmdResult {
    let data = match s3_variants() {
        Ok(d) => d,
        Err(e) => {
            let mut r = Report::new();
            r.fail("construction", e.to_string());
            emit_report(&r, as_json, out)?;
            return Ok(EXIT_FAIL);
        }
    };
    if let Some(dir) = export {
        std::fs::write(dir.join("k1.json"), json::emit(&data.k1))?;
        std::fs::write(dir.join("k2.json"), json::emit(&data.k2))?;
    }
    let rep = verify_s3_classification(&data);
    let certified = rep.checks.iter().find(|c| c.name.starts_with("non_isomorphism_certified"));
    let ok = certified.is_some_and(|c| c.pass);
    if as_json {
        writeln!(out, "{}", rep.to_json())?;
    } else {
        emit_report(&rep, false, out)?;
        match certified {
            Some(c) if c.pass => {
                let path = c.name.rsplit('_').next().unwrap_or("?");
                writeln!(out, "CERTIFIED: K1 and K2 are not isomorphic (path {path})")?
            }
            _ => writeln!(out, "NOT CERTIFIED: no path separates K1 from K2")?,
        }
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}

fn length(n: usize, gens: &str, element: &str, out: &mut dyn Write) -> CmdResult {
    let (g, coxeter) = sn_group(n)?;
    let gens = if gens == "coxeter" { coxeter } else { GeneratingSet::parse(&g, gens)? };
    let x = g.parse_element(element)?;
    writeln!(out, "{}", cayley_length(&g, &gens, x)?)?;
    Ok(EXIT_PASS)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hopf-forge").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn length_examples() {
        assert_eq!(call(&["length", "--n", "3", "--gens", "coxeter", "--element", "s1.s2.s1"]).1, "3\n");
        assert_eq!(call(&["length", "--n", "3", "--gens", "s1,s1.s2,s2.s1", "--element", "s2"]).1, "2\n");
        assert_eq!(call(&["length", "--n", "4", "--element", "e"]).1, "0\n");
        assert_eq!(call(&["length", "--n", "3", "--gens", "s1", "--element", "s2"]).0, 2);
        assert_eq!(call(&["length", "--n", "3", "--element", "s7"]).0, 2);
    }

    #[test]
    fn input_errors() {
        assert_eq!(call(&["build-double", "--group", "sn:1", "--auto", "w0"]).0, 2);
        assert_eq!(call(&["build-double", "--group", "sn:3", "--auto", "conj:s1.s2"]).0, 2);
        assert_eq!(call(&["build-double", "--group", "sn:3", "--auto", "swap"]).0, 2);
        assert_eq!(call(&["verify-qiso", "--n", "9"]).0, 2);
        assert_eq!(call(&["verify-hopf", "/nonexistent/k.json"]).0, 2);
        assert_eq!(call(&["no-such-command"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn build_double_to_stdout_parses() {
        let (code, text, _) = call(&["build-double", "--group", "sn:2", "--auto", "id"]);
        assert_eq!(code, 0);
        assert_eq!(json::parse(&text).unwrap().dim(), 4);
    }
}
