use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use anyhow::Context;
use braidcyc::cocyclic::CocyclicReport;
use braidcyc::cohomology::CohomologyReport;
use braidcyc::pipeline::PipelineReport;
use braidcyc::report::CheckResult;
use braidcyc::triple::TripleReport;
use serde::Serialize;
use serde_json::{json, Value};

use crate::Common;

pub const OUT_DIR_ENV: &str = "BRAIDCYC_OUT_DIR";

pub enum Status {
    Pass,
    Fail,
}

/// 2 for anything about the input, 1 when a structure fails its axioms.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    use braidcyc::Error as E;
    match e.downcast_ref::<E>() {
        Some(E::InvalidStructure(_) | E::NotDiagonalizable(_)) => 1,
        _ => 2,
    }
}

pub fn read_input(path: &str) -> anyhow::Result<String> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    }
    Ok(text)
}

fn resolve(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

pub fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    let path = resolve(path);
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display()))?;
    }
    std::fs::write(&path, format!("{text}\n")).with_context(|| format!("writing {}", path.display()))
}

/// Writes to stdout; a closed pipe is not an error.
pub fn print(text: &str) -> anyhow::Result<()> {
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

/// `["1/2", "0", "-1"]` as `1/2 - ζ^2`.
fn scalar(coeffs: &[String]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        let c = c.strip_suffix("/1").unwrap_or(c);
        if c == "0" {
            continue;
        }
        let (neg, a) = match c.strip_prefix('-') {
            Some(a) => (true, a),
            None => (false, c),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = if a == "1" && k > 0 { "" } else { a };
        match k {
            0 => out.push_str(a),
            1 => out.push_str(&format!("{a}ζ")),
            _ => out.push_str(&format!("{a}ζ^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn vector(terms: &[(usize, Vec<String>)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|(i, c)| {
            let c = scalar(c);
            if c.contains(' ') {
                format!("({c})·e{i}")
            } else {
                format!("{c}·e{i}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub struct Output {
    command: &'static str,
    common: Common,
    lines: Vec<String>,
}

impl Output {
    pub fn new(command: &'static str, common: Common) -> Self {
        Output {
            command,
            common,
            lines: Vec::new(),
        }
    }

    pub fn line(&mut self, s: String) {
        self.lines.push(s);
    }

    fn check_lines(&mut self, title: &str, checks: &[CheckResult]) {
        let passed = checks.iter().filter(|c| c.pass).count();
        self.line(format!("{title}: {passed}/{} pass", checks.len()));
        for c in checks.iter().filter(|c| !c.pass) {
            let level = c.level.map(|l| format!(" [level {l}]")).unwrap_or_default();
            self.line(format!("  FAIL {}{level}", c.identity));
            if let Some(w) = &c.witness {
                self.line(format!("    on e{}: lhs = {}", w.basis_index, vector(&w.lhs)));
                self.line(format!("    on e{}: rhs = {}", w.basis_index, vector(&w.rhs)));
            }
            if let Some(e) = &c.error {
                self.line(format!("    {e}"));
            }
        }
    }

    pub fn finish<T: Serialize>(self, report: T, pass: bool) -> anyhow::Result<Status> {
        let value = json!({
            "command": self.command,
            "pass": pass,
            "report": report,
        });
        let text = serde_json::to_string_pretty(&value)?;
        if let Some(p) = &self.common.out {
            write_file(p, &text)?;
        }
        let mut body = if self.common.json {
            text
        } else {
            let mut t = self.lines.join("\n");
            t.push('\n');
            t.push_str(if pass { "all checks pass" } else { "some checks FAIL" });
            t
        };
        body.push('\n');
        print(&body)?;
        Ok(if pass { Status::Pass } else { Status::Fail })
    }

    pub fn checks(mut self, checks: &[CheckResult]) -> anyhow::Result<Status> {
        self.check_lines(self.command, checks);
        let pass = braidcyc::report::all_pass(checks);
        self.finish(checks, pass)
    }

    fn cocyclic_lines(&mut self, r: &CocyclicReport) {
        self.line(format!("level {}; dim Cⁿ = {:?}", r.level, r.dims));
        self.check_lines("Hopf axioms", &r.hopf_axioms);
        self.check_lines("modular pair", &r.pair);
        self.line(format!("rank(S̃² − Ad_σ) = {}", r.involution_defect));
        for h in &r.hypotheses {
            self.line(format!(
                "ψψ = id for ({}): {}; ψ = flip: {}",
                h.pair, h.result.symmetric_pair, h.result.flip
            ));
        }
        self.check_lines("cocyclic identities", &r.identities);
        self.line(format!("para-defect rank(τₙ^(n+1) − id) by level: {:?}", r.para_defects));
    }

    pub fn cocyclic(mut self, r: &CocyclicReport) -> anyhow::Result<Status> {
        self.cocyclic_lines(r);
        let pass = r.all_pass();
        self.finish(r, pass)
    }

    pub fn triple(mut self, r: &TripleReport) -> anyhow::Result<Status> {
        self.line(format!("level {}", r.level));
        self.line(format!("ambient dims  M⊗C^(n+1): {:?}", r.ambient_dims));
        self.line(format!("balanced dims M⊗_H C^(n+1): {:?}", r.quotient_dims));
        for h in &r.hypotheses {
            self.line(format!(
                "ψψ = id for ({}): {}; ψ = flip: {}",
                h.pair, h.result.symmetric_pair, h.result.flip
            ));
        }
        self.check_lines("structure", &r.structure);
        self.check_lines("operators descend to quotients", &r.inductions);
        self.check_lines("cocyclic identities on quotients", &r.identities);
        let pass = r.all_pass();
        self.finish(r, pass)
    }

    fn table(&mut self, r: &CohomologyReport) {
        self.line(format!("{:>6} | {:>8} | {:>8} | {:>4} | {:>4}", "degree", "dim Cⁿ", "dim λ", "HH", "HC"));
        for d in &r.degrees {
            self.line(format!(
                "{:>6} | {:>8} | {:>8} | {:>4} | {:>4}",
                d.degree, d.dim_cochains, d.dim_lambda, d.hh, d.hc
            ));
        }
        self.check_lines("complex checks (b² = 0, λ-closure)", &r.checks);
    }

    pub fn cohomology(mut self, r: &CohomologyReport) -> anyhow::Result<Status> {
        self.table(r);
        let pass = r.all_pass();
        self.finish(r, pass)
    }

    /// Para-cocyclic input: cyclic cohomology is not defined.
    pub fn refuse(mut self, r: &CocyclicReport) -> anyhow::Result<Status> {
        self.cocyclic_lines(r);
        self.line("τₙ^(n+1) ≠ id at some level: the object is only para-cocyclic, cyclic cohomology is not computed".into());
        self.finish(json!({ "cocyclic": r, "cohomology": Value::Null }), false)
    }

    pub fn pipeline(mut self, r: &PipelineReport) -> anyhow::Result<Status> {
        self.line(format!("C[Z_{}], level {}", r.n, r.level));
        self.check_lines("quasitriangular axioms", &r.quasitriangular);
        self.check_lines("transmutation", &r.transmutation);
        self.cocyclic_lines(&r.cocyclic);
        self.table(&r.cohomology);
        let pass = r.all_pass();
        self.finish(r, pass)
    }
}
