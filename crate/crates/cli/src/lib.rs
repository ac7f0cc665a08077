//! Parsing, formatting, and dispatch for the `garside` command-line tool.

use garside_core::braid::is_left_weighted;
use garside_core::centralizer::centralizer_generators_capped;
use garside_core::conjugacy::{cycling, slide_to_circuit, DEFAULT_TRAJECTORY_CAP};
use garside_core::genericity::run_experiment;
use garside_core::uss::{build_uss_graph, check_minimal_uss, UssGraph};
use garside_core::{BraidWord, Error, NormalForm, StrandCount};
use std::collections::HashSet;

/// Exit status contract: 0 success, 1 input error, 2 cap diagnostic.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CAP: i32 = 2;

/// Classify library errors into the exit-code contract.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::SlidingCapExceeded { .. }
        | Error::OrbitCapExceeded { .. }
        | Error::PullbackCapExceeded { .. }
        | Error::VertexCapExceeded { .. }
        | Error::RedrawCapExceeded { .. }
        | Error::BruteForceBoundExceeded { .. }
        | Error::OracleBoundExceeded { .. } => EXIT_CAP,
        _ => EXIT_INPUT,
    }
}

/// Parse `"n: i₁ i₂ …"` into a braid word. Tokens are nonzero integers
/// (`-i` for `σ_i⁻¹`), `D` for `Δ`, and `D^k` for `Δ^k` (any integer `k`).
/// Errors carry the offending token position.
pub fn parse_braid(text: &str) -> Result<BraidWord, String> {
    let (head, rest) = text
        .split_once(':')
        .ok_or_else(|| "missing ':' after the strand count header".to_string())?;
    let n_val: usize = head
        .trim()
        .parse()
        .map_err(|_| format!("malformed strand count {:?}", head.trim()))?;
    let n = StrandCount::new(n_val).map_err(|e| e.to_string())?;
    let delta_word: Vec<i64> = garside_core::delta(n)
        .canonical_word()
        .into_iter()
        .map(|i| i as i64)
        .collect();
    let mut letters: Vec<i64> = Vec::new();
    for (pos, tok) in rest.split_whitespace().enumerate() {
        let pos = pos + 1;
        if let Some(stripped) = tok.strip_prefix('D') {
            let k: i64 = if stripped.is_empty() {
                1
            } else {
                stripped
                    .strip_prefix('^')
                    .and_then(|e| e.parse().ok())
                    .ok_or_else(|| format!("token {pos}: malformed Δ power {tok:?}"))?
            };
            if k >= 0 {
                for _ in 0..k {
                    letters.extend(&delta_word);
                }
            } else {
                for _ in 0..-k {
                    letters.extend(delta_word.iter().rev().map(|i| -i));
                }
            }
            continue;
        }
        let i: i64 = tok
            .parse()
            .map_err(|_| format!("token {pos}: not an integer or Δ token: {tok:?}"))?;
        if i == 0 {
            return Err(format!("token {pos}: generator index must be nonzero"));
        }
        if i.unsigned_abs() as usize >= n_val {
            return Err(format!(
                "token {pos}: generator index {} out of range for {} strands",
                i, n_val
            ));
        }
        letters.push(i);
    }
    BraidWord::from_signed(n, &letters).map_err(|e| e.to_string())
}

/// `"D^p . w(x₁) . … . w(x_l)"`; the `D^p` part is omitted when `p = 0` and
/// factors exist, and printed alone (`"D^0"` for the identity) otherwise.
pub fn format_normal_form(x: &NormalForm) -> String {
    let mut parts: Vec<String> = Vec::new();
    if x.inf() != 0 || x.factors().is_empty() {
        parts.push(format!("D^{}", x.inf()));
    }
    for f in x.factors() {
        parts.push(
            f.canonical_word()
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
    }
    parts.join(" . ")
}

fn nf_json(x: &NormalForm) -> serde_json::Value {
    serde_json::json!({
        "n": x.n().get(),
        "inf": x.inf(),
        "factors": x.factors().iter().map(|f| f.canonical_word()).collect::<Vec<_>>(),
        "word": x.as_signed_word(),
    })
}

/// Number of distinct cycling orbits among the graph vertices.
fn orbit_count(graph: &UssGraph) -> usize {
    let mut seen: HashSet<usize> = HashSet::new();
    let mut orbits = 0;
    for v in 0..graph.vertices.len() {
        if seen.contains(&v) {
            continue;
        }
        orbits += 1;
        let mut cur = graph.vertices[v].clone();
        loop {
            let id = graph.vertex_id(&cur).expect("orbit stays inside the USS");
            if !seen.insert(id) {
                break;
            }
            cur = cycling(&cur).element;
        }
    }
    orbits
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub struct RunOutput {
    pub stdout: String,
    /// Contents for `--out`, when the verb produces a file artifact.
    pub file: Option<String>,
}

fn ok(stdout: String) -> Result<RunOutput, (i32, String)> {
    Ok(RunOutput { stdout, file: None })
}

fn lib_err(e: Error) -> (i32, String) {
    (exit_code_for(&e), e.to_string())
}

pub fn run_nf(word: &BraidWord, format: Format) -> Result<RunOutput, (i32, String)> {
    let x = NormalForm::from_word(word);
    match format {
        Format::Text => ok(format_normal_form(&x)),
        Format::Json => ok(nf_json(&x).to_string()),
    }
}

pub fn run_inv(word: &BraidWord, format: Format) -> Result<RunOutput, (i32, String)> {
    let x = NormalForm::from_word(word).invert();
    debug_assert!(x
        .factors()
        .windows(2)
        .all(|w| is_left_weighted(&w[0], &w[1])));
    match format {
        Format::Text => ok(format_normal_form(&x)),
        Format::Json => ok(nf_json(&x).to_string()),
    }
}

pub fn run_sc(word: &BraidWord, format: Format) -> Result<RunOutput, (i32, String)> {
    let x = NormalForm::from_word(word);
    let s = slide_to_circuit(&x, DEFAULT_TRAJECTORY_CAP).map_err(lib_err)?;
    match format {
        Format::Text => ok(format!(
            "representative: {}\nconjugator: {}",
            format_normal_form(&s.representative),
            format_normal_form(&s.conjugator)
        )),
        Format::Json => ok(serde_json::json!({
            "representative": nf_json(&s.representative),
            "conjugator": nf_json(&s.conjugator),
        })
        .to_string()),
    }
}

pub fn run_uss(
    word: &BraidWord,
    format: Format,
    cap: usize,
    want_file: bool,
) -> Result<RunOutput, (i32, String)> {
    let x = NormalForm::from_word(word);
    let graph = build_uss_graph(&x, cap).map_err(lib_err)?;
    let minimal = check_minimal_uss(&graph.vertices[graph.base]).map_err(lib_err)?;
    let orbits = orbit_count(&graph);
    let json = serde_json::json!({
        "vertices": graph.vertices.len(),
        "orbits": orbits,
        "minimal": minimal,
        "graph": graph.to_json(),
    })
    .to_string();
    let summary = format!(
        "vertices={} orbits={} minimal={}",
        graph.vertices.len(),
        orbits,
        minimal
    );
    let stdout = match format {
        Format::Text => summary,
        Format::Json => json.clone(),
    };
    Ok(RunOutput {
        stdout,
        file: want_file.then_some(json),
    })
}

pub fn run_centralizer(
    word: &BraidWord,
    format: Format,
    cap: usize,
) -> Result<RunOutput, (i32, String)> {
    let x = NormalForm::from_word(word);
    let out = centralizer_generators_capped(&x, cap).map_err(lib_err)?;
    match format {
        Format::Text => {
            let mut lines = vec![
                format!("case: {}", out.case_tag.as_str()),
                format!("k: {}", out.k),
                format!("uss_size: {}", out.uss_size),
                format!("conjugator: {}", format_normal_form(&out.conjugator)),
            ];
            for g in &out.generators {
                lines.push(format!("generator: {}", format_normal_form(g)));
            }
            ok(lines.join("\n"))
        }
        Format::Json => ok(out.to_json().to_string()),
    }
}

pub struct ExperimentArgs {
    pub n: usize,
    pub lengths: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
}

pub fn run_experiment_verb(
    args: &ExperimentArgs,
    format: Format,
    want_file: bool,
) -> Result<RunOutput, (i32, String)> {
    let n = StrandCount::new(args.n).map_err(|e| (EXIT_INPUT, e.to_string()))?;
    let report = run_experiment(n, &args.lengths, args.trials, args.seed).map_err(lib_err)?;
    let body = match format {
        Format::Text => report.to_csv(),
        Format::Json => report.to_json().to_string(),
    };
    Ok(RunOutput {
        stdout: body.clone(),
        file: want_file.then_some(body),
    })
}
