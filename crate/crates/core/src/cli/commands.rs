use std::fmt::Write as _;

use serde::Serialize;

use super::io::{parse_range, LabelingFile};
use super::{CliError, Format, GraphArgs, EXIT_BUDGET, EXIT_MISMATCH, EXIT_OK};
use crate::construction::{build_distribution, trace_construction};
use crate::graph::{CirculantGraph, DominationFunction};
use crate::oracle::{self, InstanceReport, Status};
use crate::sequences::Permutation;

type Outcome = Result<(String, i32), CliError>;

const LABEL_RULE: &str = "label = floor((k + entry) / b)";

fn json<T: Serialize>(v: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_rows<R: Serialize>(rows: impl IntoIterator<Item = R>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Parse(e.to_string()))
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn graph_from(
    n: Option<usize>,
    t: Option<usize>,
    diffs: Option<Vec<usize>>,
) -> Result<CirculantGraph, CliError> {
    let n = n.ok_or_else(|| CliError::Usage("graph order --n is required".into()))?;
    match (t, diffs) {
        (_, Some(d)) => Ok(CirculantGraph::new(n, d)?),
        (Some(t), None) => {
            if t < 1 || 2 * t + 1 > n {
                return Err(CliError::Usage(format!(
                    "t must satisfy 1 <= t <= (n-1)/2, got n = {n}, t = {t}"
                )));
            }
            Ok(CirculantGraph::power_of_cycle(n, t)?)
        }
        (None, None) => Err(CliError::Usage("one of --t or --diffs is required".into())),
    }
}

#[derive(Serialize)]
struct ConstructReport {
    n: usize,
    t: usize,
    k: u64,
    b: usize,
    distribution: Vec<usize>,
    rule: &'static str,
    labels: Vec<u64>,
    weight: u64,
    formula: u64,
    verified: bool,
}

pub(super) fn construct(n: usize, t: usize, k: u64, format: Format) -> Outcome {
    let dist = build_distribution(n, t).map_err(|e| CliError::Usage(e.to_string()))?;
    let g = CirculantGraph::power_of_cycle(n, t)?;
    let f = DominationFunction::new(dist.labels(k));
    let formula = g.lower_bound(k)?;
    let verified = g.is_k_dominating(&f, k)?;
    let code = if verified && f.weight() == formula {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    let rep = ConstructReport {
        n,
        t,
        k,
        b: dist.b,
        labels: f.labels().to_vec(),
        weight: f.weight(),
        distribution: dist.entries,
        rule: LABEL_RULE,
        formula,
        verified,
    };
    let text = match format {
        Format::Json => json(&rep)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                vertex: usize,
                entry: usize,
                label: u64,
            }
            csv_rows(rep.distribution.iter().zip(&rep.labels).enumerate().map(
                |(vertex, (&entry, &label))| Row {
                    vertex,
                    entry,
                    label,
                },
            ))?
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "n = {n}, t = {t}, k = {k}, b = {}", rep.b);
            let _ = writeln!(s, "distribution: {}", list(&rep.distribution));
            let _ = writeln!(s, "rule: {LABEL_RULE}");
            let _ = writeln!(s, "labels: {}", list(&rep.labels));
            let _ = writeln!(s, "weight: {}", rep.weight);
            let _ = writeln!(s, "formula: {}", rep.formula);
            let _ = writeln!(s, "verified: {}", pass(verified));
            s
        }
    };
    Ok((text, code))
}

#[derive(Serialize)]
struct VerifyReport {
    n: usize,
    diffs: Vec<usize>,
    k: u64,
    labels: Vec<u64>,
    neighborhood_sums: Vec<u64>,
    min_window: u64,
    weight: u64,
    /// `None` for non-contiguous difference sets.
    formula: Option<u64>,
    dominating: bool,
    optimal: Option<bool>,
    verdict: &'static str,
}

pub(super) fn verify(text: &str, args: &GraphArgs, k: Option<u64>, format: Format) -> Outcome {
    let file = LabelingFile::parse(text)?;
    let n = args.n.or(file.n).or(Some(file.labels.len()));
    let (t, diffs) = if args.t.is_some() || args.diffs.is_some() {
        (args.t, args.diffs.clone())
    } else {
        (file.t, file.diffs.clone())
    };
    let g = graph_from(n, t, diffs)?;
    let k = k
        .or(file.k)
        .ok_or_else(|| CliError::Usage("demand k missing from file and --k".into()))?;
    let f = DominationFunction::new(file.labels);
    let sums = g.neighborhood_sums(&f)?;
    let min_window = sums.iter().copied().min().unwrap_or(0);
    let dominating = min_window >= k;
    let formula = g.lower_bound(k).ok();
    let optimal = formula.map(|b| f.weight() == b);
    let ok = dominating && optimal.unwrap_or(true);
    let rep = VerifyReport {
        n: g.order(),
        diffs: g.diffs().iter().copied().collect(),
        k,
        labels: f.labels().to_vec(),
        neighborhood_sums: sums,
        min_window,
        weight: f.weight(),
        formula,
        dominating,
        optimal,
        verdict: pass(ok),
    };
    let out = match format {
        Format::Json => json(&rep)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                vertex: usize,
                label: u64,
                neighborhood_sum: u64,
            }
            csv_rows(
                rep.labels
                    .iter()
                    .zip(&rep.neighborhood_sums)
                    .enumerate()
                    .map(|(vertex, (&label, &neighborhood_sum))| Row {
                        vertex,
                        label,
                        neighborhood_sum,
                    }),
            )?
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "graph: n = {}, D = {}, k = {k}", rep.n, list(&rep.diffs));
            let _ = writeln!(s, "vertex label neighborhood_sum");
            for (v, (l, sum)) in rep.labels.iter().zip(&rep.neighborhood_sums).enumerate() {
                let _ = writeln!(s, "{v} {l} {sum}");
            }
            let _ = writeln!(s, "min window: {min_window}");
            let _ = writeln!(s, "weight: {}", rep.weight);
            let _ = writeln!(s, "domination: {} (k = {k})", pass(dominating));
            match formula {
                Some(b) if rep.weight > b => {
                    let _ = writeln!(s, "formula: {b}");
                    let _ = writeln!(
                        s,
                        "optimality: FAIL (suboptimal: weight {} > formula {b})",
                        rep.weight
                    );
                }
                Some(b) if rep.weight < b => {
                    let _ = writeln!(s, "formula: {b}");
                    let _ = writeln!(
                        s,
                        "optimality: FAIL (weight {} below formula {b})",
                        rep.weight
                    );
                }
                Some(b) => {
                    let _ = writeln!(s, "formula: {b}");
                    let _ = writeln!(s, "optimality: PASS");
                }
                None => {
                    let _ = writeln!(s, "formula: n/a (difference set is not {{1..t}})");
                }
            }
            let _ = writeln!(s, "verdict: {}", rep.verdict);
            s
        }
    };
    Ok((out, if ok { EXIT_OK } else { EXIT_MISMATCH }))
}

#[derive(Serialize)]
struct OracleReport {
    n: usize,
    diffs: Vec<usize>,
    k: u64,
    gamma_k: u64,
    formula: Option<u64>,
    witness: Vec<u64>,
    nodes_explored: u64,
}

pub(super) fn oracle(args: &GraphArgs, k: u64, budget: u64, format: Format) -> Outcome {
    let g = graph_from(args.n, args.t, args.diffs.clone())?;
    let res = oracle::exact_gamma_k(&g, k, budget)?;
    let formula = g.lower_bound(k).ok();
    let ok = formula.is_none_or(|b| b == res.gamma_k);
    let rep = OracleReport {
        n: res.n,
        diffs: res.diffs,
        k,
        gamma_k: res.gamma_k,
        formula,
        witness: res.witness.labels().to_vec(),
        nodes_explored: res.nodes_explored,
    };
    let out = match format {
        Format::Json => json(&rep)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                n: usize,
                k: u64,
                gamma_k: u64,
                formula: Option<u64>,
                nodes_explored: u64,
            }
            csv_rows([Row {
                n: rep.n,
                k,
                gamma_k: rep.gamma_k,
                formula,
                nodes_explored: rep.nodes_explored,
            }])?
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "graph: n = {}, D = {}, k = {k}", rep.n, list(&rep.diffs));
            let _ = writeln!(s, "gamma_k: {}", rep.gamma_k);
            if let Some(b) = formula {
                let _ = writeln!(s, "formula: {b} ({})", pass(b == rep.gamma_k));
            }
            let _ = writeln!(s, "witness: {}", list(&rep.witness));
            let _ = writeln!(s, "nodes explored: {}", rep.nodes_explored);
            s
        }
    };
    Ok((out, if ok { EXIT_OK } else { EXIT_MISMATCH }))
}

pub(super) fn sweep(
    n_range: &str,
    t_range: Option<&str>,
    k_range: &str,
    oracle_budget: Option<u64>,
    format: Format,
) -> Outcome {
    let ns = parse_range::<usize>(n_range)?;
    let ts = t_range.map(parse_range::<usize>).transpose()?;
    let ks = parse_range::<u64>(k_range)?;
    let rows = oracle::sweep(ns, ts, ks, oracle_budget)?;
    if rows.is_empty() {
        return Err(CliError::Usage(
            "no admissible (n, t, k) instance in the given ranges".into(),
        ));
    }
    let code = if rows.iter().any(|r| r.status == Status::Mismatch) {
        EXIT_MISMATCH
    } else if rows.iter().any(|r| r.status == Status::Inconclusive) {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    let with_oracle = oracle_budget.is_some();
    let out = match format {
        Format::Json => json(&rows)?,
        Format::Csv => sweep_csv(&rows, with_oracle),
        Format::Text => {
            let mut s = String::new();
            let _ = write!(
                s,
                "{:>5} {:>4} {:>4} {:>8} {:>12}",
                "n", "t", "k", "formula", "constructed"
            );
            if with_oracle {
                let _ = write!(s, " {:>7}", "oracle");
            }
            let _ = writeln!(s, " status");
            for r in &rows {
                let _ = write!(
                    s,
                    "{:>5} {:>4} {:>4} {:>8} {:>12}",
                    r.n, r.t, r.k, r.formula, r.constructed_weight
                );
                if with_oracle {
                    let g = r.oracle_gamma.map_or("-".to_string(), |g| g.to_string());
                    let _ = write!(s, " {g:>7}");
                }
                let _ = writeln!(s, " {}", r.status);
            }
            s
        }
    };
    Ok((out, code))
}

fn sweep_csv(rows: &[InstanceReport], with_oracle: bool) -> String {
    let mut s = String::from("n,t,k,formula,constructed_weight");
    if with_oracle {
        s.push_str(",oracle_gamma");
    }
    s.push_str(",status\n");
    for r in rows {
        let _ = write!(
            s,
            "{},{},{},{},{}",
            r.n, r.t, r.k, r.formula, r.constructed_weight
        );
        if with_oracle {
            let _ = write!(
                s,
                ",{}",
                r.oracle_gamma.map_or(String::new(), |g| g.to_string())
            );
        }
        let _ = writeln!(s, ",{}", r.status);
    }
    s
}

pub(super) fn trace(a: usize, b: usize, format: Format) -> Outcome {
    let tr = trace_construction(a, b).map_err(|e| CliError::Usage(e.to_string()))?;
    let pair = tr.code_pair();
    let out = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct TraceReport<'a> {
                a: usize,
                b: usize,
                steps: &'a [crate::construction::TraceStep],
                c1: &'a Permutation,
                c2: &'a Permutation,
            }
            json(&TraceReport {
                a,
                b,
                steps: &tr.steps,
                c1: &pair.c1,
                c2: &pair.c2,
            })?
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                level: usize,
                a: usize,
                b: usize,
                r: usize,
                inner: String,
                complemented: String,
                c1: String,
            }
            let show =
                |p: &Option<Permutation>| p.as_ref().map_or(String::new(), |p| p.to_string());
            csv_rows(tr.steps.iter().enumerate().map(|(i, s)| Row {
                level: i + 1,
                a: s.a,
                b: s.b,
                r: s.r,
                inner: show(&s.inner),
                complemented: show(&s.complemented),
                c1: s.c1.to_string(),
            }))?
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "C1 recursion for (a, b) = ({a}, {b})");
            for (i, st) in tr.steps.iter().enumerate() {
                match (&st.inner, &st.complemented) {
                    (Some(inner), Some(comp)) => {
                        let _ = writeln!(
                            s,
                            "level {}: (a, b) = ({}, {}), r = {}: R = C1({}, {}) = {inner}, complement = {comp}, C1({}, {}) = {}",
                            i + 1, st.a, st.b, st.r, st.r, st.a, st.a, st.b, st.c1
                        );
                    }
                    _ => {
                        let _ = writeln!(
                            s,
                            "level {}: (a, b) = ({}, {}), r = 0: base C1({}, {}) = {}",
                            i + 1,
                            st.a,
                            st.b,
                            st.a,
                            st.b,
                            st.c1
                        );
                    }
                }
            }
            let _ = writeln!(s, "C1({a}, {b}) = {}", pair.c1);
            let _ = writeln!(s, "C2({a}, {b}) = {}", pair.c2);
            s
        }
    };
    Ok((out, EXIT_OK))
}

pub(super) fn export_graph(args: &GraphArgs, format: Format) -> Outcome {
    let n = args
        .n
        .ok_or_else(|| CliError::Usage("graph order --n is required".into()))?;
    let g = match (args.t, &args.diffs) {
        (_, Some(d)) => CirculantGraph::new(n, d.iter().copied())?,
        (Some(t), None) => CirculantGraph::power_of_cycle(n, t)?,
        (None, None) => return Err(CliError::Usage("one of --t or --diffs is required".into())),
    };
    let out = match format {
        Format::Text => g.to_dot(),
        Format::Csv => {
            let mut s = String::from("u,v\n");
            for (u, v) in g.edges() {
                let _ = writeln!(s, "{u},{v}");
            }
            s
        }
        Format::Json => {
            #[derive(Serialize)]
            struct GraphReport {
                n: usize,
                diffs: Vec<usize>,
                edges: Vec<(usize, usize)>,
            }
            json(&GraphReport {
                n,
                diffs: g.diffs().iter().copied().collect(),
                edges: g.edges(),
            })?
        }
    };
    Ok((out, EXIT_OK))
}
