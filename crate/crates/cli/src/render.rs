//! Text, JSON and CSV renderings of command results.

use num_rational::BigRational;
use serde_json::{json, Value};

use eqschub::json::{polynomial_json, structure_table_json};
use eqschub::poly::monomial_text;
use eqschub::{Certificate, Evaluation, RootPolynomial, RootSystem, StructureTable, WeylElement};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn word_text(w: &WeylElement) -> String {
    w.to_string()
}

fn word_csv(w: &WeylElement) -> String {
    let parts: Vec<String> = w.word_1based().iter().map(usize::to_string).collect();
    parts.join(",")
}

fn csv_string(rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    for row in rows {
        wtr.write_record(&row)
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let bytes = wtr
        .into_inner()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn rational_text(q: &BigRational) -> String {
    q.to_string()
}

pub fn rootsys(rs: &RootSystem, format: Format) -> Result<String, CliError> {
    let roots = rs.positive_roots();
    let weights = rs.fundamental_weights();
    match format {
        Format::Text => {
            let mut out = format!(
                "type: {}\nrank: {}\nkind: {}\ncartan: {}\n",
                rs.name(),
                rs.rank(),
                rs.kind().as_str(),
                rs.cartan()
            );
            match (&roots, weights) {
                (Some(roots), Some(weights)) => {
                    out.push_str(&format!("positive roots ({}):\n", roots.len()));
                    for r in roots {
                        out.push_str(&format!("  {r}\n"));
                    }
                    out.push_str("fundamental weights:\n");
                    for (i, w) in weights.iter().enumerate() {
                        out.push_str(&format!("  w{} = {w}\n", i + 1));
                    }
                }
                _ => out.push_str("positive roots: not enumerated (general kind)\n"),
            }
            Ok(out)
        }
        Format::Json => {
            let roots_json: Option<Vec<Vec<String>>> = roots.as_ref().map(|rs| {
                rs.iter()
                    .map(|r| r.coords.iter().map(rational_text).collect())
                    .collect()
            });
            let weights_json: Option<Vec<Vec<String>>> = weights.map(|ws| {
                ws.iter()
                    .map(|w| w.coords.iter().map(rational_text).collect())
                    .collect()
            });
            let v = json!({
                "type": rs.name(),
                "rank": rs.rank(),
                "kind": rs.kind().as_str(),
                "cartan": rs.cartan().rows(),
                "positive_roots": roots_json,
                "fundamental_weights": weights_json,
            });
            Ok(format!("{v}\n"))
        }
        Format::Csv => {
            let mut rows = vec![vec!["kind".into(), "index".into(), "coordinates".into()]];
            let coords = |c: &[BigRational]| {
                c.iter().map(rational_text).collect::<Vec<_>>().join(" ")
            };
            for (i, r) in roots.iter().flatten().enumerate() {
                rows.push(vec!["root".into(), (i + 1).to_string(), coords(&r.coords)]);
            }
            for (i, w) in weights.into_iter().flatten().enumerate() {
                rows.push(vec!["weight".into(), (i + 1).to_string(), coords(&w.coords)]);
            }
            csv_string(rows)
        }
    }
}

pub fn polynomial(p: &RootPolynomial, format: Format) -> Result<String, CliError> {
    match format {
        Format::Text => Ok(format!("{p}\n")),
        Format::Json => Ok(format!("{}\n", polynomial_json(p))),
        Format::Csv => {
            let mut rows = vec![vec!["monomial".into(), "coefficient".into()]];
            for (m, c) in p.terms() {
                rows.push(vec![monomial_text(m), c.to_string()]);
            }
            csv_string(rows)
        }
    }
}

pub struct EvalOutput<'a> {
    pub nu: &'a [BigRational],
    pub evaluation: Evaluation,
}

fn evaluation_json(e: &EvalOutput<'_>) -> Value {
    let values: Vec<Value> = e
        .evaluation
        .values
        .iter()
        .map(|(w, x)| json!({ "w": w.word_1based(), "value": rational_text(x) }))
        .collect();
    json!({
        "nu": e.nu.iter().map(rational_text).collect::<Vec<_>>(),
        "convention": if e.evaluation.p_convention { "p" } else { "a" },
        "u": e.evaluation.u.word_1based(),
        "v": e.evaluation.v.word_1based(),
        "values": values,
    })
}

pub fn structure_table(
    st: &StructureTable,
    cert: &Certificate,
    eval: Option<&EvalOutput<'_>>,
    format: Format,
) -> Result<String, CliError> {
    match format {
        Format::Text => {
            let mut out = format!(
                "type: {}\nbasis: {}\nu: {}\nv: {}\nvalues:\n",
                st.system,
                st.basis,
                word_text(&st.u),
                word_text(&st.v)
            );
            for (w, p) in &st.values {
                out.push_str(&format!("  {}: {p}\n", word_text(w)));
            }
            out.push_str(&format!("certificate: {}\n", cert.verdict()));
            for f in cert.failures() {
                out.push_str(&format!("  fail at {}: sign {}\n", word_text(&f.w), f.sign.as_str()));
            }
            if let Some(e) = eval {
                let nu: Vec<String> = e.nu.iter().map(rational_text).collect();
                let ev = &e.evaluation;
                if ev.p_convention {
                    out.push_str(&format!(
                        "evaluation at nu = ({}), p convention, u = {}, v = {}:\n",
                        nu.join(", "),
                        word_text(&ev.u),
                        word_text(&ev.v)
                    ));
                } else {
                    out.push_str(&format!("evaluation at nu = ({}):\n", nu.join(", ")));
                }
                for (w, x) in &ev.values {
                    out.push_str(&format!("  {}: {x}\n", word_text(w)));
                }
            }
            Ok(out)
        }
        Format::Json => {
            let mut v = structure_table_json(st, cert);
            if let Some(e) = eval {
                v["evaluation"] = evaluation_json(e);
            }
            Ok(format!("{v}\n"))
        }
        Format::Csv => {
            let mut rows = vec![vec![
                "w_word".into(),
                "degree".into(),
                "monomial".into(),
                "coefficient".into(),
            ]];
            for (w, p) in &st.values {
                for (m, c) in p.terms() {
                    rows.push(vec![
                        word_csv(w),
                        m.degree().to_string(),
                        monomial_text(m),
                        c.to_string(),
                    ]);
                }
            }
            let mut out = csv_string(rows)?;
            if let Some(e) = eval {
                let mut rows = vec![vec!["w_word".into(), "value".into()]];
                for (w, x) in &e.evaluation.values {
                    rows.push(vec![word_csv(w), rational_text(x)]);
                }
                out.push('\n');
                out.push_str(&csv_string(rows)?);
            }
            Ok(out)
        }
    }
}
