//! Expansion and report rendering for text and JSON output.

use serde::Serialize;

use qsix_core::chebyshev::{cheb_t, cheb_u, t_alpha};
use qsix_core::pentagonal::{euler_tower_p_series, f_sum, pentagonal_product, series_s, tower_p_specialized};
use qsix_core::registry::{IdentityDescriptor, SuiteResult};
use qsix_core::{Discrepancy, QLaurent, TruncSeries};

use crate::{Format, SeriesName};

/// A rendered object: either one line (a polynomial or q-series) or one line
/// per power of the series variable.
#[derive(Debug, Serialize)]
pub struct Expansion {
    pub series: String,
    pub n: Option<usize>,
    pub order: Option<usize>,
    pub variable: Option<&'static str>,
    /// Coefficients by degree for series in `variable`, otherwise a single
    /// rendered line.
    pub terms: Vec<String>,
}

fn need_n(n: Option<usize>, what: &str) -> Result<usize, String> {
    n.ok_or_else(|| format!("--series {what} needs --n"))
}

fn q_series_line(s: &TruncSeries<qsix_core::BigInt>) -> String {
    QLaurent::from_terms(s.coeffs().iter().enumerate().map(|(d, c)| (d as i64, c.clone()))).to_string()
}

pub fn expand(series: SeriesName, n: Option<usize>, order: Option<usize>) -> Result<Expansion, String> {
    let name = series_label(series);
    let x_series = |s: Vec<String>, var| Ok((Some(var), s));
    let ord = order.unwrap_or(8);
    let q_ord = order.unwrap_or(20);
    let (variable, terms, used_order): (Option<&'static str>, Vec<String>, Option<usize>) = match series {
        SeriesName::S | SeriesName::Sq | SeriesName::CalP | SeriesName::UpperF | SeriesName::Talpha => {
            let coeffs: Result<(Option<&'static str>, Vec<String>), String> = match series {
                SeriesName::S => x_series(strings(&series_s(0, ord)), "x"),
                SeriesName::Sq => x_series(strings(&series_s(1, ord)), "x"),
                SeriesName::CalP => x_series(strings(&euler_tower_p_series(ord)), "x"),
                SeriesName::UpperF => {
                    x_series((0..=ord as u32).map(|k| f_sum(k).to_string()).collect(), "x")
                }
                _ => x_series(strings(&t_alpha(ord)), "u"),
            };
            let (v, t) = coeffs?;
            (v, t, Some(ord))
        }
        SeriesName::PEll => {
            let ell = need_n(n, "P_ell")?;
            let s = tower_p_specialized(ell as u32, q_ord).map_err(|e| e.to_string())?;
            (None, vec![q_series_line(&s)], Some(q_ord))
        }
        SeriesName::Pentagonal => (None, vec![q_series_line(&pentagonal_product(q_ord))], Some(q_ord)),
        SeriesName::LowerF => {
            let k = need_n(n, "f")?;
            (None, vec![f_sum(k as u32).to_string()], None)
        }
        SeriesName::T => (None, vec![cheb_t(need_n(n, "T")?).render("x")], None),
        SeriesName::U => (None, vec![cheb_u(need_n(n, "U")?).render("x")], None),
    };
    Ok(Expansion { series: name.to_string(), n, order: used_order, variable, terms })
}

fn strings<C: std::fmt::Display + qsix_core::Coeff>(s: &TruncSeries<C>) -> Vec<String> {
    s.coeffs().iter().map(|c| c.to_string()).collect()
}

fn series_label(s: SeriesName) -> &'static str {
    match s {
        SeriesName::S => "S",
        SeriesName::Sq => "Sq",
        SeriesName::CalP => "calP",
        SeriesName::PEll => "P_ell",
        SeriesName::Pentagonal => "pentagonal",
        SeriesName::LowerF => "f",
        SeriesName::UpperF => "F",
        SeriesName::T => "T",
        SeriesName::U => "U",
        SeriesName::Talpha => "Talpha",
    }
}

pub fn render_expansion(e: &Expansion, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(e).expect("serializable"),
        Format::Text => match e.variable {
            Some(var) => {
                let mut lines: Vec<String> =
                    e.terms.iter().enumerate().map(|(d, c)| format!("[{var}^{d}] {c}")).collect();
                if let Some(o) = e.order {
                    lines.push(format!("O({var}^{})", o + 1));
                }
                lines.join("\n")
            }
            None => e.terms.join("\n"),
        },
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    id: &'a str,
    paper_ref: &'a str,
    order: usize,
    status: &'a str,
    expected: &'a str,
    first_discrepancy: Option<&'a Discrepancy>,
    elapsed_ms: u64,
    notes: &'a [String],
}

#[derive(Serialize)]
struct JsonSuite<'a> {
    suite: Vec<JsonReport<'a>>,
    summary: qsix_core::registry::Summary,
}

pub fn render_suite(result: &SuiteResult, format: Format) -> String {
    match format {
        Format::Json => {
            let suite = result
                .entries
                .iter()
                .map(|e| JsonReport {
                    id: e.descriptor.id,
                    paper_ref: e.descriptor.tag,
                    order: e.report.order,
                    status: e.report.status.as_str(),
                    expected: e.descriptor.expected.as_str(),
                    first_discrepancy: e.report.first_discrepancy.as_ref(),
                    elapsed_ms: e.report.elapsed.as_millis() as u64,
                    notes: &e.report.notes,
                })
                .collect();
            serde_json::to_string_pretty(&JsonSuite { suite, summary: result.summary }).expect("serializable")
        }
        Format::Text => {
            let mut out = Vec::new();
            for e in &result.entries {
                let r = &e.report;
                let counted = match e.counted_as() {
                    Some(s) => s.as_str(),
                    None => "info",
                };
                out.push(format!(
                    "{:<5} {:<16} {:<10} status={:<5} expected={:<11} order={:<4} {} ms",
                    counted.to_uppercase(),
                    e.descriptor.id,
                    e.descriptor.tag,
                    r.status.as_str(),
                    e.descriptor.expected.as_str(),
                    r.order,
                    r.elapsed.as_millis()
                ));
                if let Some(d) = &r.first_discrepancy {
                    out.push(format!("      first discrepancy at degree {}: {} vs {}", d.degree, d.lhs, d.rhs));
                }
                for n in &r.notes {
                    out.push(format!("      {n}"));
                }
            }
            let s = result.summary;
            out.push(format!(
                "summary: pass {}, fail {}, error {} ({} ms)",
                s.pass,
                s.fail,
                s.error,
                result.wall_time.as_millis()
            ));
            out.join("\n")
        }
    }
}

#[derive(Serialize)]
struct JsonCatalogRow<'a> {
    id: &'a str,
    paper_ref: &'a str,
    expected: &'a str,
    default_order: usize,
}

pub fn render_catalog(catalog: &[IdentityDescriptor], format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<_> = catalog
                .iter()
                .map(|d| JsonCatalogRow {
                    id: d.id,
                    paper_ref: d.tag,
                    expected: d.expected.as_str(),
                    default_order: d.default_order,
                })
                .collect();
            serde_json::to_string_pretty(&rows).expect("serializable")
        }
        Format::Text => {
            let mut out = vec![format!("{:<16} {:<10} {:<11} {}", "id", "tag", "expected", "default_order")];
            for d in catalog {
                out.push(format!("{:<16} {:<10} {:<11} {}", d.id, d.tag, d.expected.as_str(), d.default_order));
            }
            out.join("\n")
        }
    }
}
