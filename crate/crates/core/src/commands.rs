//! Output of the `joq` subcommands, kept free of argument parsing and I/O.

use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequences::{SeqName, SeqTable};
use crate::series::{gf_numerator, gf_series_check};
use crate::unrestricted::{gaussian, norm_direct, qk, qm, sum_direct, OffsetTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::InvalidArgument(format!("unknown format {s:?} (csv or json)"))),
        }
    }
}

/// What `quat` and `table` evaluate at each index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Qk,
    Qm,
    Norm,
    Gaussian,
    Sum,
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "qk" => Ok(Quantity::Qk),
            "qm" => Ok(Quantity::Qm),
            "norm" => Ok(Quantity::Norm),
            "gaussian" => Ok(Quantity::Gaussian),
            "sum" => Ok(Quantity::Sum),
            _ => Err(Error::InvalidArgument(format!(
                "unknown quantity {s:?} (qk, qm, norm, gaussian or sum)"
            ))),
        }
    }
}

/// Canonical text of one quantity at `n`. `gaussian` only reads `t.a`.
pub fn quantity_text(n: i64, t: &OffsetTriple, what: Quantity) -> Result<String> {
    Ok(match what {
        Quantity::Qk => qk(n, t).to_string(),
        Quantity::Qm => qm(n, t).to_string(),
        Quantity::Norm => norm_direct(n, t).to_string(),
        Quantity::Gaussian => gaussian(n, t.a).to_string(),
        Quantity::Sum => sum_direct(n, t)?.to_string(),
    })
}

#[derive(Serialize)]
struct Row<'a> {
    n: i64,
    value: &'a str,
}

/// `n,value` CSV with a header row, or a JSON array of `{n, value}`.
pub fn render_rows(rows: &[(i64, String)], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (n, v) in rows {
                out.push_str(&format!("{n},{v}\n"));
            }
            out
        }
        Format::Json => {
            let rows: Vec<Row> = rows.iter().map(|(n, v)| Row { n: *n, value: v }).collect();
            serde_json::to_string_pretty(&rows).expect("serializable") + "\n"
        }
    }
}

pub fn seq_output(name: SeqName, from: i64, to: i64, format: Format) -> Result<String> {
    let table = SeqTable::build(name, from, to)?;
    Ok(match format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json() + "\n",
    })
}

pub fn table_output(t: &OffsetTriple, from: i64, to: i64, what: Quantity, format: Format) -> Result<String> {
    if from > to {
        return Err(Error::InvalidArgument(format!("empty range {from}..={to}")));
    }
    let rows = (from..=to)
        .map(|n| quantity_text(n, t, what).map(|v| (n, v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(render_rows(&rows, format))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GfCoefficient {
    pub degree: usize,
    pub value: String,
    pub rational: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GfReport {
    pub offsets: OffsetTriple,
    pub depth: usize,
    pub denominator: &'static str,
    pub numerator_coeffs: Vec<GfCoefficient>,
    pub check: bool,
}

pub fn gf_report(t: &OffsetTriple, depth: usize) -> Result<GfReport> {
    let check = gf_series_check(t, depth)?;
    let numerator_coeffs = gf_numerator(t)
        .coeffs()
        .iter()
        .enumerate()
        .map(|(degree, c)| match c.to_rational() {
            Ok(q) => GfCoefficient { degree, value: q.to_string(), rational: true },
            Err(_) => GfCoefficient { degree, value: c.to_string(), rational: false },
        })
        .collect();
    Ok(GfReport {
        offsets: *t,
        depth,
        denominator: "1 - x - x^2 - 2*x^3",
        numerator_coeffs,
        check,
    })
}
