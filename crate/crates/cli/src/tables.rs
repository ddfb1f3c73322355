use atlas_core::catalog::{
    exceptional_atlas, families, magic_square_level2, magic_square_level3, supergravity_chain, verify_chain, verify_record, DIVISION_LABELS,
};
use clap::ValueEnum;
use serde_json::json;

use crate::context::Context;
use crate::render::{render, Format};
use crate::report::{failed, CheckError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    MagicSquare,
    ExceptionalSpaces,
    Chains,
    Families,
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("table serializes") + "\n"
}

pub fn table(ctx: &Context, name: TableName, format: Format, level: u8) -> Result<String, CheckError> {
    match name {
        TableName::MagicSquare => {
            let sq = match level {
                2 => magic_square_level2(),
                3 => magic_square_level3(&ctx.derivation_dims()?),
                other => return Err(failed(format!("no magic square at level {other}"))),
            };
            if format == Format::Json {
                let labels: Vec<Vec<&str>> =
                    sq.cells.iter().map(|row| row.iter().map(|c| c.label.as_str()).collect()).collect();
                return Ok(pretty(&json!({
                    "level": sq.level,
                    "index": DIVISION_LABELS,
                    "dims": sq.dims(),
                    "labels": labels,
                })));
            }
            let mut headers = vec![""];
            headers.extend(DIVISION_LABELS);
            let rows: Vec<Vec<String>> = sq
                .cells
                .iter()
                .zip(DIVISION_LABELS)
                .map(|(row, label)| {
                    let mut out = vec![label.to_string()];
                    out.extend(row.iter().map(|c| format!("{} {}", c.dim, c.label)));
                    out
                })
                .collect();
            Ok(render(format, &headers, &rows))
        }
        TableName::ExceptionalSpaces => {
            let records = exceptional_atlas();
            if format == Format::Json {
                return Ok(pretty(&records));
            }
            let mut rows = Vec::new();
            for r in &records {
                let report = verify_record(r)?;
                rows.push(vec![
                    r.label.clone(),
                    r.quotient_label(),
                    r.dim.to_string(),
                    r.rank.map_or_else(|| "-".into(), |k| k.to_string()),
                    if report.passed { "ok".into() } else { report.detail },
                ]);
            }
            Ok(render(format, &["type", "G/K", "dim", "rank", "check"], &rows))
        }
        TableName::Chains => {
            let chain = supergravity_chain();
            if format == Format::Json {
                return Ok(pretty(&chain));
            }
            let mut rows = Vec::new();
            for c in &chain {
                let report = verify_chain(c)?;
                rows.push(vec![
                    c.spacetime_dim.to_string(),
                    c.split_form.clone(),
                    c.compact_label(),
                    format!("{} − {}", c.group.dim, report.compact_dim),
                    c.scalars.to_string(),
                ]);
            }
            Ok(render(format, &["d", "G", "K", "dim G − dim K", "scalars"], &rows))
        }
        TableName::Families => {
            let fams = families();
            if format == Format::Json {
                return Ok(pretty(&fams));
            }
            let rows: Vec<Vec<String>> = fams
                .iter()
                .map(|f| vec![f.label.clone(), f.quotient.clone(), f.dim_formula.clone(), f.params.clone()])
                .collect();
            Ok(render(format, &["type", "G/K", "dim", "parameters"], &rows))
        }
    }
}
