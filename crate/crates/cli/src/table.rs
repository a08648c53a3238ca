use std::fmt::Write as _;
use std::ops::RangeInclusive;

use charvar::catalog::{character_variety_class, VarietySpec};
use charvar::ring::LaurentPoly;
use serde_json::json;

use crate::CliError;

/// Parameter ranges of a table; unset ranges are rejected when the family
/// needs them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableRanges {
    pub n: Option<RangeInclusive<u32>>,
    pub g: Option<RangeInclusive<u32>>,
    pub s: Option<RangeInclusive<u32>>,
    pub r: Option<RangeInclusive<u32>>,
}

/// Parses `a..b`, `a..=b` (both inclusive) or a single `a`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<u32>, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "bad range {text:?}: expected a..b or a single value"
        ))
    };
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    let range = match text.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let a = num(text)?;
            a..=a
        }
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

struct Row {
    params: Vec<u32>,
    class: LaurentPoly,
}

fn need(
    r: &Option<RangeInclusive<u32>>,
    name: &str,
    family: &str,
) -> Result<RangeInclusive<u32>, CliError> {
    r.clone()
        .ok_or_else(|| CliError::Usage(format!("table {family} needs --{name}")))
}

fn reject(r: &Option<RangeInclusive<u32>>, name: &str, family: &str) -> Result<(), CliError> {
    match r {
        Some(_) => Err(CliError::Usage(format!("table {family} takes no --{name}"))),
        None => Ok(()),
    }
}

fn columns(family: &str) -> Result<&'static [&'static str], CliError> {
    Ok(match family {
        "free" | "abelian-sl2" | "abelian-gl2" => &["n"],
        "surface" => &["g"],
        "free-parabolic" => &["n", "s"],
        "surface-parabolic" => &["g", "s"],
        "twisted" => &["g", "r"],
        _ => {
            return Err(CliError::Usage(format!(
                "unknown family {family:?}: expected free, surface, free-parabolic, \
                 surface-parabolic, twisted, abelian-sl2 or abelian-gl2"
            )))
        }
    })
}

fn spec_for(family: &str, p: &[u32]) -> VarietySpec {
    match family {
        "free" => VarietySpec::free(p[0]),
        "abelian-sl2" => VarietySpec::abelian_sl2(p[0]),
        "abelian-gl2" => VarietySpec::abelian_gl2(p[0]),
        "surface" => VarietySpec::surface(p[0]),
        "free-parabolic" => VarietySpec::free_jplus(p[0], p[1] as usize),
        "surface-parabolic" => VarietySpec::surface_jplus(p[0], p[1] as usize),
        "twisted" => VarietySpec::twisted(p[0], p[1] as usize),
        _ => unreachable!("family checked by columns"),
    }
}

fn rows(family: &str, ranges: &TableRanges) -> Result<Vec<Row>, CliError> {
    let cols = columns(family)?;
    let pick = |name: &str| match name {
        "n" => &ranges.n,
        "g" => &ranges.g,
        "s" => &ranges.s,
        _ => &ranges.r,
    };
    for name in ["n", "g", "s", "r"] {
        if !cols.contains(&name) {
            reject(pick(name), name, family)?;
        }
    }
    let mut tuples: Vec<Vec<u32>> = vec![Vec::new()];
    for &c in cols {
        let range = need(pick(c), c, family)?;
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                range.clone().map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    tuples
        .into_iter()
        .map(|params| {
            let spec = spec_for(family, &params);
            spec.validate()?;
            Ok(Row {
                class: character_variety_class(&spec)?,
                params,
            })
        })
        .collect()
}

/// Tabulates character-variety classes of `family` over `ranges` as json,
/// csv or latex.
pub fn emit_table(family: &str, ranges: &TableRanges, format: &str) -> Result<String, CliError> {
    if !matches!(format, "json" | "csv" | "latex") {
        return Err(CliError::Usage(format!(
            "unknown format {format:?}: expected json, csv or latex"
        )));
    }
    let cols = columns(family)?;
    let rows = rows(family, ranges)?;
    let mut doc = String::new();
    match format {
        "csv" => {
            writeln!(doc, "{},class", cols.join(",")).unwrap();
            for row in &rows {
                let params: Vec<String> = row.params.iter().map(u32::to_string).collect();
                writeln!(doc, "{},{}", params.join(","), row.class).unwrap();
            }
        }
        "json" => {
            let items: Vec<_> = rows
                .iter()
                .map(|row| {
                    let mut item = serde_json::Map::new();
                    for (c, v) in cols.iter().zip(&row.params) {
                        item.insert(c.to_string(), json!(v));
                    }
                    item.insert("spec".into(), json!(spec_for(family, &row.params)));
                    item.insert("class".into(), json!(row.class));
                    serde_json::Value::Object(item)
                })
                .collect();
            let value = json!({"family": family, "rows": items});
            writeln!(doc, "{}", serde_json::to_string_pretty(&value).unwrap()).unwrap();
        }
        _ => {
            writeln!(doc, "\\begin{{tabular}}{{{}l}}", "c".repeat(cols.len())).unwrap();
            writeln!(doc, "\\hline").unwrap();
            let head: Vec<String> = cols.iter().map(|c| format!("${c}$")).collect();
            writeln!(doc, "{} & class \\\\", head.join(" & ")).unwrap();
            writeln!(doc, "\\hline").unwrap();
            for row in &rows {
                let params: Vec<String> = row.params.iter().map(u32::to_string).collect();
                writeln!(
                    doc,
                    "{} & ${}$ \\\\",
                    params.join(" & "),
                    row.class.to_latex()
                )
                .unwrap();
            }
            writeln!(doc, "\\hline").unwrap();
            writeln!(doc, "\\end{{tabular}}").unwrap();
        }
    }
    Ok(doc)
}
