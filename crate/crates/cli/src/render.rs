use std::fmt::Write;

use serde::Serialize;
use serde_json::json;

use ree_core::exact_ring::two_adic_valuation;
use ree_core::ree_data::{
    b_set_exprs, cd_sz_exprs, character_table, maximal_subgroups, unipotent_table, IndexFormula, ReeInstance, CD_SZ8,
    SZ8_ORDER, SZ8_PROJECTIVE_ONLY,
};
use ree_core::report::{aggregate, Status, VerificationReport};
use ree_core::suite::MReport;

use crate::args::Format;

#[derive(Serialize)]
struct VerifyOutput<'a> {
    status: Status,
    results: &'a [MReport],
}

pub fn verify_json(reports: &[MReport]) -> String {
    let status = aggregate(reports.iter().flat_map(|r| r.checks.iter().map(|c| c.status)));
    serde_json::to_string_pretty(&VerifyOutput { status, results: reports }).expect("serializable")
}

fn node(out: &mut String, r: &VerificationReport, depth: usize) {
    let pad = "  ".repeat(depth);
    let _ = write!(out, "{pad}{} {}", r.status.label(), r.id);
    for (k, v) in &r.witness {
        let _ = write!(out, " {k}={v}");
    }
    if let Some(n) = &r.note {
        let _ = write!(out, " ({n})");
    }
    out.push('\n');
    for c in &r.children {
        node(out, c, depth + 1);
    }
}

pub fn verify_text(reports: &[MReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "m = {}", r.m);
        for c in &r.checks {
            node(&mut out, c, 1);
        }
    }
    let ok = reports.iter().all(MReport::all_pass);
    let _ = writeln!(out, "{}", if ok { "all checks passed" } else { "some checks FAILED" });
    out
}

#[derive(Serialize)]
struct DegreeRow {
    row: String,
    degree_expr: String,
    multiplicity_expr: &'static str,
    degree: String,
    multiplicity: String,
    two_part_exponent: String,
    zero_multiplicity: bool,
}

pub fn degrees(m: u32, format: Format) -> ree_core::Result<String> {
    let inst = ReeInstance::new(m)?;
    let rows: Vec<DegreeRow> = character_table()
        .iter()
        .zip(inst.rows())
        .map(|(e, r)| DegreeRow {
            row: r.row.to_string(),
            degree_expr: e.degree.to_string(),
            multiplicity_expr: e.multiplicity_printed,
            degree: r.degree.to_string(),
            multiplicity: r.multiplicity.to_string(),
            two_part_exponent: two_adic_valuation(&r.degree).to_string(),
            zero_multiplicity: r.multiplicity.bits() == 0,
        })
        .collect();
    let sum = inst.multiplicity_weighted_square_sum();
    let matches = &sum == inst.order();
    Ok(match format {
        Format::Json => {
            let v = json!({
                "m": m.to_string(),
                "rows": rows,
                "set_size": inst.degrees().len().to_string(),
                "sum_of_squares": sum.to_string(),
                "order": inst.order().to_string(),
                "sum_of_squares_matches_order": matches,
            });
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "m = {m}, q^2 = 2^{}", inst.field_exponent());
            for r in &rows {
                let flag = if r.zero_multiplicity { "  [multiplicity 0]" } else { "" };
                let _ = writeln!(
                    out,
                    "{:>2}  {}  = {}  mult {} = {}  v2 = {}{flag}",
                    r.row, r.degree_expr, r.degree, r.multiplicity_expr, r.multiplicity, r.two_part_exponent
                );
            }
            let _ = writeln!(out, "distinct degrees: {}", inst.degrees().len());
            let _ = writeln!(out, "sum mult*deg^2 = {sum}");
            let _ = writeln!(out, "|H|            = {}", inst.order());
            let _ = writeln!(out, "sum of squares matches order: {matches}");
            out
        }
    })
}

pub fn dump_tables(format: Format) -> String {
    let table1: Vec<_> = maximal_subgroups(4)
        .into_iter()
        .map(|e| {
            let index = match &e.index {
                IndexFormula::Expr(x) => x.to_string(),
                IndexFormula::Subfield { .. } => "|2F4(q^2)| / |2F4(q0^2)|".to_string(),
            };
            json!({ "name": e.name.to_string(), "structure": e.structure, "index": index })
        })
        .collect();
    let table2: Vec<_> = character_table()
        .iter()
        .map(|e| {
            json!({
                "row": e.row.to_string(),
                "degree": e.degree.to_string(),
                "multiplicity": e.multiplicity_printed,
                "multiplicity_expanded": e.multiplicity.to_string(),
            })
        })
        .collect();
    let strs = |v: Vec<ree_core::qpoly::FactoredExpr>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let v = json!({
        "maximal_subgroups": table1,
        "character_degrees": table2,
        "unipotent": unipotent_table(),
        "levi": {
            "pb_quotients": strs(b_set_exprs()),
            "cd_sz": strs(cd_sz_exprs()),
            "cd_l2": ["1", "q^2 - 1", "q^2", "q^2 + 1"],
        },
        "sz8": {
            "order": SZ8_ORDER.to_string(),
            "cd": CD_SZ8.iter().map(u64::to_string).collect::<Vec<_>>(),
            "projective_only": SZ8_PROJECTIVE_ONLY.iter().map(u64::to_string).collect::<Vec<_>>(),
        },
    });
    match format {
        Format::Json => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "Maximal subgroups (subfield row shown for alpha = 3):");
            for e in maximal_subgroups(4) {
                let index = match &e.index {
                    IndexFormula::Expr(x) => x.to_string(),
                    IndexFormula::Subfield { .. } => "|2F4(q^2)| / |2F4(q0^2)|".to_string(),
                };
                let _ = writeln!(out, "  {:<10} {:<34} {index}", e.name.to_string(), e.structure);
            }
            let _ = writeln!(out, "Character degrees:");
            for e in character_table() {
                let _ = writeln!(out, "  {:>2}  {}  [{}]", e.row, e.degree, e.multiplicity_printed);
            }
            let _ = writeln!(out, "Unipotent 2-parts:");
            for r in unipotent_table() {
                let _ = writeln!(out, "  {:<20} {:<40} {}", r.group, r.symbol, r.p_part);
            }
            out
        }
    }
}
