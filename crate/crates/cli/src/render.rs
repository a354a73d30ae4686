//! Plain-text and CSV renderings of command payloads.

use apsum_core::cone::{AperyTable, ConeDecomposition, HilbertNumerator, RingProperties};
use apsum_core::family::AperyRecord;
use apsum_core::frobenius::PfResult;
use apsum_core::ideal::{BinomialGenerator, GastingerReport};
use apsum_core::sweep::SweepReport;
use serde_json::Value;

pub struct Rendered {
    pub table: String,
    pub csv: String,
}

/// Right-aligned columns separated by two spaces.
fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn csv(header: Option<&[&str]>, rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    if let Some(h) = header {
        out.push_str(&h.join(","));
        out.push('\n');
    }
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

fn both(header: &[&str], rows: Vec<Vec<String>>) -> Rendered {
    Rendered {
        table: columns(header, &rows),
        csv: csv(Some(header), &rows),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

pub fn key_values(v: &Value) -> Rendered {
    let rows: Vec<Vec<String>> = v
        .as_object()
        .map(|o| o.iter().map(|(k, v)| vec![k.clone(), scalar(v)]).collect())
        .unwrap_or_default();
    let width = rows.iter().map(|r| r[0].len()).max().unwrap_or(0);
    let table = rows
        .iter()
        .map(|r| format!("{:<width$}  {}\n", r[0], r[1]))
        .collect();
    Rendered {
        table,
        csv: csv(Some(&["key", "value"]), &rows),
    }
}

pub fn list(name: &str, values: &[u64]) -> Rendered {
    both(
        &[name],
        values.iter().map(|v| vec![v.to_string()]).collect(),
    )
}

pub fn apery(records: &[AperyRecord]) -> Rendered {
    let mut rows = vec![vec![
        "0".into(),
        "0".into(),
        "".into(),
        "".into(),
        "0".into(),
        "".into(),
    ]];
    rows.extend(records.iter().map(|r| {
        vec![
            r.n.to_string(),
            r.phi.to_string(),
            r.mu.to_string(),
            r.omega.to_string(),
            r.order.to_string(),
            format!("{:?}", r.expansion).replace(' ', ""),
        ]
    }));
    both(&["n", "phi", "mu", "omega", "order", "expansion"], rows)
}

pub fn apery_oracle(by_residue: &[u64], agrees: Option<bool>) -> Rendered {
    let rows: Vec<Vec<String>> = by_residue
        .iter()
        .enumerate()
        .map(|(i, w)| vec![i.to_string(), w.to_string()])
        .collect();
    let mut r = both(&["residue", "element"], rows);
    if let Some(a) = agrees {
        r.table.push_str(&format!("closed form agrees: {a}\n"));
    }
    r
}

pub fn pf(pf: &PfResult) -> Rendered {
    let rows = pf.pf.iter().map(|v| vec![v.to_string()]).collect();
    let mut r = both(&["pf"], rows);
    r.table.push_str(&format!(
        "frobenius {}, type {}, source {:?}\n",
        pf.frobenius, pf.type_count, pf.source_path
    ));
    r
}

pub fn catalog(gens: &[BinomialGenerator]) -> Rendered {
    let rows: Vec<Vec<String>> = gens
        .iter()
        .map(|g| vec![g.label.clone(), g.lhs.to_string(), g.rhs.to_string()])
        .collect();
    let table = rows
        .iter()
        .map(|r| format!("{:<6} {} - {}\n", r[0], r[1], r[2]))
        .collect();
    let csv_rows: Vec<Vec<String>> = gens
        .iter()
        .map(|g| {
            let mut r = vec![g.label.clone()];
            r.extend(g.lhs.0.iter().map(u32::to_string));
            r.extend(g.rhs.0.iter().map(u32::to_string));
            r
        })
        .collect();
    Rendered {
        table,
        csv: csv(
            Some(&[
                "label", "l1", "l2", "l3", "l4", "l5", "r1", "r2", "r3", "r4", "r5",
            ]),
            &csv_rows,
        ),
    }
}

pub fn gastinger(r: &GastingerReport) -> Rendered {
    let mut table = format!(
        "dimension {} (a = {}), pass {}, minimal {}, {} generators\n",
        r.dimension,
        r.seed.a(),
        r.pass,
        r.minimal,
        r.generators
    );
    if let Some(adj) = &r.adjudication {
        table.push_str(&format!(
            "strict reading: dimension {}; with g1..g7: dimension {}; accepted {:?}\n",
            adj.strict.dimension, adj.augmented.dimension, adj.accepted
        ));
    }
    let rows: Vec<Vec<String>> = r
        .drop_one_dims
        .iter()
        .map(|d| vec![d.label.clone(), d.dimension.to_string()])
        .collect();
    table.push_str(&columns(&["dropped", "dimension"], &rows));
    Rendered {
        table,
        csv: csv(Some(&["dropped", "dimension"]), &rows),
    }
}

pub fn table(t: &AperyTable) -> Rendered {
    let rows: Vec<Vec<String>> = t
        .rows
        .iter()
        .map(|r| r.iter().map(u64::to_string).collect())
        .collect();
    let labels: Vec<String> = (0..t.rows.len()).map(|s| format!("row {s}")).collect();
    let mut header = vec![""];
    let cols: Vec<String> = (0..t.a).map(|n| n.to_string()).collect();
    header.extend(cols.iter().map(String::as_str));
    let labelled: Vec<Vec<String>> = labels
        .into_iter()
        .zip(&rows)
        .map(|(l, r)| std::iter::once(l).chain(r.iter().cloned()).collect())
        .collect();
    Rendered {
        table: columns(&header, &labelled),
        csv: csv(None, &rows),
    }
}

pub fn cone(c: &ConeDecomposition, p: &RingProperties) -> Rendered {
    let rows: Vec<Vec<String>> = c
        .t_counts
        .iter()
        .enumerate()
        .map(|(k, t)| vec![k.to_string(), t.to_string()])
        .collect();
    let mut table = columns(&["k", "t_k"], &rows);
    table.push_str(&format!(
        "free {}, reduction number: formula {}, computed {}\n",
        c.free, c.reduction_number_formula, c.reduction_number_computed
    ));
    table.push_str(&format!(
        "cohen-macaulay {}, gorenstein {}, buchsbaum {}, type {}\n",
        p.cohen_macaulay,
        p.gorenstein,
        serde_json::to_value(p.buchsbaum)
            .map(|v| scalar(&v))
            .unwrap_or_default(),
        p.type_count
    ));
    Rendered {
        table,
        csv: csv(Some(&["k", "t_k"]), &rows),
    }
}

pub fn hilbert(h: &HilbertNumerator) -> Rendered {
    let rows: Vec<Vec<String>> = h
        .coefficients
        .iter()
        .enumerate()
        .map(|(k, c)| vec![k.to_string(), c.to_string()])
        .collect();
    Rendered {
        table: format!("{h}\n"),
        csv: csv(Some(&["k", "coefficient"]), &rows),
    }
}

pub fn sweep(r: &SweepReport) -> Rendered {
    let rows: Vec<Vec<String>> = r
        .per_seed
        .iter()
        .map(|s| {
            vec![
                s.a.to_string(),
                s.d.to_string(),
                s.m.to_string(),
                serde_json::to_value(s.verdict)
                    .map(|v| scalar(&v))
                    .unwrap_or_default(),
                s.ms.to_string(),
            ]
        })
        .collect();
    let mut table = format!(
        "{} seeds: {} match, {} mismatch, {} violation, {} skip\n",
        r.per_seed.len(),
        r.counts.matched,
        r.counts.mismatch,
        r.counts.violation,
        r.counts.skip
    );
    if r.resumed > 0 {
        table.push_str(&format!("resumed {} records\n", r.resumed));
    }
    if let Some(line) = r.corrupt_line {
        table.push_str(&format!("dropped corrupt checkpoint line {line}\n"));
    }
    for c in &r.counterexamples {
        table.push_str(&format!(
            "counterexample ({}, {}): {}\n",
            c.a,
            c.d,
            serde_json::to_string(&c.witness).unwrap_or_default()
        ));
    }
    Rendered {
        table,
        csv: csv(Some(&["a", "d", "m", "verdict", "ms"]), &rows),
    }
}
