use serde_json::Value;

use star_spectra::extremal::{BoundReport, BoundValue};
use star_spectra::search::{EdgeScan, MarginTable, SearchRecord, SuiteReport};
use star_spectra::spectra::PerronFloor;
use star_spectra::Graph;

/// Collects result objects and prints each one as it arrives.
pub struct Output {
    json: bool,
    values: Vec<Value>,
}

impl Output {
    pub fn new(json: bool) -> Output {
        Output { json, values: Vec::new() }
    }

    pub fn emit(&mut self, value: Value, text: String) {
        if self.json {
            println!("{value}");
        } else {
            println!("{text}");
        }
        self.values.push(value);
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }
}

/// Twelve significant digits, trailing zeros dropped.
pub fn sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&mag) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(sig).unwrap_or_else(|| "-".into())
}

fn rows(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn bound_table(r: &BoundReport) -> String {
    let p = &r.params;
    let mut pairs = vec![("bound", r.name.clone())];
    if let Some(f) = &p.forest {
        pairs.push(("forest", f.to_string()));
    }
    for (key, v) in [("n", p.n), ("k", p.k), ("d", p.d)] {
        if let Some(v) = v {
            pairs.push((key, v.to_string()));
        }
    }
    match &r.value {
        BoundValue::Real { value } => pairs.push(("value", sig(*value))),
        BoundValue::Integer { value } => pairs.push(("value", value.to_string())),
        BoundValue::Rational {
            decimal,
            numerator,
            denominator,
        } => {
            pairs.push(("value", decimal.clone()));
            pairs.push(("exact", format!("{numerator}/{denominator}")));
        }
    }
    if let Some(g) = &r.attained_by {
        pairs.push(("attained_by", g.clone()));
    }
    rows(&pairs)
}

pub fn search_table(r: &SearchRecord) -> String {
    rows(&[
        ("n", r.n.to_string()),
        ("class", r.class.to_string()),
        ("forest", r.forest.to_string()),
        ("enumerated", r.count_enumerated.to_string()),
        ("f_free", r.count_f_free.to_string()),
        ("max_rho", sig(r.max_rho)),
        ("argmax", r.argmax.join(" ")),
        ("bound", opt(r.bound_value)),
        ("bound_applicable", r.bound_applicable.to_string()),
        ("gap", opt(r.gap)),
        ("family", r.family.clone().unwrap_or_else(|| "-".into())),
        ("family_rho", opt(r.family_rho)),
    ])
}

pub fn edge_table(s: &EdgeScan) -> String {
    let mut out = rows(&[
        ("n", s.n.to_string()),
        ("class", s.class.to_string()),
        ("forest", s.forest.to_string()),
        ("bound", s.bound.to_string()),
        ("f_free", s.count_f_free.to_string()),
        ("max_edges", s.max_edges.to_string()),
        ("violations", s.violations.len().to_string()),
    ]);
    for v in &s.violations {
        out.push_str(&format!("\n  {} edges={} bound={}", v.graph, v.edges, v.bound));
    }
    out
}

pub fn suite_table(s: &SuiteReport) -> String {
    let mut out = rows(&[
        ("suite", s.suite.clone()),
        ("checked", s.checked.to_string()),
        ("violations", s.violations.len().to_string()),
    ]);
    for v in &s.violations {
        out.push_str(&format!("\n  {v}"));
    }
    out
}

pub fn margin_table(t: &MarginTable) -> String {
    let mut out = rows(&[
        ("n", t.n.to_string()),
        ("class", t.class.to_string()),
        ("forest", t.forest.to_string()),
        ("bound", sig(t.bound)),
        ("f_free", t.count_f_free.to_string()),
        ("max_margin", sig(t.max_margin)),
        ("argmax", t.argmax.join(" ")),
        ("exceeding", t.exceeding.len().to_string()),
    ]);
    for row in t.reference.iter().chain(&t.exceeding) {
        out.push_str(&format!(
            "\n  {:<10} {:<12} q={} margin={}",
            row.label,
            row.graph,
            sig(row.q),
            sig(row.margin)
        ));
    }
    out
}

pub fn perron_table(p: &PerronFloor) -> String {
    let vector = p.perron.vector.iter().map(|&x| sig(x)).collect::<Vec<_>>().join(" ");
    rows(&[
        ("rho", sig(p.perron.rho)),
        ("vector", vector),
        ("min_entry", sig(p.perron.min_entry)),
        ("floor_holds", p.holds.to_string()),
        ("margin", sig(p.margin)),
        ("residual", sig(p.perron.residual)),
    ])
}

pub fn info_table(g: &Graph, sides: Option<(usize, usize)>) -> String {
    let degrees = g.degrees().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
    rows(&[
        ("order", g.order().to_string()),
        ("edges", g.edge_count().to_string()),
        ("degrees", degrees),
        ("connected", g.is_connected().to_string()),
        (
            "bipartite",
            sides.map(|(a, b)| format!("{a}+{b}")).unwrap_or_else(|| "false".into()),
        ),
        ("triangle_free", g.is_triangle_free().to_string()),
    ])
}
