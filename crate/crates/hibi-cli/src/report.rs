//! Report structures and their human/JSON renderings.

use hibi_core::rat::{format_decimal, format_ratio, Int, Rat};
use hibi_core::ClassVector;
use serde::Serialize;

/// Renders `s` over the common denominator `d!`, the form the per-class
/// counts naturally carry; falls back to the reduced form if `s * d!` is not
/// an integer (it always is for cell volumes).
pub fn over_dfact(s: &Rat, d: usize) -> String {
    let mut dfact = Int::from(1);
    for k in 1..=d as u64 {
        dfact *= Int::from(k);
    }
    let scaled = s * Rat::from_integer(dfact.clone());
    if hibi_core::rat::is_integer(&scaled) {
        format!("{}/{}", scaled.to_integer(), dfact)
    } else {
        format_ratio(s)
    }
}

pub fn class_label(c: &ClassVector) -> String {
    format!("{c}")
}

#[derive(Debug, Serialize)]
pub struct ValidateReport {
    pub poset: String,
    pub elements: usize,
    pub dim: usize,
    pub edges: usize,
    pub pure: bool,
    pub gorenstein: bool,
    pub circuits: usize,
}

impl ValidateReport {
    pub fn render(&self) -> String {
        format!(
            "poset: {}\nelements: {}\nd: {}\nn: {}\npure: {}\ngorenstein: {}\ncircuits: {}\n",
            self.poset,
            self.elements,
            self.dim,
            self.edges,
            self.pure,
            self.gorenstein,
            self.circuits
        )
    }
}

#[derive(Debug, Serialize)]
pub struct ConicReport {
    pub poset: String,
    pub tree: Vec<String>,
    pub class_count: usize,
    pub region: Vec<String>,
    pub classes: Vec<Vec<i64>>,
}

impl ConicReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("poset: {}\n", self.poset));
        out.push_str(&format!("tree: {}\n", self.tree.join(" ")));
        out.push_str("region:\n");
        for row in &self.region {
            out.push_str(&format!("  {row}\n"));
        }
        out.push_str(&format!("classes: {}\n", self.class_count));
        for c in &self.classes {
            out.push_str(&format!("  {}\n", class_label(&ClassVector(c.clone()))));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct ClassRow {
    pub class: Vec<i64>,
    pub conic: bool,
    pub s_reduced: String,
    pub s_over_dfact: String,
    pub decimal: String,
    pub volume: Option<String>,
    pub descent: Option<String>,
    pub consistent: bool,
}

#[derive(Debug, Serialize)]
pub struct CheckLine {
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct FsigReport {
    pub poset: String,
    pub dim: usize,
    pub edges: usize,
    pub tree: Vec<String>,
    pub pure: bool,
    pub gorenstein: bool,
    pub method: String,
    pub classes: Vec<ClassRow>,
    pub sum_check: Option<CheckLine>,
    pub duality_check: Option<CheckLine>,
    pub consistent: bool,
}

fn pad(s: &str, w: usize) -> String {
    let mut out = String::from(s);
    while out.len() < w {
        out.push(' ');
    }
    out
}

impl FsigReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "poset: {}  d={}  n={}\n",
            self.poset, self.dim, self.edges
        ));
        out.push_str(&format!("tree: {}\n", self.tree.join(" ")));
        out.push_str(&format!(
            "pure: {}  gorenstein: {}\nmethod: {}\n\n",
            self.pure, self.gorenstein, self.method
        ));
        let headers = ["class", "s", "s(/d!)", "decimal", "volume", "descent", "ok"];
        let rows: Vec<[String; 7]> = self
            .classes
            .iter()
            .map(|r| {
                [
                    class_label(&ClassVector(r.class.clone())),
                    r.s_reduced.clone(),
                    r.s_over_dfact.clone(),
                    r.decimal.clone(),
                    r.volume.clone().unwrap_or_else(|| "-".into()),
                    r.descent.clone().unwrap_or_else(|| "-".into()),
                    if r.consistent { "ok".into() } else { "FAIL".into() },
                ]
            })
            .collect();
        let mut widths = [0usize; 7];
        for (k, h) in headers.iter().enumerate() {
            widths[k] = h.len();
        }
        for row in &rows {
            for (k, cell) in row.iter().enumerate() {
                widths[k] = widths[k].max(cell.len());
            }
        }
        let fmt_row = |cells: &[String; 7]| -> String {
            let mut line = String::new();
            for (k, cell) in cells.iter().enumerate() {
                line.push_str(&pad(cell, widths[k] + 2));
            }
            line.trim_end().to_string()
        };
        let header_cells: [String; 7] = core::array::from_fn(|k| headers[k].to_string());
        out.push_str(&fmt_row(&header_cells));
        out.push('\n');
        for row in &rows {
            out.push_str(&fmt_row(row));
            out.push('\n');
        }
        out.push('\n');
        if let Some(check) = &self.sum_check {
            out.push_str(&format!(
                "sum: {} ({})\n",
                check.detail,
                if check.passed { "ok" } else { "FAIL" }
            ));
        }
        if let Some(check) = &self.duality_check {
            out.push_str(&format!(
                "duality: {}\n",
                if check.passed { "ok" } else { "FAIL" }
            ));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct FrobeniusRow {
    pub class: Vec<i64>,
    pub count: u64,
    pub frequency: String,
    pub exact: String,
    pub deviation: String,
    pub deviation_decimal: String,
}

#[derive(Debug, Serialize)]
pub struct FrobeniusReport {
    pub poset: String,
    pub tree: Vec<String>,
    pub q: u32,
    pub q_label: String,
    pub dim: usize,
    pub grid: u64,
    pub rows: Vec<FrobeniusRow>,
    pub total: u64,
    pub total_ok: bool,
    pub support: usize,
    pub conic_classes: usize,
    pub max_deviation: String,
}

impl FrobeniusReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("poset: {}\n", self.poset));
        out.push_str(&format!("tree: {}\n", self.tree.join(" ")));
        out.push_str(&format!(
            "q: {}{}  grid: {}^{} = {}\n\n",
            self.q, self.q_label, self.q, self.dim, self.grid
        ));
        out.push_str("class  count  frequency  exact  deviation  ~deviation\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{}  {}  {}  {}  {}  {}\n",
                class_label(&ClassVector(r.class.clone())),
                r.count,
                r.frequency,
                r.exact,
                r.deviation,
                r.deviation_decimal
            ));
        }
        out.push_str(&format!(
            "\ntotal: {} ({})\nsupport: {} of {} classes\nmax deviation: {}\n",
            self.total,
            if self.total_ok { "ok" } else { "FAIL" },
            self.support,
            self.conic_classes,
            self.max_deviation
        ));
        out
    }
}

#[derive(Debug, Serialize)]
pub struct SegreRow {
    pub class: Vec<i64>,
    pub closed_form: Option<String>,
    pub theorem_count: String,
    pub engine: String,
    pub volume: Option<String>,
    pub consistent: bool,
}

#[derive(Debug, Serialize)]
pub struct SegreReport {
    pub sizes: Vec<u32>,
    pub dim: usize,
    pub poset: String,
    pub rows: Vec<SegreRow>,
    pub note: Option<String>,
    pub consistent: bool,
}

impl SegreReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let sizes: Vec<String> = self.sizes.iter().map(|r| r.to_string()).collect();
        out.push_str(&format!(
            "sizes: ({})  d={}  poset: {}\n\n",
            sizes.join(","),
            self.dim,
            self.poset
        ));
        out.push_str("class  closed  counted  engine  volume  ok\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{}  {}  {}  {}  {}  {}\n",
                class_label(&ClassVector(r.class.clone())),
                r.closed_form.clone().unwrap_or_else(|| "-".into()),
                r.theorem_count,
                r.engine,
                r.volume.clone().unwrap_or_else(|| "-".into()),
                if r.consistent { "ok" } else { "FAIL" }
            ));
        }
        if let Some(note) = &self.note {
            out.push_str(&format!("\nnote: {note}\n"));
        }
        out
    }
}

/// Shared rendering of one exact value for rows.
pub fn value_strings(s: &Rat, d: usize) -> (String, String, String) {
    (format_ratio(s), over_dfact(s, d), format_decimal(s))
}
