use std::fmt::Write;

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ledger: Option<LedgerBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<IdentityBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groebner: Option<GroebnerBlock>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationBlock {
    pub ambient: String,
    pub variables: Vec<String>,
    pub rows: usize,
    pub cols: usize,
    pub t: usize,
    pub expected_codimension: usize,
    pub codimension: Option<usize>,
    pub dim: Option<usize>,
    pub empty: bool,
    pub determinantal: bool,
    pub singular_locus_dim: i64,
    pub isolated_singularity: bool,
    pub germ_ambient_dim: usize,
    pub smoothability_bound: usize,
    pub smoothable: bool,
    pub singular_points: Vec<String>,
    pub singular_points_complete: bool,
    pub local_support: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LedgerBlock {
    #[serde(rename = "chi_X")]
    pub chi_x: Option<i64>,
    pub entries: Vec<EntryBlock>,
    pub records: Vec<RecordBlock>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryBlock {
    pub point: String,
    pub role: String,
    pub index: Option<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecordBlock {
    pub point: String,
    pub n: usize,
    pub p: usize,
    pub t: usize,
    pub d: usize,
    pub smoothable: bool,
    pub mu: Option<u64>,
    pub chi_smoothing: Option<i64>,
    pub chi_lower_stratum: Option<i64>,
    pub defect: Option<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityBlock {
    /// `verified`, `violated` or `solved`.
    pub result: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unknown: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<i64>,
    pub lhs: i64,
    pub rhs: i64,
    #[serde(rename = "chi_X")]
    pub chi_x: i64,
    pub defect_sum: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroebnerBlock {
    pub ideal: String,
    pub setting: String,
    pub variables: Vec<String>,
    pub order: String,
    pub basis: Vec<String>,
    pub dimension: i64,
    pub quotient_dimension: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<u64>,
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "?".to_string(), ToString::to_string)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        write!(w, "{} {}", self.command, self.input).unwrap();
        if let Some(at) = &self.at {
            write!(w, " --at {}", at).unwrap();
        }
        if let Some(ideal) = &self.ideal {
            write!(w, " --ideal {}", ideal).unwrap();
        }
        writeln!(w).unwrap();
        if let Some(c) = &self.classification {
            writeln!(w, "model: {}x{} matrix, t = {}, {} over ({})", c.rows, c.cols, c.t, c.ambient, c.variables.join(", "))
                .unwrap();
            if c.empty {
                writeln!(w, "variety: empty").unwrap();
            } else {
                writeln!(
                    w,
                    "variety: codimension {} (expected {}), dimension {}, determinantal: {}",
                    opt(&c.codimension),
                    c.expected_codimension,
                    opt(&c.dim),
                    yes(c.determinantal)
                )
                .unwrap();
            }
            let locus = if c.singular_locus_dim < 0 { "empty".to_string() } else { format!("dimension {}", c.singular_locus_dim) };
            writeln!(w, "singular locus: {}, isolated: {}", locus, yes(c.isolated_singularity)).unwrap();
            let pts = if c.singular_points.is_empty() { "none".to_string() } else { c.singular_points.join(" ") };
            let incomplete = if c.singular_points_complete { "" } else { " (incomplete: irrational points)" };
            writeln!(w, "singular points: {}{}", pts, incomplete).unwrap();
            let rel = if c.smoothable { "<" } else { ">=" };
            writeln!(
                w,
                "smoothable: {} ({} {} {})",
                yes(c.smoothable),
                c.germ_ambient_dim,
                rel,
                c.smoothability_bound
            )
            .unwrap();
            writeln!(w, "local support: {}", c.local_support).unwrap();
        }
        if let Some(l) = &self.ledger {
            writeln!(w, "ledger:").unwrap();
            for e in &l.entries {
                writeln!(w, "  {}  {}  index {}", e.point, e.role, opt(&e.index)).unwrap();
            }
            for r in &l.records {
                writeln!(
                    w,
                    "  record {}  (n, p, t) = ({}, {}, {})  d = {}  smoothable: {}  mu {}  chi_smoothing {}  chi_lower {}  defect {}",
                    r.point,
                    r.n,
                    r.p,
                    r.t,
                    r.d,
                    yes(r.smoothable),
                    opt(&r.mu),
                    opt(&r.chi_smoothing),
                    opt(&r.chi_lower_stratum),
                    opt(&r.defect)
                )
                .unwrap();
            }
            writeln!(w, "  chi_X {}", opt(&l.chi_x)).unwrap();
        }
        if let Some(i) = &self.identity {
            if let (Some(u), Some(v)) = (&i.unknown, i.value) {
                writeln!(w, "solved: {} = {}", u, v).unwrap();
            }
            let rel = if i.lhs == i.rhs { "=" } else { "!=" };
            writeln!(
                w,
                "identity: {}: {} {} {} + {} (sum of indices, chi_X + sum of defects)",
                i.result, i.lhs, rel, i.chi_x, i.defect_sum
            )
            .unwrap();
        }
        if let Some(g) = &self.groebner {
            writeln!(w, "ideal: {} in {} ({})", g.ideal, g.setting, g.variables.join(", ")).unwrap();
            writeln!(w, "reduced {} basis ({} elements):", g.order, g.basis.len()).unwrap();
            for b in &g.basis {
                writeln!(w, "  {}", b).unwrap();
            }
            writeln!(w, "dimension: {}", g.dimension).unwrap();
            writeln!(w, "quotient dimension: {}", opt(&g.quotient_dimension).replace('?', "infinite")).unwrap();
            if let Some(k) = g.index {
                writeln!(w, "index at origin: {}", k).unwrap();
            }
        }
        out
    }
}
