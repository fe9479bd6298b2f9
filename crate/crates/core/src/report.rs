//! Certificate rendering: one CSV row per q for sweeps, a text block for
//! single runs. Column order is part of the output contract; change it and
//! downstream diffs break.

use std::fmt::Write as _;

use crate::excision::CertificateReport;

pub const CSV_HEADER: &str = "q,p,e,n_before,m_before,t,k,capped,t_S,e_S,n_after,m_after,\
abl_bound,improvement,sidon_ok,diffset_ok,c4_free_ok,atmost2_ok,pairing_ok,dichotomy_ok,\
triple_ok,eq2_ok";

pub fn csv_row(r: &CertificateReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.q,
        r.p,
        r.e,
        r.n_before,
        r.m_before,
        r.t,
        r.k,
        r.capped,
        r.t_s,
        r.e_s,
        r.n_after,
        r.m_after,
        r.abl_bound,
        r.improvement,
        r.sidon_ok,
        r.diffset_ok,
        r.c4_free_ok,
        r.atmost2_ok,
        r.pairing_ok,
        r.dichotomy_ok,
        r.triple_ok,
        r.eq2_ok
    )
}

/// Header plus one row per report, trailing newline included.
pub fn render_csv(reports: &[CertificateReport]) -> String {
    let mut out = String::with_capacity(64 * (reports.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&csv_row(r));
        out.push('\n');
    }
    out
}

/// Human-readable certificate block.
pub fn render_text(r: &CertificateReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "certificate q = {} (p = {}, e = {})", r.q, r.p, r.e);
    let _ = writeln!(s, "  n_before = {}  m_before = {}", r.n_before, r.m_before);
    let _ = writeln!(s, "  t = {}  absolute points = {}", r.t, 2 * r.t);
    let _ = writeln!(
        s,
        "  k = {}  k_effective = {}  capped = {}",
        r.k, r.k_effective, r.capped
    );
    let _ = writeln!(
        s,
        "  |S1| = {}  |S2| = {}  |S3| = {}  s2_overlaps_s1 = {}",
        r.s1_size, r.s2_size, r.s3_size, r.s2_overlaps_s1
    );
    let _ = writeln!(s, "  t_S = {}  e_S = {}  e_cross = {}", r.t_s, r.e_s, r.e_cross);
    let _ = writeln!(s, "  n_after = {}  m_after = {}", r.n_after, r.m_after);
    let _ = writeln!(
        s,
        "  abl_bound = {}  improvement = {}",
        r.abl_bound, r.improvement
    );
    let _ = writeln!(s, "  checks:");
    for o in &r.oracle_details {
        let status = if o.passed { "pass" } else { "FAIL" };
        let _ = write!(s, "    {}: {} (work = {})", o.name, status, o.work);
        match &o.witness {
            Some(w) => {
                let _ = writeln!(s, " witness: {w}");
            }
            None => {
                let _ = writeln!(s);
            }
        }
    }
    if r.all_ok() {
        let _ = writeln!(s, "  verdict: all checks passed");
    } else {
        let failed: Vec<&str> = r
            .oracle_details
            .iter()
            .filter(|o| !o.passed)
            .map(|o| o.name)
            .collect();
        let _ = writeln!(s, "  verdict: FAILED ({})", failed.join(", "));
    }
    s
}
