//! Buffered report rendering: a human layout and a line-oriented
//! `key=value` machine layout, switched by one flag. Identical inputs give
//! byte-identical reports apart from the suppressible timestamp line.

use std::fmt::Display;

use ifam_core::{SetFamily, VerificationReport};

pub struct Report {
    machine: bool,
    lines: Vec<String>,
}

impl Report {
    pub fn new(machine: bool, timestamp: bool) -> Self {
        let mut report = Report {
            machine,
            lines: Vec::new(),
        };
        if timestamp {
            let now = chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true);
            if machine {
                report.lines.push(format!("timestamp={now}"));
            } else {
                report.lines.push(format!("# run at {now}"));
            }
        }
        report
    }

    pub fn kv(&mut self, key: &str, value: impl Display) {
        if self.machine {
            self.lines.push(format!("{key}={value}"));
        } else {
            self.lines.push(format!("{key} = {value}"));
        }
    }

    /// Human-only prose; dropped from machine output.
    pub fn text(&mut self, line: impl Into<String>) {
        if !self.machine {
            self.lines.push(line.into());
        }
    }

    pub fn blank(&mut self) {
        if !self.machine {
            self.lines.push(String::new());
        }
    }

    pub fn emit(self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }
}

pub fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

pub fn pass_fail(v: bool) -> &'static str {
    if v {
        "pass"
    } else {
        "fail"
    }
}

/// A short label for a family: the named construction it equals, otherwise
/// its size.
pub fn family_label(family: &SetFamily) -> String {
    let n = family.ground_size();
    let k = family.uniformity();
    if SetFamily::star(n, k).as_ref() == Ok(family) {
        return format!("star({n},{k})");
    }
    if SetFamily::hilton_milner(n, k).as_ref() == Ok(family) {
        return format!("hm({n},{k})");
    }
    if k == 3 && SetFamily::k3_special(n).as_ref() == Ok(family) {
        return format!("k3-special({n})");
    }
    if k == 2 {
        if let Ok(triangle) = SetFamily::new(n, 2, &[vec![1, 2], vec![1, 3], vec![2, 3]]) {
            if &triangle == family {
                return "triangle".to_string();
            }
        }
    }
    format!("size-{}", family.len())
}

pub fn render_verification(out: &mut Report, report: &VerificationReport) {
    out.kv("n", report.n);
    out.kv("k", report.k);
    out.kv("bound", &report.bound);
    out.kv("max", &report.achieved);
    out.kv("extremal_count", report.extremal.len());
    for (idx, family) in report.extremal.iter().enumerate() {
        out.kv(&format!("extremal_{}", idx + 1), family_label(family));
        out.text(format!("  {family}"));
    }
    for check in &report.checks {
        out.kv(&format!("check.{}", check.name), pass_fail(check.pass));
        if let Some(witness) = &check.witness {
            out.kv(&format!("witness.{}", check.name), witness);
        }
    }
    for (idx, note) in report.notes.iter().enumerate() {
        out.kv(&format!("note_{}", idx + 1), note);
    }
    out.kv("result", pass_fail(report.passed()));
}
