//! Text and `key=value` renderings of a classification.

use std::fmt::{self, Write as _};

use super::{Classification, CountReport, FsEntry, Verdict};
use crate::dectab::DecompositionData;
use crate::grp::Reality;

/// Flat `key=value` lines in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MachineReport {
    entries: Vec<(String, String)>,
}

impl MachineReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn extend(&mut self, other: MachineReport) {
        self.entries.extend(other.entries);
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }
}

impl fmt::Display for MachineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

fn list<'a>(items: impl IntoIterator<Item = &'a str>) -> String {
    let v: Vec<&str> = items.into_iter().collect();
    if v.is_empty() { "-".into() } else { v.join(",") }
}

/// Renders a classification as (human text, machine report).
pub fn classification_report(
    dd: &DecompositionData,
    c: &Classification,
    counts: &CountReport,
    fs: Option<&[FsEntry]>,
) -> (String, MachineReport) {
    let class_name = |u: usize| dd.classes()[u].name.as_str();
    let classes_with = |r: Reality| -> Vec<&str> {
        let mut idx: Vec<usize> = (0..c.reality.len()).filter(|&u| c.reality[u] == r).collect();
        idx.sort_by_key(|&u| (dd.classes()[u].element_order, class_name(u)));
        idx.into_iter().map(class_name).collect()
    };
    let chars = |i: usize| dd.table().map_or_else(|| format!("chi{}", i + 1), |t| t.characters()[i].name.clone());

    let mut m = MachineReport::new();
    m.push("group", dd.label());
    m.push("mode", c.mode.as_str());
    m.push("brauer_characters", dd.num_brauer());
    m.push("classes.strongly_real", list(classes_with(Reality::StronglyReal)));
    m.push("classes.weakly_real", list(classes_with(Reality::WeaklyReal)));
    m.push("pims.quadratic", list(c.labels_with(Verdict::Quadratic)));
    m.push("pims.non_quadratic", list(c.labels_with(Verdict::NonQuadratic)));
    m.push("pims.not_self_dual", list(c.labels_with(Verdict::NotSelfDual)));
    m.push("count.quadratic", counts.quadratic);
    m.push("count.non_quadratic", counts.non_quadratic);
    m.push("count.not_self_dual", c.count(Verdict::NotSelfDual));
    m.push("count.strongly_real", counts.strongly_real);
    m.push("count.weakly_real", counts.weakly_real);
    m.push("counts.hold", counts.holds());

    let mut t = String::new();
    let _ = writeln!(t, "group {} ({} mode)", dd.label(), c.mode.as_str());
    let _ = writeln!(t, "strongly real 2-regular classes: {}", classes_with(Reality::StronglyReal).join(" "));
    let _ = writeln!(t, "weakly real 2-regular classes:   {}", classes_with(Reality::WeaklyReal).join(" "));
    let _ = writeln!(t);
    for v in &c.verdicts {
        let p = &v.label;
        m.push(format!("pim.{p}.verdict"), v.verdict);
        let _ = write!(t, "{p:<8} {:<14}", v.verdict.as_str());
        if !v.self_dual {
            let _ = writeln!(t);
            continue;
        }
        let strong = v.strong_witness.map_or("-", class_name);
        let weak = v.weak_witness.map_or("-", class_name);
        m.push(format!("pim.{p}.witness.strong"), strong);
        m.push(format!("pim.{p}.witness.weak"), weak);
        let even: Vec<String> = v.evenness.iter().map(|(u, x)| format!("{}:{x}", class_name(*u))).collect();
        m.push(format!("pim.{p}.evenness"), even.join(";"));
        match v.verdict {
            Verdict::Quadratic => {
                let _ = write!(t, " {p}({strong}) = {} is odd", dd.phi(v.index)[v.strong_witness.unwrap()]);
            }
            _ => {
                let _ = write!(t, " even at strongly real classes [{}]", even.join(", "));
                if let Some(u) = v.weak_witness {
                    let _ = write!(t, "; Phi/|C| at {} not in 2R", class_name(u));
                }
            }
        }
        if let Some(e) = fs.and_then(|f| f.iter().find(|e| e.pim == v.index)) {
            let sym_odd: Vec<String> = e.symplectic_odd.iter().map(|&i| chars(i)).collect();
            let sym: Vec<String> = e.symplectic.iter().map(|&(i, k)| format!("{}:{k}", chars(i))).collect();
            m.push(format!("pim.{p}.fs.symplectic_odd"), list(sym_odd.iter().map(String::as_str)));
            m.push(format!("pim.{p}.fs.symplectic"), list(sym.iter().map(String::as_str)));
            m.push(format!("pim.{p}.fs.epsilon"), e.epsilon);
            if !sym_odd.is_empty() {
                let _ = write!(t, "; odd symplectic constituents {}", sym_odd.join(" "));
            }
            let _ = write!(t, "; epsilon = {}", e.epsilon);
        }
        let _ = writeln!(t);
    }
    let _ = writeln!(t);
    let _ = writeln!(
        t,
        "quadratic {} = strongly real {}; non-quadratic {} = weakly real {}: {}",
        counts.quadratic,
        counts.strongly_real,
        counts.non_quadratic,
        counts.weakly_real,
        if counts.holds() { "ok" } else { "MISMATCH" }
    );
    for (i, w) in c.warnings.iter().enumerate() {
        m.push(format!("warning.{}", i + 1), w);
        let _ = writeln!(t, "warning: {w}");
    }
    (t, m)
}
