use std::fmt::Write as _;

use pimtype_core::classify::{
    classification_report, classify_pims, fs_report, run_battery, verify_counts, ClassifyError, Divisibility,
    MachineReport, Verdict,
};
use pimtype_core::grp::{catalog, ex288_elements, ClassRealityReport, Reality, CATALOG};
use pimtype_core::meataxe::{derive_decomposition, oracle_enumerated, ChopConfig, OracleReport};
use pimtype_core::fixtures;
use rayon::prelude::*;

use crate::args::{ClassifyArgs, Format, OracleArgs, RealityArgs};
use crate::input::{self, Source};
use crate::{CliError, Output};

fn emit(format: Format, text: String, machine: MachineReport, ok: bool) -> Output {
    let body = match format {
        Format::Text => text,
        Format::Machine => machine.to_string(),
    };
    Output { body, code: if ok { 0 } else { 1 } }
}

fn list(v: &[String]) -> String {
    if v.is_empty() { "-".into() } else { v.join(",") }
}

fn names(r: &ClassRealityReport, reality: Reality, two_regular: bool) -> Vec<String> {
    r.names_with(reality, two_regular)
}

fn reality_census(r: &ClassRealityReport) -> Vec<(u64, usize, Reality)> {
    let mut v: Vec<_> = r.classes.iter().map(|c| (c.element_order, c.size, c.reality)).collect();
    v.sort();
    v
}

fn reality_lines(r: &ClassRealityReport, prefix: &str, m: &mut MachineReport, t: &mut String) {
    for c in &r.classes {
        m.push(format!("{prefix}class.{}.order", c.name), c.element_order);
        m.push(format!("{prefix}class.{}.size", c.name), c.size);
        m.push(format!("{prefix}class.{}.reality", c.name), c.reality);
        let _ = write!(t, "{:<6} order {:<4} size {:<10} {}", c.name, c.element_order, c.size, c.reality);
        if let Some(rep) = &c.representative {
            let _ = write!(t, "  {rep}");
        }
        let _ = writeln!(t);
    }
    for (reality, key) in [(Reality::StronglyReal, "strongly_real"), (Reality::WeaklyReal, "weakly_real")] {
        m.push(format!("{prefix}classes.{key}"), list(&names(r, reality, false)));
        m.push(format!("{prefix}classes.{key}_2regular"), list(&names(r, reality, true)));
    }
    m.push(format!("{prefix}count.strongly_real_2regular"), r.strongly_real_two_regular());
    m.push(format!("{prefix}count.weakly_real_2regular"), r.weakly_real_two_regular());
}

pub fn reality(args: &RealityArgs, format: Format) -> Result<Output, CliError> {
    let mut m = MachineReport::new();
    let mut t = String::new();
    if args.cross_check {
        let Some(recipe) = &args.input.group else {
            return Err(CliError::Input("--cross-check needs --group and a table (--fixture or --table)".into()));
        };
        let table = input::table_from(&args.input)?
            .ok_or_else(|| CliError::Input("--cross-check needs --fixture or --table".into()))?;
        let from_table = table.reality_report()?;
        let from_group = input::enumerate(recipe, usize::MAX)?.reality_classification();
        let agree = reality_census(&from_table) == reality_census(&from_group);
        let _ = writeln!(t, "from the table:");
        reality_lines(&from_table, "table.", &mut m, &mut t);
        let _ = writeln!(t, "\nfrom the group {recipe}:");
        reality_lines(&from_group, "group.", &mut m, &mut t);
        let verdict = if agree { "agree" } else { "mismatch" };
        m.push("cross_check", verdict);
        let _ = writeln!(t, "\ncross-check (order, size, reality multisets): {verdict}");
        return Ok(emit(format, t, m, agree));
    }
    let report = match input::source(&args.input) {
        Ok(Source::Group(recipe)) => {
            m.push("source", format!("group:{recipe}"));
            input::enumerate(&recipe, usize::MAX)?.reality_classification()
        }
        Ok(_) | Err(_) if args.input.fixture.is_some() || args.input.table.is_some() => {
            let table = input::table_from(&args.input)?.expect("table input");
            m.push("source", "table");
            table.reality_report()?
        }
        Ok(_) => unreachable!("fixture and file sources carry a table"),
        Err(e) => return Err(e),
    };
    reality_lines(&report, "", &mut m, &mut t);
    Ok(emit(format, t, m, true))
}

/// Keys for the two distinguished classes of the order-288 example.
fn ex288_keys(loaded: &input::Loaded, m: &mut MachineReport, t: &mut String) {
    let Some(g) = &loaded.group else { return };
    if g.name != "ex288" {
        return;
    }
    let (x1, xx) = ex288_elements(g);
    for (key, idx) in [("xx", xx), ("x1", x1)] {
        let class = &g.classes()[g.class_of(idx)];
        let reality = loaded
            .reality
            .classes
            .iter()
            .find(|c| c.name == class.name)
            .map_or(Reality::NonReal, |c| c.reality);
        m.push(format!("example.{key}.class"), &class.name);
        m.push(format!("example.{key}.reality"), reality);
        let _ = writeln!(t, "class of ({}) is {} ({reality})", if key == "xx" { "x,x" } else { "x,1" }, class.name);
    }
}

fn oracle_agreement(o: &OracleReport, c: &pimtype_core::Classification, m: &mut MachineReport, t: &mut String) -> bool {
    let agree = o.quadratic_mask() == c.quadratic_mask();
    let q: Vec<String> = o.labels_with(Verdict::Quadratic).iter().map(|s| s.to_string()).collect();
    m.push("oracle.field_degree", o.field_degree);
    m.push("oracle.pims.quadratic", list(&q));
    m.push("oracle.agrees", agree);
    let _ = writeln!(t, "oracle over GF(2^{}): quadratic {}; agrees with criteria: {agree}", o.field_degree, q.join(" "));
    agree
}

pub fn classify(args: &ClassifyArgs, format: Format) -> Result<Output, CliError> {
    let mode = if args.strict_local { Divisibility::StrictLocal } else { Divisibility::AlgInt };
    let loaded = input::load(&args.input)?;
    let c = classify_pims(&loaded.data, &loaded.reality, mode)?;
    let counts = verify_counts(&c);
    let fs = match fs_report(&loaded.data, &c) {
        Ok(f) => Some(f),
        Err(ClassifyError::NoDecomposition) => None,
        Err(e) => return Err(e.into()),
    };
    let (mut t, mut m) = classification_report(&loaded.data, &c, &counts, fs.as_deref());
    let mut ok = counts.holds();
    if let Some(o) = &loaded.oracle {
        ok &= oracle_agreement(o, &c, &mut m, &mut t);
    }
    ex288_keys(&loaded, &mut m, &mut t);
    Ok(emit(format, t, m, ok))
}

pub fn verify(args: &ClassifyArgs, format: Format) -> Result<Output, CliError> {
    let mode = if args.strict_local { Divisibility::StrictLocal } else { Divisibility::AlgInt };
    let loaded = input::load(&args.input)?;
    let checks = run_battery(&loaded.data, &loaded.reality, mode)?;
    let mut m = MachineReport::new();
    let mut t = String::new();
    m.push("group", loaded.data.label());
    let _ = writeln!(t, "group {} ({} mode)", loaded.data.label(), mode.as_str());
    for ch in &checks {
        m.push(format!("check.{}", ch.name), if ch.pass { "pass" } else { "fail" });
        let _ = writeln!(t, "{} {:<28} {}", if ch.pass { "PASS" } else { "FAIL" }, ch.name, ch.detail);
    }
    let ok = checks.iter().all(|c| c.pass);
    m.push("all_pass", ok);
    Ok(emit(format, t, m, ok))
}

struct CatalogRow {
    name: String,
    order: usize,
    degree: u32,
    counts: (usize, usize, usize),
    strong: usize,
    weak: usize,
    agree: bool,
}

fn catalog_row(name: &str, g: &pimtype_core::PermGroup, cfg: &ChopConfig, bound: usize) -> Result<CatalogRow, CliError> {
    let e = g.enumerate_bounded(bound)?;
    let o = oracle_enumerated(&e, cfg)?;
    let reality = e.reality_classification();
    let c = classify_pims(&o.data, &reality, Divisibility::AlgInt)?;
    let q = o.count(Verdict::Quadratic);
    let nq = o.count(Verdict::NonQuadratic);
    let (strong, weak) = (reality.strongly_real_two_regular(), reality.weakly_real_two_regular());
    let agree = o.quadratic_mask() == c.quadratic_mask() && verify_counts(&c).holds() && q == strong && nq == weak;
    Ok(CatalogRow {
        name: name.to_string(),
        order: o.order,
        degree: o.field_degree,
        counts: (q, nq, o.count(Verdict::NotSelfDual)),
        strong,
        weak,
        agree,
    })
}

fn sorted_columns(d: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = d.first().map_or(0, Vec::len);
    let mut cols: Vec<Vec<i64>> = (0..l).map(|j| d.iter().map(|r| r[j]).collect()).collect();
    cols.sort();
    cols
}

pub fn oracle(args: &OracleArgs, format: Format) -> Result<Output, CliError> {
    let cfg = ChopConfig { seed: args.input.seed, ..ChopConfig::default() };
    let mut m = MachineReport::new();
    let mut t = String::new();
    if args.catalog {
        let groups = catalog();
        let rows: Vec<Result<CatalogRow, CliError>> = CATALOG
            .par_iter()
            .zip(groups.par_iter())
            .map(|((name, _), g)| catalog_row(name, g, &cfg, args.input.bound))
            .collect();
        let _ = writeln!(t, "{:<9} {:>5} {:>3} {:>5} {:>5} {:>5} {:>7} {:>7}  agree", "group", "order", "m", "quad", "nonq", "nsd", "strong", "weak");
        let mut all = true;
        for row in rows {
            let r = row?;
            all &= r.agree;
            let key = |k: &str| format!("catalog.{}.{k}", r.name);
            m.push(key("order"), r.order);
            m.push(key("quadratic"), r.counts.0);
            m.push(key("non_quadratic"), r.counts.1);
            m.push(key("not_self_dual"), r.counts.2);
            m.push(key("strongly_real"), r.strong);
            m.push(key("weakly_real"), r.weak);
            m.push(key("agree"), r.agree);
            let _ = writeln!(
                t,
                "{:<9} {:>5} {:>3} {:>5} {:>5} {:>5} {:>7} {:>7}  {}",
                r.name, r.order, r.degree, r.counts.0, r.counts.1, r.counts.2, r.strong, r.weak, if r.agree { "yes" } else { "NO" }
            );
        }
        m.push("catalog.all_agree", all);
        let _ = writeln!(t, "\nthree-way agreement on every group: {all}");
        return Ok(emit(format, t, m, all));
    }
    let Some(recipe) = &args.input.group else {
        return Err(CliError::Input("oracle needs --group or --catalog".into()));
    };
    let g = input::enumerate(recipe, args.input.bound)?;
    let o = oracle_enumerated(&g, &cfg)?;
    let reality = g.reality_classification();
    let c = classify_pims(&o.data, &reality, Divisibility::AlgInt)?;
    m.push("group", recipe);
    m.push("order", o.order);
    let _ = writeln!(t, "group {recipe}, order {}, regular module chopped over GF(2^{})", o.order, o.field_degree);
    for v in &o.verdicts {
        m.push(format!("pim.{}.dim", v.label), v.dim);
        m.push(format!("pim.{}.multiplicity", v.label), v.multiplicity);
        m.push(format!("pim.{}.verdict", v.label), v.verdict);
        m.push(format!("pim.{}.witness", v.label), v.witness.as_deref().unwrap_or("-"));
        let _ = write!(t, "{:<8} head dim {:<3} dim P {:<4} {}", v.label, v.dim, v.multiplicity, v.verdict);
        if let Some(w) = &v.witness {
            let _ = write!(t, " (B(mt, m) ≠ 0 for t in {w})");
        }
        let _ = writeln!(t);
    }
    let mut ok = oracle_agreement(&o, &c, &mut m, &mut t);
    let counts = verify_counts(&c);
    ok &= counts.holds() && o.count(Verdict::Quadratic) == reality.strongly_real_two_regular();
    m.push("counts.hold", counts.holds());
    if let Some(name) = &args.input.fixture {
        let fixture = fixtures::load(name)?;
        let table = fixture.table().expect("fixtures carry tables");
        let derived = derive_decomposition(&g, &o.data, table)?;
        let same = sorted_columns(derived.decomposition().unwrap_or(&[])) == sorted_columns(fixture.decomposition().unwrap_or(&[]));
        m.push("fixture.decomposition_agrees", same);
        let _ = writeln!(t, "decomposition matrix vs fixture {name} (up to column order): {}", if same { "agree" } else { "DIFFER" });
        ok &= same;
    }
    Ok(emit(format, t, m, ok))
}
