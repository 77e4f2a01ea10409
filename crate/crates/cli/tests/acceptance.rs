//! Acceptance criteria 1-10. Each test prints one line
//! `criterion N: PASS|FAIL <name> (<elapsed> / limit <limit>) <detail>`
//! straight to stdout, so the lines survive output capture.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use pimtype_core::classify::{classify_pims, run_battery, Check, Divisibility, Verdict};
use pimtype_core::cyclo::{CycNum, ResidueField};
use pimtype_core::ffield::{FFElem, FFMatrix, Gf2m};
use pimtype_core::grp::{catalog, construct, ClassRealityReport, Reality, CATALOG};
use pimtype_core::meataxe::{oracle_verdicts, r_elementary_family, ChopConfig, DEFAULT_BOUND};
use pimtype_core::{fixtures, DecompositionData};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[path = "../../core/tests/common/mutations.rs"]
mod mutations;

const FIXTURES: &[&str] = &["s3", "2a5", "mcl"];

fn report(n: u32, name: &str, limit: Duration, f: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (pass, detail) = match outcome {
        Ok(d) if elapsed <= limit => (true, d),
        Ok(d) => (false, format!("{d}; over the time limit")),
        Err(e) => (false, e),
    };
    let line = format!(
        "criterion {n}: {} {name} ({:.3}s / limit {}s) {detail}\n",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
    assert!(pass, "{}", line.trim_end());
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

/// Runs the binary with `--format machine`; returns the parsed keys.
fn pimtype(args: &[&str]) -> Result<BTreeMap<String, String>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_pimtype"))
        .arg("--format")
        .arg("machine")
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code().unwrap_or(-1);
    ensure(code == 0, || format!("exit {code}: {}", String::from_utf8_lossy(&out.stderr).trim()))?;
    Ok(String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect())
}

fn expect(keys: &BTreeMap<String, String>, pairs: &[(&str, &str)]) -> Result<(), String> {
    for (k, v) in pairs {
        let got = keys.get(*k).map(String::as_str);
        ensure(got == Some(*v), || format!("{k}: expected {v}, got {got:?}"))?;
    }
    Ok(())
}

#[test]
fn criterion_01_two_a5() {
    report(1, "2.A5 classification", Duration::from_secs(1), || {
        let k = pimtype(&["classify", "--fixture", "2a5"])?;
        expect(
            &k,
            &[
                ("pims.quadratic", "phi1"),
                ("pims.non_quadratic", "phi2,phi3,phi4"),
                ("pims.not_self_dual", "-"),
                ("pim.phi2.fs.symplectic_odd", "chi6,chi9"),
                ("pim.phi3.fs.symplectic_odd", "chi7,chi9"),
                ("pim.phi4.fs.symplectic_odd", "chi8"),
                ("counts.hold", "true"),
            ],
        )?;
        Ok("quadratic {phi1}; odd symplectic chi6,chi9 | chi7,chi9 | chi8".into())
    });
}

#[test]
fn criterion_02_mcl() {
    report(2, "McL classification", Duration::from_secs(5), || {
        let k = pimtype(&["classify", "--fixture", "mcl"])?;
        expect(
            &k,
            &[
                ("pims.quadratic", "phi1,phi3,phi11"),
                ("classes.strongly_real", "1A,3B,5B"),
                ("classes.weakly_real", "3A,5A"),
                ("pim.phi2.evenness", "1A:22;3B:4;5B:2"),
                ("counts.hold", "true"),
            ],
        )?;
        Ok("quadratic {phi1,phi3,phi11}; strongly real 1A,3B,5B; weakly real 3A,5A; phi2 values 22,4,2".into())
    });
}

#[test]
fn criterion_03_ex288() {
    report(3, "order-288 group via the oracle", Duration::from_secs(60), || {
        let k = pimtype(&["classify", "--group", "ex288"])?;
        expect(
            &k,
            &[
                ("count.quadratic", "2"),
                ("count.non_quadratic", "1"),
                ("example.xx.reality", "strongly-real"),
                ("example.x1.reality", "weakly-real"),
                ("oracle.agrees", "true"),
            ],
        )?;
        Ok(format!("2 quadratic, 1 non-quadratic; (x,x) in {} strongly real, (x,1) in {} weakly real", k["example.xx.class"], k["example.x1.class"]))
    });
}

#[test]
fn criterion_04_counting_theorem() {
    report(4, "three-way agreement on the catalog", Duration::from_secs(300), || {
        let k = pimtype(&["oracle", "--catalog"])?;
        for (name, _) in CATALOG {
            let get = |key: &str| k.get(&format!("catalog.{name}.{key}")).cloned().unwrap_or_default();
            ensure(get("quadratic") == get("strongly_real"), || format!("{name}: quadratic vs strongly real"))?;
            ensure(get("non_quadratic") == get("weakly_real"), || format!("{name}: non-quadratic vs weakly real"))?;
            ensure(get("agree") == "true", || format!("{name}: oracle and classifier disagree"))?;
        }
        Ok(format!("{} groups", CATALOG.len()))
    });
}

/// Oracle-derived data for every catalog group, then the bundled fixtures.
fn all_inputs() -> Vec<(String, DecompositionData, ClassRealityReport)> {
    let cfg = ChopConfig::default();
    let mut out = Vec::new();
    for ((name, _), g) in CATALOG.iter().zip(catalog()) {
        let o = oracle_verdicts(&g, &cfg, DEFAULT_BOUND).unwrap();
        let reality = g.enumerate().unwrap().reality_classification();
        out.push((name.to_string(), o.data, reality));
    }
    for name in FIXTURES {
        let d = fixtures::load(name).unwrap();
        let r = d.table().unwrap().reality_report().unwrap();
        out.push((name.to_string(), d, r));
    }
    out
}

fn battery_criterion(n: u32, name: &str, keep: impl Fn(&Check) -> bool) {
    report(n, name, Duration::from_secs(120), || {
        let inputs = all_inputs();
        let mut checked = 0;
        for (group, d, r) in &inputs {
            let checks = run_battery(d, r, Divisibility::AlgInt).map_err(|e| format!("{group}: {e}"))?;
            for c in checks.iter().filter(|c| keep(c)) {
                ensure(c.pass, || format!("{group}: {} failed: {}", c.name, c.detail))?;
                checked += 1;
            }
        }
        Ok(format!("{checked} checks on {} inputs", inputs.len()))
    });
}

#[test]
fn criterion_05_congruences() {
    battery_criterion(5, "congruences modulo the maximal ideal", |c| c.name.starts_with("congruence."));
}

#[test]
fn criterion_06_cartan_invariant_factors() {
    battery_criterion(6, "Cartan invariant factors", |c| c.name == "cartan.invariant_factors");
}

#[test]
fn criterion_07_trivial_pim() {
    battery_criterion(7, "trivial-PIM divisibility", |c| c.name == "trivial_pim");
}

#[test]
fn criterion_08_odd_cartan() {
    report(8, "odd Cartan entries have witnesses", Duration::from_secs(120), || {
        let inputs = all_inputs();
        let mut found = 0;
        for (group, d, r) in &inputs {
            let c = classify_pims(d, r, Divisibility::AlgInt).map_err(|e| format!("{group}: {e}"))?;
            let witnesses = d.odd_cartan_witnesses(&c.quadratic_mask(), r).map_err(|e| format!("{group}: {e}"))?;
            let realities = d.realities(r).map_err(|e| e.to_string())?;
            let odd = (0..d.num_brauer())
                .flat_map(|i| (i..d.num_brauer()).map(move |j| (i, j)))
                .filter(|&(i, j)| d.cartan()[i][j] % 2 == 1 && d.is_self_dual(i) && d.is_self_dual(j))
                .count();
            ensure(witnesses.len() == odd, || format!("{group}: {odd} odd entries, {} witnesses", witnesses.len()))?;
            for w in &witnesses {
                let class = &d.classes()[w.g_u];
                ensure(class.centralizer_order % 2 == 1, || format!("{group}: {} has even centralizer", class.name))?;
                ensure(realities[w.g_u] == Reality::StronglyReal, || format!("{group}: {} not strongly real", class.name))?;
            }
            found += witnesses.len();
        }
        Ok(format!("{found} odd entries on {} inputs, each with an odd-centralizer strongly real g_u", inputs.len()))
    });
}

#[test]
fn criterion_09_r_elementary_family() {
    report(9, "R-elementary family", Duration::from_secs(120), || {
        let family = r_elementary_family();
        ensure(family.len() == 20, || format!("{} groups", family.len()))?;
        let cfg = ChopConfig::default();
        let mut strong = 0;
        for (name, recipe) in &family {
            let g = construct(recipe).map_err(|e| e.to_string())?;
            let e = g.enumerate().map_err(|e| e.to_string())?;
            let gen = e.index_of(&g.generators()[0]).ok_or("generator not enumerated")?;
            let class = &e.classes()[e.class_of(gen)].name;
            let reality = e.reality_classification();
            let is_strong =
                reality.classes.iter().find(|c| &c.name == class).is_some_and(|c| c.reality == Reality::StronglyReal);
            let o = oracle_verdicts(&g, &cfg, DEFAULT_BOUND).map_err(|e| format!("{name}: {e}"))?;
            for v in o.verdicts.iter().filter(|v| v.label != "phi1") {
                let quadratic = v.verdict == Verdict::Quadratic;
                ensure(quadratic == is_strong, || {
                    format!("{name}: {} is {} but the generator class {class} strongly real = {is_strong}", v.label, v.verdict)
                })?;
            }
            strong += usize::from(is_strong);
        }
        Ok(format!("20 groups, {strong} with strongly real generator"))
    });
}

#[test]
fn criterion_10_property_suites() {
    report(10, "property suites", Duration::from_secs(120), || {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let conductors = [1usize, 3, 5, 7, 9, 15, 21, 33, 35];
        let random = |rng: &mut ChaCha8Rng, n: usize| {
            let mut x = CycNum::zero();
            for k in 0..n {
                x = &x + &CycNum::root_of_unity(n, k as i64).scale_int(rng.random_range(-7..=7));
            }
            x
        };
        for _ in 0..10_000 {
            let n = conductors[rng.random_range(0..conductors.len())];
            let (a, b) = (random(&mut rng, n), random(&mut rng, n));
            let rf = ResidueField::new(n).map_err(|e| e.to_string())?;
            let (ra, rb) = (rf.reduce(&a).unwrap(), rf.reduce(&b).unwrap());
            ensure(rf.reduce(&(&a + &b)).unwrap() == rf.add(ra, rb), || format!("sum law fails for {a} and {b}"))?;
            ensure(rf.reduce(&(&a * &b)).unwrap() == rf.mul(ra, rb), || format!("product law fails for {a} and {b}"))?;
            ensure((&(&(&a + &b) - &b) - &a).is_zero(), || format!("normalization fails for {a}"))?;
        }
        for _ in 0..500 {
            let f = Gf2m::get(rng.random_range(1..=8)).unwrap();
            let (rows, cols) = (rng.random_range(1..10), rng.random_range(1..10));
            let a = FFMatrix::from_fn(f.clone(), rows, cols, |_, _| FFElem(rng.random_range(0..f.size())));
            let null = a.nullspace();
            ensure(a.rank() + null.len() == cols, || "rank-nullity fails".into())?;
            ensure(null.iter().all(|v| a.mul_vec(v).iter().all(|x| x.is_zero())), || "nullspace vector not killed".into())?;
        }
        for m in 1..=12 {
            let f = Gf2m::get(m).unwrap();
            let mut seen = vec![false; f.unit_order() as usize];
            for x in f.elements().skip(1) {
                let l = f.discrete_log(x).map_err(|e| e.to_string())? as usize;
                ensure(f.gen_pow(l as i64) == x && !std::mem::replace(&mut seen[l], true), || format!("dlog fails in GF(2^{m})"))?;
            }
        }
        ensure(mutations::MUTATIONS.len() == 20, || "mutation table size".into())?;
        for &(name, dec, from, to) in mutations::MUTATIONS {
            mutations::check(name, dec, from, to)?;
        }
        let optional = ["sp45", "2ru"].iter().filter(|n| fixtures::available(n)).count();
        Ok(format!(
            "10000 cyclotomic cases, 500 rank-nullity, dlog m<=12, 20/20 mutations caught; {optional} optional data sets present (full suite: cargo test -p pimtype-core --test properties)"
        ))
    });
}
