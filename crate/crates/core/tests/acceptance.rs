//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails.
//!
//! The F4 full subset scan is the slow tier; it runs only when invoked with
//! `--include-ignored` (or `--ignored`), e.g.
//! `cargo test --test acceptance -- --include-ignored`.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use parabolic_ideals::oracle::{
    brute_force_tabulate, is_filter_for, reflection_closure, subset_scan_filters,
};
use parabolic_ideals::{
    compatibility_mask, tabulate, tabulate_parallel_as, ParabolicMask, Poset, RootSystem,
    SimpleType, Table,
};

const BIN: &str = env!("CARGO_BIN_EXE_parabolic-ideals");

struct Gate {
    passed: usize,
    failed: usize,
    skipped: usize,
}

impl Gate {
    fn check(&mut self, id: &str, title: &str, run: impl FnOnce() -> Result<String, String>) {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => {
                self.passed += 1;
                println!("[PASS] {id}: {title} ({detail}; {secs:.2}s)");
            }
            Err(detail) => {
                self.failed += 1;
                println!("[FAIL] {id}: {title}: {detail}");
            }
        }
    }

    fn skip(&mut self, id: &str, title: &str, why: &str) {
        self.skipped += 1;
        println!("[SKIP] {id}: {title} ({why})");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn build(t: SimpleType) -> RootSystem {
    RootSystem::build(t).expect("supported type")
}

fn counts(table: &Table, mask: ParabolicMask) -> (u64, u64) {
    let r = table.row(mask);
    (r.n_count, r.ab_count)
}

fn golden_exactness() -> Result<String, String> {
    let start = Instant::now();
    let out = Command::new(BIN)
        .args(["verify", "--type", "all"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(0), || {
        format!("exit {:?}\n{stdout}", out.status.code())
    })?;
    let summary = stdout.lines().last().unwrap_or_default().to_string();
    ensure(summary == "5 tables, 468 rows, 0 mismatches", || {
        format!("summary {summary:?}")
    })?;
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(summary)
}

fn headline_counts() -> Result<String, String> {
    let expected = [(8, 4), (105, 16), (833, 64), (4160, 128), (25080, 256)];
    for (t, want) in SimpleType::EXCEPTIONAL.into_iter().zip(expected) {
        let got = counts(&tabulate(&build(t)), ParabolicMask::empty(t.rank()));
        ensure(got == want, || format!("{t}: got {got:?}, want {want:?}"))?;
    }
    Ok("G2 (8,4), F4 (105,16), E6 (833,64), E7 (4160,128), E8 (25080,256)".into())
}

fn peterson() -> Result<String, String> {
    for t in SimpleType::EXCEPTIONAL {
        let (_, ab) = counts(&tabulate(&build(t)), ParabolicMask::empty(t.rank()));
        ensure(ab == 1 << t.rank(), || format!("{t}: ♯Ab_∅ = {ab}"))?;
    }
    Ok("♯Ab_∅ = 2^rank for all five types".into())
}

fn g2_oracle_equivalence() -> Result<String, String> {
    let rs = build(SimpleType::G2);
    let poset = Poset::new(&rs);
    let fast = tabulate(&rs);
    let slow = brute_force_tabulate(&rs).map_err(|e| e.to_string())?;
    ensure(fast == slow, || format!("{fast:?} vs {slow:?}"))?;
    let mut pairs = 0;
    for a in poset.antichains() {
        let phi = poset.upward_closure(a);
        let compat = compatibility_mask(&rs, phi);
        for mask in ParabolicMask::all(rs.rank()) {
            pairs += 1;
            ensure(
                mask.is_subset(compat) == is_filter_for(&rs, phi, mask),
                || format!("Φ={phi:?} I={mask}"),
            )?;
        }
    }
    Ok(format!("4 rows equal; {pairs} (filter, I) pairs agree"))
}

fn f4_oracle_equivalence() -> Result<String, String> {
    let rs = build(SimpleType::F4);
    let fast = tabulate(&rs);
    let slow = brute_force_tabulate(&rs).map_err(|e| e.to_string())?;
    ensure(fast == slow, || format!("{fast:?} vs {slow:?}"))?;
    Ok("2^24 subsets scanned, 16 rows equal".into())
}

fn root_cross_validation() -> Result<String, String> {
    let names = [
        "G2", "F4", "E6", "E7", "E8", "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4",
    ];
    let mut sizes = Vec::new();
    for name in names {
        let t: SimpleType = name.parse().unwrap();
        let rs = build(t);
        let built: BTreeSet<Vec<i32>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        ensure(built == reflection_closure(t), || {
            format!("{t}: root sets differ")
        })?;
        if t.is_exceptional() {
            sizes.push(rs.len());
        }
    }
    ensure(sizes == [6, 24, 36, 63, 120], || {
        format!("counts {sizes:?}")
    })?;
    Ok(format!(
        "{} types agree; |Δ+| = 6, 24, 36, 63, 120",
        names.len()
    ))
}

fn structural_properties() -> Result<String, String> {
    let mut filters = 0;
    for t in SimpleType::EXCEPTIONAL {
        let rs = build(t);
        let poset = Poset::new(&rs);
        for a in poset.antichains() {
            let phi = poset.upward_closure(a);
            ensure(poset.minimal_elements(phi) == a, || format!("{t}: {a:?}"))?;
            ensure(
                poset.upward_closure(poset.minimal_elements(phi)) == phi,
                || format!("{t}: {phi:?}"),
            )?;
            filters += 1;
        }

        let table = tabulate(&rs);
        let l = rs.rank();
        for row in table.rows() {
            ensure(row.ab_count <= row.n_count, || format!("{t} {}", row.mask))?;
            for sup in ParabolicMask::all(l).filter(|m| row.mask.is_subset(*m)) {
                let (n, ab) = counts(&table, sup);
                ensure(n <= row.n_count && ab <= row.ab_count, || {
                    format!("{t}: {} ⊆ {sup} but counts grow", row.mask)
                })?;
            }
        }
        ensure(counts(&table, ParabolicMask::full(l)) == (1, 1), || {
            format!("{t}: I = Π row")
        })?;

        if t == SimpleType::E6 {
            // α1 ↔ α6, α3 ↔ α5; α2, α4 fixed
            let perm = [5, 1, 4, 3, 2, 0];
            for mask in ParabolicMask::all(l) {
                let mut image = ParabolicMask::empty(l);
                for i in (0..l).filter(|&i| mask.contains(i)) {
                    image.insert(perm[i]);
                }
                ensure(counts(&table, mask) == counts(&table, image), || {
                    format!("E6: {mask} vs {image}")
                })?;
            }
        }
    }
    Ok(format!(
        "{filters} filters round-trip; all table properties hold"
    ))
}

fn determinism() -> Result<String, String> {
    let run = |threads: &str| {
        Command::new(BIN)
            .args(["tabulate", "--type", "E8", "--threads", threads])
            .output()
            .map_err(|e| e.to_string())
    };
    let one = run("1")?;
    let eight = run("8")?;
    ensure(one.status.success() && eight.status.success(), || {
        "non-zero exit".into()
    })?;
    ensure(one.stdout == eight.stdout, || "outputs differ".into())?;

    let rs = build(SimpleType::E8);
    let poset = Poset::new(&rs);
    let seq: Table = tabulate_parallel_as(&rs, &poset, 1).unwrap();
    let par: Table = tabulate_parallel_as(&rs, &poset, 8).unwrap();
    ensure(seq == par, || "library tables differ".into())?;
    Ok(format!("{} bytes identical", one.stdout.len()))
}

fn catalan() -> Result<String, String> {
    let mut found = Vec::new();
    for (name, want) in [("A1", 2u64), ("A2", 5), ("A3", 14)] {
        let rs = build(name.parse().unwrap());
        let poset = Poset::new(&rs);
        let scanned = subset_scan_filters(&poset).map_err(|e| e.to_string())?;
        let enumerated = poset.antichains().count() as u64;
        let brute = brute_force_tabulate(&rs).map_err(|e| e.to_string())?;
        let tab = tabulate(&rs);
        ensure(
            scanned == want
                && enumerated == want
                && brute.rows()[0].n_count == want
                && brute == tab,
            || format!("{name}: scan {scanned}, dfs {enumerated}, want {want}"),
        )?;
        found.push(scanned);
    }
    Ok(format!("A1, A2, A3 → {found:?}"))
}

fn main() {
    let slow = std::env::args().any(|a| a == "--include-ignored" || a == "--ignored");
    let mut gate = Gate {
        passed: 0,
        failed: 0,
        skipped: 0,
    };

    gate.check(
        "AC1",
        "golden-table exactness (verify --type all)",
        golden_exactness,
    );
    gate.check("AC2", "Borel headline counts", headline_counts);
    gate.check("AC3", "Peterson property", peterson);
    gate.check(
        "AC4",
        "G2 oracle equivalence (exhaustive)",
        g2_oracle_equivalence,
    );
    if slow {
        gate.check(
            "AC5",
            "F4 oracle equivalence (2^24 subset scan)",
            f4_oracle_equivalence,
        );
    } else {
        gate.skip(
            "AC5",
            "F4 oracle equivalence (2^24 subset scan)",
            "slow tier; pass --include-ignored",
        );
    }
    gate.check("AC6", "root-system cross-validation", root_cross_validation);
    gate.check(
        "AC7",
        "structural properties over all filters",
        structural_properties,
    );
    gate.check("AC8", "thread-count determinism (E8)", determinism);
    gate.check("AC9", "Catalan cross-check", catalan);

    println!(
        "\nacceptance: {} passed, {} failed, {} skipped",
        gate.passed, gate.failed, gate.skipped
    );
    if gate.failed > 0 {
        std::process::exit(1);
    }
}
