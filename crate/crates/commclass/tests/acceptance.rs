//! Acceptance suite. Prints one PASS/FAIL line per criterion and fails if any
//! criterion fails. Run with `cargo test -p commclass --test acceptance -- --nocapture`
//! to see the lines.

use std::path::Path;
use std::time::{Duration, Instant};

use commclass::report::VerificationReport;
use commclass::scan::with_workers;
use commclass::verify::{self, Budget};
use commclass_core::atoms::{atoms_bruteforce, atoms_characterized, factorial};
use commclass_core::coxeter_b::{b_atoms, SignedPermutation};
use commclass_core::diagram::tenner_conditions;
use commclass_core::words::{
    commutation_classes, is_reduced, reduced_words, Word, DEFAULT_CEILING,
};
use commclass_core::Permutation;

/// Reference histogram rows for `n = 1..=7`; dashes read as zero.
const PUBLISHED: [[u64; 5]; 7] = [
    [1, 1, 0, 0, 0],
    [1, 4, 1, 0, 0],
    [5, 15, 3, 0, 1],
    [53, 52, 12, 0, 3],
    [496, 181, 34, 0, 9],
    [4326, 594, 97, 0, 23],
    [38124, 1875, 261, 0, 60],
];

type Check = Result<String, String>;

struct Run {
    outcomes: Vec<(u32, &'static str, Check, Duration)>,
    /// Everything a criterion produced, timing removed; compared across
    /// worker counts.
    transcript: Vec<String>,
}

impl Run {
    fn criterion(
        &mut self,
        id: u32,
        title: &'static str,
        limit: Duration,
        f: impl FnOnce(&mut Vec<String>) -> Check,
    ) {
        let started = Instant::now();
        let mut result = f(&mut self.transcript);
        let elapsed = started.elapsed();
        if result.is_ok() && elapsed > limit {
            result = Err(format!("took {elapsed:?}, limit {limit:?}"));
        }
        self.outcomes.push((id, title, result, elapsed));
    }
}

fn record_all(transcript: &mut Vec<String>, reports: &[VerificationReport]) -> Check {
    let mut failed = Vec::new();
    for r in reports {
        transcript.push(r.untimed().to_record());
        if !r.holds() {
            failed.push(format!(
                "{} [{}]: {:?} {:?}",
                r.name, r.range, r.verdict, r.witness
            ));
        }
    }
    if failed.is_empty() {
        Ok(format!("{} reports hold", reports.len()))
    } else {
        Err(failed.join("; "))
    }
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).expect("golden file")
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["commclass"];
    argv.extend_from_slice(args);
    let code = commclass::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn strings(ws: &[Word]) -> Vec<String> {
    ws.iter().map(|w| w.to_string()).collect()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn worked_example(t: &mut Vec<String>) -> Check {
    let p: Permutation = "3,4,2,1".parse().unwrap();
    let words = strings(&reduced_words(&p).map_err(|e| e.to_string())?);
    ensure(
        words == ["12132", "12312", "21232", "21323", "23123"],
        format!("R = {words:?}"),
    )?;
    let classes: Vec<Vec<String>> = commutation_classes(&p)
        .map_err(|e| e.to_string())?
        .classes()
        .iter()
        .map(|c| strings(c))
        .collect();
    ensure(
        classes
            == [
                vec!["12132", "12312"],
                vec!["21232"],
                vec!["21323", "23123"],
            ],
        format!("C = {classes:?}"),
    )?;
    let atoms = strings(&atoms_characterized(&p));
    ensure(atoms == ["21232"], format!("A = {atoms:?}"))?;
    ensure(
        strings(&atoms_bruteforce(&p).unwrap()) == atoms,
        "oracles disagree",
    )?;
    for (args, file) in [
        (&["words", "3,4,2,1"][..], "words_3421.txt"),
        (&["classes", "3,4,2,1"][..], "classes_3421.txt"),
        (
            &["atoms", "3,4,2,1", "--method", "both"][..],
            "atoms_3421_both.txt",
        ),
    ] {
        let (code, out) = cli(args);
        ensure(
            code == 0 && out == golden(file),
            format!("{args:?} differs from {file}"),
        )?;
        t.push(out);
    }
    Ok("R, C, A and three transcripts byte-exact".into())
}

fn table(t: &mut Vec<String>, budget: &Budget) -> Check {
    let rows = verify::table_atoms(7, budget).map_err(|e| e.to_string())?;
    for (h, published) in rows.iter().zip(PUBLISHED) {
        t.push(format!("{} {:?}", h.n, h.counts));
        ensure(
            h.counts[..5] == published,
            format!("row n={} is {:?}", h.n, h.counts),
        )?;
        ensure(
            h.total() == factorial(h.n + 1),
            format!("row n={} sum", h.n),
        )?;
    }
    let r = verify::check_final_row(budget);
    record_all(t, std::slice::from_ref(&r))?;
    ensure(r.totals["n8-sum"] == 362880, "n=8 row sum")?;
    ensure(r.totals["n8-a3"] == 0, "n=8 column 3")?;
    ensure(
        r.totals["printed-matches-n9"] == 1,
        "n=9 row differs from the printed row",
    )?;
    Ok("rows 1..7 exact; n=8 row sums to 9!, column 3 empty, max 4; n=9 row equals the printed last row".into())
}

fn bound(t: &mut Vec<String>, budget: &Budget) -> Check {
    let mut reports: Vec<VerificationReport> =
        (1..=8).map(|n| verify::check_bound(n, budget)).collect();
    reports.push(verify::check_longest_attains(8, budget));
    record_all(t, &reports)?;
    let max = reports.iter().map(|r| r.totals["max"]).max().unwrap();
    ensure(max == 4, format!("maximum {max}"))?;
    Ok("max |A| over degree <= 9 is 4; w0 attains it for n = 3..8".into())
}

fn spectrum(t: &mut Vec<String>, budget: &Budget) -> Check {
    let reports: Vec<VerificationReport> =
        (1..=8).map(|n| verify::check_spectrum(n, budget)).collect();
    record_all(t, &reports)?;
    ensure(
        reports.iter().all(|r| r.totals["a3"] == 0),
        "column 3 nonzero",
    )?;
    Ok("no permutation of degree <= 9 has exactly 3 atoms".into())
}

fn classes(t: &mut Vec<String>, budget: &Budget) -> Check {
    let reports: Vec<VerificationReport> = (1..=5)
        .map(|n| verify::check_class_inequality(n, budget))
        .collect();
    record_all(t, &reports)?;
    Ok("|C| <= |R|/2 + 1 and |C| <= (|R| + |A|)/2 for all degrees <= 6".into())
}

fn equivalence(t: &mut Vec<String>) -> Check {
    let r = verify::check_equivalence(5, 15);
    record_all(t, std::slice::from_ref(&r))?;
    Ok(format!("{} words, zero mismatches", r.totals["words"]))
}

fn tenner(t: &mut Vec<String>, budget: &Budget) -> Check {
    let nec: Vec<VerificationReport> = (1..=7)
        .map(|n| verify::check_tenner_necessity(n, budget))
        .collect();
    record_all(t, &nec)?;
    let ins = verify::check_tenner_insufficiency(5, 15);
    record_all(t, std::slice::from_ref(&ins))?;
    let w: Word = ins
        .witness
        .as_deref()
        .ok_or("no witness")?
        .parse()
        .map_err(|_| "bad witness")?;
    let conditions = tenner_conditions(&w).map_err(|e| e.to_string())?;
    let reduced = is_reduced(&w, w.max_letter() as usize + 1).map_err(|e| e.to_string())?;
    ensure(
        conditions.all() && !reduced,
        format!("witness {w} does not re-validate"),
    )?;
    Ok(format!(
        "all atoms of degree <= 8 pass; non-reduced witness {w} passes all five"
    ))
}

fn structure(t: &mut Vec<String>, budget: &Budget) -> Check {
    let reports: Vec<VerificationReport> = (1..=6)
        .flat_map(|n| verify::check_structure(n, budget))
        .collect();
    record_all(t, &reports)?;
    Ok(format!(
        "{} structural reports over degrees <= 7, zero violations",
        reports.len()
    ))
}

fn type_b(t: &mut Vec<String>, budget: &Budget) -> Check {
    for n in [2, 3] {
        let k = b_atoms(&SignedPermutation::longest(n), DEFAULT_CEILING)
            .map_err(|e| e.to_string())?
            .len();
        t.push(format!("B{n} longest: {k}"));
        ensure(k == 2, format!("longest element of B{n} has {k} atoms"))?;
    }
    let reports: Vec<VerificationReport> = (2..=4).map(|n| verify::b_scan(n, budget)).collect();
    record_all(t, &reports)?;
    Ok("longest elements of B2, B3 have 2 atoms; max over B2, B3, B4 is at most 4".into())
}

fn criteria_1_to_9(budget: &Budget) -> Run {
    let mut run = Run {
        outcomes: Vec::new(),
        transcript: Vec::new(),
    };
    let min = |m: u64| Duration::from_secs(60 * m);
    run.criterion(
        1,
        "worked example exactness",
        Duration::from_secs(1),
        worked_example,
    );
    run.criterion(2, "atom-count table", min(5), |t| table(t, budget));
    run.criterion(3, "atom bound", min(10), |t| bound(t, budget));
    run.criterion(4, "atom spectrum", min(10), |t| spectrum(t, budget));
    run.criterion(5, "class inequality", min(10), |t| classes(t, budget));
    run.criterion(6, "factor characterization", min(5), equivalence);
    run.criterion(7, "necessary conditions", min(10), |t| tenner(t, budget));
    run.criterion(8, "structural properties", min(10), |t| structure(t, budget));
    run.criterion(9, "type B", min(10), |t| type_b(t, budget));
    run
}

#[test]
fn acceptance_criteria() {
    let budget = Budget::default();
    let max_workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .max(4);
    let wide = with_workers(max_workers, || criteria_1_to_9(&budget));
    let narrow = with_workers(1, || criteria_1_to_9(&budget));

    let mut outcomes = wide.outcomes;
    let started = Instant::now();
    let same = wide.transcript == narrow.transcript;
    let detail = if same {
        Ok(format!(
            "{} transcript entries identical at 1 and {max_workers} workers",
            wide.transcript.len()
        ))
    } else {
        let at = wide
            .transcript
            .iter()
            .zip(&narrow.transcript)
            .position(|(a, b)| a != b)
            .unwrap_or(wide.transcript.len().min(narrow.transcript.len()));
        Err(format!("transcripts first differ at entry {at}"))
    };
    outcomes.push((10, "determinism", detail, started.elapsed()));

    let mut failed = 0;
    for (id, title, result, elapsed) in &outcomes {
        match result {
            Ok(msg) => println!("PASS [{id}] {title}: {msg} ({} ms)", elapsed.as_millis()),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{id}] {title}: {msg} ({} ms)", elapsed.as_millis());
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
