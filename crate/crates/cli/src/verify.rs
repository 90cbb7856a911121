//! `hexaflex verify`: closed forms and fast paths against brute force.

use std::io::{self, Write};

use hexaflex::counting::{bracelet_count_with, BraceletBranch};
use hexaflex::geometry::{is_printable, printable_class_count};
use hexaflex::labeling::{build_pattern, pattern_for, strip_labels};
use hexaflex::sequences::ExtensionHistory;
use hexaflex::oracle;
use hexaflex::{
    hexaflexagon_count, lyndon_count, necklace_count, self_conjugate_count, sum_set, REFERENCE_TABLE,
};

type Outcome = Result<String, String>;

/// The brute-force string census is exponential; cap it.
const CENSUS_MAX: usize = 18;

pub fn run(max_n: usize, paper_bracelet: bool, out: &mut impl Write) -> io::Result<bool> {
    let suites: [(&str, Box<dyn Fn() -> Outcome>); 8] = [
        ("N", Box::new(move || string_counts(max_n, "N", |n, k| Ok(necklace_count(n, k)?.to_string()), |c, k| c.necklaces[k]))),
        ("B", Box::new(move || {
            let branch = if paper_bracelet { BraceletBranch::AsPrinted } else { BraceletBranch::Corrected };
            string_counts(max_n, "B", move |n, k| Ok(bracelet_count_with(n, k, branch)?.to_string()), |c, k| c.bracelets[k])
        })),
        ("L", Box::new(move || string_counts(max_n, "L", |n, k| Ok(lyndon_count(n, k)?.to_string()), |c, k| c.lyndon[k]))),
        ("F", Box::new(move || self_conjugate(max_n))),
        ("H", Box::new(move || classes(max_n))),
        ("H_p", Box::new(move || printable(max_n))),
        ("Lemma", Box::new(move || lemma(max_n))),
        ("labeling", Box::new(move || labeling(max_n))),
    ];
    let mut all_ok = true;
    let mut first_failure = None;
    for (name, suite) in suites {
        match suite() {
            Ok(detail) => writeln!(out, "PASS {name}: {detail}")?,
            Err(counterexample) => {
                writeln!(out, "FAIL {name}: {counterexample}")?;
                all_ok = false;
                first_failure.get_or_insert(format!("{name}: {counterexample}"));
            }
        }
    }
    if let Some(f) = first_failure {
        eprintln!("first counterexample: {f}");
    }
    Ok(all_ok)
}

/// Formula against the census for every `(n, k)` with `n >= 3`, `k` from
/// `n` down to 0.
fn string_counts(
    max_n: usize,
    name: &str,
    formula: impl Fn(u32, u32) -> hexaflex::Result<String>,
    census: impl Fn(&oracle::StringCensus, usize) -> u64,
) -> Outcome {
    let top = max_n.min(CENSUS_MAX) as u32;
    for n in 3..=top {
        let c = oracle::string_census(n);
        for k in (0..=n).rev() {
            let expected = census(&c, k as usize).to_string();
            let got = formula(n, k).map_err(|e| format!("({n},{k}): {e}"))?;
            if got != expected {
                return Err(format!("({n},{k}): formula {got}, brute force {expected}"));
            }
        }
    }
    Ok(format!("{name}(n,k) for 0 <= k <= n, 3 <= n <= {top}"))
}

fn self_conjugate(max_n: usize) -> Outcome {
    let top = max_n.min(CENSUS_MAX) as u32;
    for n in (2..=top).step_by(2) {
        let got = self_conjugate_count(n).map_err(|e| e.to_string())?.to_string();
        let expected = oracle::self_conjugate_bracelets(n).to_string();
        if got != expected {
            return Err(format!("n={n}: formula {got}, brute force {expected}"));
        }
    }
    Ok(format!("even n <= {top}"))
}

fn classes(max_n: usize) -> Outcome {
    for n in 3..=max_n {
        let got = hexaflexagon_count(n as u32).map_err(|e| e.to_string())?.to_string();
        let expected = oracle::valid_classes(n).len().to_string();
        if got != expected {
            return Err(format!("n={n}: formula {got}, enumeration {expected}"));
        }
    }
    Ok(format!("3 <= n <= {max_n}"))
}

fn printable(max_n: usize) -> Outcome {
    for n in 3..=max_n {
        let fast = printable_class_count(n).map_err(|e| e.to_string())?.to_string();
        let mut reference = 0usize;
        for c in oracle::valid_classes(n) {
            reference += usize::from(is_printable(&c).map_err(|e| e.to_string())?);
        }
        if fast != reference.to_string() {
            return Err(format!("n={n}: fast route {fast}, reference route {reference}"));
        }
        if let Some(&(_, _, table)) = REFERENCE_TABLE.iter().find(|row| row.0 == n) {
            if fast != table.to_string() {
                return Err(format!("n={n}: computed {fast}, table {table}"));
            }
        }
    }
    Ok(format!("3 <= n <= {max_n}, fast and reference routes agree with the table"))
}

fn lemma(max_n: usize) -> Outcome {
    for n in 3..=max_n {
        let valid = oracle::valid_classes(n);
        let reachable = oracle::reachable_classes(n);
        if let Some(c) = valid.symmetric_difference(&reachable).next() {
            let side = if valid.contains(c) { "valid but unreachable" } else { "reachable but invalid" };
            return Err(format!("n={n}: {c} is {side}"));
        }
        let sums: Vec<i32> = oracle::achieved_sums(n).into_iter().collect();
        let allowed = sum_set(n as u32).map_err(|e| e.to_string())?;
        if sums != allowed {
            return Err(format!("n={n}: achieved sums {sums:?}, sum set {allowed:?}"));
        }
    }
    Ok(format!("validity == reachability and sum sets for 3 <= n <= {max_n}"))
}

fn labeling(max_n: usize) -> Outcome {
    let printed: [(&[usize], bool, &[u32], &[u32]); 2] = [
        (&[], false, &[1, 1, 3, 3, 2, 2, 1, 1, 3], &[3, 2, 2, 1, 1, 3, 3, 2, 2]),
        (&[3], true, &[1, 1, 4, 2, 1, 1, 4, 2, 1, 1, 4, 2, 1], &[4, 2, 3, 3, 4, 2, 3, 3, 4, 2, 3, 3, 4]),
    ];
    for (steps, glue, top, bottom) in printed {
        let history = ExtensionHistory::new(steps.to_vec()).map_err(|e| e.to_string())?;
        let labels = strip_labels(&build_pattern(&history), glue);
        if labels.top != top || labels.bottom != bottom {
            return Err(format!("history {steps:?}: rows {:?} / {:?}", labels.top, labels.bottom));
        }
    }
    for n in 3..=max_n {
        for c in oracle::valid_classes(n) {
            let pattern = pattern_for(&c).map_err(|e| format!("{c}: {e}"))?;
            if pattern.signs().map_err(|e| e.to_string())? != *c.as_sequence() {
                return Err(format!("{c}: pattern signs differ"));
            }
            let labels = strip_labels(&pattern, false);
            let mut counts = vec![0u32; n + 1];
            for (&t, &b) in labels.top.iter().zip(&labels.bottom) {
                let consecutive = t % n as u32 + 1 == b || b % n as u32 + 1 == t;
                if !consecutive {
                    return Err(format!("{c}: triangle labels {t}/{b} are not consecutive"));
                }
                counts[t as usize] += 1;
                counts[b as usize] += 1;
            }
            if counts[1..].iter().any(|&k| k != 6) {
                return Err(format!("{c}: label occurrences {:?}", &counts[1..]));
            }
        }
    }
    Ok(format!("pattern signs, label pairs and six-fold faces for 3 <= n <= {max_n}"))
}
