use crate::error::{Error, Result};
use crate::report::CheckReport;

use super::cases::{h_d, FamilyTag, StableFamily, SymPairCase};

/// Largest degree for which the two cases are known to agree, or an error if
/// they are not one of the five paired shapes.
pub fn stability_threshold(a: &SymPairCase, b: &SymPairCase) -> Result<usize> {
    use SymPairCase::*;
    let t = match (*a, *b) {
        (GLnR { n }, SpmR { m }) | (SpmR { m }, GLnR { n }) => n.min(m),
        (GLmH { m: n }, SOstar2m { m }) | (SOstar2m { m }, GLmH { m: n }) => n.min(m),
        (OnC { n }, Sppq { p, q }) | (Sppq { p, q }, OnC { n }) => (n / 2).min(p).min(q),
        (SpmC { m }, Opq { p, q }) | (Opq { p, q }, SpmC { m }) => m.min(p / 2).min(q / 2),
        (GLnC { n }, Upq { p, q }) | (Upq { p, q }, GLnC { n }) => n.min(p).min(q),
        _ => return Err(Error::UnsupportedPair(format!("{a} and {b}"))),
    };
    Ok(t)
}

/// Compares `h_d` of two paired cases. Within the threshold a mismatch is a
/// failure; beyond it the values are only noted.
pub fn stability_check(a: &SymPairCase, b: &SymPairCase, d: usize) -> Result<CheckReport> {
    let threshold = stability_threshold(a, b)?;
    let (x, y) = (h_d(a, d), h_d(b, d));
    let mut report = CheckReport::new(format!("stability {a} vs {b} at d={d}"));
    if d <= threshold {
        report.record(x == y, || format!("{a} gives {x}, {b} gives {y}"));
    } else {
        report.note(format!(
            "d={d} beyond threshold {threshold}: {a} gives {x}, {b} gives {y}"
        ));
    }
    Ok(report)
}

/// The five paired shapes as `(left, right)` tags.
pub const STABILITY_PAIRS: [(FamilyTag, FamilyTag); 5] = [
    (FamilyTag::GLnR, FamilyTag::SpmR),
    (FamilyTag::GLmH, FamilyTag::SOstar2m),
    (FamilyTag::OnC, FamilyTag::Sppq),
    (FamilyTag::SpmC, FamilyTag::Opq),
    (FamilyTag::GLnC, FamilyTag::Upq),
];

/// Every instance of a tag with parameters in `1..=max_param`.
pub fn cases_up_to(tag: FamilyTag, max_param: usize) -> Vec<SymPairCase> {
    let names = tag.parameter_names();
    let mut out = Vec::new();
    let mut values = vec![1; names.len()];
    loop {
        let get = |name: &str| names.iter().position(|n| *n == name).map(|i| values[i]);
        out.push(SymPairCase::from_tag(tag, get("p"), get("q"), get("n"), get("m")).expect("positive"));
        let Some(i) = values.iter().rposition(|&v| v < max_param) else {
            break;
        };
        values[i] += 1;
        for v in &mut values[i + 1..] {
            *v = 1;
        }
    }
    out
}

/// Runs [`stability_check`] over all five pairs, every parameter choice up to
/// `max_param` and every `d ≤ max_degree`.
pub fn stability_sweep(max_param: usize, max_degree: usize) -> CheckReport {
    let mut report = CheckReport::new(format!(
        "stability thresholds, parameters <= {max_param}, d <= {max_degree}"
    ));
    let mut beyond = 0;
    for (left, right) in STABILITY_PAIRS {
        for a in cases_up_to(left, max_param) {
            for b in cases_up_to(right, max_param) {
                for d in 0..=max_degree {
                    let r = stability_check(&a, &b, d).expect("paired shapes");
                    beyond += r.notes.len();
                    report.checked += r.checked;
                    report.passed &= r.passed;
                    report.failures.extend(r.failures);
                }
            }
        }
    }
    report.note(format!("{beyond} comparisons beyond threshold were not asserted"));
    report
}

/// Within each stable class, every member's sum with all bounds dropped is
/// evaluated from its own formula and compared, for `d ≤ D`.
pub fn stable_family_equalities(max_degree: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("stable class equalities, d <= {max_degree}"));
    for family in StableFamily::ALL {
        for d in 0..=max_degree {
            let values: Vec<(FamilyTag, u64)> = family
                .members()
                .iter()
                .map(|tag| (*tag, tag.unbounded_formula().evaluate(d)))
                .collect();
            let first = values[0].1;
            report.record(values.iter().all(|(_, v)| *v == first), || {
                let listed: Vec<String> = values
                    .iter()
                    .map(|(t, v)| format!("{t}={v}"))
                    .collect();
                format!("{family} d={d}: {}", listed.join(", "))
            });
        }
    }
    report
}
