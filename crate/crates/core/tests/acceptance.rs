//! Acceptance criteria, one line per criterion.
//!
//! Runs without the test harness so the report is always printed. Exits
//! nonzero if any criterion fails or runs over its time limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use logfan::verify::{self, SuiteReport, DEFAULT_SEED};

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn(u64) -> Vec<SuiteReport>,
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            title: "verticality calculus on 500 random hom chains",
            limit: Some(Duration::from_secs(60)),
            run: |s| vec![verify::verticality_calculus(s, 500)],
        },
        Criterion {
            id: 2,
            title: "pushout invariance on 100 random squares",
            limit: Some(Duration::from_secs(120)),
            run: |s| vec![verify::pushout_invariance(s, 100)],
        },
        Criterion {
            id: 3,
            title: "torsion split round trip on 100 monoids with torsion units",
            limit: None,
            run: |s| vec![verify::torsion_split(s, 100)],
        },
        Criterion {
            id: 4,
            title: "even quadrant: not vertical, 4 faces, 2-cone vertical subfan",
            limit: None,
            run: |_| vec![verify::even_quadrant_example()],
        },
        Criterion {
            id: 5,
            title: "acyclicity: four-ray example and 50 random instances",
            limit: Some(Duration::from_secs(300)),
            run: |s| vec![verify::acyclicity(s, 50)],
        },
        Criterion {
            id: 6,
            title: "homology of circle, 2-sphere and point",
            limit: None,
            run: |_| vec![verify::homology_sanity()],
        },
        Criterion {
            id: 7,
            title: "star subdivisions, refinements of 3 fans, resolutions",
            limit: None,
            run: |s| vec![verify::subdivision_calculus(s, 100, 20, 50)],
        },
        Criterion {
            id: 8,
            title: "interior vertical maps to N on 100 sharp monoids",
            limit: None,
            run: |s| vec![verify::interior_vertical(s, 100)],
        },
        Criterion {
            id: 9,
            title: "monoid and fan verticality agree on 200 instances",
            limit: None,
            run: |s| vec![verify::duality(s, 200)],
        },
    ]
}

fn main() -> ExitCode {
    let seed = std::env::var("LOGFAN_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    println!("acceptance criteria, seed {seed}");
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let reports = (c.run)(seed);
        let elapsed = start.elapsed();
        let cases: usize = reports.iter().map(|r| r.cases).sum();
        let violations: Vec<&String> = reports.iter().flat_map(|r| &r.violations).collect();
        let late = c.limit.is_some_and(|l| elapsed > l);
        let ok = violations.is_empty() && !late;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {}: {} [{}] {} cases, {} violations, {:.1}s{}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            cases,
            violations.len(),
            elapsed.as_secs_f64(),
            match c.limit {
                Some(l) => format!(" (limit {}s)", l.as_secs()),
                None => String::new(),
            }
        );
        for v in violations.iter().take(5) {
            println!("    {v}");
        }
        for r in &reports {
            if !r.tallies.is_empty() {
                let t: Vec<String> = r.tallies.iter().map(|(k, n)| format!("{k}: {n}")).collect();
                println!("    hypotheses met: {}", t.join(", "));
            }
        }
    }
    if failed == 0 {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
