//! The nine acceptance criteria, one line each. Runs without the libtest
//! harness so the lines show up in `cargo test` output.

use std::time::{Duration, Instant};

use icrystal::suite::{run_cases, SuiteConfig};

const CRITERIA: [(&str, &[&str], u64); 9] = [
    ("built-in families and their equivalences", &["examples"], 1),
    ("tensor rule on 200 random pairs", &["tensor"], 30),
    ("associativity on 50 random triples", &["assoc"], 60),
    ("oracle limit equals the tensor graph", &["a=-1"], 120),
    ("norm recursion, closed form, leading terms", &["norms"], 10),
    ("golden graphs byte for byte", &["golden"], 5),
    ("projective system maps and coherence", &["projective"], 120),
    ("limit stabilization and diagonal formulas", &["limit", "diagonal"], 180),
    ("S-condition consequences on B(λ)", &["s-conditions"], 30),
];

fn main() {
    let cfg = SuiteConfig::default();
    let mut failed = 0;
    for (n, (what, cases, bound)) in CRITERIA.iter().enumerate() {
        let t = Instant::now();
        let res = run_cases(cases, &cfg).expect("known cases");
        let dt = t.elapsed();
        let bad: Vec<_> = res.iter().filter(|r| !r.pass).collect();
        let slow = dt > Duration::from_secs(*bound);
        let ok = bad.is_empty() && !slow && !res.is_empty();
        println!(
            "{} {}. {what}: {}/{} items, {:.2}s (bound {bound}s)",
            if ok { "PASS" } else { "FAIL" },
            n + 1,
            res.len() - bad.len(),
            res.len(),
            dt.as_secs_f64()
        );
        for r in &bad {
            println!("       {} {}: {}", r.case, r.id, r.detail);
        }
        failed += usize::from(!ok);
    }
    println!("\nacceptance: {} of 9 criteria pass", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
