//! Runs the eleven acceptance criteria and prints one line each.

use std::process::ExitCode;
use std::time::Instant;

use affschur::schur::Report;
use affschur::suites::{self, run_suite, SuiteConfig};
use affschur::Error;

type Check = Box<dyn Fn() -> Result<Report, Error>>;

fn suite(name: &'static str, n: usize, r: i32, bandwidth: Option<i32>, max: Option<i32>) -> Check {
    Box::new(move || run_suite(name, &SuiteConfig { n, r, bandwidth, max, samples: 200, seed: 7 }))
}

fn criteria() -> Vec<(&'static str, Vec<Check>)> {
    let mut c: Vec<(&'static str, Vec<Check>)> = Vec::new();
    c.push((
        "C1 generator products: BLM formulas = oracle, n,r in {2,3}",
        [(2, 2), (2, 3), (3, 2), (3, 3)].into_iter().map(|(n, r)| suite("oracle-vs-blm", n, r, Some(n as i32), Some(2))).collect(),
    ));
    c.push(("C2 polynomial identity P = P', n in {2,3,4}", (2..=4).map(|n| suite("polyidentity", n, 1, None, Some(2))).collect()));
    c.push(("C3 Hall polynomials: associativity, stability, semisimple products", (2..=3).map(|n| suite("hall-assoc", n, 1, None, Some(4))).collect()));
    c.push((
        "C4 central elements z_1, c_1, pi_m",
        (2..=3).map(|n| -> Check { Box::new(move || suites::central(n, 4)) }).collect(),
    ));
    c.push((
        "C5 Hopf structure and Green pairing",
        (2..=3).flat_map(|n| [suite("hopf", n, 1, None, None), suite("pairing", n, 1, None, None)]).collect(),
    ));
    c.push(("C6 triangular decomposition, n = 2, r in {2,3}", (2..=3).map(|r| suite("pbw", 2, r, Some(2), None)).collect()));
    c.push((
        "C7 Schur algebra presentations and the n = r = 2 relations",
        [(2, 2), (3, 2), (2, 3), (3, 3)]
            .into_iter()
            .map(|(n, r)| suite("presentation", n, r, None, None))
            .chain([suite("rho-nr", 2, 2, None, None)])
            .collect(),
    ));
    c.push(("C8 commutator relations under xi_r, n = 2, r in {2,3}", (2..=3).map(|r| suite("commutator", 2, r, None, Some(1))).collect()));
    c.push((
        "C9 tensor space bimodule, 200 vectors, n,r <= 3",
        (2..=3).flat_map(|n| (1..=3).map(move |r| suite("tensor-bimodule", n, r, None, None))).collect(),
    ));
    c.push((
        "C10 classical products, realization and loop bracket",
        (2..=3)
            .flat_map(|n| (1..=4).map(move |r| suite("classical-mf", n, r, Some(2 * n as i32), Some(1))))
            .chain((2..=3).map(|n| suite("classical-realization", n, 1, None, None)))
            .collect(),
    ));
    c.push((
        "C11 worked examples: monomial word, d_i = |Inv(i)|, rho identity",
        vec![
            Box::new(suites::monomial_example) as Check,
            Box::new(|| Ok(suites::d_index_check(100, 11))),
            suite("rho-nr", 2, 2, None, None),
        ],
    ));
    c
}

fn main() -> ExitCode {
    let mut all = true;
    for (label, checks) in criteria() {
        let start = Instant::now();
        let mut rep = Report::default();
        let mut err = None;
        for check in &checks {
            match check() {
                Ok(r) => rep.extend(r),
                Err(e) => {
                    err = Some(e);
                    break;
                }
            }
        }
        let secs = start.elapsed().as_secs_f64();
        let ok = err.is_none() && rep.passed();
        all &= ok;
        let detail = match &err {
            Some(e) => format!("error: {}", e),
            None => format!("{} checks", rep.items.len()),
        };
        println!("{} {} ({}, {:.1}s)", if ok { "PASS" } else { "FAIL" }, label, detail, secs);
        for f in rep.failures().iter().take(5) {
            println!("     failing: {}", f);
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
