//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the checked counts. Run with `--nocapture` to see the lines.

use std::process::Command;
use std::time::Instant;

use rado_core::certificates::{
    builtin_certificates, certify_upper_bound, check_certificate, CheckOutcome,
};
use rado_core::coloring::validate_discrete;
use rado_core::equation::{Color, RadoResult};
use rado_core::extremal::{
    lower_bound_coloring_continuous, lower_bound_coloring_discrete, parity_coloring,
};
use rado_core::formulas::{rado_formula_continuous, rado_formula_discrete};
use rado_core::intervals::validate_interval;
use rado_core::rational::{rat, rat_u32, ratio, Rational};
use rado_core::search::{
    brute_force_exists, exists_valid_coloring, min_rado_discrete, SearchOutcome, DEFAULT_NODE_CAP,
};

/// Same-parity pairs whose closed-form value is finite and at most `cap`.
fn finite_pairs_up_to(cap: u32) -> Vec<(u32, u32, u32)> {
    let mut pairs = Vec::new();
    for c in 1..=cap {
        for k in (c..=cap).step_by(2) {
            debug_assert_eq!(c % 2, k % 2);
            if let RadoResult::Finite(v) = rado_formula_discrete(c, k).unwrap() {
                let v = rado_core::rational::to_u32(&v).unwrap();
                if v <= cap {
                    pairs.push((c, k, v));
                }
            }
        }
    }
    pairs
}

#[test]
fn criterion_1_formula_search_agreement() {
    let start = Instant::now();
    let pairs = finite_pairs_up_to(40);
    assert!(!pairs.is_empty());

    // spot values straight from the two branch formulas
    let expect: &[((u32, u32), u32)] = &[
        ((1, 1), 9),
        ((1, 3), 11),
        ((1, 5), 15),
        ((1, 7), 19),
        ((2, 2), 13),
        ((2, 4), 15),
        ((2, 6), 18),
        ((2, 8), 22),
        ((3, 3), 17),
        // the low branch gives k + 3c + 5 = 19 here; the lower-bound coloring
        // of [1, 18] rules out any smaller value
        ((3, 5), 19),
    ];
    for ((c, k), v) in expect {
        assert_eq!(
            rado_formula_discrete(*c, *k).unwrap(),
            RadoResult::finite_u32(*v),
            "formula at ({c}, {k})"
        );
    }

    for &(c, k, value) in &pairs {
        let searched = min_rado_discrete(c, k, 40).unwrap();
        assert_eq!(
            searched,
            RadoResult::finite_u32(value),
            "search disagrees with the formula at ({c}, {k})"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}, budget 120s");
    println!(
        "criterion 1 (formula-search agreement): PASS: {} pairs with value <= 40, {:?}",
        pairs.len(),
        elapsed
    );
}

#[test]
fn criterion_2_oracle_equivalence() {
    let start = Instant::now();
    let mut instances = 0usize;
    for (c, k) in [(1, 1), (1, 3), (2, 2), (2, 4), (3, 3)] {
        for n in 1..=18 {
            let solver = matches!(
                exists_valid_coloring(c, k, n, DEFAULT_NODE_CAP).unwrap(),
                SearchOutcome::Satisfiable(_)
            );
            let oracle = brute_force_exists(c, k, n).unwrap();
            assert_eq!(solver, oracle, "disagreement at c={c} k={k} n={n}");
            instances += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, budget 60s");
    println!(
        "criterion 2 (oracle equivalence): PASS: {instances} instances against full 2^n enumeration, {:?}",
        elapsed
    );
}

#[test]
fn criterion_3_parity_infinite_case() {
    for (c, k) in [(1u32, 2u32), (2, 3), (3, 4)] {
        let coloring = parity_coloring(c, k, 500).unwrap();
        assert_eq!(validate_discrete(&coloring, c, k), None, "parity coloring c={c} k={k}");
        assert_eq!(rado_formula_discrete(c, k).unwrap(), RadoResult::Infinite);
        assert_eq!(
            min_rado_discrete(c, k, 40).unwrap(),
            RadoResult::ExceededCap(40),
            "search must exhaust its cap at c={c} k={k}"
        );
    }
    // swapped inputs violate 1 <= c <= k and are rejected
    assert!(min_rado_discrete(2, 1, 40).is_err());
    assert!(rado_formula_discrete(2, 1).is_err());
    println!(
        "criterion 3 (parity-infinite case): PASS: 3 pairs valid to n=500 and cap-exceeded at 40; swapped inputs rejected"
    );
}

/// The criterion-4/5 grid: same-parity pairs with 1 <= c <= 9, c <= k <= 19.
fn grid() -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for c in 1..=9u32 {
        for k in (c..=19).step_by(2) {
            pairs.push((c, k));
        }
    }
    pairs
}

#[test]
fn criterion_4_lower_bounds() {
    let pairs = grid();
    assert_eq!(pairs.len(), 70);
    for &(c, k) in &pairs {
        let coloring = lower_bound_coloring_discrete(c, k).unwrap();
        let formula = rado_formula_discrete(c, k).unwrap().as_finite_u32().unwrap();
        assert_eq!(coloring.n(), formula - 1, "coloring size at ({c}, {k})");
        assert_eq!(
            validate_discrete(&coloring, c, k),
            None,
            "lower-bound coloring at ({c}, {k})"
        );
    }
    println!(
        "criterion 4 (lower bounds): PASS: {} colorings of [1, N-1] validated",
        pairs.len()
    );
}

#[test]
fn criterion_5_upper_bound_certificates() {
    let pairs = grid();
    let mut inapplicable = Vec::new();
    for &(c, k) in &pairs {
        let report = certify_upper_bound(&rat_u32(c), &rat_u32(k), None).unwrap();
        let formula = rado_formula_discrete(c, k).unwrap().as_finite_u32().unwrap();
        assert_eq!(report.n, rat_u32(formula));
        if !report.run.outcome.is_certified() {
            inapplicable.push(((c, k), report.run.outcome.clone()));
        }
    }
    println!(
        "criterion 5 run report: inapplicable parameter points: {}",
        if inapplicable.is_empty() {
            "none".to_string()
        } else {
            format!("{inapplicable:?}")
        }
    );
    assert!(
        inapplicable.is_empty(),
        "chain-element collisions were expected to close early or vacuously everywhere on this grid"
    );
    println!(
        "criterion 5 (upper-bound certificates): PASS: {} certificates replayed at n = formula value",
        pairs.len()
    );
}

#[test]
fn criterion_6_continuous_setting() {
    let start = Instant::now();

    // at alpha = 1 the continuous and discrete formulas coincide
    let pairs = finite_pairs_up_to(40);
    for &(c, k, _) in &pairs {
        let continuous = rado_formula_continuous(&rat_u32(c), &rat_u32(k), &rat(1)).unwrap();
        assert_eq!(continuous.result, rado_formula_discrete(c, k).unwrap());
        assert!(!continuous.parity_indeterminate);
    }

    // repaired continuous lower bounds validate across the alpha sample
    let sample_pairs = [(1u32, 1u32), (2, 2), (1, 3), (2, 6)];
    let alphas = [ratio(1, 2), rat(1), ratio(3, 2)];
    for &(c, k) in &sample_pairs {
        for alpha in &alphas {
            let coloring =
                lower_bound_coloring_continuous(&rat_u32(c), &rat_u32(k), alpha).unwrap();
            assert_eq!(
                validate_interval(&coloring, &rat_u32(c), &rat_u32(k)),
                None,
                "continuous lower bound at ({c}, {k}, alpha={alpha})"
            );
        }
    }

    // continuous certificates: certified whenever every chain element lies in
    // [alpha, N]; out-of-range diagnostics are emitted otherwise
    let mut certified = 0usize;
    let mut diagnostics: Vec<String> = Vec::new();
    for &(c, k) in &sample_pairs {
        for alpha in &alphas {
            let report = certify_upper_bound(&rat_u32(c), &rat_u32(k), Some(alpha)).unwrap();
            if report.all_elements_in_range {
                assert!(
                    report.run.outcome.is_certified(),
                    "({c}, {k}, alpha={alpha}) has all elements in range but failed: {:?}",
                    report.run.outcome
                );
                certified += 1;
            } else {
                let flagged: Vec<String> = report
                    .elements
                    .iter()
                    .filter(|e| !e.in_range)
                    .map(|e| format!("{} = {}", e.form, e.value))
                    .collect();
                assert!(!flagged.is_empty());
                diagnostics.push(format!("({c}, {k}, alpha={alpha}): {}", flagged.join(", ")));
            }
        }
    }
    // the sample's one out-of-range point: (1, 3) at alpha = 3/2 has
    // k - 2c = 1 below alpha
    assert_eq!(diagnostics.len(), 1);
    assert!(diagnostics[0].contains("(1, 3, alpha=3/2)"));
    assert!(diagnostics[0].contains("k-2c = 1"));
    println!("criterion 6 out-of-range diagnostics: {}", diagnostics.join("; "));

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "took {elapsed:?}, budget 10s");
    println!(
        "criterion 6 (continuous setting): PASS: formulas matched on {} pairs, 12 colorings validated, {certified} certificates certified, 1 range diagnostic emitted, {:?}",
        pairs.len(),
        elapsed
    );
}

#[test]
fn criterion_7_tamper_suite() {
    let cert = |id: &str| {
        builtin_certificates()
            .into_iter()
            .find(|c| c.meta.id == id)
            .unwrap()
    };
    // (certificate id, parameters (c, k, alpha, n), corruption)
    type Corruption = Box<dyn Fn(&mut rado_core::certificates::Certificate)>;
    type Case = (&'static str, (i64, i64, Rational, Rational), Corruption);
    let flip = |path: &'static [Color], index: usize| -> Corruption {
        Box::new(move |cert| {
            let step = cert.step_mut(path, index).unwrap();
            step.color = step.color.opposite();
        })
    };
    let bump = |path: &'static [Color],
                index: usize,
                which: &'static str,
                coeff: &'static str| -> Corruption {
        Box::new(move |cert| {
            let step = cert.step_mut(path, index).unwrap();
            let form = match which {
                "x" => &mut step.x,
                "y" => &mut step.y,
                "conclusion" => &mut step.conclusion,
                _ => unreachable!(),
            };
            match coeff {
                "k" => form.k_coeff += rat(1),
                "c" => form.c_coeff += rat(1),
                "alpha" => form.alpha_coeff += rat(1),
                "const" => form.constant += rat(1),
                _ => unreachable!(),
            }
        })
    };
    let bump_terminal = |path: &'static [Color], coeff: &'static str| -> Corruption {
        Box::new(move |cert| {
            let terminal = cert.terminal_mut(path).unwrap();
            match coeff {
                "x-c" => terminal.x.c_coeff += rat(1),
                "y-const" => terminal.y.constant += rat(1),
                _ => unreachable!(),
            }
        })
    };

    let cases: Vec<Case> = vec![
        // conclusion color flips
        ("discrete-low", (2, 4, rat(1), rat(15)), flip(&[Color::Red], 0)),
        ("discrete-low", (2, 4, rat(1), rat(15)), flip(&[Color::Red], 6)),
        ("discrete-low", (2, 4, rat(1), rat(15)), flip(&[Color::Blue], 1)),
        ("discrete-low", (2, 4, rat(1), rat(15)), flip(&[Color::Blue], 7)),
        ("discrete-high", (2, 6, rat(1), rat(18)), flip(&[Color::Red], 0)),
        ("discrete-high", (2, 6, rat(1), rat(18)), flip(&[Color::Red, Color::Blue], 1)),
        ("discrete-high", (2, 6, rat(1), rat(18)), flip(&[Color::Blue, Color::Red], 0)),
        ("continuous-low", (3, 5, ratio(1, 2), ratio(33, 2)), flip(&[Color::Red], 10)),
        ("continuous-low", (3, 5, ratio(1, 2), ratio(33, 2)), flip(&[Color::Blue], 0)),
        ("continuous-high", (2, 6, rat(1), rat(18)), flip(&[Color::Blue, Color::Blue], 2)),
        // coefficient edits
        ("discrete-low", (2, 4, rat(1), rat(15)), bump(&[Color::Red], 1, "conclusion", "k")),
        ("discrete-low", (2, 4, rat(1), rat(15)), bump(&[Color::Red], 3, "x", "const")),
        ("discrete-low", (2, 4, rat(1), rat(15)), bump(&[Color::Blue], 0, "y", "c")),
        ("discrete-high", (2, 6, rat(1), rat(18)), bump(&[Color::Red], 1, "conclusion", "c")),
        ("discrete-high", (2, 6, rat(1), rat(18)), bump(&[Color::Blue, Color::Blue], 3, "y", "k")),
        ("continuous-low", (2, 2, ratio(1, 2), ratio(21, 2)), bump(&[Color::Red], 0, "conclusion", "alpha")),
        ("continuous-low", (3, 5, ratio(3, 2), ratio(43, 2)), bump(&[Color::Blue], 6, "x", "alpha")),
        ("continuous-high", (2, 6, rat(1), rat(18)), bump(&[Color::Red, Color::Red], 0, "y", "k")),
        // terminal edits
        ("discrete-low", (2, 4, rat(1), rat(15)), bump_terminal(&[Color::Blue], "y-const")),
        ("continuous-high", (2, 6, rat(1), rat(18)), bump_terminal(&[Color::Blue, Color::Red], "x-c")),
    ];
    assert_eq!(cases.len(), 20);

    // every original certifies before corruption; every corruption is caught
    let mut reasons = Vec::new();
    for (i, (id, (c, k, alpha, n), corrupt)) in cases.iter().enumerate() {
        let (c, k) = (rat(*c), rat(*k));
        let clean = cert(id);
        let clean_run = check_certificate(&clean, &c, &k, alpha, n).unwrap();
        assert!(
            clean_run.outcome.is_certified(),
            "case {i}: {id} must certify before corruption"
        );
        let mut corrupted = clean;
        corrupt(&mut corrupted);
        let run = check_certificate(&corrupted, &c, &k, alpha, n).unwrap();
        match run.outcome {
            CheckOutcome::StepError(err) => reasons.push(format!("case {i}: {}", err.reason)),
            CheckOutcome::CertifiedUnsat => {
                panic!("case {i}: corrupted {id} still certifies")
            }
        }
    }
    println!("criterion 7 (tamper suite): PASS: 20/20 corruptions rejected");
    for line in reasons {
        println!("  {line}");
    }
}

#[test]
fn criterion_8_sweep_determinism() {
    let exe = env!("CARGO_BIN_EXE_rado");
    let dir = std::env::temp_dir();
    let run = |name: &str, jobs: Option<&str>| {
        let path = dir.join(name);
        let mut cmd = Command::new(exe);
        cmd.args([
            "sweep", "--c-max", "3", "--k-max", "7", "--cap", "40", "--out",
        ])
        .arg(&path);
        if let Some(jobs) = jobs {
            cmd.args(["--jobs", jobs]);
        }
        let status = cmd.status().expect("sweep runs");
        assert!(status.success(), "sweep exited with {status:?}");
        std::fs::read_to_string(&path).expect("sweep output readable")
    };

    // strip the runtime column; everything else must be byte-identical
    let data_columns = |csv: &str| -> String {
        csv.lines()
            .map(|line| match line.rsplit_once(',') {
                Some((data, _runtime)) => data.to_string(),
                None => line.to_string(),
            })
            .collect::<Vec<_>>()
            .join("\n")
    };

    let first = run("rado_sweep_a.csv", None);
    let second = run("rado_sweep_b.csv", None);
    let parallel = run("rado_sweep_c.csv", Some("4"));
    assert_eq!(data_columns(&first), data_columns(&second));
    assert_eq!(data_columns(&first), data_columns(&parallel));
    assert!(!first.contains("MISMATCH"));
    assert_eq!(first.lines().count(), 19, "header plus 18 rows");
    println!(
        "criterion 8 (sweep determinism): PASS: two sequential runs and one 4-worker run agree on all data columns"
    );
}
