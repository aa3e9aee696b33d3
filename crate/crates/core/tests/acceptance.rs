//! Acceptance runner: one PASS/FAIL line per criterion.
//!
//! Exits nonzero if any check fails that is not listed in `KNOWN_DEFECTS`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use oddlength::gf::{
    invariance_check, predicted_factors, verify, CForm, Check, Checkpoint, VerifyReport,
};
use oddlength::perm::SignedPermutation;
use oddlength::{
    build_root_system, run_partitioned, CartanType, Error, Family, RunOptions, StatProfile,
    TheoremId, WeylElement,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

// Runtime limits in seconds.
const LIMIT_A: f64 = 10.0;
const LIMIT_B: f64 = 120.0;
const LIMIT_C: f64 = 120.0;
const LIMIT_D: f64 = 120.0;
const LIMIT_MULTIVARIATE: f64 = 60.0;
const LIMIT_F4: f64 = 1.0;
const LIMIT_E6: f64 = 10.0;
const LIMIT_E7_SEQUENTIAL: f64 = 600.0;
const LIMIT_E7_FOUR_WORKERS: f64 = 120.0;

const INVARIANCE_SEED: u64 = 0x5eed;
const CONJUGATORS_PER_TYPE: usize = 3;

/// Checks that fail for a documented reason. The printed product for `F4`
/// does not match the enumerated polynomial
/// `1 - 2x^2 + x^6 + x^8 - 2x^12 + x^14 = (1 - x^2)^2 (1 - x^4) (1 - x^6)`.
const KNOWN_DEFECTS: &[&str] = &["odd-length F4"];

struct Criterion {
    id: u32,
    title: &'static str,
    failures: Vec<String>,
    notes: Vec<String>,
    elapsed: Duration,
}

impl Criterion {
    fn new(id: u32, title: &'static str) -> Self {
        Criterion {
            id,
            title,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn fail(&mut self, label: impl Into<String>) {
        self.failures.push(label.into());
    }

    fn expect(&mut self, cond: bool, label: impl Into<String>) {
        if !cond {
            self.fail(label);
        }
    }

    fn report(&mut self, r: oddlength::Result<VerifyReport>, label: &str) {
        match r {
            Ok(r) if r.pass => {}
            Ok(r) => {
                self.notes.push(r.to_string());
                self.fail(r.label);
            }
            Err(e) => self.fail(format!("{label}: error {e}")),
        }
    }

    fn check(&mut self, c: Check) {
        let label = c.to_string();
        self.report(verify(&c), &label);
    }

    fn time_limit(&mut self, what: &str, elapsed: Duration, limit: f64) {
        let s = elapsed.as_secs_f64();
        self.notes
            .push(format!("{what}: {s:.2} s (limit {limit} s)"));
        self.expect(s < limit, format!("{what} over time limit"));
    }

    fn check_common(&mut self, what: &str, r: common::Check) {
        match r {
            Ok(n) => self.notes.push(format!("{what}: {n} cases")),
            Err(e) => self.fail(format!("{what}: {e}")),
        }
    }
}

fn ty(family: Family, rank: usize) -> CartanType {
    CartanType::new(family, rank).unwrap()
}

fn odd_length(ctype: CartanType) -> Check {
    Check::OddLength {
        ctype,
        form: CForm::Derived,
    }
}

fn timed<F: FnOnce(&mut Criterion)>(c: &mut Criterion, f: F) -> Duration {
    let t = Instant::now();
    f(c);
    t.elapsed()
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "type A odd length, n = 2..8");
    let e = timed(&mut c, |c| {
        for n in 2..=8 {
            c.check(odd_length(ty(Family::A, n - 1)));
        }
    });
    c.time_limit("total", e, LIMIT_A);
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2, "type B odd length, n = 1..8");
    let e = timed(&mut c, |c| {
        for n in 1..=8 {
            c.check(odd_length(ty(Family::B, n)));
        }
        c.expect(ty(Family::B, 8).group_order() == 10_321_920, "|B8|");
    });
    c.time_limit("total", e, LIMIT_B);
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(
        3,
        "type C odd length, n = 2..8; literal form rejected at n = 2",
    );
    let e = timed(&mut c, |c| {
        for n in 2..=8 {
            c.check(odd_length(ty(Family::C, n)));
        }
        let literal = verify(&Check::OddLength {
            ctype: ty(Family::C, 2),
            form: CForm::Printed,
        });
        match literal {
            Ok(r) => {
                c.expect(
                    !r.pass && r.nonzero_diff_terms() > 0,
                    "literal C2 form should fail",
                );
                c.notes.push(format!("expected rejection: {r}"));
            }
            Err(e) => c.fail(format!("literal C2: error {e}")),
        }
    });
    c.time_limit("total", e, LIMIT_C);
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4, "type D odd length n = 2..8, bivariate n = 2..6");
    let e = timed(&mut c, |c| {
        for n in 2..=8 {
            c.check(odd_length(ty(Family::D, n)));
        }
        for n in 2..=6 {
            c.check(Check::Theorem {
                id: TheoremId::DBivar,
                n,
            });
        }
    });
    c.time_limit("total", e, LIMIT_D);
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5, "type B multivariate identities");
    let e = timed(&mut c, |c| {
        let mut zeros = 0;
        for (id, lo) in [
            (TheoremId::B4Var, 1),
            (TheoremId::BOoo, 1),
            (TheoremId::BEoo, 1),
            (TheoremId::UniOoe, 3),
            (TheoremId::UniEoe, 3),
            (TheoremId::UniEoo, 3),
        ] {
            for n in lo..=6 {
                let r = verify(&Check::Theorem { id, n });
                if let Ok(r) = &r {
                    let must_vanish =
                        id == TheoremId::UniEoo || (id == TheoremId::BEoo && n % 2 == 1);
                    if must_vanish {
                        c.expect(r.computed.is_zero(), format!("{id} n={n} should vanish"));
                        zeros += 1;
                    }
                }
                c.report(r, &format!("{id} n={n}"));
            }
        }
        c.notes.push(format!("{zeros} identically zero cases"));
    });
    c.time_limit("total", e, LIMIT_MULTIVARIATE);
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6, "B4 non-factoring four-variable expansion");
    c.elapsed = timed(&mut c, |c| {
        c.check(Check::Theorem {
            id: TheoremId::B4Nonfactor,
            n: 4,
        });
    });
    c
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::new(7, "type D vanishing, n = 2..6");
    c.elapsed = timed(&mut c, |c| {
        for id in [TheoremId::DOe, TheoremId::DLoe] {
            for n in 2..=6 {
                let r = verify(&Check::Theorem { id, n });
                if let Ok(r) = &r {
                    c.expect(r.computed.is_zero(), format!("{id} n={n} should vanish"));
                }
                c.report(r, &format!("{id} n={n}"));
            }
        }
    });
    c
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::new(8, "exceptional types F4, E6, E7");
    for (t, limit) in [
        ("F4", LIMIT_F4),
        ("E6", LIMIT_E6),
        ("E7", LIMIT_E7_SEQUENTIAL),
    ] {
        let ctype: CartanType = t.parse().unwrap();
        let opts = RunOptions {
            workers: 1,
            ..RunOptions::default()
        };
        let start = Instant::now();
        let got = run_partitioned(ctype, StatProfile::OddLength, &opts);
        let e = start.elapsed();
        c.report(
            got.and_then(|_| verify(&odd_length(ctype))),
            &format!("odd-length {t}"),
        );
        c.time_limit(&format!("{t} sequential"), e, limit);
    }
    let e7: CartanType = "E7".parse().unwrap();
    let opts = RunOptions {
        workers: 4,
        ..RunOptions::default()
    };
    let start = Instant::now();
    match run_partitioned(e7, StatProfile::OddLength, &opts) {
        Ok(r) => {
            let e = start.elapsed();
            let expected = oddlength::predicted_gf(e7).unwrap();
            c.expect(r.poly == expected, "E7 with 4 workers");
            c.time_limit("E7 with 4 workers", e, LIMIT_E7_FOUR_WORKERS);
        }
        Err(e) => c.fail(format!("E7 with 4 workers: error {e}")),
    }
    c
}

fn e8_partial(
    dir: &std::path::Path,
    name: &str,
    runs: &[(Vec<usize>, usize, usize)],
) -> oddlength::Result<String> {
    let path = dir.join(name);
    for (order, max, workers) in runs {
        let opts = RunOptions {
            workers: *workers,
            checkpoint: Some(path.clone()),
            resume: true,
            max_parts: Some(*max),
            allow_large: true,
            part_order: Some(order.clone()),
            ..RunOptions::default()
        };
        run_partitioned("E8".parse()?, StatProfile::OddLength, &opts)?;
    }
    let cp = Checkpoint::load(&path)?;
    if cp.done != [0, 1, 2] {
        return Err(Error::CheckpointCorrupt(format!(
            "{name}: parts {:?}",
            cp.done
        )));
    }
    Ok(serde_json::to_string(&cp.partial).expect("json"))
}

fn criterion_9() -> Criterion {
    let mut c = Criterion::new(
        9,
        "E8 partitioned run: checkpoint, resume, deterministic merge",
    );
    let dir = tempfile::tempdir().unwrap();
    c.elapsed = timed(&mut c, |c| {
        let straight = e8_partial(dir.path(), "straight.json", &[(vec![0, 1, 2], 3, 1)]);
        let resumed = e8_partial(
            dir.path(),
            "resumed.json",
            &[(vec![2, 0, 1], 2, 2), (vec![2, 0, 1], 1, 1)],
        );
        let parallel = e8_partial(dir.path(), "parallel.json", &[(vec![1, 2, 0], 3, 3)]);
        match (straight, resumed, parallel) {
            (Ok(a), Ok(b), Ok(p)) => {
                c.expect(a == b, "resumed partial differs from uninterrupted partial");
                c.expect(a == p, "parallel partial differs from sequential partial");
                c.notes.push(format!(
                    "3-part partial: {} bytes, identical across runs",
                    a.len()
                ));
            }
            (a, b, p) => {
                for e in [a.err(), b.err(), p.err()].into_iter().flatten() {
                    c.fail(format!("E8 partial run: {e}"));
                }
            }
        }
    });

    // Not gating.
    let path = dir.path().join("full.json");
    let opts = RunOptions {
        checkpoint: Some(path),
        allow_large: true,
        ..RunOptions::default()
    };
    let start = Instant::now();
    let e8: CartanType = "E8".parse().unwrap();
    match run_partitioned(e8, StatProfile::OddLength, &opts) {
        Ok(r) => {
            let ok = r.is_complete()
                && r.poly.eval_int(&[1]) == Ok(0)
                && r.poly.l1_norm() <= e8.group_order()
                && r.poly.coefficient(&[64]) == 1;
            c.notes.push(format!(
                "optional full E8 ({} elements, {:.1} s): {}  {}",
                e8.group_order(),
                start.elapsed().as_secs_f64(),
                if ok { "complete" } else { "INCONSISTENT" },
                r.poly
            ));
            let no_prediction = matches!(
                predicted_factors(e8, CForm::Derived),
                Err(Error::NoPrediction(_))
            );
            c.notes
                .push(format!("no product formula for E8: {no_prediction}"));
        }
        Err(e) => c.notes.push(format!("optional full E8 run failed: {e}")),
    }
    c
}

fn criterion_10() -> Criterion {
    let mut c = Criterion::new(10, "roots against windows, rank <= 5; worked example");
    c.elapsed = timed(&mut c, |c| {
        c.check_common(
            "classical groups of rank <= 5",
            common::cross_representation(5),
        );
        let w: SignedPermutation = "[3,-1,-4,-2,5]".parse().unwrap();
        for (t, want) in [("B5", 6), ("C5", 8)] {
            let rs = build_root_system(t.parse().unwrap()).unwrap();
            let got = WeylElement::from_window(&rs, &w).and_then(|e| e.odd_length(&rs));
            c.expect(
                got.as_ref() == Ok(&want),
                format!("worked example in {t}: {got:?}"),
            );
        }
    });
    c
}

fn criterion_11() -> Criterion {
    let mut c = Criterion::new(
        11,
        "involutions, restriction identities, additivity, extensions",
    );
    c.elapsed = timed(&mut c, |c| {
        c.check_common("peak involution, S_n for n <= 6", common::peak(6));
        c.check_common("star involution, B_n for n <= 5", common::star(5));
        c.check_common("bar involution, D_n for n <= 5", common::bar(5));
        c.check_common(
            "chessboard involution, D_n for n <= 5",
            common::chessboard(5),
        );
        c.check_common(
            "unimodal and chessboard reductions, n <= 8",
            common::unimodal(8),
        );
        c.check_common(
            "chessboard and good chessboard, D_n for n <= 6",
            common::d_restrictions(6),
        );
        c.check_common("additivity, D_n for n <= 6", common::additivity(6));
        c.check_common("extension deltas, n <= 6", common::extensions(6));
    });
    c
}

fn criterion_12() -> Criterion {
    let mut c = Criterion::new(12, "simple system invariance for A3, B3, D4");
    let mut rng = StdRng::seed_from_u64(INVARIANCE_SEED);
    c.elapsed = timed(&mut c, |c| {
        for t in ["A3", "B3", "D4"] {
            let ctype: CartanType = t.parse().unwrap();
            let mut changed = 0;
            for _ in 0..CONJUGATORS_PER_TYPE {
                let k = rng.gen_range(1..ctype.group_order());
                match invariance_check(ctype, k) {
                    Ok(r) => {
                        changed += r.changed_lengths;
                        c.report(Ok(r.report), t);
                    }
                    Err(e) => c.fail(format!("{t} conjugator {k}: error {e}")),
                }
            }
            c.expect(
                changed > 0,
                format!("{t}: no conjugator changed any length"),
            );
        }
    });
    c
}

fn main() -> ExitCode {
    let all: [fn() -> Criterion; 12] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
        criterion_11,
        criterion_12,
    ];
    let mut unexpected = Vec::new();
    for f in all {
        let start = Instant::now();
        let mut c = f();
        if c.elapsed.is_zero() {
            c.elapsed = start.elapsed();
        }
        let status = if c.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "{status} {:>2}  {}  ({:.2} s)",
            c.id,
            c.title,
            c.elapsed.as_secs_f64()
        );
        for n in &c.notes {
            println!("        {n}");
        }
        for f in &c.failures {
            let known = KNOWN_DEFECTS.contains(&f.as_str());
            println!(
                "        failed: {f}{}",
                if known { "  [known defect]" } else { "" }
            );
            if !known {
                unexpected.push(format!("{}: {f}", c.id));
            }
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {}", unexpected.join("; "));
        ExitCode::FAILURE
    }
}
