//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use braid_core::rewrite::random_rewrites;
use braid_core::word::random_word_with;
use braid_core::{
    are_conjugate, artin_action, classify, delta_simple, embed_general, embed_standard, equal_words, normal_form,
    BraidWord, FreeWord, Letter, NormalForm, SplitMix64, DEFAULT_MAX_SSS,
};
use braid_harness::pairs::general_conjugator;
use braid_harness::{boundary_suite, lift_witness, verify_nonmerging, HarnessError, SuiteConfig, SuiteReport, Verdict};

const SEED: u64 = 20240611;
const ORACLE_PAIRS: usize = 500;
const ORACLE_MAX_LEN: usize = 8;
const ORACLE_REWRITE_STEPS: usize = 30;
const ORACLE_LIMIT: Duration = Duration::from_secs(30);
const GARSIDE_MAX_N: usize = 6;
const GARSIDE_LIMIT: Duration = Duration::from_secs(5);
const BRUTE_SAMPLE: usize = 40;
const BRUTE_WORD_LEN: usize = 4;
const BRUTE_CONJ_LEN: usize = 6;
const BRUTE_LIMIT: Duration = Duration::from_secs(600);
const SUITE_CONFIGS: [(usize, usize); 4] = [(2, 3), (2, 4), (3, 4), (3, 5)];
const SUITE_TRIALS: usize = 200;
const SUITE_MAX_LEN: usize = 10;
const SUITE_SKIP_RATE: f64 = 0.05;
const SUITE_LIMIT: Duration = Duration::from_secs(600);
const GENERAL_CONJ_LEN: usize = 6;
const BOUNDARY_TRIALS: usize = 100;
const BOUNDARY_MAX_LEN: usize = 10;
const BOUNDARY_LIMIT: Duration = Duration::from_secs(60);
const CLASSIFY_SAMPLES: usize = 50;
const CLASSIFY_MAX_LEN: usize = 8;
const CLASSIFY_TARGET: usize = 5;
const CLASSIFY_LIMIT: Duration = Duration::from_secs(120);

/// Every certificate seen during the run, re-checked with `equal_words`.
#[derive(Default)]
struct CertificateLog {
    checked: usize,
    failures: Vec<String>,
}

impl CertificateLog {
    fn record(&mut self, conjugator: &BraidWord, a: &BraidWord, b: &BraidWord, context: &str) {
        self.checked += 1;
        let ok = a
            .conjugated_by(conjugator)
            .and_then(|c| equal_words(&c, b))
            .unwrap_or(false);
        if !ok {
            self.failures.push(format!("{context}: {conjugator} does not carry {a} to {b}"));
        }
    }

    fn conjugate(&mut self, a: &BraidWord, b: &BraidWord, context: &str) -> bool {
        match are_conjugate(a, b, DEFAULT_MAX_SSS).expect("conjugacy decision") {
            Some(cert) => {
                if !cert.verified {
                    self.failures.push(format!("{context}: unverified certificate for {a} ~ {b}"));
                }
                self.record(&cert.conjugator, a, b, context);
                true
            }
            None => false,
        }
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let elapsed = start.elapsed();
    if elapsed > limit {
        o.pass = false;
    }
    o.detail = format!("{} ({:.2}s, limit {}s)", o.detail, elapsed.as_secs_f64(), limit.as_secs());
    o
}

fn action_images(w: &BraidWord) -> Vec<FreeWord> {
    (1..=w.strands())
        .map(|k| artin_action(w, &FreeWord::generator(w.strands(), k)).expect("action"))
        .collect()
}

fn equality_oracle() -> Outcome {
    let mut rng = SplitMix64::new(SEED);
    let mut agree = 0;
    let mut equal = 0;
    let mut disagreements = Vec::new();
    for n in [3, 4] {
        for k in 0..ORACLE_PAIRS {
            let len = rng.range_inclusive(0, ORACLE_MAX_LEN);
            let u = random_word_with(n, len, &mut rng).unwrap();
            let v = if k % 2 == 0 {
                random_rewrites(&u, ORACLE_REWRITE_STEPS, ORACLE_MAX_LEN, &mut rng)
            } else {
                let len = rng.range_inclusive(0, ORACLE_MAX_LEN);
                random_word_with(n, len, &mut rng).unwrap()
            };
            let fast = equal_words(&u, &v).unwrap();
            let oracle = action_images(&u) == action_images(&v);
            equal += usize::from(oracle);
            if fast == oracle {
                agree += 1;
            } else {
                disagreements.push(format!("{u} vs {v}"));
            }
        }
    }
    let total = 2 * ORACLE_PAIRS;
    let mut detail = format!("{agree}/{total} pairs agree, {equal} equal");
    if let Some(first) = disagreements.first() {
        detail.push_str(&format!(", first disagreement {first}"));
    }
    outcome(agree == total, detail)
}

fn garside_identities() -> Outcome {
    let mut checks = 0;
    let mut failures = 0;
    for n in 2..=GARSIDE_MAX_N {
        let delta = delta_simple(n).unwrap().to_word();
        let delta_sq = delta.pow(2);
        for i in 1..n {
            let s = BraidWord::generator(n, i, true).unwrap();
            let mirrored = BraidWord::generator(n, n - i, true).unwrap();
            let flip = equal_words(&s.conjugated_by(&delta).unwrap(), &mirrored).unwrap();
            let central = equal_words(&delta_sq.concat(&s).unwrap(), &s.concat(&delta_sq).unwrap()).unwrap();
            checks += 2;
            failures += usize::from(!flip) + usize::from(!central);
        }
    }
    outcome(failures == 0, format!("{}/{checks} identities hold", checks - failures))
}

/// All freely reduced words in `B_n` up to the given length.
fn reduced_words(n: usize, max_len: usize) -> Vec<BraidWord> {
    let letters: Vec<Letter> = (1..n).flat_map(|i| [Letter::pos(i), Letter::neg(i)]).collect();
    let mut out = vec![BraidWord::identity(n).unwrap()];
    let mut frontier = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                if w.last() == Some(&l.inverse()) {
                    continue;
                }
                let mut grown = w.clone();
                grown.push(l);
                out.push(BraidWord::new(n, grown.clone()).unwrap());
                next.push(grown);
            }
        }
        frontier = next;
    }
    out
}

fn brute_force(log: &mut CertificateLog) -> Outcome {
    let n = 3;
    let mut rng = SplitMix64::new(SEED ^ 0x4);
    let mut sample = Vec::new();
    let mut seen = BTreeSet::new();
    while sample.len() < BRUTE_SAMPLE {
        let len = rng.range_inclusive(0, BRUTE_WORD_LEN);
        let w = random_word_with(n, len, &mut rng).unwrap();
        if seen.insert(w.to_string()) {
            sample.push(w);
        }
    }
    let conjugators = reduced_words(n, BRUTE_CONJ_LEN);
    let orbits: Vec<BTreeSet<NormalForm>> = sample
        .iter()
        .map(|a| conjugators.iter().map(|c| normal_form(&a.conjugated_by(c).unwrap())).collect())
        .collect();
    let (mut pairs, mut brute_pairs, mut reported, mut problems) = (0, 0, 0, Vec::new());
    for (i, a) in sample.iter().enumerate() {
        for b in &sample {
            pairs += 1;
            let brute = orbits[i].contains(&normal_form(b));
            let decided = log.conjugate(a, b, "brute-force");
            brute_pairs += usize::from(brute);
            reported += usize::from(decided);
            if brute && !decided {
                problems.push(format!("{a} ~ {b} missed"));
            }
        }
    }
    let mut detail = format!(
        "{pairs} pairs, {} conjugators, {brute_pairs} brute-force conjugate, {reported} reported conjugate",
        conjugators.len()
    );
    if let Some(first) = problems.first() {
        detail.push_str(&format!(", {first}"));
    }
    outcome(problems.is_empty(), detail)
}

fn suite_config(m: usize, n: usize, general: bool) -> SuiteConfig {
    let cfg = SuiteConfig::new(m, n, SUITE_TRIALS, SUITE_MAX_LEN, SEED);
    if general {
        cfg.with_general_conj_len(GENERAL_CONJ_LEN)
    } else {
        cfg
    }
}

/// Re-checks every certificate a suite report carries.
fn audit_report(report: &SuiteReport, log: &mut CertificateLog) {
    let cfg = &report.config;
    for t in &report.trials {
        let (ea, eb) = (embed_standard(&t.a, cfg.n).unwrap(), embed_standard(&t.b, cfg.n).unwrap());
        if let Some(c) = &t.small.certificate {
            log.record(c, &t.a, &t.b, "suite B_m");
        }
        if let Some(c) = &t.embedded.certificate {
            log.record(c, &ea, &eb, "suite B_n");
        }
        if let (Some(d), Some(len)) = (&t.general, cfg.general_conj_len) {
            if let Some(c) = &d.certificate {
                let g = general_conjugator(cfg, t.trial, len);
                let (ga, gb) = (embed_general(&t.a, cfg.n, &g).unwrap(), embed_general(&t.b, cfg.n, &g).unwrap());
                log.record(c, &ga, &gb, "suite general");
            }
        }
        if let Some(c) = &t.lifted_witness {
            log.record(c, &t.a, &t.b, "suite lift");
        }
    }
}

fn nonmerging(log: &mut CertificateLog) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (m, n) in SUITE_CONFIGS {
        let start = Instant::now();
        let report = verify_nonmerging(&suite_config(m, n, false)).expect("suite runs");
        let elapsed = start.elapsed();
        audit_report(&report, log);
        let mut lift_errors = 0;
        for t in report.trials.iter().filter(|t| !t.skipped()) {
            match lift_witness(&t.a, &t.b, n, DEFAULT_MAX_SSS) {
                Ok(Some(c)) => log.record(&c, &t.a, &t.b, "lift_witness"),
                Ok(None) => {}
                Err(HarnessError::TheoremViolation { .. }) => lift_errors += 1,
                Err(e) => panic!("lift_witness failed: {e}"),
            }
        }
        let s = &report.summary;
        let ok = s.trials >= SUITE_TRIALS
            && s.inconsistent == 0
            && s.theorem_violations == 0
            && lift_errors == 0
            && s.skip_rate() <= SUITE_SKIP_RATE
            && elapsed <= SUITE_LIMIT;
        pass &= ok;
        parts.push(format!(
            "({m},{n}): {} conj / {} not, {} inconsistent, {} violations, skip {:.1}%, {:.2}s",
            s.conjugate,
            s.not_conjugate,
            s.inconsistent,
            s.theorem_violations + lift_errors,
            100.0 * s.skip_rate(),
            elapsed.as_secs_f64()
        ));
    }
    outcome(pass, parts.join("; "))
}

fn general_embedding(log: &mut CertificateLog) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (m, n) in SUITE_CONFIGS {
        let report = verify_nonmerging(&suite_config(m, n, true)).expect("suite runs");
        audit_report(&report, log);
        let decided: Vec<_> = report.trials.iter().filter(|t| !t.skipped()).collect();
        let agreeing = decided
            .iter()
            .filter(|t| t.general.as_ref().map(|g| g.verdict) == Some(t.embedded.verdict))
            .count();
        let conjugate = decided.iter().filter(|t| t.embedded.verdict == Verdict::Conjugate).count();
        let ok = agreeing == decided.len() && report.summary.skip_rate() <= SUITE_SKIP_RATE;
        pass &= ok;
        parts.push(format!("({m},{n}): {agreeing}/{} agree, {conjugate} conjugate", decided.len()));
    }
    outcome(pass, parts.join("; "))
}

fn boundary() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for m in [2, 3] {
        let r = boundary_suite(m, m + 2, BOUNDARY_TRIALS, BOUNDARY_MAX_LEN, SEED).expect("boundary suite runs");
        pass &= r.passed() && r.preserved == r.trials && r.non_periodic == r.nontrivial;
        parts.push(format!(
            "({m},{}): {}/{} preserve, {}/{} nontrivial non-periodic",
            m + 2,
            r.preserved,
            r.trials,
            r.non_periodic,
            r.nontrivial
        ));
    }
    outcome(pass, parts.join("; "))
}

fn classification() -> Outcome {
    let w = |s: &str| s.parse::<BraidWord>().unwrap();
    let mut failures = Vec::new();

    let periodic = classify(&w("3: 1 2"), DEFAULT_MAX_SSS).unwrap();
    if periodic.tag() != "periodic" {
        failures.push(format!("s1 s2 -> {periodic}"));
    }
    let reducible = classify(&w("3: 1"), DEFAULT_MAX_SSS).unwrap();
    let witness = reducible.to_string();
    if reducible.tag() != "reducible" || !witness.contains("curve=1..2") || !reducible.verify_witness(&w("3: 1")).unwrap() {
        failures.push(format!("s1 -> {witness}"));
    }
    let anosov = classify(&w("3: 1 -2"), DEFAULT_MAX_SSS).unwrap();
    if anosov.tag() != "pseudo-anosov" {
        failures.push(format!("s1 s2^-1 -> {anosov}"));
    }

    let mut rng = SplitMix64::new(SEED ^ 0x8);
    let mut sampled = 0;
    while sampled < CLASSIFY_SAMPLES {
        let len = rng.range_inclusive(1, CLASSIFY_MAX_LEN);
        let a = random_word_with(3, len, &mut rng).unwrap();
        if normal_form(&a).is_identity() {
            continue;
        }
        sampled += 1;
        let e = embed_standard(&a, CLASSIFY_TARGET).unwrap();
        let result = classify(&e, DEFAULT_MAX_SSS).unwrap();
        if result.tag() != "reducible" || !result.verify_witness(&e).unwrap() {
            failures.push(format!("embedded {a} -> {result}"));
        }
    }
    let detail = match failures.first() {
        None => format!("3 regressions and {sampled} embedded braids classified as expected"),
        Some(first) => format!("{} failures, first {first}", failures.len()),
    };
    outcome(failures.is_empty(), detail)
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_braid")).args(args).output().expect("braid binary runs");
    assert!(out.status.success(), "braid {args:?} exited with {:?}", out.status);
    out.stdout
}

fn determinism() -> Outcome {
    let seed = SEED.to_string();
    let runs: [Vec<&str>; 4] = [
        vec!["verify-nonmerging", "--m", "3", "--n", "5", "--trials", "60", "--maxlen", "10", "--seed", &seed, "--format", "records"],
        vec![
            "verify-nonmerging", "--m", "2", "--n", "4", "--trials", "60", "--maxlen", "10", "--seed", &seed,
            "--general-conj-len", "6", "--format", "json",
        ],
        vec!["boundary-suite", "--m", "3", "--n", "5", "--trials", "40", "--seed", &seed, "--format", "records"],
        vec!["boundary-suite", "--m", "2", "--n", "4", "--trials", "40", "--seed", &seed, "--format", "json"],
    ];
    let mut identical = 0;
    let mut bytes = 0;
    for args in &runs {
        let first = run_cli(args);
        let second = run_cli(args);
        bytes += first.len();
        identical += usize::from(!first.is_empty() && first == second);
    }
    outcome(identical == runs.len(), format!("{identical}/{} reports byte-identical, {bytes} bytes", runs.len()))
}

fn main() {
    let mut log = CertificateLog::default();
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();

    results.push((1, "equality oracle agreement", timed(ORACLE_LIMIT, equality_oracle)));
    results.push((2, "Garside identities", timed(GARSIDE_LIMIT, garside_identities)));
    let brute = timed(BRUTE_LIMIT, || brute_force(&mut log));
    let suite = nonmerging(&mut log);
    let general = general_embedding(&mut log);
    results.push((4, "brute-force conjugacy cross-check", brute));
    results.push((5, "non-merging suite", suite));
    results.push((6, "general embedding suite", general));
    results.push((7, "boundary and torsion suite", timed(BOUNDARY_LIMIT, boundary)));
    results.push((8, "classification regressions", timed(CLASSIFY_LIMIT, classification)));
    results.push((9, "determinism", determinism()));

    let cert_detail = match log.failures.first() {
        None => format!("{} certificates re-verified", log.checked),
        Some(first) => format!("{} of {} failed, first {first}", log.failures.len(), log.checked),
    };
    results.push((3, "certificate soundness", outcome(log.failures.is_empty() && log.checked > 0, cert_detail)));
    results.sort_by_key(|r| r.0);

    let mut failed = 0;
    for (id, name, o) in &results {
        let status = if o.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!o.pass);
        println!("[{status}] criterion {id}: {name}: {}", o.detail);
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
