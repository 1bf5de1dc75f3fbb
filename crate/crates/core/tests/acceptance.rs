//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Library results are compared against oracles written
//! here from pointwise evaluation only.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use gsc::cli::suites;
use gsc::exactnum::Rat;
use gsc::oracle::{enumerate_filters, enumerate_ideals, verify_galois, verify_maximal_prime, FiniteConfig};
use gsc::quotient::{archimedean_probe, archimedean_report, QuotientError, Scalar};
use gsc::sample;
use gsc::seqrep::{BSeqVerdict, RSeq};
use gsc::series::{
    banach_bounds_check, classify_series, generalized_sum, partial_sums, shift_invariance_impossibility, SeriesVerdict,
};
use gsc::sets::{check_filter_axioms, FilterDescriptor, SetDescriptor};
use gsc::galois::roundtrip_filter;

const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Index past which a set is periodic.
fn set_horizon(s: &SetDescriptor) -> u64 {
    s.max_finite_entry().map_or(0, |k| k + 1)
}

/// Membership of `set` in `filter`, decided by scanning one period past the
/// finite part of both sets.
fn filter_contains_oracle(filter: &FilterDescriptor, set: &SetDescriptor) -> bool {
    match filter {
        FilterDescriptor::Frechet => {
            let h = set_horizon(set);
            (h..h + set.modulus()).all(|n| set.contains(n))
        }
        FilterDescriptor::Principal(g) => {
            let m = num_integer::lcm(g.modulus(), set.modulus());
            let h = set_horizon(g).max(set_horizon(set));
            (0..h + m).all(|n| !g.contains(n) || set.contains(n))
        }
    }
}

/// Upper bound on numerator degree plus denominator degree over all branches.
fn degree_budget(x: &RSeq) -> u64 {
    x.branches()
        .iter()
        .map(|f| f.num().degree().unwrap_or(0) + f.den().degree().unwrap_or(0))
        .max()
        .unwrap_or(0) as u64
}

/// First index past every exception and every natural pole of `x`.
fn seq_horizon(x: &RSeq) -> u64 {
    let poles = x.branches().iter().flat_map(|f| f.natural_poles()).max().map_or(0, |p| p + 1);
    x.max_exception().map_or(0, |k| k + 1).max(poles)
}

/// Quotient equality from pointwise values: past the horizon, each residue
/// class mod `M` of `x - y` is a fixed rational function of bounded degree,
/// so `D + 1` zeros on a class force it to vanish identically.
fn scalar_eq_oracle(x: &RSeq, y: &RSeq, filter: &FilterDescriptor) -> bool {
    let d = degree_budget(x) + degree_budget(y) + 2;
    let mut m = num_integer::lcm(x.modulus(), y.modulus());
    let mut t = seq_horizon(x).max(seq_horizon(y));
    if let FilterDescriptor::Principal(s) = filter {
        m = num_integer::lcm(m, s.modulus());
        t = t.max(set_horizon(s));
    }
    let end = t + m * (d + 1);
    let zero_at = |n: u64| x.eval(n) == y.eval(n);
    match filter {
        FilterDescriptor::Frechet => (t..end).all(zero_at),
        FilterDescriptor::Principal(s) => (0..end).filter(|&n| s.contains(n)).all(zero_at),
    }
}

fn criterion_1() -> Outcome {
    let mut rng = sample::rng_from_seed(SEED);
    let mut filters = vec![FilterDescriptor::Frechet];
    filters.extend((0..20).map(|_| sample::principal_filter(&mut rng)));
    let mut failures = 0;
    let mut checked = 0;
    for f in &filters {
        let samples: Vec<SetDescriptor> = (0..200).map(|_| sample::set_descriptor(&mut rng)).collect();
        let report = check_filter_axioms(f, &samples);
        failures += report.failures().count();
        for s in &samples {
            checked += 1;
            ensure(f.contains(s) == filter_contains_oracle(f, s), || format!("membership {s} in {f}"))?;
        }
        ensure(!f.contains(&SetDescriptor::empty()), || format!("empty set in {f}"))?;
    }
    ensure(failures == 0, || format!("condition failures={failures}"))?;
    Ok(format!("filters=21 sets-per-filter=200 membership-cross-checks={checked} condition-failures=0"))
}

fn criterion_2() -> Outcome {
    let mut rng = sample::rng_from_seed(SEED + 2);
    let mut filters = vec![FilterDescriptor::Frechet];
    filters.extend((0..10).map(|_| sample::principal_filter(&mut rng)));
    for f in &filters {
        let samples: Vec<SetDescriptor> = (0..100).map(|_| sample::set_descriptor(&mut rng)).collect();
        let report = roundtrip_filter(f, &samples);
        ensure(report.passed(), || report.to_string())?;
        for j in &samples {
            // membership in the ideal decided pointwise: the realizing sequence vanishes exactly on j
            let x = gsc::galois::realize_zero_set(j);
            let window = set_horizon(j) + 2 * j.modulus();
            ensure((0..window).all(|n| x.eval(n).is_zero() == j.contains(n)), || format!("realize {j}"))?;
            let zero_set = x.zero_set();
            ensure(filter_contains_oracle(f, &zero_set) == f.contains(j), || format!("{j} under {f}"))?;
        }
    }
    Ok("filters=11 sets-per-filter=100 roundtrip-mismatches=0".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for lambda in [2, 3] {
        let cfg = FiniteConfig::new(lambda, 2).unwrap();
        let expected = (1usize << lambda) - 1;
        let ideals = enumerate_ideals(&cfg).unwrap();
        let filters = enumerate_filters(&cfg).unwrap();
        ensure(ideals.len() == expected, || format!("lambda={lambda} ideals={}", ideals.len()))?;
        ensure(filters.len() == expected, || format!("lambda={lambda} filters={}", filters.len()))?;
        // independent count: subsets of P(Λ) closed under ∩ and ⊇ without ∅
        let k = 1u32 << lambda;
        let brute = (1u64..1 << k)
            .filter(|&fam| {
                let has = |s: u32| fam >> s & 1 == 1;
                !has(0)
                    && (0..k).all(|a| !has(a) || (0..k).all(|b| (!has(b) || has(a & b)) && (b & a != a || has(b))))
            })
            .count();
        ensure(brute == expected, || format!("brute-force filters={brute}"))?;
        let report = verify_galois(&cfg).unwrap();
        ensure(report.passed(), || report.to_string())?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs_f64() < 5.0, || format!("runtime {elapsed:?}"))?;
    Ok(format!("F2 lambda=2: 3+3, lambda=3: 7+7, roundtrips and monotonicity exact, runtime={:.3}s", elapsed.as_secs_f64()))
}

fn criterion_4() -> Outcome {
    let mut ideals = 0;
    for (lambda, p) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        let cfg = FiniteConfig::new(lambda, p).unwrap();
        let report = verify_maximal_prime(&cfg).unwrap();
        ensure(report.passed(), || report.to_string())?;
        ideals += enumerate_ideals(&cfg).unwrap().len();
    }
    Ok(format!("configs=F2/F3 x lambda=2,3 ideals={ideals} equivalence-failures=0"))
}

fn criterion_5() -> Outcome {
    let mut rng = sample::rng_from_seed(SEED + 5);
    let report = suites::ring_laws(&mut rng, 1000);
    ensure(report.passed(), || report.to_string())?;

    // the same laws decided by the pointwise oracle on fresh cases
    let mut rng = sample::rng_from_seed(SEED + 50);
    let mut cases = 0;
    for i in 0..1000 {
        let f = if i % 2 == 0 { FilterDescriptor::Frechet } else { sample::principal_filter(&mut rng) };
        let (a, b, c) = (sample::rseq(&mut rng, 2), sample::rseq(&mut rng, 2), sample::rseq(&mut rng, 2));
        let (i1, i2) = (sample::ideal_member(&mut rng, &f), sample::ideal_member(&mut rng, &f));
        let eq = |x: &RSeq, y: &RSeq| scalar_eq_oracle(x, y, &f);
        let laws = [
            eq(&a.add(&b), &b.add(&a)),
            eq(&a.mul(&b), &b.mul(&a)),
            eq(&a.add(&b).add(&c), &a.add(&b.add(&c))),
            eq(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))),
            eq(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))),
            eq(&a.add(&i1).add(&b.add(&i2)), &a.add(&b)),
            eq(&a.add(&i1).mul(&b.add(&i2)), &a.mul(&b)),
            eq(&i1, &RSeq::zero()),
        ];
        ensure(laws.iter().all(|&l| l), || format!("case {i}: filter={f} a={a} b={b} c={c} laws={laws:?}"))?;
        // the library's equality agrees with the oracle on unrelated pairs too
        let lib = Scalar::new(a.clone(), f.clone()).scalar_eq(&Scalar::new(b.clone(), f.clone())).unwrap();
        ensure(lib == eq(&a, &b), || format!("scalar_eq disagrees on {a} vs {b} under {f}"))?;
        let (p, q) = (sample::small_rat(&mut rng), sample::small_rat(&mut rng));
        let ep = Scalar::embed(p.clone(), f.clone());
        let eqq = Scalar::embed(q.clone(), f.clone());
        ensure(ep.scalar_eq(&eqq).unwrap() == (p == q), || format!("embedding not injective at {p}, {q}"))?;
        cases += 1;
    }
    let laws = report.entries.len();
    Ok(format!("library-suite cases=1000 laws={laws}; oracle cases={cases}; failures=0"))
}

fn criterion_6() -> Outcome {
    let fr = FilterDescriptor::Frechet;
    let omega = generalized_sum(&RSeq::one(), &fr).map_err(|e| e.to_string())?;
    ensure(omega.rep().eval(0) == Rat::one() && omega.rep().eval(999) == Rat::from(1000), || "omega".into())?;
    let report = archimedean_report(&omega, 1000);
    ensure(report.passed(), || report.to_string())?;
    for k in 1..=1000u64 {
        // {n : k <= n + 1} = {n >= k - 1}
        let le = Scalar::embed(Rat::from(k), fr.clone()).le_set(&omega).unwrap();
        ensure((0..k + 20).all(|n| le.contains(n) == (n + 1 >= k)), || format!("le_set at k={k}: {le}"))?;
    }
    let control = archimedean_probe(&Scalar::embed(Rat::from(7), fr), 1000);
    ensure(control.first_dominance_failure == Some(8), || format!("control {control:?}"))?;
    Ok(format!(
        "omega=generalized_sum(1) dominance k=1..1000 all hold; control embed(7) dominance fails first at k=8 (strict at k={})",
        control.first_strict_failure.unwrap()
    ))
}

fn criterion_7() -> Outcome {
    let fr = FilterDescriptor::Frechet;
    let e = RSeq::indicator(&SetDescriptor::evens());
    let o = RSeq::indicator(&SetDescriptor::odds());
    ensure((0..100).all(|n| (e.eval(n) * o.eval(n)).is_zero()), || "pointwise product".into())?;
    ensure(scalar_eq_oracle(&e.mul(&o), &RSeq::zero(), &fr), || "product not zero".into())?;
    ensure(!scalar_eq_oracle(&e, &RSeq::zero(), &fr) && !scalar_eq_oracle(&o, &RSeq::zero(), &fr), || "factor zero".into())?;
    let se = Scalar::new(e.clone(), fr.clone());
    ensure(se.mul(&Scalar::new(o, fr.clone())).unwrap().is_zero(), || "library product".into())?;
    match se.try_invert() {
        Err(QuotientError::ZeroDivisor { witness }) => {
            ensure(!scalar_eq_oracle(witness.rep(), &RSeq::zero(), &fr), || "witness is zero".into())?;
            ensure(scalar_eq_oracle(&e.mul(witness.rep()), &RSeq::zero(), &fr), || "witness does not annihilate".into())?;
            Ok(format!("ind(evens)*ind(odds)=0, factors nonzero, witness={}", witness.canonical_rep()))
        }
        other => Err(format!("try_invert returned {other:?}")),
    }
}

fn criterion_8() -> Outcome {
    let mut rng = sample::rng_from_seed(SEED + 8);
    let samples: Vec<RSeq> = (0..120).map(|_| sample::convergent_rseq(&mut rng)).collect();
    let report = banach_bounds_check(&samples);
    ensure(report.passed(), || report.to_string())?;
    for x in &samples {
        let (inf, sup, l) = (x.inf_val().unwrap(), x.sup_val().unwrap(), x.limit().unwrap());
        ensure((0..2000).all(|n| inf <= x.eval(n) && x.eval(n) <= sup), || format!("bounds of {x}"))?;
        ensure(inf <= l && l <= sup, || format!("limit of {x}"))?;
    }

    let mut series = 0;
    for d in 0..=6 {
        for m in 1..=6 {
            for _ in 0..2 {
                let s = sample::poly_rseq(&mut rng, d, m);
                let x = partial_sums(&s).map_err(|e| format!("{s}: {e}"))?;
                let mut acc = Rat::zero();
                for n in 0..=1000 {
                    acc += &s.eval(n);
                    ensure(x.eval(n) == acc, || format!("partial sums of {s} at n={n}"))?;
                }
                let verdict = classify_series(&s).unwrap();
                let expected = match x.classify_bounded() {
                    BSeqVerdict::Convergent(c) => SeriesVerdict::ConvergentSum(c),
                    BSeqVerdict::BoundedDivergent => SeriesVerdict::BoundedDivergent,
                    BSeqVerdict::Unbounded => SeriesVerdict::UnboundedDivergent,
                };
                ensure(verdict == expected, || format!("trichotomy of {s}"))?;
                // unbounded terms force unbounded partial sums
                let terms_unbounded = s.classify_bounded() == BSeqVerdict::Unbounded;
                ensure(!terms_unbounded || verdict == SeriesVerdict::UnboundedDivergent, || format!("{s}"))?;
                series += 1;
            }
        }
    }

    let chain = shift_invariance_impossibility();
    ensure(chain.passed() && chain.entries.len() == 5, || chain.to_string())?;
    let nu = RSeq::identity();
    ensure((0..1000).all(|n| nu.shift().sub(&nu).eval(n) == Rat::one()), || "shift difference".into())?;
    Ok(format!("banach samples={} ; partial sums series={series} to n=1000 ; impossibility steps=4", samples.len()))
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_gsc");
    let run = || {
        Command::new(bin)
            .args(["check", "all"])
            .env("GSC_SEED", "424242")
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success(), || String::from_utf8_lossy(&a.stdout).lines().filter(|l| l.starts_with("FAIL")).collect::<Vec<_>>().join("; "))?;
    ensure(a.stdout == b.stdout, || "reports differ between runs".into())?;
    let lines = a.stdout.iter().filter(|&&c| c == b'\n').count();
    let suites: BTreeSet<&str> = std::str::from_utf8(&a.stdout)
        .unwrap()
        .lines()
        .filter_map(|l| l.split_whitespace().nth(1)?.split(['/', '[']).next())
        .collect();
    Ok(format!("two runs byte-identical, lines={lines}, suites={}", suites.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("filter-axioms", criterion_1),
        ("galois-roundtrip-symbolic", criterion_2),
        ("galois-bijection-exhaustive", criterion_3),
        ("maximal-prime-equivalences", criterion_4),
        ("quotient-ring-laws", criterion_5),
        ("non-archimedean-witness", criterion_6),
        ("zero-divisors", criterion_7),
        ("series-suite", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
