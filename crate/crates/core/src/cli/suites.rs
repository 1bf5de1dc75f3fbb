//! Named verification suites run by `check`. Each suite draws its random
//! samples from a generator seeded by the run seed and the suite's position,
//! so a suite's output does not depend on which other suites run.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::exactnum::Rat;
use crate::galois::{ideal_closure_check, roundtrip_filter, IdealDescriptor};
use crate::quotient::{archimedean_probe, archimedean_report, QuotientError, Scalar};
use crate::report::Report;
use crate::sample;
use crate::seqrep::RSeq;
use crate::series::{banach_bounds_check, generalized_sum, partial_sums_check, shift_invariance_impossibility};
use crate::sets::{check_filter_axioms, FilterDescriptor, SetDescriptor};

/// Parameters shared by all suites.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub seed: u64,
    pub kmax: u64,
    pub filter: FilterDescriptor,
}

impl Default for SuiteOptions {
    fn default() -> SuiteOptions {
        SuiteOptions {
            seed: sample::DEFAULT_SEED,
            kmax: 1000,
            filter: FilterDescriptor::Frechet,
        }
    }
}

pub const SUITES: [&str; 8] = [
    "filter-axioms",
    "galois-roundtrip",
    "archimedean",
    "shift-impossibility",
    "banach-bounds",
    "partial-sums",
    "ring-laws",
    "zero-divisors",
];

fn rng_for(opts: &SuiteOptions, name: &str) -> ChaCha8Rng {
    let index = SUITES.iter().position(|s| *s == name).unwrap_or(SUITES.len()) as u64;
    sample::rng_from_seed(opts.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index))
}

/// Run one suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Option<Report> {
    let mut rng = rng_for(opts, name);
    Some(match name {
        "filter-axioms" => filter_axioms(&mut rng, 20, 200),
        "galois-roundtrip" => galois_roundtrip(&mut rng, 10, 100),
        "archimedean" => archimedean(opts),
        "shift-impossibility" => shift_invariance_impossibility(),
        "banach-bounds" => {
            let samples: Vec<RSeq> = (0..100).map(|_| sample::convergent_rseq(&mut rng)).collect();
            banach_bounds_check(&samples)
        }
        "partial-sums" => partial_sums_suite(&mut rng, 1000),
        "ring-laws" => ring_laws(&mut rng, 1000),
        "zero-divisors" => zero_divisors(),
        _ => return None,
    })
}

/// Fréchet plus `principal` random principal filters, `sets` descriptors each.
pub fn filter_axioms(rng: &mut ChaCha8Rng, principal: usize, sets: usize) -> Report {
    let mut report = Report::new("filter-axioms");
    let mut filters = vec![FilterDescriptor::Frechet];
    filters.extend((0..principal).map(|_| sample::principal_filter(rng)));
    for f in &filters {
        let samples: Vec<SetDescriptor> = (0..sets).map(|_| sample::set_descriptor(rng)).collect();
        report.absorb(check_filter_axioms(f, &samples));
    }
    report
}

/// Roundtrips for Fréchet plus `principal` random principal filters, and the
/// ideal laws of each induced ideal.
pub fn galois_roundtrip(rng: &mut ChaCha8Rng, principal: usize, sets: usize) -> Report {
    let mut report = Report::new("galois-roundtrip");
    let mut filters = vec![FilterDescriptor::Frechet];
    filters.extend((0..principal).map(|_| sample::principal_filter(rng)));
    for f in &filters {
        let samples: Vec<SetDescriptor> = (0..sets).map(|_| sample::set_descriptor(rng)).collect();
        report.absorb(roundtrip_filter(f, &samples));
        let mut seqs: Vec<RSeq> = (0..12).map(|_| sample::ideal_member(rng, f)).collect();
        seqs.extend((0..12).map(|_| sample::rseq(rng, 2)));
        seqs.push(RSeq::identity());
        report.absorb(ideal_closure_check(&IdealDescriptor::of_filter(f.clone()), &seqs));
    }
    report
}

/// `ω = Σ1` against `k·1` for `k ≤ kmax`, with `embed(7)` as the negative
/// control whose dominance must first fail at `k = 8`.
pub fn archimedean(opts: &SuiteOptions) -> Report {
    let mut report = Report::new("archimedean");
    let omega = generalized_sum(&RSeq::one(), &opts.filter).expect("constant terms are polynomial");
    report.absorb(archimedean_report(&omega, opts.kmax));
    let control = archimedean_probe(&Scalar::embed(Rat::from(7), opts.filter.clone()), opts.kmax.max(8));
    report.record(
        "negative-control",
        format!(
            "embed(7) dominance-fails-at={:?} strict-fails-at={:?}",
            control.first_dominance_failure, control.first_strict_failure
        ),
        (control.first_dominance_failure != Some(8)).then(|| format!("{:?}", control.first_dominance_failure)),
    );
    report
}

/// Closed-form partial sums for every degree `0..=6` and modulus `1..=6`,
/// checked against direct summation to `upto`.
pub fn partial_sums_suite(rng: &mut ChaCha8Rng, upto: u64) -> Report {
    let mut samples = Vec::new();
    for d in 0..=6 {
        for m in 1..=6 {
            samples.push(sample::poly_rseq(rng, d, m));
        }
    }
    let mut report = Report::new("partial-sums");
    report.absorb(partial_sums_check(&samples, upto));
    report
}

struct LawTally {
    label: &'static str,
    checked: usize,
    witness: Option<String>,
}

impl LawTally {
    fn new(label: &'static str) -> LawTally {
        LawTally { label, checked: 0, witness: None }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }
}

fn random_filter(rng: &mut ChaCha8Rng) -> FilterDescriptor {
    if rng.random_bool(0.5) {
        FilterDescriptor::Frechet
    } else {
        sample::principal_filter(rng)
    }
}

/// Commutative-ring laws modulo quotient equality, independence of the
/// representative, and the embedding of the rationals, over `cases` random
/// triples under random filters.
pub fn ring_laws(rng: &mut ChaCha8Rng, cases: usize) -> Report {
    let names = [
        "add-commutative",
        "add-associative",
        "mul-commutative",
        "mul-associative",
        "distributive",
        "additive-identity",
        "additive-inverse",
        "multiplicative-identity",
        "well-defined-add",
        "well-defined-mul",
        "embed-add",
        "embed-mul",
        "embed-one",
        "embed-injective",
    ];
    let mut t: Vec<LawTally> = names.iter().map(|n| LawTally::new(n)).collect();
    for _ in 0..cases {
        let f = random_filter(rng);
        let mk = |x: RSeq| Scalar::new(x, f.clone());
        let (xa, xb, xc) = (sample::rseq(rng, 2), sample::rseq(rng, 2), sample::rseq(rng, 2));
        let (a, b, c) = (mk(xa.clone()), mk(xb.clone()), mk(xc.clone()));
        let eq = |x: &Scalar, y: &Scalar| x.scalar_eq(y).expect("same filter");
        let w = || format!("filter={f} a={xa} b={xb} c={xc}");
        let zero = Scalar::zero(f.clone());
        let one = Scalar::one(f.clone());

        t[0].check(eq(&a.add(&b).unwrap(), &b.add(&a).unwrap()), w);
        t[1].check(eq(&a.add(&b).unwrap().add(&c).unwrap(), &a.add(&b.add(&c).unwrap()).unwrap()), w);
        t[2].check(eq(&a.mul(&b).unwrap(), &b.mul(&a).unwrap()), w);
        t[3].check(eq(&a.mul(&b).unwrap().mul(&c).unwrap(), &a.mul(&b.mul(&c).unwrap()).unwrap()), w);
        t[4].check(
            eq(&a.mul(&b.add(&c).unwrap()).unwrap(), &a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()),
            w,
        );
        t[5].check(eq(&a.add(&zero).unwrap(), &a), w);
        t[6].check(a.add(&a.neg()).unwrap().is_zero(), w);
        t[7].check(eq(&a.mul(&one).unwrap(), &a), w);

        let (i1, i2) = (sample::ideal_member(rng, &f), sample::ideal_member(rng, &f));
        let (a2, b2) = (mk(xa.add(&i1)), mk(xb.add(&i2)));
        t[8].check(eq(&a2.add(&b2).unwrap(), &a.add(&b).unwrap()), || format!("{} i1={i1} i2={i2}", w()));
        t[9].check(eq(&a2.mul(&b2).unwrap(), &a.mul(&b).unwrap()), || format!("{} i1={i1} i2={i2}", w()));

        let (p, q) = (sample::small_rat(rng), sample::small_rat(rng));
        let e = |r: &Rat| Scalar::embed(r.clone(), f.clone());
        let wp = || format!("filter={f} p={p} q={q}");
        t[10].check(eq(&e(&p).add(&e(&q)).unwrap(), &e(&(&p + &q))), wp);
        t[11].check(eq(&e(&p).mul(&e(&q)).unwrap(), &e(&(&p * &q))), wp);
        t[12].check(eq(&e(&Rat::one()), &one) && !eq(&one, &zero), wp);
        t[13].check(eq(&e(&p), &e(&q)) == (p == q) && e(&p).is_zero() == p.is_zero(), wp);
    }
    let mut report = Report::new("ring-laws");
    for law in t {
        report.record(law.label, format!("cases={}", law.checked), law.witness);
    }
    report
}

/// `ind(evens)·ind(odds) = 0` with both factors nonzero under Fréchet, and
/// the witness returned by inversion annihilates the divisor.
pub fn zero_divisors() -> Report {
    let mut report = Report::new("zero-divisors");
    let fr = FilterDescriptor::Frechet;
    let e = Scalar::new(RSeq::indicator(&SetDescriptor::evens()), fr.clone());
    let o = Scalar::new(RSeq::indicator(&SetDescriptor::odds()), fr.clone());
    let product = e.mul(&o).expect("same filter");
    report.record(
        "product-zero",
        format!("ind(evens)*ind(odds) = {}", product.canonical_rep()),
        (!product.is_zero()).then(|| product.canonical_rep().to_string()),
    );
    report.record(
        "factors-nonzero",
        "ind(evens) != 0, ind(odds) != 0",
        (e.is_zero() || o.is_zero()).then(|| "a factor is zero".to_string()),
    );
    match e.try_invert() {
        Err(QuotientError::ZeroDivisor { witness }) => {
            let ok = !witness.is_zero() && e.mul(&witness).expect("same filter").is_zero();
            report.record(
                "invert-witness",
                format!("witness={}", witness.canonical_rep()),
                (!ok).then(|| witness.canonical_rep().to_string()),
            );
        }
        other => report.fail("invert-witness", format!("{other:?}")),
    }
    report
}

/// All suites in order, concatenated.
pub fn run_all(opts: &SuiteOptions) -> Vec<Report> {
    SUITES.iter().map(|s| run_suite(s, opts).expect("known suite")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        let mut rng = sample::rng_from_seed(5);
        assert!(filter_axioms(&mut rng, 3, 30).passed());
        assert!(galois_roundtrip(&mut rng, 2, 20).passed());
        assert!(ring_laws(&mut rng, 40).passed());
        assert!(zero_divisors().passed());
        let opts = SuiteOptions { kmax: 20, ..SuiteOptions::default() };
        let r = archimedean(&opts);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteOptions::default()).is_none());
    }
}
