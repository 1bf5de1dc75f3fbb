//! Seeded random generators for sets, filters and sequences. Used by the
//! verification suites and the property tests; every generator is a pure
//! function of the RNG state, so a fixed seed reproduces a run exactly.

use std::collections::BTreeMap;

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::exactnum::{Poly, Rat, RatFun};
use crate::seqrep::RSeq;
use crate::sets::{FilterDescriptor, SetDescriptor};

/// Default seed when `GSC_SEED` is not set.
pub const DEFAULT_SEED: u64 = 0x6753_4321;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed from the `GSC_SEED` environment variable, falling back to
/// [`DEFAULT_SEED`] when unset or unparsable.
pub fn seed_from_env() -> u64 {
    std::env::var("GSC_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

const MODULI: [u64; 6] = [1, 1, 2, 3, 4, 6];

pub fn small_rat<R: Rng>(rng: &mut R) -> Rat {
    let den = *[1i64, 1, 1, 2, 3].choose(rng).unwrap();
    Rat::new(rng.random_range(-9i64..=9), den)
}

pub fn nonzero_rat<R: Rng>(rng: &mut R) -> Rat {
    loop {
        let r = small_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn set_descriptor<R: Rng>(rng: &mut R) -> SetDescriptor {
    let m = *MODULI.choose(rng).unwrap();
    let density = rng.random_range(0.0..1.0);
    let residues = (0..m).map(|_| rng.random_bool(density)).collect();
    let k = rng.random_range(0..4);
    let overrides: Vec<(u64, bool)> = (0..k).map(|_| (rng.random_range(0..24), rng.random_bool(0.5))).collect();
    SetDescriptor::from_parts(m, residues, overrides).unwrap()
}

pub fn nonempty_set<R: Rng>(rng: &mut R) -> SetDescriptor {
    loop {
        let s = set_descriptor(rng);
        if !s.is_empty() {
            return s;
        }
    }
}

pub fn principal_filter<R: Rng>(rng: &mut R) -> FilterDescriptor {
    FilterDescriptor::principal(nonempty_set(rng)).unwrap()
}

fn small_poly<R: Rng>(rng: &mut R, max_deg: usize) -> Poly {
    let deg = rng.random_range(0..=max_deg);
    Poly::new((0..=deg).map(|_| small_rat(rng)).collect())
}

/// Denominators with a positive leading coefficient; roots may land on
/// naturals, in which case the caller must declare them.
fn small_den<R: Rng>(rng: &mut R) -> Poly {
    match rng.random_range(0..4) {
        0 | 1 => Poly::one(),
        2 => Poly::from_ints(&[rng.random_range(-3..5), 1]),
        _ => Poly::from_ints(&[rng.random_range(1..6), 0, 1]),
    }
}

pub fn ratfun<R: Rng>(rng: &mut R, max_deg: usize) -> RatFun {
    if rng.random_bool(0.12) {
        return RatFun::zero();
    }
    RatFun::new(small_poly(rng, max_deg), small_den(rng)).unwrap()
}

fn declare_poles<R: Rng>(rng: &mut R, m: u64, branches: &[RatFun], exceptions: &mut BTreeMap<u64, Rat>) {
    for (r, f) in branches.iter().enumerate() {
        for p in f.natural_poles() {
            if p % m == r as u64 {
                exceptions.insert(p, small_rat(rng));
            }
        }
    }
}

fn with_branches<R: Rng>(rng: &mut R, m: u64, branches: Vec<RatFun>) -> RSeq {
    let mut exceptions = BTreeMap::new();
    for _ in 0..rng.random_range(0..3) {
        exceptions.insert(rng.random_range(0..20), small_rat(rng));
    }
    declare_poles(rng, m, &branches, &mut exceptions);
    RSeq::new(m, branches, exceptions).expect("poles declared")
}

/// Random sequence with branch numerators of degree at most `max_deg`.
pub fn rseq<R: Rng>(rng: &mut R, max_deg: usize) -> RSeq {
    let m = *MODULI.choose(rng).unwrap();
    let branches = (0..m).map(|_| ratfun(rng, max_deg)).collect();
    with_branches(rng, m, branches)
}

/// Random convergent sequence: every branch is `c + p/q` with `deg p < deg q`.
pub fn convergent_rseq<R: Rng>(rng: &mut R) -> RSeq {
    let m = *MODULI.choose(rng).unwrap();
    let c = small_rat(rng);
    let branches = (0..m)
        .map(|_| {
            let den = Poly::from_ints(&[rng.random_range(1..6), rng.random_range(-2..3), 1]);
            let num = small_poly(rng, 1);
            &RatFun::constant(c.clone()) + &RatFun::new(num, den).unwrap()
        })
        .collect();
    with_branches(rng, m, branches)
}

/// Random sequence with polynomial branches of exact modulus `m` and degree
/// at most `max_deg`.
pub fn poly_rseq<R: Rng>(rng: &mut R, max_deg: usize, m: u64) -> RSeq {
    let branches = (0..m).map(|_| RatFun::from_poly(small_poly(rng, max_deg))).collect();
    with_branches(rng, m, branches)
}

/// A sequence supported on finitely many indices.
pub fn finite_support<R: Rng>(rng: &mut R) -> RSeq {
    let k = rng.random_range(0..4);
    let values: BTreeMap<u64, Rat> = (0..k).map(|_| (rng.random_range(0..30), nonzero_rat(rng))).collect();
    RSeq::zero().with_overrides(values)
}

/// A random member of the ideal of `filter`: a random sequence multiplied by
/// the indicator of the complement of a filter member.
pub fn ideal_member<R: Rng>(rng: &mut R, filter: &FilterDescriptor) -> RSeq {
    match filter {
        FilterDescriptor::Frechet => finite_support(rng),
        FilterDescriptor::Principal(s) => {
            let member = s.union(&set_descriptor(rng));
            rseq(rng, 2).mul(&RSeq::indicator(&member.complement()))
        }
    }
}
