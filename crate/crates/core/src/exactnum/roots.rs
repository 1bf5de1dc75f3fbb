//! Real-root bookkeeping for rational polynomials: Cauchy bounds, Sturm
//! chains, a tight integer threshold past the largest real root, and exact
//! extraction of nonnegative integer roots.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{ExactError, Poly, Rat};

/// Cauchy bound `1 + max |a_i / a_d|`, rounded up: every complex root has
/// modulus strictly below it.
pub fn cauchy_bound(p: &Poly) -> BigInt {
    let Some(lc) = p.leading() else {
        return BigInt::zero();
    };
    let d = p.degree().unwrap();
    let mut max = Rat::zero();
    for c in &p.coeffs()[..d] {
        let r = (c / lc).abs();
        if r > max {
            max = r;
        }
    }
    (max + Rat::one()).ceil()
}

/// Sturm sequence of the squarefree part of `p`.
pub struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> SturmChain {
        assert!(!p.is_zero());
        let g = p.gcd(&p.derivative());
        let (sqfree, _) = p.div_rem(&g);
        let mut chain = vec![sqfree.clone(), sqfree.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        SturmChain { chain }
    }

    fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut changes = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    fn variations_at(&self, x: &Rat) -> usize {
        Self::sign_changes(self.chain.iter().map(|q| q.eval(x).signum()))
    }

    fn variations_at_pos_infinity(&self) -> usize {
        Self::sign_changes(self.chain.iter().map(|q| q.leading().map_or(0, Rat::signum)))
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_in(&self, a: &Rat, b: &Rat) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots in `(a, +inf)`.
    pub fn count_above(&self, a: &Rat) -> usize {
        self.variations_at(a) - self.variations_at_pos_infinity()
    }
}

/// Smallest natural `N0` such that `p` has no real root in `[N0, +inf)`.
/// Requires `p` nonzero.
pub fn root_free_threshold(p: &Poly) -> u64 {
    if p.degree() == Some(0) {
        return 0;
    }
    let sturm = SturmChain::new(p);
    if sturm.count_above(&Rat::zero()) == 0 {
        return if p.eval(&Rat::zero()).is_zero() { 1 } else { 0 };
    }
    // smallest k in [0, hi] with no root in (k, inf)
    let mut lo = BigInt::zero();
    let mut hi = cauchy_bound(p);
    while lo < hi {
        let mid: BigInt = (&lo + &hi) / 2;
        if sturm.count_above(&Rat::from(mid.clone())) == 0 {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let k = lo;
    let n0 = if p.eval(&Rat::from(k.clone())).is_zero() { k + 1 } else { k };
    n0.to_u64().expect("root threshold exceeds u64 range")
}

/// Every `n` in the naturals with `p(n) = 0`, ascending.
pub fn integer_roots_nonneg(p: &Poly) -> Result<Vec<u64>, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let sturm = SturmChain::new(p);
    let mut roots = Vec::new();
    let mut stack = vec![(BigInt::from(-1), cauchy_bound(p))];
    while let Some((lo, hi)) = stack.pop() {
        if sturm.count_in(&Rat::from(lo.clone()), &Rat::from(hi.clone())) == 0 {
            continue;
        }
        if &hi - &lo == BigInt::from(1) {
            if p.eval(&Rat::from(hi.clone())).is_zero() {
                roots.push(hi.to_u64().expect("integer root exceeds u64 range"));
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi) / 2;
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    roots.sort_unstable();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    /// Brute-force oracle: scan a window well past the Cauchy bound.
    fn scan_roots(q: &Poly, upto: u64) -> Vec<u64> {
        (0..=upto).filter(|&n| q.eval_at(n).is_zero()).collect()
    }

    #[test]
    fn product_of_linear_factors() {
        let q = p(&[15, -8, 1]); // (n-3)(n-5)
        assert_eq!(integer_roots_nonneg(&q).unwrap(), vec![3, 5]);
        assert_eq!(scan_roots(&q, 10), vec![3, 5]);
    }

    #[test]
    fn no_natural_roots() {
        assert!(integer_roots_nonneg(&p(&[1, 0, 1])).unwrap().is_empty());
        assert!(integer_roots_nonneg(&p(&[-1, 2])).unwrap().is_empty());
        assert!(integer_roots_nonneg(&p(&[7])).unwrap().is_empty());
        assert_eq!(integer_roots_nonneg(&Poly::zero()), Err(ExactError::ZeroPolynomial));
    }

    #[test]
    fn repeated_and_zero_roots() {
        // n^2 (n-4)^3 (n+2)
        let q = &(&p(&[0, 0, 1]) * &p(&[-4, 1]).pow(3)) * &p(&[2, 1]);
        assert_eq!(integer_roots_nonneg(&q).unwrap(), vec![0, 4]);
    }

    #[test]
    fn large_root() {
        let q = &p(&[-1_000_000, 1]) * &p(&[-3, 0, 1]);
        assert_eq!(integer_roots_nonneg(&q).unwrap(), vec![1_000_000]);
        assert_eq!(root_free_threshold(&q), 1_000_001);
    }

    #[test]
    fn thresholds() {
        assert_eq!(root_free_threshold(&p(&[-100, 1])), 101);
        assert_eq!(root_free_threshold(&p(&[1, 1])), 0);
        assert_eq!(root_free_threshold(&p(&[0, 1])), 1);
        assert_eq!(root_free_threshold(&p(&[5])), 0);
        // roots at 1/2 and 7/3: first integer past both is 3
        let q = &p(&[-1, 2]) * &p(&[-7, 3]);
        assert_eq!(root_free_threshold(&q), 3);
    }

    #[test]
    fn random_small_polys_match_scan() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let deg = rng.random_range(1..5);
            let mut q = Poly::one();
            for _ in 0..deg {
                let a: i64 = rng.random_range(-12..12);
                let b: i64 = rng.random_range(1..3);
                q = &q * &p(&[-a, b]);
            }
            let bound = cauchy_bound(&q).to_u64().unwrap();
            assert_eq!(integer_roots_nonneg(&q).unwrap(), scan_roots(&q, bound + 5));
            let t = root_free_threshold(&q);
            for n in t..t + 30 {
                assert!(!q.eval_at(n).is_zero());
                assert_eq!(q.eval_at(n).signum(), q.leading().unwrap().signum());
            }
        }
    }
}
