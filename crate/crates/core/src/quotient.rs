//! The quotient algebra `A = 𝒜 / I_F` of representable sequences modulo the
//! ideal of a filter: decidable equality, the embedding of the rationals,
//! the filter-lifted order, inverses and zero divisors, classification into
//! infinitesimal/appreciable/infinite scalars, and the standard part.

use std::fmt;

use crate::exactnum::{eventual_sign, ExtendedRat, Poly, Rat};
use crate::galois::{in_ideal, realize_zero_set, IdealDescriptor};
use crate::report::Report;
use crate::seqrep::RSeq;
use crate::sets::{FilterDescriptor, SetDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuotientError {
    #[error("FilterMismatch")]
    FilterMismatch,
    #[error("ZeroScalar")]
    ZeroScalar,
    #[error("ZeroDivisor witness={}", .witness.canonical_rep())]
    ZeroDivisor { witness: Box<Scalar> },
    #[error("NotStandardizable")]
    NotStandardizable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Zero,
    Infinitesimal,
    Appreciable,
    Infinite,
    Mixed,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = match self {
            Classification::Zero => "Zero",
            Classification::Infinitesimal => "Infinitesimal",
            Classification::Appreciable => "Appreciable",
            Classification::Infinite => "Infinite",
            Classification::Mixed => "Mixed",
        };
        f.write_str(word)
    }
}

/// The class `rep + I_F` of a sequence in the quotient algebra of `filter`.
///
/// The derived `PartialEq` is structural on the representative; equality in
/// the quotient is [`Scalar::scalar_eq`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    rep: RSeq,
    filter: FilterDescriptor,
}

impl Scalar {
    pub fn new(rep: RSeq, filter: FilterDescriptor) -> Scalar {
        Scalar { rep, filter }
    }

    /// Class of the constant sequence `c`.
    pub fn embed(c: Rat, filter: FilterDescriptor) -> Scalar {
        Scalar::new(RSeq::constant(c), filter)
    }

    pub fn zero(filter: FilterDescriptor) -> Scalar {
        Scalar::embed(Rat::zero(), filter)
    }

    pub fn one(filter: FilterDescriptor) -> Scalar {
        Scalar::embed(Rat::one(), filter)
    }

    /// The class of `n ↦ n + 1`, i.e. the value of `1 + 1 + 1 + ...`.
    pub fn omega(filter: FilterDescriptor) -> Scalar {
        Scalar::new(RSeq::from_poly(Poly::from_ints(&[1, 1])), filter)
    }

    pub fn rep(&self) -> &RSeq {
        &self.rep
    }

    pub fn filter(&self) -> &FilterDescriptor {
        &self.filter
    }

    fn ideal(&self) -> IdealDescriptor {
        IdealDescriptor::of_filter(self.filter.clone())
    }

    fn same_filter(&self, other: &Scalar) -> Result<(), QuotientError> {
        if self.filter == other.filter {
            Ok(())
        } else {
            Err(QuotientError::FilterMismatch)
        }
    }

    fn lift(&self, rep: RSeq) -> Scalar {
        Scalar::new(rep, self.filter.clone())
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, QuotientError> {
        self.same_filter(other)?;
        Ok(self.lift(self.rep.add(&other.rep)))
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar, QuotientError> {
        self.same_filter(other)?;
        Ok(self.lift(self.rep.sub(&other.rep)))
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, QuotientError> {
        self.same_filter(other)?;
        Ok(self.lift(self.rep.mul(&other.rep)))
    }

    pub fn neg(&self) -> Scalar {
        self.lift(self.rep.neg())
    }

    pub fn scale(&self, c: &Rat) -> Scalar {
        self.lift(self.rep.scalar_mul(c))
    }

    pub fn shift(&self) -> Scalar {
        self.lift(self.rep.shift())
    }

    pub fn is_zero(&self) -> bool {
        in_ideal(&self.rep, &self.ideal())
    }

    /// Equality in the quotient: the difference lies in the ideal.
    pub fn scalar_eq(&self, other: &Scalar) -> Result<bool, QuotientError> {
        Ok(self.sub(other)?.is_zero())
    }

    /// Inverse in the quotient, or the reason none exists.
    ///
    /// A class is invertible iff the complement of its zero set belongs to the
    /// filter; the inverse is represented by the pointwise pseudo-inverse.
    /// Otherwise a nonzero class is a zero divisor, annihilated by the
    /// indicator of its zero set.
    pub fn try_invert(&self) -> Result<Scalar, QuotientError> {
        if self.is_zero() {
            return Err(QuotientError::ZeroScalar);
        }
        let zeros = self.rep.zero_set();
        if self.filter.contains(&zeros.complement()) {
            return Ok(self.lift(self.rep.pseudo_inverse()));
        }
        let witness = self.lift(realize_zero_set(&zeros.complement()));
        debug_assert!(!witness.is_zero());
        debug_assert!(self.rep.mul(&witness.rep).is_zero());
        Err(QuotientError::ZeroDivisor {
            witness: Box::new(witness),
        })
    }

    /// `{n : a(n) <= b(n)}`, computed exactly from the eventual sign of each
    /// branch of the difference plus a finite scan below the sign thresholds.
    pub fn le_set(&self, other: &Scalar) -> Result<SetDescriptor, QuotientError> {
        self.same_filter(other)?;
        Ok(nonpositive_set(&self.rep.sub(&other.rep)))
    }

    pub fn leq(&self, other: &Scalar) -> Result<bool, QuotientError> {
        Ok(self.filter.contains(&self.le_set(other)?))
    }

    /// `self < other`: `leq` and not equal.
    pub fn lt(&self, other: &Scalar) -> Result<bool, QuotientError> {
        Ok(self.leq(other)? && !self.scalar_eq(other)?)
    }

    /// Asymptotic data that decides the class: branch limits on residue
    /// classes the filter sees infinitely often, or plain values on the
    /// generator when a principal filter is generated by a finite set.
    fn relevant_limits(&self) -> Vec<ExtendedRat> {
        match &self.filter {
            FilterDescriptor::Frechet => self.rep.branch_limits(),
            FilterDescriptor::Principal(s) => match s.finite_points() {
                Some(points) => points
                    .into_iter()
                    .map(|p| ExtendedRat::Finite(self.rep.eval(p)))
                    .collect(),
                None => {
                    let m = num_integer::lcm(self.rep.modulus(), s.modulus());
                    (0..m)
                        .filter(|&r| s.residues()[(r % s.modulus()) as usize])
                        .map(|r| self.rep.branch_for(r).limit_at_infinity())
                        .collect()
                }
            },
        }
    }

    pub fn classify(&self) -> Classification {
        if self.is_zero() {
            return Classification::Zero;
        }
        let limits = self.relevant_limits();
        let is_zero_limit = |l: &ExtendedRat| l.finite().is_some_and(Rat::is_zero);
        if limits.iter().all(is_zero_limit) {
            Classification::Infinitesimal
        } else if limits.iter().all(|l| l.finite().is_some_and(|c| !c.is_zero())) {
            Classification::Appreciable
        } else if limits.iter().all(ExtendedRat::is_infinite) {
            Classification::Infinite
        } else {
            Classification::Mixed
        }
    }

    /// The rational infinitely close to this scalar, when one exists.
    pub fn standard_part(&self) -> Result<Rat, QuotientError> {
        let limits = self.relevant_limits();
        let first = limits.first().and_then(ExtendedRat::finite).cloned();
        match first {
            Some(c) if limits.iter().all(|l| l.finite() == Some(&c)) => Ok(c),
            // a principal filter on a finite set with all values zero is the zero class
            None if limits.is_empty() => Ok(Rat::zero()),
            _ => Err(QuotientError::NotStandardizable),
        }
    }

    /// Canonical representative of the class. Under the Fréchet filter: the
    /// branches, with value 0 at poles and no other overrides. Under a
    /// principal filter: the representative times the generator's indicator.
    pub fn canonical_rep(&self) -> RSeq {
        match &self.filter {
            FilterDescriptor::Frechet => {
                let poles = self
                    .rep
                    .exceptions()
                    .keys()
                    .filter(|&&k| self.rep.branch_for(k).eval_at(k).is_none())
                    .map(|&k| (k, Rat::zero()));
                let branches_only = RSeq::new(
                    self.rep.modulus(),
                    self.rep.branches().to_vec(),
                    poles.collect(),
                )
                .expect("poles declared");
                branches_only
            }
            FilterDescriptor::Principal(s) => self.rep.mul(&RSeq::indicator(s)),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.canonical_rep(), self.classify())
    }
}

/// `{n : x(n) <= 0}`.
pub fn nonpositive_set(x: &RSeq) -> SetDescriptor {
    let mut horizon = x.max_exception().map_or(0, |k| k + 1);
    let residues = x
        .branches()
        .iter()
        .map(|f| {
            let (sign, n0) = eventual_sign(f);
            horizon = horizon.max(n0);
            sign <= 0
        })
        .collect();
    let overrides: Vec<(u64, bool)> = (0..horizon).map(|n| (n, x.eval(n).signum() <= 0)).collect();
    SetDescriptor::from_parts(x.modulus(), residues, overrides).expect("positive modulus")
}

/// Outcome of testing whether `k · 1` stays below a candidate for every `k`
/// up to a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArchimedeanOutcome {
    pub kmax: u64,
    /// First `k` with `embed(k) <= w` false.
    pub first_dominance_failure: Option<u64>,
    /// First `k` with `embed(k) < w` false.
    pub first_strict_failure: Option<u64>,
}

impl ArchimedeanOutcome {
    pub fn passed(&self) -> bool {
        self.first_dominance_failure.is_none() && self.first_strict_failure.is_none()
    }
}

/// For every `k` in `1..=kmax`, test `embed(k) <= w` and `embed(k) != w`.
pub fn archimedean_probe(witness: &Scalar, kmax: u64) -> ArchimedeanOutcome {
    let mut out = ArchimedeanOutcome {
        kmax,
        first_dominance_failure: None,
        first_strict_failure: None,
    };
    for k in 1..=kmax {
        let e = Scalar::embed(Rat::from(k), witness.filter.clone());
        let le = e.leq(witness).expect("same filter");
        let eq = e.scalar_eq(witness).expect("same filter");
        if !le && out.first_dominance_failure.is_none() {
            out.first_dominance_failure = Some(k);
        }
        if (!le || eq) && out.first_strict_failure.is_none() {
            out.first_strict_failure = Some(k);
        }
        if out.first_dominance_failure.is_some() && out.first_strict_failure.is_some() {
            break;
        }
    }
    out
}

/// Report form of [`archimedean_probe`].
pub fn archimedean_report(witness: &Scalar, kmax: u64) -> Report {
    let out = archimedean_probe(witness, kmax);
    let mut report = Report::new(format!("archimedean[{}]", witness.filter));
    report.record(
        "dominance",
        format!("k=1..{kmax} witness={}", witness.canonical_rep()),
        out.first_dominance_failure.map(|k| format!("k={k}")),
    );
    report.record(
        "strict",
        format!("k=1..{kmax}"),
        out.first_strict_failure.map(|k| format!("k={k}")),
    );
    report
}

/// Certify that no multiple `k · 1` with `k <= kmax` dominates `ω`, the class
/// of `n ↦ n + 1`, so the Archimedean condition fails in the quotient.
pub fn archimedean_counterexample(kmax: u64, filter: &FilterDescriptor) -> Report {
    archimedean_report(&Scalar::omega(filter.clone()), kmax)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use std::collections::BTreeMap;

    use crate::exactnum::RatFun;

    fn fr() -> FilterDescriptor {
        FilterDescriptor::Frechet
    }

    fn cls(x: RSeq) -> Scalar {
        Scalar::new(x, fr())
    }

    fn recip_n1() -> RSeq {
        RSeq::from_ratfun(RatFun::new(Poly::one(), Poly::from_ints(&[1, 1])).unwrap(), BTreeMap::new()).unwrap()
    }

    fn evens() -> RSeq {
        RSeq::indicator(&SetDescriptor::evens())
    }

    #[test]
    fn equality_examples() {
        let x = recip_n1().with_overrides([(0, Rat::from(7))]);
        let y = recip_n1();
        assert!(cls(x.clone()).scalar_eq(&cls(y.clone())).unwrap());
        let pe = FilterDescriptor::principal(SetDescriptor::evens()).unwrap();
        assert!(!Scalar::new(x, pe.clone()).scalar_eq(&Scalar::new(y, pe.clone())).unwrap());
        assert!(!cls(evens()).scalar_eq(&Scalar::zero(fr())).unwrap());
        assert_eq!(cls(evens()).scalar_eq(&Scalar::zero(pe)), Err(QuotientError::FilterMismatch));
    }

    #[test]
    fn embedding_examples() {
        assert!(Scalar::embed(Rat::zero(), fr()).is_zero());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let mut filters = vec![fr()];
        filters.extend((0..10).map(|_| sample::principal_filter(&mut rng)));
        for f in &filters {
            assert!(!Scalar::one(f.clone()).scalar_eq(&Scalar::zero(f.clone())).unwrap(), "{f}");
        }
    }

    #[test]
    fn inversion_examples() {
        let a = cls(RSeq::from_poly(Poly::from_ints(&[1, 1])));
        let inv = a.try_invert().unwrap();
        assert!(inv.scalar_eq(&cls(recip_n1())).unwrap());
        match cls(evens()).try_invert() {
            Err(QuotientError::ZeroDivisor { witness }) => {
                assert!(witness.scalar_eq(&cls(RSeq::indicator(&SetDescriptor::odds()))).unwrap());
                assert!(cls(evens()).mul(&witness).unwrap().is_zero());
            }
            other => panic!("expected a zero divisor, got {other:?}"),
        }
        assert_eq!(Scalar::zero(fr()).try_invert().unwrap_err(), QuotientError::ZeroScalar);
        let err = cls(evens()).try_invert().unwrap_err();
        assert_eq!(err.to_string(), "ZeroDivisor witness=ind(1 mod 2)");
    }

    #[test]
    fn inversion_under_principal_filter() {
        // ind(evens) is invertible modulo the ideal of Principal(evens)
        let pe = FilterDescriptor::principal(SetDescriptor::evens()).unwrap();
        let a = Scalar::new(evens(), pe.clone());
        let inv = a.try_invert().unwrap();
        assert!(a.mul(&inv).unwrap().scalar_eq(&Scalar::one(pe.clone())).unwrap());
        // n vanishes at 0, so it is a zero divisor under Principal({0, 2})
        let p02 = FilterDescriptor::principal(SetDescriptor::finite([0, 2])).unwrap();
        let nu = Scalar::new(RSeq::identity(), p02);
        assert!(matches!(nu.try_invert(), Err(QuotientError::ZeroDivisor { .. })));
    }

    #[test]
    fn order_examples() {
        let nu = cls(RSeq::identity());
        assert!(Scalar::embed(Rat::from(5), fr()).leq(&nu).unwrap());
        let e = cls(evens());
        let z = Scalar::zero(fr());
        assert!(!e.leq(&z).unwrap());
        // ind(evens) >= 0 pointwise, so 0 <= ind(evens) holds; ind(evens) <= 0 does not
        assert!(z.leq(&e).unwrap());
        assert_eq!(e.le_set(&z).unwrap(), SetDescriptor::odds());
        assert!(e.leq(&e).unwrap());
    }

    #[test]
    fn incomparable_pair() {
        // ind(evens) - ind(odds) = (-1)^n: neither it nor its negative is eventually nonnegative
        let alt = cls(evens().sub(&RSeq::indicator(&SetDescriptor::odds())));
        let z = Scalar::zero(fr());
        assert!(!alt.leq(&z).unwrap());
        assert!(!z.leq(&alt).unwrap());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(Scalar::omega(fr()).classify(), Classification::Infinite);
        assert_eq!(cls(recip_n1()).classify(), Classification::Infinitesimal);
        assert_eq!(cls(evens().mul(&RSeq::identity())).classify(), Classification::Mixed);
        assert_eq!(Scalar::embed(Rat::new(2, 3), fr()).classify(), Classification::Appreciable);
        assert_eq!(cls(sample::finite_support(&mut rand_chacha::ChaCha8Rng::seed_from_u64(2))).classify(), Classification::Zero);
        // under Principal(evens) the odd branch is invisible
        let pe = FilterDescriptor::principal(SetDescriptor::evens()).unwrap();
        assert_eq!(Scalar::new(evens().mul(&RSeq::identity()), pe).classify(), Classification::Infinite);
    }

    #[test]
    fn standard_part_examples() {
        let x = RSeq::from_ratfun(RatFun::new(Poly::from_ints(&[3, 2]), Poly::from_ints(&[1, 1])).unwrap(), BTreeMap::new()).unwrap();
        assert_eq!(cls(x).standard_part(), Ok(Rat::from(2)));
        assert_eq!(Scalar::embed(Rat::new(-5, 7), fr()).standard_part(), Ok(Rat::new(-5, 7)));
        assert_eq!(Scalar::omega(fr()).standard_part(), Err(QuotientError::NotStandardizable));
        assert_eq!(cls(evens()).standard_part(), Err(QuotientError::NotStandardizable));
    }

    #[test]
    fn archimedean_examples() {
        let r = archimedean_counterexample(1000, &fr());
        assert!(r.passed(), "{r}");
        let out = archimedean_probe(&Scalar::omega(fr()), 1);
        assert!(out.passed());
        let seven = archimedean_probe(&Scalar::embed(Rat::from(7), fr()), 1000);
        assert_eq!(seven.first_dominance_failure, Some(8));
        assert_eq!(seven.first_strict_failure, Some(7));
    }

    #[test]
    fn canonical_rep_forgets_finite_changes() {
        let x = recip_n1().with_overrides([(0, Rat::from(7)), (3, Rat::from(2))]);
        assert_eq!(cls(x).canonical_rep(), recip_n1());
        let pe = FilterDescriptor::principal(SetDescriptor::evens()).unwrap();
        let y = Scalar::new(RSeq::identity(), pe);
        assert_eq!(y.canonical_rep(), RSeq::identity().mul(&evens()));
    }

    fn arb_filter() -> impl Strategy<Value = FilterDescriptor> {
        any::<u64>().prop_map(|seed| {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            if seed % 3 == 0 { sample::principal_filter(&mut rng) } else { FilterDescriptor::Frechet }
        })
    }

    fn arb_seq() -> impl Strategy<Value = RSeq> {
        any::<u64>().prop_map(|seed| sample::rseq(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), 2))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn le_set_is_exact(x in arb_seq(), y in arb_seq()) {
            let s = nonpositive_set(&x.sub(&y));
            for n in 0..400 {
                prop_assert_eq!(s.contains(n), x.eval(n) <= y.eval(n));
            }
        }

        #[test]
        fn order_axioms(f in arb_filter(), x in arb_seq(), y in arb_seq(), z in arb_seq()) {
            let (a, b, c) = (Scalar::new(x, f.clone()), Scalar::new(y, f.clone()), Scalar::new(z, f.clone()));
            prop_assert!(a.leq(&a).unwrap());
            if a.leq(&b).unwrap() && b.leq(&a).unwrap() {
                prop_assert!(a.scalar_eq(&b).unwrap());
            }
            if a.leq(&b).unwrap() && b.leq(&c).unwrap() {
                prop_assert!(a.leq(&c).unwrap());
            }
            if a.leq(&b).unwrap() {
                prop_assert!(a.add(&c).unwrap().leq(&b.add(&c).unwrap()).unwrap());
                if Scalar::zero(f.clone()).leq(&c).unwrap() {
                    prop_assert!(a.mul(&c).unwrap().leq(&b.mul(&c).unwrap()).unwrap());
                }
            }
        }

        #[test]
        fn every_nonzero_class_is_a_unit_or_zero_divisor(f in arb_filter(), x in arb_seq()) {
            let a = Scalar::new(x, f.clone());
            match a.try_invert() {
                Ok(inv) => prop_assert!(a.mul(&inv).unwrap().scalar_eq(&Scalar::one(f)).unwrap()),
                Err(QuotientError::ZeroScalar) => prop_assert!(a.is_zero()),
                Err(QuotientError::ZeroDivisor { witness }) => {
                    prop_assert!(!witness.is_zero());
                    prop_assert!(a.mul(&witness).unwrap().is_zero());
                }
                Err(e) => prop_assert!(false, "unexpected {}", e),
            }
        }
    }
}
