//! Exact rationals, polynomials and rational functions over them, plus the
//! asymptotic questions the sequence layer needs answered exactly: limits at
//! infinity, eventual signs and nonnegative integer roots.

mod poly;
mod rat;
mod ratfun;
pub mod roots;

use std::fmt;

pub use poly::Poly;
pub use rat::{ParseRatError, Rat};
pub use ratfun::{eventual_sign, limit_at_infinity, RatFun};
pub use roots::integer_roots_nonneg;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("ZeroPolynomial")]
    ZeroPolynomial,
}

/// A rational or one of the two signed infinities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtendedRat {
    Finite(Rat),
    PlusInfinity,
    MinusInfinity,
}

impl ExtendedRat {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtendedRat::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        !matches!(self, ExtendedRat::Finite(_))
    }
}

impl fmt::Display for ExtendedRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRat::Finite(r) => write!(f, "{r}"),
            ExtendedRat::PlusInfinity => write!(f, "+inf"),
            ExtendedRat::MinusInfinity => write!(f, "-inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-50i64..50, 1i64..20).prop_map(|(a, b)| Rat::new(a, b))
    }

    fn small_ratfun() -> impl Strategy<Value = RatFun> {
        (
            prop::collection::vec(-9i64..9, 0..4),
            prop::collection::vec(-9i64..9, 0..3),
            1i64..5,
        )
            .prop_map(|(num, mut den, lead)| {
                den.push(lead);
                RatFun::new(Poly::from_ints(&num), Poly::from_ints(&den)).unwrap()
            })
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a + &(-&a)).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.recip().unwrap()).is_one());
            }
        }

        #[test]
        fn eventual_sign_is_sound(f in small_ratfun(), offsets in prop::collection::vec(0u64..500, 8)) {
            let (sign, n0) = eventual_sign(&f);
            for k in offsets {
                let v = f.eval_at(n0 + k).expect("no pole past the threshold");
                prop_assert_eq!(v.signum(), sign);
            }
        }

        #[test]
        fn finite_limits_add(f in small_ratfun(), g in small_ratfun()) {
            if let (ExtendedRat::Finite(a), ExtendedRat::Finite(b)) = (limit_at_infinity(&f), limit_at_infinity(&g)) {
                prop_assert_eq!(limit_at_infinity(&(&f + &g)), ExtendedRat::Finite(&a + &b));
            }
        }

        #[test]
        fn ratfun_ops_are_pointwise(f in small_ratfun(), g in small_ratfun(), n in 0u64..200) {
            if let (Some(a), Some(b)) = (f.eval_at(n), g.eval_at(n)) {
                if let Some(s) = (&f + &g).eval_at(n) { prop_assert_eq!(s, &a + &b); }
                if let Some(p) = (&f * &g).eval_at(n) { prop_assert_eq!(p, &a * &b); }
            }
        }
    }
}
