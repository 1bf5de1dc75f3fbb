use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{roots, ExtendedRat, Poly, Rat};

/// Rational function `num / den` in lowest terms with a monic denominator.
///
/// Monic (rather than merely positive-leading) denominators make the
/// representation unique, so derived equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Returns `None` when `den` is the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> Option<RatFun> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFun::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc = den.leading().unwrap().recip().unwrap();
        Some(RatFun {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_poly(p: Poly) -> RatFun {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rat) -> RatFun {
        RatFun::from_poly(Poly::constant(c))
    }

    pub fn zero() -> RatFun {
        RatFun::from_poly(Poly::zero())
    }

    pub fn one() -> RatFun {
        RatFun::constant(Rat::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The constant value, if this is a constant function.
    pub fn as_constant(&self) -> Option<Rat> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.constant_term())
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(&self.num.eval(x) / &d)
        }
    }

    pub fn eval_at(&self, n: u64) -> Option<Rat> {
        self.eval(&Rat::from(n))
    }

    pub fn recip(&self) -> Option<RatFun> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `f(n + k)`.
    pub fn shift_by(&self, k: u64) -> RatFun {
        let k = Rat::from(k);
        RatFun::new(self.num.shift_by(&k), self.den.shift_by(&k)).unwrap()
    }

    /// Nonnegative integer poles, ascending.
    pub fn natural_poles(&self) -> Vec<u64> {
        roots::integer_roots_nonneg(&self.den).unwrap_or_default()
    }

    pub fn limit_at_infinity(&self) -> ExtendedRat {
        limit_at_infinity(self)
    }
}

/// Limit of `f(n)` as `n` grows without bound.
pub fn limit_at_infinity(f: &RatFun) -> ExtendedRat {
    let Some(dn) = f.num.degree() else {
        return ExtendedRat::Finite(Rat::zero());
    };
    let dd = f.den.degree().unwrap();
    let ratio = f.num.leading().unwrap() / f.den.leading().unwrap();
    use std::cmp::Ordering::*;
    match dn.cmp(&dd) {
        Less => ExtendedRat::Finite(Rat::zero()),
        Equal => ExtendedRat::Finite(ratio),
        Greater if ratio.signum() > 0 => ExtendedRat::PlusInfinity,
        Greater => ExtendedRat::MinusInfinity,
    }
}

/// Sign of `f(n)` for all large `n`, together with a threshold `N0` such that
/// every integer `n >= N0` has exactly that sign.
///
/// `N0` is the first natural number past every real root of the numerator and
/// denominator. The Cauchy bound seeds a Sturm bisection, so the threshold is
/// sound and never larger than the Cauchy bound.
pub fn eventual_sign(f: &RatFun) -> (i32, u64) {
    if f.is_zero() {
        return (0, 0);
    }
    let sign = f.num.leading().unwrap().signum() * f.den.leading().unwrap().signum();
    let n0 = roots::root_free_threshold(&f.num).max(roots::root_free_threshold(&f.den));
    (sign, n0)
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly| {
            let s = p.to_string();
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || s.contains('*') || s.contains('/') || s.starts_with('-') {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn canonical_form() {
        // (2n^2 - 2) / (-4n - 4) = (1 - n)/2
        let f = rf(&[-2, 0, 2], &[-4, -4]);
        assert_eq!(f, RatFun::from_poly(Poly::new(vec![Rat::new(1, 2), Rat::new(-1, 2)])));
        assert!(RatFun::new(Poly::one(), Poly::zero()).is_none());
        assert_eq!(rf(&[0], &[3, 1]), RatFun::zero());
    }

    #[test]
    fn limits() {
        assert_eq!(limit_at_infinity(&rf(&[1, 1], &[0, 2])), ExtendedRat::Finite(Rat::new(1, 2)));
        assert_eq!(limit_at_infinity(&rf(&[1], &[1, 1])), ExtendedRat::Finite(Rat::zero()));
        assert_eq!(limit_at_infinity(&rf(&[0, 0, 1], &[1, 1])), ExtendedRat::PlusInfinity);
        assert_eq!(limit_at_infinity(&rf(&[0, 0, -1], &[1, 1])), ExtendedRat::MinusInfinity);
        assert_eq!(limit_at_infinity(&RatFun::zero()), ExtendedRat::Finite(Rat::zero()));
    }

    /// Oracle for thresholds: evaluate at N0 and the ten indices after it.
    fn check_sign_window(f: &RatFun, sign: i32, n0: u64) {
        for n in n0..=n0 + 10 {
            assert_eq!(f.eval_at(n).unwrap().signum(), sign, "n = {n}");
        }
    }

    #[test]
    fn eventual_signs() {
        let f = rf(&[-100, 1], &[1, 1]);
        let (s, n0) = eventual_sign(&f);
        assert_eq!(s, 1);
        assert!(n0 >= 101);
        check_sign_window(&f, s, n0);

        assert_eq!(eventual_sign(&RatFun::zero()), (0, 0));

        let f = rf(&[3, -1], &[1, 1]);
        let (s, n0) = eventual_sign(&f);
        assert_eq!(s, -1);
        assert!(n0 >= 4);
        check_sign_window(&f, s, n0);
    }

    #[test]
    fn shift_and_poles() {
        let f = rf(&[1], &[-6, 5, 1].map(|c| c)); // 1/(n^2+5n-6) = 1/((n+6)(n-1))
        assert_eq!(f.natural_poles(), vec![1]);
        let g = f.shift_by(1);
        for n in 1..10 {
            assert_eq!(g.eval_at(n), f.eval_at(n + 1));
        }
        assert_eq!(g.natural_poles(), vec![0]);
    }

    #[test]
    fn display() {
        assert_eq!(rf(&[1], &[1, 1]).to_string(), "1/(n + 1)");
        assert_eq!(rf(&[3, 2], &[1, 1]).to_string(), "(2*n + 3)/(n + 1)");
        assert_eq!(rf(&[0, 1], &[0, 0, 1]).to_string(), "1/n");
        assert_eq!(rf(&[-1], &[1, 0, 1]).to_string(), "(-1)/(n^2 + 1)");
    }
}
