use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rat;

/// Univariate polynomial in the index variable `n` with rational coefficients,
/// stored in ascending degree. The zero polynomial has no coefficients and
/// every other polynomial has a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Build from small integer coefficients, ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::new(vec![c])
    }

    /// The polynomial `n`.
    pub fn identity() -> Poly {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    /// `c * n^k`
    pub fn monomial(c: Rat, k: usize) -> Poly {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> Rat {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn eval_at(&self, n: u64) -> Rat {
        self.eval(&Rat::from(n))
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rat::from(k))
                .collect(),
        )
    }

    /// Scale so the leading coefficient is one. The zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dlen = divisor.coeffs.len();
        assert!(dlen > 0, "polynomial division by zero");
        if self.coeffs.len() < dlen {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = divisor.leading().unwrap().recip().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dlen - 1] * &lead_inv;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &(&c * d);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dlen - 1);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p(n + k)` via repeated synthetic Taylor shifts.
    pub fn shift_by(&self, k: &Rat) -> Poly {
        if k.is_zero() || self.is_constant() {
            return self.clone();
        }
        let mut c = self.coeffs.clone();
        let len = c.len();
        for i in 0..len {
            for j in (i..len - 1).rev() {
                let t = &c[j + 1] * k;
                c[j] += &t;
            }
        }
        Poly::new(c)
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Unique polynomial of degree below `points.len()` through the given
    /// nodes (Newton divided differences). Nodes must be distinct.
    pub fn interpolate(points: &[(Rat, Rat)]) -> Poly {
        let k = points.len();
        let mut table: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..k {
            for i in (level..k).rev() {
                let num = &table[i] - &table[i - 1];
                let den = &points[i].0 - &points[i - level].0;
                table[i] = &num / &den;
            }
        }
        let mut acc = Poly::zero();
        for i in (0..k).rev() {
            let factor = Poly::new(vec![-&points[i].0, Rat::one()]);
            acc = &(&acc * &factor) + &Poly::constant(table[i].clone());
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Poly::new(coeffs)
    }
}

impl fmt::Display for Poly {
    /// Renders in the expression grammar, highest degree first, e.g.
    /// `1/2*n^2 - n + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.signum() < 0;
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "n")?;
                    } else {
                        write!(f, "n^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn division_identity() {
        let a = p(&[-15, 8, -1, 2]);
        let b = p(&[1, 0, 3]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        // (n-3)(n-5) and (n-3)(n+1)
        let a = p(&[15, -8, 1]);
        let b = p(&[-3, -2, 1]);
        assert_eq!(a.gcd(&b), p(&[-3, 1]));
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Poly::zero());
        assert_eq!(p(&[4]).gcd(&p(&[0, 2])), Poly::one());
    }

    #[test]
    fn taylor_shift_matches_evaluation() {
        let a = p(&[7, -3, 0, 2]);
        let s = a.shift_by(&Rat::from(1));
        for n in 0..20u64 {
            assert_eq!(s.eval_at(n), a.eval_at(n + 1));
        }
        let s = a.shift_by(&Rat::new(-5, 2));
        assert_eq!(s.eval(&Rat::from(3)), a.eval(&Rat::new(1, 2)));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let a = p(&[1, 0, -4, 0, 1]);
        let pts: Vec<_> = (0..5u64).map(|n| (Rat::from(n * 3 + 1), a.eval_at(n * 3 + 1))).collect();
        assert_eq!(Poly::interpolate(&pts), a);
    }

    #[test]
    fn renders_in_expression_grammar() {
        assert_eq!(p(&[0]).to_string(), "0");
        assert_eq!(p(&[1, 1]).to_string(), "n + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-n");
        assert_eq!(p(&[2, -3, 1]).to_string(), "n^2 - 3*n + 2");
        let half = Poly::new(vec![Rat::zero(), Rat::new(1, 2), Rat::new(-1, 2)]);
        assert_eq!(half.to_string(), "-1/2*n^2 + 1/2*n");
    }
}
