//! Rationals, polynomials and rational functions with their behavior at
//! infinity.

use gsc::exactnum::{eventual_sign, integer_roots_nonneg, limit_at_infinity, Poly, Rat, RatFun};

fn main() {
    let a = Rat::new(3, 4);
    let b: Rat = "-5/6".parse().unwrap();
    println!("{a} + {b} = {}", &a + &b);
    println!("{a} * {b} = {}", &a * &b);

    // (n - 3)(n - 5)
    let p = &Poly::from_ints(&[-3, 1]) * &Poly::from_ints(&[-5, 1]);
    println!("natural roots of {p}: {:?}", integer_roots_nonneg(&p).unwrap());
    println!("natural roots of n^2 + 1: {:?}", integer_roots_nonneg(&Poly::from_ints(&[1, 0, 1])).unwrap());

    let f = RatFun::new(Poly::from_ints(&[1, 1]), Poly::from_ints(&[0, 2])).unwrap();
    println!("lim {f} = {}", limit_at_infinity(&f));
    let g = RatFun::new(Poly::from_ints(&[0, 0, 1]), Poly::from_ints(&[1, 1])).unwrap();
    println!("lim {g} = {}", limit_at_infinity(&g));

    let h = RatFun::new(Poly::from_ints(&[-100, 1]), Poly::from_ints(&[1, 1])).unwrap();
    let (sign, n0) = eventual_sign(&h);
    println!("sign of {h} is {sign} for every n >= {n0}");
}
