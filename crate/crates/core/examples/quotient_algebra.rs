//! Equality, order, inverses, zero divisors, classification and standard
//! parts in the quotient algebra of a filter.

use std::collections::BTreeMap;

use gsc::exactnum::{Poly, Rat, RatFun};
use gsc::quotient::Scalar;
use gsc::seqrep::RSeq;
use gsc::sets::{FilterDescriptor, SetDescriptor};

fn main() {
    let fr = FilterDescriptor::Frechet;
    let recip = RSeq::from_ratfun(RatFun::new(Poly::one(), Poly::from_ints(&[1, 1])).unwrap(), BTreeMap::new()).unwrap();
    let eps = Scalar::new(recip.clone(), fr.clone());
    let moved = Scalar::new(recip.with_overrides([(0, Rat::from(7))]), fr.clone());
    println!("finite change is invisible under frechet: {}", eps.scalar_eq(&moved).unwrap());

    let omega = Scalar::omega(fr.clone());
    println!("omega = {omega}");
    println!("eps = {eps}");
    println!("omega * eps = {}", omega.mul(&eps).unwrap());
    println!("1/omega = {}", omega.try_invert().unwrap());

    let e = Scalar::new(RSeq::indicator(&SetDescriptor::evens()), fr.clone());
    match e.try_invert() {
        Ok(_) => println!("unexpected inverse"),
        Err(err) => println!("invert ind(evens): {err}"),
    }

    let five = Scalar::embed(Rat::from(5), fr.clone());
    let nu = Scalar::new(RSeq::identity(), fr.clone());
    println!("5 <= n: {}, n <= 5: {}", five.leq(&nu).unwrap(), nu.leq(&five).unwrap());

    let mixed = Scalar::new(RSeq::indicator(&SetDescriptor::evens()).mul(&RSeq::identity()), fr.clone());
    println!("class of ind(evens)*n: {}", mixed.classify());
    let pe = FilterDescriptor::principal(SetDescriptor::evens()).unwrap();
    println!("same under principal:evens: {}", Scalar::new(mixed.rep().clone(), pe).classify());

    let r = RatFun::new(Poly::from_ints(&[3, 2]), Poly::from_ints(&[1, 1])).unwrap();
    let near_two = Scalar::new(RSeq::from_ratfun(r, BTreeMap::new()).unwrap(), fr.clone());
    println!("st((2n + 3)/(n + 1)) = {}", near_two.standard_part().unwrap());
    println!("st(omega): {:?}", omega.standard_part());
}
