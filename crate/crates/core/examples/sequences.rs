//! Representable sequences: pointwise algebra, shift, zero sets, limits and
//! exact suprema.

use std::collections::BTreeMap;

use gsc::exactnum::{Poly, Rat, RatFun};
use gsc::seqrep::RSeq;
use gsc::sets::SetDescriptor;

fn main() {
    let nu = RSeq::identity();
    println!("shift(n) - n = {}", nu.shift().sub(&nu));

    let e = RSeq::indicator(&SetDescriptor::evens());
    let o = RSeq::indicator(&SetDescriptor::odds());
    println!("ind(evens) * ind(odds) = {}", e.mul(&o));

    let p = RSeq::from_poly(&Poly::from_ints(&[-3, 1]) * &Poly::from_ints(&[-5, 1]));
    println!("Z({p}) = {}", p.zero_set());
    println!("Z(ind(evens)) = {}", e.zero_set());

    // 1/(n - 2) has a pole at 2, which must be given a value
    let f = RatFun::new(Poly::one(), Poly::from_ints(&[-2, 1])).unwrap();
    println!("undeclared pole: {:?}", RSeq::from_ratfun(f.clone(), BTreeMap::new()));
    let x = RSeq::from_ratfun(f, BTreeMap::from([(2, Rat::from(9))])).unwrap();
    println!("x = {x}, x(2) = {}, x(5) = {}", x.eval(2), x.eval(5));
    println!("verdict {:?}, sup {}, inf {}", x.classify_bounded(), x.sup_val().unwrap(), x.inf_val().unwrap());

    let r = RSeq::from_ratfun(RatFun::new(Poly::from_ints(&[3, 2]), Poly::from_ints(&[1, 1])).unwrap(), BTreeMap::new()).unwrap();
    println!("limit of {r} = {}", r.limit().unwrap());
    println!("limit of ind(evens): {:?}", e.limit());
}
