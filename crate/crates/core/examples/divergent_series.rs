//! Partial sums in closed form, the convergence trichotomy, generalized sums
//! and why no shift-invariant limit reaches n.

use std::collections::BTreeMap;

use gsc::exactnum::{Rat, RatFun};
use gsc::seqrep::RSeq;
use gsc::series::{classify_series, generalized_sum, partial_sums, shift_invariance_impossibility};
use gsc::sets::FilterDescriptor;

fn main() {
    let alternating = RSeq::new(2, vec![RatFun::one(), RatFun::constant(Rat::from(-1))], BTreeMap::new()).unwrap();
    let cubes = RSeq::identity().pow(3);
    for s in [RSeq::zero(), RSeq::one(), RSeq::identity(), cubes, alternating] {
        let x = partial_sums(&s).unwrap();
        let value = generalized_sum(&s, &FilterDescriptor::Frechet).unwrap();
        println!("terms {s}: partial sums {x}, {}, value {value}", classify_series(&s).unwrap());
    }
    print!("{}", shift_invariance_impossibility());
}
