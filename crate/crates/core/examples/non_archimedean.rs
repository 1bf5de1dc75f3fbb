//! The value of 1 + 1 + 1 + ... exceeds every multiple of 1.

use gsc::exactnum::Rat;
use gsc::quotient::{archimedean_counterexample, archimedean_probe, Scalar};
use gsc::seqrep::RSeq;
use gsc::series::generalized_sum;
use gsc::sets::FilterDescriptor;

fn main() {
    let fr = FilterDescriptor::Frechet;
    let omega = generalized_sum(&RSeq::one(), &fr).unwrap();
    println!("sum(1) = {omega}");
    print!("{}", archimedean_counterexample(1000, &fr));

    let seven = archimedean_probe(&Scalar::embed(Rat::from(7), fr), 1000);
    println!(
        "control embed(7): k <= 7 first fails at k={:?}, k < 7 first fails at k={:?}",
        seven.first_dominance_failure, seven.first_strict_failure
    );
}
