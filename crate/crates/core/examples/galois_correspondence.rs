//! Ideals of the sequence algebra from filters and back.

use gsc::galois::{ideal_closure_check, in_ideal, realize_zero_set, roundtrip_filter, IdealDescriptor};
use gsc::sample;
use gsc::seqrep::RSeq;
use gsc::sets::{FilterDescriptor, SetDescriptor};

fn main() {
    let frechet = IdealDescriptor::of_filter(FilterDescriptor::Frechet);
    let finite = RSeq::indicator(&SetDescriptor::finite([5]));
    let evens = RSeq::indicator(&SetDescriptor::evens());
    println!("ind({{5}}) in I_frechet: {}", in_ideal(&finite, &frechet));
    println!("ind(evens) in I_frechet: {}", in_ideal(&evens, &frechet));
    println!("zero set realized by {}: {}", realize_zero_set(&SetDescriptor::odds()), SetDescriptor::odds());

    let pe = FilterDescriptor::principal(SetDescriptor::evens()).unwrap();
    let sets = [SetDescriptor::evens(), SetDescriptor::odds(), SetDescriptor::empty(), SetDescriptor::all()];
    print!("{}", roundtrip_filter(&pe, &sets));

    let mut rng = sample::rng_from_seed(1);
    let seqs: Vec<RSeq> = (0..30).map(|_| sample::ideal_member(&mut rng, &pe)).chain([RSeq::identity()]).collect();
    print!("{}", ideal_closure_check(&IdealDescriptor::of_filter(pe), &seqs));
}
