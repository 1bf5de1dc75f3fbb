//! Eventually periodic sets of naturals and the two kinds of filters on them.

use gsc::sample;
use gsc::sets::{check_filter_axioms, FilterDescriptor, SetDescriptor};

fn main() {
    let evens = SetDescriptor::evens();
    let one = SetDescriptor::finite([1]);
    let s = evens.union(&one).intersect(&SetDescriptor::odds());
    println!("(evens | {{1}}) & odds = {s}");
    println!("complement of evens = {}", evens.complement());
    println!("N minus {{3}} is cofinite: {}", SetDescriptor::cofinite([3]).is_cofinite());

    let frechet = FilterDescriptor::Frechet;
    let pe = FilterDescriptor::principal(evens.clone()).unwrap();
    println!("{frechet} contains evens: {}", frechet.contains(&evens));
    println!("{pe} contains evens | {{1}}: {}", pe.contains(&evens.union(&one)));
    println!("principal on the empty set: {:?}", FilterDescriptor::principal(SetDescriptor::empty()));

    let mut rng = sample::rng_from_seed(sample::DEFAULT_SEED);
    let samples: Vec<SetDescriptor> = (0..50).map(|_| sample::set_descriptor(&mut rng)).collect();
    print!("{}", check_filter_axioms(&frechet, &samples));
    print!("{}", check_filter_axioms(&FilterDescriptor::principal(SetDescriptor::finite([2, 4])).unwrap(), &samples));
}
