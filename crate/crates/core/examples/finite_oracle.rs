//! Exhaustive check of the ideal/filter correspondence and of the
//! maximal/field and prime/domain equivalences on small finite index sets.

use gsc::oracle::{enumerate_filters, enumerate_ideals, verify_galois, verify_maximal_prime, FiniteConfig};

fn main() {
    for (lambda, p) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        let cfg = FiniteConfig::new(lambda, p).unwrap();
        println!(
            "{cfg}: {} ideals, {} filters",
            enumerate_ideals(&cfg).unwrap().len(),
            enumerate_filters(&cfg).unwrap().len()
        );
    }
    let cfg = FiniteConfig::new(3, 2).unwrap();
    print!("{}", verify_galois(&cfg).unwrap());
    print!("{}", verify_maximal_prime(&cfg).unwrap());
}
