//! The expression language used by the command line, driven from code.

use gsc::cli::eval::{filter_from_text, Evaluator};
use gsc::cli::syntax::parse;

fn main() {
    let inputs = [
        "class(sum(1))",
        "eq(shift(n) - n, 1)",
        "invert(ind(0 mod 2))",
        "1/(n^2 + 1) - 1/(n^2 + 2)",
        "st((2*n + 3)/(n + 1))",
        "le(ind(evens), 0)",
        "n except {0: 1/2}",
    ];
    for filter in ["frechet", "principal:evens"] {
        let ev = Evaluator::new(filter_from_text(filter).unwrap());
        println!("-- {filter}");
        for text in inputs {
            let rendered = parse(text).unwrap().to_string();
            match ev.eval_text(text) {
                Ok(v) => println!("{rendered} => {}", ev.render(&v)),
                Err(e) => println!("{rendered} => error: {e}"),
            }
        }
    }
}
