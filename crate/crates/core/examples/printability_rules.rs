//! Printable class counts under each combination of strip window and orbit
//! rule, next to the reference column.

use hexaflex::geometry::{printable_class_count_with, PrintabilityRule};
use hexaflex::{Execution, REFERENCE_TABLE};

fn main() {
    println!("n,reference,any_3n,any_glued,canonical_3n,canonical_glued");
    for (n, _, reference) in REFERENCE_TABLE {
        let counts: Vec<String> = [(false, false), (true, false), (false, true), (true, true)]
            .into_iter()
            .map(|(with_glue, canonical_only)| {
                let rule = PrintabilityRule { with_glue, canonical_only };
                printable_class_count_with(n, 26, rule, Execution::Parallel).unwrap().to_string()
            })
            .collect();
        println!("{n},{reference},{}", counts.join(","));
    }
}
