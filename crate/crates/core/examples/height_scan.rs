// Full height scans of Φ_pqr, and moving a large coefficient to other r.

use cyclo_heights::bounds::{best_ceiling, general_ceiling};
use cyclo_heights::kaplan::{transport_neg, transport_same};
use cyclo_heights::{ternary_coeff, ternary_height, OddPrimeTriple};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let t = OddPrimeTriple::new(17, 29, 1931)?;
    let h = ternary_height(&t, workers)?;
    println!(
        "A({}) = {} at n = {} (ceilings: {} general, {} best)",
        t.n(),
        h.height,
        h.witness,
        general_ceiling(17),
        best_ceiling(&t)
    );

    // 2917 ≡ 1931 and 2999 ≡ -1931 (mod 17·29); the second flips the sign
    let same = transport_same(&t, h.witness, 2917)?;
    let neg = transport_neg(&t, h.witness, 2999)?;
    for (s, n) in [(2917, same), (2999, neg)] {
        let moved = OddPrimeTriple::new(17, 29, s)?;
        println!("  s = {s}: a({n}) = {}", ternary_coeff(&moved, n)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("height scan example failed");
}
