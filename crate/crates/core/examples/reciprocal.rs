// Periodic coefficients of 1/Φ_n and when their height reaches p - 1.

use cyclo_heights::dense::{reciprocal_block, reciprocal_height_predicate, ReciprocalPrediction};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (p, q, r) in [(3, 5, 7), (3, 11, 17), (3, 7, 13), (5, 11, 31), (5, 11, 41)] {
        let block = reciprocal_block(p * q * r)?;
        let pred = reciprocal_height_predicate(p, q, r)?;
        let reaches = block.height() == p - 1;
        assert_eq!(reaches, pred == ReciprocalPrediction::EqualPMinus1);
        println!("H({}) = {} (period {}, predicted {:?})", p * q * r, block.height(), block.minimal_period(), pred);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("reciprocal example failed");
}
