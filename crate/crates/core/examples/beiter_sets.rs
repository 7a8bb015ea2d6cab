// The residue classes B₋(p), B₊(p) for small primes and the lower bounds they give.

use cyclo_heights::beiter::{beiter_sets, mp_lower_bound};
use cyclo_heights::numtheory::is_prime;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>4}  {:<16} {:<20} M(p) >=", "p", "B-", "B+");
    for p in (11..=73).filter(|&p| is_prime(p)) {
        let s = beiter_sets(p)?;
        let bound = mp_lower_bound(p).ok_or("empty B(p)")?;
        assert!(2 * bound > p + 1, "bound must exceed (p+1)/2");
        println!("{p:>4}  {:<16} {:<20} {bound}", format!("{:?}", s.b_minus), format!("{:?}", s.b_plus));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("beiter sets example failed");
}
