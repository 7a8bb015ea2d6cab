// Residue-class finders behind the large-p lower bounds, checked on finite ranges.

use cyclo_heights::beiter::{beta_class, duke_beta, find_beta_window, yves_beta};
use num_rational::Ratio;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (e, p) in [(1, 47), (1, 71), (2, 503)] {
        let y = yves_beta(e, p)?;
        println!("e = {e}, p = {p}: β = {}, β* = {}, coefficient {} (boundary {})", y.beta, y.beta_star, y.bound, y.boundary);
    }
    for p in [10007, 100003] {
        if let Some(b) = find_beta_window(p, Ratio::new(1, 10))? {
            let c = beta_class(p, b)?;
            println!("p = {p}: β = {b} ∈ B₊ with β* = {}, ratio (p-β)/p ≈ {:.4}", c.beta_star, (p - b) as f64 / p as f64);
        }
    }
    for p in [13, 29, 10009] {
        println!("β² ≡ -1 (mod {p}): β = {:?}", duke_beta(p));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("asymptotic families example failed");
}
