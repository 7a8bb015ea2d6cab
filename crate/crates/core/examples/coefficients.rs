// Single coefficients of binary and ternary cyclotomic polynomials, checked
// against the dense expansion.

use cyclo_heights::binary::rho_sigma;
use cyclo_heights::{binary_coeff, cyclotomic_poly, ternary_coeff, OddPrimeTriple};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rs = rho_sigma(11, 59)?;
    println!("(p-1)(q-1) = ρp + σq for (11, 59): ρ = {}, σ = {}", rs.rho, rs.sigma);

    let phi15 = cyclotomic_poly(15)?;
    let closed: Vec<i64> = (0..=8).map(|k| binary_coeff(3, 5, k).map(i64::from)).collect::<Result<_, _>>()?;
    assert_eq!(phi15.coeffs, closed);
    println!("Φ_15 = {:?}", closed);

    let t = OddPrimeTriple::new(3, 5, 7)?;
    let a = ternary_coeff(&t, 7)?;
    assert_eq!(a, cyclotomic_poly(105)?.get(7));
    println!("a_105(7) = {a}");

    // far beyond what a dense expansion could reach
    let t = OddPrimeTriple::new(67, 191, 91127)?;
    println!("a_{}(417817361) = {}", t.n(), ternary_coeff(&t, 417_817_361)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("coefficients example failed");
}
