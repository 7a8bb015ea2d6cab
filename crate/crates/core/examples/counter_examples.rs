// Explicit coefficients beyond (p+1)/2, verified independently of their construction.

use cyclo_heights::beiter::{construct, least_admissible_q, verify_certificate, Sign};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (p, beta, sign) in [(11, 4, Sign::Minus), (13, 5, Sign::Plus), (17, 7, Sign::Minus)] {
        let q = least_admissible_q(p, beta, sign, 1_000_000)?;
        for cert in construct(p, beta, q, sign, 10_000_000)? {
            let v = verify_certificate(&cert);
            assert!(v.verified());
            println!(
                "a_{{{p}·{q}·{}}}({}) = {:>3}   (p+1)/2 = {}",
                cert.r,
                cert.n,
                cert.claimed,
                (p + 1) / 2
            );
        }
    }
    println!("{}", serde_json::to_string(&construct(11, 4, 59, Sign::Minus, 10_000_000)?[0])?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("counter-examples example failed");
}
