// The classical r = (mpq-1)/2 family reaching (p+1)/2, and its (p-1)/2 companion.

use cyclo_heights::beiter::{lehmer, moller, verify_certificate};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in [5, 7, 11] {
        let m = moller(p, 1, true)?;
        let l = lehmer(p, m.q, m.r)?;
        for c in [m, l] {
            let v = verify_certificate(&c);
            assert!(v.verified());
            println!("{:?}: a_{{{}·{}·{}}}({}) = {}", c.kind, c.p, c.q, c.r, c.n, c.claimed);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("moller/lehmer example failed");
}
