#[allow(dead_code)]
mod coefficients_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/coefficients.rs"));
}

#[test]
fn coefficients_example_runs() {
    coefficients_example::run_example().expect("coefficients example should run");
}

#[allow(dead_code)]
mod height_scan_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/height_scan.rs"));
}

#[test]
fn height_scan_example_runs() {
    height_scan_example::run_example().expect("height_scan example should run");
}

#[allow(dead_code)]
mod beiter_sets_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/beiter_sets.rs"));
}

#[test]
fn beiter_sets_example_runs() {
    beiter_sets_example::run_example().expect("beiter_sets example should run");
}

#[allow(dead_code)]
mod counter_examples_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/counter_examples.rs"));
}

#[test]
fn counter_examples_example_runs() {
    counter_examples_example::run_example().expect("counter_examples example should run");
}

#[allow(dead_code)]
mod moller_lehmer_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/moller_lehmer.rs"));
}

#[test]
fn moller_lehmer_example_runs() {
    moller_lehmer_example::run_example().expect("moller_lehmer example should run");
}

#[allow(dead_code)]
mod reciprocal_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reciprocal.rs"));
}

#[test]
fn reciprocal_example_runs() {
    reciprocal_example::run_example().expect("reciprocal example should run");
}

#[allow(dead_code)]
mod asymptotic_families_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/asymptotic_families.rs"));
}

#[test]
fn asymptotic_families_example_runs() {
    asymptotic_families_example::run_example().expect("asymptotic_families example should run");
}
