//! Family sweep: the `scan` subcommand as a library call, printing the
//! versioned CSV for a zero-ring and a cyclic sweep.
//!
//!     cargo run --example scan_families

use ringprob::cli::cmd_scan;
use ringprob::extraction::XMode;

fn main() {
    let zero = cmd_scan("zero", "2..=32", XMode::Zp).unwrap();
    print!("{}", zero.text);

    let cyclic = cmd_scan("cyclic", "2,3,5,7,11", XMode::Zp).unwrap();
    // Skip the header the second time.
    for line in cyclic.text.lines().skip(2) {
        println!("{line}");
    }
}
