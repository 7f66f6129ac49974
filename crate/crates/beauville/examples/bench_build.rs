use beauville::count::{phi2_bruteforce, phi2_moebius};
use beauville::structure::{build_beauville, BuildOutcome};
use std::time::Instant;

fn main() {
    let t = Instant::now();
    let r = phi2_bruteforce(6, 2520).unwrap();
    println!("phi2 brute A6: d2={} in {:?}", r.d2, t.elapsed());

    let t = Instant::now();
    let r = phi2_moebius(6).unwrap();
    println!("phi2 moebius A6: d2={} in {:?}", r.d2, t.elapsed());

    for (n, k) in [(12usize, 52usize), (12, 100), (13, 36), (13, 200), (14, 200), (6, 53), (7, 50), (9, 50)] {
        let t = Instant::now();
        match build_beauville(n, k, 10_000, 7) {
            Ok(BuildOutcome::Structure(s)) => {
                println!("build({n},{k}): ok via {} in {:?}", s.provenance, t.elapsed())
            }
            Ok(BuildOutcome::NoStructure { .. }) => println!("build({n},{k}): none"),
            Err(e) => println!("build({n},{k}): ERROR {e} in {:?}", t.elapsed()),
        }
    }
}
