//! One line per acceptance criterion; exits nonzero if any fails.

use flagsphere::acceptance::{run_all, FLOAT_ROOT_TOLERANCE};

fn main() {
    println!("acceptance criteria (float root tolerance {FLOAT_ROOT_TOLERANCE:e}, all other checks exact)");
    let results = run_all();
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<usize> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!(
        "{} of {} criteria passed",
        results.len() - failed.len(),
        results.len()
    );
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
