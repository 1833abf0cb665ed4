//! Every applicable pipeline on every built-in document, through the same
//! entry point as `toric-contact crosscheck`.

use toric_contact::cli;
use toric_contact::corpus;

fn main() {
    let mut failures = 0;
    for name in corpus::names() {
        let outcome = cli::run(["toric-contact", "crosscheck", &format!("@{name}")]);
        let report: serde_json::Value = serde_json::from_str(&outcome.stdout).expect("crosscheck prints JSON");
        println!("{name}: m = {}, δ = {}, agreement {}", report["m"], report["delta"], report["agreement"]);
        for p in report["pipelines"].as_array().into_iter().flatten() {
            println!("    {:<24} {}", p["pipeline"].as_str().unwrap_or_default(), if p["agrees"] == true { "ok" } else { "MISMATCH" });
        }
        if outcome.code != cli::EXIT_OK {
            failures += 1;
        }
    }
    println!("\n{failures} document(s) with disagreeing pipelines");
    std::process::exit(if failures == 0 { 0 } else { 1 });
}
