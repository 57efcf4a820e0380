//! Run every verification suite and print the summary lines.
//!
//! ```text
//! cargo run --release --example verify_campaign -- 6
//! ```

use koszul_graphs::verify::{run_suite, Options, Suite};

fn main() -> koszul_graphs::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let opts = Options { max_n, degree: None };
    for suite in Suite::ALL {
        let report = run_suite(suite, &opts)?;
        let summary = report.render();
        println!("{}", summary.lines().last().unwrap_or_default());
    }
    Ok(())
}
