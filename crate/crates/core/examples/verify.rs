//! Running the built-in identity checks.

use shinsym::cli::verify::{find, run_identity};

fn main() -> shinsym::Result<()> {
    for name in ["duality", "involutions", "jt-vs-pieri"] {
        let report = run_identity(&find(name)?, Some(5), 0);
        println!("{report}");
    }
    Ok(())
}
