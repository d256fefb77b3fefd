//! The JSON report produced by the `skewsym` binary, driven in-process.
//!
//! ```text
//! cargo run --release --example cli_report
//! cargo run --release --bin skewsym -- report --map "(z^3, z*w^2 + z^3)" --no-timestamp
//! ```

pub fn run_example() -> skewsym::Result<()> {
    let args = ["skewsym", "classify", "--map", "(z^2, z^3*w^5 + z*w^3 + w^2)", "--no-timestamp"];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = skewsym::cli::run_with(args, &mut out, &mut err);
    let doc: serde_json::Value = serde_json::from_slice(&out).map_err(|e| skewsym::Error::Io(e.to_string()))?;
    println!("exit {code}; schema {}", doc["schema"]);
    println!("type {} with {}", doc["classification"]["type"], doc["classification"]["semiconjugacy"]);
    println!("group {}", doc["symmetries"]["group"]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> skewsym::Result<()> {
    run_example()
}
