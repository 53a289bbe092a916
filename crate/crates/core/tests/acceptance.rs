use std::path::PathBuf;
use std::process::ExitCode;

use posetbundle::acceptance::{run, Fixtures};

fn main() -> ExitCode {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let fixtures = match Fixtures::load(&dir) {
        Ok(fx) => fx,
        Err(e) => {
            eprintln!("fixtures did not load: {e}");
            return ExitCode::FAILURE;
        }
    };
    let verdicts = run(&fixtures);
    for v in &verdicts {
        println!("{v}");
    }
    let failed: Vec<_> = verdicts.iter().filter(|v| !v.passed).map(|v| v.id).collect();
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria passed", verdicts.len(), verdicts.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
