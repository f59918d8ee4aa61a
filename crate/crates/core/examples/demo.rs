//! Runs the acceptance corpus and prints the report.

fn main() {
    let report = ordalg::demo::run_demo();
    print!("{}", report.to_text());
}
