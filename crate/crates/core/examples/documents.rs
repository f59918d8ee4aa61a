//! Driving the command line from code with the bundled documents.

use ordalg::cli::run;

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    let doc = |f: &str| format!("{dir}/{f}");
    let commands: Vec<Vec<String>> = vec![
        vec!["validate".into(), doc("trunc3.ord"), doc("bad_entry.ord")],
        vec!["-f".into(), doc("chain2.ord"), "check".into(), "proto".into(), "chain".into(), "--n".into(), "1".into()],
        vec!["-f".into(), doc("chain2.ord"), "check".into(), "degenerate".into(), "chain".into()],
        vec!["-f".into(), doc("pointed.ord"), "check".into(), "ss5l".into(), "missed".into()],
    ];
    for args in commands {
        let out = run(std::iter::once("ordalg".to_string()).chain(args));
        print!("{}{}", out.stdout, out.stderr);
        println!("exit status {}\n", out.status);
    }
}
