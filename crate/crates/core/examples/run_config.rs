use wcoprime::cli::{emit_report, parse_config, run};

const CONFIG: &str = r#"
command = "verify-thm2"
curve = "rational"
q = 2

[S]
degrees = [1]

[params]
m = 2
w = 1
range_lo = 1
range_hi = 5
"#;

fn main() {
    let cfg = match parse_config(CONFIG) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let outcome = run(&cfg).unwrap();
    print!("{}", String::from_utf8(emit_report(&outcome.report, cfg.output.format)).unwrap());
}
