use wcoprime::theorems::lemma4_report;
use wcoprime::zeta::{CurveSpec, SSpec, SZeta};

fn main() {
    for curve in [CurveSpec::rational(2), CurveSpec::rational(3), CurveSpec::e2_supersingular()] {
        let z = SZeta::new(&curve, &SSpec::new(vec![1]).unwrap(), 30).unwrap();
        let r = lemma4_report(&z, 0..=12).unwrap();
        let diffs: Vec<String> = r.rows.iter().map(|row| row.difference.to_string()).collect();
        println!("{} q={}: c_S = {} (printed form {}), j_S(n) - c_S q^n = {}",
            curve.label(), curve.q, r.leading_constant, r.printed_constant, diffs.join(" "));
    }
}
