use wcoprime::budget::Budget;
use wcoprime::divisor::{brute_q, PlaceTable};
use wcoprime::theorems::thm2_q_exact;
use wcoprime::zeta::{CurveSpec, SSpec, SZeta};

fn main() {
    let z = SZeta::new(&CurveSpec::e2_supersingular(), &SSpec::new(vec![1]).unwrap(), 20).unwrap();
    let table = PlaceTable::from_zeta(&z, 5).unwrap();
    for n in 0..=5 {
        let brute = brute_q(&table, n, 2, 1, Budget::default()).unwrap();
        let exact = thm2_q_exact(&z, n as i64, 2, 1).unwrap();
        println!("n={n}: coprime pairs of ideals {brute} (series {exact})");
    }
}
