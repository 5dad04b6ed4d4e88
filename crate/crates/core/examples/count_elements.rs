use wcoprime::budget::Budget;
use wcoprime::field::{Fq, PolyRing};
use wcoprime::genus0::{brute_v, fast_v_genus0, RationalPlace, SDivisorSpec};
use wcoprime::zeta::{CurveSpec, SZeta};

fn main() {
    let r = PolyRing::new(Fq::with_order(2).unwrap());
    let z = SZeta::new(&CurveSpec::rational(2), &wcoprime::zeta::SSpec::new(vec![1]).unwrap(), 20).unwrap();
    println!(" N m w  brute   fast");
    for n in 1..=4 {
        let d = SDivisorSpec::new(&r, vec![(RationalPlace::Infinity, n)]).unwrap();
        for (m, w) in [(1, 1), (1, 2), (2, 1), (3, 1)] {
            let brute = brute_v(&r, &d, m, w, Budget::default()).unwrap();
            let fast = fast_v_genus0(&d, m, w, &z).unwrap();
            println!("{n:2} {m} {w} {brute:6} {fast:6}");
        }
    }
}
