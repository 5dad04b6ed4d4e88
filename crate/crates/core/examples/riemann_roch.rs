use wcoprime::budget::Budget;
use wcoprime::field::{Fq, PolyRing};
use wcoprime::genus0::{principal_divisor, rr_space_enumerate, RationalPlace, SDivisorSpec};

fn main() {
    let r = PolyRing::new(Fq::with_order(3).unwrap());
    let x = RationalPlace::Finite(r.from_ints(&[0, 1]));
    // D = (X) + inf, degree 2
    let d = SDivisorSpec::new(&r, vec![(x, 1), (RationalPlace::Infinity, 1)]).unwrap();
    let space = rr_space_enumerate(&r, &d, Budget::default()).unwrap();
    println!("|L(D)| = {} for deg D = {}", space.len(), d.degree());
    for a in space.iter().filter(|a| !a.is_zero()).take(6) {
        let div = principal_divisor(&r, a, Budget::default()).unwrap();
        let terms: Vec<String> = div.iter().map(|(p, v)| format!("{v}*{p}")).collect();
        if terms.is_empty() {
            println!("  div({a}) = 0");
        } else {
            println!("  div({a}) = {}", terms.join(" + "));
        }
    }
}
