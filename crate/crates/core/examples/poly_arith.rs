use wcoprime::budget::Budget;
use wcoprime::field::{necklace_count, Fq, PolyRing};

fn main() {
    let f2 = PolyRing::new(Fq::with_order(2).unwrap());
    let x = f2.from_ints(&[0, 1]);
    let x1 = f2.from_ints(&[1, 1]);
    println!("gcd({x}, {x1}) = {}", f2.gcd(&x, &x1).unwrap());

    // X^4 + X over F_2
    let a = f2.from_ints(&[0, 1, 0, 0, 1]);
    let fact = f2.factor(&a, Budget::default()).unwrap();
    let parts: Vec<String> = fact.factors.iter().map(|(p, e)| format!("({p})^{e}")).collect();
    println!("{a} = {}", parts.join(" "));

    let f4 = PolyRing::new(Fq::with_order(4).unwrap());
    for d in 1..=4 {
        let irr = f4.irreducibles_of_degree(d, Budget::default()).unwrap();
        println!("F_4: {} monic irreducibles of degree {d} (necklace formula {})", irr.len(), necklace_count(4, d as u64));
    }
}
