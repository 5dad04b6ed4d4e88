use wcoprime::zeta::{place_counts, point_counts, CurveSpec, SSpec, SZeta};

fn main() {
    let curve = CurveSpec::e2_supersingular();
    println!("N_n   = {:?}", point_counts(&curve, 6).iter().map(|n| n.to_string()).collect::<Vec<_>>());
    println!("a_d   = {:?}", place_counts(&curve, 6).unwrap().iter().map(|n| n.to_string()).collect::<Vec<_>>());

    let s = SSpec::new(vec![1]).unwrap();
    let z = SZeta::new(&curve, &s, 10).unwrap();
    println!(" k    b_k  b_S,k  mu_S,k  j_S(k)");
    for k in 0..=10 {
        println!("{k:2} {:6} {:6} {:7} {:7}", z.b(k).unwrap(), z.b_s(k).unwrap(), z.mu(k).unwrap(), z.j(k as i64).unwrap());
    }
    for t in 2..=4 {
        println!("zeta_S({t}) = {}", z.value(t).unwrap());
    }
    println!("c_S = {}", z.leading_constant());
}
