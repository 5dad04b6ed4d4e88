use wcoprime::theorems::density_report;
use wcoprime::zeta::{CurveSpec, SSpec, SZeta};

fn main() {
    let z = SZeta::new(&CurveSpec::e2_supersingular(), &SSpec::new(vec![1]).unwrap(), 40).unwrap();
    for row in density_report(&z, 2, 1, 2..=14).unwrap() {
        println!("n={:2}  Q/j^2 = {:.6}  limit {}", row.size, row.ideal_density.to_f64(), row.limit);
    }
    let z = SZeta::new(&CurveSpec::rational(2), &SSpec::new(vec![1]).unwrap(), 40).unwrap();
    for row in density_report(&z, 1, 2, 2..=10).unwrap() {
        let v = row.element_density.unwrap();
        println!("N={:2}  squarefree-type density {:.6}  limit {}", row.size, v.to_f64(), row.limit);
    }
}
