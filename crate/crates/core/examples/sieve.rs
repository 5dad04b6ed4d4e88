use wcoprime::divisor::{
    inclusion_exclusion_check, mobius, mobius_inversion_sum, AbstractPlace, Divisor, PropertyInstance,
};

fn main() {
    let p = AbstractPlace::new(1, 0);
    let r = AbstractPlace::new(2, 0);
    let d = Divisor::from_entries([(p, 2), (r, 1)]);
    for sub in d.sub_divisors() {
        println!("mu({sub}) = {}", mobius(&sub));
    }
    println!("sum over 0 <= D' <= D: {}", mobius_inversion_sum(&d));

    // six items over three properties
    let inst = PropertyInstance::new(vec![p, r, AbstractPlace::new(1, 1)], vec![0b000, 0b001, 0b011, 0b100, 0b000, 0b111]).unwrap();
    println!("{:?} -> {}", inst.sides(), inclusion_exclusion_check(&inst));
}
