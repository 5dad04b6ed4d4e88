//! Small integer helpers.

/// Classical Möbius function on positive integers.
pub fn mobius_int(mut n: u64) -> i64 {
    assert!(n > 0, "mobius_int is defined on positive integers");
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n % d == 0)
}
