//! Small integer helpers. Every quantity here is bounded by a group order, so
//! trial division is plenty.

/// Prime factorisation as `(prime, exponent)` pairs in increasing prime order.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Number of prime factors of `m` counted with multiplicity; `big_omega(1) == 0`.
pub fn big_omega(m: u64) -> u32 {
    assert!(m >= 1, "big_omega is defined for positive integers");
    factorize(m).iter().map(|&(_, e)| e).sum()
}

pub fn distinct_primes(m: u64) -> Vec<u64> {
    factorize(m).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(m: u64) -> bool {
    m >= 2 && factorize(m) == [(m, 1)]
}

/// The prime `p` when `m = p^k` with `k >= 1`.
pub fn prime_power_base(m: u64) -> Option<u64> {
    match factorize(m).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn totient(m: u64) -> u64 {
    factorize(m)
        .iter()
        .fold(m, |acc, &(p, _)| acc / p * (p - 1))
}
