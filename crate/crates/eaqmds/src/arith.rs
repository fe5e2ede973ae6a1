//! Plain integer helpers shared across the crate: primality, prime-power
//! detection, modular arithmetic, multiplicative orders, capped binomials.

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `a * b mod m` without overflow.
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m`.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic trial-division primality test; fine at the sizes this crate
/// works with (field orders are bounded well below 2^32).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as `(prime, multiplicity)` pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0u32;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// If `n = p^k` for a prime `p` and `k >= 1`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let factors = factorize(n);
    if factors.len() == 1 {
        Some(factors[0])
    } else {
        None
    }
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let prev = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Euler's totient of `n`.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Multiplicative order of `a` modulo `m`; requires `gcd(a, m) = 1`.
///
/// The order divides phi(m), so it is found by checking the divisors of
/// phi(m) in ascending order rather than by iterating powers.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    if m == 1 {
        return Some(1);
    }
    let a = a % m;
    if gcd(a, m) != 1 {
        return None;
    }
    // The search cannot fail: the order always divides phi(m).
    divisors(euler_phi(m))
        .into_iter()
        .find(|&d| pow_mod(a, d, m) == 1)
}

/// `C(n, k)` if it does not exceed `cap`, else `None`.
pub fn binomial_capped(n: u64, k: u64, cap: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > cap as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2));
        assert!(is_prime(103));
        assert!(!is_prime(1));
        assert!(!is_prime(87)); // 3 * 29
        assert!(!is_prime(121));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(23), Some((23, 1)));
        assert_eq!(prime_power(87), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn orders() {
        // 121 = 11^2 is 1 mod 60.
        assert_eq!(multiplicative_order(121, 60), Some(1));
        assert_eq!(multiplicative_order(9, 20), Some(2)); // 81 = 4*20 + 1
        assert_eq!(multiplicative_order(9, 7), Some(3)); // 2, 4, 1
        assert_eq!(multiplicative_order(4, 8), None); // not coprime
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn capped_binomials() {
        assert_eq!(binomial_capped(20, 6, 1_000_000), Some(38_760));
        assert_eq!(binomial_capped(132, 28, 1_000_000), None);
        assert_eq!(binomial_capped(5, 0, 10), Some(1));
        assert_eq!(binomial_capped(3, 7, 10), Some(0));
    }
}
