//! Small-integer number theory by trial division.
//!
//! Element and group orders at desk scale are tiny, so nothing here is
//! probabilistic.

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a as u128, b as u128) as u64 * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u128) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d as u64, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

/// Ascending list of prime divisors.
pub fn prime_divisors(n: u128) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// True iff `n` is `p^k` for one prime `p`. `1` counts as a prime power:
/// the identity is an element of prime-power order in every group.
pub fn is_prime_power(n: u64) -> bool {
    n >= 1 && factorize(n as u128).len() <= 1
}

/// The prime of a prime power, `None` for `1` or composite-of-two-primes.
pub fn prime_of_power(n: u128) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// True iff `n` is a power of `p` (including `p^0 = 1`).
pub fn is_power_of(mut n: u128, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n % p as u128 == 0 {
        n /= p as u128;
    }
    n == 1
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u128, p: u64) -> u128 {
    let mut part = 1;
    while n % p as u128 == 0 {
        n /= p as u128;
        part *= p as u128;
    }
    part
}

pub fn coprime(a: u128, b: u128) -> bool {
    gcd(a, b) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert!(is_prime_power(1));
        assert!(is_prime_power(8));
        assert!(!is_prime_power(6));
        assert!(is_prime_power(2));
        assert!(is_prime_power(3125));
    }

    #[test]
    fn sz8_order_is_not_a_prime_power() {
        // 29120 = 2^6 * 5 * 7 * 13
        assert_eq!(factorize(29120), vec![(2, 6), (5, 1), (7, 1), (13, 1)]);
        assert!(!is_prime_power(29120));
    }

    #[test]
    fn parts() {
        assert_eq!(p_part(120960, 2), 128);
        assert_eq!(p_part(120960, 3), 27);
        assert!(is_power_of(1, 5));
        assert!(!is_power_of(12, 2));
        assert_eq!(prime_divisors(20160), vec![2, 3, 5, 7]);
        assert_eq!(lcm(4, 6), 12);
    }
}
