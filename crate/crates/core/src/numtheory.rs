//! Small integer helpers for group orders.

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut part = 1;
    if n == 0 || p < 2 {
        return 1;
    }
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// `n` with every factor `p` removed.
pub fn p_prime_part(n: usize, p: usize) -> usize {
    n / p_part(n, p)
}

/// `Some((p, k))` when `n = p^k` with `k >= 1`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    let primes = prime_divisors(n);
    if primes.len() != 1 {
        return None;
    }
    let p = primes[0];
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        m /= p;
        k += 1;
    }
    Some((p, k))
}

/// Number of prime factors counted with multiplicity.
pub fn omega(mut n: usize) -> u32 {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            n /= d;
            count += 1;
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

pub fn is_power_of(n: usize, p: usize) -> bool {
    n >= 1 && p_part(n, p) == n
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorisation_helpers() {
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(prime_divisors(1), Vec::<usize>::new());
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_prime_part(24, 2), 3);
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(omega(12), 3);
        assert_eq!(omega(1), 0);
        assert!(is_power_of(1, 5));
        assert!(!is_power_of(6, 2));
        assert!(is_prime(61) && !is_prime(1) && !is_prime(91));
    }
}
