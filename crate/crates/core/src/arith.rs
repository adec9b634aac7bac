//! Small integer helpers shared by the family constructors and catalogs.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: u64) -> bool {
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

/// Primes up to and including `bound`.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

/// Prime factorisation as `(prime, multiplicity)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// If `n = p^e` for a prime `p`, returns `(p, e)`. `1` is not a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// Exponent of the largest power of `p` dividing `n` (`n > 0`).
pub fn valuation(p: u64, mut n: u64) -> u32 {
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// `r mod m` as a value in `0..m`, for signed `r`.
pub fn residue(r: i64, m: u64) -> u64 {
    r.rem_euclid(m as i64) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `r` modulo `m`, or `None` when `r` is not a unit.
pub fn mult_order(r: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(r % m, m) != 1 {
        return None;
    }
    let mut x = r % m;
    let mut k = 1;
    while x != 1 {
        x = x * r % m;
        k += 1;
    }
    Some(k)
}

/// Modular inverse of a unit `r` modulo `m`.
pub fn inverse_mod(r: u64, m: u64) -> Option<u64> {
    let ord = mult_order(r, m)?;
    Some(pow_mod(r, ord - 1, m))
}

/// Smallest generator of the unit group modulo `m`, when that group is cyclic.
pub fn primitive_root(m: u64) -> Option<u64> {
    if m <= 2 {
        return Some(1 % m);
    }
    let phi = euler_phi(m);
    (2..m).find(|&g| mult_order(g, m) == Some(phi))
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).into_iter().fold(n, |acc, (p, _)| acc / p * (p - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_roots() {
        assert_eq!(mult_order(2, 5), Some(4));
        assert_eq!(mult_order(2, 7), Some(3));
        assert_eq!(mult_order(3, 11), Some(5));
        assert_eq!(mult_order(3, 9), None);
        assert_eq!(primitive_root(7), Some(3));
        assert_eq!(primitive_root(9), Some(2));
        assert_eq!(primitive_root(8), None);
        assert_eq!(inverse_mod(2, 5), Some(3));
    }

    #[test]
    fn factoring() {
        assert_eq!(factorize(600), vec![(2, 3), (3, 1), (5, 2)]);
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(12), None);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(residue(-1, 9), 8);
    }
}
