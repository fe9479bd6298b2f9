//! Integer helpers: trial-division factoring and prime-power detection.

/// Prime factorization by trial division, smallest prime first.
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

/// Trial-division primality check.
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

/// Returns `(p, e)` with `q = p^e` if `q` is a power of a single odd prime.
pub fn odd_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 3 {
        return None;
    }
    match factorize(q).as_slice() {
        [(p, e)] if *p != 2 => Some((*p, *e)),
        _ => None,
    }
}

/// Odd prime powers in `lo..=hi`, ascending.
pub fn odd_prime_powers(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&q| odd_prime_power(q).is_some()).collect()
}
