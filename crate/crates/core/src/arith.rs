//! Small integer helpers shared by the classification and solver code.

use num_integer::Integer;

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`, `g >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Inverse of `a` modulo `m` (m >= 1), in `[0, m)`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

/// All positive divisors of `|n|`, ascending. Empty for `n == 0`.
pub fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
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

/// Fibonacci numbers `F_0..=F_n` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: usize) -> Vec<i64> {
    let mut f = vec![0i64, 1];
    while f.len() <= n {
        let k = f.len();
        f.push(f[k - 1] + f[k - 2]);
    }
    f.truncate(n + 1);
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_11() {
        assert_eq!(mod_inverse(2, 11), Some(6));
        assert_eq!(mod_inverse(-2, 11), Some(5));
        assert_eq!(mod_inverse(3, 9), None);
    }

    #[test]
    fn divisors_of_45() {
        assert_eq!(divisors(-45), vec![1, 3, 5, 9, 15, 45]);
        assert!(divisors(0).is_empty());
    }

    #[test]
    fn bezout_sign() {
        let (g, x, y) = ext_gcd(-4, 6);
        assert_eq!(g, 2);
        assert_eq!(-4 * x + 6 * y, 2);
    }

    #[test]
    fn fib_prefix() {
        assert_eq!(fibonacci(6), vec![0, 1, 1, 2, 3, 5, 8]);
    }
}
