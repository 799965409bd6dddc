//! Prime-field helpers: primality, modular powers and dense linear algebra
//! over `F_p` for `p < 2^32`.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut result = 1 % p;
    let mut b = base % p;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    result
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Least prime `p` with `p ≡ 1 (mod exponent)` and `p > 2·sqrt(group_order)`.
pub fn dixon_prime(exponent: u64, group_order: u64) -> u64 {
    next_dixon_prime(exponent, group_order, 0)
}

/// Least admissible Dixon prime strictly greater than `after`.
pub fn next_dixon_prime(exponent: u64, group_order: u64, after: u64) -> u64 {
    assert!(exponent >= 1);
    let exceeds_bound = |p: u64| (p as u128) * (p as u128) > 4 * group_order as u128;
    let mut p = exponent + 1;
    // Dirichlet guarantees termination; the bound only guards against overflow.
    for _ in 0..10_000_000u64 {
        if p > after && exceeds_bound(p) && is_prime(p) {
            return p;
        }
        p += exponent;
    }
    panic!("no Dixon prime found for exponent {exponent}");
}

/// Multiplicative order of `a` modulo the prime `p`.
pub fn multiplicative_order(a: u64, p: u64) -> u64 {
    let mut x = a % p;
    let mut k = 1;
    while x != 1 {
        x = x * a % p;
        k += 1;
    }
    k
}

/// Least residue of multiplicative order exactly `e` modulo `p`.
pub fn least_root_of_unity(e: u64, p: u64) -> Option<u64> {
    if !(p - 1).is_multiple_of(e) {
        return None;
    }
    (1..p).find(|&a| multiplicative_order(a, p) == e)
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot).take(ncols) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of the right null space `{x : A x = 0}`.
pub fn nullspace(a: &[Vec<u64>], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let (reduced, pivots) = if a.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        rref(a.to_vec(), p)
    };
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; ncols];
            v[f] = 1;
            for (row, &pc) in reduced.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

pub fn determinant(mut rows: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = rows.len();
    let mut det = 1u64;
    for c in 0..n {
        let Some(k) = (c..n).find(|&k| !rows[k][c].is_multiple_of(p)) else {
            return 0;
        };
        if k != c {
            rows.swap(k, c);
            det = (p - det) % p;
        }
        det = det * rows[c][c] % p;
        let inv = inv_mod(rows[c][c], p);
        let pivot = rows[c].clone();
        for row in rows.iter_mut().take(n).skip(c + 1) {
            let f = row[c] * inv % p;
            if f != 0 {
                for (x, &y) in row.iter_mut().zip(&pivot).take(n).skip(c) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
    }
    det
}

pub fn inverse(rows: Vec<Vec<u64>>, p: u64) -> Option<Vec<Vec<u64>>> {
    let n = rows.len();
    let augmented: Vec<Vec<u64>> = rows
        .into_iter()
        .enumerate()
        .map(|(i, mut r)| {
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    let (reduced, pivots) = rref(augmented, p);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(reduced.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dixon_prime_examples() {
        assert_eq!(dixon_prime(3, 3), 7);
        assert_eq!(dixon_prime(60, 120), 61);
        assert_eq!(dixon_prime(1, 1), 3);
        assert_eq!(next_dixon_prime(60, 120, 61), 181);
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(least_root_of_unity(3, 7), Some(2));
        assert_eq!(least_root_of_unity(6, 7), Some(3));
        assert_eq!(least_root_of_unity(1, 7), Some(1));
        assert_eq!(least_root_of_unity(4, 7), None);
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = vec![vec![1, 2, 3]];
        let ns = nullspace(&a, 3, 7);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!((v[0] + 2 * v[1] + 3 * v[2]) % 7, 0);
        }
    }

    #[test]
    fn determinant_with_swap() {
        assert_eq!(determinant(vec![vec![0, 1], vec![1, 0]], 5), 4);
        assert_eq!(determinant(vec![vec![2, 0], vec![0, 3]], 5), 1);
    }
}
