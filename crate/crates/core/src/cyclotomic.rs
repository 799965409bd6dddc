//! Exact arithmetic in cyclotomic fields.
//!
//! A value is stored in `Q(ζ_n)` for the least possible `n` (its conductor),
//! expanded in the Zumbroich basis. For `n = ∏ q` with `q = p^k`, write an
//! exponent `j` by its CRT components `j_q`; `ζ_n^j` is a basis element iff
//! every component `j_q = a + p^(k-1)·c` with `0 <= a < p^(k-1)` has top digit
//! `c != 0` (odd `p`) or `c = 0` (`p = 2`). The expansion is unique, so
//! equality and hashing are structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: BTreeMap<u64, BigRational>,
}

fn prime_powers(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Inverse of `a` modulo `m` for coprime `a`, `m`; zero when `m == 1`.
fn inv_mod(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let e = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i64) as u64
}

/// Rewrites a dense coefficient vector over `ζ_n^0 .. ζ_n^(n-1)` into the
/// Zumbroich basis of `Q(ζ_n)`.
fn zumbroich_reduce(n: u64, dense: &mut [BigRational]) {
    for (p, k) in prime_powers(n) {
        let q = p.pow(k);
        let lower = q / p;
        let cofactor_inv = inv_mod((n / q) % q, q);
        let step = n / p;
        for j in 0..n {
            if dense[j as usize].is_zero() {
                continue;
            }
            let jq = (j % q) * cofactor_inv % q;
            let top = jq / lower;
            if p == 2 {
                if top == 1 {
                    let c = std::mem::take(&mut dense[j as usize]);
                    let t = ((j + step) % n) as usize;
                    dense[t] -= c;
                }
            } else if top == 0 {
                let c = std::mem::take(&mut dense[j as usize]);
                for t in 1..p {
                    let idx = ((j + step * t) % n) as usize;
                    dense[idx] -= &c;
                }
            }
        }
    }
}

/// Tries to rewrite a reduced value of `Q(ζ_n)` as a reduced value of
/// `Q(ζ_(n/p))`.
fn descend(n: u64, p: u64, k: u32, dense: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = n / p;
    let nonzero = || (0..n).filter(|&j| !dense[j as usize].is_zero());
    if k >= 2 {
        if nonzero().any(|j| j % p != 0) {
            return None;
        }
        let mut out = vec![BigRational::zero(); m as usize];
        for j in nonzero() {
            out[(j / p) as usize] = dense[j as usize].clone();
        }
        return Some(out);
    }
    let p_inv = inv_mod(p % m, m);
    let m_inv = inv_mod(m % p, p);
    if p == 2 {
        let mut out = vec![BigRational::zero(); m as usize];
        for j in nonzero() {
            out[((j % m) * p_inv % m) as usize] += &dense[j as usize];
        }
        return Some(out);
    }
    // x = Σ_c ζ_p^c y_c with c in 1..p; x lies in the subfield iff all y_c
    // agree, and then x = -y_1.
    let mut slices = vec![vec![BigRational::zero(); m as usize]; p as usize];
    for j in nonzero() {
        let alpha = (j % p) * m_inv % p;
        let beta = (j % m) * p_inv % m;
        slices[alpha as usize][beta as usize] = dense[j as usize].clone();
    }
    if !slices[0].iter().all(Zero::is_zero) {
        return None;
    }
    if slices[2..].iter().any(|s| *s != slices[1]) {
        return None;
    }
    Some(slices[1].iter().map(|c| -c).collect())
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self {
            conductor: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(v.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Self {
            conductor: 1,
            coeffs,
        }
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let mut dense = vec![BigRational::zero(); n as usize];
        dense[k.rem_euclid(n as i64) as usize] = BigRational::one();
        Self::from_dense(n, dense)
    }

    /// Canonical form of `Σ_j dense[j] ζ_n^j`.
    pub fn from_dense(n: u64, mut dense: Vec<BigRational>) -> Self {
        assert_eq!(dense.len() as u64, n);
        zumbroich_reduce(n, &mut dense);
        let mut n = n;
        'outer: loop {
            if n == 1 {
                break;
            }
            for (p, k) in prime_powers(n) {
                if let Some(smaller) = descend(n, p, k, &dense) {
                    n /= p;
                    dense = smaller;
                    continue 'outer;
                }
            }
            break;
        }
        let coeffs = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j as u64, c))
            .collect();
        Self {
            conductor: n,
            coeffs,
        }
    }

    /// Canonical form of `Σ_j counts[j] ζ_n^j` for integer coefficients.
    pub fn from_integer_coeffs(n: u64, counts: &[i64]) -> Self {
        Self::from_dense(
            n,
            counts
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Nonzero `(exponent, coefficient)` pairs in the canonical basis.
    pub fn coefficients(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.conductor != 1 {
            return None;
        }
        Some(
            self.coeffs
                .get(&0)
                .cloned()
                .unwrap_or_else(BigRational::zero),
        )
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(BigRational::is_integer)
            .map(|r| r.to_integer())
    }

    /// True when every canonical coefficient is an integer. Since the basis
    /// is an integral basis this is exactly algebraic integrality.
    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.values().all(BigRational::is_integer)
    }

    /// Dense coefficients over `ζ_n` for a multiple `n` of the conductor.
    pub fn to_dense(&self, n: u64) -> Vec<BigRational> {
        assert_eq!(n % self.conductor, 0);
        let scale = n / self.conductor;
        let mut dense = vec![BigRational::zero(); n as usize];
        for (&j, c) in &self.coeffs {
            dense[(j * scale) as usize] = c.clone();
        }
        dense
    }

    /// Image under `ζ -> ζ^a`.
    ///
    /// # Panics
    /// If `a` is not coprime to the conductor.
    pub fn galois(&self, a: i64) -> Self {
        let n = self.conductor;
        assert!(
            num_integer::Integer::gcd(&a, &(n as i64)) == 1,
            "galois exponent {a} is not coprime to the conductor {n}"
        );
        let mut dense = vec![BigRational::zero(); n as usize];
        for (&j, c) in &self.coeffs {
            let t = (j as i64 * a).rem_euclid(n as i64) as usize;
            dense[t] += c;
        }
        Self::from_dense(n, dense)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, c * r)).collect(),
        }
    }

    /// Image in `F_p` under `ζ_e -> λ`, for `e` a multiple of the conductor
    /// and `λ` of multiplicative order `e` mod `p`. `None` if a denominator
    /// vanishes mod `p`.
    pub fn reduce_mod_p(&self, e: u64, lambda: u64, p: u64) -> Option<u64> {
        assert_eq!(e % self.conductor, 0);
        let root = crate::modp::pow_mod(lambda, e / self.conductor, p);
        let pb = BigInt::from(p);
        let mut acc = 0u64;
        for (&j, c) in &self.coeffs {
            let num = c.numer().mod_floor(&pb).to_u64()?;
            let den = c.denom().mod_floor(&pb).to_u64()?;
            if den == 0 {
                return None;
            }
            let term = num * crate::modp::inv_mod(den, p) % p;
            acc = (acc + term * crate::modp::pow_mod(root, j, p)) % p;
        }
        Some(acc)
    }

    fn combine(&self, other: &Self, sign: i32) -> Self {
        let n = self.conductor.lcm(&other.conductor);
        let mut dense = self.to_dense(n);
        let scale = n / other.conductor;
        for (&j, c) in &other.coeffs {
            let idx = (j * scale) as usize;
            if sign > 0 {
                dense[idx] += c;
            } else {
                dense[idx] -= c;
            }
        }
        Self::from_dense(n, dense)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == 1 && rhs.conductor == 1 {
            let r = self.as_rational().unwrap() + rhs.as_rational().unwrap();
            return Cyclotomic::from_rational(r);
        }
        self.combine(rhs, 1)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.combine(rhs, -1)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale(&r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(&r);
        }
        let n = self.conductor.lcm(&rhs.conductor);
        let (sa, sb) = (n / self.conductor, n / rhs.conductor);
        let mut dense = vec![BigRational::zero(); n as usize];
        for (&i, a) in &self.coeffs {
            for (&j, b) in &rhs.coeffs {
                dense[((i * sa + j * sb) % n) as usize] += a * b;
            }
        }
        Cyclotomic::from_dense(n, dense)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let n = self.conductor;
        for (k, (&j, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "{}", if k == 0 { "-" } else { " - " })?;
            } else if k > 0 {
                write!(f, " + ")?;
            }
            if j == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            match j {
                1 => write!(f, "E({n})")?,
                _ => write!(f, "E({n})^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}
