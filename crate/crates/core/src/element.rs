//! Concrete group element realizations: permutations and invertible matrices
//! over a prime field.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree - 1}`, stored as its image list.
///
/// Products compose left to right: `(a * b)(i) = b(a(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub const MAX_DEGREE: usize = u16::MAX as usize;

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image list, checking it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > Self::MAX_DEGREE {
            return Err(Error::InvalidInput(format!(
                "unsupported permutation degree {n}"
            )));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInput(format!(
                    "image list {images:?} is not a bijection"
                )));
            }
        }
        Ok(Self {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 || degree > Self::MAX_DEGREE {
            return Err(Error::InvalidInput(format!(
                "unsupported permutation degree {degree}"
            )));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::InvalidInput(format!(
                        "point {a} out of range for degree {degree}"
                    )));
                }
                if std::mem::replace(&mut touched[a], true) {
                    return Err(Error::InvalidInput(format!(
                        "point {a} appears in more than one cycle position"
                    )));
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Self { images: inv.into() }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.image(start);
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.image(j);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths (fixed points included), sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let fixed = self.degree() - self.cycles().iter().map(Vec::len).sum::<usize>();
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.extend(std::iter::repeat_n(1, fixed));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// An `n x n` matrix over `F_p`, entries stored row-major in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldMatrix {
    p: u32,
    n: usize,
    entries: Box<[u32]>,
}

impl PrimeFieldMatrix {
    pub fn new(p: u32, n: usize, entries: Vec<i64>) -> Result<Self> {
        if !(2..(1 << 16)).contains(&p) || !crate::modp::is_prime(p as u64) {
            return Err(Error::UnsupportedModulus(p as u64));
        }
        if n == 0 || entries.len() != n * n {
            return Err(Error::InvalidInput(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        let entries = entries
            .into_iter()
            .map(|x| x.rem_euclid(p as i64) as u32)
            .collect();
        Ok(Self { p, n, entries })
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self {
            p,
            n,
            entries: entries.into(),
        }
    }

    pub(crate) fn from_raw(p: u32, n: usize, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        Self {
            p,
            n,
            entries: entries.into(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[u32] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!((self.p, self.n), (other.p, other.n));
        let (n, p) = (self.n, self.p as u64);
        let mut out = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                out[i * n + j] = (acc % p) as u32;
            }
        }
        Self::from_raw(self.p, n, out)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                out[j * n + i] = self.get(i, j);
            }
        }
        Self::from_raw(self.p, n, out)
    }

    pub fn determinant(&self) -> u32 {
        let rows: Vec<Vec<u64>> = (0..self.n)
            .map(|i| self.row(i).iter().map(|&x| x as u64).collect())
            .collect();
        crate::modp::determinant(rows, self.p as u64) as u32
    }

    pub fn inverse(&self) -> Option<Self> {
        let rows: Vec<Vec<u64>> = (0..self.n)
            .map(|i| self.row(i).iter().map(|&x| x as u64).collect())
            .collect();
        let inv = crate::modp::inverse(rows, self.p as u64)?;
        Some(Self::from_raw(
            self.p,
            self.n,
            inv.into_iter().flatten().map(|x| x as u32).collect(),
        ))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.p, self.n)
    }
}

impl fmt::Display for PrimeFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (k, x) in self.row(i).iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PrimeFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[F{}]{}", self.p, self)
    }
}

/// A group element in one of the supported realizations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Element {
    Perm(Permutation),
    Mat(PrimeFieldMatrix),
}

impl Element {
    /// Canonical byte encoding: a tag byte, the shape parameters, then the data.
    /// Equal elements have equal encodings and vice versa.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        match self {
            Element::Perm(p) => {
                let mut out = Vec::with_capacity(5 + 2 * p.degree());
                out.push(0);
                out.extend_from_slice(&(p.degree() as u32).to_be_bytes());
                for i in p.images.iter() {
                    out.extend_from_slice(&i.to_be_bytes());
                }
                out
            }
            Element::Mat(m) => {
                let mut out = Vec::with_capacity(9 + 2 * m.entries.len());
                out.push(1);
                out.extend_from_slice(&m.p.to_be_bytes());
                out.extend_from_slice(&(m.n as u32).to_be_bytes());
                for &x in m.entries.iter() {
                    out.extend_from_slice(&(x as u16).to_be_bytes());
                }
                out
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Element::Perm(a), Element::Perm(b)) => Element::Perm(a.compose(b)),
            (Element::Mat(a), Element::Mat(b)) => Element::Mat(a.mul(b)),
            _ => panic!("multiplying elements of different realizations"),
        }
    }

    /// Inverse; `None` only for a singular matrix.
    pub fn inverse(&self) -> Option<Self> {
        match self {
            Element::Perm(p) => Some(Element::Perm(p.inverse())),
            Element::Mat(m) => m.inverse().map(Element::Mat),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Element::Perm(p) => p.is_identity(),
            Element::Mat(m) => m.is_identity(),
        }
    }

    /// Identity of the same realization and shape.
    pub fn identity_like(&self) -> Self {
        match self {
            Element::Perm(p) => Element::Perm(Permutation::identity(p.degree())),
            Element::Mat(m) => Element::Mat(PrimeFieldMatrix::identity(m.p, m.n)),
        }
    }

    pub(crate) fn same_kind(&self, other: &Self) -> bool {
        match (self, other) {
            (Element::Perm(a), Element::Perm(b)) => a.degree() == b.degree(),
            (Element::Mat(a), Element::Mat(b)) => a.p == b.p && a.n == b.n,
            _ => false,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Perm(p) => p.fmt(f),
            Element::Mat(m) => m.fmt(f),
        }
    }
}

impl From<Permutation> for Element {
    fn from(p: Permutation) -> Self {
        Element::Perm(p)
    }
}

impl From<PrimeFieldMatrix> for Element {
    fn from(m: PrimeFieldMatrix) -> Self {
        Element::Mat(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = Permutation::from_cycles(6, &[vec![0, 3], vec![1, 2, 5]]).unwrap();
        assert_eq!(p.to_string(), "(0 3)(1 2 5)");
        assert_eq!(p.cycle_type(), vec![3, 2, 1]);
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        // 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1
        assert_eq!(a.compose(&b).to_string(), "(0 2 1)");
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(Permutation::from_cycles(3, &[vec![0, 3]]).is_err());
        assert!(Permutation::from_cycles(4, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn matrix_inverse_and_det() {
        let m = PrimeFieldMatrix::new(5, 2, vec![1, 2, 3, 4]).unwrap();
        assert_eq!(m.determinant(), (4 + 5 * 5 - 6) % 5);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let singular = PrimeFieldMatrix::new(5, 2, vec![1, 2, 2, 4]).unwrap();
        assert_eq!(singular.determinant(), 0);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn canonical_bytes_distinguish_realizations() {
        let p: Element = Permutation::identity(2).into();
        let m: Element = PrimeFieldMatrix::identity(3, 2).into();
        assert_ne!(p.canonical_bytes(), m.canonical_bytes());
        assert_eq!(p.canonical_bytes(), p.clone().canonical_bytes());
    }
}
