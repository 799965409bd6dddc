//! Fully enumerated finite groups with index-based arithmetic.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use crate::conjugacy::ClassTable;
use crate::element::Element;
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 2_000_000;

/// Groups up to this order memoize products row by row.
const MEMO_LIMIT: usize = 2048;

/// A finite group with every element listed. Element `0` is the identity and
/// all arithmetic after construction is by element index.
pub struct FiniteGroup {
    generators: Vec<Element>,
    generator_indices: Vec<usize>,
    elements: Vec<Element>,
    lookup: HashMap<Element, usize>,
    inverse: Vec<usize>,
    rows: Vec<OnceLock<Box<[u32]>>>,
}

/// Closure of `gens` under multiplication, enumerated breadth-first from the
/// identity. Generators are sorted by canonical encoding first, so the element
/// order depends only on the generator set.
pub fn closure_enumerate(gens: &[Element], cap: usize) -> Result<FiniteGroup> {
    let first = gens
        .first()
        .ok_or_else(|| Error::InvalidInput("empty generator list".into()))?;
    if let Some(bad) = gens.iter().find(|g| !g.same_kind(first)) {
        return Err(Error::IncompatibleGenerators(format!("{first} vs {bad}")));
    }
    for g in gens {
        if let Element::Mat(m) = g {
            if m.determinant() == 0 {
                return Err(Error::SingularMatrix(m.to_string()));
            }
        }
    }
    let mut sorted: Vec<Element> = gens.to_vec();
    sorted.sort_by_cached_key(Element::canonical_bytes);
    sorted.dedup();

    let identity = first.identity_like();
    let mut elements = vec![identity.clone()];
    let mut lookup = HashMap::from([(identity, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for g in &sorted {
            let y = elements[x].mul(g);
            if !lookup.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap: cap as u64 });
                }
                lookup.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
    }
    Ok(FiniteGroup::assemble(sorted, elements, lookup))
}

/// Element counts of a group fingerprint: order, sorted class sizes, and the
/// number of elements of each order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub order_profile: Vec<(u64, usize)>,
}

impl FiniteGroup {
    fn assemble(
        generators: Vec<Element>,
        elements: Vec<Element>,
        lookup: HashMap<Element, usize>,
    ) -> Self {
        let inverse = elements
            .iter()
            .map(|e| {
                let inv = e.inverse().expect("group elements are invertible");
                lookup[&inv]
            })
            .collect();
        let generator_indices = generators.iter().map(|g| lookup[g]).collect();
        let rows = if elements.len() <= MEMO_LIMIT {
            (0..elements.len()).map(|_| OnceLock::new()).collect()
        } else {
            Vec::new()
        };
        Self {
            generators,
            generator_indices,
            elements,
            lookup,
            inverse,
            rows,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &Element) -> Option<usize> {
        self.lookup.get(e).copied()
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.order() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                order: self.order(),
            })
        }
    }

    fn product_row(&self, i: usize) -> Box<[u32]> {
        let a = &self.elements[i];
        self.elements
            .iter()
            .map(|b| self.lookup[&a.mul(b)] as u32)
            .collect()
    }

    pub fn mult(&self, i: usize, j: usize) -> usize {
        if self.rows.is_empty() {
            self.lookup[&self.elements[i].mul(&self.elements[j])]
        } else {
            self.rows[i].get_or_init(|| self.product_row(i))[j] as usize
        }
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// `i^k` for any integer `k`.
    pub fn pow(&self, i: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(i) } else { i };
        let mut e = k.unsigned_abs();
        let (mut acc, mut b) = (0usize, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mult(acc, b);
            }
            b = self.mult(b, b);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mult(self.mult(self.inv(g), x), g)
    }

    /// The permutation `x -> g^-1 x g` of element indices.
    pub fn conjugation_action(&self, g: usize) -> Vec<usize> {
        let ginv = &self.elements[self.inv(g)];
        let gel = &self.elements[g];
        self.elements
            .iter()
            .map(|x| self.lookup[&ginv.mul(x).mul(gel)])
            .collect()
    }

    pub fn element_order(&self, i: usize) -> Result<u64> {
        self.check_index(i)?;
        let mut x = i;
        let mut k = 1;
        while x != 0 {
            x = self.mult(x, i);
            k += 1;
        }
        Ok(k)
    }

    pub fn centralizer(&self, i: usize) -> Result<Vec<usize>> {
        self.check_index(i)?;
        Ok((0..self.order())
            .filter(|&j| self.mult(j, i) == self.mult(i, j))
            .collect())
    }

    /// Sorted index set of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<Vec<usize>> {
        for &g in gens {
            self.check_index(g)?;
        }
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut members = vec![0usize];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in gens {
                let y = self.mult(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        Ok(members)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mult(a, b);
        let ba = self.mult(b, a);
        self.mult(self.inv(ba), ab)
    }

    /// The commutator subgroup, as the normal closure of the commutators of
    /// the generators.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let gens = &self.generator_indices;
        let mut sub_gens: Vec<usize> = Vec::new();
        for &a in gens {
            for &b in gens {
                let c = self.commutator(a, b);
                if c != 0 && !sub_gens.contains(&c) {
                    sub_gens.push(c);
                }
            }
        }
        loop {
            let members = self.subgroup_generated(&sub_gens).expect("valid indices");
            let mut inside = vec![false; self.order()];
            for &m in &members {
                inside[m] = true;
            }
            let escaped = sub_gens
                .iter()
                .flat_map(|&h| gens.iter().map(move |&g| (h, g)))
                .map(|(h, g)| self.conjugate(h, g))
                .find(|&c| !inside[c]);
            match escaped {
                Some(c) => sub_gens.push(c),
                None => return members,
            }
        }
    }

    /// A new group built from the realizations of the given elements.
    pub fn subgroup_as_group(&self, gens: &[usize]) -> Result<FiniteGroup> {
        for &g in gens {
            self.check_index(g)?;
        }
        let mut els: Vec<Element> = gens.iter().map(|&g| self.elements[g].clone()).collect();
        if els.is_empty() {
            els.push(self.elements[0].clone());
        }
        closure_enumerate(&els, self.order().max(1))
    }

    /// Greedy generating set drawn from `members` in the order given: an
    /// element is kept whenever it is outside the subgroup generated so far.
    pub fn greedy_generators(&self, members: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut covered = 1;
        for &m in members {
            if covered == members.len() {
                break;
            }
            if !inside[m] {
                gens.push(m);
                let sub = self.subgroup_generated(&gens).expect("valid indices");
                covered = sub.len();
                for s in sub {
                    inside[s] = true;
                }
            }
        }
        gens
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let table = ClassTable::new(self);
        let mut class_sizes: Vec<usize> = table.classes().iter().map(|c| c.size()).collect();
        class_sizes.sort_unstable();
        let mut profile: Vec<(u64, usize)> = Vec::new();
        for c in table.classes() {
            match profile.iter_mut().find(|(o, _)| *o == c.element_order) {
                Some(entry) => entry.1 += c.size(),
                None => profile.push((c.element_order, c.size())),
            }
        }
        profile.sort_unstable();
        Fingerprint {
            order: self.order(),
            class_sizes,
            order_profile: profile,
        }
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Permutation;

    fn perm(deg: usize, cycles: &[&[usize]]) -> Element {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(deg, &cycles).unwrap().into()
    }

    fn sym5() -> FiniteGroup {
        closure_enumerate(
            &[perm(5, &[&[0, 1]]), perm(5, &[&[0, 1, 2, 3, 4]])],
            DEFAULT_CAP,
        )
        .unwrap()
    }

    #[test]
    fn sym5_order() {
        let g = sym5();
        assert_eq!(g.order(), 120);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn cyclic_three() {
        let g = closure_enumerate(&[perm(3, &[&[0, 1, 2]])], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 3);
        let gen = g.generator_indices()[0];
        assert_eq!(g.mult(gen, gen), g.inv(gen));
    }

    #[test]
    fn cap_and_compatibility_errors() {
        let gens = [perm(5, &[&[0, 1]]), perm(5, &[&[0, 1, 2, 3, 4]])];
        assert_eq!(
            closure_enumerate(&gens, 100).unwrap_err(),
            Error::CapExceeded { cap: 100 }
        );
        let mixed = [perm(3, &[&[0, 1]]), perm(4, &[&[0, 1]])];
        assert!(matches!(
            closure_enumerate(&mixed, 10),
            Err(Error::IncompatibleGenerators(_))
        ));
        let singular = crate::element::PrimeFieldMatrix::new(5, 2, vec![1, 2, 2, 4]).unwrap();
        assert!(matches!(
            closure_enumerate(&[singular.into()], 10),
            Err(Error::SingularMatrix(_))
        ));
    }

    #[test]
    fn orders_and_centralizers() {
        let g = sym5();
        let t = g.index_of(&perm(5, &[&[0, 1]])).unwrap();
        let dt = g.index_of(&perm(5, &[&[0, 1], &[2, 3]])).unwrap();
        let five = g.index_of(&perm(5, &[&[0, 1, 2, 3, 4]])).unwrap();
        assert_eq!(g.element_order(0).unwrap(), 1);
        assert_eq!(g.element_order(dt).unwrap(), 2);
        assert_eq!(g.element_order(five).unwrap(), 5);
        assert_eq!(g.centralizer(0).unwrap().len(), 120);
        assert_eq!(g.centralizer(t).unwrap().len(), 12);
        assert_eq!(g.centralizer(five).unwrap().len(), 5);
        assert!(g.element_order(120).is_err());
        assert!(g.centralizer(500).is_err());
    }

    #[test]
    fn generated_subgroups() {
        let g = sym5();
        let t = g.index_of(&perm(5, &[&[0, 1]])).unwrap();
        let five = g.index_of(&perm(5, &[&[0, 1, 2, 3, 4]])).unwrap();
        assert_eq!(g.subgroup_generated(&[0]).unwrap(), vec![0]);
        assert_eq!(g.subgroup_generated(&[t, five]).unwrap().len(), 120);
        assert_eq!(g.subgroup_generated(&[five]).unwrap().len(), 5);
        assert!(g.subgroup_generated(&[999]).is_err());
    }

    #[test]
    fn derived_subgroups() {
        let g = sym5();
        assert_eq!(g.derived_subgroup().len(), 60);
        let c6 = closure_enumerate(&[perm(6, &[&[0, 1, 2, 3, 4, 5]])], DEFAULT_CAP).unwrap();
        assert_eq!(c6.derived_subgroup(), vec![0]);
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let g = sym5();
        let five = g.index_of(&perm(5, &[&[0, 1, 2, 3, 4]])).unwrap();
        assert_eq!(g.pow(five, -1), g.inv(five));
        assert_eq!(g.pow(five, 5), 0);
        assert_eq!(g.pow(five, 0), 0);
        assert_eq!(g.pow(five, 7), g.pow(five, 2));
    }

    #[test]
    fn fingerprints() {
        let fp = sym5().fingerprint();
        assert_eq!(fp.order, 120);
        assert_eq!(fp.class_sizes, vec![1, 10, 15, 20, 20, 24, 30]);
        assert_eq!(
            fp.order_profile,
            vec![(1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20)]
        );
        let c4 = closure_enumerate(&[perm(4, &[&[0, 1, 2, 3]])], 100).unwrap();
        let v4 = closure_enumerate(&[perm(4, &[&[0, 1]]), perm(4, &[&[2, 3]])], 100).unwrap();
        assert_eq!(c4.order(), v4.order());
        assert_ne!(
            c4.fingerprint().order_profile,
            v4.fingerprint().order_profile
        );
    }
}
