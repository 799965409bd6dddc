//! Conjugacy classes, class membership, and power maps.

use crate::group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub id: usize,
    /// Least element index in the class.
    pub representative: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
    pub centralizer_order: usize,
    pub element_order: u64,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Conjugacy classes of an enumerated group, ordered by
/// (element order, class size, representative index).
#[derive(Clone, Debug)]
pub struct ClassTable {
    group_order: usize,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    // powers[c][j] = class of rep(c)^j for 0 <= j < element order
    powers: Vec<Vec<usize>>,
}

impl ClassTable {
    /// Orbits of conjugation by the generators. Since the generators generate
    /// the group these are exactly the conjugacy classes.
    pub fn new(group: &FiniteGroup) -> Self {
        let n = group.order();
        let actions: Vec<Vec<usize>> = group
            .generator_indices()
            .iter()
            .map(|&g| group.conjugation_action(g))
            .collect();
        let mut seen = vec![false; n];
        let mut raw: Vec<(u64, Vec<usize>)> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for act in &actions {
                    let y = act[x];
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            let order = group.element_order(start).expect("valid index");
            raw.push((order, orbit));
        }
        raw.sort_by(|a, b| (a.0, a.1.len(), a.1[0]).cmp(&(b.0, b.1.len(), b.1[0])));

        let mut class_of = vec![0usize; n];
        let classes: Vec<ConjugacyClass> = raw
            .into_iter()
            .enumerate()
            .map(|(id, (element_order, members))| {
                for &m in &members {
                    class_of[m] = id;
                }
                ConjugacyClass {
                    id,
                    representative: members[0],
                    centralizer_order: n / members.len(),
                    members,
                    element_order,
                }
            })
            .collect();
        let powers = classes
            .iter()
            .map(|c| {
                let mut out = Vec::with_capacity(c.element_order as usize);
                let mut x = 0usize;
                for _ in 0..c.element_order {
                    out.push(class_of[x]);
                    x = group.mult(x, c.representative);
                }
                out
            })
            .collect();
        Self {
            group_order: n,
            classes,
            class_of,
            powers,
        }
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &ConjugacyClass {
        &self.classes[id]
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjugacyClass::size).collect()
    }

    /// Class of `g^k` for `g` in class `c`.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        let ord = self.classes[c].element_order as i64;
        self.powers[c][k.rem_euclid(ord) as usize]
    }

    /// The map `class(g) -> class(g^k)`.
    pub fn power_map(&self, k: i64) -> Vec<usize> {
        (0..self.len()).map(|c| self.power_class(c, k)).collect()
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.power_class(c, -1)
    }

    pub fn inverse_classes(&self) -> Vec<usize> {
        self.power_map(-1)
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.classes
            .iter()
            .map(|c| c.element_order)
            .fold(1, num_integer::lcm)
    }

    pub fn classes_of_element_order(&self, m: u64) -> Vec<usize> {
        self.classes
            .iter()
            .filter(|c| c.element_order == m)
            .map(|c| c.id)
            .collect()
    }

    pub fn is_real(&self, c: usize) -> bool {
        self.inverse_class(c) == c
    }

    /// Atlas-style name: element order followed by a letter counting the
    /// classes of that order in table order (`2A`, `2B`, ...).
    pub fn class_name(&self, c: usize) -> String {
        let order = self.classes[c].element_order;
        let pos = self.classes[..c]
            .iter()
            .filter(|k| k.element_order == order)
            .count();
        let mut letters = String::new();
        let mut i = pos;
        loop {
            letters.insert(0, (b'A' + (i % 26) as u8) as char);
            if i < 26 {
                break;
            }
            i = i / 26 - 1;
        }
        format!("{order}{letters}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{Element, Permutation};
    use crate::group::{closure_enumerate, DEFAULT_CAP};

    fn perm(deg: usize, cycles: &[&[usize]]) -> Element {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(deg, &cycles).unwrap().into()
    }

    #[test]
    fn sym5_classes() {
        let g = closure_enumerate(
            &[perm(5, &[&[0, 1]]), perm(5, &[&[0, 1, 2, 3, 4]])],
            DEFAULT_CAP,
        )
        .unwrap();
        let t = ClassTable::new(&g);
        assert_eq!(t.len(), 7);
        let mut sizes = t.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 10, 15, 20, 20, 24, 30]);
        assert_eq!(t.exponent(), 60);

        let order5 = t.classes_of_element_order(5);
        assert_eq!(order5.len(), 1);
        assert_eq!(t.class(order5[0]).size(), 24);
        let order2: Vec<usize> = t
            .classes_of_element_order(2)
            .iter()
            .map(|&c| t.class(c).size())
            .collect();
        assert_eq!(order2, vec![10, 15]);
        assert!(t.classes_of_element_order(7).is_empty());

        let four = t.classes_of_element_order(4)[0];
        let sq = t.power_class(four, 2);
        assert_eq!(t.class(sq).size(), 15);
        assert_eq!(t.power_map(1), (0..7).collect::<Vec<_>>());
        // every class of a symmetric group is real
        assert_eq!(t.inverse_classes(), t.power_map(1));
    }

    #[test]
    fn alt5_classes() {
        let g = closure_enumerate(
            &[
                perm(5, &[&[0, 1, 2]]),
                perm(5, &[&[0, 1, 3]]),
                perm(5, &[&[0, 1, 4]]),
            ],
            DEFAULT_CAP,
        )
        .unwrap();
        assert_eq!(g.order(), 60);
        let t = ClassTable::new(&g);
        assert_eq!(t.sizes(), vec![1, 15, 20, 12, 12]);
        let names: Vec<String> = (0..t.len()).map(|c| t.class_name(c)).collect();
        assert_eq!(names, vec!["1A", "2A", "3A", "5A", "5B"]);
    }

    #[test]
    fn cyclic_inverse_classes_are_not_real() {
        let g = closure_enumerate(&[perm(3, &[&[0, 1, 2]])], DEFAULT_CAP).unwrap();
        let t = ClassTable::new(&g);
        assert_eq!(t.len(), 3);
        assert_eq!(t.inverse_class(1), 2);
        assert!(!t.is_real(1));
        assert!(t.is_real(0));
    }
}
