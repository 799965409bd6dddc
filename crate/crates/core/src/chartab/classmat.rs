use rayon::prelude::*;

use crate::conjugacy::ClassTable;
use crate::group::FiniteGroup;

/// Structure constants of the class algebra for one class `j`:
/// `entries[i][k] = #{(x, y) ∈ C_j × C_i : x·y = rep_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMatrix {
    pub j: usize,
    pub entries: Vec<Vec<u64>>,
}

impl ClassMatrix {
    /// `Σ_k entries[i][k]·|C_k| = |C_i|·|C_j|` for every row `i`.
    pub fn satisfies_row_sums(&self, sizes: &[usize]) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            let lhs: u64 = row.iter().zip(sizes).map(|(&a, &s)| a * s as u64).sum();
            lhs == (sizes[i] * sizes[self.j]) as u64
        })
    }
}

pub fn class_matrices(table: &ClassTable, group: &FiniteGroup) -> Vec<ClassMatrix> {
    let r = table.len();
    (0..r)
        .into_par_iter()
        .map(|j| {
            let mut entries = vec![vec![0u64; r]; r];
            for (k, target) in table.classes().iter().enumerate() {
                let z = target.representative;
                for &x in &table.class(j).members {
                    let y = group.mult(group.inv(x), z);
                    entries[table.class_of(y)][k] += 1;
                }
            }
            ClassMatrix { j, entries }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupspec::parse_group_spec;

    #[test]
    fn sym3_transposition_matrix() {
        let g = parse_group_spec("Sym(3)").unwrap().build(100).unwrap();
        let t = ClassTable::new(&g);
        // classes: e, transpositions, 3-cycles
        assert_eq!(t.sizes(), vec![1, 3, 2]);
        let mats = class_matrices(&t, &g);
        assert_eq!(mats[1].entries[1], vec![3, 0, 3]);
        for m in &mats {
            assert!(m.satisfies_row_sums(&t.sizes()));
        }
    }

    #[test]
    fn identity_class_matrix_is_the_identity() {
        let g = parse_group_spec("Alt(5)").unwrap().build(100).unwrap();
        let t = ClassTable::new(&g);
        let m = &class_matrices(&t, &g)[0];
        for (i, row) in m.entries.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(v, u64::from(i == k));
            }
        }
    }
}
