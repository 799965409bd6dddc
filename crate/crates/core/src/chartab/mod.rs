//! Exact complex character tables.
//!
//! [`character_table`] runs Dixon–Schneider on an enumerated group;
//! [`murnaghan_nakayama`] builds symmetric-group tables combinatorially and
//! serves as an independent check.

mod classmat;
mod dixon;
mod mn;

pub use classmat::{class_matrices, ClassMatrix};
pub use dixon::{character_table, character_table_with_prime};
pub use mn::{compare_with_oracle, cycle_type_label, murnaghan_nakayama, partitions, OracleDiff};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclotomic::Cyclotomic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub degree: u64,
    /// Indexed by class id.
    pub values: Vec<Cyclotomic>,
}

/// Data the lifted values were recovered from: the prime, the root `λ`
/// standing in for `ζ_e`, and the mod-`p` character values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularData {
    pub prime: u64,
    pub exponent: u64,
    pub root: u64,
    /// `values[row][class]`, rows in the same order as the table.
    pub values: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub group_order: u64,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u64>,
    pub inverse_class: Vec<usize>,
    pub class_labels: Vec<String>,
    pub rows: Vec<Character>,
    pub modular: Option<ModularData>,
}

fn sort_key(c: &Character) -> (u64, bool, Vec<Cyclotomic>) {
    let trivial = c.values.iter().all(|v| *v == Cyclotomic::one());
    (c.degree, !trivial, c.values.clone())
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.degree).collect()
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.rows[row].values[class]
    }

    /// Orders rows by degree, trivial character first, then by values.
    pub(crate) fn sort_rows(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_cached_key(|&i| sort_key(&self.rows[i]));
        self.rows = order.iter().map(|&i| self.rows[i].clone()).collect();
        if let Some(m) = &mut self.modular {
            m.values = order.iter().map(|&i| m.values[i].clone()).collect();
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthogonalityKind {
    Row,
    Column,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: OrthogonalityKind,
    pub first: usize,
    pub second: usize,
    pub computed: Cyclotomic,
    pub expected: Cyclotomic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub row_pairs_checked: usize,
    pub column_pairs_checked: usize,
    pub first_violation: Option<Violation>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks both orthogonality relations exactly and stops at the first
/// violating pair:
/// `Σ_k |C_k| χ(g_k) ψ(g_k⁻¹) = |G|·[χ = ψ]` and
/// `Σ_χ χ(g_k) conj(χ(g_l)) = [k = l]·|C_G(g_k)|`.
pub fn verify_orthogonality(ct: &CharacterTable) -> OrthogonalityReport {
    let mut report = OrthogonalityReport {
        row_pairs_checked: 0,
        column_pairs_checked: 0,
        first_violation: None,
    };
    let r = ct.num_classes();
    let sizes: Vec<BigRational> = ct
        .class_sizes
        .iter()
        .map(|&s| BigRational::from_integer(BigInt::from(s)))
        .collect();
    for a in 0..ct.rows.len() {
        for b in a..ct.rows.len() {
            report.row_pairs_checked += 1;
            let sum: Cyclotomic = (0..r)
                .map(|k| {
                    let prod = ct.value(a, k) * ct.value(b, ct.inverse_class[k]);
                    prod.scale(&sizes[k])
                })
                .sum();
            let expected = Cyclotomic::from_integer(if a == b { ct.group_order as i64 } else { 0 });
            if sum != expected {
                report.first_violation = Some(Violation {
                    kind: OrthogonalityKind::Row,
                    first: a,
                    second: b,
                    computed: sum,
                    expected,
                });
                return report;
            }
        }
    }
    for k in 0..r {
        for l in k..r {
            report.column_pairs_checked += 1;
            let sum: Cyclotomic = ct
                .rows
                .iter()
                .map(|row| &row.values[k] * &row.values[l].conj())
                .sum();
            let expected = Cyclotomic::from_integer(if k == l {
                (ct.group_order / ct.class_sizes[k]) as i64
            } else {
                0
            });
            if sum != expected {
                report.first_violation = Some(Violation {
                    kind: OrthogonalityKind::Column,
                    first: k,
                    second: l,
                    computed: sum,
                    expected,
                });
                return report;
            }
        }
    }
    report
}
