//! Symmetric-group characters by the Murnaghan–Nakayama rule, computed on
//! beta-sets: removing a rim hook of length `r` moves one bead from `b` to
//! `b - r`, with sign `(-1)^(beads strictly between)`.

use std::collections::HashMap;

use num_integer::Integer;

use super::{Character, CharacterTable};
use crate::conjugacy::ClassTable;
use crate::cyclotomic::Cyclotomic;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub const MAX_DEGREE: usize = 7;

/// Partitions of `n` in decreasing lexicographic order, `[n]` first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn cycle_type_label(parts: &[usize]) -> String {
    let items: Vec<String> = parts.iter().map(usize::to_string).collect();
    format!("[{}]", items.join(","))
}

type Memo = HashMap<(Vec<usize>, usize), i64>;

fn value(shape: &[usize], cycles: &[usize], memo: &mut Memo) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return i64::from(shape.is_empty());
    };
    if let Some(&v) = memo.get(&(shape.to_vec(), cycles.len())) {
        return v;
    }
    let len = shape.len();
    let beads: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &l)| l + len - 1 - i)
        .collect();
    let mut total = 0;
    for &b in &beads {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let between = beads.iter().filter(|&&x| b - r < x && x < b).count();
        let mut moved: Vec<usize> = beads
            .iter()
            .map(|&x| if x == b { b - r } else { x })
            .collect();
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let smaller: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .filter(|&l| l > 0)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * value(&smaller, rest, memo);
    }
    memo.insert((shape.to_vec(), cycles.len()), total);
    total
}

fn class_size(n: usize, cycle_type: &[usize]) -> u64 {
    let mut centralizer: u64 = 1;
    let mut k = 0;
    while k < cycle_type.len() {
        let part = cycle_type[k];
        let mult = cycle_type.iter().filter(|&&x| x == part).count();
        centralizer *= (part as u64).pow(mult as u32) * (1..=mult as u64).product::<u64>();
        k += mult;
    }
    (1..=n as u64).product::<u64>() / centralizer
}

/// Character table of `Sym(n)`, columns keyed by cycle type.
pub fn murnaghan_nakayama(n: usize) -> Result<CharacterTable> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::InvalidInput(format!(
            "Murnaghan-Nakayama oracle supports 1 <= n <= {MAX_DEGREE}, got {n}"
        )));
    }
    let mut types = partitions(n);
    let order_of = |t: &Vec<usize>| t.iter().fold(1u64, |acc, &x| acc.lcm(&(x as u64)));
    types.sort_by(|a, b| {
        (order_of(a), class_size(n, a))
            .cmp(&(order_of(b), class_size(n, b)))
            .then_with(|| b.cmp(a))
    });
    let shapes = partitions(n);
    let identity_type = vec![1; n];
    let mut rows = Vec::with_capacity(shapes.len());
    for shape in &shapes {
        let mut memo = Memo::new();
        let degree = value(shape, &identity_type, &mut memo);
        let values = types
            .iter()
            .map(|t| {
                let mut memo = Memo::new();
                Cyclotomic::from_integer(value(shape, t, &mut memo))
            })
            .collect();
        rows.push(Character {
            degree: degree as u64,
            values,
        });
    }
    let mut ct = CharacterTable {
        group_order: (1..=n as u64).product(),
        class_sizes: types.iter().map(|t| class_size(n, t)).collect(),
        class_orders: types.iter().map(order_of).collect(),
        inverse_class: (0..types.len()).collect(),
        class_labels: types.iter().map(|t| cycle_type_label(t)).collect(),
        rows,
        modular: None,
    };
    ct.sort_rows();
    Ok(ct)
}

/// Result of matching a computed table of `Sym(n)` against the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleDiff {
    /// `column_map[k]` is the oracle column with the cycle type of class `k`.
    pub column_map: Vec<usize>,
    pub only_in_computed: Vec<Vec<Cyclotomic>>,
    pub only_in_oracle: Vec<Vec<Cyclotomic>>,
}

impl OracleDiff {
    pub fn is_empty(&self) -> bool {
        self.only_in_computed.is_empty() && self.only_in_oracle.is_empty()
    }
}

/// Aligns columns by cycle type and compares the two tables as multisets of
/// rows. `group` must be a permutation group of degree `n`.
pub fn compare_with_oracle(
    computed: &CharacterTable,
    group: &FiniteGroup,
    table: &ClassTable,
    n: usize,
) -> Result<OracleDiff> {
    let oracle = murnaghan_nakayama(n)?;
    let mut column_map = Vec::with_capacity(table.len());
    for class in table.classes() {
        let Element::Perm(rep) = group.element(class.representative) else {
            return Err(Error::InvalidInput(
                "oracle comparison needs permutations".into(),
            ));
        };
        if rep.degree() != n {
            return Err(Error::InvalidInput(format!(
                "permutation degree {} differs from {n}",
                rep.degree()
            )));
        }
        let label = cycle_type_label(&rep.cycle_type());
        let col = oracle
            .class_labels
            .iter()
            .position(|l| *l == label)
            .ok_or_else(|| Error::InvalidInput(format!("no oracle class {label}")))?;
        column_map.push(col);
    }
    let mut sorted_map = column_map.clone();
    sorted_map.sort_unstable();
    sorted_map.dedup();
    if sorted_map.len() != oracle.num_classes() || computed.num_classes() != oracle.num_classes() {
        return Err(Error::InvalidInput("class sets do not correspond".into()));
    }
    let aligned: Vec<Vec<Cyclotomic>> = computed
        .rows
        .iter()
        .map(|row| {
            let mut v = vec![Cyclotomic::zero(); oracle.num_classes()];
            for (k, &c) in column_map.iter().enumerate() {
                v[c] = row.values[k].clone();
            }
            v
        })
        .collect();
    let reference: Vec<Vec<Cyclotomic>> = oracle.rows.iter().map(|r| r.values.clone()).collect();
    let mut remaining = reference.clone();
    let mut only_in_computed = Vec::new();
    for row in aligned {
        match remaining.iter().position(|r| *r == row) {
            Some(i) => {
                remaining.swap_remove(i);
            }
            None => only_in_computed.push(row),
        }
    }
    Ok(OracleDiff {
        column_map,
        only_in_computed,
        only_in_oracle: remaining,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn sym2() {
        let ct = murnaghan_nakayama(2).unwrap();
        assert_eq!(ct.degrees(), vec![1, 1]);
        let t = ct.class_labels.iter().position(|l| l == "[2]").unwrap();
        assert_eq!(ct.rows[1].values[t], Cyclotomic::from_integer(-1));
    }

    #[test]
    fn sym5_is_integral() {
        let ct = murnaghan_nakayama(5).unwrap();
        assert_eq!(ct.rows.len(), 7);
        assert_eq!(ct.degrees().iter().map(|d| d * d).sum::<u64>(), 120);
        assert!(ct
            .rows
            .iter()
            .flat_map(|r| &r.values)
            .all(|v| v.as_integer().is_some()));
        assert_eq!(ct.degrees(), vec![1, 1, 4, 4, 5, 5, 6]);
    }

    #[test]
    fn known_values() {
        // χ^(3,1,1): 0 on 3-cycles and 4-cycles, 1 on 5-cycles, -2 on (2,2).
        let v = |t: &[usize]| value(&[3, 1, 1], t, &mut Memo::new());
        assert_eq!(v(&[1, 1, 1, 1, 1]), 6);
        assert_eq!(v(&[3, 1, 1]), 0);
        assert_eq!(v(&[5]), 1);
        assert_eq!(v(&[2, 2, 1]), -2);
        assert_eq!(v(&[4, 1]), 0);
    }

    #[test]
    fn class_sizes_sum() {
        for n in 1..=7 {
            let total: u64 = partitions(n).iter().map(|t| class_size(n, t)).sum();
            assert_eq!(total, (1..=n as u64).product());
        }
    }

    #[test]
    fn out_of_range() {
        assert!(murnaghan_nakayama(0).is_err());
        assert!(murnaghan_nakayama(8).is_err());
    }
}
