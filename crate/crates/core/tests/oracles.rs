//! Engines checked against direct, deliberately naive computations.

use std::collections::BTreeSet;

use rigid_core::chartab::character_table;
use rigid_core::counting::{
    class_algebra_constant, enumerate_solutions, frobenius_count, ClassTuple,
};
use rigid_core::so3::so3_matrices;
use rigid_core::{
    omega3_enumerate, parse_group_spec, so3_enumerate, ClassTable, FiniteGroup, DEFAULT_CAP,
};

fn group(spec: &str) -> FiniteGroup {
    parse_group_spec(spec).unwrap().build(DEFAULT_CAP).unwrap()
}

const Q8: &str = "Mat(3, 2; [0 2 1 0], [1 1 1 2])";

/// Conjugacy classes by conjugating with every element.
fn naive_classes(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    (0..g.order())
        .map(|x| {
            let class: BTreeSet<usize> = (0..g.order()).map(|h| g.conjugate(x, h)).collect();
            class.into_iter().collect()
        })
        .collect()
}

#[test]
fn classes_match_full_conjugation() {
    for spec in ["Sym(4)", "Alt(5)", "Dih(5)", "Cyc(6)", Q8, "SO3(3)"] {
        let g = group(spec);
        let t = ClassTable::new(&g);
        let ours: BTreeSet<Vec<usize>> = t.classes().iter().map(|c| c.members.clone()).collect();
        assert_eq!(ours, naive_classes(&g), "{spec}");
    }
}

#[test]
fn element_orders_by_repeated_multiplication() {
    for spec in ["Sym(5)", Q8, "Dih(6)"] {
        let g = group(spec);
        for x in 0..g.order() {
            let mut y = x;
            let mut k = 1;
            while y != g.identity() {
                y = g.mult(y, x);
                k += 1;
            }
            assert_eq!(g.element_order(x).unwrap(), k, "{spec}");
        }
    }
}

#[test]
fn constructor_orders() {
    let fact = |n: usize| (1..=n).product::<usize>();
    for n in 1..=6 {
        assert_eq!(group(&format!("Sym({n})")).order(), fact(n));
        assert_eq!(
            group(&format!("Alt({n})")).order(),
            fact(n).div_ceil(2).max(1)
        );
        assert_eq!(group(&format!("Cyc({n})")).order(), n);
        assert_eq!(group(&format!("Dih({n})")).order(), 2 * n);
    }
    assert_eq!(group(Q8).order(), 8);
    // |SO3(p)| = p(p^2 - 1)
    for p in [3u32, 5, 7] {
        let p = p as usize;
        assert_eq!(so3_enumerate(p as u32).unwrap().order(), p * (p * p - 1));
    }
    assert_eq!(omega3_enumerate(5).unwrap().order(), 60);
}

/// SO3(5) by a flat scan over all 5^9 matrices.
#[test]
fn so3_5_flat_scan() {
    let p = 5i64;
    let mut found: Vec<[i64; 9]> = Vec::new();
    for code in 0..p.pow(9) {
        let mut m = [0i64; 9];
        let mut c = code;
        for slot in m.iter_mut().rev() {
            *slot = c % p;
            c /= p;
        }
        let orthogonal = (0..3).all(|i| {
            (0..3).all(|j| {
                let dot: i64 = (0..3).map(|k| m[3 * i + k] * m[3 * j + k]).sum();
                dot % p == i64::from(i == j)
            })
        });
        if !orthogonal {
            continue;
        }
        let det = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6])
            + m[2] * (m[3] * m[7] - m[4] * m[6]);
        if det.rem_euclid(p) == 1 {
            found.push(m);
        }
    }
    assert_eq!(found.len(), 120);
    let ours: Vec<[i64; 9]> = so3_matrices(5)
        .unwrap()
        .iter()
        .map(|m| {
            let mut a = [0i64; 9];
            for (k, slot) in a.iter_mut().enumerate() {
                *slot = i64::from(m.get(k / 3, k % 3));
            }
            a
        })
        .collect();
    let a: BTreeSet<_> = found.into_iter().collect();
    let b: BTreeSet<_> = ours.into_iter().collect();
    assert_eq!(a, b);
}

/// Closure of all commutators of all pairs.
fn naive_derived(g: &FiniteGroup) -> Vec<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::new();
    for a in 0..g.order() {
        for b in 0..g.order() {
            set.insert(g.commutator(a, b));
        }
    }
    loop {
        let items: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &x in &items {
            for &y in &items {
                set.insert(g.mult(x, y));
            }
        }
        if set.len() == before {
            return set.into_iter().collect();
        }
    }
}

#[test]
fn derived_subgroups() {
    for (spec, order) in [
        ("Sym(4)", 12),
        ("Alt(4)", 4),
        ("Sym(5)", 60),
        ("Dih(4)", 2),
        ("Cyc(7)", 1),
        (Q8, 2),
    ] {
        let g = group(spec);
        let d = g.derived_subgroup();
        assert_eq!(d.len(), order, "{spec}");
        assert_eq!(d, naive_derived(&g), "{spec}");
    }
    let so3 = so3_enumerate(5).unwrap();
    assert_eq!(so3.derived_subgroup(), naive_derived(&so3));
}

/// Count of `x_1 ⋯ x_s = 1` over the full product of classes.
fn naive_count(g: &FiniteGroup, t: &ClassTable, tuple: &[usize]) -> u128 {
    fn go(g: &FiniteGroup, t: &ClassTable, tuple: &[usize], acc: usize) -> u128 {
        match tuple.split_first() {
            None => u128::from(acc == g.identity()),
            Some((&c, rest)) => t
                .class(c)
                .members
                .iter()
                .map(|&x| go(g, t, rest, g.mult(acc, x)))
                .sum(),
        }
    }
    go(g, t, tuple, g.identity())
}

#[test]
fn frobenius_triples_against_naive_product() {
    for spec in [
        "Sym(3)", "Sym(4)", "Alt(4)", "Dih(4)", "Dih(5)", "Cyc(5)", "Cyc(6)", Q8,
    ] {
        let g = group(spec);
        let t = ClassTable::new(&g);
        let ct = character_table(&g, &t).unwrap();
        let r = t.len();
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    let tuple = [x, y, z];
                    let expected = naive_count(&g, &t, &tuple);
                    let ct_tuple = ClassTuple::new(tuple.to_vec());
                    assert_eq!(
                        frobenius_count(&ct, &ct_tuple).unwrap(),
                        expected,
                        "{spec} {tuple:?}"
                    );
                    let brute = enumerate_solutions(&g, &t, &ct_tuple, u64::MAX).unwrap();
                    assert_eq!(brute.len() as u128, expected, "{spec} {tuple:?}");
                }
            }
        }
    }
}

#[test]
fn frobenius_longer_tuples() {
    for spec in ["Sym(3)", Q8, "Dih(4)"] {
        let g = group(spec);
        let t = ClassTable::new(&g);
        let ct = character_table(&g, &t).unwrap();
        let r = t.len();
        for code in 0..r.pow(4) {
            let tuple: Vec<usize> = (0..4).map(|k| code / r.pow(k) % r).collect();
            let expected = naive_count(&g, &t, &tuple);
            let ct_tuple = ClassTuple::new(tuple.clone());
            assert_eq!(
                frobenius_count(&ct, &ct_tuple).unwrap(),
                expected,
                "{spec} {tuple:?}"
            );
        }
        assert!(frobenius_count(&ct, &ClassTuple::new(vec![0])).is_err());
    }
}

/// `a_xyz = #{(a, b) ∈ C_x × C_y : a b z0 = 1}` for the representative `z0`.
#[test]
fn class_algebra_constants_by_definition() {
    for spec in ["Sym(4)", "Alt(5)", Q8] {
        let g = group(spec);
        let t = ClassTable::new(&g);
        let ct = character_table(&g, &t).unwrap();
        let r = t.len();
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    let z0 = t.class(z).representative;
                    let mut n = 0u128;
                    for &a in &t.class(x).members {
                        for &b in &t.class(y).members {
                            if g.mult(g.mult(a, b), z0) == g.identity() {
                                n += 1;
                            }
                        }
                    }
                    assert_eq!(class_algebra_constant(&ct, x, y, z).unwrap(), n, "{spec}");
                }
            }
        }
    }
}

/// (2,4,5)-triples of Sym(5) by scanning every pair of elements.
#[test]
fn sym5_245_census_by_pairs() {
    let g = group("Sym(5)");
    let mut count = 0;
    for x in 0..g.order() {
        if g.element_order(x).unwrap() != 2 {
            continue;
        }
        for y in 0..g.order() {
            if g.element_order(y).unwrap() != 4 {
                continue;
            }
            let z = g.inv(g.mult(x, y));
            if g.element_order(z).unwrap() == 5 {
                count += 1;
                assert_eq!(g.subgroup_generated(&[x, y]).unwrap().len(), 120);
            }
        }
    }
    assert_eq!(count, 120);
}

#[test]
fn so3_5_has_the_sym5_fingerprint() {
    let so3 = so3_enumerate(5).unwrap();
    assert_eq!(so3.fingerprint(), group("Sym(5)").fingerprint());
}
