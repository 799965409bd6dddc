//! Dixon–Schneider: common eigenvectors of the class matrices over `F_p`
//! give the central characters mod `p`; degrees follow from orthogonality and
//! values are lifted to cyclotomic integers through eigenvalue multiplicities.

use num_integer::Roots;
use rayon::prelude::*;

use super::{class_matrices, Character, CharacterTable, ModularData};
use crate::conjugacy::ClassTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::modp::{
    dixon_prime, inv_mod, least_root_of_unity, next_dixon_prime, nullspace, pow_mod, rref,
};

const MAX_RETRIES: usize = 3;

/// A subspace of `F_p^r` held as RREF basis rows.
struct Subspace {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn new(vectors: Vec<Vec<u64>>, p: u64) -> Self {
        let (basis, pivots) = rref(vectors, p);
        Self { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Splits this (invariant) subspace into eigenspaces of `m`, ordered by
    /// eigenvalue. `None` if the restriction is not diagonalizable over `F_p`.
    fn split(&self, m: &[Vec<u64>], p: u64) -> Option<Vec<Subspace>> {
        let d = self.dim();
        let images: Vec<Vec<u64>> = self
            .basis
            .iter()
            .map(|b| {
                m.iter()
                    .map(|row| row.iter().zip(b).map(|(&a, &x)| a * x % p).sum::<u64>() % p)
                    .collect()
            })
            .collect();
        // restricted[s][c] = coordinate s of M·b_c
        let restricted: Vec<Vec<u64>> = (0..d)
            .map(|s| (0..d).map(|c| images[c][self.pivots[s]]).collect())
            .collect();
        let mut parts = Vec::new();
        let mut covered = 0;
        for lambda in 0..p {
            if covered == d {
                break;
            }
            let shifted: Vec<Vec<u64>> = restricted
                .iter()
                .enumerate()
                .map(|(s, row)| {
                    let mut row = row.clone();
                    row[s] = (row[s] + p - lambda) % p;
                    row
                })
                .collect();
            let null = nullspace(&shifted, d, p);
            if null.is_empty() {
                continue;
            }
            covered += null.len();
            let vectors = null
                .iter()
                .map(|coef| {
                    let mut v = vec![0u64; self.basis[0].len()];
                    for (c, b) in coef.iter().zip(&self.basis) {
                        for (vi, &bi) in v.iter_mut().zip(b) {
                            *vi = (*vi + c * bi) % p;
                        }
                    }
                    v
                })
                .collect();
            parts.push(Subspace::new(vectors, p));
        }
        (covered == d).then_some(parts)
    }
}

fn split_failure(p: u64, what: impl std::fmt::Display) -> Error {
    Error::SplitFailure(format!("p = {p}: {what}"))
}

/// Character table computed with an explicit starting prime; the usual entry
/// point is [`character_table`].
pub fn character_table_with_prime(
    group: &FiniteGroup,
    table: &ClassTable,
    start: u64,
) -> Result<CharacterTable> {
    let e = table.exponent();
    let n = group.order() as u64;
    let mats: Vec<Vec<Vec<u64>>> = class_matrices(table, group)
        .into_iter()
        .map(|m| m.entries)
        .collect();
    let mut p = start;
    let mut last_err = None;
    for _ in 0..=MAX_RETRIES {
        match attempt(table, &mats, p, e, n) {
            Ok(ct) => return Ok(ct),
            Err(err) => {
                last_err = Some(err);
                p = next_dixon_prime(e, n, p);
            }
        }
    }
    Err(last_err.expect("at least one attempt"))
}

pub fn character_table(group: &FiniteGroup, table: &ClassTable) -> Result<CharacterTable> {
    let start = dixon_prime(table.exponent(), group.order() as u64);
    character_table_with_prime(group, table, start)
}

fn attempt(
    table: &ClassTable,
    mats: &[Vec<Vec<u64>>],
    p: u64,
    e: u64,
    n: u64,
) -> Result<CharacterTable> {
    let r = table.len();
    let reduced: Vec<Vec<Vec<u64>>> = mats
        .iter()
        .map(|m| {
            m.iter()
                .map(|row| row.iter().map(|x| x % p).collect())
                .collect()
        })
        .collect();

    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|k| u64::from(i == k)).collect())
        .collect();
    let mut spaces = vec![Subspace::new(identity, p)];
    for m in reduced.iter().skip(1) {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let mut next = Vec::new();
        for s in spaces {
            if s.dim() == 1 {
                next.push(s);
            } else {
                let parts = s
                    .split(m, p)
                    .ok_or_else(|| split_failure(p, "class matrix not diagonalizable"))?;
                next.extend(parts);
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(split_failure(
            p,
            format!("{} of {r} eigenspaces resolved", spaces.len()),
        ));
    }

    let sizes: Vec<u64> = table.sizes().iter().map(|&s| s as u64).collect();
    let inverse = table.inverse_classes();
    let max_degree = n.sqrt();
    let lambda = least_root_of_unity(e, p).ok_or_else(|| split_failure(p, "no root of unity"))?;
    let e_inv = inv_mod(e % p, p);
    // power_classes[k][l] = class of rep_k^l
    let power_classes: Vec<Vec<usize>> = (0..r)
        .map(|k| (0..e as i64).map(|l| table.power_class(k, l)).collect())
        .collect();

    let rows: Vec<(Character, Vec<u64>)> = spaces
        .into_par_iter()
        .map(|s| {
            let v = &s.basis[0];
            if v[0] == 0 {
                return Err(split_failure(
                    p,
                    "eigenvector vanishes on the identity class",
                ));
            }
            let scale = inv_mod(v[0], p);
            let omega: Vec<u64> = v.iter().map(|x| x * scale % p).collect();
            let norm = (0..r).fold(0u64, |acc, k| {
                (acc + omega[k] * omega[inverse[k]] % p * inv_mod(sizes[k] % p, p)) % p
            });
            if norm == 0 {
                return Err(split_failure(p, "degenerate norm"));
            }
            let d2 = (n % p) * inv_mod(norm, p) % p;
            let degree = (1..=max_degree)
                .find(|d| d * d % p == d2)
                .ok_or_else(|| split_failure(p, "no admissible degree"))?;
            let modular: Vec<u64> = (0..r)
                .map(|k| degree * omega[k] % p * inv_mod(sizes[k] % p, p) % p)
                .collect();
            let values = (0..r)
                .map(|k| {
                    let mut counts = vec![0i64; e as usize];
                    let mut total = 0;
                    for (t, slot) in counts.iter_mut().enumerate() {
                        let mut acc = 0u64;
                        for l in 0..e {
                            let chi = modular[power_classes[k][l as usize]];
                            let w = pow_mod(lambda, (e - (t as u64 * l) % e) % e, p);
                            acc = (acc + chi * w) % p;
                        }
                        let m = acc * e_inv % p;
                        if m > degree {
                            return Err(split_failure(p, "eigenvalue multiplicity exceeds degree"));
                        }
                        *slot = m as i64;
                        total += m;
                    }
                    if total != degree {
                        return Err(split_failure(p, "multiplicities do not sum to the degree"));
                    }
                    Ok(Cyclotomic::from_integer_coeffs(e, &counts))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((Character { degree, values }, modular))
        })
        .collect::<Result<Vec<_>>>()?;

    let degree_square_sum: u64 = rows.iter().map(|(c, _)| c.degree * c.degree).sum();
    if degree_square_sum != n {
        return Err(split_failure(
            p,
            "squared degrees do not sum to the group order",
        ));
    }
    let (chars, modular): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    let mut ct = CharacterTable {
        group_order: n,
        class_sizes: sizes,
        class_orders: table.classes().iter().map(|c| c.element_order).collect(),
        inverse_class: inverse,
        class_labels: (0..r).map(|k| format!("c{k}")).collect(),
        rows: chars,
        modular: Some(ModularData {
            prime: p,
            exponent: e,
            root: lambda,
            values: modular,
        }),
    };
    ct.sort_rows();
    Ok(ct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::verify_orthogonality;
    use crate::groupspec::parse_group_spec;

    fn table_of(spec: &str) -> CharacterTable {
        let g = parse_group_spec(spec).unwrap().build(10_000).unwrap();
        let t = ClassTable::new(&g);
        character_table(&g, &t).unwrap()
    }

    #[test]
    fn cyclic_three() {
        let ct = table_of("Cyc(3)");
        assert_eq!(ct.degrees(), vec![1, 1, 1]);
        let z3 = Cyclotomic::root_of_unity(3, 1);
        let z3sq = Cyclotomic::root_of_unity(3, 2);
        let gen_values: Vec<&Cyclotomic> = ct.rows[1..].iter().map(|r| &r.values[1]).collect();
        assert!(gen_values.contains(&&z3));
        assert!(gen_values.contains(&&z3sq));
        assert!(verify_orthogonality(&ct).passed());
    }

    #[test]
    fn sym3() {
        let ct = table_of("Sym(3)");
        assert_eq!(ct.degrees(), vec![1, 1, 2]);
        // classes: e, transpositions, 3-cycles
        assert_eq!(ct.rows[2].values[1], Cyclotomic::from_integer(0));
        assert_eq!(ct.rows[2].values[2], Cyclotomic::from_integer(-1));
        assert!(ct.rows[0].values.iter().all(|v| *v == Cyclotomic::one()));
    }

    #[test]
    fn sym5_degrees() {
        let ct = table_of("Sym(5)");
        assert_eq!(ct.degrees(), vec![1, 1, 4, 4, 5, 5, 6]);
        assert_eq!(ct.modular.as_ref().unwrap().prime, 61);
    }

    #[test]
    fn retries_on_a_later_prime() {
        let g = parse_group_spec("Alt(5)").unwrap().build(100).unwrap();
        let t = ClassTable::new(&g);
        let first = character_table(&g, &t).unwrap();
        // start from the next admissible prime; same table up to the chosen root
        let later = character_table_with_prime(&g, &t, next_dixon_prime(30, 60, 31)).unwrap();
        assert_eq!(first.degrees(), later.degrees());
        assert!(verify_orthogonality(&later).passed());
    }
}
