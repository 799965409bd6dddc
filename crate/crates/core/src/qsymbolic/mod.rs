//! Exact identities in the indeterminate `q`.
//!
//! The cited ledger records, for the unipotent classes `u3`, `u4`, `u5` of
//! `G_2(q)`, the class algebra constants `a_{t s_i u_j}` together with the
//! centralizer orders. These values come from the generic character table and
//! are not recomputed here; everything derived from them is reported as
//! cited data.

mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub use poly::{QPolynomial, QRationalFunction};

use crate::conjugacy::ClassTable;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub const LEDGER_CITATION: &str =
    "external: class algebra constants a_{t s_i u_j} and centralizer orders of u3, u4, u5 in G2(q), \
     from the generic character table of G2(q) (Chang-Ree)";

pub const G2_ORDER_CITATION: &str =
    "external: |G2(q)| = q^6 (q^6 - 1)(q^2 - 1), standard order formula for the finite Chevalley group";

/// One row of the ledger: the class algebra constant for `u_j` and the
/// centralizer order of `u_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaperLedgerEntry {
    pub label: String,
    pub a_value: QPolynomial,
    pub centralizer_order: QPolynomial,
}

impl PaperLedgerEntry {
    pub fn new(label: &str, a_value: QPolynomial, centralizer_order: QPolynomial) -> Result<Self> {
        if centralizer_order.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        Ok(Self {
            label: label.to_string(),
            a_value,
            centralizer_order,
        })
    }
}

/// Cited data for the tuples `C = (t, s1, u)` and `D = (t, s2, u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaperLedger {
    pub tuple_c: Vec<PaperLedgerEntry>,
    pub tuple_d: Vec<PaperLedgerEntry>,
}

pub const LEDGER_LABELS: [&str; 3] = ["u3", "u4", "u5"];

impl PaperLedger {
    /// The values as cited.
    pub fn cited() -> Self {
        let q4 = |c: i64| QPolynomial::int_monomial(c, 4);
        let entries = |a: [i64; 3]| {
            LEDGER_LABELS
                .iter()
                .zip(a)
                .zip([6, 3, 2])
                .map(|((l, a), c)| PaperLedgerEntry::new(l, q4(a), q4(c)).expect("nonzero"))
                .collect()
        };
        Self {
            tuple_c: entries([1, 1, 1]),
            tuple_d: entries([3, 0, 1]),
        }
    }

    /// Reads a ledger from lines `<C|D>; <label>; <a-value>; <centralizer>`.
    /// Blank lines and `#` comments are skipped. Each tuple needs exactly the
    /// labels `u3`, `u4`, `u5` in that order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tuple_c = Vec::new();
        let mut tuple_d = Vec::new();
        let mut offset = 0;
        for line in text.lines() {
            let start = offset;
            offset += line.len() + 1;
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split(';').map(str::trim).collect();
            let [tuple, label, a, c] = fields[..] else {
                return Err(Error::Syntax {
                    pos: start,
                    msg: "expected `tuple; label; a-value; centralizer`".into(),
                });
            };
            let shift = |e: Error| match e {
                Error::Syntax { pos, msg } => Error::Syntax {
                    pos: start + pos,
                    msg,
                },
                other => other,
            };
            let entry = PaperLedgerEntry::new(
                label,
                QPolynomial::parse(a).map_err(shift)?,
                QPolynomial::parse(c).map_err(shift)?,
            )?;
            match tuple {
                "C" => tuple_c.push(entry),
                "D" => tuple_d.push(entry),
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown ledger tuple `{other}`"
                    )));
                }
            }
        }
        for (name, entries) in [("C", &tuple_c), ("D", &tuple_d)] {
            let labels: Vec<&str> = entries.iter().map(|e| e.label.as_str()).collect();
            if labels != LEDGER_LABELS {
                return Err(Error::InvalidInput(format!(
                    "tuple {name} must list u3, u4, u5 in order, found {labels:?}"
                )));
            }
        }
        Ok(Self { tuple_c, tuple_d })
    }

    /// Inverse of [`PaperLedger::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, entries) in [("C", &self.tuple_c), ("D", &self.tuple_d)] {
            for e in entries {
                out.push_str(&format!(
                    "{name}; {}; {}; {}\n",
                    e.label, e.a_value, e.centralizer_order
                ));
            }
        }
        out
    }
}

/// `|G_2(q)| = q^6 (q^6 - 1)(q^2 - 1)`; see [`G2_ORDER_CITATION`].
pub fn g2_order_polynomial() -> QPolynomial {
    let one = QPolynomial::one();
    let q6 = QPolynomial::int_monomial(1, 6);
    let q2 = QPolynomial::int_monomial(1, 2);
    &(&q6 * &(&q6 - &one)) * &(&q2 - &one)
}

/// `Σ_j a_j / |C(u_j)|`, the solution count divided by the group order.
pub fn normalized_solution_count(entries: &[PaperLedgerEntry]) -> Result<QRationalFunction> {
    if entries.is_empty() {
        return Err(Error::InvalidInput("empty ledger".into()));
    }
    entries
        .iter()
        .try_fold(QRationalFunction::zero(), |acc, e| {
            let term = QRationalFunction::new(e.a_value.clone(), e.centralizer_order.clone())?;
            Ok(acc.add(&term))
        })
}

/// `Σ 1/r` over the stabilizer orders.
///
/// # Panics
/// If some stabilizer order is zero.
pub fn orbit_mass(stabilizer_orders: &[u64]) -> BigRational {
    stabilizer_orders
        .iter()
        .map(|&r| {
            assert!(r > 0, "stabilizer orders are positive");
            BigRational::new(BigInt::from(1), BigInt::from(r))
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Centralizer orders of the class representatives of `h`, largest first.
pub fn lang_splitting_data(h: &FiniteGroup) -> Vec<usize> {
    let mut orders: Vec<usize> = ClassTable::new(h)
        .classes()
        .iter()
        .map(|c| c.centralizer_order)
        .collect();
    orders.sort_unstable_by(|a, b| b.cmp(a));
    orders
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionCheck {
    pub sum: u64,
    pub satisfied: bool,
    pub equality: bool,
}

/// Compares the sum of class dimensions with `2 dim G`.
pub fn dimension_criterion(class_dims: &[u64], dim_g: u64) -> DimensionCheck {
    let sum: u64 = class_dims.iter().sum();
    DimensionCheck {
        sum,
        satisfied: sum >= 2 * dim_g,
        equality: sum == 2 * dim_g,
    }
}

/// Dimension of a conjugacy class of the algebraic group `G_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionDatum {
    pub label: &'static str,
    pub centralizer: &'static str,
    pub centralizer_dimension: u64,
    pub class_dimension: u64,
}

pub const G2_DIMENSION: u64 = 14;

/// Classes of `t`, `s1` and `u` in `G_2`, with dimension `14 - dim C(x)`.
pub fn g2_class_dimensions() -> Vec<DimensionDatum> {
    [("t", "A1 A1~", 6), ("s1", "A1 T'", 4), ("u", "U4.Sym3", 4)]
        .into_iter()
        .map(|(label, centralizer, d)| DimensionDatum {
            label,
            centralizer,
            centralizer_dimension: d,
            class_dimension: G2_DIMENSION - d,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupspec::parse_group_spec;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn cited_ledger_identities() {
        let ledger = PaperLedger::cited();
        let one = BigRational::from_integer(1.into());
        for entries in [&ledger.tuple_c, &ledger.tuple_d] {
            let f = normalized_solution_count(entries).unwrap();
            assert!(f.is_constant(&one));
            for q in [5, 25, 125] {
                assert_eq!(f.evaluate_int(q).unwrap(), one);
            }
        }
    }

    #[test]
    fn zero_ledger() {
        let mut ledger = PaperLedger::cited();
        for e in &mut ledger.tuple_c {
            e.a_value = QPolynomial::zero();
        }
        let f = normalized_solution_count(&ledger.tuple_c).unwrap();
        assert_eq!(f, QRationalFunction::zero());
        assert!(normalized_solution_count(&[]).is_err());
    }

    #[test]
    fn ledger_text_round_trip() {
        let ledger = PaperLedger::cited();
        let text = ledger.to_text();
        assert!(text.starts_with("C; u3; q^4; 6q^4\n"));
        assert_eq!(PaperLedger::parse(&text).unwrap(), ledger);
        let tampered = text.replace("D; u3; 3q^4", "D; u3; 2q^4");
        let f = normalized_solution_count(&PaperLedger::parse(&tampered).unwrap().tuple_d).unwrap();
        assert!(f.is_constant(&rat(5, 6)));
        assert!(PaperLedger::parse("C; u3; q^4").is_err());
        assert!(PaperLedger::parse("C; u3; q^4; 0\n").is_err());
        assert!(PaperLedger::parse(&text.replace("C; u4", "C; u9")).is_err());
    }

    #[test]
    fn masses() {
        assert_eq!(orbit_mass(&[6, 3, 2, 2, 2]), rat(2, 1));
        assert_eq!(orbit_mass(&[6, 3, 2]), rat(1, 1));
        assert_eq!(
            orbit_mass(&[6, 3, 2]) + orbit_mass(&[2, 2]),
            orbit_mass(&[6, 3, 2, 2, 2])
        );
        assert_eq!(orbit_mass(&[7]), rat(1, 7));
    }

    #[test]
    fn splitting_data() {
        let sym3 = parse_group_spec("Sym(3)").unwrap().build(100).unwrap();
        let data = lang_splitting_data(&sym3);
        assert_eq!(data, vec![6, 3, 2]);
        assert_eq!(data.iter().map(|c| 6 / c).sum::<usize>(), 6);
        let coeffs: Vec<usize> = PaperLedger::cited()
            .tuple_c
            .iter()
            .map(|e| {
                e.centralizer_order
                    .coefficient(4)
                    .to_integer()
                    .try_into()
                    .unwrap()
            })
            .collect();
        assert_eq!(coeffs, data);
        let trivial = parse_group_spec("Cyc(1)").unwrap().build(10).unwrap();
        assert_eq!(lang_splitting_data(&trivial), vec![1]);
    }

    #[test]
    fn dimensions() {
        let dims: Vec<u64> = g2_class_dimensions()
            .iter()
            .map(|d| d.class_dimension)
            .collect();
        assert_eq!(dims, vec![8, 10, 10]);
        let check = dimension_criterion(&dims, G2_DIMENSION);
        assert_eq!(
            (check.sum, check.satisfied, check.equality),
            (28, true, true)
        );
        assert!(!dimension_criterion(&[0, 0, 0], 14).satisfied);
        let c = dimension_criterion(&[14, 14], 14);
        assert!(c.satisfied && c.equality);
    }

    #[test]
    fn g2_order_at_five() {
        let expected: i64 = 15625 * 15624 * 24;
        assert_eq!(g2_order_polynomial().evaluate_int(5), rat(expected, 1));
        assert_eq!(g2_order_polynomial().degree(), Some(14));
    }
}
