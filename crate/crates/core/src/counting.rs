//! Class-tuple solutions of `x_1 x_2 ⋯ x_s = 1`: character-theoretic counts,
//! exhaustive enumeration, orbits under simultaneous conjugation, rigidity
//! verdicts and `(a, b, c)` censuses.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::chartab::CharacterTable;
use crate::conjugacy::ClassTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{Fingerprint, FiniteGroup};

pub const DEFAULT_SCAN_CAP: u64 = 100_000_000;

/// An ordered tuple of class ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassTuple(pub Vec<usize>);

impl ClassTuple {
    pub fn new(ids: impl Into<Vec<usize>>) -> Self {
        Self(ids.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ids(&self) -> &[usize] {
        &self.0
    }

    /// `(C_2, .., C_s, C_1)`.
    pub fn rotated(&self) -> Self {
        let mut v = self.0.clone();
        v.rotate_left(1);
        Self(v)
    }

    fn validate(&self, num_classes: usize) -> Result<()> {
        if self.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "class tuples need at least two entries, got {}",
                self.len()
            )));
        }
        if let Some(&bad) = self.0.iter().find(|&&c| c >= num_classes) {
            return Err(Error::InvalidInput(format!(
                "class id {bad} out of range ({num_classes} classes)"
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub tuple: ClassTuple,
    /// Sorted lexicographically by element index.
    pub solutions: Vec<Vec<usize>>,
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub representative: Vec<usize>,
    pub size: usize,
    pub stabilizer_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OrbitDecomposition {
    pub orbits: Vec<Orbit>,
    pub total: usize,
}

impl OrbitDecomposition {
    /// `Σ 1/|stabilizer|`, which equals `total / |G|`.
    pub fn mass(&self) -> BigRational {
        self.orbits
            .iter()
            .map(|o| BigRational::new(BigInt::one(), BigInt::from(o.stabilizer_order)))
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RigidityVerdict {
    Empty,
    Rigid { stabilizer_order: usize },
    NotRigid { orbits: usize },
}

fn rational(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn to_count(value: Cyclotomic, what: &str) -> Result<u128> {
    value
        .as_integer()
        .and_then(|i| i.to_u128())
        .ok_or_else(|| Error::NonIntegerResult(format!("{what}: {value}")))
}

/// Number of solutions, by
/// `(∏|C_i| / |G|) Σ_χ χ(g_1)⋯χ(g_s) / χ(1)^(s-2)`.
pub fn frobenius_count(ct: &CharacterTable, tuple: &ClassTuple) -> Result<u128> {
    tuple.validate(ct.num_classes())?;
    let s = tuple.len() as i32;
    let sum: Cyclotomic = ct
        .rows
        .iter()
        .map(|row| {
            let prod = tuple
                .ids()
                .iter()
                .fold(Cyclotomic::one(), |acc, &c| &acc * &row.values[c]);
            let d = BigRational::from_integer(BigInt::from(row.degree));
            prod.scale(&num_traits::pow::Pow::pow(&d, -(s - 2)))
        })
        .sum();
    let factor = tuple.ids().iter().fold(BigRational::one(), |acc, &c| {
        acc * rational(ct.class_sizes[c])
    }) / rational(ct.group_order);
    to_count(sum.scale(&factor), "Frobenius count")
}

/// `a_xyz = #{(a, b) ∈ C_x × C_y : a·b·z_0 = 1}` for a fixed `z_0 ∈ C_z`,
/// from `(|C_x||C_y| / |G|) Σ_χ χ(x)χ(y)χ(z)/χ(1)`.
pub fn class_algebra_constant(ct: &CharacterTable, x: usize, y: usize, z: usize) -> Result<u128> {
    ClassTuple::new(vec![x, y, z]).validate(ct.num_classes())?;
    let sum: Cyclotomic = ct
        .rows
        .iter()
        .map(|row| {
            let prod = &(&row.values[x] * &row.values[y]) * &row.values[z];
            prod.scale(&BigRational::new(BigInt::one(), BigInt::from(row.degree)))
        })
        .sum();
    let factor =
        rational(ct.class_sizes[x]) * rational(ct.class_sizes[y]) / rational(ct.group_order);
    to_count(sum.scale(&factor), "class algebra constant")
}

/// Every solution with `x_i ∈ C_i`. The scan runs over all classes but the
/// largest one, whose entry is solved for.
pub fn enumerate_solutions(
    group: &FiniteGroup,
    table: &ClassTable,
    tuple: &ClassTuple,
    cap: u64,
) -> Result<SolutionSet> {
    tuple.validate(table.len())?;
    let s = tuple.len();
    let sizes: Vec<usize> = tuple.ids().iter().map(|&c| table.class(c).size()).collect();
    let solved = (0..s)
        .max_by_key(|&i| (sizes[i], std::cmp::Reverse(i)))
        .unwrap();
    // positions after `solved`, cyclically
    let scan: Vec<usize> = (1..s).map(|k| (solved + k) % s).collect();
    let work = scan
        .iter()
        .try_fold(1u64, |acc, &i| acc.checked_mul(sizes[i] as u64))
        .unwrap_or(u64::MAX);
    if work > cap {
        return Err(Error::CapExceeded { cap });
    }
    let target_class = tuple.ids()[solved];
    let classes: Vec<&[usize]> = scan
        .iter()
        .map(|&i| table.class(tuple.ids()[i]).members.as_slice())
        .collect();

    #[allow(clippy::too_many_arguments)]
    fn descend(
        group: &FiniteGroup,
        table: &ClassTable,
        classes: &[&[usize]],
        depth: usize,
        prefix: usize,
        picked: &mut Vec<usize>,
        target_class: usize,
        out: &mut Vec<(Vec<usize>, usize)>,
    ) {
        if depth == classes.len() {
            let x = group.inv(prefix);
            if table.class_of(x) == target_class {
                out.push((picked.clone(), x));
            }
            return;
        }
        for &m in classes[depth] {
            picked.push(m);
            let next = group.mult(prefix, m);
            descend(
                group,
                table,
                classes,
                depth + 1,
                next,
                picked,
                target_class,
                out,
            );
            picked.pop();
        }
    }

    let mut found: Vec<Vec<usize>> = classes[0]
        .par_iter()
        .flat_map_iter(|&first| {
            let mut out = Vec::new();
            let mut picked = vec![first];
            descend(
                group,
                table,
                &classes,
                1,
                first,
                &mut picked,
                target_class,
                &mut out,
            );
            out
        })
        .map(|(picked, x)| {
            let mut sol = vec![0usize; s];
            sol[solved] = x;
            for (&pos, &el) in scan.iter().zip(&picked) {
                sol[pos] = el;
            }
            sol
        })
        .collect();
    found.sort_unstable();
    Ok(SolutionSet {
        tuple: tuple.clone(),
        solutions: found,
    })
}

/// Orbits under `g·(x_1, .., x_s) = (g⁻¹x_1g, .., g⁻¹x_sg)`, found by closing
/// under conjugation by the generators. Each orbit is represented by its
/// lexicographically least member.
pub fn orbit_decomposition(group: &FiniteGroup, set: &SolutionSet) -> OrbitDecomposition {
    let mut sols = set.solutions.clone();
    sols.sort_unstable();
    sols.dedup();
    let actions: Vec<Vec<usize>> = group
        .generator_indices()
        .iter()
        .map(|&g| group.conjugation_action(g))
        .collect();
    let mut seen = vec![false; sols.len()];
    let mut orbits = Vec::new();
    for start in 0..sols.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let cur = queue[head];
            head += 1;
            for act in &actions {
                let image: Vec<usize> = sols[cur].iter().map(|&x| act[x]).collect();
                let idx = sols
                    .binary_search(&image)
                    .expect("solution sets are closed under conjugation");
                if !seen[idx] {
                    seen[idx] = true;
                    queue.push(idx);
                }
            }
        }
        let size = queue.len();
        debug_assert_eq!(group.order() % size, 0);
        orbits.push(Orbit {
            representative: sols[start].clone(),
            size,
            stabilizer_order: group.order() / size,
        });
    }
    OrbitDecomposition {
        orbits,
        total: sols.len(),
    }
}

/// Everything computed on the way to a rigidity verdict.
#[derive(Clone, Debug)]
pub struct TupleAnalysis {
    pub tuple: ClassTuple,
    pub frobenius_count: u128,
    pub decomposition: OrbitDecomposition,
    pub verdict: RigidityVerdict,
}

pub fn analyze_tuple(
    group: &FiniteGroup,
    table: &ClassTable,
    ct: &CharacterTable,
    tuple: &ClassTuple,
    cap: u64,
) -> Result<TupleAnalysis> {
    let count = frobenius_count(ct, tuple)?;
    if count == 0 {
        return Ok(TupleAnalysis {
            tuple: tuple.clone(),
            frobenius_count: 0,
            decomposition: OrbitDecomposition::default(),
            verdict: RigidityVerdict::Empty,
        });
    }
    let set = enumerate_solutions(group, table, tuple, cap)?;
    let decomposition = orbit_decomposition(group, &set);
    let verdict = match decomposition.orbits.as_slice() {
        [only] => RigidityVerdict::Rigid {
            stabilizer_order: only.stabilizer_order,
        },
        many => RigidityVerdict::NotRigid { orbits: many.len() },
    };
    Ok(TupleAnalysis {
        tuple: tuple.clone(),
        frobenius_count: count,
        decomposition,
        verdict,
    })
}

pub fn rigidity_verdict(
    group: &FiniteGroup,
    table: &ClassTable,
    ct: &CharacterTable,
    tuple: &ClassTuple,
    cap: u64,
) -> Result<RigidityVerdict> {
    analyze_tuple(group, table, ct, tuple, cap).map(|a| a.verdict)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedSubgroup {
    pub order: usize,
    pub fingerprint: Fingerprint,
}

/// Order and fingerprint of `⟨x_1, x_2⟩`; the remaining entries of a
/// product-one triple are determined by these two.
pub fn generated_subgroup_report(
    group: &FiniteGroup,
    triple: &[usize],
) -> Result<GeneratedSubgroup> {
    for &x in triple {
        group.check_index(x)?;
    }
    let gens: Vec<usize> = triple.iter().take(2).copied().collect();
    let sub = group.subgroup_as_group(&gens)?;
    Ok(GeneratedSubgroup {
        order: sub.order(),
        fingerprint: sub.fingerprint(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusOrbit {
    pub orbit: Orbit,
    pub generated: GeneratedSubgroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub orders: [u64; 3],
    pub per_tuple: Vec<(ClassTuple, usize)>,
    pub total: usize,
    pub orbits: Vec<CensusOrbit>,
}

/// All product-one triples `(x, y, z)` with element orders exactly
/// `(a, b, c)`, grouped by class tuple and by orbit.
pub fn abc_census(
    group: &FiniteGroup,
    table: &ClassTable,
    a: u64,
    b: u64,
    c: u64,
    cap: u64,
) -> Result<Census> {
    let mut per_tuple = Vec::new();
    let mut union = Vec::new();
    for &x in &table.classes_of_element_order(a) {
        for &y in &table.classes_of_element_order(b) {
            for &z in &table.classes_of_element_order(c) {
                let tuple = ClassTuple::new(vec![x, y, z]);
                let set = enumerate_solutions(group, table, &tuple, cap)?;
                per_tuple.push((tuple, set.len()));
                union.extend(set.solutions);
            }
        }
    }
    union.sort_unstable();
    let total = union.len();
    let all = SolutionSet {
        tuple: ClassTuple::new(Vec::new()),
        solutions: union,
    };
    let orbits = orbit_decomposition(group, &all)
        .orbits
        .into_iter()
        .map(|orbit| {
            let generated = generated_subgroup_report(group, &orbit.representative)?;
            Ok(CensusOrbit { orbit, generated })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Census {
        orders: [a, b, c],
        per_tuple,
        total,
        orbits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::groupspec::parse_group_spec;

    struct Ctx {
        g: FiniteGroup,
        t: ClassTable,
        ct: CharacterTable,
    }

    fn ctx(spec: &str) -> Ctx {
        let g = parse_group_spec(spec).unwrap().build(10_000).unwrap();
        let t = ClassTable::new(&g);
        let ct = character_table(&g, &t).unwrap();
        Ctx { g, t, ct }
    }

    fn class(c: &Ctx, order: u64, size: usize) -> usize {
        c.t.classes()
            .iter()
            .find(|k| k.element_order == order && k.size() == size)
            .unwrap()
            .id
    }

    #[test]
    fn sym3_counts() {
        let c = ctx("Sym(3)");
        let tuple = ClassTuple::new(vec![1, 1, 2]);
        assert_eq!(frobenius_count(&c.ct, &tuple).unwrap(), 6);
        assert_eq!(
            enumerate_solutions(&c.g, &c.t, &tuple, 1000).unwrap().len(),
            6
        );
        assert_eq!(class_algebra_constant(&c.ct, 1, 1, 2).unwrap(), 3);
    }

    #[test]
    fn identity_class_tuples() {
        let c = ctx("Alt(5)");
        for k in 0..c.t.len() {
            let inv = c.t.inverse_class(k);
            let tuple = ClassTuple::new(vec![0, k, inv]);
            assert_eq!(
                frobenius_count(&c.ct, &tuple).unwrap(),
                c.t.class(k).size() as u128
            );
            assert_eq!(class_algebra_constant(&c.ct, 0, k, inv).unwrap(), 1);
        }
    }

    #[test]
    fn sym5_245() {
        let c = ctx("Sym(5)");
        let (t2, t2b, t4, t5) = (
            class(&c, 2, 10),
            class(&c, 2, 15),
            class(&c, 4, 30),
            class(&c, 5, 24),
        );
        let good = ClassTuple::new(vec![t2, t4, t5]);
        let bad = ClassTuple::new(vec![t2b, t4, t5]);
        assert_eq!(frobenius_count(&c.ct, &bad).unwrap(), 0);
        assert_eq!(class_algebra_constant(&c.ct, t2, t4, t5).unwrap(), 5);
        let set = enumerate_solutions(&c.g, &c.t, &good, DEFAULT_SCAN_CAP).unwrap();
        assert_eq!(set.len(), 120);
        let dec = orbit_decomposition(&c.g, &set);
        assert_eq!(dec.orbits.len(), 1);
        assert_eq!(dec.orbits[0].stabilizer_order, 1);
        assert_eq!(
            rigidity_verdict(&c.g, &c.t, &c.ct, &good, DEFAULT_SCAN_CAP).unwrap(),
            RigidityVerdict::Rigid {
                stabilizer_order: 1
            }
        );
        assert_eq!(
            rigidity_verdict(&c.g, &c.t, &c.ct, &bad, DEFAULT_SCAN_CAP).unwrap(),
            RigidityVerdict::Empty
        );
    }

    #[test]
    fn alt4_222_is_not_rigid() {
        let c = ctx("Alt(4)");
        let v = class(&c, 2, 3);
        let tuple = ClassTuple::new(vec![v, v, v]);
        let a = analyze_tuple(&c.g, &c.t, &c.ct, &tuple, DEFAULT_SCAN_CAP).unwrap();
        assert_eq!(a.verdict, RigidityVerdict::NotRigid { orbits: 2 });
        assert!(a
            .decomposition
            .orbits
            .iter()
            .all(|o| o.size == 3 && o.stabilizer_order == 4));
        assert_eq!(a.decomposition.total, 6);
    }

    #[test]
    fn empty_decomposition() {
        let c = ctx("Sym(3)");
        let empty = SolutionSet {
            tuple: ClassTuple::new(vec![1, 1, 1]),
            solutions: vec![],
        };
        let dec = orbit_decomposition(&c.g, &empty);
        assert!(dec.orbits.is_empty());
        assert_eq!(dec.total, 0);
    }

    #[test]
    fn scan_cap() {
        let c = ctx("Sym(5)");
        let tuple = ClassTuple::new(vec![6, 6, 6]);
        assert!(matches!(
            enumerate_solutions(&c.g, &c.t, &tuple, 10),
            Err(Error::CapExceeded { cap: 10 })
        ));
    }

    #[test]
    fn invalid_tuples() {
        let c = ctx("Sym(3)");
        assert!(frobenius_count(&c.ct, &ClassTuple::new(vec![1])).is_err());
        assert!(frobenius_count(&c.ct, &ClassTuple::new(vec![1, 9])).is_err());
    }

    #[test]
    fn census_without_matching_orders() {
        let c = ctx("Sym(5)");
        let census = abc_census(&c.g, &c.t, 2, 3, 7, DEFAULT_SCAN_CAP).unwrap();
        assert_eq!(census.total, 0);
        assert!(census.per_tuple.is_empty());
        assert!(census.orbits.is_empty());
    }

    #[test]
    fn degenerate_generated_subgroup() {
        let c = ctx("Sym(5)");
        let five = c.t.class(class(&c, 5, 24)).representative;
        let r = generated_subgroup_report(&c.g, &[five, c.g.inv(five), 0]).unwrap();
        assert_eq!(r.order, 5);
        assert_eq!(r.fingerprint.order_profile, vec![(1, 1), (5, 4)]);
        assert!(generated_subgroup_report(&c.g, &[five, 1000, 0]).is_err());
    }
}
