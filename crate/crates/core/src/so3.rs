//! Special orthogonal groups `SO_3(p)` for small odd primes, found by scanning
//! every 3x3 matrix over `F_p`.

use crate::element::{Element, PrimeFieldMatrix};
use crate::error::{Error, Result};
use crate::group::{closure_enumerate, FiniteGroup};

/// All `M` with `M Mᵀ = I` (form `x² + y² + z²`) and `det M = 1`, in
/// row-major lexicographic order.
pub fn so3_matrices(p: u32) -> Result<Vec<PrimeFieldMatrix>> {
    if ![3, 5, 7].contains(&p) {
        return Err(Error::UnsupportedModulus(p as u64));
    }
    let pp = p as u64;
    let vectors: Vec<[u64; 3]> = (0..pp)
        .flat_map(|a| (0..pp).flat_map(move |b| (0..pp).map(move |c| [a, b, c])))
        .collect();
    let dot = |u: &[u64; 3], v: &[u64; 3]| (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % pp;

    // Rows of an orthogonal matrix are orthonormal, so the scan over p^9
    // matrices can reject at the first bad row.
    let mut out = Vec::new();
    for r1 in vectors.iter().filter(|v| dot(v, v) == 1) {
        for r2 in vectors.iter().filter(|v| dot(v, v) == 1 && dot(r1, v) == 0) {
            for r3 in vectors
                .iter()
                .filter(|v| dot(v, v) == 1 && dot(r1, v) == 0 && dot(r2, v) == 0)
            {
                let entries: Vec<u32> = r1.iter().chain(r2).chain(r3).map(|&x| x as u32).collect();
                let m = PrimeFieldMatrix::from_raw(p, 3, entries);
                if m.determinant() == 1 {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}

/// `SO_3(p)` as an enumerated group. A generating set is picked greedily from
/// the scan order, and the group is then re-enumerated from it.
pub fn so3_enumerate(p: u32) -> Result<FiniteGroup> {
    let scanned = so3_matrices(p)?;
    let all: Vec<Element> = scanned.iter().cloned().map(Element::Mat).collect();
    let whole = closure_enumerate(&all, all.len())?;
    let order_in_scan: Vec<usize> = all
        .iter()
        .map(|e| whole.index_of(e).expect("scanned set is closed"))
        .collect();
    let gens = whole.greedy_generators(&order_in_scan);
    let group = whole.subgroup_as_group(&gens)?;
    debug_assert_eq!(group.order(), scanned.len());
    Ok(group)
}

/// `Ω_3(p)`, the derived subgroup of `SO_3(p)`.
pub fn omega3_enumerate(p: u32) -> Result<FiniteGroup> {
    let so3 = so3_enumerate(p)?;
    let derived = so3.derived_subgroup();
    let gens = so3.greedy_generators(&derived);
    so3.subgroup_as_group(&gens)
}
