//! Brute-force automorphism and isomorphism search by unique extension from
//! one dart or flag. Quadratic; the ground truth for tests and small maps.

use crate::group::GeneratorSet;
use crate::labels::LabelStore;
use crate::maps::{extend_flag_iso, extend_map_iso, FlagMap, OrientedMap};
use crate::perm::Perm;

/// Every isomorphism `m1 → m2` (labels compared by id).
pub fn oracle_iso_set(m1: &OrientedMap, m2: &OrientedMap) -> Vec<Perm> {
    if m1.n() != m2.n() {
        return Vec::new();
    }
    (0..m2.n())
        .filter(|&y| m2.labels[y] == m1.labels[0])
        .filter_map(|y| extend_map_iso(m1, m2, 0, y))
        .collect()
}

pub fn oracle_aut_elements(m: &OrientedMap) -> Vec<Perm> {
    oracle_iso_set(m, m)
}

pub fn oracle_aut_order(m: &OrientedMap) -> usize {
    oracle_aut_elements(m).len()
}

pub fn oracle_aut(m: &OrientedMap) -> GeneratorSet {
    GeneratorSet::semiregular(m.n(), oracle_aut_elements(m))
}

/// Orientation-reversing automorphisms: dart permutations conjugating `R` to
/// `R⁻¹`, fixing `L` and carrying labels to mirrored labels.
pub fn oracle_reversing_elements(m: &OrientedMap, store: &mut LabelStore) -> Vec<Perm> {
    oracle_iso_set(m, &m.mirror(store))
}

/// Orientation-preserving and reversing automorphisms together.
pub fn oracle_aut_full_elements(m: &OrientedMap, store: &mut LabelStore) -> Vec<Perm> {
    let mut out = oracle_aut_elements(m);
    out.extend(oracle_reversing_elements(m, store));
    out
}

pub fn oracle_flag_iso_set(f1: &FlagMap, f2: &FlagMap) -> Vec<Perm> {
    if f1.n() != f2.n() {
        return Vec::new();
    }
    (0..f2.n()).filter_map(|y| extend_flag_iso(f1, f2, 0, y)).collect()
}

pub fn oracle_flag_aut_elements(f: &FlagMap) -> Vec<Perm> {
    oracle_flag_iso_set(f, f)
}

pub fn oracle_flag_aut(f: &FlagMap) -> GeneratorSet {
    GeneratorSet::semiregular(f.n(), oracle_flag_aut_elements(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build;

    #[test]
    fn bouquet_one_has_order_two() {
        let mut s = LabelStore::new();
        assert_eq!(oracle_aut_order(&build::bouquet(1, &mut s)), 2);
    }

    #[test]
    fn platonic_orders() {
        let mut s = LabelStore::new();
        assert_eq!(oracle_aut_order(&build::tetrahedron(&mut s)), 12);
        assert_eq!(oracle_aut_order(&build::cube(&mut s)), 24);
        assert_eq!(oracle_aut_order(&build::dodecahedron(&mut s)), 60);
        let g = oracle_aut(&build::icosahedron(&mut s));
        assert_eq!(g.order, 60);
        assert_eq!(g.elements().len(), 60);
    }

    #[test]
    fn unique_label_kills_symmetry() {
        let mut s = LabelStore::new();
        let mut m = build::tetrahedron(&mut s);
        m.labels[3] = s.leaf(7);
        assert_eq!(oracle_aut_order(&m), 1);
    }

    #[test]
    fn reversing_and_flag_orders_agree() {
        let mut s = LabelStore::new();
        let m = build::tetrahedron(&mut s);
        assert_eq!(oracle_aut_full_elements(&m, &mut s).len(), 24);
        let f = FlagMap::from_signed(&m, &|_| false);
        assert_eq!(oracle_flag_aut_elements(&f).len(), 24);
        assert_eq!(oracle_flag_aut_elements(&build::projective_loop()).len(), 4);
    }
}
