//! Full automorphism and isomorphism computation: reduce, solve the
//! irreducible map, lift the result back.

use crate::group::{GeneratorSet, Structure};
use crate::labels::{canonical_relabel, LabelStore};
use crate::maps::{extend_flag_iso, extend_map_iso, FlagMap, MapError, OrientedMap};
use crate::nonorientable;
use crate::oracle::oracle_aut_elements;
use crate::perm::Perm;
use crate::reduce::{run_scheduler, select, ReductionTrace, ScheduleOptions, Selection, Terminal};
use crate::sphere;
use crate::torus;

/// Irreducible maps with at most this many darts are solved by brute force.
pub const BRUTE_DARTS: usize = 8;
const MAX_DUAL_DEPTH: usize = 3;

/// The method that solved the irreducible map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Solver {
    Brute,
    Cycle,
    Dipole,
    Bouquet,
    Dual,
    Torus,
}

#[derive(Clone, Debug)]
pub struct AutPlus {
    pub group: GeneratorSet,
    pub trace: ReductionTrace,
    pub solver: Solver,
}

/// Either kind of input map.
#[derive(Clone, Debug)]
pub enum MapInput {
    Oriented(OrientedMap),
    Flags(FlagMap),
}

impl MapInput {
    pub fn n(&self) -> usize {
        match self {
            MapInput::Oriented(m) => m.n(),
            MapInput::Flags(f) => f.n(),
        }
    }
}

fn brute(u: &OrientedMap) -> Vec<Perm> {
    GeneratorSet::semiregular(u.n(), oracle_aut_elements(u)).gens
}

/// Extends automorphisms of the reduced map `trace.last` to `m`.
pub fn lift_generators(m: &OrientedMap, trace: &ReductionTrace, gens: &[Perm]) -> Vec<Perm> {
    if trace.steps.is_empty() {
        return gens.to_vec();
    }
    let o = &trace.orig;
    gens.iter()
        .map(|g| {
            extend_map_iso(m, m, o[0], o[g.apply(0)]).expect("automorphism of the reduced map does not extend")
        })
        .collect()
}

fn dual_reduces(u: &OrientedMap) -> bool {
    !matches!(select(&u.dual()), Selection::Terminal(_))
}

fn aut_irreducible(u: &OrientedMap, terminal: Terminal, store: &mut LabelStore, depth: usize) -> (Vec<Perm>, Solver) {
    if u.n() <= BRUTE_DARTS || terminal == Terminal::Stuck {
        return (brute(u), Solver::Brute);
    }
    match u.euler_characteristic() {
        2 => {
            if sphere::is_cycle_map(u) {
                (sphere::aut_cycle_map(u), Solver::Cycle)
            } else if sphere::is_standard_dipole(u) {
                (sphere::aut_cycle_map(&u.dual()), Solver::Dipole)
            } else if sphere::is_standard_bouquet(u) {
                (sphere::aut_bouquet(u), Solver::Bouquet)
            } else if terminal == Terminal::Uniform && depth < MAX_DUAL_DEPTH && dual_reduces(u) {
                let d = u.dual();
                let tr = run_scheduler(&d, store, ScheduleOptions::default());
                let (g, _) = aut_irreducible(&tr.last, tr.terminal, store, depth + 1);
                (lift_generators(&d, &tr, &g), Solver::Dual)
            } else {
                (brute(u), Solver::Brute)
            }
        }
        0 if terminal == Terminal::Uniform => match torus::aut_uniform_torus(u, store) {
            Some(g) => (g, Solver::Torus),
            None => (brute(u), Solver::Brute),
        },
        _ => (brute(u), Solver::Brute),
    }
}

fn structure_of(g: &GeneratorSet, solver: Solver) -> Option<Structure> {
    match g.gens.len() {
        0 => Some(Structure::Trivial),
        1 => Some(Structure::Cyclic(g.order)),
        _ => match solver {
            Solver::Cycle | Solver::Dipole => Some(Structure::Dihedral(g.order / 2)),
            Solver::Torus => {
                let abelian = g.gens.iter().all(|a| g.gens.iter().all(|b| a.commutes_with(b)));
                if abelian && g.gens.len() == 2 {
                    let a = g.gens[0].order();
                    Some(Structure::Product(a, g.order / a))
                } else {
                    Some(Structure::Semidirect)
                }
            }
            _ => Some(Structure::Sporadic),
        },
    }
}

/// Generators of the orientation-preserving automorphisms of `m`.
pub fn aut_plus(m: &OrientedMap, store: &mut LabelStore) -> AutPlus {
    aut_plus_with(m, store, ScheduleOptions::default())
}

pub fn aut_plus_with(m: &OrientedMap, store: &mut LabelStore, opts: ScheduleOptions) -> AutPlus {
    let trace = run_scheduler(m, store, opts);
    let (gens_u, solver) = aut_irreducible(&trace.last, trace.terminal, store, 0);
    let gens = lift_generators(m, &trace, &gens_u);
    let mut group = GeneratorSet::semiregular(m.n(), gens);
    group.structure = structure_of(&group, solver);
    AutPlus { group, trace, solver }
}

/// Orientation-preserving and reversing automorphisms of an oriented map.
/// Reversing elements conjugate `R` to `R⁻¹` and carry labels to their mirrors.
pub fn aut_full_oriented(m: &OrientedMap, store: &mut LabelStore) -> GeneratorSet {
    let plus = aut_plus(m, store).group;
    let mirror = m.mirror(store);
    match iso_oriented(m, &mirror, store) {
        Some(psi) => {
            let mut gens = plus.gens.clone();
            gens.push(psi);
            GeneratorSet::with_order(m.n(), gens, 2 * plus.order)
        }
        None => plus,
    }
}

/// Automorphisms of an orientable flag map, as flag permutations.
fn aut_orientable_flags(f: &FlagMap, store: &mut LabelStore) -> Result<GeneratorSet, MapError> {
    let pair = f.oriented_from_flags(store)?;
    let fd = &pair.flag_of_dart;
    let plus = aut_plus(&pair.map, store).group;
    let lift = |y: usize| extend_flag_iso(f, f, fd[0], y).expect("oriented automorphism extends to flags");
    let mut gens: Vec<Perm> = plus.gens.iter().map(|g| lift(fd[g.apply(0)])).collect();
    let mut order = plus.order;
    if let Some(psi) = iso_oriented(&pair.map, &pair.mirror, store) {
        gens.push(lift(f.tau.apply(fd[psi.apply(0)])));
        order *= 2;
    }
    let mut g = GeneratorSet::semiregular(f.n(), gens);
    debug_assert_eq!(g.order, order);
    if g.gens.is_empty() {
        g.structure = Some(Structure::Trivial);
    }
    Ok(g)
}

/// The full automorphism group: on darts for oriented input, on flags for flag input.
pub fn aut_full(input: &MapInput, store: &mut LabelStore) -> GeneratorSet {
    match input {
        MapInput::Oriented(m) => aut_full_oriented(m, store),
        MapInput::Flags(f) if f.is_orientable() => aut_orientable_flags(f, store).expect("orientable"),
        MapInput::Flags(f) => nonorientable::aut_nonorientable(f, store),
    }
}

/// An isomorphism `m1 → m2` preserving labels, if one exists.
pub fn iso_oriented(m1: &OrientedMap, m2: &OrientedMap, store: &LabelStore) -> Option<Perm> {
    iso_depth(m1, m2, store, 0)
}

fn relabeled(u: &OrientedMap, ranks: &[u32], ls: &mut LabelStore) -> OrientedMap {
    let labels = ranks.iter().map(|&r| ls.leaf(r as i64)).collect();
    OrientedMap { r: u.r.clone(), l: u.l.clone(), labels }
}

fn iso_depth(m1: &OrientedMap, m2: &OrientedMap, store: &LabelStore, depth: usize) -> Option<Perm> {
    if m1.n() != m2.n() || m1.count_cells() != m2.count_cells() {
        return None;
    }
    let mut s1 = store.clone();
    let mut s2 = store.clone();
    let t1 = run_scheduler(m1, &mut s1, ScheduleOptions::default());
    let t2 = run_scheduler(m2, &mut s2, ScheduleOptions::default());
    if t1.steps.len() != t2.steps.len() || t1.terminal != t2.terminal || t1.last.n() != t2.last.n() {
        return None;
    }
    let rel = canonical_relabel(&s1, &t1.last.labels, &s2, &t2.last.labels);
    if !rel.consistent {
        return None;
    }
    let mut ls = LabelStore::new();
    let v1 = relabeled(&t1.last, &rel.ranks1, &mut ls);
    let v2 = relabeled(&t2.last, &rel.ranks2, &mut ls);
    irreducible_candidates(&v1, &v2, t1.terminal, &ls, depth)
        .into_iter()
        .find_map(|(a, b)| extend_map_iso(m1, m2, t1.orig[a], t2.orig[b]))
}

fn brute_candidates(v1: &OrientedMap, v2: &OrientedMap) -> Vec<(usize, usize)> {
    (0..v2.n())
        .filter(|&y| v2.labels[y] == v1.labels[0])
        .find(|&y| extend_map_iso(v1, v2, 0, y).is_some())
        .map(|y| vec![(0, y)])
        .unwrap_or_default()
}

fn irreducible_candidates(
    v1: &OrientedMap,
    v2: &OrientedMap,
    terminal: Terminal,
    ls: &LabelStore,
    depth: usize,
) -> Vec<(usize, usize)> {
    if v1.n() <= BRUTE_DARTS || terminal == Terminal::Stuck {
        return brute_candidates(v1, v2);
    }
    match v1.euler_characteristic() {
        2 => {
            if sphere::is_cycle_map(v1) && sphere::is_cycle_map(v2) {
                sphere::cycle_map_isos(v1, v2).into_iter().map(|y| (0, y)).collect()
            } else if sphere::is_standard_dipole(v1) && sphere::is_standard_dipole(v2) {
                sphere::cycle_map_isos(&v1.dual(), &v2.dual()).into_iter().map(|y| (0, y)).collect()
            } else if sphere::is_standard_bouquet(v1) && sphere::is_standard_bouquet(v2) {
                let b = sphere::bouquet_base(v1);
                sphere::bouquet_isos(v1, v2).into_iter().map(|y| (b, y)).collect()
            } else if terminal == Terminal::Uniform && depth < MAX_DUAL_DEPTH && dual_reduces(v1) {
                iso_depth(&v1.dual(), &v2.dual(), ls, depth + 1).map(|p| vec![(0, p.apply(0))]).unwrap_or_default()
            } else {
                brute_candidates(v1, v2)
            }
        }
        0 if terminal == Terminal::Uniform => {
            torus_candidates(v1, v2, ls).unwrap_or_else(|| brute_candidates(v1, v2))
        }
        _ => brute_candidates(v1, v2),
    }
}

fn torus_candidates(v1: &OrientedMap, v2: &OrientedMap, ls: &LabelStore) -> Option<Vec<(usize, usize)>> {
    use std::collections::HashMap;
    let mut ls1 = ls.clone();
    let mut ls2 = ls.clone();
    let (h1, o1) = torus::homogenize(v1, &mut ls1)?;
    let (h2, o2) = torus::homogenize(v2, &mut ls2)?;
    if h1.n() != h2.n() {
        return Some(Vec::new());
    }
    let rel = canonical_relabel(&ls1, &h1.labels, &ls2, &h2.labels);
    if !rel.consistent {
        return Some(Vec::new());
    }
    let f1 = torus::extract_params(&h1, 0)?;
    let deg = f1.deg;
    let mut intern: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut point_labels = |f: &torus::Frame, ranks: &[u32]| -> Vec<u32> {
        (0..f.points())
            .map(|i| {
                let t: Vec<u32> = (0..deg).map(|k| ranks[f.dart_at[i * deg + k]]).collect();
                let k = intern.len() as u32;
                *intern.entry(t).or_insert(k)
            })
            .collect()
    };
    let lab1 = point_labels(&f1, &rel.ranks1);
    let (g1, snf, _) = torus::orthogonalize(&f1, &lab1);
    let mut out = Vec::new();
    let mut y = 0;
    for _ in 0..deg {
        if let Some(f2) = torus::extract_params(&h2, y) {
            if f2.params == f1.params {
                let lab2 = point_labels(&f2, &rel.ranks2);
                let (g2, _, _) = torus::orthogonalize(&f2, &lab2);
                if let Some((dx, dy)) = crate::lattice::grid_match(&g1, &g2) {
                    let d = snf.point((dy as i64, dx as i64));
                    let img = f2.dart_at[f2.point_index(-d.0, -d.1) * deg];
                    out.push((o1[0], o2[img]));
                }
            }
        }
        y = h2.r.apply(y);
    }
    Some(out)
}

/// A witness isomorphism together with `Aut(m1)`; every isomorphism is
/// `witness ∘ g` for some `g` in the group.
#[derive(Clone, Debug)]
pub struct IsoResult {
    pub witness: Perm,
    pub aut: GeneratorSet,
}

pub fn iso_set(m1: &OrientedMap, m2: &OrientedMap, store: &mut LabelStore) -> Option<IsoResult> {
    let witness = iso_oriented(m1, m2, store)?;
    Some(IsoResult { witness, aut: aut_plus(m1, store).group })
}

/// A flag isomorphism `f1 → f2`, if one exists.
pub fn iso_flags(f1: &FlagMap, f2: &FlagMap, store: &mut LabelStore) -> Option<Perm> {
    if f1.n() != f2.n() || f1.is_orientable() != f2.is_orientable() || f1.count_cells() != f2.count_cells() {
        return None;
    }
    if f1.is_orientable() {
        let p1 = f1.oriented_from_flags(store).ok()?;
        let p2 = f2.oriented_from_flags(store).ok()?;
        let (a, b) = (p1.flag_of_dart[0], &p2.flag_of_dart);
        if let Some(psi) = iso_oriented(&p1.map, &p2.map, store) {
            return extend_flag_iso(f1, f2, a, b[psi.apply(0)]);
        }
        let psi = iso_oriented(&p1.map, &p2.mirror, store)?;
        return extend_flag_iso(f1, f2, a, f2.tau.apply(b[psi.apply(0)]));
    }
    let c1 = nonorientable::antipodal_double_cover(f1, store).ok()?;
    let c2 = nonorientable::antipodal_double_cover(f2, store).ok()?;
    let w = iso_oriented(&c1.map, &c2.map, store)?;
    let aut = aut_plus(&c1.map, store).group;
    aut.elements().into_iter().find_map(|g| extend_flag_iso(f1, f2, 0, w.apply(g.apply(0))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build;
    use crate::oracle::{oracle_aut_full_elements, oracle_aut_order, oracle_iso_set};
    use std::collections::HashSet;

    fn check(m: &OrientedMap, s: &mut LabelStore) -> AutPlus {
        let a = aut_plus(m, s);
        let ours: HashSet<Perm> = a.group.element_set();
        let oracle: HashSet<Perm> = oracle_aut_elements(m).into_iter().collect();
        assert_eq!(ours, oracle, "solver {:?}", a.solver);
        a
    }

    #[test]
    fn solids() {
        let mut s = LabelStore::new();
        assert_eq!(check(&build::tetrahedron(&mut s), &mut s).group.order, 12);
        for m in [build::cube(&mut s), build::octahedron(&mut s), build::icosahedron(&mut s)] {
            check(&m, &mut s);
        }
        check(&build::dodecahedron(&mut s), &mut s);
    }

    #[test]
    fn families_use_their_solvers() {
        let mut s = LabelStore::new();
        assert_eq!(check(&build::cycle(9, &mut s), &mut s).solver, Solver::Cycle);
        assert_eq!(check(&build::dipole(7, &mut s), &mut s).solver, Solver::Dipole);
        assert_eq!(check(&build::bouquet(6, &mut s), &mut s).solver, Solver::Bouquet);
        assert_eq!(check(&build::prism(7, &mut s), &mut s).solver, Solver::Dual);
        assert_eq!(check(&build::antiprism(6, &mut s), &mut s).solver, Solver::Dual);
        assert_eq!(check(&build::quad_torus(4, 3, 1, &mut s), &mut s).solver, Solver::Torus);
        assert_eq!(check(&build::hex_torus(3, 3, 0, &mut s), &mut s).solver, Solver::Torus);
    }

    #[test]
    fn t642_unlabeled() {
        let mut s = LabelStore::new();
        let m = build::tri_torus(6, 4, 2, &mut s);
        let a = check(&m, &mut s);
        assert_eq!(a.group.order, 48);
    }

    #[test]
    fn distinct_labels_trivial() {
        let mut s = LabelStore::new();
        let mut m = build::cube(&mut s);
        for x in 0..m.n() {
            m.labels[x] = s.leaf(x as i64 + 10);
        }
        let a = aut_plus(&m, &mut s);
        assert_eq!(a.group.order, 1);
        assert!(a.group.gens.is_empty());
    }

    #[test]
    fn full_oriented_matches_oracle() {
        let mut s = LabelStore::new();
        for m in [build::tetrahedron(&mut s), build::prism(5, &mut s), build::quad_torus(3, 2, 1, &mut s)] {
            let g = aut_full_oriented(&m, &mut s);
            let oracle: HashSet<Perm> = oracle_aut_full_elements(&m, &mut s).into_iter().collect();
            assert_eq!(g.order, oracle.len());
            assert_eq!(g.element_set(), oracle);
        }
    }

    #[test]
    fn iso_with_relabeled_copy() {
        let mut s = LabelStore::new();
        let maps = [
            build::tetrahedron(&mut s),
            build::prism(6, &mut s),
            build::cycle(10, &mut s),
            build::dipole(6, &mut s),
            build::bouquet(5, &mut s),
            build::quad_torus(4, 3, 1, &mut s),
            build::tri_torus(6, 4, 2, &mut s),
        ];
        for m in maps {
            let n = m.n();
            let p = Perm::from_images((0..n).map(|x| (x * 7 + 3) % n).collect()).unwrap_or_else(|| {
                Perm::from_images((0..n).map(|x| (x + 1) % n).collect()).unwrap()
            });
            let m2 = m.relabel_darts(&p);
            let w = iso_oriented(&m, &m2, &s).expect("isomorphic copy");
            let all: HashSet<Perm> = oracle_iso_set(&m, &m2).into_iter().collect();
            assert!(all.contains(&w));
            assert_eq!(all.len(), oracle_aut_order(&m));
        }
        assert!(iso_oriented(&build::tetrahedron(&mut s), &build::cube(&mut s), &s).is_none());
        assert!(iso_oriented(&build::prism(5, &mut s), &build::antiprism(5, &mut s), &s).is_none());
    }
}
