//! Irreducible spherical maps: cycles, dipoles and bouquets via labeled
//! cycles, uniform maps via their duals.

use std::collections::HashMap;

use crate::cycle::{cycle_iso, cycle_rotation_generator, LabeledCycle};
use crate::labels::{LabelId, LabelStore};
use crate::maps::OrientedMap;
use crate::perm::Perm;
use crate::reduce::{run_scheduler, ScheduleOptions, Terminal};

/// Every vertex has degree 2 and the map is planar.
pub fn is_cycle_map(m: &OrientedMap) -> bool {
    m.euler_characteristic() == 2 && m.vertices().len.iter().all(|&d| d == 2)
}

/// Two vertices joined by `n` edges, all faces 2-gons.
pub fn is_standard_dipole(m: &OrientedMap) -> bool {
    m.euler_characteristic() == 2 && m.vertices().count() == 2 && m.faces().len.iter().all(|&d| d == 2)
}

/// One vertex with `n ≥ 2` loops `x_i`, each with `R x_i = x_i⁻¹`.
pub fn is_standard_bouquet(m: &OrientedMap) -> bool {
    let n = m.n();
    if n < 4 || m.vertices().count() != 1 || m.euler_characteristic() != 2 {
        return false;
    }
    let heads = (0..n).filter(|&x| m.r.apply(x) == m.l.apply(x)).count();
    heads * 2 == n && (0..n).all(|x| m.r.apply(x) == m.l.apply(x) || m.r.apply(m.l.apply(x)) == x)
}

/// Darts `f_i` walking forward around a cycle map from `start`, with `f_{i+1} = R L f_i`.
pub fn cycle_walk(m: &OrientedMap, start: usize) -> Vec<usize> {
    let mut f = vec![start];
    let mut x = m.r.apply(m.l.apply(start));
    while x != start {
        f.push(x);
        x = m.r.apply(m.l.apply(x));
    }
    f
}

struct PairIntern(HashMap<(LabelId, LabelId), u32>);

impl PairIntern {
    fn id(&mut self, p: (LabelId, LabelId)) -> u32 {
        let k = self.0.len() as u32;
        *self.0.entry(p).or_insert(k)
    }
}

/// The labeled cycle of a cycle map read from `start`: vertex `i` carries the
/// labels of `f_i` and of `L f_{i−1}`.
pub fn cycle_map_labels(m: &OrientedMap, start: usize) -> LabeledCycle {
    let f = cycle_walk(m, start);
    let mut tab = PairIntern(HashMap::new());
    let n = f.len();
    LabeledCycle::new(
        (0..n).map(|i| tab.id((m.labels[f[i]], m.labels[m.l.apply(f[(i + n - 1) % n])]))).collect(),
    )
}

/// Generators of `Aut⁺` of a labeled cycle map: a rotation and possibly a flip.
pub fn aut_cycle_map(m: &OrientedMap) -> Vec<Perm> {
    let f = cycle_walk(m, 0);
    let n = f.len();
    debug_assert_eq!(2 * n, m.n());
    let b: Vec<usize> = f.iter().map(|&x| m.l.apply(x)).collect();
    let mut tab = PairIntern(HashMap::new());
    let v: Vec<u32> = (0..n).map(|i| tab.id((m.labels[f[i]], m.labels[b[(i + n - 1) % n]]))).collect();
    let w: Vec<u32> = (0..n).map(|i| tab.id((m.labels[b[(i + n - 1) % n]], m.labels[f[i]]))).collect();
    let x = LabeledCycle::new(v);
    let mut gens = Vec::new();
    let p = cycle_rotation_generator(&x);
    let mut img = vec![0; m.n()];
    if p < n {
        for i in 0..n {
            img[f[i]] = f[(i + p) % n];
            img[b[i]] = b[(i + p) % n];
        }
        gens.push(Perm::from_images_unchecked(img.clone()));
    }
    let y = LabeledCycle::new((0..n).map(|j| w[(n - j) % n]).collect());
    if let Some(o) = cycle_iso(&x, &y) {
        let c = (2 * n - o - 1) % n;
        for i in 0..n {
            let j = (c + n - i) % n;
            img[f[i]] = b[j];
            img[b[i]] = f[j];
        }
        gens.push(Perm::from_images_unchecked(img));
    }
    debug_assert!(gens.iter().all(|g| crate::maps::is_automorphism(m, g)));
    gens
}

/// Images of dart 0 under the isomorphisms between two labeled cycle maps.
pub fn cycle_map_isos(m1: &OrientedMap, m2: &OrientedMap) -> Vec<usize> {
    let f1 = cycle_walk(m1, 0);
    let f2 = cycle_walk(m2, 0);
    let n = f1.len();
    if f2.len() != n {
        return Vec::new();
    }
    let mut tab = PairIntern(HashMap::new());
    let mut read = |m: &OrientedMap, f: &[usize], swap: bool| -> Vec<u32> {
        (0..n)
            .map(|i| {
                let a = m.labels[f[i]];
                let b = m.labels[m.l.apply(f[(i + n - 1) % n])];
                tab.id(if swap { (b, a) } else { (a, b) })
            })
            .collect()
    };
    let x1 = LabeledCycle::new(read(m1, &f1, false));
    let x2 = LabeledCycle::new(read(m2, &f2, false));
    let w2 = read(m2, &f2, true);
    let mut out = Vec::new();
    if let Some(o) = cycle_iso(&x1, &x2) {
        out.push(f2[o]);
    }
    let y2 = LabeledCycle::new((0..n).map(|j| w2[(n - j) % n]).collect());
    if let Some(o) = cycle_iso(&x1, &y2) {
        let c = (2 * n - o - 1) % n;
        out.push(m2.l.apply(f2[c]));
    }
    out
}

/// Loops of a standard bouquet in rotation order, each as `(x_i, x_i⁻¹)`.
fn bouquet_loops(m: &OrientedMap) -> Vec<(usize, usize)> {
    let start = (0..m.n()).find(|&x| m.r.apply(x) == m.l.apply(x)).expect("standard bouquet");
    let mut out = vec![(start, m.l.apply(start))];
    let mut x = m.r.apply(m.r.apply(start));
    while x != start {
        out.push((x, m.l.apply(x)));
        x = m.r.apply(m.r.apply(x));
    }
    out
}

/// The labeled cycle of loops of a standard bouquet.
pub fn bouquet_labels(m: &OrientedMap) -> LabeledCycle {
    let mut tab = PairIntern(HashMap::new());
    LabeledCycle::new(bouquet_loops(m).iter().map(|&(a, b)| tab.id((m.labels[a], m.labels[b]))).collect())
}

/// Generators of `Aut⁺` of a standard bouquet: rotations of its loops.
pub fn aut_bouquet(m: &OrientedMap) -> Vec<Perm> {
    let loops = bouquet_loops(m);
    let k = loops.len();
    let p = cycle_rotation_generator(&bouquet_labels(m));
    if p == k {
        return Vec::new();
    }
    let mut img = vec![0; m.n()];
    for i in 0..k {
        img[loops[i].0] = loops[(i + p) % k].0;
        img[loops[i].1] = loops[(i + p) % k].1;
    }
    let g = Perm::from_images_unchecked(img);
    debug_assert!(crate::maps::is_automorphism(m, &g));
    vec![g]
}

/// Images of the first loop dart of `m1` under isomorphisms of standard bouquets.
pub fn bouquet_isos(m1: &OrientedMap, m2: &OrientedMap) -> Vec<usize> {
    let l1 = bouquet_loops(m1);
    let l2 = bouquet_loops(m2);
    if l1.len() != l2.len() {
        return Vec::new();
    }
    let mut tab = PairIntern(HashMap::new());
    let mut read = |m: &OrientedMap, l: &[(usize, usize)]| -> LabeledCycle {
        LabeledCycle::new(l.iter().map(|&(a, b)| tab.id((m.labels[a], m.labels[b]))).collect())
    };
    let p1 = read(m1, &l1);
    let p2 = read(m2, &l2);
    cycle_iso(&p1, &p2).map(|o| vec![l2[o].0]).unwrap_or_default()
}

/// First dart of the loop list of a standard bouquet.
pub fn bouquet_base(m: &OrientedMap) -> usize {
    bouquet_loops(m)[0].0
}

/// The labeled cycle describing a cycle map, dipole, bouquet, prism or
/// antiprism, or `None` for other maps.
pub fn family_to_cycle(m: &OrientedMap, store: &mut LabelStore) -> Option<LabeledCycle> {
    if is_cycle_map(m) {
        return Some(cycle_map_labels(m, 0));
    }
    if is_standard_dipole(m) {
        return Some(cycle_map_labels(&m.dual(), 0));
    }
    if is_standard_bouquet(m) {
        return Some(bouquet_labels(m));
    }
    if m.euler_characteristic() != 2 {
        return None;
    }
    let d = m.dual();
    let trace = run_scheduler(&d, store, ScheduleOptions::default());
    if trace.steps.is_empty() {
        return None;
    }
    match trace.terminal {
        Terminal::Dipole if is_standard_dipole(&trace.last) => Some(cycle_map_labels(&trace.last.dual(), 0)),
        _ => None,
    }
}
