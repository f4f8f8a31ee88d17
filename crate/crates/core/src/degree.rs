//! Cyclic minimal representatives, degree types and their classification,
//! and the vertex-face incidence map.

use std::cmp::Ordering;

use crate::labels::LabelStore;
use crate::maps::{Cycles, OrientedMap};
use crate::perm::Perm;

/// Start index of the lexicographically least rotation (Booth).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: isize| &s[(i as usize) % n];
    let mut f = vec![-1isize; 2 * n];
    let mut k: isize = 0;
    for j in 1..(2 * n) as isize {
        let sj = at(j);
        let mut i = f[(j - k - 1) as usize];
        while i != -1 && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = f[i as usize];
        }
        if sj != at(k + i + 1) {
            if sj < at(k) {
                k = j;
            }
            f[(j - k) as usize] = -1;
        } else {
            f[(j - k) as usize] = i + 1;
        }
    }
    (k as usize) % n
}

pub fn rotate<T: Clone>(s: &[T], k: usize) -> Vec<T> {
    let n = s.len();
    (0..n).map(|i| s[(i + k) % n].clone()).collect()
}

pub fn min_rotation<T: Ord + Clone>(s: &[T]) -> Vec<T> {
    rotate(s, least_rotation(s))
}

/// KMP failure function: `fail[i]` is the length of the longest proper
/// border of `s[..i]`.
pub fn prefix_function<T: Eq>(s: &[T]) -> Vec<usize> {
    let n = s.len();
    let mut fail = vec![0; n + 1];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = fail[k];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i + 1] = k;
    }
    fail
}

/// Smallest `p > 0` with `s` invariant under rotation by `p`; always divides `len`.
pub fn cyclic_period<T: Eq>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 1;
    }
    let fail = prefix_function(s);
    let p = n - fail[n];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

/// Shorter vectors first, then lexicographic.
pub fn cmp_type<T: Ord>(a: &[T], b: &[T]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    /// Minimal rotation of neighbor degrees.
    pub degree_type: Vec<usize>,
    /// Minimal rotation of incident face degrees, `ref(v)`.
    pub local_type: Vec<usize>,
    /// Minimal rotation of neighbor `ref` vectors under [`cmp_type`].
    pub refined_degree_type: Vec<Vec<usize>>,
}

/// Classification of a cyclic neighbor sequence relative to the vertex's own value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeClass {
    /// Every neighbor is larger.
    Large,
    /// Mixed, without rotational symmetry.
    SmallAperiodic,
    /// Mixed, with a nontrivial period whose blocks each hold exactly one equal entry.
    SmallPeriodic,
    /// Mixed and rotationally symmetric, but not periodic in the above sense.
    SmallSymmetric,
    /// Every neighbor is equal.
    Homogeneous,
    /// Some neighbor is smaller.
    Dominated,
}

pub fn classify_cyclic<T: Ord>(seq: &[T], own: &T) -> TypeClass {
    if seq.iter().any(|m| m < own) {
        return TypeClass::Dominated;
    }
    let eq = seq.iter().filter(|m| *m == own).count();
    if eq == 0 {
        return TypeClass::Large;
    }
    if eq == seq.len() {
        return TypeClass::Homogeneous;
    }
    let p = cyclic_period(seq);
    if p == seq.len() {
        TypeClass::SmallAperiodic
    } else if seq[..p].iter().filter(|m| *m == own).count() == 1 {
        TypeClass::SmallPeriodic
    } else {
        TypeClass::SmallSymmetric
    }
}

/// Classifies a degree type of a vertex of degree `d`.
pub fn classify_type(profile: &DegreeProfile, d: usize) -> TypeClass {
    classify_cyclic(&profile.degree_type, &d)
}

/// Per-dart and per-vertex tables shared by profile computations.
pub struct Local {
    pub verts: Cycles,
    pub faces: Cycles,
}

impl Local {
    pub fn of(m: &OrientedMap) -> Self {
        Local { verts: m.vertices(), faces: m.faces() }
    }

    /// Rotation at vertex `v`, starting at its representative dart.
    pub fn rotation(&self, m: &OrientedMap, v: usize) -> Vec<usize> {
        let s = self.verts.start[v];
        let mut out = Vec::with_capacity(self.verts.len[v]);
        let mut x = s;
        loop {
            out.push(x);
            x = m.r.apply(x);
            if x == s {
                break;
            }
        }
        out
    }

    /// Degree of the vertex at the far end of dart `x`.
    pub fn far_degree(&self, m: &OrientedMap, x: usize) -> usize {
        self.verts.len[self.verts.id[m.l.apply(x)]]
    }

    /// Face degree of the corner at dart `x`.
    pub fn corner_face_degree(&self, x: usize) -> usize {
        self.faces.len[self.faces.id[x]]
    }

    /// `ref(v)` for every vertex, as raw sequences starting at the representative dart.
    pub fn raw_refs(&self, m: &OrientedMap) -> Vec<Vec<usize>> {
        (0..self.verts.count())
            .map(|v| self.rotation(m, v).iter().map(|&x| self.corner_face_degree(x)).collect())
            .collect()
    }
}

/// Dense ranks of `ref(v)` (minimal rotations) under [`cmp_type`], one per vertex.
pub fn ref_ranks(refs_min: &[Vec<usize>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..refs_min.len()).collect();
    order.sort_by(|&a, &b| cmp_type(&refs_min[a], &refs_min[b]));
    let mut rank = vec![0; refs_min.len()];
    let mut r = 0;
    for i in 0..order.len() {
        if i > 0 && refs_min[order[i]] != refs_min[order[i - 1]] {
            r += 1;
        }
        rank[order[i]] = r;
    }
    rank
}

pub fn all_profiles(m: &OrientedMap) -> Vec<DegreeProfile> {
    let loc = Local::of(m);
    let refs: Vec<Vec<usize>> = loc.raw_refs(m).iter().map(|r| min_rotation(r)).collect();
    let ranks = ref_ranks(&refs);
    (0..loc.verts.count())
        .map(|v| {
            let rot = loc.rotation(m, v);
            let degs: Vec<usize> = rot.iter().map(|&x| loc.far_degree(m, x)).collect();
            let nranks: Vec<usize> = rot.iter().map(|&x| ranks[loc.verts.id[m.l.apply(x)]]).collect();
            let k = least_rotation(&nranks);
            let refined = rotate(&rot, k)
                .iter()
                .map(|&x| refs[loc.verts.id[m.l.apply(x)]].clone())
                .collect();
            DegreeProfile { degree_type: min_rotation(&degs), local_type: refs[v].clone(), refined_degree_type: refined }
        })
        .collect()
}

/// Profile of vertex `v` (an R-cycle id as in [`OrientedMap::vertices`]).
pub fn degree_profile(m: &OrientedMap, v: usize) -> DegreeProfile {
    all_profiles(m).swap_remove(v)
}

/// The bipartite quadrangular vertex-face incidence map.
#[derive(Clone, Debug)]
pub struct IncidenceMap {
    pub map: OrientedMap,
    /// Incidence-map vertex (R-cycle id) of each source vertex.
    pub vertex_of_source: Vec<usize>,
}

/// Darts `2x` sit at the source vertex of corner `x`, darts `2x + 1` at its face.
pub fn build_incidence_map(m: &OrientedMap, store: &mut LabelStore) -> IncidenceMap {
    let n = m.n();
    let phi = m.face_perm();
    let mut r = vec![0; 2 * n];
    let mut l = vec![0; 2 * n];
    for x in 0..n {
        r[2 * x] = 2 * m.r.apply(x);
        r[2 * x + 1] = 2 * phi.apply(x) + 1;
        l[2 * x] = 2 * x + 1;
        l[2 * x + 1] = 2 * x;
    }
    let map = OrientedMap::unlabeled(Perm::from_images_unchecked(r), Perm::from_images_unchecked(l), store)
        .expect("incidence map is connected");
    let gv = map.vertices();
    let sv = m.vertices();
    let vertex_of_source = (0..sv.count()).map(|v| gv.id[2 * sv.start[v]]).collect();
    IncidenceMap { map, vertex_of_source }
}
