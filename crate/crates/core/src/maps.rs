//! Oriented maps `(D, R, L, ℓ)` and flag maps `(F, λ, ρ, τ)`.

use thiserror::Error;

use crate::labels::{LabelId, LabelStore};
use crate::perm::Perm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("map has no darts")]
    Empty,
    #[error("{0} is not a permutation")]
    NotBijection(&'static str),
    #[error("permutation lengths differ")]
    LengthMismatch,
    #[error("{name} has a fixed point at {at}")]
    FixedPoint { name: &'static str, at: usize },
    #[error("{name} is not an involution at {at}")]
    NotInvolution { name: &'static str, at: usize },
    #[error("lambda and tau do not commute at {0}")]
    LambdaTauNotCommuting(usize),
    #[error("map is not connected ({0} orbits)")]
    NotTransitive(usize),
    #[error("odd Euler characteristic {0} on an orientable map")]
    OddCharacteristic(i64),
    #[error("map is not orientable")]
    NotOrientable,
    #[error("map is orientable")]
    Orientable,
}

/// An oriented map: rotation `r`, dart reversal `l`, one label per dart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedMap {
    pub r: Perm,
    pub l: Perm,
    pub labels: Vec<LabelId>,
}

/// Cycle structure of a permutation: cycle id per point, one representative
/// and the length of every cycle.
#[derive(Clone, Debug)]
pub struct Cycles {
    pub id: Vec<usize>,
    pub start: Vec<usize>,
    pub len: Vec<usize>,
}

impl Cycles {
    pub fn of(p: &Perm) -> Self {
        let n = p.len();
        let mut id = vec![usize::MAX; n];
        let mut start = Vec::new();
        let mut len = Vec::new();
        for s in 0..n {
            if id[s] != usize::MAX {
                continue;
            }
            let k = start.len();
            let mut x = s;
            let mut c = 0;
            while id[x] == usize::MAX {
                id[x] = k;
                x = p.apply(x);
                c += 1;
            }
            start.push(s);
            len.push(c);
        }
        Cycles { id, start, len }
    }

    pub fn count(&self) -> usize {
        self.start.len()
    }
}

pub fn validate_oriented(r: &Perm, l: &Perm) -> Result<(), MapError> {
    let n = r.len();
    if n == 0 {
        return Err(MapError::Empty);
    }
    if l.len() != n {
        return Err(MapError::LengthMismatch);
    }
    check_fpf_involution(l, "L")?;
    let orbits = orbit_count(n, &[r, l]);
    if orbits != 1 {
        return Err(MapError::NotTransitive(orbits));
    }
    Ok(())
}

fn check_fpf_involution(p: &Perm, name: &'static str) -> Result<(), MapError> {
    for x in 0..p.len() {
        let y = p.apply(x);
        if y == x {
            return Err(MapError::FixedPoint { name, at: x });
        }
        if p.apply(y) != x {
            return Err(MapError::NotInvolution { name, at: x });
        }
    }
    Ok(())
}

/// Number of orbits of the group generated by `gens` on `0..n`.
pub fn orbit_count(n: usize, gens: &[&Perm]) -> usize {
    orbit_ids(n, gens).1
}

pub fn orbit_ids(n: usize, gens: &[&Perm]) -> (Vec<usize>, usize) {
    let mut id = vec![usize::MAX; n];
    let mut k = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if id[s] != usize::MAX {
            continue;
        }
        id[s] = k;
        stack.push(s);
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = g.apply(x);
                if id[y] == usize::MAX {
                    id[y] = k;
                    stack.push(y);
                }
            }
        }
        k += 1;
    }
    (id, k)
}

impl OrientedMap {
    /// Builds and validates a map; labels must have one entry per dart.
    pub fn new(r: Perm, l: Perm, labels: Vec<LabelId>) -> Result<Self, MapError> {
        validate_oriented(&r, &l)?;
        if labels.len() != r.len() {
            return Err(MapError::LengthMismatch);
        }
        Ok(OrientedMap { r, l, labels })
    }

    /// Builds a map with the constant labeling from `store`.
    pub fn unlabeled(r: Perm, l: Perm, store: &mut LabelStore) -> Result<Self, MapError> {
        let labels = store.constant_labeling(r.len());
        Self::new(r, l, labels)
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    /// The face permutation `R⁻¹L`.
    pub fn face_perm(&self) -> Perm {
        let rinv = self.r.inverse();
        rinv.compose(&self.l)
    }

    pub fn vertices(&self) -> Cycles {
        Cycles::of(&self.r)
    }

    pub fn faces(&self) -> Cycles {
        Cycles::of(&self.face_perm())
    }

    pub fn count_cells(&self) -> (usize, usize, usize) {
        (self.r.cycle_count(), self.n() / 2, self.face_perm().cycle_count())
    }

    pub fn euler_characteristic(&self) -> i64 {
        let (v, e, f) = self.count_cells();
        v as i64 - e as i64 + f as i64
    }

    pub fn genus(&self) -> Result<usize, MapError> {
        let chi = self.euler_characteristic();
        if chi % 2 != 0 || chi > 2 {
            return Err(MapError::OddCharacteristic(chi));
        }
        Ok(((2 - chi) / 2) as usize)
    }

    /// `(D, R⁻¹L, L, ℓ)`.
    pub fn dual(&self) -> OrientedMap {
        OrientedMap { r: self.face_perm(), l: self.l.clone(), labels: self.labels.clone() }
    }

    /// `(D, R⁻¹, L, ℓ⁻)`.
    pub fn mirror(&self, store: &mut LabelStore) -> OrientedMap {
        OrientedMap { r: self.r.inverse(), l: self.l.clone(), labels: store.mirror_all(&self.labels) }
    }

    /// Every face has degree at least 3.
    pub fn is_face_normal(&self) -> bool {
        self.faces().len.iter().all(|&d| d >= 3)
    }

    /// Copy with darts renamed by `p` (dart `x` becomes `p(x)`).
    pub fn relabel_darts(&self, p: &Perm) -> OrientedMap {
        let n = self.n();
        let mut r = vec![0; n];
        let mut l = vec![0; n];
        let mut labels = vec![self.labels[0]; n];
        for x in 0..n {
            r[p.apply(x)] = p.apply(self.r.apply(x));
            l[p.apply(x)] = p.apply(self.l.apply(x));
            labels[p.apply(x)] = self.labels[x];
        }
        OrientedMap {
            r: Perm::from_images_unchecked(r),
            l: Perm::from_images_unchecked(l),
            labels,
        }
    }
}

/// Light-vertex degree bound for a face-normal map of characteristic `chi`.
pub fn light_bound(chi: i64) -> usize {
    if chi > 0 {
        5
    } else {
        (6 * (1 - chi)) as usize
    }
}

/// Vertices (as R-cycle ids) of degree at most [`light_bound`].
pub fn light_vertices(m: &OrientedMap) -> Vec<usize> {
    let b = light_bound(m.euler_characteristic());
    let vs = m.vertices();
    (0..vs.count()).filter(|&v| vs.len[v] <= b).collect()
}

/// Extends `x ↦ y` to an isomorphism from `(r1, l1)` to `(r2, l2)` that also
/// preserves `lab1`/`lab2`. Returns the dart images if one exists.
pub fn extend_iso<T: PartialEq>(
    a: (&Perm, &Perm, &[T]),
    b: (&Perm, &Perm, &[T]),
    x: usize,
    y: usize,
) -> Option<Vec<usize>> {
    let n = a.0.len();
    if b.0.len() != n {
        return None;
    }
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    img[x] = y;
    used[y] = true;
    let mut stack = vec![x];
    while let Some(u) = stack.pop() {
        let v = img[u];
        if a.2[u] != b.2[v] {
            return None;
        }
        for (pu, pv) in [(a.0.apply(u), b.0.apply(v)), (a.1.apply(u), b.1.apply(v))] {
            if img[pu] == usize::MAX {
                if used[pv] {
                    return None;
                }
                img[pu] = pv;
                used[pv] = true;
                stack.push(pu);
            } else if img[pu] != pv {
                return None;
            }
        }
    }
    if img.contains(&usize::MAX) {
        return None;
    }
    Some(img)
}

/// Labeled extension between two maps sharing a label store.
pub fn extend_map_iso(m1: &OrientedMap, m2: &OrientedMap, x: usize, y: usize) -> Option<Perm> {
    extend_iso((&m1.r, &m1.l, &m1.labels), (&m2.r, &m2.l, &m2.labels), x, y)
        .map(Perm::from_images_unchecked)
}

/// Whether `g` commutes with `R` and `L` and preserves the labels.
pub fn is_automorphism(m: &OrientedMap, g: &Perm) -> bool {
    g.len() == m.n()
        && g.commutes_with(&m.r)
        && g.commutes_with(&m.l)
        && (0..m.n()).all(|x| m.labels[g.apply(x)] == m.labels[x])
}

/// Extension ignoring labels.
pub fn extend_unlabeled(m1: &OrientedMap, m2: &OrientedMap, x: usize, y: usize) -> Option<Perm> {
    let z1 = vec![(); m1.n()];
    let z2 = vec![(); m2.n()];
    extend_iso((&m1.r, &m1.l, &z1), (&m2.r, &m2.l, &z2), x, y).map(Perm::from_images_unchecked)
}

/// A non-oriented map given by three fixed-point-free involutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagMap {
    pub lambda: Perm,
    pub rho: Perm,
    pub tau: Perm,
}

/// The two mutually mirror oriented maps of an orientable flag map.
#[derive(Clone, Debug)]
pub struct OrientedPair {
    pub map: OrientedMap,
    pub mirror: OrientedMap,
    /// Flag corresponding to each dart.
    pub flag_of_dart: Vec<usize>,
}

impl FlagMap {
    pub fn new(lambda: Perm, rho: Perm, tau: Perm) -> Result<Self, MapError> {
        let n = lambda.len();
        if n == 0 {
            return Err(MapError::Empty);
        }
        if rho.len() != n || tau.len() != n {
            return Err(MapError::LengthMismatch);
        }
        check_fpf_involution(&lambda, "lambda")?;
        check_fpf_involution(&rho, "rho")?;
        check_fpf_involution(&tau, "tau")?;
        for x in 0..n {
            if lambda.apply(tau.apply(x)) != tau.apply(lambda.apply(x)) {
                return Err(MapError::LambdaTauNotCommuting(x));
            }
        }
        let orbits = orbit_count(n, &[&lambda, &rho, &tau]);
        if orbits != 1 {
            return Err(MapError::NotTransitive(orbits));
        }
        Ok(FlagMap { lambda, rho, tau })
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    /// `(v, e, f)` as orbit counts of `⟨ρ,τ⟩`, `⟨λ,τ⟩`, `⟨ρ,λ⟩`.
    pub fn count_cells(&self) -> (usize, usize, usize) {
        let n = self.n();
        (
            orbit_count(n, &[&self.rho, &self.tau]),
            orbit_count(n, &[&self.lambda, &self.tau]),
            orbit_count(n, &[&self.rho, &self.lambda]),
        )
    }

    pub fn euler_characteristic(&self) -> i64 {
        let (v, e, f) = self.count_cells();
        v as i64 - e as i64 + f as i64
    }

    /// `ρτ` and `τλ`, the generators of the even-word subgroup.
    pub fn even_generators(&self) -> (Perm, Perm) {
        (self.rho.compose(&self.tau), self.tau.compose(&self.lambda))
    }

    /// Orientable iff the even-word subgroup is intransitive.
    pub fn is_orientable(&self) -> bool {
        let (a, b) = self.even_generators();
        orbit_count(self.n(), &[&a, &b]) > 1
    }

    /// Orientability as bipartiteness of the cubic flag graph.
    pub fn is_orientable_barycentric(&self) -> bool {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        color[0] = 0;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for g in [&self.lambda, &self.rho, &self.tau] {
                let y = g.apply(x);
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    stack.push(y);
                } else if color[y] == color[x] {
                    return false;
                }
            }
        }
        true
    }

    pub fn genus(&self) -> Result<usize, MapError> {
        if !self.is_orientable() {
            return Err(MapError::NotOrientable);
        }
        let chi = self.euler_characteristic();
        if chi % 2 != 0 {
            return Err(MapError::OddCharacteristic(chi));
        }
        Ok(((2 - chi) / 2) as usize)
    }

    /// Non-orientable genus `2 − χ`.
    pub fn nonorientable_genus(&self) -> Result<usize, MapError> {
        if self.is_orientable() {
            return Err(MapError::Orientable);
        }
        Ok((2 - self.euler_characteristic()) as usize)
    }

    /// The oriented map on the even-word class containing flag 0, and its mirror.
    pub fn oriented_from_flags(&self, store: &mut LabelStore) -> Result<OrientedPair, MapError> {
        if !self.is_orientable() {
            return Err(MapError::NotOrientable);
        }
        let n = self.n();
        let (a, b) = self.even_generators();
        let (ids, _) = orbit_ids(n, &[&a, &b]);
        let class = ids[0];
        let flag_of_dart: Vec<usize> = (0..n).filter(|&x| ids[x] == class).collect();
        let mut dart_of_flag = vec![usize::MAX; n];
        for (d, &x) in flag_of_dart.iter().enumerate() {
            dart_of_flag[x] = d;
        }
        let r: Vec<usize> = flag_of_dart.iter().map(|&x| dart_of_flag[a.apply(x)]).collect();
        let l: Vec<usize> = flag_of_dart.iter().map(|&x| dart_of_flag[b.apply(x)]).collect();
        let map = OrientedMap::unlabeled(
            Perm::from_images(r).expect("rho tau restricts to a permutation"),
            Perm::from_images(l).expect("tau lambda restricts to a permutation"),
            store,
        )?;
        let mirror = map.mirror(store);
        Ok(OrientedPair { map, mirror, flag_of_dart })
    }

    /// Flag map of an oriented map with the given twisted edges (indexed by
    /// the lower dart of each `L`-pair). Flags are `2x` and `2x + 1`.
    pub fn from_signed(m: &OrientedMap, twisted: &dyn Fn(usize) -> bool) -> FlagMap {
        let n = m.n();
        let mut lambda = vec![0; 2 * n];
        let mut rho = vec![0; 2 * n];
        let mut tau = vec![0; 2 * n];
        for x in 0..n {
            let lx = m.l.apply(x);
            let tw = twisted(x.min(lx));
            for s in 0..2 {
                let f = 2 * x + s;
                tau[f] = 2 * x + (1 - s);
                lambda[f] = 2 * lx + if tw { s } else { 1 - s };
            }
            rho[2 * x + 1] = 2 * m.r.apply(x);
            rho[2 * m.r.apply(x)] = 2 * x + 1;
        }
        FlagMap::new(
            Perm::from_images_unchecked(lambda),
            Perm::from_images_unchecked(rho),
            Perm::from_images_unchecked(tau),
        )
        .expect("signed rotation system yields a flag map")
    }

    /// Copy with flags renamed by `p`.
    pub fn relabel_flags(&self, p: &Perm) -> FlagMap {
        let conj = |g: &Perm| {
            let mut out = vec![0; g.len()];
            for x in 0..g.len() {
                out[p.apply(x)] = p.apply(g.apply(x));
            }
            Perm::from_images_unchecked(out)
        };
        FlagMap { lambda: conj(&self.lambda), rho: conj(&self.rho), tau: conj(&self.tau) }
    }
}

/// Flag-map extension `x ↦ y` commuting with λ, ρ, τ.
pub fn extend_flag_iso(f1: &FlagMap, f2: &FlagMap, x: usize, y: usize) -> Option<Perm> {
    let n = f1.n();
    if f2.n() != n {
        return None;
    }
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    img[x] = y;
    used[y] = true;
    let mut stack = vec![x];
    while let Some(u) = stack.pop() {
        let v = img[u];
        for (g1, g2) in [(&f1.lambda, &f2.lambda), (&f1.rho, &f2.rho), (&f1.tau, &f2.tau)] {
            let (pu, pv) = (g1.apply(u), g2.apply(v));
            if img[pu] == usize::MAX {
                if used[pv] {
                    return None;
                }
                img[pu] = pv;
                used[pv] = true;
                stack.push(pu);
            } else if img[pu] != pv {
                return None;
            }
        }
    }
    Some(Perm::from_images_unchecked(img))
}
