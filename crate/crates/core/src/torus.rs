//! Uniform toroidal maps: homogenization, straight-ahead parameters `(r, s, t)`,
//! and the label-preserving automorphisms as translations and rotations.

use std::collections::HashMap;

use crate::labels::{LabelId, LabelStore};
use crate::lattice::{grid_match, grid_subgroup, CyclicGrid, Snf};
use crate::maps::{extend_map_iso, extend_unlabeled, OrientedMap};
use crate::perm::Perm;
use crate::reduce::{run_scheduler, ScheduleOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusFamily {
    /// 4-valent quadrangulation `Q(r, s, t)`.
    Quad,
    /// 6-valent triangulation `T(r, s, t)`.
    Tri,
    /// 3-valent hexangulation, the dual of a triangulation.
    Hex,
}

impl TorusFamily {
    pub fn degree(self) -> usize {
        match self {
            TorusFamily::Quad => 4,
            TorusFamily::Tri => 6,
            TorusFamily::Hex => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusParams {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub family: TorusFamily,
}

/// The homogeneous type of a toroidal map, if it has one.
pub fn homogeneous_family(m: &OrientedMap) -> Option<TorusFamily> {
    if m.euler_characteristic() != 0 {
        return None;
    }
    let vd = m.vertices().len;
    let fd = m.faces().len;
    let all = |v: &[usize], k: usize| v.iter().all(|&d| d == k);
    if all(&vd, 4) && all(&fd, 4) {
        Some(TorusFamily::Quad)
    } else if all(&vd, 6) && all(&fd, 3) {
        Some(TorusFamily::Tri)
    } else if all(&vd, 3) && all(&fd, 6) {
        Some(TorusFamily::Hex)
    } else {
        None
    }
}

/// A homogeneous quadrangulation or triangulation obtained from a uniform
/// toroidal map by duals and reductions, with the dart of `m` for each of its darts.
pub fn homogenize(m: &OrientedMap, store: &mut LabelStore) -> Option<(OrientedMap, Vec<usize>)> {
    let mut cur = m.clone();
    let mut orig: Vec<usize> = (0..m.n()).collect();
    for _ in 0..4 {
        match homogeneous_family(&cur) {
            Some(TorusFamily::Quad) | Some(TorusFamily::Tri) => return Some((cur, orig)),
            Some(TorusFamily::Hex) => return Some((cur.dual(), orig)),
            None => {}
        }
        cur = cur.dual();
        if matches!(homogeneous_family(&cur), Some(TorusFamily::Quad) | Some(TorusFamily::Tri)) {
            return Some((cur, orig));
        }
        let trace = run_scheduler(&cur, store, ScheduleOptions::default());
        if trace.steps.is_empty() {
            return None;
        }
        orig = trace.orig.iter().map(|&x| orig[x]).collect();
        cur = trace.last;
    }
    None
}

/// Coordinates of a homogeneous quadrangulation or triangulation in the
/// basis `e1` (direction of the base dart) and `e2` (direction of `R·base`).
/// The lattice of periods is `⟨(r, 0), (−t, s)⟩`.
#[derive(Clone, Debug)]
pub struct Frame {
    pub params: TorusParams,
    pub deg: usize,
    /// Dart leaving grid point `idx = y·r + x` in direction `k`, at `idx·deg + k`.
    pub dart_at: Vec<usize>,
    /// Grid point and direction of every dart.
    pub pos: Vec<(usize, usize)>,
}

impl Frame {
    pub fn point_index(&self, a: i64, b: i64) -> usize {
        let (r, s, t) = (self.params.r as i64, self.params.s as i64, self.params.t as i64);
        let q = b.div_euclid(s);
        let bb = b - q * s;
        let aa = (a + q * t).rem_euclid(r);
        (bb * r + aa) as usize
    }

    pub fn point(&self, idx: usize) -> (i64, i64) {
        ((idx % self.params.r) as i64, (idx / self.params.r) as i64)
    }

    /// The dart permutation translating by `p`.
    pub fn translation(&self, p: (i64, i64)) -> Perm {
        let img: Vec<usize> = self
            .pos
            .iter()
            .map(|&(idx, k)| {
                let (a, b) = self.point(idx);
                self.dart_at[self.point_index(a + p.0, b + p.1) * self.deg + k]
            })
            .collect();
        Perm::from_images_unchecked(img)
    }

    pub fn points(&self) -> usize {
        self.params.r * self.params.s
    }
}

/// Straight-ahead parameters from `base`; `None` if the map is not a
/// homogeneous quadrangulation or triangulation.
pub fn extract_params(m: &OrientedMap, base: usize) -> Option<Frame> {
    let family = homogeneous_family(m)?;
    if family == TorusFamily::Hex {
        return None;
    }
    let deg = family.degree();
    let h = deg / 2;
    let r_pow = |x: usize, k: usize| (0..k).fold(x, |y, _| m.r.apply(y));
    let step1 = |f: usize| r_pow(m.l.apply(f), h);
    let step2 = |f: usize| r_pow(m.l.apply(m.r.apply(f)), h - 1);
    let verts = m.vertices();
    let nv = verts.count();
    let vid = |x: usize| verts.id[x];

    let walk_row = |start: usize| -> Option<Vec<usize>> {
        let mut row = vec![start];
        let mut f = step1(start);
        while vid(f) != vid(start) {
            row.push(f);
            f = step1(f);
            if row.len() > nv {
                return None;
            }
        }
        (f == start).then_some(row)
    };
    let row0 = walk_row(base)?;
    let r = row0.len();
    let mut x_of = vec![usize::MAX; nv];
    for (x, &f) in row0.iter().enumerate() {
        x_of[vid(f)] = x;
    }
    let mut f = base;
    let mut s = 0;
    let t = loop {
        f = step2(f);
        s += 1;
        if x_of[vid(f)] != usize::MAX {
            let t = x_of[vid(f)];
            if f != row0[t] {
                return None;
            }
            break t;
        }
        if s > nv {
            return None;
        }
    };
    if r * s != nv {
        return None;
    }
    let params = TorusParams { r, s, t, family };
    let mut dart_at = vec![usize::MAX; nv * deg];
    let mut pos = vec![(usize::MAX, 0); m.n()];
    let mut start = base;
    for y in 0..s {
        let row = if y == 0 { row0.clone() } else { walk_row(start)? };
        if row.len() != r {
            return None;
        }
        for (x, &f0) in row.iter().enumerate() {
            let idx = y * r + x;
            let mut d = f0;
            for k in 0..deg {
                if pos[d].0 != usize::MAX {
                    return None;
                }
                dart_at[idx * deg + k] = d;
                pos[d] = (idx, k);
                d = m.r.apply(d);
            }
        }
        start = step2(start);
    }
    Some(Frame { params, deg, dart_at, pos })
}

/// The grid of `ℤ² / ⟨(r, 0), (−t, s)⟩ ≅ ℤ_{d1} × ℤ_{d2}` with `t = 0`:
/// `d2` columns, `d1` rows, labels carried over from the grid points.
pub fn orthogonalize(frame: &Frame, point_labels: &[u32]) -> (CyclicGrid, Snf, Vec<usize>) {
    let p = frame.params;
    let snf = Snf::of([[p.r as i64, 0], [-(p.t as i64), p.s as i64]]);
    let (d1, d2) = (snf.d1 as usize, snf.d2 as usize);
    let mut labels = vec![0; d1 * d2];
    let mut cell_of = vec![0; frame.points()];
    for idx in 0..frame.points() {
        let (w1, w2) = snf.coords(frame.point(idx));
        let cell = w1 as usize * d2 + w2 as usize;
        labels[cell] = point_labels[idx];
        cell_of[idx] = cell;
    }
    (CyclicGrid::new(d2, d1, labels), snf, cell_of)
}

fn grid_shift_to_point(snf: &Snf, (dx, dy): (usize, usize)) -> (i64, i64) {
    snf.point((dy as i64, dx as i64))
}

/// Generators of the labeled orientation-preserving automorphisms of a
/// homogeneous quadrangulation or triangulation.
pub fn aut_homogeneous(m: &OrientedMap) -> Option<Vec<Perm>> {
    let frame = extract_params(m, 0)?;
    let deg = frame.deg;
    let np = frame.points();
    let mut intern: HashMap<Vec<LabelId>, u32> = HashMap::new();
    let mut id_of = |t: Vec<LabelId>| -> u32 {
        let k = intern.len() as u32;
        *intern.entry(t).or_insert(k)
    };
    let tuples: Vec<Vec<LabelId>> =
        (0..np).map(|i| (0..deg).map(|k| m.labels[frame.dart_at[i * deg + k]]).collect()).collect();
    let point_labels: Vec<u32> = tuples.iter().map(|t| id_of(t.clone())).collect();
    let (grid, snf, cell_of) = orthogonalize(&frame, &point_labels);
    let (a, b, c) = grid_subgroup(&grid);
    let mut gens = Vec::new();
    for shift in [(a, 0), (c, b)] {
        let shift = (shift.0 % grid.r, shift.1 % grid.s);
        if shift != (0, 0) {
            gens.push(frame.translation(grid_shift_to_point(&snf, shift)));
        }
    }
    let base = frame.dart_at[0];
    for k in (1..deg).filter(|k| deg % k == 0) {
        let target = frame.dart_at[k];
        let Some(rho) = extend_unlabeled(m, m, base, target) else { continue };
        let rho_inv = rho.inverse();
        let mut f_labels = vec![0; grid.labels.len()];
        let mut b_labels = vec![0; grid.labels.len()];
        for idx in 0..np {
            let rotated: Vec<LabelId> = (0..deg).map(|j| tuples[idx][(j + k) % deg]).collect();
            f_labels[cell_of[idx]] = id_of(rotated);
            let pre = frame.pos[rho_inv.apply(frame.dart_at[idx * deg])].0;
            b_labels[cell_of[idx]] = point_labels[pre];
        }
        let fg = CyclicGrid::new(grid.r, grid.s, f_labels);
        let bg = CyclicGrid::new(grid.r, grid.s, b_labels);
        if let Some(shift) = grid_match(&fg, &bg) {
            let tau = frame.translation(grid_shift_to_point(&snf, shift));
            gens.push(tau.compose(&rho));
            break;
        }
    }
    debug_assert!(gens.iter().all(|g| crate::maps::is_automorphism(m, g)), "torus generator is not an automorphism");
    Some(gens)
}

/// Generators of `Aut⁺` of a uniform toroidal map, or `None` when it does not
/// homogenize to a quadrangulation or triangulation.
pub fn aut_uniform_torus(m: &OrientedMap, store: &mut LabelStore) -> Option<Vec<Perm>> {
    let (h, orig) = homogenize(m, store)?;
    let gens = aut_homogeneous(&h)?;
    Some(
        gens.iter()
            .map(|g| {
                extend_map_iso(m, m, orig[0], orig[g.apply(0)]).expect("homogenized automorphism extends to the map")
            })
            .collect(),
    )
}
