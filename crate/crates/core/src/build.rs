//! Constructors for standard maps used as fixtures and examples.

use std::collections::HashMap;

use crate::labels::LabelStore;
use crate::maps::{FlagMap, OrientedMap};
use crate::perm::Perm;

/// Map from oriented face boundaries (vertex lists). Every directed edge must
/// occur in exactly one face, so the underlying graph must be simple.
pub fn from_faces(faces: &[Vec<usize>], store: &mut LabelStore) -> OrientedMap {
    let mut dart: HashMap<(usize, usize), usize> = HashMap::new();
    let mut ends = Vec::new();
    for f in faces {
        for i in 0..f.len() {
            let e = (f[i], f[(i + 1) % f.len()]);
            assert!(dart.insert(e, ends.len()).is_none(), "directed edge {e:?} repeated");
            ends.push(e);
        }
    }
    let n = ends.len();
    // phi maps a dart to the next dart along its face.
    let mut phi = vec![0; n];
    for f in faces {
        for i in 0..f.len() {
            let a = dart[&(f[i], f[(i + 1) % f.len()])];
            let b = dart[&(f[(i + 1) % f.len()], f[(i + 2) % f.len()])];
            phi[a] = b;
        }
    }
    let l: Vec<usize> = ends.iter().map(|&(u, v)| dart[&(v, u)]).collect();
    let phi = Perm::from_images(phi).unwrap();
    let l = Perm::from_images(l).unwrap();
    let r = l.compose(&phi.inverse());
    OrientedMap::unlabeled(r, l, store).expect("faces describe a connected closed surface")
}

pub fn tetrahedron(store: &mut LabelStore) -> OrientedMap {
    from_faces(&[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]], store)
}

fn prism_faces(n: usize) -> Vec<Vec<usize>> {
    let mut faces = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).rev().collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![j, i, n + i, n + j]);
    }
    faces
}

/// `n`-prism, `n ≥ 3`.
pub fn prism(n: usize, store: &mut LabelStore) -> OrientedMap {
    from_faces(&prism_faces(n), store)
}

pub fn cube(store: &mut LabelStore) -> OrientedMap {
    prism(4, store)
}

fn antiprism_sides(n: usize) -> Vec<Vec<usize>> {
    let mut faces = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![j, i, n + i]);
        faces.push(vec![j, n + i, n + j]);
    }
    faces
}

/// `n`-antiprism, `n ≥ 3`.
pub fn antiprism(n: usize, store: &mut LabelStore) -> OrientedMap {
    let mut faces = antiprism_sides(n);
    faces.push((0..n).collect());
    faces.push((n..2 * n).rev().collect());
    from_faces(&faces, store)
}

/// `n`-bipyramid over a cycle, `n ≥ 3`.
pub fn bipyramid(n: usize, store: &mut LabelStore) -> OrientedMap {
    let mut faces = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, j, n]);
        faces.push(vec![j, i, n + 1]);
    }
    from_faces(&faces, store)
}

pub fn octahedron(store: &mut LabelStore) -> OrientedMap {
    bipyramid(4, store)
}

pub fn icosahedron(store: &mut LabelStore) -> OrientedMap {
    let n = 5;
    let mut faces = antiprism_sides(n);
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, j, 2 * n]);
        faces.push(vec![n + j, n + i, 2 * n + 1]);
    }
    from_faces(&faces, store)
}

pub fn dodecahedron(store: &mut LabelStore) -> OrientedMap {
    icosahedron(store).dual()
}

/// Spherical cycle with `n` vertices: darts `i` point forward, `n + i` backward.
pub fn cycle(n: usize, store: &mut LabelStore) -> OrientedMap {
    let mut r = vec![0; 2 * n];
    let mut l = vec![0; 2 * n];
    for i in 0..n {
        l[i] = n + i;
        l[n + i] = i;
        let prev_back = n + (i + n - 1) % n;
        r[i] = prev_back;
        r[prev_back] = i;
    }
    OrientedMap::unlabeled(Perm::from_images(r).unwrap(), Perm::from_images(l).unwrap(), store).unwrap()
}

/// Two vertices joined by `n` parallel edges; dart `i` at the first vertex, `n + i` at the second.
pub fn dipole(n: usize, store: &mut LabelStore) -> OrientedMap {
    let mut r = vec![0; 2 * n];
    let mut l = vec![0; 2 * n];
    for i in 0..n {
        l[i] = n + i;
        l[n + i] = i;
        r[i] = (i + 1) % n;
        r[n + i] = n + (i + n - 1) % n;
    }
    OrientedMap::unlabeled(Perm::from_images(r).unwrap(), Perm::from_images(l).unwrap(), store).unwrap()
}

/// One vertex with `n` loops, each bounding a 1-face.
pub fn bouquet(n: usize, store: &mut LabelStore) -> OrientedMap {
    let r: Vec<usize> = (0..2 * n).map(|x| (x + 1) % (2 * n)).collect();
    let l: Vec<usize> = (0..2 * n).map(|x| x ^ 1).collect();
    OrientedMap::unlabeled(Perm::from_images(r).unwrap(), Perm::from_images(l).unwrap(), store).unwrap()
}

/// Neighbor directions of the square grid in rotation order.
pub const QUAD_DIRS: [(i64, i64); 4] = [(1, 0), (0, -1), (-1, 0), (0, 1)];
/// Neighbor directions of the triangular grid in rotation order.
pub const TRI_DIRS: [(i64, i64); 6] = [(1, 0), (0, -1), (-1, -1), (-1, 0), (0, 1), (1, 1)];

/// Index of grid point `(x, y)` in the quotient by `(r, 0)` and `(t, s)`.
pub fn torus_vertex(r: usize, s: usize, t: usize, x: i64, y: i64) -> usize {
    let (r, s, t) = (r as i64, s as i64, t as i64);
    let q = y.div_euclid(s);
    let yy = y.rem_euclid(s);
    let xx = (x - q * t).rem_euclid(r);
    (yy * r + xx) as usize
}

fn grid_torus(r: usize, s: usize, t: usize, dirs: &[(i64, i64)], store: &mut LabelStore) -> OrientedMap {
    let deg = dirs.len();
    let v = r * s;
    let mut rr = vec![0; v * deg];
    let mut ll = vec![0; v * deg];
    for y in 0..s {
        for x in 0..r {
            let u = y * r + x;
            for (k, &(dx, dy)) in dirs.iter().enumerate() {
                let w = torus_vertex(r, s, t, x as i64 + dx, y as i64 + dy);
                rr[u * deg + k] = u * deg + (k + 1) % deg;
                ll[u * deg + k] = w * deg + (k + deg / 2) % deg;
            }
        }
    }
    OrientedMap::unlabeled(Perm::from_images(rr).unwrap(), Perm::from_images(ll).unwrap(), store)
        .expect("grid quotient is a valid map")
}

/// Toroidal quadrangulation `Q(r, s, t)`; dart `4·(y·r + x) + k` leaves `(x, y)`
/// in direction [`QUAD_DIRS`]`[k]`.
pub fn quad_torus(r: usize, s: usize, t: usize, store: &mut LabelStore) -> OrientedMap {
    grid_torus(r, s, t, &QUAD_DIRS, store)
}

/// Toroidal triangulation `T(r, s, t)`; darts numbered as in [`quad_torus`] with [`TRI_DIRS`].
pub fn tri_torus(r: usize, s: usize, t: usize, store: &mut LabelStore) -> OrientedMap {
    grid_torus(r, s, t, &TRI_DIRS, store)
}

/// Toroidal hexangulation `H(r, s, t)`, the dual of `T(r, s, t)`.
pub fn hex_torus(r: usize, s: usize, t: usize, store: &mut LabelStore) -> OrientedMap {
    tri_torus(r, s, t, store).dual()
}

/// One vertex, one twisted loop: the smallest projective-plane map.
pub fn projective_loop() -> FlagMap {
    let mut s = LabelStore::new();
    FlagMap::from_signed(&bouquet(1, &mut s), &|_| true)
}

/// Square grid on the Klein bottle: `r × s` vertices, rows glued with `x ↦ −x`.
pub fn klein_grid(r: usize, s: usize) -> FlagMap {
    assert!(r >= 1 && s >= 1);
    let deg = 4;
    let v = r * s;
    let idx = |x: i64, y: i64| -> usize { (y as usize) * r + x.rem_euclid(r as i64) as usize };
    let mut rr = vec![0; v * deg];
    let mut ll = vec![0; v * deg];
    let mut twisted = vec![false; v * deg];
    for y in 0..s as i64 {
        for x in 0..r as i64 {
            let u = idx(x, y);
            for (k, &(dx, dy)) in QUAD_DIRS.iter().enumerate() {
                rr[u * deg + k] = u * deg + (k + 1) % deg;
                let (mut nx, mut ny) = (x + dx, y + dy);
                let mut tw = false;
                if ny == s as i64 {
                    ny = 0;
                    nx = -nx;
                    tw = true;
                } else if ny < 0 {
                    ny = s as i64 - 1;
                    nx = -nx;
                    tw = true;
                }
                // Across the seam the glide reflection swaps the horizontal directions.
                let back = (k + 2) % deg;
                ll[u * deg + k] = idx(nx, ny) * deg + back;
                twisted[u * deg + k] = tw;
            }
        }
    }
    let mut st = LabelStore::new();
    let m = OrientedMap::unlabeled(Perm::from_images(rr).unwrap(), Perm::from_images(ll).unwrap(), &mut st)
        .expect("klein grid darts pair up");
    FlagMap::from_signed(&m, &|x| twisted[x])
}
