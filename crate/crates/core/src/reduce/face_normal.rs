//! Reductions of face-normal maps: `largetype`, `aperiodic` and `periodic`.

use super::{compact, Reduced};
use crate::labels::{LabelId, LabelStore};
use crate::maps::OrientedMap;

fn rotation_from(m: &OrientedMap, x: usize) -> Vec<usize> {
    let mut out = vec![x];
    let mut y = m.r.apply(x);
    while y != x {
        out.push(y);
        y = m.r.apply(y);
    }
    out
}

fn wrap_all(store: &mut LabelStore, t: i64, labels: &mut [LabelId], darts: &[usize]) {
    for &x in darts {
        labels[x] = store.lab(t, &[labels[x]]);
    }
}

/// Removes each vertex given by one of its darts and closes the hole with a
/// new face through its neighbors. `D′ = D`, `L′ = L`.
pub fn reduce_largetype(m: &OrientedMap, vertex_darts: &[usize], store: &mut LabelStore) -> Reduced {
    let n = m.n();
    let t = store.next_step();
    let mut nr: Vec<usize> = m.r.images().to_vec();
    let mut labels = m.labels.clone();
    let mut touched = Vec::new();
    for &w0 in vertex_darts {
        let w = rotation_from(m, w0);
        let d = w.len();
        for i in 0..d {
            let xi = m.l.apply(w[i]);
            let wprev = w[(i + d - 1) % d];
            nr[xi] = wprev;
            nr[wprev] = m.r.apply(xi);
            touched.push(xi);
            touched.push(w[i]);
        }
    }
    wrap_all(store, t, &mut labels, &touched);
    let keep = vec![true; n];
    let red = compact(&keep, &nr, m.l.images(), &labels);
    debug_assert_eq!(red.map.euler_characteristic(), m.euler_characteristic());
    red
}

/// Contracts the edges of the chosen darts. Each chosen dart `x` sits at a
/// pendant vertex `u` of a star and `Lx` at its center.
pub fn reduce_aperiodic(m: &OrientedMap, chosen: &[usize], store: &mut LabelStore) -> Reduced {
    let n = m.n();
    let r = &m.r;
    let l = &m.l;
    let rinv = r.inverse();
    let verts = m.vertices();
    // 1 for a chosen pendant dart, 2 for the center end of a chosen edge
    let mut role = vec![0u8; n];
    let mut pendant_used = vec![false; verts.count()];
    for &x in chosen {
        let u = verts.id[x];
        assert!(!pendant_used[u], "two chosen edges at one pendant vertex");
        pendant_used[u] = true;
        role[x] = 1;
        role[l.apply(x)] = 2;
    }
    for &x in chosen {
        assert!(!pendant_used[verts.id[l.apply(x)]], "chosen edges do not form disjoint stars");
    }
    let t = store.next_step();
    let t2 = store.next_step();
    let mut labels = m.labels.clone();
    let empty = store.lab(t, &[]);
    for &x in chosen {
        let first = r.apply(x);
        let last = rinv.apply(x);
        debug_assert!(first != x, "pendant vertex of degree one");
        if first == last {
            let a = store.lab(t, &[m.labels[x]]);
            let b = store.lab(t, &[m.labels[l.apply(x)]]);
            labels[first] = store.lab(t2, &[m.labels[first], a, b]);
        } else {
            let a = store.lab(t, &[m.labels[x]]);
            labels[first] = store.lab(t2, &[m.labels[first], a, empty]);
            let b = store.lab(t, &[m.labels[l.apply(x)]]);
            labels[last] = store.lab(t2, &[m.labels[last], empty, b]);
        }
    }
    let keep: Vec<bool> = role.iter().map(|&k| k == 0).collect();
    let mut nr = vec![0; n];
    for y in 0..n {
        if !keep[y] {
            continue;
        }
        let mut z = r.apply(y);
        let mut guard = 0;
        while !keep[z] {
            // a leaf dart continues at the center after Lx, a center dart at the leaf after x
            z = r.apply(l.apply(z));
            guard += 1;
            assert!(guard <= n, "aperiodic splice does not terminate");
        }
        nr[y] = z;
    }
    let red = compact(&keep, &nr, l.images(), &labels);
    debug_assert_eq!(red.map.euler_characteristic(), m.euler_characteristic());
    red
}

/// A vertex for [`reduce_periodic`]: its rotation starting at a dart towards
/// an equal neighbor, and the block length `k` (one such dart per block).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicVertex {
    pub rotation: Vec<usize>,
    pub block: usize,
}

/// Dissolves each vertex into a polygon on its larger neighbors; the darts
/// towards equal neighbors are reattached at every block start.
pub fn reduce_periodic(m: &OrientedMap, vertices: &[PeriodicVertex], store: &mut LabelStore) -> Reduced {
    let n = m.n();
    let t = store.next_step();
    let mut nr: Vec<usize> = m.r.images().to_vec();
    let mut labels = m.labels.clone();
    for pv in vertices {
        let k = pv.block;
        let d = pv.rotation.len();
        assert!(k >= 2 && d % k == 0, "bad periodic block");
        let blocks = d / k;
        let xs: Vec<usize> = (0..blocks).map(|i| pv.rotation[i * k]).collect();
        let ys: Vec<usize> = (0..d).filter(|i| i % k != 0).map(|i| pv.rotation[i]).collect();
        let ny = ys.len();
        for j in 0..ny {
            let anchor = m.l.apply(ys[j]);
            let mut chain = vec![ys[(j + ny - 1) % ny]];
            if j % (k - 1) == 0 {
                chain.push(xs[j / (k - 1)]);
            }
            let after = m.r.apply(anchor);
            let mut prev = anchor;
            for &c in &chain {
                nr[prev] = c;
                prev = c;
            }
            nr[prev] = after;
        }
        wrap_all(store, t, &mut labels, &pv.rotation);
    }
    let keep = vec![true; n];
    let red = compact(&keep, &nr, m.l.images(), &labels);
    debug_assert_eq!(red.map.euler_characteristic(), m.euler_characteristic());
    red
}
