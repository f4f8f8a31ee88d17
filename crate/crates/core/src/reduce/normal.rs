//! Normalization: deleting 1-faces (`loops`) and collapsing parallel edges
//! bounding 2-faces (`dipoles`).

use std::collections::HashMap;

use super::{compact, Reduced};
use crate::labels::{LabelId, LabelStore};
use crate::maps::OrientedMap;

/// Removes every maximal sequence of 1-faces. Returns `None` when the map has
/// no 1-face or only one vertex.
pub fn reduce_loops(m: &OrientedMap, store: &mut LabelStore) -> Option<Reduced> {
    let n = m.n();
    let r = &m.r;
    let l = &m.l;
    let rinv = r.inverse();
    let is_start = |x: usize| r.apply(x) == l.apply(x);
    let is_end = |y: usize| r.apply(l.apply(y)) == y;
    if !(0..n).any(is_start) || m.r.cycle_count() <= 1 {
        return None;
    }
    let mut keep = vec![true; n];
    // bounding dart -> (labels of the sequence after it, labels of the sequence before it)
    let mut after: HashMap<usize, Vec<LabelId>> = HashMap::new();
    let mut before: HashMap<usize, Vec<LabelId>> = HashMap::new();
    for x1 in 0..n {
        if !is_start(x1) || is_end(rinv.apply(x1)) {
            continue;
        }
        let mut seq = vec![x1];
        let mut cur = x1;
        while is_start(r.apply(l.apply(cur))) {
            cur = r.apply(l.apply(cur));
            seq.push(cur);
            assert!(seq.len() <= n, "loop sequence wraps a whole vertex");
        }
        let x0 = rinv.apply(x1);
        let xk1 = r.apply(l.apply(cur));
        for &x in &seq {
            keep[x] = false;
            keep[l.apply(x)] = false;
        }
        after.insert(x0, seq.iter().map(|&x| m.labels[x]).collect());
        before.insert(xk1, seq.iter().rev().map(|&x| m.labels[l.apply(x)]).collect());
    }
    let t = store.next_step();
    let t2 = store.next_step();
    let mut labels = m.labels.clone();
    let mut bounding: Vec<usize> = after.keys().chain(before.keys()).copied().collect();
    bounding.sort_unstable();
    bounding.dedup();
    for w in bounding {
        debug_assert!(keep[w]);
        let a = store.lab(t, after.get(&w).map(|v| v.as_slice()).unwrap_or(&[]));
        let b = store.lab(t, before.get(&w).map(|v| v.as_slice()).unwrap_or(&[]));
        labels[w] = store.lab(t2, &[m.labels[w], a, b]);
    }
    let mut nr = vec![0; n];
    for y in 0..n {
        if keep[y] {
            let mut z = r.apply(y);
            while !keep[z] {
                z = r.apply(z);
            }
            nr[y] = z;
        }
    }
    Some(compact(&keep, &nr, l.images(), &labels))
}

/// Replaces every maximal run of parallel edges bounding 2-faces by one edge.
/// Returns `None` when there is no 2-face or at most two vertices.
pub fn reduce_dipoles(m: &OrientedMap, store: &mut LabelStore) -> Option<Reduced> {
    let n = m.n();
    let r = &m.r;
    let l = &m.l;
    let rinv = r.inverse();
    let phi = |x: usize| rinv.apply(l.apply(x));
    let two_faced: Vec<bool> = (0..n).map(|x| phi(phi(x)) == x && phi(x) != x).collect();
    if !two_faced.iter().any(|&b| b) || m.r.cycle_count() <= 2 {
        return None;
    }
    let t = store.next_step();
    let mut keep = vec![true; n];
    let mut nl: Vec<usize> = l.images().to_vec();
    let mut labels = m.labels.clone();
    for x1 in 0..n {
        if !two_faced[x1] || two_faced[rinv.apply(x1)] {
            continue;
        }
        let mut run = vec![x1];
        let mut cur = x1;
        while two_faced[cur] {
            cur = r.apply(cur);
            run.push(cur);
            assert!(run.len() <= n, "dipole run wraps a whole vertex");
        }
        for &x in &run[1..] {
            keep[x] = false;
        }
        nl[x1] = l.apply(cur);
        let labs: Vec<LabelId> = run.iter().map(|&x| m.labels[x]).collect();
        labels[x1] = store.lab(t, &labs);
    }
    let mut nr = vec![0; n];
    for y in 0..n {
        if keep[y] {
            let mut z = r.apply(y);
            while !keep[z] {
                z = r.apply(z);
            }
            nr[y] = z;
        }
    }
    Some(compact(&keep, &nr, &nl, &labels))
}
