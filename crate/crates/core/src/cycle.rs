//! Isomorphism and rotations of vertex-labeled oriented cycles by iterated
//! contraction of successor pairs.

use crate::degree::cyclic_period;

/// Vertices `0..n` in cyclic order; the successor of `i` is `i + 1 mod n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledCycle {
    pub labels: Vec<u32>,
}

impl LabeledCycle {
    pub fn new(labels: Vec<u32>) -> Self {
        assert!(!labels.is_empty(), "a cycle has at least one vertex");
        LabeledCycle { labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The same cycle traversed in the opposite direction, starting at vertex 0.
    pub fn reversed(&self) -> LabeledCycle {
        let n = self.len();
        LabeledCycle { labels: (0..n).map(|i| self.labels[(n - i) % n]).collect() }
    }
}

struct Work {
    next: Vec<usize>,
    lab: Vec<u32>,
    alive: usize,
}

impl Work {
    fn of(x: &LabeledCycle) -> Self {
        let n = x.len();
        Work { next: (0..n).map(|i| (i + 1) % n).collect(), lab: x.labels.clone(), alive: n }
    }

    fn pair(&self, v: usize) -> (u32, u32) {
        (self.lab[v], self.lab[self.next[v]])
    }

    /// Step 3: drop the successor of every vertex of `s` and relabel `s` by `k`.
    fn contract(&mut self, s: &[usize], k: u32) {
        for &v in s {
            let u = self.next[v];
            self.next[v] = self.next[u];
        }
        for &v in s {
            self.lab[v] = k;
        }
        self.alive -= s.len();
    }
}

/// Rotation offset `o` with `x2[(i + o) mod n] = x1[i]` for all `i`, if any.
pub fn cycle_iso(x1: &LabeledCycle, x2: &LabeledCycle) -> Option<usize> {
    let n = x1.len();
    if x2.len() != n {
        return None;
    }
    let mut w1 = Work::of(x1);
    let mut w2 = Work::of(x2);
    let mut fresh = x1.labels.iter().chain(&x2.labels).copied().max().unwrap_or(0) + 1;
    let offset = |a: usize, b: usize| (b + n - a) % n;
    // Step 1
    let v1 = match (0..n).find(|&v| w1.lab[v] != w1.lab[w1.next[v]]) {
        None => {
            let c = x1.labels[0];
            return x2.labels.iter().all(|&l| l == c).then_some(0);
        }
        Some(v) => v,
    };
    let target = w1.pair(v1);
    // Step 2
    let mut s1: Vec<usize> = (0..n).filter(|&u| w1.pair(u) == target).collect();
    let mut s2: Vec<usize> = (0..n).filter(|&u| w2.pair(u) == target).collect();
    if s2.is_empty() || s1.len() != s2.len() {
        return None;
    }
    loop {
        // Step 3
        w1.contract(&s1, fresh);
        w2.contract(&s2, fresh);
        fresh += 1;
        // Step 4
        let v1 = match s1.iter().copied().find(|&v| w1.lab[v] != w1.lab[w1.next[v]]) {
            None => {
                debug_assert_eq!(s1.len(), w1.alive);
                let closed = s2.len() == w2.alive && s2.iter().all(|&v| w2.lab[w2.next[v]] == w2.lab[v]);
                return closed.then(|| offset(s1[0], s2[0]));
            }
            Some(v) => v,
        };
        let succ = w1.lab[w1.next[v1]];
        // Step 5
        s1.retain(|&u| w1.lab[w1.next[u]] == succ);
        s2.retain(|&u| w2.lab[w2.next[u]] == succ);
        if s2.is_empty() || s1.len() != s2.len() {
            return None;
        }
    }
}

/// Result of [`cycle_iso_dihedral`]: the offset for `x2` as given, and the
/// offset `o` for the reversed reading, meaning `x2[(o - i) mod n] = x1[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihedralIso {
    pub direct: Option<usize>,
    pub reversed: Option<usize>,
}

pub fn cycle_iso_dihedral(x1: &LabeledCycle, x2: &LabeledCycle) -> DihedralIso {
    let direct = cycle_iso(x1, x2);
    // reversed()[j] = x2[-j], so a match at offset o' gives x2[-(i + o')] = x1[i].
    let n = x1.len();
    let reversed = cycle_iso(x1, &x2.reversed()).map(|o| (n - o) % n);
    DihedralIso { direct, reversed }
}

/// Smallest `p > 0` such that shifting by `p` preserves the labels; the
/// rotation group is cyclic of order `n / p`.
pub fn cycle_rotation_generator(x: &LabeledCycle) -> usize {
    cyclic_period(&x.labels)
}

/// Quadratic reference: every offset that works.
pub fn brute_cycle_isos(x1: &LabeledCycle, x2: &LabeledCycle) -> Vec<usize> {
    let n = x1.len();
    if x2.len() != n {
        return Vec::new();
    }
    (0..n).filter(|&o| (0..n).all(|i| x2.labels[(i + o) % n] == x1.labels[i])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u32]) -> LabeledCycle {
        LabeledCycle::new(v.to_vec())
    }

    #[test]
    fn examples() {
        let o = cycle_iso(&c(&[1, 2, 1, 2]), &c(&[1, 2, 1, 2])).unwrap();
        assert!(o == 0 || o == 2);
        assert_eq!(cycle_iso(&c(&[1, 1, 2]), &c(&[1, 2, 2])), None);
        assert_eq!(cycle_iso(&c(&[3, 3, 3]), &c(&[3, 3, 3])), Some(0));
        assert_eq!(cycle_iso(&c(&[3, 3, 3]), &c(&[3, 3])), None);
    }

    #[test]
    fn dihedral_examples() {
        let x = c(&[1, 1, 2, 3]);
        let d = cycle_iso_dihedral(&x, &x.reversed());
        assert_eq!(d.direct, None);
        assert!(d.reversed.is_some());
        let p = c(&[1, 2, 2, 1]);
        let d = cycle_iso_dihedral(&p, &p);
        assert!(d.direct.is_some() && d.reversed.is_some());
        let d = cycle_iso_dihedral(&c(&[1, 1, 1]), &c(&[2, 2, 2]));
        assert_eq!(d, DihedralIso { direct: None, reversed: None });
    }

    #[test]
    fn rotation_generator() {
        assert_eq!(cycle_rotation_generator(&c(&[1, 2, 1, 2])), 2);
        assert_eq!(cycle_rotation_generator(&c(&[4; 5])), 1);
        assert_eq!(cycle_rotation_generator(&c(&[1, 2, 3, 4])), 4);
    }

    #[test]
    fn exhaustive_small() {
        for n in 1..=6usize {
            let total = 3usize.pow(n as u32);
            let cycles: Vec<LabeledCycle> = (0..total)
                .map(|mut code| {
                    c(&(0..n)
                        .map(|_| {
                            let d = (code % 3) as u32 + 1;
                            code /= 3;
                            d
                        })
                        .collect::<Vec<_>>())
                })
                .collect();
            for a in &cycles {
                for b in &cycles {
                    let all = brute_cycle_isos(a, b);
                    match cycle_iso(a, b) {
                        None => assert!(all.is_empty(), "{a:?} {b:?}"),
                        Some(o) => assert!(all.contains(&o), "{a:?} {b:?} {o}"),
                    }
                }
            }
        }
    }
}
