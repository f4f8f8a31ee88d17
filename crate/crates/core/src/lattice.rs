//! Cyclic grids `ℤ_r × ℤ_s`: Smith normal form of the torus lattice, the
//! label-preserving translation subgroup and translation matching.

use std::collections::HashMap;

use crate::degree::{cyclic_period, least_rotation, prefix_function, rotate};
use crate::perm::{gcd, lcm};

/// `(g, x, y)` with `a·x + b·y = g = gcd(a, b) ≥ 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        // b·x + (a mod b)·y = g, a mod b = a - (a div b)·b
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Combines `x ≡ a1 (mod m1)` and `x ≡ a2 (mod m2)`; `None` if inconsistent.
pub fn crt_pair(a1: i64, m1: i64, a2: i64, m2: i64) -> Option<(i64, i64)> {
    let (g, p, _) = ext_gcd(m1, m2);
    let diff = a2 - a1;
    if diff.rem_euclid(g) != 0 {
        return None;
    }
    let l = m1 / g * m2;
    let k = ((diff / g) as i128 * p as i128).rem_euclid((m2 / g) as i128) as i64;
    Some(((a1 + m1 * k).rem_euclid(l), l))
}

type Mat = [[i64; 2]; 2];

fn mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// Smith form of a rank-2 lattice `Λ ⊂ ℤ²`: `p ∈ Λ` iff `p·v ≡ 0 (mod (d1, d2))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Snf {
    pub d1: i64,
    pub d2: i64,
    pub v: Mat,
    pub vinv: Mat,
}

impl Snf {
    /// Lattice spanned by the rows of `a`.
    pub fn of(a: Mat) -> Snf {
        let mut m = a;
        let mut v: Mat = [[1, 0], [0, 1]];
        let mut vinv: Mat = [[1, 0], [0, 1]];
        let col_op = |m: &mut Mat, v: &mut Mat, vinv: &mut Mat, c: Mat, cinv: Mat| {
            *m = mul(m, &c);
            *v = mul(v, &c);
            *vinv = mul(&cinv, vinv);
        };
        loop {
            if m[0][1] != 0 {
                let (a0, b0) = (m[0][0], m[0][1]);
                let (g, x, y) = ext_gcd(a0, b0);
                let c = [[x, -b0 / g], [y, a0 / g]];
                let cinv = [[a0 / g, b0 / g], [-y, x]];
                col_op(&mut m, &mut v, &mut vinv, c, cinv);
            }
            if m[1][0] != 0 {
                let (a0, b0) = (m[0][0], m[1][0]);
                let (g, x, y) = ext_gcd(a0, b0);
                let rw = [[x, y], [-b0 / g, a0 / g]];
                m = mul(&rw, &m);
            }
            if m[0][1] == 0 && m[1][0] == 0 {
                if m[0][0] == 0 || m[1][1] % m[0][0] == 0 {
                    break;
                }
                m[0][1] = m[1][1];
            }
        }
        #[allow(clippy::needless_range_loop)]
        for j in 0..2 {
            if m[j][j] < 0 {
                m[j][j] = -m[j][j];
                let c: Mat = if j == 0 { [[-1, 0], [0, 1]] } else { [[1, 0], [0, -1]] };
                v = mul(&v, &c);
                vinv = mul(&c, &vinv);
            }
        }
        debug_assert_eq!(mul(&v, &vinv), [[1, 0], [0, 1]]);
        Snf { d1: m[0][0], d2: m[1][1], v, vinv }
    }

    /// Coordinates `(w1 mod d1, w2 mod d2)` of `p`.
    pub fn coords(&self, p: (i64, i64)) -> (i64, i64) {
        let w1 = p.0 * self.v[0][0] + p.1 * self.v[1][0];
        let w2 = p.0 * self.v[0][1] + p.1 * self.v[1][1];
        (w1.rem_euclid(self.d1), w2.rem_euclid(self.d2))
    }

    /// A preimage in `ℤ²` of coordinates `w`.
    pub fn point(&self, w: (i64, i64)) -> (i64, i64) {
        (w.0 * self.vinv[0][0] + w.1 * self.vinv[1][0], w.0 * self.vinv[0][1] + w.1 * self.vinv[1][1])
    }
}

/// Integer-labeled `r × s` grid; `labels[y·r + x]` for `x ∈ ℤ_r`, `y ∈ ℤ_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicGrid {
    pub r: usize,
    pub s: usize,
    pub labels: Vec<u32>,
}

impl CyclicGrid {
    pub fn new(r: usize, s: usize, labels: Vec<u32>) -> Self {
        assert_eq!(labels.len(), r * s, "grid label count");
        CyclicGrid { r, s, labels }
    }

    pub fn at(&self, x: usize, y: usize) -> u32 {
        self.labels[(y % self.s) * self.r + x % self.r]
    }

    fn row(&self, y: usize) -> &[u32] {
        &self.labels[y * self.r..(y + 1) * self.r]
    }
}

/// Rows of one or two grids reduced to (class, rotation offset, period).
struct RowForms {
    class: [Vec<usize>; 2],
    shift: [Vec<usize>; 2],
    period: Vec<usize>,
}

impl RowForms {
    fn of(grids: [&CyclicGrid; 2]) -> Self {
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut period = Vec::new();
        let mut class: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        let mut shift: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        for k in 0..2 {
            for y in 0..grids[k].s {
                let row = grids[k].row(y);
                let q = least_rotation(row);
                let canon = rotate(row, q);
                let next = index.len();
                let c = *index.entry(canon).or_insert_with_key(|cn| {
                    period.push(cyclic_period(cn));
                    next
                });
                class[k].push(c);
                shift[k].push(q);
            }
        }
        RowForms { class, shift, period }
    }

    /// Horizontal offsets `dx mod lcm` with `row1[j+dy][x+dx] = row2[j][x]` for every `j`.
    fn solve(&self, dy: usize, s: usize) -> Option<(i64, i64)> {
        let mut acc = (0i64, 1i64);
        for j in 0..s {
            let j1 = (j + dy) % s;
            let c = self.class[0][j1];
            debug_assert_eq!(c, self.class[1][j]);
            let p = self.period[c] as i64;
            let want = (self.shift[0][j1] as i64 - self.shift[1][j] as i64).rem_euclid(p);
            acc = crt_pair(acc.0, acc.1, want, p)?;
        }
        Some(acc)
    }
}

/// `dy` values with `seq1[j + dy] = seq2[j]` for every `j`, ascending.
fn cyclic_matches(seq1: &[usize], seq2: &[usize]) -> Vec<usize> {
    let s = seq1.len();
    if seq2.len() != s {
        return Vec::new();
    }
    // pattern seq2 searched in seq1 + seq1
    let mut text: Vec<usize> = seq2.to_vec();
    text.push(usize::MAX);
    text.extend_from_slice(seq1);
    text.extend_from_slice(&seq1[..s.saturating_sub(1)]);
    let pf = prefix_function(&text);
    (0..text.len()).filter(|&i| pf[i + 1] == s).map(|i| i - 2 * s).collect()
}

/// Generators `(a, 0)` and `(c, b)` of the translations preserving the
/// labels: `H = {(i·a + j·c, j·b)}` with `a | r`, `b | s`, `0 ≤ c < a`.
pub fn grid_subgroup(grid: &CyclicGrid) -> (usize, usize, usize) {
    let forms = RowForms::of([grid, grid]);
    let a = forms.class[0].iter().fold(1usize, |acc, &c| lcm(acc, forms.period[c]));
    for dy in cyclic_matches(&forms.class[0], &forms.class[0]) {
        if dy == 0 {
            continue;
        }
        if let Some((c, m)) = forms.solve(dy, grid.s) {
            debug_assert_eq!(m as usize, a);
            return (a, dy, c as usize);
        }
    }
    (a, grid.s, 0)
}

/// A translation `(dx, dy)` with `g1(x + dx, y + dy) = g2(x, y)` everywhere.
pub fn grid_match(g1: &CyclicGrid, g2: &CyclicGrid) -> Option<(usize, usize)> {
    if (g1.r, g1.s) != (g2.r, g2.s) {
        return None;
    }
    let forms = RowForms::of([g1, g2]);
    for dy in cyclic_matches(&forms.class[0], &forms.class[1]) {
        if let Some((dx, _)) = forms.solve(dy, g1.s) {
            return Some((dx as usize, dy));
        }
    }
    None
}

/// Every element of `⟨(a, 0), (c, b)⟩` in `ℤ_r × ℤ_s`, sorted.
pub fn expand_subgroup(r: usize, s: usize, (a, b, c): (usize, usize, usize)) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 0..s / b {
        for i in 0..r / a {
            out.push(((i * a + j * c) % r, j * b));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Quadratic reference for [`grid_subgroup`].
pub fn brute_grid_subgroup(grid: &CyclicGrid) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for dy in 0..grid.s {
        for dx in 0..grid.r {
            let ok = (0..grid.s).all(|y| (0..grid.r).all(|x| grid.at(x + dx, y + dy) == grid.at(x, y)));
            if ok {
                out.push((dx, dy));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Cyclic orders of the Smith form of `⟨(r, 0), (t, s)⟩`-type lattices.
pub fn torus_group_orders(r: i64, s: i64, t: i64) -> (i64, i64) {
    let m = gcd(gcd(r as usize, s as usize), t.unsigned_abs() as usize) as i64;
    (m, r * s / m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crt_and_gcd() {
        assert_eq!(ext_gcd(240, 46).0, 2);
        let (g, x, y) = ext_gcd(-6, 4);
        assert_eq!((g, -6 * x + 4 * y), (2, 2));
        assert_eq!(crt_pair(2, 3, 3, 5), Some((8, 15)));
        assert_eq!(crt_pair(1, 4, 0, 6), None);
        assert_eq!(crt_pair(1, 4, 3, 6), Some((9, 12)));
    }

    #[test]
    fn smith_forms() {
        for (r, s, t) in [(6i64, 4i64, 2i64), (4, 2, 2), (5, 3, 0), (6, 4, 4), (12, 2, 6), (7, 7, 3)] {
            let f = Snf::of([[r, 0], [t, s]]);
            assert_eq!((f.d1, f.d2), torus_group_orders(r, s, t), "{r} {s} {t}");
            assert_eq!(f.coords((r, 0)), (0, 0));
            assert_eq!(f.coords((t, s)), (0, 0));
            // the quotient map is onto and has kernel exactly Λ
            let mut seen = std::collections::HashSet::new();
            for y in 0..s {
                for x in 0..r {
                    seen.insert(f.coords((x, y)));
                }
            }
            assert_eq!(seen.len() as i64, r * s);
            let w = (f.d1 - 1, f.d2 - 1);
            assert_eq!(f.coords(f.point(w)), w);
        }
        // (6,4,4): gcd(t, s) = 4 but the first invariant factor is gcd(r, s, t) = 2.
        assert_eq!(Snf::of([[6, 0], [4, 4]]).d1, 2);
    }

    #[test]
    fn subgroup_examples() {
        assert_eq!(grid_subgroup(&CyclicGrid::new(3, 2, vec![5; 6])), (1, 1, 0));
        let parity: Vec<u32> = (0..16).map(|i| ((i % 4 + i / 4) % 2) as u32).collect();
        assert_eq!(grid_subgroup(&CyclicGrid::new(4, 4, parity)), (2, 1, 1));
        let distinct: Vec<u32> = (0..12).collect();
        assert_eq!(grid_subgroup(&CyclicGrid::new(4, 3, distinct)), (4, 3, 0));
    }

    #[test]
    fn subgroup_matches_brute_force_exhaustive_tiny() {
        for (r, s) in [(2usize, 2usize), (3, 2), (2, 3), (4, 2), (1, 4), (3, 3)] {
            let n = r * s;
            for code in 0..2usize.pow(n as u32) {
                let labels: Vec<u32> = (0..n).map(|i| ((code >> i) & 1) as u32).collect();
                let g = CyclicGrid::new(r, s, labels);
                assert_eq!(expand_subgroup(r, s, grid_subgroup(&g)), brute_grid_subgroup(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn matching_finds_shift() {
        let g2 = CyclicGrid::new(4, 3, vec![1, 2, 3, 1, 2, 2, 1, 3, 3, 1, 1, 2]);
        let (dx, dy) = (3, 2);
        let g1 = CyclicGrid::new(4, 3, (0..12).map(|i| g2.at((i % 4 + 4 - dx) % 4, (i / 4 + 3 - dy) % 3)).collect());
        let (mx, my) = grid_match(&g1, &g2).unwrap();
        for y in 0..3 {
            for x in 0..4 {
                assert_eq!(g1.at(x + mx, y + my), g2.at(x, y));
            }
        }
        let other = CyclicGrid::new(4, 3, vec![1; 12]);
        assert_eq!(grid_match(&g1, &other), None);
    }
}
