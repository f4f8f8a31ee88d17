//! Non-orientable maps through the antipodal double cover: `Aut(M)` is the
//! centralizer of `τ` in `Aut⁺` of the cover.

use std::collections::HashMap;

use crate::degree::cyclic_period;
use crate::group::{GeneratorSet, Structure};
use crate::labels::LabelStore;
use crate::lattice::ext_gcd;
use crate::maps::{FlagMap, MapError, OrientedMap};
use crate::perm::{gcd, lcm, Perm};
use crate::pipeline::aut_plus;

/// The oriented cover `(F, ρτ, τλ)` with `τ` kept as a dart permutation.
#[derive(Clone, Debug)]
pub struct DoubleCover {
    pub map: OrientedMap,
    pub tau: Perm,
}

pub fn antipodal_double_cover(f: &FlagMap, store: &mut LabelStore) -> Result<DoubleCover, MapError> {
    if f.is_orientable() {
        return Err(MapError::Orientable);
    }
    let r = f.rho.compose(&f.tau);
    let l = f.tau.compose(&f.lambda);
    let map = OrientedMap::unlabeled(r, l, store)?;
    Ok(DoubleCover { map, tau: f.tau.clone() })
}

/// Smallest `m` with `φ^m τ = τ φ^m`, for `φ` semiregular of order `n`.
pub fn centralizer_in_cyclic(phi: &Perm, tau: &Perm, n: usize) -> usize {
    let size = phi.len();
    let mut orbit = vec![usize::MAX; size];
    let mut index = vec![0; size];
    let mut bases = Vec::new();
    for s in 0..size {
        if orbit[s] != usize::MAX {
            continue;
        }
        let k = bases.len();
        bases.push(s);
        let mut x = s;
        for i in 0..n {
            orbit[x] = k;
            index[x] = i;
            x = phi.apply(x);
        }
        assert_eq!(x, s, "phi is not semiregular of order n");
    }
    let mut intern: HashMap<(usize, usize), u32> = HashMap::new();
    let mut m = 1;
    for &b in &bases {
        let mut seq = Vec::with_capacity(n);
        let mut x = b;
        for i in 0..n {
            let y = tau.apply(x);
            let key = (orbit[y], (index[y] + n - i) % n);
            let id = intern.len() as u32;
            seq.push(*intern.entry(key).or_insert(id));
            x = phi.apply(x);
        }
        m = lcm(m, cyclic_period(&seq));
    }
    m
}

fn commutes(g: &Perm, tau: &Perm) -> bool {
    g.commutes_with(tau)
}

/// Elements of `group` commuting with `τ`, by enumeration.
pub fn centralizer_by_filter(group: &GeneratorSet, tau: &Perm) -> Vec<Perm> {
    group.elements().into_iter().filter(|g| commutes(g, tau)).collect()
}

/// Centralizer of `τ` in the dihedral group `⟨φ, ψ⟩` of order `2n`, `n ≥ 3`,
/// when conjugation by `τ` fixes `⟨φ⟩`.
fn dihedral_centralizer(phi: &Perm, psi: &Perm, tau: &Perm, n: usize) -> Option<Vec<Perm>> {
    let mut pos = vec![usize::MAX; phi.len()];
    let mut x = 0;
    for i in 0..n {
        pos[x] = i;
        x = phi.apply(x);
    }
    let t0 = tau.apply(0);
    let e = pos[tau.apply(phi.apply(t0))];
    let f = pos[psi.inverse().apply(tau.apply(psi.apply(t0)))];
    if e == usize::MAX || f == usize::MAX {
        return None;
    }
    let m = centralizer_in_cyclic(phi, tau, n);
    debug_assert_eq!(m, n / gcd(n, (e + n - 1) % n));
    let mut gens = Vec::new();
    if m < n {
        gens.push(phi.pow(m));
    }
    // ψφ^j commutes with τ iff (1 − e)·j ≡ f (mod n)
    let a = (n + 1 - e) % n;
    let g = gcd(a, n);
    if f % g == 0 {
        let (nn, aa, ff) = ((n / g) as i64, (a / g) as i64, (f / g) as i64);
        let j = if nn == 1 {
            0
        } else {
            let (_, inv, _) = ext_gcd(aa.rem_euclid(nn), nn);
            (ff * inv).rem_euclid(nn) as usize
        };
        gens.push(psi.compose(&phi.pow(j)));
    }
    debug_assert!(gens.iter().all(|g| commutes(g, tau)));
    Some(gens)
}

fn finish(f: &FlagMap, gens: Vec<Perm>, structure: Option<Structure>) -> GeneratorSet {
    debug_assert!(gens.iter().all(|g| g.commutes_with(&f.lambda) && g.commutes_with(&f.rho) && g.commutes_with(&f.tau)));
    let mut g = GeneratorSet::semiregular(f.n(), gens);
    if g.order > 1 {
        g.structure = structure;
    }
    g
}

/// `Aut(M)` for a map on the projective plane: the cover is spherical.
pub fn aut_projective_plane(f: &FlagMap, store: &mut LabelStore) -> GeneratorSet {
    let cover = antipodal_double_cover(f, store).expect("non-orientable input");
    let plus = aut_plus(&cover.map, store).group;
    let tau = &cover.tau;
    let gens = match plus.structure {
        Some(Structure::Trivial) => Vec::new(),
        Some(Structure::Cyclic(n)) => {
            let m = centralizer_in_cyclic(&plus.gens[0], tau, n);
            if m < n {
                vec![plus.gens[0].pow(m)]
            } else {
                Vec::new()
            }
        }
        Some(Structure::Dihedral(n)) if n >= 3 && plus.gens.len() == 2 => {
            let (phi, psi) = if plus.gens[0].order() == n {
                (&plus.gens[0], &plus.gens[1])
            } else {
                (&plus.gens[1], &plus.gens[0])
            };
            dihedral_centralizer(phi, psi, tau, n).unwrap_or_else(|| centralizer_by_filter(&plus, tau))
        }
        _ => centralizer_by_filter(&plus, tau),
    };
    finish(f, gens, None)
}

/// `Aut(M)` for a map on the Klein bottle: the cover is toroidal.
pub fn aut_klein_bottle(f: &FlagMap, store: &mut LabelStore) -> GeneratorSet {
    aut_nonorientable_high_genus(f, store)
}

/// `Aut(M)` by filtering `Aut⁺` of the cover, whose order is bounded for `γ > 2`.
pub fn aut_nonorientable_high_genus(f: &FlagMap, store: &mut LabelStore) -> GeneratorSet {
    let cover = antipodal_double_cover(f, store).expect("non-orientable input");
    let plus = aut_plus(&cover.map, store).group;
    finish(f, centralizer_by_filter(&plus, &cover.tau), None)
}

pub fn aut_nonorientable(f: &FlagMap, store: &mut LabelStore) -> GeneratorSet {
    match f.euler_characteristic() {
        1 => aut_projective_plane(f, store),
        0 => aut_klein_bottle(f, store),
        _ => aut_nonorientable_high_genus(f, store),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build;
    use crate::oracle::oracle_flag_aut_elements;
    use std::collections::HashSet;

    #[test]
    fn centralizer_examples() {
        let phi = Perm::from_images(vec![1, 2, 3, 0]).unwrap();
        assert_eq!(centralizer_in_cyclic(&phi, &Perm::from_images(vec![2, 3, 0, 1]).unwrap(), 4), 1);
        assert_eq!(centralizer_in_cyclic(&phi, &Perm::from_images(vec![1, 0, 3, 2]).unwrap(), 4), 2);
        // two orbits swapped rigidly
        let phi = Perm::from_images(vec![1, 2, 0, 4, 5, 3]).unwrap();
        let tau = Perm::from_images(vec![3, 4, 5, 0, 1, 2]).unwrap();
        assert_eq!(centralizer_in_cyclic(&phi, &tau, 3), 1);
    }

    #[test]
    fn covers() {
        let mut s = LabelStore::new();
        let p = build::projective_loop();
        let c = antipodal_double_cover(&p, &mut s).unwrap();
        assert_eq!(c.map.euler_characteristic(), 2 * p.euler_characteristic());
        let k = build::klein_grid(3, 2);
        let c = antipodal_double_cover(&k, &mut s).unwrap();
        assert_eq!(c.map.euler_characteristic(), 0);
    }

    #[test]
    fn match_flag_oracle() {
        let mut s = LabelStore::new();
        let maps = vec![build::projective_loop(), build::klein_grid(3, 2), build::klein_grid(2, 3), build::klein_grid(4, 1)];
        for f in maps {
            let g = aut_nonorientable(&f, &mut s);
            let oracle: HashSet<Perm> = oracle_flag_aut_elements(&f).into_iter().collect();
            assert_eq!(g.element_set(), oracle);
        }
    }
}
