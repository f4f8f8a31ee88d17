//! Random test maps built from small seeds by inverse reductions: chords,
//! loops, pendant edges and edge subdivisions.

#![allow(dead_code)]

use mapaut::build;
use mapaut::labels::LabelStore;
use mapaut::maps::{FlagMap, OrientedMap};
use mapaut::perm::Perm;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

struct Raw {
    r: Vec<usize>,
    l: Vec<usize>,
}

impl Raw {
    fn of(m: &OrientedMap) -> Raw {
        Raw { r: m.r.images().to_vec(), l: m.l.images().to_vec() }
    }

    fn pair(&mut self) -> (usize, usize) {
        let a = self.r.len();
        let b = a + 1;
        self.r.extend([a, b]);
        self.l.extend([b, a]);
        (a, b)
    }

    fn insert_after(&mut self, x: usize, a: usize) {
        self.r[a] = self.r[x];
        self.r[x] = a;
    }

    fn map(&self, store: &mut LabelStore) -> OrientedMap {
        OrientedMap::unlabeled(
            Perm::from_images(self.r.clone()).unwrap(),
            Perm::from_images(self.l.clone()).unwrap(),
            store,
        )
        .unwrap()
    }
}

/// One random inverse reduction that keeps the Euler characteristic.
pub fn grow(m: &OrientedMap, rng: &mut ChaCha8Rng, store: &mut LabelStore) -> OrientedMap {
    let chi = m.euler_characteristic();
    for _ in 0..50 {
        let mut raw = Raw::of(m);
        let x = rng.gen_range(0..m.n());
        match rng.gen_range(0..4) {
            0 => {
                // chord across the face that follows x
                let face = m.faces();
                let fid = face.id[m.l.apply(x)];
                let corners: Vec<usize> = (0..m.n()).filter(|&y| face.id[m.l.apply(y)] == fid).collect();
                let y = *corners.choose(rng).unwrap();
                let (a, b) = raw.pair();
                raw.insert_after(x, a);
                raw.insert_after(y, b);
            }
            1 => {
                let (a, b) = raw.pair();
                raw.insert_after(x, a);
                raw.insert_after(a, b);
            }
            2 => {
                let (a, _) = raw.pair();
                raw.insert_after(x, a);
            }
            _ => {
                let y = raw.l[x];
                let (c, d) = raw.pair();
                raw.r[c] = d;
                raw.r[d] = c;
                raw.l[x] = c;
                raw.l[c] = x;
                raw.l[y] = d;
                raw.l[d] = y;
            }
        }
        let out = raw.map(store);
        if out.euler_characteristic() == chi {
            return out;
        }
    }
    m.clone()
}

/// One vertex with the loops `a b a⁻¹ b⁻¹ c d c⁻¹ d⁻¹`.
pub fn genus_two_bouquet(store: &mut LabelStore) -> OrientedMap {
    let r: Vec<usize> = (0..8).map(|x| (x + 1) % 8).collect();
    let l = vec![2, 3, 0, 1, 6, 7, 4, 5];
    OrientedMap::unlabeled(Perm::from_images(r).unwrap(), Perm::from_images(l).unwrap(), store).unwrap()
}

fn sphere_seeds(store: &mut LabelStore) -> Vec<OrientedMap> {
    vec![
        build::tetrahedron(store),
        build::cube(store),
        build::octahedron(store),
        build::prism(3, store),
        build::prism(5, store),
        build::antiprism(4, store),
        build::bipyramid(5, store),
        build::cycle(5, store),
        build::dipole(4, store),
        build::bouquet(4, store),
    ]
}

fn torus_seeds(store: &mut LabelStore) -> Vec<OrientedMap> {
    vec![
        build::quad_torus(2, 2, 0, store),
        build::quad_torus(3, 2, 1, store),
        build::quad_torus(3, 3, 0, store),
        build::tri_torus(2, 2, 0, store),
        build::tri_torus(3, 2, 1, store),
        build::hex_torus(3, 2, 1, store),
        build::quad_torus(1, 1, 0, store),
        build::tri_torus(1, 1, 0, store),
    ]
}

fn genus_two_seeds(store: &mut LabelStore) -> Vec<OrientedMap> {
    let b = genus_two_bouquet(store);
    vec![b.clone(), b.dual()]
}

/// Assigns small leaf labels to a random subset of darts.
pub fn sprinkle_labels(m: &mut OrientedMap, rng: &mut ChaCha8Rng, store: &mut LabelStore) {
    let k = rng.gen_range(1..=3);
    for x in 0..m.n() {
        if rng.gen_bool(0.2) {
            m.labels[x] = store.leaf(rng.gen_range(1..=k));
        }
    }
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub map: OrientedMap,
}

/// Random oriented maps with `min..=max` darts on the sphere, the torus and
/// the double torus, about half of them labeled.
pub fn oriented_corpus(count: usize, min: usize, max: usize, seed: u64, store: &mut LabelStore) -> Vec<Fixture> {
    let mut rng = rng(seed);
    let families: Vec<(&str, Vec<OrientedMap>)> = vec![
        ("sphere", sphere_seeds(store)),
        ("torus", torus_seeds(store)),
        ("genus2", genus_two_seeds(store)),
    ];
    let mut out = Vec::new();
    let mut attempt = 0;
    while out.len() < count {
        attempt += 1;
        let (fam, seeds) = &families[attempt % families.len()];
        let mut m = seeds.choose(&mut rng).unwrap().clone();
        let target = rng.gen_range(min..=max);
        while m.n() + 2 <= target {
            m = grow(&m, &mut rng, store);
        }
        if m.n() < min || m.n() > max {
            continue;
        }
        let labeled = rng.gen_bool(0.5);
        if labeled {
            sprinkle_labels(&mut m, &mut rng, store);
        }
        out.push(Fixture { name: format!("{fam}#{attempt}{}", if labeled { "/labeled" } else { "" }), map: m });
    }
    out
}

/// Random non-orientable maps with characteristic `chi` and at most `max_flags` flags.
pub fn nonorientable_corpus(count: usize, chi: i64, max_flags: usize, seed: u64, store: &mut LabelStore) -> Vec<FlagMap> {
    let mut rng = rng(seed);
    let mut seeds = sphere_seeds(store);
    seeds.extend(torus_seeds(store));
    seeds.push(build::bouquet(1, store));
    seeds.push(build::bouquet(2, store));
    seeds.push(build::dipole(2, store));
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 200_000, "could not generate enough maps with chi={chi}");
        let mut m = seeds.choose(&mut rng).unwrap().clone();
        let target = rng.gen_range(2..=max_flags / 2);
        while m.n() + 2 <= target {
            m = grow(&m, &mut rng, store);
        }
        if 2 * m.n() > max_flags {
            continue;
        }
        let p = rng.gen_range(0.1..0.6);
        let twisted: Vec<bool> = (0..m.n()).map(|_| rng.gen_bool(p)).collect();
        let f = FlagMap::from_signed(&m, &|x| twisted[x]);
        if !f.is_orientable() && f.euler_characteristic() == chi {
            out.push(f);
        }
    }
    out
}

/// A uniformly random renaming of the darts.
pub fn random_relabeling(n: usize, rng: &mut ChaCha8Rng) -> Perm {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Perm::from_images(v).unwrap()
}
