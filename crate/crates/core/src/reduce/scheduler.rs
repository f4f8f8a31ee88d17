//! Priority scheduler: normal reductions first, then the face-normal ones by
//! degree types, then by refined degree types on `k`-valent maps.

use super::face_normal::{reduce_aperiodic, reduce_largetype, reduce_periodic, PeriodicVertex};
use super::normal::{reduce_dipoles, reduce_loops};
use super::{Reduced, ReductionKind, ReductionStep, ReductionTrace, Terminal};
use crate::degree::{classify_cyclic, cyclic_period, least_rotation, min_rotation, ref_ranks, rotate, Local, TypeClass};
use crate::labels::LabelStore;
use crate::maps::OrientedMap;

#[derive(Clone, Copy, Debug, Default)]
pub struct ScheduleOptions {
    /// Store the map after every step in the trace.
    pub keep_maps: bool,
}

/// What the scheduler would do next on a map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    Loops,
    Dipoles,
    /// One dart at each vertex to remove.
    LargeType { darts: Vec<usize>, refined: bool },
    /// The chosen dart at each pendant vertex, pointing to the star center.
    Aperiodic { darts: Vec<usize>, refined: bool },
    Periodic { vertices: Vec<PeriodicVertex>, refined: bool },
    Terminal(Terminal),
}

struct VertexView {
    start: usize,
    rot: Vec<usize>,
    seq: Vec<usize>,
    own: usize,
}

impl VertexView {
    /// First dart (in the minimal rotation of `seq`) whose value exceeds `own`.
    fn canonical_dart(&self) -> usize {
        let k = least_rotation(&self.seq);
        let d = self.seq.len();
        (0..d)
            .map(|i| (i + k) % d)
            .find(|&i| self.seq[i] > self.own)
            .map(|i| self.rot[i])
            .expect("small type has a larger neighbor")
    }

    fn periodic(&self) -> PeriodicVertex {
        let p = cyclic_period(&self.seq);
        let s = self.seq.iter().position(|&m| m == self.own).expect("small type has an equal neighbor");
        PeriodicVertex { rotation: rotate(&self.rot, s), block: p }
    }
}

fn classify_views<K: Ord + Clone>(
    views: &[VertexView],
    aperiodic_key: impl Fn(&VertexView) -> K,
    periodic_key: impl Fn(&VertexView) -> K,
    refined: bool,
) -> Option<Selection> {
    let classes: Vec<TypeClass> = views.iter().map(|v| classify_cyclic(&v.seq, &v.own)).collect();
    let large: Vec<usize> =
        views.iter().zip(&classes).filter(|(_, c)| **c == TypeClass::Large).map(|(v, _)| v.start).collect();
    if !large.is_empty() {
        return Some(Selection::LargeType { darts: large, refined });
    }
    let pick = |class: TypeClass, key: &dyn Fn(&VertexView) -> K| -> Vec<usize> {
        let idx: Vec<usize> = (0..views.len()).filter(|&i| classes[i] == class).collect();
        let best = idx.iter().map(|&i| key(&views[i])).min();
        match best {
            None => Vec::new(),
            Some(b) => idx.into_iter().filter(|&i| key(&views[i]) == b).collect(),
        }
    };
    let ap = pick(TypeClass::SmallAperiodic, &aperiodic_key);
    if !ap.is_empty() {
        let darts = ap.iter().map(|&i| views[i].canonical_dart()).collect();
        return Some(Selection::Aperiodic { darts, refined });
    }
    let per = pick(TypeClass::SmallPeriodic, &periodic_key);
    if !per.is_empty() {
        let vertices = per.iter().map(|&i| views[i].periodic()).collect();
        return Some(Selection::Periodic { vertices, refined });
    }
    None
}

/// Chooses the next reduction, or the terminal kind of an irreducible map.
pub fn select(m: &OrientedMap) -> Selection {
    let loc = Local::of(m);
    let v = loc.verts.count();
    let has1 = loc.faces.len.contains(&1);
    let has2 = loc.faces.len.contains(&2);
    if v > 1 && has1 {
        return Selection::Loops;
    }
    if v > 2 && has2 {
        return Selection::Dipoles;
    }
    if has1 || has2 {
        return Selection::Terminal(if v == 1 { Terminal::Bouquet } else { Terminal::Dipole });
    }
    let deg = |id: usize| loc.verts.len[id];
    let d = (0..v).map(deg).min().expect("map has a vertex");
    let k_valent = (0..v).all(|id| deg(id) == d);
    if !k_valent {
        let views: Vec<VertexView> = (0..v)
            .filter(|&id| deg(id) == d)
            .map(|id| {
                let rot = loc.rotation(m, id);
                let seq = rot.iter().map(|&x| loc.far_degree(m, x)).collect();
                VertexView { start: loc.verts.start[id], rot, seq, own: d }
            })
            .collect();
        let pattern = |vv: &VertexView| -> Vec<usize> {
            min_rotation(&vv.seq.iter().map(|&m| usize::from(m > vv.own)).collect::<Vec<_>>())
        };
        let full = |vv: &VertexView| -> Vec<usize> { min_rotation(&vv.seq) };
        return classify_views(&views, pattern, full, false).unwrap_or(Selection::Terminal(Terminal::Stuck));
    }
    let refs: Vec<Vec<usize>> = loc.raw_refs(m).iter().map(|r| min_rotation(r)).collect();
    let ranks = ref_ranks(&refs);
    let views: Vec<VertexView> = (0..v)
        .map(|id| {
            let rot = loc.rotation(m, id);
            let seq = rot.iter().map(|&x| ranks[loc.verts.id[m.l.apply(x)]]).collect();
            VertexView { start: loc.verts.start[id], rot, seq, own: ranks[id] }
        })
        .collect();
    if views.iter().all(|vv| vv.seq.iter().all(|&r| r == vv.own)) {
        return Selection::Terminal(Terminal::Uniform);
    }
    let key = |vv: &VertexView| -> (usize, Vec<usize>) { (vv.own, min_rotation(&vv.seq)) };
    classify_views(&views, key, key, true).unwrap_or(Selection::Terminal(Terminal::Stuck))
}

/// Applies one reduction. Returns the terminal kind when none applies.
pub fn step_once(m: &OrientedMap, store: &mut LabelStore) -> Result<(ReductionKind, bool, i64, Reduced), Terminal> {
    let t = store.step();
    let (kind, refined, red) = match select(m) {
        Selection::Terminal(term) => return Err(term),
        Selection::Loops => (ReductionKind::Loops, false, reduce_loops(m, store)),
        Selection::Dipoles => (ReductionKind::Dipoles, false, reduce_dipoles(m, store)),
        Selection::LargeType { darts, refined } => {
            (ReductionKind::LargeType, refined, Some(reduce_largetype(m, &darts, store)))
        }
        Selection::Aperiodic { darts, refined } => {
            (ReductionKind::Aperiodic, refined, Some(reduce_aperiodic(m, &darts, store)))
        }
        Selection::Periodic { vertices, refined } => {
            (ReductionKind::Periodic, refined, Some(reduce_periodic(m, &vertices, store)))
        }
    };
    let red = red.expect("selected normal reduction applies");
    Ok((kind, refined, t, red))
}

/// Reduces `m` until no reduction applies.
pub fn run_scheduler(m: &OrientedMap, store: &mut LabelStore, opts: ScheduleOptions) -> ReductionTrace {
    let mut cur = m.clone();
    let mut orig: Vec<usize> = (0..m.n()).collect();
    let mut steps = Vec::new();
    loop {
        match step_once(&cur, store) {
            Err(terminal) => return ReductionTrace { steps, terminal, last: cur, orig },
            Ok((kind, refined, t, red)) => {
                let (v0, e0, _) = cur.count_cells();
                let cells = red.map.count_cells();
                debug_assert!(cells.0 + cells.1 < v0 + e0, "reduction did not shrink the map");
                debug_assert_eq!(red.map.euler_characteristic(), cur.euler_characteristic());
                orig = red.origin.iter().map(|&x| orig[x]).collect();
                steps.push(ReductionStep {
                    kind,
                    refined,
                    t,
                    removed: cur.n() - red.map.n(),
                    cells,
                    origin: red.origin,
                    map: if opts.keep_maps { Some(red.map.clone()) } else { None },
                });
                cur = red.map;
            }
        }
    }
}
