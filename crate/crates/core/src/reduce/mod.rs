//! The five elementary reductions and the scheduler that applies them until
//! the map is irreducible.

mod face_normal;
mod normal;
mod scheduler;

pub use face_normal::{reduce_aperiodic, reduce_largetype, reduce_periodic, PeriodicVertex};
pub use normal::{reduce_dipoles, reduce_loops};
pub use scheduler::{run_scheduler, select, step_once, ScheduleOptions, Selection};

use std::fmt;

use crate::labels::LabelId;
use crate::maps::OrientedMap;
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    Loops,
    Dipoles,
    LargeType,
    Aperiodic,
    Periodic,
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReductionKind::Loops => "loops",
            ReductionKind::Dipoles => "dipoles",
            ReductionKind::LargeType => "largetype",
            ReductionKind::Aperiodic => "aperiodic",
            ReductionKind::Periodic => "periodic",
        };
        f.write_str(s)
    }
}

/// Result of one reduction: the new map on a subset of the old darts.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub map: OrientedMap,
    /// Old dart index of every new dart.
    pub origin: Vec<usize>,
}

/// Keeps the darts with `keep[x]`, renumbering them densely in increasing order.
/// `r`, `l` and `labels` are given in old indices and must map kept darts to kept darts.
pub(crate) fn compact(keep: &[bool], r: &[usize], l: &[usize], labels: &[LabelId]) -> Reduced {
    let n = keep.len();
    let mut new_of = vec![usize::MAX; n];
    let mut origin = Vec::new();
    for x in 0..n {
        if keep[x] {
            new_of[x] = origin.len();
            origin.push(x);
        }
    }
    let nr: Vec<usize> = origin.iter().map(|&x| new_of[r[x]]).collect();
    let nl: Vec<usize> = origin.iter().map(|&x| new_of[l[x]]).collect();
    let nlab: Vec<LabelId> = origin.iter().map(|&x| labels[x]).collect();
    let map = OrientedMap {
        r: Perm::from_images(nr).expect("reduction keeps R a permutation"),
        l: Perm::from_images(nl).expect("reduction keeps L a permutation"),
        labels: nlab,
    };
    debug_assert!(crate::maps::validate_oriented(&map.r, &map.l).is_ok());
    Reduced { map, origin }
}

/// One executed reduction.
#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    /// Whether refined degree types selected the vertices.
    pub refined: bool,
    /// First step value used for the new labels.
    pub t: i64,
    pub removed: usize,
    /// `(v, e, f)` after the step.
    pub cells: (usize, usize, usize),
    /// Old dart of every new dart.
    pub origin: Vec<usize>,
    /// The map after the step, kept only when requested.
    pub map: Option<OrientedMap>,
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (v, e, fc) = self.cells;
        write!(
            f,
            "{}{} t={} removed={} v={} e={} f={}",
            self.kind,
            if self.refined { "/refined" } else { "" },
            self.t,
            self.removed,
            v,
            e,
            fc
        )
    }
}

/// How the scheduler stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Terminal {
    /// One vertex, not face-normal.
    Bouquet,
    /// Two vertices, 2-faces only.
    Dipole,
    /// Face-normal and every vertex has the same local type.
    Uniform,
    /// A symmetric small type with no canonical reduction.
    Stuck,
}

#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub terminal: Terminal,
    /// The irreducible map.
    pub last: OrientedMap,
    /// Original dart of every dart of `last`.
    pub orig: Vec<usize>,
}
