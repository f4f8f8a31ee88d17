//! Dart labels: integer-valued planted trees, interned so that equal trees
//! share one [`LabelId`].

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelId(pub u32);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelError {
    #[error("heap property violated: root {root} is not above child value {child}")]
    HeapViolation { root: i64, child: i64 },
}

#[derive(Clone, Debug)]
struct Node {
    value: i64,
    children: Vec<LabelId>,
}

/// Interning table for planted trees plus the reduction step counter.
#[derive(Clone, Debug, Default)]
pub struct LabelStore {
    nodes: Vec<Node>,
    index: HashMap<(i64, Vec<LabelId>), LabelId>,
    step: i64,
}

impl LabelStore {
    pub fn new() -> Self {
        Self::default()
    }

    fn intern(&mut self, value: i64, children: Vec<LabelId>) -> LabelId {
        if let Some(&id) = self.index.get(&(value, children.clone())) {
            return id;
        }
        let id = LabelId(self.nodes.len() as u32);
        self.nodes.push(Node { value, children: children.clone() });
        self.index.insert((value, children), id);
        id
    }

    /// Single-node tree carrying `value`. Keeps the step counter above it.
    pub fn leaf(&mut self, value: i64) -> LabelId {
        if value >= self.step {
            self.step = value + 1;
        }
        self.intern(value, Vec::new())
    }

    /// `n` copies of the single-node tree valued 0.
    pub fn constant_labeling(&mut self, n: usize) -> Vec<LabelId> {
        let z = self.leaf(0);
        vec![z; n]
    }

    /// Current step counter; every value stored so far is below it.
    pub fn step(&self) -> i64 {
        self.step
    }

    /// Returns a fresh step value and advances the counter.
    pub fn next_step(&mut self) -> i64 {
        let t = self.step;
        self.step += 1;
        t
    }

    /// Raises the step counter to at least `t`.
    pub fn advance_to(&mut self, t: i64) {
        self.step = self.step.max(t);
    }

    /// The tree with root value `t` and the given ordered children.
    pub fn try_lab(&mut self, t: i64, children: &[LabelId]) -> Result<LabelId, LabelError> {
        for c in children {
            let v = self.value(*c);
            if v >= t {
                return Err(LabelError::HeapViolation { root: t, child: v });
            }
        }
        if t >= self.step {
            self.step = t + 1;
        }
        Ok(self.intern(t, children.to_vec()))
    }

    /// Like [`try_lab`](Self::try_lab); a heap violation is a caller bug.
    pub fn lab(&mut self, t: i64, children: &[LabelId]) -> LabelId {
        self.try_lab(t, children).expect("label step counter out of order")
    }

    pub fn value(&self, id: LabelId) -> i64 {
        self.nodes[id.0 as usize].value
    }

    pub fn children(&self, id: LabelId) -> &[LabelId] {
        &self.nodes[id.0 as usize].children
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn depth(&self, id: LabelId) -> usize {
        1 + self.children(id).iter().map(|&c| self.depth(c)).max().unwrap_or(0)
    }

    pub fn node_count(&self, id: LabelId) -> usize {
        1 + self.children(id).iter().map(|&c| self.node_count(c)).sum::<usize>()
    }

    /// Mirror image: children reversed at every node.
    pub fn mirror_label(&mut self, id: LabelId) -> LabelId {
        let mut memo = HashMap::new();
        self.mirror_memo(id, &mut memo)
    }

    pub fn mirror_all(&mut self, ids: &[LabelId]) -> Vec<LabelId> {
        let mut memo = HashMap::new();
        ids.iter().map(|&id| self.mirror_memo(id, &mut memo)).collect()
    }

    fn mirror_memo(&mut self, id: LabelId, memo: &mut HashMap<LabelId, LabelId>) -> LabelId {
        if let Some(&m) = memo.get(&id) {
            return m;
        }
        // Iterative post-order so deep label chains do not overflow the stack.
        let mut stack = vec![(id, false)];
        while let Some((x, expanded)) = stack.pop() {
            if memo.contains_key(&x) {
                continue;
            }
            if !expanded {
                stack.push((x, true));
                for &c in self.children(x) {
                    if !memo.contains_key(&c) {
                        stack.push((c, false));
                    }
                }
            } else {
                let node = &self.nodes[x.0 as usize];
                let value = node.value;
                let kids: Vec<LabelId> = node.children.iter().rev().map(|c| memo[c]).collect();
                let m = self.intern(value, kids);
                memo.insert(x, m);
            }
        }
        memo[&id]
    }

    /// Nested-parentheses dump, e.g. `3(1(0) 0)`.
    pub fn dump(&self, id: LabelId) -> String {
        let mut s = String::new();
        self.dump_into(id, &mut s);
        s
    }

    fn dump_into(&self, id: LabelId, s: &mut String) {
        let _ = write!(s, "{}", self.value(id));
        let kids = self.children(id);
        if !kids.is_empty() {
            s.push('(');
            for (i, &c) in kids.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                self.dump_into(c, s);
            }
            s.push(')');
        }
    }

    /// Preorder encoding: `[open, value]` per node and `close` after its children.
    pub fn serialize(&self, id: LabelId) -> Vec<i64> {
        let mut out = Vec::new();
        let mut stack = vec![(id, 0usize)];
        while let Some((x, i)) = stack.pop() {
            if i == 0 {
                out.push(1);
                out.push(self.value(x));
            }
            let kids = self.children(x);
            if i < kids.len() {
                stack.push((x, i + 1));
                stack.push((kids[i], 0));
            } else {
                out.push(0);
            }
        }
        out
    }
}

/// Result of [`canonical_relabel`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub ranks1: Vec<u32>,
    pub ranks2: Vec<u32>,
    pub consistent: bool,
}

/// Assigns every tree reachable from the given roots a rank in a canonical
/// total order (value first, then children ranks lexicographically, shorter
/// lists first). Equal trees in different stores get equal ranks.
struct JointRanker {
    // (store index, id) -> joint rank
    rank: [HashMap<LabelId, u32>; 2],
}

impl JointRanker {
    fn build(stores: [&LabelStore; 2], roots: [&[LabelId]; 2]) -> Self {
        // Collect reachable nodes of each store.
        let mut reach: [Vec<LabelId>; 2] = [Vec::new(), Vec::new()];
        for k in 0..2 {
            let mut seen = std::collections::HashSet::new();
            let mut stack: Vec<LabelId> = Vec::new();
            for &r in roots[k] {
                if seen.insert(r) {
                    stack.push(r);
                }
            }
            while let Some(x) = stack.pop() {
                reach[k].push(x);
                for &c in stores[k].children(x) {
                    if seen.insert(c) {
                        stack.push(c);
                    }
                }
            }
        }
        // Group by value; children always carry smaller values.
        let mut by_value: std::collections::BTreeMap<i64, Vec<(usize, LabelId)>> = Default::default();
        for k in 0..2 {
            for &x in &reach[k] {
                by_value.entry(stores[k].value(x)).or_default().push((k, x));
            }
        }
        let mut rank: [HashMap<LabelId, u32>; 2] = [HashMap::new(), HashMap::new()];
        let mut next = 0u32;
        for (_, group) in by_value {
            let mut keyed: Vec<(Vec<u32>, usize, LabelId)> = group
                .into_iter()
                .map(|(k, x)| {
                    let key = stores[k].children(x).iter().map(|c| rank[k][c]).collect();
                    (key, k, x)
                })
                .collect();
            keyed.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
            let mut prev: Option<Vec<u32>> = None;
            for (key, k, x) in keyed {
                if prev.as_ref() != Some(&key) {
                    next += 1;
                    prev = Some(key);
                }
                rank[k].insert(x, next);
            }
        }
        JointRanker { rank }
    }
}

/// Canonical integer relabeling of two label arrays from (possibly different)
/// stores. Equal trees map to equal ranks; ranks are dense from 1 over the
/// trees used as dart labels. `consistent` is false when the two maps use
/// different sets of trees.
pub fn canonical_relabel(
    store1: &LabelStore,
    labels1: &[LabelId],
    store2: &LabelStore,
    labels2: &[LabelId],
) -> Relabeling {
    let jr = JointRanker::build([store1, store2], [labels1, labels2]);
    let mut used: Vec<u32> = labels1
        .iter()
        .map(|l| jr.rank[0][l])
        .chain(labels2.iter().map(|l| jr.rank[1][l]))
        .collect();
    used.sort_unstable();
    used.dedup();
    let dense: HashMap<u32, u32> = used.iter().enumerate().map(|(i, &r)| (r, i as u32 + 1)).collect();
    let ranks1: Vec<u32> = labels1.iter().map(|l| dense[&jr.rank[0][l]]).collect();
    let ranks2: Vec<u32> = labels2.iter().map(|l| dense[&jr.rank[1][l]]).collect();
    let mut s1 = ranks1.clone();
    s1.sort_unstable();
    s1.dedup();
    let mut s2 = ranks2.clone();
    s2.sort_unstable();
    s2.dedup();
    Relabeling { consistent: s1 == s2, ranks1, ranks2 }
}

/// Canonical ranks for the labels of a single map.
pub fn canonical_ranks(store: &LabelStore, labels: &[LabelId]) -> Vec<u32> {
    canonical_relabel(store, labels, store, &[]).ranks1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_labels() {
        let mut s = LabelStore::new();
        let l = s.constant_labeling(2);
        assert_eq!(l[0], l[1]);
        assert_eq!(s.node_count(l[0]), 1);
        assert_eq!(s.value(l[0]), 0);
        assert_eq!(s.step(), 1);
    }

    #[test]
    fn lab_interning_and_arity() {
        let mut s = LabelStore::new();
        let z = s.leaf(0);
        let a = s.lab(1, &[z]);
        let b = s.lab(1, &[z, z]);
        assert_ne!(a, b);
        assert_eq!(s.lab(1, &[z, z]), b);
        let c = s.lab(2, &[a]);
        assert_eq!(s.depth(c), 3);
    }

    #[test]
    fn heap_violation_rejected() {
        let mut s = LabelStore::new();
        let z = s.leaf(5);
        assert_eq!(s.try_lab(3, &[z]), Err(LabelError::HeapViolation { root: 3, child: 5 }));
    }

    #[test]
    fn mirror() {
        let mut s = LabelStore::new();
        let z = s.leaf(0);
        assert_eq!(s.mirror_label(z), z);
        let a = s.leaf(1);
        let b = s.lab(2, &[z, a]);
        let t = s.lab(3, &[a, b]);
        let m = s.mirror_label(t);
        assert_eq!(s.dump(t), "3(1 2(0 1))");
        assert_eq!(s.dump(m), "3(2(1 0) 1)");
        assert_eq!(s.mirror_label(m), t);
    }

    #[test]
    fn relabel_sets() {
        let mut s1 = LabelStore::new();
        let a1 = s1.leaf(0);
        let b1 = s1.leaf(1);
        let mut s2 = LabelStore::new();
        let b2 = s2.leaf(1);
        let a2 = s2.leaf(0);
        let c2 = s2.leaf(2);
        let r = canonical_relabel(&s1, &[a1, b1, a1], &s2, &[b2, a2, a2]);
        assert!(r.consistent);
        assert_eq!(r.ranks1, vec![1, 2, 1]);
        assert_eq!(r.ranks2, vec![2, 1, 1]);
        let r = canonical_relabel(&s1, &[a1, b1], &s2, &[a2, c2]);
        assert!(!r.consistent);
    }

    #[test]
    fn relabel_three_trees_is_permutation() {
        let mut s = LabelStore::new();
        let z = s.leaf(0);
        let x = s.lab(1, &[z]);
        let y = s.lab(1, &[z, z]);
        let r = canonical_ranks(&s, &[y, x, z]);
        let mut sorted = r.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 3]);
        // order agrees with comparing serializations of equal-value roots by child lists
        assert!(r[1] < r[0]);
    }
}
