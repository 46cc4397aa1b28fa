//! Exhaustive backtracking search for SEDFs with translation isomorph rejection.
//!
//! Sets are filled in index order, elements within a set in increasing index
//! order, and sets are ordered by their smallest element. Since the defining
//! equations are invariant under translation, `D_1` is forced to contain the
//! identity. For every set `j` and nonidentity `g` the search keeps the number
//! of external differences `d − e = g` with `d ∈ D_j`, `e ∉ D_j` placed so far
//! and abandons a branch as soon as one exceeds `λ`. Internal differences are
//! never counted.
//!
//! The tree is split at its first branching level (the second element placed)
//! into independent [`Branch`]es. Running every branch and merging with
//! [`merge`] gives the same answer regardless of how branches are scheduled.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::algebra::{verify_sedf, SetFamily};
use crate::arith::factorize;
use crate::group::Group;
use crate::{Error, Result};

/// Largest group order accepted by [`SearchTask::new`].
pub const SEARCH_MAX_ORDER: u64 = 2048;

/// Default bound on `v` for [`count_for_order`].
pub const COUNT_MAX_ORDER: u64 = 40;

const FREE: u32 = u32::MAX;
const FLUSH_EVERY: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTask {
    group: Group,
    m: usize,
    k: usize,
    lambda: u32,
    /// Stop after this many solutions; 0 means find all.
    pub limit: usize,
    /// Maximum number of visited nodes.
    pub budget: Option<u64>,
    /// Disables the per-difference count prune (slow path, for cross-checks).
    pub prune: bool,
}

impl SearchTask {
    pub fn new(group: &Group, m: u64, k: u64, lambda: u64) -> Result<Self> {
        let v = group.order();
        if v > SEARCH_MAX_ORDER {
            return Err(Error::BoundExceeded {
                value: v,
                bound: SEARCH_MAX_ORDER,
            });
        }
        if m < 1 || k < 1 || m.saturating_mul(k) > v {
            return Err(Error::InvalidParameters(alloc::format!(
                "need m, k >= 1 and mk <= v (got v={v}, m={m}, k={k})"
            )));
        }
        if lambda < 1 {
            return Err(Error::NonPositiveLambda);
        }
        let lhs = (k as u128) * (k as u128) * (m as u128 - 1);
        if lhs != lambda as u128 * (v as u128 - 1) {
            return Err(Error::Inadmissible { v, m, k, lambda });
        }
        Ok(SearchTask {
            group: group.clone(),
            m: m as usize,
            k: k as usize,
            lambda: lambda as u32,
            limit: 0,
            budget: None,
            prune: true,
        })
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.budget = budget;
        self
    }

    pub fn without_pruning(mut self) -> Self {
        self.prune = false;
        self
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> u64 {
        self.lambda as u64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Completed,
    LimitReached,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// Canonical representatives, in increasing canonical order.
    pub solutions: Vec<SetFamily>,
    pub nodes_visited: u64,
    /// True iff the whole tree was covered.
    pub exhausted: bool,
    pub outcome: Outcome,
}

/// Shared node counter for concurrently running branches.
#[derive(Debug, Default)]
pub struct NodeCounter {
    nodes: AtomicU64,
    stop: AtomicBool,
}

impl NodeCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    fn add(&self, n: u64) -> u64 {
        self.nodes.fetch_add(n, Ordering::Relaxed) + n
    }
}

/// One subtree of the search: the value of the second placed element, or the
/// whole tree when only one element is ever placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Branch(pub Option<usize>);

/// Result of a single branch, before merging.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchResult {
    pub solutions: BTreeSet<Vec<Vec<usize>>>,
    pub outcome: Outcome,
}

/// First-level branches of `task`, in exploration order.
pub fn branches(task: &SearchTask) -> Vec<Branch> {
    if task.m * task.k <= 1 {
        return alloc::vec![Branch(None)];
    }
    (1..task.group.size()).map(|x| Branch(Some(x))).collect()
}

/// Precomputed `x − y` table, shared by all branches of a task.
pub struct DifferenceTable {
    v: usize,
    sub: Vec<u32>,
}

impl DifferenceTable {
    pub fn new(group: &Group) -> Self {
        let v = group.size();
        let mut sub = alloc::vec![0u32; v * v];
        for x in 0..v {
            for y in 0..v {
                sub[x * v + y] = group.sub_index(x, y) as u32;
            }
        }
        DifferenceTable { v, sub }
    }

    #[inline]
    fn sub(&self, x: usize, y: usize) -> usize {
        self.sub[x * self.v + y] as usize
    }
}

struct Searcher<'a> {
    task: &'a SearchTask,
    table: &'a DifferenceTable,
    counter: &'a NodeCounter,
    v: usize,
    owner: Vec<u32>,
    sets: Vec<Vec<usize>>,
    /// counts[j·v + g]: external differences equal to g charged to set j.
    counts: Vec<u32>,
    placed: Vec<usize>,
    forced: Option<usize>,
    pending_nodes: u64,
    solutions: BTreeSet<Vec<Vec<usize>>>,
    outcome: Option<Outcome>,
}

impl<'a> Searcher<'a> {
    fn place(&mut self, x: usize, j: usize) -> bool {
        let v = self.v;
        let lambda = self.task.lambda;
        let mut ok = true;
        for &y in &self.placed {
            let l = self.owner[y] as usize;
            if l == j {
                continue;
            }
            let a = &mut self.counts[j * v + self.table.sub(x, y)];
            *a += 1;
            ok &= *a <= lambda;
            let b = &mut self.counts[l * v + self.table.sub(y, x)];
            *b += 1;
            ok &= *b <= lambda;
        }
        self.owner[x] = j as u32;
        self.placed.push(x);
        self.sets[j].push(x);
        ok || !self.task.prune
    }

    fn unplace(&mut self, x: usize, j: usize) {
        let v = self.v;
        self.sets[j].pop();
        self.placed.pop();
        self.owner[x] = FREE;
        for &y in &self.placed {
            let l = self.owner[y] as usize;
            if l == j {
                continue;
            }
            self.counts[j * v + self.table.sub(x, y)] -= 1;
            self.counts[l * v + self.table.sub(y, x)] -= 1;
        }
    }

    fn visit_node(&mut self) -> bool {
        self.pending_nodes += 1;
        if self.pending_nodes >= FLUSH_EVERY {
            self.flush();
        }
        if self.counter.stop.load(Ordering::Relaxed) {
            self.outcome = Some(Outcome::BudgetExhausted);
        }
        self.outcome.is_none()
    }

    fn flush(&mut self) {
        let total = self.counter.add(self.pending_nodes);
        self.pending_nodes = 0;
        if self.task.budget.is_some_and(|b| total > b) {
            self.counter.stop.store(true, Ordering::Relaxed);
            self.outcome = Some(Outcome::BudgetExhausted);
        }
    }

    fn leaf(&mut self) {
        let (v, lambda) = (self.v, self.task.lambda);
        let balanced = (0..self.task.m).all(|j| (1..v).all(|g| self.counts[j * v + g] == lambda));
        if !balanced {
            return;
        }
        let family = SetFamily::from_indices(&self.task.group, self.sets.clone())
            .expect("search keeps sets disjoint");
        if verify_sedf(&family, lambda as i64).is_ok_and(|r| r.is_valid()) {
            self.solutions.insert(canonical_sets(&family));
            if self.task.limit > 0 && self.solutions.len() >= self.task.limit {
                self.outcome = Some(Outcome::LimitReached);
            }
        }
    }

    fn dfs(&mut self, j: usize, pos: usize) {
        if self.outcome.is_some() {
            return;
        }
        let (m, k, v) = (self.task.m, self.task.k, self.v);
        if j == m {
            self.leaf();
            return;
        }
        if pos == k {
            self.dfs(j + 1, 0);
            return;
        }
        let (lo, hi) = if j == 0 && pos == 0 {
            (0, 0)
        } else if pos == 0 {
            (self.sets[j - 1][0] + 1, v - k)
        } else {
            (self.sets[j][pos - 1] + 1, v - (k - pos))
        };
        if lo > hi {
            return;
        }
        let forced = (self.placed.len() == 1).then_some(self.forced).flatten();
        for x in lo..=hi {
            if self.owner[x] != FREE || forced.is_some_and(|f| f != x) {
                continue;
            }
            if !self.visit_node() {
                return;
            }
            if self.place(x, j) {
                self.dfs(j, pos + 1);
            }
            self.unplace(x, j);
            if self.outcome.is_some() {
                return;
            }
        }
    }
}

/// Explores one branch of `task`.
pub fn run_branch(
    task: &SearchTask,
    table: &DifferenceTable,
    branch: Branch,
    counter: &NodeCounter,
) -> BranchResult {
    let v = task.group.size();
    let mut s = Searcher {
        task,
        table,
        counter,
        v,
        owner: alloc::vec![FREE; v],
        sets: alloc::vec![Vec::with_capacity(task.k); task.m],
        counts: alloc::vec![0; task.m * v],
        placed: Vec::with_capacity(task.m * task.k),
        forced: branch.0,
        pending_nodes: 0,
        solutions: BTreeSet::new(),
        outcome: None,
    };
    if counter.stop.load(Ordering::Relaxed) {
        return BranchResult {
            solutions: BTreeSet::new(),
            outcome: Outcome::BudgetExhausted,
        };
    }
    s.dfs(0, 0);
    s.flush();
    BranchResult {
        solutions: s.solutions,
        outcome: s.outcome.unwrap_or(Outcome::Completed),
    }
}

/// Combines branch results (in any order) into a deterministic result.
pub fn merge(
    task: &SearchTask,
    results: impl IntoIterator<Item = BranchResult>,
    nodes_visited: u64,
) -> SearchResult {
    let mut all = BTreeSet::new();
    let mut outcome = Outcome::Completed;
    for r in results {
        outcome = outcome.max(r.outcome);
        all.extend(r.solutions);
    }
    if task.limit > 0 && all.len() >= task.limit && outcome == Outcome::Completed {
        // every branch finished, but the caller only asked for `limit` solutions
        outcome = if all.len() > task.limit {
            Outcome::LimitReached
        } else {
            outcome
        };
    }
    let keep = if task.limit > 0 {
        task.limit
    } else {
        usize::MAX
    };
    let solutions = all
        .into_iter()
        .take(keep)
        .map(|sets| SetFamily::from_indices(&task.group, sets).expect("canonical sets are valid"))
        .collect();
    SearchResult {
        solutions,
        nodes_visited,
        exhausted: outcome == Outcome::Completed,
        outcome,
    }
}

/// Runs every branch of `task` on the current thread.
pub fn exhaustive_search(task: &SearchTask) -> SearchResult {
    let table = DifferenceTable::new(&task.group);
    let counter = NodeCounter::new();
    let results: Vec<BranchResult> = branches(task)
        .into_iter()
        .map(|b| run_branch(task, &table, b, &counter))
        .collect();
    merge(task, results, counter.nodes())
}

fn canonical_sets(family: &SetFamily) -> Vec<Vec<usize>> {
    let mut best: Option<Vec<Vec<usize>>> = None;
    for t in 0..family.group().size() {
        let mut sets = family.translate(t).sets().to_vec();
        sets.sort_unstable();
        if best.as_ref().is_none_or(|b| sets < *b) {
            best = Some(sets);
        }
    }
    best.expect("groups are nonempty")
}

/// Lexicographically least translate of `family`, with sets sorted internally
/// and ordered by smallest element.
pub fn canonical_form(family: &SetFamily) -> SetFamily {
    SetFamily::from_indices(family.group(), canonical_sets(family)).expect("translates stay valid")
}

/// One representative per isomorphism class of abelian groups of order `v`,
/// in invariant-factor form `d_1 | d_2 | …`, cyclic group first.
pub fn abelian_groups(v: u64) -> Vec<Group> {
    if v < 2 {
        return Vec::new();
    }
    let mut combos: Vec<Vec<u64>> = alloc::vec![Vec::new()];
    for (p, e) in factorize(v) {
        let mut next = Vec::new();
        for parts in partitions(e) {
            for base in &combos {
                // invariant factors, largest first, for this prime merged in
                let mut merged = base.clone();
                for (i, &part) in parts.iter().enumerate() {
                    let pp = p.pow(part);
                    if i < merged.len() {
                        merged[i] *= pp;
                    } else {
                        merged.push(pp);
                    }
                }
                next.push(merged);
            }
        }
        combos = next;
    }
    let mut groups: Vec<Vec<u64>> = combos
        .into_iter()
        .map(|mut f| {
            f.reverse();
            f
        })
        .collect();
    groups.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    groups
        .into_iter()
        .map(|f| Group::new(&f).expect("valid factors"))
        .collect()
}

/// Partitions of `n` into nonincreasing positive parts.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Searches every abelian group of order `v`.
pub fn count_for_order(
    v: u64,
    m: u64,
    k: u64,
    lambda: u64,
    bound: u64,
) -> Result<Vec<(Group, SearchResult)>> {
    if v > bound {
        return Err(Error::BoundExceeded { value: v, bound });
    }
    abelian_groups(v)
        .into_iter()
        .map(|g| {
            let task = SearchTask::new(&g, m, k, lambda)?;
            let result = exhaustive_search(&task);
            Ok((g, result))
        })
        .collect()
}
