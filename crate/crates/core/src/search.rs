//! Path and cycle search used by the constructive routines.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Counts down units of work; `None` means unlimited.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Budget(pub Option<u64>);

impl Budget {
    pub fn unlimited() -> Self {
        Budget(None)
    }

    pub fn steps(n: u64) -> Self {
        Budget(Some(n))
    }

    /// Spends one unit; false once exhausted.
    pub fn tick(&mut self) -> bool {
        match &mut self.0 {
            None => true,
            Some(0) => false,
            Some(left) => {
                *left -= 1;
                true
            }
        }
    }
}

pub(crate) enum Outcome<T> {
    Found(T),
    NotFound,
    OutOfBudget,
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

struct PathState {
    path: Vec<usize>,
    on: Vec<bool>,
}

impl PathState {
    fn new(n: usize, path: Vec<usize>) -> Self {
        let mut on = vec![false; n];
        for &v in &path {
            on[v] = true;
        }
        PathState { path, on }
    }

    fn outside_neighbor(&self, g: &Graph, v: usize) -> Option<usize> {
        g.neighbors(v).iter().copied().find(|&u| !self.on[u])
    }

    fn extend_end(&mut self, g: &Graph) -> bool {
        let mut grew = false;
        while let Some(u) = self.outside_neighbor(g, *self.path.last().unwrap()) {
            self.path.push(u);
            self.on[u] = true;
            grew = true;
        }
        grew
    }

    fn extend_both(&mut self, g: &Graph) {
        loop {
            let a = self.extend_end(g);
            self.path.reverse();
            let b = self.extend_end(g);
            self.path.reverse();
            if !a && !b {
                break;
            }
        }
    }
}

/// Index i with path[0] ~ path[i+1] and path[i] ~ path[l], giving a cycle on all path vertices.
fn crossing(g: &Graph, path: &[usize]) -> Option<usize> {
    let l = path.len() - 1;
    if l < 2 {
        return None;
    }
    (0..l).find(|&i| g.has_edge(path[0], path[i + 1]) && g.has_edge(path[i], path[l]))
}

fn crossing_cycle(path: &[usize], i: usize) -> Vec<usize> {
    let mut c = path[..=i].to_vec();
    c.extend(path[i + 1..].iter().rev());
    c
}

/// Longest cycle obtainable from the path's end chords.
pub(crate) fn best_cycle_from_path(g: &Graph, path: &[usize]) -> Option<Vec<usize>> {
    let l = path.len().checked_sub(1)?;
    if l < 2 {
        return None;
    }
    if let Some(i) = crossing(g, path) {
        return Some(crossing_cycle(path, i));
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in path.iter().enumerate() {
        pos[v] = i;
    }
    let n0: Vec<usize> = g.neighbors(path[0]).iter().filter(|&&u| pos[u] != usize::MAX).map(|&u| pos[u]).collect();
    let nl: Vec<usize> = g.neighbors(path[l]).iter().filter(|&&u| pos[u] != usize::MAX).map(|&u| pos[u]).collect();
    let mut best: Option<Vec<usize>> = None;
    let mut consider = |c: Vec<usize>| {
        if c.len() >= 3 && best.as_ref().is_none_or(|b| c.len() > b.len()) {
            best = Some(c);
        }
    };
    if let Some(&a) = n0.iter().max() {
        consider(path[..=a].to_vec());
    }
    if let Some(&b) = nl.iter().min() {
        consider(path[b..].to_vec());
    }
    // b ∈ N(v_l), a ∈ N(v_0), b < a, a − b minimal
    let mut n0s = n0.clone();
    n0s.sort_unstable();
    let mut pair: Option<(usize, usize)> = None;
    for &b in &nl {
        let idx = n0s.partition_point(|&a| a <= b);
        if let Some(&a) = n0s.get(idx) {
            if pair.is_none_or(|(pb, pa)| a - b < pa - pb) {
                pair = Some((b, a));
            }
        }
    }
    if let Some((b, a)) = pair {
        let mut c = path[..=b].to_vec();
        c.extend(path[a..].iter().rev());
        consider(c);
    }
    best
}

/// Rotation-extension: grows the path until neither end has an off-path neighbour
/// in any rotation reached within the budget.
pub(crate) fn posa_path(g: &Graph, start: Vec<usize>, budget: &mut Budget) -> Vec<usize> {
    let n = g.n();
    let mut st = PathState::new(n, start);
    'grow: loop {
        st.extend_both(g);
        if st.path.len() == n {
            return st.path;
        }
        if let Some(i) = crossing(g, &st.path) {
            let cycle = crossing_cycle(&st.path, i);
            if let Some((j, w)) = cycle.iter().enumerate().find_map(|(j, &v)| st.outside_neighbor(g, v).map(|w| (j, w))) {
                let mut p = vec![w];
                p.extend(cycle[j..].iter().chain(cycle[..j].iter()));
                st = PathState::new(n, p);
                continue 'grow;
            }
            return st.path;
        }
        for _side in 0..2 {
            // BFS over rotations keeping path[0] fixed
            let mut seen_end = vec![false; n];
            seen_end[*st.path.last().unwrap()] = true;
            let mut queue = VecDeque::from([st.path.clone()]);
            while let Some(p) = queue.pop_front() {
                let l = p.len() - 1;
                let mut pos = vec![usize::MAX; n];
                for (i, &v) in p.iter().enumerate() {
                    pos[v] = i;
                }
                for &u in g.neighbors(p[l]) {
                    let i = pos[u];
                    if i == usize::MAX || i + 1 >= l {
                        continue;
                    }
                    if !budget.tick() {
                        return st.path;
                    }
                    let new_end = p[i + 1];
                    if seen_end[new_end] {
                        continue;
                    }
                    seen_end[new_end] = true;
                    let mut q = p.clone();
                    q[i + 1..].reverse();
                    if st.outside_neighbor(g, new_end).is_some() || crossing(g, &q).is_some() {
                        // extension or closure happens at the top of the loop
                        st.path = q;
                        continue 'grow;
                    }
                    queue.push_back(q);
                }
            }
            st.path.reverse();
        }
        return st.path;
    }
}

/// Opens a cycle at vertex `j` with off-cycle neighbour `w`.
fn open_cycle(cycle: &[usize], j: usize, w: usize) -> Vec<usize> {
    let mut p = vec![w];
    p.extend(cycle[j..].iter().chain(cycle[..j].iter()));
    p
}

/// One local enlargement of a cycle (`closed`) or of a path with fixed ends.
/// Returns true if the sequence grew.
pub(crate) fn improve_sequence(g: &Graph, seq: &mut Vec<usize>, closed: bool) -> bool {
    let n = g.n();
    let mut on = vec![false; n];
    for &v in seq.iter() {
        on[v] = true;
    }
    let len = seq.len();
    let pairs = if closed { len } else { len.saturating_sub(1) };
    // single insertion
    for i in 0..pairs {
        let (a, b) = (seq[i], seq[(i + 1) % len]);
        if let Some(&w) = g.neighbors(a).iter().find(|&&w| !on[w] && g.has_edge(w, b)) {
            seq.insert(i + 1, w);
            return true;
        }
    }
    // double insertion a u v b
    for i in 0..pairs {
        let (a, b) = (seq[i], seq[(i + 1) % len]);
        for &u in g.neighbors(a) {
            if on[u] {
                continue;
            }
            if let Some(&v) = g.neighbors(b).iter().find(|&&v| !on[v] && v != u && g.has_edge(u, v)) {
                seq.splice(i + 1..i + 1, [u, v]);
                return true;
            }
        }
    }
    // detour through an off-sequence component, replacing a shorter arc
    let removed = on.clone();
    let comps = g.components_avoiding(&removed);
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in seq.iter().enumerate() {
        pos[v] = i;
    }
    for comp in comps {
        let mut attach: Vec<(usize, usize)> = Vec::new(); // (seq position, comp vertex)
        for &w in &comp {
            for &u in g.neighbors(w) {
                if on[u] {
                    attach.push((pos[u], w));
                }
            }
        }
        attach.sort_unstable();
        for x in 0..attach.len() {
            for y in 0..attach.len() {
                let (i, wi) = attach[x];
                let (j, wj) = attach[y];
                if i >= j {
                    continue;
                }
                // arc strictly between i and j, and (closed) the complementary arc
                let inner = j - i - 1;
                let outer = len - (j - i) - 1;
                let Some(q) = comp_path(g, &comp, wi, wj) else { continue };
                if q.len() > inner {
                    let mut next = seq[..=i].to_vec();
                    next.extend(&q);
                    next.extend(&seq[j..]);
                    *seq = next;
                    return true;
                }
                if closed && q.len() > outer {
                    // keep seq[i..=j], return through q reversed
                    let mut next = seq[i..=j].to_vec();
                    next.extend(q.iter().rev());
                    *seq = next;
                    return true;
                }
            }
        }
    }
    false
}

/// A long path inside `comp` from `a` to `b`: shortest path, then greedily lengthened.
fn comp_path(g: &Graph, comp: &[usize], a: usize, b: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut inside = vec![false; n];
    for &v in comp {
        inside[v] = true;
    }
    if a == b {
        return Some(vec![a]);
    }
    let mut prev = vec![usize::MAX; n];
    prev[a] = a;
    let mut q = VecDeque::from([a]);
    while let Some(v) = q.pop_front() {
        if v == b {
            break;
        }
        for &u in g.neighbors(v) {
            if inside[u] && prev[u] == usize::MAX {
                prev[u] = v;
                q.push_back(u);
            }
        }
    }
    if prev[b] == usize::MAX {
        return None;
    }
    let mut path = vec![b];
    let mut v = b;
    while v != a {
        v = prev[v];
        path.push(v);
    }
    path.reverse();
    // lengthen inside the component with the open-path insertions
    let sub = g.induced(comp);
    let mut local: Vec<usize> = path.iter().map(|&v| sub.local(v).unwrap()).collect();
    let mut rounds = 0;
    while rounds < 4 * comp.len() && improve_inserts_only(&sub.graph, &mut local) {
        rounds += 1;
    }
    Some(sub.to_parent(&local))
}

fn improve_inserts_only(g: &Graph, seq: &mut Vec<usize>) -> bool {
    let mut on = vec![false; g.n()];
    for &v in seq.iter() {
        on[v] = true;
    }
    for i in 0..seq.len().saturating_sub(1) {
        let (a, b) = (seq[i], seq[i + 1]);
        if let Some(&w) = g.neighbors(a).iter().find(|&&w| !on[w] && g.has_edge(w, b)) {
            seq.insert(i + 1, w);
            return true;
        }
    }
    false
}

/// Heuristic long cycle: rotation-extension, chord closure, then local enlargement.
pub(crate) fn heuristic_cycle(g: &Graph, start: usize, target: usize, budget: &mut Budget) -> Option<Vec<usize>> {
    let path = posa_path(g, vec![start], budget);
    let mut best = best_cycle_from_path(g, &path)?;
    loop {
        while best.len() < target && improve_sequence(g, &mut best, true) {}
        if best.len() >= target || best.len() == g.n() {
            return Some(best);
        }
        let mut on = vec![false; g.n()];
        for &v in &best {
            on[v] = true;
        }
        let mut grown = false;
        for j in 0..best.len() {
            let Some(&w) = g.neighbors(best[j]).iter().find(|&&w| !on[w]) else { continue };
            if !budget.tick() {
                return Some(best);
            }
            let p = posa_path(g, open_cycle(&best, j, w), budget);
            if let Some(c) = best_cycle_from_path(g, &p) {
                if c.len() > best.len() {
                    best = c;
                    grown = true;
                    break;
                }
            }
        }
        if !grown {
            return Some(best);
        }
    }
}

/// Exact search for a cycle with at least `min_len` vertices.
pub(crate) fn cycle_at_least(g: &Graph, min_len: usize, budget: &mut Budget) -> Outcome<Vec<usize>> {
    let n = g.n();
    let min_len = min_len.max(3);
    for root in 0..n {
        if n - root < min_len {
            break;
        }
        let mut on = vec![false; n];
        on[root] = true;
        let mut path = vec![root];
        match cycle_dfs(g, root, min_len, &mut path, &mut on, budget) {
            Outcome::Found(c) => return Outcome::Found(c),
            Outcome::OutOfBudget => return Outcome::OutOfBudget,
            Outcome::NotFound => {}
        }
    }
    Outcome::NotFound
}

/// Vertices reachable from `from` through vertices above `floor` that are not on the path.
fn reach_count(g: &Graph, from: usize, floor: usize, on: &[bool], goal: impl Fn(usize) -> bool) -> (usize, bool) {
    let mut seen = vec![false; g.n()];
    let mut q = VecDeque::from([from]);
    seen[from] = true;
    let mut count = 0;
    let mut hit = goal(from);
    while let Some(v) = q.pop_front() {
        for &u in g.neighbors(v) {
            if u > floor && !on[u] && !seen[u] {
                seen[u] = true;
                count += 1;
                hit |= goal(u);
                q.push_back(u);
            }
        }
    }
    (count, hit)
}

fn cycle_dfs(g: &Graph, root: usize, min_len: usize, path: &mut Vec<usize>, on: &mut [bool], budget: &mut Budget) -> Outcome<Vec<usize>> {
    if !budget.tick() {
        return Outcome::OutOfBudget;
    }
    let end = *path.last().unwrap();
    if path.len() >= min_len && g.has_edge(end, root) {
        return Outcome::Found(path.clone());
    }
    let (extra, can_close) = reach_count(g, end, root, on, |v| g.has_edge(v, root));
    if !can_close || path.len() + extra < min_len {
        return Outcome::NotFound;
    }
    for &u in g.neighbors(end) {
        if u <= root || on[u] {
            continue;
        }
        on[u] = true;
        path.push(u);
        let r = cycle_dfs(g, root, min_len, path, on, budget);
        path.pop();
        on[u] = false;
        if !matches!(r, Outcome::NotFound) {
            return r;
        }
    }
    Outcome::NotFound
}

/// Exact search for an s–t path with at least `min_vertices` vertices.
pub(crate) fn st_path_exact(g: &Graph, s: usize, t: usize, min_vertices: usize, budget: &mut Budget) -> Outcome<Vec<usize>> {
    let mut on = vec![false; g.n()];
    on[s] = true;
    let mut path = vec![s];
    st_dfs(g, t, min_vertices, &mut path, &mut on, budget)
}

fn st_dfs(g: &Graph, t: usize, min_vertices: usize, path: &mut Vec<usize>, on: &mut [bool], budget: &mut Budget) -> Outcome<Vec<usize>> {
    if !budget.tick() {
        return Outcome::OutOfBudget;
    }
    let end = *path.last().unwrap();
    if end == t {
        return if path.len() >= min_vertices { Outcome::Found(path.clone()) } else { Outcome::NotFound };
    }
    // t counts among the reachable vertices
    let (extra, reaches_t) = reach_count_all(g, end, on, t);
    if !reaches_t || path.len() + extra < min_vertices {
        return Outcome::NotFound;
    }
    for &u in g.neighbors(end) {
        if on[u] {
            continue;
        }
        on[u] = true;
        path.push(u);
        let r = st_dfs(g, t, min_vertices, path, on, budget);
        path.pop();
        on[u] = false;
        if !matches!(r, Outcome::NotFound) {
            return r;
        }
    }
    Outcome::NotFound
}

/// Reachable off-path vertices from `from`, not passing through `t`, and whether `t` is reached.
fn reach_count_all(g: &Graph, from: usize, on: &[bool], t: usize) -> (usize, bool) {
    let mut seen = vec![false; g.n()];
    seen[from] = true;
    let mut q = VecDeque::from([from]);
    let mut count = 0;
    let mut hit = false;
    while let Some(v) = q.pop_front() {
        for &u in g.neighbors(v) {
            if on[u] || seen[u] {
                continue;
            }
            seen[u] = true;
            count += 1;
            if u == t {
                hit = true;
            } else {
                q.push_back(u);
            }
        }
    }
    (count, hit)
}

/// Shortest s–t path avoiding `blocked`.
pub(crate) fn bfs_path(g: &Graph, s: usize, t: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    prev[s] = s;
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        if v == t {
            let mut path = vec![t];
            let mut x = t;
            while x != s {
                x = prev[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for &u in g.neighbors(v) {
            if prev[u] == usize::MAX && (!blocked[u] || u == t) {
                prev[u] = v;
                q.push_back(u);
            }
        }
    }
    None
}
