//! Brute-force oracles shared by the integration tests. They only use the
//! graph's adjacency and vertex ids, never the library's cycle search or
//! cell construction.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use dtopo::jordan::NodeKey;
use dtopo::{CellComplex, Edge, Graph, Vertex, VertexCycle};

pub type Bits = u32;

fn adjacency_masks(g: &Graph) -> Vec<Bits> {
    assert!(g.vertex_count() <= 24, "oracle is exponential");
    g.vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0, |m, w| m | (1 << w.index()))
        })
        .collect()
}

pub fn members(mask: Bits) -> Vec<Vertex> {
    (0..32)
        .filter(|i| mask >> i & 1 == 1)
        .map(Vertex::from_index)
        .collect()
}

/// Vertex sets whose induced subgraph is a single cycle.
pub fn chordless_cycle_sets(g: &Graph) -> BTreeSet<Bits> {
    let adj = adjacency_masks(g);
    let n = g.vertex_count();
    let mut out = BTreeSet::new();
    for mask in 1..(1u32 << n) {
        if mask.count_ones() < 3 {
            continue;
        }
        let all_degree_two = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .all(|i| (adj[i] & mask).count_ones() == 2);
        if all_degree_two && connected(&adj, mask) {
            out.insert(mask);
        }
    }
    out
}

fn connected(adj: &[Bits], mask: Bits) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut seen: Bits = 1 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let i = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[i] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == mask
}

/// The default surface-cells: all shortest chordless cycles, then for every
/// vertex still uncovered all shortest chordless cycles through it.
pub fn default_cells_oracle(g: &Graph) -> BTreeSet<Bits> {
    let cycles = chordless_cycle_sets(g);
    let Some(girth) = cycles.iter().map(|m| m.count_ones()).min() else {
        return BTreeSet::new();
    };
    let mut chosen: BTreeSet<Bits> = cycles.iter().copied().filter(|m| m.count_ones() == girth).collect();
    let covered = chosen.iter().fold(0, |a, m| a | m);
    for v in 0..g.vertex_count() {
        if covered >> v & 1 == 1 {
            continue;
        }
        let through: Vec<Bits> = cycles.iter().copied().filter(|m| m >> v & 1 == 1).collect();
        if let Some(best) = through.iter().map(|m| m.count_ones()).min() {
            chosen.extend(through.into_iter().filter(|m| m.count_ones() == best));
        }
    }
    chosen
}

/// Number of distinct simple cycles (as undirected cyclic sequences) on
/// each vertex set, via Hamiltonian-cycle counting by subset dynamic
/// programming.
pub fn simple_cycle_counts(g: &Graph, max_len: usize) -> BTreeMap<Bits, u64> {
    let adj = adjacency_masks(g);
    let n = g.vertex_count();
    let mut out = BTreeMap::new();
    for s in 0..n {
        // paths starting at s using only vertices > s
        let mut dp: BTreeMap<(Bits, usize), u64> = BTreeMap::new();
        dp.insert((1 << s, s), 1);
        let mut layer: Vec<(Bits, usize)> = vec![(1 << s, s)];
        for _ in 1..max_len {
            let mut next = Vec::new();
            for &(mask, end) in &layer {
                let ways = dp[&(mask, end)];
                let mut cand = adj[end] & !mask & !((1 << (s + 1)) - 1);
                while cand != 0 {
                    let w = cand.trailing_zeros() as usize;
                    cand &= cand - 1;
                    let key = (mask | 1 << w, w);
                    let slot = dp.entry(key).or_insert(0);
                    if *slot == 0 {
                        next.push(key);
                    }
                    *slot += ways;
                }
            }
            layer = next;
        }
        for (&(mask, end), &ways) in &dp {
            if mask.count_ones() >= 3 && adj[end] >> s & 1 == 1 {
                *out.entry(mask).or_insert(0) += ways;
            }
        }
    }
    // each cycle was counted once per direction
    out.values_mut().for_each(|c| *c /= 2);
    out
}

pub fn mask_of(vs: impl IntoIterator<Item = Vertex>) -> Bits {
    vs.into_iter().fold(0, |m, v| m | 1 << v.index())
}

/// Components of `keep` under the given adjacency lists, found by
/// union-find.
pub fn union_find_components<K: Ord + Copy>(keep: &[K], links: &[(K, K)]) -> BTreeSet<BTreeSet<K>> {
    let index: BTreeMap<K, usize> = keep.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let mut parent: Vec<usize> = (0..keep.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (a, b) in links {
        if let (Some(&i), Some(&j)) = (index.get(a), index.get(b)) {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<K>> = BTreeMap::new();
    for (i, &k) in keep.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().insert(k);
    }
    groups.into_values().collect()
}

/// Components after removing a curve, computed from scratch with
/// union-find over explicitly listed links.
pub fn union_find_separation(cx: &CellComplex, curve: &VertexCycle) -> BTreeSet<BTreeSet<NodeKey>> {
    let g = cx.graph();
    let on_curve = curve.vertex_set();
    let curve_edges: BTreeSet<Edge> = curve.edges().into_iter().collect();
    let mut keep = Vec::new();
    let mut links = Vec::new();
    for v in g.vertices().filter(|v| !on_curve.contains(v)) {
        keep.push(NodeKey::Vertex(v));
    }
    for e in g.edges() {
        if !curve_edges.contains(&e) {
            keep.push(NodeKey::Edge(e));
        }
        links.push((NodeKey::Edge(e), NodeKey::Vertex(e.lo())));
        links.push((NodeKey::Edge(e), NodeKey::Vertex(e.hi())));
    }
    for id in cx.cell_ids() {
        keep.push(NodeKey::Cell(id));
        let t = cx.cell(id).travel();
        for (i, &v) in t.iter().enumerate() {
            links.push((NodeKey::Cell(id), NodeKey::Vertex(v)));
            links.push((NodeKey::Cell(id), NodeKey::Edge(Edge::new(v, t[(i + 1) % t.len()]))));
        }
    }
    union_find_components(&keep, &links)
}
