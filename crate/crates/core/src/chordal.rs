//! Chordality via lexicographic breadth-first search, maximal cliques of
//! chordal graphs, and leaf orders of their clique complexes.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Lexicographic BFS visit order. Among unvisited vertices the one with the
/// lexicographically largest label is taken next, ties to the smallest
/// index.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let next = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited[next] = true;
        order.push(next);
        for &u in g.neighbors(next) {
            if !visited[u] {
                labels[u].push(n - step);
            }
        }
    }
    order
}

/// Whether `order` is a perfect elimination ordering: for each vertex, its
/// neighbours later in the order form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut position = vec![usize::MAX; n];
    for (k, &v) in order.iter().enumerate() {
        position[v] = k;
    }
    if position.contains(&usize::MAX) {
        return false;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| position[u] > position[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&u| position[u]) else {
            return true;
        };
        later.iter().all(|&u| u == parent || g.has_edge(parent, u))
    })
}

/// A perfect elimination ordering (reverse LexBFS order) when `g` is
/// chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let mut order = lex_bfs(g);
    order.reverse();
    is_perfect_elimination_order(g, &order).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

/// Maximal cliques of a chordal graph, each sorted, in lexicographic order.
pub fn maximal_cliques(g: &Graph, peo: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut position = vec![0; n];
    for (k, &v) in peo.iter().enumerate() {
        position[v] = k;
    }
    let mut candidates: Vec<Vec<usize>> = peo
        .iter()
        .map(|&v| {
            let mut clique: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| position[u] > position[v])
                .collect();
            clique.push(v);
            clique.sort_unstable();
            clique
        })
        .collect();
    candidates.sort();
    candidates.dedup();
    let is_subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    let maximal: Vec<Vec<usize>> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| d.len() > c.len() && is_subset(c, d))
        })
        .cloned()
        .collect();
    maximal
}

/// A leaf order of the facets, with each facet's branch (`None` for the
/// first). Built from a maximum-weight spanning tree of the facet
/// intersection graph, visited breadth-first from facet 0.
///
/// For clique complexes of chordal graphs the spanning tree is a clique
/// tree, so every earlier facet meets the current one inside its parent.
pub fn leaf_order(facets: &[Vec<usize>]) -> Vec<(usize, Option<usize>)> {
    let s = facets.len();
    if s == 0 {
        return Vec::new();
    }
    let overlap = |i: usize, j: usize| {
        facets[i]
            .iter()
            .filter(|x| facets[j].binary_search(x).is_ok())
            .count()
    };
    // Prim's algorithm, maximising overlap; ties to the smaller index.
    let mut in_tree = vec![false; s];
    let mut best: Vec<Option<(usize, usize)>> = vec![None; s];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); s];
    in_tree[0] = true;
    for (j, b) in best.iter_mut().enumerate().skip(1) {
        *b = Some((overlap(0, j), 0));
    }
    for _ in 1..s {
        let next = (0..s)
            .filter(|&j| !in_tree[j])
            .max_by(|&a, &b| {
                let (wa, _) = best[a].unwrap();
                let (wb, _) = best[b].unwrap();
                wa.cmp(&wb).then(b.cmp(&a))
            })
            .unwrap();
        in_tree[next] = true;
        let (_, parent) = best[next].unwrap();
        children[parent].push(next);
        for j in 0..s {
            if !in_tree[j] {
                let w = overlap(next, j);
                if w > best[j].unwrap().0 {
                    best[j] = Some((w, next));
                }
            }
        }
    }
    let mut order = Vec::with_capacity(s);
    let mut queue = VecDeque::from([(0usize, None)]);
    while let Some((f, parent)) = queue.pop_front() {
        order.push((f, parent));
        let mut kids = children[f].clone();
        kids.sort_unstable();
        queue.extend(kids.into_iter().map(|c| (c, Some(f))));
    }
    order
}

/// Checks the leaf condition at every step: facet `F_i` meets each earlier
/// facet inside `F_i ∩ branch`.
pub fn is_leaf_order(facets: &[Vec<usize>], order: &[(usize, Option<usize>)]) -> bool {
    let contains = |set: &[usize], x: &usize| set.binary_search(x).is_ok();
    order.iter().enumerate().all(|(step, &(f, branch))| {
        let Some(branch) = branch else {
            return step == 0;
        };
        let earlier: Vec<usize> = order[..step].iter().map(|&(h, _)| h).collect();
        earlier.contains(&branch)
            && earlier.iter().all(|&h| {
                facets[h]
                    .iter()
                    .filter(|x| contains(&facets[f], x))
                    .all(|x| contains(&facets[branch], x))
            })
    })
}
