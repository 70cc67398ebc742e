use super::graph::VcInstance;

/// Minimum vertex cover size.
///
/// Branches on a vertex of maximum remaining degree: either it joins the
/// cover or all of its neighbours do. Degree-one vertices are resolved
/// without branching by taking their neighbour.
pub fn vc_exact(g: &VcInstance) -> usize {
    let n = g.num_vertices();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut removed = vec![false; n];
    let mut best = n;
    branch(&adj, &mut removed, 0, &mut best);
    best
}

fn degree(adj: &[Vec<usize>], removed: &[bool], v: usize) -> usize {
    adj[v].iter().filter(|&&u| !removed[u]).count()
}

fn branch(adj: &[Vec<usize>], removed: &mut Vec<bool>, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let alive: Vec<usize> = (0..adj.len()).filter(|&v| !removed[v]).collect();
    let degs: Vec<usize> = alive.iter().map(|&v| degree(adj, removed, v)).collect();
    let edges: usize = degs.iter().sum::<usize>() / 2;
    if edges == 0 {
        *best = size;
        return;
    }
    let max_deg = *degs.iter().max().expect("some vertex has an edge");
    // every cover vertex handles at most max_deg remaining edges
    if size + edges.div_ceil(max_deg) >= *best {
        return;
    }

    if let Some(i) = degs.iter().position(|&d| d == 1) {
        let leaf = alive[i];
        let nb = adj[leaf]
            .iter()
            .copied()
            .find(|&u| !removed[u])
            .expect("degree one");
        removed[nb] = true;
        branch(adj, removed, size + 1, best);
        removed[nb] = false;
        return;
    }

    let v = alive[degs.iter().position(|&d| d == max_deg).expect("max exists")];
    removed[v] = true;
    branch(adj, removed, size + 1, best);
    removed[v] = false;

    let nbs: Vec<usize> = adj[v].iter().copied().filter(|&u| !removed[u]).collect();
    for &u in &nbs {
        removed[u] = true;
    }
    removed[v] = true;
    branch(adj, removed, size + nbs.len(), best);
    removed[v] = false;
    for &u in &nbs {
        removed[u] = false;
    }
}
