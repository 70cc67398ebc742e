use super::graph::VcInstance;

/// A vertex-cover instance normalised for the election construction:
/// vertex count a multiple of 3 and above `3k + 6`, no isolated vertices,
/// budget at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedVcInstance {
    pub instance: VcInstance,
    /// For each vertex of `instance`, the original vertex it came from, or
    /// `None` for padding.
    pub origin: Vec<Option<usize>>,
    /// Leaf counts of the disjoint stars appended, each adding 1 to the
    /// minimum cover and to the budget.
    pub stars: Vec<usize>,
    /// Isolated vertices dropped from the original graph.
    pub isolated_removed: usize,
}

impl RestrictedVcInstance {
    /// How much the budget (and the minimum cover) grew.
    pub fn budget_shift(&self) -> usize {
        self.stars.len()
    }

    pub fn budget(&self) -> usize {
        self.instance.budget
    }

    /// Checks the three structural conditions plus `k ≥ 2`.
    pub fn violations(instance: &VcInstance) -> Vec<String> {
        let n = instance.num_vertices();
        let k = instance.budget;
        let mut out = Vec::new();
        if n % 3 != 0 {
            out.push(format!("{n} vertices is not a multiple of 3"));
        }
        if n <= 3 * k + 6 {
            out.push(format!("{n} vertices is not above 3k+6 = {}", 3 * k + 6));
        }
        if let Some(v) = instance.degrees().iter().position(|&d| d == 0) {
            out.push(format!("vertex {} is isolated", v + 1));
        }
        if k < 2 {
            out.push(format!("budget {k} is below 2"));
        }
        out
    }
}

/// Drops isolated vertices, then appends disjoint stars: single-edge stars
/// until the budget reaches 2, and one final star sized so the vertex
/// count is the smallest multiple of 3 above `3k' + 6`. Each star has cover
/// number 1, so `cover(g) ≤ k ⟺ cover(result) ≤ k'`.
pub fn restrict(g: &VcInstance) -> RestrictedVcInstance {
    let deg = g.degrees();
    let kept: Vec<usize> = (0..g.num_vertices()).filter(|&v| deg[v] > 0).collect();
    let mut index = vec![usize::MAX; g.num_vertices()];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (index[u], index[v])).collect();
    let mut origin: Vec<Option<usize>> = kept.iter().map(|&v| Some(v)).collect();

    let star_count = 1.max(2usize.saturating_sub(g.budget));
    let budget = g.budget + star_count;
    let mut stars = Vec::new();
    for _ in 1..star_count {
        let centre = origin.len();
        edges.push((centre, centre + 1));
        origin.extend([None, None]);
        stars.push(1);
    }
    let before = origin.len();
    let mut target = before + 2;
    while target % 3 != 0 || target <= 3 * budget + 6 {
        target += 1;
    }
    let leaves = target - before - 1;
    let centre = origin.len();
    for leaf in 1..=leaves {
        edges.push((centre, centre + leaf));
    }
    origin.extend(std::iter::repeat_n(None, leaves + 1));
    stars.push(leaves);

    let instance = VcInstance::new(origin.len(), edges, budget).expect("padding keeps the graph simple");
    RestrictedVcInstance {
        instance,
        origin,
        stars,
        isolated_removed: g.num_vertices() - kept.len(),
    }
}
