use std::collections::HashSet;

use crate::error::GraphError;

/// A simple undirected graph with a vertex-cover budget. Vertices are
/// `0..num_vertices`; edges are stored with the smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcInstance {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    pub budget: usize,
}

impl VcInstance {
    pub fn new(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        budget: usize,
    ) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= num_vertices {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        n: num_vertices,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            list.push(e);
        }
        Ok(Self {
            num_vertices,
            edges: list,
            budget,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Indices of the edges incident to `v`, in edge order.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].0 == v || self.edges[i].1 == v)
            .collect()
    }

    pub fn is_cover(&self, cover: &[usize]) -> bool {
        let set: HashSet<usize> = cover.iter().copied().collect();
        self.edges
            .iter()
            .all(|(u, v)| set.contains(u) || set.contains(v))
    }

    pub fn is_connected(&self) -> bool {
        if self.num_vertices == 0 {
            return true;
        }
        let mut seen = vec![false; self.num_vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in &self.edges {
                let next = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Parses the DIMACS edge format: `c` comment lines, one
    /// `p edge <vertices> <edges>` header, then `e <u> <v>` lines with
    /// 1-based vertices. The budget is supplied separately.
    pub fn from_dimacs(text: &str, budget: usize) -> Result<Self, GraphError> {
        let parse_err = |line: usize, message: String| GraphError::Parse { line, message };
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let mut fields = raw.split_whitespace();
            match fields.next() {
                None | Some("c") => {}
                Some("p") => {
                    if header.is_some() {
                        return Err(parse_err(line, "second `p` line".into()));
                    }
                    let kind = fields.next();
                    if !matches!(kind, Some("edge") | Some("col")) {
                        return Err(parse_err(line, "expected `p edge <n> <m>`".into()));
                    }
                    let nums: Vec<usize> = fields
                        .map(str::parse)
                        .collect::<Result<_, _>>()
                        .map_err(|_| parse_err(line, "bad number in header".into()))?;
                    let [n, m] = nums[..] else {
                        return Err(parse_err(line, "expected `p edge <n> <m>`".into()));
                    };
                    header = Some((n, m));
                }
                Some("e") => {
                    let Some((n, _)) = header else {
                        return Err(parse_err(line, "edge before `p` line".into()));
                    };
                    let nums: Vec<usize> = fields
                        .map(str::parse)
                        .collect::<Result<_, _>>()
                        .map_err(|_| parse_err(line, "bad vertex number".into()))?;
                    let [u, v] = nums[..] else {
                        return Err(parse_err(line, "expected `e <u> <v>`".into()));
                    };
                    for x in [u, v] {
                        if x == 0 || x > n {
                            return Err(parse_err(line, format!("vertex {x} not in 1..={n}")));
                        }
                    }
                    edges.push((u - 1, v - 1));
                }
                Some(other) => {
                    return Err(parse_err(line, format!("unknown line type `{other}`")));
                }
            }
        }
        let (n, m) = header.ok_or_else(|| parse_err(1, "missing `p edge` line".into()))?;
        if edges.len() != m {
            return Err(parse_err(
                text.lines().count().max(1),
                format!("header announces {m} edges, found {}", edges.len()),
            ));
        }
        Self::new(n, edges, budget)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.num_vertices, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }
}
