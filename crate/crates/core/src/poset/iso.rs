use crate::error::{Error, Result};
use crate::poset::cover::{CoverMode, CoverTable};
use crate::poset::Subposet;

/// Size limit for the backtracking isomorphism search.
pub const DEFAULT_ISO_LIMIT: usize = 12;

/// Decide whether a bijection `P -> Q` exists that maps induced covers onto
/// induced covers in both directions.
pub fn cover_preserving_isomorphic(p: &Subposet, q: &Subposet) -> Result<bool> {
    cover_preserving_isomorphic_with_limit(p, q, DEFAULT_ISO_LIMIT)
}

pub fn cover_preserving_isomorphic_with_limit(
    p: &Subposet,
    q: &Subposet,
    limit: usize,
) -> Result<bool> {
    for s in [p, q] {
        if s.len() > limit {
            return Err(Error::TooLarge {
                size: s.len(),
                limit,
            });
        }
    }
    if p.len() != q.len() {
        return Ok(false);
    }
    let a = Graph::new(p);
    let b = Graph::new(q);
    if a.edges != b.edges {
        return Ok(false);
    }
    let mut sig_a = a.signatures();
    let mut sig_b = b.signatures();
    sig_a.sort_unstable();
    sig_b.sort_unstable();
    if sig_a != sig_b {
        return Ok(false);
    }
    let mut image = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    Ok(extend(&a, &b, 0, &mut image, &mut used))
}

struct Graph {
    // adjacency[i][j]: i is covered by j
    adjacency: Vec<Vec<bool>>,
    out_deg: Vec<usize>,
    in_deg: Vec<usize>,
    edges: usize,
}

impl Graph {
    fn new(s: &Subposet) -> Self {
        let t = CoverTable::new(s, CoverMode::Induced);
        let m = t.points.len();
        let mut adjacency = vec![vec![false; m]; m];
        let mut edges = 0;
        for (i, ups) in t.up.iter().enumerate() {
            for &j in ups {
                adjacency[i][j] = true;
                edges += 1;
            }
        }
        Graph {
            adjacency,
            out_deg: t.up.iter().map(Vec::len).collect(),
            in_deg: t.down.iter().map(Vec::len).collect(),
            edges,
        }
    }

    fn len(&self) -> usize {
        self.adjacency.len()
    }

    fn signatures(&self) -> Vec<(usize, usize)> {
        self.in_deg.iter().copied().zip(self.out_deg.iter().copied()).collect()
    }
}

fn extend(a: &Graph, b: &Graph, next: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    if next == a.len() {
        return true;
    }
    for cand in 0..b.len() {
        if used[cand] || a.in_deg[next] != b.in_deg[cand] || a.out_deg[next] != b.out_deg[cand] {
            continue;
        }
        let consistent = (0..next).all(|prev| {
            let img = image[prev];
            a.adjacency[prev][next] == b.adjacency[img][cand]
                && a.adjacency[next][prev] == b.adjacency[cand][img]
        });
        if !consistent {
            continue;
        }
        image[next] = cand;
        used[cand] = true;
        if extend(a, b, next + 1, image, used) {
            return true;
        }
        used[cand] = false;
    }
    image[next] = usize::MAX;
    false
}
