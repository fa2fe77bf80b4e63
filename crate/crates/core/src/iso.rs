//! Canonical forms for small posets.
//!
//! Colour refinement on the cover graph (split by height, depth and the
//! colours of upper and lower covers until stable), then individualise one
//! vertex of the first non-singleton cell and recurse. Each discrete
//! colouring gives a relabelled cover list; the smallest one is the
//! canonical form. Two posets are isomorphic iff their forms are equal.

use crate::lattice::FinitePoset;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    size: usize,
    covers: Vec<(u32, u32)>,
}

impl CanonicalForm {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }
}

struct Graph {
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

pub fn canonical_form<L>(poset: &FinitePoset<L>) -> CanonicalForm {
    let m = poset.len();
    let graph = Graph {
        upper: (0..m).map(|i| poset.upper_covers(i).to_vec()).collect(),
        lower: (0..m).map(|i| poset.lower_covers(i).to_vec()).collect(),
    };

    // height from below, depth from above (indices are a linear extension)
    let mut height = vec![0usize; m];
    for x in 0..m {
        for &y in &graph.upper[x] {
            height[y] = height[y].max(height[x] + 1);
        }
    }
    let mut depth = vec![0usize; m];
    for x in (0..m).rev() {
        for &y in &graph.lower[x] {
            depth[y] = depth[y].max(depth[x] + 1);
        }
    }
    let initial: Vec<Vec<usize>> = (0..m)
        .map(|v| {
            vec![
                height[v],
                depth[v],
                graph.upper[v].len(),
                graph.lower[v].len(),
            ]
        })
        .collect();
    let colours = refine(&graph, renumber(&initial));

    let mut best: Option<Vec<(u32, u32)>> = None;
    search(&graph, colours, &mut best);
    CanonicalForm {
        size: m,
        covers: best.unwrap_or_default(),
    }
}

pub fn is_isomorphic<A, B>(a: &FinitePoset<A>, b: &FinitePoset<B>) -> bool {
    a.len() == b.len()
        && a.cover_edges().len() == b.cover_edges().len()
        && canonical_form(a) == canonical_form(b)
}

/// Dense colours `0..c` ordered by signature.
fn renumber<K: Ord + Clone>(signatures: &[K]) -> Vec<usize> {
    let mut distinct: Vec<K> = signatures.to_vec();
    distinct.sort();
    distinct.dedup();
    signatures
        .iter()
        .map(|s| distinct.binary_search(s).unwrap())
        .collect()
}

fn count_colours(colours: &[usize]) -> usize {
    colours.iter().max().map_or(0, |&c| c + 1)
}

fn refine(graph: &Graph, mut colours: Vec<usize>) -> Vec<usize> {
    loop {
        let before = count_colours(&colours);
        let signatures: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..colours.len())
            .map(|v| {
                let mut up: Vec<usize> = graph.upper[v].iter().map(|&u| colours[u]).collect();
                let mut down: Vec<usize> = graph.lower[v].iter().map(|&u| colours[u]).collect();
                up.sort_unstable();
                down.sort_unstable();
                (colours[v], up, down)
            })
            .collect();
        colours = renumber(&signatures);
        if count_colours(&colours) == before {
            return colours;
        }
    }
}

fn search(graph: &Graph, colours: Vec<usize>, best: &mut Option<Vec<(u32, u32)>>) {
    let m = colours.len();
    let c = count_colours(&colours);
    if c == m {
        let mut covers: Vec<(u32, u32)> = (0..m)
            .flat_map(|x| {
                let colours = &colours;
                graph.upper[x]
                    .iter()
                    .map(move |&y| (colours[x] as u32, colours[y] as u32))
            })
            .collect();
        covers.sort_unstable();
        if best.as_ref().is_none_or(|b| covers < *b) {
            *best = Some(covers);
        }
        return;
    }

    let mut sizes = vec![0usize; c];
    for &col in &colours {
        sizes[col] += 1;
    }
    let target = (0..c).find(|&col| sizes[col] > 1).unwrap();
    for v in (0..m).filter(|&v| colours[v] == target) {
        let split: Vec<usize> = colours
            .iter()
            .enumerate()
            .map(|(u, &col)| 2 * col + usize::from(col == target && u != v))
            .collect();
        search(graph, refine(graph, renumber(&split)), best);
    }
}
