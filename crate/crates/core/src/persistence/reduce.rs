use super::{PersistenceDiagram, PersistencePair};
use crate::complex::{filtration_order, FilteredComplex, FiltrationOrder, SimplexId};

const NONE: u32 = u32::MAX;

/// Sparse Z/2 column reduction with clearing for H1, union-find for H0.
///
/// Columns are ascending lists of row positions in the filtration order, so
/// the pivot is the last entry. Triangles are reduced first; every edge that
/// becomes a triangle pivot is a birth and is skipped afterwards. The
/// remaining edges are merged with union-find under the elder rule, which
/// yields the same pairs as reducing their columns.
pub fn reduce(complex: &FilteredComplex) -> PersistenceDiagram {
    let order = filtration_order(complex);
    let n = order.len();
    let mut pivot_col = vec![NONE; n];
    let mut low = vec![NONE; n];
    // Reduced triangle columns live back to back in one arena.
    let mut arena: Vec<u32> = Vec::new();
    let mut span: Vec<(u32, u32)> = vec![(0, 0); n];
    let mut col: Vec<u32> = Vec::new();
    let mut scratch: Vec<u32> = Vec::new();

    for (p, s) in order.simplices().iter().enumerate() {
        if s.dim != 2 {
            continue;
        }
        col.clear();
        col.extend(
            complex.triangle_edges()[s.index as usize]
                .iter()
                .map(|&e| order.position(SimplexId::edge(e)) as u32),
        );
        col.sort_unstable();
        while let Some(&l) = col.last() {
            let j = pivot_col[l as usize];
            if j == NONE {
                pivot_col[l as usize] = p as u32;
                low[p] = l;
                span[p] = (arena.len() as u32, (arena.len() + col.len()) as u32);
                arena.extend_from_slice(&col);
                break;
            }
            let (a, b) = span[j as usize];
            add_columns(&mut col, &arena[a as usize..b as usize], &mut scratch);
        }
    }
    drop((arena, span));

    // Components are keyed by vertex id; each root remembers the filtration
    // position of its oldest vertex.
    let nv = complex.count(0);
    let mut parent: Vec<u32> = (0..nv as u32).collect();
    let oldest: Vec<u32> = (0..nv as u32)
        .map(|v| order.position(SimplexId::vertex(v)) as u32)
        .collect();
    for (p, s) in order.simplices().iter().enumerate() {
        if s.dim != 1 || pivot_col[p] != NONE {
            continue;
        }
        let [u, v] = complex.edges()[s.index as usize];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            continue;
        }
        let (elder, younger) = if oldest[ru as usize] < oldest[rv as usize] {
            (ru, rv)
        } else {
            (rv, ru)
        };
        let dying = oldest[younger as usize];
        pivot_col[dying as usize] = p as u32;
        low[p] = dying;
        parent[younger as usize] = elder;
    }

    collect_pairs(complex, &order, &pivot_col, |p| {
        (low[p] != NONE).then_some(low[p] as usize)
    })
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

/// `col ^= other` on sorted index lists.
fn add_columns(col: &mut Vec<u32>, other: &[u32], scratch: &mut Vec<u32>) {
    scratch.clear();
    scratch.reserve(col.len() + other.len());
    let (mut a, mut b) = (0, 0);
    while a < col.len() && b < other.len() {
        match col[a].cmp(&other[b]) {
            std::cmp::Ordering::Less => {
                scratch.push(col[a]);
                a += 1;
            }
            std::cmp::Ordering::Greater => {
                scratch.push(other[b]);
                b += 1;
            }
            std::cmp::Ordering::Equal => {
                a += 1;
                b += 1;
            }
        }
    }
    scratch.extend_from_slice(&col[a..]);
    scratch.extend_from_slice(&other[b..]);
    std::mem::swap(col, scratch);
}

/// Reads pairs off a reduced matrix: every nonzero column kills the class
/// born at its pivot row; simplices that are neither pivots nor killers are
/// essential.
fn collect_pairs(
    complex: &FilteredComplex,
    order: &FiltrationOrder,
    pivot_col: &[u32],
    low_of: impl Fn(usize) -> Option<usize>,
) -> PersistenceDiagram {
    let simplices = order.simplices();
    let mut pairs = Vec::with_capacity(simplices.len() / 2 + 1);
    for (p, s) in simplices.iter().enumerate() {
        if let Some(low) = low_of(p) {
            let b = simplices[low];
            pairs.push(PersistencePair {
                dim: b.dim,
                birth: complex.height(b),
                death: complex.height(*s),
                birth_simplex: b,
                death_simplex: Some(*s),
            });
        } else if pivot_col[p] == NONE {
            pairs.push(PersistencePair {
                dim: s.dim,
                birth: complex.height(*s),
                death: f64::NEG_INFINITY,
                birth_simplex: *s,
                death_simplex: None,
            });
        }
    }
    PersistenceDiagram::new(pairs)
}
