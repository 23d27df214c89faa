use crate::complex::FilteredComplex;

/// Betti numbers `(beta0, beta1)` of the superlevel subcomplex at height `t`.
///
/// `beta0` comes from a breadth-first flood fill over the included edges.
/// The subcomplex sits inside a disk, so `beta2 = 0` and
/// `beta1 = beta0 - (V - E + F)`.
pub fn betti_at(complex: &FilteredComplex, t: f64) -> (usize, usize) {
    let heights = complex.vertex_heights();
    let inside: Vec<bool> = heights.iter().map(|&h| h >= t).collect();
    let v = inside.iter().filter(|&&b| b).count();

    let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); heights.len()];
    let mut e = 0usize;
    for edge in complex.edges() {
        if inside[edge[0] as usize] && inside[edge[1] as usize] {
            adjacency[edge[0] as usize].push(edge[1]);
            adjacency[edge[1] as usize].push(edge[0]);
            e += 1;
        }
    }
    let f = complex
        .triangles()
        .iter()
        .filter(|tri| tri.iter().all(|&x| inside[x as usize]))
        .count();

    let mut seen = vec![false; heights.len()];
    let mut components = 0usize;
    let mut queue = std::collections::VecDeque::new();
    for start in 0..heights.len() {
        if !inside[start] || seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for &y in &adjacency[x] {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push_back(y as usize);
                }
            }
        }
    }

    let euler = v as i64 - e as i64 + f as i64;
    let beta1 = components as i64 - euler;
    assert!(
        beta1 >= 0,
        "negative beta1: subcomplex does not embed in a disk"
    );
    (components, beta1 as usize)
}
