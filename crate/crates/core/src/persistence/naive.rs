use std::collections::HashMap;

use super::{PersistenceDiagram, PersistencePair};
use crate::complex::{filtration_order, FilteredComplex, SimplexId};

/// Dense bit column over filtration positions.
#[derive(Clone)]
struct BitColumn(Vec<u64>);

impl BitColumn {
    fn zeros(n: usize) -> Self {
        BitColumn(vec![0; n.div_ceil(64)])
    }

    fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    fn xor(&mut self, other: &BitColumn) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    fn low(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .rev()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * 64 + 63 - w.leading_zeros() as usize)
    }
}

/// Unoptimized reference reduction: every column of the full boundary matrix,
/// left to right, adding any earlier column with the same pivot until the
/// pivot is unique. Faces are recomputed from vertex lists.
pub fn reduce_naive(complex: &FilteredComplex) -> PersistenceDiagram {
    let order = filtration_order(complex);
    let simplices = order.simplices();
    let n = simplices.len();

    let mut edge_index: HashMap<(u32, u32), u32> = HashMap::new();
    for (k, e) in complex.edges().iter().enumerate() {
        edge_index.insert((e[0], e[1]), k as u32);
    }
    let faces = |s: SimplexId| -> Vec<SimplexId> {
        let vs = complex.vertices(s);
        match vs.len() {
            2 => vs.iter().map(|&v| SimplexId::vertex(v)).collect(),
            3 => [(vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2])]
                .iter()
                .map(|key| SimplexId::edge(edge_index[key]))
                .collect(),
            _ => Vec::new(),
        }
    };

    let mut columns: Vec<BitColumn> = Vec::with_capacity(n);
    let mut lows: Vec<Option<usize>> = Vec::with_capacity(n);
    for &s in simplices {
        let mut col = BitColumn::zeros(n);
        for f in faces(s) {
            col.flip(order.position(f));
        }
        loop {
            let low = col.low();
            let Some(l) = low else { break };
            match lows.iter().position(|&other| other == Some(l)) {
                Some(j) => col.xor(&columns[j]),
                None => break,
            }
        }
        lows.push(col.low());
        columns.push(col);
    }

    let mut is_birth = vec![false; n];
    let mut pairs = Vec::new();
    for (p, low) in lows.iter().enumerate() {
        if let Some(l) = *low {
            is_birth[l] = true;
            let (b, d) = (simplices[l], simplices[p]);
            pairs.push(PersistencePair {
                dim: b.dim,
                birth: complex.height(b),
                death: complex.height(d),
                birth_simplex: b,
                death_simplex: Some(d),
            });
        }
    }
    for (p, low) in lows.iter().enumerate() {
        if low.is_none() && !is_birth[p] {
            let s = simplices[p];
            pairs.push(PersistencePair {
                dim: s.dim,
                birth: complex.height(s),
                death: f64::NEG_INFINITY,
                birth_simplex: s,
                death_simplex: None,
            });
        }
    }
    PersistenceDiagram::new(pairs)
}
