//! Superlevel-set persistence over Z/2.
//!
//! [`reduce`] is the production path: column reduction with clearing, run on
//! triangles first and then edges. [`reduce_naive`] is the textbook
//! left-to-right reduction on dense columns and exists to check it.
//! [`betti_at`] counts components and loops of a single superlevel slice
//! without any matrix algebra.

mod betti;
mod naive;
mod reduce;

use std::fmt::Write as _;

use crate::complex::{descending_bits, SimplexId};

pub use betti::betti_at;
pub use naive::reduce_naive;
pub use reduce::reduce;

/// A class born at `birth` while scanning downward and killed at `death`.
/// Essential classes never die and carry `death = -inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PersistencePair {
    pub dim: u8,
    pub birth: f64,
    pub death: f64,
    pub birth_simplex: SimplexId,
    pub death_simplex: Option<SimplexId>,
}

impl PersistencePair {
    pub fn lifespan(&self) -> f64 {
        self.birth - self.death
    }

    pub fn is_essential(&self) -> bool {
        self.death_simplex.is_none()
    }

    /// Alive in the superlevel set at height `t`.
    pub fn alive_at(&self, t: f64) -> bool {
        self.birth >= t && t > self.death
    }
}

/// Multiset of persistence pairs, kept in a canonical order so that equality
/// is multiset equality.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PersistenceDiagram {
    pairs: Vec<PersistencePair>,
}

impl PersistenceDiagram {
    pub fn new(mut pairs: Vec<PersistencePair>) -> Self {
        // Birth simplices are unique, so the key is total.
        pairs.sort_unstable_by_key(|p| {
            (
                p.dim,
                descending_bits(p.birth),
                descending_bits(p.death),
                p.birth_simplex,
                p.death_simplex,
            )
        });
        PersistenceDiagram { pairs }
    }

    pub fn pairs(&self) -> &[PersistencePair] {
        &self.pairs
    }

    pub fn in_dim(&self, dim: u8) -> impl Iterator<Item = &PersistencePair> {
        self.pairs.iter().filter(move |p| p.dim == dim)
    }

    pub fn essential(&self) -> impl Iterator<Item = &PersistencePair> {
        self.pairs.iter().filter(|p| p.is_essential())
    }

    pub fn finite(&self) -> impl Iterator<Item = &PersistencePair> {
        self.pairs.iter().filter(|p| !p.is_essential())
    }

    pub fn alive_at(&self, dim: u8, t: f64) -> usize {
        self.in_dim(dim).filter(|p| p.alive_at(t)).count()
    }

    /// `dim,birth,death,lifespan` rows; essential classes print `-inf`/`inf`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("dim,birth,death,lifespan\n");
        for p in &self.pairs {
            if p.is_essential() {
                let _ = writeln!(out, "{},{},-inf,inf", p.dim, p.birth);
            } else {
                let _ = writeln!(out, "{},{},{},{}", p.dim, p.birth, p.death, p.lifespan());
            }
        }
        out
    }
}

/// Finite H1 lifespans, longest first. Equal lifespans list the higher birth
/// first, then the earlier-indexed birth edge.
pub fn h1_lifespans(diagram: &PersistenceDiagram) -> Vec<f64> {
    let mut h1: Vec<&PersistencePair> = diagram.in_dim(1).filter(|p| !p.is_essential()).collect();
    h1.sort_by(|a, b| {
        b.lifespan()
            .total_cmp(&a.lifespan())
            .then(b.birth.total_cmp(&a.birth))
            .then(a.birth_simplex.cmp(&b.birth_simplex))
    });
    h1.into_iter().map(PersistencePair::lifespan).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(dim: u8, birth: f64, death: f64, id: u32) -> PersistencePair {
        PersistencePair {
            dim,
            birth,
            death,
            birth_simplex: SimplexId { dim, index: id },
            death_simplex: Some(SimplexId {
                dim: dim + 1,
                index: id,
            }),
        }
    }

    #[test]
    fn lifespans_sorted() {
        let d = PersistenceDiagram::new(vec![
            pair(1, 10.0, 0.0, 0),
            pair(1, 6.0, 5.0, 1),
            pair(0, 20.0, 3.0, 2),
        ]);
        assert_eq!(h1_lifespans(&d), vec![10.0, 1.0]);
        let d = PersistenceDiagram::new(vec![pair(0, 20.0, 3.0, 2)]);
        assert!(h1_lifespans(&d).is_empty());
    }

    #[test]
    fn lifespan_tie_prefers_higher_birth() {
        let a = pair(1, 9.0, 4.0, 0);
        let b = pair(1, 12.0, 7.0, 1);
        let d = PersistenceDiagram::new(vec![a, b]);
        let mut h1: Vec<_> = d.in_dim(1).copied().collect();
        h1.sort_by(|x, y| {
            y.lifespan()
                .total_cmp(&x.lifespan())
                .then(y.birth.total_cmp(&x.birth))
        });
        assert_eq!(h1[0].birth, 12.0);
        assert_eq!(h1_lifespans(&d), vec![5.0, 5.0]);
    }

    #[test]
    fn csv_marks_essential() {
        let mut e = pair(0, 8.0, f64::NEG_INFINITY, 0);
        e.death_simplex = None;
        let d = PersistenceDiagram::new(vec![e, pair(1, 10.0, 0.0, 1)]);
        assert_eq!(
            d.to_csv(),
            "dim,birth,death,lifespan\n0,8,-inf,inf\n1,10,0,10\n"
        );
    }
}
