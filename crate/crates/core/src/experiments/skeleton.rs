use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::adjacency::adjacent_lineages;
use crate::cycle::{decode_tour, Lineage, Node, Tour};
use crate::error::{PedigreeError, Result};

/// Largest `n` enumerated without an explicit override.
pub const MAX_SKELETON_N: usize = 8;

/// Degree statistics of the graph of the Pedigree polytope on `n` cities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SkeletonReport {
    pub n: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// degree -> number of vertices with that degree
    pub degree_histogram: BTreeMap<usize, usize>,
    pub is_complete: bool,
    pub is_regular: bool,
    pub density: f64,
    /// Pairs whose verdict depends on which tour is called A. Always 0 for a
    /// correct implementation.
    pub asymmetric_pairs: usize,
    #[serde(skip)]
    pub tours: Vec<Tour>,
    /// `degrees[i]` belongs to `tours[i]`.
    #[serde(skip)]
    pub degrees: Vec<usize>,
}

/// All `(n - 1)! / 2` canonical tours on `[n]`, sorted.
pub fn canonical_tours(n: usize) -> Vec<Tour> {
    (2..=n as u32)
        .permutations(n - 1)
        .filter(|p| p.iter().position(|&v| v == 2) < p.iter().position(|&v| v == 3))
        .map(|p| {
            let order = std::iter::once(1).chain(p).map(Node::raw).collect();
            Tour::from_canonical_unchecked(order)
        })
        .collect()
}

/// Tests every pair of tours on `[n]` for adjacency, in both orders.
/// `n > 8` is refused unless `allow_large` is set.
pub fn enumerate_skeleton(n: usize, allow_large: bool) -> Result<SkeletonReport> {
    if n < 4 || (n > MAX_SKELETON_N && !allow_large) {
        return Err(PedigreeError::OutOfRange {
            what: "n",
            value: n,
            range: "4..=8 (larger needs the override)",
        });
    }
    let tours = canonical_tours(n);
    let lineages: Vec<Lineage> = tours.iter().map(|t| Lineage::from_history(&decode_tour(t))).collect();
    let v = tours.len();

    // row i: neighbours j > i, plus the number of order-dependent verdicts
    let rows: Vec<(Vec<u32>, usize)> = (0..v)
        .into_par_iter()
        .map(|i| {
            let mut nbrs = Vec::new();
            let mut asym = 0;
            for j in i + 1..v {
                let ab = adjacent_lineages(&lineages[i], &lineages[j], n).map(|a| a.adjacent);
                let ba = adjacent_lineages(&lineages[j], &lineages[i], n).map(|a| a.adjacent);
                let (ab, ba) = (ab?, ba?);
                asym += usize::from(ab != ba);
                if ab {
                    nbrs.push(j as u32);
                }
            }
            Ok((nbrs, asym))
        })
        .collect::<Result<_>>()?;

    let mut degrees = vec![0usize; v];
    let mut edge_count = 0;
    let mut asymmetric_pairs = 0;
    for (i, (nbrs, asym)) in rows.iter().enumerate() {
        asymmetric_pairs += asym;
        edge_count += nbrs.len();
        degrees[i] += nbrs.len();
        for &j in nbrs {
            degrees[j as usize] += 1;
        }
    }
    let mut degree_histogram = BTreeMap::new();
    for &d in &degrees {
        *degree_histogram.entry(d).or_insert(0) += 1;
    }
    let min_degree = degrees.iter().copied().min().unwrap_or(0);
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let pairs = v * (v - 1) / 2;
    Ok(SkeletonReport {
        n,
        vertex_count: v,
        edge_count,
        min_degree,
        max_degree,
        degree_histogram,
        is_complete: edge_count == pairs,
        is_regular: min_degree == max_degree,
        density: if pairs == 0 { 1.0 } else { edge_count as f64 / pairs as f64 },
        asymmetric_pairs,
        tours,
        degrees,
    })
}
