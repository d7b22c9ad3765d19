use num_rational::Ratio;

use crate::cycle::{CycleEdge, InsertionHistory, LinkedCycle, Node};
use crate::error::{PedigreeError, Result};
use crate::graph::build;

/// Largest `n` for which full enumeration of Bob's histories is offered.
pub const MAX_EXACT_N: usize = 9;

/// Every insertion history through `n`, in lexicographic order of the tail
/// nodes chosen at each step. There are `(n - 1)! / 2` of them.
pub fn all_histories(n: usize) -> Vec<InsertionHistory> {
    fn go(cycle: &mut LinkedCycle, edges: &mut Vec<CycleEdge>, n: usize, out: &mut Vec<InsertionHistory>) {
        let m = cycle.len();
        if m == n {
            out.push(InsertionHistory::from_edges_unchecked(edges.clone()));
            return;
        }
        for tail in 1..=m as u32 {
            let e = cycle.edge_after(Node::raw(tail));
            cycle.insert_next(e).expect("edge taken from the cycle");
            edges.push(e);
            go(cycle, edges, n, out);
            edges.pop();
            cycle.contract_last();
        }
    }
    let mut out = Vec::new();
    if n >= 3 {
        go(&mut LinkedCycle::with_capacity(n), &mut Vec::new(), n, &mut out);
    }
    out
}

fn check_range(n: usize, alice: &InsertionHistory) -> Result<()> {
    if !(4..=MAX_EXACT_N).contains(&n) {
        return Err(PedigreeError::OutOfRange {
            what: "n",
            value: n,
            range: "4..=9",
        });
    }
    if alice.horizon() < n {
        return Err(PedigreeError::TimeOutOfRange {
            requested: n,
            horizon: alice.horizon(),
        });
    }
    Ok(())
}

fn average_over_bob(
    alice: &InsertionHistory,
    n: usize,
    mut value: impl FnMut(&InsertionHistory) -> Result<u64>,
) -> Result<Ratio<u64>> {
    check_range(n, alice)?;
    let bobs = all_histories(n);
    let mut total = 0;
    for hb in &bobs {
        total += value(hb)?;
    }
    Ok(Ratio::new(total, bobs.len() as u64))
}

/// Probability, over a uniformly random Bob, that node `n` enters `G_n` as
/// an isolated vertex while Alice plays the fixed history `alice`.
pub fn exact_isolated_probability(alice: &InsertionHistory, n: usize) -> Result<Ratio<u64>> {
    let newest = Node::raw(n as u32);
    average_over_bob(alice, n, |hb| {
        let g = build(alice, hb, n)?;
        Ok(u64::from(g.contains_vertex(newest) && g.degree(newest) == 0))
    })
}

/// Expected number of common cycle-edges `S_n` over a uniformly random Bob.
pub fn exact_common_edge_expectation(alice: &InsertionHistory, n: usize) -> Result<Ratio<u64>> {
    let a = alice.replay_linked(n)?;
    average_over_bob(alice, n, |hb| {
        let b = hb.replay_linked(n)?;
        Ok(b.edges_positive().filter(|&e| a.contains_edge(e)).count() as u64)
    })
}

/// Probability that `G_n` is connected over a uniformly random Bob.
pub fn exact_connectivity(alice: &InsertionHistory, n: usize) -> Result<Ratio<u64>> {
    average_over_bob(alice, n, |hb| Ok(u64::from(build(alice, hb, n)?.is_connected())))
}

/// Probability that `G_n` is connected when both players are uniform.
pub fn exact_connectivity_uniform(n: usize) -> Result<Ratio<u64>> {
    if !(4..=7).contains(&n) {
        return Err(PedigreeError::OutOfRange {
            what: "n",
            value: n,
            range: "4..=7",
        });
    }
    let all = all_histories(n);
    let mut connected = 0u64;
    for ha in &all {
        for hb in &all {
            connected += u64::from(build(ha, hb, n)?.is_connected());
        }
    }
    Ok(Ratio::new(connected, (all.len() * all.len()) as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{alice_example, e};

    #[test]
    fn history_counts() {
        assert_eq!(all_histories(3).len(), 1);
        assert_eq!(all_histories(4).len(), 3);
        assert_eq!(all_histories(6).len(), 60);
        let tours: std::collections::BTreeSet<_> = all_histories(6)
            .iter()
            .map(|h| crate::cycle::replay_history(h, 6).unwrap())
            .collect();
        assert_eq!(tours.len(), 60);
    }

    #[test]
    fn isolation_at_six_is_one_fifth() {
        let p = exact_isolated_probability(&alice_example(), 6).unwrap();
        assert_eq!(p, Ratio::new(1, 5));
    }

    #[test]
    fn common_edges_at_four() {
        let h = InsertionHistory::new(vec![e(1, 2)]).unwrap();
        assert_eq!(exact_common_edge_expectation(&h, 4).unwrap(), Ratio::new(8, 3));
    }

    #[test]
    fn uniform_connectivity_at_four() {
        // G_4 has at most one vertex
        assert_eq!(exact_connectivity_uniform(4).unwrap(), Ratio::new(1, 1));
    }

    #[test]
    fn range_is_enforced() {
        let h = alice_example();
        assert!(exact_isolated_probability(&h, 3).is_err());
        assert!(exact_isolated_probability(&h, 10).is_err());
        let short = InsertionHistory::new(vec![e(1, 2)]).unwrap();
        assert!(matches!(
            exact_isolated_probability(&short, 6),
            Err(PedigreeError::TimeOutOfRange { .. })
        ));
    }
}
