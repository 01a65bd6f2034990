use super::bitset::BitSet;
use super::premises::Premises;

/// Closed relations over class ids.
#[derive(Debug, Clone)]
pub(crate) struct Closure {
    /// ancestors[c] is reflexive.
    pub ancestors: Vec<BitSet>,
    pub disjoint: Vec<BitSet>,
    pub unsat: BitSet,
}

/// Runs the rule set to fixpoint using only premises whose axiom passes
/// `enabled`.
///
/// Rules: transitivity of subsumption; covering elimination; disjointness
/// inherited down the hierarchy on both sides; a class that is disjoint with
/// one of its own ancestors (itself included) is unsatisfiable.
pub(crate) fn saturate(premises: &Premises, enabled: &dyn Fn(usize) -> bool) -> Closure {
    let n = premises.classes.len();
    let mut ancestors: Vec<BitSet> = (0..n)
        .map(|c| {
            let mut set = BitSet::new(n);
            set.insert(c);
            set
        })
        .collect();
    for &(sub, sup, ax) in &premises.subclass {
        if enabled(ax) {
            ancestors[sub].insert(sup);
        }
    }
    let disjoint_pairs: Vec<(usize, usize)> =
        premises.disjoint.iter().filter(|d| enabled(d.2)).map(|&(a, b, _)| (a, b)).collect();
    let coverings: Vec<_> = premises.coverings.iter().filter(|c| enabled(c.axiom)).collect();

    loop {
        close_transitively(&mut ancestors);

        let mut descendants: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for (c, anc) in ancestors.iter().enumerate() {
            for a in anc.iter() {
                descendants[a].insert(c);
            }
        }
        let mut disjoint: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for &(a, b) in &disjoint_pairs {
            for x in descendants[a].iter() {
                disjoint[x].union_with(&descendants[b]);
            }
            for y in descendants[b].iter() {
                disjoint[y].union_with(&descendants[a]);
            }
        }

        let mut changed = false;
        for c in 0..n {
            for covering in &coverings {
                if !ancestors[c].contains(covering.covered) {
                    continue;
                }
                let open: Vec<usize> =
                    covering.disjuncts.iter().copied().filter(|d| !disjoint[c].contains(*d)).collect();
                // with nothing open every disjunct follows, and the clash below marks c
                let forced = match open.len() {
                    0 => &covering.disjuncts[..],
                    1 => &open[..],
                    _ => &[],
                };
                for &d in forced {
                    changed |= ancestors[c].insert(d);
                }
            }
        }
        if !changed {
            let mut unsat = BitSet::new(n);
            for c in 0..n {
                if ancestors[c].intersects(&disjoint[c]) {
                    unsat.insert(c);
                }
            }
            return Closure { ancestors, disjoint, unsat };
        }
    }
}

fn close_transitively(ancestors: &mut [BitSet]) {
    loop {
        let mut changed = false;
        for c in 0..ancestors.len() {
            let direct: Vec<usize> = ancestors[c].iter().filter(|&a| a != c).collect();
            for a in direct {
                let (lhs, rhs) = if a < c {
                    let (lo, hi) = ancestors.split_at_mut(c);
                    (&mut hi[0], &lo[a])
                } else {
                    let (lo, hi) = ancestors.split_at_mut(a);
                    (&mut lo[c], &hi[0])
                };
                changed |= lhs.union_with(rhs);
            }
        }
        if !changed {
            return;
        }
    }
}
