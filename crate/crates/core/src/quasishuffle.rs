//! The quasi-shuffle (stuffle) product on the free module over compositions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::composition::Composition;

/// Nonnegative integer combination of compositions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CompositionSum {
    terms: BTreeMap<Composition, u128>,
}

impl CompositionSum {
    pub fn single(c: Composition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(c, 1);
        CompositionSum { terms }
    }

    pub fn multiplicity(&self, c: &Composition) -> u128 {
        self.terms.get(c).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Composition, u128)> {
        self.terms.iter().map(|(c, m)| (c, *m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// wll-largest term.
    pub fn leading(&self) -> Option<(&Composition, u128)> {
        self.terms.iter().next_back().map(|(c, m)| (c, *m))
    }

    fn add(&mut self, c: Composition, m: u128) {
        let slot = self.terms.entry(c).or_insert(0);
        *slot = slot.checked_add(m).expect("quasi-shuffle multiplicity overflow");
    }
}

type Table = Arc<[(Composition, u128)]>;

fn cache() -> &'static RwLock<HashMap<(Composition, Composition), Table>> {
    static CACHE: OnceLock<RwLock<HashMap<(Composition, Composition), Table>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `α ⋈ β` as a flat, memoized term list.
pub(crate) fn qshuffle_terms(a: &Composition, b: &Composition) -> Table {
    let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    if let Some(hit) = cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let table: Table = compute(&key.0, &key.1).terms.into_iter().collect();
    cache().write().unwrap().insert(key, table.clone());
    table
}

/// Bottom-up over suffix pairs: `cell[i][j] = α[i..] ⋈ β[j..]`.
fn compute(a: &Composition, b: &Composition) -> CompositionSum {
    let (ap, bp) = (a.parts(), b.parts());
    let (r, s) = (ap.len(), bp.len());
    let suffix = |p: &[u32], i: usize| Composition::from_parts_unchecked(p[i..].to_vec());
    // rows i = r..=0, kept two at a time
    let mut below: Vec<CompositionSum> = (0..=s).map(|j| CompositionSum::single(suffix(bp, j))).collect();
    for i in (0..r).rev() {
        let mut row: Vec<CompositionSum> = vec![CompositionSum::default(); s + 1];
        row[s] = CompositionSum::single(suffix(ap, i));
        for j in (0..s).rev() {
            let mut cell = CompositionSum::default();
            for (c, m) in below[j].iter() {
                cell.add(c.prepend(ap[i]), m);
            }
            for (c, m) in row[j + 1].iter() {
                cell.add(c.prepend(bp[j]), m);
            }
            for (c, m) in below[j + 1].iter() {
                cell.add(c.prepend(ap[i] + bp[j]), m);
            }
            row[j] = cell;
        }
        below = row;
    }
    below.swap_remove(0)
}

/// `α ⋈ β` by the three-term recursion, with `α ⋈ ∅ = ∅ ⋈ α = α`.
pub fn qshuffle(a: &Composition, b: &Composition) -> CompositionSum {
    let mut out = CompositionSum::default();
    for (c, m) in qshuffle_terms(a, b).iter() {
        out.add(c.clone(), *m);
    }
    out
}

/// `α^{⋈n}`; the zeroth power is `∅`.
pub fn qshuffle_power(a: &Composition, n: usize) -> CompositionSum {
    let mut acc = CompositionSum::single(Composition::empty());
    for _ in 0..n {
        let mut next = CompositionSum::default();
        for (c, m) in acc.iter() {
            for (d, k) in qshuffle_terms(c, a).iter() {
                next.add(d.clone(), m.checked_mul(*k).expect("quasi-shuffle multiplicity overflow"));
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn sum(items: &[(&[u32], u128)]) -> CompositionSum {
        let mut out = CompositionSum::default();
        for (p, m) in items {
            out.add(c(p), *m);
        }
        out
    }

    #[test]
    fn base_case() {
        assert_eq!(qshuffle(&c(&[1]), &Composition::empty()), sum(&[(&[1], 1)]));
        assert_eq!(qshuffle(&Composition::empty(), &c(&[2, 1])), sum(&[(&[2, 1], 1)]));
    }

    #[test]
    fn small_products() {
        assert_eq!(qshuffle(&c(&[1]), &c(&[1])), sum(&[(&[1, 1], 2), (&[2], 1)]));
        assert_eq!(
            qshuffle(&c(&[1]), &c(&[1, 1])),
            sum(&[(&[1, 1, 1], 3), (&[1, 2], 1), (&[2, 1], 1)])
        );
        assert_eq!(
            qshuffle(&c(&[3]), &c(&[1])),
            sum(&[(&[3, 1], 1), (&[1, 3], 1), (&[4], 1)])
        );
    }

    #[test]
    fn powers() {
        assert_eq!(qshuffle_power(&c(&[1]), 2), sum(&[(&[1, 1], 2), (&[2], 1)]));
        assert_eq!(qshuffle_power(&c(&[1, 3]), 1), sum(&[(&[1, 3], 1)]));
        assert_eq!(qshuffle_power(&c(&[3]), 2), sum(&[(&[3, 3], 2), (&[6], 1)]));
        assert_eq!(qshuffle_power(&c(&[2]), 0), sum(&[(&[], 1)]));
    }
}
