//! Compositions and the combinatorics built on them: descent and peak sets,
//! the odd-composition/peak-set bijection, Lyndon words and the
//! Chen-Fox-Lyndon factorization, and the wll order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// An ordered tuple of positive integers. The empty composition is the index
/// of the unit in both rings.
///
/// `Ord` is the wll order: weight first, then length, then lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        Ok(Composition(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `(1, 1, …, 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    pub fn require_odd(&self) -> Result<()> {
        if self.is_odd() {
            Ok(())
        } else {
            Err(Error::NotOdd(self.to_string()))
        }
    }

    /// Member of 𝒞_e: the last part is even.
    pub fn has_even_last_part(&self) -> bool {
        self.0.last().is_some_and(|p| p % 2 == 0)
    }

    /// gcd of the parts, 0 for the empty composition.
    pub fn gcd(&self) -> u32 {
        self.0.iter().fold(0, |g, &p| g.gcd(&p))
    }

    pub fn is_elementary(&self) -> bool {
        self.gcd() == 1
    }

    /// `(g, α/g)` with `g` the gcd of the parts.
    pub fn reduce_elementary(&self) -> (u32, Composition) {
        let g = self.gcd();
        if g == 0 {
            return (1, self.clone());
        }
        (g, Composition(self.0.iter().map(|p| p / g).collect()))
    }

    /// `k·α`.
    pub fn dilate(&self, k: u32) -> Composition {
        assert!(k > 0, "dilation factor must be positive");
        Composition(self.0.iter().map(|p| p * k).collect())
    }

    /// `α * β`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// `α^{*n}`.
    pub fn concat_power(&self, n: usize) -> Composition {
        Composition(self.0.repeat(n))
    }

    pub(crate) fn prepend(&self, part: u32) -> Composition {
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(part);
        parts.extend_from_slice(&self.0);
        Composition(parts)
    }

    pub fn descent_set(&self) -> DescentSet {
        let mut elements = Vec::with_capacity(self.len().saturating_sub(1));
        let mut acc = 0;
        for &p in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += p;
            elements.push(acc);
        }
        DescentSet { n: self.weight(), elements }
    }

    /// `P(α)`: descents in `[2, n-1]` whose predecessor is not a descent.
    pub fn peak_set(&self) -> PeakSet {
        let d = self.descent_set();
        let n = d.n;
        let elements = d
            .elements
            .iter()
            .copied()
            .filter(|&i| i >= 2 && i < n && !d.contains(i - 1))
            .collect();
        PeakSet { n, elements }
    }

    /// Refinement order: `self ≤ other` iff `D(other) ⊆ D(self)`.
    pub fn refines(&self, other: &Composition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let mine = self.descent_set();
        other.descent_set().elements.iter().all(|&i| mine.contains(i))
    }

    /// Every `β ≤ self` in the refinement order.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Vec::new()];
        for &p in &self.0 {
            let pieces = compositions(p);
            let mut next = Vec::with_capacity(out.len() * pieces.len());
            for prefix in &out {
                for piece in &pieces {
                    let mut v: Vec<u32> = prefix.clone();
                    v.extend_from_slice(piece.parts());
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(Composition).collect()
    }

    /// The hat word: each odd part `2i+1` becomes `i` twos followed by a one.
    pub fn hat(&self) -> Result<Composition> {
        self.require_odd()?;
        let mut parts = Vec::new();
        for &p in &self.0 {
            parts.extend(std::iter::repeat_n(2, (p / 2) as usize));
            parts.push(1);
        }
        Ok(Composition(parts))
    }

    /// `S_α`, the peak set paired with an odd composition: the partial sums of
    /// the hat word at which a part 2 ends.
    pub fn odd_to_peak(&self) -> Result<PeakSet> {
        let hat = self.hat()?;
        let mut acc = 0;
        let mut elements = Vec::new();
        for &p in hat.parts() {
            acc += p;
            if p == 2 {
                elements.push(acc);
            }
        }
        Ok(PeakSet { n: acc, elements })
    }

    /// `Λ(α)`: the odd composition whose peak set equals `P(α)`.
    pub fn peak_representative(&self) -> Composition {
        self.peak_set().to_odd_composition()
    }

    /// The block-sum map on compositions outside 𝒞_e: cut after every odd
    /// part and add up each block. `None` when the last part is even.
    pub fn theta_index(&self) -> Option<Composition> {
        if self.has_even_last_part() {
            return None;
        }
        let mut parts = Vec::new();
        let mut block = 0;
        for &p in &self.0 {
            block += p;
            if p % 2 == 1 {
                parts.push(block);
                block = 0;
            }
        }
        Some(Composition(parts))
    }

    /// Plain lexicographic order on words, a proper prefix being smaller.
    pub fn lex_cmp(&self, other: &Composition) -> Ordering {
        self.0.cmp(&other.0)
    }

    pub fn wll_cmp(&self, other: &Composition) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.0.cmp(&other.0))
    }

    /// Strictly smaller than each proper tail. Words of length at most one
    /// are Lyndon.
    pub fn is_lyndon(&self) -> bool {
        (1..self.len()).all(|i| self.0[..] < self.0[i..])
    }

    /// Chen-Fox-Lyndon factorization by Duval's scan, grouped into powers.
    pub fn cfl_factorize(&self) -> CflFactorization {
        let s = &self.0;
        let n = s.len();
        let mut words: Vec<&[u32]> = Vec::new();
        let mut i = 0;
        while i < n {
            let (mut j, mut k) = (i + 1, i);
            while j < n && s[k] <= s[j] {
                if s[k] < s[j] {
                    k = i;
                } else {
                    k += 1;
                }
                j += 1;
            }
            while i <= k {
                words.push(&s[i..i + j - k]);
                i += j - k;
            }
        }
        let mut factors: Vec<(Composition, usize)> = Vec::new();
        for w in words {
            match factors.last_mut() {
                Some((last, mult)) if last.0 == w => *mult += 1,
                _ => factors.push((Composition(w.to_vec()), 1)),
            }
        }
        CflFactorization { factors }
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.wll_cmp(other)
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse composition from {0:?}: expected a form like [1,4,2,3]")]
pub struct ParseCompositionError(pub String);

impl FromStr for Composition {
    type Err = ParseCompositionError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseCompositionError(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(err)?;
        if inner.trim().is_empty() {
            return Ok(Composition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| err()))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Composition::new(parts).map_err(|_| err())
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

/// `D(α) ⊆ [n-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DescentSet {
    pub n: u32,
    pub elements: Vec<u32>,
}

impl DescentSet {
    pub fn contains(&self, i: u32) -> bool {
        self.elements.binary_search(&i).is_ok()
    }
}

/// A subset of `[2, n-1]` with no two consecutive elements, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeakSet {
    n: u32,
    elements: Vec<u32>,
}

impl PeakSet {
    pub fn new(n: u32, mut elements: Vec<u32>) -> Result<Self> {
        elements.sort_unstable();
        let in_range = elements.iter().all(|&i| i >= 2 && i < n);
        let spaced = elements.windows(2).all(|w| w[1] > w[0] + 1);
        if !in_range || !spaced {
            return Err(Error::InvalidPeakSet { n, elements });
        }
        Ok(PeakSet { n, elements })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &PeakSet) -> bool {
        self.elements.iter().all(|&i| other.contains(i))
    }

    /// Every subset, each again a peak set of the same `n`.
    pub fn subsets(&self) -> Vec<PeakSet> {
        let k = self.elements.len();
        (0u64..1 << k)
            .map(|mask| PeakSet {
                n: self.n,
                elements: (0..k)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| self.elements[b])
                    .collect(),
            })
            .collect()
    }

    /// Inverse of [`Composition::odd_to_peak`]: rebuild the hat word
    /// `1^{p1-2} 2 1^{p2-p1-2} 2 … 1^{n-ps}` and read off the odd parts.
    pub fn to_odd_composition(&self) -> Composition {
        let mut hat = Vec::new();
        let mut prev = 0;
        for &p in &self.elements {
            hat.extend(std::iter::repeat_n(1, (p - prev - 2) as usize));
            hat.push(2);
            prev = p;
        }
        hat.extend(std::iter::repeat_n(1, (self.n - prev) as usize));
        let mut parts = Vec::new();
        let mut twos = 0;
        for h in hat {
            if h == 2 {
                twos += 1;
            } else {
                parts.push(2 * twos + 1);
                twos = 0;
            }
        }
        Composition(parts)
    }
}

impl fmt::Display for PeakSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}} ⊆ [{}]", self.n.saturating_sub(1))
    }
}

/// `γ₁^{*r₁} * … * γ_k^{*r_k}` with Lyndon `γ₁ > γ₂ > … > γ_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CflFactorization {
    pub factors: Vec<(Composition, usize)>,
}

impl CflFactorization {
    pub fn concat(&self) -> Composition {
        let mut parts = Vec::new();
        for (w, r) in &self.factors {
            for _ in 0..*r {
                parts.extend_from_slice(w.parts());
            }
        }
        Composition(parts)
    }
}

/// All compositions of `n`; `[∅]` for `n = 0`.
pub fn compositions(n: u32) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    // bit i of the mask set ⇔ i+1 is a descent
    (0u64..1 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 0;
            for i in 1..n {
                run += 1;
                if mask >> (i - 1) & 1 == 1 {
                    parts.push(run);
                    run = 0;
                }
            }
            parts.push(run + 1);
            Composition(parts)
        })
        .collect()
}

/// Compositions of `n` with odd parts, in descending wll order.
pub fn odd_compositions(n: u32) -> Vec<Composition> {
    fn go(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for p in (1..=rest).step_by(2) {
            prefix.push(p);
            go(rest - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// `f₀ = f₁ = 1`, `f_n = f_{n-1} + f_{n-2}`.
pub fn fibonacci(n: u32) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn ps(n: u32, e: &[u32]) -> PeakSet {
        PeakSet::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn descent_sets() {
        assert_eq!(c(&[2, 1]).descent_set(), DescentSet { n: 3, elements: vec![2] });
        assert_eq!(c(&[1, 4, 2, 3]).descent_set().elements, vec![1, 5, 7]);
        assert_eq!(c(&[1, 4, 2, 3]).descent_set().n, 10);
        assert!(c(&[6]).descent_set().elements.is_empty());
        assert_eq!(Composition::empty().descent_set(), DescentSet { n: 0, elements: vec![] });
    }

    #[test]
    fn peak_sets() {
        assert_eq!(c(&[1, 4, 2, 3]).peak_set(), ps(10, &[5, 7]));
        assert!(Composition::ones(7).peak_set().is_empty());
        assert_eq!(c(&[2, 1]).peak_set(), ps(3, &[2]));
        assert_eq!(c(&[3]).odd_to_peak().unwrap(), ps(3, &[2]));
    }

    #[test]
    fn hat_examples() {
        assert_eq!(c(&[3]).hat().unwrap(), c(&[2, 1]));
        assert_eq!(c(&[1, 5]).hat().unwrap(), c(&[1, 2, 2, 1]));
        assert_eq!(c(&[1, 1, 1, 5, 1, 1]).hat().unwrap(), c(&[1, 1, 1, 2, 2, 1, 1, 1]));
        assert!(matches!(c(&[2]).hat(), Err(Error::NotOdd(_))));
    }

    #[test]
    fn peak_representative_example() {
        let beta = c(&[1, 4, 2, 3]).peak_representative();
        assert_eq!(beta, c(&[1, 1, 1, 5, 1, 1]));
        assert_eq!(beta.descent_set().elements, vec![1, 2, 3, 8, 9]);
        assert_eq!(beta.odd_to_peak().unwrap(), ps(10, &[5, 7]));
        assert_eq!(ps(5, &[]).to_odd_composition(), Composition::ones(5));
    }

    #[test]
    fn peak_set_validation() {
        assert!(PeakSet::new(5, vec![1]).is_err());
        assert!(PeakSet::new(5, vec![2, 3]).is_err());
        assert!(PeakSet::new(5, vec![5]).is_err());
        assert!(PeakSet::new(5, vec![4, 2]).is_ok());
    }

    #[test]
    fn theta_index_blocks() {
        assert_eq!(c(&[1, 2, 2, 1, 2, 3]).theta_index(), Some(c(&[1, 5, 5])));
        assert_eq!(c(&[2, 1]).theta_index(), Some(c(&[3])));
        assert_eq!(c(&[1, 2]).theta_index(), None);
        assert_eq!(Composition::empty().theta_index(), Some(Composition::empty()));
        for n in 1..=7 {
            for a in odd_compositions(n) {
                assert_eq!(a.theta_index().as_ref(), Some(&a));
                assert_eq!(a.hat().unwrap().theta_index(), Some(a));
            }
        }
    }

    #[test]
    fn lyndon_examples() {
        assert!(c(&[3]).is_lyndon());
        assert!(c(&[1, 2, 1, 3]).is_lyndon());
        assert!(!c(&[2, 1, 3]).is_lyndon());
        assert!(!c(&[1, 1]).is_lyndon());
        assert!(Composition::empty().is_lyndon());
    }

    #[test]
    fn cfl_examples() {
        assert_eq!(c(&[3, 1]).cfl_factorize().factors, vec![(c(&[3]), 1), (c(&[1]), 1)]);
        assert_eq!(c(&[1, 3, 1, 3]).cfl_factorize().factors, vec![(c(&[1, 3]), 2)]);
        assert_eq!(c(&[5]).cfl_factorize().factors, vec![(c(&[5]), 1)]);
    }

    #[test]
    fn wll_examples() {
        assert_eq!(c(&[5]).wll_cmp(&c(&[1, 1, 2])), Ordering::Greater);
        assert_eq!(c(&[1, 1, 2]).wll_cmp(&c(&[2, 2])), Ordering::Greater);
        assert_eq!(c(&[2, 2]).wll_cmp(&c(&[1, 3])), Ordering::Greater);
        assert_eq!(c(&[1, 3]).wll_cmp(&c(&[1, 3])), Ordering::Equal);
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(c(&[3, 9]).reduce_elementary(), (3, c(&[1, 3])));
        assert_eq!(c(&[1, 3]).reduce_elementary(), (1, c(&[1, 3])));
        assert_eq!(c(&[5]).reduce_elementary(), (5, c(&[1])));
    }

    #[test]
    fn odd_enumeration() {
        assert_eq!(odd_compositions(4), vec![c(&[1, 1, 1, 1]), c(&[3, 1]), c(&[1, 3])]);
        assert_eq!(odd_compositions(1), vec![c(&[1])]);
        assert_eq!(odd_compositions(10).len(), 55);
        assert_eq!(fibonacci(9), 55);
    }

    #[test]
    fn refinements_of_composition() {
        let r = c(&[2, 1]).refinements();
        assert_eq!(r, vec![c(&[2, 1]), c(&[1, 1, 1])]);
        for b in &r {
            assert!(b.refines(&c(&[2, 1])));
        }
        assert_eq!(c(&[4]).refinements().len(), 8);
    }

    #[test]
    fn text_form() {
        assert_eq!(c(&[1, 4, 2, 3]).to_string(), "[1,4,2,3]");
        assert_eq!("[ 1, 4,2 ,3 ]".parse::<Composition>().unwrap(), c(&[1, 4, 2, 3]));
        assert_eq!("[]".parse::<Composition>().unwrap(), Composition::empty());
        assert!("[1,0]".parse::<Composition>().is_err());
        assert!("1,2".parse::<Composition>().is_err());
    }
}
