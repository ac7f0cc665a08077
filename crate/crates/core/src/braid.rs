//! The Garside skeleton of the braid group `B_n`: simple elements as
//! permutations, the prefix lattice (meet, join, divisibility), the half
//! twist `Δ`, the complements `∂` and `∂⁻¹`, and the flip automorphism `τ`.
//!
//! Composition convention, shared by every module in this crate: words act
//! left to right, so the permutation of a product is the composition of the
//! factor permutations in word order. Concretely, `(s·t).perm(i) =
//! t.perm(s.perm(i))`. The canonical word of `Δ` in `B_3` under this
//! convention is `σ₁σ₂σ₁`, which is asserted in the tests below.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Bound above which exhaustive enumeration oracles refuse to run (n! growth).
pub const ORACLE_STRAND_BOUND: usize = 8;

/// Number of strands of a braid group. Always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StrandCount(usize);

impl StrandCount {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidStrandCount(n));
        }
        Ok(StrandCount(n))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// Atom indices `1..=n-1`.
    pub fn atom_indices(self) -> impl Iterator<Item = usize> {
        1..self.0
    }
}

impl std::fmt::Display for StrandCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One letter `σ_i` or `σ_i⁻¹` of a braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorLetter {
    index: usize,
    sign: i8,
}

impl GeneratorLetter {
    pub fn new(index: usize, sign: i8, n: StrandCount) -> Result<Self> {
        if index == 0 || index >= n.get() {
            return Err(Error::InvalidGeneratorIndex { index, n: n.get() });
        }
        Ok(GeneratorLetter {
            index,
            sign: if sign >= 0 { 1 } else { -1 },
        })
    }

    /// 1-based generator index.
    #[inline]
    pub fn index(self) -> usize {
        self.index
    }

    #[inline]
    pub fn sign(self) -> i8 {
        self.sign
    }

    /// Signed integer form: `i` for `σ_i`, `-i` for `σ_i⁻¹`.
    #[inline]
    pub fn signed(self) -> i64 {
        self.index as i64 * self.sign as i64
    }

    #[inline]
    pub fn inverse(self) -> Self {
        GeneratorLetter {
            index: self.index,
            sign: -self.sign,
        }
    }
}

/// A permutation braid: a positive left-divisor of `Δ`, stored as the
/// permutation it induces. `perm[i] = j` means the strand starting at
/// position `i` ends at position `j` (0-based internally; the public
/// 1-based table is available through [`SimpleElement::table`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleElement {
    perm: Vec<usize>,
}

impl SimpleElement {
    pub fn identity(n: StrandCount) -> Self {
        SimpleElement {
            perm: (0..n.get()).collect(),
        }
    }

    /// The half twist `Δ`, whose permutation is the order reversal.
    pub fn delta(n: StrandCount) -> Self {
        let n = n.get();
        SimpleElement {
            perm: (0..n).map(|i| n - 1 - i).collect(),
        }
    }

    /// The atom `σ_i` (1-based index).
    pub fn atom(n: StrandCount, index: usize) -> Result<Self> {
        if index == 0 || index >= n.get() {
            return Err(Error::InvalidGeneratorIndex { index, n: n.get() });
        }
        let mut perm: Vec<usize> = (0..n.get()).collect();
        perm.swap(index - 1, index);
        Ok(SimpleElement { perm })
    }

    /// Build directly from a 0-based permutation table. The table must be a
    /// bijection of `{0..n-1}` with `n ≥ 2`.
    pub fn from_permutation(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        StrandCount::new(n)?;
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidStrandCount(n));
            }
            seen[p] = true;
        }
        Ok(SimpleElement { perm })
    }

    #[inline]
    pub fn n(&self) -> StrandCount {
        StrandCount(self.perm.len())
    }

    /// 1-based permutation table: entry `i` is the position strand `i` travels to.
    pub fn table(&self) -> Vec<usize> {
        self.perm.iter().map(|&p| p + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.perm.len();
        self.perm.iter().enumerate().all(|(i, &p)| p == n - 1 - i)
    }

    /// Word length of the simple element: the number of inversions of its
    /// permutation (each pair of strands crosses at most once).
    pub fn word_len(&self) -> usize {
        let mut count = 0;
        for i in 0..self.perm.len() {
            for j in i + 1..self.perm.len() {
                if self.perm[i] > self.perm[j] {
                    count += 1;
                }
            }
        }
        count
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.perm.len() != other.perm.len() {
            return Err(Error::StrandMismatch {
                left: self.perm.len(),
                right: other.perm.len(),
            });
        }
        Ok(())
    }

    /// Permutation of the product `self · other` (word order, left to right).
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.perm.len(), other.perm.len());
        SimpleElement {
            perm: self.perm.iter().map(|&p| other.perm[p]).collect(),
        }
    }

    /// Inverse permutation. Only a permutation-level helper: the inverse of a
    /// nontrivial simple element is not itself simple.
    pub(crate) fn perm_inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        SimpleElement { perm: inv }
    }

    /// The reversal anti-automorphism on simple elements: the element whose
    /// canonical word is the reverse. Its permutation is the inverse.
    pub fn reverse(&self) -> Self {
        self.perm_inverse()
    }

    /// `σ_i ≼ self` (1-based): the strands at positions i, i+1 cross.
    #[inline]
    pub fn has_atom_prefix(&self, index: usize) -> bool {
        self.perm[index - 1] > self.perm[index]
    }

    /// `self = σ_i · rest`; returns `rest`. Caller must ensure the atom divides.
    fn strip_atom_prefix(&mut self, index: usize) {
        debug_assert!(self.has_atom_prefix(index));
        self.perm.swap(index - 1, index);
    }

    /// Greatest common prefix `self ∧ other`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        Ok(self.meet_unchecked(other))
    }

    pub(crate) fn meet_unchecked(&self, other: &Self) -> Self {
        let n = self.perm.len();
        let mut a = self.clone();
        let mut b = other.clone();
        // Greedy common-prefix extraction: repeatedly strip an atom dividing
        // both remainders. The common left-divisors of a pair form a lattice,
        // so the maximal element reached this way is the meet.
        let mut letters = Vec::new();
        'outer: loop {
            for i in 1..n {
                if a.has_atom_prefix(i) && b.has_atom_prefix(i) {
                    a.strip_atom_prefix(i);
                    b.strip_atom_prefix(i);
                    letters.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        let mut m = SimpleElement::identity(StrandCount(n));
        for i in letters {
            m.perm.iter_mut().for_each(|p| {
                if *p == i - 1 {
                    *p = i;
                } else if *p == i {
                    *p = i - 1;
                }
            });
        }
        m
    }

    /// Least common multiple `self ∨ other` in the prefix order. Computed by
    /// duality: `s ≼ w  ⟺  ∂(w)` right-divides `∂(s)`, so the join is the
    /// `∂`-preimage of the greatest common suffix of the right complements.
    /// The suffix gcd is in turn the word reversal of a meet.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        Ok(self.join_unchecked(other))
    }

    pub(crate) fn join_unchecked(&self, other: &Self) -> Self {
        let da = self.right_complement().reverse();
        let db = other.right_complement().reverse();
        da.meet_unchecked(&db).reverse().left_complement_inverse()
    }

    /// `∂(s) = s⁻¹Δ`, the simple element with `s · ∂(s) = Δ`.
    pub fn right_complement(&self) -> Self {
        let n = self.perm.len();
        let inv = self.perm_inverse();
        SimpleElement {
            perm: (0..n).map(|j| n - 1 - inv.perm[j]).collect(),
        }
    }

    /// `∂⁻¹(s) = Δs⁻¹`, the simple element with `∂⁻¹(s) · s = Δ`.
    pub fn left_complement(&self) -> Self {
        let n = self.perm.len();
        let inv = self.perm_inverse();
        SimpleElement {
            perm: (0..n).map(|i| inv.perm[n - 1 - i]).collect(),
        }
    }

    /// Inverse of [`Self::right_complement`] (i.e. `∂⁻¹` applied to `self`).
    fn left_complement_inverse(&self) -> Self {
        self.left_complement()
    }

    /// `τ^k(s) = Δ^{-k} s Δ^k`. Only the parity of `k` matters.
    pub fn tau_pow(&self, k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            return self.clone();
        }
        let n = self.perm.len();
        SimpleElement {
            perm: (0..n).map(|i| n - 1 - self.perm[n - 1 - i]).collect(),
        }
    }

    pub fn tau(&self) -> Self {
        self.tau_pow(1)
    }

    /// `t ≼ s` in the prefix order.
    pub fn is_prefix_of(&self, s: &Self) -> Result<bool> {
        self.check_same_n(s)?;
        Ok(&self.meet_unchecked(s) == self)
    }

    /// `self = t · rest` with `t ≼ self`; returns `rest` (as a permutation;
    /// guaranteed simple when `t` is a genuine prefix).
    pub(crate) fn left_quotient_by(&self, t: &Self) -> Self {
        let tinv = t.perm_inverse();
        SimpleElement {
            perm: (0..self.perm.len())
                .map(|j| self.perm[tinv.perm[j]])
                .collect(),
        }
    }

    /// Exact set of simple left-divisors of `self`. Enumeration oracle;
    /// refuses `n` above [`ORACLE_STRAND_BOUND`].
    pub fn left_divisors(&self) -> Result<Vec<SimpleElement>> {
        let n = self.perm.len();
        if n > ORACLE_STRAND_BOUND {
            return Err(Error::OracleBoundExceeded {
                n,
                bound: ORACLE_STRAND_BOUND,
            });
        }
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        // frontier of (divisor, remainder) pairs with divisor * remainder = self
        let mut frontier = vec![(SimpleElement::identity(StrandCount(n)), self.clone())];
        seen.insert(frontier[0].0.clone());
        out.push(frontier[0].0.clone());
        while let Some((d, rem)) = frontier.pop() {
            for i in 1..n {
                if rem.has_atom_prefix(i) {
                    let mut rem2 = rem.clone();
                    rem2.strip_atom_prefix(i);
                    let d2 = d.compose(&SimpleElement::atom(StrandCount(n), i).unwrap());
                    if seen.insert(d2.clone()) {
                        out.push(d2.clone());
                        frontier.push((d2, rem2));
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Canonical reduced word: place strands into their final positions from
    /// the highest position down. Deterministic; round-trips through
    /// [`simple_from_word`].
    pub fn canonical_word(&self) -> Vec<usize> {
        let n = self.perm.len();
        let mut word = Vec::with_capacity(self.word_len());
        // cur[pos] = strand currently at pos
        let mut cur: Vec<usize> = (0..n).collect();
        let mut pos_of: Vec<usize> = (0..n).collect();
        let inv = self.perm_inverse();
        for target in (0..n).rev() {
            let strand = inv.perm[target];
            let mut j = pos_of[strand];
            while j < target {
                word.push(j + 1); // σ_{j+1}, 1-based
                let other = cur[j + 1];
                cur.swap(j, j + 1);
                pos_of[strand] = j + 1;
                pos_of[other] = j;
                j += 1;
            }
        }
        word
    }
}

/// All simple elements of `B_n` (all permutations), in a deterministic order.
/// Enumeration oracle; refuses `n` above [`ORACLE_STRAND_BOUND`].
pub fn all_simple_elements(n: StrandCount) -> Result<Vec<SimpleElement>> {
    if n.get() > ORACLE_STRAND_BOUND {
        return Err(Error::OracleBoundExceeded {
            n: n.get(),
            bound: ORACLE_STRAND_BOUND,
        });
    }
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n.get()).collect();
    permute_rec(&mut perm, 0, &mut out);
    out.sort();
    Ok(out)
}

fn permute_rec(perm: &mut Vec<usize>, k: usize, out: &mut Vec<SimpleElement>) {
    if k == perm.len() {
        out.push(SimpleElement { perm: perm.clone() });
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_rec(perm, k + 1, out);
        perm.swap(k, i);
    }
}

/// The half twist `Δ` of `B_n`.
pub fn delta(n: StrandCount) -> SimpleElement {
    SimpleElement::delta(n)
}

/// Left-weighted test: `∂(s) ∧ t = 1`.
pub fn is_left_weighted(s: &SimpleElement, t: &SimpleElement) -> bool {
    s.right_complement().meet_unchecked(t).is_identity()
}

/// Right-weighted test for the pair `s·t`, via the reversal anti-automorphism.
pub fn is_right_weighted(s: &SimpleElement, t: &SimpleElement) -> bool {
    is_left_weighted(&t.reverse(), &s.reverse())
}

/// One local sliding: returns `(s·u, u⁻¹t)` with `u = ∂(s) ∧ t`. The output
/// pair is left-weighted and has the same product.
pub fn local_slide(s: &SimpleElement, t: &SimpleElement) -> (SimpleElement, SimpleElement) {
    let u = s.right_complement().meet_unchecked(t);
    if u.is_identity() {
        return (s.clone(), t.clone());
    }
    let s2 = s.compose(&u);
    let t2 = t.left_quotient_by(&u);
    (s2, t2)
}

/// Build a simple element from a positive word, rejecting words in which two
/// strands cross twice.
pub fn simple_from_word(n: StrandCount, letters: &[usize]) -> Result<SimpleElement> {
    let nn = n.get();
    let mut cur: Vec<usize> = (0..nn).collect();
    let mut crossed = std::collections::HashSet::new();
    for (pos, &i) in letters.iter().enumerate() {
        if i == 0 || i >= nn {
            return Err(Error::InvalidGeneratorIndex { index: i, n: nn });
        }
        let (u, v) = (cur[i - 1], cur[i]);
        let pair = (u.min(v), u.max(v));
        if !crossed.insert(pair) {
            return Err(Error::NotPermutationBraid { position: pos });
        }
        cur.swap(i - 1, i);
    }
    let mut perm = vec![0; nn];
    for (pos, &strand) in cur.iter().enumerate() {
        perm[strand] = pos;
    }
    Ok(SimpleElement { perm })
}
