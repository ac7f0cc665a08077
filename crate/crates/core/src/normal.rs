//! Left (and right) normal forms `Δ^p x₁⋯x_l`, the inverse formula, group
//! multiplication, and the structural accessors `ι`, `φ`, the preferred
//! prefix and rigidity.
//!
//! Equality of braids is componentwise equality of normal forms; the derived
//! `Eq`/`Hash` on [`NormalForm`] is the canonical key used throughout for
//! sets, maps and orbit detection.

use crate::braid::{
    delta, is_left_weighted, local_slide, GeneratorLetter, SimpleElement, StrandCount,
};
use crate::error::{Error, Result};

/// An arbitrary braid word (free word in the Artin generators).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    n: StrandCount,
    letters: Vec<GeneratorLetter>,
}

impl BraidWord {
    pub fn new(n: StrandCount, letters: Vec<GeneratorLetter>) -> Result<Self> {
        for l in &letters {
            if l.index() >= n.get() {
                return Err(Error::InvalidGeneratorIndex {
                    index: l.index(),
                    n: n.get(),
                });
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// Convenience constructor from signed 1-based indices (`-i` = `σ_i⁻¹`).
    pub fn from_signed(n: StrandCount, signed: &[i64]) -> Result<Self> {
        let mut letters = Vec::with_capacity(signed.len());
        for &v in signed {
            if v == 0 {
                return Err(Error::InvalidGeneratorIndex {
                    index: 0,
                    n: n.get(),
                });
            }
            let idx = v.unsigned_abs() as usize;
            letters.push(GeneratorLetter::new(idx, v.signum() as i8, n)?);
        }
        Ok(BraidWord { n, letters })
    }

    pub fn n(&self) -> StrandCount {
        self.n
    }

    pub fn letters(&self) -> &[GeneratorLetter] {
        &self.letters
    }

    /// The formal inverse: letters reversed with signs flipped.
    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }
}

/// The left normal form `Δ^p x₁⋯x_l` of a braid. Factors exclude `1` and `Δ`
/// and every adjacent pair is left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    n: StrandCount,
    inf: i64,
    factors: Vec<SimpleElement>,
}

/// Right normal form `y_m ⋯ y_1 Δ^q`: `factors[0]` is the leftmost factor
/// and every adjacent pair is right-weighted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightNormalForm {
    pub n: StrandCount,
    pub delta_pow: i64,
    pub factors: Vec<SimpleElement>,
}

impl RightNormalForm {
    /// The unique leftmost non-`Δ` factor, if any.
    pub fn leftmost_factor(&self) -> Option<&SimpleElement> {
        self.factors.first()
    }
}

impl NormalForm {
    pub fn identity(n: StrandCount) -> Self {
        NormalForm {
            n,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(n: StrandCount, p: i64) -> Self {
        NormalForm {
            n,
            inf: p,
            factors: Vec::new(),
        }
    }

    pub fn from_simple(s: &SimpleElement) -> Self {
        Self::from_delta_factors(s.n(), 0, vec![s.clone()])
    }

    /// Normalize `Δ^p · factors[0] ⋯ factors[k]` into left normal form.
    pub fn from_delta_factors(n: StrandCount, p: i64, factors: Vec<SimpleElement>) -> Self {
        let mut nf = NormalForm { n, inf: p, factors };
        nf.renormalize();
        nf
    }

    /// Left normal form of a free braid word. Negative letters are rewritten
    /// as `σ_i⁻¹ = Δ⁻¹ · (Δσ_i⁻¹)` with `Δσ_i⁻¹` the left complement of the
    /// atom, so the accumulated factors stay simple throughout.
    pub fn from_word(w: &BraidWord) -> Self {
        let n = w.n();
        let mut p: i64 = 0;
        let mut factors: Vec<SimpleElement> = Vec::with_capacity(w.letters().len());
        for l in w.letters() {
            let atom = SimpleElement::atom(n, l.index()).unwrap();
            if l.sign() > 0 {
                factors.push(atom);
            } else {
                // X · σ_i⁻¹ = Δ^{p-1} · τ(f₁⋯f_m) · ∂⁻¹(σ_i)
                p -= 1;
                for f in &mut factors {
                    *f = f.tau();
                }
                factors.push(atom.left_complement());
            }
        }
        Self::from_delta_factors(n, p, factors)
    }

    fn renormalize(&mut self) {
        loop {
            let mut changed = false;
            let fs = &mut self.factors;
            if fs.len() > 1 {
                // backward sweep of local slidings
                for i in (0..fs.len() - 1).rev() {
                    if !is_left_weighted(&fs[i], &fs[i + 1]) {
                        let (a, b) = local_slide(&fs[i], &fs[i + 1]);
                        fs[i] = a;
                        fs[i + 1] = b;
                        changed = true;
                    }
                }
            }
            let before = fs.len();
            fs.retain(|f| !f.is_identity());
            changed |= fs.len() != before;
            while fs.first().map_or(false, |f| f.is_delta()) {
                fs.remove(0);
                self.inf += 1;
                changed = true;
            }
            if !changed {
                break;
            }
        }
        debug_assert!(self.is_left_normal());
    }

    fn is_left_normal(&self) -> bool {
        self.factors
            .iter()
            .all(|f| !f.is_identity() && !f.is_delta())
            && self
                .factors
                .windows(2)
                .all(|w| is_left_weighted(&w[0], &w[1]))
    }

    #[inline]
    pub fn n(&self) -> StrandCount {
        self.n
    }

    #[inline]
    pub fn inf(&self) -> i64 {
        self.inf
    }

    #[inline]
    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    #[inline]
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    #[inline]
    pub fn factors(&self) -> &[SimpleElement] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n.get(),
                right: other.n.get(),
            });
        }
        Ok(())
    }

    /// Normal form of the product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let q = other.inf;
        let mut factors: Vec<SimpleElement> = self.factors.iter().map(|f| f.tau_pow(q)).collect();
        factors.extend(other.factors.iter().cloned());
        Ok(Self::from_delta_factors(self.n, self.inf + q, factors))
    }

    /// Normal form of the inverse, by the closed formula
    /// `x⁻¹ = Δ^{-p-l} x'_l ⋯ x'_1` with `x'_i = τ^{-p-i}(∂(x_i))`.
    /// The result is left-weighted as produced; no sliding is applied.
    pub fn invert(&self) -> Self {
        let l = self.factors.len() as i64;
        let mut factors = Vec::with_capacity(self.factors.len());
        for (idx, f) in self.factors.iter().enumerate().rev() {
            let i = idx as i64 + 1;
            factors.push(f.right_complement().tau_pow(-self.inf - i));
        }
        let nf = NormalForm {
            n: self.n,
            inf: -self.inf - l,
            factors,
        };
        debug_assert!(nf.is_left_normal());
        nf
    }

    /// `self^k` for any integer exponent.
    pub fn power(&self, k: i64) -> Self {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut acc = NormalForm::identity(self.n);
        for _ in 0..k.unsigned_abs() {
            acc = acc.multiply(&base).unwrap();
        }
        acc
    }

    /// Image of the whole braid under the word-reversal anti-automorphism.
    pub fn reverse(&self) -> Self {
        let p = self.inf;
        let factors: Vec<SimpleElement> = self
            .factors
            .iter()
            .rev()
            .map(|f| f.reverse().tau_pow(p))
            .collect();
        Self::from_delta_factors(self.n, p, factors)
    }

    /// Conjugation by `Δ`: `τ(x) = Δ⁻¹ x Δ`. Preserves normal forms.
    pub fn tau(&self) -> Self {
        NormalForm {
            n: self.n,
            inf: self.inf,
            factors: self.factors.iter().map(|f| f.tau()).collect(),
        }
    }

    /// Right normal form, computed through the reversal anti-automorphism,
    /// which exchanges left- and right-weightedness.
    pub fn right_normal_form(&self) -> RightNormalForm {
        let r = self.reverse();
        RightNormalForm {
            n: self.n,
            delta_pow: r.inf,
            factors: r.factors.iter().rev().map(|f| f.reverse()).collect(),
        }
    }

    /// `1 ∨ x` when it is simple: `1` if `sup(x) ≤ 0`, the leftmost factor of
    /// the right normal form (or `Δ`) if `sup(x) = 1`. A supremum above 1
    /// means the join is not simple, which signals a violated precondition in
    /// every caller of this crate.
    pub fn join_with_one(&self) -> Result<SimpleElement> {
        let r = self.right_normal_form();
        let sup = r.delta_pow + r.factors.len() as i64;
        if sup <= 0 {
            return Ok(SimpleElement::identity(self.n));
        }
        if sup == 1 {
            return Ok(match r.leftmost_factor() {
                Some(f) => f.clone(),
                None => delta(self.n),
            });
        }
        Err(Error::JoinOneNotSimple { sup })
    }

    /// Initial and final factors `(ι(x), φ(x))`; `(1, Δ)` when `ℓ(x) = 0`.
    pub fn boundary_factors(&self) -> (SimpleElement, SimpleElement) {
        match (self.factors.first(), self.factors.last()) {
            (Some(first), Some(last)) => (first.tau_pow(-self.inf), last.clone()),
            _ => (SimpleElement::identity(self.n), delta(self.n)),
        }
    }

    pub fn initial_factor(&self) -> SimpleElement {
        self.boundary_factors().0
    }

    pub fn final_factor(&self) -> SimpleElement {
        self.boundary_factors().1
    }

    /// Preferred prefix `𝔭(x) = ι(x) ∧ ι(x⁻¹) = ι(x) ∧ ∂(φ(x))`.
    pub fn preferred_prefix(&self) -> SimpleElement {
        if self.factors.is_empty() {
            return SimpleElement::identity(self.n);
        }
        let (iota, phi) = self.boundary_factors();
        iota.meet_unchecked(&phi.right_complement())
    }

    /// `x` is rigid when `𝔭(x) = 1`. Undefined for `ℓ(x) = 0`.
    pub fn is_rigid(&self) -> Result<bool> {
        if self.factors.is_empty() {
            return Err(Error::ZeroCanonicalLength);
        }
        Ok(self.preferred_prefix().is_identity())
    }

    /// The simple element this braid equals, if it is one (`1`, `Δ`, or a
    /// single positive factor).
    pub fn to_simple(&self) -> Option<SimpleElement> {
        match (self.inf, self.factors.len()) {
            (0, 0) => Some(SimpleElement::identity(self.n)),
            (0, 1) => Some(self.factors[0].clone()),
            (1, 0) => Some(delta(self.n)),
            _ => None,
        }
    }

    /// The braid expanded into a word in the Artin generators: `p` copies of
    /// the canonical `Δ` word (inverted when `p < 0`) followed by the
    /// canonical word of each factor.
    pub fn as_signed_word(&self) -> Vec<i64> {
        let mut out = Vec::new();
        let dw = delta(self.n).canonical_word();
        if self.inf >= 0 {
            for _ in 0..self.inf {
                out.extend(dw.iter().map(|&i| i as i64));
            }
        } else {
            for _ in 0..(-self.inf) {
                out.extend(dw.iter().rev().map(|&i| -(i as i64)));
            }
        }
        for f in &self.factors {
            out.extend(f.canonical_word().into_iter().map(|i| i as i64));
        }
        out
    }
}
