//! The summit conjugation graph: minimal simple elements (by atom pullback
//! for rigid elements, brute force otherwise), breadth-first construction of
//! the graph on the ultra summit set, the local minimal-structure test, and
//! cycling-orbit classification.

use crate::braid::SimpleElement;
use crate::conjugacy::{
    conjugate_by_simple, cycling_orbit, slide_to_circuit, uss_membership, DEFAULT_TRAJECTORY_CAP,
};
use crate::error::{Error, Result};
use crate::normal::NormalForm;
use std::collections::HashMap;

/// Strand bound above which the brute-force minimal-element search (which
/// enumerates all `n!` simple elements) is refused.
pub const BRUTE_FORCE_STRAND_BOUND: usize = 7;

/// Default cap on the number of graph vertices before aborting.
pub const DEFAULT_VERTEX_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Color {
    /// Label is a prefix of `ι(source)` only.
    Black,
    /// Label is a prefix of `ι(source⁻¹) = ∂(φ(source))` only.
    Grey,
    /// Label is a prefix of both (possible only at non-rigid vertices), or
    /// the source is a power of `Δ` so neither prefix test applies.
    Bicolored,
}

impl Color {
    pub fn as_str(self) -> &'static str {
        match self {
            Color::Black => "black",
            Color::Grey => "grey",
            Color::Bicolored => "bicolored",
        }
    }
}

/// A labeled conjugation arrow of the summit graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: SimpleElement,
    pub color: Color,
}

/// Method selector for [`minimal_simple_elements`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MselMethod {
    /// Atom pullback + sliding; requires a rigid input.
    RigidPullback,
    /// Enumeration of all simple elements; bounded by
    /// [`BRUTE_FORCE_STRAND_BOUND`].
    BruteForce,
}

/// The graph on the ultra summit set of a conjugacy class: vertices in
/// breadth-first discovery order, arrows labeled by the minimal simple
/// elements of their source.
#[derive(Debug, Clone)]
pub struct UssGraph {
    pub vertices: Vec<NormalForm>,
    pub arrows: Vec<Arrow>,
    /// Index of the starting vertex (always 0 by construction).
    pub base: usize,
    pub summit_inf: i64,
    pub summit_len: usize,
    index: HashMap<NormalForm, usize>,
}

impl UssGraph {
    pub fn vertex_id(&self, x: &NormalForm) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(move |a| a.source == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(move |a| a.target == v)
    }

    /// JSON export with 1-based permutation tables for labels and factors.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.vertices[self.base].n().get();
        serde_json::json!({
            "n": n,
            "summit_len": self.summit_len,
            "base": self.base,
            "vertices": self.vertices.iter().map(|v| serde_json::json!({
                "inf": v.inf(),
                "factors": v.factors().iter().map(|f| f.table()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "arrows": self.arrows.iter().map(|a| serde_json::json!({
                "src": a.source,
                "dst": a.target,
                "label": a.label.table(),
                "color": a.color.as_str(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Classification of the cycling-orbit symmetry of a summit element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitTag {
    /// `τ(x)` lies outside the cycling orbit of `x`.
    TwoOrbits,
    /// Single orbit with `τ(x) = c^{k/2}(x)` (forces `k` even).
    OneOrbitTauShift,
    /// Single orbit with `τ(x) = x`.
    OneOrbitTauFixed,
    /// The surrounding structure failed the minimality test; the orbit tag
    /// carries no theorem guarantees.
    NotMinimal,
}

/// The cycling orbit of a summit element together with its symmetry tag.
#[derive(Debug, Clone)]
pub struct OrbitStructure {
    pub tag: OrbitTag,
    /// Orbit length `k`.
    pub k: usize,
    /// The closed orbit `x, c(x), …, c^{k-1}(x)`.
    pub orbit: Vec<NormalForm>,
}

/// The minimal element `ρ_i` with `σ_i ≼ ρ_i` conjugating `x` into its super
/// summit set, found by the pullback loop: while `x^ρ` is not super summit,
/// extend `ρ` by `1 ∨ (x^ρ)⁻¹Δ^p ∨ x^ρΔ^{-p-r}` where `p`, `r` are the inf
/// and canonical length of `x`.
pub fn atom_pullback_sss(x: &NormalForm, atom_index: usize) -> Result<SimpleElement> {
    let n = x.n();
    let p = x.inf();
    let r = x.canonical_length();
    let mut rho = SimpleElement::atom(n, atom_index)?;
    let cap = n.get() * (n.get() - 1) / 2;
    for _ in 0..=cap {
        let y = conjugate_by_simple(x, &rho)?;
        if y.inf() == p && y.canonical_length() == r {
            return Ok(rho);
        }
        let low = y
            .invert()
            .multiply(&NormalForm::delta_power(n, p))?
            .join_with_one()?;
        let high = y
            .multiply(&NormalForm::delta_power(n, -(p + r as i64)))?
            .join_with_one()?;
        let step = low.join(&high)?;
        debug_assert!(!step.is_identity());
        let extended = rho.compose(&step);
        // the product of two permutation braids is again one exactly when
        // the crossing counts add up
        if extended.word_len() != rho.word_len() + step.word_len() {
            return Err(Error::PullbackNotSimple {
                len: rho.word_len() + step.word_len(),
            });
        }
        rho = extended;
    }
    Err(Error::PullbackCapExceeded { cap })
}

fn color_for(s: &SimpleElement, iota: &SimpleElement, phi_comp: &SimpleElement) -> Color {
    let black = s.is_prefix_of(iota).unwrap();
    let grey = s.is_prefix_of(phi_comp).unwrap();
    match (black, grey) {
        (true, false) => Color::Black,
        (false, true) => Color::Grey,
        // (true, true) only at non-rigid vertices; (false, false) only for
        // powers of Δ, where every conjugate is the element itself
        _ => Color::Bicolored,
    }
}

fn keep_prefix_minimal(mut candidates: Vec<SimpleElement>) -> Vec<SimpleElement> {
    candidates.sort_by_key(|s| (s.word_len(), s.table()));
    candidates.dedup();
    let mut minimal: Vec<SimpleElement> = Vec::new();
    for c in candidates {
        if !minimal.iter().any(|m| m.is_prefix_of(&c).unwrap()) {
            minimal.push(c);
        }
    }
    minimal
}

/// The minimal simple elements of `y` (a USS element) with their colors.
pub fn minimal_simple_elements(
    y: &NormalForm,
    method: MselMethod,
) -> Result<Vec<(SimpleElement, Color)>> {
    let n = y.n();
    let candidates = match method {
        MselMethod::RigidPullback => {
            if y.canonical_length() == 0 || !y.is_rigid()? {
                return Err(Error::NotRigid);
            }
            let mut out = Vec::with_capacity(n.get() - 1);
            for i in n.atom_indices() {
                let rho = atom_pullback_sss(y, i)?;
                let sss = conjugate_by_simple(y, &rho)?;
                let slid = slide_to_circuit(&sss, DEFAULT_TRAJECTORY_CAP)?;
                let full = NormalForm::from_simple(&rho).multiply(&slid.conjugator)?;
                let simple = full.to_simple().ok_or(Error::PullbackNotSimple {
                    len: full.canonical_length(),
                })?;
                out.push(simple);
            }
            out
        }
        MselMethod::BruteForce => {
            if n.get() > BRUTE_FORCE_STRAND_BOUND {
                return Err(Error::BruteForceBoundExceeded {
                    n: n.get(),
                    bound: BRUTE_FORCE_STRAND_BOUND,
                });
            }
            let mut out = Vec::new();
            for s in crate::braid::all_simple_elements(n)? {
                if s.is_identity() {
                    continue;
                }
                let target = conjugate_by_simple(y, &s)?;
                if target.inf() == y.inf()
                    && target.canonical_length() == y.canonical_length()
                    && uss_membership(&target, DEFAULT_TRAJECTORY_CAP)?
                {
                    out.push(s);
                }
            }
            out
        }
    };
    let (iota, phi) = y.boundary_factors();
    let phi_comp = phi.right_complement();
    Ok(keep_prefix_minimal(candidates)
        .into_iter()
        .map(|s| {
            let c = color_for(&s, &iota, &phi_comp);
            (s, c)
        })
        .collect())
}

fn msels_auto(y: &NormalForm) -> Result<Vec<(SimpleElement, Color)>> {
    let rigid = y.canonical_length() > 0 && y.is_rigid()?;
    if rigid {
        minimal_simple_elements(y, MselMethod::RigidPullback)
    } else {
        minimal_simple_elements(y, MselMethod::BruteForce)
    }
}

/// Build the full summit graph of the conjugacy class of `x0` by sliding to
/// a circuit and closing breadth-first under minimal-simple-element arrows.
pub fn build_uss_graph(x0: &NormalForm, vertex_cap: usize) -> Result<UssGraph> {
    let base_elt = slide_to_circuit(x0, DEFAULT_TRAJECTORY_CAP)?.representative;
    let summit_inf = base_elt.inf();
    let summit_len = base_elt.canonical_length();

    let mut vertices = vec![base_elt.clone()];
    let mut index = HashMap::from([(base_elt, 0usize)]);
    let mut arrows = Vec::new();
    let mut next = 0;
    while next < vertices.len() {
        let v = vertices[next].clone();
        for (label, color) in msels_auto(&v)? {
            let target_elt = conjugate_by_simple(&v, &label)?;
            let target = match index.get(&target_elt) {
                Some(&id) => id,
                None => {
                    if vertices.len() >= vertex_cap {
                        return Err(Error::VertexCapExceeded { cap: vertex_cap });
                    }
                    let id = vertices.len();
                    index.insert(target_elt.clone(), id);
                    vertices.push(target_elt);
                    id
                }
            };
            arrows.push(Arrow {
                source: next,
                target,
                label,
                color,
            });
        }
        next += 1;
    }
    Ok(UssGraph {
        vertices,
        arrows,
        base: 0,
        summit_inf,
        summit_len,
        index,
    })
}

/// Local test for the minimal summit structure: canonical length above 1,
/// rigidity, and both `ι(x)` and `ι(x⁻¹)` occurring among the minimal
/// simple elements of `x`. Requires `x` in its ultra summit set.
pub fn check_minimal_uss(x: &NormalForm) -> Result<bool> {
    if x.canonical_length() <= 1 || !x.is_rigid().unwrap_or(false) {
        return Ok(false);
    }
    let msels = minimal_simple_elements(x, MselMethod::RigidPullback)?;
    let (iota, phi) = x.boundary_factors();
    let phi_comp = phi.right_complement();
    let has_iota = msels.iter().any(|(s, _)| *s == iota);
    let has_grey = msels.iter().any(|(s, _)| *s == phi_comp);
    Ok(has_iota && has_grey)
}

/// Classify the cycling orbit of a rigid USS element: `τ(x) = x`, or
/// `τ(x) = c^{k/2}(x)` with `k` even, or `τ(x)` outside the orbit.
pub fn orbit_structure(x: &NormalForm) -> Result<OrbitStructure> {
    let o = cycling_orbit(x, DEFAULT_TRAJECTORY_CAP)?;
    if !o.is_closed() {
        return Err(Error::OrbitNotClosed);
    }
    let orbit = o.trajectory;
    let k = orbit.len();
    let t = x.tau();
    let tag = if t == *x {
        OrbitTag::OneOrbitTauFixed
    } else if k % 2 == 0 && t == orbit[k / 2] {
        OrbitTag::OneOrbitTauShift
    } else {
        OrbitTag::TwoOrbits
    };
    Ok(OrbitStructure { tag, k, orbit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{delta, simple_from_word, StrandCount};
    use crate::normal::BraidWord;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn n(k: usize) -> StrandCount {
        StrandCount::new(k).unwrap()
    }

    fn nf(k: usize, signed: &[i64]) -> NormalForm {
        NormalForm::from_word(&BraidWord::from_signed(n(k), signed).unwrap())
    }

    fn simple(k: usize, word: &[usize]) -> SimpleElement {
        simple_from_word(n(k), word).unwrap()
    }

    fn random_rigid(rng: &mut StdRng, k: usize, max_len: usize) -> NormalForm {
        loop {
            let len = rng.gen_range(1..=max_len * 2);
            let word: Vec<i64> = (0..len)
                .map(|_| {
                    let i = rng.gen_range(1..k) as i64;
                    if rng.gen_bool(0.5) {
                        i
                    } else {
                        -i
                    }
                })
                .collect();
            let x = nf(k, &word);
            if x.canonical_length() == 0 {
                continue;
            }
            let s = slide_to_circuit(&x, DEFAULT_TRAJECTORY_CAP)
                .unwrap()
                .representative;
            if s.canonical_length() >= 1 && s.canonical_length() <= max_len && s.is_rigid().unwrap()
            {
                return s;
            }
        }
    }

    #[test]
    fn atom_pullback_examples() {
        let x = nf(3, &[1, 1]);
        assert_eq!(atom_pullback_sss(&x, 1).unwrap(), simple(3, &[1]));
        assert_eq!(atom_pullback_sss(&x, 2).unwrap(), simple(3, &[2, 1]));

        let y = nf(3, &[1, 2, 2, 1]);
        assert_eq!(atom_pullback_sss(&y, 2).unwrap(), simple(3, &[2]));
    }

    #[test]
    fn minimal_simple_elements_examples() {
        let x = nf(3, &[1, 1]);
        let expected = vec![
            (simple(3, &[1]), Color::Black),
            (simple(3, &[2, 1]), Color::Grey),
        ];
        for method in [MselMethod::RigidPullback, MselMethod::BruteForce] {
            let mut got = minimal_simple_elements(&x, method).unwrap();
            got.sort_by_key(|(s, _)| s.table());
            let mut want = expected.clone();
            want.sort_by_key(|(s, _)| s.table());
            assert_eq!(got, want);
        }

        let y = nf(3, &[1, 2, 2, 1]);
        let got = minimal_simple_elements(&y, MselMethod::BruteForce).unwrap();
        let mut got_sorted = got.clone();
        got_sorted.sort_by_key(|(s, _)| s.table());
        let mut want = vec![
            (simple(3, &[1, 2]), Color::Black),
            (simple(3, &[2]), Color::Grey),
        ];
        want.sort_by_key(|(s, _)| s.table());
        assert_eq!(got_sorted, want);

        // central element: every atom, bicolored
        let d2 = NormalForm::delta_power(n(3), 2);
        let mut got = minimal_simple_elements(&d2, MselMethod::BruteForce).unwrap();
        got.sort_by_key(|(s, _)| s.table());
        assert_eq!(
            got,
            vec![
                (simple(3, &[2]), Color::Bicolored),
                (simple(3, &[1]), Color::Bicolored),
            ]
        );
    }

    #[test]
    fn pullback_vs_brute_force_oracle() {
        let mut rng = StdRng::seed_from_u64(61);
        for _ in 0..60 {
            let k = rng.gen_range(3..=5);
            let x = random_rigid(&mut rng, k, 6);
            let mut a = minimal_simple_elements(&x, MselMethod::RigidPullback).unwrap();
            let mut b = minimal_simple_elements(&x, MselMethod::BruteForce).unwrap();
            a.sort_by_key(|(s, _)| s.table());
            b.sort_by_key(|(s, _)| s.table());
            assert_eq!(a, b, "method mismatch for {x:?}");
        }
    }

    #[test]
    fn build_graph_examples() {
        // two vertices, two black loops, two grey cross arrows
        let g = build_uss_graph(&nf(3, &[1, 1]), DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.arrows.len(), 4);
        let x1 = g.vertex_id(&nf(3, &[1, 1])).unwrap();
        let x2 = g.vertex_id(&nf(3, &[2, 2])).unwrap();
        let has = |src, dst, lbl: &SimpleElement, color| {
            g.arrows
                .iter()
                .any(|a| a.source == src && a.target == dst && a.label == *lbl && a.color == color)
        };
        assert!(has(x1, x1, &simple(3, &[1]), Color::Black));
        assert!(has(x1, x2, &simple(3, &[2, 1]), Color::Grey));
        assert!(has(x2, x2, &simple(3, &[2]), Color::Black));
        assert!(has(x2, x1, &simple(3, &[1, 2]), Color::Grey));

        // x and τ(x) joined by black arrows, grey self-loops
        let x = nf(3, &[1, 2, 2, 1]);
        let g = build_uss_graph(&x, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(g.vertices.len(), 2);
        let vx = g.vertex_id(&x).unwrap();
        let vt = g.vertex_id(&x.tau()).unwrap();
        let has = |src, dst, lbl: &SimpleElement, color| {
            g.arrows
                .iter()
                .any(|a| a.source == src && a.target == dst && a.label == *lbl && a.color == color)
        };
        assert!(has(vx, vt, &simple(3, &[1, 2]), Color::Black));
        assert!(has(vt, vx, &simple(3, &[2, 1]), Color::Black));
        assert!(has(vx, vx, &simple(3, &[2]), Color::Grey));
        assert!(has(vt, vt, &simple(3, &[1]), Color::Grey));

        // central element: one vertex, atom self-loops
        let g = build_uss_graph(&NormalForm::delta_power(n(3), 2), DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(g.vertices.len(), 1);
        assert_eq!(g.arrows.len(), 2);
        assert!(g.arrows.iter().all(|a| a.source == 0 && a.target == 0));
    }

    #[test]
    fn graph_arrows_conjugate_correctly() {
        let mut rng = StdRng::seed_from_u64(67);
        for _ in 0..20 {
            let k = rng.gen_range(3..=4);
            let x = random_rigid(&mut rng, k, 5);
            let g = build_uss_graph(&x, DEFAULT_VERTEX_CAP).unwrap();
            for a in &g.arrows {
                let src = &g.vertices[a.source];
                let dst = &g.vertices[a.target];
                assert_eq!(&conjugate_by_simple(src, &a.label).unwrap(), dst);
                assert_eq!(src.inf(), g.summit_inf);
                assert_eq!(src.canonical_length(), g.summit_len);
            }
        }
    }

    #[test]
    fn check_minimal_examples() {
        assert!(check_minimal_uss(&nf(3, &[1, 1])).unwrap());
        assert!(check_minimal_uss(&nf(3, &[1, 2, 2, 1])).unwrap());
        // ℓ = 1 fails by definition
        let d_sigma = nf(3, &[1, 2, 1, 1]);
        assert_eq!(d_sigma.canonical_length(), 1);
        assert!(!check_minimal_uss(&d_sigma).unwrap());
    }

    #[test]
    fn orbit_structure_examples() {
        let s = orbit_structure(&nf(3, &[1, 1])).unwrap();
        assert_eq!((s.tag, s.k), (OrbitTag::TwoOrbits, 1));

        let s = orbit_structure(&nf(3, &[1, 2, 2, 1])).unwrap();
        assert_eq!((s.tag, s.k), (OrbitTag::OneOrbitTauShift, 2));

        let s = orbit_structure(&nf(4, &[2, 2])).unwrap();
        assert_eq!((s.tag, s.k), (OrbitTag::OneOrbitTauFixed, 1));
    }

    #[test]
    fn graph_json_shape() {
        let g = build_uss_graph(&nf(3, &[1, 1]), DEFAULT_VERTEX_CAP).unwrap();
        let v = g.to_json();
        assert_eq!(v["n"], 3);
        assert_eq!(v["summit_len"], 2);
        assert_eq!(v["base"], 0);
        assert_eq!(v["vertices"].as_array().unwrap().len(), 2);
        assert_eq!(v["arrows"].as_array().unwrap().len(), 4);
        assert_eq!(v["vertices"][0]["factors"][0], serde_json::json!([2, 1, 3]));
    }

    #[test]
    fn delta_power_word_sanity() {
        // keep `delta` import honest: Δ² central in B₃
        let d = NormalForm::from_simple(&delta(n(3)));
        let d2 = d.multiply(&d).unwrap();
        assert_eq!(d2, NormalForm::delta_power(n(3), 2));
    }
}
