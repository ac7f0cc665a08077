//! Centralizer generating sets: the preferred cycling conjugator, the
//! two-generator answers for the three minimal-structure cases, and the
//! spanning-tree fundamental-group fallback on the full summit graph.

use crate::conjugacy::{cycling_orbit, slide_to_circuit, DEFAULT_TRAJECTORY_CAP};
use crate::error::{Error, Result};
use crate::normal::NormalForm;
use crate::uss::{
    build_uss_graph, check_minimal_uss, orbit_structure, Color, OrbitStructure, OrbitTag, UssGraph,
    DEFAULT_VERTEX_CAP,
};
use std::collections::VecDeque;

/// Which branch produced the generating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    TwoOrbits,
    OneOrbitTauShift,
    OneOrbitTauFixed,
    /// Minimal-structure test failed; generators come from the spanning-tree
    /// construction on the summit graph.
    Fallback,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::TwoOrbits => "TwoOrbits",
            CaseTag::OneOrbitTauShift => "OneOrbitTauShift",
            CaseTag::OneOrbitTauFixed => "OneOrbitTauFixed",
            CaseTag::Fallback => "Fallback",
        }
    }
}

/// A generating set for the centralizer of the input braid.
#[derive(Debug, Clone)]
pub struct CentralizerOutput {
    pub generators: Vec<NormalForm>,
    pub case_tag: CaseTag,
    /// `c` with `c⁻¹ · input · c` = the summit representative used.
    pub conjugator: NormalForm,
    /// Number of vertices of the summit graph (`2k` or `k` in the
    /// two-generator cases, the built graph's size in the fallback).
    pub uss_size: usize,
    /// Cycling orbit length of the summit representative.
    pub k: usize,
}

impl CentralizerOutput {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "case": self.case_tag.as_str(),
            "k": self.k,
            "uss_size": self.uss_size,
            "conjugator": self.conjugator.as_signed_word(),
            "generators": self.generators.iter().map(|g| g.as_signed_word()).collect::<Vec<_>>(),
        })
    }
}

/// A breadth-first spanning tree of a summit graph: for each vertex, the
/// path element `γ_v` conjugating the base element to the vertex element.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    /// Arrow index of the tree edge entering each vertex (`None` at base).
    pub parent_arrow: Vec<Option<usize>>,
    pub gamma: Vec<NormalForm>,
}

/// `PC(x)`: the product of the initial factors along the cycling trajectory
/// of `x`, up to the first repetition. Commutes with `x` when `x` is in its
/// ultra summit set; `1` for powers of `Δ`.
pub fn preferred_cycling_conjugator(x: &NormalForm) -> Result<NormalForm> {
    let orbit = cycling_orbit(x, DEFAULT_TRAJECTORY_CAP)?;
    let mut pc = NormalForm::identity(x.n());
    for y in &orbit.trajectory {
        pc = pc.multiply(&NormalForm::from_simple(&y.initial_factor()))?;
    }
    Ok(pc)
}

/// The two generators `(A, B)` for a classified minimal structure:
/// `TwoOrbits → (PC, Δ²)`, `OneOrbitTauShift → (a₁⋯a_{k/2}Δ⁻¹, Δ²)`,
/// `OneOrbitTauFixed → (PC, Δ)`.
pub fn theorem_case_generators(structure: &OrbitStructure) -> Result<(NormalForm, NormalForm)> {
    let x = structure.orbit.first().ok_or(Error::NotMinimalStructure)?;
    let n = x.n();
    let delta_sq = NormalForm::delta_power(n, 2);
    match structure.tag {
        OrbitTag::TwoOrbits => Ok((preferred_cycling_conjugator(x)?, delta_sq)),
        OrbitTag::OneOrbitTauShift => {
            let mut a = NormalForm::identity(n);
            for y in &structure.orbit[..structure.k / 2] {
                a = a.multiply(&NormalForm::from_simple(&y.initial_factor()))?;
            }
            Ok((a.multiply(&NormalForm::delta_power(n, -1))?, delta_sq))
        }
        OrbitTag::OneOrbitTauFixed => Ok((
            preferred_cycling_conjugator(x)?,
            NormalForm::delta_power(n, 1),
        )),
        OrbitTag::NotMinimal => Err(Error::NotMinimalStructure),
    }
}

/// Breadth-first spanning tree from the base vertex, preferring black
/// arrows over grey at equal depth for a deterministic choice.
pub fn spanning_tree(graph: &UssGraph) -> Result<SpanningTree> {
    let m = graph.vertices.len();
    let mut parent_arrow = vec![None; m];
    let mut gamma: Vec<Option<NormalForm>> = vec![None; m];
    gamma[graph.base] = Some(NormalForm::identity(graph.vertices[graph.base].n()));
    let mut queue = VecDeque::from([graph.base]);
    while let Some(v) = queue.pop_front() {
        let mut out: Vec<(usize, &crate::uss::Arrow)> = graph
            .arrows
            .iter()
            .enumerate()
            .filter(|(_, a)| a.source == v)
            .collect();
        out.sort_by_key(|(_, a)| {
            (
                match a.color {
                    Color::Black => 0,
                    Color::Grey => 1,
                    Color::Bicolored => 2,
                },
                a.label.table(),
            )
        });
        for (idx, a) in out {
            if gamma[a.target].is_none() {
                let g = gamma[v]
                    .as_ref()
                    .unwrap()
                    .multiply(&NormalForm::from_simple(&a.label))?;
                gamma[a.target] = Some(g);
                parent_arrow[a.target] = Some(idx);
                queue.push_back(a.target);
            }
        }
    }
    Ok(SpanningTree {
        parent_arrow,
        gamma: gamma.into_iter().map(|g| g.unwrap()).collect(),
    })
}

/// Fundamental-group generators of the summit graph based at the base
/// vertex: `γ_{source(λ)} · λ · γ_{target(λ)}⁻¹` over all arrows `λ`, with
/// identities (in particular all tree arrows) and duplicates removed. Every
/// output commutes with the base vertex element.
pub fn fallback_generators(graph: &UssGraph) -> Result<Vec<NormalForm>> {
    let tree = spanning_tree(graph)?;
    let mut out: Vec<NormalForm> = Vec::new();
    for a in &graph.arrows {
        let f = tree.gamma[a.source]
            .multiply(&NormalForm::from_simple(&a.label))?
            .multiply(&tree.gamma[a.target].invert())?;
        if !f.is_identity() && !out.contains(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

/// End-to-end centralizer computation: slide to a circuit, test for the
/// minimal summit structure, and either apply the matching two-generator
/// theorem or fall back to the spanning-tree construction; either way the
/// generators are conjugated back to the input.
pub fn centralizer_generators(y: &NormalForm) -> Result<CentralizerOutput> {
    centralizer_generators_capped(y, DEFAULT_VERTEX_CAP)
}

pub fn centralizer_generators_capped(
    y: &NormalForm,
    vertex_cap: usize,
) -> Result<CentralizerOutput> {
    let slid = slide_to_circuit(y, DEFAULT_TRAJECTORY_CAP)?;
    let x = slid.representative;
    let c = slid.conjugator;
    let c_inv = c.invert();
    let conj_back = |g: &NormalForm| -> Result<NormalForm> { c.multiply(g)?.multiply(&c_inv) };

    let minimal =
        x.canonical_length() > 1 && x.is_rigid().unwrap_or(false) && check_minimal_uss(&x)?;
    if minimal {
        let structure = orbit_structure(&x)?;
        let (a, b) = theorem_case_generators(&structure)?;
        let case_tag = match structure.tag {
            OrbitTag::TwoOrbits => CaseTag::TwoOrbits,
            OrbitTag::OneOrbitTauShift => CaseTag::OneOrbitTauShift,
            OrbitTag::OneOrbitTauFixed => CaseTag::OneOrbitTauFixed,
            OrbitTag::NotMinimal => unreachable!("minimal test passed"),
        };
        let uss_size = match case_tag {
            CaseTag::TwoOrbits => 2 * structure.k,
            _ => structure.k,
        };
        return Ok(CentralizerOutput {
            generators: vec![conj_back(&a)?, conj_back(&b)?],
            case_tag,
            conjugator: c,
            uss_size,
            k: structure.k,
        });
    }

    let graph = build_uss_graph(&x, vertex_cap)?;
    let k = cycling_orbit(&x, DEFAULT_TRAJECTORY_CAP)?.period();
    let gens = fallback_generators(&graph)?
        .iter()
        .map(conj_back)
        .collect::<Result<Vec<_>>>()?;
    Ok(CentralizerOutput {
        generators: gens,
        case_tag: CaseTag::Fallback,
        conjugator: c,
        uss_size: graph.vertices.len(),
        k,
    })
}
