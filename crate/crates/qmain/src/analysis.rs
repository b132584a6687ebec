//! Per-graph analysis records: the JSON shape emitted by the CLI.

use serde::Serialize;

use crate::audit::{audit_lemmas, LemmaAudit};
use crate::error::Result;
use crate::families::base_shape;
use crate::graph::{degree_profile, delete_pendants, is_bicyclic, min_degree, Graph};
use crate::graph6::to_graph6;
use crate::jacobi::{eigen_decompose_with, EigenCluster, SpectralTolerances};
use crate::parabolic::{check_parabolic, NotParabolicReason, ParabolicVerdict};
use crate::spectra::signless_laplacian;

/// The parabolic verdict as emitted in reports.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictRecord {
    /// `"parabolic"`, `"regular"`, or `"not_parabolic"`.
    pub verdict: &'static str,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_vertex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma_audit: Option<LemmaAudit>,
}

impl VerdictRecord {
    pub fn new(verdict: &ParabolicVerdict) -> Self {
        match verdict {
            ParabolicVerdict::Parabolic(p) => VerdictRecord {
                verdict: "parabolic",
                a: Some(p.a),
                b: Some(p.b),
                reason: None,
                k: None,
                witness_vertex: None,
                lemma_audit: None,
            },
            ParabolicVerdict::Regular { degree } => VerdictRecord {
                verdict: "regular",
                a: None,
                b: None,
                reason: None,
                k: Some(*degree),
                witness_vertex: None,
                lemma_audit: None,
            },
            ParabolicVerdict::NotParabolic(reason) => VerdictRecord {
                verdict: "not_parabolic",
                a: None,
                b: None,
                reason: Some(reason.label()),
                k: None,
                witness_vertex: match reason {
                    NotParabolicReason::EquationFails { vertex } => Some(*vertex),
                    _ => None,
                },
                lemma_audit: None,
            },
        }
    }
}

/// Single-pass core summary for bicyclic inputs. A core minimum degree
/// below 2 is reported as-is so the caller can see the pendant-carrying
/// core rather than having the library guess at further deletion.
#[derive(Clone, Debug, Serialize)]
pub struct CoreRecord {
    pub n: usize,
    pub min_degree: usize,
    /// Base shape when the core is pendant-free, e.g. `"F3(2,2,2)"`.
    pub base: Option<String>,
}

/// Everything the `analyze` command reports about one graph.
#[derive(Clone, Debug, Serialize)]
pub struct GraphAnalysis {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub two_walk_sums: Vec<usize>,
    pub main_count_exact: usize,
    pub clusters: Vec<EigenCluster>,
    pub parabolic: VerdictRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core: Option<CoreRecord>,
}

/// Runs the full pipeline on one graph: profile, exact count, float
/// clusters, parabolic verdict. With `with_audit`, a parabolic bicyclic
/// graph also carries its lemma audit.
pub fn analyze_graph(
    g: &Graph,
    tols: &SpectralTolerances,
    with_audit: bool,
) -> Result<GraphAnalysis> {
    let profile = degree_profile(g);
    let spectrum = eigen_decompose_with(&signless_laplacian(g), tols)?;
    let verdict = check_parabolic(g);
    let mut record = VerdictRecord::new(&verdict);

    let bicyclic = is_bicyclic(g);
    if with_audit && bicyclic {
        if let Some(params) = verdict.params() {
            record.lemma_audit = Some(audit_lemmas(g, &params)?);
        }
    }
    let core = if bicyclic && min_degree(g) == 1 {
        let dec = delete_pendants(g)?;
        let base = base_shape(&dec.core).ok().map(|b| b.to_string());
        Some(CoreRecord {
            n: dec.core.n(),
            min_degree: min_degree(&dec.core),
            base,
        })
    } else if bicyclic {
        Some(CoreRecord {
            n: g.n(),
            min_degree: min_degree(g),
            base: base_shape(g).ok().map(|b| b.to_string()),
        })
    } else {
        None
    };

    Ok(GraphAnalysis {
        graph6: to_graph6(g),
        n: g.n(),
        m: g.edge_count(),
        degrees: profile.degrees,
        two_walk_sums: profile.two_walk_sums,
        main_count_exact: spectrum.exact_main_count,
        clusters: spectrum.clusters,
        parabolic: record,
        core,
    })
}
