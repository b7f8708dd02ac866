//! The JSON analysis report bundling the invariants of one graph.

use serde::Serialize;

use crate::dist::{eccentricities, DistanceMatrix};
use crate::graph::Graph;
use crate::half::HalfInteger;
use crate::invariants::{
    alpha_index, bow_defect, hyperbolicity, interval_thinness, slice_triangle_thinness,
};
use crate::triangles::enumerate_metric_triangles;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BowDefectEntry {
    pub lambda_x2: i64,
    pub mu: u32,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TriangleSummary {
    pub count: usize,
    pub max_side: u32,
    pub degenerate_count: u64,
}

/// Invariants of one graph, serialized with a stable field order so runs
/// are byte-comparable.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AnalysisReport {
    pub alpha_index: u32,
    pub alpha_witness: Option<[usize; 4]>,
    pub hyperbolicity_x2: i64,
    pub hyp_witness: [usize; 4],
    pub interval_thinness: u32,
    pub slice_triangle_thinness: u32,
    pub bow_defects: Vec<BowDefectEntry>,
    pub diameter: u32,
    pub radius: u32,
    /// Summary only; `None` when the graph is over the enumeration cap.
    pub metric_triangles: Option<TriangleSummary>,
}

/// Computes the full report. Bow defects are reported at the two
/// distinguished thresholds: zero (where the defect equals the alpha
/// index) and the graph's own hyperbolicity.
pub fn analyze(g: &Graph, d: &DistanceMatrix) -> AnalysisReport {
    let (alpha, alpha_wit) = alpha_index(g, d);
    let (delta, hyp_wit) = hyperbolicity(g, d);
    let (kappa, _) = interval_thinness(g, d);
    let (tau, _) = slice_triangle_thinness(g, d);
    let ecc = eccentricities(d);
    let mut lambdas = vec![HalfInteger::ZERO];
    if delta > HalfInteger::ZERO {
        lambdas.push(delta);
    }
    let bow_defects = lambdas
        .into_iter()
        .map(|lambda| BowDefectEntry {
            lambda_x2: lambda.doubled(),
            mu: bow_defect(g, d, lambda).0,
        })
        .collect();
    let metric_triangles = enumerate_metric_triangles(g, d).ok().map(|t| TriangleSummary {
        count: t.triangles.len(),
        max_side: t.triangles.iter().map(|m| m.max_side).max().unwrap_or(0),
        degenerate_count: t.degenerate_count,
    });
    AnalysisReport {
        alpha_index: alpha,
        alpha_witness: alpha_wit.map(|w| [w.u, w.v, w.w, w.x]),
        hyperbolicity_x2: delta.doubled(),
        hyp_witness: [hyp_wit.u, hyp_wit.v, hyp_wit.w, hyp_wit.x],
        interval_thinness: kappa,
        slice_triangle_thinness: tau,
        bow_defects,
        diameter: ecc.diameter,
        radius: ecc.radius,
        metric_triangles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn ladder_report() {
        let g = generators::ladder(3).unwrap();
        let d = DistanceMatrix::compute(&g);
        let r = analyze(&g, &d);
        assert_eq!(r.alpha_index, 6);
        assert_eq!(r.hyperbolicity_x2, 2);
        assert_eq!(r.bow_defects[0], BowDefectEntry { lambda_x2: 0, mu: 6 });
        assert_eq!(r.diameter, 4);
    }

    #[test]
    fn tree_report() {
        let g = generators::random_tree(9, 1).unwrap();
        let d = DistanceMatrix::compute(&g);
        let r = analyze(&g, &d);
        assert_eq!(r.alpha_index, 0);
        assert_eq!(r.hyperbolicity_x2, 0);
        assert_eq!(r.interval_thinness, 0);
        assert_eq!(r.bow_defects.len(), 1);
    }

    #[test]
    fn json_field_order_is_stable() {
        let g = generators::cycle(4).unwrap();
        let d = DistanceMatrix::compute(&g);
        let text = serde_json::to_string(&analyze(&g, &d)).unwrap();
        let alpha_pos = text.find("alpha_index").unwrap();
        let hyp_pos = text.find("hyperbolicity_x2").unwrap();
        let diam_pos = text.find("diameter").unwrap();
        assert!(alpha_pos < hyp_pos && hyp_pos < diam_pos);
    }
}
