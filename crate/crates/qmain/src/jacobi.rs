//! Floating-point cross-check for the exact main-eigenvalue count:
//! cyclic Jacobi eigendecomposition, eigenvalue clustering, and per-cluster
//! projections of the all-ones vector.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectra::{inf_norm, main_count_exact, IntMatrix};

/// Thresholds for the float path. The exact integer path never consults
/// any of these.
#[derive(Clone, Copy, Debug)]
pub struct SpectralTolerances {
    /// Jacobi stops when the off-diagonal Frobenius mass drops below
    /// `jacobi * ||m||_F`.
    pub jacobi: f64,
    /// Eigenvalues closer than `cluster_gap * max(1, ||m||_inf)` share a
    /// cluster.
    pub cluster_gap: f64,
    /// A cluster is main when the projection of the all-ones vector onto
    /// its eigenspace has norm above `projection * sqrt(n)`.
    pub projection: f64,
}

impl Default for SpectralTolerances {
    fn default() -> Self {
        SpectralTolerances {
            jacobi: 1e-12,
            cluster_gap: 1e-8,
            projection: 1e-8,
        }
    }
}

/// One cluster of numerically equal eigenvalues.
#[derive(Clone, Debug, Serialize)]
pub struct EigenCluster {
    /// Mean of the clustered eigenvalue approximations.
    pub value: f64,
    /// Number of eigenvalues in the cluster.
    pub mult: usize,
    /// Whether the all-ones vector meets this eigenspace non-orthogonally.
    pub main: bool,
    /// Norm of the projection of the all-ones vector onto the eigenspace.
    #[serde(skip)]
    pub projection_norm: f64,
}

/// Eigenvalue clusters of a symmetric integer matrix together with the
/// exact main-eigenvalue count.
#[derive(Clone, Debug)]
pub struct MainSpectrum {
    pub clusters: Vec<EigenCluster>,
    /// From the exact walk-matrix rank; the source of truth.
    pub exact_main_count: usize,
    /// `||m V - V diag(lambda)||_inf` for the computed decomposition.
    pub residual_inf: f64,
}

impl MainSpectrum {
    pub fn float_main_count(&self) -> usize {
        self.clusters.iter().filter(|c| c.main).count()
    }

    /// Values of the clusters flagged main, ascending.
    pub fn main_values(&self) -> Vec<f64> {
        self.clusters
            .iter()
            .filter(|c| c.main)
            .map(|c| c.value)
            .collect()
    }
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix, returning
/// eigenvalues and the orthogonal matrix of eigenvectors (column-major).
pub fn jacobi_eigen(n: usize, a: &[f64], tol: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    assert_eq!(a.len(), n * n);
    let mut a = a.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let max_sweeps = 100 * n * n;
    for _ in 0..max_sweeps.max(1) {
        let off: f64 = {
            let mut s = 0.0;
            for p in 0..n {
                for q in p + 1..n {
                    s += 2.0 * a[p * n + q] * a[p * n + q];
                }
            }
            s.sqrt()
        };
        if off <= tol * frob {
            let mut values = vec![0.0; n];
            for i in 0..n {
                values[i] = a[i * n + i];
            }
            return Ok((values, v));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    Err(Error::NoConvergence)
}

/// Eigendecomposes a symmetric integer matrix on the float path, clusters
/// the eigenvalues, flags main clusters by projecting the all-ones vector,
/// and attaches the exact count from the integer path.
pub fn eigen_decompose(m: &IntMatrix, tol: f64) -> Result<MainSpectrum> {
    eigen_decompose_with(
        m,
        &SpectralTolerances {
            jacobi: tol,
            ..SpectralTolerances::default()
        },
    )
}

pub fn eigen_decompose_with(m: &IntMatrix, tols: &SpectralTolerances) -> Result<MainSpectrum> {
    let n = m.n();
    let a = m.to_f64();
    let (values, vectors) = jacobi_eigen(n, &a, tols.jacobi)?;

    // Residual of the decomposition, operator infinity norm.
    let mut residual: f64 = 0.0;
    for i in 0..n {
        let mut row_sum = 0.0;
        for j in 0..n {
            let mut av = 0.0;
            for k in 0..n {
                av += a[i * n + k] * vectors[k * n + j];
            }
            row_sum += (av - vectors[i * n + j] * values[j]).abs();
        }
        residual = residual.max(row_sum);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let gap = tols.cluster_gap * inf_norm(m).max(1.0);
    let proj_threshold = tols.projection * (n as f64).sqrt();

    let mut clusters = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && values[order[end]] - values[order[end - 1]] <= gap {
            end += 1;
        }
        let members = &order[start..end];
        let value = members.iter().map(|&i| values[i]).sum::<f64>() / members.len() as f64;
        let proj_sq: f64 = members
            .iter()
            .map(|&col| {
                let dot: f64 = (0..n).map(|row| vectors[row * n + col]).sum();
                dot * dot
            })
            .sum();
        let projection_norm = proj_sq.sqrt();
        clusters.push(EigenCluster {
            value,
            mult: members.len(),
            main: projection_norm > proj_threshold,
            projection_norm,
        });
        start = end;
    }

    Ok(MainSpectrum {
        clusters,
        exact_main_count: main_count_exact(m),
        residual_inf: residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, FamilySpec};
    use crate::spectra::signless_laplacian;

    fn spectrum_of(spec: &FamilySpec) -> MainSpectrum {
        let g = make_family(spec).unwrap();
        eigen_decompose(&signless_laplacian(&g), 1e-12).unwrap()
    }

    #[test]
    fn k2_has_one_main_cluster() {
        let sp = spectrum_of(&FamilySpec::Complete { n: 2 });
        assert_eq!(sp.clusters.len(), 2);
        assert_eq!(sp.exact_main_count, 1);
        assert_eq!(sp.float_main_count(), 1);
        // Eigenvalues 0 and 2; only 2 is main (eigenvector (1,1)).
        assert!((sp.clusters[0].value - 0.0).abs() < 1e-9);
        assert!(!sp.clusters[0].main);
        assert!((sp.clusters[1].value - 2.0).abs() < 1e-9);
        assert!(sp.clusters[1].main);
    }

    #[test]
    fn path3_clusters() {
        let sp = spectrum_of(&FamilySpec::Path { n: 3 });
        let summary: Vec<(f64, bool)> = sp.clusters.iter().map(|c| (c.value, c.main)).collect();
        assert_eq!(summary.len(), 3);
        assert!((summary[0].0 - 0.0).abs() < 1e-9 && summary[0].1);
        assert!((summary[1].0 - 1.0).abs() < 1e-9 && !summary[1].1);
        assert!((summary[2].0 - 3.0).abs() < 1e-9 && summary[2].1);
        assert_eq!(sp.exact_main_count, 2);
        assert_eq!(sp.float_main_count(), 2);
    }

    #[test]
    fn bowtie_main_values_are_quadratic_roots() {
        let sp = spectrum_of(&FamilySpec::G1);
        let mains = sp.main_values();
        assert_eq!(mains.len(), 2);
        let root = 17f64.sqrt();
        assert!((mains[0] - (7.0 - root) / 2.0).abs() < 1e-8);
        assert!((mains[1] - (7.0 + root) / 2.0).abs() < 1e-8);
    }

    #[test]
    fn regular_graphs_have_single_main_cluster_at_twice_degree() {
        for n in 3..=8 {
            let sp = spectrum_of(&FamilySpec::Cycle { n });
            assert_eq!(sp.exact_main_count, 1, "C{n}");
            assert_eq!(sp.float_main_count(), 1, "C{n}");
            let mains = sp.main_values();
            assert!((mains[0] - 4.0).abs() < 1e-8, "C{n}");
        }
        let sp = spectrum_of(&FamilySpec::Complete { n: 5 });
        assert_eq!(sp.float_main_count(), 1);
        assert!((sp.main_values()[0] - 8.0).abs() < 1e-8);
    }

    #[test]
    fn multiplicities_sum_to_n_and_trace_matches() {
        let g = make_family(&FamilySpec::H { k: 3 }).unwrap();
        let m = signless_laplacian(&g);
        let sp = eigen_decompose(&m, 1e-12).unwrap();
        assert_eq!(sp.clusters.iter().map(|c| c.mult).sum::<usize>(), g.n());
        let weighted: f64 = sp.clusters.iter().map(|c| c.value * c.mult as f64).sum();
        let trace = 2.0 * g.edge_count() as f64;
        assert!((weighted - trace).abs() < 1e-8);
    }

    #[test]
    fn residual_is_tiny() {
        for spec in [FamilySpec::G1, FamilySpec::G7, FamilySpec::H { k: 4 }] {
            let g = make_family(&spec).unwrap();
            let m = signless_laplacian(&g);
            let sp = eigen_decompose(&m, 1e-12).unwrap();
            assert!(
                sp.residual_inf <= 1e-9 * crate::spectra::inf_norm(&m),
                "residual {} too large for {spec}",
                sp.residual_inf
            );
        }
    }

    #[test]
    fn one_by_one_matrix() {
        let m = IntMatrix::zero(1);
        let sp = eigen_decompose(&m, 1e-12).unwrap();
        assert_eq!(sp.clusters.len(), 1);
        assert!(sp.clusters[0].main);
        assert_eq!(sp.exact_main_count, 1);
    }

    #[test]
    fn float_mainness_matches_exact_rank_on_random_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4242);
        for round in 0..200 {
            let n = 2 + round % 11; // orders 2..=12
            let g = crate::enumerate::random_connected_graph(n, 0.4, &mut rng);
            let m = signless_laplacian(&g);
            let sp = eigen_decompose(&m, 1e-12).unwrap();
            assert_eq!(
                sp.float_main_count(),
                sp.exact_main_count,
                "round {round}, graph {:?}",
                g
            );
            assert!(sp.residual_inf <= 1e-9 * crate::spectra::inf_norm(&m));
        }
    }
}
