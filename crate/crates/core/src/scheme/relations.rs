//! Explicit association schemes given by their relation matrices: axiom
//! verification, exact intersection numbers, and the eigenspace route to the
//! spectrum.

use super::scalar::Scalar;
use super::spectrum::{SchemeSpectrum, SpectrumData};
use super::SchemeError;
use crate::graph::Graph;
use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

/// 0/1 relation matrices A_0..A_d on a common vertex set, verified to form a
/// symmetric association scheme.
#[derive(Debug, Clone)]
pub struct RelationSet {
    n: usize,
    /// relations[i][x] = sorted list of y with (x,y) in R_i.
    relations: Vec<Vec<Vec<usize>>>,
    /// rel_of[x][y] = index of the relation containing (x,y).
    rel_of: Vec<Vec<usize>>,
}

/// Exact intersection numbers p^k_{ij}, stored as tensor[i][j][k].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionTensor(pub Vec<Vec<Vec<u64>>>);

impl RelationSet {
    /// Validate the three scheme axioms on dense 0/1 matrices.
    pub fn new(matrices: Vec<Vec<Vec<u8>>>) -> Result<Self, SchemeError> {
        if matrices.is_empty() {
            return Err(SchemeError::Axiom {
                axiom: 1,
                message: "no relation matrices given".into(),
            });
        }
        let n = matrices[0].len();
        if n > 500 {
            return Err(SchemeError::TooLarge(n));
        }
        for (i, m) in matrices.iter().enumerate() {
            if m.len() != n || m.iter().any(|row| row.len() != n) {
                return Err(SchemeError::Axiom {
                    axiom: 1,
                    message: format!("matrix A_{i} is not {n}x{n}"),
                });
            }
            if m.iter().flatten().any(|&x| x > 1) {
                return Err(SchemeError::Axiom {
                    axiom: 1,
                    message: format!("matrix A_{i} has entries outside {{0,1}}"),
                });
            }
        }
        // (1) A_0 = I
        for x in 0..n {
            for y in 0..n {
                let expect = u8::from(x == y);
                if matrices[0][x][y] != expect {
                    return Err(SchemeError::Axiom {
                        axiom: 1,
                        message: format!("A_0[{x}][{y}] = {}, expected {expect}", matrices[0][x][y]),
                    });
                }
            }
        }
        // (2) symmetry
        for (i, m) in matrices.iter().enumerate() {
            for x in 0..n {
                for y in (x + 1)..n {
                    if m[x][y] != m[y][x] {
                        return Err(SchemeError::Axiom {
                            axiom: 2,
                            message: format!("A_{i} is not symmetric at ({x},{y})"),
                        });
                    }
                }
            }
        }
        // partition: sum of all A_i = all-ones
        let mut rel_of = vec![vec![usize::MAX; n]; n];
        for (i, m) in matrices.iter().enumerate() {
            for x in 0..n {
                for y in 0..n {
                    if m[x][y] == 1 {
                        if rel_of[x][y] != usize::MAX {
                            return Err(SchemeError::Axiom {
                                axiom: 3,
                                message: format!(
                                    "pair ({x},{y}) lies in both R_{} and R_{i}",
                                    rel_of[x][y]
                                ),
                            });
                        }
                        rel_of[x][y] = i;
                    }
                }
            }
        }
        if let Some((x, y)) = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| rel_of[x][y] == usize::MAX)
        {
            return Err(SchemeError::Axiom {
                axiom: 3,
                message: format!("pair ({x},{y}) lies in no relation"),
            });
        }
        let relations: Vec<Vec<Vec<usize>>> = matrices
            .iter()
            .map(|m| {
                (0..n)
                    .map(|x| (0..n).filter(|&y| m[x][y] == 1).collect())
                    .collect()
            })
            .collect();
        let set = RelationSet {
            n,
            relations,
            rel_of,
        };
        // (3) closure: products constant on relations (computes the tensor)
        set.intersection_tensor()?;
        Ok(set)
    }

    /// The distance relations of a connected graph (valid scheme iff the
    /// graph is distance-regular).
    pub fn from_graph_distances(g: &Graph) -> Result<Self, SchemeError> {
        let n = g.vertex_count();
        if n > 500 {
            return Err(SchemeError::TooLarge(n));
        }
        let dist: Vec<Vec<usize>> = (0..n)
            .map(|u| g.distances_from(u))
            .collect::<Result<_, _>>()?;
        let d = dist.iter().flatten().copied().max().unwrap_or(0);
        let matrices: Vec<Vec<Vec<u8>>> = (0..=d)
            .map(|i| {
                (0..n)
                    .map(|x| (0..n).map(|y| u8::from(dist[x][y] == i)).collect())
                    .collect()
            })
            .collect();
        Self::new(matrices)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn class_count(&self) -> usize {
        self.relations.len() - 1
    }

    /// p^k_{ij} = |{z : (x,z) in R_i, (z,y) in R_j}| for any (x,y) in R_k;
    /// errors if the count is not constant over R_k.
    pub fn intersection_tensor(&self) -> Result<IntersectionTensor, SchemeError> {
        let d = self.class_count();
        let mut tensor = vec![vec![vec![0u64; d + 1]; d + 1]; d + 1];
        for i in 0..=d {
            for j in 0..=d {
                let mut seen: Vec<Option<u64>> = vec![None; d + 1];
                for x in 0..self.n {
                    for y in 0..self.n {
                        let k = self.rel_of[x][y];
                        let count = self.relations[i][x]
                            .iter()
                            .filter(|&&z| self.rel_of[z][y] == j)
                            .count() as u64;
                        match seen[k] {
                            None => seen[k] = Some(count),
                            Some(c) if c != count => {
                                return Err(SchemeError::Axiom {
                                    axiom: 3,
                                    message: format!(
                                        "A_{i} A_{j} is not constant on R_{k}: {c} vs {count}"
                                    ),
                                });
                            }
                            _ => {}
                        }
                    }
                }
                for k in 0..=d {
                    tensor[i][j][k] = seen[k].unwrap_or(0);
                }
            }
        }
        Ok(IntersectionTensor(tensor))
    }

    /// Valencies v_i (row sums; constant by axiom 3).
    pub fn valencies(&self) -> Vec<u64> {
        self.relations
            .iter()
            .map(|rel| rel[0].len() as u64)
            .collect()
    }

    /// Spectrum via eigendecomposition of a generic rational combination of
    /// the relation matrices; always float mode.
    pub fn spectrum(&self, tolerance: f64) -> Result<SchemeSpectrum, SchemeError> {
        let d = self.class_count();
        let n = self.n;
        // fixed generic weights in [1, 2), from a seeded LCG so that no
        // linear relation among the relations' eigenvalue vectors can make
        // distinct eigenspaces of the combination coincide
        let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
        let weights: Vec<f64> = (0..=d)
            .map(|_| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                1.0 + (state >> 11) as f64 / (1u64 << 53) as f64
            })
            .collect();
        let mut m = DMatrix::<f64>::zeros(n, n);
        for (i, rel) in self.relations.iter().enumerate() {
            for x in 0..n {
                for &y in &rel[x] {
                    m[(x, y)] += weights[i];
                }
            }
        }
        let eig = SymmetricEigen::new(m);
        // cluster eigenvalues of the generic combination
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            eig.eigenvalues[b]
                .partial_cmp(&eig.eigenvalues[a])
                .unwrap()
        });
        let scale: f64 = eig.eigenvalues.iter().fold(1.0f64, |a, &b| a.max(b.abs()));
        let mut clusters: Vec<Vec<usize>> = Vec::new();
        for &idx in &order {
            match clusters.last_mut() {
                Some(cluster)
                    if (eig.eigenvalues[idx] - eig.eigenvalues[cluster[0]]).abs()
                        <= tolerance * scale * 100.0 =>
                {
                    cluster.push(idx)
                }
                _ => clusters.push(vec![idx]),
            }
        }
        if clusters.len() != d + 1 {
            return Err(SchemeError::EigenspaceSeparation {
                expected: d + 1,
                found: clusters.len(),
            });
        }
        // eigenvalue of each A_j on each eigenspace via a Rayleigh quotient
        let mut p = vec![vec![0.0f64; d + 1]; d + 1];
        let mut mult = vec![0.0f64; d + 1];
        for (ci, cluster) in clusters.iter().enumerate() {
            mult[ci] = cluster.len() as f64;
            let v = eig.eigenvectors.column(cluster[0]);
            for (j, rel) in self.relations.iter().enumerate() {
                let mut av = vec![0.0f64; n];
                for x in 0..n {
                    for &y in &rel[x] {
                        av[x] += v[y];
                    }
                }
                let num: f64 = av.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
                let den: f64 = v.iter().map(|b| b * b).sum();
                p[ci][j] = num / den;
            }
        }
        // order eigenspaces by the eigenvalue of A_1, descending; the
        // all-ones space (P row = valencies) comes first automatically
        let mut rows: Vec<usize> = (0..=d).collect();
        rows.sort_by(|&a, &b| p[b][1].partial_cmp(&p[a][1]).unwrap());
        let p: Vec<Vec<f64>> = rows.iter().map(|&r| p[r].clone()).collect();
        let mult: Vec<f64> = rows.iter().map(|&r| mult[r]).collect();
        let valencies: Vec<f64> = self.valencies().iter().map(|&v| v as f64).collect();
        let q: Vec<Vec<f64>> = (0..=d)
            .map(|l| {
                (0..=d)
                    .map(|i| mult[i] * p[i][l] / valencies[l])
                    .collect()
            })
            .collect();
        Ok(SchemeSpectrum::Float {
            data: SpectrumData {
                n: n as u64,
                d,
                eigenvalues: p.iter().map(|row| row[1]).collect(),
                p,
                q,
                multiplicities: mult,
                valencies,
            },
            tolerance,
        })
    }

    /// Definitional Krein cross-check: expand E_i o E_j in the idempotent
    /// basis and compare with the closed-form tensor, entrywise within
    /// tolerance. Returns the max absolute deviation.
    pub fn krein_definitional_check(
        &self,
        spec: &SchemeSpectrum,
        tensor_f64: &[Vec<Vec<f64>>],
    ) -> Result<f64, SchemeError> {
        if self.n > 200 {
            return Err(SchemeError::TooLarge(self.n));
        }
        let (q, d, n) = match spec {
            SchemeSpectrum::Float { data, .. } => (&data.q, data.d, self.n),
            SchemeSpectrum::Exact(data) => {
                return self.krein_definitional_check(
                    &SchemeSpectrum::Float {
                        data: SpectrumData {
                            n: data.n,
                            d: data.d,
                            eigenvalues: data.eigenvalues.iter().map(Scalar::to_f64).collect(),
                            p: data
                                .p
                                .iter()
                                .map(|r| r.iter().map(Scalar::to_f64).collect())
                                .collect(),
                            q: data
                                .q
                                .iter()
                                .map(|r| r.iter().map(Scalar::to_f64).collect())
                                .collect(),
                            multiplicities: data
                                .multiplicities
                                .iter()
                                .map(Scalar::to_f64)
                                .collect(),
                            valencies: data.valencies.iter().map(Scalar::to_f64).collect(),
                        },
                        tolerance: 1e-9,
                    },
                    tensor_f64,
                )
            }
        };
        // E_i[x][y] = (1/n) Q[rel_of[x][y]][i]
        let e = |i: usize, x: usize, y: usize| q[self.rel_of[x][y]][i] / n as f64;
        let mut max_dev = 0.0f64;
        for i in 0..=d {
            for j in 0..=d {
                for x in 0..n {
                    for y in 0..n {
                        let lhs = e(i, x, y) * e(j, x, y);
                        let mut rhs = 0.0;
                        for k in 0..=d {
                            rhs += tensor_f64[i][j][k] * e(k, x, y);
                        }
                        rhs /= n as f64;
                        max_dev = max_dev.max((lhs - rhs).abs());
                    }
                }
            }
        }
        Ok(max_dev)
    }
}
