//! Exact integer linear algebra for the intersection form.

use crate::diagram::CurveConfiguration;

/// Intersection matrix of a configuration: `M[i][i] = -2`,
/// `M[i][j] = 1` exactly when `{i, j}` is an edge. Rows and columns follow
/// the sorted vertex order of the configuration.
pub fn intersection_matrix(config: &CurveConfiguration) -> Vec<Vec<i64>> {
    let vertices = config.vertices();
    let n = vertices.len();
    let mut m = vec![vec![0i64; n]; n];
    for (i, &v) in vertices.iter().enumerate() {
        m[i][i] = config.self_intersection(v);
    }
    for (a, b) in config.edges() {
        let i = config.index_of(a).expect("edge endpoint is a vertex");
        let j = config.index_of(b).expect("edge endpoint is a vertex");
        m[i][j] = 1;
        m[j][i] = 1;
    }
    m
}

/// Exact determinant by fraction-free (Bareiss) elimination with row swaps.
pub(crate) fn determinant(matrix: &[Vec<i128>]) -> i128 {
    let n = matrix.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = matrix.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Decide negative definiteness of the intersection form by exact integer
/// arithmetic: every leading principal minor of `-M` must be positive
/// (Sylvester's criterion). No floating point is involved.
pub fn is_negative_definite(config: &CurveConfiguration) -> bool {
    let m = intersection_matrix(config);
    let n = m.len();
    for k in 1..=n {
        let minor: Vec<Vec<i128>> = (0..k)
            .map(|i| (0..k).map(|j| -(m[i][j] as i128)).collect())
            .collect();
        if determinant(&minor) <= 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{ade_types_up_to, build_ade, AdeType, Family};

    /// Independent oracle: recursive cofactor expansion along the first row.
    fn cofactor_determinant(m: &[Vec<i128>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return m[0][0];
        }
        let mut det = 0;
        for (j, &entry) in m[0].iter().enumerate() {
            if entry == 0 {
                continue;
            }
            let sub: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter_map(|(c, &x)| (c != j).then_some(x))
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            det += sign * entry * cofactor_determinant(&sub);
        }
        det
    }

    fn negated_matrix(t: AdeType) -> Vec<Vec<i128>> {
        intersection_matrix(&build_ade(t))
            .iter()
            .map(|row| row.iter().map(|&x| -(x as i128)).collect())
            .collect()
    }

    #[test]
    fn small_matrices() {
        let a1 = intersection_matrix(&build_ade(AdeType::a(1).unwrap()));
        assert_eq!(a1, vec![vec![-2]]);
        let a2 = intersection_matrix(&build_ade(AdeType::a(2).unwrap()));
        assert_eq!(a2, vec![vec![-2, 1], vec![1, -2]]);
    }

    #[test]
    fn determinant_table() {
        // det(-M): A(n) = n+1, D(n) = 4, E6 = 3, E7 = 2, E8 = 1.
        for t in ade_types_up_to(20) {
            let expected = match t.family() {
                Family::A => t.rank() as i128 + 1,
                Family::D => 4,
                Family::E => match t.rank() {
                    6 => 3,
                    7 => 2,
                    _ => 1,
                },
            };
            assert_eq!(determinant(&negated_matrix(t)), expected, "det(-M) for {t}");
        }
    }

    #[test]
    fn determinant_matches_cofactor_oracle() {
        for t in ade_types_up_to(9) {
            let m = negated_matrix(t);
            assert_eq!(determinant(&m), cofactor_determinant(&m), "{t}");
        }
        // Also on a singular matrix (the 3-cycle below has det 0).
        let cycle = CurveConfiguration::from_edges(&[1, 2, 3], &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let m: Vec<Vec<i128>> = intersection_matrix(&cycle)
            .iter()
            .map(|row| row.iter().map(|&x| -(x as i128)).collect())
            .collect();
        assert_eq!(determinant(&m), 0);
        assert_eq!(cofactor_determinant(&m), 0);
    }

    use crate::diagram::CurveConfiguration;

    #[test]
    fn ade_is_negative_definite() {
        for t in ade_types_up_to(20) {
            assert!(is_negative_definite(&build_ade(t)), "{t}");
        }
    }

    #[test]
    fn cycle_graph_is_not_negative_definite() {
        let cycle = CurveConfiguration::from_edges(&[1, 2, 3], &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(!is_negative_definite(&cycle));
    }

    #[test]
    fn affine_patterns_are_not_negative_definite() {
        // One arm longer than E8 allows: arms {1,2,5}.
        let e8_affine = CurveConfiguration::from_edges(
            &[1, 2, 3, 4, 5, 6, 7, 8, 9],
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (3, 9)],
        )
        .unwrap();
        assert!(!is_negative_definite(&e8_affine));
        // Arms {2,2,2}: affine E6 pattern.
        let e6_affine = CurveConfiguration::from_edges(
            &[1, 2, 3, 4, 5, 6, 7],
            &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7)],
        )
        .unwrap();
        assert!(!is_negative_definite(&e6_affine));
    }
}
