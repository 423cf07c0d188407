//! Oracle helpers shared by the integration tests. These deliberately
//! avoid the library's own code paths: products are naive triple loops,
//! expansions are materialized 0/1 matrices, and least-squares goes
//! through Gaussian elimination on the normal equations.

use xdproj::{DenseMatrix, Side};

/// Naive triple-loop matrix product.
pub fn naive_matmul(a: &DenseMatrix<f64>, b: &DenseMatrix<f64>) -> DenseMatrix<f64> {
    assert_eq!(a.cols(), b.rows());
    let mut data = vec![0.0; a.rows() * b.cols()];
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            for j in 0..b.cols() {
                data[i * b.cols() + j] += a.get(i, k) * b.get(k, j);
            }
        }
    }
    DenseMatrix::new(a.rows(), b.cols(), data).unwrap()
}

/// The 0/1 matrix `E` with `E x = expand(x, factor, side)`: `Left` sends
/// slot `r` to source entry `r / factor`, `Right` to `r mod dim`.
pub fn expansion_matrix(dim: usize, factor: usize, side: Side) -> DenseMatrix<f64> {
    let rows = dim * factor;
    let mut data = vec![0.0; rows * dim];
    for r in 0..rows {
        let c = match side {
            Side::Left => r / factor,
            Side::Right => r % dim,
        };
        data[r * dim + c] = 1.0;
    }
    DenseMatrix::new(rows, dim, data).unwrap()
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
pub fn gauss_solve(a: &DenseMatrix<f64>, b: &[f64]) -> Vec<f64> {
    let n = a.rows();
    assert_eq!(a.cols(), n);
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row: Vec<f64> = (0..n).map(|j| a.get(i, j)).collect();
            row.push(b[i]);
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&p, &q| m[p][col].abs().partial_cmp(&m[q][col].abs()).unwrap())
            .unwrap();
        m.swap(col, pivot);
        assert!(m[col][col].abs() > 1e-13, "singular system in oracle");
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            for j in col..=n {
                m[row][j] -= f * m[col][j];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = m[row][n];
        for j in row + 1..n {
            acc -= m[row][j] * x[j];
        }
        x[row] = acc / m[row][row];
    }
    x
}

/// Least-squares oracle for projection: minimizes
/// `|expand(x) - E_n y|_2` over `y` by solving the normal equations
/// `(E_n^T E_n) y = E_n^T expand(x)` numerically.
pub fn least_squares_projection(x: &[f64], n: usize, side: Side) -> Vec<f64> {
    let m = x.len();
    let t = lcm(m, n);
    let em = expansion_matrix(m, t / m, side);
    let en = expansion_matrix(n, t / n, side);
    let xt = em.mul_vector(x).unwrap();
    let gram = naive_matmul(&en.transpose(), &en);
    let rhs = en.transpose().mul_vector(&xt).unwrap();
    gauss_solve(&gram, &rhs)
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
