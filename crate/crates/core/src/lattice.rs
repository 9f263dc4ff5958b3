//! Small dense integer linear algebra: determinants, unimodular inverses,
//! lattice kernels and Hermite normal form.
//!
//! Matrices are row-major `Vec<Vec<i64>>`. Everything here is exact; sizes are
//! tiny (a handful of rows), so clarity wins over asymptotics.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<i64>>;

type Q = Ratio<i128>;

pub fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

pub fn transpose(m: &[Vec<i64>]) -> IntMatrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j]).collect()).collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMatrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter().map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect()).collect()
}

pub fn mat_vec(a: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    m.iter().map(|row| row.iter().map(|&x| Q::from_integer(x as i128)).collect()).collect()
}

/// Determinant of a square integer matrix.
pub fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a = to_rational(m);
    let mut d = Q::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return 0;
        };
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        let pivot = a[col][col];
        d *= pivot;
        for r in col + 1..n {
            let f = a[r][col] / pivot;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let sub = f * a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    debug_assert!(d.is_integer());
    d.to_integer() as i64
}

/// Rank over the rationals.
pub fn rank(m: &[Vec<i64>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let mut a = to_rational(m);
    let rows = a.len();
    let cols = a[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let pivot = a[rank][col];
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col] / pivot;
                for c in col..cols {
                    let sub = f * a[rank][c];
                    a[r][c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Inverse of a unimodular integer matrix, or `None` when `|det| != 1`.
pub fn unimodular_inverse(m: &[Vec<i64>]) -> Option<IntMatrix> {
    let n = m.len();
    if det(m).abs() != 1 {
        return None;
    }
    let mut a = to_rational(m);
    let mut inv: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        inv.swap(p, col);
        let pivot = a[col][col];
        for c in 0..n {
            a[col][c] /= pivot;
            inv[col][c] /= pivot;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..n {
                    let (s1, s2) = (f * a[col][c], f * inv[col][c]);
                    a[r][c] -= s1;
                    inv[r][c] -= s2;
                }
            }
        }
    }
    Some(inv.into_iter().map(|row| row.into_iter().map(|x| x.to_integer() as i64).collect()).collect())
}

/// Solve `m * x = b` over the rationals for square invertible `m`.
pub fn solve_rational(m: &[Vec<i64>], b: &[i64]) -> Option<Vec<Ratio<i128>>> {
    let n = m.len();
    let mut a = to_rational(m);
    let mut rhs: Vec<Q> = b.iter().map(|&x| Q::from_integer(x as i128)).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        rhs.swap(p, col);
        let pivot = a[col][col];
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col] / pivot;
                for c in col..n {
                    let sub = f * a[col][c];
                    a[r][c] -= sub;
                }
                let sub = f * rhs[col];
                rhs[r] -= sub;
            }
        }
    }
    Some((0..n).map(|i| rhs[i] / a[i][i]).collect())
}

/// Bring `rows` into row echelon form using only unimodular row operations,
/// applying the same operations to `companion`. Returns the pivot columns.
fn unimodular_echelon(rows: &mut [Vec<i64>], companion: &mut [Vec<i64>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == nrows {
            break;
        }
        loop {
            // smallest nonzero absolute value at or below `top` becomes the pivot
            let best = (top..nrows).filter(|&r| rows[r][col] != 0).min_by_key(|&r| rows[r][col].abs());
            let Some(best) = best else { break };
            rows.swap(top, best);
            companion.swap(top, best);
            let mut done = true;
            for r in top + 1..nrows {
                if rows[r][col] != 0 {
                    let q = Integer::div_floor(&rows[r][col], &rows[top][col]);
                    for c in 0..ncols {
                        rows[r][c] -= q * rows[top][c];
                    }
                    for c in 0..companion[r].len() {
                        companion[r][c] -= q * companion[top][c];
                    }
                    if rows[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if rows[top][col] != 0 {
            pivots.push(col);
            top += 1;
        }
    }
    pivots
}

/// Lattice basis of `{x in Z^n : m x = 0}` for an `k x n` matrix `m`.
///
/// The basis is returned as rows. It spans the saturated kernel lattice.
pub fn integer_kernel(m: &[Vec<i64>]) -> IntMatrix {
    let n = if m.is_empty() { 0 } else { m[0].len() };
    let mut rows = transpose(m);
    if rows.is_empty() {
        rows = vec![Vec::new(); n];
    }
    let mut comp = identity(n);
    let pivots = unimodular_echelon(&mut rows, &mut comp);
    comp.into_iter().skip(pivots.len()).collect()
}

/// Row Hermite normal form of a full-row-rank integer matrix: upper echelon,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`.
pub fn row_hnf(m: &[Vec<i64>]) -> IntMatrix {
    let mut rows: IntMatrix = m.to_vec();
    let mut dummy: IntMatrix = vec![Vec::new(); rows.len()];
    let pivots = unimodular_echelon(&mut rows, &mut dummy);
    for (i, &pc) in pivots.iter().enumerate() {
        if rows[i][pc] < 0 {
            for x in rows[i].iter_mut() {
                *x = -*x;
            }
        }
        let p = rows[i][pc];
        for above in 0..i {
            let q = Integer::div_floor(&rows[above][pc], &p);
            if q != 0 {
                for c in 0..rows[above].len() {
                    rows[above][c] -= q * rows[i][c];
                }
            }
        }
    }
    rows.truncate(pivots.len());
    rows
}

/// A unimodular matrix whose first column is the primitive vector `v`.
pub fn complete_to_basis(v: &[i64]) -> Option<IntMatrix> {
    if gcd_slice(v) != 1 {
        return None;
    }
    let n = v.len();
    // W v = e_1 with W unimodular; the answer is W^{-1}.
    let mut col: Vec<Vec<i64>> = v.iter().map(|&x| vec![x]).collect();
    let mut w = identity(n);
    unimodular_echelon(&mut col, &mut w);
    if col[0][0] < 0 {
        col[0][0] = -col[0][0];
        for x in w[0].iter_mut() {
            *x = -*x;
        }
    }
    debug_assert_eq!(col[0][0], 1);
    unimodular_inverse(&w)
}

pub fn is_nonneg_integer(x: &Ratio<i128>) -> bool {
    x.is_integer() && !x.is_negative()
}
