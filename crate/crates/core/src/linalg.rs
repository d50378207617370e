//! Dense complex linear algebra helpers on top of nalgebra.

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;
pub type CMat = DMatrix<C64>;

/// Tolerance for structural identities on inputs.
pub const TOL_STRUCT: f64 = 1e-9;
/// Tolerance for derived integers such as dimensions and multiplicities.
pub const TOL_INT: f64 = 1e-7;
/// Tolerance for the per-element scans over a code.
pub const TOL_SCAN: f64 = 1e-8;
/// Relative singular-value cutoff for nullspaces and ranks.
pub const SVD_REL: f64 = 1e-8;

pub fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

pub fn frob(m: &CMat) -> f64 {
    m.norm()
}

pub fn trace(m: &CMat) -> C64 {
    m.trace()
}

pub fn adjoint(m: &CMat) -> CMat {
    m.adjoint()
}

pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

/// `‖M M* − I‖_F`
pub fn unitarity_defect(m: &CMat) -> f64 {
    if !m.is_square() {
        return f64::INFINITY;
    }
    frob(&(m * m.adjoint() - identity(m.nrows())))
}

/// `Some(c)` when `m` is within `tol` of `c·I`, with `c = tr(m)/dim`.
pub fn scalar_part(m: &CMat, tol: f64) -> Option<C64> {
    let n = m.nrows();
    let c = m.trace() / n as f64;
    (frob(&(m - identity(n) * c)) < tol).then_some(c)
}

fn padded_svd(a: &CMat) -> (Vec<f64>, CMat) {
    let (r, cols) = a.shape();
    let a = if r < cols {
        let mut p = CMat::zeros(cols, cols);
        p.view_mut((0, 0), (r, cols)).copy_from(a);
        p
    } else {
        a.clone()
    };
    let svd = a.svd(false, true);
    let vt = svd.v_t.expect("requested v_t");
    (svd.singular_values.iter().copied().collect(), vt)
}

/// Orthonormal basis (as columns) of `{v : A v = 0}`, cutting singular
/// values below `SVD_REL · σ_max`.
pub fn nullspace(a: &CMat) -> CMat {
    let cols = a.ncols();
    if cols == 0 {
        return CMat::zeros(0, 0);
    }
    if a.nrows() == 0 {
        return identity(cols);
    }
    let (sv, vt) = padded_svd(a);
    let smax = sv.iter().copied().fold(0.0, f64::max);
    let cut = SVD_REL * smax;
    let keep: Vec<usize> = (0..sv.len()).filter(|&i| smax == 0.0 || sv[i] <= cut).collect();
    let mut out = CMat::zeros(cols, keep.len());
    for (k, &i) in keep.iter().enumerate() {
        for j in 0..cols {
            out[(j, k)] = vt[(i, j)].conj();
        }
    }
    out
}

/// Orthonormal basis of the column space of `a`.
pub fn column_space(a: &CMat) -> CMat {
    let (rows, cols) = a.shape();
    if cols == 0 || rows == 0 {
        return CMat::zeros(rows, 0);
    }
    let svd = a.clone().svd(true, false);
    let u = svd.u.expect("requested u");
    let sv = &svd.singular_values;
    let smax = sv.iter().copied().fold(0.0, f64::max);
    let keep: Vec<usize> = (0..sv.len()).filter(|&i| smax > 0.0 && sv[i] > SVD_REL * smax).collect();
    let mut out = CMat::zeros(rows, keep.len());
    for (k, &i) in keep.iter().enumerate() {
        out.set_column(k, &u.column(i));
    }
    out
}

pub fn rank(a: &CMat) -> usize {
    if a.nrows() == 0 || a.ncols() == 0 {
        return 0;
    }
    let sv = a.clone().svd(false, false).singular_values;
    let smax = sv.iter().copied().fold(0.0, f64::max);
    sv.iter().filter(|&&s| smax > 0.0 && s > SVD_REL * smax).count()
}

/// Nearest nonnegative integer, failing when the distance exceeds `tol`.
pub fn snap_count(x: f64, tol: f64) -> Result<usize> {
    let r = x.round();
    if (x - r).abs() > tol || r < 0.0 {
        return Err(Error::SnapFailure(x));
    }
    Ok(r as usize)
}

/// Column-stacking `vec` of a matrix.
pub fn vectorize(m: &CMat) -> DVector<C64> {
    DVector::from_iterator(m.len(), m.iter().copied())
}

pub fn unvectorize(v: &[C64], rows: usize, cols: usize) -> CMat {
    CMat::from_column_slice(rows, cols, v)
}

/// Matrix from rows of `[re, im]` pairs.
pub fn from_pairs(rows: usize, cols: usize, data: &[[f64; 2]]) -> Result<CMat> {
    if rows.checked_mul(cols) != Some(data.len()) {
        return Err(Error::DimensionMismatch {
            expected: rows.saturating_mul(cols),
            got: data.len(),
        });
    }
    if data.iter().any(|p| !p[0].is_finite() || !p[1].is_finite()) {
        return Err(Error::Precondition("matrix entries must be finite".into()));
    }
    Ok(CMat::from_row_iterator(rows, cols, data.iter().map(|p| c(p[0], p[1]))))
}

/// Row-major `[re, im]` pairs.
pub fn to_pairs(m: &CMat) -> Vec<[f64; 2]> {
    let mut out = Vec::with_capacity(m.len());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let z = m[(i, j)];
            out.push([z.re, z.im]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_rank_one() {
        let a = CMat::from_row_slice(1, 3, &[c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let n = nullspace(&a);
        assert_eq!(n.ncols(), 2);
        assert!(frob(&(&a * &n)) < 1e-12);
        assert!(frob(&(n.adjoint() * &n - identity(2))) < 1e-12);
        assert_eq!(nullspace(&CMat::zeros(2, 2)).ncols(), 2);
        assert_eq!(nullspace(&identity(3)).ncols(), 0);
    }

    #[test]
    fn column_space_and_rank() {
        let a = CMat::from_row_slice(3, 2, &[c(1.0, 0.0), c(2.0, 0.0), c(0.0, 1.0), c(0.0, 2.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(rank(&a), 1);
        let q = column_space(&a);
        assert_eq!(q.ncols(), 1);
        assert!(frob(&(q.adjoint() * &q - identity(1))) < 1e-12);
    }

    #[test]
    fn snapping() {
        assert_eq!(snap_count(2.0 + 1e-9, 1e-7).unwrap(), 2);
        assert!(snap_count(2.4, 1e-7).is_err());
        assert!(snap_count(-1.0, 1e-7).is_err());
    }

    #[test]
    fn pair_round_trip() {
        let m = CMat::from_row_slice(2, 2, &[c(1.0, 2.0), c(3.0, 4.0), c(5.0, 6.0), c(7.0, 8.0)]);
        assert_eq!(from_pairs(2, 2, &to_pairs(&m)).unwrap(), m);
        assert!(from_pairs(2, 2, &[[0.0, 0.0]]).is_err());
    }
}
