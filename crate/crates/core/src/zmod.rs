//! Linear systems over `Z_M` by unimodular diagonalisation.

use num_integer::Integer;

/// Solves `A x ≡ b (mod m)` for a dense integer matrix `A` (row-major,
/// `rows × cols`). Returns one solution with entries in `0..m`, or `None`
/// when the system is inconsistent.
pub fn solve_mod(a: &[Vec<i64>], b: &[i64], cols: usize, m: u64) -> Option<Vec<u64>> {
    assert!(m > 0);
    assert_eq!(a.len(), b.len());
    let m = m as i128;
    let rows = a.len();
    let red = |v: i128| v.rem_euclid(m);
    let mut mat: Vec<Vec<i128>> = a
        .iter()
        .map(|row| {
            assert_eq!(row.len(), cols);
            row.iter().map(|&v| red(v as i128)).collect()
        })
        .collect();
    let mut rhs: Vec<i128> = b.iter().map(|&v| red(v as i128)).collect();
    // column operations are mirrored into v so that x = v·y
    let mut v: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();

    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // bring some nonzero entry of the remaining block to (t, t)
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .find(|&(i, j)| mat[i][j] != 0)
        else {
            break;
        };
        mat.swap(t, pi);
        rhs.swap(t, pi);
        for row in mat.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if mat[i][t] == 0 {
                    continue;
                }
                let (p, q) = (mat[t][t], mat[i][t]);
                let (g, s, u) = bezout(p, q);
                let (pg, qg) = (p / g, q / g);
                for j in t..cols {
                    let (x, y) = (mat[t][j], mat[i][j]);
                    mat[t][j] = red(s * x + u * y);
                    mat[i][j] = red(-qg * x + pg * y);
                }
                let (x, y) = (rhs[t], rhs[i]);
                rhs[t] = red(s * x + u * y);
                rhs[i] = red(-qg * x + pg * y);
                changed = true;
            }
            for j in t + 1..cols {
                if mat[t][j] == 0 {
                    continue;
                }
                let (p, q) = (mat[t][t], mat[t][j]);
                let (g, s, u) = bezout(p, q);
                let (pg, qg) = (p / g, q / g);
                for i in t..rows {
                    let (x, y) = (mat[i][t], mat[i][j]);
                    mat[i][t] = red(s * x + u * y);
                    mat[i][j] = red(-qg * x + pg * y);
                }
                for row in v.iter_mut() {
                    let (x, y) = (row[t], row[j]);
                    row[t] = red(s * x + u * y);
                    row[j] = red(-qg * x + pg * y);
                }
                changed = true;
            }
            if !changed {
                break;
            }
        }
        if mat[t][t] == 0 {
            // the pivot vanished mod m; nothing left in this row or column
            continue;
        }
        diag.push(mat[t][t]);
        t += 1;
    }

    let mut y = vec![0i128; cols];
    for i in 0..rows {
        let d = diag.get(i).copied().unwrap_or(0);
        let c = rhs[i];
        if d == 0 {
            if c != 0 {
                return None;
            }
            continue;
        }
        let g = d.gcd(&m);
        if c % g != 0 {
            return None;
        }
        let mg = m / g;
        let inv = (d / g).extended_gcd(&mg).x.rem_euclid(mg);
        y[i] = ((c / g) * inv).rem_euclid(mg);
    }
    Some(
        (0..cols)
            .map(|i| red((0..cols).map(|j| v[i][j] * y[j]).sum::<i128>()) as u64)
            .collect(),
    )
}

/// `(g, s, u)` with `s·p + u·q = g = gcd(p, q)`, preferring `(1, 0)` when
/// `p` already divides `q` so the pivot row is left untouched.
fn bezout(p: i128, q: i128) -> (i128, i128, i128) {
    if p != 0 && q % p == 0 {
        return (p, 1, 0);
    }
    let e = p.extended_gcd(&q);
    (e.gcd, e.x, e.y)
}
