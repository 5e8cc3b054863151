//! Smith normal form over the integers for the small dense matrices that
//! describe finite abelian groups.
//!
//! Matrices are row-major `Vec<Vec<i128>>`. The diagonal `d_1 | d_2 | ...`
//! is returned with zeros (if any) at the end.

pub type IntMatrix = Vec<Vec<i128>>;

/// Output of [`smith_form_with_basis`].
#[derive(Debug, Clone)]
pub struct SmithForm {
    /// Diagonal entries, nonnegative, each dividing the next nonzero one.
    pub diagonal: Vec<i128>,
    /// The tracked basis after the inverse column operations were applied to it.
    pub basis: IntMatrix,
}

/// Invariant factors of `m` (the full diagonal, including 1s and trailing zeros).
pub fn invariant_factors(m: &[Vec<i128>]) -> Vec<i128> {
    let cols = m.first().map_or(0, Vec::len);
    let dummy = vec![Vec::new(); cols];
    smith_impl(m.to_vec(), dummy, None).diagonal
}

/// Smith form of `m` together with `V^{-1} * basis`, where `U m V` is diagonal.
///
/// If the rows of `m` express relations among the rows of `basis` (that is,
/// the relation lattice is the row span of `m * basis`), then that lattice is
/// also spanned by `diagonal[i] * result.basis[i]`. `moduli`, when given,
/// reduces column `j` of the tracked basis modulo `moduli[j]` after every step.
pub fn smith_form_with_basis(m: &[Vec<i128>], basis: IntMatrix, moduli: Option<&[i128]>) -> SmithForm {
    let cols = m.first().map_or(basis.len(), Vec::len);
    assert_eq!(cols, basis.len(), "basis must have one row per matrix column");
    smith_impl(m.to_vec(), basis, moduli)
}

fn smith_impl(mut a: IntMatrix, mut basis: IntMatrix, moduli: Option<&[i128]>) -> SmithForm {
    let rows = a.len();
    let cols = a.first().map_or(basis.len(), Vec::len);
    let reduce = |row: &mut Vec<i128>| {
        if let Some(md) = moduli {
            for (x, &q) in row.iter_mut().zip(md) {
                *x = x.rem_euclid(q);
            }
        }
    };
    // column j -= q * column t  (tracked as row_t(basis) += q * row_j(basis))
    let col_sub = |a: &mut IntMatrix, basis: &mut IntMatrix, t: usize, j: usize, q: i128| {
        for row in a.iter_mut() {
            row[j] -= q * row[t];
        }
        if !basis[j].is_empty() {
            let (src, dst) = if t < j {
                let (lo, hi) = basis.split_at_mut(j);
                (&hi[0], &mut lo[t])
            } else {
                let (lo, hi) = basis.split_at_mut(t);
                (&lo[j], &mut hi[0])
            };
            for (d, s) in dst.iter_mut().zip(src) {
                *d += q * s;
            }
            reduce(dst);
        }
    };
    let col_swap = |a: &mut IntMatrix, basis: &mut IntMatrix, i: usize, j: usize| {
        if i != j {
            for row in a.iter_mut() {
                row.swap(i, j);
            }
            basis.swap(i, j);
        }
    };

    let mut diagonal = Vec::new();
    let limit = rows.min(cols);
    let mut t = 0;
    while t < limit {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        col_swap(&mut a, &mut basis, t, bj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    let (top, rest) = a.split_at_mut(i);
                    for (x, y) in rest[0].iter_mut().zip(&top[t]) {
                        *x -= q * y;
                    }
                    if a[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    col_sub(&mut a, &mut basis, t, j, q);
                    if a[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                // pivot must divide the whole trailing block
                let mut fix = None;
                'scan: for i in t + 1..rows {
                    for j in t + 1..cols {
                        if a[i][j] % a[t][t] != 0 {
                            fix = Some(i);
                            break 'scan;
                        }
                    }
                }
                match fix {
                    None => break,
                    Some(i) => {
                        let (top, rest) = a.split_at_mut(i);
                        for (x, y) in top[t].iter_mut().zip(&rest[0]) {
                            *x += y;
                        }
                    }
                }
            }
            // move the smallest nonzero of row t / column t into the pivot
            let mut best = (t, t);
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            } else if best.1 != t {
                col_swap(&mut a, &mut basis, t, best.1);
            }
        }
        if a[t][t] < 0 {
            for x in a[t].iter_mut() {
                *x = -*x;
            }
        }
        diagonal.push(a[t][t]);
        t += 1;
    }
    diagonal.resize(limit, 0);
    for row in basis.iter_mut() {
        if !row.is_empty() {
            reduce(row);
        }
    }
    SmithForm { diagonal, basis }
}
