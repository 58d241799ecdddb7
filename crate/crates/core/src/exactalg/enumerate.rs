use alloc::vec;
use alloc::vec::Vec;

use super::subspace::{axpy, rref, Subspace};
use crate::error::{Error, Result};

/// Vectors of `w` completing a basis of `a` to a basis of `w`.
///
/// The choice is the reduced echelon basis of `w` modulo `a`, so its pivots
/// avoid the pivot columns of `a`. When `w` is the whole space this yields
/// the unit vectors at the non-pivot columns of `a`.
pub fn complete_basis(a: &Subspace, w: &Subspace) -> Result<Vec<Vec<u8>>> {
    a.check_compatible(w)?;
    if !w.contains(a) {
        return Err(Error::NotContained);
    }
    let reduced: Vec<Vec<u8>> = w.basis().iter().map(|r| a.reduce(r)).collect();
    Ok(rref(w.field(), reduced, w.ambient()))
}

/// All subspaces `v` with `u ⊆ v ⊆ w`, sorted.
///
/// Subspaces of `w/u` are generated by echelon profile in the coordinates of
/// [`complete_basis`] and pulled back.
pub fn enumerate_subspaces_between(u: &Subspace, w: &Subspace) -> Result<Vec<Subspace>> {
    let complement = complete_basis(u, w)?;
    let field = u.field();
    let k = complement.len();
    let mut out = Vec::new();
    for coords in quotient_profiles(field.p(), k) {
        let mut rows: Vec<Vec<u8>> = u.basis().to_vec();
        for c in coords {
            let mut v = vec![0u8; u.ambient()];
            for (coef, basis_vec) in c.iter().zip(&complement) {
                axpy(field, &mut v, *coef, basis_vec);
            }
            rows.push(v);
        }
        out.push(Subspace::from_rows_unchecked(field, u.ambient(), rows));
    }
    out.sort();
    Ok(out)
}

/// One spanning vector per line of `s` (first nonzero coordinate normalised to 1).
pub fn lines_of(s: &Subspace) -> Vec<Vec<u8>> {
    let field = s.field();
    let p = field.p();
    let d = s.dim();
    let mut out = Vec::new();
    // Coefficient tuples whose leading nonzero entry is 1.
    for lead in 0..d {
        let tail = d - lead - 1;
        let count = (p as usize).pow(tail as u32);
        for idx in 0..count {
            let mut coeffs = vec![0u8; d];
            coeffs[lead] = 1;
            let mut rem = idx;
            for slot in coeffs.iter_mut().skip(lead + 1) {
                *slot = (rem % p as usize) as u8;
                rem /= p as usize;
            }
            let mut v = vec![0u8; s.ambient()];
            for (c, row) in coeffs.iter().zip(s.basis()) {
                axpy(field, &mut v, *c, row);
            }
            out.push(v);
        }
    }
    out
}

/// Echelon-form bases of every subspace of `GF(p)^k`, each as a list of rows.
fn quotient_profiles(p: u8, k: usize) -> Vec<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << k) {
        let pivots: Vec<usize> = (0..k).filter(|&c| mask & (1 << c) != 0).collect();
        // free positions: (row, col) with col > pivot(row) and col not a pivot
        let mut free = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..k {
                if mask & (1 << c) == 0 {
                    free.push((r, c));
                }
            }
        }
        let total = (p as usize).pow(free.len() as u32);
        for idx in 0..total {
            let mut rows: Vec<Vec<u8>> = pivots
                .iter()
                .map(|&pc| {
                    let mut v = vec![0u8; k];
                    v[pc] = 1;
                    v
                })
                .collect();
            let mut rem = idx;
            for &(r, c) in &free {
                rows[r][c] = (rem % p as usize) as u8;
                rem /= p as usize;
            }
            out.push(rows);
        }
    }
    out
}
