//! Exact linear algebra for the Lie pipelines. Elimination is
//! fraction-free in the style of Bareiss: rational rows are first
//! scaled to integers, and each elimination step divides by the
//! previous pivot, which is an exact division. Pivoting is
//! deterministic: columns left to right, and within a column the
//! smallest remaining row index. The same single-step update is used
//! for prime fields, where divisions are ordinary field divisions.

use num::integer::lcm;
use num::BigInt;
use num::One;

use super::scalar::{rational_denominator, scale_by_int, Field, K};

pub type KVec = Vec<K>;

pub fn kzeros(field: Field, n: usize) -> KVec {
    vec![field.zero(); n]
}

pub fn vec_is_zero(v: &[K]) -> bool {
    v.iter().all(K::is_zero)
}

pub fn vec_add(a: &[K], b: &[K]) -> KVec {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &[K], b: &[K]) -> KVec {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale(c: &K, v: &[K]) -> KVec {
    v.iter().map(|x| c.mul(x)).collect()
}

/// Scales every rational row to integer entries; prime-field rows are
/// untouched. Row scaling preserves the row space and the kernel.
fn integral_rows(field: Field, rows: &[KVec]) -> Vec<KVec> {
    match field {
        Field::Fp(_) => rows.to_vec(),
        Field::Q => rows
            .iter()
            .map(|row| {
                let mut m = BigInt::one();
                for k in row {
                    m = lcm(m, rational_denominator(k).expect("rational row"));
                }
                row.iter().map(|k| scale_by_int(k, &m)).collect()
            })
            .collect(),
    }
}

/// Fraction-free row echelon form. Returns the reduced rows together
/// with the pivot positions as (row, column) pairs.
pub fn echelon(field: Field, rows: &[KVec], vars: usize) -> (Vec<KVec>, Vec<(usize, usize)>) {
    let mut m = integral_rows(field, rows);
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev = field.one();
    let mut rank = 0;
    for col in 0..vars {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][col].clone();
        for r in rank + 1..m.len() {
            let factor = m[r][col].clone();
            for c in col..vars {
                let t = piv.mul(&m[r][c]).sub(&factor.mul(&m[rank][c]));
                m[r][c] = t.div(&prev);
            }
        }
        pivots.push((rank, col));
        prev = piv;
        rank += 1;
    }
    m.truncate(rank);
    (m, pivots)
}

pub fn rank(field: Field, rows: &[KVec], vars: usize) -> usize {
    echelon(field, rows, vars).1.len()
}

/// Canonical basis of { x : rows . x = 0 }: one vector per free
/// column, with 1 in the free slot and pivot entries back-substituted.
pub fn nullspace(field: Field, rows: &[KVec], vars: usize) -> Vec<KVec> {
    let (m, pivots) = echelon(field, rows, vars);
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..vars {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = kzeros(field, vars);
        v[free] = field.one();
        for &(r, pc) in pivots.iter().rev() {
            if pc > free {
                continue;
            }
            let mut acc = field.zero();
            for c in pc + 1..vars {
                if !v[c].is_zero() {
                    acc = acc.add(&m[r][c].mul(&v[c]));
                }
            }
            v[pc] = acc.neg().div(&m[r][pc]);
        }
        basis.push(v);
    }
    basis
}

pub fn same_span(field: Field, a: &[KVec], b: &[KVec], vars: usize) -> bool {
    let ra = rank(field, a, vars);
    let rb = rank(field, b, vars);
    if ra != rb {
        return false;
    }
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    rank(field, &both, vars) == ra
}

pub fn in_span(field: Field, basis: &[KVec], v: &[K]) -> bool {
    let r = rank(field, basis, v.len());
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    rank(field, &all, v.len()) == r
}

/// Solves sum_j c_j basis[j] = v for a linearly independent basis;
/// None when v is outside the span.
pub fn coords_in_span(field: Field, basis: &[KVec], v: &[K]) -> Option<KVec> {
    let n = v.len();
    let k = basis.len();
    // Ambient coordinates give the equations, the c_j are unknowns.
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = kzeros(field, k + 1);
        for (j, b) in basis.iter().enumerate() {
            row[j] = b[i].clone();
        }
        row[k] = v[i].clone();
        rows.push(row);
    }
    let solution = solve_particular(field, &rows, k)?;
    Some(solution)
}

/// A particular solution of the augmented system rows = [A | b],
/// setting free variables to zero; None when inconsistent.
pub fn solve_particular(field: Field, augmented: &[KVec], vars: usize) -> Option<KVec> {
    let (m, pivots) = echelon(field, augmented, vars + 1);
    // A pivot in the right-hand column marks inconsistency.
    if pivots.iter().any(|&(_, c)| c == vars) {
        return None;
    }
    let mut x = kzeros(field, vars);
    for &(r, pc) in pivots.iter().rev() {
        let mut acc = m[r][vars].clone();
        for c in pc + 1..vars {
            if !x[c].is_zero() {
                acc = acc.sub(&m[r][c].mul(&x[c]));
            }
        }
        x[pc] = acc.div(&m[r][pc]);
    }
    Some(x)
}

/// Deterministically extends `inner` to a basis of span(inner ∪ pool):
/// returns the pool vectors that enlarge the span, in pool order.
pub fn extend_basis(field: Field, inner: &[KVec], pool: &[KVec], vars: usize) -> Vec<KVec> {
    let mut current: Vec<KVec> = inner.to_vec();
    let mut r = rank(field, &current, vars);
    let mut picked = Vec::new();
    for v in pool {
        current.push(v.clone());
        let nr = rank(field, &current, vars);
        if nr > r {
            r = nr;
            picked.push(v.clone());
        } else {
            current.pop();
        }
    }
    picked
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(entries: &[i64]) -> KVec {
        entries.iter().map(|&n| Field::Q.from_i64(n)).collect()
    }

    #[test]
    fn nullspace_of_plane_in_three_space() {
        // x + y + z = 0, x - z = 0 -> kernel spanned by (1, -2, 1).
        let rows = vec![qv(&[1, 1, 1]), qv(&[1, 0, -1])];
        let basis = nullspace(Field::Q, &rows, 3);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        for row in &rows {
            let dot = row
                .iter()
                .zip(v)
                .fold(Field::Q.zero(), |acc, (a, b)| acc.add(&a.mul(b)));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn fraction_free_pivots_stay_exact_with_fractions_in_input() {
        let half = Field::Q.from_i64(1).div(&Field::Q.from_i64(2));
        let third = Field::Q.from_i64(1).div(&Field::Q.from_i64(3));
        let rows = vec![
            vec![half.clone(), Field::Q.one(), Field::Q.zero()],
            vec![third.clone(), Field::Q.one(), Field::Q.one()],
        ];
        assert_eq!(rank(Field::Q, &rows, 3), 2);
        assert_eq!(nullspace(Field::Q, &rows, 3).len(), 1);
    }

    #[test]
    fn prime_field_rank_and_kernel() {
        let f = Field::Fp(5);
        let rows = vec![
            vec![f.from_i64(2), f.from_i64(1), f.from_i64(0)],
            vec![f.from_i64(4), f.from_i64(2), f.from_i64(0)],
        ];
        assert_eq!(rank(f, &rows, 3), 1);
        assert_eq!(nullspace(f, &rows, 3).len(), 2);
    }

    #[test]
    fn span_comparison_and_membership() {
        let a = vec![qv(&[1, 0, 1]), qv(&[0, 1, 0])];
        let b = vec![qv(&[1, 1, 1]), qv(&[1, -1, 1])];
        assert!(same_span(Field::Q, &a, &b, 3));
        assert!(in_span(Field::Q, &a, &qv(&[2, 3, 2])));
        assert!(!in_span(Field::Q, &a, &qv(&[0, 0, 1])));
    }

    #[test]
    fn coordinates_in_a_basis() {
        let basis = vec![qv(&[1, 0, 1]), qv(&[0, 2, 0])];
        let c = coords_in_span(Field::Q, &basis, &qv(&[3, 4, 3])).unwrap();
        assert_eq!(c[0], Field::Q.from_i64(3));
        assert_eq!(c[1], Field::Q.from_i64(2));
        assert!(coords_in_span(Field::Q, &basis, &qv(&[0, 0, 5])).is_none());
    }

    #[test]
    fn particular_solutions_set_free_variables_to_zero() {
        // x + y = 3 with y free -> (3, 0).
        let rows = vec![qv(&[1, 1, 3])];
        let x = solve_particular(Field::Q, &rows, 2).unwrap();
        assert_eq!(x, qv(&[3, 0]));
        // Inconsistent: 0 = 1.
        assert!(solve_particular(Field::Q, &vec![qv(&[0, 0, 1])], 2).is_none());
    }

    #[test]
    fn basis_extension_is_deterministic() {
        let inner = vec![qv(&[1, 0, 0])];
        let pool = vec![qv(&[1, 1, 0]), qv(&[0, 1, 0]), qv(&[0, 0, 1])];
        let picked = extend_basis(Field::Q, &inner, &pool, 3);
        assert_eq!(picked, vec![qv(&[1, 1, 0]), qv(&[0, 0, 1])]);
    }
}
