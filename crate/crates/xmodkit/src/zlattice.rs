//! Exact integer linear algebra: Hermite and Smith normal forms with
//! tracked unimodular transforms, integer kernels and solves, and
//! finitely generated quotients of integer lattices.
//!
//! Everything operates on dense `BigInt` matrices, so there is no
//! overflow anywhere; determinism comes from a fixed pivot rule
//! (minimal absolute value, then smallest row/column index).

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

pub type Mat = Vec<Vec<BigInt>>;

pub fn zeros(rows: usize, cols: usize) -> Mat {
    vec![vec![BigInt::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    m
}

pub fn from_i64(rows: &[Vec<i64>]) -> Mat {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let rows = a.len();
    let inner = if rows > 0 { a[0].len() } else { 0 };
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    assert_eq!(inner, b.len(), "inner dimensions must agree");
    let mut out = zeros(rows, cols);
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                let t = &a[i][k] * &b[k][j];
                out[i][j] += t;
            }
        }
    }
    out
}

pub fn mat_vec(a: &Mat, v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(c, x)| c * x).sum())
        .collect()
}

pub fn transpose(a: &Mat) -> Mat {
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    let mut out = zeros(cols, rows);
    for (i, row) in a.iter().enumerate() {
        for (j, val) in row.iter().enumerate() {
            out[j][i] = val.clone();
        }
    }
    out
}

/// Smith normal form `u·a·v = d` with `d` diagonal, each diagonal
/// entry nonnegative and dividing the next. All four transforms are
/// unimodular and tracked exactly.
pub struct Smith {
    pub d: Mat,
    pub u: Mat,
    pub u_inv: Mat,
    pub v: Mat,
    pub v_inv: Mat,
    pub rank: usize,
}

struct Worker {
    d: Mat,
    u: Mat,
    u_inv: Mat,
    v: Mat,
    v_inv: Mat,
    rows: usize,
    cols: usize,
}

impl Worker {
    fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.d.swap(i, j);
        self.u.swap(i, j);
        for r in self.u_inv.iter_mut() {
            r.swap(i, j);
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in self.d.iter_mut() {
            r.swap(i, j);
        }
        for r in self.v.iter_mut() {
            r.swap(i, j);
        }
        self.v_inv.swap(i, j);
    }

    /// row i += k·row j, consistently across d, u, u_inv.
    fn row_add(&mut self, i: usize, j: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let t = k * &self.d[j][c];
            self.d[i][c] += t;
        }
        for c in 0..self.rows {
            let t = k * &self.u[j][c];
            self.u[i][c] += t;
        }
        for r in 0..self.rows {
            let t = k * &self.u_inv[r][i];
            self.u_inv[r][j] -= t;
        }
    }

    /// col j += k·col i, consistently across d, v, v_inv.
    fn col_add(&mut self, j: usize, i: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let t = k * &self.d[r][i];
            self.d[r][j] += t;
        }
        for r in 0..self.cols {
            let t = k * &self.v[r][i];
            self.v[r][j] += t;
        }
        for c in 0..self.cols {
            let t = k * &self.v_inv[j][c];
            self.v_inv[i][c] -= t;
        }
    }

    fn row_negate(&mut self, i: usize) {
        for c in 0..self.cols {
            let t = -self.d[i][c].clone();
            self.d[i][c] = t;
        }
        for c in 0..self.rows {
            let t = -self.u[i][c].clone();
            self.u[i][c] = t;
        }
        for r in 0..self.rows {
            let t = -self.u_inv[r][i].clone();
            self.u_inv[r][i] = t;
        }
    }
}

pub fn smith(a: &Mat) -> Smith {
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    let mut w = Worker {
        d: a.clone(),
        u: identity(rows),
        u_inv: identity(rows),
        v: identity(cols),
        v_inv: identity(cols),
        rows,
        cols,
    };
    let mut t = 0;
    while t < rows.min(cols) {
        // Deterministic pivot: minimal |value| in the trailing block,
        // ties resolved by smallest (row, col).
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if w.d[i][j].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => w.d[i][j].abs() < w.d[pi][pj].abs(),
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        loop {
            // Clear the pivot column.
            let mut dirty = false;
            for i in t + 1..rows {
                if w.d[i][t].is_zero() {
                    continue;
                }
                let q = &w.d[i][t] / &w.d[t][t];
                w.row_add(i, t, &(-q));
                if !w.d[i][t].is_zero() {
                    // Remainder is strictly smaller; promote it.
                    w.row_swap(t, i);
                    dirty = true;
                }
            }
            // Clear the pivot row.
            for j in t + 1..cols {
                if w.d[t][j].is_zero() {
                    continue;
                }
                let q = &w.d[t][j] / &w.d[t][t];
                w.col_add(j, t, &(-q));
                if !w.d[t][j].is_zero() {
                    w.col_swap(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Divisibility sweep: every trailing entry must be a
            // multiple of the pivot.
            let mut offender: Option<usize> = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&w.d[i][j] % &w.d[t][t]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    w.row_add(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if w.d[t][t].is_negative() {
            w.row_negate(t);
        }
        t += 1;
    }
    let rank = (0..rows.min(cols)).take_while(|&i| !w.d[i][i].is_zero()).count();
    Smith { d: w.d, u: w.u, u_inv: w.u_inv, v: w.v, v_inv: w.v_inv, rank }
}

/// Basis of {x ∈ ℤⁿ : a·x = 0} via tracked column echelon reduction.
/// Pivot columns are swapped into a prefix; the trailing transform
/// columns then span the kernel. Cheaper than a full Smith pass on the
/// large, sparse systems the cohomology pipeline produces.
pub fn integer_kernel(a: &Mat) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    if rows == 0 || cols == 0 {
        return identity(cols).into_iter().collect();
    }
    let mut d = a.clone();
    let mut v = identity(cols);
    let col_swap = |d: &mut Mat, v: &mut Mat, i: usize, j: usize| {
        if i != j {
            for r in d.iter_mut() {
                r.swap(i, j);
            }
            for r in v.iter_mut() {
                r.swap(i, j);
            }
        }
    };
    let mut lead = 0;
    for r in 0..rows {
        if lead == cols {
            break;
        }
        loop {
            // Deterministic pivot: minimal |value| among the open
            // columns of this row, ties to the leftmost.
            let mut pivot: Option<usize> = None;
            for j in lead..cols {
                if d[r][j].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some(p) => d[r][j].abs() < d[r][p].abs(),
                };
                if better {
                    pivot = Some(j);
                }
            }
            let Some(p) = pivot else { break };
            col_swap(&mut d, &mut v, lead, p);
            let mut clean = true;
            for j in lead + 1..cols {
                if d[r][j].is_zero() {
                    continue;
                }
                let q = &d[r][j] / &d[r][lead];
                if !q.is_zero() {
                    for row in d.iter_mut().skip(r) {
                        let t = &q * &row[lead];
                        row[j] -= t;
                    }
                    for row in v.iter_mut() {
                        let t = &q * &row[lead];
                        row[j] -= t;
                    }
                }
                if !d[r][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                lead += 1;
                break;
            }
        }
    }
    (lead..cols)
        .map(|j| (0..cols).map(|i| v[i][j].clone()).collect())
        .collect()
}

/// One integer solution of a·x = b, if any.
pub fn solve(a: &Mat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    assert_eq!(b.len(), rows);
    let s = smith(a);
    let y = mat_vec(&s.u, b);
    let mut z = vec![BigInt::zero(); cols];
    for (i, yi) in y.iter().enumerate() {
        if i < s.rank {
            let (q, r) = yi.div_rem(&s.d[i][i]);
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        } else if !yi.is_zero() {
            return None;
        }
    }
    Some(mat_vec(&s.v, &z))
}

/// Row-style Hermite reduction: returns a canonical basis (as rows)
/// of the lattice spanned by the input rows.
pub fn hnf_basis(gens: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if gens.is_empty() {
        return Vec::new();
    }
    let cols = gens[0].len();
    let mut m: Mat = gens.to_vec();
    let mut top = 0;
    for col in 0..cols {
        loop {
            // Minimal |nonzero| entry in this column at or below `top`.
            let mut pivot: Option<usize> = None;
            for (i, row) in m.iter().enumerate().skip(top) {
                if row[col].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some(p) => row[col].abs() < m[p][col].abs(),
                };
                if better {
                    pivot = Some(i);
                }
            }
            let Some(p) = pivot else { break };
            m.swap(top, p);
            let mut finished = true;
            for i in top + 1..m.len() {
                if m[i][col].is_zero() {
                    continue;
                }
                let q = &m[i][col] / &m[top][col];
                for c in 0..cols {
                    let t = &q * &m[top][c];
                    m[i][c] -= t;
                }
                if !m[i][col].is_zero() {
                    finished = false;
                }
            }
            if finished {
                if m[top][col].is_negative() {
                    for c in 0..cols {
                        let t = -m[top][c].clone();
                        m[top][c] = t;
                    }
                }
                // Reduce the rows above to make the form canonical.
                for i in 0..top {
                    let q = m[i][col].div_floor(&m[top][col]);
                    if !q.is_zero() {
                        for c in 0..cols {
                            let t = &q * &m[top][c];
                            m[i][c] -= t;
                        }
                    }
                }
                top += 1;
                break;
            }
        }
        if top == m.len() {
            break;
        }
    }
    m.truncate(top);
    m
}

/// Expresses `target` in the lattice basis given by `basis_rows`
/// (integer coordinates), if possible.
pub fn coords_in_basis(basis_rows: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    let bt = transpose(&basis_rows.to_vec());
    solve(&bt, target)
}

/// A finitely generated quotient L/S of an integer lattice L ⊆ ℤᴺ by
/// a sublattice S, presented through Smith normal form.
#[derive(Debug, Clone)]
pub struct LatticeQuotient {
    /// Basis of L as rows (ambient coordinates).
    pub basis: Vec<Vec<BigInt>>,
    /// Cyclic-factor orders, one per basis vector of L; factors of
    /// order one are trivial, zero would mean an infinite factor.
    pub invariants: Vec<BigInt>,
    u: Mat,
    u_inv: Mat,
}

impl LatticeQuotient {
    /// `lattice_gens` span L, `sub_gens` span S; returns `None` when
    /// some subgroup generator lies outside L.
    pub fn new(lattice_gens: &[Vec<BigInt>], sub_gens: &[Vec<BigInt>]) -> Option<Self> {
        let basis = hnf_basis(lattice_gens);
        let k = basis.len();
        let mut expr: Mat = Vec::with_capacity(sub_gens.len());
        for s in sub_gens {
            expr.push(coords_in_basis(&basis, s)?);
        }
        // Columns of `m` are the subgroup generators in L-coordinates.
        let m = transpose(&expr);
        let sm = if k == 0 {
            smith(&zeros(0, 0))
        } else if expr.is_empty() {
            smith(&zeros(k, 1))
        } else {
            smith(&m)
        };
        let invariants: Vec<BigInt> = (0..k)
            .map(|j| {
                if j < sm.rank {
                    sm.d[j][j].clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        Some(LatticeQuotient { basis, invariants, u: sm.u, u_inv: sm.u_inv })
    }

    /// Total order of the quotient; `None` when a factor is infinite.
    pub fn order(&self) -> Option<BigInt> {
        let mut o = BigInt::one();
        for inv in &self.invariants {
            if inv.is_zero() {
                return None;
            }
            o *= inv;
        }
        Some(o)
    }

    /// Indices and orders of the factors that actually contribute.
    pub fn nontrivial_factors(&self) -> Vec<(usize, BigInt)> {
        self.invariants
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_one())
            .map(|(j, d)| (j, d.clone()))
            .collect()
    }

    /// Ambient-coordinate representative generating factor `j`.
    pub fn representative(&self, j: usize) -> Vec<BigInt> {
        let n = if self.basis.is_empty() { 0 } else { self.basis[0].len() };
        let mut out = vec![BigInt::zero(); n];
        for (i, row) in self.basis.iter().enumerate() {
            let c = &self.u_inv[i][j];
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(row) {
                *o += c * b;
            }
        }
        out
    }

    /// Canonical digit vector of the class of `v` (ambient coords);
    /// `None` when v ∉ L. Two vectors are congruent modulo S exactly
    /// when their digit vectors agree.
    pub fn class_digits(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let c = coords_in_basis(&self.basis, v)?;
        let w = mat_vec(&self.u, &c);
        Some(
            w.iter()
                .zip(&self.invariants)
                .map(|(wi, d)| if d.is_zero() { wi.clone() } else { wi.mod_floor(d) })
                .collect(),
        )
    }
}
