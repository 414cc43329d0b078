//! Exact rational linear algebra: Gauss-Jordan solving of affine systems,
//! kernel bases, and Fourier-Motzkin feasibility for systems that mix linear
//! equalities with strict inequalities.
//!
//! Everything is computed over arbitrary-precision rationals, so feasibility
//! answers are decisions, not approximations.  Every satisfiability witness
//! returned here is re-checked against the original system before it is
//! handed back.

use crate::scalar::Rat;
use num::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        for row in &rows {
            if row.len() != c {
                return Err(LinAlgError::DimensionMismatch { expected: c, got: row.len() });
            }
        }
        Ok(RationalMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    /// Build an r x c matrix even when there are zero rows (shape survives).
    pub fn from_rows_shaped(rows: Vec<Vec<Rat>>, cols: usize) -> Result<Self, LinAlgError> {
        let mut m = Self::from_rows(rows)?;
        if m.rows == 0 {
            m.cols = cols;
        } else if m.cols != cols {
            return Err(LinAlgError::DimensionMismatch { expected: cols, got: m.cols });
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Result<Vec<Rat>, LinAlgError> {
        if x.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch { expected: self.cols, got: x.len() });
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), x)).collect())
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).fold(Rat::zero(), |s, t| s + t)
}

/// The full solution set of a consistent affine system: one particular
/// solution plus a basis of the homogeneous kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Rat>,
    pub kernel_basis: Vec<Vec<Rat>>,
}

/// Reduce augmented rows (each of width `cols + aug`) to reduced row echelon
/// form over the first `cols` columns.  Returns the pivot columns.
fn rref(rows: &mut Vec<Vec<Rat>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for v in rows[rank].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..rows[r].len() {
                    let d = &rows[rank][c] * &f;
                    rows[r][c] = &rows[r][c] - &d;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

/// Solve A x = b exactly.  Returns `None` when the system is inconsistent,
/// otherwise a particular solution together with a kernel basis.
pub fn solve_affine(a: &RationalMatrix, b: &[Rat]) -> Result<Option<AffineSolution>, LinAlgError> {
    if b.len() != a.rows() {
        return Err(LinAlgError::DimensionMismatch { expected: a.rows(), got: b.len() });
    }
    let n = a.cols();
    let mut rows: Vec<Vec<Rat>> = (0..a.rows())
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows, n);
    for r in pivots.len()..rows.len() {
        if !rows[r][n].is_zero() {
            return Ok(None);
        }
    }
    let mut particular = vec![Rat::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = rows[r][n].clone();
    }
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; n];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut kernel_basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -rows[r][free].clone();
        }
        kernel_basis.push(v);
    }
    debug_assert_eq!(a.mul_vec(&particular).unwrap(), b.to_vec());
    Ok(Some(AffineSolution { particular, kernel_basis }))
}

/// A basis of the null space of A.
pub fn kernel(a: &RationalMatrix) -> Vec<Vec<Rat>> {
    let b = vec![Rat::zero(); a.rows()];
    solve_affine(a, &b)
        .expect("shape is consistent by construction")
        .expect("homogeneous systems are consistent")
        .kernel_basis
}

/// One linear constraint on n unknowns: coeffs . x (cmp) rhs, where the
/// comparison is `=` for equalities and `>`/`>=` for inequalities.
type Constraint = (Vec<Rat>, Rat);

/// Decide whether the system { eq . x = rhs } and { form . x > 0 } has a
/// rational solution, returning a concrete witness when it does.
///
/// `n` is the ambient number of unknowns (needed when either list is empty).
pub fn feasible_strict(
    n: usize,
    equalities: &[Constraint],
    strict_positive: &[Vec<Rat>],
) -> Result<Option<Vec<Rat>>, LinAlgError> {
    let ineqs: Vec<(Vec<Rat>, Rat, bool)> = strict_positive
        .iter()
        .map(|f| (f.clone(), Rat::zero(), true))
        .collect();
    feasible_mixed(n, equalities, &ineqs)
}

/// Mixed feasibility: equalities `coeffs . x = rhs` plus inequalities
/// `coeffs . x + shift > 0` (strict) or `>= 0` (non-strict).
///
/// First the equalities are solved exactly and the inequalities are rewritten
/// over the kernel coordinates; then variables are eliminated one at a time
/// (Fourier-Motzkin) and a witness is rebuilt by back-substitution through the
/// recorded bound lists.
pub(crate) fn feasible_mixed(
    n: usize,
    equalities: &[Constraint],
    ineqs: &[(Vec<Rat>, Rat, bool)],
) -> Result<Option<Vec<Rat>>, LinAlgError> {
    for (c, _) in equalities {
        if c.len() != n {
            return Err(LinAlgError::DimensionMismatch { expected: n, got: c.len() });
        }
    }
    for (c, _, _) in ineqs {
        if c.len() != n {
            return Err(LinAlgError::DimensionMismatch { expected: n, got: c.len() });
        }
    }

    // Stage 1: parametrize the equality-solution set as x = p + N y.
    let (p, basis) = if equalities.is_empty() {
        let mut basis = Vec::new();
        for i in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[i] = Rat::one();
            basis.push(e);
        }
        (vec![Rat::zero(); n], basis)
    } else {
        let a = RationalMatrix::from_rows_shaped(
            equalities.iter().map(|(c, _)| c.clone()).collect(),
            n,
        )?;
        let b: Vec<Rat> = equalities.iter().map(|(_, r)| r.clone()).collect();
        match solve_affine(&a, &b)? {
            None => return Ok(None),
            Some(sol) => (sol.particular, sol.kernel_basis),
        }
    };
    let k = basis.len();

    // Stage 2: rewrite each inequality over the k kernel coordinates.
    // f.x + s  ~  (f.N) y + (f.p + s).
    let mut system: Vec<(Vec<Rat>, Rat, bool)> = ineqs
        .iter()
        .map(|(f, s, strict)| {
            let coeffs: Vec<Rat> = basis.iter().map(|col| dot(f, col)).collect();
            (coeffs, dot(f, &p) + s, *strict)
        })
        .collect();

    // Stage 3: eliminate y_{k-1}, ..., y_0, keeping the bound lists for
    // back-substitution.  A bound list entry is (coeffs over the remaining
    // vars, constant, strict) describing y_j > / >= that affine form (lower)
    // or < / <= it (upper).
    let mut levels: Vec<(Vec<(Vec<Rat>, Rat, bool)>, Vec<(Vec<Rat>, Rat, bool)>)> = Vec::new();
    for j in (0..k).rev() {
        let mut lowers = Vec::new();
        let mut uppers = Vec::new();
        let mut rest = Vec::new();
        for (c, s, strict) in system {
            let coef = c[j].clone();
            let head: Vec<Rat> = c[..j].to_vec();
            if coef.is_zero() {
                rest.push((head, s, strict));
            } else {
                // c_j y_j + head.y + s  (>|>=)  0
                //   c_j > 0: y_j (>|>=) -(head.y + s)/c_j   -> lower bound
                //   c_j < 0: y_j (<|<=) -(head.y + s)/c_j   -> upper bound
                let inv = coef.recip();
                let bc: Vec<Rat> = head.iter().map(|v| -(v * &inv)).collect();
                let bs = -(&s * &inv);
                if coef.is_positive() {
                    lowers.push((bc, bs, strict));
                } else {
                    uppers.push((bc, bs, strict));
                }
            }
        }
        for (lc, ls, lstrict) in &lowers {
            for (uc, us, ustrict) in &uppers {
                // upper - lower must be positive (strict if either side is).
                let c: Vec<Rat> = uc.iter().zip(lc).map(|(u, l)| u - l).collect();
                rest.push((c, us - ls, *lstrict || *ustrict));
            }
        }
        levels.push((lowers, uppers));
        system = rest;
    }

    // Stage 4: with no variables left every constraint is a constant sign test.
    for (_, s, strict) in &system {
        let ok = if *strict { s.is_positive() } else { !s.is_negative() };
        if !ok {
            return Ok(None);
        }
    }

    // Stage 5: back-substitute, choosing y_j strictly inside its interval.
    let mut y = vec![Rat::zero(); k];
    for (idx, (lowers, uppers)) in levels.iter().enumerate().rev() {
        // levels[idx] eliminated variable j = k - 1 - idx; at that point the
        // live prefix variables are y_0..y_{j-1}, already assigned.
        let j = k - 1 - idx;
        let eval = |(c, s, strict): &(Vec<Rat>, Rat, bool)| (dot(c, &y[..j]) + s, *strict);
        let lo = lowers.iter().map(eval).max_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        let hi = uppers.iter().map(eval).min_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        y[j] = match (lo, hi) {
            (None, None) => Rat::zero(),
            (Some((l, _)), None) => l + Rat::one(),
            (None, Some((h, _))) => h - Rat::one(),
            (Some((l, ls)), Some((h, hs))) => {
                debug_assert!(l < h || (l == h && !ls && !hs), "elimination left an empty interval");
                if l == h {
                    l
                } else {
                    (l + h) / rat2()
                }
            }
        };
    }

    // x = p + N y, then re-check every original constraint exactly.
    let mut x = p;
    for (i, col) in basis.iter().enumerate() {
        for t in 0..n {
            let d = &col[t] * &y[i];
            x[t] = &x[t] + &d;
        }
    }
    for (c, r) in equalities {
        assert_eq!(dot(c, &x), r.clone(), "witness violates an equality");
    }
    for (c, s, strict) in ineqs {
        let v = dot(c, &x) + s;
        assert!(
            if *strict { v.is_positive() } else { !v.is_negative() },
            "witness violates an inequality"
        );
    }
    Ok(Some(x))
}

fn rat2() -> Rat {
    Rat::one() + Rat::one()
}
