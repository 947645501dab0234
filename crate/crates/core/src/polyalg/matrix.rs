use num_traits::{One, Zero};

use super::{Polynomial, PolyError, Rational, Vars};

/// Dense `rows x cols` matrix of polynomials over one shared variable list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: Vars,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(vars: &Vars, grid: Vec<Vec<Polynomial>>) -> Result<Self, PolyError> {
        let rows = grid.len();
        let cols = grid.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(PolyError::Shape("matrix must have at least one row and one column".into()));
        }
        if grid.iter().any(|r| r.len() != cols) {
            return Err(PolyError::Shape("rows have different lengths".into()));
        }
        let entries: Vec<Polynomial> = grid.into_iter().flatten().collect();
        if entries.iter().any(|e| e.vars() != vars) {
            return Err(PolyError::Shape("entries use different variable lists".into()));
        }
        Ok(PolyMatrix { rows, cols, vars: vars.clone(), entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// Applies `f` to every entry, keeping the shape.
    pub fn map(&self, vars: &Vars, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            vars: vars.clone(),
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Vec<Rational>>, PolyError> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).evaluate(point)).collect())
            .collect()
    }

    /// All `size x size` minors: row index sets in lexicographic order, and for
    /// each of them the column index sets in lexicographic order.
    pub fn minors(&self, size: usize) -> Result<Vec<Polynomial>, PolyError> {
        let max = self.rows.min(self.cols);
        if size == 0 || size > max {
            return Err(PolyError::MinorSize { size, max });
        }
        let row_sets = combinations(self.rows, size);
        let col_sets = combinations(self.cols, size);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                let sub: Vec<Vec<Polynomial>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| self.get(i, j).clone()).collect())
                    .collect();
                let det = det_fraction_free(&sub);
                debug_assert_eq!(det, det_cofactor(&sub), "determinant algorithms disagree");
                out.push(det);
            }
        }
        Ok(out)
    }

    pub fn rank_at_point(&self, point: &[Rational]) -> Result<usize, PolyError> {
        Ok(rational_rank(self.evaluate(point)?))
    }
}

/// k-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Laplace expansion along the first row.
pub fn det_cofactor(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix required");
    if n == 1 {
        return m[0][0].clone();
    }
    let vars = m[0][0].vars().clone();
    let mut acc = Polynomial::zero(&vars);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = &m[0][j] * &det_cofactor(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Bareiss fraction-free elimination; every division is exact.
pub fn det_fraction_free(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix required");
    let vars = m[0][0].vars().clone();
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut negate = false;
    let mut prev = Polynomial::one(&vars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Polynomial::zero(&vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rational_rank(mut a: Vec<Vec<Rational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = Rational::one() / &a[rank][c];
        for r in rank + 1..rows {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] * &inv;
            for k in c..cols {
                let d = &f * &a[rank][k];
                a[r][k] -= d;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
