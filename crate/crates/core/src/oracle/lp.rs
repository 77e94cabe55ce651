//! Dense two-phase simplex over exact rationals with Bland's rule.

use num_rational::{BigRational, Ratio};

use super::scalar::ExactField;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// `maximize objective·x` subject to integer rows and `x >= 0`.
#[derive(Debug, Clone, Default)]
pub struct LinearProgram {
    num_vars: usize,
    rows: Vec<(Vec<i64>, Relation, i64)>,
    objective: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome<T> {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<T>, value: T },
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            rows: Vec::new(),
            objective: vec![0; num_vars],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn add_row(&mut self, coeffs: Vec<i64>, rel: Relation, rhs: i64) {
        assert_eq!(coeffs.len(), self.num_vars, "row width");
        self.rows.push((coeffs, rel, rhs));
    }

    pub fn set_objective(&mut self, objective: Vec<i64>) {
        assert_eq!(objective.len(), self.num_vars, "objective width");
        self.objective = objective;
    }

    /// Solves exactly: `Ratio<i128>` first, `BigRational` if that overflows.
    pub fn solve(&self) -> LpOutcome<BigRational> {
        match self.solve_in::<Ratio<i128>>() {
            Some(outcome) => match outcome {
                LpOutcome::Infeasible => LpOutcome::Infeasible,
                LpOutcome::Unbounded => LpOutcome::Unbounded,
                LpOutcome::Optimal { x, value } => LpOutcome::Optimal {
                    x: x.iter().map(ExactField::to_big).collect(),
                    value: value.to_big(),
                },
            },
            None => self
                .solve_in::<BigRational>()
                .expect("big rationals do not overflow"),
        }
    }

    /// Solves in field `T`; `None` signals arithmetic overflow.
    pub fn solve_in<T: ExactField>(&self) -> Option<LpOutcome<T>> {
        Tableau::<T>::build(self)?.run(self)
    }
}

struct Tableau<T> {
    /// `m` constraint rows then the objective row; last column is the rhs.
    cells: Vec<Vec<T>>,
    basis: Vec<usize>,
    num_structural: usize,
    first_artificial: usize,
    width: usize,
}

impl<T: ExactField> Tableau<T> {
    fn build(lp: &LinearProgram) -> Option<Self> {
        let n = lp.num_vars;
        let m = lp.rows.len();
        // Normalize to nonnegative rhs.
        let rows: Vec<(Vec<i64>, Relation, i64)> = lp
            .rows
            .iter()
            .map(|(a, rel, b)| {
                if *b < 0 {
                    let flipped = match rel {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (a.iter().map(|v| -v).collect(), flipped, -b)
                } else {
                    (a.clone(), *rel, *b)
                }
            })
            .collect();
        let num_slack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let num_art = rows.iter().filter(|r| r.1 != Relation::Le).count();
        let first_slack = n;
        let first_artificial = n + num_slack;
        let width = first_artificial + num_art;

        let mut cells = vec![vec![T::zero(); width + 1]; m + 1];
        let mut basis = vec![0; m];
        let (mut slack, mut art) = (first_slack, first_artificial);
        for (i, (a, rel, b)) in rows.iter().enumerate() {
            for (j, &v) in a.iter().enumerate() {
                cells[i][j] = T::from_i64(v);
            }
            cells[i][width] = T::from_i64(*b);
            match rel {
                Relation::Le => {
                    cells[i][slack] = T::one();
                    basis[i] = slack;
                    slack += 1;
                }
                Relation::Ge => {
                    cells[i][slack] = T::from_i64(-1);
                    slack += 1;
                    cells[i][art] = T::one();
                    basis[i] = art;
                    art += 1;
                }
                Relation::Eq => {
                    cells[i][art] = T::one();
                    basis[i] = art;
                    art += 1;
                }
            }
        }
        Some(Tableau {
            cells,
            basis,
            num_structural: n,
            first_artificial,
            width,
        })
    }

    fn m(&self) -> usize {
        self.basis.len()
    }

    fn run(mut self, lp: &LinearProgram) -> Option<LpOutcome<T>> {
        // Phase 1: maximize -(sum of artificials).
        if self.first_artificial < self.width {
            let mut costs = vec![T::zero(); self.width];
            for c in costs.iter_mut().skip(self.first_artificial) {
                *c = T::from_i64(-1);
            }
            self.load_objective(&costs)?;
            match self.optimize(self.width)? {
                true => {}
                false => unreachable!("phase 1 is bounded"),
            }
            if self.cells[self.m()][self.width].is_negative() {
                return Some(LpOutcome::Infeasible);
            }
            self.expel_artificials()?;
        }

        // Phase 2 over structural and slack columns only.
        let mut costs = vec![T::zero(); self.width];
        for (j, &c) in lp.objective.iter().enumerate() {
            costs[j] = T::from_i64(c);
        }
        self.load_objective(&costs)?;
        if !self.optimize(self.first_artificial)? {
            return Some(LpOutcome::Unbounded);
        }
        let mut x = vec![T::zero(); self.num_structural];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.num_structural {
                x[b] = self.cells[i][self.width].clone();
            }
        }
        let value = self.cells[self.m()][self.width].clone();
        Some(LpOutcome::Optimal { x, value })
    }

    /// Objective row = reduced costs `c_B B^{-1} A_j - c_j`, value `c_B x_B`.
    fn load_objective(&mut self, costs: &[T]) -> Option<()> {
        let m = self.m();
        let mut row = vec![T::zero(); self.width + 1];
        for (j, cell) in row.iter_mut().enumerate().take(self.width) {
            *cell = costs[j].clone();
            *cell = T::zero().sub(cell)?;
        }
        for i in 0..m {
            let cb = &costs[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for (j, cell) in row.iter_mut().enumerate() {
                let term = cb.mul(&self.cells[i][j])?;
                *cell = cell.add(&term)?;
            }
        }
        self.cells[m] = row;
        Some(())
    }

    /// Runs simplex iterations with entering columns restricted to `< limit`.
    /// Returns `false` when unbounded.
    fn optimize(&mut self, limit: usize) -> Option<bool> {
        let m = self.m();
        loop {
            // Bland: lowest-index column with negative reduced cost.
            let Some(col) = (0..limit).find(|&j| self.cells[m][j].is_negative()) else {
                return Some(true);
            };
            let mut pivot: Option<(usize, T)> = None;
            for i in 0..m {
                let a = &self.cells[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.cells[i][self.width].div(a)?;
                let better = match &pivot {
                    None => true,
                    Some((r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r])
                    }
                };
                if better {
                    pivot = Some((i, ratio));
                }
            }
            let Some((row, _)) = pivot else {
                return Some(false);
            };
            self.pivot(row, col)?;
        }
    }

    fn pivot(&mut self, row: usize, col: usize) -> Option<()> {
        let p = self.cells[row][col].clone();
        for j in 0..=self.width {
            self.cells[row][j] = self.cells[row][j].div(&p)?;
        }
        let pivot_row = self.cells[row].clone();
        for i in 0..self.cells.len() {
            if i == row {
                continue;
            }
            let factor = self.cells[i][col].clone();
            if factor.is_zero() {
                continue;
            }
            for (j, pv) in pivot_row.iter().enumerate() {
                if pv.is_zero() {
                    continue;
                }
                let delta = factor.mul(pv)?;
                self.cells[i][j] = self.cells[i][j].sub(&delta)?;
            }
        }
        self.basis[row] = col;
        Some(())
    }

    /// After a feasible phase 1, pivots zero-level artificials out of the basis
    /// and drops rows that turn out to be redundant.
    fn expel_artificials(&mut self) -> Option<()> {
        let mut i = 0;
        while i < self.m() {
            if self.basis[i] >= self.first_artificial {
                match (0..self.first_artificial).find(|&j| !self.cells[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j)?,
                    None => {
                        self.cells.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        Some(())
    }
}
