//! Exact two-phase simplex for small linear programs.
//!
//! The tableau is kept fraction-free: integer entries over a common positive
//! denominator (the determinant of the current basis), updated with exact
//! Bareiss divisions. Bland's rule picks both the entering and the leaving
//! variable, so the method terminates on degenerate programs.
//!
//! Coefficients are integers; a program with rational data is brought to this
//! form by clearing denominators row by row.

use num_bigint::BigInt;

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    LessEq,
    Equal,
    GreaterEq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<i64>,
    pub relation: Relation,
    pub rhs: i64,
}

/// Maximize `objective · x` subject to `constraints` and `x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<i64>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub x: Vec<Rational>,
    /// Basic variable of each remaining row; indices past `num_vars` are slacks.
    pub basis: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    pub fn new(num_vars: usize, objective: Vec<i64>) -> Self {
        assert_eq!(objective.len(), num_vars);
        LinearProgram {
            num_vars,
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn add(&mut self, coeffs: Vec<i64>, relation: Relation, rhs: i64) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).solve(self)
    }
}

#[inline]
fn mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("simplex coefficient overflow")
}

#[inline]
fn add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("simplex coefficient overflow")
}

#[inline]
fn sub(a: i128, b: i128) -> i128 {
    a.checked_sub(b).expect("simplex coefficient overflow")
}

struct Tableau {
    /// Constraint rows followed by the objective row; last column is the rhs.
    data: Vec<i128>,
    rows: usize,
    cols: usize,
    det: i128,
    basis: Vec<usize>,
    first_artificial: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let m = lp.constraints.len();
        let normalized: Vec<(Vec<i64>, Relation, i64)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs < 0 {
                    let flipped = match c.relation {
                        Relation::LessEq => Relation::GreaterEq,
                        Relation::GreaterEq => Relation::LessEq,
                        Relation::Equal => Relation::Equal,
                    };
                    (c.coeffs.iter().map(|x| -x).collect(), flipped, -c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs)
                }
            })
            .collect();
        let slack_count = normalized.iter().filter(|c| c.1 != Relation::Equal).count();
        let artificial_count = normalized
            .iter()
            .filter(|c| c.1 != Relation::LessEq)
            .count();
        let first_slack = lp.num_vars;
        let first_artificial = first_slack + slack_count;
        let vars = first_artificial + artificial_count;
        let cols = vars + 1;
        let rows = m + 1;
        let mut t = Tableau {
            data: vec![0; rows * cols],
            rows,
            cols,
            det: 1,
            basis: vec![0; m],
            first_artificial,
        };
        let (mut next_slack, mut next_art) = (first_slack, first_artificial);
        for (i, (coeffs, relation, rhs)) in normalized.iter().enumerate() {
            for (j, &a) in coeffs.iter().enumerate() {
                t.data[i * cols + j] = a as i128;
            }
            t.data[i * cols + vars] = *rhs as i128;
            match relation {
                Relation::LessEq => {
                    t.data[i * cols + next_slack] = 1;
                    t.basis[i] = next_slack;
                    next_slack += 1;
                }
                Relation::GreaterEq => {
                    t.data[i * cols + next_slack] = -1;
                    next_slack += 1;
                    t.data[i * cols + next_art] = 1;
                    t.basis[i] = next_art;
                    next_art += 1;
                }
                Relation::Equal => {
                    t.data[i * cols + next_art] = 1;
                    t.basis[i] = next_art;
                    next_art += 1;
                }
            }
        }
        t
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    fn obj_row(&self) -> usize {
        self.rows - 1
    }

    fn rhs_col(&self) -> usize {
        self.cols - 1
    }

    fn pivot(&mut self, r: usize, s: usize) {
        let cols = self.cols;
        let prs = self.at(r, s);
        debug_assert_ne!(prs, 0);
        let d = self.det;
        let (before, rest) = self.data.split_at_mut(r * cols);
        let (pivot_row, after) = rest.split_at_mut(cols);
        for row in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
            let mis = row[s];
            if mis == 0 {
                if prs != d {
                    for x in row.iter_mut() {
                        if *x != 0 {
                            *x = mul(*x, prs) / d;
                        }
                    }
                }
            } else {
                for (x, &p) in row.iter_mut().zip(pivot_row.iter()) {
                    let num = sub(mul(*x, prs), mul(mis, p));
                    debug_assert_eq!(num % d, 0);
                    *x = num / d;
                }
            }
        }
        self.det = prs;
        if self.det < 0 {
            self.det = -self.det;
            for x in self.data.iter_mut() {
                *x = -*x;
            }
        }
        self.basis[r] = s;
    }

    /// Runs Bland's rule over columns `0..active` of the objective row.
    /// Returns false when the program is unbounded.
    fn run(&mut self, active: usize) -> bool {
        let obj = self.obj_row();
        let rhs = self.rhs_col();
        loop {
            let Some(s) = (0..active).find(|&j| self.at(obj, j) < 0) else {
                return true;
            };
            let mut leave: Option<usize> = None;
            for i in 0..obj {
                let a = self.at(i, s);
                if a <= 0 {
                    continue;
                }
                leave = match leave {
                    None => Some(i),
                    Some(k) => {
                        // b_i / a_i vs b_k / a_k, both denominators positive
                        let lhs = mul(self.at(i, rhs), self.at(k, s));
                        let rhs_v = mul(self.at(k, rhs), a);
                        if lhs < rhs_v || (lhs == rhs_v && self.basis[i] < self.basis[k]) {
                            Some(i)
                        } else {
                            Some(k)
                        }
                    }
                };
            }
            match leave {
                Some(r) => self.pivot(r, s),
                None => return false,
            }
        }
    }

    fn remove_rows(&mut self, drop: &[bool]) {
        let cols = self.cols;
        let mut data = Vec::with_capacity(self.data.len());
        let mut basis = Vec::with_capacity(self.basis.len());
        for i in 0..self.rows {
            if i < self.basis.len() && drop[i] {
                continue;
            }
            data.extend_from_slice(&self.data[i * cols..(i + 1) * cols]);
            if i < self.basis.len() {
                basis.push(self.basis[i]);
            }
        }
        self.rows = basis.len() + 1;
        self.data = data;
        self.basis = basis;
    }

    fn truncate_columns(&mut self, keep: usize) {
        let old = self.cols;
        let new_cols = keep + 1;
        let mut data = Vec::with_capacity(self.rows * new_cols);
        for i in 0..self.rows {
            data.extend_from_slice(&self.data[i * old..i * old + keep]);
            data.push(self.data[i * old + old - 1]);
        }
        self.data = data;
        self.cols = new_cols;
    }

    fn solve(mut self, lp: &LinearProgram) -> LpOutcome {
        let m = self.basis.len();
        let obj = self.obj_row();
        let rhs = self.rhs_col();
        let has_artificials = self.first_artificial < rhs;

        if has_artificials {
            // maximize -sum(artificials); det is 1 here
            for j in self.first_artificial..rhs {
                self.data[obj * self.cols + j] = 1;
            }
            for i in 0..m {
                if self.basis[i] >= self.first_artificial {
                    for j in 0..self.cols {
                        self.data[obj * self.cols + j] =
                            sub(self.data[obj * self.cols + j], self.at(i, j));
                    }
                }
            }
            let bounded = self.run(rhs);
            debug_assert!(bounded);
            if self.at(obj, rhs) < 0 {
                return LpOutcome::Infeasible;
            }
            let mut drop = vec![false; m];
            for i in 0..m {
                if self.basis[i] < self.first_artificial {
                    continue;
                }
                match (0..self.first_artificial).find(|&j| self.at(i, j) != 0) {
                    Some(j) => self.pivot(i, j),
                    None => drop[i] = true,
                }
            }
            self.remove_rows(&drop);
            self.truncate_columns(self.first_artificial);
        }

        // phase 2 objective row at the current denominator
        let obj = self.obj_row();
        let rhs = self.rhs_col();
        let cols = self.cols;
        let cost = |j: usize| -> i128 { lp.objective.get(j).copied().unwrap_or(0) as i128 };
        for j in 0..cols {
            let mut v = if j == rhs { 0 } else { -mul(cost(j), self.det) };
            for (i, &b) in self.basis.iter().enumerate() {
                let cb = cost(b);
                if cb != 0 {
                    v = add(v, mul(cb, self.data[i * cols + j]));
                }
            }
            self.data[obj * cols + j] = v;
        }
        if !self.run(rhs) {
            return LpOutcome::Unbounded;
        }

        let det = BigInt::from(self.det);
        let frac = |v: i128| Rational::new(BigInt::from(v), det.clone());
        let mut x = vec![Rational::from_integer(BigInt::from(0)); lp.num_vars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < lp.num_vars {
                x[b] = frac(self.at(i, rhs));
            }
        }
        LpOutcome::Optimal(LpSolution {
            value: frac(self.at(self.obj_row(), rhs)),
            x,
            basis: self.basis.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn optimal(lp: &LinearProgram) -> LpSolution {
        match lp.solve() {
            LpOutcome::Optimal(s) => s,
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn textbook_maximum() {
        // max 3x + 5y; x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
        let mut lp = LinearProgram::new(2, vec![3, 5]);
        lp.add(vec![1, 0], Relation::LessEq, 4);
        lp.add(vec![0, 2], Relation::LessEq, 12);
        lp.add(vec![3, 2], Relation::LessEq, 18);
        let s = optimal(&lp);
        assert_eq!(s.value, int(36));
        assert_eq!(s.x, vec![int(2), int(6)]);
    }

    #[test]
    fn fractional_optimum_with_equality() {
        // max x + y; 3x + y = 2, x + 3y <= 2 -> x = y = 1/2
        let mut lp = LinearProgram::new(2, vec![1, 1]);
        lp.add(vec![3, 1], Relation::Equal, 2);
        lp.add(vec![1, 3], Relation::LessEq, 2);
        let s = optimal(&lp);
        assert_eq!(s.x, vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(s.value, int(1));
    }

    #[test]
    fn greater_eq_and_negative_rhs() {
        // min x + y (max -x - y) with x + y >= 3, -x <= -1 -> value -3
        let mut lp = LinearProgram::new(2, vec![-1, -1]);
        lp.add(vec![1, 1], Relation::GreaterEq, 3);
        lp.add(vec![-1, 0], Relation::LessEq, -1);
        let s = optimal(&lp);
        assert_eq!(s.value, int(-3));
        assert!(s.x[0] >= int(1));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1, vec![1]);
        lp.add(vec![1], Relation::LessEq, 1);
        lp.add(vec![1], Relation::GreaterEq, 2);
        assert_eq!(lp.solve(), LpOutcome::Infeasible);

        let mut lp = LinearProgram::new(2, vec![1, 0]);
        lp.add(vec![1, -1], Relation::LessEq, 1);
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_equalities() {
        // the second row duplicates the first; phase 1 must drop it
        let mut lp = LinearProgram::new(2, vec![1, 2]);
        lp.add(vec![1, 1], Relation::Equal, 1);
        lp.add(vec![2, 2], Relation::Equal, 2);
        let s = optimal(&lp);
        assert_eq!(s.value, int(2));
        assert_eq!(s.basis.len(), 1);
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the textbook largest-coefficient rule.
        // Scaled to integers: max 3/4 x4 - 150 x5 + 1/50 x6 - 6 x7 (x100)
        let mut lp = LinearProgram::new(4, vec![75, -15000, 2, -600]);
        lp.add(vec![25, -6000, -4, 900], Relation::LessEq, 0);
        lp.add(vec![50, -9000, -2, 300], Relation::LessEq, 0);
        lp.add(vec![0, 0, 1, 0], Relation::LessEq, 1);
        let s = optimal(&lp);
        // optimum 1/20 before scaling the objective by 100
        assert_eq!(s.value, int(5));
        assert_eq!(s.x, vec![ratio(1, 25), int(0), int(1), int(0)]);
    }

    #[test]
    fn deterministic_basis() {
        let mut lp = LinearProgram::new(3, vec![1, 1, 1]);
        lp.add(vec![1, 1, 0], Relation::LessEq, 1);
        lp.add(vec![0, 1, 1], Relation::LessEq, 1);
        lp.add(vec![1, 0, 1], Relation::LessEq, 1);
        let a = optimal(&lp);
        let b = optimal(&lp);
        assert_eq!(a, b);
        assert_eq!(a.value, ratio(3, 2));
    }
}
