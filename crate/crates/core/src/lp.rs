//! Exact feasibility of rational linear systems.
//!
//! [`lp_feasible`] runs phase one of the simplex method over exact
//! rationals with Bland's rule. [`fourier_motzkin`] decides the same
//! question by variable elimination and serves as an independent oracle.

use std::collections::HashMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, RatVec, Rational};

/// `<coeffs, x> = rhs` or `<coeffs, x> >= rhs`, depending on where it is
/// stored in the [`LpProblem`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub coeffs: RatVec,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: RatVec, rhs: Rational) -> Self {
        Constraint { coeffs, rhs }
    }
}

/// A feasibility problem over free rational variables.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LpProblem {
    num_vars: usize,
    eq_constraints: Vec<Constraint>,
    ineq_constraints: Vec<Constraint>,
}

impl LpProblem {
    pub fn new(num_vars: usize) -> Self {
        LpProblem {
            num_vars,
            ..Default::default()
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn eq_constraints(&self) -> &[Constraint] {
        &self.eq_constraints
    }

    pub fn ineq_constraints(&self) -> &[Constraint] {
        &self.ineq_constraints
    }

    fn check(&self, coeffs: &RatVec) -> Result<()> {
        if coeffs.len() == self.num_vars {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: coeffs.len(),
            })
        }
    }

    /// Adds `<coeffs, x> = rhs`.
    pub fn add_eq(&mut self, coeffs: RatVec, rhs: Rational) -> Result<()> {
        self.check(&coeffs)?;
        self.eq_constraints.push(Constraint::new(coeffs, rhs));
        Ok(())
    }

    /// Adds `<coeffs, x> >= rhs`.
    pub fn add_ge(&mut self, coeffs: RatVec, rhs: Rational) -> Result<()> {
        self.check(&coeffs)?;
        self.ineq_constraints.push(Constraint::new(coeffs, rhs));
        Ok(())
    }

    pub fn is_satisfied_by(&self, x: &RatVec) -> bool {
        x.len() == self.num_vars
            && self.eq_constraints.iter().all(|c| c.coeffs.dot(x) == c.rhs)
            && self
                .ineq_constraints
                .iter()
                .all(|c| c.coeffs.dot(x) >= c.rhs)
    }
}

impl fmt::Display for LpProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} variables", self.num_vars)?;
        for c in &self.eq_constraints {
            writeln!(f, "  {} . x = {}", c.coeffs, format_rational(&c.rhs))?;
        }
        for c in &self.ineq_constraints {
            writeln!(f, "  {} . x >= {}", c.coeffs, format_rational(&c.rhs))?;
        }
        Ok(())
    }
}

/// Exact phase-one simplex. Returns a feasible point or `None`.
///
/// Free variables are split as `x = x+ - x-`, every inequality gets a
/// surplus column and every row an artificial column. Pivoting follows
/// Bland's rule, so the result is deterministic for a fixed constraint
/// order.
pub fn lp_feasible(lp: &LpProblem) -> Option<RatVec> {
    let n = lp.num_vars;
    let rows: Vec<(&Constraint, bool)> = lp
        .eq_constraints
        .iter()
        .map(|c| (c, false))
        .chain(lp.ineq_constraints.iter().map(|c| (c, true)))
        .collect();
    let m = rows.len();
    let k = lp.ineq_constraints.len();
    let surplus0 = 2 * n;
    let art0 = surplus0 + k;
    let width = art0 + m;

    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    let mut surplus = 0;
    for (i, (c, is_ineq)) in rows.iter().enumerate() {
        let mut row = vec![Rational::zero(); width];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = a.clone();
            row[n + j] = -a;
        }
        if *is_ineq {
            row[surplus0 + surplus] = -Rational::one();
            surplus += 1;
        }
        let mut b = c.rhs.clone();
        if b.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
            b = -b;
        }
        row[art0 + i] = Rational::one();
        tab.push(row);
        rhs.push(b);
    }
    let mut basis: Vec<usize> = (art0..width).collect();

    // reduced costs of the phase-one objective (sum of artificials)
    let mut cost = vec![Rational::zero(); width];
    for row in &tab {
        for j in 0..art0 {
            cost[j] -= &row[j];
        }
    }

    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            let a = &tab[i][enter];
            if !a.is_positive() {
                continue;
            }
            let ratio = &rhs[i] / a;
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // phase one is bounded below by zero, so a pivot row always exists
        let (r, _) = leave.expect("phase-one objective is bounded");
        let piv = tab[r][enter].clone();
        for x in tab[r].iter_mut() {
            *x = &*x / &piv;
        }
        rhs[r] = &rhs[r] / &piv;
        let prow = tab[r].clone();
        let prhs = rhs[r].clone();
        let nz: Vec<usize> = (0..width).filter(|&j| !prow[j].is_zero()).collect();
        for i in 0..m {
            if i == r || tab[i][enter].is_zero() {
                continue;
            }
            let f = tab[i][enter].clone();
            for &j in &nz {
                let d = &f * &prow[j];
                tab[i][j] -= d;
            }
            rhs[i] -= &f * &prhs;
        }
        let f = cost[enter].clone();
        for &j in &nz {
            let d = &f * &prow[j];
            cost[j] -= d;
        }
        basis[r] = enter;
    }

    let infeasibility = basis
        .iter()
        .zip(&rhs)
        .filter(|(&b, _)| b >= art0)
        .fold(Rational::zero(), |acc, (_, v)| acc + v);
    if !infeasibility.is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (&b, v) in basis.iter().zip(&rhs) {
        if b < n {
            x[b] += v;
        } else if b < 2 * n {
            x[b - n] -= v;
        }
    }
    Some(RatVec::new(x))
}

pub const DEFAULT_FM_CAP: usize = 8;

/// Fourier-Motzkin feasibility with the default cap on free variables.
pub fn fourier_motzkin(lp: &LpProblem) -> Result<bool> {
    fourier_motzkin_with_cap(lp, DEFAULT_FM_CAP)
}

#[derive(Clone)]
struct FmRow {
    coeffs: Vec<Rational>,
    rhs: Rational,
    history: Vec<u64>,
}

enum Normalized {
    Trivial,
    Contradiction,
    Row(FmRow),
}

fn normalize(mut row: FmRow) -> Normalized {
    let Some(lead) = row.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) else {
        return if row.rhs.is_positive() {
            Normalized::Contradiction
        } else {
            Normalized::Trivial
        };
    };
    if !lead.is_one() {
        for c in row.coeffs.iter_mut() {
            *c = &*c / &lead;
        }
        row.rhs = &row.rhs / &lead;
    }
    Normalized::Row(row)
}

fn history_len(h: &[u64]) -> usize {
    h.iter().map(|w| w.count_ones() as usize).sum()
}

fn history_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Rows sharing a coefficient vector, reduced to those not dominated by a
/// tighter row with a smaller history. Dropping a row with a smaller
/// history would make Chernikov pruning unsound.
type RowSet = HashMap<Vec<Rational>, Vec<FmRow>>;

/// Inserts `row` into `rows`. Returns `false` on a contradiction.
fn push_row(rows: &mut RowSet, row: FmRow) -> bool {
    match normalize(row) {
        Normalized::Trivial => true,
        Normalized::Contradiction => false,
        Normalized::Row(row) => {
            let bucket = rows.entry(row.coeffs.clone()).or_default();
            let dominated = bucket
                .iter()
                .any(|e| e.rhs >= row.rhs && history_subset(&e.history, &row.history));
            if !dominated {
                bucket.retain(|e| !(row.rhs >= e.rhs && history_subset(&row.history, &e.history)));
                bucket.push(row);
            }
            true
        }
    }
}

/// Fourier-Motzkin feasibility. Equalities are first eliminated by
/// Gaussian substitution; the cap applies to the variables left free after
/// that step. Chernikov's rule prunes combinations whose history exceeds
/// the number of eliminated variables plus one.
pub fn fourier_motzkin_with_cap(lp: &LpProblem, cap: usize) -> Result<bool> {
    let n = lp.num_vars;
    let mut eqs: Vec<(Vec<Rational>, Rational)> = lp
        .eq_constraints
        .iter()
        .map(|c| (c.coeffs.coords().to_vec(), c.rhs.clone()))
        .collect();
    let mut ineqs: Vec<(Vec<Rational>, Rational)> = lp
        .ineq_constraints
        .iter()
        .map(|c| (c.coeffs.coords().to_vec(), c.rhs.clone()))
        .collect();

    let mut pivoted = vec![false; n];
    while let Some((a, b)) = eqs.pop() {
        let Some(p) = a.iter().position(|c| !c.is_zero()) else {
            if !b.is_zero() {
                return Ok(false);
            }
            continue;
        };
        pivoted[p] = true;
        let substitute = |coeffs: &mut Vec<Rational>, rhs: &mut Rational| {
            if coeffs[p].is_zero() {
                return;
            }
            let f = &coeffs[p] / &a[p];
            for (c, ai) in coeffs.iter_mut().zip(&a) {
                *c -= &f * ai;
            }
            *rhs -= &f * &b;
        };
        for (c, r) in eqs.iter_mut() {
            substitute(c, r);
        }
        for (c, r) in ineqs.iter_mut() {
            substitute(c, r);
        }
    }

    let free: Vec<usize> = (0..n).filter(|&j| !pivoted[j]).collect();
    if free.len() > cap {
        return Err(Error::FmCapExceeded {
            vars: free.len(),
            cap,
        });
    }

    let mut rows: RowSet = HashMap::new();
    let words = ineqs.len().div_ceil(64).max(1);
    for (i, (coeffs, rhs)) in ineqs.into_iter().enumerate() {
        let mut history = vec![0u64; words];
        history[i / 64] |= 1 << (i % 64);
        if !push_row(
            &mut rows,
            FmRow {
                coeffs,
                rhs,
                history,
            },
        ) {
            return Ok(false);
        }
    }

    let mut remaining = free;
    let mut eliminated = 0usize;
    while !remaining.is_empty() {
        // eliminate the variable producing the fewest combinations
        let (pos_in_remaining, &var) = remaining
            .iter()
            .enumerate()
            .min_by_key(|(_, &j)| {
                let p = rows
                    .values()
                    .flatten()
                    .filter(|r| r.coeffs[j].is_positive())
                    .count();
                let q = rows
                    .values()
                    .flatten()
                    .filter(|r| r.coeffs[j].is_negative())
                    .count();
                p * q
            })
            .expect("nonempty");
        remaining.remove(pos_in_remaining);
        eliminated += 1;

        let mut keys: Vec<&Vec<Rational>> = rows.keys().collect();
        keys.sort();
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for r in keys.into_iter().flat_map(|k| &rows[k]) {
            if r.coeffs[var].is_positive() {
                pos.push(r.clone());
            } else if r.coeffs[var].is_negative() {
                neg.push(r.clone());
            } else {
                zero.push(r.clone());
            }
        }
        let mut next: RowSet = HashMap::new();
        for r in zero {
            next.entry(r.coeffs.clone()).or_default().push(r);
        }
        for p in &pos {
            for q in &neg {
                let history: Vec<u64> = p
                    .history
                    .iter()
                    .zip(&q.history)
                    .map(|(a, b)| a | b)
                    .collect();
                if history_len(&history) > eliminated + 1 {
                    continue;
                }
                let fp = -&q.coeffs[var];
                let fq = p.coeffs[var].clone();
                let coeffs: Vec<Rational> = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(a, b)| &fp * a + &fq * b)
                    .collect();
                let rhs = &fp * &p.rhs + &fq * &q.rhs;
                if !push_row(
                    &mut next,
                    FmRow {
                        coeffs,
                        rhs,
                        history,
                    },
                ) {
                    return Ok(false);
                }
            }
        }
        rows = next;
    }
    Ok(true)
}
