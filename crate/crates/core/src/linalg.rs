//! Exact rational vectors and matrices.
//!
//! Everything here works over arbitrary-precision rationals; there is no
//! rounding anywhere. Subspaces are normalized through reduced row echelon
//! form, which is unique for a given subspace and is what makes the cone
//! canonical forms in [`crate::cone`] comparable structurally.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Renders a rational as `p/q` with `q > 0` and `gcd(p, q) = 1`.
pub fn format_rational(r: &Rational) -> String {
    // BigRational is always kept reduced with a positive denominator.
    format!("{}/{}", r.numer(), r.denom())
}

fn format_short(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format_rational(r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RatVec(Vec<Rational>);

impl RatVec {
    pub fn new(coords: Vec<Rational>) -> Self {
        RatVec(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RatVec(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coords: &[BigInt]) -> Self {
        RatVec(coords.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn zeros(n: usize) -> Self {
        RatVec(vec![Rational::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Rational::is_integer)
    }

    pub fn dot(&self, other: &RatVec) -> Rational {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, factor: &Rational) -> RatVec {
        RatVec(self.0.iter().map(|c| c * factor).collect())
    }

    /// `self + factor * other`
    pub fn add_scaled(&self, factor: &Rational, other: &RatVec) -> RatVec {
        debug_assert_eq!(self.len(), other.len());
        RatVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + factor * b)
                .collect(),
        )
    }

    /// Positive multiple with integer entries of content one. The zero
    /// vector is returned unchanged.
    pub fn primitive(&self) -> RatVec {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        RatVec(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &gcd))
                .collect(),
        )
    }

    /// Integer coordinates, if every entry is integral.
    pub fn to_bigints(&self) -> Option<Vec<BigInt>> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.numer().clone()))
            .collect()
    }
}

impl Index<usize> for RatVec {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for RatVec {
    fn from(v: Vec<Rational>) -> Self {
        RatVec(v)
    }
}

impl Add for &RatVec {
    type Output = RatVec;

    fn add(self, rhs: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVec {
    type Output = RatVec;

    fn sub(self, rhs: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatVec {
    type Output = RatVec;

    fn neg(self) -> RatVec {
        RatVec(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for RatVec {
    type Output = RatVec;

    fn neg(self) -> RatVec {
        -&self
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_short(c))?;
        }
        write!(f, ")")
    }
}

/// Dense rational matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatMat {
    rows: Vec<RatVec>,
    ncols: usize,
}

impl RatMat {
    pub fn new(rows: Vec<RatVec>, ncols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                found: bad.len(),
            });
        }
        Ok(RatMat { rows, ncols })
    }

    /// Builds a matrix from integer rows. Panics on ragged input, so it is
    /// meant for literals.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::new(rows.iter().map(|r| RatVec::from_ints(r)).collect(), ncols)
            .expect("ragged integer matrix literal")
    }

    pub fn identity(n: usize) -> Self {
        RatMat {
            rows: (0..n).map(|i| RatVec::unit(n, i)).collect(),
            ncols: n,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[RatVec] {
        &self.rows
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().all(RatVec::is_integral)
    }

    pub fn mul_vec(&self, v: &RatVec) -> Result<RatVec> {
        if v.len() != self.ncols {
            return Err(Error::DimensionMismatch {
                expected: self.ncols,
                found: v.len(),
            });
        }
        Ok(self.apply(v))
    }

    pub(crate) fn apply(&self, v: &RatVec) -> RatVec {
        RatVec(self.rows.iter().map(|r| r.dot(v)).collect())
    }

    pub fn mul(&self, other: &RatMat) -> Result<RatMat> {
        if other.nrows() != self.ncols {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols,
                other.nrows(),
                other.ncols
            )));
        }
        let t = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| RatVec(t.rows.iter().map(|c| r.dot(c)).collect()))
            .collect();
        Ok(RatMat {
            rows,
            ncols: other.ncols,
        })
    }

    pub fn transpose(&self) -> RatMat {
        let rows = (0..self.ncols)
            .map(|j| RatVec(self.rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        RatMat {
            rows,
            ncols: self.nrows(),
        }
    }

    pub fn rank(&self) -> usize {
        rank(&self.rows, self.ncols)
    }

    /// Exact inverse via Gauss-Jordan; `None` if singular or not square.
    pub fn inverse(&self) -> Option<RatMat> {
        if !self.is_square() {
            return None;
        }
        let n = self.ncols;
        let mut aug: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.0.clone();
                row.extend(RatVec::unit(n, i).0);
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&i| !aug[i][col].is_zero())?;
            aug.swap(col, pivot);
            let inv = aug[col][col].recip();
            for x in aug[col].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..n {
                if i != col && !aug[i][col].is_zero() {
                    let f = aug[i][col].clone();
                    let (pr, tr) = pick2(&mut aug, col, i);
                    for (t, p) in tr.iter_mut().zip(pr.iter()) {
                        *t = &*t - &f * p;
                    }
                }
            }
        }
        let rows = aug.into_iter().map(|r| RatVec(r[n..].to_vec())).collect();
        Some(RatMat { rows, ncols: n })
    }

    pub fn determinant(&self) -> Option<Rational> {
        if !self.is_square() {
            return None;
        }
        let n = self.ncols;
        let mut m: Vec<Vec<Rational>> = self.rows.iter().map(|r| r.0.clone()).collect();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&i| !m[i][col].is_zero()) else {
                return Some(Rational::zero());
            };
            if pivot != col {
                m.swap(col, pivot);
                det = -det;
            }
            det *= &m[col][col];
            for i in col + 1..n {
                if !m[i][col].is_zero() {
                    let f = &m[i][col] / &m[col][col];
                    let (pr, tr) = pick2(&mut m, col, i);
                    for (t, p) in tr.iter_mut().zip(pr.iter()) {
                        *t = &*t - &f * p;
                    }
                }
            }
        }
        Some(det)
    }
}

impl fmt::Display for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

/// Borrow row `a` immutably and row `b` mutably (`a != b`).
fn pick2<T>(rows: &mut [T], a: usize, b: usize) -> (&T, &mut T) {
    debug_assert_ne!(a, b);
    if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}

/// Nonzero rows of the reduced row echelon form of `rows`.
pub fn rref(rows: &[RatVec], n: usize) -> Vec<RatVec> {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.0.clone()).collect();
    let mut r = 0;
    for col in 0..n {
        if r == m.len() {
            break;
        }
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let (pr, tr) = pick2(&mut m, r, i);
                for (t, p) in tr.iter_mut().zip(pr.iter()) {
                    *t = &*t - &f * p;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m.into_iter().map(RatVec).collect()
}

pub fn rank(rows: &[RatVec], n: usize) -> usize {
    rref(rows, n).len()
}

/// Basis of `{x : <row, x> = 0 for every row}`.
pub fn nullspace(rows: &[RatVec], n: usize) -> Vec<RatVec> {
    let reduced = rref(rows, n);
    let pivots: Vec<usize> = reduced
        .iter()
        .map(|r| {
            r.0.iter()
                .position(|c| !c.is_zero())
                .expect("nonzero rref row")
        })
        .collect();
    (0..n)
        .filter(|j| !pivots.contains(j))
        .map(|free| {
            let mut v = RatVec::unit(n, free);
            for (row, &p) in reduced.iter().zip(&pivots) {
                v.0[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// Canonical basis of the span of `rows`: RREF rows scaled to primitive
/// integer vectors. Two generating sets of the same subspace give identical
/// output.
pub fn canonical_basis(rows: &[RatVec], n: usize) -> Vec<RatVec> {
    rref(rows, n).iter().map(RatVec::primitive).collect()
}

/// Gram-Schmidt over the rationals (no normalization).
pub fn orthogonal_basis(rows: &[RatVec]) -> Vec<RatVec> {
    let mut out: Vec<RatVec> = Vec::with_capacity(rows.len());
    for r in rows {
        let v = project_out(r, &out);
        if !v.is_zero() {
            out.push(v);
        }
    }
    out
}

/// Removes from `v` its components along the mutually orthogonal `basis`.
pub fn project_out(v: &RatVec, basis: &[RatVec]) -> RatVec {
    basis.iter().fold(v.clone(), |acc, u| {
        let f = acc.dot(u) / u.dot(u);
        acc.add_scaled(&-f, u)
    })
}
