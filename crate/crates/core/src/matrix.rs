//! The matrix ring `A = M_l(F_{q^s})`: units, polynomials with matrix
//! coefficients and their one-sided evaluations, bivariate polynomials of
//! degree one in `Y`, and primitive `m`-th roots of unity.
//!
//! Evaluation is one-sided because `A` is noncommutative: for
//! `f = Σ f_i X^i`, the left evaluation is `f(a) = Σ f_i a^i` and the right
//! evaluation is `(a)f = Σ a^i f_i`. Bivariate evaluation keeps the
//! coefficient on the right of both powers: `(a,b)Q = Σ a^i b^j Q_ij`. The
//! ordering matters; tests pin it down.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::field::{build_field, is_prime, FieldDescriptor, FieldElement, TowerEmbedding};
use crate::linalg::FieldMatrix;
use crate::{Error, Result};

/// An element of `M_l(F)`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatRingElem {
    ell: usize,
    field: Arc<FieldDescriptor>,
    entries: Vec<FieldElement>,
}

impl MatRingElem {
    pub fn zero(field: &Arc<FieldDescriptor>, ell: usize) -> Self {
        MatRingElem {
            ell,
            field: field.clone(),
            entries: alloc::vec![field.zero(); ell * ell],
        }
    }

    pub fn identity(field: &Arc<FieldDescriptor>, ell: usize) -> Self {
        let mut m = Self::zero(field, ell);
        for i in 0..ell {
            m.set(i, i, field.one());
        }
        m
    }

    /// A scalar matrix `c I`.
    pub fn scalar(field: &Arc<FieldDescriptor>, ell: usize, c: &FieldElement) -> Result<Self> {
        if c.field() != field {
            return Err(Error::FieldMismatch);
        }
        let mut m = Self::zero(field, ell);
        for i in 0..ell {
            m.set(i, i, c.clone());
        }
        Ok(m)
    }

    pub fn from_entries(
        field: &Arc<FieldDescriptor>,
        ell: usize,
        entries: Vec<FieldElement>,
    ) -> Result<Self> {
        if entries.len() != ell * ell {
            return Err(Error::DimensionMismatch);
        }
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(MatRingElem {
            ell,
            field: field.clone(),
            entries,
        })
    }

    /// Builds from row-major integer encodings.
    pub fn from_ints(field: &Arc<FieldDescriptor>, ell: usize, ints: &[u64]) -> Result<Self> {
        if ints.len() != ell * ell {
            return Err(Error::DimensionMismatch);
        }
        let entries = ints
            .iter()
            .map(|&v| field.from_int(v))
            .collect::<Result<Vec<_>>>()?;
        Self::from_entries(field, ell, entries)
    }

    pub fn to_ints(&self) -> Vec<u64> {
        self.entries.iter().map(FieldElement::to_int).collect()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.entries[r * self.ell + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.entries[r * self.ell + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(&self.field, self.ell)
    }

    /// True when the matrix is `c I` for some field element `c`.
    pub fn is_scalar(&self) -> bool {
        let diag = self.get(0, 0);
        for r in 0..self.ell {
            for c in 0..self.ell {
                let e = self.get(r, c);
                if r == c && e != diag {
                    return false;
                }
                if r != c && !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    fn assert_same_ring(&self, rhs: &MatRingElem) {
        assert_eq!(self.ell, rhs.ell, "matrix size mismatch");
        assert_eq!(self.field, rhs.field, "matrix field mismatch");
    }

    pub fn add(&self, rhs: &MatRingElem) -> MatRingElem {
        self.assert_same_ring(rhs);
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        MatRingElem {
            ell: self.ell,
            field: self.field.clone(),
            entries,
        }
    }

    pub fn sub(&self, rhs: &MatRingElem) -> MatRingElem {
        self.assert_same_ring(rhs);
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        MatRingElem {
            ell: self.ell,
            field: self.field.clone(),
            entries,
        }
    }

    pub fn neg(&self) -> MatRingElem {
        let entries = self.entries.iter().map(FieldElement::neg).collect();
        MatRingElem {
            ell: self.ell,
            field: self.field.clone(),
            entries,
        }
    }

    pub fn mul(&self, rhs: &MatRingElem) -> MatRingElem {
        self.assert_same_ring(rhs);
        let mut out = Self::zero(&self.field, self.ell);
        for i in 0..self.ell {
            for k in 0..self.ell {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.ell {
                    let v = out.get(i, j).add(&a.mul(rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u64) -> MatRingElem {
        let mut acc = Self::identity(&self.field, self.ell);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Applies the matrix to a column vector of length `l`.
    pub fn mul_col(&self, col: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(col.len(), self.ell, "column length mismatch");
        (0..self.ell)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in col.iter().enumerate() {
                    acc = acc.add(&self.get(i, j).mul(x));
                }
                acc
            })
            .collect()
    }

    pub fn to_field_matrix(&self) -> FieldMatrix {
        let mut m = FieldMatrix::zeros(&self.field, self.ell, self.ell);
        for r in 0..self.ell {
            for c in 0..self.ell {
                m.set(r, c, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn inverse(&self) -> Result<MatRingElem> {
        let inv = self.to_field_matrix().inverse()?;
        let mut out = Self::zero(&self.field, self.ell);
        for r in 0..self.ell {
            for c in 0..self.ell {
                out.set(r, c, inv.get(r, c).clone());
            }
        }
        Ok(out)
    }
}

/// True iff the matrix is a unit of `M_l(F)`, i.e. has nonzero determinant.
pub fn mat_is_unit(m: &MatRingElem) -> bool {
    !m.to_field_matrix()
        .determinant()
        .expect("square matrix")
        .is_zero()
}

/// Which side coefficients act on when evaluating a matrix polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A polynomial with coefficients in `M_l(F)`, ascending powers, trailing
/// coefficient nonzero (the zero polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatPoly {
    coeffs: Vec<MatRingElem>,
}

impl MatPoly {
    pub fn new(mut coeffs: Vec<MatRingElem>) -> Self {
        while coeffs.last().is_some_and(MatRingElem::is_zero) {
            coeffs.pop();
        }
        MatPoly { coeffs }
    }

    pub fn zero() -> Self {
        MatPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[MatRingElem] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &MatPoly) -> MatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        MatPoly::new(out)
    }

    /// `X^shift · self · m` (the scalar variable commutes; `m` multiplies each
    /// coefficient on the right).
    pub fn shift_mul_right(&self, shift: usize, m: &MatRingElem) -> MatPoly {
        if self.is_zero() {
            return MatPoly::zero();
        }
        let mut out = alloc::vec![MatRingElem::zero(m.field(), m.ell()); shift];
        for c in &self.coeffs {
            out.push(c.mul(m));
        }
        MatPoly::new(out)
    }
}

/// One-sided evaluation of `f` at `a`: `Side::Left` gives `f(a) = Σ f_i a^i`,
/// `Side::Right` gives `(a)f = Σ a^i f_i`.
pub fn evaluate(f: &MatPoly, a: &MatRingElem, side: Side) -> MatRingElem {
    let mut acc = MatRingElem::zero(a.field(), a.ell());
    let mut power = MatRingElem::identity(a.field(), a.ell());
    for (i, c) in f.coeffs.iter().enumerate() {
        assert_eq!(c.ell(), a.ell(), "coefficient size mismatch");
        if i > 0 {
            power = power.mul(a);
        }
        let term = match side {
            Side::Left => c.mul(&power),
            Side::Right => power.mul(c),
        };
        acc = acc.add(&term);
    }
    acc
}

/// A bivariate polynomial `Q = Q_0(X) + Q_1(X)·Y`, degree at most one in `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    pub q0: MatPoly,
    pub q1: MatPoly,
}

impl BivariatePoly {
    pub fn new(q0: MatPoly, q1: MatPoly) -> Self {
        BivariatePoly { q0, q1 }
    }

    pub fn is_zero(&self) -> bool {
        self.q0.is_zero() && self.q1.is_zero()
    }

    /// Evaluation at `(a, b)`: `Σ a^i Q_0i + Σ a^i b Q_1i`. Powers of `a` come
    /// first, then `b`, then the coefficient.
    pub fn eval(&self, a: &MatRingElem, b: &MatRingElem) -> MatRingElem {
        a.assert_same_ring(b);
        let mut acc = MatRingElem::zero(a.field(), a.ell());
        let mut power = MatRingElem::identity(a.field(), a.ell());
        let n = self.q0.coeffs.len().max(self.q1.coeffs.len());
        for i in 0..n {
            if i > 0 {
                power = power.mul(a);
            }
            if let Some(c) = self.q0.coeffs.get(i) {
                acc = acc.add(&power.mul(c));
            }
            if let Some(c) = self.q1.coeffs.get(i) {
                acc = acc.add(&power.mul(b).mul(c));
            }
        }
        acc
    }

    /// Substitutes `Y := f(X)`, giving `Q_0(X) + Σ_i X^i f(X) Q_1i`.
    pub fn substitute_y(&self, f: &MatPoly) -> MatPoly {
        let mut out = self.q0.clone();
        for (i, c) in self.q1.coeffs.iter().enumerate() {
            out = out.add(&f.shift_mul_right(i, c));
        }
        out
    }
}

/// True iff `g^m = I` and `g^i - I` is a unit for every `0 < i < m`.
pub fn validate_root(gamma: &MatRingElem, m: u64) -> bool {
    if m == 0 {
        return false;
    }
    let id = MatRingElem::identity(gamma.field(), gamma.ell());
    let mut power = id.clone();
    for _ in 1..m {
        power = power.mul(gamma);
        if !mat_is_unit(&power.sub(&id)) {
            return false;
        }
    }
    power.mul(gamma) == id
}

/// Constructs a primitive `m`-th root of unity in `M_l(F_{q^s})`.
///
/// Realizes `F_{q^{s·l}}` as an `l`-dimensional vector space over `F_{q^s}`
/// with basis `1, z, ..., z^(l-1)` (`z` the canonical generator of the big
/// field) and returns the matrix of multiplication by
/// `β = z^((q^(s·l)-1)/m)` in that basis. Since `β^i - 1 ≠ 0` for
/// `0 < i < m`, every `Γ^i - I` represents multiplication by a nonzero field
/// element and is therefore a unit. Deterministic: both fields use their
/// canonical moduli and the subfield embedding picks the smallest root.
pub fn find_primitive_root(q: u64, s: usize, ell: usize, m: u64) -> Result<MatRingElem> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if s == 0 || ell == 0 || m == 0 {
        return Err(Error::BadParameters);
    }
    if gcd(m, q) != 1 {
        return Err(Error::NotCoprime);
    }
    let small = build_field(q, s)?;
    let big = build_field(q, s * ell)?;
    let group_order = big.size() - 1;
    if group_order % m != 0 {
        return Err(Error::IncompatibleOrder);
    }
    let beta = big.multiplicative_generator().pow(group_order / m);
    let emb = TowerEmbedding::new(&small, &big)?;

    // Matrix of the F_p-linear bijection (c_0..c_{l-1}) in F_{q^s}^l
    // ↦ Σ_j emb(c_j)·z^j in F_{q^{s·l}}, with input coordinates grouped as
    // s digits per slot.
    let p = q;
    let sl = s * ell;
    let prime = build_field(p, 1)?;
    let mut phi = FieldMatrix::zeros(&prime, sl, sl);
    let z = big.gen();
    let mut z_pow = big.one();
    for j in 0..ell {
        let mut gen_pow = small.one();
        for t in 0..s {
            let image = emb.apply(&gen_pow)?.mul(&z_pow);
            for (row, &c) in image.coeffs().iter().enumerate() {
                phi.set(row, j * s + t, prime.from_int(c).expect("digit < p"));
            }
            gen_pow = gen_pow.mul(&small.gen());
        }
        z_pow = z_pow.mul(&z);
    }
    let phi_inv = phi
        .inverse()
        .map_err(|_| Error::Internal("basis map must be invertible"))?;

    // Column j of Γ expands β·z^j in the chosen basis.
    let mut gamma = MatRingElem::zero(&small, ell);
    let mut z_pow = big.one();
    for j in 0..ell {
        let w = beta.mul(&z_pow);
        let coords: Vec<FieldElement> = w
            .coeffs()
            .iter()
            .map(|&c| prime.from_int(c).expect("digit < p"))
            .collect();
        let solved = phi_inv.mul_vec(&coords);
        for i in 0..ell {
            let digits: Vec<u64> = (0..s).map(|t| solved[i * s + t].to_int()).collect();
            let mut v = 0;
            for &dig in digits.iter().rev() {
                v = v * p + dig;
            }
            gamma.set(i, j, small.from_int(v).expect("in range"));
        }
        z_pow = z_pow.mul(&z);
    }
    debug_assert!(validate_root(&gamma, m));
    Ok(gamma)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
