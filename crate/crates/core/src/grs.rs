//! Generalized Reed-Solomon codes over the matrix ring `A = M_l(F_{q^s})`,
//! their brute-force duals, and the isometric embedding of block words into
//! first columns of matrix sequences.
//!
//! A left GRS code with support `x`, multipliers `v` and dimension `k` is the
//! set `{(f(x_1)·v_1, ..., f(x_n)·v_n) : deg f <= k-1}` using left
//! evaluation; the right code uses `(v_i·(x_i)f)`. Support entries must
//! commute pairwise with unit differences, and multipliers must be units.
//! Everything here is desk-scale: enumerations are guarded and exist to serve
//! as ground truth for the decoders.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::field::FieldDescriptor;
use crate::matrix::{evaluate, mat_is_unit, MatPoly, MatRingElem, Side};
use crate::qbch::BlockWord;
use crate::{Error, Result};

/// Guard for brute-force enumerations.
const MAX_ENUMERATION: u64 = 1 << 20;

#[derive(Debug, Clone)]
pub struct GrsSpec {
    support: Vec<MatRingElem>,
    multipliers: Vec<MatRingElem>,
    k: usize,
    side: Side,
}

impl GrsSpec {
    /// Validates the support and multiplier conditions eagerly.
    pub fn new(
        support: Vec<MatRingElem>,
        multipliers: Vec<MatRingElem>,
        k: usize,
        side: Side,
    ) -> Result<Self> {
        let n = support.len();
        if n == 0 || multipliers.len() != n || k == 0 || k > n {
            return Err(Error::BadParameters);
        }
        let ell = support[0].ell();
        let field = support[0].field().clone();
        for x in support.iter().chain(&multipliers) {
            if x.ell() != ell || x.field() != &field {
                return Err(Error::DimensionMismatch);
            }
        }
        for i in 0..n {
            for j in 0..i {
                if support[i].mul(&support[j]) != support[j].mul(&support[i]) {
                    return Err(Error::BadParameters);
                }
                if !mat_is_unit(&support[i].sub(&support[j])) {
                    return Err(Error::BadParameters);
                }
            }
            if !mat_is_unit(&multipliers[i]) {
                return Err(Error::BadParameters);
            }
        }
        Ok(GrsSpec {
            support,
            multipliers,
            k,
            side,
        })
    }

    /// Reed-Solomon convenience: all multipliers one.
    pub fn reed_solomon(support: Vec<MatRingElem>, k: usize, side: Side) -> Result<Self> {
        let id = MatRingElem::identity(support[0].field(), support[0].ell());
        let multipliers = alloc::vec![id; support.len()];
        Self::new(support, multipliers, k, side)
    }

    pub fn n(&self) -> usize {
        self.support.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn support(&self) -> &[MatRingElem] {
        &self.support
    }

    pub fn ell(&self) -> usize {
        self.support[0].ell()
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        self.support[0].field()
    }

    /// Ring size `|A| = |F|^(l²)`, guarded against overflow.
    fn ring_size(&self) -> Result<u64> {
        let f = self.field().size();
        let mut size: u64 = 1;
        for _ in 0..self.ell() * self.ell() {
            size = size.checked_mul(f).ok_or(Error::TooLarge)?;
            if size > MAX_ENUMERATION {
                return Err(Error::TooLarge);
            }
        }
        Ok(size)
    }

    /// The generating words `(x_1^t·v_1, ..., x_n^t·v_n)` (left) or
    /// `(v_1·x_1^t, ...)` (right), for `t = 0..k-1`.
    pub fn generators(&self) -> Vec<Vec<MatRingElem>> {
        (0..self.k)
            .map(|t| {
                self.support
                    .iter()
                    .zip(&self.multipliers)
                    .map(|(x, v)| match self.side {
                        Side::Left => x.pow(t as u64).mul(v),
                        Side::Right => v.mul(&x.pow(t as u64)),
                    })
                    .collect()
            })
            .collect()
    }
}

/// Encodes a message polynomial of degree at most `k-1`.
pub fn encode(spec: &GrsSpec, f: &MatPoly) -> Result<Vec<MatRingElem>> {
    if f.degree().is_some_and(|d| d >= spec.k) {
        return Err(Error::DegreeTooHigh);
    }
    Ok(spec
        .support
        .iter()
        .zip(&spec.multipliers)
        .map(|(x, v)| match spec.side {
            Side::Left => evaluate(f, x, Side::Left).mul(v),
            Side::Right => v.mul(&evaluate(f, x, Side::Right)),
        })
        .collect())
}

/// Canonical sort/set key of a word: entry encodings, position-major.
pub fn word_key(word: &[MatRingElem]) -> Vec<u64> {
    word.iter().flat_map(MatRingElem::to_ints).collect()
}

fn enumerate_ring(field: &Arc<FieldDescriptor>, ell: usize, index: u64) -> MatRingElem {
    let f = field.size();
    let mut ints = Vec::with_capacity(ell * ell);
    let mut v = index;
    for _ in 0..ell * ell {
        ints.push(v % f);
        v /= f;
    }
    MatRingElem::from_ints(field, ell, &ints).expect("digits in range")
}

/// All codewords, sorted by [`word_key`] and deduplicated.
pub fn enumerate_brute(spec: &GrsSpec) -> Result<Vec<Vec<MatRingElem>>> {
    let ring = spec.ring_size()?;
    let mut total: u64 = 1;
    for _ in 0..spec.k {
        total = total.checked_mul(ring).ok_or(Error::TooLarge)?;
        if total > MAX_ENUMERATION {
            return Err(Error::TooLarge);
        }
    }
    let field = spec.field().clone();
    let ell = spec.ell();
    let mut words = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut rest = idx;
        let coeffs: Vec<MatRingElem> = (0..spec.k)
            .map(|_| {
                let coeff = enumerate_ring(&field, ell, rest % ring);
                rest /= ring;
                coeff
            })
            .collect();
        let f = MatPoly::new(coeffs);
        words.push(encode(spec, &f)?);
    }
    words.sort_by_key(|w| word_key(w));
    words.dedup_by_key(|w| word_key(w));
    Ok(words)
}

/// Exact minimum Hamming weight (positions are ring elements) over the
/// nonzero codewords; equals `n - k + 1`.
pub fn min_distance_brute(spec: &GrsSpec) -> Result<usize> {
    let words = enumerate_brute(spec)?;
    words
        .iter()
        .map(|w| w.iter().filter(|m| !m.is_zero()).count())
        .filter(|&w| w > 0)
        .min()
        .ok_or(Error::EmptyCode)
}

/// Inner product `Σ_{i=1..n} x_i y_i`.
fn inner(x: &[MatRingElem], y: &[MatRingElem]) -> MatRingElem {
    let mut acc = MatRingElem::zero(x[0].field(), x[0].ell());
    for (a, b) in x.iter().zip(y) {
        acc = acc.add(&a.mul(b));
    }
    acc
}

/// Right dual of a set: `{y : Σ s_i y_i = 0 for all s in the set}`.
/// Scanning the listed generators suffices when the set is the left module
/// they span.
pub(crate) fn right_dual_of_generators(
    generators: &[Vec<MatRingElem>],
    field: &Arc<FieldDescriptor>,
    ell: usize,
    n: usize,
) -> Result<Vec<Vec<MatRingElem>>> {
    dual_scan(generators, field, ell, n, inner)
}

/// Left dual of a set: `{y : Σ y_i s_i = 0 for all s in the set}`.
pub(crate) fn left_dual_of_generators(
    generators: &[Vec<MatRingElem>],
    field: &Arc<FieldDescriptor>,
    ell: usize,
    n: usize,
) -> Result<Vec<Vec<MatRingElem>>> {
    dual_scan(generators, field, ell, n, |g, y| inner(y, g))
}

fn dual_scan(
    generators: &[Vec<MatRingElem>],
    field: &Arc<FieldDescriptor>,
    ell: usize,
    n: usize,
    pairing: impl Fn(&[MatRingElem], &[MatRingElem]) -> MatRingElem,
) -> Result<Vec<Vec<MatRingElem>>> {
    let f = field.size();
    let mut ring: u64 = 1;
    for _ in 0..ell * ell {
        ring = ring.checked_mul(f).ok_or(Error::TooLarge)?;
    }
    let mut total: u64 = 1;
    for _ in 0..n {
        total = total.checked_mul(ring).ok_or(Error::TooLarge)?;
        if total > MAX_ENUMERATION {
            return Err(Error::TooLarge);
        }
    }
    let mut out = Vec::new();
    for idx in 0..total {
        let mut rest = idx;
        let candidate: Vec<MatRingElem> = (0..n)
            .map(|_| {
                let m = enumerate_ring(field, ell, rest % ring);
                rest /= ring;
                m
            })
            .collect();
        if generators.iter().all(|g| pairing(g, &candidate).is_zero()) {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// For a left code, the right dual; for a right code, the left dual. Words
/// come back sorted by [`word_key`].
pub fn dual_brute(spec: &GrsSpec) -> Result<Vec<Vec<MatRingElem>>> {
    let generators = spec.generators();
    let mut words = match spec.side {
        Side::Left => right_dual_of_generators(&generators, spec.field(), spec.ell(), spec.n())?,
        Side::Right => left_dual_of_generators(&generators, spec.field(), spec.ell(), spec.n())?,
    };
    words.sort_by_key(|w| word_key(w));
    Ok(words)
}

/// Embeds a block word into `A^m`: block `j` becomes the first column of
/// matrix `j`, all other entries zero. This is `F_q`-linear, injective, and
/// sends block weight to Hamming weight over `A`.
pub fn embed_blocks(word: &BlockWord, field: &Arc<FieldDescriptor>) -> Result<Vec<MatRingElem>> {
    if field.p() != word.q() {
        return Err(Error::FieldMismatch);
    }
    let ell = word.ell();
    let mut out = Vec::with_capacity(word.blocks());
    for j in 0..word.blocks() {
        let mut m = MatRingElem::zero(field, ell);
        for (r, &sym) in word.block(j).iter().enumerate() {
            m.set(r, 0, field.from_prime(sym));
        }
        out.push(m);
    }
    Ok(out)
}

/// Left inverse of [`embed_blocks`]: extracts first columns, requiring every
/// first-column entry to lie in the base field `F_q`.
pub fn project_blocks(mats: &[MatRingElem], q: u64) -> Result<BlockWord> {
    if mats.is_empty() {
        return Err(Error::ShapeMismatch);
    }
    let ell = mats[0].ell();
    let mut symbols = Vec::with_capacity(mats.len() * ell);
    for m in mats {
        if m.ell() != ell || m.field().p() != q {
            return Err(Error::ShapeMismatch);
        }
        for r in 0..ell {
            let e = m.get(r, 0);
            if !e.in_prime_subfield() {
                return Err(Error::NotInBaseField);
            }
            symbols.push(e.constant());
        }
    }
    BlockWord::new(q, ell, symbols)
}
