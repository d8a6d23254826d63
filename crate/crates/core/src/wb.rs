//! Welch-Berlekamp decoding over the matrix ring.
//!
//! Given a received word within `τ` block errors of a codeword, the decoder
//! (1) embeds the word as matrices `Z_1, ..., Z_n` with the blocks in first
//! columns, (2) interpolates a nonzero `Q = Q_0(X) + Q_1(X)·Y` with
//! `(Γ^{i-1}, Z_i)Q = 0` at all `n` points and the degree bounds
//! `deg Q_0 <= n-τ-1`, `deg Q_1 <= n-τ-k`, (3) solves the linear system
//! `(X, f(X))Q = 0` for `f` of degree below `k` subject to the evaluations of
//! `f` differing from `Z` in at most `τ` positions, and (4) projects the
//! evaluations `(Γ^{i-1})f` back to base-field blocks.
//!
//! The interpolation system decouples into one identical homogeneous system
//! per column of the unknown coefficients; each column takes its own kernel
//! basis vector so that `Q_1` keeps full column diversity. Root finding
//! restricts the unknown coefficients of `f` to the columns where `Z` is
//! nonzero: any candidate with other nonzero columns would evaluate to a
//! column codeword of weight at most `τ` below the minimum distance, hence
//! zero.

use alloc::vec::Vec;

use crate::grs::{embed_blocks, project_blocks};
use crate::linalg::{solve_affine, FieldMatrix};
use crate::matrix::{evaluate, BivariatePoly, MatPoly, MatRingElem, Side};
use crate::qbch::{BlockWord, QuasiBchSpec};
use crate::{Error, Result};

/// An interpolation instance: evaluation points (already powered), received
/// matrices, message degree bound and decoding radius.
#[derive(Debug, Clone)]
pub struct WbInstance {
    points: Vec<MatRingElem>,
    z: Vec<MatRingElem>,
    k: usize,
    tau: usize,
}

impl WbInstance {
    pub fn new(
        points: Vec<MatRingElem>,
        z: Vec<MatRingElem>,
        k: usize,
        tau: usize,
    ) -> Result<Self> {
        let n = points.len();
        if n == 0 || z.len() != n || k == 0 || k + tau > n {
            return Err(Error::BadParameters);
        }
        let ell = points[0].ell();
        let field = points[0].field();
        for m in points.iter().chain(&z) {
            if m.ell() != ell || m.field() != field {
                return Err(Error::DimensionMismatch);
            }
        }
        Ok(WbInstance { points, z, k, tau })
    }

    /// Instance for a received quasi-BCH word: points `Γ^0, ..., Γ^{m-1}`,
    /// matrices from the first-column embedding of `y`.
    pub fn from_received(spec: &QuasiBchSpec, y: &BlockWord) -> Result<Self> {
        if y.q() != spec.q() || y.ell() != spec.ell() || y.blocks() != spec.m() {
            return Err(Error::ShapeMismatch);
        }
        let z = embed_blocks(y, spec.field())?;
        let points = (0..spec.m()).map(|i| spec.gamma_power(i).clone()).collect();
        Self::new(points, z, spec.k(), spec.tau())
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn points(&self) -> &[MatRingElem] {
        &self.points
    }

    pub fn z(&self) -> &[MatRingElem] {
        &self.z
    }

    fn ell(&self) -> usize {
        self.points[0].ell()
    }

    /// Degree bound count for `Q_0`: coefficients `0..n-τ`.
    fn q0_len(&self) -> usize {
        self.n() - self.tau
    }

    /// Degree bound count for `Q_1`: coefficients `0..n-τ-k+1`.
    fn q1_len(&self) -> usize {
        self.n() - self.tau - self.k + 1
    }
}

/// Right evaluations `(points_i)f` at every point.
pub fn eval_at_points(points: &[MatRingElem], f: &MatPoly) -> Vec<MatRingElem> {
    points.iter().map(|a| evaluate(f, a, Side::Right)).collect()
}

/// The homogeneous system cutting out one column of the stacked interpolation
/// coefficients; it is the same system for every column.
fn interpolation_system(inst: &WbInstance) -> FieldMatrix {
    let ell = inst.ell();
    let field = inst.points[0].field().clone();
    let n = inst.n();
    let c0 = inst.q0_len();
    let c1 = inst.q1_len();
    let unknowns = ell * (c0 + c1);

    let mut system = FieldMatrix::zeros(&field, n * ell, unknowns);
    for i in 0..n {
        let a = &inst.points[i];
        let b = &inst.z[i];
        let mut a_pow = MatRingElem::identity(&field, ell);
        for u in 0..c0.max(c1) {
            if u > 0 {
                a_pow = a_pow.mul(a);
            }
            // Q0 term: rows of a^u.
            if u < c0 {
                for r in 0..ell {
                    for rho in 0..ell {
                        system.set(i * ell + r, u * ell + rho, a_pow.get(r, rho).clone());
                    }
                }
            }
            // Q1 term: rows of a^u·b.
            if u < c1 {
                let ab = a_pow.mul(b);
                for r in 0..ell {
                    for rho in 0..ell {
                        system.set(i * ell + r, (c0 + u) * ell + rho, ab.get(r, rho).clone());
                    }
                }
            }
        }
    }
    system
}

/// Dimension of the per-column interpolation kernel; counting unknowns
/// against equations gives at least `l`.
pub fn interpolation_kernel_dimension(inst: &WbInstance) -> usize {
    let system = interpolation_system(inst);
    system.cols() - system.rank()
}

/// Finds a nonzero `Q` satisfying the interpolation conditions.
///
/// The conditions decouple per column of the stacked coefficient matrices and
/// the resulting homogeneous system is identical for every column, with more
/// unknowns than equations; its kernel has dimension at least `l`, and column
/// `c` of the solution takes kernel basis vector `c`.
pub fn interpolate(inst: &WbInstance) -> Result<BivariatePoly> {
    let ell = inst.ell();
    let field = inst.points[0].field().clone();
    let c0 = inst.q0_len();
    let c1 = inst.q1_len();
    let system = interpolation_system(inst);
    let kernel = system.kernel_basis();
    if kernel.is_empty() {
        // More unknowns than equations: cannot happen.
        return Err(Error::NoSolution);
    }
    debug_assert!(kernel.len() >= ell);
    let mut q0 = alloc::vec![MatRingElem::zero(&field, ell); c0];
    let mut q1 = alloc::vec![MatRingElem::zero(&field, ell); c1];
    for c in 0..ell {
        let vec = &kernel[c.min(kernel.len() - 1)];
        for (u, coeff) in q0.iter_mut().enumerate() {
            for rho in 0..ell {
                coeff.set(rho, c, vec[u * ell + rho].clone());
            }
        }
        for (u, coeff) in q1.iter_mut().enumerate() {
            for rho in 0..ell {
                coeff.set(rho, c, vec[(c0 + u) * ell + rho].clone());
            }
        }
    }
    let q = BivariatePoly::new(MatPoly::new(q0), MatPoly::new(q1));
    debug_assert!(satisfies_conditions(inst, &q));
    Ok(q)
}

/// Post-hoc check of the three interpolation conditions.
pub fn satisfies_conditions(inst: &WbInstance, q: &BivariatePoly) -> bool {
    if q.is_zero() {
        return false;
    }
    if q.q0.degree().is_some_and(|d| d + 1 > inst.q0_len()) {
        return false;
    }
    if q.q1.degree().is_some_and(|d| d + 1 > inst.q1_len()) {
        return false;
    }
    inst.points
        .iter()
        .zip(&inst.z)
        .all(|(a, b)| q.eval(a, b).is_zero())
}

/// Hamming distance over ring positions between `Z` and the evaluations of
/// `f`.
fn eval_distance(inst: &WbInstance, f: &MatPoly) -> usize {
    eval_at_points(&inst.points, f)
        .iter()
        .zip(&inst.z)
        .filter(|(e, z)| e != z)
        .count()
}

/// Columns in which some received matrix is nonzero; the root may only be
/// nonzero there.
fn active_columns(inst: &WbInstance) -> Vec<usize> {
    let ell = inst.ell();
    (0..ell)
        .filter(|&c| {
            inst.z
                .iter()
                .any(|m| (0..ell).any(|r| !m.get(r, c).is_zero()))
        })
        .collect()
}

struct RootShape {
    active: Vec<usize>,
    k: usize,
    ell: usize,
}

impl RootShape {
    fn unknowns(&self) -> usize {
        self.k * self.active.len()
    }

    /// Column index of unknown `(t, slot)` within one row's system.
    fn index(&self, t: usize, slot: usize) -> usize {
        t * self.active.len() + slot
    }

    fn assemble(
        &self,
        field: &alloc::sync::Arc<crate::field::FieldDescriptor>,
        rows: &[Vec<crate::field::FieldElement>],
    ) -> MatPoly {
        let mut coeffs = alloc::vec![MatRingElem::zero(field, self.ell); self.k];
        for (r, sol) in rows.iter().enumerate() {
            for t in 0..self.k {
                for (slot, &b) in self.active.iter().enumerate() {
                    coeffs[t].set(r, b, sol[self.index(t, slot)].clone());
                }
            }
        }
        MatPoly::new(coeffs)
    }
}

/// Finds the message polynomial: the solution of `(X, f(X))Q = 0` of degree
/// below `k` whose evaluations differ from `Z` in at most `τ` positions.
pub fn find_root(inst: &WbInstance, q: &BivariatePoly) -> Result<MatPoly> {
    let ell = inst.ell();
    let field = inst.points[0].field().clone();
    let shape = RootShape {
        active: active_columns(inst),
        k: inst.k,
        ell,
    };
    let w_count = inst.q0_len();

    // Per-row affine system: the coefficient entry of unknown (t, b) in
    // equation (w, c) is Q1_{w-t}[b, c]; the constant is Q0_w[r, c].
    let mut coeff = FieldMatrix::zeros(&field, w_count * ell, shape.unknowns());
    for w in 0..w_count {
        for c in 0..ell {
            for t in 0..inst.k.min(w + 1) {
                let Some(q1c) = q.q1.coeffs().get(w - t) else {
                    continue;
                };
                for (slot, &b) in shape.active.iter().enumerate() {
                    coeff.set(w * ell + c, shape.index(t, slot), q1c.get(b, c).clone());
                }
            }
        }
    }

    let mut row_solutions = Vec::with_capacity(ell);
    let mut unique = true;
    for r in 0..ell {
        let rhs: Vec<_> = (0..w_count * ell)
            .map(|eq| {
                let (w, c) = (eq / ell, eq % ell);
                q.q0.coeffs()
                    .get(w)
                    .map_or(field.zero(), |m| m.get(r, c).neg())
            })
            .collect();
        match solve_affine(&coeff, &rhs) {
            None => return Err(Error::DecodingFailure),
            Some(sol) => {
                unique &= sol.is_unique();
                row_solutions.push(sol.particular);
            }
        }
    }

    if unique {
        let f = shape.assemble(&field, &row_solutions);
        debug_assert!(q.substitute_y(&f).is_zero());
        if eval_distance(inst, &f) <= inst.tau {
            return Ok(f);
        }
        return Err(Error::DecodingFailure);
    }

    root_by_erasure_subsets(inst, q, &shape)
}

/// All size-`e` subsets of `0..n` in lexicographic order.
fn combinations(n: usize, e: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, e: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == e {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, e, &mut Vec::with_capacity(e), &mut out);
    out
}

/// Fallback for underdetermined systems: additionally pin the evaluations of
/// `f` on the complement of a candidate error position set, trying subset
/// sizes `0..=τ` in lexicographic order. Any solution agrees with `Z` outside
/// the subset, so it passes the distance filter by construction.
fn root_by_erasure_subsets(
    inst: &WbInstance,
    q: &BivariatePoly,
    shape: &RootShape,
) -> Result<MatPoly> {
    let ell = inst.ell();
    let field = inst.points[0].field().clone();
    let n = inst.n();
    let w_count = inst.q0_len();
    let unknowns = ell * shape.unknowns();
    // Row-major unknown layout: (r, t, slot).
    let col_of = |r: usize, t: usize, slot: usize| r * shape.unknowns() + shape.index(t, slot);

    let mut found: Vec<MatPoly> = Vec::new();
    for e in 0..=inst.tau {
        for subset in combinations(n, e) {
            let keep: Vec<usize> = (0..n).filter(|i| !subset.contains(i)).collect();
            let eq_count = w_count * ell * ell + keep.len() * ell * shape.active.len();
            let mut a = FieldMatrix::zeros(&field, eq_count, unknowns);
            let mut rhs = alloc::vec![field.zero(); eq_count];
            let mut eq = 0;
            // (X, f(X))Q = 0, every entry.
            for w in 0..w_count {
                for r in 0..ell {
                    for c in 0..ell {
                        for t in 0..inst.k.min(w + 1) {
                            if let Some(q1c) = q.q1.coeffs().get(w - t) {
                                for (slot, &b) in shape.active.iter().enumerate() {
                                    a.set(eq, col_of(r, t, slot), q1c.get(b, c).clone());
                                }
                            }
                        }
                        if let Some(m) = q.q0.coeffs().get(w) {
                            rhs[eq] = m.get(r, c).neg();
                        }
                        eq += 1;
                    }
                }
            }
            // (points_i)f = Z_i on the kept positions, active columns.
            for &i in &keep {
                let mut powers = Vec::with_capacity(inst.k);
                let mut a_pow = MatRingElem::identity(&field, ell);
                for t in 0..inst.k {
                    if t > 0 {
                        a_pow = a_pow.mul(&inst.points[i]);
                    }
                    powers.push(a_pow.clone());
                }
                for r in 0..ell {
                    for (slot, &b) in shape.active.iter().enumerate() {
                        for (t, p) in powers.iter().enumerate() {
                            for rho in 0..ell {
                                a.set(eq, col_of(rho, t, slot), p.get(r, rho).clone());
                            }
                        }
                        rhs[eq] = inst.z[i].get(r, b).clone();
                        eq += 1;
                    }
                }
            }
            if let Some(sol) = solve_affine(&a, &rhs) {
                let rows: Vec<Vec<crate::field::FieldElement>> = (0..ell)
                    .map(|r| {
                        sol.particular[r * shape.unknowns()..(r + 1) * shape.unknowns()].to_vec()
                    })
                    .collect();
                let f = shape.assemble(&field, &rows);
                if q.substitute_y(&f).is_zero()
                    && eval_distance(inst, &f) <= inst.tau
                    && !found.contains(&f)
                {
                    found.push(f);
                }
            }
        }
        match found.len() {
            0 => {}
            1 => return Ok(found.pop().unwrap()),
            _ => return Err(Error::AmbiguousRoot),
        }
    }
    Err(Error::DecodingFailure)
}

/// Full Welch-Berlekamp decode: returns the unique codeword within block
/// distance `τ` of `y`, or `DecodingFailure`.
pub fn decode(spec: &QuasiBchSpec, y: &BlockWord) -> Result<BlockWord> {
    let inst = WbInstance::from_received(spec, y)?;
    let q = interpolate(&inst)?;
    let f = match find_root(&inst, &q) {
        Ok(f) => f,
        Err(Error::AmbiguousRoot) => return Err(Error::AmbiguousRoot),
        Err(_) => return Err(Error::DecodingFailure),
    };
    let evals = eval_at_points(inst.points(), &f);
    let word = project_blocks(&evals, spec.q()).map_err(|_| Error::DecodingFailure)?;
    if !spec.is_codeword(&word)? {
        return Err(Error::DecodingFailure);
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;
    use crate::matrix::MatRingElem;
    use crate::qbch::QuasiBchSpec;

    fn all_messages(spec: &QuasiBchSpec) -> Vec<Vec<u64>> {
        let dim = spec.dim();
        let q = spec.q();
        let total = q.pow(dim as u32);
        (0..total)
            .map(|enc| {
                let mut msg = Vec::with_capacity(dim);
                let mut v = enc;
                for _ in 0..dim {
                    msg.push(v % q);
                    v /= q;
                }
                msg
            })
            .collect()
    }

    #[test]
    fn interpolation_conditions_hold_for_zero_word() {
        let spec = QuasiBchSpec::build(2, 2, 2, 5, 3, None).unwrap();
        let inst = WbInstance::from_received(&spec, &BlockWord::zero(2, 2, 5)).unwrap();
        let q = interpolate(&inst).unwrap();
        assert!(satisfies_conditions(&inst, &q));
        let f = find_root(&inst, &q).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn interpolation_kernel_has_column_slack() {
        // The per-column system has l(n+δ-2τ) unknowns and nl equations, so
        // its kernel dimension is at least l.
        let spec = QuasiBchSpec::build(2, 2, 2, 5, 3, None).unwrap();
        let mut seed = 13u64;
        for _ in 0..10 {
            let symbols: Vec<u64> = (0..10)
                .map(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(7);
                    (seed >> 33) % 2
                })
                .collect();
            let y = BlockWord::new(2, 2, symbols).unwrap();
            let inst = WbInstance::from_received(&spec, &y).unwrap();
            assert!(interpolation_kernel_dimension(&inst) >= 2);
            let q = interpolate(&inst).unwrap();
            assert!(satisfies_conditions(&inst, &q));
        }
    }

    #[test]
    fn decode_identity_on_codewords_tau_zero() {
        let spec = QuasiBchSpec::build(2, 1, 2, 3, 2, None).unwrap();
        for msg in all_messages(&spec) {
            let word = spec.encode(&msg).unwrap();
            assert_eq!(decode(&spec, &word).unwrap(), word);
        }
    }

    #[test]
    fn decode_corrects_all_single_block_errors() {
        // Every codeword, every error position, every nonzero error block.
        for (q, s, ell, m, delta) in [(2, 2, 2, 5, 3), (2, 1, 2, 3, 3)] {
            let spec = QuasiBchSpec::build(q, s, ell, m, delta, None).unwrap();
            assert_eq!(spec.tau(), 1);
            for msg in all_messages(&spec) {
                let word = spec.encode(&msg).unwrap();
                for pos in 0..m {
                    for pattern in 1..4u64 {
                        let mut err = alloc::vec![0u64; spec.length()];
                        err[pos * 2] = pattern & 1;
                        err[pos * 2 + 1] = (pattern >> 1) & 1;
                        let e = BlockWord::new(2, 2, err).unwrap();
                        let received = word.add(&e).unwrap();
                        assert_eq!(decode(&spec, &received).unwrap(), word);
                    }
                }
            }
        }
    }

    #[test]
    fn two_block_errors_are_rejected() {
        // With minimum block distance 5 and τ = 1, no codeword lies within
        // distance 1 of a word two blocks away from a codeword.
        let spec = QuasiBchSpec::build(2, 2, 2, 5, 3, None).unwrap();
        let word = spec.encode(&alloc::vec![1, 0]).unwrap();
        let mut err = alloc::vec![0u64; 10];
        err[0] = 1;
        err[4] = 1;
        let received = word.add(&BlockWord::new(2, 2, err).unwrap()).unwrap();
        assert_eq!(
            decode(&spec, &received).unwrap_err(),
            Error::DecodingFailure
        );
    }

    #[test]
    fn shape_mismatch_rejected() {
        let spec = QuasiBchSpec::build(2, 1, 2, 3, 2, None).unwrap();
        let wrong = BlockWord::zero(2, 2, 5);
        assert_eq!(decode(&spec, &wrong).unwrap_err(), Error::ShapeMismatch);
    }

    #[test]
    fn true_root_annihilates_any_valid_interpolation() {
        // Recover f from a clean codeword, corrupt one block, re-interpolate
        // and check (X, f(X))Q = 0 still holds.
        let spec = QuasiBchSpec::build(2, 2, 2, 5, 3, None).unwrap();
        let word = spec.encode(&alloc::vec![1, 1]).unwrap();
        let clean = WbInstance::from_received(&spec, &word).unwrap();
        let q_clean = interpolate(&clean).unwrap();
        let f_true = find_root(&clean, &q_clean).unwrap();

        let mut err = alloc::vec![0u64; 10];
        err[6] = 1;
        let received = word.add(&BlockWord::new(2, 2, err).unwrap()).unwrap();
        let noisy = WbInstance::from_received(&spec, &received).unwrap();
        let q_noisy = interpolate(&noisy).unwrap();
        assert!(q_noisy.substitute_y(&f_true).is_zero());
    }

    #[test]
    fn substituted_polynomial_degree_is_bounded() {
        let spec = QuasiBchSpec::build(2, 2, 2, 5, 3, None).unwrap();
        let f4 = build_field(2, 2).unwrap();
        let mut seed = 23u64;
        let mut rand_mat = || {
            let ints: Vec<u64> = (0..4)
                .map(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(11);
                    (seed >> 33) % 4
                })
                .collect();
            MatRingElem::from_ints(&f4, 2, &ints).unwrap()
        };
        for _ in 0..20 {
            let symbols: Vec<u64> = (0..10).map(|i| (i as u64) % 2).collect();
            let y = BlockWord::new(2, 2, symbols).unwrap();
            let inst = WbInstance::from_received(&spec, &y).unwrap();
            let q = interpolate(&inst).unwrap();
            let f = MatPoly::new((0..spec.k()).map(|_| rand_mat()).collect());
            let composed = q.substitute_y(&f);
            let bound = inst.n() - inst.tau() - 1;
            assert!(composed.degree().is_none_or(|d| d <= bound));
        }
    }
}
