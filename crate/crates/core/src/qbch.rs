//! Quasi-BCH code construction: parameters, parity-check and generator
//! matrices, encoding, syndromes and block metrics.
//!
//! A word is `m` blocks of `l` symbols over `F_q` (`q` prime). It is a
//! codeword when `Σ_{j=0}^{m-1} Γ^{i·j} (c_{j+1})^T = 0` for
//! `i = 1, ..., δ-1`, with `Γ` a primitive `m`-th root of unity in
//! `M_l(F_{q^s})`. Blocks are stored as rows but enter the syndrome sums as
//! columns.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::field::{build_field, is_prime, FieldDescriptor, FieldElement};
use crate::linalg::FieldMatrix;
use crate::matrix::{find_primitive_root, gcd, validate_root, MatRingElem};
use crate::{Error, Result};

/// A word in `(F_q^l)^m`, stored as `m·l` symbols in `0..q`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BlockWord {
    q: u64,
    ell: usize,
    symbols: Vec<u64>,
}

impl BlockWord {
    pub fn new(q: u64, ell: usize, symbols: Vec<u64>) -> Result<Self> {
        if ell == 0 || symbols.is_empty() || symbols.len() % ell != 0 {
            return Err(Error::ShapeMismatch);
        }
        if symbols.iter().any(|&s| s >= q) {
            return Err(Error::BadParameters);
        }
        Ok(BlockWord { q, ell, symbols })
    }

    pub fn zero(q: u64, ell: usize, m: usize) -> Self {
        BlockWord {
            q,
            ell,
            symbols: alloc::vec![0; ell * m],
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Number of blocks.
    pub fn blocks(&self) -> usize {
        self.symbols.len() / self.ell
    }

    pub fn block(&self, i: usize) -> &[u64] {
        &self.symbols[i * self.ell..(i + 1) * self.ell]
    }

    pub fn symbols(&self) -> &[u64] {
        &self.symbols
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|&s| s == 0)
    }

    fn check_shape(&self, rhs: &BlockWord) -> Result<()> {
        if self.q != rhs.q || self.ell != rhs.ell || self.symbols.len() != rhs.symbols.len() {
            return Err(Error::ShapeMismatch);
        }
        Ok(())
    }

    /// Symbol-wise sum mod `q`.
    pub fn add(&self, rhs: &BlockWord) -> Result<BlockWord> {
        self.check_shape(rhs)?;
        let symbols = self
            .symbols
            .iter()
            .zip(&rhs.symbols)
            .map(|(&a, &b)| (a + b) % self.q)
            .collect();
        Ok(BlockWord {
            q: self.q,
            ell: self.ell,
            symbols,
        })
    }

    /// Number of nonzero blocks.
    pub fn block_weight(&self) -> usize {
        (0..self.blocks())
            .filter(|&i| self.block(i).iter().any(|&s| s != 0))
            .count()
    }

    /// Number of blocks in which the two words differ.
    pub fn block_distance(&self, rhs: &BlockWord) -> Result<usize> {
        self.check_shape(rhs)?;
        Ok((0..self.blocks())
            .filter(|&i| self.block(i) != rhs.block(i))
            .count())
    }

    /// Left cyclic shift by `l` positions (one whole block).
    pub fn shift_blocks(&self) -> BlockWord {
        let mut symbols = self.symbols[self.ell..].to_vec();
        symbols.extend_from_slice(&self.symbols[..self.ell]);
        BlockWord {
            q: self.q,
            ell: self.ell,
            symbols,
        }
    }
}

/// A validated quasi-BCH code `QBCH_q(m, l, δ, Γ)` with its derived matrices.
#[derive(Debug, Clone)]
pub struct QuasiBchSpec {
    q: u64,
    s: usize,
    ell: usize,
    m: usize,
    delta: usize,
    field: Arc<FieldDescriptor>,
    gamma: MatRingElem,
    /// `Γ^0 .. Γ^(m-1)`.
    gamma_powers: Vec<MatRingElem>,
    generator: FieldMatrix,
    pivot_cols: Vec<usize>,
}

impl QuasiBchSpec {
    /// Builds and validates a spec. When `gamma` is `None` the root is
    /// constructed deterministically; a supplied root is validated.
    pub fn build(
        q: u64,
        s: usize,
        ell: usize,
        m: usize,
        delta: usize,
        gamma: Option<MatRingElem>,
    ) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if s == 0 || ell == 0 || m < 2 || delta < 2 || delta > m {
            return Err(Error::BadParameters);
        }
        if gcd(m as u64, q) != 1 {
            return Err(Error::BadParameters);
        }
        let gamma = match gamma {
            Some(g) => {
                let f = g.field();
                if f.p() != q || f.degree() != s || g.ell() != ell {
                    return Err(Error::BadParameters);
                }
                if !validate_root(&g, m as u64) {
                    return Err(Error::InvalidRoot);
                }
                g
            }
            None => find_primitive_root(q, s, ell, m as u64).map_err(|e| match e {
                Error::NotPrime(p) => Error::NotPrime(p),
                Error::TooLarge => Error::TooLarge,
                _ => Error::BadParameters,
            })?,
        };
        let field = gamma.field().clone();
        let mut gamma_powers = Vec::with_capacity(m);
        let mut acc = MatRingElem::identity(&field, ell);
        for _ in 0..m {
            gamma_powers.push(acc.clone());
            acc = acc.mul(&gamma);
        }
        let mut spec = QuasiBchSpec {
            q,
            s,
            ell,
            m,
            delta,
            field,
            gamma,
            gamma_powers,
            generator: FieldMatrix::zeros(&build_field(q, 1)?, 0, 0),
            pivot_cols: Vec::new(),
        };
        let (generator, pivot_cols) = spec.compute_generator()?;
        spec.generator = generator;
        spec.pivot_cols = pivot_cols;
        Ok(spec)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Code length `m·l` over `F_q`.
    pub fn length(&self) -> usize {
        self.m * self.ell
    }

    /// Block length `n = m` of the matrix-ring view.
    pub fn n(&self) -> usize {
        self.m
    }

    /// Dimension `k = n - δ + 1` of the matrix-ring view.
    pub fn k(&self) -> usize {
        self.m - self.delta + 1
    }

    /// Guaranteed block-error correction radius `⌊(δ-1)/2⌋`.
    pub fn tau(&self) -> usize {
        (self.delta - 1) / 2
    }

    /// The field `F_{q^s}` the root matrix lives over.
    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }

    pub fn gamma(&self) -> &MatRingElem {
        &self.gamma
    }

    /// `Γ^i` for `0 <= i < m`.
    pub fn gamma_power(&self, i: usize) -> &MatRingElem {
        &self.gamma_powers[i % self.m]
    }

    /// `F_q`-dimension of the code.
    pub fn dim(&self) -> usize {
        self.generator.rows()
    }

    /// Generator matrix over `F_q` in reduced row echelon form.
    pub fn generator_matrix(&self) -> &FieldMatrix {
        &self.generator
    }

    /// Pivot columns of the generator matrix (the systematic positions).
    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// The `(δ-1)l × m·l` parity-check matrix over `F_{q^s}`, block `(i, j)`
    /// equal to `Γ^{i·(j-1)}` for `i = 1..δ-1`, `j = 1..m`.
    pub fn parity_matrix(&self) -> FieldMatrix {
        let ell = self.ell;
        let mut h = FieldMatrix::zeros(&self.field, (self.delta - 1) * ell, self.m * ell);
        for i in 1..self.delta {
            for j in 0..self.m {
                let power = self.gamma_power((i * j) % self.m);
                for r in 0..ell {
                    for c in 0..ell {
                        h.set((i - 1) * ell + r, j * ell + c, power.get(r, c).clone());
                    }
                }
            }
        }
        h
    }

    /// Expands the parity matrix to `F_q` (one row per base-field coordinate)
    /// and returns the RREF kernel basis as generator rows.
    fn compute_generator(&self) -> Result<(FieldMatrix, Vec<usize>)> {
        let h = self.parity_matrix();
        let prime = build_field(self.q, 1)?;
        let mut expanded = FieldMatrix::zeros(&prime, h.rows() * self.s, h.cols());
        for r in 0..h.rows() {
            for c in 0..h.cols() {
                for (t, &digit) in h.get(r, c).coeffs().iter().enumerate() {
                    expanded.set(r * self.s + t, c, prime.from_int(digit).expect("digit < q"));
                }
            }
        }
        let kernel = expanded.kernel_basis();
        let mut g = FieldMatrix::from_rows(&prime, kernel)?;
        if g.rows() == 0 {
            g = FieldMatrix::zeros(&prime, 0, h.cols());
        }
        let pivots = g.rref();
        Ok((g, pivots))
    }

    /// Encodes a message of `dim` symbols as `msg · G`.
    pub fn encode(&self, msg: &[u64]) -> Result<BlockWord> {
        if msg.len() != self.dim() {
            return Err(Error::LengthMismatch);
        }
        if msg.iter().any(|&s| s >= self.q) {
            return Err(Error::BadParameters);
        }
        let mut symbols = alloc::vec![0u64; self.length()];
        for (r, &coef) in msg.iter().enumerate() {
            if coef == 0 {
                continue;
            }
            for (c, sym) in symbols.iter_mut().enumerate() {
                *sym = (*sym + coef * self.generator.get(r, c).to_int()) % self.q;
            }
        }
        BlockWord::new(self.q, self.ell, symbols)
    }

    /// Reads the message back out of a codeword's systematic positions.
    pub fn extract_message(&self, word: &BlockWord) -> Result<Vec<u64>> {
        self.check_word(word)?;
        Ok(self.pivot_cols.iter().map(|&c| word.symbols()[c]).collect())
    }

    fn check_word(&self, word: &BlockWord) -> Result<()> {
        if word.q() != self.q || word.ell() != self.ell || word.blocks() != self.m {
            return Err(Error::ShapeMismatch);
        }
        Ok(())
    }

    /// Embeds a base-field symbol block as a column vector over `F_{q^s}`.
    fn block_column(&self, block: &[u64]) -> Vec<FieldElement> {
        block.iter().map(|&s| self.field.from_prime(s)).collect()
    }

    /// The `δ-1` syndrome columns `Σ_j Γ^{i·j} (c_{j+1})^T`, `i = 1..δ-1`.
    /// All zero iff the word is a codeword.
    pub fn syndromes(&self, word: &BlockWord) -> Result<Vec<Vec<FieldElement>>> {
        self.check_word(word)?;
        let mut out = Vec::with_capacity(self.delta - 1);
        for i in 1..self.delta {
            let mut acc = alloc::vec![self.field.zero(); self.ell];
            for j in 0..self.m {
                let col = self.block_column(word.block(j));
                let term = self.gamma_power((i * j) % self.m).mul_col(&col);
                for (a, t) in acc.iter_mut().zip(term) {
                    *a = a.add(&t);
                }
            }
            out.push(acc);
        }
        Ok(out)
    }

    pub fn is_codeword(&self, word: &BlockWord) -> Result<bool> {
        Ok(self
            .syndromes(word)?
            .iter()
            .all(|col| col.iter().all(FieldElement::is_zero)))
    }

    /// Checks stability under the block shift `T^l`: every generator row,
    /// shifted by one block, must still have zero syndromes.
    pub fn is_quasi_cyclic(&self) -> Result<bool> {
        for r in 0..self.dim() {
            let symbols: Vec<u64> = self.generator.row(r).iter().map(|e| e.to_int()).collect();
            let word = BlockWord::new(self.q, self.ell, symbols)?;
            if !self.is_codeword(&word.shift_blocks())? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
