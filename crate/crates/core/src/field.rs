//! Exact arithmetic in small prime fields and their extensions.
//!
//! A field `F_{p^d}` is described by a monic irreducible modulus over `F_p`;
//! elements are coefficient vectors (ascending powers) reduced mod `p` and the
//! modulus. [`build_field`] picks the canonical modulus: the lexicographically
//! smallest monic *primitive* polynomial, ordered by the base-`p` integer
//! encoding of its coefficients read from the constant term upward. Subfield
//! inclusions such as `F_{q^s} ⊆ F_{q^{s'}}` are realized by [`TowerEmbedding`],
//! which maps the source generator to an explicit root of the source modulus.
//!
//! All operations are exact; fields are expected to stay desk-sized and the
//! constructor refuses `p^d > 2^20`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Hard cap on field size, matching the brute-force guards elsewhere.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// An explicit finite field `F_{p^d} = F_p[x]/(modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldDescriptor {
    p: u64,
    d: usize,
    /// Ascending coefficients, length `d + 1`, monic.
    modulus: Vec<u64>,
}

impl FieldDescriptor {
    /// Builds a descriptor from an explicit modulus, validating that `p` is
    /// prime and the modulus is monic and irreducible over `F_p`.
    pub fn new(p: u64, d: usize, modulus: Vec<u64>) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if d == 0 || modulus.len() != d + 1 {
            return Err(Error::BadParameters);
        }
        if modulus[d] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadParameters);
        }
        if field_size(p, d)? > MAX_FIELD_SIZE {
            return Err(Error::TooLarge);
        }
        if !poly_is_irreducible(p, &modulus) {
            return Err(Error::BadParameters);
        }
        Ok(Arc::new(FieldDescriptor { p, d, modulus }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Number of elements `p^d`.
    pub fn size(&self) -> u64 {
        field_size(self.p, self.d).expect("validated at construction")
    }

    /// The zero element.
    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![0; self.d],
        }
    }

    /// The multiplicative identity.
    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_int(1).expect("1 < p^d")
    }

    /// The class of `x`, i.e. the canonical generator of the extension.
    /// For `d = 1` this is the constant 0 (the modulus is `x`).
    pub fn gen(self: &Arc<Self>) -> FieldElement {
        if self.d == 1 {
            // x ≡ -modulus[0]
            let c = (self.p - self.modulus[0] % self.p) % self.p;
            return self.from_int(c).expect("reduced");
        }
        let mut coeffs = vec![0; self.d];
        coeffs[1] = 1;
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// Decodes the base-`p` positional encoding `Σ c_i p^i`.
    pub fn from_int(self: &Arc<Self>, mut v: u64) -> Result<FieldElement> {
        if v >= self.size() {
            return Err(Error::BadParameters);
        }
        let mut coeffs = vec![0; self.d];
        for c in coeffs.iter_mut() {
            *c = v % self.p;
            v /= self.p;
        }
        Ok(FieldElement {
            field: self.clone(),
            coeffs,
        })
    }

    /// Builds an element from a constant of the prime subfield.
    pub fn from_prime(self: &Arc<Self>, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.d];
        coeffs[0] = c % self.p;
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// Iterates over all elements in encoding order.
    pub fn iter(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size()).map(move |v| self.from_int(v).expect("in range"))
    }

    /// The smallest-encoding generator of the multiplicative group. For the
    /// canonical fields of [`build_field`] with `d >= 2` this is the class
    /// of `x`; for prime fields (whose conventional modulus is `x`) and for
    /// descriptors with an imprimitive modulus it is found by search.
    pub fn multiplicative_generator(self: &Arc<Self>) -> FieldElement {
        let order = self.size() - 1;
        let factors = prime_factors(order);
        self.iter()
            .skip(1)
            .find(|a| element_has_order(a, order, &factors))
            .expect("the multiplicative group of a finite field is cyclic")
    }
}

/// An element of a [`FieldDescriptor`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Arc<FieldDescriptor>,
    /// Ascending coefficients, length `d`, each `< p`.
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Base-`p` positional encoding `Σ c_i p^i`.
    pub fn to_int(&self) -> u64 {
        let mut v = 0;
        for &c in self.coeffs.iter().rev() {
            v = v * self.field.p + c;
        }
        v
    }

    /// True when the element lies in the prime subfield `F_p`.
    pub fn in_prime_subfield(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// The constant coefficient; meaningful together with
    /// [`in_prime_subfield`](Self::in_prime_subfield).
    pub fn constant(&self) -> u64 {
        self.coeffs[0]
    }

    fn assert_same_field(&self, rhs: &FieldElement) {
        assert_eq!(
            self.field, rhs.field,
            "field elements from different fields"
        );
    }

    pub fn add(&self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let p = self.field.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let p = self.field.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn mul(&self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let p = self.field.p;
        let mut prod = vec![0u64; 2 * self.field.d - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        poly_rem_in_place(p, &mut prod, &self.field.modulus);
        prod.resize(self.field.d, 0);
        FieldElement {
            field: self.field.clone(),
            coeffs: prod,
        }
    }

    /// Scales by a prime-subfield constant.
    pub fn scale(&self, c: u64) -> FieldElement {
        let p = self.field.p;
        let c = c % p;
        let coeffs = self.coeffs.iter().map(|&a| a * c % p).collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
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

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // a^(|F|-2) = a^(-1) in a field of size |F|.
        Ok(self.pow(self.field.size() - 2))
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&rhs.inv()?))
    }
}

/// Canonical field construction: the lexicographically smallest monic
/// primitive modulus of degree `d` over `F_p`, where polynomials are ordered
/// by the integer encoding of their coefficients (constant term least
/// significant). For `d = 1` the modulus is `x` by convention.
pub fn build_field(p: u64, d: usize) -> Result<Arc<FieldDescriptor>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if d == 0 {
        return Err(Error::BadParameters);
    }
    let size = field_size(p, d)?;
    if size > MAX_FIELD_SIZE {
        return Err(Error::TooLarge);
    }
    if d == 1 {
        return FieldDescriptor::new(p, 1, vec![0, 1]);
    }
    let group_order = size - 1;
    let prime_factors = prime_factors(group_order);
    for enc in 0..size {
        let mut modulus = Vec::with_capacity(d + 1);
        let mut v = enc;
        for _ in 0..d {
            modulus.push(v % p);
            v /= p;
        }
        modulus.push(1);
        if !poly_is_irreducible(p, &modulus) {
            continue;
        }
        let field = Arc::new(FieldDescriptor {
            p,
            d,
            modulus: modulus.clone(),
        });
        if element_has_order(&field.gen(), group_order, &prime_factors) {
            return Ok(field);
        }
    }
    Err(Error::Internal("no primitive polynomial found"))
}

/// Smallest `t >= 1` with `a^t = 1`; divides `p^d - 1`.
pub fn element_order(a: &FieldElement) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let group_order = a.field().size() - 1;
    let mut divisors: Vec<u64> = Vec::new();
    let mut s = 1;
    while s * s <= group_order {
        if group_order % s == 0 {
            divisors.push(s);
            divisors.push(group_order / s);
        }
        s += 1;
    }
    divisors.sort_unstable();
    divisors.dedup();
    for t in divisors {
        if a.pow(t).to_int() == 1 {
            return Ok(t);
        }
    }
    Err(Error::Internal("element order not found"))
}

fn element_has_order(a: &FieldElement, order: u64, prime_factors: &[u64]) -> bool {
    if a.is_zero() || a.pow(order).to_int() != 1 {
        return false;
    }
    prime_factors
        .iter()
        .all(|&r| a.pow(order / r).to_int() != 1)
}

/// An embedding `F_{p^e} -> F_{p^d}` (with `e | d`) determined by sending the
/// source generator to a root of the source modulus in the destination.
#[derive(Debug, Clone)]
pub struct TowerEmbedding {
    src: Arc<FieldDescriptor>,
    dst: Arc<FieldDescriptor>,
    /// `generator_image^0 .. generator_image^(e-1)`.
    powers: Vec<FieldElement>,
}

impl TowerEmbedding {
    /// Finds the root of the source modulus in the destination with the
    /// smallest integer encoding (exhaustive search; fields are tiny).
    pub fn new(src: &Arc<FieldDescriptor>, dst: &Arc<FieldDescriptor>) -> Result<Self> {
        if src.p != dst.p || dst.d % src.d != 0 {
            return Err(Error::FieldMismatch);
        }
        let root = dst
            .iter()
            .find(|cand| eval_prime_poly(&src.modulus, cand).is_zero())
            .ok_or(Error::Internal("subfield root must exist"))?;
        let mut powers = Vec::with_capacity(src.d);
        let mut acc = dst.one();
        for _ in 0..src.d {
            powers.push(acc.clone());
            acc = acc.mul(&root);
        }
        Ok(TowerEmbedding {
            src: src.clone(),
            dst: dst.clone(),
            powers,
        })
    }

    pub fn src(&self) -> &Arc<FieldDescriptor> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<FieldDescriptor> {
        &self.dst
    }

    /// Image of the source generator.
    pub fn generator_image(&self) -> &FieldElement {
        if self.src.d == 1 {
            &self.powers[0]
        } else {
            &self.powers[1]
        }
    }

    /// Applies the embedding.
    pub fn apply(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.field != self.src {
            return Err(Error::FieldMismatch);
        }
        let mut acc = self.dst.zero();
        for (c, pw) in x.coeffs.iter().zip(&self.powers) {
            acc = acc.add(&pw.scale(*c));
        }
        Ok(acc)
    }
}

/// Evaluates a polynomial with prime-subfield coefficients at `x`.
fn eval_prime_poly(coeffs: &[u64], x: &FieldElement) -> FieldElement {
    let mut acc = x.field().zero();
    for &c in coeffs.iter().rev() {
        acc = acc.mul(x).add(&x.field().from_prime(c));
    }
    acc
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut t = 2;
    while t * t <= n {
        if n % t == 0 {
            return false;
        }
        t += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut t = 2;
    while t * t <= n {
        if n % t == 0 {
            out.push(t);
            while n % t == 0 {
                n /= t;
            }
        }
        t += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn field_size(p: u64, d: usize) -> Result<u64> {
    let mut size: u64 = 1;
    for _ in 0..d {
        size = size.checked_mul(p).ok_or(Error::TooLarge)?;
        if size > MAX_FIELD_SIZE {
            return Err(Error::TooLarge);
        }
    }
    Ok(size)
}

/// Remainder of `poly` modulo the monic `modulus`, in place over `F_p`.
fn poly_rem_in_place(p: u64, poly: &mut Vec<u64>, modulus: &[u64]) {
    let dm = modulus.len() - 1;
    while poly.len() > dm {
        let lead = *poly.last().unwrap();
        let deg = poly.len() - 1;
        if lead != 0 {
            for (i, &mc) in modulus.iter().enumerate() {
                let idx = deg - dm + i;
                poly[idx] = (poly[idx] + (p - mc % p) % p * lead) % p;
            }
        }
        poly.pop();
    }
    while poly.len() > 1 && *poly.last().unwrap() == 0 {
        poly.pop();
    }
}

/// Trial division against every monic polynomial of degree `1..=deg/2`.
fn poly_is_irreducible(p: u64, poly: &[u64]) -> bool {
    let deg = poly.len() - 1;
    if deg == 1 {
        return true;
    }
    for div_deg in 1..=deg / 2 {
        let mut count: u64 = 1;
        for _ in 0..div_deg {
            count *= p;
        }
        for enc in 0..count {
            let mut divisor = Vec::with_capacity(div_deg + 1);
            let mut v = enc;
            for _ in 0..div_deg {
                divisor.push(v % p);
                v /= p;
            }
            divisor.push(1);
            let mut rem = poly.to_vec();
            poly_rem_in_place(p, &mut rem, &divisor);
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent irreducibility oracle: checks divisibility by every monic
    /// polynomial of every intermediate degree (not just up to deg/2).
    fn oracle_irreducible(p: u64, poly: &[u64]) -> bool {
        let deg = poly.len() - 1;
        for div_deg in 1..deg {
            let count = p.pow(div_deg as u32);
            for enc in 0..count {
                let mut divisor = Vec::new();
                let mut v = enc;
                for _ in 0..div_deg {
                    divisor.push(v % p);
                    v /= p;
                }
                divisor.push(1);
                let mut rem = poly.to_vec();
                poly_rem_in_place(p, &mut rem, &divisor);
                if rem.iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn build_field_prime_convention() {
        let f = build_field(2, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.size(), 2);
    }

    #[test]
    fn build_field_f4_unique_quadratic() {
        // Enumerate all monic quadratics over F_2 with the oracle: exactly one
        // is irreducible, so build_field has no choice.
        let mut irreducible = Vec::new();
        for enc in 0..4u64 {
            let poly = vec![enc % 2, enc / 2, 1];
            if oracle_irreducible(2, &poly) {
                irreducible.push(poly);
            }
        }
        assert_eq!(irreducible, vec![vec![1, 1, 1]]);
        let f = build_field(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn build_field_f16_smallest_primitive() {
        // Oracle: walk quartics in encoding order and pick the first that is
        // irreducible with a generator of order 15.
        let mut expected = None;
        'outer: for enc in 0..16u64 {
            let poly = vec![enc % 2, (enc >> 1) % 2, (enc >> 2) % 2, (enc >> 3) % 2, 1];
            if !oracle_irreducible(2, &poly) {
                continue;
            }
            let f = FieldDescriptor::new(2, 4, poly.clone()).unwrap();
            let g = f.gen();
            let mut acc = f.one();
            for _ in 1..15 {
                acc = acc.mul(&g);
                if acc.to_int() == 1 {
                    continue 'outer; // order t < 15
                }
            }
            assert_eq!(acc.mul(&g).to_int(), 1);
            expected = Some(poly);
            break;
        }
        // x^4 + x + 1
        assert_eq!(expected.as_deref(), Some(&[1, 1, 0, 0, 1][..]));
        let f = build_field(2, 4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn build_field_rejects_composite() {
        assert_eq!(build_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(build_field(1, 2).unwrap_err(), Error::NotPrime(1));
    }

    #[test]
    fn build_field_deterministic() {
        for (p, d) in [(2, 2), (2, 4), (3, 2), (5, 2), (2, 8)] {
            let a = build_field(p, d).unwrap();
            let b = build_field(p, d).unwrap();
            assert_eq!(a.modulus(), b.modulus());
        }
    }

    #[test]
    fn f4_multiplication() {
        let f = build_field(2, 2).unwrap();
        let w = f.gen();
        // w^2 = w + 1 under x^2 + x + 1.
        assert_eq!(w.mul(&w), w.add(&f.one()));
    }

    #[test]
    fn inverse_of_one() {
        for (p, d) in [(2, 1), (2, 2), (3, 2), (7, 1)] {
            let f = build_field(p, d).unwrap();
            assert_eq!(f.one().inv().unwrap(), f.one());
        }
    }

    #[test]
    fn characteristic_two_addition() {
        let f = build_field(2, 1).unwrap();
        let one = f.one();
        assert!(one.add(&one).is_zero());
    }

    #[test]
    fn division_by_zero() {
        let f = build_field(2, 2).unwrap();
        assert_eq!(f.zero().inv().unwrap_err(), Error::DivisionByZero);
        assert_eq!(f.one().div(&f.zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn inverses_multiply_to_one() {
        for (p, d) in [(2, 4), (3, 2), (5, 1)] {
            let f = build_field(p, d).unwrap();
            for a in f.iter().skip(1) {
                assert_eq!(a.mul(&a.inv().unwrap()), f.one());
            }
        }
    }

    #[test]
    fn order_examples() {
        let f4 = build_field(2, 2).unwrap();
        assert_eq!(element_order(&f4.one()).unwrap(), 1);
        // Brute-force oracle: power w until it hits 1.
        let w = f4.gen();
        let mut acc = f4.one();
        let mut t = 0;
        loop {
            acc = acc.mul(&w);
            t += 1;
            if acc.to_int() == 1 {
                break;
            }
        }
        assert_eq!(t, 3);
        assert_eq!(element_order(&w).unwrap(), 3);

        let f16 = build_field(2, 4).unwrap();
        let g3 = f16.gen().pow(3);
        assert_eq!(element_order(&g3).unwrap(), 5);
        assert_eq!(element_order(&f16.zero()).unwrap_err(), Error::ZeroElement);
    }

    #[test]
    fn order_divides_group_order() {
        for (p, d) in [(2, 4), (3, 2)] {
            let f = build_field(p, d).unwrap();
            for a in f.iter().skip(1) {
                assert_eq!((f.size() - 1) % element_order(&a).unwrap(), 0);
            }
        }
    }

    #[test]
    fn embed_f4_in_f16() {
        let f4 = build_field(2, 2).unwrap();
        let f16 = build_field(2, 4).unwrap();
        let emb = TowerEmbedding::new(&f4, &f16).unwrap();
        // The image of w is the smallest-encoding root of x^2 + x + 1 in
        // F_16, which is g^5 for the canonical generator g.
        let g5 = f16.gen().pow(5);
        assert_eq!(emb.apply(&f4.gen()).unwrap(), g5);
        assert_eq!(element_order(&g5).unwrap(), 3);
        assert!(emb.apply(&f4.zero()).unwrap().is_zero());
        assert_eq!(emb.apply(&f4.one()).unwrap(), f16.one());
    }

    #[test]
    fn embed_injective_and_homomorphic_exhaustively() {
        let pairs = [((2, 2), (2, 4)), ((2, 1), (2, 4)), ((3, 1), (3, 2))];
        for ((ps, ds), (pd, dd)) in pairs {
            let src = build_field(ps, ds).unwrap();
            let dst = build_field(pd, dd).unwrap();
            let emb = TowerEmbedding::new(&src, &dst).unwrap();
            let images: Vec<_> = src.iter().map(|a| emb.apply(&a).unwrap()).collect();
            for (i, x) in images.iter().enumerate() {
                for y in &images[..i] {
                    assert_ne!(x, y, "embedding must be injective");
                }
            }
            for a in src.iter() {
                for b in src.iter() {
                    assert_eq!(
                        emb.apply(&a.add(&b)).unwrap(),
                        emb.apply(&a).unwrap().add(&emb.apply(&b).unwrap())
                    );
                    assert_eq!(
                        emb.apply(&a.mul(&b)).unwrap(),
                        emb.apply(&a).unwrap().mul(&emb.apply(&b).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn embed_field_mismatch() {
        let f4 = build_field(2, 2).unwrap();
        let f16 = build_field(2, 4).unwrap();
        let f9 = build_field(3, 2).unwrap();
        assert_eq!(
            TowerEmbedding::new(&f9, &f16).unwrap_err(),
            Error::FieldMismatch
        );
        // 2 does not divide 5: no embedding F_4 -> F_32.
        let f32 = build_field(2, 5).unwrap();
        assert_eq!(
            TowerEmbedding::new(&f4, &f32).unwrap_err(),
            Error::FieldMismatch
        );
        let emb = TowerEmbedding::new(&f4, &f16).unwrap();
        assert_eq!(emb.apply(&f16.one()).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn identity_embedding_fixes_generator() {
        for (p, d) in [(2, 2), (2, 4), (3, 2)] {
            let f = build_field(p, d).unwrap();
            let emb = TowerEmbedding::new(&f, &f).unwrap();
            assert_eq!(emb.apply(&f.gen()).unwrap(), f.gen());
        }
    }

    #[test]
    fn encoding_round_trip() {
        let f = build_field(3, 2).unwrap();
        for v in 0..f.size() {
            assert_eq!(f.from_int(v).unwrap().to_int(), v);
        }
        assert!(f.from_int(9).is_err());
    }

    proptest::proptest! {
        #[test]
        fn frobenius_is_additive(a in 0u64..16, b in 0u64..16) {
            let f = build_field(2, 4).unwrap();
            let x = f.from_int(a).unwrap();
            let y = f.from_int(b).unwrap();
            proptest::prop_assert_eq!(
                x.add(&y).pow(2),
                x.pow(2).add(&y.pow(2))
            );
        }

        #[test]
        fn frobenius_is_additive_p3(a in 0u64..9, b in 0u64..9) {
            let f = build_field(3, 2).unwrap();
            let x = f.from_int(a).unwrap();
            let y = f.from_int(b).unwrap();
            proptest::prop_assert_eq!(
                x.add(&y).pow(3),
                x.pow(3).add(&y.pow(3))
            );
        }

        #[test]
        fn embed_preserves_random_sums(a in 0u64..4, b in 0u64..4) {
            let f4 = build_field(2, 2).unwrap();
            let f16 = build_field(2, 4).unwrap();
            let emb = TowerEmbedding::new(&f4, &f16).unwrap();
            let x = f4.from_int(a).unwrap();
            let y = f4.from_int(b).unwrap();
            proptest::prop_assert_eq!(
                emb.apply(&x.add(&y)).unwrap(),
                emb.apply(&x).unwrap().add(&emb.apply(&y).unwrap())
            );
        }
    }
}
