//! Matrix representations of Cl(p,q): the classification table for
//! `p + q <= 7` and explicit faithful matrix images for `p + q <= 4`.
//!
//! Matrices are stored over `Complex64`; quaternionic entries are realized
//! as 2×2 complex blocks, and the doubled rings `²F` as pairs of matrices.

use nalgebra::{DMatrix, Vector2};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{blade, check_unit_vector, Multivector, Signature, Tolerance};
use crate::basis::pauli_pseudoscalar;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Ring {
    R,
    C,
    H,
}

impl Ring {
    pub fn real_dim(self) -> usize {
        match self {
            Ring::R => 1,
            Ring::C => 2,
            Ring::H => 4,
        }
    }
}

/// `F(size)` or, with `doubling`, `²F(size)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RepTag {
    pub ring: Ring,
    pub size: usize,
    pub doubling: bool,
}

impl RepTag {
    pub fn real_dim(&self) -> usize {
        self.ring.real_dim() * self.size * self.size * if self.doubling { 2 } else { 1 }
    }
}

impl std::fmt::Display for RepTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.doubling {
            f.write_str("2")?;
        }
        write!(f, "{:?}", self.ring)?;
        if self.size > 1 {
            write!(f, "({})", self.size)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for RepTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || format!("not a representation tag: `{s}`");
        let (doubling, rest) = match s.strip_prefix('2') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let mut chars = rest.chars();
        let ring = match chars.next() {
            Some('R') => Ring::R,
            Some('C') => Ring::C,
            Some('H') => Ring::H,
            _ => return Err(bad()),
        };
        let tail = chars.as_str();
        let size = if tail.is_empty() {
            1
        } else {
            tail.strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .and_then(|t| t.parse().ok())
                .ok_or_else(bad)?
        };
        Ok(RepTag { ring, size, doubling })
    }
}

/// Table entry for `n = p + q <= 7`, indexed by `s = p - q` modulo 8.
pub fn rep_lookup(sig: Signature) -> Result<RepTag> {
    let n = sig.dim();
    if n > 7 {
        return Err(Error::OutOfTable { p: sig.p(), q: sig.q() });
    }
    let (ring, doubling) = match sig.signature_index().rem_euclid(8) {
        0 | 2 => (Ring::R, false),
        1 => (Ring::R, true),
        3 | 7 => (Ring::C, false),
        4 | 6 => (Ring::H, false),
        _ => (Ring::H, true),
    };
    let cells = (1usize << n) / (ring.real_dim() * if doubling { 2 } else { 1 });
    let size = (cells as f64).sqrt().round() as usize;
    Ok(RepTag { ring, size, doubling })
}

/// One block per summand of the matrix algebra.
pub type Blocks = Vec<DMatrix<Complex64>>;

/// Matrix images of the basis vectors of a signature.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep {
    sig: Signature,
    tag: RepTag,
    generators: Vec<Blocks>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn mat2(entries: [[Complex64; 2]; 2]) -> DMatrix<Complex64> {
    DMatrix::from_fn(2, 2, |r, col| entries[r][col])
}

fn pauli_matrices() -> [DMatrix<Complex64>; 3] {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    [
        mat2([[o, l], [l, o]]),
        mat2([[o, -i], [i, o]]),
        mat2([[l, o], [o, -l]]),
    ]
}

fn kron_all(factors: &[DMatrix<Complex64>]) -> DMatrix<Complex64> {
    factors
        .iter()
        .fold(DMatrix::identity(1, 1), |acc, f| acc.kronecker(f))
}

/// `2m` anticommuting Hermitian involutions on `2^m` dimensions, plus
/// `Z⊗…⊗Z` when an odd count is requested.
fn jordan_wigner(n: usize) -> Vec<DMatrix<Complex64>> {
    let m = n / 2;
    let [x, y, z] = pauli_matrices();
    let id = DMatrix::<Complex64>::identity(2, 2);
    let mut out = Vec::with_capacity(n);
    for j in 0..m {
        for middle in [&x, &y] {
            let factors: Vec<_> = (0..m)
                .map(|k| match k.cmp(&j) {
                    std::cmp::Ordering::Less => z.clone(),
                    std::cmp::Ordering::Equal => middle.clone(),
                    std::cmp::Ordering::Greater => id.clone(),
                })
                .collect();
            out.push(kron_all(&factors));
        }
    }
    if n % 2 == 1 {
        out.push(kron_all(&vec![z.clone(); m]));
    }
    out
}

/// Faithful matrix representation for `p + q <= 4`.
///
/// Cl(2,0), Cl(3,0) and Cl(0,2) use the classical real, Pauli and
/// quaternion matrices. Other signatures use Jordan-Wigner matrices, with a
/// factor `i` on negative-square generators and a second block carrying the
/// negated generators when the algebra is a doubled ring.
pub fn build_rep(sig: Signature) -> Result<MatrixRep> {
    if sig.dim() > 4 {
        return Err(Error::UnsupportedSignature { p: sig.p(), q: sig.q() });
    }
    let tag = rep_lookup(sig)?;
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    let single: Vec<DMatrix<Complex64>> = match (sig.p(), sig.q()) {
        (2, 0) => vec![mat2([[l, o], [o, -l]]), mat2([[o, l], [l, o]])],
        (3, 0) => pauli_matrices().to_vec(),
        (0, 2) => vec![mat2([[i, o], [o, -i]]), mat2([[o, l], [-l, o]])],
        _ => jordan_wigner(sig.dim())
            .into_iter()
            .enumerate()
            .map(|(k, g)| if sig.square_of(k + 1) < 0.0 { g * i } else { g })
            .collect(),
    };
    let generators = single
        .into_iter()
        .map(|g| if tag.doubling { vec![g.clone(), -g] } else { vec![g] })
        .collect();
    Ok(MatrixRep { sig, tag, generators })
}

impl MatrixRep {
    /// Wraps arbitrary generator matrices, e.g. to test [`verify_rep`].
    pub fn from_generators(sig: Signature, tag: RepTag, generators: Vec<Blocks>) -> Self {
        MatrixRep { sig, tag, generators }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn tag(&self) -> RepTag {
        self.tag
    }

    pub fn generators(&self) -> &[Blocks] {
        &self.generators
    }

    fn identity(&self) -> Blocks {
        match self.generators.first() {
            Some(g) => g.iter().map(|b| DMatrix::identity(b.nrows(), b.ncols())).collect(),
            None => vec![DMatrix::identity(1, 1)],
        }
    }

    /// Image of the basis blade with bitmask `mask`.
    pub fn blade_image(&self, mask: u32) -> Blocks {
        let mut out = self.identity();
        for i in blade::indices(mask) {
            out = mul_blocks(&out, &self.generators[i - 1]);
        }
        out
    }

    pub fn image(&self, a: &Multivector) -> Result<Blocks> {
        if a.sig() != self.sig {
            return Err(Error::SignatureMismatch {
                left: a.sig(),
                right: self.sig,
            });
        }
        let mut out: Blocks = self.identity().iter().map(|b| b * c(0.0, 0.0)).collect();
        for (mask, x) in a.terms() {
            let img = self.blade_image(mask);
            for (o, b) in out.iter_mut().zip(&img) {
                *o += b * c(x, 0.0);
            }
        }
        Ok(out)
    }
}

fn mul_blocks(a: &Blocks, b: &Blocks) -> Blocks {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

fn block_diff(a: &Blocks, b: &Blocks) -> f64 {
    a.iter()
        .zip(b)
        .flat_map(|(x, y)| x.iter().zip(y.iter()).map(|(u, v)| (u - v).norm()))
        .fold(0.0, f64::max)
}

/// Residuals of a representation against the Clifford relations and the
/// geometric product.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepReport {
    pub tag: String,
    /// `|g_i g_j + g_j g_i - 2 η_ij|` for every pair.
    pub relations: Vec<Vec<f64>>,
    pub max_relation: f64,
    pub max_product: f64,
    pub injective: bool,
}

impl RepReport {
    pub fn residual(&self) -> f64 {
        self.max_relation.max(self.max_product)
    }

    pub fn passed(&self) -> bool {
        self.residual() == 0.0 && self.injective
    }
}

/// Checks anticommutation relations, `samples` random products with small
/// integer coefficients (exact in floating point), and injectivity on the
/// blade basis.
pub fn verify_rep(rep: &MatrixRep, samples: usize) -> RepReport {
    let n = rep.sig.dim();
    let id = rep.identity();
    let mut relations = vec![vec![0.0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let (ga, gb) = (&rep.generators[a], &rep.generators[b]);
            let anti: Blocks = mul_blocks(ga, gb)
                .iter()
                .zip(&mul_blocks(gb, ga))
                .map(|(x, y)| x + y)
                .collect();
            let metric = if a == b { 2.0 * rep.sig.square_of(a + 1) } else { 0.0 };
            let expected: Blocks = id.iter().map(|m| m * c(metric, 0.0)).collect();
            relations[a][b] = block_diff(&anti, &expected);
        }
    }
    let max_relation = relations.iter().flatten().copied().fold(0.0, f64::max);

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut max_product: f64 = 0.0;
    let count = rep.sig.blade_count();
    for _ in 0..samples {
        let mut draw = || {
            let coeffs = (0..count).map(|_| rng.gen_range(-3i32..=3) as f64).collect();
            Multivector::from_coeffs(rep.sig, coeffs).expect("length matches")
        };
        let (x, y) = (draw(), draw());
        let lhs = rep.image(&(&x * &y)).expect("same signature");
        let rhs = mul_blocks(&rep.image(&x).expect("same signature"), &rep.image(&y).expect("same signature"));
        max_product = max_product.max(block_diff(&lhs, &rhs));
    }

    let rows: Vec<Vec<f64>> = (0..count as u32)
        .map(|mask| {
            rep.blade_image(mask)
                .iter()
                .flat_map(|m| m.iter().flat_map(|z| [z.re, z.im]).collect::<Vec<_>>())
                .collect()
        })
        .collect();
    let width = rows[0].len();
    let basis = DMatrix::from_fn(count, width, |r, col| rows[r][col]);
    let injective = basis.rank(1e-9) == count;

    RepReport {
        tag: rep.tag.to_string(),
        relations,
        max_relation,
        max_product,
        injective,
    }
}

/// Column spinor of `Ψ` in Cl(3,0): the Pauli-matrix image of `Ψ ½(1 + r)`
/// applied to the `+1` eigenvector of `r`. For `r = σ3` this is
/// `(Ψ0 + Ψ3, Ψ1 + iΨ2)` with `Ψ = Ψ0 + Ψk σk` and `i ↔ I`.
pub fn ideal_column(psi: &Multivector, r: &Multivector, tol: &Tolerance) -> Result<[Complex64; 2]> {
    for x in [psi, r] {
        if x.sig() != Signature::CL3 {
            return Err(Error::WrongSignature {
                expected: Signature::CL3,
                actual: x.sig(),
            });
        }
    }
    let square = check_unit_vector(r, tol)?;
    if square < 0.0 {
        return Err(Error::InvalidAxis { square });
    }
    let r = r.grade_part(1);
    let rep = build_rep(Signature::CL3)?;
    let projected = psi * (&r + 1.0) * 0.5;
    let m = rep.image(&projected)?.remove(0);
    let (x, y, z) = (r.vector_component(1), r.vector_component(2), r.vector_component(3));
    let v = if z >= 0.0 {
        Vector2::new(c(1.0 + z, 0.0), c(x, y))
    } else {
        Vector2::new(c(x, -y), c(1.0 - z, 0.0))
    };
    let v = v / c(v.norm(), 0.0);
    let col = m.fixed_view::<2, 2>(0, 0) * v;
    Ok([col[0], col[1]])
}

/// Element `re + i im` of the complexified plane algebra ℂℓ₂.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMultivector {
    pub re: Multivector,
    pub im: Multivector,
}

impl ComplexMultivector {
    pub fn new(re: Multivector, im: Multivector) -> Result<Self> {
        for x in [&re, &im] {
            if x.sig() != Signature::CL2 {
                return Err(Error::WrongSignature {
                    expected: Signature::CL2,
                    actual: x.sig(),
                });
            }
        }
        Ok(ComplexMultivector { re, im })
    }

    pub fn mul(&self, other: &ComplexMultivector) -> ComplexMultivector {
        ComplexMultivector {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }
}

/// Embeds ℂℓ₂ in Cl(3,0) with `i ↦ I`, `e1 ↦ σ1`, `e2 ↦ -σ2`, so that
/// `i e12 ↦ σ3`.
pub fn complex_embed(a: &ComplexMultivector) -> Multivector {
    let images = |m: u32| -> Multivector {
        match m {
            0 => Multivector::scalar(Signature::CL3, 1.0),
            1 => Multivector::blade(Signature::CL3, 0b001, 1.0),
            2 => Multivector::blade(Signature::CL3, 0b010, -1.0),
            _ => Multivector::blade(Signature::CL3, 0b011, -1.0),
        }
    };
    let i = pauli_pseudoscalar();
    let mut out = Multivector::zero(Signature::CL3);
    for (mask, x) in a.re.terms() {
        out += &(images(mask) * x);
    }
    for (mask, x) in a.im.terms() {
        out += &(&i * images(mask) * x);
    }
    out
}
