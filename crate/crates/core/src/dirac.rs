//! Dirac spinors: even elements of spacetime Cl(1,3).
//!
//! A [`Frame`] fixes the timelike vector `t` used for the spin conjugate
//! `A† = t Ã t` and the spacelike spin axis `r`; the default is
//! `(γ0, γ3)`, so that `σ = r t = σ3`.

use serde::Serialize;

use crate::algebra::{check_unit_vector, exp_bivector, Multivector, Sign, Signature, Tolerance};
use crate::basis::{gamma, sigma, sta_pseudoscalar};
use crate::error::{Error, Result};

fn check_sig(a: &Multivector) -> Result<()> {
    if a.sig() != Signature::CL13 {
        return Err(Error::WrongSignature {
            expected: Signature::CL13,
            actual: a.sig(),
        });
    }
    Ok(())
}

fn require_even(a: &Multivector, tol: &Tolerance) -> Result<()> {
    check_sig(a)?;
    if !a.is_even(tol) {
        return Err(Error::NotEven);
    }
    Ok(())
}

/// Scalar part of `a b`, the Minkowski inner product on vectors.
fn dot(a: &Multivector, b: &Multivector) -> f64 {
    (a * b).scalar_part()
}

/// `ρ e^{Iβ} = ρ cos β + I ρ sin β`.
fn complex_density(rho: f64, beta: f64) -> Multivector {
    Multivector::scalar(Signature::CL13, rho * beta.cos()) + sta_pseudoscalar() * (rho * beta.sin())
}

/// Observer frame: unit timelike `t` and orthogonal unit spacelike `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    t: Multivector,
    r: Multivector,
}

impl Default for Frame {
    fn default() -> Self {
        Frame { t: gamma(0), r: gamma(3) }
    }
}

impl Frame {
    pub fn new(t: Multivector, r: Multivector, tol: &Tolerance) -> Result<Self> {
        check_sig(&t)?;
        check_sig(&r)?;
        if check_unit_vector(&t, tol)? < 0.0 {
            return Err(Error::InvalidFrame("time axis must square to +1"));
        }
        if check_unit_vector(&r, tol)? > 0.0 {
            return Err(Error::InvalidFrame("spin axis must square to -1"));
        }
        let (t, r) = (t.grade_part(1), r.grade_part(1));
        if !tol.is_zero(dot(&t, &r)) {
            return Err(Error::InvalidFrame("axes are not orthogonal"));
        }
        Ok(Frame { t, r })
    }

    pub fn t(&self) -> &Multivector {
        &self.t
    }

    pub fn r(&self) -> &Multivector {
        &self.r
    }

    /// `σ = r t`, the relative vector along the spin axis.
    pub fn sigma(&self) -> Multivector {
        &self.r * &self.t
    }

    /// `A† = t Ã t`.
    pub fn dagger(&self, a: &Multivector) -> Multivector {
        &self.t * a.reverse() * &self.t
    }

    /// Relative vectors `σ'_k = e_k t` for a right-handed spatial triad with
    /// `e_3 = r`. For the default frame these are `σ1, σ2, σ3`.
    pub fn relative_basis(&self) -> [Multivector; 3] {
        let mut triad: Vec<Multivector> = vec![];
        for _ in 0..2 {
            let mut best: Option<Multivector> = None;
            let mut best_sq = 0.0;
            for mu in [1, 2, 3, 0] {
                let mut v = gamma(mu);
                let mut axes = vec![self.t.clone(), self.r.clone()];
                axes.extend(triad.iter().cloned());
                for a in &axes {
                    let a_sq = dot(a, a);
                    v = &v - a * (dot(&v, a) / a_sq);
                }
                let sq = -dot(&v, &v);
                if sq > best_sq {
                    best_sq = sq;
                    best = Some(v);
                }
            }
            let v = best.expect("a spatial complement always exists");
            triad.push(v * (1.0 / best_sq.sqrt()));
        }
        let mut s1 = &triad[0] * &self.t;
        let s2 = &triad[1] * &self.t;
        let s3 = self.sigma();
        if (&s1 * &s2 * &s3).pseudoscalar_part() < 0.0 {
            s1 = -s1;
        }
        [s1, s2, s3]
    }
}

/// An even element of Cl(1,3) with its observer frame.
#[derive(Clone, Debug, PartialEq)]
pub struct DiracSpinor {
    value: Multivector,
    frame: Frame,
}

impl DiracSpinor {
    pub fn new(value: Multivector, tol: &Tolerance) -> Result<Self> {
        Self::with_frame(value, Frame::default(), tol)
    }

    pub fn with_frame(value: Multivector, frame: Frame, tol: &Tolerance) -> Result<Self> {
        require_even(&value, tol)?;
        Ok(DiracSpinor {
            value: value.even_part(),
            frame,
        })
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn into_value(self) -> Multivector {
        self.value
    }

    /// `ρ < abs_eps ‖Ψ‖²`.
    pub fn is_singular(&self, tol: &Tolerance) -> bool {
        let rho = density(&self.value).0;
        let scale = self.value.norm();
        rho < tol.abs_eps * scale * scale
    }
}

/// `½(A ± t A t)`: the Pauli-even (`+`) or Pauli-odd (`-`) part of `A`.
pub fn pauli_grade(a: &Multivector, sign: Sign, frame: &Frame, tol: &Tolerance) -> Result<Multivector> {
    require_even(a, tol)?;
    let a = a.even_part();
    let flipped = frame.dagger(&a.reverse());
    Ok((a + flipped * sign.value()) * 0.5)
}

/// Writes `Ψ = ψ_I + ψ_II r t` with Pauli-even `ψ_I`, `ψ_II`.
pub fn pauli_pair(psi: &DiracSpinor, tol: &Tolerance) -> Result<(Multivector, Multivector)> {
    let frame = &psi.frame;
    let even = pauli_grade(&psi.value, Sign::Plus, frame, tol)?;
    let odd = pauli_grade(&psi.value, Sign::Minus, frame, tol)?;
    // (r t)^2 = 1
    Ok((even, odd * frame.sigma()))
}

/// `X + (σ × X) σ` with `X = <Ψ̃Φ>⁺`; lies in the span `{1, I σ}`.
pub fn hermitian_product_st(psi: &DiracSpinor, phi: &DiracSpinor, tol: &Tolerance) -> Result<Multivector> {
    if !(psi.frame.t.approx_eq(&phi.frame.t, tol) && psi.frame.r.approx_eq(&phi.frame.r, tol)) {
        return Err(Error::AxisMismatch);
    }
    let x = pauli_grade(&(psi.value.reverse() * &phi.value), Sign::Plus, &psi.frame, tol)?;
    let s = psi.frame.sigma();
    Ok(&x + s.commutator(&x) * &s)
}

/// `ΨΨ̃ = ρ e^{Iβ}` as `(ρ, β)`, with `β = atan2` of the pseudoscalar and
/// scalar parts.
fn density(value: &Multivector) -> (f64, f64) {
    let w = value * value.reverse();
    let (a, b) = (w.scalar_part(), w.pseudoscalar_part());
    (a.hypot(b), b.atan2(a))
}

/// The bilinear covariants `ρ, β, J, S, K` of a Dirac spinor.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearSet {
    pub rho: f64,
    pub beta: f64,
    pub j: Multivector,
    pub s: Multivector,
    pub k: Multivector,
    pub frame: Frame,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BilinearReport {
    pub rho: f64,
    pub beta: f64,
    #[serde(rename = "J")]
    pub j: [f64; 4],
    #[serde(rename = "S")]
    pub s: [f64; 6],
    #[serde(rename = "K")]
    pub k: [f64; 4],
    pub fierz_max_residual: f64,
}

/// Bivector masks in ascending order: e12, e13, e23, e14, e24, e34.
pub const BIVECTOR_MASKS: [u32; 6] = [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100];

impl BilinearSet {
    /// Components `J^μ` on `γ0..γ3`.
    pub fn j_components(&self) -> [f64; 4] {
        [1, 2, 3, 4].map(|i| self.j.vector_component(i))
    }

    pub fn k_components(&self) -> [f64; 4] {
        [1, 2, 3, 4].map(|i| self.k.vector_component(i))
    }

    /// Coefficients of `S` on [`BIVECTOR_MASKS`].
    pub fn s_components(&self) -> [f64; 6] {
        BIVECTOR_MASKS.map(|m| self.s.coeff(m))
    }

    pub fn report(&self) -> BilinearReport {
        BilinearReport {
            rho: self.rho,
            beta: self.beta,
            j: self.j_components(),
            s: self.s_components(),
            k: self.k_components(),
            fierz_max_residual: fierz_residuals(self).max(),
        }
    }

    /// `Z = ¼(ρe^{Iβ} + J t - S I σ - K r)`.
    pub fn z(&self) -> Multivector {
        let f = &self.frame;
        let i_sigma = sta_pseudoscalar() * f.sigma();
        (complex_density(self.rho, self.beta) + &self.j * &f.t - &self.s * &i_sigma - &self.k * &f.r) * 0.25
    }

    /// `p² = ¼(ρ cos β + <J t> - <S I σ> - <K r>)`.
    pub fn p_squared(&self) -> f64 {
        self.z().scalar_part()
    }
}

pub fn bilinears(psi: &DiracSpinor) -> BilinearSet {
    let v = &psi.value;
    let rev = v.reverse();
    let f = &psi.frame;
    let (rho, beta) = density(v);
    let i_sigma = sta_pseudoscalar() * f.sigma();
    BilinearSet {
        rho,
        beta,
        j: (v * &f.t * &rev).grade_part(1),
        s: (v * &i_sigma * &rev).grade_part(2),
        k: (v * &f.r * &rev).grade_part(1),
        frame: f.clone(),
    }
}

/// Largest coefficient of each Fierz identity written as `lhs - rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FierzResiduals {
    pub j_squared: f64,
    pub k_squared: f64,
    pub jk_scalar: f64,
    pub jk: f64,
    pub js: f64,
    pub sj: f64,
    pub ks: f64,
    pub sk: f64,
    pub s_squared: f64,
}

impl FierzResiduals {
    pub fn as_array(&self) -> [f64; 9] {
        [
            self.j_squared,
            self.k_squared,
            self.jk_scalar,
            self.jk,
            self.js,
            self.sj,
            self.ks,
            self.sk,
            self.s_squared,
        ]
    }

    pub fn max(&self) -> f64 {
        self.as_array().into_iter().fold(0.0, f64::max)
    }
}

/// Residuals of `J² = ρ²`, `K² = -ρ²`, `<JK> = 0`, `JK = Iρe^{-Iβ}S`,
/// `JS = Iρe^{-Iβ}K`, `SJ = Iρe^{Iβ}K`, `KS = Iρe^{-Iβ}J`,
/// `SK = Iρe^{Iβ}J` and `S² = -ρ²e^{2Iβ}`.
pub fn fierz_residuals(b: &BilinearSet) -> FierzResiduals {
    let i = sta_pseudoscalar();
    let rho2 = b.rho * b.rho;
    let minus = &i * complex_density(b.rho, -b.beta);
    let plus = &i * complex_density(b.rho, b.beta);
    let (j, s, k) = (&b.j, &b.s, &b.k);
    let res = |x: Multivector| x.max_abs();
    FierzResiduals {
        j_squared: ((j * j).scalar_part() - rho2).abs(),
        k_squared: ((k * k).scalar_part() + rho2).abs(),
        jk_scalar: (j * k).scalar_part().abs(),
        jk: res(j * k - &minus * s),
        js: res(j * s - &minus * k),
        sj: res(s * j - &plus * k),
        ks: res(k * s - &minus * j),
        sk: res(s * k - &plus * j),
        s_squared: res(s * s + complex_density(rho2, 2.0 * b.beta)),
    }
}

/// `K = h J` and `S = J s` (with `s·t = 0`) for a singular spinor.
pub fn null_decompose(psi: &DiracSpinor, tol: &Tolerance) -> Result<(f64, Multivector)> {
    if psi.value.is_zero(tol) {
        return Err(Error::ZeroSpinor);
    }
    if !psi.is_singular(tol) {
        return Err(Error::NotSingular { rho: density(&psi.value).0 });
    }
    let b = bilinears(psi);
    let t = &psi.frame.t;
    let jt = dot(&b.j, t);
    if b.j.is_zero(tol) || jt.abs() <= tol.abs_eps {
        return Err(Error::ZeroCurrent);
    }
    let h = dot(&b.k, t) / jt;
    let s = (t * &b.s).grade_part(1) * (1.0 / jt);
    Ok((h, s))
}

/// `Ψ = Z p⁻¹ V` with `V = exp(I α^k σ'_k)` on the frame's relative basis.
pub fn reconstruct(b: &BilinearSet, alpha: [f64; 3], tol: &Tolerance) -> Result<DiracSpinor> {
    let z = b.z();
    let p_squared = z.scalar_part();
    if p_squared <= tol.abs_eps {
        return Err(Error::DegenerateFrame { p_squared });
    }
    let basis = b.frame.relative_basis();
    let mut generator = Multivector::zero(Signature::CL13);
    for (a, s) in alpha.iter().zip(&basis) {
        generator += &(s * *a);
    }
    let v = exp_bivector(&(sta_pseudoscalar() * generator), Sign::Plus, tol)?;
    Ok(DiracSpinor {
        value: z * (1.0 / p_squared.sqrt()) * v,
        frame: b.frame.clone(),
    })
}

/// Rebuilds a singular spinor (at `α = 0`) from its current and flag data:
/// `ρ = 0`, `K = h J`, `S = J s`.
pub fn reconstruct_null(
    j: &Multivector,
    h: f64,
    s: &Multivector,
    frame: &Frame,
    tol: &Tolerance,
) -> Result<DiracSpinor> {
    check_sig(j)?;
    check_sig(s)?;
    let b = BilinearSet {
        rho: 0.0,
        beta: 0.0,
        j: j.grade_part(1),
        s: (j * s).grade_part(2),
        k: j.grade_part(1) * h,
        frame: frame.clone(),
    };
    reconstruct(&b, [0.0; 3], tol)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LounestoTag {
    Dirac,
    FlagDipole,
    FlagPole,
    Weyl,
}

impl std::fmt::Display for LounestoTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LounestoTag::Dirac => "dirac",
            LounestoTag::FlagDipole => "flag_dipole",
            LounestoTag::FlagPole => "flag_pole",
            LounestoTag::Weyl => "weyl",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LounestoClass {
    pub tag: LounestoTag,
    pub h: Option<f64>,
    pub s: Option<Multivector>,
}

pub fn lounesto_classify(psi: &DiracSpinor, tol: &Tolerance) -> Result<LounestoClass> {
    if psi.value.is_zero(tol) {
        return Err(Error::ZeroSpinor);
    }
    if !psi.is_singular(tol) {
        return Ok(LounestoClass {
            tag: LounestoTag::Dirac,
            h: None,
            s: None,
        });
    }
    let b = bilinears(psi);
    let (h, s) = null_decompose(psi, tol)?;
    let scale = psi.value.norm().powi(2);
    let negligible = |m: &Multivector| m.max_abs() <= tol.bound(scale);
    let tag = if negligible(&b.s) {
        LounestoTag::Weyl
    } else if negligible(&b.k) {
        LounestoTag::FlagPole
    } else {
        LounestoTag::FlagDipole
    };
    Ok(LounestoClass {
        tag,
        h: Some(h),
        s: Some(s),
    })
}

/// Charge-conjugation eigenvalue: `Some(±1)` when `Ψ σ2 = ±Ψ`.
pub fn majorana_sign(psi: &Multivector, tol: &Tolerance) -> Option<f64> {
    right_eigenvalue(psi, &sigma(2), tol)
}

pub fn is_majorana(psi: &Multivector, tol: &Tolerance) -> bool {
    majorana_sign(psi, tol).is_some()
}

/// `Some(±1)` when `Ψ u = ±Ψ` for a right factor `u` with `u² = 1`.
pub(crate) fn right_eigenvalue(psi: &Multivector, u: &Multivector, tol: &Tolerance) -> Option<f64> {
    if psi.is_zero(tol) {
        return None;
    }
    let moved = psi * u;
    [1.0, -1.0]
        .into_iter()
        .find(|&sign| moved.approx_eq(&(psi * sign), tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::i_sigma;
    use crate::spin::adjoint_act;
    use crate::text::parse;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sta(s: &str) -> Multivector {
        parse(s, Signature::CL13).unwrap()
    }

    fn spinor(v: Multivector) -> DiracSpinor {
        DiracSpinor::new(v, &Tolerance::default()).unwrap()
    }

    fn one() -> Multivector {
        Multivector::scalar(Signature::CL13, 1.0)
    }

    fn random_unit_timelike_bivector(rng: &mut ChaCha8Rng) -> Multivector {
        let tol = Tolerance::default();
        let b = Multivector::random_grade(Signature::CL13, 2, rng) * 0.5;
        let u = exp_bivector(&b, Sign::Plus, &tol).unwrap();
        &u * sigma(3) * u.reverse()
    }

    fn random_singular(rng: &mut ChaCha8Rng) -> DiracSpinor {
        let e = random_unit_timelike_bivector(rng);
        let phi = Multivector::random_even(Signature::CL13, rng);
        spinor(phi * (e + 1.0) * 0.5)
    }

    #[test]
    fn frames_validate() {
        let tol = Tolerance::default();
        assert!(Frame::new(gamma(0), gamma(3), &tol).is_ok());
        assert!(Frame::new(gamma(3), gamma(0), &tol).is_err());
        assert!(Frame::new(gamma(0), gamma(0), &tol).is_err());
        let basis = Frame::default().relative_basis();
        for k in 0..3 {
            assert_eq!(basis[k], sigma(k + 1));
        }
        let t = (gamma(0) * 5.0_f64.sqrt() + gamma(1) * 2.0) * 1.0;
        let f = Frame::new(t, gamma(3), &tol).unwrap();
        let [s1, s2, s3] = f.relative_basis();
        assert!((s1 * s2 * s3).approx_eq(&sta_pseudoscalar(), &tol));
    }

    #[test]
    fn pauli_grading() {
        let tol = Tolerance::default();
        let f = Frame::default();
        assert_eq!(pauli_grade(&one(), Sign::Plus, &f, &tol).unwrap(), one());
        assert_eq!(pauli_grade(&i_sigma(3), Sign::Plus, &f, &tol).unwrap(), i_sigma(3));
        assert!(pauli_grade(&sigma(1), Sign::Plus, &f, &tol).unwrap().is_zero(&tol));
        assert_eq!(pauli_grade(&gamma(0), Sign::Plus, &f, &tol), Err(Error::NotEven));

        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let psi = spinor(Multivector::random_even(Signature::CL13, &mut rng));
            let (a, b) = pauli_pair(&psi, &tol).unwrap();
            assert!((&a + &b * f.sigma()).approx_eq(psi.value(), &tol));
            for part in [&a, &b] {
                let odd = pauli_grade(part, Sign::Minus, &f, &tol).unwrap();
                assert!(odd.is_zero(&tol));
            }
        }
    }

    #[test]
    fn hermitian_product_signature() {
        let tol = Tolerance::default();
        let i2 = i_sigma(2);
        let ii3 = sta_pseudoscalar() * i_sigma(3);
        let cases = [
            (one(), 1.0),
            (i2.clone(), 1.0),
            (-&ii3, -1.0),
            (-(&i2 * &ii3), -1.0),
        ];
        for (v, expected) in cases {
            let p = spinor(v);
            let h = hermitian_product_st(&p, &p, &tol).unwrap();
            assert!(h.approx_eq(&Multivector::scalar(Signature::CL13, expected), &tol), "{h}");
        }

        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let f = Frame::default();
        let is3 = i_sigma(3);
        for _ in 0..50 {
            let a = spinor(Multivector::random_even(Signature::CL13, &mut rng));
            let b = spinor(Multivector::random_even(Signature::CL13, &mut rng));
            let ab = hermitian_product_st(&a, &b, &tol).unwrap();
            let rest = &ab - Multivector::scalar(Signature::CL13, ab.scalar_part()) + &is3 * (&is3 * &ab).scalar_part();
            assert!(rest.is_zero(&tol));
            let ba = hermitian_product_st(&b, &a, &tol).unwrap();
            assert!(ab.approx_eq(&f.dagger(&ba), &tol));
        }
    }

    #[test]
    fn bilinears_of_identity() {
        let b = bilinears(&spinor(one()));
        assert_eq!((b.rho, b.beta), (1.0, 0.0));
        assert_eq!(b.j, gamma(0));
        assert_eq!(b.s, i_sigma(3));
        assert_eq!(b.k, gamma(3));
        assert!(fierz_residuals(&b).max() < 1e-12);
        assert!(b.z().approx_eq(&one(), &Tolerance::default()));
    }

    #[test]
    fn yvon_takabayasi_phase() {
        let tol = Tolerance::default();
        let beta0 = 0.8;
        let half = complex_density(1.0, beta0 / 2.0);
        let b = bilinears(&spinor(half));
        assert!(tol.approx_eq(b.beta, beta0));
        assert!(tol.approx_eq(b.rho, 1.0));
    }

    #[test]
    fn fierz_identities_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..200 {
            let b = bilinears(&spinor(Multivector::random_even(Signature::CL13, &mut rng)));
            let scale = 1.0 + b.rho * b.rho;
            assert!(fierz_residuals(&b).max() < 1e-9 * scale);
            let j2 = (&b.j * &b.j).scalar_part();
            let k2 = (&b.k * &b.k).scalar_part();
            assert!((j2 + k2).abs() < 1e-9 * scale);
        }
    }

    #[test]
    fn corrupted_current_is_detected() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        let mut b = bilinears(&spinor(Multivector::random_even(Signature::CL13, &mut rng)));
        b.j = &b.j * 1.1;
        let r = fierz_residuals(&b);
        let rho2 = b.rho * b.rho;
        assert!((r.j_squared - 0.21 * rho2).abs() < 1e-9 * (1.0 + rho2));
    }

    #[test]
    fn null_identities() {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(45);
        for _ in 0..200 {
            let psi = random_singular(&mut rng);
            assert!(psi.is_singular(&tol));
            let b = bilinears(&psi);
            let scale = psi.value().norm().powi(4);
            let small = |m: Multivector| m.max_abs() < 1e-9 * (1.0 + scale);
            assert!(small(&b.j * &b.j));
            assert!(small(&b.k * &b.k));
            assert!(small(&b.j * &b.k));
            assert!(small(&b.s * &b.s));
            assert!(small(&b.j * &b.s));
            assert!(small(&b.k * &b.s));
            let (h, s) = null_decompose(&psi, &tol).unwrap();
            let s2 = (&s * &s).scalar_part();
            assert!((h * h - 1.0 - s2).abs() < 1e-7, "h={h} s2={s2}");
            assert!(tol.is_zero(dot(&s, &gamma(0))));
            let z = b.z();
            assert!((&z * z.reverse()).max_abs() < 1e-9 * (1.0 + scale));
        }
    }

    #[test]
    fn weyl_and_majorana_flags() {
        let tol = Tolerance::default();
        let weyl = spinor((one() + sigma(3)) * 0.5);
        let (h, s) = null_decompose(&weyl, &tol).unwrap();
        assert!(tol.approx_eq(h.abs(), 1.0));
        assert!(s.is_zero(&tol));
        assert_eq!(lounesto_classify(&weyl, &tol).unwrap().tag, LounestoTag::Weyl);

        let majorana = spinor((one() + sigma(2)) * 0.5);
        let (h, s) = null_decompose(&majorana, &tol).unwrap();
        assert!(tol.is_zero(h));
        assert!(tol.approx_eq((&s * &s).scalar_part(), -1.0));
        let class = lounesto_classify(&majorana, &tol).unwrap();
        assert_eq!(class.tag, LounestoTag::FlagPole);
        assert_eq!(majorana_sign(majorana.value(), &tol), Some(1.0));
        assert!(!is_majorana(weyl.value(), &tol));

        assert_eq!(lounesto_classify(&spinor(one()), &tol).unwrap().tag, LounestoTag::Dirac);
        assert_eq!(
            lounesto_classify(&spinor(Multivector::zero(Signature::CL13)), &tol),
            Err(Error::ZeroSpinor)
        );
        assert!(matches!(null_decompose(&spinor(one()), &tol), Err(Error::NotSingular { .. })));
    }

    #[test]
    fn generic_null_spinors_are_flag_dipoles() {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(46);
        let psi = random_singular(&mut rng);
        assert_eq!(lounesto_classify(&psi, &tol).unwrap().tag, LounestoTag::FlagDipole);
    }

    #[test]
    fn projection_angle_matches_spin_axis_tilt() {
        let tol = Tolerance::default();
        // Ψ = ½(1 + σ3) u with u a spatial rotor tilting γ3 by φ; r = u γ3 ũ
        for phi in [0.0, 0.4, 1.1, std::f64::consts::FRAC_PI_2, 2.5] {
            let u = exp_bivector(&(i_sigma(1) * (-phi / 2.0)), Sign::Plus, &tol).unwrap();
            let psi = spinor((one() + sigma(3)) * 0.5 * &u);
            let r = &u.reverse() * gamma(3) * &u;
            let (h, s) = null_decompose(&psi, &tol).unwrap();
            assert!(tol.approx_eq(h, -dot(&r, &gamma(3))), "phi={phi} h={h}");
            assert!(tol.approx_eq(h.abs(), phi.cos().abs()));
            assert!(tol.approx_eq((&s * &s).scalar_part(), -phi.sin().powi(2)));
        }
    }

    #[test]
    fn reconstruction_round_trip() {
        let tol = Tolerance::default();
        let back = reconstruct(&bilinears(&spinor(one())), [0.0; 3], &tol).unwrap();
        assert!(back.value().approx_eq(&one(), &tol));

        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..100 {
            let b = bilinears(&spinor(Multivector::random_even(Signature::CL13, &mut rng)));
            let same = bilinears(&reconstruct(&b, [0.0; 3], &tol).unwrap());
            assert!(tol.approx_eq(same.rho, b.rho));
            assert!(same.j.approx_eq(&b.j, &tol));
            assert!(same.s.approx_eq(&b.s, &tol));
            assert!(same.k.approx_eq(&b.k, &tol));

            let alpha = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
            let turned = bilinears(&reconstruct(&b, alpha, &tol).unwrap());
            assert!(tol.approx_eq(turned.rho, b.rho));
            assert!(tol.approx_eq(turned.beta.sin(), b.beta.sin()));
            assert!(turned.j.approx_eq(&b.j, &tol));
        }
    }

    #[test]
    fn null_reconstruction() {
        let tol = Tolerance::default();
        let frame = Frame::default();
        let weyl = spinor((one() + sigma(3)) * 0.5 * 1.7);
        let b = bilinears(&weyl);
        let (h, s) = null_decompose(&weyl, &tol).unwrap();
        let back = bilinears(&reconstruct_null(&b.j, h, &s, &frame, &tol).unwrap());
        assert!(back.j.approx_eq(&b.j, &tol));
        assert!(back.rho < 1e-9);
        let (h2, _) = null_decompose(&spinor(reconstruct_null(&b.j, h, &s, &frame, &tol).unwrap().into_value()), &tol).unwrap();
        assert!(tol.approx_eq(h, h2));

        // Z_W = ¼ J̄ (1 + h σ3)
        let jbar = &b.j * gamma(0);
        let z_w = &jbar * (one() + sigma(3) * h) * 0.25;
        assert!(b.z().approx_eq(&z_w, &tol));
    }

    #[test]
    fn lorentz_covariance() {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(48);
        for _ in 0..30 {
            let u = exp_bivector(&(Multivector::random_grade(Signature::CL13, 2, &mut rng) * 0.4), Sign::Plus, &tol).unwrap();
            let psi = Multivector::random_even(Signature::CL13, &mut rng);
            let b = bilinears(&spinor(psi.clone()));
            let moved = bilinears(&spinor(&u * &psi));
            assert!(tol.approx_eq(moved.rho, b.rho));
            assert!(tol.approx_eq(moved.beta, b.beta));
            assert!(moved.j.approx_eq(&adjoint_act(&u, &b.j, Sign::Plus, &tol).unwrap(), &tol));
            assert!(moved.s.approx_eq(&adjoint_act(&u, &b.s, Sign::Plus, &tol).unwrap(), &tol));
            assert!(moved.k.approx_eq(&adjoint_act(&u, &b.k, Sign::Plus, &tol).unwrap(), &tol));
        }
    }

    #[test]
    fn general_frame_fierz() {
        let tol = Tolerance::default();
        let u = exp_bivector(&sta("0.3e12 - 0.2e24 + 0.5e13"), Sign::Plus, &tol).unwrap();
        let t = (&u * gamma(0) * u.reverse()).grade_part(1);
        let r = (&u * gamma(3) * u.reverse()).grade_part(1);
        let frame = Frame::new(t, r, &tol).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(49);
        for _ in 0..20 {
            let psi = DiracSpinor::with_frame(Multivector::random_even(Signature::CL13, &mut rng), frame.clone(), &tol).unwrap();
            let b = bilinears(&psi);
            assert!(fierz_residuals(&b).max() < 1e-9 * (1.0 + b.rho * b.rho));
            let same = bilinears(&reconstruct(&b, [0.3, -0.1, 0.2], &tol).unwrap());
            assert!(same.j.approx_eq(&b.j, &tol));
        }
    }
}
