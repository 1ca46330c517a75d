//! Hilbert series and Gelfand-Kirillov dimension.
//!
//! Coefficients are exact integers throughout. The only floating point is
//! the root-modulus probe used by [`GkMode::Numeric`], and that runs on a
//! squarefree, fully cancelled denominator.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::koszul;
use crate::monomial::{self, MonomialSet};
use crate::presentation::{GradedDims, Presentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    KoszulFormula,
    Recursion,
    QuotientDims,
    AvoidCount,
    RationalExpansion,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::KoszulFormula => "koszul_formula",
            Provenance::Recursion => "recursion",
            Provenance::QuotientDims => "quotient_dims",
            Provenance::AvoidCount => "avoid_count",
            Provenance::RationalExpansion => "rational_expansion",
        })
    }
}

/// Coefficients `a_0, ..., a_D` of a power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesExpansion {
    pub coefficients: Vec<BigInt>,
    pub provenance: Provenance,
}

impl SeriesExpansion {
    pub fn new(coefficients: Vec<BigInt>, provenance: Provenance) -> Self {
        SeriesExpansion {
            coefficients,
            provenance,
        }
    }

    pub fn from_dims(dims: &GradedDims) -> Self {
        Self::new(dims.0.iter().map(|&d| BigInt::from(d)).collect(), Provenance::QuotientDims)
    }

    pub fn from_counts(counts: &[u128], provenance: Provenance) -> Self {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect(), provenance)
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// First index with a negative coefficient. A negative coefficient rules
    /// the series out as a Hilbert series.
    pub fn first_negative(&self) -> Option<usize> {
        self.coefficients.iter().position(|c| c.is_negative())
    }

    pub fn has_negative(&self) -> bool {
        self.first_negative().is_some()
    }

    /// Coefficients as machine integers, if all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coefficients.iter().map(|c| c.to_i64()).collect()
    }

    /// Coefficientwise comparison, ignoring provenance.
    pub fn same_coefficients(&self, other: &SeriesExpansion) -> bool {
        self.coefficients == other.coefficients
    }
}

/// Power series inverse of `p` truncated at degree `max_d`.
///
/// The constant term must be `±1` so that the inverse has integer
/// coefficients.
pub fn series_inverse(p: &[BigInt], max_d: usize) -> Result<Vec<BigInt>> {
    let c0 = p.first().cloned().unwrap_or_default();
    if !(c0.is_one() || (-&c0).is_one()) {
        return Err(Error::precondition("series inverse needs constant term ±1"));
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(max_d + 1);
    for d in 0..=max_d {
        let mut acc = if d == 0 { BigInt::one() } else { BigInt::zero() };
        for k in 1..=d.min(p.len().saturating_sub(1)) {
            acc -= &p[k] * &out[d - k];
        }
        out.push(acc * &c0);
    }
    Ok(out)
}

/// Product of two power series truncated at degree `max_d`.
pub fn series_mul(a: &[BigInt], b: &[BigInt], max_d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); max_d + 1];
    for (i, x) in a.iter().enumerate().take(max_d + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(max_d + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// A rational function `numerator / denominator` in `t`, both with integer
/// coefficients listed from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
}

impl RationalSeries {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>) -> Result<Self> {
        let numerator = trim(numerator);
        let denominator = trim(denominator);
        if denominator.first().is_none_or(|c| c.is_zero()) {
            return Err(Error::precondition(
                "denominator needs a nonzero constant term",
            ));
        }
        Ok(RationalSeries {
            numerator,
            denominator,
        })
    }

    pub fn from_i64(numerator: &[i64], denominator: &[i64]) -> Result<Self> {
        Self::new(
            numerator.iter().map(|&c| BigInt::from(c)).collect(),
            denominator.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    /// `1 / (1 - n t + t^N)`.
    pub fn koszul_family(n: usize, big_n: usize) -> Self {
        let mut den = vec![BigInt::zero(); big_n.max(1) + 1];
        den[0] = BigInt::one();
        den[1] -= BigInt::from(n);
        den[big_n] += BigInt::one();
        Self::new(vec![BigInt::one()], den).expect("constant term 1")
    }

    /// Multiplicative inverse, when the numerator has a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    pub fn expand(&self, max_d: usize) -> Result<Vec<BigInt>> {
        let inv = series_inverse(&self.denominator, max_d)
            .map_err(|_| Error::precondition("expansion needs denominator constant term ±1"))?;
        Ok(series_mul(&self.numerator, &inv, max_d))
    }

    /// Cancels the greatest common divisor of numerator and denominator and
    /// normalises to primitive integer polynomials with a positive constant
    /// term in the denominator.
    pub fn reduced(&self) -> Self {
        let num = to_q(&self.numerator);
        let den = to_q(&self.denominator);
        let g = poly::gcd(&num, &den);
        let num = poly::div_exact(&num, &g);
        let den = poly::div_exact(&den, &g);
        let (mut num, mut den) = poly::to_primitive_pair(&num, &den);
        if den[0].is_negative() {
            num.iter_mut().for_each(|c| *c = -&*c);
            den.iter_mut().for_each(|c| *c = -&*c);
        }
        RationalSeries::new(num, den).expect("cancelled denominator keeps its constant term")
    }

    pub fn is_polynomial(&self) -> bool {
        self.reduced().denominator.len() == 1
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", format_poly(&self.numerator), format_poly(&self.denominator))
    }
}

/// Renders `1 - 2t + t^2` style text.
pub fn format_poly(p: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        if k == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn to_q(p: &[BigInt]) -> Vec<BigRational> {
    p.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

/// `Σ_i (-1)^i dim W_{ν(i)} t^{ν(i)}` truncated at degree `max_d`.
pub fn alternating_w_polynomial<F: Field>(p: &Presentation<F>, max_d: usize) -> Result<Vec<BigInt>> {
    let ws = p.w_spaces(max_d)?;
    let nu = p.nu();
    let mut out = vec![BigInt::zero(); max_d + 1];
    let mut i = 0;
    while nu.eval(i) <= max_d {
        let dim = BigInt::from(ws[nu.eval(i)].dim());
        if i % 2 == 0 {
            out[nu.eval(i)] += dim;
        } else {
            out[nu.eval(i)] -= dim;
        }
        i += 1;
    }
    Ok(out)
}

/// `H_A(t)` for a Koszul algebra, from the Euler-Poincaré identity
/// `H_A(t) · Σ_i (-1)^i dim W_{ν(i)} t^{ν(i)} = 1`.
///
/// Koszulity is checked first: by the criterion for a single relation, by
/// the overlap test for monomial relations. Other presentations are refused.
pub fn koszul_series<F: Field>(p: &Presentation<F>, max_d: usize) -> Result<SeriesExpansion> {
    let koszul = if p.relations().is_empty() {
        true
    } else if p.single_relation().is_some() {
        koszul::criterion_check(p)?.is_koszul
    } else if let Some(words) = p.monomial_words() {
        let set = MonomialSet::new(p.generators(), p.relation_degree(), words)?;
        monomial::is_koszul_set(&set).is_koszul
    } else {
        return Err(Error::precondition(
            "Koszulity of this presentation cannot be certified (not a single relation, not monomial)",
        ));
    };
    if !koszul {
        return Err(Error::precondition(
            "the Euler-Poincaré formula only applies to Koszul algebras",
        ));
    }
    let w = alternating_w_polynomial(p, max_d)?;
    Ok(SeriesExpansion::new(series_inverse(&w, max_d)?, Provenance::KoszulFormula))
}

/// `a_i = n a_{i-1} - a_{i-N}`, `a_0 = 1`, `a_i = 0` for `i < 0`.
///
/// Negative coefficients are kept, not rejected: they flag parameter pairs
/// for which `1 - n t + t^N` is not a Hilbert series denominator.
pub fn recursion_expand(n: usize, big_n: usize, max_d: usize) -> SeriesExpansion {
    let n = BigInt::from(n);
    let mut a: Vec<BigInt> = Vec::with_capacity(max_d + 1);
    for i in 0..=max_d {
        let v = if i == 0 {
            BigInt::one()
        } else {
            let mut v = &n * &a[i - 1];
            if i >= big_n {
                v -= &a[i - big_n];
            }
            v
        };
        a.push(v);
    }
    SeriesExpansion::new(a, Provenance::Recursion)
}

/// `D(t) = 1 - n t + t^N - t^{N+1} + t^{2N} - t^{2N+1} + ...`, in closed form
/// `((1 - n t)(1 - t^N) + t^N - t^{N+1}) / (1 - t^N)`.
pub fn infinite_gldim_denominator(n: usize, big_n: usize) -> RationalSeries {
    let mut num = vec![BigInt::zero(); big_n + 2];
    // (1 - n t)(1 - t^N)
    num[0] += 1;
    num[1] -= BigInt::from(n);
    num[big_n] -= 1;
    num[big_n + 1] += BigInt::from(n);
    // + t^N - t^{N+1}
    num[big_n] += 1;
    num[big_n + 1] -= 1;
    let mut den = vec![BigInt::zero(); big_n + 1];
    den[0] = BigInt::one();
    den[big_n] = -BigInt::one();
    RationalSeries::new(num, den).expect("constant term 1")
}

/// Expansion of `1 / D(t)` for the infinite alternating denominator.
pub fn infinite_gldim_series(n: usize, big_n: usize, max_d: usize) -> SeriesExpansion {
    let h = infinite_gldim_denominator(n, big_n)
        .reciprocal()
        .expect("numerator constant term 1");
    SeriesExpansion::new(h.expand(max_d).expect("unit constant term"), Provenance::RationalExpansion)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GkDimension {
    Finite(u32),
    Infinite,
}

impl fmt::Display for GkDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GkDimension::Finite(d) => write!(f, "{d}"),
            GkDimension::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GkMode {
    ClosedForm,
    Numeric { tolerance: f64 },
}

/// Default tolerance on root moduli in numeric mode.
pub const DEFAULT_GK_TOLERANCE: f64 = 1e-6;
const ROOT_TOLERANCE: f64 = 1e-9;

impl Default for GkMode {
    fn default() -> Self {
        GkMode::Numeric {
            tolerance: DEFAULT_GK_TOLERANCE,
        }
    }
}

/// The Hilbert series attached to the pair `(n, N)`: `1 / (1 - n t + t^N)`
/// for `n ≥ 2`, and `(1 - t^N) / (1 - t)` for `n = 1`, where the only Koszul
/// single relation is `x_0^N`.
pub fn gk_family_series(n: usize, big_n: usize) -> Result<RationalSeries> {
    if n == 0 || big_n < 2 {
        return Err(Error::precondition(format!(
            "no Hilbert series family for n = {n}, N = {big_n}"
        )));
    }
    if n == 1 {
        let mut num = vec![BigInt::zero(); big_n + 1];
        num[0] = BigInt::one();
        num[big_n] = -BigInt::one();
        return RationalSeries::new(num, vec![BigInt::one(), -BigInt::one()]);
    }
    Ok(RationalSeries::koszul_family(n, big_n))
}

/// GK dimension of the `(n, N)` family: `0` for `n = 1`, `2` for
/// `n = N = 2`, infinite otherwise.
pub fn gk_closed_form(n: usize, big_n: usize) -> Result<GkDimension> {
    match (n, big_n) {
        (0, _) | (_, 0) | (_, 1) => Err(Error::precondition(format!(
            "no Hilbert series family for n = {n}, N = {big_n}"
        ))),
        (1, _) => Ok(GkDimension::Finite(0)),
        (2, 2) => Ok(GkDimension::Finite(2)),
        _ => Ok(GkDimension::Infinite),
    }
}

pub fn gk_dimension(n: usize, big_n: usize, mode: GkMode) -> Result<GkDimension> {
    match mode {
        GkMode::ClosedForm => gk_closed_form(n, big_n),
        GkMode::Numeric { tolerance } => gk_numeric(&gk_family_series(n, big_n)?, tolerance),
    }
}

/// GK dimension of an arbitrary rational Hilbert series. Closed-form mode
/// only recognises the `(n, N)` family of [`gk_family_series`].
pub fn gk_dimension_of(series: &RationalSeries, mode: GkMode) -> Result<GkDimension> {
    match mode {
        GkMode::Numeric { tolerance } => gk_numeric(series, tolerance),
        GkMode::ClosedForm => {
            let (n, big_n) = recognise_family(series).ok_or_else(|| {
                Error::precondition(format!("unrecognised denominator {series}"))
            })?;
            gk_closed_form(n, big_n)
        }
    }
}

/// `(n, N)` with `series` equal to [`gk_family_series`]`(n, N)`.
pub fn recognise_family(series: &RationalSeries) -> Option<(usize, usize)> {
    let s = series.reduced();
    let candidate = if s.denominator.len() == 1 {
        (1, s.numerator.len())
    } else {
        ((-&s.denominator[1]).to_usize()?, s.denominator.len() - 1)
    };
    let family = gk_family_series(candidate.0, candidate.1).ok()?;
    (family.reduced() == s).then_some(candidate)
}

/// Reads the growth of the coefficients off the denominator's roots.
///
/// After exact cancellation the denominator is split into squarefree parts.
/// A root strictly inside the unit disc means exponential growth. Otherwise
/// the GK dimension is the largest multiplicity of a root on the unit
/// circle (0 for a polynomial).
pub fn gk_numeric(series: &RationalSeries, tolerance: f64) -> Result<GkDimension> {
    let s = series.reduced();
    let den = to_q(&s.denominator);
    let mut order = 0u32;
    for (mult, factor) in poly::squarefree(&den) {
        if factor.len() < 2 {
            continue;
        }
        for z in roots(&factor)? {
            let r = z.norm();
            if r < 1.0 - tolerance {
                return Ok(GkDimension::Infinite);
            }
            if (r - 1.0).abs() <= tolerance {
                order = order.max(mult as u32);
            }
        }
    }
    Ok(GkDimension::Finite(order))
}

/// Complex roots of a squarefree polynomial (Aberth-Ehrlich iteration).
fn roots(p: &[BigRational]) -> Result<Vec<Complex64>> {
    let c: Vec<f64> = p.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let deg = c.len() - 1;
    let lead = c[deg];
    let coeffs: Vec<f64> = c.iter().map(|x| x / lead).collect();
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for &a in coeffs.iter().rev() {
            dv = dv * z + v;
            v = v * z + a;
        }
        (v, dv)
    };
    let bound = 1.0 + coeffs[..deg].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(bound * 0.5, 0.4 + std::f64::consts::TAU * k as f64 / deg as f64))
        .collect();
    for _ in 0..2000 {
        let mut worst = 0.0f64;
        for i in 0..deg {
            let (v, dv) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[i] -= step;
            worst = worst.max(step.norm());
        }
        if worst < ROOT_TOLERANCE * 1e-3 {
            return Ok(z);
        }
    }
    let worst = z.iter().map(|&zi| eval(zi).0.norm()).fold(0.0, f64::max);
    if worst < ROOT_TOLERANCE {
        Ok(z)
    } else {
        Err(Error::precondition("root iteration did not converge"))
    }
}

/// Dense polynomials over the rationals, constant term first.
mod poly {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    pub type P = Vec<BigRational>;

    fn trim(mut p: P) -> P {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }

    fn monic(p: P) -> P {
        let p = trim(p);
        match p.last() {
            None => p,
            Some(l) => {
                let l = l.clone();
                p.into_iter().map(|c| c / &l).collect()
            }
        }
    }

    fn sub(a: &[BigRational], b: &[BigRational]) -> P {
        let len = a.len().max(b.len());
        trim(
            (0..len)
                .map(|i| {
                    a.get(i).cloned().unwrap_or_else(BigRational::zero)
                        - b.get(i).cloned().unwrap_or_else(BigRational::zero)
                })
                .collect(),
        )
    }

    /// Quotient and remainder.
    pub fn divmod(a: &[BigRational], b: &[BigRational]) -> (P, P) {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        assert!(!b.is_empty(), "division by the zero polynomial");
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
        let lead = b.last().expect("nonzero").clone();
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = r.last().expect("nonempty").clone() / &lead;
            for (i, bc) in b.iter().enumerate() {
                r[shift + i] -= &c * bc;
            }
            q[shift] = c;
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn div_exact(a: &[BigRational], b: &[BigRational]) -> P {
        let (q, r) = divmod(a, b);
        debug_assert!(r.is_empty(), "inexact polynomial division");
        q
    }

    /// Monic gcd; `[1]` when coprime.
    pub fn gcd(a: &[BigRational], b: &[BigRational]) -> P {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !y.is_empty() {
            let (_, r) = divmod(&x, &y);
            x = y;
            y = r;
        }
        if x.is_empty() {
            vec![BigRational::one()]
        } else {
            monic(x)
        }
    }

    fn derivative(p: &[BigRational]) -> P {
        trim(
            p.iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Yun's squarefree decomposition: pairs `(multiplicity, factor)`.
    pub fn squarefree(p: &[BigRational]) -> Vec<(usize, P)> {
        let f = monic(p.to_vec());
        if f.len() < 2 {
            return Vec::new();
        }
        let df = derivative(&f);
        let a0 = gcd(&f, &df);
        let mut b = div_exact(&f, &a0);
        let mut c = div_exact(&df, &a0);
        let mut d = sub(&c, &derivative(&b));
        let mut out = Vec::new();
        let mut i = 1;
        while b.len() > 1 {
            let a = gcd(&b, &d);
            if a.len() > 1 {
                out.push((i, a.clone()));
            }
            b = div_exact(&b, &a);
            c = div_exact(&d, &a);
            d = sub(&c, &derivative(&b));
            i += 1;
        }
        out
    }

    /// Scales `num / den` by a common rational so both become integer
    /// polynomials with jointly coprime coefficients.
    pub fn to_primitive_pair(num: &[BigRational], den: &[BigRational]) -> (Vec<BigInt>, Vec<BigInt>) {
        let all = num.iter().chain(den.iter());
        let lcm = all.clone().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = |p: &[BigRational]| -> Vec<BigInt> {
            p.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect()
        };
        let (n, d) = (scaled(num), scaled(den));
        let g = n.iter().chain(d.iter()).fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() || g.is_one() {
            return (n, d);
        }
        (n.iter().map(|c| c / &g).collect(), d.iter().map(|c| c / &g).collect())
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        fn p(c: &[i64]) -> P {
            c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
        }

        #[test]
        fn squarefree_of_double_root() {
            // (1 - t)^2 (1 + t) = 1 - t - t^2 + t^3
            let parts = squarefree(&p(&[1, -1, -1, 1]));
            assert_eq!(parts, vec![(1, p(&[1, 1])), (2, p(&[-1, 1]))]);
        }

        #[test]
        fn gcd_of_coprime_is_one() {
            assert_eq!(gcd(&p(&[1, 1]), &p(&[1, -1])), p(&[1]));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{Tensor, Word, Q};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn pres(n: usize, terms: &[(&[u8], i64)]) -> Presentation<Q> {
        let d = terms[0].0.len();
        let f = Tensor::from_terms(n, d, terms.iter().map(|(w, c)| (Word::new(w.to_vec()), Q::from_i64(*c))))
            .unwrap();
        Presentation::single(n, f).unwrap()
    }

    #[test]
    fn koszul_series_examples() {
        let sym = pres(2, &[(&[0, 1], 1), (&[1, 0], -1)]);
        assert_eq!(koszul_series(&sym, 5).unwrap().coefficients, ints(&[1, 2, 3, 4, 5, 6]));
        let ant = pres(
            3,
            &[(&[0, 1, 2], 1), (&[1, 2, 0], 1), (&[2, 0, 1], 1), (&[1, 0, 2], -1), (&[0, 2, 1], -1), (&[2, 1, 0], -1)],
        );
        assert_eq!(koszul_series(&ant, 5).unwrap().coefficients, ints(&[1, 3, 9, 26, 75, 216]));
        let sq = pres(1, &[(&[0, 0], 1)]);
        assert_eq!(koszul_series(&sq, 4).unwrap().coefficients, ints(&[1, 1, 0, 0, 0]));
    }

    #[test]
    fn koszul_series_rejects_non_koszul() {
        assert!(koszul_series(&pres(2, &[(&[0, 1, 0], 1)]), 5).is_err());
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(recursion_expand(2, 2, 4).coefficients, ints(&[1, 2, 3, 4, 5]));
        assert_eq!(recursion_expand(3, 3, 4).coefficients, ints(&[1, 3, 9, 26, 75]));
        let bad = recursion_expand(1, 2, 3);
        assert_eq!(bad.coefficients, ints(&[1, 1, 0, -1]));
        assert_eq!(bad.first_negative(), Some(3));
    }

    #[test]
    fn infinite_gldim_examples() {
        assert_eq!(infinite_gldim_series(2, 2, 5).coefficients, ints(&[1, 2, 3, 5, 8, 13]));
        assert_eq!(infinite_gldim_series(1, 2, 4).coefficients, ints(&[1, 1, 0, 0, 0]));
        assert_eq!(infinite_gldim_series(1, 3, 5).coefficients, ints(&[1, 1, 1, 0, 0, 0]));
    }

    #[test]
    fn gk_examples() {
        for mode in [GkMode::ClosedForm, GkMode::default()] {
            assert_eq!(gk_dimension(2, 2, mode).unwrap(), GkDimension::Finite(2));
            assert_eq!(gk_dimension(3, 2, mode).unwrap(), GkDimension::Infinite);
            assert_eq!(gk_dimension(2, 3, mode).unwrap(), GkDimension::Infinite);
            assert_eq!(gk_dimension(1, 4, mode).unwrap(), GkDimension::Finite(0));
        }
        assert!(gk_dimension(0, 2, GkMode::ClosedForm).is_err());
    }

    #[test]
    fn closed_form_recognition() {
        let s = RationalSeries::koszul_family(3, 4);
        assert_eq!(recognise_family(&s), Some((3, 4)));
        assert_eq!(recognise_family(&gk_family_series(1, 3).unwrap()), Some((1, 3)));
        let other = RationalSeries::from_i64(&[1], &[1, -1, -1]).unwrap();
        assert!(gk_dimension_of(&other, GkMode::ClosedForm).is_err());
        assert_eq!(gk_dimension_of(&other, GkMode::default()).unwrap(), GkDimension::Infinite);
    }

    #[test]
    fn numeric_reads_pole_order() {
        // 1 / (1 - t)^3 grows quadratically
        let s = RationalSeries::from_i64(&[1], &[1, -3, 3, -1]).unwrap();
        assert_eq!(gk_numeric(&s, 1e-6).unwrap(), GkDimension::Finite(3));
        // cancellation: (1 - t) / (1 - t)^2
        let s = RationalSeries::from_i64(&[1, -1], &[1, -2, 1]).unwrap();
        assert_eq!(gk_numeric(&s, 1e-6).unwrap(), GkDimension::Finite(1));
    }

    #[test]
    fn reduced_cancels() {
        let s = RationalSeries::from_i64(&[1, -1], &[1, -2, 1]).unwrap().reduced();
        assert_eq!(s, RationalSeries::from_i64(&[1], &[1, -1]).unwrap());
        assert!(gk_family_series(1, 3).unwrap().is_polynomial());
    }

    #[test]
    fn formatting() {
        assert_eq!(format_poly(&ints(&[1, -2, 1])), "1 - 2t + t^2");
        assert_eq!(format_poly(&ints(&[0, 0, -3])), "-3t^2");
        assert_eq!(RationalSeries::koszul_family(3, 2).to_string(), "(1) / (1 - 3t + t^2)");
    }

    #[test]
    fn inverse_roundtrip() {
        let p = ints(&[1, 4, -2, 7]);
        let inv = series_inverse(&p, 10).unwrap();
        let prod = series_mul(&p, &inv, 10);
        assert_eq!(prod, {
            let mut v = vec![BigInt::zero(); 11];
            v[0] = BigInt::one();
            v
        });
        assert!(series_inverse(&ints(&[2, 1]), 3).is_err());
    }
}
