//! Projective curves: degree and genus from the Hilbert polynomial, the
//! predicted value of `M`, tangent spaces, rational normal curves and
//! projections, and a combined report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gin::{gin, GinOptions, GinResult};
use crate::groebner::{buchberger, elimination_ideal_x0, Ideal};
use crate::linear::{rank, LinearChange};
use crate::monomial::{binomial, TermOrder};
use crate::monomial_ideal::{HilbertData, MonomialIdeal};
use crate::partial_elim::PartialElimLadder;
use crate::poly::Polynomial;

const GLEX: TermOrder = TermOrder::GradedLex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveInvariants {
    pub degree: u64,
    /// Arithmetic genus `1 - P(0)`.
    pub genus: i64,
}

/// Hilbert data of `R/I`, read off a graded reverse-lex basis.
pub fn hilbert_data<F: Field>(ideal: &Ideal<F>) -> Result<HilbertData> {
    buchberger(ideal, TermOrder::GradedRevLex)?
        .initial_ideal()
        .hilbert_data()
}

fn invariants_from_hilbert(h: &HilbertData) -> Result<CurveInvariants> {
    let deg = h.polynomial_degree();
    if deg != 1 {
        return Err(Error::NotACurve { hilbert_degree: deg });
    }
    let as_int = |q: &crate::field::Rational| -> Result<i64> {
        if !q.is_int() {
            return Err(Error::Invalid(format!("non-integral Hilbert coefficient {}", q)));
        }
        i64::try_from(q.numerator().clone()).map_err(|_| Error::Invalid("Hilbert coefficient too large".into()))
    };
    let degree = as_int(&h.polynomial[1])?;
    let constant = as_int(&h.polynomial[0])?;
    Ok(CurveInvariants {
        degree: degree as u64,
        genus: 1 - constant,
    })
}

/// Degree and arithmetic genus of the curve `V(I)`, from `P(m) = d m + 1 - g`.
pub fn curve_invariants<F: Field>(ideal: &Ideal<F>) -> Result<CurveInvariants> {
    invariants_from_hilbert(&hilbert_data(ideal)?)
}

/// `max{d, 1 + C(d-1, 2) - g}`.
pub fn predicted_m(degree: u64, genus: i64) -> i64 {
    let c = if degree >= 1 { binomial(degree - 1, 2) as i64 } else { 0 };
    (degree as i64).max(1 + c - genus)
}

/// Castelnuovo's bound `π(d, 3)` on the genus of a nondegenerate curve in `P^3`.
pub fn genus_bound_pi3(degree: u64) -> u64 {
    if degree < 3 {
        return 0;
    }
    if degree.is_multiple_of(2) {
        let h = degree / 2 - 1;
        h * h
    } else {
        ((degree - 1) / 2) * ((degree - 3) / 2)
    }
}

/// `π(d, 3) ≤ 1 + C(d-1, 2) - d`, so the second term of [`predicted_m`]
/// dominates for every space curve of degree `d`.
pub fn pi3_bound_holds(degree: u64) -> bool {
    let rhs = 1 + binomial(degree - 1, 2) as i64 - degree as i64;
    genus_bound_pi3(degree) as i64 <= rhs
}

fn on_scheme<F: Field>(ideal: &Ideal<F>, p: &[F]) -> Result<bool> {
    for g in ideal.generators() {
        if !g.evaluate(p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_point<F: Field>(ideal: &Ideal<F>, p: &[F]) -> Result<()> {
    if p.len() != ideal.nvars() {
        return Err(Error::RingMismatch);
    }
    if p.iter().all(|c| c.is_zero()) {
        return Err(Error::Invalid("the zero vector is not a projective point".into()));
    }
    Ok(())
}

/// `r - rank J(p)`, the dimension of the projective tangent space at `p` of
/// the scheme cut out by the given generators.
pub fn tangent_dim_at<F: Field>(ideal: &Ideal<F>, p: &[F]) -> Result<usize> {
    check_point(ideal, p)?;
    if !on_scheme(ideal, p)? {
        return Err(Error::PointNotOnScheme);
    }
    let n = ideal.nvars();
    let jac = ideal
        .generators()
        .iter()
        .map(|g| (0..n).map(|v| g.derivative(v).evaluate(p)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(n - 1 - rank(&jac))
}

/// The degree-`r` rational normal curve in `P^r`: 2x2 minors of
/// `[[x0 .. x_{r-1}], [x1 .. x_r]]`.
pub fn rational_normal_curve<F: Field>(r: usize) -> Result<Ideal<F>> {
    if r < 2 {
        return Err(Error::Invalid("rational normal curves need r >= 2".into()));
    }
    let n = r + 1;
    let x = |i: usize| Polynomial::<F>::var(n, GLEX, i);
    let mut gens = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            gens.push(&(&x(i) * &x(j + 1)) - &(&x(i + 1) * &x(j)));
        }
    }
    Ideal::new(n, gens)
}

/// `[1, s, s^2, ..., s^r]` on the rational normal curve.
pub fn rnc_point<F: Field>(r: usize, s: &F) -> Vec<F> {
    let mut out = Vec::with_capacity(r + 1);
    let mut c = F::one();
    for _ in 0..=r {
        out.push(c.clone());
        c = c * s.clone();
    }
    out
}

fn proportional<F: Field>(a: &[F], b: &[F]) -> bool {
    let rows = vec![a.to_vec(), b.to_vec()];
    rank(&rows) < 2
}

/// `p1 + t p2` for two distinct points of `V(I)`, rejected if it lies on `V(I)`.
pub fn secant_point<F: Field>(ideal: &Ideal<F>, p1: &[F], p2: &[F], t: &F) -> Result<Vec<F>> {
    check_point(ideal, p1)?;
    check_point(ideal, p2)?;
    if !on_scheme(ideal, p1)? || !on_scheme(ideal, p2)? {
        return Err(Error::PointNotOnScheme);
    }
    if proportional(p1, p2) {
        return Err(Error::Invalid("a secant needs two distinct points".into()));
    }
    if t.is_zero() {
        return Err(Error::LandedOnCurve);
    }
    let q: Vec<F> = p1
        .iter()
        .zip(p2)
        .map(|(a, b)| a.clone() + t.clone() * b.clone())
        .collect();
    if on_scheme(ideal, &q)? {
        return Err(Error::LandedOnCurve);
    }
    Ok(q)
}

/// A linear projection from a point, realised as a coordinate change sending
/// the center to `[1, 0, ..., 0]` followed by dropping `x0`.
#[derive(Clone, Debug)]
pub struct Projection<F> {
    pub center: Vec<F>,
    pub change: LinearChange<F>,
    inverse: LinearChange<F>,
}

impl<F: Field> Projection<F> {
    pub fn new(center: &[F]) -> Result<Self> {
        let n = center.len();
        let pivot = center.iter().position(|c| !c.is_zero()).ok_or(Error::SingularChange)?;
        // columns: the center, then the unit vectors other than e_pivot
        let mut cols: Vec<Vec<F>> = vec![center.to_vec()];
        for k in (0..n).filter(|&k| k != pivot) {
            let mut e = vec![F::zero(); n];
            e[k] = F::one();
            cols.push(e);
        }
        let entries = (0..n)
            .map(|row| cols.iter().map(|c| c[row].clone()).collect())
            .collect();
        let change = LinearChange::new(entries)?;
        let inverse = change.inverse();
        Ok(Projection {
            center: center.to_vec(),
            change,
            inverse,
        })
    }

    /// Image of a point not equal to the center.
    pub fn map_point(&self, p: &[F]) -> Vec<F> {
        self.inverse.apply_to_point(p)[1..].to_vec()
    }
}

/// The ideal of the image of `V(I)` under projection from `q`, in one fewer variable.
pub fn project_from_point<F: Field>(ideal: &Ideal<F>, q: &[F]) -> Result<(Ideal<F>, Projection<F>)> {
    check_point(ideal, q)?;
    if on_scheme(ideal, q)? {
        return Err(Error::CenterOnVariety);
    }
    let proj = Projection::new(q)?;
    let moved = ideal.apply_change(&proj.change)?;
    Ok((elimination_ideal_x0(&moved)?, proj))
}

/// A random point with entries in `[1, bound]` off `V(I)`.
pub fn generic_center<F: Field>(ideal: &Ideal<F>, seed: u64, bound: u64) -> Result<Vec<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let q: Vec<F> = (0..ideal.nvars())
            .map(|_| F::from_i64(rng.gen_range(1..=bound) as i64))
            .collect();
        if !on_scheme(ideal, &q)? {
            return Ok(q);
        }
    }
    Err(Error::LandedOnCurve)
}

/// Projects from generic centers until the ambient space is `P^3`.
pub fn project_to_p3<F: Field>(ideal: &Ideal<F>, seed: u64, bound: u64) -> Result<(Ideal<F>, Vec<Projection<F>>)> {
    let mut cur = ideal.clone();
    let mut steps = Vec::new();
    while cur.nvars() > 4 {
        let q = generic_center(&cur, seed.wrapping_add(steps.len() as u64), bound)?;
        let (next, proj) = project_from_point(&cur, &q)?;
        cur = next;
        steps.push(proj);
    }
    Ok((cur, steps))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Agree,
    Disagree,
    /// `M` differs from the prediction and some supplied point has a tangent
    /// space of dimension above 2.
    HypothesisViolated,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Agree => "agree",
            Verdict::Disagree => "disagree",
            Verdict::HypothesisViolated => "hypothesis_violated",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub gin: GinOptions,
    pub projection_seed: u64,
    pub projection_bound: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            gin: GinOptions::default(),
            projection_seed: 7,
            projection_bound: 9,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CurveReport {
    /// `r` for the input curve in `P^r`.
    pub ambient_dim: usize,
    pub source_invariants: CurveInvariants,
    /// Number of generic projections applied before the analysis.
    pub projections: usize,
    pub degree: u64,
    pub genus: i64,
    pub m_actual: u32,
    pub m_predicted: i64,
    pub m_via_ladder: u32,
    pub gin: MonomialIdeal,
    pub k1_degree: u128,
    pub k1_degree_formula: i64,
    /// `x1^d` is a minimal generator of the gin.
    pub power_witness: bool,
    /// `x0 * x2^(C(d-1,2) - g)` is a minimal generator of the gin.
    pub mixed_witness: bool,
    pub tangent_dims: Vec<usize>,
    pub verdict: Verdict,
}

fn has_generator(gin: &MonomialIdeal, exps: &[u32]) -> bool {
    gin.nvars() == exps.len() && gin.generators().iter().any(|m| m.exponents() == exps)
}

/// Runs the full analysis of a curve: invariants, gin, ladder, witnesses and
/// tangent dimensions at `points` (given in the coordinates of `ideal`).
pub fn curve_report<F: Field>(ideal: &Ideal<F>, points: &[Vec<F>], opts: &ReportOptions) -> Result<CurveReport> {
    let source_invariants = curve_invariants(ideal)?;
    let tangent_dims = points
        .iter()
        .map(|p| tangent_dim_at(ideal, p))
        .collect::<Result<Vec<_>>>()?;
    let (frame, steps) = project_to_p3(ideal, opts.projection_seed, opts.projection_bound)?;
    let inv = if steps.is_empty() {
        source_invariants
    } else {
        curve_invariants(&frame)?
    };
    let g: GinResult<F> = gin(&frame, GLEX, &opts.gin)?;
    let ladder = PartialElimLadder::from_basis(&g.basis)?;
    let m_actual = g.gin.regularity_borel()?;
    let m_predicted = predicted_m(inv.degree, inv.genus);
    let k1_formula = binomial(inv.degree.saturating_sub(1), 2) as i64 - inv.genus;
    let power_witness = has_generator(&g.gin, &[0, inv.degree as u32, 0, 0]);
    let mixed_witness = k1_formula >= 0 && has_generator(&g.gin, &[1, 0, k1_formula as u32, 0]);
    let verdict = if m_actual as i64 == m_predicted {
        Verdict::Agree
    } else if tangent_dims.iter().any(|&t| t > 2) {
        Verdict::HypothesisViolated
    } else {
        Verdict::Disagree
    };
    Ok(CurveReport {
        ambient_dim: ideal.nvars() - 1,
        source_invariants,
        projections: steps.len(),
        degree: inv.degree,
        genus: inv.genus,
        m_actual,
        m_predicted,
        m_via_ladder: ladder.m_via_ladder(),
        gin: g.gin,
        k1_degree: ladder.locus_degree(1),
        k1_degree_formula: k1_formula,
        power_witness,
        mixed_witness,
        tangent_dims,
        verdict,
    })
}

/// Ideals of the example curves used throughout the tests and the data files.
pub mod examples {
    use super::*;
    use crate::monomial::default_names;

    fn ideal<F: Field>(gens: &[&str]) -> Ideal<F> {
        let names = default_names(4);
        let gens = gens
            .iter()
            .map(|g| Polynomial::parse(g, &names, GLEX).expect("valid example"))
            .collect();
        Ideal::new(4, gens).expect("homogeneous example")
    }

    pub fn twisted_cubic<F: Field>() -> Ideal<F> {
        rational_normal_curve(3).expect("r = 3")
    }

    /// Smooth complete intersection of two diagonal quadrics: degree 4, genus 1.
    pub fn elliptic_quartic<F: Field>() -> Ideal<F> {
        ideal(&["x0^2 + x1^2 + x2^2 + x3^2", "x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2"])
    }

    /// `(x0^3 - x1 x2^2, x1^3 - x2^2 x3)`: degree 9, genus 10, with a point of
    /// embedding dimension 3 at `[0,0,0,1]`.
    pub fn conca_sidman<F: Field>() -> Ideal<F> {
        ideal(&["x0^3 - x1*x2^2", "x1^3 - x2^2*x3"])
    }

    /// `(x0^4 - x1 x2^3, x1^2 - x2 x3)`: degree 8, genus 9.
    pub fn quartic_quadric<F: Field>() -> Ideal<F> {
        ideal(&["x0^4 - x1*x2^3", "x1^2 - x2*x3"])
    }

    /// `(x0^3 - x1 x2^2, x1^3 - x2 x3^2)`: degree 9, genus 10, tangent spaces of
    /// dimension at most 2.
    pub fn cubic_cubic<F: Field>() -> Ideal<F> {
        ideal(&["x0^3 - x1*x2^2", "x1^3 - x2*x3^2"])
    }

    /// The rational normal curve of degree `r` projected from points
    /// `p(s1) + t p(s2)` on successive secant lines; each entry of `secants`
    /// is `(s1, s2, t)` with parameters of points on the original curve.
    pub fn projected_rnc<F: Field>(r: usize, secants: &[(i64, i64, i64)]) -> Result<Ideal<F>> {
        let mut cur = rational_normal_curve::<F>(r)?;
        let mut maps: Vec<Projection<F>> = Vec::new();
        for &(s1, s2, t) in secants {
            let image = |s: i64| maps.iter().fold(rnc_point(r, &F::from_i64(s)), |p, m| m.map_point(&p));
            let q = secant_point(&cur, &image(s1), &image(s2), &F::from_i64(t))?;
            let (next, proj) = project_from_point(&cur, &q)?;
            cur = next;
            maps.push(proj);
        }
        Ok(cur)
    }
}
