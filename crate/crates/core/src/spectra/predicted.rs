//! Predicted spectra and energies of transformed regular graphs.
//!
//! For an `r`-regular `G` the ABS matrices of `S(G)`, `T1(G)` and `T2(G)`
//! are 2x2 block matrices built from the incidence matrix `F` and either
//! `A(G)` or `A(L(G))`. Taking the Schur complement against the zero
//! diagonal block and using `F F^t = A + rI` or `F^t F = 2I + A(L(G))`
//! reduces each characteristic polynomial to one quadratic per adjacency
//! eigenvalue times a power of `x`:
//!
//! | graph  | per-eigenvalue quadratic                    | power of `x` |
//! |--------|---------------------------------------------|--------------|
//! | `S(G)` | `x^2 - r(l + r)/(r + 2)`                    | `m - n`      |
//! | `T1(G)`| `x^2 - s l x - (t l + r^2/(r + 1))`         | `m - n`      |
//! | `T2(G)`| `x^2 - u q x - v (q + 2)`                   | `n - m`      |
//!
//! with `l` ranging over the spectrum of `A(G)`, `q` over that of `A(L(G))`,
//! `s = sqrt((2r-1)/(2r))`, `t = r/(r+1)`, `u = sqrt((4r-2)/(4r))` and
//! `v = (3r-2)/(3r)`. A negative power means that many zero roots of the
//! quadratic product cancel.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{kron, Matrix, Polynomial, Spectrum};
use crate::transforms;

use super::{adjacency_energy, adjacency_matrix, adjacency_spectrum, regular_degree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumTransform {
    Subdivision,
    SemitotalPoint,
    SemitotalLine,
}

/// `phi(transformed) = x^zero_power * factor`.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftedCharPoly {
    pub factor: Polynomial,
    pub zero_power: isize,
}

struct Lift {
    /// `(b, c)` for each monic quadratic `x^2 + b x + c`.
    quadratics: Vec<(f64, f64)>,
    zero_power: isize,
}

struct Coefficients {
    r: f64,
    s: f64,
    t: f64,
    u: f64,
    v: f64,
}

impl Coefficients {
    fn new(r: usize) -> Self {
        let r = r as f64;
        Self {
            r,
            s: ((2.0 * r - 1.0) / (2.0 * r)).sqrt(),
            t: r / (r + 1.0),
            u: ((4.0 * r - 2.0) / (4.0 * r)).sqrt(),
            v: (3.0 * r - 2.0) / (3.0 * r),
        }
    }
}

fn lift(kind: SpectrumTransform, g: &Graph) -> Result<Lift> {
    let r = regular_degree(g)?;
    let k = Coefficients::new(r);
    let (n, m) = (g.order() as isize, g.size() as isize);
    let lift = match kind {
        SpectrumTransform::Subdivision => Lift {
            quadratics: adjacency_spectrum(g)?
                .iter()
                .map(|l| (0.0, -k.r * (l + k.r) / (k.r + 2.0)))
                .collect(),
            zero_power: m - n,
        },
        SpectrumTransform::SemitotalPoint => Lift {
            quadratics: adjacency_spectrum(g)?
                .iter()
                .map(|l| (-k.s * l, -(k.t * l + k.r * k.r / (k.r + 1.0))))
                .collect(),
            zero_power: m - n,
        },
        SpectrumTransform::SemitotalLine => Lift {
            quadratics: adjacency_spectrum(&g.line_graph())?
                .iter()
                .map(|q| (-k.u * q, -k.v * (q + 2.0)))
                .collect(),
            zero_power: n - m,
        },
    };
    Ok(lift)
}

/// Discriminants this small relative to the coefficients are taken as an
/// exact double root. Rounding in the base eigenvalues would otherwise be
/// amplified by the square root (an error `e` becomes `sqrt(e)`).
const DOUBLE_ROOT_TOLERANCE: f64 = 1e-12;

/// Real roots of `x^2 + b x + c`. A discriminant that is negative or within
/// rounding of zero gives a double root.
fn quadratic_roots(b: f64, c: f64) -> [f64; 2] {
    let disc = b * b - 4.0 * c;
    let scale = 1.0_f64.max(b * b).max(4.0 * c.abs());
    let disc = if disc <= DOUBLE_ROOT_TOLERANCE * scale {
        0.0
    } else {
        disc
    };
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    if q == 0.0 {
        [0.0, 0.0]
    } else {
        [q, c / q]
    }
}

/// Predicted ABS spectrum of `S(G)`, `T1(G)` or `T2(G)` for a connected
/// regular `G`, assembled from the per-eigenvalue quadratics.
pub fn predicted_transform_spectrum(kind: SpectrumTransform, g: &Graph) -> Result<Spectrum> {
    let lift = lift(kind, g)?;
    let roots: Spectrum = lift
        .quadratics
        .iter()
        .flat_map(|&(b, c)| quadratic_roots(b, c))
        .collect();
    Ok(if lift.zero_power >= 0 {
        roots.with_zeros(lift.zero_power as usize)
    } else {
        roots.without_smallest(lift.zero_power.unsigned_abs())
    })
}

pub fn predicted_transform_charpoly(kind: SpectrumTransform, g: &Graph) -> Result<LiftedCharPoly> {
    let lift = lift(kind, g)?;
    let factor = lift
        .quadratics
        .iter()
        .fold(Polynomial::constant(1.0), |acc, &(b, c)| {
            acc.mul(&Polynomial::new(vec![c, b, 1.0]))
        });
    Ok(LiftedCharPoly {
        factor,
        zero_power: lift.zero_power,
    })
}

/// `prod (y - l_i)` over a spectrum.
fn psi(spectrum: &Spectrum, y: f64) -> f64 {
    spectrum.iter().map(|l| y - l).product()
}

/// Value at `x` of the transformed graph's characteristic polynomial written
/// as prefactor * x^power * psi(base : argument). With `exponent_on_prefactor`
/// the prefactor is raised to the order of the base matrix; without it the
/// prefactor appears once.
fn psi_form_at(
    kind: SpectrumTransform,
    g: &Graph,
    x: f64,
    exponent_on_prefactor: bool,
) -> Result<f64> {
    let r = regular_degree(g)?;
    let k = Coefficients::new(r);
    let (n, m) = (g.order() as i32, g.size() as i32);
    let (prefactor, power, argument, base, base_order) = match kind {
        SpectrumTransform::Subdivision => (
            k.r / (k.r + 2.0),
            m - n,
            (x * x * (k.r + 2.0) - k.r * k.r) / k.r,
            adjacency_spectrum(g)?,
            n,
        ),
        SpectrumTransform::SemitotalPoint => {
            let p = k.s * x + k.t;
            (
                p,
                m - n,
                (x * x - k.r * k.r / (k.r + 1.0)) / p,
                adjacency_spectrum(g)?,
                n,
            )
        }
        SpectrumTransform::SemitotalLine => {
            let p = k.u * x + k.v;
            (
                p,
                n - m,
                (x * x - 2.0 * k.v) / p,
                adjacency_spectrum(&g.line_graph())?,
                m,
            )
        }
    };
    let scale = if exponent_on_prefactor {
        prefactor.powi(base_order)
    } else {
        prefactor
    };
    Ok(scale * x.powi(power) * psi(&base, argument))
}

/// The closed form with the prefactor appearing once.
pub fn as_printed_transform_charpoly_at(kind: SpectrumTransform, g: &Graph, x: f64) -> Result<f64> {
    psi_form_at(kind, g, x, false)
}

/// The closed form with the prefactor raised to the base matrix order.
pub fn corrected_transform_charpoly_at(kind: SpectrumTransform, g: &Graph, x: f64) -> Result<f64> {
    psi_form_at(kind, g, x, true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnergyKind {
    Splitting,
    Shadow,
}

/// Two readings of the ABS energy of `Spl_k(G)` / `D_k(G)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyPrediction {
    /// Scales the energy of the base graph `G`.
    pub corrected: f64,
    /// Scales the energy of the transformed graph.
    pub as_printed: f64,
}

/// `a^2 + 4 k b^2` with `a^2 = 1 - 1/(r(k+1))` and `b^2 = 1 - 2/(r(k+2))`.
pub fn splitting_radicand_corrected(r: usize, k: usize) -> f64 {
    let (r, k) = (r as f64, k as f64);
    let a2 = 1.0 - 1.0 / (r * (k + 1.0));
    let b2 = 1.0 - 2.0 / (r * (k + 2.0));
    a2 + 4.0 * k * b2
}

/// `(5rk^2 + 15rk - 9k + 10r - 10) / (r(k+1)(k+2))`.
pub fn splitting_radicand_as_printed(r: usize, k: usize) -> f64 {
    let (r, k) = (r as f64, k as f64);
    (5.0 * r * k * k + 15.0 * r * k - 9.0 * k + 10.0 * r - 10.0) / (r * (k + 1.0) * (k + 2.0))
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidParam("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

pub fn predicted_energy(kind: EnergyKind, g: &Graph, k: usize) -> Result<EnergyPrediction> {
    check_k(k)?;
    let r = regular_degree(g)?;
    let base_energy = adjacency_energy(g)?.energy;
    Ok(match kind {
        EnergyKind::Splitting => {
            let transformed = adjacency_energy(&transforms::splitting(g, k)?)?.energy;
            EnergyPrediction {
                corrected: splitting_radicand_corrected(r, k).sqrt() * base_energy,
                as_printed: splitting_radicand_as_printed(r, k).sqrt() * transformed,
            }
        }
        EnergyKind::Shadow => {
            let factor = k as f64 * (1.0 - 1.0 / (k * r) as f64).sqrt();
            let transformed = adjacency_energy(&transforms::shadow(g, k)?)?.energy;
            EnergyPrediction {
                corrected: factor * base_energy,
                as_printed: factor * transformed,
            }
        }
    })
}

fn regular_with_edges(g: &Graph) -> Result<usize> {
    match g.is_regular() {
        None => Err(Error::NotRegular),
        Some(0) => Err(Error::InvalidParam("regular graph has no edges".into())),
        Some(r) => Ok(r),
    }
}

/// `(k+1) x (k+1)` weight pattern of `Spl_k(G)`: `a` in the corner, `b` along
/// the first row and column, zeros elsewhere.
pub fn splitting_block_matrix(r: usize, k: usize) -> Matrix<f64> {
    let (rf, kf) = (r as f64, k as f64);
    let a = (1.0 - 1.0 / (rf * (kf + 1.0))).sqrt();
    let b = (1.0 - 2.0 / (rf * (kf + 2.0))).sqrt();
    Matrix::from_fn(k + 1, k + 1, |i, j| match (i, j) {
        (0, 0) => a,
        (0, _) | (_, 0) => b,
        _ => 0.0,
    })
}

/// `splitting_block_matrix(r, k) (x) A(G)` for an `r`-regular `G`.
pub fn splitting_kron_form(g: &Graph, k: usize) -> Result<Matrix<f64>> {
    check_k(k)?;
    let r = regular_with_edges(g)?;
    Ok(kron(
        &splitting_block_matrix(r, k),
        adjacency_matrix(g).as_matrix(),
    ))
}

/// `sqrt(1 - 1/(kr)) J_k (x) A(G)` for an `r`-regular `G`.
pub fn shadow_kron_form(g: &Graph, k: usize) -> Result<Matrix<f64>> {
    check_k(k)?;
    let r = regular_with_edges(g)?;
    let w = (1.0 - 1.0 / (k * r) as f64).sqrt();
    Ok(kron(&Matrix::ones(k, k), adjacency_matrix(g).as_matrix()).scale(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphKind;
    use crate::linalg::{char_poly, eigenvalues_symmetric, multiset_close, poly_close};
    use crate::spectra::{
        abs_energy, abs_matrix, abs_spectrum, closed_form_abs_spectrum, ClosedForm,
    };
    use approx::assert_relative_eq;

    fn gen(kind: GraphKind) -> Graph {
        Graph::generate(kind).unwrap()
    }

    #[test]
    fn near_double_roots_snap() {
        assert_eq!(quadratic_roots(0.0, -1e-16), [0.0, 0.0]);
        assert_eq!(quadratic_roots(0.0, -4.0), [-2.0, 2.0]);
        let [p, q] = quadratic_roots(-2.0, 1.0 + 1e-15);
        assert_eq!((p, q), (1.0, 1.0 + 1e-15));
    }

    #[test]
    fn subdivision_of_even_cycle_keeps_zero_pair() {
        let g = gen(GraphKind::Cycle(8));
        let predicted = predicted_transform_spectrum(SpectrumTransform::Subdivision, &g).unwrap();
        let actual =
            eigenvalues_symmetric(abs_matrix(&transforms::subdivision(&g)).as_sym()).unwrap();
        assert!(multiset_close(&predicted, &actual, 1e-12).unwrap());
    }

    #[test]
    fn subdivision_of_triangle_is_hexagon() {
        let c3 = gen(GraphKind::Cycle(3));
        let predicted = predicted_transform_spectrum(SpectrumTransform::Subdivision, &c3).unwrap();
        let hexagon = closed_form_abs_spectrum(&ClosedForm::Cycle(6)).unwrap();
        assert!(multiset_close(&predicted, &hexagon, 1e-12).unwrap());
    }

    #[test]
    fn semitotal_point_of_k2_is_triangle() {
        let k2 = gen(GraphKind::Path(2));
        let predicted =
            predicted_transform_spectrum(SpectrumTransform::SemitotalPoint, &k2).unwrap();
        let s2 = 2.0_f64.sqrt();
        let expected = Spectrum::new(vec![s2, -s2 / 2.0, -s2 / 2.0]);
        assert!(multiset_close(&predicted, &expected, 1e-12).unwrap());
        let actual = abs_spectrum(&transforms::semitotal_point(&k2)).unwrap();
        assert!(multiset_close(&actual, &expected, 1e-12).unwrap());
    }

    #[test]
    fn semitotal_line_of_triangle() {
        let c3 = gen(GraphKind::Cycle(3));
        let predicted =
            predicted_transform_spectrum(SpectrumTransform::SemitotalLine, &c3).unwrap();
        let actual = abs_spectrum(&transforms::semitotal_line(&c3)).unwrap();
        assert!(multiset_close(&predicted, &actual, 1e-10).unwrap());
    }

    #[test]
    fn lifted_polynomials_match_faddeev_leverrier() {
        for g in [
            gen(GraphKind::Cycle(4)),
            gen(GraphKind::Complete(4)),
            gen(GraphKind::Path(2)),
        ] {
            for (kind, t) in [
                (SpectrumTransform::Subdivision, transforms::subdivision(&g)),
                (
                    SpectrumTransform::SemitotalPoint,
                    transforms::semitotal_point(&g),
                ),
                (
                    SpectrumTransform::SemitotalLine,
                    transforms::semitotal_line(&g),
                ),
            ] {
                let lifted = predicted_transform_charpoly(kind, &g).unwrap();
                let actual = char_poly(abs_matrix(&t).as_sym()).unwrap();
                let e = lifted.zero_power;
                let lhs = actual.shift((-e).max(0) as usize);
                let rhs = lifted.factor.shift(e.max(0) as usize);
                assert!(poly_close(&lhs, &rhs, 1e-10), "{kind:?}");
            }
        }
    }

    #[test]
    fn corrected_psi_form_matches_char_poly_values() {
        let g = gen(GraphKind::Complete(4));
        for (kind, t) in [
            (SpectrumTransform::Subdivision, transforms::subdivision(&g)),
            (
                SpectrumTransform::SemitotalPoint,
                transforms::semitotal_point(&g),
            ),
            (
                SpectrumTransform::SemitotalLine,
                transforms::semitotal_line(&g),
            ),
        ] {
            let actual = char_poly(abs_matrix(&t).as_sym()).unwrap();
            for x in [0.37, 1.21, -0.83] {
                let want = actual.eval(x);
                let got = corrected_transform_charpoly_at(kind, &g, x).unwrap();
                assert_relative_eq!(got, want, max_relative = 1e-9, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn preconditions() {
        let p4 = gen(GraphKind::Path(4));
        assert_eq!(
            predicted_transform_spectrum(SpectrumTransform::Subdivision, &p4),
            Err(Error::NotRegular)
        );
        let two = gen(GraphKind::Cycle(3)).disjoint_union(&gen(GraphKind::Cycle(3)));
        assert_eq!(
            predicted_energy(EnergyKind::Shadow, &two, 2),
            Err(Error::NotConnected)
        );
        assert!(matches!(
            predicted_energy(EnergyKind::Shadow, &gen(GraphKind::Cycle(4)), 0),
            Err(Error::InvalidParam(_))
        ));
    }

    #[test]
    fn splitting_radicands_agree_only_at_k1() {
        assert_relative_eq!(
            splitting_radicand_corrected(2, 1),
            41.0 / 12.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            splitting_radicand_as_printed(2, 1),
            41.0 / 12.0,
            max_relative = 1e-15
        );
        for r in 1..=6 {
            assert_relative_eq!(
                splitting_radicand_corrected(r, 1),
                splitting_radicand_as_printed(r, 1),
                max_relative = 1e-14
            );
            for k in 2..=4 {
                assert!(
                    (splitting_radicand_corrected(r, k) - splitting_radicand_as_printed(r, k))
                        .abs()
                        > 1e-3
                );
            }
        }
    }

    #[test]
    fn shadow_energy_of_c4() {
        let c4 = gen(GraphKind::Cycle(4));
        let p = predicted_energy(EnergyKind::Shadow, &c4, 2).unwrap();
        assert_relative_eq!(p.corrected, 4.0 * 3.0_f64.sqrt(), max_relative = 1e-12);
        let actual = abs_energy(&transforms::shadow(&c4, 2).unwrap())
            .unwrap()
            .energy;
        assert_relative_eq!(actual, p.corrected, max_relative = 1e-10);
        assert_relative_eq!(p.as_printed, 2.0 * p.corrected, max_relative = 1e-10);
    }

    #[test]
    fn shadow_k1_is_regular_scaling() {
        let k5 = gen(GraphKind::Complete(5));
        let p = predicted_energy(EnergyKind::Shadow, &k5, 1).unwrap();
        assert_relative_eq!(
            p.corrected,
            abs_energy(&k5).unwrap().energy,
            max_relative = 1e-10
        );
    }

    #[test]
    fn splitting_energy_brute_force() {
        for g in [
            gen(GraphKind::Cycle(3)),
            gen(GraphKind::Cycle(5)),
            gen(GraphKind::Complete(4)),
        ] {
            for k in 1..=3 {
                let actual = abs_energy(&transforms::splitting(&g, k).unwrap())
                    .unwrap()
                    .energy;
                let p = predicted_energy(EnergyKind::Splitting, &g, k).unwrap();
                assert_relative_eq!(actual, p.corrected, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn kron_forms_match_abs_matrices() {
        let g = gen(GraphKind::Cycle(5));
        for k in 1..=3 {
            let split = abs_matrix(&transforms::splitting(&g, k).unwrap());
            let diff = split
                .as_sym()
                .as_matrix()
                .max_abs_diff(&splitting_kron_form(&g, k).unwrap());
            assert!(diff.unwrap() <= 1e-12);
            let shadow = abs_matrix(&transforms::shadow(&g, k).unwrap());
            let diff = shadow
                .as_sym()
                .as_matrix()
                .max_abs_diff(&shadow_kron_form(&g, k).unwrap());
            assert!(diff.unwrap() <= 1e-12);
        }
    }

    #[test]
    fn block_matrix_eigenvalues() {
        // det(xI - D) = x^{k-1} (x^2 - a x - k b^2)
        let d = splitting_block_matrix(3, 2);
        let sym = crate::linalg::SymMatrix::new(d.clone()).unwrap();
        let eig = eigenvalues_symmetric(&sym).unwrap();
        let (a, b) = (d.get(0, 0), d.get(0, 1));
        let disc = (a * a + 8.0 * b * b).sqrt();
        let expected = Spectrum::new(vec![(a - disc) / 2.0, 0.0, (a + disc) / 2.0]);
        assert!(multiset_close(&eig, &expected, 1e-12).unwrap());
        assert_relative_eq!(
            eig.energy(),
            splitting_radicand_corrected(3, 2).sqrt(),
            max_relative = 1e-12
        );
    }
}
