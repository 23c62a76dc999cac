use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg::Spectrum;

/// Graph families whose ABS spectrum has a closed form.
#[derive(Debug, Clone, PartialEq)]
pub enum ClosedForm {
    /// An `r`-regular graph, given its adjacency spectrum.
    RegularScaled {
        adjacency: Spectrum,
        r: usize,
    },
    Complete(usize),
    Cycle(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
}

/// `sqrt(r^2 - r) / r`, the factor relating ABS and adjacency matrices of an
/// `r`-regular graph. Zero for `r <= 1`.
pub fn regular_scale(r: usize) -> f64 {
    if r == 0 {
        return 0.0;
    }
    let r = r as f64;
    (r * r - r).sqrt() / r
}

fn at_least(value: usize, min: usize, what: &str) -> Result<()> {
    if value < min {
        Err(Error::InvalidParam(format!(
            "{what} needs size >= {min}, got {value}"
        )))
    } else {
        Ok(())
    }
}

pub fn closed_form_abs_spectrum(form: &ClosedForm) -> Result<Spectrum> {
    match *form {
        ClosedForm::RegularScaled { ref adjacency, r } => Ok(adjacency.scaled(regular_scale(r))),
        ClosedForm::Complete(n) => {
            at_least(n, 2, "complete graph")?;
            let nf = n as f64;
            let c = ((nf - 2.0) / (nf - 1.0)).sqrt();
            Ok(std::iter::once((nf - 1.0) * c)
                .chain(std::iter::repeat_n(-c, n - 1))
                .collect())
        }
        ClosedForm::Cycle(n) => {
            at_least(n, 3, "cycle")?;
            Ok((0..n)
                .map(|i| 2.0_f64.sqrt() * (2.0 * PI * i as f64 / n as f64).cos())
                .collect())
        }
        ClosedForm::Star(n) => {
            at_least(n, 2, "star")?;
            let nf = n as f64;
            let top = ((nf - 1.0) * (nf - 2.0) / nf).sqrt();
            Ok(pm_with_zeros(top, n - 2))
        }
        ClosedForm::CompleteBipartite(m, n) => {
            at_least(m, 1, "complete bipartite part A")?;
            at_least(n, 1, "complete bipartite part B")?;
            let (mf, nf) = (m as f64, n as f64);
            let top = (mf * nf * (mf + nf - 2.0) / (mf + nf)).sqrt();
            Ok(pm_with_zeros(top, m + n - 2))
        }
    }
}

fn pm_with_zeros(top: f64, zeros: usize) -> Spectrum {
    [top, -top]
        .into_iter()
        .chain(std::iter::repeat_n(0.0, zeros))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::multiset_close;

    #[test]
    fn k13_and_s4_agree() {
        let v = 1.5_f64.sqrt();
        let expected = Spectrum::new(vec![-v, 0.0, 0.0, v]);
        let kmn = closed_form_abs_spectrum(&ClosedForm::CompleteBipartite(1, 3)).unwrap();
        let star = closed_form_abs_spectrum(&ClosedForm::Star(4)).unwrap();
        assert!(multiset_close(&kmn, &expected, 1e-15).unwrap());
        assert!(multiset_close(&star, &expected, 1e-15).unwrap());
    }

    #[test]
    fn triangle() {
        let s2 = 2.0_f64.sqrt();
        let c3 = closed_form_abs_spectrum(&ClosedForm::Cycle(3)).unwrap();
        assert!(
            multiset_close(&c3, &Spectrum::new(vec![s2, -s2 / 2.0, -s2 / 2.0]), 1e-15).unwrap()
        );
        let k3 = closed_form_abs_spectrum(&ClosedForm::Complete(3)).unwrap();
        assert!(multiset_close(&c3, &k3, 1e-15).unwrap());
    }

    #[test]
    fn regular_scaling_degenerate_degrees() {
        let adj = Spectrum::new(vec![-1.0, 1.0]);
        let zero = Spectrum::new(vec![0.0, 0.0]);
        for r in [0, 1] {
            let s = closed_form_abs_spectrum(&ClosedForm::RegularScaled {
                adjacency: adj.clone(),
                r,
            })
            .unwrap();
            assert!(multiset_close(&s, &zero, 0.0).unwrap());
        }
        assert_eq!(regular_scale(2), 0.5_f64.sqrt());
    }

    #[test]
    fn size_validation() {
        assert!(closed_form_abs_spectrum(&ClosedForm::Cycle(2)).is_err());
        assert!(closed_form_abs_spectrum(&ClosedForm::Complete(1)).is_err());
        assert!(closed_form_abs_spectrum(&ClosedForm::Star(1)).is_err());
        assert!(closed_form_abs_spectrum(&ClosedForm::CompleteBipartite(0, 2)).is_err());
    }

    #[test]
    fn lengths_match_order() {
        assert_eq!(
            closed_form_abs_spectrum(&ClosedForm::Complete(6))
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            closed_form_abs_spectrum(&ClosedForm::Star(7))
                .unwrap()
                .len(),
            7
        );
        assert_eq!(
            closed_form_abs_spectrum(&ClosedForm::CompleteBipartite(3, 4))
                .unwrap()
                .len(),
            7
        );
    }
}
