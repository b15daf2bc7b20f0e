//! The GL action on Waring points and the two defining checks of a highest weight vector.

use super::{eval_naive, EvalError};
use crate::algebra::{Field, Matrix, WaringPoint};
use crate::random::diagonal;
use crate::tableau::Tableau;

/// Replaces every form `ℓ_i` by `g·ℓ_i`.
pub fn gl_transform_point<F: Field>(
    g: &Matrix<F>,
    p: &WaringPoint<F>,
) -> Result<WaringPoint<F>, EvalError> {
    if g.nrows() != p.m || g.ncols() != p.m {
        return Err(EvalError::TooLarge(format!(
            "matrix is {}x{} but the point has {} variables",
            g.nrows(),
            g.ncols(),
            p.m
        )));
    }
    Ok(p.transform(g))
}

/// `∏ α_i^{λ_i}` for the shape `λ` of `t`.
pub fn weight_factor<F: Field>(t: &Tableau, alpha: &[F]) -> F {
    t.shape()
        .parts()
        .iter()
        .zip(alpha)
        .fold(F::one(), |acc, (&l, a)| acc * a.pow(l as u32))
}

/// `f(diag(α)·p) = ∏ α_i^{λ_i} · f(p)`.
pub fn hwv_weight_check<F: Field>(
    t: &Tableau,
    p: &WaringPoint<F>,
    alpha: &[F],
) -> Result<bool, EvalError> {
    let scaled = gl_transform_point(&diagonal(alpha), p)?;
    let lhs = eval_naive(t, &scaled)?;
    let rhs = weight_factor(t, alpha) * eval_naive(t, p)?;
    Ok(lhs == rhs)
}

/// `f(uᵗ·p) = f(p)` for unit upper-triangular `u`.
pub fn hwv_unipotent_check<F: Field>(
    t: &Tableau,
    p: &WaringPoint<F>,
    u: &Matrix<F>,
) -> Result<bool, EvalError> {
    let moved = gl_transform_point(&u.transpose(), p)?;
    Ok(eval_naive(t, &moved)? == eval_naive(t, p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_rational, LinearForm, Q};

    fn q(s: &str) -> Q {
        parse_rational(s).unwrap()
    }

    #[test]
    fn discriminant_checks() {
        let disc = Tableau::from_rows(vec![vec![1, 1], vec![2, 2]]).unwrap();
        let p_sq = WaringPoint::from_forms(
            2,
            vec![LinearForm::from_i64(&[1, 0]), LinearForm::from_i64(&[0, 1])],
        )
        .unwrap();
        let alpha = [q("2"), q("1")];
        assert_eq!(weight_factor(&disc, &alpha), q("4"));
        let scaled = gl_transform_point(&diagonal(&alpha), &p_sq).unwrap();
        assert_eq!(eval_naive(&disc, &scaled).unwrap(), q("8"));
        assert!(hwv_weight_check(&disc, &p_sq, &alpha).unwrap());
        assert!(hwv_weight_check(&disc, &p_sq, &[q("1"), q("1")]).unwrap());
        let u = Matrix::from_rows(vec![vec![q("1"), q("1")], vec![q("0"), q("1")]]);
        assert!(hwv_unipotent_check(&disc, &p_sq, &u).unwrap());
        assert!(hwv_unipotent_check(&disc, &p_sq, &Matrix::identity(2)).unwrap());
        assert_eq!(
            gl_transform_point(&Matrix::identity(2), &p_sq).unwrap(),
            p_sq
        );
    }
}
