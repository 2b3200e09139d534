//! Exact multivariate Laurent polynomials over Z and over cyclotomic integers.

mod cycdiv;
pub mod cyclotomic;
mod json;
mod laurent;
mod qcomb;
mod ring;
mod text;

use thiserror::Error;

pub use cyclotomic::{cyclotomic_poly, euler_phi, CycInt};
pub use json::{PolyJson, TermJson};
pub use laurent::{LaurentPoly, Term};
pub use qcomb::{q_binomial, q_multinomial, q_pochhammer};
pub use ring::{CoeffRing, Monomial, Ring, UnitMonomial, MAX_SLOTS, ROOT_NAME};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("coefficient ring mismatch: {0}")]
    RingMismatch(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("invalid variable name {0}")]
    BadVariable(String),
    #[error("too many variables ({0})")]
    TooManyVariables(usize),
    #[error("invalid ring: {0}")]
    BadRing(String),
    #[error("image must be a unit: {0}")]
    UnitRequired(String),
    #[error("degree of the zero polynomial is undefined")]
    UndefinedDegree,
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact")]
    NotDivisible,
    #[error("parse error: {0}")]
    Parse(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn zt() -> Arc<Ring> {
        Ring::integer(&["t"])
    }

    fn p(r: &Arc<Ring>, s: &str) -> LaurentPoly {
        LaurentPoly::parse(r, s).unwrap()
    }

    #[test]
    fn add_examples() {
        let r = zt();
        assert_eq!(&p(&r, "t + 1") + &p(&r, "-1"), p(&r, "t"));
        let s = &p(&r, "1 - t") + &p(&r, "t - t^2");
        assert_eq!(s, p(&r, "1 - t^2"));
        let two = LaurentPoly::constant(&r, 2);
        assert_eq!(s.substitute(&r, &[("t", two)]).unwrap(), LaurentPoly::constant(&r, -3));
    }

    #[test]
    fn mul_examples() {
        let r = zt();
        assert_eq!(&p(&r, "t - 1 + t^-1") * &p(&r, "t"), p(&r, "t^2 - t + 1"));
        let c2 = Ring::cyclotomic(2, &[]);
        let w = LaurentPoly::omega(&c2).unwrap();
        assert!((&w * &w).is_one());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = LaurentPoly::one(&Ring::integer(&["t"]));
        let b = LaurentPoly::one(&Ring::cyclotomic(3, &["t"]));
        assert!(matches!(a.checked_add(&b), Err(PolyError::RingMismatch(_))));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn substitute_examples() {
        let r = zt();
        let one = LaurentPoly::one(&r);
        assert!(p(&r, "t - 1 + t^-1").substitute(&r, &[("t", one)]).unwrap().is_one());
        let uv = Ring::integer(&["u", "v"]);
        let zero = LaurentPoly::zero(&uv);
        assert_eq!(p(&uv, "1 + 4u + u^2 + v").substitute(&uv, &[("u", zero)]).unwrap(), p(&uv, "1 + v"));
        let two_plus = p(&r, "1 + t");
        assert!(matches!(
            p(&r, "t^-1").substitute(&r, &[("t", two_plus)]),
            Err(PolyError::UnitRequired(_))
        ));
    }

    #[test]
    fn substitute_into_roots_of_unity() {
        let r = Ring::integer(&["q"]);
        let c3 = Ring::cyclotomic(3, &[]);
        let w = LaurentPoly::omega(&c3).unwrap();
        let v = p(&r, "q^-1 + q^2").substitute(&c3, &[("q", w)]).unwrap();
        assert_eq!(v, p(&c3, "2 w^2"));
    }

    #[test]
    fn degree_span_examples() {
        let r = zt();
        assert_eq!(p(&r, "t - 1 + t^-1").degree_span("t").unwrap(), 2);
        assert_eq!(p(&r, "5").degree_span("t").unwrap(), 0);
        assert_eq!(LaurentPoly::zero(&r).degree_span("t"), Err(PolyError::UndefinedDegree));
    }

    #[test]
    fn exact_division() {
        let r = Ring::integer(&["s", "t"]);
        let a = p(&r, "(1 + s t - 2 t^-1)(3 - s^2 + t)");
        let b = p(&r, "3 - s^2 + t");
        assert_eq!(a.div_exact(&b).unwrap(), p(&r, "1 + s t - 2 t^-1"));
        assert_eq!(p(&r, "1 + s").div_exact(&p(&r, "1 - s")), Err(PolyError::NotDivisible));
        assert_eq!(p(&r, "2 + 2s").div_exact(&p(&r, "3")), Err(PolyError::NotDivisible));
    }

    #[test]
    fn exact_division_cyclotomic() {
        let r = Ring::cyclotomic(5, &["t"]);
        let d = p(&r, "1 + 2w + t w^3");
        let q = p(&r, "t^-1 - w^2 + 3 t");
        assert_eq!((&d * &q).div_exact(&d).unwrap(), q);
        assert!(p(&r, "1 + t").div_exact(&p(&r, "2")).is_err());
    }

    #[test]
    fn unit_recognition() {
        let r = Ring::cyclotomic(3, &["t"]);
        let u = p(&r, "w^2 t^-1").as_unit().unwrap();
        assert_eq!(u.w, 2);
        assert!((&p(&r, "w^2 t^-1") * &p(&r, "w^2 t^-1").inverse_unit().unwrap()).is_one());
        assert!(p(&r, "1 + t").as_unit().is_none());
    }
}
