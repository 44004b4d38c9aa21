//! Seeded random inputs for the property suites.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use ribbonlab::conormal::LambdaFunctional;
use ribbonlab::exact::{ratio, RatMatrix, Rational};
use ribbonlab::families::binary_discriminant;
use ribbonlab::poly::{BinaryForm, WPoly};
use ribbonlab::rnc::{IdealSlice, QuadForm};

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=3))
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random symmetric form. About a third of the samples are built with
/// rank below g-2 so both sides of the determinant test get exercised.
pub fn quad_form(g: usize, rng: &mut ChaCha8Rng) -> QuadForm {
    let n = g - 2;
    let mut m = RatMatrix::zeros(n, n);
    if rng.gen_range(0..3) == 0 {
        let rank = rng.gen_range(0..n);
        for _ in 0..rank {
            let w: Vec<Rational> = (0..n).map(|_| small_rational(rng)).collect();
            let c = nonzero_rational(rng);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] += &c * &w[i] * &w[j];
                }
            }
        }
    } else {
        for i in 0..n {
            for j in i..n {
                let c = small_rational(rng);
                m[(i, j)] = c.clone();
                m[(j, i)] = c;
            }
        }
    }
    QuadForm::new(g, m).expect("symmetric by construction")
}

pub fn lambda(g: usize, rng: &mut ChaCha8Rng) -> LambdaFunctional {
    loop {
        let coords: Vec<Rational> = (0..g - 2).map(|_| small_rational(rng)).collect();
        if let Ok(l) = LambdaFunctional::new(g, coords) {
            return l;
        }
    }
}

/// Integer binary form of degree 2g+2 with nonzero discriminant.
pub fn squarefree_h(g: usize, rng: &mut ChaCha8Rng) -> BinaryForm {
    loop {
        let h = BinaryForm::from_coeffs((0..=2 * g + 2).map(|_| ratio(rng.gen_range(-5..=5), 1)).collect());
        if !binary_discriminant(&h).map(|d| d.is_zero()).unwrap_or(true) {
            return h;
        }
    }
}

/// Random element of a slice: a combination of its basis.
pub fn element(slice: &IdealSlice, rng: &mut ChaCha8Rng) -> WPoly {
    let mut x = WPoly::zero(slice.g());
    for b in slice.basis() {
        x = x.add(&b.scale(&small_rational(rng)));
    }
    x
}

/// A linear form in the v-variables with random coefficients.
pub fn v_linear(g: usize, rng: &mut ChaCha8Rng) -> WPoly {
    let mut p = WPoly::zero(g);
    for j in 0..g - 2 {
        p = p.add(&WPoly::v(g, j).scale(&small_rational(rng)));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn squarefree_forms_have_nonzero_discriminant() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for g in 3..6 {
            let h = squarefree_h(g, &mut rng);
            assert_eq!(h.degree(), 2 * g + 2);
            assert!(!binary_discriminant(&h).unwrap().is_zero());
        }
    }

    #[test]
    fn samples_repeat_under_the_same_seed() {
        let a = quad_form(5, &mut ChaCha8Rng::seed_from_u64(9));
        let b = quad_form(5, &mut ChaCha8Rng::seed_from_u64(9));
        assert_eq!(a, b);
    }
}
