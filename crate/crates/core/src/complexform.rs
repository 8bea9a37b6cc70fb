//! Complex form of the series, `f(t; a) = sum_n c_n e^{i(n w t + pi a/2)}`.
//!
//! Every term carries the same `+pi*alpha/2` phase, so the negative-index
//! coefficients absorb an extra `e^{-i pi alpha}` to keep the sum real.

use num_complex::Complex64;

use crate::basis::complex_basis;
use crate::types::{quarter_turn_cos_sin, ComplexCoefficients, FractionalOrder, RealCoefficients};

/// Complex coefficients of the real series `coeffs` at `order`:
///
/// * `c_0 = a0 cos(pi a/2) e^{-i pi a/2}`
/// * `c_n = (a_n - i b_n)/2` for n >= 1
/// * `c_{-n} = (a_n + i b_n) e^{-i pi a} / 2` for n >= 1
pub fn complex_coefficients(coeffs: &RealCoefficients, order: FractionalOrder) -> ComplexCoefficients {
    let n = coeffs.len();
    let (cp, _) = order.cos_sin();
    let (c2, s2) = quarter_turn_cos_sin(2.0 * order.alpha());
    let back_turn = Complex64::new(c2, -s2);

    let mut values = vec![Complex64::new(0.0, 0.0); 2 * n + 1];
    values[n] = coeffs.a0() * cp * order.unit_phasor().conj();
    for (k, a, b) in coeffs.harmonics() {
        values[n + k] = Complex64::new(a, -b) / 2.0;
        values[n - k] = Complex64::new(a, b) * back_turn / 2.0;
    }
    ComplexCoefficients::new(coeffs.period(), order, values).expect("finite inputs give finite coefficients")
}

/// `sum_{n=-N}^{N} c_n e^{i(n w t + pi a/2)}` at each grid point, ascending n.
pub fn synthesize_complex(c: &ComplexCoefficients, grid: &[f64]) -> Vec<Complex64> {
    let omega = c.omega();
    let order = c.order();
    grid.iter()
        .map(|&t| {
            c.iter().fold(Complex64::new(0.0, 0.0), |acc, (n, cn)| {
                acc + cn * complex_basis(n, omega, order, t)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::synthesis::synthesize_ffs;
    use crate::types::uniform_grid;

    fn ord(alpha: f64) -> FractionalOrder {
        FractionalOrder::new(alpha).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        let dc = RealCoefficients::new(1.0, 1.0, vec![], vec![]).unwrap();
        assert_eq!(
            complex_coefficients(&dc, ord(0.0)).get(0),
            Some(Complex64::new(1.0, 0.0))
        );

        let cos = RealCoefficients::new(1.0, 0.0, vec![1.0], vec![0.0]).unwrap();
        for alpha in [0.0, 0.3, 1.0, 1.9] {
            assert_eq!(
                complex_coefficients(&cos, ord(alpha)).get(1),
                Some(Complex64::new(0.5, 0.0))
            );
        }
        let c = complex_coefficients(&cos, ord(1.0));
        let minus = c.get(-1).unwrap();
        assert!((minus - Complex64::new(-0.5, 0.0)).norm() < 1e-16);
    }

    #[test]
    fn synthesis_examples() {
        let only_dc = ComplexCoefficients::new(1.0, ord(0.0), vec![Complex64::new(1.0, 0.0)]).unwrap();
        assert_eq!(
            synthesize_complex(&only_dc, &[0.0, 0.5]),
            vec![Complex64::new(1.0, 0.0); 2]
        );

        let cos = RealCoefficients::new(1.0, 0.0, vec![1.0], vec![0.0]).unwrap();
        let v = synthesize_complex(&complex_coefficients(&cos, ord(0.0)), &[0.0]);
        assert!((v[0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn real_sum_from_non_hermitian_terms() {
        let c = RealCoefficients::new(2.0, 0.3, vec![0.5, -0.4], vec![0.7, 0.2]).unwrap();
        let o = ord(0.6);
        let cc = complex_coefficients(&c, o);
        // neither the coefficients nor the basis functions are conjugate-symmetric...
        let t = 0.37;
        assert!((cc.get(-1).unwrap() - cc.get(1).unwrap().conj()).norm() > 1e-3);
        assert!((complex_basis(-1, c.omega(), o, t) - complex_basis(1, c.omega(), o, t).conj()).norm() > 1e-3);
        // ...but the two defects cancel term by term, so the sum is real
        let plus = cc.get(1).unwrap() * complex_basis(1, c.omega(), o, t);
        let minus = cc.get(-1).unwrap() * complex_basis(-1, c.omega(), o, t);
        assert!((plus - minus.conj()).norm() < 1e-15);
        let sum = synthesize_complex(&cc, &[t])[0];
        assert!(sum.im.abs() < 1e-12);
        assert!((sum.re - synthesize_ffs(&c, o, &[t])[0]).abs() < 1e-12);
    }

    #[test]
    fn hermitian_at_zero_order() {
        let c = RealCoefficients::new(2.0, 0.3, vec![0.5, -0.4, 0.1], vec![0.7, 0.2, -0.9]).unwrap();
        let cc = complex_coefficients(&c, FractionalOrder::ZERO);
        for n in 0..=3 {
            assert!((cc.get(n).unwrap() - cc.get(-n).unwrap().conj()).norm() < 1e-14);
        }
    }

    fn coeff_strategy() -> impl Strategy<Value = RealCoefficients> {
        (0usize..=8)
            .prop_flat_map(|n| {
                (
                    -1.0f64..1.0,
                    prop::collection::vec(-1.0f64..1.0, n),
                    prop::collection::vec(-1.0f64..1.0, n),
                )
            })
            .prop_map(|(a0, a, b)| RealCoefficients::new(1.7, a0, a, b).unwrap())
    }

    proptest! {
        #[test]
        fn complex_and_real_forms_agree(c in coeff_strategy(), idx in 0usize..5) {
            let o = ord([0.0, 0.5, 1.0, 1.5, 2.0][idx]);
            let grid = uniform_grid(0.0, c.period(), 128);
            let z = synthesize_complex(&complex_coefficients(&c, o), &grid);
            let real = synthesize_ffs(&c, o, &grid);
            for (zi, ri) in z.iter().zip(&real) {
                prop_assert!((zi.re - ri).abs() < 1e-12);
                prop_assert!(zi.im.abs() < 1e-12);
            }
        }
    }
}
