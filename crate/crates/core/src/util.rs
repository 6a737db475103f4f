//! Small numeric helpers shared across the crate.

/// Formats a float with nine significant digits, the fixed precision of every
/// numeric CSV artifact this crate writes.
pub fn fmt_g9(x: f64) -> String {
    format!("{x:.8e}")
}

/// Dot product with a fixed four-lane accumulation order. The order never
/// depends on thread count or call site, so results are bitwise reproducible.
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = [0.0f64; 4];
    let ca = a.chunks_exact(4);
    let cb = b.chunks_exact(4);
    let (ra, rb) = (ca.remainder(), cb.remainder());
    for (pa, pb) in ca.zip(cb) {
        acc[0] += pa[0] * pb[0];
        acc[1] += pa[1] * pb[1];
        acc[2] += pa[2] * pb[2];
        acc[3] += pa[3] * pb[3];
    }
    let mut sum = (acc[0] + acc[1]) + (acc[2] + acc[3]);
    for (x, y) in ra.iter().zip(rb) {
        sum += x * y;
    }
    sum
}

/// `acc[i] += scale * values[i]` over whole slices.
pub(crate) fn axpy(scale: f64, values: &[f64], acc: &mut [f64]) {
    debug_assert_eq!(values.len(), acc.len());
    for (a, &v) in acc.iter_mut().zip(values) {
        *a += scale * v;
    }
}

/// Index of the largest entry; ties go to the lowest index.
pub fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt_g9_has_nine_significant_digits() {
        assert_eq!(fmt_g9(0.9475), "9.47500000e-1");
        assert_eq!(fmt_g9(0.0), "0.00000000e0");
        assert_eq!(fmt_g9(-123.456789012), "-1.23456789e2");
    }

    #[test]
    fn dot_matches_naive() {
        let a: Vec<f64> = (0..11).map(|i| i as f64 * 0.5).collect();
        let b: Vec<f64> = (0..11).map(|i| 1.0 - i as f64 * 0.1).collect();
        let naive: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        assert!((dot(&a, &b) - naive).abs() < 1e-12);
    }

    #[test]
    fn argmax_breaks_ties_low() {
        assert_eq!(argmax(&[0.1, 0.7, 0.2]), 1);
        assert_eq!(argmax(&[0.5, 0.5]), 0);
        assert_eq!(argmax(&[1.0]), 0);
    }
}
