//! Recursive filters: Butterworth bandpass cascades and a tunable notch,
//! applied zero-phase (forward pass, then time-reversed pass).
//!
//! Coefficients are designed in `f64` via the bilinear transform and cast
//! to the pipeline scalar; each cascade stage is a second-order section.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// One second-order section, denominator normalized to `a0 = 1`.
#[derive(Debug, Clone, Copy)]
pub struct Biquad<T: Scalar> {
    pub b0: T,
    pub b1: T,
    pub b2: T,
    pub a1: T,
    pub a2: T,
}

impl Biquad<f64> {
    fn cast<T: Scalar>(self) -> Biquad<T> {
        Biquad {
            b0: T::from_f64c(self.b0),
            b1: T::from_f64c(self.b1),
            b2: T::from_f64c(self.b2),
            a1: T::from_f64c(self.a1),
            a2: T::from_f64c(self.a2),
        }
    }

    /// Magnitude response at frequency `f_hz`.
    fn gain_at(&self, f_hz: f64, fs_hz: f64) -> f64 {
        let w = 2.0 * std::f64::consts::PI * f_hz / fs_hz;
        let z1 = Complex64::from_polar(1.0, -w);
        let z2 = z1 * z1;
        let num = Complex64::new(self.b0, 0.0) + z1 * self.b1 + z2 * self.b2;
        let den = Complex64::new(1.0, 0.0) + z1 * self.a1 + z2 * self.a2;
        (num / den).norm()
    }
}

/// Butterworth bandpass of the given (even) order as `order/2` cascaded
/// second-order sections, unity gain at the geometric center frequency.
pub fn design_bandpass<T: Scalar>(
    lo_hz: f64,
    hi_hz: f64,
    order: usize,
    fs_hz: f64,
) -> Result<Vec<Biquad<T>>> {
    if !(lo_hz > 0.0 && lo_hz < hi_hz && hi_hz < fs_hz / 2.0) {
        return Err(Error::InvalidBand(format!(
            "need 0 < lo < hi < fs/2, got lo={lo_hz}, hi={hi_hz}, fs={fs_hz}"
        )));
    }
    if order < 2 || order % 2 != 0 {
        return Err(Error::InvalidBand(format!(
            "bandpass order must be even and >= 2, got {order}"
        )));
    }
    let n_proto = order / 2;

    // Prewarped analog band edges.
    let warp = |f: f64| 2.0 * fs_hz * (std::f64::consts::PI * f / fs_hz).tan();
    let wl = warp(lo_hz);
    let wh = warp(hi_hz);
    let w0sq = wl * wh;
    let bw = wh - wl;

    // Lowpass prototype poles on the left unit semicircle.
    let proto: Vec<Complex64> = (0..n_proto)
        .map(|k| {
            let theta =
                std::f64::consts::PI * (2.0 * k as f64 + n_proto as f64 + 1.0) / (2.0 * n_proto as f64);
            Complex64::from_polar(1.0, theta)
        })
        .collect();

    // Lowpass -> bandpass: each prototype pole p yields the two roots of
    // s^2 - bw*p*s + w0^2 = 0.
    let bilinear = |s: Complex64| (2.0 * fs_hz + s) / (2.0 * fs_hz - s);
    let mut sections: Vec<Biquad<f64>> = Vec::with_capacity(n_proto);
    for p in proto {
        if p.im.abs() < 1e-12 {
            // Real prototype pole (odd prototype order): its two bandpass
            // poles are real or a conjugate pair; either way they share
            // one section.
            let half = 0.5 * bw * p;
            let disc = (half * half - w0sq).sqrt();
            let z1 = bilinear(half + disc);
            let z2 = bilinear(half - disc);
            sections.push(denominator_section(z1, z2));
        } else if p.im > 0.0 {
            // Complex pair handled once; each bandpass root pairs with its
            // conjugate (arising from the conjugate prototype pole).
            let half = 0.5 * bw * p;
            let disc = (half * half - w0sq).sqrt();
            for s in [half + disc, half - disc] {
                let z = bilinear(s);
                sections.push(denominator_section(z, z.conj()));
            }
        }
    }
    debug_assert_eq!(sections.len(), n_proto);

    // Spread the normalization across sections so no stage carries an
    // extreme gain.
    let f_center = (lo_hz * hi_hz).sqrt();
    let raw_gain: f64 = sections.iter().map(|s| s.gain_at(f_center, fs_hz)).product();
    let per_section = raw_gain.powf(-1.0 / sections.len() as f64);
    for s in &mut sections {
        s.b0 *= per_section;
        s.b1 *= per_section;
        s.b2 *= per_section;
    }

    Ok(sections.into_iter().map(Biquad::cast).collect())
}

/// Section with zeros at z = +1 and z = -1 and the given pole pair.
fn denominator_section(z1: Complex64, z2: Complex64) -> Biquad<f64> {
    let a1 = -(z1 + z2).re;
    let a2 = (z1 * z2).re;
    Biquad {
        b0: 1.0,
        b1: 0.0,
        b2: -1.0,
        a1,
        a2,
    }
}

/// Second-order notch at `f0_hz` with quality `q = f0/bandwidth`; an exact
/// zero sits on the unit circle at the notch frequency and the gain at DC
/// and Nyquist is one.
pub fn design_notch<T: Scalar>(f0_hz: f64, bandwidth_hz: f64, fs_hz: f64) -> Result<Vec<Biquad<T>>> {
    if !(f0_hz > 0.0 && f0_hz < fs_hz / 2.0) {
        return Err(Error::InvalidBand(format!(
            "notch frequency must satisfy 0 < f0 < fs/2, got f0={f0_hz}, fs={fs_hz}"
        )));
    }
    if bandwidth_hz <= 0.0 {
        return Err(Error::InvalidBand(format!(
            "notch bandwidth must be positive, got {bandwidth_hz}"
        )));
    }
    let q = f0_hz / bandwidth_hz;
    let w0 = 2.0 * std::f64::consts::PI * f0_hz / fs_hz;
    let alpha = w0.sin() / (2.0 * q);
    let a0 = 1.0 + alpha;
    let s = Biquad {
        b0: 1.0 / a0,
        b1: -2.0 * w0.cos() / a0,
        b2: 1.0 / a0,
        a1: -2.0 * w0.cos() / a0,
        a2: (1.0 - alpha) / a0,
    };
    Ok(vec![s.cast()])
}

/// Single causal pass of a section cascade (direct form II transposed).
///
/// State starts at the DC steady state for the first sample, so constant
/// offsets pass through without a startup transient.
pub fn run_cascade<T: Scalar>(sections: &[Biquad<T>], x: &mut [T]) {
    for s in sections {
        let x0 = if x.is_empty() { T::zero() } else { x[0] };
        let g = (s.b0 + s.b1 + s.b2) / (T::one() + s.a1 + s.a2);
        let mut s1 = (g - s.b0) * x0;
        let mut s2 = (s.b2 - s.a2 * g) * x0;
        for v in x.iter_mut() {
            let xin = *v;
            let y = s.b0 * xin + s1;
            s1 = s.b1 * xin - s.a1 * y + s2;
            s2 = s.b2 * xin - s.a2 * y;
            *v = y;
        }
    }
}

/// One forward-backward pass: reflect-pad by `3 * order` samples, run the
/// cascade, reverse, run again, reverse, trim the padding.
fn zero_phase_pass<T: Scalar>(sections: &[Biquad<T>], x: &[T]) -> Vec<T> {
    let n = x.len();
    if n < 2 {
        return x.to_vec();
    }
    let order = 2 * sections.len();
    let pad = (3 * order).min(n - 1);

    let mut buf = Vec::with_capacity(n + 2 * pad);
    for i in (1..=pad).rev() {
        buf.push(x[i]);
    }
    buf.extend_from_slice(x);
    for i in 0..pad {
        buf.push(x[n - 2 - i]);
    }

    run_cascade(sections, &mut buf);
    buf.reverse();
    run_cascade(sections, &mut buf);
    buf.reverse();

    buf[pad..pad + n].to_vec()
}

/// Zero-phase filtering.
///
/// The forward-backward pass is evaluated in both time orientations and
/// averaged, which leaves the steady-state magnitude-squared response
/// untouched, symmetrizes the edge transients, and makes the operator
/// commute with time reversal.
pub fn filtfilt<T: Scalar>(sections: &[Biquad<T>], x: &[T]) -> Vec<T> {
    let fwd = zero_phase_pass(sections, x);
    let mut xr = x.to_vec();
    xr.reverse();
    let mut bwd = zero_phase_pass(sections, &xr);
    bwd.reverse();
    let half = T::from_f64c(0.5);
    fwd.into_iter()
        .zip(bwd)
        .map(|(a, b)| half * (a + b))
        .collect()
}
