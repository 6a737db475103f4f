//! Global Radon projections as image descriptors.
//!
//! An image is projected along a small set of equi-spaced angles in
//! [0°, 180°). Each projection is the line integral of the image along
//! parallel rays; the stack of projections forms the sinogram, and the
//! flattened sinogram is the feature vector fed to the networks.
//!
//! Discretization is pixel-driven: every pixel's full intensity is split
//! between the two detector bins nearest its signed offset
//! `rho = (x - c)·cos(theta) + (y - c)·sin(theta)` (x = column, y = row,
//! origin at the image center `c = (side - 1) / 2`). Splitting by linear
//! interpolation on rho conserves total mass exactly.

use crate::error::Error;
use crate::util::fmt_g9;
use crate::Result;

/// A decoded image as it comes off disk: any size, any channel count,
/// interleaved samples. Values need not be normalized.
#[derive(Debug, Clone)]
pub struct RawImage {
    pub width: usize,
    pub height: usize,
    pub channels: usize,
    /// Row-major, channel-interleaved samples; `width * height * channels` long.
    pub data: Vec<f64>,
}

impl RawImage {
    pub fn new(width: usize, height: usize, channels: usize, data: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 || channels == 0 || data.is_empty() {
            return Err(Error::EmptyImage);
        }
        if data.len() != width * height * channels {
            return Err(Error::BadPixelCount {
                side: width,
                len: data.len(),
            });
        }
        Ok(Self {
            width,
            height,
            channels,
            data,
        })
    }

    /// Single-channel helper used by the IDX loader and tests.
    pub fn gray(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        Self::new(width, height, 1, data)
    }
}

/// A square, grayscale, min-max-normalized image: the canonical network
/// input before projection.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    side: usize,
    pixels: Vec<f64>,
}

impl Image {
    /// Wraps a pixel grid, enforcing the type invariants: square shape and
    /// finite values in [0, 1].
    pub fn new(side: usize, pixels: Vec<f64>) -> Result<Self> {
        if side == 0 || pixels.is_empty() {
            return Err(Error::EmptyImage);
        }
        if pixels.len() != side * side {
            return Err(Error::BadPixelCount {
                side,
                len: pixels.len(),
            });
        }
        if pixels.iter().any(|v| !v.is_finite() || *v < 0.0 || *v > 1.0) {
            return Err(Error::PixelOutOfRange);
        }
        Ok(Self { side, pixels })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    /// Pixel at (row, col).
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.pixels[row * self.side + col]
    }

    /// Sum of all pixel intensities.
    pub fn total_mass(&self) -> f64 {
        self.pixels.iter().sum()
    }
}

/// The set of projection angles: `{0, delta, 2·delta, ...}` strictly below 180°.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleSet {
    delta_degrees: f64,
    angles: Vec<f64>,
}

impl AngleSet {
    /// Builds the equi-spaced angle set for a step of `delta_degrees`.
    pub fn from_delta(delta_degrees: f64) -> Result<Self> {
        if !delta_degrees.is_finite() || delta_degrees <= 0.0 || delta_degrees > 180.0 {
            return Err(Error::BadAngleStep(delta_degrees));
        }
        let mut angles = Vec::new();
        let mut k = 0u32;
        loop {
            let theta = f64::from(k) * delta_degrees;
            if theta >= 180.0 {
                break;
            }
            angles.push(theta);
            k += 1;
        }
        Ok(Self {
            delta_degrees,
            angles,
        })
    }

    pub fn delta_degrees(&self) -> f64 {
        self.delta_degrees
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }
}

impl Default for AngleSet {
    /// 15° steps: twelve projections over [0°, 180°).
    fn default() -> Self {
        Self::from_delta(15.0).expect("15 degrees is a valid step")
    }
}

/// One Radon projection per angle; every row has the same bin count.
#[derive(Debug, Clone, PartialEq)]
pub struct Sinogram {
    pub angles: AngleSet,
    pub bins: usize,
    pub rows: Vec<Vec<f64>>,
}

/// Detector length for a `side`-pixel image: the zero-padded hypotenuse,
/// `ceil(side·sqrt(2))`, bumped by one when its parity differs from `side`
/// so the centered detector lands pixel offsets exactly on bin centers at
/// the axis-aligned angles.
pub fn projection_length(side: usize) -> usize {
    let l = (side as f64 * std::f64::consts::SQRT_2).ceil() as usize;
    if (l + side) % 2 == 0 {
        l
    } else {
        l + 1
    }
}

/// Unit direction of the projection normal, exact at the axis-aligned angles
/// so that 0°/90° projections reduce to column/row sums with no rounding.
fn direction(theta_degrees: f64) -> (f64, f64) {
    if theta_degrees == 0.0 {
        (1.0, 0.0)
    } else if theta_degrees == 90.0 {
        (0.0, 1.0)
    } else {
        let (sin, cos) = theta_degrees.to_radians().sin_cos();
        (cos, sin)
    }
}

/// Projects `image` along the rays at `theta_degrees`, returning one value
/// per detector bin. The result sums to the total image intensity.
pub fn radon_projection(image: &Image, theta_degrees: f64) -> Result<Vec<f64>> {
    if !theta_degrees.is_finite() || !(0.0..180.0).contains(&theta_degrees) {
        return Err(Error::AngleOutOfRange(theta_degrees));
    }
    Ok(project_unchecked(image, theta_degrees))
}

fn project_unchecked(image: &Image, theta_degrees: f64) -> Vec<f64> {
    let side = image.side();
    let len = projection_length(side);
    let (cos_t, sin_t) = direction(theta_degrees);
    let center = (side as f64 - 1.0) / 2.0;
    let detector_center = (len as f64 - 1.0) / 2.0;

    let mut bins = vec![0.0f64; len];
    for row in 0..side {
        let y_term = (row as f64 - center) * sin_t + detector_center;
        let row_pixels = &image.pixels()[row * side..(row + 1) * side];
        for (col, &value) in row_pixels.iter().enumerate() {
            let t = (col as f64 - center) * cos_t + y_term;
            let lo = t.floor();
            let frac = t - lo;
            let k = lo as usize;
            bins[k] += value * (1.0 - frac);
            if frac > 0.0 {
                bins[k + 1] += value * frac;
            }
        }
    }
    bins
}

/// Computes one projection row per angle, in angle order.
pub fn sinogram(image: &Image, angles: &AngleSet) -> Result<Sinogram> {
    if angles.is_empty() {
        return Err(Error::BadAngleStep(0.0));
    }
    let mut rows = Vec::with_capacity(angles.len());
    for &theta in angles.angles() {
        rows.push(radon_projection(image, theta)?);
    }
    Ok(Sinogram {
        angles: angles.clone(),
        bins: projection_length(image.side()),
        rows,
    })
}

/// Flattens a sinogram angle-major: row 0 first, then row 1, and so on.
pub fn feature_vector(s: &Sinogram) -> Vec<f64> {
    let mut out = Vec::with_capacity(s.rows.len() * s.bins);
    for row in &s.rows {
        out.extend_from_slice(row);
    }
    out
}

impl Sinogram {
    /// CSV rendering: a header row of detector bin indices, then one row of
    /// projection values per angle, in angle order.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = (0..self.bins).map(|k| k.to_string()).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| fmt_g9(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Binary 8-bit PGM: one raster row per angle, one column per detector
    /// bin, values rescaled linearly onto 0..=255. A constant sinogram maps
    /// to all zeros.
    pub fn to_pgm(&self) -> Vec<u8> {
        let width = self.bins;
        let height = self.rows.len();
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for row in &self.rows {
            for &v in row {
                min = min.min(v);
                max = max.max(v);
            }
        }
        let span = max - min;
        let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
        for row in &self.rows {
            for &v in row {
                let byte = if span > 0.0 {
                    ((v - min) / span * 255.0).round() as u8
                } else {
                    0
                };
                out.push(byte);
            }
        }
        out
    }
}

/// Grayscale, resize, and min-max-normalize a raw image into a network-ready
/// [`Image`]. A constant-intensity input maps to all zeros.
pub fn preprocess(raw: &RawImage, target_side: usize) -> Result<Image> {
    if raw.width == 0 || raw.height == 0 || raw.data.is_empty() {
        return Err(Error::EmptyImage);
    }
    if target_side < 2 {
        return Err(Error::BadTargetSide(target_side));
    }
    let gray = to_grayscale(raw);
    let resized = resize_bilinear(&gray, raw.width, raw.height, target_side);
    let normalized = min_max_normalize(resized);
    Image::new(target_side, normalized)
}

/// ITU-R BT.601 luminance weights for RGB inputs.
const LUMA: [f64; 3] = [0.299, 0.587, 0.114];

fn to_grayscale(raw: &RawImage) -> Vec<f64> {
    let n = raw.width * raw.height;
    match raw.channels {
        1 => raw.data.clone(),
        // Two channels is gray + alpha; alpha is ignored.
        2 => (0..n).map(|i| raw.data[i * 2]).collect(),
        c => (0..n)
            .map(|i| {
                let px = &raw.data[i * c..i * c + 3];
                px[0] * LUMA[0] + px[1] * LUMA[1] + px[2] * LUMA[2]
            })
            .collect(),
    }
}

/// Bilinear resampling on pixel centers. Identical sizes reproduce the input
/// exactly.
fn resize_bilinear(src: &[f64], src_w: usize, src_h: usize, target: usize) -> Vec<f64> {
    let scale_x = src_w as f64 / target as f64;
    let scale_y = src_h as f64 / target as f64;
    let mut out = Vec::with_capacity(target * target);
    for row in 0..target {
        let sy = ((row as f64 + 0.5) * scale_y - 0.5).clamp(0.0, (src_h - 1) as f64);
        let y0 = sy.floor() as usize;
        let y1 = (y0 + 1).min(src_h - 1);
        let fy = sy - y0 as f64;
        for col in 0..target {
            let sx = ((col as f64 + 0.5) * scale_x - 0.5).clamp(0.0, (src_w - 1) as f64);
            let x0 = sx.floor() as usize;
            let x1 = (x0 + 1).min(src_w - 1);
            let fx = sx - x0 as f64;
            let top = src[y0 * src_w + x0] * (1.0 - fx) + src[y0 * src_w + x1] * fx;
            let bottom = src[y1 * src_w + x0] * (1.0 - fx) + src[y1 * src_w + x1] * fx;
            out.push(top * (1.0 - fy) + bottom * fy);
        }
    }
    out
}

fn min_max_normalize(mut values: Vec<f64>) -> Vec<f64> {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for &v in &values {
        min = min.min(v);
        max = max.max(v);
    }
    let span = max - min;
    if span > 0.0 {
        for v in &mut values {
            *v = ((*v - min) / span).clamp(0.0, 1.0);
        }
    } else {
        values.iter_mut().for_each(|v| *v = 0.0);
    }
    values
}
