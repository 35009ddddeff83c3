//! Slice-level amplitude update loops.
//!
//! Uncontrolled kernels walk the state in blocks of `2 * 2^t` amplitudes: the low half of a
//! block is the zero side of `2^t` consecutive pairs and the high half the one side. Inner loops
//! run over contiguous slices with no index arithmetic so they can be vectorized.
//!
//! Controlled kernels take an explicit pair stream and update amplitudes by index.

use crate::gates::{Coefficients, Gate};
use crate::pairs;
use crate::precision::Real;

type Block<'a, F> = (&'a mut [F], &'a mut [F], &'a mut [F], &'a mut [F]);

/// Visit `(z_re, z_im, o_re, o_im)` slices for every prefix.
#[inline(always)]
fn for_each_block<F: Real>(
    reals: &mut [F],
    imags: &mut [F],
    target: usize,
    mut f: impl FnMut(Block<'_, F>),
) {
    let dist = 1 << target;
    for (re, im) in reals
        .chunks_exact_mut(2 * dist)
        .zip(imags.chunks_exact_mut(2 * dist))
    {
        let (zr, or) = re.split_at_mut(dist);
        let (zi, oi) = im.split_at_mut(dist);
        f((zr, zi, or, oi));
    }
}

/// Visit only the one-side `(o_re, o_im)` slices.
#[inline(always)]
fn for_each_one_side<F: Real>(
    reals: &mut [F],
    imags: &mut [F],
    target: usize,
    mut f: impl FnMut(&mut [F], &mut [F]),
) {
    let dist = 1 << target;
    for (re, im) in reals
        .chunks_exact_mut(2 * dist)
        .zip(imags.chunks_exact_mut(2 * dist))
    {
        f(&mut re[dist..], &mut im[dist..]);
    }
}

pub(crate) fn x<F: Real>(reals: &mut [F], imags: &mut [F], target: usize) {
    if target == 0 {
        for (re, im) in reals.chunks_exact_mut(2).zip(imags.chunks_exact_mut(2)) {
            re.swap(0, 1);
            im.swap(0, 1);
        }
        return;
    }
    for_each_block(reals, imags, target, |(zr, zi, or, oi)| {
        zr.swap_with_slice(or);
        zi.swap_with_slice(oi);
    });
}

pub(crate) fn y<F: Real>(reals: &mut [F], imags: &mut [F], target: usize) {
    // (a + ib, c + id) -> (d - ic, -b + ia)
    for_each_block(reals, imags, target, |(zr, zi, or, oi)| {
        for (((a, b), c), d) in zr
            .iter_mut()
            .zip(zi.iter_mut())
            .zip(or.iter_mut())
            .zip(oi.iter_mut())
        {
            let (za, zb, oc, od) = (*a, *b, *c, *d);
            *a = od;
            *b = -oc;
            *c = -zb;
            *d = za;
        }
    });
}

pub(crate) fn z<F: Real>(reals: &mut [F], imags: &mut [F], target: usize) {
    for_each_one_side(reals, imags, target, |or, oi| {
        for c in or.iter_mut() {
            *c = -*c;
        }
        for d in oi.iter_mut() {
            *d = -*d;
        }
    });
}

pub(crate) fn h<F: Real>(reals: &mut [F], imags: &mut [F], target: usize) {
    let s = F::from_f64(std::f64::consts::FRAC_1_SQRT_2);
    if target == 0 {
        for (re, im) in reals.chunks_exact_mut(2).zip(imags.chunks_exact_mut(2)) {
            let (a1, c1) = (re[0] * s, re[1] * s);
            let (b1, d1) = (im[0] * s, im[1] * s);
            re[0] = a1 + c1;
            re[1] = a1 - c1;
            im[0] = b1 + d1;
            im[1] = b1 - d1;
        }
        return;
    }
    for_each_block(reals, imags, target, |(zr, zi, or, oi)| {
        for (((a, b), c), d) in zr
            .iter_mut()
            .zip(zi.iter_mut())
            .zip(or.iter_mut())
            .zip(oi.iter_mut())
        {
            let (a1, b1, c1, d1) = (*a * s, *b * s, *c * s, *d * s);
            *a = a1 + c1;
            *b = b1 + d1;
            *c = a1 - c1;
            *d = b1 - d1;
        }
    });
}

pub(crate) fn phase<F: Real>(reals: &mut [F], imags: &mut [F], target: usize, angle: f64) {
    let (cos, sin) = (F::from_f64(angle.cos()), F::from_f64(angle.sin()));
    for_each_one_side(reals, imags, target, |or, oi| {
        for (c, d) in or.iter_mut().zip(oi.iter_mut()) {
            let (re, im) = (*c, *d);
            *c = re * cos - im * sin;
            *d = re * sin + im * cos;
        }
    });
}

/// Multiply a run of amplitudes by `cos + i sin`.
#[inline(always)]
fn rotate_run<F: Real>(re: &mut [F], im: &mut [F], cos: F, sin: F) {
    for (a, b) in re.iter_mut().zip(im.iter_mut()) {
        let (x, y) = (*a, *b);
        *a = x * cos - y * sin;
        *b = x * sin + y * cos;
    }
}

pub(crate) fn rz<F: Real>(reals: &mut [F], imags: &mut [F], n: usize, target: usize, angle: f64) {
    let half = angle / 2.0;
    let (cos, sin) = (F::from_f64(half.cos()), F::from_f64(half.sin()));
    // Target validated by the caller.
    let chunks = pairs::group_traverse(n, target).expect("target checked against n");
    for chunk in chunks {
        let zero = chunk.zero_start..chunk.zero_start + chunk.len;
        let one = chunk.one_start..chunk.one_start + chunk.len;
        rotate_run(&mut reals[zero.clone()], &mut imags[zero], cos, -sin);
        rotate_run(&mut reals[one.clone()], &mut imags[one], cos, sin);
    }
}

/// Full 2x2 complex matrix-vector product on every pair.
pub(crate) fn matrix<F: Real>(
    reals: &mut [F],
    imags: &mut [F],
    target: usize,
    m: &Coefficients<F>,
) {
    let [(g00r, g00i), (g01r, g01i), (g10r, g10i), (g11r, g11i)] = *m;
    #[inline(always)]
    #[allow(clippy::too_many_arguments)]
    fn product<F: Real>(g: [F; 8], a: F, b: F, c: F, d: F) -> (F, F, F, F) {
        let [g00r, g00i, g01r, g01i, g10r, g10i, g11r, g11i] = g;
        let zr = g00r * a - g00i * b + g01r * c - g01i * d;
        let zi = g00r * b + g00i * a + g01r * d + g01i * c;
        let or = g10r * a - g10i * b + g11r * c - g11i * d;
        let oi = g10r * b + g10i * a + g11r * d + g11i * c;
        (zr, zi, or, oi)
    }
    let g = [g00r, g00i, g01r, g01i, g10r, g10i, g11r, g11i];
    if target == 0 {
        for (re, im) in reals.chunks_exact_mut(2).zip(imags.chunks_exact_mut(2)) {
            let (zr, zi, or, oi) = product(g, re[0], im[0], re[1], im[1]);
            re[0] = zr;
            im[0] = zi;
            re[1] = or;
            im[1] = oi;
        }
        return;
    }
    for_each_block(reals, imags, target, |(zr, zi, or, oi)| {
        for (((a, b), c), d) in zr
            .iter_mut()
            .zip(zi.iter_mut())
            .zip(or.iter_mut())
            .zip(oi.iter_mut())
        {
            let (nzr, nzi, nor, noi) = product(g, *a, *b, *c, *d);
            *a = nzr;
            *b = nzi;
            *c = nor;
            *d = noi;
        }
    });
}

/// Apply `gate` to each `(z, o)` in `pairs`, using the same per-variant arithmetic as the
/// block kernels.
pub(crate) fn on_pairs<F: Real>(
    gate: Gate,
    reals: &mut [F],
    imags: &mut [F],
    pairs: impl Iterator<Item = (usize, usize)>,
) {
    match gate {
        Gate::X => {
            for (z, o) in pairs {
                reals.swap(z, o);
                imags.swap(z, o);
            }
        }
        Gate::Y => {
            for (z, o) in pairs {
                let (a, b, c, d) = (reals[z], imags[z], reals[o], imags[o]);
                reals[z] = d;
                imags[z] = -c;
                reals[o] = -b;
                imags[o] = a;
            }
        }
        Gate::Z => {
            for (_, o) in pairs {
                reals[o] = -reals[o];
                imags[o] = -imags[o];
            }
        }
        Gate::H => {
            let s = F::from_f64(std::f64::consts::FRAC_1_SQRT_2);
            for (z, o) in pairs {
                let (a1, b1) = (reals[z] * s, imags[z] * s);
                let (c1, d1) = (reals[o] * s, imags[o] * s);
                reals[z] = a1 + c1;
                imags[z] = b1 + d1;
                reals[o] = a1 - c1;
                imags[o] = b1 - d1;
            }
        }
        Gate::P(angle) => {
            let (cos, sin) = (F::from_f64(angle.cos()), F::from_f64(angle.sin()));
            for (_, o) in pairs {
                let (c, d) = (reals[o], imags[o]);
                reals[o] = c * cos - d * sin;
                imags[o] = c * sin + d * cos;
            }
        }
        Gate::Rz(angle) => {
            let half = angle / 2.0;
            let (cos, sin) = (F::from_f64(half.cos()), F::from_f64(half.sin()));
            for (z, o) in pairs {
                let (a, b) = (reals[z], imags[z]);
                reals[z] = a * cos + b * sin;
                imags[z] = b * cos - a * sin;
                let (c, d) = (reals[o], imags[o]);
                reals[o] = c * cos - d * sin;
                imags[o] = c * sin + d * cos;
            }
        }
        Gate::Rx(_) | Gate::Ry(_) | Gate::U(..) => {
            matrix_on_pairs(reals, imags, pairs, &gate.coefficients())
        }
    }
}

/// Full matrix-vector product over an explicit pair stream.
pub(crate) fn matrix_on_pairs<F: Real>(
    reals: &mut [F],
    imags: &mut [F],
    pairs: impl Iterator<Item = (usize, usize)>,
    m: &Coefficients<F>,
) {
    let [(g00r, g00i), (g01r, g01i), (g10r, g10i), (g11r, g11i)] = *m;
    for (z, o) in pairs {
        let (a, b, c, d) = (reals[z], imags[z], reals[o], imags[o]);
        reals[z] = g00r * a - g00i * b + g01r * c - g01i * d;
        imags[z] = g00r * b + g00i * a + g01r * d + g01i * c;
        reals[o] = g10r * a - g10i * b + g11r * c - g11i * d;
        imags[o] = g10r * b + g10i * a + g11r * d + g11i * c;
    }
}
