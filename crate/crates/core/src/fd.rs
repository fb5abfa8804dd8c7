//! Five-point central difference stencils.

use std::ops::{Add, Mul, Sub};

pub fn first<T, F>(f: F, s: f64, h: f64) -> T
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
    F: Fn(f64) -> T,
{
    let (p1, m1, p2, m2) = (f(s + h), f(s - h), f(s + 2.0 * h), f(s - 2.0 * h));
    ((p1 - m1) * 8.0 - (p2 - m2)) * (1.0 / (12.0 * h))
}

pub fn second<T, F>(f: F, s: f64, h: f64) -> T
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
    F: Fn(f64) -> T,
{
    let (p1, m1, p2, m2, c) = (f(s + h), f(s - h), f(s + 2.0 * h), f(s - 2.0 * h), f(s));
    ((p1 + m1) * 16.0 - (p2 + m2) - c * 30.0) * (1.0 / (12.0 * h * h))
}

pub fn third<T, F>(f: F, s: f64, h: f64) -> T
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
    F: Fn(f64) -> T,
{
    let (p1, m1, p2, m2) = (f(s + h), f(s - h), f(s + 2.0 * h), f(s - 2.0 * h));
    ((p2 - m2) - (p1 - m1) * 2.0) * (1.0 / (2.0 * h * h * h))
}
