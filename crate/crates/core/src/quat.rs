//! Quaternions over a real scalar, with the similarity-class operations the
//! eigenvalue machinery is built on.
//!
//! Multiplication follows the Hamilton convention `ij = k`, `jk = i`,
//! `ki = j`. Two quaternions are similar (`p = r q r^-1` for some nonzero
//! `r`) exactly when they share real part and norm, and every similarity
//! class has a canonical complex representative `t + s*i` with `s >= 0`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A quaternion `w + x*i + y*j + z*k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> Quaternion<T> {
    #[inline]
    pub fn new(w: T, x: T, y: T, z: T) -> Self {
        Quaternion { w, x, y, z }
    }

    #[inline]
    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    #[inline]
    pub fn one() -> Self {
        Self::from_real(T::one())
    }

    #[inline]
    pub fn i() -> Self {
        Self::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    #[inline]
    pub fn j() -> Self {
        Self::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    #[inline]
    pub fn k() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    #[inline]
    pub fn from_real(w: T) -> Self {
        Self::new(w, T::zero(), T::zero(), T::zero())
    }

    /// Embeds `a + b*i` as a quaternion.
    #[inline]
    pub fn from_complex(c: Complex<T>) -> Self {
        Self::new(c.re, c.im, T::zero(), T::zero())
    }

    /// Real part.
    #[inline]
    pub fn re(&self) -> T {
        self.w
    }

    /// The imaginary (pure) part `x*i + y*j + z*k`.
    #[inline]
    pub fn pure_part(&self) -> Self {
        Self::new(T::zero(), self.x, self.y, self.z)
    }

    /// Norm of the imaginary part.
    #[inline]
    pub fn pure_norm(&self) -> T {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    #[inline]
    pub fn conjugate(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    #[inline]
    pub fn norm_sqr(&self) -> T {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    #[inline]
    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    /// Euclidean inner product of the two coefficient 4-vectors,
    /// equivalently `Re(self * other.conjugate())`.
    #[inline]
    pub fn dot(&self, other: &Self) -> T {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    #[inline]
    pub fn scale(&self, s: T) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.w == T::zero() && self.x == T::zero() && self.y == T::zero() && self.z == T::zero()
    }

    /// Multiplicative inverse `conj(q) / |q|^2`.
    ///
    /// Exact zero is the only rejected input; near-zero quaternions invert
    /// to large results rather than erroring.
    pub fn inverse(&self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == T::zero() {
            return Err(Error::ZeroQuaternion);
        }
        Ok(self.conjugate().scale(T::one() / n2))
    }

    /// Whether `self` and `other` are similar, i.e. conjugate to each other:
    /// same real part and same norm within `tol` (absolute on each).
    pub fn is_similar(&self, other: &Self, tol: T) -> bool {
        (self.w - other.w).abs() <= tol && (self.norm() - other.norm()).abs() <= tol
    }

    /// The canonical complex representative `t + s*i`, `s >= 0`, of the
    /// similarity class of `self`.
    ///
    /// The imaginary part is the norm of the pure part, so it is exactly
    /// zero for real quaternions (no cancellation).
    pub fn complex_representative(&self) -> Complex<T> {
        Complex::new(self.w, self.pure_norm())
    }

    /// Conjugation `r * self * r^-1`; errors on `r = 0`.
    pub fn conjugate_by(&self, r: &Self) -> Result<Self> {
        let rinv = r.inverse()?;
        Ok(*r * *self * rinv)
    }

    /// Complex pair `(u, v)` with `self = u + j*v`.
    ///
    /// Writing `q = w + x*i + y*j + z*k` and using `j*c = conj(c)*j` for
    /// complex `c`, the pair is `u = w + x*i`, `v = y - z*i` (note the sign:
    /// `j*(y - z*i) = y*j + z*k` under `ij = k`).
    #[inline]
    pub fn complex_pair(&self) -> (Complex<T>, Complex<T>) {
        (
            Complex::new(self.w, self.x),
            Complex::new(self.y, -self.z),
        )
    }

    /// Inverse of [`complex_pair`](Self::complex_pair): `u + j*v`.
    #[inline]
    pub fn from_complex_pair(u: Complex<T>, v: Complex<T>) -> Self {
        Self::new(u.re, u.im, v.re, -v.im)
    }

    /// Distance `|self - other|`.
    #[inline]
    pub fn dist(&self, other: &Self) -> T {
        (*self - *other).norm()
    }
}

impl<T: Scalar> Add for Quaternion<T> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl<T: Scalar> Sub for Quaternion<T> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl<T: Scalar> Neg for Quaternion<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product.
impl<T: Scalar> Mul for Quaternion<T> {
    type Output = Self;
    #[inline]
    fn mul(self, r: Self) -> Self {
        Self::new(
            self.w * r.w - self.x * r.x - self.y * r.y - self.z * r.z,
            self.w * r.x + self.x * r.w + self.y * r.z - self.z * r.y,
            self.w * r.y - self.x * r.z + self.y * r.w + self.z * r.x,
            self.w * r.z + self.x * r.y - self.y * r.x + self.z * r.w,
        )
    }
}

/// Right multiplication by a real scalar (reals are central, so there is no
/// left/right distinction).
impl<T: Scalar> Mul<T> for Quaternion<T> {
    type Output = Self;
    #[inline]
    fn mul(self, s: T) -> Self {
        self.scale(s)
    }
}

impl<T: Scalar> Div<T> for Quaternion<T> {
    type Output = Self;
    #[inline]
    fn div(self, s: T) -> Self {
        self.scale(T::one() / s)
    }
}

// Text format

/// Renders in the `a+bi+cj+dk` form with zero terms omitted: `1-2k`, `i`,
/// `-j+0.5k`, `0`. Coefficients print with the scalar's shortest
/// round-trip formatting, so `parse(format(q)) == q`.
impl<T: Scalar> fmt::Display for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps = [(self.w, ""), (self.x, "i"), (self.y, "j"), (self.z, "k")];
        let mut wrote = false;
        for (val, unit) in comps {
            if val == T::zero() {
                continue;
            }
            if wrote {
                write!(f, "{}", if val < T::zero() { "-" } else { "+" })?;
            } else if val < T::zero() {
                write!(f, "-")?;
            }
            let mag = val.abs();
            if unit.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == T::one() {
                write!(f, "{unit}")?;
            } else {
                write!(f, "{mag}{unit}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<T: Scalar> FromStr for Quaternion<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_quaternion(s)
    }
}

/// Splits a literal like `1.5-2i+3e-2j-k` into signed terms and accumulates
/// per-component. `+`/`-` inside an exponent (directly after `e`/`E`) do not
/// start a new term.
fn parse_quaternion<T: Scalar>(s: &str) -> Result<Quaternion<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty quaternion literal".into()));
    }
    if s.chars().any(char::is_whitespace) {
        return Err(Error::Parse(format!(
            "quaternion literal {s:?} contains whitespace"
        )));
    }

    let bytes = s.as_bytes();
    let mut q = Quaternion::zero();
    let mut start = 0usize;
    let mut idx = 1usize; // a sign at position 0 belongs to the first term
    loop {
        let at_end = idx >= bytes.len();
        let splits = !at_end
            && (bytes[idx] == b'+' || bytes[idx] == b'-')
            && !matches!(bytes[idx - 1], b'e' | b'E');
        if at_end || splits {
            parse_term(&s[start..idx.min(bytes.len())], &mut q)?;
            if at_end {
                break;
            }
            start = idx;
            idx += 2; // skip the sign so `1+-2i` fails in the term parser
        } else {
            idx += 1;
        }
    }
    Ok(q)
}

fn parse_term<T: Scalar>(term: &str, q: &mut Quaternion<T>) -> Result<()> {
    let bad = || Error::Parse(format!("invalid quaternion term {term:?}"));
    if term.is_empty() {
        return Err(bad());
    }
    let (coef_str, unit) = match term.as_bytes()[term.len() - 1] {
        b'i' => (&term[..term.len() - 1], 1usize),
        b'j' => (&term[..term.len() - 1], 2),
        b'k' => (&term[..term.len() - 1], 3),
        _ => (term, 0),
    };
    let coef: f64 = match coef_str {
        "" | "+" => 1.0,
        "-" => -1.0,
        _ => coef_str.parse().map_err(|_| bad())?,
    };
    if unit == 0 && matches!(coef_str, "" | "+" | "-") {
        return Err(bad());
    }
    let coef = T::from_f64(coef);
    match unit {
        0 => q.w = q.w + coef,
        1 => q.x = q.x + coef,
        2 => q.y = q.y + coef,
        _ => q.z = q.z + coef,
    }
    Ok(())
}

// Serde: a quaternion is the 4-tuple [w, x, y, z]

impl<T: Scalar + Serialize> Serialize for Quaternion<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.w, self.x, self.y, self.z].serialize(serializer)
    }
}

impl<'de, T: Scalar + Deserialize<'de>> Deserialize<'de> for Quaternion<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<T>::deserialize(deserializer)?;
        if v.len() != 4 {
            return Err(D::Error::custom(format!(
                "quaternion entry needs 4 components, got {}",
                v.len()
            )));
        }
        Ok(Quaternion::new(v[0], v[1], v[2], v[3]))
    }
}

/// Unit pure quaternions at 16 deterministic directions: the axes
/// `+/-i, +/-j, +/-k` plus ten Fibonacci-lattice points on the unit
/// 2-sphere of pure quaternions. Used wherever an infinite family of
/// eigenvalues has to be probed reproducibly.
pub fn pure_unit_probes<T: Scalar>() -> Vec<Quaternion<T>> {
    let mut out = vec![
        Quaternion::i(),
        -Quaternion::i(),
        Quaternion::j(),
        -Quaternion::j(),
        Quaternion::k(),
        -Quaternion::k(),
    ];
    let golden = std::f64::consts::PI * (3.0 - 5.0f64.sqrt());
    for m in 0..10 {
        let zc = 1.0 - 2.0 * (m as f64 + 0.5) / 10.0;
        let r = (1.0 - zc * zc).sqrt();
        let phi = golden * m as f64;
        out.push(Quaternion::new(
            T::zero(),
            T::from_f64(r * phi.cos()),
            T::from_f64(r * phi.sin()),
            T::from_f64(zc),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type Q = Quaternion<f64>;

    /// Independent multiplication oracle: bilinear extension of the group
    /// table on basis units, kept free of the component formulas in `Mul`.
    fn table_mul(p: Q, q: Q) -> Q {
        // table[a][b] = (sign, unit) with unit in {0:1, 1:i, 2:j, 3:k}
        const TABLE: [[(f64, usize); 4]; 4] = [
            [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
            [(1.0, 1), (-1.0, 0), (1.0, 3), (-1.0, 2)],
            [(1.0, 2), (-1.0, 3), (-1.0, 0), (1.0, 1)],
            [(1.0, 3), (1.0, 2), (-1.0, 1), (-1.0, 0)],
        ];
        let pc = [p.w, p.x, p.y, p.z];
        let qc = [q.w, q.x, q.y, q.z];
        let mut out = [0.0; 4];
        for a in 0..4 {
            for b in 0..4 {
                let (sign, unit) = TABLE[a][b];
                out[unit] += sign * pc[a] * qc[b];
            }
        }
        Q::new(out[0], out[1], out[2], out[3])
    }

    fn arb_quat() -> impl Strategy<Value = Q> {
        let c = -1e3..1e3f64;
        (c.clone(), c.clone(), c.clone(), c).prop_map(|(w, x, y, z)| Q::new(w, x, y, z))
    }

    #[test]
    fn unit_table() {
        let (i, j, k) = (Q::i(), Q::j(), Q::k());
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!(j * i, -k);
        assert_eq!(i * i, -Q::one());
        assert_eq!(j * j, -Q::one());
        assert_eq!(k * k, -Q::one());
        assert_eq!(i * j * k, -Q::one());
    }

    #[test]
    fn product_example() {
        let p = Q::one() + Q::i();
        let q = Q::one() + Q::j();
        assert_eq!(p * q, Q::new(1.0, 1.0, 1.0, 1.0));
        // and reversed order differs in the k component only
        assert_eq!(q * p, Q::new(1.0, 1.0, 1.0, -1.0));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Q::one().inverse().unwrap(), Q::one());
        assert_eq!(Q::j().inverse().unwrap(), -Q::j());
        let q = Q::new(1.0, 1.0, 1.0, 1.0);
        assert_eq!(q.inverse().unwrap(), Q::new(0.25, -0.25, -0.25, -0.25));
        assert_eq!(Q::zero().inverse(), Err(Error::ZeroQuaternion));
    }

    #[test]
    fn similarity_examples() {
        let tol = 1e-12;
        assert!(Q::i().is_similar(&Q::j(), tol));
        let z = Q::new(1.0, 2.0, 0.0, 0.0);
        assert!(z.is_similar(&z.conjugate(), tol));
        assert!(!Q::new(1.0, 1.0, 0.0, 0.0).is_similar(&z, tol));
    }

    #[test]
    fn representative_examples() {
        assert_eq!(Q::from_real(3.0).complex_representative(), Complex::new(3.0, 0.0));
        assert_eq!(Q::j().complex_representative(), Complex::new(0.0, 1.0));
        let q = Q::new(1.0, 1.0, 1.0, 1.0);
        let rep = q.complex_representative();
        assert_eq!(rep.re, 1.0);
        assert!((rep.im - 3.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn conjugate_by_examples() {
        let q = Q::new(0.5, -1.5, 2.0, 0.25);
        assert_eq!(q.conjugate_by(&Q::one()).unwrap(), q);
        // j i j^-1 = -i
        assert_eq!(Q::i().conjugate_by(&Q::j()).unwrap(), -Q::i());
        assert_eq!(q.conjugate_by(&Q::zero()), Err(Error::ZeroQuaternion));
    }

    #[test]
    fn complex_pair_round_trip() {
        let q = Q::new(1.0, -2.0, 3.0, -4.0);
        let (u, v) = q.complex_pair();
        assert_eq!(u, Complex::new(1.0, -2.0));
        assert_eq!(v, Complex::new(3.0, 4.0));
        assert_eq!(Q::from_complex_pair(u, v), q);
        // j * v reassembles the j,k part: j*(y - z*i) = y*j + z*k
        let jv = Q::j() * Q::from_complex(v);
        assert_eq!(jv, Q::new(0.0, 0.0, 3.0, -4.0));
    }

    /// The only unit pures commuting with a given unit pure `w` are `+/-w`:
    /// the kernel of `x -> w*x - x*w` on pures is the line through `w`, and
    /// a grid sweep of the unit 2-sphere finds no other near-commuting
    /// direction.
    #[test]
    fn commuting_pures_are_parallel() {
        let w = Q::new(0.0, 2.0, -1.0, 0.5).scale(1.0 / Q::new(0.0, 2.0, -1.0, 0.5).norm());

        // Kernel of the commutator as a 3x3 real system on (x, y, z).
        let basis = [Q::i(), Q::j(), Q::k()];
        let cols: Vec<[f64; 3]> = basis
            .iter()
            .map(|e| {
                let c = w * *e - *e * w;
                [c.x, c.y, c.z]
            })
            .collect();
        // Cross products of the column space give the kernel direction.
        let col = |r: usize| [cols[0][r], cols[1][r], cols[2][r]];
        let cross = |a: [f64; 3], b: [f64; 3]| {
            [
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            ]
        };
        let mut kernel = [0.0; 3];
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            let c = cross(col(a), col(b));
            let n = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
            if n > 1e-8 {
                kernel = [c[0] / n, c[1] / n, c[2] / n];
                break;
            }
        }
        let kq = Q::new(0.0, kernel[0], kernel[1], kernel[2]);
        assert!(
            kq.dist(&w) < 1e-9 || kq.dist(&-w) < 1e-9,
            "kernel direction {kq} is not +/-{w}"
        );
        assert!((w * kq - kq * w).norm() <= 1e-9);

        // Grid sweep: no unit pure away from +/-w commutes.
        let steps = 120;
        for a in 0..steps {
            let theta = std::f64::consts::PI * (a as f64 + 0.5) / steps as f64;
            for b in 0..(2 * steps) {
                let phi = std::f64::consts::PI * b as f64 / steps as f64;
                let omega = Q::new(
                    0.0,
                    theta.sin() * phi.cos(),
                    theta.sin() * phi.sin(),
                    theta.cos(),
                );
                let comm = (w * omega - omega * w).norm();
                if comm <= 1e-9 {
                    assert!(
                        omega.dist(&w) < 1e-4 || omega.dist(&-w) < 1e-4,
                        "spurious commuting direction {omega}"
                    );
                }
                if omega.dist(&w) > 0.1 && omega.dist(&-w) > 0.1 {
                    assert!(comm > 1e-3, "commutator suspiciously small at {omega}");
                }
            }
        }
    }

    #[test]
    fn parse_examples() {
        let cases = [
            ("1-2k", Q::new(1.0, 0.0, 0.0, -2.0)),
            ("i", Q::i()),
            ("+i", Q::i()),
            ("-j+0.5k", Q::new(0.0, 0.0, -1.0, 0.5)),
            ("0", Q::zero()),
            ("1+2i+3j+4k", Q::new(1.0, 2.0, 3.0, 4.0)),
            ("1.5e-3i", Q::new(0.0, 1.5e-3, 0.0, 0.0)),
            ("2E+2", Q::from_real(200.0)),
            (".5-5.j", Q::new(0.5, 0.0, -5.0, 0.0)),
        ];
        for (text, expected) in cases {
            assert_eq!(text.parse::<Q>().unwrap(), expected, "parsing {text:?}");
        }
        for bad in ["", "1+", "i2", "1 + 2i", "++i", "1+-2i", "q", "2.0.1j"] {
            assert!(bad.parse::<Q>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn display_examples() {
        assert_eq!(Q::new(1.0, 0.0, 0.0, -2.0).to_string(), "1-2k");
        assert_eq!(Q::i().to_string(), "i");
        assert_eq!(Q::zero().to_string(), "0");
        assert_eq!(Q::new(0.0, 0.0, -1.0, 0.5).to_string(), "-j+0.5k");
        assert_eq!(Q::new(-1.5, 1.0, 0.0, 0.0).to_string(), "-1.5+i");
    }

    #[test]
    fn probe_set_is_unit_pure() {
        let probes = pure_unit_probes::<f64>();
        assert_eq!(probes.len(), 16);
        for p in &probes {
            assert_eq!(p.w, 0.0);
            assert!((p.norm() - 1.0).abs() < 1e-14);
        }
        for (a, p) in probes.iter().enumerate() {
            for q in &probes[a + 1..] {
                assert!(p.dist(q) > 1e-3, "probe directions must be distinct");
            }
        }
    }

    proptest! {
        #[test]
        fn mul_matches_table_oracle(p in arb_quat(), q in arb_quat()) {
            let got = p * q;
            let want = table_mul(p, q);
            // identical arithmetic up to summation order; components are
            // 4-term dot products, so agreement is to a few ulps
            let scale = 1.0 + p.norm() * q.norm();
            prop_assert!(got.dist(&want) <= 1e-12 * scale);
        }

        #[test]
        fn norm_is_multiplicative(p in arb_quat(), q in arb_quat()) {
            prop_assume!(p.norm() > 1e-3 && q.norm() > 1e-3);
            let lhs = (p * q).norm();
            let rhs = p.norm() * q.norm();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs);
        }

        #[test]
        fn real_part_of_product_commutes(p in arb_quat(), q in arb_quat()) {
            let scale = 1.0 + p.norm() * q.norm();
            prop_assert!(((p * q).w - (q * p).w).abs() <= 1e-12 * scale);
        }

        #[test]
        fn conjugate_reverses_products(p in arb_quat(), q in arb_quat()) {
            let lhs = (p * q).conjugate();
            let rhs = q.conjugate() * p.conjugate();
            prop_assert!(lhs.dist(&rhs) <= 1e-9);
        }

        #[test]
        fn inverse_cancels(q in arb_quat()) {
            prop_assume!(q.norm() > 1e-3);
            let qi = q.inverse().unwrap();
            prop_assert!((q * qi).dist(&Q::one()) <= 1e-12);
            prop_assert!((qi * q).dist(&Q::one()) <= 1e-12);
        }

        #[test]
        fn representative_is_similar(q in arb_quat()) {
            let rep = Q::from_complex(q.complex_representative());
            prop_assert!(rep.is_similar(&q, 1e-12 * (1.0 + q.norm())));
            prop_assert!(rep.x >= 0.0);
        }

        #[test]
        fn conjugation_preserves_class(q in arb_quat(), r in arb_quat()) {
            prop_assume!(r.norm() > 1e-3);
            let c = q.conjugate_by(&r).unwrap();
            prop_assert!(c.is_similar(&q, 1e-9 * (1.0 + q.norm())));
        }

        #[test]
        fn display_parse_round_trip(q in arb_quat()) {
            let text = q.to_string();
            let back: Q = text.parse().unwrap();
            prop_assert_eq!(back, q);
        }

        #[test]
        fn complex_pair_reassembles(q in arb_quat()) {
            let (u, v) = q.complex_pair();
            prop_assert_eq!(Q::from_complex_pair(u, v), q);
            let rebuilt = Q::from_complex(u) + Q::j() * Q::from_complex(v);
            prop_assert!(rebuilt.dist(&q) == 0.0);
        }
    }

    #[test]
    fn seventeen_digit_round_trip() {
        // shortest round-trip display must preserve full f64 precision
        let q = Q::new(
            0.12345678901234567,
            -9.876543210987654e-7,
            1.0 / 3.0,
            2.0f64.sqrt(),
        );
        let back: Q = q.to_string().parse().unwrap();
        assert_eq!(back, q);
    }
}
