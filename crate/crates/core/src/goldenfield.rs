//! Exact planar geometry over the golden field.
//!
//! Two number types carry all geometry in this crate:
//!
//! * [`GoldenScalar`] — an element a + b√5 of Q(√5) with arbitrary-precision
//!   rational a, b. Squared lengths, signs, and the golden ratio φ live here.
//! * [`CycPoint`] — a complex number c₀ + c₁ζ + c₂ζ² + c₃ζ³ with rational
//!   coefficients, where ζ = e^{2πi/5}, reduced by 1+ζ+ζ²+ζ³+ζ⁴ = 0 and
//!   read as a point of the plane. Pentagon and golden-triangle vertices are
//!   exactly representable here, including heights like sin 36° that do not
//!   lie in Q(√5).
//!
//! Every comparison (equality, ordering, orientation, shape class) is decided
//! by exact field arithmetic; floating point only appears in [`CycPoint::to_xy`]
//! for rendering.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rational(text: &str) -> Result<BigRational, ScalarParseError> {
    BigRational::from_str(text).map_err(|_| ScalarParseError::BadRational(text.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("invalid rational {0:?} (expected \"p/q\")")]
    BadRational(String),
    #[error("invalid golden scalar {0:?} (expected \"p/q + r/s*sqrt5\")")]
    BadScalar(String),
}

/// An exact element a + b·√5 of the real quadratic field Q(√5).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GoldenScalar {
    a: BigRational,
    b: BigRational,
}

impl GoldenScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        GoldenScalar { a, b }
    }

    /// The rational n/d embedded in Q(√5).
    pub fn rational(n: i64, d: i64) -> Self {
        GoldenScalar::new(ratio(n, d), BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        GoldenScalar::rational(n, 1)
    }

    pub fn zero() -> Self {
        GoldenScalar::from_int(0)
    }

    pub fn one() -> Self {
        GoldenScalar::from_int(1)
    }

    /// The golden ratio φ = (1 + √5)/2.
    pub fn phi() -> Self {
        GoldenScalar::new(ratio(1, 2), ratio(1, 2))
    }

    /// φ² = φ + 1.
    pub fn phi_squared() -> Self {
        GoldenScalar::new(ratio(3, 2), ratio(1, 2))
    }

    pub fn sqrt5() -> Self {
        GoldenScalar::new(BigRational::zero(), BigRational::one())
    }

    /// Coefficient of 1.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of √5.
    pub fn sqrt5_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign: −1, 0, or +1.
    ///
    /// When a and b disagree in sign the comparison reduces to a² versus
    /// 5b², which is decidable in rational arithmetic; √5 being irrational,
    /// a² = 5b² can only happen at zero.
    pub fn sign(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (sa, sb) if sa >= 0 && sb >= 0 => 1,
            (sa, sb) if sa <= 0 && sb <= 0 => -1,
            _ => {
                let a2 = &self.a * &self.a;
                let b2_5 = &self.b * &self.b * big(5);
                match a2.cmp(&b2_5) {
                    Ordering::Greater => sa,
                    Ordering::Less => -sa,
                    Ordering::Equal => 0,
                }
            }
        }
    }

    /// Multiplicative inverse, if nonzero: (a − b√5) / (a² − 5b²).
    pub fn inverse(&self) -> Option<GoldenScalar> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.a * &self.a - &self.b * &self.b * big(5);
        debug_assert!(!norm.is_zero(), "norm vanishes only at zero");
        Some(GoldenScalar::new(&self.a / &norm, -&self.b / &norm))
    }

    /// Approximate value, for rendering only.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * 5f64.sqrt()
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact sign of a golden scalar.
pub fn gs_sign(x: &GoldenScalar) -> i32 {
    x.sign()
}

impl Add for &GoldenScalar {
    type Output = GoldenScalar;
    fn add(self, rhs: &GoldenScalar) -> GoldenScalar {
        GoldenScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &GoldenScalar {
    type Output = GoldenScalar;
    fn sub(self, rhs: &GoldenScalar) -> GoldenScalar {
        GoldenScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &GoldenScalar {
    type Output = GoldenScalar;
    fn mul(self, rhs: &GoldenScalar) -> GoldenScalar {
        GoldenScalar::new(
            &self.a * &rhs.a + &self.b * &rhs.b * big(5),
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &GoldenScalar {
    type Output = GoldenScalar;
    fn neg(self) -> GoldenScalar {
        GoldenScalar::new(-&self.a, -&self.b)
    }
}

macro_rules! forward_owned_binop {
    ($t:ty, $trait:ident, $method:ident) => {
        impl $trait for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(GoldenScalar, Add, add);
forward_owned_binop!(GoldenScalar, Sub, sub);
forward_owned_binop!(GoldenScalar, Mul, mul);

impl Neg for GoldenScalar {
    type Output = GoldenScalar;
    fn neg(self) -> GoldenScalar {
        -&self
    }
}

impl PartialOrd for GoldenScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Display for GoldenScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*sqrt5",
            rational_string(&self.a),
            rational_string(&self.b)
        )
    }
}

impl FromStr for GoldenScalar {
    type Err = ScalarParseError;

    fn from_str(text: &str) -> Result<Self, ScalarParseError> {
        let (a, rest) = text
            .split_once(" + ")
            .ok_or_else(|| ScalarParseError::BadScalar(text.to_string()))?;
        let b = rest
            .strip_suffix("*sqrt5")
            .ok_or_else(|| ScalarParseError::BadScalar(text.to_string()))?;
        Ok(GoldenScalar::new(parse_rational(a)?, parse_rational(b)?))
    }
}

impl Serialize for GoldenScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GoldenScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

/// A point of the plane with coordinates in the 5th cyclotomic field,
/// written on the basis {1, ζ, ζ², ζ³} with ζ = e^{2πi/5}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycPoint {
    c: [BigRational; 4],
}

impl CycPoint {
    pub fn new(c: [BigRational; 4]) -> Self {
        CycPoint { c }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        CycPoint::new(c.map(big))
    }

    pub fn zero() -> Self {
        CycPoint::from_ints([0, 0, 0, 0])
    }

    pub fn one() -> Self {
        CycPoint::from_ints([1, 0, 0, 0])
    }

    /// ζ^k for any integer k (taken mod 5); ζ⁴ reduces to −1−ζ−ζ²−ζ³.
    pub fn zeta(k: i32) -> Self {
        match k.rem_euclid(5) {
            0 => CycPoint::from_ints([1, 0, 0, 0]),
            1 => CycPoint::from_ints([0, 1, 0, 0]),
            2 => CycPoint::from_ints([0, 0, 1, 0]),
            3 => CycPoint::from_ints([0, 0, 0, 1]),
            _ => CycPoint::from_ints([-1, -1, -1, -1]),
        }
    }

    /// Embed a real golden scalar on the real axis, using
    /// √5 = −1 − 2ζ² − 2ζ³.
    pub fn from_golden(g: &GoldenScalar) -> Self {
        let a = g.rational_part();
        let b = g.sqrt5_part();
        CycPoint::new([
            a - b,
            BigRational::zero(),
            big(-2) * b,
            big(-2) * b,
        ])
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.c[i]
    }

    pub fn coeff_strings(&self) -> [String; 4] {
        [
            rational_string(&self.c[0]),
            rational_string(&self.c[1]),
            rational_string(&self.c[2]),
            rational_string(&self.c[3]),
        ]
    }

    pub fn from_coeff_strings(strings: &[String; 4]) -> Result<Self, ScalarParseError> {
        Ok(CycPoint::new([
            parse_rational(&strings[0])?,
            parse_rational(&strings[1])?,
            parse_rational(&strings[2])?,
            parse_rational(&strings[3])?,
        ]))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Complex conjugation, ζ ↦ ζ⁴ (reflection across the real axis).
    pub fn conj(&self) -> CycPoint {
        let [c0, c1, c2, c3] = &self.c;
        CycPoint::new([c0 - c1, -c1, c3 - c1, c2 - c1])
    }

    /// True iff the point lies on the real axis.
    pub fn is_real(&self) -> bool {
        self.c[1].is_zero() && self.c[2] == self.c[3]
    }

    /// The value as a golden scalar, when real: c₀ + c₂(ζ²+ζ³) with
    /// ζ²+ζ³ = −(1+√5)/2.
    pub fn real_value(&self) -> Option<GoldenScalar> {
        if !self.is_real() {
            return None;
        }
        let half_c2 = &self.c[2] / big(2);
        Some(GoldenScalar::new(&self.c[0] - &half_c2, -half_c2))
    }

    /// |z|² = z·conj(z), always a nonnegative golden scalar.
    pub fn abs_sq(&self) -> GoldenScalar {
        (self * &self.conj())
            .real_value()
            .expect("z·conj(z) is always real")
    }

    /// Multiply by a real golden scalar.
    pub fn scale(&self, s: &GoldenScalar) -> CycPoint {
        self * &CycPoint::from_golden(s)
    }

    pub fn scale_int(&self, n: i64) -> CycPoint {
        let factor = big(n);
        CycPoint::new([
            &self.c[0] * &factor,
            &self.c[1] * &factor,
            &self.c[2] * &factor,
            &self.c[3] * &factor,
        ])
    }

    /// Exact real part: Re z = c₀ + c₁·cos72° + (c₂+c₃)·cos144° with
    /// cos72° = (√5−1)/4 and cos144° = −(1+√5)/4.
    pub fn re_exact(&self) -> GoldenScalar {
        let quarter = |r: &BigRational| r / big(4);
        let c23 = &self.c[2] + &self.c[3];
        let a = &self.c[0] - quarter(&self.c[1]) - quarter(&c23);
        let b = quarter(&self.c[1]) - quarter(&c23);
        GoldenScalar::new(a, b)
    }

    /// Exact imaginary part divided by sin 36° (a positive constant):
    /// Im z = sin36° · (φ·c₁ + c₂ − c₃), using sin72° = φ·sin36°.
    /// Sign and order comparisons of heights go through this value.
    pub fn im_scaled_exact(&self) -> GoldenScalar {
        let half_c1 = &self.c[1] / big(2);
        GoldenScalar::new(&half_c1 + &self.c[2] - &self.c[3], half_c1)
    }

    /// Approximate Cartesian coordinates, for rendering only.
    pub fn to_xy(&self) -> (f64, f64) {
        (self.re_exact().to_f64(), self.im_scaled_exact().to_f64() * SIN_36)
    }
}

/// sin 36° = √(10 − 2√5) / 4, the unit that [`CycPoint::im_scaled_exact`]
/// is expressed in.
pub const SIN_36: f64 = 0.5877852522924731;

impl Add for &CycPoint {
    type Output = CycPoint;
    fn add(self, rhs: &CycPoint) -> CycPoint {
        CycPoint::new([
            &self.c[0] + &rhs.c[0],
            &self.c[1] + &rhs.c[1],
            &self.c[2] + &rhs.c[2],
            &self.c[3] + &rhs.c[3],
        ])
    }
}

impl Sub for &CycPoint {
    type Output = CycPoint;
    fn sub(self, rhs: &CycPoint) -> CycPoint {
        CycPoint::new([
            &self.c[0] - &rhs.c[0],
            &self.c[1] - &rhs.c[1],
            &self.c[2] - &rhs.c[2],
            &self.c[3] - &rhs.c[3],
        ])
    }
}

impl Mul for &CycPoint {
    type Output = CycPoint;
    fn mul(self, rhs: &CycPoint) -> CycPoint {
        let mut acc: [BigRational; 7] = std::array::from_fn(|_| BigRational::zero());
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                acc[i + j] = &acc[i + j] + &self.c[i] * &rhs.c[j];
            }
        }
        // ζ⁵ = 1, ζ⁶ = ζ, then ζ⁴ = −(1 + ζ + ζ² + ζ³).
        acc[0] = &acc[0] + &acc[5];
        acc[1] = &acc[1] + &acc[6];
        let [e0, e1, e2, e3, e4, ..] = acc;
        CycPoint::new([&e0 - &e4, &e1 - &e4, &e2 - &e4, &e3 - &e4])
    }
}

impl Neg for &CycPoint {
    type Output = CycPoint;
    fn neg(self) -> CycPoint {
        CycPoint::new([-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]])
    }
}

forward_owned_binop!(CycPoint, Add, add);
forward_owned_binop!(CycPoint, Sub, sub);
forward_owned_binop!(CycPoint, Mul, mul);

impl Neg for CycPoint {
    type Output = CycPoint;
    fn neg(self) -> CycPoint {
        -&self
    }
}

impl fmt::Display for CycPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

impl Serialize for CycPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = <[String; 4]>::deserialize(deserializer)?;
        CycPoint::from_coeff_strings(&strings).map_err(de::Error::custom)
    }
}

/// Squared distance |p − q|², exactly.
pub fn sq_distance(p: &CycPoint, q: &CycPoint) -> GoldenScalar {
    (p - q).abs_sq()
}

/// Sign of the signed area of the triangle (p, q, r): +1 counterclockwise,
/// 0 collinear, −1 clockwise. Computed as the sign of
/// Im(conj(q−p)·(r−p)), which [`CycPoint::im_scaled_exact`] decides exactly.
pub fn orientation(p: &CycPoint, q: &CycPoint, r: &CycPoint) -> i32 {
    let cross = (q - p).conj() * (r - p);
    cross.im_scaled_exact().sign()
}

/// Exact shape classification of a triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeClass {
    /// Isosceles, apex 36°: two equal long sides, long² = φ²·short².
    GoldenTriangle,
    /// Isosceles, apex 108°: two equal short sides, long² = φ²·short².
    GoldenGnomon,
    /// Zero area.
    Degenerate,
    /// Any other triangle.
    Other,
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapeClass::GoldenTriangle => "golden-triangle",
            ShapeClass::GoldenGnomon => "golden-gnomon",
            ShapeClass::Degenerate => "degenerate",
            ShapeClass::Other => "other",
        })
    }
}

/// Classify the triangle with vertices p, q, r by exact side comparisons.
pub fn classify_triangle(p: &CycPoint, q: &CycPoint, r: &CycPoint) -> ShapeClass {
    if orientation(p, q, r) == 0 {
        return ShapeClass::Degenerate;
    }
    let mut sides = [sq_distance(q, r), sq_distance(p, r), sq_distance(p, q)];
    sides.sort();
    let [s1, s2, s3] = sides;
    let phi_sq_s1 = &GoldenScalar::phi_squared() * &s1;
    if s2 == s3 && s3 == phi_sq_s1 {
        ShapeClass::GoldenTriangle
    } else if s1 == s2 && s3 == phi_sq_s1 {
        ShapeClass::GoldenGnomon
    } else {
        ShapeClass::Other
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsometryError {
    #[error("spin factor {0} does not have unit modulus")]
    NonUnitSpin(CycPoint),
    #[error("mirror line endpoints coincide at {0}")]
    DegenerateMirror(CycPoint),
}

/// A plane isometry with exact cyclotomic data: z ↦ spin·z + offset, or
/// z ↦ spin·conj(z) + offset when `reflect` is set. The spin factor always
/// has unit modulus, so all pairwise squared distances are preserved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isometry {
    reflect: bool,
    spin: CycPoint,
    offset: CycPoint,
}

impl Isometry {
    pub fn identity() -> Self {
        Isometry {
            reflect: false,
            spin: CycPoint::one(),
            offset: CycPoint::zero(),
        }
    }

    pub fn translation(offset: CycPoint) -> Self {
        Isometry {
            reflect: false,
            spin: CycPoint::one(),
            offset,
        }
    }

    /// Reflection across the real axis followed by a translation.
    pub fn reflect_then_translate(offset: CycPoint) -> Self {
        Isometry {
            reflect: true,
            spin: CycPoint::one(),
            offset,
        }
    }

    pub fn new(reflect: bool, spin: CycPoint, offset: CycPoint) -> Result<Self, IsometryError> {
        if spin.abs_sq() != GoldenScalar::one() {
            return Err(IsometryError::NonUnitSpin(spin));
        }
        Ok(Isometry {
            reflect,
            spin,
            offset,
        })
    }

    /// The reflection fixing the line through a and b:
    /// z ↦ a + (d²/|d|²)·conj(z − a) with d = b − a.
    pub fn reflection_across_line(a: &CycPoint, b: &CycPoint) -> Result<Self, IsometryError> {
        let d = b - a;
        let norm = d.abs_sq();
        let inv = norm
            .inverse()
            .ok_or_else(|| IsometryError::DegenerateMirror(a.clone()))?;
        let spin = (&d * &d).scale(&inv);
        let offset = a - &(&spin * &a.conj());
        Ok(Isometry {
            reflect: true,
            spin,
            offset,
        })
    }

    pub fn is_reflecting(&self) -> bool {
        self.reflect
    }

    pub fn spin(&self) -> &CycPoint {
        &self.spin
    }

    pub fn offset(&self) -> &CycPoint {
        &self.offset
    }

    /// Check the unit-modulus invariant (useful after deserializing).
    pub fn is_valid(&self) -> bool {
        self.spin.abs_sq() == GoldenScalar::one()
    }

    pub fn apply(&self, p: &CycPoint) -> CycPoint {
        let base = if self.reflect { p.conj() } else { p.clone() };
        &(&self.spin * &base) + &self.offset
    }

    /// The isometry "first self, then next".
    pub fn then(&self, next: &Isometry) -> Isometry {
        let twist = |p: &CycPoint| if next.reflect { p.conj() } else { p.clone() };
        Isometry {
            reflect: self.reflect ^ next.reflect,
            spin: &next.spin * &twist(&self.spin),
            offset: &(&next.spin * &twist(&self.offset)) + &next.offset,
        }
    }

    pub fn inverse(&self) -> Isometry {
        if self.reflect {
            // For a reflection m, m⁻¹ has the same spin: m∘m fixes spin·conj(spin) = 1.
            Isometry {
                reflect: true,
                spin: self.spin.clone(),
                offset: -&(&self.spin * &self.offset.conj()),
            }
        } else {
            let spin_inv = self.spin.conj();
            Isometry {
                reflect: false,
                offset: -&(&spin_inv * &self.offset),
                spin: spin_inv,
            }
        }
    }
}

/// Apply an isometry to a point.
pub fn apply_isometry(m: &Isometry, p: &CycPoint) -> CycPoint {
    m.apply(p)
}
