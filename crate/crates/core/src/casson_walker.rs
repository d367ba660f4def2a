//! Casson–Walker invariants of Dehn surgeries: rational surgery on a single
//! knot, the two-component-link surgery formula, and the auxiliary
//! quantities both need (linking form, `v3`, torus-knot `a2`).
//!
//! The two-component formula computes, for a rationally framed link
//! `L = Kx ∪ Ky` with framings `fx = px/qx`, `fy = py/qy`, linking number
//! `l`, linking-matrix determinant `D` and signature `ς`:
//!
//! ```text
//! D (λ/2 − ς/8) = a2(Kx) fy − fy/24 − fy/(24 qx²) + fy l²/24
//!               + a2(Ky) fx − fx/24 − fx/(24 qy²) + fx l²/24
//!               + 2 v3(L) + (D/24)(S(fx) − fx + S(fy) − fy)
//! ```
//!
//! with `v3(L) = (−a3 + (a2(Kx)+a2(Ky)) l + (l³−l)/12) / 2`. Every term is
//! exposed in [`LambdaLinkBreakdown`] so tests can pinpoint a divergence.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::dedekind::dedekind_symbol;
use crate::error::{Error, Result};
use crate::rational::{gcd_pair, Rational};

/// A reduced surgery slope `p/q` with `q >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    /// Builds a slope, reducing the fraction and normalizing `q >= 1`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd_pair(p, q) as i64; // fits: g <= max(|p|, |q|)
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = p
                .checked_neg()
                .ok_or_else(|| Error::Parse("slope numerator overflows".into()))?;
            q = q
                .checked_neg()
                .ok_or_else(|| Error::Parse("slope denominator overflows".into()))?;
        }
        Ok(Slope { p, q })
    }

    /// Reduced numerator (carries the sign).
    pub fn p(&self) -> i64 {
        self.p
    }

    /// Reduced denominator, always >= 1.
    pub fn q(&self) -> i64 {
        self.q
    }

    /// The slope as an exact rational `p/q`.
    pub fn as_rational(&self) -> Rational {
        Rational::new(self.p, self.q).expect("q >= 1")
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: i64 = p
            .parse()
            .map_err(|_| Error::Parse(format!("invalid slope {s:?}")))?;
        let q: i64 = q
            .parse()
            .map_err(|_| Error::Parse(format!("invalid slope {s:?}")))?;
        Slope::new(p, q)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct SlopeVisitor;

        impl de::Visitor<'_> for SlopeVisitor {
            type Value = Slope;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a \"P/Q\" slope string or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Slope, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Slope, E> {
                Slope::new(v, 1).map_err(E::custom)
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Slope, E> {
                let v = i64::try_from(v).map_err(|_| E::custom("slope out of range"))?;
                Slope::new(v, 1).map_err(E::custom)
            }
        }

        deserializer.deserialize_any(SlopeVisitor)
    }
}

/// A knot surgery yielding a rational homology sphere: Conway coefficient
/// `a2` of the knot and a surgery slope with nonzero numerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FramedKnotSurgery {
    /// Conway coefficient `a2` of the knot.
    pub a2: i64,
    /// Surgery slope `p/q`; `p != 0`.
    slope: Slope,
}

impl FramedKnotSurgery {
    /// Builds the surgery datum, rejecting `p = 0` (the result would not be
    /// a rational homology sphere).
    pub fn new(a2: i64, slope: Slope) -> Result<Self> {
        if slope.p() == 0 {
            return Err(Error::NotRationalHomologySphere);
        }
        Ok(FramedKnotSurgery { a2, slope })
    }

    /// The surgery slope.
    pub fn slope(&self) -> Slope {
        self.slope
    }
}

/// Surgery data for a rationally framed 2-component link `L = Kx ∪ Ky`.
///
/// All fields are formal inputs: any integer values are legal, whether or
/// not some geometric link realizes them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoComponentLinkData {
    /// Conway coefficient `a2` of the component `Kx`.
    pub a2x: i64,
    /// Conway coefficient `a2` of the component `Ky`.
    pub a2y: i64,
    /// Conway coefficient `a3` of the link.
    pub a3: Rational,
    /// Linking number `l = lk(Kx, Ky)`.
    pub lk: i64,
    /// Framing of `Kx`.
    pub fx: Slope,
    /// Framing of `Ky`.
    pub fy: Slope,
}

/// Determinant and signature of the 2x2 rational linking matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkingForm {
    /// `D = fx·fy − l²`.
    pub det: Rational,
    /// Signature `ς` in {−2, 0, 2}.
    pub signature: i8,
}

/// Determinant and signature of the linking matrix `[[fx, l], [l, fy]]`.
///
/// A zero determinant means the surgered manifold is not a rational
/// homology sphere and is rejected. For nonzero determinant the signature
/// follows from sign considerations alone: negative determinant gives an
/// indefinite form (`ς = 0`); positive determinant gives a definite form
/// whose sign is the sign of `fx` (nonzero, since `fx·fy > l² >= 0`).
pub fn linking_form(link: &TwoComponentLinkData) -> Result<LinkingForm> {
    let l2 = Rational::from_int(link.lk) * Rational::from_int(link.lk);
    let det = link.fx.as_rational() * link.fy.as_rational() - l2;
    let sign = det.signum();
    if sign == 0 {
        return Err(Error::NotRationalHomologySphere);
    }
    let signature = if sign < 0 {
        0
    } else {
        2 * link.fx.as_rational().signum()
    };
    Ok(LinkingForm { det, signature })
}

/// `v3(L) = (−a3 + (a2x + a2y)·l + (l³ − l)/12) / 2`, exactly.
pub fn v3(link: &TwoComponentLinkData) -> Rational {
    let l = Rational::from_int(link.lk);
    let cube_term = (&l * &l * &l - &l) * Rational::new(1, 12).expect("12 != 0");
    let sum = -&link.a3 + Rational::from_int(link.a2x + link.a2y) * &l + cube_term;
    sum * Rational::new(1, 2).expect("2 != 0")
}

/// Casson–Walker invariant of `p/q`-surgery on a knot with Conway
/// coefficient `a2`: `λ = 2·(a2·q/p − S(q/p)/24)`.
pub fn lambda_knot(surgery: &FramedKnotSurgery) -> Rational {
    let p = surgery.slope().p();
    let q = surgery.slope().q();
    let q_over_p = Slope::new(q, p).expect("p != 0 by construction");
    let s = dedekind_symbol(&q_over_p);
    let main = Rational::from_int(surgery.a2) * q_over_p.as_rational();
    (main - s * Rational::new(1, 24).expect("24 != 0")) * Rational::from_int(2)
}

/// Every summand of the link surgery formula, for diagnostics; all fields
/// exact. The eleven right-hand-side terms sum to `rhs`, and
/// `lambda = 2·(rhs/det + signature/8)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaLinkBreakdown {
    /// `a2(Kx)·fy`.
    pub a2x_fy: Rational,
    /// `−fy/24`.
    pub neg_fy_24: Rational,
    /// `−fy/(24·qx²)`.
    pub neg_fy_24qx2: Rational,
    /// `fy·l²/24`.
    pub fy_l2_24: Rational,
    /// `a2(Ky)·fx`.
    pub a2y_fx: Rational,
    /// `−fx/24`.
    pub neg_fx_24: Rational,
    /// `−fx/(24·qy²)`.
    pub neg_fx_24qy2: Rational,
    /// `fx·l²/24`.
    pub fx_l2_24: Rational,
    /// `2·v3(L)`.
    pub two_v3: Rational,
    /// `(D/24)·(S(fx) − fx)`.
    pub dedekind_x: Rational,
    /// `(D/24)·(S(fy) − fy)`.
    pub dedekind_y: Rational,
    /// Sum of the eleven terms above: `D·(λ/2 − ς/8)`.
    pub rhs: Rational,
    /// Linking-matrix determinant `D`.
    pub det: Rational,
    /// Linking-matrix signature `ς`.
    pub signature: i8,
    /// The Casson–Walker invariant `λ`.
    pub lambda: Rational,
}

/// Evaluates the link surgery formula term by term.
///
/// Errors when the linking matrix is degenerate (determinant zero).
pub fn lambda_link_breakdown(link: &TwoComponentLinkData) -> Result<LambdaLinkBreakdown> {
    let form = linking_form(link)?;
    let frac_24 = Rational::new(1, 24).expect("24 != 0");
    let fx = link.fx.as_rational();
    let fy = link.fy.as_rational();
    let l2 = Rational::from_int(link.lk) * Rational::from_int(link.lk);
    let qx2 = Rational::from_int(link.fx.q() * link.fx.q());
    let qy2 = Rational::from_int(link.fy.q() * link.fy.q());
    let d_24 = &form.det * &frac_24;

    let a2x_fy = Rational::from_int(link.a2x) * &fy;
    let neg_fy_24 = -(&fy * &frac_24);
    let neg_fy_24qx2 = (&fy * &frac_24).checked_div(&qx2).map(|t| -t)?;
    let fy_l2_24 = &fy * &l2 * &frac_24;
    let a2y_fx = Rational::from_int(link.a2y) * &fx;
    let neg_fx_24 = -(&fx * &frac_24);
    let neg_fx_24qy2 = (&fx * &frac_24).checked_div(&qy2).map(|t| -t)?;
    let fx_l2_24 = &fx * &l2 * &frac_24;
    let two_v3 = v3(link) * Rational::from_int(2);
    let dedekind_x = &d_24 * &(dedekind_symbol(&link.fx) - &fx);
    let dedekind_y = &d_24 * &(dedekind_symbol(&link.fy) - &fy);

    let rhs = &a2x_fy
        + &neg_fy_24
        + &neg_fy_24qx2
        + &fy_l2_24
        + &a2y_fx
        + &neg_fx_24
        + &neg_fx_24qy2
        + &fx_l2_24
        + &two_v3
        + &dedekind_x
        + &dedekind_y;
    let lambda = (rhs.checked_div(&form.det)?
        + Rational::new(form.signature as i64, 8).expect("8 != 0"))
        * Rational::from_int(2);

    Ok(LambdaLinkBreakdown {
        a2x_fy,
        neg_fy_24,
        neg_fy_24qx2,
        fy_l2_24,
        a2y_fx,
        neg_fx_24,
        neg_fx_24qy2,
        fx_l2_24,
        two_v3,
        dedekind_x,
        dedekind_y,
        rhs,
        det: form.det,
        signature: form.signature,
        lambda,
    })
}

/// Casson–Walker invariant of surgery on a rationally framed 2-component
/// link. Errors when the linking matrix is degenerate.
pub fn lambda_link(link: &TwoComponentLinkData) -> Result<Rational> {
    Ok(lambda_link_breakdown(link)?.lambda)
}

/// Conway coefficient `a2` of the `(r,s)` torus knot: `(r²−1)(s²−1)/24`.
pub fn torus_knot_a2(r: i64, s: i64) -> Result<i64> {
    if r < 2 {
        return Err(Error::NonPositive {
            what: "torus knot parameter r (need >= 2)",
            got: r,
        });
    }
    if s < 2 {
        return Err(Error::NonPositive {
            what: "torus knot parameter s (need >= 2)",
            got: s,
        });
    }
    if gcd_pair(r, s) != 1 {
        return Err(Error::NotCoprime {
            what: "torus knot parameters",
            a: r,
            b: s,
        });
    }
    let num = (r * r - 1) * (s * s - 1);
    debug_assert_eq!(
        num % 24,
        0,
        "(r²−1)(s²−1) is always divisible by 24 for coprime r, s"
    );
    Ok(num / 24)
}
