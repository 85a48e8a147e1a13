//! The special polygon of a Farey symbol as a list of hyperbolic arcs.

use serde::{Serialize, Serializer};

use crate::fraction::ExtFraction;
use crate::matrix::ProjectiveMatrix;
use crate::symbol::{FareySymbol, Pairing};

/// An arc endpoint: a cusp, or the corner `γ(ρ)` of an odd side with
/// `ρ = e^{πi/3}`, kept exactly as the matrix `γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArcEnd {
    Cusp(ExtFraction),
    RhoImage(ProjectiveMatrix),
}

impl ArcEnd {
    /// Position in the upper half plane as `(x, y)`; `None` for `∞`.
    pub fn to_point(&self) -> Option<(f64, f64)> {
        match self {
            ArcEnd::Cusp(x) if x.is_infinite() => None,
            ArcEnd::Cusp(x) => Some((x.to_f64(), 0.0)),
            ArcEnd::RhoImage(g) => {
                let f = |v: &num_bigint::BigInt| v.to_string().parse::<f64>().unwrap_or(f64::NAN);
                let (a, b, c, d) = (f(g.a()), f(g.b()), f(g.c()), f(g.d()));
                let (re, im) = (0.5, 3f64.sqrt() / 2.0);
                // (aρ + b) / (cρ + d)
                let (nr, ni) = (a * re + b, a * im);
                let (dr, di) = (c * re + d, c * im);
                let den = dr * dr + di * di;
                Some(((nr * dr + ni * di) / den, (ni * dr - nr * di) / den))
            }
        }
    }
}

impl Serialize for ArcEnd {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct RhoImage<'a> {
            #[serde(rename = "rho-image")]
            matrix: &'a ProjectiveMatrix,
        }
        match self {
            ArcEnd::Cusp(x) => x.serialize(s),
            ArcEnd::RhoImage(g) => RhoImage { matrix: g }.serialize(s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ArcKind {
    /// Whole geodesic side (even or free pairing).
    #[serde(rename = "even-edge")]
    Even,
    /// One of the two halves of an odd side.
    #[serde(rename = "odd-edge")]
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub from: ArcEnd,
    pub to: ArcEnd,
    pub kind: ArcKind,
    #[serde(serialize_with = "serialize_pairing")]
    pub pairing: Pairing,
    pub edge: usize,
}

fn serialize_pairing<S: Serializer>(p: &Pairing, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonGeometry {
    pub arcs: Vec<Arc>,
}

impl FareySymbol {
    /// Sides in edge order; an odd side `(x, y)` is split at `γ(ρ)` with
    /// `γ = [[a_y, a_x], [b_y, b_x]]`, which carries `0, ∞` to `x, y`.
    pub fn geometry(&self) -> PolygonGeometry {
        let mut arcs = Vec::new();
        for (k, &pairing) in self.pairings().iter().enumerate() {
            let (x, y) = self.edge(k);
            let (from, to) = (ArcEnd::Cusp(x.clone()), ArcEnd::Cusp(y.clone()));
            if pairing == Pairing::Odd {
                let gamma = ProjectiveMatrix::new(
                    y.numer().clone(),
                    x.numer().clone(),
                    y.denom().clone(),
                    x.denom().clone(),
                )
                .expect("neighbouring vertices have determinant 1");
                let corner = ArcEnd::RhoImage(gamma);
                arcs.push(Arc {
                    from,
                    to: corner.clone(),
                    kind: ArcKind::Odd,
                    pairing,
                    edge: k,
                });
                arcs.push(Arc {
                    from: corner,
                    to,
                    kind: ArcKind::Odd,
                    pairing,
                    edge: k,
                });
            } else {
                arcs.push(Arc {
                    from,
                    to,
                    kind: ArcKind::Even,
                    pairing,
                    edge: k,
                });
            }
        }
        PolygonGeometry { arcs }
    }
}
