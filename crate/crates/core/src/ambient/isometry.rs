use serde::Serialize;

use super::{CoordVector, Point};
use crate::error::Result;

/// The three one-parameter families generating the identity component of
/// the isometry group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IsometryKind {
    /// `(x, y, z) -> (x + c, y, z)`
    TranslateX,
    /// `(x, y, z) -> (x, y + c, z)`
    TranslateY,
    /// `(x, y, z) -> (e^{-c} x, e^{c} y, z + c)`
    ShearZ,
}

impl IsometryKind {
    pub const ALL: [IsometryKind; 3] = [Self::TranslateX, Self::TranslateY, Self::ShearZ];
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IsometryElement {
    pub kind: IsometryKind,
    pub c: f64,
}

impl IsometryElement {
    pub const fn new(kind: IsometryKind, c: f64) -> Self {
        Self { kind, c }
    }

    /// Composition within a family adds parameters; elements of different
    /// families do not combine into a single family element.
    pub fn compose(self, other: Self) -> Option<Self> {
        (self.kind == other.kind).then(|| Self::new(self.kind, self.c + other.c))
    }
}

pub fn apply_isometry(iso: IsometryElement, p: Point) -> Result<Point> {
    let c = iso.c;
    let q = match iso.kind {
        IsometryKind::TranslateX => Point::new(p.x + c, p.y, p.z),
        IsometryKind::TranslateY => Point::new(p.x, p.y + c, p.z),
        IsometryKind::ShearZ => Point::new((-c).exp() * p.x, c.exp() * p.y, p.z + c),
    };
    q.validated()
}

/// The differential of an isometry. Every family acts linearly on the
/// coordinates, so this is independent of the base point.
pub fn isometry_differential(iso: IsometryElement, u: CoordVector) -> CoordVector {
    match iso.kind {
        IsometryKind::TranslateX | IsometryKind::TranslateY => u,
        IsometryKind::ShearZ => CoordVector::new((-iso.c).exp() * u.dx, iso.c.exp() * u.dy, u.dz),
    }
}

/// Killing fields of the three families at `p`, in the order
/// `d/dx`, `d/dy`, `-x d/dx + y d/dy + d/dz`.
pub fn killing_fields(p: Point) -> [CoordVector; 3] {
    [
        CoordVector::new(1.0, 0.0, 0.0),
        CoordVector::new(0.0, 1.0, 0.0),
        CoordVector::new(-p.x, p.y, 1.0),
    ]
}
