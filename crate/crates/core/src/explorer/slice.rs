use crate::gfamily::GParams;
use crate::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Uniform grid `lo, lo + step, ...` up to `hi` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl Axis {
    pub fn new(lo: f64, hi: f64, step: f64) -> Result<Self> {
        if !(step > 0.0) || !lo.is_finite() || !hi.is_finite() || hi < lo {
            return Err(Error::InvalidArgument(format!(
                "bad axis lo={lo} hi={hi} step={step}"
            )));
        }
        Ok(Self { lo, hi, step })
    }

    pub fn len(&self) -> usize {
        ((self.hi - self.lo) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn value(&self, i: usize) -> f64 {
        self.lo + i as f64 * self.step
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|i| self.value(i))
    }
}

/// Which one- or two-parameter cut through `(a, b, c)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SliceKind {
    /// `b = c = ia`; axis `a`.
    Case1,
    /// real `b = c`; axes `a`, `b`.
    Case2,
    /// `b = c = i r a`; axis `a`.
    Ratio { r: f64 },
    /// `b = i r a`, `c = n r a`; axes `r`, `a`.
    Mixed { n: f64 },
    /// `b = n i` with real `a`, `c`; axes `a`, `c`.
    FixedB { n: f64 },
    /// Explicit parameter list; axis is the list index.
    Custom { points: Vec<GParams> },
}

impl SliceKind {
    fn dims(&self) -> usize {
        match self {
            SliceKind::Case1 | SliceKind::Ratio { .. } | SliceKind::Custom { .. } => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilySlice {
    pub kind: SliceKind,
    pub axes: Vec<Axis>,
}

/// One grid point: its coordinates and the family parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlicePoint {
    pub coords: Vec<f64>,
    pub params: GParams,
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn im(x: f64) -> Complex64 {
    Complex64::new(0.0, x)
}

impl FamilySlice {
    pub fn new(kind: SliceKind, axes: Vec<Axis>) -> Result<Self> {
        if let SliceKind::Custom { points } = &kind {
            if points.is_empty() {
                return Err(Error::InvalidArgument("custom slice has no points".into()));
            }
            let hi = (points.len() - 1) as f64;
            return Ok(Self {
                kind,
                axes: vec![Axis::new(0.0, hi, 1.0)?],
            });
        }
        if axes.len() != kind.dims() {
            return Err(Error::InvalidArgument(format!(
                "slice needs {} axes, got {}",
                kind.dims(),
                axes.len()
            )));
        }
        Ok(Self { kind, axes })
    }

    /// `b = c = ia`, `a` in `[0.005, 5]` step `0.005`.
    pub fn case1() -> Self {
        Self::fixed(SliceKind::Case1, vec![Axis { lo: 0.005, hi: 5.0, step: 0.005 }])
    }

    /// real `b = c`, `(a, b)` in `[0.005, 5]^2` step `0.01`.
    pub fn case2() -> Self {
        let ax = Axis { lo: 0.005, hi: 5.0, step: 0.01 };
        Self::fixed(SliceKind::Case2, vec![ax, ax])
    }

    /// `b = c = i r a`, `a` in `[0.01, 5]` step `0.01`.
    pub fn ratio(r: f64) -> Self {
        Self::fixed(SliceKind::Ratio { r }, vec![Axis { lo: 0.01, hi: 5.0, step: 0.01 }])
    }

    /// `b = i r a`, `c = n r a`, `(r, a)` in `[0.01, 5]^2` step `0.01`.
    pub fn mixed(n: f64) -> Self {
        let ax = Axis { lo: 0.01, hi: 5.0, step: 0.01 };
        Self::fixed(SliceKind::Mixed { n }, vec![ax, ax])
    }

    /// `b = n i`, `(a, c)` in `[0.01, 5]^2` step `0.01`.
    pub fn fixedb(n: f64) -> Self {
        let ax = Axis { lo: 0.01, hi: 5.0, step: 0.01 };
        Self::fixed(SliceKind::FixedB { n }, vec![ax, ax])
    }

    pub fn custom(points: Vec<GParams>) -> Result<Self> {
        Self::new(SliceKind::Custom { points }, Vec::new())
    }

    fn fixed(kind: SliceKind, axes: Vec<Axis>) -> Self {
        Self { kind, axes }
    }

    pub fn with_axes(self, axes: Vec<Axis>) -> Result<Self> {
        Self::new(self.kind, axes)
    }

    pub fn axis_names(&self) -> Vec<&'static str> {
        match self.kind {
            SliceKind::Case1 | SliceKind::Ratio { .. } => vec!["a"],
            SliceKind::Case2 => vec!["a", "b"],
            SliceKind::Mixed { .. } => vec!["r", "a"],
            SliceKind::FixedB { .. } => vec!["a", "c"],
            SliceKind::Custom { .. } => vec!["index"],
        }
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(Axis::len).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid point `i`; the last axis varies fastest.
    pub fn point(&self, i: usize) -> SlicePoint {
        let mut rem = i;
        let mut coords = vec![0.0; self.axes.len()];
        for (k, ax) in self.axes.iter().enumerate().rev() {
            let n = ax.len();
            coords[k] = ax.value(rem % n);
            rem /= n;
        }
        let params = match &self.kind {
            SliceKind::Case1 => GParams::case1(coords[0]),
            SliceKind::Case2 => GParams::case2(coords[0], coords[1]),
            SliceKind::Ratio { r } => {
                let a = coords[0];
                GParams { a: re(a), b: im(r * a), c: im(r * a) }
            }
            SliceKind::Mixed { n } => {
                let (r, a) = (coords[0], coords[1]);
                GParams { a: re(a), b: im(r * a), c: re(n * r * a) }
            }
            SliceKind::FixedB { n } => GParams {
                a: re(coords[0]),
                b: im(*n),
                c: re(coords[1]),
            },
            SliceKind::Custom { points } => points[i],
        };
        SlicePoint { coords, params }
    }

    pub fn points(&self) -> impl Iterator<Item = SlicePoint> + '_ {
        (0..self.len()).map(|i| self.point(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_counts() {
        assert_eq!(Axis::new(0.005, 5.0, 0.005).unwrap().len(), 1000);
        assert_eq!(Axis::new(0.005, 5.0, 0.01).unwrap().len(), 500);
        assert_eq!(Axis::new(1.0, 1.0, 0.5).unwrap().len(), 1);
        assert!(Axis::new(0.0, 1.0, 0.0).is_err());
        assert!(Axis::new(2.0, 1.0, 0.1).is_err());
    }

    #[test]
    fn default_grids() {
        assert_eq!(FamilySlice::case1().len(), 1000);
        assert_eq!(FamilySlice::case2().len(), 250_000);
        assert_eq!(FamilySlice::ratio(0.4).len(), 500);
    }

    #[test]
    fn mixed_point_layout() {
        let s = FamilySlice::mixed(2.0)
            .with_axes(vec![Axis::new(0.5, 1.0, 0.5).unwrap(), Axis::new(1.0, 3.0, 1.0).unwrap()])
            .unwrap();
        assert_eq!(s.len(), 6);
        let p = s.point(4); // r index 1, a index 1
        assert_eq!(p.coords, vec![1.0, 2.0]);
        assert_eq!(p.params.b, im(2.0));
        assert_eq!(p.params.c, re(4.0));
    }

    #[test]
    fn axes_must_match_kind() {
        assert!(FamilySlice::case2().with_axes(vec![Axis::new(0.1, 1.0, 0.1).unwrap()]).is_err());
        assert!(FamilySlice::custom(Vec::new()).is_err());
    }
}
