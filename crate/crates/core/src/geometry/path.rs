use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{LatticePoint, RatPoint, Segment};
use crate::error::{GoldmanError, Result};
use crate::rat::{parse_rat, Rat};

/// A position on a path: a segment index and a fraction in `[0, 1]` along it.
///
/// Positions order lexicographically, which matches the order along the path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathPos {
    pub segment: usize,
    pub frac: Rat,
}

impl PathPos {
    pub fn new(segment: usize, frac: Rat) -> Self {
        PathPos { segment, frac }
    }

    pub fn start() -> Self {
        PathPos::new(0, Rat::zero())
    }
}

impl fmt::Display for PathPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}", self.segment, self.frac)
    }
}

/// A piecewise-linear path in the covering plane, between integer points.
///
/// Consecutive duplicate vertices are removed on construction, so every
/// segment has nonzero length. A single vertex is the constant path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PLPath {
    vertices: Vec<RatPoint>,
}

impl PLPath {
    pub fn new(vertices: Vec<RatPoint>) -> Result<Self> {
        let mut out: Vec<RatPoint> = Vec::with_capacity(vertices.len());
        for v in vertices {
            if out.last() != Some(&v) {
                out.push(v);
            }
        }
        let (Some(first), Some(last)) = (out.first(), out.last()) else {
            return Err(GoldmanError::InvalidPath("path has no vertices".into()));
        };
        if first.to_lattice().is_none() || last.to_lattice().is_none() {
            return Err(GoldmanError::InvalidPath(
                "path must start and end at integer points".into(),
            ));
        }
        Ok(PLPath { vertices: out })
    }

    pub fn from_lattice<P: Into<LatticePoint> + Copy>(points: &[P]) -> Result<Self> {
        PLPath::new(points.iter().map(|&p| p.into().to_rat()).collect())
    }

    /// The straight path from the origin to `(m, n)`.
    pub fn straight(m: i64, n: i64) -> Self {
        PLPath::segment_between(LatticePoint::ORIGIN, LatticePoint::new(m, n))
    }

    /// The straight path between two lattice points.
    pub fn segment_between(a: LatticePoint, b: LatticePoint) -> Self {
        let mut vertices = vec![a.to_rat()];
        if a != b {
            vertices.push(b.to_rat());
        }
        PLPath { vertices }
    }

    pub fn vertices(&self) -> &[RatPoint] {
        &self.vertices
    }

    pub fn start(&self) -> RatPoint {
        self.vertices[0]
    }

    pub fn end(&self) -> RatPoint {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn start_point(&self) -> LatticePoint {
        self.start().to_lattice().expect("validated integer start")
    }

    /// The integer endpoint of the path.
    pub fn endpoint(&self) -> LatticePoint {
        self.end().to_lattice().expect("validated integer end")
    }

    /// `endpoint - start`, the homotopy class of the loop on the torus.
    pub fn displacement(&self) -> LatticePoint {
        self.endpoint() - self.start_point()
    }

    pub fn segment_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn segment(&self, i: usize) -> Segment {
        Segment {
            start: self.vertices[i],
            end: self.vertices[i + 1],
        }
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.vertices
            .windows(2)
            .map(|w| Segment { start: w[0], end: w[1] })
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    /// True if every vertex lies on the segment from start to end, in order.
    pub fn is_straight(&self) -> bool {
        let d = self.end() - self.start();
        if d.is_zero() {
            return self.vertices.len() == 1;
        }
        let mut prev = Rat::zero();
        for v in &self.vertices[1..] {
            let w = *v - self.start();
            if !d.cross(w).is_zero() {
                return false;
            }
            let t = w.dot(d) / d.dot(d);
            if t <= prev {
                return false;
            }
            prev = t;
        }
        true
    }

    pub fn reverse(&self) -> PLPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        PLPath { vertices }
    }

    pub fn translate(&self, v: LatticePoint) -> PLPath {
        let v = v.to_rat();
        PLPath {
            vertices: self.vertices.iter().map(|&p| p + v).collect(),
        }
    }

    /// `self` followed by `other`; requires `self.end() == other.start()`.
    pub fn concat(&self, other: &PLPath) -> Result<PLPath> {
        if self.end() != other.start() {
            return Err(GoldmanError::ConcatMismatch {
                end: self.end().to_string(),
                start: other.start().to_string(),
            });
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        PLPath::new(vertices)
    }

    /// The position at the very end of the path.
    pub fn end_pos(&self) -> PathPos {
        match self.segment_count() {
            0 => PathPos::start(),
            n => PathPos::new(n - 1, Rat::one()),
        }
    }

    pub fn point_at(&self, pos: PathPos) -> RatPoint {
        if self.segment_count() == 0 {
            return self.start();
        }
        self.segment(pos.segment).point_at(pos.frac)
    }

    /// Vertices of the sub-path from `from` to `to` (`from <= to`), including
    /// both end points. Not necessarily a valid [`PLPath`] since its ends may be
    /// non-integer.
    pub fn sub_path(&self, from: PathPos, to: PathPos) -> Vec<RatPoint> {
        debug_assert!(from <= to);
        let mut out = vec![self.point_at(from)];
        for k in from.segment + 1..=to.segment {
            if k < self.vertices.len() {
                out.push(self.vertices[k]);
            }
        }
        out.push(self.point_at(to));
        out.dedup();
        out
    }

    /// Whether `p` lies on the path.
    pub fn passes_through(&self, p: RatPoint) -> bool {
        if self.segment_count() == 0 {
            return self.start() == p;
        }
        self.segments().any(|s| s.contains(p))
    }
}

impl fmt::Display for PLPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{},{}", v.x, v.y)?;
        }
        Ok(())
    }
}

/// Parses `"x,y;x,y;..."` with rational coordinates (`"1/3"`), or
/// `"straight:m,n"`.
impl FromStr for PLPath {
    type Err = GoldmanError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("straight:") {
            let (m, n) = rest
                .split_once(',')
                .ok_or_else(|| GoldmanError::Parse(format!("expected straight:m,n, got {s:?}")))?;
            let m: i64 = m
                .trim()
                .parse()
                .map_err(|_| GoldmanError::Parse(format!("bad integer {m:?}")))?;
            let n: i64 = n
                .trim()
                .parse()
                .map_err(|_| GoldmanError::Parse(format!("bad integer {n:?}")))?;
            return Ok(PLPath::straight(m, n));
        }
        let mut vertices = vec![];
        for vertex in s.split(';') {
            let (x, y) = vertex
                .split_once(',')
                .ok_or_else(|| GoldmanError::Parse(format!("expected x,y, got {vertex:?}")))?;
            vertices.push(RatPoint::new(parse_rat(x)?, parse_rat(y)?));
        }
        PLPath::new(vertices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, rat};

    fn lattice_rat(x: i64, y: i64) -> RatPoint {
        RatPoint::new(rat(x), rat(y))
    }

    #[test]
    fn parse_and_display() {
        let p: PLPath = "0,0;1/2,1;1,2".parse().unwrap();
        assert_eq!(p.vertices()[1], RatPoint::new(frac(1, 2), rat(1)));
        assert_eq!(p.to_string(), "0,0;1/2,1;1,2");
        assert!(p.is_straight());
        let s: PLPath = "straight:2,-3".parse().unwrap();
        assert_eq!(s, PLPath::straight(2, -3));
        assert_eq!(s.to_string(), "0,0;2,-3");
    }

    #[test]
    fn rejects_bad_input() {
        assert!("0,0;1/2,1".parse::<PLPath>().is_err());
        assert!("0,0;1".parse::<PLPath>().is_err());
        assert!("straight:1".parse::<PLPath>().is_err());
        assert!("".parse::<PLPath>().is_err());
    }

    #[test]
    fn zero_length_segments_are_dropped() {
        let p = PLPath::from_lattice(&[(0, 0), (0, 0), (1, 0), (1, 0), (1, 1)]).unwrap();
        assert_eq!(p.segment_count(), 2);
        assert_eq!(PLPath::straight(0, 0).segment_count(), 0);
    }

    #[test]
    fn straightness() {
        assert!(PLPath::straight(3, 1).is_straight());
        assert!(!PLPath::from_lattice(&[(0, 0), (1, 0), (1, 1)]).unwrap().is_straight());
        // backtracking along the same line is not straight
        assert!(!PLPath::from_lattice(&[(0, 0), (2, 0), (1, 0)]).unwrap().is_straight());
    }

    #[test]
    fn concat_reverse_translate() {
        let a = PLPath::straight(1, 0);
        let b = PLPath::segment_between((1, 0).into(), (1, 1).into());
        let ab = a.concat(&b).unwrap();
        assert_eq!(ab.to_string(), "0,0;1,0;1,1");
        assert_eq!(ab.reverse().to_string(), "1,1;1,0;0,0");
        assert_eq!(ab.translate((2, -1).into()).to_string(), "2,-1;3,-1;3,0");
        assert_eq!(ab.endpoint(), LatticePoint::new(1, 1));
        assert!(b.concat(&a).is_err());
    }

    #[test]
    fn sub_paths() {
        let p = PLPath::from_lattice(&[(0, 0), (2, 0), (2, 2)]).unwrap();
        let from = PathPos::new(0, frac(1, 2));
        let to = PathPos::new(1, frac(1, 2));
        assert_eq!(
            p.sub_path(from, to),
            vec![lattice_rat(1, 0), lattice_rat(2, 0), lattice_rat(2, 1)]
        );
        assert_eq!(p.sub_path(PathPos::start(), PathPos::start()), vec![lattice_rat(0, 0)]);
        assert_eq!(p.sub_path(PathPos::start(), p.end_pos()).len(), 3);
    }
}
