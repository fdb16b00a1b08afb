use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Lattice point of `Z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn step(self, s: Step) -> Point {
        match s {
            Step::E => Point::new(self.x + 1, self.y),
            Step::S => Point::new(self.x, self.y - 1),
        }
    }

    /// `x - y + 1`: the index of a step leaving this point on a path from the diagonal.
    pub fn label(self) -> i64 {
        self.x - self.y + 1
    }
}

impl From<[i64; 2]> for Point {
    fn from([x, y]: [i64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [i64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// `(x, y) -> (x + 1, y)`
    E,
    /// `(x, y) -> (x, y - 1)`
    S,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::S => 'S',
        }
    }
}

/// Monotone south-east path, stored as its start and step word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    start: Point,
    word: Vec<Step>,
}

impl Path {
    pub fn new(start: Point, word: Vec<Step>) -> Self {
        Path { start, word }
    }

    pub fn parse(start: Point, word: &str) -> Result<Self> {
        let word = word
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'E' => Ok(Step::E),
                'S' => Ok(Step::S),
                _ => Err(Error::invalid(
                    "path",
                    format!("word position {}: {c:?} is not E or S", i + 1),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Path { start, word })
    }

    pub fn start(&self) -> Point {
        self.start
    }

    pub fn word(&self) -> &[Step] {
        &self.word
    }

    pub fn word_string(&self) -> String {
        self.word.iter().map(|s| s.as_char()).collect()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn east_steps(&self) -> usize {
        self.word.iter().filter(|&&s| s == Step::E).count()
    }

    pub fn end(&self) -> Point {
        let e = self.east_steps() as i64;
        let s = self.word.len() as i64 - e;
        Point::new(self.start.x + e, self.start.y - s)
    }

    pub fn first_step(&self) -> Option<Step> {
        self.word.first().copied()
    }

    pub fn last_step(&self) -> Option<Step> {
        self.word.last().copied()
    }

    /// Visited points, start and end included (`len() + 1` of them).
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        std::iter::once(self.start).chain(self.word.iter().scan(self.start, |p, &s| {
            *p = p.step(s);
            Some(*p)
        }))
    }

    /// Each step paired with the point it leaves.
    pub fn edges(&self) -> impl Iterator<Item = (Point, Step)> + '_ {
        self.points().zip(self.word.iter().copied())
    }

    /// 180° rotation about the midpoint of the endpoints: same start and end, reversed word.
    pub fn reversed(&self) -> Path {
        Path {
            start: self.start,
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// Splits after the first `k` steps.
    pub fn split_at(&self, k: usize) -> (&[Step], &[Step]) {
        self.word.split_at(k)
    }

    /// Number of steps taken before first reaching `p`.
    pub fn arrival(&self, p: Point) -> Option<usize> {
        self.points().position(|q| q == p)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.word_string())
    }
}

#[derive(Serialize, Deserialize)]
struct PathJson {
    start: Point,
    word: String,
}

impl Serialize for Path {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PathJson {
            start: self.start,
            word: self.word_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Path {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PathJson::deserialize(d)?;
        Path::parse(raw.start, &raw.word).map_err(D::Error::custom)
    }
}

/// Every monotone path `from -> to`, east-first words first.
pub fn paths_between(from: Point, to: Point) -> Vec<Path> {
    let dx = to.x - from.x;
    let dy = from.y - to.y;
    if dx < 0 || dy < 0 {
        return Vec::new();
    }
    let (dx, dy) = (dx as usize, dy as usize);
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(dx + dy);
    fn rec(from: Point, e: usize, s: usize, word: &mut Vec<Step>, out: &mut Vec<Path>) {
        if e == 0 && s == 0 {
            out.push(Path::new(from, word.clone()));
            return;
        }
        if e > 0 {
            word.push(Step::E);
            rec(from, e - 1, s, word, out);
            word.pop();
        }
        if s > 0 {
            word.push(Step::S);
            rec(from, e, s - 1, word, out);
            word.pop();
        }
    }
    rec(from, dx, dy, &mut word, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::binomial;
    use num_bigint::BigInt;

    #[test]
    fn geometry() {
        let p = Path::parse(Point::new(-1, -1), "ESE").unwrap();
        assert_eq!(p.end(), Point::new(1, -2));
        let pts: Vec<_> = p.points().collect();
        assert_eq!(
            pts,
            vec![
                Point::new(-1, -1),
                Point::new(0, -1),
                Point::new(0, -2),
                Point::new(1, -2)
            ]
        );
        assert_eq!(p.arrival(Point::new(0, -2)), Some(2));
        assert_eq!(p.arrival(Point::new(5, 5)), None);
        assert_eq!(p.reversed().word_string(), "ESE");
        let q = Path::parse(Point::new(0, 0), "ESS").unwrap();
        assert_eq!(q.reversed().word_string(), "SSE");
        assert_eq!(q.reversed().end(), q.end());
    }

    #[test]
    fn parse_rejects_other_letters() {
        let err = Path::parse(Point::new(0, 0), "EXS").unwrap_err();
        assert!(err.to_string().contains("position 2"), "{err}");
    }

    #[test]
    fn json() {
        let p = Path::parse(Point::new(-1, -1), "ES").unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"start":[-1,-1],"word":"ES"}"#);
        assert_eq!(serde_json::from_str::<Path>(&s).unwrap(), p);
        assert!(serde_json::from_str::<Path>(r#"{"start":[0,0],"word":"EN"}"#).is_err());
    }

    #[test]
    fn path_counts_are_binomial() {
        for dx in 0..5i64 {
            for dy in 0..5i64 {
                let ps = paths_between(Point::new(0, 0), Point::new(dx, -dy));
                assert_eq!(BigInt::from(ps.len()), binomial(dx + dy, dy));
                assert!(ps.iter().all(|p| p.end() == Point::new(dx, -dy)));
            }
        }
        assert!(paths_between(Point::new(0, 0), Point::new(-1, -3)).is_empty());
        assert!(paths_between(Point::new(0, 0), Point::new(1, 1)).is_empty());
    }
}
