use std::fmt;

use crate::algebra::WeightPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    North,
    East,
}

impl Step {
    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::North => (0, 1),
            Step::East => (1, 0),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::North => 'N',
            Step::East => 'E',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'N' | 'n' => Some(Step::North),
            'E' | 'e' => Some(Step::East),
            _ => None,
        }
    }
}

pub type Point = (i64, i64);

/// A monotone lattice path given by its start and steps.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    pub start: Point,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        Self { start, steps }
    }

    /// Parses steps written as `N`/`E` letters, separators ignored.
    pub fn parse(start: Point, letters: &str) -> Option<Self> {
        let steps = letters
            .chars()
            .filter(|c| c.is_alphabetic())
            .map(Step::from_letter)
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(start, steps))
    }

    pub fn vertices(&self) -> Vec<Point> {
        let mut p = self.start;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            let (dx, dy) = s.delta();
            p = (p.0 + dx, p.1 + dy);
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> Point {
        *self.vertices().last().unwrap()
    }

    pub fn ends_north(&self) -> bool {
        self.steps.last() == Some(&Step::North)
    }

    pub fn east_steps(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::East).count()
    }

    /// Every vertex satisfies `y >= x + offset`.
    pub fn above_line(&self, offset: i64) -> bool {
        self.vertices().iter().all(|&(x, y)| y >= x + offset)
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Self {
        Self::new((self.start.0 + dx, self.start.1 + dy), self.steps.clone())
    }

    pub fn letters(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:{}", self.start, self.letters())
    }
}

/// Start of path `j`, `S_j = (j, -2j)`.
pub fn start_point(j: usize) -> Point {
    (j as i64, -2 * j as i64)
}

/// End point `E_e = (e, -e)`.
pub fn end_point(e: usize) -> Point {
    (e as i64, -(e as i64))
}

/// Offset of the constraint line `y = x + l - r - 2n + 1`.
pub fn line_offset(n: usize, l: usize, r: usize) -> i64 {
    l as i64 - r as i64 - 2 * n as i64 + 1
}

/// All step sequences of length `len`, North before East at each position.
pub fn all_step_sequences(len: usize) -> Vec<Vec<Step>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                [Step::North, Step::East].into_iter().map(move |st| {
                    let mut v = s.clone();
                    v.push(st);
                    v
                })
            })
            .collect();
    }
    out
}

/// Paths `S_j -> E_e` staying weakly above the line, as
/// `#(ending East) + t·#(ending North)`.
pub fn brute_path_gf(n: usize, l: usize, r: usize, j: usize, e: usize) -> WeightPolynomial {
    let offset = line_offset(n, l, r);
    let target = end_point(e);
    let (mut north, mut east) = (0i64, 0i64);
    for steps in all_step_sequences(j) {
        let p = LatticePath::new(start_point(j), steps);
        if p.end() == target && p.above_line(offset) {
            if p.ends_north() {
                north += 1;
            } else {
                east += 1;
            }
        }
    }
    WeightPolynomial::from_i64s(&[east, north])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_paths() {
        assert_eq!(brute_path_gf(3, 0, 2, 1, 1), WeightPolynomial::t());
        assert_eq!(brute_path_gf(3, 0, 2, 1, 2), WeightPolynomial::one());
        assert!(brute_path_gf(3, 0, 2, 1, 3).is_zero());
    }

    #[test]
    fn path_geometry() {
        let p = LatticePath::parse(start_point(2), "N,E").unwrap();
        assert_eq!(p.end(), end_point(3));
        assert_eq!(p.vertices(), vec![(2, -4), (2, -3), (3, -3)]);
        assert!(!p.ends_north());
        assert_eq!(p.translate(-2, 2).start, (0, -2));
        assert_eq!(all_step_sequences(3).len(), 8);
        assert!(LatticePath::parse((0, 0), "NX").is_none());
    }
}
