use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use super::rat::{int, Rat};

/// A point (or displacement) in exact rational 3-space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Self {
        Point { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Point::new(int(x), int(y), int(z))
    }

    pub fn origin() -> Self {
        Point::from_ints(0, 0, 0)
    }

    pub fn coords(&self) -> [&Rat; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn scale(&self, s: &Rat) -> Point {
        Point::new(&self.x * s, &self.y * s, &self.z * s)
    }

    pub fn dot(&self, o: &Point) -> Rat {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn cross(&self, o: &Point) -> Point {
        Point::new(
            &self.y * &o.z - &self.z * &o.y,
            &self.z * &o.x - &self.x * &o.z,
            &self.x * &o.y - &self.y * &o.x,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// `self + t (to - self)`.
    pub fn lerp(&self, to: &Point, t: &Rat) -> Point {
        self + &(to - self).scale(t)
    }

    pub fn midpoint(&self, o: &Point) -> Point {
        (self + o).scale(&Rat::new(1.into(), 2.into()))
    }

    /// Vertex average of a non-empty point set.
    pub fn centroid<'a, I>(points: I) -> Point
    where
        I: IntoIterator<Item = &'a Point>,
    {
        let mut sum = Point::origin();
        let mut n = 0i64;
        for p in points {
            sum = &sum + p;
            n += 1;
        }
        assert!(n > 0, "centroid of an empty point set");
        sum.scale(&Rat::new(1.into(), n.into()))
    }

    pub fn max_abs_coord(&self) -> Rat {
        let mut m = self.x.abs();
        for c in [&self.y, &self.z] {
            if c.abs() > m {
                m = c.abs();
            }
        }
        m
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-&self.x, -&self.y, -&self.z)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Oriented plane `{p : normal . p = offset}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Plane {
    pub normal: Point,
    pub offset: Rat,
}

impl Plane {
    /// Plane through three points, oriented by the right-hand rule on
    /// `(b - a) x (c - a)`. `None` when the points are collinear.
    pub fn through(a: &Point, b: &Point, c: &Point) -> Option<Plane> {
        let normal = (b - a).cross(&(c - a));
        if normal.is_zero() {
            return None;
        }
        let offset = normal.dot(a);
        Some(Plane { normal, offset })
    }

    pub fn with_normal(normal: Point, through: &Point) -> Option<Plane> {
        if normal.is_zero() {
            return None;
        }
        let offset = normal.dot(through);
        Some(Plane { normal, offset })
    }

    /// Signed evaluation `normal . p - offset`.
    pub fn eval(&self, p: &Point) -> Rat {
        self.normal.dot(p) - &self.offset
    }

    pub fn side(&self, p: &Point) -> i8 {
        sign(&self.eval(p))
    }

    pub fn flipped(&self) -> Plane {
        Plane {
            normal: -&self.normal,
            offset: -&self.offset,
        }
    }

    /// Parallel plane shifted so that it evaluates to zero at `eval == shift`.
    pub fn shifted(&self, shift: &Rat) -> Plane {
        Plane {
            normal: self.normal.clone(),
            offset: &self.offset + shift,
        }
    }
}

pub fn sign(r: &Rat) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}
