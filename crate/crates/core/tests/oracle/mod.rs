//! Brute-force total Chern classes on `P^1 x P^1`.
//!
//! `A^*(Q) = Z[h1, h2] / (h1^2, h2^2)` with `h1 h2 = [pt]`. A total Chern class is
//! `1 + x h1 + y h2 + z pt`; `c(O(a,b)) = 1 + a h1 + b h2`, and exact sequences
//! multiply. Nothing here touches `KClass` or `ch2`.
#![allow(dead_code)]

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chern {
    pub one: i64,
    pub h1: i64,
    pub h2: i64,
    pub pt: i64,
}

impl Chern {
    pub const ONE: Chern = Chern { one: 1, h1: 0, h2: 0, pt: 0 };

    pub fn line(a: i64, b: i64) -> Chern {
        Chern { one: 1, h1: a, h2: b, pt: 0 }
    }

    /// `c(k(p))` from the Koszul complex of a point cut out by two fibers,
    /// `0 -> O(-1,-1) -> O(-1,0) + O(0,-1) -> O -> k(p) -> 0`.
    pub fn point() -> Chern {
        Chern::line(0, 0).mul(Chern::line(-1, -1)).mul(Chern::line(-1, 0).inverse()).mul(Chern::line(0, -1).inverse())
    }

    /// `c(O_D) = c(O) / c(O(-D))`.
    pub fn curve(a: i64, b: i64) -> Chern {
        Chern::line(-a, -b).inverse()
    }

    pub fn mul(self, o: Chern) -> Chern {
        Chern {
            one: self.one * o.one,
            h1: self.one * o.h1 + self.h1 * o.one,
            h2: self.one * o.h2 + self.h2 * o.one,
            pt: self.one * o.pt + self.pt * o.one + self.h1 * o.h2 + self.h2 * o.h1,
        }
    }

    /// Inverse of a unit `1 + u`: `1 - u + u^2`.
    pub fn inverse(self) -> Chern {
        assert_eq!(self.one, 1);
        let u = Chern { one: 0, ..self };
        let u2 = u.mul(u);
        Chern { one: 1, h1: -u.h1, h2: -u.h2, pt: -u.pt + u2.pt }
    }

    pub fn pow(self, n: i64) -> Chern {
        let base = if n < 0 { self.inverse() } else { self };
        (0..n.abs()).fold(Chern::ONE, |acc, _| acc.mul(base))
    }

    pub fn c1(self) -> (i64, i64) {
        (self.h1, self.h2)
    }

    pub fn c2(self) -> i64 {
        self.pt
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coker {
    Point,
    Structure,
    Curve(i64, i64),
}

/// A resolution `0 -> sub -> mid -> E -> coker -> 0` with concrete multiplicities.
#[derive(Debug, Clone)]
pub struct Display {
    pub sub: Vec<(i64, i64, i64)>,
    pub mid: Vec<(i64, i64, i64)>,
    pub coker: Option<Coker>,
}

impl Display {
    fn split(mid: Vec<(i64, i64, i64)>) -> Display {
        Display { sub: vec![], mid, coker: None }
    }

    fn res(sub: Vec<(i64, i64, i64)>, mid: Vec<(i64, i64, i64)>) -> Display {
        Display { sub, mid, coker: None }
    }

    fn rank(&self) -> i64 {
        let r = |v: &[(i64, i64, i64)]| v.iter().map(|t| t.2).sum::<i64>();
        let c = match self.coker {
            Some(Coker::Structure) => 1,
            _ => 0,
        };
        r(&self.mid) - r(&self.sub) + c
    }

    /// Total Chern class of `E`.
    pub fn chern(&self) -> Chern {
        let mut c = Chern::ONE;
        for &(a, b, m) in &self.mid {
            c = c.mul(Chern::line(a, b).pow(m));
        }
        for &(a, b, m) in &self.sub {
            c = c.mul(Chern::line(a, b).pow(-m));
        }
        match self.coker {
            Some(Coker::Point) => c.mul(Chern::point()),
            Some(Coker::Structure) => c,
            Some(Coker::Curve(a, b)) => c.mul(Chern::curve(a, b)),
            None => c,
        }
    }

    /// `(rank, c1, c2)` by Whitney expansion.
    pub fn numerics(&self) -> (i64, (i64, i64), i64) {
        let c = self.chern();
        (self.rank(), c.c1(), c.c2())
    }
}

/// The `det = O(2,2)` list transcribed from the classification, at rank `r`,
/// keyed by case label. Only displayed families; swapped twins are the caller's job.
pub fn main22_displays(r: i64) -> Vec<(&'static str, Display)> {
    use Display as D;
    vec![
        ("1", D::split(vec![(2, 2, 1), (0, 0, r - 1)])),
        ("2a", D::split(vec![(2, 1, 1), (0, 1, 1), (0, 0, r - 2)])),
        ("2b", D::split(vec![(1, 2, 1), (1, 0, 1), (0, 0, r - 2)])),
        ("3", D::split(vec![(1, 1, 2), (0, 0, r - 2)])),
        ("4", D::res(vec![(0, 0, 1)], vec![(1, 1, 1), (1, 0, 1), (0, 1, 1), (0, 0, r - 2)])),
        ("5", D::res(vec![(-1, -1, 1)], vec![(1, 1, 1), (0, 0, r)])),
        ("6", D::res(vec![(0, 0, 2)], vec![(1, 0, 2), (0, 1, 2), (0, 0, r - 2)])),
        ("6-1", D::res(vec![(0, 0, 1)], vec![(2, 0, 1), (0, 1, 2), (0, 0, r - 2)])),
        ("6-1-1", D::split(vec![(2, 0, 1), (0, 2, 1), (0, 0, r - 2)])),
        ("6-1-2", D::split(vec![(2, 0, 1), (0, 1, 2), (0, 0, r - 3)])),
        ("6-2", D::split(vec![(1, 0, 2), (0, 1, 2), (0, 0, r - 4)])),
        ("6-3", D::res(vec![(0, -1, 1)], vec![(1, 0, 2), (0, 1, 1), (0, 0, r - 2)])),
        ("7", D::res(vec![(-1, -1, 1), (-1, 0, 1), (0, -1, 1)], vec![(0, 0, r + 3)])),
        ("8", D::res(vec![(-1, -2, 1)], vec![(1, 0, 1), (0, 0, r)])),
        ("9", D::res(vec![(-1, -1, 2)], vec![(0, 0, r + 2)])),
        ("10", D::res(vec![(-2, -2, 1)], vec![(0, 0, r + 1)])),
        ("11", D { sub: vec![(-2, -2, 1)], mid: vec![(0, 0, r + 1)], coker: Some(Coker::Point) }),
        ("12", D { sub: vec![(-2, -2, 1)], mid: vec![(0, 0, r)], coker: Some(Coker::Structure) }),
        ("13", D::res(vec![(-1, -1, 4)], vec![(0, 0, r), (-1, 0, 2), (0, -1, 2)])),
    ]
}

/// The `det = O(2,1)` list.
pub fn quadric21_displays(r: i64) -> Vec<(&'static str, Display)> {
    use Display as D;
    vec![
        ("1", D::split(vec![(2, 1, 1), (0, 0, r - 1)])),
        ("2", D::split(vec![(1, 1, 1), (1, 0, 1), (0, 0, r - 2)])),
        ("3", D::res(vec![(0, 0, 1)], vec![(1, 0, 2), (0, 1, 1), (0, 0, r - 2)])),
        ("4", D::res(vec![(-1, -1, 1), (-1, 0, 1)], vec![(0, 0, r + 2)])),
        ("5", D::res(vec![(-2, -1, 1)], vec![(0, 0, r + 1)])),
    ]
}

/// `c(Q)` for `0 -> sub -> mid -> Q -> 0` where sub and mid are given by their
/// line-bundle splittings.
pub fn whitney_quotient(sub: &[(i64, i64)], mid: &[(i64, i64)]) -> (i64, (i64, i64), i64) {
    let d = Display {
        sub: sub.iter().map(|&(a, b)| (a, b, 1)).collect(),
        mid: mid.iter().map(|&(a, b)| (a, b, 1)).collect(),
        coker: None,
    };
    d.numerics()
}
