use serde::{Deserialize, Serialize};

use crate::catalog::StratumId;

use super::field::{Field, FieldElem};
use super::mat::Mat2;

/// A point of `P1(F_{q²})`: `[x : 1]` or `[1 : 0]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProjPoint {
    Affine(FieldElem),
    Infinity,
}

/// A subset of `P1(F_{q²})`, at most `13² + 1 = 170` points.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LineSet {
    bits: [u64; 3],
}

impl LineSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn full(field: &Field) -> Self {
        let mut s = Self::empty();
        for i in 0..point_count(field) {
            s.insert_index(i);
        }
        s
    }

    fn insert_index(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn insert(&mut self, field: &Field, p: ProjPoint) {
        self.insert_index(point_index(field, p));
    }

    pub fn contains(&self, field: &Field, p: ProjPoint) -> bool {
        let i = point_index(field, p);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == [0; 3]
    }

    pub fn intersect(&self, other: &Self) -> Self {
        Self {
            bits: [
                self.bits[0] & other.bits[0],
                self.bits[1] & other.bits[1],
                self.bits[2] & other.bits[2],
            ],
        }
    }

    pub fn points(&self, field: &Field) -> Vec<ProjPoint> {
        (0..point_count(field))
            .filter(|&i| self.bits[i / 64] >> (i % 64) & 1 == 1)
            .map(|i| point_at(field, i))
            .collect()
    }
}

fn point_count(field: &Field) -> usize {
    (field.q() * field.q()) as usize + 1
}

fn point_index(field: &Field, p: ProjPoint) -> usize {
    match p {
        ProjPoint::Affine(x) => field.index(x),
        ProjPoint::Infinity => (field.q() * field.q()) as usize,
    }
}

fn point_at(field: &Field, i: usize) -> ProjPoint {
    if i == (field.q() * field.q()) as usize {
        ProjPoint::Infinity
    } else {
        ProjPoint::Affine(field.from_index(i))
    }
}

/// Whether `m` maps the line `p` to itself.
pub fn fixes_line(m: &Mat2, p: ProjPoint, field: &Field) -> bool {
    match p {
        ProjPoint::Infinity => m.c == 0,
        ProjPoint::Affine(x) => {
            // m (x, 1) ∥ (x, 1)  ⇔  a x + b = x (c x + d)
            let e = |v: u32| field.base(v as i64);
            let lhs = field.add(field.mul(e(m.a), x), e(m.b));
            let rhs = field.mul(x, field.add(field.mul(e(m.c), x), e(m.d)));
            lhs == rhs
        }
    }
}

/// Eigenlines of one matrix, found by testing every point.
pub fn eigenlines(m: &Mat2, field: &Field) -> LineSet {
    let mut s = LineSet::empty();
    for i in 0..point_count(field) {
        if fixes_line(m, point_at(field, i), field) {
            s.insert_index(i);
        }
    }
    s
}

/// Lines fixed by every matrix of `tuple`.
pub fn common_eigenlines(tuple: &[Mat2], field: &Field) -> LineSet {
    tuple.iter().fold(LineSet::full(field), |acc, m| {
        acc.intersect(&eigenlines(m, field))
    })
}

/// Stratum of a tuple from its common eigenlines and two flags: whether
/// every entry is `±Id`, and whether every trace is `±2`.
pub(crate) fn stratum_of(common: &LineSet, all_central: bool, all_pm2: bool) -> StratumId {
    if all_central {
        StratumId::Iota
    } else if common.is_empty() {
        StratumId::Irr
    } else if common.len() >= 2 {
        StratumId::DeltaHat
    } else if all_pm2 {
        StratumId::UpsilonHat
    } else {
        StratumId::Varrho
    }
}

pub(crate) fn is_central(m: &Mat2, q: u32) -> bool {
    m.is_identity() || m.is_minus_identity(q)
}

pub(crate) fn has_trace_pm2(m: &Mat2, q: u32) -> bool {
    let t = m.trace(q);
    t == 2 % q || t == (q - 2) % q
}

pub fn classify_tuple(tuple: &[Mat2], field: &Field) -> StratumId {
    let q = field.q();
    stratum_of(
        &common_eigenlines(tuple, field),
        tuple.iter().all(|m| is_central(m, q)),
        tuple.iter().all(|m| has_trace_pm2(m, q)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_eigenline_sets() {
        let f = Field::new(3).unwrap();
        let id = Mat2::identity();
        assert_eq!(common_eigenlines(&[id, id], &f).len(), 10);
        let up = Mat2::new(3, 1, 1, 0, 1);
        let low = Mat2::new(3, 1, 0, 1, 1);
        assert!(common_eigenlines(&[up, low], &f).is_empty());

        let f5 = Field::new(5).unwrap();
        let diag = Mat2::new(5, 2, 0, 0, 3);
        let pts = common_eigenlines(&[diag, id], &f5).points(&f5);
        assert_eq!(pts, vec![ProjPoint::Affine(f5.zero()), ProjPoint::Infinity]);
    }

    #[test]
    fn documented_classifications() {
        let f = Field::new(3).unwrap();
        let id = Mat2::identity();
        let up = Mat2::new(3, 1, 1, 0, 1);
        let low = Mat2::new(3, 1, 0, 1, 1);
        assert_eq!(
            classify_tuple(&[id, Mat2::minus_identity(3)], &f),
            StratumId::Iota
        );
        assert_eq!(classify_tuple(&[up, id], &f), StratumId::UpsilonHat);
        assert_eq!(classify_tuple(&[up, low], &f), StratumId::Irr);
        let f5 = Field::new(5).unwrap();
        let diag = Mat2::new(5, 2, 0, 0, 3);
        assert_eq!(classify_tuple(&[diag, id], &f5), StratumId::DeltaHat);
        let tri = Mat2::new(5, 2, 1, 0, 3);
        assert_eq!(classify_tuple(&[diag, tri], &f5), StratumId::Varrho);
    }

    #[test]
    fn nonsplit_torus_has_two_conjugate_lines() {
        // rotation-like element whose eigenvalues live in F_{q²} only
        let f = Field::new(3).unwrap();
        let m = Mat2::new(3, 0, -1, 1, 0);
        let pts = common_eigenlines(&[m], &f).points(&f);
        assert_eq!(pts.len(), 2);
        for p in pts {
            match p {
                ProjPoint::Affine(x) => assert!(!f.is_base(x)),
                ProjPoint::Infinity => panic!("not an eigenline"),
            }
        }
    }
}
