//! Enumeration of matrix tuples with a per-stratum tally.
//!
//! The outermost coordinate is split across workers; each worker tallies its
//! share privately and the tallies are summed, so results do not depend on
//! the number of threads.

use std::ops::AddAssign;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::catalog::{PunctureClass, StratumId};

use super::field::Field;
use super::lines::{eigenlines, has_trace_pm2, is_central, stratum_of, LineSet};
use super::mat::{sl2_elements, Mat2};
use super::{CountOptions, OracleError};

/// Counts indexed like [`StratumId::FIVE`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally(pub [u64; 5]);

impl Tally {
    fn bump(&mut self, s: StratumId) {
        let i = StratumId::FIVE
            .iter()
            .position(|&t| t == s)
            .expect("one of the five");
        self.0[i] += 1;
    }

    pub fn get(&self, s: StratumId) -> u64 {
        StratumId::FIVE
            .iter()
            .position(|&t| t == s)
            .map_or(0, |i| self.0[i])
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl AddAssign for Tally {
    fn add_assign(&mut self, o: Self) {
        for (a, b) in self.0.iter_mut().zip(o.0) {
            *a += b;
        }
    }
}

/// `SL2(F_q)` with the data the classifier needs for each element.
pub(crate) struct Group {
    pub field: Field,
    pub elems: Vec<Mat2>,
    lookup: Vec<u32>,
    lines: Vec<LineSet>,
    central: Vec<bool>,
    pm2: Vec<bool>,
}

impl Group {
    pub fn new(q: u32) -> Result<Self, OracleError> {
        let field = Field::new(q)?;
        let elems = sl2_elements(q);
        let mut lookup = vec![u32::MAX; (q * q * q * q) as usize];
        for (i, m) in elems.iter().enumerate() {
            lookup[m.code(q)] = i as u32;
        }
        Ok(Self {
            lines: elems.iter().map(|m| eigenlines(m, &field)).collect(),
            central: elems.iter().map(|m| is_central(m, q)).collect(),
            pm2: elems.iter().map(|m| has_trace_pm2(m, q)).collect(),
            field,
            elems,
            lookup,
        })
    }

    fn q(&self) -> u32 {
        self.field.q()
    }

    fn index(&self, m: &Mat2) -> usize {
        self.lookup[m.code(self.q())] as usize
    }

    /// Indices of the elements in a puncture class: trace `2` and not `Id`,
    /// trace `-2` and not `-Id`, or `-Id` alone.
    pub fn class_members(&self, class: PunctureClass) -> Vec<u32> {
        let q = self.q();
        let keep = |m: &Mat2| match class {
            PunctureClass::JPlus => m.trace(q) == 2 % q && !m.is_identity(),
            PunctureClass::JMinus => m.trace(q) == (q - 2) % q && !m.is_minus_identity(q),
            PunctureClass::MinusId => m.is_minus_identity(q),
        };
        (0..self.elems.len() as u32)
            .filter(|&i| keep(&self.elems[i as usize]))
            .collect()
    }
}

#[derive(Clone, Copy)]
struct State {
    lines: LineSet,
    central: bool,
    pm2: bool,
    prod: Mat2,
}

impl State {
    fn with(&self, g: &Group, i: usize) -> Self {
        Self {
            lines: self.lines.intersect(&g.lines[i]),
            central: self.central && g.central[i],
            pm2: self.pm2 && g.pm2[i],
            prod: self.prod,
        }
    }
}

/// A relation `[A1,B1]···[Ag,Bg]·C1···Cs = Id` with the last `C` solved for.
struct Relation {
    genus: usize,
    /// Membership mask of the solved class, or `None` when `s = 0`.
    solved: Option<Vec<bool>>,
}

struct Problem<'a> {
    group: &'a Group,
    positions: Vec<Vec<u32>>,
    relation: Option<Relation>,
}

impl Problem<'_> {
    fn size(&self) -> u128 {
        self.positions
            .iter()
            .map(|p| p.len() as u128)
            .try_fold(1u128, |acc, n| acc.checked_mul(n))
            .unwrap_or(u128::MAX)
    }

    fn leaf(&self, st: &State, tally: &mut Tally) {
        let g = self.group;
        match &self.relation {
            None => tally.bump(stratum_of(&st.lines, st.central, st.pm2)),
            Some(Relation { solved: None, .. }) => {
                if st.prod.is_identity() {
                    tally.bump(stratum_of(&st.lines, st.central, st.pm2));
                }
            }
            Some(Relation {
                solved: Some(mask), ..
            }) => {
                let i = g.index(&st.prod.inv_sl2(g.q()));
                if mask[i] {
                    let st = st.with(g, i);
                    tally.bump(stratum_of(&st.lines, st.central, st.pm2));
                }
            }
        }
    }

    fn dfs(&self, depth: usize, st: &State, pending: Option<usize>, tally: &mut Tally) {
        if depth == self.positions.len() {
            self.leaf(st, tally);
            return;
        }
        for &i in &self.positions[depth] {
            self.visit(depth, st, pending, i as usize, tally);
        }
    }

    /// Places element `i` at `depth` and descends. `pending` is the `A` of
    /// an unfinished commutator.
    fn visit(&self, depth: usize, st: &State, pending: Option<usize>, i: usize, tally: &mut Tally) {
        let g = self.group;
        let q = g.q();
        let genus = self.relation.as_ref().map_or(0, |r| r.genus);
        let mut next = st.with(g, i);
        let mut pend = None;
        if depth < 2 * genus {
            if depth.is_multiple_of(2) {
                pend = Some(i);
            } else {
                let a = &g.elems[pending.expect("a precedes b")];
                next.prod = st.prod.mul(&Mat2::commutator(a, &g.elems[i], q), q);
            }
        } else if self.relation.is_some() {
            next.prod = st.prod.mul(&g.elems[i], q);
        }
        self.dfs(depth + 1, &next, pend, tally);
    }

    fn root(&self) -> State {
        State {
            lines: LineSet::full(&self.group.field),
            central: true,
            pm2: true,
            prod: Mat2::identity(),
        }
    }

    fn branch(&self, first: u32) -> Tally {
        let mut tally = Tally::default();
        self.visit(0, &self.root(), None, first as usize, &mut tally);
        tally
    }

    fn run(&self, opts: &CountOptions) -> Result<Tally, OracleError> {
        let size = self.size();
        if size > opts.budget as u128 {
            return Err(OracleError::TooLarge {
                tuples: size,
                budget: opts.budget,
            });
        }
        if self.positions.is_empty() {
            let mut t = Tally::default();
            self.leaf(&self.root(), &mut t);
            return Ok(t);
        }
        Ok(run_branches(&self.positions[0], opts, |i| self.branch(i)))
    }
}

#[cfg(feature = "parallel")]
fn run_branches<F>(firsts: &[u32], opts: &CountOptions, f: F) -> Tally
where
    F: Fn(u32) -> Tally + Sync,
{
    let work = || {
        firsts
            .par_iter()
            .map(|&i| f(i))
            .reduce(Tally::default, |mut a, b| {
                a += b;
                a
            })
    };
    match opts.threads {
        Some(1) => run_sequential(firsts, f),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        },
        None => work(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_branches<F>(firsts: &[u32], _opts: &CountOptions, f: F) -> Tally
where
    F: Fn(u32) -> Tally,
{
    run_sequential(firsts, f)
}

fn run_sequential<F: Fn(u32) -> Tally>(firsts: &[u32], f: F) -> Tally {
    let mut t = Tally::default();
    for &i in firsts {
        t += f(i);
    }
    t
}

/// Puncture order with the central classes first: they commute with
/// everything, so moving them does not change the variety, and the class
/// solved for at the end is then the largest.
fn central_first(punctures: &[PunctureClass]) -> Vec<PunctureClass> {
    let mut out: Vec<PunctureClass> = punctures
        .iter()
        .copied()
        .filter(|&p| p == PunctureClass::MinusId)
        .collect();
    out.extend(
        punctures
            .iter()
            .copied()
            .filter(|&p| p != PunctureClass::MinusId),
    );
    out
}

/// Tuples `(A_1..A_n, C_1..C_s)` with `A_i` in SL2 and `C_j` in the given
/// classes.
pub(crate) fn tally_free(
    group: &Group,
    n: u32,
    punctures: &[PunctureClass],
    opts: &CountOptions,
) -> Result<Tally, OracleError> {
    let all: Vec<u32> = (0..group.elems.len() as u32).collect();
    let mut positions = vec![all; n as usize];
    positions.extend(punctures.iter().map(|&c| group.class_members(c)));
    Problem {
        group,
        positions,
        relation: None,
    }
    .run(opts)
}

/// Tuples `(A_1, B_1, .., A_g, B_g, C_1..C_s)` with
/// `[A_1,B_1]···[A_g,B_g]·C_1···C_s = Id`.
pub(crate) fn tally_surface(
    group: &Group,
    g: u32,
    punctures: &[PunctureClass],
    opts: &CountOptions,
) -> Result<Tally, OracleError> {
    let all: Vec<u32> = (0..group.elems.len() as u32).collect();
    let mut positions = vec![all; 2 * g as usize];
    let ordered = central_first(punctures);
    let solved = ordered.last().map(|&last| {
        let mut mask = vec![false; group.elems.len()];
        for i in group.class_members(last) {
            mask[i as usize] = true;
        }
        mask
    });
    if !ordered.is_empty() {
        positions.extend(
            ordered[..ordered.len() - 1]
                .iter()
                .map(|&c| group.class_members(c)),
        );
    }
    Problem {
        group,
        positions,
        relation: Some(Relation {
            genus: g as usize,
            solved,
        }),
    }
    .run(opts)
}
