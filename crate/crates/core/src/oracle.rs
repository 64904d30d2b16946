//! Definition-level reference computations and exhaustive cross-checks of
//! the closed forms.
//!
//! The oracle functions only use the order, meet and join of a snapshot.
//! [`verify_family`] compares every closed form against them, and checks the
//! order-theoretic facts the closed forms rely on.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::birkhoff::{poset_size, verify_birkhoff, BirkhoffPath};
use crate::error::{Error, Result};
use crate::heyting::{
    implies_a, implies_a_blocks, implies_b, implies_mono_blocks, is_regular_a_returns, is_regular_b_returns,
};
use crate::lattice::{
    binomial, word_prefix_leq, EnumerationGuard, Family, LatticePath, LatticeSnapshot, Params,
};
use crate::paths::{
    embed_b_to_a, embed_b_to_a_word, psi, psi_word, restrict_a_to_b, HeightSeqA, HeightSeqB, MonotonePath,
};

/// Greatest `z` in the snapshot with `p1 ∧ z <= p2`.
///
/// Fails if the set of such `z` is empty or has no maximum.
pub fn oracle_implies<P: LatticePath>(snap: &LatticeSnapshot<P>, p1: &P, p2: &P) -> Result<P> {
    for p in [p1, p2] {
        if snap.id_of(p).is_none() {
            return Err(Error::NotInLattice(p.to_string()));
        }
    }
    let meets: Vec<P> = snap.elements().iter().map(|z| p1.meet_with(z)).collect();
    let id = residual_max(snap.elements(), &meets, p2)
        .map_err(|w| Error::NoResidual(format!("{p1} -> {p2}: {w}")))?;
    Ok(snap.get(id).clone())
}

/// Oracle implication of `p1` into every element, as ids.
pub fn oracle_implies_row<P: LatticePath>(snap: &LatticeSnapshot<P>, p1: usize) -> Result<Vec<usize>> {
    let a = snap.get(p1);
    let meets: Vec<P> = snap.elements().iter().map(|z| a.meet_with(z)).collect();
    snap.elements()
        .iter()
        .map(|p2| {
            residual_max(snap.elements(), &meets, p2)
                .map_err(|w| Error::NoResidual(format!("{a} -> {p2}: {w}")))
        })
        .collect()
}

pub fn oracle_pseudo<P: LatticePath>(snap: &LatticeSnapshot<P>, p: &P) -> Result<P> {
    oracle_implies(snap, p, snap.bottom())
}

/// Ids follow a linear extension, so the maximum of the residual set, if it
/// exists, is its last member.
fn residual_max<P: LatticePath>(elements: &[P], meets: &[P], p2: &P) -> std::result::Result<usize, String> {
    let top = (0..elements.len())
        .rev()
        .find(|&z| meets[z].dominated_by(p2))
        .ok_or_else(|| "no element z satisfies p1 ∧ z <= p2".to_string())?;
    match (0..top).find(|&z| meets[z].dominated_by(p2) && !elements[z].dominated_by(&elements[top])) {
        Some(z) => Err(format!("{} and {} are incomparable candidates", elements[z], elements[top])),
        None => Ok(top),
    }
}

/// True when `p` has exactly one lower cover in the snapshot.
pub fn oracle_join_irreducible<P: LatticePath>(snap: &LatticeSnapshot<P>, p: &P) -> bool {
    snap.id_of(p).is_some_and(|id| snap.lower_covers(id).len() == 1)
}

/// A named exhaustive comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Counts,
    Order,
    Bounds,
    Distributive,
    Impl,
    Pseudo,
    Regular,
    Irreducible,
    Birkhoff,
    Psi,
    Embedding,
    Interval,
    Equalizer,
}

impl Check {
    /// Every check, in execution order.
    pub const ALL: [Check; 13] = [
        Check::Counts,
        Check::Order,
        Check::Bounds,
        Check::Distributive,
        Check::Impl,
        Check::Pseudo,
        Check::Regular,
        Check::Irreducible,
        Check::Birkhoff,
        Check::Psi,
        Check::Embedding,
        Check::Interval,
        Check::Equalizer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Counts => "counts",
            Check::Order => "order",
            Check::Bounds => "bounds",
            Check::Distributive => "distributive",
            Check::Impl => "impl",
            Check::Pseudo => "pseudo",
            Check::Regular => "regular",
            Check::Irreducible => "irreducible",
            Check::Birkhoff => "birkhoff",
            Check::Psi => "psi",
            Check::Embedding => "embedding",
            Check::Interval => "interval",
            Check::Equalizer => "equalizer",
        }
    }

    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        if s == "all" {
            return Ok(Check::ALL.to_vec());
        }
        s.split(',').map(str::parse).collect()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse { input: s.to_string(), reason: "unknown check".into() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: Check,
    pub status: Status,
    /// Number of elements, pairs or triples examined.
    pub cases: u64,
    /// First counterexample in id order, or the reason for skipping.
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn from_witness(check: Check, cases: u64, witness: Option<String>) -> Self {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        CheckOutcome { check, status, cases, detail: witness }
    }

    fn skipped(check: Check, reason: impl Into<String>) -> Self {
        CheckOutcome { check, status: Status::Skipped, cases: 0, detail: Some(reason.into()) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub params: Params,
    pub elements: usize,
    pub outcomes: Vec<CheckOutcome>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.status != Status::Fail)
    }

    pub fn outcome(&self, check: Check) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| o.check == check)
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} ({} elements)", self.params, self.elements)?;
        for o in &self.outcomes {
            write!(f, "  {:<13} {:<7} {:>10} cases", o.check.name(), o.status, o.cases)?;
            if let Some(d) = &o.detail {
                write!(f, "  {d}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub parallel: bool,
    pub guard: EnumerationGuard,
}

/// Runs `checks` (in canonical order, deduplicated) over the family.
pub fn verify_family(params: Params, checks: &[Check], options: &VerifyOptions) -> Result<FamilyReport> {
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    match params.family() {
        Family::A => verify_typed::<HeightSeqA>(params, &checks, options),
        Family::B => verify_typed::<HeightSeqB>(params, &checks, options),
        Family::Mono => verify_typed::<MonotonePath>(params, &checks, options),
    }
}

fn verify_typed<P: Verify>(
    params: Params,
    checks: &[Check],
    options: &VerifyOptions,
) -> Result<FamilyReport> {
    let snap = LatticeSnapshot::<P>::enumerate_guarded(params, &options.guard)?;
    let ctx = Ctx { snap: &snap, options };
    let mut outcomes = Vec::with_capacity(checks.len());
    for &check in checks {
        outcomes.push(ctx.run(check)?);
    }
    Ok(FamilyReport { params, elements: snap.len(), outcomes })
}

/// First `Some` of `f` over `0..len`, in index order either way.
fn sweep<F>(len: usize, parallel: bool, f: F) -> Option<String>
where
    F: Fn(usize) -> Option<String> + Sync + Send,
{
    if parallel {
        (0..len).into_par_iter().find_map_first(f)
    } else {
        (0..len).find_map(f)
    }
}

struct Ctx<'a, P: LatticePath> {
    snap: &'a LatticeSnapshot<P>,
    options: &'a VerifyOptions,
}

impl<P: Verify> Ctx<'_, P> {
    fn len(&self) -> usize {
        self.snap.len()
    }

    fn e(&self, id: usize) -> &P {
        self.snap.get(id)
    }

    fn pairs(&self) -> u64 {
        (self.len() as u64).pow(2)
    }

    fn triples(&self) -> u64 {
        (self.len() as u64).pow(3)
    }

    fn sweep(&self, f: impl Fn(usize) -> Option<String> + Sync + Send) -> Option<String> {
        sweep(self.len(), self.options.parallel, f)
    }

    fn run(&self, check: Check) -> Result<CheckOutcome> {
        let (cases, witness) = match check {
            Check::Counts => self.counts(),
            Check::Order => self.order(),
            Check::Bounds => self.bounds(),
            Check::Distributive => self.distributive(),
            Check::Impl => self.implication(),
            Check::Pseudo => self.pseudo(),
            Check::Regular => self.regular(),
            Check::Irreducible => self.irreducible(),
            Check::Birkhoff => {
                let report = verify_birkhoff::<P>(self.snap.params())?;
                (self.pairs(), report.failure)
            }
            Check::Psi | Check::Embedding | Check::Interval | Check::Equalizer => {
                return P::structural(check, self.snap, self.options);
            }
        };
        Ok(CheckOutcome::from_witness(check, cases, witness))
    }

    fn counts(&self) -> (u64, Option<String>) {
        let expected = self.snap.params().expected_count();
        let witness = (self.len() as u128 != expected)
            .then(|| format!("enumerated {} elements, expected {expected}", self.len()));
        (1, witness)
    }

    fn order(&self) -> (u64, Option<String>) {
        let witness = self.sweep(|a| {
            let pa = self.e(a);
            if !pa.dominated_by(pa) {
                return Some(format!("{pa} is not reflexive"));
            }
            for b in 0..self.len() {
                let pb = self.e(b);
                let ab = pa.dominated_by(pb);
                if ab && a > b {
                    return Some(format!("{pa} <= {pb} against the id order"));
                }
                if ab && a != b && pb.dominated_by(pa) {
                    return Some(format!("{pa} and {pb} violate antisymmetry"));
                }
                if ab {
                    for c in b..self.len() {
                        let pc = self.e(c);
                        if pb.dominated_by(pc) && !pa.dominated_by(pc) {
                            return Some(format!("{pa} <= {pb} <= {pc} violates transitivity"));
                        }
                    }
                }
                if let Some(w) = P::order_extra(pa, pb) {
                    return Some(w);
                }
            }
            None
        });
        (self.triples(), witness)
    }

    /// Meet and join are the greatest lower and least upper bounds.
    fn bounds(&self) -> (u64, Option<String>) {
        let (bottom, top) = (self.snap.bottom(), self.snap.top());
        if let Some(p) = self.snap.elements().iter().find(|p| !bottom.dominated_by(p) || !p.dominated_by(top))
        {
            return (self.len() as u64, Some(format!("{p} lies outside [bottom, top]")));
        }
        let witness = self.sweep(|a| {
            let pa = self.e(a);
            for pb in self.snap.elements() {
                let m = pa.meet_with(pb);
                let j = pa.join_with(pb);
                if self.snap.id_of(&m).is_none() || self.snap.id_of(&j).is_none() {
                    return Some(format!("meet or join of {pa}, {pb} is not an element"));
                }
                if !m.dominated_by(pa) || !m.dominated_by(pb) {
                    return Some(format!("{m} is not a lower bound of {pa}, {pb}"));
                }
                if !pa.dominated_by(&j) || !pb.dominated_by(&j) {
                    return Some(format!("{j} is not an upper bound of {pa}, {pb}"));
                }
                for z in self.snap.elements() {
                    if z.dominated_by(pa) && z.dominated_by(pb) && !z.dominated_by(&m) {
                        return Some(format!("{z} is a lower bound of {pa}, {pb} above the meet {m}"));
                    }
                    if pa.dominated_by(z) && pb.dominated_by(z) && !j.dominated_by(z) {
                        return Some(format!("{z} is an upper bound of {pa}, {pb} below the join {j}"));
                    }
                }
            }
            None
        });
        (self.triples(), witness)
    }

    fn distributive(&self) -> (u64, Option<String>) {
        let witness = self.sweep(|a| {
            let pa = self.e(a);
            for pb in self.snap.elements() {
                for pc in self.snap.elements() {
                    let lhs = pa.meet_with(&pb.join_with(pc));
                    let rhs = pa.meet_with(pb).join_with(&pa.meet_with(pc));
                    if lhs != rhs {
                        return Some(format!("a={pa}, b={pb}, c={pc}: a∧(b∨c)={lhs}, (a∧b)∨(a∧c)={rhs}"));
                    }
                }
            }
            None
        });
        (self.triples(), witness)
    }

    /// Closed form against the oracle on all pairs, the second closed form
    /// against the first, and residuation on all triples.
    fn implication(&self) -> (u64, Option<String>) {
        let witness = self.sweep(|a| {
            let pa = self.e(a);
            let row = match oracle_implies_row(self.snap, a) {
                Ok(row) => row,
                Err(e) => return Some(e.to_string()),
            };
            for (b, pb) in self.snap.elements().iter().enumerate() {
                let closed = pa.implies_with(pb);
                let expected = self.e(row[b]);
                if closed != *expected {
                    return Some(format!("{pa} -> {pb}: closed form {closed}, oracle {expected}"));
                }
                if let Some(alt) = P::implies_alt(pa, pb) {
                    if alt != closed {
                        return Some(format!("{pa} -> {pb}: block form {alt}, scan form {closed}"));
                    }
                }
                for x in self.snap.elements() {
                    if pa.meet_with(x).dominated_by(pb) != x.dominated_by(&closed) {
                        return Some(format!("residuation fails for a={pa}, b={pb}, x={x}"));
                    }
                }
            }
            None
        });
        (self.triples(), witness)
    }

    fn pseudo(&self) -> (u64, Option<String>) {
        let bottom = self.snap.bottom();
        let witness = self.sweep(|a| {
            let pa = self.e(a);
            let closed = pa.pseudo_complement();
            match oracle_pseudo(self.snap, pa) {
                Ok(o) if o == closed => {}
                Ok(o) => return Some(format!("¬{pa}: closed form {closed}, oracle {o}")),
                Err(e) => return Some(e.to_string()),
            }
            let via_impl = pa.implies_with(bottom);
            (via_impl != closed).then(|| format!("¬{pa} = {closed} but {pa} -> bottom = {via_impl}"))
        });
        (self.len() as u64, witness)
    }

    fn regular(&self) -> (u64, Option<String>) {
        let witness = self.sweep(|a| {
            let pa = self.e(a);
            let formula = pa.is_regular();
            let double = pa.pseudo_complement().pseudo_complement() == *pa;
            if formula != double {
                return Some(format!("{pa}: formula says {formula}, double negation says {double}"));
            }
            match P::regular_by_returns(pa) {
                Some(r) if r != formula => Some(format!("{pa}: formula says {formula}, returns say {r}")),
                _ => None,
            }
        });
        if witness.is_some() {
            return (self.len() as u64, witness);
        }
        let regs: Vec<P> = self.snap.elements().iter().filter(|p| p.is_regular()).cloned().collect();
        let listed = match P::regulars(self.snap.params()) {
            Ok(l) => l,
            Err(e) => return (self.len() as u64, Some(e.to_string())),
        };
        if listed != regs {
            return (self.len() as u64, Some("regular element listing differs from the filter".into()));
        }
        let expected = P::expected_regulars(self.snap.params());
        if regs.len() as u64 != expected {
            return (
                self.len() as u64,
                Some(format!("{} regular elements, expected {expected}", regs.len())),
            );
        }
        (self.len() as u64, boolean_witness(&regs, self.snap.bottom()))
    }

    /// Formula against unique lower cover against join-primality.
    fn irreducible(&self) -> (u64, Option<String>) {
        let joins = join_table(self.snap);
        let n = self.len();
        let witness = self.sweep(|a| {
            let pa = self.e(a);
            let formula = pa.is_join_irreducible();
            let covers = oracle_join_irreducible(self.snap, pa);
            if formula != covers {
                return Some(format!("{pa}: formula says {formula}, cover count says {covers}"));
            }
            let mut prime = a != 0;
            'outer: for x in 0..n {
                for y in x..n {
                    if pa.dominated_by(self.e(joins[x * n + y]))
                        && !pa.dominated_by(self.e(x))
                        && !pa.dominated_by(self.e(y))
                    {
                        prime = false;
                        break 'outer;
                    }
                }
            }
            (prime != formula).then(|| format!("{pa}: formula says {formula}, join-prime test says {prime}"))
        });
        if witness.is_some() {
            return (self.triples(), witness);
        }
        let count = self.snap.elements().iter().filter(|p| p.is_join_irreducible()).count();
        let expected = poset_size(self.snap.params());
        let witness = (count != expected).then(|| format!("{count} join-irreducibles, expected {expected}"));
        (self.triples(), witness)
    }
}

/// Ids of all pairwise joins, row-major.
fn join_table<P: LatticePath>(snap: &LatticeSnapshot<P>) -> Vec<usize> {
    let e = snap.elements();
    e.iter()
        .flat_map(|a| e.iter().map(move |b| a.join_with(b)))
        .map(|j| snap.id_of(&j).expect("join is an element"))
        .collect()
}

/// Checks that `regs` under the induced order is a Boolean lattice: its
/// elements correspond to the sets of atoms below them, bijectively and
/// order-isomorphically.
fn boolean_witness<P: LatticePath>(regs: &[P], bottom: &P) -> Option<String> {
    let atoms: Vec<&P> = regs
        .iter()
        .filter(|r| *r != bottom && !regs.iter().any(|s| s != bottom && s != *r && s.dominated_by(r)))
        .collect();
    if atoms.len() >= 64 || regs.len() as u64 != 1u64 << atoms.len() {
        return Some(format!("{} regular elements but {} atoms", regs.len(), atoms.len()));
    }
    let masks: Vec<u64> = regs
        .iter()
        .map(|r| atoms.iter().enumerate().filter(|(_, a)| a.dominated_by(r)).fold(0, |m, (i, _)| m | 1 << i))
        .collect();
    if masks.iter().collect::<HashSet<_>>().len() != masks.len() {
        return Some("two regular elements lie above the same atoms".into());
    }
    for (r, &mr) in regs.iter().zip(&masks) {
        for (s, &ms) in regs.iter().zip(&masks) {
            if r.dominated_by(s) != (mr & !ms == 0) {
                return Some(format!("order between {r} and {s} differs from atom inclusion"));
            }
        }
    }
    None
}

/// Family-specific parts of the verification.
trait Verify: BirkhoffPath {
    fn order_extra(_p: &Self, _q: &Self) -> Option<String> {
        None
    }

    fn implies_alt(_p: &Self, _q: &Self) -> Option<Self> {
        None
    }

    fn regular_by_returns(_p: &Self) -> Option<bool> {
        None
    }

    fn expected_regulars(params: Params) -> u64;

    fn structural(
        check: Check,
        _snap: &LatticeSnapshot<Self>,
        _options: &VerifyOptions,
    ) -> Result<CheckOutcome> {
        Ok(CheckOutcome::skipped(check, "not defined for this family"))
    }
}

impl Verify for HeightSeqA {
    fn order_extra(p: &Self, q: &Self) -> Option<String> {
        let by_words = word_prefix_leq(&p.to_word(), &q.to_word()).ok()?;
        (by_words != p.dominated_by(q)).then(|| format!("{p}, {q}: word prefix test disagrees with heights"))
    }

    fn implies_alt(p: &Self, q: &Self) -> Option<Self> {
        Some(implies_a_blocks(p, q))
    }

    fn regular_by_returns(p: &Self) -> Option<bool> {
        Some(is_regular_a_returns(p))
    }

    fn expected_regulars(params: Params) -> u64 {
        1 << (params.n() - 1)
    }

    fn structural(
        check: Check,
        snap: &LatticeSnapshot<Self>,
        options: &VerifyOptions,
    ) -> Result<CheckOutcome> {
        let par = options.parallel;
        let e = snap.elements();
        let n = snap.params().n();
        let (cases, witness) = match check {
            Check::Psi => {
                let w = sweep(e.len(), par, |a| {
                    let p = &e[a];
                    let image = psi(p);
                    if image != psi_word(p) {
                        return Some(format!("ψ({p}): block form {image}, word form {}", psi_word(p)));
                    }
                    if psi(&image) != *p {
                        return Some(format!("ψ(ψ({p})) = {}", psi(&image)));
                    }
                    e.iter()
                        .find(|q| p.dominated_by(q) != image.dominated_by(&psi(q)))
                        .map(|q| format!("ψ does not preserve the order of {p}, {q}"))
                });
                ((e.len() as u64).pow(2), w)
            }
            // Inclusion into the type B lattice of the same semilength keeps
            // meets and joins but not the top element.
            Check::Embedding => {
                let top_b = HeightSeqB::top(n);
                let w = sweep(e.len(), par, |a| {
                    let p = &e[a];
                    let pb = p.to_type_b();
                    if implies_b(&pb, &pb) != top_b {
                        return Some(format!("{p} -> {p} in type B is not {top_b}"));
                    }
                    let inner = implies_a(p, p);
                    if inner != *snap.top() || inner.to_type_b() == top_b {
                        return Some(format!("{p} -> {p} in type A is {inner}"));
                    }
                    e.iter().find_map(|q| {
                        let qb = q.to_type_b();
                        (p.meet_with(q).to_type_b() != pb.meet_with(&qb)
                            || p.join_with(q).to_type_b() != pb.join_with(&qb))
                        .then(|| format!("inclusion does not preserve meet or join of {p}, {q}"))
                    })
                });
                ((e.len() as u64).pow(2), w)
            }
            Check::Interval => interval_a(snap, options)?,
            Check::Equalizer => {
                let fixed: Vec<&HeightSeqA> = e.iter().filter(|p| psi(p) == **p).collect();
                (fixed.len() as u64 * fixed.len() as u64, equalizer_witness(&fixed, snap, par))
            }
            _ => unreachable!("structural check"),
        };
        Ok(CheckOutcome::from_witness(check, cases, witness))
    }
}

/// The ψ-fixed set contains bottom and top and is closed under the Heyting
/// operations.
fn equalizer_witness(fixed: &[&HeightSeqA], snap: &LatticeSnapshot<HeightSeqA>, par: bool) -> Option<String> {
    if !fixed.contains(&snap.bottom()) || !fixed.contains(&snap.top()) {
        return Some("bottom or top is not ψ-fixed".into());
    }
    sweep(fixed.len(), par, |a| {
        let p = fixed[a];
        fixed.iter().find_map(|q| {
            [p.meet_with(q), p.join_with(q), implies_a(p, q)]
                .into_iter()
                .find(|r| psi(r) != *r)
                .map(|r| format!("{r}, built from ψ-fixed {p} and {q}, is not ψ-fixed"))
        })
    })
}

/// Type A lattices as intervals of the square monotone lattice: `D_n` is
/// `[(1,...,n), top]` and `D_{n+1}` is `[(0,1,...,n-1), top]` after
/// subtracting one from each height and dropping the last.
fn interval_a(snap: &LatticeSnapshot<HeightSeqA>, options: &VerifyOptions) -> Result<(u64, Option<String>)> {
    let n = snap.params().n();
    let square = Params::Mono { n, m: n };
    let next = Params::A { n: n + 1 };
    for p in [square, next] {
        if let Err(e) = options.guard.check(p) {
            return Ok((0, Some(e.to_string())));
        }
    }
    let square = MonotonePath::generate(square)?;
    let low: Vec<usize> = (1..=n).collect();
    let shifted_low: Vec<usize> = (0..n).collect();
    let above = |p: &MonotonePath, q: &[usize]| p.heights().iter().zip(q).all(|(x, y)| x >= y);

    let first: Vec<Vec<usize>> =
        square.iter().filter(|p| above(p, &low)).map(|p| p.heights().to_vec()).collect();
    let own: Vec<Vec<usize>> = snap.elements().iter().map(|p| p.heights().to_vec()).collect();
    if first != own {
        return Ok((square.len() as u64, Some(format!("[(1..{n}), top] differs from the type A lattice"))));
    }

    let second: Vec<&MonotonePath> = square.iter().filter(|p| above(p, &shifted_low)).collect();
    let bigger = HeightSeqA::generate(next)?;
    let image: Vec<Vec<usize>> =
        bigger.iter().map(|p| p.heights()[..n].iter().map(|h| h - 1).collect()).collect();
    let mut sorted_image = image.clone();
    sorted_image.sort();
    let targets: Vec<Vec<usize>> = second.iter().map(|p| p.heights().to_vec()).collect();
    if sorted_image != targets {
        return Ok((
            square.len() as u64,
            Some("shifted type A lattice is not the interval above (0,..,n-1)".into()),
        ));
    }
    let leq = |a: &[usize], b: &[usize]| a.iter().zip(b).all(|(x, y)| x <= y);
    let witness = sweep(bigger.len(), options.parallel, |a| {
        bigger.iter().enumerate().find_map(|(b, q)| {
            (bigger[a].dominated_by(q) != leq(&image[a], &image[b]))
                .then(|| format!("shift does not preserve the order of {}, {q}", bigger[a]))
        })
    });
    Ok(((bigger.len() as u64).pow(2), witness))
}

impl Verify for HeightSeqB {
    /// Shorter sequences end strictly above longer ones at their last index.
    fn order_extra(p: &Self, q: &Self) -> Option<String> {
        let k = p.k();
        (k < q.k() && p.heights()[k - 1] <= q.heights()[k - 1])
            .then(|| format!("{p}, {q}: shorter sequence does not end above the longer one"))
    }

    fn regular_by_returns(p: &Self) -> Option<bool> {
        Some(is_regular_b_returns(p))
    }

    fn expected_regulars(params: Params) -> u64 {
        1 << params.n()
    }

    fn structural(
        check: Check,
        snap: &LatticeSnapshot<Self>,
        options: &VerifyOptions,
    ) -> Result<CheckOutcome> {
        let par = options.parallel;
        let e = snap.elements();
        let n = snap.params().n();
        let doubled = Params::A { n: 2 * n };
        let (cases, witness) = match check {
            Check::Embedding => {
                let images: Vec<HeightSeqA> = e.iter().map(embed_b_to_a).collect();
                let mut w = sweep(e.len(), par, |a| {
                    let (p, q) = (&e[a], &images[a]);
                    if embed_b_to_a_word(p) != *q {
                        return Some(format!(
                            "embedding of {p}: block form {q}, word form {}",
                            embed_b_to_a_word(p)
                        ));
                    }
                    if psi(q) != *q {
                        return Some(format!("embedding {q} of {p} is not ψ-fixed"));
                    }
                    match restrict_a_to_b(q) {
                        Ok(r) if r == *p => {}
                        _ => return Some(format!("restriction does not invert the embedding at {p}")),
                    }
                    e.iter().zip(&images).find_map(|(r, qr)| {
                        let ok = embed_b_to_a(&p.meet_with(r)) == q.meet_with(qr)
                            && embed_b_to_a(&p.join_with(r)) == q.join_with(qr)
                            && embed_b_to_a(&implies_b(p, r)) == implies_a(q, qr)
                            && p.dominated_by(r) == q.dominated_by(qr);
                        (!ok).then(|| format!("embedding does not preserve the operations on {p}, {r}"))
                    })
                });
                if w.is_none()
                    && (images[0] != HeightSeqA::bottom(2 * n)
                        || images[e.len() - 1] != HeightSeqA::top(2 * n))
                {
                    w = Some("embedding does not preserve bottom and top".into());
                }
                if w.is_none() && options.guard.check(doubled).is_ok() {
                    let fixed = HeightSeqA::generate(doubled)?.into_iter().filter(|q| psi(q) == *q).count();
                    let expected = binomial(2 * n as u64, n as u64);
                    if fixed as u128 != expected {
                        w = Some(format!(
                            "{fixed} ψ-fixed paths of semilength {}, expected {expected}",
                            2 * n
                        ));
                    }
                }
                ((e.len() as u64).pow(2), w)
            }
            Check::Equalizer => {
                if let Err(err) = options.guard.check(doubled) {
                    return Ok(CheckOutcome::skipped(check, err.to_string()));
                }
                let big = LatticeSnapshot::<HeightSeqA>::enumerate_guarded(doubled, &options.guard)?;
                let fixed: Vec<&HeightSeqA> = big.elements().iter().filter(|p| psi(p) == **p).collect();
                (fixed.len() as u64 * fixed.len() as u64, equalizer_witness(&fixed, &big, par))
            }
            _ => return Ok(CheckOutcome::skipped(check, "defined for type A only")),
        };
        Ok(CheckOutcome::from_witness(check, cases, witness))
    }
}

impl Verify for MonotonePath {
    fn implies_alt(p: &Self, q: &Self) -> Option<Self> {
        Some(implies_mono_blocks(p, q))
    }

    fn expected_regulars(params: Params) -> u64 {
        if params.m() == Some(0) {
            1
        } else {
            2
        }
    }
}
