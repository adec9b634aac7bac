//! The groups with exactly `k` nonpower subgroups, `0 <= k <= 13`, as
//! parameterized templates.

use super::{default_f_residue, FamilySpec};
use crate::arith::{factorize, primes_up_to};

use FamilySpec::*;

/// How the free integer parameter of a template ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NSpan {
    /// No free parameter.
    Fixed,
    /// `n >= min`.
    From(u32),
    /// The parameter is the order of a cyclic group.
    CyclicOrder,
}

/// One entry of a classification bucket.
#[derive(Clone, Copy)]
pub struct BucketMember {
    pub notation: &'static str,
    pub constraint: &'static str,
    pub n: NSpan,
    /// Names of the prime variables, in the order `make` receives them.
    pub primes: &'static [&'static str],
    admissible: fn(&[u64]) -> bool,
    make: fn(u32, &[u64]) -> FamilySpec,
}

impl std::fmt::Debug for BucketMember {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BucketMember").field("notation", &self.notation).field("constraint", &self.constraint).finish()
    }
}

/// Largest prime tried for side-condition variables.
pub const PRIME_BOUND: u64 = 13;

impl BucketMember {
    pub fn admissible(&self, primes: &[u64]) -> bool {
        primes.len() == self.primes.len() && (self.admissible)(primes)
    }

    pub fn instantiate(&self, n: u32, primes: &[u64]) -> FamilySpec {
        (self.make)(n, primes)
    }

    pub fn min_n(&self) -> u32 {
        match self.n {
            NSpan::Fixed => 0,
            NSpan::From(m) => m,
            NSpan::CyclicOrder => 1,
        }
    }

    /// The instance at the smallest `n` and smallest admissible primes.
    pub fn minimal_instance(&self) -> FamilySpec {
        self.instantiate(self.min_n(), &minimal_primes(self))
    }

    /// Instances at the smallest admissible primes with `n <= max_n` (cyclic
    /// orders up to `2^max_n`) and order at most `cap`.
    pub fn instances(&self, max_n: u32, cap: u64) -> Vec<FamilySpec> {
        let primes = minimal_primes(self);
        let ns: Vec<u32> = match self.n {
            NSpan::Fixed => vec![0],
            NSpan::From(m) => (m..=max_n.max(m)).collect(),
            NSpan::CyclicOrder => (1..=1u32 << max_n.min(20)).collect(),
        };
        ns.into_iter().map(|n| self.instantiate(n, &primes)).filter(|s| s.order().is_some_and(|o| o <= cap)).collect()
    }

    /// All instances of exactly the given order, with prime variables drawn
    /// from the primes dividing it.
    pub fn instances_of_order(&self, order: u64) -> Vec<FamilySpec> {
        if self.n == NSpan::CyclicOrder {
            return vec![Cyclic(order)];
        }
        let divisors: Vec<u64> = factorize(order).into_iter().map(|(p, _)| p).collect();
        let mut out = Vec::new();
        for primes in tuples(&divisors, self.primes.len()) {
            if !self.admissible(&primes) {
                continue;
            }
            let mut n = self.min_n();
            loop {
                let spec = self.instantiate(n, &primes);
                match spec.order() {
                    Some(o) if o == order => out.push(spec),
                    Some(o) if o < order => {}
                    _ => break,
                }
                if self.n == NSpan::Fixed || n > 64 {
                    break;
                }
                n += 1;
            }
        }
        out
    }
}

fn tuples(choices: &[u64], len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                choices.iter().map(move |&c| {
                    let mut t = t.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

/// Lexicographically smallest admissible assignment of primes up to
/// [`PRIME_BOUND`].
pub fn minimal_primes(member: &BucketMember) -> Vec<u64> {
    tuples(&primes_up_to(PRIME_BOUND), member.primes.len())
        .into_iter()
        .find(|t| member.admissible(t))
        .expect("every template has admissible primes below the bound")
}

fn any(_: &[u64]) -> bool {
    true
}

const fn fixed(notation: &'static str, make: fn(u32, &[u64]) -> FamilySpec) -> BucketMember {
    BucketMember { notation, constraint: "", n: NSpan::Fixed, primes: &[], admissible: any, make }
}

const fn family(notation: &'static str, min: u32, make: fn(u32, &[u64]) -> FamilySpec) -> BucketMember {
    BucketMember { notation, constraint: "", n: NSpan::From(min), primes: &[], admissible: any, make }
}

const fn with_primes(
    notation: &'static str,
    constraint: &'static str,
    n: NSpan,
    primes: &'static [&'static str],
    admissible: fn(&[u64]) -> bool,
    make: fn(u32, &[u64]) -> FamilySpec,
) -> BucketMember {
    BucketMember { notation, constraint, n, primes, admissible, make }
}

fn g(n: u32, p: u64, m: u32) -> FamilySpec {
    GShort { n, p, m }
}

fn f(n: u32, p: u64) -> FamilySpec {
    F { n, p, r: default_f_residue(p).expect("p = 1 mod 3") }
}

fn times(a: FamilySpec, c: u64) -> FamilySpec {
    Direct(vec![a, Cyclic(c)])
}

/// The members of the bucket `k`; empty for `k = 1, 2` and `k > 13`.
pub fn theorem_catalog(k: u32) -> Vec<BucketMember> {
    match k {
        0 => vec![BucketMember {
            notation: "C_n",
            constraint: "n >= 1",
            n: NSpan::CyclicOrder,
            primes: &[],
            admissible: any,
            make: |n, _| Cyclic(n as u64),
        }],
        3 => vec![
            fixed("C_2 x C_2", |_, _| Abelian(vec![2, 2])),
            fixed("Q_8", |_, _| GeneralizedQuaternion(8)),
            family("G_{n,3}", 1, |n, _| g(n, 3, 1)),
        ],
        4 => vec![fixed("C_3 x C_3", |_, _| Abelian(vec![3, 3]))],
        5 => vec![fixed("C_2 x C_4", |_, _| Abelian(vec![2, 4])), family("G_{n,5}", 1, |n, _| g(n, 5, 1))],
        6 => vec![
            fixed("C_5 x C_5", |_, _| Abelian(vec![5, 5])),
            with_primes(
                "C_2 x C_2 x C_p",
                "p > 2",
                NSpan::Fixed,
                &["p"],
                |t| t[0] > 2,
                |_, t| Abelian(vec![2, 2, t[0]]),
            ),
            with_primes(
                "Q_8 x C_p",
                "p > 2",
                NSpan::Fixed,
                &["p"],
                |t| t[0] > 2,
                |_, t| times(GeneralizedQuaternion(8), t[0]),
            ),
            with_primes(
                "G_{n,3} x C_q",
                "n >= 1, q > 3",
                NSpan::From(1),
                &["q"],
                |t| t[0] > 3,
                |n, t| times(g(n, 3, 1), t[0]),
            ),
        ],
        7 => vec![
            fixed("D_8", |_, _| Dihedral(8)),
            fixed("Alt(4)", |_, _| AltN(4)),
            fixed("C_2 x C_8", |_, _| Abelian(vec![2, 8])),
            fixed("Q_16", |_, _| GeneralizedQuaternion(16)),
            fixed("M_{4,2}", |_, _| QuasidihedralM { n: 4, p: 2 }),
            fixed("C_3 x C_9", |_, _| Abelian(vec![3, 9])),
            fixed("M_{3,3}", |_, _| QuasidihedralM { n: 3, p: 3 }),
            family("G_{n,7}", 1, |n, _| g(n, 7, 1)),
            family("F_{n,7}", 1, |n, _| f(n, 7)),
        ],
        8 => vec![
            fixed("C_7 x C_7", |_, _| Abelian(vec![7, 7])),
            with_primes(
                "C_3 x C_3 x C_p",
                "p != 3",
                NSpan::Fixed,
                &["p"],
                |t| t[0] != 3,
                |_, t| Abelian(vec![3, 3, t[0]]),
            ),
        ],
        9 => vec![
            fixed("C_2 x C_16", |_, _| Abelian(vec![2, 16])),
            fixed("M_{5,2}", |_, _| QuasidihedralM { n: 5, p: 2 }),
            with_primes(
                "C_2 x C_2 x C_{p^2}",
                "p > 2",
                NSpan::Fixed,
                &["p"],
                |t| t[0] > 2,
                |_, t| Abelian(vec![2, 2, t[0] * t[0]]),
            ),
            with_primes(
                "Q_8 x C_{p^2}",
                "p > 2",
                NSpan::Fixed,
                &["p"],
                |t| t[0] > 2,
                |_, t| times(GeneralizedQuaternion(8), t[0] * t[0]),
            ),
            with_primes(
                "G_{n,3} x C_{q^2}",
                "n >= 1, q > 3",
                NSpan::From(1),
                &["q"],
                |t| t[0] > 3,
                |n, t| times(g(n, 3, 1), t[0] * t[0]),
            ),
        ],
        10 => vec![
            fixed("C_3 x C_27", |_, _| Abelian(vec![3, 27])),
            with_primes(
                "C_2 x C_4 x C_p",
                "p != 2",
                NSpan::Fixed,
                &["p"],
                |t| t[0] != 2,
                |_, t| Abelian(vec![2, 4, t[0]]),
            ),
            fixed("M_{4,3}", |_, _| QuasidihedralM { n: 4, p: 3 }),
            fixed("Sym(3) x C_3", |_, _| times(SymN(3), 3)),
            fixed("A_2", |_, _| A(2)),
            family("G^(2)_{2,n;5,1}", 2, |n, _| GeneralG { p: 2, n, q: 5, m: 1, r: 2 }),
            with_primes(
                "G_{n,5} x C_q",
                "n >= 1, q != 2, 5",
                NSpan::From(1),
                &["q"],
                |t| t[0] != 2 && t[0] != 5,
                |n, t| times(g(n, 5, 1), t[0]),
            ),
        ],
        11 => vec![
            fixed("C_2 x C_32", |_, _| Abelian(vec![2, 32])),
            fixed("C_5 x C_25", |_, _| Abelian(vec![5, 25])),
            fixed("S_16", |_, _| Semidihedral(16)),
            fixed("M_{6,2}", |_, _| QuasidihedralM { n: 6, p: 2 }),
            fixed("M_{3,5}", |_, _| QuasidihedralM { n: 3, p: 5 }),
            fixed("SL(2,3)", |_, _| SL23),
            family("G_{n,11}", 1, |n, _| g(n, 11, 1)),
            family("G^(3)_{5,n;11,1}", 1, |n, _| GeneralG { p: 5, n, q: 11, m: 1, r: 3 }),
        ],
        12 => vec![
            fixed("C_4 x C_4", |_, _| Abelian(vec![4, 4])),
            fixed("C_11 x C_11", |_, _| Abelian(vec![11, 11])),
            with_primes(
                "Q_8 x C_{qr}",
                "3 < q < r",
                NSpan::Fixed,
                &["q", "r"],
                |t| 3 < t[0] && t[0] < t[1],
                |_, t| times(GeneralizedQuaternion(8), t[0] * t[1]),
            ),
            with_primes(
                "C_2 x C_2 x C_{qr}",
                "3 < q < r",
                NSpan::Fixed,
                &["q", "r"],
                |t| 3 < t[0] && t[0] < t[1],
                |_, t| Abelian(vec![2, 2, t[0] * t[1]]),
            ),
            with_primes(
                "C_3 x C_3 x C_{s^2}",
                "s != 3",
                NSpan::Fixed,
                &["s"],
                |t| t[0] != 3,
                |_, t| Abelian(vec![3, 3, t[0] * t[0]]),
            ),
            with_primes(
                "C_5 x C_5 x C_p",
                "p != 5",
                NSpan::Fixed,
                &["p"],
                |t| t[0] != 5,
                |_, t| Abelian(vec![5, 5, t[0]]),
            ),
            fixed("B2_{2,2}", |_, _| B2 { n: 2, p: 2 }),
            family("G_{n,9}", 1, |n, _| g(n, 3, 2)),
            with_primes(
                "G_{n,3} x C_{qr}",
                "n >= 1, 3 < q < r",
                NSpan::From(1),
                &["q", "r"],
                |t| 3 < t[0] && t[0] < t[1],
                |n, t| times(g(n, 3, 1), t[0] * t[1]),
            ),
        ],
        13 => vec![
            fixed("C_2 x C_64", |_, _| Abelian(vec![2, 64])),
            fixed("C_3 x C_81", |_, _| Abelian(vec![3, 81])),
            fixed("M_{7,2}", |_, _| QuasidihedralM { n: 7, p: 2 }),
            fixed("M_{5,3}", |_, _| QuasidihedralM { n: 5, p: 3 }),
            fixed("Sym(3) x C_2 = D_12", |_, _| Dihedral(12)),
            fixed("C_3 x| Q_8", |_, _| C3SemidirectQ8),
            fixed("A_3", |_, _| A(3)),
            family("G_{n,13}", 1, |n, _| g(n, 13, 1)),
            family("F_{n,13}", 1, |n, _| f(n, 13)),
        ],
        _ => Vec::new(),
    }
}
