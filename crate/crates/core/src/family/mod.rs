//! Named group families and their constructions.
//!
//! `G^(r)_{p,n;q,m}` is `<a, b | a^{p^n}, b^{q^m}, a^-1 b a = b^r>`, realized
//! as `C_{q^m} x| C_{p^n}`. Most named families are special cases of it.

mod catalog;
mod presentations;
mod syntax;
mod theorems;

pub use catalog::{expected_nps, rank_two_printed_formula, ExpectationKind, ExpectedNps, Fraction};
pub use presentations::builtin_presentation;
pub use syntax::parse_family;
pub use theorems::{minimal_primes, theorem_catalog, BucketMember, NSpan};

use crate::arith::{inverse_mod, is_prime, mult_order, primitive_root, residue};
use crate::error::{Error, Result};
use crate::group::{direct_product, semidirect_product, Group, DEFAULT_ORDER_CAP};
use crate::presentation::{coset_enumerate, DEFAULT_MAX_COSETS};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cyclic(u64),
    /// Direct product of cyclic groups of the listed orders.
    Abelian(Vec<u64>),
    /// Dihedral group of the given order.
    Dihedral(u64),
    /// Generalized quaternion group of the given order.
    GeneralizedQuaternion(u64),
    /// Semidihedral group of the given order.
    Semidihedral(u64),
    /// `M_{n,p}`, of order `p^n` with a cyclic maximal subgroup.
    QuasidihedralM {
        n: u32,
        p: u64,
    },
    /// `M(p)`, extraspecial of order `p^3` and exponent `p`.
    ExtraspecialMp(u64),
    GeneralG {
        p: u64,
        n: u32,
        q: u64,
        m: u32,
        r: i64,
    },
    /// `G_{n,p^m} = G^(-1)_{2,n;p,m}`.
    GShort {
        n: u32,
        p: u64,
        m: u32,
    },
    /// `F_{n,p} = G^(r)_{3,n;p,1}` with `r` of order 3 mod `p`.
    F {
        n: u32,
        p: u64,
        r: u64,
    },
    B1 {
        n: u32,
        p: u64,
    },
    /// `B2_{n,p} = G^(p+1)_{p,n;p,2}`.
    B2 {
        n: u32,
        p: u64,
    },
    /// `A_n = (C2 x C2) x| C_{3^n}`.
    A(u32),
    SymN(u32),
    AltN(u32),
    SL23,
    C3SemidirectQ8,
    /// `C_p x| C_{p-1}` with faithful action.
    Holomorph(u64),
    /// `X_{n,p} = D_{2p} x C3^n`.
    X {
        n: u32,
        p: u64,
    },
    Direct(Vec<FamilySpec>),
}

use FamilySpec::*;

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidFamily(msg.into()))
}

fn need_prime(name: &str, p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        invalid(format!("{name} = {p} is not prime"))
    }
}

fn need_positive(name: &str, n: u64) -> Result<()> {
    if n >= 1 {
        Ok(())
    } else {
        invalid(format!("{name} must be at least 1"))
    }
}

fn checked_pow(p: u64, n: u32) -> Result<u64> {
    p.checked_pow(n).ok_or_else(|| Error::InvalidFamily(format!("{p}^{n} overflows")))
}

/// `n` as `2^k` with `k >= min`.
fn two_exponent(what: &str, order: u64, min: u32) -> Result<u32> {
    if order.is_power_of_two() && order.trailing_zeros() >= min {
        Ok(order.trailing_zeros())
    } else {
        invalid(format!("{what} order must be a power of 2 that is at least {}", 1u64 << min))
    }
}

/// Smallest `r > 1` with multiplicative order 3 modulo `p`.
pub fn default_f_residue(p: u64) -> Option<u64> {
    (2..p).find(|&r| mult_order(r, p) == Some(3))
}

impl FamilySpec {
    /// Checks the parameter constraints of the family.
    pub fn validate(&self) -> Result<()> {
        match self {
            Cyclic(n) => need_positive("n", *n),
            Abelian(v) => {
                if v.is_empty() {
                    return invalid("empty abelian product");
                }
                v.iter().try_for_each(|&n| need_positive("factor", n))
            }
            Dihedral(o) => {
                if o % 2 == 0 && *o >= 4 {
                    Ok(())
                } else {
                    invalid(format!("dihedral order {o} must be even and at least 4"))
                }
            }
            GeneralizedQuaternion(o) => two_exponent("quaternion", *o, 3).map(drop),
            Semidihedral(o) => two_exponent("semidihedral", *o, 4).map(drop),
            QuasidihedralM { n, p } => {
                need_prime("p", *p)?;
                let min = if *p == 2 { 4 } else { 3 };
                if *n < min {
                    return invalid(format!("M_{{n,{p}}} needs n >= {min}"));
                }
                checked_pow(*p, *n).map(drop)
            }
            ExtraspecialMp(p) => {
                need_prime("p", *p)?;
                if *p == 2 {
                    return invalid("M(p) needs an odd prime");
                }
                checked_pow(*p, 3).map(drop)
            }
            GeneralG { p, n, q, m, r } => {
                need_prime("p", *p)?;
                need_prime("q", *q)?;
                need_positive("n", *n as u64)?;
                need_positive("m", *m as u64)?;
                let qm = checked_pow(*q, *m)?;
                let pn = checked_pow(*p, *n)?;
                if mult_order(residue(*r, qm), qm).is_none_or(|o| pn % o != 0) {
                    return invalid(format!("r^(p^n) = {r}^{pn} is not 1 mod {qm}"));
                }
                Ok(())
            }
            GShort { n, p, m } => {
                need_prime("p", *p)?;
                need_positive("n", *n as u64)?;
                need_positive("m", *m as u64)?;
                checked_pow(*p, *m).map(drop)
            }
            F { n, p, r } => {
                need_prime("p", *p)?;
                need_positive("n", *n as u64)?;
                if p % 3 != 1 {
                    return invalid(format!("F_{{n,p}} needs p = 1 mod 3, got {p}"));
                }
                if mult_order(*r % p, *p) != Some(3) {
                    return invalid(format!("{r} does not have order 3 mod {p}"));
                }
                Ok(())
            }
            B1 { n, p } | B2 { n, p } => {
                need_prime("p", *p)?;
                need_positive("n", *n as u64)?;
                checked_pow(*p, n + 2).map(drop)
            }
            A(n) => {
                need_positive("n", *n as u64)?;
                checked_pow(3, *n).map(drop)
            }
            SymN(n) | AltN(n) => need_positive("n", *n as u64),
            SL23 | C3SemidirectQ8 => Ok(()),
            Holomorph(p) => need_prime("p", *p),
            X { n, p } => {
                need_prime("p", *p)?;
                need_positive("n", *n as u64)?;
                checked_pow(3, *n).map(drop)
            }
            Direct(factors) => {
                if factors.is_empty() {
                    return invalid("empty direct product");
                }
                factors.iter().try_for_each(FamilySpec::validate)
            }
        }
    }

    /// Group order, or `None` on overflow. Assumes the spec is valid.
    pub fn order(&self) -> Option<u64> {
        match self {
            Cyclic(n) => Some(*n),
            Abelian(v) => v.iter().try_fold(1u64, |acc, &n| acc.checked_mul(n)),
            Dihedral(o) | GeneralizedQuaternion(o) | Semidihedral(o) => Some(*o),
            QuasidihedralM { n, p } => p.checked_pow(*n),
            ExtraspecialMp(p) => p.checked_pow(3),
            GeneralG { p, n, q, m, .. } => p.checked_pow(*n)?.checked_mul(q.checked_pow(*m)?),
            GShort { n, p, m } => 2u64.checked_pow(*n)?.checked_mul(p.checked_pow(*m)?),
            F { n, p, .. } => 3u64.checked_pow(*n)?.checked_mul(*p),
            B1 { n, p } | B2 { n, p } => p.checked_pow(n + 2),
            A(n) => 3u64.checked_pow(*n)?.checked_mul(4),
            SymN(n) => (1..=*n as u64).try_fold(1u64, |acc, i| acc.checked_mul(i)),
            AltN(n) => {
                let full = (1..=*n as u64).try_fold(1u64, |acc, i| acc.checked_mul(i))?;
                Some(if *n >= 2 { full / 2 } else { full })
            }
            SL23 | C3SemidirectQ8 => Some(24),
            Holomorph(p) => p.checked_mul(p - 1),
            X { n, p } => 3u64.checked_pow(*n)?.checked_mul(2 * p),
            Direct(f) => f.iter().try_fold(1u64, |acc, s| acc.checked_mul(s.order()?)),
        }
    }

    /// Whether `build` goes through coset enumeration of the builtin
    /// presentation rather than an explicit product construction.
    pub fn built_from_presentation(&self) -> bool {
        matches!(self, GeneralizedQuaternion(_) | ExtraspecialMp(_) | B1 { .. })
    }

    pub fn build(&self) -> Result<Group> {
        self.build_capped(DEFAULT_ORDER_CAP)
    }

    /// Builds the group, refusing anything with more than `cap` elements.
    pub fn build_capped(&self, cap: usize) -> Result<Group> {
        self.precheck(cap)?;
        let group = if self.built_from_presentation() {
            let (order, g) = coset_enumerate(&builtin_presentation(self)?, DEFAULT_MAX_COSETS)?;
            if Some(order as u64) != self.order() {
                return invalid(format!("{self}: presentation gave order {order}"));
            }
            g
        } else {
            self.construct(cap)?
        };
        Ok(group.with_label(self.to_string()))
    }

    /// Builds the group by an explicit construction, never through a
    /// presentation.
    pub fn build_explicit(&self) -> Result<Group> {
        self.build_explicit_capped(DEFAULT_ORDER_CAP)
    }

    pub fn build_explicit_capped(&self, cap: usize) -> Result<Group> {
        self.precheck(cap)?;
        Ok(self.construct(cap)?.with_label(self.to_string()))
    }

    fn precheck(&self, cap: usize) -> Result<()> {
        self.validate()?;
        match self.order() {
            Some(o) if o <= cap as u64 => Ok(()),
            _ => Err(Error::SizeLimit { cap }),
        }
    }

    fn construct(&self, cap: usize) -> Result<Group> {
        match self {
            Cyclic(n) => Ok(Group::cyclic(*n as usize)),
            Abelian(v) => product(v.iter().map(|&n| Ok(Group::cyclic(n as usize))), cap),
            Dihedral(o) => metacyclic(2, 1, o / 2, -1),
            GeneralizedQuaternion(o) => Ok(quaternion(o.trailing_zeros())),
            Semidihedral(o) => {
                let k = o.trailing_zeros();
                metacyclic(2, 1, 1 << (k - 1), -1 + (1i64 << (k - 2)))
            }
            QuasidihedralM { n, p } => metacyclic(*p, 1, p.pow(n - 1), 1 + p.pow(n - 2) as i64),
            ExtraspecialMp(p) => Ok(heisenberg(*p)),
            GeneralG { p, n, q, m, r } => metacyclic(*p, *n, q.pow(*m), *r),
            GShort { n, p, m } => metacyclic(2, *n, p.pow(*m), -1),
            F { n, p, r } => metacyclic(3, *n, *p, *r as i64),
            B1 { n, p } => b1(*n, *p, cap),
            B2 { n, p } => metacyclic(*p, *n, p * p, *p as i64 + 1),
            A(n) => {
                // a^-1 b a = c, a^-1 c a = bc on V4 = {1, c, b, bc}; the
                // product wants x -> a x a^-1, the inverse map
                let v4 = direct_product(&Group::cyclic(2), &Group::cyclic(2), cap)?;
                semidirect_product(&v4, &Group::cyclic(3usize.pow(*n)), &[vec![0, 2, 3, 1]], cap)
            }
            SymN(n) => symmetric(*n as usize, cap),
            AltN(n) => alternating(*n as usize, cap),
            SL23 => Ok(sl23()),
            C3SemidirectQ8 => {
                let c3 = Group::cyclic(3);
                semidirect_product(&c3, &quaternion(3), &[vec![0, 2, 1], vec![0, 1, 2]], cap)
            }
            Holomorph(p) => {
                let g = primitive_root(*p).expect("primes have primitive roots");
                let act = (0..*p).map(|i| (i * g % p) as u32).collect();
                semidirect_product(&Group::cyclic(*p as usize), &Group::cyclic(*p as usize - 1), &[act], cap)
            }
            X { n, p } => {
                product(std::iter::once(metacyclic(2, 1, *p, -1)).chain((0..*n).map(|_| Ok(Group::cyclic(3)))), cap)
            }
            Direct(f) => product(f.iter().map(|s| s.construct(cap)), cap),
        }
    }
}

fn product(mut factors: impl Iterator<Item = Result<Group>>, cap: usize) -> Result<Group> {
    factors.try_fold(Group::trivial(), |acc, g| direct_product(&acc, &g?, cap)).and_then(|g| {
        // drop the identity generators contributed by trivial factors
        let gens: Vec<u32> = g.generators().iter().copied().filter(|&x| x != 0).collect();
        g.with_generators(gens)
    })
}

/// `<a, b | a^{p^n}, b^qm, a^-1 b a = b^r>` as `C_qm x| C_{p^n}`.
fn metacyclic(p: u64, n: u32, qm: u64, r: i64) -> Result<Group> {
    let r = residue(r, qm);
    // a x a^-1 = x^{r^-1}
    let s = inverse_mod(r, qm).ok_or_else(|| Error::InvalidFamily(format!("{r} is not a unit mod {qm}")))?;
    let act = (0..qm).map(|i| (i * s % qm) as u32).collect();
    let pn = p.pow(n) as usize;
    semidirect_product(&Group::cyclic(qm as usize), &Group::cyclic(pn), &[act], usize::MAX)
}

/// Generalized quaternion of order `2^k` on `a^i b^s` with `b a b^-1 = a^-1`
/// and `b^2 = a^{2^{k-2}}`.
fn quaternion(k: u32) -> Group {
    let half = 1i64 << (k - 1);
    let z = 1i64 << (k - 2);
    let mul = |&(i, s): &(i64, u8), &(j, t): &(i64, u8)| {
        let (e, u) = match (s, t) {
            (0, _) => (i + j, t),
            (_, 0) => (i - j, 1),
            _ => (i - j + z, 0),
        };
        (e.rem_euclid(half), u)
    };
    Group::closure((0, 0), &[(1, 0), (0, 1)], mul, usize::MAX).expect("finite").0
}

/// Upper unitriangular 3x3 matrices over `F_p`, as `(x, y, z)`.
fn heisenberg(p: u64) -> Group {
    let mul =
        |&(a, b, c): &(u64, u64, u64), &(x, y, z): &(u64, u64, u64)| ((a + x) % p, (b + y) % p, (c + z + a * y) % p);
    Group::closure((0, 0, 0), &[(1, 0, 0), (0, 1, 0)], mul, usize::MAX).expect("finite").0
}

/// `(C_{p^n} x C_p) x| C_p` with `a` acting by `b -> bc`, `c -> c`.
fn b1(n: u32, p: u64, cap: usize) -> Result<Group> {
    let pn = p.pow(n) as usize;
    let p = p as usize;
    let normal = direct_product(&Group::cyclic(pn), &Group::cyclic(p), cap)?;
    // element y * p + z is b^y c^z
    let act = (0..pn * p)
        .map(|x| {
            let (y, z) = (x / p, x % p);
            (y * p + (z + y) % p) as u32
        })
        .collect();
    semidirect_product(&normal, &Group::cyclic(p), &[act], cap)
}

fn symmetric(n: usize, cap: usize) -> Result<Group> {
    if n <= 1 {
        return Ok(Group::trivial());
    }
    let cycle = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let mut swap: Vec<u32> = (0..n as u32).collect();
    swap.swap(0, 1);
    Group::from_permutations_capped(n, &[cycle, swap], cap)
}

fn alternating(n: usize, cap: usize) -> Result<Group> {
    if n <= 2 {
        return Ok(Group::trivial());
    }
    let gens: Vec<Vec<u32>> = (2..n)
        .map(|k| {
            let mut p: Vec<u32> = (0..n as u32).collect();
            p[0] = 1;
            p[1] = k as u32;
            p[k] = 0;
            p
        })
        .collect();
    Group::from_permutations_capped(n, &gens, cap)
}

/// `SL(2,3)` as 2x2 matrices `[a, b, c, d]` over `F_3`.
fn sl23() -> Group {
    let mul = |x: &[u8; 4], y: &[u8; 4]| {
        [
            (x[0] * y[0] + x[1] * y[2]) % 3,
            (x[0] * y[1] + x[1] * y[3]) % 3,
            (x[2] * y[0] + x[3] * y[2]) % 3,
            (x[2] * y[1] + x[3] * y[3]) % 3,
        ]
    };
    let (g, elems) =
        Group::closure([1, 0, 0, 1], &[[0, 2, 1, 0], [1, 1, 0, 1]], mul, 24).expect("SL(2,3) has 24 elements");
    let det_one = (0..81u32)
        .map(|i| [(i % 3) as u8, (i / 3 % 3) as u8, (i / 9 % 3) as u8, (i / 27) as u8])
        .filter(|m| (m[0] * m[3] + 2 * m[1] * m[2]) % 3 == 1)
        .count();
    debug_assert_eq!(elems.len(), det_one);
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match() {
        let specs = [
            Cyclic(7),
            Abelian(vec![2, 4, 3]),
            Dihedral(10),
            GeneralizedQuaternion(16),
            Semidihedral(16),
            QuasidihedralM { n: 4, p: 2 },
            QuasidihedralM { n: 3, p: 3 },
            ExtraspecialMp(3),
            GeneralG { p: 2, n: 2, q: 5, m: 1, r: 2 },
            GShort { n: 2, p: 3, m: 2 },
            F { n: 1, p: 7, r: 2 },
            B1 { n: 2, p: 2 },
            B2 { n: 2, p: 3 },
            A(2),
            SymN(4),
            AltN(4),
            SL23,
            C3SemidirectQ8,
            Holomorph(7),
            X { n: 1, p: 5 },
            Direct(vec![GeneralizedQuaternion(8), Cyclic(2)]),
        ];
        for s in specs {
            let g = s.build().unwrap();
            assert_eq!(Some(g.order() as u64), s.order(), "{s}");
            assert!(g.check_axioms(), "{s}");
            let e = s.build_explicit().unwrap();
            assert_eq!(e.order(), g.order());
        }
    }

    #[test]
    fn validation() {
        assert!(GeneralG { p: 2, n: 1, q: 3, m: 1, r: 2 }.validate().is_ok());
        assert!(GeneralG { p: 2, n: 1, q: 5, m: 1, r: 2 }.validate().is_err());
        assert!(F { n: 1, p: 7, r: 2 }.validate().is_ok());
        assert!(F { n: 1, p: 7, r: 3 }.validate().is_err());
        assert!(F { n: 1, p: 5, r: 2 }.validate().is_err());
        assert!(QuasidihedralM { n: 3, p: 2 }.validate().is_err());
        assert!(QuasidihedralM { n: 3, p: 3 }.validate().is_ok());
        assert!(Semidihedral(8).validate().is_err());
        assert!(GeneralizedQuaternion(8).validate().is_ok());
        assert!(GeneralizedQuaternion(12).validate().is_err());
        assert!(ExtraspecialMp(2).validate().is_err());
        assert!(Dihedral(5).validate().is_err());
    }

    #[test]
    fn small_identifications() {
        let a1 = A(1).build().unwrap();
        assert_eq!(a1.order(), 12);
        assert_eq!(a1.derived_subgroup().size(), 4);
        let m3 = B1 { n: 1, p: 3 }.build().unwrap();
        assert_eq!((m3.order(), m3.exponent()), (27, 3));
        let d8 = B2 { n: 1, p: 2 }.build().unwrap();
        assert_eq!((d8.order(), d8.exponent(), d8.center().size()), (8, 4, 2));
        let q8 = GeneralizedQuaternion(8).build_explicit().unwrap();
        assert_eq!(q8.element_orders().iter().filter(|&&o| o == 2).count(), 1);
    }

    #[test]
    fn size_cap() {
        assert_eq!(Cyclic(5000).build().unwrap_err(), Error::SizeLimit { cap: DEFAULT_ORDER_CAP });
        assert_eq!(SymN(6).build_capped(100).unwrap_err(), Error::SizeLimit { cap: 100 });
    }
}
