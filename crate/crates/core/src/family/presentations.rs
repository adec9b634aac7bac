use super::FamilySpec;
use crate::error::{Error, Result};
use crate::presentation::{parse_presentation, Presentation};

fn metacyclic(p: u64, n: u32, q: u64, m: u32, r: i64) -> String {
    format!("a,b | a^{}=1, b^{}=1, a^-1 b a = b^{r}", p.pow(n), q.pow(m))
}

/// The defining presentation of a family, with parameters substituted.
pub fn builtin_presentation(spec: &FamilySpec) -> Result<Presentation> {
    use FamilySpec::*;
    spec.validate()?;
    let text = match spec {
        Cyclic(n) => format!("a | a^{n}=1"),
        Dihedral(o) => metacyclic(2, 1, o / 2, 1, -1),
        GeneralizedQuaternion(o) => {
            // z = b^2 is the central involution and a has order 2^{n-1}
            let k = o.trailing_zeros();
            format!("a,b,z | a^{}=b^2=z, z^2=1, b^-1 a b = a^-1", 1u64 << (k - 2))
        }
        Semidihedral(o) => {
            let k = o.trailing_zeros();
            metacyclic(2, 1, 2, k - 1, -1 + (1i64 << (k - 2)))
        }
        QuasidihedralM { n, p } => metacyclic(*p, 1, *p, n - 1, 1 + p.pow(n - 2) as i64),
        ExtraspecialMp(p) => format!("x,y,z | x^{p}=y^{p}=z^{p}=1, [x,z]=[y,z]=1, [x,y]=z"),
        GeneralG { p, n, q, m, r } => metacyclic(*p, *n, *q, *m, *r),
        GShort { n, p, m } => metacyclic(2, *n, *p, *m, -1),
        F { n, p, r } => metacyclic(3, *n, *p, 1, *r as i64),
        B1 { n, p } => format!("a,b,c | [a,b]=c, a^{p}=b^{}=c^{p}=1, [a,c]=[b,c]=1", p.pow(*n)),
        B2 { n, p } => metacyclic(*p, *n, *p, 2, *p as i64 + 1),
        A(n) => format!("a,b,c | a^{}=1, b^2=1, bc=cb, b^a=c, c^a=bc", 3u64.pow(*n)),
        C3SemidirectQ8 => "x,y,b | x^4=y^4=b^3=[y,b]=1, x^2=y^2, [x,y]=x^2, b^x=b^-1".to_string(),
        Holomorph(p) => {
            let g = crate::arith::primitive_root(*p).unwrap_or(1);
            metacyclic_general(*p - 1, *p, g as i64)
        }
        _ => return Err(Error::NoPresentation(spec.to_string())),
    };
    parse_presentation(&text)
}

fn metacyclic_general(k: u64, q: u64, r: i64) -> String {
    format!("a,b | a^{k}=1, b^{q}=1, a^-1 b a = b^{r}")
}
