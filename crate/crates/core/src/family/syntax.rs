//! Text form of family specs.
//!
//! ```text
//! spec    := factor {'x' factor}
//! factor  := NAME ['(' args ')'] | 'SL(2,3)' | 'C3:Q8'
//! args    := arg {(',' | ';') arg}
//! arg     := INT | KEY '=' INT
//! ```
//!
//! Names: `C(n)`, `C(n1,n2,..)`, `D(order)`, `Q(order)`, `S(order)`,
//! `M(n,p)`, `M(p)`, `G(r=..;p=..,n=..;q=..,m=..)`, `G(n,p^m)`, `F(n,p[,r])`,
//! `B1(n,p)`, `B2(n,p)`, `A(n)`, `Sym(n)`, `Alt(n)`, `SL(2,3)`, `C3:Q8`,
//! `Hol(p)`, `X(n,p)`. Factors joined by `x` form a direct product; a product
//! of cyclic factors is read as one abelian spec.

use std::fmt;

use super::{default_f_residue, FamilySpec};
use crate::arith::prime_power;
use crate::error::{Error, Result};

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Cyclic(n) => write!(f, "C({n})"),
            Abelian(v) => {
                let parts: Vec<String> = v.iter().map(u64::to_string).collect();
                write!(f, "C({})", parts.join(","))
            }
            Dihedral(o) => write!(f, "D({o})"),
            GeneralizedQuaternion(o) => write!(f, "Q({o})"),
            Semidihedral(o) => write!(f, "S({o})"),
            QuasidihedralM { n, p } => write!(f, "M({n},{p})"),
            ExtraspecialMp(p) => write!(f, "M({p})"),
            GeneralG { p, n, q, m, r } => write!(f, "G(r={r};p={p},n={n};q={q},m={m})"),
            GShort { n, p, m } => write!(f, "G({n},{})", p.saturating_pow(*m)),
            F { n, p, r } => {
                if default_f_residue(*p) == Some(*r) {
                    write!(f, "F({n},{p})")
                } else {
                    write!(f, "F({n},{p},{r})")
                }
            }
            B1 { n, p } => write!(f, "B1({n},{p})"),
            B2 { n, p } => write!(f, "B2({n},{p})"),
            A(n) => write!(f, "A({n})"),
            SymN(n) => write!(f, "Sym({n})"),
            AltN(n) => write!(f, "Alt({n})"),
            SL23 => write!(f, "SL(2,3)"),
            C3SemidirectQ8 => write!(f, "C3:Q8"),
            Holomorph(p) => write!(f, "Hol({p})"),
            X { n, p } => write!(f, "X({n},{p})"),
            Direct(parts) => {
                for (i, s) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::str::FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        parse_family(s)
    }
}

/// Parses and validates a family spec.
pub fn parse_family(text: &str) -> Result<FamilySpec> {
    let compact: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Syntax { pos: 0, msg: "empty family spec".into() });
    }
    let mut factors = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, &(_, c)) in compact.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            'x' if depth == 0 => {
                factors.push(factor(&compact[start..i], text.len())?);
                start = i + 1;
            }
            _ => {}
        }
    }
    factors.push(factor(&compact[start..], text.len())?);
    let spec = if factors.len() == 1 {
        factors.pop().unwrap()
    } else if factors.iter().all(|f| matches!(f, FamilySpec::Cyclic(_) | FamilySpec::Abelian(_))) {
        let orders = factors
            .into_iter()
            .flat_map(|f| match f {
                FamilySpec::Cyclic(n) => vec![n],
                FamilySpec::Abelian(v) => v,
                _ => unreachable!(),
            })
            .collect();
        FamilySpec::Abelian(orders)
    } else {
        FamilySpec::Direct(factors)
    };
    spec.validate()?;
    Ok(spec)
}

struct Arg {
    key: Option<String>,
    value: i64,
    pos: usize,
}

fn syntax<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Syntax { pos, msg: msg.into() })
}

fn factor(chars: &[(usize, char)], end: usize) -> Result<FamilySpec> {
    use FamilySpec::*;
    let pos_at = |i: usize| chars.get(i).map_or(end, |&(p, _)| p);
    let s: String = chars.iter().map(|&(_, c)| c).collect();
    if s.is_empty() {
        return syntax(pos_at(0), "missing factor");
    }
    if s == "SL(2,3)" {
        return Ok(SL23);
    }
    if s == "C3:Q8" {
        return Ok(C3SemidirectQ8);
    }
    let open = chars.iter().position(|&(_, c)| c == '(');
    let name: String = chars[..open.unwrap_or(chars.len())].iter().map(|&(_, c)| c).collect();
    let args = match open {
        None => return syntax(pos_at(0), format!("`{name}` needs parameters in parentheses")),
        Some(o) => {
            if chars.last().map(|&(_, c)| c) != Some(')') {
                return syntax(pos_at(chars.len()), "expected `)`");
            }
            parse_args(&chars[o + 1..chars.len() - 1], pos_at(chars.len() - 1))?
        }
    };
    let at = pos_at(0);
    let positional = |want: usize| -> Result<Vec<u64>> {
        if args.len() != want || args.iter().any(|a| a.key.is_some()) {
            return syntax(at, format!("`{name}` takes {want} positional parameter(s)"));
        }
        args.iter().map(unsigned).collect()
    };
    let small =
        |v: u64, a: usize| -> Result<u32> { u32::try_from(v).or_else(|_| syntax(args[a].pos, "parameter too large")) };
    Ok(match name.as_str() {
        "C" => {
            if args.is_empty() || args.iter().any(|a| a.key.is_some()) {
                return syntax(at, "`C` takes one or more orders");
            }
            let v: Vec<u64> = args.iter().map(unsigned).collect::<Result<_>>()?;
            if v.len() == 1 {
                Cyclic(v[0])
            } else {
                Abelian(v)
            }
        }
        "D" => Dihedral(positional(1)?[0]),
        "Q" => GeneralizedQuaternion(positional(1)?[0]),
        "S" => Semidihedral(positional(1)?[0]),
        "M" if args.len() == 1 => ExtraspecialMp(positional(1)?[0]),
        "M" => {
            let v = positional(2)?;
            QuasidihedralM { n: small(v[0], 0)?, p: v[1] }
        }
        "G" if args.iter().any(|a| a.key.is_some()) => general_g(&args, at)?,
        "G" => {
            let v = positional(2)?;
            let (p, m) = prime_power(v[1])
                .ok_or_else(|| Error::Syntax { pos: args[1].pos, msg: format!("{} is not a prime power", v[1]) })?;
            GShort { n: small(v[0], 0)?, p, m }
        }
        "F" => {
            if args.len() == 3 {
                let v = positional(3)?;
                F { n: small(v[0], 0)?, p: v[1], r: v[2] }
            } else {
                let v = positional(2)?;
                let r = default_f_residue(v[1])
                    .ok_or_else(|| Error::InvalidFamily(format!("no element of order 3 mod {}", v[1])))?;
                F { n: small(v[0], 0)?, p: v[1], r }
            }
        }
        "B1" | "B2" => {
            let v = positional(2)?;
            let (n, p) = (small(v[0], 0)?, v[1]);
            if name == "B1" {
                B1 { n, p }
            } else {
                B2 { n, p }
            }
        }
        "A" => A(small(positional(1)?[0], 0)?),
        "Sym" => SymN(small(positional(1)?[0], 0)?),
        "Alt" => AltN(small(positional(1)?[0], 0)?),
        "Hol" => Holomorph(positional(1)?[0]),
        "X" => {
            let v = positional(2)?;
            X { n: small(v[0], 0)?, p: v[1] }
        }
        _ => return Err(Error::InvalidFamily(format!("unknown family `{name}`"))),
    })
}

fn unsigned(a: &Arg) -> Result<u64> {
    u64::try_from(a.value).or_else(|_| syntax(a.pos, "parameter must be non-negative"))
}

fn general_g(args: &[Arg], at: usize) -> Result<FamilySpec> {
    let mut vals: [Option<&Arg>; 5] = [None; 5];
    for a in args {
        let slot = match a.key.as_deref() {
            Some("p") => 0,
            Some("n") => 1,
            Some("q") => 2,
            Some("m") => 3,
            Some("r") => 4,
            Some(k) => return syntax(a.pos, format!("unknown parameter `{k}`")),
            None => return syntax(a.pos, "mixing keyed and positional parameters"),
        };
        if vals[slot].replace(a).is_some() {
            return syntax(a.pos, "parameter given twice");
        }
    }
    let get = |i: usize, k: &str| vals[i].ok_or_else(|| Error::Syntax { pos: at, msg: format!("missing `{k}`") });
    let small =
        |a: &Arg| -> Result<u32> { u32::try_from(a.value).or_else(|_| syntax(a.pos, "parameter out of range")) };
    Ok(FamilySpec::GeneralG {
        p: unsigned(get(0, "p")?)?,
        n: small(get(1, "n")?)?,
        q: unsigned(get(2, "q")?)?,
        m: small(get(3, "m")?)?,
        r: get(4, "r")?.value,
    })
}

fn parse_args(chars: &[(usize, char)], end: usize) -> Result<Vec<Arg>> {
    let mut args = Vec::new();
    if chars.is_empty() {
        return Ok(args);
    }
    for piece in chars.split(|&(_, c)| c == ',' || c == ';') {
        let pos = piece.first().map_or(end, |&(p, _)| p);
        let text: String = piece.iter().map(|&(_, c)| c).collect();
        let (key, num) = match text.split_once('=') {
            Some((k, v)) => (Some(k.to_string()), v.to_string()),
            None => (None, text),
        };
        if key.as_ref().is_some_and(|k| k.is_empty() || !k.chars().all(|c| c.is_ascii_alphabetic())) {
            return syntax(pos, "bad parameter name");
        }
        let value = num.parse::<i64>().or_else(|_| syntax(pos, format!("expected an integer, found `{num}`")))?;
        args.push(Arg { key, value, pos });
    }
    Ok(args)
}
