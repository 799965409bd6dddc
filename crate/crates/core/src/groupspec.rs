//! The group description mini-language.
//!
//! ```text
//! spec := "Sym(" n ")" | "Alt(" n ")" | "Cyc(" n ")" | "Dih(" n ")"
//!       | "SO3(" p ")" | "Omega3(" p ")"
//!       | "Perm(" degree ";" cycles-list ")"
//!       | "Mat(" p "," n ";" matrix-list ")"
//! ```
//!
//! A permutation generator is a run of 0-based cycles such as `(0 1)(2 3)`, or
//! `()` for the identity. A matrix generator is a bracketed row-major integer
//! list. Generators are separated by commas. `Dih(n)` is the dihedral group of
//! order `2n`.

use crate::element::{Element, Permutation, PrimeFieldMatrix};
use crate::error::{Error, Result};
use crate::group::{closure_enumerate, FiniteGroup};
use crate::so3::{omega3_enumerate, so3_enumerate};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    Dihedral(usize),
    SO3(u32),
    Omega3(u32),
    Perm {
        degree: usize,
        generators: Vec<Vec<Vec<usize>>>,
    },
    Mat {
        p: u32,
        n: usize,
        generators: Vec<Vec<i64>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Open,
    Close,
    LBracket,
    RBracket,
    Semi,
    Comma,
    End,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut toks = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' | ')' | '[' | ']' | ';' | ',' => {
                chars.next();
                toks.push((
                    i,
                    match c {
                        '(' => Tok::Open,
                        ')' => Tok::Close,
                        '[' => Tok::LBracket,
                        ']' => Tok::RBracket,
                        ';' => Tok::Semi,
                        _ => Tok::Comma,
                    },
                ));
            }
            '-' | '0'..='9' => {
                let mut s = String::new();
                s.push(c);
                chars.next();
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    s.push(d);
                    chars.next();
                }
                let v = s
                    .parse::<i64>()
                    .map_err(|_| syntax(i, format!("bad integer `{s}`")))?;
                toks.push((i, Tok::Int(v)));
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_alphanumeric() {
                        break;
                    }
                    s.push(d);
                    chars.next();
                }
                toks.push((i, Tok::Ident(s)));
            }
            other => return Err(syntax(i, format!("unexpected character `{other}`"))),
        }
    }
    toks.push((text.len(), Tok::End));
    Ok(toks)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn at(&self) -> usize {
        self.toks[self.pos].0
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let at = self.at();
        let got = self.next();
        if got == want {
            Ok(())
        } else {
            Err(syntax(at, format!("expected {what}, found {got:?}")))
        }
    }

    fn int(&mut self) -> Result<i64> {
        let at = self.at();
        match self.next() {
            Tok::Int(v) => Ok(v),
            got => Err(syntax(at, format!("expected integer, found {got:?}"))),
        }
    }

    fn positive(&mut self) -> Result<usize> {
        let at = self.at();
        let v = self.int()?;
        if v < 1 {
            return Err(syntax(
                at,
                format!("expected a positive integer, found {v}"),
            ));
        }
        Ok(v as usize)
    }

    fn cycle(&mut self) -> Result<Vec<usize>> {
        self.expect(Tok::Open, "`(`")?;
        let mut points = Vec::new();
        while let Tok::Int(_) = self.peek() {
            let at = self.at();
            let v = self.int()?;
            if v < 0 {
                return Err(syntax(at, "cycle points are nonnegative"));
            }
            points.push(v as usize);
        }
        self.expect(Tok::Close, "`)` closing a cycle")?;
        Ok(points)
    }

    fn perm_generator(&mut self) -> Result<Vec<Vec<usize>>> {
        let mut cycles = vec![self.cycle()?];
        while *self.peek() == Tok::Open {
            cycles.push(self.cycle()?);
        }
        cycles.retain(|c| !c.is_empty());
        Ok(cycles)
    }

    fn matrix(&mut self) -> Result<Vec<i64>> {
        self.expect(Tok::LBracket, "`[`")?;
        let mut entries = Vec::new();
        loop {
            match self.peek() {
                Tok::Int(_) => entries.push(self.int()?),
                Tok::Comma => {
                    self.next();
                }
                _ => break,
            }
        }
        self.expect(Tok::RBracket, "`]`")?;
        Ok(entries)
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        let mut out = vec![item(self)?];
        while *self.peek() == Tok::Comma {
            self.next();
            out.push(item(self)?);
        }
        Ok(out)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let at = self.at();
        let name = match self.next() {
            Tok::Ident(s) => s,
            got => {
                return Err(syntax(
                    at,
                    format!("expected a constructor name, found {got:?}"),
                ))
            }
        };
        if !["Sym", "Alt", "Cyc", "Dih", "SO3", "Omega3", "Perm", "Mat"].contains(&name.as_str()) {
            return Err(Error::UnknownConstructor(name));
        }
        self.expect(Tok::Open, "`(`")?;
        let spec = match name.as_str() {
            "Sym" => GroupSpec::Symmetric(self.positive()?),
            "Alt" => GroupSpec::Alternating(self.positive()?),
            "Cyc" => GroupSpec::Cyclic(self.positive()?),
            "Dih" => GroupSpec::Dihedral(self.positive()?),
            "SO3" => GroupSpec::SO3(self.positive()? as u32),
            "Omega3" => GroupSpec::Omega3(self.positive()? as u32),
            "Perm" => {
                let degree = self.positive()?;
                self.expect(Tok::Semi, "`;`")?;
                let generators = self.list(Self::perm_generator)?;
                GroupSpec::Perm { degree, generators }
            }
            _ => {
                let p = self.positive()? as u32;
                self.expect(Tok::Comma, "`,`")?;
                let n = self.positive()?;
                self.expect(Tok::Semi, "`;`")?;
                let generators = self.list(Self::matrix)?;
                GroupSpec::Mat { p, n, generators }
            }
        };
        self.expect(Tok::Close, "`)`")?;
        let at = self.at();
        match self.next() {
            Tok::End => Ok(spec),
            got => Err(syntax(at, format!("trailing input {got:?}"))),
        }
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    parser.spec()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

impl GroupSpec {
    /// Group order when it is known without enumeration.
    pub fn known_order(&self) -> Option<u128> {
        match *self {
            GroupSpec::Symmetric(n) => Some(factorial(n)),
            GroupSpec::Alternating(n) => Some(if n < 2 { 1 } else { factorial(n) / 2 }),
            GroupSpec::Cyclic(n) => Some(n as u128),
            GroupSpec::Dihedral(n) => Some(2 * n as u128),
            _ => None,
        }
    }

    /// The generating elements this spec denotes. Not defined for the
    /// orthogonal constructors, which are enumerated by scanning.
    pub fn generators(&self) -> Result<Vec<Element>> {
        let cyc = |deg: usize, cycles: &[Vec<usize>]| -> Result<Element> {
            Ok(Permutation::from_cycles(deg, cycles)?.into())
        };
        match self {
            GroupSpec::Symmetric(n) => match *n {
                1 => Ok(vec![Permutation::identity(1).into()]),
                2 => Ok(vec![cyc(2, &[vec![0, 1]])?]),
                n => Ok(vec![cyc(n, &[vec![0, 1]])?, cyc(n, &[(0..n).collect()])?]),
            },
            GroupSpec::Alternating(n) => {
                if *n < 3 {
                    Ok(vec![Permutation::identity(*n).into()])
                } else {
                    (2..*n).map(|i| cyc(*n, &[vec![0, 1, i]])).collect()
                }
            }
            GroupSpec::Cyclic(n) => Ok(vec![cyc(*n, &[(0..*n).collect()])?]),
            GroupSpec::Dihedral(n) => match *n {
                1 => Ok(vec![cyc(2, &[vec![0, 1]])?]),
                2 => Ok(vec![cyc(4, &[vec![0, 1]])?, cyc(4, &[vec![2, 3]])?]),
                n => {
                    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
                    Ok(vec![
                        cyc(n, &[(0..n).collect()])?,
                        Permutation::from_images(reflection)?.into(),
                    ])
                }
            },
            GroupSpec::Perm { degree, generators } => generators
                .iter()
                .map(|cycles| cyc(*degree, cycles))
                .collect(),
            GroupSpec::Mat { p, n, generators } => generators
                .iter()
                .map(|entries| Ok(PrimeFieldMatrix::new(*p, *n, entries.clone())?.into()))
                .collect(),
            GroupSpec::SO3(_) | GroupSpec::Omega3(_) => Err(Error::InvalidInput(
                "orthogonal groups are enumerated directly".into(),
            )),
        }
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        if let Some(order) = self.known_order() {
            if order > cap as u128 {
                return Err(Error::CapExceeded { cap: cap as u64 });
            }
        }
        match self {
            GroupSpec::SO3(p) => so3_enumerate(*p),
            GroupSpec::Omega3(p) => omega3_enumerate(*p),
            _ => closure_enumerate(&self.generators()?, cap),
        }
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupSpec::Symmetric(n) => write!(f, "Sym({n})"),
            GroupSpec::Alternating(n) => write!(f, "Alt({n})"),
            GroupSpec::Cyclic(n) => write!(f, "Cyc({n})"),
            GroupSpec::Dihedral(n) => write!(f, "Dih({n})"),
            GroupSpec::SO3(p) => write!(f, "SO3({p})"),
            GroupSpec::Omega3(p) => write!(f, "Omega3({p})"),
            GroupSpec::Perm { degree, generators } => {
                write!(f, "Perm({degree}; ")?;
                for (k, g) in generators.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    if g.is_empty() {
                        write!(f, "()")?;
                    }
                    for c in g {
                        let pts: Vec<String> = c.iter().map(usize::to_string).collect();
                        write!(f, "({})", pts.join(" "))?;
                    }
                }
                write!(f, ")")
            }
            GroupSpec::Mat { p, n, generators } => {
                write!(f, "Mat({p}, {n}; ")?;
                for (k, g) in generators.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    let xs: Vec<String> = g.iter().map(i64::to_string).collect();
                    write!(f, "[{}]", xs.join(" "))?;
                }
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    #[test]
    fn parses_constructors() {
        assert_eq!(parse_group_spec("Sym(5)").unwrap(), GroupSpec::Symmetric(5));
        assert_eq!(parse_group_spec(" SO3( 5 ) ").unwrap(), GroupSpec::SO3(5));
        assert_eq!(
            parse_group_spec("Perm(5; (0 1), (0 1 2 3 4))").unwrap(),
            GroupSpec::Perm {
                degree: 5,
                generators: vec![vec![vec![0, 1]], vec![vec![0, 1, 2, 3, 4]]],
            }
        );
        assert_eq!(
            parse_group_spec("Mat(5, 2; [0 -1 1 0], [1,1,0,1])").unwrap(),
            GroupSpec::Mat {
                p: 5,
                n: 2,
                generators: vec![vec![0, -1, 1, 0], vec![1, 1, 0, 1]],
            }
        );
        assert_eq!(
            parse_group_spec("Perm(4; (0 1)(2 3), ())").unwrap(),
            GroupSpec::Perm {
                degree: 4,
                generators: vec![vec![vec![0, 1], vec![2, 3]], vec![]],
            }
        );
    }

    #[test]
    fn reports_errors() {
        assert_eq!(
            parse_group_spec("Foo(3)").unwrap_err(),
            Error::UnknownConstructor("Foo".into())
        );
        assert!(matches!(
            parse_group_spec("Sym(5"),
            Err(Error::Syntax { pos: 5, .. })
        ));
        assert!(matches!(
            parse_group_spec("Sym(5) x"),
            Err(Error::Syntax { pos: 7, .. })
        ));
        assert!(matches!(
            parse_group_spec("Sym(0)"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_group_spec("Sym(5)$"),
            Err(Error::Syntax { pos: 6, .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "Sym(4)",
            "Dih(6)",
            "Perm(4; (0 1)(2 3), ())",
            "Mat(3, 2; [0 2 1 0], [1 1 0 1])",
        ] {
            let spec = parse_group_spec(text).unwrap();
            assert_eq!(parse_group_spec(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn builds_standard_families() {
        let order = |t: &str| {
            parse_group_spec(t)
                .unwrap()
                .build(DEFAULT_CAP)
                .unwrap()
                .order()
        };
        assert_eq!(order("Sym(1)"), 1);
        assert_eq!(order("Sym(2)"), 2);
        assert_eq!(order("Sym(4)"), 24);
        assert_eq!(order("Alt(2)"), 1);
        assert_eq!(order("Alt(4)"), 12);
        assert_eq!(order("Alt(5)"), 60);
        assert_eq!(order("Cyc(1)"), 1);
        assert_eq!(order("Cyc(12)"), 12);
        for n in 1..=8 {
            assert_eq!(order(&format!("Dih({n})")), 2 * n);
        }
        // Q8 inside SL_2(F_3)
        assert_eq!(order("Mat(3, 2; [0 2 1 0], [1 1 1 2])"), 8);
    }

    #[test]
    fn cap_precheck() {
        let err = parse_group_spec("Sym(50)")
            .unwrap()
            .build(DEFAULT_CAP)
            .unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                cap: DEFAULT_CAP as u64
            }
        );
    }
}
