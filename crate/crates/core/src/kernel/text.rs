//! Canonical text form of ways.
//!
//! `lazy`, `two A B SEL ACT REPAIR` or `three A B D SEL PIVOT REPAIR`, where
//! `SEL` is `none`, `sub:I`, `pair:I`, `empty:sub` or `empty:pair`; `ACT` is
//! `nothing`, `def:V:E` or `free:E`; `PIVOT` is `none`, `def:V:E` or
//! `non:V:E`; and `REPAIR` is `repair:-` or `repair:V:E,V:E,...`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{Action, Branch, Pivot, Selection, Way};
use crate::coloring::Color;
use crate::error::Error;
use crate::walk::RepairPick;

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selection::None => f.write_str("none"),
            Selection::SubPath(i) => write!(f, "sub:{i}"),
            Selection::PathPair(i) => write!(f, "pair:{i}"),
            Selection::Empty(Branch::SubPath) => f.write_str("empty:sub"),
            Selection::Empty(Branch::PathPair) => f.write_str("empty:pair"),
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Nothing => f.write_str("nothing"),
            Action::DeficientFlip { vertex, edge } => write!(f, "def:{vertex}:{edge}"),
            Action::FreeFlip { edge } => write!(f, "free:{edge}"),
        }
    }
}

impl fmt::Display for Pivot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pivot::None => f.write_str("none"),
            Pivot::Deficient { vertex, edge } => write!(f, "def:{vertex}:{edge}"),
            Pivot::NonDeficient { vertex, edge } => write!(f, "non:{vertex}:{edge}"),
        }
    }
}

struct Picks<'a>(&'a [RepairPick]);

impl fmt::Display for Picks<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("repair:")?;
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", p.vertex, p.edge)?;
        }
        Ok(())
    }
}

impl fmt::Display for Way {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Way::Lazy => f.write_str("lazy"),
            Way::TwoColor { colors: (a, b), selection, action, repair } => {
                write!(f, "two {a} {b} {selection} {action} {}", Picks(repair))
            }
            Way::ThreeColor { colors: (a, b), distinguished, selection, pivot, repair } => {
                write!(f, "three {a} {b} {distinguished} {selection} {pivot} {}", Picks(repair))
            }
        }
    }
}

fn bad(s: &str) -> Error {
    Error::Parse(alloc::format!("malformed way token '{s}'"))
}

fn num<T: FromStr>(s: &str) -> Result<T, Error> {
    s.parse().map_err(|_| bad(s))
}

fn pair_of(s: &str, tag: &str) -> Option<(usize, usize)> {
    let rest = s.strip_prefix(tag)?.strip_prefix(':')?;
    let (v, e) = rest.split_once(':')?;
    Some((v.parse().ok()?, e.parse().ok()?))
}

impl FromStr for Selection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "none" => Ok(Selection::None),
            "empty:sub" => Ok(Selection::Empty(Branch::SubPath)),
            "empty:pair" => Ok(Selection::Empty(Branch::PathPair)),
            _ => match s.split_once(':') {
                Some(("sub", i)) => Ok(Selection::SubPath(num(i)?)),
                Some(("pair", i)) => Ok(Selection::PathPair(num(i)?)),
                _ => Err(bad(s)),
            },
        }
    }
}

impl FromStr for Action {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "nothing" {
            return Ok(Action::Nothing);
        }
        if let Some((vertex, edge)) = pair_of(s, "def") {
            return Ok(Action::DeficientFlip { vertex, edge });
        }
        match s.split_once(':') {
            Some(("free", e)) => Ok(Action::FreeFlip { edge: num(e)? }),
            _ => Err(bad(s)),
        }
    }
}

impl FromStr for Pivot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "none" {
            return Ok(Pivot::None);
        }
        if let Some((vertex, edge)) = pair_of(s, "def") {
            return Ok(Pivot::Deficient { vertex, edge });
        }
        if let Some((vertex, edge)) = pair_of(s, "non") {
            return Ok(Pivot::NonDeficient { vertex, edge });
        }
        Err(bad(s))
    }
}

fn parse_picks(s: &str) -> Result<Vec<RepairPick>, Error> {
    let rest = s.strip_prefix("repair:").ok_or_else(|| bad(s))?;
    if rest == "-" {
        return Ok(Vec::new());
    }
    rest.split(',')
        .map(|p| {
            let (v, e) = p.split_once(':').ok_or_else(|| bad(p))?;
            Ok(RepairPick { vertex: num(v)?, edge: num(e)? })
        })
        .collect()
}

impl FromStr for Way {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t: Vec<&str> = s.split_whitespace().collect();
        let color = |x: &str| num::<Color>(x);
        match t.as_slice() {
            ["lazy"] => Ok(Way::Lazy),
            ["two", a, b, sel, act, rep] => Ok(Way::TwoColor {
                colors: (color(a)?, color(b)?),
                selection: sel.parse()?,
                action: act.parse()?,
                repair: parse_picks(rep)?,
            }),
            ["three", a, b, d, sel, piv, rep] => Ok(Way::ThreeColor {
                colors: (color(a)?, color(b)?),
                distinguished: color(d)?,
                selection: sel.parse()?,
                pivot: piv.parse()?,
                repair: parse_picks(rep)?,
            }),
            _ => Err(Error::Parse(alloc::format!("malformed way '{s}'"))),
        }
    }
}
