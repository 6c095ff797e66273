//! Compact textual form of [`ConstructionSpec`], e.g. `hypergraph:beta=2` or
//! `product:(spc:n=3)x(spc:n=3)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{LrcError, Result};

use super::{fixtures, ConstructionSpec};

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructionSpec::*;
        match self {
            Spc { n } => write!(f, "spc:n={n}"),
            Simplex { m } => write!(f, "simplex:m={m}"),
            RegularGraph { k, r } => write!(f, "graph:k={k},r={r}"),
            Hypergraph { beta } => write!(f, "hypergraph:beta={beta}"),
            ProjectivePlane { s } => write!(f, "pg:s={s}"),
            AffinePlane { s } => write!(f, "ag:s={s}"),
            SteinerTriple { s } => write!(f, "sts:s={s}"),
            R2Chain { t, k } => write!(f, "r2chain:t={t},k={k}"),
            Mols { r, t } => write!(f, "mols:r={r},t={t}"),
            Product { .. } => {
                f.write_str("product:")?;
                write_factors(self, f)
            }
            Eq9 { r, inner } => write!(f, "eq9:r={r},inner=({inner})"),
            Fixture { name } => write!(f, "fixture:{name}"),
        }
    }
}

/// Left-nested products print as one flat chain, matching the left-associative parse.
fn write_factors(spec: &ConstructionSpec, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match spec {
        ConstructionSpec::Product { left, right } => {
            write_factors(left, f)?;
            write!(f, "x({right})")
        }
        other => write!(f, "({other})"),
    }
}

impl FromStr for ConstructionSpec {
    type Err = LrcError;

    fn from_str(s: &str) -> Result<Self> {
        parse(s.trim(), s)
    }
}

fn err(input: &str, msg: impl Into<String>) -> LrcError {
    LrcError::SpecParse {
        input: input.to_owned(),
        msg: msg.into(),
    }
}

fn parse(s: &str, whole: &str) -> Result<ConstructionSpec> {
    use ConstructionSpec::*;
    let (family, body) = s
        .split_once(':')
        .ok_or_else(|| err(whole, "expected `family:params`"))?;
    match family {
        "product" => {
            let groups = paren_groups(body, 'x').map_err(|m| err(whole, m))?;
            if groups.len() < 2 {
                return Err(err(whole, "a product needs at least two factors"));
            }
            let mut specs = groups.into_iter().map(|g| parse(g, whole));
            let first = specs.next().expect("two factors")?;
            specs.try_fold(first, |left, right| {
                Ok(Product {
                    left: Box::new(left),
                    right: Box::new(right?),
                })
            })
        }
        "fixture" => {
            if fixtures::names().contains(&body) {
                Ok(Fixture {
                    name: body.to_owned(),
                })
            } else {
                Err(LrcError::UnknownFixture(body.to_owned()))
            }
        }
        _ => {
            let params = Params::parse(body).map_err(|m| err(whole, m))?;
            let spec = match family {
                "spc" => Spc {
                    n: params.int(whole, "n")?,
                },
                "simplex" => Simplex {
                    m: params.int(whole, "m")?,
                },
                "graph" => RegularGraph {
                    k: params.int(whole, "k")?,
                    r: params.int(whole, "r")?,
                },
                "hypergraph" => Hypergraph {
                    beta: params.int(whole, "beta")?,
                },
                "pg" => ProjectivePlane {
                    s: params.int(whole, "s")?,
                },
                "ag" => AffinePlane {
                    s: params.int(whole, "s")?,
                },
                "sts" => SteinerTriple {
                    s: params.int(whole, "s")?,
                },
                "r2chain" => R2Chain {
                    t: params.int(whole, "t")?,
                    k: params.int(whole, "k")?,
                },
                "mols" => Mols {
                    r: params.int(whole, "r")?,
                    t: params.int(whole, "t")?,
                },
                "eq9" => {
                    let inner = params.get(whole, "inner")?;
                    let inner = inner
                        .strip_prefix('(')
                        .and_then(|i| i.strip_suffix(')'))
                        .ok_or_else(|| err(whole, "inner spec must be parenthesized"))?;
                    Eq9 {
                        r: params.int(whole, "r")?,
                        inner: Box::new(parse(inner, whole)?),
                    }
                }
                other => return Err(err(whole, format!("unknown family `{other}`"))),
            };
            params.finish(whole)?;
            Ok(spec)
        }
    }
}

/// Splits `a(..)` groups joined by `sep` at depth zero, returning group contents.
fn paren_groups(body: &str, sep: char) -> std::result::Result<Vec<&str>, String> {
    let mut groups = Vec::new();
    let mut depth = 0usize;
    let mut start = None;
    let mut expect_sep = false;
    for (i, ch) in body.char_indices() {
        match ch {
            '(' => {
                if depth == 0 {
                    if expect_sep {
                        return Err(format!("missing `{sep}` before position {i}"));
                    }
                    start = Some(i + 1);
                }
                depth += 1;
            }
            ')' => {
                depth = depth.checked_sub(1).ok_or("unbalanced `)`")?;
                if depth == 0 {
                    groups.push(&body[start.take().expect("open paren")..i]);
                    expect_sep = true;
                }
            }
            c if depth == 0 && c == sep && expect_sep => expect_sep = false,
            c if depth == 0 && !c.is_whitespace() => {
                return Err(format!("unexpected `{c}` outside parentheses"));
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err("unbalanced `(`".into());
    }
    if !expect_sep {
        return Err(format!("dangling `{sep}`"));
    }
    Ok(groups)
}

/// `key=value` pairs separated by commas at parenthesis depth zero.
struct Params<'a> {
    pairs: Vec<(&'a str, &'a str)>,
    used: std::cell::RefCell<Vec<bool>>,
}

impl<'a> Params<'a> {
    fn parse(body: &'a str) -> std::result::Result<Self, String> {
        let mut pairs = Vec::new();
        let mut depth = 0usize;
        let mut start = 0;
        let mut items = Vec::new();
        for (i, ch) in body.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth = depth.checked_sub(1).ok_or("unbalanced `)`")?,
                ',' if depth == 0 => {
                    items.push(&body[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err("unbalanced `(`".into());
        }
        items.push(&body[start..]);
        for item in items {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| format!("expected `key=value`, got `{item}`"))?;
            let k = k.trim();
            if pairs.iter().any(|&(p, _)| p == k) {
                return Err(format!("duplicate parameter `{k}`"));
            }
            pairs.push((k, v.trim()));
        }
        let used = std::cell::RefCell::new(vec![false; pairs.len()]);
        Ok(Self { pairs, used })
    }

    fn get(&self, whole: &str, key: &str) -> Result<&'a str> {
        let idx = self
            .pairs
            .iter()
            .position(|&(k, _)| k == key)
            .ok_or_else(|| err(whole, format!("missing parameter `{key}`")))?;
        self.used.borrow_mut()[idx] = true;
        Ok(self.pairs[idx].1)
    }

    fn int(&self, whole: &str, key: &str) -> Result<usize> {
        let v = self.get(whole, key)?;
        v.parse().map_err(|_| {
            err(
                whole,
                format!("`{key}` must be a non-negative integer, got `{v}`"),
            )
        })
    }

    fn finish(&self, whole: &str) -> Result<()> {
        let used = self.used.borrow();
        match self.pairs.iter().zip(used.iter()).find(|(_, &u)| !u) {
            Some(((k, _), _)) => Err(err(whole, format!("unknown parameter `{k}`"))),
            None => Ok(()),
        }
    }
}
