//! Textual module descriptions:
//!
//! ```text
//! zmod:p=<prime>,k=<int>,type=[e1,...,en]
//! field:p=<prime>,dim=<n>
//! prod:p=<prime>,mult=[m1,m2]
//! kxy:p=<prime>,preset=<name>
//! kxy:p=<prime>,dim=<n>,X=[[..],..],Y=[[..],..]
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::presentation::{KxyPreset, ModulePresentation, ResidueMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleSpec {
    /// ⊕ Z/p^{e_i} over Z/p^k. Exponents are kept in descending order.
    Zmod { p: u64, k: u32, exponents: Vec<u32> },
    Field { p: u64, dim: usize },
    Prod { p: u64, mult: [usize; 2] },
    KxyPreset { p: u64, preset: KxyPreset },
    KxyMatrices {
        p: u64,
        dim: usize,
        x: ResidueMatrix,
        y: ResidueMatrix,
    },
}

impl ModuleSpec {
    pub fn zmod(p: u64, k: u32, exponents: &[u32]) -> Self {
        let mut exponents = exponents.to_vec();
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        ModuleSpec::Zmod { p, k, exponents }
    }

    pub fn to_presentation(&self) -> Result<ModulePresentation> {
        match self {
            ModuleSpec::Zmod { p, k, exponents } => ModulePresentation::zmod(*p, *k, exponents),
            ModuleSpec::Field { p, dim } => ModulePresentation::vector_space(*p, *dim),
            ModuleSpec::Prod { p, mult } => ModulePresentation::product_semisimple(*p, mult[0], mult[1]),
            ModuleSpec::KxyPreset { p, preset } => ModulePresentation::kxy_preset(*p, *preset),
            ModuleSpec::KxyMatrices { p, dim, x, y } => {
                if x.len() != *dim || y.len() != *dim {
                    return Err(Error::InvalidPresentation(format!(
                        "X and Y must be {dim}x{dim}"
                    )));
                }
                ModulePresentation::kxy(*p, x.clone(), y.clone())
            }
        }
    }

    pub fn p(&self) -> u64 {
        match self {
            ModuleSpec::Zmod { p, .. }
            | ModuleSpec::Field { p, .. }
            | ModuleSpec::Prod { p, .. }
            | ModuleSpec::KxyPreset { p, .. }
            | ModuleSpec::KxyMatrices { p, .. } => *p,
        }
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "[")?;
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, "]")
}

fn write_matrix(f: &mut fmt::Formatter<'_>, m: &ResidueMatrix) -> fmt::Result {
    write!(f, "[")?;
    for (i, row) in m.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write_list(f, row)?;
    }
    write!(f, "]")
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Zmod { p, k, exponents } => {
                write!(f, "zmod:p={p},k={k},type=")?;
                write_list(f, exponents)
            }
            ModuleSpec::Field { p, dim } => write!(f, "field:p={p},dim={dim}"),
            ModuleSpec::Prod { p, mult } => write!(f, "prod:p={p},mult=[{},{}]", mult[0], mult[1]),
            ModuleSpec::KxyPreset { p, preset } => write!(f, "kxy:p={p},preset={}", preset.name()),
            ModuleSpec::KxyMatrices { p, dim, x, y } => {
                write!(f, "kxy:p={p},dim={dim},X=")?;
                write_matrix(f, x)?;
                write!(f, ",Y=")?;
                write_matrix(f, y)
            }
        }
    }
}

/// Split `a=1,b=[2,3],c=[[1],[2]]` at top-level commas.
fn split_fields(body: &str) -> std::result::Result<Vec<(&str, &str)>, String> {
    let mut fields = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = body.as_bytes();
    for i in 0..=bytes.len() {
        let at_end = i == bytes.len();
        let c = if at_end { b',' } else { bytes[i] };
        match c {
            b'[' | b'(' => depth += 1,
            b']' | b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err("unbalanced brackets".into());
                }
            }
            b',' if depth == 0 => {
                let field = body[start..i].trim();
                let (key, value) = field
                    .split_once('=')
                    .ok_or_else(|| format!("expected key=value, got `{field}`"))?;
                fields.push((key.trim(), value.trim()));
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err("unbalanced brackets".into());
    }
    Ok(fields)
}

fn parse_int<T: FromStr>(s: &str) -> std::result::Result<T, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a nonnegative integer"))
}

fn parse_list<T: FromStr>(s: &str) -> std::result::Result<Vec<T>, String> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| format!("`{s}` is not a bracketed list"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(parse_int).collect()
}

fn parse_matrix(s: &str) -> std::result::Result<ResidueMatrix, String> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| format!("`{s}` is not a bracketed matrix"))?;
    let mut rows = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let end = rest
            .find(']')
            .ok_or_else(|| format!("unterminated row in `{s}`"))?;
        rows.push(parse_list(&rest[..=end])?);
        rest = rest[end + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
        } else if !rest.is_empty() {
            return Err(format!("unexpected `{rest}` in matrix"));
        }
    }
    Ok(rows)
}

struct Fields<'a> {
    fields: Vec<(&'a str, &'a str)>,
}

impl<'a> Fields<'a> {
    fn take(&mut self, key: &str) -> std::result::Result<Option<&'a str>, String> {
        let hits: Vec<usize> = (0..self.fields.len())
            .filter(|&i| self.fields[i].0 == key)
            .collect();
        match hits.as_slice() {
            [] => Ok(None),
            [i] => Ok(Some(self.fields.remove(*i).1)),
            _ => Err(format!("duplicate key `{key}`")),
        }
    }

    fn require(&mut self, key: &str) -> std::result::Result<&'a str, String> {
        self.take(key)?.ok_or_else(|| format!("missing key `{key}`"))
    }

    fn finish(self) -> std::result::Result<(), String> {
        match self.fields.first() {
            None => Ok(()),
            Some((k, _)) => Err(format!("unknown key `{k}`")),
        }
    }
}

fn parse_spec(input: &str) -> std::result::Result<ModuleSpec, String> {
    let (kind, body) = input
        .trim()
        .split_once(':')
        .ok_or("expected `<kind>:<fields>`")?;
    let mut fields = Fields {
        fields: split_fields(body)?,
    };
    let p: u64 = parse_int(fields.require("p")?)?;
    let spec = match kind {
        "zmod" => {
            let k: u32 = parse_int(fields.require("k")?)?;
            let exponents: Vec<u32> = parse_list(fields.require("type")?)?;
            if exponents.is_empty() {
                return Err("type must list at least one exponent".into());
            }
            if let Some(e) = exponents.iter().find(|&&e| e == 0 || e > k) {
                return Err(format!("exponent {e} outside 1..={k}"));
            }
            ModuleSpec::zmod(p, k, &exponents)
        }
        "field" => ModuleSpec::Field {
            p,
            dim: parse_int(fields.require("dim")?)?,
        },
        "prod" => {
            let mult: Vec<usize> = parse_list(fields.require("mult")?)?;
            let [m1, m2] = mult[..] else {
                return Err("mult must have exactly two entries".into());
            };
            ModuleSpec::Prod { p, mult: [m1, m2] }
        }
        "kxy" => {
            if let Some(name) = fields.take("preset")? {
                let preset =
                    KxyPreset::from_name(name).ok_or_else(|| format!("unknown preset `{name}`"))?;
                ModuleSpec::KxyPreset { p, preset }
            } else {
                let dim: usize = parse_int(fields.require("dim")?)?;
                let x = parse_matrix(fields.require("X")?)?;
                let y = parse_matrix(fields.require("Y")?)?;
                ModuleSpec::KxyMatrices { p, dim, x, y }
            }
        }
        other => return Err(format!("unknown module kind `{other}`")),
    };
    fields.finish()?;
    Ok(spec)
}

impl FromStr for ModuleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s).map_err(|reason| Error::Parse {
            input: s.to_string(),
            reason,
        })
    }
}

/// Parse and build in one step.
pub fn parse_module(s: &str) -> Result<(ModuleSpec, ModulePresentation)> {
    let spec: ModuleSpec = s.parse()?;
    let module = spec.to_presentation()?;
    Ok((spec, module))
}
