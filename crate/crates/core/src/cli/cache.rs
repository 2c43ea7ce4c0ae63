//! Persistent Hecke-polynomial cache: one plain-text line per `(weight, m)`,
//! `weight m status c0 c1 ...`, constant term first.
//!
//! Status tokens: `cert:<p>` (irreducible mod p), `fact` (irreducible by
//! factorization), `red` (reducible), `unk`. Writes go through a temporary
//! file in the same directory followed by a rename, so an interrupted scan
//! never leaves a half-written cache. Concurrent writers are not supported.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactmath::IntPolynomial;
use crate::hecke::{HeckePolyRecord, PolyStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CacheStatus {
    Certified(u64),
    Factorization,
    Reducible,
    Unknown,
}

impl CacheStatus {
    pub fn is_irreducible(self) -> bool {
        matches!(self, CacheStatus::Certified(_) | CacheStatus::Factorization)
    }
}

impl From<&PolyStatus> for CacheStatus {
    fn from(s: &PolyStatus) -> Self {
        match s {
            PolyStatus::IrreducibleCertified { prime } => CacheStatus::Certified(*prime),
            PolyStatus::IrreducibleByFactorization => CacheStatus::Factorization,
            PolyStatus::Reducible(_) => CacheStatus::Reducible,
            PolyStatus::Unknown => CacheStatus::Unknown,
        }
    }
}

impl fmt::Display for CacheStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CacheStatus::Certified(p) => write!(f, "cert:{p}"),
            CacheStatus::Factorization => write!(f, "fact"),
            CacheStatus::Reducible => write!(f, "red"),
            CacheStatus::Unknown => write!(f, "unk"),
        }
    }
}

impl FromStr for CacheStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad cache status {s:?}"));
        match s {
            "fact" => Ok(CacheStatus::Factorization),
            "red" => Ok(CacheStatus::Reducible),
            "unk" => Ok(CacheStatus::Unknown),
            _ => {
                let p = s.strip_prefix("cert:").ok_or_else(bad)?;
                if p.is_empty()
                    || !p.bytes().all(|b| b.is_ascii_digit())
                    || (p.len() > 1 && p.starts_with('0'))
                {
                    return Err(bad());
                }
                p.parse().map(CacheStatus::Certified).map_err(|_| bad())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheLine {
    pub weight: u32,
    pub index_m: u32,
    pub status: CacheStatus,
    pub coefficients: Vec<BigInt>,
}

impl CacheLine {
    pub fn key(&self) -> (u32, u32) {
        (self.weight, self.index_m)
    }

    pub fn poly(&self) -> IntPolynomial {
        IntPolynomial::new(self.coefficients.clone())
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn parse(line: &str) -> Result<Self> {
        let mut it = line.split(' ');
        let mut field = |name: &str| {
            it.next()
                .filter(|s| !s.is_empty())
                .ok_or_else(|| Error::Parse(format!("cache line missing {name}: {line:?}")))
        };
        let weight = parse_canonical_u32(field("weight")?)?;
        let index_m = parse_canonical_u32(field("m")?)?;
        let status = field("status")?.parse()?;
        let coefficients = it.map(parse_canonical_int).collect::<Result<Vec<_>>>()?;
        if coefficients.is_empty() {
            return Err(Error::Parse(format!(
                "cache line has no coefficients: {line:?}"
            )));
        }
        Ok(CacheLine {
            weight,
            index_m,
            status,
            coefficients,
        })
    }
}

impl From<&HeckePolyRecord> for CacheLine {
    fn from(r: &HeckePolyRecord) -> Self {
        CacheLine {
            weight: r.weight,
            index_m: r.index_m,
            status: (&r.status).into(),
            coefficients: r.poly.coeffs().to_vec(),
        }
    }
}

impl fmt::Display for CacheLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.weight, self.index_m, self.status)?;
        for c in &self.coefficients {
            write!(f, " {c}")?;
        }
        writeln!(f)
    }
}

// Canonical forms only, so that re-serializing reproduces the input bytes.
fn parse_canonical_u32(s: &str) -> Result<u32> {
    let v: u32 = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))?;
    if v.to_string() != s {
        return Err(Error::Parse(format!("non-canonical integer {s:?}")));
    }
    Ok(v)
}

fn parse_canonical_int(s: &str) -> Result<BigInt> {
    let v: BigInt = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))?;
    if v.to_string() != s {
        return Err(Error::Parse(format!("non-canonical integer {s:?}")));
    }
    Ok(v)
}

/// Cache contents keyed and ordered by `(weight, m)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cache {
    lines: BTreeMap<(u32, u32), CacheLine>,
}

impl Cache {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cache = Cache::default();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let rec = CacheLine::parse(line)?;
            if cache.lines.insert(rec.key(), rec).is_some() {
                return Err(Error::Parse(format!("duplicate cache record: {line:?}")));
            }
        }
        Ok(cache)
    }

    pub fn serialize(&self) -> String {
        self.lines.values().map(|l| l.to_string()).collect()
    }

    /// Reads `path`; a missing file is an empty cache.
    pub fn load(path: &Path) -> Result<Self> {
        match std::fs::read_to_string(path) {
            Ok(text) => Cache::parse(&text),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Cache::default()),
            Err(e) => Err(e.into()),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let dir = match path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(self.serialize().as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(path).map_err(|e| Error::from(e.error))?;
        Ok(())
    }

    pub fn get(&self, weight: u32, m: u32) -> Option<&CacheLine> {
        self.lines.get(&(weight, m))
    }

    pub fn insert(&mut self, line: CacheLine) {
        self.lines.insert(line.key(), line);
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn lines(&self) -> impl Iterator<Item = &CacheLine> {
        self.lines.values()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_round_trip() {
        let text = "24 2 cert:23 -20468736 -1080 1\n";
        let line = CacheLine::parse(text.trim_end()).unwrap();
        assert_eq!(line.weight, 24);
        assert_eq!(line.status, CacheStatus::Certified(23));
        assert_eq!(line.to_string(), text);
    }

    #[test]
    fn rejects_noncanonical() {
        for bad in [
            "24 2 cert:23 +5 1",
            "024 2 fact 1",
            "24 2 fact  1",
            "24 2 cert:023 1",
            "24 2 cert: 1",
            "24 2 maybe 1",
            "24 2 fact",
            "24 2 fact -0",
        ] {
            assert!(CacheLine::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn duplicates_rejected() {
        assert!(Cache::parse("12 2 unk 24 1\n12 2 fact 24 1\n").is_err());
    }

    #[test]
    fn save_and_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("hecke.cache");
        assert!(Cache::load(&path).unwrap().is_empty());
        let mut cache = Cache::default();
        cache.insert(CacheLine::parse("16 2 cert:5 -216 1").unwrap());
        cache.insert(CacheLine::parse("12 2 cert:3 24 1").unwrap());
        cache.save(&path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, "12 2 cert:3 24 1\n16 2 cert:5 -216 1\n");
        assert_eq!(Cache::load(&path).unwrap(), cache);
    }
}
