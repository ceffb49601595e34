//! On-disk form of a [`ChamberTable`]: pretty-printed JSON, every number a
//! decimal string, fields in a fixed order, guarded by a SHA-256 checksum.

use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cone::ConeH;
use crate::error::{Error, Result};
use crate::exact::{IntMat, IntVec};
use crate::residue::{QuasiPolynomial, QuasiRecord};
use crate::so5::{BuildStats, Chamber, ChamberTable};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StatsRecord {
    pub basic_subsets: String,
    pub nbc_subsets: String,
    pub torus_points: String,
    pub maximal_cones: String,
    pub intersections: String,
    pub glued_chambers: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChamberRecord {
    pub id: String,
    pub normals: Vec<Vec<String>>,
    pub quasi: QuasiRecord,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Payload {
    version: String,
    a: IntMat,
    b: IntMat,
    stats: StatsRecord,
    chambers: Vec<ChamberRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Envelope {
    #[serde(flatten)]
    payload: Payload,
    checksum: String,
}

fn checksum(p: &Payload) -> Result<String> {
    let bytes = serde_json::to_vec(p).map_err(|e| Error::CorruptDatabase(e.to_string()))?;
    Ok(Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect())
}

fn parse_usize(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::CorruptDatabase(format!("bad count {s:?}")))
}

/// Serializes a table; identical tables give identical bytes.
pub fn to_string(table: &ChamberTable) -> Result<String> {
    let s = &table.stats;
    let payload = Payload {
        version: FORMAT_VERSION.to_string(),
        a: table.a.clone(),
        b: table.b.clone(),
        stats: StatsRecord {
            basic_subsets: s.basic_subsets.to_string(),
            nbc_subsets: s.nbc_subsets.to_string(),
            torus_points: s.torus_points.to_string(),
            maximal_cones: s.maximal_cones.to_string(),
            intersections: s.intersections.to_string(),
            glued_chambers: s.glued_chambers.to_string(),
        },
        chambers: table
            .chambers
            .iter()
            .map(|c| ChamberRecord {
                id: c.id.to_string(),
                normals: c.cone.normals().iter().map(|n| n.iter().map(ToString::to_string).collect()).collect(),
                quasi: QuasiRecord::from(&c.quasi),
            })
            .collect(),
    };
    let checksum = checksum(&payload)?;
    let mut out = serde_json::to_string_pretty(&Envelope { payload, checksum })
        .map_err(|e| Error::CorruptDatabase(e.to_string()))?;
    out.push('\n');
    Ok(out)
}

/// Parses and verifies a serialized table.
pub fn from_str(text: &str) -> Result<ChamberTable> {
    let env: Envelope = serde_json::from_str(text).map_err(|e| Error::CorruptDatabase(e.to_string()))?;
    if env.payload.version != FORMAT_VERSION {
        return Err(Error::CorruptDatabase(format!("unsupported version {:?}", env.payload.version)));
    }
    if checksum(&env.payload)? != env.checksum {
        return Err(Error::CorruptDatabase("checksum mismatch".into()));
    }
    let p = env.payload;
    if p.a.rows() != p.b.rows() {
        return Err(Error::CorruptDatabase("A and B have different row counts".into()));
    }
    let k = p.b.cols();
    let corrupt = |e: Error| Error::CorruptDatabase(e.to_string());
    let mut chambers = Vec::with_capacity(p.chambers.len());
    for r in &p.chambers {
        let normals: Vec<IntVec> = r
            .normals
            .iter()
            .map(|n| {
                n.iter()
                    .map(|s| s.parse::<BigInt>().map_err(|_| Error::CorruptDatabase(format!("bad integer {s:?}"))))
                    .collect()
            })
            .collect::<Result<_>>()?;
        let cone = ConeH::from_inequalities(k, &normals).map_err(corrupt)?;
        let quasi = QuasiPolynomial::try_from(&r.quasi).map_err(corrupt)?;
        if quasi.dim() != k {
            return Err(Error::CorruptDatabase(format!("chamber {} has {} variables", r.id, quasi.dim())));
        }
        chambers.push(Chamber { id: parse_usize(&r.id)?, cone, quasi });
    }
    let s = &p.stats;
    let stats = BuildStats {
        basic_subsets: parse_usize(&s.basic_subsets)?,
        nbc_subsets: parse_usize(&s.nbc_subsets)?,
        torus_points: parse_usize(&s.torus_points)?,
        maximal_cones: parse_usize(&s.maximal_cones)?,
        intersections: parse_usize(&s.intersections)?,
        glued_chambers: parse_usize(&s.glued_chambers)?,
    };
    Ok(ChamberTable { a: p.a, b: p.b, chambers, stats })
}

pub fn save(table: &ChamberTable, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, to_string(table)?).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn load(path: impl AsRef<Path>) -> Result<ChamberTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    from_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> ChamberTable {
        let a = IntMat::from_rows(&[[1, 1, 0], [0, 1, 1]]);
        ChamberTable::build_with(&a, &IntMat::identity(2)).unwrap()
    }

    #[test]
    fn round_trip() {
        let t = small();
        let text = to_string(&t).unwrap();
        let back = from_str(&text).unwrap();
        assert_eq!(back.chambers.len(), t.chambers.len());
        for (x, y) in back.chambers.iter().zip(&t.chambers) {
            assert_eq!(x.id, y.id);
            assert_eq!(x.cone, y.cone);
            assert!(x.quasi.equal(&y.quasi));
        }
        assert_eq!(to_string(&back).unwrap(), text);
    }

    #[test]
    fn tampering_is_detected() {
        let text = to_string(&small()).unwrap();
        let bad = text.replacen("\"1\"", "\"2\"", 1);
        assert!(matches!(from_str(&bad), Err(Error::CorruptDatabase(_))));
        assert!(matches!(from_str("{"), Err(Error::CorruptDatabase(_))));
    }
}
