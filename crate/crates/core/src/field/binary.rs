//! The SPPV container: `SPPV` magic, u16 version, u32 nlat, u32 nlon, then
//! latitudes, longitudes and row-major values as f64. Everything little-endian.
//! The container carries no date or pressure; callers attach them.

use chrono::NaiveDate;

use super::GphField;
use crate::error::FieldError;

pub const SPPV_MAGIC: &[u8; 4] = b"SPPV";
pub const SPPV_VERSION: u16 = 1;
const HEADER_LEN: usize = 4 + 2 + 4 + 4;

pub fn write_field_bin(field: &GphField) -> Vec<u8> {
    let (nlat, nlon) = (field.nlat(), field.nlon());
    let mut out = Vec::with_capacity(HEADER_LEN + 8 * (nlat + nlon + nlat * nlon));
    out.extend_from_slice(SPPV_MAGIC);
    out.extend_from_slice(&SPPV_VERSION.to_le_bytes());
    out.extend_from_slice(&(nlat as u32).to_le_bytes());
    out.extend_from_slice(&(nlon as u32).to_le_bytes());
    for v in field
        .lats()
        .iter()
        .chain(field.lons())
        .chain(field.values())
    {
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}

pub fn parse_field_bin(
    bytes: &[u8],
    date: NaiveDate,
    pressure_hpa: f64,
) -> Result<GphField, FieldError> {
    if bytes.len() < 4 || &bytes[..4] != SPPV_MAGIC {
        return Err(FieldError::BadMagic);
    }
    if bytes.len() < HEADER_LEN {
        return Err(FieldError::Truncated {
            expected: HEADER_LEN,
            found: bytes.len(),
        });
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != SPPV_VERSION {
        return Err(FieldError::UnsupportedVersion(version));
    }
    let nlat = u32::from_le_bytes(bytes[6..10].try_into().unwrap()) as usize;
    let nlon = u32::from_le_bytes(bytes[10..14].try_into().unwrap()) as usize;
    let count = nlat
        .checked_mul(nlon)
        .and_then(|n| n.checked_add(nlat + nlon))
        .ok_or_else(|| FieldError::InvalidGrid(format!("dimensions {nlat}x{nlon} overflow")))?;
    let expected = HEADER_LEN + 8 * count;
    if bytes.len() < expected {
        return Err(FieldError::Truncated {
            expected,
            found: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(FieldError::TrailingBytes {
            expected,
            found: bytes.len(),
        });
    }
    let mut floats = bytes[HEADER_LEN..]
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()));
    let lats: Vec<f64> = floats.by_ref().take(nlat).collect();
    let lons: Vec<f64> = floats.by_ref().take(nlon).collect();
    let values: Vec<f64> = floats.collect();
    GphField::new(date, pressure_hpa, lats, lons, values)
}
