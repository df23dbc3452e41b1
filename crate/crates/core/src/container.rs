//! The `WGT1` checkpoint container.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! magic "WGT1" | version u32 = 1 | tensor_count u32
//! per tensor:  name_len u32 | name (UTF-8) | dtype u8 | rank u8
//!              | dims (rank x u64) | data_offset u64 | data_len u64
//! payloads, each starting at the next 8-byte aligned offset, zero padded
//! ```
//!
//! Names are unique and sorted ascending bytewise, so a checkpoint has
//! exactly one encoding. See FORMAT.md at the repository root.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use crate::checkpoint::{Checkpoint, DType, TensorEntry};
use crate::error::{Error, Result};

pub const MAGIC: [u8; 4] = *b"WGT1";
pub const VERSION: u32 = 1;
pub const ALIGN: u64 = 8;

fn align_up(offset: u64) -> u64 {
    offset.div_ceil(ALIGN) * ALIGN
}

/// Size of the index entry for `name` with `rank` dims.
fn index_entry_len(name: &str, rank: usize) -> u64 {
    4 + name.len() as u64 + 1 + 1 + 8 * rank as u64 + 8 + 8
}

/// Writes `ckpt` and returns the number of bytes written.
pub fn write_container<W: Write>(ckpt: &Checkpoint, mut sink: W) -> Result<u64> {
    let count = u32::try_from(ckpt.len())
        .map_err(|_| Error::MalformedHeader("more than u32::MAX tensors".into()))?;

    let mut cursor = 12u64;
    for (name, entry) in ckpt.iter() {
        cursor += index_entry_len(name, entry.shape().len());
    }
    let mut offsets = Vec::with_capacity(ckpt.len());
    for (_, entry) in ckpt.iter() {
        cursor = align_up(cursor);
        let len = (entry.values().len() * entry.dtype().size()) as u64;
        offsets.push((cursor, len));
        cursor += len;
    }

    let mut header = Vec::new();
    header.extend_from_slice(&MAGIC);
    header.extend_from_slice(&VERSION.to_le_bytes());
    header.extend_from_slice(&count.to_le_bytes());
    for ((name, entry), (offset, len)) in ckpt.iter().zip(&offsets) {
        let name_len = u32::try_from(name.len())
            .map_err(|_| Error::MalformedHeader(format!("name `{name}` too long")))?;
        header.extend_from_slice(&name_len.to_le_bytes());
        header.extend_from_slice(name.as_bytes());
        header.push(entry.dtype().code());
        header.push(entry.rank());
        for d in entry.shape() {
            header.extend_from_slice(&(*d as u64).to_le_bytes());
        }
        header.extend_from_slice(&offset.to_le_bytes());
        header.extend_from_slice(&len.to_le_bytes());
    }
    sink.write_all(&header)?;

    let mut written = header.len() as u64;
    let mut buf = Vec::new();
    for ((_, entry), (offset, len)) in ckpt.iter().zip(&offsets) {
        let pad = (offset - written) as usize;
        sink.write_all(&[0u8; ALIGN as usize][..pad])?;
        buf.clear();
        buf.reserve(*len as usize);
        match entry.dtype() {
            DType::F32 => {
                for v in entry.values() {
                    buf.extend_from_slice(&(*v as f32).to_le_bytes());
                }
            }
            DType::F64 => {
                for v in entry.values() {
                    buf.extend_from_slice(&v.to_le_bytes());
                }
            }
        }
        sink.write_all(&buf)?;
        written = offset + len;
    }
    sink.flush()?;
    Ok(written)
}

pub fn to_bytes(ckpt: &Checkpoint) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    write_container(ckpt, &mut out)?;
    Ok(out)
}

pub fn write_file(ckpt: &Checkpoint, path: impl AsRef<Path>) -> Result<u64> {
    let file = File::create(path)?;
    write_container(ckpt, BufWriter::new(file))
}

/// Reads a whole container from `source`.
pub fn read_container<R: Read>(mut source: R) -> Result<Checkpoint> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;
    from_bytes(&bytes)
}

pub fn read_file(path: impl AsRef<Path>) -> Result<Checkpoint> {
    from_bytes(&std::fs::read(path)?)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn take(&mut self, n: usize, what: &str) -> Result<&'a [u8]> {
        let end = self
            .pos
            .checked_add(n)
            .filter(|end| *end <= self.bytes.len())
            .ok_or_else(|| Error::TruncatedFile(format!("header ends inside {what}")))?;
        let out = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(out)
    }

    fn u8(&mut self, what: &str) -> Result<u8> {
        Ok(self.take(1, what)?[0])
    }

    fn u32(&mut self, what: &str) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4, what)?.try_into().unwrap()))
    }

    fn u64(&mut self, what: &str) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8, what)?.try_into().unwrap()))
    }
}

struct IndexEntry {
    name: String,
    dtype: DType,
    shape: Vec<usize>,
    offset: u64,
    len: u64,
}

/// Parses and validates a complete container image.
pub fn from_bytes(bytes: &[u8]) -> Result<Checkpoint> {
    let mut p = Parser { bytes, pos: 0 };
    let magic: [u8; 4] = p.take(4, "magic")?.try_into().unwrap();
    if magic != MAGIC {
        return Err(Error::BadMagic(magic));
    }
    let version = p.u32("version")?;
    if version != VERSION {
        return Err(Error::UnsupportedVersion(version));
    }
    let count = p.u32("tensor count")?;

    // Each index entry needs at least 30 bytes, which bounds the allocation.
    let max_entries = bytes.len() / 30;
    let mut index = Vec::with_capacity((count as usize).min(max_entries));
    for i in 0..count {
        let name_len = p.u32("name length")? as usize;
        let name = std::str::from_utf8(p.take(name_len, "name")?)
            .map_err(|_| Error::MalformedHeader(format!("name of tensor {i} is not UTF-8")))?
            .to_string();
        let dtype_code = p.u8("dtype")?;
        let dtype = DType::from_code(dtype_code).ok_or_else(|| {
            Error::MalformedHeader(format!("`{name}` has unknown dtype {dtype_code}"))
        })?;
        let rank = p.u8("rank")?;
        if !(1..=3).contains(&rank) {
            return Err(Error::MalformedHeader(format!("`{name}` has rank {rank}")));
        }
        let mut shape = Vec::with_capacity(rank as usize);
        for _ in 0..rank {
            let d = p.u64("dims")?;
            let d = usize::try_from(d)
                .ok()
                .filter(|d| *d > 0)
                .ok_or_else(|| Error::MalformedHeader(format!("`{name}` has dim {d}")))?;
            shape.push(d);
        }
        let offset = p.u64("data offset")?;
        let len = p.u64("data length")?;

        let expected_len = shape
            .iter()
            .try_fold(dtype.size() as u64, |acc, d| acc.checked_mul(*d as u64))
            .ok_or_else(|| Error::MalformedHeader(format!("`{name}` size overflows")))?;
        if len != expected_len {
            return Err(Error::MalformedHeader(format!(
                "`{name}` declares {len} bytes, dims need {expected_len}"
            )));
        }
        if let Some(prev) = index.last() {
            let prev: &IndexEntry = prev;
            if name.as_bytes() <= prev.name.as_bytes() {
                return Err(Error::NameOrderViolation(name));
            }
        }
        index.push(IndexEntry {
            name,
            dtype,
            shape,
            offset,
            len,
        });
    }

    let mut cursor = p.pos as u64;
    let file_len = bytes.len() as u64;
    let mut ckpt = Checkpoint::new();
    for entry in index {
        let expected = align_up(cursor);
        if entry.offset < expected {
            return Err(Error::OverlappingSegments(format!(
                "`{}` starts at {} before {}",
                entry.name, entry.offset, expected
            )));
        }
        if entry.offset != expected {
            return Err(Error::MalformedHeader(format!(
                "`{}` starts at {}, expected {}",
                entry.name, entry.offset, expected
            )));
        }
        let end = entry
            .offset
            .checked_add(entry.len)
            .filter(|end| *end <= file_len)
            .ok_or_else(|| {
                Error::TruncatedFile(format!("payload of `{}` runs past end of file", entry.name))
            })?;
        if bytes[cursor as usize..entry.offset as usize]
            .iter()
            .any(|b| *b != 0)
        {
            return Err(Error::MalformedHeader(format!(
                "non-zero padding before `{}`",
                entry.name
            )));
        }
        let payload = &bytes[entry.offset as usize..end as usize];
        let values: Vec<f64> = match entry.dtype {
            DType::F32 => payload
                .chunks_exact(4)
                .map(|c| f32::from_le_bytes(c.try_into().unwrap()) as f64)
                .collect(),
            DType::F64 => payload
                .chunks_exact(8)
                .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
                .collect(),
        };
        let tensor = TensorEntry::new(entry.dtype, &entry.shape, values)?;
        ckpt.insert(entry.name, tensor)?;
        cursor = end;
    }
    if cursor != file_len {
        return Err(Error::MalformedHeader(format!(
            "{} trailing bytes after last payload",
            file_len - cursor
        )));
    }
    Ok(ckpt)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(dtype: DType, shape: &[usize], data: Vec<f64>) -> TensorEntry {
        TensorEntry::new(dtype, shape, data).unwrap()
    }

    #[test]
    fn empty_checkpoint_is_twelve_bytes() {
        let bytes = to_bytes(&Checkpoint::new()).unwrap();
        assert_eq!(bytes, b"WGT1\x01\x00\x00\x00\x00\x00\x00\x00");
        assert!(from_bytes(&bytes).unwrap().is_empty());
    }

    #[test]
    fn single_f32_payload() {
        let mut c = Checkpoint::new();
        c.insert("a", entry(DType::F32, &[1], vec![1.0])).unwrap();
        let bytes = to_bytes(&c).unwrap();
        // 12 header + (4 + 1 + 1 + 1 + 8 + 8 + 8) index = 43, aligned to 48.
        assert_eq!(bytes.len(), 52);
        assert_eq!(&bytes[48..], &[0x00, 0x00, 0x80, 0x3F]);
        let offset = u64::from_le_bytes(bytes[27..35].try_into().unwrap());
        assert_eq!(offset, 48);
    }

    #[test]
    fn round_trip_mixed_dtypes() {
        let mut c = Checkpoint::new();
        c.insert(
            "b",
            entry(DType::F64, &[2, 2], vec![1.5, -2.0, 1e-300, 3.0]),
        )
        .unwrap();
        c.insert("a", entry(DType::F32, &[3], vec![0.1, 0.2, 0.3]))
            .unwrap();
        c.insert("c", entry(DType::F32, &[1, 2, 1], vec![7.0, 8.0]))
            .unwrap();
        let bytes = to_bytes(&c).unwrap();
        let back = from_bytes(&bytes).unwrap();
        assert!(back.bit_eq(&c));
        assert_eq!(to_bytes(&back).unwrap(), bytes);
    }

    #[test]
    fn bad_magic_and_version() {
        let mut bytes = to_bytes(&Checkpoint::new()).unwrap();
        bytes[..4].copy_from_slice(b"XXXX");
        assert_eq!(from_bytes(&bytes).unwrap_err().code(), "BadMagic");
        let mut bytes = to_bytes(&Checkpoint::new()).unwrap();
        bytes[4] = 2;
        assert_eq!(from_bytes(&bytes).unwrap_err().code(), "UnsupportedVersion");
    }

    #[test]
    fn truncated_payload() {
        let mut c = Checkpoint::new();
        c.insert("w", entry(DType::F32, &[4], vec![1.0; 4]))
            .unwrap();
        let bytes = to_bytes(&c).unwrap();
        let err = from_bytes(&bytes[..bytes.len() - 1]).unwrap_err();
        assert_eq!(err.code(), "TruncatedFile");
        let err = from_bytes(&bytes[..20]).unwrap_err();
        assert_eq!(err.code(), "TruncatedFile");
    }

    fn two_tensor_image() -> Vec<u8> {
        let mut c = Checkpoint::new();
        c.insert("a", entry(DType::F64, &[1], vec![1.0])).unwrap();
        c.insert("b", entry(DType::F64, &[1], vec![2.0])).unwrap();
        to_bytes(&c).unwrap()
    }

    #[test]
    fn out_of_order_names() {
        let mut bytes = two_tensor_image();
        // Rename "b" to "a": second index entry name byte.
        let second_name = 12 + (4 + 1 + 1 + 1 + 8 + 8 + 8) + 4;
        assert_eq!(bytes[second_name], b'b');
        bytes[second_name] = b'a';
        assert_eq!(from_bytes(&bytes).unwrap_err().code(), "NameOrderViolation");
    }

    #[test]
    fn overlapping_payloads() {
        let mut bytes = two_tensor_image();
        let first_entry = 12 + 4 + 1 + 1 + 1 + 8;
        let second_entry = 12 + 31 + 4 + 1 + 1 + 1 + 8;
        let first_offset = bytes[first_entry..first_entry + 8].to_vec();
        bytes[second_entry..second_entry + 8].copy_from_slice(&first_offset);
        assert_eq!(
            from_bytes(&bytes).unwrap_err().code(),
            "OverlappingSegments"
        );
    }

    #[test]
    fn trailing_garbage() {
        let mut bytes = two_tensor_image();
        bytes.push(0);
        assert_eq!(from_bytes(&bytes).unwrap_err().code(), "MalformedHeader");
    }

    #[test]
    fn huge_declared_count_does_not_allocate() {
        let mut bytes = b"WGT1\x01\x00\x00\x00".to_vec();
        bytes.extend_from_slice(&u32::MAX.to_le_bytes());
        assert_eq!(from_bytes(&bytes).unwrap_err().code(), "TruncatedFile");
    }
}
