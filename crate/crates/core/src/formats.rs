//! File formats.
//!
//! | data            | format                                                     |
//! |-----------------|------------------------------------------------------------|
//! | interval set    | CSV `id,left,right`                                        |
//! | realization     | CSV `id,value`                                             |
//! | supersequence   | `# key=value` lines, then CSV `position,interval_id,marked,next_marked` |
//! | sorted groups   | CSV `rank,value,ids` (ids joined with `;`, rank from 1)    |
//! | gap preparation | JSON                                                       |
//!
//! Readers report malformed input as [`Error::Parse`] with a 1-based line and
//! column (the column is the field number).
//!
//! The supersequence format is prefix-closed: a file cut short after any
//! row still reads, with `next_marked` pointers and cluster spans that reach
//! past the last row clipped to it.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::intervals::{Group, Interval, IntervalId, IntervalSet, Realization, SortedGroups};
use crate::preprocess::{GapPrep, Occurrence, Provenance, SuperSequence};

fn csv_error(e: csv::Error, line_offset: u64) -> Error {
    let line = e.position().map_or(0, |p| p.line()) + line_offset;
    match e.kind() {
        csv::ErrorKind::Io(_) => Error::Io(std::io::Error::other(e.to_string())),
        csv::ErrorKind::UnequalLengths { expected_len, len, .. } => Error::parse(
            line,
            (*len as usize).min(*expected_len as usize) + 1,
            format!("expected {expected_len} fields, found {len}"),
        ),
        _ => Error::parse(line, 1, e.to_string()),
    }
}

/// CSV records after checking the header; yields `(line, record)`.
fn records(
    input: impl Read,
    header: &[&str],
    line_offset: u64,
) -> Result<impl Iterator<Item = Result<(u64, csv::StringRecord)>>> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
    let found = reader.headers().map_err(|e| csv_error(e, line_offset))?;
    if found.iter().ne(header.iter().copied()) {
        let column = found
            .iter()
            .zip(header)
            .position(|(a, b)| a != *b)
            .unwrap_or(found.len().min(header.len()));
        return Err(Error::parse(
            line_offset + 1,
            column + 1,
            format!("expected header {:?}", header.join(",")),
        ));
    }
    Ok(reader.into_records().map(move |rec| {
        let rec = rec.map_err(|e| csv_error(e, line_offset))?;
        let line = rec.position().map_or(0, |p| p.line()) + line_offset;
        Ok((line, rec))
    }))
}

fn field<T: FromStr>(rec: &csv::StringRecord, index: usize, line: u64, what: &str) -> Result<T> {
    let raw = rec.get(index).unwrap_or("");
    raw.parse()
        .map_err(|_| Error::parse(line, index + 1, format!("invalid {what} {raw:?}")))
}

fn number(rec: &csv::StringRecord, index: usize, line: u64, what: &str) -> Result<f64> {
    let v: f64 = field(rec, index, line, what)?;
    if !v.is_finite() {
        return Err(Error::parse(line, index + 1, format!("{what} must be finite")));
    }
    Ok(v)
}

pub fn read_intervals(input: impl Read) -> Result<IntervalSet> {
    let mut intervals = Vec::new();
    for rec in records(input, &["id", "left", "right"], 0)? {
        let (line, rec) = rec?;
        let id = field(&rec, 0, line, "interval id")?;
        let left = number(&rec, 1, line, "left endpoint")?;
        let right = number(&rec, 2, line, "right endpoint")?;
        let iv = Interval::with_id(id, left, right)
            .map_err(|e| Error::parse(line, 2, e.to_string()))?;
        intervals.push((line, iv));
    }
    let mut seen = std::collections::HashSet::new();
    for (line, iv) in &intervals {
        if !seen.insert(iv.id) {
            return Err(Error::parse(*line, 1, format!("duplicate interval id {}", iv.id)));
        }
    }
    IntervalSet::new(intervals.into_iter().map(|(_, iv)| iv).collect())
}

pub fn write_intervals(mut out: impl Write, set: &IntervalSet) -> Result<()> {
    let mut text = String::from("id,left,right\n");
    for iv in set.iter() {
        writeln!(text, "{},{},{}", iv.id, iv.left, iv.right).unwrap();
    }
    out.write_all(text.as_bytes())?;
    Ok(())
}

/// Reads values without checking them against a set; see [`Realization::validate`].
pub fn read_realization(input: impl Read) -> Result<Realization> {
    let mut values = BTreeMap::new();
    for rec in records(input, &["id", "value"], 0)? {
        let (line, rec) = rec?;
        let id: IntervalId = field(&rec, 0, line, "interval id")?;
        let value = number(&rec, 1, line, "value")?;
        if values.insert(id, value).is_some() {
            return Err(Error::parse(line, 1, format!("duplicate interval id {id}")));
        }
    }
    Ok(Realization::from_values(values))
}

pub fn write_realization(mut out: impl Write, r: &Realization) -> Result<()> {
    let mut text = String::from("id,value\n");
    for (id, v) in r.iter() {
        writeln!(text, "{id},{v}").unwrap();
    }
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn optional(v: Option<f64>) -> String {
    v.map_or_else(|| "none".to_string(), |v| v.to_string())
}

pub fn write_supersequence(mut out: impl Write, seq: &SuperSequence) -> Result<()> {
    let mut text = String::new();
    writeln!(text, "# provenance={}", seq.provenance()).unwrap();
    writeln!(text, "# alpha={}", optional(seq.alpha())).unwrap();
    writeln!(text, "# beta={}", optional(seq.beta())).unwrap();
    writeln!(text, "# n={}", seq.n()).unwrap();
    writeln!(text, "# delta={}", seq.delta()).unwrap();
    let clusters: Vec<String> = seq
        .clusters()
        .iter()
        .map(|c| format!("{}-{}:{}:{}", c.start, c.end, optional(c.alpha), optional(c.beta)))
        .collect();
    writeln!(text, "# clusters={}", clusters.join(";")).unwrap();
    text.push_str("position,interval_id,marked,next_marked\n");
    for (pos, occ) in seq.occurrences().iter().enumerate() {
        let next = seq.next_marked(pos).map_or(String::new(), |p| p.to_string());
        writeln!(text, "{pos},{},{},{next}", occ.id, occ.marked).unwrap();
    }
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn parse_optional(raw: &str) -> std::result::Result<Option<f64>, String> {
    if raw == "none" {
        return Ok(None);
    }
    match raw.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(Some(v)),
        _ => Err(format!("invalid parameter {raw:?}")),
    }
}

type ClusterSpec = (usize, usize, Option<f64>, Option<f64>);

fn parse_cluster(raw: &str) -> Option<ClusterSpec> {
    let mut parts = raw.split(':');
    let (start, end) = parts.next()?.split_once('-')?;
    let alpha = parse_optional(parts.next()?).ok()?;
    let beta = parse_optional(parts.next()?).ok()?;
    if parts.next().is_some() {
        return None;
    }
    Some((start.parse().ok()?, end.parse().ok()?, alpha, beta))
}

pub fn read_supersequence(mut input: impl Read) -> Result<SuperSequence> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    let mut meta: BTreeMap<&str, (u64, &str)> = BTreeMap::new();
    let mut body_start = 0;
    let mut meta_lines = 0u64;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        let Some(entry) = trimmed.strip_prefix('#') else { break };
        meta_lines += 1;
        body_start += line.len();
        let Some((key, value)) = entry.trim().split_once('=') else {
            return Err(Error::parse(meta_lines, 1, "expected `# key=value`"));
        };
        meta.insert(key.trim(), (meta_lines, value.trim()));
    }
    let get = |key: &str| -> Result<(u64, &str)> {
        meta.get(key)
            .copied()
            .ok_or_else(|| Error::parse(meta_lines.max(1), 1, format!("missing `# {key}=` line")))
    };
    let meta_error = |line: u64, msg: String| Error::parse(line, 1, msg);

    let (line, raw) = get("provenance")?;
    let provenance: Provenance = raw.parse().map_err(|e| meta_error(line, e))?;
    let (line, raw) = get("alpha")?;
    let alpha = parse_optional(raw).map_err(|e| meta_error(line, e))?;
    let (line, raw) = get("beta")?;
    let beta = parse_optional(raw).map_err(|e| meta_error(line, e))?;
    let (line, raw) = get("n")?;
    let n: usize = raw.parse().map_err(|_| meta_error(line, format!("invalid n {raw:?}")))?;
    let (line, raw) = get("delta")?;
    let delta: usize = raw.parse().map_err(|_| meta_error(line, format!("invalid delta {raw:?}")))?;
    let clusters: Option<(u64, Vec<ClusterSpec>)> = match meta.get("clusters") {
        None => None,
        Some(&(line, "")) => Some((line, Vec::new())),
        Some(&(line, raw)) => {
            let specs = raw
                .split(';')
                .map(|c| parse_cluster(c).ok_or_else(|| meta_error(line, format!("invalid cluster {c:?}"))))
                .collect::<Result<Vec<_>>>()?;
            Some((line, specs))
        }
    };

    let body = &text.as_bytes()[body_start..];
    let header = ["position", "interval_id", "marked", "next_marked"];
    let mut occurrences = Vec::new();
    let mut declared_next = Vec::new();
    for rec in records(body, &header, meta_lines)? {
        let (line, rec) = rec?;
        let pos: usize = field(&rec, 0, line, "position")?;
        if pos != occurrences.len() {
            return Err(Error::parse(line, 1, format!("expected position {}", occurrences.len())));
        }
        let id: IntervalId = field(&rec, 1, line, "interval id")?;
        let marked: bool = field(&rec, 2, line, "marked flag")?;
        let next = match rec.get(3).unwrap_or("") {
            "" => None,
            _ => Some(field::<usize>(&rec, 3, line, "next_marked")?),
        };
        occurrences.push(Occurrence { id, marked });
        declared_next.push((line, next));
    }
    let len = occurrences.len();
    let mut seq = SuperSequence::new(provenance, occurrences, alpha, beta, n, delta);
    for (pos, &(line, next)) in declared_next.iter().enumerate() {
        if seq.next_marked(pos) != next.filter(|&p| p < len) {
            return Err(Error::parse(line, 4, "next_marked does not match the marked flags"));
        }
    }
    if let Some((line, specs)) = clusters {
        let specs: Vec<ClusterSpec> = specs
            .into_iter()
            .filter(|c| c.0 < len)
            .map(|(start, end, a, b)| (start, end.min(len), a, b))
            .collect();
        let derived: Vec<(usize, usize)> = seq.clusters().iter().map(|c| (c.start, c.end)).collect();
        let declared: Vec<(usize, usize)> = specs.iter().map(|c| (c.0, c.1)).collect();
        if derived != declared {
            return Err(meta_error(line, "clusters do not match the marked runs".to_string()));
        }
        let params: Vec<_> = specs.iter().map(|c| (c.2, c.3)).collect();
        seq = seq.with_cluster_params(&params);
    }
    Ok(seq)
}

pub fn write_sorted_groups(mut out: impl Write, g: &SortedGroups) -> Result<()> {
    let mut text = String::from("rank,value,ids\n");
    for (rank, group) in g.groups.iter().enumerate() {
        let ids: Vec<String> = group.ids.iter().map(|id| id.to_string()).collect();
        writeln!(text, "{},{},{}", rank + 1, group.value, ids.join(";")).unwrap();
    }
    out.write_all(text.as_bytes())?;
    Ok(())
}

pub fn read_sorted_groups(input: impl Read) -> Result<SortedGroups> {
    let mut groups = Vec::new();
    for rec in records(input, &["rank", "value", "ids"], 0)? {
        let (line, rec) = rec?;
        let rank: usize = field(&rec, 0, line, "rank")?;
        if rank != groups.len() + 1 {
            return Err(Error::parse(line, 1, format!("expected rank {}", groups.len() + 1)));
        }
        let value = number(&rec, 1, line, "value")?;
        let ids = rec
            .get(2)
            .unwrap_or("")
            .split(';')
            .map(|raw| raw.parse().map_err(|e: String| Error::parse(line, 3, e)))
            .collect::<Result<Vec<IntervalId>>>()?;
        groups.push(Group { value, ids });
    }
    Ok(SortedGroups { groups, ..Default::default() })
}

pub fn read_gap_prep(input: impl Read) -> Result<GapPrep> {
    serde_json::from_reader(input).map_err(|e| {
        if e.is_io() {
            Error::Json(e)
        } else {
            Error::parse(e.line() as u64, e.column(), e.to_string())
        }
    })
}

pub fn write_gap_prep(mut out: impl Write, prep: &GapPrep) -> Result<()> {
    serde_json::to_writer(&mut out, prep)?;
    out.write_all(b"\n")?;
    Ok(())
}

/// Opens `path` for buffered reading.
pub fn open(path: &Path) -> Result<BufReader<File>> {
    Ok(BufReader::new(File::open(path)?))
}

/// Creates `path` for buffered writing.
pub fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preprocess::{build_marked_supersequence, build_unit_supersequence, omit_for_smallest_gap};

    fn set() -> IntervalSet {
        IntervalSet::from_bounds(&[(0.0, 1.0), (0.5, 1.5), (2.0, 3.0)]).unwrap()
    }

    fn parse_err(e: Error) -> (u64, usize) {
        match e {
            Error::Parse { line, column, .. } => (line, column),
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn intervals_round_trip() {
        let mut buf = Vec::new();
        write_intervals(&mut buf, &set()).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "id,left,right\nI1,0,1\nI2,0.5,1.5\nI3,2,3\n");
        assert_eq!(read_intervals(&buf[..]).unwrap(), set());
        let bare = read_intervals("id,left,right\n7, 0.25 ,1.25\n".as_bytes()).unwrap();
        assert_eq!(bare.intervals()[0], Interval::new(7, 0.25, 1.25).unwrap());
    }

    #[test]
    fn interval_errors_carry_positions() {
        let e = read_intervals("id,left,right\nI1,0,1\nI2,zero,1\n".as_bytes()).unwrap_err();
        assert_eq!(parse_err(e), (3, 2));
        let e = read_intervals("id,left\nI1,0\n".as_bytes()).unwrap_err();
        assert_eq!(parse_err(e), (1, 3));
        let e = read_intervals("id,left,right\nI1,0\n".as_bytes()).unwrap_err();
        assert_eq!(parse_err(e).0, 2);
        let e = read_intervals("id,left,right\nI1,2,1\n".as_bytes()).unwrap_err();
        assert_eq!(parse_err(e), (2, 2));
        let e = read_intervals("id,left,right\nI1,0,1\nI1,2,3\n".as_bytes()).unwrap_err();
        assert_eq!(parse_err(e), (3, 1));
        let e = read_intervals("id,left,right\nI1,0,inf\n".as_bytes()).unwrap_err();
        assert_eq!(parse_err(e), (2, 3));
    }

    #[test]
    fn realization_round_trip() {
        let r = Realization::from_slice(&set(), &[0.9, 0.6, 2.5]).unwrap();
        let mut buf = Vec::new();
        write_realization(&mut buf, &r).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "id,value\nI1,0.9\nI2,0.6\nI3,2.5\n");
        assert_eq!(read_realization(&buf[..]).unwrap(), r);
        let e = read_realization("id,value\nI1,x\n".as_bytes()).unwrap_err();
        assert_eq!(parse_err(e), (2, 2));
    }

    #[test]
    fn supersequence_round_trip() {
        let seq = build_unit_supersequence(&set()).unwrap();
        let mut buf = Vec::new();
        write_supersequence(&mut buf, &seq).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("# provenance=unit\n# alpha=3\n# beta=4\n# n=3\n# delta=2\n"));
        assert!(text.contains("position,interval_id,marked,next_marked\n0,I1,true,1\n"));
        assert!(text.ends_with("4,I3,true,\n"));
        assert_eq!(read_supersequence(&buf[..]).unwrap(), seq);

        let s = IntervalSet::from_bounds(&[(0.0, 1.0), (0.5, 1.5), (3.0, 4.0), (6.0, 7.0), (6.5, 7.5)]).unwrap();
        let marked = build_marked_supersequence(&s).unwrap();
        let mut buf = Vec::new();
        write_supersequence(&mut buf, &marked).unwrap();
        assert_eq!(read_supersequence(&buf[..]).unwrap(), marked);

        let text = String::from_utf8(buf).unwrap();
        let cut: String = text.split_inclusive('\n').take(7 + 3).collect();
        let prefix = read_supersequence(cut.as_bytes()).unwrap();
        assert_eq!(prefix.len(), 3);
        assert_eq!(prefix.clusters().len(), 1);
        assert_eq!(prefix.clusters()[0].beta, Some(4.0));
    }

    #[test]
    fn supersequence_errors() {
        let e = read_supersequence("# provenance=unit\n".as_bytes()).unwrap_err();
        assert!(e.is_parse_error());
        let text = "# provenance=unit\n# alpha=3\n# beta=4\n# n=1\n# delta=1\n\
                    position,interval_id,marked,next_marked\n0,I1,yes,\n";
        assert_eq!(parse_err(read_supersequence(text.as_bytes()).unwrap_err()), (7, 3));
        let text = "# provenance=unit\n# alpha=none\n# beta=none\n# n=1\n# delta=1\n\
                    position,interval_id,marked,next_marked\n0,I1,true,0\n";
        assert_eq!(parse_err(read_supersequence(text.as_bytes()).unwrap_err()), (7, 4));
    }

    #[test]
    fn sorted_groups_round_trip() {
        let g = SortedGroups::from_sorted([
            (IntervalId(2), 0.6),
            (IntervalId(1), 0.9),
            (IntervalId(4), 0.9),
            (IntervalId(3), 2.5),
        ]);
        let mut buf = Vec::new();
        write_sorted_groups(&mut buf, &g).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "rank,value,ids\n1,0.6,I2\n2,0.9,I1;I4\n3,2.5,I3\n");
        assert_eq!(read_sorted_groups(&buf[..]).unwrap(), g);
    }

    #[test]
    fn gap_prep_json() {
        let s = IntervalSet::from_bounds(&[(0.0, 1.0), (0.2, 1.2), (10.0, 11.0)]).unwrap();
        let prep = omit_for_smallest_gap(&s).unwrap();
        let mut buf = Vec::new();
        write_gap_prep(&mut buf, &prep).unwrap();
        assert_eq!(read_gap_prep(&buf[..]).unwrap(), prep);
        let e = read_gap_prep("{\"which\": \"min\",\n \"bound\": }".as_bytes()).unwrap_err();
        assert_eq!(parse_err(e).0, 2);
    }
}
