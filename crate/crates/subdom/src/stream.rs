//! Lazily decoded graph streams over graph6 or edge-list sources.
//!
//! Records decode one at a time, so surveys over very large generator
//! outputs never buffer the input. A decode failure carries the 1-based
//! record number and the byte offset where the record starts; iteration
//! may continue past it on line-oriented input.

use std::io::{self, BufRead};
use std::str::FromStr;

use thiserror::Error;

use crate::edgelist::{parse_edge_list, EdgeListError};
use crate::graph::Graph;
use crate::graph6::{parse_graph6_record, Graph6Error, Strictness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StreamFormat {
    #[default]
    Graph6,
    EdgeList,
}

impl FromStr for StreamFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(StreamFormat::Graph6),
            "edgelist" | "edge-list" | "el" => Ok(StreamFormat::EdgeList),
            other => Err(format!("unknown stream format `{other}`")),
        }
    }
}

#[derive(Debug, Error)]
pub enum RecordError {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Error)]
#[error("record {record} at byte {byte_offset}: {source}")]
pub struct StreamError {
    /// 1-based index of the record that failed to decode.
    pub record: usize,
    /// Byte offset of the start of that record in the source.
    pub byte_offset: u64,
    pub source: RecordError,
}

/// One successfully decoded record, keeping the exact source bytes so
/// filters can re-emit input verbatim.
#[derive(Debug, Clone)]
pub struct Record {
    /// 1-based position in the stream.
    pub index: usize,
    pub byte_offset: u64,
    /// The record's bytes exactly as read, including any line terminator.
    pub raw: Vec<u8>,
    pub graph: Graph,
}

pub struct GraphStream<R> {
    reader: R,
    format: StreamFormat,
    strictness: Strictness,
    next_index: usize,
    byte_offset: u64,
    finished: bool,
}

impl<R: BufRead> GraphStream<R> {
    pub fn new(reader: R, format: StreamFormat) -> Self {
        Self::with_strictness(reader, format, Strictness::default())
    }

    pub fn with_strictness(reader: R, format: StreamFormat, strictness: Strictness) -> Self {
        GraphStream {
            reader,
            format,
            strictness,
            next_index: 1,
            byte_offset: 0,
            finished: false,
        }
    }

    /// Records consumed so far, whether or not they decoded.
    pub fn records_read(&self) -> usize {
        self.next_index - 1
    }

    fn fail(&mut self, record: usize, byte_offset: u64, source: RecordError) -> StreamError {
        if matches!(source, RecordError::Io(_)) {
            self.finished = true;
        }
        StreamError { record, byte_offset, source }
    }

    fn next_graph6(&mut self) -> Option<Result<Record, StreamError>> {
        loop {
            let start = self.byte_offset;
            let mut raw = Vec::new();
            match self.reader.read_until(b'\n', &mut raw) {
                Ok(0) => return None,
                Ok(read) => self.byte_offset += read as u64,
                Err(e) => {
                    return Some(Err(self.fail(self.next_index, start, e.into())));
                }
            }
            let trimmed: &[u8] = {
                let mut t = raw.as_slice();
                while let Some((&last, rest)) = t.split_last() {
                    if last == b'\n' || last == b'\r' {
                        t = rest;
                    } else {
                        break;
                    }
                }
                t
            };
            if trimmed.is_empty() || trimmed == b">>graph6<<" {
                continue;
            }
            let index = self.next_index;
            self.next_index += 1;
            return Some(match parse_graph6_record(trimmed, self.strictness) {
                Ok(graph) => Ok(Record { index, byte_offset: start, raw, graph }),
                Err(e) => Err(self.fail(index, start, e.into())),
            });
        }
    }

    fn next_edge_list(&mut self) -> Option<Result<Record, StreamError>> {
        self.finished = true;
        let mut raw = Vec::new();
        if let Err(e) = self.reader.read_to_end(&mut raw) {
            return Some(Err(StreamError { record: 1, byte_offset: 0, source: e.into() }));
        }
        let text = match std::str::from_utf8(&raw) {
            Ok(t) => t,
            Err(_) => {
                return Some(Err(StreamError {
                    record: 1,
                    byte_offset: 0,
                    source: EdgeListError::InvalidUtf8.into(),
                }))
            }
        };
        // A document of nothing but blanks and comments is an empty
        // stream, not an error.
        if text
            .lines()
            .all(|l| l.split('#').next().unwrap_or("").trim().is_empty())
        {
            return None;
        }
        self.next_index += 1;
        self.byte_offset += raw.len() as u64;
        Some(match parse_edge_list(text) {
            Ok(graph) => Ok(Record { index: 1, byte_offset: 0, raw, graph }),
            Err(e) => Err(StreamError { record: 1, byte_offset: 0, source: e.into() }),
        })
    }
}

impl<R: BufRead> Iterator for GraphStream<R> {
    type Item = Result<Record, StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.finished {
            return None;
        }
        match self.format {
            StreamFormat::Graph6 => self.next_graph6(),
            StreamFormat::EdgeList => self.next_edge_list(),
        }
    }
}
