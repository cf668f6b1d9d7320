use std::io::{self, Write};
use std::time::{Duration, Instant};

use enumfpt::{Atom, OpSet, RunSummary};
use serde::Serialize;

use crate::Format;

#[derive(Serialize)]
struct JsonOp {
    op: &'static str,
    args: Vec<u32>,
}

#[derive(Serialize)]
struct JsonSolution {
    size: usize,
    ops: Vec<JsonOp>,
}

pub fn write_solution<A: Atom, W: Write>(out: &mut W, s: &OpSet<A>, format: Format) -> io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{} {s}", s.len()),
        Format::JsonLines => {
            let line = JsonSolution {
                size: s.len(),
                ops: s.iter().map(|a| JsonOp { op: a.op_name(), args: a.operands() }).collect(),
            };
            serde_json::to_writer(&mut *out, &line)?;
            writeln!(out)
        }
    }
}

/// Wall-clock gaps between outputs. The first gap is the time before the
/// first solution and the last is the time after the final one, so there is
/// always one more delay than solutions.
#[derive(Debug, Clone, Serialize)]
pub struct DelayReport {
    pub solutions: usize,
    pub delays_us: Vec<f64>,
    pub max_delay_us: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neighbourhood_calls: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_queue_len: Option<usize>,
}

pub struct DelayClock {
    last: Instant,
    delays: Vec<Duration>,
}

impl DelayClock {
    pub fn start() -> DelayClock {
        DelayClock { last: Instant::now(), delays: Vec::new() }
    }

    pub fn tick(&mut self) {
        let now = Instant::now();
        self.delays.push(now - self.last);
        self.last = now;
    }

    pub fn finish(mut self, summary: Option<&RunSummary>) -> DelayReport {
        self.tick();
        let micros = |d: &Duration| d.as_secs_f64() * 1e6;
        DelayReport {
            solutions: self.delays.len() - 1,
            max_delay_us: self.delays.iter().map(micros).fold(0.0, f64::max),
            delays_us: self.delays.iter().map(micros).collect(),
            neighbourhood_calls: summary.map(|s| s.neighbourhood_calls),
            max_queue_len: summary.map(|s| s.max_queue_len),
        }
    }
}

impl DelayReport {
    pub fn write<W: Write>(&self, out: &mut W, format: Format) -> io::Result<()> {
        match format {
            Format::JsonLines => {
                serde_json::to_writer(&mut *out, &serde_json::json!({ "delay_report": self }))?;
                writeln!(out)
            }
            Format::Text => {
                writeln!(out, "solutions: {}", self.solutions)?;
                writeln!(out, "max delay: {:.1} us", self.max_delay_us)?;
                let all: Vec<String> = self.delays_us.iter().map(|d| format!("{d:.1}")).collect();
                writeln!(out, "delays (us): {}", all.join(" "))?;
                if let (Some(calls), Some(queue)) = (self.neighbourhood_calls, self.max_queue_len) {
                    writeln!(out, "neighbourhood calls: {calls}, max queue length: {queue}")?;
                }
                Ok(())
            }
        }
    }
}
