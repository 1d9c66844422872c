//! Hamiltonian cycle certificates: representation, verification and the
//! plain-text file format.

use crate::instance::Instance;
use thiserror::Error;

/// A claimed hamiltonian cycle: a start vertex and `n` steps, each one of
/// the instance steps `{2, 3, c}`. The cycle visits
/// `start, start + s_1, start + s_1 + s_2, ...` modulo `n`.
///
/// Construction does not validate; [`verify_cycle`] is the authority.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCert {
    instance: Instance,
    start: i64,
    steps: Vec<i64>,
}

impl CycleCert {
    pub fn new(instance: Instance, start: i64, steps: Vec<i64>) -> Self {
        let start = start.rem_euclid(instance.n());
        CycleCert {
            instance,
            start,
            steps,
        }
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn steps(&self) -> &[i64] {
        &self.steps
    }

    /// The visited vertices in order, one per step (the arrival back at
    /// `start` is not repeated).
    pub fn vertex_tour(&self) -> Vec<i64> {
        let n = self.instance.n();
        let mut tour = Vec::with_capacity(self.steps.len());
        let mut v = self.start;
        for &s in &self.steps {
            tour.push(v);
            v = (v + s).rem_euclid(n);
        }
        tour
    }

    /// The same cycle rotated `k` positions forward: the start advances by
    /// the sum of the first `k` steps and the step sequence rotates left.
    pub fn rotate_by(&self, k: usize) -> CycleCert {
        if self.steps.is_empty() {
            return self.clone();
        }
        let n = self.instance.n();
        let k = k % self.steps.len();
        let offset: i64 = self.steps[..k].iter().sum();
        let mut steps = Vec::with_capacity(self.steps.len());
        steps.extend_from_slice(&self.steps[k..]);
        steps.extend_from_slice(&self.steps[..k]);
        CycleCert {
            instance: self.instance,
            start: (self.start + offset).rem_euclid(n),
            steps,
        }
    }

    /// Rotates the cycle so it starts at vertex 0. No-op if 0 is not on the
    /// tour (possible only for invalid certificates).
    pub fn rotate_to_zero(&self) -> CycleCert {
        match self.vertex_tour().iter().position(|&v| v == 0) {
            Some(k) => self.rotate_by(k),
            None => self.clone(),
        }
    }
}

/// First reason a certificate fails verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Violation {
    /// A step value outside `{2, 3, c}`.
    #[error("step {value} at index {index} is not one of the instance steps")]
    BadStep { index: usize, value: i64 },
    /// The step sequence does not have exactly `n` entries.
    #[error("expected {expected} steps, found {actual}")]
    WrongLength { expected: usize, actual: usize },
    /// The steps do not sum to 0 modulo `n`.
    #[error("steps sum to {sum} which is not 0 (mod n)")]
    NotClosed { sum: i64 },
    /// A vertex is visited twice; `index` is the position in the tour where
    /// the repeat occurs.
    #[error("vertex revisited at tour index {index}")]
    RepeatedVertex { index: usize },
}

/// Checks that `cert` is a hamiltonian cycle of its instance: all steps in
/// `{2, 3, c}`, exactly `n` of them, closing up modulo `n`, with all `n`
/// partial sums distinct.
pub fn verify_cycle(cert: &CycleCert) -> Result<(), Violation> {
    let inst = cert.instance();
    let n = inst.n();
    let allowed = inst.steps();

    if cert.steps().len() != n as usize {
        return Err(Violation::WrongLength {
            expected: n as usize,
            actual: cert.steps().len(),
        });
    }
    for (index, &value) in cert.steps().iter().enumerate() {
        if !allowed.contains(&value) {
            return Err(Violation::BadStep { index, value });
        }
    }
    let sum: i64 = cert.steps().iter().sum();
    if sum.rem_euclid(n) != 0 {
        return Err(Violation::NotClosed { sum });
    }
    let mut seen = vec![false; n as usize];
    let mut v = cert.start();
    for index in 0..n as usize {
        if seen[v as usize] {
            return Err(Violation::RepeatedVertex { index });
        }
        seen[v as usize] = true;
        v = (v + cert.steps()[index]).rem_euclid(n);
    }
    Ok(())
}

/// Error while parsing the certificate text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Serializes a certificate:
///
/// ```text
/// circham v1
/// n=<int> c=<int>
/// start=<int>
/// steps=<comma-separated ints>
/// ```
pub fn encode_cert(cert: &CycleCert) -> String {
    let steps: Vec<String> = cert.steps().iter().map(|s| s.to_string()).collect();
    format!(
        "circham v1\nn={} c={}\nstart={}\nsteps={}\n",
        cert.instance().n(),
        cert.instance().c(),
        cert.start(),
        steps.join(",")
    )
}

fn parse_int(line: &str, line_no: usize, col: usize, token: &str) -> Result<i64, ParseError> {
    debug_assert!(line.len() >= col);
    token
        .parse::<i64>()
        .map_err(|_| ParseError::new(line_no, col + 1, format!("expected integer, got {token:?}")))
}

/// Strips `prefix` from `rest`, returning the remainder and the column of
/// the first character after the prefix.
fn expect_prefix<'a>(rest: &'a str, prefix: &str, line_no: usize) -> Result<&'a str, ParseError> {
    rest.strip_prefix(prefix)
        .ok_or_else(|| ParseError::new(line_no, 1, format!("expected {prefix:?}")))
}

/// Parses the text format produced by [`encode_cert`].
pub fn decode_cert(text: &str) -> Result<CycleCert, ParseError> {
    let mut lines = text.split('\n');
    let header = lines.next().unwrap_or("");
    if header != "circham v1" {
        return Err(ParseError::new(1, 1, "expected header \"circham v1\""));
    }

    let line2 = lines
        .next()
        .ok_or_else(|| ParseError::new(2, 1, "missing \"n=... c=...\" line"))?;
    let rest = expect_prefix(line2, "n=", 2)?;
    let (n_tok, rest) = rest
        .split_once(' ')
        .ok_or_else(|| ParseError::new(2, line2.len() + 1, "expected \" c=...\""))?;
    let n = parse_int(line2, 2, 2, n_tok)?;
    let c_tok = expect_prefix(rest, "c=", 2)?;
    let c = parse_int(line2, 2, 5 + n_tok.len(), c_tok)?;
    let instance = Instance::new(n, c)
        .map_err(|reason| ParseError::new(2, 1, format!("invalid instance: {reason}")))?;

    let line3 = lines
        .next()
        .ok_or_else(|| ParseError::new(3, 1, "missing \"start=...\" line"))?;
    let start_tok = expect_prefix(line3, "start=", 3)?;
    let start = parse_int(line3, 3, 6, start_tok)?;

    let line4 = lines
        .next()
        .ok_or_else(|| ParseError::new(4, 1, "missing \"steps=...\" line"))?;
    let steps_body = expect_prefix(line4, "steps=", 4)?;
    let mut steps = Vec::new();
    let mut col = "steps=".len();
    for token in steps_body.split(',') {
        steps.push(parse_int(line4, 4, col, token)?);
        col += token.len() + 1;
    }

    for (extra_no, extra) in lines.enumerate() {
        if !extra.is_empty() {
            return Err(ParseError::new(
                5 + extra_no,
                1,
                "unexpected trailing content",
            ));
        }
    }

    Ok(CycleCert::new(instance, start, steps))
}
