//! Failure type, exit codes, and the text/JSON output plumbing.
//!
//! Exit codes: 0 success, 1 domain error (the mathematics refused), 2
//! usage or parse error (the invocation was malformed). JSON mode renders
//! failures as `{"error": {"code": ..., "message": ...}}` with stable
//! codes.

use serde_json::{json, Value};

/// A rendered failure: stable code, message, exit code, and for syntax
/// errors the byte offset plus the acceptable-token set.
#[derive(Clone, Debug)]
pub struct Failure {
    pub code: String,
    pub message: String,
    pub exit: i32,
    pub offset: Option<usize>,
    pub expected: Option<Vec<String>>,
}

impl Failure {
    pub fn syntax(offset: usize, expected: &[&str], message: String) -> Failure {
        Failure {
            code: "syntax_error".into(),
            message,
            exit: 2,
            offset: Some(offset),
            expected: Some(expected.iter().map(|s| s.to_string()).collect()),
        }
    }

    pub fn usage(message: impl Into<String>) -> Failure {
        Failure { code: "usage_error".into(), message: message.into(), exit: 2, offset: None, expected: None }
    }

    pub fn symbol_not_in_ring(symbol: &str, ring: &str) -> Failure {
        Failure {
            code: "symbol_not_in_ring".into(),
            message: format!("symbol {symbol} does not exist in ring {ring}"),
            exit: 2,
            offset: None,
            expected: None,
        }
    }

    /// Library errors are domain failures (exit 1) unless overridden.
    pub fn domain(err: entire::Error) -> Failure {
        Failure { code: err.code().into(), message: err.to_string(), exit: 1, offset: None, expected: None }
    }

    /// Library errors raised while interpreting flags (exit 2).
    pub fn usage_from(err: entire::Error) -> Failure {
        Failure { code: err.code().into(), message: err.to_string(), exit: 2, offset: None, expected: None }
    }

    pub fn to_json(&self) -> Value {
        let mut error = json!({
            "code": self.code,
            "message": self.message,
        });
        if let Some(offset) = self.offset {
            error["offset"] = json!(offset);
        }
        if let Some(expected) = &self.expected {
            error["expected"] = json!(expected);
        }
        json!({ "error": error })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("error[{}]: {}", self.code, self.message);
        if let Some(offset) = self.offset {
            out.push_str(&format!(" (at byte {offset})"));
        }
        out
    }
}

impl From<entire::Error> for Failure {
    fn from(err: entire::Error) -> Failure {
        Failure::domain(err)
    }
}

/// One command result: a text line (or block) and the JSON document.
pub struct Report {
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn new(text: impl Into<String>, json: Value) -> Report {
        Report { text: text.into(), json }
    }
}
