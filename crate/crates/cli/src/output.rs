use serde::Serialize;

use crate::EXIT_OK;

/// A finished command: its JSON rendering, its text rendering and exit code.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: String,
    pub text: String,
    pub code: i32,
}

impl Output {
    pub fn new<T: Serialize>(value: &T, text: impl Into<String>) -> anyhow::Result<Self> {
        Ok(Output {
            json: serde_json::to_string_pretty(value)? + "\n",
            text: text.into(),
            code: EXIT_OK,
        })
    }

    pub fn with_code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.json.clone()
        } else if self.text.ends_with('\n') {
            self.text.clone()
        } else {
            format!("{}\n", self.text)
        }
    }
}

pub fn compact<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("values serialize")
}
