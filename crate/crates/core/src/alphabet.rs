use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered set of letters. The order fixes symbol indices and is used
/// for canonical numbering, so two alphabets are equal only if they list
/// the same symbols in the same order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Arc<[String]>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty()
                || s.chars()
                    .any(|c| c.is_whitespace() || matches!(c, '#' | ',' | '='))
            {
                return Err(Error::InvalidSymbol(s.clone()));
            }
            if symbols[..i].contains(s) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet {
            symbols: symbols.into(),
        })
    }

    /// The first `size` lowercase latin letters.
    pub fn letters(size: usize) -> Self {
        assert!(
            (1..=26).contains(&size),
            "letter alphabets hold 1..=26 symbols"
        );
        Alphabet::new((0..size).map(|i| ((b'a' + i as u8) as char).to_string()))
            .expect("latin letters form a valid alphabet")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.symbols[index]
    }

    pub fn index_of(&self, symbol: &str) -> Result<usize> {
        self.symbols
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
    }

    /// Converts a word given as symbol names into symbol indices.
    pub fn encode<S: AsRef<str>>(&self, word: &[S]) -> Result<Vec<usize>> {
        word.iter().map(|s| self.index_of(s.as_ref())).collect()
    }

    /// Converts a word of single-character symbols, e.g. `"aabc"`.
    pub fn encode_chars(&self, word: &str) -> Result<Vec<usize>> {
        word.chars()
            .map(|c| self.index_of(c.encode_utf8(&mut [0; 4])))
            .collect()
    }

    /// Renders a word as its symbols separated by single spaces. The empty
    /// word renders as the empty string.
    pub fn render(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&i| self.symbol(i))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.symbols.iter()).finish()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols.join(" "))
    }
}
