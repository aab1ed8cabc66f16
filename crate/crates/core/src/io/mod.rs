//! Readers and writers: OFF input, the exact XPC complex format and a lossy
//! OBJ export.

mod obj;
mod off;
mod xpc;

pub use obj::write_obj;
pub use off::{parse_off, write_off};
pub use xpc::{parse_xpc, write_xpc};

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}
