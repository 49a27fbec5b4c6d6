//! Plain-text monodromy word files.
//!
//! ```text
//! # W_2 written with atlas names
//! genus 2
//! base sphere
//! section -1          # optional: self-intersection of a section
//! twist B0
//! twist 1 0 1 0 1     # exponent, then 2g coordinates in (a_1, b_1, ..., a_g, b_g)
//! twist 1 0 0 0 0 separating
//! ```

use std::fmt::Write as _;

use lefschetz::{korkmaz_curves, Base, CurveAtlas, HomologyClass, Letter, Surface, TwistWord};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Turn warnings into errors. Without it an explicit zero-class twist
    /// lacking the `separating` token is taken as separating, with a warning.
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordFile {
    pub base: Base,
    pub section_square: Option<i64>,
    pub word: TwistWord,
    pub warnings: Vec<String>,
}

impl WordFile {
    pub fn genus(&self) -> usize {
        self.word.surface().genus()
    }

    pub fn parse(text: &str, options: ParseOptions) -> Result<Self, ParseError> {
        let mut surface: Option<Surface> = None;
        let mut atlas: Option<CurveAtlas> = None;
        let mut base: Option<Base> = None;
        let mut section_square = None;
        let mut letters: Vec<Letter> = Vec::new();
        let mut warnings = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let Some((&keyword, args)) = tokens.split_first() else {
                continue;
            };
            match keyword {
                "genus" => {
                    if surface.is_some() {
                        return err(line, "genus given twice");
                    }
                    let [g] = args else {
                        return err(line, "expected `genus <int>`");
                    };
                    let g: usize = g.parse().or_else(|_| err(line, format!("invalid genus {g:?}")))?;
                    surface = Some(Surface::new(g).or_else(|e| err(line, e.to_string()))?);
                }
                "base" => {
                    if base.is_some() {
                        return err(line, "base given twice");
                    }
                    base = Some(match args {
                        ["disk"] => Base::Disk,
                        ["sphere"] => Base::Sphere,
                        _ => return err(line, "expected `base disk` or `base sphere`"),
                    });
                }
                "section" => {
                    let [k] = args else {
                        return err(line, "expected `section <int>`");
                    };
                    section_square = Some(k.parse().or_else(|_| err(line, format!("invalid section square {k:?}")))?);
                }
                "twist" => {
                    let Some(s) = surface else {
                        return err(line, "`twist` before `genus`");
                    };
                    let letter = match args {
                        [name] if !looks_numeric(name) => {
                            if atlas.is_none() {
                                atlas = Some(korkmaz_curves(s.genus()).or_else(|e| err(line, e.to_string()))?);
                            }
                            let atlas = atlas.as_ref().expect("just built");
                            atlas.letter(name).or_else(|e| err(line, e.to_string()))?
                        }
                        [exp, rest @ ..] => {
                            parse_explicit(line, s, exp, rest, options, &mut warnings)?
                        }
                        [] => return err(line, "expected `twist <name>` or `twist <exp> <coords>`"),
                    };
                    letters.push(letter);
                }
                other => return err(line, format!("unknown keyword {other:?}")),
            }
        }

        let Some(surface) = surface else {
            return err(0, "missing `genus` header");
        };
        let Some(base) = base else {
            return err(0, "missing `base` header");
        };
        let word = TwistWord::new(surface, letters).expect("letters built on the header surface");
        Ok(Self {
            base,
            section_square,
            word,
            warnings,
        })
    }

    /// Canonical text: header lines, then one explicit twist per letter.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "genus {}", self.genus()).unwrap();
        writeln!(
            out,
            "base {}",
            match self.base {
                Base::Disk => "disk",
                Base::Sphere => "sphere",
            }
        )
        .unwrap();
        if let Some(k) = self.section_square {
            writeln!(out, "section {k}").unwrap();
        }
        for l in self.word.letters() {
            write!(out, "twist {}", l.exponent()).unwrap();
            for x in l.class().coords() {
                write!(out, " {x}").unwrap();
            }
            if l.is_separating() {
                out.push_str(" separating");
            }
            out.push('\n');
        }
        out
    }
}

fn looks_numeric(token: &str) -> bool {
    token.parse::<i64>().is_ok()
}

fn parse_explicit(
    line: usize,
    s: Surface,
    exp: &str,
    rest: &[&str],
    options: ParseOptions,
    warnings: &mut Vec<String>,
) -> Result<Letter, ParseError> {
    let exponent: i64 = exp.parse().or_else(|_| err(line, format!("invalid exponent {exp:?}")))?;
    if exponent == 0 {
        return err(line, "twist exponent must be nonzero");
    }
    let (coords, flagged) = match rest.split_last() {
        Some((&"separating", coords)) => (coords, true),
        _ => (rest, false),
    };
    if coords.len() != s.dimension() {
        return err(
            line,
            format!(
                "genus {} needs {} coordinates, found {}",
                s.genus(),
                s.dimension(),
                coords.len()
            ),
        );
    }
    let coords = coords
        .iter()
        .map(|t| t.parse::<BigInt>().or_else(|_| err(line, format!("invalid coordinate {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let class = HomologyClass::new(s, coords).expect("length checked");
    let separating = if class.is_zero() && !flagged {
        if options.strict {
            return err(line, "zero homology class needs a trailing `separating` token");
        }
        warnings.push(format!("line {line}: zero-class twist treated as separating"));
        true
    } else {
        flagged
    };
    if separating && !class.is_zero() {
        return err(line, "`separating` twist must have zero homology class");
    }
    Letter::new(class, exponent, separating).or_else(|e| err(line, e.to_string()))
}
