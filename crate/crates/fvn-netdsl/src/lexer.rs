use crate::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(usize),
    Gets,   // <-
    Arrow,  // ->
    DArrow, // <->
    Eq,
    Bang,
    Amp,
    Pipe,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Gets => "`<-`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::DArrow => "`<->`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Sp {
    pub tok: Tok,
    pub col: usize,
}

/// Tokenize one source line. `#` starts a comment running to the end of the
/// line. Columns are 1-based byte offsets, for error reporting.
pub(crate) fn lex_line(line_no: usize, text: &str) -> Result<Vec<Sp>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let col = i + 1;
        match c {
            '#' => break,
            c if c.is_whitespace() => {
                i += 1;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push(Sp { tok: Tok::Ident(text[start..i].to_string()), col });
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let n: usize = text[start..i].parse().map_err(|_| {
                    ParseError::new(line_no, col, format!("number `{}` out of range", &text[start..i]))
                })?;
                toks.push(Sp { tok: Tok::Int(n), col });
            }
            '<' => {
                if bytes[i..].starts_with(b"<->") {
                    toks.push(Sp { tok: Tok::DArrow, col });
                    i += 3;
                } else if bytes[i..].starts_with(b"<-") {
                    toks.push(Sp { tok: Tok::Gets, col });
                    i += 2;
                } else {
                    return Err(ParseError::new(line_no, col, "stray `<`; expected `<-` or `<->`"));
                }
            }
            '-' => {
                if bytes[i..].starts_with(b"->") {
                    toks.push(Sp { tok: Tok::Arrow, col });
                    i += 2;
                } else {
                    return Err(ParseError::new(line_no, col, "stray `-`; expected `->`"));
                }
            }
            '=' => {
                toks.push(Sp { tok: Tok::Eq, col });
                i += 1;
            }
            '!' => {
                toks.push(Sp { tok: Tok::Bang, col });
                i += 1;
            }
            '&' => {
                toks.push(Sp { tok: Tok::Amp, col });
                i += 1;
            }
            '|' => {
                toks.push(Sp { tok: Tok::Pipe, col });
                i += 1;
            }
            '^' => {
                toks.push(Sp { tok: Tok::Caret, col });
                i += 1;
            }
            '(' => {
                toks.push(Sp { tok: Tok::LParen, col });
                i += 1;
            }
            ')' => {
                toks.push(Sp { tok: Tok::RParen, col });
                i += 1;
            }
            '{' => {
                toks.push(Sp { tok: Tok::LBrace, col });
                i += 1;
            }
            '}' => {
                toks.push(Sp { tok: Tok::RBrace, col });
                i += 1;
            }
            '[' => {
                toks.push(Sp { tok: Tok::LBracket, col });
                i += 1;
            }
            ']' => {
                toks.push(Sp { tok: Tok::RBracket, col });
                i += 1;
            }
            ',' => {
                toks.push(Sp { tok: Tok::Comma, col });
                i += 1;
            }
            other => {
                return Err(ParseError::new(line_no, col, format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(toks)
}

pub(crate) const KEYWORDS: &[&str] = &[
    "net", "controls", "output", "outputs", "block", "table", "true", "false", "ts", "states",
    "inputs", "obs", "trans", "label",
];

pub(crate) fn is_keyword(name: &str) -> bool {
    KEYWORDS.contains(&name)
}
