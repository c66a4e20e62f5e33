use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A word over the alphabet, as letter indices.
pub type Word = Vec<u8>;

/// One factor of a relation side: a letter raised to a fixed power or to
/// the family parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Exponent {
    Fixed(usize),
    Param,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Factor {
    letter: u8,
    exponent: Exponent,
}

/// A relation `(lhs, rhs)`, possibly a family indexed by `n >= lower`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFamily {
    lhs: Vec<Factor>,
    rhs: Vec<Factor>,
    lower: Option<usize>,
}

fn expand(side: &[Factor], n: usize) -> Word {
    side.iter()
        .flat_map(|f| {
            let k = match f.exponent {
                Exponent::Fixed(k) => k,
                Exponent::Param => n,
            };
            std::iter::repeat_n(f.letter, k)
        })
        .collect()
}

fn length_at(side: &[Factor], n: usize) -> usize {
    side.iter()
        .map(|f| match f.exponent {
            Exponent::Fixed(k) => k,
            Exponent::Param => n,
        })
        .sum()
}

impl RelationFamily {
    pub fn is_family(&self) -> bool {
        self.lower.is_some()
    }

    /// The instances whose words have length at most `max_len`.
    pub fn instances(&self, max_len: usize) -> Vec<(Word, Word)> {
        match self.lower {
            None => {
                let (l, r) = (expand(&self.lhs, 0), expand(&self.rhs, 0));
                if l.len() <= max_len {
                    vec![(l, r)]
                } else {
                    Vec::new()
                }
            }
            Some(lower) => {
                let grows = self.lhs.iter().any(|f| f.exponent == Exponent::Param);
                let mut out = Vec::new();
                let mut n = lower;
                while length_at(&self.lhs, n) <= max_len {
                    out.push((expand(&self.lhs, n), expand(&self.rhs, n)));
                    if !grows {
                        break;
                    }
                    n += 1;
                }
                out
            }
        }
    }
}

/// A semigroup presentation `⟨X | σ⟩` whose relations preserve length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Vec<String>,
    relations: Vec<RelationFamily>,
    description: String,
}

impl Presentation {
    /// `⟨a, b, c | a bⁿ c = c bⁿ a, n >= 1⟩`.
    pub fn default_family() -> Self {
        "letters: a b c\nrelations: (a b^n c , c b^n a) for n>=1"
            .parse()
            .expect("valid presentation")
    }

    /// `⟨a, b | ab = ba⟩`.
    pub fn commutative_pair() -> Self {
        "letters: a b\nrelations: (a b , b a)"
            .parse()
            .expect("valid presentation")
    }

    /// The free semigroup on the given letters.
    pub fn free(letters: &[&str]) -> Self {
        format!("letters: {}\nrelations:", letters.join(" "))
            .parse()
            .expect("valid presentation")
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn relations(&self) -> &[RelationFamily] {
        &self.relations
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// All relation pairs of length at most `max_len`.
    pub fn relations_up_to(&self, max_len: usize) -> Vec<(Word, Word)> {
        self.relations
            .iter()
            .flat_map(|r| r.instances(max_len))
            .collect()
    }

    pub fn format_word(&self, w: &[u8]) -> String {
        let single = self.alphabet.iter().all(|l| l.chars().count() == 1);
        let parts: Vec<&str> = w
            .iter()
            .map(|&i| self.alphabet[i as usize].as_str())
            .collect();
        parts.join(if single { "" } else { " " })
    }

    /// Parses a word written with the presentation's letters, either as
    /// separate tokens or run together when every letter is one character.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut out = Vec::new();
        for tok in text.split_whitespace() {
            for f in parse_token(&self.alphabet, tok, 0)? {
                match f.exponent {
                    Exponent::Fixed(k) => out.extend(std::iter::repeat_n(f.letter, k)),
                    Exponent::Param => {
                        return Err(Error::Invalid(format!(
                            "parameter exponent in word `{text}`"
                        )));
                    }
                }
            }
        }
        if out.is_empty() {
            return Err(Error::Invalid("empty word".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description)
    }
}

fn perr(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn letter_index(alphabet: &[String], name: &str) -> Option<u8> {
    alphabet.iter().position(|l| l == name).map(|i| i as u8)
}

/// A token is `letter`, `letter^k`, `letter^n`, or a run of one-character
/// letters such as `abc`.
fn parse_token(alphabet: &[String], tok: &str, position: usize) -> Result<Vec<Factor>> {
    let (base, exponent) = match tok.split_once('^') {
        None => (tok, Exponent::Fixed(1)),
        Some((b, "n")) => (b, Exponent::Param),
        Some((b, e)) => {
            let k: usize = e
                .parse()
                .map_err(|_| perr(position, format!("bad exponent `{e}`")))?;
            if k == 0 {
                return Err(perr(position, "exponent must be positive"));
            }
            (b, Exponent::Fixed(k))
        }
    };
    if let Some(l) = letter_index(alphabet, base) {
        return Ok(vec![Factor {
            letter: l,
            exponent,
        }]);
    }
    let chars: Vec<String> = base.chars().map(String::from).collect();
    let letters: Option<Vec<u8>> = chars.iter().map(|c| letter_index(alphabet, c)).collect();
    match letters {
        Some(ls) if !ls.is_empty() => {
            let last = ls.len() - 1;
            Ok(ls
                .into_iter()
                .enumerate()
                .map(|(i, l)| Factor {
                    letter: l,
                    exponent: if i == last {
                        exponent.clone()
                    } else {
                        Exponent::Fixed(1)
                    },
                })
                .collect())
        }
        _ => Err(perr(position, format!("unknown letter in `{base}`"))),
    }
}

fn parse_side(alphabet: &[String], text: &str, position: usize) -> Result<Vec<Factor>> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        out.extend(parse_token(alphabet, tok, position)?);
    }
    if out.is_empty() {
        return Err(perr(position, "empty relation side"));
    }
    Ok(out)
}

fn parse_relation(alphabet: &[String], text: &str, position: usize) -> Result<RelationFamily> {
    let text = text.trim();
    let open = text
        .find('(')
        .ok_or_else(|| perr(position, "expected `(`"))?;
    let close = text
        .rfind(')')
        .ok_or_else(|| perr(position, "expected `)`"))?;
    if open != 0 || close < open {
        return Err(perr(position, "relation must start with `(`"));
    }
    let inner = &text[1..close];
    let (l, r) = inner
        .split_once(',')
        .ok_or_else(|| perr(position, "expected `,` between the two sides"))?;
    let lhs = parse_side(alphabet, l, position + 1)?;
    let rhs = parse_side(alphabet, r, position + 1 + l.len())?;
    let tail = text[close + 1..].trim();
    let lower = if tail.is_empty() {
        None
    } else {
        let cond = tail
            .strip_prefix("for")
            .ok_or_else(|| perr(position + close + 1, format!("unexpected `{tail}`")))?;
        let cond: String = cond.chars().filter(|c| !c.is_whitespace()).collect();
        let k = cond
            .strip_prefix("n>=")
            .and_then(|k| k.parse::<usize>().ok())
            .ok_or_else(|| perr(position + close + 1, "expected `for n>=k`"))?;
        Some(k.max(1))
    };
    let uses_param = lhs
        .iter()
        .chain(&rhs)
        .any(|f| f.exponent == Exponent::Param);
    if uses_param != lower.is_some() {
        return Err(perr(position, "`^n` and `for n>=k` must appear together"));
    }
    let family = RelationFamily { lhs, rhs, lower };
    // lengths are affine in n, so comparing two consecutive values suffices
    let n0 = family.lower.unwrap_or(0);
    for n in [n0, n0 + 1] {
        if length_at(&family.lhs, n) != length_at(&family.rhs, n) {
            return Err(Error::Ungraded(l.trim().to_string(), r.trim().to_string()));
        }
    }
    Ok(family)
}

impl FromStr for Presentation {
    type Err = Error;

    /// ```text
    /// letters: a b c
    /// relations: (a b^n c , c b^n a) for n>=1; (a b, b a)
    /// ```
    fn from_str(s: &str) -> Result<Self> {
        let mut alphabet: Option<Vec<String>> = None;
        let mut relations = Vec::new();
        let mut offset = 0;
        for line in s.split_inclusive('\n') {
            let body = line.trim();
            if let Some(rest) = body.strip_prefix("letters:") {
                let letters: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if letters.is_empty() || letters.len() > 255 {
                    return Err(perr(offset, "expected between 1 and 255 letters"));
                }
                let mut sorted = letters.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != letters.len() {
                    return Err(perr(offset, "repeated letter"));
                }
                if letters
                    .iter()
                    .any(|l| l.contains(['^', '(', ')', ',', ';']))
                {
                    return Err(perr(offset, "letters may not contain ^ ( ) , ;"));
                }
                alphabet = Some(letters);
            } else if let Some(rest) = body.strip_prefix("relations:") {
                let alpha = alphabet
                    .as_ref()
                    .ok_or_else(|| perr(offset, "`letters:` must come first"))?;
                let mut pos = offset + line.find("relations:").unwrap_or(0) + "relations:".len();
                for part in rest.split(';') {
                    if !part.trim().is_empty() {
                        relations.push(parse_relation(alpha, part, pos)?);
                    }
                    pos += part.len() + 1;
                }
            } else if !body.is_empty() && !body.starts_with('#') {
                return Err(perr(offset, format!("unexpected line `{body}`")));
            }
            offset += line.len();
        }
        let alphabet = alphabet.ok_or_else(|| perr(0, "missing `letters:` line"))?;
        Ok(Presentation {
            alphabet,
            relations,
            description: s.trim().to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_family_instances() {
        let p = Presentation::default_family();
        let rels = p.relations_up_to(5);
        let shown: Vec<(String, String)> = rels
            .iter()
            .map(|(l, r)| (p.format_word(l), p.format_word(r)))
            .collect();
        assert_eq!(
            shown,
            vec![
                ("abc".to_string(), "cba".to_string()),
                ("abbc".into(), "cbba".into()),
                ("abbbc".into(), "cbbba".into())
            ]
        );
        assert!(p.relations()[0].is_family());
    }

    #[test]
    fn token_forms() {
        let p: Presentation = "letters: x y\nrelations: (x^2 y, y x x); (xy , yx)"
            .parse()
            .unwrap();
        assert_eq!(p.relations_up_to(3).len(), 2);
        assert_eq!(p.parse_word("x^2 y").unwrap(), vec![0, 0, 1]);
        assert_eq!(p.parse_word("xyx").unwrap(), vec![0, 1, 0]);
        let multi: Presentation = "letters: s1 s2\nrelations: (s1 s2, s2 s1)".parse().unwrap();
        assert_eq!(multi.format_word(&[0, 1]), "s1 s2");
    }

    #[test]
    fn errors() {
        assert!(matches!(
            "letters: a b\nrelations: (a b, b)".parse::<Presentation>(),
            Err(Error::Ungraded(..))
        ));
        assert!(matches!(
            "letters: a b\nrelations: (a b^n, b a) for n>=1".parse::<Presentation>(),
            Err(Error::Ungraded(..))
        ));
        assert!(matches!(
            "letters: a b\nrelations: (a q, b a)".parse::<Presentation>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "relations: (a, a)".parse::<Presentation>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "letters: a b\nrelations: (a b^n, b^n a)".parse::<Presentation>(),
            Err(Error::Parse { .. })
        ));
        assert!("letters: a a".parse::<Presentation>().is_err());
    }
}
