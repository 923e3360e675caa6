//! Orbit arguments: `(α,l)` coset labels or one-line permutations such as
//! `(2314)`. Several labels may share one shell argument.

use s4bell::{CosetCoord, Error, GroupTable, Permutation, Result};

/// Splits the joined arguments into label tokens. A token is either a
/// parenthesized group or a run of non-blank characters.
fn tokens(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '(' {
            let mut tok = String::new();
            loop {
                match chars.next() {
                    Some(')') => {
                        tok.push(')');
                        break;
                    }
                    Some(ch) => tok.push(ch),
                    None => return Err(Error::MalformedLabel(tok)),
                }
            }
            out.push(tok);
        } else {
            let mut tok = String::new();
            while let Some(&ch) = chars.peek() {
                if ch.is_whitespace() || ch == '(' {
                    break;
                }
                tok.push(ch);
                chars.next();
            }
            out.push(tok);
        }
    }
    Ok(out)
}

/// Parses one label into the group element `g̃` it names.
pub fn parse_label(token: &str) -> Result<Permutation> {
    if token.contains(',') {
        let c: CosetCoord = token.parse()?;
        return Ok(GroupTable::s4().element(c));
    }
    let t = token.trim();
    if t.starts_with('(') {
        t.parse()
    } else {
        format!("({t})").parse()
    }
}

pub fn parse_labels(args: &[String]) -> Result<Vec<Permutation>> {
    tokens(&args.join(" "))?
        .iter()
        .map(|t| parse_label(t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Vec<Permutation>> {
        parse_labels(&args.iter().map(|s| s.to_string()).collect::<Vec<_>>())
    }

    #[test]
    fn accepts_both_notations() {
        let a = parse(&["(2,2) (7,2)"]).unwrap();
        let b = parse(&["(2,2)", "(7,2)"]).unwrap();
        assert_eq!(a, b);
        let g = GroupTable::s4();
        let perms = parse(&[&a[0].to_string(), &a[1].to_string()]).unwrap();
        assert_eq!(perms, a);
        assert_eq!(g.coset_factorize(&a[0]), CosetCoord::new(2, 2).unwrap());
        assert_eq!(parse(&["(2, 2)"]).unwrap(), vec![a[0]]);
        assert_eq!(parse(&["2,2"]).unwrap(), vec![a[0]]);
        assert_eq!(parse(&["1342"]).unwrap(), parse(&["(5,0)"]).unwrap());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse(&["(9,0)"]).is_err());
        assert!(parse(&["(1,3)"]).is_err());
        assert!(parse(&["(1123)"]).is_err());
        assert!(parse(&["(2,2"]).is_err());
        assert!(parse(&["hello"]).is_err());
    }
}
