use super::{GradedPolynomial, Monomial, PolyRing};
use crate::error::{Error, Result};

fn perr(s: &str, msg: &str) -> Error {
    Error::Parse(format!("{msg} in polynomial {s:?}"))
}

/// Grammar: `poly := ["-"] term (("+" | "-") term)*`, `term := factor ("*" factor)*`,
/// `factor := integer | "x" index ["^" integer]`. Whitespace is ignored.
pub(super) fn parse_polynomial(ring: &PolyRing, src: &str) -> Result<GradedPolynomial> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(perr(src, "empty input"));
    }
    let bytes = s.as_bytes();
    let mut terms = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = 1i64;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -1;
            }
            pos += 1;
        } else if pos != 0 {
            return Err(perr(src, "expected '+' or '-'"));
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            pos += 1;
        }
        let (c, m) = parse_term(ring, &s[start..pos], src)?;
        terms.push((sign * c, m));
    }
    ring.from_terms(terms)
}

fn parse_term(ring: &PolyRing, t: &str, src: &str) -> Result<(i64, Monomial)> {
    if t.is_empty() {
        return Err(perr(src, "empty term"));
    }
    let p = ring.characteristic() as i64;
    let mut coeff = 1i64;
    let mut exps = vec![0u16; ring.nvars()];
    // a leading coefficient may be glued to the variable part, e.g. "3x0"
    for factor in t.split('*') {
        if factor.is_empty() {
            return Err(perr(src, "empty factor"));
        }
        let digits = factor.bytes().take_while(|b| b.is_ascii_digit()).count();
        let (num, rest) = factor.split_at(digits);
        if !num.is_empty() {
            let v: i64 = num
                .parse::<u64>()
                .map_err(|_| perr(src, "bad integer"))?
                .rem_euclid(p as u64) as i64;
            coeff = coeff * v % p;
        }
        if rest.is_empty() {
            continue;
        }
        let rest = rest
            .strip_prefix('x')
            .ok_or_else(|| perr(src, &format!("unknown factor {factor:?}")))?;
        let (idx, pow) = match rest.split_once('^') {
            Some((i, e)) => (i, e.parse::<u16>().map_err(|_| perr(src, "bad exponent"))?),
            None => (rest, 1),
        };
        let idx: usize = idx.parse().map_err(|_| perr(src, "bad variable index"))?;
        if idx >= ring.nvars() {
            return Err(perr(src, &format!("variable x{idx} out of range")));
        }
        exps[idx] += pow;
    }
    Ok((coeff, Monomial::from_exponents(&exps)))
}

pub(super) fn format_polynomial(ring: &PolyRing, f: &GradedPolynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let field = ring.field();
    let mut out = String::new();
    for (k, t) in f.terms().iter().enumerate() {
        let c = field.to_signed(t.coeff);
        let abs = c.unsigned_abs();
        if c < 0 {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        let mut factors = Vec::new();
        if abs != 1 || t.mono.is_one() {
            factors.push(abs.to_string());
        }
        for (i, &e) in t.mono.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("x{i}")),
                _ => factors.push(format!("x{i}^{e}")),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}
