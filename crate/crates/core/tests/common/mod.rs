//! Published chamber polynomials as plain strings, with a tiny evaluator.
//! Terms are `coeff*var^k*...` or `coeff*(-1)^(vars)`; variables are
//! `l1 l2 b1 b2`.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub const PUBLISHED_POLYNOMIALS: [&str; 33] = [
    "1/2*b1 + 1/2*b2 + b2*b1 - 1/2*b2^2 + 7/8 - 1/4*b1^2 + 1/8*(-1)^(b1)",
    "1/2*l1 - 1/2*b1 + 3/2*b2 - 1/4*l1^2 + 1/2*b2^2 + 7/8 - 1/4*b1^2 + 1/8*(-1)^(b1 + l1) + 1/2*l1*b1",
    "1/8*(-1)^(b1) + 1/2*l1 + 1/2*b2 - 1/4*l1^2 + 3/4 - 1/2*b2^2 - 1/2*b1^2 + 1/2*l1*b1 + 1/8*(-1)^(b1 + l1) + b2*b1",
    "1/8*(-1)^(b1) + b1 + 1/4*b1^2 + 7/8",
    "1 + 3/2*b2 + 1/2*b2^2",
    "1/2*l2 + 1/2*b1 + b2*b1 - b2^2 - 1/4*b1^2 + l2*b2 - 1/2*l2^2 + 1/8*(-1)^(b1) + 7/8",
    "l1 - b1 + 2*b2 + 1/4*l1^2 + 1/8*(-1)^(b1 + l1) + b2^2 + 7/8 - 1/2*l1*b1 + 1/4*b1^2 + l1*b2 - b2*b1",
    "1/2*l1 + 1/2*b1 - 1/4*l1^2 + 3/4 + 1/2*l1*b1 + 1/8*(-1)^(b1 + l1) + 1/8*(-1)^(b1)",
    "1/2*l2 + 1/2*l1 - 1/2*b1 + b2 - 1/4*l1^2 - 1/4*b1^2 + l2*b2 + 1/2*l1*b1 - 1/2*l2^2 + 1/8*(-1)^(b1 + l1) + 7/8",
    "1/2*l2 + 1/2*l1 - 1/4*l1^2 + 3/4 - b2^2 - 1/2*b1^2 + l2*b2 + 1/8*(-1)^(b1) + 1/2*l1*b1 - 1/2*l2^2 + 1/8*(-1)^(b1 + l1) + b2*b1",
    "1/2*l2 + b1 - 1/2*b2 - 1/2*b2^2 + 1/4*b1^2 + 7/8 + l2*b2 + 1/8*(-1)^(b1) - 1/2*l2^2",
    "1 + 1/2*l2 + b2 + l2*b2 - 1/2*l2^2",
    "l1 - 1/2*b1 + b2 + 1/4*l1^2 + 3/4 + l1*b2 + 1/8*(-1)^(b1) + 1/8*(-1)^(b1 + l1) - 1/2*l1*b1",
    "1/2*l2 + l1 - b1 + 3/2*b2 + 1/4*l1^2 + 1/2*b2^2 + l1*b2 + 1/4*b1^2 + l2*b2 - 1/2*l2^2 - b2*b1 - 1/2*l1*b1 + 7/8 + 1/8*(-1)^(b1 + l1)",
    "1/2*l2 + 1/2*l1 + 1/2*b1 - 1/2*b2 + 1/8*(-1)^(b1) - 1/4*l1^2 + 3/4 - 1/2*b2^2 + l2*b2 - 1/2*l2^2 + 1/8*(-1)^(b1 + l1) + 1/2*l1*b1",
    "l2 + l1 - 1/2*b2 + 1/8*(-1)^(b1) + 1/4*l1^2 + 3/4 - 1/2*b2^2 - l1*b2 - 1/2*b1^2 + l2*l1 + 1/2*l1*b1 + 1/8*(-1)^(b1 + l1) + b2*b1",
    "1 + 3/2*l2 + 3/2*b1 - 3/2*b2 + 1/2*b2^2 + 1/2*b1^2 - l2*b2 + 1/2*l2^2 + l2*b1 - b2*b1",
    "1 + 3/2*l2 + b1 - b2 - l2*b2 + 1/2*l2^2 + l2*b1",
    "1/2*l2 + l1 - 1/2*b1 + 1/2*b2 + 1/4*l1^2 + 3/4 - 1/2*b2^2 + l1*b2 + l2*b2 - 1/2*l2^2 - 1/2*l1*b1 + 1/8*(-1)^(b1) + 1/8*(-1)^(b1 + l1)",
    "1 + 1/2*b2^2 + 1/2*l1^2 + 1/2*l2^2 + l2*l1 + l2*b2 + l1*b2 + 3/2*b2 + 3/2*l2 + 3/2*l1 - 3/2*b1 + 1/2*b1^2 - l2*b1 - b2*b1 - l1*b1",
    "3/2*l2 + 1/2*l1 + b1 - 3/2*b2 - 1/4*l1^2 + 1/2*b2^2 + 1/4*b1^2 - l2*b2 + 7/8 + 1/2*l2^2 + 1/8*(-1)^(b1 + l1) + l2*b1 + 1/2*l1*b1 - b2*b1",
    "l2 + l1 + 1/2*b1 - b2 + 1/4*l1^2 + 3/4 - l1*b2 + l2*l1 + 1/8*(-1)^(b1) + 1/2*l1*b1 + 1/8*(-1)^(b1 + l1)",
    "1 + b2 + l1 - b1 + 1/2*l2^2 + l2*l1 + l2*b2 + 3/2*l2 - l2*b1",
    "3/2*l2 + 1/2*l1 + 1/2*b1 - b2 - 1/4*l1^2 - 1/4*b1^2 - l2*b2 + 1/2*l2^2 + 1/2*l1*b1 + l2*b1 + 7/8 + 1/8*(-1)^(b1 + l1)",
    "3/2*l2 + 3/2*l1 - b1 + 1/2*b2 + 1/2*l1^2 - 1/2*b2^2 + l1*b2 + 1/4*b1^2 + l2*l1 + l2*b2 + 1/2*l2^2 - l1*b1 + 7/8 + 1/8*(-1)^(b1) - l2*b1",
    "3/4 + 3/4*l1^2 + l2*l1 + l2 + 3/2*l1 - 1/2*l1*b1 + 1/8*(-1)^(b1) - 1/2*b1 + 1/8*(-1)^(b1 + l1)",
    "2*l2 + l1 + b1 - 2*b2 + 1/4*l1^2 + b2^2 - l1*b2 + 1/4*b1^2 + l2*l1 - 2*l2*b2 + l2^2 + 1/2*l1*b1 + 1/8*(-1)^(b1 + l1) - b2*b1 + l2*b1 + 7/8",
    "3/2*l2 + l1 - 1/2*b1 - b2^2 - 1/4*b1^2 + l2*l1 + l2*b2 + 1/2*l2^2 + b2*b1 - l2*b1 + 7/8 + 1/8*(-1)^(b1)",
    "1 + 5/2*l2 + l1 - b2 + l2*l1 - l2*b2 + 3/2*l2^2",
    "2*l2 + l1 + 1/2*b1 - 3/2*b2 + 1/4*l1^2 + 1/2*b2^2 - l1*b2 - 1/4*b1^2 + l2*l1 - 2*l2*b2 + l2^2 + 1/2*l1*b1 + 7/8 + 1/8*(-1)^(b1 + l1) + l2*b1",
    "7/8 + l2^2 + l1^2 + 2*l2*l1 + 2*l2 + 2*l1 - b1 + 1/4*b1^2 - l2*b1 - l1*b1 + 1/8*(-1)^(b1)",
    "2*l2 + 3/2*l1 - 1/2*b1 - 1/2*b2 + 1/2*l1^2 - 1/2*b2^2 - l1*b2 - 1/4*b1^2 + 2*l2*l1 + l2^2 + 1/8*(-1)^(b1) + b2*b1 + 7/8 - l2*b1",
    "1 + 3*l2 + 3/2*l1 - 3/2*b2 + 1/2*l1^2 + 1/2*b2^2 - l1*b2 + 2*l2*l1 - 2*l2*b2 + 2*l2^2",
];

fn var_index(name: &str) -> usize {
    match name {
        "l1" => 0,
        "l2" => 1,
        "b1" => 2,
        "b2" => 3,
        _ => panic!("unknown variable {name:?}"),
    }
}

/// Splits on `sep` outside parentheses.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn factor(f: &str, x: &[i64; 4]) -> BigRational {
    let f = f.trim();
    if let Some(rest) = f.strip_prefix("(-1)^(") {
        let exp: i64 = rest.trim_end_matches(')').split('+').map(|v| x[var_index(v.trim())]).sum();
        return if exp.rem_euclid(2) == 0 { BigRational::one() } else { -BigRational::one() };
    }
    if f.starts_with(|c: char| c.is_ascii_digit()) {
        return match f.split_once('/') {
            Some((n, d)) => BigRational::new(n.parse().unwrap(), d.parse().unwrap()),
            None => BigRational::from_integer(f.parse().unwrap()),
        };
    }
    let (name, pow) = match f.split_once('^') {
        Some((n, p)) => (n, p.parse::<u32>().unwrap()),
        None => (f, 1),
    };
    BigRational::from_integer(BigInt::from(x[var_index(name)]).pow(pow))
}

/// Evaluates a published polynomial at `(l1, l2, b1, b2)`.
pub fn evaluate(expr: &str, x: &[i64; 4]) -> BigRational {
    // turn binary minus into "+ -" so every term is split off by '+'
    let normalized = expr.replace(" - ", " + -");
    let mut total = BigRational::zero();
    for term in split_top(&normalized, '+') {
        let term = term.trim();
        let (sign, body) = match term.strip_prefix('-') {
            Some(b) => (-BigRational::one(), b),
            None => (BigRational::one(), term),
        };
        total += split_top(body, '*').into_iter().fold(sign, |acc, f| acc * factor(f, x));
    }
    total
}
