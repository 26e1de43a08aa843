//! Textual DSL for pp formulas.
//!
//! ```text
//! formula := ["E" var+ "."] eq ("&" eq)* ;
//! eq      := lin "=" lin ;
//! lin     := term (("+"|"-") term)* | "0" ;
//! term    := [scalar "*"] (basisname "*")? var ;
//! var     := "x" digits | "y" digits ;
//! ```
//!
//! Free variables are `x1..xn` (`n` is the largest index used), bound
//! variables `y1..ym` must be declared in the `E` block in order. Basis
//! names resolve against the algebra's labels; a bare scalar multiplies the
//! unit. `E` and the `x`/`y` variable names are reserved words.

use super::PpFormula;
use crate::algebra::Algebra;
use crate::error::Error;
use crate::module::Side;
use crate::Result;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(u64),
    Star,
    Plus,
    Minus,
    Eq,
    Amp,
    Dot,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            '+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            '=' => {
                out.push((Tok::Eq, i));
                i += 1;
            }
            '&' => {
                out.push((Tok::Amp, i));
                i += 1;
            }
            '.' => {
                out.push((Tok::Dot, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: u64 = text[start..i].parse().map_err(|_| Error::PpSyntax {
                    pos: start,
                    msg: "number too large".into(),
                })?;
                out.push((Tok::Num(v), start));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
            }
            other => {
                return Err(Error::PpSyntax {
                    pos: i,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum VarKind {
    Free,
    Bound,
}

fn classify_var(name: &str) -> Option<(VarKind, usize)> {
    let (kind, rest) = match name.as_bytes().first()? {
        b'x' => (VarKind::Free, &name[1..]),
        b'y' => (VarKind::Bound, &name[1..]),
        _ => return None,
    };
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let idx: usize = rest.parse().ok()?;
    (idx >= 1).then_some((kind, idx))
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    algebra: &'a Arc<Algebra>,
    end: usize,
}

/// One parsed term: a signed algebra coefficient attached to a variable.
struct Term {
    kind: VarKind,
    index: usize,
    coeff: Vec<u32>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        match self.bump() {
            Some((t, _)) if t == want => Ok(()),
            Some((t, p)) => Err(Error::PpSyntax {
                pos: p,
                msg: format!("expected {what}, found {t:?}"),
            }),
            None => Err(Error::PpSyntax {
                pos: self.end,
                msg: format!("expected {what}, found end of input"),
            }),
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::PpSyntax {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    /// `["E" var+ "."]`, returning the declared bound-variable count.
    fn bound_block(&mut self) -> Result<usize> {
        if self.peek() != Some(&Tok::Ident("E".to_string())) {
            return Ok(0);
        }
        self.bump();
        let mut count = 0;
        loop {
            match self.peek() {
                Some(Tok::Ident(name)) => {
                    let pos = self.here();
                    match classify_var(name) {
                        Some((VarKind::Bound, idx)) if idx == count + 1 => {
                            count += 1;
                            self.bump();
                        }
                        Some((VarKind::Bound, idx)) => {
                            return Err(Error::PpSyntax {
                                pos,
                                msg: format!(
                                    "bound variables must be declared in order; expected y{}, found y{idx}",
                                    count + 1
                                ),
                            })
                        }
                        _ => {
                            return Err(Error::PpSyntax {
                                pos,
                                msg: "only y-variables may be bound".into(),
                            })
                        }
                    }
                }
                Some(Tok::Dot) => {
                    self.bump();
                    if count == 0 {
                        return self.err("E block declares no variables");
                    }
                    return Ok(count);
                }
                _ => return self.err("expected a bound variable or `.`"),
            }
        }
    }

    /// `term := [scalar "*"] (basisname "*")? var`
    fn term(&mut self) -> Result<Term> {
        let p = self.algebra.prime();
        let mut scalar: u32 = 1 % p;
        if let Some(Tok::Num(v)) = self.peek() {
            let v = *v;
            if self.peek2() == Some(&Tok::Star) {
                scalar = (v % u64::from(p)) as u32;
                self.bump();
                self.bump();
            } else {
                return self.err("a scalar must be followed by `*`");
            }
        }
        // basisname "*" or directly a variable
        let (name, pos) = match self.bump() {
            Some((Tok::Ident(n), pos)) => (n, pos),
            Some((t, pos)) => {
                return Err(Error::PpSyntax {
                    pos,
                    msg: format!("expected a variable or basis name, found {t:?}"),
                })
            }
            None => {
                return Err(Error::PpSyntax {
                    pos: self.end,
                    msg: "expected a variable or basis name, found end of input".into(),
                })
            }
        };
        let (elem, var_name, var_pos) = if let Some((kind, idx)) = classify_var(&name) {
            // coefficient is scalar * unit
            let coeff: Vec<u32> = self
                .algebra
                .unit()
                .iter()
                .map(|&u| (u64::from(u) * u64::from(scalar) % u64::from(p)) as u32)
                .collect();
            return Ok(Term {
                kind,
                index: idx,
                coeff,
            });
        } else {
            let bi = self
                .algebra
                .label_index(&name)
                .ok_or(Error::UnknownBasisSymbol {
                    name: name.clone(),
                    pos,
                })?;
            self.expect(Tok::Star, "`*` after basis name")?;
            let mut coeff = vec![0u32; self.algebra.dim()];
            coeff[bi] = scalar;
            let (vname, vpos) = match self.bump() {
                Some((Tok::Ident(n), vp)) => (n, vp),
                Some((t, vp)) => {
                    return Err(Error::PpSyntax {
                        pos: vp,
                        msg: format!("expected a variable, found {t:?}"),
                    })
                }
                None => {
                    return Err(Error::PpSyntax {
                        pos: self.end,
                        msg: "expected a variable, found end of input".into(),
                    })
                }
            };
            (coeff, vname, vpos)
        };
        match classify_var(&var_name) {
            Some((kind, idx)) => Ok(Term {
                kind,
                index: idx,
                coeff: elem,
            }),
            None => Err(Error::PpSyntax {
                pos: var_pos,
                msg: format!("`{var_name}` is not a variable (use x<k> or y<k>)"),
            }),
        }
    }

    /// `lin := term (("+"|"-") term)* | "0"`, with `sign` applied to all
    /// coefficients. Appends terms to `acc`.
    fn lin(&mut self, sign: i64, acc: &mut Vec<(VarKind, usize, Vec<u32>, i64)>) -> Result<()> {
        // The literal 0 (not followed by `*`).
        if let Some(Tok::Num(0)) = self.peek() {
            if self.peek2() != Some(&Tok::Star) {
                self.bump();
                return Ok(());
            }
        }
        let mut cur = sign;
        loop {
            let t = self.term()?;
            acc.push((t.kind, t.index, t.coeff, cur));
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    cur = sign;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    cur = -sign;
                }
                _ => return Ok(()),
            }
        }
    }
}

impl PpFormula {
    /// Parses the DSL; see the module docs for the grammar.
    pub fn parse(text: &str, algebra: Arc<Algebra>, side: Side) -> Result<PpFormula> {
        let toks = lex(text)?;
        let mut parser = Parser {
            toks,
            pos: 0,
            algebra: &algebra,
            end: text.len(),
        };
        let bound = parser.bound_block()?;

        // Parse equations as signed term lists.
        let mut eqs: Vec<Vec<(VarKind, usize, Vec<u32>, i64)>> = Vec::new();
        loop {
            let mut acc = Vec::new();
            parser.lin(1, &mut acc)?;
            parser.expect(Tok::Eq, "`=`")?;
            parser.lin(-1, &mut acc)?;
            eqs.push(acc);
            match parser.peek() {
                Some(Tok::Amp) => {
                    parser.bump();
                }
                None => break,
                _ => return parser.err("expected `&` or end of input"),
            }
        }

        // Arity: n = largest x index; y indices must be declared.
        let mut free = 0usize;
        for eq in &eqs {
            for (kind, idx, _, _) in eq {
                match kind {
                    VarKind::Free => free = free.max(*idx),
                    VarKind::Bound => {
                        if *idx > bound {
                            return Err(Error::PpSyntax {
                                pos: 0,
                                msg: format!("y{idx} used but only {bound} bound variables declared"),
                            });
                        }
                    }
                }
            }
        }

        let p = algebra.prime();
        let d = algebra.dim();
        let rows = eqs.len();
        let mut a = vec![vec![vec![0u32; d]; free]; rows];
        let mut b = vec![vec![vec![0u32; d]; bound]; rows];
        for (r, eq) in eqs.iter().enumerate() {
            for (kind, idx, coeff, sign) in eq {
                // L - R = 0 written as A x̄ = B ȳ: x keeps its sign, y flips.
                let dest = match kind {
                    VarKind::Free => &mut a[r][*idx - 1],
                    VarKind::Bound => &mut b[r][*idx - 1],
                };
                let s = match kind {
                    VarKind::Free => *sign,
                    VarKind::Bound => -*sign,
                };
                for (t, &c) in coeff.iter().enumerate() {
                    let signed = i64::from(c) * s;
                    dest[t] = ((i64::from(dest[t]) + signed).rem_euclid(i64::from(p))) as u32;
                }
            }
        }
        PpFormula::from_matrices(algebra, side, free, bound, a, b)
    }

    /// Prints the formula in DSL syntax. Parsing the output reproduces the
    /// matrices exactly, except for the canonical zero-row encodings (the
    /// tautology), which reparse to an extensionally equal formula.
    pub fn unparse(&self) -> String {
        let alg = &self.algebra;
        if self.rows == 0 {
            if self.free == 0 {
                return "0 = 0".to_string();
            }
            return (1..=self.free)
                .map(|j| format!("x{j} = x{j}"))
                .collect::<Vec<_>>()
                .join(" & ");
        }
        let mut used_x = vec![false; self.free];
        let mut eqs = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut lhs_terms = Vec::new();
            for j in 0..self.free {
                if let Some(t) = element_terms(alg, &self.a[r][j], &format!("x{}", j + 1)) {
                    used_x[j] = true;
                    lhs_terms.push(t);
                }
            }
            let mut rhs_terms = Vec::new();
            for k in 0..self.bound {
                if let Some(t) = element_terms(alg, &self.b[r][k], &format!("y{}", k + 1)) {
                    rhs_terms.push(t);
                }
            }
            eqs.push((lhs_terms, rhs_terms));
        }
        // Mention unused free variables once so the arity survives reparsing.
        for (j, used) in used_x.iter().enumerate() {
            if !used {
                eqs[0].0.push(format!("0*x{}", j + 1));
            }
        }
        let body = eqs
            .into_iter()
            .map(|(l, r)| {
                let lhs = if l.is_empty() { "0".to_string() } else { l.join(" + ") };
                let rhs = if r.is_empty() { "0".to_string() } else { r.join(" + ") };
                format!("{lhs} = {rhs}")
            })
            .collect::<Vec<_>>()
            .join(" & ");
        if self.bound > 0 {
            let vars = (1..=self.bound)
                .map(|k| format!("y{k}"))
                .collect::<Vec<_>>()
                .join(" ");
            format!("E {vars}. {body}")
        } else {
            body
        }
    }
}

/// Renders `coeff * var` as DSL terms, or `None` when the coefficient is 0.
fn element_terms(alg: &Algebra, coeff: &[u32], var: &str) -> Option<String> {
    let p = alg.prime();
    if coeff.iter().all(|&c| c % p == 0) {
        return None;
    }
    // Scalar multiples of the unit print without a basis name.
    for s in 1..p {
        let scaled: Vec<u32> = alg
            .unit()
            .iter()
            .map(|&u| (u64::from(u) * u64::from(s) % u64::from(p)) as u32)
            .collect();
        if scaled == coeff {
            return Some(if s == 1 {
                var.to_string()
            } else {
                format!("{s}*{var}")
            });
        }
    }
    let parts: Vec<String> = coeff
        .iter()
        .enumerate()
        .filter(|(_, &c)| c % p != 0)
        .map(|(t, &c)| {
            let label = &alg.basis_labels()[t];
            if c % p == 1 {
                format!("{label}*{var}")
            } else {
                format!("{c}*{label}*{var}")
            }
        })
        .collect();
    Some(parts.join(" + "))
}
