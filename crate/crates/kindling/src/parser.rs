//! A parser-combinator demo built on the stack: the parser monad is the
//! state transformer (input cursor) over the either monad (parse errors),
//! and choice comes from the monad-zero-plus machinery. Primitives are
//! written against the representation; everything else composes through the
//! elaborated bundle.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::alt::{mk_monad0p, Monad0p, Monad0pMin, Monad0pOps};
use crate::instances::{either_monad_min, EitherMonadMin, EitherTag};
use crate::kind::{App, Bundle, Elem, ElemFn};
use crate::signatures::{ApplicativeOps, FunctorOps, MonadMin};
use crate::transform::{state_t, StateT, StateTTag};

/// Cursor into the input: the character sequence plus an offset into it.
#[derive(Clone, PartialEq, Eq)]
pub struct ParseState {
    input: Rc<Vec<char>>,
    offset: usize,
}

impl ParseState {
    pub fn new(text: &str) -> ParseState {
        ParseState { input: Rc::new(text.chars().collect()), offset: 0 }
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn peek(&self) -> Option<char> {
        self.input.get(self.offset).copied()
    }

    pub fn at_end(&self) -> bool {
        self.offset >= self.input.len()
    }

    pub fn remaining_len(&self) -> usize {
        self.input.len() - self.offset
    }

    pub fn advance(&self) -> ParseState {
        self.advanced_by(1)
    }

    pub fn advanced_by(&self, n: usize) -> ParseState {
        debug_assert!(self.offset + n <= self.input.len());
        ParseState { input: self.input.clone(), offset: self.offset + n }
    }

    pub fn text(&self) -> String {
        self.input.iter().collect()
    }
}

impl core::fmt::Debug for ParseState {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{:?}@{}", self.text(), self.offset)
    }
}

/// A parse failure: where, and what was expected there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
}

impl ParseError {
    /// Combine two failures from the branches of a choice: keep the one that
    /// got further; at equal offsets join the descriptions. Empty
    /// descriptions (from `zero`) disappear, which is what makes `zero` an
    /// exact identity for `plus`.
    pub fn merge(self, other: ParseError) -> ParseError {
        if self.offset > other.offset {
            self
        } else if other.offset > self.offset {
            other
        } else {
            let expected = if self.expected.is_empty() {
                other.expected
            } else if other.expected.is_empty() {
                self.expected
            } else {
                format!("{} or {}", self.expected, other.expected)
            };
            ParseError { offset: self.offset, expected }
        }
    }
}

/// The parser constructor: state transformer over the either monad.
pub type ParserTag = StateTTag<ParseState, EitherTag<ParseError>>;

/// `Parser<A>` runs on a state and yields a value plus the rest, or fails.
pub type Parser<A> = App<ParserTag, A>;

/// Minimal monad-zero-plus bundle for parsers. The monad part is the
/// transformed stack; `zero` fails at the current offset and `plus` is
/// backtracking choice (the right branch restarts from the original state).
#[derive(Clone)]
pub struct ParserMonadMin {
    stack: StateT<ParseState, EitherMonadMin<ParseError>>,
}

pub fn parser_monad_min() -> ParserMonadMin {
    ParserMonadMin { stack: state_t(either_monad_min::<ParseError>()) }
}

impl ParserMonadMin {
    /// The transformer stack the parser monad is built from.
    pub fn stack(&self) -> &StateT<ParseState, EitherMonadMin<ParseError>> {
        &self.stack
    }
}

impl Bundle for ParserMonadMin {
    type F = ParserTag;
}

impl MonadMin for ParserMonadMin {
    fn ret<A: Elem>(&self, a: A) -> Parser<A> {
        self.stack.ret(a)
    }

    fn bind<A: Elem, B: Elem>(&self, m: Parser<A>, k: impl ElemFn<A, Parser<B>>) -> Parser<B> {
        self.stack.bind(m, k)
    }
}

impl Monad0pMin for ParserMonadMin {
    fn zero<A: Elem>(&self) -> Parser<A> {
        Rc::new(|st: ParseState| {
            Err(ParseError { offset: st.offset(), expected: String::new() })
        })
    }

    fn plus<A: Elem>(&self, x: Parser<A>, y: Parser<A>) -> Parser<A> {
        Rc::new(move |st: ParseState| match x(st.clone()) {
            Ok(r) => Ok(r),
            Err(e1) => match y(st) {
                Ok(r) => Ok(r),
                Err(e2) => Err(e1.merge(e2)),
            },
        })
    }
}

/// The full monad-zero-plus bundle for parsers.
pub fn parser_monad() -> Monad0p<ParserMonadMin> {
    mk_monad0p(parser_monad_min())
}

/// Run a parser on fresh input.
pub fn run_parser<A: Elem>(p: &Parser<A>, input: &str) -> Result<(A, ParseState), ParseError> {
    p(ParseState::new(input))
}

// ---------------------------------------------------------------------------
// Primitives
// ---------------------------------------------------------------------------

/// Consume one character satisfying `pred`; `expected` names it in errors.
pub fn satisfy(expected: &str, pred: impl ElemFn<char, bool>) -> Parser<char> {
    let expected = expected.to_string();
    Rc::new(move |st: ParseState| match st.peek() {
        Some(c) if pred(c) => Ok((c, st.advance())),
        _ => Err(ParseError { offset: st.offset(), expected: expected.clone() }),
    })
}

/// Consume exactly the character `c`.
pub fn char(c: char) -> Parser<char> {
    satisfy(&format!("'{}'", c), move |x| x == c)
}

/// Consume one decimal digit, yielding its numeric value.
pub fn digit() -> Parser<i64> {
    let m = parser_monad();
    m.fmap(
        |c: char| c as i64 - '0' as i64,
        satisfy("digit", |c: char| c.is_ascii_digit()),
    )
}

/// Consume the literal text `s`.
pub fn literal(s: &str) -> Parser<String> {
    let want: Vec<char> = s.chars().collect();
    let shown = format!("{:?}", s);
    Rc::new(move |st: ParseState| {
        let mut cur = st.clone();
        for c in &want {
            match cur.peek() {
                Some(x) if x == *c => cur = cur.advance(),
                _ => {
                    return Err(ParseError { offset: st.offset(), expected: shown.clone() })
                }
            }
        }
        Ok((want.iter().collect(), cur))
    })
}

/// Consume any run of whitespace. Never fails.
pub fn skip_ws() -> Parser<()> {
    Rc::new(|st: ParseState| {
        let mut cur = st;
        while matches!(cur.peek(), Some(c) if c.is_whitespace()) {
            cur = cur.advance();
        }
        Ok(((), cur))
    })
}

/// A token-level parser: run `p`, then skip trailing whitespace.
pub fn lexeme<A: Elem>(p: Parser<A>) -> Parser<A> {
    parser_monad().seq_left(p, skip_ws())
}

/// The literal `s` as a token (trailing whitespace skipped).
pub fn symbol(s: &str) -> Parser<String> {
    lexeme(literal(s))
}

/// Succeed only at end of input.
pub fn eof() -> Parser<()> {
    Rc::new(|st: ParseState| {
        if st.at_end() {
            Ok(((), st))
        } else {
            Err(ParseError { offset: st.offset(), expected: "end of input".to_string() })
        }
    })
}

/// Rename what a parser reports when it fails without progress.
pub fn label<A: Elem>(p: Parser<A>, what: &str) -> Parser<A> {
    let what = what.to_string();
    Rc::new(move |st: ParseState| match p(st.clone()) {
        Err(e) if e.offset == st.offset() => {
            Err(ParseError { offset: e.offset, expected: what.clone() })
        }
        other => other,
    })
}

/// Defer construction of a parser, breaking recursive grammar cycles under
/// strict evaluation.
pub fn lazy<A: Elem>(make: impl Fn() -> Parser<A> + Clone + 'static) -> Parser<A> {
    Rc::new(move |st| (make())(st))
}

/// Repeat `p` while it succeeds, requiring at least one success. `p` must
/// consume input on every success; a succeeding, non-consuming `p` is a
/// contract violation and panics (this replaces the lazy `many`, which would
/// diverge here).
pub fn many1_progress<A: Elem>(p: Parser<A>) -> Parser<Vec<A>> {
    Rc::new(move |st: ParseState| {
        let mut out = Vec::new();
        let mut cur = st;
        loop {
            match p(cur.clone()) {
                Ok((a, next)) => {
                    if next.offset() <= cur.offset() {
                        panic!(
                            "many1_progress: parser succeeded without consuming input at offset {}",
                            cur.offset()
                        );
                    }
                    out.push(a);
                    cur = next;
                }
                Err(e) => {
                    if out.is_empty() {
                        return Err(e);
                    }
                    return Ok((out, cur));
                }
            }
        }
    })
}

// ---------------------------------------------------------------------------
// Demo grammar: arithmetic expressions
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Num(i64),
    Bin(BinOp, Rc<Expr>, Rc<Expr>),
}

/// Failure of [`parse_expr`]: either the input did not parse, or it parsed
/// and evaluation divided by zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprError {
    Parse(ParseError),
    DivisionByZero,
}

impl core::fmt::Display for ExprError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ExprError::Parse(e) => {
                write!(f, "parse error at {}: expected {}", e.offset, e.expected)
            }
            ExprError::DivisionByZero => write!(f, "evaluation error: division by zero"),
        }
    }
}

/// A decimal integer literal token (no sign).
fn number() -> Parser<i64> {
    let m = parser_monad();
    lexeme(m.fmap(
        |digits: Vec<i64>| digits.into_iter().fold(0i64, |n, d| n.wrapping_mul(10).wrapping_add(d)),
        many1_progress(digit()),
    ))
}

/// Left-associative operator chain: `p (op p)*`. Committed: once an operator
/// is consumed the right operand must parse.
fn chainl1(p: Parser<Expr>, op: Parser<BinOp>) -> Parser<Expr> {
    Rc::new(move |st: ParseState| {
        let (mut acc, mut cur) = p(st)?;
        loop {
            match op(cur.clone()) {
                Err(_) => return Ok((acc, cur)),
                Ok((o, after_op)) => {
                    let (rhs, next) = p(after_op)?;
                    acc = Expr::Bin(o, Rc::new(acc), Rc::new(rhs));
                    cur = next;
                }
            }
        }
    })
}

fn op_parser(sym: &str, op: BinOp) -> Parser<BinOp> {
    parser_monad().fmap(move |_: String| op, symbol(sym))
}

fn factor() -> Parser<Expr> {
    let m = parser_monad();
    let paren = m.seq_left(m.seq_right(symbol("("), lazy(expr)), symbol(")"));
    let num = m.fmap(Expr::Num, number());
    label(m.plus(num, paren), "term")
}

fn term() -> Parser<Expr> {
    let m = parser_monad();
    chainl1(factor(), m.plus(op_parser("*", BinOp::Mul), op_parser("/", BinOp::Div)))
}

fn expr() -> Parser<Expr> {
    let m = parser_monad();
    chainl1(term(), m.plus(op_parser("+", BinOp::Add), op_parser("-", BinOp::Sub)))
}

fn parse_tree(input: &str) -> Result<Expr, ParseError> {
    let m = parser_monad();
    let program = m.seq_right(skip_ws(), m.seq_left(expr(), eof()));
    run_parser(&program, input).map(|(e, _)| e)
}

fn eval(e: &Expr) -> Result<i64, ExprError> {
    match e {
        Expr::Num(n) => Ok(*n),
        Expr::Bin(op, l, r) => {
            let l = eval(l)?;
            let r = eval(r)?;
            match op {
                BinOp::Add => Ok(l.wrapping_add(r)),
                BinOp::Sub => Ok(l.wrapping_sub(r)),
                BinOp::Mul => Ok(l.wrapping_mul(r)),
                BinOp::Div => {
                    if r == 0 {
                        Err(ExprError::DivisionByZero)
                    } else {
                        // Truncates toward zero.
                        Ok(l.wrapping_div(r))
                    }
                }
            }
        }
    }
}

/// Parse and evaluate arithmetic over non-negative integer literals with
/// `+ - * /` and parentheses. `*` and `/` bind tighter; everything is
/// left-associative; division truncates toward zero; the whole input must be
/// consumed.
pub fn parse_expr(input: &str) -> Result<i64, ExprError> {
    let tree = parse_tree(input).map_err(ExprError::Parse)?;
    eval(&tree)
}
