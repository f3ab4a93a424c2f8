//! Per-instance test rigs: container generation, extensional equality and
//! rendering.
//!
//! Containers holding functions (reader, state, transformed stacks, parsers)
//! cannot be compared intensionally; their rigs observe computations at a
//! fixed fan of sample points (16 by default) and compare the observations.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;
use core::fmt::Write as _;

use super::{Affine, Gen};
use crate::combine::ProductTag;
use crate::instances::{
    EitherTag, IdentityTag, ListTag, OptionTag, ReaderTag, StateTag, WriterTag,
};
use crate::kind::{App, Elem, TyCon};
use crate::parser::{ParseError, ParseState, ParserTag};
use crate::transform::{ExceptTTag, StateTTag};

/// The extensional view of one constructor's containers: how to generate
/// them, map over them natively (independent of any bundle under test),
/// compare them, and render them.
pub trait Extensional<F: TyCon>: Clone + 'static {
    fn gen_container<A: Elem>(
        &self,
        g: &mut Gen,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> App<F, A>;

    /// Like [`Extensional::gen_container`] but pinned to a length, for shapes
    /// where length is meaningful. The default ignores the request.
    fn gen_container_len<A: Elem>(
        &self,
        g: &mut Gen,
        _len: usize,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> App<F, A> {
        self.gen_container(g, elem)
    }

    /// A trusted elementwise map, used to prepare test inputs without going
    /// through the bundle under test.
    fn map_container<A: Elem, B: Elem>(&self, fa: App<F, A>, f: Rc<dyn Fn(A) -> B>)
        -> App<F, B>;

    fn container_eq<A: Elem + PartialEq>(&self, x: &App<F, A>, y: &App<F, A>) -> bool;

    fn render<A: Elem + Debug>(&self, x: &App<F, A>) -> String;
}

/// The default sample fan for function-shaped containers: 16 points.
pub fn default_fan() -> Vec<i64> {
    (-8..8).collect()
}

// ---------------------------------------------------------------------------
// Plain containers
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, Default)]
pub struct ListRig;

impl Extensional<ListTag> for ListRig {
    fn gen_container<A: Elem>(
        &self,
        g: &mut Gen,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> Vec<A> {
        let len = g.usize_below(g.size() + 1);
        (0..len).map(|_| elem(g)).collect()
    }

    fn gen_container_len<A: Elem>(
        &self,
        g: &mut Gen,
        len: usize,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> Vec<A> {
        (0..len).map(|_| elem(g)).collect()
    }

    fn map_container<A: Elem, B: Elem>(&self, fa: Vec<A>, f: Rc<dyn Fn(A) -> B>) -> Vec<B> {
        fa.into_iter().map(|a| f(a)).collect()
    }

    fn container_eq<A: Elem + PartialEq>(&self, x: &Vec<A>, y: &Vec<A>) -> bool {
        x == y
    }

    fn render<A: Elem + Debug>(&self, x: &Vec<A>) -> String {
        format!("{:?}", x)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct OptionRig;

impl Extensional<OptionTag> for OptionRig {
    fn gen_container<A: Elem>(
        &self,
        g: &mut Gen,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> Option<A> {
        if g.usize_below(4) == 0 {
            None
        } else {
            Some(elem(g))
        }
    }

    fn map_container<A: Elem, B: Elem>(&self, fa: Option<A>, f: Rc<dyn Fn(A) -> B>)
        -> Option<B> {
        fa.map(|a| f(a))
    }

    fn container_eq<A: Elem + PartialEq>(&self, x: &Option<A>, y: &Option<A>) -> bool {
        x == y
    }

    fn render<A: Elem + Debug>(&self, x: &Option<A>) -> String {
        format!("{:?}", x)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EitherRig;

impl Extensional<EitherTag<String>> for EitherRig {
    fn gen_container<A: Elem>(
        &self,
        g: &mut Gen,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> Result<A, String> {
        if g.usize_below(4) == 0 {
            Err(format!("e{}", g.usize_below(3)))
        } else {
            Ok(elem(g))
        }
    }

    fn map_container<A: Elem, B: Elem>(
        &self,
        fa: Result<A, String>,
        f: Rc<dyn Fn(A) -> B>,
    ) -> Result<B, String> {
        fa.map(|a| f(a))
    }

    fn container_eq<A: Elem + PartialEq>(
        &self,
        x: &Result<A, String>,
        y: &Result<A, String>,
    ) -> bool {
        x == y
    }

    fn render<A: Elem + Debug>(&self, x: &Result<A, String>) -> String {
        format!("{:?}", x)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityRig;

impl Extensional<IdentityTag> for IdentityRig {
    fn gen_container<A: Elem>(&self, g: &mut Gen, elem: &mut dyn FnMut(&mut Gen) -> A) -> A {
        elem(g)
    }

    fn map_container<A: Elem, B: Elem>(&self, fa: A, f: Rc<dyn Fn(A) -> B>) -> B {
        f(fa)
    }

    fn container_eq<A: Elem + PartialEq>(&self, x: &A, y: &A) -> bool {
        x == y
    }

    fn render<A: Elem + Debug>(&self, x: &A) -> String {
        format!("{:?}", x)
    }
}

#[derive(Clone, Debug)]
pub struct WriterRig;

impl Default for WriterRig {
    fn default() -> Self {
        WriterRig
    }
}

impl Extensional<WriterTag<Vec<i64>>> for WriterRig {
    fn gen_container<A: Elem>(
        &self,
        g: &mut Gen,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> (A, Vec<i64>) {
        let a = elem(g);
        let entries = g.usize_below(4);
        let log = (0..entries).map(|_| g.i64_in(-9, 9)).collect();
        (a, log)
    }

    fn map_container<A: Elem, B: Elem>(
        &self,
        fa: (A, Vec<i64>),
        f: Rc<dyn Fn(A) -> B>,
    ) -> (B, Vec<i64>) {
        (f(fa.0), fa.1)
    }

    fn container_eq<A: Elem + PartialEq>(&self, x: &(A, Vec<i64>), y: &(A, Vec<i64>)) -> bool {
        x == y
    }

    fn render<A: Elem + Debug>(&self, x: &(A, Vec<i64>)) -> String {
        format!("{:?}", x)
    }
}

// ---------------------------------------------------------------------------
// Function-shaped containers
// ---------------------------------------------------------------------------

fn pick<A: Elem>(pool: &[A], selector: Affine, key: i64) -> A {
    let idx = selector.eval(key).rem_euclid(pool.len() as i64) as usize;
    pool[idx].clone()
}

#[derive(Clone, Debug)]
pub struct ReaderRig {
    pub fan: Vec<i64>,
}

impl Default for ReaderRig {
    fn default() -> Self {
        ReaderRig { fan: default_fan() }
    }
}

impl Extensional<ReaderTag<i64>> for ReaderRig {
    fn gen_container<A: Elem>(
        &self,
        g: &mut Gen,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> Rc<dyn Fn(i64) -> A> {
        let n = 1 + g.usize_below(4);
        let pool: Vec<A> = (0..n).map(|_| elem(g)).collect();
        let selector = Affine::random(g);
        Rc::new(move |r: i64| pick(&pool, selector, r))
    }

    fn map_container<A: Elem, B: Elem>(
        &self,
        fa: Rc<dyn Fn(i64) -> A>,
        f: Rc<dyn Fn(A) -> B>,
    ) -> Rc<dyn Fn(i64) -> B> {
        Rc::new(move |r| f(fa(r)))
    }

    fn container_eq<A: Elem + PartialEq>(
        &self,
        x: &Rc<dyn Fn(i64) -> A>,
        y: &Rc<dyn Fn(i64) -> A>,
    ) -> bool {
        self.fan.iter().all(|r| x(*r) == y(*r))
    }

    fn render<A: Elem + Debug>(&self, x: &Rc<dyn Fn(i64) -> A>) -> String {
        let mut out = String::from("{");
        for (i, r) in self.fan.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{}->{:?}", r, x(*r));
        }
        out.push('}');
        out
    }
}

#[derive(Clone, Debug)]
pub struct StateRig {
    pub fan: Vec<i64>,
}

impl Default for StateRig {
    fn default() -> Self {
        StateRig { fan: default_fan() }
    }
}

impl Extensional<StateTag<i64>> for StateRig {
    fn gen_container<A: Elem>(
        &self,
        g: &mut Gen,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> Rc<dyn Fn(i64) -> (A, i64)> {
        let n = 1 + g.usize_below(4);
        let pool: Vec<A> = (0..n).map(|_| elem(g)).collect();
        let selector = Affine::random(g);
        let update = Affine::random(g);
        Rc::new(move |s: i64| (pick(&pool, selector, s), update.eval(s)))
    }

    fn map_container<A: Elem, B: Elem>(
        &self,
        fa: Rc<dyn Fn(i64) -> (A, i64)>,
        f: Rc<dyn Fn(A) -> B>,
    ) -> Rc<dyn Fn(i64) -> (B, i64)> {
        Rc::new(move |s| {
            let (a, s2) = fa(s);
            (f(a), s2)
        })
    }

    fn container_eq<A: Elem + PartialEq>(
        &self,
        x: &Rc<dyn Fn(i64) -> (A, i64)>,
        y: &Rc<dyn Fn(i64) -> (A, i64)>,
    ) -> bool {
        self.fan.iter().all(|s| x(*s) == y(*s))
    }

    fn render<A: Elem + Debug>(&self, x: &Rc<dyn Fn(i64) -> (A, i64)>) -> String {
        let mut out = String::from("{");
        for (i, s) in self.fan.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{}->{:?}", s, x(*s));
        }
        out.push('}');
        out
    }
}

/// Rig for `state_t` over the identity monad.
#[derive(Clone, Debug)]
pub struct StateTIdentityRig {
    pub fan: Vec<i64>,
}

impl Default for StateTIdentityRig {
    fn default() -> Self {
        StateTIdentityRig { fan: default_fan() }
    }
}

impl Extensional<StateTTag<i64, IdentityTag>> for StateTIdentityRig {
    fn gen_container<A: Elem>(
        &self,
        g: &mut Gen,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> Rc<dyn Fn(i64) -> (A, i64)> {
        let n = 1 + g.usize_below(4);
        let pool: Vec<A> = (0..n).map(|_| elem(g)).collect();
        let selector = Affine::random(g);
        let update = Affine::random(g);
        Rc::new(move |s: i64| (pick(&pool, selector, s), update.eval(s)))
    }

    fn map_container<A: Elem, B: Elem>(
        &self,
        fa: Rc<dyn Fn(i64) -> (A, i64)>,
        f: Rc<dyn Fn(A) -> B>,
    ) -> Rc<dyn Fn(i64) -> (B, i64)> {
        Rc::new(move |s| {
            let (a, s2) = fa(s);
            (f(a), s2)
        })
    }

    fn container_eq<A: Elem + PartialEq>(
        &self,
        x: &Rc<dyn Fn(i64) -> (A, i64)>,
        y: &Rc<dyn Fn(i64) -> (A, i64)>,
    ) -> bool {
        self.fan.iter().all(|s| x(*s) == y(*s))
    }

    fn render<A: Elem + Debug>(&self, x: &Rc<dyn Fn(i64) -> (A, i64)>) -> String {
        let mut out = String::from("{");
        for (i, s) in self.fan.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{}->{:?}", s, x(*s));
        }
        out.push('}');
        out
    }
}

/// Rig for `state_t` over the option monad: computations may fail outright,
/// controlled by a generated bitmask over the state.
#[derive(Clone, Debug)]
pub struct StateTOptionRig {
    pub fan: Vec<i64>,
}

impl Default for StateTOptionRig {
    fn default() -> Self {
        StateTOptionRig { fan: default_fan() }
    }
}

impl Extensional<StateTTag<i64, OptionTag>> for StateTOptionRig {
    fn gen_container<A: Elem>(
        &self,
        g: &mut Gen,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> Rc<dyn Fn(i64) -> Option<(A, i64)>> {
        let n = 1 + g.usize_below(4);
        let pool: Vec<A> = (0..n).map(|_| elem(g)).collect();
        let selector = Affine::random(g);
        let update = Affine::random(g);
        // Roughly one state in four fails.
        let fail_mask = g.next_u64() & g.next_u64();
        Rc::new(move |s: i64| {
            if (fail_mask >> s.rem_euclid(64)) & 1 == 1 {
                None
            } else {
                Some((pick(&pool, selector, s), update.eval(s)))
            }
        })
    }

    fn map_container<A: Elem, B: Elem>(
        &self,
        fa: Rc<dyn Fn(i64) -> Option<(A, i64)>>,
        f: Rc<dyn Fn(A) -> B>,
    ) -> Rc<dyn Fn(i64) -> Option<(B, i64)>> {
        Rc::new(move |s| fa(s).map(|(a, s2)| (f(a), s2)))
    }

    fn container_eq<A: Elem + PartialEq>(
        &self,
        x: &Rc<dyn Fn(i64) -> Option<(A, i64)>>,
        y: &Rc<dyn Fn(i64) -> Option<(A, i64)>>,
    ) -> bool {
        self.fan.iter().all(|s| x(*s) == y(*s))
    }

    fn render<A: Elem + Debug>(&self, x: &Rc<dyn Fn(i64) -> Option<(A, i64)>>) -> String {
        let mut out = String::from("{");
        for (i, s) in self.fan.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{}->{:?}", s, x(*s));
        }
        out.push('}');
        out
    }
}

/// Rig for `except_t` over the identity monad: containers are plain
/// `Result<A, String>`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExceptTIdentityRig;

impl Extensional<ExceptTTag<String, IdentityTag>> for ExceptTIdentityRig {
    fn gen_container<A: Elem>(
        &self,
        g: &mut Gen,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> Result<A, String> {
        if g.usize_below(4) == 0 {
            Err(format!("e{}", g.usize_below(3)))
        } else {
            Ok(elem(g))
        }
    }

    fn map_container<A: Elem, B: Elem>(
        &self,
        fa: Result<A, String>,
        f: Rc<dyn Fn(A) -> B>,
    ) -> Result<B, String> {
        fa.map(|a| f(a))
    }

    fn container_eq<A: Elem + PartialEq>(
        &self,
        x: &Result<A, String>,
        y: &Result<A, String>,
    ) -> bool {
        x == y
    }

    fn render<A: Elem + Debug>(&self, x: &Result<A, String>) -> String {
        format!("{:?}", x)
    }
}

/// Rig for a product constructor, built from the component rigs.
#[derive(Clone, Debug, Default)]
pub struct ProductRig<RL, RR> {
    pub left: RL,
    pub right: RR,
}

impl<FL, FR, RL, RR> Extensional<ProductTag<FL, FR>> for ProductRig<RL, RR>
where
    FL: TyCon,
    FR: TyCon,
    RL: Extensional<FL>,
    RR: Extensional<FR>,
{
    fn gen_container<A: Elem>(
        &self,
        g: &mut Gen,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> (App<FL, A>, App<FR, A>) {
        let l = self.left.gen_container(g, elem);
        let r = self.right.gen_container(g, elem);
        (l, r)
    }

    fn map_container<A: Elem, B: Elem>(
        &self,
        fa: (App<FL, A>, App<FR, A>),
        f: Rc<dyn Fn(A) -> B>,
    ) -> (App<FL, B>, App<FR, B>) {
        (
            self.left.map_container(fa.0, f.clone()),
            self.right.map_container(fa.1, f),
        )
    }

    fn container_eq<A: Elem + PartialEq>(
        &self,
        x: &(App<FL, A>, App<FR, A>),
        y: &(App<FL, A>, App<FR, A>),
    ) -> bool {
        self.left.container_eq(&x.0, &y.0) && self.right.container_eq(&x.1, &y.1)
    }

    fn render<A: Elem + Debug>(&self, x: &(App<FL, A>, App<FR, A>)) -> String {
        format!("({}, {})", self.left.render(&x.0), self.right.render(&x.1))
    }
}

/// Rig for the parser constructor: parsers are observed by running them on a
/// fixed set of input states.
#[derive(Clone, Debug)]
pub struct ParserRig {
    pub states: Vec<ParseState>,
}

impl Default for ParserRig {
    fn default() -> Self {
        let texts = ["", "a", "ab", "abc", "xyz", "hello", "12+34", "((("];
        let mut states = Vec::new();
        for t in texts {
            states.push(ParseState::new(t));
        }
        // A few mid-input positions as well.
        states.push(ParseState::new("abcdef").advanced_by(2));
        states.push(ParseState::new("12+34").advanced_by(3));
        states.push(ParseState::new("hello").advanced_by(5));
        ParserRig { states }
    }
}

impl Extensional<ParserTag> for ParserRig {
    fn gen_container<A: Elem>(
        &self,
        g: &mut Gen,
        elem: &mut dyn FnMut(&mut Gen) -> A,
    ) -> App<ParserTag, A> {
        let n = 1 + g.usize_below(4);
        let pool: Vec<A> = (0..n).map(|_| elem(g)).collect();
        let selector = Affine::random(g);
        let consume = g.usize_below(3);
        let fail_mask = g.next_u64() & g.next_u64();
        let msg = format!("p{}", g.usize_below(3));
        Rc::new(move |st: ParseState| {
            let key = st.offset() as i64;
            if (fail_mask >> key.rem_euclid(64)) & 1 == 1 {
                return Err(ParseError { offset: st.offset(), expected: msg.clone() });
            }
            let available = st.remaining_len();
            if consume > available {
                return Err(ParseError { offset: st.offset(), expected: msg.clone() });
            }
            Ok((pick(&pool, selector, key), st.advanced_by(consume)))
        })
    }

    fn map_container<A: Elem, B: Elem>(
        &self,
        fa: App<ParserTag, A>,
        f: Rc<dyn Fn(A) -> B>,
    ) -> App<ParserTag, B> {
        Rc::new(move |st| fa(st).map(|(a, st2)| (f(a), st2)))
    }

    fn container_eq<A: Elem + PartialEq>(
        &self,
        x: &App<ParserTag, A>,
        y: &App<ParserTag, A>,
    ) -> bool {
        self.states.iter().all(|st| x(st.clone()) == y(st.clone()))
    }

    fn render<A: Elem + Debug>(&self, x: &App<ParserTag, A>) -> String {
        let mut out = String::from("{");
        for (i, st) in self.states.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            match x(st.clone()) {
                Ok((a, st2)) => {
                    let _ = write!(out, "{:?}@{}->Ok({:?}@{})", st.text(), st.offset(), a, st2.offset());
                }
                Err(e) => {
                    let _ = write!(
                        out,
                        "{:?}@{}->Err({}@{})",
                        st.text(),
                        st.offset(),
                        e.expected,
                        e.offset
                    );
                }
            }
        }
        out.push('}');
        out
    }
}
