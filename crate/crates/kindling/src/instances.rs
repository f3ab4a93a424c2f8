//! Concrete constructors and their minimal bundles.
//!
//! Each tag binds an abstract constructor to a host type (`ListTag` to
//! `Vec`, `OptionTag` to `Option`, ...); each `*_monad_min` function builds
//! the hand-written two-operation bundle that elaboration expands. Two
//! applicative bundles ship for lists — the cartesian one falls out of the
//! monad, the pairwise one is [`list_zip_applicative_min`] — demonstrating
//! that several instances for one constructor coexist as plain values.

use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::marker::PhantomData;

use crate::kind::{App, Bundle, Elem, ElemFn, ElemFn2, TyCon};
use crate::signatures::{
    ApplicativeMin, FoldableMin, JoinMin, MonadMin, MonoidMin,
};
use crate::alt::Monad0pMin;

// ---------------------------------------------------------------------------
// Tags
// ---------------------------------------------------------------------------

pub struct ListTag;

impl TyCon for ListTag {
    type Apply<A: Elem> = Vec<A>;
}

pub struct OptionTag;

impl TyCon for OptionTag {
    type Apply<A: Elem> = Option<A>;
}

pub struct EitherTag<E: Elem>(PhantomData<E>);

impl<E: Elem> TyCon for EitherTag<E> {
    type Apply<A: Elem> = Result<A, E>;
}

pub struct IdentityTag;

impl TyCon for IdentityTag {
    type Apply<A: Elem> = A;
}

/// Environment-reading computations: `R -> A`.
pub struct ReaderTag<R: Elem>(PhantomData<R>);

impl<R: Elem> TyCon for ReaderTag<R> {
    type Apply<A: Elem> = Rc<dyn Fn(R) -> A>;
}

/// Output-accumulating computations: a value paired with a monoid log.
pub struct WriterTag<W: Elem>(PhantomData<W>);

impl<W: Elem> TyCon for WriterTag<W> {
    type Apply<A: Elem> = (A, W);
}

/// State-threading computations: `S -> (A, S)`.
pub struct StateTag<S: Elem>(PhantomData<S>);

impl<S: Elem> TyCon for StateTag<S> {
    type Apply<A: Elem> = Rc<dyn Fn(S) -> (A, S)>;
}

// ---------------------------------------------------------------------------
// Embed / project: each tag's container is literally the host type, so these
// are identity coercions that document the binding.
// ---------------------------------------------------------------------------

pub fn embed_list<A: Elem>(v: Vec<A>) -> App<ListTag, A> {
    v
}

pub fn project_list<A: Elem>(v: App<ListTag, A>) -> Vec<A> {
    v
}

pub fn embed_option<A: Elem>(v: Option<A>) -> App<OptionTag, A> {
    v
}

pub fn project_option<A: Elem>(v: App<OptionTag, A>) -> Option<A> {
    v
}

pub fn embed_either<A: Elem, E: Elem>(v: Result<A, E>) -> App<EitherTag<E>, A> {
    v
}

pub fn project_either<A: Elem, E: Elem>(v: App<EitherTag<E>, A>) -> Result<A, E> {
    v
}

pub fn embed_identity<A: Elem>(v: A) -> App<IdentityTag, A> {
    v
}

pub fn project_identity<A: Elem>(v: App<IdentityTag, A>) -> A {
    v
}

pub fn embed_writer<A: Elem, W: Elem>(v: (A, W)) -> App<WriterTag<W>, A> {
    v
}

pub fn project_writer<A: Elem, W: Elem>(v: App<WriterTag<W>, A>) -> (A, W) {
    v
}

// ---------------------------------------------------------------------------
// List
// ---------------------------------------------------------------------------

/// `ret x = [x]`, `bind seq func = concat (map func seq)`.
#[derive(Clone, Copy)]
pub struct ListMonadMin;

pub fn list_monad_min() -> ListMonadMin {
    ListMonadMin
}

impl Bundle for ListMonadMin {
    type F = ListTag;
}

impl MonadMin for ListMonadMin {
    fn ret<A: Elem>(&self, a: A) -> Vec<A> {
        vec![a]
    }

    fn bind<A: Elem, B: Elem>(&self, m: Vec<A>, k: impl ElemFn<A, Vec<B>>) -> Vec<B> {
        m.into_iter().flat_map(k).collect()
    }
}

/// The pairwise list applicative: `apply` zips functions with arguments,
/// truncating to the shorter side.
///
/// A true zip `pure` would be an infinite repetition, which a strict host
/// cannot build, so `pure` is the singleton list. Consequence: the identity
/// law fails for lists of length > 1, and the law suite for this instance is
/// restricted to homomorphism, interchange and equal-length composition.
#[derive(Clone, Copy)]
pub struct ZipListApplicativeMin;

pub fn list_zip_applicative_min() -> ZipListApplicativeMin {
    ZipListApplicativeMin
}

impl Bundle for ZipListApplicativeMin {
    type F = ListTag;
}

impl ApplicativeMin for ZipListApplicativeMin {
    fn pure<A: Elem>(&self, a: A) -> Vec<A> {
        vec![a]
    }

    fn apply<A: Elem, B: Elem, G: ElemFn<A, B>>(&self, ff: Vec<G>, fa: Vec<A>) -> Vec<B> {
        ff.into_iter().zip(fa).map(|(f, a)| f(a)).collect()
    }
}

/// Join-form list monad, written directly against the host list.
#[derive(Clone, Copy)]
pub struct ListJoinMin;

pub fn list_join_min() -> ListJoinMin {
    ListJoinMin
}

impl Bundle for ListJoinMin {
    type F = ListTag;
}

impl JoinMin for ListJoinMin {
    fn ret<A: Elem>(&self, a: A) -> Vec<A> {
        vec![a]
    }

    fn fmap<A: Elem, B: Elem>(&self, f: impl ElemFn<A, B>, fa: Vec<A>) -> Vec<B> {
        fa.into_iter().map(f).collect()
    }

    fn join<A: Elem>(&self, nested: Vec<Vec<A>>) -> Vec<A> {
        nested.into_iter().flatten().collect()
    }
}

// ---------------------------------------------------------------------------
// Option
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
pub struct OptionMonadMin;

pub fn option_monad_min() -> OptionMonadMin {
    OptionMonadMin
}

impl Bundle for OptionMonadMin {
    type F = OptionTag;
}

impl MonadMin for OptionMonadMin {
    fn ret<A: Elem>(&self, a: A) -> Option<A> {
        Some(a)
    }

    fn bind<A: Elem, B: Elem>(&self, m: Option<A>, k: impl ElemFn<A, Option<B>>) -> Option<B> {
        m.and_then(|a| k(a))
    }
}

/// Join-form option monad.
#[derive(Clone, Copy)]
pub struct OptionJoinMin;

pub fn option_join_min() -> OptionJoinMin {
    OptionJoinMin
}

impl Bundle for OptionJoinMin {
    type F = OptionTag;
}

impl JoinMin for OptionJoinMin {
    fn ret<A: Elem>(&self, a: A) -> Option<A> {
        Some(a)
    }

    fn fmap<A: Elem, B: Elem>(&self, f: impl ElemFn<A, B>, fa: Option<A>) -> Option<B> {
        fa.map(f)
    }

    fn join<A: Elem>(&self, nested: Option<Option<A>>) -> Option<A> {
        nested.flatten()
    }
}

// ---------------------------------------------------------------------------
// Either
// ---------------------------------------------------------------------------

/// The first error short-circuits.
pub struct EitherMonadMin<E: Elem>(PhantomData<E>);

impl<E: Elem> Clone for EitherMonadMin<E> {
    fn clone(&self) -> Self {
        EitherMonadMin(PhantomData)
    }
}

pub fn either_monad_min<E: Elem>() -> EitherMonadMin<E> {
    EitherMonadMin(PhantomData)
}

impl<E: Elem> Bundle for EitherMonadMin<E> {
    type F = EitherTag<E>;
}

impl<E: Elem> MonadMin for EitherMonadMin<E> {
    fn ret<A: Elem>(&self, a: A) -> Result<A, E> {
        Ok(a)
    }

    fn bind<A: Elem, B: Elem>(
        &self,
        m: Result<A, E>,
        k: impl ElemFn<A, Result<B, E>>,
    ) -> Result<B, E> {
        m.and_then(|a| k(a))
    }
}

// ---------------------------------------------------------------------------
// Identity
// ---------------------------------------------------------------------------

/// `bind` is plain function application.
#[derive(Clone, Copy)]
pub struct IdentityMonadMin;

pub fn identity_monad_min() -> IdentityMonadMin {
    IdentityMonadMin
}

impl Bundle for IdentityMonadMin {
    type F = IdentityTag;
}

impl MonadMin for IdentityMonadMin {
    fn ret<A: Elem>(&self, a: A) -> A {
        a
    }

    fn bind<A: Elem, B: Elem>(&self, m: A, k: impl ElemFn<A, B>) -> B {
        k(m)
    }
}

/// Join-form identity monad.
#[derive(Clone, Copy)]
pub struct IdentityJoinMin;

pub fn identity_join_min() -> IdentityJoinMin {
    IdentityJoinMin
}

impl Bundle for IdentityJoinMin {
    type F = IdentityTag;
}

impl JoinMin for IdentityJoinMin {
    fn ret<A: Elem>(&self, a: A) -> A {
        a
    }

    fn fmap<A: Elem, B: Elem>(&self, f: impl ElemFn<A, B>, fa: A) -> B {
        f(fa)
    }

    fn join<A: Elem>(&self, nested: A) -> A {
        nested
    }
}

// ---------------------------------------------------------------------------
// Reader
// ---------------------------------------------------------------------------

pub struct ReaderMonadMin<R: Elem>(PhantomData<R>);

impl<R: Elem> Clone for ReaderMonadMin<R> {
    fn clone(&self) -> Self {
        ReaderMonadMin(PhantomData)
    }
}

pub fn reader_monad_min<R: Elem>() -> ReaderMonadMin<R> {
    ReaderMonadMin(PhantomData)
}

impl<R: Elem> Bundle for ReaderMonadMin<R> {
    type F = ReaderTag<R>;
}

impl<R: Elem> MonadMin for ReaderMonadMin<R> {
    fn ret<A: Elem>(&self, a: A) -> Rc<dyn Fn(R) -> A> {
        Rc::new(move |_| a.clone())
    }

    fn bind<A: Elem, B: Elem>(
        &self,
        m: Rc<dyn Fn(R) -> A>,
        k: impl ElemFn<A, Rc<dyn Fn(R) -> B>>,
    ) -> Rc<dyn Fn(R) -> B> {
        Rc::new(move |r: R| (k(m(r.clone())))(r))
    }
}

/// The reader computation that returns its environment.
pub fn reader_ask<R: Elem>() -> App<ReaderTag<R>, R> {
    Rc::new(|r| r)
}

/// Run a reader computation at an environment.
pub fn run_reader<R: Elem, A: Elem>(m: &App<ReaderTag<R>, A>, env: R) -> A {
    m(env)
}

// ---------------------------------------------------------------------------
// Writer
// ---------------------------------------------------------------------------

/// Parameterised by an explicit monoid value for the log type.
#[derive(Clone)]
pub struct WriterMonadMin<Mo: MonoidMin> {
    monoid: Mo,
}

pub fn writer_monad_min<Mo: MonoidMin>(monoid: Mo) -> WriterMonadMin<Mo> {
    WriterMonadMin { monoid }
}

impl<Mo: MonoidMin> WriterMonadMin<Mo> {
    pub fn monoid(&self) -> &Mo {
        &self.monoid
    }
}

impl<Mo: MonoidMin> Bundle for WriterMonadMin<Mo> {
    type F = WriterTag<Mo::Value>;
}

impl<Mo: MonoidMin> MonadMin for WriterMonadMin<Mo> {
    fn ret<A: Elem>(&self, a: A) -> (A, Mo::Value) {
        (a, self.monoid.empty())
    }

    fn bind<A: Elem, B: Elem>(
        &self,
        m: (A, Mo::Value),
        k: impl ElemFn<A, (B, Mo::Value)>,
    ) -> (B, Mo::Value) {
        let (a, w1) = m;
        let (b, w2) = k(a);
        (b, self.monoid.combine(w1, w2))
    }
}

/// Record one log entry.
pub fn writer_tell<W: Elem>(w: W) -> App<WriterTag<W>, ()> {
    ((), w)
}

/// Concatenation monoid on vectors.
pub struct VecMonoid<T: Elem>(PhantomData<T>);

impl<T: Elem> Clone for VecMonoid<T> {
    fn clone(&self) -> Self {
        VecMonoid(PhantomData)
    }
}

pub fn vec_monoid<T: Elem>() -> VecMonoid<T> {
    VecMonoid(PhantomData)
}

impl<T: Elem> MonoidMin for VecMonoid<T> {
    type Value = Vec<T>;

    fn empty(&self) -> Vec<T> {
        Vec::new()
    }

    fn combine(&self, mut x: Vec<T>, mut y: Vec<T>) -> Vec<T> {
        x.append(&mut y);
        x
    }
}

// ---------------------------------------------------------------------------
// State
// ---------------------------------------------------------------------------

pub struct StateMonadMin<S: Elem>(PhantomData<S>);

impl<S: Elem> Clone for StateMonadMin<S> {
    fn clone(&self) -> Self {
        StateMonadMin(PhantomData)
    }
}

pub fn state_monad_min<S: Elem>() -> StateMonadMin<S> {
    StateMonadMin(PhantomData)
}

impl<S: Elem> Bundle for StateMonadMin<S> {
    type F = StateTag<S>;
}

impl<S: Elem> MonadMin for StateMonadMin<S> {
    fn ret<A: Elem>(&self, a: A) -> Rc<dyn Fn(S) -> (A, S)> {
        Rc::new(move |s| (a.clone(), s))
    }

    fn bind<A: Elem, B: Elem>(
        &self,
        m: Rc<dyn Fn(S) -> (A, S)>,
        k: impl ElemFn<A, Rc<dyn Fn(S) -> (B, S)>>,
    ) -> Rc<dyn Fn(S) -> (B, S)> {
        Rc::new(move |s: S| {
            let (a, s2) = m(s);
            (k(a))(s2)
        })
    }
}

pub fn state_get<S: Elem>() -> App<StateTag<S>, S> {
    Rc::new(|s: S| (s.clone(), s))
}

pub fn state_put<S: Elem>(next: S) -> App<StateTag<S>, ()> {
    Rc::new(move |_| ((), next.clone()))
}

pub fn state_modify<S: Elem>(f: impl ElemFn<S, S>) -> App<StateTag<S>, ()> {
    Rc::new(move |s| ((), f(s)))
}

/// Run a state computation from an initial state.
pub fn run_state<S: Elem, A: Elem>(m: &App<StateTag<S>, A>, init: S) -> (A, S) {
    m(init)
}

// ---------------------------------------------------------------------------
// Zero/plus instances
// ---------------------------------------------------------------------------

/// `zero = []`, `plus` appends.
#[derive(Clone, Copy)]
pub struct ListMonad0pMin;

pub fn list_monad0p_min() -> ListMonad0pMin {
    ListMonad0pMin
}

impl Bundle for ListMonad0pMin {
    type F = ListTag;
}

impl MonadMin for ListMonad0pMin {
    fn ret<A: Elem>(&self, a: A) -> Vec<A> {
        ListMonadMin.ret(a)
    }

    fn bind<A: Elem, B: Elem>(&self, m: Vec<A>, k: impl ElemFn<A, Vec<B>>) -> Vec<B> {
        ListMonadMin.bind(m, k)
    }
}

impl Monad0pMin for ListMonad0pMin {
    fn zero<A: Elem>(&self) -> Vec<A> {
        Vec::new()
    }

    fn plus<A: Elem>(&self, mut x: Vec<A>, mut y: Vec<A>) -> Vec<A> {
        x.append(&mut y);
        x
    }
}

/// `zero = None`, `plus` keeps the first success.
#[derive(Clone, Copy)]
pub struct OptionMonad0pMin;

pub fn option_monad0p_min() -> OptionMonad0pMin {
    OptionMonad0pMin
}

impl Bundle for OptionMonad0pMin {
    type F = OptionTag;
}

impl MonadMin for OptionMonad0pMin {
    fn ret<A: Elem>(&self, a: A) -> Option<A> {
        OptionMonadMin.ret(a)
    }

    fn bind<A: Elem, B: Elem>(&self, m: Option<A>, k: impl ElemFn<A, Option<B>>) -> Option<B> {
        OptionMonadMin.bind(m, k)
    }
}

impl Monad0pMin for OptionMonad0pMin {
    fn zero<A: Elem>(&self) -> Option<A> {
        None
    }

    fn plus<A: Elem>(&self, x: Option<A>, y: Option<A>) -> Option<A> {
        x.or(y)
    }
}

// ---------------------------------------------------------------------------
// Foldable
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
pub struct ListFoldableMin;

pub fn list_foldable_min() -> ListFoldableMin {
    ListFoldableMin
}

impl Bundle for ListFoldableMin {
    type F = ListTag;
}

impl FoldableMin for ListFoldableMin {
    fn fold_right<A: Elem, B: Elem>(
        &self,
        f: impl ElemFn2<A, B, B>,
        init: B,
        ta: Vec<A>,
    ) -> B {
        ta.into_iter().rev().fold(init, |b, a| f(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signatures::MonadMin;

    #[test]
    fn list_ret_is_singleton() {
        assert_eq!(list_monad_min().ret(3), vec![3]);
    }

    #[test]
    fn list_bind_is_concat_map() {
        // concat (map k seq) evaluated by hand: [1,2] with x -> [x, x+1]
        let out = list_monad_min().bind(vec![1, 2], |x: i64| vec![x, x + 1]);
        assert_eq!(out, vec![1, 2, 2, 3]);
    }

    #[test]
    fn list_bind_empty_input() {
        let out = list_monad_min().bind(Vec::<i64>::new(), |x: i64| vec![x]);
        assert_eq!(out, Vec::<i64>::new());
    }

    #[test]
    fn zip_apply_truncates_to_shorter() {
        let fs: Vec<Rc<dyn Fn(i64) -> i64>> = vec![Rc::new(|x| x + 1), Rc::new(|x| x * 2)];
        let fs = fs.into_iter().map(|f| move |x| f(x)).collect::<Vec<_>>();
        let out = list_zip_applicative_min().apply(fs, vec![10, 20, 30]);
        assert_eq!(out, vec![11, 40]);
    }

    #[test]
    fn zip_apply_empty_functions() {
        let fs: Vec<fn(i64) -> i64> = Vec::new();
        let out = list_zip_applicative_min().apply(fs, vec![1, 2, 3]);
        assert_eq!(out, Vec::<i64>::new());
    }

    #[test]
    fn zip_pure_is_singleton() {
        assert_eq!(list_zip_applicative_min().pure(5), vec![5]);
    }

    #[test]
    fn zip_and_cartesian_apply_are_distinguishable() {
        // Same input, different instances for the same constructor.
        use crate::elaborate::mona_min_to_app_min;
        let plus_one = |x: i64| x + 1;
        let times_two = |x: i64| x * 2;
        let fs: Vec<Rc<dyn Fn(i64) -> i64>> =
            vec![Rc::new(plus_one), Rc::new(times_two)];
        let fs = fs.into_iter().map(|f| move |x| f(x)).collect::<Vec<_>>();
        let zip = list_zip_applicative_min().apply(fs.clone(), vec![10, 20, 30]);
        let cart = mona_min_to_app_min(list_monad_min()).apply(fs, vec![10, 20, 30]);
        assert_eq!(zip, vec![11, 40]);
        assert_eq!(cart, vec![11, 21, 31, 20, 40, 60]);
        assert_ne!(zip, cart);
    }

    #[test]
    fn option_bind_short_circuits() {
        let m = option_monad_min();
        let square_if_positive =
            |x: i64| if x > 0 { Some(x * x) } else { None };
        assert_eq!(m.bind(Some(2), square_if_positive), Some(4));
        assert_eq!(m.bind(Some(-2), square_if_positive), None);
        assert_eq!(m.bind(None, square_if_positive), None);
    }

    #[test]
    fn either_error_absorbs() {
        let m = either_monad_min::<&'static str>();
        let out = m.bind(Err("e"), |x: i64| Ok(x + 1));
        assert_eq!(out, Err("e"));
        assert_eq!(m.ret(4), Ok::<i64, &'static str>(4));
    }

    #[test]
    fn identity_bind_is_application() {
        assert_eq!(identity_monad_min().bind(5, |x: i64| x + 1), 6);
    }

    #[test]
    fn reader_threads_environment() {
        let m = reader_monad_min::<i64>();
        let doubled = m.bind(reader_ask(), move |env: i64| {
            let m2 = reader_monad_min::<i64>();
            m2.ret(env * 2)
        });
        assert_eq!(run_reader(&doubled, 21), 42);
    }

    #[test]
    fn writer_accumulates_via_monoid() {
        let m = writer_monad_min(vec_monoid::<i64>());
        let out = m.bind(writer_tell(vec![1]), |_: ()| writer_tell(vec![2]));
        assert_eq!(out, ((), vec![1, 2]));
    }

    #[test]
    fn state_threads_state() {
        let m = state_monad_min::<i64>();
        let step = m.bind(state_get(), |s: i64| state_put(s + 1));
        assert_eq!(run_state(&step, 5), ((), 6));
    }

    #[test]
    fn state_modify_applies_function() {
        let step = state_modify(|s: i64| s * 10);
        assert_eq!(run_state(&step, 4), ((), 40));
    }

    #[test]
    fn list_plus_appends() {
        let m = list_monad0p_min();
        assert_eq!(m.plus(vec![1], vec![2, 3]), vec![1, 2, 3]);
        assert_eq!(m.zero::<i64>(), Vec::<i64>::new());
    }

    #[test]
    fn option_plus_is_left_biased() {
        let m = option_monad0p_min();
        assert_eq!(m.plus(None::<i64>, None), None);
        assert_eq!(m.plus(Some(1), Some(2)), Some(1));
        assert_eq!(m.plus(None, Some(2)), Some(2));
    }

    #[test]
    fn embed_project_round_trips() {
        assert_eq!(project_list(embed_list(vec![1, 2])), vec![1, 2]);
        assert_eq!(project_list(embed_list(Vec::<i64>::new())), Vec::<i64>::new());
        assert_eq!(project_option(embed_option(None::<i64>)), None);
        assert_eq!(project_option(embed_option(Some(7))), Some(7));
        assert_eq!(project_either(embed_either(Ok::<_, i64>(1))), Ok(1));
        assert_eq!(project_identity(embed_identity(9)), 9);
        assert_eq!(project_writer(embed_writer((1, vec![2]))), (1, vec![2]));
    }

    #[test]
    fn vec_monoid_laws_on_samples() {
        let m = vec_monoid::<i64>();
        let samples = [vec![], vec![1], vec![1, 2], vec![3, 4, 5]];
        for x in &samples {
            assert_eq!(m.combine(m.empty(), x.clone()), *x);
            assert_eq!(m.combine(x.clone(), m.empty()), *x);
            for y in &samples {
                for z in &samples {
                    let l = m.combine(m.combine(x.clone(), y.clone()), z.clone());
                    let r = m.combine(x.clone(), m.combine(y.clone(), z.clone()));
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn fold_right_agrees_with_direct_fold() {
        let f = list_foldable_min();
        let out = f.fold_right(|a: i64, b: i64| a - b, 0, vec![1, 2, 3]);
        // Direct right fold: 1 - (2 - (3 - 0))
        assert_eq!(out, 1 - (2 - (3 - 0)));
    }
}
