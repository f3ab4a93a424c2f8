//! Elaboration of minimal bundles into full bundles, and derivation of
//! superclass minimal bundles from subclass ones.
//!
//! `mk_functor`, `mk_applicative` and `mk_monad` expand a handful of
//! hand-written operations into the whole class surface. The derivations run
//! opposite to Haskell's defaulting direction: `mona_min_to_app_min` produces
//! `pure`/`apply` *from* `ret`/`bind`, which is what lets a single minimal
//! monad definition instantiate the entire superclass chain. `mk_monad`
//! performs that chain in one call: the monad bundle embeds an applicative
//! bundle which embeds a functor bundle, all sharing the constructor.

use alloc::vec::Vec;

use crate::kind::{App, Bundle, Elem, ElemFn, ElemFn2, ElemFn3};
use crate::signatures::{
    ApplicativeMin, ApplicativeOps, FunctorMin, FunctorOps, JoinMin, MonadMin, MonadOps,
};

// ---------------------------------------------------------------------------
// Superclass derivations on minimal bundles
// ---------------------------------------------------------------------------

/// Functor minimal bundle derived from an applicative minimal bundle:
/// `fmap f = apply (pure f)`.
#[derive(Clone)]
pub struct AppAsFunctor<M: ApplicativeMin> {
    min: M,
}

/// Derive a [`FunctorMin`] from an [`ApplicativeMin`].
pub fn app_min_to_fun_min<M: ApplicativeMin>(min: M) -> AppAsFunctor<M> {
    AppAsFunctor { min }
}

impl<M: ApplicativeMin> Bundle for AppAsFunctor<M> {
    type F = M::F;
}

impl<M: ApplicativeMin> FunctorMin for AppAsFunctor<M> {
    fn fmap<A: Elem, B: Elem>(
        &self,
        f: impl ElemFn<A, B>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B> {
        self.min.apply(self.min.pure(f), fa)
    }
}

/// Applicative minimal bundle derived from a monad minimal bundle:
/// `pure = ret` and `apply fs xs = fs >>= \f -> xs >>= \x -> ret (f x)`.
///
/// The nesting fixes the effect order: the function side runs first.
#[derive(Clone)]
pub struct MonadAsApplicative<M: MonadMin> {
    min: M,
}

/// Derive an [`ApplicativeMin`] from a [`MonadMin`].
pub fn mona_min_to_app_min<M: MonadMin>(min: M) -> MonadAsApplicative<M> {
    MonadAsApplicative { min }
}

impl<M: MonadMin> Bundle for MonadAsApplicative<M> {
    type F = M::F;
}

impl<M: MonadMin> ApplicativeMin for MonadAsApplicative<M> {
    fn pure<A: Elem>(&self, a: A) -> App<Self::F, A> {
        self.min.ret(a)
    }

    fn apply<A: Elem, B: Elem, G: ElemFn<A, B>>(
        &self,
        ff: App<Self::F, G>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B> {
        let min = self.min.clone();
        self.min.bind(ff, move |f: G| {
            let inner = min.clone();
            min.bind(fa.clone(), move |a: A| inner.ret(f(a)))
        })
    }
}

// ---------------------------------------------------------------------------
// Bind-form <-> join-form minimal monads
// ---------------------------------------------------------------------------

/// Join-form minimal monad derived from a bind-form one.
#[derive(Clone)]
pub struct MonadAsJoin<M: MonadMin> {
    min: M,
}

/// Convert a bind-form minimal monad into the equivalent join form.
pub fn monad_min_to_join_min<M: MonadMin>(min: M) -> MonadAsJoin<M> {
    MonadAsJoin { min }
}

impl<M: MonadMin> Bundle for MonadAsJoin<M> {
    type F = M::F;
}

impl<M: MonadMin> JoinMin for MonadAsJoin<M> {
    fn ret<A: Elem>(&self, a: A) -> App<Self::F, A> {
        self.min.ret(a)
    }

    fn fmap<A: Elem, B: Elem>(
        &self,
        f: impl ElemFn<A, B>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B> {
        let min = self.min.clone();
        self.min.bind(fa, move |a: A| min.ret(f(a)))
    }

    fn join<A: Elem>(&self, nested: App<Self::F, App<Self::F, A>>) -> App<Self::F, A> {
        self.min.bind(nested, |inner: App<Self::F, A>| inner)
    }
}

/// Bind-form minimal monad derived from a join-form one:
/// `bind m k = join (fmap k m)`.
#[derive(Clone)]
pub struct JoinAsMonad<J: JoinMin> {
    min: J,
}

/// Convert a join-form minimal monad into the equivalent bind form.
pub fn join_min_to_monad_min<J: JoinMin>(min: J) -> JoinAsMonad<J> {
    JoinAsMonad { min }
}

impl<J: JoinMin> Bundle for JoinAsMonad<J> {
    type F = J::F;
}

impl<J: JoinMin> MonadMin for JoinAsMonad<J> {
    fn ret<A: Elem>(&self, a: A) -> App<Self::F, A> {
        self.min.ret(a)
    }

    fn bind<A: Elem, B: Elem>(
        &self,
        m: App<Self::F, A>,
        k: impl ElemFn<A, App<Self::F, B>>,
    ) -> App<Self::F, B> {
        self.min.join(self.min.fmap(k, m))
    }
}

// ---------------------------------------------------------------------------
// Full bundles
// ---------------------------------------------------------------------------

/// A full functor bundle elaborated from a [`FunctorMin`].
#[derive(Clone)]
pub struct Functor<M: FunctorMin> {
    min: M,
}

/// Elaborate a minimal functor into the full bundle.
pub fn mk_functor<M: FunctorMin>(min: M) -> Functor<M> {
    Functor { min }
}

impl<M: FunctorMin> Functor<M> {
    pub fn min(&self) -> &M {
        &self.min
    }
}

impl<M: FunctorMin> Bundle for Functor<M> {
    type F = M::F;
}

impl<M: FunctorMin> FunctorOps for Functor<M> {
    fn fmap<A: Elem, B: Elem>(
        &self,
        f: impl ElemFn<A, B>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B> {
        self.min.fmap(f, fa)
    }

    fn replace_left<A: Elem, B: Elem>(&self, b: B, fa: App<Self::F, A>) -> App<Self::F, B> {
        self.min.fmap(move |_: A| b.clone(), fa)
    }

    fn replace_right<A: Elem, B: Elem>(&self, fa: App<Self::F, A>, b: B) -> App<Self::F, B> {
        self.min.fmap(move |_: A| b.clone(), fa)
    }

    fn void<A: Elem>(&self, fa: App<Self::F, A>) -> App<Self::F, ()> {
        self.min.fmap(|_: A| (), fa)
    }
}

/// A full applicative bundle elaborated from an [`ApplicativeMin`].
///
/// Embeds the functor bundle obtained through `app_min_to_fun_min`.
#[derive(Clone)]
pub struct Applicative<M: ApplicativeMin> {
    functor: Functor<AppAsFunctor<M>>,
    min: M,
}

/// Elaborate a minimal applicative into the full bundle, instantiating the
/// functor superclass along the way.
pub fn mk_applicative<M: ApplicativeMin>(min: M) -> Applicative<M> {
    Applicative { functor: mk_functor(app_min_to_fun_min(min.clone())), min }
}

impl<M: ApplicativeMin> Applicative<M> {
    /// The embedded functor bundle (same constructor).
    pub fn functor(&self) -> &Functor<AppAsFunctor<M>> {
        &self.functor
    }

    pub fn min(&self) -> &M {
        &self.min
    }
}

impl<M: ApplicativeMin> Bundle for Applicative<M> {
    type F = M::F;
}

impl<M: ApplicativeMin> FunctorOps for Applicative<M> {
    fn fmap<A: Elem, B: Elem>(
        &self,
        f: impl ElemFn<A, B>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B> {
        self.functor.fmap(f, fa)
    }

    fn replace_left<A: Elem, B: Elem>(&self, b: B, fa: App<Self::F, A>) -> App<Self::F, B> {
        self.functor.replace_left(b, fa)
    }

    fn replace_right<A: Elem, B: Elem>(&self, fa: App<Self::F, A>, b: B) -> App<Self::F, B> {
        self.functor.replace_right(fa, b)
    }

    fn void<A: Elem>(&self, fa: App<Self::F, A>) -> App<Self::F, ()> {
        self.functor.void(fa)
    }
}

impl<M: ApplicativeMin> ApplicativeOps for Applicative<M> {
    fn pure<A: Elem>(&self, a: A) -> App<Self::F, A> {
        self.min.pure(a)
    }

    fn apply<A: Elem, B: Elem, G: ElemFn<A, B>>(
        &self,
        ff: App<Self::F, G>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B> {
        self.min.apply(ff, fa)
    }

    fn lift_a2<A: Elem, B: Elem, C: Elem>(
        &self,
        f: impl ElemFn2<A, B, C>,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
    ) -> App<Self::F, C> {
        let curried = move |a: A| {
            let f = f.clone();
            move |b: B| f(a.clone(), b)
        };
        self.apply(self.fmap(curried, fa), fb)
    }

    fn lift_a3<A: Elem, B: Elem, C: Elem, D: Elem>(
        &self,
        f: impl ElemFn3<A, B, C, D>,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
        fc: App<Self::F, C>,
    ) -> App<Self::F, D> {
        let curried = move |a: A| {
            let f = f.clone();
            move |b: B| {
                let f = f.clone();
                let a = a.clone();
                move |c: C| f(a.clone(), b.clone(), c)
            }
        };
        self.apply(self.apply(self.fmap(curried, fa), fb), fc)
    }

    fn seq_right<A: Elem, B: Elem>(
        &self,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
    ) -> App<Self::F, B> {
        self.lift_a2(|_: A, b: B| b, fa, fb)
    }

    fn seq_left<A: Elem, B: Elem>(
        &self,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
    ) -> App<Self::F, A> {
        self.lift_a2(|a: A, _: B| a, fa, fb)
    }
}

/// A full monad bundle elaborated from a [`MonadMin`].
///
/// Embeds the applicative bundle obtained through `mona_min_to_app_min`,
/// which in turn embeds a functor bundle, so one `mk_monad` call instantiates
/// all three classes for the constructor.
#[derive(Clone)]
pub struct Monad<M: MonadMin> {
    applicative: Applicative<MonadAsApplicative<M>>,
    min: M,
}

/// Elaborate a minimal monad into the full bundle.
pub fn mk_monad<M: MonadMin>(min: M) -> Monad<M> {
    Monad { applicative: mk_applicative(mona_min_to_app_min(min.clone())), min }
}

impl<M: MonadMin> Monad<M> {
    /// The embedded applicative bundle (same constructor).
    pub fn applicative(&self) -> &Applicative<MonadAsApplicative<M>> {
        &self.applicative
    }

    pub fn min(&self) -> &M {
        &self.min
    }
}

impl<M: MonadMin> Bundle for Monad<M> {
    type F = M::F;
}

impl<M: MonadMin> FunctorOps for Monad<M> {
    fn fmap<A: Elem, B: Elem>(
        &self,
        f: impl ElemFn<A, B>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B> {
        self.applicative.fmap(f, fa)
    }

    fn replace_left<A: Elem, B: Elem>(&self, b: B, fa: App<Self::F, A>) -> App<Self::F, B> {
        self.applicative.replace_left(b, fa)
    }

    fn replace_right<A: Elem, B: Elem>(&self, fa: App<Self::F, A>, b: B) -> App<Self::F, B> {
        self.applicative.replace_right(fa, b)
    }

    fn void<A: Elem>(&self, fa: App<Self::F, A>) -> App<Self::F, ()> {
        self.applicative.void(fa)
    }
}

impl<M: MonadMin> ApplicativeOps for Monad<M> {
    fn pure<A: Elem>(&self, a: A) -> App<Self::F, A> {
        self.applicative.pure(a)
    }

    fn apply<A: Elem, B: Elem, G: ElemFn<A, B>>(
        &self,
        ff: App<Self::F, G>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B> {
        self.applicative.apply(ff, fa)
    }

    fn lift_a2<A: Elem, B: Elem, C: Elem>(
        &self,
        f: impl ElemFn2<A, B, C>,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
    ) -> App<Self::F, C> {
        self.applicative.lift_a2(f, fa, fb)
    }

    fn lift_a3<A: Elem, B: Elem, C: Elem, D: Elem>(
        &self,
        f: impl ElemFn3<A, B, C, D>,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
        fc: App<Self::F, C>,
    ) -> App<Self::F, D> {
        self.applicative.lift_a3(f, fa, fb, fc)
    }

    fn seq_right<A: Elem, B: Elem>(
        &self,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
    ) -> App<Self::F, B> {
        self.applicative.seq_right(fa, fb)
    }

    fn seq_left<A: Elem, B: Elem>(
        &self,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
    ) -> App<Self::F, A> {
        self.applicative.seq_left(fa, fb)
    }
}

impl<M: MonadMin> MonadOps for Monad<M> {
    fn ret<A: Elem>(&self, a: A) -> App<Self::F, A> {
        self.min.ret(a)
    }

    fn bind<A: Elem, B: Elem>(
        &self,
        m: App<Self::F, A>,
        k: impl ElemFn<A, App<Self::F, B>>,
    ) -> App<Self::F, B> {
        self.min.bind(m, k)
    }

    fn then<A: Elem, B: Elem>(&self, m: App<Self::F, A>, k: App<Self::F, B>)
        -> App<Self::F, B> {
        self.min.bind(m, move |_: A| k.clone())
    }

    fn join<A: Elem>(&self, nested: App<Self::F, App<Self::F, A>>) -> App<Self::F, A> {
        self.min.bind(nested, |inner: App<Self::F, A>| inner)
    }

    fn kleisli<A: Elem, B: Elem, C: Elem>(
        &self,
        f: impl ElemFn<A, App<Self::F, B>>,
        g: impl ElemFn<B, App<Self::F, C>>,
    ) -> impl ElemFn<A, App<Self::F, C>> {
        let min = self.min.clone();
        move |a: A| min.bind(f(a), g.clone())
    }

    fn kleisli_rev<A: Elem, B: Elem, C: Elem>(
        &self,
        g: impl ElemFn<B, App<Self::F, C>>,
        f: impl ElemFn<A, App<Self::F, B>>,
    ) -> impl ElemFn<A, App<Self::F, C>> {
        self.kleisli(f, g)
    }

    fn lift_m<A: Elem, B: Elem>(
        &self,
        f: impl ElemFn<A, B>,
        m: App<Self::F, A>,
    ) -> App<Self::F, B> {
        let min = self.min.clone();
        self.min.bind(m, move |a: A| min.ret(f(a)))
    }

    fn lift_m2<A: Elem, B: Elem, C: Elem>(
        &self,
        f: impl ElemFn2<A, B, C>,
        ma: App<Self::F, A>,
        mb: App<Self::F, B>,
    ) -> App<Self::F, C> {
        let min = self.min.clone();
        self.min.bind(ma, move |a: A| {
            let inner = min.clone();
            let f = f.clone();
            let a2 = a.clone();
            min.bind(mb.clone(), move |b: B| inner.ret(f(a2.clone(), b)))
        })
    }

    fn ap<A: Elem, B: Elem, G: ElemFn<A, B>>(
        &self,
        mf: App<Self::F, G>,
        ma: App<Self::F, A>,
    ) -> App<Self::F, B> {
        let min = self.min.clone();
        self.min.bind(mf, move |f: G| {
            let inner = min.clone();
            min.bind(ma.clone(), move |a: A| inner.ret(f(a)))
        })
    }

    fn forever<A: Elem, B: Elem>(&self, m: App<Self::F, A>) -> App<Self::F, B> {
        // The recursive call sits inside the continuation, so monads whose
        // bind can stop calling it terminate.
        let this = self.clone();
        self.min.bind(m.clone(), move |_: A| this.forever(m.clone()))
    }

    fn map_m<A: Elem, B: Elem>(
        &self,
        f: impl ElemFn<A, App<Self::F, B>>,
        items: Vec<A>,
    ) -> App<Self::F, Vec<B>> {
        let computations: Vec<App<Self::F, B>> = items.into_iter().map(f).collect();
        self.sequence(computations)
    }

    fn sequence<A: Elem>(&self, items: Vec<App<Self::F, A>>) -> App<Self::F, Vec<A>> {
        // Iterative left-to-right accumulation; no recursion on list length.
        let mut acc: App<Self::F, Vec<A>> = self.min.ret(Vec::new());
        for m in items {
            acc = self.lift_m2(
                |mut xs: Vec<A>, x: A| {
                    xs.push(x);
                    xs
                },
                acc,
                m,
            );
        }
        acc
    }

    fn filter_m<A: Elem>(
        &self,
        pred: impl ElemFn<A, App<Self::F, bool>>,
        items: Vec<A>,
    ) -> App<Self::F, Vec<A>> {
        let mut acc: App<Self::F, Vec<A>> = self.min.ret(Vec::new());
        for a in items {
            let keep = pred(a.clone());
            acc = self.lift_m2(
                move |mut xs: Vec<A>, keep: bool| {
                    if keep {
                        xs.push(a.clone());
                    }
                    xs
                },
                acc,
                keep,
            );
        }
        acc
    }

    fn replicate_m<A: Elem>(&self, count: usize, m: App<Self::F, A>) -> App<Self::F, Vec<A>> {
        let copies: Vec<App<Self::F, A>> = (0..count).map(|_| m.clone()).collect();
        self.sequence(copies)
    }

    fn when(&self, cond: bool, m: App<Self::F, ()>) -> App<Self::F, ()> {
        if cond {
            m
        } else {
            self.min.ret(())
        }
    }

    fn unless(&self, cond: bool, m: App<Self::F, ()>) -> App<Self::F, ()> {
        self.when(!cond, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{
        identity_monad_min, list_join_min, list_monad_min, option_join_min, option_monad_min,
        identity_join_min,
    };
    use crate::signatures::{ApplicativeOps, FunctorOps, MonadOps, MONAD_MEMBERS, MONAD_MIN_MEMBERS};
    use alloc::rc::Rc;
    use alloc::vec;
    use alloc::vec::Vec;

    fn list_functor() -> Functor<AppAsFunctor<MonadAsApplicative<crate::instances::ListMonadMin>>> {
        mk_functor(app_min_to_fun_min(mona_min_to_app_min(list_monad_min())))
    }

    #[test]
    fn functor_fmap_maps() {
        assert_eq!(list_functor().fmap(|x: i64| x + 1, vec![1, 2]), vec![2, 3]);
    }

    #[test]
    fn functor_fmap_identity_instance() {
        let f = mk_functor(app_min_to_fun_min(mona_min_to_app_min(option_monad_min())));
        assert_eq!(f.fmap(|x: i64| x, Some(9)), Some(9));
    }

    #[test]
    fn functor_replace_left_is_const_map() {
        assert_eq!(list_functor().replace_left(0, vec![7, 8, 9]), vec![0, 0, 0]);
    }

    #[test]
    fn functor_void_and_replace_right() {
        let f = list_functor();
        assert_eq!(f.void(vec![7, 8]), vec![(), ()]);
        assert_eq!(f.replace_right(vec![7, 8], 1), vec![1, 1]);
    }

    #[test]
    fn applicative_lift_a2_option() {
        let a = mk_applicative(mona_min_to_app_min(option_monad_min()));
        assert_eq!(a.lift_a2(|x: i64, y: i64| x + y, Some(1), Some(2)), Some(3));
    }

    #[test]
    fn applicative_seq_right_cartesian() {
        let a = mk_applicative(mona_min_to_app_min(list_monad_min()));
        // cartesian product then keep the right element
        assert_eq!(a.seq_right(vec![1, 2], vec![10]), vec![10, 10]);
    }

    #[test]
    fn applicative_apply_absorbs_none() {
        let a = mk_applicative(mona_min_to_app_min(option_monad_min()));
        let none_fn: Option<fn(i64) -> i64> = None;
        assert_eq!(a.apply(none_fn, Some(1)), None);
    }

    #[test]
    fn applicative_lift_a3() {
        let a = mk_applicative(mona_min_to_app_min(option_monad_min()));
        let out = a.lift_a3(|x: i64, y: i64, z: i64| x * 100 + y * 10 + z, Some(1), Some(2), Some(3));
        assert_eq!(out, Some(123));
    }

    #[test]
    fn monad_ret_matches_list_return() {
        assert_eq!(mk_monad(list_monad_min()).ret(3), vec![3]);
    }

    #[test]
    fn monad_bind_concat_map() {
        let m = mk_monad(list_monad_min());
        assert_eq!(m.bind(vec![1, 2], |x: i64| vec![x, 10 * x]), vec![1, 10, 2, 20]);
    }

    #[test]
    fn monad_lift_m_matches_bind_ret() {
        let m = mk_monad(list_monad_min());
        assert_eq!(m.lift_m(|x: i64| x + 1, vec![1, 2]), vec![2, 3]);
    }

    #[test]
    fn monad_join_flattens() {
        let m = mk_monad(option_monad_min());
        assert_eq!(m.join(Some(Some(5))), Some(5));
        assert_eq!(m.join(Some(None::<i64>)), None);
    }

    // Brute-force cartesian sequencing, independent of the bundle code path.
    fn brute_sequence(items: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for item in items {
            let mut next = Vec::new();
            for prefix in &out {
                for x in item {
                    let mut row = prefix.clone();
                    row.push(*x);
                    next.push(row);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn monad_sequence_is_cartesian() {
        let m = mk_monad(list_monad_min());
        let input = vec![vec![1, 2], vec![3]];
        assert_eq!(m.sequence(input.clone()), brute_sequence(&input));
        assert_eq!(m.sequence(input), vec![vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn monad_then_discards_left_result() {
        let m = mk_monad(option_monad_min());
        assert_eq!(m.then(Some(1), Some("x")), Some("x"));
        assert_eq!(m.then(None::<i64>, Some("x")), None);
    }

    #[test]
    fn monad_kleisli_composes() {
        let m = mk_monad(option_monad_min());
        let f = |x: i64| if x > 0 { Some(x * 2) } else { None };
        let g = |x: i64| Some(x + 1);
        let fg = m.kleisli(f, g);
        assert_eq!(fg(3), Some(7));
        assert_eq!(fg(-3), None);
        let gf = m.kleisli_rev(g, f);
        assert_eq!(gf(3), Some(7));
    }

    #[test]
    fn monad_lift_m2_and_ap() {
        let m = mk_monad(list_monad_min());
        assert_eq!(m.lift_m2(|x: i64, y: i64| x + y, vec![1, 2], vec![10]), vec![11, 12]);
        let fs: Vec<Rc<dyn Fn(i64) -> i64>> = vec![Rc::new(|x| x + 1)];
        let fs = fs.into_iter().map(|f| move |x| f(x)).collect::<Vec<_>>();
        assert_eq!(m.ap(fs, vec![5, 6]), vec![6, 7]);
    }

    #[test]
    fn monad_map_m_filter_m_replicate_m() {
        let m = mk_monad(identity_monad_min());
        assert_eq!(m.map_m(|x: i64| x + 1, vec![1, 2, 3]), vec![2, 3, 4]);
        let mo = mk_monad(option_monad_min());
        assert_eq!(
            mo.filter_m(|x: i64| Some(x % 2 == 0), vec![1, 2, 3, 4]),
            Some(vec![2, 4])
        );
        assert_eq!(mo.replicate_m(0, Some(1)), Some(Vec::new()));
        assert_eq!(mo.replicate_m(3, Some(1)), Some(vec![1, 1, 1]));
        assert_eq!(mo.replicate_m(2, None::<i64>), None);
    }

    #[test]
    fn monad_when_unless() {
        let m = mk_monad(option_monad_min());
        assert_eq!(m.when(false, None), Some(()));
        assert_eq!(m.when(true, None), None);
        assert_eq!(m.unless(true, None), Some(()));
    }

    #[test]
    fn map_m_in_identity_is_plain_map() {
        let m = mk_monad(identity_monad_min());
        let xs: Vec<i64> = vec![3, 1, 4, 1, 5];
        let direct: Vec<i64> = xs.iter().map(|x| x * 2 - 1).collect();
        assert_eq!(m.map_m(|x: i64| x * 2 - 1, xs.clone()), direct);
        assert_eq!(m.sequence(xs.clone()), xs);
    }

    #[test]
    fn derived_fun_min_examples() {
        let f = app_min_to_fun_min(mona_min_to_app_min(list_monad_min()));
        use crate::signatures::FunctorMin;
        assert_eq!(f.fmap(|x: i64| x + 1, vec![1, 2]), vec![2, 3]);
        let fo = app_min_to_fun_min(mona_min_to_app_min(option_monad_min()));
        assert_eq!(fo.fmap(|x: i64| x, None::<i64>), None);
        assert_eq!(fo.fmap(|x: i64| x * 2, Some(4)), Some(8));
    }

    #[test]
    fn derived_app_min_examples() {
        use crate::signatures::ApplicativeMin;
        let a = mona_min_to_app_min(list_monad_min());
        let fs: Vec<Rc<dyn Fn(i64) -> i64>> = vec![Rc::new(|x| x + 1), Rc::new(|x| x * 2)];
        let fs = fs.into_iter().map(|f| move |x| f(x)).collect::<Vec<_>>();
        // Function side sequenced first, per the nested-bind definition.
        assert_eq!(a.apply(fs, vec![10, 20]), vec![11, 21, 20, 40]);

        let ao = mona_min_to_app_min(option_monad_min());
        assert_eq!(ao.pure(7), Some(7));
        let none_fn: Option<fn(i64) -> i64> = None;
        assert_eq!(ao.apply(Some(|x: i64| x + 1), None::<i64>), None);
        assert_eq!(ao.apply(none_fn, Some(1)), None);
    }

    #[test]
    fn join_form_to_bind_form() {
        let m = join_min_to_monad_min(list_join_min());
        assert_eq!(m.bind(vec![1, 2], |x: i64| vec![x, x]), vec![1, 1, 2, 2]);
        let mo = join_min_to_monad_min(option_join_min());
        assert_eq!(mo.bind(None::<i64>, |x: i64| Some(x)), None);
        let mi = join_min_to_monad_min(identity_join_min());
        assert_eq!(mi.bind(5, |x: i64| x + 1), 6);
    }

    #[test]
    fn bind_form_to_join_form() {
        use crate::signatures::JoinMin;
        let j = monad_min_to_join_min(list_monad_min());
        assert_eq!(j.join(vec![vec![1], vec![2, 3]]), vec![1, 2, 3]);
        let jo = monad_min_to_join_min(option_monad_min());
        assert_eq!(jo.fmap(|x: i64| x + 1, Some(1)), Some(2));
    }

    #[test]
    fn join_bind_round_trip_preserves_bind() {
        let original = list_monad_min();
        let round = join_min_to_monad_min(monad_min_to_join_min(original));
        let samples: [Vec<i64>; 4] = [vec![], vec![1], vec![1, 2], vec![5, -3, 2]];
        for m in &samples {
            let k = |x: i64| vec![x, x + 1];
            assert_eq!(round.bind(m.clone(), k), original.bind(m.clone(), k));
            assert_eq!(round.ret(9), original.ret(9));
        }
    }

    #[test]
    fn monad_member_roster_is_large_enough() {
        let derived: Vec<&str> = MONAD_MEMBERS
            .iter()
            .filter(|m| !MONAD_MIN_MEMBERS.contains(m))
            .copied()
            .collect();
        assert!(derived.len() >= 20, "only {} derived members", derived.len());
    }

    #[test]
    fn embedded_bundles_are_reachable() {
        let m = mk_monad(list_monad_min());
        // The embedded applicative and functor operate on the same constructor.
        assert_eq!(m.applicative().pure(1), vec![1]);
        assert_eq!(m.applicative().functor().fmap(|x: i64| x + 1, vec![1]), vec![2]);
    }
}
