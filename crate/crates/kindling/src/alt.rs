//! Choice-capable classes: `Alter` (applicative with a failure monoid) and
//! `Monad0p` (monad with zero and plus), including both derivation paths
//! down to the applicative level.
//!
//! A `Monad0pMin` reaches `ApplicativeMin` two ways: through
//! [`m0p_min_to_alter_min`] and through [`m0p_min_to_monad_min`] followed by
//! `mona_min_to_app_min`. The two routes are extensionally equal — the law
//! suite asserts it — so the inheritance diamond has no semantic ambiguity.

use alloc::vec::Vec;

use crate::elaborate::{
    mk_applicative, mona_min_to_app_min, Applicative, Monad, MonadAsApplicative,
    mk_monad,
};
use crate::kind::{App, Bundle, Elem, ElemFn, ElemFn2, ElemFn3};
use crate::signatures::{ApplicativeMin, ApplicativeOps, FunctorOps, MonadMin, MonadOps};

/// Minimal alternative definition: an applicative plus `empty` and `alt`.
pub trait AlterMin: ApplicativeMin {
    fn empty<A: Elem>(&self) -> App<Self::F, A>;

    fn alt<A: Elem>(&self, x: App<Self::F, A>, y: App<Self::F, A>) -> App<Self::F, A>;
}

/// Minimal monad-zero-plus definition: a monad plus `zero` and `plus`.
pub trait Monad0pMin: MonadMin {
    fn zero<A: Elem>(&self) -> App<Self::F, A>;

    fn plus<A: Elem>(&self, x: App<Self::F, A>, y: App<Self::F, A>) -> App<Self::F, A>;
}

/// Full alternative signature.
pub trait AlterOps: ApplicativeOps {
    fn empty<A: Elem>(&self) -> App<Self::F, A>;

    fn alt<A: Elem>(&self, x: App<Self::F, A>, y: App<Self::F, A>) -> App<Self::F, A>;

    /// Wrap success in `Some`, recover failure as `pure(None)`.
    fn optional<A: Elem>(&self, m: App<Self::F, A>) -> App<Self::F, Option<A>>;

    /// Fold `alt` over a list, right-associated, with `empty` at the end.
    fn msum<A: Elem>(&self, items: Vec<App<Self::F, A>>) -> App<Self::F, A>;

    /// `pure(())` when the condition holds, `empty` otherwise.
    fn guard(&self, cond: bool) -> App<Self::F, ()>;
}

/// Full monad-zero-plus signature.
pub trait Monad0pOps: MonadOps + AlterOps {
    fn zero<A: Elem>(&self) -> App<Self::F, A>;

    fn plus<A: Elem>(&self, x: App<Self::F, A>, y: App<Self::F, A>) -> App<Self::F, A>;

    /// Keep elements satisfying the predicate, fail the rest into `zero`.
    fn mfilter<A: Elem>(&self, pred: impl ElemFn<A, bool>, m: App<Self::F, A>)
        -> App<Self::F, A>;
}

// ---------------------------------------------------------------------------
// Derivations out of Monad0pMin
// ---------------------------------------------------------------------------

/// Alternative minimal bundle derived from a monad-zero-plus minimal bundle:
/// the applicative part comes through `mona_min_to_app_min`, `empty = zero`,
/// `alt = plus`.
#[derive(Clone)]
pub struct M0pAsAlterMin<M: Monad0pMin> {
    app: MonadAsApplicative<M>,
    min: M,
}

pub fn m0p_min_to_alter_min<M: Monad0pMin>(min: M) -> M0pAsAlterMin<M> {
    M0pAsAlterMin { app: mona_min_to_app_min(min.clone()), min }
}

impl<M: Monad0pMin> Bundle for M0pAsAlterMin<M> {
    type F = M::F;
}

impl<M: Monad0pMin> ApplicativeMin for M0pAsAlterMin<M> {
    fn pure<A: Elem>(&self, a: A) -> App<Self::F, A> {
        self.app.pure(a)
    }

    fn apply<A: Elem, B: Elem, G: ElemFn<A, B>>(
        &self,
        ff: App<Self::F, G>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B> {
        self.app.apply(ff, fa)
    }
}

impl<M: Monad0pMin> AlterMin for M0pAsAlterMin<M> {
    fn empty<A: Elem>(&self) -> App<Self::F, A> {
        self.min.zero()
    }

    fn alt<A: Elem>(&self, x: App<Self::F, A>, y: App<Self::F, A>) -> App<Self::F, A> {
        self.min.plus(x, y)
    }
}

/// Monad minimal bundle that forgets `zero` and `plus`.
#[derive(Clone)]
pub struct M0pAsMonadMin<M: Monad0pMin> {
    min: M,
}

pub fn m0p_min_to_monad_min<M: Monad0pMin>(min: M) -> M0pAsMonadMin<M> {
    M0pAsMonadMin { min }
}

impl<M: Monad0pMin> Bundle for M0pAsMonadMin<M> {
    type F = M::F;
}

impl<M: Monad0pMin> MonadMin for M0pAsMonadMin<M> {
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
}

// ---------------------------------------------------------------------------
// Full bundles
// ---------------------------------------------------------------------------

/// A full alternative bundle elaborated from an [`AlterMin`].
#[derive(Clone)]
pub struct Alter<M: AlterMin> {
    applicative: Applicative<M>,
    min: M,
}

pub fn mk_alter<M: AlterMin>(min: M) -> Alter<M> {
    Alter { applicative: mk_applicative(min.clone()), min }
}

impl<M: AlterMin> Alter<M> {
    pub fn applicative(&self) -> &Applicative<M> {
        &self.applicative
    }

    pub fn min(&self) -> &M {
        &self.min
    }
}

impl<M: AlterMin> Bundle for Alter<M> {
    type F = M::F;
}

impl<M: AlterMin> FunctorOps for Alter<M> {
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

impl<M: AlterMin> ApplicativeOps for Alter<M> {
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

impl<M: AlterMin> AlterOps for Alter<M> {
    fn empty<A: Elem>(&self) -> App<Self::F, A> {
        self.min.empty()
    }

    fn alt<A: Elem>(&self, x: App<Self::F, A>, y: App<Self::F, A>) -> App<Self::F, A> {
        self.min.alt(x, y)
    }

    fn optional<A: Elem>(&self, m: App<Self::F, A>) -> App<Self::F, Option<A>> {
        let present = self.fmap(|a: A| Some(a), m);
        self.min.alt(present, self.pure(None))
    }

    fn msum<A: Elem>(&self, items: Vec<App<Self::F, A>>) -> App<Self::F, A> {
        items
            .into_iter()
            .rev()
            .fold(self.min.empty(), |acc, x| self.min.alt(x, acc))
    }

    fn guard(&self, cond: bool) -> App<Self::F, ()> {
        if cond {
            self.pure(())
        } else {
            self.min.empty()
        }
    }
}

/// A full monad-zero-plus bundle elaborated from a [`Monad0pMin`].
///
/// Contains the elaborated monad of the embedded minimal monad and the
/// elaborated alternative of the derived alternative minimal bundle.
#[derive(Clone)]
pub struct Monad0p<M: Monad0pMin> {
    monad: Monad<M>,
    alter: Alter<M0pAsAlterMin<M>>,
    min: M,
}

pub fn mk_monad0p<M: Monad0pMin>(min: M) -> Monad0p<M> {
    Monad0p {
        monad: mk_monad(min.clone()),
        alter: mk_alter(m0p_min_to_alter_min(min.clone())),
        min,
    }
}

impl<M: Monad0pMin> Monad0p<M> {
    pub fn monad(&self) -> &Monad<M> {
        &self.monad
    }

    pub fn alter(&self) -> &Alter<M0pAsAlterMin<M>> {
        &self.alter
    }

    pub fn min(&self) -> &M {
        &self.min
    }
}

impl<M: Monad0pMin> Bundle for Monad0p<M> {
    type F = M::F;
}

impl<M: Monad0pMin> FunctorOps for Monad0p<M> {
    fn fmap<A: Elem, B: Elem>(
        &self,
        f: impl ElemFn<A, B>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B> {
        self.monad.fmap(f, fa)
    }

    fn replace_left<A: Elem, B: Elem>(&self, b: B, fa: App<Self::F, A>) -> App<Self::F, B> {
        self.monad.replace_left(b, fa)
    }

    fn replace_right<A: Elem, B: Elem>(&self, fa: App<Self::F, A>, b: B) -> App<Self::F, B> {
        self.monad.replace_right(fa, b)
    }

    fn void<A: Elem>(&self, fa: App<Self::F, A>) -> App<Self::F, ()> {
        self.monad.void(fa)
    }
}

impl<M: Monad0pMin> ApplicativeOps for Monad0p<M> {
    fn pure<A: Elem>(&self, a: A) -> App<Self::F, A> {
        self.monad.pure(a)
    }

    fn apply<A: Elem, B: Elem, G: ElemFn<A, B>>(
        &self,
        ff: App<Self::F, G>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B> {
        self.monad.apply(ff, fa)
    }

    fn lift_a2<A: Elem, B: Elem, C: Elem>(
        &self,
        f: impl ElemFn2<A, B, C>,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
    ) -> App<Self::F, C> {
        self.monad.lift_a2(f, fa, fb)
    }

    fn lift_a3<A: Elem, B: Elem, C: Elem, D: Elem>(
        &self,
        f: impl ElemFn3<A, B, C, D>,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
        fc: App<Self::F, C>,
    ) -> App<Self::F, D> {
        self.monad.lift_a3(f, fa, fb, fc)
    }

    fn seq_right<A: Elem, B: Elem>(
        &self,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
    ) -> App<Self::F, B> {
        self.monad.seq_right(fa, fb)
    }

    fn seq_left<A: Elem, B: Elem>(
        &self,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
    ) -> App<Self::F, A> {
        self.monad.seq_left(fa, fb)
    }
}

impl<M: Monad0pMin> MonadOps for Monad0p<M> {
    fn ret<A: Elem>(&self, a: A) -> App<Self::F, A> {
        self.monad.ret(a)
    }

    fn bind<A: Elem, B: Elem>(
        &self,
        m: App<Self::F, A>,
        k: impl ElemFn<A, App<Self::F, B>>,
    ) -> App<Self::F, B> {
        self.monad.bind(m, k)
    }

    fn then<A: Elem, B: Elem>(&self, m: App<Self::F, A>, k: App<Self::F, B>)
        -> App<Self::F, B> {
        self.monad.then(m, k)
    }

    fn join<A: Elem>(&self, nested: App<Self::F, App<Self::F, A>>) -> App<Self::F, A> {
        self.monad.join(nested)
    }

    fn kleisli<A: Elem, B: Elem, C: Elem>(
        &self,
        f: impl ElemFn<A, App<Self::F, B>>,
        g: impl ElemFn<B, App<Self::F, C>>,
    ) -> impl ElemFn<A, App<Self::F, C>> {
        self.monad.kleisli(f, g)
    }

    fn kleisli_rev<A: Elem, B: Elem, C: Elem>(
        &self,
        g: impl ElemFn<B, App<Self::F, C>>,
        f: impl ElemFn<A, App<Self::F, B>>,
    ) -> impl ElemFn<A, App<Self::F, C>> {
        self.monad.kleisli_rev(g, f)
    }

    fn lift_m<A: Elem, B: Elem>(
        &self,
        f: impl ElemFn<A, B>,
        m: App<Self::F, A>,
    ) -> App<Self::F, B> {
        self.monad.lift_m(f, m)
    }

    fn lift_m2<A: Elem, B: Elem, C: Elem>(
        &self,
        f: impl ElemFn2<A, B, C>,
        ma: App<Self::F, A>,
        mb: App<Self::F, B>,
    ) -> App<Self::F, C> {
        self.monad.lift_m2(f, ma, mb)
    }

    fn ap<A: Elem, B: Elem, G: ElemFn<A, B>>(
        &self,
        mf: App<Self::F, G>,
        ma: App<Self::F, A>,
    ) -> App<Self::F, B> {
        self.monad.ap(mf, ma)
    }

    fn forever<A: Elem, B: Elem>(&self, m: App<Self::F, A>) -> App<Self::F, B> {
        self.monad.forever(m)
    }

    fn map_m<A: Elem, B: Elem>(
        &self,
        f: impl ElemFn<A, App<Self::F, B>>,
        items: Vec<A>,
    ) -> App<Self::F, Vec<B>> {
        self.monad.map_m(f, items)
    }

    fn sequence<A: Elem>(&self, items: Vec<App<Self::F, A>>) -> App<Self::F, Vec<A>> {
        self.monad.sequence(items)
    }

    fn filter_m<A: Elem>(
        &self,
        pred: impl ElemFn<A, App<Self::F, bool>>,
        items: Vec<A>,
    ) -> App<Self::F, Vec<A>> {
        self.monad.filter_m(pred, items)
    }

    fn replicate_m<A: Elem>(&self, count: usize, m: App<Self::F, A>) -> App<Self::F, Vec<A>> {
        self.monad.replicate_m(count, m)
    }

    fn when(&self, cond: bool, m: App<Self::F, ()>) -> App<Self::F, ()> {
        self.monad.when(cond, m)
    }

    fn unless(&self, cond: bool, m: App<Self::F, ()>) -> App<Self::F, ()> {
        self.monad.unless(cond, m)
    }
}

impl<M: Monad0pMin> AlterOps for Monad0p<M> {
    fn empty<A: Elem>(&self) -> App<Self::F, A> {
        self.alter.empty()
    }

    fn alt<A: Elem>(&self, x: App<Self::F, A>, y: App<Self::F, A>) -> App<Self::F, A> {
        self.alter.alt(x, y)
    }

    fn optional<A: Elem>(&self, m: App<Self::F, A>) -> App<Self::F, Option<A>> {
        self.alter.optional(m)
    }

    fn msum<A: Elem>(&self, items: Vec<App<Self::F, A>>) -> App<Self::F, A> {
        self.alter.msum(items)
    }

    fn guard(&self, cond: bool) -> App<Self::F, ()> {
        self.alter.guard(cond)
    }
}

impl<M: Monad0pMin> Monad0pOps for Monad0p<M> {
    fn zero<A: Elem>(&self) -> App<Self::F, A> {
        self.min.zero()
    }

    fn plus<A: Elem>(&self, x: App<Self::F, A>, y: App<Self::F, A>) -> App<Self::F, A> {
        self.min.plus(x, y)
    }

    fn mfilter<A: Elem>(
        &self,
        pred: impl ElemFn<A, bool>,
        m: App<Self::F, A>,
    ) -> App<Self::F, A> {
        let min = self.min.clone();
        self.min.bind(m, move |a: A| {
            if pred(a.clone()) {
                min.ret(a)
            } else {
                min.zero()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{list_monad0p_min, option_monad0p_min};
    use crate::signatures::MonadMin;
    use alloc::vec;
    use alloc::vec::Vec;

    #[test]
    fn msum_folds_choice() {
        let a = mk_alter(m0p_min_to_alter_min(list_monad0p_min()));
        assert_eq!(a.msum(vec![vec![1], vec![], vec![2, 3]]), vec![1, 2, 3]);
        assert_eq!(a.msum(Vec::<Vec<i64>>::new()), Vec::<i64>::new());
    }

    #[test]
    fn alt_takes_first_success() {
        let a = mk_alter(m0p_min_to_alter_min(option_monad0p_min()));
        assert_eq!(a.alt(None, Some(2)), Some(2));
        assert_eq!(a.alt(Some(1), Some(2)), Some(1));
    }

    #[test]
    fn guard_on_false_is_empty() {
        let a = mk_alter(m0p_min_to_alter_min(option_monad0p_min()));
        assert_eq!(a.guard(false), None);
        assert_eq!(a.guard(true), Some(()));
    }

    #[test]
    fn optional_recovers_failure() {
        let a = mk_alter(m0p_min_to_alter_min(option_monad0p_min()));
        assert_eq!(a.optional(Some(3)), Some(Some(3)));
        assert_eq!(a.optional(None::<i64>), Some(None));
    }

    #[test]
    fn mfilter_keeps_matching_elements() {
        let m = mk_monad0p(list_monad0p_min());
        assert_eq!(m.mfilter(|x: i64| x % 2 == 0, vec![1, 2, 3, 4]), vec![2, 4]);
        let mo = mk_monad0p(option_monad0p_min());
        assert_eq!(mo.mfilter(|x: i64| x > 0, None), None);
        assert_eq!(mo.mfilter(|x: i64| x > 0, Some(-1)), None);
    }

    #[test]
    fn monad0p_plus_appends_lists() {
        let m = mk_monad0p(list_monad0p_min());
        assert_eq!(m.plus(vec![1], vec![2]), vec![1, 2]);
        assert_eq!(m.zero::<i64>(), Vec::<i64>::new());
    }

    #[test]
    fn derived_alter_min_matches_zero_plus() {
        let a = m0p_min_to_alter_min(list_monad0p_min());
        assert_eq!(a.empty::<i64>(), Vec::<i64>::new());
        assert_eq!(a.alt(vec![1], vec![2]), vec![1, 2]);
        // Derived apply is the nested-bind cartesian one.
        let fs = vec![|x: i64| x + 1];
        assert_eq!(a.apply(fs, vec![5, 6]), vec![6, 7]);
    }

    #[test]
    fn forgetting_zero_plus_keeps_the_monad() {
        let m = m0p_min_to_monad_min(list_monad0p_min());
        assert_eq!(m.ret(1), vec![1]);
        let mo = m0p_min_to_monad_min(option_monad0p_min());
        assert_eq!(mo.bind(Some(1), |x: i64| Some(x + 1)), Some(2));
        assert_eq!(m.bind(Vec::<i64>::new(), |x: i64| vec![x]), Vec::<i64>::new());
    }

    #[test]
    fn left_zero_absorbs_bind() {
        let m = mk_monad0p(list_monad0p_min());
        let out = m.bind(m.zero::<i64>(), |x: i64| vec![x, x]);
        assert_eq!(out, m.zero::<i64>());
    }
}
